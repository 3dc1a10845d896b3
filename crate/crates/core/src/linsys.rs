//! Polynomial matrices, the Groebner normal form, fork ideals, and exact
//! linear system solving, with Hermite normal form and row reduction as
//! constant-matrix specializations.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::euclid::EuclideanScalar;
use crate::groebner::{reduced_strong_groebner, EngineOpts};
use crate::polyvec::{AdmissibleOrder, Context, MonoOrder, MonomialVector, PolyVector};

/// A rectangular matrix of scalar polynomials sharing one ring context
/// (single-component).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix<R: EuclideanScalar> {
    ctx: Arc<Context>,
    ncols: usize,
    rows: Vec<Vec<PolyVector<R>>>,
}

impl<R: EuclideanScalar> PolyMatrix<R> {
    pub fn new(ctx: Arc<Context>, ncols: usize, rows: Vec<Vec<PolyVector<R>>>) -> Self {
        assert_eq!(ctx.ncomps(), 1, "matrix entries are scalar polynomials");
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        PolyMatrix { ctx, ncols, rows }
    }

    pub fn ctx(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn entry(&self, i: usize, j: usize) -> &PolyVector<R> {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<PolyVector<R>>] {
        &self.rows
    }
}

/// Moves a scalar polynomial into component `comp` of a vector context.
fn scalar_to_component<R: EuclideanScalar>(
    p: &PolyVector<R>,
    vctx: &Arc<Context>,
    comp: usize,
) -> PolyVector<R> {
    PolyVector::from_terms(
        vctx.clone(),
        p.terms()
            .map(|(m, c)| (MonomialVector::new(m.exps.clone(), comp), c.clone())),
    )
}

/// Extracts component `comp` of a vector as a scalar polynomial.
fn component_to_scalar<R: EuclideanScalar>(
    f: &PolyVector<R>,
    sctx: &Arc<Context>,
    comp: usize,
) -> PolyVector<R> {
    PolyVector::from_terms(
        sctx.clone(),
        f.terms()
            .filter(|(m, _)| m.comp == comp)
            .map(|(m, c)| (MonomialVector::new(m.exps.clone(), 1), c.clone())),
    )
}

fn row_to_vector<R: EuclideanScalar>(
    row: &[PolyVector<R>],
    vctx: &Arc<Context>,
) -> PolyVector<R> {
    let mut f = PolyVector::zero(vctx.clone());
    for (j, p) in row.iter().enumerate() {
        f = f.add(&scalar_to_component(p, vctx, j + 1));
    }
    f
}

fn vector_to_row<R: EuclideanScalar>(
    f: &PolyVector<R>,
    sctx: &Arc<Context>,
    ncols: usize,
) -> Vec<PolyVector<R>> {
    (1..=ncols)
        .map(|j| component_to_scalar(f, sctx, j))
        .collect()
}

/// The Groebner normal form of `a` with respect to per-column scalar
/// orders: the reduced strong Groebner basis of the row module under the
/// position over term order, rows sorted strictly decreasing.
pub fn gnf<R: EuclideanScalar>(
    a: &PolyMatrix<R>,
    column_orders: &[MonoOrder],
    opts: &EngineOpts,
) -> Result<PolyMatrix<R>, Error> {
    if a.ncols() == 0 {
        return Err(Error::EmptyMatrix);
    }
    if column_orders.len() != a.ncols() {
        return Err(Error::ShapeMismatch(format!(
            "need {} column orders, got {}",
            a.ncols(),
            column_orders.len()
        )));
    }
    let ord = AdmissibleOrder::per_column(column_orders.to_vec(), a.ctx().nvars())?;
    let vctx = Context::new(a.ctx().vars().to_vec(), a.ncols());
    let gens: Vec<PolyVector<R>> = a
        .rows()
        .iter()
        .map(|row| row_to_vector(row, &vctx))
        .filter(|f| !f.is_zero())
        .collect();
    let basis = if gens.is_empty() {
        Vec::new()
    } else {
        reduced_strong_groebner(&gens, &ord, opts)?
    };
    let rows = basis
        .iter()
        .map(|f| vector_to_row(f, a.ctx(), a.ncols()))
        .collect();
    Ok(PolyMatrix::new(a.ctx().clone(), a.ncols(), rows))
}

/// Applies one scalar order to every column.
pub fn gnf_uniform<R: EuclideanScalar>(
    a: &PolyMatrix<R>,
    order: &MonoOrder,
    opts: &EngineOpts,
) -> Result<PolyMatrix<R>, Error> {
    gnf(a, &vec![order.clone(); a.ncols()], opts)
}

/// The `i`th step of a Groebner normal form (1-based column index): the
/// entries `h_{t,i}` of rows whose columns before `i` vanish. A reduced
/// strong Groebner basis of the `i`th fork ideal of the row module.
pub fn fork_basis<R: EuclideanScalar>(
    h: &PolyMatrix<R>,
    i: usize,
) -> Result<Vec<PolyVector<R>>, Error> {
    if i < 1 || i > h.ncols() {
        return Err(Error::IndexOutOfRange);
    }
    Ok(h.rows()
        .iter()
        .filter(|row| row[..i - 1].iter().all(|p| p.is_zero()) && !row[i - 1].is_zero())
        .map(|row| row[i - 1].clone())
        .collect())
}

/// Result of solving `A x = b` over the polynomial ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolveResult<R: EuclideanScalar> {
    /// The reduced strong Groebner basis of the colon ideal
    /// `(col(A) : b)`, which does not contain 1.
    NoSolution { colon_basis: Vec<PolyVector<R>> },
    /// The `<=_P`-minimal particular solution and a Groebner normal form
    /// of the kernel of `A`.
    Solution {
        particular: Vec<PolyVector<R>>,
        kernel: PolyMatrix<R>,
    },
}

/// Solves `A x = b` via the Groebner normal form of
/// `A' = [[-b^T | ], [A^T | I_{s+1}]]` using the orders
/// `<=_{-1}` (first `r` columns), `<=_0` (column `r+1`), and the
/// per-column orders for the remaining `s` columns.
pub fn solve_with_orders<R: EuclideanScalar>(
    a: &PolyMatrix<R>,
    b: &[PolyVector<R>],
    ord_m1: &MonoOrder,
    ord_0: &MonoOrder,
    ord_cols: &[MonoOrder],
    opts: &EngineOpts,
) -> Result<SolveResult<R>, Error> {
    let r = a.nrows();
    let s = a.ncols();
    if s == 0 || r == 0 {
        return Err(Error::EmptyMatrix);
    }
    if b.len() != r {
        return Err(Error::ShapeMismatch(format!(
            "rhs has {} entries for {} rows",
            b.len(),
            r
        )));
    }
    if ord_cols.len() != s {
        return Err(Error::ShapeMismatch(format!(
            "need {} column orders, got {}",
            s,
            ord_cols.len()
        )));
    }
    let sctx = a.ctx().clone();
    let zero = PolyVector::<R>::zero(sctx.clone());
    let one = PolyVector::term(
        sctx.clone(),
        R::one(),
        MonomialVector::new(vec![0; sctx.nvars()], 1),
    );
    // A' has s+1 rows and r+s+1 columns
    let mut rows: Vec<Vec<PolyVector<R>>> = Vec::with_capacity(s + 1);
    let mut first: Vec<PolyVector<R>> = b.iter().map(|p| p.negate()).collect();
    first.push(one.clone());
    first.extend(std::iter::repeat(zero.clone()).take(s));
    rows.push(first);
    for j in 0..s {
        let mut row: Vec<PolyVector<R>> = (0..r).map(|i| a.entry(i, j).clone()).collect();
        row.push(zero.clone());
        for t in 0..s {
            row.push(if t == j { one.clone() } else { zero.clone() });
        }
        rows.push(row);
    }
    let aprime = PolyMatrix::new(sctx.clone(), r + s + 1, rows);
    let mut col_orders = vec![ord_m1.clone(); r];
    col_orders.push(ord_0.clone());
    col_orders.extend(ord_cols.iter().cloned());
    let h = gnf(&aprime, &col_orders, opts)?;

    let mut v_rows: Vec<usize> = Vec::new();
    let mut d_rows: Vec<usize> = Vec::new();
    for (t, row) in h.rows().iter().enumerate() {
        if row[..r].iter().any(|p| !p.is_zero()) {
            continue;
        }
        if !row[r].is_zero() {
            v_rows.push(t);
        } else {
            d_rows.push(t);
        }
    }
    let kernel_rows: Vec<Vec<PolyVector<R>>> = d_rows
        .iter()
        .map(|&t| h.rows()[t][r + 1..].to_vec())
        .collect();
    let kernel = PolyMatrix::new(sctx.clone(), s, kernel_rows);
    let v: Vec<PolyVector<R>> = v_rows.iter().map(|&t| h.rows()[t][r].clone()).collect();
    if v.len() == 1 && v[0] == one {
        let particular = h.rows()[v_rows[0]][r + 1..].to_vec();
        Ok(SolveResult::Solution { particular, kernel })
    } else {
        Ok(SolveResult::NoSolution { colon_basis: v })
    }
}

/// Solves `A x = b` with one scalar order everywhere.
pub fn solve<R: EuclideanScalar>(
    a: &PolyMatrix<R>,
    b: &[PolyVector<R>],
    order: &MonoOrder,
    opts: &EngineOpts,
) -> Result<SolveResult<R>, Error> {
    solve_with_orders(a, b, order, order, &vec![order.clone(); a.ncols()], opts)
}

/// The kernel of `A` as a Groebner normal form: rows are a reduced strong
/// Groebner basis of `ker(A)`.
pub fn kernel<R: EuclideanScalar>(
    a: &PolyMatrix<R>,
    order: &MonoOrder,
    opts: &EngineOpts,
) -> Result<PolyMatrix<R>, Error> {
    let r = a.nrows();
    let s = a.ncols();
    if s == 0 {
        return Err(Error::EmptyMatrix);
    }
    let sctx = a.ctx().clone();
    let zero = PolyVector::<R>::zero(sctx.clone());
    let one = PolyVector::term(
        sctx.clone(),
        R::one(),
        MonomialVector::new(vec![0; sctx.nvars()], 1),
    );
    // (A^T | I_s), s rows, r + s columns
    let mut rows: Vec<Vec<PolyVector<R>>> = Vec::with_capacity(s);
    for j in 0..s {
        let mut row: Vec<PolyVector<R>> = (0..r).map(|i| a.entry(i, j).clone()).collect();
        for t in 0..s {
            row.push(if t == j { one.clone() } else { zero.clone() });
        }
        rows.push(row);
    }
    let aug = PolyMatrix::new(sctx.clone(), r + s, rows);
    let h = gnf_uniform(&aug, order, opts)?;
    let kernel_rows: Vec<Vec<PolyVector<R>>> = h
        .rows()
        .iter()
        .filter(|row| row[..r].iter().all(|p| p.is_zero()))
        .map(|row| row[r..].to_vec())
        .collect();
    Ok(PolyMatrix::new(sctx, s, kernel_rows))
}

/// Ideal membership `d in <d_1, ..., d_m>` via solvability of
/// `d_1 x_1 + ... + d_m x_m = d`.
pub fn ideal_member<R: EuclideanScalar>(
    d: &PolyVector<R>,
    gens: &[PolyVector<R>],
    order: &MonoOrder,
    opts: &EngineOpts,
) -> Result<bool, Error> {
    if d.is_zero() {
        return Ok(true);
    }
    if gens.is_empty() {
        return Ok(false);
    }
    let sctx = gens[0].ctx().clone();
    let a = PolyMatrix::new(sctx, gens.len(), vec![gens.to_vec()]);
    match solve(&a, &[d.clone()], order, opts)? {
        SolveResult::Solution { .. } => Ok(true),
        SolveResult::NoSolution { .. } => Ok(false),
    }
}

/// Exact division of scalar polynomials in a domain; `None` when `denom`
/// does not divide `numer`.
fn poly_exact_div<R: EuclideanScalar>(
    numer: &PolyVector<R>,
    denom: &PolyVector<R>,
    ord: &AdmissibleOrder,
) -> Option<PolyVector<R>> {
    if denom.is_zero() {
        return None;
    }
    let dl = denom.leading(ord).unwrap();
    let mut q = PolyVector::zero(numer.ctx().clone());
    let mut r = numer.clone();
    while !r.is_zero() {
        let rl = r.leading(ord).unwrap();
        let m = MonomialVector::quotient(&rl.lm, &dl.lm).ok()?;
        let c = R::exact_div(&rl.lc, &dl.lc)?;
        q = q.add(&PolyVector::term(
            numer.ctx().clone(),
            c.clone(),
            MonomialVector::new(m.exps.clone(), 1),
        ));
        r = r.sub(&denom.scale_by_term(&c, &m));
    }
    Some(q)
}

/// The least common multiple and greatest common divisor of two nonzero
/// scalar polynomials, via the kernel of `x_1 - d_1 x_2 = x_1 - d_2 x_3 = 0`.
pub fn lcm_gcd<R: EuclideanScalar>(
    d1: &PolyVector<R>,
    d2: &PolyVector<R>,
    order: &MonoOrder,
    opts: &EngineOpts,
) -> Result<(PolyVector<R>, PolyVector<R>), Error> {
    if d1.is_zero() || d2.is_zero() {
        return Err(Error::ZeroInput("lcm_gcd"));
    }
    let sctx = d1.ctx().clone();
    let one = PolyVector::term(
        sctx.clone(),
        R::one(),
        MonomialVector::new(vec![0; sctx.nvars()], 1),
    );
    let zero = PolyVector::<R>::zero(sctx.clone());
    let a = PolyMatrix::new(
        sctx.clone(),
        3,
        vec![
            vec![one.clone(), d1.negate(), zero.clone()],
            vec![one.clone(), zero.clone(), d2.negate()],
        ],
    );
    let d = kernel(&a, order, opts)?;
    let first_fork = fork_basis(&d, 1)?;
    if first_fork.len() != 1 {
        return Err(Error::ShapeMismatch(
            "first fork of the lcm kernel is not principal".into(),
        ));
    }
    let lcm = first_fork[0].clone();
    let ord = AdmissibleOrder::per_column(vec![order.clone()], sctx.nvars())?;
    let prod = multiply(d1, d2);
    let gcd = poly_exact_div(&prod, &lcm, &ord).ok_or_else(|| {
        Error::ShapeMismatch("lcm does not divide the product".into())
    })?;
    Ok((lcm, gcd))
}

/// Product of two scalar polynomials.
pub fn multiply<R: EuclideanScalar>(f: &PolyVector<R>, g: &PolyVector<R>) -> PolyVector<R> {
    let mut acc = PolyVector::zero(f.ctx().clone());
    for (m, c) in g.terms() {
        acc = acc.add(&f.scale_by_term(c, &crate::polyvec::Monomial { exps: m.exps.clone() }));
    }
    acc
}

fn const_ctx() -> Arc<Context> {
    Context::new(vec!["x".into()], 1)
}

fn int_matrix<R: EuclideanScalar>(ctx: &Arc<Context>, m: &[Vec<R>]) -> PolyMatrix<R> {
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let rows = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| {
                    PolyVector::from_terms(
                        ctx.clone(),
                        [(MonomialVector::new(vec![0], 1), c.clone())],
                    )
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(ctx.clone(), ncols, rows)
}

fn const_entry<R: EuclideanScalar>(p: &PolyVector<R>) -> R {
    p.coeff_of(&MonomialVector::new(vec![0], 1))
}

/// Hermite normal form of an integer matrix, as the Groebner normal form
/// of a constant matrix over `Z[x]`. Zero rows are dropped; off-pivot
/// entries are minimized in the refined grading.
pub fn hermite_normal_form(m: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>, Error> {
    let ctx = const_ctx();
    let a = int_matrix(&ctx, m);
    if a.ncols() == 0 {
        return Ok(Vec::new());
    }
    let h = gnf_uniform(&a, &MonoOrder::Lex, &EngineOpts::default())?;
    Ok(h.rows()
        .iter()
        .map(|row| row.iter().map(const_entry).collect())
        .collect())
}

/// Reduced row echelon form of a rational matrix via the same construction
/// over `Q[x]`.
pub fn row_reduce(m: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>, Error> {
    let ctx = const_ctx();
    let a = int_matrix(&ctx, m);
    if a.ncols() == 0 {
        return Ok(Vec::new());
    }
    let h = gnf_uniform(&a, &MonoOrder::Lex, &EngineOpts::default())?;
    Ok(h.rows()
        .iter()
        .map(|row| row.iter().map(const_entry).collect())
        .collect())
}

/// On-disk matrix description used by the command line front end.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub ring: RingSpec,
    #[serde(default)]
    pub order: Option<OrderSpec>,
    pub matrix: Vec<Vec<String>>,
    #[serde(default)]
    pub rhs: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingSpec {
    pub coeff: String,
    pub vars: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderSpec {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default)]
    pub matrix: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub perm: Option<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;
    use num_traits::{One, Zero};

    fn zxy() -> Arc<Context> {
        Context::new(vec!["x".into(), "y".into()], 1)
    }

    fn zmat(ctx: &Arc<Context>, rows: &[&[&str]]) -> PolyMatrix<BigInt> {
        let parsed: Vec<Vec<PolyVector<BigInt>>> = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_poly(ctx, s).unwrap()).collect())
            .collect();
        PolyMatrix::new(ctx.clone(), rows[0].len(), parsed)
    }

    fn fmt(m: &PolyMatrix<BigInt>) -> Vec<Vec<String>> {
        let ord = AdmissibleOrder::pot_lex(1);
        m.rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| crate::text::format_vector(p, &ord))
                    .collect()
            })
            .collect()
    }

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn gnf_of_section8_matrix() {
        let ctx = zxy();
        let a = zmat(
            &ctx,
            &[
                &["-4*x^3", "1", "0", "0", "0"],
                &["10*y", "0", "1", "0", "0"],
                &["0", "0", "0", "1", "0"],
                &["4*x", "0", "0", "0", "1"],
            ],
        );
        let h = gnf_uniform(&a, &MonoOrder::Lex, &EngineOpts::default()).unwrap();
        assert_eq!(
            fmt(&h),
            vec![
                vec!["2*x*y", "0", "x", "0", "-2*y"],
                vec!["4*x", "0", "0", "0", "1"],
                vec!["10*y", "0", "1", "0", "0"],
                vec!["0", "1", "0", "0", "x^2"],
                vec!["0", "0", "2*x", "0", "-5*y"],
                vec!["0", "0", "0", "1", "0"],
            ]
        );
        // idempotence
        let h2 = gnf_uniform(&h, &MonoOrder::Lex, &EngineOpts::default()).unwrap();
        assert_eq!(h, h2);
    }

    #[test]
    fn gnf_identity() {
        let ctx = zxy();
        let a = zmat(&ctx, &[&["1", "0"], &["0", "1"]]);
        let h = gnf_uniform(&a, &MonoOrder::Lex, &EngineOpts::default()).unwrap();
        assert_eq!(h, a);
    }

    #[test]
    fn fork_bases_of_section8() {
        let ctx = zxy();
        let a = zmat(
            &ctx,
            &[
                &["-4*x^3", "1", "0", "0", "0"],
                &["10*y", "0", "1", "0", "0"],
                &["0", "0", "0", "1", "0"],
                &["4*x", "0", "0", "0", "1"],
            ],
        );
        let h = gnf_uniform(&a, &MonoOrder::Lex, &EngineOpts::default()).unwrap();
        let s1 = fork_basis(&h, 1).unwrap();
        let ord = AdmissibleOrder::pot_lex(1);
        let printed: Vec<String> = s1
            .iter()
            .map(|p| crate::text::format_vector(p, &ord))
            .collect();
        assert_eq!(printed, vec!["2*x*y", "4*x", "10*y"]);
        let s2 = fork_basis(&h, 2).unwrap();
        assert_eq!(s2, vec![parse_poly::<BigInt>(&ctx, "1").unwrap()]);
        assert!(fork_basis(&h, 0).is_err());
        assert!(fork_basis(&h, 6).is_err());
    }

    #[test]
    fn solve_section8_system() {
        let ctx = zxy();
        let a = zmat(&ctx, &[&["10*y", "0", "4*x"]]);
        let b = vec![parse_poly::<BigInt>(&ctx, "4*x^3").unwrap()];
        let res = solve(&a, &b, &MonoOrder::Lex, &EngineOpts::default()).unwrap();
        let SolveResult::Solution { particular, kernel } = res else {
            panic!("expected a solution");
        };
        let ord = AdmissibleOrder::pot_lex(1);
        let part: Vec<String> = particular
            .iter()
            .map(|p| crate::text::format_vector(p, &ord))
            .collect();
        assert_eq!(part, vec!["0", "0", "x^2"]);
        assert_eq!(
            fmt(&kernel),
            vec![vec!["2*x", "0", "-5*y"], vec!["0", "1", "0"]]
        );
        // verify A * particular = b and A * kernel rows = 0
        for (krow, expect_zero) in kernel
            .rows()
            .iter()
            .map(|r| (r.clone(), true))
            .chain([(particular.clone(), false)])
        {
            let mut acc = PolyVector::<BigInt>::zero(ctx.clone());
            for j in 0..3 {
                acc = acc.add(&multiply(a.entry(0, j), &krow[j]));
            }
            if expect_zero {
                assert!(acc.is_zero());
            } else {
                assert_eq!(acc, b[0]);
            }
        }
    }

    #[test]
    fn solve_identity_and_no_solution() {
        let ctx = zxy();
        let a = zmat(&ctx, &[&["1", "0"], &["0", "1"]]);
        let b = vec![
            parse_poly::<BigInt>(&ctx, "x + 3").unwrap(),
            parse_poly::<BigInt>(&ctx, "y^2").unwrap(),
        ];
        let res = solve(&a, &b, &MonoOrder::Lex, &EngineOpts::default()).unwrap();
        let SolveResult::Solution { particular, kernel } = res else {
            panic!("expected a solution");
        };
        assert_eq!(particular, b);
        assert_eq!(kernel.nrows(), 0);

        let a2 = zmat(&ctx, &[&["2"]]);
        let b2 = vec![parse_poly::<BigInt>(&ctx, "x").unwrap()];
        let res2 = solve(&a2, &b2, &MonoOrder::Lex, &EngineOpts::default()).unwrap();
        let SolveResult::NoSolution { colon_basis } = res2 else {
            panic!("expected no solution");
        };
        assert_eq!(colon_basis, vec![parse_poly::<BigInt>(&ctx, "2").unwrap()]);
    }

    #[test]
    fn kernel_examples() {
        let ctx = zxy();
        let a = zmat(&ctx, &[&["10*y", "0", "4*x"]]);
        let d = kernel(&a, &MonoOrder::Lex, &EngineOpts::default()).unwrap();
        assert_eq!(
            fmt(&d),
            vec![vec!["2*x", "0", "-5*y"], vec!["0", "1", "0"]]
        );

        let id = zmat(&ctx, &[&["1", "0"], &["0", "1"]]);
        assert_eq!(
            kernel(&id, &MonoOrder::Lex, &EngineOpts::default())
                .unwrap()
                .nrows(),
            0
        );

        let cq = Context::new(vec!["x".into()], 1);
        let aq = PolyMatrix::new(
            cq.clone(),
            2,
            vec![vec![
                parse_poly::<BigRational>(&cq, "x").unwrap(),
                parse_poly::<BigRational>(&cq, "-x").unwrap(),
            ]],
        );
        let dq = kernel(&aq, &MonoOrder::Lex, &EngineOpts::default()).unwrap();
        assert_eq!(dq.nrows(), 1);
        assert!(const_entry(dq.entry(0, 0)).is_one());
        assert!(const_entry(dq.entry(0, 1)).is_one());
    }

    #[test]
    fn ideal_member_examples() {
        let cx = Context::new(vec!["x".into()], 1);
        let ord = MonoOrder::Lex;
        let opts = EngineOpts::default();
        let two_x = parse_poly::<BigInt>(&cx, "2*x").unwrap();
        let three_x = parse_poly::<BigInt>(&cx, "3*x").unwrap();
        let x = parse_poly::<BigInt>(&cx, "x").unwrap();
        assert!(ideal_member(&x, &[two_x.clone(), three_x], &ord, &opts).unwrap());
        let one = parse_poly::<BigInt>(&cx, "1").unwrap();
        let two = parse_poly::<BigInt>(&cx, "2").unwrap();
        assert!(!ideal_member(&one, &[two.clone()], &ord, &opts).unwrap());
        assert!(ideal_member(&two, &[two.clone()], &ord, &opts).unwrap());
        assert!(ideal_member(&PolyVector::zero(cx.clone()), &[two], &ord, &opts).unwrap());
    }

    #[test]
    fn lcm_gcd_examples() {
        let ctx = zxy();
        let opts = EngineOpts::default();
        let ord = MonoOrder::Lex;
        let fx = |s: &str| parse_poly::<BigInt>(&ctx, s).unwrap();
        let (l, g) = lcm_gcd(&fx("2*x"), &fx("3*y"), &ord, &opts).unwrap();
        assert_eq!(l, fx("6*x*y"));
        assert_eq!(g, fx("1"));
        let (l, g) = lcm_gcd(&fx("4"), &fx("6"), &ord, &opts).unwrap();
        assert_eq!(l, fx("12"));
        assert_eq!(g, fx("2"));
        let d = fx("2*x + 4");
        let (l, g) = lcm_gcd(&d, &d, &ord, &opts).unwrap();
        assert_eq!(l, d);
        assert_eq!(g, d);
        assert!(lcm_gcd(&d, &PolyVector::zero(ctx.clone()), &ord, &opts).is_err());
    }

    #[test]
    fn hermite_examples() {
        let h = hermite_normal_form(&[vec![bi(4), bi(1)], vec![bi(6), bi(1)]]).unwrap();
        assert_eq!(h, vec![vec![bi(2), bi(0)], vec![bi(0), bi(1)]]);
        let id = vec![vec![bi(1), bi(0)], vec![bi(0), bi(1)]];
        assert_eq!(hermite_normal_form(&id).unwrap(), id);
        let z = hermite_normal_form(&[vec![bi(0)]]).unwrap();
        assert!(z.is_empty());
    }

    #[test]
    fn row_reduce_examples() {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        let r = row_reduce(&[vec![q(2), q(4)], vec![q(1), q(3)]]).unwrap();
        assert_eq!(r, vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
        let id = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert_eq!(row_reduce(&id).unwrap(), id);
        let rank1 = row_reduce(&[vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert_eq!(rank1, vec![vec![q(1), q(2)]]);
    }

    #[test]
    fn zero_rows_are_dropped() {
        let ctx = zxy();
        let a = zmat(&ctx, &[&["0", "0"], &["2", "0"]]);
        let h = gnf_uniform(&a, &MonoOrder::Lex, &EngineOpts::default()).unwrap();
        assert_eq!(fmt(&h), vec![vec!["2", "0"]]);
    }

    #[test]
    fn matrix_file_round_trip() {
        let src = r#"{
            "ring": {"coeff": "Z", "vars": ["x", "y"]},
            "order": {"type": "lex"},
            "matrix": [["10*y", "0", "4*x"]],
            "rhs": ["4*x^3"]
        }"#;
        let f: MatrixFile = serde_json::from_str(src).unwrap();
        assert_eq!(f.ring.coeff, "Z");
        assert_eq!(f.matrix[0].len(), 3);
        assert_eq!(f.rhs.as_ref().unwrap()[0], "4*x^3");
        let back = serde_json::to_string(&f).unwrap();
        let f2: MatrixFile = serde_json::from_str(&back).unwrap();
        assert_eq!(f2.matrix, f.matrix);
        assert!(f.order.unwrap().matrix.is_none());
        let _ = Zero::is_zero(&BigInt::from(0));
    }
}
