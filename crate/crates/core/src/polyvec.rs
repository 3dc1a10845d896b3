//! Monomial vectors, term vectors and polynomial vectors in R[x1,...,xn]^k,
//! together with admissible orders and the gradings used by the completion
//! algorithms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::euclid::{EuclideanScalar, GradeValue};

/// Shared ring shape: variable names and the number of components k.
/// All objects participating in one computation carry the same context;
/// mixing contexts is a usage error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Context {
    vars: Vec<String>,
    ncomps: usize,
}

impl Context {
    pub fn new(vars: Vec<String>, ncomps: usize) -> Arc<Context> {
        assert!(ncomps >= 1, "need at least one component");
        Arc::new(Context { vars, ncomps })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn ncomps(&self) -> usize {
        self.ncomps
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

fn same_ctx(a: &Arc<Context>, b: &Arc<Context>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A monomial x^gamma in the scalar polynomial ring (no component).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// A monomial vector x^alpha e_i. Components are 1-based as in the
/// mathematical convention.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct MonomialVector {
    pub comp: usize,
    pub exps: Vec<u32>,
}

impl MonomialVector {
    pub fn new(exps: Vec<u32>, comp: usize) -> Self {
        MonomialVector { comp, exps }
    }

    /// x^alpha e_i divides x^beta e_j iff i = j and alpha <= beta pointwise.
    pub fn divides(&self, other: &MonomialVector) -> bool {
        self.comp == other.comp
            && self
                .exps
                .iter()
                .zip(&other.exps)
                .all(|(a, b)| a <= b)
    }

    /// The monomial quotient `numer / denom`.
    pub fn quotient(numer: &MonomialVector, denom: &MonomialVector) -> Result<Monomial, Error> {
        if !denom.divides(numer) {
            return Err(Error::NotDivisible);
        }
        Ok(Monomial {
            exps: numer
                .exps
                .iter()
                .zip(&denom.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul_mono(&self, m: &Monomial) -> MonomialVector {
        MonomialVector {
            comp: self.comp,
            exps: self.exps.iter().zip(&m.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

/// A term vector a x^alpha e_i with a nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TermVector<R: EuclideanScalar> {
    pub coeff: R,
    pub mono: MonomialVector,
}

impl<R: EuclideanScalar> TermVector<R> {
    pub fn new(coeff: R, mono: MonomialVector) -> Self {
        debug_assert!(!coeff.is_zero());
        TermVector { coeff, mono }
    }

    /// `s` divides `t` iff the coefficient divides in R and the monomial
    /// vector divides.
    pub fn divides(s: &TermVector<R>, t: &TermVector<R>) -> bool {
        s.mono.divides(&t.mono) && R::exact_div(&t.coeff, &s.coeff).is_some()
    }

    /// The term quotient `t / s` as a scalar term (coefficient, monomial).
    pub fn quotient(t: &TermVector<R>, s: &TermVector<R>) -> Result<(R, Monomial), Error> {
        let c = R::exact_div(&t.coeff, &s.coeff).ok_or(Error::NotDivisible)?;
        let m = MonomialVector::quotient(&t.mono, &s.mono)?;
        Ok((c, m))
    }
}

/// An order on scalar monomials (exponent vectors).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonoOrder {
    /// Lexicographic in declaration order of the variables.
    Lex,
    /// Compare U*alpha lexicographically; validated so that the rational
    /// kernel of U is trivial and the first nonzero entry of every column
    /// is positive.
    Matrix(Vec<Vec<i64>>),
}

impl MonoOrder {
    fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonoOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonoOrder::Matrix(u) => {
                for row in u {
                    let pa: i128 = row.iter().zip(a).map(|(&c, &e)| c as i128 * e as i128).sum();
                    let pb: i128 = row.iter().zip(b).map(|(&c, &e)| c as i128 * e as i128).sum();
                    match pa.cmp(&pb) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Checks the admissibility conditions on an order matrix.
    pub fn validate_matrix(u: &[Vec<i64>], nvars: usize) -> Result<(), Error> {
        if u.is_empty() || u.iter().any(|row| row.len() != nvars) {
            return Err(Error::InvalidOrder(format!(
                "order matrix must have {nvars} columns"
            )));
        }
        for col in 0..nvars {
            match u.iter().map(|row| row[col]).find(|&e| e != 0) {
                Some(e) if e > 0 => {}
                Some(_) => {
                    return Err(Error::InvalidOrder(format!(
                        "first nonzero entry of column {} is negative",
                        col + 1
                    )))
                }
                None => {
                    return Err(Error::InvalidOrder(format!(
                        "column {} of the order matrix is zero",
                        col + 1
                    )))
                }
            }
        }
        if rational_rank(u) != nvars {
            return Err(Error::InvalidOrder(
                "order matrix has a nontrivial rational kernel".into(),
            ));
        }
        Ok(())
    }
}

/// Rank of an integer matrix over the rationals.
fn rational_rank(u: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = u
        .iter()
        .map(|row| {
            row.iter()
                .map(|&e| BigRational::from_integer(BigInt::from(e)))
                .collect()
        })
        .collect();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for col in 0..cols {
        if let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) {
            m.swap(rank, p);
            for r in 0..rows {
                if r != rank && !m[r][col].is_zero() {
                    let factor = &m[r][col] / &m[rank][col];
                    for c in col..cols {
                        let sub = &factor * &m[rank][c];
                        m[r][c] = &m[r][c] - sub;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

/// An admissible total order on monomial vectors: position over term with a
/// component permutation and a per-component scalar monomial order.
///
/// Components with a larger permuted index come earlier in the module but
/// are *smaller* in the order, matching the usual convention e1 > e2 > ...
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleOrder {
    perm: Vec<usize>,
    cols: Vec<MonoOrder>,
}

impl AdmissibleOrder {
    /// The lexicographic position over term ordering.
    pub fn pot_lex(ncomps: usize) -> AdmissibleOrder {
        AdmissibleOrder {
            perm: (1..=ncomps).collect(),
            cols: vec![MonoOrder::Lex; ncomps],
        }
    }

    /// Order given by an integer matrix and a component permutation.
    pub fn with_matrix(
        u: Vec<Vec<i64>>,
        perm: Vec<usize>,
        nvars: usize,
        ncomps: usize,
    ) -> Result<AdmissibleOrder, Error> {
        MonoOrder::validate_matrix(&u, nvars)?;
        Self::validate_perm(&perm, ncomps)?;
        Ok(AdmissibleOrder {
            perm,
            cols: vec![MonoOrder::Matrix(u); ncomps],
        })
    }

    /// Position over term with one scalar order per component, as used for
    /// the Groebner normal form of a matrix.
    pub fn per_column(cols: Vec<MonoOrder>, nvars: usize) -> Result<AdmissibleOrder, Error> {
        for c in &cols {
            if let MonoOrder::Matrix(u) = c {
                MonoOrder::validate_matrix(u, nvars)?;
            }
        }
        Ok(AdmissibleOrder {
            perm: (1..=cols.len()).collect(),
            cols,
        })
    }

    fn validate_perm(perm: &[usize], ncomps: usize) -> Result<(), Error> {
        let mut seen = vec![false; ncomps];
        if perm.len() != ncomps {
            return Err(Error::InvalidOrder(format!(
                "permutation must have length {ncomps}"
            )));
        }
        for &p in perm {
            if p < 1 || p > ncomps || seen[p - 1] {
                return Err(Error::InvalidOrder("invalid component permutation".into()));
            }
            seen[p - 1] = true;
        }
        Ok(())
    }

    pub fn ncomps(&self) -> usize {
        self.cols.len()
    }

    pub fn compare(&self, a: &MonomialVector, b: &MonomialVector) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len(), "monomial shape mismatch");
        let pa = self.perm[a.comp - 1];
        let pb = self.perm[b.comp - 1];
        // larger (permuted) component index means smaller monomial vector
        match pa.cmp(&pb) {
            Ordering::Less => Ordering::Greater,
            Ordering::Greater => Ordering::Less,
            Ordering::Equal => self.cols[a.comp - 1].compare(&a.exps, &b.exps),
        }
    }

    pub fn max<'a>(&self, a: &'a MonomialVector, b: &'a MonomialVector) -> &'a MonomialVector {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Leading data of a nonzero polynomial vector: (Deg, Lm, Lc, Lt).
/// `deg` and `lm` coincide as monomial vectors; both are provided to match
/// the usual notation.
pub struct Leading<R: EuclideanScalar> {
    pub deg: MonomialVector,
    pub lm: MonomialVector,
    pub lc: R,
    pub lt: TermVector<R>,
}

/// The pair Deg_delta(f) = (Deg(f), delta(Lc(f))).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegDelta {
    pub mono: MonomialVector,
    pub grade: GradeValue,
}

/// The divisibility order on Deg_delta values: monomial divides, same
/// component, grade <=.
pub fn div_delta_leq(d1: &DegDelta, d2: &DegDelta) -> bool {
    d1.mono.divides(&d2.mono) && d1.grade <= d2.grade
}

/// Minimal elements of a finite set of Deg_delta values; the output is an
/// antichain dominating every input element.
pub fn min_elements(ds: &[DegDelta]) -> Vec<DegDelta> {
    let mut out: Vec<DegDelta> = Vec::new();
    for d in ds {
        if out.contains(d) {
            continue;
        }
        if ds
            .iter()
            .any(|other| other != d && div_delta_leq(other, d))
        {
            continue;
        }
        out.push(d.clone());
    }
    out
}

/// An element of R[x1,...,xn]^k as a finite map from monomial vectors to
/// nonzero coefficients. The zero vector is the empty map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyVector<R: EuclideanScalar> {
    ctx: Arc<Context>,
    terms: BTreeMap<MonomialVector, R>,
}

impl<R: EuclideanScalar> PolyVector<R> {
    pub fn zero(ctx: Arc<Context>) -> Self {
        PolyVector {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(ctx: Arc<Context>, terms: I) -> Self
    where
        I: IntoIterator<Item = (MonomialVector, R)>,
    {
        let mut f = PolyVector::zero(ctx);
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    pub fn term(ctx: Arc<Context>, coeff: R, mono: MonomialVector) -> Self {
        let mut f = PolyVector::zero(ctx);
        f.add_term(mono, coeff);
        f
    }

    fn add_term(&mut self, mono: MonomialVector, coeff: R) {
        if coeff.is_zero() {
            return;
        }
        assert_eq!(mono.exps.len(), self.ctx.nvars(), "monomial shape mismatch");
        assert!(
            mono.comp >= 1 && mono.comp <= self.ctx.ncomps(),
            "component out of range"
        );
        match self.terms.remove(&mono) {
            None => {
                self.terms.insert(mono, coeff);
            }
            Some(old) => {
                let s = old.ring_add(&coeff);
                if !s.is_zero() {
                    self.terms.insert(mono, s);
                }
            }
        }
    }

    pub fn ctx(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonomialVector, &R)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &MonomialVector) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    pub fn add(&self, other: &PolyVector<R>) -> PolyVector<R> {
        assert!(same_ctx(&self.ctx, &other.ctx), "ring context mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolyVector<R>) -> PolyVector<R> {
        assert!(same_ctx(&self.ctx, &other.ctx), "ring context mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.ring_neg());
        }
        out
    }

    pub fn negate(&self) -> PolyVector<R> {
        PolyVector {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.ring_neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R) -> PolyVector<R> {
        let mut out = PolyVector::zero(self.ctx.clone());
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.ring_mul(c));
        }
        out
    }

    /// `c x^gamma * f`.
    pub fn scale_by_term(&self, c: &R, m: &Monomial) -> PolyVector<R> {
        let mut out = PolyVector::zero(self.ctx.clone());
        for (mv, a) in &self.terms {
            out.add_term(mv.mul_mono(m), a.ring_mul(c));
        }
        out
    }

    pub fn leading(&self, ord: &AdmissibleOrder) -> Result<Leading<R>, Error> {
        let (m, c) = self
            .terms
            .iter()
            .max_by(|(m1, _), (m2, _)| ord.compare(m1, m2))
            .ok_or(Error::UndefinedForZero)?;
        Ok(Leading {
            deg: m.clone(),
            lm: m.clone(),
            lc: c.clone(),
            lt: TermVector::new(c.clone(), m.clone()),
        })
    }

    pub fn deg_delta(&self, ord: &AdmissibleOrder) -> Result<DegDelta, Error> {
        let lead = self.leading(ord)?;
        Ok(DegDelta {
            mono: lead.lm,
            grade: lead.lc.delta(),
        })
    }

    /// Terms in strictly decreasing admissible order.
    pub fn sorted_terms(&self, ord: &AdmissibleOrder) -> Vec<(MonomialVector, R)> {
        let mut v: Vec<(MonomialVector, R)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by(|(m1, _), (m2, _)| ord.compare(m2, m1));
        v
    }

    /// The single component in which all terms live, if there is one.
    pub fn sole_component(&self) -> Option<usize> {
        let mut comps = self.terms.keys().map(|m| m.comp);
        let first = comps.next()?;
        if comps.all(|c| c == first) {
            Some(first)
        } else {
            None
        }
    }
}

/// Total comparison of polynomial vectors via the refined grading of the
/// coefficients at the leading monomial of the difference. A well order.
pub fn lep_compare<R: EuclideanScalar>(
    p: &PolyVector<R>,
    q: &PolyVector<R>,
    ord: &AdmissibleOrder,
) -> Ordering {
    let d = p.sub(q);
    if d.is_zero() {
        return Ordering::Equal;
    }
    let lm = d.leading(ord).expect("nonzero difference").lm;
    let a = p.coeff_of(&lm);
    let b = q.coeff_of(&lm);
    a.hat_delta().cmp(&b.hat_delta())
}
