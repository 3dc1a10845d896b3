//! Independent brute-force verifiers used by the test suites: Macaulay-style
//! degree-bounded membership and kernel computations backed by classical
//! integer and rational linear algebra, plus standalone Hermite-normal-form
//! and row-reduction routines for cross-checking.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::euclid::EuclideanScalar;
use crate::linsys::PolyMatrix;
use crate::polyvec::{Monomial, MonomialVector, PolyVector};

const MAX_UNKNOWNS: usize = 5000;

/// Scalars for which the oracle can run exact linear algebra.
pub trait OracleScalar: EuclideanScalar {
    /// Some `u` with `A u = b`, if one exists over the ring.
    fn lin_solve(a: &[Vec<Self>], b: &[Self]) -> Option<Vec<Self>>;
    /// A spanning set of `{u | A u = 0}` over the ring.
    fn null_basis(a: &[Vec<Self>], unknowns: usize) -> Vec<Vec<Self>>;
}

/// Row Hermite normal form with a unimodular transform: returns `(H, U)`
/// with `H = U M`, pivots positive, entries above each pivot reduced to the
/// minimal refined grade.
pub fn hnf_with_transform(m: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        loop {
            let best = (pivot_row..rows)
                .filter(|&r| !h[r][col].is_zero())
                .min_by_key(|&r| h[r][col].abs());
            let Some(best) = best else { break };
            h.swap(pivot_row, best);
            u.swap(pivot_row, best);
            let mut any = false;
            for r in pivot_row + 1..rows {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = &h[r][col] / &h[pivot_row][col];
                if !q.is_zero() {
                    for c in 0..cols {
                        let sub = &q * &h[pivot_row][c];
                        h[r][c] = &h[r][c] - sub;
                    }
                    for c in 0..rows {
                        let sub = &q * &u[pivot_row][c];
                        u[r][c] = &u[r][c] - sub;
                    }
                }
                if !h[r][col].is_zero() {
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        if h[pivot_row][col].is_zero() {
            continue;
        }
        if h[pivot_row][col].is_negative() {
            for c in 0..cols {
                h[pivot_row][c] = -h[pivot_row][c].clone();
            }
            for c in 0..rows {
                u[pivot_row][c] = -u[pivot_row][c].clone();
            }
        }
        for r in 0..pivot_row {
            let q = BigInt::min_quotient(&h[r][col], &h[pivot_row][col]).unwrap();
            if !q.is_zero() {
                for c in 0..cols {
                    let sub = &q * &h[pivot_row][c];
                    h[r][c] = &h[r][c] - sub;
                }
                for c in 0..rows {
                    let sub = &q * &u[pivot_row][c];
                    u[r][c] = &u[r][c] - sub;
                }
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Classical Hermite normal form of an integer matrix, zero rows dropped.
pub fn hnf_classic(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let (h, _) = hnf_with_transform(m);
    h.into_iter()
        .filter(|row| row.iter().any(|e| !e.is_zero()))
        .collect()
}

/// Classical reduced row echelon form of a rational matrix, zero rows
/// dropped.
pub fn rref_classic(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let mut h: Vec<Vec<BigRational>> = m.to_vec();
    let rows = h.len();
    let cols = h.first().map(|r| r.len()).unwrap_or(0);
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        let Some(p) = (pivot_row..rows).find(|&r| !h[r][col].is_zero()) else {
            continue;
        };
        h.swap(pivot_row, p);
        let inv = h[pivot_row][col].recip();
        for c in 0..cols {
            h[pivot_row][c] = &h[pivot_row][c] * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !h[r][col].is_zero() {
                let factor = h[r][col].clone();
                for c in 0..cols {
                    let sub = &factor * &h[pivot_row][c];
                    h[r][c] = &h[r][c] - sub;
                }
            }
        }
        pivot_row += 1;
    }
    h.into_iter()
        .filter(|row| row.iter().any(|e| !e.is_zero()))
        .collect()
}

impl OracleScalar for BigInt {
    fn lin_solve(a: &[Vec<Self>], b: &[Self]) -> Option<Vec<Self>> {
        // b must lie in the lattice spanned by the columns of A, i.e. by
        // the rows of the Hermite form of A^T; reduce b greedily.
        let rows = a.len();
        let cols = a.first().map(|r| r.len()).unwrap_or(0);
        let at: Vec<Vec<BigInt>> = (0..cols).map(|j| (0..rows).map(|i| a[i][j].clone()).collect()).collect();
        let (h, u) = hnf_with_transform(&at);
        let mut target = b.to_vec();
        let mut combo = vec![BigInt::zero(); cols];
        for (ri, row) in h.iter().enumerate() {
            let Some(pc) = row.iter().position(|e| !e.is_zero()) else { continue };
            if target[pc].is_zero() {
                continue;
            }
            let q = &target[pc] / &row[pc];
            let r = &target[pc] - &q * &row[pc];
            if !r.is_zero() {
                return None;
            }
            for c in 0..rows {
                let sub = &q * &row[c];
                target[c] = &target[c] - sub;
            }
            for c in 0..cols {
                let add = &q * &u[ri][c];
                combo[c] = &combo[c] + add;
            }
        }
        if target.iter().all(|e| e.is_zero()) {
            Some(combo)
        } else {
            None
        }
    }

    fn null_basis(a: &[Vec<Self>], unknowns: usize) -> Vec<Vec<Self>> {
        let rows = a.len();
        let at: Vec<Vec<BigInt>> = (0..unknowns)
            .map(|j| (0..rows).map(|i| a[i][j].clone()).collect())
            .collect();
        let (h, u) = hnf_with_transform(&at);
        h.iter()
            .zip(u.iter())
            .filter(|(hr, _)| hr.iter().all(|e| e.is_zero()))
            .map(|(_, ur)| ur.clone())
            .collect()
    }
}

impl OracleScalar for BigRational {
    fn lin_solve(a: &[Vec<Self>], b: &[Self]) -> Option<Vec<Self>> {
        let rows = a.len();
        let cols = a.first().map(|r| r.len()).unwrap_or(0);
        let mut aug: Vec<Vec<BigRational>> = (0..rows)
            .map(|i| {
                let mut row = a[i].clone();
                row.push(b[i].clone());
                row
            })
            .collect();
        aug = rref_classic(&aug);
        let mut solution = vec![BigRational::zero(); cols];
        for row in &aug {
            let Some(pc) = row.iter().position(|e| !e.is_zero()) else { continue };
            if pc == cols {
                return None;
            }
            // free variables are set to zero, so the pivot carries the rhs
            solution[pc] = row[cols].clone();
        }
        Some(solution)
    }

    fn null_basis(a: &[Vec<Self>], unknowns: usize) -> Vec<Vec<Self>> {
        let h = rref_classic(a);
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; unknowns];
        for (ri, row) in h.iter().enumerate() {
            if let Some(pc) = row.iter().position(|e| !e.is_zero()) {
                pivot_of_col[pc] = Some(ri);
            }
        }
        let mut basis = Vec::new();
        for free in 0..unknowns {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![BigRational::zero(); unknowns];
            v[free] = BigRational::one();
            for (col, piv) in pivot_of_col.iter().enumerate() {
                if let Some(ri) = piv {
                    v[col] = -h[*ri][free].clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// All scalar monomials of total degree at most `bound`.
fn monomials_up_to(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, left: u32) {
        if pos == current.len() {
            out.push(Monomial { exps: current.clone() });
            return;
        }
        for e in 0..=left {
            current[pos] = e;
            rec(out, current, pos + 1, left - e);
        }
        current[pos] = 0;
    }
    rec(&mut out, &mut current, 0, bound);
    out
}

/// Decides `f = sum_i h_i g_i` with scalar multipliers of total degree at
/// most `degree_bound`, by exact coefficient matching.
pub fn membership_bruteforce<R: OracleScalar>(
    f: &PolyVector<R>,
    gens: &[PolyVector<R>],
    degree_bound: u32,
) -> Result<bool, Error> {
    if f.is_zero() {
        return Ok(true);
    }
    let ctx = f.ctx();
    let monos = monomials_up_to(ctx.nvars(), degree_bound);
    let unknowns = gens.len() * monos.len();
    if unknowns == 0 {
        return Ok(false);
    }
    if unknowns > MAX_UNKNOWNS {
        return Err(Error::Capacity(format!("{unknowns} unknowns")));
    }
    // columns: the products g_i * x^m; rows: every monomial vector seen
    let mut columns: Vec<BTreeMap<MonomialVector, R>> = Vec::with_capacity(unknowns);
    let mut row_index: BTreeMap<MonomialVector, usize> = BTreeMap::new();
    let note = |mv: &MonomialVector, row_index: &mut BTreeMap<MonomialVector, usize>| {
        let next = row_index.len();
        row_index.entry(mv.clone()).or_insert(next);
    };
    for g in gens {
        for m in &monos {
            let prod = g.scale_by_term(&R::one(), m);
            let col: BTreeMap<MonomialVector, R> = prod
                .terms()
                .map(|(mv, c)| (mv.clone(), c.clone()))
                .collect();
            for mv in col.keys() {
                note(mv, &mut row_index);
            }
            columns.push(col);
        }
    }
    for (mv, _) in f.terms() {
        note(mv, &mut row_index);
    }
    let nrows = row_index.len();
    let mut a = vec![vec![R::zero(); unknowns]; nrows];
    for (j, col) in columns.iter().enumerate() {
        for (mv, c) in col {
            a[row_index[mv]][j] = c.clone();
        }
    }
    let mut b = vec![R::zero(); nrows];
    for (mv, c) in f.terms() {
        b[row_index[mv]] = c.clone();
    }
    Ok(R::lin_solve(&a, &b).is_some())
}

/// All kernel elements of `A` with entries of total degree at most
/// `degree_bound`, as a spanning set of the truncated solution space.
pub fn kernel_bruteforce<R: OracleScalar>(
    a: &PolyMatrix<R>,
    degree_bound: u32,
) -> Result<Vec<Vec<PolyVector<R>>>, Error> {
    let ctx = a.ctx();
    let s = a.ncols();
    let monos = monomials_up_to(ctx.nvars(), degree_bound);
    let unknowns = s * monos.len();
    if unknowns > MAX_UNKNOWNS {
        return Err(Error::Capacity(format!("{unknowns} unknowns")));
    }
    let mut columns: Vec<Vec<BTreeMap<MonomialVector, R>>> = Vec::with_capacity(unknowns);
    let mut row_index: BTreeMap<(usize, MonomialVector), usize> = BTreeMap::new();
    for j in 0..s {
        for m in &monos {
            // contribution of x^m * column j to every equation
            let mut per_eq = Vec::with_capacity(a.nrows());
            for i in 0..a.nrows() {
                let prod = a.entry(i, j).scale_by_term(&R::one(), m);
                let col: BTreeMap<MonomialVector, R> = prod
                    .terms()
                    .map(|(mv, c)| (mv.clone(), c.clone()))
                    .collect();
                for mv in col.keys() {
                    let next = row_index.len();
                    row_index.entry((i, mv.clone())).or_insert(next);
                }
                per_eq.push(col);
            }
            columns.push(per_eq);
        }
    }
    let nrows = row_index.len();
    let mut mat = vec![vec![R::zero(); unknowns]; nrows];
    for (u, per_eq) in columns.iter().enumerate() {
        for (i, col) in per_eq.iter().enumerate() {
            for (mv, c) in col {
                mat[row_index[&(i, mv.clone())]][u] = c.clone();
            }
        }
    }
    let basis = R::null_basis(&mat, unknowns);
    let mut out = Vec::with_capacity(basis.len());
    for v in basis {
        let mut entry_polys = Vec::with_capacity(s);
        for j in 0..s {
            let mut p = PolyVector::zero(ctx.clone());
            for (t, m) in monos.iter().enumerate() {
                let c = v[j * monos.len() + t].clone();
                if !c.is_zero() {
                    p = p.add(&PolyVector::term(
                        ctx.clone(),
                        c,
                        MonomialVector::new(m.exps.clone(), 1),
                    ));
                }
            }
            entry_polys.push(p);
        }
        out.push(entry_polys);
    }
    Ok(out)
}
