//! S-polynomial vectors, the augmentation step, soft reduction and
//! normalization, and the completion loops for strong and reduced strong
//! Groebner bases.

use std::collections::HashSet;

use crate::division::euclidean_divide;
use crate::error::Error;
use crate::euclid::EuclideanScalar;
use crate::polyvec::{
    div_delta_leq, lep_compare, AdmissibleOrder, MonomialVector, PolyVector, TermVector,
};

/// Options for the completion engine.
#[derive(Clone, Debug)]
pub struct EngineOpts {
    /// Certify pairs with coprime leading monomials and a unit leading
    /// coefficient without reduction.
    pub coprime_skip: bool,
    /// Emit a line per engine step on stderr.
    pub trace: bool,
}

impl Default for EngineOpts {
    fn default() -> Self {
        EngineOpts { coprime_skip: true, trace: false }
    }
}

fn lcm_mono(a: &MonomialVector, b: &MonomialVector) -> MonomialVector {
    debug_assert_eq!(a.comp, b.comp);
    MonomialVector {
        comp: a.comp,
        exps: a
            .exps
            .iter()
            .zip(&b.exps)
            .map(|(x, y)| *x.max(y))
            .collect(),
    }
}

/// The S-polynomial vector of the ordered pair `(f, g)`:
/// `x^{gamma - alpha} f - q x^{gamma - beta} g` with `gamma` the join of the
/// leading monomials and `q` the canonical minimal quotient of the leading
/// coefficients. Returns zero when the leading components differ; requires
/// `delta(Lc f) >= delta(Lc g)`.
pub fn spoly<R: EuclideanScalar>(
    f: &PolyVector<R>,
    g: &PolyVector<R>,
    ord: &AdmissibleOrder,
) -> Result<PolyVector<R>, Error> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput("spoly"));
    }
    let lf = f.leading(ord)?;
    let lg = g.leading(ord)?;
    if lf.lm.comp != lg.lm.comp {
        return Ok(PolyVector::zero(f.ctx().clone()));
    }
    if lf.lc.delta() < lg.lc.delta() {
        return Err(Error::ShapeMismatch(
            "spoly requires delta(Lc f) >= delta(Lc g)".into(),
        ));
    }
    let gamma = lcm_mono(&lf.lm, &lg.lm);
    let mf = MonomialVector::quotient(&gamma, &lf.lm)?;
    let mg = MonomialVector::quotient(&gamma, &lg.lm)?;
    let q = R::min_quotient(&lf.lc, &lg.lc)?;
    Ok(f
        .scale_by_term(&R::one(), &mf)
        .sub(&g.scale_by_term(&q, &mg)))
}

/// Set-semantics S-polynomial: orients the pair so that the leading
/// coefficient of larger grade comes first; zero when the leading
/// components differ.
pub fn spoly_of_set<R: EuclideanScalar>(
    f: &PolyVector<R>,
    g: &PolyVector<R>,
    ord: &AdmissibleOrder,
) -> Result<PolyVector<R>, Error> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput("spoly"));
    }
    let df = f.leading(ord)?.lc.delta();
    let dg = g.leading(ord)?.lc.delta();
    if df >= dg {
        spoly(f, g, ord)
    } else {
        spoly(g, f, ord)
    }
}

/// The coprimality criterion: the pair may be certified without reduction
/// when both vectors live in one identical component, one leading
/// coefficient is a unit, and the leading monomials are coprime.
pub fn coprime_skip<R: EuclideanScalar>(
    f: &PolyVector<R>,
    g: &PolyVector<R>,
    ord: &AdmissibleOrder,
) -> bool {
    if f.is_zero() || g.is_zero() {
        return false;
    }
    let (Some(cf), Some(cg)) = (f.sole_component(), g.sole_component()) else {
        return false;
    };
    if cf != cg {
        return false;
    }
    let lf = f.leading(ord).unwrap();
    let lg = g.leading(ord).unwrap();
    if !lf.lc.is_unit() && !lg.lc.is_unit() {
        return false;
    }
    lf.lm
        .exps
        .iter()
        .zip(&lg.lm.exps)
        .all(|(a, b)| *a == 0 || *b == 0)
}

/// Among the elements of `basis` whose `Deg_delta` divides `target`, the
/// index minimizing `(delta(Lc), position)`.
fn delta_minimal_divisor<R: EuclideanScalar>(
    basis: &[PolyVector<R>],
    target: &crate::polyvec::DegDelta,
    ord: &AdmissibleOrder,
) -> Option<usize> {
    basis
        .iter()
        .enumerate()
        .filter(|(_, g)| div_delta_leq(&g.deg_delta(ord).unwrap(), target))
        .min_by(|(i, g1), (j, g2)| {
            let d1 = g1.leading(ord).unwrap().lc.delta();
            let d2 = g2.leading(ord).unwrap().lc.delta();
            d1.cmp(&d2).then(i.cmp(j))
        })
        .map(|(i, _)| i)
}

/// Outcome of one augmentation: the optional adjoined element and whether
/// the pair is now certified.
pub struct AugmentOutcome<R: EuclideanScalar> {
    pub basis: Vec<PolyVector<R>>,
    pub adjoined: Option<PolyVector<R>>,
    pub certified: bool,
}

/// One augmentation step on the pair `(basis[p], basis[q])`.
pub fn augment<R: EuclideanScalar>(
    basis: &[PolyVector<R>],
    p: usize,
    q: usize,
    ord: &AdmissibleOrder,
) -> Result<AugmentOutcome<R>, Error> {
    if p == q || p >= basis.len() || q >= basis.len() {
        return Err(Error::PairNotInBasis);
    }
    let h = spoly_of_set(&basis[p], &basis[q], ord)?;
    let (adjoined, certified) = augment_core(basis, h, ord);
    let mut out = basis.to_vec();
    if let Some(r) = &adjoined {
        if !out.contains(r) {
            out.push(r.clone());
        }
    }
    Ok(AugmentOutcome { basis: out, adjoined, certified })
}

/// The four-branch case split of the augmentation algorithm applied to the
/// S-polynomial `h`. Returns the element to adjoin (if any) and the
/// certification flag.
fn augment_core<R: EuclideanScalar>(
    basis: &[PolyVector<R>],
    h: PolyVector<R>,
    ord: &AdmissibleOrder,
) -> (Option<PolyVector<R>>, bool) {
    if h.is_zero() {
        return (None, true);
    }
    let hlead = h.leading(ord).unwrap();
    let hlt = TermVector::new(hlead.lc.clone(), hlead.lm.clone());
    // exact leading-term divisor, delta-minimal then first
    let exact = basis
        .iter()
        .enumerate()
        .filter(|(_, g)| {
            let gl = g.leading(ord).unwrap();
            TermVector::divides(&TermVector::new(gl.lc, gl.lm), &hlt)
        })
        .min_by(|(i, g1), (j, g2)| {
            let d1 = g1.leading(ord).unwrap().lc.delta();
            let d2 = g2.leading(ord).unwrap().lc.delta();
            d1.cmp(&d2).then(i.cmp(j))
        })
        .map(|(i, _)| i);
    if let Some(gi) = exact {
        let gl = basis[gi].leading(ord).unwrap();
        let (c, m) = TermVector::quotient(&hlt, &TermVector::new(gl.lc, gl.lm)).unwrap();
        let f1 = h.sub(&basis[gi].scale_by_term(&c, &m));
        if f1.is_zero() {
            return (None, true);
        }
        let e = euclidean_divide(&f1, basis, ord).unwrap();
        if e.remainder.is_zero() {
            (None, true)
        } else {
            (Some(e.remainder), true)
        }
    } else if let Some(gi) = delta_minimal_divisor(basis, &h.deg_delta(ord).unwrap(), ord) {
        let gl = basis[gi].leading(ord).unwrap();
        let m = MonomialVector::quotient(&hlead.lm, &gl.lm).unwrap();
        let q = R::min_quotient(&hlead.lc, &gl.lc).unwrap();
        let f1 = h.sub(&basis[gi].scale_by_term(&q, &m));
        debug_assert!(!f1.is_zero());
        (Some(f1), false)
    } else {
        (Some(h), false)
    }
}

/// Whether `g` is normalized: no unit multiple has a strictly smaller
/// refined grade on the leading coefficient.
pub fn is_normalized<R: EuclideanScalar>(g: &PolyVector<R>, ord: &AdmissibleOrder) -> bool {
    let lc = g.leading(ord).unwrap().lc;
    let u = R::normalizing_unit(&lc).unwrap();
    u.ring_mul(&lc) == lc
}

/// Whether some term of `f` can be reduced modulo `others` (coefficient
/// strictly improves in refined grade under the canonical quotient).
pub fn is_reducible<R: EuclideanScalar>(
    f: &PolyVector<R>,
    others: &[PolyVector<R>],
    ord: &AdmissibleOrder,
) -> bool {
    for (m, a) in f.terms() {
        for h in others {
            if h.is_zero() {
                continue;
            }
            let hl = h.leading(ord).unwrap();
            if !hl.lm.divides(m) {
                continue;
            }
            let q = R::min_quotient(a, &hl.lc).unwrap();
            if a.ring_sub(&q.ring_mul(&hl.lc)).hat_delta() < a.hat_delta() {
                return true;
            }
        }
    }
    false
}

/// Whether `f` is softly reducible by `others`: its tail is reducible, or
/// some leading term in `others` divides its leading term exactly.
pub fn is_softly_reducible<R: EuclideanScalar>(
    f: &PolyVector<R>,
    others: &[PolyVector<R>],
    ord: &AdmissibleOrder,
) -> bool {
    let fl = f.leading(ord).unwrap();
    let flt = TermVector::new(fl.lc, fl.lm.clone());
    for h in others {
        let hl = h.leading(ord).unwrap();
        if TermVector::divides(&TermVector::new(hl.lc, hl.lm), &flt) {
            return true;
        }
    }
    let tail = f.sub(&PolyVector::term(f.ctx().clone(), flt.coeff, flt.mono));
    if tail.is_zero() {
        return false;
    }
    is_reducible(&tail, others, ord)
}

pub fn is_softly_reduced<R: EuclideanScalar>(
    basis: &[PolyVector<R>],
    ord: &AdmissibleOrder,
) -> bool {
    basis.iter().enumerate().all(|(i, f)| {
        let others: Vec<_> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        !is_softly_reducible(f, &others, ord)
    })
}

/// A reduced basis: normalized and no element reducible by the rest.
pub fn is_reduced<R: EuclideanScalar>(basis: &[PolyVector<R>], ord: &AdmissibleOrder) -> bool {
    basis.iter().enumerate().all(|(i, f)| {
        let others: Vec<_> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        is_normalized(f, ord) && !is_reducible(f, &others, ord)
    })
}

/// One soft-reduction step: rewrites (or removes) the largest softly
/// reducible element, eliminating its leading term exactly or strictly
/// shrinking a lower coefficient.
pub fn softly_reduce_step<R: EuclideanScalar>(
    basis: &[PolyVector<R>],
    ord: &AdmissibleOrder,
) -> Result<Vec<PolyVector<R>>, Error> {
    let fi = pick_soft_target(basis, ord).ok_or(Error::AlreadyReduced("softly reduced"))?;
    let (hi, mono, q) = soft_reduction_of(basis, fi, ord).unwrap();
    let f = &basis[fi];
    let h = &basis[hi];
    let m = MonomialVector::quotient(&mono, &h.leading(ord).unwrap().lm).unwrap();
    let r = f.sub(&h.scale_by_term(&q, &m));
    let mut out: Vec<PolyVector<R>> = Vec::with_capacity(basis.len());
    for (i, g) in basis.iter().enumerate() {
        if i == fi {
            if !r.is_zero() {
                out.push(r.clone());
            }
        } else {
            out.push(g.clone());
        }
    }
    Ok(out)
}

/// The largest softly reducible element (by the `<=_P` order, then first).
fn pick_soft_target<R: EuclideanScalar>(
    basis: &[PolyVector<R>],
    ord: &AdmissibleOrder,
) -> Option<usize> {
    basis
        .iter()
        .enumerate()
        .filter(|(i, _)| soft_reduction_of(basis, *i, ord).is_some())
        .max_by(|(i, f), (j, g)| lep_compare(f, g, ord).then(j.cmp(i)))
        .map(|(i, _)| i)
}

/// The soft reduction applied to `basis[fi]`, if one exists: the reducer
/// index, the touched monomial of `f` and the quotient. Terms are scanned
/// in decreasing order; reducers minimize `(delta(Lc), position)`.
fn soft_reduction_of<R: EuclideanScalar>(
    basis: &[PolyVector<R>],
    fi: usize,
    ord: &AdmissibleOrder,
) -> Option<(usize, MonomialVector, R)> {
    let f = &basis[fi];
    let flm = f.leading(ord).unwrap().lm;
    for (mono, a) in f.sorted_terms(ord) {
        let leading = mono == flm;
        let candidate = basis
            .iter()
            .enumerate()
            .filter(|(hi, _)| *hi != fi)
            .filter_map(|(hi, h)| {
                let hl = h.leading(ord).unwrap();
                if !hl.lm.divides(&mono) {
                    return None;
                }
                if leading {
                    let q = R::exact_div(&a, &hl.lc)?;
                    Some((hi, hl.lc.delta(), q))
                } else {
                    let q = R::min_quotient(&a, &hl.lc).unwrap();
                    if a.ring_sub(&q.ring_mul(&hl.lc)).hat_delta() < a.hat_delta() {
                        Some((hi, hl.lc.delta(), q))
                    } else {
                        None
                    }
                }
            })
            .min_by(|(i, d1, _), (j, d2, _)| d1.cmp(d2).then(i.cmp(j)));
        if let Some((hi, _, q)) = candidate {
            return Some((hi, mono, q));
        }
    }
    None
}

/// One normalization step: multiplies the first non-normalized element by
/// its normalizing unit.
pub fn normalize_step<R: EuclideanScalar>(
    basis: &[PolyVector<R>],
    ord: &AdmissibleOrder,
) -> Result<Vec<PolyVector<R>>, Error> {
    let gi = basis
        .iter()
        .position(|g| !is_normalized(g, ord))
        .ok_or(Error::AlreadyReduced("normalized"))?;
    let lc = basis[gi].leading(ord).unwrap().lc;
    let u = R::normalizing_unit(&lc).unwrap();
    let mut out = basis.to_vec();
    out[gi] = basis[gi].scale(&u);
    Ok(out)
}

struct Engine<R: EuclideanScalar> {
    ord: AdmissibleOrder,
    elems: Vec<(u64, PolyVector<R>)>,
    next_id: u64,
    queue: Vec<(u64, u64, MonomialVector)>,
    queue_dirty: bool,
    certified: HashSet<(u64, u64)>,
    opts: EngineOpts,
}

impl<R: EuclideanScalar> Engine<R> {
    fn new(gens: &[PolyVector<R>], ord: &AdmissibleOrder, opts: EngineOpts) -> Result<Self, Error> {
        if gens.is_empty() {
            return Err(Error::ZeroInput("empty generating set"));
        }
        let mut eng = Engine {
            ord: ord.clone(),
            elems: Vec::new(),
            next_id: 0,
            queue: Vec::new(),
            queue_dirty: false,
            certified: HashSet::new(),
            opts,
        };
        for g in gens {
            if g.is_zero() {
                return Err(Error::ZeroInput("zero generator"));
            }
            eng.insert(g.clone());
        }
        Ok(eng)
    }

    fn trace(&self, msg: impl FnOnce() -> String) {
        if self.opts.trace {
            eprintln!("gb: {}", msg());
        }
    }

    fn contains(&self, g: &PolyVector<R>) -> bool {
        self.elems.iter().any(|(_, e)| e == g)
    }

    /// Adds a new element and enqueues its pairs against the current basis.
    /// Pairs with distinct leading components have a zero S-polynomial and
    /// are certified outright.
    fn insert(&mut self, g: PolyVector<R>) {
        if self.contains(&g) {
            return;
        }
        let id = self.next_id;
        self.next_id += 1;
        let glead = g.leading(&self.ord).unwrap();
        let mut news = Vec::new();
        for (pid, p) in &self.elems {
            let plead = p.leading(&self.ord).unwrap();
            if plead.lm.comp != glead.lm.comp {
                news.push((*pid, id, None));
            } else {
                news.push((*pid, id, Some(lcm_mono(&plead.lm, &glead.lm))));
            }
        }
        for (a, b, key) in news {
            match key {
                None => self.certify(a, b),
                Some(k) => {
                    self.queue.push((a, b, k));
                    self.queue_dirty = true;
                }
            }
        }
        self.elems.push((id, g));
    }

    fn remove(&mut self, id: u64) {
        self.elems.retain(|(i, _)| *i != id);
    }

    fn get(&self, id: u64) -> Option<&PolyVector<R>> {
        self.elems.iter().find(|(i, _)| *i == id).map(|(_, g)| g)
    }

    fn basis_vec(&self) -> Vec<PolyVector<R>> {
        self.elems.iter().map(|(_, g)| g.clone()).collect()
    }

    fn certify(&mut self, a: u64, b: u64) {
        let key = (a.min(b), a.max(b));
        self.certified.insert(key);
    }

    /// Pops the uncertified live pair with the smallest leading-monomial
    /// lcm (the normal selection strategy); ties break on the ids.
    fn next_pair(&mut self) -> Option<(u64, u64)> {
        if self.queue_dirty {
            let ord = self.ord.clone();
            // descending, so the smallest pair sits at the end
            self.queue.sort_by(|(a1, b1, k1), (a2, b2, k2)| {
                ord.compare(k2, k1).then(a2.cmp(a1)).then(b2.cmp(b1))
            });
            self.queue_dirty = false;
        }
        while let Some((a, b, _)) = self.queue.pop() {
            if self.certified.contains(&(a.min(b), a.max(b))) {
                continue;
            }
            if self.get(a).is_none() || self.get(b).is_none() {
                continue;
            }
            return Some((a, b));
        }
        None
    }

    /// Reduces every term strictly below the leading monomial of `f` to its
    /// minimal refined grade modulo the leading terms of `basis`. The
    /// leading term of `f` is kept, so the result is nonzero.
    fn tail_reduce(&self, mut f: PolyVector<R>, basis: &[PolyVector<R>]) -> PolyVector<R> {
        let ord = self.ord.clone();
        'outer: loop {
            let flm = f.leading(&ord).unwrap().lm;
            for (mono, a) in f.sorted_terms(&ord) {
                if mono == flm {
                    continue;
                }
                let best = basis
                    .iter()
                    .enumerate()
                    .filter_map(|(i, h)| {
                        let hl = h.leading(&ord).unwrap();
                        if !hl.lm.divides(&mono) {
                            return None;
                        }
                        let q = R::min_quotient(&a, &hl.lc).unwrap();
                        if a.ring_sub(&q.ring_mul(&hl.lc)).hat_delta() < a.hat_delta() {
                            Some((i, hl.lc.delta(), q))
                        } else {
                            None
                        }
                    })
                    .min_by(|(i, d1, _), (j, d2, _)| d1.cmp(d2).then(i.cmp(j)));
                if let Some((hi, _, q)) = best {
                    let h = &basis[hi];
                    let m = MonomialVector::quotient(&mono, &h.leading(&ord).unwrap().lm).unwrap();
                    f = f.sub(&h.scale_by_term(&q, &m));
                    continue 'outer;
                }
            }
            return f;
        }
    }

    /// Augments one pair; returns false when no uncertified pair remains.
    fn augment_once(&mut self) -> bool {
        let Some((a, b)) = self.next_pair() else { return false };
        let p = self.get(a).unwrap().clone();
        let q = self.get(b).unwrap().clone();
        if self.opts.coprime_skip && coprime_skip(&p, &q, &self.ord) {
            self.trace(|| format!("skip coprime pair ({a}, {b})"));
            self.certify(a, b);
            // requeue nothing: the criterion certifies the pair outright
            return true;
        }
        let basis = self.basis_vec();
        let h = spoly_of_set(&p, &q, &self.ord).unwrap();
        if h.is_zero() {
            self.trace(|| format!("augment pair ({a}, {b}): zero s-polynomial"));
            self.certify(a, b);
            return true;
        }
        // Fast path: a full Euclidean division certifies the pair at once
        // when it yields a strong standard representation; a nonzero
        // remainder is adjoined whole and the pair retried. Both moves are
        // compositions of single augmentation steps.
        let e = euclidean_divide(&h, &basis, &self.ord).unwrap();
        if !e.remainder.is_zero() {
            // the division steps, the tail-reduction steps and the reduced
            // remainder itself form a strong standard representation of h,
            // so adjoining the remainder certifies the pair
            let r = self.tail_reduce(e.remainder, &basis);
            self.trace(|| {
                format!(
                    "augment pair ({a}, {b}): adjoin remainder with {} terms (elems {}, queue {})",
                    r.num_terms(),
                    self.elems.len(),
                    self.queue.len()
                )
            });
            self.insert(r);
            self.certify(a, b);
            return true;
        }
        if crate::division::check_strong_standard(&h, &basis, &e, &self.ord) {
            self.trace(|| format!("augment pair ({a}, {b}): certified by division"));
            self.certify(a, b);
            return true;
        }
        let (adjoined, certified) = augment_core(&basis, h, &self.ord);
        if let Some(r) = adjoined {
            self.trace(|| {
                format!(
                    "augment pair ({a}, {b}): adjoin element with {} terms (elems {}, queue {})",
                    r.num_terms(),
                    self.elems.len(),
                    self.queue.len()
                )
            });
            self.insert(r);
        } else {
            self.trace(|| format!("augment pair ({a}, {b}): nothing to adjoin"));
        }
        if certified {
            self.certify(a, b);
        } else {
            let key = lcm_mono(
                &p.leading(&self.ord).unwrap().lm,
                &q.leading(&self.ord).unwrap().lm,
            );
            self.queue.push((a, b, key));
            self.queue_dirty = true;
        }
        true
    }

    /// One normalization step if some element is not normalized.
    fn normalize_once(&mut self) -> bool {
        let target = self
            .elems
            .iter()
            .find(|(_, g)| !is_normalized(g, &self.ord))
            .map(|(i, g)| (*i, g.clone()));
        let Some((id, g)) = target else { return false };
        let lc = g.leading(&self.ord).unwrap().lc;
        let u = R::normalizing_unit(&lc).unwrap();
        self.trace(|| format!("normalize element {id}"));
        self.remove(id);
        self.insert(g.scale(&u));
        true
    }

    /// One soft-reduction pass if the basis is not softly reduced: the
    /// chosen element is reduced to a softly reduced form against the rest
    /// of the basis before it is reinserted.
    fn soft_reduce_once(&mut self) -> bool {
        let basis = self.basis_vec();
        let Some(fi) = pick_soft_target(&basis, &self.ord) else { return false };
        let fid = self.elems[fi].0;
        let mut working = basis.clone();
        loop {
            let Some((hi, mono, q)) = soft_reduction_of(&working, fi, &self.ord) else { break };
            let h = &working[hi];
            let m = MonomialVector::quotient(&mono, &h.leading(&self.ord).unwrap().lm).unwrap();
            let r = working[fi].sub(&h.scale_by_term(&q, &m));
            if r.is_zero() {
                self.trace(|| format!("soft-reduce element {fid}: reduced to zero"));
                self.remove(fid);
                return true;
            }
            working[fi] = r;
        }
        self.trace(|| format!("soft-reduce element {fid}"));
        let r = working[fi].clone();
        self.remove(fid);
        self.insert(r);
        true
    }

    /// The strong Groebner basis loop: augmentation only.
    fn run_sgb(&mut self) {
        while self.augment_once() {}
    }

    /// The reduced loop: drain the pair queue, then normalize and softly
    /// reduce; reduction rewrites reopen pairs, so the drain repeats until
    /// the basis is both certified and reduced.
    fn run_rsgb(&mut self) {
        loop {
            while self.augment_once() {}
            if self.normalize_once() {
                continue;
            }
            if self.soft_reduce_once() {
                continue;
            }
            break;
        }
    }
}

/// Computes a strong Groebner basis of the module generated by `gens`.
pub fn strong_groebner<R: EuclideanScalar>(
    gens: &[PolyVector<R>],
    ord: &AdmissibleOrder,
    opts: &EngineOpts,
) -> Result<Vec<PolyVector<R>>, Error> {
    let mut eng = Engine::new(gens, ord, opts.clone())?;
    eng.run_sgb();
    Ok(eng.basis_vec())
}

/// Computes the unique reduced strong Groebner basis of the module
/// generated by `gens`, returned in strictly decreasing `<=_P` order.
pub fn reduced_strong_groebner<R: EuclideanScalar>(
    gens: &[PolyVector<R>],
    ord: &AdmissibleOrder,
    opts: &EngineOpts,
) -> Result<Vec<PolyVector<R>>, Error> {
    let mut eng = Engine::new(gens, ord, opts.clone())?;
    eng.run_rsgb();
    let mut out = eng.basis_vec();
    out.sort_by(|p, q| lep_compare(q, p, ord));
    Ok(out)
}

/// Deterministic generator for verification sampling.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Verifies the strong Groebner basis property: (i) every pair's
/// S-polynomial is zero or Euclidean-divides to remainder zero as a strong
/// standard representation, and (ii) sampled module elements divide to
/// remainder zero.
pub fn verify_strong_gb<R: EuclideanScalar>(
    basis: &[PolyVector<R>],
    ord: &AdmissibleOrder,
    samples: usize,
) -> bool {
    if basis.iter().any(|g| g.is_zero()) {
        return false;
    }
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let h = match spoly_of_set(&basis[i], &basis[j], ord) {
                Ok(h) => h,
                Err(_) => return false,
            };
            if h.is_zero() {
                continue;
            }
            let Ok(e) = euclidean_divide(&h, basis, ord) else { return false };
            if !e.remainder.is_zero() {
                return false;
            }
            if !crate::division::check_strong_standard(&h, basis, &e, ord) {
                return false;
            }
        }
    }
    if basis.is_empty() {
        return true;
    }
    let nvars = basis[0].ctx().nvars();
    let mut rng = SplitMix64(0x5eed_0001);
    for _ in 0..samples {
        let mut f = PolyVector::zero(basis[0].ctx().clone());
        for g in basis {
            let c = R::from_i64(rng.below(7) as i64 - 3);
            let exps: Vec<u32> = (0..nvars).map(|_| rng.below(3) as u32).collect();
            f = f.add(&g.scale_by_term(&c, &crate::polyvec::Monomial { exps }));
        }
        if f.is_zero() {
            continue;
        }
        let Ok(e) = euclidean_divide(&f, basis, ord) else { return false };
        if !e.remainder.is_zero() {
            return false;
        }
    }
    true
}

/// Module membership against a strong Groebner basis: remainder of the
/// Euclidean division is zero.
pub fn member<R: EuclideanScalar>(
    f: &PolyVector<R>,
    basis: &[PolyVector<R>],
    ord: &AdmissibleOrder,
) -> bool {
    if f.is_zero() {
        return true;
    }
    match euclidean_divide(f, basis, ord) {
        Ok(e) => e.remainder.is_zero(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyvec::Context;
    use crate::text::{format_vector, parse_vector};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::One;
    use std::sync::Arc;

    fn ctx(k: usize) -> Arc<Context> {
        Context::new(vec!["x".into(), "y".into()], k)
    }

    fn pv(c: &Arc<Context>, s: &str) -> PolyVector<BigInt> {
        parse_vector(c, s).unwrap()
    }

    fn pq(c: &Arc<Context>, s: &str) -> PolyVector<BigRational> {
        parse_vector(c, s).unwrap()
    }

    fn opts() -> EngineOpts {
        EngineOpts::default()
    }

    #[test]
    fn spoly_intro_example() {
        let c = ctx(3);
        let ord = AdmissibleOrder::pot_lex(3);
        let f = pv(&c, "(10*x^2*y^2 + y, 0, x)");
        let g = pv(&c, "(4*x^3*y + x^2, 1, 0)");
        let h = spoly(&f, &g, &ord).unwrap();
        assert_eq!(h, pv(&c, "(2*x^3*y^2 - 2*x^2*y + x*y, -2*y, x^2)"));
        assert_eq!(spoly_of_set(&f, &g, &ord).unwrap(), h);
        assert_eq!(spoly_of_set(&g, &f, &ord).unwrap(), h);
    }

    #[test]
    fn spoly_different_components_is_zero() {
        let c = ctx(2);
        let ord = AdmissibleOrder::pot_lex(2);
        let f = pv(&c, "(x, 0)");
        let g = pv(&c, "(0, y)");
        assert!(spoly(&f, &g, &ord).unwrap().is_zero());
        assert!(spoly_of_set(&f, &g, &ord).unwrap().is_zero());
    }

    #[test]
    fn spoly_coprime_pair() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let p2 = pv(&c, "4*y + 1");
        let p1 = pv(&c, "2*x + 1");
        let h = spoly(&p2, &p1, &ord).unwrap();
        assert_eq!(h, pv(&c, "x - 2*y"));
        // wrong orientation rejected
        assert!(spoly(&p1, &p2, &ord).is_err());
    }

    #[test]
    fn coprime_skip_cases() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        assert!(coprime_skip(&pv(&c, "x^2 + y"), &pv(&c, "y^3 + 1"), &ord));
        assert!(!coprime_skip(&pv(&c, "2*x + 1"), &pv(&c, "4*y + 1"), &ord));
        let c2 = ctx(2);
        let ord2 = AdmissibleOrder::pot_lex(2);
        let f: PolyVector<BigInt> = parse_vector(&c2, "(x, 0)").unwrap();
        let g: PolyVector<BigInt> = parse_vector(&c2, "(0, y)").unwrap();
        assert!(!coprime_skip(&f, &g, &ord2));
    }

    #[test]
    fn augment_intro_pair_adjoins_spoly() {
        let c = ctx(3);
        let ord = AdmissibleOrder::pot_lex(3);
        let basis = vec![
            pv(&c, "(10*x^2*y^2 + y, 0, x)"),
            pv(&c, "(4*x^3*y + x^2, 1, 0)"),
        ];
        let out = augment(&basis, 0, 1, &ord).unwrap();
        assert!(!out.certified);
        assert_eq!(
            out.adjoined.unwrap(),
            pv(&c, "(2*x^3*y^2 - 2*x^2*y + x*y, -2*y, x^2)")
        );
        assert_eq!(out.basis.len(), 3);
    }

    #[test]
    fn augment_zero_spoly_certifies() {
        let c = ctx(2);
        let ord = AdmissibleOrder::pot_lex(2);
        let basis = vec![
            parse_vector::<BigInt>(&c, "(x, 0)").unwrap(),
            parse_vector::<BigInt>(&c, "(0, y)").unwrap(),
        ];
        let out = augment(&basis, 0, 1, &ord).unwrap();
        assert!(out.certified);
        assert!(out.adjoined.is_none());
        assert_eq!(out.basis, basis);
    }

    #[test]
    fn augment_exact_divisor_branch() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        // spoly of (3y, 2x) is xy; with xy present branch (b) certifies
        let basis = vec![pv(&c, "2*x"), pv(&c, "3*y"), pv(&c, "x*y")];
        let out = augment(&basis, 0, 1, &ord).unwrap();
        assert!(out.certified);
        assert!(out.adjoined.is_none());
        assert!(augment(&basis, 0, 0, &ord).is_err());
        assert!(augment(&basis, 0, 9, &ord).is_err());
    }

    #[test]
    fn strong_groebner_singleton() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let f = pv(&c, "3*x^2 - y");
        let g = strong_groebner(&[f.clone()], &ord, &opts()).unwrap();
        assert_eq!(g, vec![f]);
    }

    #[test]
    fn strong_groebner_two_x_three_y() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let gens = vec![pv(&c, "2*x"), pv(&c, "3*y")];
        let g = strong_groebner(&gens, &ord, &opts()).unwrap();
        for wanted in ["2*x", "3*y", "x*y"] {
            assert!(g.contains(&pv(&c, wanted)), "missing {wanted}");
        }
        assert!(verify_strong_gb(&g, &ord, 50));
    }

    #[test]
    fn soft_reduce_leading_term_case() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let basis = vec![pv(&c, "x"), pv(&c, "x + 3")];
        let h = softly_reduce_step(&basis, &ord).unwrap();
        assert_eq!(h, vec![pv(&c, "x"), pv(&c, "3")]);
    }

    #[test]
    fn soft_reduce_lower_term_case() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let basis = vec![pv(&c, "2"), pv(&c, "x + 5")];
        let h = softly_reduce_step(&basis, &ord).unwrap();
        assert_eq!(h, vec![pv(&c, "2"), pv(&c, "x + 1")]);
    }

    #[test]
    fn soft_reduce_removes_multiple() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let g = pv(&c, "x + 1");
        let basis = vec![g.clone(), g.scale(&BigInt::from(1))];
        // duplicate collapses: f - 1*h = 0
        let basis = vec![basis[0].clone(), pv(&c, "x^2 + x")];
        let h = softly_reduce_step(&basis, &ord).unwrap();
        assert_eq!(h, vec![g]);
        assert!(softly_reduce_step(&h, &ord).is_err());
    }

    #[test]
    fn normalize_step_cases() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let h = normalize_step(&[pv(&c, "-2*x")], &ord).unwrap();
        assert_eq!(h, vec![pv(&c, "2*x")]);
        let hq = normalize_step(&[pq(&c, "3*x + 1")], &ord).unwrap();
        assert_eq!(hq, vec![pq(&c, "x + 1/3")]);
        assert!(normalize_step(&[pv(&c, "2*x")], &ord).is_err());
    }

    #[test]
    fn reduced_strong_groebner_two_x_three_y() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let g = reduced_strong_groebner(&[pv(&c, "2*x"), pv(&c, "3*y")], &ord, &opts()).unwrap();
        let printed: Vec<String> = g.iter().map(|f| format_vector(f, &ord)).collect();
        assert_eq!(printed, vec!["x*y", "2*x", "3*y"]);
        assert!(is_reduced(&g, &ord));
        assert!(is_softly_reduced(&g, &ord));
        assert!(verify_strong_gb(&g, &ord, 50));
    }

    #[test]
    fn reduced_strong_groebner_normalizes() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let g = reduced_strong_groebner(&[pv(&c, "-2*x")], &ord, &opts()).unwrap();
        assert_eq!(g, vec![pv(&c, "2*x")]);
    }

    #[test]
    fn coprime_flag_does_not_change_result() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let gens = vec![pv(&c, "x^2 + y"), pv(&c, "y^3 + 1"), pv(&c, "2*x + 1")];
        let on = reduced_strong_groebner(&gens, &ord, &opts()).unwrap();
        let off = reduced_strong_groebner(
            &gens,
            &ord,
            &EngineOpts { coprime_skip: false, trace: false },
        )
        .unwrap();
        assert_eq!(on, off);
    }

    #[test]
    fn verify_rejects_coprime_pair() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let basis = vec![pv(&c, "2*x + 1"), pv(&c, "4*y + 1")];
        assert!(!verify_strong_gb(&basis, &ord, 10));
    }

    #[test]
    fn verify_accepts_principal_ideal_over_field() {
        let c = Context::new(vec!["x".into()], 1);
        let ord = AdmissibleOrder::pot_lex(1);
        let basis = vec![parse_vector::<BigRational>(&c, "x").unwrap()];
        assert!(verify_strong_gb(&basis, &ord, 50));
    }

    #[test]
    fn member_cases() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let g = vec![pv(&c, "2*x"), pv(&c, "3*y"), pv(&c, "x*y")];
        assert!(member(&pv(&c, "x*y"), &g, &ord));
        assert!(!member(&pv(&c, "x"), &g, &ord));
        assert!(member(&PolyVector::zero(c.clone()), &g, &ord));
    }

    #[test]
    fn uniqueness_under_presentation_changes() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let f1 = pv(&c, "2*x + y");
        let f2 = pv(&c, "3*y^2 - 1");
        let base = reduced_strong_groebner(&[f1.clone(), f2.clone()], &ord, &opts()).unwrap();
        // shuffled, unit-scaled, and with a combination added
        let g1 = f2.scale(&BigInt::from(-1));
        let g2 = f1.add(&f2.scale_by_term(&BigInt::from(2), &crate::polyvec::Monomial {
            exps: vec![1, 0],
        }));
        let alt = reduced_strong_groebner(&[g1, g2, f1], &ord, &opts()).unwrap();
        assert_eq!(base, alt);
    }

    #[test]
    fn field_case_gives_monic_reduced_basis() {
        let c = ctx(1);
        let ord = AdmissibleOrder::pot_lex(1);
        let gens = vec![pq(&c, "2*x^2 + y"), pq(&c, "3*x*y - 1")];
        let g = reduced_strong_groebner(&gens, &ord, &opts()).unwrap();
        for f in &g {
            assert!(f.leading(&ord).unwrap().lc.is_one());
        }
        assert!(is_reduced(&g, &ord));
        assert!(verify_strong_gb(&g, &ord, 30));
    }
}
