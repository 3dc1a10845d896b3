//! Expressions, multivariate Euclidean division, and recognition of strong
//! standard representations.

use std::cmp::Ordering;

use crate::error::Error;
use crate::euclid::EuclideanScalar;
use crate::polyvec::{div_delta_leq, AdmissibleOrder, Monomial, PolyVector};

/// One summand `a * x^gamma * G[g_index]` of an expression.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExprStep<R: EuclideanScalar> {
    pub coeff: R,
    pub mono: Monomial,
    pub g_index: usize,
}

/// `f = sum_i coeff_i x^{gamma_i} G[i] + remainder`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expression<R: EuclideanScalar> {
    pub steps: Vec<ExprStep<R>>,
    pub remainder: PolyVector<R>,
}

impl<R: EuclideanScalar> Expression<R> {
    /// The value `sum_i a_i m_i g_i + remainder` that must equal the dividend.
    pub fn reconstruct(&self, divisors: &[PolyVector<R>]) -> Option<PolyVector<R>> {
        let mut acc = self.remainder.clone();
        for step in &self.steps {
            let g = divisors.get(step.g_index)?;
            acc = acc.add(&g.scale_by_term(&step.coeff, &step.mono));
        }
        Some(acc)
    }
}

/// Divides `f` by the set `G` of nonzero vectors, producing a Euclidean
/// expression. In each iteration the divisor applicable to the leading term
/// of the intermediate remainder with the smallest `(delta(Lc), position)`
/// is used, and the canonical minimal quotient is subtracted.
pub fn euclidean_divide<R: EuclideanScalar>(
    f: &PolyVector<R>,
    divisors: &[PolyVector<R>],
    ord: &AdmissibleOrder,
) -> Result<Expression<R>, Error> {
    if f.is_zero() {
        return Err(Error::ZeroInput("euclidean_divide dividend"));
    }
    if divisors.iter().any(|g| g.is_zero()) {
        return Err(Error::ZeroInput("euclidean_divide divisor"));
    }
    let lead_data: Vec<_> = divisors
        .iter()
        .map(|g| (g.deg_delta(ord).unwrap(), g.leading(ord).unwrap()))
        .collect();
    let mut steps = Vec::new();
    let mut r = f.clone();
    while !r.is_zero() {
        let rdd = r.deg_delta(ord).unwrap();
        let chosen = lead_data
            .iter()
            .enumerate()
            .filter(|(_, (gdd, _))| div_delta_leq(gdd, &rdd))
            .min_by(|(i, (d1, _)), (j, (d2, _))| {
                d1.grade.cmp(&d2.grade).then(i.cmp(j))
            });
        let Some((gi, (_, glead))) = chosen else { break };
        let rlead = r.leading(ord).unwrap();
        let m = crate::polyvec::MonomialVector::quotient(&rlead.lm, &glead.lm).unwrap();
        let q = R::min_quotient(&rlead.lc, &glead.lc).unwrap();
        debug_assert!(!q.is_zero(), "minimal quotient vanished during division");
        r = r.sub(&divisors[gi].scale_by_term(&q, &m));
        steps.push(ExprStep { coeff: q, mono: m, g_index: gi });
    }
    Ok(Expression { steps, remainder: r })
}

/// Checks that `e` is a Euclidean expression of `f` by `G`: exact
/// reconstruction, every summand's leading monomial bounded by `Lm(f)`, and
/// a remainder no divisor applies to.
pub fn check_euclidean<R: EuclideanScalar>(
    f: &PolyVector<R>,
    divisors: &[PolyVector<R>],
    e: &Expression<R>,
    ord: &AdmissibleOrder,
) -> bool {
    let Some(value) = e.reconstruct(divisors) else { return false };
    if value != *f {
        return false;
    }
    if !e.steps.is_empty() || !e.remainder.is_zero() {
        if f.is_zero() {
            return false;
        }
        let flm = f.leading(ord).unwrap().lm;
        for step in &e.steps {
            if step.coeff.is_zero() {
                return false;
            }
            let summand = divisors[step.g_index].scale_by_term(&step.coeff, &step.mono);
            if summand.is_zero() {
                return false;
            }
            let slm = summand.leading(ord).unwrap().lm;
            if ord.compare(&slm, &flm) == Ordering::Greater {
                return false;
            }
        }
    }
    if e.remainder.is_zero() {
        return true;
    }
    let rdd = e.remainder.deg_delta(ord).unwrap();
    !divisors
        .iter()
        .any(|g| !g.is_zero() && div_delta_leq(&g.deg_delta(ord).unwrap(), &rdd))
}

/// Checks that `rep` is a strong standard representation of `f` by `G`:
/// zero remainder, at least one summand, the first summand alone attains
/// `Lm(f)` and all later summands stay strictly below it.
pub fn check_strong_standard<R: EuclideanScalar>(
    f: &PolyVector<R>,
    divisors: &[PolyVector<R>],
    rep: &Expression<R>,
    ord: &AdmissibleOrder,
) -> bool {
    if f.is_zero() || !rep.remainder.is_zero() || rep.steps.is_empty() {
        return false;
    }
    let Some(value) = rep.reconstruct(divisors) else { return false };
    if value != *f {
        return false;
    }
    let flm = f.leading(ord).unwrap().lm;
    for (i, step) in rep.steps.iter().enumerate() {
        if step.coeff.is_zero() {
            return false;
        }
        let summand = divisors[step.g_index].scale_by_term(&step.coeff, &step.mono);
        if summand.is_zero() {
            return false;
        }
        let slm = summand.leading(ord).unwrap().lm;
        let cmp = ord.compare(&slm, &flm);
        if i == 0 {
            if cmp != Ordering::Equal {
                return false;
            }
        } else if cmp != Ordering::Less {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyvec::Context;
    use crate::text::parse_vector;
    use num_bigint::BigInt;
    use num_traits::One;
    use std::sync::Arc;

    fn ctx3() -> Arc<Context> {
        Context::new(vec!["x".into(), "y".into()], 3)
    }

    fn pv(c: &Arc<Context>, s: &str) -> PolyVector<BigInt> {
        parse_vector(c, s).unwrap()
    }

    #[test]
    fn first_step_of_intro_example() {
        let c = ctx3();
        let ord = AdmissibleOrder::pot_lex(3);
        let f = pv(&c, "(10*x^2*y^2 + y, 0, x)");
        let g = pv(&c, "(x - 2*y, 1, 0)");
        let e = euclidean_divide(&f, &[g.clone()], &ord).unwrap();
        // first step subtracts 10 x y^2 g
        assert_eq!(e.steps[0].coeff, BigInt::from(10));
        assert_eq!(e.steps[0].mono.exps, vec![1, 2]);
        let after_one = f.sub(&g.scale_by_term(&BigInt::from(10), &e.steps[0].mono));
        assert_eq!(after_one, pv(&c, "(20*x*y^3 + y, -10*x*y^2, x)"));
    }

    #[test]
    fn intro_example_to_completion() {
        let c = ctx3();
        let ord = AdmissibleOrder::pot_lex(3);
        let f = pv(&c, "(10*x^2*y^2 + y, 0, x)");
        let g = pv(&c, "(x - 2*y, 1, 0)");
        let e = euclidean_divide(&f, &[g.clone()], &ord).unwrap();
        assert_eq!(
            e.remainder,
            pv(&c, "(40*y^4 + y, -10*x*y^2 - 20*y^3, x)")
        );
        assert_eq!(e.reconstruct(&[g.clone()]).unwrap(), f);
        assert!(check_euclidean(&f, &[g], &e, &ord));
    }

    #[test]
    fn dividing_member_of_the_set() {
        let c = ctx3();
        let ord = AdmissibleOrder::pot_lex(3);
        let f = pv(&c, "(4*x^3*y + x^2, 1, 0)");
        let e = euclidean_divide(&f, &[f.clone()], &ord).unwrap();
        assert!(e.remainder.is_zero());
        assert_eq!(e.steps.len(), 1);
        assert!(e.steps[0].coeff.is_one());
        assert!(e.steps[0].mono.is_one());
        assert!(check_strong_standard(&f, &[f.clone()], &e, &ord));
    }

    #[test]
    fn zero_inputs_rejected() {
        let c = ctx3();
        let ord = AdmissibleOrder::pot_lex(3);
        let f = pv(&c, "(x, 0, 0)");
        assert!(euclidean_divide(&PolyVector::zero(c.clone()), &[f.clone()], &ord).is_err());
        assert!(euclidean_divide(&f, &[PolyVector::zero(c.clone())], &ord).is_err());
    }

    #[test]
    fn check_euclidean_rejects_bad_expressions() {
        let c = ctx3();
        let ord = AdmissibleOrder::pot_lex(3);
        let f = pv(&c, "(10*x^2*y^2 + y, 0, x)");
        let g = pv(&c, "(x - 2*y, 1, 0)");
        // stop the loop early: remainder still reducible
        let partial = Expression {
            steps: vec![ExprStep {
                coeff: BigInt::from(10),
                mono: Monomial { exps: vec![1, 2] },
                g_index: 0,
            }],
            remainder: pv(&c, "(20*x*y^3 + y, -10*x*y^2, x)"),
        };
        assert_eq!(partial.reconstruct(&[g.clone()]).unwrap(), f);
        assert!(!check_euclidean(&f, &[g.clone()], &partial, &ord));
        // summand exceeding Lm(f)
        let tall = Expression {
            steps: vec![ExprStep {
                coeff: BigInt::from(1),
                mono: Monomial { exps: vec![5, 5] },
                g_index: 0,
            }],
            remainder: f.sub(&g.scale_by_term(
                &BigInt::from(1),
                &Monomial { exps: vec![5, 5] },
            )),
        };
        assert_eq!(tall.reconstruct(&[g.clone()]).unwrap(), f);
        assert!(!check_euclidean(&f, &[g.clone()], &tall, &ord));
        // broken reconstruction
        let wrong = Expression { steps: vec![], remainder: g.clone() };
        assert!(!check_euclidean(&f, &[g], &wrong, &ord));
    }

    #[test]
    fn check_strong_standard_cases() {
        let c = ctx3();
        let ord = AdmissibleOrder::pot_lex(3);
        let g = pv(&c, "(x - 2*y, 1, 0)");
        let f = g.scale_by_term(&BigInt::from(3), &Monomial { exps: vec![1, 0] });
        let rep = Expression {
            steps: vec![ExprStep {
                coeff: BigInt::from(3),
                mono: Monomial { exps: vec![1, 0] },
                g_index: 0,
            }],
            remainder: PolyVector::zero(c.clone()),
        };
        assert!(check_strong_standard(&f, &[g.clone()], &rep, &ord));

        // two summands both of leading degree
        let h = g.scale_by_term(&BigInt::from(2), &Monomial { exps: vec![1, 0] });
        let bad = Expression {
            steps: vec![
                ExprStep {
                    coeff: BigInt::from(1),
                    mono: Monomial { exps: vec![1, 0] },
                    g_index: 0,
                },
                ExprStep {
                    coeff: BigInt::from(1),
                    mono: Monomial { exps: vec![1, 0] },
                    g_index: 0,
                },
            ],
            remainder: PolyVector::zero(c.clone()),
        };
        assert_eq!(bad.reconstruct(&[g.clone()]).unwrap(), h);
        assert!(!check_strong_standard(&h, &[g.clone()], &bad, &ord));
    }

    #[test]
    fn delta_minimal_divisor_preferred() {
        // both divisors apply to the leading term; the one with smaller
        // delta(Lc) must be chosen even though it comes later
        let c = Context::new(vec!["x".into()], 1);
        let ord = AdmissibleOrder::pot_lex(1);
        let f = pv2(&c, "6*x^2");
        let g1 = pv2(&c, "4*x");
        let g2 = pv2(&c, "2*x");
        let e = euclidean_divide(&f, &[g1, g2], &ord).unwrap();
        assert_eq!(e.steps[0].g_index, 1);
        assert!(e.remainder.is_zero());
    }

    fn pv2(c: &Arc<Context>, s: &str) -> PolyVector<BigInt> {
        parse_vector(c, s).unwrap()
    }
}
