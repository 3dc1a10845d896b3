//! Coefficient rings: exact arithmetic together with the Euclidean grading
//! `delta` and the injective refinement `hat_delta` that is used to pick
//! canonical remainders and unit normalizations.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Value of a grading function, encoded into the non-negative integers so
/// that comparison of grades is plain integer comparison.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GradeValue(BigUint);

impl GradeValue {
    pub fn from_u64(v: u64) -> Self {
        GradeValue(BigUint::from(v))
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<BigUint> for GradeValue {
    fn from(v: BigUint) -> Self {
        GradeValue(v)
    }
}

impl fmt::Display for GradeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of a Euclidean coefficient ring.
///
/// Implementations provide exact ring arithmetic, the grading `delta`, its
/// injective refinement `hat_delta`, and the canonical quotient selection
/// that every algorithm in this crate relies on. `quo_rem` delegates to
/// `min_quotient` so a single canonical division is used throughout.
pub trait EuclideanScalar:
    Clone + PartialEq + Eq + std::hash::Hash + fmt::Debug + Sized + Zero + One + 'static
{
    /// Ring tag used by the CLI and file formats ("Z", "Q").
    const NAME: &'static str;

    fn from_i64(v: i64) -> Self;
    fn is_unit(&self) -> bool;

    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;

    /// The Euclidean grading.
    fn delta(&self) -> GradeValue;

    /// The injective refinement of `delta`.
    fn hat_delta(&self) -> GradeValue;

    /// The quotient `q` minimizing `hat_delta(b - q a)`.
    fn min_quotient(b: &Self, a: &Self) -> Result<Self, Error>;

    /// Canonical Euclidean division: `b = q a + r` with `delta(r) < delta(a)`.
    fn quo_rem(b: &Self, a: &Self) -> Result<(Self, Self), Error> {
        let q = Self::min_quotient(b, a)?;
        let r = b.ring_sub(&q.ring_mul(a));
        Ok((q, r))
    }

    /// The unit `u` minimizing `hat_delta(u a)`.
    fn normalizing_unit(a: &Self) -> Result<Self, Error>;

    /// Extended gcd: `(d, u, v)` with `d = u a + v b`, `d` dividing both
    /// inputs and normalized so that `hat_delta(d)` is minimal among its
    /// associates.
    fn ext_gcd(a: &Self, b: &Self) -> Result<(Self, Self, Self), Error>;

    /// `b / a` when `a` divides `b` exactly, `None` otherwise.
    fn exact_div(b: &Self, a: &Self) -> Option<Self>;

    /// Parses a coefficient literal (`-12`, or `p/q` for the rationals).
    fn parse_literal(s: &str) -> Result<Self, String>;

    /// Splits off the sign used for canonical printing: `(negative, magnitude)`.
    fn sign_split(&self) -> (bool, Self);

    /// Canonical literal form, inverse of `parse_literal`.
    fn literal(&self) -> String;
}

/// The integers with `delta(z) = |z|` and `hat_delta(z) = 3|z| - sgn(z)`.
pub type IntegerScalar = BigInt;

/// The rationals with the 0/1 grading.
pub type RationalScalar = BigRational;

impl EuclideanScalar for BigInt {
    const NAME: &'static str = "Z";

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn is_unit(&self) -> bool {
        One::is_one(self.magnitude())
    }

    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn ring_neg(&self) -> Self {
        -self
    }

    fn delta(&self) -> GradeValue {
        GradeValue(self.magnitude().clone())
    }

    fn hat_delta(&self) -> GradeValue {
        // 3|z| - sgn(z); hence 0 < hat(1) < hat(-1) < hat(2) < hat(-2) < ...
        if Zero::is_zero(self) {
            return GradeValue(BigUint::zero());
        }
        let three_abs = self.magnitude() * 3u32;
        if self.is_positive() {
            GradeValue(three_abs - 1u32)
        } else {
            GradeValue(three_abs + 1u32)
        }
    }

    fn min_quotient(b: &Self, a: &Self) -> Result<Self, Error> {
        if Zero::is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        // Remainder in (-|a|/2, |a|/2], preferring the positive representative
        // on ties since hat_delta prefers positives.
        let abs_a = a.abs();
        let m = b.mod_floor(&abs_a);
        let r = if &m * 2 > abs_a { m - &abs_a } else { m };
        Ok((b - r) / a)
    }

    fn normalizing_unit(a: &Self) -> Result<Self, Error> {
        if Zero::is_zero(a) {
            return Err(Error::ZeroInput("normalizing_unit"));
        }
        Ok(BigInt::from(a.signum()))
    }

    fn ext_gcd(a: &Self, b: &Self) -> Result<(Self, Self, Self), Error> {
        if Zero::is_zero(a) && Zero::is_zero(b) {
            return Err(Error::ZeroInput("ext_gcd"));
        }
        let e = a.extended_gcd(b);
        let (mut d, mut u, mut v) = (e.gcd, e.x, e.y);
        if d.is_negative() {
            d = -d;
            u = -u;
            v = -v;
        }
        Ok((d, u, v))
    }

    fn exact_div(b: &Self, a: &Self) -> Option<Self> {
        if Zero::is_zero(a) {
            return None;
        }
        let (q, r) = b.div_rem(a);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }

    fn parse_literal(s: &str) -> Result<Self, String> {
        s.parse::<BigInt>().map_err(|_| format!("invalid integer literal `{s}`"))
    }

    fn sign_split(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }

    fn literal(&self) -> String {
        self.to_string()
    }
}

/// Injective encoding of a reduced fraction that is neither 0 nor 1 into
/// an integer >= 2. Only the relative order of 0, 1 and "everything else"
/// matters for the field case.
fn rational_pairing(r: &BigRational) -> BigUint {
    let p = r.numer();
    let q = r.denom().magnitude();
    // zigzag the numerator into N0, shift the denominator to N0
    let z: BigUint = if p.is_negative() {
        (p.magnitude() * 2u32) - 1u32
    } else {
        p.magnitude() * 2u32
    };
    let n = q - 1u32;
    // Cantor pairing
    let s = &z + &n;
    (&s * (&s + 1u32)) / 2u32 + n + BigUint::from(2u32)
}

impl EuclideanScalar for BigRational {
    const NAME: &'static str = "Q";

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_unit(&self) -> bool {
        !Zero::is_zero(self)
    }

    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn ring_neg(&self) -> Self {
        -self
    }

    fn delta(&self) -> GradeValue {
        if Zero::is_zero(self) {
            GradeValue(BigUint::zero())
        } else {
            GradeValue(BigUint::one())
        }
    }

    fn hat_delta(&self) -> GradeValue {
        if Zero::is_zero(self) {
            GradeValue(BigUint::zero())
        } else if One::is_one(self) {
            GradeValue(BigUint::one())
        } else {
            GradeValue(rational_pairing(self))
        }
    }

    fn min_quotient(b: &Self, a: &Self) -> Result<Self, Error> {
        if Zero::is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(b / a)
    }

    fn normalizing_unit(a: &Self) -> Result<Self, Error> {
        if Zero::is_zero(a) {
            return Err(Error::ZeroInput("normalizing_unit"));
        }
        Ok(a.recip())
    }

    fn ext_gcd(a: &Self, b: &Self) -> Result<(Self, Self, Self), Error> {
        if Zero::is_zero(a) && Zero::is_zero(b) {
            return Err(Error::ZeroInput("ext_gcd"));
        }
        if !Zero::is_zero(a) {
            Ok((Self::one(), a.recip(), Self::zero()))
        } else {
            Ok((Self::one(), Self::zero(), b.recip()))
        }
    }

    fn exact_div(b: &Self, a: &Self) -> Option<Self> {
        if Zero::is_zero(a) {
            None
        } else {
            Some(b / a)
        }
    }

    fn parse_literal(s: &str) -> Result<Self, String> {
        match s.split_once('/') {
            None => s
                .parse::<BigInt>()
                .map(BigRational::from_integer)
                .map_err(|_| format!("invalid rational literal `{s}`")),
            Some((p, q)) => {
                let p = p
                    .parse::<BigInt>()
                    .map_err(|_| format!("invalid rational literal `{s}`"))?;
                let q = q
                    .parse::<BigInt>()
                    .map_err(|_| format!("invalid rational literal `{s}`"))?;
                if Zero::is_zero(&q) {
                    return Err(format!("zero denominator in `{s}`"));
                }
                Ok(BigRational::new(p, q))
            }
        }
    }

    fn sign_split(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }

    fn literal(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn delta_examples() {
        assert_eq!(z(-7).delta(), GradeValue::from_u64(7));
        assert_eq!(z(0).delta(), GradeValue::from_u64(0));
        assert_eq!(q(3, 5).delta(), GradeValue::from_u64(1));
    }

    #[test]
    fn hat_delta_examples() {
        assert_eq!(z(1).hat_delta(), GradeValue::from_u64(2));
        assert_eq!(z(-1).hat_delta(), GradeValue::from_u64(4));
        assert_eq!(z(2).hat_delta(), GradeValue::from_u64(5));
        assert_eq!(z(-2).hat_delta(), GradeValue::from_u64(7));
        assert_eq!(z(0).hat_delta(), GradeValue::from_u64(0));
        assert_eq!(q(1, 1).hat_delta(), GradeValue::from_u64(1));
        assert!(q(0, 1).hat_delta() < q(1, 1).hat_delta());
        assert!(q(1, 1).hat_delta() < q(3, 5).hat_delta());
    }

    #[test]
    fn quo_rem_examples() {
        let (qq, r) = BigInt::quo_rem(&z(6), &z(4)).unwrap();
        assert_eq!((qq, r), (z(1), z(2)));
        let (qq, r) = BigInt::quo_rem(&z(8), &z(2)).unwrap();
        assert_eq!((qq, r), (z(4), z(0)));
        let (qq, r) = BigRational::quo_rem(&q(7, 3), &q(2, 5)).unwrap();
        assert_eq!(qq, q(35, 6));
        assert!(Zero::is_zero(&r));
        assert_eq!(BigInt::quo_rem(&z(3), &z(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn min_quotient_examples() {
        assert_eq!(BigInt::min_quotient(&z(6), &z(4)).unwrap(), z(1));
        assert_eq!(BigInt::min_quotient(&z(1), &z(2)).unwrap(), z(0));
        // tie |a| even: remainder +|a|/2 preferred
        assert_eq!(BigInt::min_quotient(&z(5), &z(2)).unwrap(), z(2));
        assert_eq!(BigRational::min_quotient(&q(3, 4), &q(2, 1)).unwrap(), q(3, 8));
    }

    #[test]
    fn min_quotient_is_minimal_over_window() {
        for b in -25i64..=25 {
            for a in -6i64..=6 {
                if a == 0 {
                    continue;
                }
                let qmin = BigInt::min_quotient(&z(b), &z(a)).unwrap();
                let best = z(b) - &qmin * z(a);
                for qq in -60i64..=60 {
                    let r = z(b) - z(qq) * z(a);
                    assert!(
                        best.hat_delta() <= r.hat_delta(),
                        "b={b} a={a} q={qq} beats qmin={qmin}"
                    );
                }
            }
        }
    }

    #[test]
    fn normalizing_unit_examples() {
        assert_eq!(BigInt::normalizing_unit(&z(-2)).unwrap(), z(-1));
        assert_eq!(BigInt::normalizing_unit(&z(5)).unwrap(), z(1));
        assert_eq!(BigRational::normalizing_unit(&q(3, 4)).unwrap(), q(4, 3));
        assert!(BigInt::normalizing_unit(&z(0)).is_err());
    }

    #[test]
    fn ext_gcd_examples() {
        let (d, u, v) = BigInt::ext_gcd(&z(4), &z(10)).unwrap();
        assert_eq!(d, z(2));
        assert_eq!(&u * z(4) + &v * z(10), d);
        let (d, u, v) = BigInt::ext_gcd(&z(7), &z(0)).unwrap();
        assert_eq!((d, u, v), (z(7), z(1), z(0)));
        let (d, u, v) = BigRational::ext_gcd(&q(3, 1), &q(5, 1)).unwrap();
        assert_eq!(d, q(1, 1));
        assert_eq!(u * q(3, 1) + v * q(5, 1), q(1, 1));
        assert!(BigInt::ext_gcd(&z(0), &z(0)).is_err());
    }

    #[test]
    fn quo_rem_division_property() {
        for b in -40i64..=40 {
            for a in -9i64..=9 {
                if a == 0 {
                    continue;
                }
                let (qq, r) = BigInt::quo_rem(&z(b), &z(a)).unwrap();
                assert_eq!(&qq * z(a) + &r, z(b));
                assert!(r.delta() < z(a).delta());
            }
        }
    }

    #[test]
    fn hat_delta_injective_and_monotone() {
        let mut seen = std::collections::HashSet::new();
        for v in -50i64..=50 {
            assert!(seen.insert(z(v).hat_delta()), "collision at {v}");
        }
        let mut seen = std::collections::HashSet::new();
        for p in -12i64..=12 {
            for d in 1i64..=12 {
                seen.insert(q(p, d).hat_delta());
            }
        }
        // reduced fractions in that window
        let mut reduced = std::collections::HashSet::new();
        for p in -12i64..=12 {
            for d in 1i64..=12 {
                reduced.insert(q(p, d));
            }
        }
        assert_eq!(seen.len(), reduced.len());
        // delta(a) < delta(b) => hat(a) < hat(b)
        for a in -20i64..=20 {
            for b in -20i64..=20 {
                if z(a).delta() < z(b).delta() {
                    assert!(z(a).hat_delta() < z(b).hat_delta());
                }
                if q(a, 1).delta() < q(b, 1).delta() {
                    assert!(q(a, 1).hat_delta() < q(b, 1).hat_delta());
                }
            }
        }
    }

    // Lemma: delta(ax) <= delta(a) with a, x nonzero forces x to be a unit.
    #[test]
    fn bounded_product_grade_implies_unit() {
        for a in -20i64..=20 {
            for x in -20i64..=20 {
                if a == 0 || x == 0 {
                    continue;
                }
                let prod = z(a) * z(x);
                if prod.delta() <= z(a).delta() {
                    assert!(z(x).is_unit(), "a={a} x={x}");
                }
            }
        }
    }
}
