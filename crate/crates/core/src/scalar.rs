//! Scalars for the geometric representation of a Coxeter group.
//!
//! Root tracking only needs ring operations and a sign test, so the geometry
//! is generic over [`CoxeterScalar`]. [`QuadraticSurd`] is exact and is what
//! reducedness decisions use; the float impls exist for quick numerical
//! cross-checks.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};

pub trait CoxeterScalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// `2 cos(π/m)` for a bond of order `m` in `2..=5`.
    fn two_cos_pi_over(m: u8) -> Self;

    fn sign(&self) -> Ordering;

    fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }
}

fn check_bond(m: u8) {
    assert!((2..=5).contains(&m), "bond order {m} is not supported");
}

macro_rules! float_scalar {
    ($t:ty, $eps:expr) => {
        impl CoxeterScalar for $t {
            fn two_cos_pi_over(m: u8) -> Self {
                check_bond(m);
                if m == 2 {
                    return 0.0;
                }
                2.0 * (std::f64::consts::PI / f64::from(m)).cos() as $t
            }

            fn sign(&self) -> Ordering {
                if self.abs() < $eps {
                    Ordering::Equal
                } else if *self > 0.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-4);

/// An element `a + b√d` of `ℚ(√d)`.
///
/// `d` is a squarefree radicand. Values with `b = 0` are stored with `d = 1`
/// so that structural equality is field equality. Combining two irrational
/// values with different radicands panics: no supported Coxeter type needs a
/// compositum.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: Rational64,
    b: Rational64,
    d: i64,
}

impl QuadraticSurd {
    pub fn new(a: Rational64, b: Rational64, d: i64) -> Self {
        assert!(d >= 1, "radicand must be positive");
        if b.is_zero() || d == 1 {
            Self {
                a: a + b,
                b: Rational64::zero(),
                d: 1,
            }
        } else {
            Self { a, b, d }
        }
    }

    pub fn rational(a: Rational64) -> Self {
        Self::new(a, Rational64::zero(), 1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::rational(Rational64::from_integer(n))
    }

    pub fn rational_part(&self) -> Rational64 {
        self.a
    }

    pub fn surd_part(&self) -> Rational64 {
        self.b
    }

    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn to_f64(&self) -> f64 {
        let r = |q: Rational64| *q.numer() as f64 / *q.denom() as f64;
        r(self.a) + r(self.b) * (self.d as f64).sqrt()
    }

    fn common_radicand(&self, other: &Self) -> i64 {
        match (self.d, other.d) {
            (1, d) | (d, 1) => d,
            (x, y) if x == y => x,
            (x, y) => panic!("cannot combine √{x} and √{y}"),
        }
    }
}

impl fmt::Debug for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√{}", self.b, self.d)
        } else {
            write!(f, "{} + {}√{}", self.a, self.b, self.d)
        }
    }
}

impl Add for QuadraticSurd {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.common_radicand(&rhs);
        Self::new(self.a + rhs.a, self.b + rhs.b, d)
    }
}

impl Sub for QuadraticSurd {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for QuadraticSurd {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Mul for QuadraticSurd {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.common_radicand(&rhs);
        let dq = Rational64::from_integer(d);
        Self::new(self.a * rhs.a + self.b * rhs.b * dq, self.a * rhs.b + self.b * rhs.a, d)
    }
}

impl Zero for QuadraticSurd {
    fn zero() -> Self {
        Self::from_integer(0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadraticSurd {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

impl CoxeterScalar for QuadraticSurd {
    fn two_cos_pi_over(m: u8) -> Self {
        check_bond(m);
        let half = Rational64::new(1, 2);
        match m {
            2 => Self::zero(),
            3 => Self::one(),
            4 => Self::new(Rational64::zero(), Rational64::one(), 2),
            // 2cos(π/5) is the golden ratio
            _ => Self::new(half, half, 5),
        }
    }

    fn sign(&self) -> Ordering {
        let zero = Rational64::zero();
        let sa = self.a.cmp(&zero);
        let sb = self.b.cmp(&zero);
        match (sa, sb) {
            (s, Ordering::Equal) | (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            _ => {
                // opposite signs: compare a² with b²d
                let lhs = self.a * self.a;
                let rhs = self.b * self.b * Rational64::from_integer(self.d);
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn golden_ratio_satisfies_its_polynomial() {
        let tau = QuadraticSurd::two_cos_pi_over(5);
        // τ² = τ + 1
        assert_eq!(tau * tau, tau + QuadraticSurd::one());
    }

    #[test]
    fn sqrt_two_squares_to_two() {
        let r2 = QuadraticSurd::two_cos_pi_over(4);
        assert_eq!(r2 * r2, QuadraticSurd::from_integer(2));
        assert_eq!(r2 * r2 - QuadraticSurd::from_integer(2), QuadraticSurd::zero());
    }

    #[test]
    fn sign_of_mixed_terms() {
        // 3 - 2√2 > 0, 1 - √2 < 0, -1/2 + √5/2 > 0, -3/2 + √5/2 < 0
        assert!(QuadraticSurd::new(q(3, 1), q(-2, 1), 2).is_positive());
        assert!(QuadraticSurd::new(q(1, 1), q(-1, 1), 2).is_negative());
        assert!(QuadraticSurd::new(q(-1, 2), q(1, 2), 5).is_positive());
        assert!(QuadraticSurd::new(q(-3, 2), q(1, 2), 5).is_negative());
        assert_eq!(QuadraticSurd::zero().sign(), Ordering::Equal);
    }

    #[test]
    fn rational_values_are_canonical() {
        let a = QuadraticSurd::new(q(1, 2), q(0, 1), 5);
        let b = QuadraticSurd::new(q(1, 2), q(0, 1), 2);
        assert_eq!(a, b);
        assert_eq!(a.radicand(), 1);
    }

    #[test]
    fn exact_and_float_bond_constants_agree() {
        for m in 2..=5 {
            let exact = QuadraticSurd::two_cos_pi_over(m).to_f64();
            assert!((exact - f64::two_cos_pi_over(m)).abs() < 1e-12, "m = {m}");
        }
    }

    #[test]
    #[should_panic(expected = "cannot combine")]
    fn mixing_radicands_panics() {
        let _ = QuadraticSurd::two_cos_pi_over(4) + QuadraticSurd::two_cos_pi_over(5);
    }
}
