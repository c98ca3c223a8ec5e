//! Exact integers with an inline fast path.
//!
//! Smith normal form intermediates overflow fixed-width integers even for
//! small inputs, so every lattice entry is an [`Int`]: an `i128` that
//! silently promotes to a heap [`BigInt`] when a result no longer fits.
//! No floating point appears anywhere in this module tree.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i128),
    Big(Box<BigInt>),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i128() {
            Some(v) => Int::Small(v),
            None => Int::Big(Box::new(b)),
        }
    }

    fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Int::Small(v) => *v == 0,
            Int::Big(b) => b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_abs() {
                Some(a) => Int::Small(a),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(b.abs()),
        }
    }

    /// Euclidean remainder: always in `[0, |m|)`.
    pub fn rem_euclid(&self, m: &Int) -> Int {
        match (self, m) {
            (Int::Small(a), Int::Small(b)) if *b != 0 => Int::Small(a.rem_euclid(*b)),
            _ => Int::from_big(self.to_big().mod_floor(&m.to_big().abs())),
        }
    }

    /// Quotient and remainder with `0 <= r < |d|`.
    pub fn div_rem_euclid(&self, d: &Int) -> (Int, Int) {
        match (self, d) {
            (Int::Small(a), Int::Small(b)) if *b != 0 && !(*a == i128::MIN && *b == -1) => {
                (Int::Small(a.div_euclid(*b)), Int::Small(a.rem_euclid(*b)))
            }
            _ => {
                let (a, b) = (self.to_big(), d.to_big());
                let r = a.mod_floor(&b.abs());
                let q = (&a - &r).checked_div(&b).expect("division by zero");
                (Int::from_big(q), Int::from_big(r))
            }
        }
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Int) -> Int {
        let (q, r) = self.div_rem_euclid(d);
        assert!(r.is_zero(), "non-exact division");
        q
    }

    /// Quotient rounded to the nearest integer (ties toward zero), so the
    /// remainder satisfies `|r| <= |d|/2`. Used to keep elimination
    /// intermediates small.
    pub fn div_round_nearest(&self, d: &Int) -> Int {
        let (q, r) = self.div_rem_euclid(d);
        let da = d.abs();
        // r in [0, |d|); move to the representative of smallest magnitude.
        if &(&r + &r) > &da {
            if d.is_negative() {
                &q - &Int::ONE
            } else {
                &q + &Int::ONE
            }
        } else {
            q
        }
    }

    pub fn divides(&self, other: &Int) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem_euclid(self).is_zero()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g = gcd(self, other) >= 0`.
    pub fn extended_gcd(&self, other: &Int) -> (Int, Int, Int) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Int::ONE, Int::ZERO);
        let (mut t0, mut t1) = (Int::ZERO, Int::ONE);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem_euclid(&r1);
            let ns = &s0 - &(&q * &s1);
            let nt = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, ns);
            t0 = std::mem::replace(&mut t1, nt);
        }
        if r0.is_negative() {
            (-&r0, -&s0, -&t0)
        } else {
            (r0, s0, t0)
        }
    }

    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
                while y != 0 {
                    let t = x % y;
                    x = y;
                    y = t;
                }
                match i128::try_from(x) {
                    Ok(v) => Int::Small(v),
                    Err(_) => Int::from_big(BigInt::from(x)),
                }
            }
            _ => Int::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => i64::try_from(*v).ok(),
            Int::Big(_) => None,
        }
    }

    pub fn to_usize(&self) -> Option<usize> {
        match self {
            Int::Small(v) => usize::try_from(*v).ok(),
            Int::Big(_) => None,
        }
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Int {
        Int::Small(v as i128)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Int {
        Int::Small(v as i128)
    }
}

impl From<usize> for Int {
    fn from(v: usize) -> Int {
        Int::Small(v as i128)
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Int {
        Int::from_big(b)
    }
}

impl Default for Int {
    fn default() -> Int {
        Int::ZERO
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Int) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Int) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Add for &Int {
    type Output = Int;
    fn add(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_add(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) + BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Int {
    type Output = Int;
    fn sub(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_sub(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) - BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl Mul for &Int {
    type Output = Int;
    fn mul(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_mul(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) * BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(a) => match a.checked_neg() {
                Some(v) => Int::Small(v),
                None => Int::from_big(-BigInt::from(*a)),
            },
            Int::Big(b) => Int::from_big(-(**b).clone()),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Int> for Int {
            type Output = Int;
            fn $method(self, rhs: Int) -> Int {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Int> for Int {
            type Output = Int;
            fn $method(self, rhs: &Int) -> Int {
                (&self).$method(rhs)
            }
        }
        impl $trait<Int> for &Int {
            type Output = Int;
            fn $method(self, rhs: Int) -> Int {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_on_overflow_and_stays_exact() {
        let big = Int::Small(i128::MAX);
        let sum = &big + &Int::ONE;
        assert!(matches!(sum, Int::Big(_)));
        let back = &sum - &Int::ONE;
        assert_eq!(back, big);
        assert!(matches!(back, Int::Small(_)));
    }

    #[test]
    fn euclidean_division() {
        let (q, r) = Int::from(-7).div_rem_euclid(&Int::from(3));
        assert_eq!((q, r), (Int::from(-3), Int::from(2)));
        assert_eq!(Int::from(-7).rem_euclid(&Int::from(-3)), Int::from(2));
    }

    #[test]
    fn nearest_division_minimizes_remainder() {
        for a in -20i64..=20 {
            for d in [-7i64, -3, 2, 5] {
                let q = Int::from(a).div_round_nearest(&Int::from(d));
                let r = &Int::from(a) - &(&q * &Int::from(d));
                let r = r.to_i64().unwrap().abs();
                assert!(2 * r <= d.abs(), "a={a} d={d} r={r}");
            }
        }
    }

    #[test]
    fn gcd_matches_reference() {
        assert_eq!(Int::from(12).gcd(&Int::from(-18)), Int::from(6));
        assert_eq!(Int::ZERO.gcd(&Int::from(-5)), Int::from(5));
        assert_eq!(Int::ZERO.gcd(&Int::ZERO), Int::ZERO);
    }

    #[test]
    fn extended_gcd_bezout_identity() {
        for a in [-30i64, -7, 0, 4, 9, 30] {
            for b in [-12i64, -1, 0, 5, 18] {
                let (ia, ib) = (Int::from(a), Int::from(b));
                let (g, s, t) = ia.extended_gcd(&ib);
                assert_eq!(g, ia.gcd(&ib));
                assert_eq!(&(&s * &ia) + &(&t * &ib), g);
            }
        }
    }
}
