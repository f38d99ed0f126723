//! Exact coefficient arithmetic: arbitrary-precision integers, rationals,
//! and Gaussian rationals, with canonical forms everywhere.
//!
//! Equality throughout the crate is structural equality of canonical forms,
//! and nothing here (or anywhere else) touches floating point.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Canonical rational from a numerator/denominator pair.
///
/// The result has positive denominator in lowest terms; zero is `0/1`.
pub fn rat_normalize(num: Int, den: Int) -> Result<Rat> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rat::new(num, den))
}

pub fn rat_from_i64(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat_of(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Height of a rational: `max(|num|, den)`. The search-budget metric.
pub fn rat_height(q: &Rat) -> Int {
    let n = q.numer().abs();
    let d = q.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

pub fn rat_is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

/// Exact square root of a nonnegative rational, if one exists.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

fn fmt_rat(q: &Rat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if rat_is_integer(q) {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

pub fn rat_to_string(q: &Rat) -> String {
    if rat_is_integer(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Gaussian rational `re + im*i`, the exact surrogate for complex scalars.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GaussRat {
    re: Rat,
    im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat {
            re,
            im: Rat::zero(),
        }
    }

    pub fn i() -> Self {
        GaussRat {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn re(&self) -> &Rat {
        &self.re
    }

    pub fn im(&self) -> &Rat {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`; nonnegative, zero only at zero.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussRat {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GaussRat {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussRat {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn neg(&self) -> Self {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NonExactDivision);
        }
        let n = self.norm();
        Ok(GaussRat {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Exact square root in Q(i), if one exists.
    pub fn sqrt(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::from_rat(Rat::zero()));
        }
        // (p + qi)^2 = self needs p^2 - q^2 = re, 2pq = im, p^2 + q^2 = sqrt(norm).
        let r = rat_sqrt(&self.norm())?;
        let two = rat_from_i64(2);
        let p2 = (&self.re + &r) / &two;
        let q2 = (&r - &self.re) / &two;
        let p = rat_sqrt(&p2)?;
        let q = rat_sqrt(&q2)?;
        // Fix the sign of q so that 2pq = im.
        for cand_q in [q.clone(), -q] {
            let cand = GaussRat::new(p.clone(), cand_q);
            if cand.mul(&cand) == *self {
                return Some(cand);
            }
        }
        None
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rat(&self.re, f);
        }
        if self.re.is_zero() {
            fmt_rat(&self.im, f)?;
            return write!(f, "i");
        }
        fmt_rat(&self.re, f)?;
        if self.im.is_negative() {
            write!(f, "-")?;
            fmt_rat(&(-self.im.clone()), f)?;
        } else {
            write!(f, "+")?;
            fmt_rat(&self.im, f)?;
        }
        write!(f, "i")
    }
}

/// The coefficient rings an instance can fix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoeffRing {
    Int,
    Rat,
    Gauss,
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Int => write!(f, "Z"),
            CoeffRing::Rat => write!(f, "Q"),
            CoeffRing::Gauss => write!(f, "Q(i)"),
        }
    }
}

/// Tagged coefficient value. All coefficients of one polynomial share one
/// ring; mixing is an error, never a coercion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Coeff {
    Int(Int),
    Rat(Rat),
    Gauss(GaussRat),
}

impl Coeff {
    pub fn ring(&self) -> CoeffRing {
        match self {
            Coeff::Int(_) => CoeffRing::Int,
            Coeff::Rat(_) => CoeffRing::Rat,
            Coeff::Gauss(_) => CoeffRing::Gauss,
        }
    }

    pub fn zero(ring: CoeffRing) -> Coeff {
        match ring {
            CoeffRing::Int => Coeff::Int(Int::zero()),
            CoeffRing::Rat => Coeff::Rat(Rat::zero()),
            CoeffRing::Gauss => Coeff::Gauss(GaussRat::from_rat(Rat::zero())),
        }
    }

    pub fn one(ring: CoeffRing) -> Coeff {
        match ring {
            CoeffRing::Int => Coeff::Int(Int::one()),
            CoeffRing::Rat => Coeff::Rat(Rat::one()),
            CoeffRing::Gauss => Coeff::Gauss(GaussRat::from_rat(Rat::one())),
        }
    }

    pub fn from_i64(ring: CoeffRing, n: i64) -> Coeff {
        match ring {
            CoeffRing::Int => Coeff::Int(Int::from(n)),
            CoeffRing::Rat => Coeff::Rat(rat_from_i64(n)),
            CoeffRing::Gauss => Coeff::Gauss(GaussRat::from_rat(rat_from_i64(n))),
        }
    }

    /// Re-tag a rational into `ring`. Fails for non-integers into `Int`.
    pub fn from_rat(ring: CoeffRing, q: Rat) -> Result<Coeff> {
        match ring {
            CoeffRing::Int => {
                if rat_is_integer(&q) {
                    Ok(Coeff::Int(q.numer().clone()))
                } else {
                    Err(Error::RingMismatch)
                }
            }
            CoeffRing::Rat => Ok(Coeff::Rat(q)),
            CoeffRing::Gauss => Ok(Coeff::Gauss(GaussRat::from_rat(q))),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Int(v) => v.is_zero(),
            Coeff::Rat(v) => v.is_zero(),
            Coeff::Gauss(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Int(v) => v.is_one(),
            Coeff::Rat(v) => v.is_one(),
            Coeff::Gauss(v) => v.is_one(),
        }
    }

    fn check_ring(&self, other: &Coeff) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn add(&self, other: &Coeff) -> Result<Coeff> {
        self.check_ring(other)?;
        Ok(match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => Coeff::Int(a + b),
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Gauss(a), Coeff::Gauss(b)) => Coeff::Gauss(a.add(b)),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Coeff) -> Result<Coeff> {
        self.check_ring(other)?;
        Ok(match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => Coeff::Int(a - b),
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a - b),
            (Coeff::Gauss(a), Coeff::Gauss(b)) => Coeff::Gauss(a.sub(b)),
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &Coeff) -> Result<Coeff> {
        self.check_ring(other)?;
        Ok(match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => Coeff::Int(a * b),
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Gauss(a), Coeff::Gauss(b)) => Coeff::Gauss(a.mul(b)),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Int(a) => Coeff::Int(-a.clone()),
            Coeff::Rat(a) => Coeff::Rat(-a.clone()),
            Coeff::Gauss(a) => Coeff::Gauss(a.neg()),
        }
    }

    /// Exact division. Fails precisely when `other` does not divide `self`
    /// in the ring, which is only possible over `Int` (and for zero
    /// divisors, which never divide anything nonzero and give no unique
    /// quotient for zero).
    pub fn exact_div(&self, other: &Coeff) -> Result<Coeff> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Err(Error::NonExactDivision);
        }
        match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => {
                let (q, r) = a.div_rem(b);
                if r.is_zero() {
                    Ok(Coeff::Int(q))
                } else {
                    Err(Error::NonExactDivision)
                }
            }
            (Coeff::Rat(a), Coeff::Rat(b)) => Ok(Coeff::Rat(a / b)),
            (Coeff::Gauss(a), Coeff::Gauss(b)) => Ok(Coeff::Gauss(a.div(b)?)),
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse within the ring, when it exists.
    pub fn inverse(&self) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        match self {
            Coeff::Int(a) => {
                if a.abs().is_one() {
                    Some(Coeff::Int(a.clone()))
                } else {
                    None
                }
            }
            Coeff::Rat(a) => Some(Coeff::Rat(a.recip())),
            Coeff::Gauss(a) => a.inv().ok().map(Coeff::Gauss),
        }
    }

    /// Height: `Int` -> |n|; `Rat` -> max(|num|, den); `Gauss` -> max of the
    /// component heights.
    pub fn height(&self) -> Int {
        match self {
            Coeff::Int(a) => a.abs(),
            Coeff::Rat(a) => rat_height(a),
            Coeff::Gauss(a) => {
                let hr = rat_height(a.re());
                let hi = rat_height(a.im());
                if hr > hi {
                    hr
                } else {
                    hi
                }
            }
        }
    }

    pub fn as_int(&self) -> Option<&Int> {
        match self {
            Coeff::Int(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Coeff::Rat(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_gauss(&self) -> Option<&GaussRat> {
        match self {
            Coeff::Gauss(a) => Some(a),
            _ => None,
        }
    }

    /// The rational value, when the coefficient happens to be rational
    /// (always for `Int`/`Rat`, only at `im = 0` for `Gauss`).
    pub fn rational_value(&self) -> Option<Rat> {
        match self {
            Coeff::Int(a) => Some(Rat::from_integer(a.clone())),
            Coeff::Rat(a) => Some(a.clone()),
            Coeff::Gauss(a) => {
                if a.is_rational() {
                    Some(a.re().clone())
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Int(a) => write!(f, "{}", a),
            Coeff::Rat(a) => fmt_rat(a, f),
            Coeff::Gauss(a) => write!(f, "{}", a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn rat_normalize_canonicalizes() {
        assert_eq!(rat_normalize(int(2), int(4)).unwrap(), rat_of(1, 2));
        assert_eq!(rat_normalize(int(-3), int(-6)).unwrap(), rat_of(1, 2));
        let zero = rat_normalize(int(0), int(7)).unwrap();
        assert!(zero.is_zero());
        assert!(zero.denom().is_one());
        assert_eq!(rat_normalize(int(1), int(0)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn rat_normalize_idempotent_and_respects_equality() {
        for (a, b, c, d) in [(1i64, 2i64, 2i64, 4i64), (-5, 10, 1, -2), (3, 9, -1, -3)] {
            let x = rat_normalize(int(a), int(b)).unwrap();
            let y = rat_normalize(int(c), int(d)).unwrap();
            assert_eq!(x, y);
            let renorm = rat_normalize(x.numer().clone(), x.denom().clone()).unwrap();
            assert_eq!(renorm, x);
        }
    }

    #[test]
    fn exact_div_over_int() {
        let six = Coeff::Int(int(6));
        assert_eq!(six.exact_div(&Coeff::Int(int(3))).unwrap(), Coeff::Int(int(2)));
        assert_eq!(
            six.exact_div(&Coeff::Int(int(4))),
            Err(Error::NonExactDivision)
        );
        assert_eq!(
            six.exact_div(&Coeff::Rat(rat_of(1, 2))),
            Err(Error::MixedRings)
        );
    }

    #[test]
    fn gauss_norm_identity() {
        let a = GaussRat::new(rat_from_i64(1), rat_from_i64(1));
        let b = a.conj();
        let prod = a.mul(&b);
        assert_eq!(prod, GaussRat::from_rat(rat_from_i64(2)));
        assert_eq!(a.norm(), rat_from_i64(2));
    }

    #[test]
    fn heights() {
        assert_eq!(Coeff::Rat(rat_of(3, 7)).height(), int(7));
        assert_eq!(Coeff::Int(int(-12)).height(), int(12));
        let g = Coeff::Gauss(GaussRat::new(rat_of(1, 2), rat_from_i64(5)));
        assert_eq!(g.height(), int(5));
    }

    #[test]
    fn gauss_sqrt_finds_roots() {
        // (1+i)^2 = 2i
        let two_i = GaussRat::new(rat_from_i64(0), rat_from_i64(2));
        let r = two_i.sqrt().unwrap();
        assert_eq!(r.mul(&r), two_i);
        // i has no sqrt in Q(i): would need (1+i)/sqrt(2)
        assert!(GaussRat::i().sqrt().is_none());
        assert_eq!(
            GaussRat::from_rat(rat_from_i64(-1)).sqrt().unwrap(),
            GaussRat::i()
        );
        assert!(GaussRat::from_rat(rat_from_i64(-2)).sqrt().is_none());
    }

    #[test]
    fn ring_laws_randomized() {
        // Associativity, commutativity, distributivity over 10^4 triples
        // per ring, with a small deterministic LCG driving the samples.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 19) - 9
        };
        for ring in [CoeffRing::Int, CoeffRing::Rat, CoeffRing::Gauss] {
            for _ in 0..10_000 {
                let mut pick = || match ring {
                    CoeffRing::Int => Coeff::Int(int(next())),
                    CoeffRing::Rat => {
                        let d = next().unsigned_abs() as i64 % 5 + 1;
                        Coeff::Rat(rat_of(next(), d))
                    }
                    CoeffRing::Gauss => {
                        let d1 = next().unsigned_abs() as i64 % 5 + 1;
                        let d2 = next().unsigned_abs() as i64 % 5 + 1;
                        Coeff::Gauss(GaussRat::new(rat_of(next(), d1), rat_of(next(), d2)))
                    }
                };
                let a = pick();
                let b = pick();
                let c = pick();
                let ab = a.add(&b).unwrap();
                assert_eq!(ab, b.add(&a).unwrap());
                assert_eq!(
                    ab.add(&c).unwrap(),
                    a.add(&b.add(&c).unwrap()).unwrap()
                );
                let amb = a.mul(&b).unwrap();
                assert_eq!(amb, b.mul(&a).unwrap());
                assert_eq!(
                    amb.mul(&c).unwrap(),
                    a.mul(&b.mul(&c).unwrap()).unwrap()
                );
                assert_eq!(
                    a.mul(&b.add(&c).unwrap()).unwrap(),
                    amb.add(&a.mul(&c).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn rational_height_product_bound() {
        let two = int(2);
        let mut state = 12345u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 33) as i64 % 41) - 20
        };
        for _ in 0..2000 {
            let a = rat_of(next(), next().unsigned_abs() as i64 % 9 + 1);
            let b = rat_of(next(), next().unsigned_abs() as i64 % 9 + 1);
            let prod = &a * &b;
            assert!(rat_height(&prod) <= rat_height(&a) * rat_height(&b) * &two);
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(rat_to_string(&rat_of(3, 7)), "3/7");
        assert_eq!(rat_to_string(&rat_of(-4, 2)), "-2");
        assert_eq!(
            GaussRat::new(rat_of(1, 2), rat_from_i64(5)).to_string(),
            "1/2+5i"
        );
        assert_eq!(
            GaussRat::new(rat_from_i64(1), rat_from_i64(-1)).to_string(),
            "1-1i"
        );
        assert_eq!(GaussRat::i().to_string(), "1i");
    }
}
