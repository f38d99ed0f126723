//! Sparse polynomials with exponent vectors of nonnegative rationals
//! (dimension 1 or 2), under the global lexicographic term order.
//!
//! This is the shared element representation for every instance and its
//! ambient domain: ordinary Z[x] / Q[x] polynomials live in dimension 1 with
//! integer exponents, monoid algebras use fractional or two-dimensional
//! exponents.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_from_i64, rat_is_integer, rat_to_string, Coeff, CoeffRing, Int, Rat};

/// Exponent vector. Lex order on the coordinates is the single global term
/// order; it is total and compatible with addition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Exp(Vec<Rat>);

impl Exp {
    pub fn new(coords: Vec<Rat>) -> Result<Exp> {
        if coords.is_empty() || coords.len() > 2 {
            return Err(Error::DimensionMismatch);
        }
        if coords.iter().any(|c| c.is_negative()) {
            return Err(Error::DimensionMismatch);
        }
        Ok(Exp(coords))
    }

    pub fn zero(dim: usize) -> Exp {
        Exp(vec![Rat::zero(); dim])
    }

    pub fn one_dim(q: Rat) -> Result<Exp> {
        Exp::new(vec![q])
    }

    pub fn two_dim(a: Rat, b: Rat) -> Result<Exp> {
        Exp::new(vec![a, b])
    }

    pub fn from_u64s(coords: &[u64]) -> Exp {
        Exp(coords.iter().map(|&c| rat_from_i64(c as i64)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Exp) -> Result<Exp> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch);
        }
        Ok(Exp(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a + b)
            .collect()))
    }

    /// Coordinate-wise difference, `None` if any coordinate would go
    /// negative.
    pub fn checked_sub(&self, other: &Exp) -> Result<Option<Exp>> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch);
        }
        let mut out = Vec::with_capacity(self.dim());
        for (a, b) in self.0.iter().zip(&other.0) {
            let d = a - b;
            if d.is_negative() {
                return Ok(None);
            }
            out.push(d);
        }
        Ok(Some(Exp(out)))
    }

    /// The coordinate as a `u64`, when integral and in range.
    pub fn coord_u64(&self, i: usize) -> Option<u64> {
        let c = self.0.get(i)?;
        if rat_is_integer(c) {
            u64::try_from(c.numer().clone()).ok()
        } else {
            None
        }
    }

    fn render(&self) -> String {
        if self.dim() == 1 {
            let c = &self.0[0];
            if rat_is_integer(c) {
                if c.numer() == &Int::from(1) {
                    "x".to_string()
                } else {
                    format!("x^{}", c.numer())
                }
            } else {
                format!("x^({})", rat_to_string(c))
            }
        } else {
            format!(
                "x^({},{})",
                rat_to_string(&self.0[0]),
                rat_to_string(&self.0[1])
            )
        }
    }
}

/// One nonzero term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coeff,
    pub exp: Exp,
}

/// Sparse polynomial: a finite map from exponents to nonzero coefficients,
/// all in one ring, all exponents of one dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Poly {
    ring: CoeffRing,
    dim: usize,
    terms: BTreeMap<Exp, Coeff>,
}

impl Poly {
    pub fn zero(ring: CoeffRing, dim: usize) -> Poly {
        Poly {
            ring,
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Coeff, dim: usize) -> Poly {
        let ring = c.ring();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp::zero(dim), c);
        }
        Poly { ring, dim, terms }
    }

    pub fn one(ring: CoeffRing, dim: usize) -> Poly {
        Poly::constant(Coeff::one(ring), dim)
    }

    pub fn monomial(c: Coeff, e: Exp) -> Poly {
        let ring = c.ring();
        let dim = e.dim();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly { ring, dim, terms }
    }

    /// Convenience for dimension-1 integer-exponent polynomials:
    /// `coeffs[i]` multiplies `x^i`.
    pub fn from_int_coeffs(ring: CoeffRing, coeffs: &[i64]) -> Poly {
        let mut terms = BTreeMap::new();
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                terms.insert(Exp::from_u64s(&[i as u64]), Coeff::from_i64(ring, c));
            }
        }
        Poly {
            ring,
            dim: 1,
            terms,
        }
    }

    pub fn from_terms(ring: CoeffRing, dim: usize, items: Vec<(Exp, Coeff)>) -> Result<Poly> {
        let mut terms: BTreeMap<Exp, Coeff> = BTreeMap::new();
        for (e, c) in items {
            if e.dim() != dim {
                return Err(Error::DimensionMismatch);
            }
            if c.ring() != ring {
                return Err(Error::MixedRings);
            }
            if c.is_zero() {
                continue;
            }
            let entry = match terms.remove(&e) {
                Some(prev) => prev.add(&c)?,
                None => c,
            };
            if !entry.is_zero() {
                terms.insert(e, entry);
            }
        }
        Ok(Poly { ring, dim, terms })
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_zero())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Coeff)> {
        self.terms.iter()
    }

    /// Coefficient at exponent zero (zero if absent).
    pub fn constant_term(&self) -> Coeff {
        self.terms
            .get(&Exp::zero(self.dim))
            .cloned()
            .unwrap_or_else(|| Coeff::zero(self.ring))
    }

    pub fn coeff_at(&self, e: &Exp) -> Coeff {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| Coeff::zero(self.ring))
    }

    fn check_compat(&self, other: &Poly) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch);
        }
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_compat(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.remove(e) {
                Some(prev) => {
                    let s = prev.add(c)?;
                    if !s.is_zero() {
                        terms.insert(e.clone(), s);
                    }
                }
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        Ok(Poly {
            ring: self.ring,
            dim: self.dim,
            terms,
        })
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_compat(other)?;
        let mut terms: BTreeMap<Exp, Coeff> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.add(eb)?;
                let c = ca.mul(cb)?;
                match terms.remove(&e) {
                    Some(prev) => {
                        let s = prev.add(&c)?;
                        if !s.is_zero() {
                            terms.insert(e, s);
                        }
                    }
                    None => {
                        if !c.is_zero() {
                            terms.insert(e, c);
                        }
                    }
                }
            }
        }
        Ok(Poly {
            ring: self.ring,
            dim: self.dim,
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Result<Poly> {
        let mut acc = Poly::one(self.ring, self.dim);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Coeff) -> Result<Poly> {
        self.mul(&Poly::constant(c.clone(), self.dim))
    }

    /// Minimal term under lex order.
    pub fn trailing_term(&self) -> Result<Term> {
        let (e, c) = self.terms.iter().next().ok_or(Error::ZeroPolynomial)?;
        Ok(Term {
            coeff: c.clone(),
            exp: e.clone(),
        })
    }

    /// Maximal term under lex order.
    pub fn leading_term(&self) -> Result<Term> {
        let (e, c) = self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)?;
        Ok(Term {
            coeff: c.clone(),
            exp: e.clone(),
        })
    }

    /// Leading exponent of a dimension-1 polynomial, as a rational.
    pub fn degree(&self) -> Option<Rat> {
        if self.dim != 1 {
            return None;
        }
        self.terms
            .iter()
            .next_back()
            .map(|(e, _)| e.coords()[0].clone())
    }

    /// Degree as `u32` for integer-exponent dimension-1 polynomials.
    /// Zero polynomial reports degree 0.
    pub fn degree_u32(&self) -> Result<u32> {
        if self.dim != 1 {
            return Err(Error::DimensionMismatch);
        }
        match self.terms.iter().next_back() {
            None => Ok(0),
            Some((e, _)) => {
                let c = &e.coords()[0];
                if !rat_is_integer(c) {
                    return Err(Error::UnsupportedElement);
                }
                u32::try_from(c.numer().clone()).map_err(|_| Error::UnsupportedElement)
            }
        }
    }

    /// True when every exponent coordinate is an integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.coords().iter().all(rat_is_integer))
    }

    /// Max coefficient height (0 for the zero polynomial).
    pub fn height(&self) -> Int {
        self.terms
            .values()
            .map(|c| c.height())
            .max()
            .unwrap_or_else(Int::zero)
    }

    /// Order of vanishing at the trailing end: the trailing exponent, or
    /// `None` for zero.
    pub fn trailing_exp(&self) -> Option<&Exp> {
        self.terms.keys().next()
    }

    pub fn leading_exp(&self) -> Option<&Exp> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.values().next_back()
    }

    /// Exact division, deciding whether `d` divides `self` in the ambient
    /// polynomial ring with the same exponent lattice.
    ///
    /// Dimension 1 runs trailing-term elimination (exponents stay in the
    /// lattice generated by those of the inputs, so strictly increasing
    /// trailing exponents bounded by the degree terminate). Dimension 2 is
    /// supported for monomial divisors, all the catalog needs there.
    pub fn exact_div(&self, d: &Poly) -> Result<Option<Poly>> {
        self.check_compat(d)?;
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Some(Poly::zero(self.ring, self.dim)));
        }
        if d.is_monomial() {
            return self.div_by_monomial(d);
        }
        if self.dim != 1 {
            return Err(Error::UnsupportedElement);
        }
        let d_trail = d.trailing_term()?;
        let d_lead = d.leading_exp().unwrap().clone();
        let lead_bound = match self.leading_exp().unwrap().checked_sub(&d_lead)? {
            Some(b) => b,
            None => return Ok(None),
        };
        let mut rem = self.clone();
        let mut quo: Vec<(Exp, Coeff)> = Vec::new();
        while !rem.is_zero() {
            let rt = rem.trailing_term()?;
            let e = match rt.exp.checked_sub(&d_trail.exp)? {
                Some(e) => e,
                None => return Ok(None),
            };
            if e > lead_bound {
                return Ok(None);
            }
            let c = match rt.coeff.exact_div(&d_trail.coeff) {
                Ok(c) => c,
                Err(Error::NonExactDivision) => return Ok(None),
                Err(e) => return Err(e),
            };
            let t = Poly::monomial(c.clone(), e.clone());
            rem = rem.sub(&t.mul(d)?)?;
            quo.push((e, c));
        }
        Ok(Some(Poly::from_terms(self.ring, self.dim, quo)?))
    }

    fn div_by_monomial(&self, d: &Poly) -> Result<Option<Poly>> {
        let dt = d.trailing_term()?;
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let ne = match e.checked_sub(&dt.exp)? {
                Some(ne) => ne,
                None => return Ok(None),
            };
            let nc = match c.exact_div(&dt.coeff) {
                Ok(nc) => nc,
                Err(Error::NonExactDivision) => return Ok(None),
                Err(e) => return Err(e),
            };
            out.push((ne, nc));
        }
        Ok(Some(Poly::from_terms(self.ring, self.dim, out)?))
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.exact_div(self)?.is_some())
    }

    /// Evaluate an integer-coefficient dimension-1 polynomial at an integer.
    pub fn eval_int(&self, x: &Int) -> Result<Int> {
        if self.dim != 1 || self.ring != CoeffRing::Int || !self.has_integer_exponents() {
            return Err(Error::UnsupportedElement);
        }
        let mut acc = Int::zero();
        // Horner over the dense range; sparse polys at desk degree are tiny.
        let deg = self.degree_u32()?;
        for i in (0..=deg).rev() {
            acc *= x;
            let e = Exp::from_u64s(&[i as u64]);
            if let Some(Coeff::Int(c)) = self.terms.get(&e) {
                acc += c;
            }
        }
        Ok(acc)
    }

    /// Dense integer coefficient vector `[c_0, ..., c_deg]`.
    pub fn int_coeff_vec(&self) -> Result<Vec<Int>> {
        if self.dim != 1 || self.ring != CoeffRing::Int || !self.has_integer_exponents() {
            return Err(Error::UnsupportedElement);
        }
        let deg = self.degree_u32()? as usize;
        let mut out = vec![Int::zero(); deg + 1];
        for (e, c) in &self.terms {
            let i = e.coord_u64(0).ok_or(Error::UnsupportedElement)? as usize;
            if let Coeff::Int(v) = c {
                out[i] = v.clone();
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    /// Canonical rendering: terms in descending lex order, parseable by the
    /// element grammar. Examples: `x^2 - 1`, `x^(1/2)`, `2*x^(1,3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let (neg, mag) = match c {
                Coeff::Int(v) => (v.is_negative(), Coeff::Int(v.abs())),
                Coeff::Rat(v) => (v.is_negative(), Coeff::Rat(v.abs())),
                Coeff::Gauss(g) if g.is_rational() => (
                    g.re().is_negative(),
                    Coeff::Gauss(crate::exact::GaussRat::from_rat(g.re().abs())),
                ),
                // properly complex coefficients render whole via gauss(re,im)
                Coeff::Gauss(_) => (false, c.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = match &mag {
                Coeff::Gauss(g) if !g.is_rational() => {
                    format!("gauss({},{})", rat_to_string(g.re()), rat_to_string(g.im()))
                }
                other => other.to_string(),
            };
            if e.is_zero() {
                write!(f, "{}", coeff_str)?;
            } else if mag.is_one() {
                write!(f, "{}", e.render())?;
            } else {
                write!(f, "{}*{}", coeff_str, e.render())?;
            }
        }
        Ok(())
    }
}

/// Height-then-lex key used wherever candidates are scanned "simplest
/// first": by degree-ish leading exponent, then term map order.
pub fn simplicity_key(p: &Poly) -> (Rat, Int, Poly) {
    let lead = p
        .leading_exp()
        .map(|e| e.coords().iter().fold(Rat::zero(), |a, b| a + b))
        .unwrap_or_else(Rat::zero);
    (lead, p.height(), p.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_of;

    fn zx(coeffs: &[i64]) -> Poly {
        Poly::from_int_coeffs(CoeffRing::Int, coeffs)
    }

    #[test]
    fn add_examples() {
        // (x + 1) + (x - 1) = 2x
        let sum = zx(&[1, 1]).add(&zx(&[-1, 1])).unwrap();
        assert_eq!(sum, zx(&[0, 2]));
        // f + 0 = f
        let f = zx(&[3, 0, -2]);
        assert_eq!(f.add(&Poly::zero(CoeffRing::Int, 1)).unwrap(), f);
        // x^(1/2) + x^(1/2) = 2 x^(1/2)
        let half = Poly::monomial(
            Coeff::Rat(rat_of(1, 1)),
            Exp::one_dim(rat_of(1, 2)).unwrap(),
        );
        let two_half = half.add(&half).unwrap();
        assert_eq!(
            two_half,
            Poly::monomial(Coeff::Rat(rat_of(2, 1)), Exp::one_dim(rat_of(1, 2)).unwrap())
        );
    }

    #[test]
    fn mul_examples() {
        // (x - 1)(x + 1) = x^2 - 1
        let p = zx(&[-1, 1]).mul(&zx(&[1, 1])).unwrap();
        assert_eq!(p, zx(&[-1, 0, 1]));
        // x^(1/2) * x^(1/2) = x
        let half = Poly::monomial(
            Coeff::Rat(rat_of(1, 1)),
            Exp::one_dim(rat_of(1, 2)).unwrap(),
        );
        assert_eq!(
            half.mul(&half).unwrap(),
            Poly::monomial(Coeff::Rat(rat_of(1, 1)), Exp::one_dim(rat_of(1, 1)).unwrap())
        );
        // x^(1,1) * x^(1,3) = x^(2,4): the exponent-addition oracle is
        // componentwise sum, computed here directly.
        let a = Poly::monomial(
            Coeff::Int(Int::from(1)),
            Exp::two_dim(rat_of(1, 1), rat_of(1, 1)).unwrap(),
        );
        let b = Poly::monomial(
            Coeff::Int(Int::from(1)),
            Exp::two_dim(rat_of(1, 1), rat_of(3, 1)).unwrap(),
        );
        let expect_exp = Exp::two_dim(rat_of(1, 1), rat_of(1, 1))
            .unwrap()
            .add(&Exp::two_dim(rat_of(1, 1), rat_of(3, 1)).unwrap())
            .unwrap();
        assert_eq!(expect_exp, Exp::two_dim(rat_of(2, 1), rat_of(4, 1)).unwrap());
        assert_eq!(
            a.mul(&b).unwrap(),
            Poly::monomial(Coeff::Int(Int::from(1)), expect_exp)
        );
    }

    #[test]
    fn neg_examples() {
        assert_eq!(zx(&[0, 0, 1]).neg(), zx(&[0, 0, -1]));
        assert_eq!(Poly::zero(CoeffRing::Int, 1).neg(), Poly::zero(CoeffRing::Int, 1));
        assert_eq!(zx(&[-1, 1]).neg(), zx(&[1, -1]));
    }

    #[test]
    fn trailing_leading() {
        let f = zx(&[0, 2, 0, 1]); // x^3 + 2x
        let t = f.trailing_term().unwrap();
        assert_eq!(t.exp, Exp::from_u64s(&[1]));
        assert_eq!(t.coeff, Coeff::Int(Int::from(2)));
        let five = zx(&[5]);
        assert_eq!(five.trailing_term().unwrap().exp, Exp::from_u64s(&[0]));
        // dim 2 lex comparison
        let f2 = Poly::from_terms(
            CoeffRing::Int,
            2,
            vec![
                (Exp::from_u64s(&[2, 5]), Coeff::Int(Int::from(1))),
                (Exp::from_u64s(&[2, 4]), Coeff::Int(Int::from(1))),
            ],
        )
        .unwrap();
        assert_eq!(f2.trailing_term().unwrap().exp, Exp::from_u64s(&[2, 4]));
        assert!(Poly::zero(CoeffRing::Int, 1).trailing_term().is_err());
    }

    #[test]
    fn constant_term_examples() {
        assert_eq!(zx(&[3, 1]).constant_term(), Coeff::Int(Int::from(3)));
        assert_eq!(zx(&[0, 1]).constant_term(), Coeff::Int(Int::from(0)));
        let f2 = Poly::from_terms(
            CoeffRing::Int,
            2,
            vec![
                (Exp::from_u64s(&[1, 2]), Coeff::Int(Int::from(1))),
                (Exp::from_u64s(&[0, 0]), Coeff::Int(Int::from(7))),
            ],
        )
        .unwrap();
        assert_eq!(f2.constant_term(), Coeff::Int(Int::from(7)));
    }

    #[test]
    fn exact_division() {
        let f = zx(&[-1, 0, 1]);
        let d = zx(&[1, 1]);
        let q = f.exact_div(&d).unwrap().unwrap();
        assert_eq!(q, zx(&[-1, 1]));
        assert!(zx(&[1, 1, 1]).exact_div(&zx(&[1, 1])).unwrap().is_none());
        // integers must divide exactly over Z
        assert!(zx(&[2, 2]).exact_div(&zx(&[2])).unwrap().is_some());
        assert!(zx(&[1, 2]).exact_div(&zx(&[2])).unwrap().is_none());
        // fractional exponents: x divides x^(3/2) with quotient x^(1/2)
        let x32 = Poly::monomial(
            Coeff::Rat(rat_of(1, 1)),
            Exp::one_dim(rat_of(3, 2)).unwrap(),
        );
        let x = Poly::monomial(Coeff::Rat(rat_of(1, 1)), Exp::one_dim(rat_of(1, 1)).unwrap());
        let q = x32.exact_div(&x).unwrap().unwrap();
        assert_eq!(
            q,
            Poly::monomial(Coeff::Rat(rat_of(1, 1)), Exp::one_dim(rat_of(1, 2)).unwrap())
        );
    }

    #[test]
    fn display_canonical() {
        assert_eq!(zx(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(zx(&[0, 0, -1]).to_string(), "-x^2");
        assert_eq!(zx(&[5]).to_string(), "5");
        assert_eq!(zx(&[]).to_string(), "0");
        assert_eq!(zx(&[0, -3]).to_string(), "-3*x");
        let half = Poly::monomial(
            Coeff::Rat(rat_of(1, 1)),
            Exp::one_dim(rat_of(1, 2)).unwrap(),
        );
        assert_eq!(half.to_string(), "x^(1/2)");
        let m2 = Poly::monomial(Coeff::Int(Int::from(1)), Exp::from_u64s(&[1, 3]));
        assert_eq!(m2.to_string(), "x^(1,3)");
    }

    fn lcg_poly(state: &mut u64, ring: CoeffRing, max_deg: u64, spread: i64) -> Poly {
        let next = |s: &mut u64| {
            *s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((*s >> 33) as i64 % (2 * spread + 1)) - spread
        };
        let deg = (next(state).unsigned_abs() % (max_deg + 1)) as usize;
        let mut items = Vec::new();
        for i in 0..=deg {
            let v = next(state);
            if v != 0 {
                let c = match ring {
                    CoeffRing::Int => Coeff::Int(Int::from(v)),
                    CoeffRing::Rat => Coeff::Rat(rat_of(v, (next(state).unsigned_abs() % 4 + 1) as i64)),
                    CoeffRing::Gauss => Coeff::Gauss(crate::exact::GaussRat::new(
                        rat_of(v, 1),
                        rat_of(next(state), 1),
                    )),
                };
                items.push((Exp::from_u64s(&[i as u64]), c));
            }
        }
        Poly::from_terms(ring, 1, items).unwrap()
    }

    #[test]
    fn trailing_and_leading_terms_multiplicative() {
        // lex order is additive-compatible and total, so extreme terms of a
        // product are products of extreme terms over a domain.
        for ring in [CoeffRing::Int, CoeffRing::Rat, CoeffRing::Gauss] {
            let mut state = 7u64;
            let mut checked = 0;
            while checked < 10_000 {
                let f = lcg_poly(&mut state, ring, 4, 6);
                let g = lcg_poly(&mut state, ring, 4, 6);
                if f.is_zero() || g.is_zero() {
                    continue;
                }
                let p = f.mul(&g).unwrap();
                let tf = f.trailing_term().unwrap();
                let tg = g.trailing_term().unwrap();
                let tp = p.trailing_term().unwrap();
                assert_eq!(tp.exp, tf.exp.add(&tg.exp).unwrap());
                assert_eq!(tp.coeff, tf.coeff.mul(&tg.coeff).unwrap());
                let lf = f.leading_term().unwrap();
                let lg = g.leading_term().unwrap();
                let lp = p.leading_term().unwrap();
                assert_eq!(lp.exp, lf.exp.add(&lg.exp).unwrap());
                assert_eq!(lp.coeff, lf.coeff.mul(&lg.coeff).unwrap());
                // dim-1 degree additivity
                assert_eq!(
                    p.degree().unwrap(),
                    f.degree().unwrap() + g.degree().unwrap()
                );
                checked += 1;
            }
        }
    }

    #[test]
    fn multiplicative_cancellation() {
        let mut state = 99u64;
        let mut checked = 0;
        while checked < 2_000 {
            let f = lcg_poly(&mut state, CoeffRing::Int, 3, 5);
            let g = lcg_poly(&mut state, CoeffRing::Int, 3, 5);
            let h = lcg_poly(&mut state, CoeffRing::Int, 3, 5);
            if f.is_zero() {
                continue;
            }
            let fg = f.mul(&g).unwrap();
            let fh = f.mul(&h).unwrap();
            if g == h {
                assert_eq!(fg, fh);
            } else {
                assert_ne!(fg, fh);
            }
            checked += 1;
        }
    }
}
