//! Complete exact factorization and divisor enumeration in Z[x] at bounded
//! degree, by Kronecker interpolation.
//!
//! This is the decidable engine behind every Z[x]-ambient instance: the
//! factorization is complete (integer content split into primes, primitive
//! part split into irreducibles), so divisor sets and irreducibility are
//! decided, not approximated.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{Coeff, CoeffRing, Int, Rat};
use crate::poly::Poly;

/// Default degree cap for Kronecker factorization. Desk-scale corpora never
/// need more; raise it through `RunConfig` if they ever do.
pub const DEFAULT_DEGREE_CAP: u32 = 8;

/// Complete factorization in Z[x]: `unit * product(factors) = input`, every
/// factor primitive irreducible with positive leading coefficient, prime
/// integers appearing as degree-0 factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZxFactorization {
    pub unit: i8,
    pub factors: Vec<Poly>,
}

impl ZxFactorization {
    pub fn product(&self) -> Poly {
        let mut acc = Poly::from_int_coeffs(CoeffRing::Int, &[self.unit as i64]);
        for f in &self.factors {
            acc = acc.mul(f).expect("factors share ring and dimension");
        }
        acc
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }
}

fn ensure_zx(f: &Poly) -> Result<()> {
    if f.dim() != 1 || f.ring() != CoeffRing::Int || !f.has_integer_exponents() {
        return Err(Error::UnsupportedElement);
    }
    Ok(())
}

fn check_cap(f: &Poly, cap: u32) -> Result<u32> {
    let deg = f.degree_u32()?;
    if deg > cap {
        return Err(Error::DegreeCapExceeded { cap, got: deg });
    }
    Ok(deg)
}

/// Gauss decomposition `f = content * primitive` with `content > 0` and the
/// primitive part carrying the sign of the leading coefficient.
pub fn content_primitive(f: &Poly) -> Result<(Int, Poly)> {
    ensure_zx(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs = f.int_coeff_vec()?;
    let mut g = Int::zero();
    for c in &coeffs {
        g = g.gcd(c);
    }
    let content = g.abs();
    let prim = f
        .exact_div(&Poly::constant(Coeff::Int(content.clone()), 1))?
        .expect("content divides every coefficient");
    Ok((content, prim))
}

fn int_divisors(n: &Int) -> Vec<Int> {
    // positive divisors of |n|, ascending
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = Int::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn prime_factors(n: &Int) -> Vec<Int> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = Int::from(2);
    while &p * &p <= n {
        while (&n % &p).is_zero() {
            out.push(p.clone());
            n = &n / &p;
        }
        p += 1;
    }
    if n > Int::one() {
        out.push(n);
    }
    out
}

/// Lagrange interpolation through integer points; `None` when the result is
/// not an integer polynomial.
fn interpolate_integer(points: &[(Int, Int)]) -> Option<Poly> {
    let n = points.len();
    // coefficients over Q, degree < n
    let mut acc = vec![Rat::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut den = Rat::one();
        let mut num = vec![Rat::one()];
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            den *= Rat::from_integer(xi - xj);
            let xr = Rat::from_integer(xj.clone());
            let mut next = vec![Rat::zero(); num.len() + 1];
            for (k, c) in num.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xr;
            }
            num = next;
        }
        let scale = Rat::from_integer(yi.clone()) / den;
        for (k, c) in num.iter().enumerate() {
            acc[k] += c * &scale;
        }
    }
    let mut items = Vec::new();
    for (k, c) in acc.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !c.denom().is_one() {
            return None;
        }
        items.push((
            crate::poly::Exp::from_u64s(&[k as u64]),
            Coeff::Int(c.numer().clone()),
        ));
    }
    Some(Poly::from_terms(CoeffRing::Int, 1, items).expect("integer terms"))
}

/// Evaluation points 0, 1, -1, 2, -2, ...
fn eval_points() -> impl Iterator<Item = Int> {
    (0u32..).map(|k| {
        if k == 0 {
            Int::zero()
        } else if k % 2 == 1 {
            Int::from(k.div_ceil(2))
        } else {
            -Int::from(k / 2)
        }
    })
}

/// One irreducible divisor of a primitive positive-leading polynomial of
/// degree >= 1, or `None` if the polynomial is irreducible. The divisor
/// returned is sign-normalized to positive leading coefficient.
fn find_irreducible_divisor(q: &Poly) -> Option<Poly> {
    let deg = q.degree_u32().expect("integer polynomial");
    if deg <= 1 {
        return None;
    }
    // Integer roots first: a root r yields the divisor (x - r).
    for point in eval_points().take(2 * deg as usize + 3) {
        if q.eval_int(&point).expect("zx poly").is_zero() {
            let divisor = Poly::from_int_coeffs(CoeffRing::Int, &[0, 1]).sub(&Poly::constant(
                Coeff::Int(point.clone()),
                1,
            ));
            return Some(divisor.expect("same ring"));
        }
    }
    // Kronecker: a factor of degree d is pinned by its values at d+1 points,
    // each dividing the (nonzero) values of q there.
    for d in 1..=(deg / 2) {
        let mut pts = Vec::with_capacity(d as usize + 1);
        for point in eval_points() {
            let v = q.eval_int(&point).expect("zx poly");
            debug_assert!(!v.is_zero(), "roots were split off above");
            pts.push((point, v));
            if pts.len() == d as usize + 1 {
                break;
            }
        }
        let divisor_lists: Vec<Vec<Int>> = pts.iter().map(|(_, v)| int_divisors(v)).collect();
        let mut choice = vec![0usize; pts.len()];
        'outer: loop {
            // candidate values: sign-free at index 0 (g vs -g symmetry),
            // both signs elsewhere via the sign mask
            let sign_count = 1usize << (pts.len() - 1);
            for mask in 0..sign_count {
                let mut sample = Vec::with_capacity(pts.len());
                for (i, (x, _)) in pts.iter().enumerate() {
                    let mut val = divisor_lists[i][choice[i]].clone();
                    if i > 0 && (mask >> (i - 1)) & 1 == 1 {
                        val = -val;
                    }
                    sample.push((x.clone(), val));
                }
                if let Some(g) = interpolate_integer(&sample) {
                    let gdeg = g.degree_u32().unwrap_or(0);
                    if gdeg >= 1 && gdeg <= d {
                        if let Some(_h) = q.exact_div(&g).expect("zx division") {
                            let lead = g.leading_coeff().and_then(|c| c.as_int().cloned());
                            let g = if lead.map(|l| l.is_negative()).unwrap_or(false) {
                                g.neg()
                            } else {
                                g
                            };
                            return Some(g);
                        }
                    }
                }
            }
            // advance the mixed-radix divisor choice
            for i in 0..choice.len() {
                choice[i] += 1;
                if choice[i] < divisor_lists[i].len() {
                    continue 'outer;
                }
                choice[i] = 0;
            }
            break;
        }
    }
    None
}

/// Complete irreducible factorization by Kronecker's method.
pub fn kronecker_factor(f: &Poly, cap: u32) -> Result<ZxFactorization> {
    ensure_zx(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_cap(f, cap)?;
    let (content, prim) = content_primitive(f)?;
    let mut factors: Vec<Poly> = prime_factors(&content)
        .into_iter()
        .map(|p| Poly::constant(Coeff::Int(p), 1))
        .collect();
    let negative = prim
        .leading_coeff()
        .map(|c| matches!(c, Coeff::Int(v) if v.is_negative()))
        .unwrap_or(false);
    let unit: i8 = if negative { -1 } else { 1 };
    let mut rest = if negative { prim.neg() } else { prim };
    while rest.degree_u32()? >= 1 {
        match find_irreducible_divisor(&rest) {
            Some(g) => {
                rest = rest
                    .exact_div(&g)?
                    .expect("find_irreducible_divisor returns divisors");
                factors.push(g);
            }
            None => {
                factors.push(rest.clone());
                rest = Poly::one(CoeffRing::Int, 1);
            }
        }
    }
    debug_assert!(rest.is_one());
    factors.sort();
    let out = ZxFactorization { unit, factors };
    debug_assert_eq!(out.product(), *f);
    Ok(out)
}

/// The complete, finite divisor set of `f` in Z[x], both signs included.
pub fn divisors_zx(f: &Poly, cap: u32) -> Result<BTreeSet<Poly>> {
    let fact = kronecker_factor(f, cap)?;
    let mut products: BTreeSet<Poly> = BTreeSet::new();
    products.insert(Poly::one(CoeffRing::Int, 1));
    for factor in &fact.factors {
        let snapshot: Vec<Poly> = products.iter().cloned().collect();
        for p in snapshot {
            products.insert(p.mul(factor)?);
        }
    }
    let mut out = BTreeSet::new();
    for p in products {
        out.insert(p.neg());
        out.insert(p);
    }
    Ok(out)
}

/// True iff `f` is a nonunit with no factorization into two nonunits of
/// Z[x]; equivalently, the complete factorization has a single factor.
pub fn is_irreducible_zx(f: &Poly, cap: u32) -> Result<bool> {
    let fact = kronecker_factor(f, cap)?;
    Ok(fact.factor_count() == 1)
}
