//! Deterministic corpus enumeration: an ascending (degree, height)
//! staircase per instance, ties broken by canonical candidate order, capped
//! by `max_candidates`. Identical bounds always produce the identical
//! corpus; the seeded sampler draws from the same staircase.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use num_traits::{Signed, Zero};

use crate::bounds::Bounds;
use crate::error::Result;
use crate::exact::{rat_from_i64, rat_height, Coeff, CoeffRing, GaussRat, Int, Rat};
use crate::poly::{Exp, Poly};

use super::{DSet, Element, Fraction, InstanceKind, SemidomainInstance};

/// Reduced rationals with height <= h, canonically ordered by
/// (height, denominator, numerator); starts with 0.
fn rat_candidates(h: u32) -> Vec<Rat> {
    let mut out = vec![Rat::zero()];
    for den in 1..=h as i64 {
        for num in -(h as i64)..=(h as i64) {
            if num == 0 {
                continue;
            }
            let q = Rat::new(Int::from(num), Int::from(den));
            if q.numer().abs() != Int::from(num.abs()) {
                continue; // not reduced
            }
            out.push(q);
        }
    }
    out.sort_by_key(|q| (rat_height(q), q.denom().clone(), q.numer().clone()));
    out.dedup();
    out
}

fn coeff_candidates(ring: CoeffRing, h: u32) -> Vec<Coeff> {
    match ring {
        CoeffRing::Int => {
            let mut out = vec![Coeff::Int(Int::from(0))];
            for v in 1..=h as i64 {
                out.push(Coeff::Int(Int::from(v)));
                out.push(Coeff::Int(Int::from(-v)));
            }
            out
        }
        CoeffRing::Rat => rat_candidates(h).into_iter().map(Coeff::Rat).collect(),
        CoeffRing::Gauss => {
            let rats = rat_candidates(h);
            let mut out = Vec::new();
            for re in &rats {
                for im in &rats {
                    out.push(Coeff::Gauss(GaussRat::new(re.clone(), im.clone())));
                }
            }
            out.sort_by_key(|c| (c.height(), c.clone()));
            out
        }
    }
}

/// Visit dimension-1 integer-exponent polynomials of exact degree `d` and
/// exact height `h`, in canonical order. Returns false when the visitor
/// stops the walk.
fn visit_dense_block(
    ring: CoeffRing,
    d: u32,
    h: u32,
    visit: &mut dyn FnMut(Poly) -> bool,
) -> bool {
    let cands = coeff_candidates(ring, h);
    let target = Int::from(h);
    let len = d as usize + 1;
    let mut idx = vec![0usize; len];
    loop {
        // leading coefficient nonzero, exact height h
        let lead_ok = !cands[idx[len - 1]].is_zero();
        if lead_ok {
            let mut max_h = Int::from(0);
            for &i in &idx {
                let hh = cands[i].height();
                if hh > max_h {
                    max_h = hh;
                }
            }
            if max_h == target {
                let coeff_list: Vec<(Exp, Coeff)> = idx
                    .iter()
                    .enumerate()
                    .map(|(pos, &i)| (Exp::from_u64s(&[pos as u64]), cands[i].clone()))
                    .collect();
                let p = Poly::from_terms(ring, 1, coeff_list).expect("single ring");
                if !visit(p) {
                    return false;
                }
            }
        }
        // odometer: constant term slowest so small constant terms come first
        let mut pos = len;
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < cands.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// The staircase of (degree, height) stairs ordered by total weight.
fn stairs(max_degree: u32, max_height: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for total in 1..=(max_degree + max_height) {
        for d in 0..=max_degree.min(total.saturating_sub(1)) {
            let h = total - d;
            if (1..=max_height).contains(&h) {
                out.push((d, h));
            }
        }
    }
    out
}

fn dense_poly_corpus(
    inst: &SemidomainInstance,
    bounds: &Bounds,
    members_only: bool,
) -> Result<Vec<Element>> {
    let ring = inst.coeff_ring();
    let max_degree = match inst.kind() {
        InstanceKind::Nat => 0,
        _ => bounds.max_degree,
    };
    let cap = bounds.max_candidates as usize;
    let mut out: Vec<Element> = Vec::new();
    let mut err: Option<crate::error::Error> = None;
    for (d, h) in stairs(max_degree, bounds.max_height) {
        let keep_going = visit_dense_block(ring, d, h, &mut |p| {
            let e = Element::Poly(p);
            let keep = if members_only {
                match inst.contains(&e) {
                    Ok(b) => b,
                    Err(crate::error::Error::AmbientMismatch) => false,
                    Err(x) => {
                        err = Some(x);
                        return false;
                    }
                }
            } else {
                match inst.ambient_contains(&e) {
                    Ok(b) => b,
                    Err(x) => {
                        err = Some(x);
                        return false;
                    }
                }
            };
            if keep {
                out.push(e);
            }
            out.len() < cap
        });
        if let Some(x) = err {
            return Err(x);
        }
        if !keep_going {
            break;
        }
    }
    Ok(out)
}

/// Monoid-algebra corpus: monomials on the member exponent list by
/// ascending coefficient height, then two-term sums at small heights.
fn monalg_corpus(
    inst: &SemidomainInstance,
    bounds: &Bounds,
    members_only: bool,
) -> Result<Vec<Element>> {
    let m = inst.monoid().expect("monoid-algebra instance");
    let ring = inst.coeff_ring();
    let cap = bounds.max_candidates as usize;
    let deg_cap = rat_from_i64(bounds.max_degree as i64);
    let exps: Vec<Exp> = m
        .members_within(bounds)?
        .into_iter()
        .filter(|e| e.coords()[0] <= deg_cap)
        .collect();
    let mut out: Vec<Element> = Vec::new();
    let push = |p: Poly, out: &mut Vec<Element>| -> Result<bool> {
        let e = Element::Poly(p);
        let keep = if members_only {
            inst.contains(&e).unwrap_or(false)
        } else {
            inst.ambient_contains(&e)?
        };
        if keep {
            out.push(e);
        }
        Ok(out.len() < cap)
    };
    'outer: for h in 1..=bounds.max_height {
        let target = Int::from(h);
        let coeffs: Vec<Coeff> = coeff_candidates(ring, h)
            .into_iter()
            .filter(|c| !c.is_zero() && c.height() == target)
            .collect();
        for q in &exps {
            for c in &coeffs {
                if !push(Poly::monomial(c.clone(), q.clone()), &mut out)? {
                    break 'outer;
                }
            }
        }
    }
    // binomials at height <= 2 for corpus variety
    if out.len() < cap {
        let small: Vec<Coeff> = coeff_candidates(ring, bounds.max_height.min(2))
            .into_iter()
            .filter(|c| !c.is_zero())
            .collect();
        'bi: for (i, q1) in exps.iter().enumerate() {
            for q2 in exps.iter().skip(i + 1) {
                for c1 in &small {
                    for c2 in &small {
                        let p = Poly::monomial(c1.clone(), q1.clone())
                            .add(&Poly::monomial(c2.clone(), q2.clone()))?;
                        if !push(p, &mut out)? {
                            break 'bi;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn localized_corpus(
    inst: &SemidomainInstance,
    base: &SemidomainInstance,
    dset: &DSet,
    bounds: &Bounds,
    members_only: bool,
) -> Result<Vec<Element>> {
    let cap = bounds.max_candidates as usize;
    let num_bounds = bounds.clone().with_candidates(bounds.max_candidates.max(64));
    let nums: Vec<Poly> = ambient(base, &num_bounds)?
        .into_iter()
        .map(|e| match e {
            Element::Poly(p) => p,
            Element::Frac(_) => unreachable!("bases are polynomial instances"),
        })
        .collect();
    let mut dens = inst.d_sample(dset);
    if let DSet::PowersOf(b) = dset {
        // a couple of higher powers so reduction cases show up
        for k in [3u32, 4] {
            let v = Int::from(*b).pow(k);
            dens.push(Poly::constant(Coeff::Int(v), base.dim()));
        }
    }
    let mut out = Vec::new();
    for t in 0..(nums.len() + dens.len()) {
        for (ni, num) in nums.iter().enumerate() {
            let di = t.wrapping_sub(ni);
            if di >= dens.len() {
                continue;
            }
            let fr = Fraction::new(num.clone(), dens[di].clone())?;
            let e = Element::Frac(fr);
            let keep = if members_only {
                inst.contains(&e).unwrap_or(false)
            } else {
                inst.ambient_contains(&e)?
            };
            if keep {
                out.push(e);
                if out.len() >= cap {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

pub(super) fn members(inst: &SemidomainInstance, bounds: &Bounds) -> Result<Vec<Element>> {
    dispatch(inst, bounds, !inst.is_ambient_mode())
}

pub(super) fn ambient(inst: &SemidomainInstance, bounds: &Bounds) -> Result<Vec<Element>> {
    dispatch(inst, bounds, false)
}

fn dispatch(
    inst: &SemidomainInstance,
    bounds: &Bounds,
    members_only: bool,
) -> Result<Vec<Element>> {
    match inst.kind() {
        InstanceKind::Nat
        | InstanceKind::SignC0C1
        | InstanceKind::NatQ
        | InstanceKind::NatZ
        | InstanceKind::PosQGauss => dense_poly_corpus(inst, bounds, members_only),
        InstanceKind::PosMonAlg(_) | InstanceKind::HfsBase(_) => {
            monalg_corpus(inst, bounds, members_only)
        }
        InstanceKind::Localized { base, dset } => {
            localized_corpus(inst, base, dset, bounds, members_only)
        }
    }
}

pub(super) fn sample(
    inst: &SemidomainInstance,
    bounds: &Bounds,
    seed: u64,
    count: usize,
) -> Result<Vec<Element>> {
    let pool_bounds = bounds
        .clone()
        .with_candidates(bounds.max_candidates.max(400));
    let pool = members(inst, &pool_bounds)?;
    if pool.is_empty() {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| pool[rng.gen_range(0..pool.len())].clone())
        .collect())
}
