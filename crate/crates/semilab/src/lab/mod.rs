//! Divisor, atom, prime, factorization and length-set computation inside a
//! semidomain instance, with three-valued verdicts and explicit
//! completeness flags.
//!
//! Divisor enumeration is complete wherever the instance structure makes it
//! decidable (Z[x]-ambient instances, constants, monomial fragments,
//! elements with nonzero constant term in the scalar-divisor instances) and
//! explicitly incomplete where the mathematics makes it infinite (the
//! scalar freedom that drives the non-finite-factorization phenomena).
//! Instances with infinite unit groups enumerate divisors as canonical
//! associate-class representatives.

mod probes;
mod theorems;

pub use probes::{ChainReport, ChainStrategy, LengthFn, LengthFnReport};
pub use theorems::{ConsistencyReport, Overall, TheoremId};

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::exact::{Coeff, CoeffRing, GaussRat, Int, Rat};
use crate::poly::{Exp, Poly};
use crate::semidomain::{
    DSet, Element, Fraction, InstanceKind, SemidomainInstance, UStatus, Verdict, Witness,
};
use crate::zx;

/// A factorization into verified atoms whose product is associate to the
/// target; stored as a sorted multiset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FactorizationZ {
    pub factors: Vec<Element>,
}

impl FactorizationZ {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl std::fmt::Display for FactorizationZ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|e| format!("({})", e)).collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// The set of factorization lengths found, with a completeness flag that is
/// true only when the underlying enumeration was decisive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSet {
    pub lengths: BTreeSet<usize>,
    pub complete: bool,
}

/// Divisor/cofactor pairs plus the completeness flag of the enumeration.
type DivisorPairs = (Vec<(Element, Element)>, bool);

/// Query context: one instance plus the budgets every search runs under.
pub struct Lab<'a> {
    inst: &'a SemidomainInstance,
    bounds: Bounds,
    zx_cap: u32,
    atom_cache: RefCell<BTreeMap<Element, Verdict>>,
    divisor_cache: RefCell<BTreeMap<Element, DivisorPairs>>,
}

impl<'a> Lab<'a> {
    pub fn new(inst: &'a SemidomainInstance, bounds: Bounds) -> Lab<'a> {
        Lab {
            inst,
            bounds,
            zx_cap: zx::DEFAULT_DEGREE_CAP,
            atom_cache: RefCell::new(BTreeMap::new()),
            divisor_cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn with_zx_cap(mut self, cap: u32) -> Self {
        self.zx_cap = cap;
        self
    }

    pub fn instance(&self) -> &SemidomainInstance {
        self.inst
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    fn require_member(&self, s: &Element) -> Result<()> {
        if self.inst.contains(s)? {
            Ok(())
        } else {
            Err(Error::NotMember)
        }
    }

    /// `d | s` in the instance: an exact member cofactor exists.
    pub fn divides(&self, d: &Element, s: &Element) -> Result<bool> {
        self.require_member(d)?;
        self.require_member(s)?;
        if d.is_zero() {
            return Err(Error::ZeroElement);
        }
        if s.is_zero() {
            return Ok(true);
        }
        Ok(self.member_cofactor(s, d)?.is_some())
    }

    /// The member cofactor `s/d`, when `d` divides `s` inside the instance.
    fn member_cofactor(&self, s: &Element, d: &Element) -> Result<Option<Element>> {
        match (s, d) {
            (Element::Poly(sp), Element::Poly(dp)) => match sp.exact_div(dp)? {
                Some(q) => {
                    let qe = Element::Poly(q);
                    if self.inst.ambient_contains(&qe)? && self.inst.contains(&qe)? {
                        Ok(Some(qe))
                    } else {
                        Ok(None)
                    }
                }
                None => Ok(None),
            },
            (Element::Frac(sf), Element::Frac(df)) => self.frac_member_cofactor(sf, df),
            _ => Err(Error::InstanceMismatch),
        }
    }

    fn frac_member_cofactor(&self, s: &Fraction, d: &Fraction) -> Result<Option<Element>> {
        let dset = match self.inst.kind() {
            InstanceKind::Localized { dset, .. } => dset,
            _ => return Err(Error::InstanceMismatch),
        };
        let candidate = match dset {
            DSet::PowersOf(b) => {
                // constants a/b^i: the exact quotient exists in the
                // localization iff the reduced denominator is a power of
                // the base
                let (sn, sden) = const_frac_ints(s)?;
                let (dn, dden) = const_frac_ints(d)?;
                if dn.is_zero() {
                    return Ok(None);
                }
                let q = Rat::new(&sn * &dden, &sden * &dn);
                let base = Int::from(*b);
                let mut denv = q.denom().clone();
                while (&denv % &base).is_zero() {
                    denv = &denv / &base;
                }
                if !denv.is_one() {
                    return Ok(None);
                }
                // carry a negative quotient in the numerator
                Fraction::new(
                    Poly::constant(Coeff::Int(q.numer().clone()), 1),
                    Poly::constant(Coeff::Int(q.denom().clone()), 1),
                )?
            }
            DSet::PositiveConstantTerm => {
                // monomial fragment: c2 x^m2 / e2 divides c1 x^m1 / e1 iff
                // m1 - m2 stays in the exponent monoid; membership of the
                // cofactor decides the sign constraints
                let m = self.inst.monoid().ok_or(Error::UnsupportedElement)?;
                let (cs, es) = frag(s)?;
                let (cd, ed) = frag(d)?;
                if cd.is_zero() {
                    return Ok(None);
                }
                let diff = match es.checked_sub(&ed)? {
                    Some(x) => x,
                    None => return Ok(None),
                };
                if !m.contains(&diff)? {
                    return Ok(None);
                }
                let ratio = cs / cd;
                Fraction::new(
                    Poly::monomial(Coeff::Int(ratio.numer().clone()), diff),
                    Poly::constant(Coeff::Int(ratio.denom().clone()), 2),
                )?
            }
            DSet::AllIncludingZero => {
                return Err(Error::InvalidMultiplicativeSet(
                    "degenerate localizing set".into(),
                ))
            }
        };
        let h = Element::Frac(candidate);
        if self.inst.ambient_contains(&h)? && self.inst.contains(&h)? {
            Ok(Some(h))
        } else {
            Ok(None)
        }
    }

    /// Divisors of `s` in the instance, paired with their member cofactors.
    /// For instances with an infinite unit group the list holds canonical
    /// associate-class representatives. The flag is true when the
    /// enumeration is decisive (exhausts all divisors up to associates).
    pub fn divisors(&self, s: &Element) -> Result<DivisorPairs> {
        self.require_member(s)?;
        if s.is_zero() {
            return Err(Error::ZeroElement);
        }
        if let Some(hit) = self.divisor_cache.borrow().get(s) {
            return Ok(hit.clone());
        }
        let out = self.divisors_uncached(s)?;
        self.divisor_cache
            .borrow_mut()
            .insert(s.clone(), out.clone());
        Ok(out)
    }

    /// The plain divisor set (first components of `divisors`).
    pub fn divisor_set(&self, s: &Element) -> Result<(Vec<Element>, bool)> {
        let (pairs, complete) = self.divisors(s)?;
        Ok((pairs.into_iter().map(|(d, _)| d).collect(), complete))
    }

    fn divisors_uncached(&self, s: &Element) -> Result<DivisorPairs> {
        let mut pairs: Vec<(Element, Element)> = Vec::new();
        let mut complete = true;
        match self.inst.kind() {
            InstanceKind::Nat | InstanceKind::SignC0C1 | InstanceKind::NatZ => {
                let p = s.as_poly()?;
                for d in zx::divisors_zx(p, self.zx_cap)? {
                    let de = Element::Poly(d);
                    if !self.inst.contains(&de)? {
                        continue;
                    }
                    if let Some(cof) = self.member_cofactor(s, &de)? {
                        pairs.push((de, cof));
                    }
                }
            }
            InstanceKind::NatQ => {
                complete = self.scalar_divisors_rat(s.as_poly()?, &mut pairs)?;
            }
            InstanceKind::PosQGauss => {
                complete = self.scalar_divisors_gauss(s.as_poly()?, &mut pairs)?;
            }
            InstanceKind::PosMonAlg(_) | InstanceKind::HfsBase(_) => {
                self.monomial_divisors_poly(s.as_poly()?, &mut pairs)?;
            }
            InstanceKind::Localized { dset, .. } => match dset {
                DSet::PowersOf(_) => self.dyadic_divisors(s.as_frac()?, &mut pairs)?,
                DSet::PositiveConstantTerm => {
                    self.monomial_divisors_frac(s.as_frac()?, &mut pairs)?
                }
                DSet::AllIncludingZero => {
                    return Err(Error::InvalidMultiplicativeSet(
                        "degenerate localizing set".into(),
                    ))
                }
            },
        }
        pairs.sort_by_key(|a| scan_key(&a.0));
        pairs.dedup();
        Ok((pairs, complete))
    }

    /// Divisors in `N0 + x Q[x]` (and its ambient `Z + x Q[x]`): every
    /// divisor is a scalar multiple of a monic Q[x]-divisor. The scalar is
    /// pinned by integrality of constant terms when `s(0) != 0`; otherwise
    /// it is genuinely free and enumerated up to the height budget.
    fn scalar_divisors_rat(&self, s: &Poly, pairs: &mut Vec<(Element, Element)>) -> Result<bool> {
        let monics = monic_divisors_rat(s, self.zx_cap)?;
        let s0 = s
            .constant_term()
            .rational_value()
            .expect("Rat ring constant");
        let mut complete = true;
        for g in &monics {
            let g0 = g.constant_term().rational_value().expect("Rat ring");
            let mut scalars: Vec<Rat> = Vec::new();
            if !g0.is_zero() && !s0.is_zero() {
                // c g(0) = k must divide s(0) in Z
                let s0_int = s0.numer().clone();
                for k in int_divisors_signed(&s0_int) {
                    scalars.push(Rat::from_integer(k) / &g0);
                }
            } else {
                complete = false;
                for c in rat_scalars(self.bounds.max_height) {
                    scalars.push(c);
                }
            }
            for c in scalars {
                if c.is_zero() {
                    continue;
                }
                let d = g.scale(&Coeff::Rat(c))?;
                let de = Element::Poly(d);
                if !self.inst.ambient_contains(&de)? || !self.inst.contains(&de)? {
                    continue;
                }
                if let Some(cof) = self.member_cofactor(&Element::Poly(s.clone()), &de)? {
                    pairs.push((de, cof));
                }
            }
        }
        // for constants every divisor is a constant (degrees add), so the
        // enumeration above over g = 1 was exhaustive
        Ok(complete || s.is_constant())
    }

    /// Divisors in `Q>=0 + x Q(i)[x]` up to associates (units are the
    /// positive rationals). Complete when at most one factor of x divides
    /// `s`; with `x^2 | s` the class family `c x^j` is infinite and gets
    /// enumerated to the height budget.
    fn scalar_divisors_gauss(&self, s: &Poly, pairs: &mut Vec<(Element, Element)>) -> Result<bool> {
        let monics = monic_divisors_gauss(s)?;
        let x_order = trailing_x_order(s)?;
        let complete = x_order <= 1;
        for g in &monics {
            let g0 = g.constant_term();
            let sg = s.exact_div(g)?.expect("monic divisor divides");
            let sg0 = sg.constant_term();
            let mut scalars: Vec<GaussRat> = Vec::new();
            if !g0.is_zero() {
                // d(0) = c g(0) must be rational: c in Q / g(0); two sign
                // classes up to positive-rational units
                let inv = g0.as_gauss().expect("Gauss ring").inv()?;
                scalars.push(inv.clone());
                scalars.push(inv.neg());
            } else if !sg0.is_zero() {
                // cofactor constant term (s/g)(0)/c must be rational
                let v = sg0.as_gauss().expect("Gauss ring");
                scalars.push(v.clone());
                scalars.push(v.neg());
            } else {
                // both ends vanish: c ranges over Q(i)*/Q>0, enumerate
                // primitive sign-normalized Gaussian integers by height
                for c in gauss_class_reps(self.bounds.max_height) {
                    scalars.push(c);
                }
            }
            for c in scalars {
                if c.is_zero() {
                    continue;
                }
                let d = g.scale(&Coeff::Gauss(c))?;
                let d = gauss_class_canonical(&d)?;
                let de = Element::Poly(d);
                if !self.inst.ambient_contains(&de)? || !self.inst.contains(&de)? {
                    continue;
                }
                if let Some(cof) = self.member_cofactor(&Element::Poly(s.clone()), &de)? {
                    pairs.push((de, cof));
                }
            }
        }
        Ok(complete || s.is_constant())
    }

    /// Monomial-fragment divisors in a monoid algebra: exponent splits
    /// combined with coefficient divisors (integer coefficients) or sign
    /// classes (rational coefficients, where positive scalars are units).
    fn monomial_divisors_poly(&self, s: &Poly, pairs: &mut Vec<(Element, Element)>) -> Result<()> {
        let m = self.inst.monoid().expect("monoid-algebra instance");
        if !s.is_monomial() {
            return Err(Error::UnsupportedElement);
        }
        let t = s.trailing_term()?;
        let splits = m.members_below(&t.exp)?;
        let coeff_divs: Vec<Coeff> = match &t.coeff {
            Coeff::Int(v) => int_divisors_signed(v).into_iter().map(Coeff::Int).collect(),
            Coeff::Rat(_) => vec![
                Coeff::Rat(Rat::one()),
                Coeff::Rat(-Rat::one()),
            ],
            Coeff::Gauss(_) => return Err(Error::UnsupportedElement),
        };
        for q in splits {
            let rest = t.exp.checked_sub(&q)?.expect("split stays below");
            if !m.contains(&rest)? {
                continue;
            }
            for c in &coeff_divs {
                let d = Poly::monomial(c.clone(), q.clone());
                if d.is_zero() {
                    continue;
                }
                let de = Element::Poly(d);
                if !self.inst.contains(&de)? {
                    continue;
                }
                if let Some(cof) = self.member_cofactor(&Element::Poly(s.clone()), &de)? {
                    pairs.push((de, cof));
                }
            }
        }
        Ok(())
    }

    fn monomial_divisors_frac(&self, s: &Fraction, pairs: &mut Vec<(Element, Element)>) -> Result<()> {
        let m = self.inst.monoid().ok_or(Error::UnsupportedElement)?;
        let (c, e) = frag(s)?;
        let one_den = Poly::one(CoeffRing::Int, 2);
        for q in m.members_below(&e)? {
            let rest = e.checked_sub(&q)?.expect("split stays below");
            if !m.contains(&rest)? {
                continue;
            }
            for sign in [1i64, -1] {
                let d = Fraction::new(
                    Poly::monomial(Coeff::Int(Int::from(sign)), q.clone()),
                    one_den.clone(),
                )?;
                let de = Element::Frac(d);
                if !self.inst.contains(&de)? {
                    continue;
                }
                if let Some(cof) = self.member_cofactor(&Element::Frac(s.clone()), &de)? {
                    pairs.push((de, cof));
                }
            }
        }
        let _ = c;
        Ok(())
    }

    /// Divisor class representatives in the dyadic localization: positive
    /// odd divisors of the odd part of the numerator.
    fn dyadic_divisors(&self, s: &Fraction, pairs: &mut Vec<(Element, Element)>) -> Result<()> {
        let (num, _) = const_frac_ints(s)?;
        let base = match self.inst.kind() {
            InstanceKind::Localized {
                dset: DSet::PowersOf(b),
                ..
            } => Int::from(*b),
            _ => unreachable!(),
        };
        let mut odd = num.abs();
        while !odd.is_zero() && (&odd % &base).is_zero() {
            odd = &odd / &base;
        }
        for d in int_divisors_signed(&odd) {
            if d.is_negative() {
                continue;
            }
            let de = Element::Frac(Fraction::new(
                Poly::constant(Coeff::Int(d), 1),
                Poly::one(CoeffRing::Int, 1),
            )?);
            if !self.inst.contains(&de)? {
                continue;
            }
            if let Some(cof) = self.member_cofactor(&Element::Frac(s.clone()), &de)? {
                pairs.push((de, cof));
            }
        }
        Ok(())
    }

    /// Atom test with three-valued outcome.
    ///
    /// Fast path: a member irreducible in a decidable ambient is an atom of
    /// the semidomain (atoms of the ambient inside S are atoms of S).
    pub fn is_atom(&self, s: &Element) -> Result<Verdict> {
        self.require_member(s)?;
        if s.is_zero() {
            return Err(Error::ZeroElement);
        }
        if self.inst.is_unit(s)?.is_proved() {
            return Err(Error::IsUnit);
        }
        if let Some(hit) = self.atom_cache.borrow().get(s) {
            return Ok(hit.clone());
        }
        let verdict = self.is_atom_uncached(s)?;
        self.atom_cache.borrow_mut().insert(s.clone(), verdict.clone());
        Ok(verdict)
    }

    fn is_atom_uncached(&self, s: &Element) -> Result<Verdict> {
        if let Some(true) = self.ambient_irreducible(s)? {
            return Ok(Verdict::proved());
        }
        let (pairs, complete) = self.divisors(s)?;
        for (d, cof) in &pairs {
            if self.inst.is_unit(d)?.is_proved() || self.inst.is_unit(cof)?.is_proved() {
                continue;
            }
            return Ok(Verdict::refuted(Witness::Pair(d.clone(), cof.clone())));
        }
        if complete {
            Ok(Verdict::proved())
        } else {
            Ok(Verdict::unknown(&self.bounds))
        }
    }

    /// Irreducibility in the ambient domain, where decidable: `Some(b)` for
    /// Z- and Z[x]-ambient instances (and the dyadic localization), `None`
    /// elsewhere.
    pub fn ambient_irreducible(&self, s: &Element) -> Result<Option<bool>> {
        match self.inst.kind() {
            InstanceKind::Nat | InstanceKind::SignC0C1 | InstanceKind::NatZ => {
                let p = s.as_poly()?;
                Ok(Some(zx::is_irreducible_zx(p, self.zx_cap)?))
            }
            InstanceKind::Localized {
                dset: DSet::PowersOf(b),
                ..
            } => {
                // in Z[1/b] (b prime) the irreducibles are the primes not
                // dividing b, up to the unit powers of b
                let (num, _) = const_frac_ints(s.as_frac()?)?;
                let base = Int::from(*b);
                let mut odd = num.abs();
                if odd.is_zero() {
                    return Ok(Some(false));
                }
                while (&odd % &base).is_zero() {
                    odd = &odd / &base;
                }
                Ok(Some(is_prime_int(&odd)))
            }
            _ => Ok(None),
        }
    }

    /// Prime-element test: refuted by a bounded witness-pair search; proved
    /// through the descent rule (prime in a decidable ambient plus trivial
    /// additive invertibles); unknown otherwise.
    pub fn is_prime(&self, p: &Element) -> Result<Verdict> {
        self.require_member(p)?;
        if p.is_zero() {
            return Err(Error::ZeroElement);
        }
        if self.inst.is_unit(p)?.is_proved() {
            return Err(Error::IsUnit);
        }
        // descent rule
        if matches!(self.inst.u_status(), UStatus::Trivial) {
            if let Some(true) = self.ambient_irreducible(p)? {
                // decidable ambients here are UFDs, so irreducible = prime
                return Ok(Verdict::proved());
            }
        }
        match self.prime_refutation_search(p)? {
            Some((s1, s2)) => Ok(Verdict::refuted(Witness::Pair(s1, s2))),
            None => Ok(Verdict::unknown(&self.bounds)),
        }
    }

    /// Bounded search for a pair with `p | s1 s2` but `p` dividing neither.
    pub(crate) fn prime_refutation_search(
        &self,
        p: &Element,
    ) -> Result<Option<(Element, Element)>> {
        let corpus = self.inst.enumerate_members(&self.bounds)?;
        let mut nondivisible: Vec<Element> = Vec::new();
        for s in corpus {
            if s.is_zero() {
                continue;
            }
            if !self.divides(p, &s)? {
                nondivisible.push(s);
                if nondivisible.len() >= 60 {
                    break;
                }
            }
        }
        for (i, s1) in nondivisible.iter().enumerate() {
            for s2 in nondivisible.iter().skip(i) {
                let prod = self.inst.mul(s1, s2)?;
                if prod.is_zero() {
                    continue;
                }
                if self.divides(p, &prod)? {
                    return Ok(Some((s1.clone(), s2.clone())));
                }
            }
        }
        Ok(None)
    }

    /// All factorizations of `s` into verified atoms, up to associates,
    /// with a completeness flag.
    pub fn factorizations(&self, s: &Element) -> Result<(Vec<FactorizationZ>, bool)> {
        self.require_member(s)?;
        if s.is_zero() {
            return Err(Error::ZeroElement);
        }
        if self.inst.is_unit(s)?.is_proved() {
            return Err(Error::IsUnit);
        }
        // Monoid-algebra instances factor through the exponent monoid: one
        // factorization per atom-exponent multiset, the coefficient folding
        // into the unit (sign carried on the lex-least atom).
        if !self.inst.is_ambient_mode() {
            match self.inst.kind() {
                InstanceKind::PosMonAlg(_) => return self.monoid_reduced_factorizations(s),
                InstanceKind::Localized {
                    dset: DSet::PositiveConstantTerm,
                    ..
                } => return self.monoid_reduced_factorizations(s),
                _ => {}
            }
        }
        let mut complete = true;
        let mut seen: BTreeSet<Vec<Element>> = BTreeSet::new();
        self.factor_rec(
            s,
            None,
            self.bounds.max_length as usize,
            &mut Vec::new(),
            &mut seen,
            &mut complete,
        )?;
        // Z[x]-ambient instances additionally get the sign-flip transfer
        // route: factor in the ambient, flip factor signs into S with an
        // even number of flips.
        if matches!(
            self.inst.kind(),
            InstanceKind::SignC0C1 | InstanceKind::NatZ | InstanceKind::Nat
        ) && !self.inst.is_ambient_mode()
        {
            self.sign_transfer_factorizations(s, &mut seen)?;
        }
        let out: Vec<FactorizationZ> = seen
            .into_iter()
            .map(|factors| FactorizationZ { factors })
            .collect();
        Ok((out, complete))
    }

    fn factor_rec(
        &self,
        s: &Element,
        min_key: Option<(Rat, Int, Element)>,
        budget: usize,
        stack: &mut Vec<Element>,
        seen: &mut BTreeSet<Vec<Element>>,
        complete: &mut bool,
    ) -> Result<()> {
        if budget == 0 {
            // cannot certify exhaustion past the cut
            *complete = false;
            return Ok(());
        }
        let (pairs, div_complete) = self.divisors(s)?;
        if !div_complete {
            *complete = false;
        }
        for (d, cof) in &pairs {
            if self.inst.is_unit(d)?.is_proved() {
                continue;
            }
            let key = scan_key(d);
            if let Some(ref mk) = min_key {
                if key < *mk {
                    continue;
                }
            }
            let verdict = self.is_atom(d)?;
            if verdict.is_unknown() {
                *complete = false;
            }
            if !verdict.is_proved() {
                continue;
            }
            stack.push(d.clone());
            if self.inst.is_unit(cof)?.is_proved() {
                let mut z = stack.clone();
                z.sort();
                seen.insert(z);
            } else {
                self.factor_rec(cof, Some(key), budget - 1, stack, seen, complete)?;
            }
            stack.pop();
        }
        Ok(())
    }

    /// Factorizations of a monomial-fragment element through its exponent:
    /// each monoid factorization of the exponent yields the factorization
    /// into the corresponding atom monomials. Positive scalars are units
    /// here, and a negative target carries its sign on the lex-least atom.
    fn monoid_reduced_factorizations(&self, s: &Element) -> Result<(Vec<FactorizationZ>, bool)> {
        let m = self.inst.monoid().ok_or(Error::UnsupportedElement)?;
        let (coeff, exp) = match s {
            Element::Poly(p) => {
                if !p.is_monomial() {
                    return Err(Error::UnsupportedElement);
                }
                let t = p.trailing_term()?;
                (
                    t.coeff.rational_value().ok_or(Error::UnsupportedElement)?,
                    t.exp,
                )
            }
            Element::Frac(f) => frag(f)?,
        };
        let monoid_zs = m.factorizations(&exp, &self.bounds)?;
        // the exponent-length bound certifies completeness of the search:
        // atoms have first coordinate >= 1 (FinRank) or value >= 1/max(P)
        let structural_cap: usize = match m.primes() {
            Some(ps) => {
                let maxp = *ps.iter().max().expect("nonempty") as usize;
                let v = &exp.coords()[0];
                let scaled = v * Rat::from_integer(Int::from(maxp as i64));
                usize::try_from(scaled.floor().numer().clone()).unwrap_or(usize::MAX)
            }
            None => exp.coord_u64(0).map(|k| k as usize).unwrap_or(usize::MAX),
        };
        let complete = structural_cap <= self.bounds.max_length as usize;
        let negative = coeff.is_negative();
        let mut out: Vec<FactorizationZ> = Vec::new();
        for z in monoid_zs {
            let mut factors: Vec<Element> = Vec::with_capacity(z.len());
            for (i, a) in z.iter().enumerate() {
                let sign = if negative && i == 0 { -1i64 } else { 1 };
                let c = Coeff::from_rat(
                    self.inst.coeff_ring(),
                    Rat::from_integer(Int::from(sign)),
                )?;
                let p = Poly::monomial(c, a.clone());
                factors.push(self.inst.element_from_poly(p));
            }
            factors.sort();
            out.push(FactorizationZ { factors });
        }
        out.sort();
        out.dedup();
        Ok((out, complete))
    }

    fn sign_transfer_factorizations(
        &self,
        s: &Element,
        seen: &mut BTreeSet<Vec<Element>>,
    ) -> Result<()> {
        let p = s.as_poly()?;
        let fact = zx::kronecker_factor(p, self.zx_cap)?;
        let n = fact.factors.len();
        if n == 0 || n > 16 {
            return Ok(());
        }
        for mask in 0u32..(1 << n) {
            let flips = mask.count_ones();
            let unit_needed = if fact.unit == 1 { 0 } else { 1 };
            if flips % 2 != unit_needed {
                continue;
            }
            let mut factors: Vec<Element> = Vec::with_capacity(n);
            let mut ok = true;
            for (i, f) in fact.factors.iter().enumerate() {
                let signed = if (mask >> i) & 1 == 1 { f.neg() } else { f.clone() };
                let e = Element::Poly(signed);
                if !self.inst.contains(&e)? {
                    ok = false;
                    break;
                }
                factors.push(e);
            }
            if !ok {
                continue;
            }
            factors.sort();
            seen.insert(factors);
        }
        Ok(())
    }

    /// `L(s)`: the set of factorization lengths, completeness propagated.
    pub fn length_set(&self, s: &Element) -> Result<LengthSet> {
        let (zs, complete) = self.factorizations(s)?;
        Ok(LengthSet {
            lengths: zs.iter().map(|z| z.len()).collect(),
            complete,
        })
    }

    /// Associates test: decisive for every built-in (characterized units).
    pub fn associates(&self, s: &Element, t: &Element) -> Result<Verdict> {
        if s.is_zero() || t.is_zero() {
            return Err(Error::ZeroElement);
        }
        match self.inst.unit_quotient(s, t)? {
            Some(u) => Ok(Verdict::proved_with(Witness::Element(u))),
            None => Ok(Verdict::refuted(Witness::Note(
                "no unit of the instance carries one element to the other".into(),
            ))),
        }
    }

    /// An atom dividing `s`: proved with the atom as witness, or unknown at
    /// the bounds.
    pub fn furstenberg_witness(&self, s: &Element) -> Result<Verdict> {
        self.require_member(s)?;
        if s.is_zero() {
            return Err(Error::ZeroElement);
        }
        if self.inst.is_unit(s)?.is_proved() {
            return Err(Error::IsUnit);
        }
        let (pairs, _) = self.divisors(s)?;
        for (d, _) in &pairs {
            if self.inst.is_unit(d)?.is_proved() {
                continue;
            }
            if self.is_atom(d)?.is_proved() {
                return Ok(Verdict::proved_with(Witness::Element(d.clone())));
            }
        }
        Ok(Verdict::unknown(&self.bounds))
    }
}

/// Scan order for divisor and witness searches: ascending total degree,
/// then height, then canonical element order.
fn scan_key(e: &Element) -> (Rat, Int, Element) {
    match e {
        Element::Poly(p) => {
            let lead = p
                .leading_exp()
                .map(|x| x.coords().iter().fold(Rat::zero(), |a, b| a + b))
                .unwrap_or_else(Rat::zero);
            (lead, p.height(), e.clone())
        }
        Element::Frac(f) => {
            let lead = f
                .num
                .leading_exp()
                .map(|x| x.coords().iter().fold(Rat::zero(), |a, b| a + b))
                .unwrap_or_else(Rat::zero);
            (lead, f.num.height() + f.den.height(), e.clone())
        }
    }
}

fn const_frac_ints(f: &Fraction) -> Result<(Int, Int)> {
    if !f.num.is_constant() || !f.den.is_constant() {
        return Err(Error::UnsupportedElement);
    }
    let n = f
        .num
        .constant_term()
        .as_int()
        .cloned()
        .ok_or(Error::UnsupportedElement)?;
    let d = f
        .den
        .constant_term()
        .as_int()
        .cloned()
        .ok_or(Error::UnsupportedElement)?;
    Ok((n, d))
}

/// Monomial fragment of a fraction: coefficient (num coeff / den constant)
/// and exponent; the shape all localized factorization work runs in.
fn frag(f: &Fraction) -> Result<(Rat, Exp)> {
    if !f.num.is_monomial() || !f.den.is_constant() {
        return Err(Error::UnsupportedElement);
    }
    let t = f.num.trailing_term()?;
    let c = t.coeff.rational_value().ok_or(Error::UnsupportedElement)?;
    let d = f
        .den
        .constant_term()
        .rational_value()
        .ok_or(Error::UnsupportedElement)?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok((c / d, t.exp))
}

fn int_divisors_signed(n: &Int) -> Vec<Int> {
    if n.is_zero() {
        return Vec::new();
    }
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = Int::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(-d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q.clone());
                out.push(-q);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

fn is_prime_int(n: &Int) -> bool {
    let n = n.abs();
    if n <= Int::one() {
        return false;
    }
    let mut d = Int::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

/// Nonzero rational scalars up to the height budget, canonical order.
fn rat_scalars(h: u32) -> Vec<Rat> {
    let mut out = Vec::new();
    for den in 1..=h as i64 {
        for num in -(h as i64)..=(h as i64) {
            if num == 0 {
                continue;
            }
            let q = Rat::new(Int::from(num), Int::from(den));
            if q.numer().abs() == Int::from(num.abs()) {
                out.push(q);
            }
        }
    }
    out.sort_by_key(|q| (crate::exact::rat_height(q), q.clone()));
    out.dedup();
    out
}

/// Representatives of Q(i)*/Q_{>0}: primitive Gaussian integers a+bi with
/// gcd(a,b) = 1, sign-normalized (a > 0, or a = 0 and b > 0), height <= h.
fn gauss_class_reps(h: u32) -> Vec<GaussRat> {
    let mut out = Vec::new();
    let hi = h as i64;
    for a in 0..=hi {
        for b in -hi..=hi {
            if a == 0 && b <= 0 {
                continue;
            }
            if a.gcd(&b) != 1 {
                continue;
            }
            out.push(GaussRat::new(
                Rat::from_integer(Int::from(a)),
                Rat::from_integer(Int::from(b)),
            ));
        }
    }
    out.sort_by_key(|g| (Coeff::Gauss(g.clone()).height(), g.clone()));
    // both sign classes of each primitive representative
    let mut full = Vec::new();
    for g in out {
        full.push(g.clone());
        full.push(g.neg());
    }
    full
}

/// Canonical representative of the positive-rational-scaling class of a
/// Gaussian-coefficient polynomial: the trailing coefficient becomes a
/// primitive sign-normalized Gaussian integer.
fn gauss_class_canonical(p: &Poly) -> Result<Poly> {
    if p.is_zero() {
        return Ok(p.clone());
    }
    let t = p.trailing_term()?;
    let g = t.coeff.as_gauss().ok_or(Error::UnsupportedElement)?;
    // write g = r * (a + b i) with r in Q_{>0} and (a, b) coprime integers
    let re = g.re();
    let im = g.im();
    let den_lcm = re.denom().lcm(im.denom());
    let a = re.numer() * (&den_lcm / re.denom());
    let b = im.numer() * (&den_lcm / im.denom());
    let gg = a.gcd(&b);
    if gg.is_zero() {
        return Ok(p.clone());
    }
    // scaling is by positive rationals only, so the sign of the primitive
    // part is part of the class and must be preserved
    let (a, b) = (&a / &gg, &b / &gg);
    let target = GaussRat::new(Rat::from_integer(a), Rat::from_integer(b));
    // scale p by target / g (a positive rational by construction)
    let ratio = target.div(g)?;
    debug_assert!(ratio.is_rational() && ratio.re().is_positive());
    p.scale(&Coeff::Gauss(ratio))
}

fn trailing_x_order(p: &Poly) -> Result<u32> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let t = p.trailing_term()?;
    t.exp.coord_u64(0).map(|v| v as u32).ok_or(Error::UnsupportedElement)
}

/// Monic divisors of a rational-coefficient polynomial in Q[x]: clear
/// denominators, factor the primitive integer polynomial completely, and
/// normalize subset products to monic.
fn monic_divisors_rat(s: &Poly, cap: u32) -> Result<Vec<Poly>> {
    if s.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // clear denominators: s * L has integer coefficients
    let mut lcm = Int::one();
    for (_, c) in s.terms() {
        let q = c.as_rat().ok_or(Error::UnsupportedElement)?;
        lcm = lcm.lcm(q.denom());
    }
    let mut int_terms = Vec::new();
    for (e, c) in s.terms() {
        let q = c.as_rat().unwrap();
        int_terms.push((
            e.clone(),
            Coeff::Int(q.numer() * (&lcm / q.denom())),
        ));
    }
    let zs = Poly::from_terms(CoeffRing::Int, 1, int_terms)?;
    let fact = zx::kronecker_factor(&zs, cap)?;
    let positive_degree: Vec<&Poly> = fact.factors.iter().filter(|f| !f.is_constant()).collect();
    let mut monics: BTreeSet<Poly> = BTreeSet::new();
    let count = positive_degree.len();
    for mask in 0u32..(1 << count) {
        let mut prod = Poly::one(CoeffRing::Int, 1);
        for (i, f) in positive_degree.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                prod = prod.mul(f)?;
            }
        }
        monics.insert(to_monic_rat(&prod)?);
    }
    Ok(monics.into_iter().collect())
}

fn to_monic_rat(p: &Poly) -> Result<Poly> {
    let mut terms = Vec::new();
    for (e, c) in p.terms() {
        let v = match c {
            Coeff::Int(v) => Rat::from_integer(v.clone()),
            Coeff::Rat(v) => v.clone(),
            Coeff::Gauss(_) => return Err(Error::MixedRings),
        };
        terms.push((e.clone(), Coeff::Rat(v)));
    }
    let q = Poly::from_terms(CoeffRing::Rat, 1, terms)?;
    let lead = q
        .leading_coeff()
        .cloned()
        .unwrap_or_else(|| Coeff::one(CoeffRing::Rat));
    let inv = lead.inverse().ok_or(Error::NonExactDivision)?;
    q.scale(&inv)
}

/// Monic divisors in Q(i)[x] for the supported fragment: powers of x times
/// a tail of degree <= 2 (quadratics split by a discriminant square root in
/// Q(i) when possible).
fn monic_divisors_gauss(s: &Poly) -> Result<Vec<Poly>> {
    if s.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let v = trailing_x_order(s)?;
    // tail: s / x^v, constant term nonzero
    let xv = Poly::monomial(Coeff::one(CoeffRing::Gauss), Exp::from_u64s(&[v as u64]));
    let tail = s.exact_div(&xv)?.expect("x^v divides");
    let tail_deg = tail.degree_u32()?;
    let mut tail_divs: Vec<Poly> = vec![Poly::one(CoeffRing::Gauss, 1)];
    match tail_deg {
        0 => {}
        1 => tail_divs.push(to_monic_gauss(&tail)?),
        2 => {
            let monic = to_monic_gauss(&tail)?;
            // monic = x^2 + b x + c; roots (-b ± sqrt(b^2 - 4c)) / 2
            let b = monic
                .coeff_at(&Exp::from_u64s(&[1]))
                .as_gauss()
                .cloned()
                .unwrap_or_else(|| GaussRat::from_rat(Rat::zero()));
            let c = monic
                .coeff_at(&Exp::from_u64s(&[0]))
                .as_gauss()
                .cloned()
                .expect("nonzero constant term");
            let four = GaussRat::from_rat(Rat::from_integer(Int::from(4)));
            let disc = b.mul(&b).sub(&four.mul(&c));
            if let Some(r) = disc.sqrt() {
                let two = GaussRat::from_rat(Rat::from_integer(Int::from(2)));
                for root in [b.neg().add(&r).div(&two)?, b.neg().sub(&r).div(&two)?] {
                    // x - root
                    let lin = Poly::from_terms(
                        CoeffRing::Gauss,
                        1,
                        vec![
                            (Exp::from_u64s(&[1]), Coeff::one(CoeffRing::Gauss)),
                            (Exp::from_u64s(&[0]), Coeff::Gauss(root.neg())),
                        ],
                    )?;
                    if !tail_divs.contains(&lin) {
                        tail_divs.push(lin);
                    }
                }
            }
            tail_divs.push(monic);
        }
        _ => return Err(Error::UnsupportedElement),
    }
    let mut out = Vec::new();
    for j in 0..=v {
        let xj = Poly::monomial(Coeff::one(CoeffRing::Gauss), Exp::from_u64s(&[j as u64]));
        for t in &tail_divs {
            let cand = xj.mul(t)?;
            if s.exact_div(&cand)?.is_some() {
                out.push(cand);
            }
        }
    }
    Ok(out)
}

fn to_monic_gauss(p: &Poly) -> Result<Poly> {
    let lead = p
        .leading_coeff()
        .cloned()
        .ok_or(Error::ZeroPolynomial)?;
    let inv = lead.inverse().ok_or(Error::NonExactDivision)?;
    p.scale(&inv)
}
