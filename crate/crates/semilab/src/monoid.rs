//! Exponent monoids for the monoid-algebra instances: membership, atoms,
//! factorizations, and length sets in `M = <1/p : p in P>` over a finite
//! prime set and `M = <(1,n) : 1 <= n <= N>`.
//!
//! Reciprocal-prime membership reduces to a numerical semigroup: with
//! `N = prod(P)`, the element `a/N` lies in `M` iff `a` is representable
//! over the generators `N/p`, decided by a boolean dynamic-programming
//! table. Finite-rank membership is a bounded lattice search; generators
//! carry first coordinate >= 1, so the first coordinate bounds every
//! enumeration.

use std::collections::BTreeSet;

use num_traits::{One, Signed};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::exact::{rat_height, Int, Rat};
use crate::poly::Exp;

#[derive(Debug, Clone, PartialEq, Eq)]
enum MonoidKind {
    RecipPrimes { primes: Vec<u64>, modulus: u64 },
    FinRank { gens: Vec<Exp> },
}

/// A finitely described exponent monoid with its cached membership table.
/// Immutable after construction; every query is pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidSpec {
    kind: MonoidKind,
    /// Numerator reachability table for RecipPrimes, indexed by `a` in
    /// `a/modulus`; empty for FinRank.
    table: Vec<bool>,
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reach_table(gens: &[u64], upto: usize) -> Vec<bool> {
    let mut table = vec![false; upto + 1];
    table[0] = true;
    for a in 1..=upto {
        for &g in gens {
            let g = g as usize;
            if g <= a && table[a - g] {
                table[a] = true;
                break;
            }
        }
    }
    table
}

impl MonoidSpec {
    /// `M = <1/p : p in P>` for a finite set of primes.
    pub fn recip_primes(primes: &[u64]) -> Result<MonoidSpec> {
        if primes.is_empty() {
            return Err(Error::InvalidMonoidSpec("empty prime set".into()));
        }
        let mut set: BTreeSet<u64> = BTreeSet::new();
        for &p in primes {
            if !is_prime_u64(p) {
                return Err(Error::InvalidMonoidSpec(format!("{} is not prime", p)));
            }
            set.insert(p);
        }
        let primes: Vec<u64> = set.into_iter().collect();
        let modulus: u64 = primes.iter().product();
        let gens: Vec<u64> = primes.iter().map(|&p| modulus / p).collect();
        // The table must end in a run of `modulus` consecutive reachable
        // numerators; past such a window every numerator is reachable by
        // shedding whole `modulus = p * (modulus/p)` blocks, so queries
        // beyond the extent are answered `true`. Grow until the window
        // appears (it always does: gcd of the generators is 1).
        let mut extent = (4 * modulus) as usize;
        let table = loop {
            let table = reach_table(&gens, extent);
            let window = modulus as usize;
            if table.len() > window && table[table.len() - window..].iter().all(|&b| b) {
                break table;
            }
            extent *= 2;
        };
        Ok(MonoidSpec {
            kind: MonoidKind::RecipPrimes { primes, modulus },
            table,
        })
    }

    /// `M = <gens>` in dimension 2, generators with positive integer first
    /// coordinate (which is what bounds every search).
    pub fn fin_rank(gens: Vec<Exp>) -> Result<MonoidSpec> {
        if gens.is_empty() {
            return Err(Error::InvalidMonoidSpec("empty generator set".into()));
        }
        for g in &gens {
            if g.dim() != 2 {
                return Err(Error::InvalidMonoidSpec(
                    "finrank generators must be two-dimensional".into(),
                ));
            }
            let integral = g.coords().iter().all(crate::exact::rat_is_integer);
            if !integral || g.is_zero() {
                return Err(Error::InvalidMonoidSpec(
                    "finrank generators must be nonzero with coordinates in N0".into(),
                ));
            }
            if g.coord_u64(0).map(|c| c == 0).unwrap_or(true) {
                return Err(Error::InvalidMonoidSpec(
                    "finrank generators need first coordinate >= 1".into(),
                ));
            }
        }
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        Ok(MonoidSpec {
            kind: MonoidKind::FinRank { gens },
            table: Vec::new(),
        })
    }

    /// The standard family `<(1,n) : 1 <= n <= N>`.
    pub fn fin_rank_steps(n: u64) -> Result<MonoidSpec> {
        if n == 0 {
            return Err(Error::InvalidMonoidSpec("rank bound must be >= 1".into()));
        }
        let gens = (1..=n).map(|k| Exp::from_u64s(&[1, k])).collect();
        MonoidSpec::fin_rank(gens)
    }

    /// Parse the CLI spec strings `recip-primes:2,3,5` and
    /// `finrank:(1,1),(1,2),(1,3)`.
    pub fn parse(spec: &str) -> Result<MonoidSpec> {
        if let Some(rest) = spec.strip_prefix("recip-primes:") {
            let primes: Vec<u64> = rest
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::InvalidMonoidSpec(format!("bad prime `{}`", s)))
                })
                .collect::<Result<_>>()?;
            return MonoidSpec::recip_primes(&primes);
        }
        if let Some(rest) = spec.strip_prefix("finrank:") {
            let mut gens = Vec::new();
            let body = rest.trim();
            let mut cursor = body;
            while !cursor.is_empty() {
                let cursor2 = cursor.trim_start_matches(',').trim();
                let open = cursor2
                    .strip_prefix('(')
                    .ok_or_else(|| Error::InvalidMonoidSpec(format!("expected `(` in `{}`", rest)))?;
                let close = open
                    .find(')')
                    .ok_or_else(|| Error::InvalidMonoidSpec(format!("missing `)` in `{}`", rest)))?;
                let inner = &open[..close];
                let parts: Vec<&str> = inner.split(',').collect();
                if parts.len() != 2 {
                    return Err(Error::InvalidMonoidSpec(format!(
                        "generator `{}` is not a pair",
                        inner
                    )));
                }
                let a: u64 = parts[0].trim().parse().map_err(|_| {
                    Error::InvalidMonoidSpec(format!("bad coordinate `{}`", parts[0]))
                })?;
                let b: u64 = parts[1].trim().parse().map_err(|_| {
                    Error::InvalidMonoidSpec(format!("bad coordinate `{}`", parts[1]))
                })?;
                gens.push(Exp::from_u64s(&[a, b]));
                cursor = &open[close + 1..];
            }
            return MonoidSpec::fin_rank(gens);
        }
        Err(Error::InvalidMonoidSpec(format!(
            "unknown monoid spec `{}`",
            spec
        )))
    }

    pub fn render(&self) -> String {
        match &self.kind {
            MonoidKind::RecipPrimes { primes, .. } => format!(
                "recip-primes:{}",
                primes
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            MonoidKind::FinRank { gens } => format!(
                "finrank:{}",
                gens.iter()
                    .map(|g| format!(
                        "({},{})",
                        g.coord_u64(0).unwrap(),
                        g.coord_u64(1).unwrap()
                    ))
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            MonoidKind::RecipPrimes { .. } => 1,
            MonoidKind::FinRank { .. } => 2,
        }
    }

    pub fn primes(&self) -> Option<&[u64]> {
        match &self.kind {
            MonoidKind::RecipPrimes { primes, .. } => Some(primes),
            MonoidKind::FinRank { .. } => None,
        }
    }

    pub fn generators(&self) -> Vec<Exp> {
        match &self.kind {
            MonoidKind::RecipPrimes { primes, .. } => primes
                .iter()
                .map(|&p| Exp::one_dim(Rat::new(Int::from(1), Int::from(p))).unwrap())
                .collect(),
            MonoidKind::FinRank { gens } => gens.clone(),
        }
    }

    /// RecipPrimes numerator of `q` over the common modulus, when the
    /// denominator of `q` divides it.
    fn recip_numerator(&self, q: &Rat) -> Option<u64> {
        let modulus = match &self.kind {
            MonoidKind::RecipPrimes { modulus, .. } => *modulus,
            _ => return None,
        };
        let m = Int::from(modulus);
        let scaled = q * Rat::from_integer(m);
        if !scaled.denom().is_one() {
            return None;
        }
        u64::try_from(scaled.numer().clone()).ok()
    }

    fn recip_member(&self, numerator: u64) -> bool {
        let a = numerator as usize;
        if a < self.table.len() {
            self.table[a]
        } else {
            // Beyond the cached extent every numerator is representable:
            // the table extent is >= 4*modulus and subtracting the full
            // `modulus` block stays above the threshold where the table is
            // already all-true.
            true
        }
    }

    /// Exact membership decision.
    pub fn contains(&self, q: &Exp) -> Result<bool> {
        if q.dim() != self.dim() {
            return Err(Error::DimensionMismatch);
        }
        if q.coords().iter().any(|c| c.is_negative()) {
            return Err(Error::DimensionMismatch);
        }
        match &self.kind {
            MonoidKind::RecipPrimes { .. } => {
                let val = &q.coords()[0];
                match self.recip_numerator(val) {
                    Some(a) => Ok(self.recip_member(a)),
                    // denominator does not divide prod(P): not representable
                    None => Ok(false),
                }
            }
            MonoidKind::FinRank { gens } => {
                if q.is_zero() {
                    return Ok(true);
                }
                Ok(fin_rank_reach(gens, q))
            }
        }
    }

    /// All atoms within the height budget: members `q != 0` admitting no
    /// split `q = q1 + q2` with both parts nonzero members.
    pub fn atoms(&self, bounds: &Bounds) -> Result<Vec<Exp>> {
        let mut out = Vec::new();
        for q in self.members_within(bounds)? {
            if !q.is_zero() && self.is_atom(&q)? {
                out.push(q);
            }
        }
        Ok(out)
    }

    pub fn is_atom(&self, q: &Exp) -> Result<bool> {
        if q.is_zero() || !self.contains(q)? {
            return Ok(false);
        }
        match &self.kind {
            MonoidKind::RecipPrimes { .. } => {
                let a = self.recip_numerator(&q.coords()[0]).expect("member");
                for b in 1..=(a / 2) {
                    if self.recip_member(b) && self.recip_member(a - b) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            MonoidKind::FinRank { .. } => {
                for (q1, q2) in self.splits(q)? {
                    if !q1.is_zero() && !q2.is_zero() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// All decompositions `q = q1 + q2` into (possibly zero) members, with
    /// `q1 <= q2` canonically.
    pub fn splits(&self, q: &Exp) -> Result<Vec<(Exp, Exp)>> {
        if !self.contains(q)? {
            return Err(Error::NotMonoidMember);
        }
        let mut out = Vec::new();
        for q1 in self.members_below(q)? {
            let q2 = q.checked_sub(&q1)?.expect("members_below stays below");
            if self.contains(&q2)? && q1 <= q2 {
                out.push((q1, q2));
            }
        }
        Ok(out)
    }

    /// Members `m` with `q - m` still coordinatewise nonnegative.
    pub fn members_below(&self, q: &Exp) -> Result<Vec<Exp>> {
        match &self.kind {
            MonoidKind::RecipPrimes { modulus, .. } => {
                let a = self
                    .recip_numerator(&q.coords()[0])
                    .ok_or(Error::NotMonoidMember)?;
                let mut out = Vec::new();
                for b in 0..=a {
                    if self.recip_member(b) {
                        out.push(Exp::one_dim(Rat::new(Int::from(b), Int::from(*modulus))).unwrap());
                    }
                }
                Ok(out)
            }
            MonoidKind::FinRank { gens } => {
                let k = q.coord_u64(0).ok_or(Error::NotMonoidMember)?;
                let s = q.coord_u64(1).ok_or(Error::NotMonoidMember)?;
                let mut out = Vec::new();
                for k1 in 0..=k {
                    for s1 in 0..=s {
                        let cand = Exp::from_u64s(&[k1, s1]);
                        if fin_rank_reach(gens, &cand) || cand.is_zero() {
                            out.push(cand);
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// Atoms that can appear in a factorization of `q` (coordinatewise
    /// below `q`).
    ///
    /// RecipPrimes atoms are exactly the generators `1/p`: any member is a
    /// sum of generators (so a sum of two or more splits), and `N/p` is not
    /// a sum of the other generators since those are all divisible by `p`
    /// while `N/p` is not. The split-search `is_atom` cross-checks this in
    /// tests.
    pub fn atoms_below(&self, q: &Exp) -> Result<Vec<Exp>> {
        match &self.kind {
            MonoidKind::RecipPrimes { .. } => {
                let mut out: Vec<Exp> = self
                    .generators()
                    .into_iter()
                    .filter(|g| matches!(q.checked_sub(g), Ok(Some(_))))
                    .collect();
                out.sort();
                Ok(out)
            }
            MonoidKind::FinRank { .. } => {
                let mut out = Vec::new();
                for m in self.members_below(q)? {
                    if !m.is_zero() && self.is_atom(&m)? {
                        out.push(m);
                    }
                }
                Ok(out)
            }
        }
    }

    /// All multisets of atoms summing to `q`, each sorted ascending. The
    /// search is complete for both monoid kinds: numerators (respectively
    /// first coordinates) strictly decrease along every branch.
    pub fn factorizations(&self, q: &Exp, bounds: &Bounds) -> Result<Vec<Vec<Exp>>> {
        if !self.contains(q)? {
            return Err(Error::NotMonoidMember);
        }
        if q.is_zero() {
            return Ok(vec![Vec::new()]);
        }
        let atoms = self.atoms_below(q)?;
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.search(q, &atoms, 0, bounds.max_length as usize, &mut stack, &mut out)?;
        Ok(out)
    }

    fn search(
        &self,
        remaining: &Exp,
        atoms: &[Exp],
        min_idx: usize,
        budget: usize,
        stack: &mut Vec<Exp>,
        out: &mut Vec<Vec<Exp>>,
    ) -> Result<()> {
        if remaining.is_zero() {
            out.push(stack.clone());
            return Ok(());
        }
        if budget == 0 {
            return Ok(());
        }
        for (i, a) in atoms.iter().enumerate().skip(min_idx) {
            if let Some(rest) = remaining.checked_sub(a)? {
                if self.contains(&rest)? {
                    stack.push(a.clone());
                    self.search(&rest, atoms, i, budget - 1, stack, out)?;
                    stack.pop();
                }
            }
        }
        Ok(())
    }

    /// `L_M(q)`: cardinalities of the factorizations.
    pub fn length_set(&self, q: &Exp, bounds: &Bounds) -> Result<BTreeSet<usize>> {
        Ok(self
            .factorizations(q, bounds)?
            .iter()
            .map(|z| z.len())
            .collect())
    }

    /// Deterministic member enumeration within the bounds, ascending.
    pub fn members_within(&self, bounds: &Bounds) -> Result<Vec<Exp>> {
        match &self.kind {
            MonoidKind::RecipPrimes { modulus, .. } => {
                let h = bounds.max_height as i64;
                let mut out = Vec::new();
                let top = (bounds.max_height as u64) * modulus;
                for a in 0..=top {
                    if !self.recip_member(a) {
                        continue;
                    }
                    let q = Rat::new(Int::from(a), Int::from(*modulus));
                    if rat_height(&q) <= Int::from(h) {
                        out.push(Exp::one_dim(q).unwrap());
                    }
                }
                Ok(out)
            }
            MonoidKind::FinRank { gens } => {
                let h = bounds.max_height as u64;
                let mut out = Vec::new();
                for k in 0..=h {
                    for s in 0..=(h * h) {
                        let cand = Exp::from_u64s(&[k, s]);
                        if cand.is_zero() || fin_rank_reach(gens, &cand) {
                            out.push(cand);
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// True for both built-in kinds; recorded, not computed.
    pub fn torsion_free(&self) -> bool {
        true
    }
}

/// Reachability of `q` as a nonnegative combination of generators; the
/// positive first coordinates cap the recursion depth.
fn fin_rank_reach(gens: &[Exp], q: &Exp) -> bool {
    if q.is_zero() {
        return true;
    }
    for g in gens {
        if let Ok(Some(rest)) = q.checked_sub(g) {
            if fin_rank_reach(gens, &rest) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> Exp {
        Exp::one_dim(crate::exact::rat_of(n, d)).unwrap()
    }

    /// Independent oracle for RecipPrimes membership: exhaustive search
    /// over coefficient tuples `q = sum c_p / p` with `c_p <= q * p`.
    fn oracle_recip_member(primes: &[u64], target: &Rat) -> bool {
        fn go(primes: &[u64], target: &Rat) -> bool {
            if target.is_zero() {
                return true;
            }
            if target.is_negative() || primes.is_empty() {
                return false;
            }
            let p = primes[0];
            let rest = &primes[1..];
            let unit = Rat::new(Int::from(1), Int::from(p));
            let mut used = Rat::zero();
            while &used <= target {
                if go(rest, &(target - &used)) {
                    return true;
                }
                used += &unit;
            }
            false
        }
        go(primes, target)
    }

    #[test]
    fn membership_examples() {
        let m23 = MonoidSpec::recip_primes(&[2, 3]).unwrap();
        // 5/6 = 1/2 + 1/3 (oracle: exhaustive a_p search)
        assert!(oracle_recip_member(&[2, 3], &crate::exact::rat_of(5, 6)));
        assert!(m23.contains(&q(5, 6)).unwrap());
        // 1/6 is not representable over <3, 2>
        assert!(!oracle_recip_member(&[2, 3], &crate::exact::rat_of(1, 6)));
        assert!(!m23.contains(&q(1, 6)).unwrap());
        // denominators outside prod(P) are simply non-members
        assert!(!m23.contains(&q(1, 5)).unwrap());

        let fr = MonoidSpec::fin_rank_steps(3).unwrap();
        // (2,4) = (1,1) + (1,3)
        assert!(fr.contains(&Exp::from_u64s(&[2, 4])).unwrap());
        assert!(!fr.contains(&Exp::from_u64s(&[1, 4])).unwrap());
        assert!(!fr.contains(&Exp::from_u64s(&[0, 1])).unwrap());
        assert!(fr.contains(&Exp::from_u64s(&[0, 0])).unwrap());
    }

    #[test]
    fn membership_matches_oracle_sweep() {
        // Full sweep against the exhaustive representation oracle for
        // P within {2,3,5}, numerators up to 3*prod(P).
        for primes in [vec![2u64], vec![2, 3], vec![2, 3, 5], vec![3, 5], vec![5]] {
            let m = MonoidSpec::recip_primes(&primes).unwrap();
            let modulus: u64 = primes.iter().product();
            for a in 0..=(3 * modulus) {
                let target = Rat::new(Int::from(a), Int::from(modulus));
                let got = m
                    .contains(&Exp::one_dim(target.clone()).unwrap())
                    .unwrap();
                assert_eq!(
                    got,
                    oracle_recip_member(&primes, &target),
                    "P={:?} a={}",
                    primes,
                    a
                );
            }
        }
    }

    #[test]
    fn atoms_examples() {
        let m23 = MonoidSpec::recip_primes(&[2, 3]).unwrap();
        let atoms = m23.atoms(&Bounds::default().with_height(6)).unwrap();
        assert_eq!(atoms, vec![q(1, 3), q(1, 2)]);

        let m2 = MonoidSpec::recip_primes(&[2]).unwrap();
        let atoms = m2.atoms(&Bounds::default().with_height(6)).unwrap();
        assert_eq!(atoms, vec![q(1, 2)]);

        let fr = MonoidSpec::fin_rank_steps(3).unwrap();
        let atoms = fr.atoms(&Bounds::default().with_height(3)).unwrap();
        assert_eq!(
            atoms,
            vec![
                Exp::from_u64s(&[1, 1]),
                Exp::from_u64s(&[1, 2]),
                Exp::from_u64s(&[1, 3])
            ]
        );
    }

    #[test]
    fn factorization_examples() {
        let bounds = Bounds::default();
        // FinRank {(1,n): n<=3}, (2,4): exactly {(1,1)+(1,3), (1,2)+(1,2)}
        let fr = MonoidSpec::fin_rank_steps(3).unwrap();
        let zs = fr.factorizations(&Exp::from_u64s(&[2, 4]), &bounds).unwrap();
        let expect: BTreeSet<Vec<Exp>> = [
            vec![Exp::from_u64s(&[1, 1]), Exp::from_u64s(&[1, 3])],
            vec![Exp::from_u64s(&[1, 2]), Exp::from_u64s(&[1, 2])],
        ]
        .into_iter()
        .collect();
        assert_eq!(zs.into_iter().collect::<BTreeSet<_>>(), expect);
        assert_eq!(
            fr.length_set(&Exp::from_u64s(&[2, 4]), &bounds).unwrap(),
            [2usize].into_iter().collect()
        );

        // RecipPrimes {2,3}: 1 = 1/2+1/2 = 1/3+1/3+1/3
        let m23 = MonoidSpec::recip_primes(&[2, 3]).unwrap();
        let zs = m23.factorizations(&q(1, 1), &bounds).unwrap();
        let expect: BTreeSet<Vec<Exp>> = [
            vec![q(1, 2), q(1, 2)],
            vec![q(1, 3), q(1, 3), q(1, 3)],
        ]
        .into_iter()
        .collect();
        assert_eq!(zs.into_iter().collect::<BTreeSet<_>>(), expect);
        assert_eq!(
            m23.length_set(&q(1, 1), &bounds).unwrap(),
            [2usize, 3].into_iter().collect()
        );

        // RecipPrimes {2,3,5}: lengths {2,3,5}
        let m235 = MonoidSpec::recip_primes(&[2, 3, 5]).unwrap();
        let lens = m235.length_set(&q(1, 1), &bounds).unwrap();
        assert_eq!(lens, [2usize, 3, 5].into_iter().collect());
        assert_eq!(m235.factorizations(&q(1, 1), &bounds).unwrap().len(), 3);
    }

    #[test]
    fn factorizations_sum_to_target_and_are_atoms() {
        let bounds = Bounds::default();
        let m235 = MonoidSpec::recip_primes(&[2, 3, 5]).unwrap();
        for target in [q(1, 1), q(5, 6), q(31, 30), q(2, 1)] {
            if !m235.contains(&target).unwrap() {
                continue;
            }
            for z in m235.factorizations(&target, &bounds).unwrap() {
                let mut sum = Exp::zero(1);
                for a in &z {
                    assert!(m235.is_atom(a).unwrap());
                    sum = sum.add(a).unwrap();
                }
                assert_eq!(sum, target);
            }
        }
    }

    #[test]
    fn fin_rank_first_coordinate_grading() {
        // every factorization of (k, s) has length exactly k: the
        // half-factoriality of the step monoid, swept over the whole box
        // k <= 5, s <= 15.
        let fr = MonoidSpec::fin_rank_steps(3).unwrap();
        let bounds = Bounds::default().with_length(16);
        for k in 1..=5u64 {
            for s in 1..=15u64 {
                let target = Exp::from_u64s(&[k, s]);
                if !fr.contains(&target).unwrap() {
                    continue;
                }
                let zs = fr.factorizations(&target, &bounds).unwrap();
                assert!(!zs.is_empty(), "member ({},{}) must factor", k, s);
                for z in zs {
                    assert_eq!(z.len() as u64, k, "length at ({},{})", k, s);
                }
            }
        }
    }

    #[test]
    fn generator_shortcut_matches_split_search() {
        // atoms_below (generator characterization) vs the DP split test
        for primes in [vec![2u64], vec![2, 3], vec![2, 3, 5]] {
            let m = MonoidSpec::recip_primes(&primes).unwrap();
            let modulus: u64 = primes.iter().product();
            for a in 1..=(3 * modulus) {
                let target = Rat::new(Int::from(a), Int::from(modulus));
                let e = Exp::one_dim(target).unwrap();
                if !m.contains(&e).unwrap() {
                    continue;
                }
                let shortcut = m.atoms_below(&e).unwrap();
                let mut split: Vec<Exp> = Vec::new();
                for b in m.members_below(&e).unwrap() {
                    if !b.is_zero() && m.is_atom(&b).unwrap() {
                        split.push(b);
                    }
                }
                assert_eq!(shortcut, split, "P={:?} a={}", primes, a);
            }
        }
    }

    #[test]
    fn spec_strings_roundtrip() {
        let m = MonoidSpec::parse("recip-primes:2,3,5").unwrap();
        assert_eq!(m.render(), "recip-primes:2,3,5");
        let f = MonoidSpec::parse("finrank:(1,1),(1,2),(1,3)").unwrap();
        assert_eq!(f.render(), "finrank:(1,1),(1,2),(1,3)");
        assert_eq!(f, MonoidSpec::fin_rank_steps(3).unwrap());
        assert!(MonoidSpec::parse("recip-primes:4").is_err());
        assert!(MonoidSpec::parse("finrank:(0,1)").is_err());
        assert!(MonoidSpec::parse("nope").is_err());
    }

    #[test]
    fn large_prime_budget_lengths() {
        // max L(1) = max(P): the longest factorization uses 1/p_max.
        let primes = [2u64, 3, 5, 7, 11, 13];
        for upto in 1..=primes.len() {
            let set = &primes[..upto];
            let m = MonoidSpec::recip_primes(set).unwrap();
            let lens = m
                .length_set(&q(1, 1), &Bounds::default().with_length(14))
                .unwrap();
            assert_eq!(
                lens.iter().max().copied().unwrap(),
                *set.last().unwrap() as usize
            );
        }
    }
}
