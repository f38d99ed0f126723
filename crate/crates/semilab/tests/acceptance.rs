//! Acceptance suite: the paper-level behaviors the crate must reproduce,
//! one criterion per test, each printing a single PASS line (visible with
//! `cargo test --test acceptance -- --nocapture`).
//!
//! Expected values marked as derived were computed by the independent
//! oracles in this file (plain interpolation-based divisor search and
//! exhaustive monoid representation search) and frozen here.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use semilab::bounds::Bounds;
use semilab::exact::{rat_of, Coeff, CoeffRing, GaussRat, Int, Rat};
use semilab::lab::{ChainStrategy, Lab, LengthFn, Overall, TheoremId};
use semilab::monoid::MonoidSpec;
use semilab::poly::{Exp, Poly};
use semilab::semidomain::{DSet, Element, Fraction, SemidomainInstance, Verdict, Witness};

fn pass(n: u32, what: &str) {
    println!("ACCEPTANCE C{:02} PASS — {}", n, what);
}

fn zx(coeffs: &[i64]) -> Poly {
    Poly::from_int_coeffs(CoeffRing::Int, coeffs)
}

fn ze(coeffs: &[i64]) -> Element {
    Element::Poly(zx(coeffs))
}

fn qe(terms: &[(i64, i64, u64)]) -> Element {
    let items = terms
        .iter()
        .map(|&(n, d, e)| (Exp::from_u64s(&[e]), Coeff::Rat(rat_of(n, d))))
        .collect();
    Element::Poly(Poly::from_terms(CoeffRing::Rat, 1, items).unwrap())
}

fn ge(terms: &[(i64, i64, u64)]) -> Element {
    let items = terms
        .iter()
        .map(|&(re, im, e)| {
            (
                Exp::from_u64s(&[e]),
                Coeff::Gauss(GaussRat::new(rat_of(re, 1), rat_of(im, 1))),
            )
        })
        .collect();
    Element::Poly(Poly::from_terms(CoeffRing::Gauss, 1, items).unwrap())
}

fn fe2(coeff: i64, exp: &[u64; 2]) -> Element {
    Element::Frac(
        Fraction::new(
            Poly::monomial(Coeff::Int(Int::from(coeff)), Exp::from_u64s(exp)),
            Poly::one(CoeffRing::Int, 2),
        )
        .unwrap(),
    )
}

// ----------------------------------------------------------------------
// independent oracles (no code shared with the engine under test)
// ----------------------------------------------------------------------

fn oracle_eval(coeffs: &[Int], x: i64) -> Int {
    let mut acc = Int::zero();
    for c in coeffs.iter().rev() {
        acc = acc * Int::from(x) + c;
    }
    acc
}

fn oracle_int_divisors(n: &Int) -> Vec<Int> {
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
    out
}

/// Complete divisor set of an integer polynomial by plain integer-point
/// interpolation through divisor tuples of its values.
fn oracle_divisors_zx(f: &Poly) -> BTreeSet<Poly> {
    let coeffs = f.int_coeff_vec().unwrap();
    let deg = coeffs.len() - 1;
    let mut points: Vec<(i64, Int)> = Vec::new();
    let mut k = 0i64;
    while points.len() < deg + 1 {
        for x in [k, -k] {
            if points.len() == deg + 1 {
                break;
            }
            if points.iter().any(|(p, _)| *p == x) {
                continue;
            }
            let v = oracle_eval(&coeffs, x);
            if !v.is_zero() {
                points.push((x, v));
            }
        }
        k += 1;
    }
    let lists: Vec<Vec<Int>> = points.iter().map(|(_, v)| oracle_int_divisors(v)).collect();
    let mut found = BTreeSet::new();
    let mut idx = vec![0usize; points.len()];
    loop {
        let mut acc = vec![Rat::zero(); points.len()];
        for (i, (xi, _)) in points.iter().enumerate() {
            let yi = &lists[i][idx[i]];
            let mut basis = vec![Rat::one()];
            let mut den = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                den *= Rat::from_integer(Int::from(xi - xj));
                let mut next = vec![Rat::zero(); basis.len() + 1];
                for (t, b) in basis.iter().enumerate() {
                    next[t + 1] += b;
                    next[t] -= b * Rat::from_integer(Int::from(*xj));
                }
                basis = next;
            }
            let scale = Rat::from_integer(yi.clone()) / den;
            for (t, b) in basis.iter().enumerate() {
                acc[t] += b * &scale;
            }
        }
        let integral = acc.iter().all(|c| c.denom().is_one());
        if integral {
            let items: Vec<(Exp, Coeff)> = acc
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Exp::from_u64s(&[i as u64]), Coeff::Int(c.numer().clone())))
                .collect();
            if !items.is_empty() {
                let g = Poly::from_terms(CoeffRing::Int, 1, items).unwrap();
                if f.exact_div(&g).unwrap().is_some() {
                    found.insert(g);
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return found;
            }
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn oracle_is_unit(inst: &SemidomainInstance, f: &Poly) -> bool {
    inst.is_unit(&Element::Poly(f.clone()))
        .map(|v| v.is_proved())
        .unwrap_or(false)
}

fn oracle_s_divisors(inst: &SemidomainInstance, f: &Poly) -> BTreeSet<Poly> {
    let mut out = BTreeSet::new();
    for d in oracle_divisors_zx(f) {
        if !inst.contains(&Element::Poly(d.clone())).unwrap() {
            continue;
        }
        let cof = f.exact_div(&d).unwrap().unwrap();
        if inst.contains(&Element::Poly(cof)).unwrap() {
            out.insert(d);
        }
    }
    out
}

fn oracle_is_atom(inst: &SemidomainInstance, f: &Poly) -> bool {
    if f.is_zero() || oracle_is_unit(inst, f) {
        return false;
    }
    for d in oracle_s_divisors(inst, f) {
        let cof = f.exact_div(&d).unwrap().unwrap();
        if !oracle_is_unit(inst, &d) && !oracle_is_unit(inst, &cof) {
            return false;
        }
    }
    true
}

fn oracle_factorizations(inst: &SemidomainInstance, f: &Poly) -> BTreeSet<Vec<Poly>> {
    fn rec(
        inst: &SemidomainInstance,
        f: &Poly,
        min: Option<&Poly>,
        out: &mut BTreeSet<Vec<Poly>>,
        stack: &mut Vec<Poly>,
    ) {
        for d in oracle_s_divisors(inst, f) {
            if oracle_is_unit(inst, &d) || !oracle_is_atom(inst, &d) {
                continue;
            }
            if let Some(m) = min {
                if d < *m {
                    continue;
                }
            }
            let cof = f.exact_div(&d).unwrap().unwrap();
            stack.push(d.clone());
            if oracle_is_unit(inst, &cof) {
                let mut z = stack.clone();
                z.sort();
                out.insert(z);
            } else {
                rec(inst, &cof, Some(&d), out, stack);
            }
            stack.pop();
        }
    }
    let mut out = BTreeSet::new();
    rec(inst, f, None, &mut out, &mut Vec::new());
    out
}

/// Exhaustive representation search for reciprocal-prime membership.
fn oracle_recip_member(primes: &[u64], target: &Rat) -> bool {
    fn go(primes: &[u64], target: &Rat) -> bool {
        if target.is_zero() {
            return true;
        }
        if target.is_negative() || primes.is_empty() {
            return false;
        }
        let unit = Rat::new(Int::from(1), Int::from(primes[0]));
        let rest = &primes[1..];
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

// ----------------------------------------------------------------------
// criteria
// ----------------------------------------------------------------------

#[test]
fn c01_atom_of_s_not_of_ambient() {
    let i1 = SemidomainInstance::sign_c0c1();
    let lab = Lab::new(&i1, Bounds::default());
    let neg_x2 = ze(&[0, 0, -1]);
    assert!(lab.is_atom(&neg_x2).unwrap().is_proved());
    assert!(!semilab::zx::is_irreducible_zx(&zx(&[0, 0, -1]), 8).unwrap());
    pass(1, "-x^2 is an atom of sign-c0c1 but reducible in the ambient");
}

#[test]
fn c02_x_divides_x4_but_is_not_prime() {
    let i1 = SemidomainInstance::sign_c0c1();
    let lab = Lab::new(&i1, Bounds::default());
    let x = ze(&[0, 1]);
    assert!(lab.divides(&x, &ze(&[0, 0, 0, 0, 1])).unwrap());
    assert!(!lab.divides(&x, &ze(&[0, 0, -1])).unwrap());
    match lab.is_prime(&x).unwrap() {
        Verdict::Refuted {
            witness: Witness::Pair(a, b),
        } => {
            let prod = i1.mul(&a, &b).unwrap();
            assert!(lab.divides(&x, &prod).unwrap());
            assert!(!lab.divides(&x, &a).unwrap());
            assert!(!lab.divides(&x, &b).unwrap());
        }
        other => panic!("expected a refutation with a witness pair, got {:?}", other),
    }
    pass(2, "x | x^4, x does not divide -x^2, and x is not prime (witnessed)");
}

#[test]
fn c03_length_set_of_x4() {
    let i1 = SemidomainInstance::sign_c0c1();
    let lab = Lab::new(&i1, Bounds::default());
    let x4 = ze(&[0, 0, 0, 0, 1]);
    let ls = lab.length_set(&x4).unwrap();
    assert!(ls.complete);
    assert_eq!(ls.lengths, [2usize, 4].into_iter().collect::<BTreeSet<_>>());
    let (zs, complete) = lab.factorizations(&x4).unwrap();
    assert!(complete);
    let got: BTreeSet<Vec<Poly>> = zs
        .iter()
        .map(|z| {
            z.factors
                .iter()
                .map(|e| e.as_poly().unwrap().clone())
                .collect()
        })
        .collect();
    // equality against the independent exhaustive oracle
    let expect = oracle_factorizations(&i1, &zx(&[0, 0, 0, 0, 1]));
    assert_eq!(got, expect);
    assert_eq!(got.len(), 2);
    pass(3, "L(x^4) = {2,4} complete, exactly two factorizations, oracle-equal");
}

#[test]
fn c04_natq_non_atomic_but_furstenberg() {
    let i2 = SemidomainInstance::natq();
    let lab = Lab::new(
        &i2,
        Bounds::default().with_height(50).with_candidates(400),
    );
    let x = qe(&[(1, 1, 1)]);
    for n in 1..=50 {
        assert!(
            lab.divides(&qe(&[(n, 1, 0)]), &x).unwrap(),
            "{} must divide x",
            n
        );
    }
    let lab6 = Lab::new(&i2, Bounds::default().with_length(6));
    let (zs, complete) = lab6.factorizations(&x).unwrap();
    assert!(zs.is_empty());
    assert!(!complete);
    // a witness atom divisor for 100 enumerated nonunits
    let bounds = Bounds::default()
        .with_degree(3)
        .with_height(10)
        .with_candidates(300);
    let wlab = Lab::new(&i2, bounds.clone());
    let mut checked = 0;
    for s in i2.enumerate_members(&bounds).unwrap() {
        if s.is_zero() || i2.is_unit(&s).unwrap().is_proved() {
            continue;
        }
        let v = wlab.furstenberg_witness(&s).unwrap();
        assert!(v.is_proved(), "no atom divisor for {}", s);
        checked += 1;
        if checked == 100 {
            break;
        }
    }
    assert_eq!(checked, 100);
    pass(4, "natq: n | x for n <= 50, no atom factorization of x, Furstenberg witnesses");
}

#[test]
fn c05_chain_probes() {
    let i2 = SemidomainInstance::natq();
    let lab2 = Lab::new(&i2, Bounds::default().with_chain_budget(20));
    let rep = lab2
        .accp_chain_probe(ChainStrategy::Halving, &qe(&[(1, 1, 1)]))
        .unwrap();
    assert_eq!(rep.steps, 20);
    assert!(!rep.stabilized);
    for w in rep.chain.windows(2) {
        assert!(lab2.divides(&w[1], &w[0]).unwrap());
        assert!(!lab2.associates(&w[1], &w[0]).unwrap().is_proved());
    }
    let i0 = SemidomainInstance::nat();
    let lab0 = Lab::new(&i0, Bounds::default().with_chain_budget(20));
    for n in 1..=100i64 {
        let rep = lab0
            .accp_chain_probe(ChainStrategy::ExhaustiveDescent, &ze(&[n]))
            .unwrap();
        assert!(rep.stabilized, "seed {}", n);
        assert!(rep.steps <= 5, "seed {} took {} steps", n, rep.steps);
    }
    pass(5, "natq halving chain hits budget 20; nat stabilizes within 5 steps up to 100");
}

#[test]
fn c06_natz_half_factorial_not_ufs() {
    let i3 = SemidomainInstance::natz();
    let lab = Lab::new(&i3, Bounds::default());
    let x2 = ze(&[0, 0, 1]);
    let (zs, complete) = lab.factorizations(&x2).unwrap();
    assert!(complete);
    let got: BTreeSet<Vec<Element>> = zs.into_iter().map(|z| z.factors).collect();
    let expect: BTreeSet<Vec<Element>> = [
        vec![ze(&[0, 1]), ze(&[0, 1])],
        vec![ze(&[0, -1]), ze(&[0, -1])],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, expect);
    assert!(lab
        .associates(&ze(&[0, 1]), &ze(&[0, -1]))
        .unwrap()
        .is_refuted());
    // complete length sets on the corpus are singletons
    let bounds = Bounds::default()
        .with_degree(3)
        .with_height(4)
        .with_candidates(80);
    let clab = Lab::new(&i3, bounds.clone());
    let mut scanned = 0;
    for s in i3.enumerate_members(&bounds).unwrap() {
        if s.is_zero() || i3.is_unit(&s).unwrap().is_proved() {
            continue;
        }
        let ls = clab.length_set(&s).unwrap();
        if ls.complete {
            assert_eq!(ls.lengths.len(), 1, "{} has lengths {:?}", s, ls.lengths);
            scanned += 1;
        }
    }
    assert!(scanned >= 30);
    let rep = lab
        .verify_theorem(TheoremId::UniqueFactorizationIff)
        .unwrap();
    assert_eq!(rep.overall, Overall::Consistent, "{:?}", rep);
    assert_eq!(rep.outcome, "not UFS");
    pass(6, "natz: exactly {x*x, (-x)(-x)}, x and -x non-associate, singleton lengths, not UFS");
}

#[test]
fn c07_posq_gauss_bf_not_ff() {
    let i4 = SemidomainInstance::posq_gauss();
    let bounds = Bounds::default()
        .with_degree(3)
        .with_height(4)
        .with_candidates(80);
    let lab = Lab::new(&i4, bounds.clone());
    let corpus = i4.enumerate_members(&bounds).unwrap();
    let rep = lab
        .verify_length_function(&LengthFn::Degree, &corpus)
        .unwrap();
    assert!(rep.passed(), "{:?}", rep);
    // >= 10 pairwise non-associate divisors of x^2 at height <= 3
    let lab3 = Lab::new(&i4, Bounds::default().with_height(3));
    let count = lab3.nonassociate_divisor_count(&ge(&[(1, 0, 2)])).unwrap();
    assert!(count >= 10, "only {}", count);
    pass(7, "posq-gauss: degree is a length function (BFS); x^2 has >= 10 divisor classes");
}

#[test]
fn c08_recip_prime_monoid_lengths() {
    // membership against the independent exhaustive oracle
    assert!(oracle_recip_member(&[2, 3], &rat_of(5, 6)));
    assert!(!oracle_recip_member(&[2, 3], &rat_of(1, 6)));
    let m23 = MonoidSpec::recip_primes(&[2, 3]).unwrap();
    assert!(m23
        .contains(&Exp::one_dim(rat_of(5, 6)).unwrap())
        .unwrap());
    assert!(!m23
        .contains(&Exp::one_dim(rat_of(1, 6)).unwrap())
        .unwrap());

    let x = qe(&[(1, 1, 1)]);
    let i5a = SemidomainInstance::pos_mon_alg(&[2, 3]).unwrap();
    let ls = Lab::new(&i5a, Bounds::default()).length_set(&x).unwrap();
    assert_eq!(ls.lengths, [2usize, 3].into_iter().collect::<BTreeSet<_>>());
    let i5b = SemidomainInstance::pos_mon_alg(&[2, 3, 5]).unwrap();
    let ls = Lab::new(&i5b, Bounds::default()).length_set(&x).unwrap();
    assert_eq!(
        ls.lengths,
        [2usize, 3, 5].into_iter().collect::<BTreeSet<_>>()
    );

    // growth trend: max L(x) = max(P) for prime budgets up to 13
    let primes = [2u64, 3, 5, 7, 11, 13];
    for upto in 1..=primes.len() {
        let prefix = &primes[..upto];
        let inst = SemidomainInstance::pos_mon_alg(prefix).unwrap();
        let lab = Lab::new(&inst, Bounds::default().with_length(14));
        let ls = lab.length_set(&x).unwrap();
        assert_eq!(
            ls.lengths.iter().max().copied().unwrap(),
            *prefix.last().unwrap() as usize,
            "P = {:?}",
            prefix
        );
    }
    // the CSV artifact carries one row per budget
    let mut out = Vec::new();
    let code = semilab::cli::run_command(
        [
            "semilab",
            "lengths",
            "--instance",
            "posmonalg:2,3",
            "--element",
            "x",
            "--sweep-primes",
            "2,3,5,7,11,13",
            "--csv",
            "/tmp/semilab-acceptance-sweep.csv",
        ],
        &mut out,
    );
    assert_eq!(code, 0);
    let csv = std::fs::read_to_string("/tmp/semilab-acceptance-sweep.csv").unwrap();
    let expect = "primes,max_length\n2,2\n2 3,3\n2 3 5,5\n2 3 5 7,7\n2 3 5 7 11,11\n2 3 5 7 11 13,13\n";
    assert_eq!(csv, expect);
    pass(8, "recip-prime membership, lengths {2,3}/{2,3,5}, max L(x) = max(P) through 13");
}

#[test]
fn c09_hfs_localization() {
    let i6 = SemidomainInstance::hfs_loc(3).unwrap();
    let lab = Lab::new(&i6, Bounds::default());
    let target = fe2(1, &[2, 4]);
    let (zs, complete) = lab.factorizations(&target).unwrap();
    assert!(complete);
    assert_eq!(zs.len(), 2, "{:?}", zs);
    for z in &zs {
        assert_eq!(z.len(), 2);
    }
    // atoms pairwise non-associate
    let atoms = [fe2(1, &[1, 1]), fe2(1, &[1, 2]), fe2(1, &[1, 3])];
    for a in &atoms {
        assert!(lab.is_atom(a).unwrap().is_proved());
    }
    for (i, a) in atoms.iter().enumerate() {
        for b in atoms.iter().skip(i + 1) {
            assert!(lab.associates(a, b).unwrap().is_refuted());
        }
    }
    // singleton lengths across the monomial box
    let m = i6.monoid().unwrap().clone();
    let box_lab = Lab::new(&i6, Bounds::default().with_length(16));
    for k in 1..=5u64 {
        for s in 1..=15u64 {
            let e = Exp::from_u64s(&[k, s]);
            if !m.contains(&e).unwrap() {
                continue;
            }
            let ls = box_lab.length_set(&fe2(1, &[k, s])).unwrap();
            assert!(ls.complete);
            assert_eq!(
                ls.lengths,
                [k as usize].into_iter().collect::<BTreeSet<_>>(),
                "at ({},{})",
                k,
                s
            );
        }
    }
    // non-UFS verdict
    let rep = lab
        .verify_theorem(TheoremId::UniqueFactorizationIff)
        .unwrap();
    assert_eq!(rep.overall, Overall::Consistent, "{:?}", rep);
    assert_eq!(rep.outcome, "not UFS");
    pass(9, "hfs-loc:3: two factorizations of x^(2,4)/1, singleton boxes, not UFS");
}

#[test]
fn c10_lemma_sweeps() {
    let bounds = Bounds::default()
        .with_degree(3)
        .with_height(5)
        .with_candidates(100);
    // units lemma across the catalog
    for id in [
        "nat",
        "sign-c0c1",
        "natq",
        "natz",
        "posq-gauss",
        "posmonalg:2,3",
    ] {
        let inst = SemidomainInstance::from_id(id).unwrap();
        let lab = Lab::new(&inst, bounds.clone());
        let rep = lab.verify_theorem(TheoremId::UnitsMeet).unwrap();
        assert_eq!(rep.overall, Overall::Consistent, "{}: {:?}", id, rep);
    }
    // atom negations on sign-c0c1
    let i1 = SemidomainInstance::sign_c0c1();
    let lab1 = Lab::new(&i1, bounds.clone());
    let rep = lab1.verify_theorem(TheoremId::AtomNegation).unwrap();
    assert_eq!(rep.overall, Overall::Consistent, "{:?}", rep);
    assert!(rep.checked > 0);
    // localization lemma on the dyadic naturals and on hfs-loc
    let dyadic = SemidomainInstance::nat().localize(DSet::PowersOf(2)).unwrap();
    let lab_dy = Lab::new(&dyadic, bounds.clone());
    let rep = lab_dy
        .verify_theorem(TheoremId::LocalizationSemisubtractive)
        .unwrap();
    assert_eq!(rep.overall, Overall::Consistent, "{:?}", rep);
    let i6 = SemidomainInstance::hfs_loc(3).unwrap();
    let lab6 = Lab::new(&i6, bounds.clone());
    let rep = lab6
        .verify_theorem(TheoremId::LocalizationSemisubtractive)
        .unwrap();
    assert_eq!(rep.overall, Overall::Consistent, "{:?}", rep);
    // invertible-element factorizations on sign-c0c1
    let rep = lab1
        .verify_theorem(TheoremId::InvertibleFactorizations)
        .unwrap();
    assert_eq!(rep.overall, Overall::Consistent, "{:?}", rep);
    assert!(rep.checked > 0);
    pass(10, "T3.1 on I0-I5, T3.3 on I1, T2.5 on both localizations, T4.2 on I1");
}

#[test]
fn c11_oracle_equivalence() {
    // full enumerated corpus at deg <= 4, h <= 6 for I1 and I3, capped by
    // the candidate budget
    let bounds = Bounds::default()
        .with_degree(4)
        .with_height(6)
        .with_candidates(150);
    for inst in [SemidomainInstance::sign_c0c1(), SemidomainInstance::natz()] {
        let lab = Lab::new(&inst, bounds.clone());
        let mut atoms_checked = 0;
        let mut factorizations_checked = 0;
        for e in inst.enumerate_members(&bounds).unwrap() {
            if e.is_zero() || inst.is_unit(&e).unwrap().is_proved() {
                continue;
            }
            let p = e.as_poly().unwrap();
            let verdict = lab.is_atom(&e).unwrap();
            assert!(!verdict.is_unknown());
            assert_eq!(
                verdict.is_proved(),
                oracle_is_atom(&inst, p),
                "{}: {}",
                inst.id(),
                e
            );
            atoms_checked += 1;
            // factorization sets agree on a subsample (they are the costly
            // oracle calls)
            if atoms_checked % 5 == 0 {
                let (zs, complete) = lab.factorizations(&e).unwrap();
                assert!(complete);
                let got: BTreeSet<Vec<Poly>> = zs
                    .iter()
                    .map(|z| {
                        z.factors
                            .iter()
                            .map(|f| f.as_poly().unwrap().clone())
                            .collect()
                    })
                    .collect();
                assert_eq!(got, oracle_factorizations(&inst, p), "{}", e);
                factorizations_checked += 1;
            }
        }
        assert!(atoms_checked >= 100, "{}: {}", inst.id(), atoms_checked);
        assert!(factorizations_checked >= 20);
    }
    // monoid membership vs exhaustive representation search
    for primes in [vec![2u64], vec![2, 3], vec![2, 3, 5], vec![3, 5]] {
        let m = MonoidSpec::recip_primes(&primes).unwrap();
        let modulus: u64 = primes.iter().product();
        for a in 0..=(3 * modulus) {
            let q = Rat::new(Int::from(a), Int::from(modulus));
            assert_eq!(
                m.contains(&Exp::one_dim(q.clone()).unwrap()).unwrap(),
                oracle_recip_member(&primes, &q),
                "P={:?}, {}",
                primes,
                q
            );
        }
    }
    pass(11, "atom/factorization oracles agree on I1/I3 corpora; monoid DP matches search");
}

#[test]
fn c12_baseline_factoriality() {
    let i0 = SemidomainInstance::nat();
    let lab = Lab::new(&i0, Bounds::default());
    let (zs, complete) = lab.factorizations(&ze(&[12])).unwrap();
    assert!(complete);
    assert_eq!(zs.len(), 1);
    assert_eq!(zs[0].factors, vec![ze(&[2]), ze(&[2]), ze(&[3])]);
    let rep = lab
        .verify_theorem(TheoremId::UniqueFactorizationIff)
        .unwrap();
    assert_eq!(rep.overall, Overall::Consistent, "{:?}", rep);
    assert_eq!(rep.outcome, "UFS");
    pass(12, "Z(12) = {2*2*3} exactly; nat verdicts as a UFS");
}
