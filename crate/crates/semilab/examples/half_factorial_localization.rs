//! A half-factorial localization that is not factorial.
//!
//! Start from `{f in Z[M] : f(0,0) in N0}` over the step monoid
//! `M = <(1,n) : n <= 3>` and localize at the elements with positive
//! constant term. Monomials `x^(1,n)/1` become pairwise non-associate
//! atoms; `x^(2,4)/1` factors in exactly two ways — both of length two,
//! which is the half-factorial signature.
//!
//! Run with: `cargo run --example half_factorial_localization`

use semilab::bounds::Bounds;
use semilab::lab::{Lab, TheoremId};
use semilab::parse::parse_element;
use semilab::semidomain::{DSet, SemidomainInstance};

fn main() {
    // the generic construction, validated: powers of 2 inside the naturals
    let dyadic = SemidomainInstance::nat().localize(DSet::PowersOf(2)).unwrap();
    let three_halves = parse_element("3/2", &dyadic).unwrap();
    println!(
        "dyadic naturals: 3/2 is a member: {}",
        dyadic.contains(&three_halves).unwrap()
    );

    let inst = SemidomainInstance::hfs_loc(3).unwrap();
    let lab = Lab::new(&inst, Bounds::default());
    println!("\ninstance {}", inst.id());

    // the unit rule: positive constant term of the numerator
    for text in ["2/1", "1 + x^(1,1)", "x^(1,2)/1"] {
        let e = parse_element(text, &inst).unwrap();
        let v = inst.i6_monomial_unit(&e).unwrap();
        print!("  unit {:>12}: {}", text, v.label());
        match v.witness() {
            Some(w) => println!("  ({})", w),
            None => println!(),
        }
    }

    // atoms and the double factorization
    let atoms = ["x^(1,1)", "x^(1,2)", "x^(1,3)"];
    for (i, a) in atoms.iter().enumerate() {
        let ea = parse_element(a, &inst).unwrap();
        assert!(lab.is_atom(&ea).unwrap().is_proved());
        for b in atoms.iter().skip(i + 1) {
            let eb = parse_element(b, &inst).unwrap();
            println!(
                "  {} ~ {}: {}",
                a,
                b,
                lab.associates(&ea, &eb).unwrap().label()
            );
        }
    }
    let target = parse_element("x^(2,4)", &inst).unwrap();
    let (zs, complete) = lab.factorizations(&target).unwrap();
    println!("\nfactorizations of x^(2,4)/1 (complete = {}):", complete);
    for z in &zs {
        println!("  {}", z);
    }

    // lengths across the monomial box stay singletons
    let box_lab = Lab::new(&inst, Bounds::default().with_length(16));
    let m = inst.monoid().unwrap().clone();
    let mut all_singleton = true;
    for k in 1..=5u64 {
        for s in 1..=15u64 {
            let e = semilab::poly::Exp::from_u64s(&[k, s]);
            if !m.contains(&e).unwrap() {
                continue;
            }
            let t = parse_element(&format!("x^({},{})", k, s), &inst).unwrap();
            let ls = box_lab.length_set(&t).unwrap();
            all_singleton &= ls.lengths.len() == 1;
        }
    }
    println!("\nall length sets in the box k <= 5, s <= 15 singleton: {}", all_singleton);

    let rep = lab
        .verify_theorem(TheoremId::UniqueFactorizationIff)
        .unwrap();
    println!("unique-factorization verdict: {} ({})", rep.overall, rep.outcome);
}
