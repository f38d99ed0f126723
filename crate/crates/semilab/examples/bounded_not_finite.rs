//! Bounded factorization without finite factorization.
//!
//! `Q>=0 + x Q(i)[x]` carries the degree as a length function, so every
//! length set is finite. But `x^2` has one divisor class `c x` for every
//! direction of `c` in Q(i) modulo positive rationals — infinitely many
//! pairwise non-associate divisors, growing with the height budget.
//!
//! Run with: `cargo run --example bounded_not_finite`

use semilab::bounds::Bounds;
use semilab::lab::{Lab, LengthFn};
use semilab::parse::parse_element;
use semilab::semidomain::SemidomainInstance;

fn main() {
    let inst = SemidomainInstance::posq_gauss();
    let bounds = Bounds::default()
        .with_degree(3)
        .with_height(4)
        .with_candidates(80);
    let lab = Lab::new(&inst, bounds.clone());

    let corpus = inst.enumerate_members(&bounds).unwrap();
    let rep = lab
        .verify_length_function(&LengthFn::Degree, &corpus)
        .unwrap();
    println!(
        "degree on {}: axiom(i) {}, axiom(ii) {} over {} elements / {} pairs",
        inst.id(),
        rep.axiom_units.label(),
        rep.axiom_superadditive.label(),
        rep.corpus_size,
        rep.pairs_checked
    );

    // the squared pushforward certifies the ambient side
    let amb = inst.ambient_view();
    let amb_lab = Lab::new(&amb, bounds.clone());
    let amb_corpus = amb.enumerate_members(&bounds).unwrap();
    let ell2 = LengthFn::EllSquared(Box::new(LengthFn::Degree));
    let rep2 = amb_lab.verify_length_function(&ell2, &amb_corpus).unwrap();
    println!(
        "{} on {}: passed = {}",
        rep2.function,
        amb.id(),
        rep2.passed()
    );

    // divisor classes of x^2 grow with the height budget
    let x2 = parse_element("x^2", &inst).unwrap();
    println!("\npairwise non-associate divisors of x^2:");
    for h in [2u32, 3, 4, 6] {
        let lab_h = Lab::new(&inst, Bounds::default().with_height(h));
        let n = lab_h.nonassociate_divisor_count(&x2).unwrap();
        println!("  height <= {}: {} classes", h, n);
    }
    let lab3 = Lab::new(&inst, Bounds::default().with_height(3));
    let (divs, complete) = lab3.divisor_set(&x2).unwrap();
    println!("  (complete = {}; sample of the classes)", complete);
    for d in divs.iter().take(10) {
        println!("    {}", d);
    }
}
