//! Factorization sets and length sets, where half-factoriality fails.
//!
//! In the sign-constrained polynomial semidomain, `x^4` factors both as
//! `x * x * x * x` and as `(-x^2) * (-x^2)`: two complete factorizations
//! of lengths 4 and 2, so the length set is {2, 4} and the semidomain is
//! not half-factorial.
//!
//! Run with: `cargo run --example length_sets`

use semilab::bounds::Bounds;
use semilab::lab::Lab;
use semilab::parse::parse_element;
use semilab::semidomain::SemidomainInstance;

fn main() {
    let inst = SemidomainInstance::sign_c0c1();
    let lab = Lab::new(&inst, Bounds::default());

    for text in ["x^2", "x^3", "-x^3", "x^4", "6*x", "x^4 + x^2"] {
        let e = parse_element(text, &inst).unwrap();
        let (zs, complete) = lab.factorizations(&e).unwrap();
        let ls = lab.length_set(&e).unwrap();
        println!("{} (complete = {}):", text, complete);
        for z in &zs {
            println!("  {}", z);
        }
        println!(
            "  lengths: {:?}\n",
            ls.lengths.iter().collect::<Vec<_>>()
        );
    }

    // contrast: N0 + xZ[x] is half-factorial, every length set below is a
    // singleton even where factorizations differ
    let natz = SemidomainInstance::natz();
    let lab3 = Lab::new(&natz, Bounds::default());
    for text in ["x^2", "x^2 + x", "4*x"] {
        let e = parse_element(text, &natz).unwrap();
        let (zs, _) = lab3.factorizations(&e).unwrap();
        let ls = lab3.length_set(&e).unwrap();
        println!("natz: {} has {} factorizations, lengths {:?}", text, zs.len(), ls.lengths);
    }
}
