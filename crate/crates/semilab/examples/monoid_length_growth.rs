//! Exponent monoids and unbounded length growth.
//!
//! In the monoid `<1/p : p in P>` the element 1 factors as p copies of
//! `1/p` for each prime in the budget, so the maximal factorization length
//! of `x` in the associated monoid algebra equals max(P) and grows without
//! bound as the prime set does — the bounded-factorization property fails
//! in the limit.
//!
//! Run with: `cargo run --example monoid_length_growth`

use semilab::bounds::Bounds;
use semilab::exact::rat_to_string;
use semilab::lab::Lab;
use semilab::monoid::MonoidSpec;
use semilab::parse::{parse_element, parse_exponent};
use semilab::semidomain::SemidomainInstance;

fn main() {
    let m = MonoidSpec::parse("recip-primes:2,3").unwrap();
    println!("monoid {}", m.render());
    for text in ["5/6", "1/6", "1/2", "1", "7/6"] {
        let q = parse_exponent(text, 1).unwrap();
        println!("  {:>4} member: {}", text, m.contains(&q).unwrap());
    }
    let bounds = Bounds::default().with_height(6);
    let atoms = m.atoms(&bounds).unwrap();
    let rendered: Vec<String> = atoms
        .iter()
        .map(|a| rat_to_string(&a.coords()[0]))
        .collect();
    println!("  atoms within height 6: {}", rendered.join(", "));
    let one = parse_exponent("1", 1).unwrap();
    for z in m.factorizations(&one, &Bounds::default()).unwrap() {
        let parts: Vec<String> = z.iter().map(|a| rat_to_string(&a.coords()[0])).collect();
        println!("  1 = {}", parts.join(" + "));
    }

    // the monoid algebra instance: lengths of x per prime budget
    println!("\nmax factorization length of x against the prime budget:");
    let primes = [2u64, 3, 5, 7, 11, 13];
    for upto in 1..=primes.len() {
        let prefix = &primes[..upto];
        let inst = SemidomainInstance::pos_mon_alg(prefix).unwrap();
        let lab = Lab::new(&inst, Bounds::default().with_length(14));
        let x = parse_element("x", &inst).unwrap();
        let ls = lab.length_set(&x).unwrap();
        println!(
            "  P = {:?}: lengths {:?}, max {}",
            prefix,
            ls.lengths.iter().collect::<Vec<_>>(),
            ls.lengths.iter().max().unwrap()
        );
    }
}
