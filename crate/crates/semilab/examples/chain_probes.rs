//! Ascending-chain-condition probes: divisibility chains that stabilize
//! against one that keeps descending.
//!
//! Halving `x` in `N0 + x Q[x]` produces `x, x/2, x/4, ...` with every
//! link a strict divisor (2 is not a unit and the memberships persist), so
//! the chain exhausts any budget: evidence that the ACCP fails. The
//! natural numbers stabilize within a handful of steps from any seed.
//!
//! Run with: `cargo run --example chain_probes`

use semilab::bounds::Bounds;
use semilab::lab::{ChainStrategy, Lab};
use semilab::parse::parse_element;
use semilab::semidomain::SemidomainInstance;

fn main() {
    let natq = SemidomainInstance::natq();
    let lab = Lab::new(&natq, Bounds::default().with_chain_budget(20));
    let x = parse_element("x", &natq).unwrap();
    let rep = lab.accp_chain_probe(ChainStrategy::Halving, &x).unwrap();
    println!(
        "natq halving from x: {} steps, stabilized = {}",
        rep.steps, rep.stabilized
    );
    for e in rep.chain.iter().take(6) {
        println!("  {}", e);
    }
    println!("  ...");

    let nat = SemidomainInstance::nat();
    let lab0 = Lab::new(&nat, Bounds::default().with_chain_budget(20));
    for seed in [12i64, 64, 96, 97] {
        let e = parse_element(&seed.to_string(), &nat).unwrap();
        let rep = lab0
            .accp_chain_probe(ChainStrategy::ExhaustiveDescent, &e)
            .unwrap();
        let chain: Vec<String> = rep.chain.iter().map(|c| c.to_string()).collect();
        println!(
            "nat descent from {:>2}: {} steps  [{}]",
            seed,
            rep.steps,
            chain.join(" > ")
        );
    }

    // a truncated monoid algebra is finitely generated, so descent from
    // any monomial bottoms out
    let i5 = SemidomainInstance::pos_mon_alg(&[2, 3]).unwrap();
    let lab5 = Lab::new(&i5, Bounds::default().with_chain_budget(20));
    let x5 = parse_element("x", &i5).unwrap();
    let rep = lab5
        .accp_chain_probe(ChainStrategy::ExhaustiveDescent, &x5)
        .unwrap();
    let chain: Vec<String> = rep.chain.iter().map(|c| c.to_string()).collect();
    println!(
        "posmonalg:2,3 descent from x: {} steps  [{}], stabilized = {}",
        rep.steps,
        chain.join(" > "),
        rep.stabilized
    );
}
