//! Run the theorem-consistency harness across the instance catalog.
//!
//! Every structural statement is checked elementwise on a reproducible
//! corpus; a counterexample outcome would flag a bug in this crate, never
//! new mathematics. Inconclusive means a side of the statement is not
//! decidable at desk bounds for that instance.
//!
//! Run with: `cargo run --example theorem_harness`

use semilab::bounds::Bounds;
use semilab::lab::{Lab, TheoremId};
use semilab::semidomain::SemidomainInstance;

fn main() {
    let bounds = Bounds::default()
        .with_degree(3)
        .with_height(5)
        .with_candidates(100);
    let instances = [
        "nat",
        "sign-c0c1",
        "natq",
        "natz",
        "posq-gauss",
        "posmonalg:2,3",
        "hfs-loc:3",
        "nat-dyadic",
    ];
    println!(
        "{:<14} {:<7} {:<16} outcome / first note",
        "instance", "id", "overall"
    );
    for id in instances {
        let inst = SemidomainInstance::from_id(id).unwrap();
        let lab = Lab::new(&inst, bounds.clone());
        for theorem in TheoremId::all() {
            let rep = lab.verify_theorem(theorem).unwrap();
            let detail = if !rep.outcome.is_empty() {
                rep.outcome.clone()
            } else {
                rep.notes.first().cloned().unwrap_or_default()
            };
            println!(
                "{:<14} {:<7} {:<16} {}",
                id,
                rep.theorem,
                format!("{}", rep.overall),
                detail
            );
        }
        println!();
    }
}
