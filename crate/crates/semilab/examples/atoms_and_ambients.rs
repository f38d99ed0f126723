//! Atoms of a semidomain against atoms of its ambient domain.
//!
//! The sign-constrained polynomials `{f in Z[x] : c0 > 0, or c0 = 0 and
//! c1 >= 0}` contain `-x^2` as an atom even though it splits as `x * -x`
//! in Z[x] — the cofactor `-x` is simply not a member. This example walks
//! the membership, unit, divisor, and atom queries behind that picture.
//!
//! Run with: `cargo run --example atoms_and_ambients`

use semilab::bounds::Bounds;
use semilab::lab::Lab;
use semilab::parse::parse_element;
use semilab::semidomain::SemidomainInstance;
use semilab::zx;

fn main() {
    let inst = SemidomainInstance::sign_c0c1();
    let lab = Lab::new(&inst, Bounds::default());

    println!("instance: {}", inst.id());
    for text in ["-x^2", "-x", "x", "-x^3", "1", "-1"] {
        let e = parse_element(text, &inst).unwrap();
        println!("  member {:>6}: {}", text, inst.contains(&e).unwrap());
    }

    let neg_x2 = parse_element("-x^2", &inst).unwrap();
    let verdict = lab.is_atom(&neg_x2).unwrap();
    println!("\nis_atom(-x^2) = {}", verdict.label());
    let ambient_irreducible =
        zx::is_irreducible_zx(neg_x2.as_poly().unwrap(), zx::DEFAULT_DEGREE_CAP).unwrap();
    println!("irreducible in Z[x]?  {}", ambient_irreducible);

    // the complete divisor picture of x^4 inside the semidomain
    let x4 = parse_element("x^4", &inst).unwrap();
    let (divs, complete) = lab.divisor_set(&x4).unwrap();
    println!("\ndivisors of x^4 (complete = {}):", complete);
    for d in &divs {
        println!("  {}", d);
    }

    // -x^3 is a member but factors: the witness pair demonstrates it
    let neg_x3 = parse_element("-x^3", &inst).unwrap();
    let verdict = lab.is_atom(&neg_x3).unwrap();
    println!("\nis_atom(-x^3) = {}", verdict.label());
    if let Some(w) = verdict.witness() {
        println!("  witness: {}", w);
    }
}
