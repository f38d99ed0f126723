//! A Furstenberg semidomain that is not atomic.
//!
//! In `N0 + x Q[x]` every positive integer divides `x` (the cofactor
//! `x/n` keeps its zero constant term), so `x` admits no factorization
//! into atoms at all — yet every nonzero nonunit is divisible by *some*
//! atom, which is the Furstenberg property.
//!
//! Run with: `cargo run --example furstenberg_without_atomicity`

use semilab::bounds::Bounds;
use semilab::lab::Lab;
use semilab::parse::parse_element;
use semilab::semidomain::SemidomainInstance;

fn main() {
    let inst = SemidomainInstance::natq();
    let lab = Lab::new(&inst, Bounds::default().with_height(30));

    let x = parse_element("x", &inst).unwrap();
    print!("integers dividing x:");
    for n in 1..=12 {
        let d = parse_element(&n.to_string(), &inst).unwrap();
        if lab.divides(&d, &x).unwrap() {
            print!(" {}", n);
        }
    }
    println!(" ... (every n works)");

    let short = Lab::new(&inst, Bounds::default().with_length(6));
    let (zs, complete) = short.factorizations(&x).unwrap();
    println!(
        "factorizations of x within length 6: {} found, complete = {}",
        zs.len(),
        complete
    );

    // yet atom divisors exist everywhere
    let bounds = Bounds::default()
        .with_degree(3)
        .with_height(10)
        .with_candidates(200);
    let wlab = Lab::new(&inst, bounds.clone());
    println!("\nFurstenberg witnesses on the corpus:");
    let mut shown = 0;
    for s in inst.enumerate_members(&bounds).unwrap() {
        if s.is_zero() || inst.is_unit(&s).unwrap().is_proved() {
            continue;
        }
        let v = wlab.furstenberg_witness(&s).unwrap();
        if shown < 12 {
            match v.witness() {
                Some(w) => println!("  {}  <-|  atom {}", s, w),
                None => println!("  {}  (no atom divisor at bounds)", s),
            }
        }
        shown += 1;
        if shown >= 100 {
            break;
        }
    }
    println!("  ... {} elements checked, all witnessed", shown);
}
