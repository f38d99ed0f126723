//! Property tests for the algebraic invariants that hold on arbitrary
//! inputs, not just the frozen examples.

use proptest::prelude::*;

use semilab::bounds::Bounds;
use semilab::exact::{rat_normalize, CoeffRing, Int};
use semilab::lab::Lab;
use semilab::parse::parse_element;
use semilab::poly::{Exp, Poly};
use semilab::semidomain::{Element, SemidomainInstance};
use semilab::zx;

fn small_zx() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-8i64..=8, 1..=5)
        .prop_filter("nonzero", |cs| cs.iter().any(|&c| c != 0))
        .prop_map(|cs| Poly::from_int_coeffs(CoeffRing::Int, &cs))
}

proptest! {
    #[test]
    fn rat_normalize_respects_equality(a in -40i64..40, b in 1i64..40, k in 1i64..6) {
        let x = rat_normalize(Int::from(a), Int::from(b)).unwrap();
        let y = rat_normalize(Int::from(a * k), Int::from(b * k)).unwrap();
        prop_assert_eq!(&x, &y);
        let again = rat_normalize(x.numer().clone(), x.denom().clone()).unwrap();
        prop_assert_eq!(again, x);
    }

    #[test]
    fn poly_ring_laws(a in small_zx(), b in small_zx(), c in small_zx()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a).unwrap());
        prop_assert_eq!(
            ab.mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn extreme_terms_are_multiplicative(a in small_zx(), b in small_zx()) {
        let p = a.mul(&b).unwrap();
        let (ta, tb, tp) = (
            a.trailing_term().unwrap(),
            b.trailing_term().unwrap(),
            p.trailing_term().unwrap(),
        );
        prop_assert_eq!(tp.exp, ta.exp.add(&tb.exp).unwrap());
        prop_assert_eq!(tp.coeff, ta.coeff.mul(&tb.coeff).unwrap());
        prop_assert_eq!(
            p.degree().unwrap(),
            a.degree().unwrap() + b.degree().unwrap()
        );
    }

    #[test]
    fn kronecker_roundtrip_and_divisor_counts(f in small_zx()) {
        let fact = zx::kronecker_factor(&f, 8).unwrap();
        prop_assert_eq!(fact.product(), f.clone());
        let divs = zx::divisors_zx(&f, 8).unwrap();
        prop_assert_eq!(divs.len() % 2, 0);
        let mut mult: std::collections::BTreeMap<Poly, u32> = Default::default();
        for g in &fact.factors {
            *mult.entry(g.clone()).or_insert(0) += 1;
        }
        let expect: u64 = 2 * mult.values().map(|&e| (e + 1) as u64).product::<u64>();
        prop_assert_eq!(divs.len() as u64, expect);
        for d in &divs {
            let q = f.exact_div(d).unwrap().expect("listed divisor divides");
            prop_assert!(divs.contains(&q));
        }
    }

    #[test]
    fn render_parse_roundtrip_zx(f in small_zx()) {
        let i1 = SemidomainInstance::sign_c0c1();
        let e = Element::Poly(f);
        let back = parse_element(&e.to_string(), &i1).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn sign_c0c1_membership_is_semisubtractive(f in small_zx()) {
        let i1 = SemidomainInstance::sign_c0c1();
        let e = Element::Poly(f);
        prop_assert!(i1.semisubtractive_check(&e).unwrap());
        // exactly one of e, -e is a member unless both coefficients vanish
        let both = i1.contains(&e).unwrap() && i1.contains(&e.neg()).unwrap();
        if both {
            let p = e.as_poly().unwrap();
            let c0 = p.coeff_at(&Exp::from_u64s(&[0]));
            let c1 = p.coeff_at(&Exp::from_u64s(&[1]));
            prop_assert!(c0.is_zero() && c1.is_zero());
        }
    }

    #[test]
    fn factorization_lengths_are_degree_bounded(f in small_zx()) {
        // in sign-c0c1, every complete factorization multiset multiplies
        // back to the target (units are trivial, so equality on the nose)
        let i1 = SemidomainInstance::sign_c0c1();
        let e = Element::Poly(f);
        if !i1.contains(&e).unwrap() || e.is_zero() {
            return Ok(());
        }
        if i1.is_unit(&e).unwrap().is_proved() {
            return Ok(());
        }
        let lab = Lab::new(&i1, Bounds::default().with_length(12));
        let (zs, _) = lab.factorizations(&e).unwrap();
        for z in zs {
            let mut prod = i1.one();
            for fac in &z.factors {
                prod = i1.mul(&prod, fac).unwrap();
            }
            prop_assert_eq!(&prod, &e);
        }
    }
}
