use proptest::prelude::*;

use split244::curves::{make_genus3, subcovers};
use split244::exact::{q, resultant, GaussianRational, QuadExtValue, Rational, UniPoly};
use split244::invariants::{d4_images, dihedral_invariants, dihedral_invariants_gaussian, j_quartic};
use split244::loci::classify_aut;
use split244::subfields::j_e;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    (prop::collection::vec(rational(), 1..=max_deg), rational())
        .prop_filter_map("nonzero lead", |(mut c, lead)| {
            if lead.is_zero() {
                return None;
            }
            c.push(lead);
            Some(UniPoly::new(c))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_string_round_trip(r in rational()) {
        let s = r.to_string();
        prop_assert_eq!(s.parse::<Rational>().unwrap(), r.clone());
        let j = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&j).unwrap(), r);
    }

    #[test]
    fn resultant_swaps_with_sign(f in poly(4), g in poly(4)) {
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let fg = resultant(&f, &g).unwrap();
        let gf = resultant(&g, &f).unwrap();
        prop_assert_eq!(if (m * n) % 2 == 1 { -gf } else { gf }, fg);
    }

    #[test]
    fn resultant_vanishes_on_common_factor(f in poly(3), g in poly(3), r in rational()) {
        let lin = UniPoly::new(vec![-r, Rational::one()]);
        prop_assert!(resultant(&f.mul(&lin), &g.mul(&lin)).unwrap().is_zero());
    }

    #[test]
    fn quad_ext_norm_is_multiplicative(
        a in rational(), b in rational(), c in rational(), d in rational(), n in 2i64..50,
    ) {
        let x = QuadExtValue::new(a, b, Rational::from_int(n));
        let y = QuadExtValue::new(c, d, Rational::from_int(n));
        let xy = x.checked_mul(&y).unwrap();
        prop_assert_eq!(xy.norm(), x.norm() * y.norm());
        prop_assert_eq!(x.checked_mul(&x.conj()).unwrap(), QuadExtValue::rational(x.norm()));
    }

    #[test]
    fn dihedral_invariants_are_d4_invariant(a in gaussian(), b in gaussian(), c in gaussian()) {
        let base = dihedral_invariants_gaussian(&a, &b, &c);
        for t in d4_images(&a, &b, &c) {
            prop_assert_eq!(dihedral_invariants_gaussian(&t[0], &t[1], &t[2]), base.clone());
        }
    }

    #[test]
    fn classification_is_d4_invariant(a in rational(), b in rational(), c in rational()) {
        // τ2 on rational points; τ1 leaves the rationals
        let p = dihedral_invariants(&a, &b, &c);
        let p2 = dihedral_invariants(&c, &b, &a);
        prop_assert_eq!(p.clone(), p2.clone());
        prop_assert_eq!(classify_aut(&p), classify_aut(&p2));
    }

    #[test]
    fn j_e_matches_the_quartic(a in rational(), b in rational(), c in rational()) {
        let x = make_genus3(a.clone(), b.clone(), c.clone());
        prop_assume!(x.is_ok());
        let p = dihedral_invariants(&a, &b, &c);
        prop_assume!(!p.m().is_zero());
        let (e, _) = subcovers(&x.unwrap());
        prop_assert_eq!(j_e(&p).unwrap(), j_quartic(&e).unwrap());
    }
}
