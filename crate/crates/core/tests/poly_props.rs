use std::collections::HashMap;

use felderhof::poly::{LaurentPoly, Monomial, VarId};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=5, -2i32..=3, 0i32..=3, -1i32..=2), 0..6).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(c, a, b, d)| {
            (
                BigInt::from(c),
                Monomial::from_pairs([(VarId::T, a), (VarId::z(1), b), (VarId::z(2), d)]),
            )
        }))
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero divisor", |p| !p.is_zero())
}

fn point() -> impl Strategy<Value = HashMap<VarId, BigRational>> {
    let val = (1i64..=9, 1i64..=9, any::<bool>()).prop_map(|(p, q, neg)| {
        BigRational::new(BigInt::from(if neg { -p } else { p }), BigInt::from(q))
    });
    (val.clone(), val.clone(), val)
        .prop_map(|(a, b, c)| HashMap::from([(VarId::T, a), (VarId::z(1), b), (VarId::z(2), c)]))
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn exact_div_round_trip(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn substitution_inverts(p in poly()) {
        let up = Monomial::from_pairs([(VarId::T, 1), (VarId::z(1), 1)]);
        let down = Monomial::from_pairs([(VarId::T, -1), (VarId::z(1), 1)]);
        let back = p.substitute_scale(VarId::z(1), 1, &up).substitute_scale(VarId::z(1), 1, &down);
        prop_assert_eq!(&back, &p);
        let z2 = Monomial::var(VarId::z(2));
        let flipped = p.substitute_scale(VarId::z(2), -1, &z2).substitute_scale(VarId::z(2), -1, &z2);
        prop_assert_eq!(flipped, p);
    }

    #[test]
    fn json_round_trip(p in poly()) {
        let s = serde_json::to_string(&p).unwrap();
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), pt in point()) {
        let ea = a.eval_rational(&pt).unwrap();
        let eb = b.eval_rational(&pt).unwrap();
        prop_assert_eq!((&a * &b).eval_rational(&pt).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_rational(&pt).unwrap(), ea + eb);
    }

    #[test]
    fn degree_range_is_tight(p in nonzero_poly()) {
        let (lo, hi) = p.degree_range(VarId::T).unwrap();
        let exps: Vec<i32> = p.terms().map(|(m, _)| m.exponent(VarId::T)).collect();
        prop_assert_eq!(lo, *exps.iter().min().unwrap());
        prop_assert_eq!(hi, *exps.iter().max().unwrap());
    }
}
