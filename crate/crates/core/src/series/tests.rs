use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;

fn canon(ell: usize) -> Arc<VariableSpace> {
    Arc::new(VariableSpace::canonical(ell).unwrap())
}

fn mono(space: &VariableSpace, pairs: &[(&str, i32)]) -> Monomial {
    space.monomial(pairs).unwrap()
}

fn series(space: &Arc<VariableSpace>, trunc: u32, terms: &[(&[(&str, i32)], i64)]) -> Series {
    Series::from_terms(
        space.clone(),
        trunc,
        terms
            .iter()
            .map(|(p, c)| (mono(space, p), BigInt::from(*c))),
    )
    .unwrap()
}

/// Partition counts by the recursion p(n, k) = p(n, k-1) + p(n-k, k).
fn partition_count(n: usize) -> u64 {
    fn p(n: i64, k: i64) -> u64 {
        if n == 0 {
            return 1;
        }
        if n < 0 || k == 0 {
            return 0;
        }
        p(n, k - 1) + p(n - k, k)
    }
    p(n as i64, n as i64)
}

#[test]
fn add_cancels() {
    let s = canon(2);
    let a = series(&s, 3, &[(&[], 1), (&[("q0", 1)], 1)]);
    let b = series(&s, 3, &[(&[], 1), (&[("q0", 1)], -1)]);
    assert_eq!(a.add(&b).unwrap(), series(&s, 3, &[(&[], 2)]));
}

#[test]
fn mul_and_truncation() {
    let s = canon(2);
    let a = series(&s, 2, &[(&[], 1), (&[("q0", 1)], 1)]);
    let b = series(&s, 2, &[(&[], 1), (&[("q1", 1)], 1)]);
    let full = series(
        &s,
        2,
        &[(&[], 1), (&[("q0", 1)], 1), (&[("q1", 1)], 1), (&[("q0", 1), ("q1", 1)], 1)],
    );
    assert_eq!(a.mul(&b).unwrap(), full);

    let a1 = a.truncate(1).unwrap();
    let b1 = b.truncate(1).unwrap();
    let cut = series(&s, 1, &[(&[], 1), (&[("q0", 1)], 1), (&[("q1", 1)], 1)]);
    assert_eq!(a1.mul(&b1).unwrap(), cut);
}

#[test]
fn mismatched_operands_rejected() {
    let a = Series::one(canon(2), 2);
    let b = Series::one(canon(2), 3);
    let c = Series::one(canon(3), 2);
    assert!(matches!(a.add(&b), Err(Error::Incompatible(_))));
    assert!(matches!(a.mul(&c), Err(Error::Incompatible(_))));
}

#[test]
fn geometric_inverse_examples() {
    let s = canon(2);
    let g = Series::geometric_inverse(s.clone(), &mono(&s, &[("q0", 1)]), 3).unwrap();
    let want = series(
        &s,
        3,
        &[(&[], 1), (&[("q0", 1)], 1), (&[("q0", 2)], 1), (&[("q0", 3)], 1)],
    );
    assert_eq!(g, want);

    let m = mono(&s, &[("y", -2), ("q0", 1), ("q1", 1)]);
    let g = Series::geometric_inverse(s.clone(), &m, 2).unwrap();
    assert_eq!(
        g,
        series(&s, 2, &[(&[], 1), (&[("y", -2), ("q0", 1), ("q1", 1)], 1)])
    );

    let one_minus_m = Series::from_terms(
        s.clone(),
        2,
        [(s.one(), BigInt::from(1)), (m.clone(), BigInt::from(-1))],
    )
    .unwrap();
    assert_eq!(one_minus_m.mul(&g).unwrap(), Series::one(s.clone(), 2));
}

#[test]
fn geometric_inverse_rejects_degree_zero() {
    let s = canon(2);
    let err = Series::geometric_inverse(s.clone(), &mono(&s, &[("y", 2)]), 3).unwrap_err();
    assert!(matches!(err, Error::NonPositiveDegree { degree: 0, .. }));
    let err = Series::geometric_inverse(s.clone(), &mono(&s, &[("q0", 1), ("q1", -2)]), 3);
    assert!(err.is_err());
}

#[test]
fn pochhammer_examples() {
    let s = canon(2);
    let q0 = mono(&s, &[("q0", 1)]);
    let far = mono(&s, &[("q0", 2), ("q1", 2)]);
    assert_eq!(
        Series::pochhammer_inverse(s.clone(), &q0, &far, 3).unwrap(),
        Series::geometric_inverse(s.clone(), &q0, 3).unwrap()
    );

    let m = mono(&s, &[("q0", 1), ("q1", 2)]);
    assert_eq!(
        Series::pochhammer_inverse(s.clone(), &m, &q0, 3).unwrap(),
        series(&s, 3, &[(&[], 1), (&[("q0", 1), ("q1", 2)], 1)])
    );
    let err = Series::pochhammer_inverse(s.clone(), &q0, &s.one(), 3).unwrap_err();
    assert!(matches!(err, Error::NonPositiveDegree { .. }));
}

#[test]
fn euler_product_matches_partition_counts() {
    let z = Arc::new(VariableSpace::new(&["z"], &["z"]).unwrap());
    let zm = z.var("z", 1).unwrap();
    let euler = Series::pochhammer_inverse(z.clone(), &zm, &zm, 12).unwrap();
    for n in 0..=12 {
        let c = euler.coefficient(&z.var("z", n as i32).unwrap());
        assert_eq!(c, BigInt::from(partition_count(n)), "p({n})");
    }
    assert_eq!(
        (0..5).map(partition_count).collect::<Vec<_>>(),
        vec![1, 1, 2, 3, 5]
    );
}

#[test]
fn substitute_examples() {
    let s = canon(2);
    let a = series(&s, 3, &[(&[], 1), (&[("y", -2), ("q0", 1)], 3)]);
    let id: Vec<Monomial> = (0..s.len()).map(|i| Monomial::variable(s.len(), i, 1)).collect();
    assert_eq!(a.substitute(s.clone(), &id, 3).unwrap(), a);

    // q~0 -> y^2 q0 on q~0^2
    let tilde = Arc::new(VariableSpace::new(&["qt0", "qt1"], &["qt0", "qt1"]).unwrap());
    let src = Series::from_monomial(tilde.clone(), 4, tilde.var("qt0", 2).unwrap(), 1).unwrap();
    let map = vec![mono(&s, &[("y", 2), ("q0", 1)]), mono(&s, &[("y", 2), ("q1", 1)])];
    let img = src.substitute(s.clone(), &map, 4).unwrap();
    assert_eq!(img, series(&s, 4, &[(&[("y", 4), ("q0", 2)], 1)]));

    // z -> q~0 q~1 -> y^4 q0 q1 for r = (1, 1)
    let zspace = Arc::new(VariableSpace::new(&["z"], &["z"]).unwrap());
    let zs = Series::from_monomial(zspace.clone(), 2, zspace.var("z", 1).unwrap(), 1).unwrap();
    let to_tilde = zs
        .substitute(tilde.clone(), &[tilde.monomial(&[("qt0", 1), ("qt1", 1)]).unwrap()], 2)
        .unwrap();
    let img = to_tilde.substitute(s.clone(), &map, 2).unwrap();
    assert_eq!(img, series(&s, 2, &[(&[("y", 4), ("q0", 1), ("q1", 1)], 1)]));
}

#[test]
fn substitute_rejects_negative_degree() {
    let s = canon(2);
    let a = series(&s, 2, &[(&[("q0", 1)], 1)]);
    let map = vec![
        mono(&s, &[("y", 1)]),
        mono(&s, &[("q1", -1)]),
        mono(&s, &[("q1", 1)]),
    ];
    assert!(matches!(
        a.substitute(s.clone(), &map, 2),
        Err(Error::NegativeDegree { .. })
    ));
}

#[test]
fn coefficient_and_restrict() {
    let s = canon(2);
    let a = series(&s, 2, &[(&[], 1), (&[("y", 2), ("q0", 1), ("q1", 1)], 2)]);
    assert_eq!(
        a.coefficient(&mono(&s, &[("y", 2), ("q0", 1), ("q1", 1)])),
        BigInt::from(2)
    );
    assert_eq!(a.coefficient(&mono(&s, &[("q0", 1)])), BigInt::from(0));

    let b = series(&s, 2, &[(&[], 1), (&[("y", 2), ("q0", 1)], 1)]);
    assert_eq!(
        b.restrict("y").unwrap(),
        series(&s, 2, &[(&[], 1), (&[("q0", 1)], 1)])
    );
    let c = series(&s, 2, &[(&[("y", -2)], 1), (&[("y", 2)], 1)]);
    assert_eq!(c.restrict("y").unwrap(), series(&s, 2, &[(&[], 2)]));
    assert!(matches!(b.restrict("q0"), Err(Error::GradedRestriction(_))));
    assert!(matches!(b.restrict("w"), Err(Error::UnknownVariable(_))));
}

#[test]
fn text_format() {
    let s = canon(2);
    let a = series(
        &s,
        2,
        &[(&[("y", 2), ("q0", 1), ("q1", 1)], 2), (&[("q0", 1), ("q1", 1)], 1), (&[("y", -2), ("q0", 1)], -3)],
    );
    assert_eq!(a.to_string(), "2*y^2*q0*q1 + q0*q1 - 3*y^-2*q0");
    assert_eq!(Series::zero(s.clone(), 1).to_string(), "0");
    assert_eq!(Series::one(s, 1).to_string(), "1");
}

#[test]
fn json_schema_shape() {
    let s = canon(2);
    let a = series(&s, 2, &[(&[("y", -2), ("q0", 1), ("q1", 1)], 2), (&[], 1)]);
    let v = a.to_json();
    assert_eq!(v["variables"], serde_json::json!(["y", "q0", "q1"]));
    assert_eq!(v["grading"], serde_json::json!(["q0", "q1"]));
    assert_eq!(v["truncation"], serde_json::json!(2));
    assert_eq!(
        v["terms"][0],
        serde_json::json!({"exp": {"y": -2, "q0": 1, "q1": 1}, "coeff": "2"})
    );
    assert_eq!(v["terms"][1], serde_json::json!({"exp": {}, "coeff": "1"}));
    let text = serde_json::to_string(&a).unwrap();
    assert!(text.contains(r#""exp":{"y":-2,"q0":1,"q1":1}"#));
}

#[test]
fn json_rejects_bad_input() {
    let bad_coeff = r#"{"variables":["y","q0","q1"],"grading":["q0","q1"],"truncation":2,
        "terms":[{"exp":{"q0":1},"coeff":"1.5"}]}"#;
    assert!(Series::from_json_str(bad_coeff).is_err());
    let too_high = r#"{"variables":["y","q0","q1"],"grading":["q0","q1"],"truncation":1,
        "terms":[{"exp":{"q0":2},"coeff":"1"}]}"#;
    assert!(Series::from_json_str(too_high).is_err());
    let unknown = r#"{"variables":["y","q0"],"grading":["q0"],"truncation":1,
        "terms":[{"exp":{"q7":1},"coeff":"1"}]}"#;
    assert!(Series::from_json_str(unknown).is_err());
}

fn arb_series(trunc: u32) -> impl Strategy<Value = Series> {
    let term = (-3i32..=3, 0i32..=2, 0i32..=2, -5i64..=5);
    prop::collection::vec(term, 0..8).prop_map(move |terms| {
        let s = canon(2);
        Series::from_terms(
            s.clone(),
            trunc,
            terms
                .into_iter()
                .map(|(y, a, b, c)| (Monomial::from_exponents(vec![y, a, b]), BigInt::from(c))),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_series(3), b in arb_series(3), c in arb_series(3)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn geometric_inverse_is_inverse(y in -3i32..=3, a in 0i32..=2, b in 0i32..=2, trunc in 1u32..=5) {
        prop_assume!(a + b >= 1);
        let s = canon(2);
        let m = Monomial::from_exponents(vec![y, a, b]);
        let g = Series::geometric_inverse(s.clone(), &m, trunc).unwrap();
        let one_minus = Series::from_terms(
            s.clone(), trunc, [(s.one(), BigInt::from(1)), (m, BigInt::from(-1))]
        ).unwrap();
        prop_assert_eq!(one_minus.mul(&g).unwrap(), Series::one(s, trunc));
    }

    #[test]
    fn substitution_is_homomorphism(a in arb_series(3), b in arb_series(3),
                                    ry in -2i32..=2, r0 in 0i32..=2, r1 in 0i32..=2) {
        // q~ change of variables: q_a -> y^{2 r_a} q_a, y -> y^{ry}
        let s = canon(2);
        let map = vec![
            Monomial::from_exponents(vec![ry, 0, 0]),
            Monomial::from_exponents(vec![2 * r0, 1, 0]),
            Monomial::from_exponents(vec![2 * r1, 0, 1]),
        ];
        let lhs = a.mul(&b).unwrap().substitute(s.clone(), &map, 3).unwrap();
        let rhs = a.substitute(s.clone(), &map, 3).unwrap()
            .mul(&b.substitute(s.clone(), &map, 3).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip(a in arb_series(3)) {
        let text = serde_json::to_string(&a).unwrap();
        let back: Series = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}
