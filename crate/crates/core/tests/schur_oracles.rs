use std::collections::BTreeMap;

use demazure_core::{
    schur_expand, ssyt, tensor_decompose, to_schur, weyl_dim, MonomialPoly, Partition, QPoly, RootSystem,
    SchurSeries, Weight,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec())
}

/// Hook-content formula, `Π (N + c(x)) / h(x)` over the boxes of `p`.
fn hook_content(p: &Partition, letters: usize) -> BigInt {
    let conj = p.conjugate();
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row {
            let content = j as i64 - i as i64;
            let hook = (row - j) + (conj.parts()[j] - i) - 1;
            num *= letters as i64 + content;
            den *= hook as i64;
        }
    }
    num / den
}

fn shapes(max_size: usize, rows: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|k| Partition::all(k, rows, k)).collect()
}

#[test]
fn schur_in_three_variables() {
    let s = schur_expand(&part(&[2, 1]), 3);
    assert_eq!(s.num_terms(), 7);
    assert_eq!(s.coeff(&[1, 1, 1]), QPoly::constant(2));
    assert_eq!(s.coeff(&[2, 1, 0]), QPoly::one());
    assert_eq!(s.coeff(&[0, 1, 2]), QPoly::one());
    let total: BigInt = s.terms().values().map(QPoly::eval_q1).sum();
    assert_eq!(total, BigInt::from(8));
    assert!(s.is_symmetric());
}

#[test]
fn expand_then_peel_is_identity() {
    for vars in 2..=5 {
        let rs = RootSystem::new(vars - 1).unwrap();
        for p in shapes(6, vars) {
            let back = to_schur(&schur_expand(&p, vars)).unwrap();
            assert_eq!(back, SchurSeries::unit(rs.from_partition(&p).unwrap()), "shape {:?}", p.parts());
        }
    }
}

#[test]
fn non_symmetric_input_is_rejected() {
    let mut m = MonomialPoly::zero(3);
    m.add_term(vec![1, 0, 0], &QPoly::one());
    assert!(to_schur(&m).is_err());
}

#[test]
fn three_dimension_formulas_agree() {
    for n in 1..=4 {
        let rs = RootSystem::new(n).unwrap();
        for mu in rs.dominant_up_to(5) {
            let p = rs.to_partition(&mu).unwrap();
            let count = ssyt(&p, n + 1).len();
            assert!(ssyt(&p, n + 1).iter().all(|t| t.is_semistandard()));
            let d = weyl_dim(&rs, &mu).unwrap();
            assert_eq!(d, BigInt::from(count), "n={} mu={}", n, mu);
            assert_eq!(d, hook_content(&p, n + 1), "n={} mu={}", n, mu);
        }
    }
}

#[test]
fn small_dimensions() {
    let rs = RootSystem::new(2).unwrap();
    assert_eq!(weyl_dim(&rs, &rs.weight(&[1, 1]).unwrap()).unwrap(), BigInt::from(8));
    assert_eq!(weyl_dim(&rs, &rs.weight(&[3, 0]).unwrap()).unwrap(), BigInt::from(10));
    let rs = RootSystem::new(4).unwrap();
    for i in 1..=4 {
        let binom = [1, 5, 10, 10, 5][i];
        assert_eq!(weyl_dim(&rs, &rs.omega(i)).unwrap(), BigInt::from(binom));
    }
}

fn as_map(s: &SchurSeries) -> BTreeMap<Weight, u64> {
    s.terms().iter().map(|(w, c)| (w.clone(), u64::try_from(c.eval_q1()).unwrap())).collect()
}

#[test]
fn tensor_matches_monomial_products() {
    for n in 1..=3 {
        let rs = RootSystem::new(n).unwrap();
        let ws = rs.dominant_up_to(3);
        for a in &ws {
            for b in &ws {
                let pa = rs.to_partition(a).unwrap();
                let pb = rs.to_partition(b).unwrap();
                let product = schur_expand(&pa, n + 1).mul(&schur_expand(&pb, n + 1));
                let expected = as_map(&to_schur(&product).unwrap());
                assert_eq!(tensor_decompose(&rs, a, b).unwrap(), expected, "n={} {} x {}", n, a, b);
            }
        }
    }
}

#[test]
fn pieri_and_littlewood_richardson() {
    let rs = RootSystem::new(3).unwrap();
    let w = |p: &[usize]| rs.from_partition(&part(p)).unwrap();
    // s_{21} s_1 = s_{31} + s_{22} + s_{211}
    let t = tensor_decompose(&rs, &w(&[2, 1]), &w(&[1])).unwrap();
    let expected: BTreeMap<_, _> = [(w(&[3, 1]), 1), (w(&[2, 2]), 1), (w(&[2, 1, 1]), 1)].into_iter().collect();
    assert_eq!(t, expected);
    // s_{21} s_{21} has s_{321} with multiplicity two
    let t = tensor_decompose(&rs, &w(&[2, 1]), &w(&[2, 1])).unwrap();
    assert_eq!(t.get(&w(&[3, 2, 1])), Some(&2));
    assert_eq!(t.get(&w(&[4, 2])), Some(&1));
    assert_eq!(t.values().sum::<u64>(), 8);
}

#[test]
fn sl2_clebsch_gordan() {
    let rs = RootSystem::new(1).unwrap();
    for a in 0..6i64 {
        for b in 0..6i64 {
            let t = tensor_decompose(&rs, &rs.weight(&[a]).unwrap(), &rs.weight(&[b]).unwrap()).unwrap();
            let expected: BTreeMap<_, _> =
                (0..=a.min(b)).map(|k| (rs.weight(&[a + b - 2 * k]).unwrap(), 1)).collect();
            assert_eq!(t, expected);
        }
    }
}

#[test]
fn tensor_argument_errors() {
    let rs = RootSystem::new(2).unwrap();
    let bad = rs.weight(&[1, -1]).unwrap();
    assert!(tensor_decompose(&rs, &rs.zero(), &bad).is_err());
    assert!(weyl_dim(&rs, &bad).is_err());
    let other = RootSystem::new(3).unwrap().omega(1);
    assert!(tensor_decompose(&rs, &other, &rs.zero()).is_err());
}

fn dominant(n: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(0i64..3, n).prop_map(Weight::from_coords)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tensor_is_symmetric_and_preserves_dimension(a in dominant(3), b in dominant(3)) {
        let rs = RootSystem::new(3).unwrap();
        let ab = tensor_decompose(&rs, &a, &b).unwrap();
        prop_assert_eq!(&ab, &tensor_decompose(&rs, &b, &a).unwrap());
        let total: BigInt = ab.iter().map(|(w, &m)| weyl_dim(&rs, w).unwrap() * m).sum();
        prop_assert_eq!(total, weyl_dim(&rs, &a).unwrap() * weyl_dim(&rs, &b).unwrap());
        prop_assert!(ab.contains_key(&(&a + &b)));
        prop_assert_eq!(ab[&(&a + &b)], 1);
    }

    #[test]
    fn partition_roundtrip(a in dominant(4)) {
        let rs = RootSystem::new(4).unwrap();
        let p = rs.to_partition(&a).unwrap();
        prop_assert_eq!(rs.from_partition(&p).unwrap(), a);
        prop_assert_eq!(p.conjugate().conjugate(), p.trimmed());
    }
}
