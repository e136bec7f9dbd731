use std::collections::BTreeMap;

use demazure_core::{
    charge, content_counts, kostka_foulkes, qint, Engine, Partition, QPoly, RootSystem, SchurSeries, Weight,
};
use num_bigint::BigInt;

/// `n(λ) = Σ (i-1) λ_i`.
fn n_of(p: &Partition) -> i64 {
    p.parts().iter().enumerate().map(|(i, &x)| (i * x) as i64).sum()
}

fn qfactorial(k: usize) -> QPoly {
    (1..=k as i64).fold(QPoly::one(), |acc, i| &acc * &qint(i).unwrap())
}

/// `q^{n(λ')} [k]_q! / Π_x [h(x)]_q`, the generating function of charge over SYT.
fn fake_degree(p: &Partition) -> QPoly {
    let conj = p.conjugate();
    let mut hooks = QPoly::one();
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row {
            hooks = &hooks * &qint(((row - j) + (conj.parts()[j] - i) - 1) as i64).unwrap();
        }
    }
    qfactorial(p.size()).div_exact(&hooks).unwrap().shifted(n_of(&conj))
}

#[test]
fn standard_content_gives_fake_degrees() {
    for k in 1..=6 {
        let ones = Partition::new(vec![1; k]);
        for p in Partition::all(k, k, k) {
            assert_eq!(kostka_foulkes(&p, &ones).unwrap(), fake_degree(&p), "shape {:?}", p.parts());
        }
    }
}

#[test]
fn kostka_foulkes_sweep() {
    for k in 1..=6 {
        let all = Partition::all(k, k, k);
        for shape in &all {
            let counts = content_counts(shape, k);
            for content in &all {
                let kf = kostka_foulkes(shape, content).unwrap();
                let key = content.padded(k).parts().to_vec();
                let kostka = counts.get(&key).copied().unwrap_or(0);
                assert_eq!(kf.eval_q1(), BigInt::from(kostka));
                assert!(kf.is_positive());
                if shape.dominates(content) {
                    // monic of degree n(μ) - n(λ)
                    assert_eq!(kf.max_exp(), Some(n_of(content) - n_of(shape)));
                    assert_eq!(kf.coeff(n_of(content) - n_of(shape)), BigInt::from(1));
                } else {
                    assert!(kf.is_zero());
                }
            }
        }
    }
}

#[test]
fn charge_of_permutations_is_bounded() {
    // every permutation of 1..=4 has charge in [0, 6], with generating function [4]_q!
    let mut total = QPoly::zero();
    let mut w = vec![1u8, 2, 3, 4];
    permutations(&mut w, 0, &mut |w| {
        let c = charge(w).unwrap();
        assert!((0..=6).contains(&c));
        total += QPoly::q_pow(c);
    });
    assert_eq!(total, qfactorial(4));
}

fn permutations(w: &mut Vec<u8>, i: usize, f: &mut impl FnMut(&[u8])) {
    if i == w.len() {
        f(w);
        return;
    }
    for j in i..w.len() {
        w.swap(i, j);
        permutations(w, i + 1, f);
        w.swap(i, j);
    }
}

fn q1(s: &SchurSeries) -> BTreeMap<Weight, BigInt> {
    s.eval_q1()
}

#[test]
fn macdonald_at_q1_is_a_product_of_fundamentals() {
    for n in 1..=3 {
        let mut e = Engine::new(n).unwrap();
        let rs = *e.rs();
        for nu in rs.dominant_up_to(5) {
            let mut product: BTreeMap<Weight, BigInt> = [(rs.zero(), BigInt::from(1))].into_iter().collect();
            for i in 1..=n {
                for _ in 0..nu.get(i) {
                    let f = [(rs.omega(i), BigInt::from(1))].into_iter().collect();
                    product = e.product_q1(&product, &f);
                }
            }
            let p = e.macdonald_q0(&nu);
            assert_eq!(q1(&p), product, "n={} nu={}", n, nu);
        }
    }
}

#[test]
fn macdonald_is_unitriangular_and_positive() {
    for n in 1..=4 {
        let mut e = Engine::new(n).unwrap();
        let rs = *e.rs();
        for nu in rs.dominant_up_to(5) {
            let p = e.macdonald_q0(&nu);
            assert!(p.is_schur_positive());
            assert!(p.coeff(&nu).is_one());
            for (mu, c) in p.terms() {
                assert!(rs.leq(mu, &nu));
                if *mu != nu {
                    assert!(c.constant_term() == BigInt::from(0), "nu={} mu={}", nu, mu);
                }
            }
        }
    }
}

#[test]
fn level_one_dimensions_are_products_of_binomials() {
    for n in 1..=3usize {
        let mut e = Engine::new(n).unwrap();
        let rs = *e.rs();
        let binom = |i: usize| -> BigInt { (1..=i).fold(BigInt::from(1), |b, j| b * BigInt::from(n + 2 - j) / BigInt::from(j)) };
        for nu in rs.dominant_up_to(5) {
            let expected: BigInt = (1..=n).map(|i| binom(i).pow(nu.get(i) as u32)).product();
            assert_eq!(e.dim_m(&nu, &rs.zero()), expected);
        }
    }
}

#[test]
fn pair_series_examples() {
    let mut e = Engine::new(2).unwrap();
    let rs = *e.rs();
    let w = |c: &[i64]| rs.weight(c).unwrap();
    // G_{ν,0} = P_ν
    for nu in rs.dominant_up_to(4) {
        assert_eq!(e.g_pair_series(&nu, &rs.zero()), *e.macdonald_q0(&nu));
    }
    let g = e.g_pair_series(&w(&[1, 1]), &w(&[0, 2]));
    assert!(g.coeff(&w(&[1, 3])).is_one());
    assert!(g.is_schur_positive());
    assert_eq!(e.dim_m(&w(&[1, 1]), &w(&[0, 2])), e.dim_m(&w(&[1, 1]), &rs.zero()) * e.dim_m(&rs.zero(), &w(&[0, 2])));
    assert!(!rs.is_admissible(&w(&[2, 0]), &w(&[1, 1])));
}

#[test]
fn factorization_on_admissible_pairs() {
    for n in 1..=3 {
        let mut e = Engine::new(n).unwrap();
        let rs = RootSystem::new(n).unwrap();
        let ws = rs.dominant_up_to(4);
        for nu in &ws {
            for lam in &ws {
                if nu.ht() + lam.ht() <= 4 && rs.is_admissible(nu, lam) {
                    let f = e.factorization(nu, lam);
                    assert!(f.holds(), "n={} nu={} lam={}", n, nu, lam);
                    assert!(e.check_p_roundtrip(nu));
                }
            }
        }
    }
}
