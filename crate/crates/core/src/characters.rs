//! `P_ν(z,q,0)`, `G_λ` and `G_{ν,λ}` in the Schur basis, with the checks of
//! positivity, factorization at `q = 1`, and dimensions.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::qpoly::QPoly;
use crate::schur::{for_each_ssyt, tensor_with, weight_multiplicities, weyl_dim, Partition, SchurSeries};
use crate::transition::Engine;

/// Lascoux–Schützenberger charge of a word whose content is a partition.
pub fn charge(word: &[u8]) -> Result<i64> {
    let letters = word.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; letters];
    for &x in word {
        if x == 0 {
            return Err(Error::InvalidContent);
        }
        counts[x as usize - 1] += 1;
    }
    if counts.windows(2).any(|c| c[0] < c[1]) {
        return Err(Error::InvalidContent);
    }
    let len = word.len();
    let mut used = vec![false; len];
    let mut total = 0i64;
    let mut left = len;
    while left > 0 {
        let top = (0..len).filter(|&i| !used[i]).map(|i| word[i]).max().unwrap();
        let mut pos = (0..len).rev().find(|&i| !used[i] && word[i] == 1).unwrap();
        used[pos] = true;
        let mut index = 0i64;
        for r in 2..=top {
            let hit = (0..pos).rev().find(|&i| !used[i] && word[i] == r);
            let next = match hit {
                Some(i) => i,
                None => {
                    index += 1;
                    (pos + 1..len).rev().find(|&i| !used[i] && word[i] == r).unwrap()
                }
            };
            total += index;
            used[next] = true;
            pos = next;
        }
        left -= top as usize;
    }
    Ok(total)
}

/// `K_{shape, content}(q) = Σ_T q^{charge(T)}` over SSYT of the given shape and content.
pub fn kostka_foulkes(shape: &Partition, content: &Partition) -> Result<QPoly> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch { shape: shape.size(), content: content.size() });
    }
    let c = content.trimmed();
    let mut out = QPoly::zero();
    for_each_ssyt(c.parts(), Some(shape), None, &mut |t| {
        out += QPoly::q_pow(charge(&t.reading_word()).expect("partition content"));
    });
    Ok(out)
}

#[derive(Default)]
pub(crate) struct CharCache {
    p_series: BTreeMap<Weight, Rc<SchurSeries>>,
    g_series: BTreeMap<Weight, Rc<SchurSeries>>,
    weights: BTreeMap<Weight, Rc<BTreeMap<Vec<usize>, u64>>>,
}

/// Both sides of the `q = 1` factorization as weight-multiplicity maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub lhs: BTreeMap<Weight, BigInt>,
    pub rhs: BTreeMap<Weight, BigInt>,
}

impl Factorization {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl Engine {
    /// `P_ν(z,q,0) = Σ_λ K_{λ'ν'}(q) s_λ` over shapes with at most `n + 1` rows.
    pub fn macdonald_q0(&mut self, nu: &Weight) -> Rc<SchurSeries> {
        if let Some(s) = self.chars.p_series.get(nu) {
            return s.clone();
        }
        let rs = *self.rs();
        let pi = rs.to_partition(nu).expect("dominant weight");
        let content = pi.conjugate();
        let mut by_shape: BTreeMap<Vec<usize>, QPoly> = BTreeMap::new();
        for_each_ssyt(content.parts(), None, Some(rs.rank() + 1), &mut |t| {
            let c = charge(&t.reading_word()).expect("partition content");
            let shape: Vec<usize> = t.rows.iter().map(Vec::len).collect();
            *by_shape.entry(shape).or_default() += QPoly::q_pow(c);
        });
        let mut out = SchurSeries::zero(rs.rank());
        for (shape, poly) in by_shape {
            let lam = Partition::new(shape).conjugate();
            out.add(&rs.from_partition(&lam).expect("at most n + 1 rows"), &poly);
        }
        let out = Rc::new(out);
        self.chars.p_series.insert(nu.clone(), out.clone());
        out
    }

    /// `G_λ = Σ_μ a_λ^μ P_μ`.
    pub fn g_series(&mut self, lambda: &Weight) -> Rc<SchurSeries> {
        if let Some(s) = self.chars.g_series.get(lambda) {
            return s.clone();
        }
        let table = self.a_table(lambda);
        let mut out = SchurSeries::zero(self.rank());
        for (mu, a) in table.rows() {
            if !a.is_zero() {
                let p = self.macdonald_q0(mu);
                out.add_scaled(&p, a);
            }
        }
        let out = Rc::new(out);
        self.chars.g_series.insert(lambda.clone(), out.clone());
        out
    }

    /// `G_{ν,λ} = Σ_μ g_{ν,λ}^μ P_μ`.
    pub fn g_pair_series(&mut self, nu: &Weight, lambda: &Weight) -> SchurSeries {
        let order = self.interval(lambda);
        let mut out = SchurSeries::zero(self.rank());
        for d in order.iter() {
            let mu = nu + d;
            let c = self.g_pair(nu, lambda, &mu);
            if !c.is_zero() {
                let p = self.macdonald_q0(&mu);
                out.add_scaled(&p, &c);
            }
        }
        out
    }

    /// Checked entry point for [`macdonald_q0`](Self::macdonald_q0).
    pub fn p_series(&mut self, nu: &Weight) -> Result<Rc<SchurSeries>> {
        self.check_dominant(nu)?;
        Ok(self.macdonald_q0(nu))
    }

    /// Checked entry point for [`g_series`](Self::g_series).
    pub fn g_series_checked(&mut self, lambda: &Weight) -> Result<Rc<SchurSeries>> {
        self.check_dominant(lambda)?;
        Ok(self.g_series(lambda))
    }

    /// Checked entry point for [`g_pair_series`](Self::g_pair_series).
    pub fn g_pair_series_checked(&mut self, nu: &Weight, lambda: &Weight) -> Result<SchurSeries> {
        self.check_dominant(nu)?;
        self.check_dominant(lambda)?;
        Ok(self.g_pair_series(nu, lambda))
    }

    fn weights_of(&mut self, mu: &Weight) -> Rc<BTreeMap<Vec<usize>, u64>> {
        if let Some(w) = self.chars.weights.get(mu) {
            return w.clone();
        }
        let w = Rc::new(weight_multiplicities(self.rs(), mu));
        self.chars.weights.insert(mu.clone(), w.clone());
        w
    }

    /// `V(μ) ⊗ V(ν)` with the weight table of `ν` cached.
    pub fn tensor(&mut self, mu: &Weight, nu: &Weight) -> BTreeMap<Weight, u64> {
        let chars = self.weights_of(nu);
        tensor_with(self.rs(), mu, &chars)
    }

    /// Product of two `q = 1` series in the representation ring.
    pub fn product_q1(
        &mut self,
        a: &BTreeMap<Weight, BigInt>,
        b: &BTreeMap<Weight, BigInt>,
    ) -> BTreeMap<Weight, BigInt> {
        let mut out: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for (k1, c1) in a {
            for (k2, c2) in b {
                let c = c1 * c2;
                for (k, m) in self.tensor(k1, k2) {
                    *out.entry(k).or_default() += &c * BigInt::from(m);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn factorization(&mut self, nu: &Weight, lambda: &Weight) -> Factorization {
        let zero = self.rs().zero();
        let lhs = self.g_pair_series(nu, lambda).eval_q1();
        let left = self.g_pair_series(nu, &zero).eval_q1();
        let right = self.g_pair_series(&zero, lambda).eval_q1();
        let rhs = self.product_q1(&left, &right);
        Factorization { lhs, rhs }
    }

    /// `G_{ν,λ}(z,1) = G_{ν,0}(z,1) G_{0,λ}(z,1)` at the level of weights.
    pub fn check_factorization(&mut self, nu: &Weight, lambda: &Weight) -> bool {
        self.factorization(nu, lambda).holds()
    }

    /// `Σ_μ p_ν^μ G_μ = P_ν`.
    pub fn p_roundtrip(&mut self, nu: &Weight) -> (SchurSeries, Rc<SchurSeries>) {
        let order = self.interval(nu);
        let mut lhs = SchurSeries::zero(self.rank());
        for mu in order.iter() {
            let p = self.p(nu, mu);
            if !p.is_zero() {
                let g = self.g_series(mu);
                lhs.add_scaled(&g, &p);
            }
        }
        (lhs, self.macdonald_q0(nu))
    }

    pub fn check_p_roundtrip(&mut self, nu: &Weight) -> bool {
        let (lhs, rhs) = self.p_roundtrip(nu);
        lhs == *rhs
    }

    /// `dim M(ν, λ)` from the `q = 1` specialization of `G_{ν,λ}`.
    pub fn dim_m(&mut self, nu: &Weight, lambda: &Weight) -> BigInt {
        let s = self.g_pair_series(nu, lambda);
        let rs = *self.rs();
        s.terms()
            .iter()
            .map(|(w, c)| c.eval_q1() * weyl_dim(&rs, w).expect("dominant"))
            .sum()
    }
}

/// Every coefficient lies in `Z_+[q]`.
pub fn is_schur_positive(s: &SchurSeries) -> bool {
    s.is_schur_positive()
}
