//! The families `Σ_s(λ) = Σ_s^0(λ) ∪ Σ_s^1(λ)` for `λ ∈ P^+(1)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::rc::Rc;

use crate::error::{Error, Result};
use crate::lattice::{RootSystem, Weight};

/// Nonempty entries `(s, r) ↦ Σ_s^r(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaFamily {
    source: Weight,
    entries: BTreeMap<(usize, u8), BTreeSet<Weight>>,
}

impl SigmaFamily {
    pub fn source(&self) -> &Weight {
        &self.source
    }

    /// `Σ_s^r(λ)`; empty when not stored.
    pub fn get(&self, s: usize, r: u8) -> BTreeSet<Weight> {
        self.entries.get(&(s, r)).cloned().unwrap_or_default()
    }

    pub fn get_ref(&self, s: usize, r: u8) -> Option<&BTreeSet<Weight>> {
        self.entries.get(&(s, r))
    }

    /// `Σ_s(λ)`.
    pub fn level(&self, s: usize) -> BTreeSet<Weight> {
        let mut out = self.get(s, 0);
        out.extend(self.get(s, 1));
        out
    }

    /// Nonempty entries in `(s, r)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u8, &BTreeSet<Weight>)> + '_ {
        self.entries.iter().map(|(&(s, r), set)| (s, r, set))
    }

    /// Each weight together with its level `s`.
    pub fn members(&self) -> impl Iterator<Item = (usize, &Weight)> + '_ {
        self.entries.iter().flat_map(|(&(s, _), set)| set.iter().map(move |w| (s, w)))
    }

    pub fn max_level(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    fn insert(&mut self, s: usize, r: u8, w: Weight) {
        assert!(w.is_dominant(), "sigma recursion produced non-dominant {:?}", w);
        self.entries.entry((s, r)).or_default().insert(w);
    }

    /// The entries are pairwise disjoint.
    pub fn is_disjoint(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.entries.values().flatten().all(|w| seen.insert(w.clone()))
    }

    /// Every member `μ` has `μ(h_k) = 0` for `k < min λ - 1`, `μ(h_{min λ - 1}) ≤ 1`,
    /// and `λ - μ` in the `Z_+`-span of `α_k`, `k ≥ min λ`.
    pub fn satisfies_support_bounds(&self, rs: &RootSystem) -> bool {
        let m = self.source.min_support();
        self.members().all(|(_, mu)| {
            let low_ok = (1..m.saturating_sub(1)).all(|k| mu.get(k) == 0);
            let edge_ok = m < 2 || mu.get(m - 1) <= 1;
            let span_ok = match rs.q_plus_coords(&(&self.source - mu)) {
                Some(c) => c.iter().take(m.saturating_sub(1)).all(|&x| x == 0),
                None => false,
            };
            low_ok && edge_ok && span_ok
        })
    }
}

/// Memo table for Σ-families, keyed by the source weight.
#[derive(Default)]
pub struct SigmaCache {
    memo: BTreeMap<Weight, Rc<SigmaFamily>>,
}

impl SigmaCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, rs: &RootSystem, lambda: &Weight) -> Result<Rc<SigmaFamily>> {
        if lambda.rank() != rs.rank() {
            return Err(Error::RankMismatch { expected: rs.rank(), found: lambda.rank() });
        }
        if !lambda.in_p_plus_one() {
            return Err(Error::NotMultiplicityFree);
        }
        Ok(self.build(rs, lambda))
    }

    fn build(&mut self, rs: &RootSystem, lambda: &Weight) -> Rc<SigmaFamily> {
        if let Some(f) = self.memo.get(lambda) {
            return f.clone();
        }
        let mut fam = SigmaFamily { source: lambda.clone(), entries: BTreeMap::new() };
        fam.insert(0, 0, lambda.clone());
        if lambda.ht() >= 2 {
            let m = lambda.min_support();
            let om = rs.omega(m);
            let rest = lambda - &om;
            let p = rest.min_support();

            let sub = self.build(rs, &rest);
            for (s, w) in sub.members() {
                if s > 0 {
                    fam.insert(s, 0, &om + w);
                }
            }

            // For m = 1 the shifted weights carry a formal ω_0 as their minimum, and
            // Σ^0 of such a weight is all of Σ of the remainder.
            let keep = |r: u8| r == 0 || m == 1;
            let drop = lambda - &rs.alpha_range(m, p);
            if lambda.get(p + 1) == 0 {
                let sub = self.build(rs, &drop);
                for (&(s, r), set) in &sub.entries {
                    if keep(r) {
                        for w in set {
                            fam.insert(s + 1, 1, w.clone());
                        }
                    }
                }
            } else {
                fam.insert(1, 1, drop.clone());
                let two = 2 * &rs.omega(p + 1);
                let inner = &drop - &two;
                let bent = &two - &rs.alpha(p + 1);
                let sub = self.build(rs, &inner);
                for (&(s, r), set) in &sub.entries {
                    if !keep(r) {
                        continue;
                    }
                    for w in set {
                        fam.insert(s + 1, 1, &two + w);
                        fam.insert(s + 2, 1, &bent + w);
                    }
                }
            }
        }
        let fam = Rc::new(fam);
        self.memo.insert(lambda.clone(), fam.clone());
        fam
    }
}

/// One-shot construction of `Σ(λ)` with a private memo.
pub fn sigma_family(rs: &RootSystem, lambda: &Weight) -> Result<SigmaFamily> {
    SigmaCache::new().get(rs, lambda).map(|f| (*f).clone())
}
