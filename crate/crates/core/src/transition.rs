//! Transition coefficients `p`, `a = g_{0,·}`, `g_{ν,λ}` and `h`, by closed
//! formula and by triangular inversion.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec::Vec;

use crate::characters::CharCache;
use crate::error::{Error, Result};
use crate::lattice::{Rational, RootSystem, Weight};
use crate::qpoly::{qbinom, QPoly};
use crate::sigma::{SigmaCache, SigmaFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableKind {
    P,
    A,
    G0,
    H,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::P => "p",
            TableKind::A => "a",
            TableKind::G0 => "g0",
            TableKind::H => "h",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "p" => Some(TableKind::P),
            "a" => Some(TableKind::A),
            "g0" | "g" => Some(TableKind::G0),
            "h" => Some(TableKind::H),
            _ => None,
        }
    }
}

/// One row of a transition matrix: `μ ↦ c_top^μ` for `μ` in `interval(top)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionTable {
    kind: TableKind,
    top: Weight,
    rows: Vec<(Weight, QPoly)>,
    index: BTreeMap<Weight, usize>,
}

impl TransitionTable {
    fn new(kind: TableKind, top: Weight, rows: Vec<(Weight, QPoly)>) -> Self {
        let index = rows.iter().enumerate().map(|(i, (w, _))| (w.clone(), i)).collect();
        TransitionTable { kind, top, rows, index }
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn top(&self) -> &Weight {
        &self.top
    }

    /// Rows in interval order (the top first); zero entries included.
    pub fn rows(&self) -> &[(Weight, QPoly)] {
        &self.rows
    }

    /// The entry at `μ`, zero off the interval.
    pub fn get(&self, mu: &Weight) -> QPoly {
        self.index.get(mu).map(|&i| self.rows[i].1.clone()).unwrap_or_default()
    }

    fn get_ref(&self, mu: &Weight) -> Option<&QPoly> {
        self.index.get(mu).map(|&i| &self.rows[i].1)
    }
}

/// `q^e · poly`, where `e` must be integral whenever `poly ≠ 0`.
pub(crate) fn q_shift(e: Rational, poly: QPoly) -> QPoly {
    if poly.is_zero() {
        return poly;
    }
    assert!(e.is_integer(), "non-integral exponent {} on a surviving term", e);
    poly.shifted(e.to_integer())
}

fn half(r: Rational) -> Rational {
    r / Rational::from_integer(2)
}

/// `p_λ^μ`; zero unless both are dominant and `λ - μ ∈ Q^+`.
pub fn p_coeff(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> QPoly {
    if !lambda.is_dominant() || !mu.is_dominant() {
        return QPoly::zero();
    }
    let diff = lambda - mu;
    let Some(k) = rs.q_plus_coords(&diff) else {
        return QPoly::zero();
    };
    let d = mu.split();
    let mut out = QPoly::one();
    for (j, &kj) in k.iter().enumerate() {
        if kj == 0 {
            continue;
        }
        out = &out * &qbinom(kj + d.lambda0.coords()[j], kj);
    }
    let e = half(rs.pair(&(lambda + &d.lambda1), &diff));
    assert!(e >= Rational::from_integer(0), "negative exponent in p");
    q_shift(e, out)
}

/// `g_{0, 2λ0}^μ`.
pub fn g0_two_lambda0(rs: &RootSystem, lambda0: &Weight, mu: &Weight) -> QPoly {
    if !lambda0.is_dominant() || !mu.is_dominant() {
        return QPoly::zero();
    }
    let eta = &(2 * lambda0) - mu;
    let Some(s) = rs.q_plus_coords(&eta) else {
        return QPoly::zero();
    };
    let mut out = QPoly::one();
    for (i, &si) in s.iter().enumerate() {
        if si == 0 {
            continue;
        }
        out = &out * &qbinom(lambda0.coords()[i], si);
        if out.is_zero() {
            return out;
        }
    }
    let ht: i64 = s.iter().sum();
    if ht % 2 != 0 {
        out = -out;
    }
    let vee = Weight::from_coords(s);
    let e = half(rs.pair(&eta, &(&(mu + &rs.rho()) + &vee)));
    q_shift(e, out)
}

/// Caches every coefficient family for one rank.
///
/// Not thread-safe by design; parallel sweeps give each worker its own engine.
pub struct Engine {
    rs: RootSystem,
    sigma: SigmaCache,
    intervals: BTreeMap<Weight, Rc<Vec<Weight>>>,
    p_cache: BTreeMap<(Weight, Weight), QPoly>,
    g0_cache: BTreeMap<(Weight, Weight), QPoly>,
    a_tables: BTreeMap<Weight, Rc<TransitionTable>>,
    h_tables: BTreeMap<Weight, Rc<TransitionTable>>,
    pub(crate) chars: CharCache,
}

impl Engine {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self::for_root_system(RootSystem::new(n)?))
    }

    pub fn for_root_system(rs: RootSystem) -> Self {
        Engine {
            rs,
            sigma: SigmaCache::new(),
            intervals: BTreeMap::new(),
            p_cache: BTreeMap::new(),
            g0_cache: BTreeMap::new(),
            a_tables: BTreeMap::new(),
            h_tables: BTreeMap::new(),
            chars: CharCache::default(),
        }
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub(crate) fn check(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rs.rank() {
            return Err(Error::RankMismatch { expected: self.rs.rank(), found: w.rank() });
        }
        Ok(())
    }

    pub(crate) fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant);
        }
        Ok(())
    }

    pub fn interval(&mut self, lambda: &Weight) -> Rc<Vec<Weight>> {
        if let Some(v) = self.intervals.get(lambda) {
            return v.clone();
        }
        let v = Rc::new(self.rs.interval(lambda));
        self.intervals.insert(lambda.clone(), v.clone());
        v
    }

    pub fn sigma(&mut self, lambda: &Weight) -> Result<Rc<SigmaFamily>> {
        self.sigma.get(&self.rs, lambda)
    }

    pub fn p(&mut self, lambda: &Weight, mu: &Weight) -> QPoly {
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.p_cache.get(&key) {
            return v.clone();
        }
        let v = p_coeff(&self.rs, lambda, mu);
        self.p_cache.insert(key, v.clone());
        v
    }

    /// `g_{0,λ}^μ` by the alternating Σ-set formula.
    pub fn g0(&mut self, lambda: &Weight, mu: &Weight) -> QPoly {
        if !lambda.is_dominant() || !mu.is_dominant() {
            return QPoly::zero();
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.g0_cache.get(&key) {
            return v.clone();
        }
        let v = self.g0_uncached(lambda, mu);
        self.g0_cache.insert(key, v.clone());
        v
    }

    fn g0_uncached(&mut self, lambda: &Weight, mu: &Weight) -> QPoly {
        let d = lambda.split();
        if d.lambda1.is_zero() {
            return g0_two_lambda0(&self.rs, &d.lambda0, mu);
        }
        let fam = self.sigma.get(&self.rs, &d.lambda1).expect("λ1 lies in P^+(1)");
        let pre = half(self.rs.pair(&d.lambda1, lambda));
        let base = &(2 * &d.lambda0) - &(2 * mu);
        let mut total = QPoly::zero();
        for (s, nu) in fam.members() {
            let rest = mu - nu;
            if !rest.is_dominant() {
                continue;
            }
            let t = g0_two_lambda0(&self.rs, &d.lambda0, &rest);
            if t.is_zero() {
                continue;
            }
            let e = pre + half(self.rs.pair(&(&base + nu), nu));
            let term = q_shift(e, t);
            if s % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    pub fn p_table(&mut self, lambda: &Weight) -> TransitionTable {
        let order = self.interval(lambda);
        let rows = order.iter().map(|mu| (mu.clone(), self.p(lambda, mu))).collect();
        TransitionTable::new(TableKind::P, lambda.clone(), rows)
    }

    pub fn g0_table(&mut self, lambda: &Weight) -> TransitionTable {
        let order = self.interval(lambda);
        let rows = order.iter().map(|mu| (mu.clone(), self.g0(lambda, mu))).collect();
        TransitionTable::new(TableKind::G0, lambda.clone(), rows)
    }

    /// `a_λ^·` by back-substitution against `p`.
    pub fn a_table(&mut self, lambda: &Weight) -> Rc<TransitionTable> {
        if let Some(t) = self.a_tables.get(lambda) {
            return t.clone();
        }
        let order = self.interval(lambda);
        let mut rows: Vec<(Weight, QPoly)> = Vec::with_capacity(order.len());
        for nu in order.iter() {
            let v = if nu == lambda {
                QPoly::one()
            } else {
                let mut acc = QPoly::zero();
                for (mu, a) in &rows {
                    if a.is_zero() {
                        continue;
                    }
                    let p = self.p(mu, nu);
                    if !p.is_zero() {
                        acc -= a * &p;
                    }
                }
                acc
            };
            rows.push((nu.clone(), v));
        }
        let t = Rc::new(TransitionTable::new(TableKind::A, lambda.clone(), rows));
        self.a_tables.insert(lambda.clone(), t.clone());
        t
    }

    /// `h_{ν,0}^·` by solving `Σ_{μ'} h_{ν,0}^{μ'} g_{0,μ'}^μ = δ_{ν,μ}`.
    pub fn h_table(&mut self, nu: &Weight) -> Rc<TransitionTable> {
        if let Some(t) = self.h_tables.get(nu) {
            return t.clone();
        }
        let order = self.interval(nu);
        let mut rows: Vec<(Weight, QPoly)> = Vec::with_capacity(order.len());
        for mu in order.iter() {
            let v = if mu == nu {
                QPoly::one()
            } else {
                let mut acc = QPoly::zero();
                for (mp, h) in &rows {
                    if h.is_zero() {
                        continue;
                    }
                    let g = self.g0(mp, mu);
                    if !g.is_zero() {
                        acc -= h * &g;
                    }
                }
                acc
            };
            rows.push((mu.clone(), v));
        }
        let t = Rc::new(TransitionTable::new(TableKind::H, nu.clone(), rows));
        self.h_tables.insert(nu.clone(), t.clone());
        t
    }

    pub fn table(&mut self, kind: TableKind, top: &Weight) -> Result<TransitionTable> {
        self.check_dominant(top)?;
        Ok(match kind {
            TableKind::P => self.p_table(top),
            TableKind::A => (*self.a_table(top)).clone(),
            TableKind::G0 => self.g0_table(top),
            TableKind::H => (*self.h_table(top)).clone(),
        })
    }

    /// `a_λ^μ` read from the triangular solve.
    pub fn a(&mut self, lambda: &Weight, mu: &Weight) -> QPoly {
        if !lambda.is_dominant() || !mu.is_dominant() {
            return QPoly::zero();
        }
        self.a_table(lambda).get(mu)
    }

    /// `h_{ν,0}^μ` read from the triangular solve.
    pub fn h(&mut self, nu: &Weight, mu: &Weight) -> QPoly {
        if !nu.is_dominant() || !mu.is_dominant() {
            return QPoly::zero();
        }
        self.h_table(nu).get(mu)
    }

    /// `g_{ν,λ}^μ = q^{(λ+ν-μ, ν)} g_{0,λ}^{μ-ν}`.
    pub fn g_pair(&mut self, nu: &Weight, lambda: &Weight, mu: &Weight) -> QPoly {
        if !nu.is_dominant() || !lambda.is_dominant() || !mu.is_dominant() {
            return QPoly::zero();
        }
        let d = mu - nu;
        let g = self.g0(lambda, &d);
        let e = self.rs.pair(&(lambda - &d), nu);
        q_shift(e, g)
    }

    /// [`g_pair`](Self::g_pair) together with the admissibility of `(ν, λ)`.
    pub fn g_pair_coeff(&mut self, nu: &Weight, lambda: &Weight, mu: &Weight) -> (QPoly, bool) {
        let adm = self.rs.is_admissible(nu, lambda);
        (self.g_pair(nu, lambda, mu), adm)
    }

    /// `h_{ν,λ}^μ = Σ_{μ'} g_{ν,λ}^{μ'} h_{μ',0}^μ`.
    pub fn h_pair(&mut self, nu: &Weight, lambda: &Weight, mu: &Weight) -> QPoly {
        if !nu.is_dominant() || !lambda.is_dominant() || !mu.is_dominant() {
            return QPoly::zero();
        }
        let order = self.interval(lambda);
        let mut total = QPoly::zero();
        for d in order.iter() {
            let mp = nu + d;
            if !self.rs.leq(mu, &mp) {
                continue;
            }
            let g = self.g_pair(nu, lambda, &mp);
            if g.is_zero() {
                continue;
            }
            let table = self.h_table(&mp);
            if let Some(h) = table.get_ref(mu) {
                if !h.is_zero() {
                    total += &g * h;
                }
            }
        }
        total
    }
}
