//! Exhaustive verification of the coefficient identities over bounded sweeps.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{lt_min, Rational, RootSystem, Weight};
use crate::qpoly::QPoly;
use crate::transition::{q_shift, Engine};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteId {
    Inverse,
    AEqualsG,
    GProp,
    Support,
    GRecHt2,
    GRec2l0,
    GRecFull,
    Sescon,
    Crux,
    HEqualsP,
    PRec,
    HInit,
    HVanish,
    SchurPositive,
    Factorization,
    PRoundtrip,
    Dimension,
    SigmaStructure,
}

impl SuiteId {
    pub const ALL: [SuiteId; 18] = [
        SuiteId::Inverse,
        SuiteId::AEqualsG,
        SuiteId::GProp,
        SuiteId::Support,
        SuiteId::GRecHt2,
        SuiteId::GRec2l0,
        SuiteId::GRecFull,
        SuiteId::Sescon,
        SuiteId::Crux,
        SuiteId::HEqualsP,
        SuiteId::PRec,
        SuiteId::HInit,
        SuiteId::HVanish,
        SuiteId::SchurPositive,
        SuiteId::Factorization,
        SuiteId::PRoundtrip,
        SuiteId::Dimension,
        SuiteId::SigmaStructure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Inverse => "inverse",
            SuiteId::AEqualsG => "a-equals-g",
            SuiteId::GProp => "gprop",
            SuiteId::Support => "support",
            SuiteId::GRecHt2 => "g-rec-ht2",
            SuiteId::GRec2l0 => "g-rec-2l0",
            SuiteId::GRecFull => "g-rec-full",
            SuiteId::Sescon => "sescon",
            SuiteId::Crux => "crux",
            SuiteId::HEqualsP => "h-equals-p",
            SuiteId::PRec => "p-rec",
            SuiteId::HInit => "hinit",
            SuiteId::HVanish => "h-vanish",
            SuiteId::SchurPositive => "schur-positive",
            SuiteId::Factorization => "factorization",
            SuiteId::PRoundtrip => "p-roundtrip",
            SuiteId::Dimension => "dimension",
            SuiteId::SigmaStructure => "sigma-structure",
        }
    }

    pub fn parse(s: &str) -> Result<SuiteId> {
        SuiteId::ALL.into_iter().find(|id| id.name() == s).ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }

    /// A suite name or `all`.
    pub fn parse_selector(s: &str) -> Result<Vec<SuiteId>> {
        if s == "all" {
            Ok(SuiteId::ALL.to_vec())
        } else {
            Ok(alloc::vec![SuiteId::parse(s)?])
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub n_max: usize,
    pub ht_max: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub params: String,
    pub lhs: QPoly,
    pub rhs: QPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub suite: SuiteId,
    pub instances: u64,
    pub skipped: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn new(suite: SuiteId) -> Self {
        IdentityReport { suite, instances: 0, skipped: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds per-rank reports of the same suite together, in call order.
    pub fn merge(&mut self, other: IdentityReport) {
        debug_assert_eq!(self.suite, other.suite);
        self.instances += other.instances;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

struct Run<'e> {
    e: &'e mut Engine,
    rs: RootSystem,
    h: i64,
    report: IdentityReport,
}

impl Run<'_> {
    fn check(&mut self, params: impl FnOnce() -> String, lhs: QPoly, rhs: QPoly) {
        self.report.instances += 1;
        if lhs != rhs {
            let params = format!("n={} {}", self.rs.rank(), params());
            self.report.failures.push(Failure { params, lhs, rhs });
        }
    }

    fn truth(&mut self, params: impl FnOnce() -> String, ok: bool) {
        let rhs = QPoly::one();
        self.check(params, if ok { QPoly::one() } else { QPoly::zero() }, rhs);
    }

    fn skip(&mut self) {
        self.report.skipped += 1;
    }

    fn dominant(&self) -> Vec<Weight> {
        self.rs.dominant_up_to(self.h)
    }

    fn admissible_pairs(&self) -> Vec<(Weight, Weight)> {
        let all = self.dominant();
        let mut out = Vec::new();
        for nu in &all {
            for lambda in &all {
                if nu.ht() + lambda.ht() <= self.h && self.rs.is_admissible(nu, lambda) {
                    out.push((nu.clone(), lambda.clone()));
                }
            }
        }
        out
    }

    fn om(&self, i: usize) -> Weight {
        self.rs.omega(i)
    }

    fn pair(&self, x: &Weight, y: &Weight) -> Rational {
        self.rs.pair(x, y)
    }
}

fn half(r: Rational) -> Rational {
    r / Rational::from_integer(2)
}

fn big(c: &BigInt) -> QPoly {
    QPoly::monomial(0, c.clone())
}

/// Runs one suite in the rank of `engine`, for weights of height at most `ht_max`.
pub fn run_suite_rank(engine: &mut Engine, suite: SuiteId, ht_max: i64) -> IdentityReport {
    let rs = *engine.rs();
    let mut run = Run { e: engine, rs, h: ht_max, report: IdentityReport::new(suite) };
    match suite {
        SuiteId::Inverse => inverse(&mut run),
        SuiteId::AEqualsG => a_equals_g(&mut run),
        SuiteId::GProp => gprop(&mut run),
        SuiteId::Support => support(&mut run),
        SuiteId::GRecHt2 => g_rec_ht2(&mut run),
        SuiteId::GRec2l0 => g_rec_2l0(&mut run),
        SuiteId::GRecFull => g_rec_full(&mut run),
        SuiteId::Sescon => sescon(&mut run),
        SuiteId::Crux => crux(&mut run),
        SuiteId::HEqualsP => h_equals_p(&mut run),
        SuiteId::PRec => p_rec(&mut run),
        SuiteId::HInit => hinit(&mut run),
        SuiteId::HVanish => h_vanish(&mut run),
        SuiteId::SchurPositive => schur_positive(&mut run),
        SuiteId::Factorization => factorization(&mut run),
        SuiteId::PRoundtrip => p_roundtrip(&mut run),
        SuiteId::Dimension => dimension(&mut run),
        SuiteId::SigmaStructure => sigma_structure(&mut run),
    }
    run.report
}

/// Runs one suite for every rank `1..=n_max`, sequentially.
pub fn run_identity_suite(suite: SuiteId, bounds: Bounds) -> Result<IdentityReport> {
    let mut report = IdentityReport::new(suite);
    for n in 1..=bounds.n_max {
        let mut e = Engine::new(n)?;
        report.merge(run_suite_rank(&mut e, suite, bounds.ht_max));
    }
    Ok(report)
}

/// Name-based entry point; accepts any registered suite name.
pub fn run_identity_suite_named(name: &str, bounds: Bounds) -> Result<IdentityReport> {
    run_identity_suite(SuiteId::parse(name)?, bounds)
}

fn inverse(r: &mut Run) {
    for lambda in r.dominant() {
        let iv = r.e.interval(&lambda);
        for nu in iv.iter() {
            let mut left = QPoly::zero();
            let mut right = QPoly::zero();
            for mu in iv.iter() {
                left += r.e.a(&lambda, mu) * r.e.p(mu, nu);
                right += r.e.p(&lambda, mu) * r.e.a(mu, nu);
            }
            let delta = if *nu == lambda { QPoly::one() } else { QPoly::zero() };
            r.check(|| format!("side=a*p lambda={:?} nu={:?}", lambda, nu), left, delta.clone());
            r.check(|| format!("side=p*a lambda={:?} nu={:?}", lambda, nu), right, delta);
        }
    }
}

fn a_equals_g(r: &mut Run) {
    for lambda in r.dominant() {
        let table = r.e.a_table(&lambda);
        for (mu, a) in table.rows() {
            let g = r.e.g0(&lambda, mu);
            r.check(|| format!("lambda={:?} mu={:?}", lambda, mu), a.clone(), g);
        }
    }
}

fn gprop(r: &mut Run) {
    for lambda in r.dominant() {
        if lambda.ht() < 2 {
            r.skip();
            continue;
        }
        let wr = r.om(r.rs.residue(&lambda));
        let mut sum = QPoly::zero();
        for mu in r.e.interval(&lambda).iter() {
            let g = r.e.g0(&lambda, mu);
            let e = half(r.pair(&(mu + &wr), &(mu - &wr)));
            sum += q_shift(e, g);
        }
        r.check(|| format!("lambda={:?}", lambda), sum, QPoly::zero());
    }
}

fn support(r: &mut Run) {
    let n = r.rs.rank();
    for lambda in r.dominant() {
        let l1 = lambda.split().lambda1;
        for mu in r.e.interval(&lambda).iter() {
            let k = r.rs.q_plus_coords(&(&lambda - mu)).expect("interval member");
            let violated = (1..=n).any(|s| lt_min(s, &l1) && k[s - 1] > lambda.get(s));
            if violated {
                let g = r.e.g0(&lambda, mu);
                r.check(|| format!("lambda={:?} mu={:?}", lambda, mu), g, QPoly::zero());
            } else {
                r.skip();
            }
        }
    }
}

fn g_rec_ht2(r: &mut Run) {
    for lambda in r.rs.p_plus_one() {
        if lambda.is_zero() || lambda.ht() > r.h {
            continue;
        }
        let m = lambda.min_support();
        let rest = &lambda - &r.om(m);
        let p = rest.min_support();
        for mu in r.e.interval(&lambda).iter() {
            let lhs = r.e.g0(&lambda, mu);
            let mut rhs = r.e.g0(&rest, &(mu - &r.om(m)));
            if p != 0 {
                let top = &(&rest - &r.om(p)) + &r.om(p + 1);
                rhs -= r.e.g0(&top, &(mu - &r.om(m - 1))).shifted(1);
            }
            r.check(|| format!("lambda={:?} mu={:?}", lambda, mu), lhs, rhs);
        }
    }
}

fn g_rec_2l0(r: &mut Run) {
    let n = r.rs.rank();
    for l1 in r.rs.p_plus_one() {
        for j in 1..=n {
            if !lt_min(j + 1, &l1) {
                continue;
            }
            let two = 2 * &r.om(j);
            let lambda = &l1 + &two;
            if lambda.ht() > r.h {
                continue;
            }
            for mu in r.e.interval(&lambda).iter() {
                let lhs = r.e.g0(&lambda, mu);
                let down = mu - &two;
                let rhs = r.e.g0(&l1, &down) - r.e.g0(&l1, &(&down + &r.rs.alpha(j))).shifted(1);
                r.check(|| format!("j={} lambda={:?} mu={:?}", j, lambda, mu), lhs, rhs);
            }
        }
    }
}

fn g_rec_full(r: &mut Run) {
    let n = r.rs.rank();
    for lambda in r.dominant() {
        let d = lambda.split();
        let iv = r.e.interval(&lambda);
        if !d.lambda1.is_zero() {
            let m = d.lambda1.min_support();
            let p = (&d.lambda1 - &r.om(m)).min_support();
            let wm = r.om(m);
            let wm1 = r.om(m - 1);
            for mu in iv.iter() {
                let lhs = r.e.g0(&lambda, mu);
                let diff = &lambda - mu;
                let first = q_shift(r.pair(&wm, &diff), r.e.g0(&(&lambda - &wm), &(mu - &wm)));
                let mut rhs = first;
                if p != 0 {
                    let top = &(&lambda - &r.rs.alpha_range(m, p)) - &wm1;
                    let e = half(r.pair(&lambda, &r.rs.alpha_range(m, p))) + r.pair(&wm1, &diff);
                    rhs -= q_shift(e, r.e.g0(&top, &(mu - &wm1)));
                }
                r.check(|| format!("form=ht2 lambda={:?} mu={:?}", lambda, mu), lhs, rhs);
            }
        }
        for j in 1..=n {
            let two = 2 * &r.om(j);
            if d.lambda0.get(j) == 0 || !r.rs.is_admissible(&two, &(&lambda - &two)) {
                continue;
            }
            let aj = r.rs.alpha(j);
            let below = &lambda - &two;
            for mu in iv.iter() {
                let lhs = r.e.g0(&lambda, mu);
                let diff = &lambda - mu;
                let first = q_shift(r.pair(&two, &diff), r.e.g0(&below, &(mu - &two)));
                let e = r.pair(&d.lambda0, &aj) + r.pair(&(&two - &aj), &(&diff - &aj));
                let second = q_shift(e, r.e.g0(&below, &(&(mu - &two) + &aj)));
                r.check(|| format!("form=2l0 j={} lambda={:?} mu={:?}", j, lambda, mu), lhs, first - second);
            }
        }
    }
}

#[derive(Clone, Copy)]
enum B {
    G,
    H,
}

impl B {
    fn name(self) -> &'static str {
        match self {
            B::G => "g",
            B::H => "h",
        }
    }
}

fn coeff(r: &mut Run, b: B, nu: &Weight, lambda: &Weight, mu: &Weight) -> QPoly {
    match b {
        B::G => r.e.g_pair(nu, lambda, mu),
        B::H => r.e.h_pair(nu, lambda, mu),
    }
}

fn sescon(r: &mut Run) {
    let n = r.rs.rank();
    let pairs = r.admissible_pairs();
    for b in [B::G, B::H] {
        let before = r.report.instances;
        // ν(h_j) ≥ 2
        for (nu, lambda) in &pairs {
            let l0 = lambda.split().lambda0;
            for j in 1..=n {
                if nu.get(j) < 2 {
                    continue;
                }
                let two = 2 * &r.om(j);
                let aj = r.rs.alpha(j);
                let e = l0.get(j) + nu.get(j) - 1;
                for mu in r.e.interval(&(nu + lambda)).iter() {
                    let lhs = coeff(r, b, nu, lambda, mu);
                    let rhs = coeff(r, b, &(nu - &two), &(lambda + &two), mu)
                        + coeff(r, b, &(nu - &aj), lambda, mu).shifted(e);
                    r.check(
                        || format!("b={} form=a j={} nu={:?} lambda={:?} mu={:?}", b.name(), j, nu, lambda, mu),
                        lhs,
                        rhs,
                    );
                }
            }
        }
        // ν ∈ P^+(1), max ν < m = min λ1, p = min(λ1 - ω_m) > 0
        for (nu, lambda) in &pairs {
            let l1 = lambda.split().lambda1;
            if !nu.in_p_plus_one() || l1.is_zero() {
                continue;
            }
            let m = l1.min_support();
            let p = (&l1 - &r.om(m)).min_support();
            if nu.max_support() >= m || p == 0 {
                continue;
            }
            let wm = r.om(m);
            let amp = r.rs.alpha_range(m, p);
            let e = half(r.pair(lambda, &amp));
            let nu_up = nu + &wm;
            let lam_down = lambda - &wm;
            let nu_side = nu + &r.om(m - 1);
            let lam_side = &(lambda - &amp) - &r.om(m - 1);
            for mu in r.e.interval(&(nu + lambda)).iter() {
                let lhs = coeff(r, b, &nu_up, &lam_down, mu);
                let rhs = coeff(r, b, nu, lambda, mu) + q_shift(e, coeff(r, b, &nu_side, &lam_side, mu));
                r.check(
                    || format!("b={} form=b nu={:?} lambda={:?} mu={:?}", b.name(), nu, lambda, mu),
                    lhs,
                    rhs,
                );
            }
        }
        // λ ∈ P^+(1), m < min λ
        for lambda in r.rs.p_plus_one() {
            for m in 1..=n {
                if !lt_min(m, &lambda) || lambda.ht() + 2 > r.h {
                    continue;
                }
                let wm = r.om(m);
                let top = &lambda + &(2 * &wm);
                let zero = r.rs.zero();
                for mu in r.e.interval(&top).iter() {
                    let lhs = coeff(r, b, &wm, &(&lambda + &wm), mu);
                    let rhs = coeff(r, b, &zero, &top, mu)
                        + coeff(r, b, &r.om(m - 1), &(&lambda + &r.om(m + 1)), mu).shifted(1);
                    r.check(
                        || format!("b={} form=c m={} lambda={:?} mu={:?}", b.name(), m, lambda, mu),
                        lhs,
                        rhs,
                    );
                }
            }
        }
        let count = r.report.instances - before;
        r.report.notes.push(format!("n={}: b={} {} instances", n, b.name(), count));
    }
}

fn crux(r: &mut Run) {
    let n = r.rs.rank();
    for lambda in r.rs.p_plus_one() {
        for m in 1..=n {
            if !lt_min(m, &lambda) || lambda.ht() + 2 > r.h {
                continue;
            }
            let wm = r.om(m);
            let top = &lambda + &(2 * &wm);
            for mu in r.e.interval(&top).iter() {
                let e = r.pair(&(&top - mu), &wm);
                let lhs = q_shift(e, r.e.g0(&(&lambda + &wm), &(mu - &wm)));
                let rhs = r.e.g0(&top, mu) + r.e.g0(&(&lambda + &r.om(m + 1)), &(mu - &r.om(m - 1))).shifted(1);
                r.check(|| format!("m={} lambda={:?} mu={:?}", m, lambda, mu), lhs, rhs);
            }
        }
    }
}

fn h_equals_p(r: &mut Run) {
    for nu in r.dominant() {
        let table = r.e.h_table(&nu);
        for (mu, h) in table.rows() {
            let p = r.e.p(&nu, mu);
            r.check(|| format!("nu={:?} mu={:?}", nu, mu), h.clone(), p);
        }
    }
}

fn p_rec(r: &mut Run) {
    let n = r.rs.rank();
    for nu in r.dominant() {
        let iv = r.e.interval(&nu);
        for j in 1..=n {
            if nu.get(j) < 2 {
                continue;
            }
            let two = 2 * &r.om(j);
            let aj = r.rs.alpha(j);
            for mu in iv.iter() {
                let lhs = r.e.p(&nu, mu);
                let e = r.pair(&r.om(j), &(&nu - mu));
                let rhs = q_shift(e, r.e.p(&(&nu - &two), &(mu - &two))) + r.e.p(&(&nu - &aj), mu).shifted(nu.get(j) - 1);
                r.check(|| format!("form=peel j={} nu={:?} mu={:?}", j, nu, mu), lhs, rhs);
            }
        }
        if nu.ht() + 1 > r.h {
            continue;
        }
        for m in 1..=n {
            let wm = r.om(m);
            for mu in iv.iter() {
                if mu.get(m) % 2 != 0 {
                    continue;
                }
                let lhs = r.e.p(&(&nu + &wm), &(mu + &wm));
                let rhs = q_shift(r.pair(&(&nu - mu), &wm), r.e.p(&nu, mu));
                r.check(|| format!("form=shift m={} nu={:?} mu={:?}", m, nu, mu), lhs, rhs);
            }
        }
    }
}

fn hinit(r: &mut Run) {
    let n = r.rs.rank();
    for nu in r.dominant() {
        let res = r.rs.residue(&nu);
        let wr = r.om(res);
        for k in 0..=n {
            let lhs = r.e.h(&nu, &r.om(k));
            let rhs = if k == res {
                q_shift(half(r.pair(&(&nu + &wr), &(&nu - &wr))), QPoly::one())
            } else {
                QPoly::zero()
            };
            r.check(|| format!("nu={:?} k={}", nu, k), lhs, rhs);
        }
    }
}

fn h_vanish(r: &mut Run) {
    let n = r.rs.rank();
    for lambda in r.rs.dominant_up_to(r.h - 1) {
        let d = lambda.split();
        for m in 1..=n {
            let ok = if d.lambda0.is_zero() {
                d.lambda1.is_zero() || m <= d.lambda1.min_support()
            } else {
                lt_min(m, &d.lambda1)
            };
            if !ok {
                r.skip();
                continue;
            }
            let wm = r.om(m);
            let top = &lambda + &wm;
            for mu in r.e.interval(&top).iter() {
                if mu.get(m) % 2 == 0 || *mu == top {
                    continue;
                }
                let h = r.e.h_pair(&wm, &lambda, mu);
                r.check(|| format!("m={} lambda={:?} mu={:?}", m, lambda, mu), h, QPoly::zero());
            }
        }
    }
}

fn first_negative(s: &crate::schur::SchurSeries) -> Option<(Weight, QPoly)> {
    s.terms().iter().find(|(_, c)| !c.is_positive()).map(|(w, c)| (w.clone(), c.clone()))
}

fn schur_positive(r: &mut Run) {
    let all = r.dominant();
    let (mut seen, mut positive) = (0u64, 0u64);
    for nu in &all {
        for lambda in &all {
            if nu.ht() + lambda.ht() > r.h {
                continue;
            }
            let s = r.e.g_pair_series(nu, lambda);
            if r.rs.is_admissible(nu, lambda) {
                let bad = first_negative(&s);
                let params = || format!("nu={:?} lambda={:?}", nu, lambda);
                match bad {
                    None => r.check(params, QPoly::zero(), QPoly::zero()),
                    Some((w, c)) => r.check(|| format!("{} at={:?}", params(), w), c, QPoly::zero()),
                }
                // q = 0 leaves only the top term
                let top = nu + lambda;
                let constant: BTreeMap<Weight, BigInt> = s.constant_terms();
                let ok = constant.len() == 1 && constant.get(&top) == Some(&BigInt::from(1));
                r.truth(|| format!("form=q0 nu={:?} lambda={:?}", nu, lambda), ok);
            } else {
                seen += 1;
                if s.is_schur_positive() {
                    positive += 1;
                }
            }
        }
    }
    r.report.notes.push(format!(
        "n={}: {} of {} non-admissible pairs Schur positive (exploratory)",
        r.rs.rank(),
        positive,
        seen
    ));
}

fn factorization(r: &mut Run) {
    for (nu, lambda) in r.admissible_pairs() {
        let f = r.e.factorization(&nu, &lambda);
        if f.holds() {
            r.check(String::new, QPoly::zero(), QPoly::zero());
            continue;
        }
        let keys: alloc::collections::BTreeSet<&Weight> = f.lhs.keys().chain(f.rhs.keys()).collect();
        let zero = BigInt::from(0);
        let w = keys.into_iter().find(|k| f.lhs.get(*k) != f.rhs.get(*k)).unwrap().clone();
        let (a, b) = (f.lhs.get(&w).unwrap_or(&zero), f.rhs.get(&w).unwrap_or(&zero));
        r.check(|| format!("nu={:?} lambda={:?} at={:?}", nu, lambda, w), big(a), big(b));
    }
}

fn p_roundtrip(r: &mut Run) {
    for nu in r.dominant() {
        let (lhs, rhs) = r.e.p_roundtrip(&nu);
        let keys: alloc::collections::BTreeSet<Weight> = lhs.terms().keys().chain(rhs.terms().keys()).cloned().collect();
        let bad = keys.into_iter().find(|k| lhs.coeff(k) != rhs.coeff(k));
        match bad {
            None => r.check(String::new, QPoly::zero(), QPoly::zero()),
            Some(w) => r.check(|| format!("nu={:?} at={:?}", nu, w), lhs.coeff(&w), rhs.coeff(&w)),
        }
    }
}

fn dimension(r: &mut Run) {
    let n = r.rs.rank();
    let zero = r.rs.zero();
    for (nu, lambda) in r.admissible_pairs() {
        let d = r.e.dim_m(&nu, &lambda);
        let prod = r.e.dim_m(&nu, &zero) * r.e.dim_m(&zero, &lambda);
        r.check(|| format!("form=product nu={:?} lambda={:?}", nu, lambda), big(&d), big(&prod));
        for j in 1..=n {
            if nu.get(j) < 2 {
                continue;
            }
            let two = 2 * &r.om(j);
            let rhs = r.e.dim_m(&(&nu - &two), &(&lambda + &two)) + r.e.dim_m(&(&nu - &r.rs.alpha(j)), &lambda);
            r.check(|| format!("form=peel j={} nu={:?} lambda={:?}", j, nu, lambda), big(&d), big(&rhs));
        }
        let l1 = lambda.split().lambda1;
        if nu.in_p_plus_one() && !nu.is_zero() && !l1.is_zero() && nu.max_support() < l1.min_support() {
            let m = nu.max_support();
            let p = l1.min_support();
            let wm = r.om(m);
            let rhs = r.e.dim_m(&(&nu - &wm), &(&lambda + &wm))
                + r.e.dim_m(&(&(&nu - &wm) + &r.om(m - 1)), &(&(&lambda - &r.om(p)) + &r.om(p + 1)));
            r.check(|| format!("form=shift nu={:?} lambda={:?}", nu, lambda), big(&d), big(&rhs));
        }
    }
    for lambda in r.rs.p_plus_one() {
        for m in 1..=n {
            if !lt_min(m, &lambda) || lambda.ht() + 2 > r.h {
                continue;
            }
            let wm = r.om(m);
            let up = &lambda + &wm;
            let d = r.e.dim_m(&wm, &up);
            let prod = r.e.dim_m(&wm, &zero) * r.e.dim_m(&zero, &up);
            let split = r.e.dim_m(&r.om(m - 1), &(&lambda + &r.om(m + 1))) + r.e.dim_m(&zero, &(&up + &wm));
            r.check(|| format!("form=edge-product m={} lambda={:?}", m, lambda), big(&d), big(&prod));
            r.check(|| format!("form=edge-split m={} lambda={:?}", m, lambda), big(&d), big(&split));
        }
    }
}

fn sigma_structure(r: &mut Run) {
    for lambda in r.rs.p_plus_one() {
        let f = r.e.sigma(&lambda).expect("P^+(1)");
        let disjoint = f.is_disjoint();
        let bounds = f.satisfies_support_bounds(&r.rs);
        r.truth(|| format!("check=disjoint lambda={:?}", lambda), disjoint);
        r.truth(|| format!("check=support lambda={:?}", lambda), bounds);
    }
}
