//! Schur polynomials in `n + 1` variables, basis changes, tensor products
//! and Weyl dimensions.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{RootSystem, Weight};
use crate::qpoly::QPoly;

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are kept as given so that fixed-length forms survive round
/// trips; use [`trimmed`](Self::trimmed) for the canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics if `parts` is not weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        Partition { parts }
    }

    pub fn try_new(parts: Vec<usize>) -> Option<Self> {
        parts.windows(2).all(|w| w[0] >= w[1]).then_some(Partition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn trimmed(&self) -> Partition {
        Partition { parts: self.parts[..self.len()].to_vec() }
    }

    /// Padded (or trimmed of zeros) to exactly `len` parts.
    pub fn padded(&self, len: usize) -> Partition {
        assert!(self.len() <= len, "partition has more than {} parts", len);
        let mut parts = self.parts[..self.len()].to_vec();
        parts.resize(len, 0);
        Partition { parts }
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (0..width).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect() }
    }

    /// Dominance order `self ⊵ other` (same size assumed by the caller).
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.parts.len().max(other.parts.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `size` with at most `rows` parts, each ≤ `max_part`, lexicographically decreasing.
    pub fn all(size: usize, rows: usize, max_part: usize) -> Vec<Partition> {
        fn go(rest: usize, rows: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if rows == 0 {
                return;
            }
            for first in (1..=cap.min(rest)).rev() {
                cur.push(first);
                go(rest - first, rows - 1, first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, rows, max_part, &mut Vec::new(), &mut out);
        out
    }
}

/// A semistandard tableau stored row by row (top row first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
    }

    /// Rows from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<u8> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// `content[k]` counts the entries equal to `k + 1`.
    pub fn content(&self, letters: usize) -> Vec<usize> {
        let mut c = vec![0; letters];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].len() <= pair[0].len() && pair[1].iter().zip(&pair[0]).all(|(b, a)| a < b)
        });
        rows_ok && cols_ok
    }
}

/// Visits every SSYT built by adding `content[k]` copies of `k + 1` as a
/// horizontal strip, never letting the shape leave `bound` (row lengths,
/// `None` = unbounded) and stopping at `target` when given.
pub(crate) fn for_each_ssyt<F: FnMut(&Tableau)>(
    content: &[usize],
    target: Option<&Partition>,
    max_first_row: Option<usize>,
    f: &mut F,
) {
    let mut t = Tableau { rows: Vec::new() };
    strip_dfs(content, 0, target, max_first_row, &mut t, f);
}

fn strip_dfs<F: FnMut(&Tableau)>(
    content: &[usize],
    letter: usize,
    target: Option<&Partition>,
    max_first_row: Option<usize>,
    t: &mut Tableau,
    f: &mut F,
) {
    if letter == content.len() {
        if target.is_none_or(|p| t.shape().trimmed() == p.trimmed()) {
            f(t);
        }
        return;
    }
    let shape: Vec<usize> = t.rows.iter().map(Vec::len).collect();
    let mut adds = vec![0usize; shape.len() + 1];
    place(content, letter, content[letter], 0, &shape, &mut adds, target, max_first_row, t, f);
}

#[allow(clippy::too_many_arguments)]
fn place<F: FnMut(&Tableau)>(
    content: &[usize],
    letter: usize,
    remaining: usize,
    row: usize,
    shape: &[usize],
    adds: &mut Vec<usize>,
    target: Option<&Partition>,
    max_first_row: Option<usize>,
    t: &mut Tableau,
    f: &mut F,
) {
    if row == adds.len() {
        if remaining > 0 {
            return;
        }
        let value = (letter + 1) as u8;
        for (r, &k) in adds.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if r == t.rows.len() {
                t.rows.push(Vec::new());
            }
            t.rows[r].extend(core::iter::repeat_n(value, k));
        }
        strip_dfs(content, letter + 1, target, max_first_row, t, f);
        for (r, &k) in adds.iter().enumerate().rev() {
            if k == 0 {
                continue;
            }
            let len = t.rows[r].len();
            t.rows[r].truncate(len - k);
            if t.rows[r].is_empty() {
                t.rows.pop();
            }
        }
        return;
    }
    let cur = shape.get(row).copied().unwrap_or(0);
    // horizontal strip: new row length may not exceed the old length of the row above
    let mut cap = if row == 0 { usize::MAX } else { shape[row - 1] - cur };
    if row == 0 {
        if let Some(m) = max_first_row {
            cap = m.saturating_sub(cur);
        }
    }
    if let Some(p) = target {
        let goal = p.parts().get(row).copied().unwrap_or(0);
        if goal < cur {
            return;
        }
        cap = cap.min(goal - cur);
    }
    for k in (0..=cap.min(remaining)).rev() {
        adds[row] = k;
        place(content, letter, remaining - k, row + 1, shape, adds, target, max_first_row, t, f);
    }
    adds[row] = 0;
}

/// All SSYT of `shape` with entries in `[1, letters]`.
pub fn ssyt(shape: &Partition, letters: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    let sz = shape.size();
    // content is free: enumerate every composition of the size into `letters` parts
    let mut content = vec![0usize; letters];
    compositions(sz, 0, &mut content, &mut |c| {
        for_each_ssyt(c, Some(shape), None, &mut |t| out.push(t.clone()));
    });
    out
}

fn compositions<F: FnMut(&[usize])>(rest: usize, idx: usize, cur: &mut Vec<usize>, f: &mut F) {
    if cur.is_empty() {
        if rest == 0 {
            f(cur);
        }
        return;
    }
    if idx + 1 == cur.len() {
        cur[idx] = rest;
        f(cur);
        return;
    }
    for v in 0..=rest {
        cur[idx] = v;
        compositions(rest - v, idx + 1, cur, f);
    }
}

/// Weight multiplicities of the Schur polynomial `s_shape` in `letters`
/// variables: content vector ↦ number of tableaux.
pub fn content_counts(shape: &Partition, letters: usize) -> BTreeMap<Vec<usize>, u64> {
    let mut out = BTreeMap::new();
    let shape = shape.trimmed();
    if shape.len() > letters {
        return out;
    }
    // Gelfand–Tsetlin style: interlacing chain of shapes, one letter at a time.
    gt_chain(&shape, letters, &mut vec![0; letters], &mut out);
    out
}

fn gt_chain(top: &Partition, letters: usize, content: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, u64>) {
    // peel the largest letter: choose a shape below `top` differing by a horizontal strip
    if letters == 0 {
        if top.size() == 0 {
            *out.entry(content.clone()).or_insert(0) += 1;
        }
        return;
    }
    if top.len() > letters {
        return;
    }
    let parts = top.parts();
    let len = parts.len();
    let mut below = vec![0usize; len];
    interlace(parts, 0, &mut below, &mut |b| {
        let removed = top.size() - b.iter().sum::<usize>();
        content[letters - 1] = removed;
        let p = Partition::from_parts_unchecked(b.to_vec()).trimmed();
        gt_chain(&p, letters - 1, content, out);
    });
    content[letters - 1] = 0;
}

/// Enumerates `b` with `parts[i+1] ≤ b[i] ≤ parts[i]`.
fn interlace<F: FnMut(&[usize])>(parts: &[usize], i: usize, b: &mut Vec<usize>, f: &mut F) {
    if i == parts.len() {
        f(b);
        return;
    }
    let lo = parts.get(i + 1).copied().unwrap_or(0);
    for v in lo..=parts[i] {
        b[i] = v;
        interlace(parts, i + 1, b, f);
    }
}

/// A homogeneous polynomial in `vars` variables with `QPoly` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPoly {
    vars: usize,
    terms: BTreeMap<Vec<usize>, QPoly>,
}

impl MonomialPoly {
    pub fn zero(vars: usize) -> Self {
        MonomialPoly { vars, terms: BTreeMap::new() }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[usize]) -> QPoly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<usize>, c: &QPoly) {
        assert_eq!(exps.len(), self.vars);
        if let Some(d) = self.degree() {
            assert_eq!(exps.iter().sum::<usize>(), d, "inhomogeneous term");
        }
        let slot = self.terms.entry(exps.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|e| e.iter().sum())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn mul(&self, other: &MonomialPoly) -> MonomialPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = MonomialPoly::zero(self.vars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }

    /// Invariant under permuting variables.
    pub fn is_symmetric(&self) -> bool {
        // adjacent transpositions generate the symmetric group
        (0..self.vars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut s = e.clone();
                s.swap(i, i + 1);
                self.terms.get(&s) == Some(c)
            })
        })
    }
}

/// `s_p` in `vars` variables, as a sum of monomials.
pub fn schur_expand(p: &Partition, vars: usize) -> MonomialPoly {
    let mut out = MonomialPoly::zero(vars);
    for (content, count) in content_counts(p, vars) {
        out.add_term(content, &QPoly::constant(count as i64));
    }
    out
}

/// A finite Schur-basis expansion keyed by dominant weights of rank `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurSeries {
    n: usize,
    terms: BTreeMap<Weight, QPoly>,
}

impl SchurSeries {
    pub fn zero(n: usize) -> Self {
        SchurSeries { n, terms: BTreeMap::new() }
    }

    pub fn unit(w: Weight) -> Self {
        let mut s = Self::zero(w.rank());
        s.add(&w, &QPoly::one());
        s
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Weight, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, w: &Weight) -> QPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&mut self, w: &Weight, c: &QPoly) {
        assert_eq!(w.rank(), self.n);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(w);
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &SchurSeries, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add(w, &(x * c));
        }
    }

    /// Every coefficient lies in `Z_+[q]`.
    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(QPoly::is_positive)
    }

    /// Coefficients at `q = 1`.
    pub fn eval_q1(&self) -> BTreeMap<Weight, BigInt> {
        self.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.eval_q1()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Coefficients at `q = 0`.
    pub fn constant_terms(&self) -> BTreeMap<Weight, BigInt> {
        self.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.constant_term()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Terms in descending weight order, the order used for display.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Weight, &QPoly)> + '_ {
        self.terms.iter().rev()
    }
}

/// Leading-term peeling of a symmetric polynomial into Schur functions.
pub fn to_schur(m: &MonomialPoly) -> Result<SchurSeries> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let vars = m.vars();
    let rs = RootSystem::new(vars.saturating_sub(1).max(1))?;
    let mut rest = m.clone();
    let mut out = SchurSeries::zero(rs.rank());
    while let Some((lead, c)) = rest
        .terms
        .iter()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .max_by(|a, b| a.0.cmp(b.0))
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        let p = Partition::new(lead);
        out.add(&rs.from_partition(&p)?, &c);
        let s = schur_expand(&p, vars);
        for (e, x) in s.terms() {
            rest.add_term(e.clone(), &-(x * &c));
        }
    }
    debug_assert!(rest.terms.is_empty());
    Ok(out)
}

/// `δ = (n, n-1, …, 0)` straightening: turns `exps + δ` into a signed partition.
fn straighten(v: &mut [i64]) -> Option<(i64, Vec<usize>)> {
    let len = v.len();
    for (i, x) in v.iter_mut().enumerate() {
        *x += (len - 1 - i) as i64;
    }
    // insertion sort counting transpositions
    let mut sign = 1;
    for i in 1..len {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) || v.last().is_some_and(|&x| x < 0) {
        return None;
    }
    Some((sign, v.iter().enumerate().map(|(i, &x)| (x - (len - 1 - i) as i64) as usize).collect()))
}

/// Character of `V(μ)` as content vectors in `n + 1` variables.
pub fn weight_multiplicities(rs: &RootSystem, mu: &Weight) -> BTreeMap<Vec<usize>, u64> {
    content_counts(&rs.to_partition(mu).expect("dominant"), rs.rank() + 1)
}

pub(crate) fn tensor_with(
    rs: &RootSystem,
    mu: &Weight,
    nu_chars: &BTreeMap<Vec<usize>, u64>,
) -> BTreeMap<Weight, u64> {
    let base = rs.to_partition(mu).expect("dominant");
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    let mut buf = vec![0i64; rs.rank() + 1];
    for (content, &mult) in nu_chars {
        for (i, b) in buf.iter_mut().enumerate() {
            *b = (base.parts()[i] + content[i]) as i64;
        }
        if let Some((sign, parts)) = straighten(&mut buf) {
            let w = rs.from_partition(&Partition::from_parts_unchecked(parts)).expect("fits");
            *acc.entry(w).or_insert(0) += sign * mult as i64;
        }
    }
    acc.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(w, c)| {
            assert!(c > 0, "negative tensor multiplicity");
            (w, c as u64)
        })
        .collect()
}

/// Multiplicities of `V(κ)` in `V(μ) ⊗ V(ν)`.
pub fn tensor_decompose(rs: &RootSystem, mu: &Weight, nu: &Weight) -> Result<BTreeMap<Weight, u64>> {
    for w in [mu, nu] {
        if w.rank() != rs.rank() {
            return Err(Error::RankMismatch { expected: rs.rank(), found: w.rank() });
        }
        if !w.is_dominant() {
            return Err(Error::NotDominant);
        }
    }
    Ok(tensor_with(rs, mu, &weight_multiplicities(rs, nu)))
}

/// `Π_{α>0} (μ+ρ, α)/(ρ, α)`.
pub fn weyl_dim(rs: &RootSystem, mu: &Weight) -> Result<BigInt> {
    if mu.rank() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), found: mu.rank() });
    }
    if !mu.is_dominant() {
        return Err(Error::NotDominant);
    }
    let n = rs.rank();
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for i in 1..=n {
        let mut s = 0i64;
        for j in i..=n {
            s += mu.get(j) + 1;
            num *= s;
            den *= (j - i + 1) as i64;
        }
    }
    Ok(num / den)
}
