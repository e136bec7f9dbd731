//! LaTeX and plain-text renderings of Schur expansions.
//!
//! Coefficients are factored as `c q^k [m]_q^e` when possible, and terms
//! sharing a coefficient are grouped, e.g. `q(s_{4\omega_1+\omega_2}+s_{\omega_1+4\omega_2})`.

use demazure_core::{qint, QPoly, RootSystem, SchurSeries, Weight};
use num_bigint::BigInt;
use num_traits::One;

pub fn weight(w: &Weight) -> String {
    let mut out = String::new();
    for (i, &c) in w.coords().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("\\omega_{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn q_power(k: i64) -> String {
    match k {
        0 => String::new(),
        1 => "q".into(),
        2..=9 => format!("q^{}", k),
        _ => format!("q^{{{}}}", k),
    }
}

/// `f = c [m]_q^e` with `f(0) ≠ 0`.
fn qint_power(f: &QPoly) -> Option<(BigInt, i64, u32)> {
    let deg = f.max_exp()?;
    if deg == 0 || f.min_exp() != Some(0) {
        return None;
    }
    let c = f.coeff(0);
    for m in 2..=deg + 1 {
        if deg % (m - 1) != 0 {
            continue;
        }
        let e = (deg / (m - 1)) as u32;
        if qint(m).ok()?.pow(e).scale(&c) == *f {
            return Some((c, m, e));
        }
    }
    None
}

fn signed_const(c: &BigInt, bare: bool) -> String {
    if c.is_one() && !bare {
        String::new()
    } else if *c == -BigInt::one() && !bare {
        "-".into()
    } else {
        c.to_string()
    }
}

fn sum_form(p: &QPoly) -> String {
    let mut out = String::new();
    for (e, c) in p.terms().rev() {
        let mono = q_power(e);
        let coef = signed_const(c, mono.is_empty());
        if !out.is_empty() && !coef.starts_with('-') {
            out.push('+');
        }
        out.push_str(&coef);
        out.push_str(&mono);
    }
    out
}

/// A coefficient rendered as a prefix for `s_{...}`; empty for 1.
pub fn coeff(p: &QPoly) -> String {
    let Some(k) = p.min_exp() else { return "0".into() };
    let f = p.clone().shifted(-k);
    if f.max_exp() == Some(0) {
        let c = f.coeff(0);
        return format!("{}{}", signed_const(&c, false), q_power(k));
    }
    if let Some((c, m, e)) = qint_power(&f) {
        let c = signed_const(&c, false);
        let bracket = format!("[{}]_q", m);
        if e >= 2 && i64::from(e) == k {
            return format!("{}(q{})^{}", c, bracket, e);
        }
        let exp = if e >= 2 { format!("^{}", e) } else { String::new() };
        return format!("{}{}{}{}", c, q_power(k), bracket, exp);
    }
    format!("({})", sum_form(p))
}

/// Interval order below `top`: closest first, ties by decreasing weight.
fn ordered<'a>(rs: &RootSystem, top: &Weight, s: &'a SchurSeries) -> Vec<(&'a Weight, &'a QPoly)> {
    let depth = |w: &Weight| -> i64 {
        rs.q_plus_coords(&(top - w)).map(|c| c.iter().sum()).unwrap_or(i64::MAX)
    };
    let mut terms: Vec<_> = s.terms().iter().collect();
    terms.sort_by(|a, b| depth(a.0).cmp(&depth(b.0)).then_with(|| b.0.cmp(a.0)));
    terms
}

/// Groups equal coefficients at the position of their first occurrence.
fn grouped<'a>(terms: Vec<(&'a Weight, &'a QPoly)>) -> Vec<(&'a QPoly, Vec<&'a Weight>)> {
    let mut groups: Vec<(&QPoly, Vec<&Weight>)> = Vec::new();
    for (w, c) in terms {
        match groups.iter_mut().find(|(g, _)| *g == c) {
            Some((_, ws)) => ws.push(w),
            None => groups.push((c, vec![w])),
        }
    }
    groups
}

/// Right-hand side of `G = ...` with grouped coefficients.
pub fn series(rs: &RootSystem, top: &Weight, s: &SchurSeries) -> String {
    if s.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (c, ws) in grouped(ordered(rs, top, s)) {
        let prefix = coeff(c);
        let body: Vec<String> = ws.iter().map(|w| format!("s_{{{}}}", weight(w))).collect();
        let body = if body.len() == 1 || prefix.is_empty() {
            body.join("+")
        } else {
            format!("({})", body.join("+"))
        };
        if !out.is_empty() && !prefix.starts_with('-') {
            out.push('+');
        }
        out.push_str(&prefix);
        out.push_str(&body);
    }
    out
}

/// One term per line group, `c s[w]`, using the polynomial's own display.
pub fn series_text(rs: &RootSystem, top: &Weight, s: &SchurSeries) -> String {
    if s.is_empty() {
        return "0".into();
    }
    ordered(rs, top, s)
        .into_iter()
        .map(|(w, c)| {
            if c.is_one() {
                format!("s[{}]", w)
            } else if c.num_terms() == 1 {
                format!("{} s[{}]", c, w)
            } else {
                format!("({}) s[{}]", c, w)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn coefficient_forms() {
        assert_eq!(coeff(&p(&[(0, 1)])), "");
        assert_eq!(coeff(&p(&[(1, 1)])), "q");
        assert_eq!(coeff(&p(&[(2, 1)])), "q^2");
        assert_eq!(coeff(&p(&[(0, 2)])), "2");
        assert_eq!(coeff(&p(&[(2, 2)])), "2q^2");
        assert_eq!(coeff(&p(&[(1, 1), (2, 1)])), "q[2]_q");
        assert_eq!(coeff(&p(&[(2, 1), (3, 1)])), "q^2[2]_q");
        assert_eq!(coeff(&p(&[(2, 1), (3, 2), (4, 1)])), "(q[2]_q)^2");
        assert_eq!(coeff(&p(&[(1, 1), (2, 2)])), "(2q^2+q)");
        assert_eq!(coeff(&p(&[(1, -1)])), "-q");
        assert_eq!(coeff(&p(&[(12, 1)])), "q^{12}");
    }

    #[test]
    fn weights() {
        let rs = RootSystem::new(3).unwrap();
        assert_eq!(weight(&rs.weight(&[2, 0, 1]).unwrap()), "2\\omega_1+\\omega_3");
        assert_eq!(weight(&rs.zero()), "0");
    }

    #[test]
    fn grouping_and_order() {
        let rs = RootSystem::new(2).unwrap();
        let top = rs.weight(&[2, 2]).unwrap();
        let mut s = SchurSeries::zero(2);
        s.add(&top, &QPoly::one());
        s.add(&rs.weight(&[1, 1]).unwrap(), &p(&[(1, 1)]));
        s.add(&rs.zero(), &p(&[(2, 1)]));
        assert_eq!(series(&rs, &top, &s), "s_{2\\omega_1+2\\omega_2}+qs_{\\omega_1+\\omega_2}+q^2s_{0}");
        assert_eq!(series_text(&rs, &top, &s), "s[2w1+2w2] + q s[w1+w2] + q^2 s[0]");
    }
}
