#![allow(dead_code)]

use std::collections::BTreeMap;

use curvefrob::rational::ratio;
use curvefrob::{parse_polynomial, CurveFunctionPair, Monomial, Poly, QMatrix, Rational, WeightSystem};

pub fn pair(f: &str, g: &str, wx: Rational, wy: Rational) -> Result<CurveFunctionPair, curvefrob::ValidationError> {
    CurveFunctionPair::validate(
        parse_polynomial(f).unwrap(),
        parse_polynomial(g).unwrap(),
        WeightSystem::new(wx, wy).unwrap(),
    )
}

pub fn ak(k: i64) -> CurveFunctionPair {
    pair("x", &format!("x^{k} + y^2"), ratio(1, 1), ratio(k, 2)).unwrap()
}

pub fn node() -> CurveFunctionPair {
    pair("x + y", "x*y", ratio(1, 1), ratio(1, 1)).unwrap()
}

/// `f = x^a + y^b` on `g = xy`.
pub fn mirror(a: i64, b: i64) -> CurveFunctionPair {
    pair(&format!("x^{a} + y^{b}"), "x*y", ratio(1, a), ratio(1, b)).unwrap()
}

/// `f = xy` on `g = x^a + y^b`.
pub fn general(a: i64, b: i64) -> CurveFunctionPair {
    pair("x*y", &format!("x^{a} + y^{b}"), ratio(b, a + b), ratio(a, a + b)).unwrap()
}

/// Curve equations with weights making them of degree 1.
fn curves() -> Vec<(String, Rational, Rational)> {
    let mut out = Vec::new();
    for a in 2..=5i64 {
        for b in a..=5i64 {
            out.push((format!("x^{a} + y^{b}"), ratio(1, a), ratio(1, b)));
        }
    }
    for a in 1..=3i64 {
        for b in 2..=4i64 {
            out.push((format!("x^{a}*y + y^{b}"), ratio(b - 1, a * b), ratio(1, b)));
        }
    }
    out
}

fn power(var: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

fn monomial(i: u32, j: u32) -> String {
    let parts: Vec<String> = [power("x", i), power("y", j)].into_iter().flatten().collect();
    parts.join("*")
}

/// Monomials of total degree 1..=3 and binomials of equal weighted degree.
fn functions(wx: &Rational, wy: &Rational) -> Vec<String> {
    let monos: Vec<(u32, u32)> = (1..=3u32).flat_map(|d| (0..=d).map(move |i| (i, d - i))).collect();
    let deg = |(i, j): (u32, u32)| wx * Rational::from_integer(i.into()) + wy * Rational::from_integer(j.into());
    let mut out: Vec<String> = monos.iter().map(|&(i, j)| monomial(i, j)).collect();
    for (n, &m1) in monos.iter().enumerate() {
        for &m2 in &monos[n + 1..] {
            if deg(m1) == deg(m2) {
                out.push(format!("{} + {}", monomial(m1.0, m1.1), monomial(m2.0, m2.1)));
                out.push(format!("{} + 2*{}", monomial(m1.0, m1.1), monomial(m2.0, m2.1)));
            }
        }
    }
    out
}

/// Valid pairs from binomial curves and low-degree functions, plus the node
/// and a few members of the `f = x^a + y^b`, `g = xy` family.
pub fn corpus() -> Vec<(String, CurveFunctionPair)> {
    let mut out = Vec::new();
    for (g, wx, wy) in curves() {
        for f in functions(&wx, &wy) {
            if let Ok(p) = pair(&f, &g, wx.clone(), wy.clone()) {
                out.push((format!("f={f}, g={g}"), p));
            }
        }
    }
    out.push(("node".to_string(), node()));
    for (a, b) in [(1, 2), (2, 3), (3, 4), (2, 2)] {
        out.push((format!("f=x^{a} + y^{b}, g=x*y"), mirror(a, b)));
    }
    out
}

/// `dim C[x, y]/(gens)` for weighted homogeneous generators, by ranks of
/// Macaulay matrices in each weighted degree. Only degrees whose monomials all
/// have total degree `<= max_total` are counted; panics unless the last few of
/// those pieces already vanish.
pub fn macaulay_dim(gens: &[Poly], w: &WeightSystem, max_total: u32) -> usize {
    let min_weight = w.px().min(w.py()).clone();
    let cutoff = &min_weight * Rational::from_integer(max_total.into());
    let mut by_degree: BTreeMap<Rational, Vec<Monomial>> = BTreeMap::new();
    for i in 0..=max_total {
        for j in 0..=(max_total - i) {
            let m = Monomial::new(i, j);
            let d = w.degree(m);
            if d <= cutoff {
                by_degree.entry(d).or_default().push(m);
            }
        }
    }
    let gen_degrees: Vec<Rational> = gens
        .iter()
        .map(|g| {
            g.weighted_degree(w)
                .unwrap()
                .degree()
                .cloned()
                .expect("homogeneous generator")
        })
        .collect();
    let mut pieces = Vec::new();
    for (d, monos) in &by_degree {
        let mut rows = Vec::new();
        for (g, gd) in gens.iter().zip(&gen_degrees) {
            let Some(multipliers) = by_degree.get(&(d - gd)) else {
                continue;
            };
            for m in multipliers {
                let prod = &Poly::monomial(*m) * g;
                rows.push(monos.iter().map(|n| prod.coeff(*n)).collect::<Vec<_>>());
            }
        }
        let rank = if rows.is_empty() {
            0
        } else {
            QMatrix::from_rows(rows).rank()
        };
        pieces.push(monos.len() - rank);
    }
    let tail = pieces.len().saturating_sub(4);
    assert!(
        pieces[tail..].iter().all(|&p| p == 0),
        "degree bound too small: {pieces:?}"
    );
    pieces.iter().sum()
}
