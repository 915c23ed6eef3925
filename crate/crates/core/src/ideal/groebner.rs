use std::cmp::Ordering;

use num_traits::One;

use super::IdealError;
use crate::poly::{Monomial, Poly, WeightSystem};
use crate::rational::Rational;

/// Weighted-degree order with ties broken lexicographically, `x > y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    weights: WeightSystem,
}

impl MonomialOrder {
    pub fn new(weights: WeightSystem) -> Self {
        MonomialOrder { weights }
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn cmp(&self, a: Monomial, b: Monomial) -> Ordering {
        self.weights.cmp_monomials(a, b)
    }
}

/// A reduced Gröbner basis.
///
/// When built with [`GroebnerBasis::with_cofactors`] every generator also
/// carries its expression in the input generators, which is what
/// [`GroebnerBasis::lift`] needs.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    generators: Vec<Poly>,
    leading: Vec<Monomial>,
    cofactors: Option<Vec<Vec<Poly>>>,
    input_len: usize,
}

#[derive(Clone)]
struct Element {
    poly: Poly,
    lm: Monomial,
    cof: Option<Vec<Poly>>,
}

impl GroebnerBasis {
    pub fn new(generators: &[Poly], order: &MonomialOrder) -> Result<Self, IdealError> {
        buchberger(generators, order, false)
    }

    pub fn with_cofactors(generators: &[Poly], order: &MonomialOrder) -> Result<Self, IdealError> {
        buchberger(generators, order, true)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.order.weights
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        divide(p, &self.generators, &self.leading, &self.order, false).1
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Quotients `q_k` and remainder `r` with `p = Σ q_k·G_k + r`.
    pub fn divide(&self, p: &Poly) -> (Vec<Poly>, Poly) {
        divide(p, &self.generators, &self.leading, &self.order, true)
    }

    /// Cofactors `c_i` with `p = Σ c_i·input_i`, for `p` in the ideal.
    pub fn lift(&self, p: &Poly) -> Result<Vec<Poly>, IdealError> {
        let cof = self.cofactors.as_ref().ok_or(IdealError::CofactorsNotTracked)?;
        let (quotients, rem) = self.divide(p);
        if !rem.is_zero() {
            return Err(IdealError::NotInIdeal);
        }
        let mut out = vec![Poly::zero(); self.input_len];
        for (q, c) in quotients.iter().zip(cof) {
            if q.is_zero() {
                continue;
            }
            for (o, ci) in out.iter_mut().zip(c) {
                *o += &(q * ci);
            }
        }
        Ok(out)
    }
}

fn leading(p: &Poly, order: &MonomialOrder) -> Option<(Monomial, Rational)> {
    p.leading_term(&order.weights).map(|(m, c)| (m, c.clone()))
}

/// Full multivariate division. Divisors are tried in list order.
fn divide(
    p: &Poly,
    divisors: &[Poly],
    lms: &[Monomial],
    order: &MonomialOrder,
    want_quotients: bool,
) -> (Vec<Poly>, Poly) {
    let mut work = p.clone();
    let mut rem = Poly::zero();
    let mut quotients = if want_quotients {
        vec![Poly::zero(); divisors.len()]
    } else {
        Vec::new()
    };
    while let Some((m, c)) = leading(&work, order) {
        match lms.iter().position(|lm| lm.divides(m)) {
            Some(k) => {
                let q = lms[k].quotient_of(m).expect("divisible");
                // divisors are monic
                work.sub_scaled(&c, q, &divisors[k]);
                if want_quotients {
                    quotients[k].add_term(q, c);
                }
            }
            None => {
                work.remove_term(m);
                rem.add_term(m, c);
            }
        }
    }
    (quotients, rem)
}

fn reduce_element(e: Element, basis: &[Element], order: &MonomialOrder) -> Option<Element> {
    let polys: Vec<Poly> = basis.iter().map(|b| b.poly.clone()).collect();
    let lms: Vec<Monomial> = basis.iter().map(|b| b.lm).collect();
    let track = e.cof.is_some();
    let (quotients, rem) = divide(&e.poly, &polys, &lms, order, track);
    let (lm, lc) = leading(&rem, order)?;
    let inv = lc.recip();
    let cof = e.cof.map(|mut cof| {
        for (q, b) in quotients.iter().zip(basis) {
            if q.is_zero() {
                continue;
            }
            for (c, bc) in cof.iter_mut().zip(b.cof.as_ref().expect("tracked")) {
                *c -= &(q * bc);
            }
        }
        cof.iter().map(|c| c.scale(&inv)).collect()
    });
    Some(Element {
        poly: rem.scale(&inv),
        lm,
        cof,
    })
}

fn buchberger(gens: &[Poly], order: &MonomialOrder, track: bool) -> Result<GroebnerBasis, IdealError> {
    let n = gens.len();
    let mut basis: Vec<Element> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let Some((lm, lc)) = leading(g, order) else { continue };
        let inv = lc.recip();
        let cof = track.then(|| {
            (0..n)
                .map(|j| {
                    if j == i {
                        Poly::constant(inv.clone())
                    } else {
                        Poly::zero()
                    }
                })
                .collect()
        });
        basis.push(Element {
            poly: g.scale(&inv),
            lm,
            cof,
        });
    }
    if basis.is_empty() {
        return Err(IdealError::AllZero);
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first, ties by insertion position
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (ia, ja) = pairs[a];
                let (ib, jb) = pairs[b];
                let la = basis[ia].lm.lcm(basis[ja].lm);
                let lb = basis[ib].lm.lcm(basis[jb].lm);
                order.cmp(la, lb).then((ja, ia).cmp(&(jb, ib)))
            })
            .expect("nonempty");
        let (i, j) = pairs.remove(best);
        let (a, b) = (&basis[i], &basis[j]);
        if a.lm.is_coprime(b.lm) {
            continue;
        }
        let l = a.lm.lcm(b.lm);
        let ma = a.lm.quotient_of(l).expect("lcm");
        let mb = b.lm.quotient_of(l).expect("lcm");
        let one = Rational::one();
        let mut s = a.poly.mul_term(&one, ma);
        s.sub_scaled(&one, mb, &b.poly);
        let cof = match (&a.cof, &b.cof) {
            (Some(ca), Some(cb)) => Some(
                ca.iter()
                    .zip(cb)
                    .map(|(x, y)| {
                        let mut c = x.mul_term(&one, ma);
                        c.sub_scaled(&one, mb, y);
                        c
                    })
                    .collect(),
            ),
            _ => None,
        };
        if let Some(e) = reduce_element(Element { poly: s, lm: l, cof }, &basis, order) {
            let k = basis.len();
            basis.push(e);
            for i in 0..k {
                pairs.push((i, k));
            }
        }
    }

    // minimise: drop elements whose leading monomial is divisible by another's
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len())
                .any(|j| j != i && basis[j].lm.divides(basis[i].lm) && (basis[j].lm != basis[i].lm || j < i))
        })
        .collect();
    let minimal: Vec<Element> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();

    // inter-reduce tails against the other minimal elements
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Element> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, e)| e.clone())
            .collect();
        reduced.push(reduce_tail(minimal[i].clone(), &others, order));
    }
    reduced.sort_by(|a, b| order.cmp(a.lm, b.lm));

    Ok(GroebnerBasis {
        order: order.clone(),
        leading: reduced.iter().map(|e| e.lm).collect(),
        generators: reduced.iter().map(|e| e.poly.clone()).collect(),
        cofactors: track.then(|| reduced.into_iter().map(|e| e.cof.expect("tracked")).collect()),
        input_len: n,
    })
}

/// Reduces every non-leading term of a monic element.
fn reduce_tail(e: Element, others: &[Element], order: &MonomialOrder) -> Element {
    let lc = e.poly.coeff(e.lm);
    debug_assert!(lc.is_one());
    let mut head = Poly::zero();
    head.add_term(e.lm, lc);
    let tail = &e.poly - &head;
    let polys: Vec<Poly> = others.iter().map(|b| b.poly.clone()).collect();
    let lms: Vec<Monomial> = others.iter().map(|b| b.lm).collect();
    let (quotients, rem) = divide(&tail, &polys, &lms, order, e.cof.is_some());
    let cof = e.cof.map(|mut cof| {
        for (q, b) in quotients.iter().zip(others) {
            if q.is_zero() {
                continue;
            }
            for (c, bc) in cof.iter_mut().zip(b.cof.as_ref().expect("tracked")) {
                *c -= &(q * bc);
            }
        }
        cof
    });
    Element {
        poly: &head + &rem,
        lm: e.lm,
        cof,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial as p;

    fn std_order() -> MonomialOrder {
        MonomialOrder::new(WeightSystem::standard())
    }

    fn gens(list: &[&str]) -> Vec<Poly> {
        list.iter().map(|s| p(s).unwrap()).collect()
    }

    #[test]
    fn small_examples() {
        let gb = GroebnerBasis::new(&gens(&["x^2 + y^2", "2*y"]), &std_order()).unwrap();
        assert_eq!(gb.generators(), &gens(&["y", "x^2"])[..]);

        let gb = GroebnerBasis::new(&gens(&["x"]), &std_order()).unwrap();
        assert_eq!(gb.generators(), &gens(&["x"])[..]);

        let gb = GroebnerBasis::new(&gens(&["x*y", "x - y"]), &std_order()).unwrap();
        assert_eq!(gb.generators(), &gens(&["x - y", "y^2"])[..]);
    }

    #[test]
    fn all_zero_is_rejected() {
        assert!(matches!(
            GroebnerBasis::new(&[Poly::zero()], &std_order()),
            Err(IdealError::AllZero)
        ));
        assert!(matches!(
            GroebnerBasis::new(&[], &std_order()),
            Err(IdealError::AllZero)
        ));
    }

    #[test]
    fn normal_forms() {
        let gb = GroebnerBasis::new(&gens(&["y", "x^2"]), &std_order()).unwrap();
        assert!(gb.normal_form(&p("x^2").unwrap()).is_zero());
        let gb = GroebnerBasis::new(&gens(&["x - y", "y^2"]), &std_order()).unwrap();
        assert_eq!(gb.normal_form(&p("x + y").unwrap()), p("2*y").unwrap());
        assert!(gb.normal_form(&Poly::zero()).is_zero());
    }

    #[test]
    fn lift_reconstructs_membership() {
        let input = gens(&["x^3 + y^2", "2*y"]);
        let gb = GroebnerBasis::with_cofactors(&input, &std_order()).unwrap();
        let target = p("x^5 + x^2*y^2 - 3*x*y").unwrap();
        let (_, rem) = gb.divide(&target);
        let member = &target - &rem;
        let cof = gb.lift(&member).unwrap();
        let rebuilt = cof.iter().zip(&input).fold(Poly::zero(), |acc, (c, g)| &acc + &(c * g));
        assert_eq!(rebuilt, member);
        assert!(matches!(gb.lift(&p("x").unwrap()), Err(IdealError::NotInIdeal)));
    }
}
