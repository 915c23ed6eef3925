use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Signed};

use super::{minus_f_operator, GaussManinError};
use crate::check::Check;
use crate::curve::CurveFunctionPair;
use crate::ideal::{EchelonSpan, QMatrix};
use crate::poly::Poly;
use crate::rational::{format_rational, Rational};

/// One element `ω_i^j = (−f)^j ω_i^0` of a Jordan chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainVector {
    /// Coordinates of the class in the staircase basis of `O/(g, J)`.
    pub coords: Vec<Rational>,
    /// The polynomial `(−f)^j · h_i^0` itself, not reduced.
    pub representative: Poly,
    pub degree: Rational,
    pub nu: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanChain {
    pub vectors: Vec<ChainVector>,
}

impl JordanChain {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn head(&self) -> &ChainVector {
        &self.vectors[0]
    }

    pub fn tail(&self) -> &ChainVector {
        self.vectors.last().expect("chains are nonempty")
    }
}

/// Homogeneous Jordan chains of multiplication by `−f` on `O/(g, J)`.
///
/// Flattened in chain order, the vectors form the basis in which the
/// connection matrices and the Frobenius data are written; the label of a
/// vector is `(chain index, step index)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanChainSet {
    chains: Vec<JordanChain>,
}

impl JordanChainSet {
    pub fn from_chains(chains: Vec<JordanChain>) -> Self {
        JordanChainSet { chains }
    }

    pub fn chains(&self) -> &[JordanChain] {
        &self.chains
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Total number of vectors.
    pub fn dim(&self) -> usize {
        self.chains.iter().map(JordanChain::len).sum()
    }

    pub fn labels(&self) -> Vec<(usize, usize)> {
        self.chains
            .iter()
            .enumerate()
            .flat_map(|(i, c)| (0..c.len()).map(move |j| (i, j)))
            .collect()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &ChainVector> + '_ {
        self.chains.iter().flat_map(|c| c.vectors.iter())
    }

    pub fn representatives(&self) -> Vec<Poly> {
        self.vectors().map(|v| v.representative.clone()).collect()
    }

    pub fn nus(&self) -> Vec<Rational> {
        self.vectors().map(|v| v.nu.clone()).collect()
    }

    /// Columns are the chain vectors in staircase coordinates.
    pub fn basis_matrix(&self) -> QMatrix {
        let cols: Vec<Vec<Rational>> = self.vectors().map(|v| v.coords.clone()).collect();
        let n = cols.first().map_or(0, Vec::len);
        QMatrix::from_columns(n, &cols)
    }

    pub fn max_len(&self) -> usize {
        self.chains.iter().map(JordanChain::len).max().unwrap_or(0)
    }
}

fn restrict_columns(m: &QMatrix, cols: &[usize]) -> QMatrix {
    let columns: Vec<Vec<Rational>> = cols.iter().map(|&c| m.column(c)).collect();
    QMatrix::from_columns(m.rows(), &columns)
}

fn embed(v: &[Rational], cols: &[usize], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::default(); n];
    for (x, &c) in v.iter().zip(cols) {
        out[c] = x.clone();
    }
    out
}

/// Kernel of `m` restricted to the coordinates `cols`, embedded back into
/// the full space.
fn graded_kernel(m: &QMatrix, cols: &[usize]) -> Vec<Vec<Rational>> {
    if cols.is_empty() {
        return Vec::new();
    }
    restrict_columns(m, cols)
        .null_space()
        .iter()
        .map(|v| embed(v, cols, m.cols()))
        .collect()
}

fn cmp_coords(a: &[Rational], b: &[Rational]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Computes a homogeneous Jordan basis of `−f` degree by degree.
///
/// Heads of length-`m` chains in degree `d` complete
/// `ker N^{m−1} + N(ker N^{m+1})` inside `ker N^m`, all restricted to degree
/// `d`; candidates come from the reduced kernel basis, so pivoting follows the
/// staircase order.
pub fn homogeneous_jordan_chains(pair: &CurveFunctionPair) -> Result<JordanChainSet, GaussManinError> {
    let ring = pair.milnor_ring();
    let mu = ring.dim();
    let n = minus_f_operator(pair);
    let w = pair.weights();

    let mut by_degree: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, m) in ring.staircase().iter().enumerate() {
        by_degree.entry(w.int_degree(*m)).or_default().push(i);
    }
    let f_shift = pair
        .f()
        .monomials()
        .next()
        .map(|m| w.int_degree(m))
        .expect("f is nonzero");

    let mut powers = vec![QMatrix::identity(mu)];
    while !powers.last().expect("nonempty").is_zero() {
        let next = &n * powers.last().expect("nonempty");
        powers.push(next);
    }
    let top = powers.len() - 1; // N^top = 0
    powers.push(QMatrix::zeros(mu, mu));

    let mut heads: Vec<(usize, Vec<Rational>)> = Vec::new();
    for m in (1..=top).rev() {
        for (d, cols) in &by_degree {
            let mut covered = EchelonSpan::new();
            for v in graded_kernel(&powers[m - 1], cols) {
                covered.insert(&v);
            }
            if let Some(below) = d.checked_sub(f_shift).and_then(|dd| by_degree.get(&dd)) {
                for v in graded_kernel(&powers[m + 1], below) {
                    covered.insert(&n.mul_vec(&v));
                }
            }
            for cand in graded_kernel(&powers[m], cols) {
                if covered.insert(&cand) {
                    heads.push((m, cand));
                }
            }
        }
    }

    let minus_f = -pair.f();
    let mut chains: Vec<JordanChain> = heads
        .into_iter()
        .map(|(len, head)| {
            let head_poly = ring.poly_from_coords(&head);
            let head_degree = head_poly
                .weighted_degree(w)
                .ok()
                .and_then(|g| g.degree().cloned())
                .expect("graded kernel vectors are homogeneous and nonzero");
            let mut vectors = Vec::with_capacity(len);
            let mut coords = head;
            let mut rep = head_poly;
            for j in 0..len {
                let degree = &head_degree + Rational::from_integer(j.into());
                let nu = pair.nu_of_degree(&degree);
                let next_coords = n.mul_vec(&coords);
                let next_rep = &minus_f * &rep;
                vectors.push(ChainVector {
                    coords,
                    representative: rep,
                    degree,
                    nu,
                });
                coords = next_coords;
                rep = next_rep;
            }
            JordanChain { vectors }
        })
        .collect();

    chains.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.head().nu.cmp(&b.head().nu))
            .then_with(|| cmp_coords(&a.head().coords, &b.head().coords))
    });

    let set = JordanChainSet { chains };
    if set.dim() != mu || set.basis_matrix().rank() != mu {
        return Err(GaussManinError::NotABasis);
    }
    Ok(set)
}

/// Heads have `ν ≤ 1`; tails lying in `(g_x, g_y) + (g)` have `ν > 0`.
pub fn chain_grading_check(pair: &CurveFunctionPair, chains: &JordanChainSet) -> Check {
    let ring = pair.milnor_ring();
    let one = Rational::one();
    let (gx, gy) = (pair.gx(), pair.gy());
    let mut jg = EchelonSpan::new();
    for m in ring.staircase() {
        jg.insert(&ring.coords(&gx.mul_term(&one, *m)));
        jg.insert(&ring.coords(&gy.mul_term(&one, *m)));
    }
    let mut failures = Vec::new();
    let mut tails_in_jg = 0;
    for (i, c) in chains.chains().iter().enumerate() {
        if c.head().nu > one {
            failures.push(format!("chain {i}: head nu = {}", format_rational(&c.head().nu)));
        }
        if jg.contains(&c.tail().coords) {
            tails_in_jg += 1;
            if !c.tail().nu.is_positive() {
                failures.push(format!("chain {i}: tail nu = {}", format_rational(&c.tail().nu)));
            }
        }
    }
    let details = if failures.is_empty() {
        format!(
            "{} chains, all head nu <= 1; {tails_in_jg} tails in (g_x, g_y) + (g), all with nu > 0",
            chains.len()
        )
    } else {
        failures.join("; ")
    };
    Check::new("chain_head_nu", failures.is_empty(), details)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussmanin::test_pairs::*;
    use crate::poly::parse_polynomial as p;
    use crate::rational::{rat, ratio};

    #[test]
    fn a3_single_chain() {
        let chains = homogeneous_jordan_chains(&ak(3)).unwrap();
        assert_eq!(chains.len(), 1);
        let reps = chains.representatives();
        assert_eq!(reps, vec![p("1").unwrap(), p("-x").unwrap(), p("x^2").unwrap()]);
        assert_eq!(chains.nus(), vec![ratio(-1, 2), ratio(1, 2), ratio(3, 2)]);
    }

    #[test]
    fn node_chain() {
        let chains = homogeneous_jordan_chains(&node()).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains.chains()[0].vectors[1].coords, vec![rat(0), rat(-2)]);
        assert_eq!(chains.nus(), vec![rat(0), rat(1)]);
    }

    #[test]
    fn mirror_family_chains() {
        for (a, b) in [(2i64, 3i64), (3, 4), (1, 2), (2, 2)] {
            let pair = mirror(a, b);
            let chains = homogeneous_jordan_chains(&pair).unwrap();
            assert_eq!(chains.len(), (a + b - 1) as usize);
            assert_eq!(chains.chains()[0].len(), 2);
            assert_eq!(chains.chains()[0].head().representative, Poly::one());
            assert!(chains.chains()[1..].iter().all(|c| c.len() == 1));
            let mut singles: Vec<Rational> = chains.chains()[1..].iter().map(|c| c.head().nu.clone()).collect();
            singles.sort();
            let mut expected: Vec<Rational> = (1..a).map(|i| ratio(i, a)).chain((1..b).map(|j| ratio(j, b))).collect();
            expected.sort();
            assert_eq!(singles, expected);
        }
    }

    #[test]
    fn chain_steps_raise_nu_by_one() {
        for pair in [ak(6), node(), mirror(3, 4), general(4, 2)] {
            let chains = homogeneous_jordan_chains(&pair).unwrap();
            for c in chains.chains() {
                for w in c.vectors.windows(2) {
                    assert_eq!(&w[1].nu - &w[0].nu, rat(1));
                }
                for v in &c.vectors {
                    assert!(v.representative.is_homogeneous(pair.weights()));
                }
            }
        }
    }

    #[test]
    fn chain_grading_passes_and_negative_control_fails() {
        for pair in [ak(2), ak(7), node(), mirror(2, 3)] {
            let chains = homogeneous_jordan_chains(&pair).unwrap();
            assert!(chain_grading_check(&pair, &chains).pass);
        }
        let pair = ak(3);
        let mut bad = homogeneous_jordan_chains(&pair).unwrap().chains().to_vec();
        bad[0].vectors[0].nu = rat(2);
        let check = chain_grading_check(&pair, &JordanChainSet::from_chains(bad));
        assert!(!check.pass);
    }
}
