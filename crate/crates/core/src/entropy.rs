//! Shannon, Rényi and von Neumann entropies of graphs, in bits.
//!
//! The von Neumann entropy of a graph is the Shannon entropy of the spectrum
//! of its trace-normalized Laplacian `rho(G) = L(G) / d_G`. Rényi 2-entropy
//! has an exact degree-sequence form, `H2(G) = -log2 tr2(G)` with
//! `tr2(G) = (sum d_i^2 + d_G) / d_G^2`; everything that counts or ranks
//! graphs by `H2` goes through [`tr2`] so no eigensolver noise is involved.

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::{DegreeSequence, Graph};
use crate::spectral::{density_spectrum, SpectralError, Spectrum, DEFAULT_TOL};

/// Tolerance for the sum of a probability vector.
pub const NORMALIZATION_TOL: f64 = 1e-9;
/// Tolerance for comparing entropies of different graphs.
pub const COMPARE_EPS: f64 = 1e-9;
/// Slack in the logarithmic comparison of the star test.
pub const STAR_TEST_EPS: f64 = 1e-12;

/// Exact rational with unsigned 64-bit parts.
pub type Rational = Ratio<u64>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EntropyError {
    #[error("probability {value} at index {index} is negative or not finite")]
    BadProbability { index: usize, value: f64 },
    #[error("probabilities sum to {0}, not 1")]
    NotNormalized(f64),
    #[error("Renyi order must be a finite real >= 0, got {0}")]
    BadAlpha(f64),
    #[error("graph has no edges")]
    Edgeless,
    #[error("order {0} is too small for this formula")]
    OrderTooSmall(usize),
    #[error("sequences differ in length or sum")]
    Incomparable,
    #[error("first sequence does not majorize the second")]
    NotMajorized,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// A discrete probability distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution(Vec<f64>);

impl ProbabilityDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self, EntropyError> {
        for (index, &value) in probs.iter().enumerate() {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(EntropyError::BadProbability { index, value });
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(EntropyError::NotNormalized(sum));
        }
        Ok(ProbabilityDistribution(probs))
    }

    pub fn uniform(n: usize) -> Self {
        ProbabilityDistribution(vec![1.0 / n as f64; n])
    }

    pub fn probs(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<&Spectrum> for ProbabilityDistribution {
    type Error = EntropyError;
    fn try_from(s: &Spectrum) -> Result<Self, EntropyError> {
        ProbabilityDistribution::new(s.values().to_vec())
    }
}

fn plogp_terms(p: &[f64]) -> impl Iterator<Item = f64> + '_ {
    p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2())
}

/// `-sum p_i log2 p_i` with `0 log 0 = 0`.
pub fn shannon_entropy(p: &ProbabilityDistribution) -> f64 {
    plogp_terms(&p.0).sum::<f64>().max(0.0)
}

/// Shannon entropy accumulated with Neumaier compensated summation.
pub fn shannon_entropy_compensated(p: &ProbabilityDistribution) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for t in plogp_terms(&p.0) {
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
    }
    (sum + comp).max(0.0)
}

/// Rényi entropy of order `alpha`; order 1 is the Shannon entropy.
/// Zero entries are outside the support and contribute nothing.
pub fn renyi_entropy(p: &ProbabilityDistribution, alpha: f64) -> Result<f64, EntropyError> {
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(EntropyError::BadAlpha(alpha));
    }
    if alpha == 1.0 {
        return Ok(shannon_entropy(p));
    }
    let power_sum: f64 = p.0.iter().filter(|&&x| x > 0.0).map(|&x| x.powf(alpha)).sum();
    Ok((power_sum.log2() / (1.0 - alpha)).max(0.0))
}

fn graph_distribution(g: &Graph) -> Result<ProbabilityDistribution, EntropyError> {
    if g.size() == 0 {
        return Err(EntropyError::Edgeless);
    }
    let spec = density_spectrum(g, DEFAULT_TOL)?;
    ProbabilityDistribution::try_from(&spec)
}

/// `S(G)`, the von Neumann entropy of the graph.
pub fn von_neumann_entropy(g: &Graph) -> Result<f64, EntropyError> {
    Ok(shannon_entropy(&graph_distribution(g)?))
}

/// `H_alpha(G)` computed from the spectrum of `rho(G)`.
pub fn renyi_graph_entropy(g: &Graph, alpha: f64) -> Result<f64, EntropyError> {
    renyi_entropy(&graph_distribution(g)?, alpha)
}

/// `S(K_{1,n-1}) = log2(2n-2) - n/(2n-2) log2 n`.
pub fn star_entropy_closed(n: usize) -> Result<f64, EntropyError> {
    if n < 2 {
        return Err(EntropyError::OrderTooSmall(n));
    }
    let nf = n as f64;
    Ok((2.0 * nf - 2.0).log2() - nf / (2.0 * nf - 2.0) * nf.log2())
}

/// `S(K_{a,b})` in closed form.
pub fn bipartite_entropy_closed(a: usize, b: usize) -> Result<f64, EntropyError> {
    if a < 1 || b < 1 {
        return Err(EntropyError::OrderTooSmall(a.min(b)));
    }
    let (a, b) = (a as f64, b as f64);
    Ok(1.0 + (b + 1.0) / (2.0 * b) * a.log2() + (a + 1.0) / (2.0 * a) * b.log2()
        - (a + b) / (2.0 * a * b) * (a + b).log2())
}

/// `tr(rho(G)^2) = (sum d_i^2 + d_G) / d_G^2`, reduced.
pub fn tr2(d: &DegreeSequence) -> Result<Rational, EntropyError> {
    let dg = d.sum();
    if dg == 0 {
        return Err(EntropyError::Edgeless);
    }
    Ok(Rational::new(d.sum_of_squares() + dg, dg * dg))
}

/// `H2(G) = log2(d_G^2 / (d_G + sum d_i^2))`.
pub fn h2_degree(d: &DegreeSequence) -> Result<f64, EntropyError> {
    let dg = d.sum();
    if dg == 0 {
        return Err(EntropyError::Edgeless);
    }
    let num = (dg * dg) as f64;
    let den = (dg + d.sum_of_squares()) as f64;
    Ok(num.log2() - den.log2())
}

/// Log-scale threshold of the star test: the star's entropy on `n` vertices.
pub fn star_threshold(n: usize) -> Result<f64, EntropyError> {
    star_entropy_closed(n)
}

/// Degree-sequence test certifying `S(G) >= H2(G) >= S(K_{1,n-1})`:
/// `d_G^2 / (sum d_i^2 + d_G) >= (2n-2) / n^(n/(2n-2))`.
pub fn star_test(d: &DegreeSequence, n: usize) -> Result<bool, EntropyError> {
    let threshold = star_threshold(n)?;
    Ok(h2_degree(d)? >= threshold - STAR_TEST_EPS)
}

/// Edge density `m / C(n,2)` is at least `1 / (sqrt(n) - 1)`.
pub fn density_test(n: usize, m: usize) -> Result<bool, EntropyError> {
    if n < 2 {
        return Err(EntropyError::OrderTooSmall(n));
    }
    let pairs = (n * (n - 1) / 2) as f64;
    Ok(m as f64 * ((n as f64).sqrt() - 1.0) >= pairs)
}

/// Entropy of a disjoint union from `(S_i, d_i)` pairs of its parts.
pub fn union_entropy(parts: &[(f64, u64)]) -> Result<f64, EntropyError> {
    if parts.is_empty() || parts.iter().any(|&(_, d)| d == 0) {
        return Err(EntropyError::Edgeless);
    }
    let total: u64 = parts.iter().map(|&(_, d)| d).sum();
    Ok(parts
        .iter()
        .map(|&(s, d)| {
            let c = d as f64 / total as f64;
            c * s - c * c.log2()
        })
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Majorization {
    StrictlyMajorizes,
    WeaklyMajorizes,
    No,
}

/// Whether `c` majorizes `b` after sorting both in non-increasing order.
pub fn majorizes(c: &[u64], b: &[u64]) -> Result<Majorization, EntropyError> {
    if c.len() != b.len() || c.iter().sum::<u64>() != b.iter().sum::<u64>() {
        return Err(EntropyError::Incomparable);
    }
    let mut c = c.to_vec();
    let mut b = b.to_vec();
    c.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    let (mut pc, mut pb) = (0u64, 0u64);
    let mut strict = false;
    for (x, y) in c.iter().zip(&b) {
        pc += x;
        pb += y;
        if pc < pb {
            return Ok(Majorization::No);
        }
        strict |= pc > pb;
    }
    Ok(if strict { Majorization::StrictlyMajorizes } else { Majorization::WeaklyMajorizes })
}

/// Checks `sum c_i^2 >= sum b_i^2` for a majorizing pair, strictly when the
/// majorization is strict.
pub fn sum_squares_monotone_check(c: &[u64], b: &[u64]) -> Result<bool, EntropyError> {
    let sq = |s: &[u64]| s.iter().map(|x| x * x).sum::<u64>();
    match majorizes(c, b)? {
        Majorization::No => Err(EntropyError::NotMajorized),
        Majorization::StrictlyMajorizes => Ok(sq(c) > sq(b)),
        Majorization::WeaklyMajorizes => Ok(sq(c) == sq(b)),
    }
}

/// Closed forms for `S(K_{2,n-2})` and `S(K_{2,n-2} + e)` where `e` joins the
/// two vertices of degree `n-2`.
pub fn k2n2_closed(n: usize) -> Result<(f64, f64), EntropyError> {
    if n < 4 {
        return Err(EntropyError::OrderTooSmall(n));
    }
    let n = n as f64;
    let before = 0.5
        + n / (4.0 * n - 8.0) * ((4.0 * n - 8.0) / n).log2()
        + (n - 3.0) / (2.0 * n - 4.0) * (2.0 * n - 4.0).log2();
    let after = n / (2.0 * n - 3.0) * ((4.0 * n - 6.0) / n).log2()
        + (n - 3.0) / (2.0 * n - 3.0) * (2.0 * n - 3.0).log2();
    Ok((before, after))
}

/// Visits k-subsets of `0..len` in lexicographic order until `f` returns true.
fn find_combination(len: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if k > len {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return Some(idx);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < len - k + i {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Smallest set of at most `k` non-edges whose addition lifts `S` to at least `x`.
///
/// Subsets are tried by increasing size, then in lexicographic order of
/// [`Graph::complement_edges`]. An edgeless graph counts as entropy 0.
pub fn entropy_augmentation(g: &Graph, k: usize, x: f64) -> Result<Option<Vec<(usize, usize)>>, EntropyError> {
    let candidates = g.complement_edges();
    let entropy = |h: &Graph| -> Result<f64, EntropyError> {
        if h.size() == 0 {
            Ok(0.0)
        } else {
            von_neumann_entropy(h)
        }
    };
    for size in 0..=k.min(candidates.len()) {
        let mut failure = None;
        let found = find_combination(candidates.len(), size, |idx| {
            let extra: Vec<_> = idx.iter().map(|&i| candidates[i]).collect();
            let h = g.add_edges(&extra).expect("complement edges are absent");
            match entropy(&h) {
                Ok(s) => s >= x - STAR_TEST_EPS,
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if let Some(idx) = found {
            return Ok(Some(idx.into_iter().map(|i| candidates[i]).collect()));
        }
    }
    Ok(None)
}

/// Per-graph summary of entropies and test verdicts. Entropy fields are
/// `None` for edgeless graphs.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    pub graph6: String,
    pub von_neumann: Option<f64>,
    pub renyi: Vec<(f64, Option<f64>)>,
    pub tr2: Option<Rational>,
    pub star_test: Option<bool>,
    pub density_test: Option<bool>,
}

pub fn entropy_report(g: &Graph, alphas: &[f64]) -> Result<EntropyReport, EntropyError> {
    let graph6 = crate::graph6::write_graph6(g);
    let n = g.order();
    let density = if n >= 2 { Some(density_test(n, g.size())?) } else { None };
    if g.size() == 0 {
        for &a in alphas {
            if !(a >= 0.0 && a.is_finite()) {
                return Err(EntropyError::BadAlpha(a));
            }
        }
        return Ok(EntropyReport {
            graph6,
            von_neumann: None,
            renyi: alphas.iter().map(|&a| (a, None)).collect(),
            tr2: None,
            star_test: None,
            density_test: density,
        });
    }
    let p = graph_distribution(g)?;
    let degrees = g.degree_sequence();
    let renyi = alphas
        .iter()
        .map(|&a| renyi_entropy(&p, a).map(|h| (a, Some(h))))
        .collect::<Result<_, _>>()?;
    Ok(EntropyReport {
        graph6,
        von_neumann: Some(shannon_entropy(&p)),
        renyi,
        tr2: Some(tr2(&degrees)?),
        star_test: Some(star_test(&degrees, n)?),
        density_test: density,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, disjoint_union, empty, path, star};

    fn dist(p: &[f64]) -> ProbabilityDistribution {
        ProbabilityDistribution::new(p.to_vec()).unwrap()
    }

    #[test]
    fn shannon_basics() {
        assert_eq!(shannon_entropy(&dist(&[1.0, 0.0, 0.0])), 0.0);
        for n in 1..20 {
            let h = shannon_entropy(&ProbabilityDistribution::uniform(n));
            assert!((h - (n as f64).log2()).abs() < 1e-12);
        }
        let s = shannon_entropy(&dist(&[4.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 0.0]));
        assert!((s - 1.25163).abs() < 5e-6, "{s}");
    }

    #[test]
    fn distribution_validation() {
        assert!(matches!(
            ProbabilityDistribution::new(vec![0.5, -0.1, 0.6]),
            Err(EntropyError::BadProbability { index: 1, .. })
        ));
        assert!(matches!(
            ProbabilityDistribution::new(vec![0.5, 0.6]),
            Err(EntropyError::NotNormalized(_))
        ));
        assert!(ProbabilityDistribution::new(vec![0.5, 0.5 + 5e-10]).is_ok());
    }

    #[test]
    fn renyi_basics() {
        let half = dist(&[0.5, 0.5]);
        assert!((renyi_entropy(&half, 2.0).unwrap() - 1.0).abs() < 1e-15);
        let p = dist(&[0.5, 0.25, 0.125, 0.125]);
        assert_eq!(renyi_entropy(&p, 1.0).unwrap(), shannon_entropy(&p));
        assert_eq!(renyi_entropy(&p, 0.0).unwrap(), 2.0);
        assert_eq!(renyi_entropy(&p, -0.5), Err(EntropyError::BadAlpha(-0.5)));
        assert!(renyi_entropy(&p, f64::INFINITY).is_err());
        for n in 3..12 {
            let h = renyi_graph_entropy(&complete(n).unwrap(), 2.0).unwrap();
            assert!((h - ((n - 1) as f64).log2()).abs() < 1e-10);
        }
    }

    #[test]
    fn von_neumann_known_values() {
        for n in 2..15 {
            let s = von_neumann_entropy(&complete(n).unwrap()).unwrap();
            assert!((s - ((n - 1) as f64).log2()).abs() < 1e-10);
            let g = disjoint_union(&[complete(2).unwrap(), empty(n).unwrap()]).unwrap();
            assert_eq!(von_neumann_entropy(&g).unwrap(), 0.0);
        }
        let p4 = von_neumann_entropy(&path(4).unwrap()).unwrap();
        assert!((p4 - 1.31888).abs() < 5e-6, "{p4}");
        assert_eq!(von_neumann_entropy(&empty(3).unwrap()), Err(EntropyError::Edgeless));
    }

    #[test]
    fn closed_forms() {
        assert!((star_entropy_closed(4).unwrap() - 1.25163).abs() < 5e-6);
        assert!(star_entropy_closed(2).unwrap().abs() < 1e-15);
        assert!(star_entropy_closed(1).is_err());
        for n in 2..30 {
            let a = bipartite_entropy_closed(1, n - 1).unwrap();
            assert!((a - star_entropy_closed(n).unwrap()).abs() < 1e-12);
        }
        // direct evaluation of the K_{2,6} spectrum {1/3, 1/4, (1/12)^5, 0}
        let direct = shannon_entropy(&dist(&[
            1.0 / 3.0,
            0.25,
            1.0 / 12.0,
            1.0 / 12.0,
            1.0 / 12.0,
            1.0 / 12.0,
            1.0 / 12.0,
            0.0,
        ]));
        let closed = bipartite_entropy_closed(2, 6).unwrap();
        assert!((closed - direct).abs() < 1e-12);
        assert!((closed - 2.52205).abs() < 1e-5, "{closed}");
    }

    #[test]
    fn degree_formulas() {
        let p3 = path(3).unwrap().degree_sequence();
        assert!((h2_degree(&p3).unwrap() - (16.0f64 / 10.0).log2()).abs() < 1e-15);
        assert!((h2_degree(&p3).unwrap() - 0.678072).abs() < 1e-6);
        let k3 = complete(3).unwrap().degree_sequence();
        assert_eq!(h2_degree(&k3).unwrap(), 1.0);
        assert_eq!(tr2(&k3).unwrap(), Rational::new(1, 2));
        for n in 2..40u64 {
            let s = star(n as usize).unwrap().degree_sequence();
            assert_eq!(tr2(&s).unwrap(), Rational::new(1, 4) + Rational::new(3, 4 * (n - 1)));
        }
        let none = empty(4).unwrap().degree_sequence();
        assert_eq!(tr2(&none), Err(EntropyError::Edgeless));
        assert_eq!(h2_degree(&none), Err(EntropyError::Edgeless));
    }

    #[test]
    fn star_and_density_tests() {
        let p3 = path(3).unwrap();
        assert!(!star_test(&p3.degree_sequence(), 3).unwrap());
        assert!(star_test(&complete(3).unwrap().degree_sequence(), 3).unwrap());
        assert!(star_test(&complete(2).unwrap().degree_sequence(), 2).unwrap());
        for n in 6..60 {
            assert!(star_test(&path(n).unwrap().degree_sequence(), n).unwrap(), "P_{n}");
        }
        for n in 4..60 {
            assert!(density_test(n, n * (n - 1) / 2).unwrap());
        }
        assert!(!density_test(3, 3).unwrap());
        for n in [50, 100, 64] {
            assert!(!density_test(n, n - 1).unwrap());
        }
        assert!(density_test(1, 0).is_err());
    }

    #[test]
    fn union_formula() {
        let two = union_entropy(&[(1.3, 6), (1.3, 6)]).unwrap();
        assert!((two - 2.3).abs() < 1e-15);
        assert_eq!(union_entropy(&[(0.7, 4)]).unwrap(), 0.7);
        assert_eq!(union_entropy(&[(0.7, 4), (1.0, 0)]), Err(EntropyError::Edgeless));

        let parts = [path(3).unwrap(), complete(4).unwrap(), star(5).unwrap()];
        let u = disjoint_union(&parts).unwrap();
        let pieces: Vec<_> = parts
            .iter()
            .map(|g| (von_neumann_entropy(g).unwrap(), g.degree_sum()))
            .collect();
        let s = von_neumann_entropy(&u).unwrap();
        assert!((union_entropy(&pieces).unwrap() - s).abs() < 1e-9);
    }

    #[test]
    fn majorization() {
        use Majorization::*;
        assert_eq!(majorizes(&[3, 1, 1, 1], &[2, 2, 1, 1]).unwrap(), StrictlyMajorizes);
        assert_eq!(majorizes(&[2, 2, 1, 1], &[3, 1, 1, 1]).unwrap(), No);
        assert_eq!(majorizes(&[1, 2, 1], &[2, 1, 1]).unwrap(), WeaklyMajorizes);
        assert_eq!(majorizes(&[3, 1], &[2, 1]), Err(EntropyError::Incomparable));
        assert_eq!(majorizes(&[3, 1], &[2, 1, 1]), Err(EntropyError::Incomparable));
        // incomparable pair: neither majorizes the other
        assert_eq!(majorizes(&[3, 3, 0, 0], &[4, 1, 1, 0]).unwrap(), No);
        assert_eq!(majorizes(&[4, 1, 1, 0], &[3, 3, 0, 0]).unwrap(), No);

        assert!(sum_squares_monotone_check(&[3, 1, 1, 1], &[2, 2, 1, 1]).unwrap());
        assert!(sum_squares_monotone_check(&[2, 2, 1], &[1, 2, 2]).unwrap());
        assert_eq!(
            sum_squares_monotone_check(&[2, 2, 1, 1], &[3, 1, 1, 1]),
            Err(EntropyError::NotMajorized)
        );
    }

    #[test]
    fn k2n2_closed_forms() {
        assert!(k2n2_closed(3).is_err());
        for n in 4..=40 {
            let (before, after) = k2n2_closed(n).unwrap();
            let g = complete_bipartite(2, n - 2).unwrap();
            let h = g.add_edge(0, 1).unwrap();
            assert!((before - von_neumann_entropy(&g).unwrap()).abs() < 1e-10);
            assert!((after - von_neumann_entropy(&h).unwrap()).abs() < 1e-10);
            if n >= 5 {
                assert!(before > after, "n = {n}");
            }
        }
        let (b4, a4) = k2n2_closed(4).unwrap();
        assert!(a4 > b4);
        let gap = |n: usize| {
            let (b, a) = k2n2_closed(n).unwrap();
            let dg = 4.0 * (n as f64 - 2.0);
            ((a / b) / (dg / (dg + 2.0)) - 1.0).abs()
        };
        assert!(gap(10) > gap(100) && gap(100) > gap(1000) && gap(1000) < 1e-3);
    }

    #[test]
    fn augmentation() {
        let k4 = complete(4).unwrap();
        let kept: Vec<_> = k4.edges().into_iter().filter(|&e| e != (2, 3)).collect();
        let k4_minus = crate::graph::Graph::from_edges(4, &kept).unwrap();
        assert_eq!(entropy_augmentation(&k4_minus, 1, 3f64.log2()).unwrap(), Some(vec![(2, 3)]));

        // K2 plus two isolated vertices needs all five missing edges to reach K4
        let g = disjoint_union(&[complete(2).unwrap(), empty(2).unwrap()]).unwrap();
        let a = entropy_augmentation(&g, 5, 3f64.log2()).unwrap().unwrap();
        assert_eq!(g.add_edges(&a).unwrap(), k4);
        assert_eq!(entropy_augmentation(&g, 4, 3f64.log2()).unwrap(), None);

        assert_eq!(entropy_augmentation(&star(5).unwrap(), 0, 2.0).unwrap(), None);
        assert_eq!(entropy_augmentation(&star(5).unwrap(), 0, 1.5).unwrap(), Some(vec![]));
        assert_eq!(entropy_augmentation(&empty(3).unwrap(), 0, 0.0).unwrap(), Some(vec![]));
    }

    #[test]
    fn report_fields() {
        let r = entropy_report(&complete(2).unwrap(), &[2.0]).unwrap();
        assert_eq!(r.graph6, "A_");
        assert_eq!(r.von_neumann, Some(0.0));
        assert_eq!(r.tr2, Some(Rational::new(1, 1)));
        let r = entropy_report(&empty(3).unwrap(), &[2.0]).unwrap();
        assert_eq!(r.von_neumann, None);
        assert_eq!(r.renyi, vec![(2.0, None)]);
    }
}
