//! Dense symmetric eigenvalues by cyclic Jacobi rotations, and the spectrum
//! of the trace-normalized Laplacian.

use thiserror::Error;

use crate::graph::Graph;
use crate::matrix::SquareMatrix;

/// Default residual tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Sweep budget for the Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix has dimension zero")]
    EmptyMatrix,
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {gap:e}")]
    Asymmetric { i: usize, j: usize, gap: f64 },
    #[error("Jacobi iteration did not converge in {MAX_SWEEPS} sweeps (off-diagonal norm {off:e})")]
    NoConvergence { off: f64 },
    #[error("graph has no edges, so its density matrix is undefined")]
    Edgeless,
    #[error("eigenvalue {value:e} is below -{tol:e}; matrix is not positive semidefinite")]
    NegativeEigenvalue { value: f64, tol: f64 },
}

/// Eigenvalues and column eigenvectors, in the order the rotations left them.
pub(crate) struct Eigen {
    pub values: Vec<f64>,
    #[cfg_attr(not(test), allow(dead_code))]
    pub vectors: SquareMatrix<f64>,
}

fn off_diagonal_norm(a: &SquareMatrix<f64>) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

pub(crate) fn jacobi_eigen(mat: &SquareMatrix<f64>, tol: f64) -> Result<Eigen, SpectralError> {
    let n = mat.dim();
    if n == 0 {
        return Err(SpectralError::EmptyMatrix);
    }
    let norm = mat.frobenius_norm();
    let sym_tol = tol * norm.max(1.0);
    for i in 0..n {
        for j in i + 1..n {
            let gap = (mat[(i, j)] - mat[(j, i)]).abs();
            if gap > sym_tol || gap.is_nan() {
                return Err(SpectralError::Asymmetric { i, j, gap });
            }
        }
    }

    let mut a = mat.clone();
    // symmetrize exactly so rotations can update both halves consistently
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = avg;
            a[(j, i)] = avg;
        }
    }
    let mut v = SquareMatrix::zeros(n);
    for i in 0..n {
        v[(i, i)] = 1.0;
    }

    let threshold = 1e-12 * norm;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence { off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if theta.is_infinite() {
                    0.5 / theta
                } else {
                    let t = 1.0 / (theta.abs() + (theta * theta + 1.0).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[(p, p)] -= t * apq;
                a[(q, q)] += t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for r in 0..n {
                    if r != p && r != q {
                        let arp = a[(r, p)];
                        let arq = a[(r, q)];
                        let np = c * arp - s * arq;
                        let nq = s * arp + c * arq;
                        a[(r, p)] = np;
                        a[(p, r)] = np;
                        a[(r, q)] = nq;
                        a[(q, r)] = nq;
                    }
                    let vrp = v[(r, p)];
                    let vrq = v[(r, q)];
                    v[(r, p)] = c * vrp - s * vrq;
                    v[(r, q)] = s * vrp + c * vrq;
                }
            }
        }
    }
    Ok(Eigen { values: (0..n).map(|i| a[(i, i)]).collect(), vectors: v })
}

/// All eigenvalues of a real symmetric matrix, sorted in descending order.
pub fn eigenvalues_symmetric(mat: &SquareMatrix<f64>, tol: f64) -> Result<Vec<f64>, SpectralError> {
    let mut values = jacobi_eigen(mat, tol)?.values;
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Eigenvalue multiset of a unit-trace positive semidefinite matrix,
/// sorted descending, with values within `tol` of zero snapped to `0.0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Wraps raw eigenvalues; fails if any is below `-tol`.
    pub fn from_eigenvalues(mut values: Vec<f64>, tol: f64) -> Result<Self, SpectralError> {
        for x in values.iter_mut() {
            if *x < -tol {
                return Err(SpectralError::NegativeEigenvalue { value: *x, tol });
            }
            if x.abs() <= tol {
                *x = 0.0;
            }
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(Spectrum { values, tol })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of entries equal to zero after clamping.
    pub fn zero_multiplicity(&self) -> usize {
        self.values.iter().filter(|&&x| x == 0.0).count()
    }

    /// Largest entrywise difference against another sorted spectrum of the same length.
    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        assert_eq!(self.len(), other.len(), "spectra of different lengths");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Descending eigenvalues of `L(G)` (not normalized).
pub fn laplacian_eigenvalues(g: &Graph, tol: f64) -> Result<Vec<f64>, SpectralError> {
    eigenvalues_symmetric(&g.laplacian().to_f64(), tol)
}

/// Spectrum of `rho(G) = L(G) / tr L(G)`.
pub fn density_spectrum(g: &Graph, tol: f64) -> Result<Spectrum, SpectralError> {
    let d = g.degree_sum();
    if d == 0 {
        return Err(SpectralError::Edgeless);
    }
    let d = d as f64;
    let values = laplacian_eigenvalues(g, tol)?.into_iter().map(|x| x / d).collect();
    Spectrum::from_eigenvalues(values, tol)
}
