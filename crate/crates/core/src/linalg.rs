//! Small dense helpers over `DMatrix<Complex64>`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

/// Largest entry modulus of `m - m†`.
pub fn hermitian_deviation(m: &CMatrix) -> f64 {
    max_abs(&(m - m.adjoint()))
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn symmetrized(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()).scale(0.5)
}

/// Ascending eigenvalues and matching eigenvectors (as columns) of the
/// hermitian part of `m`.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = SymmetricEigen::new(symmetrized(m));
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMatrix::from_fn(m.nrows(), order.len(), |r, c| {
        eig.eigenvectors[(r, order[c])]
    });
    (values, vectors)
}

pub fn eigenvalues(m: &CMatrix) -> Vec<f64> {
    hermitian_eigen(m).0
}

pub fn min_eigenvalue(m: &CMatrix) -> f64 {
    eigenvalues(m).first().copied().unwrap_or(0.0)
}

fn is_diagonal(m: &CMatrix) -> bool {
    m.iter()
        .enumerate()
        .all(|(idx, z)| idx % (m.nrows() + 1) == 0 || *z == Complex64::default())
}

/// `m^power` for a positive definite hermitian `m`. Diagonal input is
/// handled entry-wise; anything else goes through an eigendecomposition.
pub fn positive_power(m: &CMatrix, power: f64) -> Result<CMatrix> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch(
            "power of a non-square matrix".into(),
        ));
    }
    if is_diagonal(m) {
        let mut out = CMatrix::zeros(m.nrows(), m.ncols());
        for i in 0..m.nrows() {
            let d = m[(i, i)];
            if d.im.abs() > 0.0 || d.re <= 0.0 {
                return Err(Error::NotPositiveDefinite(format!("diagonal entry {d}")));
            }
            out[(i, i)] = Complex64::new(d.re.powf(power), 0.0);
        }
        return Ok(out);
    }
    let (values, vectors) = hermitian_eigen(m);
    if values.iter().any(|&v| v <= 0.0) {
        return Err(Error::NotPositiveDefinite(format!(
            "eigenvalues {values:?}"
        )));
    }
    let d = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        values.len(),
        values.iter().map(|v| Complex64::new(v.powf(power), 0.0)),
    ));
    Ok(&vectors * d * vectors.adjoint())
}

pub fn trace(m: &CMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}
