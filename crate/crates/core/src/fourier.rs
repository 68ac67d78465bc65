//! Fourier transform of operators on corepresentation carrier spaces.
//!
//! For a corepresentation `U` with intertwiner `F`:
//!
//! ```text
//! forward:      ρ̂ = Σ_IJ ρ_IJ U_JI
//! inverse:      â_IJ = Σ_MR (F^{-1/2})_IM h(U*_RM a) (F^{1/2})_RJ
//! reconstruct:  ρ = (tr F) √F â √F
//! ```
//!
//! Composite indices follow the product corepresentation convention
//! `I = (ik) ↦ i·m + k`.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::corep::{Corep, ProductCorep, Representation};
use crate::error::{Error, Result};
use crate::haar::Haar;
use crate::hopf::{self, MultiElement};
use crate::linalg::{self, CMatrix};
use crate::qalgebra::Element;
use crate::traits::AlgebraElement;

/// A square matrix on `C^n ⊗ C^m` with declared factor dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOp {
    dims: (usize, usize),
    entries: CMatrix,
}

impl DensityOp {
    pub fn new(dims: (usize, usize), entries: CMatrix) -> Result<Self> {
        let d = dims.0 * dims.1;
        if d == 0 || entries.nrows() != d || entries.ncols() != d {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for factor dimensions {:?}",
                entries.nrows(),
                entries.ncols(),
                dims
            )));
        }
        Ok(DensityOp { dims, entries })
    }

    pub fn from_row_major(dims: (usize, usize), values: &[Complex64]) -> Result<Self> {
        let d = dims.0 * dims.1;
        if values.len() != d * d {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {d}x{d} matrix",
                values.len()
            )));
        }
        Self::new(dims, CMatrix::from_row_slice(d, d, values))
    }

    /// `|ψ⟩⟨ψ|` for a vector in the composite basis.
    pub fn projector(dims: (usize, usize), psi: &[Complex64]) -> Result<Self> {
        let v = DVector::from_column_slice(psi);
        Self::new(dims, &v * v.adjoint())
    }

    /// `|Ψ⁻⟩⟨Ψ⁻|` with `Ψ⁻ = (|01⟩ − |10⟩)/√2`.
    pub fn singlet() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let z = Complex64::default();
        Self::projector(
            (2, 2),
            &[z, Complex64::new(s, 0.0), Complex64::new(-s, 0.0), z],
        )
        .expect("2x2")
    }

    /// `(1 − p) I/4 + p |Ψ⁻⟩⟨Ψ⁻|`.
    pub fn werner(p: f64) -> Self {
        let mixed = Self::maximally_mixed((2, 2));
        let entries = mixed.entries.scale(1.0 - p) + Self::singlet().entries.scale(p);
        Self::new((2, 2), entries).expect("2x2")
    }

    pub fn maximally_mixed(dims: (usize, usize)) -> Self {
        let d = dims.0 * dims.1;
        Self::new(dims, CMatrix::identity(d, d).scale(1.0 / d as f64)).expect("square")
    }

    /// `|ik⟩⟨ik|`.
    pub fn product_basis(dims: (usize, usize), i: usize, k: usize) -> Result<Self> {
        let d = dims.0 * dims.1;
        let mut psi = vec![Complex64::default(); d];
        let idx = i * dims.1 + k;
        if idx >= d {
            return Err(Error::DimensionMismatch(format!(
                "basis index ({i},{k}) for {dims:?}"
            )));
        }
        psi[idx] = Complex64::new(1.0, 0.0);
        Self::projector(dims, &psi)
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.entries
    }

    pub fn into_matrix(self) -> CMatrix {
        self.entries
    }

    pub fn scale(&self, c: f64) -> Self {
        DensityOp {
            dims: self.dims,
            entries: self.entries.scale(c),
        }
    }

    pub fn trace(&self) -> Complex64 {
        linalg::trace(&self.entries)
    }

    pub fn hermitian_deviation(&self) -> f64 {
        linalg::hermitian_deviation(&self.entries)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        linalg::eigenvalues(&self.entries)
    }

    pub fn is_psd(&self, tol: f64) -> bool {
        self.is_hermitian(tol) && linalg::min_eigenvalue(&self.entries) >= -tol
    }

    /// Hermitian, unit trace and positive semidefinite, all within `tol`.
    pub fn is_state(&self, tol: f64) -> bool {
        self.is_psd(tol) && (self.trace() - Complex64::new(1.0, 0.0)).norm() <= tol
    }

    /// `ρ^{T₂}`: `(ρ^{T₂})_{ik,jl} = ρ_{il,jk}`.
    pub fn partial_transpose_second(&self) -> Self {
        let (n, m) = self.dims;
        let d = n * m;
        let entries = CMatrix::from_fn(d, d, |row, col| {
            let (i, k) = (row / m, row % m);
            let (j, l) = (col / m, col % m);
            self.entries[(i * m + l, j * m + k)]
        });
        DensityOp {
            dims: self.dims,
            entries,
        }
    }

    /// `ρ^{T₁}`: `(ρ^{T₁})_{ik,jl} = ρ_{jk,il}`.
    pub fn partial_transpose_first(&self) -> Self {
        let (n, m) = self.dims;
        let d = n * m;
        let entries = CMatrix::from_fn(d, d, |row, col| {
            let (i, k) = (row / m, row % m);
            let (j, l) = (col / m, col % m);
            self.entries[(j * m + k, i * m + l)]
        });
        DensityOp {
            dims: self.dims,
            entries,
        }
    }
}

fn check_dim<R: Representation>(d: usize, rep: &R) -> Result<()> {
    if d != rep.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{d}-dimensional operator against the {}-dimensional corepresentation {}",
            rep.dim(),
            rep.label()
        )));
    }
    Ok(())
}

/// `Σ_IJ m_IJ U_JI` for any corepresentation.
pub fn forward_matrix<R: Representation>(m: &CMatrix, rep: &R) -> Result<R::Elem> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch("non-square operator".into()));
    }
    check_dim(m.nrows(), rep)?;
    let mut out = rep.entry(0, 0).zero_like();
    for i in 0..rep.dim() {
        for j in 0..rep.dim() {
            let c = m[(i, j)];
            if c != Complex64::default() {
                out.accumulate(rep.entry(j, i), c)?;
            }
        }
    }
    Ok(out)
}

/// The transform `ρ̂ = (tr⊗id)(ρU)` of a bipartite operator.
pub fn forward(rho: &DensityOp, u: &ProductCorep) -> Result<MultiElement> {
    if rho.dims() != u.dims() {
        return Err(Error::DimensionMismatch(format!(
            "operator on {:?} against corepresentation {} on {:?}",
            rho.dims(),
            u.label(),
            u.dims()
        )));
    }
    forward_matrix(rho.matrix(), u)
}

/// Single-factor transform `σ̂ = Σ_ij σ_ij u_ji`.
pub fn forward_single(sigma: &CMatrix, u: &Corep) -> Result<Element> {
    forward_matrix(sigma, u)
}

/// `â = F^{-1/2} K F^{1/2}` with `K_MR = h(U*_RM x)`.
pub fn inverse<R: Representation>(x: &R::Elem, rep: &R) -> Result<CMatrix> {
    rep.params().check_same(&x.params())?;
    let d = rep.dim();
    let mut k = CMatrix::zeros(d, d);
    for r in 0..d {
        for m in 0..d {
            k[(m, r)] = rep.entry(r, m).star().product(x)?.haar();
        }
    }
    let f = rep.f_matrix();
    Ok(linalg::positive_power(f, -0.5)? * k * linalg::positive_power(f, 0.5)?)
}

/// `(tr F) √F â √F`; recovers ρ from `forward(ρ)`.
pub fn reconstruct<R: Representation>(x: &R::Elem, rep: &R) -> Result<CMatrix> {
    let hat = inverse(x, rep)?;
    let s = linalg::positive_power(rep.f_matrix(), 0.5)?;
    Ok((&s * hat * &s).scale(rep.f_trace()))
}

/// `ε(x)`, which equals `tr ρ` when `x = forward(ρ, U)`.
pub fn normalization_check(x: &MultiElement) -> Result<Complex64> {
    hopf::product_counit(x)
}

/// Re-expands `x` from its reconstructed coefficient blocks over `catalog`
/// and returns the largest coefficient deviation from `x`. Zero means the
/// catalog spans the support of `x`.
pub fn support_residual<R: Representation>(x: &R::Elem, catalog: &[R]) -> Result<f64> {
    let mut rebuilt = x.zero_like();
    for rep in catalog {
        let coeffs = reconstruct(x, rep)?;
        rebuilt.accumulate(&forward_matrix(&coeffs, rep)?, Complex64::new(1.0, 0.0))?;
    }
    Ok(rebuilt.max_distance(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corep::{fundamental_corep, product_corep, trivial_corep};
    use crate::qalgebra::{AlgebraParams, Gen};

    fn p(q: f64) -> AlgebraParams {
        AlgebraParams::with_q(q).unwrap()
    }

    fn fund2(q: f64) -> ProductCorep {
        let u = fundamental_corep(p(q)).unwrap();
        product_corep(&u, &u).unwrap()
    }

    fn triv2(q: f64) -> ProductCorep {
        let t = trivial_corep(p(q));
        product_corep(&t, &t).unwrap()
    }

    fn singlet_hat(q: f64) -> MultiElement {
        let g = |x| Element::generator(x, p(q));
        let t = |x, y| MultiElement::tensor(&g(x), &g(y)).unwrap();
        let mut out = t(Gen::A, Gen::AStar);
        for (x, y) in [
            (Gen::AStar, Gen::A),
            (Gen::C, Gen::CStar),
            (Gen::CStar, Gen::C),
        ] {
            out = out.add(&t(x, y)).unwrap();
        }
        out.scale(Complex64::new(0.5, 0.0))
    }

    #[test]
    fn singlet_transform() {
        for q in [0.5, 1.0] {
            let x = forward(&DensityOp::singlet(), &fund2(q)).unwrap();
            assert!(x.distance(&singlet_hat(q)) < 1e-12, "{x}");
            assert!((normalization_check(&x).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn maximally_mixed_transform_is_character_product() {
        let q = 0.5;
        let x = forward(&DensityOp::maximally_mixed((2, 2)), &fund2(q)).unwrap();
        let chi = &Element::generator(Gen::A, p(q)) + &Element::generator(Gen::AStar, p(q));
        let expect = MultiElement::tensor(&chi, &chi)
            .unwrap()
            .scale(Complex64::new(0.25, 0.0));
        assert!(x.equal(&expect));
    }

    #[test]
    fn zero_matrix_transforms_to_zero() {
        let zero = DensityOp::new((2, 2), CMatrix::zeros(4, 4)).unwrap();
        assert!(forward(&zero, &fund2(0.5)).unwrap().is_empty());
        let x = MultiElement::zero(2, p(0.5));
        assert_eq!(linalg::max_abs(&reconstruct(&x, &fund2(0.5)).unwrap()), 0.0);
    }

    #[test]
    fn dimension_mismatch() {
        let rho = DensityOp::maximally_mixed((1, 2));
        assert!(matches!(
            forward(&rho, &fund2(0.5)),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(DensityOp::from_row_major((2, 2), &[Complex64::default(); 15]).is_err());
    }

    #[test]
    fn singlet_round_trip() {
        for q in [0.5, 0.9, 1.0] {
            let u = fund2(q);
            let rho = DensityOp::singlet();
            let x = forward(&rho, &u).unwrap();
            let hat = inverse(&x, &u).unwrap();
            let s = linalg::positive_power(u.f_matrix(), 0.5).unwrap();
            let back = (&s * &hat * &s).scale(u.f_trace());
            assert!(linalg::max_abs(&(back - rho.matrix())) < 1e-8);
            let back = reconstruct(&x, &u).unwrap();
            assert!(linalg::max_abs(&(back - rho.matrix())) < 1e-8);
        }
    }

    #[test]
    fn trivial_blocks() {
        let unit = MultiElement::unit(2, p(0.5));
        let hat = inverse(&unit, &fund2(0.5)).unwrap();
        assert!(linalg::max_abs(&hat) < 1e-12);
        let hat = inverse(&unit, &triv2(0.5)).unwrap();
        assert!((hat[(0, 0)] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn normalization_scales_with_trace() {
        let x = forward(&DensityOp::maximally_mixed((2, 2)).scale(2.0), &fund2(0.5)).unwrap();
        assert!((normalization_check(&x).unwrap() - Complex64::new(2.0, 0.0)).norm() < 1e-12);
        assert!(
            (normalization_check(&singlet_hat(0.3)).unwrap() - Complex64::new(1.0, 0.0)).norm()
                < 1e-12
        );
    }

    #[test]
    fn support_residuals() {
        let q = 0.5;
        let x = forward(&DensityOp::singlet(), &fund2(q)).unwrap();
        let cat = vec![fund2(q)];
        assert!(support_residual(&x, &cat).unwrap() < 1e-9);
        let with_unit = x.add(&MultiElement::unit(2, p(q))).unwrap();
        assert!((support_residual(&with_unit, &cat).unwrap() - 1.0).abs() < 1e-9);
        assert_eq!(
            support_residual(&MultiElement::zero(2, p(q)), &cat).unwrap(),
            0.0
        );
    }

    #[test]
    fn partial_transposes() {
        let s = DensityOp::singlet();
        let t2 = s.partial_transpose_second();
        let ev = t2.eigenvalues();
        assert!((ev[0] + 0.5).abs() < 1e-12);
        assert!(ev[1..].iter().all(|v| (v - 0.5).abs() < 1e-12));
        // transposing both factors is the full transpose
        let both = t2.partial_transpose_first();
        assert_eq!(both.matrix(), &s.matrix().transpose());
    }
}
