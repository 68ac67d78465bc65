//! Unitary corepresentations with their F-intertwiners.
//!
//! The catalog holds the trivial corepresentation (`"triv"`) and the
//! fundamental one (`"fund"`),
//!
//! ```text
//! u = [[ a,           √q c ],
//!      [ −q^{-1/2} c*, a*  ]]
//! ```
//!
//! F is the positive matrix with `(id⊗κ²)u = F u F⁻¹` and
//! `tr F = tr F⁻¹`. Product corepresentations of the direct square use the
//! composite index `(ik)` ↦ `i·m + k`, with entries `U_{ik,jl} = u_ij ⊗ v_kl`
//! and `F_prod = F ⊗ F̃`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::haar::Haar;
use crate::hopf::{self, MultiElement};
use crate::linalg::{self, CMatrix};
use crate::qalgebra::{AlgebraParams, Element, Gen, Monomial};
use crate::traits::AlgebraElement;

/// A finite-dimensional unitary corepresentation of either the group or
/// its direct square.
pub trait Representation {
    type Elem: AlgebraElement;

    fn label(&self) -> &str;
    fn dim(&self) -> usize;
    fn entry(&self, i: usize, j: usize) -> &Self::Elem;
    fn f_matrix(&self) -> &CMatrix;
    fn params(&self) -> AlgebraParams;

    fn f_trace(&self) -> f64 {
        linalg::trace(self.f_matrix()).re
    }
}

/// A corepresentation of SU_q(2).
#[derive(Clone, Debug)]
pub struct Corep {
    label: String,
    params: AlgebraParams,
    dim: usize,
    entries: Vec<Element>,
    f: CMatrix,
}

impl Corep {
    /// Builds a corepresentation from its row-major entries and computes F.
    pub fn from_entries(
        label: &str,
        params: AlgebraParams,
        dim: usize,
        entries: Vec<Element>,
    ) -> Result<Corep> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {dim}x{dim} corepresentation",
                entries.len()
            )));
        }
        let mut out = Corep {
            label: label.to_string(),
            params,
            dim,
            entries,
            f: CMatrix::identity(dim, dim),
        };
        let residual = out.unitarity_residual();
        if residual > params.tol() {
            return Err(Error::NotUnitary(residual));
        }
        out.f = compute_f(dim, &out.entries)?;
        Ok(out)
    }

    pub fn by_label(label: &str, params: AlgebraParams) -> Result<Corep> {
        match label {
            "triv" => Ok(trivial_corep(params)),
            "fund" => fundamental_corep(params),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    /// Largest deviation from `u*u = 1 = uu*`.
    pub fn unitarity_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j {
                    Element::one(self.params)
                } else {
                    Element::zero(self.params)
                };
                let mut left = Element::zero(self.params);
                let mut right = Element::zero(self.params);
                for r in 0..n {
                    left.add_scaled(
                        &(&self.entry(r, i).adjoint() * self.entry(r, j)),
                        Complex64::new(1.0, 0.0),
                    );
                    right.add_scaled(
                        &(self.entry(i, r) * &self.entry(j, r).adjoint()),
                        Complex64::new(1.0, 0.0),
                    );
                }
                worst = worst
                    .max(left.distance(&expect))
                    .max(right.distance(&expect));
            }
        }
        worst
    }

    /// Largest deviation of `(id⊗κ²)u` from `F u F⁻¹`.
    pub fn intertwining_residual(&self) -> f64 {
        intertwining_residual_with(self.dim, &self.entries, &self.f)
    }

    /// Largest deviation from `Δu_ij = Σ_r u_ir ⊗ u_rj`.
    pub fn comultiplication_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let lhs = hopf::coproduct(self.entry(i, j));
                let mut rhs = MultiElement::zero(2, self.params);
                for r in 0..n {
                    let t = MultiElement::tensor(self.entry(i, r), self.entry(r, j))
                        .expect("same params");
                    rhs.add_scaled(&t, Complex64::new(1.0, 0.0))
                        .expect("two legs");
                }
                worst = worst.max(lhs.distance(&rhs));
            }
        }
        worst
    }
}

impl Representation for Corep {
    type Elem = Element;

    fn label(&self) -> &str {
        &self.label
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn entry(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.dim + j]
    }

    fn f_matrix(&self) -> &CMatrix {
        &self.f
    }

    fn params(&self) -> AlgebraParams {
        self.params
    }
}

/// The one-dimensional corepresentation `[1]`.
pub fn trivial_corep(params: AlgebraParams) -> Corep {
    Corep {
        label: "triv".into(),
        params,
        dim: 1,
        entries: vec![Element::one(params)],
        f: CMatrix::identity(1, 1),
    }
}

/// The spin-1/2 corepresentation, with F computed from the intertwiner
/// equation.
pub fn fundamental_corep(params: AlgebraParams) -> Result<Corep> {
    let sq = params.sqrt_q();
    let entries = vec![
        Element::generator(Gen::A, params),
        Element::generator(Gen::C, params).scale(Complex64::new(sq, 0.0)),
        Element::generator(Gen::CStar, params).scale(Complex64::new(-1.0 / sq, 0.0)),
        Element::generator(Gen::AStar, params),
    ];
    Corep::from_entries("fund", params, 2, entries)
}

fn intertwining_residual_with(n: usize, entries: &[Element], f: &CMatrix) -> f64 {
    let params = entries[0].params();
    let finv = f.clone().try_inverse().expect("F invertible");
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let lhs = hopf::coinverse_squared(&entries[i * n + j]);
            let mut rhs = Element::zero(params);
            for r in 0..n {
                for s in 0..n {
                    rhs.add_scaled(&entries[r * n + s], f[(i, r)] * finv[(s, j)]);
                }
            }
            worst = worst.max(lhs.distance(&rhs));
        }
    }
    worst
}

/// Solves `κ²(u)·F = F·u` for the unique positive F normalised by
/// `tr F = tr F⁻¹`.
///
/// The equation is linear in the entries of F; its solution space is the
/// kernel of a coefficient matrix `M`, read off from the eigenvectors of
/// `M†M` with vanishing eigenvalue. Irreducible input gives a
/// one-dimensional kernel.
pub fn compute_f(n: usize, entries: &[Element]) -> Result<CMatrix> {
    let params = entries[0].params();
    let kappa2: Vec<Element> = entries.iter().map(hopf::coinverse_squared).collect();

    let mut support: BTreeSet<Monomial> = BTreeSet::new();
    for e in entries.iter().chain(&kappa2) {
        support.extend(e.terms().map(|(m, _)| *m));
    }
    let unknowns = n * n;
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for mono in &support {
                let mut row = vec![Complex64::default(); unknowns];
                for r in 0..n {
                    // Σ_r κ²(u_ir) F_rj
                    row[r * n + j] += kappa2[i * n + r].coeff(mono);
                    // − Σ_r F_ir u_rj
                    row[i * n + r] -= entries[r * n + j].coeff(mono);
                }
                if row.iter().any(|z| z.norm() > 0.0) {
                    rows.push(row);
                }
            }
        }
    }
    let gram = if rows.is_empty() {
        CMatrix::zeros(unknowns, unknowns)
    } else {
        let m = DMatrix::from_fn(rows.len(), unknowns, |r, c| rows[r][c]);
        m.adjoint() * m
    };
    let (values, vectors) = linalg::hermitian_eigen(&gram);
    let scale = 1.0 + values.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
    let kernel: Vec<usize> = (0..values.len())
        .filter(|&i| values[i].abs() <= 1e-10 * scale)
        .collect();
    match kernel.len() {
        0 => {
            return Err(Error::NoIntertwiner(
                "the intertwiner equation has only the zero solution".into(),
            ))
        }
        1 => {}
        k => {
            return Err(Error::NoIntertwiner(format!(
                "{k}-dimensional intertwiner space; input is reducible"
            )))
        }
    }
    let v = vectors.column(kernel[0]);
    let mut f = CMatrix::from_fn(n, n, |r, c| v[r * n + c]);

    let tr = linalg::trace(&f);
    if tr.norm() < 1e-12 {
        return Err(Error::NoIntertwiner("traceless intertwiner".into()));
    }
    f *= tr.conj() / tr.norm();
    if linalg::hermitian_deviation(&f) > 1e-8 * linalg::max_abs(&f) {
        return Err(Error::NoIntertwiner("intertwiner is not hermitian".into()));
    }
    let f = (&f + f.adjoint()).scale(0.5);
    if linalg::min_eigenvalue(&f) <= 0.0 {
        return Err(Error::NoIntertwiner("intertwiner is not positive".into()));
    }
    let finv = f
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::NoIntertwiner("singular".into()))?;
    let s = (linalg::trace(&finv).re / linalg::trace(&f).re).sqrt();
    let mut f = f.scale(s);
    // clean rounding noise off exact zeros
    for z in f.iter_mut() {
        if z.norm() < 1e-14 {
            *z = Complex64::default();
        }
        if z.im.abs() < 1e-14 {
            z.im = 0.0;
        }
    }
    let residual = intertwining_residual_with(n, entries, &f);
    if residual > params.tol() {
        return Err(Error::NoIntertwiner(format!(
            "residual {residual:e} after normalisation"
        )));
    }
    Ok(f)
}

/// `U = u ⊗ v` as a corepresentation of the direct square.
#[derive(Clone, Debug)]
pub struct ProductCorep {
    left: Corep,
    right: Corep,
    label: String,
    dim: usize,
    entries: Vec<MultiElement>,
    f: CMatrix,
}

/// `U_{ik,jl} = u_ij ⊗ v_kl`, `F_prod = F ⊗ F̃`.
pub fn product_corep(u: &Corep, v: &Corep) -> Result<ProductCorep> {
    u.params.check_same(&v.params)?;
    let (n, m) = (u.dim, v.dim);
    let dim = n * m;
    let mut entries = Vec::with_capacity(dim * dim);
    for i in 0..n {
        for k in 0..m {
            for j in 0..n {
                for l in 0..m {
                    entries.push(MultiElement::tensor(u.entry(i, j), v.entry(k, l))?);
                }
            }
        }
    }
    Ok(ProductCorep {
        left: u.clone(),
        right: v.clone(),
        label: format!("{}:{}", u.label, v.label),
        dim,
        entries,
        f: u.f.kronecker(&v.f),
    })
}

impl ProductCorep {
    pub fn left(&self) -> &Corep {
        &self.left
    }

    pub fn right(&self) -> &Corep {
        &self.right
    }

    /// Factor dimensions `(n, m)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.left.dim, self.right.dim)
    }

    /// Entry `U_{ik,jl}` by separate factor indices.
    pub fn entry4(&self, i: usize, k: usize, j: usize, l: usize) -> &MultiElement {
        let m = self.right.dim;
        self.entry(i * m + k, j * m + l)
    }

    /// Largest deviation from `ΔU_IJ = Σ_R U_IR ⊗ U_RJ` under the product
    /// coproduct.
    pub fn comultiplication_residual(&self) -> f64 {
        let params = self.left.params;
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = hopf::product_coproduct(self.entry(i, j)).expect("two legs");
                let mut rhs = MultiElement::zero(4, params);
                for r in 0..self.dim {
                    let t = self
                        .entry(i, r)
                        .tensor_with(self.entry(r, j))
                        .expect("same params");
                    rhs.add_scaled(&t, Complex64::new(1.0, 0.0))
                        .expect("four legs");
                }
                worst = worst.max(lhs.distance(&rhs));
            }
        }
        worst
    }

    /// Largest deviation from `κ(U_IJ) = U*_JI`.
    pub fn coinverse_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = hopf::product_coinverse(self.entry(i, j)).expect("two legs");
                worst = worst.max(lhs.distance(&self.entry(j, i).adjoint()));
            }
        }
        worst
    }

    /// Largest deviation from `ε(U_IJ) = δ_IJ`.
    pub fn counit_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = hopf::product_counit(self.entry(i, j)).expect("two legs");
                let expect = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((v - Complex64::new(expect, 0.0)).norm());
            }
        }
        worst
    }

    /// Largest deviation of `(id⊗κ²)U` (κ² on both legs) from
    /// `F_prod U F_prod⁻¹`.
    pub fn intertwining_residual(&self) -> f64 {
        let params = self.left.params;
        let finv = self.f.clone().try_inverse().expect("F invertible");
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self.entry(i, j).map_legs(
                    |_, m| hopf::coinverse_squared(&Element::monomial(*m, params)),
                    false,
                );
                let mut rhs = MultiElement::zero(2, params);
                for r in 0..self.dim {
                    for s in 0..self.dim {
                        let c = self.f[(i, r)] * finv[(s, j)];
                        if c != Complex64::default() {
                            rhs.add_scaled(self.entry(r, s), c).expect("two legs");
                        }
                    }
                }
                worst = worst.max(lhs.distance(&rhs));
            }
        }
        worst
    }
}

impl Representation for ProductCorep {
    type Elem = MultiElement;

    fn label(&self) -> &str {
        &self.label
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn entry(&self, i: usize, j: usize) -> &MultiElement {
        &self.entries[i * self.dim + j]
    }

    fn f_matrix(&self) -> &CMatrix {
        &self.f
    }

    fn params(&self) -> AlgebraParams {
        self.left.params
    }
}

/// Largest deviation from the deformed orthogonality relations
///
/// ```text
/// h(u*_ij w_i'j') = δ_uw (F⁻¹)_i'i δ_jj' / tr F
/// h(u_ij w*_i'j') = δ_uw δ_ii' F_j'j / tr F
/// ```
///
/// over all index tuples. Corepresentations with different labels are
/// treated as inequivalent.
pub fn orthogonality_check<R: Representation>(u: &R, w: &R) -> f64 {
    let same = u.label() == w.label() && u.dim() == w.dim();
    let f = u.f_matrix();
    let finv = f.clone().try_inverse().expect("F invertible");
    let tr = u.f_trace();
    let mut worst: f64 = 0.0;
    for i in 0..u.dim() {
        for j in 0..u.dim() {
            let uij = u.entry(i, j);
            let uij_star = uij.star();
            for i2 in 0..w.dim() {
                for j2 in 0..w.dim() {
                    let wij = w.entry(i2, j2);
                    let first = uij_star.product(wij).expect("same params").haar();
                    let second = uij.product(&wij.star()).expect("same params").haar();
                    let (e1, e2) = if same {
                        let d_jj = if j == j2 { 1.0 } else { 0.0 };
                        let d_ii = if i == i2 { 1.0 } else { 0.0 };
                        (finv[(i2, i)] * d_jj / tr, f[(j2, j)] * d_ii / tr)
                    } else {
                        (Complex64::default(), Complex64::default())
                    };
                    worst = worst.max((first - e1).norm()).max((second - e2).norm());
                }
            }
        }
    }
    worst
}

/// Parses a catalog of pair labels such as `"fund:fund"` or
/// `"triv:fund"`.
pub fn catalog_from_labels<S: AsRef<str>>(
    labels: &[S],
    params: AlgebraParams,
) -> Result<Vec<ProductCorep>> {
    labels
        .iter()
        .map(|label| {
            let label = label.as_ref();
            let (l, r) = label
                .split_once(':')
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            product_corep(
                &Corep::by_label(l.trim(), params)?,
                &Corep::by_label(r.trim(), params)?,
            )
        })
        .collect()
}

/// Label strings of every pair over `{triv, fund}`.
pub const DEFAULT_PAIR_LABELS: [&str; 4] = ["triv:triv", "triv:fund", "fund:triv", "fund:fund"];

/// All four products of the trivial and fundamental corepresentations.
pub fn default_catalog(params: AlgebraParams) -> Result<Vec<ProductCorep>> {
    catalog_from_labels(&DEFAULT_PAIR_LABELS, params)
}

/// The single-factor catalog `{triv, fund}`.
pub fn single_catalog(params: AlgebraParams) -> Result<Vec<Corep>> {
    Ok(vec![trivial_corep(params), fundamental_corep(params)?])
}
