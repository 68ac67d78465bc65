//! Positive definiteness, separability and the PPT test on the transform
//! side, plus the matrix-side counterparts.
//!
//! An element `x` of the direct square is positive definite when
//! `(b*hκ ⊗ hb)Δx ≥ 0` for every `b`. For `x` in the span of a catalog of
//! irreducible product corepresentations this is equivalent to every
//! inverse-transform block `x̂(αβ)` being positive semidefinite, which is
//! what [`is_positive_definite`] checks. A failing block is certified by an
//! explicit `b` with a negative value.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

use crate::corep::{self, Corep, ProductCorep, Representation};
use crate::error::{Error, Result};
use crate::fourier::{self, DensityOp};
use crate::haar::HaarProducts;
use crate::hopf::{self, MultiElement};
use crate::linalg::{self, CMatrix};
use crate::qalgebra::{Element, Monomial};

/// Eigenvalues above `-TOL_EIG` count as non-negative.
pub const TOL_EIG: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PdVerdict {
    PositiveDefinite,
    NotPositiveDefinite,
    /// Every block is positive but the catalog does not span the element.
    UndecidedSupport,
}

impl fmt::Display for PdVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PdVerdict::PositiveDefinite => "POSITIVE_DEFINITE",
            PdVerdict::NotPositiveDefinite => "NOT_POSITIVE_DEFINITE",
            PdVerdict::UndecidedSupport => "UNDECIDED_SUPPORT",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockMin {
    pub label: String,
    pub min_eigenvalue: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PdReport {
    pub verdict: PdVerdict,
    pub per_block: Vec<BlockMin>,
    pub support_residual: f64,
    pub witness: Option<MultiElement>,
}

impl PdReport {
    pub fn is_positive_definite(&self) -> bool {
        self.verdict == PdVerdict::PositiveDefinite
    }

    pub fn min_block(&self) -> Option<&BlockMin> {
        self.per_block
            .iter()
            .min_by(|a, b| a.min_eigenvalue.total_cmp(&b.min_eigenvalue))
    }
}

/// `(b*hκ ⊗ hb)Δx = Σ h(κ(x₁) b*) h(b x₂)` for two-leg `x` and `b`.
pub fn pd_witness_value(x: &MultiElement, b: &MultiElement) -> Result<Complex64> {
    x.expect_legs(2)?;
    b.expect_legs(2)?;
    x.params().check_same(&b.params())?;
    let params = x.params();
    let delta = hopf::product_coproduct(x)?;
    let b_star = b.adjoint();
    let mut hp = HaarProducts::new(params);
    let mut kappa: HashMap<Monomial, Element> = HashMap::new();
    let mut left: HashMap<(Monomial, Monomial), Complex64> = HashMap::new();
    let mut right: HashMap<(Monomial, Monomial), Complex64> = HashMap::new();

    let mut total = Complex64::default();
    for (key, c) in delta.terms() {
        let l = match left.get(&(key[0], key[1])) {
            Some(v) => *v,
            None => {
                for m in &key[..2] {
                    kappa
                        .entry(*m)
                        .or_insert_with(|| hopf::coinverse_monomial(m, params));
                }
                let (k0, k1) = (&kappa[&key[0]], &kappa[&key[1]]);
                let v: Complex64 = b_star
                    .terms()
                    .map(|(t, beta)| beta * hp.left_elem(k0, &t[0]) * hp.left_elem(k1, &t[1]))
                    .sum();
                left.insert((key[0], key[1]), v);
                v
            }
        };
        if l == Complex64::default() {
            continue;
        }
        let r = *right.entry((key[2], key[3])).or_insert_with(|| {
            b.terms()
                .map(|(t, beta)| beta * hp.get(&t[0], &key[2]) * hp.get(&t[1], &key[3]))
                .sum()
        });
        total += c * l * r;
    }
    Ok(total)
}

struct BlockScan {
    per_block: Vec<BlockMin>,
    residual: f64,
    /// (catalog index, eigenvalue, eigenvector) of the most negative block
    worst: Option<(usize, f64, Vec<Complex64>)>,
}

fn scan_blocks<R: Representation>(x: &R::Elem, catalog: &[R]) -> Result<BlockScan> {
    let mut per_block = Vec::with_capacity(catalog.len());
    let mut worst: Option<(usize, f64, Vec<Complex64>)> = None;
    for (idx, rep) in catalog.iter().enumerate() {
        let hat = fourier::inverse(x, rep)?;
        let (values, vectors) = linalg::hermitian_eigen(&hat);
        let min = values[0];
        per_block.push(BlockMin {
            label: rep.label().to_string(),
            min_eigenvalue: min,
        });
        if min < -TOL_EIG && worst.as_ref().is_none_or(|w| min < w.1) {
            worst = Some((idx, min, vectors.column(0).iter().copied().collect()));
        }
    }
    let residual = fourier::support_residual(x, catalog)?;
    Ok(BlockScan {
        per_block,
        residual,
        worst,
    })
}

fn verdict_of(scan: &BlockScan, tol: f64) -> PdVerdict {
    if scan.worst.is_some() {
        PdVerdict::NotPositiveDefinite
    } else if scan.residual > tol {
        PdVerdict::UndecidedSupport
    } else {
        PdVerdict::PositiveDefinite
    }
}

/// Block-wise positive-definiteness test over a catalog of product
/// corepresentations. A `NOT_POSITIVE_DEFINITE` verdict carries a witness.
pub fn is_positive_definite(x: &MultiElement, catalog: &[ProductCorep]) -> Result<PdReport> {
    x.expect_legs(2)?;
    let scan = scan_blocks(x, catalog)?;
    let verdict = verdict_of(&scan, x.params().tol());
    let witness = match &scan.worst {
        Some((idx, value, vector)) => {
            Some(witness_from_eigenpair(x, &catalog[*idx], *value, vector)?)
        }
        None => None,
    };
    Ok(PdReport {
        verdict,
        per_block: scan.per_block,
        support_residual: scan.residual,
        witness,
    })
}

/// The same test for a single-factor element against `{triv, fund}`-style
/// catalogs. No witness is produced.
pub fn is_positive_definite_single(x: &Element, catalog: &[Corep]) -> Result<PdReport> {
    let scan = scan_blocks(x, catalog)?;
    Ok(PdReport {
        verdict: verdict_of(&scan, x.params().tol()),
        per_block: scan.per_block,
        support_residual: scan.residual,
        witness: None,
    })
}

/// Builds `b = s Σ_M β_M U*_{0,M}` with `β = conj(F^{-1/2} v)` for a
/// normalised eigenvector `v` of `x̂(U)` at eigenvalue `lambda`. By the
/// orthogonality relations, `(b*hκ⊗hb)Δx = |s|² (Σ_K |F⁻¹_{K0}|²/tr F) λ`;
/// `s` is chosen so the value is at most `min(λ, −2·tol)`.
fn witness_from_eigenpair(
    x: &MultiElement,
    u: &ProductCorep,
    lambda: f64,
    v: &[Complex64],
) -> Result<MultiElement> {
    let params = x.params();
    let f = u.f_matrix();
    let f_inv_sqrt = linalg::positive_power(f, -0.5)?;
    let f_inv = linalg::positive_power(f, -1.0)?;
    let v = nalgebra::DVector::from_column_slice(v);
    let w = &f_inv_sqrt * v;
    let col_norm: f64 = (0..u.dim()).map(|k| f_inv[(k, 0)].norm_sqr()).sum();
    let target = lambda.min(-2.0 * params.tol());
    let s2 = u.f_trace() / col_norm * (target / lambda);
    let s = s2.sqrt();
    let mut b = MultiElement::zero(2, params);
    for m in 0..u.dim() {
        let beta = w[m].conj() * s;
        if beta.norm() > 0.0 {
            b.add_scaled(&u.entry(0, m).adjoint(), beta)?;
        }
    }
    Ok(b)
}

/// A `b` with `(b*hκ⊗hb)Δx < −tol`, built from the most negative
/// eigenvector of `x̂(U)`; `None` when that block is positive.
pub fn find_negative_witness(x: &MultiElement, u: &ProductCorep) -> Result<Option<MultiElement>> {
    x.expect_legs(2)?;
    let hat = fourier::inverse(x, u)?;
    let (values, vectors) = linalg::hermitian_eigen(&hat);
    if values[0] >= -TOL_EIG {
        return Ok(None);
    }
    let v: Vec<Complex64> = vectors.column(0).iter().copied().collect();
    witness_from_eigenpair(x, u, values[0], &v).map(Some)
}

fn require_pd_single(x: &Element, what: &str) -> Result<PdReport> {
    let report = is_positive_definite_single(x, &corep::single_catalog(x.params())?)?;
    if !report.is_positive_definite() {
        return Err(Error::NotPositiveDefinite(format!(
            "{what}: {} (support residual {:e})",
            report.verdict, report.support_residual
        )));
    }
    Ok(report)
}

/// `Σ p_λ a_λ ⊗ b_λ` with every weight non-negative and every factor
/// positive definite on its own group.
pub fn separable_build(terms: &[(f64, Element, Element)]) -> Result<MultiElement> {
    let first = terms
        .first()
        .ok_or_else(|| Error::Format("empty separable mixture".into()))?;
    let params = first.1.params();
    let mut out = MultiElement::zero(2, params);
    for (idx, (w, a, b)) in terms.iter().enumerate() {
        if !(*w >= 0.0 && w.is_finite()) {
            return Err(Error::NegativeWeight(*w));
        }
        require_pd_single(a, &format!("term {idx}, first factor"))?;
        require_pd_single(b, &format!("term {idx}, second factor"))?;
        out.add_scaled(&MultiElement::tensor(a, b)?, Complex64::new(*w, 0.0))?;
    }
    Ok(out)
}

/// Positive definiteness of `(id⊗θ)x`; failure proves `x` is not
/// separable.
pub fn ppt_check(x: &MultiElement, catalog: &[ProductCorep]) -> Result<PdReport> {
    is_positive_definite(&hopf::partial_theta(x)?, catalog)
}

/// Same as [`ppt_check`] with θ on the first leg.
pub fn ppt_check_first(x: &MultiElement, catalog: &[ProductCorep]) -> Result<PdReport> {
    is_positive_definite(&hopf::partial_theta_first(x)?, catalog)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PptMatrixReport {
    pub ppt: bool,
    /// Ascending eigenvalues of `ρ^{T₂}`.
    pub spectrum: Vec<f64>,
}

/// Spectrum of the partial transpose on the second factor.
pub fn ppt_matrix(rho: &DensityOp) -> Result<PptMatrixReport> {
    let dev = rho.hermitian_deviation();
    if dev > TOL_EIG {
        return Err(Error::NotHermitian(dev));
    }
    let spectrum = rho.partial_transpose_second().eigenvalues();
    Ok(PptMatrixReport {
        ppt: spectrum.first().is_none_or(|&v| v >= -TOL_EIG),
        spectrum,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PdCertificate {
    pub left_blocks: Vec<BlockMin>,
    pub right_blocks: Vec<BlockMin>,
    pub product_blocks: Vec<BlockMin>,
}

/// `a ⊗ b` for positive definite factors, with block minima of both
/// factors and of every `{triv, fund}²` block of the product.
pub fn tensor_pd(a: &Element, b: &Element) -> Result<(MultiElement, PdCertificate)> {
    let left = require_pd_single(a, "first factor")?;
    let right = require_pd_single(b, "second factor")?;
    let x = MultiElement::tensor(a, b)?;
    let mut product_blocks = Vec::new();
    for u in corep::default_catalog(x.params())? {
        let hat = fourier::inverse(&x, &u)?;
        product_blocks.push(BlockMin {
            label: u.label().to_string(),
            min_eigenvalue: linalg::min_eigenvalue(&hat),
        });
    }
    Ok((
        x,
        PdCertificate {
            left_blocks: left.per_block,
            right_blocks: right.per_block,
            product_blocks,
        },
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Separability {
    Separable,
    Entangled,
}

impl fmt::Display for Separability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Separability::Separable => "SEPARABLE",
            Separability::Entangled => "ENTANGLED",
        })
    }
}

/// Separability of a two-qubit state, decided by the partial transpose.
/// Larger systems are refused.
pub fn decide_separability_2x2(rho: &DensityOp) -> Result<Separability> {
    if rho.dims() != (2, 2) {
        return Err(Error::Unsupported(format!(
            "separability decision needs 2x2 factors, got {:?}",
            rho.dims()
        )));
    }
    if !rho.is_state(TOL_EIG) {
        return Err(Error::NotState(format!(
            "trace {}, hermitian deviation {:e}, eigenvalues {:?}",
            rho.trace(),
            rho.hermitian_deviation(),
            rho.eigenvalues()
        )));
    }
    Ok(if ppt_matrix(rho)?.ppt {
        Separability::Separable
    } else {
        Separability::Entangled
    })
}

/// Convenience: matrix of `x̂(U)` blocks for every catalog entry.
pub fn inverse_blocks(
    x: &MultiElement,
    catalog: &[ProductCorep],
) -> Result<Vec<(String, CMatrix)>> {
    catalog
        .iter()
        .map(|u| Ok((u.label().to_string(), fourier::inverse(x, u)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corep::{default_catalog, fundamental_corep, product_corep, trivial_corep};
    use crate::fourier::{forward, forward_single};
    use crate::qalgebra::AlgebraParams;

    fn p(q: f64) -> AlgebraParams {
        AlgebraParams::with_q(q).unwrap()
    }

    fn fund2(q: f64) -> ProductCorep {
        let u = fundamental_corep(p(q)).unwrap();
        product_corep(&u, &u).unwrap()
    }

    fn proj1(i: usize) -> CMatrix {
        let mut m = CMatrix::zeros(2, 2);
        m[(i, i)] = Complex64::new(1.0, 0.0);
        m
    }

    #[test]
    fn unit_witness_values() {
        let unit = MultiElement::unit(2, p(0.5));
        let v = pd_witness_value(&unit, &unit).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let x = forward(&DensityOp::singlet(), &fund2(0.5)).unwrap();
        let v = pd_witness_value(&x, &unit).unwrap();
        assert!(v.re >= -1e-12 && v.im.abs() < 1e-12);
    }

    #[test]
    fn singlet_is_pd_but_not_ppt() {
        let q = 0.5;
        let cat = default_catalog(p(q)).unwrap();
        let x = forward(&DensityOp::singlet(), &fund2(q)).unwrap();
        let r = is_positive_definite(&x, &cat).unwrap();
        assert_eq!(r.verdict, PdVerdict::PositiveDefinite);
        assert!(r.witness.is_none());

        let r = ppt_check(&x, &cat).unwrap();
        assert_eq!(r.verdict, PdVerdict::NotPositiveDefinite);
        let worst = r.min_block().unwrap();
        assert_eq!(worst.label, "fund:fund");
        assert!(worst.min_eigenvalue < 0.0);
        let b = r.witness.unwrap();
        let v = pd_witness_value(&hopf::partial_theta(&x).unwrap(), &b).unwrap();
        assert!(v.re < -1e-9, "{v}");
    }

    #[test]
    fn witness_absent_for_positive_blocks() {
        let q = 0.5;
        for rho in [DensityOp::singlet(), DensityOp::maximally_mixed((2, 2))] {
            let x = forward(&rho, &fund2(q)).unwrap();
            assert!(find_negative_witness(&x, &fund2(q)).unwrap().is_none());
        }
    }

    #[test]
    fn unit_with_trivial_catalog() {
        let t = trivial_corep(p(0.5));
        let cat = vec![product_corep(&t, &t).unwrap()];
        let r = is_positive_definite(&MultiElement::unit(2, p(0.5)), &cat).unwrap();
        assert_eq!(r.verdict, PdVerdict::PositiveDefinite);
        assert!((r.per_block[0].min_eigenvalue - 1.0).abs() < 1e-12);
        let r = ppt_check(&MultiElement::unit(2, p(0.5)), &cat).unwrap();
        assert!(r.is_positive_definite());
    }

    #[test]
    fn undecided_when_catalog_misses_support() {
        let q = 0.5;
        let x = forward(&DensityOp::singlet(), &fund2(q))
            .unwrap()
            .add(&MultiElement::unit(2, p(q)))
            .unwrap();
        let r = is_positive_definite(&x, &[fund2(q)]).unwrap();
        assert_eq!(r.verdict, PdVerdict::UndecidedSupport);
    }

    #[test]
    fn separable_build_product_state() {
        let q = 0.5;
        let u = fundamental_corep(p(q)).unwrap();
        let a = forward_single(&proj1(0), &u).unwrap();
        let b = forward_single(&proj1(1), &u).unwrap();
        let x = separable_build(&[(1.0, a, b)]).unwrap();
        let back = fourier::reconstruct(&x, &fund2(q)).unwrap();
        let expect = DensityOp::product_basis((2, 2), 0, 1).unwrap();
        assert!(linalg::max_abs(&(back - expect.matrix())) < 1e-9);
        assert!(ppt_check(&x, &default_catalog(p(q)).unwrap())
            .unwrap()
            .is_positive_definite());
    }

    #[test]
    fn separable_build_convexity_and_errors() {
        let q = 0.5;
        let one = Element::one(p(q));
        let x = separable_build(&[
            (0.5, one.clone(), one.clone()),
            (0.5, one.clone(), one.clone()),
        ])
        .unwrap();
        assert!(x.equal(&MultiElement::unit(2, p(q))));
        assert!(matches!(
            separable_build(&[(-0.1, one.clone(), one.clone())]),
            Err(Error::NegativeWeight(_))
        ));
        let u = fundamental_corep(p(q)).unwrap();
        let mut sigma = proj1(0);
        sigma[(1, 1)] = Complex64::new(-0.5, 0.0);
        let bad = forward_single(&sigma, &u).unwrap();
        assert!(matches!(
            separable_build(&[(1.0, one.clone(), bad)]),
            Err(Error::NotPositiveDefinite(_))
        ));
        assert!(separable_build(&[]).is_err());
    }

    #[test]
    fn ppt_matrix_examples() {
        let r = ppt_matrix(&DensityOp::singlet()).unwrap();
        assert!(!r.ppt);
        let expect = [-0.5, 0.5, 0.5, 0.5];
        for (got, want) in r.spectrum.iter().zip(expect) {
            assert!((got - want).abs() < 1e-9);
        }
        let r = ppt_matrix(&DensityOp::maximally_mixed((2, 2))).unwrap();
        assert!(r.ppt && r.spectrum.iter().all(|v| (v - 0.25).abs() < 1e-12));
        assert!(
            ppt_matrix(&DensityOp::product_basis((2, 2), 0, 1).unwrap())
                .unwrap()
                .ppt
        );
        let mut m = CMatrix::zeros(4, 4);
        m[(0, 1)] = Complex64::new(1.0, 0.0);
        let non_herm = DensityOp::new((2, 2), m).unwrap();
        assert!(matches!(ppt_matrix(&non_herm), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn tensor_pd_examples() {
        let q = 0.5;
        let u = fundamental_corep(p(q)).unwrap();
        let a = forward_single(&proj1(0), &u).unwrap();
        let half = CMatrix::identity(2, 2).scale(0.5);
        let b = forward_single(&half, &u).unwrap();
        let (x, cert) = tensor_pd(&a, &b).unwrap();
        assert_eq!(x.legs(), 2);
        assert!(cert
            .product_blocks
            .iter()
            .all(|blk| blk.min_eigenvalue >= -TOL_EIG));
        let one = Element::one(p(q));
        let (x, _) = tensor_pd(&one, &one).unwrap();
        assert!(x.equal(&MultiElement::unit(2, p(q))));
        let mut sigma = proj1(0);
        sigma[(1, 1)] = Complex64::new(-0.5, 0.0);
        let bad = forward_single(&sigma, &u).unwrap();
        assert!(tensor_pd(&bad, &one).is_err());
    }

    #[test]
    fn separability_decisions() {
        assert_eq!(
            decide_separability_2x2(&DensityOp::singlet()).unwrap(),
            Separability::Entangled
        );
        let mixed = DensityOp::new(
            (2, 2),
            DensityOp::product_basis((2, 2), 0, 1)
                .unwrap()
                .matrix()
                .scale(0.5)
                + DensityOp::product_basis((2, 2), 1, 0)
                    .unwrap()
                    .matrix()
                    .scale(0.5),
        )
        .unwrap();
        assert_eq!(
            decide_separability_2x2(&mixed).unwrap(),
            Separability::Separable
        );
        assert_eq!(
            decide_separability_2x2(&DensityOp::werner(1.0 / 3.0)).unwrap(),
            Separability::Separable
        );
        assert_eq!(
            decide_separability_2x2(&DensityOp::werner(0.5)).unwrap(),
            Separability::Entangled
        );
        assert!(matches!(
            decide_separability_2x2(&DensityOp::maximally_mixed((2, 3))),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            decide_separability_2x2(&DensityOp::singlet().scale(2.0)),
            Err(Error::NotState(_))
        ));
    }

    #[test]
    fn first_leg_theta_agrees_on_singlet() {
        let q = 0.5;
        let cat = default_catalog(p(q)).unwrap();
        let x = forward(&DensityOp::singlet(), &fund2(q)).unwrap();
        assert_eq!(
            ppt_check_first(&x, &cat).unwrap().verdict,
            PdVerdict::NotPositiveDefinite
        );
    }
}
