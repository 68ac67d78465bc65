//! Seeded samplers for property checks: random elements, hermitian
//! matrices, states and positive definite single-factor elements.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::corep::{fundamental_corep, product_corep, Corep, Representation};
use crate::error::Result;
use crate::fourier::{self, DensityOp};
use crate::hopf::MultiElement;
use crate::linalg::CMatrix;
use crate::qalgebra::{AlgebraParams, Element, Monomial};

pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// `n_terms` distinct monomials of degree at most `max_degree` with
/// complex Gaussian coefficients.
pub fn random_element<R: Rng + ?Sized>(
    rng: &mut R,
    params: AlgebraParams,
    max_degree: u32,
    n_terms: usize,
) -> Element {
    let basis = Monomial::enumerate(max_degree);
    let picked: Vec<Monomial> = basis
        .choose_multiple(rng, n_terms.min(basis.len()))
        .copied()
        .collect();
    Element::from_terms(
        params,
        picked.into_iter().map(|m| (m, complex_gaussian(rng))),
    )
}

/// Gaussian coefficients on every basis tuple of degree at most
/// `max_degree` per leg.
pub fn random_multi_full<R: Rng + ?Sized>(
    rng: &mut R,
    params: AlgebraParams,
    max_degree: u32,
) -> MultiElement {
    let basis = Monomial::enumerate(max_degree);
    let mut terms = Vec::with_capacity(basis.len() * basis.len());
    for m0 in &basis {
        for m1 in &basis {
            terms.push((vec![*m0, *m1], complex_gaussian(rng)));
        }
    }
    MultiElement::from_terms(2, params, terms).expect("two legs")
}

pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, d: usize) -> CMatrix {
    let g = CMatrix::from_fn(d, d, |_, _| complex_gaussian(rng));
    (&g + g.adjoint()).scale(0.5)
}

/// `G G†` for a `d × rank` Gaussian `G`.
pub fn random_psd<R: Rng + ?Sized>(rng: &mut R, d: usize, rank: usize) -> CMatrix {
    let g = CMatrix::from_fn(d, rank, |_, _| complex_gaussian(rng));
    &g * g.adjoint()
}

/// Hermitian test matrices: even draws are PSD of random rank, odd draws
/// are Gaussian hermitian (almost always indefinite).
pub fn random_test_matrix<R: Rng + ?Sized>(rng: &mut R, d: usize, draw: usize) -> CMatrix {
    if draw.is_multiple_of(2) {
        let rank = rng.gen_range(1..=d);
        random_psd(rng, d, rank)
    } else {
        random_hermitian(rng, d)
    }
}

/// A density operator of random rank on `dims`.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R, dims: (usize, usize)) -> DensityOp {
    let d = dims.0 * dims.1;
    let rank = rng.gen_range(1..=d);
    let m = random_psd(rng, d, rank);
    let tr = m.trace().re;
    DensityOp::new(dims, m.unscale(tr)).expect("square")
}

/// `t·1 + forward₁(σ)` with `t ≥ 0` and `σ ≥ 0`: positive definite on both
/// blocks of `{triv, fund}`.
pub fn random_pd_single<R: Rng + ?Sized>(rng: &mut R, u: &Corep) -> Result<Element> {
    let rank = rng.gen_range(1..=2);
    let sigma = random_psd(rng, 2, rank);
    let t: f64 = rng.gen_range(0.0..1.0);
    let mut x = fourier::forward_single(&sigma, u)?;
    x.add_scaled(&Element::one(u.params()), Complex64::new(t, 0.0));
    Ok(x)
}

/// Between one and four product terms with random weights.
pub fn random_separable_terms<R: Rng + ?Sized>(
    rng: &mut R,
    u: &Corep,
) -> Result<Vec<(f64, Element, Element)>> {
    let n = rng.gen_range(1..=4);
    (0..n)
        .map(|_| {
            Ok((
                rng.gen_range(0.0..1.0),
                random_pd_single(rng, u)?,
                random_pd_single(rng, u)?,
            ))
        })
        .collect()
}

/// A separable two-qubit state `Σ p σ_λ ⊗ τ_λ` and the matching transform
/// built through [`crate::entangle::separable_build`] with fundamental
/// factors only.
pub fn random_separable_state<R: Rng + ?Sized>(
    rng: &mut R,
    params: AlgebraParams,
) -> Result<(DensityOp, MultiElement)> {
    let u = fundamental_corep(params)?;
    let n = rng.gen_range(1..=4);
    let mut terms = Vec::with_capacity(n);
    let mut total = 0.0;
    for _ in 0..n {
        let w: f64 = rng.gen_range(0.05..1.0);
        let s = random_state(rng, (2, 1)).into_matrix();
        let t = random_state(rng, (2, 1)).into_matrix();
        total += w;
        terms.push((
            w,
            fourier::forward_single(&s, &u)?,
            fourier::forward_single(&t, &u)?,
        ));
    }
    for term in &mut terms {
        term.0 /= total;
    }
    let x = crate::entangle::separable_build(&terms)?;
    let rho = DensityOp::new((2, 2), fourier::reconstruct(&x, &product_corep(&u, &u)?)?)?;
    Ok((rho, x))
}
