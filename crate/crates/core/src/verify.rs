//! Property suites over the whole engine, run at a chosen deformation.
//! Each check reports a measured value against a threshold.

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::corep::{self, fundamental_corep, product_corep, trivial_corep, Representation};
use crate::entangle::{self, PdVerdict, Separability};
use crate::error::{Error, Result};
use crate::fourier::{self, DensityOp};
use crate::haar::{self, Haar};
use crate::hopf::{self, MultiElement};
use crate::linalg::{self, CMatrix};
use crate::qalgebra::{AlgebraParams, Element, Monomial};
use crate::random;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Hopf,
    Haar,
    Corep,
    Fourier,
    Entangle,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Hopf,
        Suite::Haar,
        Suite::Corep,
        Suite::Fourier,
        Suite::Entangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Haar => "haar",
            Suite::Corep => "corep",
            Suite::Fourier => "fourier",
            Suite::Entangle => "entangle",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "hopf" => Suite::Hopf,
            "haar" => Suite::Haar,
            "corep" => Suite::Corep,
            "fourier" => Suite::Fourier,
            "entangle" => Suite::Entangle,
            "all" => Suite::All,
            other => return Err(Error::UnknownLabel(format!("suite {other}"))),
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    /// Passes when `value ≤ threshold`.
    pub fn at_most(name: &str, value: f64, threshold: f64) -> Check {
        Check {
            name: name.to_string(),
            value,
            threshold,
            passed: value <= threshold,
            detail: None,
        }
    }

    /// Passes when `value ≥ -threshold`.
    pub fn at_least_minus(name: &str, value: f64, threshold: f64) -> Check {
        Check {
            name: name.to_string(),
            value,
            threshold: -threshold,
            passed: value >= -threshold,
            detail: None,
        }
    }

    /// A count of failures that must be zero.
    pub fn none_failed(name: &str, failures: usize, out_of: usize) -> Check {
        Check::at_most(name, failures as f64, 0.0)
            .with_detail(format!("{failures}/{out_of} failed"))
    }

    pub fn with_detail(mut self, detail: String) -> Check {
        self.detail = Some(detail);
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {:.3e} ({} {:.1e})",
            if self.passed { "pass" } else { "FAIL" },
            self.name,
            self.value,
            if self.threshold < 0.0 {
                "floor"
            } else {
                "threshold"
            },
            self.threshold
        )?;
        if let Some(d) = &self.detail {
            write!(f, " {d}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub q: f64,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub params: AlgebraParams,
    pub seed: u64,
    /// Random draws for the larger sampled checks.
    pub samples: usize,
}

impl VerifyConfig {
    pub fn new(params: AlgebraParams) -> Self {
        VerifyConfig {
            params,
            seed: 0x5eed,
            samples: 100,
        }
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run(suite: Suite, config: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    suites.into_iter().map(|s| run_one(s, config)).collect()
}

fn run_one(suite: Suite, config: &VerifyConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let checks = match suite {
        Suite::Hopf => hopf_suite(config)?,
        Suite::Haar => haar_suite(config)?,
        Suite::Corep => corep_suite(config)?,
        Suite::Fourier => fourier_suite(config)?,
        Suite::Entangle => entangle_suite(config)?,
        Suite::All => unreachable!("expanded by run"),
    };
    Ok(SuiteReport {
        suite,
        q: config.params.q(),
        checks,
        seconds: start.elapsed().as_secs_f64(),
    })
}

const RESIDUAL: f64 = 1e-9;

fn rng_for(config: &VerifyConfig, suite: Suite) -> StdRng {
    StdRng::seed_from_u64(config.seed ^ (suite as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// `(Δ⊗id)Δx` vs `(id⊗Δ)Δx`.
pub fn coassociativity_residual(x: &Element) -> Result<f64> {
    let d = hopf::coproduct(x);
    Ok(hopf::coproduct_on_leg(&d, 0)?.distance(&hopf::coproduct_on_leg(&d, 1)?))
}

/// `(ε⊗id)Δx = x = (id⊗ε)Δx`.
pub fn counit_residual(x: &Element) -> Result<f64> {
    let d = hopf::coproduct(x);
    let target = MultiElement::from_element(x);
    let left = d.contract_leg(0, hopf::counit_monomial)?;
    let right = d.contract_leg(1, hopf::counit_monomial)?;
    Ok(left.distance(&target).max(right.distance(&target)))
}

/// `m(κ⊗id)Δx = ε(x)1 = m(id⊗κ)Δx`.
pub fn antipode_residual(x: &Element) -> Result<f64> {
    let params = x.params();
    let d = hopf::coproduct(x);
    let target = Element::scalar(hopf::counit(x), params);
    let left = d
        .map_leg(0, |m| hopf::coinverse_monomial(m, params))?
        .multiply_legs();
    let right = d
        .map_leg(1, |m| hopf::coinverse_monomial(m, params))?
        .multiply_legs();
    Ok(left.distance(&target).max(right.distance(&target)))
}

/// `Δκ(x) = (κ⊗κ)σΔx`.
pub fn anti_comultiplicativity_residual(x: &Element) -> Result<f64> {
    let lhs = hopf::coproduct(&hopf::coinverse(x));
    let rhs = hopf::product_coinverse(&hopf::coproduct(x).permute(&[1, 0])?)?;
    Ok(lhs.distance(&rhs))
}

fn max_over<I: IntoIterator<Item = Result<f64>>>(it: I) -> Result<f64> {
    it.into_iter().try_fold(0.0f64, |acc, v| Ok(acc.max(v?)))
}

fn hopf_suite(config: &VerifyConfig) -> Result<Vec<Check>> {
    let params = config.params;
    let mut rng = rng_for(config, Suite::Hopf);
    let u = fundamental_corep(params)?;
    let mut elems: Vec<Element> = u.entries().to_vec();
    for _ in 0..config.samples {
        elems.push(random::random_element(&mut rng, params, 3, 4));
    }
    let pairs: Vec<(Element, Element)> = (0..config.samples / 4)
        .map(|_| {
            (
                random::random_element(&mut rng, params, 2, 3),
                random::random_element(&mut rng, params, 2, 3),
            )
        })
        .collect();

    let mut checks = vec![
        Check::at_most(
            "coassociativity",
            max_over(elems.iter().map(coassociativity_residual))?,
            RESIDUAL,
        ),
        Check::at_most(
            "counit law",
            max_over(elems.iter().map(counit_residual))?,
            RESIDUAL,
        ),
        Check::at_most(
            "antipode law",
            max_over(elems.iter().map(antipode_residual))?,
            RESIDUAL,
        ),
        Check::at_most(
            "coproduct is a *-map",
            max_over(elems.iter().map(|x| {
                Ok(hopf::coproduct(&x.adjoint()).distance(&hopf::coproduct(x).adjoint()))
            }))?,
            RESIDUAL,
        ),
        Check::at_most(
            "anti-comultiplicativity of coinverse",
            max_over(elems.iter().map(anti_comultiplicativity_residual))?,
            RESIDUAL,
        ),
        Check::at_most(
            "theta is an involution",
            max_over(
                elems
                    .iter()
                    .map(|x| Ok(hopf::theta(&hopf::theta(x)).distance(x))),
            )?,
            RESIDUAL,
        ),
        Check::at_most(
            "coinverse squared",
            max_over(elems.iter().map(|x| {
                Ok(hopf::coinverse(&hopf::coinverse(x)).distance(&hopf::coinverse_squared(x)))
            }))?,
            RESIDUAL,
        ),
    ];

    let i = Complex64::new(0.0, 1.0);
    let mut mult: f64 = 0.0;
    let mut anti: f64 = 0.0;
    let mut theta_hom: f64 = 0.0;
    for (x, y) in &pairs {
        let xy = x.mul(y)?;
        mult =
            mult.max(hopf::coproduct(&xy).distance(&hopf::coproduct(x).mul(&hopf::coproduct(y))?));
        anti =
            anti.max(hopf::coinverse(&xy).distance(&hopf::coinverse(y).mul(&hopf::coinverse(x))?));
        theta_hom = theta_hom
            .max(hopf::theta(&xy).distance(&hopf::theta(x).mul(&hopf::theta(y))?))
            .max(hopf::theta(&x.scale(i)).distance(&hopf::theta(x).scale(-i)));
    }
    checks.push(Check::at_most(
        "coproduct is multiplicative",
        mult,
        RESIDUAL,
    ));
    checks.push(Check::at_most(
        "coinverse is anti-multiplicative",
        anti,
        RESIDUAL,
    ));
    checks.push(Check::at_most(
        "theta is an antilinear homomorphism",
        theta_hom,
        RESIDUAL,
    ));
    Ok(checks)
}

/// Gram matrix `h(m_μ* m_ν)` over all monomials of degree at most `d`.
pub fn gram_matrix(params: AlgebraParams, d: u32) -> CMatrix {
    let basis = Monomial::enumerate(d);
    let elems: Vec<Element> = basis
        .iter()
        .map(|m| Element::monomial(*m, params))
        .collect();
    let stars: Vec<Element> = elems.iter().map(Element::adjoint).collect();
    CMatrix::from_fn(basis.len(), basis.len(), |r, c| {
        stars[r].mul_unchecked(&elems[c]).haar()
    })
}

fn haar_suite(config: &VerifyConfig) -> Result<Vec<Check>> {
    let params = config.params;
    let mut rng = rng_for(config, Suite::Haar);
    let invariance = Monomial::enumerate(6)
        .iter()
        .map(|m| haar::invariance_residual(&Element::monomial(*m, params)))
        .fold(0.0, f64::max);
    let gram_min = linalg::min_eigenvalue(&gram_matrix(params, 2));

    let mut herm: f64 = 0.0;
    let mut pos_fail = 0;
    for _ in 0..config.samples {
        let x = random::random_element(&mut rng, params, 3, 5);
        herm = herm.max((x.adjoint().haar() - x.haar().conj()).norm());
        let v = x.adjoint().mul(&x)?.haar();
        if v.re < -params.tol() || v.im.abs() > params.tol() {
            pos_fail += 1;
        }
    }

    let u = fundamental_corep(params)?;
    let f = u.f_matrix();
    let lhs = u.entry(0, 1).mul(&u.entry(0, 1).adjoint())?.haar();
    let rhs = f[(1, 1)] / u.f_trace();

    Ok(vec![
        Check::at_most(
            "invariance on monomials of degree <= 6",
            invariance,
            RESIDUAL,
        ),
        Check::at_least_minus(
            "Gram matrix of degree <= 2, min eigenvalue",
            gram_min,
            1e-10,
        ),
        Check::at_most("h(x*) = conj h(x)", herm, RESIDUAL),
        Check::none_failed("h(x*x) >= 0", pos_fail, config.samples),
        Check::at_most("h(u12 u12*) = F22/tr F", (lhs - rhs).norm(), RESIDUAL).with_detail(
            format!("phi(1) = {:.12}", haar::cc_star_moment(1, params.q())),
        ),
    ])
}

fn corep_suite(config: &VerifyConfig) -> Result<Vec<Check>> {
    let params = config.params;
    let q = params.q();
    let u = fundamental_corep(params)?;
    let f = u.f_matrix();
    let expected = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
        Complex64::new(1.0 / q, 0.0),
        Complex64::new(q, 0.0),
    ]));
    let finv = f
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::NotPositiveDefinite("F".into()))?;
    let singles = [trivial_corep(params), u.clone()];
    let catalog = corep::default_catalog(params)?;

    let mut single_orth: f64 = 0.0;
    for a in &singles {
        for b in &singles {
            single_orth = single_orth.max(corep::orthogonality_check(a, b));
        }
    }
    let mut prod_orth: f64 = 0.0;
    for a in &catalog {
        for b in &catalog {
            prod_orth = prod_orth.max(corep::orthogonality_check(a, b));
        }
    }
    let worst = |g: &dyn Fn(&corep::ProductCorep) -> f64| catalog.iter().map(g).fold(0.0, f64::max);

    Ok(vec![
        Check::at_most("fundamental unitarity", u.unitarity_residual(), RESIDUAL),
        Check::at_most(
            "F = diag(1/q, q)",
            linalg::max_abs(&(f - &expected)),
            RESIDUAL,
        )
        .with_detail(format!(
            "F = diag({:.6}, {:.6})",
            f[(0, 0)].re,
            f[(1, 1)].re
        )),
        Check::at_most(
            "tr F = tr F^-1",
            (linalg::trace(f) - linalg::trace(&finv)).norm(),
            RESIDUAL,
        ),
        Check::at_most(
            "fundamental intertwining",
            u.intertwining_residual(),
            RESIDUAL,
        ),
        Check::at_most(
            "fundamental comultiplication",
            u.comultiplication_residual(),
            RESIDUAL,
        ),
        Check::at_most(
            "product comultiplication",
            worst(&|p| p.comultiplication_residual()),
            RESIDUAL,
        ),
        Check::at_most(
            "product coinverse",
            worst(&|p| p.coinverse_residual()),
            RESIDUAL,
        ),
        Check::at_most("product counit", worst(&|p| p.counit_residual()), RESIDUAL),
        Check::at_most(
            "product intertwining",
            worst(&|p| p.intertwining_residual()),
            RESIDUAL,
        ),
        Check::at_most("orthogonality over {triv, fund}", single_orth, RESIDUAL),
        Check::at_most("orthogonality over {triv, fund}^2", prod_orth, RESIDUAL),
    ])
}

fn fourier_suite(config: &VerifyConfig) -> Result<Vec<Check>> {
    let params = config.params;
    let mut rng = rng_for(config, Suite::Fourier);
    let u = fundamental_corep(params)?;
    let uu = product_corep(&u, &u)?;
    let catalog = corep::default_catalog(params)?;

    let mut round: f64 = 0.0;
    let mut norm: f64 = 0.0;
    let mut support: f64 = 0.0;
    let mut ppt: f64 = 0.0;
    let mut single: f64 = 0.0;
    for draw in 0..config.samples {
        let m = random::random_test_matrix(&mut rng, 4, draw);
        let rho = DensityOp::new((2, 2), m)?;
        let x = fourier::forward(&rho, &uu)?;
        round = round.max(linalg::max_abs(
            &(fourier::reconstruct(&x, &uu)? - rho.matrix()),
        ));
        norm = norm.max((fourier::normalization_check(&x)? - rho.trace()).norm());
        if draw % 2 == 0 {
            let lhs = hopf::partial_theta(&x)?;
            let rhs = fourier::forward(&rho.partial_transpose_second(), &uu)?;
            ppt = ppt.max(lhs.distance(&rhs));
        }
        if draw % 10 == 0 {
            support = support.max(fourier::support_residual(&x, &catalog)?);
            let s = random::random_hermitian(&mut rng, 2);
            let y = fourier::forward_single(&s, &u)?;
            single = single.max(linalg::max_abs(&(fourier::reconstruct(&y, &u)? - s)));
        }
    }

    let x = fourier::forward(&DensityOp::singlet(), &uu)?;
    let half = singlet_half_form(params);
    let eps = fourier::normalization_check(&x)?;

    Ok(vec![
        Check::at_most("round trip", round, 1e-8),
        Check::at_most("normalization equals trace", norm, 1e-10),
        Check::at_most("partial theta equals partial transpose", ppt, 1e-10),
        Check::at_most("support residual over {triv, fund}^2", support, RESIDUAL),
        Check::at_most("single-factor round trip", single, 1e-8),
        Check::at_most("singlet transform coefficients", x.distance(&half), 1e-12),
        Check::at_most(
            "singlet counit",
            (eps - Complex64::new(1.0, 0.0)).norm(),
            1e-12,
        ),
    ])
}

/// `½(a⊗a* + a*⊗a + c⊗c* + c*⊗c)`.
pub fn singlet_half_form(params: AlgebraParams) -> MultiElement {
    singlet_form(params, 0.5)
}

/// `s·(a⊗a* + a*⊗a + c⊗c* + c*⊗c)`.
pub fn singlet_form(params: AlgebraParams, s: f64) -> MultiElement {
    use crate::qalgebra::Gen::*;
    let g = |x| Monomial::generator(x);
    MultiElement::from_terms(
        2,
        params,
        [(A, AStar), (AStar, A), (C, CStar), (CStar, C)]
            .into_iter()
            .map(|(l, r)| (vec![g(l), g(r)], Complex64::new(s, 0.0))),
    )
    .expect("two legs")
}

fn entangle_suite(config: &VerifyConfig) -> Result<Vec<Check>> {
    let params = config.params;
    let tol = params.tol();
    let mut rng = rng_for(config, Suite::Entangle);
    let u = fundamental_corep(params)?;
    let uu = product_corep(&u, &u)?;
    let singles = corep::single_catalog(params)?;
    let catalog = corep::default_catalog(params)?;
    let mut checks = Vec::new();

    // PSD matrices map to PD transforms; every failure carries a witness
    let mut disagree = 0;
    let mut bad_witness = 0;
    let mut pd_elements = Vec::new();
    for draw in 0..config.samples {
        let rho = DensityOp::new((2, 2), random::random_test_matrix(&mut rng, 4, draw))?;
        let x = fourier::forward(&rho, &uu)?;
        let report = entangle::is_positive_definite(&x, &catalog)?;
        let pd = report.verdict == PdVerdict::PositiveDefinite;
        if pd != rho.is_psd(entangle::TOL_EIG) || report.verdict == PdVerdict::UndecidedSupport {
            disagree += 1;
        }
        match (&report.witness, report.verdict) {
            (Some(b), PdVerdict::NotPositiveDefinite) => {
                if entangle::pd_witness_value(&x, b)?.re >= -tol {
                    bad_witness += 1;
                }
            }
            (None, PdVerdict::NotPositiveDefinite) => bad_witness += 1,
            _ => {}
        }
        if pd && pd_elements.len() < 5 {
            pd_elements.push(x);
        }
    }
    checks.push(Check::none_failed(
        "PSD matrix iff PD transform",
        disagree,
        config.samples,
    ));
    checks.push(Check::none_failed(
        "negative witness for every non-PD transform",
        bad_witness,
        config.samples,
    ));

    // random witnesses never go negative on PD elements
    let n_witness = 50;
    let mut negative = 0;
    let mut worst = f64::INFINITY;
    if !pd_elements.is_empty() {
        for k in 0..n_witness {
            let b = random::random_multi_full(&mut rng, params, 2);
            let v = entangle::pd_witness_value(&pd_elements[k % pd_elements.len()], &b)?;
            worst = worst.min(v.re);
            if v.re < -tol {
                negative += 1;
            }
        }
    }
    checks.push(
        Check::none_failed("random witnesses on PD transforms", negative, n_witness)
            .with_detail(format!("min value {worst:.3e}")),
    );

    // PPT on both sides, and theta on either leg
    let mut states = vec![
        DensityOp::singlet(),
        DensityOp::werner(0.2),
        DensityOp::werner(1.0 / 3.0),
        DensityOp::werner(0.6),
    ];
    for _ in 0..config.samples / 2 {
        states.push(random::random_state(&mut rng, (2, 2)));
    }
    let mut ppt_disagree = 0;
    let mut leg_disagree = 0;
    for rho in &states {
        let x = fourier::forward(rho, &uu)?;
        let second = entangle::ppt_check(&x, &catalog)?.verdict;
        let first = entangle::ppt_check_first(&x, &catalog)?.verdict;
        if entangle::ppt_matrix(rho)?.ppt != (second == PdVerdict::PositiveDefinite) {
            ppt_disagree += 1;
        }
        if first != second {
            leg_disagree += 1;
        }
    }
    checks.push(Check::none_failed(
        "matrix PPT iff transform PPT",
        ppt_disagree,
        states.len(),
    ));
    checks.push(Check::none_failed(
        "theta on either leg",
        leg_disagree,
        states.len(),
    ));

    let spectrum = entangle::ppt_matrix(&DensityOp::singlet())?.spectrum;
    let expected = [-0.5, 0.5, 0.5, 0.5];
    let dev = spectrum
        .iter()
        .zip(expected)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    checks.push(Check::at_most(
        "singlet partial transpose spectrum",
        dev,
        RESIDUAL,
    ));

    let third = 1.0 / 3.0;
    let below = entangle::decide_separability_2x2(&DensityOp::werner(third - 0.05))?;
    let at = entangle::decide_separability_2x2(&DensityOp::werner(third))?;
    let above = entangle::decide_separability_2x2(&DensityOp::werner(third + 0.05))?;
    let flips = below == Separability::Separable
        && at == Separability::Separable
        && above == Separability::Entangled;
    checks.push(
        Check::none_failed("Werner verdict flips at p = 1/3", usize::from(!flips), 1)
            .with_detail(format!("{below} / {at} / {above}")),
    );

    // separable mixtures pass the quantum PPT test
    let mut sep_fail = 0;
    for _ in 0..config.samples {
        let x = entangle::separable_build(&random::random_separable_terms(&mut rng, &u)?)?;
        if !entangle::ppt_check(&x, &catalog)?.is_positive_definite() {
            sep_fail += 1;
        }
    }
    checks.push(Check::none_failed(
        "separable mixtures pass PPT",
        sep_fail,
        config.samples,
    ));

    let mut transfer_fail = 0;
    let n_transfer = (config.samples / 5).max(1);
    for _ in 0..n_transfer {
        let (rho, _) = random::random_separable_state(&mut rng, params)?;
        if entangle::decide_separability_2x2(&rho)? != Separability::Separable {
            transfer_fail += 1;
        }
    }
    checks.push(Check::none_failed(
        "reconstructed separable states are separable",
        transfer_fail,
        n_transfer,
    ));

    // product blocks of a⊗b are Kronecker products of factor blocks
    let mut kron_dev: f64 = 0.0;
    let mut kron_neg = 0;
    let n_pairs = 20;
    for _ in 0..n_pairs {
        let a = random::random_pd_single(&mut rng, &u)?;
        let b = random::random_pd_single(&mut rng, &u)?;
        let (x, cert) = entangle::tensor_pd(&a, &b)?;
        if cert
            .product_blocks
            .iter()
            .any(|blk| blk.min_eigenvalue < -entangle::TOL_EIG)
        {
            kron_neg += 1;
        }
        for alpha in &singles {
            for beta in &singles {
                let block = fourier::inverse(&x, &product_corep(alpha, beta)?)?;
                let kron = fourier::inverse(&a, alpha)?.kronecker(&fourier::inverse(&b, beta)?);
                kron_dev = kron_dev.max(linalg::max_abs(&(block - kron)));
            }
        }
    }
    checks.push(Check::at_most(
        "product blocks are Kronecker products",
        kron_dev,
        RESIDUAL,
    ));
    checks.push(Check::none_failed(
        "product blocks are PSD",
        kron_neg,
        n_pairs,
    ));

    Ok(checks)
}
