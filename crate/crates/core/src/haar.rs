//! The Haar state on SU_q(2) and on the direct square.
//!
//! On the normal-ordered basis the state vanishes unless the monomial is a
//! power of `cc*`, and
//!
//! ```text
//! h((cc*)^m) = q^m / (1 + q² + ... + q^{2m})
//! ```
//!
//! which is `q^m (1 − q²)/(1 − q^{2m+2})` for q < 1 and `1/(m+1)` at q = 1.
//! This is the unique solution of the two-sided invariance system
//! `(h⊗id)Δx = h(x)·1 = (id⊗h)Δx`; the test suite re-derives it from that
//! system.

use num_complex::Complex64;
use std::collections::HashMap;

use crate::error::Result;
use crate::hopf::{self, MultiElement};
use crate::qalgebra::{AlgebraParams, Element, Monomial};

/// h on a basis monomial.
pub fn haar_monomial(m: &Monomial, params: AlgebraParams) -> Complex64 {
    if m.k() > 0 || m.m() != m.n() {
        return Complex64::default();
    }
    Complex64::new(cc_star_moment(m.m(), params.q()), 0.0)
}

/// `h((cc*)^power)`.
pub fn cc_star_moment(power: u32, q: f64) -> f64 {
    let q2 = q * q;
    let mut norm = 0.0;
    let mut t = 1.0;
    for _ in 0..=power {
        norm += t;
        t *= q2;
    }
    q.powi(power as i32) / norm
}

/// `φ(m) = h((γγ*)^m)` for the rescaled generator `γ = q^{-1/2} c`, which
/// obeys `aa* + q²γγ* = 1`. Equals `(1 − q²)/(1 − q^{2m+2})`, so
/// `φ(1) = 1/(1 + q²)`, and `1/(m+1)` at q = 1.
pub fn gamma_moment(power: u32, q: f64) -> f64 {
    cc_star_moment(power, q) / q.powi(power as i32)
}

/// Elements on which the Haar state can be evaluated.
pub trait Haar {
    fn haar(&self) -> Complex64;
}

impl Haar for Element {
    fn haar(&self) -> Complex64 {
        let params = self.params();
        self.terms()
            .map(|(m, c)| c * haar_monomial(m, params))
            .sum()
    }
}

impl Haar for MultiElement {
    /// `h ⊗ ... ⊗ h`.
    fn haar(&self) -> Complex64 {
        let params = self.params();
        self.evaluate(|_, m| haar_monomial(m, params))
    }
}

pub fn haar<T: Haar + ?Sized>(x: &T) -> Complex64 {
    x.haar()
}

/// `h(a b)`, the functional `ha` evaluated at `b`.
pub fn translated_haar_left(a: &MultiElement, b: &MultiElement) -> Result<Complex64> {
    Ok(a.mul(b)?.haar())
}

/// `h(b a)`, the functional `ah` evaluated at `b`.
pub fn translated_haar_right(a: &MultiElement, b: &MultiElement) -> Result<Complex64> {
    Ok(b.mul(a)?.haar())
}

/// Memoised `h(x·y)` on pairs of basis monomials.
pub(crate) struct HaarProducts {
    params: AlgebraParams,
    cache: HashMap<(Monomial, Monomial), Complex64>,
}

impl HaarProducts {
    pub(crate) fn new(params: AlgebraParams) -> Self {
        HaarProducts {
            params,
            cache: HashMap::new(),
        }
    }

    pub(crate) fn get(&mut self, x: &Monomial, y: &Monomial) -> Complex64 {
        let params = self.params;
        *self.cache.entry((*x, *y)).or_insert_with(|| {
            crate::qalgebra::element::mul_monomials(x, y, params.q())
                .into_iter()
                .map(|(m, f)| haar_monomial(&m, params) * f)
                .sum()
        })
    }

    /// `h(x·y)` for an element `x` and a basis monomial `y`.
    pub(crate) fn left_elem(&mut self, x: &Element, y: &Monomial) -> Complex64 {
        x.terms().map(|(m, c)| c * self.get(m, y)).sum()
    }

    /// `h(x·y)` for a basis monomial `x` and an element `y`.
    pub(crate) fn right_elem(&mut self, x: &Monomial, y: &Element) -> Complex64 {
        y.terms().map(|(m, c)| c * self.get(x, m)).sum()
    }
}

/// `((hb)* ∗ hb)(a) = ((hb)* ⊗ hb)Δa`, with `(hb)(y) = h(b y)` and the
/// functional involution `η*(y) = conj(η(κ(y)*))`.
pub fn convolve_check(a: &MultiElement, b: &MultiElement) -> Result<Complex64> {
    a.expect_legs(2)?;
    b.expect_legs(2)?;
    a.params().check_same(&b.params())?;
    let params = a.params();
    let delta = hopf::product_coproduct(a)?;
    let mut hp = HaarProducts::new(params);

    // η(m0⊗m1) = Σ_t β_t h(t0 m0) h(t1 m1)
    let eta = |hp: &mut HaarProducts, y0: &Element, y1: &Element| -> Complex64 {
        b.terms()
            .map(|(t, beta)| beta * hp.right_elem(&t[0], y0) * hp.right_elem(&t[1], y1))
            .sum()
    };

    let mut star_cache: HashMap<(Monomial, Monomial), Complex64> = HashMap::new();
    let mut plain_cache: HashMap<(Monomial, Monomial), Complex64> = HashMap::new();
    let mut total = Complex64::default();
    for (key, c) in delta.terms() {
        let first = (key[0], key[1]);
        let l = match star_cache.get(&first) {
            Some(v) => *v,
            None => {
                // κ(y)* leg-wise on a basis tuple is θ on each leg
                let y0 = hopf::theta_monomial(&key[0], params);
                let y1 = hopf::theta_monomial(&key[1], params);
                let v = eta(&mut hp, &y0, &y1).conj();
                star_cache.insert(first, v);
                v
            }
        };
        if l == Complex64::default() {
            continue;
        }
        let second = (key[2], key[3]);
        let r = match plain_cache.get(&second) {
            Some(v) => *v,
            None => {
                let y0 = Element::monomial(key[2], params);
                let y1 = Element::monomial(key[3], params);
                let v = eta(&mut hp, &y0, &y1);
                plain_cache.insert(second, v);
                v
            }
        };
        total += c * l * r;
    }
    Ok(total)
}

fn leg_to_element(x: &MultiElement) -> Element {
    Element::from_terms(x.params(), x.terms().map(|(k, c)| (k[0], *c)))
}

/// Largest coefficient deviation of `(h⊗id)Δx` and `(id⊗h)Δx` from
/// `h(x)·1`.
pub fn invariance_residual(x: &Element) -> f64 {
    let params = x.params();
    let delta = hopf::coproduct(x);
    let expect = Element::scalar(x.haar(), params);
    let mut worst: f64 = 0.0;
    for leg in 0..2 {
        let contracted = delta
            .contract_leg(leg, |m| haar_monomial(m, params))
            .expect("two legs");
        worst = worst.max(leg_to_element(&contracted).distance(&expect));
    }
    worst
}
