//! Hopf structure maps of SU_q(2) and of its direct square.
//!
//! On generators:
//!
//! ```text
//! Δ(a) = a⊗a − c⊗c*       Δ(c) = a⊗c + c⊗a*
//! ε(a) = ε(a*) = 1         ε(c) = ε(c*) = 0
//! κ(a) = a*   κ(c) = −q⁻¹c   κ(c*) = −q c*   κ(a*) = a
//! ```
//!
//! Δ is fixed by requiring the fundamental matrix
//! `[[a, √q c], [−q^{-1/2} c*, a*]]` to be a corepresentation.
//!
//! The direct square `A⊗A` carries `Δ = (id⊗σ⊗id)(Δ⊗Δ)`, with the output
//! legs ordered `(A, B, A, B)`, and leg-wise counit and coinverse.

mod multi;

pub use multi::MultiElement;

use num_complex::Complex64;

use crate::error::Result;
use crate::qalgebra::{AlgebraParams, Element, Gen, Monomial};

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn mono2(params: AlgebraParams, terms: &[(Monomial, Monomial, f64)]) -> MultiElement {
    MultiElement::from_terms(
        2,
        params,
        terms
            .iter()
            .map(|(x, y, c)| (vec![*x, *y], Complex64::new(*c, 0.0))),
    )
    .expect("two legs")
}

/// Coproduct of a single generator.
pub fn coproduct_generator(g: Gen, params: AlgebraParams) -> MultiElement {
    let a = Monomial::generator(Gen::A);
    let ad = Monomial::generator(Gen::AStar);
    let c = Monomial::generator(Gen::C);
    let cd = Monomial::generator(Gen::CStar);
    match g {
        Gen::A => mono2(params, &[(a, a, 1.0), (c, cd, -1.0)]),
        Gen::AStar => mono2(params, &[(ad, ad, 1.0), (cd, c, -1.0)]),
        Gen::C => mono2(params, &[(a, c, 1.0), (c, ad, 1.0)]),
        Gen::CStar => mono2(params, &[(ad, cd, 1.0), (cd, a, 1.0)]),
    }
}

fn power(x: &MultiElement, e: u32) -> MultiElement {
    let mut acc = MultiElement::unit(x.legs(), x.params());
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base).expect("same legs");
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base).expect("same legs");
        }
    }
    acc
}

/// Coproduct of a basis monomial, as the product of generator coproducts.
pub fn coproduct_monomial(m: &Monomial, params: AlgebraParams) -> MultiElement {
    let lead = match m.sector() {
        crate::qalgebra::Sector::Plain => Gen::A,
        crate::qalgebra::Sector::Star => Gen::AStar,
    };
    let mut acc = power(&coproduct_generator(lead, params), m.k());
    if m.m() > 0 {
        acc = acc
            .mul(&power(&coproduct_generator(Gen::C, params), m.m()))
            .expect("same legs");
    }
    if m.n() > 0 {
        acc = acc
            .mul(&power(&coproduct_generator(Gen::CStar, params), m.n()))
            .expect("same legs");
    }
    acc
}

/// Δ: the multiplicative, *-preserving coproduct.
pub fn coproduct(x: &Element) -> MultiElement {
    let params = x.params();
    let mut out = MultiElement::zero(2, params);
    for (m, c) in x.terms() {
        out.add_scaled(&coproduct_monomial(m, params), *c)
            .expect("same legs");
    }
    out
}

/// ε on a basis monomial.
pub fn counit_monomial(m: &Monomial) -> Complex64 {
    if m.m() == 0 && m.n() == 0 {
        one()
    } else {
        Complex64::default()
    }
}

/// ε: the unital character with ε(a) = ε(a*) = 1 and ε(c) = ε(c*) = 0.
pub fn counit(x: &Element) -> Complex64 {
    x.terms().map(|(m, c)| c * counit_monomial(m)).sum()
}

fn coinverse_generator(g: Gen, params: AlgebraParams) -> Element {
    let q = params.q();
    match g {
        Gen::A => Element::generator(Gen::AStar, params),
        Gen::AStar => Element::generator(Gen::A, params),
        Gen::C => Element::generator(Gen::C, params).scale(Complex64::new(-1.0 / q, 0.0)),
        Gen::CStar => Element::generator(Gen::CStar, params).scale(Complex64::new(-q, 0.0)),
    }
}

/// κ on a basis monomial: the images of the generators multiplied in
/// reverse order.
pub fn coinverse_monomial(m: &Monomial, params: AlgebraParams) -> Element {
    let mut acc = Element::one(params);
    for g in m.word().into_iter().rev() {
        acc = acc.mul_unchecked(&coinverse_generator(g, params));
    }
    acc
}

/// κ: the linear antihomomorphism with κ(u_ij) = u*_ji.
pub fn coinverse(x: &Element) -> Element {
    let params = x.params();
    let mut out = Element::zero(params);
    for (m, c) in x.terms() {
        out.add_scaled(&coinverse_monomial(m, params), *c);
    }
    out
}

/// κ², a homomorphism rescaling `a^k c^m c*^n` by `q^{2(n−m)}`.
pub fn coinverse_squared(x: &Element) -> Element {
    let q = x.params().q();
    Element::from_terms(
        x.params(),
        x.terms().map(|(m, c)| {
            let e = 2 * (m.n() as i32 - m.m() as i32);
            (*m, c * q.powi(e))
        }),
    )
}

/// θ(x) = κ(x)*, the antilinear "transposition" homomorphism.
pub fn theta(x: &Element) -> Element {
    coinverse(x).adjoint()
}

/// θ on a basis monomial (coefficient one, so antilinearity is moot).
pub fn theta_monomial(m: &Monomial, params: AlgebraParams) -> Element {
    coinverse_monomial(m, params).adjoint()
}

/// Δ on the direct square, `(id⊗σ⊗id)(Δ_A⊗Δ_B)`; output legs `(A, B, A, B)`.
pub fn product_coproduct(x: &MultiElement) -> Result<MultiElement> {
    x.expect_legs(2)?;
    let params = x.params();
    // (Δ_A ⊗ Δ_B) gives legs (A, A', B, B'); the flip brings them to (A, B, A', B').
    let expanded = x
        .expand_leg(1, 2, |m| coproduct_monomial(m, params))?
        .expand_leg(0, 2, |m| coproduct_monomial(m, params))?;
    expanded.permute(&[0, 2, 1, 3])
}

/// ε_A ⊗ ε_B.
pub fn product_counit(x: &MultiElement) -> Result<Complex64> {
    x.expect_legs(2)?;
    Ok(x.evaluate(|_, m| counit_monomial(m)))
}

/// κ_A ⊗ κ_B, applied leg-wise with coefficients untouched.
pub fn product_coinverse(x: &MultiElement) -> Result<MultiElement> {
    x.expect_legs(2)?;
    let params = x.params();
    Ok(x.map_legs(|_, m| coinverse_monomial(m, params), false))
}

/// `id ⊗ θ` on the monomial basis of the second leg. θ is antilinear, so
/// this is a basis-dependent linear map; stored coefficients are not
/// conjugated. On transforms it realises the partial transpose.
pub fn partial_theta(x: &MultiElement) -> Result<MultiElement> {
    x.expect_legs(2)?;
    let params = x.params();
    x.map_leg(1, |m| theta_monomial(m, params))
}

/// `θ ⊗ id`, same convention as [`partial_theta`].
pub fn partial_theta_first(x: &MultiElement) -> Result<MultiElement> {
    x.expect_legs(2)?;
    let params = x.params();
    x.map_leg(0, |m| theta_monomial(m, params))
}

/// `(Δ ⊗ id)` on a two-leg element.
pub fn coproduct_on_leg(x: &MultiElement, leg: usize) -> Result<MultiElement> {
    let params = x.params();
    x.expand_leg(leg, 2, |m| coproduct_monomial(m, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::Element;

    fn p(q: f64) -> AlgebraParams {
        AlgebraParams::with_q(q).unwrap()
    }

    fn g(x: Gen, q: f64) -> Element {
        Element::generator(x, p(q))
    }

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn t(x: &Element, y: &Element) -> MultiElement {
        MultiElement::tensor(x, y).unwrap()
    }

    #[test]
    fn coproduct_of_a() {
        let q = 0.5;
        let d = coproduct(&g(Gen::A, q));
        let expect = t(&g(Gen::A, q), &g(Gen::A, q))
            .sub(&t(&g(Gen::C, q), &g(Gen::CStar, q)))
            .unwrap();
        assert!(d.equal(&expect), "{d}");
    }

    #[test]
    fn coproduct_of_unit_and_astar() {
        let q = 0.5;
        assert!(coproduct(&Element::one(p(q))).equal(&MultiElement::unit(2, p(q))));
        let d = coproduct(&g(Gen::AStar, q));
        let expect = t(&g(Gen::AStar, q), &g(Gen::AStar, q))
            .sub(&t(&g(Gen::CStar, q), &g(Gen::C, q)))
            .unwrap();
        assert!(d.equal(&expect));
        assert!(coproduct(&g(Gen::A, q)).adjoint().equal(&d));
    }

    #[test]
    fn coproduct_is_multiplicative_on_relations() {
        // Δ(a)Δ(c) = q Δ(c)Δ(a)
        for q in [0.3, 0.5, 1.0] {
            let da = coproduct(&g(Gen::A, q));
            let dc = coproduct(&g(Gen::C, q));
            let lhs = da.mul(&dc).unwrap();
            let rhs = dc.mul(&da).unwrap().scale(re(q));
            assert!(lhs.equal(&rhs), "q = {q}");
        }
    }

    #[test]
    fn counit_examples() {
        let q = 0.5;
        assert_eq!(counit(&g(Gen::A, q)), re(1.0));
        assert_eq!(counit(&g(Gen::C, q)), re(0.0));
        let x = &g(Gen::A, q).pow(2) - &(&g(Gen::C, q) * &g(Gen::CStar, q)).scale(re(3.0));
        assert!((counit(&x) - re(1.0)).norm() < 1e-12);
    }

    #[test]
    fn coinverse_examples() {
        let q = 0.5;
        assert!(coinverse(&g(Gen::C, q)).equal(&g(Gen::C, q).scale(re(-1.0 / q))));
        assert!(coinverse(&Element::one(p(q))).equal(&Element::one(p(q))));
        let ac = &g(Gen::A, q) * &g(Gen::C, q);
        let expect = (&g(Gen::AStar, q) * &g(Gen::C, q)).scale(re(-1.0));
        assert!(coinverse(&ac).equal(&expect));
    }

    #[test]
    fn coinverse_squared_matches_composition() {
        let q = 0.5;
        assert!(coinverse_squared(&g(Gen::C, q)).equal(&g(Gen::C, q).scale(re(4.0))));
        assert!(coinverse_squared(&g(Gen::A, q)).equal(&g(Gen::A, q)));
        assert!(coinverse_squared(&g(Gen::CStar, q)).equal(&g(Gen::CStar, q).scale(re(0.25))));
        for m in Monomial::enumerate(3) {
            let x = Element::monomial(m, p(q));
            assert!(
                coinverse_squared(&x).equal(&coinverse(&coinverse(&x))),
                "{m}"
            );
        }
    }

    #[test]
    fn theta_examples() {
        let q = 0.5;
        assert!(theta(&g(Gen::A, q)).equal(&g(Gen::A, q)));
        assert!(theta(&g(Gen::C, q)).equal(&g(Gen::CStar, q).scale(re(-1.0 / q))));
        assert!(theta(&g(Gen::CStar, q)).equal(&g(Gen::C, q).scale(re(-q))));
        // antilinear
        let ic = g(Gen::C, q).scale(Complex64::i());
        assert!(theta(&ic).equal(&theta(&g(Gen::C, q)).scale(-Complex64::i())));
    }

    #[test]
    fn product_coproduct_of_a_on_first_leg() {
        let q = 0.5;
        let one = Element::one(p(q));
        let x = t(&g(Gen::A, q), &one);
        let d = product_coproduct(&x).unwrap();
        let a = Monomial::generator(Gen::A);
        let c = Monomial::generator(Gen::C);
        let cd = Monomial::generator(Gen::CStar);
        let u = Monomial::UNIT;
        let expect = MultiElement::from_terms(
            4,
            p(q),
            [(vec![a, u, a, u], re(1.0)), (vec![c, u, cd, u], re(-1.0))],
        )
        .unwrap();
        assert!(d.equal(&expect), "{d}");
        let unit = product_coproduct(&MultiElement::unit(2, p(q))).unwrap();
        assert!(unit.equal(&MultiElement::unit(4, p(q))));
    }

    #[test]
    fn product_counit_and_coinverse() {
        let q = 0.5;
        let x = t(&g(Gen::A, q), &g(Gen::AStar, q));
        assert!((product_counit(&x).unwrap() - re(1.0)).norm() < 1e-12);
        let y = t(&g(Gen::C, q), &g(Gen::A, q));
        assert_eq!(product_counit(&y).unwrap(), re(0.0));
        let k = product_coinverse(&y).unwrap();
        assert!(k.equal(&t(&g(Gen::C, q).scale(re(-1.0 / q)), &g(Gen::AStar, q))));
        assert!(product_counit(&MultiElement::unit(3, p(q))).is_err());
    }

    #[test]
    fn partial_theta_examples() {
        let q = 0.5;
        let x = t(&g(Gen::A, q), &g(Gen::C, q));
        let expect = t(&g(Gen::A, q), &g(Gen::CStar, q)).scale(re(-1.0 / q));
        assert!(partial_theta(&x).unwrap().equal(&expect));
        let unit = MultiElement::unit(2, p(q));
        assert!(partial_theta(&unit).unwrap().equal(&unit));
        // coefficients are not conjugated
        let ix = x.scale(Complex64::i());
        assert!(partial_theta(&ix)
            .unwrap()
            .equal(&expect.scale(Complex64::i())));
    }
}
