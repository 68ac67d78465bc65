use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qalgebra::element::{fmt_coeff, mul_monomials};
use crate::qalgebra::{AlgebraParams, Element, Monomial};

/// An element of the `legs`-fold algebraic tensor power of the algebra.
#[derive(Clone, Debug)]
pub struct MultiElement {
    legs: usize,
    params: AlgebraParams,
    terms: BTreeMap<Vec<Monomial>, Complex64>,
}

impl MultiElement {
    pub fn zero(legs: usize, params: AlgebraParams) -> Self {
        assert!(legs >= 1, "a tensor element needs at least one leg");
        MultiElement {
            legs,
            params,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn unit(legs: usize, params: AlgebraParams) -> Self {
        let mut out = Self::zero(legs, params);
        out.terms
            .insert(vec![Monomial::UNIT; legs], Complex64::new(1.0, 0.0));
        out
    }

    pub fn from_terms<I>(legs: usize, params: AlgebraParams, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<Monomial>, Complex64)>,
    {
        let mut out = Self::zero(legs, params);
        for (key, c) in terms {
            if key.len() != legs {
                return Err(Error::LegMismatch {
                    expected: legs,
                    found: key.len(),
                });
            }
            *out.terms.entry(key).or_default() += c;
        }
        out.prune();
        Ok(out)
    }

    pub(crate) fn from_map(
        legs: usize,
        params: AlgebraParams,
        terms: BTreeMap<Vec<Monomial>, Complex64>,
    ) -> Self {
        let mut out = MultiElement {
            legs,
            params,
            terms,
        };
        out.prune();
        out
    }

    /// Embeds a single element as a one-leg tensor.
    pub fn from_element(x: &Element) -> Self {
        Self::from_map(
            1,
            x.params(),
            x.terms().map(|(m, c)| (vec![*m], *c)).collect(),
        )
    }

    /// `x ⊗ y`.
    pub fn tensor(x: &Element, y: &Element) -> Result<Self> {
        x.params().check_same(&y.params())?;
        let mut terms = BTreeMap::new();
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                *terms.entry(vec![*mx, *my]).or_default() += cx * cy;
            }
        }
        Ok(Self::from_map(2, x.params(), terms))
    }

    /// Concatenates the legs of `self` and `other`.
    pub fn tensor_with(&self, other: &MultiElement) -> Result<Self> {
        self.params.check_same(&other.params)?;
        let mut terms = BTreeMap::new();
        for (kx, cx) in &self.terms {
            for (ky, cy) in &other.terms {
                let mut key = kx.clone();
                key.extend_from_slice(ky);
                *terms.entry(key).or_default() += cx * cy;
            }
        }
        Ok(Self::from_map(self.legs + other.legs, self.params, terms))
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn params(&self) -> AlgebraParams {
        self.params
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Complex64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[Monomial]) -> Complex64 {
        self.terms.get(key).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn expect_legs(&self, legs: usize) -> Result<()> {
        if self.legs != legs {
            return Err(Error::LegMismatch {
                expected: legs,
                found: self.legs,
            });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &MultiElement) -> Result<()> {
        self.params.check_same(&other.params)?;
        other.expect_legs(self.legs)
    }

    pub(crate) fn prune(&mut self) {
        let tol = self.params.tol();
        self.terms.retain(|_, c| c.norm() > tol);
    }

    pub fn add_scaled(&mut self, other: &MultiElement, c: Complex64) -> Result<()> {
        self.check_compatible(other)?;
        for (k, v) in &other.terms {
            *self.terms.entry(k.clone()).or_default() += c * v;
        }
        self.prune();
        Ok(())
    }

    pub fn add(&self, other: &MultiElement) -> Result<MultiElement> {
        let mut out = self.clone();
        out.add_scaled(other, Complex64::new(1.0, 0.0))?;
        Ok(out)
    }

    pub fn sub(&self, other: &MultiElement) -> Result<MultiElement> {
        let mut out = self.clone();
        out.add_scaled(other, Complex64::new(-1.0, 0.0))?;
        Ok(out)
    }

    pub fn scale(&self, c: Complex64) -> MultiElement {
        Self::from_map(
            self.legs,
            self.params,
            self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        )
    }

    /// Leg-wise product `(x₁⊗x₂)(y₁⊗y₂) = x₁y₁ ⊗ x₂y₂`.
    pub fn mul(&self, other: &MultiElement) -> Result<MultiElement> {
        self.check_compatible(other)?;
        let q = self.params.q();
        let mut terms: BTreeMap<Vec<Monomial>, Complex64> = BTreeMap::new();
        for (kx, cx) in &self.terms {
            for (ky, cy) in &other.terms {
                let mut partial: Vec<(Vec<Monomial>, f64)> =
                    vec![(Vec::with_capacity(self.legs), 1.0)];
                for (mx, my) in kx.iter().zip(ky) {
                    let leg = mul_monomials(mx, my, q);
                    let mut next = Vec::with_capacity(partial.len() * leg.len());
                    for (key, f) in &partial {
                        for (m, g) in &leg {
                            let mut k = key.clone();
                            k.push(*m);
                            next.push((k, f * g));
                        }
                    }
                    partial = next;
                }
                let c = cx * cy;
                for (key, f) in partial {
                    *terms.entry(key).or_default() += c * f;
                }
            }
        }
        Ok(Self::from_map(self.legs, self.params, terms))
    }

    /// Leg-wise *-involution, `(x⊗y)* = x*⊗y*`.
    pub fn adjoint(&self) -> MultiElement {
        self.map_legs(|_, m| Element::monomial(*m, self.params).adjoint(), true)
    }

    /// Applies, on every leg, the basis map `f(leg, monomial)` and extends
    /// multilinearly. With `conjugate` the stored coefficients are
    /// conjugated, as for an antilinear map applied to every leg.
    pub fn map_legs<F>(&self, f: F, conjugate: bool) -> MultiElement
    where
        F: Fn(usize, &Monomial) -> Element,
    {
        let mut terms: BTreeMap<Vec<Monomial>, Complex64> = BTreeMap::new();
        for (key, c) in &self.terms {
            let mut partial: Vec<(Vec<Monomial>, Complex64)> = vec![(
                Vec::with_capacity(self.legs),
                if conjugate { c.conj() } else { *c },
            )];
            for (leg, m) in key.iter().enumerate() {
                let image = f(leg, m);
                let mut next = Vec::with_capacity(partial.len() * image.len());
                for (k, v) in &partial {
                    for (im, ic) in image.terms() {
                        let mut k2 = k.clone();
                        k2.push(*im);
                        next.push((k2, v * ic));
                    }
                }
                partial = next;
            }
            for (k, v) in partial {
                *terms.entry(k).or_default() += v;
            }
        }
        Self::from_map(self.legs, self.params, terms)
    }

    /// Applies the basis map `f` on leg `leg` only, keeping coefficients.
    pub fn map_leg<F>(&self, leg: usize, f: F) -> Result<MultiElement>
    where
        F: Fn(&Monomial) -> Element,
    {
        self.check_leg(leg)?;
        let params = self.params;
        Ok(self.map_legs(
            |l, m| {
                if l == leg {
                    f(m)
                } else {
                    Element::monomial(*m, params)
                }
            },
            false,
        ))
    }

    /// Replaces leg `leg` by the multi-leg image `f(monomial)`, e.g. to form
    /// `(Δ ⊗ id)`. The result has `legs - 1 + k` legs where `k` is the leg
    /// count of every image.
    pub fn expand_leg<F>(&self, leg: usize, image_legs: usize, f: F) -> Result<MultiElement>
    where
        F: Fn(&Monomial) -> MultiElement,
    {
        self.check_leg(leg)?;
        let mut terms: BTreeMap<Vec<Monomial>, Complex64> = BTreeMap::new();
        for (key, c) in &self.terms {
            let image = f(&key[leg]);
            image.expect_legs(image_legs)?;
            for (ik, ic) in &image.terms {
                let mut k = Vec::with_capacity(self.legs - 1 + image_legs);
                k.extend_from_slice(&key[..leg]);
                k.extend_from_slice(ik);
                k.extend_from_slice(&key[leg + 1..]);
                *terms.entry(k).or_default() += c * ic;
            }
        }
        Ok(Self::from_map(
            self.legs - 1 + image_legs,
            self.params,
            terms,
        ))
    }

    /// Evaluates a functional on leg `leg`, removing that leg.
    pub fn contract_leg<F>(&self, leg: usize, f: F) -> Result<MultiElement>
    where
        F: Fn(&Monomial) -> Complex64,
    {
        self.check_leg(leg)?;
        if self.legs == 1 {
            return Err(Error::Unsupported(
                "contracting the only leg; use a scalar evaluation".into(),
            ));
        }
        let mut terms: BTreeMap<Vec<Monomial>, Complex64> = BTreeMap::new();
        for (key, c) in &self.terms {
            let v = f(&key[leg]);
            if v == Complex64::default() {
                continue;
            }
            let mut k = key.clone();
            k.remove(leg);
            *terms.entry(k).or_default() += c * v;
        }
        Ok(Self::from_map(self.legs - 1, self.params, terms))
    }

    /// Reorders legs: leg `i` of the output is leg `order[i]` of the input.
    pub fn permute(&self, order: &[usize]) -> Result<MultiElement> {
        let mut seen = vec![false; self.legs];
        if order.len() != self.legs
            || order
                .iter()
                .any(|&i| i >= self.legs || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::Format(format!(
                "{order:?} is not a permutation of {} legs",
                self.legs
            )));
        }
        Ok(Self::from_map(
            self.legs,
            self.params,
            self.terms
                .iter()
                .map(|(k, c)| (order.iter().map(|&i| k[i]).collect(), *c))
                .collect(),
        ))
    }

    /// Multiplies the legs together in order, `x₁⊗...⊗x_n ↦ x₁···x_n`.
    pub fn multiply_legs(&self) -> Element {
        let mut out = Element::zero(self.params);
        for (key, c) in &self.terms {
            let mut prod = Element::one(self.params);
            for m in key {
                prod = prod.mul_unchecked(&Element::monomial(*m, self.params));
            }
            out.add_scaled(&prod, *c);
        }
        out
    }

    /// Scalar value of a one-leg element under a per-leg functional
    /// product: `Σ c · Π_i f(i, m_i)`.
    pub fn evaluate<F>(&self, f: F) -> Complex64
    where
        F: Fn(usize, &Monomial) -> Complex64,
    {
        self.terms
            .iter()
            .map(|(key, c)| {
                key.iter().enumerate().fold(*c, |acc, (i, m)| {
                    if acc == Complex64::default() {
                        acc
                    } else {
                        acc * f(i, m)
                    }
                })
            })
            .sum()
    }

    fn check_leg(&self, leg: usize) -> Result<()> {
        if leg >= self.legs {
            return Err(Error::LegMismatch {
                expected: leg + 1,
                found: self.legs,
            });
        }
        Ok(())
    }

    pub fn distance(&self, other: &MultiElement) -> f64 {
        let mut worst: f64 = 0.0;
        for (k, c) in &self.terms {
            worst = worst.max((c - other.coeff(k)).norm());
        }
        for (k, c) in &other.terms {
            if !self.terms.contains_key(k) {
                worst = worst.max(c.norm());
            }
        }
        worst
    }

    pub fn equal(&self, other: &MultiElement) -> bool {
        self.legs == other.legs
            && self.params.q() == other.params.q()
            && self.distance(other) <= self.params.tol()
    }
}

impl PartialEq for MultiElement {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl fmt::Display for MultiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}·(", fmt_coeff(c))?;
            for (j, m) in key.iter().enumerate() {
                if j > 0 {
                    f.write_str("⊗")?;
                }
                write!(f, "{m}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
