use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraParams, Gen, Monomial, Sector};
use crate::error::Result;

/// A finite complex combination of normal-ordered monomials.
#[derive(Clone, Debug)]
pub struct Element {
    params: AlgebraParams,
    terms: BTreeMap<Monomial, Complex64>,
}

impl Element {
    pub fn zero(params: AlgebraParams) -> Self {
        Element {
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(params: AlgebraParams) -> Self {
        Self::monomial(Monomial::UNIT, params)
    }

    pub fn monomial(m: Monomial, params: AlgebraParams) -> Self {
        Self::from_terms(params, [(m, Complex64::new(1.0, 0.0))])
    }

    pub fn generator(g: Gen, params: AlgebraParams) -> Self {
        Self::monomial(Monomial::generator(g), params)
    }

    pub fn scalar(c: Complex64, params: AlgebraParams) -> Self {
        Self::from_terms(params, [(Monomial::UNIT, c)])
    }

    /// Collects terms, summing repeated monomials and pruning small
    /// coefficients.
    pub fn from_terms<I>(params: AlgebraParams, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Complex64)>,
    {
        let mut out = Element::zero(params);
        for (m, c) in terms {
            *out.terms.entry(m).or_default() += c;
        }
        out.prune();
        out
    }

    /// Product of the generators of `word`, computed by successive right
    /// multiplication.
    pub fn from_word(word: &[Gen], params: AlgebraParams) -> Self {
        let mut acc: BTreeMap<Monomial, Complex64> = BTreeMap::new();
        acc.insert(Monomial::UNIT, Complex64::new(1.0, 0.0));
        for &g in word {
            acc = mul_gen_map(&acc, g, params.q());
        }
        Self::from_terms(params, acc)
    }

    pub fn params(&self) -> AlgebraParams {
        self.params
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Complex64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Complex64 {
        self.terms.get(m).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub(crate) fn prune(&mut self) {
        let tol = self.params.tol();
        self.terms.retain(|_, c| c.norm() > tol);
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Complex64) {
        *self.terms.entry(m).or_default() += c;
    }

    /// `self += c * other`, pruned.
    pub fn add_scaled(&mut self, other: &Element, c: Complex64) {
        for (m, v) in &other.terms {
            self.add_term(*m, c * v);
        }
        self.prune();
    }

    pub fn scale(&self, c: Complex64) -> Element {
        Self::from_terms(self.params, self.terms.iter().map(|(m, v)| (*m, c * v)))
    }

    /// Normal-ordered product.
    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.params.check_same(&other.params)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Element) -> Element {
        let q = self.params.q();
        let mut out: BTreeMap<Monomial, Complex64> = BTreeMap::new();
        for (mx, cx) in &self.terms {
            for (my, cy) in &other.terms {
                for (m, f) in mul_monomials(mx, my, q) {
                    *out.entry(m).or_default() += cx * cy * f;
                }
            }
        }
        Self::from_terms(self.params, out)
    }

    pub fn pow(&self, e: u32) -> Element {
        let mut acc = Element::one(self.params);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// The *-involution: antilinear and antimultiplicative.
    pub fn adjoint(&self) -> Element {
        let q = self.params.q();
        Self::from_terms(
            self.params,
            self.terms.iter().map(|(m, c)| {
                let (am, f) = adjoint_monomial(m, q);
                (am, c.conj() * f)
            }),
        )
    }

    /// Largest coefficient modulus of `self - other`.
    pub fn distance(&self, other: &Element) -> f64 {
        let mut worst: f64 = 0.0;
        for (m, c) in &self.terms {
            worst = worst.max((c - other.coeff(m)).norm());
        }
        for (m, c) in &other.terms {
            if !self.terms.contains_key(m) {
                worst = worst.max(c.norm());
            }
        }
        worst
    }

    /// Coefficient-wise equality within the tolerance.
    pub fn equal(&self, other: &Element) -> bool {
        self.params.q() == other.params.q() && self.distance(other) <= self.params.tol()
    }
}

/// Normal form of `x * y` for two basis monomials.
pub(crate) fn mul_monomials(x: &Monomial, y: &Monomial, q: f64) -> Vec<(Monomial, f64)> {
    if y.k() == 0 {
        // c and c* commute with each other, so the tail just accumulates
        return vec![(
            Monomial::new(x.sector(), x.k(), x.m() + y.m(), x.n() + y.n()),
            1.0,
        )];
    }
    if x.is_unit() {
        return vec![(*y, 1.0)];
    }
    let mut acc: BTreeMap<Monomial, f64> = BTreeMap::new();
    acc.insert(*x, 1.0);
    for g in y.word() {
        let mut next: BTreeMap<Monomial, f64> = BTreeMap::new();
        for (m, c) in &acc {
            for (m2, f) in m.mul_gen(g, q) {
                *next.entry(m2).or_default() += c * f;
            }
        }
        acc = next;
    }
    acc.into_iter().filter(|(_, c)| *c != 0.0).collect()
}

fn mul_gen_map(
    acc: &BTreeMap<Monomial, Complex64>,
    g: Gen,
    q: f64,
) -> BTreeMap<Monomial, Complex64> {
    let mut next: BTreeMap<Monomial, Complex64> = BTreeMap::new();
    for (m, c) in acc {
        for (m2, f) in m.mul_gen(g, q) {
            *next.entry(m2).or_default() += c * f;
        }
    }
    next
}

/// (A^k c^m c*^n)* = c^n c*^m (A*)^k = q^{±k(m+n)} (A*)^k c^n c*^m.
fn adjoint_monomial(x: &Monomial, q: f64) -> (Monomial, f64) {
    let (k, m, n) = (x.k(), x.m(), x.n());
    let e = (k * (m + n)) as i32;
    match x.sector() {
        Sector::Plain => (Monomial::star(k, n, m), q.powi(e)),
        Sector::Star => (Monomial::plain(k, n, m), q.powi(-e)),
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl Add for &Element {
    type Output = Element;

    /// Panics if the operands carry different parameters.
    fn add(self, rhs: &Element) -> Element {
        self.params
            .check_same(&rhs.params)
            .expect("adding elements with different q");
        let mut out = self.clone();
        out.add_scaled(rhs, Complex64::new(1.0, 0.0));
        out
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        self.params
            .check_same(&rhs.params)
            .expect("subtracting elements with different q");
        let mut out = self.clone();
        out.add_scaled(rhs, Complex64::new(-1.0, 0.0));
        out
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &Element {
    type Output = Element;

    /// Panics on mismatched parameters; use [`Element::mul`] for a checked
    /// product.
    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs).expect("multiplying elements with different q")
    }
}

impl Mul<Complex64> for &Element {
    type Output = Element;

    fn mul(self, rhs: Complex64) -> Element {
        self.scale(rhs)
    }
}

impl Mul<f64> for &Element {
    type Output = Element;

    fn mul(self, rhs: f64) -> Element {
        self.scale(Complex64::new(rhs, 0.0))
    }
}

pub(crate) fn fmt_coeff(c: &Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else {
        format!("({}{:+}i)", c.re, c.im)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}·({})", fmt_coeff(c), m)?;
        }
        Ok(())
    }
}
