use num_complex::Complex64;

use crate::error::Result;
use crate::haar::Haar;
use crate::hopf::{self, MultiElement};
use crate::qalgebra::{AlgebraParams, Element};

/// Common surface of single-factor and tensor elements, so transforms and
/// positivity tests can be written once for a corepresentation of either
/// the group or its direct square.
pub trait AlgebraElement: Clone + Haar + std::fmt::Display {
    fn params(&self) -> AlgebraParams;
    fn zero_like(&self) -> Self;
    fn product(&self, other: &Self) -> Result<Self>;
    fn star(&self) -> Self;
    fn accumulate(&mut self, other: &Self, c: Complex64) -> Result<()>;
    fn counit_value(&self) -> Result<Complex64>;
    fn max_distance(&self, other: &Self) -> f64;
}

impl AlgebraElement for Element {
    fn params(&self) -> AlgebraParams {
        Element::params(self)
    }

    fn zero_like(&self) -> Self {
        Element::zero(Element::params(self))
    }

    fn product(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }

    fn star(&self) -> Self {
        self.adjoint()
    }

    fn accumulate(&mut self, other: &Self, c: Complex64) -> Result<()> {
        Element::params(self).check_same(&Element::params(other))?;
        self.add_scaled(other, c);
        Ok(())
    }

    fn counit_value(&self) -> Result<Complex64> {
        Ok(hopf::counit(self))
    }

    fn max_distance(&self, other: &Self) -> f64 {
        self.distance(other)
    }
}

impl AlgebraElement for MultiElement {
    fn params(&self) -> AlgebraParams {
        MultiElement::params(self)
    }

    fn zero_like(&self) -> Self {
        MultiElement::zero(self.legs(), MultiElement::params(self))
    }

    fn product(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }

    fn star(&self) -> Self {
        self.adjoint()
    }

    fn accumulate(&mut self, other: &Self, c: Complex64) -> Result<()> {
        self.add_scaled(other, c)
    }

    fn counit_value(&self) -> Result<Complex64> {
        Ok(self.evaluate(|_, m| hopf::counit_monomial(m)))
    }

    fn max_distance(&self, other: &Self) -> f64 {
        if self.legs() != other.legs() {
            return f64::INFINITY;
        }
        self.distance(other)
    }
}
