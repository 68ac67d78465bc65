//! The polynomial *-algebra of SU_q(2).
//!
//! Elements are stored in the normal-ordered basis `a^k c^m c*^n` and
//! `a*^k c^m c*^n` (k >= 1), subject to
//!
//! ```text
//! ac = q ca,   ac* = q c*a,   cc* = c*c,
//! a*a + q⁻¹ c*c = aa* + q cc* = 1.
//! ```

pub(crate) mod element;
mod monomial;
mod rewrite;

pub use element::Element;
pub use monomial::{Monomial, Sector};
pub use rewrite::{normal_form, normal_form_with, reduce_word};

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Default absolute tolerance for coefficient comparison and pruning.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Deformation parameter and comparison tolerance shared by all elements
/// that take part in one computation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraParams {
    q: f64,
    tol: f64,
}

impl AlgebraParams {
    pub fn new(q: f64, tol: f64) -> Result<Self> {
        if !(q.is_finite() && q > 0.0 && q <= 1.0) {
            return Err(Error::InvalidDeformation(q));
        }
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::InvalidTolerance(tol));
        }
        Ok(Self { q, tol })
    }

    /// Parameters with the default tolerance.
    pub fn with_q(q: f64) -> Result<Self> {
        Self::new(q, DEFAULT_TOL)
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn sqrt_q(&self) -> f64 {
        self.q.sqrt()
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::ParamsMismatch {
                left: self.q,
                right: other.q,
            });
        }
        Ok(())
    }
}

/// One of the four generators `a`, `a*`, `c`, `c*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    A,
    AStar,
    C,
    CStar,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::AStar, Gen::C, Gen::CStar];

    pub fn adjoint(self) -> Gen {
        match self {
            Gen::A => Gen::AStar,
            Gen::AStar => Gen::A,
            Gen::C => Gen::CStar,
            Gen::CStar => Gen::C,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Gen::A => "a",
            Gen::AStar => "a*",
            Gen::C => "c",
            Gen::CStar => "c*",
        }
    }

    pub fn parse(s: &str) -> Result<Gen> {
        match s.trim() {
            "a" => Ok(Gen::A),
            "a*" => Ok(Gen::AStar),
            "c" => Ok(Gen::C),
            "c*" => Ok(Gen::CStar),
            other => Err(Error::Format(format!("unknown generator {other:?}"))),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_reject_out_of_range_q() {
        assert!(AlgebraParams::with_q(0.0).is_err());
        assert!(AlgebraParams::with_q(-0.5).is_err());
        assert!(AlgebraParams::with_q(1.5).is_err());
        assert!(AlgebraParams::with_q(f64::NAN).is_err());
        assert!(AlgebraParams::with_q(1.0).is_ok());
        assert!(AlgebraParams::new(0.5, 0.0).is_err());
    }
}
