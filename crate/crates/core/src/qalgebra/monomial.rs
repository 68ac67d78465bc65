use serde::{Deserialize, Serialize};
use std::fmt;

use super::Gen;

/// Whether the leading power is of `a` or of `a*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Plain,
    Star,
}

/// A normal-ordered basis word `a^k c^m c*^n` (plain) or `a*^k c^m c*^n`
/// (star, k >= 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    sector: Sector,
    k: u32,
    m: u32,
    n: u32,
}

impl Monomial {
    pub const UNIT: Monomial = Monomial {
        sector: Sector::Plain,
        k: 0,
        m: 0,
        n: 0,
    };

    /// Builds a monomial, folding `k = 0` into the plain sector.
    pub fn new(sector: Sector, k: u32, m: u32, n: u32) -> Self {
        let sector = if k == 0 { Sector::Plain } else { sector };
        Monomial { sector, k, m, n }
    }

    pub fn plain(k: u32, m: u32, n: u32) -> Self {
        Self::new(Sector::Plain, k, m, n)
    }

    pub fn star(k: u32, m: u32, n: u32) -> Self {
        Self::new(Sector::Star, k, m, n)
    }

    pub fn generator(g: Gen) -> Self {
        match g {
            Gen::A => Self::plain(1, 0, 0),
            Gen::AStar => Self::star(1, 0, 0),
            Gen::C => Self::plain(0, 1, 0),
            Gen::CStar => Self::plain(0, 0, 1),
        }
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.k + self.m + self.n
    }

    pub fn is_unit(&self) -> bool {
        *self == Self::UNIT
    }

    fn a_gen(&self) -> Gen {
        match self.sector {
            Sector::Plain => Gen::A,
            Sector::Star => Gen::AStar,
        }
    }

    /// The generator word spelled by this monomial.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        w.extend(std::iter::repeat_n(self.a_gen(), self.k as usize));
        w.extend(std::iter::repeat_n(Gen::C, self.m as usize));
        w.extend(std::iter::repeat_n(Gen::CStar, self.n as usize));
        w
    }

    /// All monomials of total degree at most `max_degree`.
    pub fn enumerate(max_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for k in 0..=max_degree {
            for m in 0..=(max_degree - k) {
                for n in 0..=(max_degree - k - m) {
                    out.push(Self::plain(k, m, n));
                    if k > 0 {
                        out.push(Self::star(k, m, n));
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Right multiplication by a single generator, returned as a
    /// normal-ordered combination with real coefficients depending on `q`.
    pub(crate) fn mul_gen(&self, g: Gen, q: f64) -> Vec<(Monomial, f64)> {
        let Monomial { sector, k, m, n } = *self;
        match g {
            Gen::C => vec![(Monomial::new(sector, k, m + 1, n), 1.0)],
            Gen::CStar => vec![(Monomial::new(sector, k, m, n + 1), 1.0)],
            Gen::A => {
                // c^m c*^n a = q^-(m+n) a c^m c*^n
                let shift = q.powi(-((m + n) as i32));
                if sector == Sector::Star && k > 0 {
                    // a*a = 1 - q⁻¹ cc*
                    vec![
                        (Monomial::star(k - 1, m, n), shift),
                        (Monomial::star(k - 1, m + 1, n + 1), -shift / q),
                    ]
                } else {
                    vec![(Monomial::plain(k + 1, m, n), shift)]
                }
            }
            Gen::AStar => {
                // c^m c*^n a* = q^(m+n) a* c^m c*^n
                let shift = q.powi((m + n) as i32);
                if sector == Sector::Plain && k > 0 {
                    // aa* = 1 - q cc*
                    vec![
                        (Monomial::plain(k - 1, m, n), shift),
                        (Monomial::plain(k - 1, m + 1, n + 1), -shift * q),
                    ]
                } else {
                    vec![(Monomial::star(k + 1, m, n), shift)]
                }
            }
        }
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Self::UNIT
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, sym: &str, p: u32, first: &mut bool) -> fmt::Result {
    if p == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str(" ")?;
    }
    *first = false;
    if p == 1 {
        f.write_str(sym)
    } else {
        write!(f, "{sym}^{p}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        write_power(f, self.a_gen().symbol(), self.k, &mut first)?;
        write_power(f, "c", self.m, &mut first)?;
        write_power(f, "c*", self.n, &mut first)
    }
}
