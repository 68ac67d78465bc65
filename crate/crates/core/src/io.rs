//! JSON interchange for elements, tensor elements, density operators and
//! positivity reports.
//!
//! ```text
//! element:  {"header":{"q":..,"tol":..},"terms":[{"sector":"plain","k":1,"m":0,"n":2,"coeff":[re,im]}]}
//! multi:    {"header":{"legs":2,"q":..,"tol":..},"terms":[{"legs":[{"sector":..,"k":..,"m":..,"n":..},..],"coeff":[re,im]}]}
//! density:  {"dims":[n,m],"entries":[[re,im],..]}   (row-major)
//! ```

use num_complex::Complex64;
use serde::de::{DeserializeOwned, Error as _};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fourier::DensityOp;
use crate::hopf::MultiElement;
use crate::linalg::CMatrix;
use crate::qalgebra::{AlgebraParams, Element, Monomial, Sector};

#[derive(Serialize, Deserialize)]
struct Header {
    q: f64,
    tol: f64,
}

#[derive(Serialize, Deserialize)]
struct MultiHeader {
    legs: usize,
    q: f64,
    tol: f64,
}

#[derive(Clone, Copy, Serialize, Deserialize)]
struct MonoWire {
    sector: Sector,
    k: u32,
    m: u32,
    n: u32,
}

impl From<&Monomial> for MonoWire {
    fn from(m: &Monomial) -> Self {
        MonoWire {
            sector: m.sector(),
            k: m.k(),
            m: m.m(),
            n: m.n(),
        }
    }
}

impl From<MonoWire> for Monomial {
    fn from(w: MonoWire) -> Self {
        Monomial::new(w.sector, w.k, w.m, w.n)
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    #[serde(flatten)]
    mono: MonoWire,
    coeff: [f64; 2],
}

#[derive(Serialize, Deserialize)]
struct ElementWire {
    header: Header,
    terms: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
struct MultiTermWire {
    legs: Vec<MonoWire>,
    coeff: [f64; 2],
}

#[derive(Serialize, Deserialize)]
struct MultiWire {
    header: MultiHeader,
    terms: Vec<MultiTermWire>,
}

#[derive(Serialize, Deserialize)]
struct DensityWire {
    dims: [usize; 2],
    entries: Vec<[f64; 2]>,
}

fn pair(c: &Complex64) -> [f64; 2] {
    [c.re, c.im]
}

fn complex(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let p = self.params();
        ElementWire {
            header: Header {
                q: p.q(),
                tol: p.tol(),
            },
            terms: self
                .terms()
                .map(|(m, c)| TermWire {
                    mono: m.into(),
                    coeff: pair(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = ElementWire::deserialize(d)?;
        let params = AlgebraParams::new(w.header.q, w.header.tol).map_err(D::Error::custom)?;
        Ok(Element::from_terms(
            params,
            w.terms
                .into_iter()
                .map(|t| (t.mono.into(), complex(t.coeff))),
        ))
    }
}

impl Serialize for MultiElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let p = self.params();
        MultiWire {
            header: MultiHeader {
                legs: self.legs(),
                q: p.q(),
                tol: p.tol(),
            },
            terms: self
                .terms()
                .map(|(key, c)| MultiTermWire {
                    legs: key.iter().map(MonoWire::from).collect(),
                    coeff: pair(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = MultiWire::deserialize(d)?;
        let params = AlgebraParams::new(w.header.q, w.header.tol).map_err(D::Error::custom)?;
        MultiElement::from_terms(
            w.header.legs,
            params,
            w.terms.into_iter().map(|t| {
                (
                    t.legs.into_iter().map(Monomial::from).collect::<Vec<_>>(),
                    complex(t.coeff),
                )
            }),
        )
        .map_err(D::Error::custom)
    }
}

impl Serialize for DensityOp {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (n, m) = self.dims();
        let mat = self.matrix();
        let d = n * m;
        DensityWire {
            dims: [n, m],
            entries: (0..d * d)
                .map(|idx| pair(&mat[(idx / d, idx % d)]))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DensityOp {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = DensityWire::deserialize(d)?;
        let values: Vec<Complex64> = w.entries.into_iter().map(complex).collect();
        DensityOp::from_row_major((w.dims[0], w.dims[1]), &values).map_err(D::Error::custom)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

/// A JSON matrix as a list of rows of `[re, im]` pairs.
pub fn matrix_to_rows(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|c| pair(&m[(r, c)])).collect())
        .collect()
}

pub fn matrix_from_rows(rows: &[Vec<[f64; 2]>]) -> Result<CMatrix> {
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch("ragged matrix rows".into()));
    }
    Ok(CMatrix::from_fn(n, cols, |r, c| complex(rows[r][c])))
}
