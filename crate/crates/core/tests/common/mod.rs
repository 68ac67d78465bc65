#![allow(dead_code)]

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use qent_core::hopf;
use qent_core::{AlgebraParams, Monomial};

pub fn params(q: f64) -> AlgebraParams {
    AlgebraParams::with_q(q).unwrap()
}

pub struct InvarianceSolution {
    pub values: BTreeMap<Monomial, f64>,
    pub rank: usize,
    pub unknowns: usize,
    pub residual: f64,
}

/// Solves `(h⊗id)Δx = h(x)·1 = (id⊗h)Δx`, `h(1) = 1` for the values of h on
/// every monomial of degree at most `degree`, by least squares. The
/// coproduct never raises degree, so the truncated system is closed.
pub fn solve_invariance(params: AlgebraParams, degree: u32) -> InvarianceSolution {
    let basis: Vec<Monomial> = Monomial::enumerate(degree)
        .into_iter()
        .filter(|m| !m.is_unit())
        .collect();
    let index: BTreeMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let n = basis.len();

    let mut rows: Vec<(Vec<f64>, f64)> = Vec::new();
    for x in Monomial::enumerate(degree) {
        let delta = hopf::coproduct_monomial(&x, params);
        for leg in 0..2 {
            let mut eqs: BTreeMap<Monomial, (Vec<f64>, f64)> = BTreeMap::new();
            for (key, c) in delta.terms() {
                assert!(c.im.abs() < 1e-14);
                let (eval, keep) = (key[leg], key[1 - leg]);
                let eq = eqs.entry(keep).or_insert_with(|| (vec![0.0; n], 0.0));
                match index.get(&eval) {
                    Some(&i) => eq.0[i] += c.re,
                    None => eq.1 -= c.re,
                }
            }
            let unit = eqs
                .entry(Monomial::UNIT)
                .or_insert_with(|| (vec![0.0; n], 0.0));
            match index.get(&x) {
                Some(&i) => unit.0[i] -= 1.0,
                None => unit.1 += 1.0,
            }
            rows.extend(eqs.into_values());
        }
    }

    let a = DMatrix::from_fn(rows.len(), n, |r, c| rows[r].0[c]);
    let b = DVector::from_iterator(rows.len(), rows.iter().map(|r| r.1));
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let rank = svd
        .singular_values
        .iter()
        .filter(|&&s| s > 1e-10 * smax)
        .count();
    let sol = svd.solve(&b, 1e-10 * smax).unwrap();
    let residual = (&a * &sol - &b).amax();
    let mut values: BTreeMap<Monomial, f64> = basis.iter().map(|m| (*m, sol[index[m]])).collect();
    values.insert(Monomial::UNIT, 1.0);
    InvarianceSolution {
        values,
        rank,
        unknowns: n,
        residual,
    }
}

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Vectors of the representation `ℓ²(ℕ) ⊗ ℓ²(ℤ)` with
/// `a e(n,z) = √(1−q^{2n}) e(n−1,z)` and `c e(n,z) = √q·q^n e(n,z+1)`.
pub type Vector = BTreeMap<(u32, i32), Complex64>;

pub fn basis_vector(n: u32, z: i32) -> Vector {
    BTreeMap::from([((n, z), Complex64::new(1.0, 0.0))])
}

pub fn apply_gen(g: qent_core::Gen, v: &Vector, q: f64) -> Vector {
    use qent_core::Gen::*;
    let mut out = Vector::new();
    for (&(n, z), &x) in v {
        let qn = q.powi(n as i32);
        let (target, f) = match g {
            A if n == 0 => continue,
            A => ((n - 1, z), (1.0 - qn * qn).sqrt()),
            AStar => ((n + 1, z), (1.0 - qn * qn * q * q).sqrt()),
            C => ((n, z + 1), q.sqrt() * qn),
            CStar => ((n, z - 1), q.sqrt() * qn),
        };
        *out.entry(target).or_default() += x * f;
    }
    out
}

/// Applies a word, rightmost generator first.
pub fn apply_word(word: &[qent_core::Gen], v: &Vector, q: f64) -> Vector {
    word.iter()
        .rev()
        .fold(v.clone(), |acc, g| apply_gen(*g, &acc, q))
}

pub fn apply_element(x: &qent_core::Element, v: &Vector) -> Vector {
    let q = x.params().q();
    let mut out = Vector::new();
    for (m, c) in x.terms() {
        for (k, val) in apply_word(&m.word(), v, q) {
            *out.entry(k).or_default() += c * val;
        }
    }
    out
}

pub fn vector_distance(x: &Vector, y: &Vector) -> f64 {
    let mut d: f64 = 0.0;
    for (k, v) in x {
        d = d.max((v - y.get(k).copied().unwrap_or_default()).norm());
    }
    for (k, v) in y {
        d = d.max((v - x.get(k).copied().unwrap_or_default()).norm());
    }
    d
}

pub fn inner(x: &Vector, y: &Vector) -> Complex64 {
    x.iter()
        .map(|(k, v)| v.conj() * y.get(k).copied().unwrap_or_default())
        .sum()
}
