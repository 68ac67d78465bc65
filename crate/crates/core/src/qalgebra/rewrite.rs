//! Word-level rewriting with the confluent rule set
//!
//! ```text
//! c  a  -> q⁻¹ a c        c  a* -> q a* c
//! c* a  -> q⁻¹ a c*       c* a* -> q a* c*
//! a  a* -> 1 - q c c*     a* a  -> 1 - q⁻¹ c c*
//! c* c  -> c c*
//! ```
//!
//! Irreducible words are exactly the normal-ordered monomials. This is an
//! independent route to the normal form; [`Element::mul`] uses closed-form
//! generator shifts instead.

use num_complex::Complex64;

use super::{AlgebraParams, Element, Gen, Monomial, Sector};

/// Result of rewriting one redex: replacement words with scalar factors.
fn apply_rule(left: Gen, right: Gen, q: f64) -> Option<Vec<(Vec<Gen>, f64)>> {
    use Gen::*;
    let out = match (left, right) {
        (C, A) => vec![(vec![A, C], 1.0 / q)],
        (CStar, A) => vec![(vec![A, CStar], 1.0 / q)],
        (C, AStar) => vec![(vec![AStar, C], q)],
        (CStar, AStar) => vec![(vec![AStar, CStar], q)],
        (A, AStar) => vec![(vec![], 1.0), (vec![C, CStar], -q)],
        (AStar, A) => vec![(vec![], 1.0), (vec![C, CStar], -1.0 / q)],
        (CStar, C) => vec![(vec![C, CStar], 1.0)],
        _ => return None,
    };
    Some(out)
}

fn redexes(word: &[Gen], q: f64) -> Vec<usize> {
    (0..word.len().saturating_sub(1))
        .filter(|&i| apply_rule(word[i], word[i + 1], q).is_some())
        .collect()
}

fn irreducible_to_monomial(word: &[Gen]) -> Monomial {
    let mut i = 0;
    let sector = match word.first() {
        Some(Gen::AStar) => Sector::Star,
        _ => Sector::Plain,
    };
    let lead = match sector {
        Sector::Plain => Gen::A,
        Sector::Star => Gen::AStar,
    };
    let mut k = 0;
    while i < word.len() && word[i] == lead {
        k += 1;
        i += 1;
    }
    let mut m = 0;
    while i < word.len() && word[i] == Gen::C {
        m += 1;
        i += 1;
    }
    let mut n = 0;
    while i < word.len() && word[i] == Gen::CStar {
        n += 1;
        i += 1;
    }
    debug_assert_eq!(i, word.len(), "word is not irreducible");
    Monomial::new(sector, k, m, n)
}

/// Rewrites `word` to normal form. `pick(count)` chooses which of the
/// `count` available redexes to rewrite next and must return a value
/// below `count`.
pub fn normal_form_with<F>(word: &[Gen], params: AlgebraParams, mut pick: F) -> Element
where
    F: FnMut(usize) -> usize,
{
    let q = params.q();
    let mut pending: Vec<(Vec<Gen>, f64)> = vec![(word.to_vec(), 1.0)];
    let mut out = Element::zero(params);
    while let Some((w, coeff)) = pending.pop() {
        let spots = redexes(&w, q);
        if spots.is_empty() {
            out.add_term(irreducible_to_monomial(&w), Complex64::new(coeff, 0.0));
            continue;
        }
        let i = spots[pick(spots.len()) % spots.len()];
        let replacements = apply_rule(w[i], w[i + 1], q).expect("redex without rule");
        for (rep, f) in replacements {
            let mut next = Vec::with_capacity(w.len() + rep.len());
            next.extend_from_slice(&w[..i]);
            next.extend(rep);
            next.extend_from_slice(&w[i + 2..]);
            pending.push((next, coeff * f));
        }
    }
    out.prune();
    out
}

/// Normal form of a word, rewriting the leftmost redex first.
pub fn normal_form(word: &[Gen], params: AlgebraParams) -> Element {
    normal_form_with(word, params, |_| 0)
}

/// Normal form of an arbitrary word given as generator symbols.
pub fn reduce_word(symbols: &[&str], params: AlgebraParams) -> crate::error::Result<Element> {
    let word = symbols
        .iter()
        .map(|s| Gen::parse(s))
        .collect::<crate::error::Result<Vec<_>>>()?;
    Ok(normal_form(&word, params))
}
