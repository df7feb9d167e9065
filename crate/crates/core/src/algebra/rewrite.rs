//! Normal forms by rewriting words in the generators.
//!
//! This is deliberately independent of the component formulas used by
//! `AlgebraElement` multiplication, and serves as a cross-check for them.

use std::collections::BTreeMap;

use super::{Algebra, AlgebraElement, AlgebraError, StdMonomial};
use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::poly::{BaseRing, PolyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Y,
    H,
    HInv,
    X,
}

/// Linear combination of words in the free algebra on `y, h, h^-1, x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSum {
    field: FieldSpec,
    terms: BTreeMap<Vec<Letter>, FieldElement>,
}

impl WordSum {
    pub fn zero(field: FieldSpec) -> Self {
        WordSum {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(c: FieldElement) -> Self {
        let mut w = WordSum::zero(c.field());
        w.add_word(Vec::new(), c);
        w
    }

    pub fn letter(field: FieldSpec, l: Letter) -> Self {
        let mut w = WordSum::zero(field);
        w.add_word(vec![l], field.one());
        w
    }

    pub fn word(field: FieldSpec, letters: &[Letter]) -> Self {
        let mut w = WordSum::zero(field);
        w.add_word(letters.to_vec(), field.one());
        w
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &FieldElement)> + '_ {
        self.terms.iter()
    }

    fn add_word(&mut self, w: Vec<Letter>, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(|| c.field().zero());
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.from_int(-1))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let mut out = WordSum::zero(self.field);
        for (w, v) in &self.terms {
            out.add_word(w.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        let mut out = WordSum::zero(self.field);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_word(w, a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = WordSum::scalar(self.field.one());
        for _ in 0..n {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.field != other.field {
            return Err(FieldError::MixedFields(self.field, other.field));
        }
        Ok(())
    }
}

fn h_letters(e: i64) -> Vec<Letter> {
    let l = if e >= 0 { Letter::H } else { Letter::HInv };
    vec![l; e.unsigned_abs() as usize]
}

/// One rewriting step at the first reducible position, or `None` if the
/// word is already standard.
fn step(alg: &Algebra, w: &[Letter]) -> Option<Vec<(Vec<Letter>, FieldElement)>> {
    use Letter::*;
    let field = alg.field();
    let q = alg.q().clone();
    let q_inv = alg.q_inv();
    for i in 0..w.len().saturating_sub(1) {
        let replacement: Vec<(Vec<Letter>, FieldElement)> = match (w[i], w[i + 1]) {
            (H, Y) => vec![(vec![Y, H], q.clone())],
            (HInv, Y) => vec![(vec![Y, HInv], q_inv.clone())],
            (X, H) => vec![(vec![H, X], q.clone())],
            (X, HInv) => vec![(vec![HInv, X], q_inv.clone())],
            (H, HInv) | (HInv, H) => vec![(Vec::new(), field.one())],
            (Y, X) => alg
                .a()
                .terms()
                .map(|(e, c)| (h_letters(e), c.clone()))
                .collect(),
            (X, Y) => alg
                .a()
                .terms()
                .map(|(e, c)| (h_letters(e), c * &q.pow(e).expect("q is nonzero")))
                .collect(),
            _ => continue,
        };
        return Some(splice(w, i, i + 2, replacement));
    }
    // y h^m x -> q^-m h^m a(h), likewise for h^-1
    for i in 0..w.len() {
        if w[i] != Y {
            continue;
        }
        let run = w[i + 1..]
            .iter()
            .take_while(|l| matches!(l, H | HInv))
            .count();
        if run > 0 && w.get(i + 1 + run) == Some(&X) {
            let e = w[i + 1..i + 1 + run]
                .iter()
                .map(|l| if *l == H { 1 } else { -1 })
                .sum::<i64>();
            let c = q.pow(-e).expect("q is nonzero");
            let replacement = alg
                .a()
                .terms()
                .map(|(ae, ac)| {
                    let mut mid = w[i + 1..i + 1 + run].to_vec();
                    mid.extend(h_letters(ae));
                    (mid, ac * &c)
                })
                .collect();
            return Some(splice(w, i, i + 2 + run, replacement));
        }
    }
    None
}

fn splice(
    w: &[Letter],
    from: usize,
    to: usize,
    replacement: Vec<(Vec<Letter>, FieldElement)>,
) -> Vec<(Vec<Letter>, FieldElement)> {
    replacement
        .into_iter()
        .map(|(mid, c)| {
            let mut out = w[..from].to_vec();
            out.extend(mid);
            out.extend_from_slice(&w[to..]);
            (out, c)
        })
        .collect()
}

fn standard_monomial(w: &[Letter]) -> StdMonomial {
    let count = |l: Letter| w.iter().filter(|&&m| m == l).count() as i64;
    StdMonomial::new(
        count(Letter::Y) - count(Letter::X),
        count(Letter::H) - count(Letter::HInv),
    )
}

/// Normal form of a combination of words.
pub fn normalize(alg: &Algebra, sum: &WordSum) -> Result<AlgebraElement, AlgebraError> {
    if sum.field() != alg.field() {
        return Err(FieldError::MixedFields(alg.field(), sum.field()).into());
    }
    if alg.ring() == BaseRing::Poly && sum.terms.keys().any(|w| w.contains(&Letter::HInv)) {
        return Err(PolyError::NegativeExponentInPolyRing(-1).into());
    }
    let mut done = WordSum::zero(alg.field());
    let mut current = sum.clone();
    while !current.terms.is_empty() {
        let mut next = WordSum::zero(alg.field());
        for (w, c) in &current.terms {
            match step(alg, w) {
                None => done.add_word(w.clone(), c.clone()),
                Some(parts) => {
                    for (v, d) in parts {
                        next.add_word(v, c * &d);
                    }
                }
            }
        }
        current = next;
    }
    let terms = done
        .terms
        .iter()
        .map(|(w, c)| (standard_monomial(w), c.clone()));
    AlgebraElement::from_terms(alg, terms)
}

pub fn from_word(alg: &Algebra, letters: &[Letter]) -> Result<AlgebraElement, AlgebraError> {
    normalize(alg, &WordSum::word(alg.field(), letters))
}

/// The element as a combination of standard words.
pub fn to_words(u: &AlgebraElement) -> WordSum {
    let mut out = WordSum::zero(u.algebra().field());
    for (m, c) in u.terms() {
        let (i, j, k) = m.exponents();
        let mut w = vec![Letter::Y; i as usize];
        w.extend(h_letters(j));
        w.extend(vec![Letter::X; k as usize]);
        out.add_word(w, c.clone());
    }
    out
}
