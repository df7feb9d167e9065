//! Sparse polynomials in `h` over the ground field, either in `k[h]` or in
//! `k[h, h^-1]`, with the predicates the classification needs: exponent gap
//! gcd, twisted substitution `f(c h^eps)`, symmetry and unit detection.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec, Search};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("mixed rings: {0:?} and {1:?}")]
    MixedRings(BaseRing, BaseRing),
    #[error("negative exponent {0} in k[h]")]
    NegativeExponentInPolyRing(i64),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Which base ring `D` the polynomial lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseRing {
    /// `k[h]`
    Poly,
    /// `k[h, h^-1]`
    Laurent,
}

impl BaseRing {
    pub fn allows(&self, exponent: i64) -> bool {
        *self == BaseRing::Laurent || exponent >= 0
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    field: FieldSpec,
    ring: BaseRing,
    terms: BTreeMap<i64, FieldElement>,
}

impl LaurentPoly {
    pub fn zero(field: FieldSpec, ring: BaseRing) -> Self {
        LaurentPoly {
            field,
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: BaseRing, c: FieldElement) -> Self {
        let mut p = LaurentPoly::zero(c.field(), ring);
        p.add_term(0, c);
        p
    }

    pub fn one(field: FieldSpec, ring: BaseRing) -> Self {
        LaurentPoly::constant(ring, field.one())
    }

    /// `c * h^e`.
    pub fn monomial(ring: BaseRing, c: FieldElement, e: i64) -> Result<Self, PolyError> {
        if !ring.allows(e) {
            return Err(PolyError::NegativeExponentInPolyRing(e));
        }
        let mut p = LaurentPoly::zero(c.field(), ring);
        p.add_term(e, c);
        Ok(p)
    }

    /// `h`.
    pub fn h(field: FieldSpec, ring: BaseRing) -> Self {
        LaurentPoly::monomial(ring, field.one(), 1).unwrap()
    }

    pub fn from_terms(
        field: FieldSpec,
        ring: BaseRing,
        terms: impl IntoIterator<Item = (i64, FieldElement)>,
    ) -> Result<Self, PolyError> {
        let mut p = LaurentPoly::zero(field, ring);
        for (e, c) in terms {
            if c.field() != field {
                return Err(FieldError::MixedFields(field, c.field()).into());
            }
            if !ring.allows(e) {
                return Err(PolyError::NegativeExponentInPolyRing(e));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Integer-coefficient convenience constructor, `(exponent, coefficient)`.
    pub fn from_ints(
        field: FieldSpec,
        ring: BaseRing,
        terms: &[(i64, i64)],
    ) -> Result<Self, PolyError> {
        LaurentPoly::from_terms(
            field,
            ring,
            terms.iter().map(|&(e, c)| (e, field.from_int(c))),
        )
    }

    pub(crate) fn add_term(&mut self, e: i64, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ring(&self) -> BaseRing {
        self.ring
    }

    /// Same polynomial viewed in another base ring.
    pub fn in_ring(&self, ring: BaseRing) -> Result<Self, PolyError> {
        if let Some(e) = self.min_exp() {
            if !ring.allows(e) {
                return Err(PolyError::NegativeExponentInPolyRing(e));
            }
        }
        Ok(LaurentPoly {
            ring,
            ..self.clone()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &FieldElement)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn support(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn coeff(&self, e: i64) -> FieldElement {
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Lowest exponent `M`.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent `N`.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<FieldElement> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Units of `D`: nonzero constants in `k[h]`, nonzero monomials in
    /// `k[h, h^-1]`.
    pub fn is_unit(&self) -> bool {
        match self.ring {
            BaseRing::Poly => self.terms.len() == 1 && self.terms.contains_key(&0),
            BaseRing::Laurent => self.terms.len() == 1,
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (&e, c) = self.terms.iter().next()?;
        LaurentPoly::monomial(self.ring, c.inv().ok()?, -e).ok()
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let mut out = LaurentPoly::zero(self.field, self.ring);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(*e, v * c);
        }
        out
    }

    /// Multiply by `h^k`.
    pub fn shift(&self, k: i64) -> Result<Self, PolyError> {
        let mut out = LaurentPoly::zero(self.field, self.ring);
        for (e, v) in &self.terms {
            if !self.ring.allows(e + k) {
                return Err(PolyError::NegativeExponentInPolyRing(e + k));
            }
            out.terms.insert(e + k, v.clone());
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one(self.field, self.ring);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        Ok(self * other)
    }

    fn compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(FieldError::MixedFields(self.field, other.field).into());
        }
        if self.ring != other.ring {
            return Err(PolyError::MixedRings(self.ring, other.ring));
        }
        Ok(())
    }

    /// `f(c * h^eps)`: the term `a_i h^i` becomes `a_i c^i h^(eps i)`.
    pub fn twist(&self, c: &FieldElement, eps: i32) -> Result<Self, PolyError> {
        assert!(eps == 1 || eps == -1, "eps must be +1 or -1");
        if c.is_zero() {
            return Err(FieldError::DivisionByZero.into());
        }
        let mut out = LaurentPoly::zero(self.field, self.ring);
        for (e, v) in &self.terms {
            let ne = e * eps as i64;
            if !self.ring.allows(ne) {
                return Err(PolyError::NegativeExponentInPolyRing(ne));
            }
            out.add_term(ne, v * &c.pow(*e)?);
        }
        Ok(out)
    }

    /// `gcd{i - j : a_i a_j != 0}`, with the monomial convention `g = 0`.
    pub fn gap_gcd(&self) -> Result<u64, PolyError> {
        let base = self.min_exp().ok_or(PolyError::ZeroPolynomial)?;
        Ok(self
            .terms
            .keys()
            .fold(0u64, |g, e| g.gcd(&((e - base) as u64))))
    }

    /// Witness `(l, gamma, delta)` of `delta f(h) = h^l f(gamma h^-1)`, if
    /// one exists.
    pub fn is_symmetric(&self) -> Option<Symmetry> {
        self.symmetry_search().found()
    }

    pub fn symmetry_search(&self) -> Search<Symmetry> {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Search::Absent;
        };
        let l = lo + hi;
        // The support must be symmetric about l/2 before any coefficient work.
        if self
            .terms
            .keys()
            .any(|e| !self.terms.contains_key(&(l - e)))
        {
            return Search::Absent;
        }
        let f_lo = &self.terms[&lo];
        let f_hi = &self.terms[&hi];
        // Comparing the h^k coefficients gives gamma^(N - k) = f_M f_k / (f_N f_(l-k)).
        let eqs: Vec<(i64, FieldElement)> = self
            .terms
            .iter()
            .map(|(k, fk)| {
                let num = f_lo * fk;
                let den = f_hi * &self.terms[&(l - k)];
                (
                    hi - k,
                    num.div(&den).expect("support coefficients are nonzero"),
                )
            })
            .collect();
        let gamma = match solve_power_system(self.field, &eqs) {
            Search::Found(g) => g,
            Search::Absent => return Search::Absent,
            Search::Unknown => return Search::Unknown,
        };
        let delta = (f_lo * &gamma.pow(lo).expect("gamma is nonzero"))
            .div(f_hi)
            .expect("leading coefficient is nonzero");
        let sym = Symmetry { l, gamma, delta };
        if sym.holds_for(self) {
            Search::Found(sym)
        } else {
            Search::Absent
        }
    }
}

/// Data `(l, gamma, delta)` with `delta f(h) = h^l f(gamma h^-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Symmetry {
    pub l: i64,
    pub gamma: FieldElement,
    pub delta: FieldElement,
}

impl Symmetry {
    /// Checks the defining identity term by term.
    pub fn holds_for(&self, f: &LaurentPoly) -> bool {
        let Ok(lf) = f.in_ring(BaseRing::Laurent) else {
            return false;
        };
        let Ok(reflected) = lf.twist(&self.gamma, -1) else {
            return false;
        };
        let Ok(rhs) = reflected.shift(self.l) else {
            return false;
        };
        lf.scale(&self.delta) == rhs
    }
}

/// Solve the system `beta^(e_k) = c_k` for a nonzero `beta`.
///
/// The equations combine through extended gcds into a single
/// `beta^G = c` with `G = gcd(e_k)`; every `G`-th root of `c` then satisfies
/// the original system equally well or equally badly, so a single root
/// decides it.
pub fn solve_power_system(field: FieldSpec, eqs: &[(i64, FieldElement)]) -> Search<FieldElement> {
    let mut g: i64 = 0;
    let mut c = field.one();
    for (e, ck) in eqs {
        if *e == 0 {
            if !ck.is_one() {
                return Search::Absent;
            }
            continue;
        }
        if ck.is_zero() {
            return Search::Absent;
        }
        let ext = g.extended_gcd(e);
        // ext.gcd = ext.x * g + ext.y * e
        let combined = (&c.pow(ext.x).expect("nonzero") * &ck.pow(ext.y).expect("nonzero")).clone();
        g = ext.gcd;
        c = combined;
        if g < 0 {
            g = -g;
            c = c.inv().expect("nonzero");
        }
    }
    if g == 0 {
        return Search::Found(field.one());
    }
    match c.root_search(g as u32) {
        Search::Found(beta) => {
            let ok = eqs
                .iter()
                .all(|(e, ck)| beta.pow(*e).map(|v| &v == ck).unwrap_or(false));
            if ok {
                Search::Found(beta)
            } else {
                Search::Absent
            }
        }
        Search::Absent => Search::Absent,
        Search::Unknown => Search::Unknown,
    }
}

fn assert_compatible(a: &LaurentPoly, b: &LaurentPoly) {
    assert!(
        a.field == b.field && a.ring == b.ring,
        "polynomial arithmetic across {}/{:?} and {}/{:?}",
        a.field,
        a.ring,
        b.field,
        b.ring
    );
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_compatible(self, rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            field: self.field,
            ring: self.ring,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_compatible(self, rhs);
        let mut out = LaurentPoly::zero(self.field, self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Writes `coeff * word` as a signed summand; `word` empty means constant.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &FieldElement,
    word: &str,
) -> fmt::Result {
    let (neg, body) = coeff.coefficient_parts(!word.is_empty());
    let text = match (body.is_empty(), word.is_empty()) {
        (true, _) => word.to_string(),
        (false, true) => body,
        (false, false) => format!("{body}*{word}"),
    };
    match (first, neg) {
        (true, false) => write!(f, "{text}"),
        (true, true) => write!(f, "-{text}"),
        (false, false) => write!(f, " + {text}"),
        (false, true) => write!(f, " - {text}"),
    }
}

pub(crate) fn h_word(e: i64) -> String {
    match e {
        0 => String::new(),
        1 => "h".to_string(),
        _ => format!("h^{e}"),
    }
}

/// Exponents descending, e.g. `h^3 + 1/2*h - zeta(4)`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, i == 0, c, &h_word(*e))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_ints(q(), BaseRing::Poly, terms).unwrap()
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_ints(q(), BaseRing::Laurent, terms).unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(
            &p(&[(1, 1), (0, 1)]) * &p(&[(1, 1), (0, -1)]),
            p(&[(2, 1), (0, -1)])
        );
        let s = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(s.pow(2), lp(&[(2, 1), (0, 2), (-2, 1)]));
        assert!((&p(&[(3, 2)]) * &LaurentPoly::zero(q(), BaseRing::Poly)).is_zero());
        assert!(matches!(
            p(&[(0, 1)]).checked_add(&lp(&[(0, 1)])),
            Err(PolyError::MixedRings(_, _))
        ));
    }

    #[test]
    fn twists() {
        let f4 = FieldSpec::cyclotomic(4).unwrap();
        let z = f4.zeta_power(1);
        let f = LaurentPoly::from_ints(f4, BaseRing::Poly, &[(2, 1), (0, -1)]).unwrap();
        let expected = LaurentPoly::from_terms(
            f4,
            BaseRing::Poly,
            [(2, z.pow(2).unwrap()), (0, f4.from_int(-1))],
        )
        .unwrap();
        assert_eq!(f.twist(&z, 1).unwrap(), expected);
        assert_eq!(
            lp(&[(1, 1), (0, 1)]).twist(&q().one(), -1).unwrap(),
            lp(&[(-1, 1), (0, 1)])
        );
        assert_eq!(f.twist(&f4.one(), 1).unwrap(), f);
        assert_eq!(
            p(&[(1, 1)]).twist(&q().one(), -1),
            Err(PolyError::NegativeExponentInPolyRing(-1))
        );
    }

    #[test]
    fn gap_gcds() {
        assert_eq!(p(&[(3, 1), (1, 1)]).gap_gcd(), Ok(2));
        assert_eq!(p(&[(2, 1), (1, 1), (0, 1)]).gap_gcd(), Ok(1));
        assert_eq!(p(&[(5, 1)]).gap_gcd(), Ok(0));
        assert_eq!(
            LaurentPoly::zero(q(), BaseRing::Poly).gap_gcd(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn symmetry_examples() {
        let s = lp(&[(1, 1), (0, 2), (-1, 1)]).is_symmetric().unwrap();
        assert_eq!(
            (s.l, s.gamma.clone(), s.delta.clone()),
            (0, q().one(), q().one())
        );
        assert!(lp(&[(3, 1), (1, 1), (0, 1)]).is_symmetric().is_none());
        let s = lp(&[(2, 1), (1, 1), (0, 4)]).is_symmetric().unwrap();
        assert_eq!(
            (s.l, s.gamma.clone(), s.delta.clone()),
            (2, q().from_int(4), q().from_int(4))
        );
    }

    #[test]
    fn monomials_are_symmetric() {
        let s = lp(&[(-3, 5)]).is_symmetric().unwrap();
        assert!(s.holds_for(&lp(&[(-3, 5)])));
    }

    #[test]
    fn units() {
        assert!(p(&[(0, 3)]).is_unit());
        assert!(lp(&[(-3, 2)]).is_unit());
        assert!(!p(&[(1, 1), (0, 1)]).is_unit());
        assert!(!p(&[(1, 1)]).is_unit());
    }

    #[test]
    fn power_systems() {
        let f = q();
        // beta^2 = 4, beta^3 = 8  ->  beta = 2
        let eqs = [(2, f.from_int(4)), (3, f.from_int(8))];
        assert_eq!(solve_power_system(f, &eqs), Search::Found(f.from_int(2)));
        // beta^2 = 4, beta^3 = -8  ->  beta = -2
        let eqs = [(2, f.from_int(4)), (3, f.from_int(-8))];
        assert_eq!(solve_power_system(f, &eqs), Search::Found(f.from_int(-2)));
        // beta^2 = 4, beta^4 = 17 is inconsistent
        let eqs = [(2, f.from_int(4)), (4, f.from_int(17))];
        assert_eq!(solve_power_system(f, &eqs), Search::Absent);
        // beta^2 = 2 has no rational solution
        assert_eq!(solve_power_system(f, &[(2, f.from_int(2))]), Search::Absent);
        assert_eq!(
            solve_power_system(f, &[(0, f.one())]),
            Search::Found(f.one())
        );
    }

    #[test]
    fn display() {
        let f8 = FieldSpec::cyclotomic(4).unwrap();
        let f = LaurentPoly::from_terms(
            f8,
            BaseRing::Poly,
            [
                (3, f8.one()),
                (1, f8.from_ratio(1, 2)),
                (0, -f8.zeta_power(1)),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "h^3 + 1/2*h - zeta(4)");
        assert_eq!(lp(&[(-2, 1), (0, 1)]).to_string(), "1 + h^-2");
        let g = LaurentPoly::from_terms(f8, BaseRing::Poly, [(2, &f8.one() + &f8.zeta_power(1))])
            .unwrap();
        assert_eq!(g.to_string(), "(1 + zeta(4))*h^2");
    }
}
