//! The algebra `A(D, q, a)`: generators `y, h (, h^-1), x` subject to
//! `hy = q yh`, `xh = q hx`, `yx = a(h)`, `xy = a(qh)`.
//!
//! Elements are kept in the standard-monomial basis `y^i h^j x^k` with
//! `ik = 0`. A monomial is encoded by its weight `s` (`s > 0` for `y^s`,
//! `s < 0` for `x^-s`) and the `h` exponent `j`.
//!
//! Products are computed weight component by weight component: a component of
//! weight `s` is `y^s F(h)` or `F(h) x^-s` for a polynomial `F`, and the
//! product of two components has a closed form in terms of `a` and the twist
//! `F(h) -> F(q^k h)`. The [`rewrite`] submodule holds an independent
//! normalizer working directly on words in the generators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::poly::{h_word, write_term, BaseRing, LaurentPoly, PolyError};

pub mod rewrite;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("q must be different from 0 and 1")]
    InvalidQ,
    #[error("a must be nonzero")]
    ZeroA,
    #[error("elements belong to different algebras")]
    MixedAlgebras,
    #[error("invalid generator `{0}`")]
    InvalidGenerator(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("the algebra is not in the unit case")]
    NotUnitCase,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Parameters `(D, q, a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    ring: BaseRing,
    q: FieldElement,
    a: LaurentPoly,
}

/// Shared handle to an algebra; elements point back to it.
pub type Algebra = Arc<AlgebraSpec>;

impl AlgebraSpec {
    pub fn new(ring: BaseRing, q: FieldElement, a: LaurentPoly) -> Result<Algebra, AlgebraError> {
        if q.field() != a.field() {
            return Err(FieldError::MixedFields(q.field(), a.field()).into());
        }
        if q.is_zero() || q.is_one() {
            return Err(AlgebraError::InvalidQ);
        }
        if a.is_zero() {
            return Err(AlgebraError::ZeroA);
        }
        let a = a.in_ring(ring)?;
        Ok(Arc::new(AlgebraSpec { ring, q, a }))
    }

    pub fn field(&self) -> FieldSpec {
        self.q.field()
    }

    pub fn ring(&self) -> BaseRing {
        self.ring
    }

    pub fn q(&self) -> &FieldElement {
        &self.q
    }

    pub fn a(&self) -> &LaurentPoly {
        &self.a
    }

    pub fn q_inv(&self) -> FieldElement {
        self.q.inv().expect("q is nonzero")
    }

    /// `a` is a unit of `D`.
    pub fn is_unit_case(&self) -> bool {
        self.a.is_unit()
    }

    pub fn q_order(&self) -> Option<u32> {
        self.q.order_as_root_of_unity()
    }

    pub fn q_is_minus_one(&self) -> bool {
        (&self.q + &self.field().one()).is_zero()
    }

    /// Rank of `A^x / k^x`: 0 unless `a` is a unit, then 1 over `k[h]` and 2
    /// over `k[h, h^-1]`.
    pub fn units_mod_scalars_rank(&self) -> u8 {
        match (self.is_unit_case(), self.ring) {
            (false, _) => 0,
            (true, BaseRing::Poly) => 1,
            (true, BaseRing::Laurent) => 2,
        }
    }

    /// `f(q^k h)`.
    pub fn sigma_pow(&self, f: &LaurentPoly, k: i64) -> LaurentPoly {
        if k == 0 || f.is_zero() {
            return f.clone();
        }
        let c = self.q.pow(k).expect("q is nonzero");
        f.twist(&c, 1).expect("positive twist keeps the ring")
    }

    /// The exponent of `h` in `a` when `a` is a unit `c h^N`.
    pub fn unit_exponent(&self) -> Option<i64> {
        if self.is_unit_case() {
            self.a.min_exp()
        } else {
            None
        }
    }

    pub fn same(a: &Algebra, b: &Algebra) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.ring {
            BaseRing::Poly => "poly",
            BaseRing::Laurent => "laurent",
        };
        write!(
            f,
            "field={} algebra d={} q={} a={}",
            self.field(),
            d,
            self.q,
            self.a
        )
    }
}

/// The four defining relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    #[serde(rename = "hy = qyh")]
    HY,
    #[serde(rename = "xh = qhx")]
    XH,
    #[serde(rename = "yx = a(h)")]
    YX,
    #[serde(rename = "xy = a(qh)")]
    XY,
}

impl Relation {
    pub const ALL: [Relation; 4] = [Relation::HY, Relation::XH, Relation::YX, Relation::XY];
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::HY => "hy = qyh",
            Relation::XH => "xh = qhx",
            Relation::YX => "yx = a(h)",
            Relation::XY => "xy = a(qh)",
        })
    }
}

/// Standard monomial `y^s h^j` (`s >= 0`) or `h^j x^-s` (`s < 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StdMonomial {
    pub s: i64,
    pub j: i64,
}

impl StdMonomial {
    pub fn new(s: i64, j: i64) -> Self {
        StdMonomial { s, j }
    }

    pub fn weight(&self) -> i64 {
        self.s
    }

    /// Exponents `(i, j, k)` of `y^i h^j x^k`.
    pub fn exponents(&self) -> (i64, i64, i64) {
        (self.s.max(0), self.j, (-self.s).max(0))
    }

    pub fn word(&self) -> String {
        let mut parts = Vec::new();
        if self.s > 0 {
            parts.push(if self.s == 1 {
                "y".to_string()
            } else {
                format!("y^{}", self.s)
            });
        }
        let hw = h_word(self.j);
        if !hw.is_empty() {
            parts.push(hw);
        }
        if self.s < 0 {
            parts.push(if self.s == -1 {
                "x".to_string()
            } else {
                format!("x^{}", -self.s)
            });
        }
        parts.join("*")
    }
}

#[derive(Clone)]
pub struct AlgebraElement {
    alg: Algebra,
    terms: BTreeMap<StdMonomial, FieldElement>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        AlgebraSpec::same(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

/// JSON record for one term.
#[derive(Debug, Clone, Serialize)]
pub struct TermRecord {
    pub s: i64,
    pub j: i64,
    pub coeff: FieldElement,
}

impl AlgebraElement {
    pub fn zero(alg: &Algebra) -> Self {
        AlgebraElement {
            alg: alg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alg: &Algebra) -> Self {
        AlgebraElement::scalar(alg, alg.field().one())
    }

    pub fn scalar(alg: &Algebra, c: FieldElement) -> Self {
        let mut e = AlgebraElement::zero(alg);
        e.add_term(StdMonomial::new(0, 0), c);
        e
    }

    /// `c * y^s h^j` or `c * h^j x^-s`.
    pub fn monomial(alg: &Algebra, s: i64, j: i64, c: FieldElement) -> Result<Self, AlgebraError> {
        if !alg.ring.allows(j) {
            return Err(PolyError::NegativeExponentInPolyRing(j).into());
        }
        if c.field() != alg.field() {
            return Err(FieldError::MixedFields(alg.field(), c.field()).into());
        }
        let mut e = AlgebraElement::zero(alg);
        e.add_term(StdMonomial::new(s, j), c);
        Ok(e)
    }

    pub fn from_terms(
        alg: &Algebra,
        terms: impl IntoIterator<Item = (StdMonomial, FieldElement)>,
    ) -> Result<Self, AlgebraError> {
        let mut e = AlgebraElement::zero(alg);
        for (m, c) in terms {
            e = &e + &AlgebraElement::monomial(alg, m.s, m.j, c)?;
        }
        Ok(e)
    }

    pub fn y(alg: &Algebra) -> Self {
        AlgebraElement::monomial(alg, 1, 0, alg.field().one()).unwrap()
    }

    pub fn x(alg: &Algebra) -> Self {
        AlgebraElement::monomial(alg, -1, 0, alg.field().one()).unwrap()
    }

    pub fn h(alg: &Algebra) -> Self {
        AlgebraElement::monomial(alg, 0, 1, alg.field().one()).unwrap()
    }

    pub fn h_inv(alg: &Algebra) -> Result<Self, AlgebraError> {
        AlgebraElement::monomial(alg, 0, -1, alg.field().one())
    }

    /// A polynomial of `D` as an element of weight zero.
    pub fn from_poly(alg: &Algebra, f: &LaurentPoly) -> Result<Self, AlgebraError> {
        let f = f.in_ring(alg.ring)?;
        Ok(AlgebraElement::from_component(alg, 0, &f))
    }

    /// `y^s F(h)` for `s >= 0`, `F(h) x^-s` for `s < 0`.
    pub fn from_component(alg: &Algebra, s: i64, f: &LaurentPoly) -> Self {
        let mut e = AlgebraElement::zero(alg);
        for (j, c) in f.terms() {
            e.add_term(StdMonomial::new(s, j), c.clone());
        }
        e
    }

    fn add_term(&mut self, m: StdMonomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StdMonomial, &FieldElement)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: StdMonomial) -> FieldElement {
        self.terms
            .get(&m)
            .cloned()
            .unwrap_or_else(|| self.alg.field().zero())
    }

    /// The single term of a one-term element.
    pub fn as_single_term(&self) -> Option<(StdMonomial, FieldElement)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c.clone()))
        } else {
            None
        }
    }

    pub fn records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(m, c)| TermRecord {
                s: m.s,
                j: m.j,
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let mut out = AlgebraElement::zero(&self.alg);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(*m, v * c);
        }
        out
    }

    /// Weight-`r` parts as polynomials: `u = sum_r y^r F_r` / `F_r x^-r`.
    pub fn component_polys(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.s)
                .or_insert_with(|| LaurentPoly::zero(self.alg.field(), self.alg.ring))
                .add_term(m.j, c.clone());
        }
        out
    }

    /// Decomposition into homogeneous components `A^(r)`.
    pub fn weight_components(&self) -> BTreeMap<i64, AlgebraElement> {
        let mut out: BTreeMap<i64, AlgebraElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.s)
                .or_insert_with(|| AlgebraElement::zero(&self.alg))
                .terms
                .insert(*m, c.clone());
        }
        out
    }

    /// The weight, if the element is nonzero and homogeneous.
    pub fn weight(&self) -> Option<i64> {
        let mut ws = self.terms.keys().map(|m| m.s);
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if !AlgebraSpec::same(&self.alg, &other.alg) {
            return Err(AlgebraError::MixedAlgebras);
        }
        Ok(self * other)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if !AlgebraSpec::same(&self.alg, &other.alg) {
            return Err(AlgebraError::MixedAlgebras);
        }
        Ok(self + other)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = AlgebraElement::one(&self.alg);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Integer power; negative exponents require an invertible element.
    pub fn pow_i(&self, n: i64) -> Result<Self, AlgebraError> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self
                .try_inverse()
                .ok_or(AlgebraError::NotInvertible)?
                .pow(n.unsigned_abs() as u32))
        }
    }

    /// Two-sided inverse, when it exists.
    ///
    /// Units of `A` are scalar multiples of monomials (`A` is a domain graded
    /// by weight and `h`-degree in the unit case), so only one-term elements
    /// are candidates.
    pub fn try_inverse(&self) -> Option<Self> {
        let (m, c) = self.as_single_term()?;
        let alg = &self.alg;
        if !alg.ring.allows(-m.j) {
            return None;
        }
        let cinv = c.inv().ok()?;
        let h_part = AlgebraElement::monomial(alg, 0, -m.j, cinv).ok()?;
        let inv = match m.s.signum() {
            0 => h_part,
            1 => {
                // y^-1 = x a(h)^-1
                let a_inv = AlgebraElement::from_poly(alg, &alg.a.inverse()?).ok()?;
                let y_inv = &AlgebraElement::x(alg) * &a_inv;
                &h_part * &y_inv.pow(m.s as u32)
            }
            _ => {
                // x^-1 = a(h)^-1 y
                let a_inv = AlgebraElement::from_poly(alg, &alg.a.inverse()?).ok()?;
                let x_inv = &a_inv * &AlgebraElement::y(alg);
                &x_inv.pow((-m.s) as u32) * &h_part
            }
        };
        let one = AlgebraElement::one(alg);
        (&inv * self == one && self * &inv == one).then_some(inv)
    }

    /// `f(u)` for a polynomial `f` of `D`; negative powers need `u` invertible.
    pub fn eval_poly(f: &LaurentPoly, u: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let alg = &u.alg;
        let mut out = AlgebraElement::zero(alg);
        let (Some(lo), Some(hi)) = (f.min_exp(), f.max_exp()) else {
            return Ok(out);
        };
        let inv = if lo < 0 {
            Some(u.try_inverse().ok_or(AlgebraError::NotInvertible)?)
        } else {
            None
        };
        let mut pos = vec![AlgebraElement::one(alg)];
        for _ in 0..hi.max(0) {
            let next = pos.last().unwrap() * u;
            pos.push(next);
        }
        let mut neg = vec![AlgebraElement::one(alg)];
        if let Some(inv) = &inv {
            for _ in 0..(-lo) {
                let next = neg.last().unwrap() * inv;
                neg.push(next);
            }
        }
        for (e, c) in f.terms() {
            let p = if e >= 0 {
                &pos[e as usize]
            } else {
                &neg[(-e) as usize]
            };
            out = &out + &p.scale(c);
        }
        Ok(out)
    }

    /// Exponents `(a, b)` with `m = c * h^a x^b` in the unit case, where
    /// `x` is invertible and `y = a(h) x^-1`.
    pub fn skew_exponents(alg: &Algebra, m: StdMonomial) -> Result<(i64, i64), AlgebraError> {
        let n = alg.unit_exponent().ok_or(AlgebraError::NotUnitCase)?;
        Ok((m.j + n * m.s.max(0), -m.s))
    }

    /// `h^a x^b` in the unit case.
    pub fn skew_monomial(alg: &Algebra, a: i64, b: i64) -> Result<Self, AlgebraError> {
        if !alg.is_unit_case() {
            return Err(AlgebraError::NotUnitCase);
        }
        let h = AlgebraElement::monomial(alg, 0, a, alg.field().one())?;
        let xb = AlgebraElement::x(alg).pow_i(b)?;
        Ok(&h * &xb)
    }
}

/// Product of the components `y^s F` / `F x^-s` and `y^t G` / `G x^-t`.
fn component_product(
    alg: &AlgebraSpec,
    s: i64,
    f: &LaurentPoly,
    t: i64,
    g: &LaurentPoly,
) -> (i64, LaurentPoly) {
    let a = &alg.a;
    if s >= 0 && t >= 0 {
        // y^s F y^t G = y^(s+t) F(q^t h) G
        return (s + t, &alg.sigma_pow(f, t) * g);
    }
    if s <= 0 && t <= 0 {
        // F x^k G x^l = F G(q^k h) x^(k+l)
        return (s + t, f * &alg.sigma_pow(g, -s));
    }
    if s > 0 {
        // y^i P x^k with P = F G, using y P x = P(q^-1 h) a(h).
        let (i, k) = (s, -t);
        let m = i.min(k);
        let mut p = f * g;
        for _ in 0..m {
            p = &alg.sigma_pow(&p, -1) * a;
        }
        return (s + t, p);
    }
    // F x^k y^i G, using x P y = P(qh) a(qh).
    let (k, i) = (-s, t);
    let m = k.min(i);
    let aq = alg.sigma_pow(a, 1);
    let mut p = LaurentPoly::one(alg.field(), alg.ring);
    for _ in 0..m {
        p = &alg.sigma_pow(&p, 1) * &aq;
    }
    let (k, i) = (k - m, i - m);
    if k > 0 {
        let p = alg.sigma_pow(&p, k);
        (-k, &(f * &p) * &alg.sigma_pow(g, k))
    } else {
        let shift = i;
        (
            i,
            &(&alg.sigma_pow(f, shift) * &alg.sigma_pow(&p, shift)) * g,
        )
    }
}

fn assert_same(a: &AlgebraElement, b: &AlgebraElement) {
    assert!(
        AlgebraSpec::same(&a.alg, &b.alg),
        "arithmetic between elements of different algebras"
    );
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_same(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_same(self, rhs);
        let mut out = AlgebraElement::zero(&self.alg);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        let lc = self.component_polys();
        let rc = rhs.component_polys();
        for (s, f) in &lc {
            for (t, g) in &rc {
                let (w, p) = component_product(&self.alg, *s, f, *t, g);
                for (j, c) in p.terms() {
                    out.add_term(StdMonomial::new(w, j), c.clone());
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: &AlgebraElement) -> AlgebraElement {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

/// Terms in descending `(s, j)` order: `y`-terms, then `D`, then `x`-terms.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, i == 0, c, &m.word())?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.records().serialize(s)
    }
}
