//! Exact scalars: the rationals and the cyclotomic fields `Q(zeta(n))`.
//!
//! An element of `Q(zeta(n))` is stored as its coordinate vector in the power
//! basis `1, zeta, ..., zeta^(phi(n)-1)`, reduced modulo the n-th cyclotomic
//! polynomial. Trailing zero coordinates are trimmed, so two elements are equal
//! exactly when their stored vectors are equal.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed fields: {0} and {1}")]
    MixedFields(FieldSpec, FieldSpec),
    #[error("invalid cyclotomic conductor {0}")]
    InvalidConductor(u32),
    #[error("zeta({0}) does not lie in {1}")]
    RootOfUnityNotInField(u32, FieldSpec),
}

/// The ground field `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Cyclotomic(u32),
}

impl FieldSpec {
    /// `Q(zeta(n))`; conductors 1 and 2 collapse to the rationals.
    pub fn cyclotomic(n: u32) -> Result<Self, FieldError> {
        match n {
            0 => Err(FieldError::InvalidConductor(0)),
            1 | 2 => Ok(FieldSpec::Rationals),
            _ => Ok(FieldSpec::Cyclotomic(n)),
        }
    }

    pub fn conductor(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 1,
            FieldSpec::Cyclotomic(n) => *n,
        }
    }

    /// Degree of the field over `Q`.
    pub fn degree(&self) -> usize {
        cyclotomic_poly(self.conductor()).len() - 1
    }

    /// Number of roots of unity in the field, `lcm(2, n)`.
    pub fn roots_of_unity_count(&self) -> u32 {
        self.conductor().lcm(&2)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: *self,
            coeffs: Vec::new(),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_int(&self, v: i64) -> FieldElement {
        self.from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> FieldElement {
        self.from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(&self, r: BigRational) -> FieldElement {
        FieldElement::from_coeffs(*self, vec![r])
    }

    /// The generator `zeta(n)` raised to `k` (any integer `k`).
    pub fn zeta_power(&self, k: i64) -> FieldElement {
        let n = self.conductor() as i64;
        let e = k.rem_euclid(n) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        FieldElement::from_coeffs(*self, coeffs)
    }

    /// `exp(2 pi i / m)` expressed in this field, if it lies there.
    pub fn root_of_unity(&self, m: u32) -> Result<FieldElement, FieldError> {
        if m == 0 {
            return Err(FieldError::InvalidConductor(0));
        }
        let n = self.conductor();
        if n.is_multiple_of(m) {
            return Ok(self.zeta_power((n / m) as i64));
        }
        let big = self.roots_of_unity_count();
        if big.is_multiple_of(m) {
            // n is odd here and exp(2 pi i / 2n) = -zeta(n)^((n+1)/2).
            let half = -self.zeta_power(n.div_ceil(2) as i64);
            return half
                .pow((big / m) as i64)
                .map_err(|_| FieldError::DivisionByZero);
        }
        Err(FieldError::RootOfUnityNotInField(m, *self))
    }

    /// A generator of the group of roots of unity of the field.
    pub fn primitive_root_of_unity(&self) -> FieldElement {
        self.root_of_unity(self.roots_of_unity_count())
            .expect("lcm(2, n)-th roots always lie in Q(zeta(n))")
    }

    /// All roots of unity of the field, as successive powers of
    /// [`primitive_root_of_unity`](Self::primitive_root_of_unity).
    pub fn roots_of_unity(&self) -> Vec<FieldElement> {
        let w = self.primitive_root_of_unity();
        let mut out = Vec::new();
        let mut cur = self.one();
        for _ in 0..self.roots_of_unity_count() {
            out.push(cur.clone());
            cur = &cur * &w;
        }
        out
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Cyclotomic(n) => write!(f, "Q(zeta({n}))"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (constant term first) of the n-th cyclotomic polynomial,
/// obtained by dividing `x^n - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<BigInt>> {
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            num = exact_monic_div(&num, &phi_d);
        }
    }
    let p = Arc::new(num);
    cyclotomic_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn exact_monic_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Element of `Q` or `Q(zeta(n))` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldSpec,
    coeffs: Vec<BigRational>,
}

impl FieldElement {
    fn from_coeffs(field: FieldSpec, mut coeffs: Vec<BigRational>) -> Self {
        let phi = cyclotomic_poly(field.conductor());
        let deg = phi.len() - 1;
        if coeffs.len() > deg {
            for k in (deg..coeffs.len()).rev() {
                let c = std::mem::take(&mut coeffs[k]);
                if c.is_zero() {
                    continue;
                }
                for (i, pi) in phi.iter().take(deg).enumerate() {
                    if !pi.is_zero() {
                        coeffs[k - deg + i] -= &c * BigRational::from_integer(pi.clone());
                    }
                }
            }
            coeffs.truncate(deg);
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        FieldElement { field, coeffs }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Power-basis coordinates, trailing zeros omitted.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::MixedFields(self.field, other.field))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self * &other.inv()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the
    /// cyclotomic polynomial.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(self.field.from_rational(self.coeffs[0].recip()));
        }
        let modulus: Vec<BigRational> = cyclotomic_poly(self.field.conductor())
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // Invariant: s_i * self == r_i (mod modulus).
        let (mut r0, mut r1) = (modulus, self.coeffs.clone());
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
            (Vec::new(), vec![BigRational::one()]);
        while !(r1.len() == 1) {
            let (q, r) = qpoly::divrem(&r0, &r1);
            let s2 = qpoly::sub(&s0, &qpoly::mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            debug_assert!(!r1.is_empty(), "cyclotomic polynomial is irreducible");
        }
        let c = r1[0].recip();
        let coeffs = s1.into_iter().map(|v| v * &c).collect();
        Ok(FieldElement::from_coeffs(self.field, coeffs))
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_div(other)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Least `m >= 1` with `self^m = 1`, if `self` is a root of unity.
    ///
    /// Finite orders in `Q(zeta(n))` divide `lcm(2, n)`, so scanning up to
    /// that bound is exhaustive.
    pub fn order_as_root_of_unity(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let bound = self.field.roots_of_unity_count();
        let mut cur = self.clone();
        for m in 1..=bound {
            if cur.is_one() {
                return Some(m);
            }
            cur = &cur * self;
        }
        None
    }

    /// Field norm down to `Q`: determinant of multiplication by `self`.
    pub fn norm(&self) -> BigRational {
        let deg = self.field.degree();
        if deg == 1 {
            return self.as_rational().unwrap();
        }
        let mut rows = Vec::with_capacity(deg);
        for i in 0..deg {
            let basis = self.field.zeta_power(i as i64);
            let prod = &basis * self;
            let mut row = prod.coeffs.clone();
            row.resize(deg, BigRational::zero());
            rows.push(row);
        }
        rational_det(rows)
    }

    /// Search for a `g`-th root of `self`.
    ///
    /// Over `Q` the answer is exact. Over `Q(zeta(n))` candidates of the form
    /// `r * w` with `r` rational and `w` a root of unity are tried; if none
    /// works, a norm obstruction can still prove that no root exists, and
    /// otherwise the result is [`RootSearch::Unknown`].
    pub fn root_search(&self, g: u32) -> RootSearch {
        assert!(g >= 1, "root index must be positive");
        if self.is_zero() {
            return RootSearch::Found(self.clone());
        }
        if g == 1 {
            return RootSearch::Found(self.clone());
        }
        if let Some(r) = self.as_rational() {
            if let Some(root) = rational_root(&r, g) {
                return RootSearch::Found(self.field.from_rational(root));
            }
            if self.field == FieldSpec::Rationals {
                return RootSearch::Absent;
            }
        }
        for w in self.field.roots_of_unity() {
            let wg = w.pow(g as i64).expect("roots of unity are nonzero");
            let quotient = self * &wg.inv().expect("nonzero");
            if let Some(r) = quotient.as_rational() {
                if let Some(root) = rational_root(&r, g) {
                    let beta = &self.field.from_rational(root) * &w;
                    debug_assert_eq!(beta.pow(g as i64).unwrap(), *self);
                    return RootSearch::Found(beta);
                }
            }
        }
        if rational_root(&self.norm(), g).is_none() {
            return RootSearch::Absent;
        }
        RootSearch::Unknown
    }

    /// Some `beta` with `beta^g = self`, when the search finds one.
    pub fn root_in_field(&self, g: u32) -> Option<FieldElement> {
        self.root_search(g).found()
    }
}

/// Outcome of a bounded exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// Proven: nothing exists.
    Absent,
    /// Not found by the implemented candidate search, and not disproven.
    Unknown,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }
}

pub type RootSearch = Search<FieldElement>;

/// Exact rational `g`-th root, if any.
pub fn rational_root(r: &BigRational, g: u32) -> Option<BigRational> {
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    if r.is_negative() && g.is_multiple_of(2) {
        return None;
    }
    let int_root = |v: &BigInt| -> Option<BigInt> {
        let a = v.abs();
        let root = a.nth_root(g);
        if num_traits::pow(root.clone(), g as usize) == a {
            Some(if v.is_negative() { -root } else { root })
        } else {
            None
        }
    };
    let n = int_root(r.numer())?;
    let d = int_root(r.denom())?;
    Some(BigRational::new(n, d))
}

fn rational_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            let (top, bottom) = m.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst -= &factor * src;
            }
        }
    }
    det
}

/// Dense polynomial helpers over `Q` used by the inversion routine.
mod qpoly {
    use num_rational::BigRational;
    use num_traits::Zero;

    fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    pub fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, v) in a.iter().enumerate() {
            out[i] += v;
        }
        for (i, v) in b.iter().enumerate() {
            out[i] -= v;
        }
        trim(out)
    }

    pub fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem = a.to_vec();
        let db = b.len() - 1;
        if rem.len() <= db {
            return (Vec::new(), trim(rem));
        }
        let lead = &b[db];
        let mut quot = vec![BigRational::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db] / lead;
            if c.is_zero() {
                continue;
            }
            for (i, bi) in b.iter().enumerate() {
                rem[k + i] -= &c * bi;
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (trim(quot), trim(rem))
    }
}

fn assert_same(a: &FieldElement, b: &FieldElement) {
    assert!(
        a.field == b.field,
        "arithmetic between {} and {}",
        a.field,
        b.field
    );
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        assert_same(self, rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, v) in self.coeffs.iter().enumerate() {
            out[i] += v;
        }
        for (i, v) in rhs.coeffs.iter().enumerate() {
            out[i] += v;
        }
        FieldElement::from_coeffs(self.field, out)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        assert_same(self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return self.field.zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        FieldElement::from_coeffs(self.field, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn zeta_word(n: u32, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => format!("zeta({n})"),
        _ => format!("zeta({n})^{k}"),
    }
}

impl FieldElement {
    /// Number of nonzero power-basis coordinates.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Sign-aware rendering used when the element is a coefficient: returns
    /// `(negative, body)` where `body` omits a unit magnitude when
    /// `omit_one` is set. Multi-term elements are parenthesized.
    pub(crate) fn coefficient_parts(&self, omit_one: bool) -> (bool, String) {
        if self.term_count() == 1 {
            let (k, c) = self
                .coeffs
                .iter()
                .enumerate()
                .find(|(_, c)| !c.is_zero())
                .unwrap();
            let neg = c.is_negative();
            let mag = c.abs();
            let z = zeta_word(self.field.conductor(), k);
            let body = match (mag.is_one(), z.is_empty()) {
                (true, true) if omit_one => String::new(),
                (true, true) => "1".to_string(),
                (true, false) => z,
                (false, true) => fmt_rational(&mag),
                (false, false) => format!("{}*{}", fmt_rational(&mag), z),
            };
            (neg, body)
        } else {
            (false, format!("({self})"))
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.field.conductor();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let z = zeta_word(n, k);
            let body = match (mag.is_one(), z.is_empty()) {
                (_, true) => fmt_rational(&mag),
                (true, false) => z,
                (false, false) => format!("{}*{}", fmt_rational(&mag), z),
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn q4() -> FieldSpec {
        FieldSpec::cyclotomic(4).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n| {
            cyclotomic_poly(n)
                .iter()
                .map(|c| c.to_i64().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(as_i64(9), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let z = q4().zeta_power(1);
        assert_eq!(&z * &z, q4().from_int(-1));
    }

    #[test]
    fn rational_sum() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.from_ratio(2, 3) + q.from_ratio(1, 3), q.one());
    }

    #[test]
    fn zeta3_relation() {
        let f = FieldSpec::cyclotomic(3).unwrap();
        let z = f.zeta_power(1);
        let s = &(&f.one() + &z) + &(&z * &z);
        assert!(s.is_zero());
    }

    #[test]
    fn small_conductors_are_rationals() {
        assert_eq!(FieldSpec::cyclotomic(1).unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::cyclotomic(2).unwrap(), FieldSpec::Rationals);
        assert!(FieldSpec::cyclotomic(0).is_err());
    }

    #[test]
    fn division_errors() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.zero().inv(), Err(FieldError::DivisionByZero));
        let z = q4().one();
        assert!(matches!(
            q.one().checked_add(&z),
            Err(FieldError::MixedFields(_, _))
        ));
    }

    #[test]
    fn orders() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.from_int(-1).order_as_root_of_unity(), Some(2));
        assert_eq!(q4().zeta_power(1).order_as_root_of_unity(), Some(4));
        assert_eq!(q.from_int(2).order_as_root_of_unity(), None);
        let f3 = FieldSpec::cyclotomic(3).unwrap();
        assert_eq!((-f3.zeta_power(1)).order_as_root_of_unity(), Some(6));
    }

    #[test]
    fn roots() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.from_int(8).root_in_field(3), Some(q.from_int(2)));
        assert_eq!(q.from_int(2).root_search(2), RootSearch::Absent);
        assert_eq!(q.from_int(-8).root_in_field(3), Some(q.from_int(-2)));
        assert_eq!(q.from_int(-4).root_search(2), RootSearch::Absent);
        assert_eq!(
            q.from_ratio(4, 9).root_in_field(2),
            Some(q.from_ratio(2, 3))
        );
        let m1 = q4().from_int(-1);
        let r = m1.root_in_field(2).unwrap();
        assert_eq!(r, q4().zeta_power(1));
        assert_eq!(&r * &r, m1);
    }

    #[test]
    fn norm_obstruction_is_sound() {
        // 3 has no square root in Q(i): N(3) = 9 is a square, so the norm
        // test cannot decide it and the answer stays unknown.
        assert_eq!(q4().from_int(3).root_search(2), RootSearch::Unknown);
        // N(1 + i) = 2 is not a square, so 1 + i has no square root.
        let c = &q4().one() + &q4().zeta_power(1);
        assert_eq!(c.norm(), BigRational::from_integer(BigInt::from(2)));
        assert_eq!(c.root_search(2), RootSearch::Absent);
        // 2i = (1 + i)^2, but 1 + i is not a rational times a root of unity:
        // the candidate search misses it and the norm N(2i) = 4 cannot refute.
        let two_i = q4().from_int(2) * q4().zeta_power(1);
        assert_eq!(two_i.root_search(2), RootSearch::Unknown);
        // -4 = (2i)^2 is found.
        let r = q4().from_int(-4).root_in_field(2).unwrap();
        assert_eq!(r.pow(2).unwrap(), q4().from_int(-4));
    }

    #[test]
    fn roots_of_unity_in_odd_conductor() {
        let f = FieldSpec::cyclotomic(3).unwrap();
        let all = f.roots_of_unity();
        assert_eq!(all.len(), 6);
        for w in &all {
            assert!(w.pow(6).unwrap().is_one());
        }
        let z6 = f.root_of_unity(6).unwrap();
        assert_eq!(z6.order_as_root_of_unity(), Some(6));
        assert_eq!(z6.pow(2).unwrap(), f.zeta_power(1));
        assert!(f.root_of_unity(4).is_err());
    }

    #[test]
    fn display() {
        let f = FieldSpec::cyclotomic(8).unwrap();
        let e = &(&f.from_ratio(1, 2) * &f.zeta_power(3)) - &f.one();
        assert_eq!(e.to_string(), "-1 + 1/2*zeta(8)^3");
        assert_eq!(FieldSpec::Rationals.from_ratio(-3, 4).to_string(), "-3/4");
    }
}
