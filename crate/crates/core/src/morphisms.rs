//! Algebra morphisms `A(D, q1, a1) -> A(D, q2, a2)` given by the images of
//! `y, h, x`, together with constructors for the known automorphism families.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraElement, AlgebraError, AlgebraSpec, Relation};
use crate::field::FieldElement;
use crate::poly::BaseRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("the image of h is not invertible in the target")]
    NonInvertibleImageOfH,
    #[error("gamma is not a g-th root of unity for g = {0}")]
    GammaNotInCg(u64),
    #[error("mu must be nonzero")]
    ZeroMu,
    #[error("q is not -1")]
    QNotMinusOne,
    #[error("the base ring must be k[h, h^-1]")]
    NotLaurent,
    #[error("a is not a unit")]
    NotUnitCase,
    #[error("matrix is not in the group H")]
    MatrixNotInH,
    #[error("target of the first morphism is not the source of the second")]
    NotComposable,
    #[error("morphism is not of a recognized invertible shape")]
    NotRecognizedInvertible,
    #[error("images belong to the wrong algebra")]
    WrongAlgebra,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Integer 2x2 matrix, row-major.
pub type IntMatrix = [[i64; 2]; 2];

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

pub fn det(m: &IntMatrix) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Inverse of a matrix with determinant `+-1`.
pub fn mat_inv(m: &IntMatrix) -> Option<IntMatrix> {
    let d = det(m);
    if d.abs() != 1 {
        return None;
    }
    Some([[m[1][1] * d, -m[0][1] * d], [-m[1][0] * d, m[0][0] * d]])
}

#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct MorphismSpec {
    #[serde(skip)]
    source: Algebra,
    #[serde(skip)]
    target: Algebra,
    img_y: AlgebraElement,
    img_h: AlgebraElement,
    img_x: AlgebraElement,
}

impl std::fmt::Debug for MorphismSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "y -> {}, h -> {}, x -> {}",
            self.img_y, self.img_h, self.img_x
        )
    }
}

/// Outcome of checking the defining relations on the images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub failing: Vec<Relation>,
}

impl MorphismSpec {
    pub fn new(
        source: &Algebra,
        img_y: AlgebraElement,
        img_h: AlgebraElement,
        img_x: AlgebraElement,
    ) -> Result<Self, MorphismError> {
        let target = img_y.algebra().clone();
        if !AlgebraSpec::same(&target, img_h.algebra())
            || !AlgebraSpec::same(&target, img_x.algebra())
        {
            return Err(MorphismError::WrongAlgebra);
        }
        Ok(MorphismSpec {
            source: source.clone(),
            target,
            img_y,
            img_h,
            img_x,
        })
    }

    pub fn identity(alg: &Algebra) -> Self {
        MorphismSpec {
            source: alg.clone(),
            target: alg.clone(),
            img_y: AlgebraElement::y(alg),
            img_h: AlgebraElement::h(alg),
            img_x: AlgebraElement::x(alg),
        }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn img_y(&self) -> &AlgebraElement {
        &self.img_y
    }

    pub fn img_h(&self) -> &AlgebraElement {
        &self.img_h
    }

    pub fn img_x(&self) -> &AlgebraElement {
        &self.img_x
    }

    fn img_h_inv(&self) -> Result<Option<AlgebraElement>, MorphismError> {
        if self.source.ring() == BaseRing::Poly {
            return Ok(None);
        }
        self.img_h
            .try_inverse()
            .map(Some)
            .ok_or(MorphismError::NonInvertibleImageOfH)
    }

    /// Checks the four relations of the source on the images.
    pub fn verify(&self) -> Result<Verification, MorphismError> {
        self.img_h_inv()?;
        let (y, h, x) = (&self.img_y, &self.img_h, &self.img_x);
        let q1 = self.source.q();
        let a1 = self.source.a();
        let a_h = AlgebraElement::eval_poly(a1, h)?;
        let a_qh = AlgebraElement::eval_poly(a1, &h.scale(q1))?;
        let checks = [
            (Relation::HY, &(h * y) - &(y * h).scale(q1)),
            (Relation::XH, &(x * h) - &(h * x).scale(q1)),
            (Relation::YX, &(y * x) - &a_h),
            (Relation::XY, &(x * y) - &a_qh),
        ];
        let failing: Vec<Relation> = checks
            .into_iter()
            .filter(|(_, d)| !d.is_zero())
            .map(|(r, _)| r)
            .collect();
        Ok(Verification {
            ok: failing.is_empty(),
            failing,
        })
    }

    pub fn is_verified(&self) -> bool {
        self.verify().map(|v| v.ok).unwrap_or(false)
    }

    pub fn apply(&self, u: &AlgebraElement) -> Result<AlgebraElement, MorphismError> {
        if !AlgebraSpec::same(&self.source, u.algebra()) {
            return Err(MorphismError::WrongAlgebra);
        }
        let h_inv = self.img_h_inv()?;
        let mut out = AlgebraElement::zero(&self.target);
        for (m, c) in u.terms() {
            let (i, j, k) = m.exponents();
            let hj = if j >= 0 {
                self.img_h.pow(j as u32)
            } else {
                h_inv
                    .as_ref()
                    .ok_or(MorphismError::NonInvertibleImageOfH)?
                    .pow((-j) as u32)
            };
            let term = &(&self.img_y.pow(i as u32) * &hj) * &self.img_x.pow(k as u32);
            out = &out + &term.scale(c);
        }
        Ok(out)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &MorphismSpec) -> Result<MorphismSpec, MorphismError> {
        if !AlgebraSpec::same(&first.target, &self.source) {
            return Err(MorphismError::NotComposable);
        }
        Ok(MorphismSpec {
            source: first.source.clone(),
            target: self.target.clone(),
            img_y: self.apply(&first.img_y)?,
            img_h: self.apply(&first.img_h)?,
            img_x: self.apply(&first.img_x)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        AlgebraSpec::same(&self.source, &self.target)
            && *self == MorphismSpec::identity(&self.source)
    }

    /// Inverse for monomial-shaped morphisms and unit-case automorphisms,
    /// checked on both sides.
    pub fn invert(&self) -> Result<MorphismSpec, MorphismError> {
        let inv = if self.source.is_unit_case() {
            self.invert_unit_case()?
        } else {
            self.invert_monomial()?
        };
        let ok = inv.is_verified()
            && inv.compose(self).map(|c| c.is_identity()).unwrap_or(false)
            && self.compose(&inv).map(|c| c.is_identity()).unwrap_or(false);
        if ok {
            Ok(inv)
        } else {
            Err(MorphismError::NotRecognizedInvertible)
        }
    }

    fn invert_monomial(&self) -> Result<MorphismSpec, MorphismError> {
        let nr = MorphismError::NotRecognizedInvertible;
        let a1 = &self.source;
        let a2 = &self.target;
        let (hm, hc) = self.img_h.as_single_term().ok_or(nr.clone())?;
        if hm.s != 0 {
            return Err(nr);
        }
        // n(c h^e) = h, so n(h) = c^-1 h for e = 1 and c h^-1 for e = -1.
        let n_h = match hm.j {
            1 => AlgebraElement::monomial(a1, 0, 1, hc.inv().map_err(AlgebraError::from)?)?,
            -1 => AlgebraElement::monomial(a1, 0, -1, hc)?,
            _ => return Err(nr),
        };
        let n_h_pow = |j: i64| -> Result<AlgebraElement, MorphismError> {
            n_h.pow_i(j)
                .map_err(|_| MorphismError::NotRecognizedInvertible)
        };
        let (y1, x1) = (AlgebraElement::y(a1), AlgebraElement::x(a1));
        let mut n_y = None;
        let mut n_x = None;
        // eta(y) = c y h^j gives n(y) = c^-1 y n(h)^-j, and so on.
        for (img, is_y) in [(&self.img_y, true), (&self.img_x, false)] {
            let (m, c) = img.as_single_term().ok_or(nr.clone())?;
            let c_inv = c.inv().map_err(AlgebraError::from)?;
            let target_gen = if is_y { &y1 } else { &x1 };
            match m.s {
                1 => {
                    let v = (target_gen * &n_h_pow(-m.j)?).scale(&c_inv);
                    if n_y.replace(v).is_some() {
                        return Err(nr);
                    }
                }
                -1 => {
                    let v = (&n_h_pow(-m.j)? * target_gen).scale(&c_inv);
                    if n_x.replace(v).is_some() {
                        return Err(nr);
                    }
                }
                _ => return Err(nr),
            }
        }
        MorphismSpec::new(a2, n_y.ok_or(nr.clone())?, n_h, n_x.ok_or(nr)?)
    }

    fn invert_unit_case(&self) -> Result<MorphismSpec, MorphismError> {
        if !AlgebraSpec::same(&self.source, &self.target) {
            return Err(MorphismError::NotRecognizedInvertible);
        }
        let alg = &self.source;
        let (m, _, _) = unit_matrix(self)?;
        let m_inv = mat_inv(&m).ok_or(MorphismError::NotRecognizedInvertible)?;
        let one = alg.field().one();
        let n = unit_case_candidate(alg, &m_inv, (one.clone(), one))?;
        let torus = n.compose(self)?;
        let (tm, s, t) = unit_matrix(&torus)?;
        if tm != [[1, 0], [0, 1]] {
            return Err(MorphismError::NotRecognizedInvertible);
        }
        let fix = unit_case_candidate(
            alg,
            &tm,
            (
                s.inv().map_err(AlgebraError::from)?,
                t.inv().map_err(AlgebraError::from)?,
            ),
        )?;
        fix.compose(&n)
    }
}

fn gap_ok(alg: &AlgebraSpec, gamma: &FieldElement) -> Result<(), MorphismError> {
    let g = alg.a().gap_gcd().map_err(AlgebraError::from)?;
    if gamma.is_zero() {
        return Err(MorphismError::GammaNotInCg(g));
    }
    if g > 0 && !gamma.pow(g as i64).map_err(AlgebraError::from)?.is_one() {
        return Err(MorphismError::GammaNotInCg(g));
    }
    Ok(())
}

/// The exponent `i0` used by `eta`: the smallest exponent in the support of `a`.
pub fn eta_exponent(alg: &AlgebraSpec) -> i64 {
    alg.a().min_exp().expect("a is nonzero")
}

/// `eta_{gamma,mu}`: `y -> mu y`, `h -> gamma h`, `x -> mu^-1 gamma^i0 x`.
pub fn eta(
    alg: &Algebra,
    gamma: &FieldElement,
    mu: &FieldElement,
) -> Result<MorphismSpec, MorphismError> {
    eta_shifted(alg, gamma, mu, 0)
}

/// `y -> mu y h^k`, `h -> gamma h`, `x -> mu^-1 gamma^i0 h^-k x`; `k != 0`
/// needs the Laurent ring.
pub fn eta_shifted(
    alg: &Algebra,
    gamma: &FieldElement,
    mu: &FieldElement,
    k: i64,
) -> Result<MorphismSpec, MorphismError> {
    if mu.is_zero() {
        return Err(MorphismError::ZeroMu);
    }
    if k != 0 && alg.ring() != BaseRing::Laurent {
        return Err(MorphismError::NotLaurent);
    }
    gap_ok(alg, gamma)?;
    let i0 = eta_exponent(alg);
    let nu = &mu.inv().map_err(AlgebraError::from)? * &gamma.pow(i0).map_err(AlgebraError::from)?;
    let img_y = AlgebraElement::monomial(alg, 1, k, mu.clone())?;
    let img_h = AlgebraElement::monomial(alg, 0, 1, gamma.clone())?;
    let img_x = AlgebraElement::monomial(alg, -1, -k, nu)?;
    MorphismSpec::new(alg, img_y, img_h, img_x)
}

fn require_minus_one(alg: &AlgebraSpec) -> Result<(), MorphismError> {
    if alg.q_is_minus_one() {
        Ok(())
    } else {
        Err(MorphismError::QNotMinusOne)
    }
}

/// `y -> x`, `h -> -h`, `x -> y` for `q = -1`.
pub fn omega(alg: &Algebra) -> Result<MorphismSpec, MorphismError> {
    require_minus_one(alg)?;
    let img_h = AlgebraElement::h(alg).scale(&alg.field().from_int(-1));
    MorphismSpec::new(alg, AlgebraElement::x(alg), img_h, AlgebraElement::y(alg))
}

/// `y -> x`, `h -> qh`, `x -> y` for `q = -1` over the Laurent ring.
pub fn omega_minus1(alg: &Algebra) -> Result<MorphismSpec, MorphismError> {
    require_minus_one(alg)?;
    if alg.ring() != BaseRing::Laurent {
        return Err(MorphismError::NotLaurent);
    }
    let img_h = AlgebraElement::h(alg).scale(alg.q());
    MorphismSpec::new(alg, AlgebraElement::x(alg), img_h, AlgebraElement::y(alg))
}

/// For symmetric `a` (`delta a(h) = h^l a(gamma h^-1)`) over the Laurent ring:
/// `y -> x`, `h -> q^-1 gamma h^-1`, `x -> delta q^-l y h^-l`.
pub fn omega_sym(alg: &Algebra) -> Option<MorphismSpec> {
    if alg.ring() != BaseRing::Laurent {
        return None;
    }
    let sym = alg.a().is_symmetric()?;
    let q_inv = alg.q_inv();
    let img_h = AlgebraElement::monomial(alg, 0, -1, &q_inv * &sym.gamma).ok()?;
    let coeff = &sym.delta * &q_inv.pow(sym.l).ok()?;
    let img_x = AlgebraElement::monomial(alg, 1, -sym.l, coeff).ok()?;
    MorphismSpec::new(alg, AlgebraElement::x(alg), img_h, img_x).ok()
}

/// Membership in the group `H` of the unit case.
///
/// Over `k[h]` matrices act on exponent vectors `(x, h)` and `H` consists of
/// `(e l; 0 1)` with `e = 1`, or `e = +-1` when `q = -1`. Over `k[h, h^-1]`
/// they act on `(h, x)` and `H` is `SL2(Z)`, or `GL2(Z)` when `q = -1`.
pub fn in_h(alg: &AlgebraSpec, m: &IntMatrix) -> bool {
    let minus_one = alg.q_is_minus_one();
    match alg.ring() {
        BaseRing::Poly => {
            m[1][0] == 0 && m[1][1] == 1 && (m[0][0] == 1 || (minus_one && m[0][0] == -1))
        }
        BaseRing::Laurent => {
            let d = det(m);
            d == 1 || (minus_one && d == -1)
        }
    }
}

/// Unit-case automorphism for `M` in `H`, scaled by `torus = (s, t)`.
pub fn unit_case_automorphism(
    alg: &Algebra,
    m: &IntMatrix,
    torus: (FieldElement, FieldElement),
) -> Result<MorphismSpec, MorphismError> {
    if !alg.is_unit_case() {
        return Err(MorphismError::NotUnitCase);
    }
    if !in_h(alg, m) {
        return Err(MorphismError::MatrixNotInH);
    }
    unit_case_candidate(alg, m, torus)
}

/// The images prescribed by `M` and `(s, t)` without checking `M` in `H`.
///
/// Laurent: `h -> s h^m11 x^m21`, `x -> t h^m12 x^m22`.
/// Poly: `x -> t x^m11`, `h -> s h x^m12` (the second row must be `(0 1)`).
/// In both cases `y -> a(img h) img(x)^-1`.
pub fn unit_case_candidate(
    alg: &Algebra,
    m: &IntMatrix,
    torus: (FieldElement, FieldElement),
) -> Result<MorphismSpec, MorphismError> {
    if !alg.is_unit_case() {
        return Err(MorphismError::NotUnitCase);
    }
    let (s, t) = torus;
    let (img_h, img_x) = match alg.ring() {
        BaseRing::Laurent => (
            AlgebraElement::skew_monomial(alg, m[0][0], m[1][0])?.scale(&s),
            AlgebraElement::skew_monomial(alg, m[0][1], m[1][1])?.scale(&t),
        ),
        BaseRing::Poly => {
            if m[1] != [0, 1] {
                return Err(MorphismError::MatrixNotInH);
            }
            (
                AlgebraElement::skew_monomial(alg, 1, m[0][1])?.scale(&s),
                AlgebraElement::skew_monomial(alg, 0, m[0][0])?.scale(&t),
            )
        }
    };
    let x_inv = img_x.try_inverse().ok_or(AlgebraError::NotInvertible)?;
    let img_y = &AlgebraElement::eval_poly(alg.a(), &img_h)? * &x_inv;
    MorphismSpec::new(alg, img_y, img_h, img_x)
}

/// Skew exponents and coefficient of a one-term element: `u = c h^a x^b`.
fn skew_form(u: &AlgebraElement) -> Result<(i64, i64, FieldElement), MorphismError> {
    let alg = u.algebra();
    let (m, c) = u
        .as_single_term()
        .ok_or(MorphismError::NotRecognizedInvertible)?;
    let (a, b) = AlgebraElement::skew_exponents(alg, m)?;
    let base = AlgebraElement::skew_monomial(alg, a, b)?;
    let (_, bc) = base.as_single_term().expect("monomial");
    Ok((a, b, c.div(&bc).map_err(AlgebraError::from)?))
}

/// The matrix `pi(m)` and the torus part `(s, t)` of a unit-case morphism
/// whose images of `h` and `x` are single terms.
pub fn unit_matrix(
    m: &MorphismSpec,
) -> Result<(IntMatrix, FieldElement, FieldElement), MorphismError> {
    let (ha, hb, s) = skew_form(&m.img_h)?;
    let (xa, xb, t) = skew_form(&m.img_x)?;
    let mat = match m.source.ring() {
        BaseRing::Laurent => [[ha, xa], [hb, xb]],
        BaseRing::Poly => {
            if ha != 1 || xa != 0 {
                return Err(MorphismError::MatrixNotInH);
            }
            [[xb, hb], [0, 1]]
        }
    };
    Ok((mat, s, t))
}
