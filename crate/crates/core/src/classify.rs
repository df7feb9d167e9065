//! Isomorphism and automorphism classification.
//!
//! Two algebras over the same base ring are isomorphic exactly when
//! `q2` is `q1` or `q1^-1` and `a2(h) = alpha a1(beta h^eps)` for a unit
//! `alpha` of `D`, a scalar `beta` and a sign `eps` (`eps = 1` over `k[h]`);
//! when `a1` and `a2` are units only the condition on `q` remains. The
//! search for `(eps, beta, alpha)` reduces to one equation `beta^G = c`, so
//! it is complete whenever that root question is settled in the field.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraElement, AlgebraError, AlgebraSpec};
use crate::field::{FieldElement, FieldError, FieldSpec, Search};
use crate::morphisms::{self, IntMatrix, MorphismError, MorphismSpec};
use crate::poly::{solve_power_system, BaseRing, LaurentPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("algebras are defined over different fields")]
    MixedFields,
    #[error("algebras have different base rings")]
    MixedRings,
    #[error("parameter outside the descriptor: {0}")]
    OutsideDescriptor(String),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QMatch {
    Same,
    Inverted,
}

/// `a2(h) = alpha a1(beta h^eps)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub eps: i8,
    pub beta: FieldElement,
    pub alpha: LaurentPoly,
    pub q_match: QMatch,
}

impl IsoWitness {
    pub fn holds(&self, a1: &AlgebraSpec, a2: &AlgebraSpec) -> bool {
        let q_ok = match self.q_match {
            QMatch::Same => a2.q() == a1.q(),
            QMatch::Inverted => *a2.q() == a1.q_inv(),
        };
        let Ok(tw) = a1.a().twist(&self.beta, self.eps as i32) else {
            return false;
        };
        q_ok && self.alpha.is_unit() && &self.alpha * &tw == *a2.a()
    }

    /// An explicit isomorphism `A1 -> A2`.
    pub fn isomorphism(&self, a1: &Algebra, a2: &Algebra) -> Result<MorphismSpec, ClassifyError> {
        iso_from_witness(self, a1, a2)
    }
}

/// Result of [`decide_isomorphic`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoDecision {
    pub isomorphic: bool,
    pub witness: Option<IsoWitness>,
    /// `false` only when a root question could not be settled, in which
    /// case the absence of a witness is not a proof.
    pub search_complete: bool,
}

impl IsoDecision {
    fn no() -> Self {
        IsoDecision {
            isomorphic: false,
            witness: None,
            search_complete: true,
        }
    }

    fn yes(w: IsoWitness) -> Self {
        IsoDecision {
            isomorphic: true,
            witness: Some(w),
            search_complete: true,
        }
    }
}

fn check_compatible(a1: &AlgebraSpec, a2: &AlgebraSpec) -> Result<(), ClassifyError> {
    if a1.field() != a2.field() {
        return Err(ClassifyError::MixedFields);
    }
    if a1.ring() != a2.ring() {
        return Err(ClassifyError::MixedRings);
    }
    Ok(())
}

pub fn decide_isomorphic(a1: &AlgebraSpec, a2: &AlgebraSpec) -> Result<IsoDecision, ClassifyError> {
    check_compatible(a1, a2)?;
    let field = a1.field();
    let q_match = if a2.q() == a1.q() {
        QMatch::Same
    } else if *a2.q() == a1.q_inv() {
        QMatch::Inverted
    } else {
        return Ok(IsoDecision::no());
    };
    match (a1.is_unit_case(), a2.is_unit_case()) {
        (true, true) => {
            let alpha = a2.a() * &a1.a().inverse().expect("unit");
            let w = IsoWitness {
                eps: 1,
                beta: field.one(),
                alpha,
                q_match,
            };
            debug_assert!(w.holds(a1, a2));
            return Ok(IsoDecision::yes(w));
        }
        (false, false) => {}
        _ => return Ok(IsoDecision::no()),
    }
    if a1.a().is_monomial() != a2.a().is_monomial() {
        return Ok(IsoDecision::no());
    }
    let signs: &[i8] = match a1.ring() {
        BaseRing::Poly => &[1],
        BaseRing::Laurent => &[1, -1],
    };
    let mut complete = true;
    for &eps in signs {
        match witness_for_sign(a1, a2, eps, q_match)? {
            Search::Found(w) => return Ok(IsoDecision::yes(w)),
            Search::Absent => {}
            Search::Unknown => complete = false,
        }
    }
    Ok(IsoDecision {
        isomorphic: false,
        witness: None,
        search_complete: complete,
    })
}

fn witness_for_sign(
    a1: &AlgebraSpec,
    a2: &AlgebraSpec,
    eps: i8,
    q_match: QMatch,
) -> Result<Search<IsoWitness>, ClassifyError> {
    let field = a1.field();
    let e = eps as i64;
    let p1 = a1.a();
    let p2 = a2.a();
    let s1 = p1.support();
    let s2 = p2.support();
    // Shift m with support(a2) = eps * support(a1) + m.
    let reflected: BTreeSet<i64> = s1.iter().map(|i| e * i).collect();
    let m = s2[0] - reflected.iter().next().expect("nonzero");
    if a1.ring() == BaseRing::Poly && m != 0 {
        return Ok(Search::Absent);
    }
    let shifted: BTreeSet<i64> = reflected.iter().map(|i| i + m).collect();
    if shifted != s2.iter().copied().collect::<BTreeSet<_>>() {
        return Ok(Search::Absent);
    }
    // c2_(eps i + m) = c c1_i beta^i; anchoring at i0 leaves beta^(i - i0) = r_i.
    let i0 = s1[0];
    let c1 = |i: i64| p1.coeff(i);
    let c2 = |i: i64| p2.coeff(e * i + m);
    let anchor = c2(i0).div(&c1(i0))?;
    let mut eqs = Vec::new();
    for &i in &s1[1..] {
        let r = c2(i).div(&c1(i))?.div(&anchor)?;
        eqs.push((i - i0, r));
    }
    let beta = match solve_power_system(field, &eqs) {
        Search::Found(b) => b,
        Search::Absent => return Ok(Search::Absent),
        Search::Unknown => return Ok(Search::Unknown),
    };
    let c = anchor.div(&beta.pow(i0)?)?;
    let alpha = LaurentPoly::monomial(a1.ring(), c, m)?;
    let w = IsoWitness {
        eps,
        beta,
        alpha,
        q_match,
    };
    Ok(if w.holds(a1, a2) {
        Search::Found(w)
    } else {
        Search::Absent
    })
}

/// With `a2(h) = alpha(h) a1(beta h^eps)`: if `q2^eps = q1` the map is
/// `y -> y`, `h -> beta h^eps`, `x -> alpha^-1(q2 h) x`; otherwise
/// `y -> x`, `h -> beta q2^eps h^eps`, `x -> y alpha^-1(q2 h)`.
fn iso_from_witness(
    w: &IsoWitness,
    a1: &Algebra,
    a2: &Algebra,
) -> Result<MorphismSpec, ClassifyError> {
    let eps = w.eps as i64;
    let alpha_inv = w.alpha.inverse().ok_or(AlgebraError::NotInvertible)?;
    let q2 = a2.q();
    let same = q2.pow(eps)? == *a1.q();
    if same {
        // y alpha^-1(q2 h) x = alpha^-1(h) a2(h) = a1(beta h^eps)
        let img_h = AlgebraElement::monomial(a2, 0, eps, w.beta.clone())?;
        let coef = AlgebraElement::from_poly(a2, &a2.sigma_pow(&alpha_inv, 1))?;
        let img_x = &coef * &AlgebraElement::x(a2);
        return Ok(MorphismSpec::new(a1, AlgebraElement::y(a2), img_h, img_x)?);
    }
    // x y alpha^-1(q2 h) = a2(q2 h) alpha^-1(q2 h) = a1(beta (q2 h)^eps)
    let b = &w.beta * &q2.pow(eps)?;
    let img_h = AlgebraElement::monomial(a2, 0, eps, b)?;
    let coef = AlgebraElement::from_poly(a2, &a2.sigma_pow(&alpha_inv, 1))?;
    let img_x = &AlgebraElement::y(a2) * &coef;
    Ok(MorphismSpec::new(a1, AlgebraElement::x(a2), img_h, img_x)?)
}

/// Symbolic description of `Aut(A)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum AutDescriptor {
    /// `a` not a unit: `G = {eta_{gamma,mu}} = C_g x k^x`, enlarged over
    /// `k[h, h^-1]` by the shifts `y -> y h^k`, and extended by `Z/2` for
    /// each available involution.
    NonUnit {
        g: u64,
        torus_rank: u8,
        /// Order of `C_g`; 0 means all of `k^x`.
        cg_order: u64,
        exponent: i64,
        has_omega: bool,
        has_omega_sym: bool,
        /// Rank of the group of shifts `y -> y h^k, x -> h^-k x` (1 over
        /// `k[h, h^-1]`, 0 over `k[h]`).
        shift_rank: u8,
    },
    /// `a` a unit over `k[h]`: `(k^x)^2` by `H = {(e l; 0 1)}`.
    UnitPoly {
        epsilon_range: Vec<i8>,
        torus_rank: u8,
    },
    /// `a` a unit over `k[h, h^-1]`: `(k^x)^2` by `SL2(Z)` or `GL2(Z)`.
    UnitLaurent { h_group: String, torus_rank: u8 },
}

impl fmt::Display for AutDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutDescriptor::NonUnit {
                g,
                has_omega,
                has_omega_sym,
                shift_rank,
                ..
            } => {
                let cg = if *g == 0 {
                    "k^x".to_string()
                } else {
                    format!("C_{g}")
                };
                let mut s = format!("{cg} x k^x");
                if *shift_rank > 0 {
                    s = format!("({s}) x Z");
                }
                if *has_omega {
                    s = format!("({s}) x| Z/2");
                }
                if *has_omega_sym {
                    s = format!("({s}) x| Z/2");
                }
                write!(f, "{s}")
            }
            AutDescriptor::UnitPoly { epsilon_range, .. } => {
                if epsilon_range.len() == 2 {
                    write!(f, "(k^x)^2 x| {{(e l; 0 1) : e = +-1, l in Z}}")
                } else {
                    write!(f, "(k^x)^2 x| {{(1 l; 0 1) : l in Z}}")
                }
            }
            AutDescriptor::UnitLaurent { h_group, .. } => write!(f, "(k^x)^2 x| {h_group}"),
        }
    }
}

pub fn automorphism_group(alg: &AlgebraSpec) -> Result<AutDescriptor, ClassifyError> {
    let minus_one = alg.q_is_minus_one();
    if alg.is_unit_case() {
        return Ok(match alg.ring() {
            BaseRing::Poly => AutDescriptor::UnitPoly {
                epsilon_range: if minus_one { vec![1, -1] } else { vec![1] },
                torus_rank: 2,
            },
            BaseRing::Laurent => AutDescriptor::UnitLaurent {
                h_group: if minus_one { "GL2(Z)" } else { "SL2(Z)" }.to_string(),
                torus_rank: 2,
            },
        });
    }
    let g = alg.a().gap_gcd()?;
    let laurent = alg.ring() == BaseRing::Laurent;
    Ok(AutDescriptor::NonUnit {
        g,
        torus_rank: 1,
        cg_order: g,
        exponent: morphisms::eta_exponent(alg),
        has_omega: minus_one,
        has_omega_sym: laurent && alg.a().is_symmetric().is_some(),
        shift_rank: laurent as u8,
    })
}

/// How a morphism was recognized inside the descriptor's group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recognized {
    Eta {
        gamma: FieldElement,
        mu: FieldElement,
        shift: i64,
    },
    /// `eta ∘ omega` (or `omega_minus1` over the Laurent ring).
    EtaOmega {
        gamma: FieldElement,
        mu: FieldElement,
        shift: i64,
    },
    EtaOmegaSym {
        gamma: FieldElement,
        mu: FieldElement,
        shift: i64,
    },
    Unit {
        matrix: IntMatrix,
        s: FieldElement,
        t: FieldElement,
    },
}

fn recognize_eta(alg: &Algebra, m: &MorphismSpec) -> Option<(FieldElement, FieldElement, i64)> {
    let (hm, gamma) = m.img_h().as_single_term()?;
    let (ym, mu) = m.img_y().as_single_term()?;
    if hm.s != 0 || hm.j != 1 || ym.s != 1 {
        return None;
    }
    let e = morphisms::eta_shifted(alg, &gamma, &mu, ym.j).ok()?;
    (e == *m).then_some((gamma, mu, ym.j))
}

/// Membership of an automorphism of `alg` in the group described by
/// `automorphism_group(alg)`, by matching its images.
pub fn recognize(alg: &Algebra, m: &MorphismSpec) -> Option<Recognized> {
    if !AlgebraSpec::same(alg, m.source()) || !AlgebraSpec::same(alg, m.target()) {
        return None;
    }
    match automorphism_group(alg).ok()? {
        AutDescriptor::NonUnit {
            has_omega,
            has_omega_sym,
            ..
        } => {
            if let Some((gamma, mu, shift)) = recognize_eta(alg, m) {
                return Some(Recognized::Eta { gamma, mu, shift });
            }
            if has_omega {
                let o = morphisms::omega(alg).ok()?;
                // m = eta ∘ omega with omega an involution
                if let Some((gamma, mu, shift)) =
                    m.compose(&o).ok().and_then(|c| recognize_eta(alg, &c))
                {
                    return Some(Recognized::EtaOmega { gamma, mu, shift });
                }
            }
            if has_omega_sym {
                let o_inv = morphisms::omega_sym(alg)?.invert().ok()?;
                if let Some((gamma, mu, shift)) =
                    m.compose(&o_inv).ok().and_then(|c| recognize_eta(alg, &c))
                {
                    return Some(Recognized::EtaOmegaSym { gamma, mu, shift });
                }
            }
            None
        }
        _ => {
            let (matrix, s, t) = morphisms::unit_matrix(m).ok()?;
            let rebuilt =
                morphisms::unit_case_automorphism(alg, &matrix, (s.clone(), t.clone())).ok()?;
            (rebuilt == *m).then_some(Recognized::Unit { matrix, s, t })
        }
    }
}

/// Parameters for [`sample_automorphisms`].
#[derive(Debug, Clone, Default)]
pub struct SampleParams {
    pub gammas: Vec<FieldElement>,
    pub mus: Vec<FieldElement>,
    pub shifts: Vec<i64>,
    pub matrices: Vec<IntMatrix>,
    pub tori: Vec<(FieldElement, FieldElement)>,
}

/// Concrete automorphisms realizing elements of the descriptor; each is
/// verified before it is returned.
pub fn sample_automorphisms(
    alg: &Algebra,
    descriptor: &AutDescriptor,
    params: &SampleParams,
) -> Result<Vec<MorphismSpec>, ClassifyError> {
    let mut out = Vec::new();
    match descriptor {
        AutDescriptor::NonUnit {
            has_omega,
            has_omega_sym,
            shift_rank,
            ..
        } => {
            let shifts: Vec<i64> = if params.shifts.is_empty() {
                vec![0]
            } else {
                params.shifts.clone()
            };
            if *shift_rank == 0 && shifts.iter().any(|&k| k != 0) {
                return Err(ClassifyError::OutsideDescriptor(
                    "shifts need k[h, h^-1]".into(),
                ));
            }
            for gamma in &params.gammas {
                for mu in &params.mus {
                    for &k in &shifts {
                        out.push(morphisms::eta_shifted(alg, gamma, mu, k)?);
                    }
                }
            }
            if *has_omega {
                out.push(morphisms::omega(alg)?);
            }
            if *has_omega_sym {
                out.push(morphisms::omega_sym(alg).ok_or(MorphismError::NotRecognizedInvertible)?);
            }
        }
        _ => {
            let one = alg.field().one();
            let tori = if params.tori.is_empty() {
                vec![(one.clone(), one)]
            } else {
                params.tori.clone()
            };
            for m in &params.matrices {
                for t in &tori {
                    out.push(morphisms::unit_case_automorphism(alg, m, t.clone())?);
                }
            }
        }
    }
    for m in &out {
        if !m.is_verified() {
            return Err(MorphismError::NotRecognizedInvertible.into());
        }
    }
    Ok(out)
}

/// Parameter grids for [`cross_check_aut`].
#[derive(Debug, Clone)]
pub struct CrossCheckGrid {
    pub gammas: Vec<FieldElement>,
    pub scalars: Vec<FieldElement>,
    /// `mu, nu` range over `c h^k` with `|k| <= shift_bound` (Laurent only).
    pub shift_bound: i64,
}

impl CrossCheckGrid {
    /// All roots of unity of the field for `gamma`, `size` small scalars for
    /// `mu` and `nu`, shifts up to 1 over the Laurent ring.
    pub fn standard(alg: &AlgebraSpec, size: usize) -> Self {
        let field = alg.field();
        CrossCheckGrid {
            gammas: field.roots_of_unity(),
            scalars: small_scalars(field, size),
            shift_bound: match alg.ring() {
                BaseRing::Poly => 0,
                BaseRing::Laurent => 1,
            },
        }
    }
}

/// The first `n` distinct scalars of `1, -1, 2, -2, zeta, 1/2, -zeta, 3, ...`.
pub fn small_scalars(field: FieldSpec, n: usize) -> Vec<FieldElement> {
    let z = field.primitive_root_of_unity();
    let mut pool = vec![
        field.from_int(1),
        field.from_int(-1),
        field.from_int(2),
        field.from_int(-2),
        z.clone(),
        field.from_ratio(1, 2),
        -&z,
        field.from_int(3),
        field.from_ratio(-1, 2),
        field.from_ratio(1, 3),
    ];
    pool.extend((4..).take(n).map(|k| field.from_int(k)));
    let mut out: Vec<FieldElement> = Vec::new();
    for c in pool {
        if out.len() == n {
            break;
        }
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossCheckReport {
    pub candidates: usize,
    /// Candidates satisfying the defining relations.
    pub verified: usize,
    /// Verified candidates with `eps = -1`.
    pub verified_eps_minus: usize,
    /// Verified candidates that are not invertible (endomorphisms only).
    pub not_invertible: usize,
    pub recognized: usize,
    pub unrecognized: Vec<MorphismSpec>,
    pub ok: bool,
}

/// Enumerates the shapes `h -> gamma h^eps` with either `y -> y mu`,
/// `x -> nu x` or `y -> mu x`, `x -> y nu` (`mu, nu` units of `D`) over the
/// grids, verifies each, and checks that every verified automorphism is
/// recognized inside `automorphism_group(alg)`.
pub fn cross_check_aut(
    alg: &Algebra,
    grid: &CrossCheckGrid,
) -> Result<CrossCheckReport, ClassifyError> {
    let signs: &[i64] = match alg.ring() {
        BaseRing::Poly => &[1],
        BaseRing::Laurent => &[1, -1],
    };
    let mut units = Vec::new();
    for c in &grid.scalars {
        for k in -grid.shift_bound..=grid.shift_bound {
            units.push(AlgebraElement::monomial(alg, 0, k, c.clone())?);
        }
    }
    let (y, x) = (AlgebraElement::y(alg), AlgebraElement::x(alg));
    let mut report = CrossCheckReport {
        candidates: 0,
        verified: 0,
        verified_eps_minus: 0,
        not_invertible: 0,
        recognized: 0,
        unrecognized: Vec::new(),
        ok: true,
    };
    for gamma in &grid.gammas {
        for &eps in signs {
            let img_h = AlgebraElement::monomial(alg, 0, eps, gamma.clone())?;
            for mu in &units {
                for nu in &units {
                    for swap in [false, true] {
                        let (img_y, img_x) = if swap {
                            (mu * &x, &y * nu)
                        } else {
                            (&y * mu, nu * &x)
                        };
                        let m = MorphismSpec::new(alg, img_y, img_h.clone(), img_x)?;
                        report.candidates += 1;
                        if !m.is_verified() {
                            continue;
                        }
                        report.verified += 1;
                        if eps == -1 {
                            report.verified_eps_minus += 1;
                        }
                        if m.invert().is_err() {
                            report.not_invertible += 1;
                            continue;
                        }
                        if recognize(alg, &m).is_some() {
                            report.recognized += 1;
                        } else {
                            report.unrecognized.push(m);
                        }
                    }
                }
            }
        }
    }
    report.ok = report.unrecognized.is_empty();
    Ok(report)
}

/// Indecomposable elements of `Lambda = <(1,0), (0,1), (-1,N)>` on the
/// boundary of the cone it spans, found by brute force in the box
/// `|u|, |v| <= radius`.
pub fn lambda_indecomposables(n: i64, radius: i64) -> BTreeSet<(i64, i64)> {
    let in_lambda = |u: i64, v: i64| v >= 0 && v + n * u >= 0;
    let mut out = BTreeSet::new();
    for u in -radius..=radius {
        for v in -radius..=radius {
            if (u, v) == (0, 0) || !in_lambda(u, v) {
                continue;
            }
            // A summand (a, b) has 0 <= b <= v and -v <= a <= u + v.
            let decomposable = (-v..=u + v).any(|a| {
                (0..=v).any(|b| {
                    (a, b) != (0, 0)
                        && (a, b) != (u, v)
                        && in_lambda(a, b)
                        && in_lambda(u - a, v - b)
                })
            });
            let boundary = v == 0 || v + n * u == 0;
            if !decomposable && boundary {
                out.insert((u, v));
            }
        }
    }
    out
}
