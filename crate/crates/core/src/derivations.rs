//! Derivations of `A(D, q, a)`, determined by their values on `y, h, x`.
//!
//! A triple of images extends to a derivation exactly when the Leibniz rule
//! applied to the four defining relations gives zero; the defect of each
//! relation is linear in the images, which is what [`derivation_space`] uses
//! to solve for all homogeneous derivations with bounded coefficients.
//!
//! Nilpotency and local finiteness can only be probed up to an iteration
//! bound; the probes here report exactly what they checked.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraElement, AlgebraError, AlgebraSpec, Relation, StdMonomial};
use crate::field::FieldElement;
use crate::linalg;
use crate::poly::BaseRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("images are not consistent with the relation {0}")]
    InconsistentImages(Relation),
    #[error("images belong to different algebras")]
    MixedAlgebras,
    #[error("deg_d is undefined at zero")]
    ZeroElement,
    #[error("a is not a monomial, so tau is undefined")]
    NotMonomial,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct DerivationSpec {
    #[serde(skip)]
    alg: Algebra,
    img_y: AlgebraElement,
    img_h: AlgebraElement,
    img_x: AlgebraElement,
}

impl std::fmt::Debug for DerivationSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})d_y + ({})d_h + ({})d_x",
            self.img_y, self.img_h, self.img_x
        )
    }
}

/// `d(g^n)` by the Leibniz rule.
fn d_power(g: &AlgebraElement, dg: &AlgebraElement, n: u32) -> AlgebraElement {
    let alg = g.algebra();
    let mut out = AlgebraElement::zero(alg);
    if n == 0 {
        return out;
    }
    let powers: Vec<AlgebraElement> = (0..n)
        .scan(AlgebraElement::one(alg), |acc, _| {
            let cur = acc.clone();
            *acc = &*acc * g;
            Some(cur)
        })
        .collect();
    for t in 0..n as usize {
        out = &out + &(&(&powers[t] * dg) * &powers[n as usize - 1 - t]);
    }
    out
}

/// Value on `h^e` given the value `dh` on `h` (`e < 0` needs the Laurent ring).
fn d_h_power(alg: &Algebra, dh: &AlgebraElement, e: i64) -> Result<AlgebraElement, AlgebraError> {
    if e >= 0 {
        return Ok(d_power(&AlgebraElement::h(alg), dh, e as u32));
    }
    let hi = AlgebraElement::h_inv(alg)?;
    let dhi = -&(&(&hi * dh) * &hi);
    Ok(d_power(&hi, &dhi, (-e) as u32))
}

/// Leibniz defects of the four relations for arbitrary images.
pub fn relation_defects(
    alg: &Algebra,
    dy: &AlgebraElement,
    dh: &AlgebraElement,
    dx: &AlgebraElement,
) -> Result<[(Relation, AlgebraElement); 4], AlgebraError> {
    let (y, h, x) = (
        AlgebraElement::y(alg),
        AlgebraElement::h(alg),
        AlgebraElement::x(alg),
    );
    let q = alg.q();
    let hy = &(&(dh * &y) + &(&h * dy)) - &(&(dy * &h) + &(&y * dh)).scale(q);
    let xh = &(&(dx * &h) + &(&x * dh)) - &(&(dh * &x) + &(&h * dx)).scale(q);
    let mut d_a = AlgebraElement::zero(alg);
    let mut d_aq = AlgebraElement::zero(alg);
    for (e, c) in alg.a().terms() {
        let de = d_h_power(alg, dh, e)?;
        d_a = &d_a + &de.scale(c);
        d_aq = &d_aq + &de.scale(&(c * &q.pow(e)?));
    }
    let yx = &(&(dy * &x) + &(&y * dx)) - &d_a;
    let xy = &(&(dx * &y) + &(&x * dy)) - &d_aq;
    Ok([
        (Relation::HY, hy),
        (Relation::XH, xh),
        (Relation::YX, yx),
        (Relation::XY, xy),
    ])
}

impl DerivationSpec {
    pub fn from_images(
        img_y: AlgebraElement,
        img_h: AlgebraElement,
        img_x: AlgebraElement,
    ) -> Result<Self, DerivationError> {
        let alg = img_y.algebra().clone();
        if !AlgebraSpec::same(&alg, img_h.algebra()) || !AlgebraSpec::same(&alg, img_x.algebra()) {
            return Err(DerivationError::MixedAlgebras);
        }
        for (rel, defect) in relation_defects(&alg, &img_y, &img_h, &img_x)? {
            if !defect.is_zero() {
                return Err(DerivationError::InconsistentImages(rel));
            }
        }
        Ok(DerivationSpec {
            alg,
            img_y,
            img_h,
            img_x,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
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

    /// `d(h^-1) = -h^-1 d(h) h^-1` (Laurent ring only).
    pub fn img_h_inv(&self) -> Result<AlgebraElement, AlgebraError> {
        d_h_power(&self.alg, &self.img_h, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.img_y.is_zero() && self.img_h.is_zero() && self.img_x.is_zero()
    }

    /// The derivation `sum c_i d_i`.
    pub fn linear_combination(alg: &Algebra, terms: &[(FieldElement, &DerivationSpec)]) -> Self {
        let mut d = DerivationSpec::zero(alg);
        for (c, e) in terms {
            d.img_y = &d.img_y + &e.img_y.scale(c);
            d.img_h = &d.img_h + &e.img_h.scale(c);
            d.img_x = &d.img_x + &e.img_x.scale(c);
        }
        d
    }

    pub fn zero(alg: &Algebra) -> Self {
        let z = AlgebraElement::zero(alg);
        DerivationSpec {
            alg: alg.clone(),
            img_y: z.clone(),
            img_h: z.clone(),
            img_x: z,
        }
    }

    pub fn apply(&self, u: &AlgebraElement) -> AlgebraElement {
        assert!(
            AlgebraSpec::same(&self.alg, u.algebra()),
            "element of a different algebra"
        );
        let alg = &self.alg;
        let (y, x) = (AlgebraElement::y(alg), AlgebraElement::x(alg));
        let mut out = AlgebraElement::zero(alg);
        for (m, c) in u.terms() {
            let (i, j, k) = m.exponents();
            let one = alg.field().one();
            let yi = y.pow(i as u32);
            let hj = AlgebraElement::monomial(alg, 0, j, one.clone())
                .expect("exponent from the algebra");
            let xk = x.pow(k as u32);
            let dy = d_power(&y, &self.img_y, i as u32);
            let dh = d_h_power(alg, &self.img_h, j).expect("exponent from the algebra");
            let dx = d_power(&x, &self.img_x, k as u32);
            let term = &(&(&(&dy * &hj) * &xk) + &(&(&yi * &dh) * &xk)) + &(&(&yi * &hj) * &dx);
            out = &out + &term.scale(c);
        }
        out
    }

    /// `d^n(u)`.
    pub fn iterate(&self, u: &AlgebraElement, n: u32) -> AlgebraElement {
        let mut v = u.clone();
        for _ in 0..n {
            if v.is_zero() {
                break;
            }
            v = self.apply(&v);
        }
        v
    }

    /// Largest `r <= bound` with `d^r(u) != 0 = d^(r+1)(u)`, or `None` when
    /// `d^(bound+1)(u) != 0`.
    pub fn deg_d(&self, u: &AlgebraElement, bound: u32) -> Result<Option<u32>, DerivationError> {
        if u.is_zero() {
            return Err(DerivationError::ZeroElement);
        }
        let mut v = u.clone();
        for r in 0..=bound {
            let next = self.apply(&v);
            if next.is_zero() {
                return Ok(Some(r));
            }
            v = next;
        }
        Ok(None)
    }

    /// Generators used by the probes: `y, h, x`, and `h^-1` over the Laurent ring.
    fn probe_generators(&self) -> Vec<AlgebraElement> {
        let alg = &self.alg;
        let mut g = vec![
            AlgebraElement::y(alg),
            AlgebraElement::h(alg),
            AlgebraElement::x(alg),
        ];
        if alg.ring() == BaseRing::Laurent {
            g.push(AlgebraElement::h_inv(alg).expect("Laurent ring"));
        }
        g
    }

    /// Whether every generator is killed by `d^(bound+1)`.
    pub fn is_locally_nilpotent_probe(&self, bound: u32) -> bool {
        self.probe_generators()
            .iter()
            .all(|g| self.iterate(g, bound + 1).is_zero())
    }

    /// For each generator `v`, whether some `d^n(v)` with `n <= bound` lies in
    /// the span of `v, ..., d^(n-1)(v)`. A bounded probe, not a proof.
    pub fn is_locally_finite_probe(&self, bound: u32) -> bool {
        self.probe_generators()
            .iter()
            .all(|g| self.krylov_stabilizes(g, bound))
    }

    fn krylov_stabilizes(&self, v: &AlgebraElement, bound: u32) -> bool {
        let mut iterates = vec![v.clone()];
        let mut rank = 1;
        for _ in 0..bound {
            let next = self.apply(iterates.last().unwrap());
            iterates.push(next);
            let r = span_rank(&iterates);
            if r == rank {
                return true;
            }
            rank = r;
        }
        false
    }

    /// `[d1, d2]`, determined by its generator images.
    pub fn commutator(&self, other: &Self) -> Result<Self, DerivationError> {
        let img = |g: &AlgebraElement| &self.apply(&other.apply(g)) - &other.apply(&self.apply(g));
        let alg = &self.alg;
        DerivationSpec::from_images(
            img(&AlgebraElement::y(alg)),
            img(&AlgebraElement::h(alg)),
            img(&AlgebraElement::x(alg)),
        )
    }
}

fn span_rank(elems: &[AlgebraElement]) -> usize {
    let Some(first) = elems.first() else {
        return 0;
    };
    let field = first.algebra().field();
    let mut index: BTreeMap<StdMonomial, usize> = BTreeMap::new();
    for e in elems {
        for (m, _) in e.terms() {
            let n = index.len();
            index.entry(*m).or_insert(n);
        }
    }
    let rows: Vec<Vec<FieldElement>> = elems
        .iter()
        .map(|e| {
            let mut row = vec![field.zero(); index.len()];
            for (m, c) in e.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    linalg::rank(&rows, index.len())
}

/// The Eulerian derivation `y d_y - x d_x`.
pub fn xi(alg: &Algebra) -> DerivationSpec {
    DerivationSpec::from_images(
        AlgebraElement::y(alg),
        AlgebraElement::zero(alg),
        -&AlgebraElement::x(alg),
    )
    .expect("xi is a derivation")
}

/// `h d_h + N x d_x` for `a = c h^N`.
pub fn tau(alg: &Algebra) -> Result<DerivationSpec, DerivationError> {
    if !alg.a().is_monomial() {
        return Err(DerivationError::NotMonomial);
    }
    let n = alg.a().min_exp().expect("a is nonzero");
    DerivationSpec::from_images(
        AlgebraElement::zero(alg),
        AlgebraElement::h(alg),
        AlgebraElement::x(alg).scale(&alg.field().from_int(n)),
    )
}

#[derive(Clone, Copy)]
enum Slot {
    Y,
    H,
    X,
}

/// Solves the linear system for derivations whose images are spanned by the
/// given `(slot, monomial)` unknowns. The basis is returned in reduced echelon
/// form with respect to the order of the unknowns, so it is canonical.
fn solve_ansatz(alg: &Algebra, unknowns: &[(Slot, StdMonomial)]) -> Vec<DerivationSpec> {
    let field = alg.field();
    let zero = AlgebraElement::zero(alg);
    let mut index: BTreeMap<(usize, StdMonomial), usize> = BTreeMap::new();
    let mut columns: Vec<Vec<(usize, FieldElement)>> = Vec::new();
    for (slot, m) in unknowns {
        let e = AlgebraElement::monomial(alg, m.s, m.j, field.one()).expect("ansatz monomial");
        let (dy, dh, dx) = match slot {
            Slot::Y => (&e, &zero, &zero),
            Slot::H => (&zero, &e, &zero),
            Slot::X => (&zero, &zero, &e),
        };
        let defects = relation_defects(alg, dy, dh, dx).expect("ansatz respects the ring");
        let mut col = Vec::new();
        for (r, (_, defect)) in defects.iter().enumerate() {
            for (mono, c) in defect.terms() {
                let n = index.len();
                let row = *index.entry((r, *mono)).or_insert(n);
                col.push((row, c.clone()));
            }
        }
        columns.push(col);
    }
    let mut rows = vec![vec![field.zero(); unknowns.len()]; index.len()];
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col {
            rows[*i][j] = c.clone();
        }
    }
    let mut basis = linalg::nullspace(field, &rows, unknowns.len());
    linalg::rref(&mut basis, unknowns.len());
    basis
        .into_iter()
        .map(|v| {
            let mut d = DerivationSpec::zero(alg);
            for ((slot, m), c) in unknowns.iter().zip(v) {
                if c.is_zero() {
                    continue;
                }
                let e = AlgebraElement::monomial(alg, m.s, m.j, c).expect("ansatz monomial");
                match slot {
                    Slot::Y => d.img_y = &d.img_y + &e,
                    Slot::H => d.img_h = &d.img_h + &e,
                    Slot::X => d.img_x = &d.img_x + &e,
                }
            }
            d
        })
        .collect()
}

fn exponent_range(alg: &AlgebraSpec, deg_bound: u32) -> std::ops::RangeInclusive<i64> {
    let b = deg_bound as i64;
    match alg.ring() {
        BaseRing::Poly => 0..=b,
        BaseRing::Laurent => -b..=b,
    }
}

/// Basis of the derivations homogeneous of weight `r` with `d(y) in A^(r+1)`,
/// `d(h) in A^(r)`, `d(x) in A^(r-1)`, all coefficient polynomials having
/// exponents within `deg_bound` (in absolute value over the Laurent ring).
pub fn derivation_space(alg: &Algebra, weight: i64, deg_bound: u32) -> Vec<DerivationSpec> {
    let mut unknowns = Vec::new();
    for (slot, w) in [
        (Slot::Y, weight + 1),
        (Slot::H, weight),
        (Slot::X, weight - 1),
    ] {
        for j in exponent_range(alg, deg_bound) {
            unknowns.push((slot, StdMonomial::new(w, j)));
        }
    }
    solve_ansatz(alg, &unknowns)
}

/// Basis of the locally finite derivations of weight zero.
///
/// A weight-zero derivation has `d(y) = y p1`, `d(h) = p2`, `d(x) = p3 x`.
/// Iterating on `y` multiplies the leading coefficient by `p1` at each step,
/// so local finiteness forces `p1`, and likewise `p3`, to be constant; it
/// forces `deg p2 <= 1`, and over the Laurent ring also `p2 in k h` (look at
/// the iterates of `h^-1`). These conditions are linear, so the locally
/// finite derivations form the subspace solved for here.
pub fn locally_finite_derivations(alg: &Algebra) -> Vec<DerivationSpec> {
    let mut unknowns = vec![
        (Slot::Y, StdMonomial::new(1, 0)),
        (Slot::H, StdMonomial::new(0, 1)),
    ];
    if alg.ring() == BaseRing::Poly {
        unknowns.push((Slot::H, StdMonomial::new(0, 0)));
    }
    unknowns.push((Slot::X, StdMonomial::new(-1, 0)));
    solve_ansatz(alg, &unknowns)
}

/// Inner derivation `ad(u) = [u, -]`.
pub fn inner(u: &AlgebraElement) -> DerivationSpec {
    let alg = u.algebra();
    let ad = |g: AlgebraElement| &(u * &g) - &(&g * u);
    DerivationSpec {
        alg: alg.clone(),
        img_y: ad(AlgebraElement::y(alg)),
        img_h: ad(AlgebraElement::h(alg)),
        img_x: ad(AlgebraElement::x(alg)),
    }
}
