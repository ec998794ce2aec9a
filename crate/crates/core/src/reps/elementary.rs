//! Elementary (highest-weight) representations on Ω₋.
//!
//! `d_lambda_apply` is the authoritative generic path: it normal-orders
//! `g · X⁻(m)` with the rewriting engine and then reduces modulo the left
//! ideal generated by the raising generators and `H_j − Λ_j`. Reduction maps
//! a standard-ordered term to zero when its raising part is nonzero and
//! substitutes `Λ_j` for the Cartan powers otherwise; because the reduction
//! acts on fully ordered terms, the substitution order subtlety of the
//! Cartan action is already resolved.
//!
//! `d_lambda_apply_closed_form` transcribes the published matrix elements
//! verbatim (including the suspect `4√2` denominator in the `E4` action);
//! disagreements with the generic path are collected by
//! `reps::closed_form_discrepancies`, and the engine wins.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::CoreError;
use crate::field::FieldElement;
use crate::g2::{self, GeneratorId, GeneratorKind, WeightVector};
use crate::pbw::{self, GeneratorWord, PbwMonomial, PbwPolynomial};
use crate::scalar::Scalar;

/// Exponent tuple `(m1..m6)` of a monomial of Ω₋.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaMinusMonomial(pub [u16; 6]);

impl OmegaMinusMonomial {
    pub fn one() -> Self {
        OmegaMinusMonomial([0; 6])
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn generator(i: usize) -> Self {
        Self::power(i, 1)
    }

    pub fn power(i: usize, e: u16) -> Self {
        assert!((1..=6).contains(&i));
        let mut m = Self::one();
        m.0[i - 1] = e;
        m
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i - 1]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn to_pbw(&self) -> PbwMonomial {
        PbwMonomial::from_parts(self.0, [0; 6], [0; 2])
    }

    pub fn word(&self) -> GeneratorWord {
        self.to_pbw().word()
    }

    /// Coordinates of `Σ m_i α_i` in the (α1, α6) simple-root lattice.
    pub fn root_drop(&self) -> (i64, i64) {
        let m = &self.0;
        let a = m[0] as i64 + m[1] as i64 + 2 * m[2] as i64 + m[3] as i64 + m[4] as i64;
        let b = m[1] as i64
            + 3 * m[2] as i64
            + 2 * m[3] as i64
            + 3 * m[4] as i64
            + m[5] as i64;
        (a, b)
    }

    /// Product monomial (exponent sum).
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for i in 0..6 {
            out.0[i] += rhs.0[i];
        }
        out
    }
}

impl fmt::Display for OmegaMinusMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pbw())
    }
}

impl fmt::Debug for OmegaMinusMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sparse Ω₋ polynomial with coefficients in a scalar ring; no stored zeros.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct OmegaPolynomial<S: Scalar> {
    terms: BTreeMap<OmegaMinusMonomial, S>,
}

impl<S: Scalar> OmegaPolynomial<S> {
    pub fn zero() -> Self {
        OmegaPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: OmegaMinusMonomial, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn one() -> Self {
        Self::monomial(OmegaMinusMonomial::one(), S::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OmegaMinusMonomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &OmegaMinusMonomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, m: OmegaMinusMonomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(*m, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for (m, v) in self.iter() {
            out.add_term(*m, v.mul(c));
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.iter()
            .map(|(m, c)| format!("[{}] {}", c.render(), m))
            .collect::<Vec<_>>()
            .join("  +  ")
    }
}

impl OmegaPolynomial<FieldElement> {
    /// View as a PBW polynomial (raising and Cartan parts zero).
    pub fn to_pbw(&self) -> PbwPolynomial {
        let mut out = PbwPolynomial::zero();
        for (m, c) in self.iter() {
            out.add_term(m.to_pbw(), c.clone());
        }
        out
    }

    /// Convert from a PBW polynomial that lies in Ω₋.
    pub fn from_pbw(p: &PbwPolynomial) -> Option<Self> {
        let mut out = Self::zero();
        for (m, c) in p.iter() {
            if m.n_part().iter().any(|&e| e > 0) || m.k_part().iter().any(|&e| e > 0) {
                return None;
            }
            out.add_term(OmegaMinusMonomial(m.m_part()), c.clone());
        }
        Some(out)
    }
}

/// A dominant highest weight, optionally carrying its Dynkin labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HighestWeight {
    pub weight: WeightVector,
    pub labels: Option<(u32, u32)>,
}

impl HighestWeight {
    pub fn from_dynkin(p: u32, q: u32) -> Self {
        HighestWeight {
            weight: g2::dynkin_to_weight(p, q),
            labels: Some((p, q)),
        }
    }

    pub fn from_weight(weight: WeightVector) -> Self {
        HighestWeight {
            weight,
            labels: None,
        }
    }

    /// `(Λ1, Λ2)` as scalars of the requested ring.
    pub fn scalars<S: Scalar>(&self) -> (S, S) {
        (
            S::from_field(self.weight.c1.clone()),
            S::from_field(self.weight.c2.clone()),
        )
    }
}

/// Reduce a standard-ordered polynomial modulo the left ideal
/// `I(Λ) = Ω·{E_1..E_6, H_1 − Λ_1, H_2 − Λ_2}`: terms with a raising part
/// die, Cartan powers become Λ-powers.
pub fn reduce_mod_highest_weight_ideal<S: Scalar>(
    p: &PbwPolynomial,
    lambda: &(S, S),
) -> OmegaPolynomial<S> {
    let mut out = OmegaPolynomial::zero();
    for (mono, c) in p.iter() {
        if mono.n_part().iter().any(|&e| e > 0) {
            continue;
        }
        let [k1, k2] = mono.k_part();
        let mut coeff = S::from_field(c.clone());
        for _ in 0..k1 {
            coeff = coeff.mul(&lambda.0);
        }
        for _ in 0..k2 {
            coeff = coeff.mul(&lambda.1);
        }
        out.add_term(OmegaMinusMonomial(mono.m_part()), coeff);
    }
    out
}

/// Elementary representation, generic path (authoritative).
pub fn d_lambda_apply<S: Scalar>(
    lambda: &(S, S),
    g: GeneratorId,
    x: &OmegaMinusMonomial,
) -> OmegaPolynomial<S> {
    let mut blocks = vec![(g, 1)];
    blocks.extend(x.word().0);
    let nf = pbw::normal_order(&GeneratorWord::new(blocks));
    reduce_mod_highest_weight_ideal(&nf, lambda)
}

/// Linear extension of `d_lambda_apply` to Ω₋ polynomials.
pub fn d_lambda_apply_poly<S: Scalar>(
    lambda: &(S, S),
    g: GeneratorId,
    p: &OmegaPolynomial<S>,
) -> OmegaPolynomial<S> {
    let mut out = OmegaPolynomial::zero();
    for (m, c) in p.iter() {
        let image = d_lambda_apply(lambda, g, m);
        for (m2, c2) in image.iter() {
            out.add_term(*m2, c2.mul(c));
        }
    }
    out
}

/// Weight of `X⁻(m)` in `d_Λ`: `Λ − Σ m_i α_i`.
pub fn elementary_weight(lambda: &WeightVector, m: &OmegaMinusMonomial) -> WeightVector {
    let mut w = lambda.clone();
    for i in 1..=6 {
        let e = m.exponent(i);
        if e > 0 {
            w = w.sub(&g2::positive_root(i).scale_int(e as i64));
        }
    }
    w
}

/// Falling factorial `m (m−1) … (m−k+1)` as an exact integer.
fn ff(m: u16, k: u16) -> i64 {
    let mut acc = 1i64;
    for j in 0..k as i64 {
        acc *= m as i64 - j;
    }
    acc
}

/// Transcribed closed forms of the elementary matrix elements.
pub fn d_lambda_apply_closed_form<S: Scalar>(
    lambda: &(S, S),
    g: GeneratorId,
    x: &OmegaMinusMonomial,
) -> OmegaPolynomial<S> {
    let m = x.0;
    let (m1, m2, m3, m4, m5, m6) = (m[0], m[1], m[2], m[3], m[4], m[5]);
    let mut out = OmegaPolynomial::zero();
    let fe = FieldElement::of;
    let r2 = FieldElement::of_sqrt2;
    let r3 = FieldElement::of_sqrt3;
    let r6 = FieldElement::of_sqrt6;

    // Adds `coeff · X_{m + shifts}`; falling factors in the coefficients
    // guarantee the shifts never underflow on a surviving term.
    let term = |out: &mut OmegaPolynomial<S>, coeff: S, shifts: &[(usize, i32)]| {
        if coeff.is_zero() {
            return;
        }
        let mut exps = m.map(|e| e as i32);
        for &(i, d) in shifts {
            exps[i - 1] += d;
        }
        debug_assert!(exps.iter().all(|&e| e >= 0));
        out.add_term(OmegaMinusMonomial(exps.map(|e| e as u16)), coeff);
    };

    // (Λ2 − (m6−1)/(4·den)) with den = √3 everywhere but the E4 line, which
    // the paper prints with √2.
    let lam2_bracket = |den_sqrt2: bool| -> S {
        let shift = if den_sqrt2 {
            r2(m6 as i64 - 1, 8)
        } else {
            r3(m6 as i64 - 1, 12)
        };
        lambda.1.sub(&S::from_field(shift))
    };

    match g.kind() {
        GeneratorKind::Lowering(1) => term(&mut out, S::one(), &[(1, 1)]),
        GeneratorKind::Lowering(2) => term(&mut out, S::one(), &[(2, 1)]),
        GeneratorKind::Lowering(3) => term(&mut out, S::one(), &[(3, 1)]),
        GeneratorKind::Lowering(4) => {
            term(&mut out, S::one(), &[(4, 1)]);
            term(
                &mut out,
                S::from_field(r2(-(m2 as i64), 8).scale_int(2)),
                &[(2, -1), (3, 1)],
            );
        }
        GeneratorKind::Lowering(5) => {
            term(&mut out, S::one(), &[(5, 1)]);
            term(
                &mut out,
                S::from_field(r2(m1 as i64, 4)),
                &[(1, -1), (3, 1)],
            );
        }
        GeneratorKind::Lowering(6) => {
            term(&mut out, S::one(), &[(6, 1)]);
            term(
                &mut out,
                S::from_field(r2(-(m1 as i64), 4)),
                &[(1, -1), (2, 1)],
            );
            term(
                &mut out,
                S::from_field(r6(-(m2 as i64), 6)),
                &[(2, -1), (4, 1)],
            );
            term(
                &mut out,
                S::from_field(r3(ff(m2, 2), 24)),
                &[(2, -2), (3, 1)],
            );
            term(
                &mut out,
                S::from_field(r2(-(m4 as i64), 4)),
                &[(4, -1), (5, 1)],
            );
        }
        GeneratorKind::Raising(1) => {
            // (1/4) m1 [Λ1 − √3 Λ2 − (1/2)(m1−1+m2+m3−m5−m6)] X_{m1−1}
            let inner = lambda
                .0
                .sub(&lambda.1.scale(&r3(1, 1)))
                .sub(&S::from_field(fe(
                    m1 as i64 - 1 + m2 as i64 + m3 as i64 - m5 as i64 - m6 as i64,
                    2,
                )));
            term(&mut out, inner.scale(&fe(m1 as i64, 4)), &[(1, -1)]);
            term(&mut out, S::from_field(r2(m2 as i64, 4)), &[(2, -1), (6, 1)]);
            term(
                &mut out,
                S::from_field(r3(-ff(m2, 2), 24)),
                &[(2, -2), (4, 1)],
            );
            term(
                &mut out,
                S::from_field(r6(ff(m2, 3), 288)),
                &[(2, -3), (3, 1)],
            );
            term(
                &mut out,
                S::from_field(fe(-(m2 as i64) * m4 as i64, 8)),
                &[(2, -1), (4, -1), (5, 1)],
            );
            term(&mut out, S::from_field(r2(-(m3 as i64), 4)), &[(3, -1), (5, 1)]);
        }
        GeneratorKind::Raising(2) => {
            term(
                &mut out,
                S::from_field(r3(-(m1 as i64) * m4 as i64, 12)),
                &[(1, -1), (2, 1), (4, -1)],
            );
            term(
                &mut out,
                S::from_field(r6(m1 as i64 * ff(m4, 2), 96)),
                &[(1, -1), (3, 1), (4, -2)],
            );
            term(
                &mut out,
                S::from_field(fe(-(m1 as i64) * m5 as i64, 8)),
                &[(1, -1), (4, 1), (5, -1)],
            );
            term(
                &mut out,
                lam2_bracket(false).scale(&r6(m1 as i64 * m6 as i64, 24)),
                &[(1, -1), (6, -1)],
            );
            // (1/4) m2 [Λ1 − (1/√3) Λ2 − (1/(4√3))(3m1+m2−1+3m3+m4−m6)] X_{m2−1}
            let inner = lambda
                .0
                .sub(&lambda.1.scale(&r3(1, 3)))
                .sub(&S::from_field(r3(
                    3 * m1 as i64 + m2 as i64 - 1 + 3 * m3 as i64 + m4 as i64 - m6 as i64,
                    12,
                )));
            term(&mut out, inner.scale(&fe(m2 as i64, 4)), &[(2, -1)]);
            term(&mut out, S::from_field(r2(m3 as i64, 4)), &[(3, -1), (4, 1)]);
            term(&mut out, S::from_field(r6(m4 as i64, 6)), &[(4, -1), (6, 1)]);
            term(
                &mut out,
                S::from_field(r3(-ff(m4, 2), 24)),
                &[(4, -2), (5, 1)],
            );
        }
        GeneratorKind::Raising(3) => {
            term(
                &mut out,
                S::from_field(r6(m1 as i64 * ff(m4, 2), 96)),
                &[(1, -1), (2, 1), (4, -2)],
            );
            term(
                &mut out,
                S::from_field(r3(-(m1 as i64) * ff(m4, 3), 288)),
                &[(1, -1), (3, 1), (4, -3)],
            );
            term(
                &mut out,
                lam2_bracket(false).scale(&r3(-(m1 as i64) * m4 as i64 * m6 as i64, 48)),
                &[(1, -1), (4, -1), (6, -1)],
            );
            // −(1/(8√2)) m1 m5 [Λ1 + √3 Λ2 − (1/2)(m4+m5−1+m6)]
            let inner = lambda
                .0
                .add(&lambda.1.scale(&r3(1, 1)))
                .sub(&S::from_field(fe(
                    m4 as i64 + m5 as i64 - 1 + m6 as i64,
                    2,
                )));
            term(
                &mut out,
                inner.scale(&r2(-(m1 as i64) * m5 as i64, 16)),
                &[(1, -1), (5, -1)],
            );
            term(
                &mut out,
                S::from_field(r6(-ff(m2, 3), 288)),
                &[(1, 1), (2, -3)],
            );
            // +(1/(8√2)) m2 m4 [Λ1 + (1/√3) Λ2 − (1/6)(2m2+m4−3+3m5+m6)]
            let inner = lambda
                .0
                .add(&lambda.1.scale(&r3(1, 3)))
                .sub(&S::from_field(fe(
                    2 * m2 as i64 + m4 as i64 - 3 + 3 * m5 as i64 + m6 as i64,
                    6,
                )));
            term(
                &mut out,
                inner.scale(&r2(m2 as i64 * m4 as i64, 16)),
                &[(2, -1), (4, -1)],
            );
            term(
                &mut out,
                S::from_field(fe(m2 as i64 * m5 as i64, 8)),
                &[(2, -1), (5, -1), (6, 1)],
            );
            term(
                &mut out,
                S::from_field(fe(ff(m2, 2) * ff(m4, 2), 192)),
                &[(2, -2), (3, 1), (4, -2)],
            );
            term(
                &mut out,
                S::from_field(r6(-ff(m2, 2) * m5 as i64, 96)),
                &[(2, -2), (4, 1), (5, -1)],
            );
            term(
                &mut out,
                lam2_bracket(false).scale(&fe(ff(m2, 2) * m6 as i64, 48)),
                &[(2, -2), (6, -1)],
            );
            // +(1/2) m3 [Λ1 − (1/4)(m1+m2+m3−1+m4+m5)]
            let inner = lambda.0.sub(&S::from_field(fe(
                m1 as i64 + m2 as i64 + m3 as i64 - 1 + m4 as i64 + m5 as i64,
                4,
            )));
            term(&mut out, inner.scale(&fe(m3 as i64, 2)), &[(3, -1)]);
            term(
                &mut out,
                S::from_field(r3(-ff(m4, 2), 24)),
                &[(4, -2), (6, 1)],
            );
            term(
                &mut out,
                S::from_field(r6(ff(m4, 3), 288)),
                &[(4, -3), (5, 1)],
            );
        }
        GeneratorKind::Raising(4) => {
            term(
                &mut out,
                S::from_field(r3(-ff(m2, 2), 24)),
                &[(1, 1), (2, -2)],
            );
            term(
                &mut out,
                S::from_field(r2(m2 as i64 * ff(m4, 2), 48)),
                &[(2, -1), (3, 1), (4, -2)],
            );
            term(
                &mut out,
                S::from_field(r3(-(m2 as i64) * m5 as i64, 12)),
                &[(2, -1), (4, 1), (5, -1)],
            );
            // the paper prints (Λ2 − (m6−1)/(4√2)) here
            term(
                &mut out,
                lam2_bracket(true).scale(&r2(m2 as i64 * m6 as i64, 12)),
                &[(2, -1), (6, -1)],
            );
            term(&mut out, S::from_field(r2(-(m3 as i64), 4)), &[(2, 1), (3, -1)]);
            term(&mut out, S::from_field(r2(m5 as i64, 4)), &[(5, -1), (6, 1)]);
            // +(1/4) m4 [Λ1 + (1/√3) Λ2 − (1/6)(4m2+m4−1+3m5+m6)]
            let inner = lambda
                .0
                .add(&lambda.1.scale(&r3(1, 3)))
                .sub(&S::from_field(fe(
                    4 * m2 as i64 + m4 as i64 - 1 + 3 * m5 as i64 + m6 as i64,
                    6,
                )));
            term(&mut out, inner.scale(&fe(m4 as i64, 4)), &[(4, -1)]);
        }
        GeneratorKind::Raising(5) => {
            term(&mut out, S::from_field(r2(m3 as i64, 4)), &[(1, 1), (3, -1)]);
            term(
                &mut out,
                S::from_field(r3(-ff(m4, 2), 24)),
                &[(2, 1), (4, -2)],
            );
            term(
                &mut out,
                S::from_field(r6(ff(m4, 3), 144)),
                &[(3, 1), (4, -3)],
            );
            term(
                &mut out,
                lam2_bracket(false).scale(&r6(m4 as i64 * m6 as i64, 24)),
                &[(4, -1), (6, -1)],
            );
            // +(1/4) m5 [Λ1 + √3 Λ2 − (1/2)(m4+m5−1+m6)]
            let inner = lambda
                .0
                .add(&lambda.1.scale(&r3(1, 1)))
                .sub(&S::from_field(fe(
                    m4 as i64 + m5 as i64 - 1 + m6 as i64,
                    2,
                )));
            term(&mut out, inner.scale(&fe(m5 as i64, 4)), &[(5, -1)]);
        }
        GeneratorKind::Raising(6) => {
            term(&mut out, S::from_field(r2(-(m2 as i64), 4)), &[(1, 1), (2, -1)]);
            term(&mut out, S::from_field(r6(-(m4 as i64), 6)), &[(2, 1), (4, -1)]);
            term(&mut out, S::from_field(r2(-(m5 as i64), 4)), &[(4, 1), (5, -1)]);
            term(
                &mut out,
                S::from_field(r3(ff(m4, 2), 24)),
                &[(3, 1), (4, -2)],
            );
            term(
                &mut out,
                lam2_bracket(false).scale(&r3(m6 as i64, 6)),
                &[(6, -1)],
            );
        }
        GeneratorKind::Cartan(1) => {
            // M1 = Λ1 − (1/4)(m1+m2+2m3+m4+m5)
            let m1w = lambda.0.sub(&S::from_field(fe(
                m1 as i64 + m2 as i64 + 2 * m3 as i64 + m4 as i64 + m5 as i64,
                4,
            )));
            term(&mut out, m1w, &[]);
        }
        GeneratorKind::Cartan(2) => {
            // M2 = Λ2 + (1/(4√3))(3m1+m2−m4−3m5−2m6)
            let m2w = lambda.1.add(&S::from_field(r3(
                3 * m1 as i64 + m2 as i64 - m4 as i64 - 3 * m5 as i64 - 2 * m6 as i64,
                12,
            )));
            term(&mut out, m2w, &[]);
        }
        _ => unreachable!(),
    }
    out
}

/// Representation on the quotient of `d_Λ` by the ideal generated by
/// `E_{-6}` (the `Q = 1` member of the first ideal chain). Requires
/// `Λ2 = 0`; the carrier is spanned by monomials with `m6 = 0`, and every
/// `m6`-bearing image term is discarded.
pub fn d_i01_i12_apply<S: Scalar>(
    lambda1: &S,
    g: GeneratorId,
    x: &OmegaMinusMonomial,
) -> Result<OmegaPolynomial<S>, CoreError> {
    if x.exponent(6) != 0 {
        return Err(CoreError::Invalid(
            "basis of the quotient has m6 = 0".into(),
        ));
    }
    let lambda = (lambda1.clone(), S::zero());
    let full = d_lambda_apply(&lambda, g, x);
    let mut out = OmegaPolynomial::zero();
    for (m, c) in full.iter() {
        if m.exponent(6) == 0 {
            out.add_term(*m, c.clone());
        }
    }
    Ok(out)
}

/// Concrete-`Λ2 ≠ 0` inputs are rejected before reaching the generic path.
pub fn d_i01_i12_check_weight(lambda: &HighestWeight) -> Result<(), CoreError> {
    if !lambda.weight.c2.is_zero() {
        return Err(CoreError::Invalid(
            "the five-boson quotient requires Λ2 = 0".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LambdaPoly;

    fn symbolic() -> (LambdaPoly, LambdaPoly) {
        (LambdaPoly::lambda1(), LambdaPoly::lambda2())
    }

    #[test]
    fn highest_weight_conditions() {
        // d_Λ(E_i) 1 = 0 for all raising generators
        let lambda = symbolic();
        for i in 1..=6 {
            let image = d_lambda_apply(&lambda, GeneratorId::raising(i), &OmegaMinusMonomial::one());
            assert!(image.is_zero(), "E{i} must annihilate the highest vector");
        }
        // d_Λ(H_j) 1 = Λ_j 1
        for j in 1..=2 {
            let image = d_lambda_apply(&lambda, GeneratorId::cartan(j), &OmegaMinusMonomial::one());
            let expected = if j == 1 {
                LambdaPoly::lambda1()
            } else {
                LambdaPoly::lambda2()
            };
            assert_eq!(image, OmegaPolynomial::monomial(OmegaMinusMonomial::one(), expected));
        }
    }

    #[test]
    fn d_lambda_examples() {
        let lambda = symbolic();

        // d_Λ(E6) E-6 = (Λ2 / (2√3)) 1
        let image = d_lambda_apply(&lambda, GeneratorId::raising(6), &OmegaMinusMonomial::generator(6));
        let expected = OmegaPolynomial::monomial(
            OmegaMinusMonomial::one(),
            LambdaPoly::lambda2().scale(&FieldElement::of_sqrt3(1, 6)),
        );
        assert_eq!(image, expected);

        // d_Λ(H1) E-3 = (Λ1 − 1/2) E-3
        let image = d_lambda_apply(&lambda, GeneratorId::cartan(1), &OmegaMinusMonomial::generator(3));
        let expected = OmegaPolynomial::monomial(
            OmegaMinusMonomial::generator(3),
            LambdaPoly::lambda1().sub(&LambdaPoly::constant(FieldElement::of(1, 2))),
        );
        assert_eq!(image, expected);
    }

    #[test]
    fn closed_form_agrees_on_correct_generators() {
        let lambda = symbolic();
        // E-1..E-6, E1, H1, H2 are expected to transcribe cleanly; sample a
        // few monomials on each.
        let samples = [
            OmegaMinusMonomial([0, 0, 0, 0, 0, 0]),
            OmegaMinusMonomial([1, 2, 0, 1, 0, 1]),
            OmegaMinusMonomial([0, 3, 1, 2, 1, 2]),
            OmegaMinusMonomial([2, 0, 2, 3, 2, 0]),
        ];
        for g in [
            GeneratorId::lowering(1),
            GeneratorId::lowering(2),
            GeneratorId::lowering(3),
            GeneratorId::lowering(4),
            GeneratorId::lowering(5),
            GeneratorId::lowering(6),
            GeneratorId::raising(1),
            GeneratorId::raising(3),
            GeneratorId::raising(5),
            GeneratorId::raising(6),
            GeneratorId::cartan(1),
            GeneratorId::cartan(2),
        ] {
            for x in &samples {
                assert_eq!(
                    d_lambda_apply_closed_form(&lambda, g, x),
                    d_lambda_apply(&lambda, g, x),
                    "mismatch for {g} at {x}"
                );
            }
        }
    }

    #[test]
    fn five_boson_quotient_examples() {
        let l1 = LambdaPoly::lambda1();

        // d(E-6) 1 = 0 once the m6 terms are discarded
        let image = d_i01_i12_apply(&l1, GeneratorId::lowering(6), &OmegaMinusMonomial::one()).unwrap();
        assert!(image.is_zero());

        // d(H2) E-1 = (3/(4√3)) E-1
        let image = d_i01_i12_apply(&l1, GeneratorId::cartan(2), &OmegaMinusMonomial::generator(1)).unwrap();
        assert_eq!(
            image,
            OmegaPolynomial::monomial(
                OmegaMinusMonomial::generator(1),
                LambdaPoly::constant(FieldElement::of_sqrt3(3, 12)),
            )
        );

        // d(E1) E-1 = (Λ1/4) 1
        let image = d_i01_i12_apply(&l1, GeneratorId::raising(1), &OmegaMinusMonomial::generator(1)).unwrap();
        assert_eq!(
            image,
            OmegaPolynomial::monomial(
                OmegaMinusMonomial::one(),
                LambdaPoly::lambda1().scale(&FieldElement::of(1, 4)),
            )
        );

        // monomials with m6 > 0 are rejected
        assert!(d_i01_i12_apply(&l1, GeneratorId::raising(1), &OmegaMinusMonomial::generator(6)).is_err());
    }

    #[test]
    fn weight_additivity() {
        let hw = HighestWeight::from_dynkin(1, 1);
        let lambda = hw.scalars::<FieldElement>();
        let x = OmegaMinusMonomial([1, 0, 2, 1, 0, 1]);
        for i in 1..=6 {
            for (g, sign) in [
                (GeneratorId::raising(i), 1i64),
                (GeneratorId::lowering(i), -1i64),
            ] {
                let image = d_lambda_apply(&lambda, g, &x);
                let expected_weight = elementary_weight(&hw.weight, &x)
                    .add(&g2::positive_root(i).scale_int(sign));
                for (mono, _) in image.iter() {
                    assert_eq!(elementary_weight(&hw.weight, mono), expected_weight);
                }
            }
        }
    }
}
