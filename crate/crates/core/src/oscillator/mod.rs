//! Symbolic multi-boson operator algebra with exact Fock actions, the
//! transcribed and mechanically generated oscillator realizations, the
//! three-fermion matrices, and the commutator-fidelity verifier.
//!
//! The unnormalized Fock convention `a|n⟩ = n|n−1⟩` is used throughout, so
//! every matrix element stays inside Q(√2,√3).

pub mod fermion;
pub mod generate;
pub mod realizations;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt;

use crate::field::FieldElement;
use crate::g2::GeneratorId;
use crate::scalar::{LambdaPoly, Scalar};

pub use fermion::FermionMatrix;
pub use generate::{five_boson_generated, six_boson_generated, three_fermion_generated};
pub use realizations::{five_boson_transcribed, six_boson_transcribed, three_fermion_transcribed};
pub use verify::{adjudicate, verify_realization, AdjudicationReport, VerificationReport};

/// A realization assigns an operator to each of the 14 generators.
pub type Realization<T> = BTreeMap<GeneratorId, T>;

/// Normal-ordered boson monomial: all creation exponents, then all
/// annihilation exponents, per mode. Number operators are not a separate
/// symbol; `n̂_i = a_i† a_i` normal-orders on ingestion.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OscMonomial {
    pub create: [u16; 6],
    pub annihilate: [u16; 6],
}

impl OscMonomial {
    pub fn identity() -> Self {
        OscMonomial {
            create: [0; 6],
            annihilate: [0; 6],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.create.iter().all(|&e| e == 0) && self.annihilate.iter().all(|&e| e == 0)
    }

    fn render(&self) -> String {
        if self.is_identity() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.create.iter().enumerate() {
            if e == 1 {
                parts.push(format!("a{}'", i + 1));
            } else if e > 1 {
                parts.push(format!("a{}'^{}", i + 1, e));
            }
        }
        for (i, &e) in self.annihilate.iter().enumerate() {
            if e == 1 {
                parts.push(format!("a{}", i + 1));
            } else if e > 1 {
                parts.push(format!("a{}^{}", i + 1, e));
            }
        }
        parts.join(" ")
    }
}

/// Normal-ordered multi-boson operator polynomial over a scalar ring.
#[derive(Clone, PartialEq, Debug)]
pub struct OscPolynomial<S: Scalar> {
    pub modes: usize,
    terms: BTreeMap<OscMonomial, S>,
}

impl<S: Scalar> OscPolynomial<S> {
    pub fn zero(modes: usize) -> Self {
        assert!(modes <= 6);
        OscPolynomial {
            modes,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(modes: usize, c: S) -> Self {
        let mut p = Self::zero(modes);
        p.add_term(OscMonomial::identity(), c);
        p
    }

    /// Creation operator `a_i†`.
    pub fn creation(modes: usize, i: usize) -> Self {
        assert!((1..=modes).contains(&i));
        let mut m = OscMonomial::identity();
        m.create[i - 1] = 1;
        let mut p = Self::zero(modes);
        p.add_term(m, S::one());
        p
    }

    /// Annihilation operator `a_i`.
    pub fn annihilation(modes: usize, i: usize) -> Self {
        assert!((1..=modes).contains(&i));
        let mut m = OscMonomial::identity();
        m.annihilate[i - 1] = 1;
        let mut p = Self::zero(modes);
        p.add_term(m, S::one());
        p
    }

    /// Number operator `n̂_i`, stored normal-ordered as `a_i† a_i`.
    pub fn number(modes: usize, i: usize) -> Self {
        assert!((1..=modes).contains(&i));
        let mut m = OscMonomial::identity();
        m.create[i - 1] = 1;
        m.annihilate[i - 1] = 1;
        let mut p = Self::zero(modes);
        p.add_term(m, S::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OscMonomial, &S)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: OscMonomial, c: S) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.create[self.modes..].iter().all(|&e| e == 0));
        debug_assert!(m.annihilate[self.modes..].iter().all(|&e| e == 0));
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
        assert_eq!(self.modes, rhs.modes);
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.modes, rhs.modes);
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(*m, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.modes);
        for (m, v) in self.iter() {
            out.add_term(*m, v.mul(c));
        }
        out
    }

    pub fn scale_field(&self, c: &FieldElement) -> Self {
        let mut out = Self::zero(self.modes);
        for (m, v) in self.iter() {
            out.add_term(*m, v.scale(c));
        }
        out
    }

    /// Normal-ordered product. Per mode the reorder rule is
    /// `a^r a†^s = Σ_t C(r,t) C(s,t) t! a†^{s−t} a^{r−t}`.
    pub fn multiply(&self, rhs: &Self) -> Self {
        assert_eq!(self.modes, rhs.modes);
        let mut out = Self::zero(self.modes);
        for (ma, ca) in self.iter() {
            for (mb, cb) in rhs.iter() {
                let base = ca.mul(cb);
                // contraction choices per mode
                let mut stack: Vec<(usize, i64, OscMonomial)> = vec![(0, 1, OscMonomial::identity())];
                while let Some((mode, factor, acc)) = stack.pop() {
                    if mode == self.modes {
                        out.add_term(acc, base.scale(&FieldElement::from_int(factor)));
                        continue;
                    }
                    let r = ma.annihilate[mode];
                    let s = mb.create[mode];
                    for t in 0..=r.min(s) {
                        let mut weight = 1i64;
                        // C(r,t) C(s,t) t!
                        for j in 0..t as i64 {
                            weight = weight * (r as i64 - j) * (s as i64 - j) / (j + 1);
                        }
                        let mut next = acc;
                        next.create[mode] = ma.create[mode] + s - t;
                        next.annihilate[mode] = r - t + mb.annihilate[mode];
                        stack.push((mode + 1, factor * weight, next));
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.multiply(rhs).sub(&rhs.multiply(self))
    }

    /// Canonical creation-sorted text form.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.iter()
            .map(|(m, c)| format!("[{}] {}", c.render(), m.render()))
            .collect::<Vec<_>>()
            .join("  +  ")
    }
}

impl OscPolynomial<LambdaPoly> {
    /// Substitute concrete highest-weight components.
    pub fn eval_lambda(&self, l1: &FieldElement, l2: &FieldElement) -> OscPolynomial<FieldElement> {
        let mut out = OscPolynomial::zero(self.modes);
        for (m, c) in self.iter() {
            out.add_term(*m, c.eval(l1, l2));
        }
        out
    }
}

impl<S: Scalar> fmt::Display for OscPolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Occupation-number state; indices beyond the mode count stay zero. The
/// vacuum is all zeros and is annihilated by every `a_i`.
pub type FockKet = [u16; 6];

/// Exact action of a normal-ordered operator on a ket, in the unnormalized
/// convention `a†|…i…⟩ = |…i+1…⟩`, `a|…i…⟩ = i|…i−1…⟩`.
pub fn fock_apply<S: Scalar>(
    p: &OscPolynomial<S>,
    ket: &FockKet,
) -> BTreeMap<FockKet, S> {
    let mut out: BTreeMap<FockKet, S> = BTreeMap::new();
    for (m, c) in p.iter() {
        let mut factor = 1i64;
        let mut target = *ket;
        let mut dead = false;
        for mode in 0..p.modes {
            let r = m.annihilate[mode];
            if target[mode] < r {
                dead = true;
                break;
            }
            for j in 0..r {
                factor *= (target[mode] - j) as i64;
            }
            target[mode] = target[mode] - r + m.create[mode];
        }
        if dead || factor == 0 {
            continue;
        }
        let contribution = c.scale(&FieldElement::from_int(factor));
        let entry = out.entry(target).or_insert_with(S::zero);
        let sum = entry.add(&contribution);
        if sum.is_zero() {
            out.remove(&target);
        } else {
            *entry = sum;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type P = OscPolynomial<FieldElement>;

    #[test]
    fn defining_relation() {
        // a1 a1† = a1† a1 + 1
        let a = P::annihilation(6, 1);
        let ad = P::creation(6, 1);
        let lhs = a.multiply(&ad);
        let expected = P::number(6, 1).add(&P::constant(6, FieldElement::one()));
        assert_eq!(lhs, expected);

        // commuting modes
        let prod = P::creation(6, 1).multiply(&P::creation(6, 2));
        let flipped = P::creation(6, 2).multiply(&P::creation(6, 1));
        assert_eq!(prod, flipped);

        // a1^2 a1†^2 = a1†^2 a1^2 + 4 a1† a1 + 2
        let a2 = a.multiply(&a);
        let ad2 = ad.multiply(&ad);
        let lhs = a2.multiply(&ad2);
        let mut expected = ad2.multiply(&a2);
        expected = expected.add(&P::number(6, 1).scale(&FieldElement::from_int(4)));
        expected = expected.add(&P::constant(6, FieldElement::from_int(2)));
        assert_eq!(lhs, expected);
    }

    #[test]
    fn fock_examples() {
        let ad = P::creation(6, 1);
        let vac = [0u16; 6];
        let image = fock_apply(&ad, &vac);
        assert_eq!(image.len(), 1);
        assert!(image[&[1, 0, 0, 0, 0, 0]].is_one());

        // a1 |2,...⟩ = 2 |1,...⟩
        let a = P::annihilation(6, 1);
        let image = fock_apply(&a, &[2, 0, 0, 0, 0, 0]);
        assert_eq!(image[&[1, 0, 0, 0, 0, 0]], FieldElement::from_int(2));

        // n̂3 |...,5,...⟩ = 5 |same⟩
        let n3 = P::number(6, 3);
        let ket = [0, 0, 5, 0, 0, 0];
        let image = fock_apply(&n3, &ket);
        assert_eq!(image[&ket], FieldElement::from_int(5));

        // vacuum is killed by annihilators
        assert!(fock_apply(&a, &vac).is_empty());
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(
            (
                prop::array::uniform4(0u16..2),
                prop::array::uniform4(0u16..2),
                -4i64..=4,
            ),
            1..4,
        )
        .prop_map(|terms| {
            let mut p = P::zero(4);
            for (cr, an, c) in terms {
                let mut m = OscMonomial::identity();
                m.create[..4].copy_from_slice(&cr);
                m.annihilate[..4].copy_from_slice(&an);
                p.add_term(m, FieldElement::from_int(c));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// multiplication is sound against the Fock action
        #[test]
        fn normal_ordering_soundness(
            p in arb_poly(),
            q in arb_poly(),
            ket in prop::array::uniform4(0u16..=4),
        ) {
            let mut full = [0u16; 6];
            full[..4].copy_from_slice(&ket);
            let via_product = fock_apply(&p.multiply(&q), &full);
            let mut via_steps: BTreeMap<FockKet, FieldElement> = BTreeMap::new();
            for (mid, c) in fock_apply(&q, &full) {
                for (fin, c2) in fock_apply(&p, &mid) {
                    let entry = via_steps.entry(fin).or_insert_with(FieldElement::zero);
                    *entry += &(&c2 * &c);
                    if entry.is_zero() { via_steps.remove(&fin); }
                }
            }
            prop_assert_eq!(via_product, via_steps);
        }
    }
}
