//! PBW monomials and polynomials over the 14 generators, and the
//! normal-ordering rewriting engine.
//!
//! Two independent reordering paths are implemented. `normal_order` consumes
//! whole right-hand power blocks with the closed-form power commutators
//! (`[H_i, E^n]`, `[E_a, E_{-a}^n]`, and the binomial chain for
//! `[E_a, E_b^n]`); `normal_order_naive` only ever swaps a single adjacent
//! generator pair with the degree-1 bracket and serves as the ground-truth
//! oracle. Both strictly decrease the lexicographic measure
//! (total degree, weighted inversion count), so they terminate.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::FieldElement;
use crate::g2::{self, GeneratorId, GeneratorKind};

/// Exponent tuple `(m1..m6, n1..n6, k1, k2)` in the standard order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial(pub [u16; 14]);

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial([0; 14])
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn generator(g: GeneratorId) -> Self {
        Self::power(g, 1)
    }

    pub fn power(g: GeneratorId, e: u16) -> Self {
        let mut m = Self::one();
        m.0[g.standard_index()] = e;
        m
    }

    pub fn exponent(&self, g: GeneratorId) -> u16 {
        self.0[g.standard_index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Lowering part `(m1..m6)`.
    pub fn m_part(&self) -> [u16; 6] {
        self.0[0..6].try_into().unwrap()
    }

    /// Raising part `(n1..n6)`.
    pub fn n_part(&self) -> [u16; 6] {
        self.0[6..12].try_into().unwrap()
    }

    /// Cartan part `(k1, k2)`.
    pub fn k_part(&self) -> [u16; 2] {
        self.0[12..14].try_into().unwrap()
    }

    pub fn from_parts(m: [u16; 6], n: [u16; 6], k: [u16; 2]) -> Self {
        let mut out = [0u16; 14];
        out[0..6].copy_from_slice(&m);
        out[6..12].copy_from_slice(&n);
        out[12..14].copy_from_slice(&k);
        PbwMonomial(out)
    }

    /// The monomial as an ordered generator word.
    pub fn word(&self) -> GeneratorWord {
        let mut blocks = Vec::new();
        for i in 0..14 {
            if self.0[i] > 0 {
                blocks.push((GeneratorId::from_standard_index(i), self.0[i] as u32));
            }
        }
        GeneratorWord(blocks)
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..14 {
            if self.0[i] == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let g = GeneratorId::from_standard_index(i);
            if self.0[i] == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{}", self.0[i])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sparse polynomial over PBW monomials; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PbwPolynomial {
    terms: BTreeMap<PbwMonomial, FieldElement>,
}

impl PbwPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(PbwMonomial::one(), FieldElement::one())
    }

    pub fn monomial(m: PbwMonomial, c: FieldElement) -> Self {
        let mut p = Self::default();
        p.add_term(m, c);
        p
    }

    pub fn generator(g: GeneratorId) -> Self {
        Self::monomial(PbwMonomial::generator(g), FieldElement::one())
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

    pub fn iter(&self) -> impl Iterator<Item = (&PbwMonomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_else(FieldElement::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(FieldElement::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
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
            out.add_term(*m, -c);
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PbwPolynomial {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Associative product in the enveloping algebra. Each left-hand
    /// monomial is folded generator by generator onto the right-hand
    /// polynomial, so like terms merge at every step instead of fanning out
    /// into separate rewrite branches.
    pub fn multiply(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in self.iter() {
            let partial = fold_blocks_left(&ma.word().0, rhs);
            for (m, c) in partial.iter() {
                out.add_term(*m, c * ca);
            }
        }
        out
    }

    /// Drops every term whose exponents meet or exceed a cap of `spec`.
    pub fn ideal_reduce(&self, spec: &IdealSpec) -> Self {
        PbwPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !spec.contains(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for PbwPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.iter() {
            if !first {
                write!(f, "  +  ")?;
            }
            first = false;
            write!(f, "({c}) {m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PbwPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A not-yet-ordered product of generator powers.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GeneratorWord(pub Vec<(GeneratorId, u32)>);

impl GeneratorWord {
    pub fn new(blocks: Vec<(GeneratorId, u32)>) -> Self {
        GeneratorWord(blocks)
    }

    pub fn single(g: GeneratorId) -> Self {
        GeneratorWord(vec![(g, 1)])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Parse a whitespace- or `*`-separated word such as `E-6^2 E-1`.
    pub fn parse(text: &str) -> Result<Self, crate::error::CoreError> {
        let mut blocks = Vec::new();
        for piece in text.split(|c: char| c.is_whitespace() || c == '*') {
            if piece.is_empty() {
                continue;
            }
            let (name, pow) = match piece.split_once('^') {
                Some((n, p)) => (
                    n,
                    p.parse::<u32>().map_err(|_| {
                        crate::error::CoreError::Parse(format!("bad power in {piece:?}"))
                    })?,
                ),
                None => (piece, 1),
            };
            blocks.push((GeneratorId::parse(name)?, pow));
        }
        Ok(GeneratorWord(blocks))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Block moves via the closed-form power commutators.
    Closed,
    /// Single-step swaps via the degree-1 bracket only.
    Naive,
}

type Blocks = Vec<(GeneratorId, u32)>;

fn compress(blocks: &mut Blocks) {
    let mut out: Blocks = Vec::with_capacity(blocks.len());
    for &(g, e) in blocks.iter() {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((last, pow)) if *last == g => *pow += e,
            _ => out.push((g, e)),
        }
    }
    *blocks = out;
}

fn first_inversion(blocks: &Blocks) -> Option<usize> {
    (0..blocks.len().saturating_sub(1))
        .find(|&i| blocks[i].0.standard_index() > blocks[i + 1].0.standard_index())
}

fn monomial_from(blocks: &Blocks) -> PbwMonomial {
    let mut m = PbwMonomial::one();
    for &(g, e) in blocks {
        debug_assert!(e <= u16::MAX as u32);
        m.0[g.standard_index()] += e as u16;
    }
    m
}

fn binomial(n: u32, k: u32) -> FieldElement {
    FieldElement::from_rational(num_integer::binomial(
        num_bigint::BigInt::from(n),
        num_bigint::BigInt::from(k),
    ).into())
}

/// `[x, y^b]` by the closed forms, as `(coefficient, word fragment)` pairs.
/// The fragments are not necessarily ordered; the caller re-enters them into
/// the rewriting loop.
fn closed_commutator(x: GeneratorId, y: GeneratorId, b: u32) -> Vec<(FieldElement, Blocks)> {
    use GeneratorKind::*;
    match (x.kind(), y.kind()) {
        (Cartan(_), Cartan(_)) => Vec::new(),
        (Cartan(j), _) => {
            // [H_j, E_b^n] = n b^{(j)} E_b^n
            let alpha = g2::signed_root_vector(y.signed_root().unwrap());
            let c = alpha.component(j).scale_int(b as i64);
            if c.is_zero() {
                Vec::new()
            } else {
                vec![(c, vec![(y, b)])]
            }
        }
        (_, Cartan(_)) => unreachable!("inversions never move a root generator past a Cartan block"),
        _ => {
            let a_idx = x.signed_root().unwrap();
            let b_idx = y.signed_root().unwrap();
            if a_idx == -b_idx {
                // [E_a, E_{-a}^n] = n a^(i) E^{n-1} H_i + (1/2) n (n-1) (a,-a) E^{n-1}
                let alpha = g2::signed_root_vector(a_idx);
                let mut out = Vec::new();
                for j in 1..=2 {
                    let c = alpha.component(j).scale_int(b as i64);
                    if !c.is_zero() {
                        out.push((c, vec![(y, b - 1), (GeneratorId::cartan(j), 1)]));
                    }
                }
                let pairing = g2::inner_product(&alpha, &alpha.neg());
                let c = pairing.scale_rational(&crate::field::rational(
                    (b as i64) * (b as i64 - 1),
                    2,
                ));
                if !c.is_zero() {
                    out.push((c, vec![(y, b - 1)]));
                }
                out
            } else {
                // [E_a, E_b^n] = sum_m C(n,m) (prod_i N_{a+(i-1)b, b}) E_b^{n-m} E_{a+mb};
                // the chain stops by itself once a + m b leaves the root system.
                let mut out = Vec::new();
                let mut coeff = FieldElement::one();
                let mut gamma = a_idx;
                let mut m = 1;
                while m <= b {
                    let Some(n_const) = g2::structure_constant(gamma, b_idx) else {
                        break;
                    };
                    gamma = g2::root_sum(gamma, b_idx).unwrap();
                    coeff = &coeff * &n_const;
                    out.push((
                        &coeff * &binomial(b, m),
                        vec![(y, b - m), (GeneratorId::from_signed_root(gamma), 1)],
                    ));
                    m += 1;
                }
                out
            }
        }
    }
}

fn reorder(tasks: Vec<(FieldElement, Blocks)>, mode: Mode) -> PbwPolynomial {
    let mut out = PbwPolynomial::zero();
    let mut stack = tasks;
    while let Some((c, mut blocks)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        compress(&mut blocks);
        let Some(i) = first_inversion(&blocks) else {
            out.add_term(monomial_from(&blocks), c);
            continue;
        };
        let (x, a) = blocks[i];
        let (y, b) = blocks[i + 1];
        let splice = |mid: Blocks| {
            let mut w: Blocks = Vec::with_capacity(blocks.len() + mid.len());
            w.extend_from_slice(&blocks[..i]);
            w.extend(mid);
            w.extend_from_slice(&blocks[i + 2..]);
            w
        };
        match mode {
            Mode::Closed => {
                // Move one x across the whole y-block.
                stack.push((c.clone(), splice(vec![(x, a - 1), (y, b), (x, 1)])));
                for (c2, frag) in closed_commutator(x, y, b) {
                    let mut mid = vec![(x, a - 1)];
                    mid.extend(frag);
                    stack.push((&c * &c2, splice(mid)));
                }
            }
            Mode::Naive => {
                // Move one x across one y with the degree-1 bracket.
                stack.push((
                    c.clone(),
                    splice(vec![(x, a - 1), (y, 1), (x, 1), (y, b - 1)]),
                ));
                for (g, c2) in g2::bracket(x, y) {
                    stack.push((&c * &c2, splice(vec![(x, a - 1), (g, 1), (y, b - 1)])));
                }
            }
        }
    }
    out
}

/// Left-multiply an ordered monomial by a single generator, normal-ordering
/// with the closed-form power commutators. The generator jumps whole blocks,
/// so this is linear-ish in the block count.
fn push_generator_left(g: GeneratorId, mono: &PbwMonomial) -> PbwPolynomial {
    let mut blocks = vec![(g, 1)];
    blocks.extend(mono.word().0);
    reorder(vec![(FieldElement::one(), blocks)], Mode::Closed)
}

/// Left-multiply a whole polynomial by the given word, one generator at a
/// time, merging like terms between steps.
fn fold_blocks_left(blocks: &[(GeneratorId, u32)], start: &PbwPolynomial) -> PbwPolynomial {
    let mut q = start.clone();
    for &(g, e) in blocks.iter().rev() {
        for _ in 0..e {
            let mut next = PbwPolynomial::zero();
            for (mono, c) in q.iter() {
                for (m2, c2) in push_generator_left(g, mono).iter() {
                    next.add_term(*m2, c2 * c);
                }
            }
            q = next;
        }
    }
    q
}

/// Normal-order an arbitrary word into the PBW basis (fast path).
pub fn normal_order(w: &GeneratorWord) -> PbwPolynomial {
    fold_blocks_left(&w.0, &PbwPolynomial::one())
}

/// Ground-truth reordering using only single-step degree-1 brackets.
pub fn normal_order_naive(w: &GeneratorWord) -> PbwPolynomial {
    reorder(vec![(FieldElement::one(), w.0.clone())], Mode::Naive)
}

/// `[x, E_b^n]` in standard-ordered form via the closed-form commutators.
///
/// `beta` must be a root generator and `n >= 1`.
pub fn power_commutator(x: GeneratorId, beta: GeneratorId, n: u32) -> PbwPolynomial {
    assert!(beta.signed_root().is_some(), "beta must be a root generator");
    assert!(n >= 1);
    let mut tasks = Vec::new();
    for (c, frag) in closed_commutator(x, beta, n) {
        tasks.push((c, frag));
    }
    reorder(tasks, Mode::Closed)
}

/// Exponent caps cutting out the invariant subspaces of the master
/// representation. A monomial is *in* the ideal when any present cap is met:
/// `k1 >= K1`, `k2 >= K2`, `n5 >= N5`, `n6 >= N6`, `n4+n5 >= N45`, or
/// `n1+n2+2n3+n4+n5 >= N15`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct IdealSpec {
    pub k1: Option<u32>,
    pub k2: Option<u32>,
    pub n5: Option<u32>,
    pub n6: Option<u32>,
    pub n45: Option<u32>,
    pub n15: Option<u32>,
}

impl IdealSpec {
    pub fn is_empty(&self) -> bool {
        self.k1.is_none()
            && self.k2.is_none()
            && self.n5.is_none()
            && self.n6.is_none()
            && self.n45.is_none()
            && self.n15.is_none()
    }

    /// Does the monomial lie in the invariant subspace cut out by the caps?
    pub fn contains(&self, m: &PbwMonomial) -> bool {
        let n = m.n_part();
        let k = m.k_part();
        let meets = |value: u32, cap: Option<u32>| cap.is_some_and(|c| value >= c);
        meets(k[0] as u32, self.k1)
            || meets(k[1] as u32, self.k2)
            || meets(n[4] as u32, self.n5)
            || meets(n[5] as u32, self.n6)
            || meets(n[3] as u32 + n[4] as u32, self.n45)
            || meets(
                n[0] as u32 + n[1] as u32 + 2 * n[2] as u32 + n[3] as u32 + n[4] as u32,
                self.n15,
            )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElement;
    use proptest::prelude::*;

    fn em(i: usize) -> GeneratorId {
        GeneratorId::lowering(i)
    }
    fn ep(i: usize) -> GeneratorId {
        GeneratorId::raising(i)
    }
    fn h(j: usize) -> GeneratorId {
        GeneratorId::cartan(j)
    }

    #[test]
    fn power_commutator_examples() {
        // [H1, E-1^n] = -(n/4) E-1^n
        for n in 1..=4u32 {
            let got = power_commutator(h(1), em(1), n);
            let expected = PbwPolynomial::monomial(
                PbwMonomial::power(em(1), n as u16),
                FieldElement::of(-(n as i64), 4),
            );
            assert_eq!(got, expected);
        }

        // [E1, E-1] = (1/4) H1 - (sqrt3/4) H2
        let got = power_commutator(ep(1), em(1), 1);
        let mut expected = PbwPolynomial::zero();
        expected.add_term(PbwMonomial::generator(h(1)), FieldElement::of(1, 4));
        expected.add_term(PbwMonomial::generator(h(2)), FieldElement::of_sqrt3(-1, 4));
        assert_eq!(got, expected);

        // [E6, E2^2] = 2 N62 E2 E4 + N62 N42 E3
        let got = power_commutator(ep(6), ep(2), 2);
        let mut expected = PbwPolynomial::zero();
        let mut e2e4 = PbwMonomial::generator(ep(2));
        e2e4.0[ep(4).standard_index()] = 1;
        expected.add_term(e2e4, FieldElement::of_sqrt6(2, 6));
        expected.add_term(
            PbwMonomial::generator(ep(3)),
            &FieldElement::of_sqrt6(1, 6) * &FieldElement::of_sqrt2(1, 4),
        );
        assert_eq!(got, expected);

        // oracle: repeated single-step brackets
        let word_xy = GeneratorWord(vec![(ep(6), 1), (ep(2), 2)]);
        let word_yx = GeneratorWord(vec![(ep(2), 2), (ep(6), 1)]);
        let oracle = normal_order_naive(&word_xy).sub(&normal_order_naive(&word_yx));
        assert_eq!(got, oracle);
    }

    #[test]
    fn normal_order_examples() {
        // already ordered
        let w = GeneratorWord(vec![(em(1), 2)]);
        assert_eq!(
            normal_order(&w),
            PbwPolynomial::monomial(PbwMonomial::power(em(1), 2), FieldElement::one())
        );

        // E1 E-1 = E-1 E1 + (1/4) H1 - (sqrt3/4) H2
        let w = GeneratorWord(vec![(ep(1), 1), (em(1), 1)]);
        let mut expected = PbwPolynomial::zero();
        let mut m = PbwMonomial::generator(em(1));
        m.0[ep(1).standard_index()] = 1;
        expected.add_term(m, FieldElement::one());
        expected.add_term(PbwMonomial::generator(h(1)), FieldElement::of(1, 4));
        expected.add_term(PbwMonomial::generator(h(2)), FieldElement::of_sqrt3(-1, 4));
        assert_eq!(normal_order(&w), expected);

        // E-6^2 E-1 against the naive oracle
        let w = GeneratorWord(vec![(em(6), 2), (em(1), 1)]);
        assert_eq!(normal_order(&w), normal_order_naive(&w));
    }

    #[test]
    fn multiply_examples() {
        let p = PbwPolynomial::generator(em(1)).multiply(&PbwPolynomial::generator(em(6)));
        let mut m16 = PbwMonomial::generator(em(1));
        m16.0[em(6).standard_index()] = 1;
        assert_eq!(p, PbwPolynomial::monomial(m16, FieldElement::one()));

        let one = PbwPolynomial::one();
        assert_eq!(one.multiply(&p), p);

        // E-6 E-1 = E-1 E-6 - 1/(2 sqrt2) E-2
        let q = PbwPolynomial::generator(em(6)).multiply(&PbwPolynomial::generator(em(1)));
        let mut expected = PbwPolynomial::monomial(m16, FieldElement::one());
        expected.add_term(PbwMonomial::generator(em(2)), FieldElement::of_sqrt2(-1, 4));
        assert_eq!(q, expected);
    }

    #[test]
    fn lie_homomorphism_all_pairs() {
        for x in GeneratorId::all() {
            for y in GeneratorId::all() {
                let px = PbwPolynomial::generator(x);
                let py = PbwPolynomial::generator(y);
                let lhs = px.multiply(&py).sub(&py.multiply(&px));
                let mut rhs = PbwPolynomial::zero();
                for (g, c) in g2::bracket(x, y) {
                    rhs.add_term(PbwMonomial::generator(g), c);
                }
                assert_eq!(lhs, rhs, "homomorphism failed for [{x}, {y}]");
            }
        }
    }

    #[test]
    fn jacobi_identity_sample() {
        // the full 364-triple sweep runs in the acceptance suite
        let triples = [
            (ep(6), ep(1), em(2)),
            (ep(1), em(1), ep(6)),
            (h(1), ep(2), em(2)),
            (em(6), em(1), ep(2)),
        ];
        for (x, y, z) in triples {
            let comm = |a: &PbwPolynomial, b: &PbwPolynomial| a.multiply(b).sub(&b.multiply(a));
            let px = PbwPolynomial::generator(x);
            let py = PbwPolynomial::generator(y);
            let pz = PbwPolynomial::generator(z);
            let total = comm(&comm(&px, &py), &pz)
                .add(&comm(&comm(&py, &pz), &px))
                .add(&comm(&comm(&pz, &px), &py));
            assert!(total.is_zero(), "Jacobi failed for ({x},{y},{z})");
        }
    }

    #[test]
    fn ideal_reduce_rules() {
        let spec = IdealSpec {
            k1: Some(1),
            ..Default::default()
        };
        let mut p = PbwPolynomial::zero();
        p.add_term(PbwMonomial::generator(h(1)), FieldElement::one());
        p.add_term(PbwMonomial::generator(em(1)), FieldElement::one());
        let reduced = p.ideal_reduce(&spec);
        assert_eq!(
            reduced,
            PbwPolynomial::monomial(PbwMonomial::generator(em(1)), FieldElement::one())
        );

        // all caps absent: unchanged
        assert_eq!(p.ideal_reduce(&IdealSpec::default()), p);

        // n3 = 1 meets N15 = 1 through the 2*n3 contribution
        let spec15 = IdealSpec {
            n15: Some(1),
            ..Default::default()
        };
        let q = PbwPolynomial::generator(ep(3));
        assert!(q.ideal_reduce(&spec15).is_zero());
    }

    fn arb_word(max_len: usize, max_pow: u32) -> impl Strategy<Value = GeneratorWord> {
        prop::collection::vec((0usize..14, 1..=max_pow), 0..=max_len).prop_map(|v| {
            GeneratorWord(
                v.into_iter()
                    .map(|(i, p)| (GeneratorId::from_standard_index(i), p))
                    .collect(),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn closed_form_matches_naive(w in arb_word(4, 2)) {
            prop_assume!(w.total_degree() <= 6);
            prop_assert_eq!(normal_order(&w), normal_order_naive(&w));
        }

        #[test]
        fn multiply_is_associative(
            a in arb_word(2, 2),
            b in arb_word(2, 2),
            c in arb_word(2, 2),
        ) {
            prop_assume!(a.total_degree() <= 3 && b.total_degree() <= 3 && c.total_degree() <= 3);
            let pa = normal_order(&a);
            let pb = normal_order(&b);
            let pc = normal_order(&c);
            prop_assert_eq!(
                pa.multiply(&pb).multiply(&pc),
                pa.multiply(&pb.multiply(&pc))
            );
        }

        #[test]
        fn ideal_reduce_idempotent_and_order_free(w in arb_word(4, 2)) {
            let p = normal_order(&w);
            let spec_a = IdealSpec { k1: Some(1), n15: Some(2), ..Default::default() };
            let spec_b = IdealSpec { n6: Some(1), ..Default::default() };
            let once = p.ideal_reduce(&spec_a);
            prop_assert_eq!(once.ideal_reduce(&spec_a), once.clone());
            prop_assert_eq!(
                once.ideal_reduce(&spec_b),
                p.ideal_reduce(&spec_b).ideal_reduce(&spec_a)
            );
        }
    }
}
