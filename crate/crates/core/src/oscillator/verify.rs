//! The universal commutator-fidelity verifier: a realization passes when
//! `[r(x), r(y)] − r([x, y])` vanishes identically for all 91 generator
//! pairs. Failures are report entries, never exceptions.

use rayon::prelude::*;
use serde::Serialize;

use crate::field::FieldElement;
use crate::g2::{self, GeneratorId};
use crate::scalar::Scalar;

use super::fermion::FermionMatrix;
use super::{OscPolynomial, Realization};

/// Operators that can be verified against the commutation relations.
pub trait AlgebraElement: Clone + Send + Sync {
    fn commutator(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn scale_field(&self, c: &FieldElement) -> Self;
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn describe(&self) -> String;
}

impl<S: Scalar> AlgebraElement for OscPolynomial<S> {
    fn commutator(&self, other: &Self) -> Self {
        OscPolynomial::commutator(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        OscPolynomial::sub(self, other)
    }
    fn add(&self, other: &Self) -> Self {
        OscPolynomial::add(self, other)
    }
    fn scale_field(&self, c: &FieldElement) -> Self {
        OscPolynomial::scale_field(self, c)
    }
    fn zero_like(&self) -> Self {
        OscPolynomial::zero(self.modes)
    }
    fn is_zero(&self) -> bool {
        OscPolynomial::is_zero(self)
    }
    fn describe(&self) -> String {
        self.render()
    }
}

impl AlgebraElement for FermionMatrix {
    fn commutator(&self, other: &Self) -> Self {
        FermionMatrix::commutator(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        FermionMatrix::sub(self, other)
    }
    fn add(&self, other: &Self) -> Self {
        FermionMatrix::add(self, other)
    }
    fn scale_field(&self, c: &FieldElement) -> Self {
        FermionMatrix::scale(self, c)
    }
    fn zero_like(&self) -> Self {
        FermionMatrix::zero()
    }
    fn is_zero(&self) -> bool {
        FermionMatrix::is_zero(self)
    }
    fn describe(&self) -> String {
        self.render()
    }
}

/// One verified generator pair.
#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub x: String,
    pub y: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

/// Residuals for all 91 unordered generator pairs.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub pairs: Vec<PairCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(|p| p.ok)
    }

    pub fn failures(&self) -> usize {
        self.pairs.iter().filter(|p| !p.ok).count()
    }
}

/// Check `[r(x), r(y)] = r([x, y])` for every unordered generator pair.
pub fn verify_realization<T: AlgebraElement>(r: &Realization<T>) -> VerificationReport {
    let gens: Vec<GeneratorId> = GeneratorId::all().collect();
    let mut pairs = Vec::new();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            pairs.push((gens[i], gens[j]));
        }
    }
    let checks: Vec<PairCheck> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let mut expected = r[&x].zero_like();
            for (g, c) in g2::bracket(x, y) {
                expected = expected.add(&r[&g].scale_field(&c));
            }
            let residual = r[&x].commutator(&r[&y]).sub(&expected);
            let ok = residual.is_zero();
            PairCheck {
                x: x.name(),
                y: y.name(),
                ok,
                residual: if ok { None } else { Some(residual.describe()) },
            }
        })
        .collect();
    VerificationReport { pairs: checks }
}

/// One generator whose transcribed and generated operators differ.
#[derive(Clone, Debug, Serialize)]
pub struct RealizationDiff {
    pub generator: String,
    pub transcribed: String,
    pub generated: String,
}

/// Adjudication of a transcribed realization against the generated one.
#[derive(Clone, Debug, Serialize)]
pub struct AdjudicationReport {
    pub form: String,
    /// Every generator where the two operators differ.
    pub diffs: Vec<RealizationDiff>,
    pub transcribed_passes: bool,
    pub generated_passes: bool,
    /// Pairs failed by the transcribed realization.
    pub transcribed_failures: Vec<String>,
}

/// List every generator where transcription and generation disagree, and
/// which of the two realizations satisfies the commutation relations.
pub fn adjudicate<T: AlgebraElement + PartialEq>(
    form: &str,
    transcribed: &Realization<T>,
    generated: &Realization<T>,
) -> AdjudicationReport {
    let mut diffs = Vec::new();
    for g in GeneratorId::all() {
        if transcribed[&g] != generated[&g] {
            diffs.push(RealizationDiff {
                generator: g.name(),
                transcribed: transcribed[&g].describe(),
                generated: generated[&g].describe(),
            });
        }
    }
    let transcribed_report = verify_realization(transcribed);
    let generated_report = verify_realization(generated);
    AdjudicationReport {
        form: form.to_string(),
        diffs,
        transcribed_passes: transcribed_report.passed(),
        generated_passes: generated_report.passed(),
        transcribed_failures: transcribed_report
            .pairs
            .iter()
            .filter(|p| !p.ok)
            .map(|p| format!("[{}, {}]", p.x, p.y))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscillator::realizations::three_fermion_transcribed;

    #[test]
    fn cartan_pair_commutes_in_fixtures() {
        let b = crate::oscillator::realizations::six_boson_transcribed();
        let h1 = &b[&GeneratorId::cartan(1)];
        let h2 = &b[&GeneratorId::cartan(2)];
        assert!(h1.commutator(h2).is_zero());
    }

    #[test]
    fn fermion_fixture_h_pairs() {
        let f = three_fermion_transcribed();
        // [F(H1), F(E2)] − (1/4) F(E2) = 0 with α2^(1) = 1/4
        let lhs = f[&GeneratorId::cartan(1)].commutator(&f[&GeneratorId::raising(2)]);
        let rhs = f[&GeneratorId::raising(2)].scale(&FieldElement::of(1, 4));
        assert!(lhs.sub(&rhs).is_zero());
    }
}
