//! Wire formats: the term-list JSON encoding of PBW polynomials and the
//! parsing helpers the command-line surface is built on. Term order is the
//! lexicographic exponent order, so output is byte-deterministic.

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::field::FieldElement;
use crate::pbw::{PbwMonomial, PbwPolynomial};
use crate::reps::elementary::OmegaMinusMonomial;
use crate::scalar::Scalar;

/// One `{"exp": [...14 ints...], "coef": "<field text>"}` entry.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermEntry {
    pub exp: Vec<u16>,
    pub coef: String,
}

/// Serialize a PBW polynomial as a lexicographically ordered term list.
pub fn pbw_to_terms(p: &PbwPolynomial) -> Vec<TermEntry> {
    p.iter()
        .map(|(m, c)| TermEntry {
            exp: m.0.to_vec(),
            coef: c.render(),
        })
        .collect()
}

/// Parse a term list back into a polynomial.
pub fn pbw_from_terms(terms: &[TermEntry]) -> Result<PbwPolynomial, CoreError> {
    let mut out = PbwPolynomial::zero();
    for t in terms {
        if t.exp.len() != 14 {
            return Err(CoreError::Parse(format!(
                "expected 14 exponents, got {}",
                t.exp.len()
            )));
        }
        let mut exp = [0u16; 14];
        exp.copy_from_slice(&t.exp);
        out.add_term(PbwMonomial(exp), FieldElement::parse(&t.coef)?);
    }
    Ok(out)
}

/// Ω₋ polynomials are embedded in the 14-exponent format with zero raising
/// and Cartan parts.
pub fn omega_to_terms<S: Scalar>(
    p: &crate::reps::elementary::OmegaPolynomial<S>,
) -> Vec<TermEntry> {
    p.iter()
        .map(|(m, c)| TermEntry {
            exp: m.to_pbw().0.to_vec(),
            coef: c.render(),
        })
        .collect()
}

/// Parse a comma-separated exponent tuple: 14 entries for a PBW monomial.
pub fn parse_pbw_monomial(text: &str) -> Result<PbwMonomial, CoreError> {
    let values = parse_tuple(text, 14)?;
    let mut exp = [0u16; 14];
    exp.copy_from_slice(&values);
    Ok(PbwMonomial(exp))
}

/// Parse a comma-separated exponent tuple: 6 entries for an Ω₋ monomial.
pub fn parse_omega_monomial(text: &str) -> Result<OmegaMinusMonomial, CoreError> {
    let values = parse_tuple(text, 6)?;
    let mut exp = [0u16; 6];
    exp.copy_from_slice(&values);
    Ok(OmegaMinusMonomial(exp))
}

fn parse_tuple(text: &str, arity: usize) -> Result<Vec<u16>, CoreError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != arity {
        return Err(CoreError::Parse(format!(
            "expected {arity} comma-separated exponents, got {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<u16>()
                .map_err(|_| CoreError::Parse(format!("bad exponent {p:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2::GeneratorId;

    #[test]
    fn term_list_round_trip() {
        let mut p = PbwPolynomial::zero();
        p.add_term(
            PbwMonomial::power(GeneratorId::lowering(2), 3),
            FieldElement::of_sqrt2(-5, 4),
        );
        p.add_term(PbwMonomial::one(), FieldElement::of(7, 3));
        let terms = pbw_to_terms(&p);
        let json = serde_json::to_string(&terms).unwrap();
        let back: Vec<TermEntry> = serde_json::from_str(&json).unwrap();
        assert_eq!(pbw_from_terms(&back).unwrap(), p);
    }

    #[test]
    fn monomial_parsing() {
        let m = parse_pbw_monomial("1,0,0,0,0,2, 0,0,0,0,0,0, 1,0").unwrap();
        assert_eq!(m.exponent(GeneratorId::lowering(1)), 1);
        assert_eq!(m.exponent(GeneratorId::lowering(6)), 2);
        assert_eq!(m.exponent(GeneratorId::cartan(1)), 1);
        assert!(parse_pbw_monomial("1,2,3").is_err());
        assert!(parse_omega_monomial("0,0,0,0,0,1").is_ok());
    }
}
