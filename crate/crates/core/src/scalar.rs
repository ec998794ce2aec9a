//! Coefficient rings for the representation carriers.
//!
//! Everything downstream of the enveloping algebra is generic over [`Scalar`]
//! so that a computation can run either with concrete coefficients in
//! Q(√2,√3) or with the highest-weight parameters (Λ1, Λ2) carried
//! symbolically as exact bivariate polynomials.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::FieldElement;

/// A commutative coefficient ring containing Q(√2,√3).
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn from_field(c: FieldElement) -> Self;
    /// Multiply by a field constant.
    fn scale(&self, c: &FieldElement) -> Self;
    /// Divide by a nonzero field constant (exact).
    fn div_field(&self, c: &FieldElement) -> Self;
    /// Canonical text rendering for wire output.
    fn render(&self) -> String;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn from_int(n: i64) -> Self {
        Self::from_field(FieldElement::from_int(n))
    }
}

impl Scalar for FieldElement {
    fn zero() -> Self {
        FieldElement::zero()
    }
    fn one() -> Self {
        FieldElement::one()
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_field(c: FieldElement) -> Self {
        c
    }
    fn scale(&self, c: &FieldElement) -> Self {
        self * c
    }
    fn div_field(&self, c: &FieldElement) -> Self {
        self * &c.inv().expect("division by zero field constant")
    }
    fn render(&self) -> String {
        FieldElement::render(self)
    }
}

/// Polynomial in the formal highest-weight parameters Λ1, Λ2 over Q(√2,√3).
///
/// Keys are `(deg Λ1, deg Λ2)`; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LambdaPoly {
    terms: BTreeMap<(u32, u32), FieldElement>,
}

impl LambdaPoly {
    pub fn constant(c: FieldElement) -> Self {
        let mut p = LambdaPoly::default();
        if !c.is_zero() {
            p.terms.insert((0, 0), c);
        }
        p
    }

    /// The formal symbol Λ1.
    pub fn lambda1() -> Self {
        let mut p = LambdaPoly::default();
        p.terms.insert((1, 0), FieldElement::one());
        p
    }

    /// The formal symbol Λ2.
    pub fn lambda2() -> Self {
        let mut p = LambdaPoly::default();
        p.terms.insert((0, 1), FieldElement::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &FieldElement)> {
        self.terms.iter()
    }

    /// Evaluate at concrete highest-weight components.
    pub fn eval(&self, l1: &FieldElement, l2: &FieldElement) -> FieldElement {
        let mut out = FieldElement::zero();
        for ((d1, d2), c) in &self.terms {
            out += &(&(c * &l1.pow(*d1)) * &l2.pow(*d2));
        }
        out
    }

    fn add_term(&mut self, key: (u32, u32), c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(FieldElement::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl Scalar for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly::default()
    }
    fn one() -> Self {
        LambdaPoly::constant(FieldElement::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        LambdaPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = LambdaPoly::default();
        for ((a1, a2), ca) in &self.terms {
            for ((b1, b2), cb) in &rhs.terms {
                out.add_term((a1 + b1, a2 + b2), ca * cb);
            }
        }
        out
    }
    fn from_field(c: FieldElement) -> Self {
        LambdaPoly::constant(c)
    }
    fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return LambdaPoly::default();
        }
        LambdaPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }
    fn div_field(&self, c: &FieldElement) -> Self {
        self.scale(&c.inv().expect("division by zero field constant"))
    }
    fn render(&self) -> String {
        format!("{self}")
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((d1, d2), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (d, name) in [(d1, "L1"), (d2, "L2")] {
                match d {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{d}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
