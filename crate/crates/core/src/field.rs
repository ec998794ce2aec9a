//! Exact arithmetic in the real number field Q(√2, √3).
//!
//! Elements are kept on the fixed basis {1, √2, √3, √6} with arbitrary-
//! precision rational coordinates. The representation is unique, so equality
//! is coordinate equality and every operation is exact. Inversion goes
//! through the product of the three nontrivial Galois conjugates divided by
//! the rational field norm, which is branch-free.

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::CoreError;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

/// Build a rational from an integer pair. Panics on zero denominator.
pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(num.into(), den.into())
}

/// An element of Q(√2, √3) written as `c0 + c2·√2 + c3·√3 + c6·√6`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement {
    /// Coordinates on the basis {1, √2, √3, √6}, in that order.
    coords: [Rational; 4],
}

/// Basis multiplication table: `BASIS_MUL[i][j] = (r, k)` means
/// `b_i · b_j = r · b_k` for the basis (1, √2, √3, √6).
const BASIS_MUL: [[(i64, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (2, 0), (1, 3), (2, 2)],
    [(1, 2), (1, 3), (3, 0), (3, 1)],
    [(1, 3), (2, 2), (3, 1), (6, 0)],
];

impl FieldElement {
    pub fn new(coords: [Rational; 4]) -> Self {
        FieldElement { coords }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut c = Self::default();
        c.coords[0] = BigRational::from_integer(n.into());
        c
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut c = Self::default();
        c.coords[0] = r;
        c
    }

    /// `num/den` as a field element.
    pub fn of(num: i64, den: i64) -> Self {
        Self::from_rational(rational(num, den))
    }

    /// `(num/den)·√2`.
    pub fn of_sqrt2(num: i64, den: i64) -> Self {
        let mut c = Self::default();
        c.coords[1] = rational(num, den);
        c
    }

    /// `(num/den)·√3`.
    pub fn of_sqrt3(num: i64, den: i64) -> Self {
        let mut c = Self::default();
        c.coords[2] = rational(num, den);
        c
    }

    /// `(num/den)·√6`.
    pub fn of_sqrt6(num: i64, den: i64) -> Self {
        let mut c = Self::default();
        c.coords[3] = rational(num, den);
        c
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    /// The rational part, provided the element is rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1].is_zero() && self.coords[2].is_zero() && self.coords[3].is_zero() {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one()
            && self.coords[1].is_zero()
            && self.coords[2].is_zero()
            && self.coords[3].is_zero()
    }

    /// Galois conjugate; `flip2` negates the √2-part, `flip3` the √3-part.
    fn galois(&self, flip2: bool, flip3: bool) -> Self {
        let mut c = self.clone();
        if flip2 {
            c.coords[1] = -c.coords[1].clone();
            c.coords[3] = -c.coords[3].clone();
        }
        if flip3 {
            c.coords[2] = -c.coords[2].clone();
            c.coords[3] = -c.coords[3].clone();
        }
        c
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Self, CoreError> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        let cofactor = &(&self.galois(true, false) * &self.galois(false, true))
            * &self.galois(true, true);
        let norm = self * &cofactor;
        let norm = norm
            .as_rational()
            .expect("field norm must be rational")
            .clone();
        debug_assert!(!norm.is_zero());
        Ok(cofactor.scale_rational(&norm.recip()))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        self * c
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        FieldElement {
            coords: [
                &self.coords[0] * r,
                &self.coords[1] * r,
                &self.coords[2] * r,
                &self.coords[3] * r,
            ],
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale_rational(&BigRational::from_integer(n.into()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Canonical wire form `a + b*r2 + c*r3 + d*r6`; `parse` round-trips it.
    pub fn render(&self) -> String {
        format!(
            "{} + {}*r2 + {}*r3 + {}*r6",
            self.coords[0], self.coords[1], self.coords[2], self.coords[3]
        )
    }

    /// Parse the canonical form produced by [`FieldElement::render`].
    pub fn parse(text: &str) -> Result<Self, CoreError> {
        let bad = || CoreError::Parse(format!("bad field element: {text:?}"));
        let parts: Vec<&str> = text.split(" + ").collect();
        if parts.len() != 4 {
            return Err(bad());
        }
        let mut coords: [Rational; 4] = Default::default();
        coords[0] = parts[0].parse().map_err(|_| bad())?;
        for (i, suffix) in [(1, "*r2"), (2, "*r3"), (3, "*r6")] {
            let raw = parts[i].strip_suffix(suffix).ok_or_else(bad)?;
            coords[i] = raw.parse().map_err(|_| bad())?;
        }
        Ok(FieldElement { coords })
    }

    /// Decimal value for display only; never used in comparisons.
    pub fn to_f64(&self) -> f64 {
        let r = |x: &Rational| x.to_f64().unwrap_or(f64::NAN);
        r(&self.coords[0])
            + r(&self.coords[1]) * std::f64::consts::SQRT_2
            + r(&self.coords[2]) * 3f64.sqrt()
            + r(&self.coords[3]) * 6f64.sqrt()
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            coords: [
                &self.coords[0] + &rhs.coords[0],
                &self.coords[1] + &rhs.coords[1],
                &self.coords[2] + &rhs.coords[2],
                &self.coords[3] + &rhs.coords[3],
            ],
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            coords: [
                &self.coords[0] - &rhs.coords[0],
                &self.coords[1] - &rhs.coords[1],
                &self.coords[2] - &rhs.coords[2],
                &self.coords[3] - &rhs.coords[3],
            ],
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let mut coords: [Rational; 4] = Default::default();
        for i in 0..4 {
            if self.coords[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.coords[j].is_zero() {
                    continue;
                }
                let (r, k) = BASIS_MUL[i][j];
                let prod = &self.coords[i] * &rhs.coords[j];
                coords[k] += prod * BigRational::from_integer(r.into());
            }
        }
        FieldElement { coords }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            coords: [
                -self.coords[0].clone(),
                -self.coords[1].clone(),
                -self.coords[2].clone(),
                -self.coords[3].clone(),
            ],
        }
    }
}

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        for i in 0..4 {
            self.coords[i] += &rhs.coords[i];
        }
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        for i in 0..4 {
            self.coords[i] -= &rhs.coords[i];
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Human-oriented display: only the nonzero basis terms.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, label) in [(0, ""), (1, "r2"), (2, "r3"), (3, "r6")] {
            let c = &self.coords[i];
            if c.is_zero() {
                continue;
            }
            if first {
                if label.is_empty() {
                    write!(f, "{c}")?;
                } else if c.is_one() {
                    write!(f, "{label}")?;
                } else if (-c).is_one() {
                    write!(f, "-{label}")?;
                } else {
                    write!(f, "{c}*{label}")?;
                }
                first = false;
            } else {
                let (sign, mag) = if c.is_negative() {
                    ("-", -c)
                } else {
                    ("+", c.clone())
                };
                if label.is_empty() {
                    write!(f, " {sign} {mag}")?;
                } else if mag.is_one() {
                    write!(f, " {sign} {label}")?;
                } else {
                    write!(f, " {sign} {mag}*{label}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(n: i64, d: i64) -> FieldElement {
        FieldElement::of(n, d)
    }

    #[test]
    fn addition_examples() {
        // 1/(2√2) = √2/4
        let half_inv_sqrt2 = FieldElement::of_sqrt2(1, 4);
        let doubled = &half_inv_sqrt2 + &half_inv_sqrt2;
        assert_eq!(doubled, FieldElement::of_sqrt2(1, 2));

        let x = &FieldElement::of_sqrt6(3, 7) + &fe(-2, 5);
        assert_eq!(&x + &FieldElement::zero(), x);

        let a = &fe(1, 4) - &FieldElement::of_sqrt3(1, 4);
        assert_eq!(&a + &FieldElement::of_sqrt3(1, 4), fe(1, 4));
    }

    #[test]
    fn multiplication_examples() {
        let r2 = FieldElement::of_sqrt2(1, 1);
        let r3 = FieldElement::of_sqrt3(1, 1);
        assert_eq!(&r2 * &r3, FieldElement::of_sqrt6(1, 1));

        // 1/(2√2) · 2√2 = 1
        let a = FieldElement::of_sqrt2(1, 4);
        let b = FieldElement::of_sqrt2(2, 1);
        assert!((&a * &b).is_one());

        // 1/(4√3) · 1/(2√3) = 1/24
        let a = FieldElement::of_sqrt3(1, 12);
        let b = FieldElement::of_sqrt3(1, 6);
        assert_eq!(&a * &b, fe(1, 24));
    }

    #[test]
    fn inversion_examples() {
        let r2 = FieldElement::of_sqrt2(1, 1);
        assert_eq!(r2.inv().unwrap(), FieldElement::of_sqrt2(1, 2));
        assert!(FieldElement::one().inv().unwrap().is_one());

        // (1 + √2)^-1 = -1 + √2
        let x = &FieldElement::one() + &r2;
        let expected = &FieldElement::of_sqrt2(1, 1) - &FieldElement::one();
        assert_eq!(x.inv().unwrap(), expected);

        assert!(FieldElement::zero().inv().is_err());
    }

    #[test]
    fn render_parse_round_trip() {
        let x = &(&fe(-3, 7) + &FieldElement::of_sqrt2(5, 2)) + &FieldElement::of_sqrt6(-1, 12);
        let back = FieldElement::parse(&x.render()).unwrap();
        assert_eq!(back, x);
        assert_eq!(FieldElement::parse("0 + 0 + 0").ok(), None);
    }

    fn arb_field_element() -> impl Strategy<Value = FieldElement> {
        let coord = (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rational(n, d));
        [coord.clone(), coord.clone(), coord.clone(), coord].prop_map(|c| FieldElement::new(c))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_field_element(), b in arb_field_element(), c in arb_field_element()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn inverse_property(a in arb_field_element()) {
            prop_assume!(!a.is_zero());
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }

        #[test]
        fn parse_round_trip(a in arb_field_element()) {
            prop_assert_eq!(FieldElement::parse(&a.render()).unwrap(), a);
        }
    }
}
