//! Three-fermion operators as exact 8×8 matrices on the Fock basis
//! `|m2, m4, m6⟩ = (f2†)^{m2} (f4†)^{m4} (f6†)^{m6} |0⟩`, ordered
//! lexicographically from (0,0,0) to (1,1,1). The anticommutation relations
//! come out of the sign bookkeeping of the ordered product, and the
//! projector identities are theorems to check rather than rewrite rules.

use std::fmt;

use crate::field::FieldElement;
use crate::linalg::Matrix;

/// The three fermion modes carry the labels 2, 4, 6.
pub const FERMION_MODES: [usize; 3] = [2, 4, 6];

/// Basis index of `|m2, m4, m6⟩`.
pub fn ket_index(m2: u16, m4: u16, m6: u16) -> usize {
    debug_assert!(m2 <= 1 && m4 <= 1 && m6 <= 1);
    (m2 as usize) * 4 + (m4 as usize) * 2 + m6 as usize
}

/// Occupations of a basis index.
pub fn ket_occupations(idx: usize) -> (u16, u16, u16) {
    (((idx >> 2) & 1) as u16, ((idx >> 1) & 1) as u16, (idx & 1) as u16)
}

/// An 8×8 exact matrix on the three-fermion Fock basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FermionMatrix(pub Matrix);

impl FermionMatrix {
    pub fn zero() -> Self {
        FermionMatrix(Matrix::zeros(8, 8))
    }

    pub fn identity() -> Self {
        FermionMatrix(Matrix::identity(8))
    }

    fn mode_position(label: usize) -> usize {
        FERMION_MODES
            .iter()
            .position(|&m| m == label)
            .expect("fermion labels are 2, 4, 6")
    }

    /// Creation operator `f_i†` with the Jordan-Wigner sign of the modes to
    /// its left in the ordered product.
    pub fn creation(label: usize) -> Self {
        let pos = Self::mode_position(label);
        let mut m = Matrix::zeros(8, 8);
        for col in 0..8 {
            let occ = [(col >> 2) & 1, (col >> 1) & 1, col & 1];
            if occ[pos] == 1 {
                continue;
            }
            let sign = if occ[..pos].iter().sum::<usize>() % 2 == 0 {
                1
            } else {
                -1
            };
            let row = col | (1 << (2 - pos));
            *m.at_mut(row, col) = FieldElement::from_int(sign);
        }
        FermionMatrix(m)
    }

    /// Annihilation operator `f_i`.
    pub fn annihilation(label: usize) -> Self {
        let pos = Self::mode_position(label);
        let mut m = Matrix::zeros(8, 8);
        for col in 0..8 {
            let occ = [(col >> 2) & 1, (col >> 1) & 1, col & 1];
            if occ[pos] == 0 {
                continue;
            }
            let sign = if occ[..pos].iter().sum::<usize>() % 2 == 0 {
                1
            } else {
                -1
            };
            let row = col & !(1 << (2 - pos));
            *m.at_mut(row, col) = FieldElement::from_int(sign);
        }
        FermionMatrix(m)
    }

    /// Number operator `n̂ᶠ_i = f_i† f_i`.
    pub fn number(label: usize) -> Self {
        Self::creation(label).mul(&Self::annihilation(label))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        FermionMatrix(self.0.mul(&rhs.0))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        FermionMatrix(self.0.add(&rhs.0))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        FermionMatrix(self.0.sub(&rhs.0))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        FermionMatrix(self.0.scale(c))
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).add(&rhs.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..8)
            .map(|r| {
                (0..8)
                    .map(|c| self.0.at(r, c).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        format!("[{}]", rows.join(" ; "))
    }
}

impl fmt::Display for FermionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anticommutation_relations() {
        for &i in &FERMION_MODES {
            for &j in &FERMION_MODES {
                let fi = FermionMatrix::annihilation(i);
                let fdj = FermionMatrix::creation(j);
                let expected = if i == j {
                    FermionMatrix::identity()
                } else {
                    FermionMatrix::zero()
                };
                assert_eq!(fi.anticommutator(&fdj), expected, "{{f{i}, f{j}†}}");
                let fj = FermionMatrix::annihilation(j);
                assert!(fi.anticommutator(&fj).is_zero());
                let fdi = FermionMatrix::creation(i);
                assert!(fdi.anticommutator(&fdj).is_zero());
            }
        }
    }

    #[test]
    fn projector_identities() {
        for &i in &FERMION_MODES {
            let n = FermionMatrix::number(i);
            assert_eq!(n.mul(&n), n, "n̂^2 = n̂ for mode {i}");
            let one = FermionMatrix::identity();
            let co = one.sub(&n);
            assert_eq!(co.mul(&co), co);
            let f = FermionMatrix::annihilation(i);
            let fd = FermionMatrix::creation(i);
            assert_eq!(f.mul(&fd).mul(&f), f);
            assert_eq!(fd.mul(&f).mul(&fd), fd);
        }
    }

    #[test]
    fn sign_bookkeeping() {
        // f4† |1,0,0⟩ = −|1,1,0⟩ because f4† passes f2†
        let fd4 = FermionMatrix::creation(4);
        let col = ket_index(1, 0, 0);
        let row = ket_index(1, 1, 0);
        assert_eq!(*fd4.0.at(row, col), FieldElement::from_int(-1));
        // f6† |1,1,0⟩ = |1,1,1⟩ with sign (+1)^2
        let fd6 = FermionMatrix::creation(6);
        assert_eq!(
            *fd6.0.at(ket_index(1, 1, 1), ket_index(1, 1, 0)),
            FieldElement::from_int(1)
        );
    }
}
