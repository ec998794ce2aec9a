//! The 7-dimensional fundamental representation (0,1), constructed as the
//! quotient of the highest-weight module at Λ = (1/4, 1/(4√3)) by the ideal
//! sum generated by the first-layer extremal vectors E₋₁ and E₋₆².
//!
//! Per weight space the ideal vectors are normal-ordered, the exact linear
//! system is solved by Gauss-Jordan elimination, and the quotient must come
//! out one-dimensional on the seven surviving weights and zero-dimensional
//! everywhere else; anything different is a hard error.

use std::collections::BTreeMap;

use crate::error::CoreError;
use crate::field::FieldElement;
use crate::g2::{GeneratorId, WeightVector};
use crate::linalg::{reduce_mod_rowspace, rref, Matrix};
use crate::pbw::PbwPolynomial;
use crate::reps::elementary::{
    d_lambda_apply, elementary_weight, HighestWeight, OmegaMinusMonomial, OmegaPolynomial,
};

/// All Ω₋ monomials whose root drop has the given simple-root lattice
/// coordinates, in canonical (B-tree) order.
pub fn omega_monomials_with_drop(a: i64, b: i64) -> Vec<OmegaMinusMonomial> {
    let mut out = Vec::new();
    if a < 0 || b < 0 {
        return out;
    }
    for m3 in 0..=(a / 2) {
        for m1 in 0..=(a - 2 * m3) {
            for m2 in 0..=(a - 2 * m3 - m1) {
                let rest = a - 2 * m3 - m1 - m2;
                for m4 in 0..=rest {
                    let m5 = rest - m4;
                    let used = m2 + 3 * m3 + 2 * m4 + 3 * m5;
                    let m6 = b - used;
                    if m6 < 0 {
                        continue;
                    }
                    out.push(OmegaMinusMonomial([
                        m1 as u16, m2 as u16, m3 as u16, m4 as u16, m5 as u16, m6 as u16,
                    ]));
                }
            }
        }
    }
    out.sort();
    out
}

/// A weight space of the quotient: the full Ω₋ monomial basis, the row
/// echelon of the ideal vectors inside it, and the residues spanning the
/// quotient.
struct WeightSpace {
    monomials: Vec<OmegaMinusMonomial>,
    echelon: Matrix,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl WeightSpace {
    fn quotient_dim(&self) -> usize {
        self.free.len()
    }

    fn index_of(&self, m: &OmegaMinusMonomial) -> Option<usize> {
        self.monomials.binary_search(m).ok()
    }

    /// Residue coordinates (on the free columns) of an Ω₋ polynomial lying
    /// in this weight space.
    fn residue(&self, p: &OmegaPolynomial<FieldElement>) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::zero(); self.monomials.len()];
        for (m, c) in p.iter() {
            let idx = self
                .index_of(m)
                .expect("polynomial term outside its weight space");
            v[idx] = c.clone();
        }
        let reduced = reduce_mod_rowspace(&self.echelon, &self.pivots, &v);
        self.free.iter().map(|&f| reduced[f].clone()).collect()
    }
}

/// Quotient machinery shared by the fundamental representation and the
/// fermion construction: reduces polynomials modulo `Ω₋·gens` weight space
/// by weight space.
pub struct QuotientReducer {
    ideal_gens: Vec<(PbwPolynomial, (i64, i64))>,
    spaces: BTreeMap<(i64, i64), WeightSpace>,
}

impl QuotientReducer {
    /// `gens` are Ω₋ polynomials with weight-homogeneous terms (each
    /// generator must have a single root drop).
    pub fn new(gens: Vec<PbwPolynomial>) -> Self {
        let ideal_gens = gens
            .into_iter()
            .map(|g| {
                let drops: Vec<(i64, i64)> = g
                    .iter()
                    .map(|(m, _)| OmegaMinusMonomial(m.m_part()).root_drop())
                    .collect();
                let first = drops[0];
                assert!(drops.iter().all(|&d| d == first));
                (g, first)
            })
            .collect();
        QuotientReducer {
            ideal_gens,
            spaces: BTreeMap::new(),
        }
    }

    fn space(&mut self, drop: (i64, i64)) -> &WeightSpace {
        if !self.spaces.contains_key(&drop) {
            let monomials = omega_monomials_with_drop(drop.0, drop.1);
            let mut rows = Vec::new();
            for (gen, gen_drop) in &self.ideal_gens {
                let (ua, ub) = (drop.0 - gen_drop.0, drop.1 - gen_drop.1);
                for u in omega_monomials_with_drop(ua, ub) {
                    let product = PbwPolynomial::monomial(u.to_pbw(), FieldElement::one())
                        .multiply(gen);
                    let mut row = vec![FieldElement::zero(); monomials.len()];
                    for (m, c) in product.iter() {
                        let om = OmegaMinusMonomial(m.m_part());
                        let idx = monomials
                            .binary_search(&om)
                            .expect("ideal vector leaves its weight space");
                        row[idx] = c.clone();
                    }
                    rows.push(row);
                }
            }
            let mut echelon = if rows.is_empty() {
                Matrix::zeros(0, monomials.len())
            } else {
                Matrix::from_rows(rows)
            };
            let pivots = rref(&mut echelon);
            let free = (0..monomials.len())
                .filter(|c| !pivots.contains(c))
                .collect();
            self.spaces.insert(
                drop,
                WeightSpace {
                    monomials,
                    echelon,
                    pivots,
                    free,
                },
            );
        }
        self.spaces.get(&drop).unwrap()
    }

    /// Quotient dimension at the given root drop.
    pub fn quotient_dim(&mut self, drop: (i64, i64)) -> usize {
        self.space(drop).quotient_dim()
    }

    /// Express `p` (weight-homogeneous) as `c ·` the class of `rep`.
    /// Fails if the weight space does not reduce to the span of `rep`.
    pub fn express_in_representative(
        &mut self,
        p: &OmegaPolynomial<FieldElement>,
        rep: &OmegaMinusMonomial,
    ) -> Result<FieldElement, CoreError> {
        let drop = rep.root_drop();
        let space = self.space(drop);
        if space.quotient_dim() != 1 {
            return Err(CoreError::WeightSpaceDimension {
                weight: format!("drop {:?}", drop),
                dim: space.quotient_dim(),
                expected: 1,
            });
        }
        let rep_res = space.residue(&OmegaPolynomial::monomial(*rep, FieldElement::one()));
        let p_res = space.residue(p);
        let denom = rep_res[0].clone();
        if denom.is_zero() {
            return Err(CoreError::Invalid(format!(
                "representative {rep} lies in the ideal"
            )));
        }
        Ok(&p_res[0] * &denom.inv().unwrap())
    }

    /// Assert `p` reduces to zero in the quotient.
    pub fn reduces_to_zero(&mut self, p: &OmegaPolynomial<FieldElement>) -> bool {
        if p.is_zero() {
            return true;
        }
        // group by drop
        let mut by_drop: BTreeMap<(i64, i64), OmegaPolynomial<FieldElement>> = BTreeMap::new();
        for (m, c) in p.iter() {
            by_drop
                .entry(m.root_drop())
                .or_insert_with(OmegaPolynomial::zero)
                .add_term(*m, c.clone());
        }
        for (drop, part) in by_drop {
            let space = self.space(drop);
            if !space.residue(&part).iter().all(FieldElement::is_zero) {
                return false;
            }
        }
        true
    }
}

/// One reduced weight space of (0,1) with the proportionality constants
/// between the Ω₋ monomials and the chosen representative.
#[derive(Clone, Debug)]
pub struct WeightSpaceRelation {
    pub weight: WeightVector,
    pub representative: OmegaMinusMonomial,
    /// `monomial ≡ c · representative` in the quotient, one entry per
    /// monomial of the ambient weight space.
    pub expansions: Vec<(OmegaMinusMonomial, FieldElement)>,
}

/// The fundamental representation (0,1) of G2 on explicit exact matrices.
#[derive(Clone, Debug)]
pub struct FundamentalRep01 {
    pub lambda: HighestWeight,
    /// The seven representative monomials, in weight order
    /// `1, E-6, E-2, E-4, E-4 E-6, E-2 E-4, E-2 E-4 E-6`.
    pub basis: Vec<OmegaMinusMonomial>,
    pub weights: Vec<WeightVector>,
    pub matrices: BTreeMap<GeneratorId, Matrix>,
    pub relations: Vec<WeightSpaceRelation>,
}

impl FundamentalRep01 {
    pub fn matrix(&self, g: GeneratorId) -> &Matrix {
        &self.matrices[&g]
    }
}

/// Build (0,1): Λ = (1/4, 1/(4√3)), P = 1, Q = 2, with the ideal generated
/// by E₋₁ and E₋₆².
pub fn build_fundamental_01() -> Result<FundamentalRep01, CoreError> {
    let hw = HighestWeight::from_dynkin(0, 1);
    let lambda = hw.scalars::<FieldElement>();

    let basis = vec![
        OmegaMinusMonomial([0, 0, 0, 0, 0, 0]),
        OmegaMinusMonomial([0, 0, 0, 0, 0, 1]),
        OmegaMinusMonomial([0, 1, 0, 0, 0, 0]),
        OmegaMinusMonomial([0, 0, 0, 1, 0, 0]),
        OmegaMinusMonomial([0, 0, 0, 1, 0, 1]),
        OmegaMinusMonomial([0, 1, 0, 1, 0, 0]),
        OmegaMinusMonomial([0, 1, 0, 1, 0, 1]),
    ];
    let weights: Vec<WeightVector> = basis
        .iter()
        .map(|m| elementary_weight(&hw.weight, m))
        .collect();

    let y11 = PbwPolynomial::generator(GeneratorId::lowering(1));
    let y12 = PbwPolynomial::monomial(
        crate::pbw::PbwMonomial::power(GeneratorId::lowering(6), 2),
        FieldElement::one(),
    );
    let mut reducer = QuotientReducer::new(vec![y11, y12]);

    // every surviving weight space must be exactly one-dimensional
    let mut relations = Vec::new();
    for (rep, weight) in basis.iter().zip(&weights) {
        let drop = rep.root_drop();
        let dim = reducer.quotient_dim(drop);
        if dim != 1 {
            return Err(CoreError::WeightSpaceDimension {
                weight: weight.to_string(),
                dim,
                expected: 1,
            });
        }
        let monomials = omega_monomials_with_drop(drop.0, drop.1);
        let mut expansions = Vec::new();
        for m in monomials {
            let c = reducer.express_in_representative(
                &OmegaPolynomial::monomial(m, FieldElement::one()),
                rep,
            )?;
            expansions.push((m, c));
        }
        relations.push(WeightSpaceRelation {
            weight: weight.clone(),
            representative: *rep,
            expansions,
        });
    }

    // assemble the 7x7 matrices
    let mut matrices = BTreeMap::new();
    for g in GeneratorId::all() {
        let mut mat = Matrix::zeros(7, 7);
        for (col, v) in basis.iter().enumerate() {
            let image = d_lambda_apply(&lambda, g, v);
            if image.is_zero() {
                continue;
            }
            // the image is weight-homogeneous; find which surviving weight
            // space it lands in (if any)
            let mut by_drop: BTreeMap<(i64, i64), OmegaPolynomial<FieldElement>> = BTreeMap::new();
            for (m, c) in image.iter() {
                by_drop
                    .entry(m.root_drop())
                    .or_insert_with(OmegaPolynomial::zero)
                    .add_term(*m, c.clone());
            }
            for (drop, part) in by_drop {
                if let Some(row) = basis.iter().position(|b| b.root_drop() == drop) {
                    let c = reducer.express_in_representative(&part, &basis[row])?;
                    let entry = mat.at_mut(row, col);
                    *entry += &c;
                } else if !reducer.reduces_to_zero(&part) {
                    return Err(CoreError::Invalid(format!(
                        "image of {v} under {g} does not vanish outside the seven weights"
                    )));
                }
            }
        }
        matrices.insert(g, mat);
    }

    Ok(FundamentalRep01 {
        lambda: hw,
        basis,
        weights,
        matrices,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2::{self, PlaneVector};

    fn constant(rep: &FundamentalRep01, weight_idx: usize, m: [u16; 6]) -> FieldElement {
        let rel = &rep.relations[weight_idx];
        let mono = OmegaMinusMonomial(m);
        rel.expansions
            .iter()
            .find(|(x, _)| *x == mono)
            .map(|(_, c)| c.clone())
            .expect("monomial present in the weight space")
    }

    #[test]
    fn builds_with_dimension_seven() {
        let rep = build_fundamental_01().unwrap();
        assert_eq!(rep.basis.len(), 7);
        assert_eq!(rep.weights.len(), 7);

        // highest weight is (1/4, 1/(4 sqrt3))
        assert_eq!(
            rep.weights[0],
            PlaneVector::new(FieldElement::of(1, 4), FieldElement::of_sqrt3(1, 12))
        );

        // E-2 = 2 sqrt2 E-1 E-6, i.e. E-1 E-6 = (1/(2 sqrt2)) E-2
        assert_eq!(
            constant(&rep, 2, [1, 0, 0, 0, 0, 1]),
            FieldElement::of_sqrt2(1, 4)
        );
        // E-4 = 2 sqrt6 E-2 E-6
        assert_eq!(
            constant(&rep, 3, [0, 1, 0, 0, 0, 1]),
            FieldElement::of_sqrt6(1, 12)
        );
        // E-5 = 6 sqrt2 E-4 E-6
        assert_eq!(
            constant(&rep, 4, [0, 0, 0, 0, 1, 0]),
            FieldElement::of_sqrt2(6, 1)
        );
    }

    #[test]
    fn cartan_matrices_are_diagonal_with_the_weights() {
        let rep = build_fundamental_01().unwrap();
        for j in 1..=2 {
            let h = rep.matrix(GeneratorId::cartan(j));
            for r in 0..7 {
                for c in 0..7 {
                    if r == c {
                        assert_eq!(h.at(r, c), rep.weights[r].component(j));
                    } else {
                        assert!(h.at(r, c).is_zero());
                    }
                }
            }
        }
        // hexagon plus center: the weights are ±a2, ±a4, ±a6 and 0
        let mut expected: Vec<PlaneVector> = vec![PlaneVector::zero()];
        for i in [2, 4, 6] {
            expected.push(g2::positive_root(i));
            expected.push(g2::positive_root(i).neg());
        }
        for w in &rep.weights {
            assert!(expected.contains(w), "unexpected weight {w}");
        }
        let mut sorted = rep.weights.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 7);
    }

    #[test]
    fn commutators_hold_on_matrices() {
        let rep = build_fundamental_01().unwrap();
        // spot pairs; the full 91-pair sweep runs in acceptance
        let pairs = [
            (GeneratorId::raising(1), GeneratorId::lowering(1)),
            (GeneratorId::raising(6), GeneratorId::lowering(6)),
            (GeneratorId::raising(6), GeneratorId::raising(1)),
            (GeneratorId::cartan(1), GeneratorId::lowering(4)),
        ];
        for (x, y) in pairs {
            let mx = rep.matrix(x);
            let my = rep.matrix(y);
            let lhs = mx.mul(my).sub(&my.mul(mx));
            let mut rhs = Matrix::zeros(7, 7);
            for (gz, c) in g2::bracket(x, y) {
                rhs = rhs.add(&rep.matrix(gz).scale(&c));
            }
            assert_eq!(lhs, rhs, "commutator failed for [{x},{y}]");
        }
        // traceless
        for g in GeneratorId::all() {
            assert!(rep.matrix(g).trace().is_zero());
        }
    }
}
