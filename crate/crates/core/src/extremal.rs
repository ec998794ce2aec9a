//! Extremal vectors of the elementary representation: the twelve explicit
//! product recipes, their normal-ordered materialization and verification,
//! the BGG weight orbit they must match, and the layer-sum ideals.

use std::fmt;

use crate::error::CoreError;
use crate::field::FieldElement;
use crate::g2::{self, GeneratorId, WeightVector};
use crate::pbw::{self, GeneratorWord};
use crate::reps::elementary::{
    d_lambda_apply_poly, elementary_weight, HighestWeight, OmegaPolynomial,
};
use crate::reps::fundamental::QuotientReducer;

/// Exponent of a recipe factor as the linear form `a·P + b·Q`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DegreeForm {
    pub p_coeff: u32,
    pub q_coeff: u32,
}

impl DegreeForm {
    pub fn eval(&self, big_p: u32, big_q: u32) -> u32 {
        self.p_coeff * big_p + self.q_coeff * big_q
    }
}

impl fmt::Display for DegreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p_coeff, self.q_coeff) {
            (0, 0) => write!(f, "0"),
            (p, 0) => write!(f, "{}", if p == 1 { "P".into() } else { format!("{p}P") }),
            (0, q) => write!(f, "{}", if q == 1 { "Q".into() } else { format!("{q}Q") }),
            (p, q) => {
                let ps = if p == 1 { "P".into() } else { format!("{p}P") };
                let qs = if q == 1 { "Q".into() } else { format!("{q}Q") };
                write!(f, "{ps}+{qs}")
            }
        }
    }
}

/// One of the twelve extremal-vector recipes: an ordered product of simple
/// lowering generators with P,Q-linear exponents, leftmost factor first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremalRecipe {
    pub layer: usize,
    pub branch: usize,
    pub factors: Vec<(GeneratorId, DegreeForm)>,
    /// The sixth layer has a second, equivalent product form.
    pub alternate_factors: Option<Vec<(GeneratorId, DegreeForm)>>,
}

impl ExtremalRecipe {
    pub fn label(&self) -> String {
        format!("Y{}{}", self.layer, self.branch)
    }

    fn word(factors: &[(GeneratorId, DegreeForm)], big_p: u32, big_q: u32) -> GeneratorWord {
        GeneratorWord::new(
            factors
                .iter()
                .map(|(g, d)| (*g, d.eval(big_p, big_q)))
                .collect(),
        )
    }

    /// The factor word at concrete string degrees.
    pub fn word_at(&self, big_p: u32, big_q: u32) -> GeneratorWord {
        Self::word(&self.factors, big_p, big_q)
    }

    /// Sum of `exponent · root` over the factors: the weight drop below Λ.
    pub fn root_drop(&self, big_p: u32, big_q: u32) -> WeightVector {
        let mut total = WeightVector::zero();
        for (g, d) in &self.factors {
            let i = match g.kind() {
                g2::GeneratorKind::Lowering(i) => i,
                _ => unreachable!("recipes use lowering generators only"),
            };
            total = total.add(&g2::positive_root(i).scale_int(d.eval(big_p, big_q) as i64));
        }
        total
    }
}

/// `P = p + 1`, `Q = q + 1`. Rejects negative labels.
pub fn string_degrees(p: i64, q: i64) -> Result<(u32, u32), CoreError> {
    if p < 0 || q < 0 {
        return Err(CoreError::Invalid(format!(
            "Dynkin labels must be non-negative, got ({p}, {q})"
        )));
    }
    Ok((p as u32 + 1, q as u32 + 1))
}

fn df(p_coeff: u32, q_coeff: u32) -> DegreeForm {
    DegreeForm { p_coeff, q_coeff }
}

/// All twelve extremal-vector recipes, layer by layer.
pub fn extremal_recipes() -> Vec<ExtremalRecipe> {
    let e1 = GeneratorId::lowering(1);
    let e6 = GeneratorId::lowering(6);
    let p = df(1, 0);
    let q = df(0, 1);
    let p3q = df(3, 1); // 3P+Q
    let pq = df(1, 1); // P+Q
    let p2q = df(2, 1); // 2P+Q
    let p3q2 = df(3, 2); // 3P+2Q

    let chain1 = [
        vec![(e1, p)],
        vec![(e6, p3q), (e1, p)],
        vec![(e1, p2q), (e6, p3q), (e1, p)],
        vec![(e6, p3q2), (e1, p2q), (e6, p3q), (e1, p)],
        vec![(e1, pq), (e6, p3q2), (e1, p2q), (e6, p3q), (e1, p)],
    ];
    let chain2 = [
        vec![(e6, q)],
        vec![(e1, pq), (e6, q)],
        vec![(e6, p3q2), (e1, pq), (e6, q)],
        vec![(e1, p2q), (e6, p3q2), (e1, pq), (e6, q)],
        vec![(e6, p3q), (e1, p2q), (e6, p3q2), (e1, pq), (e6, q)],
    ];

    let mut out = vec![ExtremalRecipe {
        layer: 0,
        branch: 1,
        factors: Vec::new(),
        alternate_factors: None,
    }];
    for (i, factors) in chain1.iter().enumerate() {
        out.push(ExtremalRecipe {
            layer: i + 1,
            branch: 1,
            factors: factors.clone(),
            alternate_factors: None,
        });
    }
    for (i, factors) in chain2.iter().enumerate() {
        out.push(ExtremalRecipe {
            layer: i + 1,
            branch: 2,
            factors: factors.clone(),
            alternate_factors: None,
        });
    }
    let mut y61 = vec![(e6, q)];
    y61.extend(chain1[4].clone());
    let mut y61_alt = vec![(e1, p)];
    y61_alt.extend(chain2[4].clone());
    out.push(ExtremalRecipe {
        layer: 6,
        branch: 1,
        factors: y61,
        alternate_factors: Some(y61_alt),
    });
    out.sort_by_key(|r| (r.layer, r.branch));
    out
}

/// A materialized and verified extremal vector.
#[derive(Clone, Debug)]
pub struct ExtremalVector {
    pub recipe: ExtremalRecipe,
    pub vector: OmegaPolynomial<FieldElement>,
    pub weight: WeightVector,
}

/// Normal-order the recipe word, compute the weight from the factor root
/// sum, and verify that every raising generator annihilates the result.
pub fn materialize_extremal(
    lambda: &HighestWeight,
    recipe: &ExtremalRecipe,
) -> Result<ExtremalVector, CoreError> {
    let (p, q) = recipe_degrees(lambda)?;
    let word = recipe.word_at(p, q);
    let nf = pbw::normal_order(&word);
    let vector = OmegaPolynomial::from_pbw(&nf)
        .expect("product of lowering generators stays in Omega_minus");
    let weight = lambda.weight.sub(&recipe.root_drop(p, q));

    // every monomial of the vector carries the recipe weight
    for (m, _) in vector.iter() {
        debug_assert_eq!(elementary_weight(&lambda.weight, m), weight);
    }

    let scalars = lambda.scalars::<FieldElement>();
    for i in 1..=6 {
        let image = d_lambda_apply_poly(&scalars, GeneratorId::raising(i), &vector);
        if !image.is_zero() {
            return Err(CoreError::ExtremalVerification {
                label: recipe.label(),
                raising_index: i,
                residual: image.render(),
            });
        }
    }
    Ok(ExtremalVector {
        recipe: recipe.clone(),
        vector,
        weight,
    })
}

fn recipe_degrees(lambda: &HighestWeight) -> Result<(u32, u32), CoreError> {
    let (p, q) = lambda.labels.ok_or_else(|| {
        CoreError::Invalid("extremal recipes need integer Dynkin labels".into())
    })?;
    string_degrees(p as i64, q as i64)
}

/// The BGG orbit `{w(Λ+R) − R}` over the Weyl group generated by the two
/// simple reflections, paired with the reflection word length (the layer).
pub fn bgg_weights(lambda: &HighestWeight) -> Vec<(usize, WeightVector)> {
    let r = g2::half_sum_of_positive_roots();
    let start = lambda.weight.add(&r);
    let simple = [g2::positive_root(1), g2::positive_root(6)];
    let mut seen: Vec<(usize, WeightVector)> = vec![(0, start.clone())];
    let mut frontier = vec![start];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for v in frontier {
            for gamma in &simple {
                let image = g2::weyl_reflect(gamma, &v).expect("simple roots are nonzero");
                if !seen.iter().any(|(_, w)| *w == image) {
                    seen.push((depth, image.clone()));
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter()
        .map(|(layer, w)| (layer, w.sub(&r)))
        .collect()
}

/// The ideal `I_{j1} + I_{j2}` spanned by Ω₋-multiples of the two layer-`j`
/// extremal vectors, with an exact membership test.
pub struct LayerIdeal {
    pub layer: usize,
    pub generators: [ExtremalVector; 2],
    reducer: QuotientReducer,
}

/// Build the layer-sum ideal for `1 <= j <= 5`.
pub fn layer_sum_ideal(lambda: &HighestWeight, j: usize) -> Result<LayerIdeal, CoreError> {
    if !(1..=5).contains(&j) {
        return Err(CoreError::Invalid(format!(
            "layer-sum ideals exist for layers 1..=5, got {j}"
        )));
    }
    let recipes = extremal_recipes();
    let y1 = materialize_extremal(
        lambda,
        recipes.iter().find(|r| r.layer == j && r.branch == 1).unwrap(),
    )?;
    let y2 = materialize_extremal(
        lambda,
        recipes.iter().find(|r| r.layer == j && r.branch == 2).unwrap(),
    )?;
    let reducer = QuotientReducer::new(vec![y1.vector.to_pbw(), y2.vector.to_pbw()]);
    Ok(LayerIdeal {
        layer: j,
        generators: [y1, y2],
        reducer,
    })
}

impl LayerIdeal {
    /// Exact membership: is `p` an Ω₋-combination of the two generators?
    pub fn contains(&mut self, p: &OmegaPolynomial<FieldElement>) -> bool {
        self.reducer.reduces_to_zero(p)
    }
}

/// Compare the two product forms of the sixth-layer extremal vector; they
/// must be proportional, and the scalar is returned.
pub fn y61_proportionality(lambda: &HighestWeight) -> Result<FieldElement, CoreError> {
    let recipes = extremal_recipes();
    let y61 = recipes.iter().find(|r| r.layer == 6).unwrap();
    let (p, q) = recipe_degrees(lambda)?;
    let primary = pbw::normal_order(&y61.word_at(p, q));
    let alternate = pbw::normal_order(&ExtremalRecipe::word(
        y61.alternate_factors.as_ref().unwrap(),
        p,
        q,
    ));
    let (lead_mono, lead_coeff) = alternate
        .iter()
        .next()
        .ok_or_else(|| CoreError::Invalid("empty extremal vector".into()))?;
    let scalar = &primary.coefficient(lead_mono) * &lead_coeff.inv()?;
    let difference = primary.sub(&alternate.scale(&scalar));
    if !difference.is_zero() {
        return Err(CoreError::Invalid(
            "the two forms of the sixth-layer vector are not proportional".into(),
        ));
    }
    Ok(scalar)
}

/// Singular vectors found directly: the nullspace of the stacked raising
/// actions on the weight space with the given root drop. A cross-check for
/// the recipe construction at small labels.
pub fn extremal_space_at_drop(
    lambda: &HighestWeight,
    drop: (i64, i64),
) -> Vec<OmegaPolynomial<FieldElement>> {
    use crate::linalg::{nullspace, Matrix};
    use crate::reps::elementary::d_lambda_apply;
    use crate::reps::fundamental::omega_monomials_with_drop;

    let monomials = omega_monomials_with_drop(drop.0, drop.1);
    if monomials.is_empty() {
        return Vec::new();
    }
    let scalars = lambda.scalars::<FieldElement>();
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for i in 1..=6 {
        let alpha = match i {
            1 => (1i64, 0i64),
            2 => (1, 1),
            3 => (2, 3),
            4 => (1, 2),
            5 => (1, 3),
            _ => (0, 1),
        };
        let targets = omega_monomials_with_drop(drop.0 - alpha.0, drop.1 - alpha.1);
        if targets.is_empty() {
            continue;
        }
        let mut block = vec![vec![FieldElement::zero(); monomials.len()]; targets.len()];
        for (col, m) in monomials.iter().enumerate() {
            let image = d_lambda_apply(&scalars, GeneratorId::raising(i), m);
            for (t, c) in image.iter() {
                let row = targets.binary_search(t).expect("image stays in the target space");
                block[row][col] = c.clone();
            }
        }
        rows.extend(block);
    }
    if rows.is_empty() {
        return monomials
            .iter()
            .map(|m| OmegaPolynomial::monomial(*m, FieldElement::one()))
            .collect();
    }
    let matrix = Matrix::from_rows(rows);
    nullspace(&matrix)
        .into_iter()
        .map(|v| {
            let mut poly = OmegaPolynomial::zero();
            for (idx, c) in v.into_iter().enumerate() {
                poly.add_term(monomials[idx], c);
            }
            poly
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2::PlaneVector;
    use crate::reps::elementary::OmegaMinusMonomial;

    #[test]
    fn string_degree_examples() {
        assert_eq!(string_degrees(0, 1).unwrap(), (1, 2));
        assert_eq!(string_degrees(0, 0).unwrap(), (1, 1));
        assert_eq!(string_degrees(2, 3).unwrap(), (3, 4));
        assert!(string_degrees(-1, 0).is_err());
    }

    #[test]
    fn recipe_catalog() {
        let recipes = extremal_recipes();
        assert_eq!(recipes.len(), 12);
        for r in &recipes {
            assert_eq!(r.factors.len(), r.layer);
        }
        // Y21 at (0,0): E-6^4 E-1
        let y21 = recipes.iter().find(|r| r.layer == 2 && r.branch == 1).unwrap();
        let word = y21.word_at(1, 1);
        assert_eq!(
            word.0,
            vec![(GeneratorId::lowering(6), 4), (GeneratorId::lowering(1), 1)]
        );
        let y11 = recipes.iter().find(|r| r.layer == 1 && r.branch == 1).unwrap();
        assert_eq!(y11.factors.len(), 1);
    }

    #[test]
    fn materialize_small_cases() {
        // (p,q) = (0,1): Y11 = E-1 with weight Λ − α1
        let hw = HighestWeight::from_dynkin(0, 1);
        let recipes = extremal_recipes();
        let y11 = materialize_extremal(
            &hw,
            recipes.iter().find(|r| r.layer == 1 && r.branch == 1).unwrap(),
        )
        .unwrap();
        assert_eq!(
            y11.vector,
            OmegaPolynomial::monomial(OmegaMinusMonomial::generator(1), FieldElement::one())
        );
        assert_eq!(y11.weight, hw.weight.sub(&g2::positive_root(1)));
        assert_eq!(
            y11.weight,
            PlaneVector::new(FieldElement::zero(), FieldElement::of_sqrt3(1, 3))
        );

        // any Λ: Y01 = 1 with weight Λ
        let y01 = materialize_extremal(&hw, &recipes[0]).unwrap();
        assert!(y01.vector.coefficient(&OmegaMinusMonomial::one()).is_one());
        assert_eq!(y01.weight, hw.weight);

        // (0,0): Y12 = E-6 with weight −α6
        let hw0 = HighestWeight::from_dynkin(0, 0);
        let y12 = materialize_extremal(
            &hw0,
            recipes.iter().find(|r| r.layer == 1 && r.branch == 2).unwrap(),
        )
        .unwrap();
        assert_eq!(
            y12.vector,
            OmegaPolynomial::monomial(OmegaMinusMonomial::generator(6), FieldElement::one())
        );
        assert_eq!(y12.weight, g2::positive_root(6).neg());
    }

    #[test]
    fn bgg_orbit() {
        let hw = HighestWeight::from_dynkin(0, 1);
        let orbit = bgg_weights(&hw);
        assert_eq!(orbit.len(), 12);
        assert_eq!(orbit[0], (0, hw.weight.clone()));

        // S_{α1}(Λ+R) − R = Λ − P α1
        let expected = hw.weight.sub(&g2::positive_root(1));
        assert!(orbit.iter().any(|(l, w)| *l == 1 && *w == expected));

        // layer census: 1, 2, 2, 2, 2, 2, 1
        let mut census = [0usize; 7];
        for (l, _) in &orbit {
            census[*l] += 1;
        }
        assert_eq!(census, [1, 2, 2, 2, 2, 2, 1]);
    }

    #[test]
    fn layer_one_ideal_membership() {
        let hw = HighestWeight::from_dynkin(0, 1);
        let mut ideal = layer_sum_ideal(&hw, 1).unwrap();
        let poly = |m: OmegaMinusMonomial| OmegaPolynomial::monomial(m, FieldElement::one());
        assert!(ideal.contains(&poly(OmegaMinusMonomial::generator(1))));
        assert!(!ideal.contains(&poly(OmegaMinusMonomial::one())));
        assert!(!ideal.contains(&poly(OmegaMinusMonomial::generator(6))));
        assert!(ideal.contains(&poly(OmegaMinusMonomial::power(6, 2))));
    }

    #[test]
    fn sixth_layer_forms_are_proportional() {
        let hw = HighestWeight::from_dynkin(0, 0);
        let scalar = y61_proportionality(&hw).unwrap();
        assert!(!scalar.is_zero());
    }

    #[test]
    fn nullspace_solver_cross_check() {
        let hw = HighestWeight::from_dynkin(0, 1);
        let recipes = extremal_recipes();
        for (layer, branch) in [(1usize, 1usize), (1, 2), (2, 1)] {
            let recipe = recipes
                .iter()
                .find(|r| r.layer == layer && r.branch == branch)
                .unwrap();
            let y = materialize_extremal(&hw, recipe).unwrap();
            let drop = {
                let d = hw.weight.sub(&y.weight);
                // convert to lattice coordinates by matching against the recipe drop
                let (p, q) = (1u32, 2u32);
                let mut a = 0i64;
                let mut b = 0i64;
                for (g, form) in &recipe.factors {
                    let e = form.eval(p, q) as i64;
                    match g.kind() {
                        g2::GeneratorKind::Lowering(1) => a += e,
                        g2::GeneratorKind::Lowering(6) => b += e,
                        _ => unreachable!(),
                    }
                }
                assert_eq!(
                    d,
                    g2::positive_root(1)
                        .scale_int(a)
                        .add(&g2::positive_root(6).scale_int(b))
                );
                (a, b)
            };
            let space = extremal_space_at_drop(&hw, drop);
            assert_eq!(space.len(), 1, "singular space at {:?} not 1-dim", drop);
            // proportional to the materialized vector
            let basis = &space[0];
            let (m0, c0) = y.vector.iter().next().unwrap();
            let ratio = &basis.coefficient(m0) * &c0.inv().unwrap();
            assert_eq!(basis.sub(&y.vector.scale(&ratio)), OmegaPolynomial::zero());
        }
    }
}
