//! Transcribed oscillator realizations, kept verbatim as published. These
//! are fixtures: the mechanically generated realizations in `generate`
//! define correctness, and `adjudicate` itemizes every difference.

use crate::field::FieldElement;
use crate::g2::GeneratorId;
use crate::scalar::LambdaPoly;

use super::fermion::FermionMatrix;
use super::{OscPolynomial, Realization};

type P = OscPolynomial<LambdaPoly>;

fn cr(modes: usize, i: usize) -> P {
    OscPolynomial::creation(modes, i)
}
fn an(modes: usize, i: usize) -> P {
    OscPolynomial::annihilation(modes, i)
}
fn num(modes: usize, i: usize) -> P {
    OscPolynomial::number(modes, i)
}
fn lam1(modes: usize) -> P {
    OscPolynomial::constant(modes, LambdaPoly::lambda1())
}
fn lam2(modes: usize) -> P {
    OscPolynomial::constant(modes, LambdaPoly::lambda2())
}

/// Weighted sum of number operators `Σ c_i n̂_i`.
fn num_sum(modes: usize, weights: &[(usize, i64)], scale: FieldElement) -> P {
    let mut acc = OscPolynomial::zero(modes);
    for &(i, w) in weights {
        acc = acc.add(&num(modes, i).scale_field(&FieldElement::from_int(w)));
    }
    acc.scale_field(&scale)
}

/// The inhomogeneous six-boson realization, transcribed.
pub fn six_boson_transcribed() -> Realization<P> {
    let k = 6;
    let fe = FieldElement::of;
    let r2 = FieldElement::of_sqrt2;
    let r3 = FieldElement::of_sqrt3;
    let r6 = FieldElement::of_sqrt6;
    let mut map = Realization::new();

    map.insert(GeneratorId::lowering(1), cr(k, 1));
    map.insert(GeneratorId::lowering(2), cr(k, 2));
    map.insert(GeneratorId::lowering(3), cr(k, 3));
    map.insert(
        GeneratorId::lowering(4),
        cr(k, 4).sub(&cr(k, 3).multiply(&an(k, 2)).scale_field(&r2(1, 4))),
    );
    map.insert(
        GeneratorId::lowering(5),
        cr(k, 5).add(&cr(k, 3).multiply(&an(k, 1)).scale_field(&r2(1, 4))),
    );
    map.insert(
        GeneratorId::lowering(6),
        cr(k, 6)
            .sub(&cr(k, 2).multiply(&an(k, 1)).scale_field(&r2(1, 4)))
            .sub(&cr(k, 4).multiply(&an(k, 2)).scale_field(&r6(1, 6)))
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .scale_field(&r3(1, 24)),
            )
            .sub(&cr(k, 5).multiply(&an(k, 4)).scale_field(&r2(1, 4))),
    );

    // B(E1) = (1/4)[Λ1 − √3 Λ2 − (1/2)(n1+n2+n3−n5−n6)] a1 + …
    let bracket = lam1(k)
        .sub(&lam2(k).scale_field(&r3(1, 1)))
        .sub(&num_sum(k, &[(1, 1), (2, 1), (3, 1), (5, -1), (6, -1)], fe(1, 2)));
    map.insert(
        GeneratorId::raising(1),
        bracket
            .multiply(&an(k, 1))
            .scale_field(&fe(1, 4))
            .add(&cr(k, 6).multiply(&an(k, 2)).scale_field(&r2(1, 4)))
            .sub(
                &cr(k, 4)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .scale_field(&r3(1, 24)),
            )
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .scale_field(&r6(1, 288)),
            )
            .sub(
                &cr(k, 5)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 4))
                    .scale_field(&fe(1, 8)),
            )
            .sub(&cr(k, 5).multiply(&an(k, 3)).scale_field(&r2(1, 4))),
    );

    // B(E2)
    let lam2_n6 = |den: FieldElement| lam2(k).sub(&num(k, 6).scale_field(&den));
    let bracket = lam1(k)
        .sub(&lam2(k).scale_field(&r3(1, 3)))
        .sub(&num_sum(
            k,
            &[(1, 3), (2, 1), (3, 3), (4, 1), (6, -1)],
            r3(1, 12),
        ));
    map.insert(
        GeneratorId::raising(2),
        cr(k, 2)
            .multiply(&an(k, 1))
            .multiply(&an(k, 4))
            .scale_field(&r3(-1, 12))
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 1))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r6(1, 96)),
            )
            .sub(
                &cr(k, 4)
                    .multiply(&an(k, 1))
                    .multiply(&an(k, 5))
                    .scale_field(&fe(1, 8)),
            )
            .add(
                &lam2_n6(r3(1, 12))
                    .multiply(&an(k, 1))
                    .multiply(&an(k, 6))
                    .scale_field(&r6(1, 24)),
            )
            .add(&bracket.multiply(&an(k, 2)).scale_field(&fe(1, 4)))
            .add(&cr(k, 4).multiply(&an(k, 3)).scale_field(&r2(1, 4)))
            .add(&cr(k, 6).multiply(&an(k, 4)).scale_field(&r6(1, 6)))
            .sub(
                &cr(k, 5)
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r3(1, 24)),
            ),
    );

    // B(E3)
    let b1 = lam1(k)
        .add(&lam2(k).scale_field(&r3(1, 1)))
        .sub(&num_sum(k, &[(4, 1), (5, 1), (6, 1)], fe(1, 2)));
    let b2 = lam1(k)
        .add(&lam2(k).scale_field(&r3(1, 3)))
        .sub(&num_sum(k, &[(2, 2), (4, 1), (5, 3), (6, 1)], fe(1, 6)));
    let b3 = lam1(k).sub(&num_sum(
        k,
        &[(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)],
        fe(1, 4),
    ));
    map.insert(
        GeneratorId::raising(3),
        cr(k, 2)
            .multiply(&an(k, 1))
            .multiply(&an(k, 4))
            .multiply(&an(k, 4))
            .scale_field(&r6(1, 96))
            .sub(
                &cr(k, 3)
                    .multiply(&an(k, 1))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r3(1, 288)),
            )
            .sub(
                &lam2_n6(r3(1, 12))
                    .multiply(&an(k, 1))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 6))
                    .scale_field(&r3(1, 48)),
            )
            .sub(&b1.multiply(&an(k, 1)).multiply(&an(k, 5)).scale_field(&r2(1, 16)))
            .sub(
                &cr(k, 1)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .scale_field(&r6(1, 288)),
            )
            .add(&b2.multiply(&an(k, 2)).multiply(&an(k, 4)).scale_field(&r2(1, 16)))
            .add(
                &cr(k, 6)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 5))
                    .scale_field(&fe(1, 8)),
            )
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&fe(1, 192)),
            )
            .sub(
                &cr(k, 4)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 5))
                    .scale_field(&r6(1, 96)),
            )
            .add(
                &lam2_n6(r3(1, 12))
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 6))
                    .scale_field(&fe(1, 48)),
            )
            .add(&b3.multiply(&an(k, 3)).scale_field(&fe(1, 2)))
            .sub(
                &cr(k, 6)
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r3(1, 24)),
            )
            .add(
                &cr(k, 5)
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r6(1, 288)),
            ),
    );

    // B(E4); the Λ2 bracket keeps the printed 1/(4√3)
    let bracket = lam1(k)
        .add(&lam2(k).scale_field(&r3(1, 3)))
        .sub(&num_sum(k, &[(2, 4), (4, 1), (5, 3), (6, 1)], fe(1, 6)));
    map.insert(
        GeneratorId::raising(4),
        cr(k, 1)
            .multiply(&an(k, 2))
            .multiply(&an(k, 2))
            .scale_field(&r3(-1, 24))
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r2(1, 48)),
            )
            .sub(
                &cr(k, 4)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 5))
                    .scale_field(&r3(1, 12)),
            )
            .add(
                &lam2_n6(r3(1, 12))
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 6))
                    .scale_field(&r2(1, 12)),
            )
            .sub(&cr(k, 2).multiply(&an(k, 3)).scale_field(&r2(1, 4)))
            .add(&cr(k, 6).multiply(&an(k, 5)).scale_field(&r2(1, 4)))
            .add(&bracket.multiply(&an(k, 4)).scale_field(&fe(1, 4))),
    );

    // B(E5)
    let bracket = lam1(k)
        .scale_field(&fe(1, 4))
        .add(&lam2(k).scale_field(&r3(1, 4)))
        .sub(&num_sum(k, &[(4, 1), (5, 1), (6, 1)], fe(1, 8)));
    map.insert(
        GeneratorId::raising(5),
        cr(k, 1)
            .multiply(&an(k, 3))
            .scale_field(&r2(1, 4))
            .sub(
                &cr(k, 2)
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r3(1, 24)),
            )
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r6(1, 144)),
            )
            .add(
                &lam2_n6(r3(1, 12))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 6))
                    .scale_field(&r6(1, 24)),
            )
            .add(&bracket.multiply(&an(k, 5))),
    );

    // B(E6)
    map.insert(
        GeneratorId::raising(6),
        cr(k, 1)
            .multiply(&an(k, 2))
            .scale_field(&r2(-1, 4))
            .sub(&cr(k, 2).multiply(&an(k, 4)).scale_field(&r6(1, 6)))
            .sub(&cr(k, 4).multiply(&an(k, 5)).scale_field(&r2(1, 4)))
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r3(1, 24)),
            )
            .add(&lam2_n6(r3(1, 12)).multiply(&an(k, 6)).scale_field(&r3(1, 6))),
    );

    map.insert(
        GeneratorId::cartan(1),
        lam1(k).sub(&num_sum(
            k,
            &[(1, 1), (2, 1), (3, 2), (4, 1), (5, 1)],
            fe(1, 4),
        )),
    );
    map.insert(
        GeneratorId::cartan(2),
        lam2(k).add(&num_sum(
            k,
            &[(1, 3), (2, 1), (4, -1), (5, -3), (6, -2)],
            r3(1, 12),
        )),
    );
    map
}

/// The inhomogeneous five-boson realization, transcribed (five modes,
/// `Λ2 = 0` so only Λ1 appears; the `a3† a2²` sign and the `E2` bracket are
/// printed as in the source and adjudicated downstream).
pub fn five_boson_transcribed() -> Realization<P> {
    let k = 5;
    let fe = FieldElement::of;
    let r2 = FieldElement::of_sqrt2;
    let r3 = FieldElement::of_sqrt3;
    let r6 = FieldElement::of_sqrt6;
    let mut map = Realization::new();

    map.insert(GeneratorId::lowering(1), cr(k, 1));
    map.insert(GeneratorId::lowering(2), cr(k, 2));
    map.insert(GeneratorId::lowering(3), cr(k, 3));
    map.insert(
        GeneratorId::lowering(4),
        cr(k, 4).sub(&cr(k, 3).multiply(&an(k, 2)).scale_field(&r2(1, 4))),
    );
    map.insert(
        GeneratorId::lowering(5),
        cr(k, 5).add(&cr(k, 3).multiply(&an(k, 1)).scale_field(&r2(1, 4))),
    );
    // printed with a minus on the a3† a2² term
    map.insert(
        GeneratorId::lowering(6),
        cr(k, 2)
            .multiply(&an(k, 1))
            .scale_field(&r2(-1, 4))
            .sub(&cr(k, 4).multiply(&an(k, 2)).scale_field(&r6(1, 6)))
            .sub(
                &cr(k, 3)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .scale_field(&r3(1, 24)),
            )
            .sub(&cr(k, 5).multiply(&an(k, 4)).scale_field(&r2(1, 4))),
    );

    let bracket = lam1(k).sub(&num_sum(k, &[(1, 1), (2, 1), (3, 1), (5, -1)], fe(1, 2)));
    map.insert(
        GeneratorId::raising(1),
        cr(k, 3)
            .multiply(&an(k, 2))
            .multiply(&an(k, 2))
            .multiply(&an(k, 2))
            .scale_field(&r6(1, 288))
            .sub(
                &cr(k, 4)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .scale_field(&r3(1, 24)),
            )
            .sub(
                &cr(k, 5)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 4))
                    .scale_field(&fe(1, 8)),
            )
            .sub(&cr(k, 5).multiply(&an(k, 3)).scale_field(&r2(1, 4)))
            .add(&bracket.multiply(&an(k, 1)).scale_field(&fe(1, 4))),
    );

    // printed bracket: Λ1 − (1/6)(3 n̂1 + 2 n̂2 + 3 n̂3 + n̂4)
    let bracket = lam1(k).sub(&num_sum(k, &[(1, 3), (2, 2), (3, 3), (4, 1)], fe(1, 6)));
    map.insert(
        GeneratorId::raising(2),
        cr(k, 4)
            .multiply(&an(k, 3))
            .scale_field(&r2(1, 4))
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 1))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r6(1, 96)),
            )
            .sub(
                &cr(k, 2)
                    .multiply(&an(k, 1))
                    .multiply(&an(k, 4))
                    .scale_field(&r3(1, 12)),
            )
            .sub(
                &cr(k, 4)
                    .multiply(&an(k, 1))
                    .multiply(&an(k, 5))
                    .scale_field(&fe(1, 8)),
            )
            .add(&bracket.multiply(&an(k, 2)).scale_field(&fe(1, 4)))
            .sub(
                &cr(k, 5)
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r3(1, 24)),
            ),
    );

    let b1 = lam1(k).sub(&num_sum(k, &[(2, 2), (4, 1), (5, 3)], fe(1, 6)));
    let b2 = lam1(k).sub(&num_sum(
        k,
        &[(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)],
        fe(1, 4),
    ));
    let b3 = lam1(k).sub(&num_sum(k, &[(4, 1), (5, 1)], fe(1, 2)));
    map.insert(
        GeneratorId::raising(3),
        cr(k, 1)
            .multiply(&an(k, 2))
            .multiply(&an(k, 2))
            .multiply(&an(k, 2))
            .scale_field(&r6(-1, 288))
            .add(&b1.multiply(&an(k, 2)).multiply(&an(k, 4)).scale_field(&r2(1, 16)))
            .sub(
                &cr(k, 4)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 5))
                    .scale_field(&r6(1, 96)),
            )
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&fe(1, 192)),
            )
            .add(&b2.multiply(&an(k, 3)).scale_field(&fe(1, 2)))
            .add(
                &cr(k, 5)
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r6(1, 288)),
            )
            .add(
                &cr(k, 2)
                    .multiply(&an(k, 1))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r6(1, 96)),
            )
            .sub(
                &cr(k, 3)
                    .multiply(&an(k, 1))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r3(1, 288)),
            )
            .sub(&b3.multiply(&an(k, 1)).multiply(&an(k, 5)).scale_field(&r2(1, 16))),
    );

    let bracket = lam1(k).sub(&num_sum(k, &[(2, 4), (4, 1), (5, 3)], fe(1, 6)));
    map.insert(
        GeneratorId::raising(4),
        cr(k, 1)
            .multiply(&an(k, 2))
            .multiply(&an(k, 2))
            .scale_field(&r3(-1, 24))
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r2(1, 48)),
            )
            .sub(
                &cr(k, 4)
                    .multiply(&an(k, 2))
                    .multiply(&an(k, 5))
                    .scale_field(&r3(1, 12)),
            )
            .sub(&cr(k, 2).multiply(&an(k, 3)).scale_field(&r2(1, 4)))
            .add(&bracket.multiply(&an(k, 4)).scale_field(&fe(1, 4))),
    );

    let bracket = lam1(k).sub(&num_sum(k, &[(4, 1), (5, 1)], fe(1, 2)));
    map.insert(
        GeneratorId::raising(5),
        cr(k, 1)
            .multiply(&an(k, 3))
            .scale_field(&r2(1, 4))
            .sub(
                &cr(k, 2)
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r3(1, 24)),
            )
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r6(1, 144)),
            )
            .add(&bracket.multiply(&an(k, 5)).scale_field(&fe(1, 4))),
    );

    map.insert(
        GeneratorId::raising(6),
        cr(k, 1)
            .multiply(&an(k, 2))
            .scale_field(&r2(-1, 4))
            .sub(&cr(k, 2).multiply(&an(k, 4)).scale_field(&r6(1, 6)))
            .sub(&cr(k, 4).multiply(&an(k, 5)).scale_field(&r2(1, 4)))
            .add(
                &cr(k, 3)
                    .multiply(&an(k, 4))
                    .multiply(&an(k, 4))
                    .scale_field(&r3(1, 24)),
            ),
    );

    map.insert(
        GeneratorId::cartan(1),
        lam1(k).sub(&num_sum(
            k,
            &[(1, 1), (2, 1), (3, 2), (4, 1), (5, 1)],
            fe(1, 4),
        )),
    );
    map.insert(
        GeneratorId::cartan(2),
        num_sum(k, &[(1, 3), (2, 1), (4, -1), (5, -3)], r3(1, 12)),
    );
    map
}

/// The three-fermion realization, transcribed into 8×8 matrices.
pub fn three_fermion_transcribed() -> Realization<FermionMatrix> {
    let fe = FieldElement::of;
    let r2 = FieldElement::of_sqrt2;
    let r3 = FieldElement::of_sqrt3;
    let r6 = FieldElement::of_sqrt6;
    let one = FermionMatrix::identity;
    let f = FermionMatrix::annihilation;
    let fd = FermionMatrix::creation;
    let n = FermionMatrix::number;
    let mut map = Realization::new();

    // F(E-1) = (1/(2√2)) (1 − n̂4/2) f2† f6
    map.insert(
        GeneratorId::lowering(1),
        one()
            .sub(&n(4).scale(&fe(1, 2)))
            .mul(&fd(2))
            .mul(&f(6))
            .scale(&r2(1, 4)),
    );
    // F(E-2) = (1 + n̂4 n̂6 − n̂6) f2† + (1/(2√6)) (1 − n̂2) f4† f6
    map.insert(
        GeneratorId::lowering(2),
        one()
            .add(&n(4).mul(&n(6)))
            .sub(&n(6))
            .mul(&fd(2))
            .add(&one().sub(&n(2)).mul(&fd(4)).mul(&f(6)).scale(&r6(1, 12))),
    );
    // F(E-3) = 3√2 (1 + n̂6) f2† f4†
    map.insert(
        GeneratorId::lowering(3),
        one().add(&n(6)).mul(&fd(2)).mul(&fd(4)).scale(&r2(3, 1)),
    );
    // F(E-4) = (1 − n̂2/2 − n̂2 n̂6/2) f4† + 4√6 n̂4 f2† f6†
    map.insert(
        GeneratorId::lowering(4),
        one()
            .sub(&n(2).scale(&fe(1, 2)))
            .sub(&n(2).mul(&n(6)).scale(&fe(1, 2)))
            .mul(&fd(4))
            .add(&n(4).mul(&fd(2)).mul(&fd(6)).scale(&r6(4, 1))),
    );
    // F(E-5) = 6√2 f4† f6†
    map.insert(GeneratorId::lowering(5), fd(4).mul(&fd(6)).scale(&r2(6, 1)));
    // F(E-6) = (1 − n̂2 + n̂4 + n̂2 n̂4) f6† + (1/(2√6)) (1 − n̂6) f2 f4†
    map.insert(
        GeneratorId::lowering(6),
        one()
            .sub(&n(2))
            .add(&n(4))
            .add(&n(2).mul(&n(4)))
            .mul(&fd(6))
            .add(&one().sub(&n(6)).mul(&f(2)).mul(&fd(4)).scale(&r6(1, 12))),
    );
    // F(E1) = −(1/(2√2)) (1 + n̂4) f2 f6†
    map.insert(
        GeneratorId::raising(1),
        one().add(&n(4)).mul(&f(2)).mul(&fd(6)).scale(&r2(-1, 4)),
    );
    // F(E2) = (1/24)(1 + n̂4 − n̂6) f2 − (1/√6)(1 − n̂2) f4 f6†
    map.insert(
        GeneratorId::raising(2),
        one()
            .add(&n(4))
            .sub(&n(6))
            .mul(&f(2))
            .scale(&fe(1, 24))
            .sub(&one().sub(&n(2)).mul(&f(4)).mul(&fd(6)).scale(&r6(1, 6))),
    );
    // F(E3) = −(1/(24√2)) (1 − n̂6/2) f2 f4
    map.insert(
        GeneratorId::raising(3),
        one()
            .sub(&n(6).scale(&fe(1, 2)))
            .mul(&f(2))
            .mul(&f(4))
            .scale(&r2(-1, 48)),
    );
    // F(E4) = (1/12)(1 − n̂6/2 − n̂2 n̂6/2) f4 − (1/(48√6)) n̂4 f2 f6
    map.insert(
        GeneratorId::raising(4),
        one()
            .sub(&n(6).scale(&fe(1, 2)))
            .sub(&n(2).mul(&n(6)).scale(&fe(1, 2)))
            .mul(&f(4))
            .scale(&fe(1, 12))
            .sub(&n(4).mul(&f(2)).mul(&f(6)).scale(&r6(1, 288))),
    );
    // F(E5) = −(1/(48√2)) f4 f6
    map.insert(GeneratorId::raising(5), f(4).mul(&f(6)).scale(&r2(-1, 96)));
    // F(E6) = (1/24)(1 − n̂2 + n̂2 n̂4/2) f6 − (1/√6)(1 − n̂6) f2† f4
    map.insert(
        GeneratorId::raising(6),
        one()
            .sub(&n(2))
            .add(&n(2).mul(&n(4)).scale(&fe(1, 2)))
            .mul(&f(6))
            .scale(&fe(1, 24))
            .sub(&one().sub(&n(6)).mul(&fd(2)).mul(&f(4)).scale(&r6(1, 6))),
    );
    // F(H1) = (1/4)(1 − n̂2 − n̂4)
    map.insert(
        GeneratorId::cartan(1),
        one().sub(&n(2)).sub(&n(4)).scale(&fe(1, 4)),
    );
    // F(H2) = (1/(4√3))(1 + n̂2 − n̂4 − 2 n̂6)
    map.insert(
        GeneratorId::cartan(2),
        one()
            .add(&n(2))
            .sub(&n(4))
            .sub(&n(6).scale(&fe(2, 1)))
            .scale(&r3(1, 12)),
    );
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscillator::fermion::ket_index;
    use crate::oscillator::fock_apply;

    #[test]
    fn six_boson_fixture_spot_checks() {
        let b = six_boson_transcribed();
        assert_eq!(b[&GeneratorId::lowering(1)], cr(6, 1));
        // B(H1) = Λ1 − (1/4)(n1+n2+2n3+n4+n5)
        let h1 = &b[&GeneratorId::cartan(1)];
        let expected = lam1(6).sub(&num_sum(
            6,
            &[(1, 1), (2, 1), (3, 2), (4, 1), (5, 1)],
            FieldElement::of(1, 4),
        ));
        assert_eq!(*h1, expected);
        // every term of B(E6) annihilates the vacuum
        let image = fock_apply(&b[&GeneratorId::raising(6)], &[0; 6]);
        assert!(image.is_empty());
    }

    #[test]
    fn five_boson_fixture_spot_checks() {
        let b = five_boson_transcribed();
        assert_eq!(b[&GeneratorId::lowering(1)], cr(5, 1));
        // B(E-6) has no creation-only term
        let e_m6 = &b[&GeneratorId::lowering(6)];
        for (m, _) in e_m6.iter() {
            assert!(m.annihilate.iter().any(|&e| e > 0));
        }
        // B(H2) = (1/(4√3))(3n1+n2−n4−3n5)
        let h2 = &b[&GeneratorId::cartan(2)];
        let expected = num_sum(
            5,
            &[(1, 3), (2, 1), (4, -1), (5, -3)],
            FieldElement::of_sqrt3(1, 12),
        );
        assert_eq!(*h2, expected);
    }

    #[test]
    fn fermion_fixture_spot_checks() {
        let f = three_fermion_transcribed();
        // F(E-5) = 6√2 f4† f6†: one matrix entry per compatible column
        let e_m5 = &f[&GeneratorId::lowering(5)];
        assert_eq!(
            *e_m5.0.at(ket_index(0, 1, 1), ket_index(0, 0, 0)),
            FieldElement::of_sqrt2(6, 1)
        );
        // F(H1) is diagonal
        let h1 = &f[&GeneratorId::cartan(1)];
        for r in 0..8 {
            for c in 0..8 {
                if r != c {
                    assert!(h1.0.at(r, c).is_zero());
                }
            }
        }
        // [F(H1), F(E-2)] = −(1/4) F(E-2): the root of a lowering generator
        // is negated, and α2^(1) = 1/4
        let e_m2 = &f[&GeneratorId::lowering(2)];
        let lhs = h1.commutator(e_m2);
        assert_eq!(lhs, e_m2.scale(&FieldElement::of(-1, 4)));
    }
}
