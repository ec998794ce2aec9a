//! The G2 root system, Cartan-Weyl basis, structure constants, and
//! single-generator brackets.
//!
//! Root coordinates are kept in the two-dimensional frame in which the six
//! positive roots read
//!
//! ```text
//! a1 = (1/4, -sqrt3/4)   a2 = (1/4, -1/(4 sqrt3))   a3 = (1/2, 0)
//! a4 = (1/4, 1/(4 sqrt3))   a5 = (1/4, sqrt3/4)     a6 = (0, 1/(2 sqrt3))
//! ```
//!
//! with a1, a6 the simple roots. Only five structure constants are primitive
//! (N61 = N64 = N42 = N15 = 1/(2 sqrt2), N62 = 1/sqrt6); the rest of the
//! signed table is forced by antisymmetry, N(-a,-b) = -N(a,b), and the cyclic
//! identity N(a,b) = N(b,c) = N(c,a) for a + b + c = 0. The Jacobi suite in
//! the pbw module validates the generated table.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::CoreError;
use crate::field::FieldElement;

/// One of the 14 Cartan-Weyl generators, in the standard order
/// `E-1 < E-2 < ... < E-6 < E1 < ... < E6 < H1 < H2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId(u8);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorKind {
    /// `E_{-i}`, lowering, root index 1..=6.
    Lowering(usize),
    /// `E_{+i}`, raising, root index 1..=6.
    Raising(usize),
    /// `H_j`, Cartan, index 1..=2.
    Cartan(usize),
}

impl GeneratorId {
    pub const COUNT: usize = 14;

    pub fn lowering(i: usize) -> Self {
        assert!((1..=6).contains(&i));
        GeneratorId(i as u8 - 1)
    }

    pub fn raising(i: usize) -> Self {
        assert!((1..=6).contains(&i));
        GeneratorId(5 + i as u8)
    }

    pub fn cartan(j: usize) -> Self {
        assert!((1..=2).contains(&j));
        GeneratorId(11 + j as u8)
    }

    pub fn all() -> impl Iterator<Item = GeneratorId> {
        (0..Self::COUNT as u8).map(GeneratorId)
    }

    /// Position in the standard PBW order, 0..14.
    pub fn standard_index(self) -> usize {
        self.0 as usize
    }

    pub fn from_standard_index(i: usize) -> Self {
        assert!(i < Self::COUNT);
        GeneratorId(i as u8)
    }

    pub fn kind(self) -> GeneratorKind {
        match self.0 {
            0..=5 => GeneratorKind::Lowering(self.0 as usize + 1),
            6..=11 => GeneratorKind::Raising(self.0 as usize - 5),
            _ => GeneratorKind::Cartan(self.0 as usize - 11),
        }
    }

    /// Signed root index: `-i` for `E_{-i}`, `+i` for `E_i`, none for Cartan.
    pub fn signed_root(self) -> Option<i8> {
        match self.kind() {
            GeneratorKind::Lowering(i) => Some(-(i as i8)),
            GeneratorKind::Raising(i) => Some(i as i8),
            GeneratorKind::Cartan(_) => None,
        }
    }

    pub fn from_signed_root(s: i8) -> Self {
        assert!(s != 0 && s.abs() <= 6);
        if s < 0 {
            Self::lowering((-s) as usize)
        } else {
            Self::raising(s as usize)
        }
    }

    pub fn name(self) -> String {
        match self.kind() {
            GeneratorKind::Lowering(i) => format!("E-{i}"),
            GeneratorKind::Raising(i) => format!("E{i}"),
            GeneratorKind::Cartan(j) => format!("H{j}"),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CoreError> {
        let bad = || CoreError::Parse(format!("unknown generator {text:?}"));
        match text {
            "H1" => return Ok(Self::cartan(1)),
            "H2" => return Ok(Self::cartan(2)),
            _ => {}
        }
        let rest = text.strip_prefix('E').ok_or_else(bad)?;
        let (lowering, digits) = match rest.strip_prefix('-') {
            Some(d) => (true, d),
            None => (false, rest),
        };
        let i: usize = digits.parse().map_err(|_| bad())?;
        if !(1..=6).contains(&i) {
            return Err(bad());
        }
        Ok(if lowering {
            Self::lowering(i)
        } else {
            Self::raising(i)
        })
    }
}

impl fmt::Debug for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A vector in the 2-dimensional Cartan coordinate frame. Serves both for
/// roots and for weights.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PlaneVector {
    pub c1: FieldElement,
    pub c2: FieldElement,
}

pub type RootVector = PlaneVector;
pub type WeightVector = PlaneVector;

impl PlaneVector {
    pub fn new(c1: FieldElement, c2: FieldElement) -> Self {
        PlaneVector { c1, c2 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    /// Component `j` (1 or 2), i.e. the eigenvalue on `H_j` for a root.
    pub fn component(&self, j: usize) -> &FieldElement {
        match j {
            1 => &self.c1,
            2 => &self.c2,
            _ => panic!("component index must be 1 or 2"),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        PlaneVector::new(&self.c1 + &rhs.c1, &self.c2 + &rhs.c2)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        PlaneVector::new(&self.c1 - &rhs.c1, &self.c2 - &rhs.c2)
    }

    pub fn neg(&self) -> Self {
        PlaneVector::new(-&self.c1, -&self.c2)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        PlaneVector::new(&self.c1 * c, &self.c2 * c)
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&FieldElement::from_int(n))
    }
}

impl fmt::Display for PlaneVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c1, self.c2)
    }
}

/// The six positive roots of Eq-(11) coordinates, index 1..=6.
pub fn positive_root(i: usize) -> RootVector {
    assert!((1..=6).contains(&i));
    let q = FieldElement::of;
    let r3 = FieldElement::of_sqrt3;
    match i {
        1 => PlaneVector::new(q(1, 4), r3(-1, 4)),
        2 => PlaneVector::new(q(1, 4), r3(-1, 12)),
        3 => PlaneVector::new(q(1, 2), FieldElement::zero()),
        4 => PlaneVector::new(q(1, 4), r3(1, 12)),
        5 => PlaneVector::new(q(1, 4), r3(1, 4)),
        _ => PlaneVector::new(FieldElement::zero(), r3(1, 6)),
    }
}

/// The ordered list of the six positive roots.
pub fn positive_roots() -> Vec<RootVector> {
    (1..=6).map(positive_root).collect()
}

/// Root vector for a signed index (negative index means negative root).
pub fn signed_root_vector(s: i8) -> RootVector {
    assert!(s != 0 && s.abs() <= 6);
    let v = positive_root(s.unsigned_abs() as usize);
    if s < 0 {
        v.neg()
    } else {
        v
    }
}

/// Integer coordinates of a signed root in the (a1, a6) simple-root lattice.
fn lattice(s: i8) -> (i32, i32) {
    let base = match s.abs() {
        1 => (1, 0),
        2 => (1, 1),
        3 => (2, 3),
        4 => (1, 2),
        5 => (1, 3),
        6 => (0, 1),
        _ => unreachable!(),
    };
    if s < 0 {
        (-base.0, -base.1)
    } else {
        base
    }
}

fn lattice_index() -> &'static BTreeMap<(i32, i32), i8> {
    static MAP: OnceLock<BTreeMap<(i32, i32), i8>> = OnceLock::new();
    MAP.get_or_init(|| {
        let mut m = BTreeMap::new();
        for s in [-6i8, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6] {
            m.insert(lattice(s), s);
        }
        m
    })
}

/// Signed index of `a + b` when the sum is again a root.
pub fn root_sum(a: i8, b: i8) -> Option<i8> {
    let (xa, ya) = lattice(a);
    let (xb, yb) = lattice(b);
    lattice_index().get(&(xa + xb, ya + yb)).copied()
}

/// Euclidean pairing of two plane vectors.
pub fn inner_product(u: &PlaneVector, v: &PlaneVector) -> FieldElement {
    &(&u.c1 * &v.c1) + &(&u.c2 * &v.c2)
}

/// Pairing of two signed roots.
pub fn root_inner_product(a: i8, b: i8) -> FieldElement {
    inner_product(&signed_root_vector(a), &signed_root_vector(b))
}

/// Dynkin pairing `<v, a> = 2 (v, a) / (a, a)`.
pub fn dynkin_pairing(v: &PlaneVector, root: &RootVector) -> FieldElement {
    let num = inner_product(v, root).scale_int(2);
    let den = inner_product(root, root);
    &num * &den.inv().expect("root has nonzero length")
}

fn structure_constants() -> &'static BTreeMap<(i8, i8), FieldElement> {
    static TABLE: OnceLock<BTreeMap<(i8, i8), FieldElement>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table: BTreeMap<(i8, i8), FieldElement> = BTreeMap::new();
        let half_inv_sqrt2 = FieldElement::of_sqrt2(1, 4);
        let inv_sqrt6 = FieldElement::of_sqrt6(1, 6);
        let insert = |t: &mut BTreeMap<(i8, i8), FieldElement>, a: i8, b: i8, v: FieldElement| {
            if let Some(old) = t.get(&(a, b)) {
                assert_eq!(*old, v, "conflicting structure constant N({a},{b})");
            } else {
                t.insert((a, b), v);
            }
        };
        for (a, b) in [(6, 1), (6, 4), (4, 2), (1, 5)] {
            insert(&mut table, a, b, half_inv_sqrt2.clone());
        }
        insert(&mut table, 6, 2, inv_sqrt6);

        // Closure under antisymmetry, negation, and the cyclic identity for
        // root triples summing to zero.
        loop {
            let snapshot: Vec<((i8, i8), FieldElement)> =
                table.iter().map(|(k, v)| (*k, v.clone())).collect();
            let before = table.len();
            for ((a, b), v) in snapshot {
                insert(&mut table, b, a, -&v);
                insert(&mut table, -a, -b, -&v);
                if let Some(s) = root_sum(a, b) {
                    let c = -s;
                    insert(&mut table, b, c, v.clone());
                    insert(&mut table, c, a, v.clone());
                }
            }
            if table.len() == before {
                break;
            }
        }

        // Every pair whose sum is a root must have been reached.
        for a in [-6i8, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6] {
            for b in [-6i8, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6] {
                if a != b && a != -b && root_sum(a, b).is_some() {
                    assert!(table.contains_key(&(a, b)), "missing N({a},{b})");
                }
            }
        }
        table
    })
}

/// `N_{a,b}` for signed root indices; `None` when `a + b` is not a root.
pub fn structure_constant(a: i8, b: i8) -> Option<FieldElement> {
    structure_constants().get(&(a, b)).cloned()
}

/// Single-generator bracket `[x, y]` as a linear combination of generators.
pub fn bracket(x: GeneratorId, y: GeneratorId) -> Vec<(GeneratorId, FieldElement)> {
    use GeneratorKind::*;
    match (x.kind(), y.kind()) {
        (Cartan(_), Cartan(_)) => Vec::new(),
        (Cartan(j), Lowering(_) | Raising(_)) => {
            let alpha = signed_root_vector(y.signed_root().unwrap());
            let c = alpha.component(j).clone();
            if c.is_zero() {
                Vec::new()
            } else {
                vec![(y, c)]
            }
        }
        (Lowering(_) | Raising(_), Cartan(j)) => {
            let alpha = signed_root_vector(x.signed_root().unwrap());
            let c = -alpha.component(j);
            if c.is_zero() {
                Vec::new()
            } else {
                vec![(x, c)]
            }
        }
        _ => {
            let a = x.signed_root().unwrap();
            let b = y.signed_root().unwrap();
            if a == -b {
                let alpha = signed_root_vector(a);
                let mut out = Vec::new();
                for j in 1..=2 {
                    let c = alpha.component(j).clone();
                    if !c.is_zero() {
                        out.push((GeneratorId::cartan(j), c));
                    }
                }
                out
            } else if let Some(n) = structure_constant(a, b) {
                vec![(GeneratorId::from_signed_root(root_sum(a, b).unwrap()), n)]
            } else {
                Vec::new()
            }
        }
    }
}

/// Weyl reflection of `v` through the hyperplane orthogonal to `gamma`.
pub fn weyl_reflect(gamma: &RootVector, v: &PlaneVector) -> Result<PlaneVector, CoreError> {
    if gamma.is_zero() {
        return Err(CoreError::ZeroRoot);
    }
    let coeff = dynkin_pairing(v, gamma);
    Ok(v.sub(&gamma.scale(&coeff)))
}

/// Half the sum of the positive roots.
pub fn half_sum_of_positive_roots() -> WeightVector {
    let mut total = PlaneVector::zero();
    for r in positive_roots() {
        total = total.add(&r);
    }
    total.scale(&FieldElement::of(1, 2))
}

/// The dominant weight with Dynkin labels `<L, a1> = p`, `<L, a6> = q`,
/// found by solving the 2x2 exact linear system.
pub fn dynkin_to_weight(p: u32, q: u32) -> WeightVector {
    // Rows of the system: 2 a_i / (a_i, a_i) for the two simple roots.
    let row = |i: usize| {
        let a = positive_root(i);
        let scale = inner_product(&a, &a).inv().unwrap().scale_int(2);
        a.scale(&scale)
    };
    let r1 = row(1);
    let r6 = row(6);
    let det = &(&r1.c1 * &r6.c2) - &(&r1.c2 * &r6.c1);
    let det_inv = det.inv().expect("simple roots are independent");
    let rhs1 = FieldElement::from_int(p as i64);
    let rhs6 = FieldElement::from_int(q as i64);
    let l1 = &(&(&rhs1 * &r6.c2) - &(&rhs6 * &r1.c2)) * &det_inv;
    let l2 = &(&(&rhs6 * &r1.c1) - &(&rhs1 * &r6.c1)) * &det_inv;
    PlaneVector::new(l1, l2)
}
