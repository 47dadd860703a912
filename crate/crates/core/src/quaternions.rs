//! Exact quaternions over Q(√2,√3,√5), rotations of H as unit-quaternion
//! pairs, the induced map on self-dual 2-vectors and the finite subgroups of
//! Sp(1).

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldScalar;
use crate::lattices::{ImVec, Mat3};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Quat {
    pub re: FieldScalar,
    pub i: FieldScalar,
    pub j: FieldScalar,
    pub k: FieldScalar,
}

impl Quat {
    pub fn new(re: FieldScalar, i: FieldScalar, j: FieldScalar, k: FieldScalar) -> Self {
        Self { re, i, j, k }
    }

    pub fn from_ints(re: i64, i: i64, j: i64, k: i64) -> Self {
        Self::new(re.into(), i.into(), j.into(), k.into())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn from_im(v: &ImVec) -> Self {
        Self::new(FieldScalar::zero(), v.i.clone(), v.j.clone(), v.k.clone())
    }

    pub fn im(&self) -> ImVec {
        ImVec::new(self.i.clone(), self.j.clone(), self.k.clone())
    }

    pub fn coords(&self) -> [&FieldScalar; 4] {
        [&self.re, &self.i, &self.j, &self.k]
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.i, -&self.j, -&self.k)
    }

    pub fn norm_sq(&self) -> FieldScalar {
        self.coords().iter().fold(FieldScalar::zero(), |acc, x| &acc + &x.square())
    }

    pub fn is_unit(&self) -> bool {
        self.norm_sq().is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, s: &FieldScalar) -> Self {
        Self::new(&self.re * s, &self.i * s, &self.j * s, &self.k * s)
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(self.conj().scale(&self.norm_sq().inverse()?))
    }

    pub fn to_f64(&self) -> [f64; 4] {
        self.coords().map(FieldScalar::to_f64)
    }

    /// First nonzero coordinate is positive.
    fn is_sign_normalized(&self) -> bool {
        self.coords()
            .iter()
            .find(|x| !x.is_zero())
            .is_none_or(|x| x.is_positive())
    }
}

impl Mul for &Quat {
    type Output = Quat;
    fn mul(self, o: &Quat) -> Quat {
        let (a1, b1, c1, d1) = (&self.re, &self.i, &self.j, &self.k);
        let (a2, b2, c2, d2) = (&o.re, &o.i, &o.j, &o.k);
        Quat::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, o: Quat) -> Quat {
        &self * &o
    }
}

impl Add for &Quat {
    type Output = Quat;
    fn add(self, o: &Quat) -> Quat {
        Quat::new(&self.re + &o.re, &self.i + &o.i, &self.j + &o.j, &self.k + &o.k)
    }
}

impl Sub for &Quat {
    type Output = Quat;
    fn sub(self, o: &Quat) -> Quat {
        Quat::new(&self.re - &o.re, &self.i - &o.i, &self.j - &o.j, &self.k - &o.k)
    }
}

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-&self.re, -&self.i, -&self.j, -&self.k)
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        -&self
    }
}

impl fmt::Debug for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quat[{}, {}, {}, {}]", self.re, self.i, self.j, self.k)
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})i + ({})j + ({})k", self.re, self.i, self.j, self.k)
    }
}

/// The isometry `q ↦ a·q·conj(b)` of H, stored with the first nonzero
/// coordinate of `a` positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawRotation")]
pub struct RotationH {
    a: Quat,
    b: Quat,
}

#[derive(Deserialize)]
struct RawRotation {
    a: Quat,
    b: Quat,
}

impl TryFrom<RawRotation> for RotationH {
    type Error = Error;
    fn try_from(r: RawRotation) -> Result<Self> {
        RotationH::new(r.a, r.b)
    }
}

impl RotationH {
    pub fn new(a: Quat, b: Quat) -> Result<Self> {
        if !a.is_unit() || !b.is_unit() {
            return Err(Error::InvalidRotation(format!("|a|² = {}, |b|² = {}", a.norm_sq(), b.norm_sq())));
        }
        Ok(Self::normalized(a, b))
    }

    fn normalized(a: Quat, b: Quat) -> Self {
        if a.is_sign_normalized() {
            Self { a, b }
        } else {
            Self { a: -a, b: -b }
        }
    }

    pub fn identity() -> Self {
        Self::normalized(Quat::one(), Quat::one())
    }

    /// `q ↦ u q u` for a unit imaginary `u`, e.g. `q ↦ iqi`.
    pub fn sandwich(u: Quat) -> Result<Self> {
        let b = -u.clone();
        Self::new(u, b)
    }

    /// Left multiplication `q ↦ a q`.
    pub fn left(a: Quat) -> Result<Self> {
        Self::new(a, Quat::one())
    }

    /// Right multiplication `q ↦ q γ`.
    pub fn right(gamma: &Quat) -> Result<Self> {
        Self::new(Quat::one(), gamma.conj())
    }

    pub fn a(&self) -> &Quat {
        &self.a
    }

    pub fn b(&self) -> &Quat {
        &self.b
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn apply(&self, q: &Quat) -> Quat {
        &(&self.a * q) * &self.b.conj()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::normalized(&self.a * &other.a, &self.b * &other.b)
    }

    pub fn inverse(&self) -> Self {
        Self::normalized(self.a.conj(), self.b.conj())
    }

    /// `(Λ²₊R)(v) = a v ā` as a matrix on Im H.
    pub fn lambda2_plus(&self) -> Mat3 {
        let abar = self.a.conj();
        let cols = [Quat::i(), Quat::j(), Quat::k()].map(|e| (&(&self.a * &e) * &abar).im());
        Mat3::from_columns([&cols[0], &cols[1], &cols[2]])
    }

    /// Conjugation action on the group acting by right multiplication:
    /// `R ∘ (q ↦ qγ) ∘ R⁻¹ = (q ↦ q·bγb̄)`.
    pub fn conjugate_right(&self, gamma: &Quat) -> Quat {
        &(&self.b * gamma) * &self.b.conj()
    }

    /// Sign ε with `b i b̄ = ε i`, when it exists. The lifted isometry covers
    /// `ε·Λ²₊R` on the Gibbons–Hawking base.
    pub fn fiber_sign(&self) -> Option<i8> {
        let image = self.conjugate_right(&Quat::i());
        if image == Quat::i() {
            Some(1)
        } else if image == -Quat::i() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> ([f64; 4], [f64; 4]) {
        (self.a.to_f64(), self.b.to_f64())
    }
}

pub fn rotation_apply(r: &RotationH, q: &Quat) -> Quat {
    r.apply(q)
}

pub fn lambda2_plus(r: &RotationH) -> Mat3 {
    r.lambda2_plus()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum GroupLabel {
    Cyclic(u32),
    Dicyclic(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl GroupLabel {
    pub fn order(&self) -> usize {
        match *self {
            GroupLabel::Cyclic(n) => n as usize,
            GroupLabel::Dicyclic(m) => 4 * m as usize,
            GroupLabel::BinaryTetrahedral => 24,
            GroupLabel::BinaryOctahedral => 48,
            GroupLabel::BinaryIcosahedral => 120,
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Cyclic(n) => write!(f, "C{n}"),
            GroupLabel::Dicyclic(m) => write!(f, "Dic{m}"),
            GroupLabel::BinaryTetrahedral => write!(f, "2T"),
            GroupLabel::BinaryOctahedral => write!(f, "2O"),
            GroupLabel::BinaryIcosahedral => write!(f, "2I"),
        }
    }
}

impl FromStr for GroupLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(s.to_string());
        let t = s.trim().replace('_', "");
        match t.as_str() {
            "2T" => return Ok(GroupLabel::BinaryTetrahedral),
            "2O" => return Ok(GroupLabel::BinaryOctahedral),
            "2I" => return Ok(GroupLabel::BinaryIcosahedral),
            _ => {}
        }
        if let Some(n) = t.strip_prefix("Dic") {
            let m: u32 = n.parse().map_err(|_| bad())?;
            return if m >= 1 { Ok(GroupLabel::Dicyclic(m)) } else { Err(bad()) };
        }
        if let Some(n) = t.strip_prefix('C') {
            let n: u32 = n.parse().map_err(|_| bad())?;
            return if n >= 1 { Ok(GroupLabel::Cyclic(n)) } else { Err(bad()) };
        }
        Err(bad())
    }
}

/// A finite subgroup of Sp(1), acting on H by right multiplication.
#[derive(Clone, Debug)]
pub struct FiniteSubgroup {
    pub label: GroupLabel,
    pub elements: Vec<Quat>,
    pub generators: Vec<Quat>,
    index: HashMap<Quat, usize>,
}

/// `e^{2πi/n}` when it lies in the coefficient field.
pub fn root_of_unity(n: u32) -> Result<Quat> {
    let half = |x: FieldScalar| x.scale(&crate::field::Rational::new(1.into(), 2.into()));
    let quarter = |x: FieldScalar| x.scale(&crate::field::Rational::new(1.into(), 4.into()));
    let s = |m: i64| FieldScalar::sqrt_of(m).expect("basis radical");
    let z = FieldScalar::zero;
    let (c, si) = match n {
        1 => (FieldScalar::one(), z()),
        2 => (FieldScalar::from_int(-1), z()),
        3 => (FieldScalar::from_ratio(-1, 2), half(s(3))),
        4 => (z(), FieldScalar::one()),
        6 => (FieldScalar::from_ratio(1, 2), half(s(3))),
        8 => (half(s(2)), half(s(2))),
        12 => (half(s(3)), FieldScalar::from_ratio(1, 2)),
        24 => (quarter(&s(6) + &s(2)), quarter(&s(6) - &s(2))),
        _ => return Err(Error::UnsupportedExact(n)),
    };
    Ok(Quat::new(c, si, z(), z()))
}

fn closure(generators: &[Quat]) -> Vec<Quat> {
    let mut seen: HashSet<Quat> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(Quat::one());
    order.push(Quat::one());
    queue.push_back(Quat::one());
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = &x * g;
            if seen.insert(y.clone()) {
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    order
}

impl FiniteSubgroup {
    fn from_generators(label: GroupLabel, generators: Vec<Quat>) -> Self {
        let elements = closure(&generators);
        let index = elements.iter().cloned().enumerate().map(|(n, q)| (q, n)).collect();
        Self { label, elements, generators, index }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, q: &Quat) -> bool {
        self.index.contains_key(q)
    }

    pub fn index_of(&self, q: &Quat) -> Option<usize> {
        self.index.get(q).copied()
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self.label, GroupLabel::Cyclic(_))
    }

    pub fn is_closed(&self) -> bool {
        self.contains(&Quat::one())
            && self.elements.iter().all(|x| {
                self.contains(&x.conj()) && self.elements.iter().all(|y| self.contains(&(x * y)))
            })
    }

    /// Image of each element index under `γ ↦ bγb̄`, or `None` when `R` does
    /// not normalize the group.
    pub fn conjugation_permutation(&self, r: &RotationH) -> Option<Vec<usize>> {
        self.elements
            .iter()
            .map(|g| self.index_of(&r.conjugate_right(g)))
            .collect()
    }

    pub fn normalizes(&self, r: &RotationH) -> bool {
        self.conjugation_permutation(r).is_some()
    }

    pub fn centralizes(&self, r: &RotationH) -> bool {
        self.generators.iter().all(|g| r.conjugate_right(g) == *g)
    }

    /// Conjugacy classes as sorted lists of element indices, ordered by their
    /// smallest index.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for n in 0..self.order() {
            if class_of[n] != usize::MAX {
                continue;
            }
            let x = &self.elements[n];
            let mut class: Vec<usize> = self
                .elements
                .iter()
                .map(|h| {
                    let c = &(h * x) * &h.conj();
                    self.index_of(&c).expect("closed group")
                })
                .collect();
            class.sort_unstable();
            class.dedup();
            for &m in &class {
                class_of[m] = classes.len();
            }
            classes.push(class);
        }
        classes
    }
}

pub fn generate_subgroup(label: GroupLabel) -> Result<FiniteSubgroup> {
    let half = FieldScalar::from_ratio(1, 2);
    let generators = match label {
        GroupLabel::Cyclic(n) => vec![root_of_unity(n)?],
        GroupLabel::Dicyclic(m) => {
            let x = root_of_unity(2 * m).map_err(|_| Error::UnsupportedExact(2 * m))?;
            vec![x, Quat::j()]
        }
        GroupLabel::BinaryTetrahedral => vec![Quat::from_ints(1, 1, 1, 1).scale(&half), Quat::i()],
        GroupLabel::BinaryOctahedral => {
            let r = &FieldScalar::sqrt_of(2)? * &half;
            vec![Quat::new(r.clone(), r, 0.into(), 0.into()), Quat::from_ints(1, 1, 1, 1).scale(&half)]
        }
        GroupLabel::BinaryIcosahedral => {
            let s5 = FieldScalar::sqrt_of(5)?;
            let phi = &(&FieldScalar::one() + &s5) * &half;
            let phi_inv = &(&s5 - &FieldScalar::one()) * &half;
            vec![
                Quat::from_ints(1, 1, 1, 1).scale(&half),
                Quat::new(phi, phi_inv, 1.into(), 0.into()).scale(&half),
            ]
        }
    };
    Ok(FiniteSubgroup::from_generators(label, generators))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum AlphaSign {
    Plus,
    Minus,
    NotInNormalizer,
}

impl AlphaSign {
    pub fn as_i8(&self) -> Option<i8> {
        match self {
            AlphaSign::Plus => Some(1),
            AlphaSign::Minus => Some(-1),
            AlphaSign::NotInNormalizer => None,
        }
    }
}

/// `+1` if `R` centralizes the cyclic group, `−1` if it only normalizes it.
pub fn alpha_sign(r: &RotationH, gamma: &FiniteSubgroup) -> Result<AlphaSign> {
    if !gamma.is_cyclic() {
        return Err(Error::NotApplicable(format!("alpha is defined for cyclic groups, got {}", gamma.label)));
    }
    Ok(if !gamma.normalizes(r) {
        AlphaSign::NotInNormalizer
    } else if gamma.centralizes(r) {
        AlphaSign::Plus
    } else {
        AlphaSign::Minus
    })
}

/// Floating-point cyclic group for orders without an exact generator.
#[derive(Clone, Debug)]
pub struct NumericCyclic {
    pub n: u32,
    pub elements: Vec<[f64; 4]>,
}

pub const NUMERIC_TOLERANCE: f64 = 1e-12;

fn qmul(p: [f64; 4], q: [f64; 4]) -> [f64; 4] {
    [
        p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
        p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
        p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
        p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0],
    ]
}

fn qconj(p: [f64; 4]) -> [f64; 4] {
    [p[0], -p[1], -p[2], -p[3]]
}

fn close(p: [f64; 4], q: [f64; 4]) -> bool {
    p.iter().zip(&q).all(|(a, b)| (a - b).abs() < NUMERIC_TOLERANCE)
}

impl NumericCyclic {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLabel("C0".into()));
        }
        let elements = (0..n)
            .map(|m| {
                let t = 2.0 * std::f64::consts::PI * m as f64 / n as f64;
                [t.cos(), t.sin(), 0.0, 0.0]
            })
            .collect();
        Ok(Self { n, elements })
    }

    pub fn contains(&self, q: [f64; 4]) -> bool {
        self.elements.iter().any(|&e| close(e, q))
    }

    pub fn alpha_sign(&self, r: &RotationH) -> AlphaSign {
        let b = r.b().to_f64();
        let conj = |g: [f64; 4]| qmul(qmul(b, g), qconj(b));
        if !self.elements.iter().all(|&g| self.contains(conj(g))) {
            AlphaSign::NotInNormalizer
        } else if self.elements.iter().all(|&g| close(conj(g), g)) {
            AlphaSign::Plus
        } else {
            AlphaSign::Minus
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_relations() {
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        let m1 = -Quat::one();
        assert_eq!(&i * &i, m1);
        assert_eq!(&j * &j, m1);
        assert_eq!(&k * &k, m1);
        assert_eq!(&(&i * &j) * &k, m1);
    }

    #[test]
    fn rotation_examples() {
        let id = RotationH::identity();
        assert_eq!(id.apply(&Quat::j()), Quat::j());
        let ri = RotationH::new(Quat::i(), -Quat::i()).unwrap();
        assert_eq!(ri.apply(&Quat::one()), -Quat::one());
        let rj = RotationH::new(Quat::j(), -Quat::j()).unwrap();
        // j·k·j = (jk)j = ij = k; k is fixed, only its self-dual image flips
        assert_eq!(rj.apply(&Quat::k()), Quat::k());
        assert_eq!(rj.apply(&Quat::i()), Quat::i());
        assert_eq!(rj.apply(&Quat::one()), -Quat::one());
        assert!(RotationH::new(Quat::from_ints(1, 1, 0, 0), Quat::one()).is_err());
    }

    #[test]
    fn lambda2_plus_of_table_rotations() {
        assert_eq!(RotationH::identity().lambda2_plus(), Mat3::identity());
        let ri = RotationH::sandwich(Quat::i()).unwrap();
        assert_eq!(ri.lambda2_plus(), Mat3::diag(1, -1, -1));
        let rj = RotationH::sandwich(Quat::j()).unwrap();
        assert_eq!(rj.lambda2_plus(), Mat3::diag(-1, 1, -1));
    }

    #[test]
    fn subgroup_orders() {
        let cases = [
            (GroupLabel::Cyclic(1), 1),
            (GroupLabel::Cyclic(2), 2),
            (GroupLabel::Cyclic(3), 3),
            (GroupLabel::Cyclic(6), 6),
            (GroupLabel::Cyclic(24), 24),
            (GroupLabel::Dicyclic(2), 8),
            (GroupLabel::Dicyclic(3), 12),
            (GroupLabel::BinaryTetrahedral, 24),
            (GroupLabel::BinaryOctahedral, 48),
            (GroupLabel::BinaryIcosahedral, 120),
        ];
        for (label, order) in cases {
            let g = generate_subgroup(label).unwrap();
            assert_eq!(g.order(), order, "{label}");
            assert_eq!(label.order(), order);
            assert!(g.is_closed(), "{label}");
        }
        let c2 = generate_subgroup(GroupLabel::Cyclic(2)).unwrap();
        assert!(c2.contains(&-Quat::one()));
        assert!(matches!(generate_subgroup(GroupLabel::Cyclic(5)), Err(Error::UnsupportedExact(5))));
    }

    #[test]
    fn alpha_examples() {
        let c4 = generate_subgroup(GroupLabel::Cyclic(4)).unwrap();
        let c2 = generate_subgroup(GroupLabel::Cyclic(2)).unwrap();
        let half = FieldScalar::from_ratio(1, 2);
        let left = RotationH::left(Quat::from_ints(1, 1, 1, 1).scale(&half)).unwrap();
        assert_eq!(alpha_sign(&left, &c4).unwrap(), AlphaSign::Plus);
        let rj = RotationH::sandwich(Quat::j()).unwrap();
        assert_eq!(alpha_sign(&rj, &c4).unwrap(), AlphaSign::Minus);
        assert_eq!(alpha_sign(&rj, &c2).unwrap(), AlphaSign::Plus);
        let odd = RotationH::new(Quat::one(), Quat::from_ints(1, 1, 1, 1).scale(&half)).unwrap();
        assert_eq!(alpha_sign(&odd, &c4).unwrap(), AlphaSign::NotInNormalizer);
        let dic = generate_subgroup(GroupLabel::Dicyclic(3)).unwrap();
        assert!(matches!(alpha_sign(&rj, &dic), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn numeric_cyclic_agrees_with_exact() {
        let rj = RotationH::sandwich(Quat::j()).unwrap();
        for n in [3, 4, 6] {
            let exact = alpha_sign(&rj, &generate_subgroup(GroupLabel::Cyclic(n)).unwrap()).unwrap();
            assert_eq!(NumericCyclic::new(n).unwrap().alpha_sign(&rj), exact);
        }
        assert_eq!(NumericCyclic::new(5).unwrap().alpha_sign(&rj), AlphaSign::Minus);
    }

    #[test]
    fn fiber_signs() {
        assert_eq!(RotationH::sandwich(Quat::i()).unwrap().fiber_sign(), Some(1));
        assert_eq!(RotationH::sandwich(Quat::j()).unwrap().fiber_sign(), Some(-1));
        let half = FieldScalar::from_ratio(1, 2);
        let odd = RotationH::new(Quat::one(), Quat::from_ints(1, 1, 1, 1).scale(&half)).unwrap();
        assert_eq!(odd.fiber_sign(), None);
    }

    #[test]
    fn label_parsing() {
        assert_eq!("C3".parse::<GroupLabel>().unwrap(), GroupLabel::Cyclic(3));
        assert_eq!("Dic_3".parse::<GroupLabel>().unwrap(), GroupLabel::Dicyclic(3));
        assert_eq!("2I".parse::<GroupLabel>().unwrap(), GroupLabel::BinaryIcosahedral);
        assert!("X7".parse::<GroupLabel>().is_err());
    }
}
