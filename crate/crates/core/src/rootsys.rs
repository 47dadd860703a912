//! Root systems of types A, D and E, Weyl-group canonical forms of
//! Im H-valued weights, and diagram automorphisms induced by conjugation.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldScalar, Rational};
use crate::lattices::{ImVec, Mat3};
use crate::quaternions::{FiniteSubgroup, GroupLabel, Quat, RotationH};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RootLabel {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootLabel::A(k) => write!(f, "A{k}"),
            RootLabel::D(k) => write!(f, "D{k}"),
            RootLabel::E6 => write!(f, "E6"),
            RootLabel::E7 => write!(f, "E7"),
            RootLabel::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for RootLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(s.to_string());
        let t = s.trim().replace('_', "");
        let (head, tail) = t.split_at(1.min(t.len()));
        let n: usize = tail.parse().map_err(|_| bad())?;
        match (head, n) {
            ("A", k) if k >= 1 => Ok(RootLabel::A(k)),
            ("D", k) if k >= 3 => Ok(RootLabel::D(k)),
            ("E", 6) => Ok(RootLabel::E6),
            ("E", 7) => Ok(RootLabel::E7),
            ("E", 8) => Ok(RootLabel::E8),
            _ => Err(bad()),
        }
    }
}

impl Serialize for RootLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RootLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

impl RootLabel {
    /// The root system attached to a finite subgroup of Sp(1).
    pub fn for_group(label: GroupLabel) -> Result<Self> {
        match label {
            GroupLabel::Cyclic(n) if n >= 2 => Ok(RootLabel::A(n as usize - 1)),
            GroupLabel::Dicyclic(m) if m >= 1 => Ok(RootLabel::D(m as usize + 2)),
            GroupLabel::BinaryTetrahedral => Ok(RootLabel::E6),
            GroupLabel::BinaryOctahedral => Ok(RootLabel::E7),
            GroupLabel::BinaryIcosahedral => Ok(RootLabel::E8),
            _ => Err(Error::NotApplicable(format!("{label} has no root system"))),
        }
    }
}

/// Roots are stored as integer vectors in ambient coordinates scaled by
/// `denominator` (1 for A and D, 2 for the E types).
#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub label: RootLabel,
    pub rank: usize,
    pub ambient_dim: usize,
    pub denominator: i64,
    pub roots: Vec<Vec<i64>>,
    pub simple_roots: Vec<Vec<i64>>,
    #[serde(skip)]
    complement: Vec<Vec<Rational>>,
}

fn unit(n: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn e8_roots() -> Vec<Vec<i64>> {
    let mut roots = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut v = vec![0; 8];
                v[i] = si;
                v[j] = sj;
                roots.push(v);
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push((0..8).map(|b| if mask & (1 << b) != 0 { -1 } else { 1 }).collect());
        }
    }
    roots
}

fn e8_simple() -> Vec<Vec<i64>> {
    let mut s = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], add(&unit(8, 0, 2), &unit(8, 1, 2))];
    for i in 0..6 {
        s.push(sub(&unit(8, i + 1, 2), &unit(8, i, 2)));
    }
    s
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn to_rat(v: &[i64], den: i64) -> Vec<Rational> {
    v.iter().map(|&x| Rational::new(x.into(), den.into())).collect()
}

fn gram_schmidt(vs: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for u in &out {
            let c = rdot(&w, u) / rdot(u, u);
            w = w.iter().zip(u).map(|(a, b)| a - &c * b).collect();
        }
        out.push(w);
    }
    out
}

fn rdot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

impl RootSystem {
    pub fn build(label: RootLabel) -> Self {
        let (ambient_dim, denominator, roots, simple_roots, complement): (usize, i64, _, _, Vec<Vec<i64>>) = match label {
            RootLabel::A(k) => {
                let n = k + 1;
                let mut roots = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            roots.push(sub(&unit(n, i, 1), &unit(n, j, 1)));
                        }
                    }
                }
                let simple = (0..k).map(|i| sub(&unit(n, i, 1), &unit(n, i + 1, 1))).collect();
                (n, 1, roots, simple, vec![vec![1; n]])
            }
            RootLabel::D(n) => {
                let mut roots = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            roots.push(add(&unit(n, i, si), &unit(n, j, sj)));
                        }
                    }
                }
                let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| sub(&unit(n, i, 1), &unit(n, i + 1, 1))).collect();
                simple.push(add(&unit(n, n - 2, 1), &unit(n, n - 1, 1)));
                (n, 1, roots, simple, vec![])
            }
            RootLabel::E8 => (8, 2, e8_roots(), e8_simple(), vec![]),
            RootLabel::E7 | RootLabel::E6 => {
                let mut comp = vec![add(&unit(8, 6, 2), &unit(8, 7, 2))];
                if label == RootLabel::E6 {
                    comp.push(sub(&unit(8, 5, 2), &unit(8, 6, 2)));
                }
                let roots = e8_roots()
                    .into_iter()
                    .filter(|r| comp.iter().all(|c| dot(r, c) == 0))
                    .collect();
                let rank = if label == RootLabel::E6 { 6 } else { 7 };
                let simple = e8_simple().into_iter().take(rank).collect();
                (8, 2, roots, simple, comp)
            }
        };
        let complement = gram_schmidt(complement.iter().map(|c| to_rat(c, denominator)).collect());
        let rank = simple_roots.len();
        Self {
            label,
            rank,
            ambient_dim,
            denominator,
            roots,
            simple_roots,
            complement,
        }
    }

    /// Inner product of two roots given in scaled integer coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rational {
        Rational::new(dot(a, b).into(), (self.denominator * self.denominator).into())
    }

    pub fn contains_root(&self, v: &[i64]) -> bool {
        self.roots.iter().any(|r| r.as_slice() == v)
    }

    /// Coefficients of a root in the simple-root basis.
    pub fn simple_coefficients(&self, v: &[i64]) -> Option<Vec<Rational>> {
        let cols: Vec<Vec<Rational>> = self
            .simple_roots
            .iter()
            .map(|s| to_rat(s, 1))
            .chain(self.complement.iter().map(|c| c.iter().map(|x| x * rat(self.denominator)).collect()))
            .collect();
        let n = self.ambient_dim;
        let m: Vec<Vec<Rational>> = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let inv = mat_inverse(&m)?;
        let x = to_rat(v, 1);
        Some(
            (0..self.rank)
                .map(|r| inv[r].iter().zip(&x).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
                .collect(),
        )
    }

    /// Reflection of a root in the simple root `s`.
    pub fn reflect_root(&self, s: usize, v: &[i64]) -> Vec<i64> {
        let a = &self.simple_roots[s];
        // ⟨a,a⟩ = 2 in true coordinates, i.e. 2·den² in scaled ones
        let c = dot(v, a) / (self.denominator * self.denominator);
        v.iter().zip(a).map(|(x, y)| x - c * y).collect()
    }

    pub fn apply_word_to_root(&self, word: &[usize], v: &[i64]) -> Vec<i64> {
        word.iter().fold(v.to_vec(), |acc, &s| self.reflect_root(s, &acc))
    }

    /// Ambient vectors spanning the orthogonal complement of the root span.
    pub fn complement(&self) -> &[Vec<Rational>] {
        &self.complement
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "label": self.label.to_string(),
            "rank": self.rank,
            "denominator": self.denominator,
            "roots": self.roots,
        })
    }
}

pub fn build_root_system(label: RootLabel) -> RootSystem {
    RootSystem::build(label)
}

fn mat_inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v = row.clone();
            v.extend((0..n).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
            v
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// An element of (Im H)* ⊗ h, stored by its ambient coordinates so that
/// `ζ(θ) = Σ_m θ_m ζ_m` for a root `θ` in true (unscaled) coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct CartanWeight {
    pub entries: Vec<ImVec>,
}

impl CartanWeight {
    pub fn new(entries: Vec<ImVec>) -> Self {
        Self { entries }
    }

    /// Weight whose entries are integer multiples of a fixed vector.
    pub fn along(v: &ImVec, coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| v.scale(&c.into())).collect())
    }

    fn check(&self, phi: &RootSystem) -> Result<()> {
        if self.entries.len() != phi.ambient_dim {
            return Err(Error::RankMismatch {
                expected: phi.ambient_dim,
                got: self.entries.len(),
            });
        }
        Ok(())
    }

    /// `ζ(θ)` for a root given in the scaled integer coordinates of `phi`.
    pub fn evaluate(&self, phi: &RootSystem, theta: &[i64]) -> ImVec {
        let mut acc = ImVec::zero();
        for (c, z) in theta.iter().zip(&self.entries) {
            if *c != 0 {
                acc = &acc + &z.scale(&(*c).into());
            }
        }
        if phi.denominator != 1 {
            acc = acc.scale(&FieldScalar::from_ratio(1, phi.denominator));
        }
        acc
    }

    pub fn reflect(&self, phi: &RootSystem, s: usize) -> Self {
        let alpha = &phi.simple_roots[s];
        let value = self.evaluate(phi, alpha);
        let den = FieldScalar::from_ratio(1, phi.denominator);
        Self::new(
            self.entries
                .iter()
                .zip(alpha)
                .map(|(z, &a)| if a == 0 { z.clone() } else { z - &value.scale(&(&FieldScalar::from_int(a) * &den)) })
                .collect(),
        )
    }

    pub fn apply_word(&self, phi: &RootSystem, word: &[usize]) -> Self {
        word.iter().fold(self.clone(), |acc, &s| acc.reflect(phi, s))
    }

    /// Applies a rotation of Im H entrywise.
    pub fn rotate(&self, m: &Mat3) -> Self {
        Self::new(self.entries.iter().map(|z| m.apply(z)).collect())
    }

    /// Orthogonal projection onto the root span.
    pub fn project(&self, phi: &RootSystem) -> Self {
        let mut entries = self.entries.clone();
        for u in phi.complement() {
            let nu = rdot(u, u);
            let mut coeff = ImVec::zero();
            for (z, c) in entries.iter().zip(u) {
                coeff = &coeff + &z.scale(&FieldScalar::from_rational(c / &nu));
            }
            for (z, c) in entries.iter_mut().zip(u) {
                *z = &*z - &coeff.scale(&FieldScalar::from_rational(c.clone()));
            }
        }
        Self::new(entries)
    }

    /// Values on the simple roots; equal for two weights iff they agree on
    /// the root span.
    pub fn simple_values(&self, phi: &RootSystem) -> Vec<ImVec> {
        phi.simple_roots.iter().map(|a| self.evaluate(phi, a)).collect()
    }
}

fn lex_negative(v: &ImVec) -> bool {
    v.coords()
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
}

/// Reduces `ζ` to the dominant chamber for the lexicographic order on Im H
/// (compare the `i`, then `j`, then `k` components). Returns the reduced
/// weight and the word of simple reflections applied, first letter first.
pub fn weyl_reduce(zeta: &CartanWeight, phi: &RootSystem) -> Result<(CartanWeight, Vec<usize>)> {
    zeta.check(phi)?;
    let mut z = zeta.project(phi);
    let mut word = Vec::new();
    while let Some(s) = (0..phi.rank).find(|&s| lex_negative(&z.evaluate(phi, &phi.simple_roots[s]))) {
        z = z.reflect(phi, s);
        word.push(s);
    }
    Ok((z, word))
}

/// Canonical orbit representative under the Weyl group, projected to the root span.
pub fn weyl_canonical(zeta: &CartanWeight, phi: &RootSystem) -> Result<CartanWeight> {
    Ok(weyl_reduce(zeta, phi)?.0)
}

/// Whether `ζ(θ) ≠ 0` for every root `θ`.
pub fn in_delta_circ(zeta: &CartanWeight, phi: &RootSystem) -> Result<bool> {
    zeta.check(phi)?;
    Ok(phi.roots.iter().all(|r| !zeta.evaluate(phi, r).is_zero()))
}

/// A Dynkin-diagram automorphism, given by its permutation of simple roots
/// and the induced orthogonal map on ambient coordinates (identity on the
/// complement of the root span).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramAut {
    pub label: RootLabel,
    pub simple_perm: Vec<usize>,
    ambient: Vec<Vec<Rational>>,
}

impl DiagramAut {
    pub fn identity(phi: &RootSystem) -> Self {
        Self::from_perm(phi, (0..phi.rank).collect()).expect("identity")
    }

    pub fn from_perm(phi: &RootSystem, perm: Vec<usize>) -> Result<Self> {
        let n = phi.ambient_dim;
        let den = phi.denominator;
        let cols = |p: &dyn Fn(usize) -> usize| -> Vec<Vec<Rational>> {
            (0..phi.rank)
                .map(|i| to_rat(&phi.simple_roots[p(i)], den))
                .chain(phi.complement().iter().cloned())
                .collect()
        };
        let b = cols(&|i| i);
        let bp = cols(&|i| perm[i]);
        let as_matrix = |c: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
            (0..n).map(|r| c.iter().map(|col| col[r].clone()).collect()).collect()
        };
        let binv = mat_inverse(&as_matrix(&b)).ok_or_else(|| Error::InvalidInput("simple roots are not a basis".into()))?;
        let bpm = as_matrix(&bp);
        let ambient: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| (0..n).fold(Rational::zero(), |acc, t| acc + &bpm[r][t] * &binv[t][c]))
                    .collect()
            })
            .collect();
        let aut = Self {
            label: phi.label,
            simple_perm: perm,
            ambient,
        };
        let cartan_ok = (0..phi.rank).all(|i| {
            (0..phi.rank).all(|j| {
                dot(&phi.simple_roots[i], &phi.simple_roots[j])
                    == dot(&phi.simple_roots[aut.simple_perm[i]], &phi.simple_roots[aut.simple_perm[j]])
            })
        });
        if !cartan_ok {
            return Err(Error::InvalidInput("permutation is not a diagram automorphism".into()));
        }
        Ok(aut)
    }

    pub fn is_identity(&self) -> bool {
        self.simple_perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self, phi: &RootSystem) -> Self {
        let perm = other.simple_perm.iter().map(|&i| self.simple_perm[i]).collect();
        Self::from_perm(phi, perm).expect("composition of automorphisms")
    }

    pub fn order(&self) -> usize {
        let n = self.simple_perm.len();
        let mut p: Vec<usize> = (0..n).collect();
        for k in 1..=720 {
            p = p.iter().map(|&i| self.simple_perm[i]).collect();
            if p.iter().enumerate().all(|(i, &x)| i == x) {
                return k;
            }
        }
        unreachable!("diagram automorphisms have order at most 3")
    }

    pub fn apply_root(&self, v: &[i64]) -> Vec<i64> {
        self.ambient
            .iter()
            .map(|row| {
                let x = row.iter().zip(v).fold(Rational::zero(), |acc, (a, &b)| acc + a * rat(b));
                assert!(x.is_integer(), "diagram automorphism maps roots to lattice points");
                x.to_integer().try_into().expect("small root coordinate")
            })
            .collect()
    }

    pub fn apply_weight(&self, zeta: &CartanWeight) -> CartanWeight {
        CartanWeight::new(
            self.ambient
                .iter()
                .map(|row| {
                    row.iter().zip(&zeta.entries).fold(ImVec::zero(), |acc, (a, z)| {
                        if a.is_zero() {
                            acc
                        } else {
                            &acc + &z.scale(&FieldScalar::from_rational(a.clone()))
                        }
                    })
                })
                .collect(),
        )
    }

    /// Integer permutation matrix on simple-root coordinates.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let r = self.simple_perm.len();
        let mut m = vec![vec![0; r]; r];
        for (i, &p) in self.simple_perm.iter().enumerate() {
            m[p][i] = 1;
        }
        m
    }
}

fn class_of(classes: &[Vec<usize>], n: usize) -> usize {
    classes.iter().position(|c| c.contains(&n)).expect("element lies in a class")
}

/// The diagram automorphism `Ad_{C_R}` induced by conjugating `Γ` with `R`.
///
/// Irreducible characters are permuted exactly as conjugacy classes are
/// (Brauer's permutation lemma), so a trivial class permutation gives the
/// identity. Otherwise the node permutation is fixed by the affine node
/// being the trivial representation.
pub fn mckay_automorphism(r: &RotationH, gamma: &FiniteSubgroup) -> Result<DiagramAut> {
    let label = RootLabel::for_group(gamma.label)?;
    let phi = RootSystem::build(label);
    let perm = gamma.conjugation_permutation(r).ok_or(Error::NotInNormalizer)?;
    let classes = gamma.conjugacy_classes();
    let class_perm: Vec<usize> = classes.iter().map(|c| class_of(&classes, perm[c[0]])).collect();
    if class_perm.iter().enumerate().all(|(i, &p)| i == p) {
        return Ok(DiagramAut::identity(&phi));
    }
    let rank = phi.rank;
    let node_perm: Vec<usize> = match label {
        RootLabel::A(k) => (0..k).map(|i| k - 1 - i).collect(),
        RootLabel::D(4) => {
            // legs α1, α3, α4 ↔ the characters with kernel containing i, j, k
            let legs = [(Quat::i(), 0usize), (Quat::j(), 2), (Quat::k(), 3)];
            let leg_class = |q: &Quat| class_of(&classes, gamma.index_of(q).expect("Q8 element"));
            let mut p = vec![0, 1, 2, 3];
            for (q, node) in &legs {
                let image = class_perm[leg_class(q)];
                let (_, target) = legs
                    .iter()
                    .find(|(u, _)| leg_class(u) == image)
                    .ok_or_else(|| Error::InvalidInput("conjugation does not permute the legs".into()))?;
                p[*node] = *target;
            }
            p
        }
        RootLabel::D(n) => {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(n - 2, n - 1);
            p
        }
        RootLabel::E6 => vec![5, 1, 4, 3, 2, 0],
        RootLabel::E7 | RootLabel::E8 => {
            return Err(Error::InvalidInput(format!("{label} has no nontrivial automorphism fixing the affine node")));
        }
    };
    debug_assert_eq!(node_perm.len(), rank);
    DiagramAut::from_perm(&phi, node_perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternions::generate_subgroup;

    fn iv(n: i64) -> ImVec {
        ImVec::from_ints(n, 0, 0)
    }

    #[test]
    fn root_counts() {
        let cases = [
            (RootLabel::A(1), 2),
            (RootLabel::A(4), 20),
            (RootLabel::D(4), 24),
            (RootLabel::D(5), 40),
            (RootLabel::E6, 72),
            (RootLabel::E7, 126),
            (RootLabel::E8, 240),
        ];
        for (label, count) in cases {
            let phi = RootSystem::build(label);
            assert_eq!(phi.roots.len(), count, "{label}");
            for r in &phi.roots {
                let neg: Vec<i64> = r.iter().map(|x| -x).collect();
                assert!(phi.contains_root(&neg));
                assert_eq!(phi.inner(r, r), rat(2));
                let c = phi.simple_coefficients(r).unwrap();
                assert!(c.iter().all(|x| x.is_integer()));
                assert!(c.iter().all(|x| *x >= Rational::zero()) || c.iter().all(|x| *x <= Rational::zero()));
            }
        }
    }

    #[test]
    fn delta_circ_examples() {
        let a1 = RootSystem::build(RootLabel::A(1));
        let z = CartanWeight::new(vec![iv(-1), iv(1)]);
        assert!(in_delta_circ(&z, &a1).unwrap());
        let a2 = RootSystem::build(RootLabel::A(2));
        let z = CartanWeight::new(vec![iv(1), iv(1), iv(-2)]);
        assert!(!in_delta_circ(&z, &a2).unwrap());
        let d5 = RootSystem::build(RootLabel::D(5));
        let z = CartanWeight::along(&ImVec::unit_i(), &[0, 1, 2, 3, 4]);
        assert!(in_delta_circ(&z, &d5).unwrap());
        assert!(matches!(in_delta_circ(&z, &a2), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn canonical_form_examples() {
        let d5 = RootSystem::build(RootLabel::D(5));
        let a = CartanWeight::along(&ImVec::unit_i(), &[0, -1, 2, -3, 4]);
        let b = CartanWeight::along(&ImVec::unit_i(), &[0, 1, 2, 3, 4]);
        assert_eq!(weyl_canonical(&a, &d5).unwrap(), weyl_canonical(&b, &d5).unwrap());
        // an odd number of sign changes is not in W(D5) unless a zero entry absorbs it
        let c = CartanWeight::along(&ImVec::unit_i(), &[1, 2, 3, 4, 5]);
        let d = CartanWeight::along(&ImVec::unit_i(), &[-1, 2, 3, 4, 5]);
        assert_ne!(weyl_canonical(&c, &d5).unwrap(), weyl_canonical(&d, &d5).unwrap());
        let a2 = RootSystem::build(RootLabel::A(2));
        let x = CartanWeight::new(vec![iv(1), iv(-1), iv(0)]);
        let y = CartanWeight::new(vec![iv(0), iv(1), iv(-1)]);
        assert_eq!(weyl_canonical(&x, &a2).unwrap(), weyl_canonical(&y, &a2).unwrap());
        let cx = weyl_canonical(&x, &a2).unwrap();
        assert_eq!(weyl_canonical(&cx, &a2).unwrap(), cx);
    }

    #[test]
    fn reduction_word_maps_weight() {
        let d5 = RootSystem::build(RootLabel::D(5));
        let z = CartanWeight::new(vec![
            ImVec::from_ints(0, 1, 0),
            ImVec::from_ints(2, -1, 0),
            ImVec::from_ints(-3, 0, 1),
            ImVec::from_ints(1, 1, 1),
            ImVec::from_ints(0, 0, -2),
        ]);
        let (c, word) = weyl_reduce(&z, &d5).unwrap();
        assert_eq!(z.apply_word(&d5, &word), c);
        // (wζ)(wθ) = ζ(θ)
        for r in &d5.roots {
            assert_eq!(c.evaluate(&d5, &d5.apply_word_to_root(&word, r)), z.evaluate(&d5, r));
        }
    }

    #[test]
    fn mckay_examples() {
        let c3 = generate_subgroup(GroupLabel::Cyclic(3)).unwrap();
        let rj = RotationH::sandwich(Quat::j()).unwrap();
        let ri = RotationH::sandwich(Quat::i()).unwrap();
        let aut = mckay_automorphism(&rj, &c3).unwrap();
        assert_eq!(aut.simple_perm, vec![1, 0]);
        assert_eq!(aut.matrix(), vec![vec![0, 1], vec![1, 0]]);
        let c4 = generate_subgroup(GroupLabel::Cyclic(4)).unwrap();
        assert!(mckay_automorphism(&ri, &c4).unwrap().is_identity());
        assert!(mckay_automorphism(&RotationH::identity(), &c4).unwrap().is_identity());
        // Dic3: conjugation by -i sends j to -j = x³j... a fork swap; by -j it is inner
        let dic3 = generate_subgroup(GroupLabel::Dicyclic(3)).unwrap();
        let plus = mckay_automorphism(&ri, &dic3).unwrap();
        assert_eq!(plus.simple_perm, vec![0, 1, 2, 4, 3]);
        assert!(mckay_automorphism(&rj, &dic3).unwrap().is_identity());
        let half = FieldScalar::from_ratio(1, 2);
        let odd = RotationH::new(Quat::one(), Quat::from_ints(1, 1, 1, 1).scale(&half)).unwrap();
        assert!(matches!(mckay_automorphism(&odd, &c4), Err(Error::NotInNormalizer)));
    }

    #[test]
    fn q8_leg_permutations() {
        let q8 = generate_subgroup(GroupLabel::Dicyclic(2)).unwrap();
        let half = FieldScalar::from_ratio(1, 2);
        let cyc = RotationH::new(Quat::one(), Quat::from_ints(1, 1, 1, 1).scale(&half)).unwrap();
        let aut = mckay_automorphism(&cyc, &q8).unwrap();
        assert_eq!(aut.order(), 3);
        let phi = RootSystem::build(RootLabel::D(4));
        for r in &phi.roots {
            assert!(phi.contains_root(&aut.apply_root(r)));
        }
    }

    #[test]
    fn e6_involution_from_binary_octahedral_element() {
        let t = generate_subgroup(GroupLabel::BinaryTetrahedral).unwrap();
        let s = FieldScalar::sqrt_of(2).unwrap() * FieldScalar::from_ratio(1, 2);
        let b = Quat::new(s.clone(), s, 0.into(), 0.into());
        let r = RotationH::new(Quat::one(), b).unwrap();
        let aut = mckay_automorphism(&r, &t).unwrap();
        assert_eq!(aut.simple_perm, vec![5, 1, 4, 3, 2, 0]);
        let phi = RootSystem::build(RootLabel::E6);
        for root in &phi.roots {
            assert!(phi.contains_root(&aut.apply_root(root)));
        }
    }
}
