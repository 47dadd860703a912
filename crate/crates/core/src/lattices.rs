//! Vectors, lattices and affine isometries of Im H, primitive-pair search,
//! covolumes and the exact dual-lattice spectral gap of a flat 2-torus.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{format_rational, gcd_all, parse_rational, FieldScalar, Rational};
use crate::quaternions::RotationH;

/// A vector `x_i·i + x_j·j + x_k·k` of Im H.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "[FieldScalar; 3]", into = "[FieldScalar; 3]")]
pub struct ImVec {
    pub i: FieldScalar,
    pub j: FieldScalar,
    pub k: FieldScalar,
}

impl From<[FieldScalar; 3]> for ImVec {
    fn from([i, j, k]: [FieldScalar; 3]) -> Self {
        Self { i, j, k }
    }
}

impl From<ImVec> for [FieldScalar; 3] {
    fn from(v: ImVec) -> Self {
        [v.i, v.j, v.k]
    }
}

impl ImVec {
    pub fn new(i: FieldScalar, j: FieldScalar, k: FieldScalar) -> Self {
        Self { i, j, k }
    }

    pub fn from_ints(i: i64, j: i64, k: i64) -> Self {
        Self::new(i.into(), j.into(), k.into())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit_i() -> Self {
        Self::from_ints(1, 0, 0)
    }

    pub fn unit_j() -> Self {
        Self::from_ints(0, 1, 0)
    }

    pub fn unit_k() -> Self {
        Self::from_ints(0, 0, 1)
    }

    pub fn coords(&self) -> [&FieldScalar; 3] {
        [&self.i, &self.j, &self.k]
    }

    pub fn is_zero(&self) -> bool {
        self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    pub fn dot(&self, other: &Self) -> FieldScalar {
        &(&(&self.i * &other.i) + &(&self.j * &other.j)) + &(&self.k * &other.k)
    }

    pub fn cross(&self, o: &Self) -> Self {
        Self::new(
            &self.j * &o.k - &self.k * &o.j,
            &self.k * &o.i - &self.i * &o.k,
            &self.i * &o.j - &self.j * &o.i,
        )
    }

    pub fn norm_sq(&self) -> FieldScalar {
        self.dot(self)
    }

    pub fn scale(&self, s: &FieldScalar) -> Self {
        Self::new(&self.i * s, &self.j * s, &self.k * s)
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.i.to_f64(), self.j.to_f64(), self.k.to_f64()]
    }

    /// True when `other` is a real multiple of `self` (or either is zero).
    pub fn is_parallel(&self, other: &Self) -> bool {
        self.cross(other).is_zero()
    }

    /// True when the two vectors point the same way (positive multiple).
    pub fn same_direction(&self, other: &Self) -> bool {
        self.is_parallel(other) && self.dot(other).is_positive()
    }
}

impl Add for &ImVec {
    type Output = ImVec;
    fn add(self, o: &ImVec) -> ImVec {
        ImVec::new(&self.i + &o.i, &self.j + &o.j, &self.k + &o.k)
    }
}

impl Sub for &ImVec {
    type Output = ImVec;
    fn sub(self, o: &ImVec) -> ImVec {
        ImVec::new(&self.i - &o.i, &self.j - &o.j, &self.k - &o.k)
    }
}

impl Add for ImVec {
    type Output = ImVec;
    fn add(self, o: ImVec) -> ImVec {
        &self + &o
    }
}

impl Sub for ImVec {
    type Output = ImVec;
    fn sub(self, o: ImVec) -> ImVec {
        &self - &o
    }
}

impl Neg for &ImVec {
    type Output = ImVec;
    fn neg(self) -> ImVec {
        ImVec::new(-&self.i, -&self.j, -&self.k)
    }
}

impl Neg for ImVec {
    type Output = ImVec;
    fn neg(self) -> ImVec {
        -&self
    }
}

impl fmt::Display for ImVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})i + ({})j + ({})k", self.i, self.j, self.k)
    }
}

impl fmt::Debug for ImVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ImVec[{}, {}, {}]", self.i, self.j, self.k)
    }
}

/// A 3×3 matrix over Q(√2,√3,√5), acting on column vectors of Im H.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat3(pub [[FieldScalar; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Self::diag(1, 1, 1)
    }

    pub fn diag(a: i64, b: i64, c: i64) -> Self {
        Self::from_ints([[a, 0, 0], [0, b, 0], [0, 0, c]])
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Self {
        Self(m.map(|row| row.map(FieldScalar::from_int)))
    }

    pub fn from_columns(c: [&ImVec; 3]) -> Self {
        Self(std::array::from_fn(|r| {
            std::array::from_fn(|col| c[col].coords()[r].clone())
        }))
    }

    pub fn column(&self, c: usize) -> ImVec {
        ImVec::new(self.0[0][c].clone(), self.0[1][c].clone(), self.0[2][c].clone())
    }

    pub fn transpose(&self) -> Self {
        Self(std::array::from_fn(|r| std::array::from_fn(|c| self.0[c][r].clone())))
    }

    pub fn apply(&self, v: &ImVec) -> ImVec {
        let x = v.coords();
        let row = |r: usize| {
            let m = &self.0[r];
            &(&(&m[0] * x[0]) + &(&m[1] * x[1])) + &(&m[2] * x[2])
        };
        ImVec::new(row(0), row(1), row(2))
    }

    pub fn det(&self) -> FieldScalar {
        let m = &self.0;
        let minor = |a: usize, b: usize, c: usize, d: usize| &(&m[1][a] * &m[2][b]) - &(&m[1][c] * &m[2][d]);
        &(&(&m[0][0] * &minor(1, 2, 2, 1)) - &(&m[0][1] * &minor(0, 2, 2, 0))) + &(&m[0][2] * &minor(0, 1, 1, 0))
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        let inv_d = d.inverse()?;
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| &(&m[r0][c0] * &m[r1][c1]) - &(&m[r0][c1] * &m[r1][c0]);
        // adjugate = transpose of the cofactor matrix
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        Ok(Self(adj.map(|row| row.map(|x| &x * &inv_d))))
    }

    pub fn is_orthogonal(&self) -> bool {
        &self.transpose() * self == Self::identity()
    }

    pub fn neg(&self) -> Self {
        Self(self.0.clone().map(|row| row.map(|x| -x)))
    }

    pub fn to_f64(&self) -> [[f64; 3]; 3] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.0[r][c].to_f64()))
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, o: &Mat3) -> Mat3 {
        Mat3(std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let mut s = FieldScalar::zero();
                for t in 0..3 {
                    s += &(&self.0[r][t] * &o.0[t][c]);
                }
                s
            })
        }))
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "Mat3[{}]", rows.join(", "))
    }
}

/// A full-rank lattice in Im H given by a basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeIm {
    basis: [ImVec; 3],
    basis_inv: Mat3,
}

impl LatticeIm {
    pub fn new(basis: [ImVec; 3]) -> Result<Self> {
        let m = Mat3::from_columns([&basis[0], &basis[1], &basis[2]]);
        let basis_inv = m.inverse().map_err(|_| Error::DegenerateLattice)?;
        Ok(Self { basis, basis_inv })
    }

    /// The standard lattice ⟨i, j, k⟩.
    pub fn standard() -> Self {
        Self::new([ImVec::unit_i(), ImVec::unit_j(), ImVec::unit_k()]).expect("standard basis")
    }

    pub fn basis(&self) -> &[ImVec; 3] {
        &self.basis
    }

    /// Coordinates of `v` with respect to the lattice basis.
    pub fn coordinates(&self, v: &ImVec) -> ImVec {
        self.basis_inv.apply(v)
    }

    /// Integer coordinates, or an error when `v` is not a lattice vector.
    pub fn integer_coordinates(&self, v: &ImVec) -> Result<[BigInt; 3]> {
        let c = self.coordinates(v);
        let ints: Vec<BigInt> = c
            .coords()
            .iter()
            .map(|x| x.as_integer().ok_or(Error::NotALatticeVector))
            .collect::<Result<_>>()?;
        Ok(ints.try_into().expect("three coordinates"))
    }

    pub fn contains(&self, v: &ImVec) -> bool {
        self.integer_coordinates(v).is_ok()
    }

    pub fn vector(&self, c: [i64; 3]) -> ImVec {
        let mut v = ImVec::zero();
        for (b, n) in self.basis.iter().zip(c) {
            v = &v + &b.scale(&FieldScalar::from_int(n));
        }
        v
    }
}

impl Serialize for LatticeIm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|v| {
                v.coords()
                    .iter()
                    .map(|x| match x.as_rational() {
                        Some(r) => Ok(format_rational(r)),
                        None => Err(serde::ser::Error::custom("lattice basis must be rational")),
                    })
                    .collect()
            })
            .collect::<std::result::Result<_, _>>()?;
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticeIm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
            return Err(D::Error::custom("lattice must be a 3x3 rational matrix"));
        }
        let mut basis: Vec<ImVec> = Vec::new();
        for r in &rows {
            let v: Vec<FieldScalar> = r
                .iter()
                .map(|s| parse_rational(s).map(FieldScalar::from_rational))
                .collect::<Result<_>>()
                .map_err(D::Error::custom)?;
            basis.push(ImVec::new(v[0].clone(), v[1].clone(), v[2].clone()));
        }
        let basis: [ImVec; 3] = basis.try_into().expect("three rows");
        LatticeIm::new(basis).map_err(D::Error::custom)
    }
}

/// An element `(R, v)` of SO(Im H) ⋉ Im H acting by `x ↦ Rx + v`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AffineIsom {
    pub rotation: Mat3,
    pub translation: ImVec,
}

impl AffineIsom {
    pub fn new(rotation: Mat3, translation: ImVec) -> Self {
        Self { rotation, translation }
    }

    pub fn identity() -> Self {
        Self::translation(ImVec::zero())
    }

    pub fn translation(v: ImVec) -> Self {
        Self::new(Mat3::identity(), v)
    }

    /// `(R₁,v₁)(R₂,v₂) = (R₁R₂, R₁v₂ + v₁)`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(
            &self.rotation * &other.rotation,
            &self.rotation.apply(&other.translation) + &self.translation,
        )
    }

    pub fn inverse(&self) -> Result<Self> {
        let rinv = self.rotation.inverse()?;
        let t = -rinv.apply(&self.translation);
        Ok(Self::new(rinv, t))
    }

    pub fn apply(&self, x: &ImVec) -> ImVec {
        &self.rotation.apply(x) + &self.translation
    }
}

/// An extra (non-lattice) generator together with its action on the fiber.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Generator {
    pub isom: AffineIsom,
    pub fiber: RotationH,
}

/// A crystallographic group generated by a lattice of translations and finitely
/// many extra affine generators, each carrying a fiber action.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BieberbachGroup {
    pub lattice: LatticeIm,
    #[serde(default)]
    pub extra_generators: Vec<Generator>,
    /// Fiber action of the three lattice basis translations.
    #[serde(default = "identity_fibers")]
    pub lattice_fibers: [RotationH; 3],
}

fn identity_fibers() -> [RotationH; 3] {
    std::array::from_fn(|_| RotationH::identity())
}

impl BieberbachGroup {
    pub fn lattice_only(lattice: LatticeIm) -> Self {
        Self {
            lattice,
            extra_generators: Vec::new(),
            lattice_fibers: identity_fibers(),
        }
    }

    pub fn with_generator(mut self, isom: AffineIsom, fiber: RotationH) -> Self {
        self.extra_generators.push(Generator { isom, fiber });
        self
    }

    pub fn lattice_acts_trivially(&self) -> bool {
        self.lattice_fibers.iter().all(RotationH::is_identity)
    }

    /// Checks that every generator conjugates lattice translations to
    /// lattice translations, i.e. its rotation part preserves the lattice.
    pub fn lattice_is_normal(&self) -> bool {
        self.extra_generators.iter().all(|g| {
            self.lattice
                .basis()
                .iter()
                .all(|b| self.lattice.contains(&g.isom.rotation.apply(b)))
        })
    }
}

/// Whether `v` is a primitive vector of `lattice`.
pub fn is_primitive(v: &ImVec, lattice: &LatticeIm) -> Result<bool> {
    let c = lattice.integer_coordinates(v)?;
    Ok(gcd_all(&c).is_one())
}

fn neg_coords(c: &[i64; 3]) -> [i64; 3] {
    c.map(|x| -x)
}

/// Primitive, linearly independent pairs `(ξ₂, ξ₃)` in `ξ̂₁^⊥ ∩ Λ` with lattice
/// coordinates in `[-height, height]`, one representative per class under
/// swapping and negating either entry.
pub fn orthogonal_primitive_pairs(xi1: &ImVec, lattice: &LatticeIm, height: u32) -> Vec<(ImVec, ImVec)> {
    let h = height as i64;
    let mut candidates: Vec<[i64; 3]> = Vec::new();
    for a in -h..=h {
        for b in -h..=h {
            for c in -h..=h {
                let coords = [a, b, c];
                if coords == [0, 0, 0] {
                    continue;
                }
                let g = num_integer::gcd(num_integer::gcd(a, b), c);
                if g.abs() != 1 {
                    continue;
                }
                if lattice.vector(coords).dot(xi1).is_zero() {
                    candidates.push(coords);
                }
            }
        }
    }
    let mut reps: Vec<([i64; 3], [i64; 3])> = Vec::new();
    for (n, u) in candidates.iter().enumerate() {
        for w in &candidates[n + 1..] {
            if lattice.vector(*u).is_parallel(&lattice.vector(*w)) {
                continue;
            }
            let (nu, nw) = (neg_coords(u), neg_coords(w));
            let variants = [
                (*u, *w),
                (nu, *w),
                (*u, nw),
                (nu, nw),
                (*w, *u),
                (nw, *u),
                (*w, nu),
                (nw, nu),
            ];
            let rep = *variants.iter().min().expect("nonempty");
            reps.push(rep);
        }
    }
    reps.sort();
    reps.dedup();
    reps.into_iter()
        .map(|(u, w)| (lattice.vector(u), lattice.vector(w)))
        .collect()
}

/// Area of the parallelogram spanned by two vectors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Covolume {
    /// `|ξ₂|²|ξ₃|² − ⟨ξ₂,ξ₃⟩²`, exact.
    pub squared: FieldScalar,
    /// The area itself when its square root lies in the field.
    pub exact: Option<FieldScalar>,
    pub value: f64,
}

pub fn covolume(xi2: &ImVec, xi3: &ImVec) -> Covolume {
    let squared = xi2.cross(xi3).norm_sq();
    let exact = squared.sqrt();
    let value = exact
        .as_ref()
        .map(FieldScalar::to_f64)
        .unwrap_or_else(|| squared.to_f64().max(0.0).sqrt());
    Covolume { squared, exact, value }
}

/// First nonzero frequency of the flat torus `R²/⟨t⁻¹ξ₂, t⁻¹ξ₃⟩`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralGap {
    /// Squared length of a shortest nonzero dual-lattice vector, exact.
    pub dual_min_sq: FieldScalar,
    /// `2π·√dual_min_sq`.
    pub value: f64,
}

/// Lagrange–Gauss reduction of a binary quadratic form `a x² + 2b xy + c y²`;
/// returns the minimum over nonzero integer vectors.
pub fn gauss_reduced_min(mut a: FieldScalar, mut b: FieldScalar, mut c: FieldScalar) -> FieldScalar {
    loop {
        if a > c {
            std::mem::swap(&mut a, &mut c);
        }
        let mu = (&b / &a).round();
        if mu.is_zero() {
            return a;
        }
        let m = FieldScalar::from_rational(Rational::from_integer(mu));
        // b2 ← b2 − μ b1
        c = &(&c - &(&m * &b).scale(&Rational::from_integer(2.into()))) + &(&(&m * &m) * &a);
        b = &b - &(&m * &a);
        if c >= a && (&b.abs()).scale(&Rational::from_integer(2.into())) <= a {
            return a;
        }
    }
}

pub fn spectral_gap(xi2: &ImVec, xi3: &ImVec, t: &FieldScalar) -> Result<SpectralGap> {
    if !t.is_positive() {
        return Err(Error::InvalidInput("t must be positive".into()));
    }
    let det = xi2.cross(xi3).norm_sq();
    if det.is_zero() {
        return Err(Error::DegenerateLattice);
    }
    // Gram of t⁻¹ξ is G/t², so the dual Gram is t²·G⁻¹.
    let t2 = t.square();
    let scale = &t2 / &det;
    let a = &xi3.norm_sq() * &scale;
    let b = -(&xi2.dot(xi3) * &scale);
    let c = &xi2.norm_sq() * &scale;
    let dual_min_sq = gauss_reduced_min(a, b, c);
    let value = 2.0 * std::f64::consts::PI * dual_min_sq.to_f64().sqrt();
    Ok(SpectralGap { dual_min_sq, value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: i64, j: i64, k: i64) -> ImVec {
        ImVec::from_ints(i, j, k)
    }

    fn same_pair(a: &(ImVec, ImVec), u: &ImVec, w: &ImVec) -> bool {
        let signs = |x: &ImVec, y: &ImVec| x == y || *x == -y;
        (signs(&a.0, u) && signs(&a.1, w)) || (signs(&a.0, w) && signs(&a.1, u))
    }

    #[test]
    fn primitivity() {
        let l = LatticeIm::standard();
        assert!(is_primitive(&v(0, 1, 0), &l).unwrap());
        assert!(!is_primitive(&v(0, 2, 0), &l).unwrap());
        assert!(is_primitive(&v(1, 0, 1), &l).unwrap());
        assert!(!is_primitive(&v(0, 0, 0), &l).unwrap());
        let half = ImVec::new(FieldScalar::from_ratio(1, 2), 0.into(), 0.into());
        assert_eq!(is_primitive(&half, &l), Err(Error::NotALatticeVector));
    }

    #[test]
    fn pairs_orthogonal_to_i() {
        let l = LatticeIm::standard();
        let pairs = orthogonal_primitive_pairs(&ImVec::unit_i(), &l, 1);
        assert!(pairs.iter().any(|p| same_pair(p, &v(0, 1, 0), &v(0, 0, 1))));
        assert!(orthogonal_primitive_pairs(&ImVec::unit_i(), &l, 0).is_empty());
        for (a, b) in &pairs {
            assert!(a.i.is_zero() && b.i.is_zero());
        }
    }

    #[test]
    fn pairs_orthogonal_to_diagonal() {
        let l = LatticeIm::standard();
        let r = FieldScalar::sqrt_of(2).unwrap().inverse().unwrap();
        let xi1 = v(1, 1, 0).scale(&r);
        let pairs = orthogonal_primitive_pairs(&xi1, &l, 1);
        assert!(pairs.iter().any(|p| same_pair(p, &v(1, -1, 0), &v(0, 0, 1))));
    }

    #[test]
    fn covolumes() {
        assert_eq!(covolume(&v(0, 1, 0), &v(0, 0, 1)).exact, Some(1.into()));
        assert_eq!(covolume(&v(0, 1, 0), &v(0, 1, 1)).exact, Some(1.into()));
        assert_eq!(covolume(&v(0, 2, 0), &v(0, 0, 1)).exact, Some(2.into()));
        assert!(covolume(&v(0, 1, 0), &v(0, 2, 0)).squared.is_zero());
    }

    #[test]
    fn gaps_of_small_tori() {
        let two_pi = 2.0 * std::f64::consts::PI;
        let g = spectral_gap(&v(0, 1, 0), &v(0, 0, 1), &1.into()).unwrap();
        assert_eq!(g.dual_min_sq, 1.into());
        assert!((g.value - two_pi).abs() < 1e-12);
        let g = spectral_gap(&v(0, 2, 0), &v(0, 0, 1), &1.into()).unwrap();
        assert_eq!(g.dual_min_sq, FieldScalar::from_ratio(1, 4));
        assert!((g.value - std::f64::consts::PI).abs() < 1e-12);
        let t = FieldScalar::from_ratio(3, 7);
        let g = spectral_gap(&v(0, 1, 0), &v(0, 0, 1), &t).unwrap();
        assert_eq!(g.dual_min_sq, t.square());
        assert!(spectral_gap(&v(0, 1, 0), &v(0, 2, 0), &1.into()).is_err());
    }

    #[test]
    fn affine_composition_law() {
        let a = AffineIsom::new(Mat3::diag(1, -1, -1), v(1, 0, 1).scale(&FieldScalar::from_ratio(1, 2)));
        let b = AffineIsom::new(Mat3::diag(-1, 1, -1), v(0, 1, 0).scale(&FieldScalar::from_ratio(1, 2)));
        let x = v(3, -2, 5);
        assert_eq!(a.compose(&b).apply(&x), a.apply(&b.apply(&x)));
        assert_eq!(a.compose(&a.inverse().unwrap()), AffineIsom::identity());
    }

    #[test]
    fn lattice_serializes_as_rational_matrix() {
        let l = LatticeIm::standard();
        let json = serde_json::to_string(&l).unwrap();
        assert_eq!(json, r#"[["1","0","0"],["0","1","0"],["0","0","1"]]"#);
        let back: LatticeIm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, l);
    }
}
