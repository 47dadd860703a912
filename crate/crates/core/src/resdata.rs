//! Admissibility of resolution parameters: the Δ° conditions, lifting of
//! normalizer actions, the six parameter families for the Table-1 strata and
//! bounded enumeration of their rational members.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldScalar;
use crate::lattices::{AffineIsom, BieberbachGroup, ImVec, LatticeIm, Mat3};
use crate::quaternions::{alpha_sign, generate_subgroup, AlphaSign, FiniteSubgroup, GroupLabel, Quat, RotationH};
use crate::rootsys::{in_delta_circ, mckay_automorphism, weyl_canonical, CartanWeight, RootLabel, RootSystem};

/// A resolution parameter: Gibbons–Hawking points or a Kronheimer weight.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Zeta {
    Gh { points: Vec<ImVec> },
    Kronheimer { root_system: RootLabel, weight: CartanWeight },
}

impl Zeta {
    pub fn gh(points: Vec<ImVec>) -> Self {
        Zeta::Gh { points }
    }

    /// GH points `n·i` for the given integers.
    pub fn gh_along_i(coeffs: &[i64]) -> Self {
        Zeta::gh(coeffs.iter().map(|&c| ImVec::from_ints(c, 0, 0)).collect())
    }

    pub fn kronheimer(root_system: RootLabel, weight: CartanWeight) -> Self {
        Zeta::Kronheimer { root_system, weight }
    }

    pub fn points(&self) -> Result<&[ImVec]> {
        match self {
            Zeta::Gh { points } => Ok(points),
            Zeta::Kronheimer { .. } => Err(Error::WrongKind("expected Gibbons–Hawking points".into())),
        }
    }

    pub fn is_gh(&self) -> bool {
        matches!(self, Zeta::Gh { .. })
    }

    /// The A_{N−1} weight with the same wall structure as a GH parameter.
    pub fn as_weight(&self) -> (RootSystem, CartanWeight) {
        match self {
            Zeta::Gh { points } => (
                RootSystem::build(RootLabel::A(points.len().max(2) - 1)),
                CartanWeight::new(points.clone()),
            ),
            Zeta::Kronheimer { root_system, weight } => (RootSystem::build(*root_system), weight.clone()),
        }
    }

    /// Multiset-sorted points (GH) or the Weyl-canonical weight (Kronheimer).
    pub fn canonical(&self) -> Result<Zeta> {
        match self {
            Zeta::Gh { points } => {
                let mut p = points.clone();
                p.sort();
                Ok(Zeta::gh(p))
            }
            Zeta::Kronheimer { root_system, weight } => {
                let phi = RootSystem::build(*root_system);
                Ok(Zeta::kronheimer(*root_system, weyl_canonical(weight, &phi)?))
            }
        }
    }
}

/// A stratum: its orbifold group, Bieberbach group and chosen parameter.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolutionSpec {
    pub gamma_label: GroupLabel,
    pub bieberbach: BieberbachGroup,
    pub zeta: Zeta,
    pub row: Option<u8>,
}

impl ResolutionSpec {
    pub fn validate(&self) -> Result<()> {
        match (&self.zeta, self.gamma_label) {
            (Zeta::Gh { points }, GroupLabel::Cyclic(n)) if points.len() == n as usize => Ok(()),
            (Zeta::Kronheimer { root_system, .. }, label) if RootLabel::for_group(label).ok() == Some(*root_system) => Ok(()),
            _ => Err(Error::WrongKind(format!("parameter kind does not match {}", self.gamma_label))),
        }
    }
}

fn sum(points: &[ImVec]) -> ImVec {
    points.iter().fold(ImVec::zero(), |acc, p| &acc + p)
}

/// Pairwise distinct points summing to zero.
pub fn gh_admissible(zeta: &Zeta) -> Result<bool> {
    let p = zeta.points()?;
    let distinct = p.iter().collect::<BTreeSet<_>>().len() == p.len();
    Ok(distinct && sum(p).is_zero())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftMode {
    /// `α_R·Λ²₊R ζ = ζ`.
    Strict,
    /// `s·Λ²₊R ζ = ζ` for some sign `s`.
    Permissive,
}

fn multiset_eq(a: &[ImVec], b: &[ImVec]) -> bool {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort();
    y.sort();
    x == y
}

fn scaled(m: &Mat3, s: i64) -> Mat3 {
    if s == 1 {
        m.clone()
    } else {
        m.neg()
    }
}

/// Whether the action of `R` lifts to the resolution with parameter `ζ`.
pub fn lift_condition(r: &RotationH, gamma: &FiniteSubgroup, zeta: &Zeta, mode: LiftMode) -> Result<bool> {
    if !gamma.normalizes(r) {
        return Err(Error::NotInNormalizer);
    }
    let lam = r.lambda2_plus();
    match zeta {
        Zeta::Gh { points } => {
            if points.len() != gamma.order() {
                return Err(Error::WrongKind(format!("{} points for {}", points.len(), gamma.label)));
            }
            let image = |s: i64| -> Vec<ImVec> { points.iter().map(|p| scaled(&lam, s).apply(p)).collect() };
            match mode {
                LiftMode::Strict => {
                    let alpha = match alpha_sign(r, gamma)? {
                        AlphaSign::Plus => 1,
                        AlphaSign::Minus => -1,
                        AlphaSign::NotInNormalizer => return Err(Error::NotInNormalizer),
                    };
                    Ok(multiset_eq(&image(alpha), points))
                }
                LiftMode::Permissive => Ok([1, -1].iter().any(|&s| multiset_eq(&image(s), points))),
            }
        }
        Zeta::Kronheimer { root_system, weight } => {
            let phi = RootSystem::build(*root_system);
            let ad = mckay_automorphism(r, gamma)?;
            let moved = ad.apply_weight(&weight.rotate(&lam));
            Ok(weyl_canonical(&moved, &phi)? == weyl_canonical(weight, &phi)?)
        }
    }
}

/// The base action of the lifted isometry: `ε·Λ²₊R` with `ε` from
/// [`RotationH::fiber_sign`].
pub fn base_action(r: &RotationH) -> Option<Mat3> {
    r.fiber_sign().map(|e| scaled(&r.lambda2_plus(), e as i64))
}

/// The fiber-sign form of the lifting condition for GH parameters:
/// `ε·Λ²₊R` maps the point set to itself.
pub fn lift_condition_fiber(r: &RotationH, zeta: &Zeta) -> Result<Option<bool>> {
    let p = zeta.points()?;
    Ok(base_action(r).map(|m| {
        let image: Vec<ImVec> = p.iter().map(|x| m.apply(x)).collect();
        multiset_eq(&image, p)
    }))
}

// Rotations of the families, as maps of Im H.
fn r_plus(z: &ImVec) -> ImVec {
    ImVec::new(z.i.clone(), -&z.j, -&z.k)
}
fn r_minus(z: &ImVec) -> ImVec {
    ImVec::new(-&z.i, z.j.clone(), -&z.k)
}
fn r_plus_minus(z: &ImVec) -> ImVec {
    ImVec::new(-&z.i, -&z.j, z.k.clone())
}
fn neg_r_minus(z: &ImVec) -> ImVec {
    -r_minus(z)
}
fn neg_r_plus_minus(z: &ImVec) -> ImVec {
    -r_plus_minus(z)
}

fn on_i_axis(z: &ImVec) -> bool {
    z.j.is_zero() && z.k.is_zero()
}
fn perp_j(z: &ImVec) -> bool {
    z.j.is_zero()
}
/// `(Rj)^⊥ ∪ (Rk)^⊥`.
fn in_p(z: &ImVec) -> bool {
    z.j.is_zero() || z.k.is_zero()
}
fn p_off_i(z: &ImVec) -> bool {
    in_p(z) && !on_i_axis(z)
}

fn nonzero_count(z: &ImVec) -> usize {
    z.coords().iter().filter(|x| !x.is_zero()).count()
}
/// On a coordinate axis `Ri ∪ Rj ∪ Rk` (including 0).
fn on_axis(z: &ImVec) -> bool {
    nonzero_count(z) <= 1
}
/// In a coordinate plane but on no coordinate axis.
fn plane_off_axes(z: &ImVec) -> bool {
    nonzero_count(z) == 2
}
fn off_planes(z: &ImVec) -> bool {
    nonzero_count(z) == 3
}

/// `w = t·z` for some real `t ∉ {0, −1}` and `z ≠ 0`; returns `t`.
fn ratio(z: &ImVec, w: &ImVec) -> Option<FieldScalar> {
    if z.is_zero() || !z.is_parallel(w) {
        return None;
    }
    Some(&w.dot(z) / &z.norm_sq())
}

fn t_allowed(t: &FieldScalar) -> bool {
    !t.is_zero() && *t != FieldScalar::from_int(-1)
}

type Branch = fn(&[ImVec]) -> bool;

fn row_branches(row: u8) -> &'static [Branch] {
    const R1: &[Branch] = &[
        |t| p_off_i(&t[0]) && t[1] == r_plus(&t[0]),
        |t| on_i_axis(&t[1]) && t[0] == -&t[1],
    ];
    const R2: &[Branch] = &[
        |t| perp_j(&t[0]) && !perp_j(&t[1]) && t[2] == neg_r_minus(&t[1]),
        |t| t.iter().all(perp_j),
    ];
    const R3: &[Branch] = &[
        |t| on_i_axis(&t[0]) && p_off_i(&t[1]) && t[2] == r_plus(&t[1]),
        |t| t.iter().all(on_i_axis),
    ];
    const R4: &[Branch] = &[
        |t| !in_p(&t[0]) && t[1] == r_plus(&t[0]) && t[2] == neg_r_minus(&t[0]) && t[3] == neg_r_plus_minus(&t[0]),
        |t| p_off_i(&t[0]) && p_off_i(&t[2]) && t[1] == r_plus(&t[0]) && t[3] == r_plus(&t[2]),
        |t| on_i_axis(&t[0]) && on_i_axis(&t[1]) && p_off_i(&t[2]) && t[3] == r_plus(&t[2]),
        |t| t.iter().all(on_i_axis),
    ];
    const R5: &[Branch] = &[
        |t| {
            p_off_i(&t[0])
                && t[1] == r_plus(&t[0])
                && !in_p(&t[2])
                && t[3] == r_plus(&t[2])
                && t[4] == neg_r_minus(&t[2])
                && t[5] == neg_r_plus_minus(&t[2])
        },
        // the displayed condition reads "ζ₂ ∉ P", contradicting ζ₂ ∈ Ri; the
        // free vector of the orbit block is ζ₃
        |t| {
            on_i_axis(&t[0])
                && on_i_axis(&t[1])
                && !in_p(&t[2])
                && t[3] == r_plus(&t[2])
                && t[4] == neg_r_minus(&t[2])
                && t[5] == neg_r_plus_minus(&t[2])
        },
        |t| {
            p_off_i(&t[0])
                && p_off_i(&t[2])
                && p_off_i(&t[4])
                && t[1] == r_plus(&t[0])
                && t[3] == r_plus(&t[2])
                && t[5] == r_plus(&t[4])
        },
        |t| {
            on_i_axis(&t[0])
                && on_i_axis(&t[1])
                && p_off_i(&t[2])
                && p_off_i(&t[4])
                && t[3] == r_plus(&t[2])
                && t[5] == r_plus(&t[4])
        },
        |t| t[..4].iter().all(on_i_axis) && p_off_i(&t[4]) && t[5] == r_plus(&t[4]),
        |t| t.iter().all(on_i_axis),
    ];
    match row {
        1 => R1,
        2 => R2,
        3 => R3,
        4 => R4,
        5 => R5,
        _ => &[],
    }
}

fn row6_rotations(z: &ImVec) -> [ImVec; 3] {
    [r_plus(z), r_minus(z), r_plus_minus(z)]
}

fn row6_branch(t: &[ImVec]) -> bool {
    if !t[0].is_zero() {
        return false;
    }
    let b1 = off_planes(&t[1]) && t[2] == r_plus(&t[1]) && t[3] == r_minus(&t[1]) && t[4] == r_plus_minus(&t[1]);
    let b2 = plane_off_axes(&t[1])
        && plane_off_axes(&t[3])
        && row6_rotations(&t[1]).contains(&t[2])
        && row6_rotations(&t[3]).contains(&t[4]);
    // the third family fixes ζ₂ by a rotation R_b (printed as R_a)
    let b3 = on_axis(&t[1])
        && ratio(&t[1], &t[2]).is_some_and(|x| t_allowed(&x))
        && plane_off_axes(&t[3])
        && row6_rotations(&t[3]).contains(&t[4]);
    let b4 = on_axis(&t[1])
        && on_axis(&t[3])
        && match (ratio(&t[1], &t[2]), ratio(&t[3], &t[4])) {
            (Some(t1), Some(t2)) => t_allowed(&(&t1 * &t2)),
            _ => false,
        };
    b1 || b2 || b3 || b4
}

/// All 1920 elements of W(D5) applied to a 5-tuple.
fn d5_orbit(entries: &[ImVec]) -> impl Iterator<Item = Vec<ImVec>> + '_ {
    (0..5usize).permutations(5).flat_map(move |perm| {
        (0u32..32).filter(|m| m.count_ones() % 2 == 0).map(move |mask| {
            perm.iter()
                .enumerate()
                .map(|(slot, &src)| {
                    if mask & (1 << slot) != 0 {
                        -&entries[src]
                    } else {
                        entries[src].clone()
                    }
                })
                .collect()
        })
    })
}

pub const ROW_ORDERS: [usize; 5] = [2, 3, 3, 4, 6];

/// Membership in the parameter family of a Table-1 row.
pub fn family_member(row: u8, zeta: &Zeta) -> Result<bool> {
    match (row, zeta) {
        (1..=5, Zeta::Gh { points }) => {
            let n = ROW_ORDERS[row as usize - 1];
            if points.len() != n {
                return Err(Error::InconsistentRow {
                    row,
                    detail: format!("{} points (expected {n})", points.len()),
                });
            }
            if !gh_admissible(zeta)? {
                return Ok(false);
            }
            let branches = row_branches(row);
            Ok(points
                .iter()
                .cloned()
                .permutations(n)
                .any(|t| branches.iter().any(|b| b(&t))))
        }
        (6, Zeta::Kronheimer { root_system: RootLabel::D(5), weight }) => {
            let phi = RootSystem::build(RootLabel::D(5));
            if !in_delta_circ(weight, &phi)? {
                return Ok(false);
            }
            Ok(d5_orbit(&weight.entries).any(|t| row6_branch(&t)))
        }
        _ => Err(Error::InconsistentRow {
            row,
            detail: "parameter kind".into(),
        }),
    }
}

/// Orbifold group and Bieberbach group of a Table-1 row.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub row: u8,
    pub gamma: GroupLabel,
    pub group: BieberbachGroup,
}

/// `(R₊, (i+k)/2)` acting on the fiber by `q ↦ iqi`.
pub fn g_plus() -> (AffineIsom, RotationH) {
    let t = ImVec::from_ints(1, 0, 1).scale(&FieldScalar::from_ratio(1, 2));
    (
        AffineIsom::new(Mat3::diag(1, -1, -1), t),
        RotationH::sandwich(Quat::i()).expect("unit"),
    )
}

/// `(R₋, j/2)` acting on the fiber by `q ↦ jqj`.
pub fn g_minus() -> (AffineIsom, RotationH) {
    let t = ImVec::from_ints(0, 1, 0).scale(&FieldScalar::from_ratio(1, 2));
    (
        AffineIsom::new(Mat3::diag(-1, 1, -1), t),
        RotationH::sandwich(Quat::j()).expect("unit"),
    )
}

pub fn table_row(row: u8) -> Result<TableRow> {
    let gamma = match row {
        1 => GroupLabel::Cyclic(2),
        2 | 3 => GroupLabel::Cyclic(3),
        4 => GroupLabel::Cyclic(4),
        5 => GroupLabel::Cyclic(6),
        6 => GroupLabel::Dicyclic(3),
        _ => return Err(Error::InvalidInput(format!("row {row} is not in 1..=6"))),
    };
    let mut group = BieberbachGroup::lattice_only(LatticeIm::standard());
    if row != 2 {
        let (g, f) = g_plus();
        group = group.with_generator(g, f);
    }
    let (g, f) = g_minus();
    group = group.with_generator(g, f);
    Ok(TableRow { row, gamma, group })
}

impl TableRow {
    pub fn subgroup(&self) -> FiniteSubgroup {
        generate_subgroup(self.gamma).expect("table groups are exact")
    }
}

type P3 = [i64; 3];

fn box_vectors(h: i64, keep: impl Fn(&P3) -> bool) -> Vec<P3> {
    let mut out = Vec::new();
    for a in -h..=h {
        for b in -h..=h {
            for c in -h..=h {
                let v = [a, b, c];
                if keep(&v) {
                    out.push(v);
                }
            }
        }
    }
    out
}

fn rp(v: &P3) -> P3 {
    [v[0], -v[1], -v[2]]
}
fn rm(v: &P3) -> P3 {
    [-v[0], v[1], -v[2]]
}
fn rpm(v: &P3) -> P3 {
    [-v[0], -v[1], v[2]]
}
fn neg(v: &P3) -> P3 {
    [-v[0], -v[1], -v[2]]
}
fn nz(v: &P3) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

fn gh_key(points: &[P3]) -> Option<Vec<P3>> {
    let s = points.iter().fold([0i64; 3], |a, p| [a[0] + p[0], a[1] + p[1], a[2] + p[2]]);
    if s != [0, 0, 0] {
        return None;
    }
    let mut k = points.to_vec();
    k.sort();
    k.windows(2).all(|w| w[0] != w[1]).then_some(k)
}

/// Canonical key of a D5 integer weight: entries normalized to be
/// lexicographically positive and sorted descending; with no zero entry and
/// an odd number of flips, the smallest entry keeps a minus sign.
fn d5_key(entries: &[P3]) -> Option<Vec<P3>> {
    for (a, x) in entries.iter().enumerate() {
        for y in &entries[a + 1..] {
            if x == y || *x == neg(y) {
                return None;
            }
        }
    }
    let mut flips = 0;
    let mut k: Vec<P3> = entries
        .iter()
        .map(|v| {
            if *v < [0, 0, 0] {
                flips += 1;
                neg(v)
            } else {
                *v
            }
        })
        .collect();
    k.sort_by(|a, b| b.cmp(a));
    if flips % 2 == 1 && !k.contains(&[0, 0, 0]) {
        let last = k.len() - 1;
        k[last] = neg(&k[last]);
    }
    Some(k)
}

fn gh_candidates(row: u8, h: i64) -> BTreeSet<Vec<P3>> {
    let i_axis = box_vectors(h, |v| v[1] == 0 && v[2] == 0);
    let p_off_i = box_vectors(h, |v| (v[1] == 0 || v[2] == 0) && !(v[1] == 0 && v[2] == 0));
    let not_p = box_vectors(h, |v| v[1] != 0 && v[2] != 0);
    let perp_j = box_vectors(h, |v| v[1] == 0);
    let not_perp_j = box_vectors(h, |v| v[1] != 0);
    let nrm = |v: &P3| neg(&rm(v));
    let nrpm = |v: &P3| neg(&rpm(v));
    let mut out = BTreeSet::new();
    let mut push = |pts: Vec<P3>| {
        if let Some(k) = gh_key(&pts) {
            out.insert(k);
        }
    };
    match row {
        1 => {
            for z in &p_off_i {
                push(vec![*z, rp(z)]);
            }
            for z in &i_axis {
                push(vec![neg(z), *z]);
            }
        }
        2 => {
            for z1 in &perp_j {
                for z2 in &not_perp_j {
                    push(vec![*z1, *z2, nrm(z2)]);
                }
            }
            for (a, z1) in perp_j.iter().enumerate() {
                for z2 in &perp_j[a + 1..] {
                    push(vec![*z1, *z2, neg(&[z1[0] + z2[0], 0, z1[2] + z2[2]])]);
                }
            }
        }
        3 => {
            for z1 in &i_axis {
                for z2 in &p_off_i {
                    push(vec![*z1, *z2, rp(z2)]);
                }
            }
            for z1 in &i_axis {
                for z2 in &i_axis {
                    push(vec![*z1, *z2, neg(&[z1[0] + z2[0], 0, 0])]);
                }
            }
        }
        4 => {
            for z in &not_p {
                push(vec![*z, rp(z), nrm(z), nrpm(z)]);
            }
            for z1 in &p_off_i {
                for z2 in &p_off_i {
                    push(vec![*z1, rp(z1), *z2, rp(z2)]);
                }
            }
            for z1 in &i_axis {
                for z2 in &i_axis {
                    for z3 in &p_off_i {
                        push(vec![*z1, *z2, *z3, rp(z3)]);
                    }
                }
            }
            for z1 in &i_axis {
                for z2 in &i_axis {
                    for z3 in &i_axis {
                        push(vec![*z1, *z2, *z3, neg(&[z1[0] + z2[0] + z3[0], 0, 0])]);
                    }
                }
            }
        }
        5 => {
            for z1 in &p_off_i {
                for z2 in &not_p {
                    push(vec![*z1, rp(z1), *z2, rp(z2), nrm(z2), nrpm(z2)]);
                }
            }
            for z1 in &i_axis {
                for z2 in &i_axis {
                    for z3 in &not_p {
                        push(vec![*z1, *z2, *z3, rp(z3), nrm(z3), nrpm(z3)]);
                    }
                }
            }
            // three R₊-pairs: the i-components must cancel, so z3 is determined up to its j/k part
            for z1 in &p_off_i {
                for z2 in &p_off_i {
                    for z3 in p_off_i.iter().filter(|z3| z3[0] == -z1[0] - z2[0]) {
                        push(vec![*z1, rp(z1), *z2, rp(z2), *z3, rp(z3)]);
                    }
                }
            }
            for z1 in &i_axis {
                for z2 in &i_axis {
                    for z3 in &p_off_i {
                        for z4 in p_off_i.iter().filter(|z4| 2 * z4[0] == -z1[0] - z2[0] - 2 * z3[0]) {
                            push(vec![*z1, *z2, *z3, rp(z3), *z4, rp(z4)]);
                        }
                    }
                }
            }
            for c in (0..4).map(|_| i_axis.iter()).multi_cartesian_product() {
                let s: i64 = c.iter().map(|z| z[0]).sum();
                for z5 in p_off_i.iter().filter(|z5| 2 * z5[0] == -s) {
                    let mut pts: Vec<P3> = c.iter().map(|z| **z).collect();
                    pts.extend([*z5, rp(z5)]);
                    push(pts);
                }
            }
            for c in (0..5).map(|_| i_axis.iter()).multi_cartesian_product() {
                let s: i64 = c.iter().map(|z| z[0]).sum();
                let mut pts: Vec<P3> = c.iter().map(|z| **z).collect();
                pts.push([-s, 0, 0]);
                push(pts);
            }
        }
        _ => {}
    }
    out.into_iter()
        .filter(|k| k.iter().all(|p| p.iter().all(|x| x.abs() <= h)))
        .collect()
}

fn d5_candidates(h: i64) -> BTreeSet<Vec<P3>> {
    let off = box_vectors(h, |v| nz(v) == 3);
    let plane = box_vectors(h, |v| nz(v) == 2);
    let axis = box_vectors(h, |v| nz(v) == 1);
    let rots = |v: &P3| [rp(v), rm(v), rpm(v)];
    let same_axis_multiples = |z: &P3| -> Vec<(P3, (i64, i64))> {
        let a = z.iter().position(|&x| x != 0).expect("axis vector");
        (-h..=h)
            .filter(|&w| w != 0)
            .map(|w| {
                let mut v = [0; 3];
                v[a] = w;
                (v, (w, z[a]))
            })
            .collect()
    };
    let mut out = BTreeSet::new();
    let mut push = |e: Vec<P3>| {
        if let Some(k) = d5_key(&e) {
            out.insert(k);
        }
    };
    let zero = [0i64; 3];
    for z in &off {
        push(vec![zero, *z, rp(z), rm(z), rpm(z)]);
    }
    for z1 in &plane {
        for w1 in rots(z1) {
            for z2 in &plane {
                for w2 in rots(z2) {
                    push(vec![zero, *z1, w1, *z2, w2]);
                }
            }
        }
    }
    for z1 in &axis {
        for (w1, (num, den)) in same_axis_multiples(z1) {
            // t = num/den ∉ {0, −1}
            if num == -den {
                continue;
            }
            for z2 in &plane {
                for w2 in rots(z2) {
                    push(vec![zero, *z1, w1, *z2, w2]);
                }
            }
        }
    }
    for z1 in &axis {
        for (w1, (n1, d1)) in same_axis_multiples(z1) {
            for z2 in &axis {
                for (w2, (n2, d2)) in same_axis_multiples(z2) {
                    // t₁t₂ = −1 ⇔ n₁n₂ = −d₁d₂
                    if n1 * n2 == -d1 * d2 {
                        continue;
                    }
                    push(vec![zero, *z1, w1, *z2, w2]);
                }
            }
        }
    }
    out
}

fn to_imvec(p: &P3) -> ImVec {
    ImVec::from_ints(p[0], p[1], p[2])
}

/// Family members with integer coordinates bounded by `height`, one per
/// multiset (rows 1–5) or W(D5)-orbit (row 6), in a fixed order.
pub fn enumerate_admissible(row: u8, height: u32) -> Result<Vec<Zeta>> {
    if !(1..=6).contains(&row) {
        return Err(Error::InvalidInput(format!("row {row} is not in 1..=6")));
    }
    if height == 0 {
        return Ok(Vec::new());
    }
    let zetas = candidates(row, height as i64);
    // generation and the literal predicates are independent transcriptions;
    // keep only what the predicates accept
    let keep: Vec<bool> = zetas
        .par_iter()
        .map(|z| family_member(row, z).unwrap_or(false))
        .collect();
    Ok(zetas.into_iter().zip(keep).filter_map(|(z, k)| k.then_some(z)).collect())
}

fn candidates(row: u8, h: i64) -> Vec<Zeta> {
    if row == 6 {
        d5_candidates(h)
            .into_iter()
            .map(|k| Zeta::kronheimer(RootLabel::D(5), CartanWeight::new(k.iter().map(to_imvec).collect())))
            .collect()
    } else {
        gh_candidates(row, h)
            .into_iter()
            .map(|k| Zeta::gh(k.iter().map(to_imvec).collect()))
            .collect()
    }
}
