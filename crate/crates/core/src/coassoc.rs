//! Model coassociatives `((Rξ₂ + Rξ₃) × Σ)/⟨ξ₂,ξ₃⟩` in flat and resolved
//! orbifolds: hypothesis checks, sphere counting, embedded-versus-cover
//! classification, volumes, the flat calibration residual and the constants
//! certificate for the perturbation step.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{gcd_all, FieldScalar};
use crate::ghspace::{sphere_area, GHConfig, GridSpec, Point};
use crate::lattices::{covolume, is_primitive, AffineIsom, BieberbachGroup, ImVec, Mat3};
use crate::quaternions::{generate_subgroup, FiniteSubgroup, GroupLabel, RotationH};
use crate::resdata::{gh_admissible, Zeta};
use crate::rootsys::{in_delta_circ, mckay_automorphism, weyl_reduce, RootLabel, RootSystem};

/// A holomorphic sphere: a segment between two GH points or a root.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SphereDescriptor {
    GhSegment { start: ImVec, end: ImVec },
    /// Root in the scaled integer coordinates of the parameter's root system.
    KronRoot { root: Vec<i64> },
}

impl SphereDescriptor {
    /// Same sphere, ignoring orientation.
    pub fn same_sphere(&self, other: &Self) -> bool {
        match (self, other) {
            (Self::GhSegment { start: a, end: b }, Self::GhSegment { start: c, end: d }) => {
                (a == c && b == d) || (a == d && b == c)
            }
            (Self::KronRoot { root: a }, Self::KronRoot { root: b }) => {
                a == b || a.iter().zip(b).all(|(x, y)| *x == -*y)
            }
            _ => false,
        }
    }
}

/// Largest exact unit multiple of `v`, or `v` itself when `|v|` leaves the field.
pub fn unit_direction(v: &ImVec) -> ImVec {
    match v.norm_sq().sqrt().and_then(|n| n.inverse().ok()) {
        Some(inv) => v.scale(&inv),
        None => v.clone(),
    }
}

fn group_for_root(label: RootLabel) -> GroupLabel {
    match label {
        RootLabel::A(n) => GroupLabel::Cyclic(n as u32 + 1),
        RootLabel::D(n) => GroupLabel::Dicyclic(n as u32 - 2),
        RootLabel::E6 => GroupLabel::BinaryTetrahedral,
        RootLabel::E7 => GroupLabel::BinaryOctahedral,
        RootLabel::E8 => GroupLabel::BinaryIcosahedral,
    }
}

/// Embedded spheres along a direction, and the nodal (reducible) ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereCount {
    pub embedded: Vec<SphereDescriptor>,
    pub nodal: Vec<SphereDescriptor>,
}

fn open_segment_hits(a: &ImVec, b: &ImVec, p: &ImVec) -> bool {
    let d = b - a;
    let r = p - a;
    if !r.cross(&d).is_zero() {
        return false;
    }
    let s = r.dot(&d);
    s.is_positive() && s < d.norm_sq()
}

fn admissible(zeta: &Zeta) -> Result<bool> {
    match zeta {
        Zeta::Gh { .. } => gh_admissible(zeta),
        Zeta::Kronheimer { root_system, weight } => in_delta_circ(weight, &RootSystem::build(*root_system)),
    }
}

/// `I_ξ̂`-holomorphic spheres of the resolution with parameter `ζ`.
pub fn count_spheres(zeta: &Zeta, xi1_hat: &ImVec) -> Result<SphereCount> {
    if xi1_hat.is_zero() {
        return Err(Error::InvalidInput("direction is zero".into()));
    }
    if !admissible(zeta)? {
        return Err(Error::Inadmissible);
    }
    let mut embedded = Vec::new();
    let mut nodal = Vec::new();
    match zeta {
        Zeta::Gh { points } => {
            for a in points {
                for b in points {
                    if !(b - a).same_direction(xi1_hat) {
                        continue;
                    }
                    let s = SphereDescriptor::GhSegment { start: a.clone(), end: b.clone() };
                    if points.iter().any(|p| open_segment_hits(a, b, p)) {
                        nodal.push(s);
                    } else {
                        embedded.push(s);
                    }
                }
            }
        }
        Zeta::Kronheimer { root_system, weight } => {
            let phi = RootSystem::build(*root_system);
            let value = |r: &[i64]| weight.evaluate(&phi, r);
            for theta in &phi.roots {
                let z = value(theta);
                if !z.same_direction(xi1_hat) {
                    continue;
                }
                let decomposable = phi.roots.iter().any(|t1| {
                    let t2: Vec<i64> = theta.iter().zip(t1).map(|(a, b)| a - b).collect();
                    phi.contains_root(&t2) && value(t1).same_direction(&z) && value(&t2).same_direction(&z)
                });
                let s = SphereDescriptor::KronRoot { root: theta.clone() };
                if decomposable {
                    nodal.push(s);
                } else {
                    embedded.push(s);
                }
            }
        }
    }
    let key = |s: &SphereDescriptor| format!("{s:?}");
    embedded.sort_by_key(key);
    nodal.sort_by_key(key);
    Ok(SphereCount { embedded, nodal })
}

/// Input of the model construction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoassocData {
    pub sphere: SphereDescriptor,
    pub xi1_hat: ImVec,
    pub xi2: ImVec,
    pub xi3: ImVec,
    #[serde(default = "ImVec::zero")]
    pub base_point: ImVec,
    pub group: BieberbachGroup,
    pub zeta: Zeta,
    /// Area of `Σ` when it cannot be computed here (Kronheimer spheres).
    #[serde(default)]
    pub sphere_area: Option<f64>,
}

fn sphere_direction(sphere: &SphereDescriptor, zeta: &Zeta) -> Result<ImVec> {
    match (sphere, zeta) {
        (SphereDescriptor::GhSegment { start, end }, Zeta::Gh { .. }) => Ok(end - start),
        (SphereDescriptor::KronRoot { root }, Zeta::Kronheimer { root_system, weight }) => {
            let phi = RootSystem::build(*root_system);
            if root.len() != phi.ambient_dim {
                return Err(Error::MalformedSphere(format!("root has {} coordinates", root.len())));
            }
            Ok(weight.evaluate(&phi, root))
        }
        _ => Err(Error::MalformedSphere("sphere kind does not match the parameter".into())),
    }
}

impl CoassocData {
    /// Data with `ξ̂₁` read off the sphere and base point `0`.
    pub fn new(sphere: SphereDescriptor, xi2: ImVec, xi3: ImVec, group: BieberbachGroup, zeta: Zeta) -> Result<Self> {
        let dir = sphere_direction(&sphere, &zeta)?;
        Ok(CoassocData {
            sphere,
            xi1_hat: unit_direction(&dir),
            xi2,
            xi3,
            base_point: ImVec::zero(),
            group,
            zeta,
            sphere_area: None,
        })
    }

    fn validate(&self) -> Result<()> {
        let dir = sphere_direction(&self.sphere, &self.zeta)?;
        if dir.is_zero() {
            return Ok(());
        }
        if !dir.same_direction(&self.xi1_hat) {
            return Err(Error::MalformedSphere("xi1_hat does not point along the sphere".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub pass: bool,
    pub witness: String,
}

impl Condition {
    fn new(pass: bool, witness: impl Into<String>) -> Self {
        Condition { pass, witness: witness.into() }
    }
}

pub type Conditions = BTreeMap<String, Condition>;

/// Everything needed to move spheres by fiber rotations.
enum SphereCtx {
    Gh,
    Kron { phi: RootSystem, gamma: FiniteSubgroup, weight: crate::rootsys::CartanWeight },
}

impl SphereCtx {
    fn new(zeta: &Zeta) -> Result<Self> {
        Ok(match zeta {
            Zeta::Gh { .. } => SphereCtx::Gh,
            Zeta::Kronheimer { root_system, weight } => SphereCtx::Kron {
                phi: RootSystem::build(*root_system),
                gamma: generate_subgroup(group_for_root(*root_system))?,
                weight: weight.clone(),
            },
        })
    }
}

/// Image of `Σ` under the lift of a fiber rotation; `None` when the base
/// action is not determined (no fiber sign, or no known diagram automorphism).
/// `forced` replaces the fiber sign in the GH case.
fn sphere_image(
    fiber: &RotationH,
    sphere: &SphereDescriptor,
    ctx: &SphereCtx,
    forced: Option<i8>,
) -> Result<Option<SphereDescriptor>> {
    if fiber.is_identity() {
        return Ok(Some(sphere.clone()));
    }
    match (sphere, ctx) {
        (SphereDescriptor::GhSegment { start, end }, SphereCtx::Gh) => {
            let Some(eps) = fiber.fiber_sign().or(forced) else {
                return Ok(None);
            };
            let lam = fiber.lambda2_plus();
            let m = if eps == 1 { lam } else { lam.neg() };
            Ok(Some(SphereDescriptor::GhSegment { start: m.apply(start), end: m.apply(end) }))
        }
        (SphereDescriptor::KronRoot { root }, SphereCtx::Kron { phi, gamma, weight }) => {
            let Ok(ad) = mckay_automorphism(fiber, gamma) else {
                return Ok(None);
            };
            let lam = fiber.lambda2_plus();
            let moved = ad.apply_weight(&weight.rotate(&lam));
            let (c1, w1) = weyl_reduce(&moved, phi)?;
            let (c0, w0) = weyl_reduce(weight, phi)?;
            if c1.simple_values(phi) != c0.simple_values(phi) {
                return Err(Error::NotApplicable("the action does not lift to this parameter".into()));
            }
            let mut image = phi.apply_word_to_root(&w1, &ad.apply_root(root));
            let back: Vec<usize> = w0.iter().rev().copied().collect();
            image = phi.apply_word_to_root(&back, &image);
            debug_assert_eq!(weight.evaluate(phi, &image), lam.apply(&weight.evaluate(phi, root)));
            Ok(Some(SphereDescriptor::KronRoot { root: image }))
        }
        _ => Err(Error::MalformedSphere("sphere kind does not match the parameter".into())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Relation {
    Same,
    Meets,
    Disjoint,
}

fn segments_meet(p0: &ImVec, p1: &ImVec, q0: &ImVec, q1: &ImVec) -> bool {
    let d1 = p1 - p0;
    let d2 = q1 - q0;
    let r = q0 - p0;
    let n = d1.cross(&d2);
    if n.is_zero() {
        if !r.cross(&d1).is_zero() {
            return false;
        }
        let len = d1.norm_sq();
        let s0 = &r.dot(&d1) / &len;
        let s1 = &(q1 - p0).dot(&d1) / &len;
        let (lo, hi) = if s0 <= s1 { (s0, s1) } else { (s1, s0) };
        return lo <= FieldScalar::one() && !hi.is_negative();
    }
    if !r.dot(&n).is_zero() {
        return false;
    }
    let nn = n.norm_sq();
    let s = &r.cross(&d2).dot(&n) / &nn;
    let u = &r.cross(&d1).dot(&n) / &nn;
    let unit = |x: &FieldScalar| !x.is_negative() && *x <= FieldScalar::one();
    unit(&s) && unit(&u)
}

fn relation(a: &SphereDescriptor, b: &SphereDescriptor, ctx: &SphereCtx) -> Option<Relation> {
    if a.same_sphere(b) {
        return Some(Relation::Same);
    }
    match (a, b, ctx) {
        (
            SphereDescriptor::GhSegment { start: p0, end: p1 },
            SphereDescriptor::GhSegment { start: q0, end: q1 },
            _,
        ) => Some(if segments_meet(p0, p1, q0, q1) { Relation::Meets } else { Relation::Disjoint }),
        (SphereDescriptor::KronRoot { root: x }, SphereDescriptor::KronRoot { root: y }, SphereCtx::Kron { phi, weight, .. }) => {
            if !phi.inner(x, y).is_zero() {
                Some(Relation::Meets)
            } else if weight.evaluate(phi, x).is_parallel(&weight.evaluate(phi, y)) {
                // distinct curves for one complex structure with zero intersection number
                Some(Relation::Disjoint)
            } else {
                None
            }
        }
        _ => None,
    }
}

fn lattice_fiber(group: &BieberbachGroup, v: &ImVec) -> Result<RotationH> {
    let c = group.lattice.integer_coordinates(v)?;
    let mut f = RotationH::identity();
    for (gen, m) in group.lattice_fibers.iter().zip(c.iter()) {
        let base = if m.is_negative() { gen.inverse() } else { gen.clone() };
        let times: u64 = m.abs().try_into().map_err(|_| Error::InvalidInput("lattice coordinate too large".into()))?;
        for _ in 0..times.min(64) {
            f = f.compose(&base);
        }
    }
    Ok(f)
}

/// Hypotheses of the model construction.
pub fn check_assumption(data: &CoassocData) -> Result<Conditions> {
    data.validate()?;
    let mut out = Conditions::new();
    let sphere_ok = match (&data.sphere, &data.zeta) {
        (SphereDescriptor::GhSegment { start, end }, Zeta::Gh { points }) => {
            if !points.contains(start) || !points.contains(end) || start == end {
                Condition::new(false, "endpoints are not two distinct monopoles")
            } else if let Some(p) = points.iter().find(|p| open_segment_hits(start, end, p)) {
                Condition::new(false, format!("segment passes through {p}"))
            } else {
                Condition::new(true, "open segment avoids Z_ζ")
            }
        }
        (SphereDescriptor::KronRoot { root }, Zeta::Kronheimer { root_system, weight }) => {
            let phi = RootSystem::build(*root_system);
            if !phi.contains_root(root) {
                Condition::new(false, "not a root")
            } else if weight.evaluate(&phi, root).is_zero() {
                Condition::new(false, "ζ(θ) = 0")
            } else {
                Condition::new(true, format!("ζ(θ) = {}", weight.evaluate(&phi, root)))
            }
        }
        _ => return Err(Error::MalformedSphere("sphere kind does not match the parameter".into())),
    };
    out.insert("i".into(), sphere_ok);

    let lat = &data.group.lattice;
    let ortho = data.xi2.dot(&data.xi1_hat).is_zero() && data.xi3.dot(&data.xi1_hat).is_zero();
    let indep = !data.xi2.cross(&data.xi3).is_zero();
    let in_lat = lat.contains(&data.xi2) && lat.contains(&data.xi3);
    let witness = format!(
        "⟨ξ₂,ξ̂₁⟩ = {}, ⟨ξ₃,ξ̂₁⟩ = {}, independent: {indep}, in Λ: {in_lat}",
        data.xi2.dot(&data.xi1_hat),
        data.xi3.dot(&data.xi1_hat)
    );
    out.insert("ii".into(), Condition::new(ortho && indep && in_lat, witness));

    let invariance = if !in_lat {
        Condition::new(false, "ξ₂, ξ₃ are not lattice vectors")
    } else if data.group.lattice_acts_trivially() {
        Condition::new(true, "lattice acts trivially on the fiber")
    } else {
        let ctx = SphereCtx::new(&data.zeta)?;
        let mut verdict = Condition::new(true, "ρ(ξ₂), ρ(ξ₃) preserve Σ");
        for v in [&data.xi2, &data.xi3] {
            let f = lattice_fiber(&data.group, v)?;
            match sphere_image(&f, &data.sphere, &ctx, None)? {
                Some(img) if img.same_sphere(&data.sphere) => {}
                Some(img) => verdict = Condition::new(false, format!("ρ({v}) moves Σ to {img:?}")),
                None => verdict = Condition::new(false, format!("undecidable: base action of ρ({v}) unknown")),
            }
        }
        verdict
    };
    out.insert("ii_prime".into(), invariance);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Embedded,
    CoverOfEmbedded,
    ImmersedNonCovering,
    Indeterminate,
}

/// Outcome of [`classify_embedding`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub status: Status,
    pub cover_degree: Option<u64>,
    /// Conditions `iii` (primitivity) and `iv` (no extra self-intersections).
    pub conditions: Conditions,
    /// For indeterminate verdicts: the verdicts under each fiber-sign convention.
    pub candidates: Vec<(Status, Option<u64>)>,
    pub reason: Option<String>,
}

/// An element of `G/Λ` with its rotational part, translation mod `Λ` and
/// fiber action.
#[derive(Clone, Debug)]
struct Coset {
    isom: AffineIsom,
    fiber: RotationH,
}

fn reduce_mod_lattice(group: &BieberbachGroup, t: &ImVec) -> ImVec {
    let c = group.lattice.coordinates(t);
    let frac = |x: &FieldScalar| x - &FieldScalar::from_rational(x.floor().into());
    let basis = group.lattice.basis();
    let cs = c.coords();
    let mut out = ImVec::zero();
    for (b, x) in basis.iter().zip(cs) {
        out = &out + &b.scale(&frac(x));
    }
    out
}

const MAX_COSETS: usize = 512;

fn cosets(group: &BieberbachGroup) -> Result<Vec<Coset>> {
    let mut out = vec![Coset { isom: AffineIsom::identity(), fiber: RotationH::identity() }];
    let mut frontier = 0;
    while frontier < out.len() {
        let cur = out[frontier].clone();
        frontier += 1;
        for g in &group.extra_generators {
            let isom = cur.isom.compose(&g.isom);
            let isom = AffineIsom::new(isom.rotation.clone(), reduce_mod_lattice(group, &isom.translation));
            if !out.iter().any(|c| c.isom == isom) {
                out.push(Coset { isom, fiber: cur.fiber.compose(&g.fiber) });
                if out.len() > MAX_COSETS {
                    return Err(Error::InvalidInput("group is not crystallographic (too many cosets)".into()));
                }
            }
        }
    }
    Ok(out)
}

fn big_to_scalar(n: &BigInt) -> FieldScalar {
    FieldScalar::from_rational(n.clone().into())
}

struct PlaneData {
    /// Integer normal functional on lattice coordinates, divided by its content.
    nu: [FieldScalar; 3],
    normal: ImVec,
    lattice_index: BigInt,
}

impl PlaneData {
    fn new(data: &CoassocData) -> Result<Self> {
        let lat = &data.group.lattice;
        let u = lat.integer_coordinates(&data.xi2)?;
        let w = lat.integer_coordinates(&data.xi3)?;
        let cross = [
            &u[1] * &w[2] - &u[2] * &w[1],
            &u[2] * &w[0] - &u[0] * &w[2],
            &u[0] * &w[1] - &u[1] * &w[0],
        ];
        let g = gcd_all(&cross).abs();
        if g.is_zero() {
            return Err(Error::DegenerateLattice);
        }
        Ok(PlaneData {
            nu: std::array::from_fn(|i| big_to_scalar(&(&cross[i] / &g))),
            normal: data.xi2.cross(&data.xi3),
            lattice_index: g,
        })
    }

    /// Whether some element of the coset `(R, t + Λ)` maps the plane through
    /// `q` onto itself (given that `R` preserves its direction).
    fn coset_preserves(&self, data: &CoassocData, isom: &AffineIsom) -> bool {
        let q = &data.base_point;
        let d = &isom.apply(q) - q;
        let c = data.group.lattice.coordinates(&d);
        let value = c.coords().iter().zip(&self.nu).fold(FieldScalar::zero(), |acc, (x, n)| &acc + &(*x * n));
        value.as_integer().is_some()
    }

    fn direction_preserved(&self, r: &Mat3) -> bool {
        r.apply(&self.normal).is_parallel(&self.normal)
    }
}

fn in_span_z(v: &ImVec, a: &ImVec, b: &ImVec) -> bool {
    // v = x a + y b with integers x, y
    let n = a.cross(b);
    if !v.dot(&n).is_zero() {
        return false;
    }
    let nn = n.norm_sq();
    let x = &v.cross(b).dot(&n) / &nn;
    let y = &a.cross(v).dot(&n) / &nn;
    x.as_integer().is_some() && y.as_integer().is_some()
}

/// Embedded, cover of an embedded submanifold, or neither.
pub fn classify_embedding(data: &CoassocData) -> Result<Classification> {
    let conds = check_assumption(data)?;
    if let Some((id, c)) = conds.iter().find(|(_, c)| !c.pass) {
        return Err(Error::InvalidInput(format!("condition {id} fails: {}", c.witness)));
    }
    let mut primitive = Conditions::new();
    let prim = is_primitive(&data.xi2, &data.group.lattice)? && is_primitive(&data.xi3, &data.group.lattice)?;
    primitive.insert("iii".into(), Condition::new(prim, if prim { "ξ₂, ξ₃ primitive" } else { "not primitive" }));
    if !data.group.lattice_acts_trivially() {
        return Ok(Classification {
            status: Status::Indeterminate,
            cover_degree: None,
            conditions: primitive,
            candidates: Vec::new(),
            reason: Some("nontrivial lattice fiber action".into()),
        });
    }
    let ctx = SphereCtx::new(&data.zeta)?;
    match classify_with(data, &ctx, None)? {
        Some(mut c) => {
            c.conditions.extend(primitive);
            Ok(c)
        }
        None => {
            let mut candidates = Vec::new();
            for sign in [1i8, -1] {
                match classify_with(data, &ctx, Some(sign))? {
                    Some(c) => candidates.push((c.status, c.cover_degree)),
                    None => candidates.push((Status::Indeterminate, None)),
                }
            }
            if matches!(data.zeta, Zeta::Gh { .. }) && candidates[0] == candidates[1] {
                let mut c = classify_with(data, &ctx, Some(1))?.expect("decided above");
                c.conditions.extend(primitive);
                c.reason = Some("fiber sign undefined; both conventions agree".into());
                return Ok(c);
            }
            Ok(Classification {
                status: Status::Indeterminate,
                cover_degree: None,
                conditions: primitive,
                candidates: if matches!(data.zeta, Zeta::Gh { .. }) { candidates } else { Vec::new() },
                reason: Some("base action of a fiber rotation is not determined".into()),
            })
        }
    }
}

fn classify_with(data: &CoassocData, ctx: &SphereCtx, forced: Option<i8>) -> Result<Option<Classification>> {
    let plane = PlaneData::new(data)?;
    let mut stabilizing = 0u64;
    let mut bad: Vec<String> = Vec::new();
    let mut normal = true;
    for coset in cosets(&data.group)? {
        let Some(image) = sphere_image(&coset.fiber, &data.sphere, ctx, forced)? else {
            return Ok(None);
        };
        let Some(rel) = relation(&data.sphere, &image, ctx) else {
            return Ok(None);
        };
        let r = &coset.isom.rotation;
        if plane.direction_preserved(r) {
            if !plane.coset_preserves(data, &coset.isom) {
                continue;
            }
            match rel {
                Relation::Same => {
                    stabilizing += 1;
                    if !(in_span_z(&r.apply(&data.xi2), &data.xi2, &data.xi3)
                        && in_span_z(&r.apply(&data.xi3), &data.xi2, &data.xi3))
                    {
                        normal = false;
                    }
                }
                Relation::Meets => bad.push(format!("{:?} preserves the plane and moves Σ onto a meeting sphere", coset.isom)),
                Relation::Disjoint => {}
            }
        } else if rel != Relation::Disjoint {
            bad.push(format!("{:?} tilts the plane and ρ(g)Σ meets Σ", coset.isom));
        }
    }
    let index: u64 = (&plane.lattice_index).try_into().unwrap_or(u64::MAX);
    let degree = stabilizing.saturating_mul(index);
    let extra = degree > 1 || !bad.is_empty();
    let mut conditions = Conditions::new();
    let witness = if !bad.is_empty() {
        bad.join("; ")
    } else if degree > 1 {
        format!("stabilizer has index {degree} over ⟨ξ₂,ξ₃⟩")
    } else {
        "only ⟨ξ₂,ξ₃⟩ preserves plane and sphere".into()
    };
    conditions.insert("iv".into(), Condition::new(!extra, witness));
    let status = if !bad.is_empty() || !normal {
        Status::ImmersedNonCovering
    } else if degree == 1 {
        Status::Embedded
    } else {
        Status::CoverOfEmbedded
    };
    Ok(Some(Classification {
        status,
        cover_degree: (status != Status::ImmersedNonCovering).then_some(degree),
        conditions,
        candidates: Vec::new(),
        reason: None,
    }))
}

/// Groups sphere choices (same plane data, same group) whose coassociatives
/// have the same image: `Σ'` is related to `Σ` by an element that preserves
/// the plane.
pub fn distinct_submanifolds(data: &[CoassocData]) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let Some(first) = data.first() else {
        return Ok(classes);
    };
    let ctx = SphereCtx::new(&first.zeta)?;
    let plane = PlaneData::new(first)?;
    let movers: Vec<Coset> = cosets(&first.group)?
        .into_iter()
        .filter(|c| plane.direction_preserved(&c.isom.rotation) && plane.coset_preserves(first, &c.isom))
        .collect();
    'outer: for (idx, d) in data.iter().enumerate() {
        for class in classes.iter_mut() {
            let rep = &data[class[0]];
            for c in &movers {
                if let Some(img) = sphere_image(&c.fiber, &rep.sphere, &ctx, None)? {
                    if img.same_sphere(&d.sphere) {
                        class.push(idx);
                        continue 'outer;
                    }
                }
            }
        }
        classes.push(vec![idx]);
    }
    Ok(classes)
}

/// `covolume(ξ₂, ξ₃)·area(Σ)`.
pub fn volume_coefficient(data: &CoassocData) -> Result<f64> {
    let area = match (&data.sphere, data.sphere_area) {
        (_, Some(a)) => a,
        (SphereDescriptor::GhSegment { start, end }, None) => {
            let cfg = GHConfig::with_default_axis(data.zeta.clone(), GridSpec::new(0.1, 1.0))?;
            let p = |v: &ImVec| Point::from(v.to_f64());
            sphere_area(&cfg, &p(start), &p(end))?.area
        }
        (SphereDescriptor::KronRoot { .. }, None) => return Err(Error::RequiresExternalArea),
    };
    Ok(covolume(&data.xi2, &data.xi3).value * area)
}

/// Volume of the model coassociative in the structure rescaled by `t`.
pub fn model_volume(data: &CoassocData, t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::InvalidInput("t must be non-negative".into()));
    }
    Ok(volume_coefficient(data)? * (t * t))
}

pub fn family_dimension_for_b1(b1: u32) -> u32 {
    1 + b1
}

/// `1 + b₁(Σ)`; every sphere here has `b₁ = 0`.
pub fn family_dimension(_data: &CoassocData) -> u32 {
    family_dimension_for_b1(0)
}

type Q = [f64; 4];

fn qmul(a: &Q, b: &Q) -> Q {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn qdot(a: &Q, b: &Q) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A tangent vector of Im H × H.
type Tangent = ([f64; 3], Q);

const UNITS: [Q; 3] = [[0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]];

/// `ω_a(u, v) = ⟨e_a u, v⟩` for the units `e_a = i, j, k`.
fn omega(a: usize, u: &Q, v: &Q) -> f64 {
    qdot(&qmul(&UNITS[a], u), v)
}

fn det3(a: &[f64; 3], b: &[f64; 3], c: &[f64; 3]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// `φ = Vol − Σ dx_a ∧ ω_a` on three tangent vectors.
pub fn phi_flat(v1: &Tangent, v2: &Tangent, v3: &Tangent) -> f64 {
    let mut s = det3(&v1.0, &v2.0, &v3.0);
    for a in 0..3 {
        s -= v1.0[a] * omega(a, &v2.1, &v3.1) - v2.0[a] * omega(a, &v1.1, &v3.1) + v3.0[a] * omega(a, &v1.1, &v2.1);
    }
    s
}

fn normalized(v: [f64; 3]) -> [f64; 3] {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / n)
}

/// Max of `|φ|` on 3-frames tangent to `(Rξ₂ + Rξ₃) × Σ` in the flat model,
/// over `samples` random `I_ξ̂₁`-complex lines `Σ ⊂ H`.
pub fn flat_model_residual(xi1_hat: &ImVec, xi2: &ImVec, xi3: &ImVec, samples: usize) -> f64 {
    let n1 = normalized(xi1_hat.to_f64());
    let i1: Q = [0.0, n1[0], n1[1], n1[2]];
    let y2 = normalized(xi2.to_f64());
    let y3 = normalized(xi3.to_f64());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples.max(1) {
        let w: Q = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let nw = qdot(&w, &w).sqrt();
        let u: Q = w.map(|x| x / nw);
        let iu = qmul(&i1, &u);
        let frame: [Tangent; 4] = [(y2, [0.0; 4]), (y3, [0.0; 4]), ([0.0; 3], u), ([0.0; 3], iu)];
        for skip in 0..4 {
            let t: Vec<&Tangent> = frame.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, f)| f).collect();
            worst = worst.max(phi_flat(t[0], t[1], t[2]).abs());
        }
    }
    worst
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateInput {
    pub beta: f64,
    pub gamma: f64,
    pub c: f64,
    #[serde(rename = "R")]
    pub r_ball: f64,
    /// Defaults to `c²(1 + R)`.
    #[serde(default)]
    pub c_e: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantSource {
    Explicit,
    Default,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CertificateResult {
    /// Every `t ∈ (0, T)` satisfies the three inequalities.
    pub t_max: f64,
    pub c_e: f64,
    pub c_e_source: ConstantSource,
    /// `r(t) = coefficient · t^exponent`.
    pub radius_coefficient: f64,
    pub radius_exponent: f64,
}

impl CertificateInput {
    pub fn new(beta: f64, gamma: f64, c: f64, r_ball: f64) -> Self {
        CertificateInput { beta, gamma, c, r_ball, c_e: None }
    }

    pub fn with_c_e(mut self, c_e: f64) -> Self {
        self.c_e = Some(c_e);
        self
    }

    pub fn resolved_c_e(&self) -> (f64, ConstantSource) {
        match self.c_e {
            Some(v) => (v, ConstantSource::Explicit),
            None => (self.c * self.c * (1.0 + self.r_ball), ConstantSource::Default),
        }
    }
}

/// The three inequalities at one `t`: `(a)`, `(b)`, `(c)`.
pub fn certificate_inequalities(input: &CertificateInput, t: f64) -> [bool; 3] {
    let (ce, _) = input.resolved_c_e();
    let (b, g) = (input.beta, input.gamma);
    let r = 2.0 * ce * t.powf(b - g);
    let x = ce * (r + t.powf(b)) * t.powf(-g);
    [x < 1.0, ce * t.powf(b - g) + x * r <= r, r < input.r_ball]
}

/// Largest `T` with all three inequalities on `(0, T)`, by bisection.
pub fn perturbation_certificate(input: &CertificateInput) -> Result<CertificateResult> {
    let CertificateInput { beta, gamma, c, r_ball, .. } = *input;
    let (ce, source) = input.resolved_c_e();
    if !(beta > 0.0 && gamma > 0.0 && c > 0.0 && r_ball > 0.0 && ce > 0.0) || !(beta.is_finite() && gamma.is_finite()) {
        return Err(Error::InvalidInput("constants must be positive and finite".into()));
    }
    if beta <= 2.0 * gamma {
        return Err(Error::NoCertificate { beta, two_gamma: 2.0 * gamma });
    }
    // (b) ⇔ X(t) ≤ 1/2 with X = c_E(2c_E t^{β−2γ} + t^{β−γ}), (c) ⇔ 2c_E t^{β−γ} < R;
    // both sides increase in t, so the admissible set is an interval.
    let x = |t: f64| ce * (2.0 * ce * t.powf(beta - 2.0 * gamma) + t.powf(beta - gamma));
    let ok = |t: f64| x(t) <= 0.5 && 2.0 * ce * t.powf(beta - gamma) < r_ball;
    let mut hi = 1.0;
    while ok(hi) {
        hi *= 2.0;
        if hi > 1e300 {
            return Err(Error::InvalidInput("certificate is unbounded".into()));
        }
    }
    let mut lo = hi;
    while !ok(lo) {
        lo /= 2.0;
        if lo < 1e-300 {
            return Err(Error::InvalidInput("no admissible t".into()));
        }
    }
    while (hi - lo) > 1e-6 * lo {
        let mid = 0.5 * (lo + hi);
        if ok(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(CertificateResult {
        t_max: lo,
        c_e: ce,
        c_e_source: source,
        radius_coefficient: 2.0 * ce,
        radius_exponent: beta - gamma,
    })
}

/// Full report for one data set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoassocReport {
    pub conditions: Conditions,
    pub status: Status,
    pub cover_degree: Option<u64>,
    pub volume_coefficient: Option<f64>,
    pub family_dimension: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<(Status, Option<u64>)>,
}

pub fn report(data: &CoassocData) -> Result<CoassocReport> {
    let mut conditions = check_assumption(data)?;
    let cls = classify_embedding(data)?;
    conditions.extend(cls.conditions);
    let volume_coefficient = match volume_coefficient(data) {
        Ok(v) => Some(v),
        Err(Error::RequiresExternalArea) => None,
        Err(e) => return Err(e),
    };
    Ok(CoassocReport {
        conditions,
        status: cls.status,
        cover_degree: cls.cover_degree,
        volume_coefficient,
        family_dimension: family_dimension(data),
        reason: cls.reason,
        candidates: cls.candidates,
    })
}
