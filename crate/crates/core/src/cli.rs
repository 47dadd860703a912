//! Batch front-end: bundled worked examples, enumeration records, the
//! numerical GH suite and the certificate, all reported as [`RunReport`]s.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coassoc::{
    certificate_inequalities, check_assumption, classify_embedding, count_spheres, distinct_submanifolds,
    model_volume, perturbation_certificate, unit_direction, CertificateInput, CoassocData, SphereDescriptor, Status,
};
use crate::error::{Error, Result};
use crate::ghspace::{
    ale_decay_fit, closure_residual, harmonic_residual, sphere_area, GHConfig, GridSpec, Point, QuadratureSpec,
};
use crate::lattices::{orthogonal_primitive_pairs, BieberbachGroup, ImVec, LatticeIm};
use crate::resdata::{family_member, enumerate_admissible, gh_admissible, table_row, Zeta};
use crate::rootsys::{in_delta_circ, RootSystem};

pub const SCHEMA_VERSION: u32 = 1;

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const CHECK_FAILURE: i32 = 1;
    pub const CONFIG_ERROR: i32 = 2;
    pub const INTERNAL_ERROR: i32 = 3;
}

/// Exit code for an error raised before a report exists.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Config(_)
        | Error::Parse(_)
        | Error::InvalidInput(_)
        | Error::UnknownExample(_)
        | Error::NoCertificate { .. }
        | Error::InvalidLabel(_)
        | Error::Inadmissible => exit::CONFIG_ERROR,
        _ => exit::INTERNAL_ERROR,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub operation: String,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<Value>,
    pub pass: bool,
}

impl CheckResult {
    fn new(operation: impl Into<String>, value: Value, expected: Option<Value>, pass: bool) -> Self {
        CheckResult { operation: operation.into(), value, expected, tolerance: None, pass }
    }

    fn tol(mut self, t: Value) -> Self {
        self.tolerance = Some(t);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub command: String,
    pub config: Value,
    pub checks: Vec<CheckResult>,
    pub overall: Verdict,
    /// Wall-clock milliseconds per stage; the only nondeterministic field.
    pub timings_ms: BTreeMap<String, u64>,
}

impl RunReport {
    fn new(command: &str, config: Value) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            config,
            checks: Vec::new(),
            overall: Verdict::Pass,
            timings_ms: BTreeMap::new(),
        }
    }

    fn push(&mut self, c: CheckResult) {
        if !c.pass {
            self.overall = Verdict::Fail;
        }
        self.checks.push(c);
    }

    fn timed<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings_ms.insert(stage.into(), start.elapsed().as_millis() as u64);
        out
    }

    pub fn passed(&self) -> bool {
        self.overall == Verdict::Pass
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            exit::PASS
        } else {
            exit::CHECK_FAILURE
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} (schema {}, v{})\n", self.command, self.schema_version, self.tool_version);
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            s.push_str(&format!("  [{mark}] {}: {}", c.operation, c.value));
            if let Some(e) = &c.expected {
                s.push_str(&format!(" (expected {e})"));
            }
            if let Some(t) = &c.tolerance {
                s.push_str(&format!(" (tolerance {t})"));
            }
            s.push('\n');
        }
        s.push_str(&format!("overall: {:?}\n", self.overall).to_lowercase());
        s
    }
}

/// Paper-recorded outcome for one stratum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub spheres: usize,
    /// Distinct submanifolds that are already embedded.
    pub distinct_embedded: usize,
    /// Degree of every other distinct submanifold over its embedded image.
    pub cover_degree: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Stratum {
    /// `"lattice"` for a pure lattice group, `"R1"`..`"R6"` for table rows.
    pub group: String,
    pub zeta: Zeta,
    pub xi1: ImVec,
    pub xi2: ImVec,
    pub xi3: ImVec,
    pub expect: Expectation,
}

impl Stratum {
    pub fn row(&self) -> Result<Option<u8>> {
        if self.group == "lattice" {
            return Ok(None);
        }
        parse_row(&self.group).map(Some)
    }

    pub fn bieberbach(&self) -> Result<BieberbachGroup> {
        Ok(match self.row()? {
            None => BieberbachGroup::lattice_only(LatticeIm::standard()),
            Some(r) => table_row(r)?.group,
        })
    }

    /// Membership of `ζ` in its family (plain admissibility for lattice groups).
    pub fn member(&self) -> Result<bool> {
        match self.row()? {
            Some(r) => family_member(r, &self.zeta),
            None => match &self.zeta {
                Zeta::Gh { .. } => gh_admissible(&self.zeta),
                Zeta::Kronheimer { root_system, weight } => in_delta_circ(weight, &RootSystem::build(*root_system)),
            },
        }
    }

    /// One data set per embedded `I_ξ̂₁`-holomorphic sphere.
    pub fn data(&self) -> Result<Vec<CoassocData>> {
        let group = self.bieberbach()?;
        let spheres = count_spheres(&self.zeta, &self.xi1)?.embedded;
        spheres
            .into_iter()
            .map(|s| {
                let mut d = CoassocData::new(s, self.xi2.clone(), self.xi3.clone(), group.clone(), self.zeta.clone())?;
                d.sphere_area = external_area(&d);
                Ok(d)
            })
            .collect()
    }
}

/// Area `2π|ζ(θ)|` for root spheres, the period pairing under the same fiber
/// normalization as the GH spheres.
pub fn external_area(data: &CoassocData) -> Option<f64> {
    match (&data.sphere, &data.zeta) {
        (SphereDescriptor::KronRoot { root }, Zeta::Kronheimer { root_system, weight }) => {
            let v = weight.evaluate(&RootSystem::build(*root_system), root).to_f64();
            Some(2.0 * std::f64::consts::PI * v.iter().map(|x| x * x).sum::<f64>().sqrt())
        }
        _ => None,
    }
}

/// Parses `"R3"` or `"3"`.
pub fn parse_row(s: &str) -> Result<u8> {
    let digits = s.strip_prefix('R').unwrap_or(s);
    match digits.parse::<u8>() {
        Ok(r) if (1..=6).contains(&r) => Ok(r),
        _ => Err(Error::InvalidInput(format!("unknown row {s:?}"))),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub title: String,
    pub source: String,
    pub strata: Vec<Stratum>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Catalog {
    pub examples: Vec<CatalogEntry>,
}

const CATALOG_JSON: &str = include_str!("../data/catalog.json");

pub fn catalog() -> Result<Catalog> {
    serde_json::from_str(CATALOG_JSON).map_err(|e| Error::Config(format!("bundled catalog: {e}")))
}

pub fn catalog_entry(id: &str) -> Result<CatalogEntry> {
    catalog()?
        .examples
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownExample(id.to_string()))
}

/// Outcome of the classification step for one stratum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StratumOutcome {
    pub statuses: Vec<(Status, Option<u64>)>,
    /// Index classes of sphere choices giving the same submanifold.
    pub classes: Vec<Vec<usize>>,
    pub distinct_embedded: usize,
    /// Degrees of the non-embedded classes.
    pub cover_degrees: Vec<Option<u64>>,
}

pub fn classify_stratum(data: &[CoassocData]) -> Result<StratumOutcome> {
    let statuses = data
        .iter()
        .map(|d| classify_embedding(d).map(|c| (c.status, c.cover_degree)))
        .collect::<Result<Vec<_>>>()?;
    let classes = distinct_submanifolds(data)?;
    let distinct_embedded = classes.iter().filter(|c| statuses[c[0]].0 == Status::Embedded).count();
    let cover_degrees = classes
        .iter()
        .filter(|c| statuses[c[0]].0 != Status::Embedded)
        .map(|c| if statuses[c[0]].0 == Status::CoverOfEmbedded { statuses[c[0]].1 } else { None })
        .collect();
    Ok(StratumOutcome { statuses, classes, distinct_embedded, cover_degrees })
}

/// Runs every step on a catalog example and compares against its expectations.
pub fn run_example(id: &str) -> Result<RunReport> {
    let entry = catalog_entry(id)?;
    let mut report = RunReport::new("run-example", serde_json::to_value(&entry).map_err(internal)?);
    for (n, st) in entry.strata.iter().enumerate() {
        let tag = format!("stratum {n} ({})", st.group);
        let member = report.timed(&format!("{tag} membership"), || st.member())?;
        report.push(CheckResult::new(format!("{tag}: family membership"), json!(member), Some(json!(true)), member));
        if !member {
            continue;
        }
        let data = st.data()?;
        report.push(CheckResult::new(
            format!("{tag}: count_spheres"),
            json!(data.len()),
            Some(json!(st.expect.spheres)),
            data.len() == st.expect.spheres,
        ));
        let mut failing = Vec::new();
        for (k, d) in data.iter().enumerate() {
            for (cid, c) in check_assumption(d)? {
                if !c.pass {
                    failing.push(format!("sphere {k} ({cid}): {}", c.witness));
                }
            }
        }
        report.push(CheckResult::new(format!("{tag}: check_assumption"), json!(failing), Some(json!([])), failing.is_empty()));

        let outcome = report.timed(&format!("{tag} classify"), || classify_stratum(&data))?;
        let indeterminate = outcome.statuses.iter().any(|s| s.0 == Status::Indeterminate);
        report.push(CheckResult::new(
            format!("{tag}: classify_embedding"),
            serde_json::to_value(&outcome).map_err(internal)?,
            Some(serde_json::to_value(&st.expect).map_err(internal)?),
            !indeterminate
                && outcome.distinct_embedded == st.expect.distinct_embedded
                && outcome.cover_degrees.iter().all(|d| *d == st.expect.cover_degree && d.is_some()),
        ));

        let mut vols = Vec::new();
        let mut scaling = true;
        for d in &data {
            let v1 = model_volume(d, 1.0)?;
            for t in [0.5, 0.1, 1e-3, 0.0] {
                scaling &= model_volume(d, t)? == t * t * v1;
            }
            vols.push(v1);
        }
        let positive = vols.iter().all(|v| v.is_finite() && *v > 0.0);
        report.push(CheckResult::new(
            format!("{tag}: model_volume coefficients (vol = c t^2)"),
            json!(vols),
            None,
            positive && scaling,
        ));
    }
    Ok(report)
}

fn internal(e: serde_json::Error) -> Error {
    Error::Config(e.to_string())
}

/// Sphere count along one direction together with the plane pairs available there.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectionRecord {
    pub direction: ImVec,
    pub embedded: usize,
    pub nodal: usize,
    pub pairs: Vec<[ImVec; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumerateRecord {
    pub row: String,
    pub zeta: Zeta,
    pub canonical_form: Zeta,
    pub spheres: Vec<DirectionRecord>,
}

fn canonical_sign(v: &ImVec) -> ImVec {
    let first = v.coords().into_iter().find(|x| !x.is_zero()).cloned();
    match first {
        Some(x) if x.is_negative() => v.scale(&crate::field::FieldScalar::from_int(-1)),
        _ => v.clone(),
    }
}

/// Directions `±ξ̂` that carry spheres, one per line through the origin.
pub fn sphere_directions(zeta: &Zeta) -> Vec<ImVec> {
    let raw: Vec<ImVec> = match zeta {
        Zeta::Gh { points } => points
            .iter()
            .flat_map(|a| points.iter().map(move |b| b - a))
            .filter(|d| !d.is_zero())
            .collect(),
        Zeta::Kronheimer { root_system, weight } => {
            let phi = RootSystem::build(*root_system);
            phi.roots.iter().map(|r| weight.evaluate(&phi, r)).filter(|d| !d.is_zero()).collect()
        }
    };
    let mut out: Vec<ImVec> = Vec::new();
    for d in raw {
        let d = canonical_sign(&unit_direction(&d));
        if !out.iter().any(|o| o.is_parallel(&d)) {
            out.push(d);
        }
    }
    out.sort();
    out
}

/// Family members of a row up to `height`, with sphere counts per direction
/// and orthogonal primitive lattice pairs of height one.
pub fn enumerate(row: u8, height: u32) -> Result<Vec<EnumerateRecord>> {
    let lattice = LatticeIm::standard();
    enumerate_admissible(row, height)?
        .into_iter()
        .map(|zeta| {
            let spheres = sphere_directions(&zeta)
                .into_iter()
                .map(|dir| {
                    let count = count_spheres(&zeta, &dir)?;
                    let pairs = orthogonal_primitive_pairs(&dir, &lattice, 1).into_iter().map(|(a, b)| [a, b]).collect();
                    Ok(DirectionRecord { direction: dir, embedded: count.embedded.len(), nodal: count.nodal.len(), pairs })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(EnumerateRecord { row: format!("R{row}"), canonical_form: zeta.canonical()?, zeta, spheres })
        })
        .collect()
}

/// JSON-lines rendering of [`enumerate`].
pub fn enumerate_lines(row: u8, height: u32) -> Result<String> {
    let mut s = String::new();
    for r in enumerate(row, height)? {
        s.push_str(&serde_json::to_string(&r).map_err(internal)?);
        s.push('\n');
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    #[serde(default = "default_ratio")]
    pub ratio: [f64; 2],
    #[serde(default = "default_slope")]
    pub ale_slope: [f64; 2],
    #[serde(default = "default_area")]
    pub area_rel: f64,
    /// Bound on the decay samples when all monopoles sit at the origin.
    #[serde(default = "default_flat")]
    pub flat_decay: f64,
}

fn default_ratio() -> [f64; 2] {
    [3.4, 4.6]
}
fn default_slope() -> [f64; 2] {
    [-4.5, -3.5]
}
fn default_area() -> f64 {
    1e-4
}
fn default_flat() -> f64 {
    1e-12
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { ratio: default_ratio(), ale_slope: default_slope(), area_rel: default_area(), flat_decay: default_flat() }
    }
}

/// TOML configuration of `verify-numerics`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumericsConfig {
    pub zeta: Zeta,
    #[serde(default)]
    pub gauge_axis: Option<ImVec>,
    /// Grid spacings, each half the previous.
    pub spacings: Vec<f64>,
    /// Radius `L` of the region.
    pub extent: f64,
    /// Fixed exclusion radius; `h/2` balls when absent.
    #[serde(default)]
    pub exclusion: Option<f64>,
    #[serde(default)]
    pub sample_spacing: Option<f64>,
    #[serde(default = "default_radii")]
    pub ale_radii: Vec<f64>,
    #[serde(default)]
    pub quadrature: Option<QuadratureSpec>,
    #[serde(default)]
    pub tolerances: Tolerances,
}

fn default_radii() -> Vec<f64> {
    vec![8.0, 16.0, 32.0, 64.0]
}

impl NumericsConfig {
    pub fn from_toml(s: &str) -> Result<Self> {
        let c: NumericsConfig = toml::from_str(s).map_err(|e| Error::Config(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.zeta.is_gh() {
            return Err(Error::Config("numerics need a Gibbons-Hawking parameter".into()));
        }
        if self.spacings.len() < 2 || self.spacings.iter().any(|h| !(*h > 0.0)) {
            return Err(Error::Config("need at least two positive spacings".into()));
        }
        if self.spacings.windows(2).any(|w| (w[0] / w[1] - 2.0).abs() > 1e-9) {
            return Err(Error::Config("spacings must halve".into()));
        }
        if !(self.extent > 0.0) || self.ale_radii.len() < 2 {
            return Err(Error::Config("extent must be positive and at least two radii given".into()));
        }
        self.gh_config(self.spacings[0]).map(|_| ()).map_err(|e| Error::Config(e.to_string()))
    }

    fn gh_config(&self, h: f64) -> Result<GHConfig> {
        let mut grid = GridSpec::new(h, self.extent);
        if let Some(e) = self.exclusion {
            grid = grid.with_exclusion(e);
        }
        if let Some(s) = self.sample_spacing {
            grid = grid.sampled_every(s);
        }
        let cfg = match &self.gauge_axis {
            Some(a) => GHConfig::new(self.zeta.clone(), a.clone(), grid)?,
            None => GHConfig::with_default_axis(self.zeta.clone(), grid)?,
        };
        Ok(match self.quadrature {
            Some(q) => cfg.with_quadrature(q),
            None => cfg,
        })
    }
}

fn ratio_checks(report: &mut RunReport, name: &str, values: &[(f64, f64)], band: [f64; 2]) {
    report.push(CheckResult::new(format!("{name} values"), json!(values), None, values.iter().all(|v| v.1.is_finite())));
    for w in values.windows(2) {
        let r = w[0].1 / w[1].1;
        report.push(
            CheckResult::new(format!("{name} ratio h={} -> h={}", w[0].0, w[1].0), json!(r), None, r >= band[0] && r <= band[1])
                .tol(json!(band)),
        );
    }
}

/// Convergence and decay suite on a Gibbons-Hawking parameter.
pub fn verify_numerics(config: &NumericsConfig) -> Result<RunReport> {
    config.validate()?;
    let mut report = RunReport::new("verify-numerics", serde_json::to_value(config).map_err(internal)?);
    let tol = &config.tolerances;
    let cfgs = config.spacings.iter().map(|h| config.gh_config(*h)).collect::<Result<Vec<_>>>()?;

    let harmonic: Vec<(f64, f64)> =
        report.timed("harmonic_residual", || cfgs.iter().map(|c| (c.grid().spacing, harmonic_residual(c))).collect());
    ratio_checks(&mut report, "harmonic_residual", &harmonic, tol.ratio);
    let closure: Vec<(f64, f64)> =
        report.timed("closure_residual", || cfgs.iter().map(|c| (c.grid().spacing, closure_residual(c))).collect());
    ratio_checks(&mut report, "closure_residual", &closure, tol.ratio);

    let fit = report.timed("ale_decay_fit", || ale_decay_fit(&cfgs[0], &config.ale_radii))?;
    let all_at_origin = cfgs[0].monopoles().iter().all(|p| p.norm() == 0.0);
    if all_at_origin {
        let worst = fit.samples.iter().map(|s| s.1).fold(0.0, f64::max);
        report.push(CheckResult::new("ale_decay flat difference", json!(worst), None, worst <= tol.flat_decay).tol(json!(tol.flat_decay)));
    } else {
        let ok = fit.slope.is_some_and(|s| s >= tol.ale_slope[0] && s <= tol.ale_slope[1]);
        report.push(CheckResult::new("ale_decay_fit slope", serde_json::to_value(&fit).map_err(internal)?, None, ok).tol(json!(tol.ale_slope)));
    }

    let pts = cfgs[0].monopoles().to_vec();
    let mut areas = Vec::new();
    report.timed("sphere_area", || -> Result<()> {
        for (a, p) in pts.iter().enumerate() {
            for q in &pts[a + 1..] {
                let blocked = pts.iter().any(|m| {
                    let d = q - p;
                    let s = (m - p).dot(&d) / d.norm_squared();
                    s > 0.0 && s < 1.0 && (m - p - d * s).norm() < 1e-12
                });
                if !blocked {
                    areas.push((*p, *q, sphere_area(&cfgs[0], p, q)?));
                }
            }
        }
        Ok(())
    })?;
    for (p, q, a) in areas {
        let label = |v: &Point| format!("({}, {}, {})", v.x, v.y, v.z);
        report.push(
            CheckResult::new(
                format!("sphere_area {} -> {}", label(&p), label(&q)),
                serde_json::to_value(a).map_err(internal)?,
                None,
                a.relative_gap() <= tol.area_rel,
            )
            .tol(json!(tol.area_rel)),
        );
    }
    Ok(report)
}

/// Certificate with its grid verification.
pub fn certificate(input: &CertificateInput) -> Result<RunReport> {
    let mut report = RunReport::new("certificate", serde_json::to_value(input).map_err(internal)?);
    let res = perturbation_certificate(input)?;
    report.push(CheckResult::new("certificate", serde_json::to_value(res).map_err(internal)?, None, res.t_max > 0.0));
    let grid = 1000;
    let bad = (1..=grid)
        .map(|n| res.t_max * n as f64 / (grid + 1) as f64)
        .filter(|t| !certificate_inequalities(input, *t).iter().all(|b| *b))
        .count();
    report.push(CheckResult::new("inequalities on a 1000-point grid below T", json!(bad), Some(json!(0)), bad == 0));
    Ok(report)
}
