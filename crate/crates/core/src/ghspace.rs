//! Floating-point checks of the Gibbons–Hawking construction: the harmonic
//! potential, the hyperkähler triple in a Dirac-string gauge, finite-difference
//! residuals, ALE decay and the areas of holomorphic spheres.
//!
//! Conventions: `f = Σ 1/(2|q − ζ_a|)`, the fiber coordinate `φ` has period
//! `2π`, `θ = dφ + A` with `dA = −⋆df`, and the triple is
//! `ω_a = θ ∧ dx_a + f dx_b ∧ dx_c` in the coordinate frame `(φ, x₁, x₂, x₃)`.

use gauss_quad::GaussLegendre;
use nalgebra::{Matrix4, Vector3};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattices::ImVec;
use crate::resdata::Zeta;

pub type Point = Vector3<f64>;

/// Distance below which a point counts as lying on a monopole or string.
const SINGULAR_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Spacing `h`.
    pub spacing: f64,
    /// Radius of the sampled ball around the origin.
    pub extent: f64,
    /// Radius of the balls removed around monopoles; `h/2` when absent.
    #[serde(default)]
    pub exclusion: Option<f64>,
    /// Spacing of the points where residuals are sampled; `h` when absent.
    /// A fixed value compares the same points across refinements.
    #[serde(default)]
    pub sample_spacing: Option<f64>,
}

impl GridSpec {
    pub fn new(spacing: f64, extent: f64) -> Self {
        GridSpec { spacing, extent, exclusion: None, sample_spacing: None }
    }

    pub fn with_exclusion(mut self, radius: f64) -> Self {
        self.exclusion = Some(radius);
        self
    }

    pub fn sampled_every(mut self, spacing: f64) -> Self {
        self.sample_spacing = Some(spacing);
        self
    }

    pub fn exclusion_radius(&self) -> f64 {
        self.exclusion.unwrap_or(self.spacing / 2.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub segment_nodes: usize,
    pub fiber_nodes: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { segment_nodes: 48, fiber_nodes: 16 }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawConfig {
    zeta: Zeta,
    gauge_axis: ImVec,
    grid: GridSpec,
    #[serde(default)]
    quadrature: QuadratureSpec,
}

/// A Gibbons–Hawking configuration and the numerical settings used to probe it.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawConfig", into = "RawConfig")]
pub struct GHConfig {
    zeta: Zeta,
    gauge_axis: ImVec,
    pub grid: GridSpec,
    pub quadrature: QuadratureSpec,
    points: Vec<Point>,
    axis: Point,
}

impl TryFrom<RawConfig> for GHConfig {
    type Error = Error;

    fn try_from(raw: RawConfig) -> Result<Self> {
        let mut c = GHConfig::new(raw.zeta, raw.gauge_axis, raw.grid)?;
        c.quadrature = raw.quadrature;
        Ok(c)
    }
}

impl From<GHConfig> for RawConfig {
    fn from(c: GHConfig) -> Self {
        RawConfig { zeta: c.zeta, gauge_axis: c.gauge_axis, grid: c.grid, quadrature: c.quadrature }
    }
}

fn to_point(v: &ImVec) -> Point {
    Point::from(v.to_f64())
}

impl GHConfig {
    pub fn new(zeta: Zeta, gauge_axis: ImVec, grid: GridSpec) -> Result<Self> {
        let points: Vec<Point> = zeta.points()?.iter().map(to_point).collect();
        if points.is_empty() {
            return Err(Error::InvalidInput("no monopoles".into()));
        }
        let axis = to_point(&gauge_axis);
        if axis.norm() < SINGULAR_EPS {
            return Err(Error::InvalidInput("gauge axis is zero".into()));
        }
        if !(grid.spacing > 0.0 && grid.extent > 0.0 && grid.exclusion_radius() >= 0.0) {
            return Err(Error::InvalidInput("grid spacing and extent must be positive".into()));
        }
        Ok(GHConfig {
            zeta,
            gauge_axis,
            grid,
            quadrature: QuadratureSpec::default(),
            points,
            axis: axis.normalize(),
        })
    }

    /// Default axis: the first of `k, j, i, (1,1,1)…` that is not parallel to
    /// any difference of monopoles.
    pub fn with_default_axis(zeta: Zeta, grid: GridSpec) -> Result<Self> {
        let pts = zeta.points()?.to_vec();
        let candidates = [
            ImVec::unit_k(),
            ImVec::unit_j(),
            ImVec::unit_i(),
            ImVec::from_ints(1, 2, 3),
        ];
        let axis = candidates
            .iter()
            .find(|n| {
                pts.iter()
                    .enumerate()
                    .all(|(a, p)| pts[a + 1..].iter().all(|q| !(p - q).is_parallel(n)))
            })
            .cloned()
            .unwrap_or_else(ImVec::unit_k);
        GHConfig::new(zeta, axis, grid)
    }

    pub fn zeta(&self) -> &Zeta {
        &self.zeta
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn monopoles(&self) -> &[Point] {
        &self.points
    }

    pub fn gauge_axis(&self) -> Point {
        self.axis
    }

    pub fn with_quadrature(mut self, q: QuadratureSpec) -> Self {
        self.quadrature = q;
        self
    }
}

fn potential(points: &[Point], q: &Point) -> f64 {
    points.iter().map(|p| 0.5 / (q - p).norm()).sum()
}

/// Dirac potential of a charge at the origin with string along `−n`:
/// `(n × p) / (2r(r + n·p))`.
fn dirac(n: &Point, p: &Point) -> Point {
    let r = p.norm();
    n.cross(p) / (2.0 * r * (r + n.dot(p)))
}

fn connection(points: &[Point], n: &Point, q: &Point) -> Point {
    points.iter().map(|p| dirac(n, &(q - p))).sum()
}

fn dist_to_string(p: &Point, n: &Point, q: &Point) -> f64 {
    // the half-line p − s n, s ≥ 0
    let d = q - p;
    let s = (-d.dot(n)).max(0.0);
    (d + s * n).norm()
}

fn min_string_distance(points: &[Point], n: &Point, q: &Point) -> f64 {
    points.iter().map(|p| dist_to_string(p, n, q)).fold(f64::INFINITY, f64::min)
}

fn min_monopole_distance(points: &[Point], q: &Point) -> f64 {
    points.iter().map(|p| (q - p).norm()).fold(f64::INFINITY, f64::min)
}

pub fn f_zeta(config: &GHConfig, q: &Point) -> Result<f64> {
    if min_monopole_distance(&config.points, q) < SINGULAR_EPS {
        return Err(Error::SingularPoint);
    }
    Ok(potential(&config.points, q))
}

/// The triple and the metric data at one point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TripleSample {
    pub point: [f64; 3],
    pub f: f64,
    pub theta_coeffs: [f64; 3],
    /// `ω₁, ω₂, ω₃` as antisymmetric component matrices in `(φ, x₁, x₂, x₃)`.
    pub omega: [[[f64; 4]; 4]; 3],
}

fn assemble(q: &Point, f: f64, a: &Point, with_connection: bool) -> TripleSample {
    let mut omega = [[[0.0; 4]; 4]; 3];
    for (idx, w) in omega.iter_mut().enumerate() {
        let (xa, xb, xc) = (idx + 1, (idx + 1) % 3 + 1, (idx + 2) % 3 + 1);
        if with_connection {
            // θ ∧ dx_a with θ = dφ + A_c dx_c
            w[0][xa] += 1.0;
            w[xa][0] -= 1.0;
            for c in 1..=3 {
                w[c][xa] += a[c - 1];
                w[xa][c] -= a[c - 1];
            }
        }
        w[xb][xc] += f;
        w[xc][xb] -= f;
    }
    TripleSample {
        point: [q.x, q.y, q.z],
        f,
        theta_coeffs: if with_connection { [a.x, a.y, a.z] } else { [0.0; 3] },
        omega,
    }
}

fn triple_with_axis(points: &[Point], n: &Point, q: &Point) -> Result<TripleSample> {
    if min_monopole_distance(points, q) < SINGULAR_EPS {
        return Err(Error::SingularPoint);
    }
    if min_string_distance(points, n, q) < SINGULAR_EPS {
        return Err(Error::GaugeSingular);
    }
    Ok(assemble(q, potential(points, q), &connection(points, n, q), true))
}

pub fn hyperkahler_triple(config: &GHConfig, q: &Point) -> Result<TripleSample> {
    triple_with_axis(&config.points, &config.axis, q)
}

fn mat(w: &[[f64; 4]; 4]) -> Matrix4<f64> {
    Matrix4::from_fn(|i, j| w[i][j])
}

fn perm_sign(p: [usize; 4]) -> f64 {
    let mut s = 1.0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

impl TripleSample {
    /// `g = f⁻¹ θ⊗θ + f Σ dx_c²`.
    pub fn metric(&self) -> Matrix4<f64> {
        let t = [1.0, self.theta_coeffs[0], self.theta_coeffs[1], self.theta_coeffs[2]];
        Matrix4::from_fn(|i, j| t[i] * t[j] / self.f + if i > 0 && i == j { self.f } else { 0.0 })
    }

    pub fn omega_matrix(&self, a: usize) -> Matrix4<f64> {
        mat(&self.omega[a])
    }

    /// Pointwise inner product `½ α_ij β^ij`.
    pub fn inner(&self, alpha: &Matrix4<f64>, beta: &Matrix4<f64>) -> f64 {
        let gi = self.metric().try_inverse().expect("metric is positive definite");
        let raised = gi * beta * gi;
        0.5 * alpha.component_mul(&raised).sum()
    }

    /// Hodge star with orientation `dφ ∧ dx₁ ∧ dx₂ ∧ dx₃`.
    pub fn hodge_star(&self, w: &Matrix4<f64>) -> Matrix4<f64> {
        let g = self.metric();
        let vol = g.determinant().sqrt();
        let gi = g.try_inverse().expect("metric is positive definite");
        let up = gi * w * gi;
        let mut out = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                if i == j {
                    continue;
                }
                let rest: Vec<usize> = (0..4).filter(|x| *x != i && *x != j).collect();
                let (k, l) = (rest[0], rest[1]);
                out[(i, j)] = vol * perm_sign([i, j, k, l]) * up[(k, l)];
            }
        }
        out
    }

    /// Largest deviation from `⋆ω_a = ω_a` and `⟨ω_a, ω_b⟩ = 2δ_ab`,
    /// relative to the entries involved.
    pub fn quaternionic_defect(&self) -> f64 {
        let w: Vec<Matrix4<f64>> = (0..3).map(|a| self.omega_matrix(a)).collect();
        let mut defect: f64 = 0.0;
        for a in 0..3 {
            let scale = w[a].abs().max().max(1.0);
            defect = defect.max((self.hodge_star(&w[a]) - &w[a]).abs().max() / scale);
            for b in 0..3 {
                let expected = if a == b { 2.0 } else { 0.0 };
                defect = defect.max((self.inner(&w[a], &w[b]) - expected).abs() / 2.0);
            }
        }
        defect
    }
}

/// Sample points `s·m` in the ball of radius `extent` at distance at least
/// `exclusion` from every monopole, whose 7-point stencil of spacing `h`
/// keeps every node `h/2` away from them.
fn for_each_grid_point<F>(config: &GHConfig, eval: F) -> GridResidual
where
    F: Fn(&Point) -> Option<f64> + Sync,
{
    let g = config.grid;
    let h = g.spacing;
    let step = g.sample_spacing.unwrap_or(h);
    let m = (g.extent / step).floor() as i64;
    let rho = g.exclusion_radius();
    let pts = &config.points;
    let (value, count) = (-m..=m)
        .into_par_iter()
        .map(|a| {
            let mut best = 0.0f64;
            let mut n = 0usize;
            for b in -m..=m {
                for c in -m..=m {
                    let q = Point::new(a as f64 * step, b as f64 * step, c as f64 * step);
                    if q.norm() > g.extent {
                        continue;
                    }
                    let clear = min_monopole_distance(pts, &q) >= rho
                        && stencil(&q, h).iter().all(|s| min_monopole_distance(pts, s) >= (h / 2.0).max(SINGULAR_EPS));
                    if !clear {
                        continue;
                    }
                    if let Some(v) = eval(&q) {
                        best = best.max(v);
                        n += 1;
                    }
                }
            }
            (best, n)
        })
        .reduce(|| (0.0, 0), |x, y| (x.0.max(y.0), x.1 + y.1));
    GridResidual { value, points: count }
}

fn stencil(q: &Point, h: f64) -> [Point; 7] {
    let e = |i: usize| Point::ith(i, h);
    [*q, q + e(0), q - e(0), q + e(1), q - e(1), q + e(2), q - e(2)]
}

/// Maximum of a residual over the punctured grid.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridResidual {
    pub value: f64,
    pub points: usize,
}

fn laplacian_residual<F: Fn(&Point) -> f64 + Sync>(config: &GHConfig, u: F) -> GridResidual {
    let h = config.grid.spacing;
    for_each_grid_point(config, |q| {
        let s = stencil(q, h);
        let lap = (s[1..].iter().map(&u).sum::<f64>() - 6.0 * u(&s[0])) / (h * h);
        Some(lap.abs())
    })
}

/// Max of the 7-point Laplacian of `f_ζ` over the punctured grid.
pub fn harmonic_residual(config: &GHConfig) -> f64 {
    harmonic_residual_detail(config).value
}

pub fn harmonic_residual_detail(config: &GHConfig) -> GridResidual {
    let pts = config.points.clone();
    laplacian_residual(config, move |q| potential(&pts, q))
}

/// The `dx₁∧dx₂∧dx₃` component of `dω_a` by central differences; the other
/// components vanish identically because nothing depends on `φ`.
fn closure_at(points: &[Point], n: &Point, q: &Point, h: f64, with_connection: bool) -> Option<f64> {
    let s = stencil(q, h);
    if s.iter().any(|p| min_string_distance(points, n, p) < SINGULAR_EPS) {
        return None;
    }
    let w: Vec<[[[f64; 4]; 4]; 3]> = s[1..]
        .iter()
        .map(|p| assemble(p, potential(points, p), &connection(points, n, p), with_connection).omega)
        .collect();
    // w[2i] at q + h e_i, w[2i+1] at q − h e_i
    let d = |i: usize, a: usize, b: usize, c: usize| (w[2 * i][a][b + 1][c + 1] - w[2 * i + 1][a][b + 1][c + 1]) / (2.0 * h);
    let mut worst: f64 = 0.0;
    for a in 0..3 {
        let v = d(0, a, 1, 2) + d(1, a, 2, 0) + d(2, a, 0, 1);
        worst = worst.max(v.abs());
    }
    Some(worst)
}

/// Per-point choice between the configured axis and its negative, whichever
/// keeps the stencil farther from the strings.
fn local_axis(points: &[Point], axis: &Point, q: &Point, h: f64) -> Point {
    let clearance = |n: &Point| {
        stencil(q, h)
            .iter()
            .map(|p| min_string_distance(points, n, p))
            .fold(f64::INFINITY, f64::min)
    };
    if clearance(axis) >= clearance(&-axis) {
        *axis
    } else {
        -axis
    }
}

pub fn closure_residual(config: &GHConfig) -> f64 {
    closure_residual_detail(config, true).value
}

/// `with_connection = false` drops `θ` from the triple (control).
pub fn closure_residual_detail(config: &GHConfig, with_connection: bool) -> GridResidual {
    let h = config.grid.spacing;
    let pts = &config.points;
    for_each_grid_point(config, |q| {
        let n = local_axis(pts, &config.axis, q, h);
        closure_at(pts, &n, q, h, with_connection)
    })
}

/// Result of [`ale_decay_fit`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AleFit {
    /// Least-squares slope of `log ‖ω − ω₀‖` against `log R`; `None` when the
    /// difference vanishes identically.
    pub slope: Option<f64>,
    /// `(R, max difference norm)` per radius.
    pub samples: Vec<(f64, f64)>,
    pub warning: Option<String>,
}

fn fibonacci_directions(count: usize) -> Vec<Point> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / count as f64;
            let rho = (1.0 - z * z).sqrt();
            let phi = golden * i as f64;
            Point::new(rho * phi.cos(), rho * phi.sin(), z)
        })
        .collect()
}

fn least_squares_slope(xy: &[(f64, f64)]) -> f64 {
    let n = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / n;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Decay of the triple towards the flat cone model `f₀ = N/(2r)` with all
/// monopoles at their centroid (the origin for admissible `ζ`), identified
/// through the coordinates `(φ, x)`.
/// `radii` are four-dimensional radii `R` with `r = R²/(2N)`.
pub fn ale_decay_fit(config: &GHConfig, radii: &[f64]) -> Result<AleFit> {
    if radii.len() < 2 {
        return Err(Error::InvalidInput("need at least two radii".into()));
    }
    let pts = &config.points;
    let n_mono = pts.len() as f64;
    let centroid = pts.iter().sum::<Point>() / n_mono;
    let model = vec![centroid; pts.len()];
    let axis = config.axis;
    let spread = pts.iter().map(|p| (p - centroid).norm()).fold(0.0, f64::max);
    let dirs: Vec<Point> = fibonacci_directions(400)
        .into_iter()
        .filter(|d| d.dot(&axis) > 0.0)
        .collect();
    let mut samples = Vec::new();
    let mut warning = None;
    for &big_r in radii {
        let r = big_r * big_r / (2.0 * n_mono);
        if r <= spread + 1.0 {
            warning = Some(format!("radius R = {big_r} is inside the fit region; slope unreliable"));
        }
        let worst = dirs
            .par_iter()
            .map(|d| {
                let q = centroid + d * r;
                let gh = triple_with_axis(pts, &axis, &q)?;
                let flat = triple_with_axis(&model, &axis, &q)?;
                Ok((0..3)
                    .map(|a| {
                        let diff = gh.omega_matrix(a) - flat.omega_matrix(a);
                        gh.inner(&diff, &diff).max(0.0).sqrt()
                    })
                    .fold(0.0, f64::max))
            })
            .collect::<Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        samples.push((big_r, worst));
    }
    let slope = if samples.iter().all(|s| s.1 > 1e-300) {
        let logs: Vec<(f64, f64)> = samples.iter().map(|(r, v)| (r.ln(), v.ln())).collect();
        Some(least_squares_slope(&logs))
    } else {
        None
    };
    Ok(AleFit { slope, samples, warning })
}

/// Area of the sphere over a segment and the calibration period over it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SphereArea {
    pub area: f64,
    pub calibration: f64,
}

impl SphereArea {
    pub fn relative_gap(&self) -> f64 {
        (self.area - self.calibration).abs() / self.area.abs().max(f64::MIN_POSITIVE)
    }
}

/// A gauge axis orthogonal to the segment direction, turned about it until the
/// strings stay clear of the quadrature nodes.
fn segment_axis(points: &[Point], u: &Point, nodes: &[Point], preferred: &Point) -> Point {
    let mut base = preferred - u * preferred.dot(u);
    if base.norm() < 1e-6 {
        base = u.cross(&Point::x());
        if base.norm() < 1e-6 {
            base = u.cross(&Point::y());
        }
    }
    let base = base.normalize();
    let other = u.cross(&base);
    (0..24)
        .map(|k| {
            let t = std::f64::consts::PI * k as f64 / 12.0;
            base * t.cos() + other * t.sin()
        })
        .map(|n| {
            let c = nodes.iter().map(|p| min_string_distance(points, &n, p)).fold(f64::INFINITY, f64::min);
            (n, c)
        })
        .fold((base, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best })
        .0
}

/// Area of `π⁻¹[ζ₀, ζ₁]` by Gauss–Legendre quadrature along the segment and
/// the trapezoidal rule in the fiber, together with `∫ ⟨ω, ξ̂⟩` over it.
pub fn sphere_area(config: &GHConfig, z0: &Point, z1: &Point) -> Result<SphereArea> {
    let seg = z1 - z0;
    let len = seg.norm();
    if len < SINGULAR_EPS {
        return Ok(SphereArea { area: 0.0, calibration: 0.0 });
    }
    let u = seg / len;
    let pts = &config.points;
    for p in pts {
        let s = (p - z0).dot(&u);
        if s > SINGULAR_EPS && s < len - SINGULAR_EPS && (p - z0 - u * s).norm() < 1e-9 {
            return Err(Error::InvalidSegment);
        }
    }
    let quad = GaussLegendre::new(config.quadrature.segment_nodes.max(2))
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    let probe: Vec<Point> = (1..64).map(|i| z0 + seg * (i as f64 / 64.0)).collect();
    let n = segment_axis(pts, &u, &probe, &config.axis);
    let fiber = config.quadrature.fiber_nodes.max(1);
    let dphi = 2.0 * std::f64::consts::PI / fiber as f64;
    let tangent_s = nalgebra::Vector4::new(0.0, u.x, u.y, u.z);
    let tangent_phi = nalgebra::Vector4::new(1.0, 0.0, 0.0, 0.0);
    let sample = |s: f64| -> TripleSample {
        let q = z0 + u * s;
        triple_with_axis(pts, &n, &q).expect("nodes are interior to the segment")
    };
    // nothing depends on the fiber angle, so each fiber sum is `fiber` equal terms
    let area = quad.integrate(0.0, len, |s| {
        let t = sample(s);
        let g = t.metric();
        let gss = tangent_s.dot(&(g * tangent_s));
        let gpp = tangent_phi.dot(&(g * tangent_phi));
        let gsp = tangent_s.dot(&(g * tangent_phi));
        (0..fiber).map(|_| (gss * gpp - gsp * gsp).max(0.0).sqrt() * dphi).sum::<f64>()
    });
    let calibration = quad.integrate(0.0, len, |s| {
        let t = sample(s);
        let w: Matrix4<f64> = (0..3).map(|a| t.omega_matrix(a) * u[a]).sum();
        (0..fiber).map(|_| tangent_phi.dot(&(w * tangent_s)) * dphi).sum::<f64>()
    });
    Ok(SphereArea { area, calibration })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pair_config(h: f64) -> GHConfig {
        GHConfig::with_default_axis(Zeta::gh_along_i(&[-1, 1]), GridSpec::new(h, 4.0)).unwrap()
    }

    #[test]
    fn potential_examples() {
        let c = pair_config(0.1);
        assert!((f_zeta(&c, &Point::zeros()).unwrap() - 1.0).abs() < 1e-15);
        assert!((f_zeta(&c, &Point::y()).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(f_zeta(&c, &Point::x()), Err(Error::SingularPoint));
        let single = GHConfig::with_default_axis(Zeta::gh_along_i(&[0]), GridSpec::new(0.1, 4.0)).unwrap();
        assert!((f_zeta(&single, &Point::new(0.0, 3.0, 0.0)).unwrap() - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn connection_curvature_is_minus_star_df() {
        let c = pair_config(0.1);
        let n = c.gauge_axis();
        let q = Point::new(0.3, 0.7, 0.4);
        let e = 1e-5;
        let a = |p: &Point| connection(c.monopoles(), &n, p);
        let f = |p: &Point| potential(c.monopoles(), p);
        let d = |g: &dyn Fn(&Point) -> f64, i: usize| (g(&(q + Point::ith(i, e))) - g(&(q - Point::ith(i, e)))) / (2.0 * e);
        let curl = Point::new(
            d(&|p| a(p).z, 1) - d(&|p| a(p).y, 2),
            d(&|p| a(p).x, 2) - d(&|p| a(p).z, 0),
            d(&|p| a(p).y, 0) - d(&|p| a(p).x, 1),
        );
        let grad = Point::new(d(&f, 0), d(&f, 1), d(&f, 2));
        assert!((curl + grad).norm() < 1e-8);
    }

    #[test]
    fn triple_is_quaternionic_at_random_points() {
        let c = pair_config(0.1);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let q = Point::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(0.1..3.0));
            let t = hyperkahler_triple(&c, &q).unwrap();
            assert!(t.quaternionic_defect() < 1e-10, "{}", t.quaternionic_defect());
        }
    }

    #[test]
    fn string_points_are_rejected() {
        let c = pair_config(0.1);
        let below = Point::new(1.0, 0.0, -2.0);
        assert_eq!(hyperkahler_triple(&c, &below).unwrap_err(), Error::GaugeSingular);
    }

    #[test]
    fn rotation_about_axis_is_a_symmetry() {
        // quarter turn about k maps i to j
        let c = pair_config(0.1);
        let rotated =
            GHConfig::new(Zeta::gh(vec![-ImVec::unit_j(), ImVec::unit_j()]), ImVec::unit_k(), GridSpec::new(0.1, 4.0)).unwrap();
        let turn = |p: &Point| Point::new(-p.y, p.x, p.z);
        let q = Point::new(0.4, -0.9, 0.3);
        let a = hyperkahler_triple(&c, &q).unwrap();
        let b = hyperkahler_triple(&rotated, &turn(&q)).unwrap();
        assert!((a.f - b.f).abs() < 1e-14);
        let ta = Point::from(a.theta_coeffs);
        assert!((turn(&ta) - Point::from(b.theta_coeffs)).norm() < 1e-14);
    }

    #[test]
    fn non_harmonic_control() {
        let c = pair_config(0.1);
        for h in [0.2, 0.1] {
            let mut c = c.clone();
            c.grid.spacing = h;
            let r = laplacian_residual(&c, |q| q.norm_squared());
            assert!((r.value - 6.0).abs() < 1e-6);
        }
    }

    #[test]
    fn single_monopole_residual_away_from_origin() {
        let c = GHConfig::with_default_axis(Zeta::gh_along_i(&[0]), GridSpec::new(0.05, 2.0).with_exclusion(1.0)).unwrap();
        let r = harmonic_residual(&c);
        assert!(r < 1e-2, "{r}");
    }

    #[test]
    fn closure_control_without_connection() {
        let c = pair_config(0.1);
        let mut c = c.clone();
        c.grid = GridSpec::new(0.1, 2.0).with_exclusion(0.5);
        let full = closure_residual_detail(&c, true).value;
        let ctl = closure_residual_detail(&c, false).value;
        assert!(ctl > 10.0 * full, "{full} vs {ctl}");
        c.grid.spacing = 0.05;
        c.grid.sample_spacing = Some(0.1);
        let finer = closure_residual_detail(&c, false).value;
        assert!((finer - ctl).abs() < 0.1 * ctl, "control does not converge to zero");
    }

    #[test]
    fn single_monopole_matches_its_model() {
        let c = GHConfig::with_default_axis(Zeta::gh_along_i(&[0]), GridSpec::new(0.1, 4.0)).unwrap();
        let fit = ale_decay_fit(&c, &[4.0, 8.0, 16.0]).unwrap();
        assert!(fit.samples.iter().all(|s| s.1 < 1e-12));
        assert_eq!(fit.slope, None);
    }

    #[test]
    fn sphere_area_agrees_with_calibration() {
        let c = pair_config(0.1);
        let s = sphere_area(&c, &-Point::x(), &Point::x()).unwrap();
        assert!(s.relative_gap() < 1e-10);
        assert_eq!(sphere_area(&c, &Point::x(), &Point::x()).unwrap().area, 0.0);
        let three = GHConfig::with_default_axis(Zeta::gh_along_i(&[-1, 0, 1]), GridSpec::new(0.1, 4.0)).unwrap();
        assert_eq!(sphere_area(&three, &-Point::x(), &Point::x()), Err(Error::InvalidSegment));
    }
}
