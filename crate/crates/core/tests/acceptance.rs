//! Acceptance criteria 1-9. Each test prints one line `acceptance N ...: PASS|FAIL`.

use std::time::{Duration, Instant};

use kummer_coassoc::cli::{catalog, catalog_entry, classify_stratum, verify_numerics, NumericsConfig, RunReport};
use kummer_coassoc::coassoc::{
    certificate_inequalities, count_spheres, model_volume, perturbation_certificate, CertificateInput, Status,
};
use kummer_coassoc::error::Error;
use kummer_coassoc::field::FieldScalar;
use kummer_coassoc::lattices::{spectral_gap, ImVec, Mat3};
use kummer_coassoc::quaternions::{generate_subgroup, GroupLabel, Quat, RotationH};
use kummer_coassoc::resdata::{family_member, Zeta};
use kummer_coassoc::rootsys::{
    in_delta_circ, mckay_automorphism, weyl_canonical, CartanWeight, RootLabel, RootSystem,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(n: u32, name: &str, pass: bool, detail: &str) {
    println!("acceptance {n} {name}: {} ({detail})", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "acceptance {n} {name} failed: {detail}");
}

fn d5_example() -> Zeta {
    Zeta::kronheimer(RootLabel::D(5), CartanWeight::along(&ImVec::unit_i(), &[0, 1, 2, 3, 4]))
}

/// The parameters of the worked examples with their rows.
fn worked_parameters() -> Vec<(u8, Zeta)> {
    vec![
        (1, Zeta::gh_along_i(&[-1, 1])),
        (2, Zeta::gh_along_i(&[-1, 0, 1])),
        (3, Zeta::gh_along_i(&[-1, 0, 1])),
        (4, Zeta::gh_along_i(&[-2, -1, 1, 2])),
        (5, Zeta::gh_along_i(&[-3, -2, -1, 1, 2, 3])),
        (6, d5_example()),
    ]
}

#[test]
fn criterion_1_table_matrices() {
    let start = Instant::now();
    let plus = RotationH::sandwich(Quat::i()).unwrap().lambda2_plus();
    let minus = RotationH::sandwich(Quat::j()).unwrap().lambda2_plus();
    let ok = plus == Mat3::diag(1, -1, -1) && minus == Mat3::diag(-1, 1, -1);
    let elapsed = start.elapsed();
    verdict(
        1,
        "rotation matrices",
        ok && elapsed < Duration::from_secs(1),
        &format!("iqi -> {plus:?}, jqj -> {minus:?}, {elapsed:?}"),
    );
}

fn perturb(z: &Zeta, rng: &mut ChaCha8Rng) -> Zeta {
    let mut small = || loop {
        let p = rng.gen_range(-5i64..=5);
        if p != 0 {
            return FieldScalar::from_ratio(p, rng.gen_range(1i64..=4));
        }
    };
    // nonzero j and k parts take a point off every line and plane the families use
    let delta = ImVec::new(FieldScalar::zero(), small(), small());
    match z {
        Zeta::Gh { points } => {
            let mut pts = points.clone();
            let n = pts.len();
            let m = rng.gen_range(0..n);
            pts[m] = &pts[m] + &delta;
            pts[(m + 1) % n] = &pts[(m + 1) % n] - &delta;
            Zeta::gh(pts)
        }
        Zeta::Kronheimer { root_system, weight } => {
            let mut e = weight.entries.clone();
            let m = rng.gen_range(0..e.len());
            e[m] = &e[m] + &delta;
            Zeta::kronheimer(*root_system, CartanWeight::new(e))
        }
    }
}

#[test]
fn criterion_2_family_membership() {
    let start = Instant::now();
    let params = worked_parameters();
    let members = params.iter().filter(|(row, z)| family_member(*row, z).unwrap()).count();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut rejected = 0;
    for k in 0..200 {
        let (row, z) = &params[k % params.len()];
        let p = perturb(z, &mut rng);
        if !family_member(*row, &p).unwrap() {
            rejected += 1;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        2,
        "family regression",
        members == params.len() && rejected == 200 && elapsed < Duration::from_secs(5),
        &format!("{members}/{} worked parameters accepted, {rejected}/200 perturbations rejected, {elapsed:?}", params.len()),
    );
}

#[test]
fn criterion_3_sphere_counts() {
    let cases = [
        (Zeta::gh_along_i(&[-1, 1]), 1),
        (Zeta::gh_along_i(&[-1, 0, 1]), 2),
        (Zeta::gh_along_i(&[-2, -1, 1, 2]), 3),
        (Zeta::gh_along_i(&[-3, -2, -1, 1, 2, 3]), 5),
        (d5_example(), 5),
    ];
    let got: Vec<usize> = cases.iter().map(|(z, _)| count_spheres(z, &ImVec::unit_i()).unwrap().embedded.len()).collect();
    let want: Vec<usize> = cases.iter().map(|c| c.1).collect();
    verdict(3, "sphere counts", got == want, &format!("got {got:?}, expected {want:?}"));
}

#[test]
fn criterion_4_classification() {
    let mut details = Vec::new();
    let mut ok = true;
    for id in ["reidegeld-c3", "reidegeld-c2"] {
        for st in catalog_entry(id).unwrap().strata {
            let out = classify_stratum(&st.data().unwrap()).unwrap();
            let covers = out.statuses.iter().all(|s| *s == (Status::CoverOfEmbedded, Some(2)));
            ok &= covers && !out.statuses.is_empty();
            details.push(format!("{id} {}: {} spheres, all 2-fold covers: {covers}", st.group, out.statuses.len()));
        }
    }
    let st = &catalog_entry("reidegeld-dic3").unwrap().strata[0];
    let out = classify_stratum(&st.data().unwrap()).unwrap();
    let indeterminate = out.statuses.iter().any(|s| s.0 == Status::Indeterminate);
    let embedded_choices = out.statuses.iter().filter(|s| s.0 == Status::Embedded).count();
    ok &= !indeterminate
        && out.statuses.len() == 5
        && out.distinct_embedded == 1
        && out.cover_degrees.iter().all(|d| *d == Some(2));
    details.push(format!(
        "dic3: {} sphere choices, {} distinct submanifolds, {} embedded (from {embedded_choices} choices), others {:?}",
        out.statuses.len(),
        out.classes.len(),
        out.distinct_embedded,
        out.cover_degrees
    ));
    verdict(4, "classification regression", ok, &details.join("; "));
}

fn ratios(report: &RunReport, prefix: &str) -> Vec<(f64, bool)> {
    report
        .checks
        .iter()
        .filter(|c| c.operation.starts_with(prefix) && c.operation.contains("ratio"))
        .map(|c| (c.value.as_f64().unwrap(), c.pass))
        .collect()
}

fn check_named(report: &RunReport, prefix: &str) -> bool {
    report.checks.iter().filter(|c| c.operation.starts_with(prefix)).all(|c| c.pass)
}

#[test]
fn criterion_5_gibbons_hawking_numerics() {
    // supplementary run: fixed exclusion and fixed sample points
    let fixed = NumericsConfig::from_toml(include_str!("../configs/gh_default.toml")).unwrap();
    let sup = verify_numerics(&fixed).unwrap();
    println!(
        "acceptance 5 supplementary (exclusion 0.5, samples every 0.08): harmonic ratios {:?}, closure ratios {:?}, overall {:?}",
        ratios(&sup, "harmonic"),
        ratios(&sup, "closure"),
        sup.overall
    );

    let start = Instant::now();
    let literal = NumericsConfig::from_toml(include_str!("../configs/gh_literal.toml")).unwrap();
    let report = verify_numerics(&literal).unwrap();
    let elapsed = start.elapsed();
    let harmonic = ratios(&report, "harmonic");
    let closure = ratios(&report, "closure");
    let slope = check_named(&report, "ale_decay");
    let area = check_named(&report, "sphere_area");
    let detail = format!(
        "h/2 exclusion: harmonic ratios {harmonic:?}, closure ratios {closure:?}, ALE slope ok {slope}, area ok {area}, {elapsed:?}"
    );
    verdict(5, "GH numerical suite", report.passed() && elapsed < Duration::from_secs(120), &detail);
}

/// Exact `min |m ξ₂* + n ξ₃*|²` over `|m|, |n| ≤ 25` for integer `ξ₂, ξ₃`.
fn dual_oracle(u: [i64; 3], w: [i64; 3]) -> BigRational {
    let dot = |x: [i64; 3], y: [i64; 3]| (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) as i128;
    let (a, b, c) = (dot(u, u), dot(u, w), dot(w, w));
    let det = a * c - b * b;
    let mut best = i128::MAX;
    for m in -25i128..=25 {
        for n in -25i128..=25 {
            if (m, n) != (0, 0) {
                best = best.min(m * m * c - 2 * m * n * b + n * n * a);
            }
        }
    }
    BigRational::new(BigInt::from(best), BigInt::from(det))
}

#[test]
fn criterion_6_collapse_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut lattices = Vec::new();
    while lattices.len() < 20 {
        let mut v = || [0; 3].map(|_: i64| rng.gen_range(-5i64..=5));
        let (u, w) = (v(), v());
        let cross = [u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]];
        if cross != [0, 0, 0] {
            lattices.push((u, w));
        }
    }
    let ts: Vec<(i64, i64)> = (0..20).map(|_| (rng.gen_range(1i64..50), rng.gen_range(1i64..50))).collect();
    let (mut scaling, mut oracle, mut total) = (0, 0, 0);
    for (u, w) in &lattices {
        let (xi2, xi3) = (ImVec::from_ints(u[0], u[1], u[2]), ImVec::from_ints(w[0], w[1], w[2]));
        let base = spectral_gap(&xi2, &xi3, &FieldScalar::one()).unwrap();
        let brute = dual_oracle(*u, *w);
        for &(p, q) in &ts {
            let t = FieldScalar::from_ratio(p, q);
            let g = spectral_gap(&xi2, &xi3, &t).unwrap();
            total += 1;
            // gap = 2π·sqrt(dual_min_sq) is linear in t exactly when dual_min_sq scales by t²
            if g.dual_min_sq == &t.square() * &base.dual_min_sq {
                scaling += 1;
            }
            let tq = BigRational::new(BigInt::from(p), BigInt::from(q));
            if g.dual_min_sq.as_rational() == Some(&(&brute * &tq * &tq)) {
                oracle += 1;
            }
        }
    }
    verdict(
        6,
        "collapse scaling",
        scaling == total && oracle == total && total == 400,
        &format!("exact t-scaling {scaling}/{total}, dual-vector oracle {oracle}/{total}"),
    );
}

#[test]
fn criterion_7_volume_shrinkage() {
    let mut count = 0;
    let mut ok = true;
    let ts = [1.0, 0.5, 0.25, 0.1, 1e-2, 1e-3, 1e-6];
    for entry in catalog().unwrap().examples {
        for st in entry.strata {
            for d in st.data().unwrap() {
                let v1 = model_volume(&d, 1.0).unwrap();
                let vols: Vec<f64> = ts.iter().map(|t| model_volume(&d, *t).unwrap()).collect();
                let exact = ts.iter().zip(&vols).all(|(t, v)| *v == t * t * v1);
                let slopes_ok = ts.windows(2).zip(vols.windows(2)).all(|(t, v)| {
                    let s = (v[0] / v[1]).ln() / (t[0] / t[1]).ln();
                    (s - 2.0).abs() < 1e-12
                });
                let shrinks = model_volume(&d, 0.0).unwrap() == 0.0 && vols.windows(2).all(|v| v[1] < v[0]);
                ok &= v1 > 0.0 && exact && slopes_ok && shrinks;
                count += 1;
            }
        }
    }
    verdict(7, "volume shrinkage", ok && count > 0, &format!("{count} catalog coassociatives, vol(t) = t^2 vol(1) exactly"));
}

#[test]
fn criterion_8_certificate() {
    let input = CertificateInput::new(2.5, 1.0, 1.0, 1.0).with_c_e(1.0);
    let res = perturbation_certificate(&input).unwrap();
    let grid_ok = (1..=1000).all(|k| {
        let t = res.t_max * k as f64 / 1001.0;
        let [a, b, _] = certificate_inequalities(&input, t);
        a && b
    });
    let rejected = matches!(
        perturbation_certificate(&CertificateInput::new(1.5, 1.0, 1.0, 1.0).with_c_e(1.0)),
        Err(Error::NoCertificate { .. })
    );
    let c_es: Vec<f64> = (1..=10).map(|k| 0.5 * k as f64).collect();
    let ts: Vec<f64> = c_es.iter().map(|c| perturbation_certificate(&input.with_c_e(*c)).unwrap().t_max).collect();
    let monotone = ts.windows(2).all(|w| w[1] <= w[0]);
    verdict(
        8,
        "certificate suite",
        res.t_max > 0.0 && grid_ok && rejected && monotone,
        &format!("T = {:.6}, r(t) = {}t^{}, grid ok {grid_ok}, beta = 1.5 rejected {rejected}, T(c_E) monotone {monotone}", res.t_max, res.radius_coefficient, res.radius_exponent),
    );
}

#[test]
fn criterion_9_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let trials = 100;
    let mut pool = generate_subgroup(GroupLabel::BinaryOctahedral).unwrap().elements;
    pool.extend(generate_subgroup(GroupLabel::BinaryIcosahedral).unwrap().elements);
    let pick = |rng: &mut ChaCha8Rng| pool[rng.gen_range(0..pool.len())].clone();

    let mut hom = 0;
    for _ in 0..trials {
        let r1 = RotationH::new(pick(&mut rng), pick(&mut rng)).unwrap();
        let r2 = RotationH::new(pick(&mut rng), pick(&mut rng)).unwrap();
        if r1.compose(&r2).lambda2_plus() == &r1.lambda2_plus() * &r2.lambda2_plus() {
            hom += 1;
        }
    }

    let labels = [
        GroupLabel::Cyclic(3),
        GroupLabel::Cyclic(4),
        GroupLabel::Cyclic(6),
        GroupLabel::Cyclic(8),
        GroupLabel::Dicyclic(2),
        GroupLabel::Dicyclic(3),
        GroupLabel::BinaryTetrahedral,
        GroupLabel::BinaryOctahedral,
        GroupLabel::BinaryIcosahedral,
    ];
    let groups: Vec<_> = labels.iter().map(|l| generate_subgroup(*l).unwrap()).collect();
    let mut closure = 0;
    for _ in 0..trials {
        let g = &groups[rng.gen_range(0..groups.len())];
        let x = &g.elements[rng.gen_range(0..g.order())];
        let y = &g.elements[rng.gen_range(0..g.order())];
        if g.order() == g.label.order() && g.contains(&(x * y)) && g.contains(&x.conj()) {
            closure += 1;
        }
    }

    let systems: Vec<RootSystem> =
        [RootLabel::A(2), RootLabel::A(4), RootLabel::D(4), RootLabel::D(5), RootLabel::E6].map(RootSystem::build).to_vec();
    let mut weyl = 0;
    for _ in 0..trials {
        let phi = &systems[rng.gen_range(0..systems.len())];
        let entries =
            (0..phi.ambient_dim).map(|_| ImVec::from_ints(rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3)));
        let z = CartanWeight::new(entries.collect()).project(phi);
        let word: Vec<usize> = (0..rng.gen_range(0..12)).map(|_| rng.gen_range(0..phi.rank)).collect();
        let moved = z.apply_word(phi, &word);
        let same = weyl_canonical(&z, phi).unwrap().simple_values(phi) == weyl_canonical(&moved, phi).unwrap().simple_values(phi);
        if same && in_delta_circ(&z, phi).unwrap() == in_delta_circ(&moved, phi).unwrap() {
            weyl += 1;
        }
    }

    // Γ ∈ {Q8, 2T} normalized by right multiplication with 2O elements
    let o = generate_subgroup(GroupLabel::BinaryOctahedral).unwrap().elements;
    let cases: Vec<_> = [GroupLabel::Dicyclic(2), GroupLabel::BinaryTetrahedral]
        .iter()
        .map(|l| (generate_subgroup(*l).unwrap(), RootSystem::build(RootLabel::for_group(*l).unwrap())))
        .collect();
    let mut aut = 0;
    for _ in 0..trials {
        let (gamma, phi) = &cases[rng.gen_range(0..cases.len())];
        let r = RotationH::new(o[rng.gen_range(0..o.len())].clone(), o[rng.gen_range(0..o.len())].clone()).unwrap();
        let m = mckay_automorphism(&r, gamma).unwrap();
        let permutes = phi.roots.iter().all(|x| phi.contains_root(&m.apply_root(x)));
        let isometric = phi.simple_roots.iter().all(|x| {
            phi.simple_roots.iter().all(|y| phi.inner(x, y) == phi.inner(&m.apply_root(x), &m.apply_root(y)))
        });
        if permutes && isometric {
            aut += 1;
        }
    }
    verdict(
        9,
        "property suites",
        [hom, closure, weyl, aut] == [trials; 4],
        &format!("homomorphism {hom}/{trials}, closure/order {closure}/{trials}, Weyl-orbit {weyl}/{trials}, diagram automorphisms {aut}/{trials}"),
    );
}
