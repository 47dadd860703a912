use kummer_coassoc::ghspace::{ale_decay_fit, hyperkahler_triple, sphere_area, GHConfig, GridSpec, Point};
use kummer_coassoc::lattices::ImVec;
use kummer_coassoc::resdata::Zeta;
use proptest::prelude::*;

fn two_points() -> impl Strategy<Value = ((i64, i64, i64), (i64, i64, i64))> {
    ((-2i64..=2, -2i64..=2, -2i64..=2), (-2i64..=2, -2i64..=2, -2i64..=2)).prop_filter("distinct", |(a, b)| a != b)
}

fn config(a: (i64, i64, i64), b: (i64, i64, i64)) -> GHConfig {
    let zeta = Zeta::gh(vec![ImVec::from_ints(a.0, a.1, a.2), ImVec::from_ints(b.0, b.1, b.2)]);
    GHConfig::with_default_axis(zeta, GridSpec::new(0.1, 4.0)).unwrap()
}

fn point(p: (i64, i64, i64)) -> Point {
    Point::new(p.0 as f64, p.1 as f64, p.2 as f64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn triple_is_quaternionic(pts in two_points(), q in (-3.0f64..3.0, -3.0f64..3.0, -3.0f64..3.0)) {
        let cfg = config(pts.0, pts.1);
        let x = Point::new(q.0, q.1, q.2);
        prop_assume!(cfg.monopoles().iter().all(|m| (m - x).norm() > 0.05));
        // points on a Dirac string are gauge singular; skip them
        if let Ok(s) = hyperkahler_triple(&cfg, &x) {
            prop_assert!(s.quaternionic_defect() < 1e-8, "defect {}", s.quaternionic_defect());
        }
    }

    #[test]
    fn sphere_area_matches_calibration(pts in two_points()) {
        let cfg = config(pts.0, pts.1);
        let a = sphere_area(&cfg, &point(pts.0), &point(pts.1)).unwrap();
        prop_assert!(a.relative_gap() < 1e-4, "{a:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn ale_decay_is_quartic(pts in two_points()) {
        let fit = ale_decay_fit(&config(pts.0, pts.1), &[8.0, 16.0, 32.0, 64.0]).unwrap();
        let slope = fit.slope.unwrap();
        prop_assert!((slope + 4.0).abs() <= 0.5, "slope {slope}");
    }
}
