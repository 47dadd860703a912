//! Gibbons-Hawking metric for two monopoles: the hyperkahler triple, grid
//! residuals, ALE decay and the area of the sphere between the monopoles.

use kummer_coassoc::ghspace::{
    ale_decay_fit, closure_residual, harmonic_residual, hyperkahler_triple, sphere_area, GHConfig, GridSpec, Point,
};
use kummer_coassoc::resdata::Zeta;

fn main() -> kummer_coassoc::error::Result<()> {
    let zeta = Zeta::gh_along_i(&[-1, 1]);
    let sample = hyperkahler_triple(&GHConfig::with_default_axis(zeta.clone(), GridSpec::new(0.1, 2.0))?, &Point::new(0.3, 0.7, -0.2))?;
    println!("quaternionic defect at a sample point: {:.2e}", sample.quaternionic_defect());

    println!("\n  h      harmonic    closure");
    for h in [0.08, 0.04, 0.02] {
        let grid = GridSpec::new(h, 2.0).with_exclusion(0.5).sampled_every(0.08);
        let cfg = GHConfig::with_default_axis(zeta.clone(), grid)?;
        println!("{h:>5}  {:>10.3e}  {:>10.3e}", harmonic_residual(&cfg), closure_residual(&cfg));
    }

    let cfg = GHConfig::with_default_axis(zeta, GridSpec::new(0.1, 1.0))?;
    let fit = ale_decay_fit(&cfg, &[8.0, 16.0, 32.0, 64.0])?;
    println!("\nALE decay slope {:.4}", fit.slope.unwrap_or(f64::NAN));
    let a = sphere_area(&cfg, &Point::new(-1.0, 0.0, 0.0), &Point::new(1.0, 0.0, 0.0))?;
    println!("sphere area {:.10}, calibration {:.10}", a.area, a.calibration);
    Ok(())
}
