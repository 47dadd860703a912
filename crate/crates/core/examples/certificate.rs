//! The perturbation window: largest t for which the contraction inequalities hold.

use kummer_coassoc::coassoc::{certificate_inequalities, perturbation_certificate, CertificateInput};

fn main() {
    let input = CertificateInput::new(2.5, 1.0, 1.0, 1.0).with_c_e(1.0);
    let res = perturbation_certificate(&input).unwrap();
    println!("T = {:.8}, r(t) = {} t^{}", res.t_max, res.radius_coefficient, res.radius_exponent);
    for f in [0.5, 0.99, 1.01, 2.0] {
        let t = res.t_max * f;
        println!("  t = {t:.6}: (a, b, c) = {:?}", certificate_inequalities(&input, t));
    }

    for c_e in [0.5, 1.0, 2.0, 4.0] {
        let t = perturbation_certificate(&input.with_c_e(c_e)).unwrap().t_max;
        println!("c_E = {c_e}: T = {t:.6}");
    }
    let default = perturbation_certificate(&CertificateInput::new(2.5, 1.0, 1.0, 1.0)).unwrap();
    println!("default c_E = {} ({:?})", default.c_e, default.c_e_source);

    match perturbation_certificate(&CertificateInput::new(1.5, 1.0, 1.0, 1.0)) {
        Ok(r) => println!("unexpected certificate {r:?}"),
        Err(e) => println!("beta = 1.5: {e}"),
    }
}
