//! Primitive vectors, orthogonal plane pairs and the first eigenvalue of the
//! collapsing flat 2-torus.

use kummer_coassoc::field::FieldScalar;
use kummer_coassoc::lattices::{covolume, is_primitive, orthogonal_primitive_pairs, spectral_gap, ImVec, LatticeIm};

fn main() -> kummer_coassoc::error::Result<()> {
    let lattice = LatticeIm::standard();
    let xi1 = ImVec::from_ints(1, 1, 0);
    println!("{xi1} primitive: {}", is_primitive(&xi1, &lattice)?);
    println!("{} primitive: {}", ImVec::from_ints(2, 2, 0), is_primitive(&ImVec::from_ints(2, 2, 0), &lattice)?);

    let pairs = orthogonal_primitive_pairs(&xi1, &lattice, 1);
    println!("\nplanes orthogonal to {xi1}, height 1:");
    for (xi2, xi3) in &pairs {
        println!("  ({xi2}, {xi3}) covolume^2 {}", covolume(xi2, xi3).squared);
    }

    let (xi2, xi3) = &pairs[0];
    println!("\ngap of R^2/<xi2/t, xi3/t>:");
    for (p, q) in [(1, 1), (1, 2), (1, 10), (1, 100)] {
        let t = FieldScalar::from_ratio(p, q);
        let g = spectral_gap(xi2, xi3, &t)?;
        println!("  t = {t:<6} |dual|^2 = {:<10} gap = {:.6}", g.dual_min_sq, g.value);
    }
    Ok(())
}
