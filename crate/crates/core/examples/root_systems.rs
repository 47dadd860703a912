//! ADE root systems, Weyl reduction of a Cartan weight, and the diagram
//! automorphism a normalizing rotation induces through McKay.

use kummer_coassoc::lattices::ImVec;
use kummer_coassoc::quaternions::{generate_subgroup, GroupLabel, Quat, RotationH};
use kummer_coassoc::rootsys::{in_delta_circ, mckay_automorphism, weyl_canonical, CartanWeight, RootLabel, RootSystem};

fn main() -> kummer_coassoc::error::Result<()> {
    for label in [RootLabel::A(5), RootLabel::D(5), RootLabel::E6, RootLabel::E7, RootLabel::E8] {
        let phi = RootSystem::build(label);
        println!("{label}: rank {}, {} roots", phi.rank, phi.roots.len());
    }

    let d5 = RootSystem::build(RootLabel::D(5));
    let zeta = CartanWeight::along(&ImVec::unit_i(), &[0, 1, 2, 3, 4]);
    println!("\nzeta = (0,1,2,3,4)i on D5, generic: {}", in_delta_circ(&zeta, &d5)?);
    let moved = zeta.apply_word(&d5, &[0, 3, 1, 4, 2]);
    let canon = weyl_canonical(&moved, &d5)?;
    println!("after a Weyl word, canonical simple values:");
    for v in canon.simple_values(&d5) {
        println!("  {v}");
    }
    let degenerate = CartanWeight::along(&ImVec::unit_i(), &[0, 1, 1, 3, 4]);
    println!("zeta = (0,1,1,3,4)i generic: {}", in_delta_circ(&degenerate, &d5)?);

    let dic3 = generate_subgroup(GroupLabel::Dicyclic(3))?;
    for (name, r) in [("iqi", RotationH::sandwich(Quat::i())?), ("jqj", RotationH::sandwich(Quat::j())?)] {
        let m = mckay_automorphism(&r, &dic3)?;
        println!("{name} on the D5 diagram: order {}, identity {}", m.order(), m.is_identity());
    }
    Ok(())
}
