//! Finite subgroups of Sp(1), the rotations `q ↦ a q b̄` and their induced
//! action on self-dual 2-forms.

use kummer_coassoc::quaternions::{alpha_sign, generate_subgroup, GroupLabel, Quat, RotationH};

fn main() -> kummer_coassoc::error::Result<()> {
    for label in [
        GroupLabel::Cyclic(3),
        GroupLabel::Cyclic(6),
        GroupLabel::Dicyclic(3),
        GroupLabel::BinaryTetrahedral,
        GroupLabel::BinaryOctahedral,
        GroupLabel::BinaryIcosahedral,
    ] {
        let g = generate_subgroup(label)?;
        println!(
            "{label:>6}: order {:>3}, closed {}, {} conjugacy classes",
            g.order(),
            g.is_closed(),
            g.conjugacy_classes().len()
        );
    }

    let iqi = RotationH::sandwich(Quat::i())?;
    let jqj = RotationH::sandwich(Quat::j())?;
    println!("\nq -> iqi sends k to {}", iqi.apply(&Quat::k()));
    println!("Lambda2+ of q -> iqi: {:?}", iqi.lambda2_plus());
    println!("Lambda2+ of q -> jqj: {:?}", jqj.lambda2_plus());
    println!("fiber signs: {:?} {:?}", iqi.fiber_sign(), jqj.fiber_sign());

    // how the rotations act on the generator of a cyclic group
    let c3 = generate_subgroup(GroupLabel::Cyclic(3))?;
    let c6 = generate_subgroup(GroupLabel::Cyclic(6))?;
    let kqk = RotationH::sandwich(Quat::k())?;
    for (name, r) in [("iqi", &iqi), ("jqj", &jqj), ("kqk", &kqk)] {
        println!("alpha({name}) on C3: {:?}, on C6: {:?}", alpha_sign(r, &c3)?, alpha_sign(r, &c6)?);
    }
    Ok(())
}
