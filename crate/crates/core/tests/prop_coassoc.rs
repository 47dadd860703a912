use std::sync::OnceLock;

use kummer_coassoc::cli::{catalog, sphere_directions};
use kummer_coassoc::coassoc::{
    certificate_inequalities, check_assumption, classify_embedding, count_spheres, flat_model_residual, model_volume,
    perturbation_certificate, CertificateInput, CoassocData,
};
use kummer_coassoc::field::FieldScalar;
use kummer_coassoc::lattices::{orthogonal_primitive_pairs, BieberbachGroup, LatticeIm};
use kummer_coassoc::quaternions::{generate_subgroup, GroupLabel, RotationH};
use kummer_coassoc::resdata::{enumerate_admissible, table_row, Zeta};
use proptest::prelude::*;

/// Data sets that satisfy the hypotheses: catalog spheres plus enumerated
/// row members with a direction and a plane pair.
fn pool() -> &'static [CoassocData] {
    static POOL: OnceLock<Vec<CoassocData>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for e in catalog().unwrap().examples {
            for st in e.strata {
                out.extend(st.data().unwrap());
            }
        }
        let lattice = LatticeIm::standard();
        for row in 1..=5u8 {
            let group = table_row(row).unwrap().group;
            for zeta in enumerate_admissible(row, 2).unwrap().into_iter().take(12) {
                for dir in sphere_directions(&zeta) {
                    let spheres = count_spheres(&zeta, &dir).unwrap().embedded;
                    for (xi2, xi3) in orthogonal_primitive_pairs(&dir, &lattice, 1).into_iter().take(3) {
                        for s in spheres.iter().take(2) {
                            let d = CoassocData::new(s.clone(), xi2.clone(), xi3.clone(), group.clone(), zeta.clone()).unwrap();
                            if check_assumption(&d).unwrap().values().all(|c| c.pass) {
                                out.push(d);
                            }
                        }
                    }
                }
            }
        }
        out
    })
}

fn rotations() -> &'static [RotationH] {
    static ROT: OnceLock<Vec<RotationH>> = OnceLock::new();
    ROT.get_or_init(|| {
        let o = generate_subgroup(GroupLabel::BinaryOctahedral).unwrap().elements;
        let i = generate_subgroup(GroupLabel::BinaryIcosahedral).unwrap().elements;
        o.iter().chain(&i).map(|a| RotationH::left(a.clone()).unwrap()).collect()
    })
}

fn verdict(d: &CoassocData) -> (String, Option<u64>) {
    let c = classify_embedding(d).unwrap();
    (format!("{:?}", c.status), c.cover_degree)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn classification_ignores_swap_and_base_translation(pick in any::<prop::sample::Index>(), m in -3i64..=3, n in -3i64..=3) {
        let d = pick.get(pool());
        let base = verdict(d);
        let mut swapped = d.clone();
        std::mem::swap(&mut swapped.xi2, &mut swapped.xi3);
        prop_assert_eq!(verdict(&swapped), base.clone());
        let mut moved = d.clone();
        let shift = &d.xi2.scale(&FieldScalar::from_int(m)) + &d.xi3.scale(&FieldScalar::from_int(n));
        moved.base_point = &d.base_point + &shift;
        prop_assert_eq!(verdict(&moved), base);
    }

    #[test]
    fn gh_sphere_count_is_rotation_invariant(pick in any::<prop::sample::Index>(), r in any::<prop::sample::Index>()) {
        let d = pick.get(pool());
        let Zeta::Gh { points } = &d.zeta else { return Ok(()); };
        let m = r.get(rotations()).lambda2_plus();
        let rotated = Zeta::gh(points.iter().map(|p| m.apply(p)).collect());
        let a = count_spheres(&d.zeta, &d.xi1_hat).unwrap();
        let b = count_spheres(&rotated, &m.apply(&d.xi1_hat)).unwrap();
        prop_assert_eq!((a.embedded.len(), a.nodal.len()), (b.embedded.len(), b.nodal.len()));
    }

    #[test]
    fn volume_scales_quadratically(pick in any::<prop::sample::Index>(), t in 0.0f64..10.0) {
        let d = pick.get(pool());
        prop_assert_eq!(model_volume(d, t).unwrap(), t * t * model_volume(d, 1.0).unwrap());
    }

    #[test]
    fn certificate_holds_below_t_and_is_sharp(
        gamma in 0.2f64..2.0,
        extra in 0.05f64..2.0,
        c in 0.2f64..3.0,
        r_ball in 0.2f64..3.0,
        c_e in prop::option::of(0.1f64..5.0),
    ) {
        let mut input = CertificateInput::new(2.0 * gamma + extra, gamma, c, r_ball);
        input.c_e = c_e;
        let res = perturbation_certificate(&input).unwrap();
        prop_assert!(res.t_max > 0.0);
        for k in 1..=1000 {
            let t = res.t_max * k as f64 / 1001.0;
            let ok = certificate_inequalities(&input, t);
            prop_assert!(ok.iter().all(|b| *b), "t = {t}: {ok:?}");
        }
        let above = res.t_max * (1.0 + 3e-6);
        prop_assert!(!certificate_inequalities(&input, above).iter().all(|b| *b));
    }
}

#[test]
fn flat_residual_vanishes_on_enumerated_examples() {
    let lattice = LatticeIm::standard();
    let mut checked = 0;
    for row in 1..=5u8 {
        assert!(table_row(row).unwrap().group.lattice_acts_trivially());
        for zeta in enumerate_admissible(row, 2).unwrap() {
            for dir in sphere_directions(&zeta) {
                for (xi2, xi3) in orthogonal_primitive_pairs(&dir, &lattice, 1) {
                    let r = flat_model_residual(&dir, &xi2, &xi3, 4);
                    assert!(r < 1e-12, "row {row} {zeta:?} {xi2} {xi3}: {r}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn lattice_only_degree_is_the_plane_index() {
    // for Z^3 the index of <xi2, xi3> in the plane lattice is the content of xi2 x xi3
    let group = BieberbachGroup::lattice_only(LatticeIm::standard());
    let mut seen = [0usize; 2];
    for d in pool() {
        let mut d = d.clone();
        d.group = group.clone();
        if !check_assumption(&d).unwrap().values().all(|c| c.pass) {
            continue;
        }
        let n = d.xi2.cross(&d.xi3).to_f64().map(|x| x.round() as i64);
        let index = num_integer::gcd(num_integer::gcd(n[0], n[1]), n[2]).unsigned_abs();
        let expect = if index == 1 { "Embedded" } else { "CoverOfEmbedded" };
        assert_eq!(verdict(&d), (expect.to_string(), Some(index)));
        seen[usize::from(index > 1)] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0);
}
