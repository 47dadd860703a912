use kummer_coassoc::field::FieldScalar;
use kummer_coassoc::quaternions::{alpha_sign, generate_subgroup, GroupLabel, Quat, RotationH};
use proptest::prelude::*;
use std::sync::OnceLock;

/// C24 and j·C24: the normalizer of every cyclic subgroup of the i-circle.
fn circle() -> &'static [Quat] {
    static POOL: OnceLock<Vec<Quat>> = OnceLock::new();
    POOL.get_or_init(|| {
        let c24 = generate_subgroup(GroupLabel::Cyclic(24)).unwrap().elements;
        let mut out = c24.clone();
        out.extend(c24.iter().map(|q| &Quat::j() * q));
        out
    })
}

/// Exact unit quaternions: 2O, 2I, C24 and j·C24.
fn pool() -> &'static [Quat] {
    static POOL: OnceLock<Vec<Quat>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for label in [GroupLabel::BinaryOctahedral, GroupLabel::BinaryIcosahedral] {
            out.extend(generate_subgroup(label).unwrap().elements);
        }
        out.extend(circle().iter().cloned());
        out
    })
}

fn rotation(pool: &[Quat], a: usize, b: usize) -> RotationH {
    RotationH::new(pool[a % pool.len()].clone(), pool[b % pool.len()].clone()).unwrap()
}

fn labels() -> Vec<GroupLabel> {
    let mut v: Vec<GroupLabel> = [1, 2, 3, 4, 6, 8, 12, 24].map(GroupLabel::Cyclic).to_vec();
    v.extend([2, 3, 4, 6].map(GroupLabel::Dicyclic));
    v.extend([GroupLabel::BinaryTetrahedral, GroupLabel::BinaryOctahedral, GroupLabel::BinaryIcosahedral]);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn lambda2_plus_is_a_homomorphism(a1 in 0usize..1000, b1 in 0usize..1000, a2 in 0usize..1000, b2 in 0usize..1000) {
        let p = pool();
        let (r1, r2) = (rotation(p, a1, b1), rotation(p, a2, b2));
        prop_assert_eq!(r1.compose(&r2).lambda2_plus(), &r1.lambda2_plus() * &r2.lambda2_plus());
        // and the composition acts as the composite map
        let q = Quat::from_ints(1, 2, -1, 3);
        prop_assert_eq!(r1.compose(&r2).apply(&q), r1.apply(&r2.apply(&q)));
    }

    #[test]
    fn lambda2_plus_lies_in_so3(a in 0usize..1000, b in 0usize..1000) {
        let m = rotation(pool(), a, b).lambda2_plus();
        prop_assert!(m.is_orthogonal());
        prop_assert_eq!(m.det(), FieldScalar::one());
    }

    #[test]
    fn subgroups_are_closed_with_the_right_order(l in 0usize..15, x in 0usize..1000, y in 0usize..1000) {
        let label = labels()[l];
        let g = generate_subgroup(label).unwrap();
        prop_assert_eq!(g.order(), label.order());
        prop_assert!(g.is_closed());
        let (u, v) = (&g.elements[x % g.order()], &g.elements[y % g.order()]);
        prop_assert!(g.contains(&(u * v)));
        prop_assert!(g.contains(&u.conj()));
    }

    #[test]
    fn alpha_sign_is_multiplicative(n in prop::sample::select(vec![3u32, 4, 6, 8, 12]), a1 in 0usize..1000, b1 in 0usize..1000, a2 in 0usize..1000, b2 in 0usize..1000) {
        let gamma = generate_subgroup(GroupLabel::Cyclic(n)).unwrap();
        let r = |a: usize, b: usize| {
            RotationH::new(pool()[a % pool().len()].clone(), circle()[b % circle().len()].clone()).unwrap()
        };
        let (r1, r2) = (r(a1, b1), r(a2, b2));
        let sign = |x: &RotationH| alpha_sign(x, &gamma).unwrap().as_i8().expect("in the normalizer");
        prop_assert_eq!(sign(&r1) * sign(&r2), sign(&r1.compose(&r2)));
    }
}
