//! Property tests for the arithmetic kernel, the PV ring and the tree
//! pairing identity.

use proptest::collection::vec;
use proptest::prelude::*;
use std::collections::BTreeMap;
use trislope::chow::{pv_mul, BundleData, DivY, PVClass, SurfaceModel, YClass};
use trislope::poly::{var, MPoly};
use trislope::rational::Rat;
use trislope::trees::{tree_product, TreeComponent, TreeFiber};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rat::new(n, d))
}

fn arb_mono() -> impl Strategy<Value = MPoly> {
    (0u32..=2, 0u32..=2).prop_map(|(eg, ei)| &var("g").pow(eg) * &var("i").pow(ei))
}

fn arb_poly() -> impl Strategy<Value = MPoly> {
    vec((arb_rat(), arb_mono()), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(MPoly::zero(), |acc, (c, m)| &acc + &m.scale(&c))
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert!((&(&(&a * &b) * &c) - &(&a * &(&b * &c))).is_zero());
        prop_assert!((&(&a * &(&b + &c)) - &(&(&a * &b) + &(&a * &c))).is_zero());
        prop_assert!((&(&a + &b) - &(&b + &a)).is_zero());
        prop_assert!((&(&a * &b) - &(&b * &a)).is_zero());
    }

    #[test]
    fn eval_is_homomorphism(a in arb_poly(), b in arb_poly(), g in arb_rat(), i in arb_rat()) {
        let bind = BTreeMap::from([("g".to_string(), g), ("i".to_string(), i)]);
        let lhs = (&a * &b).eval(&bind);
        let rhs = &a.eval(&bind) * &b.eval(&bind);
        prop_assert!((&lhs - &rhs).is_zero());
        let lhs = (&a + &b).eval(&bind);
        let rhs = &a.eval(&bind) + &b.eval(&bind);
        prop_assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn canonical_form_is_order_free(terms in vec(arb_poly(), 1..5)) {
        let forward = terms.iter().fold(MPoly::zero(), |acc, t| &acc + t);
        let backward = terms.iter().rev().fold(MPoly::zero(), |acc, t| &acc + t);
        prop_assert_eq!(forward, backward);
    }
}

/// A random rooted tree shape: parent index and multiplicity per non-root
/// component.
fn arb_tree() -> impl Strategy<Value = TreeFiber> {
    vec((any::<u8>(), prop_oneof![Just(1u8), Just(2u8)]), 0..7).prop_map(|specs| {
        let mut comps = vec![TreeComponent {
            id: "R".to_string(),
            parent: None,
            mult: 1,
            p: MPoly::zero(),
        }];
        for (k, (raw_parent, mult)) in specs.into_iter().enumerate() {
            let parent = if k == 0 {
                "R".to_string()
            } else {
                let idx = (raw_parent as usize) % (k + 1);
                if idx == 0 {
                    "R".to_string()
                } else {
                    format!("E{idx}")
                }
            };
            comps.push(TreeComponent {
                id: format!("E{}", k + 1),
                parent: Some(parent),
                mult,
                p: MPoly::int(k as i64),
            });
        }
        TreeFiber::new(comps).expect("well-formed random tree")
    })
}

proptest! {
    #[test]
    fn tree_pairing_identity(tree in arb_tree(), seeds in vec((arb_rat(), arb_rat()), 8)) {
        // Root-vanishing rational functions; tree_product asserts the
        // bilinear expansion against -sum m F H internally.
        let mut f = BTreeMap::new();
        let mut h = BTreeMap::new();
        for (idx, comp) in tree.non_roots().enumerate() {
            let (a, b) = &seeds[idx % seeds.len()];
            f.insert(comp.id.clone(), MPoly::constant(a.clone()));
            h.insert(comp.id.clone(), MPoly::constant(b.clone()));
        }
        prop_assert!(tree_product(&tree, &f, &h).is_ok());
    }

    #[test]
    fn pv_ring_commutes_and_associates(
        tree in arb_tree(),
        coeffs in vec(arb_rat(), 12),
        c2 in arb_poly(),
    ) {
        let model = SurfaceModel::with_trees(
            MPoly::zero(),
            vec![tree.clone()],
            trislope::trees::TreeMode::Trigonal,
        ).unwrap();
        let bundle = BundleData::new(model.c1_divisor(&var("c"), &var("d")), c2);
        let mk = |s: &Rat, b0: &Rat, f: &Rat, pt: &Rat| PVClass {
            y0: YClass {
                s: MPoly::constant(s.clone()),
                d: DivY::new(MPoly::constant(b0.clone()), MPoly::constant(f.clone())),
                pt: MPoly::constant(pt.clone()),
            },
            y1: YClass::scalar(MPoly::constant(f.clone())),
        };
        let a = mk(&coeffs[0], &coeffs[1], &coeffs[2], &coeffs[3]);
        let b = mk(&coeffs[4], &coeffs[5], &coeffs[6], &coeffs[7]);
        let c = mk(&coeffs[8], &coeffs[9], &coeffs[10], &coeffs[11]);
        let ab = pv_mul(&a, &b, &bundle, &model).unwrap();
        let ba = pv_mul(&b, &a, &bundle, &model).unwrap();
        prop_assert_eq!(&ab, &ba);
        let left = pv_mul(&ab, &c, &bundle, &model).unwrap();
        let right = pv_mul(&a, &pv_mul(&b, &c, &bundle, &model).unwrap(), &bundle, &model).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn twist_preserves_discriminant(
        c1_b0 in arb_rat(), c1_f in arb_rat(), c2 in arb_rat(),
        m_b0 in arb_rat(), m_f in arb_rat(),
    ) {
        let model = SurfaceModel::ruled(MPoly::zero());
        let v = BundleData::new(
            DivY::new(MPoly::constant(c1_b0), MPoly::constant(c1_f)),
            MPoly::constant(c2),
        );
        let m = DivY::new(MPoly::constant(m_b0), MPoly::constant(m_f));
        let before = v.c1_sq_minus_4c2(&model).unwrap();
        let after = v.twist(&m, &model).unwrap().c1_sq_minus_4c2(&model).unwrap();
        prop_assert!((&before - &after).is_zero());
    }
}
