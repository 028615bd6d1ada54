mod common;

use std::sync::Arc;

use catfrac::catalog::*;
use catfrac::fincat::*;
use catfrac::{Error, ViolationKind};
use common::*;
use proptest::prelude::*;

#[test]
fn walking_arrow_is_valid() {
    assert!(walking_arrow().validate().is_valid());
}

#[test]
fn empty_category_is_valid() {
    assert!(FinCategory::empty().validate().is_valid());
}

#[test]
fn rewired_left_identity_is_reported() {
    let two = walking_arrow();
    let (id_a, f) = (arrow(&two, "id:a"), arrow(&two, "f"));
    let broken = two.with_composite(id_a, f, id_a).unwrap();
    let report = broken.validate();
    assert!(report.has_kind(ViolationKind::Identity));
    assert!(report.violations().iter().any(|v| v.message.contains("(id:a,f)")));
}

#[test]
fn nonassociative_table_fails_at_ppp() {
    let c = nonassociative_table();
    let (p, q, e) = (arrow(&c, "p"), arrow(&c, "q"), arrow(&c, "e"));
    // evaluate both bracketings from the literal table
    let table = |x: ArrowId, y: ArrowId| match (x == p, y == p) {
        (true, true) => q,
        (true, false) if y == q => e,
        (false, true) if x == q => p,
        _ if x == q && y == q => q,
        _ if x == e => y,
        _ => x,
    };
    assert_ne!(table(table(p, p), p), table(p, table(p, p)));
    let report = c.validate();
    assert!(report
        .violations()
        .iter()
        .any(|v| v.kind == ViolationKind::Associativity && v.message.contains("(p,p,p)")));
}

#[test]
fn compose_examples() {
    let two = walking_arrow();
    let (f, id_b) = (arrow(&two, "f"), arrow(&two, "id:b"));
    assert_eq!(two.compose(f, id_b).unwrap(), f);
    assert!(matches!(two.compose(id_b, f), Err(Error::Domain(_))));
    let ch = chain();
    assert_eq!(ch.compose(arrow(&ch, "f"), arrow(&ch, "g")).unwrap(), arrow(&ch, "h"));
}

#[test]
fn builder_rejects_dangling_names() {
    let err = CategoryBuilder::new().object("a").arrow("f", "a", "b").build();
    assert!(matches!(err, Err(Error::Input(_))));
}

#[test]
fn functor_examples() {
    let two = walking_arrow();
    assert!(Functor::identity(two.clone()).validate().is_valid());
    let bad = Functor::from_names(two.clone(), two.clone(), &[("a", "a"), ("b", "b")], &[("f", "id:a")]).unwrap();
    assert!(bad.validate().has_kind(ViolationKind::Endpoint));
    let const_b = Functor::from_names(two.clone(), two.clone(), &[("a", "b"), ("b", "b")], &[("f", "id:b")]).unwrap();
    assert!(const_b.validate().is_valid());
    let partial = Functor::from_names(two.clone(), two.clone(), &[("a", "a")], &[]);
    assert!(matches!(partial, Err(Error::Input(_))));
}

fn constant(name: &str) -> Functor {
    let two = walking_arrow();
    Functor::constant(two.clone(), two.clone(), object(&two, name))
}

#[test]
fn nat_trans_examples() {
    let two = walking_arrow();
    let f = arrow(&two, "f");
    assert!(NatTrans::identity(&constant("a")).validate().is_valid());
    let alpha = NatTrans::new(constant("a"), constant("b"), vec![f, f]).unwrap();
    assert!(alpha.validate().is_valid());
    let broken = NatTrans::new(constant("a"), constant("b"), vec![f, arrow(&two, "id:b")]).unwrap();
    assert!(!broken.validate().is_valid());
    assert!(matches!(
        NatTrans::new(constant("a"), constant("b"), vec![f]),
        Err(Error::Input(_))
    ));
}

#[test]
fn functor_counts_match_brute_force() {
    let (two, iso, one) = (walking_arrow(), walking_iso(), terminal());
    assert_eq!(brute_functor_count(&two, &two), 3);
    assert_eq!(enumerate_functors(&two, &two).len(), 3);
    assert_eq!(brute_functor_count(&two, &iso), 4);
    assert_eq!(enumerate_functors(&two, &iso).len(), 4);
    for (_, x) in category_corpus() {
        assert_eq!(enumerate_functors(&one, &x).len(), x.object_count());
    }
}

#[test]
fn nat_trans_counts() {
    let id = Functor::identity(walking_arrow());
    assert_eq!(enumerate_nat_trans(&id, &id).unwrap().len(), 1);
    assert_eq!(enumerate_nat_trans(&constant("a"), &constant("b")).unwrap().len(), 1);
    assert_eq!(enumerate_nat_trans(&constant("b"), &constant("a")).unwrap().len(), 0);
    let other = Functor::identity(walking_iso());
    assert!(matches!(enumerate_nat_trans(&id, &other), Err(Error::Domain(_))));
}

#[test]
fn shape_examples() {
    let two = walking_arrow();
    assert!(check_shape(&two, Direction::Filtered).holds);
    assert!(check_shape(&two, Direction::Cofiltered).holds);
    let disc = check_shape(&discrete(2), Direction::Filtered);
    assert!(!disc.holds && disc.failure.is_some());
    assert!(!check_shape(&parallel_pair(), Direction::Filtered).holds);
    assert!(!check_shape(&FinCategory::empty(), Direction::Filtered).holds);
}

#[test]
fn isomorphism_examples() {
    let (two, iso) = (walking_arrow(), walking_iso());
    let w = find_isomorphism(&two, &two).unwrap();
    assert!(w.verify());
    assert!(find_isomorphism(&two, &iso).is_none());
    let relabeled = Arc::new(permuted(&iso, &[1, 0], &[1, 0, 3, 2]));
    assert!(find_isomorphism(&iso, &relabeled).unwrap().verify());
}

#[test]
fn opposite_is_an_involution() {
    for (_, c) in category_corpus() {
        let op = Arc::new(c.opposite());
        assert!(op.validate().is_valid());
        assert_eq!(*c, op.opposite());
    }
}

proptest! {
    #[test]
    fn corpus_and_preorders_validate(c in arb_preorder()) {
        prop_assert!(c.validate().is_valid());
    }

    #[test]
    fn compose_agrees_with_table(c in arb_preorder()) {
        for (f, g) in c.composable_pairs() {
            prop_assert_eq!(c.compose(f, g).unwrap(), c.composite(f, g).unwrap());
        }
    }

    #[test]
    fn enumeration_is_exact(c in arb_preorder(), k in 0usize..5) {
        let x = test_targets()[k].1.clone();
        let all = enumerate_functors(&c, &x);
        prop_assert_eq!(all.len(), brute_functor_count(&c, &x));
        for (i, f) in all.iter().enumerate() {
            prop_assert!(f.validate().is_valid());
            prop_assert!(all[..i].iter().all(|g| g != f));
        }
        prop_assert_eq!(all, enumerate_functors(&c, &x));
    }

    #[test]
    fn shape_is_self_dual(c in arb_preorder()) {
        let op = c.opposite();
        prop_assert_eq!(
            check_shape(&c, Direction::Filtered).holds,
            check_shape(&op, Direction::Cofiltered).holds
        );
    }

    #[test]
    fn relabeling_is_detected_as_isomorphism(
        (c, objs, arrs) in (0usize..15).prop_flat_map(|i| {
            let c = category_corpus()[i].1.clone();
            let (n, m) = (c.object_count(), c.arrow_count());
            (Just(c), arb_permutation(n), arb_permutation(m))
        })
    ) {
        let d = Arc::new(permuted(&c, &objs, &arrs));
        let w = find_isomorphism(&c, &d);
        prop_assert!(w.is_some());
        let w = w.unwrap();
        prop_assert!(w.verify());
        prop_assert!(w.forward.validate().is_valid() && w.backward.validate().is_valid());
    }
}
