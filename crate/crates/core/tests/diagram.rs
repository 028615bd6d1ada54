mod common;

use std::sync::Arc;

use catfrac::catalog::*;
use catfrac::diagram::*;
use catfrac::elements::grothendieck;
use catfrac::fincat::*;
use catfrac::Error;
use common::brute_functor_count;

fn bang(two: &Arc<FinCategory>, one: &Arc<FinCategory>) -> Functor {
    Functor::from_names(two.clone(), one.clone(), &[("a", "*"), ("b", "*")], &[("f", "id:*")]).unwrap()
}

#[test]
fn strictified_diagrams_validate() {
    let (one, two) = (terminal(), walking_arrow());
    let over_one = strict(one.clone(), Variance::Covariant, vec![two.clone()], vec![]);
    assert!(over_one.validate().is_valid());
    let over_two = strict(
        two.clone(),
        Variance::Covariant,
        vec![two.clone(), one.clone()],
        vec![("f", bang(&two, &one))],
    );
    assert!(over_two.validate().is_valid());
    for (_, d) in covariant_corpus().into_iter().chain(cofiltered_corpus()) {
        assert!(d.validate().is_valid());
    }
}

#[test]
fn strictify_rejects_non_functorial_assignment() {
    let two = walking_arrow();
    let collapse = Functor::from_names(
        two.clone(),
        two.clone(),
        &[("a", "a"), ("b", "b")],
        &[("f", "f"), ("id:a", "f")],
    );
    // `id:a ↦ f` is ill-typed, so either construction or strictification refuses it
    let result = collapse.and_then(|g| {
        Pseudofunctor::strictify(
            two.clone(),
            Variance::Covariant,
            vec![two.clone(), two.clone()],
            vec![Functor::identity(two.clone()), g, Functor::identity(two.clone())],
        )
    });
    assert!(matches!(result, Err(Error::Input(_))));
}

#[test]
fn swap_diagram_has_the_expected_unitor() {
    let d = swap_diagram(Variance::Covariant);
    assert!(d.validate().is_valid());
    let iso = d.category(ObjectId(0)).clone();
    let unit = d.unitor(ObjectId(0));
    assert_eq!(unit.component(object(&iso, "a")), arrow(&iso, "u'"));
    assert_eq!(unit.component(object(&iso, "b")), arrow(&iso, "u"));
}

#[test]
fn swap_compositor_replaced_by_identity_is_detected() {
    let d = swap_diagram(Variance::Covariant);
    let iso = d.category(ObjectId(0)).clone();
    let star = d.index().identity(ObjectId(0));
    let a = object(&iso, "a");
    let broken = d.with_compositor_component(star, star, a, iso.identity(a)).unwrap();
    assert!(!broken.validate().is_valid());
}

/// Strict diagrams whose fibers are ℤ/2, where every coherence equation
/// distinguishes the two elements.
fn group_diagrams() -> Vec<Arc<Pseudofunctor>> {
    let (one, two, z2) = (terminal(), walking_arrow(), cyclic_group(2));
    vec![
        strict(one, Variance::Covariant, vec![z2.clone()], vec![]),
        strict(
            two.clone(),
            Variance::Covariant,
            vec![z2.clone(), z2.clone()],
            vec![("f", Functor::identity(z2.clone()))],
        ),
        strict(
            two,
            Variance::Contravariant,
            vec![z2.clone(), z2.clone()],
            vec![("f", Functor::identity(z2))],
        ),
    ]
}

#[test]
fn every_single_component_perturbation_is_detected() {
    for d in group_diagrams() {
        let idx = d.index().clone();
        let mut tried = 0;
        for a in idx.objects() {
            let cat = d.category(a).clone();
            for x in cat.objects() {
                let current = d.unitor(a).component(x);
                for &g in cat.hom(cat.src(current), cat.tgt(current)) {
                    if g != current {
                        tried += 1;
                        assert!(!d.with_unitor_component(a, x, g).unwrap().validate().is_valid());
                    }
                }
            }
        }
        for (phi, psi) in idx.composable_pairs() {
            let cell = d.compositor(phi, psi).clone();
            let cat = cell.src().cod().clone();
            for x in cell.src().dom().objects() {
                let current = cell.component(x);
                for &g in cat.hom(cat.src(current), cat.tgt(current)) {
                    if g != current {
                        tried += 1;
                        assert!(!d
                            .with_compositor_component(phi, psi, x, g)
                            .unwrap()
                            .validate()
                            .is_valid());
                    }
                }
            }
        }
        assert!(tried > 0);
    }
}

#[test]
fn canonical_cocones_validate() {
    for (_, d) in covariant_corpus().into_iter().chain(cofiltered_corpus()) {
        let ell = grothendieck(&d).unwrap().canonical_cocone();
        assert!(ell.validate().is_valid());
    }
}

#[test]
fn non_identity_unit_two_cell_violates_coherence() {
    let (one, z2) = (terminal(), cyclic_group(2));
    let d = strict(one.clone(), Variance::Covariant, vec![one.clone()], vec![]);
    let x = Functor::constant(one.clone(), z2.clone(), ObjectId(0));
    let good = LaxTransformation::from_components(d.clone(), z2.clone(), vec![x.clone()], vec![vec![arrow(&z2, "e")]])
        .unwrap();
    assert!(good.validate().is_valid());
    let bad = LaxTransformation::from_components(d, z2.clone(), vec![x], vec![vec![arrow(&z2, "s1")]]).unwrap();
    assert!(!bad.validate().is_valid());
}

#[test]
fn pseudo_detection() {
    let (_, bang_diagram) = covariant_corpus().swap_remove(2);
    let ell = grothendieck(&bang_diagram).unwrap().canonical_cocone();
    assert!(!ell.is_pseudo());
    assert!(ell.non_invertible_two_cell().is_some());
    let (_, trivial) = covariant_corpus().swap_remove(0);
    assert!(grothendieck(&trivial).unwrap().canonical_cocone().is_pseudo());
}

#[test]
fn transformation_counts_match_functor_counts() {
    let corpus = covariant_corpus();
    let two = walking_arrow();
    // D over 𝟚 with both fibers 𝟙: transformations are functors out of 𝟚
    let lax = enumerate_transformations(&corpus[1].1, &two, TransformationKind::Lax);
    assert_eq!(lax.len(), 3);
    assert_eq!(brute_functor_count(&two, &two), 3);
    // D over 𝟙: transformations are functors out of D(*)
    for (_, x) in test_targets() {
        let n = enumerate_transformations(&corpus[0].1, &x, TransformationKind::Lax).len();
        assert_eq!(n, brute_functor_count(&two, &x));
    }
}

#[test]
fn pseudo_transformations_are_a_subset() {
    for (_, d) in covariant_corpus() {
        for (_, x) in test_targets() {
            let lax = enumerate_transformations(&d, &x, TransformationKind::Lax);
            let pseudo = enumerate_transformations(&d, &x, TransformationKind::Pseudo);
            assert!(pseudo.len() <= lax.len());
            assert!(pseudo.iter().all(|p| p.is_pseudo() && lax.contains(p)));
            assert!(lax.iter().all(|t| t.validate().is_valid()));
        }
    }
}

#[test]
fn whiskered_functors_are_transformations() {
    for (_, d) in covariant_corpus().into_iter().chain(cofiltered_corpus()) {
        let gd = grothendieck(&d).unwrap();
        for f in enumerate_functors(gd.carrier(), &walking_arrow()) {
            assert!(gd.functor_to_transformation(&f).unwrap().validate().is_valid());
        }
    }
}

#[test]
fn modifications_match_natural_transformations() {
    let x = walking_arrow();
    for (_, d) in covariant_corpus() {
        let gd = grothendieck(&d).unwrap();
        let ts = enumerate_transformations(&d, &x, TransformationKind::Lax);
        for s in &ts {
            assert!(Modification::identity(s).validate().is_valid());
            for t in &ts {
                let mods = enumerate_modifications(s, t).unwrap();
                let (fs, ft) = (
                    gd.transformation_to_functor(s).unwrap(),
                    gd.transformation_to_functor(t).unwrap(),
                );
                assert_eq!(mods.len(), enumerate_nat_trans(&fs, &ft).unwrap().len());
            }
        }
    }
}

#[test]
fn broken_modification_component_is_invalid() {
    let (_, d) = covariant_corpus().swap_remove(0);
    let x = walking_arrow();
    let ts = enumerate_transformations(&d, &x, TransformationKind::Lax);
    // the identity functor and the constant at `b` as transformations out of D over 𝟙
    let id = ts
        .iter()
        .find(|t| t.component(ObjectId(0)).object_map() == [ObjectId(0), ObjectId(1)])
        .unwrap();
    let cb = ts
        .iter()
        .find(|t| t.component(ObjectId(0)).object_map() == [ObjectId(1), ObjectId(1)])
        .unwrap();
    let comps = vec![arrow(&x, "f"), arrow(&x, "id:b")];
    let cell = NatTrans::new(
        id.component(ObjectId(0)).clone(),
        cb.component(ObjectId(0)).clone(),
        comps,
    )
    .unwrap();
    let m = Modification::new(id.clone(), cb.clone(), vec![cell]).unwrap();
    assert!(m.validate().is_valid());
    let bad_comps = vec![arrow(&x, "id:a"), arrow(&x, "id:b")];
    let bad = NatTrans::new(
        id.component(ObjectId(0)).clone(),
        cb.component(ObjectId(0)).clone(),
        bad_comps,
    )
    .unwrap();
    assert!(!Modification::new(id.clone(), cb.clone(), vec![bad])
        .unwrap()
        .validate()
        .is_valid());
}
