use std::sync::Arc;

use catfrac::catalog::*;
use catfrac::diagram::*;
use catfrac::elements::*;
use catfrac::fincat::*;
use catfrac::Error;

/// `Σ_φ |D_φ|` computed from the fibers alone: for covariant `D`, arrows of
/// `D(B)` out of `D(φ)(a)`; for contravariant `D`, arrows of `D(A)` into
/// `D(φ)(b)`.
fn cofiber_sizes(d: &Pseudofunctor) -> Vec<usize> {
    let idx = d.index();
    idx.arrows()
        .map(|phi| {
            let dphi = d.functor(phi);
            let (dom, cod) = (dphi.dom(), dphi.cod());
            match d.variance() {
                Variance::Covariant => dom
                    .objects()
                    .map(|a| cod.arrows().filter(|&f| cod.src(f) == dphi.object(a)).count())
                    .sum(),
                Variance::Contravariant => dom
                    .objects()
                    .map(|b| cod.arrows().filter(|&f| cod.tgt(f) == dphi.object(b)).count())
                    .sum(),
            }
        })
        .collect()
}

#[test]
fn diagram_over_terminal_recovers_its_fiber() {
    for variance in [Variance::Covariant, Variance::Contravariant] {
        for (_, c) in category_corpus() {
            let d = strict(terminal(), variance, vec![c.clone()], vec![]);
            let gd = grothendieck(&d).unwrap();
            let w = find_isomorphism(gd.carrier(), &c).expect("isomorphic to the fiber");
            assert!(w.verify());
        }
    }
}

#[test]
fn trivial_fibers_over_walking_arrow() {
    let (_, d) = covariant_corpus().swap_remove(1);
    let gd = grothendieck(&d).unwrap();
    assert_eq!((gd.carrier().object_count(), gd.carrier().arrow_count()), (2, 3));
    assert!(find_isomorphism(gd.carrier(), &walking_arrow()).is_some());
}

#[test]
fn three_objects_six_arrows() {
    let (_, d) = covariant_corpus().swap_remove(2);
    assert_eq!(cofiber_sizes(&d), vec![3, 1, 2]);
    let gd = grothendieck(&d).unwrap();
    assert_eq!(gd.carrier().object_count(), 3);
    assert_eq!(gd.carrier().arrow_count(), 6);
}

#[test]
fn counts_match_cofiber_arithmetic() {
    for (_, d) in covariant_corpus().into_iter().chain(cofiltered_corpus()) {
        let gd = grothendieck(&d).unwrap();
        let objects: usize = d.index().objects().map(|a| d.category(a).object_count()).sum();
        assert_eq!(gd.carrier().object_count(), objects);
        assert_eq!(gd.carrier().arrow_count(), cofiber_sizes(&d).iter().sum::<usize>());
        assert!(gd.carrier().validate().is_valid());
    }
}

#[test]
fn invalid_diagram_is_a_precondition_error() {
    let d = swap_diagram(Variance::Covariant);
    let iso = d.category(ObjectId(0)).clone();
    let star = d.index().identity(ObjectId(0));
    let a = object(&iso, "a");
    let broken = Arc::new(d.with_compositor_component(star, star, a, iso.identity(a)).unwrap());
    assert!(matches!(grothendieck(&broken), Err(Error::Precondition(_))));
}

#[test]
fn strict_cocone_is_the_inclusion() {
    for (_, d) in covariant_corpus().into_iter().take(3) {
        let gd = grothendieck(&d).unwrap();
        let ell = gd.canonical_cocone();
        let idx = d.index();
        for a in idx.objects() {
            let cat = d.category(a);
            for f in cat.arrows() {
                let tag = gd.arrow_tag(ell.component(a).arrow(f));
                assert_eq!((tag.index, tag.fiber), (idx.identity(a), f));
            }
        }
        for phi in idx.arrows() {
            let dphi = d.functor(phi);
            for o in dphi.dom().objects() {
                let tag = gd.arrow_tag(ell.two_cell(phi).component(o));
                assert_eq!(tag.index, phi);
                assert!(dphi.cod().is_identity(tag.fiber));
            }
        }
    }
}

#[test]
fn cocone_two_cells_factor_arrows() {
    // (φ, f) = ℓ_φ at a, followed by ℓ_B(f)
    for (_, d) in covariant_corpus() {
        let gd = grothendieck(&d).unwrap();
        let ell = gd.canonical_cocone();
        let c = gd.carrier();
        for arr in c.arrows() {
            let tag = gd.arrow_tag(arr);
            let b = d.index().tgt(tag.index);
            let via = c
                .compose(
                    ell.two_cell(tag.index).component(tag.base),
                    ell.component(b).arrow(tag.fiber),
                )
                .unwrap();
            assert_eq!(via, arr);
        }
    }
}

#[test]
fn cleavage_examples() {
    let (_, d) = cofiltered_corpus().swap_remove(2);
    assert_eq!(d.category(ObjectId(0)).object_count(), 2);
    let gd = grothendieck(&d).unwrap();
    let cl = gd.cleavage().unwrap();
    assert_eq!(cl.members.len(), 2 + 1 + 1);
    for (&m, &(phi, b)) in cl.members.iter().zip(&cl.tags) {
        assert_eq!(gd.object_tag(gd.carrier().tgt(m)), (d.index().tgt(phi), b));
    }
    let (_, cov) = covariant_corpus().swap_remove(0);
    assert!(matches!(grothendieck(&cov).unwrap().cleavage(), Err(Error::Domain(_))));
}

#[test]
fn cleavage_over_terminal_is_the_identities() {
    let (_, d) = cofiltered_corpus().swap_remove(0);
    let gd = grothendieck(&d).unwrap();
    let cl = gd.cleavage().unwrap();
    let c = gd.carrier();
    let ids: Vec<ArrowId> = c.objects().map(|x| c.identity(x)).collect();
    assert_eq!(cl.members, ids);
}

#[test]
fn cocone_corresponds_to_the_identity_functor() {
    for (_, d) in covariant_corpus().into_iter().chain(cofiltered_corpus()) {
        let gd = grothendieck(&d).unwrap();
        let ell = gd.canonical_cocone();
        let id = Functor::identity(gd.carrier().clone());
        assert_eq!(gd.transformation_to_functor(&ell).unwrap(), id);
        assert_eq!(gd.functor_to_transformation(&id).unwrap(), ell);
    }
}

#[test]
fn induced_functor_on_objects_is_the_component() {
    for (_, d) in covariant_corpus() {
        let gd = grothendieck(&d).unwrap();
        let x = walking_iso();
        for t in enumerate_transformations(&d, &x, TransformationKind::Lax) {
            let theta = gd.transformation_to_functor(&t).unwrap();
            for o in gd.carrier().objects() {
                let (a, local) = gd.object_tag(o);
                assert_eq!(theta.object(o), t.component(a).object(local));
            }
        }
    }
}

#[test]
fn functor_round_trips_on_the_corpus() {
    for (_, d) in covariant_corpus().into_iter().chain(cofiltered_corpus()) {
        let gd = grothendieck(&d).unwrap();
        for (_, x) in test_targets() {
            for f in enumerate_functors(gd.carrier(), &x) {
                let t = gd.functor_to_transformation(&f).unwrap();
                assert_eq!(gd.transformation_to_functor(&t).unwrap(), f);
            }
        }
    }
}

#[test]
fn functors_inverting_the_cleavage_give_pseudo_transformations() {
    for (_, d) in cofiltered_corpus() {
        let gd = grothendieck(&d).unwrap();
        let members = gd.cleavage().unwrap().members;
        for (_, x) in test_targets() {
            for f in enumerate_functors(gd.carrier(), &x) {
                if members.iter().all(|&m| x.is_iso(f.arrow(m))) {
                    assert!(gd.functor_to_transformation(&f).unwrap().is_pseudo());
                }
            }
        }
    }
}

#[test]
fn oplax_colimit_verifier_passes_on_the_corpus() {
    for (_, d) in covariant_corpus().into_iter().chain(cofiltered_corpus()) {
        for (_, x) in test_targets() {
            let report = verify_oplax_colimit(&d, &x).unwrap();
            assert!(report.passed(), "{report}");
        }
    }
    let (_, d) = covariant_corpus().swap_remove(1);
    let report = verify_oplax_colimit(&d, &walking_arrow()).unwrap();
    let counts = report.checks.iter().find(|c| c.label == "1-cell counts").unwrap();
    assert!(counts.detail.contains('3'));
}

#[test]
fn rewired_carrier_fails_the_verifier() {
    let (_, d) = covariant_corpus().swap_remove(2);
    let gd = grothendieck(&d).unwrap();
    let c = gd.carrier();
    // rewire the first composite of two non-identities to some other arrow
    let (f, g) = c
        .composable_pairs()
        .find(|&(f, g)| !c.is_identity(f) && !c.is_identity(g))
        .expect("a composable pair of non-identities");
    let h = c.arrows().find(|&k| Some(k) != c.composite(f, g)).unwrap();
    let fake = gd.with_carrier(c.with_composite(f, g, h).unwrap()).unwrap();
    let report = verify_oplax_colimit_against(&fake, &walking_arrow());
    assert!(!report.passed());
    assert!(report.counterexample.is_some());
}
