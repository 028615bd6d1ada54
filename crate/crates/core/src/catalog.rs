//! Standard small categories, diagrams and fractions inputs used by the
//! tests, the acceptance suite and the CLI fixtures.

use std::sync::Arc;

use crate::diagram::{Pseudofunctor, Variance};
use crate::fincat::{ArrowId, CategoryBuilder, FinCategory, Functor, NatTrans, ObjectId};
use crate::fractions::FractionsInput;

fn build(b: CategoryBuilder) -> Arc<FinCategory> {
    Arc::new(b.build().expect("catalog categories are well formed"))
}

/// One object, one arrow.
pub fn terminal() -> Arc<FinCategory> {
    build(CategoryBuilder::new().object("*"))
}

/// `a −f→ b`.
pub fn walking_arrow() -> Arc<FinCategory> {
    build(CategoryBuilder::new().objects(["a", "b"]).arrow("f", "a", "b"))
}

/// `u: a ⇄ b :u'` with `u;u' = 1_a` and `u';u = 1_b`.
pub fn walking_iso() -> Arc<FinCategory> {
    build(
        CategoryBuilder::new()
            .objects(["a", "b"])
            .arrow("u", "a", "b")
            .arrow("u'", "b", "a")
            .compose("u", "u'", "id:a")
            .compose("u'", "u", "id:b"),
    )
}

/// `f, g: a ⇉ b`.
pub fn parallel_pair() -> Arc<FinCategory> {
    build(
        CategoryBuilder::new()
            .objects(["a", "b"])
            .arrow("f", "a", "b")
            .arrow("g", "a", "b"),
    )
}

/// `x −f→ y −g→ z` with composite `h`.
pub fn chain() -> Arc<FinCategory> {
    build(
        CategoryBuilder::new()
            .objects(["x", "y", "z"])
            .arrow("f", "x", "y")
            .arrow("g", "y", "z")
            .arrow("h", "x", "z")
            .compose("f", "g", "h"),
    )
}

pub fn discrete(n: usize) -> Arc<FinCategory> {
    let names: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    build(CategoryBuilder::new().objects(names.iter().map(String::as_str)))
}

/// The cyclic group of order `n` as a one-object category, generator `s`.
pub fn cyclic_group(n: usize) -> Arc<FinCategory> {
    let name = |k: usize| if k == 0 { "e".to_string() } else { format!("s{k}") };
    let mut b = CategoryBuilder::new().object("*").identity("*", "e");
    for k in 1..n {
        b = b.arrow(&name(k), "*", "*");
    }
    for i in 1..n {
        for j in 1..n {
            b = b.compose(&name(i), &name(j), &name((i + j) % n));
        }
    }
    build(b)
}

/// The monoid `{1, e}` with `e;e = e`.
pub fn idempotent() -> Arc<FinCategory> {
    build(
        CategoryBuilder::new()
            .object("*")
            .arrow("e", "*", "*")
            .compose("e", "e", "e"),
    )
}

/// `l ←p− s −q→ r`.
pub fn span_shape() -> Arc<FinCategory> {
    build(
        CategoryBuilder::new()
            .objects(["s", "l", "r"])
            .arrow("p", "s", "l")
            .arrow("q", "s", "r"),
    )
}

/// `l −p→ t ←q− r`.
pub fn cospan_shape() -> Arc<FinCategory> {
    build(
        CategoryBuilder::new()
            .objects(["l", "r", "t"])
            .arrow("p", "l", "t")
            .arrow("q", "r", "t"),
    )
}

/// A commuting square `f;h = g;k = d`.
pub fn square() -> Arc<FinCategory> {
    build(
        CategoryBuilder::new()
            .objects(["a", "b", "c", "d"])
            .arrow("f", "a", "b")
            .arrow("g", "a", "c")
            .arrow("h", "b", "d")
            .arrow("k", "c", "d")
            .arrow("diag", "a", "d")
            .compose("f", "h", "diag")
            .compose("g", "k", "diag"),
    )
}

/// `f, g: a ⇉ b −v→ c` with `f;v = g;v = w`. With `W = {identities, v}`
/// zippering fails.
pub fn coequalized_pair() -> Arc<FinCategory> {
    build(
        CategoryBuilder::new()
            .objects(["a", "b", "c"])
            .arrow("f", "a", "b")
            .arrow("g", "a", "b")
            .arrow("v", "b", "c")
            .arrow("w", "a", "c")
            .compose("f", "v", "w")
            .compose("g", "v", "w"),
    )
}

/// The four-element chain `0 → 1 → 2 → 3` as a poset.
pub fn poset_chain4() -> Arc<FinCategory> {
    let mut b = CategoryBuilder::new().objects(["0", "1", "2", "3"]);
    let name = |i: usize, j: usize| format!("{i}<{j}");
    for i in 0..4 {
        for j in i + 1..4 {
            b = b.arrow(&name(i, j), &i.to_string(), &j.to_string());
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                b = b.compose(&name(i, j), &name(j, k), &name(i, k));
            }
        }
    }
    build(b)
}

/// The walking iso with an extra arrow `x → a`.
pub fn iso_with_tail() -> Arc<FinCategory> {
    build(
        CategoryBuilder::new()
            .objects(["x", "a", "b"])
            .arrow("t", "x", "a")
            .arrow("u", "a", "b")
            .arrow("u'", "b", "a")
            .arrow("tu", "x", "b")
            .compose("u", "u'", "id:a")
            .compose("u'", "u", "id:b")
            .compose("t", "u", "tu")
            .compose("tu", "u'", "t"),
    )
}

/// A one-object table on `{e, p, q}` with `p;p = q`, `p;q = e`, `q;p = p`,
/// `q;q = q`. Not associative at `(p, p, p)`.
pub fn nonassociative_table() -> FinCategory {
    CategoryBuilder::new()
        .object("*")
        .identity("*", "e")
        .arrow("p", "*", "*")
        .arrow("q", "*", "*")
        .compose("p", "p", "q")
        .compose("p", "q", "e")
        .compose("q", "p", "p")
        .compose("q", "q", "q")
        .build()
        .expect("structurally well formed")
}

/// Small categories with at most four objects and fourteen arrows.
pub fn category_corpus() -> Vec<(&'static str, Arc<FinCategory>)> {
    vec![
        ("terminal", terminal()),
        ("walking arrow", walking_arrow()),
        ("walking iso", walking_iso()),
        ("parallel pair", parallel_pair()),
        ("chain", chain()),
        ("discrete 2", discrete(2)),
        ("cyclic 2", cyclic_group(2)),
        ("cyclic 3", cyclic_group(3)),
        ("idempotent", idempotent()),
        ("span", span_shape()),
        ("cospan", cospan_shape()),
        ("square", square()),
        ("coequalized pair", coequalized_pair()),
        ("poset 4", poset_chain4()),
        ("iso with tail", iso_with_tail()),
    ]
}

/// Test targets for the universal-property verifiers.
pub fn test_targets() -> Vec<(&'static str, Arc<FinCategory>)> {
    vec![
        ("terminal", terminal()),
        ("walking arrow", walking_arrow()),
        ("walking iso", walking_iso()),
        ("parallel pair", parallel_pair()),
        ("chain", chain()),
    ]
}

fn with_w(c: Arc<FinCategory>, names: &[&str]) -> FractionsInput {
    FractionsInput::from_names(c, names).expect("catalog names exist")
}

/// Fractions inputs that satisfy all four axioms.
pub fn fractions_corpus() -> Vec<(&'static str, FractionsInput)> {
    vec![
        ("walking arrow, W = all", FractionsInput::all(walking_arrow())),
        (
            "walking arrow, W = identities",
            FractionsInput::identities(walking_arrow()),
        ),
        (
            "chain, W = identities + f",
            with_w(chain(), &["id:x", "id:y", "id:z", "f"]),
        ),
        (
            "chain, W = identities + g",
            with_w(chain(), &["id:x", "id:y", "id:z", "g"]),
        ),
        ("chain, W = all", FractionsInput::all(chain())),
        ("walking iso, W = {u, u'}", with_w(walking_iso(), &["u", "u'"])),
        (
            "parallel pair, W = identities",
            FractionsInput::identities(parallel_pair()),
        ),
        ("idempotent, W = {e}", with_w(idempotent(), &["e"])),
        ("cyclic 2, W = {s1}", with_w(cyclic_group(2), &["s1"])),
        (
            "square, W = identities + f + k",
            with_w(square(), &["id:a", "id:b", "id:c", "id:d", "f", "k"]),
        ),
        (
            "span, W = identities + p",
            with_w(span_shape(), &["id:s", "id:l", "id:r", "p"]),
        ),
        (
            "poset 4, W = identities + 0<1 + 2<3",
            with_w(poset_chain4(), &["id:0", "id:1", "id:2", "id:3", "0<1", "2<3"]),
        ),
        ("iso with tail, W = all", FractionsInput::all(iso_with_tail())),
    ]
}

/// Fractions inputs where some axiom fails.
pub fn failing_fractions() -> Vec<(&'static str, FractionsInput)> {
    vec![
        ("walking arrow, W = {f}", with_w(walking_arrow(), &["f"])),
        (
            "coequalized pair, W = identities + v",
            with_w(coequalized_pair(), &["id:a", "id:b", "id:c", "v"]),
        ),
        ("discrete 2, W = empty", with_w(discrete(2), &[])),
        (
            "iso with tail, W = identities + t + u + u'",
            with_w(iso_with_tail(), &["id:x", "id:a", "id:b", "t", "u", "u'"]),
        ),
    ]
}

fn functor(
    dom: &Arc<FinCategory>,
    cod: &Arc<FinCategory>,
    objects: &[(&str, &str)],
    arrows: &[(&str, &str)],
) -> Functor {
    Functor::from_names(dom.clone(), cod.clone(), objects, arrows).expect("catalog functor data is total")
}

/// A strict diagram; identity arrows of the index go to identity functors.
pub fn strict(
    index: Arc<FinCategory>,
    variance: Variance,
    categories: Vec<Arc<FinCategory>>,
    functors: Vec<(&str, Functor)>,
) -> Arc<Pseudofunctor> {
    let mut all: Vec<Option<Functor>> = vec![None; index.arrow_count()];
    for a in index.objects() {
        all[index.identity(a).0] = Some(Functor::identity(categories[a.0].clone()));
    }
    for (name, f) in functors {
        all[index.arrow_named(name).expect("index arrow").0] = Some(f);
    }
    let functors = all
        .into_iter()
        .map(|f| f.expect("every index arrow assigned"))
        .collect();
    Arc::new(Pseudofunctor::strictify(index, variance, categories, functors).expect("strictly functorial"))
}

/// The swap on the walking iso and the natural iso `swap ⇒ id` with
/// components `u'` at `a` and `u` at `b`.
pub fn swap_on_iso() -> (Functor, NatTrans) {
    let iso = walking_iso();
    let swap = functor(&iso, &iso, &[("a", "b"), ("b", "a")], &[("u", "u'"), ("u'", "u")]);
    let theta = NatTrans::new(
        swap.clone(),
        Functor::identity(iso.clone()),
        vec![iso.arrow_named("u'").unwrap(), iso.arrow_named("u").unwrap()],
    )
    .expect("typed");
    (swap, theta)
}

/// Twists a diagram by replacing the functors at the given index arrows
/// with the swap on the walking iso.
fn twisted(base: &Pseudofunctor, at: &[&str]) -> Arc<Pseudofunctor> {
    let idx = base.index();
    let (swap, theta) = swap_on_iso();
    let mut functors = Vec::new();
    let mut isos = Vec::new();
    for phi in idx.arrows() {
        if at.contains(&idx.arrow_name(phi)) {
            functors.push(swap.clone());
            isos.push(theta.clone());
        } else {
            functors.push(base.functor(phi).clone());
            isos.push(NatTrans::identity(base.functor(phi)));
        }
    }
    Arc::new(base.twist(functors, isos).expect("twisting by a natural iso"))
}

/// A diagram over the terminal category with `D(1) = swap` on the walking
/// iso, unitor `(u', u)`.
pub fn swap_diagram(variance: Variance) -> Arc<Pseudofunctor> {
    let base = strict(terminal(), variance, vec![walking_iso()], vec![]);
    twisted(&base, &["id:*"])
}

/// Covariant diagrams for the oplax colimit verifier.
pub fn covariant_corpus() -> Vec<(&'static str, Arc<Pseudofunctor>)> {
    let two = walking_arrow();
    let one = terminal();
    let iso = walking_iso();
    let bang = functor(&two, &one, &[("a", "*"), ("b", "*")], &[("f", "id:*")]);
    let base_iso = strict(
        two.clone(),
        Variance::Covariant,
        vec![iso.clone(), iso.clone()],
        vec![("f", Functor::identity(iso.clone()))],
    );
    let pp = parallel_pair();
    vec![
        (
            "terminal index, D(*) = walking arrow",
            strict(one.clone(), Variance::Covariant, vec![two.clone()], vec![]),
        ),
        (
            "walking arrow index, D(a) = D(b) = terminal",
            strict(
                two.clone(),
                Variance::Covariant,
                vec![one.clone(), one.clone()],
                vec![("f", Functor::identity(one.clone()))],
            ),
        ),
        (
            "walking arrow index, D(f) = walking arrow → terminal",
            strict(
                two.clone(),
                Variance::Covariant,
                vec![two.clone(), one.clone()],
                vec![("f", bang)],
            ),
        ),
        ("terminal index, D(1) = swap", swap_diagram(Variance::Covariant)),
        ("walking arrow index, D(f) = swap", twisted(&base_iso, &["f"])),
        (
            "parallel pair index, constant functors",
            strict(
                pp.clone(),
                Variance::Covariant,
                vec![one.clone(), two.clone()],
                vec![
                    ("f", functor(&one, &two, &[("*", "a")], &[])),
                    ("g", functor(&one, &two, &[("*", "b")], &[])),
                ],
            ),
        ),
    ]
}

/// Contravariant diagrams over cofiltered index categories.
pub fn cofiltered_corpus() -> Vec<(&'static str, Arc<Pseudofunctor>)> {
    let two = walking_arrow();
    let one = terminal();
    let iso = walking_iso();
    let bang = functor(&two, &one, &[("a", "*"), ("b", "*")], &[("f", "id:*")]);
    let pick_b = functor(&one, &two, &[("*", "b")], &[]);
    let base_iso = strict(
        two.clone(),
        Variance::Contravariant,
        vec![iso.clone(), iso.clone()],
        vec![("f", Functor::identity(iso.clone()))],
    );
    let span = span_shape();
    let idem = idempotent();
    let const_b = functor(&two, &two, &[("a", "b"), ("b", "b")], &[("f", "id:b")]);
    vec![
        (
            "terminal index, D(*) = walking arrow",
            strict(one.clone(), Variance::Contravariant, vec![two.clone()], vec![]),
        ),
        (
            "walking arrow index, D(b) = walking arrow, D(a) = terminal",
            strict(
                two.clone(),
                Variance::Contravariant,
                vec![one.clone(), two.clone()],
                vec![("f", bang.clone())],
            ),
        ),
        (
            "walking arrow index, D(f) picks b",
            strict(
                two.clone(),
                Variance::Contravariant,
                vec![two.clone(), one.clone()],
                vec![("f", pick_b)],
            ),
        ),
        ("walking arrow index, D(f) = swap", twisted(&base_iso, &["f"])),
        (
            "span index",
            strict(
                span,
                Variance::Contravariant,
                vec![one.clone(), two.clone(), one.clone()],
                vec![("p", bang), ("q", Functor::identity(one.clone()))],
            ),
        ),
        (
            "idempotent index, D(e) constant at b",
            strict(idem, Variance::Contravariant, vec![two.clone()], vec![("e", const_b)]),
        ),
        ("terminal index, D(1) = swap", swap_diagram(Variance::Contravariant)),
    ]
}

/// Convenience lookups by name.
pub fn arrow(c: &FinCategory, name: &str) -> ArrowId {
    c.arrow_named(name).expect("arrow exists")
}

pub fn object(c: &FinCategory, name: &str) -> ObjectId {
    c.object_named(name).expect("object exists")
}
