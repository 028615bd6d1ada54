use std::sync::Arc;

use super::{ArrowId, FinCategory, Functor, NatTrans, ObjectId};
use crate::error::{Error, Result};

/// Every functor `c → x`, in lexicographic order of (object assignment,
/// arrow assignment) under declaration order.
pub fn enumerate_functors(c: &Arc<FinCategory>, x: &Arc<FinCategory>) -> Vec<Functor> {
    let mut out = Vec::new();
    let mut objects = vec![ObjectId(0); c.object_count()];
    assign_objects(c, x, 0, &mut objects, &mut out);
    out
}

fn assign_objects(
    c: &Arc<FinCategory>,
    x: &Arc<FinCategory>,
    next: usize,
    objects: &mut Vec<ObjectId>,
    out: &mut Vec<Functor>,
) {
    if next == c.object_count() {
        let mut arrows = vec![None; c.arrow_count()];
        let constraints = CompositeConstraints::new(c);
        assign_arrows(c, x, 0, objects, &mut arrows, &constraints, out);
        return;
    }
    for y in x.objects() {
        objects[next] = y;
        // hom-set pruning: every arrow between assigned objects needs a target
        let viable = (0..=next).all(|i| {
            let (p, q) = (ObjectId(i), ObjectId(next));
            (c.hom(p, q).is_empty() || !x.hom(objects[i], y).is_empty())
                && (c.hom(q, p).is_empty() || !x.hom(y, objects[i]).is_empty())
        });
        if viable {
            assign_objects(c, x, next + 1, objects, out);
        }
    }
}

/// For each arrow index `k`, the composable triples `(f, g, fg)` whose
/// largest index is `k`, so they can be checked once `k` is assigned.
struct CompositeConstraints {
    by_last: Vec<Vec<(ArrowId, ArrowId, ArrowId)>>,
}

impl CompositeConstraints {
    fn new(c: &FinCategory) -> Self {
        let mut by_last = vec![Vec::new(); c.arrow_count()];
        for (f, g) in c.composable_pairs() {
            let h = c.composite(f, g).expect("composable");
            let last = f.0.max(g.0).max(h.0);
            by_last[last].push((f, g, h));
        }
        CompositeConstraints { by_last }
    }
}

fn assign_arrows(
    c: &Arc<FinCategory>,
    x: &Arc<FinCategory>,
    next: usize,
    objects: &[ObjectId],
    arrows: &mut Vec<Option<ArrowId>>,
    constraints: &CompositeConstraints,
    out: &mut Vec<Functor>,
) {
    if next == c.arrow_count() {
        let on_arrows = arrows.iter().map(|a| a.expect("assigned")).collect();
        out.push(
            Functor::new(c.clone(), x.clone(), objects.to_vec(), on_arrows).expect("enumerated assignment is total"),
        );
        return;
    }
    let f = ArrowId(next);
    let (p, q) = (objects[c.src(f).0], objects[c.tgt(f).0]);
    let forced_identity = c.is_identity(f).then(|| x.identity(p));
    for &g in x.hom(p, q) {
        if forced_identity.is_some_and(|id| id != g) {
            continue;
        }
        arrows[next] = Some(g);
        let consistent = constraints.by_last[next].iter().all(|&(a, b, h)| {
            let (fa, fb, fh) = (
                arrows[a.0].expect("assigned"),
                arrows[b.0].expect("assigned"),
                arrows[h.0].expect("assigned"),
            );
            x.composite(fa, fb) == Some(fh)
        });
        if consistent {
            assign_arrows(c, x, next + 1, objects, arrows, constraints, out);
        }
    }
    arrows[next] = None;
}

/// Every natural transformation `f ⇒ g`, in lexicographic order of the
/// component assignment.
pub fn enumerate_nat_trans(f: &Functor, g: &Functor) -> Result<Vec<NatTrans>> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::domain(
            "cannot enumerate transformations between non-parallel functors",
        ));
    }
    let c = f.dom().clone();
    let x = f.cod().clone();
    // arrows of c grouped by the larger endpoint index, checked when that
    // endpoint's component is chosen
    let mut by_last: Vec<Vec<ArrowId>> = vec![Vec::new(); c.object_count()];
    for a in c.arrows() {
        by_last[c.src(a).0.max(c.tgt(a).0)].push(a);
    }
    let mut out = Vec::new();
    let mut comps = vec![ArrowId(0); c.object_count()];
    nat_rec(&c, &x, f, g, 0, &by_last, &mut comps, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn nat_rec(
    c: &FinCategory,
    x: &FinCategory,
    f: &Functor,
    g: &Functor,
    next: usize,
    by_last: &[Vec<ArrowId>],
    comps: &mut Vec<ArrowId>,
    out: &mut Vec<NatTrans>,
) {
    if next == c.object_count() {
        out.push(NatTrans::new(f.clone(), g.clone(), comps.clone()).expect("parallel and total"));
        return;
    }
    let o = ObjectId(next);
    for &a in x.hom(f.object(o), g.object(o)) {
        comps[next] = a;
        let natural = by_last[next].iter().all(|&arr| {
            let (p, q) = (c.src(arr), c.tgt(arr));
            let left = x.composite(f.arrow(arr), comps[q.0]);
            left.is_some() && left == x.composite(comps[p.0], g.arrow(arr))
        });
        if natural {
            nat_rec(c, x, f, g, next + 1, by_last, comps, out);
        }
    }
}
