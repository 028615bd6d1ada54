use std::sync::Arc;

use super::{ArrowId, FinCategory, Functor, ObjectId};

/// A pair of mutually inverse functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub forward: Functor,
    pub backward: Functor,
}

impl IsoWitness {
    /// Checks both round trips and both functor law reports.
    pub fn verify(&self) -> bool {
        let there = self.forward.then(&self.backward);
        let back = self.backward.then(&self.forward);
        match (there, back) {
            (Ok(a), Ok(b)) => {
                a == Functor::identity(self.forward.dom().clone())
                    && b == Functor::identity(self.backward.dom().clone())
                    && self.forward.validate().is_valid()
                    && self.backward.validate().is_valid()
            }
            _ => false,
        }
    }
}

/// First isomorphism `c ≅ d` in canonical order, if any: backtracking over
/// object bijections pruned by hom-set sizes, then over arrow bijections
/// pruned by the composition table.
pub fn find_isomorphism(c: &Arc<FinCategory>, d: &Arc<FinCategory>) -> Option<IsoWitness> {
    if c.object_count() != d.object_count() || c.arrow_count() != d.arrow_count() {
        return None;
    }
    let mut search = Search {
        c,
        d,
        objects: vec![None; c.object_count()],
        used_objects: vec![false; d.object_count()],
        arrows: vec![None; c.arrow_count()],
        used_arrows: vec![false; d.arrow_count()],
        by_last: Vec::new(),
    };
    search.by_last = vec![Vec::new(); c.arrow_count()];
    for (f, g) in c.composable_pairs() {
        let h = c.composite(f, g).expect("composable");
        search.by_last[f.0.max(g.0).max(h.0)].push((f, g, h));
    }
    if !search.objects_from(0) {
        return None;
    }
    let on_objects: Vec<ObjectId> = search.objects.iter().map(|o| o.expect("set")).collect();
    let on_arrows: Vec<ArrowId> = search.arrows.iter().map(|a| a.expect("set")).collect();
    let mut inv_objects = vec![ObjectId(0); d.object_count()];
    for (i, y) in on_objects.iter().enumerate() {
        inv_objects[y.0] = ObjectId(i);
    }
    let mut inv_arrows = vec![ArrowId(0); d.arrow_count()];
    for (i, g) in on_arrows.iter().enumerate() {
        inv_arrows[g.0] = ArrowId(i);
    }
    Some(IsoWitness {
        forward: Functor::new(c.clone(), d.clone(), on_objects, on_arrows).ok()?,
        backward: Functor::new(d.clone(), c.clone(), inv_objects, inv_arrows).ok()?,
    })
}

struct Search<'a> {
    c: &'a FinCategory,
    d: &'a FinCategory,
    objects: Vec<Option<ObjectId>>,
    used_objects: Vec<bool>,
    arrows: Vec<Option<ArrowId>>,
    used_arrows: Vec<bool>,
    by_last: Vec<Vec<(ArrowId, ArrowId, ArrowId)>>,
}

impl Search<'_> {
    fn objects_from(&mut self, next: usize) -> bool {
        if next == self.c.object_count() {
            return self.arrows_from(0);
        }
        let x = ObjectId(next);
        for y in self.d.objects() {
            if self.used_objects[y.0] {
                continue;
            }
            let fits = (0..=next).all(|i| {
                let p = ObjectId(i);
                let q = if i == next { y } else { self.objects[i].expect("set") };
                self.c.hom(p, x).len() == self.d.hom(q, y).len() && self.c.hom(x, p).len() == self.d.hom(y, q).len()
            });
            if !fits {
                continue;
            }
            self.objects[next] = Some(y);
            self.used_objects[y.0] = true;
            if self.objects_from(next + 1) {
                return true;
            }
            self.objects[next] = None;
            self.used_objects[y.0] = false;
        }
        false
    }

    fn arrows_from(&mut self, next: usize) -> bool {
        if next == self.c.arrow_count() {
            return true;
        }
        let f = ArrowId(next);
        let p = self.objects[self.c.src(f).0].expect("set");
        let q = self.objects[self.c.tgt(f).0].expect("set");
        let candidates: Vec<ArrowId> = self.d.hom(p, q).to_vec();
        for g in candidates {
            if self.used_arrows[g.0] {
                continue;
            }
            if self.c.is_identity(f) != self.d.is_identity(g) {
                continue;
            }
            self.arrows[next] = Some(g);
            let ok = self.by_last[next].iter().all(|&(a, b, h)| {
                let img = |z: ArrowId| self.arrows[z.0].expect("set");
                self.d.composite(img(a), img(b)) == Some(img(h))
            });
            if ok {
                self.used_arrows[g.0] = true;
                if self.arrows_from(next + 1) {
                    return true;
                }
                self.used_arrows[g.0] = false;
            }
            self.arrows[next] = None;
        }
        false
    }
}
