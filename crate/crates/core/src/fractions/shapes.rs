use super::FractionsInput;
use crate::fincat::ArrowId;

/// The finite shapes the fractions axioms quantify over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// `(v, g)`: common source, `v ∈ W`.
    Span,
    /// `(h, v)`: common target, `v ∈ W`.
    Cospan,
    /// `(h, v, g)`: `v ∈ W`, `h;v ∈ W`, `g` starts where `v` does.
    Sailboat,
    /// `(h, v)`: composable, `v ∈ W`, `h;v ∈ W`.
    WTriangle,
    /// `(w′, h, g, v)`: `w′, v ∈ W`, `w′;h = g;v`.
    OreSquare,
    /// `(m, v, v′)`: composable, `v, v′ ∈ W`, `m;v;v′ ∈ W`.
    WPath,
    /// `(f, g)`: same source and target.
    Parallel,
    /// `(f, g, w)`: parallel pair with `w ∈ W` and `w;f = w;g`.
    ParallelEqualized,
    /// `(f, g, u)`: parallel pair with `u ∈ W` and `f;u = g;u`.
    ParallelCoequalized,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeInstance {
    pub kind: ShapeKind,
    pub payload: Vec<ArrowId>,
}

/// Every instance of a shape, in lexicographic order of the payload.
pub fn shape_instances(inp: &FractionsInput, kind: ShapeKind) -> Vec<ShapeInstance> {
    let c = &**inp.category();
    let mut out = Vec::new();
    let mut emit = |payload: Vec<ArrowId>| out.push(ShapeInstance { kind, payload });
    let arrows: Vec<ArrowId> = c.arrows().collect();
    match kind {
        ShapeKind::Span => {
            for &v in inp.weq() {
                for &g in c.arrows_from(c.src(v)) {
                    emit(vec![v, g]);
                }
            }
        }
        ShapeKind::Cospan => {
            for &h in &arrows {
                for v in inp.weq_into(c.tgt(h)) {
                    emit(vec![h, v]);
                }
            }
        }
        ShapeKind::WTriangle | ShapeKind::Sailboat => {
            for &h in &arrows {
                for &v in c.arrows_from(c.tgt(h)) {
                    if !inp.contains(v) || !inp.contains(c.composite(h, v).expect("composable")) {
                        continue;
                    }
                    if kind == ShapeKind::WTriangle {
                        emit(vec![h, v]);
                    } else {
                        for &g in c.arrows_from(c.src(v)) {
                            emit(vec![h, v, g]);
                        }
                    }
                }
            }
        }
        ShapeKind::OreSquare => {
            for &w1 in inp.weq() {
                for &h in c.arrows_from(c.tgt(w1)) {
                    for &g in c.arrows_from(c.src(w1)) {
                        for &v in c.arrows_from(c.tgt(g)) {
                            if inp.contains(v) && c.tgt(v) == c.tgt(h) && c.composite(w1, h) == c.composite(g, v) {
                                emit(vec![w1, h, g, v]);
                            }
                        }
                    }
                }
            }
        }
        ShapeKind::WPath => {
            for &m in &arrows {
                for &v in c.arrows_from(c.tgt(m)) {
                    if !inp.contains(v) {
                        continue;
                    }
                    for &v2 in c.arrows_from(c.tgt(v)) {
                        if inp.contains(v2) && inp.contains(c.compose_path(&[m, v, v2])) {
                            emit(vec![m, v, v2]);
                        }
                    }
                }
            }
        }
        ShapeKind::Parallel | ShapeKind::ParallelEqualized | ShapeKind::ParallelCoequalized => {
            for &f in &arrows {
                for &g in c.hom(c.src(f), c.tgt(f)) {
                    match kind {
                        ShapeKind::Parallel => emit(vec![f, g]),
                        ShapeKind::ParallelEqualized => {
                            for w in inp.weq_into(c.src(f)) {
                                if c.composite(w, f) == c.composite(w, g) {
                                    emit(vec![f, g, w]);
                                }
                            }
                        }
                        _ => {
                            for &u in c.arrows_from(c.tgt(f)) {
                                if inp.contains(u) && c.composite(f, u) == c.composite(g, u) {
                                    emit(vec![f, g, u]);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
