use std::collections::HashMap;

use super::axioms::{ore_fillers, weak_fillers};
use super::{shape_instances, FractionsInput, ShapeKind};
use crate::error::{Error, Result};
use crate::fincat::{ArrowId, FinCategory, ObjectId};
use crate::union_find::UnionFind;

/// A span `x ←v− e −g→ y` with `v ∈ W`, standing for `v⁻¹ ; g`.
/// Ordered by `(v, g)` in canonical arrow order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub v: ArrowId,
    pub g: ArrowId,
}

impl Span {
    pub fn new(v: ArrowId, g: ArrowId) -> Self {
        Span { v, g }
    }

    /// Source in the localization: the target of the left leg.
    pub fn src(&self, c: &FinCategory) -> ObjectId {
        c.tgt(self.v)
    }

    pub fn tgt(&self, c: &FinCategory) -> ObjectId {
        c.tgt(self.g)
    }

    pub fn describe(&self, c: &FinCategory) -> String {
        format!("[{},{}]", c.arrow_name(self.v), c.arrow_name(self.g))
    }
}

/// The partition of spans generated by sailboats
/// `(v, g) ~ (h;v, h;g)` for `v, h;v ∈ W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanQuotient {
    spans: Vec<Span>,
    index: HashMap<Span, usize>,
    class_of: Vec<usize>,
    class_count: usize,
}

impl SpanQuotient {
    /// All spans in canonical order.
    pub fn spans(&self) -> &[Span] {
        &self.spans
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn class_of(&self, s: Span) -> Option<usize> {
        self.index.get(&s).map(|&i| self.class_of[i])
    }

    /// Members of a class in canonical order.
    pub fn members(&self, class: usize) -> Vec<Span> {
        self.spans
            .iter()
            .zip(&self.class_of)
            .filter(|&(_, &k)| k == class)
            .map(|(s, _)| *s)
            .collect()
    }

    /// The minimal member of a class.
    pub fn representative(&self, class: usize) -> Span {
        let i = self.class_of.iter().position(|&k| k == class).expect("class exists");
        self.spans[i]
    }
}

/// Spans modulo the equivalence generated by sailboats, via union-find.
/// Classes are numbered by their minimal span.
pub fn sailboat_quotient(inp: &FractionsInput) -> SpanQuotient {
    let c = inp.category();
    let spans: Vec<Span> = shape_instances(inp, ShapeKind::Span)
        .into_iter()
        .map(|s| Span::new(s.payload[0], s.payload[1]))
        .collect();
    let index: HashMap<Span, usize> = spans.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut uf = UnionFind::new(spans.len());
    for boat in shape_instances(inp, ShapeKind::Sailboat) {
        let (h, v, g) = (boat.payload[0], boat.payload[1], boat.payload[2]);
        let p0 = Span::new(v, g);
        let p1 = Span::new(
            c.composite(h, v).expect("composable"),
            c.composite(h, g).expect("composable"),
        );
        uf.union(index[&p0], index[&p1]);
    }
    let (class_of, class_count) = uf.classes();
    SpanQuotient {
        spans,
        index,
        class_of,
        class_count,
    }
}

fn check_spans(inp: &FractionsInput, s1: Span, s2: Span) -> Result<()> {
    let c = inp.category();
    for s in [s1, s2] {
        if !inp.contains(s.v) || c.src(s.v) != c.src(s.g) {
            return Err(Error::input(format!(
                "{} is not a span with left leg in W",
                s.describe(c)
            )));
        }
    }
    if s1.tgt(c) != s2.src(c) {
        return Err(Error::domain(format!(
            "spans {} and {} are not composable",
            s1.describe(c),
            s2.describe(c)
        )));
    }
    Ok(())
}

/// Composite `s1 ; s2` using the first Ore filler of the cospan
/// `(s1.g, s2.v)` and then the first weak-composition filler.
pub fn span_compose(inp: &FractionsInput, s1: Span, s2: Span) -> Result<Span> {
    check_spans(inp, s1, s2)?;
    let c = inp.category();
    let (w1, g1) = ore_fillers(inp, s1.g, s2.v).next().ok_or_else(|| {
        Error::MissingFiller(format!(
            "no Ore square for cospan ({}, {})",
            c.arrow_name(s1.g),
            c.arrow_name(s2.v)
        ))
    })?;
    let m = weak_fillers(inp, w1, s1.v).next().ok_or_else(|| {
        Error::MissingFiller(format!(
            "no weak composition for ({}, {})",
            c.arrow_name(w1),
            c.arrow_name(s1.v)
        ))
    })?;
    Ok(Span::new(
        c.compose_path(&[m, w1, s1.v]),
        c.compose_path(&[m, g1, s2.g]),
    ))
}

/// Composites of `s1 ; s2` over every Ore filler and every weak filler.
pub fn span_compose_all(inp: &FractionsInput, s1: Span, s2: Span) -> Result<Vec<Span>> {
    check_spans(inp, s1, s2)?;
    let c = inp.category();
    let mut out = Vec::new();
    for (w1, g1) in ore_fillers(inp, s1.g, s2.v) {
        for m in weak_fillers(inp, w1, s1.v) {
            out.push(Span::new(
                c.compose_path(&[m, w1, s1.v]),
                c.compose_path(&[m, g1, s2.g]),
            ));
        }
    }
    if out.is_empty() {
        return Err(Error::MissingFiller(format!(
            "no filler composes {} with {}",
            s1.describe(c),
            s2.describe(c)
        )));
    }
    Ok(out)
}
