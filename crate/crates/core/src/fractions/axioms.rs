use std::fmt;

use super::FractionsInput;
use crate::fincat::ArrowId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// Every object is the target of some arrow of `W`.
    Section,
    /// Every composable pair `v;v′` in `W` has some `m` with `m;v;v′ ∈ W`.
    WeakComposition,
    /// Every cospan `(h, v)` with `v ∈ W` has `(w′, g)` with `w′ ∈ W` and
    /// `w′;h = g;v`.
    Ore,
    /// Every parallel pair coequalized by an arrow of `W` is equalized by
    /// one.
    Zippering,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [Axiom::Section, Axiom::WeakComposition, Axiom::Ore, Axiom::Zippering];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::Section => "(1) section of the target map",
            Axiom::WeakComposition => "(2) weak composition",
            Axiom::Ore => "(3) Ore squares",
            Axiom::Zippering => "(4) zippering",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub passed: bool,
    /// First failing instance in canonical order, by name.
    pub counterexample: Option<String>,
}

/// The first filler found for every instance each axiom quantifies over.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FillerWitness {
    /// `α(x) ∈ W` with target `x`, per object.
    pub section: Option<Vec<ArrowId>>,
    /// `(h, v) ↦ (w′, g)`.
    pub ore: Vec<((ArrowId, ArrowId), (ArrowId, ArrowId))>,
    /// `(v, v′) ↦ m`.
    pub weak: Vec<((ArrowId, ArrowId), ArrowId)>,
    /// `(f, g) ↦ w` equalizing a coequalized pair.
    pub zipper: Vec<((ArrowId, ArrowId), ArrowId)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub outcomes: Vec<AxiomOutcome>,
    pub witness: FillerWitness,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn outcome(&self, axiom: Axiom) -> &AxiomOutcome {
        self.outcomes
            .iter()
            .find(|o| o.axiom == axiom)
            .expect("every axiom is reported")
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            match &o.counterexample {
                None => writeln!(f, "{}: pass", o.axiom.label())?,
                Some(cx) => writeln!(f, "{}: FAIL at {cx}", o.axiom.label())?,
            }
        }
        Ok(())
    }
}

/// Checks the four axioms exhaustively, recording the first filler of
/// every instance or the first instance without one.
pub fn check_axioms(inp: &FractionsInput) -> AxiomReport {
    let c = &**inp.category();
    let name = |f: ArrowId| c.arrow_name(f).to_string();
    let mut witness = FillerWitness::default();
    let mut outcomes = Vec::new();

    let missing = c.objects().find(|&x| inp.weq_into(x).next().is_none());
    witness.section = inp.first_section();
    outcomes.push(AxiomOutcome {
        axiom: Axiom::Section,
        passed: missing.is_none(),
        counterexample: missing.map(|x| format!("object {}", c.object_name(x))),
    });

    let mut first_fail = None;
    for &v in inp.weq() {
        for &v2 in c.arrows_from(c.tgt(v)) {
            if !inp.contains(v2) {
                continue;
            }
            let m = c
                .arrows()
                .filter(|&m| c.tgt(m) == c.src(v))
                .find(|&m| inp.contains(c.compose_path(&[m, v, v2])));
            match m {
                Some(m) => witness.weak.push(((v, v2), m)),
                None => {
                    first_fail.get_or_insert(format!("({}, {})", name(v), name(v2)));
                }
            }
        }
    }
    outcomes.push(AxiomOutcome {
        axiom: Axiom::WeakComposition,
        passed: first_fail.is_none(),
        counterexample: first_fail,
    });

    let mut first_fail = None;
    for h in c.arrows() {
        for v in inp.weq_into(c.tgt(h)) {
            match ore_fillers(inp, h, v).next() {
                Some(filler) => witness.ore.push(((h, v), filler)),
                None => {
                    first_fail.get_or_insert(format!("({}, {})", name(h), name(v)));
                }
            }
        }
    }
    outcomes.push(AxiomOutcome {
        axiom: Axiom::Ore,
        passed: first_fail.is_none(),
        counterexample: first_fail,
    });

    let mut first_fail = None;
    for f in c.arrows() {
        for &g in c.hom(c.src(f), c.tgt(f)) {
            let coequalized = c
                .arrows_from(c.tgt(f))
                .iter()
                .any(|&u| inp.contains(u) && c.composite(f, u) == c.composite(g, u));
            if !coequalized {
                continue;
            }
            match inp.weq_into(c.src(f)).find(|&w| c.composite(w, f) == c.composite(w, g)) {
                Some(w) => witness.zipper.push(((f, g), w)),
                None => {
                    first_fail.get_or_insert(format!("({}, {})", name(f), name(g)));
                }
            }
        }
    }
    outcomes.push(AxiomOutcome {
        axiom: Axiom::Zippering,
        passed: first_fail.is_none(),
        counterexample: first_fail,
    });

    AxiomReport { outcomes, witness }
}

/// All `(w′, g)` with `w′ ∈ W` and `w′;h = g;v`, in canonical order.
pub(crate) fn ore_fillers(
    inp: &FractionsInput,
    h: ArrowId,
    v: ArrowId,
) -> impl Iterator<Item = (ArrowId, ArrowId)> + '_ {
    let c = inp.category();
    inp.weq_into(c.src(h)).flat_map(move |w1| {
        let wh = c.composite(w1, h).expect("composable");
        c.hom(c.src(w1), c.src(v))
            .iter()
            .copied()
            .filter(move |&g| c.composite(g, v) == Some(wh))
            .map(move |g| (w1, g))
    })
}

/// All `m` with `m;v;v′ ∈ W`, in canonical order.
pub(crate) fn weak_fillers(inp: &FractionsInput, v: ArrowId, v2: ArrowId) -> impl Iterator<Item = ArrowId> + '_ {
    let c = inp.category();
    let vv = c.composite(v, v2).expect("composable");
    c.arrows()
        .filter(move |&m| c.tgt(m) == c.src(v))
        .filter(move |&m| inp.contains(c.composite(m, vv).expect("composable")))
}
