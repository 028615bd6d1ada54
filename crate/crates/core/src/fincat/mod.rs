//! Finite categories stored as full composition tables, with functors,
//! natural transformations, and the exhaustive searches every verifier in
//! this crate is built on.

mod builder;
mod enumerate;
mod functor;
mod iso;
mod shape;

use std::collections::HashMap;
use std::fmt;

pub use builder::CategoryBuilder;
pub use enumerate::{enumerate_functors, enumerate_nat_trans};
pub use functor::{Functor, NatTrans};
pub use iso::{find_isomorphism, IsoWitness};
pub use shape::{check_shape, Direction, ShapeReport};

use crate::error::{Error, Result};
use crate::report::{ValidationReport, ViolationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: ObjectId,
    pub tgt: ObjectId,
}

/// A finite category. Objects and arrows are ordered by declaration, and
/// that order is the canonical order for every enumeration.
///
/// Construction checks only structure (unique names, total tables); the
/// category laws are checked separately by [`FinCategory::validate`] so that
/// law-violating tables can be represented and reported on.
#[derive(Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<ArrowId>,
    /// Row-major `arrows × arrows`; `Some` exactly on composable pairs.
    table: Vec<Option<ArrowId>>,
    homs: Vec<Vec<ArrowId>>,
    outgoing: Vec<Vec<ArrowId>>,
    object_index: HashMap<String, ObjectId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FinCategory({} objects, {} arrows)",
            self.objects.len(),
            self.arrows.len()
        )
    }
}

impl FinCategory {
    /// Builds a category from index-level tables. `table` is row-major over
    /// arrow pairs and must be `Some` exactly on composable pairs.
    pub fn from_table(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<ArrowId>,
        table: Vec<Option<ArrowId>>,
    ) -> Result<Self> {
        let n_obj = objects.len();
        let n_arr = arrows.len();
        let mut object_index = HashMap::with_capacity(n_obj);
        for (i, name) in objects.iter().enumerate() {
            if object_index.insert(name.clone(), ObjectId(i)).is_some() {
                return Err(Error::input(format!("duplicate object name {name:?}")));
            }
        }
        let mut arrow_index = HashMap::with_capacity(n_arr);
        for (i, a) in arrows.iter().enumerate() {
            if arrow_index.insert(a.name.clone(), ArrowId(i)).is_some() {
                return Err(Error::input(format!("duplicate arrow name {:?}", a.name)));
            }
            if a.src.0 >= n_obj || a.tgt.0 >= n_obj {
                return Err(Error::input(format!("arrow {:?} has a dangling endpoint", a.name)));
            }
        }
        if identities.len() != n_obj {
            return Err(Error::input(format!(
                "identity table has {} entries for {} objects",
                identities.len(),
                n_obj
            )));
        }
        if let Some(bad) = identities.iter().find(|i| i.0 >= n_arr) {
            return Err(Error::input(format!("identity refers to missing arrow #{}", bad.0)));
        }
        if table.len() != n_arr * n_arr {
            return Err(Error::input("composition table has the wrong size"));
        }
        for f in 0..n_arr {
            for g in 0..n_arr {
                let composable = arrows[f].tgt == arrows[g].src;
                match table[f * n_arr + g] {
                    Some(h) if h.0 >= n_arr => {
                        return Err(Error::input(format!(
                            "composite of {:?};{:?} refers to missing arrow",
                            arrows[f].name, arrows[g].name
                        )))
                    }
                    Some(_) if !composable => {
                        return Err(Error::input(format!(
                            "composite given for non-composable pair {:?};{:?}",
                            arrows[f].name, arrows[g].name
                        )))
                    }
                    None if composable => {
                        return Err(Error::input(format!(
                            "missing composite for {:?};{:?}",
                            arrows[f].name, arrows[g].name
                        )))
                    }
                    _ => {}
                }
            }
        }
        let mut homs = vec![Vec::new(); n_obj * n_obj];
        let mut outgoing = vec![Vec::new(); n_obj];
        for (i, a) in arrows.iter().enumerate() {
            homs[a.src.0 * n_obj + a.tgt.0].push(ArrowId(i));
            outgoing[a.src.0].push(ArrowId(i));
        }
        Ok(FinCategory {
            objects,
            arrows,
            identities,
            table,
            homs,
            outgoing,
            object_index,
            arrow_index,
        })
    }

    /// The empty category.
    pub fn empty() -> Self {
        Self::from_table(Vec::new(), Vec::new(), Vec::new(), Vec::new()).expect("empty category is well-formed")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = ObjectId> + '_ {
        (0..self.objects.len()).map(ObjectId)
    }

    pub fn arrows(&self) -> impl ExactSizeIterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn object_name(&self, x: ObjectId) -> &str {
        &self.objects[x.0]
    }

    pub fn arrow_name(&self, f: ArrowId) -> &str {
        &self.arrows[f.0].name
    }

    pub fn object_id(&self, name: &str) -> Option<ObjectId> {
        self.object_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrow_index.get(name).copied()
    }

    /// Looks up an object by name, as an input error when missing.
    pub fn object_named(&self, name: &str) -> Result<ObjectId> {
        self.object_id(name)
            .ok_or_else(|| Error::input(format!("unknown object {name:?}")))
    }

    pub fn arrow_named(&self, name: &str) -> Result<ArrowId> {
        self.arrow_id(name)
            .ok_or_else(|| Error::input(format!("unknown arrow {name:?}")))
    }

    pub fn src(&self, f: ArrowId) -> ObjectId {
        self.arrows[f.0].src
    }

    pub fn tgt(&self, f: ArrowId) -> ObjectId {
        self.arrows[f.0].tgt
    }

    pub fn identity(&self, x: ObjectId) -> ArrowId {
        self.identities[x.0]
    }

    pub fn is_identity(&self, f: ArrowId) -> bool {
        self.identities[self.src(f).0] == f
    }

    /// Raw table lookup: `Some` iff `tgt(f) = src(g)`.
    pub fn composite(&self, f: ArrowId, g: ArrowId) -> Option<ArrowId> {
        self.table[f.0 * self.arrows.len() + g.0]
    }

    /// `f` followed by `g`.
    pub fn compose(&self, f: ArrowId, g: ArrowId) -> Result<ArrowId> {
        self.composite(f, g).ok_or_else(|| {
            Error::domain(format!(
                "{} and {} are not composable (target {} vs source {})",
                self.arrow_name(f),
                self.arrow_name(g),
                self.object_name(self.tgt(f)),
                self.object_name(self.src(g))
            ))
        })
    }

    /// Composite of a nonempty composable path. Panics on a broken path, so
    /// use only where composability is established.
    pub fn compose_path(&self, path: &[ArrowId]) -> ArrowId {
        let mut acc = path[0];
        for &g in &path[1..] {
            acc = self
                .composite(acc, g)
                .unwrap_or_else(|| panic!("non-composable path at {}", self.arrow_name(g)));
        }
        acc
    }

    pub fn hom(&self, x: ObjectId, y: ObjectId) -> &[ArrowId] {
        &self.homs[x.0 * self.objects.len() + y.0]
    }

    pub fn composable_pairs(&self) -> impl Iterator<Item = (ArrowId, ArrowId)> + '_ {
        self.arrows().flat_map(move |f| {
            self.arrows()
                .filter(move |&g| self.tgt(f) == self.src(g))
                .map(move |g| (f, g))
        })
    }

    /// First two-sided inverse of `f` in canonical order.
    pub fn inverse(&self, f: ArrowId) -> Option<ArrowId> {
        let (x, y) = (self.src(f), self.tgt(f));
        self.hom(y, x)
            .iter()
            .copied()
            .find(|&g| self.composite(f, g) == Some(self.identity(x)) && self.composite(g, f) == Some(self.identity(y)))
    }

    pub fn is_iso(&self, f: ArrowId) -> bool {
        self.inverse(f).is_some()
    }

    /// The formal opposite: same names, arrows reversed.
    pub fn opposite(&self) -> FinCategory {
        let n = self.arrows.len();
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                src: a.tgt,
                tgt: a.src,
            })
            .collect();
        let mut table = vec![None; n * n];
        for f in 0..n {
            for g in 0..n {
                table[f * n + g] = self.table[g * n + f];
            }
        }
        FinCategory::from_table(self.objects.clone(), arrows, self.identities.clone(), table)
            .expect("opposite of a well-formed category is well-formed")
    }

    /// Copy with one table entry replaced, bypassing the law checks. Used to
    /// build negative controls.
    pub fn with_composite(&self, f: ArrowId, g: ArrowId, h: ArrowId) -> Result<FinCategory> {
        if self.composite(f, g).is_none() {
            return Err(Error::domain("can only rewire a composable pair"));
        }
        let mut out = self.clone();
        let n = self.arrows.len();
        out.table[f.0 * n + g.0] = Some(h);
        Ok(out)
    }

    /// Checks identities, endpoints of composites, unit laws, associativity.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        for x in self.objects() {
            let id = self.identity(x);
            if self.src(id) != x || self.tgt(id) != x {
                report.push(
                    ViolationKind::Endpoint,
                    format!(
                        "identity {} of {} is not an endomorphism of it",
                        self.arrow_name(id),
                        self.object_name(x)
                    ),
                );
            }
        }
        for (f, g) in self.composable_pairs() {
            let h = self.composite(f, g).expect("composable");
            if self.src(h) != self.src(f) || self.tgt(h) != self.tgt(g) {
                report.push(
                    ViolationKind::Endpoint,
                    format!(
                        "{};{} = {} lands in the wrong hom-set",
                        self.arrow_name(f),
                        self.arrow_name(g),
                        self.arrow_name(h)
                    ),
                );
            }
        }
        for f in self.arrows() {
            let (x, y) = (self.src(f), self.tgt(f));
            let (ix, iy) = (self.identity(x), self.identity(y));
            if self.composite(ix, f) != Some(f) {
                report.push(
                    ViolationKind::Identity,
                    format!(
                        "left identity fails at ({},{})",
                        self.arrow_name(ix),
                        self.arrow_name(f)
                    ),
                );
            }
            if self.composite(f, iy) != Some(f) {
                report.push(
                    ViolationKind::Identity,
                    format!(
                        "right identity fails at ({},{})",
                        self.arrow_name(f),
                        self.arrow_name(iy)
                    ),
                );
            }
        }
        // Associativity is only meaningful where the composites are composable
        // again; endpoint violations above already cover the rest.
        for (f, g) in self.composable_pairs() {
            let fg = self.composite(f, g).expect("composable");
            for &h in self.arrows_from(self.tgt(g)) {
                let left = self.composite(fg, h);
                let right = self.composite(g, h).and_then(|gh| self.composite(f, gh));
                if left != right {
                    report.push(
                        ViolationKind::Associativity,
                        format!(
                            "associativity fails at ({},{},{})",
                            self.arrow_name(f),
                            self.arrow_name(g),
                            self.arrow_name(h)
                        ),
                    );
                }
            }
        }
        report
    }

    /// Arrows with source `x`, in canonical order.
    pub fn arrows_from(&self, x: ObjectId) -> &[ArrowId] {
        &self.outgoing[x.0]
    }
}
