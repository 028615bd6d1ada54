use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::report::{ValidationReport, ViolationKind};
use crate::union_find::UnionFind;

/// A finite set `{0, …, size-1}` with a label for reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSet {
    pub label: String,
    pub size: usize,
}

impl FinSet {
    pub fn new(label: impl Into<String>, size: usize) -> Self {
        FinSet {
            label: label.into(),
            size,
        }
    }
}

/// A total function between finite sets. Composability is checked on
/// sizes only; labels are descriptive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinMap {
    dom: FinSet,
    cod: FinSet,
    table: Vec<usize>,
}

impl FinMap {
    pub fn new(dom: FinSet, cod: FinSet, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.size {
            return Err(Error::input(format!(
                "map {} → {} has {} entries for {} elements",
                dom.label,
                cod.label,
                table.len(),
                dom.size
            )));
        }
        if let Some(bad) = table.iter().find(|&&y| y >= cod.size) {
            return Err(Error::input(format!("value {bad} outside {}", cod.label)));
        }
        Ok(FinMap { dom, cod, table })
    }

    pub fn identity(set: &FinSet) -> Self {
        FinMap {
            dom: set.clone(),
            cod: set.clone(),
            table: (0..set.size).collect(),
        }
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &FinMap) -> Result<FinMap> {
        if self.cod.size != other.dom.size {
            return Err(Error::domain(format!(
                "cannot compose {} → {} with {} → {}",
                self.dom.label, self.cod.label, other.dom.label, other.cod.label
            )));
        }
        Ok(FinMap {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            table: self.table.iter().map(|&y| other.table[y]).collect(),
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.size];
        for &y in &self.table {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.cod.size];
        self.table.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
    }

    /// Same table, equal as functions.
    pub fn agrees_with(&self, other: &FinMap) -> bool {
        self.table == other.table && self.cod.size == other.cod.size
    }
}

/// The canonical pullback `X ×_Z Y` of pairs `(x, y)` with `f(x) = g(y)`,
/// in lexicographic order.
#[derive(Debug, Clone)]
pub struct Pullback {
    pub object: FinSet,
    pub p0: FinMap,
    pub p1: FinMap,
    pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

pub fn pullback(f: &FinMap, g: &FinMap) -> Result<Pullback> {
    if f.cod.size != g.cod.size {
        return Err(Error::domain(format!(
            "pullback needs a common codomain, got {} and {}",
            f.cod.label, g.cod.label
        )));
    }
    let mut by_value: Vec<Vec<usize>> = vec![Vec::new(); g.cod.size];
    for (y, &z) in g.table.iter().enumerate() {
        by_value[z].push(y);
    }
    let mut pairs = Vec::new();
    for (x, &z) in f.table.iter().enumerate() {
        for &y in &by_value[z] {
            pairs.push((x, y));
        }
    }
    let object = FinSet::new(format!("{}×{}", f.dom.label, g.dom.label), pairs.len());
    let p0 = FinMap::new(object.clone(), f.dom.clone(), pairs.iter().map(|p| p.0).collect())?;
    let p1 = FinMap::new(object.clone(), g.dom.clone(), pairs.iter().map(|p| p.1).collect())?;
    let index = pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    Ok(Pullback {
        object,
        p0,
        p1,
        pairs,
        index,
    })
}

impl Pullback {
    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.pairs[i]
    }

    pub fn index_of(&self, x: usize, y: usize) -> Option<usize> {
        self.index.get(&(x, y)).copied()
    }

    /// The unique map `⟨a, b⟩` into the pullback; fails if the cone does
    /// not commute.
    pub fn mediate(&self, a: &FinMap, b: &FinMap) -> Result<FinMap> {
        if a.dom.size != b.dom.size {
            return Err(Error::domain("cone legs have different domains"));
        }
        let table = a
            .table
            .iter()
            .zip(&b.table)
            .map(|(&x, &y)| {
                self.index_of(x, y)
                    .ok_or_else(|| Error::domain(format!("cone does not commute at ({x}, {y})")))
            })
            .collect::<Result<Vec<_>>>()?;
        FinMap::new(a.dom.clone(), self.object.clone(), table)
    }
}

/// A disjoint union with its injections, blocks in input order.
#[derive(Debug, Clone)]
pub struct Coproduct {
    pub object: FinSet,
    pub injections: Vec<FinMap>,
    offsets: Vec<usize>,
}

pub fn coproduct(parts: &[FinSet]) -> Coproduct {
    let mut offsets = Vec::with_capacity(parts.len());
    let mut total = 0;
    for p in parts {
        offsets.push(total);
        total += p.size;
    }
    let label = parts.iter().map(|p| p.label.as_str()).collect::<Vec<_>>().join("+");
    let object = FinSet::new(if label.is_empty() { "0".to_string() } else { label }, total);
    let injections = parts
        .iter()
        .zip(&offsets)
        .map(|(p, &off)| FinMap::new(p.clone(), object.clone(), (off..off + p.size).collect()).expect("in range"))
        .collect();
    Coproduct {
        object,
        injections,
        offsets,
    }
}

impl Coproduct {
    /// `(block, local index)` of an element.
    pub fn locate(&self, i: usize) -> (usize, usize) {
        for (b, inj) in self.injections.iter().enumerate() {
            let off = self.offsets[b];
            if i >= off && i < off + inj.dom.size {
                return (b, i - off);
            }
        }
        panic!("element {i} outside the coproduct")
    }

    /// The unique map out of the coproduct restricting to `maps`.
    pub fn copair(&self, maps: &[FinMap]) -> Result<FinMap> {
        if maps.len() != self.injections.len() {
            return Err(Error::domain("copairing needs one map per block"));
        }
        let cod = match maps.first() {
            Some(m) => m.cod.clone(),
            None => FinSet::new("0", 0),
        };
        let mut table = Vec::with_capacity(self.object.size);
        for (m, inj) in maps.iter().zip(&self.injections) {
            if m.dom.size != inj.dom.size || m.cod.size != cod.size {
                return Err(Error::domain("copairing maps have mismatched types"));
            }
            table.extend_from_slice(&m.table);
        }
        FinMap::new(self.object.clone(), cod, table)
    }
}

/// The quotient of a codomain by the equivalence generated by
/// `f(x) ~ g(x)`. Classes are numbered by their minimal element.
#[derive(Debug, Clone)]
pub struct Coequalizer {
    pub object: FinSet,
    pub quotient: FinMap,
}

pub fn coequalize(f: &FinMap, g: &FinMap) -> Result<Coequalizer> {
    if f.dom.size != g.dom.size || f.cod.size != g.cod.size {
        return Err(Error::domain("coequalizer needs a parallel pair"));
    }
    let mut uf = UnionFind::new(f.cod.size);
    for (&a, &b) in f.table.iter().zip(&g.table) {
        uf.union(a, b);
    }
    let (class_of, count) = uf.classes();
    let object = FinSet::new(format!("{}/~", f.cod.label), count);
    let quotient = FinMap::new(f.cod.clone(), object.clone(), class_of)?;
    Ok(Coequalizer { object, quotient })
}

/// Coequalizer of a reflexive pair; fails if `f` and `g` have no common
/// section.
pub fn coequalize_reflexive(f: &FinMap, g: &FinMap) -> Result<Coequalizer> {
    if f.dom.size != g.dom.size || f.cod.size != g.cod.size {
        return Err(Error::domain("coequalizer needs a parallel pair"));
    }
    let mut has_section = vec![false; f.cod.size];
    for (&a, &b) in f.table.iter().zip(&g.table) {
        if a == b {
            has_section[a] = true;
        }
    }
    if let Some(y) = has_section.iter().position(|&h| !h) {
        return Err(Error::domain(format!(
            "pair into {} has no common section at element {y}",
            f.cod.label
        )));
    }
    coequalize(f, g)
}

impl Coequalizer {
    /// The unique map out of the quotient through which `h` factors; fails
    /// if `h` is not constant on classes.
    pub fn factor(&self, h: &FinMap) -> Result<FinMap> {
        if h.dom.size != self.quotient.dom.size {
            return Err(Error::domain("map does not start at the coequalized set"));
        }
        let mut table = vec![None; self.object.size];
        for (x, &k) in self.quotient.table.iter().enumerate() {
            match table[k] {
                None => table[k] = Some(h.table[x]),
                Some(v) if v == h.table[x] => {}
                Some(_) => return Err(Error::domain(format!("map is not constant on the class of {x}"))),
            }
        }
        FinMap::new(
            self.object.clone(),
            h.cod.clone(),
            table.into_iter().map(|v| v.expect("classes are inhabited")).collect(),
        )
    }
}

/// Covers are the surjections.
pub fn is_cover(f: &FinMap) -> bool {
    f.is_surjective()
}

/// Every function `{0..m} → {0..n}` in lexicographic order of tables.
pub fn all_maps(m: usize, n: usize) -> Vec<FinMap> {
    let (dom, cod) = (FinSet::new(format!("{m}"), m), FinSet::new(format!("{n}"), n));
    let count = if m == 0 { 1 } else { n.pow(m as u32) };
    (0..count)
        .map(|mut k| {
            let mut table = vec![0; m];
            for slot in table.iter_mut().rev() {
                *slot = k % n.max(1);
                k /= n.max(1);
            }
            FinMap::new(dom.clone(), cod.clone(), table).expect("in range")
        })
        .collect()
}

/// Factors `h` through a cover `r` by coequalizing the kernel pair of `r`
/// and inverting the comparison map, which is a bijection when `r` is
/// effective.
pub fn factor_through_cover(r: &FinMap, h: &FinMap) -> Result<FinMap> {
    if !is_cover(r) {
        return Err(Error::domain("factoring needs a cover"));
    }
    let kernel = pullback(r, r)?;
    let coeq = coequalize_reflexive(&kernel.p0, &kernel.p1)?;
    let comparison = coeq.factor(r)?;
    if !comparison.is_injective() || !comparison.is_surjective() {
        return Err(Error::integrity("cover is not the coequalizer of its kernel pair"));
    }
    let factored = coeq.factor(h)?;
    let mut inverse = vec![0; comparison.cod.size];
    for (k, &y) in comparison.table.iter().enumerate() {
        inverse[y] = k;
    }
    FinMap::new(r.cod.clone(), comparison.dom.clone(), inverse)?.then(&factored)
}

/// Certifies on all maps between sets of size at most `max` that covers
/// contain identities, compose, are stable under pullback, and are
/// coequalizers of their kernel pairs.
pub fn verify_cover_class(max: usize) -> ValidationReport {
    let mut report = ValidationReport::new();
    let maps: Vec<Vec<Vec<FinMap>>> = (0..=max).map(|m| (0..=max).map(|n| all_maps(m, n)).collect()).collect();
    let covers = |m: usize, n: usize| maps[m][n].iter().filter(|f| is_cover(f));
    for n in 0..=max {
        if !is_cover(&FinMap::identity(&FinSet::new("n", n))) {
            report.push(ViolationKind::Cover, format!("identity on {n} is not a cover"));
        }
    }
    for a in 0..=max {
        for b in 0..=max {
            for f in covers(a, b) {
                for c in 0..=max {
                    for g in covers(b, c) {
                        if !is_cover(&f.then(g).expect("composable")) {
                            report.push(
                                ViolationKind::Cover,
                                format!("composite of covers {:?} and {:?} is not a cover", f.table, g.table),
                            );
                        }
                    }
                }
            }
        }
    }
    for a in 0..=max {
        for c in 0..=max {
            for f in covers(a, c) {
                for b in 0..=max {
                    for g in &maps[b][c] {
                        let pb = pullback(f, g).expect("common codomain");
                        if !is_cover(&pb.p1) {
                            report.push(
                                ViolationKind::Cover,
                                format!("pullback of cover {:?} along {:?} is not a cover", f.table, g.table),
                            );
                        }
                    }
                }
                let kernel = pullback(f, f).expect("common codomain");
                let effective = coequalize_reflexive(&kernel.p0, &kernel.p1)
                    .and_then(|q| q.factor(f))
                    .map(|cmp| cmp.is_injective() && cmp.is_surjective())
                    .unwrap_or(false);
                if !effective {
                    report.push(
                        ViolationKind::Cover,
                        format!("cover {:?} is not the coequalizer of its kernel pair", f.table),
                    );
                }
            }
        }
    }
    report
}
