//! JSON documents: reading them into core structures and writing carriers
//! back out. Every composite is listed in diagrammatic order.

use std::collections::BTreeMap;
use std::sync::Arc;

use catfrac::diagram::{Pseudofunctor, Variance};
use catfrac::fractions::FractionsInput;
use catfrac::{ArrowId, CategoryBuilder, FinCategory, Functor, NatTrans};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// A top-level file, discriminated by its `kind` field.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Category(CategoryFile),
    Functor(FunctorFile),
    Pseudofunctor(PseudofunctorFile),
    FractionsInput(FractionsFile),
    DiagramBundle(BundleFile),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEntry {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeEntry {
    pub first: String,
    pub then: String,
    pub equals: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryFile {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
    #[serde(default)]
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<CompositeEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctorFile {
    pub dom: CategoryFile,
    pub cod: CategoryFile,
    pub on_objects: BTreeMap<String, String>,
    #[serde(default)]
    pub on_arrows: BTreeMap<String, String>,
}

/// The action of one index arrow; its domain and codomain are fixed by
/// the variance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiberMap {
    pub on_objects: BTreeMap<String, String>,
    #[serde(default)]
    pub on_arrows: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarianceTag {
    Covariant,
    Contravariant,
}

/// Unitors and compositors list components by fiber object. Missing
/// entries default to identities.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PseudofunctorFile {
    pub index: CategoryFile,
    pub variance: VarianceTag,
    pub on_objects: BTreeMap<String, CategoryFile>,
    #[serde(default)]
    pub on_arrows: BTreeMap<String, FiberMap>,
    #[serde(default)]
    pub unitors: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub compositors: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FractionsFile {
    pub category: CategoryFile,
    pub weq: Vec<String>,
}

/// A diagram together with a test category.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BundleFile {
    pub diagram: PseudofunctorFile,
    #[serde(default)]
    pub target: Option<CategoryFile>,
}

pub fn read_document(path: &std::path::Path) -> CliResult<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Schema(path.display().to_string(), e))
}

impl CategoryFile {
    pub fn build(&self) -> CliResult<Arc<FinCategory>> {
        let mut b = CategoryBuilder::new().objects(self.objects.iter().map(String::as_str));
        for (o, a) in &self.identities {
            b = b.identity(o, a);
        }
        for a in &self.arrows {
            b = b.arrow(&a.name, &a.src, &a.tgt);
        }
        for c in &self.compose {
            b = b.compose(&c.first, &c.then, &c.equals);
        }
        Ok(Arc::new(b.build()?))
    }

    /// Lists every arrow and identity, and every composite that is not
    /// forced by the unit laws.
    pub fn from_category(c: &FinCategory) -> Self {
        let name = |f: ArrowId| c.arrow_name(f).to_string();
        let compose = c
            .composable_pairs()
            .filter_map(|(f, g)| {
                let h = c.composite(f, g).expect("composable");
                let forced = (c.is_identity(f) && h == g) || (c.is_identity(g) && h == f);
                (!forced).then(|| CompositeEntry {
                    first: name(f),
                    then: name(g),
                    equals: name(h),
                })
            })
            .collect();
        CategoryFile {
            objects: c.objects().map(|x| c.object_name(x).to_string()).collect(),
            arrows: c
                .arrows()
                .map(|f| ArrowEntry {
                    name: name(f),
                    src: c.object_name(c.src(f)).to_string(),
                    tgt: c.object_name(c.tgt(f)).to_string(),
                })
                .collect(),
            identities: c
                .objects()
                .map(|x| (c.object_name(x).to_string(), name(c.identity(x))))
                .collect(),
            compose,
        }
    }
}

fn pairs(map: &BTreeMap<String, String>) -> Vec<(&str, &str)> {
    map.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect()
}

pub fn functor_maps(f: &Functor) -> (BTreeMap<String, String>, BTreeMap<String, String>) {
    let (c, x) = (f.dom(), f.cod());
    let objects = c
        .objects()
        .map(|o| (c.object_name(o).to_string(), x.object_name(f.object(o)).to_string()))
        .collect();
    let arrows = c
        .arrows()
        .map(|a| (c.arrow_name(a).to_string(), x.arrow_name(f.arrow(a)).to_string()))
        .collect();
    (objects, arrows)
}

impl FunctorFile {
    pub fn build(&self) -> CliResult<Functor> {
        let (dom, cod) = (self.dom.build()?, self.cod.build()?);
        Ok(Functor::from_names(
            dom,
            cod,
            &pairs(&self.on_objects),
            &pairs(&self.on_arrows),
        )?)
    }
}

impl FractionsFile {
    pub fn build(&self) -> CliResult<FractionsInput> {
        let c = self.category.build()?;
        let names: Vec<&str> = self.weq.iter().map(String::as_str).collect();
        Ok(FractionsInput::from_names(c, &names)?)
    }
}

/// Components of a transformation out of `src`, given by name and
/// defaulting to identities.
fn components(src: &Functor, given: Option<&BTreeMap<String, String>>, what: &str) -> CliResult<Vec<ArrowId>> {
    let (dom, cod) = (src.dom(), src.cod());
    let empty = BTreeMap::new();
    let given = given.unwrap_or(&empty);
    for x in given.keys() {
        dom.object_named(x)
            .map_err(|_| CliError::Usage(format!("{what} names unknown object {x:?}")))?;
    }
    dom.objects()
        .map(|x| match given.get(dom.object_name(x)) {
            Some(a) => Ok(cod.arrow_named(a)?),
            None => Ok(cod.identity(src.object(x))),
        })
        .collect()
}

impl PseudofunctorFile {
    pub fn build(&self) -> CliResult<Arc<Pseudofunctor>> {
        let index = self.index.build()?;
        let variance = match self.variance {
            VarianceTag::Covariant => Variance::Covariant,
            VarianceTag::Contravariant => Variance::Contravariant,
        };
        let categories = index
            .objects()
            .map(|a| {
                let name = index.object_name(a);
                self.on_objects
                    .get(name)
                    .ok_or_else(|| CliError::Usage(format!("no category given for index object {name:?}")))?
                    .build()
            })
            .collect::<CliResult<Vec<_>>>()?;
        for name in self.on_objects.keys() {
            index.object_named(name)?;
        }
        for name in self.on_arrows.keys() {
            index.arrow_named(name)?;
        }
        let functors = index
            .arrows()
            .map(|phi| {
                let (s, t) = (index.src(phi), index.tgt(phi));
                let (from, to) = match variance {
                    Variance::Covariant => (s, t),
                    Variance::Contravariant => (t, s),
                };
                let (dom, cod) = (categories[from.0].clone(), categories[to.0].clone());
                match self.on_arrows.get(index.arrow_name(phi)) {
                    Some(m) => Ok(Functor::from_names(
                        dom,
                        cod,
                        &pairs(&m.on_objects),
                        &pairs(&m.on_arrows),
                    )?),
                    None if index.is_identity(phi) => Ok(Functor::identity(dom)),
                    None => Err(CliError::Usage(format!(
                        "no functor given for {:?}",
                        index.arrow_name(phi)
                    ))),
                }
            })
            .collect::<CliResult<Vec<_>>>()?;
        for key in self.unitors.keys() {
            index.object_named(key)?;
        }
        let unitors = index
            .objects()
            .map(|a| {
                let cat = &categories[a.0];
                let src = functors[index.identity(a).0].clone();
                let comps = components(&src, self.unitors.get(index.object_name(a)), "unitor")?;
                Ok(NatTrans::new(src, Functor::identity(cat.clone()), comps)?)
            })
            .collect::<CliResult<Vec<_>>>()?;
        let mut given = BTreeMap::new();
        for (key, comps) in &self.compositors {
            let (p, q) = key
                .split_once(';')
                .ok_or_else(|| CliError::Usage(format!("compositor key {key:?} is not of the form \"φ;ψ\"")))?;
            given.insert((index.arrow_named(p.trim())?, index.arrow_named(q.trim())?), comps);
        }
        let compositors = index
            .composable_pairs()
            .map(|(phi, psi)| {
                let k = index.composite(phi, psi).expect("composable");
                let (first, second) = match variance {
                    Variance::Covariant => (phi, psi),
                    Variance::Contravariant => (psi, phi),
                };
                let src = functors[k.0].clone();
                let tgt = functors[first.0].then(&functors[second.0])?;
                let comps = components(&src, given.get(&(phi, psi)).copied(), "compositor")?;
                Ok(((phi, psi), NatTrans::new(src, tgt, comps)?))
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok(Arc::new(Pseudofunctor::new(
            index,
            variance,
            categories,
            functors,
            unitors,
            compositors,
        )?))
    }
}

/// Writes a category document, with `extra` fields merged at the top level.
pub fn category_json(c: &FinCategory, extra: serde_json::Map<String, serde_json::Value>) -> serde_json::Value {
    let mut out = serde_json::Map::new();
    out.insert("kind".into(), "category".into());
    let body = serde_json::to_value(CategoryFile::from_category(c)).expect("serializable");
    if let serde_json::Value::Object(fields) = body {
        out.extend(fields);
    }
    out.extend(extra);
    serde_json::Value::Object(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use catfrac::catalog::{category_corpus, walking_iso};

    fn round_trip(c: &FinCategory) -> FinCategory {
        let text = serde_json::to_string(&category_json(c, serde_json::Map::new())).unwrap();
        match serde_json::from_str::<Document>(&text).unwrap() {
            Document::Category(f) => (*f.build().unwrap()).clone(),
            other => panic!("wrong kind: {other:?}"),
        }
    }

    #[test]
    fn categories_round_trip() {
        for (name, c) in category_corpus() {
            assert_eq!(&round_trip(&c), &*c, "{name}");
        }
    }

    #[test]
    fn identity_composites_are_omitted() {
        let file = CategoryFile::from_category(&walking_iso());
        assert_eq!(file.compose.len(), 2);
        assert_eq!(file.identities["a"], "id:a");
    }

    #[test]
    fn compositor_keys_need_a_separator() {
        let text = r#"{"kind": "pseudofunctor", "index": {"objects": ["*"], "arrows": []},
            "variance": "covariant", "on_objects": {"*": {"objects": ["x"], "arrows": []}},
            "compositors": {"id:*": {}}}"#;
        let Document::Pseudofunctor(p) = serde_json::from_str(text).unwrap() else {
            panic!()
        };
        assert!(matches!(p.build(), Err(CliError::Usage(_))));
    }
}
