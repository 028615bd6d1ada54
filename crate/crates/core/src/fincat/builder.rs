use std::collections::HashMap;

use super::{Arrow, ArrowId, FinCategory, ObjectId};
use crate::error::{Error, Result};

/// Name-level construction of a [`FinCategory`].
///
/// Identities default to `id:<object>` and are placed before the declared
/// arrows unless declared explicitly. Composites with an identity are filled
/// in automatically when not given; every other composable pair must be
/// listed.
#[derive(Debug, Clone, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    identity_names: HashMap<String, String>,
    arrows: Vec<(String, String, String)>,
    composites: Vec<(String, String, String)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(mut self, name: &str) -> Self {
        self.objects.push(name.to_string());
        self
    }

    pub fn objects<'a>(mut self, names: impl IntoIterator<Item = &'a str>) -> Self {
        self.objects.extend(names.into_iter().map(str::to_string));
        self
    }

    /// Names the identity of `object`. The arrow may also be declared with
    /// [`CategoryBuilder::arrow`] to fix its position.
    pub fn identity(mut self, object: &str, arrow: &str) -> Self {
        self.identity_names.insert(object.to_string(), arrow.to_string());
        self
    }

    pub fn arrow(mut self, name: &str, src: &str, tgt: &str) -> Self {
        self.arrows.push((name.to_string(), src.to_string(), tgt.to_string()));
        self
    }

    /// Declares `first ; then = equals`.
    pub fn compose(mut self, first: &str, then: &str, equals: &str) -> Self {
        self.composites
            .push((first.to_string(), then.to_string(), equals.to_string()));
        self
    }

    pub fn build(self) -> Result<FinCategory> {
        let objects = self.objects;
        let object_ix: HashMap<&str, ObjectId> = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.as_str(), ObjectId(i)))
            .collect();
        if object_ix.len() != objects.len() {
            return Err(Error::input("duplicate object name"));
        }
        for o in self.identity_names.keys() {
            if !object_ix.contains_key(o.as_str()) {
                return Err(Error::input(format!("identity declared for unknown object {o:?}")));
            }
        }
        let id_name = |o: &str| self.identity_names.get(o).cloned().unwrap_or_else(|| format!("id:{o}"));
        let lookup = |o: &str| {
            object_ix
                .get(o)
                .copied()
                .ok_or_else(|| Error::input(format!("unknown object {o:?}")))
        };

        let declared: HashMap<&str, usize> = self.arrows.iter().enumerate().map(|(i, a)| (a.0.as_str(), i)).collect();
        let mut arrows = Vec::new();
        for o in &objects {
            let name = id_name(o);
            if !declared.contains_key(name.as_str()) {
                let x = lookup(o)?;
                arrows.push(Arrow { name, src: x, tgt: x });
            }
        }
        for (name, src, tgt) in &self.arrows {
            arrows.push(Arrow {
                name: name.clone(),
                src: lookup(src)?,
                tgt: lookup(tgt)?,
            });
        }
        let arrow_ix: HashMap<String, ArrowId> = arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.name.clone(), ArrowId(i)))
            .collect();
        if arrow_ix.len() != arrows.len() {
            return Err(Error::input("duplicate arrow name"));
        }
        let arrow = |name: &str| {
            arrow_ix
                .get(name)
                .copied()
                .ok_or_else(|| Error::input(format!("unknown arrow {name:?}")))
        };
        let identities = objects.iter().map(|o| arrow(&id_name(o))).collect::<Result<Vec<_>>>()?;

        let n = arrows.len();
        let mut table = vec![None; n * n];
        for (f, g, h) in &self.composites {
            let (f, g, h) = (arrow(f)?, arrow(g)?, arrow(h)?);
            let slot = &mut table[f.0 * n + g.0];
            if slot.is_some_and(|old| old != h) {
                return Err(Error::input(format!(
                    "conflicting composites for {};{}",
                    arrows[f.0].name, arrows[g.0].name
                )));
            }
            *slot = Some(h);
        }
        for (i, a) in arrows.iter().enumerate() {
            let left = identities[a.src.0];
            let right = identities[a.tgt.0];
            table[left.0 * n + i].get_or_insert(ArrowId(i));
            table[i * n + right.0].get_or_insert(ArrowId(i));
        }
        FinCategory::from_table(objects, arrows, identities, table)
    }
}
