use std::fmt;

use super::{ArrowId, FinCategory, ObjectId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Filtered,
    Cofiltered,
}

/// Outcome of a (co)filteredness check, with the witnesses found or the
/// first diagram that has no (co)cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeReport {
    pub direction: Direction,
    pub holds: bool,
    /// For each object pair, a (co)cone `(z, f, g)`.
    pub pair_witnesses: Vec<((ObjectId, ObjectId), (ObjectId, ArrowId, ArrowId))>,
    /// For each parallel pair, an arrow (co)equalizing it.
    pub parallel_witnesses: Vec<((ArrowId, ArrowId), ArrowId)>,
    pub failure: Option<String>,
}

impl fmt::Display for ShapeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.direction {
            Direction::Filtered => "filtered",
            Direction::Cofiltered => "cofiltered",
        };
        match &self.failure {
            None => write!(f, "{name}: yes"),
            Some(why) => write!(f, "{name}: no ({why})"),
        }
    }
}

/// Filtered: nonempty, every object pair has a cocone, every parallel pair
/// is coequalized by some arrow. Cofiltered is the dual.
pub fn check_shape(a: &FinCategory, direction: Direction) -> ShapeReport {
    let mut report = ShapeReport {
        direction,
        holds: false,
        pair_witnesses: Vec::new(),
        parallel_witnesses: Vec::new(),
        failure: None,
    };
    if a.object_count() == 0 {
        report.failure = Some("category is empty".into());
        return report;
    }
    for x in a.objects() {
        for y in a.objects() {
            let witness = match direction {
                Direction::Filtered => a.objects().find_map(|z| {
                    let f = a.hom(x, z).first()?;
                    let g = a.hom(y, z).first()?;
                    Some((z, *f, *g))
                }),
                Direction::Cofiltered => a.objects().find_map(|z| {
                    let f = a.hom(z, x).first()?;
                    let g = a.hom(z, y).first()?;
                    Some((z, *f, *g))
                }),
            };
            match witness {
                Some(w) => report.pair_witnesses.push(((x, y), w)),
                None => {
                    report.failure = Some(format!(
                        "no {} for objects {}, {}",
                        if direction == Direction::Filtered {
                            "cocone"
                        } else {
                            "cone"
                        },
                        a.object_name(x),
                        a.object_name(y)
                    ));
                    return report;
                }
            }
        }
    }
    for x in a.objects() {
        for y in a.objects() {
            let hom = a.hom(x, y);
            for &f in hom {
                for &g in hom {
                    let witness = match direction {
                        Direction::Filtered => a
                            .arrows_from(y)
                            .iter()
                            .copied()
                            .find(|&h| a.composite(f, h) == a.composite(g, h)),
                        Direction::Cofiltered => a
                            .arrows()
                            .filter(|&h| a.tgt(h) == x)
                            .find(|&h| a.composite(h, f) == a.composite(h, g)),
                    };
                    match witness {
                        Some(h) => report.parallel_witnesses.push(((f, g), h)),
                        None => {
                            report.failure = Some(format!(
                                "no arrow {} {} and {}",
                                if direction == Direction::Filtered {
                                    "coequalizing"
                                } else {
                                    "equalizing"
                                },
                                a.arrow_name(f),
                                a.arrow_name(g)
                            ));
                            return report;
                        }
                    }
                }
            }
        }
    }
    report.holds = true;
    report
}
