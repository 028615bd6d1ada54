//! Independent brute-force oracles. None of these call the search or
//! quotient code under test; they work directly on composition tables.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use catfrac::fincat::{Arrow, ArrowId, FinCategory, ObjectId};
use proptest::prelude::*;

/// Counts functors `c → x`: every object map, then every choice of a
/// correctly typed image per arrow, filtered by the laws.
pub fn brute_functor_count(c: &FinCategory, x: &FinCategory) -> usize {
    let mut count = 0;
    for objs in tuples(c.object_count(), x.object_count()) {
        let choices: Vec<Vec<ArrowId>> = c
            .arrows()
            .map(|f| {
                x.arrows()
                    .filter(|&g| x.src(g).0 == objs[c.src(f).0] && x.tgt(g).0 == objs[c.tgt(f).0])
                    .collect()
            })
            .collect();
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut pick = vec![0usize; choices.len()];
        loop {
            let arrs: Vec<ArrowId> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            let ids = c
                .objects()
                .all(|o| arrs[c.identity(o).0] == x.identity(ObjectId(objs[o.0])));
            let comps = c.arrows().all(|f| {
                c.arrows().all(|g| match c.composite(f, g) {
                    Some(h) => x.composite(arrs[f.0], arrs[g.0]) == Some(arrs[h.0]),
                    None => true,
                })
            });
            if ids && comps {
                count += 1;
            }
            // odometer increment
            let mut k = 0;
            while k < pick.len() {
                pick[k] += 1;
                if pick[k] < choices[k].len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
            if k == pick.len() {
                break;
            }
        }
    }
    count
}

/// All tuples of length `n` over `0..m`.
pub fn tuples(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..m).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

/// Spans `(v, g)` with `v ∈ w` and a common source, and the partition
/// generated by sailboats, closed by Warshall's algorithm.
pub struct SpanOracle {
    pub spans: Vec<(ArrowId, ArrowId)>,
    pub classes: Vec<BTreeSet<(ArrowId, ArrowId)>>,
}

pub fn span_oracle(c: &FinCategory, w: &[ArrowId]) -> SpanOracle {
    let in_w = |f: ArrowId| w.contains(&f);
    let mut spans = Vec::new();
    for v in c.arrows().filter(|&v| in_w(v)) {
        for g in c.arrows().filter(|&g| c.src(g) == c.src(v)) {
            spans.push((v, g));
        }
    }
    let n = spans.len();
    let pos = |s: (ArrowId, ArrowId)| spans.iter().position(|&t| t == s).expect("a span");
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        rel[i][i] = true;
    }
    for &(v, g) in &spans {
        for h in c.arrows().filter(|&h| c.tgt(h) == c.src(v)) {
            let hv = c.composite(h, v).unwrap();
            if in_w(hv) {
                let hg = c.composite(h, g).unwrap();
                let (a, b) = (pos((v, g)), pos((hv, hg)));
                rel[a][b] = true;
                rel[b][a] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if rel[i][k] {
                for j in 0..n {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    let mut classes: Vec<BTreeSet<(ArrowId, ArrowId)>> = Vec::new();
    for i in 0..n {
        let class: BTreeSet<_> = (0..n).filter(|&j| rel[i][j]).map(|j| spans[j]).collect();
        if !classes.contains(&class) {
            classes.push(class);
        }
    }
    SpanOracle { spans, classes }
}

/// Relabels a category along permutations of its objects and arrows.
pub fn permuted(c: &FinCategory, obj_perm: &[usize], arr_perm: &[usize]) -> FinCategory {
    let n = c.arrow_count();
    let mut objects = vec![String::new(); c.object_count()];
    for x in c.objects() {
        objects[obj_perm[x.0]] = format!("{}'", c.object_name(x));
    }
    let mut arrows = vec![
        Arrow {
            name: String::new(),
            src: ObjectId(0),
            tgt: ObjectId(0)
        };
        n
    ];
    for f in c.arrows() {
        arrows[arr_perm[f.0]] = Arrow {
            name: format!("{}'", c.arrow_name(f)),
            src: ObjectId(obj_perm[c.src(f).0]),
            tgt: ObjectId(obj_perm[c.tgt(f).0]),
        };
    }
    let identities = c.objects().fold(vec![ArrowId(0); c.object_count()], |mut ids, x| {
        ids[obj_perm[x.0]] = ArrowId(arr_perm[c.identity(x).0]);
        ids
    });
    let mut table = vec![None; n * n];
    for (f, g) in c.composable_pairs() {
        let h = c.composite(f, g).unwrap();
        table[arr_perm[f.0] * n + arr_perm[g.0]] = Some(ArrowId(arr_perm[h.0]));
    }
    FinCategory::from_table(objects, arrows, identities, table).expect("permutation preserves structure")
}

/// The preorder on `0..n` generated by `edges` (pairs `i < j`), as a
/// finite category with one arrow per related pair.
pub fn preorder(n: usize, edges: &[(usize, usize)]) -> FinCategory {
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        rel[i][i] = true;
    }
    for &(i, j) in edges {
        rel[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    let mut arrows = Vec::new();
    let mut id_of = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if rel[i][j] {
                id_of[i][j] = Some(ArrowId(arrows.len()));
                let name = if i == j { format!("id:{i}") } else { format!("{i}<{j}") };
                arrows.push(Arrow {
                    name,
                    src: ObjectId(i),
                    tgt: ObjectId(j),
                });
            }
        }
    }
    let m = arrows.len();
    let mut table = vec![None; m * m];
    for f in 0..m {
        for g in 0..m {
            if arrows[f].tgt == arrows[g].src {
                table[f * m + g] = id_of[arrows[f].src.0][arrows[g].tgt.0];
            }
        }
    }
    let identities = (0..n).map(|i| id_of[i][i].unwrap()).collect();
    FinCategory::from_table((0..n).map(|i| i.to_string()).collect(), arrows, identities, table)
        .expect("preorders are categories")
}

/// Random preorders on up to four objects with edges pointing upward.
pub fn arb_preorder() -> impl Strategy<Value = Arc<FinCategory>> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Arc::new(preorder(n, &edges))
        })
}

/// A random permutation of `0..n`.
pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
