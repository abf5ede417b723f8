//! Isomorphism of edge-colored crystal graphs respecting weights and
//! structure functions.
//!
//! Edges of one color form a partial bijection, so a single matched pair of
//! vertices determines the map on a whole connected component.

use std::collections::VecDeque;
use std::fmt;

use super::CrystalGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoFailure(pub String);

impl fmt::Display for IsoFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn same_label(g1: &CrystalGraph, v: usize, g2: &CrystalGraph, w: usize) -> bool {
    let (a, b) = (&g1.vertices[v], &g2.vertices[w]);
    a.wt == b.wt && a.eps == b.eps && a.phi == b.phi
}

/// Extends `map` from `(seed1, seed2)` over the component of `seed1`.
/// On failure the partial assignments are rolled back.
fn propagate(g1: &CrystalGraph, g2: &CrystalGraph, seed1: usize, seed2: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let mut assigned = Vec::new();
    let ok = (|| {
        if used[seed2] || !same_label(g1, seed1, g2, seed2) {
            return false;
        }
        map[seed1] = seed2;
        used[seed2] = true;
        assigned.push(seed1);
        let mut queue = VecDeque::from([seed1]);
        while let Some(v) = queue.pop_front() {
            let w = map[v];
            for &i in &g1.indices {
                for (a, b) in [(g1.f(v, i), g2.f(w, i)), (g1.e(v, i), g2.e(w, i))] {
                    match (a, b) {
                        (None, None) => {}
                        (Some(a), Some(b)) => {
                            if map[a] == usize::MAX {
                                if used[b] || !same_label(g1, a, g2, b) {
                                    return false;
                                }
                                map[a] = b;
                                used[b] = true;
                                assigned.push(a);
                                queue.push_back(a);
                            } else if map[a] != b {
                                return false;
                            }
                        }
                        _ => return false,
                    }
                }
            }
        }
        true
    })();
    if !ok {
        for v in assigned {
            used[map[v]] = false;
            map[v] = usize::MAX;
        }
    }
    ok
}

fn backtrack(g1: &CrystalGraph, g2: &CrystalGraph, comps: &[Vec<usize>], k: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let Some(comp) = comps.get(k) else { return true };
    let seed = comp[0];
    for cand in 0..g2.len() {
        if used[cand] || !same_label(g1, seed, g2, cand) {
            continue;
        }
        let before: Vec<usize> = comp.iter().map(|&v| map[v]).collect();
        if propagate(g1, g2, seed, cand, map, used) {
            if backtrack(g1, g2, comps, k + 1, map, used) {
                return true;
            }
            for (&v, &old) in comp.iter().zip(&before) {
                if map[v] != usize::MAX {
                    used[map[v]] = false;
                }
                map[v] = old;
            }
        }
    }
    false
}

/// Finds a bijection `V(g1) -> V(g2)` carrying colored edges, weights and
/// structure functions onto each other.
pub fn graph_isomorphism(g1: &CrystalGraph, g2: &CrystalGraph) -> Result<Vec<usize>, IsoFailure> {
    let fail = |m: String| Err(IsoFailure(m));
    if g1.len() != g2.len() {
        return fail(format!("vertex counts differ: {} vs {}", g1.len(), g2.len()));
    }
    if g1.edges.len() != g2.edges.len() {
        return fail(format!("edge counts differ: {} vs {}", g1.edges.len(), g2.edges.len()));
    }
    if g1.indices != g2.indices {
        return fail("index sets differ".into());
    }
    let mut map = vec![usize::MAX; g1.len()];
    let mut used = vec![false; g2.len()];
    let classical: Vec<usize> = g1.indices.iter().copied().filter(|&i| i != 0).collect();
    let hw1 = g1.highest_weight(&classical);
    let hw2 = g2.highest_weight(&classical);
    let all = g1.indices.clone();
    let comps1 = g1.components(&all);
    let connected = comps1.len() == 1 && g2.components(&all).len() == 1;

    let found = if connected && hw1.len() == 1 && hw2.len() == 1 {
        propagate(g1, g2, hw1[0], hw2[0], &mut map, &mut used)
    } else {
        backtrack(g1, g2, &comps1, 0, &mut map, &mut used)
    };
    if !found || map.contains(&usize::MAX) {
        return fail("no structure-preserving bijection".into());
    }
    Ok(map)
}
