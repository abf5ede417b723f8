//! Axiom and normality checks on crystal graphs.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::weight::Weight;

use super::CrystalGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: String,
    pub vertex: String,
    pub color: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }

    fn check(&mut self, ok: bool, rule: &str, g: &CrystalGraph, v: usize, color: usize, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                rule: rule.to_string(),
                vertex: g.vertices[v].key.clone(),
                color,
                detail: detail(),
            });
        }
    }
}

/// Checks the five crystal axioms at every vertex and edge.
///
/// 1. `φ_i = ε_i + ⟨wt, h_i⟩` (both `-∞` together);
/// 2. `ẽ_i` raises the weight by `α_i` and shifts `ε_i`, `φ_i` by `-1`, `+1`;
/// 3. the same for `f̃_i` with opposite signs;
/// 4. `f̃_i b = b'` iff `b = ẽ_i b'` (edges of one color form a partial bijection);
/// 5. `φ_i(b) = -∞` forces `ẽ_i b = f̃_i b = 0`.
pub fn verify_axioms(g: &CrystalGraph) -> Report {
    let mut rep = Report::default();
    let kind = g.vertices.first().map(|v| v.wt.kind());

    for (v, vert) in g.vertices.iter().enumerate() {
        for (slot, &i) in g.indices.iter().enumerate() {
            let (e, p) = (vert.eps[slot], vert.phi[slot]);
            match (e, p, vert.wt.pair(i)) {
                (Some(e), Some(p), Ok(h)) => rep.check(p == e + h, "axiom1", g, v, i, || {
                    format!("phi = {p} but eps + <wt,h> = {e} + {h}")
                }),
                (None, None, _) => rep.check(true, "axiom1", g, v, i, String::new),
                (_, _, Err(err)) => rep.check(false, "axiom1", g, v, i, || err.to_string()),
                _ => rep.check(false, "axiom1", g, v, i, || format!("eps = {e:?}, phi = {p:?}")),
            }
        }
    }

    let mut out_deg: HashMap<(usize, usize), usize> = HashMap::new();
    let mut in_deg: HashMap<(usize, usize), usize> = HashMap::new();
    for &(s, c, t) in &g.edges {
        *out_deg.entry((s, c)).or_default() += 1;
        *in_deg.entry((t, c)).or_default() += 1;
        let Some(slot) = g.slot(c) else {
            rep.check(false, "index", g, s, c, || "edge color outside the index set".into());
            continue;
        };
        let (src, dst) = (&g.vertices[s], &g.vertices[t]);
        match kind.map(|k| Weight::simple_root(k, c)) {
            Some(Ok(alpha)) => rep.check(dst.wt.add(&alpha) == src.wt, "axiom3", g, s, c, || {
                format!("wt({}) - wt({}) != alpha_{c}", src.key, dst.key)
            }),
            _ => rep.check(false, "axiom3", g, s, c, || "no simple root".into()),
        }
        rep.check(dst.eps[slot] == src.eps[slot].map(|x| x + 1), "axiom3", g, s, c, || {
            format!("eps {:?} -> {:?} along f", src.eps[slot], dst.eps[slot])
        });
        rep.check(dst.phi[slot] == src.phi[slot].map(|x| x - 1), "axiom3", g, s, c, || {
            format!("phi {:?} -> {:?} along f", src.phi[slot], dst.phi[slot])
        });
        rep.check(src.phi[slot].is_some() && dst.phi[slot].is_some(), "axiom5", g, s, c, || {
            "edge at a vertex with phi = -inf".into()
        });
    }
    for ((v, c), d) in out_deg {
        rep.check(d == 1, "axiom4", g, v, c, || format!("{d} outgoing {c}-edges"));
    }
    for ((v, c), d) in in_deg {
        rep.check(d == 1, "axiom4", g, v, c, || format!("{d} incoming {c}-edges"));
    }
    rep
}

/// Splits the vertices into `i`-strings and checks that each string is a
/// finite chain whose stored `ε_i`/`φ_i` are the distances to its ends.
pub fn verify_strings(g: &CrystalGraph, i: usize) -> Report {
    let mut rep = Report::default();
    let Some(slot) = g.slot(i) else {
        rep.check(false, "index", g, 0, i, || "color outside the index set".into());
        return rep;
    };
    let mut visited = vec![false; g.len()];
    for start in 0..g.len() {
        if g.e(start, i).is_some() {
            continue;
        }
        if g.vertices[start].eps[slot].is_none() && g.f(start, i).is_none() {
            visited[start] = true;
            continue;
        }
        let mut chain = vec![start];
        visited[start] = true;
        let mut cur = start;
        while let Some(next) = g.f(cur, i) {
            if visited[next] {
                rep.check(false, "string", g, next, i, || "string revisits a vertex".into());
                break;
            }
            visited[next] = true;
            chain.push(next);
            cur = next;
        }
        let len = chain.len() as i64;
        for (pos, &v) in chain.iter().enumerate() {
            let (e, p) = (g.vertices[v].eps[slot], g.vertices[v].phi[slot]);
            let pos = pos as i64;
            rep.check(e == Some(pos), "string-eps", g, v, i, || format!("eps = {e:?}, distance to head = {pos}"));
            rep.check(p == Some(len - 1 - pos), "string-phi", g, v, i, || {
                format!("phi = {p:?}, distance to tail = {}", len - 1 - pos)
            });
        }
    }
    for (v, seen) in visited.iter().enumerate() {
        if !seen {
            rep.check(false, "string", g, v, i, || "vertex lies on a cyclic string".into());
        }
    }
    rep
}
