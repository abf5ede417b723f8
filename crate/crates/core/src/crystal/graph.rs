//! Crystal graphs: generation by closure, serialization, duals.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{CrystalError, Result};
use crate::weight::Weight;

use super::{Crystal, CrystalContext, Stat};

pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub key: String,
    pub wt: Weight,
    pub eps: Vec<Stat>,
    pub phi: Vec<Stat>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(from = "GraphRepr", into = "GraphRepr")]
pub struct CrystalGraph {
    pub context: CrystalContext,
    pub indices: Vec<usize>,
    pub vertices: Vec<Vertex>,
    /// `(source, color, target)` with `target = f̃_color(source)`.
    pub edges: Vec<(usize, usize, usize)>,
    down: Vec<Vec<Option<usize>>>,
    up: Vec<Vec<Option<usize>>>,
    lookup: HashMap<String, usize>,
}

impl PartialEq for CrystalGraph {
    fn eq(&self, other: &Self) -> bool {
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        self.context == other.context && self.indices == other.indices && self.vertices == other.vertices && a == b
    }
}

#[derive(Clone, Serialize, Deserialize)]
struct GraphRepr {
    context: CrystalContext,
    indices: Vec<usize>,
    vertices: Vec<Vertex>,
    edges: Vec<(String, usize, String)>,
}

impl From<CrystalGraph> for GraphRepr {
    fn from(g: CrystalGraph) -> Self {
        let edges = g
            .edges
            .iter()
            .map(|&(s, c, t)| (g.vertices[s].key.clone(), c, g.vertices[t].key.clone()))
            .collect();
        GraphRepr { context: g.context, indices: g.indices, vertices: g.vertices, edges }
    }
}

impl From<GraphRepr> for CrystalGraph {
    fn from(r: GraphRepr) -> Self {
        let lookup: HashMap<String, usize> = r.vertices.iter().enumerate().map(|(i, v)| (v.key.clone(), i)).collect();
        let edges = r
            .edges
            .iter()
            .filter_map(|(s, c, t)| Some((*lookup.get(s)?, *c, *lookup.get(t)?)))
            .collect();
        CrystalGraph::new(r.context, r.indices, r.vertices, edges)
    }
}

impl CrystalGraph {
    pub fn new(context: CrystalContext, indices: Vec<usize>, vertices: Vec<Vertex>, edges: Vec<(usize, usize, usize)>) -> Self {
        let colors = indices.iter().copied().max().map_or(0, |m| m + 1);
        let mut down = vec![vec![None; vertices.len()]; colors];
        let mut up = vec![vec![None; vertices.len()]; colors];
        for &(s, c, t) in &edges {
            if c < colors {
                down[c][s].get_or_insert(t);
                up[c][t].get_or_insert(s);
            }
        }
        let lookup = vertices.iter().enumerate().map(|(i, v)| (v.key.clone(), i)).collect();
        CrystalGraph { context, indices, vertices, edges, down, up, lookup }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `f̃_i` on vertex indices.
    pub fn f(&self, v: usize, i: usize) -> Option<usize> {
        self.down.get(i)?.get(v).copied().flatten()
    }

    /// `ẽ_i` on vertex indices.
    pub fn e(&self, v: usize, i: usize) -> Option<usize> {
        self.up.get(i)?.get(v).copied().flatten()
    }

    pub fn find(&self, key: &str) -> Option<usize> {
        self.lookup.get(key).copied()
    }

    /// Index position of color `i` inside the per-vertex `eps`/`phi` vectors.
    pub fn slot(&self, i: usize) -> Option<usize> {
        self.indices.iter().position(|&j| j == i)
    }

    pub fn eps(&self, v: usize, i: usize) -> Stat {
        self.vertices[v].eps[self.slot(i).expect("color in index set")]
    }

    pub fn phi(&self, v: usize, i: usize) -> Stat {
        self.vertices[v].phi[self.slot(i).expect("color in index set")]
    }

    pub fn edge_counts(&self) -> Vec<(usize, usize)> {
        self.indices
            .iter()
            .map(|&i| (i, self.edges.iter().filter(|e| e.1 == i).count()))
            .collect()
    }

    /// Connected components of the underlying undirected graph restricted to
    /// the given colors.
    pub fn components(&self, colors: &[usize]) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut k = 0;
            while k < members.len() {
                let v = members[k];
                k += 1;
                for &i in colors {
                    for w in [self.f(v, i), self.e(v, i)].into_iter().flatten() {
                        if comp[w] == usize::MAX {
                            comp[w] = id;
                            members.push(w);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Vertices with no incoming edge of any of the given colors.
    pub fn highest_weight(&self, colors: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&v| colors.iter().all(|&i| self.e(v, i).is_none())).collect()
    }

    /// The same vertices with only the given colors kept.
    pub fn restrict(&self, colors: &[usize]) -> CrystalGraph {
        let keep: Vec<usize> = self.indices.iter().copied().filter(|i| colors.contains(i)).collect();
        let slots: Vec<usize> = keep.iter().map(|&i| self.slot(i).unwrap()).collect();
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                key: v.key.clone(),
                wt: v.wt.clone(),
                eps: slots.iter().map(|&k| v.eps[k]).collect(),
                phi: slots.iter().map(|&k| v.phi[k]).collect(),
            })
            .collect();
        let edges = self.edges.iter().copied().filter(|e| keep.contains(&e.1)).collect();
        CrystalGraph::new(self.context.clone(), keep, vertices, edges)
    }

    /// The dual crystal: edges reversed, weights negated, `ε` and `φ` swapped.
    pub fn dualize(&self) -> CrystalGraph {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                key: dual_key(&v.key),
                wt: v.wt.neg(),
                eps: v.phi.clone(),
                phi: v.eps.clone(),
            })
            .collect();
        let edges = self.edges.iter().map(|&(s, c, t)| (t, c, s)).collect();
        CrystalGraph::new(self.context.clone(), self.indices.clone(), vertices, edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<CrystalGraph> {
        serde_json::from_str(s).map_err(|e| CrystalError::Parse(e.to_string()))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{} [label=\"{}\"];", k, v.key.replace('"', "\\\""));
        }
        for &(s, c, t) in &self.edges {
            let _ = writeln!(out, "  v{} -> v{} [label={}];", s, t, c);
        }
        out.push_str("}\n");
        out
    }
}

fn dual_key(key: &str) -> String {
    match key.strip_prefix("dual:") {
        Some(rest) => rest.to_string(),
        None => format!("dual:{key}"),
    }
}

/// What to do when the vertex budget is reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overflow {
    Error,
    /// Stop discovering vertices; edges leaving the kept set are dropped.
    Truncate,
}

#[derive(Clone, Copy, Debug)]
pub struct GenOptions {
    pub budget: Option<usize>,
    pub overflow: Overflow,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions { budget: None, overflow: Overflow::Error }
    }
}

impl GenOptions {
    pub fn budget(budget: usize) -> Self {
        GenOptions { budget: Some(budget), overflow: Overflow::Error }
    }

    pub fn truncate(budget: usize) -> Self {
        GenOptions { budget: Some(budget), overflow: Overflow::Truncate }
    }
}

/// A generated graph together with the elements behind its vertices.
pub struct Generated<E> {
    pub graph: CrystalGraph,
    pub elements: Vec<E>,
    pub index: HashMap<E, usize>,
}

impl<E: Eq + Hash> Generated<E> {
    pub fn vertex_of(&self, b: &E) -> Option<usize> {
        self.index.get(b).copied()
    }
}

/// Breadth-first closure of `seeds` under all `ẽ_i`, `f̃_i`.
///
/// Vertices are ordered by their canonical keys, so the result does not
/// depend on the order of the seeds.
pub fn generate_graph<C: Crystal>(crystal: &C, seeds: &[C::Elt], opts: GenOptions) -> Result<Generated<C::Elt>> {
    let context = crystal.context();
    let budget = match (opts.budget, context.ambient) {
        (Some(b), _) => b,
        (None, true) => return Err(CrystalError::BudgetRequired),
        (None, false) => DEFAULT_BUDGET,
    };
    let indices = crystal.indices();
    let mut seen: HashMap<C::Elt, usize> = HashMap::new();
    let mut order: Vec<C::Elt> = Vec::new();
    let mut queue = VecDeque::new();
    let mut raw_edges = Vec::new();

    let visit = |b: C::Elt, seen: &mut HashMap<C::Elt, usize>, order: &mut Vec<C::Elt>, queue: &mut VecDeque<usize>| -> Result<Option<usize>> {
        if let Some(&k) = seen.get(&b) {
            return Ok(Some(k));
        }
        if order.len() >= budget {
            return match opts.overflow {
                Overflow::Error => Err(CrystalError::BudgetExceeded(budget)),
                Overflow::Truncate => Ok(None),
            };
        }
        let k = order.len();
        seen.insert(b.clone(), k);
        order.push(b);
        queue.push_back(k);
        Ok(Some(k))
    };

    for s in seeds {
        visit(s.clone(), &mut seen, &mut order, &mut queue)?;
    }
    while let Some(k) = queue.pop_front() {
        let b = order[k].clone();
        for &i in &indices {
            if let Some(up) = crystal.raise(&b, i) {
                if let Some(u) = visit(up, &mut seen, &mut order, &mut queue)? {
                    raw_edges.push((u, i, k));
                }
            }
            if let Some(down) = crystal.lower(&b, i) {
                if let Some(d) = visit(down, &mut seen, &mut order, &mut queue)? {
                    raw_edges.push((k, i, d));
                }
            }
        }
    }

    let keys: Vec<String> = order.iter().map(|b| crystal.key(b)).collect();
    let mut perm: Vec<usize> = (0..order.len()).collect();
    perm.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut new_pos = vec![0; order.len()];
    for (pos, &old) in perm.iter().enumerate() {
        new_pos[old] = pos;
    }
    let mut vertices = Vec::with_capacity(order.len());
    let mut elements = Vec::with_capacity(order.len());
    for &old in &perm {
        let b = &order[old];
        vertices.push(Vertex {
            key: keys[old].clone(),
            wt: crystal.weight(b),
            eps: indices.iter().map(|&i| crystal.epsilon(b, i)).collect(),
            phi: indices.iter().map(|&i| crystal.phi(b, i)).collect(),
        });
        elements.push(b.clone());
    }
    let mut edges: Vec<(usize, usize, usize)> =
        raw_edges.into_iter().map(|(s, c, t)| (new_pos[s], c, new_pos[t])).collect();
    edges.sort_unstable();
    edges.dedup();
    let index = elements.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
    Ok(Generated { graph: CrystalGraph::new(context, indices, vertices, edges), elements, index })
}
