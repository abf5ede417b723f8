//! The abstract crystal interface and the generic machinery built on it.

use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{CrystalError, Result};
use crate::weight::{Weight, WeightKind};

pub mod graph;
pub mod involution;
pub mod iso;
pub mod tensor;
pub mod verify;

pub use graph::{generate_graph, CrystalGraph, GenOptions, Generated, Overflow, Vertex};
pub use involution::lusztig_involution;
pub use iso::{graph_isomorphism, IsoFailure};
pub use tensor::{TLambda, TensorPower, TensorProduct};
pub use verify::{verify_axioms, verify_strings, Report, Violation};

/// Raising (`ẽ_i`) or lowering (`f̃_i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    Raise,
    Lower,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Raise => Dir::Lower,
            Dir::Lower => Dir::Raise,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Family {
    /// `B^{r,s}` of type `A_{n-1}^{(1)}`.
    A1 { n: usize, r: usize, s: usize },
    /// `B^{n,s}` of type `D_{n+1}^{(2)}`.
    Dtwisted { n: usize, s: usize },
    /// `B^{n,s}` of type `C_n^{(1)}`.
    C1 { n: usize, s: usize },
    /// `B^{r,s}` of type `D_n^{(1)}` with `r` in `{n-1, n}`.
    D1 { n: usize, r: usize, s: usize },
    /// A finite crystal of `gl_n` (letters, words, tableaux).
    ClassicalA { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrystalContext {
    pub family: Family,
    /// Unbounded model without the level cutoff.
    #[serde(default)]
    pub ambient: bool,
}

impl CrystalContext {
    pub fn new(family: Family) -> Result<Self> {
        let ctx = CrystalContext { family, ambient: false };
        ctx.validate()?;
        Ok(ctx)
    }

    pub fn ambient(family: Family) -> Result<Self> {
        let ctx = CrystalContext { family, ambient: true };
        ctx.validate()?;
        Ok(ctx)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(CrystalError::InvalidParameters(m));
        match self.family {
            Family::A1 { n, r, s } => {
                if n < 2 || r < 1 || r >= n || (s < 1 && !self.ambient) {
                    return bad(format!("A1 needs n >= 2, 1 <= r <= n-1, s >= 1 (got n={n}, r={r}, s={s})"));
                }
            }
            Family::Dtwisted { n, s } | Family::C1 { n, s } => {
                if n < 2 || (s < 1 && !self.ambient) {
                    return bad(format!("folded families need n >= 2, s >= 1 (got n={n}, s={s})"));
                }
            }
            Family::D1 { n, r, s } => {
                if n < 4 || (r != n && r + 1 != n) || (s < 1 && !self.ambient) {
                    return bad(format!("D1 needs n >= 4, r in {{n-1, n}}, s >= 1 (got n={n}, r={r}, s={s})"));
                }
            }
            Family::ClassicalA { n } => {
                if n < 1 {
                    return bad("ClassicalA needs n >= 1".into());
                }
            }
        }
        Ok(())
    }

    pub fn indices(&self) -> Vec<usize> {
        match self.family {
            Family::A1 { n, .. } => (0..n).collect(),
            Family::Dtwisted { n, .. } | Family::C1 { n, .. } | Family::D1 { n, .. } => (0..=n).collect(),
            Family::ClassicalA { n } => (1..n).collect(),
        }
    }

    pub fn weight_kind(&self) -> WeightKind {
        match self.family {
            Family::A1 { n, .. } | Family::ClassicalA { n } => WeightKind::A { n },
            Family::Dtwisted { n, .. } => WeightKind::Folded { n, eps: 1 },
            Family::C1 { n, .. } => WeightKind::Folded { n, eps: 2 },
            Family::D1 { n, .. } => WeightKind::D { n },
        }
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        let set = self.indices();
        if set.contains(&i) {
            Ok(())
        } else {
            Err(CrystalError::IndexOutOfRange { index: i, set })
        }
    }
}

/// `ε_i`/`φ_i` take values in `ℤ ∪ {-∞}`; `None` is `-∞`.
pub type Stat = Option<i64>;

pub trait Crystal {
    type Elt: Clone + Eq + Hash + Debug;

    fn context(&self) -> CrystalContext;

    fn indices(&self) -> Vec<usize> {
        self.context().indices()
    }

    fn weight(&self, b: &Self::Elt) -> Weight;

    fn raise(&self, b: &Self::Elt, i: usize) -> Option<Self::Elt>;

    fn lower(&self, b: &Self::Elt, i: usize) -> Option<Self::Elt>;

    /// Defaults to the length of the `ẽ_i`-string, which must be finite.
    fn epsilon(&self, b: &Self::Elt, i: usize) -> Stat {
        Some(string_length(b, |x| self.raise(x, i)))
    }

    /// Defaults to the length of the `f̃_i`-string, which must be finite.
    fn phi(&self, b: &Self::Elt, i: usize) -> Stat {
        Some(string_length(b, |x| self.lower(x, i)))
    }

    /// Canonical serialization, used to order and deduplicate vertices.
    fn key(&self, b: &Self::Elt) -> String;

    fn apply(&self, b: &Self::Elt, i: usize, dir: Dir) -> Option<Self::Elt> {
        match dir {
            Dir::Raise => self.raise(b, i),
            Dir::Lower => self.lower(b, i),
        }
    }
}

pub fn string_length<E: Clone>(b: &E, step: impl Fn(&E) -> Option<E>) -> i64 {
    let mut k = 0;
    let mut cur = b.clone();
    while let Some(next) = step(&cur) {
        cur = next;
        k += 1;
    }
    k
}

/// Applies `op` `k` times, stopping at the first null.
pub fn iterate<E: Clone>(b: &E, k: usize, op: impl Fn(&E) -> Option<E>) -> Option<E> {
    let mut cur = b.clone();
    for _ in 0..k {
        cur = op(&cur)?;
    }
    Some(cur)
}
