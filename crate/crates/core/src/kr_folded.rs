//! Types `D_{n+1}^{(2)}` (`ε = 1`) and `C_n^{(1)}` (`ε = 2`): symmetric
//! matrices inside the `A_{2n-1}^{(1)}` matrix crystal with `r = n`.
//!
//! In display coordinates (row `p` is `(n-p)`-bar, column `q` is `n+1+q`)
//! the symmetry is plain transpose symmetry and the two affine cells
//! `(n̄, n+1)` and `(1̄, 2n)` are the diagonal corners.

use serde::{Deserialize, Serialize};

use crate::crystal::{string_length, Crystal, CrystalContext, Dir, Family, Stat};
use crate::error::{CrystalError, Result};
use crate::kr_a::TypeA;
use crate::rsk::{ell, BiMatrix};
use crate::tableau::insertion::{p_tableau, rectify, Corner};
use crate::tableau::{signature_reduce, Alphabet, Padding, Pos, Sign, Tableau};
use crate::weight::{Weight, WeightKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Folded {
    pub n: usize,
    pub eps: u8,
    pub ambient: TypeA,
}

impl Folded {
    pub fn new(n: usize, eps: u8) -> Result<Self> {
        if n < 2 || !(eps == 1 || eps == 2) {
            return Err(CrystalError::InvalidParameters(format!("need n >= 2 and ε in {{1, 2}} (got n={n}, ε={eps})")));
        }
        Ok(Folded { n, eps, ambient: TypeA::new(2 * n, n)? })
    }

    pub fn kind(&self) -> WeightKind {
        WeightKind::Folded { n: self.n, eps: self.eps }
    }

    pub fn family(&self, s: usize) -> Family {
        if self.eps == 1 {
            Family::Dtwisted { n: self.n, s }
        } else {
            Family::C1 { n: self.n, s }
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..=self.n).collect()
    }

    fn check(&self, i: usize) -> Result<()> {
        if i <= self.n {
            Ok(())
        } else {
            Err(CrystalError::IndexOutOfRange { index: i, set: self.indices() })
        }
    }

    pub fn zero(&self) -> BiMatrix {
        self.ambient.zero()
    }

    /// Builds a matrix from display rows.
    pub fn from_display(&self, rows: Vec<Vec<u32>>) -> Result<BiMatrix> {
        let m = BiMatrix::from_dense(self.ambient.row_alphabet(), self.ambient.col_alphabet(), rows)?;
        if !self.is_symmetric(&m) {
            return Err(CrystalError::InvalidSeed(format!("{} is not in the folded set", m.to_text())));
        }
        Ok(m)
    }

    /// Transpose symmetry with every diagonal entry divisible by `ε`.
    pub fn is_symmetric(&self, m: &BiMatrix) -> bool {
        let d = m.dense();
        (0..self.n).all(|p| d[p][p].is_multiple_of(self.eps as u32) && (0..p).all(|q| d[p][q] == d[q][p]))
    }

    /// All folded matrices with entry sum at most `max_total`.
    pub fn enumerate(&self, max_total: u32) -> Vec<BiMatrix> {
        BiMatrix::enumerate(self.ambient.row_alphabet(), self.ambient.col_alphabet(), max_total)
            .into_iter()
            .filter(|m| self.is_symmetric(m))
            .collect()
    }

    /// `ŵt(M)`: the coefficient of `ε̂_k` is minus the sum of row `k̄`.
    pub fn weight(&self, m: &BiMatrix) -> Weight {
        let d = m.dense();
        let coords = (1..=self.n).map(|k| -2 * d[self.n - k].iter().sum::<u32>() as i64).collect();
        Weight::from_doubled(self.kind(), coords).expect("integral")
    }

    /// `ê_i`, `f̂_i` as products of ambient operators.
    pub fn folded_op(&self, m: &BiMatrix, i: usize, dir: Dir) -> Result<Option<BiMatrix>> {
        self.check(i)?;
        Ok(self.op(m, i, dir))
    }

    pub(crate) fn op(&self, m: &BiMatrix, i: usize, dir: Dir) -> Option<BiMatrix> {
        let a = &self.ambient;
        if i == 0 || i == self.n {
            let mut cur = m.clone();
            for _ in 0..self.eps {
                cur = a.op(&cur, i, dir)?;
            }
            Some(cur)
        } else {
            let mid = a.op(m, 2 * self.n - i, dir)?;
            a.op(&mid, i, dir)
        }
    }

    /// `κ̂^↘(M) = P(M)^↘` and `κ̂^↖(M) = P(M)`.
    pub fn kappa_fold(&self, m: &BiMatrix, corner: Corner) -> Tableau {
        rectify(&p_tableau(m.row_alphabet, &m.a_word()), corner)
    }

    fn tableau_alphabet(&self) -> Alphabet {
        Alphabet::Barred { n: self.n as u8 }
    }

    fn check_pairs(&self, cols: &[Vec<u8>]) -> Result<()> {
        if self.eps == 2 && (cols.len() % 2 == 1 || cols.chunks(2).any(|c| c[0].len() != c[1].len())) {
            return Err(CrystalError::ShapeMismatch("shape must be 2λ".into()));
        }
        Ok(())
    }

    /// `x̃_i` (`1 <= i <= n`) on `T̂^↘`: `x̃_n` moves single cells `n̄`
    /// (`ε = 1`) or horizontal dominoes `n̄ n̄` (`ε = 2`) atop the columns.
    pub fn fold_se_op(&self, t: &Tableau, i: usize, dir: Dir) -> Result<Option<Tableau>> {
        self.check(i)?;
        if t.alphabet() != self.tableau_alphabet() || !t.is_antinormal() {
            return Err(CrystalError::ShapeMismatch("expected an anti-normal tableau over [n̄]".into()));
        }
        if i == 0 {
            return Err(CrystalError::IndexOutOfRange { index: 0, set: (1..=self.n).collect() });
        }
        if i < self.n {
            return Ok(t.crystal_op(i, dir));
        }
        let mut cols = t.right_columns();
        self.check_pairs(&cols)?;
        let e = self.eps as usize;
        let signs: Vec<Sign> = cols
            .chunks(e)
            .map(|g| {
                if g.iter().all(|c| c[0] > 1) {
                    Sign::Plus
                } else if g.iter().all(|c| c[0] == 1) {
                    Sign::Minus
                } else {
                    Sign::Dot
                }
            })
            .collect();
        let red = signature_reduce(&signs, Padding::PlusRight);
        match dir {
            Dir::Raise => {
                let Some(Pos::At(k)) = red.rightmost_minus() else { return Ok(None) };
                for c in &mut cols[e * k..e * k + e] {
                    c.remove(0);
                }
            }
            Dir::Lower => {
                let k = match red.leftmost_plus() {
                    Some(Pos::At(k)) => k,
                    _ => signs.len(),
                };
                if k == signs.len() {
                    cols.extend(std::iter::repeat_n(Vec::new(), e));
                }
                for c in &mut cols[e * k..e * k + e] {
                    c.insert(0, 1);
                }
            }
        }
        Ok(Some(Tableau::from_right_columns(t.alphabet(), &cols)?))
    }

    /// `x̃_i` (`0 <= i < n`) on `T̂^↖`: `x̃_0` moves `1̄` cells (or dominoes)
    /// at the bottom of the columns.
    pub fn fold_nw_op(&self, t: &Tableau, i: usize, dir: Dir) -> Result<Option<Tableau>> {
        self.check(i)?;
        if t.alphabet() != self.tableau_alphabet() || !t.is_normal() {
            return Err(CrystalError::ShapeMismatch("expected a normal tableau over [n̄]".into()));
        }
        if i == self.n {
            return Err(CrystalError::IndexOutOfRange { index: i, set: (0..self.n).collect() });
        }
        if i > 0 {
            return Ok(t.crystal_op(i, dir));
        }
        let one_bar = self.n as u8;
        let mut cols = t.columns();
        self.check_pairs(&cols)?;
        let e = self.eps as usize;
        let groups = cols.len() / e;
        // display order is (…, σ_2, σ_1)
        let signs: Vec<Sign> = (0..groups)
            .rev()
            .map(|k| {
                let g = &cols[e * k..e * k + e];
                if g.iter().all(|c| *c.last().unwrap() < one_bar) {
                    Sign::Minus
                } else if g.iter().all(|c| *c.last().unwrap() == one_bar) {
                    Sign::Plus
                } else {
                    Sign::Dot
                }
            })
            .collect();
        let red = signature_reduce(&signs, Padding::MinusLeft);
        match dir {
            Dir::Raise => {
                let k = match red.rightmost_minus() {
                    Some(Pos::At(d)) => groups - 1 - d,
                    _ => groups,
                };
                if k == groups {
                    cols.extend(std::iter::repeat_n(Vec::new(), e));
                }
                for c in &mut cols[e * k..e * k + e] {
                    c.push(one_bar);
                }
            }
            Dir::Lower => {
                let Some(Pos::At(d)) = red.leftmost_plus() else { return Ok(None) };
                let k = groups - 1 - d;
                for c in &mut cols[e * k..e * k + e] {
                    c.pop();
                }
            }
        }
        Ok(Some(Tableau::from_columns(t.alphabet(), &cols)?))
    }

    /// `−Σ m_ī ε̂_i` for a tableau over `[n̄]`.
    pub fn tableau_weight(&self, t: &Tableau) -> Weight {
        let c = t.content();
        // rank p is the letter (n + 1 - p)-bar
        let coords = (1..=self.n).map(|k| -2 * c[self.n - k] as i64).collect();
        Weight::from_doubled(self.kind(), coords).expect("integral")
    }
}

/// How the ambient model reports `ε̂_i`, `φ̂_i` for `i = 0, n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Normalization {
    /// The ambient `A_{2n-1}^{(1)}` values and pairings as printed.
    Raw,
    /// Ambient values divided by `ε`, paired with the folded coroots.
    DivideByEps,
}

/// The unbounded folded crystal `M̂_n`.
#[derive(Clone, Debug)]
pub struct FoldedAmbient {
    pub f: Folded,
    pub normalization: Normalization,
}

impl FoldedAmbient {
    fn corner(&self, i: usize, m: &BiMatrix) -> i64 {
        let last = self.f.n as u8;
        if i == 0 {
            m.get(last, last) as i64
        } else {
            m.get(1, 1) as i64
        }
    }

    fn pairing(&self, m: &BiMatrix, i: usize) -> i64 {
        let w = self.f.weight(m);
        match self.normalization {
            Normalization::Raw => w.ambient_pair(i),
            Normalization::DivideByEps => w.pair(i),
        }
        .expect("integral")
    }

    fn scaled(&self, v: i64) -> i64 {
        match self.normalization {
            Normalization::Raw => v,
            Normalization::DivideByEps => v / self.f.eps as i64,
        }
    }
}

impl Crystal for FoldedAmbient {
    type Elt = BiMatrix;

    fn context(&self) -> CrystalContext {
        CrystalContext { family: self.f.family(0), ambient: true }
    }

    fn weight(&self, m: &BiMatrix) -> Weight {
        self.f.weight(m)
    }

    fn raise(&self, m: &BiMatrix, i: usize) -> Option<BiMatrix> {
        self.f.op(m, i, Dir::Raise)
    }

    fn lower(&self, m: &BiMatrix, i: usize) -> Option<BiMatrix> {
        self.f.op(m, i, Dir::Lower)
    }

    fn epsilon(&self, m: &BiMatrix, i: usize) -> Stat {
        if i == self.f.n {
            Some(self.scaled(self.corner(i, m)))
        } else if i == 0 {
            Some(self.scaled(self.corner(0, m)) - self.pairing(m, 0))
        } else {
            Some(string_length(m, |x| self.raise(x, i)))
        }
    }

    fn phi(&self, m: &BiMatrix, i: usize) -> Stat {
        if i == self.f.n {
            Some(self.scaled(self.corner(i, m)) + self.pairing(m, i))
        } else if i == 0 {
            Some(self.scaled(self.corner(0, m)))
        } else {
            Some(string_length(m, |x| self.lower(x, i)))
        }
    }

    fn key(&self, m: &BiMatrix) -> String {
        format!("M:{}", m.to_text())
    }
}

/// `B^{n,s} = M̂^s_n ⊗ T_{sω̂_n}` with the ambient cutoff `ℓ(M) <= εs`.
#[derive(Clone, Debug)]
pub struct KrFolded {
    pub f: Folded,
    pub s: usize,
}

impl KrFolded {
    pub fn new(n: usize, eps: u8, s: usize) -> Result<Self> {
        if s < 1 {
            return Err(CrystalError::InvalidParameters("s must be at least 1".into()));
        }
        Ok(KrFolded { f: Folded::new(n, eps)?, s })
    }

    pub fn contains(&self, m: &BiMatrix) -> bool {
        ell(m) <= self.f.eps as usize * self.s
    }

    pub fn highest(&self) -> BiMatrix {
        self.f.zero()
    }

    pub fn kr_fold_op(&self, m: &BiMatrix, i: usize, dir: Dir) -> Result<Option<BiMatrix>> {
        Ok(self.f.folded_op(m, i, dir)?.filter(|x| self.contains(x)))
    }
}

impl Crystal for KrFolded {
    type Elt = BiMatrix;

    fn context(&self) -> CrystalContext {
        CrystalContext { family: self.f.family(self.s), ambient: false }
    }

    fn weight(&self, m: &BiMatrix) -> Weight {
        let top = vec![(self.f.eps as usize * self.s) as i64; self.f.n];
        let shift = Weight::from_doubled(self.f.kind(), top).expect("uniform parity");
        self.f.weight(m).add(&shift)
    }

    fn raise(&self, m: &BiMatrix, i: usize) -> Option<BiMatrix> {
        self.f.op(m, i, Dir::Raise).filter(|x| self.contains(x))
    }

    fn lower(&self, m: &BiMatrix, i: usize) -> Option<BiMatrix> {
        self.f.op(m, i, Dir::Lower).filter(|x| self.contains(x))
    }

    fn key(&self, m: &BiMatrix) -> String {
        format!("M:{}", m.to_text())
    }
}
