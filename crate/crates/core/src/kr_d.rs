//! Type `D_n^{(1)}`: `B^{n,s}` and `B^{n-1,s}` as Knuth classes of barred
//! tableaux with even (resp. odd) columns, and the spin-vector model used
//! to check them.

use serde::{Deserialize, Serialize};

use crate::crystal::{Crystal, CrystalContext, Dir, Family};
use crate::error::{CrystalError, Result};
use crate::tableau::insertion::{rectify, Corner};
use crate::tableau::ssyt::enumerate_ssyt;
use crate::tableau::{signature_reduce, Alphabet, Padding, Partition, Pos, Sign, Tableau};
use crate::weight::{Weight, WeightKind};

/// Column-length parity: even for `B^{n,s}`, odd for `B^{n-1,s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_r(n: usize, r: usize) -> Result<Parity> {
        if r == n {
            Ok(Parity::Even)
        } else if r + 1 == n {
            Ok(Parity::Odd)
        } else {
            Err(CrystalError::InvalidParameters(format!("r must be n or n-1 (got n={n}, r={r})")))
        }
    }

    /// Odd classes have no empty columns, so the sign sequence is not padded.
    fn padding(self, even: Padding) -> Padding {
        match self {
            Parity::Even => even,
            Parity::Odd => Padding::None,
        }
    }

    fn admits(self, len: usize) -> bool {
        match self {
            Parity::Even => len.is_multiple_of(2),
            Parity::Odd => len % 2 == 1,
        }
    }
}

/// Order in which the `x̃_0` rule enumerates the columns of `T^↖`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NwOrder {
    /// `k = 1` is the leftmost column; empty columns follow on the right.
    FromLeft,
    /// `k = 1` is the rightmost column of a box of the given width.
    FromRight { width: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TypeD {
    pub n: usize,
}

impl TypeD {
    pub fn new(n: usize) -> Result<Self> {
        if !(4..=60).contains(&n) {
            return Err(CrystalError::InvalidParameters(format!("type D needs n >= 4 (got {n})")));
        }
        Ok(TypeD { n })
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::Barred { n: self.n as u8 }
    }

    pub fn kind(&self) -> WeightKind {
        WeightKind::D { n: self.n }
    }

    fn check(&self, i: usize) -> Result<()> {
        if i <= self.n {
            Ok(())
        } else {
            Err(CrystalError::IndexOutOfRange { index: i, set: (0..=self.n).collect() })
        }
    }

    fn check_parity(&self, cols: &[Vec<u8>], parity: Parity) -> Result<()> {
        if cols.iter().all(|c| parity.admits(c.len())) {
            Ok(())
        } else {
            Err(CrystalError::ShapeMismatch(format!("column lengths must be {parity:?}")))
        }
    }

    /// `−Σ m_k ε_k`, doubled.
    pub fn tableau_weight(&self, t: &Tableau) -> Weight {
        let c = t.content();
        let coords = (1..=self.n).map(|k| -2 * c[self.n - k] as i64).collect();
        Weight::from_doubled(self.kind(), coords).expect("integral")
    }

    /// `x̃_i` (`1 <= i <= n`) on an anti-normal tableau; `x̃_n` moves the
    /// vertical domino `n̄` over `(n-1)`-bar on top of a column.
    pub fn se_op(&self, t: &Tableau, i: usize, dir: Dir, parity: Parity) -> Result<Option<Tableau>> {
        self.check(i)?;
        if t.alphabet() != self.alphabet() || !t.is_antinormal() {
            return Err(CrystalError::ShapeMismatch("expected an anti-normal tableau over [n̄]".into()));
        }
        let mut cols = t.right_columns();
        self.check_parity(&cols, parity)?;
        if i == 0 {
            return Err(CrystalError::IndexOutOfRange { index: 0, set: (1..=self.n).collect() });
        }
        if i < self.n {
            return Ok(t.crystal_op(i, dir));
        }
        // rank 1 is n̄, rank 2 is (n-1)-bar
        let signs: Vec<Sign> = cols
            .iter()
            .map(|c| {
                if c[0] > 2 {
                    Sign::Plus
                } else if c.len() >= 2 && c[0] == 1 && c[1] == 2 {
                    Sign::Minus
                } else {
                    Sign::Dot
                }
            })
            .collect();
        let red = signature_reduce(&signs, parity.padding(Padding::PlusRight));
        match dir {
            Dir::Raise => {
                let Some(Pos::At(k)) = red.rightmost_minus() else { return Ok(None) };
                cols[k].drain(0..2);
            }
            Dir::Lower => {
                let k = match red.leftmost_plus() {
                    Some(Pos::At(k)) => k,
                    Some(_) => cols.len(),
                    None => return Ok(None),
                };
                if k == cols.len() {
                    cols.push(Vec::new());
                }
                cols[k].splice(0..0, [1, 2]);
            }
        }
        Ok(Some(Tableau::from_right_columns(t.alphabet(), &cols)?))
    }

    /// `x̃_i` (`0 <= i < n`) on a normal tableau; `x̃_0` moves the vertical
    /// domino `2̄` over `1̄` at the bottom of a column.
    pub fn nw_op(&self, t: &Tableau, i: usize, dir: Dir, parity: Parity, order: NwOrder) -> Result<Option<Tableau>> {
        self.check(i)?;
        if t.alphabet() != self.alphabet() || !t.is_normal() {
            return Err(CrystalError::ShapeMismatch("expected a normal tableau over [n̄]".into()));
        }
        let mut cols = t.columns();
        self.check_parity(&cols, parity)?;
        if i == self.n {
            return Err(CrystalError::IndexOutOfRange { index: i, set: (0..self.n).collect() });
        }
        if i > 0 {
            return Ok(t.crystal_op(i, dir));
        }
        let (two_bar, one_bar) = (self.n as u8 - 1, self.n as u8);
        let sign = |c: &Vec<u8>| {
            let len = c.len();
            if len == 0 || c[len - 1] < two_bar {
                Sign::Minus
            } else if len >= 2 && c[len - 2] == two_bar && c[len - 1] == one_bar {
                Sign::Plus
            } else {
                Sign::Dot
            }
        };
        // `slots[d]` is the column shown at display position `d` of (…, σ_2, σ_1)
        let slots: Vec<usize> = match order {
            NwOrder::FromLeft => (0..cols.len()).rev().collect(),
            NwOrder::FromRight { width } => {
                if width < cols.len() {
                    return Err(CrystalError::ShapeMismatch("tableau wider than the box".into()));
                }
                cols.resize(width, Vec::new());
                (0..width).collect()
            }
        };
        let signs: Vec<Sign> = slots.iter().map(|&k| sign(&cols[k])).collect();
        let red = signature_reduce(&signs, parity.padding(Padding::MinusLeft));
        match dir {
            Dir::Raise => {
                let k = match (red.rightmost_minus(), order) {
                    (Some(Pos::At(d)), _) => slots[d],
                    (None, _) => return Ok(None),
                    (_, NwOrder::FromLeft) => {
                        cols.push(Vec::new());
                        cols.len() - 1
                    }
                    // the padding lies outside the box
                    (_, NwOrder::FromRight { .. }) => return Ok(None),
                };
                cols[k].extend([two_bar, one_bar]);
            }
            Dir::Lower => {
                let Some(Pos::At(d)) = red.leftmost_plus() else { return Ok(None) };
                let k = slots[d];
                let len = cols[k].len();
                cols[k].truncate(len - 2);
            }
        }
        while cols.last().is_some_and(|c| c.is_empty()) {
            cols.pop();
        }
        match Tableau::from_columns(t.alphabet(), &cols) {
            Ok(t) => Ok(Some(t)),
            Err(_) if matches!(order, NwOrder::FromRight { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// `ρ`: a column (listed top to bottom by rank) to its sign vector,
    /// `i_k = -1` exactly when `k̄` occurs.
    pub fn spin_map(&self, col: &[u8]) -> Vec<i8> {
        let mut v = vec![1i8; self.n];
        for &p in col {
            v[self.n - p as usize] = -1;
        }
        v
    }

    /// Inverse of `ρ` on single columns.
    pub fn spin_column(&self, v: &[i8]) -> Vec<u8> {
        let mut col: Vec<u8> = (1..=self.n).filter(|&k| v[k - 1] < 0).map(|k| (self.n + 1 - k) as u8).collect();
        col.sort_unstable();
        col
    }

    /// `ι_s` followed by `ρ` on each factor: the columns from the right,
    /// padded with empty columns to `s` factors (on the left of an
    /// anti-normal tableau, on the right of a normal one).
    pub fn spin_embed(&self, t: &Tableau, corner: Corner, s: usize) -> Result<Vec<Vec<i8>>> {
        let mut cols = t.right_columns();
        if cols.len() > s {
            return Err(CrystalError::ShapeMismatch(format!("more than {s} columns")));
        }
        let pad = s - cols.len();
        if corner == Corner::AntiNormal {
            cols.extend(std::iter::repeat_n(Vec::new(), pad));
        } else {
            cols.splice(0..0, std::iter::repeat_n(Vec::new(), pad));
        }
        Ok(cols.iter().map(|c| self.spin_map(c)).collect())
    }

    /// Reassembles factors into a tableau of the given corner, if they fit.
    pub fn spin_unembed(&self, factors: &[Vec<i8>], corner: Corner) -> Option<Tableau> {
        let cols: Vec<Vec<u8>> = factors.iter().map(|v| self.spin_column(v)).collect();
        match corner {
            Corner::AntiNormal => Tableau::from_right_columns(self.alphabet(), &cols).ok(),
            Corner::Normal => {
                let mut left: Vec<Vec<u8>> = cols.into_iter().rev().collect();
                while left.last().is_some_and(|c| c.is_empty()) {
                    left.pop();
                }
                Tableau::from_columns(self.alphabet(), &left).ok()
            }
        }
    }

    /// Normal-shape tableaux with columns of the given parity and at most
    /// `s` columns (exactly `s` for odd parity).
    pub fn enumerate_normal(&self, s: usize, parity: Parity) -> Vec<Tableau> {
        let mut out = Vec::new();
        for lambda in Partition::rectangle(self.n, s).subpartitions() {
            let conj = lambda.conjugate();
            let ok = match parity {
                Parity::Even => conj.parts().iter().all(|&c| c % 2 == 0),
                Parity::Odd => conj.len() == s && conj.parts().iter().all(|&c| c % 2 == 1),
            };
            if ok {
                out.extend(enumerate_ssyt(&lambda, self.alphabet()));
            }
        }
        out
    }
}

/// The level-`s` crystal `T^s_n ⊗ T_{sω_n}` on Knuth classes, each stored
/// as its normal-shape representative.
#[derive(Clone, Debug)]
pub struct DClass {
    pub d: TypeD,
    pub s: usize,
    pub parity: Parity,
    pub order: NwOrder,
}

impl DClass {
    /// `B^{r,s}` with `r = n` (even columns) or `r = n - 1` (odd columns).
    pub fn new(n: usize, r: usize, s: usize) -> Result<Self> {
        if s < 1 {
            return Err(CrystalError::InvalidParameters("s must be at least 1".into()));
        }
        Ok(DClass { d: TypeD::new(n)?, s, parity: Parity::of_r(n, r)?, order: NwOrder::FromLeft })
    }

    pub fn with_order(mut self, order: NwOrder) -> Self {
        self.order = order;
        self
    }

    /// The classical highest weight element: empty for even parity, a row
    /// of `s` letters `n̄` for odd parity.
    pub fn highest(&self) -> Tableau {
        match self.parity {
            Parity::Even => Tableau::empty(self.d.alphabet()),
            Parity::Odd => Tableau::from_rows(self.d.alphabet(), vec![vec![1; self.s]]).expect("valid"),
        }
    }

    pub fn canonical(&self, t: &Tableau) -> Tableau {
        rectify(t, Corner::Normal)
    }

    fn fits(&self, t: &Tableau) -> bool {
        t.width() <= self.s
    }

    /// `x̃_i [T]`: classical indices act on any representative, `x̃_0` on
    /// `T^↖` and `x̃_n` on `T^↘`.
    pub fn class_op(&self, t: &Tableau, i: usize, dir: Dir) -> Result<Option<Tableau>> {
        self.d.check(i)?;
        let rep = self.canonical(t);
        let out = if i == 0 {
            let order = match self.order {
                NwOrder::FromRight { .. } => NwOrder::FromRight { width: self.s.max(rep.width()) },
                o => o,
            };
            self.d.nw_op(&rep, 0, dir, self.parity, order)?
        } else if i == self.d.n {
            self.d.se_op(&rectify(&rep, Corner::AntiNormal), i, dir, self.parity)?
        } else {
            rep.crystal_op(i, dir)
        };
        Ok(out.map(|x| self.canonical(&x)).filter(|x| self.fits(x)))
    }

    fn op(&self, t: &Tableau, i: usize, dir: Dir) -> Option<Tableau> {
        self.class_op(t, i, dir).ok().flatten()
    }
}

impl Crystal for DClass {
    type Elt = Tableau;

    fn context(&self) -> CrystalContext {
        let r = match self.parity {
            Parity::Even => self.d.n,
            Parity::Odd => self.d.n - 1,
        };
        CrystalContext { family: Family::D1 { n: self.d.n, r, s: self.s }, ambient: false }
    }

    fn weight(&self, t: &Tableau) -> Weight {
        let shift = Weight::from_doubled(self.d.kind(), vec![self.s as i64; self.d.n]).expect("uniform parity");
        self.d.tableau_weight(t).add(&shift)
    }

    fn raise(&self, t: &Tableau, i: usize) -> Option<Tableau> {
        self.op(t, i, Dir::Raise)
    }

    fn lower(&self, t: &Tableau, i: usize) -> Option<Tableau> {
        self.op(t, i, Dir::Lower)
    }

    fn key(&self, t: &Tableau) -> String {
        t.key()
    }
}

/// Which classical subalgebra the spin vectors model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpinSide {
    /// `I_0 = {1, …, n}`: `B(ω_n)` or `B(ω_{n-1})`.
    Se,
    /// `I_n = {0, …, n-1}`: `B(-ω'_0)` or its odd analogue.
    Nw,
}

/// Sign vectors `(i_1, …, i_n)` with product `+1` (even) or `-1` (odd).
#[derive(Clone, Debug)]
pub struct SpinCrystal {
    pub d: TypeD,
    pub side: SpinSide,
    pub parity: Parity,
}

impl SpinCrystal {
    pub fn new(n: usize, side: SpinSide, parity: Parity) -> Result<Self> {
        Ok(SpinCrystal { d: TypeD::new(n)?, side, parity })
    }

    /// All vectors of the right parity.
    pub fn elements(&self) -> Vec<Vec<i8>> {
        let n = self.d.n;
        (0..1u32 << n)
            .map(|mask| (0..n).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect::<Vec<i8>>())
            .filter(|v| {
                let neg = v.iter().filter(|&&x| x < 0).count();
                self.parity.admits(neg)
            })
            .collect()
    }

    fn flip(&self, v: &[i8], i: usize, dir: Dir) -> Option<Vec<i8>> {
        let n = self.d.n;
        let (a, b, need) = match i {
            0 => (0, 1, if dir == Dir::Raise { (1, 1) } else { (-1, -1) }),
            k if k == n => (n - 2, n - 1, if dir == Dir::Raise { (-1, -1) } else { (1, 1) }),
            k => (k - 1, k, if dir == Dir::Raise { (-1, 1) } else { (1, -1) }),
        };
        if (v[a], v[b]) != need {
            return None;
        }
        let mut out = v.to_vec();
        out[a] = -out[a];
        out[b] = -out[b];
        Some(out)
    }
}

impl Crystal for SpinCrystal {
    type Elt = Vec<i8>;

    fn context(&self) -> CrystalContext {
        let r = match self.parity {
            Parity::Even => self.d.n,
            Parity::Odd => self.d.n - 1,
        };
        CrystalContext { family: Family::D1 { n: self.d.n, r, s: 1 }, ambient: false }
    }

    fn indices(&self) -> Vec<usize> {
        match self.side {
            SpinSide::Se => (1..=self.d.n).collect(),
            SpinSide::Nw => (0..self.d.n).collect(),
        }
    }

    fn weight(&self, v: &Vec<i8>) -> Weight {
        Weight::half_signs(self.d.kind(), v)
    }

    fn raise(&self, v: &Vec<i8>, i: usize) -> Option<Vec<i8>> {
        self.flip(v, i, Dir::Raise)
    }

    fn lower(&self, v: &Vec<i8>, i: usize) -> Option<Vec<i8>> {
        self.flip(v, i, Dir::Lower)
    }

    fn key(&self, v: &Vec<i8>) -> String {
        let s: String = v.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect();
        format!("v:{s}")
    }
}
