//! Type `A_{n-1}^{(1)}`: the affine crystal on `r × (n - r)` matrices, the
//! KR crystals `B^{r,s}`, bitableau crystals and the gluing onto rectangles.

use crate::crystal::{Crystal, CrystalContext, Dir, Family, Stat};
use crate::error::{CrystalError, Result};
use crate::rsk::{ell, kappa_inverse, rsk, rsk_inverse, BiMatrix};
use crate::tableau::jdt::{inverse_promotion, promotion};
use crate::tableau::{signature_reduce, Alphabet, Padding, Pos, Sign, Tableau};
use crate::weight::{Weight, WeightKind};

/// Parameters `(n, r)` shared by every type A model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TypeA {
    pub n: usize,
    pub r: usize,
}

impl TypeA {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n < 2 || r < 1 || r >= n || n > 60 {
            return Err(CrystalError::InvalidParameters(format!("need 1 <= r < n (got n={n}, r={r})")));
        }
        Ok(TypeA { n, r })
    }

    /// `[r̄]`, top row first.
    pub fn row_alphabet(&self) -> Alphabet {
        Alphabet::Barred { n: self.r as u8 }
    }

    /// `[n] \ [r]`.
    pub fn col_alphabet(&self) -> Alphabet {
        Alphabet::Unbarred { lo: self.r as u8 + 1, hi: self.n as u8 }
    }

    pub fn kind(&self) -> WeightKind {
        WeightKind::A { n: self.n }
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(CrystalError::IndexOutOfRange { index: i, set: self.indices() })
        }
    }

    pub fn zero(&self) -> BiMatrix {
        BiMatrix::zero(self.row_alphabet(), self.col_alphabet())
    }

    /// `wt(M) = Σ m_{ī j} (ε_j - ε_i)`.
    pub fn matrix_weight(&self, m: &BiMatrix) -> Weight {
        let mut d = vec![0i64; self.n];
        let (ra, ca) = (self.row_alphabet(), self.col_alphabet());
        for p in 1..=self.r as u8 {
            for q in 1..=(self.n - self.r) as u8 {
                let v = m.get(p, q) as i64;
                let (i, _) = ra.letter_weight(p);
                let (j, _) = ca.letter_weight(q);
                d[i - 1] -= 2 * v;
                d[j - 1] += 2 * v;
            }
        }
        Weight::from_doubled(self.kind(), d).expect("integral")
    }

    /// `ẽ_i`/`f̃_i` on the ambient matrix crystal.
    pub fn matrix_op(&self, m: &BiMatrix, i: usize, dir: Dir) -> Result<Option<BiMatrix>> {
        self.check(i)?;
        Ok(self.op(m, i, dir))
    }

    pub(crate) fn op(&self, m: &BiMatrix, i: usize, dir: Dir) -> Option<BiMatrix> {
        let (r, n) = (self.r, self.n);
        let bump = |m: &BiMatrix, p: u8, q: u8, up: bool| -> Option<BiMatrix> {
            let v = m.get(p, q);
            if !up && v == 0 {
                return None;
            }
            let mut out = m.clone();
            out.set(p, q, if up { v + 1 } else { v - 1 });
            Some(out)
        };
        let (last_row, last_col) = (r as u8, (n - r) as u8);
        if i == r {
            // the cell (r̄, r+1) is the top-left corner of the display
            bump(m, 1, 1, dir == Dir::Lower)
        } else if i == 0 {
            // the cell (1̄, n) is the bottom-right corner
            bump(m, last_row, last_col, dir == Dir::Raise)
        } else if i < r {
            let w = m.to_biword();
            let j = self.row_alphabet().rank_color(i)?;
            let (k, x) = crate::tableau::word_op(&w.a, j, dir)?;
            let mut a = w.a;
            a[k] = x;
            Some(BiMatrix::from_pairs(m.row_alphabet, m.col_alphabet, &a, &w.b))
        } else if i < n {
            let t = m.transpose();
            let w = t.to_biword();
            let j = self.col_alphabet().rank_color(i)?;
            let (k, x) = crate::tableau::word_op(&w.a, j, dir)?;
            let mut c = w.a;
            c[k] = x;
            Some(BiMatrix::from_pairs(t.row_alphabet, t.col_alphabet, &c, &w.b).transpose())
        } else {
            None
        }
    }

    /// Classical operators and `x̃_r` on `(S, T)` of anti-normal shape.
    pub fn se_op(&self, s: &Tableau, t: &Tableau, i: usize, dir: Dir) -> Result<Option<(Tableau, Tableau)>> {
        self.check(i)?;
        if s.row_lengths() != t.row_lengths() || !s.is_antinormal() || !t.is_antinormal() {
            return Err(CrystalError::ShapeMismatch("SE bitableau needs equal anti-normal shapes".into()));
        }
        if i == 0 {
            return Err(CrystalError::IndexOutOfRange { index: 0, set: (1..self.n).collect() });
        }
        if i < self.r {
            return Ok(s.crystal_op(i, dir).map(|s2| (s2, t.clone())));
        }
        if i > self.r {
            return Ok(t.crystal_op(i, dir).map(|t2| (s.clone(), t2)));
        }
        let mut sc = s.right_columns();
        let mut tc = t.right_columns();
        let signs: Vec<Sign> = sc
            .iter()
            .zip(&tc)
            .map(|(a, b)| match (a[0], b[0]) {
                (1, 1) => Sign::Minus,
                (x, y) if x > 1 && y > 1 => Sign::Plus,
                _ => Sign::Dot,
            })
            .collect();
        let red = signature_reduce(&signs, Padding::PlusRight);
        let w = sc.len();
        match dir {
            Dir::Raise => {
                let Some(Pos::At(k)) = red.rightmost_minus() else { return Ok(None) };
                sc[k].remove(0);
                tc[k].remove(0);
            }
            Dir::Lower => {
                let k = match red.leftmost_plus() {
                    Some(Pos::At(k)) => k,
                    _ => w,
                };
                if k == w {
                    sc.push(Vec::new());
                    tc.push(Vec::new());
                }
                sc[k].insert(0, 1);
                tc[k].insert(0, 1);
            }
        }
        let s2 = Tableau::from_right_columns(s.alphabet(), &sc)?;
        let t2 = Tableau::from_right_columns(t.alphabet(), &tc)?;
        Ok(Some((s2, t2)))
    }

    /// Classical operators and `x̃_0` on `(S, T)` of normal shape.
    pub fn nw_op(&self, s: &Tableau, t: &Tableau, i: usize, dir: Dir) -> Result<Option<(Tableau, Tableau)>> {
        self.check(i)?;
        if s.row_lengths() != t.row_lengths() || !s.is_normal() || !t.is_normal() {
            return Err(CrystalError::ShapeMismatch("NW bitableau needs equal normal shapes".into()));
        }
        if i == self.r {
            return Err(CrystalError::IndexOutOfRange {
                index: i,
                set: self.indices().into_iter().filter(|&k| k != self.r).collect(),
            });
        }
        if i != 0 && i < self.r {
            return Ok(s.crystal_op(i, dir).map(|s2| (s2, t.clone())));
        }
        if i > self.r {
            return Ok(t.crystal_op(i, dir).map(|t2| (s.clone(), t2)));
        }
        let (one_bar, top) = (self.r as u8, (self.n - self.r) as u8);
        let mut sc = s.columns();
        let mut tc = t.columns();
        let w = sc.len();
        // display order is (σ_w, …, σ_1)
        let signs: Vec<Sign> = (0..w)
            .rev()
            .map(|k| {
                let (x, y) = (*sc[k].last().unwrap(), *tc[k].last().unwrap());
                if x == one_bar && y == top {
                    Sign::Plus
                } else if x < one_bar && y < top {
                    Sign::Minus
                } else {
                    Sign::Dot
                }
            })
            .collect();
        let red = signature_reduce(&signs, Padding::MinusLeft);
        match dir {
            Dir::Raise => {
                let k = match red.rightmost_minus() {
                    Some(Pos::At(d)) => w - 1 - d,
                    _ => w,
                };
                if k == w {
                    sc.push(Vec::new());
                    tc.push(Vec::new());
                }
                sc[k].push(one_bar);
                tc[k].push(top);
            }
            Dir::Lower => {
                let Some(Pos::At(d)) = red.leftmost_plus() else { return Ok(None) };
                let k = w - 1 - d;
                sc[k].pop();
                tc[k].pop();
            }
        }
        let s2 = Tableau::from_columns(s.alphabet(), &sc)?;
        let t2 = Tableau::from_columns(t.alphabet(), &tc)?;
        Ok(Some((s2, t2)))
    }

    fn complement(&self, col: &[u8]) -> Vec<u8> {
        // barred rank p is the letter (r + 1 - p)-bar
        let present: Vec<u8> = col.iter().map(|&p| self.r as u8 + 1 - p).collect();
        (1..=self.r as u8).filter(|i| !present.contains(i)).collect()
    }

    fn uncomplement(&self, letters: &[u8]) -> Vec<u8> {
        let mut col: Vec<u8> = (1..=self.r as u8).filter(|i| !letters.contains(i)).map(|i| self.r as u8 + 1 - i).collect();
        col.sort_unstable();
        col
    }

    /// `ς`: glue the columnwise complement of `S` above `T`, where
    /// `(S, T) = κ^↘(M)`, into a tableau of shape `(s^r)` over `[n]`.
    pub fn glue_se(&self, m: &BiMatrix, s: usize) -> Result<Tableau> {
        let (p, q) = crate::rsk::kappa_se(m);
        let sc = p.right_columns();
        let tc = q.right_columns();
        if sc.len() > s {
            return Err(CrystalError::InvalidParameters(format!("ℓ(M) = {} exceeds s = {s}", sc.len())));
        }
        let cols: Vec<Vec<u8>> = (0..s)
            .map(|j| {
                let k = s - 1 - j;
                let (scol, tcol): (&[u8], &[u8]) = if k < sc.len() { (&sc[k], &tc[k]) } else { (&[], &[]) };
                let mut col = self.complement(scol);
                col.extend(tcol.iter().map(|&x| x + self.r as u8));
                col
            })
            .collect();
        Tableau::from_columns(Alphabet::unbarred(self.n as u8), &cols)
            .map_err(|e| CrystalError::InvalidTableau(format!("glued tableau: {e}")))
    }

    pub fn unglue_se(&self, u: &Tableau) -> Result<BiMatrix> {
        let r = self.r as u8;
        let mut sc = Vec::new();
        let mut tc = Vec::new();
        for col in u.right_columns() {
            if col.len() != self.r {
                return Err(CrystalError::ShapeMismatch("expected an r-row rectangle".into()));
            }
            let top: Vec<u8> = col.iter().copied().filter(|&x| x <= r).collect();
            sc.push(self.uncomplement(&top));
            tc.push(col.iter().filter(|&&x| x > r).map(|&x| x - r).collect::<Vec<u8>>());
        }
        let s = Tableau::from_right_columns(self.row_alphabet(), &sc)?;
        let t = Tableau::from_right_columns(self.col_alphabet(), &tc)?;
        kappa_inverse(&s, &t)
    }

    /// `ς̄`: `Q(M)` on top, the complement of `P(M)` below, over `[n]_{+r}`.
    pub fn glue_nw(&self, m: &BiMatrix, s: usize) -> Result<Tableau> {
        let (p, q) = rsk(m);
        let pc = p.columns();
        let qc = q.columns();
        if pc.len() > s {
            return Err(CrystalError::InvalidParameters(format!("ℓ(M) = {} exceeds s = {s}", pc.len())));
        }
        let top = (self.n - self.r) as u8;
        let cols: Vec<Vec<u8>> = (0..s)
            .map(|j| {
                let (pcol, qcol): (&[u8], &[u8]) = if j < pc.len() { (&pc[j], &qc[j]) } else { (&[], &[]) };
                let mut col = qcol.to_vec();
                col.extend(self.complement(pcol).into_iter().map(|i| top + i));
                col
            })
            .collect();
        Tableau::from_columns(Alphabet::Rotated { n: self.n as u8, r: self.r as u8 }, &cols)
            .map_err(|e| CrystalError::InvalidTableau(format!("glued tableau: {e}")))
    }

    pub fn unglue_nw(&self, u: &Tableau) -> Result<BiMatrix> {
        let top = (self.n - self.r) as u8;
        let mut pc = Vec::new();
        let mut qc = Vec::new();
        for col in u.columns() {
            if col.len() != self.r {
                return Err(CrystalError::ShapeMismatch("expected an r-row rectangle".into()));
            }
            let below: Vec<u8> = col.iter().filter(|&&x| x > top).map(|&x| x - top).collect();
            let p = self.uncomplement(&below);
            if p.is_empty() {
                break;
            }
            pc.push(p);
            qc.push(col.iter().copied().filter(|&x| x <= top).collect::<Vec<u8>>());
        }
        let p = Tableau::from_columns(self.row_alphabet(), &pc)?;
        let q = Tableau::from_columns(self.col_alphabet(), &qc)?;
        rsk_inverse(&p, &q)
    }

    /// The tableau of shape `(s^r)` whose row `i` is filled with `i`.
    pub fn highest_rectangle(&self, s: usize) -> Tableau {
        let rows = (1..=self.r as u8).map(|i| vec![i; s]).collect();
        Tableau::from_rows(Alphabet::unbarred(self.n as u8), rows).expect("valid")
    }
}

/// `π`: the 180° rotation of a matrix.
pub fn rotate_matrix_180(m: &BiMatrix) -> BiMatrix {
    m.rotate_180()
}

fn matrix_key(m: &BiMatrix) -> String {
    format!("M:{}", m.to_text())
}

/// The unbounded crystal `M_{r×(n-r)}`.
///
/// `ε_r`, `φ_0` are string lengths and `φ_r`, `ε_0` follow from the pairing,
/// so the crystal is not normal in direction 0.
#[derive(Clone, Debug)]
pub struct AmbientA {
    pub a: TypeA,
}

impl Crystal for AmbientA {
    type Elt = BiMatrix;

    fn context(&self) -> CrystalContext {
        CrystalContext { family: Family::A1 { n: self.a.n, r: self.a.r, s: 0 }, ambient: true }
    }

    fn weight(&self, m: &BiMatrix) -> Weight {
        self.a.matrix_weight(m)
    }

    fn raise(&self, m: &BiMatrix, i: usize) -> Option<BiMatrix> {
        self.a.op(m, i, Dir::Raise)
    }

    fn lower(&self, m: &BiMatrix, i: usize) -> Option<BiMatrix> {
        self.a.op(m, i, Dir::Lower)
    }

    fn epsilon(&self, m: &BiMatrix, i: usize) -> Stat {
        if i == 0 {
            let phi = m.get(self.a.r as u8, (self.a.n - self.a.r) as u8) as i64;
            Some(phi - self.weight(m).pair(0).expect("integral"))
        } else {
            Some(crate::crystal::string_length(m, |x| self.raise(x, i)))
        }
    }

    fn phi(&self, m: &BiMatrix, i: usize) -> Stat {
        if i == self.a.r {
            let eps = m.get(1, 1) as i64;
            Some(eps + self.weight(m).pair(i).expect("integral"))
        } else if i == 0 {
            Some(m.get(self.a.r as u8, (self.a.n - self.a.r) as u8) as i64)
        } else {
            Some(crate::crystal::string_length(m, |x| self.lower(x, i)))
        }
    }

    fn key(&self, m: &BiMatrix) -> String {
        matrix_key(m)
    }
}

/// `B^{r,s} = M^s_{r×(n-r)} ⊗ T_{sω_r}`: matrices with `ℓ(M) <= s`.
#[derive(Clone, Debug)]
pub struct KrA {
    pub a: TypeA,
    pub s: usize,
}

impl KrA {
    pub fn new(n: usize, r: usize, s: usize) -> Result<Self> {
        if s < 1 {
            return Err(CrystalError::InvalidParameters("s must be at least 1".into()));
        }
        Ok(KrA { a: TypeA::new(n, r)?, s })
    }

    pub fn contains(&self, m: &BiMatrix) -> bool {
        ell(m) <= self.s
    }

    pub fn highest(&self) -> BiMatrix {
        self.a.zero()
    }

    pub fn kr_op(&self, m: &BiMatrix, i: usize, dir: Dir) -> Result<Option<BiMatrix>> {
        Ok(self.a.matrix_op(m, i, dir)?.filter(|x| self.contains(x)))
    }
}

impl Crystal for KrA {
    type Elt = BiMatrix;

    fn context(&self) -> CrystalContext {
        CrystalContext { family: Family::A1 { n: self.a.n, r: self.a.r, s: self.s }, ambient: false }
    }

    fn weight(&self, m: &BiMatrix) -> Weight {
        let shift = Weight::fundamental_a(self.a.n, self.a.r).scale(self.s as i64);
        self.a.matrix_weight(m).add(&shift)
    }

    fn raise(&self, m: &BiMatrix, i: usize) -> Option<BiMatrix> {
        self.a.op(m, i, Dir::Raise).filter(|x| self.contains(x))
    }

    fn lower(&self, m: &BiMatrix, i: usize) -> Option<BiMatrix> {
        self.a.op(m, i, Dir::Lower).filter(|x| self.contains(x))
    }

    fn key(&self, m: &BiMatrix) -> String {
        matrix_key(m)
    }
}

/// Rectangular tableaux of shape `(s^r)` over `[n]` with `ẽ_0 = pr^{-1} ẽ_1 pr`.
#[derive(Clone, Debug)]
pub struct PromotionKr {
    pub a: TypeA,
    pub s: usize,
}

impl PromotionKr {
    pub fn new(n: usize, r: usize, s: usize) -> Result<Self> {
        Ok(PromotionKr { a: TypeA::new(n, r)?, s })
    }

    pub fn highest(&self) -> Tableau {
        self.a.highest_rectangle(self.s)
    }

    pub fn kr_op(&self, u: &Tableau, i: usize, dir: Dir) -> Result<Option<Tableau>> {
        self.a.check(i)?;
        if u.row_lengths() != vec![self.s; self.a.r] || !u.is_normal() {
            return Err(CrystalError::ShapeMismatch(format!("expected the rectangle ({}^{})", self.s, self.a.r)));
        }
        Ok(self.op(u, i, dir))
    }

    fn op(&self, u: &Tableau, i: usize, dir: Dir) -> Option<Tableau> {
        if i == 0 {
            let p = promotion(u).crystal_op(1, dir)?;
            Some(inverse_promotion(&p))
        } else {
            u.crystal_op(i, dir)
        }
    }
}

impl Crystal for PromotionKr {
    type Elt = Tableau;

    fn context(&self) -> CrystalContext {
        CrystalContext { family: Family::A1 { n: self.a.n, r: self.a.r, s: self.s }, ambient: false }
    }

    fn weight(&self, u: &Tableau) -> Weight {
        u.weight(self.a.kind())
    }

    fn raise(&self, u: &Tableau, i: usize) -> Option<Tableau> {
        self.op(u, i, Dir::Raise)
    }

    fn lower(&self, u: &Tableau, i: usize) -> Option<Tableau> {
        self.op(u, i, Dir::Lower)
    }

    fn key(&self, u: &Tableau) -> String {
        u.key()
    }
}
