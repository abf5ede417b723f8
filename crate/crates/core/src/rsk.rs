//! Matrices over two alphabets, their biwords, and the RSK correspondence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CrystalError, Result};
use crate::tableau::insertion::{p_tableau, rectify, Corner};
use crate::tableau::{Alphabet, Tableau};

/// A non-negative integer matrix with rows indexed by `row_alphabet` and
/// columns by `col_alphabet`, both in alphabet order.
///
/// Storage is dense: every matrix met here is at most `n × n` with small
/// entries, so a dense grid is both smaller and faster than a map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiMatrix {
    pub row_alphabet: Alphabet,
    pub col_alphabet: Alphabet,
    entries: Vec<Vec<u32>>,
}

/// `(a, b)` sorted so that `b` weakly increases and `a` weakly decreases
/// inside each run of equal `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Biword {
    pub a: Vec<u8>,
    pub b: Vec<u8>,
}

impl BiMatrix {
    pub fn zero(row_alphabet: Alphabet, col_alphabet: Alphabet) -> Self {
        let entries = vec![vec![0; col_alphabet.size() as usize]; row_alphabet.size() as usize];
        BiMatrix { row_alphabet, col_alphabet, entries }
    }

    pub fn from_dense(row_alphabet: Alphabet, col_alphabet: Alphabet, rows: Vec<Vec<u32>>) -> Result<Self> {
        let (h, w) = (row_alphabet.size() as usize, col_alphabet.size() as usize);
        if rows.len() != h || rows.iter().any(|r| r.len() != w) {
            return Err(CrystalError::ShapeMismatch(format!("expected a {h}×{w} matrix")));
        }
        Ok(BiMatrix { row_alphabet, col_alphabet, entries: rows })
    }

    /// Rows in display order: row `p` is the letter of rank `p + 1`.
    pub fn dense(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    /// Entry at ranks `(a, b)`, both 1-based.
    pub fn get(&self, a: u8, b: u8) -> u32 {
        self.entries[a as usize - 1][b as usize - 1]
    }

    pub fn set(&mut self, a: u8, b: u8, v: u32) {
        self.entries[a as usize - 1][b as usize - 1] = v;
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().flatten().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total() == 0
    }

    pub fn transpose(&self) -> BiMatrix {
        let entries = (0..self.ncols()).map(|q| self.entries.iter().map(|r| r[q]).collect()).collect();
        BiMatrix { row_alphabet: self.col_alphabet, col_alphabet: self.row_alphabet, entries }
    }

    /// 180° rotation of the display.
    pub fn rotate_180(&self) -> BiMatrix {
        let entries = self.entries.iter().rev().map(|r| r.iter().rev().copied().collect()).collect();
        BiMatrix { entries, ..self.clone() }
    }

    pub fn to_biword(&self) -> Biword {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for q in 0..self.ncols() {
            for p in (0..self.nrows()).rev() {
                for _ in 0..self.entries[p][q] {
                    a.push(p as u8 + 1);
                    b.push(q as u8 + 1);
                }
            }
        }
        Biword { a, b }
    }

    /// Counts the pairs `(a_k, b_k)`; their order is irrelevant.
    pub fn from_pairs(row_alphabet: Alphabet, col_alphabet: Alphabet, a: &[u8], b: &[u8]) -> BiMatrix {
        assert_eq!(a.len(), b.len());
        let mut m = BiMatrix::zero(row_alphabet, col_alphabet);
        for (&x, &y) in a.iter().zip(b) {
            m.entries[x as usize - 1][y as usize - 1] += 1;
        }
        m
    }

    pub fn from_biword(row_alphabet: Alphabet, col_alphabet: Alphabet, w: &Biword) -> BiMatrix {
        Self::from_pairs(row_alphabet, col_alphabet, &w.a, &w.b)
    }

    /// The top row `a` of the biword.
    pub fn a_word(&self) -> Vec<u8> {
        self.to_biword().a
    }

    /// The top row `c` of the biword of the transpose.
    pub fn c_word(&self) -> Vec<u8> {
        self.transpose().to_biword().a
    }

    /// Dense rows joined by `/`.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" / ")
    }

    /// Parses dense rows separated by newlines or `/`.
    pub fn parse(row_alphabet: Alphabet, col_alphabet: Alphabet, text: &str) -> Result<BiMatrix> {
        let rows = text
            .split(['/', '\n'])
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.split_whitespace()
                    .map(|x| x.parse::<u32>().map_err(|_| CrystalError::Parse(format!("bad matrix entry {x:?}"))))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BiMatrix::from_dense(row_alphabet, col_alphabet, rows)
    }

    /// All matrices over the two alphabets with entry sum at most `max_total`.
    pub fn enumerate(row_alphabet: Alphabet, col_alphabet: Alphabet, max_total: u32) -> Vec<BiMatrix> {
        let (h, w) = (row_alphabet.size() as usize, col_alphabet.size() as usize);
        let cells = h * w;
        let mut out = Vec::new();
        let mut flat = vec![0u32; cells];
        fn rec(k: usize, left: u32, flat: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
            if k == flat.len() {
                emit(flat);
                return;
            }
            for v in 0..=left {
                flat[k] = v;
                rec(k + 1, left - v, flat, emit);
            }
            flat[k] = 0;
        }
        rec(0, max_total, &mut flat, &mut |f| {
            let entries = f.chunks(w.max(1)).map(|c| c.to_vec()).collect();
            out.push(BiMatrix { row_alphabet, col_alphabet, entries });
        });
        out
    }
}

impl fmt::Display for BiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, r) in self.entries.iter().enumerate() {
            if p > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>2}")).collect();
            write!(f, "[{} ]", cells.join(""))?;
        }
        Ok(())
    }
}

/// `(P(M), Q(M)) = (P(a), P(c))`.
pub fn rsk(m: &BiMatrix) -> (Tableau, Tableau) {
    (p_tableau(m.row_alphabet, &m.a_word()), p_tableau(m.col_alphabet, &m.c_word()))
}

/// Rebuilds `M` from a pair of normal tableaux of the same shape.
///
/// `Q` records the column letters: the last pair inserted has the largest
/// column letter and, among equal ones, sits in the rightmost cell.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<BiMatrix> {
    if !p.is_normal() || !q.is_normal() || p.row_lengths() != q.row_lengths() {
        return Err(CrystalError::ShapeMismatch("P and Q must be normal of the same shape".into()));
    }
    let mut pc = p.columns();
    let mut qc = q.columns();
    let mut a = Vec::new();
    let mut b = Vec::new();
    while !qc.is_empty() {
        let top = qc.iter().flatten().copied().max().unwrap();
        // rightmost occurrence of the largest letter; it ends a column
        let j = qc.iter().rposition(|c| c.contains(&top)).unwrap();
        let i = qc[j].iter().position(|&x| x == top).unwrap();
        if i + 1 != qc[j].len() {
            return Err(CrystalError::InvalidTableau("recording tableau is not semistandard".into()));
        }
        qc[j].pop();
        let mut y = pc[j].pop().unwrap();
        for col in pc[..j].iter_mut().rev() {
            let k = col.iter().rposition(|&x| x <= y).expect("column strictness");
            y = std::mem::replace(&mut col[k], y);
        }
        while qc.last().is_some_and(|c| c.is_empty()) {
            qc.pop();
            pc.pop();
        }
        a.push(y);
        b.push(top);
    }
    Ok(BiMatrix::from_pairs(p.alphabet(), q.alphabet(), &a, &b))
}

/// `κ^↘(M) = (P(M)^↘, Q(M)^↘)`.
pub fn kappa_se(m: &BiMatrix) -> (Tableau, Tableau) {
    let (p, q) = rsk(m);
    (rectify(&p, Corner::AntiNormal), rectify(&q, Corner::AntiNormal))
}

/// `κ^↖(M) = (P(M), Q(M))`.
pub fn kappa_nw(m: &BiMatrix) -> (Tableau, Tableau) {
    rsk(m)
}

/// Inverse of either projection: rectify both factors to normal shape first.
pub fn kappa_inverse(s: &Tableau, t: &Tableau) -> Result<BiMatrix> {
    rsk_inverse(&rectify(s, Corner::Normal), &rectify(t, Corner::Normal))
}

/// Longest weakly decreasing subsequence of a word (patience sorting).
pub fn longest_weakly_decreasing(word: &[u8]) -> usize {
    // tails[k] = largest possible last letter of a decreasing run of length k + 1
    let mut tails: Vec<u8> = Vec::new();
    for &x in word {
        let k = tails.partition_point(|&t| t >= x);
        if k == tails.len() {
            tails.push(x);
        } else {
            tails[k] = x;
        }
    }
    tails.len()
}

/// `ℓ(M)`: the longest weakly decreasing subword of `a`.
pub fn ell(m: &BiMatrix) -> usize {
    longest_weakly_decreasing(&m.a_word())
}

/// `ℓ(M)` as the number of columns of `P(M)`.
pub fn ell_by_columns(m: &BiMatrix) -> usize {
    p_tableau(m.row_alphabet, &m.a_word()).width()
}
