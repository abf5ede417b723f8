//! Young tableaux over ordered alphabets and the type A crystal operators on
//! words and tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::Dir;
use crate::error::{CrystalError, Result};
use crate::weight::{Weight, WeightKind};

pub mod alphabet;
pub mod crystals;
pub mod insertion;
pub mod jdt;
pub mod signature;
pub mod ssyt;

pub use alphabet::Alphabet;
pub use insertion::{column_insert, p_tableau, rectify, Corner};
pub use jdt::{evacuation, inverse_promotion, promotion};
pub use signature::{signature_reduce, Padding, Pos, Reduced, Sign};
pub use ssyt::{count_ssyt, count_ssyt_skew, enumerate_ssyt, enumerate_ssyt_skew};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CrystalError::InvalidTableau(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        Partition((0..w).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions contained in this one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(bound: &[usize], prev: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
            let i = cur.len();
            if i >= bound.len() {
                return;
            }
            for p in 1..=bound[i].min(prev) {
                cur.push(p);
                rec(bound, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One row of a skew tableau: cells occupy columns `start..start + cells.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Row {
    pub start: usize,
    pub cells: Vec<u8>,
}

impl Row {
    pub fn end(&self) -> usize {
        self.start + self.cells.len()
    }

    pub fn get(&self, col: usize) -> Option<u8> {
        if col >= self.start {
            self.cells.get(col - self.start).copied()
        } else {
            None
        }
    }
}

/// A semistandard tableau of skew shape; entries are alphabet ranks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    alphabet: Alphabet,
    rows: Vec<Row>,
}

impl Tableau {
    pub fn empty(alphabet: Alphabet) -> Self {
        Tableau { alphabet, rows: Vec::new() }
    }

    pub fn new(alphabet: Alphabet, rows: Vec<Row>) -> Result<Self> {
        let mut t = Tableau { alphabet, rows };
        t.trim();
        t.validate()?;
        Ok(t)
    }

    /// Normal shape from rows, top to bottom.
    pub fn from_rows(alphabet: Alphabet, rows: Vec<Vec<u8>>) -> Result<Self> {
        Self::new(alphabet, rows.into_iter().map(|cells| Row { start: 0, cells }).collect())
    }

    /// Normal shape from columns, left to right, each listed top to bottom.
    pub fn from_columns(alphabet: Alphabet, cols: &[Vec<u8>]) -> Result<Self> {
        let h = cols.iter().map(Vec::len).max().unwrap_or(0);
        let rows = (0..h)
            .map(|i| Row { start: 0, cells: cols.iter().map_while(|c| c.get(i).copied()).collect() })
            .collect();
        let t = Self::new(alphabet, rows)?;
        if t.columns() != cols.iter().filter(|c| !c.is_empty()).cloned().collect::<Vec<_>>() {
            return Err(CrystalError::ShapeMismatch("column lengths must weakly decrease".into()));
        }
        Ok(t)
    }

    /// Anti-normal shape from columns enumerated from the right (first entry
    /// is the rightmost column), each listed top to bottom and bottom aligned.
    pub fn from_right_columns(alphabet: Alphabet, cols: &[Vec<u8>]) -> Result<Self> {
        let mut cols: Vec<&Vec<u8>> = cols.iter().collect();
        while cols.last().is_some_and(|c| c.is_empty()) {
            cols.pop();
        }
        let h = cols.iter().map(|c| c.len()).max().unwrap_or(0);
        let w = cols.len();
        let mut rows = Vec::with_capacity(h);
        for i in 0..h {
            // columns whose cells reach row i, from the left
            let mut start = w;
            let mut cells = Vec::new();
            for x in 0..w {
                let col = cols[w - 1 - x];
                let top = h - col.len();
                if i >= top {
                    if cells.is_empty() {
                        start = x;
                    }
                    cells.push(col[i - top]);
                } else if !cells.is_empty() {
                    return Err(CrystalError::ShapeMismatch("not an anti-normal shape".into()));
                }
            }
            rows.push(Row { start, cells });
        }
        let t = Self::new(alphabet, rows)?;
        if !t.is_antinormal() {
            return Err(CrystalError::ShapeMismatch("not an anti-normal shape".into()));
        }
        Ok(t)
    }

    fn trim(&mut self) {
        while self.rows.last().is_some_and(|r| r.cells.is_empty()) {
            self.rows.pop();
        }
        while self.rows.first().is_some_and(|r| r.cells.is_empty()) {
            self.rows.remove(0);
        }
        for r in &mut self.rows {
            if r.cells.is_empty() {
                r.start = 0;
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(CrystalError::InvalidTableau(m));
        let m = self.alphabet.size();
        for (i, r) in self.rows.iter().enumerate() {
            if r.cells.iter().any(|&x| x < 1 || x > m) {
                return bad(format!("row {i} has a letter outside the alphabet"));
            }
            if r.cells.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {i} is not weakly increasing"));
            }
        }
        for i in 1..self.rows.len() {
            let (a, b) = (&self.rows[i - 1], &self.rows[i]);
            if b.cells.is_empty() || a.cells.is_empty() {
                continue;
            }
            if a.start < b.start || a.end() < b.end() {
                return bad(format!("rows {} and {} do not form a skew shape", i - 1, i));
            }
            for c in b.start..b.end() {
                if let Some(x) = a.get(c) {
                    if x >= b.get(c).unwrap() {
                        return bad(format!("column {c} is not strictly increasing"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows.iter().map(Row::end).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.cells.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u8> {
        self.rows.get(row)?.get(col)
    }

    pub fn is_normal(&self) -> bool {
        self.rows.iter().all(|r| r.start == 0)
            && self.rows.windows(2).all(|w| w[0].cells.len() >= w[1].cells.len())
    }

    pub fn is_antinormal(&self) -> bool {
        let w = self.width();
        self.rows.iter().all(|r| r.end() == w) && self.rows.windows(2).all(|p| p[0].cells.len() <= p[1].cells.len())
    }

    /// Row lengths of the outer shape, top to bottom.
    pub fn outer(&self) -> Vec<usize> {
        self.rows.iter().map(Row::end).collect()
    }

    /// Row lengths of the inner shape, top to bottom.
    pub fn inner(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.start).collect()
    }

    /// Row lengths of the filled cells, i.e. the shape after normalizing.
    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.cells.len()).collect()
    }

    /// The partition `λ` when the shape is `λ` or `λ^π`.
    pub fn shape(&self) -> Partition {
        let mut parts = self.row_lengths();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted")
    }

    /// Columns of a normal-shape tableau, left to right, top to bottom.
    pub fn columns(&self) -> Vec<Vec<u8>> {
        let w = self.width();
        (0..w)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c)).collect::<Vec<_>>())
            .filter(|c| !c.is_empty())
            .collect()
    }

    /// Columns enumerated from the right, each top to bottom.
    pub fn right_columns(&self) -> Vec<Vec<u8>> {
        let mut cols = self.columns();
        cols.reverse();
        cols
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Vec<u8> {
        self.rows.iter().flat_map(|r| r.cells.iter().rev().copied()).collect()
    }

    /// Refills the cells in reading order.
    pub fn with_word(&self, word: &[u8]) -> Tableau {
        assert_eq!(word.len(), self.size());
        let mut rows = self.rows.clone();
        let mut k = 0;
        for r in &mut rows {
            for c in r.cells.iter_mut().rev() {
                *c = word[k];
                k += 1;
            }
        }
        Tableau { alphabet: self.alphabet, rows }
    }

    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Tableau> {
        Tableau::new(alphabet, self.rows.clone())
    }

    /// Number of occurrences of each rank, indexed from rank 1.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.alphabet.size() as usize];
        for r in &self.rows {
            for &x in &r.cells {
                c[x as usize - 1] += 1;
            }
        }
        c
    }

    /// `Σ wt(letter)` in a weight lattice with at least as many coordinates
    /// as the letters' `ε`-indices.
    pub fn weight(&self, kind: WeightKind) -> Weight {
        let mut d = vec![0i64; kind.rank()];
        for (k, &m) in self.content().iter().enumerate() {
            let (idx, sign) = self.alphabet.letter_weight(k as u8 + 1);
            d[idx - 1] += 2 * sign * m as i64;
        }
        Weight::from_doubled(kind, d).expect("integral weight")
    }

    /// Classical crystal operator through the reading word.
    pub fn crystal_op(&self, color: usize, dir: Dir) -> Option<Tableau> {
        let j = self.alphabet.rank_color(color)?;
        let word = self.reading_word();
        let (pos, letter) = word_op(&word, j, dir)?;
        let mut w = word;
        w[pos] = letter;
        Some(self.with_word(&w))
    }

    /// 180° rotation inside the bounding box with ranks complemented.
    pub fn rotate_complement(&self) -> Tableau {
        let w = self.width();
        let m = self.alphabet.size();
        let rows = self
            .rows
            .iter()
            .rev()
            .map(|r| Row {
                start: if r.cells.is_empty() { 0 } else { w - r.end() },
                cells: r.cells.iter().rev().map(|&x| m + 1 - x).collect(),
            })
            .collect();
        let mut t = Tableau { alphabet: self.alphabet, rows };
        t.trim();
        t
    }

    /// `rows` joined by ` / `, inner cells shown as `.`, barred letters negative.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                let mut parts: Vec<String> = vec![".".to_string(); r.start];
                parts.extend(r.cells.iter().map(|&x| self.alphabet.label(x).to_string()));
                parts.join(" ")
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }

    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Tableau> {
        let mut rows = Vec::new();
        for row in text.split('/') {
            let mut start = 0;
            let mut cells = Vec::new();
            for tok in row.split_whitespace() {
                if tok == "." {
                    if !cells.is_empty() {
                        return Err(CrystalError::Parse(format!("placeholder after entries in {row:?}")));
                    }
                    start += 1;
                } else {
                    let label: i32 = tok.parse().map_err(|_| CrystalError::Parse(format!("bad entry {tok:?}")))?;
                    let rank = alphabet
                        .rank_of(label)
                        .ok_or_else(|| CrystalError::Parse(format!("{label} is not in {alphabet}")))?;
                    cells.push(rank);
                }
            }
            rows.push(Row { start, cells });
        }
        Tableau::new(alphabet, rows)
    }

    /// Canonical key: alphabet tag and rows.
    pub fn key(&self) -> String {
        format!("{}:{}", self.alphabet.tag(), self.to_text())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut parts: Vec<String> = vec![".".to_string(); r.start];
            parts.extend(r.cells.iter().map(|&x| self.alphabet.label(x).to_string()));
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// A word over an alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub alphabet: Alphabet,
    pub letters: Vec<u8>,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<u8>) -> Self {
        Word { alphabet, letters }
    }

    pub fn from_labels(alphabet: Alphabet, labels: &[i32]) -> Result<Self> {
        let letters = labels
            .iter()
            .map(|&l| alphabet.rank_of(l).ok_or_else(|| CrystalError::Parse(format!("{l} is not in {alphabet}"))))
            .collect::<Result<_>>()?;
        Ok(Word { alphabet, letters })
    }

    pub fn labels(&self) -> Vec<i32> {
        self.letters.iter().map(|&x| self.alphabet.label(x)).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Bracketing on a word of ranks for the rank color `j` (rank `j` is `+`,
/// rank `j + 1` is `-`). Returns the position that changes and its new rank.
pub fn word_op(word: &[u8], j: u8, dir: Dir) -> Option<(usize, u8)> {
    let signs: Vec<Sign> = word
        .iter()
        .map(|&x| {
            if x == j {
                Sign::Plus
            } else if x == j + 1 {
                Sign::Minus
            } else {
                Sign::Dot
            }
        })
        .collect();
    let red = signature_reduce(&signs, Padding::None);
    match dir {
        Dir::Raise => match red.rightmost_minus()? {
            Pos::At(k) => Some((k, j)),
            Pos::Padding => None,
        },
        Dir::Lower => match red.leftmost_plus()? {
            Pos::At(k) => Some((k, j + 1)),
            Pos::Padding => None,
        },
    }
}

/// `ẽ_i`/`f̃_i` on a word; `Ok(None)` is the null result.
pub fn word_crystal_op(word: &Word, color: usize, dir: Dir) -> Result<Option<Word>> {
    let j = word.alphabet.rank_color(color).ok_or_else(|| CrystalError::IndexOutOfRange {
        index: color,
        set: word.alphabet.colors(),
    })?;
    Ok(word_op(&word.letters, j, dir).map(|(k, x)| {
        let mut letters = word.letters.clone();
        letters[k] = x;
        Word { alphabet: word.alphabet, letters }
    }))
}

/// Length of the `ẽ`-string of a word for a rank color.
pub fn word_epsilon(word: &[u8], j: u8) -> usize {
    let signs: Vec<Sign> = word
        .iter()
        .map(|&x| if x == j { Sign::Plus } else if x == j + 1 { Sign::Minus } else { Sign::Dot })
        .collect();
    signature_reduce(&signs, Padding::None).count(Sign::Minus)
}
