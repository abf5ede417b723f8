//! Classical `gl_n` crystals of letters, words and tableaux.

use crate::crystal::{Crystal, CrystalContext, Dir, Family};
use crate::weight::{Weight, WeightKind};

use super::{word_op, Alphabet, Tableau};

fn word_weight(alphabet: Alphabet, n: usize, word: &[u8]) -> Weight {
    let mut d = vec![0i64; n];
    for &x in word {
        let (k, sign) = alphabet.letter_weight(x);
        d[k - 1] += 2 * sign;
    }
    Weight::from_doubled(WeightKind::A { n }, d).expect("integral")
}

fn rank_n(alphabet: Alphabet) -> usize {
    match alphabet {
        Alphabet::Unbarred { hi, .. } => hi as usize,
        Alphabet::Barred { n } | Alphabet::Rotated { n, .. } => n as usize,
    }
}

/// Words of a fixed alphabet, `w_1 ⊗ ⋯ ⊗ w_k` under the tensor rule.
#[derive(Clone, Debug)]
pub struct WordCrystal {
    pub alphabet: Alphabet,
}

impl WordCrystal {
    fn op(&self, w: &[u8], i: usize, dir: Dir) -> Option<Vec<u8>> {
        let j = self.alphabet.rank_color(i)?;
        let (k, x) = word_op(w, j, dir)?;
        let mut out = w.to_vec();
        out[k] = x;
        Some(out)
    }
}

impl Crystal for WordCrystal {
    type Elt = Vec<u8>;

    fn context(&self) -> CrystalContext {
        CrystalContext { family: Family::ClassicalA { n: rank_n(self.alphabet) }, ambient: false }
    }

    fn indices(&self) -> Vec<usize> {
        self.alphabet.colors()
    }

    fn weight(&self, w: &Vec<u8>) -> Weight {
        word_weight(self.alphabet, rank_n(self.alphabet), w)
    }

    fn raise(&self, w: &Vec<u8>, i: usize) -> Option<Vec<u8>> {
        self.op(w, i, Dir::Raise)
    }

    fn lower(&self, w: &Vec<u8>, i: usize) -> Option<Vec<u8>> {
        self.op(w, i, Dir::Lower)
    }

    fn key(&self, w: &Vec<u8>) -> String {
        let labels: Vec<String> = w.iter().map(|&x| self.alphabet.label(x).to_string()).collect();
        format!("{}:{}", self.alphabet.tag(), labels.join(" "))
    }
}

/// Semistandard tableaux of a fixed (skew) shape, acting through reading words.
#[derive(Clone, Debug)]
pub struct TableauCrystal {
    pub alphabet: Alphabet,
}

impl Crystal for TableauCrystal {
    type Elt = Tableau;

    fn context(&self) -> CrystalContext {
        CrystalContext { family: Family::ClassicalA { n: rank_n(self.alphabet) }, ambient: false }
    }

    fn indices(&self) -> Vec<usize> {
        self.alphabet.colors()
    }

    fn weight(&self, t: &Tableau) -> Weight {
        word_weight(self.alphabet, rank_n(self.alphabet), &t.reading_word())
    }

    fn raise(&self, t: &Tableau, i: usize) -> Option<Tableau> {
        t.crystal_op(i, Dir::Raise)
    }

    fn lower(&self, t: &Tableau, i: usize) -> Option<Tableau> {
        t.crystal_op(i, Dir::Lower)
    }

    fn key(&self, t: &Tableau) -> String {
        t.key()
    }
}
