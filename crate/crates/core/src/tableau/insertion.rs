//! Schensted column insertion, the insertion tableau `P(w)` and
//! rectification to the normal or anti-normal corner.

use serde::{Deserialize, Serialize};

use super::{Alphabet, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Corner {
    /// Normal shape `λ`, written `T^↖`.
    Normal,
    /// Anti-normal shape `λ^π`, written `T^↘`.
    AntiNormal,
}

/// Inserts `x` into columns (left to right, each top to bottom) in place.
fn insert_columns(cols: &mut Vec<Vec<u8>>, mut x: u8) {
    for col in cols.iter_mut() {
        match col.iter().position(|&y| y >= x) {
            Some(k) => x = std::mem::replace(&mut col[k], x),
            None => {
                col.push(x);
                return;
            }
        }
    }
    cols.push(vec![x]);
}

/// `x → S`: column insertion of a letter into a normal-shape tableau.
pub fn column_insert(s: &Tableau, x: u8) -> Tableau {
    assert!(s.is_normal(), "column insertion needs a normal shape");
    let mut cols = s.columns();
    insert_columns(&mut cols, x);
    Tableau::from_columns(s.alphabet(), &cols).expect("insertion keeps semistandardness")
}

/// `P(w) = (w_r → (⋯ (w_2 → w_1) ⋯))`: `w_1` is inserted first.
pub fn p_tableau(alphabet: Alphabet, word: &[u8]) -> Tableau {
    let mut cols = Vec::new();
    for &x in word {
        insert_columns(&mut cols, x);
    }
    Tableau::from_columns(alphabet, &cols).expect("insertion keeps semistandardness")
}

/// Reverses a word and complements its letters, `x ↦ m + 1 - x`.
pub fn reverse_complement(word: &[u8], m: u8) -> Vec<u8> {
    word.iter().rev().map(|&x| m + 1 - x).collect()
}

/// The unique tableau of normal (resp. anti-normal) shape that is Knuth
/// equivalent to `t`.
///
/// The anti-normal case conjugates by reverse-complement, which is an
/// anti-automorphism of the plactic relations, so it reduces to `P`.
pub fn rectify(t: &Tableau, corner: Corner) -> Tableau {
    let a = t.alphabet();
    let w = t.reading_word();
    match corner {
        Corner::Normal => p_tableau(a, &w),
        Corner::AntiNormal => p_tableau(a, &reverse_complement(&w, a.size())).rotate_complement(),
    }
}
