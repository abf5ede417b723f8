//! The signature rule: cancel `(+, -)` pairs separated only by dots.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
    Dot,
}

/// Which infinite tail surrounds the finite sequence.
///
/// Sequences are always given in display order (left to right). A padding of
/// `+` on the right or `-` on the left never takes part in a cancellation, so
/// only the choice of the acting position depends on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Padding {
    None,
    PlusRight,
    MinusLeft,
}

/// Position selected by the rule: inside the sequence, or the padding cell
/// adjacent to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pos {
    At(usize),
    Padding,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub signs: Vec<Sign>,
    pub padding: Padding,
}

impl Reduced {
    /// Where `ẽ` acts.
    pub fn rightmost_minus(&self) -> Option<Pos> {
        match self.signs.iter().rposition(|&s| s == Sign::Minus) {
            Some(k) => Some(Pos::At(k)),
            None if self.padding == Padding::MinusLeft => Some(Pos::Padding),
            None => None,
        }
    }

    /// Where `f̃` acts.
    pub fn leftmost_plus(&self) -> Option<Pos> {
        match self.signs.iter().position(|&s| s == Sign::Plus) {
            Some(k) => Some(Pos::At(k)),
            None if self.padding == Padding::PlusRight => Some(Pos::Padding),
            None => None,
        }
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.signs.iter().filter(|&&s| s == sign).count()
    }
}

pub fn signature_reduce(seq: &[Sign], padding: Padding) -> Reduced {
    let mut signs = seq.to_vec();
    let mut open: Vec<usize> = Vec::new();
    for k in 0..signs.len() {
        match signs[k] {
            Sign::Plus => open.push(k),
            Sign::Minus => {
                if let Some(p) = open.pop() {
                    signs[p] = Sign::Dot;
                    signs[k] = Sign::Dot;
                }
            }
            Sign::Dot => {}
        }
    }
    Reduced { signs, padding }
}
