//! Totally ordered alphabets. Letters are stored by their rank (1-based
//! position in the order), so every alphabet is `{1 < 2 < ... < size}`
//! internally and only labels differ.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CrystalError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Alphabet {
    /// `lo < lo+1 < ... < hi`; `[n]` is `Unbarred { lo: 1, hi: n }`.
    Unbarred { lo: u8, hi: u8 },
    /// `n̄ < ... < 1̄`.
    Barred { n: u8 },
    /// `r+1 ≺ ... ≺ n ≺ 1 ≺ ... ≺ r`.
    Rotated { n: u8, r: u8 },
}

impl Alphabet {
    pub fn unbarred(n: u8) -> Self {
        Alphabet::Unbarred { lo: 1, hi: n }
    }

    pub fn size(&self) -> u8 {
        match *self {
            Alphabet::Unbarred { lo, hi } => hi + 1 - lo,
            Alphabet::Barred { n } | Alphabet::Rotated { n, .. } => n,
        }
    }

    /// Signed label of a rank: barred letters are negative.
    pub fn label(&self, rank: u8) -> i32 {
        match *self {
            Alphabet::Unbarred { lo, .. } => (lo + rank - 1) as i32,
            Alphabet::Barred { n } => -((n + 1 - rank) as i32),
            Alphabet::Rotated { n, r } => ((r + rank - 1) % n + 1) as i32,
        }
    }

    pub fn rank_of(&self, label: i32) -> Option<u8> {
        (1..=self.size()).find(|&k| self.label(k) == label)
    }

    /// Index `k` with `wt(letter) = ±ε_k`, and the sign.
    pub fn letter_weight(&self, rank: u8) -> (usize, i64) {
        let l = self.label(rank);
        if l < 0 {
            ((-l) as usize, -1)
        } else {
            (l as usize, 1)
        }
    }

    /// Converts a crystal color into the rank color `j` for which `f̃`
    /// turns rank `j` into rank `j + 1`.
    pub fn rank_color(&self, color: usize) -> Option<u8> {
        let j = match *self {
            Alphabet::Unbarred { lo, hi } => {
                if color < lo as usize || color >= hi as usize {
                    return None;
                }
                color + 1 - lo as usize
            }
            Alphabet::Barred { n } => {
                if color < 1 || color >= n as usize {
                    return None;
                }
                n as usize - color
            }
            Alphabet::Rotated { n, r } => {
                if color >= n as usize || color == r as usize {
                    return None;
                }
                (color + n as usize - r as usize) % n as usize
            }
        };
        Some(j as u8)
    }

    /// Crystal colors acting on this alphabet.
    pub fn colors(&self) -> Vec<usize> {
        let top = match *self {
            Alphabet::Unbarred { hi, .. } => hi as usize,
            Alphabet::Barred { n } | Alphabet::Rotated { n, .. } => n as usize,
        };
        (0..top).filter(|&c| self.rank_color(c).is_some()).collect()
    }

    pub fn tag(&self) -> String {
        match *self {
            Alphabet::Unbarred { lo, hi } => format!("[{lo}..{hi}]"),
            Alphabet::Barred { n } => format!("[-{n}..-1]"),
            Alphabet::Rotated { n, r } => format!("[{n}+{r}]"),
        }
    }

    pub fn parse_tag(tag: &str) -> Result<Alphabet> {
        let bad = || CrystalError::Parse(format!("unknown alphabet tag {tag:?}"));
        let inner = tag.strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        if let Some((n, r)) = inner.split_once('+') {
            let n = n.parse().map_err(|_| bad())?;
            let r = r.parse().map_err(|_| bad())?;
            return Ok(Alphabet::Rotated { n, r });
        }
        let (a, b) = inner.split_once("..").ok_or_else(bad)?;
        let a: i32 = a.parse().map_err(|_| bad())?;
        let b: i32 = b.parse().map_err(|_| bad())?;
        if a < 0 && b == -1 {
            Ok(Alphabet::Barred { n: (-a) as u8 })
        } else if a > 0 && b >= a {
            Ok(Alphabet::Unbarred { lo: a as u8, hi: b as u8 })
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_follow_the_order() {
        let b = Alphabet::Barred { n: 3 };
        assert_eq!((1..=3).map(|k| b.label(k)).collect::<Vec<_>>(), vec![-3, -2, -1]);
        let r = Alphabet::Rotated { n: 6, r: 3 };
        assert_eq!((1..=6).map(|k| r.label(k)).collect::<Vec<_>>(), vec![4, 5, 6, 1, 2, 3]);
        let u = Alphabet::Unbarred { lo: 4, hi: 6 };
        assert_eq!(u.rank_of(5), Some(2));
    }

    #[test]
    fn colors_move_labels_as_weights_demand() {
        // f̃_c subtracts α_c = ε_c - ε_{c+1}
        let b = Alphabet::Barred { n: 4 };
        for c in 1..4 {
            let j = b.rank_color(c).unwrap();
            assert_eq!(b.label(j), -(c as i32 + 1));
            assert_eq!(b.label(j + 1), -(c as i32));
        }
        let r = Alphabet::Rotated { n: 5, r: 2 };
        assert_eq!(r.colors(), vec![0, 1, 3, 4]);
        let j = r.rank_color(0).unwrap();
        assert_eq!((r.label(j), r.label(j + 1)), (5, 1));
    }

    #[test]
    fn tags_round_trip() {
        for a in [Alphabet::unbarred(4), Alphabet::Unbarred { lo: 3, hi: 7 }, Alphabet::Barred { n: 5 }, Alphabet::Rotated { n: 6, r: 2 }] {
            assert_eq!(Alphabet::parse_tag(&a.tag()).unwrap(), a);
        }
    }
}
