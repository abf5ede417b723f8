//! Promotion and evacuation on normal-shape tableaux over `[n]`.

use super::insertion::{rectify, Corner};
use super::{Alphabet, Tableau};

type Grid = Vec<Vec<Option<u8>>>;

fn grid_of(t: &Tableau) -> Grid {
    t.rows().iter().map(|r| r.cells.iter().map(|&x| Some(x)).collect()).collect()
}

fn cell(g: &Grid, i: usize, j: usize) -> Option<u8> {
    g.get(i).and_then(|r| r.get(j)).copied().flatten()
}

fn top_n(t: &Tableau) -> u8 {
    match t.alphabet() {
        Alphabet::Unbarred { lo: 1, hi } => hi,
        a => panic!("promotion is defined on [n], got {a}"),
    }
}

/// `pr`: remove the `n`s, slide each hole (leftmost first) to the north-west
/// by reverse jeu de taquin, add one to every entry and fill the holes with 1.
pub fn promotion(t: &Tableau) -> Tableau {
    assert!(t.is_normal(), "promotion needs a normal shape");
    let n = top_n(t);
    let mut g = grid_of(t);
    let mut holes: Vec<(usize, usize)> = Vec::new();
    for (i, row) in g.iter_mut().enumerate() {
        for (j, c) in row.iter_mut().enumerate() {
            if *c == Some(n) {
                *c = None;
                holes.push((i, j));
            }
        }
    }
    holes.sort_by_key(|&(_, j)| j);
    let mut done = Vec::new();
    for (mut i, mut j) in holes {
        loop {
            let above = if i > 0 { cell(&g, i - 1, j) } else { None };
            let left = if j > 0 { cell(&g, i, j - 1) } else { None };
            let (ni, nj) = match (above, left) {
                (None, None) => break,
                (Some(_), None) => (i - 1, j),
                (None, Some(_)) => (i, j - 1),
                (Some(a), Some(l)) => {
                    if a >= l {
                        (i - 1, j)
                    } else {
                        (i, j - 1)
                    }
                }
            };
            g[i][j] = g[ni][nj].take();
            (i, j) = (ni, nj);
        }
        done.push((i, j));
    }
    let mut rows: Vec<Vec<u8>> = g.iter().map(|r| r.iter().map(|c| c.map_or(0, |x| x + 1)).collect()).collect();
    for (i, j) in done {
        rows[i][j] = 1;
    }
    Tableau::from_rows(t.alphabet(), rows).expect("promotion keeps semistandardness")
}

/// `pr^{-1}`: remove the 1s, slide each hole (rightmost first) to the
/// south-east, subtract one and fill the holes with `n`.
pub fn inverse_promotion(t: &Tableau) -> Tableau {
    assert!(t.is_normal(), "promotion needs a normal shape");
    let n = top_n(t);
    let mut g = grid_of(t);
    let mut holes: Vec<(usize, usize)> = Vec::new();
    for (i, row) in g.iter_mut().enumerate() {
        for (j, c) in row.iter_mut().enumerate() {
            if *c == Some(1) {
                *c = None;
                holes.push((i, j));
            }
        }
    }
    holes.sort_by_key(|&(_, j)| std::cmp::Reverse(j));
    let mut done = Vec::new();
    for (mut i, mut j) in holes {
        loop {
            let below = cell(&g, i + 1, j);
            let right = cell(&g, i, j + 1);
            let (ni, nj) = match (below, right) {
                (None, None) => break,
                (Some(_), None) => (i + 1, j),
                (None, Some(_)) => (i, j + 1),
                (Some(b), Some(r)) => {
                    if b <= r {
                        (i + 1, j)
                    } else {
                        (i, j + 1)
                    }
                }
            };
            g[i][j] = g[ni][nj].take();
            (i, j) = (ni, nj);
        }
        done.push((i, j));
    }
    let mut rows: Vec<Vec<u8>> = g.iter().map(|r| r.iter().map(|c| c.map_or(0, |x| x - 1)).collect()).collect();
    for (i, j) in done {
        rows[i][j] = n;
    }
    Tableau::from_rows(t.alphabet(), rows).expect("promotion keeps semistandardness")
}

/// Schützenberger's involution: rotate by 180°, complement, rectify.
pub fn evacuation(t: &Tableau) -> Tableau {
    rectify(&t.rotate_complement(), Corner::Normal)
}
