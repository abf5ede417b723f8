//! Brute-force oracles. Nothing here calls the library code it is used to
//! check; each oracle works from the definitions directly.

#![allow(dead_code)]

use std::collections::HashMap;

/// Every filling of the skew shape `outer / inner` with letters `1..=n`,
/// rows weakly increasing and columns strictly increasing, as rows of
/// `Option<u8>` (`None` for inner cells). Cells are filled one at a time
/// and the two constraints are checked against the already filled
/// neighbours.
pub fn ssyt_fillings(outer: &[usize], inner: &[usize], n: u8) -> Vec<Vec<Vec<Option<u8>>>> {
    let inner_at = |i: usize| inner.get(i).copied().unwrap_or(0);
    let cells: Vec<(usize, usize)> =
        outer.iter().enumerate().flat_map(|(i, &len)| (inner_at(i)..len).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<Option<u8>>> = outer.iter().map(|&len| vec![None; len]).collect();
    let mut out = Vec::new();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<Option<u8>>>, n: u8, out: &mut Vec<Vec<Vec<Option<u8>>>>) {
        let Some(&(i, j)) = cells.get(k) else {
            out.push(grid.clone());
            return;
        };
        for x in 1..=n {
            let left_ok = j == 0 || grid[i][j - 1].is_none_or(|l| l <= x);
            let up_ok = i == 0 || grid[i - 1].get(j).copied().flatten().is_none_or(|u| u < x);
            if left_ok && up_ok {
                grid[i][j] = Some(x);
                go(k + 1, cells, grid, n, out);
                grid[i][j] = None;
            }
        }
    }
    go(0, &cells, &mut grid, n, &mut out);
    out
}

pub fn count_fillings(shape: &[usize], n: u8) -> usize {
    ssyt_fillings(shape, &[], n).len()
}

/// All partitions inside the `rows × cols` rectangle.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let mut p = cur.clone();
        while p.last() == Some(&0) {
            p.pop();
        }
        if cur.len() == rows {
            out.push(p);
            return;
        }
        for x in (0..=max).rev() {
            cur.push(x);
            go(rows, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(p: &[usize]) -> Vec<usize> {
    (0..p.first().copied().unwrap_or(0)).map(|j| p.iter().filter(|&&x| x > j).count()).collect()
}

/// All words of length `len` over `1..=n`.
pub fn words(len: usize, n: u8) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| (1..=n).map(move |x| [w.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Knuth classes of the words of length `len` over `1..=n`, as a map from
/// word to class id, computed by closing under the elementary relations
///   `y z x ~ y x z` (`x < y <= z`) and `x z y ~ z x y` (`x <= y < z`)
/// applied to the reversed word: insertion in this crate reads the word
/// from the left by column insertion, which is row insertion of the
/// reversed word.
pub fn knuth_classes(len: usize, n: u8) -> HashMap<Vec<u8>, usize> {
    let all = words(len, n);
    let index: HashMap<Vec<u8>, usize> = all.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (k, w) in all.iter().enumerate() {
        let v: Vec<u8> = w.iter().rev().copied().collect();
        for t in 0..len.saturating_sub(2) {
            let (a, b, c) = (v[t], v[t + 1], v[t + 2]);
            let mut moves = Vec::new();
            // y z x -> y x z
            if c < a && a <= b {
                moves.push([a, c, b]);
            }
            // y x z -> y z x
            if b < a && a <= c {
                moves.push([a, c, b]);
            }
            // x z y -> z x y
            if a <= c && c < b {
                moves.push([b, a, c]);
            }
            // z x y -> x z y
            if b <= c && c < a {
                moves.push([b, a, c]);
            }
            for m in moves {
                let mut u = v.clone();
                u[t..t + 3].copy_from_slice(&m);
                u.reverse();
                let (x, y) = (find(&mut parent, k), find(&mut parent, index[&u]));
                parent[x] = y;
            }
        }
    }
    all.iter().enumerate().map(|(k, w)| (w.clone(), find(&mut parent, k))).collect()
}

/// Length of the string through `b` in one direction, by walking it.
pub fn walk<E: Clone>(b: &E, step: impl Fn(&E) -> Option<E>) -> usize {
    let mut k = 0;
    let mut cur = b.clone();
    while let Some(next) = step(&cur) {
        cur = next;
        k += 1;
        assert!(k < 10_000, "string does not terminate");
    }
    k
}

/// Longest weakly decreasing subsequence by trying every subset.
pub fn longest_decreasing_by_subsets(word: &[u8]) -> usize {
    assert!(word.len() <= 16);
    (0u32..1 << word.len())
        .filter(|mask| {
            let picked: Vec<u8> = (0..word.len()).filter(|&k| mask >> k & 1 == 1).map(|k| word[k]).collect();
            picked.windows(2).all(|p| p[0] >= p[1])
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// The biword of a matrix of ranks: one pair `(row, col)` per unit of
/// each entry, sorted with `b` increasing and, for equal `b`, `a`
/// decreasing.
pub fn biword_by_sorting(dense: &[Vec<u32>]) -> (Vec<u8>, Vec<u8>) {
    let mut pairs = Vec::new();
    for (p, row) in dense.iter().enumerate() {
        for (q, &v) in row.iter().enumerate() {
            for _ in 0..v {
                pairs.push(((p + 1) as u8, (q + 1) as u8));
            }
        }
    }
    pairs.sort_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)));
    pairs.into_iter().unzip()
}

/// `Σ_{λ ⊆ (s^n)} #SST_{[n]}(ελ)`, with `ελ` stretching every row.
pub fn stretched_fillings(n: usize, eps: usize, s: usize) -> usize {
    partitions_in_box(n, s)
        .iter()
        .map(|l| {
            let stretched: Vec<usize> = l.iter().map(|&p| eps * p).collect();
            count_fillings(&stretched, n as u8)
        })
        .sum()
}

/// Fillings over `[n]` of the shapes inside `(s^n)` whose columns all have
/// even length, or all have odd length and there are exactly `s` of them.
pub fn parity_fillings(n: usize, s: usize, even: bool) -> usize {
    partitions_in_box(n, s)
        .into_iter()
        .filter(|l| {
            let cols = conjugate(l);
            if even {
                cols.iter().all(|c| c % 2 == 0)
            } else {
                cols.len() == s && cols.iter().all(|c| c % 2 == 1)
            }
        })
        .map(|l| count_fillings(&l, n as u8))
        .sum()
}
