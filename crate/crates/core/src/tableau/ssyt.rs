//! Counting and enumerating semistandard tableaux.

use super::{Alphabet, Partition, Row, Tableau};

/// `|SST_[n](λ)|` by the hook-content formula.
pub fn count_ssyt(shape: &Partition, n: usize) -> u128 {
    let conj = shape.conjugate();
    let (mut num, mut den) = (1u128, 1u128);
    for (i, &len) in shape.parts().iter().enumerate() {
        for j in 0..len {
            let content = n as i64 + j as i64 - i as i64;
            if content <= 0 {
                return 0;
            }
            let hook = (len - j - 1) + (conj.part(j) - i - 1) + 1;
            num *= content as u128;
            den *= hook as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    num / den
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All fillings of the normal shape `λ` over `alphabet`.
pub fn enumerate_ssyt(shape: &Partition, alphabet: Alphabet) -> Vec<Tableau> {
    enumerate_ssyt_skew(shape, &Partition::empty(), alphabet)
}

/// All semistandard fillings of `outer / inner` over `alphabet`, by
/// exhaustive cell-by-cell search in row-major order.
pub fn enumerate_ssyt_skew(outer: &Partition, inner: &Partition, alphabet: Alphabet) -> Vec<Tableau> {
    assert!(outer.contains(inner), "inner shape must lie inside the outer shape");
    let m = alphabet.size();
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|i| (inner.part(i)..outer.part(i)).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u8>> = (0..outer.len()).map(|i| vec![0; outer.part(i)]).collect();
    let mut out = Vec::new();

    fn rec(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u8>>, inner: &Partition, m: u8, emit: &mut dyn FnMut(&Vec<Vec<u8>>)) {
        let Some(&(i, j)) = cells.get(k) else {
            emit(grid);
            return;
        };
        let mut lo = 1;
        if j > inner.part(i) {
            lo = lo.max(grid[i][j - 1]);
        }
        if i > 0 && j >= inner.part(i - 1) {
            lo = lo.max(grid[i - 1][j] + 1);
        }
        for x in lo..=m {
            grid[i][j] = x;
            rec(k + 1, cells, grid, inner, m, emit);
        }
        grid[i][j] = 0;
    }

    rec(0, &cells, &mut grid, inner, m, &mut |g| {
        let rows = g
            .iter()
            .enumerate()
            .map(|(i, r)| Row { start: inner.part(i), cells: r[inner.part(i)..].to_vec() })
            .collect();
        out.push(Tableau::new(alphabet, rows).expect("filled semistandard"));
    });
    out.sort();
    out
}

pub fn count_ssyt_skew(outer: &Partition, inner: &Partition, n: u8) -> usize {
    enumerate_ssyt_skew(outer, inner, Alphabet::unbarred(n)).len()
}
