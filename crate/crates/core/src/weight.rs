//! Classical weights in the ε-basis.
//!
//! Coordinates are stored doubled so that the half-integral spin weights of
//! type D (and of the folded type with fold multiplier 1) need no rationals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CrystalError, Result};

/// Which pairing formulas a weight obeys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeightKind {
    /// `A_{n-1}^{(1)}` (and its classical part `gl_n`): `n` coordinates,
    /// compared modulo the all-ones vector.
    A { n: usize },
    /// `D_{n+1}^{(2)}` (`eps = 1`) or `C_n^{(1)}` (`eps = 2`), stored in the
    /// folded coordinates `ε̂_k = ε_k - ε_{2n-k+1}`.
    Folded { n: usize, eps: u8 },
    /// `D_n^{(1)}`.
    D { n: usize },
}

impl WeightKind {
    pub fn rank(&self) -> usize {
        match *self {
            WeightKind::A { n } | WeightKind::Folded { n, .. } | WeightKind::D { n } => n,
        }
    }

    /// Largest node index of the affine diagram.
    pub fn max_index(&self) -> usize {
        match *self {
            WeightKind::A { n } => n - 1,
            WeightKind::Folded { n, .. } | WeightKind::D { n } => n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightRepr", into = "WeightRepr")]
pub struct Weight {
    kind: WeightKind,
    doubled: Vec<i64>,
}

#[derive(Clone, Serialize, Deserialize)]
struct WeightRepr {
    kind: WeightKind,
    doubled: Vec<i64>,
}

impl TryFrom<WeightRepr> for Weight {
    type Error = CrystalError;
    fn try_from(r: WeightRepr) -> Result<Self> {
        Weight::from_doubled(r.kind, r.doubled)
    }
}

impl From<Weight> for WeightRepr {
    fn from(w: Weight) -> Self {
        WeightRepr { kind: w.kind, doubled: w.doubled }
    }
}

impl Weight {
    /// Builds a weight from doubled coordinates, enforcing the parity invariant.
    pub fn from_doubled(kind: WeightKind, doubled: Vec<i64>) -> Result<Self> {
        if doubled.len() != kind.rank() {
            return Err(CrystalError::WeightLength { expected: kind.rank(), got: doubled.len() });
        }
        if let Some(first) = doubled.first() {
            let parity = first.rem_euclid(2);
            if doubled.iter().any(|c| c.rem_euclid(2) != parity) {
                return Err(CrystalError::ParityMismatch(doubled));
            }
        }
        let mut w = Weight { kind, doubled };
        w.canonicalize();
        Ok(w)
    }

    /// Builds a weight from integral ε-coefficients.
    pub fn from_coeffs(kind: WeightKind, coeffs: &[i64]) -> Result<Self> {
        Self::from_doubled(kind, coeffs.iter().map(|c| 2 * c).collect())
    }

    pub fn zero(kind: WeightKind) -> Self {
        Weight { kind, doubled: vec![0; kind.rank()] }
    }

    /// `ε_k` for `1 <= k <= rank`.
    pub fn epsilon(kind: WeightKind, k: usize) -> Self {
        let mut doubled = vec![0; kind.rank()];
        doubled[k - 1] = 2;
        let mut w = Weight { kind, doubled };
        w.canonicalize();
        w
    }

    /// `ω_r = ε_1 + ... + ε_r` (type A fundamental weight).
    pub fn fundamental_a(n: usize, r: usize) -> Self {
        let kind = WeightKind::A { n };
        let doubled = (1..=n).map(|k| if k <= r { 2 } else { 0 }).collect();
        let mut w = Weight { kind, doubled };
        w.canonicalize();
        w
    }

    /// `½ Σ signs_k ε_k`, the weight of a spin vector.
    pub fn half_signs(kind: WeightKind, signs: &[i8]) -> Self {
        let doubled = signs.iter().map(|&s| s as i64).collect();
        Weight { kind, doubled }
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    fn canonicalize(&mut self) {
        if let WeightKind::A { .. } = self.kind {
            if let Some(&min) = self.doubled.iter().min() {
                for c in &mut self.doubled {
                    *c -= min;
                }
            }
        }
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
        assert_eq!(self.kind, other.kind, "weights of different kinds");
        let doubled = self.doubled.iter().zip(&other.doubled).map(|(&a, &b)| f(a, b)).collect();
        let mut w = Weight { kind: self.kind, doubled };
        w.canonicalize();
        w
    }

    pub fn add(&self, other: &Weight) -> Weight {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Weight {
        let mut w = Weight { kind: self.kind, doubled: self.doubled.iter().map(|c| c * k).collect() };
        w.canonicalize();
        w
    }

    /// `⟨w, h_i⟩` by the type-specific formula.
    pub fn pair(&self, i: usize) -> Result<i64> {
        let d = &self.doubled;
        let max = self.kind.max_index();
        if i > max {
            return Err(CrystalError::IndexOutOfRange { index: i, set: (0..=max).collect() });
        }
        // numerator over a denominator; the doubled coordinates contribute a factor 2
        let (num, den) = match self.kind {
            WeightKind::A { n } => {
                if i == 0 {
                    (d[n - 1] - d[0], 2)
                } else {
                    (d[i - 1] - d[i], 2)
                }
            }
            WeightKind::D { n } => {
                if i == 0 {
                    (-(d[0] + d[1]), 2)
                } else if i == n {
                    (d[n - 2] + d[n - 1], 2)
                } else {
                    (d[i - 1] - d[i], 2)
                }
            }
            // ĥ_i = h_i on the ambient weight (a_k = c_k, a_{2n-k+1} = -c_k),
            // with the affine ends normalized by the fold multiplier.
            WeightKind::Folded { n, eps } => {
                let eps = eps as i64;
                if i == 0 {
                    (-d[0], eps)
                } else if i == n {
                    (d[n - 1], eps)
                } else {
                    (d[i - 1] - d[i], 2)
                }
            }
        };
        if num % den != 0 {
            return Err(CrystalError::NonIntegralPairing { coords: d.clone(), index: i });
        }
        Ok(num / den)
    }

    /// The ambient (unnormalized) pairing for folded weights: `⟨w, h_i⟩` of
    /// the underlying `A_{2n-1}^{(1)}` weight. Equal to [`Weight::pair`] for
    /// the other kinds.
    pub fn ambient_pair(&self, i: usize) -> Result<i64> {
        match self.kind {
            WeightKind::Folded { .. } if i == 0 => Ok(-self.doubled[0]),
            WeightKind::Folded { n, .. } if i == n => Ok(self.doubled[n - 1]),
            _ => self.pair(i),
        }
    }

    /// The simple root `α_i`.
    pub fn simple_root(kind: WeightKind, i: usize) -> Result<Weight> {
        let n = kind.rank();
        let max = kind.max_index();
        if i > max {
            return Err(CrystalError::IndexOutOfRange { index: i, set: (0..=max).collect() });
        }
        let mut d = vec![0i64; n];
        match kind {
            WeightKind::A { .. } => {
                if i == 0 {
                    d[n - 1] += 2;
                    d[0] -= 2;
                } else {
                    d[i - 1] += 2;
                    d[i] -= 2;
                }
            }
            WeightKind::D { .. } => {
                if i == 0 {
                    d[0] -= 2;
                    d[1] -= 2;
                } else if i == n {
                    d[n - 2] += 2;
                    d[n - 1] += 2;
                } else {
                    d[i - 1] += 2;
                    d[i] -= 2;
                }
            }
            WeightKind::Folded { eps, .. } => {
                let e = 2 * eps as i64;
                if i == 0 {
                    d[0] -= e;
                } else if i == n {
                    d[n - 1] += e;
                } else {
                    d[i - 1] += 2;
                    d[i] -= 2;
                }
            }
        }
        Weight::from_doubled(kind, d)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .doubled
            .iter()
            .map(|&c| if c % 2 == 0 { (c / 2).to_string() } else { format!("{}/2", c) })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_pairs_to_zero() {
        for kind in [WeightKind::A { n: 4 }, WeightKind::D { n: 4 }, WeightKind::Folded { n: 3, eps: 2 }] {
            let w = Weight::zero(kind);
            for i in 0..=kind.max_index() {
                assert_eq!(w.pair(i).unwrap(), 0);
            }
        }
    }

    #[test]
    fn type_a_cartan_diagonal() {
        let kind = WeightKind::A { n: 4 };
        let alpha1 = Weight::from_doubled(kind, vec![2, -2, 0, 0]).unwrap();
        assert_eq!(alpha1.pair(1).unwrap(), 2);
        for i in 0..4 {
            assert_eq!(Weight::simple_root(kind, i).unwrap().pair(i).unwrap(), 2);
        }
    }

    #[test]
    fn omega_r_against_h0() {
        // ω_r = ε_1 + ... + ε_r and ⟨·, h_0⟩ = c_n - c_1
        for n in 2..6 {
            for r in 1..n {
                assert_eq!(Weight::fundamental_a(n, r).pair(0).unwrap(), -1);
            }
        }
    }

    #[test]
    fn parity_is_enforced() {
        let kind = WeightKind::D { n: 4 };
        assert!(matches!(
            Weight::from_doubled(kind, vec![1, 0, 1, 1]),
            Err(CrystalError::ParityMismatch(_))
        ));
        assert!(Weight::from_doubled(kind, vec![1, -1, 1, 1]).is_ok());
    }

    #[test]
    fn type_a_modulo_all_ones() {
        let kind = WeightKind::A { n: 3 };
        let a = Weight::from_coeffs(kind, &[1, 1, 1]).unwrap();
        assert_eq!(a, Weight::zero(kind));
        let b = Weight::from_coeffs(kind, &[2, 0, 1]).unwrap();
        let c = Weight::from_coeffs(kind, &[1, -1, 0]).unwrap();
        assert_eq!(b, c);
    }

    #[test]
    fn cartan_matrices() {
        // D_4^{(1)}: node 2 is adjacent to 0,1,3,4
        let kind = WeightKind::D { n: 4 };
        let a = |i, j| Weight::simple_root(kind, j).unwrap().pair(i).unwrap();
        assert_eq!(a(0, 2), -1);
        assert_eq!(a(0, 1), 0);
        assert_eq!(a(4, 3), 0);
        assert_eq!(a(4, 2), -1);
        // C_2^{(1)}: a_{10} = -1, a_{01} = -2 ... long roots at both ends
        let kind = WeightKind::Folded { n: 2, eps: 2 };
        let a = |i, j| Weight::simple_root(kind, j).unwrap().pair(i).unwrap();
        assert_eq!(a(1, 2), -2);
        assert_eq!(a(2, 1), -1);
        assert_eq!(a(1, 0), -2);
        assert_eq!(a(0, 1), -1);
        // D_3^{(2)}: short roots at both ends
        let kind = WeightKind::Folded { n: 2, eps: 1 };
        let a = |i, j| Weight::simple_root(kind, j).unwrap().pair(i).unwrap();
        assert_eq!(a(1, 2), -1);
        assert_eq!(a(2, 1), -2);
        for i in 0..=2 {
            assert_eq!(a(i, i), 2);
        }
    }

    #[test]
    fn non_integral_pairing_is_an_error() {
        let kind = WeightKind::Folded { n: 2, eps: 2 };
        let w = Weight::from_doubled(kind, vec![1, 1]).unwrap();
        assert!(matches!(w.pair(2), Err(CrystalError::NonIntegralPairing { .. })));
        assert!(w.pair(5).is_err());
    }
}
