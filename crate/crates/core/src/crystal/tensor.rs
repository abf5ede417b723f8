//! Tensor products of crystals and the one-element crystals `T_Λ`.

use crate::weight::Weight;

use super::{Crystal, CrystalContext, Stat};

fn add(a: Stat, k: i64) -> Stat {
    a.map(|x| x + k)
}

/// `B1 ⊗ B2` with the rule: `ẽ_i` acts on the left factor when
/// `φ_i(b1) >= ε_i(b2)`, `f̃_i` when `φ_i(b1) > ε_i(b2)`.
///
/// Since `None < Some(_)`, `-∞` compares correctly under the derived order.
pub struct TensorProduct<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: Crystal, B: Crystal> TensorProduct<A, B> {
    pub fn new(left: A, right: B) -> Self {
        TensorProduct { left, right }
    }

    fn pairing(&self, w: &Weight, i: usize) -> i64 {
        w.pair(i).expect("tensor factor weights pair integrally")
    }
}

impl<A: Crystal, B: Crystal> Crystal for TensorProduct<A, B> {
    type Elt = (A::Elt, B::Elt);

    fn context(&self) -> CrystalContext {
        self.left.context()
    }

    fn indices(&self) -> Vec<usize> {
        let right = self.right.indices();
        self.left.indices().into_iter().filter(|i| right.contains(i)).collect()
    }

    fn weight(&self, b: &Self::Elt) -> Weight {
        self.left.weight(&b.0).add(&self.right.weight(&b.1))
    }

    fn raise(&self, b: &Self::Elt, i: usize) -> Option<Self::Elt> {
        let (b1, b2) = b;
        if self.left.phi(b1, i) >= self.right.epsilon(b2, i) {
            Some((self.left.raise(b1, i)?, b2.clone()))
        } else {
            Some((b1.clone(), self.right.raise(b2, i)?))
        }
    }

    fn lower(&self, b: &Self::Elt, i: usize) -> Option<Self::Elt> {
        let (b1, b2) = b;
        if self.left.phi(b1, i) > self.right.epsilon(b2, i) {
            Some((self.left.lower(b1, i)?, b2.clone()))
        } else {
            Some((b1.clone(), self.right.lower(b2, i)?))
        }
    }

    fn epsilon(&self, b: &Self::Elt, i: usize) -> Stat {
        let (b1, b2) = b;
        let shift = self.pairing(&self.left.weight(b1), i);
        self.left.epsilon(b1, i).max(add(self.right.epsilon(b2, i), -shift))
    }

    fn phi(&self, b: &Self::Elt, i: usize) -> Stat {
        let (b1, b2) = b;
        let shift = self.pairing(&self.right.weight(b2), i);
        add(self.left.phi(b1, i), shift).max(self.right.phi(b2, i))
    }

    fn key(&self, b: &Self::Elt) -> String {
        format!("{} ⊗ {}", self.left.key(&b.0), self.right.key(&b.1))
    }
}

/// The crystal `T_Λ = {t_Λ}` with `ε_i = φ_i = -∞`.
pub struct TLambda {
    pub context: CrystalContext,
    pub weight: Weight,
}

impl Crystal for TLambda {
    type Elt = ();

    fn context(&self) -> CrystalContext {
        self.context.clone()
    }

    fn weight(&self, _: &()) -> Weight {
        self.weight.clone()
    }

    fn raise(&self, _: &(), _: usize) -> Option<()> {
        None
    }

    fn lower(&self, _: &(), _: usize) -> Option<()> {
        None
    }

    fn epsilon(&self, _: &(), _: usize) -> Stat {
        None
    }

    fn phi(&self, _: &(), _: usize) -> Stat {
        None
    }

    fn key(&self, _: &()) -> String {
        format!("t{}", self.weight)
    }
}

/// `B^{⊗k}` for a crystal with finite structure functions, computed with
/// the signature rule: each factor contributes `-^ε +^φ` from left to right.
pub struct TensorPower<C> {
    pub base: C,
    pub k: usize,
}

impl<C: Crystal> TensorPower<C> {
    pub fn new(base: C, k: usize) -> Self {
        TensorPower { base, k }
    }

    /// Factor on which `ẽ_i` (`raise`) or `f̃_i` acts.
    fn acting_factor(&self, b: &[C::Elt], i: usize, raise: bool) -> Option<usize> {
        let mut open: Vec<usize> = Vec::new();
        let mut minus: Vec<usize> = Vec::new();
        for (j, x) in b.iter().enumerate() {
            let eps = self.base.epsilon(x, i).expect("finite ε");
            let phi = self.base.phi(x, i).expect("finite φ");
            for _ in 0..eps {
                if open.pop().is_none() {
                    minus.push(j);
                }
            }
            open.extend(std::iter::repeat_n(j, phi as usize));
        }
        if raise {
            minus.last().copied()
        } else {
            open.first().copied()
        }
    }
}

impl<C: Crystal> Crystal for TensorPower<C> {
    type Elt = Vec<C::Elt>;

    fn context(&self) -> CrystalContext {
        self.base.context()
    }

    fn indices(&self) -> Vec<usize> {
        self.base.indices()
    }

    fn weight(&self, b: &Self::Elt) -> Weight {
        b.iter()
            .map(|x| self.base.weight(x))
            .reduce(|a, w| a.add(&w))
            .unwrap_or_else(|| Weight::zero(self.base.context().weight_kind()))
    }

    fn raise(&self, b: &Self::Elt, i: usize) -> Option<Self::Elt> {
        let j = self.acting_factor(b, i, true)?;
        let mut out = b.clone();
        out[j] = self.base.raise(&b[j], i)?;
        Some(out)
    }

    fn lower(&self, b: &Self::Elt, i: usize) -> Option<Self::Elt> {
        let j = self.acting_factor(b, i, false)?;
        let mut out = b.clone();
        out[j] = self.base.lower(&b[j], i)?;
        Some(out)
    }

    fn key(&self, b: &Self::Elt) -> String {
        b.iter().map(|x| self.base.key(x)).collect::<Vec<_>>().join(" ⊗ ")
    }
}
