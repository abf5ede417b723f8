//! The involutions `η_k` on KR crystal graphs and the identities relating
//! them to `ẽ_0` and to promotion.

use serde::{Deserialize, Serialize};

use crate::crystal::{lusztig_involution, CrystalGraph, Family, Generated, Report, Violation};
use crate::error::{CrystalError, Result};
use crate::kr_a::KrA;
use crate::rsk::BiMatrix;
use crate::tableau::jdt::promotion;
use crate::tableau::ssyt::enumerate_ssyt;
use crate::tableau::{Alphabet, Partition, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityName {
    /// `ẽ_0 = η ∘ f̃_r ∘ η` with `η = η_r`.
    Prop61,
    /// `pr = η_1 ∘ η_0`.
    PrEqEta1Eta0,
    /// `pr^k = η_k ∘ η_0` for `1 <= k < n`.
    PrkEqEtakEta0,
    /// `ẽ_0 = η_k ∘ f̃_k ∘ η_k` for `1 <= k < n`.
    CorollaryEtak,
    /// `η_0 ∘ ẽ_0 = f̃_0 ∘ η_0`.
    Eta0E0,
    /// `pr^n = id` and `η_1 η_0` has order exactly `n`.
    PrOrder,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: IdentityName,
    pub context: String,
    pub report: Report,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

fn family_rank(family: &Family) -> Result<(usize, usize)> {
    match *family {
        Family::A1 { n, r, .. } => Ok((n, r)),
        Family::Dtwisted { n, .. } | Family::C1 { n, .. } => Ok((n, n)),
        Family::D1 { n, r, .. } => Ok((n, r)),
        Family::ClassicalA { .. } => Err(CrystalError::InvalidParameters("η_k needs an affine family".into())),
    }
}

/// The colors `I ∖ {0, k}` together with the diagram automorphism induced
/// by the longest element of that classical subalgebra.
pub fn eta_colors(family: &Family, k: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let (n, _) = family_rank(family)?;
    let bad = || CrystalError::InvalidParameters(format!("η_{k} is not defined for {family:?}"));
    let (colors, image): (Vec<usize>, Box<dyn Fn(usize) -> usize>) = match *family {
        Family::A1 { .. } => {
            if k >= n {
                return Err(bad());
            }
            let colors = (1..n).filter(|&i| i != k).collect();
            (colors, Box::new(move |i| (n + k - i) % n))
        }
        Family::Dtwisted { .. } | Family::C1 { .. } => {
            if k != n {
                return Err(bad());
            }
            ((1..n).collect(), Box::new(move |i| n - i))
        }
        Family::D1 { .. } if k == n => ((1..n).collect(), Box::new(move |i| n - i)),
        Family::D1 { .. } if k + 1 == n => {
            // the chain 1 - 2 - … - (n-2) - n
            let colors = (1..n - 1).chain([n]).collect();
            (colors, Box::new(move |i| if i == 1 { n } else if i == n { 1 } else { n - i }))
        }
        _ => return Err(bad()),
    };
    let duality = colors.iter().map(|&i| image(i)).collect();
    Ok((colors, duality))
}

/// `η_k` as a vertex map: the Lusztig involution of the classical
/// subalgebra `I ∖ {0, k}` (`I ∖ {0}` for `k = 0`).
pub fn eta_k(g: &CrystalGraph, k: usize) -> Result<Vec<usize>> {
    let (colors, duality) = if k == 0 {
        let (n, _) = family_rank(&g.context.family)?;
        let colors: Vec<usize> = g.indices.iter().copied().filter(|&i| i != 0).collect();
        let duality = match g.context.family {
            Family::A1 { .. } => colors.iter().map(|&i| n - i).collect(),
            _ => return Err(CrystalError::InvalidParameters("η_0 is only used in type A".into())),
        };
        (colors, duality)
    } else {
        eta_colors(&g.context.family, k)?
    };
    lusztig_involution(g, &colors, |i| duality[colors.iter().position(|&c| c == i).expect("color")])
}

fn context_label(g: &CrystalGraph) -> String {
    format!("{:?}", g.context.family)
}

fn compare(report: &mut Report, g: &CrystalGraph, v: usize, color: usize, rule: &str, lhs: Option<usize>, rhs: Option<usize>) {
    report.checks += 1;
    if lhs != rhs {
        let show = |x: Option<usize>| x.map_or("0".to_string(), |w| g.vertices[w].key.clone());
        report.violations.push(Violation {
            rule: rule.to_string(),
            vertex: g.vertices[v].key.clone(),
            color,
            detail: format!("{} vs {}", show(lhs), show(rhs)),
        });
    }
}

fn check(name: IdentityName, g: &CrystalGraph, body: impl FnOnce(&mut Report) -> Result<()>) -> Result<IdentityCheck> {
    let mut report = Report::default();
    body(&mut report)?;
    Ok(IdentityCheck { name, context: context_label(g), report })
}

/// `ẽ_0 = η ∘ f̃_r ∘ η` at every vertex, with `η = η_r`.
pub fn check_prop61(g: &CrystalGraph) -> Result<IdentityCheck> {
    let (_, r) = family_rank(&g.context.family)?;
    check(IdentityName::Prop61, g, |rep| {
        let eta = eta_k(g, r)?;
        for v in 0..g.len() {
            compare(rep, g, v, 0, "e0 = eta f_r eta", g.e(v, 0), g.f(eta[v], r).map(|w| eta[w]));
        }
        Ok(())
    })
}

/// `ẽ_0 = η_k ∘ f̃_k ∘ η_k` for every `1 <= k < n` (type A).
pub fn check_corollary_etak(g: &CrystalGraph) -> Result<IdentityCheck> {
    let (n, _) = type_a(g)?;
    check(IdentityName::CorollaryEtak, g, |rep| {
        for k in 1..n {
            let eta = eta_k(g, k)?;
            for v in 0..g.len() {
                compare(rep, g, v, k, "e0 = eta_k f_k eta_k", g.e(v, 0), g.f(eta[v], k).map(|w| eta[w]));
            }
        }
        Ok(())
    })
}

/// `η_0 ∘ ẽ_0 = f̃_0 ∘ η_0` (type A).
pub fn check_eta0_e0(g: &CrystalGraph) -> Result<IdentityCheck> {
    type_a(g)?;
    check(IdentityName::Eta0E0, g, |rep| {
        let eta = eta_k(g, 0)?;
        for v in 0..g.len() {
            compare(rep, g, v, 0, "eta0 e0 = f0 eta0", g.e(v, 0).map(|w| eta[w]), g.f(eta[v], 0));
        }
        Ok(())
    })
}

fn type_a(g: &CrystalGraph) -> Result<(usize, usize)> {
    match g.context.family {
        Family::A1 { n, r, .. } => Ok((n, r)),
        ref f => Err(CrystalError::InvalidParameters(format!("identity only applies to type A, got {f:?}"))),
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // a ∘ b
    b.iter().map(|&x| a[x]).collect()
}

/// `pr` on the matrix model, transported through the glued rectangle.
pub fn promotion_map(kr: &KrA, gen: &Generated<BiMatrix>) -> Result<Vec<usize>> {
    gen.elements
        .iter()
        .map(|m| {
            let u = promotion(&kr.a.glue_se(m, kr.s)?);
            let image = kr.a.unglue_se(&u)?;
            gen.vertex_of(&image).ok_or_else(|| CrystalError::Involution("promotion left the crystal".into()))
        })
        .collect()
}

/// `pr = η_1 η_0` and `pr^k = η_k η_0` for `1 <= k < n`.
pub fn check_promotion_etas(g: &CrystalGraph, pr: &[usize]) -> Result<Vec<IdentityCheck>> {
    let (n, _) = type_a(g)?;
    let eta0 = eta_k(g, 0)?;
    let mut first = Report::default();
    let mut all = Report::default();
    let mut power = pr.to_vec();
    for k in 1..n {
        let rhs = compose(&eta_k(g, k)?, &eta0);
        let target = if k == 1 { &mut first } else { &mut all };
        for v in 0..g.len() {
            compare(target, g, v, k, "pr^k = eta_k eta_0", Some(power[v]), Some(rhs[v]));
        }
        power = compose(pr, &power);
    }
    let mut rest = first.clone();
    rest.merge(all);
    Ok(vec![
        IdentityCheck { name: IdentityName::PrEqEta1Eta0, context: context_label(g), report: first },
        IdentityCheck { name: IdentityName::PrkEqEtakEta0, context: context_label(g), report: rest },
    ])
}

/// `pr^n = id`, and the rotation `η_1 η_0` has order exactly `n` whenever
/// it is not already trivial on a proper divisor.
pub fn check_pr_order(g: &CrystalGraph, pr: &[usize]) -> Result<IdentityCheck> {
    let (n, _) = type_a(g)?;
    check(IdentityName::PrOrder, g, |rep| {
        let rot = compose(&eta_k(g, 1)?, &eta_k(g, 0)?);
        let mut p = (0..g.len()).collect::<Vec<_>>();
        let mut q = p.clone();
        for _ in 0..n {
            p = compose(pr, &p);
            q = compose(&rot, &q);
        }
        for v in 0..g.len() {
            compare(rep, g, v, n, "pr^n = id", Some(p[v]), Some(v));
            compare(rep, g, v, n, "(eta_1 eta_0)^n = id", Some(q[v]), Some(v));
        }
        Ok(())
    })
}

/// A tableau `T` of shape `shape` over `[n]` with `pr^n(T) ≠ T`, if any.
pub fn pr_order_witness(shape: &Partition, n: u8) -> Option<Tableau> {
    enumerate_ssyt(shape, Alphabet::unbarred(n)).into_iter().find(|t| {
        let mut u = t.clone();
        for _ in 0..n {
            u = promotion(&u);
        }
        &u != t
    })
}

/// Every applicable identity on a KR graph.
pub fn check_all(g: &CrystalGraph, pr: Option<&[usize]>) -> Result<Vec<IdentityCheck>> {
    let mut out = vec![check_prop61(g)?];
    if let Family::A1 { .. } = g.context.family {
        out.push(check_corollary_etak(g)?);
        out.push(check_eta0_e0(g)?);
        if let Some(pr) = pr {
            out.extend(check_promotion_etas(g, pr)?);
            out.push(check_pr_order(g, pr)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_duality_swaps_segments() {
        let f = Family::A1 { n: 6, r: 2, s: 1 };
        let (colors, dual) = eta_colors(&f, 2).unwrap();
        assert_eq!(colors, vec![1, 3, 4, 5]);
        assert_eq!(dual, vec![1, 5, 4, 3]);
    }

    #[test]
    fn odd_spin_duality() {
        let f = Family::D1 { n: 5, r: 4, s: 1 };
        let (colors, dual) = eta_colors(&f, 4).unwrap();
        assert_eq!(colors, vec![1, 2, 3, 5]);
        assert_eq!(dual, vec![5, 3, 2, 1]);
    }
}
