use std::collections::VecDeque;

use crate::error::{CrystalError, Result};

use super::CrystalGraph;

/// The Lusztig involution of `g` regarded as a crystal of the classical
/// subalgebra with node set `colors`.
///
/// Each connected component (under `colors`) must have a unique highest and
/// a unique lowest weight vertex; the first is sent to the second and the map
/// is propagated by `η ∘ f̃_i = ẽ_{d(i)} ∘ η`. Every edge is then checked,
/// together with `η² = id`.
pub fn lusztig_involution(g: &CrystalGraph, colors: &[usize], duality: impl Fn(usize) -> usize) -> Result<Vec<usize>> {
    let err = |m: String| CrystalError::Involution(m);
    let mut eta = vec![usize::MAX; g.len()];
    for comp in g.components(colors) {
        let hw: Vec<usize> = comp.iter().copied().filter(|&v| colors.iter().all(|&i| g.e(v, i).is_none())).collect();
        let lw: Vec<usize> = comp.iter().copied().filter(|&v| colors.iter().all(|&i| g.f(v, i).is_none())).collect();
        if hw.len() != 1 || lw.len() != 1 {
            return Err(err(format!(
                "component of {} has {} highest and {} lowest weight vertices",
                g.vertices[comp[0]].key,
                hw.len(),
                lw.len()
            )));
        }
        eta[hw[0]] = lw[0];
        let mut queue = VecDeque::from([hw[0]]);
        while let Some(v) = queue.pop_front() {
            for &i in colors {
                let d = duality(i);
                let moves = [(g.f(v, i), g.e(eta[v], d)), (g.e(v, i), g.f(eta[v], d))];
                for (next, image) in moves {
                    let Some(next) = next else { continue };
                    let Some(image) = image else {
                        return Err(err(format!("no image for a neighbor of {} along color {i}", g.vertices[v].key)));
                    };
                    if eta[next] == usize::MAX {
                        eta[next] = image;
                        queue.push_back(next);
                    } else if eta[next] != image {
                        return Err(err(format!("inconsistent image of {}", g.vertices[next].key)));
                    }
                }
            }
        }
    }
    for v in 0..g.len() {
        if eta[v] == usize::MAX || eta[eta[v]] != v {
            return Err(err(format!("not an involution at {}", g.vertices[v].key)));
        }
        for &i in colors {
            let lhs = g.f(v, i).map(|w| eta[w]);
            let rhs = g.e(eta[v], duality(i));
            if lhs != rhs {
                return Err(err(format!("edge of color {i} at {} is not reversed", g.vertices[v].key)));
            }
        }
    }
    Ok(eta)
}
