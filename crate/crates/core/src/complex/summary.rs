use serde::Serialize;

use super::{FaceId, FacePoset, Triangulation};
use crate::perm;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriSummary {
    pub dim: usize,
    pub counts: Vec<usize>,
    pub euler: i64,
    pub connected: bool,
    pub pseudo_manifold: bool,
    pub orientable: bool,
    /// Facet orientations (+1/-1) when orientable.
    pub orientation: Option<Vec<i8>>,
    pub even: bool,
    /// Degree of every codimension-two face class, in class order.
    pub codim2_degrees: Vec<usize>,
    pub betti: Vec<usize>,
}

/// Propagates facet orientations across gluings; a gluing by `pi` is
/// orientation-compatible when the neighbor gets sign `-sign(pi)` times
/// ours. Returns the assignment if it is consistent.
pub(crate) fn orient(t: &Triangulation) -> Option<Vec<i8>> {
    let w = t.dim() + 1;
    let m = t.num_facets();
    let mut eps = vec![0i8; m];
    for s in 0..m {
        if eps[s] != 0 {
            continue;
        }
        eps[s] = 1;
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            for i in 0..w {
                let g = t.target(f, i);
                let want = -eps[f] * perm::sign(t.perm(f, i));
                if eps[g] == 0 {
                    eps[g] = want;
                    stack.push(g);
                } else if eps[g] != want {
                    return None;
                }
            }
        }
    }
    Some(eps)
}

pub fn summary(t: &Triangulation) -> TriSummary {
    let poset = FacePoset::new(t);
    summary_with(t, &poset)
}

pub(crate) fn summary_with(t: &Triangulation, poset: &FacePoset) -> TriSummary {
    let n = t.dim();
    let counts = poset.counts();
    let pseudo_manifold = poset.classes(n - 1).iter().all(|c| c.incarnations.len() == 2);
    let codim2_degrees: Vec<usize> = if n >= 2 {
        (0..counts[n - 2]).map(|j| poset.degree(FaceId { dim: n - 2, index: j })).collect()
    } else {
        Vec::new()
    };
    let even = codim2_degrees.iter().all(|d| d % 2 == 0);
    let orientation = orient(t);
    TriSummary {
        dim: n,
        euler: poset.euler(),
        connected: t.is_connected(),
        pseudo_manifold,
        orientable: orientation.is_some(),
        orientation,
        even,
        codim2_degrees,
        betti: poset.chain_complex().betti(),
        counts,
    }
}
