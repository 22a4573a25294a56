//! Multisection-level invariants: handlebody genera, Euler identities,
//! fundamental group presentations of cube complexes and the maps induced
//! by inclusion.

mod pi1;

pub use pi1::{
    free_reduce, h1_onto, inclusion_epimorphism, inverse_word, parity_vector, pi1_presentation, Epimorphism,
    GroupPresentation, H1Onto, Word,
};

use serde::Serialize;

use crate::cells::{cell_summary, collapse, extract, npc_check, Ambient};
use crate::complex::Triangulation;
use crate::error::{Error, Result};
use crate::partition::{validate_ambient, VertexPartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpineCheck {
    pub labels: Vec<usize>,
    pub nonempty: bool,
    pub connected: bool,
    pub dim: Option<usize>,
    pub collapsed_dim: Option<usize>,
    /// Largest spine dimension a multisection allows.
    pub multisection_bound: usize,
    /// Largest spine dimension of codimension at least two.
    pub generalized_bound: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralSummary {
    pub dim: Option<usize>,
    pub counts: Vec<usize>,
    pub euler: i64,
    pub closed: bool,
    pub connected: bool,
    pub orientable: Option<bool>,
    pub betti: Vec<usize>,
    /// `None` when the complex has cells that are not cubes.
    pub npc: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceGenus {
    pub orientable: bool,
    /// Handle count when orientable, crosscap count otherwise.
    pub genus: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultisectionReport {
    pub n: usize,
    pub k: usize,
    pub ambient_euler: i64,
    /// Genus of every class graph, when its cells collapse to a connected
    /// graph.
    pub genera: Vec<Option<usize>>,
    /// Every proper nonempty label subset, ordered by size then mask.
    pub spines: Vec<SpineCheck>,
    pub central: CentralSummary,
    pub surface: Option<SurfaceGenus>,
    /// Alternating sum of the Euler characteristics of the subset complexes
    /// equals that of the triangulation.
    pub euler_inclusion_exclusion: bool,
    /// The trisection identity, for `n = 4` multisections.
    pub euler_trisection: Option<bool>,
    pub supports_multisection: bool,
    pub supports_generalized: bool,
    pub diagnostics: Vec<String>,
}

pub fn multisection_report(t: &Triangulation, p: &VertexPartition) -> Result<MultisectionReport> {
    let amb = Ambient::new(t, p)?;
    Ok(report_ambient(&amb))
}

pub fn report_ambient(amb: &Ambient) -> MultisectionReport {
    let n = amb.dim();
    let k = amb.k();
    let v = validate_ambient(amb);
    let full = amb.full();
    let ambient_euler = amb.poset.euler();

    let mut genera = Vec::with_capacity(k + 1);
    for l in 0..=k {
        let c = extract(amb, 1 << l).expect("label in range");
        let col = collapse(&c);
        let g = (c.is_connected() && col.dim.is_some_and(|d| d <= 1)).then(|| (1 - col.euler()) as usize);
        genera.push(g);
    }
    let mut spines = Vec::new();
    let mut alternating = 0i64;
    for s in &v.subsets {
        let r = s.labels.len();
        alternating += if r % 2 == 1 { s.euler } else { -s.euler };
        if s.mask == full {
            continue;
        }
        spines.push(SpineCheck {
            labels: s.labels.clone(),
            nonempty: s.nonempty,
            connected: s.connected,
            dim: s.dim,
            collapsed_dim: s.collapsed_dim,
            multisection_bound: crate::partition::spine_bound(n, k, r),
            generalized_bound: n.checked_sub(r + 1),
        });
    }
    let c = extract(amb, full).expect("full subset");
    let cs = cell_summary(&c);
    let npc = if c.all_cubes && !c.is_empty() { npc_check(&c).ok().map(|r| r.pass) } else { None };
    let central = CentralSummary {
        dim: cs.dim,
        counts: cs.counts,
        euler: cs.euler,
        closed: cs.closed,
        connected: cs.connected,
        orientable: cs.orientable,
        betti: cs.betti,
        npc,
    };
    let surface = (central.dim == Some(2) && central.closed && central.connected).then(|| {
        let orientable = central.orientable == Some(true);
        let genus = if orientable { (2 - central.euler) / 2 } else { 2 - central.euler };
        SurfaceGenus { orientable, genus }
    });
    let mut report = MultisectionReport {
        n,
        k,
        ambient_euler,
        genera,
        spines,
        central,
        surface,
        euler_inclusion_exclusion: alternating == ambient_euler,
        euler_trisection: None,
        supports_multisection: v.supports_multisection,
        supports_generalized: v.supports_generalized,
        diagnostics: v.diagnostics,
    };
    report.euler_trisection = euler_trisection_check(&report).ok().map(|t| t.holds);
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrisectionCheck {
    pub euler: i64,
    pub surface_genus: i64,
    pub genera: Vec<usize>,
    pub holds: bool,
    /// `(g, k)` when the three handlebodies have equal genus `k`.
    pub gk: Option<(i64, usize)>,
}

/// Checks `χ(M) = 2 + g(Σ) - g_0 - g_1 - g_2` for a four-dimensional
/// multisection.
pub fn euler_trisection_check(r: &MultisectionReport) -> Result<TrisectionCheck> {
    if r.n != 4 || r.k != 2 {
        return Err(Error::DimensionMismatch(format!("trisection identity needs n = 4, k = 2, got n = {}", r.n)));
    }
    if !r.supports_multisection {
        return Err(Error::Precondition("partition does not support a multisection".into()));
    }
    let genera: Vec<usize> = r
        .genera
        .iter()
        .map(|g| g.ok_or_else(|| Error::Precondition("handlebody genus undefined".into())))
        .collect::<Result<_>>()?;
    let surface = r.surface.ok_or_else(|| Error::Precondition("central complex is not a closed surface".into()))?;
    let g = surface.genus;
    let holds = r.ambient_euler == 2 + g - genera.iter().sum::<usize>() as i64;
    let gk = genera.iter().all(|&x| x == genera[0]).then(|| (g, genera[0]));
    Ok(TrisectionCheck { euler: r.ambient_euler, surface_genus: g, genera, holds, gk })
}

/// Surjectivity of the inclusion of the central complex on first homology
/// with GF(2) coefficients.
pub fn h1_onto_check(t: &Triangulation, p: &VertexPartition, class: usize) -> Result<bool> {
    let amb = Ambient::new(t, p)?;
    let v = validate_ambient(&amb);
    if !v.supports_multisection {
        return Err(Error::Precondition("partition does not support a multisection".into()));
    }
    let c = extract(&amb, amb.full())?;
    Ok(h1_onto(&c, class)?.onto)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{parse_blocks, scheme_partition, Scheme};
    use crate::subdivide::barycentric;
    use crate::zoo;

    fn pairs(t: &Triangulation, blocks: &str) -> VertexPartition {
        scheme_partition(t, Scheme::Pairs(&parse_blocks(blocks).unwrap())).unwrap()
    }

    #[test]
    fn doubled_simplex_trisection() {
        let t = zoo::double_simplex(4).unwrap();
        let r = multisection_report(&t, &pairs(&t, "0,1/2,3/4")).unwrap();
        assert!(r.supports_multisection);
        assert_eq!(r.genera, vec![Some(0); 3]);
        assert_eq!(r.surface, Some(SurfaceGenus { orientable: true, genus: 0 }));
        let c = euler_trisection_check(&r).unwrap();
        assert!(c.holds);
        assert_eq!(c.gk, Some((0, 0)));
        assert_eq!(r.euler_trisection, Some(true));
        assert!(r.euler_inclusion_exclusion);

        let mut bad = r.clone();
        bad.surface = Some(SurfaceGenus { orientable: true, genus: -1 });
        assert!(!euler_trisection_check(&bad).unwrap().holds);
    }

    #[test]
    fn projective_genera() {
        let t = zoo::cross_projective(3).unwrap();
        let r = multisection_report(&t, &pairs(&t, "0,1/2,3")).unwrap();
        assert_eq!(r.genera, vec![Some(1), Some(1)]);
        assert_eq!(r.central.euler, 0);
        assert_eq!(r.central.orientable, Some(true));
        assert_eq!(r.surface, Some(SurfaceGenus { orientable: true, genus: 1 }));
        assert!(matches!(euler_trisection_check(&r), Err(Error::DimensionMismatch(_))));

        let t = zoo::cross_projective(5).unwrap();
        let r = multisection_report(&t, &pairs(&t, "0,1/2,3/4,5")).unwrap();
        assert_eq!(r.genera, vec![Some(1); 3]);
        assert!(r.supports_multisection, "{:?}", r.diagnostics);
    }

    #[test]
    fn barycentric_three_sphere() {
        let (t, c) = barycentric(&zoo::double_simplex(3).unwrap()).unwrap();
        let p = scheme_partition(&t, Scheme::OddBary(&c)).unwrap();
        let r = multisection_report(&t, &p).unwrap();
        assert!(r.supports_multisection);
        assert_eq!(r.genera, vec![Some(3), Some(3)]);
        assert_eq!(r.surface.unwrap().genus, 3);
        assert_eq!(r.central.npc, Some(true));
        assert!(h1_onto_check(&t, &p, 0).unwrap());
    }

    #[test]
    fn reports_are_pure() {
        let t = zoo::cross_projective(3).unwrap();
        let p = pairs(&t, "0,1/2,3");
        assert_eq!(multisection_report(&t, &p).unwrap(), multisection_report(&t, &p).unwrap());
    }
}
