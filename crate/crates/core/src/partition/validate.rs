use serde::Serialize;

use super::VertexPartition;
use crate::cells::{collapse, extract, subset_labels, Ambient};
use crate::complex::{Dsu, Triangulation};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassGraph {
    pub label: usize,
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetReport {
    pub labels: Vec<usize>,
    pub mask: u32,
    pub nonempty: bool,
    pub connected: bool,
    /// Top cell dimension before collapsing.
    pub dim: Option<usize>,
    /// Dimension after greedy collapsing.
    pub collapsed_dim: Option<usize>,
    pub counts: Vec<usize>,
    pub euler: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub k: usize,
    pub profile_ok: bool,
    /// Label multiplicities per facet.
    pub profiles: Vec<Vec<u8>>,
    pub class_graphs: Vec<ClassGraph>,
    /// Every nonempty label subset, ordered by size then mask.
    pub subsets: Vec<SubsetReport>,
    pub central_closed: bool,
    pub central_connected: bool,
    pub supports_multisection: bool,
    pub supports_generalized: bool,
    pub diagnostics: Vec<String>,
}

impl ValidationReport {
    pub fn subset(&self, labels: &[usize]) -> Option<&SubsetReport> {
        self.subsets.iter().find(|s| s.labels == labels)
    }
}

fn fmt_set(labels: &[usize]) -> String {
    let parts: Vec<String> = labels.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Largest spine dimension allowed for a proper intersection of `r`
/// handlebodies.
pub fn spine_bound(n: usize, k: usize, r: usize) -> usize {
    if n == 2 * k && r == k {
        r - 1
    } else {
        r
    }
}

pub fn validate(t: &Triangulation, p: &VertexPartition) -> Result<ValidationReport> {
    let amb = Ambient::new(t, p)?;
    Ok(validate_ambient(&amb))
}

pub fn validate_ambient(amb: &Ambient) -> ValidationReport {
    let t = &amb.t;
    let p = &amb.partition;
    let n = t.dim();
    let k = p.k;
    let mut diagnostics = Vec::new();

    let profiles = p.profiles(t);
    let profile_ok = profiles.iter().all(|pr| {
        if n % 2 == 1 {
            pr.iter().all(|&m| m == 2)
        } else {
            pr.iter().filter(|&&m| m == 1).count() == 1 && pr.iter().all(|&m| m == 1 || m == 2)
        }
    });
    if !profile_ok {
        let (f, pr) = profiles
            .iter()
            .enumerate()
            .find(|(_, pr)| {
                if n % 2 == 1 {
                    !pr.iter().all(|&m| m == 2)
                } else {
                    pr.iter().filter(|&&m| m == 1).count() != 1 || pr.iter().any(|&m| m != 1 && m != 2)
                }
            })
            .unwrap();
        diagnostics.push(format!("facet {f} has label multiplicities {pr:?}"));
    }

    let poset = &amb.poset;
    let mut class_graphs = Vec::with_capacity(k + 1);
    for l in 0..=k {
        let nv = poset.counts()[0];
        let mut dsu = Dsu::new(nv);
        let members: Vec<usize> = (0..nv).filter(|&v| p.labels[v] as usize == l).collect();
        let mut edges = 0;
        if n >= 1 {
            for (j, cl) in poset.classes(1).iter().enumerate() {
                if amb.support(1, j) == 1 << l {
                    edges += 1;
                    dsu.union(cl.down[0] as usize, cl.down[1] as usize);
                }
            }
        }
        let connected = !members.is_empty() && dsu.components(members.iter().copied()) == 1;
        if members.is_empty() {
            diagnostics.push(format!("class graph {l} empty"));
        } else if !connected {
            diagnostics.push(format!("class graph {l} disconnected"));
        }
        class_graphs.push(ClassGraph { label: l, vertices: members.len(), edges, connected });
    }

    let full = amb.full();
    let mut masks: Vec<u32> = (1..=full).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut subsets = Vec::with_capacity(masks.len());
    let mut central_closed = false;
    let mut central_connected = false;
    let mut multisection_spines = true;
    let mut generalized = t.is_connected();
    for mask in masks {
        let c = extract(amb, mask).expect("mask within range");
        let labels = subset_labels(mask);
        let r = labels.len();
        let nonempty = !c.is_empty();
        let connected = c.is_connected();
        let collapsed_dim = if nonempty { collapse(&c).dim } else { None };
        if mask == full {
            central_closed = nonempty && c.is_closed();
            central_connected = connected;
            if !nonempty {
                diagnostics.push("central complex empty".into());
                generalized = false;
            } else {
                if !central_closed {
                    diagnostics.push("central complex not closed".into());
                }
                if !connected {
                    diagnostics.push("central complex disconnected".into());
                }
            }
        } else {
            let set = fmt_set(&labels);
            if !nonempty {
                diagnostics.push(format!("subset {set} empty"));
                multisection_spines = false;
                generalized = false;
            } else {
                if !connected {
                    diagnostics.push(format!("subset {set} disconnected"));
                    multisection_spines = false;
                }
                let d = collapsed_dim.unwrap();
                let bound = spine_bound(n, k, r);
                if d > bound {
                    diagnostics.push(format!("subset {set} spine dimension {d} exceeds {bound}"));
                    multisection_spines = false;
                }
                if d + r + 1 > n {
                    generalized = false;
                }
            }
        }
        subsets.push(SubsetReport {
            labels,
            mask,
            nonempty,
            connected,
            dim: c.dim(),
            collapsed_dim,
            counts: c.counts(),
            euler: c.euler(),
        });
    }
    if n == 4 && k == 2 {
        link_conditions(amb, &mut diagnostics);
    }
    let supports_multisection = profile_ok
        && class_graphs.iter().all(|g| g.connected)
        && multisection_spines
        && central_closed
        && central_connected;
    ValidationReport {
        n,
        k,
        profile_ok,
        profiles,
        class_graphs,
        subsets,
        central_closed,
        central_connected,
        supports_multisection,
        supports_generalized: generalized,
        diagnostics,
    }
}

/// The two sufficient link conditions of the four-dimensional scheme, as
/// diagnostics. Every 3-face missing a label `h` should have a 2-face whose
/// link has all but one vertex labeled `h`, and every 2-face meeting all
/// three labels should have degree at least 4.
fn link_conditions(amb: &Ambient, diagnostics: &mut Vec<String>) {
    let poset = &amb.poset;
    // labels of the link vertices of every 2-face
    let link_labels: Vec<Vec<u8>> = (0..poset.counts()[2])
        .map(|j2| {
            let mut up = poset.classes(2)[j2].up.clone();
            up.sort_unstable();
            up.dedup();
            let mut out = Vec::new();
            for j3 in up {
                let cl = &poset.classes(3)[j3 as usize];
                let f = cl.key.facet as usize;
                for (pos, c) in cl.key.corners().enumerate() {
                    if cl.down[pos] as usize == j2 {
                        out.push(amb.label(f, c));
                    }
                }
            }
            out
        })
        .collect();
    for h in 0..3u8 {
        let mut failing = 0usize;
        for cl in poset.classes(3).iter() {
            let f = cl.key.facet as usize;
            if cl.key.corners().any(|c| amb.label(f, c) == h) {
                continue;
            }
            let ok = cl
                .down
                .iter()
                .any(|&j2| link_labels[j2 as usize].iter().filter(|&&l| l != h).count() == 1);
            if !ok {
                failing += 1;
            }
        }
        if failing > 0 {
            diagnostics.push(format!("link condition fails for label {h} on {failing} 3-faces"));
        }
    }
    let full = amb.full();
    let low = (0..poset.counts()[2])
        .filter(|&j| amb.support(2, j) == full && poset.classes(2)[j].incarnations.len() < 4)
        .count();
    if low > 0 {
        diagnostics.push(format!("degree condition fails on {low} 2-faces"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{parse_blocks, scheme_partition, Scheme};
    use crate::zoo;

    fn pairs_report(t: &Triangulation, blocks: &str) -> ValidationReport {
        let b = parse_blocks(blocks).unwrap();
        let p = scheme_partition(t, Scheme::Pairs(&b)).unwrap();
        validate(t, &p).unwrap()
    }

    #[test]
    fn doubled_spheres() {
        let r = pairs_report(&zoo::double_simplex(5).unwrap(), "0,1/2,3/4,5");
        assert!(r.supports_multisection && r.supports_generalized, "{:?}", r.diagnostics);
        let r = pairs_report(&zoo::double_simplex(4).unwrap(), "0,1/2,3/4");
        assert!(r.supports_multisection, "{:?}", r.diagnostics);
    }

    #[test]
    fn generalized_profile() {
        let r = pairs_report(&zoo::double_simplex(6).unwrap(), "0,1/2,3/4,5,6");
        assert!(!r.profile_ok && !r.supports_multisection);
        assert!(r.supports_generalized, "{:?}", r.diagnostics);
        let dims: Vec<_> = (0..3).map(|l| r.subset(&[l]).unwrap().dim.unwrap()).collect();
        assert_eq!(dims, vec![1, 1, 2]);
    }

    #[test]
    fn disconnected_class_graph() {
        let t = zoo::double_simplex(3).unwrap();
        let p = scheme_partition(&t, Scheme::Explicit { k: 1, labels: &[0, 1, 1, 0] }).unwrap();
        let r = validate(&t, &p).unwrap();
        assert!(r.supports_multisection);
        let p = scheme_partition(&t, Scheme::Explicit { k: 1, labels: &[0, 0, 0, 1] }).unwrap();
        let r = validate(&t, &p).unwrap();
        assert!(!r.supports_multisection);
    }
}
