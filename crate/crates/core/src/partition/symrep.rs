use std::collections::HashMap;

use serde::Serialize;

use crate::complex::{summary, Triangulation};
use crate::error::{Error, Result};
use crate::perm;

/// Monodromy of corner labels reflected across codimension-one faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymRep {
    pub base: usize,
    /// Label of every corner (`facet * (n + 1) + corner`) propagated along a
    /// breadth-first dual spanning tree from the base facet, whose corner
    /// `i` gets label `i`. A global labeling when `trivial`.
    pub labeling: Vec<u8>,
    /// Distinct non-identity permutations of labels read off non-tree dual
    /// edges, sorted.
    pub generators: Vec<Vec<u8>>,
    /// Orbits of the labels under the generated group.
    pub orbits: Vec<Vec<u8>>,
    pub trivial: bool,
}

fn require_even_connected(t: &Triangulation) -> Result<()> {
    let s = summary(t);
    if !s.even {
        return Err(Error::SymRepUndefined("triangulation is not even".into()));
    }
    if !s.connected {
        return Err(Error::SymRepUndefined("triangulation is disconnected".into()));
    }
    Ok(())
}

pub fn symmetric_representation(t: &Triangulation) -> Result<SymRep> {
    require_even_connected(t)?;
    let w = t.dim() + 1;
    let m = t.num_facets();
    // labels[f] maps corners of f to labels
    let mut labels: Vec<Option<Vec<u8>>> = vec![None; m];
    labels[0] = Some(perm::identity(w));
    let mut order = vec![0usize];
    let mut tree = vec![false; m * w];
    let mut head = 0;
    while head < order.len() {
        let f = order[head];
        head += 1;
        let lf = labels[f].clone().unwrap();
        for i in 0..w {
            let g = t.target(f, i);
            if labels[g].is_none() {
                let p = t.perm(f, i);
                labels[g] = Some(perm::compose(&lf, &perm::inverse(p)));
                tree[f * w + i] = true;
                tree[g * w + p[i] as usize] = true;
                order.push(g);
            }
        }
    }
    let mut generators = Vec::new();
    for f in 0..m {
        let lf = labels[f].as_ref().unwrap();
        let lf_inv = perm::inverse(lf);
        for i in 0..w {
            if tree[f * w + i] {
                continue;
            }
            let g = t.target(f, i);
            let lg = labels[g].as_ref().unwrap();
            let gen = perm::compose(lg, &perm::compose(t.perm(f, i), &lf_inv));
            if !perm::is_identity(&gen) {
                generators.push(gen);
            }
        }
    }
    generators.sort();
    generators.dedup();
    let mut dsu = crate::complex::Dsu::new(w);
    for g in &generators {
        for (x, &y) in g.iter().enumerate() {
            dsu.union(x, y as usize);
        }
    }
    let mut orbits: Vec<Vec<u8>> = Vec::new();
    let mut root_orbit: HashMap<usize, usize> = HashMap::new();
    for x in 0..w {
        let r = dsu.find(x);
        let o = *root_orbit.entry(r).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[o].push(x as u8);
    }
    let labeling = labels.into_iter().flat_map(Option::unwrap).collect();
    Ok(SymRep { base: 0, labeling, trivial: generators.is_empty(), generators, orbits })
}

/// The cover on which the reflected labeling becomes global: facets are the
/// pairs (facet, labeling) reachable from (0, identity), numbered in
/// breadth-first order. Cover corners carry their labels as coordinate
/// labels.
pub fn labeling_cover(t: &Triangulation) -> Result<Triangulation> {
    require_even_connected(t)?;
    let w = t.dim() + 1;
    let mut index: HashMap<(usize, Vec<u8>), usize> = HashMap::new();
    let mut nodes: Vec<(usize, Vec<u8>)> = vec![(0, perm::identity(w))];
    index.insert(nodes[0].clone(), 0);
    let mut targets = Vec::new();
    let mut perms = Vec::new();
    let mut head = 0;
    while head < nodes.len() {
        let (f, lf) = nodes[head].clone();
        head += 1;
        for i in 0..w {
            let g = t.target(f, i);
            let p = t.perm(f, i);
            let lg = perm::compose(&lf, &perm::inverse(p));
            let next = nodes.len();
            let gi = *index.entry((g, lg.clone())).or_insert_with(|| {
                nodes.push((g, lg));
                next
            });
            targets.push(gi as u32);
            perms.extend_from_slice(p);
        }
    }
    let mut cover = Triangulation::from_raw(t.dim(), targets, perms)?;
    cover.set_coordinate_labels(Some(nodes.into_iter().flat_map(|(_, l)| l).collect()));
    Ok(cover)
}

/// Blocks of labels `0..=n`.
pub type LabelPartition = Vec<Vec<u8>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub admissible: bool,
    /// Action of every generator on block indices (empty when not
    /// admissible).
    pub block_actions: Vec<Vec<usize>>,
    /// Connectivity of the graph of all edges whose ends lie in one block.
    pub union_graph_connected: bool,
    pub diagnostics: Vec<String>,
}

pub fn twisted_admissible(t: &Triangulation, blocks: &LabelPartition, r: &SymRep) -> Result<Admissibility> {
    let w = t.dim() + 1;
    let mut block_of = vec![usize::MAX; w];
    for (b, block) in blocks.iter().enumerate() {
        for &x in block {
            let s = block_of
                .get_mut(x as usize)
                .ok_or_else(|| Error::Partition(format!("label {x} outside 0..{w}")))?;
            if *s != usize::MAX {
                return Err(Error::Partition(format!("label {x} in two blocks")));
            }
            *s = b;
        }
    }
    if block_of.contains(&usize::MAX) {
        return Err(Error::Partition("blocks must cover every label".into()));
    }
    if r.labeling.len() != t.num_facets() * w {
        return Err(Error::Partition("representation does not belong to this triangulation".into()));
    }
    let mut diagnostics = Vec::new();
    let mut block_actions = Vec::new();
    let mut admissible = true;
    for g in &r.generators {
        let mut action = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter().enumerate() {
            let mut img: Vec<u8> = block.iter().map(|&x| g[x as usize]).collect();
            img.sort_unstable();
            let target = block_of[img[0] as usize];
            let mut expected = blocks[target].clone();
            expected.sort_unstable();
            if img != expected {
                admissible = false;
                diagnostics.push(format!("generator {g:?} maps block {b} across several blocks"));
                break;
            }
            action.push(target);
        }
        block_actions.push(action);
    }
    if !admissible {
        block_actions.clear();
    }
    let classes = t.vertex_classes();
    let mut dsu = crate::complex::Dsu::new(classes.count());
    for f in 0..t.num_facets() {
        for x in 0..w {
            for y in x + 1..w {
                let bx = block_of[r.labeling[f * w + x] as usize];
                let by = block_of[r.labeling[f * w + y] as usize];
                if bx == by {
                    dsu.union(classes.of(f, x), classes.of(f, y));
                }
            }
        }
    }
    let union_graph_connected = dsu.components(0..classes.count()) == 1;
    Ok(Admissibility { admissible, block_actions, union_graph_connected, diagnostics })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subdivide::barycentric;
    use crate::zoo;

    #[test]
    fn barycentric_subdivisions_are_trivial() {
        let (b, c) = barycentric(&zoo::cross_projective(3).unwrap()).unwrap();
        let r = symmetric_representation(&b).unwrap();
        assert!(r.trivial);
        // the global labeling is a relabeling of the carrier dimension
        let cl = b.vertex_classes();
        let w = 4;
        let mut seen: HashMap<u8, u8> = HashMap::new();
        for f in 0..b.num_facets() {
            for x in 0..w {
                let d = c.dims[cl.of(f, x)];
                assert_eq!(*seen.entry(r.labeling[f * w + x]).or_insert(d), d);
            }
        }
    }

    #[test]
    fn crosspolytope_labeling_is_coordinate() {
        let t = zoo::cross_sphere(3).unwrap();
        let r = symmetric_representation(&t).unwrap();
        assert!(r.trivial);
        assert_eq!(r.labeling.as_slice(), t.coordinate_labels().unwrap());
    }

    #[test]
    fn odd_degrees_are_rejected() {
        let t = zoo::simplex_boundary(3).unwrap();
        assert!(matches!(symmetric_representation(&t), Err(Error::SymRepUndefined(_))));
        assert!(labeling_cover(&t).is_err());
    }

    #[test]
    fn covers_of_trivial_representations() {
        let t = zoo::cross_projective(3).unwrap();
        assert_eq!(labeling_cover(&t).unwrap().num_facets(), 8);
        let r = symmetric_representation(&t).unwrap();
        let a = twisted_admissible(&t, &vec![vec![0, 1], vec![2, 3]], &r).unwrap();
        assert!(a.admissible && a.block_actions.is_empty());
    }
}
