use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use super::CellComplex;
use crate::complex::{FaceKey, FacePoset};
use crate::error::{Error, Result};
use crate::perm;

/// A finite complex given by vertex lists, kept with multiplicity so that
/// non-simplicial links remain visible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkComplex {
    pub num_vertices: usize,
    /// Simplices by dimension, each a sorted vertex list.
    pub simplices: Vec<Vec<Vec<usize>>>,
    pub simplicial: bool,
    pub issue: Option<String>,
}

impl LinkComplex {
    fn new(num_vertices: usize, mut simplices: Vec<Vec<Vec<usize>>>) -> Self {
        let mut issue = None;
        for (d, level) in simplices.iter_mut().enumerate() {
            for s in level.iter_mut() {
                s.sort_unstable();
            }
            level.sort();
            if issue.is_some() {
                continue;
            }
            if let Some(s) = level.iter().find(|s| s.windows(2).any(|w| w[0] == w[1])) {
                issue = Some(format!("{d}-simplex {s:?} repeats a vertex"));
            } else if let Some(w) = level.windows(2).find(|w| w[0] == w[1]) {
                issue = Some(format!("two {d}-simplices share the vertex set {:?}", w[0]));
            }
        }
        while simplices.last().is_some_and(Vec::is_empty) {
            simplices.pop();
        }
        Self { num_vertices, simplicial: issue.is_none(), issue, simplices }
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }
}

/// Link of a vertex of a cube complex: its `h`-simplices are the corners at
/// the vertex of the `(h+1)`-cubes. A link vertex is an edge end, named by
/// the edge and the canonical corner its end keeps.
pub fn vertex_link(c: &CellComplex<'_>, v: usize) -> Result<LinkComplex> {
    if v >= c.cells.first().map_or(0, Vec::len) {
        return Err(Error::UnknownFace(format!("vertex cell {v}")));
    }
    Ok(links(c, Some(v))?.pop().unwrap())
}

/// Links of every vertex, in vertex cell order.
pub fn vertex_links(c: &CellComplex<'_>) -> Result<Vec<LinkComplex>> {
    links(c, None)
}

/// One pass over the cells, sorting corners into the links of their
/// vertices.
fn links(c: &CellComplex<'_>, only: Option<usize>) -> Result<Vec<LinkComplex>> {
    if !c.all_cubes {
        return Err(Error::Precondition("vertex links need a cube complex".into()));
    }
    let nv = c.cells.first().map_or(0, Vec::len);
    let slots = if only.is_some() { 1 } else { nv };
    let levels = c.cells.len().saturating_sub(1);
    let poset = &c.ambient.poset;
    let vdim = c.face_dim(0);
    let mut ids: Vec<HashMap<(usize, usize), usize>> = vec![HashMap::new(); slots];
    let mut simplices: Vec<Vec<Vec<Vec<usize>>>> = vec![vec![Vec::new(); levels]; slots];
    for cd in 1..c.cells.len() {
        for i in 0..c.cells[cd].len() {
            let key = c.cells[cd][i].key;
            let f = key.facet as usize;
            let doubled = c.doubled(cd, i);
            for choice in 0u32..1 << doubled.len() {
                // keep[j], drop[j]: corners of doubled class j at this corner
                let mut r = key.mask;
                let mut keep = Vec::with_capacity(doubled.len());
                for (j, &(_, a, b)) in doubled.iter().enumerate() {
                    let (k, d) = if choice >> j & 1 == 0 { (a, b) } else { (b, a) };
                    r &= !(1 << d);
                    keep.push((k, d));
                }
                let Some(v) = c.cell_of_face(vdim, poset.class_of(f, r)) else {
                    continue;
                };
                let slot = match only {
                    Some(o) if o != v => continue,
                    Some(_) => 0,
                    None => v,
                };
                let ids = &mut ids[slot];
                let simplex: Vec<usize> = keep
                    .iter()
                    .map(|&(k, d)| {
                        let em = r | 1 << d;
                        let edge = poset.class_of(f, em);
                        let end = poset.canonical_corner(f, em, k);
                        let next = ids.len();
                        *ids.entry((edge, end)).or_insert(next)
                    })
                    .collect();
                simplices[slot][cd - 1].push(simplex);
            }
        }
    }
    Ok(ids.into_iter().zip(simplices).map(|(ids, s)| LinkComplex::new(ids.len(), s)).collect())
}

/// The ambient side of the link correspondence: the link of the face
/// carrying vertex cell `v`, restricted to simplices whose vertices have
/// distinct labels, all in the subset of `c`.
pub fn rainbow_link(c: &CellComplex<'_>, v: usize) -> Result<LinkComplex> {
    let amb = c.ambient;
    let key = c.cells.first().and_then(|l| l.get(v)).map(|cell| cell.key).ok_or_else(|| {
        Error::UnknownFace(format!("vertex cell {v}"))
    })?;
    let lk = crate::complex::link::link_with(&amb.t, &amb.poset, key)?;
    let lp = FacePoset::new(&lk.complex);
    let mut simplices = Vec::new();
    for d in 0..=lk.complex.dim() {
        let mut level = Vec::new();
        for cl in lp.classes(d) {
            let lf = cl.key.facet as usize;
            let (f, _) = lk.incarnations[lf];
            let mut seen = 0u32;
            let mut ok = true;
            for lc in cl.key.corners() {
                let l = amb.label(f as usize, lk.corners[lf][lc] as usize);
                if seen >> l & 1 == 1 || c.subset >> l & 1 == 0 {
                    ok = false;
                }
                seen |= 1 << l;
            }
            if ok {
                level.push(cl.key.corners().map(|lc| lp.vertex_class(lf, lc)).collect());
            }
        }
        simplices.push(level);
    }
    Ok(LinkComplex::new(lp.counts()[0], simplices))
}

/// Relabeling-invariant form of a link complex: the least simplex list over
/// vertex relabelings that respect an iterated degree refinement. `None`
/// when the search space after refinement is too large.
pub fn canonical_form(l: &LinkComplex) -> Option<Vec<Vec<Vec<usize>>>> {
    let nv = l.num_vertices;
    let mut color = vec![0usize; nv];
    loop {
        let mut sig: Vec<(usize, Vec<(usize, Vec<usize>)>)> =
            (0..nv).map(|x| (color[x], Vec::new())).collect();
        for (d, level) in l.simplices.iter().enumerate() {
            for s in level {
                for &x in s {
                    let mut others: Vec<usize> = s.iter().filter(|&&y| y != x).map(|&y| color[y]).collect();
                    others.sort_unstable();
                    sig[x].1.push((d, others));
                }
            }
        }
        for s in sig.iter_mut() {
            s.1.sort();
        }
        let mut distinct = sig.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sig.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = color.iter().collect::<HashSet<_>>().len();
        color = next;
        if color.iter().collect::<HashSet<_>>().len() == before {
            break;
        }
    }
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, &c) in color.iter().enumerate() {
        cells.entry(c).or_default().push(x);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let space: u128 = cells.iter().map(|c| perm::factorial(c.len())).product();
    if space > 2_000_000 {
        return None;
    }
    let mut best: Option<Vec<Vec<Vec<usize>>>> = None;
    let mut label = vec![0usize; nv];
    let mut offsets = Vec::new();
    let mut o = 0;
    for c in &cells {
        offsets.push(o);
        o += c.len();
    }
    let orders: Vec<Vec<Vec<u8>>> = cells.iter().map(|c| perm::all(c.len())).collect();
    let mut idx = vec![0usize; cells.len()];
    loop {
        for (ci, c) in cells.iter().enumerate() {
            for (pos, &x) in c.iter().enumerate() {
                label[x] = offsets[ci] + orders[ci][idx[ci]][pos] as usize;
            }
        }
        let form: Vec<Vec<Vec<usize>>> = l
            .simplices
            .iter()
            .map(|level| {
                let mut v: Vec<Vec<usize>> = level
                    .iter()
                    .map(|s| {
                        let mut t: Vec<usize> = s.iter().map(|&x| label[x]).collect();
                        t.sort_unstable();
                        t
                    })
                    .collect();
                v.sort();
                v
            })
            .collect();
        if best.as_ref().map_or(true, |b| form < *b) {
            best = Some(form);
        }
        // odometer over the per-cell orderings
        let mut ci = 0;
        loop {
            if ci == cells.len() {
                return best;
            }
            idx[ci] += 1;
            if idx[ci] < orders[ci].len() {
                break;
            }
            idx[ci] = 0;
            ci += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NpcFailure {
    pub vertex: FaceKey,
    pub reason: String,
    pub clique: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NpcReport {
    pub pass: bool,
    pub vertices_checked: usize,
    /// Histogram of link vertex counts (vertex degrees in the cubing).
    pub degrees: BTreeMap<usize, usize>,
    pub failure: Option<NpcFailure>,
}

/// Gromov's link condition: every vertex link is simplicial and flag.
pub fn npc_check(c: &CellComplex<'_>) -> Result<NpcReport> {
    if !c.all_cubes {
        return Err(Error::Precondition("NPC check needs a cube complex".into()));
    }
    let top = c.dim().unwrap_or(0);
    let nv = c.cells.first().map_or(0, Vec::len);
    let mut degrees = BTreeMap::new();
    let mut failure = None;
    for (v, l) in vertex_links(c)?.into_iter().enumerate() {
        *degrees.entry(l.num_vertices).or_insert(0) += 1;
        if failure.is_some() {
            continue;
        }
        let vertex = c.cells[0][v].key;
        if let Some(issue) = &l.issue {
            failure = Some(NpcFailure { vertex, reason: format!("link not simplicial: {issue}"), clique: Vec::new() });
            continue;
        }
        if let Some(clique) = non_flag_clique(&l, top + 1) {
            failure = Some(NpcFailure {
                vertex,
                reason: format!("clique of size {} spans no simplex", clique.len()),
                clique,
            });
        }
    }
    Ok(NpcReport { pass: failure.is_none(), vertices_checked: nv, degrees, failure })
}

/// First clique of size `3..=max` (in vertex order) that is not a simplex.
fn non_flag_clique(l: &LinkComplex, max: usize) -> Option<Vec<usize>> {
    let nv = l.num_vertices;
    let mut adj = vec![Vec::new(); nv];
    if let Some(edges) = l.simplices.get(1) {
        for e in edges {
            adj[e[0]].push(e[1]);
            adj[e[1]].push(e[0]);
        }
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    let faces: Vec<HashSet<&Vec<usize>>> = l.simplices.iter().map(|lv| lv.iter().collect()).collect();
    let is_simplex = |s: &Vec<usize>| faces.get(s.len() - 1).is_some_and(|f| f.contains(s));
    fn grow(
        clique: &mut Vec<usize>,
        cand: &[usize],
        max: usize,
        adj: &[Vec<usize>],
        is_simplex: &dyn Fn(&Vec<usize>) -> bool,
    ) -> Option<Vec<usize>> {
        if clique.len() >= 3 && !is_simplex(clique) {
            return Some(clique.clone());
        }
        if clique.len() == max {
            return None;
        }
        for (i, &x) in cand.iter().enumerate() {
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|y| adj[x].binary_search(y).is_ok()).collect();
            clique.push(x);
            if let Some(c) = grow(clique, &next, max, adj, is_simplex) {
                return Some(c);
            }
            clique.pop();
        }
        None
    }
    let all: Vec<usize> = (0..nv).collect();
    grow(&mut Vec::new(), &all, max, &adj, &is_simplex)
}

#[cfg(test)]
mod tests {
    use super::super::tests::pairs;
    use super::super::{extract, Ambient};
    use super::*;
    use crate::partition::{scheme_partition, Scheme};
    use crate::subdivide::barycentric;
    use crate::zoo;

    #[test]
    fn doubled_cube_links() {
        // two cubes glued along their boundary: every vertex link is two
        // triangles on the same three vertices
        let amb = pairs(&zoo::double_simplex(5).unwrap(), "0,1/2,3/4,5");
        let c = extract(&amb, amb.full()).unwrap();
        for v in 0..c.cells[0].len() {
            let l = vertex_link(&c, v).unwrap();
            assert_eq!(l.counts(), vec![3, 3, 2]);
            assert!(!l.simplicial);
        }
        assert!(!npc_check(&c).unwrap().pass);
    }

    #[test]
    fn bigon_links_fail() {
        let amb = pairs(&zoo::double_simplex(4).unwrap(), "0,1/2,3/4");
        let c = extract(&amb, amb.full()).unwrap();
        let l = vertex_link(&c, 0).unwrap();
        assert_eq!(l.counts(), vec![2, 2]);
        assert!(!l.simplicial);
        let r = npc_check(&c).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn barycentric_surface_degrees() {
        let (b, car) = barycentric(&zoo::double_simplex(3).unwrap()).unwrap();
        let p = scheme_partition(&b, Scheme::OddBary(&car)).unwrap();
        let amb = Ambient::new(&b, &p).unwrap();
        let c = extract(&amb, amb.full()).unwrap();
        let r = npc_check(&c).unwrap();
        assert!(r.pass);
        assert!(r.degrees.keys().all(|&d| d == 4 || d == 6));
    }

    #[test]
    fn flag_detection() {
        // empty triangle: three vertices, three edges, no 2-simplex
        let hollow = LinkComplex::new(3, vec![vec![vec![0], vec![1], vec![2]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]]);
        assert_eq!(non_flag_clique(&hollow, 3), Some(vec![0, 1, 2]));
        let full = LinkComplex::new(
            3,
            vec![vec![vec![0], vec![1], vec![2]], vec![vec![0, 1], vec![1, 2], vec![0, 2]], vec![vec![0, 1, 2]]],
        );
        assert_eq!(non_flag_clique(&full, 3), None);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = LinkComplex::new(4, vec![vec![vec![0], vec![1], vec![2], vec![3]], vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]]);
        let b = LinkComplex::new(4, vec![vec![vec![0], vec![1], vec![2], vec![3]], vec![vec![0, 2], vec![2, 1], vec![1, 3], vec![0, 3]]]);
        let path = LinkComplex::new(4, vec![vec![vec![0], vec![1], vec![2], vec![3]], vec![vec![0, 1], vec![1, 2], vec![2, 3]]]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&path));
    }

    #[test]
    fn links_match_ambient_links() {
        let amb = pairs(&zoo::double_simplex(5).unwrap(), "0,1/2,3/4,5");
        let c = extract(&amb, amb.full()).unwrap();
        for v in 0..c.cells[0].len() {
            let a = canonical_form(&vertex_link(&c, v).unwrap());
            let b = canonical_form(&rainbow_link(&c, v).unwrap());
            assert!(a.is_some());
            assert_eq!(a, b);
        }
    }
}
