//! Cell complexes pulled back from the partition map.
//!
//! A face of the triangulation whose vertices carry exactly the labels in
//! `S` is a product of simplices, one factor per label, and is a cell of
//! the complex for `S`. Its dimension is the sum over labels of
//! (multiplicity - 1). Cells are never realized geometrically; they are
//! addressed by face classes.

mod collapse;
mod link;

pub use collapse::{collapse, graph_genus, Collapse};
pub use link::{canonical_form, npc_check, rainbow_link, vertex_link, vertex_links, LinkComplex, NpcFailure, NpcReport};

use serde::Serialize;

use crate::complex::{FaceKey, FacePoset, Triangulation};
use crate::error::{Error, Result};
use crate::gf2::ChainComplex;
use crate::partition::VertexPartition;
use crate::perm;

/// A triangulation with a vertex partition and its face poset.
#[derive(Debug, Clone)]
pub struct Ambient {
    pub t: Triangulation,
    pub poset: FacePoset,
    pub partition: VertexPartition,
    /// Label of every corner, `facet * (n + 1) + corner`.
    corner_labels: Vec<u8>,
    /// Label support mask of every face class, per dimension.
    support: Vec<Vec<u32>>,
}

impl Ambient {
    pub fn new(t: &Triangulation, p: &VertexPartition) -> Result<Self> {
        let poset = FacePoset::new(t);
        Self::with_poset(t, poset, p)
    }

    pub fn with_poset(t: &Triangulation, poset: FacePoset, p: &VertexPartition) -> Result<Self> {
        let n = t.dim();
        let w = n + 1;
        if p.labels.len() != poset.counts()[0] {
            return Err(Error::Partition(format!(
                "{} labels for {} vertex classes",
                p.labels.len(),
                poset.counts()[0]
            )));
        }
        let corner_labels: Vec<u8> = (0..t.num_facets())
            .flat_map(|f| (0..w).map(move |c| (f, c)))
            .map(|(f, c)| p.labels[poset.vertex_class(f, c)])
            .collect();
        let support = (0..w)
            .map(|d| {
                poset
                    .classes(d)
                    .iter()
                    .map(|cl| {
                        cl.key
                            .corners()
                            .fold(0u32, |s, c| s | 1 << corner_labels[cl.key.facet as usize * w + c])
                    })
                    .collect()
            })
            .collect();
        Ok(Self { t: t.clone(), poset, partition: p.clone(), corner_labels, support })
    }

    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    pub fn k(&self) -> usize {
        self.partition.k
    }

    /// Mask of all labels.
    pub fn full(&self) -> u32 {
        (1u32 << (self.partition.k + 1)) - 1
    }

    #[inline]
    pub fn label(&self, facet: usize, corner: usize) -> u8 {
        self.corner_labels[facet * (self.dim() + 1) + corner]
    }

    pub fn support(&self, dim: usize, class: usize) -> u32 {
        self.support[dim][class]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    /// Canonical key of the underlying face class.
    pub key: FaceKey,
    /// Index of the face class within its face dimension.
    pub face: u32,
    /// Cells of one dimension lower, one per deletable corner of the
    /// canonical incarnation in ascending corner order.
    pub boundary: Vec<u32>,
    /// Corners deleted to obtain each boundary cell.
    pub deleted: Vec<u8>,
}

/// The cell complex of a label subset `S`: for `S` the full label set the
/// central submanifold, otherwise the spine of the corresponding
/// intersection of handlebodies.
#[derive(Debug, Clone)]
pub struct CellComplex<'a> {
    pub ambient: &'a Ambient,
    pub subset: u32,
    /// Cells by cell dimension, ordered by canonical key.
    pub cells: Vec<Vec<Cell>>,
    pub all_cubes: bool,
    /// Cell index of every face class (or `u32::MAX`), by face dimension.
    index: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellSummary {
    pub dim: Option<usize>,
    pub counts: Vec<usize>,
    pub euler: i64,
    pub connected: bool,
    pub closed: bool,
    pub betti: Vec<usize>,
    /// Only computed for closed complexes.
    pub orientable: Option<bool>,
    pub all_cubes: bool,
}

pub fn subset_mask(labels: &[usize]) -> u32 {
    labels.iter().fold(0, |m, &l| m | 1 << l)
}

pub fn subset_labels(mask: u32) -> Vec<usize> {
    (0..32).filter(|&l| mask >> l & 1 == 1).collect()
}

/// Extracts the cells of subset `S` (a nonzero label mask).
pub fn extract(amb: &Ambient, subset: u32) -> Result<CellComplex<'_>> {
    if subset == 0 {
        return Err(Error::Precondition("empty label subset".into()));
    }
    if subset & !amb.full() != 0 {
        return Err(Error::Precondition(format!("label subset {subset:#b} outside 0..={}", amb.k())));
    }
    let n = amb.dim();
    let w = n + 1;
    let s = subset.count_ones() as usize;
    let poset = &amb.poset;
    let mut cells: Vec<Vec<Cell>> = Vec::new();
    let mut index: Vec<Vec<u32>> = vec![Vec::new(); w];
    let mut all_cubes = true;
    for fd in s - 1..w {
        let cd = fd + 1 - s;
        let mut here = Vec::new();
        let mut idx = vec![u32::MAX; poset.counts()[fd]];
        for (j, cl) in poset.classes(fd).iter().enumerate() {
            if amb.support[fd][j] != subset {
                continue;
            }
            let f = cl.key.facet as usize;
            let mut mult = [0u8; 32];
            for c in cl.key.corners() {
                mult[amb.corner_labels[f * w + c] as usize] += 1;
            }
            if mult.iter().any(|&m| m > 2) {
                all_cubes = false;
            }
            let mut boundary = Vec::new();
            let mut deleted = Vec::new();
            if cd > 0 {
                for (pos, c) in cl.key.corners().enumerate() {
                    if mult[amb.corner_labels[f * w + c] as usize] >= 2 {
                        let b = index[fd - 1][cl.down[pos] as usize];
                        debug_assert_ne!(b, u32::MAX);
                        boundary.push(b);
                        deleted.push(c as u8);
                    }
                }
            }
            idx[j] = here.len() as u32;
            here.push(Cell { key: cl.key, face: j as u32, boundary, deleted });
        }
        index[fd] = idx;
        cells.push(here);
    }
    while cells.last().is_some_and(Vec::is_empty) {
        cells.pop();
    }
    Ok(CellComplex { ambient: amb, subset, cells, all_cubes, index })
}

impl CellComplex<'_> {
    pub fn labels(&self) -> Vec<usize> {
        subset_labels(self.subset)
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Top cell dimension, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.cells.len().checked_sub(1)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn euler(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Face dimension of cells of cell dimension `cd`.
    pub fn face_dim(&self, cd: usize) -> usize {
        cd + self.subset.count_ones() as usize - 1
    }

    /// Cell index of the face class `class` of face dimension `fd`.
    pub fn cell_of_face(&self, fd: usize, class: usize) -> Option<usize> {
        let i = *self.index.get(fd)?.get(class)?;
        (i != u32::MAX).then_some(i as usize)
    }

    /// Cell index of the face class containing an incarnation.
    pub fn cell_of(&self, facet: usize, mask: u32) -> Option<usize> {
        let fd = mask.count_ones() as usize - 1;
        self.cell_of_face(fd, self.ambient.poset.class_of(facet, mask))
    }

    /// Looks up a cell by the key of any incarnation of its face.
    pub fn find(&self, key: FaceKey) -> Result<(usize, usize)> {
        let id = self.ambient.poset.find(key)?;
        let i = self
            .cell_of_face(id.dim, id.index)
            .ok_or_else(|| Error::UnknownFace(format!("{key} is not a cell of this complex")))?;
        Ok((id.dim + 1 - self.subset.count_ones() as usize, i))
    }

    pub fn chain_complex(&self) -> ChainComplex {
        let mut cc = ChainComplex::new(self.counts());
        for (d, cells) in self.cells.iter().enumerate() {
            cc.boundaries[d] = cells.iter().map(|c| c.boundary.clone()).collect();
        }
        cc
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let nv = self.cells[0].len();
        let mut dsu = crate::complex::Dsu::new(nv);
        if let Some(edges) = self.cells.get(1) {
            for e in edges {
                if let [a, b] = e.boundary[..] {
                    dsu.union(a as usize, b as usize);
                }
            }
        }
        dsu.components(0..nv) == 1
    }

    /// Number of occurrences of every codimension-one cell in boundaries
    /// of top cells.
    fn top_incidences(&self) -> Vec<usize> {
        let Some(d) = self.dim() else { return Vec::new() };
        if d == 0 {
            return Vec::new();
        }
        let mut occ = vec![0usize; self.cells[d - 1].len()];
        for c in &self.cells[d] {
            for &b in &c.boundary {
                occ[b as usize] += 1;
            }
        }
        occ
    }

    /// Every codimension-one cell lies in exactly two top cells.
    pub fn is_closed(&self) -> bool {
        self.dim().is_some() && self.top_incidences().iter().all(|&o| o == 2)
    }

    /// Orientation sign of boundary entry `pos` of cell `(d, i)`.
    pub fn incidence_sign(&self, d: usize, i: usize, pos: usize) -> i8 {
        let amb = self.ambient;
        let cell = &self.cells[d][i];
        let f = cell.key.facet as usize;
        let x = cell.deleted[pos] as usize;
        let corners: Vec<usize> = cell.key.corners().collect();
        let lab = |c: usize| amb.label(f, c);
        let lx = lab(x);
        // dimensions of blocks with smaller label, and position of x in its block
        let mut prefix = 0usize;
        for l in subset_labels(self.subset) {
            if l as u8 >= lx {
                break;
            }
            let m = corners.iter().filter(|&&c| lab(c) as usize == l).count();
            prefix += m - 1;
        }
        let q = corners.iter().filter(|&&c| lab(c) == lx && c < x).count();
        let mut sign: i8 = if (prefix + q) % 2 == 0 { 1 } else { -1 };
        let sub = cell.key.mask & !(1 << x);
        for l in subset_labels(self.subset) {
            let img: Vec<usize> = corners
                .iter()
                .filter(|&&c| c != x && lab(c) as usize == l)
                .map(|&c| amb.poset.canonical_corner(f, sub, c))
                .collect();
            sign *= perm::order_sign(&img);
        }
        sign
    }

    /// Consistent orientation of top cells, if one exists. Requires a
    /// closed complex.
    pub fn orientation(&self) -> Option<Vec<i8>> {
        let d = self.dim()?;
        let top = &self.cells[d];
        if d == 0 {
            return Some(vec![1; top.len()]);
        }
        let mut by_face: Vec<Vec<(usize, i8)>> = vec![Vec::new(); self.cells[d - 1].len()];
        for (i, c) in top.iter().enumerate() {
            for (pos, &b) in c.boundary.iter().enumerate() {
                by_face[b as usize].push((i, self.incidence_sign(d, i, pos)));
            }
        }
        let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); top.len()];
        for inc in &by_face {
            let [(a, sa), (b, sb)] = inc[..] else { return None };
            if a == b {
                if sa == sb {
                    return None;
                }
                continue;
            }
            // eps_a * sa = -eps_b * sb
            let rel = -sa * sb;
            adj[a].push((b, rel));
            adj[b].push((a, rel));
        }
        let mut eps = vec![0i8; top.len()];
        for s in 0..top.len() {
            if eps[s] != 0 {
                continue;
            }
            eps[s] = 1;
            let mut stack = vec![s];
            while let Some(a) = stack.pop() {
                for &(b, rel) in &adj[a] {
                    let want = eps[a] * rel;
                    if eps[b] == 0 {
                        eps[b] = want;
                        stack.push(b);
                    } else if eps[b] != want {
                        return None;
                    }
                }
            }
        }
        Some(eps)
    }

    /// Labels with multiplicity two in the canonical incarnation of a cell,
    /// as (label, smaller corner, larger corner).
    pub fn doubled(&self, d: usize, i: usize) -> Vec<(u8, usize, usize)> {
        let cell = &self.cells[d][i];
        let f = cell.key.facet as usize;
        let mut out: Vec<(u8, usize, usize)> = Vec::new();
        for c in cell.key.corners() {
            let l = self.ambient.label(f, c);
            if let Some(e) = out.iter_mut().find(|e| e.0 == l) {
                e.2 = c;
            } else {
                out.push((l, c, usize::MAX));
            }
        }
        out.retain(|e| e.2 != usize::MAX);
        out.sort_unstable();
        out
    }
}

pub fn cell_summary(c: &CellComplex<'_>) -> CellSummary {
    let closed = c.is_closed();
    CellSummary {
        dim: c.dim(),
        counts: c.counts(),
        euler: c.euler(),
        connected: c.is_connected(),
        closed,
        betti: c.chain_complex().betti(),
        orientable: closed.then(|| c.orientation().is_some()),
        all_cubes: c.all_cubes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{parse_blocks, scheme_partition, Scheme};
    use crate::subdivide::barycentric;
    use crate::zoo;

    pub(crate) fn pairs(t: &Triangulation, blocks: &str) -> Ambient {
        let b = parse_blocks(blocks).unwrap();
        let p = scheme_partition(t, Scheme::Pairs(&b)).unwrap();
        Ambient::new(t, &p).unwrap()
    }

    #[test]
    fn doubled_four_simplex_central_complex() {
        let amb = pairs(&zoo::double_simplex(4).unwrap(), "0,1/2,3/4");
        let c = extract(&amb, amb.full()).unwrap();
        assert_eq!(c.counts(), vec![4, 4, 2]);
        let s = cell_summary(&c);
        assert_eq!(s.euler, 2);
        assert!(s.closed && s.connected);
        assert_eq!(s.orientable, Some(true));
        assert_eq!(s.betti, vec![1, 0, 1]);
    }

    #[test]
    fn doubled_five_simplex_cells() {
        let amb = pairs(&zoo::double_simplex(5).unwrap(), "0,1/2,3/4,5");
        let c = extract(&amb, amb.full()).unwrap();
        assert_eq!(c.counts(), vec![8, 12, 6, 2]);
        let s = cell_summary(&c);
        assert!(s.closed && s.connected && s.all_cubes);
        assert_eq!((s.euler, s.orientable), (0, Some(true)));
        let spine = extract(&amb, 0b011).unwrap();
        assert_eq!(spine.counts(), vec![4, 4, 1]);
        // every d-cell of a cube complex has 2d facets
        for (d, cells) in c.cells.iter().enumerate() {
            assert!(cells.iter().all(|cell| cell.boundary.len() == 2 * d));
        }
    }

    #[test]
    fn barycentric_central_surface() {
        let (b, car) = barycentric(&zoo::double_simplex(3).unwrap()).unwrap();
        let p = scheme_partition(&b, Scheme::OddBary(&car)).unwrap();
        let amb = Ambient::new(&b, &p).unwrap();
        let c = extract(&amb, amb.full()).unwrap();
        assert_eq!(c.counts()[2], 48);
        let s = cell_summary(&c);
        assert_eq!(s.euler, -4);
        assert!(s.closed && s.connected);
        assert_eq!(s.orientable, Some(true));
        let g0 = extract(&amb, 1).unwrap();
        assert_eq!(g0.counts(), vec![10, 12]);
    }

    #[test]
    fn projective_torus() {
        let amb = pairs(&zoo::cross_projective(3).unwrap(), "0,1/2,3");
        let c = extract(&amb, amb.full()).unwrap();
        let s = cell_summary(&c);
        assert_eq!((s.euler, s.orientable), (0, Some(true)));
        assert_eq!(s.betti, vec![1, 2, 1]);
        assert_eq!(c.counts()[2], 8);
    }

    #[test]
    fn rejects_bad_subsets() {
        let amb = pairs(&zoo::double_simplex(3).unwrap(), "0,1/2,3");
        assert!(extract(&amb, 0).is_err());
        assert!(extract(&amb, 0b100).is_err());
    }
}
