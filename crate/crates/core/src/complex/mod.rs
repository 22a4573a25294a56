//! Generalized triangulations: facets glued in pairs along codimension-one
//! faces by corner bijections.
//!
//! Slot `i` of facet `f` is the face of `f` opposite corner `i`. It is glued
//! to facet `target(f, i)` by the bijection `perm(f, i)` of `{0..n}` which
//! carries corners of `f` to corners of the target, with `perm(f, i)[i]` the
//! target's corner opposite the glued face.

mod canon;
mod cover;
pub mod io;
pub(crate) mod link;
pub(crate) mod poset;
mod summary;

pub use canon::isomorphism_signature;
pub use cover::{orientation_double_cover, DoubleCover};
pub use link::{link, Link};
pub use poset::{FaceClass, FaceId, FaceKey, FacePoset};
pub use summary::{summary, TriSummary};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm;

/// Largest supported dimension. The face poset indexes every corner subset
/// of every facet, so memory grows like `2^(n+1)` per facet.
pub const MAX_DIM: usize = 15;

/// One gluing slot as supplied to [`Triangulation::from_gluings`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gluing {
    pub target: usize,
    pub perm: Vec<u8>,
}

impl Gluing {
    pub fn new(target: usize, perm: Vec<u8>) -> Self {
        Self { target, perm }
    }
}

/// Global vertex identifiers attached to the corners of a vertex-format
/// triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexIds {
    /// Identifier of each vertex.
    pub names: Vec<String>,
    /// Vertex index per corner, `facet * (n + 1) + corner`.
    pub corners: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    dim: usize,
    targets: Vec<u32>,
    perms: Vec<u8>,
    vertices: Option<VertexIds>,
    coords: Option<Vec<u8>>,
}

impl Triangulation {
    /// Builds a triangulation from explicit gluing slots, validating the
    /// gluing involution, closedness and the no-self-face rule.
    pub fn from_gluings(dim: usize, facets: Vec<Vec<Gluing>>) -> Result<Self> {
        check_dim(dim)?;
        let width = dim + 1;
        let mut targets = Vec::with_capacity(facets.len() * width);
        let mut perms = Vec::with_capacity(facets.len() * width * width);
        for (f, slots) in facets.into_iter().enumerate() {
            if slots.len() != width {
                return Err(Error::DimensionMismatch(format!(
                    "facet {f} has {} slots, expected {width}",
                    slots.len()
                )));
            }
            for (i, g) in slots.into_iter().enumerate() {
                if g.perm.len() != width || !perm::is_permutation(&g.perm) {
                    return Err(Error::BadPermutation { facet: f, slot: i });
                }
                targets.push(g.target as u32);
                perms.extend_from_slice(&g.perm);
            }
        }
        Self::from_raw(dim, targets, perms)
    }

    pub(crate) fn from_raw(dim: usize, targets: Vec<u32>, perms: Vec<u8>) -> Result<Self> {
        let t = Self { dim, targets, perms, vertices: None, coords: None };
        t.validate()?;
        Ok(t)
    }

    /// Builds a simplicial triangulation from facets given as vertex
    /// identifier tuples; gluings are inferred by matching codimension-one
    /// faces on their vertex sets.
    pub fn from_vertex_facets<S: AsRef<str>>(dim: usize, facets: &[Vec<S>]) -> Result<Self> {
        let mut index: HashMap<&str, u32> = HashMap::new();
        let mut names = Vec::new();
        let mut corners = Vec::with_capacity(facets.len() * (dim + 1));
        for (f, facet) in facets.iter().enumerate() {
            if facet.len() != dim + 1 {
                return Err(Error::DimensionMismatch(format!(
                    "facet {f} has {} vertices, expected {}",
                    facet.len(),
                    dim + 1
                )));
            }
            for v in facet {
                let v = v.as_ref();
                let id = *index.entry(v).or_insert_with(|| {
                    names.push(v.to_string());
                    (names.len() - 1) as u32
                });
                corners.push(id);
            }
        }
        Self::from_vertex_indices(dim, VertexIds { names, corners })
    }

    pub fn from_vertex_indices(dim: usize, vertices: VertexIds) -> Result<Self> {
        check_dim(dim)?;
        let width = dim + 1;
        if vertices.corners.len() % width != 0 {
            return Err(Error::DimensionMismatch("corner list not a multiple of n+1".into()));
        }
        let m = vertices.corners.len() / width;
        for f in 0..m {
            let c = &vertices.corners[f * width..(f + 1) * width];
            for i in 0..width {
                if c[i + 1..].contains(&c[i]) {
                    return Err(Error::DegenerateFacet {
                        facet: f,
                        vertex: vertices.names[c[i] as usize].clone(),
                    });
                }
            }
        }
        let mut ridges: HashMap<Vec<u32>, Vec<(usize, usize)>> = HashMap::new();
        for f in 0..m {
            let c = &vertices.corners[f * width..(f + 1) * width];
            for i in 0..width {
                let mut key: Vec<u32> =
                    c.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                key.sort_unstable();
                ridges.entry(key).or_default().push((f, i));
            }
        }
        if let Some(sharers) = ridges.values().filter(|s| s.len() > 2).min() {
            let (facet, slot) = sharers[0];
            return Err(Error::NonManifoldRidge { facet, slot, count: sharers.len() });
        }
        let mut targets = vec![u32::MAX; m * width];
        let mut perms = vec![0u8; m * width * width];
        for f in 0..m {
            let cf = &vertices.corners[f * width..(f + 1) * width];
            for i in 0..width {
                let mut key: Vec<u32> =
                    cf.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                key.sort_unstable();
                let sharers = &ridges[&key];
                if sharers.len() > 2 {
                    return Err(Error::NonManifoldRidge { facet: f, slot: i, count: sharers.len() });
                }
                let Some(&(t, j)) = sharers.iter().find(|&&(g, s)| (g, s) != (f, i)) else {
                    return Err(Error::UngluedSlot { facet: f, slot: i });
                };
                let ct = &vertices.corners[t * width..(t + 1) * width];
                targets[f * width + i] = t as u32;
                let p = &mut perms[(f * width + i) * width..(f * width + i + 1) * width];
                for x in 0..width {
                    p[x] = if x == i {
                        j as u8
                    } else {
                        ct.iter().position(|&v| v == cf[x]).unwrap() as u8
                    };
                }
            }
        }
        let mut t = Self::from_raw(dim, targets, perms)?;
        t.vertices = Some(vertices);
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let width = self.dim + 1;
        if self.targets.len() % width != 0 || self.perms.len() != self.targets.len() * width {
            return Err(Error::DimensionMismatch("inconsistent gluing arrays".into()));
        }
        let m = self.num_facets();
        if m == 0 {
            return Err(Error::Invalid("triangulation has no facets".into()));
        }
        for f in 0..m {
            for i in 0..width {
                let t = self.targets[f * width + i] as usize;
                if t >= m {
                    return Err(Error::UngluedSlot { facet: f, slot: i });
                }
                let p = self.perm(f, i);
                if !perm::is_permutation(p) {
                    return Err(Error::BadPermutation { facet: f, slot: i });
                }
                let j = p[i] as usize;
                if t == f && j == i {
                    return Err(Error::SelfIdentifiedFace { facet: f, slot: i });
                }
                if self.target(t, j) != f || perm::compose(self.perm(t, j), p) != perm::identity(width)
                {
                    return Err(Error::InvolutionViolation { facet: f, slot: i });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_facets(&self) -> usize {
        self.targets.len() / (self.dim + 1)
    }

    #[inline]
    pub fn target(&self, facet: usize, slot: usize) -> usize {
        self.targets[facet * (self.dim + 1) + slot] as usize
    }

    #[inline]
    pub fn perm(&self, facet: usize, slot: usize) -> &[u8] {
        let w = self.dim + 1;
        let start = (facet * w + slot) * w;
        &self.perms[start..start + w]
    }

    pub fn gluing(&self, facet: usize, slot: usize) -> Gluing {
        Gluing::new(self.target(facet, slot), self.perm(facet, slot).to_vec())
    }

    pub fn vertex_ids(&self) -> Option<&VertexIds> {
        self.vertices.as_ref()
    }

    /// Vertex identifier of a corner, when the triangulation is in vertex
    /// format.
    pub fn corner_name(&self, facet: usize, corner: usize) -> Option<&str> {
        let v = self.vertices.as_ref()?;
        let id = v.corners[facet * (self.dim + 1) + corner];
        Some(v.names[id as usize].as_str())
    }

    pub fn is_vertex_format(&self) -> bool {
        self.vertices.is_some()
    }

    /// Coordinate label per corner (`facet * (n + 1) + corner`), when the
    /// generator attached one.
    pub fn coordinate_labels(&self) -> Option<&[u8]> {
        self.coords.as_deref()
    }

    pub(crate) fn set_vertex_ids(&mut self, ids: Option<VertexIds>) {
        self.vertices = ids;
    }

    pub(crate) fn set_coordinate_labels(&mut self, coords: Option<Vec<u8>>) {
        self.coords = coords;
    }

    /// Drops vertex identifiers, keeping only the gluing data.
    pub fn into_gluing_format(mut self) -> Self {
        self.vertices = None;
        self
    }

    /// Vertex classes by union-find over the gluing maps.
    pub fn vertex_classes(&self) -> VertexClasses {
        let w = self.dim + 1;
        let m = self.num_facets();
        let mut dsu = Dsu::new(m * w);
        for f in 0..m {
            for i in 0..w {
                let t = self.target(f, i);
                let p = self.perm(f, i);
                for c in (0..w).filter(|&c| c != i) {
                    dsu.union(f * w + c, t * w + p[c] as usize);
                }
            }
        }
        let mut class_of = vec![u32::MAX; m * w];
        let mut root_class: HashMap<usize, u32> = HashMap::new();
        let mut keys = Vec::new();
        for idx in 0..m * w {
            let r = dsu.find(idx);
            let c = *root_class.entry(r).or_insert_with(|| {
                keys.push(((idx / w) as u32, (idx % w) as u8));
                (keys.len() - 1) as u32
            });
            class_of[idx] = c;
        }
        VertexClasses { width: w, class_of, keys }
    }

    /// Dual graph: one node per facet, one edge per codimension-one face.
    pub fn dual_graph(&self) -> DualGraph {
        let w = self.dim + 1;
        let m = self.num_facets();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); m];
        for f in 0..m {
            for i in 0..w {
                let t = self.target(f, i);
                let j = self.perm(f, i)[i] as usize;
                adjacency[f].push(t);
                if (f, i) < (t, j) {
                    edges.push(DualEdge { facet: f, slot: i, target: t, target_slot: j });
                }
            }
        }
        let mut color = vec![u8::MAX; m];
        let mut bipartite = true;
        let mut components = 0;
        for s in 0..m {
            if color[s] != u8::MAX {
                continue;
            }
            components += 1;
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(f) = stack.pop() {
                for &t in &adjacency[f] {
                    if color[t] == u8::MAX {
                        color[t] = 1 - color[f];
                        stack.push(t);
                    } else if color[t] == color[f] {
                        bipartite = false;
                    }
                }
            }
        }
        DualGraph {
            adjacency,
            edges,
            connected: components == 1,
            coloring: bipartite.then_some(color),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.dual_graph().connected
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::DimensionMismatch(format!("dimension {dim} outside 1..={MAX_DIM}")));
    }
    Ok(())
}

/// Vertex classes of a triangulation. Classes are numbered in order of their
/// canonical key, the least `(facet, corner)` incarnation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClasses {
    width: usize,
    class_of: Vec<u32>,
    keys: Vec<(u32, u8)>,
}

impl VertexClasses {
    pub fn count(&self) -> usize {
        self.keys.len()
    }

    #[inline]
    pub fn of(&self, facet: usize, corner: usize) -> usize {
        self.class_of[facet * self.width + corner] as usize
    }

    /// Canonical `(facet, corner)` incarnation of a class.
    pub fn key(&self, class: usize) -> (usize, usize) {
        let (f, c) = self.keys[class];
        (f as usize, c as usize)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualEdge {
    pub facet: usize,
    pub slot: usize,
    pub target: usize,
    pub target_slot: usize,
}

#[derive(Debug, Clone)]
pub struct DualGraph {
    /// Neighbor facet per slot, with multiplicity.
    pub adjacency: Vec<Vec<usize>>,
    pub edges: Vec<DualEdge>,
    pub connected: bool,
    /// Two-coloring `V0/V1` when the graph is bipartite.
    pub coloring: Option<Vec<u8>>,
}

impl DualGraph {
    pub fn is_bipartite(&self) -> bool {
        self.coloring.is_some()
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct Dsu {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = self.parent[x] as usize;
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
        true
    }

    pub fn components(&mut self, members: impl IntoIterator<Item = usize>) -> usize {
        let mut roots: Vec<usize> = members.into_iter().map(|x| self.find(x)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }
}
