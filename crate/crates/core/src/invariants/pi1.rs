use std::collections::VecDeque;

use serde::Serialize;

use crate::cells::{extract, CellComplex};
use crate::error::{Error, Result};
use crate::gf2;

/// A word in the free group: letter `g + 1` is generator `g`, `-(g + 1)`
/// its inverse.
pub type Word = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: usize,
    /// Freely reduced, nonempty boundary words of the 2-cells.
    pub relators: Vec<Word>,
    /// Edge cell of every generator.
    pub generator_edges: Vec<usize>,
    pub provenance: String,
}

impl GroupPresentation {
    /// Rank of the abelianization tensored with GF(2).
    pub fn abelian_rank_gf2(&self) -> usize {
        let rel_rank = gf2::rank(self.generators, self.relators.iter().map(|w| parity_vector(w)));
        self.generators - rel_rank
    }
}

pub fn free_reduce(word: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn inverse_word(word: &[i32]) -> Word {
    word.iter().rev().map(|x| -x).collect()
}

/// Generators occurring an odd number of times.
pub fn parity_vector(word: &[i32]) -> Vec<u32> {
    gf2::normalize(word.iter().map(|x| x.unsigned_abs() - 1).collect())
}

/// Endpoints of an edge cell, oriented from the end at the smaller
/// canonical corner.
pub(crate) fn edge_ends(c: &CellComplex<'_>, e: usize) -> (usize, usize) {
    let b = &c.cells[1][e].boundary;
    (b[1] as usize, b[0] as usize)
}

/// Breadth-first spanning forest of the 1-skeleton. Roots are taken in
/// cell order, edges are scanned in cell order.
pub(crate) struct Forest {
    /// Tree edge reaching every vertex and whether it is traversed forward.
    pub parent: Vec<Option<(usize, bool)>>,
    pub order: Vec<usize>,
    pub tree: Vec<bool>,
    pub components: usize,
}

pub(crate) fn forest(c: &CellComplex<'_>) -> Forest {
    let nv = c.cells.first().map_or(0, Vec::len);
    let ne = c.cells.get(1).map_or(0, Vec::len);
    let mut adj: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); nv];
    for e in 0..ne {
        let (a, b) = edge_ends(c, e);
        adj[a].push((e, b, true));
        if a != b {
            adj[b].push((e, a, false));
        }
    }
    let mut seen = vec![false; nv];
    let mut parent = vec![None; nv];
    let mut tree = vec![false; ne];
    let mut order = Vec::with_capacity(nv);
    let mut components = 0;
    for root in 0..nv {
        if seen[root] {
            continue;
        }
        components += 1;
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(e, u, fwd) in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some((e, fwd));
                    tree[e] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    Forest { parent, order, tree, components }
}

/// Signed traversals of the boundary of a square cell, as
/// `(edge cell, forward)`.
pub(crate) fn square_boundary(c: &CellComplex<'_>, i: usize) -> Result<[(usize, bool); 4]> {
    let cell = &c.cells[2][i];
    let d = c.doubled(2, i);
    if d.len() != 2 {
        return Err(Error::Precondition(format!("cell {} is not a square", cell.key)));
    }
    let f = cell.key.facet as usize;
    let mask = cell.key.mask;
    let (a1, a2) = (d[0].1, d[0].2);
    let (b1, b2) = (d[1].1, d[1].2);
    // (deleted corner, from, to)
    let steps = [(b2, a1, a2), (a1, b1, b2), (b1, a2, a1), (a2, b2, b1)];
    let poset = &c.ambient.poset;
    let mut out = [(0, true); 4];
    for (slot, &(del, from, to)) in out.iter_mut().zip(&steps) {
        let m = mask & !(1 << del);
        let e = c
            .cell_of(f, m)
            .ok_or_else(|| Error::Invalid(format!("edge of square {} missing", cell.key)))?;
        let fwd = poset.canonical_corner(f, m, from) < poset.canonical_corner(f, m, to);
        *slot = (e, fwd);
    }
    Ok(out)
}

fn generator_index(f: &Forest) -> Vec<Option<usize>> {
    let mut next = 0;
    f.tree
        .iter()
        .map(|&t| {
            (!t).then(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

fn letter(gen: &[Option<usize>], e: usize, fwd: bool) -> Option<i32> {
    gen[e].map(|g| if fwd { g as i32 + 1 } else { -(g as i32 + 1) })
}

/// Edge-path presentation of the fundamental group of a connected cube
/// complex, based at its first vertex.
pub fn pi1_presentation(c: &CellComplex<'_>) -> Result<GroupPresentation> {
    if c.is_empty() {
        return Err(Error::Precondition("empty complex".into()));
    }
    if !c.all_cubes {
        return Err(Error::Precondition("presentation needs a cube complex".into()));
    }
    let f = forest(c);
    if f.components != 1 {
        return Err(Error::Precondition(format!("complex has {} components", f.components)));
    }
    let gen = generator_index(&f);
    let generator_edges: Vec<usize> = (0..gen.len()).filter(|&e| gen[e].is_some()).collect();
    let mut relators = Vec::new();
    for i in 0..c.cells.get(2).map_or(0, Vec::len) {
        let word: Word = square_boundary(c, i)?
            .iter()
            .filter_map(|&(e, fwd)| letter(&gen, e, fwd))
            .collect();
        let word = free_reduce(&word);
        if !word.is_empty() {
            relators.push(word);
        }
    }
    let root = c.cells[0][0].key;
    Ok(GroupPresentation {
        generators: generator_edges.len(),
        relators,
        generator_edges,
        provenance: format!(
            "cells of label subset {:?}; breadth-first tree rooted at vertex cell {root}",
            c.labels()
        ),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Epimorphism {
    pub class: usize,
    pub source: GroupPresentation,
    /// Free rank of the class graph.
    pub target_rank: usize,
    /// Image of every source generator in the free group of the class graph.
    pub images: Vec<Word>,
    /// Every source relator maps to a word reducing to the identity.
    pub relators_die: bool,
    /// Rank of the induced map on GF(2) abelianizations.
    pub abelian_rank: usize,
    pub surjective_gf2: bool,
}

/// The map from the fundamental group of the central complex to the free
/// group of class graph `class`, induced by sending every central vertex to
/// its vertex of that class.
pub fn inclusion_epimorphism(central: &CellComplex<'_>, class: usize) -> Result<Epimorphism> {
    let amb = central.ambient;
    if central.subset != amb.full() {
        return Err(Error::Precondition("source must be the central complex".into()));
    }
    if class > amb.k() {
        return Err(Error::Precondition(format!("class {class} outside 0..={}", amb.k())));
    }
    let source = pi1_presentation(central)?;
    let graph = extract(amb, 1 << class)?;
    if graph.dim().is_some_and(|d| d > 1) {
        return Err(Error::Precondition(format!("class {class} spans more than a graph")));
    }
    let gf = forest(&graph);
    if gf.components != 1 {
        return Err(Error::Precondition(format!("class graph {class} disconnected")));
    }
    let ggen = generator_index(&gf);
    let target_rank = ggen.iter().flatten().count();
    let poset = &amb.poset;

    // image of every central edge
    let ne = central.cells.get(1).map_or(0, Vec::len);
    let mut edge_image: Vec<Word> = Vec::with_capacity(ne);
    for e in 0..ne {
        let cell = &central.cells[1][e];
        let (l, e1, e2) = central.doubled(1, e)[0];
        let mut w = Vec::new();
        if l as usize == class {
            let f = cell.key.facet as usize;
            let m = (1 << e1) | (1 << e2);
            let ge = graph
                .cell_of(f, m)
                .ok_or_else(|| Error::Invalid(format!("edge {f}:{e1},{e2} missing from class graph")))?;
            let fwd = poset.canonical_corner(f, m, e1) < poset.canonical_corner(f, m, e2);
            w.extend(letter(&ggen, ge, fwd));
        }
        edge_image.push(w);
    }
    // image of the tree path from the base vertex to every vertex
    let sf = forest(central);
    let mut path: Vec<Word> = vec![Vec::new(); sf.parent.len()];
    for &v in &sf.order {
        if let Some((e, fwd)) = sf.parent[v] {
            let (a, b) = edge_ends(central, e);
            let (prev, step) = if fwd { (a, edge_image[e].clone()) } else { (b, inverse_word(&edge_image[e])) };
            let mut w = path[prev].clone();
            w.extend(step);
            path[v] = free_reduce(&w);
        }
    }
    let images: Vec<Word> = source
        .generator_edges
        .iter()
        .map(|&e| {
            let (a, b) = edge_ends(central, e);
            let mut w = path[a].clone();
            w.extend_from_slice(&edge_image[e]);
            w.extend(inverse_word(&path[b]));
            free_reduce(&w)
        })
        .collect();
    let relators_die = source.relators.iter().all(|r| {
        let w: Word = r
            .iter()
            .flat_map(|&x| {
                let img = &images[x.unsigned_abs() as usize - 1];
                if x > 0 {
                    img.clone()
                } else {
                    inverse_word(img)
                }
            })
            .collect();
        free_reduce(&w).is_empty()
    });
    let abelian_rank = gf2::rank(target_rank, images.iter().map(|w| parity_vector(w)));
    Ok(Epimorphism {
        class,
        source,
        target_rank,
        images,
        relators_die,
        abelian_rank,
        surjective_gf2: abelian_rank == target_rank,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H1Onto {
    pub class: usize,
    /// First GF(2) Betti number of the ambient triangulation.
    pub ambient_rank: usize,
    /// Rank of the image of the first homology of the central complex.
    pub image_rank: usize,
    pub onto: bool,
}

/// Whether the inclusion of the central complex induces a surjection on
/// first homology with GF(2) coefficients. Central vertices go to their
/// vertex of label `class`; central edges doubling `class` go to the
/// ambient edge between the two vertices of that label, others collapse.
pub fn h1_onto(central: &CellComplex<'_>, class: usize) -> Result<H1Onto> {
    let amb = central.ambient;
    if central.subset != amb.full() {
        return Err(Error::Precondition("source must be the central complex".into()));
    }
    if class > amb.k() {
        return Err(Error::Precondition(format!("class {class} outside 0..={}", amb.k())));
    }
    let poset = &amb.poset;
    let cc = poset.chain_complex();
    if cc.counts.len() < 2 {
        return Err(Error::Precondition("ambient dimension below 1".into()));
    }
    let ambient_rank = cc.betti()[1];
    let ne = central.cells.get(1).map_or(0, Vec::len);
    let edge_image: Vec<Vec<u32>> = (0..ne)
        .map(|e| {
            let cell = &central.cells[1][e];
            let (l, e1, e2) = central.doubled(1, e)[0];
            if l as usize == class {
                vec![poset.class_of(cell.key.facet as usize, (1 << e1) | (1 << e2)) as u32]
            } else {
                Vec::new()
            }
        })
        .collect();
    let sf = forest(central);
    let mut path: Vec<Vec<u32>> = vec![Vec::new(); sf.parent.len()];
    for &v in &sf.order {
        if let Some((e, fwd)) = sf.parent[v] {
            let (a, b) = edge_ends(central, e);
            let prev = if fwd { a } else { b };
            path[v] = gf2::xor(&path[prev], &edge_image[e]);
        }
    }
    let rows = cc.counts[1];
    let mut basis = gf2::Eliminator::new(rows);
    if cc.counts.len() > 2 {
        for col in &cc.boundaries[2] {
            basis.insert(gf2::normalize(col.clone()));
        }
    }
    let boundary_rank = basis.rank();
    for e in (0..ne).filter(|&e| !sf.tree[e]) {
        let (a, b) = edge_ends(central, e);
        let z = gf2::xor(&gf2::xor(&path[a], &edge_image[e]), &path[b]);
        basis.insert(z);
    }
    let image_rank = basis.rank() - boundary_rank;
    Ok(H1Onto { class, ambient_rank, image_rank, onto: image_rank == ambient_rank })
}
