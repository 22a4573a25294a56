//! Vertex partitions, the partition schemes, validation of the
//! multisection conditions, and symmetric representations.

mod symrep;
mod validate;

pub use symrep::{
    labeling_cover, symmetric_representation, twisted_admissible, Admissibility, LabelPartition, SymRep,
};
pub use validate::{spine_bound, validate, validate_ambient, ClassGraph, SubsetReport, ValidationReport};

use crate::complex::Triangulation;
use crate::error::{Error, Result};
use crate::subdivide::CarrierLabels;

/// Largest number of partition classes minus one.
pub const MAX_K: usize = 15;

/// Labeling of the vertex classes of a triangulation by `0..=k`; indices
/// follow [`Triangulation::vertex_classes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    pub k: usize,
    pub labels: Vec<u8>,
    pub scheme: String,
}

impl VertexPartition {
    pub fn new(k: usize, labels: Vec<u8>, scheme: impl Into<String>) -> Result<Self> {
        if k > MAX_K {
            return Err(Error::Partition(format!("k = {k} exceeds {MAX_K}")));
        }
        if let Some(&l) = labels.iter().find(|&&l| l as usize > k) {
            return Err(Error::Partition(format!("label {l} out of range 0..={k}")));
        }
        Ok(Self { k, labels, scheme: scheme.into() })
    }

    pub fn num_classes(&self) -> usize {
        self.k + 1
    }

    /// Number of vertex classes with each label.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.k + 1];
        for &l in &self.labels {
            s[l as usize] += 1;
        }
        s
    }

    /// Label multiplicities in every facet, `m * (k + 1)` entries.
    pub fn profiles(&self, t: &Triangulation) -> Vec<Vec<u8>> {
        let classes = t.vertex_classes();
        (0..t.num_facets())
            .map(|f| {
                let mut p = vec![0u8; self.k + 1];
                for c in 0..=t.dim() {
                    p[self.labels[classes.of(f, c)] as usize] += 1;
                }
                p
            })
            .collect()
    }
}

/// A partition scheme and its auxiliary data.
#[derive(Debug, Clone, Copy)]
pub enum Scheme<'a> {
    /// `P_i` = barycentres of `2i`- and `(2i+1)`-faces (odd `n`).
    OddBary(&'a CarrierLabels),
    /// As odd-bary below `k`; `P_k` = barycentres of `n`-faces (even `n`).
    EvenBary(&'a CarrierLabels),
    /// Second barycentric subdivision with the two-coloring of the facets of
    /// the first: `P_0` = old vertices and barycentres of color-0 facets,
    /// `P_1` = old edges and color-1 facets, `P_j` = faces of dimension
    /// `2j-2`, `2j-1` for `j >= 2` (even `n`).
    EvenNpc { carriers: &'a CarrierLabels, colors: &'a [u8] },
    /// Blocks of coordinate labels `0..=n`.
    Pairs(&'a [Vec<u8>]),
    Explicit { k: usize, labels: &'a [u8] },
}

impl Scheme<'_> {
    pub fn name(&self) -> &'static str {
        match self {
            Scheme::OddBary(_) => "odd-bary",
            Scheme::EvenBary(_) => "even-bary",
            Scheme::EvenNpc { .. } => "even-npc",
            Scheme::Pairs(_) => "pairs",
            Scheme::Explicit { .. } => "explicit",
        }
    }
}

fn check_carriers(t: &Triangulation, c: &CarrierLabels) -> Result<()> {
    if c.dims.len() != t.vertex_classes().count() || c.faces.len() != c.dims.len() {
        return Err(Error::Partition("carrier labels do not match the triangulation".into()));
    }
    Ok(())
}

fn parity(t: &Triangulation, odd: bool, scheme: &str) -> Result<()> {
    if (t.dim() % 2 == 1) != odd {
        return Err(Error::Partition(format!("scheme {scheme} does not apply in dimension {}", t.dim())));
    }
    Ok(())
}

pub fn scheme_partition(t: &Triangulation, scheme: Scheme<'_>) -> Result<VertexPartition> {
    let n = t.dim();
    let name = scheme.name();
    match scheme {
        Scheme::OddBary(c) | Scheme::EvenBary(c) => {
            parity(t, matches!(scheme, Scheme::OddBary(_)), name)?;
            check_carriers(t, c)?;
            let labels = c.dims.iter().map(|&d| d / 2).collect();
            VertexPartition::new(n / 2, labels, name)
        }
        Scheme::EvenNpc { carriers, colors } => {
            parity(t, false, name)?;
            check_carriers(t, carriers)?;
            let mut labels = Vec::with_capacity(carriers.dims.len());
            for (&d, &face) in carriers.dims.iter().zip(&carriers.faces) {
                let d = d as usize;
                labels.push(match d {
                    0 => 0,
                    1 => 1,
                    _ if d == n => {
                        let c = *colors.get(face as usize).ok_or_else(|| {
                            Error::Partition(format!("no color for parent facet {face}"))
                        })?;
                        if c > 1 {
                            return Err(Error::Partition(format!("color {c} is not 0 or 1")));
                        }
                        c
                    }
                    _ => (d / 2 + 1) as u8,
                });
            }
            VertexPartition::new(n / 2, labels, name)
        }
        Scheme::Pairs(blocks) => {
            let mut block_of = vec![u8::MAX; n + 1];
            for (b, block) in blocks.iter().enumerate() {
                for &x in block {
                    let slot = block_of.get_mut(x as usize).ok_or_else(|| {
                        Error::Partition(format!("coordinate label {x} out of range 0..={n}"))
                    })?;
                    if *slot != u8::MAX {
                        return Err(Error::Partition(format!("coordinate label {x} in two blocks")));
                    }
                    *slot = b as u8;
                }
            }
            if block_of.contains(&u8::MAX) || blocks.is_empty() {
                return Err(Error::Partition("blocks must cover coordinate labels 0..=n".into()));
            }
            let coords = match t.coordinate_labels() {
                Some(c) => c.to_vec(),
                None => symmetric_representation(t)
                    .ok()
                    .filter(|r| r.trivial)
                    .map(|r| r.labeling)
                    .ok_or_else(|| Error::Partition("pairs scheme needs a coordinate labeling".into()))?,
            };
            let classes = t.vertex_classes();
            let mut labels = vec![u8::MAX; classes.count()];
            for f in 0..t.num_facets() {
                for c in 0..=n {
                    let l = block_of[coords[f * (n + 1) + c] as usize];
                    let v = classes.of(f, c);
                    if labels[v] != u8::MAX && labels[v] != l {
                        return Err(Error::Partition(format!(
                            "vertex class {v} carries coordinate labels in different blocks"
                        )));
                    }
                    labels[v] = l;
                }
            }
            VertexPartition::new(blocks.len() - 1, labels, name)
        }
        Scheme::Explicit { k, labels } => {
            if labels.len() != t.vertex_classes().count() {
                return Err(Error::Partition(format!(
                    "{} labels for {} vertex classes",
                    labels.len(),
                    t.vertex_classes().count()
                )));
            }
            VertexPartition::new(k, labels.to_vec(), name)
        }
    }
}

/// Parses blocks written as `0,1/2,3/4`.
pub fn parse_blocks(s: &str) -> Result<Vec<Vec<u8>>> {
    s.split('/')
        .map(|b| {
            b.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::Partition(format!("bad block entry `{x}`")))
                })
                .collect()
        })
        .collect()
}

/// Partition of a join from partitions of its factors: labels of `a` come
/// first, then those of `b`. When both factors have even dimension, the
/// class that is a singleton in every facet of `a` is merged with the
/// corresponding class of `b`.
pub fn join_combine(
    a: &Triangulation,
    pa: &VertexPartition,
    b: &Triangulation,
    pb: &VertexPartition,
    joined: &Triangulation,
) -> Result<VertexPartition> {
    let name_label = |t: &Triangulation, p: &VertexPartition| -> Result<std::collections::HashMap<String, u8>> {
        let classes = t.vertex_classes();
        let mut map = std::collections::HashMap::new();
        for f in 0..t.num_facets() {
            for c in 0..=t.dim() {
                let name = t.corner_name(f, c).ok_or(Error::JoinNeedsVertexFormat)?;
                map.insert(name.to_string(), p.labels[classes.of(f, c)]);
            }
        }
        Ok(map)
    };
    let singleton = |t: &Triangulation, p: &VertexPartition| -> Result<u8> {
        let profiles = p.profiles(t);
        (0..=p.k as u8)
            .find(|&l| profiles.iter().all(|pr| pr[l as usize] == 1))
            .ok_or_else(|| Error::Partition("no class is a singleton in every facet".into()))
    };
    let la = name_label(a, pa)?;
    let lb = name_label(b, pb)?;
    let merge = a.dim() % 2 == 0 && b.dim() % 2 == 0;
    let (sa, sb) = if merge { (singleton(a, pa)?, singleton(b, pb)?) } else { (0, 0) };
    let shift = |l: u8| -> u8 {
        if !merge {
            return l + pa.k as u8 + 1;
        }
        match l.cmp(&sb) {
            std::cmp::Ordering::Equal => sa,
            std::cmp::Ordering::Less => l + pa.k as u8 + 1,
            std::cmp::Ordering::Greater => l + pa.k as u8,
        }
    };
    let classes = joined.vertex_classes();
    let mut labels = vec![u8::MAX; classes.count()];
    for f in 0..joined.num_facets() {
        for c in 0..=joined.dim() {
            let name = joined.corner_name(f, c).ok_or(Error::JoinNeedsVertexFormat)?;
            let l = if let Some(rest) = name.strip_prefix("a.") {
                la.get(rest).copied()
            } else if let Some(rest) = name.strip_prefix("b.") {
                lb.get(rest).map(|&l| shift(l))
            } else {
                None
            }
            .ok_or_else(|| Error::Partition(format!("vertex {name} is not from a join factor")))?;
            labels[classes.of(f, c)] = l;
        }
    }
    let k = pa.k + pb.k + if merge { 0 } else { 1 };
    VertexPartition::new(k, labels, "join")
}
