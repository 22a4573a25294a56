//! Subdivisions and moves: barycentric subdivision, the 2-n Pachner pass,
//! stellar subdivision of a facet, and joins.

use std::collections::HashMap;

use crate::complex::{FacePoset, Triangulation, VertexIds};
use crate::error::{Error, Result};
use crate::partition::VertexPartition;
use crate::perm;

/// Default facet ceiling for subdivisions.
pub const DEFAULT_CEILING: u64 = 100_000_000;

/// Carrier of every vertex class of a barycentric subdivision: the
/// dimension and the face class index (within that dimension, in the face
/// poset of the input) of the face whose barycentre it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarrierLabels {
    pub dims: Vec<u8>,
    pub faces: Vec<u32>,
}

impl CarrierLabels {
    /// Number of vertex classes per carrier dimension.
    pub fn census(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n + 1];
        for &d in &self.dims {
            c[d as usize] += 1;
        }
        c
    }
}

pub fn barycentric(t: &Triangulation) -> Result<(Triangulation, CarrierLabels)> {
    barycentric_with_ceiling(t, DEFAULT_CEILING)
}

/// First barycentric subdivision. Facet `(f, sigma)` (index
/// `f * (n+1)! + rank(sigma)`) is the flag of faces `sigma(0..=j)` of `f`;
/// its corner `j` is the barycentre of the `j`-face of the flag.
pub fn barycentric_with_ceiling(t: &Triangulation, ceiling: u64) -> Result<(Triangulation, CarrierLabels)> {
    let n = t.dim();
    let w = n + 1;
    let m = t.num_facets();
    let fact = perm::factorial(w);
    let projected = m as u128 * fact;
    if projected > ceiling as u128 {
        return Err(Error::TooLarge { projected, ceiling });
    }
    let fact = fact as usize;
    let flags = perm::all(w);
    let total = m * fact;
    let mut targets = Vec::with_capacity(total * w);
    let mut perms = Vec::with_capacity(total * w * w);
    let id = perm::identity(w);
    for f in 0..m {
        for sigma in &flags {
            for j in 0..n {
                let mut s = sigma.clone();
                s.swap(j, j + 1);
                targets.push((f * fact + perm::rank(&s)) as u32);
                perms.extend_from_slice(&id);
            }
            let g = t.target(f, sigma[n] as usize);
            let s = perm::compose(t.perm(f, sigma[n] as usize), sigma);
            targets.push((g * fact + perm::rank(&s)) as u32);
            perms.extend_from_slice(&id);
        }
    }
    let mut out = Triangulation::from_raw(n, targets, perms)?;

    // vertex ids name the carrier face: `d<dim>.<class>`
    let poset = FacePoset::new(t);
    let offsets: Vec<u32> = poset
        .counts()
        .iter()
        .scan(0u32, |acc, &c| {
            let o = *acc;
            *acc += c as u32;
            Some(o)
        })
        .collect();
    let mut names = Vec::new();
    let mut dims = Vec::new();
    let mut faces = Vec::new();
    for (d, &c) in poset.counts().iter().enumerate() {
        for j in 0..c {
            names.push(format!("d{d}.{j}"));
            dims.push(d as u8);
            faces.push(j as u32);
        }
    }
    let mut corners = Vec::with_capacity(total * w);
    for f in 0..m {
        for sigma in &flags {
            let mut mask = 0u32;
            for (j, &c) in sigma.iter().enumerate() {
                mask |= 1 << c;
                corners.push(offsets[j] + poset.class_of(f, mask) as u32);
            }
        }
    }
    out.set_vertex_ids(Some(VertexIds { names, corners }));
    let classes = out.vertex_classes();
    let mut carriers = CarrierLabels { dims: vec![0; classes.count()], faces: vec![0; classes.count()] };
    let ids = out.vertex_ids().unwrap();
    for v in 0..classes.count() {
        let (f, c) = classes.key(v);
        let global = ids.corners[f * w + c] as usize;
        carriers.dims[v] = dims[global];
        carriers.faces[v] = faces[global];
    }
    Ok((out, carriers))
}

/// One matched pair of the Pachner pass.
struct Pair {
    f: usize,
    t: usize,
    c: usize,
    pi: Vec<u8>,
    /// Corners of `f` other than `c`, ascending.
    rest: Vec<u8>,
}

/// Replaces every pair of facets glued across the face opposite their
/// unique class-`k` corner by `n` facets around a new edge joining the two
/// class-`k` vertices (`n = 2k`). New facet `(p, j)` has index `p * n + j`
/// and corners `[a, b, R \ r_j]`, where `a`, `b` are the two apexes and
/// `R = (r_0, .., r_{n-1})` the shared face in the corner order of the
/// first facet of the pair.
pub fn pachner_2n_pass(t: &Triangulation, p: &VertexPartition) -> Result<(Triangulation, VertexPartition)> {
    let n = t.dim();
    if n < 4 || n % 2 == 1 {
        return Err(Error::Precondition(format!("2-n pass needs even dimension >= 4, got {n}")));
    }
    let k = n / 2;
    let w = n + 1;
    let m = t.num_facets();
    let classes = t.vertex_classes();
    if classes.count() != p.labels.len() || p.k != k {
        return Err(Error::Precondition("partition does not match triangulation".into()));
    }
    let apex = |f: usize| -> Result<usize> {
        let ks: Vec<usize> = (0..w).filter(|&c| p.labels[classes.of(f, c)] as usize == k).collect();
        match ks.as_slice() {
            [c] => Ok(*c),
            _ => Err(Error::Precondition(format!(
                "facet {f} has {} class-{k} vertices, expected exactly one",
                ks.len()
            ))),
        }
    };
    let mut pair_of = vec![usize::MAX; m];
    let mut pairs: Vec<Pair> = Vec::new();
    for f in 0..m {
        if pair_of[f] != usize::MAX {
            continue;
        }
        let c = apex(f)?;
        let g = t.target(f, c);
        let pi = t.perm(f, c).to_vec();
        if g == f || pair_of[g] != usize::MAX || apex(g)? != pi[c] as usize {
            return Err(Error::Precondition(format!("facet {f}: class-{k}-free faces do not match facets in pairs")));
        }
        if classes.of(f, c) == classes.of(g, pi[c] as usize) {
            return Err(Error::Precondition(format!(
                "facets {f} and {g} share their class-{k} vertex; the new edge would be a loop"
            )));
        }
        pair_of[f] = pairs.len();
        pair_of[g] = pairs.len();
        let rest = (0..w as u8).filter(|&x| x as usize != c).collect();
        pairs.push(Pair { f, t: g, c, pi, rest });
    }

    // old corner for every new corner, from each side (u8::MAX: absent)
    let total = pairs.len() * n;
    let mut fmap = vec![u8::MAX; total * w];
    let mut tmap = vec![u8::MAX; total * w];
    let mut loc: HashMap<(usize, usize), (usize, usize)> = HashMap::with_capacity(total * 2);
    for (pi_, pr) in pairs.iter().enumerate() {
        for j in 0..n {
            let nf = pi_ * n + j;
            let fm = &mut fmap[nf * w..(nf + 1) * w];
            let tm = &mut tmap[nf * w..(nf + 1) * w];
            fm[0] = pr.c as u8;
            tm[1] = pr.pi[pr.c];
            for (x, &r) in pr.rest.iter().enumerate().filter(|&(x, _)| x != j).map(|(_, r)| r).enumerate() {
                fm[x + 2] = r;
                tm[x + 2] = pr.pi[r as usize];
                let _ = x;
            }
            let rj = pr.rest[j] as usize;
            loc.insert((pr.f, rj), (nf, 1));
            loc.insert((pr.t, pr.pi[rj] as usize), (nf, 0));
        }
    }
    let mut targets = vec![0u32; total * w];
    let mut perms = vec![0u8; total * w * w];
    for (pi_, pr) in pairs.iter().enumerate() {
        for j in 0..n {
            let nf = pi_ * n + j;
            // external slots
            for (slot, old_f, map) in [(1usize, pr.f, &fmap), (0usize, pr.t, &tmap)] {
                let y = if slot == 1 { pr.rest[j] as usize } else { pr.pi[pr.rest[j] as usize] as usize };
                let g = t.target(old_f, y);
                let rho = t.perm(old_f, y);
                let (nf2, s2) = loc[&(g, rho[y] as usize)];
                let map2 = if s2 == 1 { &fmap } else { &tmap };
                let mut inv2 = [u8::MAX; 32];
                for x in 0..w {
                    let o = map2[nf2 * w + x];
                    if o != u8::MAX {
                        inv2[o as usize] = x as u8;
                    }
                }
                targets[nf * w + slot] = nf2 as u32;
                let pm = &mut perms[(nf * w + slot) * w..(nf * w + slot + 1) * w];
                for x in 0..w {
                    pm[x] = if x == slot { s2 as u8 } else { inv2[rho[map[nf * w + x] as usize] as usize] };
                }
            }
            // internal slots: corner x >= 2 of (p, j) is r_i for some i != j
            let labels = |jj: usize| -> Vec<u8> {
                let mut v = vec![u8::MAX - 1, u8::MAX - 2];
                v.extend(pr.rest.iter().enumerate().filter(|&(i, _)| i != jj).map(|(_, &r)| r));
                v
            };
            let mine = labels(j);
            for x in 2..w {
                let i = pr.rest.iter().position(|&r| r == mine[x]).unwrap();
                let theirs = labels(i);
                targets[nf * w + x] = (pi_ * n + i) as u32;
                let pm = &mut perms[(nf * w + x) * w..(nf * w + x + 1) * w];
                for y in 0..w {
                    pm[y] = if y == x {
                        theirs.iter().position(|&r| r == pr.rest[j]).unwrap() as u8
                    } else {
                        theirs.iter().position(|&r| r == mine[y]).unwrap() as u8
                    };
                }
            }
        }
    }
    let out = Triangulation::from_raw(n, targets, perms)?;
    let new_classes = out.vertex_classes();
    let mut labels = vec![u8::MAX; new_classes.count()];
    for nf in 0..total {
        let pr = &pairs[nf / n];
        for x in 0..w {
            let old = if fmap[nf * w + x] != u8::MAX {
                classes.of(pr.f, fmap[nf * w + x] as usize)
            } else {
                classes.of(pr.t, tmap[nf * w + x] as usize)
            };
            let v = new_classes.of(nf, x);
            let l = p.labels[old];
            if labels[v] != u8::MAX && labels[v] != l {
                return Err(Error::Invalid("vertex classes merged by the 2-n pass".into()));
            }
            labels[v] = l;
        }
    }
    if new_classes.count() != classes.count() {
        return Err(Error::Invalid("2-n pass changed the number of vertex classes".into()));
    }
    let q = VertexPartition::new(k, labels, p.scheme.clone())?;
    Ok((out, q))
}

/// Stellar subdivision of facet `f`: the copy whose corner 0 is the new
/// vertex keeps index `f`, copies `1..=n` are appended.
pub fn stellar_facet(t: &Triangulation, f: usize) -> Result<Triangulation> {
    let m = t.num_facets();
    if f >= m {
        return Err(Error::UnknownFacet(f));
    }
    let n = t.dim();
    let w = n + 1;
    let index = |i: usize| if i == 0 { f } else { m + i - 1 };
    let mut gl: Vec<(u32, Vec<u8>)> = (0..m)
        .flat_map(|g| (0..w).map(move |i| (g, i)))
        .map(|(g, i)| (t.target(g, i) as u32, t.perm(g, i).to_vec()))
        .collect();
    gl.resize((m + n) * w, (0, Vec::new()));
    for i in 0..w {
        let nf = index(i);
        for j in 0..w {
            if j == i {
                let (g, pi) = (t.target(f, i), t.perm(f, i).to_vec());
                let tgt = if g == f { index(pi[i] as usize) } else { g };
                if g != f {
                    gl[g * w + pi[i] as usize] = (nf as u32, perm::inverse(&pi));
                }
                gl[nf * w + i] = (tgt as u32, pi);
            } else {
                let mut tau = perm::identity(w);
                tau.swap(i, j);
                gl[nf * w + j] = (index(j) as u32, tau);
            }
        }
    }
    let targets = gl.iter().map(|g| g.0).collect();
    let perms = gl.into_iter().flat_map(|g| g.1).collect();
    let mut out = Triangulation::from_raw(n, targets, perms)?;
    if let Some(ids) = t.vertex_ids() {
        let mut names = ids.names.clone();
        let mut fresh = format!("s{}", names.len());
        while names.contains(&fresh) {
            fresh.push('\'');
        }
        names.push(fresh);
        let v = (names.len() - 1) as u32;
        let mut corners = ids.corners.clone();
        let orig: Vec<u32> = corners[f * w..(f + 1) * w].to_vec();
        corners.resize((m + n) * w, 0);
        for i in 0..w {
            let nf = index(i);
            for c in 0..w {
                corners[nf * w + c] = if c == i { v } else { orig[c] };
            }
        }
        out.set_vertex_ids(Some(VertexIds { names, corners }));
    }
    Ok(out)
}

/// Join of two simplicial complexes given in vertex format. Facet
/// `(a, b)` has index `a * |B| + b` and lists the corners of `a` followed
/// by those of `b`; vertices are renamed `a.<id>` and `b.<id>`.
pub fn join(a: &Triangulation, b: &Triangulation) -> Result<Triangulation> {
    if !a.is_vertex_format() || !b.is_vertex_format() {
        return Err(Error::JoinNeedsVertexFormat);
    }
    let (wa, wb) = (a.dim() + 1, b.dim() + 1);
    let mut facets = Vec::with_capacity(a.num_facets() * b.num_facets());
    for fa in 0..a.num_facets() {
        for fb in 0..b.num_facets() {
            let mut names: Vec<String> = (0..wa).map(|c| format!("a.{}", a.corner_name(fa, c).unwrap())).collect();
            names.extend((0..wb).map(|c| format!("b.{}", b.corner_name(fb, c).unwrap())));
            facets.push(names);
        }
    }
    let mut out = Triangulation::from_vertex_facets(wa + wb - 1, &facets)?;
    if let (Some(ca), Some(cb)) = (a.coordinate_labels(), b.coordinate_labels()) {
        let mut coords = Vec::with_capacity(facets.len() * (wa + wb));
        for fa in 0..a.num_facets() {
            for fb in 0..b.num_facets() {
                coords.extend_from_slice(&ca[fa * wa..(fa + 1) * wa]);
                coords.extend(cb[fb * wb..(fb + 1) * wb].iter().map(|&x| x + wa as u8));
            }
        }
        out.set_coordinate_labels(Some(coords));
    }
    Ok(out)
}
