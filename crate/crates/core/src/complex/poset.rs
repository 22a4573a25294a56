use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::Triangulation;
use crate::error::{Error, Result};

/// Canonical key of a face class: the lexicographically least
/// `(facet, sorted corner subset)` over its incarnations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FaceKey {
    pub facet: u32,
    pub mask: u32,
}

impl FaceKey {
    pub fn corners(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |c| self.mask >> c & 1 == 1)
    }

    pub fn dim(&self) -> usize {
        self.mask.count_ones() as usize - 1
    }
}

impl Ord for FaceKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.facet.cmp(&other.facet).then_with(|| self.corners().cmp(other.corners()))
    }
}

impl PartialOrd for FaceKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FaceKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.facet)?;
        for (i, c) in self.corners().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl serde::Serialize for FaceKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::str::FromStr for FaceKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownFace(s.to_string());
        let (f, cs) = s.split_once(':').ok_or_else(bad)?;
        let facet = f.trim().parse::<u32>().map_err(|_| bad())?;
        let mut mask = 0u32;
        for c in cs.split(',') {
            let c = c.trim().parse::<u32>().map_err(|_| bad())?;
            if c >= 32 || mask >> c & 1 == 1 {
                return Err(bad());
            }
            mask |= 1 << c;
        }
        Ok(FaceKey { facet, mask })
    }
}

/// Address of a face class: its dimension and its index among the classes
/// of that dimension (classes are sorted by canonical key).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceId {
    pub dim: usize,
    pub index: usize,
}

#[derive(Debug, Clone)]
pub struct FaceClass {
    pub key: FaceKey,
    /// Every `(facet, corner mask)` incarnation of the class.
    pub incarnations: Vec<(u32, u32)>,
    /// Codimension-one faces of the canonical incarnation, one per corner
    /// in ascending order (indices into the classes of `dim - 1`).
    pub down: Vec<u32>,
    /// Classes of `dim + 1` having this class among their `down` faces,
    /// with multiplicity.
    pub up: Vec<u32>,
}

/// All face classes of a triangulation with incidences and, for every
/// incarnation, the corner bijection onto the canonical incarnation.
#[derive(Debug, Clone)]
pub struct FacePoset {
    dim: usize,
    facets: usize,
    class_of: Vec<u32>,
    canon: Vec<u8>,
    classes: Vec<Vec<FaceClass>>,
}

/// Subsets of `{0..width}` of each size, in lexicographic order of their
/// sorted element lists.
fn masks_by_size(width: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); width + 1];
    fn rec(start: usize, width: usize, mask: u32, size: usize, out: &mut Vec<Vec<u32>>) {
        if size > 0 {
            out[size].push(mask);
        }
        for c in start..width {
            rec(c + 1, width, mask | 1 << c, size + 1, out);
        }
    }
    rec(0, width, 0, 0, &mut out);
    for v in out.iter_mut() {
        v.sort_by(|&a, &b| {
            let ka = FaceKey { facet: 0, mask: a };
            let kb = FaceKey { facet: 0, mask: b };
            ka.cmp(&kb)
        });
    }
    out
}

#[inline]
pub(crate) fn apply_mask(perm: &[u8], mask: u32) -> u32 {
    let mut out = 0u32;
    let mut m = mask;
    while m != 0 {
        let c = m.trailing_zeros() as usize;
        out |= 1 << perm[c];
        m &= m - 1;
    }
    out
}

impl FacePoset {
    pub fn new(t: &Triangulation) -> Self {
        let n = t.dim();
        let w = n + 1;
        let m = t.num_facets();
        let stride = 1usize << w;
        let mut class_of = vec![u32::MAX; m * stride];
        let mut canon = vec![u8::MAX; m * stride * w];
        let mut classes: Vec<Vec<FaceClass>> = vec![Vec::new(); w];
        let sizes = masks_by_size(w);
        let mut stack: Vec<(usize, u32)> = Vec::new();
        for d in 0..w {
            for f in 0..m {
                for &mask in &sizes[d + 1] {
                    let idx = f * stride + mask as usize;
                    if class_of[idx] != u32::MAX {
                        continue;
                    }
                    let class = classes[d].len() as u32;
                    class_of[idx] = class;
                    for c in 0..w {
                        if mask >> c & 1 == 1 {
                            canon[idx * w + c] = c as u8;
                        }
                    }
                    let mut incarnations = vec![(f as u32, mask)];
                    stack.push((f, mask));
                    while let Some((g, gm)) = stack.pop() {
                        let gi = g * stride + gm as usize;
                        for slot in (0..w).filter(|&s| gm >> s & 1 == 0) {
                            let tgt = t.target(g, slot);
                            let p = t.perm(g, slot);
                            let tm = apply_mask(p, gm);
                            let ti = tgt * stride + tm as usize;
                            if class_of[ti] != u32::MAX {
                                continue;
                            }
                            class_of[ti] = class;
                            for c in (0..w).filter(|&c| gm >> c & 1 == 1) {
                                canon[ti * w + p[c] as usize] = canon[gi * w + c];
                            }
                            incarnations.push((tgt as u32, tm));
                            stack.push((tgt, tm));
                        }
                    }
                    incarnations.sort_by_key(|&(f, m)| FaceKey { facet: f, mask: m });
                    classes[d].push(FaceClass {
                        key: FaceKey { facet: f as u32, mask },
                        incarnations,
                        down: Vec::new(),
                        up: Vec::new(),
                    });
                }
            }
        }
        let mut poset = Self { dim: n, facets: m, class_of, canon, classes };
        for d in 1..w {
            for j in 0..poset.classes[d].len() {
                let key = poset.classes[d][j].key;
                let down: Vec<u32> = key
                    .corners()
                    .map(|c| poset.class_of[key.facet as usize * stride + (key.mask & !(1 << c)) as usize])
                    .collect();
                for &b in &down {
                    poset.classes[d - 1][b as usize].up.push(j as u32);
                }
                poset.classes[d][j].down = down;
            }
        }
        poset
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_facets(&self) -> usize {
        self.facets
    }

    pub fn counts(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn euler(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn classes(&self, dim: usize) -> &[FaceClass] {
        &self.classes[dim]
    }

    pub fn class(&self, id: FaceId) -> &FaceClass {
        &self.classes[id.dim][id.index]
    }

    #[inline]
    fn idx(&self, facet: usize, mask: u32) -> usize {
        (facet << (self.dim + 1)) + mask as usize
    }

    /// Class index (within dimension `popcount(mask) - 1`) of an incarnation.
    #[inline]
    pub fn class_of(&self, facet: usize, mask: u32) -> usize {
        self.class_of[self.idx(facet, mask)] as usize
    }

    #[inline]
    pub fn vertex_class(&self, facet: usize, corner: usize) -> usize {
        self.class_of(facet, 1 << corner)
    }

    /// Corner of the canonical incarnation corresponding to `corner` of the
    /// incarnation `(facet, mask)`.
    #[inline]
    pub fn canonical_corner(&self, facet: usize, mask: u32, corner: usize) -> usize {
        self.canon[self.idx(facet, mask) * (self.dim + 1) + corner] as usize
    }

    /// Looks up a face class by any of its incarnation keys.
    pub fn find(&self, key: FaceKey) -> Result<FaceId> {
        let w = self.dim + 1;
        if key.facet as usize >= self.facets || key.mask == 0 || key.mask >> w != 0 {
            return Err(Error::UnknownFace(key.to_string()));
        }
        Ok(FaceId { dim: key.dim(), index: self.class_of(key.facet as usize, key.mask) })
    }

    /// Vertex classes of a face in the corner order of its canonical
    /// incarnation.
    pub fn vertices_of(&self, id: FaceId) -> Vec<usize> {
        let key = self.classes[id.dim][id.index].key;
        key.corners().map(|c| self.vertex_class(key.facet as usize, c)).collect()
    }

    /// Number of incarnations of a face in facets (the degree, for
    /// codimension-two faces).
    pub fn degree(&self, id: FaceId) -> usize {
        self.classes[id.dim][id.index].incarnations.len()
    }

    /// True iff no face repeats a vertex class and no two distinct faces of
    /// one dimension share their vertex class set.
    pub fn is_simplicial(&self) -> bool {
        for d in 1..=self.dim {
            let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
            for j in 0..self.classes[d].len() {
                let mut vs = self.vertices_of(FaceId { dim: d, index: j });
                vs.sort_unstable();
                if vs.windows(2).any(|w| w[0] == w[1]) || seen.insert(vs, ()).is_some() {
                    return false;
                }
            }
        }
        true
    }

    /// Boundary matrices of the cellular chain complex.
    pub fn chain_complex(&self) -> crate::gf2::ChainComplex {
        let mut cc = crate::gf2::ChainComplex::new(self.counts());
        for d in 1..=self.dim {
            cc.boundaries[d] = self.classes[d].iter().map(|c| c.down.clone()).collect();
        }
        cc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn doubled_simplex_counts() {
        let p = FacePoset::new(&zoo::double_simplex(3).unwrap());
        assert_eq!(p.counts(), vec![4, 6, 4, 2]);
        assert_eq!(p.euler(), 0);
        assert!(!p.is_simplicial());
    }

    #[test]
    fn lexicographic_mask_order() {
        let s = masks_by_size(4);
        // {0,3} precedes {1,2}
        let a = s[2].iter().position(|&m| m == 0b1001).unwrap();
        let b = s[2].iter().position(|&m| m == 0b0110).unwrap();
        assert!(a < b);
        assert_eq!(s[2].len(), 6);
    }

    #[test]
    fn face_key_round_trip() {
        let k: FaceKey = "3:0,2,4".parse().unwrap();
        assert_eq!(k.to_string(), "3:0,2,4");
        assert_eq!(k.dim(), 2);
        assert!("x:1".parse::<FaceKey>().is_err());
    }

    #[test]
    fn canonical_maps_are_consistent() {
        // every incarnation's corners map to the canonical incarnation's
        // corners with matching vertex classes
        let t = zoo::cross_projective(4).unwrap();
        let p = FacePoset::new(&t);
        for d in 0..=4 {
            for (j, class) in p.classes(d).iter().enumerate() {
                let canon_vs = p.vertices_of(FaceId { dim: d, index: j });
                let key = class.key;
                for &(f, m) in &class.incarnations {
                    for c in (0..5).filter(|c| m >> c & 1 == 1) {
                        let cc = p.canonical_corner(f as usize, m, c);
                        let pos = key.corners().position(|x| x == cc).unwrap();
                        assert_eq!(p.vertex_class(f as usize, c), canon_vs[pos]);
                    }
                }
            }
        }
    }

    #[test]
    fn crosspolytope_counts() {
        // orthant oracle: C(4, d+1) * 2^(d+1) faces in dimension d
        let p = FacePoset::new(&zoo::cross_sphere(3).unwrap());
        assert_eq!(p.counts(), vec![8, 24, 32, 16]);
        assert!(p.is_simplicial());
    }
}
