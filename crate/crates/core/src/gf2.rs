//! Sparse linear algebra over GF(2).
//!
//! Vectors are sorted lists of the indices of their nonzero entries.
//! Reduction is the usual lowest-pivot column elimination; Betti numbers
//! use the clearing shortcut (pivot rows of the boundary map one degree up
//! are known cycles and are skipped).

/// Cancels repeated indices in pairs and sorts the result.
pub fn normalize(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    let mut out = Vec::with_capacity(v.len());
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(v[i]);
        }
        i = j;
    }
    out
}

/// Symmetric difference of two sorted index lists.
pub fn xor(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Incremental row-echelon basis keyed by lowest pivot.
#[derive(Debug, Clone)]
pub struct Eliminator {
    pivots: Vec<Option<Vec<u32>>>,
    rank: usize,
}

impl Eliminator {
    pub fn new(rows: usize) -> Self {
        Self { pivots: vec![None; rows], rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduces `v` against the basis.
    pub fn reduce(&self, mut v: Vec<u32>) -> Vec<u32> {
        while let Some(&p) = v.last() {
            match &self.pivots[p as usize] {
                Some(b) => v = xor(&v, b),
                None => break,
            }
        }
        v
    }

    /// Inserts `v` (sorted, duplicate-free); returns the pivot row when it
    /// was independent of the basis.
    pub fn insert(&mut self, v: Vec<u32>) -> Option<u32> {
        let v = self.reduce(v);
        let p = *v.last()?;
        self.pivots[p as usize] = Some(v);
        self.rank += 1;
        Some(p)
    }
}

/// Rank of a set of sparse vectors with entries below `rows`.
pub fn rank(rows: usize, vectors: impl IntoIterator<Item = Vec<u32>>) -> usize {
    let mut e = Eliminator::new(rows);
    for v in vectors {
        e.insert(normalize(v));
    }
    e.rank()
}

/// A chain complex over GF(2): `boundaries[d][j]` lists the (d-1)-cells in
/// the boundary of d-cell `j` (with multiplicity; pairs cancel).
#[derive(Debug, Clone, Default)]
pub struct ChainComplex {
    pub counts: Vec<usize>,
    pub boundaries: Vec<Vec<Vec<u32>>>,
}

impl ChainComplex {
    pub fn new(counts: Vec<usize>) -> Self {
        let boundaries = counts.iter().map(|_| Vec::new()).collect();
        Self { counts, boundaries }
    }

    /// Ranks of the boundary maps, `ranks[d] = rank(∂_d)` (`ranks[0] = 0`).
    pub fn boundary_ranks(&self) -> Vec<usize> {
        let top = self.counts.len();
        let mut ranks = vec![0usize; top];
        // rows of ∂_{d+1} that became pivots: columns of ∂_d that are cycles
        let mut cleared: Vec<bool> = Vec::new();
        for d in (1..top).rev() {
            let rows = self.counts[d - 1];
            let mut e = Eliminator::new(rows);
            let mut next_cleared = vec![false; rows];
            for (j, col) in self.boundaries[d].iter().enumerate() {
                if cleared.get(j).copied().unwrap_or(false) {
                    continue;
                }
                if let Some(p) = e.insert(normalize(col.clone())) {
                    next_cleared[p as usize] = true;
                }
            }
            ranks[d] = e.rank();
            cleared = next_cleared;
        }
        ranks
    }

    pub fn betti(&self) -> Vec<usize> {
        let ranks = self.boundary_ranks();
        let top = self.counts.len();
        (0..top)
            .map(|d| {
                let up = if d + 1 < top { ranks[d + 1] } else { 0 };
                self.counts[d] - ranks[d] - up
            })
            .collect()
    }

    pub fn euler(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_cancels_pairs() {
        assert_eq!(normalize(vec![3, 1, 3, 2, 3]), vec![1, 2, 3]);
        assert_eq!(normalize(vec![4, 4]), Vec::<u32>::new());
    }

    #[test]
    fn circle_betti() {
        // triangle boundary: 3 vertices, 3 edges
        let mut cc = ChainComplex::new(vec![3, 3]);
        cc.boundaries[1] = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        assert_eq!(cc.betti(), vec![1, 1]);
        assert_eq!(cc.euler(), 0);
    }

    #[test]
    fn projective_plane_mod_two() {
        // RP^2 as one vertex, one edge (loop), one 2-cell attached along a^2
        let mut cc = ChainComplex::new(vec![1, 1, 1]);
        cc.boundaries[1] = vec![vec![0, 0]];
        cc.boundaries[2] = vec![vec![0, 0]];
        assert_eq!(cc.betti(), vec![1, 1, 1]);
    }

    #[test]
    fn dense_rank() {
        let r = rank(4, vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![3]]);
        assert_eq!(r, 3);
    }
}
