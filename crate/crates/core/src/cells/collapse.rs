use std::cmp::Reverse;
use std::collections::BTreeSet;

use super::CellComplex;
use crate::error::{Error, Result};
use crate::gf2::ChainComplex;

/// Result of greedy free-face collapsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapse {
    /// Surviving cells, by dimension and cell index.
    pub alive: Vec<Vec<bool>>,
    /// Dimension of the remaining complex (`None` for an empty input).
    pub dim: Option<usize>,
    pub counts: Vec<usize>,
    /// Number of elementary collapses performed.
    pub steps: usize,
}

impl Collapse {
    pub fn euler(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Chain complex of the surviving cells.
    pub fn chain_complex(&self, c: &CellComplex<'_>) -> ChainComplex {
        let renum: Vec<Vec<u32>> = self
            .alive
            .iter()
            .map(|a| {
                let mut next = 0u32;
                a.iter()
                    .map(|&x| {
                        let r = next;
                        if x {
                            next += 1;
                        }
                        r
                    })
                    .collect()
            })
            .collect();
        let mut cc = ChainComplex::new(self.counts.clone());
        for d in 0..self.counts.len() {
            cc.boundaries[d] = c.cells[d]
                .iter()
                .enumerate()
                .filter(|&(i, _)| self.alive[d][i])
                .map(|(_, cell)| cell.boundary.iter().map(|&b| renum[d - 1][b as usize]).collect())
                .collect();
        }
        cc
    }
}

/// Collapses free faces until none remain. A free face is a cell lying in
/// the boundary of exactly one cell, exactly once, where that coface is
/// itself maximal. Candidates are taken highest dimension first, then by
/// canonical key.
pub fn collapse(c: &CellComplex<'_>) -> Collapse {
    let top = c.cells.len();
    let mut alive: Vec<Vec<bool>> = c.cells.iter().map(|v| vec![true; v.len()]).collect();
    // coface occurrences among live cells, and coface lists
    let mut cocount: Vec<Vec<u32>> = c.cells.iter().map(|v| vec![0; v.len()]).collect();
    let mut cofaces: Vec<Vec<Vec<u32>>> = c.cells.iter().map(|v| vec![Vec::new(); v.len()]).collect();
    for d in 1..top {
        for (i, cell) in c.cells[d].iter().enumerate() {
            for &b in &cell.boundary {
                cocount[d - 1][b as usize] += 1;
                cofaces[d - 1][b as usize].push(i as u32);
            }
        }
    }
    let mut vertices = c.cells.first().map_or(0, Vec::len);
    let mut queue: BTreeSet<(Reverse<usize>, u32)> = BTreeSet::new();
    for d in 1..top {
        for i in 0..c.cells[d].len() {
            if cocount[d][i] == 0 {
                queue.insert((Reverse(d), i as u32));
            }
        }
    }
    let mut steps = 0;
    while let Some((Reverse(d), i)) = queue.pop_first() {
        let i = i as usize;
        if d == 0 || !alive[d][i] || cocount[d][i] != 0 {
            continue;
        }
        let Some(&free) = c.cells[d][i].boundary.iter().find(|&&b| cocount[d - 1][b as usize] == 1) else {
            continue;
        };
        if d == 1 && vertices == 1 {
            continue;
        }
        let free = free as usize;
        alive[d][i] = false;
        alive[d - 1][free] = false;
        if d == 1 {
            vertices -= 1;
        }
        steps += 1;
        let touched: Vec<u32> = c.cells[d][i].boundary.clone();
        for b in touched {
            cocount[d - 1][b as usize] -= 1;
        }
        // faces of the removed pair that may have become free or maximal
        let mut check: Vec<(usize, usize)> = Vec::new();
        for &b in &c.cells[d][i].boundary {
            let b = b as usize;
            if b != free && alive[d - 1][b] {
                check.push((d - 1, b));
            }
        }
        if d >= 2 {
            for &b in &c.cells[d - 1][free].boundary {
                let b = b as usize;
                cocount[d - 2][b] -= 1;
                if cocount[d - 2][b] == 1 {
                    if let Some(&co) = cofaces[d - 2][b].iter().find(|&&co| alive[d - 1][co as usize]) {
                        queue.insert((Reverse(d - 1), co));
                    }
                }
                if cocount[d - 2][b] == 0 {
                    queue.insert((Reverse(d - 2), b as u32));
                }
            }
        }
        for (dd, b) in check {
            if cocount[dd][b] == 0 && dd >= 1 {
                queue.insert((Reverse(dd), b as u32));
            } else if cocount[dd][b] == 1 {
                if let Some(&co) = cofaces[dd][b].iter().find(|&&co| alive[dd + 1][co as usize]) {
                    queue.insert((Reverse(dd + 1), co));
                }
            }
        }
    }
    let mut counts: Vec<usize> = alive.iter().map(|a| a.iter().filter(|&&x| x).count()).collect();
    let dim = counts.iter().rposition(|&n| n > 0);
    counts.truncate(dim.map_or(0, |d| d + 1));
    Collapse { alive, dim, counts, steps }
}

/// Genus `E - V + 1` of a connected complex of dimension at most one.
pub fn graph_genus(c: &CellComplex<'_>) -> Result<usize> {
    match c.dim() {
        None => Err(Error::Precondition("empty complex".into())),
        Some(d) if d > 1 => Err(Error::Precondition(format!("complex has dimension {d} > 1"))),
        _ if !c.is_connected() => Err(Error::Precondition("complex is disconnected".into())),
        _ => {
            let counts = c.counts();
            let e = counts.get(1).copied().unwrap_or(0);
            Ok(e + 1 - counts[0])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::pairs;
    use super::super::{extract, subset_mask};
    use super::*;
    use crate::zoo;

    #[test]
    fn square_spine_collapses_to_graph() {
        let amb = pairs(&zoo::double_simplex(4).unwrap(), "0,1/2,3/4");
        let s01 = extract(&amb, subset_mask(&[0, 1])).unwrap();
        assert_eq!(s01.counts(), vec![4, 4, 1]);
        let r = collapse(&s01);
        assert!(r.dim.unwrap() <= 1);
        assert_eq!(r.euler(), s01.euler());
        let s02 = extract(&amb, subset_mask(&[0, 2])).unwrap();
        assert_eq!(s02.dim(), Some(1));
        assert!(collapse(&s02).dim.unwrap() <= 1);
    }

    #[test]
    fn disk_collapses_to_point() {
        let amb = pairs(&zoo::double_simplex(5).unwrap(), "0,1/2,3/4,5");
        let s = extract(&amb, subset_mask(&[0, 1])).unwrap();
        let r = collapse(&s);
        assert_eq!(r.dim, Some(0));
        assert_eq!(r.counts, vec![1]);
        let mut betti = s.chain_complex().betti();
        while betti.len() > 1 && betti.last() == Some(&0) {
            betti.pop();
        }
        assert_eq!(r.chain_complex(&s).betti(), betti);
    }

    #[test]
    fn closed_complexes_do_not_collapse() {
        let amb = pairs(&zoo::double_simplex(5).unwrap(), "0,1/2,3/4,5");
        let c = extract(&amb, amb.full()).unwrap();
        let r = collapse(&c);
        assert_eq!((r.steps, r.dim), (0, Some(3)));
    }

    #[test]
    fn genus_of_class_graphs() {
        let amb = pairs(&zoo::cross_projective(3).unwrap(), "0,1/2,3");
        assert_eq!(graph_genus(&extract(&amb, 1).unwrap()).unwrap(), 1);
        let amb = pairs(&zoo::double_simplex(5).unwrap(), "0,1/2,3/4,5");
        assert_eq!(graph_genus(&extract(&amb, 1).unwrap()).unwrap(), 0);
        assert!(graph_genus(&extract(&amb, 0b11).unwrap()).is_err());
    }
}
