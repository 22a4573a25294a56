use std::collections::HashMap;

use super::{FaceKey, FacePoset, Triangulation};
use crate::error::{Error, Result};

/// Link of a face, with each link facet traced back to the incarnation of
/// the face in the star it came from.
#[derive(Debug, Clone)]
pub struct Link {
    pub complex: Triangulation,
    /// `(facet, corner mask)` of the face incarnation per link facet.
    pub incarnations: Vec<(u32, u32)>,
    /// Ambient corner of each link corner, per link facet (ascending).
    pub corners: Vec<Vec<u8>>,
}

/// Link of the face class containing `key`, as a triangulation of
/// dimension `n - d - 1`. Its facets are the incarnations of the face; the
/// corners of a link facet are the complementary corners in ascending order.
pub fn link(t: &Triangulation, key: FaceKey) -> Result<Link> {
    let poset = FacePoset::new(t);
    link_with(t, &poset, key)
}

pub(crate) fn link_with(t: &Triangulation, poset: &FacePoset, key: FaceKey) -> Result<Link> {
    let n = t.dim();
    let id = poset.find(key)?;
    if id.dim + 2 > n {
        return Err(Error::Precondition(format!(
            "link of {key} would have dimension {} < 1",
            n as isize - id.dim as isize - 1
        )));
    }
    let w = n + 1;
    let incarnations = poset.class(id).incarnations.clone();
    let index: HashMap<(u32, u32), usize> =
        incarnations.iter().enumerate().map(|(i, &inc)| (inc, i)).collect();
    let corners: Vec<Vec<u8>> = incarnations
        .iter()
        .map(|&(_, mask)| (0..w as u8).filter(|&c| mask >> c & 1 == 0).collect())
        .collect();
    let lw = n - id.dim;
    let mut targets = Vec::with_capacity(incarnations.len() * lw);
    let mut perms = Vec::with_capacity(incarnations.len() * lw * lw);
    for (li, &(f, mask)) in incarnations.iter().enumerate() {
        for &c in &corners[li] {
            let g = t.target(f as usize, c as usize);
            let p = t.perm(f as usize, c as usize);
            let gm = super::poset::apply_mask(p, mask);
            let gi = index[&(g as u32, gm)];
            targets.push(gi as u32);
            for &x in &corners[li] {
                let y = p[x as usize];
                perms.push(corners[gi].iter().position(|&z| z == y).unwrap() as u8);
            }
        }
    }
    let complex = Triangulation::from_raw(lw - 1, targets, perms)?;
    Ok(Link { complex, incarnations, corners })
}
