use super::Triangulation;
use crate::perm;

#[derive(Debug, Clone)]
pub struct DoubleCover {
    pub cover: Triangulation,
    /// Deck involution on facets: `deck[j]` is the other lift of the same
    /// base facet.
    pub deck: Vec<u32>,
}

/// Orientation double cover. Facet `f` lifts to `f` (sign +1) and `f + m`
/// (sign -1); a gluing by `pi` connects sign `s` to sign `-s * sign(pi)`.
pub fn orientation_double_cover(t: &Triangulation) -> DoubleCover {
    let w = t.dim() + 1;
    let m = t.num_facets();
    let mut targets = Vec::with_capacity(2 * m * w);
    let mut perms = Vec::with_capacity(2 * m * w * w);
    for s in 0..2 {
        let sign: i8 = if s == 0 { 1 } else { -1 };
        for f in 0..m {
            for i in 0..w {
                let p = t.perm(f, i);
                let s2 = -sign * perm::sign(p);
                let lift = if s2 == 1 { 0 } else { m };
                targets.push((t.target(f, i) + lift) as u32);
                perms.extend_from_slice(p);
            }
        }
    }
    let mut cover = Triangulation::from_raw(t.dim(), targets, perms)
        .expect("lift of a valid triangulation is valid");
    if let Some(c) = t.coordinate_labels() {
        cover.set_coordinate_labels(Some([c, c].concat()));
    }
    let deck = (0..2 * m).map(|j| ((j + m) % (2 * m)) as u32).collect();
    DoubleCover { cover, deck }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{summary, FacePoset};
    use crate::zoo;

    #[test]
    fn projective_four_space_lifts_to_sphere() {
        let base = zoo::cross_projective(4).unwrap();
        let dc = orientation_double_cover(&base);
        assert_eq!(dc.cover.num_facets(), 32);
        let s = summary(&dc.cover);
        assert!(s.connected && s.orientable);
        assert_eq!(s.euler, 2);
        let sphere = FacePoset::new(&zoo::cross_sphere(4).unwrap());
        assert_eq!(s.counts, sphere.counts());
    }

    #[test]
    fn orientable_bases_split() {
        for base in [zoo::double_simplex(3).unwrap(), zoo::cross_projective(3).unwrap()] {
            let dc = orientation_double_cover(&base);
            assert!(!dc.cover.is_connected());
            assert_eq!(dc.cover.num_facets(), 2 * base.num_facets());
        }
    }
}
