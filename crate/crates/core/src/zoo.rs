//! Example manifolds.

use crate::complex::{Gluing, Triangulation, VertexIds, MAX_DIM};
use crate::error::{Error, Result};
use crate::perm;

fn check(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_DIM {
        return Err(Error::Invalid(format!("dimension {n} outside {min}..={MAX_DIM}")));
    }
    Ok(())
}

fn corner_coords(m: usize, w: usize) -> Vec<u8> {
    (0..m).flat_map(|_| 0..w as u8).collect()
}

/// Two n-simplices glued by the identity along every face: the sphere with
/// n + 1 vertex classes. Corner `i` carries coordinate label `i`.
pub fn double_simplex(n: usize) -> Result<Triangulation> {
    check(n, 1)?;
    let w = n + 1;
    let facets = (0..2)
        .map(|f| (0..w).map(|_| Gluing::new(1 - f, perm::identity(w))).collect())
        .collect();
    let mut t = Triangulation::from_gluings(n, facets)?;
    t.set_coordinate_labels(Some(corner_coords(2, w)));
    Ok(t)
}

/// Boundary of the (n+1)-crosspolytope. Facet `s` is the orthant whose
/// sign bit `i` is set when coordinate `i` is negative; its corner `i` is
/// the vertex `+e_i` (id `2i`) or `-e_i` (id `2i + 1`).
pub fn cross_sphere(n: usize) -> Result<Triangulation> {
    check(n, 1)?;
    let w = n + 1;
    let m = 1usize << w;
    let names = (0..2 * w).map(|v| v.to_string()).collect();
    let corners = (0..m)
        .flat_map(|s| (0..w).map(move |i| (2 * i + (s >> i & 1)) as u32))
        .collect();
    let mut t = Triangulation::from_vertex_indices(n, VertexIds { names, corners })?;
    t.set_coordinate_labels(Some(corner_coords(m, w)));
    Ok(t)
}

/// Antipodal quotient of [`cross_sphere`]: one facet per orthant with
/// nonnegative coordinate 0, indexed by the sign bits of coordinates
/// `1..=n`. Every gluing is the identity on corners.
pub fn cross_projective(n: usize) -> Result<Triangulation> {
    check(n, 2)?;
    let w = n + 1;
    let m = 1usize << n;
    let all = (1u32 << w) - 1;
    let facets = (0..m)
        .map(|f| {
            let s = (f as u32) << 1;
            (0..w)
                .map(|i| {
                    let mut t = s ^ (1 << i);
                    if t & 1 == 1 {
                        t ^= all;
                    }
                    Gluing::new((t >> 1) as usize, perm::identity(w))
                })
                .collect()
        })
        .collect();
    let mut t = Triangulation::from_gluings(n, facets)?;
    t.set_coordinate_labels(Some(corner_coords(m, w)));
    Ok(t)
}

/// Boundary of the (n+1)-simplex in vertex format.
pub fn simplex_boundary(n: usize) -> Result<Triangulation> {
    check(n, 1)?;
    let facets: Vec<Vec<String>> = (0..n + 2)
        .map(|skip| (0..n + 2).filter(|&v| v != skip).map(|v| v.to_string()).collect())
        .collect();
    Triangulation::from_vertex_facets(n, &facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{summary, FacePoset};

    #[test]
    fn doubled_simplices() {
        for n in 1..=6 {
            let t = double_simplex(n).unwrap();
            let s = summary(&t);
            assert_eq!(s.euler, 1 + if n % 2 == 0 { 1 } else { -1 });
            assert!(s.pseudo_manifold && s.orientable);
            assert_eq!(t.vertex_classes().count(), n + 1);
        }
        assert!(double_simplex(0).is_err());
    }

    #[test]
    fn crosspolytope_spheres() {
        let t = cross_sphere(1).unwrap();
        assert_eq!((t.num_facets(), t.vertex_classes().count()), (4, 4));
        let t = cross_sphere(3).unwrap();
        assert_eq!((t.num_facets(), t.vertex_classes().count()), (16, 8));
        assert!(summary(&t).codim2_degrees.iter().all(|&d| d == 4));
        let t = cross_sphere(4).unwrap();
        assert_eq!((t.num_facets(), t.vertex_classes().count()), (32, 10));
        assert_eq!(summary(&t).euler, 2);
    }

    #[test]
    fn projective_spaces() {
        for (n, chi, orientable) in [(2, 1, false), (3, 0, true), (4, 1, false), (5, 0, true)] {
            let t = cross_projective(n).unwrap();
            assert_eq!(t.num_facets(), 1 << n);
            assert_eq!(t.vertex_classes().count(), n + 1);
            let s = summary(&t);
            assert_eq!((s.euler, s.orientable), (chi, orientable));
            assert!(s.even);
        }
        assert!(cross_projective(1).is_err());
    }

    #[test]
    fn simplex_boundary_counts() {
        let p = FacePoset::new(&simplex_boundary(3).unwrap());
        assert_eq!(p.counts(), vec![5, 10, 10, 5]);
    }
}
