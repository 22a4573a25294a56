//! Builds the standard triangulations and prints their face counts and
//! GF(2) Betti numbers.

use multisect::complex::summary;
use multisect::zoo;

fn main() -> multisect::Result<()> {
    for n in 2..=4 {
        let family = [
            ("double simplex", zoo::double_simplex(n)?),
            ("simplex boundary", zoo::simplex_boundary(n)?),
            ("cross sphere", zoo::cross_sphere(n)?),
            ("cross projective", zoo::cross_projective(n)?),
        ];
        for (name, t) in family {
            let s = summary(&t);
            println!(
                "n={n} {name:<17} facets {:>3} faces {:?} euler {:>2} betti {:?} orientable {}",
                t.num_facets(),
                s.counts,
                s.euler,
                s.betti,
                s.orientable
            );
        }
    }
    Ok(())
}
