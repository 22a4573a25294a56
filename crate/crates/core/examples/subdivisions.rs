//! Barycentric and stellar subdivision, the Pachner pass and the join.

use multisect::complex::summary;
use multisect::partition::{scheme_partition, Scheme};
use multisect::subdivide::{barycentric, join, pachner_2n_pass, stellar_facet};
use multisect::zoo;

fn main() -> multisect::Result<()> {
    let t = zoo::double_simplex(3)?;
    let (b, carriers) = barycentric(&t)?;
    println!("barycentric: {} -> {} facets, euler {}", t.num_facets(), b.num_facets(), summary(&b).euler);
    let dims: Vec<usize> = (0..=3).map(|d| carriers.dims.iter().filter(|&&x| x as usize == d).count()).collect();
    println!("vertices by carrier dimension {dims:?}");

    let s = stellar_facet(&t, 0)?;
    println!("stellar: {} facets, {} vertices", s.num_facets(), s.vertex_classes().count());

    let (b4, c4) = barycentric(&zoo::double_simplex(4)?)?;
    let p = scheme_partition(&b4, Scheme::EvenBary(&c4))?;
    let (q, _) = pachner_2n_pass(&b4, &p)?;
    println!("pachner pass: {} -> {} facets, euler {}", b4.num_facets(), q.num_facets(), summary(&q).euler);

    let circle = zoo::simplex_boundary(1)?;
    let j = join(&circle, &circle)?;
    println!("circle * circle: dim {} betti {:?}", j.dim(), summary(&j).betti);
    Ok(())
}
