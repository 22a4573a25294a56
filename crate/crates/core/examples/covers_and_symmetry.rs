//! Orientation double cover, labeling cover and the symmetric
//! representation of a twisted two-facet 3-manifold.

use multisect::complex::{io, orientation_double_cover, summary};
use multisect::partition::{labeling_cover, parse_blocks, symmetric_representation, twisted_admissible};
use multisect::zoo;

const TWIST: &str = "dim 3
facets 2
0 1 0 1 2 3
1 1 0 1 2 3
2 1 1 0 3 2
3 1 1 0 3 2
0 0 0 1 2 3
1 0 0 1 2 3
2 0 1 0 3 2
3 0 1 0 3 2
";

fn main() -> multisect::Result<()> {
    let rp2 = zoo::cross_projective(2)?;
    let cover = orientation_double_cover(&rp2).cover;
    println!("RP2 euler {} -> cover euler {} orientable {}", summary(&rp2).euler, summary(&cover).euler, summary(&cover).orientable);

    let t = io::load(TWIST)?;
    let r = symmetric_representation(&t)?;
    println!("twist: trivial {} generators {:?} orbits {:?}", r.trivial, r.generators, r.orbits);
    for blocks in ["0,2/1,3", "0/1,2,3"] {
        let a = twisted_admissible(&t, &parse_blocks(blocks)?, &r)?;
        println!("  blocks {blocks}: admissible {} {:?}", a.admissible, a.diagnostics);
    }
    let lifted = labeling_cover(&t)?;
    println!("labeling cover: {} facets, trivial {}", lifted.num_facets(), symmetric_representation(&lifted)?.trivial);
    Ok(())
}
