//! Presents the fundamental group of the central surface of a bisection
//! and checks that each inclusion kills the relators.

use multisect::cells::{extract, Ambient};
use multisect::invariants::{h1_onto, inclusion_epimorphism, pi1_presentation};
use multisect::partition::{scheme_partition, Scheme};
use multisect::subdivide::barycentric;
use multisect::zoo;

fn main() -> multisect::Result<()> {
    let (t, c) = barycentric(&zoo::double_simplex(3)?)?;
    let p = scheme_partition(&t, Scheme::OddBary(&c))?;
    let amb = Ambient::new(&t, &p)?;
    let central = extract(&amb, amb.full())?;
    let g = pi1_presentation(&central)?;
    println!(
        "central surface: {} generators, {} relators, GF(2) rank {}",
        g.generators,
        g.relators.len(),
        g.abelian_rank_gf2()
    );
    for class in 0..=p.k {
        let e = inclusion_epimorphism(&central, class)?;
        let h = h1_onto(&central, class)?;
        println!(
            "class {class}: relators die {}, image rank {}/{}, H1 onto {}",
            e.relators_die, e.abelian_rank, e.target_rank, h.onto
        );
    }
    Ok(())
}
