//! Checks the link condition on two central cube complexes: the antipodal
//! quotient of the octahedral 3-sphere passes, the doubled 5-simplex fails.

use multisect::cells::{extract, npc_check, vertex_link, Ambient};
use multisect::partition::{parse_blocks, scheme_partition, Scheme};
use multisect::{zoo, Triangulation};

fn check(name: &str, t: &Triangulation, blocks: &str) -> multisect::Result<()> {
    let p = scheme_partition(t, Scheme::Pairs(&parse_blocks(blocks)?))?;
    let amb = Ambient::new(t, &p)?;
    let central = extract(&amb, amb.full())?;
    let link = vertex_link(&central, 0)?;
    let r = npc_check(&central)?;
    println!(
        "{name}: central cells {:?}, link of vertex 0 {:?} simplicial {}, degrees {:?}, npc {}",
        central.counts(),
        link.counts(),
        link.simplicial,
        r.degrees,
        r.pass
    );
    if let Some(f) = &r.failure {
        println!("  failure at {}: {}", f.vertex, f.reason);
    }
    Ok(())
}

fn main() -> multisect::Result<()> {
    check("RP3", &zoo::cross_projective(3)?, "0,1/2,3")?;
    check("S5", &zoo::double_simplex(5)?, "0,1/2,3/4,5")?;
    Ok(())
}
