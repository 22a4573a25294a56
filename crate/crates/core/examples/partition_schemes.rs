//! Labels the vertices of barycentric subdivisions with each scheme and
//! prints the label multiplicities found on facets.

use std::collections::BTreeMap;

use multisect::partition::{parse_blocks, scheme_partition, Scheme, VertexPartition};
use multisect::subdivide::barycentric;
use multisect::{zoo, Triangulation};

fn profiles(name: &str, t: &Triangulation, p: &VertexPartition) {
    let mut seen: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    for pr in p.profiles(t) {
        *seen.entry(pr).or_default() += 1;
    }
    println!("{name}: k {} sizes {:?} profiles {seen:?}", p.k, p.sizes());
}

fn main() -> multisect::Result<()> {
    let (t3, c3) = barycentric(&zoo::double_simplex(3)?)?;
    profiles("odd-bary", &t3, &scheme_partition(&t3, Scheme::OddBary(&c3))?);

    let (t4, c4) = barycentric(&zoo::double_simplex(4)?)?;
    profiles("even-bary", &t4, &scheme_partition(&t4, Scheme::EvenBary(&c4))?);

    let parent = barycentric(&zoo::double_simplex(2)?)?.0;
    let colors = parent.dual_graph().coloring.expect("barycentric subdivisions are two-colorable");
    let (t2, c2) = barycentric(&parent)?;
    profiles("even-npc", &t2, &scheme_partition(&t2, Scheme::EvenNpc { carriers: &c2, colors: &colors })?);

    let s5 = zoo::double_simplex(5)?;
    profiles("pairs", &s5, &scheme_partition(&s5, Scheme::Pairs(&parse_blocks("0,1/2,3/4,5")?))?);
    Ok(())
}
