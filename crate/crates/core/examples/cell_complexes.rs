//! Extracts the cell complex of every label subset of a bisection of the
//! barycentric 3-sphere.

use multisect::cells::{cell_summary, extract, Ambient};
use multisect::partition::{scheme_partition, Scheme};
use multisect::subdivide::barycentric;
use multisect::zoo;

fn main() -> multisect::Result<()> {
    let (t, c) = barycentric(&zoo::double_simplex(3)?)?;
    let p = scheme_partition(&t, Scheme::OddBary(&c))?;
    let amb = Ambient::new(&t, &p)?;
    for mask in 1..=amb.full() {
        let cx = extract(&amb, mask)?;
        let s = cell_summary(&cx);
        println!(
            "labels {:?}: cells {:?} euler {} dim {:?} closed {} cubes {} betti {:?}",
            cx.labels(),
            s.counts,
            s.euler,
            s.dim,
            s.closed,
            s.all_cubes,
            s.betti
        );
    }
    Ok(())
}
