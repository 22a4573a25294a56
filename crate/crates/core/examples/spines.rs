//! Collapses each handlebody of a trisection of the 4-sphere to a graph
//! and reads off its genus.

use multisect::cells::{collapse, extract, graph_genus, subset_mask, Ambient};
use multisect::partition::{scheme_partition, Scheme};
use multisect::subdivide::{barycentric, pachner_2n_pass};
use multisect::zoo;

fn main() -> multisect::Result<()> {
    let (t, c) = barycentric(&zoo::double_simplex(4)?)?;
    let p = scheme_partition(&t, Scheme::EvenBary(&c))?;
    let (t, p) = pachner_2n_pass(&t, &p)?;
    let amb = Ambient::new(&t, &p)?;
    for label in 0..=p.k {
        let cx = extract(&amb, subset_mask(&[label]))?;
        let r = collapse(&cx);
        println!(
            "label {label}: cells {:?} -> {:?} after {} collapses, genus {}",
            cx.counts(),
            r.counts,
            r.steps,
            graph_genus(&cx)?
        );
    }
    Ok(())
}
