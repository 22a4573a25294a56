//! Runs the validator on a good and a bad partition and prints the
//! subset table and diagnostics.

use multisect::partition::{scheme_partition, validate, Scheme, ValidationReport};
use multisect::subdivide::barycentric;
use multisect::zoo;

fn show(name: &str, r: &ValidationReport) {
    println!("{name}: multisection {} generalized {}", r.supports_multisection, r.supports_generalized);
    for s in &r.subsets {
        println!("  {:?} cells {:?} connected {} collapsed dim {:?}", s.labels, s.counts, s.connected, s.collapsed_dim);
    }
    for d in &r.diagnostics {
        println!("  diagnostic: {d}");
    }
}

fn main() -> multisect::Result<()> {
    let (t, c) = barycentric(&zoo::double_simplex(3)?)?;
    let p = scheme_partition(&t, Scheme::OddBary(&c))?;
    show("S3 odd-bary", &validate(&t, &p)?);

    let (t, c) = barycentric(&zoo::double_simplex(2)?)?;
    let p = scheme_partition(&t, Scheme::EvenBary(&c))?;
    show("S2 even-bary", &validate(&t, &p)?);
    Ok(())
}
