//! Full report for a trisection of the 4-sphere, including the Euler
//! characteristic identity relating the genera.

use multisect::invariants::{euler_trisection_check, multisection_report};
use multisect::partition::{scheme_partition, Scheme};
use multisect::subdivide::{barycentric, pachner_2n_pass};
use multisect::zoo;

fn main() -> multisect::Result<()> {
    let (t, c) = barycentric(&zoo::double_simplex(4)?)?;
    let p = scheme_partition(&t, Scheme::EvenBary(&c))?;
    let (t, p) = pachner_2n_pass(&t, &p)?;
    let r = multisection_report(&t, &p)?;
    println!("genera {:?}, central surface {:?}", r.genera, r.surface);
    for s in &r.spines {
        println!("  {:?}: collapsed dim {:?} bound {}", s.labels, s.collapsed_dim, s.multisection_bound);
    }
    let check = euler_trisection_check(&r)?;
    println!(
        "euler {} = 2 + {} - {:?}: {}",
        check.euler, check.surface_genus, check.genera, check.holds
    );
    Ok(())
}
