//! Writes the JSON export of a bisected 3-sphere to standard output.

use multisect::cli::export_json;
use multisect::cli::format::Bundle;
use multisect::partition::{scheme_partition, Scheme};
use multisect::subdivide::barycentric;
use multisect::zoo;

fn main() -> multisect::Result<()> {
    let (t, c) = barycentric(&zoo::double_simplex(3)?)?;
    let p = scheme_partition(&t, Scheme::OddBary(&c))?;
    let b = Bundle { partition: Some(p), carriers: Some(c), ..Bundle::new(t) };
    let v = export_json(&b)?;
    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
    Ok(())
}
