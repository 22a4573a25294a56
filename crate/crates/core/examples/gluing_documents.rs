//! Saves a triangulation in both text formats and loads it back.

use multisect::complex::{io, isomorphism_signature};
use multisect::zoo;

fn main() -> multisect::Result<()> {
    let t = zoo::cross_sphere(2)?;
    let vertex = io::save_vertex(&t).expect("vertex identifiers");
    let gluing = io::save_gluing(&t);
    println!("vertex format:\n{vertex}");
    println!("gluing format:\n{gluing}");
    let a = io::load(&vertex)?;
    let b = io::load(&gluing)?;
    println!("signature {}", isomorphism_signature(&t)?);
    assert_eq!(isomorphism_signature(&a)?, isomorphism_signature(&b)?);
    println!("both documents describe the same triangulation");
    Ok(())
}
