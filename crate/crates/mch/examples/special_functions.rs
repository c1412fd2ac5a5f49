//! Complex Gamma, parabolic cylinder functions and polynomial roots.

use mch::specfun::{gamma, pcf, poly_roots};
use mch::C64;

fn main() -> mch::Result<()> {
    for w in [C64::new(0.5, 0.0), C64::new(1.0, 2.0), C64::new(-2.5, 0.3)] {
        println!("Gamma({w}) = {}", gamma(w)?);
    }
    // D_a(z) for a purely imaginary order, as used by the local model
    let a = C64::new(0.0, 0.25);
    for z in [C64::new(0.5, 0.5), C64::new(3.0, -1.0), C64::new(-8.0, 2.0)] {
        println!("D_{a}({z}) = {}", pcf(a, z)?);
    }
    // z^3 - 1
    let roots = poly_roots(&[C64::new(-1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)])?;
    println!("cube roots of unity: {roots:?}");
    Ok(())
}
