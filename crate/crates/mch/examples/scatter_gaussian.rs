//! Direct scattering of a gaussian bump: unimodularity, trace formula and
//! the JSON interchange file.

use mch::scattering::{a_at_i, admissible_grid, scattering_matrix, trace_value, DiscreteSpectrum, InitialProfile};

fn main() -> mch::Result<()> {
    let tol = 1e-10;
    let p = InitialProfile::gaussian(0.3, 1.0, 0.0)?;
    let grid = admissible_grid(-5.0, 5.0, 200);
    let d = scattering_matrix(&p, &grid, DiscreteSpectrum::empty(), tol)?;
    println!("max ||a|^2 - |b|^2 - 1| = {:.2e}", d.validation.unimodularity_max);
    println!("a(i) = {:.10}, trace value {:.10}", a_at_i(&p, tol)?.re, trace_value(&p, tol)?);
    let peak = d.r.iter().zip(&d.z_grid).max_by(|a, b| a.0.norm().total_cmp(&b.0.norm())).unwrap();
    println!("max |r| = {:.4} at z = {:.3}", peak.0.norm(), peak.1);
    let json = mch::io::scattering_to_json(&d, Some(&p))?;
    std::fs::write("gaussian.json", serde_json::to_string_pretty(&json)?)?;
    println!("wrote gaussian.json");
    Ok(())
}
