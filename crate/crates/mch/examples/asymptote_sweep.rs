//! Asymptotic solution across ξ at fixed t: a Λ quartet riding at ξ = 1 on top
//! of synthetic radiation, written as CSV.

use mch::asymptotics::evaluate;
use mch::rhfactors::Reflection;
use mch::scattering::DiscreteSpectrum;
use mch::tol::Tolerances;
use mch::validate::LAMBDA_SEED_XI_1;
use mch::C64;

fn main() -> mch::Result<()> {
    let tol = Tolerances::default();
    let t = 200.0;
    let refl = Reflection::synthetic(0.5, 0.3)?;
    let mut s = DiscreteSpectrum::empty();
    s.push_orbit(LAMBDA_SEED_XI_1, C64::new(0.1, 0.0))?;
    let mut rows = Vec::new();
    for k in 0..=60 {
        let y = t * (0.9 + 0.2 * k as f64 / 60.0);
        match evaluate(y, t, &refl, &s, Some(0.5), &tol) {
            Ok(a) => rows.push(a),
            Err(e) => eprintln!("skipped y = {y:.2}: {e}"),
        }
    }
    for a in rows.iter().step_by(10) {
        println!("y = {:7.2} x = {:8.3} q_sol = {:+.5} correction = {:+.2e} ({})", a.y, a.x_map, a.q_leading, a.q_correction, a.error_order.label());
    }
    std::fs::write("asymptote.csv", mch::io::asymptote_csv(&rows))?;
    println!("wrote asymptote.csv ({} rows)", rows.len());
    Ok(())
}
