//! Stationary points of θ across the four regions and the Im θ sign field.

use mch::phase::{im_theta_field, stationary_points, verify_decay_bounds, FieldGrid};

fn main() -> mch::Result<()> {
    for xi in [3.0, 1.0, -0.125, -1.0] {
        let p = stationary_points(xi)?;
        println!("xi = {xi:>6}: {:<5} points {:?}", p.region.name(), p.points);
        println!("             curvatures {:?}", p.curvatures);
        let r = verify_decay_bounds(xi, 0.1, 1000, 7)?;
        println!("             decay bounds {}", if r.passed { "hold" } else { "FAIL" });
    }
    let cells = im_theta_field(1.0, FieldGrid { re: (-3.0, 3.0), im: (-3.0, 3.0), h: 0.05 })?;
    let positive = cells.iter().filter(|c| c.1 > 0.0).count();
    println!("Im theta > 0 on {positive} of {} grid nodes at xi = 1", cells.len());
    std::fs::write("phase_field.svg", mch::io::svg_heatmap("Im theta, xi = 1", &cells, 0.05))?;
    println!("wrote phase_field.svg");
    Ok(())
}
