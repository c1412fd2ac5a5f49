//! Dormand–Prince 5(4) integrator for complex two-component linear systems.

use crate::error::{Error, Result};
use num_complex::Complex64 as C;

pub type V2 = [C; 2];

const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const CN: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
// fifth-order weights are the last row of A; these are the error weights (b5 − b4)
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

fn axpy(y: &V2, h: f64, ks: &[V2], coef: &[f64]) -> V2 {
    let mut out = *y;
    for (k, &c) in ks.iter().zip(coef) {
        if c != 0.0 {
            out[0] += h * c * k[0];
            out[1] += h * c * k[1];
        }
    }
    out
}

/// Integrate y' = f(x, y) from x0 to x1 (either direction) with mixed
/// absolute/relative local error `tol`.
pub fn dopri5<F: Fn(f64, &V2) -> V2>(f: F, x0: f64, x1: f64, y0: V2, tol: f64) -> Result<V2> {
    let span = x1 - x0;
    if span == 0.0 {
        return Ok(y0);
    }
    let dir = span.signum();
    let mut x = x0;
    let mut y = y0;
    let mut h = dir * (span.abs() / 100.0).min(0.1);
    let mut k1 = f(x, &y);
    let mut steps = 0usize;
    while (x1 - x) * dir > 0.0 {
        if steps > 2_000_000 {
            return Err(Error::Ode(format!("step budget exhausted at x = {x}")));
        }
        steps += 1;
        if (x + h - x1) * dir > 0.0 {
            h = x1 - x;
        }
        let mut ks: Vec<V2> = Vec::with_capacity(7);
        ks.push(k1);
        for s in 0..5 {
            let ys = axpy(&y, h, &ks, &A[s][..=s]);
            ks.push(f(x + CN[s] * h, &ys));
        }
        let y5 = axpy(&y, h, &ks, &A[5]);
        let k7 = f(x + h, &y5);
        ks.push(k7);
        let mut err = 0.0f64;
        for c in 0..2 {
            let mut e = C::new(0.0, 0.0);
            for (k, &w) in ks.iter().zip(E.iter()) {
                e += w * k[c];
            }
            let scale = tol * (1.0 + y[c].norm().max(y5[c].norm()));
            err = err.max((h * e).norm() / scale);
        }
        if !err.is_finite() {
            return Err(Error::Ode(format!("non-finite state near x = {x}")));
        }
        if err <= 1.0 {
            x += h;
            y = y5;
            k1 = k7;
        }
        let fac = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        h *= fac;
        if h.abs() < 1e-14 * (1.0 + x.abs()) {
            return Err(Error::Ode(format!("step size underflow at x = {x}")));
        }
    }
    Ok(y)
}
