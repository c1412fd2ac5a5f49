//! Adaptive Gauss–Legendre quadrature and principal-value-free Cauchy integrals.

use crate::error::{Error, Result};
use num_complex::Complex64 as C;
use std::sync::OnceLock;

const ORDER: usize = 20;

fn nodes() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| gauss_legendre(ORDER))
}

/// Nodes and weights on [-1, 1] by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

fn rule(f: &dyn Fn(f64) -> C, a: f64, b: f64) -> C {
    let (m, h) = ((a + b) / 2.0, (b - a) / 2.0);
    let mut s = C::new(0.0, 0.0);
    for &(x, w) in nodes() {
        s += w * f(m + h * x);
    }
    s * h
}

/// ∫_a^b f on a finite interval, adaptive bisection to absolute+relative `tol`.
pub fn integrate<F: Fn(f64) -> C>(f: F, a: f64, b: f64, tol: f64) -> Result<C> {
    integrate_dyn(&f, a, b, tol)
}

fn integrate_dyn(f: &dyn Fn(f64) -> C, a: f64, b: f64, tol: f64) -> Result<C> {
    if a == b {
        return Ok(C::new(0.0, 0.0));
    }
    if !(a.is_finite() && b.is_finite()) {
        return integrate_infinite(f, a, b, tol);
    }
    let whole = rule(f, a, b);
    // roundoff floor relative to the whole integral, not to each piece
    let floor = 1e-15 * whole.norm();
    let v = adapt(f, a, b, whole, tol, floor, 0)?;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite("quadrature value"))
    }
}

fn adapt(f: &dyn Fn(f64) -> C, a: f64, b: f64, whole: C, tol: f64, floor: f64, depth: u32) -> Result<C> {
    let m = (a + b) / 2.0;
    let l = rule(f, a, m);
    let r = rule(f, m, b);
    let both = l + r;
    let err = (both - whole).norm();
    if err <= tol.max(floor).max(1e-15 * both.norm()) || depth >= 40 {
        return Ok(both);
    }
    Ok(adapt(f, a, m, l, tol / 2.0, floor, depth + 1)? + adapt(f, m, b, r, tol / 2.0, floor, depth + 1)?)
}

/// Half-line or full-line integrals through s = a + u/(1-u) and its mirrors.
fn integrate_infinite(f: &dyn Fn(f64) -> C, a: f64, b: f64, tol: f64) -> Result<C> {
    match (a.is_finite(), b.is_finite()) {
        (true, false) => integrate_dyn(&
            |u| {
                if u >= 1.0 {
                    return C::new(0.0, 0.0);
                }
                let d = 1.0 - u;
                f(a + u / d) / (d * d)
            },
            0.0,
            1.0,
            tol,
        ),
        (false, true) => integrate_dyn(&
            |u| {
                if u >= 1.0 {
                    return C::new(0.0, 0.0);
                }
                let d = 1.0 - u;
                f(b - u / d) / (d * d)
            },
            0.0,
            1.0,
            tol,
        ),
        (false, false) => {
            Ok(integrate_infinite(f, f64::NEG_INFINITY, 0.0, tol / 2.0)?
                + integrate_infinite(f, 0.0, f64::INFINITY, tol / 2.0)?)
        }
        (true, true) => integrate_dyn(f, a, b, tol),
    }
}

/// ∫_a^b f(s)/(s - z) ds for z off the interval, with the log singularity
/// removed analytically so points close to the real axis stay accurate.
pub fn cauchy<F: Fn(f64) -> C>(f: F, a: f64, b: f64, z: C, tol: f64) -> Result<C> {
    cauchy_dyn(&f, a, b, z, tol)
}

fn cauchy_dyn(f: &dyn Fn(f64) -> C, a: f64, b: f64, z: C, tol: f64) -> Result<C> {
    if a == b {
        return Ok(C::new(0.0, 0.0));
    }
    let on_line = z.im == 0.0 && z.re >= a && z.re <= b;
    if on_line {
        return Err(Error::Proximity { z, dist: 0.0 });
    }
    if !(a.is_finite() && b.is_finite()) {
        // the tail is smooth; subtract only on a finite core containing Re z
        let lo = if a.is_finite() { a } else { z.re.min(b) - 10.0 };
        let hi = if b.is_finite() { b } else { z.re.max(a) + 10.0 };
        let core = cauchy_dyn(f, lo, hi, z, tol / 2.0)?;
        let g = |s: f64| f(s) / (s - z);
        let mut tails = C::new(0.0, 0.0);
        if !a.is_finite() {
            tails += integrate(g, f64::NEG_INFINITY, lo, tol / 4.0)?;
        }
        if !b.is_finite() {
            tails += integrate(g, hi, f64::INFINITY, tol / 4.0)?;
        }
        return Ok(core + tails);
    }
    let s_star = z.re.clamp(a, b);
    let f_star = f(s_star);
    let smooth = integrate(
        |s| {
            let d = s - z;
            if d.norm() == 0.0 {
                C::new(0.0, 0.0)
            } else {
                (f(s) - f_star) / d
            }
        },
        a,
        b,
        tol,
    )?;
    Ok(smooth + f_star * ((b - z) / (a - z)).ln())
}
