//! Polynomial roots via companion-matrix eigenvalues with Newton polishing.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64 as C;

/// Evaluate p and p' at z; coefficients are leading-first.
pub fn horner(coeffs: &[C], z: C) -> (C, C) {
    let mut p = C::new(0.0, 0.0);
    let mut dp = C::new(0.0, 0.0);
    for &c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of the polynomial with leading-first coefficients.
pub fn poly_roots(coeffs: &[C]) -> Result<Vec<C>> {
    let first = coeffs
        .iter()
        .position(|c| c.norm() > 0.0)
        .ok_or(Error::DegeneratePolynomial)?;
    let c = &coeffs[first..];
    let n = c.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = c[0];
    let mut m = DMatrix::<C>::zeros(n, n);
    for j in 0..n {
        m[(0, j)] = -c[j + 1] / lead;
    }
    for i in 1..n {
        m[(i, i - 1)] = C::new(1.0, 0.0);
    }
    // complex Schur form is upper triangular; eigenvalues sit on the diagonal
    let mut roots: Vec<C> = match m.try_schur(f64::EPSILON, 2_000) {
        Some(s) => {
            let (_, t) = s.unpack();
            (0..n).map(|i| t[(i, i)]).collect()
        }
        None => aberth(c).ok_or(Error::EigenFailure(n))?,
    };
    for r in roots.iter_mut() {
        for _ in 0..8 {
            let (p, dp) = horner(c, *r);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            *r -= step;
            if step.norm() <= 1e-16 * r.norm().max(1.0) {
                break;
            }
        }
    }
    Ok(roots)
}

/// Aberth–Ehrlich simultaneous iteration, the fallback when QR stalls.
fn aberth(c: &[C]) -> Option<Vec<C>> {
    let n = c.len() - 1;
    // Cauchy bound for the initial circle
    let bound = 1.0 + c[1..].iter().map(|x| (x / c[0]).norm()).fold(0.0, f64::max);
    let mut z: Vec<C> = (0..n)
        .map(|k| C::from_polar(bound, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64))
        .collect();
    for _ in 0..500 {
        let mut worst = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: C = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (1.0 - ratio * s);
            z[i] -= w;
            worst = worst.max(w.norm() / z[i].norm().max(1.0));
        }
        if worst < 1e-15 {
            return Some(z);
        }
    }
    z.iter().all(|v| v.re.is_finite() && v.im.is_finite()).then_some(z)
}
