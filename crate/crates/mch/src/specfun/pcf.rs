//! Parabolic cylinder function D_a(z) for complex order and argument.
//!
//! Near the origin the Weber equation y'' = (z²/4 − a − 1/2) y is summed as a
//! Maclaurin series from the exact initial data D_a(0), D_a'(0). Far out the
//! Poincaré expansion (with its Stokes companion for |arg z| > π/2) is used.
//! In the annulus between them the solution is continued along the ray by
//! local Taylor steps, always in the direction in which D_a grows, so the
//! recessive companion never contaminates the result.

use super::gamma::rgamma;
use crate::error::{Error, Result};
use num_complex::Complex64 as C;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

/// Radius inside which the Maclaurin series is summed directly.
pub const SERIES_RADIUS: f64 = 4.0;
/// Maximum |a| accepted. Relative accuracy is about 1e-12 for |a| <= 3 and
/// drops to about 1e-8 near |a| = 5 through cancellation in the origin data.
pub const MAX_ORDER: f64 = 5.0;
/// Maximum |z| for which accuracy is claimed.
pub const MAX_ARG: f64 = 50.0;

/// Radius beyond which the asymptotic expansion is used for order `a`.
pub fn asymptotic_radius(a: C) -> f64 {
    (2.0 * a.norm() + 6.0).max(8.0)
}

/// D_a(0) and D_a'(0).
fn origin_data(a: C) -> (C, C) {
    let sqrt_pi = PI.sqrt();
    let two = C::new(2.0, 0.0);
    let d0 = two.powc(a / 2.0) * sqrt_pi * rgamma((1.0 - a) / 2.0);
    let d1 = -two.powc((a + 1.0) / 2.0) * sqrt_pi * rgamma(-a / 2.0);
    (d0, d1)
}

/// Taylor expansion of the Weber equation about `z0`, evaluated at `z0 + h`.
/// Returns (y, y').
fn taylor_step(a: C, z0: C, y0: C, dy0: C, h: C) -> (C, C) {
    let q0 = z0 * z0 / 4.0 - a - 0.5;
    let q1 = z0 / 2.0;
    let zero = C::new(0.0, 0.0);
    let (mut c_m2, mut c_m1, mut c_0, mut c_1) = (zero, zero, y0, dy0);
    let mut hn = C::new(1.0, 0.0); // h^n for the current c_0 index n
    let mut y = zero;
    let mut dy = zero;
    let mut quiet = 0;
    for n in 0..600usize {
        let nf = n as f64;
        // contributions of c_n
        let ty = c_0 * hn;
        y += ty;
        if n >= 1 {
            dy += c_0 * nf * hn / h;
        }
        let mag = ty.norm();
        let ref_mag = y.norm().max(1e-300);
        if n > 8 && mag < 1e-18 * ref_mag {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
        // advance: c_{n+2} = (q0 c_n + q1 c_{n-1} + c_{n-2}/4) / ((n+2)(n+1))
        let c_2 = (q0 * c_0 + q1 * c_m1 + 0.25 * c_m2) / ((nf + 2.0) * (nf + 1.0));
        c_m2 = c_m1;
        c_m1 = c_0;
        c_0 = c_1;
        c_1 = c_2;
        hn *= h;
    }
    (y, dy)
}

/// Two-term representation D = e^{l1} s1 + e^{l2} s2 of the Poincaré expansion.
struct Asym {
    l1: C,
    s1: C,
    second: Option<(C, C)>,
}

fn series_main(a: C, z: C) -> C {
    // Σ (-1)^s (-a)_{2s} / (s! (2 z²)^s)
    let z2 = z * z;
    let mut term = C::new(1.0, 0.0);
    let mut sum = term;
    let mut last = f64::INFINITY;
    for s in 0..200usize {
        let sf = s as f64;
        term *= -(a - 2.0 * sf) * (a - 2.0 * sf - 1.0) / (2.0 * (sf + 1.0) * z2);
        let m = term.norm();
        if m > last {
            break;
        }
        sum += term;
        if m < 1e-17 * sum.norm() {
            break;
        }
        last = m;
    }
    sum
}

fn series_stokes(a: C, z: C) -> C {
    // Σ (a+1)_{2s} / (s! (2 z²)^s)
    let z2 = z * z;
    let mut term = C::new(1.0, 0.0);
    let mut sum = term;
    let mut last = f64::INFINITY;
    for s in 0..200usize {
        let sf = s as f64;
        term *= (a + 2.0 * sf + 1.0) * (a + 2.0 * sf + 2.0) / (2.0 * (sf + 1.0) * z2);
        let m = term.norm();
        if m > last {
            break;
        }
        sum += term;
        if m < 1e-17 * sum.norm() {
            break;
        }
        last = m;
    }
    sum
}

fn asymptotic(a: C, z: C) -> Asym {
    let lz = z.ln();
    let l1 = a * lz - z * z / 4.0;
    let s1 = series_main(a, z);
    let phi = z.arg();
    let second = if phi.abs() > FRAC_PI_2 {
        let ra = rgamma(-a);
        if ra.norm() == 0.0 {
            None
        } else {
            let sgn = if phi > 0.0 { 1.0 } else { -1.0 };
            let k = -(2.0 * PI).sqrt() * ra * (C::i() * sgn * PI * a).exp();
            let l2 = (-a - 1.0) * lz + z * z / 4.0 + k.ln();
            Some((l2, series_stokes(a, z)))
        }
    } else {
        None
    };
    Asym { l1, s1, second }
}

impl Asym {
    /// Value scaled by e^{-sigma}.
    fn scaled(&self, sigma: f64) -> C {
        let mut v = (self.l1 - sigma).exp() * self.s1;
        if let Some((l2, s2)) = self.second {
            v += (l2 - sigma).exp() * s2;
        }
        v
    }
    fn log_mag(&self) -> f64 {
        let mut m = self.l1.re + self.s1.norm().max(1e-300).ln();
        if let Some((l2, s2)) = self.second {
            m = m.max(l2.re + s2.norm().max(1e-300).ln());
        }
        m
    }
}

/// Value and derivative of D_a at z, as (e^sigma) * (y, y').
struct Scaled {
    sigma: f64,
    y: C,
    dy: C,
}

impl Scaled {
    fn normalize(&mut self) {
        let m = self.y.norm().max(self.dy.norm());
        if m > 0.0 && m.is_finite() {
            self.sigma += m.ln();
            self.y /= m;
            self.dy /= m;
        }
    }
    fn value(&self) -> (C, C) {
        let f = self.sigma.exp();
        (self.y * f, self.dy * f)
    }
}

fn asymptotic_scaled(a: C, z: C) -> Scaled {
    let da = asymptotic(a, z);
    let dn = asymptotic(a + 1.0, z);
    let sigma = da.log_mag().max(dn.log_mag());
    let y = da.scaled(sigma);
    // D_a' = (z/2) D_a - D_{a+1}
    let dy = z / 2.0 * y - dn.scaled(sigma);
    let mut s = Scaled { sigma, y, dy };
    s.normalize();
    s
}

/// Continue (y, y') along the straight segment from z0 to z1.
fn march(a: C, z0: C, z1: C, mut st: Scaled) -> Scaled {
    let total = z1 - z0;
    let len = total.norm();
    if len == 0.0 {
        return st;
    }
    let dir = total / len;
    let mut s = 0.0;
    while s < len {
        let zc = z0 + dir * s;
        let h_max = (4.0 / zc.norm().max(1.0)).min(0.5);
        let h = h_max.min(len - s);
        let (y, dy) = taylor_step(a, zc, st.y, st.dy, dir * h);
        st.y = y;
        st.dy = dy;
        st.normalize();
        s += h;
    }
    st
}

fn check_range(a: C, z: C) -> Result<()> {
    if !(a.re.is_finite() && a.im.is_finite() && z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("pcf argument"));
    }
    if a.norm() > MAX_ORDER || z.norm() > MAX_ARG {
        return Err(Error::OutOfRange(format!(
            "pcf validated for |a| <= {MAX_ORDER}, |z| <= {MAX_ARG}; got |a| = {}, |z| = {}",
            a.norm(),
            z.norm()
        )));
    }
    Ok(())
}

fn evaluate(a: C, z: C) -> (C, C) {
    let r = z.norm();
    let r_asy = asymptotic_radius(a);
    if r <= SERIES_RADIUS {
        let (d0, d1) = origin_data(a);
        return taylor_step(a, C::new(0.0, 0.0), d0, d1, z);
    }
    if r >= r_asy {
        return asymptotic_scaled(a, z).value();
    }
    let phi = z.arg();
    let dir = z / r;
    let recessive_right = phi.abs() < FRAC_PI_4;
    let recessive_left = phi.abs() > 3.0 * FRAC_PI_4 && rgamma(-a).norm() < 1e-6;
    if recessive_right || recessive_left {
        let anchor = dir * r_asy;
        march(a, anchor, z, asymptotic_scaled(a, anchor)).value()
    } else {
        let (d0, d1) = origin_data(a);
        let start = dir * SERIES_RADIUS;
        let (y, dy) = taylor_step(a, C::new(0.0, 0.0), d0, d1, start);
        let mut st = Scaled { sigma: 0.0, y, dy };
        st.normalize();
        march(a, start, z, st).value()
    }
}

/// D_a(z).
pub fn pcf(a: C, z: C) -> Result<C> {
    check_range(a, z)?;
    Ok(evaluate(a, z).0)
}

/// (D_a(z), D_a'(z)).
pub fn pcf_with_derivative(a: C, z: C) -> Result<(C, C)> {
    check_range(a, z)?;
    Ok(evaluate(a, z))
}

/// The leading Poincaré expansion alone, for overlap checks.
pub fn pcf_asymptotic(a: C, z: C) -> C {
    asymptotic_scaled(a, z).value().0
}

/// Direct continuation from the origin, for overlap checks.
pub fn pcf_from_origin(a: C, z: C) -> C {
    let (d0, d1) = origin_data(a);
    let r = z.norm();
    if r <= SERIES_RADIUS {
        return taylor_step(a, C::new(0.0, 0.0), d0, d1, z).0;
    }
    let start = z / r * SERIES_RADIUS;
    let (y, dy) = taylor_step(a, C::new(0.0, 0.0), d0, d1, start);
    let mut st = Scaled { sigma: 0.0, y, dy };
    st.normalize();
    march(a, start, z, st).value().0
}
