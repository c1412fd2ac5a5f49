//! Jost solutions of the conjugated x-equation Ψ̃_x = X₂Ψ̃ − ik m̆ [σ₃, Ψ̃].

use super::ode::{dopri5, V2};
use super::profile::InitialProfile;
use crate::error::{Error, Result};
use nalgebra::Matrix2;
use num_complex::Complex64 as C;

/// Minimum distance from z to {0, ±1}.
pub const EXCLUSION: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Normalized at x → −∞.
    Minus,
    /// Normalized at x → +∞.
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    First,
    Second,
}

pub fn check_parameter(z: C) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("spectral parameter"));
    }
    let d = z.norm().min((z - 1.0).norm()).min((z + 1.0).norm());
    if d < EXCLUSION {
        return Err(Error::SingularParameter(z));
    }
    Ok(())
}

/// Coefficients of X₂/(m̆ − 1) = [[β, α], [−α, −β]] and k = (z − 1/z)/4.
#[derive(Debug, Clone, Copy)]
struct Coeffs {
    alpha: C,
    beta: C,
    k: C,
}

impl Coeffs {
    fn new(z: C) -> Coeffs {
        let z2 = z * z;
        Coeffs {
            alpha: C::i() * (z2 + 1.0) / (2.0 * (z2 - 1.0)),
            beta: -C::i() * z / (z2 - 1.0),
            k: (z - 1.0 / z) / 4.0,
        }
    }
}

fn rhs(profile: &InitialProfile, c: Coeffs, col: Column) -> impl Fn(f64, &V2) -> V2 + '_ {
    move |x, v| {
        let e = profile.excess(x);
        let m = 1.0 + e;
        let (b, a) = (c.beta * e, c.alpha * e);
        let mut out = [b * v[0] + a * v[1], -a * v[0] - b * v[1]];
        let shift = 2.0 * C::i() * c.k * m;
        match col {
            Column::First => out[1] += shift * v[1],
            Column::Second => out[0] -= shift * v[0],
        }
        out
    }
}

fn unit(col: Column) -> V2 {
    let (o, z) = (C::new(1.0, 0.0), C::new(0.0, 0.0));
    match col {
        Column::First => [o, z],
        Column::Second => [z, o],
    }
}

/// A single Jost column, integrated from its normalization end to each of the
/// requested points (which must be ordered away from that end).
pub fn jost_column(
    profile: &InitialProfile,
    z: C,
    side: Side,
    col: Column,
    xs: &[f64],
    tol: f64,
) -> Result<Vec<V2>> {
    check_parameter(z)?;
    let c = Coeffs::new(z);
    let f = rhs(profile, c, col);
    let l = profile.half_width;
    let mut x = match side {
        Side::Minus => -l,
        Side::Plus => l,
    };
    let mut v = unit(col);
    let mut out = Vec::with_capacity(xs.len());
    for &target in xs {
        let ordered = match side {
            Side::Minus => target >= x,
            Side::Plus => target <= x,
        };
        if !ordered || target.abs() > l {
            return Err(Error::Config(format!("evaluation point {target} out of order or outside [-L, L]")));
        }
        v = dopri5(&f, x, target, v, tol)?;
        x = target;
        out.push(v);
    }
    Ok(out)
}

/// Both columns of Ψ̃_± on a grid. For nonreal z only the columns analytic
/// in the half plane of z (Ψ̃₋,₁ and Ψ̃₊,₂ in ℂ⁺) are meaningful.
pub fn jost_solve(
    profile: &InitialProfile,
    z: C,
    side: Side,
    xs: &[f64],
    tol: f64,
) -> Result<Vec<Matrix2<C>>> {
    let c1 = jost_column(profile, z, side, Column::First, xs, tol)?;
    let c2 = jost_column(profile, z, side, Column::Second, xs, tol)?;
    Ok(c1
        .iter()
        .zip(&c2)
        .map(|(a, b)| Matrix2::new(a[0], b[0], a[1], b[1]))
        .collect())
}

/// det[u, v] for two column vectors.
pub fn wronskian(u: &V2, v: &V2) -> C {
    u[0] * v[1] - u[1] * v[0]
}
