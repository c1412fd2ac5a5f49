//! Initial momentum profiles m̆₀(x) on a nonzero background (m̆₀ → 1).

use crate::error::{Error, Result};
use crate::specfun::{integrate, CubicSpline};
use num_complex::Complex64 as C;
use serde::{Deserialize, Serialize};

/// Shape of m̆₀(x) − 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Shape {
    Gaussian { amplitude: f64, width: f64, center: f64 },
    Sech2 { amplitude: f64, width: f64 },
    Table { x: Vec<f64>, value: Vec<f64> },
}

/// m̆₀ together with its truncation half-width L.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InitialProfile {
    pub shape: Shape,
    pub half_width: f64,
    #[serde(skip)]
    spline: Option<CubicSpline>,
}

impl InitialProfile {
    pub fn gaussian(amplitude: f64, width: f64, center: f64) -> Result<Self> {
        Self::new(Shape::Gaussian { amplitude, width, center }, 15.0 * width.max(1.0) + center.abs())
    }

    pub fn sech2(amplitude: f64, width: f64) -> Result<Self> {
        Self::new(Shape::Sech2 { amplitude, width }, 18.0 * width.max(1.0))
    }

    /// Tabulated m̆₀ − 1 on strictly increasing nodes; the table range is the
    /// truncated domain.
    pub fn table(x: Vec<f64>, value: Vec<f64>) -> Result<Self> {
        if x.len() < 4 || x.len() != value.len() {
            return Err(Error::Profile("table needs at least 4 (x, value) pairs of equal length".into()));
        }
        let l = x[0].abs().min(x[x.len() - 1].abs());
        Self::new(Shape::Table { x, value }, l)
    }

    pub fn with_half_width(mut self, l: f64) -> Result<Self> {
        self.half_width = l;
        self.validate()?;
        Ok(self)
    }

    fn new(shape: Shape, half_width: f64) -> Result<Self> {
        let spline = match &shape {
            Shape::Table { x, value } => Some(CubicSpline::natural(x, value)?),
            _ => None,
        };
        let p = InitialProfile { shape, half_width, spline };
        p.validate()?;
        Ok(p)
    }

    /// Rebuild derived state after deserialization.
    pub fn rebuild(self) -> Result<Self> {
        Self::new(self.shape, self.half_width)
    }

    /// The flat background m̆₀ ≡ 1.
    pub fn is_trivial(&self) -> bool {
        match &self.shape {
            Shape::Gaussian { amplitude, .. } | Shape::Sech2 { amplitude, .. } => *amplitude == 0.0,
            Shape::Table { value, .. } => value.iter().all(|v| *v == 0.0),
        }
    }

    /// m̆₀(x) − 1.
    pub fn excess(&self, x: f64) -> f64 {
        match &self.shape {
            Shape::Gaussian { amplitude, width, center } => {
                let u = (x - center) / width;
                amplitude * (-u * u).exp()
            }
            Shape::Sech2 { amplitude, width } => {
                let c = (x / width).cosh();
                amplitude / (c * c)
            }
            Shape::Table { .. } => self.spline.as_ref().map_or(0.0, |s| s.eval(x)),
        }
    }

    /// ∫_{−L}^{L} (m̆₀ − 1).
    pub fn total_excess(&self, tol: f64) -> Result<f64> {
        self.excess_integral(-self.half_width, self.half_width, tol)
    }

    /// ∫_a^b (m̆₀ − 1) by adaptive quadrature.
    pub fn excess_integral(&self, a: f64, b: f64, tol: f64) -> Result<f64> {
        // split at the bulk so the adaptive rule sees the peak
        let mid = match &self.shape {
            Shape::Gaussian { center, .. } => center.clamp(a, b),
            _ => 0.0f64.clamp(a, b),
        };
        let f = |s: f64| C::new(self.excess(s), 0.0);
        Ok((integrate(f, a, mid, tol / 2.0)? + integrate(f, mid, b, tol / 2.0)?).re)
    }

    /// y(x) = x − ∫_x^L (m̆₀ − 1), the coordinate conjugate to x at t = 0.
    pub fn y_of_x(&self, x: f64, tol: f64) -> Result<f64> {
        Ok(x - self.excess_integral(x, self.half_width, tol)?)
    }

    pub fn validate(&self) -> Result<()> {
        let l = self.half_width;
        if !(l > 0.0 && l.is_finite()) {
            return Err(Error::Profile(format!("truncation half-width L = {l} must be positive")));
        }
        match &self.shape {
            Shape::Gaussian { amplitude, width, center } => {
                if !(width > &0.0) || !amplitude.is_finite() || !center.is_finite() {
                    return Err(Error::Profile("gaussian needs finite amplitude/center and width > 0".into()));
                }
            }
            Shape::Sech2 { amplitude, width } => {
                if !(width > &0.0) || !amplitude.is_finite() {
                    return Err(Error::Profile("sech2 needs finite amplitude and width > 0".into()));
                }
            }
            Shape::Table { x, value } => {
                if x.windows(2).any(|w| !(w[1] > w[0])) || value.iter().any(|v| !v.is_finite()) {
                    return Err(Error::Profile("table nodes must be strictly increasing and finite".into()));
                }
            }
        }
        // momentum positivity m̆₀ > 0 on a fine scan of the domain
        let n = 4000;
        for i in 0..=n {
            let x = -l + 2.0 * l * i as f64 / n as f64;
            if 1.0 + self.excess(x) <= 0.0 {
                return Err(Error::Profile(format!(
                    "momentum positivity violated: m0({x:.4}) = {:.4} <= 0",
                    1.0 + self.excess(x)
                )));
            }
        }
        for x in [-l, l] {
            if self.excess(x).abs() >= 1e-10 {
                return Err(Error::Profile(format!(
                    "|m0 - 1| = {:e} at x = {x} exceeds 1e-10; increase the truncation L",
                    self.excess(x).abs()
                )));
            }
        }
        Ok(())
    }
}
