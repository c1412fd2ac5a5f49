//! Reflectionless Riemann–Hilbert problem. The soliton matrix is a partial
//! fraction ansatz whose coefficients solve a finite linear system built
//! from the residue conditions; q and the map x(y, t) are read off at z = i.

use crate::error::{Error, Result};
use crate::phase::k_of_z;
use crate::rhfactors::RHFactorization;
use crate::scattering::DiscreteSpectrum;
use crate::specfun::MonotoneCubic;
use nalgebra::{DMatrix, DVector, Matrix2, Vector2};
use num_complex::Complex64 as C;
use rayon::prelude::*;

/// Largest accepted condition number of the (row-scaled) system.
pub const MAX_CONDITION: f64 = 1e12;

const I: C = C::new(0.0, 1.0);

/// Poles and residue constants of a reflectionless problem.
#[derive(Debug, Clone, PartialEq)]
pub struct SolitonData {
    pub poles: Vec<C>,
    pub constants: Vec<C>,
}

impl SolitonData {
    /// Checks that the poles lie in the upper half plane and form complete
    /// orbits of z ↦ −z̄, 1/z̄, −1/z.
    pub fn new(poles: Vec<C>, constants: Vec<C>) -> Result<Self> {
        if poles.len() != constants.len() {
            return Err(Error::Config("one constant per pole is required".into()));
        }
        for (z, c) in poles.iter().zip(&constants) {
            if !(z.im > 0.0) || !z.is_finite() || !c.is_finite() {
                return Err(Error::Config(format!("pole {z} must be finite with Im > 0")));
            }
            if (z - I).norm() < 1e-8 {
                return Err(Error::AnsatzPole(*z));
            }
            for w in [-z.conj(), 1.0 / z.conj(), -1.0 / z] {
                if !poles.iter().any(|p| (p - w).norm() <= 1e-9 * w.norm().max(1.0)) {
                    return Err(Error::Config(format!("pole set is not closed: image {w} of {z} missing")));
                }
            }
        }
        Ok(SolitonData { poles, constants })
    }

    pub fn empty() -> Self {
        SolitonData { poles: Vec::new(), constants: Vec::new() }
    }

    /// All eigenvalues of a spectrum with their own norming constants.
    pub fn from_spectrum(spectrum: &DiscreteSpectrum) -> Result<Self> {
        Self::new(spectrum.poles.iter().map(|p| p.z).collect(), spectrum.poles.iter().map(|p| p.c).collect())
    }

    /// The Λ poles with constants c_n T(η_n)².
    pub fn from_factorization(fact: &RHFactorization) -> Result<Self> {
        let constants = fact.residue_constants()?;
        let idx = fact.lambda_indices();
        Self::new(idx.iter().map(|&n| fact.spectrum.poles[n].z).collect(), idx.iter().map(|&n| constants[n]).collect())
    }

    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    /// Solve the residue conditions at (y, t); `tol` gates the residual.
    pub fn solve(&self, y: f64, t: f64, tol: f64) -> Result<SolitonState> {
        solve_reflectionless(self, y, t, tol)
    }
}

/// Solved soliton matrix at one (y, t).
#[derive(Debug, Clone)]
pub struct SolitonState {
    pub y: f64,
    pub t: f64,
    pub poles: Vec<C>,
    /// Residue of the first column at η_n.
    pub res_pole: Vec<Vector2<C>>,
    /// Residue of the second column at η̄_n.
    pub res_conj: Vec<Vector2<C>>,
    /// Coefficient of the rank-one terms at z = ±1.
    pub alpha_hat: C,
    /// Largest residue-condition defect, relative to max(1, |c_n e^{2itθ}|).
    pub residual: f64,
    pub condition: f64,
    // y-derivatives of the coefficients, same layout
    d_pole: Vec<Vector2<C>>,
    d_conj: Vec<Vector2<C>>,
    d_alpha: C,
    /// (s_n, s_n c_n e^{2itθ(η_n)}) with s_n = 1/max(1, |c_n e^{2itθ}|).
    weights: Vec<(f64, C)>,
}

/// q and x at one (y, t), with dx/dy = 1/m̆.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reconstruction {
    pub y: f64,
    pub t: f64,
    pub q: f64,
    pub x: f64,
    pub dx_dy: f64,
    pub m11: f64,
}

/// Log of c e^{2itθ(η)} with tθ = yk − 2tk/(4k² + 1).
fn log_weight(eta: C, c: C, y: f64, t: f64) -> C {
    let k = k_of_z(eta);
    c.ln() + 2.0 * I * (y * k - 2.0 * t * k / (4.0 * k * k + 1.0))
}

/// Columns of i/(2(z−1))[[−1,1],[−1,1]] − i/(2(z+1))[[1,1],[−1,−1]].
fn p_columns(z: C) -> (Vector2<C>, Vector2<C>) {
    let a = I / (2.0 * (z - 1.0));
    let b = I / (2.0 * (z + 1.0));
    (Vector2::new(-a - b, -a + b), Vector2::new(a - b, a + b))
}

fn p_columns_derivative(z: C) -> (Vector2<C>, Vector2<C>) {
    let a = -I / (2.0 * (z - 1.0) * (z - 1.0));
    let b = -I / (2.0 * (z + 1.0) * (z + 1.0));
    (Vector2::new(-a - b, -a + b), Vector2::new(a - b, a + b))
}

/// Builds the residue conditions at every pole plus the normalization
/// M(0) = I that closes α̂₊, and solves them in least squares.
///
/// Rows of pole n are divided by max(1, |c_n e^{2itθ}|) so that the system
/// stays balanced when the exponentials are large.
pub fn solve_reflectionless(data: &SolitonData, y: f64, t: f64, tol: f64) -> Result<SolitonState> {
    if !y.is_finite() || !t.is_finite() {
        return Err(Error::NonFinite("soliton (y, t)"));
    }
    let n = data.len();
    let nu = 4 * n + 1;
    let rows = 4 * n + 4;
    let ia = |m: usize| 4 * m;
    let ib = |m: usize| 4 * m + 2;
    let ialpha = 4 * n;
    let mut a = DMatrix::<C>::zeros(rows, nu);
    let mut b = DVector::<C>::zeros(rows);
    let mut scale = vec![0.0; n];
    let mut scaled_w = vec![C::new(0.0, 0.0); n];
    for m in 0..n {
        let lw = log_weight(data.poles[m], data.constants[m], y, t);
        let s = (-lw.re.max(0.0)).exp();
        scale[m] = s;
        scaled_w[m] = (lw - lw.re.max(0.0)).exp();
    }
    for (m, &eta) in data.poles.iter().enumerate() {
        let (s, w) = (scale[m], scaled_w[m]);
        let wb = w.conj();
        let (pa0, _) = p_columns(eta.conj());
        let (_, pa1) = p_columns(eta);
        for r in 0..2 {
            // s A_m − s w (e₂ + Σ B_l/(η_m − η̄_l) + α̂ P₂(η_m)) = 0
            let row = ia(m) + r;
            a[(row, ia(m) + r)] = C::new(s, 0.0);
            for (l, &el) in data.poles.iter().enumerate() {
                a[(row, ib(l) + r)] -= w / (eta - el.conj());
            }
            a[(row, ialpha)] -= w * pa1[r];
            if r == 1 {
                b[row] = w;
            }
            // s B_m − s w̄ (e₁ + Σ A_l/(η̄_m − η_l) + α̂ P₁(η̄_m)) = 0
            let row = ib(m) + r;
            a[(row, ib(m) + r)] = C::new(s, 0.0);
            for (l, &el) in data.poles.iter().enumerate() {
                a[(row, ia(l) + r)] -= wb / (eta.conj() - el);
            }
            a[(row, ialpha)] -= wb * pa0[r];
            if r == 0 {
                b[row] = wb;
            }
        }
    }
    let (p0, p1) = p_columns(C::new(0.0, 0.0));
    for r in 0..2 {
        let row = 4 * n + r;
        for (l, &el) in data.poles.iter().enumerate() {
            a[(row, ia(l) + r)] = -1.0 / el;
        }
        a[(row, ialpha)] = p0[r];
        let row = 4 * n + 2 + r;
        for (l, &el) in data.poles.iter().enumerate() {
            a[(row, ib(l) + r)] = -1.0 / el.conj();
        }
        a[(row, ialpha)] = p1[r];
    }
    if a.iter().chain(b.iter()).any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("soliton linear system"));
    }
    // singular values for conditioning only: the complex SVD solve of nalgebra
    // stalls near 1e-12 on these systems, QR reaches roundoff
    let sv = a.clone().singular_values();
    let smax = sv.max();
    let smin = sv.min();
    let condition = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if !(condition <= MAX_CONDITION) {
        return Err(Error::IllConditioned(condition));
    }
    let lsq = LeastSquares::new(&a);
    let u = lsq.solve(&b);
    let mut state = SolitonState {
        y,
        t,
        poles: data.poles.clone(),
        res_pole: (0..n).map(|m| Vector2::new(u[ia(m)], u[ia(m) + 1])).collect(),
        res_conj: (0..n).map(|m| Vector2::new(u[ib(m)], u[ib(m) + 1])).collect(),
        alpha_hat: u[ialpha],
        residual: 0.0,
        condition,
        d_pole: Vec::new(),
        d_conj: Vec::new(),
        d_alpha: C::new(0.0, 0.0),
        weights: scale.iter().copied().zip(scaled_w.iter().copied()).collect(),
    };
    state.residual = state.residue_residual();
    if !(state.residual <= tol) {
        return Err(Error::Residual(state.residual));
    }
    // right-hand side of the differentiated system: only the weights depend on y
    let mut rhs = DVector::<C>::zeros(rows);
    for (m, &eta) in data.poles.iter().enumerate() {
        let dk = 2.0 * I * k_of_z(eta);
        let m2 = state.column(eta, 1, true);
        let m1 = state.column(eta.conj(), 0, true);
        for r in 0..2 {
            rhs[ia(m) + r] = dk * scaled_w[m] * m2[r];
            rhs[ib(m) + r] = dk.conj() * scaled_w[m].conj() * m1[r];
        }
    }
    let du = lsq.solve(&rhs);
    state.d_pole = (0..n).map(|m| Vector2::new(du[ia(m)], du[ia(m) + 1])).collect();
    state.d_conj = (0..n).map(|m| Vector2::new(du[ib(m)], du[ib(m) + 1])).collect();
    state.d_alpha = du[ialpha];
    Ok(state)
}

impl SolitonState {
    /// Column j of M at z; `skip_own` drops the singular term of the pole
    /// that z sits on (used for the residue conditions).
    fn column(&self, z: C, j: usize, skip_own: bool) -> Vector2<C> {
        let mut v = Vector2::new(C::new(0.0, 0.0), C::new(0.0, 0.0));
        v[j] = C::new(1.0, 0.0);
        for (m, &eta) in self.poles.iter().enumerate() {
            let (p, res) = if j == 0 { (eta, &self.res_pole[m]) } else { (eta.conj(), &self.res_conj[m]) };
            if skip_own && (z - p).norm() == 0.0 {
                continue;
            }
            v += res / (z - p);
        }
        let (p0, p1) = p_columns(z);
        v + (if j == 0 { p0 } else { p1 }) * self.alpha_hat
    }

    fn residue_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for (m, &eta) in self.poles.iter().enumerate() {
            let (s, w) = self.weights[m];
            let d1 = (self.res_pole[m] * C::new(s, 0.0) - self.column(eta, 1, true) * w).norm();
            let d2 = (self.res_conj[m] * C::new(s, 0.0) - self.column(eta.conj(), 0, true) * w.conj()).norm();
            worst = worst.max(d1).max(d2);
        }
        if let Some(dev) = self.normalization_defect() {
            worst = worst.max(dev);
        }
        worst
    }

    /// ‖M(0) − I‖ (None when 0 is not evaluable).
    fn normalization_defect(&self) -> Option<f64> {
        self.eval(C::new(0.0, 0.0)).ok().map(|m| (m - Matrix2::identity()).norm())
    }

    fn check_point(&self, z: C) -> Result<()> {
        let near = |p: C| (z - p).norm() < 1e-12 * p.norm().max(1.0);
        if self.poles.iter().any(|&p| near(p) || near(p.conj())) {
            return Err(Error::AnsatzPole(z));
        }
        if self.alpha_hat != C::new(0.0, 0.0) && (near(C::new(1.0, 0.0)) || near(C::new(-1.0, 0.0))) {
            return Err(Error::AnsatzPole(z));
        }
        Ok(())
    }

    /// M^{(sol)}(z).
    pub fn eval(&self, z: C) -> Result<Matrix2<C>> {
        self.check_point(z)?;
        let c0 = self.column(z, 0, false);
        let c1 = self.column(z, 1, false);
        Ok(Matrix2::from_columns(&[c0, c1]))
    }

    /// ∂_z M^{(sol)}(z) from the differentiated ansatz.
    pub fn derivative(&self, z: C) -> Result<Matrix2<C>> {
        self.check_point(z)?;
        let (p0, p1) = p_columns_derivative(z);
        let mut c0 = p0 * self.alpha_hat;
        let mut c1 = p1 * self.alpha_hat;
        for (m, &eta) in self.poles.iter().enumerate() {
            c0 -= self.res_pole[m] / ((z - eta) * (z - eta));
            c1 -= self.res_conj[m] / ((z - eta.conj()) * (z - eta.conj()));
        }
        Ok(Matrix2::from_columns(&[c0, c1]))
    }

    /// ∂_y M^{(sol)}(z) at fixed z and t.
    pub fn y_derivative(&self, z: C) -> Result<Matrix2<C>> {
        self.check_point(z)?;
        let (p0, p1) = p_columns(z);
        let mut c0 = p0 * self.d_alpha;
        let mut c1 = p1 * self.d_alpha;
        for (m, &eta) in self.poles.iter().enumerate() {
            c0 += self.d_pole[m] / (z - eta);
            c1 += self.d_conj[m] / (z - eta.conj());
        }
        Ok(Matrix2::from_columns(&[c0, c1]))
    }

    /// Pairs (α_k, β_k) = first-column residue at each pole.
    pub fn alpha_beta(&self) -> Vec<(C, C)> {
        self.res_pole.iter().map(|v| (v[0], v[1])).collect()
    }

    /// q = −∂M₁₂(i)M₁₁(i) − ∂M₂₁(i)/M₁₁(i), x = y + 2 ln M₁₁(i).
    pub fn reconstruct(&self) -> Result<Reconstruction> {
        let m = self.eval(I)?;
        let d = self.derivative(I)?;
        let m11 = m[(0, 0)];
        if m11.norm() == 0.0 {
            return Err(Error::ZeroM11);
        }
        if !(m11.re > 0.0) || m11.im.abs() > 1e-9 * m11.norm() {
            return Err(Error::LogDomain(m11));
        }
        let q = -d[(0, 1)] * m11 - d[(1, 0)] / m11;
        if q.im.abs() > 1e-10 * q.norm().max(1.0) {
            return Err(Error::NotReal(q.im.abs()));
        }
        let dm11 = self.y_derivative(I)?[(0, 0)];
        Ok(Reconstruction {
            y: self.y,
            t: self.t,
            q: q.re,
            x: self.y + 2.0 * m11.re.ln(),
            dx_dy: 1.0 + 2.0 * (dm11 / m11).re,
            m11: m11.re,
        })
    }
}

/// q sampled on the x-grid induced by a y-grid at one t.
#[derive(Debug, Clone)]
pub struct XSamples {
    pub x: Vec<f64>,
    pub q: Vec<f64>,
    interp: MonotoneCubic,
}

impl XSamples {
    /// Monotone cubic interpolation of q(x); `None` outside the grid.
    pub fn eval(&self, x: f64) -> Option<f64> {
        self.interp.eval(x)
    }
}

/// Parametric inversion of x(y): requires x strictly increasing in y.
pub fn q_on_x_grid(samples: &[Reconstruction]) -> Result<XSamples> {
    if samples.len() < 2 {
        return Err(Error::Stencil("at least two samples are needed".into()));
    }
    let mut s = samples.to_vec();
    s.sort_by(|a, b| a.y.total_cmp(&b.y));
    if let Some(w) = s.windows(2).find(|w| !(w[1].x > w[0].x)) {
        return Err(Error::NonMonotone(w[1].y));
    }
    let x: Vec<f64> = s.iter().map(|r| r.x).collect();
    let q: Vec<f64> = s.iter().map(|r| r.q).collect();
    let interp = MonotoneCubic::new(&x, &q)?;
    Ok(XSamples { x, q, interp })
}

/// Reconstruction at physical x: Newton on y ↦ x(y, t) starting from `y0`.
pub fn solve_at_x(data: &SolitonData, x: f64, t: f64, y0: f64, tol: f64) -> Result<Reconstruction> {
    let mut y = y0;
    for _ in 0..60 {
        let r = data.solve(y, t, tol)?.reconstruct()?;
        if !(r.dx_dy > 0.0) {
            return Err(Error::NonMonotone(y));
        }
        let step = ((x - r.x) / r.dx_dy).clamp(-2.0, 2.0);
        if (r.x - x).abs() <= 1e-13 * x.abs().max(1.0) || step.abs() < 1e-15 * y.abs().max(1.0) {
            return Ok(r);
        }
        y += step;
    }
    Err(Error::Config(format!("x-grid inversion did not converge at x = {x}, t = {t}")))
}

/// q on the tensor grid xs × ts (rows indexed by t), each node found by
/// Newton inversion of x(y, t) marching along x. Rows run in parallel.
pub fn field_on_grid(data: &SolitonData, xs: &[f64], ts: &[f64], tol: f64) -> Result<Vec<Vec<f64>>> {
    ts.par_iter()
        .map(|&t| {
            let mut out = Vec::with_capacity(xs.len());
            let mut guess = xs.first().copied().unwrap_or(0.0);
            let mut prev: Option<Reconstruction> = None;
            for &x in xs {
                if let Some(p) = prev {
                    guess = p.y + (x - p.x) / p.dx_dy;
                }
                let r = solve_at_x(data, x, t, guess, tol)?;
                out.push(r.q);
                prev = Some(r);
            }
            Ok(out)
        })
        .collect()
}

/// Residual of m̆_t + (ω̆m̆)_x = 0 on a uniform grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdeResidual {
    /// max over interior nodes.
    pub max: f64,
    /// Truncation scale max(h_x, h_t)⁴·max|q| of the fourth-order stencils.
    pub truncation_scale: f64,
    /// Roundoff amplified by the third derivatives, ε·max|q|/(h_x³) and ε·max|q|/(h_t h_x²).
    pub noise_scale: f64,
    /// True when the residual is no larger than the roundoff scale, so the
    /// stencil cannot resolve it.
    pub noise_dominated: bool,
}

fn d1(f: &[f64], i: usize, h: f64) -> f64 {
    (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h)
}

fn d2(f: &[f64], i: usize, h: f64) -> f64 {
    (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h * h)
}

/// Fourth-order central differences; `q[j][i]` is q(x_i, t_j).
pub fn pde_residual(q: &[Vec<f64>], hx: f64, ht: f64) -> Result<PdeResidual> {
    let nt = q.len();
    let nx = q.first().map_or(0, |r| r.len());
    if nt < 5 || nx < 9 || q.iter().any(|r| r.len() != nx) {
        return Err(Error::Stencil(format!("need a rectangular grid of at least 9 x-nodes by 5 t-nodes, got {nx} x {nt}")));
    }
    if !(hx > 0.0 && ht > 0.0) {
        return Err(Error::Stencil("spacings must be positive".into()));
    }
    // m̆ and ω̆m̆ on x-nodes 2..nx-2
    let mut m = vec![vec![0.0; nx]; nt];
    let mut wm = vec![vec![0.0; nx]; nt];
    for j in 0..nt {
        for i in 2..nx - 2 {
            let (qv, qx, qxx) = (q[j][i], d1(&q[j], i, hx), d2(&q[j], i, hx));
            let mv = qv - qxx + 1.0;
            m[j][i] = mv;
            wm[j][i] = (qv * qv - qx * qx + 2.0 * qv) * mv;
        }
    }
    let mut worst = 0.0f64;
    for j in 2..nt - 2 {
        for i in 4..nx - 4 {
            let col: Vec<f64> = (j - 2..=j + 2).map(|jj| m[jj][i]).collect();
            let mt = d1(&col, 2, ht);
            worst = worst.max((mt + d1(&wm[j], i, hx)).abs());
        }
    }
    let qmax = q.iter().flatten().fold(1.0f64, |a, &v| a.max(v.abs()));
    let h = hx.max(ht);
    let noise = f64::EPSILON * qmax * (1.0 / (hx * hx * hx) + 1.0 / (ht * hx * hx));
    Ok(PdeResidual { max: worst, truncation_scale: h.powi(4) * qmax, noise_scale: noise, noise_dominated: worst <= noise })
}

/// Least squares by Householder QR with one step of iterative refinement.
struct LeastSquares<'a> {
    a: &'a DMatrix<C>,
    q: DMatrix<C>,
    r: DMatrix<C>,
}

impl<'a> LeastSquares<'a> {
    fn new(a: &'a DMatrix<C>) -> Self {
        let qr = a.clone().qr();
        LeastSquares { a, q: qr.q(), r: qr.r() }
    }

    fn once(&self, rhs: &DVector<C>) -> DVector<C> {
        // R is nonsingular once the condition gate has passed
        self.r.solve_upper_triangular(&(self.q.adjoint() * rhs)).unwrap_or_else(|| DVector::zeros(self.a.ncols()))
    }

    fn solve(&self, rhs: &DVector<C>) -> DVector<C> {
        let u = self.once(rhs);
        let res = rhs - self.a * &u;
        u + self.once(&res)
    }
}
