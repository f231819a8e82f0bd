//! Standing waves of the damped polar wave equation
//!
//! ```text
//! (d^2/dr^2 + (1/r) d/dr + (1/r^2) d^2/dtheta^2 - g(kr)/r^2) psi
//!     = (1/v^2) d^2/dt^2 psi
//! ```
//!
//! whose separable solutions are psi = Jt_{n+1}(kr; gamma) cos((n+1)theta +
//! phase) cos(omega t) with omega = k v. The module builds those fields,
//! measures the spatial-operator residual with second-order central
//! differences on an annulus, and confirms stationarity by explicit leapfrog
//! evolution with the boundary rings pinned to the analytic solution.

use crate::bessel::{Order, ResidualReport, MAX_RADIUS};
use crate::error::{Error, Result};
use crate::isospectral::{damping_value, partner_value, GammaParam};
use serde::Serialize;

/// Parameters of one standing wave: mode order, deformation strength,
/// wavenumber, wave speed, and angular phase offset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WaveParams {
    n: Order,
    gamma: GammaParam,
    k: f64,
    v: f64,
    phase: f64,
}

impl WaveParams {
    pub fn new(n: Order, gamma: GammaParam, k: f64, v: f64, phase: f64) -> Result<Self> {
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::domain("k", k, "must be positive and finite"));
        }
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::domain("v", v, "must be positive and finite"));
        }
        if !phase.is_finite() {
            return Err(Error::domain("phase", phase, "must be finite"));
        }
        Ok(WaveParams { n, gamma, k, v, phase })
    }

    pub fn n(&self) -> Order {
        self.n
    }

    pub fn gamma(&self) -> GammaParam {
        self.gamma
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// Temporal frequency omega = k v, the only dispersion consistent with
    /// the separable standing-wave form.
    pub fn omega(&self) -> f64 {
        self.k * self.v
    }
}

/// An annular product grid: uniformly spaced radii in [r_min, r_max] and
/// n_theta uniform angles covering [0, 2*pi).
#[derive(Debug, Clone, PartialEq)]
pub struct PolarGrid {
    r: Vec<f64>,
    dr: f64,
    n_theta: usize,
    dtheta: f64,
}

impl PolarGrid {
    /// n_r >= 2 radial rings from r_min >= 0.05 to r_max; n_theta angular
    /// samples, divisible by 4 so the quadrant angles land on grid points.
    pub fn uniform(r_min: f64, r_max: f64, n_r: usize, n_theta: usize) -> Result<Self> {
        if !(r_min.is_finite() && r_max.is_finite()) {
            return Err(Error::config("grid radii must be finite"));
        }
        if r_min < 0.05 {
            return Err(Error::config(format!(
                "r_min = {r_min} is below the supported minimum 0.05"
            )));
        }
        if r_max <= r_min {
            return Err(Error::config(format!(
                "r_max = {r_max} must exceed r_min = {r_min}"
            )));
        }
        if n_r < 2 {
            return Err(Error::config("grid needs at least 2 radial rings"));
        }
        if n_theta < 4 || n_theta % 4 != 0 {
            return Err(Error::config(format!(
                "theta sample count {n_theta} must be a positive multiple of 4"
            )));
        }
        let dr = (r_max - r_min) / (n_r - 1) as f64;
        let r = (0..n_r).map(|i| r_min + i as f64 * dr).collect();
        Ok(PolarGrid {
            r,
            dr,
            n_theta,
            dtheta: 2.0 * std::f64::consts::PI / n_theta as f64,
        })
    }

    pub fn r_values(&self) -> &[f64] {
        &self.r
    }

    pub fn n_r(&self) -> usize {
        self.r.len()
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn dr(&self) -> f64 {
        self.dr
    }

    pub fn dtheta(&self) -> f64 {
        self.dtheta
    }

    pub fn r_min(&self) -> f64 {
        self.r[0]
    }

    pub fn r_max(&self) -> f64 {
        *self.r.last().unwrap()
    }

    pub fn theta(&self, j: usize) -> f64 {
        j as f64 * self.dtheta
    }
}

/// A scalar field sampled on a [`PolarGrid`] at one instant; row-major in
/// the radial index.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarField {
    values: Vec<f64>,
    grid: PolarGrid,
    params: WaveParams,
    time: f64,
}

impl PolarField {
    pub fn value(&self, i_r: usize, j_theta: usize) -> f64 {
        self.values[i_r * self.grid.n_theta + j_theta]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn grid(&self) -> &PolarGrid {
        &self.grid
    }

    pub fn params(&self) -> &WaveParams {
        &self.params
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

/// The angular factor cos((n+1) theta + phase); solves
/// H'' + (n+1)^2 H = 0 identically.
pub fn angular_h(n: Order, theta: f64, phase: f64) -> f64 {
    ((n.get() + 1) as f64 * theta + phase).cos()
}

fn check_scaled_radius(k: f64, r_max: f64) -> Result<()> {
    if k * r_max > MAX_RADIUS {
        return Err(Error::domain(
            "r",
            r_max,
            "puts k*r beyond the supported maximum radius 50",
        ));
    }
    Ok(())
}

/// The standing wave Jt(kr) H(theta) cos(omega t) sampled on the grid.
pub fn stationary_field(params: &WaveParams, grid: &PolarGrid, t: f64) -> Result<PolarField> {
    if !t.is_finite() {
        return Err(Error::domain("t", t, "must be finite"));
    }
    check_scaled_radius(params.k, grid.r_max())?;
    let n = params.n.get();
    let radial: Vec<f64> = grid
        .r
        .iter()
        .map(|&r| partner_value(n, params.gamma, params.k * r))
        .collect();
    let angular: Vec<f64> = (0..grid.n_theta)
        .map(|j| angular_h(params.n, grid.theta(j), params.phase))
        .collect();
    let time_factor = (params.omega() * t).cos();
    let mut values = Vec::with_capacity(grid.n_r() * grid.n_theta);
    for &jr in &radial {
        for &h in &angular {
            values.push(jr * h * time_factor);
        }
    }
    Ok(PolarField {
        values,
        grid: grid.clone(),
        params: *params,
        time: t,
    })
}

const MIN_RESIDUAL_THETA: usize = 16;
const MIN_RESIDUAL_R: usize = 32;

/// Residual of the stationary problem
/// lap(psi) + k^2 psi - (g(kr)/r^2) psi on interior rings, with the polar
/// Laplacian discretized by second-order central differences (periodic in
/// theta). The report is normalized by the field's sup-norm, and
/// argmax_point is the radius of the worst sample.
pub fn pde_residual(params: &WaveParams, grid: &PolarGrid) -> Result<ResidualReport> {
    if grid.n_theta < MIN_RESIDUAL_THETA {
        return Err(Error::config(format!(
            "residual needs >= {MIN_RESIDUAL_THETA} theta samples, got {}",
            grid.n_theta
        )));
    }
    if grid.n_r() < MIN_RESIDUAL_R {
        return Err(Error::config(format!(
            "residual needs >= {MIN_RESIDUAL_R} radial rings, got {}",
            grid.n_r()
        )));
    }
    let field = stationary_field(params, grid, 0.0)?;
    let scale = field.max_abs();
    if scale == 0.0 {
        return Err(Error::config(
            "field vanishes on the whole grid; normalized residual is undefined",
        ));
    }

    let n = params.n.get();
    let k = params.k;
    let n_theta = grid.n_theta;
    let inv_dr2 = 1.0 / (grid.dr * grid.dr);
    let inv_2dr = 1.0 / (2.0 * grid.dr);
    let inv_dth2 = 1.0 / (grid.dtheta * grid.dtheta);

    let psi = field.values();
    let mut samples = Vec::with_capacity((grid.n_r() - 2) * n_theta);
    for i in 1..grid.n_r() - 1 {
        let r = grid.r[i];
        let g_term = damping_value(n, params.gamma, k * r) / (r * r);
        let row = i * n_theta;
        let row_in = row - n_theta;
        let row_out = row + n_theta;
        for j in 0..n_theta {
            let jp = if j + 1 == n_theta { 0 } else { j + 1 };
            let jm = if j == 0 { n_theta - 1 } else { j - 1 };
            let c = psi[row + j];
            let lap = (psi[row_out + j] - 2.0 * c + psi[row_in + j]) * inv_dr2
                + (psi[row_out + j] - psi[row_in + j]) * inv_2dr / r
                + (psi[row + jp] - 2.0 * c + psi[row + jm]) * inv_dth2 / (r * r);
            let res = lap + k * k * c - g_term * c;
            samples.push((r, res / scale));
        }
    }
    ResidualReport::from_samples(samples)
}

/// Stationarity figures from one leapfrog run.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DriftReport {
    pub periods: usize,
    pub steps_per_period: usize,
    pub dt: f64,
    /// Max over whole-period samples of the relative sup-amplitude deviation.
    pub amplitude_drift: f64,
    /// Max over whole-period samples of the normalized radial-profile
    /// mismatch along the strongest angular column.
    pub profile_drift: f64,
    pub reference_amplitude: f64,
    pub final_amplitude: f64,
}

const CFL_FACTOR: f64 = 0.5;
const CFL_SLACK: f64 = 1.0 + 1e-9;
const BOUNDARY_NODE_TOL: f64 = 1e-6;

fn cfl_limit(params: &WaveParams, grid: &PolarGrid) -> f64 {
    CFL_FACTOR * grid.dr.min(grid.r_min() * grid.dtheta) / params.v
}

/// Smallest steps-per-period count satisfying the CFL bound
/// v dt <= 0.5 min(dr, r_min dtheta).
pub fn min_steps_per_period(params: &WaveParams, grid: &PolarGrid) -> usize {
    let period = 2.0 * std::f64::consts::PI / params.omega();
    (period / cfl_limit(params, grid)).ceil() as usize
}

/// Leapfrog evolution of the standing wave over whole periods.
///
/// The outer radius must sit on a node of Jt(kr) (use zeros of the partner
/// to build the annulus); both boundary rings are pinned to the analytic
/// solution every step, so the report measures pure interior-scheme drift.
/// Amplitude is sampled at whole periods, where cos(omega t) = 1.
pub fn time_evolve(
    params: &WaveParams,
    grid: &PolarGrid,
    periods: usize,
    steps_per_period: usize,
) -> Result<DriftReport> {
    if periods == 0 {
        return Err(Error::config("evolution needs at least 1 period"));
    }
    if steps_per_period == 0 {
        return Err(Error::config("evolution needs at least 1 step per period"));
    }
    check_scaled_radius(params.k, grid.r_max())?;

    let n = params.n.get();
    let boundary_value = partner_value(n, params.gamma, params.k * grid.r_max());
    if boundary_value.abs() > BOUNDARY_NODE_TOL {
        return Err(Error::config(format!(
            "r_max = {} is not a node: |Jt(k r_max)| = {:.3e}",
            grid.r_max(),
            boundary_value.abs()
        )));
    }

    let period = 2.0 * std::f64::consts::PI / params.omega();
    let dt = period / steps_per_period as f64;
    if params.v * dt > CFL_FACTOR * grid.dr.min(grid.r_min() * grid.dtheta) * CFL_SLACK {
        return Err(Error::config(format!(
            "CFL violation: v*dt = {:.6e} exceeds {:.6e}; need >= {} steps per period",
            params.v * dt,
            CFL_FACTOR * grid.dr.min(grid.r_min() * grid.dtheta),
            min_steps_per_period(params, grid)
        )));
    }

    let n_r = grid.n_r();
    let n_theta = grid.n_theta;
    let reference = stationary_field(params, grid, 0.0)?;
    let reference_amplitude = reference.max_abs();
    if reference_amplitude == 0.0 {
        return Err(Error::config(
            "field vanishes on the whole grid; drift is undefined",
        ));
    }

    // Time-independent factors: boundary profiles, per-ring update
    // coefficients, and the analytic radial/angular profiles.
    let radial: Vec<f64> = grid
        .r
        .iter()
        .map(|&r| partner_value(n, params.gamma, params.k * r))
        .collect();
    let angular: Vec<f64> = (0..n_theta)
        .map(|j| angular_h(params.n, grid.theta(j), params.phase))
        .collect();

    let c2 = (params.v * dt) * (params.v * dt);
    let inv_dr2 = 1.0 / (grid.dr * grid.dr);
    let inv_2dr = 1.0 / (2.0 * grid.dr);
    let inv_dth2 = 1.0 / (grid.dtheta * grid.dtheta);
    let mut c_out = vec![0.0f64; n_r];
    let mut c_in = vec![0.0f64; n_r];
    let mut c_side = vec![0.0f64; n_r];
    let mut c_center = vec![0.0f64; n_r];
    for i in 1..n_r - 1 {
        let r = grid.r[i];
        let g_over_r2 = damping_value(n, params.gamma, params.k * r) / (r * r);
        c_out[i] = c2 * (inv_dr2 + inv_2dr / r);
        c_in[i] = c2 * (inv_dr2 - inv_2dr / r);
        c_side[i] = c2 * inv_dth2 / (r * r);
        c_center[i] = 2.0 + c2 * (-2.0 * inv_dr2 - 2.0 * inv_dth2 / (r * r) - g_over_r2);
    }

    let omega = params.omega();
    let mut prev = stationary_field(params, grid, -dt)?.values().to_vec();
    let mut curr = reference.values().to_vec();
    let mut next = vec![0.0f64; n_r * n_theta];

    let total_steps = periods * steps_per_period;
    let mut amplitude_drift = 0.0f64;
    let mut profile_drift = 0.0f64;
    let mut final_amplitude = reference_amplitude;

    // Strongest angular column: where |H| peaks, the radial profile is
    // cleanest to compare.
    let j_star = (0..n_theta)
        .max_by(|&a, &b| angular[a].abs().total_cmp(&angular[b].abs()))
        .unwrap();
    let radial_scale = radial.iter().fold(0.0f64, |m, v| m.max(v.abs()));

    for step in 1..=total_steps {
        let t = step as f64 * dt;
        let time_factor = (omega * t).cos();
        for i in 1..n_r - 1 {
            let row = i * n_theta;
            let row_in = row - n_theta;
            let row_out = row + n_theta;
            for j in 0..n_theta {
                let jp = if j + 1 == n_theta { 0 } else { j + 1 };
                let jm = if j == 0 { n_theta - 1 } else { j - 1 };
                next[row + j] = c_center[i] * curr[row + j] - prev[row + j]
                    + c_out[i] * curr[row_out + j]
                    + c_in[i] * curr[row_in + j]
                    + c_side[i] * (curr[row + jp] + curr[row + jm]);
            }
        }
        for j in 0..n_theta {
            next[j] = radial[0] * angular[j] * time_factor;
            next[(n_r - 1) * n_theta + j] = radial[n_r - 1] * angular[j] * time_factor;
        }

        std::mem::swap(&mut prev, &mut curr);
        std::mem::swap(&mut curr, &mut next);

        let amp = curr.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if !amp.is_finite() {
            return Err(Error::BlowUp { step });
        }

        if step % steps_per_period == 0 {
            amplitude_drift = amplitude_drift
                .max((amp - reference_amplitude).abs() / reference_amplitude);
            final_amplitude = amp;
            // Normalized radial profile along the strongest column vs the
            // analytic one; cos(omega t) = 1 at whole periods.
            let h = angular[j_star];
            let mut column_scale = 0.0f64;
            for i in 0..n_r {
                column_scale = column_scale.max((curr[i * n_theta + j_star] / h).abs());
            }
            for i in 0..n_r {
                let evolved = curr[i * n_theta + j_star] / h / column_scale;
                let analytic = radial[i] / radial_scale;
                profile_drift = profile_drift.max((evolved - analytic).abs());
            }
        }
    }

    Ok(DriftReport {
        periods,
        steps_per_period,
        dt,
        amplitude_drift,
        profile_drift,
        reference_amplitude,
        final_amplitude,
    })
}
