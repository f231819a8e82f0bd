//! A one-parameter isospectral deformation of J_{n+1}.
//!
//! For n >= 1 and gamma in [0, inf] define w = gamma * r^(2n) and the weights
//! wp = -w/(w + 1), wm = 1/(w + 1). The partner function
//!
//! ```text
//! Jt_{n+1}(r; gamma) = wp J_{n+1}(r) + wm J_{n-1}(r)
//! ```
//!
//! interpolates between J_{n-1} at gamma = 0 and -J_{n+1} at gamma = inf,
//! stays regular at the origin, and solves the order-(n+1) Bessel equation
//! with the extra potential term g_{n+1}(r; gamma) / r^2, where
//!
//! ```text
//! g_{n+1}(u; gamma) = -4n [(2n + 1) gamma u^(2n) + 1] / (gamma u^(2n) + 1)^2.
//! ```
//!
//! At n = 0 the family degenerates: Jt_1 = -J_1 and g_1 = 0 for every gamma.
//!
//! Derivatives use wp' = wm' = (2n/r) wp wm, which keeps them valid at the
//! gamma = 0 and gamma = inf endpoints where w itself is degenerate.

use crate::bessel::{
    check_radius, check_radius_positive, raw_derivative, raw_j, raw_second_derivative, Order,
    MAX_RADIUS,
};
use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Deformation strength: a non-negative finite value or the infinite limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GammaParam {
    Finite(f64),
    Infinite,
}

impl GammaParam {
    /// A finite strength; rejects negative, NaN, and infinite input
    /// (use [`GammaParam::Infinite`] for the limit).
    pub fn finite(value: f64) -> Result<Self> {
        if value.is_nan() {
            return Err(Error::domain("gamma", value, "must not be NaN"));
        }
        if value < 0.0 {
            return Err(Error::domain("gamma", value, "must be non-negative"));
        }
        if value.is_infinite() {
            return Ok(GammaParam::Infinite);
        }
        Ok(GammaParam::Finite(value))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, GammaParam::Infinite)
    }
}

impl FromStr for GammaParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::config(format!("cannot parse gamma from {s:?}")))?;
        GammaParam::finite(v)
    }
}

impl fmt::Display for GammaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaParam::Finite(v) => write!(f, "{v}"),
            GammaParam::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for GammaParam {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A fully specified family member: the order parameter n and the strength.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PartnerSpec {
    pub n: Order,
    pub gamma: GammaParam,
}

impl PartnerSpec {
    pub fn new(n: Order, gamma: GammaParam) -> Self {
        PartnerSpec { n, gamma }
    }
}

/// (wp, wm) for n >= 1. Saturates to the gamma = inf pair (-1, 0) when
/// w = gamma * r^(2n) overflows, which keeps every downstream formula on the
/// correct limiting branch.
pub(crate) fn weights(n: u32, gamma: GammaParam, r: f64) -> (f64, f64) {
    debug_assert!(n >= 1);
    let g = match gamma {
        GammaParam::Infinite => return (-1.0, 0.0),
        GammaParam::Finite(g) => g,
    };
    let w = g * r.powi(2 * n as i32);
    if w.is_infinite() {
        return (-1.0, 0.0);
    }
    let denom = w + 1.0;
    (-w / denom, 1.0 / denom)
}

pub(crate) fn partner_value(n: u32, gamma: GammaParam, r: f64) -> f64 {
    if n == 0 {
        return -raw_j(1, r);
    }
    let (wp, wm) = weights(n, gamma, r);
    wp * raw_j(n + 1, r) + wm * raw_j(n - 1, r)
}

pub(crate) fn partner_derivative_value(n: u32, gamma: GammaParam, r: f64) -> f64 {
    if n == 0 {
        return -raw_derivative(1, r);
    }
    let (wp, wm) = weights(n, gamma, r);
    let d = (2.0 * n as f64 / r) * wp * wm;
    d * (raw_j(n + 1, r) + raw_j(n - 1, r))
        + wp * raw_derivative(n + 1, r)
        + wm * raw_derivative(n - 1, r)
}

pub(crate) fn partner_second_derivative_value(n: u32, gamma: GammaParam, r: f64) -> f64 {
    if n == 0 {
        return -raw_second_derivative(1, r);
    }
    let (wp, wm) = weights(n, gamma, r);
    let nf = n as f64;
    let d = (2.0 * nf / r) * wp * wm;
    let dp = (d / r) * (2.0 * nf * (wp + wm) - 1.0);
    dp * (raw_j(n + 1, r) + raw_j(n - 1, r))
        + 2.0 * d * (raw_derivative(n + 1, r) + raw_derivative(n - 1, r))
        + wp * raw_second_derivative(n + 1, r)
        + wm * raw_second_derivative(n - 1, r)
}

pub(crate) fn damping_value(n: u32, gamma: GammaParam, u: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let (wp, wm) = weights(n, gamma, u);
    let nf = n as f64;
    -4.0 * nf * wm * ((2.0 * nf + 1.0) * (-wp) + wm)
}

/// Jt_{n+1}(r; gamma) for r in [0, 50].
pub fn partner_j(spec: PartnerSpec, r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(partner_value(spec.n.get(), spec.gamma, r))
}

/// d/dr of the partner, from differentiated weights plus Bessel derivative
/// identities. Requires r > 0.
pub fn partner_j_derivative(spec: PartnerSpec, r: f64) -> Result<f64> {
    check_radius_positive(r)?;
    Ok(partner_derivative_value(spec.n.get(), spec.gamma, r))
}

/// d^2/dr^2 of the partner, assembled term by term rather than read off any
/// differential equation, so equation residuals remain independent checks.
pub fn partner_j_second_derivative(spec: PartnerSpec, r: f64) -> Result<f64> {
    check_radius_positive(r)?;
    Ok(partner_second_derivative_value(spec.n.get(), spec.gamma, r))
}

/// The same family member written through the lowering ladder:
/// -J_{n+1}(r) + (2n/r) wm J_n(r). Agrees with [`partner_j`] to rounding;
/// kept as a separately computed form so that agreement is testable.
pub fn partner_j_ladder_form(spec: PartnerSpec, r: f64) -> Result<f64> {
    check_radius_positive(r)?;
    let n = spec.n.get();
    if n == 0 {
        return Ok(-raw_j(1, r));
    }
    let (_, wm) = weights(n, spec.gamma, r);
    Ok(-raw_j(n + 1, r) + (2.0 * n as f64 / r) * wm * raw_j(n, r))
}

/// Damping profile g_{n+1}(u; gamma) on u in [0, 50].
///
/// Pinned limits: g = 0 identically at n = 0; g = -4n at gamma = 0; g = 0 at
/// gamma = inf for u > 0. The corner (gamma = inf, u = 0, n >= 1) has no
/// two-sided limit and is rejected.
pub fn damping_g(spec: PartnerSpec, u: f64) -> Result<f64> {
    check_radius(u)?;
    let n = spec.n.get();
    if n >= 1 && u == 0.0 && spec.gamma.is_infinite() {
        return Err(Error::domain(
            "u",
            u,
            "has no damping limit at gamma = inf for n >= 1",
        ));
    }
    Ok(damping_value(n, spec.gamma, u))
}

const ZERO_SCAN_STEP: f64 = 0.05;
const ZERO_BISECTION_WIDTH: f64 = 1e-12;

/// Positive zeros of Jt_{n+1}(.; gamma) in [r_min, r_max], in increasing
/// order, at most max_count of them. Sign changes are located on a 0.05
/// scan and refined by bisection to an interval of width 1e-12; a scan
/// point landing exactly on a zero is taken as is. r_min = 0 is allowed
/// (the scan starts from the r = 0 limit value) but r = 0 itself is never
/// reported. Zeros closer together than the scan step would be merged, but
/// the family's zeros are separated by more than 1 on the supported domain.
pub fn find_zeros(
    spec: PartnerSpec,
    r_min: f64,
    r_max: f64,
    max_count: usize,
) -> Result<Vec<f64>> {
    if !(r_min.is_finite() && r_max.is_finite()) {
        return Err(Error::config("zero search interval must be finite"));
    }
    if r_min < 0.0 {
        return Err(Error::domain("r_min", r_min, "must be nonnegative"));
    }
    if r_max > MAX_RADIUS {
        return Err(Error::domain(
            "r_max",
            r_max,
            "exceeds the supported maximum radius 50",
        ));
    }
    if r_max <= r_min {
        return Err(Error::config(format!(
            "zero search interval [{r_min}, {r_max}] is empty"
        )));
    }

    let n = spec.n.get();
    let gamma = spec.gamma;
    let f = |r: f64| partner_value(n, gamma, r);

    let mut zeros = Vec::new();
    let mut prev_r = r_min;
    let mut prev_f = f(r_min);
    if prev_f == 0.0 && r_min > 0.0 {
        zeros.push(r_min);
    }
    let steps = ((r_max - r_min) / ZERO_SCAN_STEP).ceil() as usize;
    for i in 1..=steps {
        if zeros.len() >= max_count {
            break;
        }
        let r = (r_min + i as f64 * ZERO_SCAN_STEP).min(r_max);
        let fr = f(r);
        if fr == 0.0 {
            zeros.push(r);
        } else if prev_f != 0.0 && (prev_f < 0.0) != (fr < 0.0) {
            zeros.push(bisect(&f, prev_r, r, prev_f));
        }
        prev_r = r;
        prev_f = fr;
    }
    zeros.truncate(max_count);
    Ok(zeros)
}

/// Bisection on a bracketing interval; fa = f(a) has the opposite sign of
/// f(b). Stops at width ZERO_BISECTION_WIDTH or when the midpoint stops
/// separating the endpoints in floating point.
fn bisect(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    while b - a > ZERO_BISECTION_WIDTH {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}
