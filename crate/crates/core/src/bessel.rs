//! Cylindrical Bessel functions of the first kind, J_n.
//!
//! Two evaluation regimes: the ascending power series
//!
//! ```text
//! J_n(r) = sum_m (-1)^m (r/2)^(2m+n) / (m! (m+n)!)
//! ```
//!
//! for r <= 8, where its terms stay small enough that cancellation costs at
//! most a couple of digits, and Miller's backward recurrence normalized with
//! the identity J_0 + 2*sum_k J_{2k} = 1 for larger r. Forward recurrence in
//! the order is unstable for n > r and is never used. The supported domain is
//! capped at n <= 20, 0 <= r <= 50; requests outside it are errors, not
//! silently degraded results.

use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Largest order accepted by the public API.
pub const MAX_ORDER: u32 = 20;

/// Largest radius accepted by the public API.
pub const MAX_RADIUS: f64 = 50.0;

/// Series/recurrence switchover radius.
const SERIES_RADIUS: f64 = 8.0;

/// Highest order evaluated internally: second derivatives at order
/// MAX_ORDER + 1 reach J_{MAX_ORDER + 3}.
pub(crate) const INTERNAL_ORDER_LIMIT: u32 = MAX_ORDER + 3;

/// n! for n <= INTERNAL_ORDER_LIMIT.
const FACTORIALS: [f64; 24] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
    51090942171709440000.0,
    1124000727777607680000.0,
    25852016738884976640000.0,
];

/// A validated non-negative Bessel order, capped at [`MAX_ORDER`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Order(u32);

impl Order {
    pub fn new(n: u32) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::domain(
                "n",
                n as f64,
                "exceeds the supported maximum order 20",
            ));
        }
        Ok(Order(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<i64> for Order {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::domain("n", n as f64, "must be non-negative"));
        }
        if n > MAX_ORDER as i64 {
            return Err(Error::domain(
                "n",
                n as f64,
                "exceeds the supported maximum order 20",
            ));
        }
        Ok(Order(n as u32))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn check_radius(r: f64) -> Result<()> {
    if !r.is_finite() {
        return Err(Error::domain("r", r, "must be finite"));
    }
    if r < 0.0 {
        return Err(Error::domain("r", r, "must be non-negative"));
    }
    if r > MAX_RADIUS {
        return Err(Error::domain(
            "r",
            r,
            "exceeds the supported maximum radius 50",
        ));
    }
    Ok(())
}

pub(crate) fn check_radius_positive(r: f64) -> Result<()> {
    check_radius(r)?;
    if r == 0.0 {
        return Err(Error::domain("r", r, "must be positive"));
    }
    Ok(())
}

/// Ascending series with compensated summation. Valid for r <= SERIES_RADIUS,
/// where the largest term is ~114 (n = 0, r = 8) and absolute rounding stays
/// near 1e-14.
fn series_j(n: u32, r: f64) -> f64 {
    if r == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let half = 0.5 * r;
    let q = half * half;
    let mut term = half.powi(n as i32) / FACTORIALS[n as usize];
    let mut sum = term;
    let mut comp = 0.0f64;
    for m in 1..200u32 {
        term *= -q / (m as f64 * (m + n) as f64);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term.abs() <= f64::EPSILON * sum.abs() || term.abs() < 1e-300 {
            break;
        }
    }
    sum
}

/// Miller's backward recurrence: run J_{k-1} = (2k/r) J_k - J_{k+1} down from
/// a start order with enough headroom that the trial values converge onto the
/// minimal solution, then scale the whole sequence with
/// J_0 + 2 (J_2 + J_4 + ...) = 1.
///
/// The start order depends only on r, never on n, so every order up to
/// INTERNAL_ORDER_LIMIT comes from one downward sequence and neighbor orders
/// satisfy the three-term recursion to rounding.
fn miller_sequence(r: f64) -> [f64; (INTERNAL_ORDER_LIMIT + 1) as usize] {
    debug_assert!(r > 0.0);
    let mut start = (r.max(INTERNAL_ORDER_LIMIT as f64)).ceil() as usize + 44;
    if start % 2 == 1 {
        start += 1;
    }

    let mut out = [0.0f64; (INTERNAL_ORDER_LIMIT + 1) as usize];
    let mut above = 0.0f64; // trial J_{k+1}
    let mut here = 1e-30f64; // trial J_k
    let mut even_sum = 0.0f64; // sum over even orders >= 2
    for k in (1..=start).rev() {
        let below = (2.0 * k as f64 / r) * here - above;
        above = here;
        here = below;
        let ord = k - 1;
        if ord <= INTERNAL_ORDER_LIMIT as usize {
            out[ord] = here;
        }
        if ord > 0 && ord % 2 == 0 {
            even_sum += here;
        }
        if here.abs() > 1e250 {
            above *= 1e-250;
            here *= 1e-250;
            even_sum *= 1e-250;
            for v in out.iter_mut() {
                *v *= 1e-250;
            }
        }
    }

    let norm = out[0] + 2.0 * even_sum;
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}

/// Unchecked evaluation for internal use; n may exceed the public cap up to
/// INTERNAL_ORDER_LIMIT.
pub(crate) fn raw_j(n: u32, r: f64) -> f64 {
    debug_assert!(n <= INTERNAL_ORDER_LIMIT);
    debug_assert!(r >= 0.0);
    if r <= SERIES_RADIUS {
        series_j(n, r)
    } else {
        miller_sequence(r)[n as usize]
    }
}

/// J_k for signed order: J_{-k} = (-1)^k J_k.
pub(crate) fn raw_j_signed(k: i32, r: f64) -> f64 {
    if k >= 0 {
        raw_j(k as u32, r)
    } else {
        let j = raw_j((-k) as u32, r);
        if k % 2 == 0 {
            j
        } else {
            -j
        }
    }
}

/// J_n'(r) = (J_{n-1} - J_{n+1}) / 2.
pub(crate) fn raw_derivative(n: u32, r: f64) -> f64 {
    0.5 * (raw_j_signed(n as i32 - 1, r) - raw_j(n + 1, r))
}

/// J_n''(r) = (J_{n-2} - 2 J_n + J_{n+2}) / 4, from differentiating the
/// J_n' identity once more.
pub(crate) fn raw_second_derivative(n: u32, r: f64) -> f64 {
    0.25 * (raw_j_signed(n as i32 - 2, r) - 2.0 * raw_j(n, r) + raw_j(n + 2, r))
}

/// J_n(r). Absolute error stays below 1e-12 on the supported domain.
pub fn bessel_j(n: Order, r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(raw_j(n.get(), r))
}

/// J_n'(r) via (J_{n-1} - J_{n+1}) / 2 with J_{-1} = -J_1. Requires r > 0.
pub fn bessel_j_derivative(n: Order, r: f64) -> Result<f64> {
    check_radius_positive(r)?;
    Ok(raw_derivative(n.get(), r))
}

/// The raising ladder (d/dr - n/r) applied to J_n; equals -J_{n+1}.
/// Computed from the derivative and J_n, not from J_{n+1}, so the closure
/// identity is a real check.
pub fn ladder_raise(n: Order, r: f64) -> Result<f64> {
    check_radius_positive(r)?;
    let nn = n.get();
    Ok(raw_derivative(nn, r) - (nn as f64 / r) * raw_j(nn, r))
}

/// The lowering ladder (d/dr + n/r) applied to J_n; equals J_{n-1}.
/// Requires n >= 1 and r > 0.
pub fn ladder_lower(n: Order, r: f64) -> Result<f64> {
    if n.get() == 0 {
        return Err(Error::domain("n", 0.0, "lowering requires n >= 1"));
    }
    check_radius_positive(r)?;
    let nn = n.get();
    Ok(raw_derivative(nn, r) + (nn as f64 / r) * raw_j(nn, r))
}

/// A finite, strictly increasing set of radial sample points, all >= 0.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    points: Vec<f64>,
}

impl RadialGrid {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::config("radial grid must not be empty"));
        }
        for (i, &p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::config(format!(
                    "radial grid point {i} is not finite"
                )));
            }
            if p < 0.0 {
                return Err(Error::config(format!(
                    "radial grid point {i} = {p} is negative"
                )));
            }
            if i > 0 && p <= points[i - 1] {
                return Err(Error::config(format!(
                    "radial grid must be strictly increasing, point {i} = {p} after {}",
                    points[i - 1]
                )));
            }
        }
        Ok(RadialGrid { points })
    }

    /// Points start + i*step for i = 0..=round((stop-start)/step).
    pub fn uniform(start: f64, stop: f64, step: f64) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(Error::config("uniform grid bounds must be finite"));
        }
        if step <= 0.0 {
            return Err(Error::config(format!("grid step {step} must be positive")));
        }
        if stop < start {
            return Err(Error::config(format!(
                "grid stop {stop} is below start {start}"
            )));
        }
        let count = ((stop - start) / step).round() as usize + 1;
        Self::new((0..count).map(|i| start + i as f64 * step).collect())
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> f64 {
        self.points[0]
    }

    pub fn last(&self) -> f64 {
        *self.points.last().unwrap()
    }
}

/// Grid-evaluated residual summary. max_abs >= rms always; argmax_point is a
/// member of the evaluation grid (first occurrence on ties).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualReport {
    pub max_abs: f64,
    pub rms: f64,
    pub argmax_point: f64,
    pub n_points: usize,
}

impl ResidualReport {
    /// Summarize (point, residual) samples.
    pub fn from_samples(samples: impl IntoIterator<Item = (f64, f64)>) -> Result<Self> {
        let mut max_abs = -1.0f64;
        let mut argmax = f64::NAN;
        let mut sum_sq = 0.0f64;
        let mut n = 0usize;
        for (point, res) in samples {
            let a = res.abs();
            if a > max_abs {
                max_abs = a;
                argmax = point;
            }
            sum_sq += res * res;
            n += 1;
        }
        if n == 0 {
            return Err(Error::config("residual report needs at least one sample"));
        }
        Ok(ResidualReport {
            max_abs,
            rms: (sum_sq / n as f64).sqrt(),
            argmax_point: argmax,
            n_points: n,
        })
    }
}
