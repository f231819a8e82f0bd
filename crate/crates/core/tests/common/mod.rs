#![allow(dead_code)]

/// Ascending power series for J_n with compensated summation, kept separate
/// from the library as a cross-check oracle. The largest term at r = 10 is
/// ~I_0(10) ~ 3e3, so absolute accuracy holds to ~5e-13 for r <= 10 at any
/// supported order.
pub fn oracle_series_j(n: u32, r: f64) -> f64 {
    if r == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let half = 0.5 * r;
    let q = half * half;
    let mut factorial = 1.0f64;
    for m in 1..=n as u64 {
        factorial *= m as f64;
    }
    let mut term = half.powi(n as i32) / factorial;
    let mut sum = term;
    let mut comp = 0.0f64;
    for m in 1..400u32 {
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

/// 5-point central first derivative.
pub fn fd_derivative_5pt(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

/// 3-point central second derivative.
pub fn fd_second_3pt(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
}
