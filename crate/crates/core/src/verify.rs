//! Grid-evaluated residual checks for every identity the library relies on:
//! the Bessel equation, ladder closure, the three-term recursion, the partner
//! equation in plain and scaled form, algebraic form equivalence, the gamma
//! endpoint limits with their 1/gamma tail rate, and finite-difference
//! cross-checks of the analytic partner derivatives.
//!
//! Each check reduces to a [`ResidualReport`] over a caller-supplied grid.
//! [`run_default_suite`] evaluates the whole matrix on standard grids and
//! reports one pass/fail row per case; the suite passing is this crate's
//! operational definition of correctness.

use crate::bessel::{
    raw_derivative, raw_j, raw_second_derivative, Order, RadialGrid, ResidualReport, MAX_RADIUS,
};
use crate::error::{Error, Result};
use crate::isospectral::{
    damping_value, partner_derivative_value, partner_second_derivative_value, partner_value,
    weights, GammaParam,
};
use serde::Serialize;
use std::fmt;

pub const TOL_BESSEL_ODE: f64 = 1e-8;
pub const TOL_LADDER: f64 = 1e-10;
pub const TOL_RECURSION: f64 = 1e-10;
pub const TOL_PARTNER_ODE: f64 = 1e-8;
pub const TOL_SCALED_ODE: f64 = 1e-7;
pub const TOL_FORM_EQUIV: f64 = 1e-12;
pub const TOL_LIMIT_PIN: f64 = 1e-15;
pub const TAIL_RATIO_LO: f64 = 8.0;
pub const TAIL_RATIO_HI: f64 = 12.0;
pub const TOL_FD_FIRST: f64 = 1e-7;
pub const TOL_FD_SECOND: f64 = 1e-5;

/// The identities this crate can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    BesselOde,
    Raise,
    Lower,
    Recursion,
    PartnerOde,
    ScaledOde,
    FormEquiv,
    LimitG0,
    LimitGinf,
    FdCrosscheck,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::BesselOde => "BESSEL_ODE",
            IdentityId::Raise => "RAISE",
            IdentityId::Lower => "LOWER",
            IdentityId::Recursion => "RECURSION",
            IdentityId::PartnerOde => "PARTNER_ODE",
            IdentityId::ScaledOde => "SCALED_ODE",
            IdentityId::FormEquiv => "FORM_EQUIV",
            IdentityId::LimitG0 => "LIMIT_G0",
            IdentityId::LimitGinf => "LIMIT_GINF",
            IdentityId::FdCrosscheck => "FD_CROSSCHECK",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Optional fault injection, used to demonstrate that the residual checks
/// actually have teeth: flipping the damping sign must fail the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Perturbation {
    #[default]
    None,
    FlipDampingSign,
}

impl Perturbation {
    fn damping_sign(self) -> f64 {
        match self {
            Perturbation::None => 1.0,
            Perturbation::FlipDampingSign => -1.0,
        }
    }
}

/// One scheduled check: which identity, at which parameters, on which grid.
#[derive(Debug, Clone)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub n: Order,
    pub gamma: Option<GammaParam>,
    pub k: Option<f64>,
    pub grid: RadialGrid,
}

/// The result of one [`IdentityCase`], with its pass criterion spelled out.
#[derive(Debug, Clone, Serialize)]
pub struct CaseOutcome {
    pub id: IdentityId,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaParam>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    pub max_abs: f64,
    pub rms: f64,
    pub argmax_point: f64,
    pub n_points: usize,
    /// Sup of the second-derivative mismatch, FD_CROSSCHECK only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_max_abs: Option<f64>,
    /// Deviation shrink factor from gamma = 1e3 to 1e4, LIMIT_GINF only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_ratio: Option<f64>,
    pub criterion: String,
    pub pass: bool,
}

/// All cases of a suite run plus the aggregate verdict.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub pass: bool,
    pub n_cases: usize,
    pub n_failed: usize,
    pub cases: Vec<CaseOutcome>,
}

fn check_grid(grid: &RadialGrid) -> Result<()> {
    if grid.first() <= 0.0 {
        return Err(Error::config(
            "residual checks need a strictly positive grid (r = 0 not allowed)",
        ));
    }
    if grid.last() > MAX_RADIUS {
        return Err(Error::config(format!(
            "grid reaches {} beyond the supported maximum radius {MAX_RADIUS}",
            grid.last()
        )));
    }
    Ok(())
}

/// Residual of J_n'' + (1/r) J_n' + (1 - n^2/r^2) J_n.
pub fn check_bessel_ode(n: Order, grid: &RadialGrid) -> Result<ResidualReport> {
    check_grid(grid)?;
    let nn = n.get();
    let nf = nn as f64;
    ResidualReport::from_samples(grid.points().iter().map(|&r| {
        let res = raw_second_derivative(nn, r)
            + raw_derivative(nn, r) / r
            + (1.0 - nf * nf / (r * r)) * raw_j(nn, r);
        (r, res)
    }))
}

/// Ladder closure. First report: the raising ladder on J_n against
/// -J_{n+1}; second: the lowering ladder on J_{n+1} against J_n.
pub fn check_ladder(n: Order, grid: &RadialGrid) -> Result<(ResidualReport, ResidualReport)> {
    check_grid(grid)?;
    let nn = n.get();
    let nf = nn as f64;
    let raise = ResidualReport::from_samples(grid.points().iter().map(|&r| {
        let res = raw_derivative(nn, r) - (nf / r) * raw_j(nn, r) + raw_j(nn + 1, r);
        (r, res)
    }))?;
    let lower = ResidualReport::from_samples(grid.points().iter().map(|&r| {
        let res =
            raw_derivative(nn + 1, r) + ((nf + 1.0) / r) * raw_j(nn + 1, r) - raw_j(nn, r);
        (r, res)
    }))?;
    Ok((raise, lower))
}

/// Residual of (2n/r) J_n - J_{n+1} - J_{n-1} for n >= 1.
pub fn check_recursion(n: Order, grid: &RadialGrid) -> Result<ResidualReport> {
    if n.get() == 0 {
        return Err(Error::domain("n", 0.0, "recursion check requires n >= 1"));
    }
    check_grid(grid)?;
    let nn = n.get();
    let nf = nn as f64;
    ResidualReport::from_samples(grid.points().iter().map(|&r| {
        let res = (2.0 * nf / r) * raw_j(nn, r) - raw_j(nn + 1, r) - raw_j(nn - 1, r);
        (r, res)
    }))
}

fn partner_ode_residual(n: u32, gamma: GammaParam, r: f64, damping_sign: f64) -> f64 {
    let nf1 = (n + 1) as f64;
    let jt = partner_value(n, gamma, r);
    partner_second_derivative_value(n, gamma, r)
        + partner_derivative_value(n, gamma, r) / r
        + (1.0 - nf1 * nf1 / (r * r)) * jt
        - damping_sign * (damping_value(n, gamma, r) / (r * r)) * jt
}

fn partner_ode_report(
    n: u32,
    gamma: GammaParam,
    grid: &RadialGrid,
    damping_sign: f64,
) -> Result<ResidualReport> {
    ResidualReport::from_samples(
        grid.points()
            .iter()
            .map(|&r| (r, partner_ode_residual(n, gamma, r, damping_sign))),
    )
}

/// Residual of Jt'' + (1/r) Jt' + (1 - (n+1)^2/r^2) Jt - (g/r^2) Jt, the
/// partner equation in the k = 1 normalization. Requires n >= 1 (at n = 0
/// the partner is -J_1 and the plain Bessel check applies).
pub fn check_partner_ode(n: Order, gamma: GammaParam, grid: &RadialGrid) -> Result<ResidualReport> {
    if n.get() == 0 {
        return Err(Error::domain(
            "n",
            0.0,
            "partner equation check requires n >= 1",
        ));
    }
    check_grid(grid)?;
    partner_ode_report(n.get(), gamma, grid, 1.0)
}

fn scaled_ode_residual(n: u32, gamma: GammaParam, k: f64, r: f64, damping_sign: f64) -> f64 {
    let nf1 = (n + 1) as f64;
    let u = k * r;
    let jt = partner_value(n, gamma, u);
    (r * k) * (r * k) * partner_second_derivative_value(n, gamma, u)
        + r * k * partner_derivative_value(n, gamma, u)
        + (k * k * r * r - nf1 * nf1) * jt
        - damping_sign * damping_value(n, gamma, u) * jt
}

fn scaled_ode_report(
    n: u32,
    gamma: GammaParam,
    k: f64,
    grid: &RadialGrid,
    damping_sign: f64,
) -> Result<ResidualReport> {
    ResidualReport::from_samples(
        grid.points()
            .iter()
            .map(|&r| (r, scaled_ode_residual(n, gamma, k, r, damping_sign))),
    )
}

fn validate_scaled_setup(k: f64, grid: &RadialGrid) -> Result<()> {
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::domain("k", k, "must be positive and finite"));
    }
    if grid.first() <= 0.0 {
        return Err(Error::config(
            "residual checks need a strictly positive grid (r = 0 not allowed)",
        ));
    }
    if grid.last() * k > MAX_RADIUS {
        return Err(Error::config(format!(
            "scaled argument k*r = {} exceeds the supported maximum radius {MAX_RADIUS}",
            grid.last() * k
        )));
    }
    Ok(())
}

/// Residual of the wavenumber-scaled partner equation
/// r^2 d^2/dr^2 [Jt(kr)] + r d/dr [Jt(kr)] + (k^2 r^2 - (n+1)^2) Jt(kr)
/// - g(kr) Jt(kr), with chain-rule derivatives. Requires k r <= 50 over the
/// whole grid.
pub fn check_scaled_ode(
    n: Order,
    gamma: GammaParam,
    k: f64,
    grid: &RadialGrid,
) -> Result<ResidualReport> {
    validate_scaled_setup(k, grid)?;
    scaled_ode_report(n.get(), gamma, k, grid, 1.0)
}

/// Pointwise difference between the ladder form -J_{n+1} + (2n/r) wm J_n and
/// the weighted form wp J_{n+1} + wm J_{n-1}. The two are algebraically
/// identical through the recursion, so the difference measures pure rounding.
/// Requires n >= 1 and finite gamma.
pub fn check_form_equivalence(
    n: Order,
    gamma: GammaParam,
    grid: &RadialGrid,
) -> Result<ResidualReport> {
    if n.get() == 0 {
        return Err(Error::domain(
            "n",
            0.0,
            "form equivalence check requires n >= 1",
        ));
    }
    if gamma.is_infinite() {
        return Err(Error::config(
            "form equivalence check requires finite gamma",
        ));
    }
    check_grid(grid)?;
    let nn = n.get();
    let nf = nn as f64;
    ResidualReport::from_samples(grid.points().iter().map(|&r| {
        let (_, wm) = weights(nn, gamma, r);
        let ladder_form = -raw_j(nn + 1, r) + (2.0 * nf / r) * wm * raw_j(nn, r);
        (r, ladder_form - partner_value(nn, gamma, r))
    }))
}

/// Endpoint and tail behavior of the gamma deformation on one grid.
#[derive(Debug, Clone, Serialize)]
pub struct LimitReports {
    /// |Jt(r; 0) - J_{n-1}(r)|; zero as evaluated.
    pub gamma_zero: ResidualReport,
    /// |Jt(r; inf) + J_{n+1}(r)|; zero as evaluated.
    pub gamma_inf: ResidualReport,
    /// 1e3 * |Jt(r; 1e3) + J_{n+1}(r)|.
    pub tail_lo: ResidualReport,
    /// 1e4 * |Jt(r; 1e4) + J_{n+1}(r)|.
    pub tail_hi: ResidualReport,
}

impl LimitReports {
    /// Shrink factor of the unscaled sup-deviation from gamma = 1e3 to 1e4;
    /// close to 10 when the tail decays like 1/gamma (requires a grid with
    /// r >= 1 so the crossover region gamma r^(2n) ~ 1 stays outside).
    pub fn tail_ratio(&self) -> f64 {
        (self.tail_lo.max_abs / 1e3) / (self.tail_hi.max_abs / 1e4)
    }
}

/// Endpoint pinning and tail rate for n >= 1 over the given grid.
pub fn check_limits(n: Order, grid: &RadialGrid) -> Result<LimitReports> {
    if n.get() == 0 {
        return Err(Error::domain("n", 0.0, "limit check requires n >= 1"));
    }
    check_grid(grid)?;
    let nn = n.get();
    let gamma_zero = ResidualReport::from_samples(grid.points().iter().map(|&r| {
        (
            r,
            partner_value(nn, GammaParam::Finite(0.0), r) - raw_j(nn - 1, r),
        )
    }))?;
    let gamma_inf = ResidualReport::from_samples(grid.points().iter().map(|&r| {
        (r, partner_value(nn, GammaParam::Infinite, r) + raw_j(nn + 1, r))
    }))?;
    let tail = |gamma: f64| {
        ResidualReport::from_samples(grid.points().iter().map(|&r| {
            (
                r,
                gamma * (partner_value(nn, GammaParam::Finite(gamma), r) + raw_j(nn + 1, r)),
            )
        }))
    };
    Ok(LimitReports {
        gamma_zero,
        gamma_inf,
        tail_lo: tail(1e3)?,
        tail_hi: tail(1e4)?,
    })
}

/// Mismatch between the analytic partner derivatives and central finite
/// differences of partner values.
#[derive(Debug, Clone, Serialize)]
pub struct FdReports {
    /// First derivative vs the 5-point stencil, step 1e-4.
    pub first: ResidualReport,
    /// Second derivative vs the 3-point stencil, step 1e-3.
    pub second: ResidualReport,
}

const FD_FIRST_STEP: f64 = 1e-4;
const FD_SECOND_STEP: f64 = 1e-3;

/// Finite-difference cross-check of the analytic derivatives. The stencils
/// lose accuracy where 1/r variation is steep, so the grid must stay at
/// r >= 0.1, and its top must leave room for the widest stencil arm.
pub fn check_fd_crosscheck(
    n: Order,
    gamma: GammaParam,
    grid: &RadialGrid,
) -> Result<FdReports> {
    if grid.first() < 0.1 {
        return Err(Error::config(
            "derivative cross-check grid must start at r >= 0.1",
        ));
    }
    if grid.last() + FD_SECOND_STEP > MAX_RADIUS {
        return Err(Error::config(format!(
            "derivative cross-check grid must end at r <= {}",
            MAX_RADIUS - FD_SECOND_STEP
        )));
    }
    let nn = n.get();
    let f = |r: f64| partner_value(nn, gamma, r);
    let first = ResidualReport::from_samples(grid.points().iter().map(|&r| {
        let h = FD_FIRST_STEP;
        let fd = (-f(r + 2.0 * h) + 8.0 * f(r + h) - 8.0 * f(r - h) + f(r - 2.0 * h))
            / (12.0 * h);
        (r, partner_derivative_value(nn, gamma, r) - fd)
    }))?;
    let second = ResidualReport::from_samples(grid.points().iter().map(|&r| {
        let h = FD_SECOND_STEP;
        let fd = (f(r + h) - 2.0 * f(r) + f(r - h)) / (h * h);
        (r, partner_second_derivative_value(nn, gamma, r) - fd)
    }))?;
    Ok(FdReports { first, second })
}

impl IdentityCase {
    fn require_gamma(&self) -> Result<GammaParam> {
        self.gamma
            .ok_or_else(|| Error::config(format!("{} case needs gamma", self.id)))
    }

    fn require_k(&self) -> Result<f64> {
        self.k
            .ok_or_else(|| Error::config(format!("{} case needs k", self.id)))
    }

    /// Run the case and judge it against its built-in criterion.
    pub fn run(&self, perturbation: Perturbation) -> Result<CaseOutcome> {
        let sign = perturbation.damping_sign();
        let (report, second_max_abs, tail_ratio, criterion) = match self.id {
            IdentityId::BesselOde => (
                check_bessel_ode(self.n, &self.grid)?,
                None,
                None,
                format!("max_abs <= {TOL_BESSEL_ODE:e}"),
            ),
            IdentityId::Raise => (
                check_ladder(self.n, &self.grid)?.0,
                None,
                None,
                format!("max_abs <= {TOL_LADDER:e}"),
            ),
            IdentityId::Lower => (
                check_ladder(self.n, &self.grid)?.1,
                None,
                None,
                format!("max_abs <= {TOL_LADDER:e}"),
            ),
            IdentityId::Recursion => (
                check_recursion(self.n, &self.grid)?,
                None,
                None,
                format!("max_abs <= {TOL_RECURSION:e}"),
            ),
            IdentityId::PartnerOde => {
                if self.n.get() == 0 {
                    return Err(Error::domain(
                        "n",
                        0.0,
                        "partner equation check requires n >= 1",
                    ));
                }
                check_grid(&self.grid)?;
                (
                    partner_ode_report(self.n.get(), self.require_gamma()?, &self.grid, sign)?,
                    None,
                    None,
                    format!("max_abs <= {TOL_PARTNER_ODE:e}"),
                )
            }
            IdentityId::ScaledOde => {
                let gamma = self.require_gamma()?;
                let k = self.require_k()?;
                validate_scaled_setup(k, &self.grid)?;
                (
                    scaled_ode_report(self.n.get(), gamma, k, &self.grid, sign)?,
                    None,
                    None,
                    format!("max_abs <= {TOL_SCALED_ODE:e}"),
                )
            }
            IdentityId::FormEquiv => (
                check_form_equivalence(self.n, self.require_gamma()?, &self.grid)?,
                None,
                None,
                format!("max_abs <= {TOL_FORM_EQUIV:e}"),
            ),
            IdentityId::LimitG0 => (
                check_limits(self.n, &self.grid)?.gamma_zero,
                None,
                None,
                format!("max_abs <= {TOL_LIMIT_PIN:e}"),
            ),
            IdentityId::LimitGinf => {
                let limits = check_limits(self.n, &self.grid)?;
                let ratio = limits.tail_ratio();
                (
                    limits.gamma_inf,
                    None,
                    Some(ratio),
                    format!(
                        "max_abs <= {TOL_LIMIT_PIN:e} and tail_ratio in [{TAIL_RATIO_LO}, {TAIL_RATIO_HI}]"
                    ),
                )
            }
            IdentityId::FdCrosscheck => {
                let reports = check_fd_crosscheck(self.n, self.require_gamma()?, &self.grid)?;
                (
                    reports.first,
                    Some(reports.second.max_abs),
                    None,
                    format!(
                        "max_abs <= {TOL_FD_FIRST:e} and second_max_abs <= {TOL_FD_SECOND:e}"
                    ),
                )
            }
        };

        let pass = match self.id {
            IdentityId::BesselOde => report.max_abs <= TOL_BESSEL_ODE,
            IdentityId::Raise | IdentityId::Lower => report.max_abs <= TOL_LADDER,
            IdentityId::Recursion => report.max_abs <= TOL_RECURSION,
            IdentityId::PartnerOde => report.max_abs <= TOL_PARTNER_ODE,
            IdentityId::ScaledOde => report.max_abs <= TOL_SCALED_ODE,
            IdentityId::FormEquiv => report.max_abs <= TOL_FORM_EQUIV,
            IdentityId::LimitG0 => report.max_abs <= TOL_LIMIT_PIN,
            IdentityId::LimitGinf => {
                let ratio = tail_ratio.unwrap();
                report.max_abs <= TOL_LIMIT_PIN
                    && ratio >= TAIL_RATIO_LO
                    && ratio <= TAIL_RATIO_HI
            }
            IdentityId::FdCrosscheck => {
                report.max_abs <= TOL_FD_FIRST && second_max_abs.unwrap() <= TOL_FD_SECOND
            }
        };

        Ok(CaseOutcome {
            id: self.id,
            n: self.n.get(),
            gamma: self.gamma,
            k: self.k,
            max_abs: report.max_abs,
            rms: report.rms,
            argmax_point: report.argmax_point,
            n_points: report.n_points,
            second_max_abs,
            tail_ratio,
            criterion,
            pass,
        })
    }
}

/// r in [0.05, 30] step 0.05, the grid the residual identities are judged on.
pub fn default_grid() -> RadialGrid {
    RadialGrid::uniform(0.05, 30.0, 0.05).expect("static grid parameters are valid")
}

/// r in [1, 30] step 0.05; keeps the weight crossover gamma r^(2n) ~ 1 out of
/// the window so the 1/gamma tail rate is clean.
pub fn limit_tail_grid() -> RadialGrid {
    RadialGrid::uniform(1.0, 30.0, 0.05).expect("static grid parameters are valid")
}

/// r in [0.1, 30] step 0.05, for the finite-difference stencils.
pub fn fd_grid() -> RadialGrid {
    RadialGrid::uniform(0.1, 30.0, 0.05).expect("static grid parameters are valid")
}

/// Grid for the scaled equation at wavenumber k: capped so k r stays inside
/// the evaluation domain with a safety margin of one step.
pub fn scaled_grid(k: f64) -> RadialGrid {
    let stop = (MAX_RADIUS / k - 0.05).min(30.0);
    RadialGrid::uniform(0.05, stop, 0.05).expect("static grid parameters are valid")
}

pub const SUITE_GAMMAS: [GammaParam; 6] = [
    GammaParam::Finite(0.0),
    GammaParam::Finite(0.1),
    GammaParam::Finite(1.0),
    GammaParam::Finite(10.0),
    GammaParam::Finite(100.0),
    GammaParam::Infinite,
];

pub const SUITE_WAVENUMBERS: [f64; 3] = [0.5, 1.0, 2.0];

pub const SUITE_MAX_ORDER: u32 = 5;

/// Gammas for the finite-difference rows. The fixed stencil steps resolve
/// the weight layer near r = gamma^(-1/(2n)) only while it is broad: its
/// fourth derivative grows with gamma (like gamma^2 at n = 1) and drives the
/// h = 1e-3 truncation past 1e-5 around gamma = 10 for n <= 3, so the
/// sharp-layer gammas are checked through the ODE residuals instead.
pub const SUITE_FD_GAMMAS: [GammaParam; 4] = [
    GammaParam::Finite(0.0),
    GammaParam::Finite(0.1),
    GammaParam::Finite(1.0),
    GammaParam::Infinite,
];

/// The full default matrix in its canonical (deterministic) order.
pub fn default_suite_cases() -> Vec<IdentityCase> {
    let order = |n: u32| Order::new(n).expect("suite orders are within the cap");
    let mut cases = Vec::new();
    let standard = default_grid();

    for n in 0..=SUITE_MAX_ORDER {
        cases.push(IdentityCase {
            id: IdentityId::BesselOde,
            n: order(n),
            gamma: None,
            k: None,
            grid: standard.clone(),
        });
    }
    for id in [IdentityId::Raise, IdentityId::Lower] {
        for n in 0..=SUITE_MAX_ORDER {
            cases.push(IdentityCase {
                id,
                n: order(n),
                gamma: None,
                k: None,
                grid: standard.clone(),
            });
        }
    }
    for n in 1..=SUITE_MAX_ORDER {
        cases.push(IdentityCase {
            id: IdentityId::Recursion,
            n: order(n),
            gamma: None,
            k: None,
            grid: standard.clone(),
        });
    }
    for n in 1..=SUITE_MAX_ORDER {
        for gamma in SUITE_GAMMAS {
            cases.push(IdentityCase {
                id: IdentityId::PartnerOde,
                n: order(n),
                gamma: Some(gamma),
                k: None,
                grid: standard.clone(),
            });
        }
    }
    for n in 0..=SUITE_MAX_ORDER {
        for gamma in SUITE_GAMMAS {
            for k in SUITE_WAVENUMBERS {
                cases.push(IdentityCase {
                    id: IdentityId::ScaledOde,
                    n: order(n),
                    gamma: Some(gamma),
                    k: Some(k),
                    grid: scaled_grid(k),
                });
            }
        }
    }
    for n in 1..=SUITE_MAX_ORDER {
        for gamma in SUITE_GAMMAS {
            if gamma.is_infinite() {
                continue;
            }
            cases.push(IdentityCase {
                id: IdentityId::FormEquiv,
                n: order(n),
                gamma: Some(gamma),
                k: None,
                grid: standard.clone(),
            });
        }
    }
    for n in 1..=SUITE_MAX_ORDER {
        cases.push(IdentityCase {
            id: IdentityId::LimitG0,
            n: order(n),
            gamma: None,
            k: None,
            grid: standard.clone(),
        });
    }
    for n in 1..=SUITE_MAX_ORDER {
        cases.push(IdentityCase {
            id: IdentityId::LimitGinf,
            n: order(n),
            gamma: None,
            k: None,
            grid: limit_tail_grid(),
        });
    }
    for n in 1..=SUITE_MAX_ORDER {
        for gamma in SUITE_FD_GAMMAS {
            cases.push(IdentityCase {
                id: IdentityId::FdCrosscheck,
                n: order(n),
                gamma: Some(gamma),
                k: None,
                grid: fd_grid(),
            });
        }
    }
    cases
}

/// Run the default matrix. The aggregate passes only if every case does.
pub fn run_default_suite(perturbation: Perturbation) -> Result<SuiteReport> {
    let mut cases = Vec::new();
    for case in default_suite_cases() {
        cases.push(case.run(perturbation)?);
    }
    let n_failed = cases.iter().filter(|c| !c.pass).count();
    Ok(SuiteReport {
        pass: n_failed == 0,
        n_cases: cases.len(),
        n_failed,
        cases,
    })
}
