//! Zone sizing under illumination and handover constraints.
//!
//! A lighting cell of radius `r_k` is split into an inner disc of radius
//! `r0` (Zone 0) holding `n0` subcarriers and the remaining ring (Zone 1)
//! holding the rest. This module computes the admissible range of `r0`:
//!
//! - the illumination limit `Lambda`: with the cell-center illuminance pinned
//!   to the allowed maximum, the Zone-0 edge must still meet the minimum;
//! - the handover limit `lambda`: one subcarrier per primary user, a fraction
//!   `beta` of them leaving Zone 0, and a per-handover signaling cost
//!   `B_HO` must all fit into the cell's subcarrier budget;
//! - the service floor `r0_min`: the disc must be large enough to hold the
//!   target number of primary users at the ambient user density.
//!
//! It also evaluates the area-spectral-efficiency objective through two
//! independent routes: a closed-form high-SNR expression for the average
//! per-subcarrier rate over a zone, and an adaptive-quadrature average of
//! the exact rate integrand. The closed form is only trustworthy while the
//! SNR across the zone stays high; [`rate_agreement`] quantifies the gap so
//! callers can surface a diagnostic instead of silently accepting it.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::channel::{snr_per_subcarrier, AccessPoint, ReceiverModel};
use crate::error::{domain_err, Error, Result};

/// Relative tolerance of the adaptive quadrature used by
/// [`avg_subcarrier_rate_numeric`].
pub const QUADRATURE_REL_TOL: f64 = 1e-8;

/// Relative disagreement between the closed-form and quadrature rates above
/// which a design report should carry a diagnostic.
pub const RATE_AGREEMENT_DIAGNOSTIC: f64 = 0.10;

/// Target illuminance window for Zone 0 (lux).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IlluminationSpec {
    /// Minimum illuminance at the Zone-0 edge (lx).
    pub e_min: f64,
    /// Maximum illuminance at the cell center (lx), eye-safety cap.
    pub e_max: f64,
}

impl IlluminationSpec {
    pub fn new(e_min: f64, e_max: f64) -> Result<Self> {
        if !(e_min > 0.0) {
            return domain_err(format!("e_min must be positive, got {e_min}"));
        }
        if !(e_max >= e_min) {
            return domain_err(format!("e_max must be at least e_min, got [{e_min}, {e_max}]"));
        }
        Ok(IlluminationSpec { e_min, e_max })
    }

    /// Brightness ratio `e_max / e_min`.
    pub fn ratio(&self) -> f64 {
        self.e_max / self.e_min
    }
}

/// User density and handover dimensioning parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MobilitySpec {
    /// User density over the indoor area (user/m^2).
    pub epsilon: f64,
    /// Fraction of primary users assumed to leave Zone 0.
    pub beta: f64,
    /// Bandwidth-equivalent signaling cost of one handover (bits);
    /// `b_ho / B_sub` is the subcarrier cost per handover.
    pub b_ho: f64,
    /// Target number of primary users to serve.
    pub u_pu: u32,
}

impl MobilitySpec {
    pub fn new(epsilon: f64, beta: f64, b_ho: f64, u_pu: u32) -> Result<Self> {
        if !(epsilon > 0.0) {
            return domain_err(format!("epsilon must be positive, got {epsilon}"));
        }
        if !(0.0..=1.0).contains(&beta) {
            return domain_err(format!("beta must lie in [0, 1], got {beta}"));
        }
        if !(b_ho >= 0.0) {
            return domain_err(format!("b_ho must be nonnegative, got {b_ho}"));
        }
        Ok(MobilitySpec {
            epsilon,
            beta,
            b_ho,
            u_pu,
        })
    }
}

/// Result of sizing Zone 0 of one cell, together with the constraint limits
/// that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZoneDesign {
    /// Chosen Zone-0 radius, `min(big_lambda_cap, lambda_cap)` (m).
    pub r0: f64,
    /// Width of the Zone-1 ring, `r_k - r0` (m).
    pub r1_width: f64,
    /// Subcarriers allocated to Zone 0.
    pub n0: u32,
    /// Subcarriers allocated to Zone 1 (`n_cell - n0`).
    pub n1: u32,
    /// Handover radius limit before clamping to the cell radius (m).
    pub lambda_raw: f64,
    /// Handover radius limit, clamped to the cell radius (m).
    pub lambda_cap: f64,
    /// Illumination radius limit (m).
    pub big_lambda_cap: f64,
    /// Service floor `sqrt(u_pu / (pi epsilon))` (m).
    pub r0_min: f64,
}

impl ZoneDesign {
    /// Upper end of the feasible Zone-0 radius interval.
    pub fn r0_max(&self) -> f64 {
        self.lambda_cap.min(self.big_lambda_cap)
    }

    /// Full feasible interval `[r0_min, min(Lambda, lambda)]`; callers
    /// maximizing area spectral efficiency should pick the lower end.
    pub fn feasible_interval(&self) -> (f64, f64) {
        (self.r0_min, self.r0_max())
    }

    /// Optical power split `(p0, p1)` implied by the subcarrier split;
    /// the two parts sum to `p_cell` exactly.
    pub fn power_split(&self, p_cell: f64) -> (f64, f64) {
        let n_cell = (self.n0 + self.n1) as f64;
        let p0 = p_cell * self.n0 as f64 / n_cell;
        (p0, p_cell - p0)
    }

    /// Bandwidth split `(b0, b1)` implied by the subcarrier split;
    /// the two parts sum to `b_cell` exactly.
    pub fn bandwidth_split(&self, b_cell: f64) -> (f64, f64) {
        let n_cell = (self.n0 + self.n1) as f64;
        let b0 = b_cell * self.n0 as f64 / n_cell;
        (b0, b_cell - b0)
    }
}

/// Illuminance (lx) at horizontal distance `r` from the center of an AP with
/// axial luminous intensity `i0`:
///
/// `E = i0 * d_v^(m+1) / (r^2 + d_v^2)^((m+3)/2)`
pub fn illuminance_at(i0: f64, d_v: f64, m: f64, r: f64) -> f64 {
    debug_assert!(d_v > 0.0 && r >= 0.0 && i0 >= 0.0);
    i0 * d_v.powf(m + 1.0) / (r * r + d_v * d_v).powf((m + 3.0) / 2.0)
}

/// Admissible axial luminous intensity interval `[e_min d_v^2, e_max d_v^2]`
/// (cd): the cell center may not exceed `e_max` and must be able to reach
/// `e_min`.
pub fn luminous_intensity_bounds(spec: &IlluminationSpec, d_v: f64) -> (f64, f64) {
    (spec.e_min * d_v * d_v, spec.e_max * d_v * d_v)
}

/// Illumination limit `Lambda` on the Zone-0 radius (m), assuming the
/// center is driven at `i0 = e_max * d_v^2`:
///
/// `Lambda = d_v * sqrt((e_max/e_min)^(2/(m+3)) - 1)`
pub fn illum_radius_limit(spec: &IlluminationSpec, d_v: f64, m: f64) -> f64 {
    debug_assert!(d_v > 0.0 && m > 0.0);
    d_v * (spec.ratio().powf(2.0 / (m + 3.0)) - 1.0).sqrt()
}

/// Largest half-intensity angle for which the illumination constraint is
/// non-binding, returned with `bracketed = true` when a sign change exists
/// in (0, pi/2).
///
/// For `theta` at or below this angle, `Lambda >= r_k`, so the cell radius
/// itself is the only geometric limit. Found by scanning for the outermost
/// sign change of `sqrt(ratio^(2/(m+3)) - 1) - tan(theta)` and bisecting.
/// Ratios of 2 or less yield no root (the constraint binds for every
/// `theta`); the boundary 0 is returned with `bracketed = false`.
pub fn illumination_threshold_angle(ratio: f64) -> Result<(f64, bool)> {
    if !(ratio > 1.0) {
        return domain_err(format!("illuminance ratio must exceed 1, got {ratio}"));
    }
    let margin = |theta: f64| -> f64 {
        let m = -1.0 / theta.cos().log2();
        (ratio.powf(2.0 / (m + 3.0)) - 1.0).sqrt() - theta.tan()
    };
    let lo = 1e-4;
    let hi = FRAC_PI_2 - 1e-9;
    // Scan downwards from pi/2 so the bracket encloses the largest root.
    const STEPS: usize = 2000;
    let mut upper = hi;
    let mut g_upper = margin(upper);
    let mut bracket = None;
    for i in (0..STEPS).rev() {
        let t = lo + (hi - lo) * i as f64 / STEPS as f64;
        let g = margin(t);
        if g > 0.0 && g_upper <= 0.0 {
            bracket = Some((t, upper));
            break;
        }
        upper = t;
        g_upper = g;
    }
    let Some((mut a, mut b)) = bracket else {
        return Ok((0.0, false));
    };
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if margin(mid) > 0.0 {
            a = mid;
        } else {
            b = mid;
        }
        if b - a < 1e-13 {
            break;
        }
    }
    Ok((0.5 * (a + b), true))
}

/// Which bandwidth multiplies the normalized per-subcarrier rate when
/// aggregating into the area-spectral-efficiency objective. The subcarrier
/// reading is the default; the cell reading is kept computable because the
/// two differ only by the constant factor `n_cell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BandwidthInterp {
    /// Rate of one subcarrier uses its own bandwidth `B_sub` (default).
    PerSubcarrier,
    /// Rate of one subcarrier uses the full cell bandwidth `B_cell`.
    PerCell,
}

fn snr_coefficients(ap: &AccessPoint, rx: &ReceiverModel) -> Result<(f64, f64)> {
    let noise = rx.sigma_ratio * rx.n_noise * ap.subcarrier_bandwidth();
    if noise <= 0.0 {
        return domain_err(format!(
            "noise floor must be positive, got sigma_ratio * N_n * B_sub = {noise}"
        ));
    }
    let m = ap.lambertian_index();
    // SNR(r) = rho * c_geom / (r^2 + d_v^2)^(m+3)
    let rho = (rx.gamma * ap.subcarrier_power()).powi(2) / noise;
    let c_geom = (rx.a_d * rx.g * (m + 1.0) * ap.d_v.powf(m + 1.0)).powi(2) / (2.0 * PI).powi(2);
    Ok((rho, c_geom))
}

fn check_annulus(ap: &AccessPoint, r_min: f64, r_max: f64) -> Result<()> {
    let r_k = ap.cell_radius();
    if !(r_min >= 0.0) || !(r_max <= r_k * (1.0 + 1e-12)) {
        return domain_err(format!(
            "zone [{r_min}, {r_max}] must lie within the cell radius {r_k}"
        ));
    }
    if !(r_min < r_max) {
        return domain_err(format!("zone [{r_min}, {r_max}] has no area"));
    }
    Ok(())
}

/// Closed-form average normalized rate (bits/s/Hz) of one subcarrier over an
/// annulus `[r_min, r_max]` of uniformly distributed users, high-SNR
/// approximation:
///
/// `(d_max (ln(rho k_min) + m + 3) - d_min (ln(rho k_max) + m + 3)) / (2 ln2 (r_max^2 - r_min^2))`
///
/// with squared link distances `d_max = r_max^2 + d_v^2`,
/// `d_min = r_min^2 + d_v^2`, SNR scale `rho = (gamma P_sub c)^2 / (ς N_n B_sub)`
/// and geometry factors `k_min/max = (A_d g (m+1) d_v^(m+1))^2 / ((2 pi)^2 d_{max/min}^(m+3))`.
///
/// Valid while the SNR stays well above one across the whole annulus;
/// compare against [`avg_subcarrier_rate_numeric`] before trusting it near
/// the cell edge (see [`rate_agreement`]).
pub fn avg_subcarrier_rate_closed(
    ap: &AccessPoint,
    rx: &ReceiverModel,
    r_min: f64,
    r_max: f64,
) -> Result<f64> {
    check_annulus(ap, r_min, r_max)?;
    let (rho, c_geom) = snr_coefficients(ap, rx)?;
    let rho = rho * rx.c_const * rx.c_const;
    let m = ap.lambertian_index();
    let d_max = r_max * r_max + ap.d_v * ap.d_v;
    let d_min = r_min * r_min + ap.d_v * ap.d_v;
    let kappa_min = c_geom / d_max.powf(m + 3.0);
    let kappa_max = c_geom / d_min.powf(m + 3.0);
    Ok(
        (d_max * ((rho * kappa_min).ln() + m + 3.0) - d_min * ((rho * kappa_max).ln() + m + 3.0))
            / (2.0 * LN_2 * (r_max * r_max - r_min * r_min)),
    )
}

/// Quadrature average of the exact normalized rate
/// `log2(1 + c^2 SNR(r)) / 2` (bits/s/Hz) over the annulus `[r_min, r_max]`,
/// uniform user distribution.
///
/// Substituting `u = r^2 + d_v^2` turns the area average into a smooth 1-D
/// integral, evaluated by adaptive Simpson quadrature to a relative
/// tolerance of [`QUADRATURE_REL_TOL`]. Serves as the independent reference
/// for [`avg_subcarrier_rate_closed`] and as the default rate route in
/// [`ase_with`].
pub fn avg_subcarrier_rate_numeric(
    ap: &AccessPoint,
    rx: &ReceiverModel,
    r_min: f64,
    r_max: f64,
) -> Result<f64> {
    check_annulus(ap, r_min, r_max)?;
    // Fail on a zero noise floor even though the integrand below goes
    // through the channel module, which would also catch it.
    snr_coefficients(ap, rx)?;
    let u_lo = r_min * r_min + ap.d_v * ap.d_v;
    let u_hi = r_max * r_max + ap.d_v * ap.d_v;
    let c2 = rx.c_const * rx.c_const;
    let f = |u: f64| {
        let r = (u - ap.d_v * ap.d_v).max(0.0).sqrt();
        let snr = snr_per_subcarrier(ap, rx, r).expect("noise floor checked above");
        0.5 * (1.0 + c2 * snr).log2()
    };
    let integral = adaptive_simpson(&f, u_lo, u_hi, QUADRATURE_REL_TOL);
    Ok(integral / (u_hi - u_lo))
}

/// Both rate routes over one annulus plus their relative disagreement.
#[derive(Debug, Clone, Copy)]
pub struct RateAgreement {
    pub closed: f64,
    pub numeric: f64,
    /// `|closed - numeric| / |numeric|`.
    pub rel_err: f64,
}

impl RateAgreement {
    /// True when the disagreement warrants a diagnostic (more than
    /// [`RATE_AGREEMENT_DIAGNOSTIC`]): the high-SNR closed form is being
    /// used outside its regime.
    pub fn needs_diagnostic(&self) -> bool {
        self.rel_err > RATE_AGREEMENT_DIAGNOSTIC
    }
}

/// Evaluate both rate routes over `[r_min, r_max]` and report how far apart
/// they are.
pub fn rate_agreement(
    ap: &AccessPoint,
    rx: &ReceiverModel,
    r_min: f64,
    r_max: f64,
) -> Result<RateAgreement> {
    let closed = avg_subcarrier_rate_closed(ap, rx, r_min, r_max)?;
    let numeric = avg_subcarrier_rate_numeric(ap, rx, r_min, r_max)?;
    let rel_err = if numeric == 0.0 {
        if closed == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        ((closed - numeric) / numeric).abs()
    };
    Ok(RateAgreement {
        closed,
        numeric,
        rel_err,
    })
}

/// Normalized mean rate over a zone, treating an empty zone (`r_min ==
/// r_max`) as the limiting point value at that radius.
fn zone_mean_rate(ap: &AccessPoint, rx: &ReceiverModel, r_min: f64, r_max: f64) -> Result<f64> {
    if (r_max - r_min).abs() <= 1e-12 * ap.cell_radius().max(1.0) {
        let snr = snr_per_subcarrier(ap, rx, r_min.min(ap.cell_radius()))?;
        let c2 = rx.c_const * rx.c_const;
        return Ok(0.5 * (1.0 + c2 * snr).log2());
    }
    avg_subcarrier_rate_numeric(ap, rx, r_min, r_max)
}

/// Area spectral efficiency of one cell for a Zone-0 radius `r0` and
/// subcarrier allocation `n0`, under the default per-subcarrier bandwidth
/// reading. See [`ase_with`].
pub fn ase(ap: &AccessPoint, rx: &ReceiverModel, r0: f64, n0: u32) -> Result<f64> {
    ase_with(ap, rx, r0, n0, BandwidthInterp::PerSubcarrier)
}

/// Area spectral efficiency of one cell:
///
/// `eta = (n0 * R0 + (n_cell - n0) * R1) / (pi * B_cell * r_k^2)`
///
/// where `Rz` is the average per-subcarrier rate in bits/s over Zone `z`
/// (quadrature route), obtained from the normalized rate by the bandwidth
/// chosen in `interp`. The two interpretations differ by the constant
/// factor `n_cell`, so the shape over `(r0, n0)` is the same; `eta` is
/// affine in `n0` with positive slope whenever `r0 < r_k`. The boundary
/// cases `r0 = 0` and `r0 = r_k` use the point-value limits of the zone
/// averages.
pub fn ase_with(
    ap: &AccessPoint,
    rx: &ReceiverModel,
    r0: f64,
    n0: u32,
    interp: BandwidthInterp,
) -> Result<f64> {
    let r_k = ap.cell_radius();
    if !(r0 >= 0.0 && r0 <= r_k * (1.0 + 1e-12)) {
        return domain_err(format!("r0 = {r0} must lie in [0, {r_k}]"));
    }
    if n0 > ap.n_cell {
        return domain_err(format!("n0 = {n0} exceeds the cell budget {}", ap.n_cell));
    }
    let r0 = r0.min(r_k);
    let rate0 = zone_mean_rate(ap, rx, 0.0, r0)?;
    let rate1 = zone_mean_rate(ap, rx, r0, r_k)?;
    let bandwidth = match interp {
        BandwidthInterp::PerSubcarrier => ap.subcarrier_bandwidth(),
        BandwidthInterp::PerCell => ap.b_cell,
    };
    let n1 = (ap.n_cell - n0) as f64;
    let aggregate = bandwidth * (n0 as f64 * rate0 + n1 * rate1);
    Ok(aggregate / (PI * ap.b_cell * r_k * r_k))
}

/// Handover limit on the Zone-0 radius, raw and clamped to the cell radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HandoverLimit {
    /// Solution of the subcarrier-budget equality (m); may exceed the cell
    /// radius at low user densities.
    pub raw: f64,
    /// `min(raw, r_k)` (m).
    pub clamped: f64,
}

/// Handover limit `lambda` on the Zone-0 radius:
///
/// `lambda^2 = (n_cell - pi eps r_k^2 q) / (pi eps (1 + beta - q))`,
/// `q = b_ho * n_cell / b_cell`
///
/// derived from granting one subcarrier per primary user, a `beta` share of
/// them leaving Zone 0, and `q` subcarriers of signaling per secondary-user
/// handover. Errors when the handover cost exhausts the budget (nonpositive
/// numerator or denominator).
pub fn handover_radius_limit(ap: &AccessPoint, mob: &MobilitySpec) -> Result<HandoverLimit> {
    let r_k = ap.cell_radius();
    let q = mob.b_ho * ap.n_cell as f64 / ap.b_cell;
    let denominator = PI * mob.epsilon * (1.0 + mob.beta - q);
    if denominator <= 0.0 {
        return Err(Error::Infeasible {
            bound: "1 + beta > B_HO * N_cell / B_cell".into(),
            detail: format!(
                "per-handover signaling cost ({q:.6} subcarriers) exceeds the \
                 per-user budget; no Zone-0 radius satisfies the handover constraint"
            ),
        });
    }
    let numerator = ap.n_cell as f64 - PI * mob.epsilon * r_k * r_k * q;
    if numerator < 0.0 {
        return Err(Error::Infeasible {
            bound: "N_cell >= pi eps r_k^2 B_HO N_cell / B_cell".into(),
            detail: format!(
                "handover signaling for the whole cell population needs \
                 {:.3} subcarriers but only {} exist",
                PI * mob.epsilon * r_k * r_k * q,
                ap.n_cell
            ),
        });
    }
    let raw = (numerator / denominator).sqrt();
    Ok(HandoverLimit {
        raw,
        clamped: raw.min(r_k),
    })
}

/// Maximum number of Zone-0 subcarriers (equivalently, primary users)
/// supportable at density `epsilon` inside the unclamped handover radius:
/// `eps * pi * lambda_raw^2` rounded to the nearest integer and capped at
/// the cell budget.
pub fn max_zone0_subcarriers(mob: &MobilitySpec, lambda_raw: f64, n_cell: u32) -> u32 {
    debug_assert!(lambda_raw >= 0.0);
    let count = mob.epsilon * PI * lambda_raw * lambda_raw;
    (count.round() as u64).min(n_cell as u64) as u32
}

/// Smallest Zone-0 radius able to hold `u_pu` primary users at density
/// `epsilon`: `sqrt(u_pu / (pi epsilon))`. Zero users need zero radius even
/// at zero density; a positive target at zero density is impossible.
pub fn min_zone0_radius(u_pu: u32, epsilon: f64) -> Result<f64> {
    if u_pu == 0 {
        return Ok(0.0);
    }
    if !(epsilon > 0.0) {
        return domain_err(format!(
            "cannot serve {u_pu} primary users at user density {epsilon}"
        ));
    }
    Ok((u_pu as f64 / (PI * epsilon)).sqrt())
}

/// Size Zone 0 of one cell under both constraint families.
///
/// Feasible iff `r0_min <= min(Lambda, lambda)`; the returned design takes
/// the largest admissible radius `r0 = min(Lambda, lambda)` and the
/// handover-limited subcarrier count. Callers preferring maximal area
/// spectral efficiency should use [`ZoneDesign::feasible_interval`] and pick
/// the lower end. Infeasibility names the binding limit.
pub fn design_zone(
    ap: &AccessPoint,
    illum: &IlluminationSpec,
    mob: &MobilitySpec,
) -> Result<ZoneDesign> {
    let m = ap.lambertian_index();
    let r_k = ap.cell_radius();
    let big_lambda = illum_radius_limit(illum, ap.d_v, m);
    let handover = handover_radius_limit(ap, mob)?;
    let r0_min = min_zone0_radius(mob.u_pu, mob.epsilon)?;
    let r0_max = big_lambda.min(handover.clamped);
    if r0_min > r0_max {
        let bound = if big_lambda <= handover.clamped {
            "illumination limit Lambda"
        } else {
            "handover limit lambda"
        };
        return Err(Error::Infeasible {
            bound: bound.into(),
            detail: format!(
                "serving {} primary users at density {} needs r0 >= {:.3} m \
                 but the {} caps it at {:.3} m",
                mob.u_pu, mob.epsilon, r0_min, bound, r0_max
            ),
        });
    }
    let n0 = max_zone0_subcarriers(mob, handover.raw, ap.n_cell);
    Ok(ZoneDesign {
        r0: r0_max,
        r1_width: r_k - r0_max,
        n0,
        n1: ap.n_cell - n0,
        lambda_raw: handover.raw,
        lambda_cap: handover.clamped,
        big_lambda_cap: big_lambda,
        r0_min,
    })
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to the given relative
/// tolerance (anchored at the first whole-interval estimate).
fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let fb = f(b);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let tol = rel_tol * whole.abs();
    if tol == 0.0 {
        // Integrand is identically zero on a few probes; a zero-SNR zone
        // really does integrate to zero, so probe a few more points before
        // trusting it.
        let probe: f64 = (1..8).map(|i| f(a + (b - a) * i as f64 / 8.0).abs()).sum();
        if probe == 0.0 {
            return 0.0;
        }
    }
    simpson_step(f, a, b, fa, fm, fb, whole, tol.max(f64::MIN_POSITIVE), 60)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}
