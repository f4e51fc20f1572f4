//! Lambertian line-of-sight optical channel.
//!
//! Models a single downlink between an LED access point (AP) and a user on
//! the receiver plane: cosine-power radiation pattern, hard circular cell
//! boundary, per-subcarrier SNR under equal power/bandwidth allocation, and
//! the intensity-modulation capacity lower bound.
//!
//! Geometry convention: APs point straight down, receivers straight up, both
//! planes parallel and `d_v` metres apart. For a user at horizontal distance
//! `r` the link distance is `d = sqrt(r^2 + d_v^2)` and the irradiance and
//! incidence angles coincide, `cos(phi) = cos(psi) = d_v / d`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{domain_err, Result};

/// A point on the receiver plane, metres.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Euclidean distance to `other`.
    pub fn distance(&self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Geometry, optics and resource budget of one LED cell.
///
/// Every subcarrier of the cell carries the same power `p_cell / n_cell` and
/// bandwidth `b_cell / n_cell`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AccessPoint {
    /// Identifier, unique within a layout.
    pub id: u32,
    /// Cell center projected onto the receiver plane (m).
    pub center: Point,
    /// Half-intensity viewing angle (rad), in (0, pi/2).
    pub theta: f64,
    /// Vertical separation of transmitter and receiver planes (m).
    pub d_v: f64,
    /// Total optical power (W).
    pub p_cell: f64,
    /// Total bandwidth (Hz).
    pub b_cell: f64,
    /// Total subcarrier count.
    pub n_cell: u32,
    /// Maximum luminous intensity along the beam axis (cd).
    pub i0: f64,
}

/// Per-cell parameters shared by all APs of a layout; the center is assigned
/// at placement time. When `i0` is absent it defaults to the value that puts
/// the cell-center illuminance at the configured maximum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApParams {
    pub theta: f64,
    pub p_cell: f64,
    pub b_cell: f64,
    pub n_cell: u32,
    pub i0: Option<f64>,
}

impl AccessPoint {
    /// Validated constructor.
    pub fn new(
        id: u32,
        center: Point,
        theta: f64,
        d_v: f64,
        p_cell: f64,
        b_cell: f64,
        n_cell: u32,
        i0: f64,
    ) -> Result<Self> {
        if !(theta > 0.0 && theta < FRAC_PI_2) {
            return domain_err(format!("theta must lie in (0, pi/2), got {theta}"));
        }
        if !(d_v > 0.0) {
            return domain_err(format!("d_v must be positive, got {d_v}"));
        }
        if !(p_cell > 0.0) {
            return domain_err(format!("p_cell must be positive, got {p_cell}"));
        }
        if !(b_cell > 0.0) {
            return domain_err(format!("b_cell must be positive, got {b_cell}"));
        }
        if n_cell == 0 {
            return domain_err("n_cell must be at least 1");
        }
        if !(i0 >= 0.0) {
            return domain_err(format!("i0 must be nonnegative, got {i0}"));
        }
        Ok(AccessPoint {
            id,
            center,
            theta,
            d_v,
            p_cell,
            b_cell,
            n_cell,
            i0,
        })
    }

    /// Instantiate from shared parameters at a given center; `default_i0`
    /// is used when the parameters carry none.
    pub fn from_params(id: u32, center: Point, params: &ApParams, d_v: f64, default_i0: f64) -> Result<Self> {
        AccessPoint::new(
            id,
            center,
            params.theta,
            d_v,
            params.p_cell,
            params.b_cell,
            params.n_cell,
            params.i0.unwrap_or(default_i0),
        )
    }

    /// Lambertian index of this AP's radiation pattern.
    pub fn lambertian_index(&self) -> f64 {
        lambertian_index(self.theta).expect("theta validated at construction")
    }

    /// Hard cell-boundary radius `d_v * tan(theta)` (m).
    pub fn cell_radius(&self) -> f64 {
        cell_radius(self.d_v, self.theta).expect("geometry validated at construction")
    }

    /// Optical power per subcarrier (W).
    pub fn subcarrier_power(&self) -> f64 {
        self.p_cell / self.n_cell as f64
    }

    /// Bandwidth per subcarrier (Hz).
    pub fn subcarrier_bandwidth(&self) -> f64 {
        self.b_cell / self.n_cell as f64
    }
}

/// Photodiode and noise parameters shared by all users.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReceiverModel {
    /// Photodiode physical area (m^2).
    pub a_d: f64,
    /// Optical-to-electrical conversion efficiency (A/W).
    pub gamma: f64,
    /// Field-of-view half-angle (rad), in (0, pi/2].
    pub psi_c: f64,
    /// Optical concentrator gain inside the field of view; light arriving
    /// beyond `psi_c` contributes nothing.
    pub g: f64,
    /// Noise power spectral density (A^2/Hz).
    pub n_noise: f64,
    /// Ratio of average optical to average electrical transmit power.
    pub sigma_ratio: f64,
    /// Capacity-bound constant in (0, 1].
    pub c_const: f64,
}

impl ReceiverModel {
    /// Validated constructor.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a_d: f64,
        gamma: f64,
        psi_c: f64,
        g: f64,
        n_noise: f64,
        sigma_ratio: f64,
        c_const: f64,
    ) -> Result<Self> {
        for (name, v) in [
            ("a_d", a_d),
            ("gamma", gamma),
            ("g", g),
            ("n_noise", n_noise),
            ("sigma_ratio", sigma_ratio),
        ] {
            if !(v >= 0.0) {
                return domain_err(format!("{name} must be nonnegative, got {v}"));
            }
        }
        if !(psi_c > 0.0 && psi_c <= FRAC_PI_2) {
            return domain_err(format!("psi_c must lie in (0, pi/2], got {psi_c}"));
        }
        if !(c_const > 0.0 && c_const <= 1.0) {
            return domain_err(format!("c_const must lie in (0, 1], got {c_const}"));
        }
        Ok(ReceiverModel {
            a_d,
            gamma,
            psi_c,
            g,
            n_noise,
            sigma_ratio,
            c_const,
        })
    }
}

impl Default for ReceiverModel {
    /// 1 cm^2 photodiode, 0.53 A/W responsivity, 90 degree field of view,
    /// unity concentrator gain, 1e-21 A^2/Hz noise density.
    fn default() -> Self {
        ReceiverModel {
            a_d: 1e-4,
            gamma: 0.53,
            psi_c: FRAC_PI_2,
            g: 1.0,
            n_noise: 1e-21,
            sigma_ratio: 1.0,
            c_const: 1.0,
        }
    }
}

/// Lambertian index `m = -1 / log2(cos(theta))` for a half-intensity viewing
/// angle `theta` in (0, pi/2).
///
/// Narrow beams yield large `m`; `m` is strictly decreasing in `theta`
/// (60 degrees gives m = 1, 45 degrees gives m = 2).
pub fn lambertian_index(theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return domain_err(format!("theta must lie in (0, pi/2), got {theta}"));
    }
    Ok(-1.0 / theta.cos().log2())
}

/// Cell radius `d_v * tan(theta)` of the hard lighting cone boundary (m).
pub fn cell_radius(d_v: f64, theta: f64) -> Result<f64> {
    if !(d_v > 0.0) {
        return domain_err(format!("d_v must be positive, got {d_v}"));
    }
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return domain_err(format!("theta must lie in (0, pi/2), got {theta}"));
    }
    Ok(d_v * theta.tan())
}

/// Line-of-sight channel gain at horizontal distance `r` from the cell
/// center:
///
/// `h = (m+1) * A_d * g * d_v^(m+1) / (2 pi * d^(m+3))`, `d = sqrt(r^2 + d_v^2)`
///
/// Zero outside the hard cell boundary (`r > cell radius`) and outside the
/// receiver field of view.
pub fn channel_gain(ap: &AccessPoint, rx: &ReceiverModel, horizontal_distance: f64) -> f64 {
    debug_assert!(horizontal_distance >= 0.0);
    let r = horizontal_distance;
    if r > ap.cell_radius() {
        return 0.0;
    }
    // Incidence angle for an upward-facing receiver: psi = atan(r / d_v).
    if (r / ap.d_v).atan() > rx.psi_c {
        return 0.0;
    }
    let m = ap.lambertian_index();
    let d2 = r * r + ap.d_v * ap.d_v;
    (m + 1.0) * rx.a_d * rx.g * ap.d_v.powf(m + 1.0) / (2.0 * PI * d2.powf((m + 3.0) / 2.0))
}

/// Per-subcarrier electrical SNR at horizontal distance `r`:
///
/// `SNR = (gamma * P_sub * h)^2 / (sigma_ratio * N_n * B_sub)`
///
/// Errors when the noise floor `sigma_ratio * N_n * B_sub` is zero.
pub fn snr_per_subcarrier(ap: &AccessPoint, rx: &ReceiverModel, horizontal_distance: f64) -> Result<f64> {
    let noise = rx.sigma_ratio * rx.n_noise * ap.subcarrier_bandwidth();
    if noise <= 0.0 {
        return domain_err(format!(
            "noise floor must be positive, got sigma_ratio * N_n * B_sub = {noise}"
        ));
    }
    let h = channel_gain(ap, rx, horizontal_distance);
    if h == 0.0 {
        return Ok(0.0);
    }
    let signal = rx.gamma * ap.subcarrier_power() * h;
    Ok(signal * signal / noise)
}

/// Achievable rate (capacity lower bound) of one subcarrier, bits/s:
///
/// `R = (bandwidth / 2) * log2(1 + c^2 * snr)`
pub fn rate_per_subcarrier(snr: f64, bandwidth: f64, c: f64) -> f64 {
    debug_assert!(snr >= 0.0 && bandwidth > 0.0);
    bandwidth / 2.0 * (1.0 + c * c * snr).log2()
}
