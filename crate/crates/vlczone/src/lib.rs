//! # vlczone
//!
//! Design and simulation toolkit for OFDMA-based indoor visible-light
//! communication (VLC) networks in which every lighting cell is split into an
//! inner disc (Zone 0, primary users) and an outer ring (Zone 1, secondary
//! users and handover headroom).
//!
//! The crate covers the full chain from link physics to network-level
//! statistics:
//!
//! - [`channel`] — Lambertian line-of-sight optics: channel gain,
//!   per-subcarrier SNR and achievable rate for a single AP–user link.
//! - [`zone`] — sizing of the Zone-0 radius and subcarrier split under
//!   illumination and handover constraints, plus the area-spectral-efficiency
//!   objective with its closed-form / quadrature rate pair.
//! - [`network`] — multi-AP placement in a rectangular hall, cell adjacency,
//!   and interference-free Zone-1 subcarrier band assignment.
//! - [`sim`] — seeded Monte Carlo mobility simulation producing zone failure
//!   rates and handover statistics.
//! - [`scenario`] — JSON scenario files tying all parameters together; the
//!   `vlczone` binary drives design/sweep/simulate runs from them.
//!
//! All angles are radians internally; degrees appear only at the scenario and
//! CLI boundary. All positions are 2-D coordinates on the receiver plane; the
//! vertical separation of the transmitter and receiver planes enters through
//! the access-point geometry.

pub mod channel;
pub mod error;
pub mod network;
pub mod scenario;
pub mod sim;
pub mod zone;

pub use channel::{AccessPoint, ApParams, Point, ReceiverModel};
pub use error::{Error, Result};
pub use network::{Hall, LayoutTemplate, NetworkLayout, SubcarrierAssignment, Zone};
pub use scenario::Scenario;
pub use sim::{FailureStats, SimConfig};
pub use zone::{BandwidthInterp, IlluminationSpec, MobilitySpec, ZoneDesign};
