//! Multi-AP layout in a rectangular hall and interference-free Zone-1 band
//! assignment.
//!
//! APs sit on the hall's long-axis midline at equal spacing chosen from the
//! requested overlap width between neighbouring cells. Because adjacent
//! cells reuse the same spectrum, every pair of neighbours must keep their
//! Zone-1 subcarrier index ranges disjoint; the overlap lens of two cells
//! then sees each subcarrier transmitted by at most one AP. The layout also
//! enforces that the overlap region lies entirely outside both Zone-0 discs,
//! so primary users never stand in a co-channel area.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::channel::{AccessPoint, ApParams, Point};
use crate::error::{domain_err, Error, Result};
use crate::zone::{design_zone, IlluminationSpec, MobilitySpec, ZoneDesign};

/// Rectangular hall; the ceiling height doubles as the vertical separation
/// `d_v` between the AP plane and the receiver plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hall {
    /// Extent along x (m).
    pub length: f64,
    /// Extent along y (m).
    pub width: f64,
    /// Ceiling height / vertical plane separation (m).
    pub height: f64,
}

impl Hall {
    pub fn new(length: f64, width: f64, height: f64) -> Result<Self> {
        for (name, v) in [("length", length), ("width", width), ("height", height)] {
            if !(v > 0.0) {
                return domain_err(format!("hall {name} must be positive, got {v}"));
            }
        }
        Ok(Hall {
            length,
            width,
            height,
        })
    }

    pub fn area(&self) -> f64 {
        self.length * self.width
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= 0.0 && p.x <= self.length && p.y >= 0.0 && p.y <= self.width
    }

    fn corners(&self) -> [Point; 4] {
        [
            Point::new(0.0, 0.0),
            Point::new(self.length, 0.0),
            Point::new(0.0, self.width),
            Point::new(self.length, self.width),
        ]
    }
}

/// Zone classification of a covered point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Zone {
    Zone0,
    Zone1,
}

/// Result of mapping a position to its serving AP.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Located {
    Covered { ap_id: u32, zone: Zone },
    OutOfCoverage,
}

/// Everything needed to instantiate a layout: hall, AP count, overlap width
/// and the shared per-cell parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayoutTemplate {
    pub hall: Hall,
    pub k: u32,
    /// Maximum chord-wise depth of the lens shared by two adjacent cells (m).
    pub overlap_width: f64,
    pub ap: ApParams,
    pub illum: IlluminationSpec,
    pub mob: MobilitySpec,
}

impl LayoutTemplate {
    /// Same geometry with different dimensioning parameters.
    pub fn with_mobility(&self, mob: MobilitySpec) -> Self {
        LayoutTemplate {
            mob,
            ..self.clone()
        }
    }
}

/// Placed APs with their zone designs, adjacency and coverage diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkLayout {
    pub hall: Hall,
    pub aps: Vec<AccessPoint>,
    /// Pairs of AP ids whose cells overlap, in chain order.
    pub adjacency: Vec<(u32, u32)>,
    /// One design per AP, in `aps` order.
    pub zone_designs: Vec<ZoneDesign>,
    /// Hall corners not covered by any cell; empty when the union of discs
    /// reaches all four corners.
    pub uncovered_corners: Vec<Point>,
}

impl NetworkLayout {
    /// Total Zone-0 subcarrier capacity across all cells.
    pub fn zone0_capacity(&self) -> u64 {
        self.zone_designs.iter().map(|d| d.n0 as u64).sum()
    }

    /// Total subcarriers across all cells.
    pub fn total_subcarriers(&self) -> u64 {
        self.aps.iter().map(|ap| ap.n_cell as u64).sum()
    }

    /// Zone-1 capacity: everything not reserved for Zone 0.
    pub fn zone1_capacity(&self) -> u64 {
        self.total_subcarriers() - self.zone0_capacity()
    }

    fn ap_index(&self, id: u32) -> usize {
        self.aps
            .iter()
            .position(|ap| ap.id == id)
            .expect("adjacency refers to placed APs")
    }
}

/// Subcarrier index ranges of one AP; the two ranges partition
/// `0..n_cell`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApBands {
    pub ap_id: u32,
    pub zone0: Range<u32>,
    pub zone1: Range<u32>,
}

/// Per-AP subcarrier index assignment with disjoint Zone-1 bands across
/// every adjacent pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubcarrierAssignment {
    pub per_ap: Vec<ApBands>,
}

impl SubcarrierAssignment {
    pub fn bands_for(&self, ap_id: u32) -> Option<&ApBands> {
        self.per_ap.iter().find(|b| b.ap_id == ap_id)
    }

    /// Brute-force disjointness check: walks every adjacent pair and every
    /// subcarrier index, independent of how the assignment was constructed.
    /// Returns the violating pairs (empty means interference-free).
    pub fn violating_pairs(&self, adjacency: &[(u32, u32)]) -> Vec<(u32, u32)> {
        let mut bad = Vec::new();
        for &(a, b) in adjacency {
            let (Some(ba), Some(bb)) = (self.bands_for(a), self.bands_for(b)) else {
                bad.push((a, b));
                continue;
            };
            let hit = ba
                .zone1
                .clone()
                .any(|idx| bb.zone1.clone().any(|other| other == idx));
            if hit {
                bad.push((a, b));
            }
        }
        bad
    }
}

/// Place `k` identical cells along the hall midline.
///
/// Spacing is `2 r_k - overlap_width`, centered in the hall; adjacency links
/// consecutive cells whose discs genuinely overlap. Per-AP zone designs are
/// computed on the spot. Corners left uncovered by the union of discs are
/// reported, not rejected: honoring the requested overlap width takes
/// precedence over full-floor coverage, and callers can inspect
/// `uncovered_corners`.
///
/// Errors when the AP centers would leave the hall, when the overlap width
/// is geometrically impossible, or when any adjacent overlap region would
/// intrude into a Zone-0 disc.
pub fn build_layout(template: &LayoutTemplate) -> Result<NetworkLayout> {
    let hall = template.hall;
    let k = template.k;
    if k < 1 {
        return Err(Error::Layout("at least one AP is required".into()));
    }
    let d_v = hall.height;
    let probe = AccessPoint::from_params(0, Point::new(0.0, 0.0), &template.ap, d_v, 1.0)?;
    let r_k = probe.cell_radius();
    let overlap = template.overlap_width;
    if !(0.0..2.0 * r_k).contains(&overlap) {
        return Err(Error::Layout(format!(
            "overlap width {overlap} m must lie in [0, {}) for cells of radius {r_k} m",
            2.0 * r_k
        )));
    }
    let spacing = 2.0 * r_k - overlap;
    let mid_y = hall.width / 2.0;
    let default_i0 = template.illum.e_max * d_v * d_v;

    let mut aps = Vec::with_capacity(k as usize);
    for i in 0..k {
        let x = hall.length / 2.0 + (i as f64 - (k as f64 - 1.0) / 2.0) * spacing;
        if x < 0.0 || x > hall.length {
            return Err(Error::Layout(format!(
                "{k} APs at spacing {spacing:.3} m span {:.3} m and leave the {} m hall",
                (k as f64 - 1.0) * spacing,
                hall.length
            )));
        }
        aps.push(AccessPoint::from_params(
            i + 1,
            Point::new(x, mid_y),
            &template.ap,
            d_v,
            default_i0,
        )?);
    }

    let zone_designs: Vec<ZoneDesign> = aps
        .iter()
        .map(|ap| design_zone(ap, &template.illum, &template.mob))
        .collect::<Result<_>>()?;

    let mut adjacency = Vec::new();
    for i in 0..aps.len().saturating_sub(1) {
        let (a, b) = (&aps[i], &aps[i + 1]);
        let dist = a.center.distance(b.center);
        if dist < a.cell_radius() + b.cell_radius() {
            adjacency.push((a.id, b.id));
            // The nearest point of the overlap lens to either center sits at
            // distance (dist - other radius); it must clear both Zone-0 discs.
            let (r0_a, r0_b) = (zone_designs[i].r0, zone_designs[i + 1].r0);
            if dist - b.cell_radius() < r0_a || dist - a.cell_radius() < r0_b {
                return Err(Error::Layout(format!(
                    "overlap of APs {} and {} intrudes into a Zone-0 disc \
                     (spacing {dist:.3} m, Zone-0 radii {r0_a:.3}/{r0_b:.3} m)",
                    a.id, b.id
                )));
            }
        }
    }

    let uncovered_corners = hall
        .corners()
        .into_iter()
        .filter(|c| {
            aps.iter()
                .all(|ap| ap.center.distance(*c) > ap.cell_radius())
        })
        .collect();

    Ok(NetworkLayout {
        hall,
        aps,
        adjacency,
        zone_designs,
        uncovered_corners,
    })
}

/// Map a position to its serving AP and zone.
///
/// The serving AP is the nearest center among the cells whose disc contains
/// the point (ties break toward the lowest AP id); the zone follows from
/// that AP's Zone-0 radius. Positions outside the hall are a domain error,
/// positions inside no disc are out of coverage.
pub fn locate(layout: &NetworkLayout, position: Point) -> Result<Located> {
    if !layout.hall.contains(position) {
        return domain_err(format!(
            "position ({}, {}) lies outside the {} x {} m hall",
            position.x, position.y, layout.hall.length, layout.hall.width
        ));
    }
    let mut best: Option<(f64, usize)> = None;
    for (i, ap) in layout.aps.iter().enumerate() {
        let dist = ap.center.distance(position);
        if dist <= ap.cell_radius() && best.map_or(true, |(d, _)| dist < d) {
            best = Some((dist, i));
        }
    }
    Ok(match best {
        Some((dist, i)) => Located::Covered {
            ap_id: layout.aps[i].id,
            zone: if dist <= layout.zone_designs[i].r0 {
                Zone::Zone0
            } else {
                Zone::Zone1
            },
        },
        None => Located::OutOfCoverage,
    })
}

/// Assign contiguous Zone-1 index ranges along the AP chain so adjacent
/// cells never share a Zone-1 subcarrier.
///
/// A chain is 2-colorable: even positions take their Zone-1 band from the
/// top of the index range, odd positions from the bottom, and Zone 0 gets
/// the contiguous remainder. Non-adjacent cells may (and do) reuse indices.
/// Errors when an adjacent pair requests more Zone-1 subcarriers than the
/// cell budget holds.
pub fn assign_zone1_bands(layout: &NetworkLayout) -> Result<SubcarrierAssignment> {
    for &(a, b) in &layout.adjacency {
        let n1_a = layout.zone_designs[layout.ap_index(a)].n1;
        let n1_b = layout.zone_designs[layout.ap_index(b)].n1;
        let n_cell = layout.aps[layout.ap_index(a)].n_cell;
        if n1_a + n1_b > n_cell {
            return Err(Error::BandAssignment {
                ap_a: a,
                ap_b: b,
                requested: n1_a + n1_b,
                available: n_cell,
            });
        }
    }
    let per_ap = layout
        .aps
        .iter()
        .zip(&layout.zone_designs)
        .enumerate()
        .map(|(i, (ap, design))| {
            let n_cell = ap.n_cell;
            let n1 = design.n1;
            let (zone0, zone1) = if i % 2 == 0 {
                (0..n_cell - n1, n_cell - n1..n_cell)
            } else {
                (n1..n_cell, 0..n1)
            };
            ApBands {
                ap_id: ap.id,
                zone0,
                zone1,
            }
        })
        .collect();
    Ok(SubcarrierAssignment { per_ap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn hall_template() -> LayoutTemplate {
        LayoutTemplate {
            hall: Hall::new(30.0, 10.0, 3.5).unwrap(),
            k: 3,
            overlap_width: 1.2,
            ap: ApParams {
                theta: 60f64.to_radians(),
                p_cell: 9.0,
                b_cell: 20e6,
                n_cell: 64,
                i0: None,
            },
            illum: IlluminationSpec::new(200.0, 800.0).unwrap(),
            mob: MobilitySpec::new(1.5, 0.4, 1e4, 2).unwrap(),
        }
    }

    #[test]
    fn three_ap_hall_checkpoint() {
        let layout = build_layout(&hall_template()).unwrap();
        assert_eq!(layout.aps.len(), 3);
        let xs: Vec<f64> = layout.aps.iter().map(|ap| ap.center.x).collect();
        // spacing 2 r_k - 1.2 = 10.9243..., centered on x = 15
        assert_relative_eq!(xs[1] - xs[0], 10.924355652982138, max_relative = 1e-12);
        assert_relative_eq!(xs[0], 4.075644347017862, max_relative = 1e-9);
        assert_relative_eq!(xs[1], 15.0, max_relative = 1e-12);
        assert_relative_eq!(xs[2], 25.924355652982136, max_relative = 1e-9);
        assert!(layout.aps.iter().all(|ap| ap.center.y == 5.0));
        assert_eq!(layout.adjacency, vec![(1, 2), (2, 3)]);
        // derived i0 puts the center at the illuminance cap
        assert_relative_eq!(layout.aps[0].i0, 9800.0, max_relative = 1e-12);
        // the 1.2 m overlap leaves every hall corner uncovered
        assert_eq!(layout.uncovered_corners.len(), 4);
    }

    #[test]
    fn overlap_width_reproduced_by_circle_intersection() {
        // cross-check: the lens depth of two circles of radius r at distance s
        // is 2r - s, which must equal the requested overlap width
        let layout = build_layout(&hall_template()).unwrap();
        let r = layout.aps[0].cell_radius();
        let s = layout.aps[0].center.distance(layout.aps[1].center);
        assert_relative_eq!(2.0 * r - s, 1.2, max_relative = 1e-9);
    }

    #[test]
    fn single_ap_layout() {
        let mut t = hall_template();
        t.k = 1;
        let layout = build_layout(&t).unwrap();
        assert!(layout.adjacency.is_empty());
        assert_eq!(layout.aps[0].center, Point::new(15.0, 5.0));
    }

    #[test]
    fn tangent_cells_are_not_adjacent() {
        let mut t = hall_template();
        t.hall = Hall::new(60.0, 10.0, 3.5).unwrap();
        t.k = 2;
        t.overlap_width = 0.0;
        let layout = build_layout(&t).unwrap();
        assert!(layout.adjacency.is_empty());
    }

    #[test]
    fn layout_errors() {
        // centers would leave the hall
        let mut t = hall_template();
        t.k = 5;
        assert!(matches!(build_layout(&t), Err(Error::Layout(_))));
        // impossible overlap width
        let mut t = hall_template();
        t.overlap_width = 13.0;
        assert!(matches!(build_layout(&t), Err(Error::Layout(_))));
        t.overlap_width = -0.1;
        assert!(matches!(build_layout(&t), Err(Error::Layout(_))));
        // zero APs
        let mut t = hall_template();
        t.k = 0;
        assert!(build_layout(&t).is_err());
    }

    #[test]
    fn overlap_kept_clear_of_zone0() {
        let layout = build_layout(&hall_template()).unwrap();
        for &(a, b) in &layout.adjacency {
            let ia = layout.ap_index(a);
            let ib = layout.ap_index(b);
            let dist = layout.aps[ia].center.distance(layout.aps[ib].center);
            assert!(dist - layout.aps[ib].cell_radius() >= layout.zone_designs[ia].r0);
            assert!(dist - layout.aps[ia].cell_radius() >= layout.zone_designs[ib].r0);
        }
        // shrink the spacing until the lens reaches Zone 0: must be rejected
        let mut t = hall_template();
        t.overlap_width = 6.0; // spacing ~6.12, dist - r_k ~ 0.06 < r0
        assert!(matches!(build_layout(&t), Err(Error::Layout(_))));
    }

    #[test]
    fn locate_center_and_lens_and_corner() {
        let layout = build_layout(&hall_template()).unwrap();
        // AP centers are Zone 0 of their own AP
        for ap in &layout.aps {
            assert_eq!(
                locate(&layout, ap.center).unwrap(),
                Located::Covered {
                    ap_id: ap.id,
                    zone: Zone::Zone0
                }
            );
        }
        // points of the 1-2 overlap lens are always Zone 1 of the nearest AP
        let (c1, c2) = (layout.aps[0].center, layout.aps[1].center);
        let r = layout.aps[0].cell_radius();
        for frac in [0.0, 0.2, 0.5, 0.8, 1.0] {
            for dy in [-0.4, 0.0, 0.4] {
                let x_lo = c2.x - r;
                let x_hi = c1.x + r;
                let p = Point::new(x_lo + frac * (x_hi - x_lo), 5.0 + dy);
                let d1 = c1.distance(p);
                let d2 = c2.distance(p);
                if d1 > r || d2 > r {
                    continue; // off-axis probe left the lens
                }
                let expected_ap = if d1 < d2 { 1 } else { 2 };
                assert_eq!(
                    locate(&layout, p).unwrap(),
                    Located::Covered {
                        ap_id: expected_ap,
                        zone: Zone::Zone1
                    }
                );
            }
        }
        // hall corner with this layout is out of coverage
        assert_eq!(
            locate(&layout, Point::new(0.0, 0.0)).unwrap(),
            Located::OutOfCoverage
        );
        // outside the hall is a domain error
        assert!(locate(&layout, Point::new(-1.0, 5.0)).is_err());
        assert!(locate(&layout, Point::new(5.0, 11.0)).is_err());
    }

    #[test]
    fn locate_tie_breaks_to_lowest_id() {
        let layout = build_layout(&hall_template()).unwrap();
        // midpoint between centers 1 and 2 is equidistant
        let c1 = layout.aps[0].center;
        let c2 = layout.aps[1].center;
        let mid = Point::new((c1.x + c2.x) / 2.0, 5.0);
        match locate(&layout, mid).unwrap() {
            Located::Covered { ap_id, .. } => assert_eq!(ap_id, 1),
            other => panic!("expected coverage, got {other:?}"),
        }
    }

    #[test]
    fn band_assignment_three_ap_example() {
        let mut layout = build_layout(&hall_template()).unwrap();
        for d in &mut layout.zone_designs {
            d.n0 = 44;
            d.n1 = 20;
        }
        let assignment = assign_zone1_bands(&layout).unwrap();
        assert_eq!(assignment.per_ap[0].zone1, 44..64);
        assert_eq!(assignment.per_ap[1].zone1, 0..20);
        assert_eq!(assignment.per_ap[2].zone1, 44..64);
        assert_eq!(assignment.per_ap[0].zone0, 0..44);
        assert_eq!(assignment.per_ap[1].zone0, 20..64);
        assert!(assignment.violating_pairs(&layout.adjacency).is_empty());
    }

    #[test]
    fn band_assignment_single_ap_takes_top_indices() {
        let mut t = hall_template();
        t.k = 1;
        let mut layout = build_layout(&t).unwrap();
        layout.zone_designs[0].n0 = 50;
        layout.zone_designs[0].n1 = 14;
        let assignment = assign_zone1_bands(&layout).unwrap();
        assert_eq!(assignment.per_ap[0].zone1, 50..64);
        assert_eq!(assignment.per_ap[0].zone0, 0..50);
    }

    #[test]
    fn band_assignment_infeasible_pair_named() {
        let mut layout = build_layout(&hall_template()).unwrap();
        layout.zone_designs[0].n0 = 24;
        layout.zone_designs[0].n1 = 40;
        layout.zone_designs[1].n0 = 24;
        layout.zone_designs[1].n1 = 40;
        match assign_zone1_bands(&layout) {
            Err(Error::BandAssignment {
                ap_a,
                ap_b,
                requested,
                available,
            }) => {
                assert_eq!((ap_a, ap_b), (1, 2));
                assert_eq!(requested, 80);
                assert_eq!(available, 64);
            }
            other => panic!("expected band infeasibility, got {other:?}"),
        }
    }

    #[test]
    fn bands_partition_the_budget() {
        let layout = build_layout(&hall_template()).unwrap();
        let assignment = assign_zone1_bands(&layout).unwrap();
        for (bands, design) in assignment.per_ap.iter().zip(&layout.zone_designs) {
            assert_eq!(bands.zone0.len() as u32, design.n0);
            assert_eq!(bands.zone1.len() as u32, design.n1);
            let mut seen = vec![false; 64];
            for idx in bands.zone0.clone().chain(bands.zone1.clone()) {
                assert!(!seen[idx as usize], "index {idx} assigned twice");
                seen[idx as usize] = true;
            }
            assert!(seen.iter().all(|&s| s), "indices must cover 0..n_cell");
        }
    }
}
