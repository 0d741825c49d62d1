//! Reducedness and weak primeness.
//!
//! Both checks enumerate the finitely many circles that meet the diagram in
//! one crossing or in two edge points, cut the surface along each, and look
//! for a side that is a disk in the projection surface. Punctures in the
//! regions a circle passes through can sit on either side of it; a side is
//! tested with all of them pushed to the other side, which is the most
//! favourable routing for that side to be a disk.

mod cut;

use serde::Serialize;

pub use cut::{cut_and_classify, ArcEnd, CutArc, CutCircle, CutPoint, CutSides, Side, SideClassification};

use crate::diagram::{Corner, Diagram};
use crate::regions::RegionMap;

/// A circle through one crossing that bounds a disk in the surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NugatoryWitness {
    pub crossing: usize,
    pub circle: CutCircle,
    pub disk_side: SideClassification,
}

/// A circle meeting the diagram in two edge points and bounding a disk that
/// contains crossings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoCutWitness {
    pub circle: CutCircle,
    pub disk_side: SideClassification,
}

/// The circle through `crossing` between corners `axis` and `axis + 2`, if
/// those corners share a region.
pub fn crossing_circle(d: &Diagram, rm: &RegionMap, crossing: usize, axis: u8, routing: Side) -> Option<CutCircle> {
    let region = rm.region_of(Corner::new(crossing, axis));
    if rm.region_of(Corner::new(crossing, axis + 2)) != region {
        return None;
    }
    Some(CutCircle::with_routing(
        vec![CutPoint::Crossing { crossing, axis }],
        vec![CutArc { region, from: ArcEnd::new(0, 1), to: ArcEnd::new(0, 0) }],
        d.punctures().len(),
        routing,
    ))
}

/// Geometric candidates for two-point circles, in lexicographic
/// `(e1, e2, t)` order. Each circle starts on side 0 of its first point and
/// arrives on side `t` of its second.
pub fn two_point_circles(d: &Diagram, rm: &RegionMap) -> Vec<(Vec<CutPoint>, Vec<CutArc>)> {
    let mut by_sides: std::collections::HashMap<(usize, usize), Vec<usize>> = std::collections::HashMap::new();
    for (e, &(x, y)) in rm.edge_sides.iter().enumerate() {
        by_sides.entry((x.min(y), x.max(y))).or_default().push(e);
    }
    let mut out = Vec::new();
    for e1 in 0..d.n_edges() {
        let (x, y) = rm.edge_sides[e1];
        for &e2 in &by_sides[&(x.min(y), x.max(y))] {
            if e2 < e1 {
                continue;
            }
            let (p, q) = rm.edge_sides[e2];
            for t in 0..2u8 {
                let (to_region, back_region) = if t == 0 { (p, q) } else { (q, p) };
                if to_region != x || back_region != y {
                    continue;
                }
                let points = if e1 == e2 {
                    vec![CutPoint::Edge { edge: e1, offset: 0 }, CutPoint::Edge { edge: e1, offset: 1 }]
                } else {
                    vec![CutPoint::Edge { edge: e1, offset: 0 }, CutPoint::Edge { edge: e2, offset: 0 }]
                };
                let arcs = vec![
                    CutArc { region: x, from: ArcEnd::new(0, 0), to: ArcEnd::new(1, t) },
                    CutArc { region: y, from: ArcEnd::new(1, 1 - t), to: ArcEnd::new(0, 1) },
                ];
                out.push((points, arcs));
            }
        }
    }
    out
}

/// Finds a circle through a single crossing that bounds a disk, or `None`
/// if the diagram is reduced.
pub fn check_reduced(d: &Diagram, rm: &RegionMap) -> Option<NugatoryWitness> {
    for crossing in 0..d.n_crossings() {
        for axis in 0..2 {
            for tested in [Side::Left, Side::Right] {
                let Some(circle) = crossing_circle(d, rm, crossing, axis, tested.opposite()) else {
                    continue;
                };
                let Ok(sides) = cut_and_classify(d, rm, &circle) else {
                    continue;
                };
                if let Some(s) = sides.side(tested).filter(|s| s.is_disk) {
                    let disk_side = s.clone();
                    return Some(NugatoryWitness { crossing, circle, disk_side });
                }
            }
        }
    }
    None
}

/// Finds a two-point circle bounding a disk with crossings inside, or
/// `None` if the diagram is weakly prime. Only meaningful on reduced
/// diagrams.
pub fn check_weakly_prime(d: &Diagram, rm: &RegionMap) -> Option<TwoCutWitness> {
    for (points, arcs) in two_point_circles(d, rm) {
        for tested in [Side::Left, Side::Right] {
            let circle = CutCircle::with_routing(points.clone(), arcs.clone(), d.punctures().len(), tested.opposite());
            let Ok(sides) = cut_and_classify(d, rm, &circle) else {
                continue;
            };
            if let Some(s) = sides.side(tested).filter(|s| s.is_disk && !s.crossings_inside.is_empty()) {
                let disk_side = s.clone();
                return Some(TwoCutWitness { circle, disk_side });
            }
        }
    }
    None
}
