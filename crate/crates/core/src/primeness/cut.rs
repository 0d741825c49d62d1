//! Cutting the capped surface along a circle that meets the diagram in
//! finitely many points.
//!
//! A circle is a cyclic sequence of cut points (edge interiors or crossing
//! passages) joined by arcs, each arc a chord of one region. Cutting along
//! it splits traversed regions into subregions; the pieces of the
//! complement are the classes of subregions glued along uncut edge
//! segments. Each piece is closed up with one disk per copy of the circle
//! on its boundary before counting vertices, edges and faces.

use serde::Serialize;

use crate::diagram::{Corner, Diagram};
use crate::error::CutError;
use crate::regions::RegionMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CutPoint {
    /// Interior point of an edge. Points on the same edge are ordered by
    /// `offset` from the edge's `lo` dart towards its `hi` dart.
    Edge { edge: usize, offset: u8 },
    /// The crossing itself, passed between corners `axis` and `axis + 2`.
    Crossing { crossing: usize, axis: u8 },
}

/// One side of a cut point. For an edge point, side 0 is the side walked
/// from `lo` to `hi` and side 1 the other. For a crossing point, side 0 is
/// corner `axis` and side 1 is corner `axis + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ArcEnd {
    pub point: usize,
    pub side: u8,
}

impl ArcEnd {
    pub fn new(point: usize, side: u8) -> Self {
        ArcEnd { point, side }
    }

    fn id(self) -> usize {
        2 * self.point + self.side as usize
    }
}

/// Arc `i` of a circle runs inside `region` from point `i` to point `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CutArc {
    pub region: usize,
    pub from: ArcEnd,
    pub to: ArcEnd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCircle {
    pub points: Vec<CutPoint>,
    pub arcs: Vec<CutArc>,
    /// Side of the circle for each puncture mark. Only consulted for marks in
    /// regions the circle passes through; other marks stay where they are.
    pub puncture_sides: Vec<Side>,
}

impl CutCircle {
    /// A circle with every movable puncture pushed to `side`.
    pub fn with_routing(points: Vec<CutPoint>, arcs: Vec<CutArc>, n_punctures: usize, side: Side) -> Self {
        CutCircle { points, arcs, puncture_sides: vec![side; n_punctures] }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideClassification {
    /// Euler characteristic of the piece with the circle as boundary, not
    /// counting the puncture holes.
    pub euler: i64,
    pub punctures_inside: usize,
    pub genus: usize,
    pub crossings_inside: Vec<usize>,
    pub is_disk: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CutSides {
    Separating { left: SideClassification, right: SideClassification },
    /// Both sides of the circle lie in one piece.
    NonSeparating { piece: SideClassification },
}

impl CutSides {
    pub fn side(&self, side: Side) -> Option<&SideClassification> {
        match (self, side) {
            (CutSides::Separating { left, .. }, Side::Left) => Some(left),
            (CutSides::Separating { right, .. }, Side::Right) => Some(right),
            (CutSides::NonSeparating { .. }, _) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Atom {
    Corner(Corner),
    Seg { edge: usize, k: usize, side: u8 },
    Mark(usize),
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

fn end_region(d: &Diagram, rm: &RegionMap, point: &CutPoint, side: u8) -> usize {
    match *point {
        CutPoint::Edge { edge, .. } => {
            let e = d.edge(edge);
            rm.region_leaving(if side == 0 { e.lo } else { e.hi })
        }
        CutPoint::Crossing { crossing, axis } => rm.region_of(Corner::new(crossing, (axis + 2 * side) % 4)),
    }
}

fn validate(d: &Diagram, rm: &RegionMap, circle: &CutCircle) -> Result<(), CutError> {
    let k = circle.points.len();
    if k == 0 {
        return Err(CutError::Empty);
    }
    if circle.arcs.len() != k {
        return Err(CutError::ArcCount { points: k, arcs: circle.arcs.len() });
    }
    if circle.puncture_sides.len() != d.punctures().len() {
        return Err(CutError::RoutingLength { expected: d.punctures().len(), found: circle.puncture_sides.len() });
    }
    for (i, p) in circle.points.iter().enumerate() {
        let ok = match *p {
            CutPoint::Edge { edge, .. } => edge < d.n_edges(),
            CutPoint::Crossing { crossing, axis } => crossing < d.n_crossings() && axis < 2,
        };
        if !ok {
            return Err(CutError::BadPoint(i));
        }
        let dup = circle.points[..i].iter().any(|q| match (*p, *q) {
            (CutPoint::Edge { edge: a, offset: x }, CutPoint::Edge { edge: b, offset: y }) => a == b && x == y,
            (CutPoint::Crossing { crossing: a, .. }, CutPoint::Crossing { crossing: b, .. }) => a == b,
            _ => false,
        });
        if dup {
            return Err(CutError::DuplicatePoint(i));
        }
    }
    for (i, arc) in circle.arcs.iter().enumerate() {
        if arc.from.point != i || arc.to.point != (i + 1) % k || arc.from.side > 1 || arc.to.side > 1 {
            return Err(CutError::NotClosed(i));
        }
        let prev = &circle.arcs[(i + k - 1) % k];
        if prev.to.side == arc.from.side {
            return Err(CutError::NotTransverse(i));
        }
        if arc.region >= rm.len()
            || end_region(d, rm, &circle.points[arc.from.point], arc.from.side) != arc.region
            || end_region(d, rm, &circle.points[arc.to.point], arc.to.side) != arc.region
        {
            return Err(CutError::RegionMismatch { arc: i, region: arc.region });
        }
    }
    Ok(())
}

/// Cuts the capped surface along `circle` and classifies the pieces.
pub fn cut_and_classify(d: &Diagram, rm: &RegionMap, circle: &CutCircle) -> Result<CutSides, CutError> {
    validate(d, rm, circle)?;
    let k = circle.points.len();

    // Per edge, the cut points on it in lo -> hi order.
    let mut on_edge: Vec<Vec<(u8, usize)>> = vec![Vec::new(); d.n_edges()];
    // Per flat corner, the arc end sitting at it.
    let mut at_corner: Vec<Option<usize>> = vec![None; d.n_darts()];
    let mut passed = vec![false; d.n_crossings()];
    for (i, p) in circle.points.iter().enumerate() {
        match *p {
            CutPoint::Edge { edge, offset } => on_edge[edge].push((offset, i)),
            CutPoint::Crossing { crossing, axis } => {
                passed[crossing] = true;
                at_corner[Corner::new(crossing, axis).flat()] = Some(ArcEnd::new(i, 0).id());
                at_corner[Corner::new(crossing, axis + 2).flat()] = Some(ArcEnd::new(i, 1).id());
            }
        }
    }
    for pts in &mut on_edge {
        pts.sort_unstable();
    }

    // Partner end and (arc, end-is-start) for every arc end.
    let mut partner = vec![0; 2 * k];
    let mut arc_of = vec![(0, false); 2 * k];
    for (i, arc) in circle.arcs.iter().enumerate() {
        partner[arc.from.id()] = arc.to.id();
        partner[arc.to.id()] = arc.from.id();
        arc_of[arc.from.id()] = (i, true);
        arc_of[arc.to.id()] = (i, false);
    }

    let mut n_sub = 0;
    let mut corner_sub = vec![usize::MAX; d.n_darts()];
    let mut seg_sub: Vec<Vec<[usize; 2]>> = on_edge.iter().map(|p| vec![[usize::MAX; 2]; p.len() + 1]).collect();
    let mut arc_left = vec![usize::MAX; k];
    let mut arc_right = vec![usize::MAX; k];
    let mut traversed = vec![false; rm.len()];
    for arc in &circle.arcs {
        traversed[arc.region] = true;
    }

    for region in &rm.regions {
        let mut atoms = Vec::new();
        for &c in &region.corners {
            match at_corner[c.flat()] {
                Some(end) => atoms.push(Atom::Mark(end)),
                None => atoms.push(Atom::Corner(c)),
            }
            let dart = c.second_dart();
            let edge = d.edge_of(dart);
            let pts = &on_edge[edge];
            let r = pts.len();
            if dart == d.edge(edge).lo {
                for kk in 0..=r {
                    atoms.push(Atom::Seg { edge, k: kk, side: 0 });
                    if kk < r {
                        atoms.push(Atom::Mark(ArcEnd::new(pts[kk].1, 0).id()));
                    }
                }
            } else {
                for kk in (0..=r).rev() {
                    atoms.push(Atom::Seg { edge, k: kk, side: 1 });
                    if kk > 0 {
                        atoms.push(Atom::Mark(ArcEnd::new(pts[kk - 1].1, 1).id()));
                    }
                }
            }
        }

        let len = atoms.len();
        let mut mark_pos = std::collections::HashMap::new();
        for (i, a) in atoms.iter().enumerate() {
            if let Atom::Mark(end) = *a {
                mark_pos.insert(end, i);
            }
        }
        if traversed[region.id] {
            check_laminar(region.id, &mark_pos, &partner)?;
        }

        let mut sub_of = vec![usize::MAX; len];
        for start in 0..len {
            if sub_of[start] != usize::MAX || matches!(atoms[start], Atom::Mark(_)) {
                continue;
            }
            let sub = n_sub;
            n_sub += 1;
            let mut cur = start;
            loop {
                sub_of[cur] = sub;
                let mut next = (cur + 1) % len;
                if let Atom::Mark(end) = atoms[next] {
                    let (arc, is_from) = arc_of[end];
                    if is_from {
                        arc_right[arc] = sub;
                    } else {
                        arc_left[arc] = sub;
                    }
                    next = (mark_pos[&partner[end]] + 1) % len;
                }
                if next == start {
                    break;
                }
                cur = next;
            }
        }
        for (i, a) in atoms.iter().enumerate() {
            match *a {
                Atom::Corner(c) => corner_sub[c.flat()] = sub_of[i],
                Atom::Seg { edge, k, side } => seg_sub[edge][k][side as usize] = sub_of[i],
                Atom::Mark(_) => {}
            }
        }
    }

    let mut uf = UnionFind::new(n_sub);
    for segs in &seg_sub {
        for s in segs {
            uf.union(s[0], s[1]);
        }
    }
    for c in 0..d.n_crossings() {
        if !passed[c] {
            for j in 1..4 {
                uf.union(corner_sub[4 * c], corner_sub[4 * c + j]);
            }
        }
    }

    let left = uf.find(arc_left[0]);
    let right = uf.find(arc_right[0]);
    for i in 0..k {
        if uf.find(arc_left[i]) != left || uf.find(arc_right[i]) != right {
            return Err(CutError::Disconnected(3));
        }
    }
    let mut roots: Vec<usize> = (0..n_sub).map(|s| uf.find(s)).collect();
    roots.sort_unstable();
    roots.dedup();
    if roots.len() > 2 || (roots.len() == 2 && left == right) {
        return Err(CutError::Disconnected(roots.len()));
    }

    #[derive(Default, Clone)]
    struct Tally {
        vertices: i64,
        edges: i64,
        faces: i64,
        copies: i64,
        punctures: usize,
        crossings: Vec<usize>,
    }
    let mut tallies = [Tally::default(), Tally::default()];
    let slot = |root: usize| usize::from(root != left);
    for s in 0..n_sub {
        tallies[slot(uf.find(s))].faces += 1;
    }
    for segs in &seg_sub {
        for s in segs {
            tallies[slot(uf.find(s[0]))].edges += 1;
        }
    }
    for c in 0..d.n_crossings() {
        if !passed[c] {
            let t = &mut tallies[slot(uf.find(corner_sub[4 * c]))];
            t.vertices += 1;
            t.crossings.push(c);
        }
    }
    for root in [left, right] {
        let t = &mut tallies[slot(root)];
        t.copies += 1;
        t.vertices += k as i64;
        t.edges += k as i64;
        t.faces += 1;
    }
    for (i, p) in d.punctures().iter().enumerate() {
        let region = rm.region_of(p.corner);
        let root = if traversed[region] {
            match circle.puncture_sides[i] {
                Side::Left => left,
                Side::Right => right,
            }
        } else {
            uf.find(corner_sub[p.corner.flat()])
        };
        tallies[slot(root)].punctures += 1;
    }

    let classify = |t: &Tally| {
        let closed = t.vertices - t.edges + t.faces;
        let euler = closed - t.copies;
        let genus = ((2 - closed) / 2).max(0) as usize;
        let is_disk = t.copies == 1 && euler == 1 && genus == 0 && t.punctures == 0;
        SideClassification {
            euler,
            punctures_inside: t.punctures,
            genus,
            crossings_inside: t.crossings.clone(),
            is_disk,
        }
    };

    if left == right {
        Ok(CutSides::NonSeparating { piece: classify(&tallies[0]) })
    } else {
        Ok(CutSides::Separating { left: classify(&tallies[0]), right: classify(&tallies[1]) })
    }
}

/// Chords between marks of one region must be pairwise non-interleaved.
fn check_laminar(
    region: usize,
    mark_pos: &std::collections::HashMap<usize, usize>,
    partner: &[usize],
) -> Result<(), CutError> {
    let mut chords: Vec<(usize, usize)> = mark_pos
        .iter()
        .filter_map(|(&end, &p)| {
            let q = *mark_pos.get(&partner[end])?;
            (p < q).then_some((p, q))
        })
        .collect();
    if chords.len() * 2 != mark_pos.len() {
        return Err(CutError::RegionMismatch { arc: usize::MAX, region });
    }
    chords.sort_unstable();
    if !crate::chords::is_laminar(&chords) {
        return Err(CutError::SelfIntersecting(region));
    }
    Ok(())
}
