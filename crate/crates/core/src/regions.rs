//! Complementary regions of the diagram, traced as faces of the
//! combinatorial map.
//!
//! Faces of a rotation system are open disks on the capped surface, so a
//! region's topology in the projection surface depends only on how many
//! puncture marks it carries.

use serde::Serialize;

use crate::diagram::{Corner, Dart, Diagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RegionClass {
    Disk,
    Annulus,
    Other,
}

impl RegionClass {
    pub fn from_punctures(punctures: usize) -> Self {
        match punctures {
            0 => RegionClass::Disk,
            1 => RegionClass::Annulus,
            _ => RegionClass::Other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Region {
    pub id: usize,
    /// Corners in boundary-walk order. The walk keeps the region on its
    /// right.
    pub corners: Vec<Corner>,
    /// `boundary_edges[i]` is the edge walked after `corners[i]`.
    pub boundary_edges: Vec<usize>,
    pub punctures: usize,
    pub class: RegionClass,
}

impl Region {
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.punctures as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionMap {
    pub regions: Vec<Region>,
    corner_region: Vec<usize>,
    corner_position: Vec<usize>,
    /// Per edge: region on the side walked from `lo` to `hi`, then the
    /// region on the side walked from `hi` to `lo`.
    pub edge_sides: Vec<(usize, usize)>,
}

impl RegionMap {
    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn region(&self, id: usize) -> &Region {
        &self.regions[id]
    }

    pub fn region_of(&self, c: Corner) -> usize {
        self.corner_region[c.flat()]
    }

    /// Position of `c` in its region's corner sequence.
    pub fn position_of(&self, c: Corner) -> usize {
        self.corner_position[c.flat()]
    }

    /// Region whose boundary walk leaves along dart `d`.
    pub fn region_leaving(&self, d: Dart) -> usize {
        self.region_of(Diagram::corner_before(d))
    }
}

/// Traces every face and counts the punctures it carries.
pub fn trace_regions(d: &Diagram) -> RegionMap {
    let n = d.n_darts();
    let mut corner_region = vec![usize::MAX; n];
    let mut corner_position = vec![0; n];
    let mut regions = Vec::new();
    for start in 0..n {
        if corner_region[start] != usize::MAX {
            continue;
        }
        let id = regions.len();
        let mut corners = Vec::new();
        let mut boundary_edges = Vec::new();
        let mut c = Corner::from_index(start);
        while corner_region[c.flat()] == usize::MAX {
            corner_region[c.flat()] = id;
            corner_position[c.flat()] = corners.len();
            corners.push(c);
            boundary_edges.push(d.edge_of(c.second_dart()));
            c = d.next_corner(c);
        }
        regions.push(Region { id, corners, boundary_edges, punctures: 0, class: RegionClass::Disk });
    }
    for p in d.punctures() {
        regions[corner_region[p.corner.flat()]].punctures += 1;
    }
    for r in &mut regions {
        r.class = RegionClass::from_punctures(r.punctures);
    }

    let rm_sides = d
        .edges()
        .iter()
        .map(|e| {
            (
                corner_region[Diagram::corner_before(e.lo).flat()],
                corner_region[Diagram::corner_before(e.hi).flat()],
            )
        })
        .collect();

    RegionMap { regions, corner_region, corner_position, edge_sides: rm_sides }
}

/// Regions at the four corners of a crossing, split by the diagonal a curve
/// bisecting the crossing would use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OppositeRegions {
    pub traversed: (usize, usize),
    pub blocked: (usize, usize),
}

/// For `axis` 0 the traversed corners are `(c,0)` and `(c,2)`; for axis 1
/// they are `(c,1)` and `(c,3)`. The other two corners are blocked.
pub fn opposite_corner_regions(rm: &RegionMap, crossing: usize, axis: u8) -> OppositeRegions {
    let r = |j: u8| rm.region_of(Corner::new(crossing, (axis + j) % 4));
    OppositeRegions { traversed: (r(0), r(2)), blocked: (r(1), r(3)) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Adjacency {
    pub a: usize,
    pub b: usize,
    pub edge: usize,
}

/// One entry per edge, pairing the regions on its two sides. Self pairs are
/// kept.
pub fn adjacent_region_pairs(rm: &RegionMap) -> Vec<Adjacency> {
    rm.edge_sides
        .iter()
        .enumerate()
        .map(|(edge, &(x, y))| Adjacency { a: x.min(y), b: x.max(y), edge })
        .collect()
}
