//! Region conditions: puncture counts, annulus adjacency, and the search for
//! a simple closed curve that bisects crossings whose blocked regions are
//! annuli.

use serde::Serialize;

use crate::chords::interleaved;
use crate::diagram::{Corner, Diagram};
use crate::regions::{adjacent_region_pairs, opposite_corner_regions, Adjacency, RegionClass, RegionMap};

/// Default cap on search states for the curve search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// First region carrying two or more punctures.
pub fn check_condition_ii(rm: &RegionMap) -> Option<usize> {
    rm.regions.iter().find(|r| r.class == RegionClass::Other).map(|r| r.id)
}

/// First edge (by id) whose two sides are both annuli. An edge with the same
/// annulus on both sides counts.
pub fn check_condition_iii(rm: &RegionMap) -> Option<Adjacency> {
    adjacent_region_pairs(rm).into_iter().find(|a| {
        rm.region(a.a).class == RegionClass::Annulus && rm.region(a.b).class == RegionClass::Annulus
    })
}

/// A curve bisecting `crossing` through corners `axis` and `axis + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Passage {
    pub crossing: usize,
    pub axis: u8,
}

impl Passage {
    pub fn corners(self) -> [Corner; 2] {
        [Corner::new(self.crossing, self.axis), Corner::new(self.crossing, self.axis + 2)]
    }
}

/// Both blocked regions of the passage are annuli.
pub fn is_eligible(rm: &RegionMap, p: Passage) -> bool {
    let o = opposite_corner_regions(rm, p.crossing, p.axis);
    rm.region(o.blocked.0).class == RegionClass::Annulus && rm.region(o.blocked.1).class == RegionClass::Annulus
}

/// A traversed corner of an eligible passage, located in its region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PassageEnd {
    pub passage: usize,
    pub corner: Corner,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PassageGraph {
    pub nodes: Vec<Passage>,
    /// Per region, the traversed corners of eligible passages that lie in it,
    /// ordered by passage then corner.
    pub connections: Vec<Vec<PassageEnd>>,
}

impl PassageGraph {
    /// Whether the multigraph on regions with one edge per eligible passage
    /// has a cycle. Every curve gives such a cycle, so `false` rules curves
    /// out.
    pub fn has_region_cycle(&self, rm: &RegionMap) -> bool {
        let mut parent: Vec<usize> = (0..rm.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for node in &self.nodes {
            let [a, b] = node.corners().map(|c| rm.region_of(c));
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return true;
            }
            parent[ra] = rb;
        }
        false
    }
}

pub fn build_passage_graph(d: &Diagram, rm: &RegionMap) -> PassageGraph {
    let mut nodes = Vec::new();
    let mut connections = vec![Vec::new(); rm.len()];
    for crossing in 0..d.n_crossings() {
        for axis in 0..2 {
            let p = Passage { crossing, axis };
            if !is_eligible(rm, p) {
                continue;
            }
            let idx = nodes.len();
            nodes.push(p);
            for corner in p.corners() {
                connections[rm.region_of(corner)].push(PassageEnd {
                    passage: idx,
                    corner,
                    position: rm.position_of(corner),
                });
            }
        }
    }
    PassageGraph { nodes, connections }
}

/// A chord of `region` from one traversed corner to the next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveArc {
    pub region: usize,
    pub from_corner: Corner,
    pub to_corner: Corner,
}

/// A closed curve through `passages` in order. `arcs[i]` leaves passage `i`
/// and enters passage `i + 1` (cyclically); the entry corner of a passage is
/// the `to_corner` of the arc before it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveWitness {
    pub passages: Vec<Passage>,
    pub arcs: Vec<CurveArc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CurveSearch {
    Pass,
    Fail { witness: CurveWitness },
    Undecided { states: u64 },
}

/// Re-checks every property a condition-(iv) curve must have.
pub fn verify_curve_witness(d: &Diagram, rm: &RegionMap, w: &CurveWitness) -> bool {
    let m = w.passages.len();
    if m == 0 || w.arcs.len() != m {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for p in &w.passages {
        if p.crossing >= d.n_crossings() || p.axis > 1 || !seen.insert(p.crossing) || !is_eligible(rm, *p) {
            return false;
        }
    }
    for i in 0..m {
        let arc = w.arcs[i];
        let entry = w.arcs[(i + m - 1) % m].to_corner;
        let p = w.passages[i];
        if !p.corners().contains(&entry) || arc.from_corner != entry.rotate(2) {
            return false;
        }
        let next = w.passages[(i + 1) % m];
        if !next.corners().contains(&arc.to_corner) {
            return false;
        }
        if arc.region >= rm.len()
            || rm.region_of(arc.from_corner) != arc.region
            || rm.region_of(arc.to_corner) != arc.region
        {
            return false;
        }
    }
    for region in 0..rm.len() {
        let chords: Vec<_> = w
            .arcs
            .iter()
            .filter(|a| a.region == region)
            .map(|a| (rm.position_of(a.from_corner), rm.position_of(a.to_corner)))
            .collect();
        if !crate::chords::is_laminar(&chords) {
            return false;
        }
    }
    true
}

struct Search<'a> {
    rm: &'a RegionMap,
    graph: &'a PassageGraph,
    start: usize,
    start_entry: Corner,
    used: Vec<bool>,
    chords: Vec<Vec<(usize, usize)>>,
    path: Vec<Passage>,
    arcs: Vec<CurveArc>,
    states: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn fits(&self, region: usize, chord: (usize, usize)) -> bool {
        self.chords[region].iter().all(|&c| !interleaved(c, chord))
    }

    /// Whether the start region is reachable from `region` through passages
    /// still available.
    fn can_return(&self, region: usize) -> bool {
        let target = self.rm.region_of(self.start_entry);
        if region == target {
            return true;
        }
        let mut seen = vec![false; self.rm.len()];
        let mut stack = vec![region];
        seen[region] = true;
        while let Some(r) = stack.pop() {
            for end in &self.graph.connections[r] {
                let p = self.graph.nodes[end.passage];
                if end.passage <= self.start || self.used[p.crossing] {
                    continue;
                }
                let other = self.rm.region_of(end.corner.rotate(2));
                if other == target {
                    return true;
                }
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        false
    }

    fn extend(&mut self, exit: Corner) -> bool {
        self.states += 1;
        if self.states > self.budget {
            self.exhausted = true;
            return false;
        }
        let region = self.rm.region_of(exit);
        let from = self.rm.position_of(exit);

        if self.rm.region_of(self.start_entry) == region {
            let chord = (from, self.rm.position_of(self.start_entry));
            if self.fits(region, chord) {
                self.arcs.push(CurveArc { region, from_corner: exit, to_corner: self.start_entry });
                return true;
            }
        }

        for i in 0..self.graph.connections[region].len() {
            let end = self.graph.connections[region][i];
            let p = self.graph.nodes[end.passage];
            if end.passage <= self.start || self.used[p.crossing] {
                continue;
            }
            let chord = (from, end.position);
            if !self.fits(region, chord) {
                continue;
            }
            let next_exit = end.corner.rotate(2);
            self.used[p.crossing] = true;
            self.chords[region].push(chord);
            self.path.push(p);
            self.arcs.push(CurveArc { region, from_corner: exit, to_corner: end.corner });
            if self.can_return(self.rm.region_of(next_exit)) && self.extend(next_exit) {
                return true;
            }
            self.arcs.pop();
            self.path.pop();
            self.chords[region].pop();
            self.used[p.crossing] = false;
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Exact search for a condition-(iv) curve. Curves are enumerated with their
/// smallest passage first (passages ordered by crossing, then axis), entered
/// at corner `axis`, extending through regions in corner order.
pub fn check_condition_iv(d: &Diagram, rm: &RegionMap, budget: u64) -> CurveSearch {
    let graph = build_passage_graph(d, rm);
    if !graph.has_region_cycle(rm) {
        return CurveSearch::Pass;
    }
    let mut states = 0;
    for start in 0..graph.nodes.len() {
        let p = graph.nodes[start];
        let [entry, exit] = p.corners();
        let mut search = Search {
            rm,
            graph: &graph,
            start,
            start_entry: entry,
            used: vec![false; d.n_crossings()],
            chords: vec![Vec::new(); rm.len()],
            path: vec![p],
            arcs: Vec::new(),
            states: 0,
            budget: budget.saturating_sub(states),
            exhausted: false,
        };
        search.used[p.crossing] = true;
        let found = search.extend(exit);
        states += search.states;
        if found {
            return CurveSearch::Fail { witness: CurveWitness { passages: search.path, arcs: search.arcs } };
        }
        if search.exhausted {
            return CurveSearch::Undecided { states };
        }
    }
    CurveSearch::Pass
}
