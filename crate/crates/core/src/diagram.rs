//! Diagram data model: a 4-valent combinatorial map with over/under data
//! and puncture marks.
//!
//! Darts are `(crossing, slot)` pairs with slots numbered 0..3
//! counterclockwise. The rotation at every crossing is implicit, so a
//! diagram always describes a cellular embedding in a closed orientable
//! surface (the capped surface). Punctures delete small disks from faces
//! and create the boundary of the projection surface.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::DiagramError;

/// A half-edge at a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub crossing: usize,
    pub slot: u8,
}

impl Dart {
    pub fn new(crossing: usize, slot: u8) -> Self {
        debug_assert!(slot < 4);
        Dart { crossing, slot }
    }

    pub fn from_index(index: usize) -> Self {
        Dart { crossing: index / 4, slot: (index % 4) as u8 }
    }

    pub fn index(self) -> usize {
        4 * self.crossing + self.slot as usize
    }

    /// The dart `k` steps counterclockwise at the same crossing.
    pub fn rotate(self, k: u8) -> Self {
        Dart { crossing: self.crossing, slot: (self.slot + k) % 4 }
    }

    /// The dart on the other end of the through-strand.
    pub fn through(self) -> Self {
        self.rotate(2)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.crossing, self.slot)
    }
}

/// The corner between slot `index` and slot `index + 1` at a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub crossing: usize,
    pub index: u8,
}

impl Corner {
    pub fn new(crossing: usize, index: u8) -> Self {
        debug_assert!(index < 4);
        Corner { crossing, index }
    }

    pub fn from_index(index: usize) -> Self {
        Corner { crossing: index / 4, index: (index % 4) as u8 }
    }

    pub fn flat(self) -> usize {
        4 * self.crossing + self.index as usize
    }

    pub fn rotate(self, k: u8) -> Self {
        Corner { crossing: self.crossing, index: (self.index + k) % 4 }
    }

    /// The dart on the clockwise side of the corner (slot `index`).
    pub fn first_dart(self) -> Dart {
        Dart::new(self.crossing, self.index)
    }

    /// The dart on the counterclockwise side of the corner (slot `index + 1`).
    pub fn second_dart(self) -> Dart {
        Dart::new(self.crossing, (self.index + 1) % 4)
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.crossing, self.index)
    }
}

impl Serialize for Corner {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.crossing, self.index).serialize(serializer)
    }
}

/// A marked point in the face containing `corner`; removing a small disk
/// around it creates one boundary component of the projection surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PunctureMark {
    pub corner: Corner,
}

impl PunctureMark {
    pub fn new(crossing: usize, index: u8) -> Self {
        PunctureMark { corner: Corner::new(crossing, index) }
    }
}

/// An edge of the projection graph. `lo` is the dart with the smaller
/// flat index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub lo: Dart,
    pub hi: Dart,
}

/// A link diagram on a capped surface, with puncture marks.
///
/// Edge ids are canonical: edges are sorted by the flat index of their
/// `lo` dart, independent of input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    n_crossings: usize,
    partner: Vec<usize>,
    edges: Vec<Edge>,
    edge_of: Vec<usize>,
    axes: Vec<u8>,
    punctures: Vec<PunctureMark>,
}

impl Diagram {
    /// Builds a diagram from an explicit dart matching and over-axes.
    pub fn new(
        n_crossings: usize,
        pairs: &[(Dart, Dart)],
        axes: Vec<u8>,
        punctures: Vec<PunctureMark>,
    ) -> Result<Self, DiagramError> {
        let n_darts = 4 * n_crossings;
        let mut partner = vec![usize::MAX; n_darts];
        for &(a, b) in pairs {
            for d in [a, b] {
                if d.crossing >= n_crossings {
                    return Err(DiagramError::CrossingOutOfRange { crossing: d.crossing, n_crossings });
                }
                if d.slot > 3 {
                    return Err(DiagramError::SlotOutOfRange { slot: d.slot });
                }
            }
            if a == b {
                return Err(DiagramError::SelfPaired(a));
            }
            for d in [a, b] {
                if partner[d.index()] != usize::MAX {
                    return Err(DiagramError::DartReused(d));
                }
            }
            partner[a.index()] = b.index();
            partner[b.index()] = a.index();
        }
        if let Some(i) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(DiagramError::DartUnreferenced(Dart::from_index(i)));
        }
        if axes.len() != n_crossings {
            return Err(DiagramError::AxisCount { expected: n_crossings, found: axes.len() });
        }
        if let Some(&a) = axes.iter().find(|&&a| a > 1) {
            return Err(DiagramError::AxisValue(a));
        }
        for p in &punctures {
            if p.corner.crossing >= n_crossings {
                return Err(DiagramError::CrossingOutOfRange {
                    crossing: p.corner.crossing,
                    n_crossings,
                });
            }
            if p.corner.index > 3 {
                return Err(DiagramError::SlotOutOfRange { slot: p.corner.index });
            }
        }

        let mut edges = Vec::with_capacity(2 * n_crossings);
        let mut edge_of = vec![0; n_darts];
        for i in 0..n_darts {
            let j = partner[i];
            if i < j {
                edge_of[i] = edges.len();
                edge_of[j] = edges.len();
                edges.push(Edge { lo: Dart::from_index(i), hi: Dart::from_index(j) });
            }
        }

        Ok(Diagram { n_crossings, partner, edges, edge_of, axes, punctures })
    }

    pub fn n_crossings(&self) -> usize {
        self.n_crossings
    }

    pub fn n_darts(&self) -> usize {
        4 * self.n_crossings
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn edge_of(&self, d: Dart) -> usize {
        self.edge_of[d.index()]
    }

    /// The dart at the other end of `d`'s edge.
    pub fn partner(&self, d: Dart) -> Dart {
        Dart::from_index(self.partner[d.index()])
    }

    pub fn axis(&self, crossing: usize) -> u8 {
        self.axes[crossing]
    }

    pub fn axes(&self) -> &[u8] {
        &self.axes
    }

    /// Whether `d` belongs to the overstrand at its crossing.
    pub fn is_over(&self, d: Dart) -> bool {
        d.slot % 2 == self.axes[d.crossing]
    }

    pub fn punctures(&self) -> &[PunctureMark] {
        &self.punctures
    }

    /// Successor of a corner along its face: leave through the
    /// counterclockwise dart of the corner, then land on the corner that
    /// starts at the partner dart.
    pub fn next_corner(&self, c: Corner) -> Corner {
        let d = self.partner(c.second_dart());
        Corner::new(d.crossing, d.slot)
    }

    /// The corner whose boundary walk leaves along `d`.
    pub fn corner_before(d: Dart) -> Corner {
        Corner::new(d.crossing, (d.slot + 3) % 4)
    }

    /// Same diagram with the puncture list replaced.
    pub fn with_punctures(&self, punctures: Vec<PunctureMark>) -> Result<Self, DiagramError> {
        Diagram::new(self.n_crossings, &self.pairs(), self.axes.clone(), punctures)
    }

    /// The matching as dart pairs, in edge-id order.
    pub fn pairs(&self) -> Vec<(Dart, Dart)> {
        self.edges.iter().map(|e| (e.lo, e.hi)).collect()
    }

    /// Relabels crossings by `perm` (old index -> new index) and rotates the
    /// slots at old crossing `c` counterclockwise by `rotation[c]`. Over-axes
    /// and punctures follow the relabeling, so the result is the same
    /// diagram on the same oriented surface.
    pub fn relabeled(&self, perm: &[usize], rotation: &[u8]) -> Diagram {
        assert_eq!(perm.len(), self.n_crossings);
        assert_eq!(rotation.len(), self.n_crossings);
        let map = |d: Dart| Dart::new(perm[d.crossing], (d.slot + rotation[d.crossing]) % 4);
        let pairs: Vec<_> = self.edges.iter().map(|e| (map(e.lo), map(e.hi))).collect();
        let mut axes = vec![0; self.n_crossings];
        for (c, &a) in self.axes.iter().enumerate() {
            axes[perm[c]] = (a + rotation[c]) % 2;
        }
        let punctures = self
            .punctures
            .iter()
            .map(|p| {
                let c = p.corner;
                PunctureMark::new(perm[c.crossing], (c.index + rotation[c.crossing]) % 4)
            })
            .collect();
        Diagram::new(self.n_crossings, &pairs, axes, punctures).expect("relabeling preserves validity")
    }

    /// Swaps over and under at every crossing.
    pub fn mirrored(&self) -> Diagram {
        let mut out = self.clone();
        for a in &mut out.axes {
            *a ^= 1;
        }
        out
    }

    /// Number of face orbits of the combinatorial map.
    pub fn face_count(&self) -> usize {
        let mut seen = vec![false; self.n_darts()];
        let mut faces = 0;
        for start in 0..self.n_darts() {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut c = Corner::from_index(start);
            while !seen[c.flat()] {
                seen[c.flat()] = true;
                c = self.next_corner(c);
            }
        }
        faces
    }

    /// Connected components of the projection graph, as crossing sets.
    pub fn graph_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n_crossings];
        let mut out = Vec::new();
        for start in 0..self.n_crossings {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(c) = queue.pop_front() {
                for s in 0..4 {
                    let o = self.partner(Dart::new(c, s)).crossing;
                    if comp[o] == usize::MAX {
                        comp[o] = id;
                        members.push(o);
                        queue.push_back(o);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n_crossings > 0 && self.graph_components().len() == 1
    }

    /// Genus of the capped surface, summed over graph components.
    pub fn capped_genus(&self) -> usize {
        let comps = self.graph_components();
        let mut comp_of = vec![0; self.n_crossings];
        for (i, members) in comps.iter().enumerate() {
            for &c in members {
                comp_of[c] = i;
            }
        }
        let mut faces = vec![0i64; comps.len()];
        let mut seen = vec![false; self.n_darts()];
        for start in 0..self.n_darts() {
            if seen[start] {
                continue;
            }
            faces[comp_of[start / 4]] += 1;
            let mut c = Corner::from_index(start);
            while !seen[c.flat()] {
                seen[c.flat()] = true;
                c = self.next_corner(c);
            }
        }
        comps
            .iter()
            .zip(&faces)
            .map(|(members, &f)| {
                let v = members.len() as i64;
                let chi = v - 2 * v + f;
                ((2 - chi) / 2) as usize
            })
            .sum()
    }

    /// Every edge has exactly one endpoint on its crossing's over-axis.
    pub fn is_alternating(&self) -> bool {
        self.edges.iter().all(|e| self.is_over(e.lo) != self.is_over(e.hi))
    }

    pub fn validate_structure(&self) -> ValidationReport {
        let connected = self.is_connected();
        let alternating = self.is_alternating();
        let has_crossing = self.n_crossings > 0;
        let capped_genus = if has_crossing { self.capped_genus() } else { 0 };
        let n_boundary = self.punctures.len();
        let surface_is_disk = capped_genus == 0 && n_boundary == 1;

        let mut messages = Vec::new();
        if !has_crossing {
            messages.push("diagram has no crossings".to_string());
        } else if !connected {
            messages.push(format!(
                "projection graph has {} components",
                self.graph_components().len()
            ));
        }
        for (id, e) in self.edges.iter().enumerate() {
            if self.is_over(e.lo) == self.is_over(e.hi) {
                let kind = if self.is_over(e.lo) { "over" } else { "under" };
                messages.push(format!("edge {id} {}-{} has both ends {kind}", e.lo, e.hi));
            }
        }
        if surface_is_disk {
            messages.push("projection surface is a disk".to_string());
        }
        if n_boundary == 0 {
            messages.push("projection surface is closed (no punctures)".to_string());
        }

        ValidationReport {
            connected,
            alternating,
            has_crossing,
            surface_is_disk,
            capped_genus,
            n_boundary,
            messages,
        }
    }

    /// Closed strands of the link. A strand passes straight through a
    /// crossing from slot `j` to slot `j + 2`.
    pub fn link_components(&self) -> Vec<LinkComponent> {
        let mut seen = vec![false; self.n_darts()];
        let mut out = Vec::new();
        for start in 0..self.n_darts() {
            if seen[start] {
                continue;
            }
            let mut visits = Vec::new();
            let mut d = Dart::from_index(start);
            loop {
                seen[d.index()] = true;
                let arrived = self.partner(d);
                seen[arrived.index()] = true;
                visits.push(arrived.crossing);
                d = arrived.through();
                if d.index() == start {
                    break;
                }
            }
            out.push(LinkComponent { crossings: visits });
        }
        out
    }
}

/// One component of the link, with the crossings it passes in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkComponent {
    pub crossings: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub connected: bool,
    pub alternating: bool,
    pub has_crossing: bool,
    pub surface_is_disk: bool,
    pub capped_genus: usize,
    pub n_boundary: usize,
    pub messages: Vec<String>,
}

/// Genus of `F x I` for a genus-`g` surface with `k` boundary circles.
pub fn handlebody_genus(g: usize, k: usize) -> Result<usize, DiagramError> {
    if k == 0 {
        return Err(DiagramError::ClosedSurface);
    }
    Ok(2 * g + (k - 1))
}

/// Over-axes making every edge alternate, with crossing `c`'s axis fixed
/// to 0 for the smallest index `c` of each graph component. `None` if the
/// projection admits no alternating assignment.
pub fn solve_alternating_axes(n_crossings: usize, pairs: &[(Dart, Dart)]) -> Option<Vec<u8>> {
    let mut adj: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n_crossings];
    for &(a, b) in pairs {
        // over(d) = 1 ^ (slot & 1) ^ axis; need over(a) != over(b).
        let diff = 1 ^ ((a.slot ^ b.slot) & 1);
        adj[a.crossing].push((b.crossing, diff));
        adj[b.crossing].push((a.crossing, diff));
    }
    let mut axes = vec![u8::MAX; n_crossings];
    for start in 0..n_crossings {
        if axes[start] != u8::MAX {
            continue;
        }
        axes[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for &(o, diff) in &adj[c] {
                let want = axes[c] ^ diff;
                if axes[o] == u8::MAX {
                    axes[o] = want;
                    queue.push_back(o);
                } else if axes[o] != want {
                    return None;
                }
            }
        }
    }
    Some(axes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curl_t2() -> Diagram {
        Diagram::new(
            1,
            &[(Dart::new(0, 0), Dart::new(0, 2)), (Dart::new(0, 1), Dart::new(0, 3))],
            vec![0],
            vec![PunctureMark::new(0, 0)],
        )
        .unwrap()
    }

    #[test]
    fn rejects_self_paired_dart() {
        let err = Diagram::new(
            1,
            &[(Dart::new(0, 0), Dart::new(0, 0)), (Dart::new(0, 1), Dart::new(0, 3))],
            vec![0],
            vec![],
        )
        .unwrap_err();
        assert_eq!(err, DiagramError::SelfPaired(Dart::new(0, 0)));
    }

    #[test]
    fn rejects_unreferenced_and_reused_darts() {
        let err = Diagram::new(1, &[(Dart::new(0, 0), Dart::new(0, 2))], vec![0], vec![]).unwrap_err();
        assert_eq!(err, DiagramError::DartUnreferenced(Dart::new(0, 1)));
        let err = Diagram::new(
            1,
            &[(Dart::new(0, 0), Dart::new(0, 2)), (Dart::new(0, 2), Dart::new(0, 3))],
            vec![0],
            vec![],
        )
        .unwrap_err();
        assert_eq!(err, DiagramError::DartReused(Dart::new(0, 2)));
    }

    #[test]
    fn curl_is_a_torus_diagram() {
        let d = curl_t2();
        let r = d.validate_structure();
        assert_eq!(r.capped_genus, 1);
        assert!(r.connected);
        assert!(!r.surface_is_disk);
        assert_eq!(d.face_count(), 1);
    }

    #[test]
    fn curl_strands_close_up_separately() {
        // Each edge joins the two ends of one through-strand, so each strand
        // is its own loop and both ends of an edge lie on the same axis.
        let d = curl_t2();
        assert_eq!(d.link_components().len(), 2);
        assert!(!d.is_alternating());
        assert!(solve_alternating_axes(1, &d.pairs()).is_none());
    }

    #[test]
    fn handlebody_genus_formula() {
        assert_eq!(handlebody_genus(1, 1), Ok(2));
        assert_eq!(handlebody_genus(0, 1), Ok(0));
        assert_eq!(handlebody_genus(0, 3), Ok(2));
        assert_eq!(handlebody_genus(2, 0), Err(DiagramError::ClosedSurface));
    }

    #[test]
    fn mirror_flips_every_axis() {
        let d = curl_t2();
        assert_eq!(d.mirrored().axes(), &[1]);
        assert_eq!(d.mirrored().mirrored(), d);
    }
}
