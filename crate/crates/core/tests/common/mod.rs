//! Brute-force oracles and the shared test corpus.
//!
//! The primeness oracle rebuilds the diagram as a general permutation map,
//! subdivides edges at the cut points, inserts the circle as real edges,
//! and counts cells of each piece of the cut surface. Punctures in split
//! regions are tried in every subface. The curve oracle enumerates every
//! oriented passage sequence and checks simplicity at the end.

#![allow(dead_code)]

use std::collections::HashMap;

use tgcheck_core::generate::{connected_sum, grid, twist, twist_knot};
use tgcheck_core::{Diagram, PunctureMark};

pub struct Map {
    sigma: Vec<usize>,
    alpha: Vec<usize>,
    vertex: Vec<usize>,
    /// Crossing id for crossing vertices, `None` for subdivision points.
    crossing_of: Vec<Option<usize>>,
}

impl Map {
    fn add_vertex(&mut self, crossing: Option<usize>) -> usize {
        self.crossing_of.push(crossing);
        self.crossing_of.len() - 1
    }

    fn add_dart(&mut self, v: usize) -> usize {
        self.sigma.push(usize::MAX);
        self.alpha.push(usize::MAX);
        self.vertex.push(v);
        self.sigma.len() - 1
    }

    fn sigma_inv(&self, y: usize) -> usize {
        (0..self.sigma.len()).find(|&x| self.sigma[x] == y).unwrap()
    }

    /// Face id per dart; the corner between `sigma_inv(y)` and `y` lies in
    /// the face of `y`.
    pub fn faces(&self) -> (Vec<usize>, usize) {
        let mut face = vec![usize::MAX; self.sigma.len()];
        let mut count = 0;
        for s in 0..self.sigma.len() {
            if face[s] != usize::MAX {
                continue;
            }
            let mut x = s;
            while face[x] == usize::MAX {
                face[x] = count;
                x = self.sigma[self.alpha[x]];
            }
            count += 1;
        }
        (face, count)
    }

    /// Inserts a new dart at `v` into the corner that ends at `y`.
    fn insert_before(&mut self, y: usize) -> usize {
        let x = self.sigma_inv(y);
        let g = self.add_dart(self.vertex[y]);
        self.sigma[x] = g;
        self.sigma[g] = y;
        g
    }
}

/// A point on an edge: its darts toward `lo` and toward `hi`.
#[derive(Clone, Copy)]
struct Point {
    vertex: usize,
    to_lo: usize,
    to_hi: usize,
}

/// The diagram's map with `cuts[e]` subdivision points on edge `e`.
fn subdivided(d: &Diagram, cuts: &HashMap<usize, usize>) -> (Map, HashMap<(usize, usize), Point>) {
    let n = d.n_crossings();
    let mut m = Map { sigma: Vec::new(), alpha: Vec::new(), vertex: Vec::new(), crossing_of: Vec::new() };
    for c in 0..n {
        let v = m.add_vertex(Some(c));
        for _ in 0..4 {
            m.add_dart(v);
        }
    }
    for x in 0..4 * n {
        m.sigma[x] = 4 * (x / 4) + (x % 4 + 1) % 4;
    }
    let mut points = HashMap::new();
    for (e, edge) in d.edges().iter().enumerate() {
        let mut prev = edge.lo.index();
        for k in 0..cuts.get(&e).copied().unwrap_or(0) {
            let v = m.add_vertex(None);
            let to_lo = m.add_dart(v);
            let to_hi = m.add_dart(v);
            m.sigma[to_lo] = to_hi;
            m.sigma[to_hi] = to_lo;
            m.alpha[prev] = to_lo;
            m.alpha[to_lo] = prev;
            prev = to_hi;
            points.insert((e, k), Point { vertex: v, to_lo, to_hi });
        }
        m.alpha[prev] = edge.hi.index();
        m.alpha[edge.hi.index()] = prev;
    }
    (m, points)
}

/// Corner dart of puncture mark `p` in the unsubdivided numbering.
fn puncture_dart(p: &PunctureMark) -> usize {
    4 * p.corner.crossing + (p.corner.index as usize + 1) % 4
}

/// Inserts the circle's arcs one at a time; `None` if some arc's corners
/// are no longer in a common face.
fn insert_arcs(m: &mut Map, arcs: &[(usize, usize)]) -> Option<Vec<bool>> {
    let mut on_gamma_dart = vec![false; m.sigma.len()];
    for &(a, b) in arcs {
        let (face, _) = m.faces();
        if face[a] != face[b] {
            return None;
        }
        let ga = m.insert_before(a);
        let gb = m.insert_before(b);
        m.alpha[ga] = gb;
        m.alpha[gb] = ga;
        on_gamma_dart.push(true);
        on_gamma_dart.push(true);
    }
    Some(on_gamma_dart)
}

/// Pieces of the surface cut along the inserted circle: euler
/// characteristic before punctures and crossing count per piece.
struct Pieces {
    piece_of_face: Vec<usize>,
    euler: Vec<i64>,
    crossings: Vec<usize>,
}

fn pieces(m: &Map, gamma_dart: &[bool], gamma_vertex: &[bool]) -> Pieces {
    let (face, n_faces) = m.faces();
    let nv = m.crossing_of.len();
    let nd = m.sigma.len();
    // Nodes: vertices, then darts (standing for edges), then faces.
    let mut parent: Vec<usize> = (0..nv + nd + n_faces).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra] = rb;
    };
    for x in 0..nd {
        if gamma_dart[x] {
            continue;
        }
        let edge_node = nv + x.min(m.alpha[x]);
        if !gamma_vertex[m.vertex[x]] {
            union(&mut parent, edge_node, m.vertex[x]);
        }
        union(&mut parent, edge_node, nv + nd + face[x]);
    }
    let mut ids = HashMap::new();
    let mut euler = Vec::new();
    let mut crossings = Vec::new();
    let mut id_of = |p: &mut Vec<usize>, node: usize, euler: &mut Vec<i64>, crossings: &mut Vec<usize>| {
        let r = find(p, node);
        let next = ids.len();
        let id = *ids.entry(r).or_insert(next);
        if id == euler.len() {
            euler.push(0);
            crossings.push(0);
        }
        id
    };
    for v in 0..nv {
        if gamma_vertex[v] {
            continue;
        }
        let id = id_of(&mut parent, v, &mut euler, &mut crossings);
        euler[id] += 1;
        if m.crossing_of[v].is_some() {
            crossings[id] += 1;
        }
    }
    for x in 0..nd {
        if gamma_dart[x] || m.alpha[x] < x {
            continue;
        }
        let id = id_of(&mut parent, nv + x, &mut euler, &mut crossings);
        euler[id] -= 1;
    }
    let mut piece_of_face = vec![0; n_faces];
    for f in 0..n_faces {
        let id = id_of(&mut parent, nv + nd + f, &mut euler, &mut crossings);
        euler[id] += 1;
        piece_of_face[f] = id;
    }
    Pieces { piece_of_face, euler, crossings }
}

/// Whether some assignment of punctures to subfaces of their regions makes
/// a piece a disk satisfying `want`.
fn some_disk(
    d: &Diagram,
    m: &Map,
    base_face: &[usize],
    gamma_dart: &[bool],
    gamma_vertex: &[bool],
    want: impl Fn(usize) -> bool,
) -> bool {
    let p = pieces(m, gamma_dart, gamma_vertex);
    let (face, _) = m.faces();
    // Subfaces of each original face.
    let mut sub: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..base_face.len() {
        let list = sub.entry(base_face[x]).or_default();
        if !list.contains(&face[x]) {
            list.push(face[x]);
        }
    }
    let options: Vec<Vec<usize>> =
        d.punctures().iter().map(|pm| sub[&base_face[puncture_dart(pm)]].clone()).collect();
    let mut choice = vec![0; options.len()];
    loop {
        let mut euler = p.euler.clone();
        for (i, opts) in options.iter().enumerate() {
            euler[p.piece_of_face[opts[choice[i]]]] -= 1;
        }
        if (0..euler.len()).any(|id| euler[id] == 1 && want(p.crossings[id])) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return false;
            }
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// True iff no two-point circle bounds a disk containing a crossing.
pub fn oracle_weakly_prime(d: &Diagram) -> bool {
    let n_edges = d.n_edges();
    for e1 in 0..n_edges {
        for e2 in e1..n_edges {
            let mut cuts = HashMap::new();
            *cuts.entry(e1).or_insert(0) += 1;
            *cuts.entry(e2).or_insert(0) += 1;
            let (base, points) = subdivided(d, &cuts);
            let (base_face_sub, _) = base.faces();
            let p1 = points[&(e1, 0)];
            let p2 = if e1 == e2 { points[&(e1, 1)] } else { points[&(e2, 0)] };
            for flip in [false, true] {
                let (b, b_other) = if flip { (p2.to_lo, p2.to_hi) } else { (p2.to_hi, p2.to_lo) };
                let mut m = Map {
                    sigma: base.sigma.clone(),
                    alpha: base.alpha.clone(),
                    vertex: base.vertex.clone(),
                    crossing_of: base.crossing_of.clone(),
                };
                let Some(gamma_dart) = insert_arcs(&mut m, &[(p1.to_hi, b), (p1.to_lo, b_other)]) else {
                    continue;
                };
                let mut gamma_vertex = vec![false; m.crossing_of.len()];
                gamma_vertex[p1.vertex] = true;
                gamma_vertex[p2.vertex] = true;
                let base_face: Vec<usize> = base_face_sub.clone();
                if some_disk(d, &m, &base_face, &gamma_dart, &gamma_vertex, |c| c > 0) {
                    return false;
                }
            }
        }
    }
    true
}

/// True iff no circle through a single crossing bounds a disk.
pub fn oracle_reduced(d: &Diagram) -> bool {
    let (base, _) = subdivided(d, &HashMap::new());
    let (base_face, _) = base.faces();
    for c in 0..d.n_crossings() {
        for axis in 0..2 {
            let y1 = 4 * c + (axis + 1) % 4;
            let y2 = 4 * c + (axis + 3) % 4;
            let mut m = Map {
                sigma: base.sigma.clone(),
                alpha: base.alpha.clone(),
                vertex: base.vertex.clone(),
                crossing_of: base.crossing_of.clone(),
            };
            let Some(gamma_dart) = insert_arcs(&mut m, &[(y1, y2)]) else { continue };
            let mut gamma_vertex = vec![false; m.crossing_of.len()];
            gamma_vertex[c] = true;
            if some_disk(d, &m, &base_face, &gamma_dart, &gamma_vertex, |_| true) {
                return false;
            }
        }
    }
    true
}

/// Faces of the plain diagram: per corner (flat index) its face id and
/// position along the face walk, plus puncture counts per face.
struct Faces {
    face: Vec<usize>,
    position: Vec<usize>,
    punctures: Vec<usize>,
}

fn corner_faces(d: &Diagram) -> Faces {
    let (m, _) = subdivided(d, &HashMap::new());
    let n = 4 * d.n_crossings();
    let mut face = vec![usize::MAX; n];
    let mut position = vec![0; n];
    let mut count = 0;
    for s in 0..n {
        if face[s] != usize::MAX {
            continue;
        }
        let mut y = s;
        let mut k = 0;
        while face[y] == usize::MAX {
            face[y] = count;
            position[y] = k;
            k += 1;
            y = m.sigma[m.alpha[y]];
        }
        count += 1;
    }
    let mut punctures = vec![0; count];
    for p in d.punctures() {
        punctures[face[puncture_dart(p)]] += 1;
    }
    // Re-key from corner dart to corner (c, j): corner j ends at dart j + 1.
    let mut f2 = vec![0; n];
    let mut p2 = vec![0; n];
    for c in 0..d.n_crossings() {
        for j in 0..4 {
            let y = 4 * c + (j + 1) % 4;
            f2[4 * c + j] = face[y];
            p2[4 * c + j] = position[y];
        }
    }
    Faces { face: f2, position: p2, punctures }
}

fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |x: usize, (p, q): (usize, usize)| {
        let (lo, hi) = (p.min(q), p.max(q));
        lo < x && x < hi
    };
    inside(b.0, a) != inside(b.1, a)
}

/// True iff some simple closed curve bisects eligible crossings only.
pub fn oracle_curve_exists(d: &Diagram) -> bool {
    let f = corner_faces(d);
    let corner = |c: usize, j: usize| 4 * c + j % 4;
    let mut passages = Vec::new();
    for c in 0..d.n_crossings() {
        for axis in 0..2 {
            let b1 = f.face[corner(c, axis + 1)];
            let b2 = f.face[corner(c, axis + 3)];
            if f.punctures[b1] == 1 && f.punctures[b2] == 1 {
                // Both orientations: (entry corner, exit corner).
                passages.push((c, corner(c, axis), corner(c, axis + 2)));
                passages.push((c, corner(c, axis + 2), corner(c, axis)));
            }
        }
    }
    let n = d.n_crossings();
    let mut seq = Vec::new();
    let mut used = vec![false; n];
    fn rec(
        f: &Faces,
        passages: &[(usize, usize, usize)],
        seq: &mut Vec<usize>,
        used: &mut Vec<bool>,
        n: usize,
    ) -> bool {
        if !seq.is_empty() {
            let first = passages[seq[0]];
            let last = passages[*seq.last().unwrap()];
            if f.face[last.2] == f.face[first.1] && simple(f, passages, seq) {
                return true;
            }
        }
        if seq.len() == n {
            return false;
        }
        for i in 0..passages.len() {
            let p = passages[i];
            if used[p.0] {
                continue;
            }
            if let Some(&last) = seq.last() {
                if f.face[passages[last].2] != f.face[p.1] {
                    continue;
                }
            }
            used[p.0] = true;
            seq.push(i);
            if rec(f, passages, seq, used, n) {
                return true;
            }
            seq.pop();
            used[p.0] = false;
        }
        false
    }
    fn simple(f: &Faces, passages: &[(usize, usize, usize)], seq: &[usize]) -> bool {
        let m = seq.len();
        let chords: Vec<(usize, (usize, usize))> = (0..m)
            .map(|i| {
                let from = passages[seq[i]].2;
                let to = passages[seq[(i + 1) % m]].1;
                (f.face[from], (f.position[from], f.position[to]))
            })
            .collect();
        for i in 0..m {
            for j in i + 1..m {
                if chords[i].0 == chords[j].0 && chords_cross(chords[i].1, chords[j].1) {
                    return false;
                }
            }
        }
        true
    }
    rec(&f, &passages, &mut seq, &mut used, n)
}

/// Alternating generator outputs with at most `max_crossings` crossings.
pub fn corpus(max_crossings: usize) -> Vec<(String, Diagram)> {
    let mut out = Vec::new();
    for k in 2..=max_crossings {
        out.push((format!("twist k={k}"), twist(k).unwrap()));
    }
    for k in 1..=max_crossings.saturating_sub(2) {
        out.push((format!("twist k={k} clasp"), twist_knot(k).unwrap()));
    }
    for (p, q) in [(2, 2), (2, 4), (4, 2)] {
        if p * q <= max_crossings {
            out.push((format!("grid {p}x{q}"), grid(p, q).unwrap()));
        }
    }
    let mut parts: Vec<(String, Diagram)> = Vec::new();
    for k in 2..max_crossings {
        parts.push((format!("twist k={k}"), twist(k).unwrap()));
    }
    for k in 1..max_crossings.saturating_sub(2) {
        parts.push((format!("twist k={k} clasp"), twist_knot(k).unwrap()));
    }
    for (i, (na, a)) in parts.iter().enumerate() {
        for (nb, b) in &parts[i..] {
            if a.n_crossings() + b.n_crossings() <= max_crossings {
                out.push((format!("sum({na}, {nb})"), connected_sum(a, b).unwrap()));
            }
        }
    }
    out
}

/// Every placement of up to `max_poles` poles, one pole per chosen region
/// occurrence, regions taken as a multiset; each pole at its region's first
/// corner.
pub fn stakings(d: &Diagram, max_poles: usize) -> Vec<Diagram> {
    let rm = tgcheck_core::trace_regions(d);
    let firsts: Vec<PunctureMark> = rm.regions.iter().map(|r| PunctureMark { corner: r.corners[0] }).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        d: &Diagram,
        firsts: &[PunctureMark],
        start: usize,
        left: usize,
        current: &mut Vec<PunctureMark>,
        out: &mut Vec<Diagram>,
    ) {
        out.push(d.with_punctures(current.clone()).unwrap());
        if left == 0 {
            return;
        }
        for r in start..firsts.len() {
            current.push(firsts[r]);
            rec(d, firsts, r, left - 1, current, out);
            current.pop();
        }
    }
    rec(d, &firsts, 0, max_poles, &mut current, &mut out);
    out
}

/// A uniformly random matching on `4n` darts with random over-axes and
/// `punctures` random marks.
pub fn random_diagram(rng: &mut impl rand::Rng, n: usize, punctures: usize) -> Diagram {
    use rand::seq::SliceRandom;
    let mut darts: Vec<usize> = (0..4 * n).collect();
    darts.shuffle(rng);
    let pairs: Vec<_> = darts
        .chunks(2)
        .map(|p| (tgcheck_core::Dart::from_index(p[0]), tgcheck_core::Dart::from_index(p[1])))
        .collect();
    let axes = (0..n).map(|_| rng.gen_range(0..2)).collect();
    let marks = (0..punctures).map(|_| PunctureMark::new(rng.gen_range(0..n), rng.gen_range(0..4))).collect();
    Diagram::new(n, &pairs, axes, marks).unwrap()
}

/// Random crossing permutation and per-crossing even rotation.
pub fn random_relabeling(rng: &mut impl rand::Rng, n: usize) -> (Vec<usize>, Vec<u8>) {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let rotation = (0..n).map(|_| 2 * rng.gen_range(0..2u8)).collect();
    (perm, rotation)
}
