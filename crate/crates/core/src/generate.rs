//! Diagram families for tests and benchmarks, and the named fixtures built
//! from them.

use crate::diagram::{solve_alternating_axes, Dart, Diagram, PunctureMark};
use crate::error::GenerateError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Chain of `k` half twists closed into the standard 2-braid diagram.
    /// With `clasp`, the `k` twists are closed through a two-crossing clasp
    /// instead, giving the twist knot with `k + 2` crossings.
    Twist { k: usize, clasp: bool },
    /// The `p` by `q` square grid on the torus.
    Grid { p: usize, q: usize },
    /// Connected sum of two diagrams along an edge.
    Sum(Box<Family>, Box<Family>),
    /// One crossing with two loops on the torus.
    Curl,
}

pub fn generate(f: &Family) -> Result<Diagram, GenerateError> {
    match f {
        Family::Twist { k, clasp: false } => twist(*k),
        Family::Twist { k, clasp: true } => twist_knot(*k),
        Family::Grid { p, q } => grid(*p, *q),
        Family::Sum(a, b) => connected_sum(&generate(a)?, &generate(b)?),
        Family::Curl => Ok(curl()),
    }
}

fn alternating(n: usize, pairs: &[(Dart, Dart)]) -> Result<Diagram, GenerateError> {
    let axes = solve_alternating_axes(n, pairs).ok_or(GenerateError::NotAlternating)?;
    Ok(Diagram::new(n, pairs, axes, Vec::new())?)
}

pub fn twist(k: usize) -> Result<Diagram, GenerateError> {
    if k < 2 {
        return Err(GenerateError::Param(format!("twist needs k >= 2, got {k}")));
    }
    let mut pairs = Vec::with_capacity(2 * k);
    for i in 0..k {
        let j = (i + 1) % k;
        pairs.push((Dart::new(i, 0), Dart::new(j, 1)));
        pairs.push((Dart::new(i, 3), Dart::new(j, 2)));
    }
    alternating(k, &pairs)
}

/// Four-ended tangle grown by twisting. Slots at each crossing: 0 NE, 1 NW,
/// 2 SW, 3 SE.
struct Tangle {
    n: usize,
    pairs: Vec<(Dart, Dart)>,
    nw: Dart,
    ne: Dart,
    sw: Dart,
    se: Dart,
}

impl Tangle {
    fn crossing() -> Self {
        Tangle {
            n: 1,
            pairs: Vec::new(),
            ne: Dart::new(0, 0),
            nw: Dart::new(0, 1),
            sw: Dart::new(0, 2),
            se: Dart::new(0, 3),
        }
    }

    fn add(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn twist_horizontal(&mut self) {
        let x = self.add();
        self.pairs.push((self.ne, Dart::new(x, 1)));
        self.pairs.push((self.se, Dart::new(x, 2)));
        self.ne = Dart::new(x, 0);
        self.se = Dart::new(x, 3);
    }

    fn twist_vertical(&mut self) {
        let x = self.add();
        self.pairs.push((self.sw, Dart::new(x, 1)));
        self.pairs.push((self.se, Dart::new(x, 0)));
        self.sw = Dart::new(x, 2);
        self.se = Dart::new(x, 3);
    }

    fn denominator(mut self) -> Result<Diagram, GenerateError> {
        self.pairs.push((self.nw, self.sw));
        self.pairs.push((self.ne, self.se));
        alternating(self.n, &self.pairs)
    }
}

/// `k` horizontal half twists followed by a vertical clasp.
pub fn twist_knot(k: usize) -> Result<Diagram, GenerateError> {
    if k < 1 {
        return Err(GenerateError::Param("twist knot needs k >= 1".into()));
    }
    let mut t = Tangle::crossing();
    for _ in 1..k {
        t.twist_horizontal();
    }
    t.twist_vertical();
    t.twist_vertical();
    t.denominator()
}

pub fn grid(p: usize, q: usize) -> Result<Diagram, GenerateError> {
    if p < 2 || q < 2 || p % 2 != 0 || q % 2 != 0 {
        return Err(GenerateError::Param(format!("grid needs even p, q >= 2, got {p}x{q}")));
    }
    let id = |i: usize, j: usize| (j % q) * p + (i % p);
    let mut pairs = Vec::with_capacity(2 * p * q);
    for j in 0..q {
        for i in 0..p {
            pairs.push((Dart::new(id(i, j), 0), Dart::new(id(i + 1, j), 2)));
            pairs.push((Dart::new(id(i, j), 1), Dart::new(id(i, j + 1), 3)));
        }
    }
    alternating(p * q, &pairs)
}

pub fn curl() -> Diagram {
    Diagram::new(
        1,
        &[(Dart::new(0, 0), Dart::new(0, 2)), (Dart::new(0, 1), Dart::new(0, 3))],
        vec![0],
        vec![PunctureMark::new(0, 0)],
    )
    .expect("curl is well formed")
}

/// Cuts edge 0 of each diagram and reconnects the four loose ends so the
/// genus of the result is the sum of the genera.
pub fn connected_sum(a: &Diagram, b: &Diagram) -> Result<Diagram, GenerateError> {
    if a.n_crossings() == 0 || b.n_crossings() == 0 {
        return Err(GenerateError::Param("connected sum needs crossings in both summands".into()));
    }
    let na = a.n_crossings();
    let shift = |d: Dart| Dart::new(d.crossing + na, d.slot);
    let (ea, eb) = (a.edge(0), b.edge(0));
    let mut base: Vec<(Dart, Dart)> = a.edges()[1..].iter().map(|e| (e.lo, e.hi)).collect();
    base.extend(b.edges()[1..].iter().map(|e| (shift(e.lo), shift(e.hi))));
    let target = a.capped_genus() + b.capped_genus();
    for [x, y] in [[eb.hi, eb.lo], [eb.lo, eb.hi]] {
        let mut pairs = base.clone();
        pairs.push((ea.lo, shift(x)));
        pairs.push((ea.hi, shift(y)));
        let Ok(d) = alternating(na + b.n_crossings(), &pairs) else { continue };
        if d.capped_genus() == target {
            return Ok(d);
        }
    }
    Err(GenerateError::NotAlternating)
}

/// Inserts a Reidemeister-I loop into edge `edge`.
pub fn add_kink(d: &Diagram, edge: usize) -> Result<Diagram, GenerateError> {
    if edge >= d.n_edges() {
        return Err(GenerateError::Param(format!("edge {edge} out of range")));
    }
    let k = d.n_crossings();
    let e = d.edge(edge);
    let mut pairs: Vec<_> = d.edges().iter().enumerate().filter(|&(i, _)| i != edge).map(|(_, e)| (e.lo, e.hi)).collect();
    pairs.push((e.lo, Dart::new(k, 0)));
    pairs.push((e.hi, Dart::new(k, 1)));
    pairs.push((Dart::new(k, 2), Dart::new(k, 3)));
    let axes = solve_alternating_axes(k + 1, &pairs).ok_or(GenerateError::NotAlternating)?;
    Ok(Diagram::new(k + 1, &pairs, axes, d.punctures().to_vec())?)
}

/// Named diagrams used across tests, benches, and the CLI.
pub mod fixtures {
    use super::*;

    pub fn trefoil() -> Diagram {
        twist(3).expect("trefoil")
    }

    pub fn figure_eight() -> Diagram {
        twist_knot(2).expect("figure eight")
    }

    /// The five-crossing twist knot.
    pub fn twist_knot_5() -> Diagram {
        twist_knot(3).expect("twist knot")
    }

    pub fn clasp() -> Diagram {
        twist(2).expect("clasp")
    }

    pub fn granny() -> Diagram {
        connected_sum(&trefoil(), &trefoil()).expect("granny")
    }

    pub fn curl_t2() -> Diagram {
        curl()
    }

    pub fn kinked_trefoil() -> Diagram {
        add_kink(&trefoil(), 0).expect("kinked trefoil")
    }
}
