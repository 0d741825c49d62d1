//! Non-crossing chord checks on a cyclically ordered boundary.

/// Whether chords `(a, b)` and `(c, d)` cross. Endpoints are positions on a
/// circle and must be pairwise distinct.
pub fn interleaved(x: (usize, usize), y: (usize, usize)) -> bool {
    let (a, b) = (x.0.min(x.1), x.0.max(x.1));
    let inside = |p: usize| a < p && p < b;
    inside(y.0) != inside(y.1)
}

/// Whether a set of chords with distinct endpoints is pairwise
/// non-interleaved, via a single parenthesis sweep.
pub fn is_laminar(chords: &[(usize, usize)]) -> bool {
    let mut events: Vec<(usize, bool, usize)> = Vec::with_capacity(2 * chords.len());
    for (i, &(p, q)) in chords.iter().enumerate() {
        let (lo, hi) = (p.min(q), p.max(q));
        events.push((lo, true, i));
        events.push((hi, false, i));
    }
    events.sort_unstable();
    let mut stack = Vec::new();
    for (_, open, i) in events {
        if open {
            stack.push(i);
        } else if stack.pop() != Some(i) {
            return false;
        }
    }
    true
}
