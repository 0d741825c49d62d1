//! Decision procedures built from the structural checks and the four region
//! conditions, plus the staking search.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::conditions::{check_condition_ii, check_condition_iii, check_condition_iv, CurveSearch, CurveWitness, DEFAULT_BUDGET};
use crate::diagram::{Diagram, PunctureMark};
use crate::error::DiagramError;
use crate::primeness::{check_reduced, check_weakly_prime, NugatoryWitness, TwoCutWitness};
use crate::regions::{adjacent_region_pairs, trace_regions, RegionMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    TgHyperbolic,
    NotTgHyperbolic,
    NotApplicable,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::TgHyperbolic => "TG_HYPERBOLIC",
            Status::NotTgHyperbolic => "NOT_TG_HYPERBOLIC",
            Status::NotApplicable => "NOT_APPLICABLE",
            Status::Undecided => "UNDECIDED",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Theorem {
    /// Links in a thickened surface with boundary; all four conditions.
    Thickened,
    /// The thickened surface sits in an ambient manifold; weak primeness and
    /// region topology only.
    Ambient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Check {
    Pass,
    Fail,
    /// Not evaluated because an earlier structural check failed.
    Skipped,
}

impl From<bool> for Check {
    fn from(ok: bool) -> Self {
        if ok {
            Check::Pass
        } else {
            Check::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Preconditions {
    pub connected: Check,
    pub alternating: Check,
    pub has_crossing: Check,
    pub reduced: Check,
    pub surface_not_disk: Check,
    pub has_boundary: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface_not_annulus: Option<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ambient_assertions: Option<Check>,
}

impl Preconditions {
    pub fn all_pass(&self) -> bool {
        [self.connected, self.alternating, self.has_crossing, self.reduced, self.surface_not_disk, self.has_boundary]
            .into_iter()
            .chain(self.surface_not_annulus)
            .chain(self.ambient_assertions)
            .all(|c| c == Check::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    TwoCut(TwoCutWitness),
    Region { region: usize, punctures: usize },
    Adjacent { regions: [usize; 2], edge: usize, self_adjacent: bool },
    Curve(CurveWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Fail { witness: Witness },
    Undecided { states: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionId {
    /// Weakly prime projection.
    I,
    /// Every region is a disk or an annulus.
    Ii,
    /// No two non-disk regions share an edge.
    Iii,
    /// No bisecting curve with annular blocked regions.
    Iv,
}

impl ConditionId {
    pub fn label(self) -> &'static str {
        match self {
            ConditionId::I => "i",
            ConditionId::Ii => "ii",
            ConditionId::Iii => "iii",
            ConditionId::Iv => "iv",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: ConditionId,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub theorem: Theorem,
    pub status: Status,
    pub preconditions: Preconditions,
    /// Empty when a precondition failed.
    pub conditions: Vec<ConditionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nugatory: Option<NugatoryWitness>,
}

impl Verdict {
    pub fn condition(&self, id: ConditionId) -> Option<&Outcome> {
        self.conditions.iter().find(|c| c.condition == id).map(|c| &c.outcome)
    }

    pub fn failed(&self) -> Vec<ConditionId> {
        self.conditions
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Fail { .. }))
            .map(|c| c.condition)
            .collect()
    }
}

/// Hypotheses on the ambient manifold and the embedded surface that the
/// diagram cannot certify; the caller vouches for them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct AmbientAssertions {
    pub irreducible: bool,
    pub boundary_irreducible: bool,
    pub surface_incompressible: bool,
    pub surface_boundary_incompressible: bool,
    pub tori_meet_surface: bool,
    pub annuli_meet_surface: bool,
}

impl AmbientAssertions {
    pub const NAMES: [&'static str; 6] = [
        "irreducible",
        "boundary-irreducible",
        "incompressible",
        "boundary-incompressible",
        "tori-meet-surface",
        "annuli-meet-surface",
    ];

    pub fn all() -> Self {
        AmbientAssertions {
            irreducible: true,
            boundary_irreducible: true,
            surface_incompressible: true,
            surface_boundary_incompressible: true,
            tori_meet_surface: true,
            annuli_meet_surface: true,
        }
    }

    pub fn holds(&self) -> bool {
        self.irreducible
            && self.boundary_irreducible
            && self.surface_incompressible
            && self.surface_boundary_incompressible
            && self.tori_meet_surface
            && self.annuli_meet_surface
    }

    /// Sets the flag called `name` (one of [`Self::NAMES`]); `false` for an
    /// unknown name.
    pub fn set(&mut self, name: &str) -> bool {
        let flag = match name {
            "irreducible" => &mut self.irreducible,
            "boundary-irreducible" => &mut self.boundary_irreducible,
            "incompressible" => &mut self.surface_incompressible,
            "boundary-incompressible" => &mut self.surface_boundary_incompressible,
            "tori-meet-surface" => &mut self.tori_meet_surface,
            "annuli-meet-surface" => &mut self.annuli_meet_surface,
            _ => return false,
        };
        *flag = true;
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerdictOptions {
    /// State budget for the curve search.
    pub budget: u64,
}

impl Default for VerdictOptions {
    fn default() -> Self {
        VerdictOptions { budget: DEFAULT_BUDGET }
    }
}

/// Wall-clock time spent per stage of a verdict.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Timings {
    pub stages: Vec<(String, f64)>,
}

impl Timings {
    fn record<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let t0 = Instant::now();
        let out = f();
        self.stages.push((stage.to_string(), secs(t0.elapsed())));
        out
    }
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

struct Setup {
    rm: RegionMap,
    pre: Preconditions,
    nugatory: Option<NugatoryWitness>,
}

fn preconditions(d: &Diagram, timings: &mut Timings) -> Setup {
    let report = timings.record("validate", || d.validate_structure());
    let rm = timings.record("regions", || trace_regions(d));
    let (reduced, nugatory) = if report.connected && report.has_crossing {
        let w = timings.record("reduced", || check_reduced(d, &rm));
        (Check::from(w.is_none()), w)
    } else {
        (Check::Skipped, None)
    };
    let pre = Preconditions {
        connected: report.connected.into(),
        alternating: report.alternating.into(),
        has_crossing: report.has_crossing.into(),
        reduced,
        surface_not_disk: (!report.surface_is_disk).into(),
        has_boundary: (report.n_boundary > 0).into(),
        surface_not_annulus: None,
        ambient_assertions: None,
    };
    Setup { rm, pre, nugatory }
}

fn condition_i(d: &Diagram, rm: &RegionMap) -> Outcome {
    match check_weakly_prime(d, rm) {
        None => Outcome::Pass,
        Some(w) => Outcome::Fail { witness: Witness::TwoCut(w) },
    }
}

fn condition_ii(rm: &RegionMap) -> Outcome {
    match check_condition_ii(rm) {
        None => Outcome::Pass,
        Some(region) => Outcome::Fail { witness: Witness::Region { region, punctures: rm.region(region).punctures } },
    }
}

fn condition_iii(rm: &RegionMap) -> Outcome {
    match check_condition_iii(rm) {
        None => Outcome::Pass,
        Some(a) => Outcome::Fail {
            witness: Witness::Adjacent { regions: [a.a, a.b], edge: a.edge, self_adjacent: a.a == a.b },
        },
    }
}

fn condition_iv(d: &Diagram, rm: &RegionMap, budget: u64) -> Outcome {
    match check_condition_iv(d, rm, budget) {
        CurveSearch::Pass => Outcome::Pass,
        CurveSearch::Fail { witness } => Outcome::Fail { witness: Witness::Curve(witness) },
        CurveSearch::Undecided { states } => Outcome::Undecided { states },
    }
}

fn status_of(pre: &Preconditions, conditions: &[ConditionReport]) -> Status {
    if !pre.all_pass() {
        Status::NotApplicable
    } else if conditions.iter().any(|c| matches!(c.outcome, Outcome::Fail { .. })) {
        Status::NotTgHyperbolic
    } else if conditions.iter().any(|c| matches!(c.outcome, Outcome::Undecided { .. })) {
        Status::Undecided
    } else {
        Status::TgHyperbolic
    }
}

/// Verdict for the link complement in the thickened projection surface.
pub fn theorem_thickened_verdict(d: &Diagram) -> Verdict {
    thickened_verdict_timed(d, &VerdictOptions::default()).0
}

pub fn thickened_verdict_timed(d: &Diagram, opts: &VerdictOptions) -> (Verdict, Timings) {
    let mut timings = Timings::default();
    let Setup { rm, pre, nugatory } = preconditions(d, &mut timings);
    let mut conditions = Vec::new();
    if pre.all_pass() {
        let i = timings.record("condition_i", || condition_i(d, &rm));
        let ii = timings.record("condition_ii", || condition_ii(&rm));
        let iii = timings.record("condition_iii", || condition_iii(&rm));
        let iv = timings.record("condition_iv", || condition_iv(d, &rm, opts.budget));
        conditions = vec![
            ConditionReport { condition: ConditionId::I, outcome: i },
            ConditionReport { condition: ConditionId::Ii, outcome: ii },
            ConditionReport { condition: ConditionId::Iii, outcome: iii },
            ConditionReport { condition: ConditionId::Iv, outcome: iv },
        ];
    }
    let status = status_of(&pre, &conditions);
    (Verdict { theorem: Theorem::Thickened, status, preconditions: pre, conditions, nugatory }, timings)
}

/// Verdict for the link complement in an ambient manifold containing the
/// thickened surface, given the caller's assertions about that manifold.
pub fn theorem_ambient_verdict(d: &Diagram, assertions: &AmbientAssertions) -> Verdict {
    ambient_verdict_timed(d, assertions).0
}

pub fn ambient_verdict_timed(d: &Diagram, assertions: &AmbientAssertions) -> (Verdict, Timings) {
    let mut timings = Timings::default();
    let Setup { rm, mut pre, nugatory } = preconditions(d, &mut timings);
    let annulus = d.n_crossings() > 0 && d.capped_genus() == 0 && d.punctures().len() == 2;
    pre.surface_not_annulus = Some((!annulus).into());
    pre.ambient_assertions = Some(assertions.holds().into());
    let mut conditions = Vec::new();
    if pre.all_pass() {
        let i = timings.record("condition_i", || condition_i(d, &rm));
        let ii = timings.record("condition_ii", || condition_ii(&rm));
        conditions = vec![
            ConditionReport { condition: ConditionId::I, outcome: i },
            ConditionReport { condition: ConditionId::Ii, outcome: ii },
        ];
    }
    let status = status_of(&pre, &conditions);
    (Verdict { theorem: Theorem::Ambient, status, preconditions: pre, conditions, nugatory }, timings)
}

/// Adds isolated poles to a diagram without punctures.
pub fn stake(d: &Diagram, poles: &[PunctureMark]) -> Result<Diagram, DiagramError> {
    if !d.punctures().is_empty() {
        return Err(DiagramError::AlreadyPunctured);
    }
    d.with_punctures(poles.to_vec())
}

/// A set of staked regions and the verdict of the staked diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Staking {
    pub regions: Vec<usize>,
    pub poles: Vec<PunctureMark>,
    pub verdict: Verdict,
}

/// Pole placements worth checking, in size-then-lexicographic order: one
/// pole per region, staked regions pairwise non-adjacent (and not adjacent
/// to themselves), and at least two poles on a sphere. Each pole sits at
/// its region's first corner.
pub fn candidate_stakings(d: &Diagram, max_poles: usize) -> Vec<Vec<usize>> {
    let rm = trace_regions(d);
    let n = rm.len();
    let mut adjacent = vec![vec![false; n]; n];
    for a in adjacent_region_pairs(&rm) {
        adjacent[a.a][a.b] = true;
        adjacent[a.b][a.a] = true;
    }
    let min_size = if d.capped_genus() == 0 { 2 } else { 1 };
    let mut out = Vec::new();
    for size in min_size..=max_poles.min(n) {
        let mut current = Vec::with_capacity(size);
        collect_independent(&adjacent, 0, size, &mut current, &mut out);
    }
    out
}

fn collect_independent(
    adjacent: &[Vec<bool>],
    next: usize,
    size: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for r in next..adjacent.len() {
        if adjacent[r][r] || current.iter().any(|&s| adjacent[s][r]) {
            continue;
        }
        current.push(r);
        collect_independent(adjacent, r + 1, size, current, out);
        current.pop();
    }
}

/// Every staking among the candidates whose verdict is hyperbolic, in
/// enumeration order. Stops after the first one unless `all` is set.
pub fn hyperbolic_stakings(d: &Diagram, max_poles: usize, all: bool, opts: &VerdictOptions) -> Vec<Staking> {
    if !d.punctures().is_empty() {
        return Vec::new();
    }
    let rm = trace_regions(d);
    let mut out = Vec::new();
    for regions in candidate_stakings(d, max_poles) {
        let poles: Vec<_> = regions.iter().map(|&r| PunctureMark { corner: rm.region(r).corners[0] }).collect();
        let Ok(staked) = stake(d, &poles) else { continue };
        let (verdict, _) = thickened_verdict_timed(&staked, opts);
        if verdict.status == Status::TgHyperbolic {
            out.push(Staking { regions, poles, verdict });
            if !all {
                break;
            }
        }
    }
    out
}

/// The first hyperbolic staking with at most `max_poles` poles.
pub fn find_hyperbolic_staking(d: &Diagram, max_poles: usize) -> Option<Staking> {
    hyperbolic_stakings(d, max_poles, false, &VerdictOptions::default()).into_iter().next()
}
