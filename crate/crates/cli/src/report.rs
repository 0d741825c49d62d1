use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Map, Value};
use tgcheck_core::verdict::{Check, Outcome, Preconditions, Timings, Witness};
use tgcheck_core::{CurveWitness, Diagram, Status, Theorem, TwoCutWitness, ValidationReport, Verdict};

#[derive(Debug, Clone, Serialize)]
pub struct InputSummary {
    pub path: String,
    pub crossings: usize,
    pub capped_genus: usize,
    pub punctures: usize,
    pub components: usize,
}

impl InputSummary {
    pub fn new(path: &str, d: &Diagram, validation: &ValidationReport) -> Self {
        InputSummary {
            path: path.to_string(),
            crossings: d.n_crossings(),
            capped_genus: validation.capped_genus,
            punctures: d.punctures().len(),
            components: d.link_components().len(),
        }
    }
}

#[derive(Serialize)]
pub struct JsonReport<'a> {
    input: &'a InputSummary,
    validation: &'a ValidationReport,
    verdict: &'a Verdict,
    witnesses: Vec<Value>,
    timings: Map<String, Value>,
}

pub struct Report {
    pub input: InputSummary,
    pub validation: ValidationReport,
    pub verdict: Verdict,
    pub timings: Timings,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        status_code(self.verdict.status)
    }

    pub fn to_json(&self) -> JsonReport<'_> {
        let mut witnesses = Vec::new();
        if let Some(n) = &self.verdict.nugatory {
            witnesses.push(json!({ "source": "reduced", "witness": n }));
        }
        for c in &self.verdict.conditions {
            if let Outcome::Fail { witness } = &c.outcome {
                witnesses.push(json!({ "source": c.condition, "witness": witness }));
            }
        }
        let timings: Map<String, Value> =
            self.timings.stages.iter().map(|(stage, secs)| (stage.clone(), json!(secs))).collect();
        JsonReport { input: &self.input, validation: &self.validation, verdict: &self.verdict, witnesses, timings }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let i = &self.input;
        let _ = writeln!(
            out,
            "input: {} ({} crossings, genus {}, {} punctures, {} link components)",
            i.path, i.crossings, i.capped_genus, i.punctures, i.components
        );
        for m in &self.validation.messages {
            let _ = writeln!(out, "note: {m}");
        }
        let theorem = match self.verdict.theorem {
            Theorem::Thickened => "thickened",
            Theorem::Ambient => "ambient",
        };
        let _ = writeln!(out, "theorem: {theorem}");
        let _ = writeln!(out, "preconditions: {}", preconditions_line(&self.verdict.preconditions));
        if let Some(n) = &self.verdict.nugatory {
            let _ = writeln!(out, "  nugatory crossing {}", n.crossing);
        }
        for c in &self.verdict.conditions {
            let line = match &c.outcome {
                Outcome::Pass => "PASS".to_string(),
                Outcome::Fail { witness } => format!("FAIL {}", witness_line(witness)),
                Outcome::Undecided { states } => format!("UNDECIDED after {states} search states"),
            };
            let _ = writeln!(out, "condition ({}): {line}", c.condition.label());
        }
        let _ = writeln!(out, "status: {}", self.verdict.status.as_str());
        out
    }
}

pub fn status_code(s: Status) -> u8 {
    match s {
        Status::TgHyperbolic => 0,
        Status::NotTgHyperbolic => 1,
        Status::NotApplicable => 2,
        Status::Undecided => 3,
    }
}

fn preconditions_line(p: &Preconditions) -> String {
    let mut items = vec![
        ("connected", Some(p.connected)),
        ("alternating", Some(p.alternating)),
        ("has_crossing", Some(p.has_crossing)),
        ("reduced", Some(p.reduced)),
        ("surface_not_disk", Some(p.surface_not_disk)),
        ("has_boundary", Some(p.has_boundary)),
        ("surface_not_annulus", p.surface_not_annulus),
        ("ambient_assertions", p.ambient_assertions),
    ];
    items.retain(|(_, c)| c.is_some());
    items
        .into_iter()
        .map(|(name, c)| {
            let tag = match c.unwrap() {
                Check::Pass => "ok",
                Check::Fail => "FAIL",
                Check::Skipped => "skipped",
            };
            format!("{name}={tag}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn witness_line(w: &Witness) -> String {
    match w {
        Witness::TwoCut(t) => two_cut_line(t),
        Witness::Region { region, punctures } => format!("region {region} contains {punctures} punctures"),
        Witness::Adjacent { regions: [a, _], edge, self_adjacent: true } => {
            format!("annular region {a} meets itself along edge {edge}")
        }
        Witness::Adjacent { regions: [a, b], edge, .. } => {
            format!("annular regions {a} and {b} share edge {edge}")
        }
        Witness::Curve(c) => curve_line(c),
    }
}

fn two_cut_line(t: &TwoCutWitness) -> String {
    let crossings: Vec<String> = t.disk_side.crossings_inside.iter().map(|c| c.to_string()).collect();
    let regions: Vec<String> = t.circle.arcs.iter().map(|a| a.region.to_string()).collect();
    format!("circle through regions {} bounds a disk with crossings {}", regions.join(","), crossings.join(","))
}

fn curve_line(c: &CurveWitness) -> String {
    let steps: Vec<String> = c
        .passages
        .iter()
        .zip(&c.arcs)
        .map(|(p, a)| format!("x{}/{} -> r{}", p.crossing, p.axis, a.region))
        .collect();
    format!("curve {}", steps.join(" -> "))
}
