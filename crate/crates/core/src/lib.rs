//! Decides tg-hyperbolicity of alternating link complements in thickened
//! surfaces with boundary, from a diagram given as a rotation system with
//! puncture marks.

pub mod chords;
pub mod conditions;
pub mod diagram;
pub mod error;
pub mod format;
pub mod generate;
pub mod primeness;
pub mod regions;
pub mod verdict;

pub use conditions::{
    build_passage_graph, check_condition_ii, check_condition_iii, check_condition_iv, verify_curve_witness, CurveArc,
    CurveSearch, CurveWitness, Passage, PassageGraph, DEFAULT_BUDGET,
};
pub use diagram::{handlebody_genus, Corner, Dart, Diagram, Edge, LinkComponent, PunctureMark, ValidationReport};
pub use error::{CutError, DiagramError, GenerateError, ParseError};
pub use format::{parse_diagram, serialize_diagram};
pub use generate::{fixtures, generate, Family};
pub use primeness::{check_reduced, check_weakly_prime, cut_and_classify, CutCircle, NugatoryWitness, TwoCutWitness};
pub use regions::{adjacent_region_pairs, opposite_corner_regions, trace_regions, Region, RegionClass, RegionMap};
pub use verdict::{
    find_hyperbolic_staking, hyperbolic_stakings, stake, theorem_ambient_verdict, theorem_thickened_verdict,
    AmbientAssertions, Staking, Status, Theorem, Verdict, VerdictOptions,
};
