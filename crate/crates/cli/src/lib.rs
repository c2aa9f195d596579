//! File formats, documents and command implementations behind the
//! `blossom` binary. Commands take text in and hand values back so the
//! binary only deals with files, streams and exit codes.

pub mod document;
pub mod format;

use std::io::Write;

use blossom_core::observe::{ContractionEvent, StepAction, StepEvent};
use blossom_core::oracle::brute_max_matching;
use blossom_core::{
    check_certificate, check_max_card_matching, find_max_matching_with, Error as CoreError, Graph, Observer,
    SolveOptions, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use document::{CertificateDoc, ResultDoc};
use format::Format;

pub mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const CERTIFICATION: u8 = 2;
    pub const REJECT: u8 = 3;
    pub const CAPACITY: u8 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("{0}")]
    Core(CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::InvalidArgument(_) => exit::INPUT,
            CliError::Core(CoreError::Capacity { .. }) => exit::CAPACITY,
            CliError::Core(
                CoreError::Contract(_) | CoreError::Invariant(_) | CoreError::LooseCover { .. },
            ) => exit::CERTIFICATION,
            CliError::Core(_) => exit::INPUT,
        }
    }
}

/// Streams search steps and contractions as one JSON object per line.
pub struct JsonlTrace<W: Write> {
    out: W,
}

impl<W: Write> JsonlTrace<W> {
    pub fn new(out: W) -> Self {
        JsonlTrace { out }
    }

    fn emit(&mut self, value: serde_json::Value) {
        // A closed trace stream must not abort the solve.
        let _ = writeln!(self.out, "{value}");
    }
}

impl<W: Write> Observer for JsonlTrace<W> {
    fn on_step(&mut self, e: &StepEvent) {
        let mut record = json!({
            "event": "step",
            "level": e.level,
            "iteration": e.iteration,
            "v1": e.v1,
            "v2": e.v2,
        });
        let fields = match e.action {
            StepAction::Grow { odd, even } => json!({"action": "grow", "odd": odd, "even": even}),
            StepAction::SkipOdd => json!({"action": "skip_odd"}),
            StepAction::Found => json!({"action": "found"}),
        };
        if let (Some(r), serde_json::Value::Object(f)) = (record.as_object_mut(), fields) {
            r.extend(f);
        }
        self.emit(record);
    }

    fn on_contraction(&mut self, e: &ContractionEvent<'_>) {
        self.emit(json!({
            "event": "contract",
            "level": e.level,
            "pseudo": e.map.pseudo(),
            "cycle": e.map.cycle(),
        }));
    }
}

pub fn solve(g: &Graph, opts: SolveOptions, obs: &mut dyn Observer) -> Result<ResultDoc, CliError> {
    let cert = find_max_matching_with(g, opts, obs).map_err(CliError::Core)?;
    let verdict = check_certificate(g, &cert);
    Ok(ResultDoc::new(g, &cert, verdict))
}

pub fn check(g: &Graph, certificate: &str) -> Result<Verdict, CliError> {
    let cert = CertificateDoc::parse(certificate)?;
    Ok(check_max_card_matching(g, &cert.pairs(), &blossom_core::OddSetCover::new(cert.osc)))
}

pub fn oracle(g: &Graph) -> Result<usize, CliError> {
    brute_max_matching(g).map(|m| m.len()).map_err(CliError::Core)
}

/// `G(n, p)`: each vertex pair, in lexicographic order, is an edge with
/// probability `p`. Identical for identical `(n, p, seed)`.
pub fn generate(n: usize, p: f64, seed: u64) -> Result<Graph, CliError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(CliError::InvalidArgument(format!("edge probability {p} is not in [0, 1]")));
    }
    if n > format::MAX_VERTICES {
        return Err(CliError::Core(CoreError::Capacity {
            what: "vertex count",
            limit: format::MAX_VERTICES,
            actual: n,
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).map_err(CliError::Core)
}

pub fn read_graph(text: &str, fmt: Format) -> Result<Graph, CliError> {
    format::parse(text, fmt)
}
