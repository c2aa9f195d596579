//! Result and certificate documents (JSON).
//!
//! A result carries `n`, `m`, `matching` (0-based `[u, v]` pairs), `osc`
//! (one label per vertex), `size` and `verdict`. A certificate is the same
//! document; only `matching` and `osc` are read, everything else is ignored.

use blossom_core::{CertifiedMatching, Graph, Verdict, Vertex};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub status: String,
    pub reason: Option<String>,
}

impl From<Verdict> for VerdictDoc {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Accept => VerdictDoc { status: "accept".into(), reason: None },
            Verdict::Reject(r) => VerdictDoc { status: "reject".into(), reason: Some(r.message().into()) },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub n: usize,
    pub m: usize,
    pub matching: Vec<[Vertex; 2]>,
    pub osc: Vec<i64>,
    pub size: usize,
    pub verdict: VerdictDoc,
}

impl ResultDoc {
    pub fn new(g: &Graph, cert: &CertifiedMatching, verdict: Verdict) -> ResultDoc {
        ResultDoc {
            n: g.n(),
            m: g.edge_count(),
            matching: cert.matching.edges().map(|e| [e.lo(), e.hi()]).collect(),
            osc: cert.witness.labels.clone(),
            size: cert.matching.len(),
            verdict: verdict.into(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// What the checker reads from a certificate file. Edges are kept as given
/// (order, duplicates, overlaps) so that the checker sees exactly the input.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct CertificateDoc {
    pub matching: Vec<[Vertex; 2]>,
    pub osc: Vec<i64>,
}

impl CertificateDoc {
    pub fn parse(text: &str) -> Result<CertificateDoc, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse {
            line: e.line(),
            message: format!("certificate: {e}"),
        })
    }

    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.matching.iter().map(|&[u, v]| (u, v)).collect()
    }
}
