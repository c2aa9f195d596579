//! Run-time options and hooks for watching a solve.

use crate::contraction::ContractionMap;
use crate::graph::{Graph, Matching, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Assert the alternating-search loop invariants at every loop head and
    /// re-validate every intermediate path and blossom. On by default in
    /// debug builds; costs roughly `O(n · depth)` per search iteration.
    pub check_invariants: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            check_invariants: cfg!(debug_assertions),
        }
    }
}

impl SolveOptions {
    pub fn checked() -> Self {
        SolveOptions { check_invariants: true }
    }

    pub fn unchecked() -> Self {
        SolveOptions { check_invariants: false }
    }
}

/// What one iteration of the alternating search did with its edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepAction {
    /// `v2` was outside every tree; it became odd and its mate even.
    Grow { odd: Vertex, even: Vertex },
    /// `v2` was odd already; nothing to do.
    SkipOdd,
    /// `v2` was even: the search stops with two tree ascents.
    Found,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepEvent {
    /// Contraction depth of the graph being searched (0 = input graph).
    pub level: usize,
    pub iteration: usize,
    /// The even endpoint of the chosen edge.
    pub v1: Vertex,
    pub v2: Vertex,
    pub action: StepAction,
}

/// A blossom contraction, reported before the search descends into the
/// quotient.
pub struct ContractionEvent<'a> {
    pub level: usize,
    pub graph: &'a Graph,
    pub matching: &'a Matching,
    pub map: &'a ContractionMap,
    pub quotient_graph: &'a Graph,
    pub quotient_matching: &'a Matching,
}

pub trait Observer {
    fn on_step(&mut self, _event: &StepEvent) {}
    fn on_contraction(&mut self, _event: &ContractionEvent<'_>) {}
}

/// Ignores everything.
pub struct Quiet;

impl Observer for Quiet {}
