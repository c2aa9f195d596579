//! Turning two tree ascents into an augmenting path or a blossom.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{contract, Result};
use crate::graph::{is_alternating, is_augmenting_path, is_distinct, is_path, Graph, Matching, Vertex};
use crate::observe::{Observer, Quiet, SolveOptions};
use crate::search::{self, AltSearch, SearchState};

/// An odd alternating cycle hanging off an even-length alternating stem
/// that starts at an unmatched vertex. `cycle` is closed (`first == last`)
/// and its first vertex is the base. The stem does not include the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blossom {
    pub stem: Vec<Vertex>,
    pub cycle: Vec<Vertex>,
}

impl Blossom {
    pub fn base(&self) -> Vertex {
        self.cycle[0]
    }

    /// `stem ⌢ cycle`.
    pub fn walk(&self) -> Vec<Vertex> {
        let mut w = self.stem.clone();
        w.extend_from_slice(&self.cycle);
        w
    }

    /// Odd number of edges, at least three, closed.
    pub fn is_odd_cycle(&self) -> bool {
        self.cycle.len() >= 4 && self.cycle.len().is_multiple_of(2) && self.cycle.first() == self.cycle.last()
    }

    pub fn is_alternating(&self, m: &Matching) -> bool {
        is_alternating(m, &self.walk())
    }

    /// `stem ⌢ butlast(cycle)` repeats no vertex.
    pub fn is_distinct(&self) -> bool {
        let w = self.walk();
        is_distinct(&w[..w.len().saturating_sub(1)])
    }

    pub fn head_is_free(&self, m: &Matching) -> bool {
        self.walk().first().is_some_and(|&h| !m.is_matched(h))
    }

    /// The stem contributes an even number of edges up to the base.
    pub fn stem_is_even(&self) -> bool {
        self.stem.len().is_multiple_of(2)
    }

    pub fn is_path_in(&self, g: &Graph) -> bool {
        is_path(g, &self.walk()).unwrap_or(false)
    }

    /// All blossom conditions w.r.t. `⟨g, m⟩`; the first failing one is named.
    pub fn validate(&self, g: &Graph, m: &Matching) -> Result<()> {
        let checks: [(bool, &str); 6] = [
            (self.is_odd_cycle(), "cycle is not a closed odd cycle"),
            (self.is_path_in(g), "stem and cycle do not form a path of the graph"),
            (self.is_alternating(m), "stem and cycle do not alternate"),
            (self.is_distinct(), "blossom repeats a vertex"),
            (self.head_is_free(m), "blossom head is matched"),
            (self.stem_is_even(), "stem has an odd number of edges"),
        ];
        match checks.iter().find(|(ok, _)| !ok) {
            Some((_, why)) => Err(contract(*why)),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    AugmentingPath(Vec<Vertex>),
    BlossomFound(Blossom),
    NothingFound,
}

/// The prefixes `p1'`, `p2'` with `p1 = p1' ⌢ l`, `p2 = p2' ⌢ l`,
/// `last p1' = last p2'` and no other shared vertex, maximizing their
/// length. `None` when no such split exists.
pub fn longest_disj_pfx(p1: &[Vertex], p2: &[Vertex]) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let common_suffix = p1
        .iter()
        .rev()
        .zip(p2.iter().rev())
        .take_while(|(a, b)| a == b)
        .count();
    // Shared tail length k needs p1[..len-k] and p2[..len-k] to end on the
    // same vertex, so k < common_suffix.
    for k in 0..common_suffix {
        let a = &p1[..p1.len() - k];
        let b = &p2[..p2.len() - k];
        let (a_body, b_body) = (&a[..a.len() - 1], &b[..b.len() - 1]);
        let meet = a[a.len() - 1];
        let a_set: BTreeSet<Vertex> = a_body.iter().copied().collect();
        let disjoint = !a_set.contains(&meet)
            && !b_body.contains(&meet)
            && b_body.iter().all(|v| !a_set.contains(v));
        if disjoint {
            return Some((a.to_vec(), b.to_vec()));
        }
    }
    None
}

/// `rev p1 ⌢ p2` for two disjoint ascents of odd vertex count.
pub fn assemble_augmenting(p1: &[Vertex], p2: &[Vertex]) -> Result<Vec<Vertex>> {
    if p1.is_empty() || p2.is_empty() {
        return Err(contract("assemble_augmenting: empty path"));
    }
    if p1.len().is_multiple_of(2) || p2.len().is_multiple_of(2) {
        return Err(contract("assemble_augmenting: path with an even vertex count"));
    }
    if p1.last() == p2.last() {
        return Err(contract("assemble_augmenting: paths end at the same vertex"));
    }
    let in_p1: BTreeSet<Vertex> = p1.iter().copied().collect();
    if p2.iter().any(|v| in_p1.contains(v)) {
        return Err(contract("assemble_augmenting: paths share a vertex"));
    }
    let mut path: Vec<Vertex> = p1.iter().rev().copied().collect();
    path.extend_from_slice(p2);
    Ok(path)
}

/// Stem `rev(drop |p1'| p1)` and cycle `rev p1' ⌢ p2'` from the longest
/// disjoint prefixes of two ascents that share their root.
pub fn assemble_blossom(p1: &[Vertex], p2: &[Vertex]) -> Result<Blossom> {
    let (pfx1, pfx2) = longest_disj_pfx(p1, p2)
        .ok_or_else(|| contract("assemble_blossom: no disjoint prefixes"))?;
    let stem = p1[pfx1.len()..].iter().rev().copied().collect();
    let mut cycle: Vec<Vertex> = pfx1.iter().rev().copied().collect();
    cycle.extend_from_slice(&pfx2);
    Ok(Blossom { stem, cycle })
}

/// An augmenting path or a blossom w.r.t. `⟨g, m⟩` whenever one exists.
pub fn compute_blossom(g: &Graph, m: &Matching) -> Result<SearchOutcome> {
    run(g, m, SolveOptions::default(), 0, &mut Quiet).map(|(outcome, _)| outcome)
}

/// Like [`compute_blossom`], also returning the final forest when nothing
/// was found.
pub fn run(
    g: &Graph,
    m: &Matching,
    opts: SolveOptions,
    level: usize,
    obs: &mut dyn Observer,
) -> Result<(SearchOutcome, Option<SearchState>)> {
    search::validate_input(g, m)?;
    if let Some(e) = g
        .edges()
        .iter()
        .find(|e| !m.is_matched(e.lo()) && !m.is_matched(e.hi()))
    {
        return Ok((SearchOutcome::AugmentingPath(alloc::vec![e.lo(), e.hi()]), None));
    }
    let outcome = match search::run(g, m, opts, level, obs)? {
        AltSearch::Exhausted(state) => return Ok((SearchOutcome::NothingFound, Some(state))),
        AltSearch::Paths(p1, p2) if p1.last() != p2.last() => {
            SearchOutcome::AugmentingPath(assemble_augmenting(&p1, &p2)?)
        }
        AltSearch::Paths(p1, p2) => SearchOutcome::BlossomFound(assemble_blossom(&p1, &p2)?),
    };
    if opts.check_invariants {
        match &outcome {
            SearchOutcome::AugmentingPath(p) => {
                if !(is_augmenting_path(m, p) && is_path(g, p)? && is_distinct(p)) {
                    return Err(contract("assembled path is not a simple augmenting path"));
                }
            }
            SearchOutcome::BlossomFound(b) => b.validate(g, m)?,
            SearchOutcome::NothingFound => {}
        }
    }
    Ok((outcome, None))
}
