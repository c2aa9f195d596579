//! Alternating-tree search.
//!
//! Every free vertex starts as an even root. The search repeatedly takes
//! the least unexamined edge `{v1, v2}` with `v1` even and
//!
//! * grows the tree by `v2` (odd) and its mate (even) when `v2` is in no tree,
//! * ignores the edge when `v2` is odd,
//! * stops when `v2` is even, returning the tree ascents from `v1` and `v2`.
//!
//! Ties are broken by canonical edge order; when both endpoints are even the
//! lower id plays `v1`.

pub mod invariants;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{contract, Result};
use crate::graph::{Edge, Graph, Matching, Vertex};
use crate::observe::{Observer, Quiet, SolveOptions, StepAction, StepEvent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    pub root: Vertex,
    pub parity: Parity,
}

/// The labeled forest: examined edges, tree parents and labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchState {
    examined: BTreeSet<Edge>,
    parent: Vec<Option<Vertex>>,
    label: Vec<Option<VertexLabel>>,
}

impl SearchState {
    fn new(n: usize) -> SearchState {
        SearchState {
            examined: BTreeSet::new(),
            parent: alloc::vec![None; n],
            label: alloc::vec![None; n],
        }
    }

    /// Builds a state directly; used to probe the invariant predicates.
    pub fn from_parts(
        examined: BTreeSet<Edge>,
        parent: Vec<Option<Vertex>>,
        label: Vec<Option<VertexLabel>>,
    ) -> Result<SearchState> {
        if parent.len() != label.len() {
            return Err(contract("parent and label tables differ in length"));
        }
        Ok(SearchState { examined, parent, label })
    }

    pub fn n(&self) -> usize {
        self.label.len()
    }

    pub fn examined(&self) -> impl Iterator<Item = Edge> + '_ {
        self.examined.iter().copied()
    }

    pub fn is_examined(&self, e: Edge) -> bool {
        self.examined.contains(&e)
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent.get(v).copied().flatten()
    }

    pub fn parents(&self) -> &[Option<Vertex>] {
        &self.parent
    }

    pub fn label(&self, v: Vertex) -> Option<VertexLabel> {
        self.label.get(v).copied().flatten()
    }

    pub fn parity(&self, v: Vertex) -> Option<Parity> {
        self.label(v).map(|l| l.parity)
    }

    pub fn is_even(&self, v: Vertex) -> bool {
        self.parity(v) == Some(Parity::Even)
    }

    /// Tree ascent from `v` to its root.
    pub fn ascent(&self, v: Vertex) -> Result<Vec<Vertex>> {
        follow(&self.parent, v)
    }

    pub fn vertices_with(&self, parity: Option<Parity>) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n()).filter(move |&v| self.parity(v) == parity)
    }
}

/// `[v]` when `v` has no parent, else `v` followed by the ascent from its
/// parent. Vertices past the end of `parent` have no parent. A parent cycle
/// is reported as a contract error after `parent.len()` steps.
pub fn follow(parent: &[Option<Vertex>], v: Vertex) -> Result<Vec<Vertex>> {
    let mut path = alloc::vec![v];
    let mut cur = v;
    while let Some(next) = parent.get(cur).copied().flatten() {
        if path.len() > parent.len() {
            return Err(contract("follow: parent relation has a cycle"));
        }
        path.push(next);
        cur = next;
    }
    Ok(path)
}

/// Result of one alternating search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AltSearch {
    /// Ascents from the two even tips of the stopping edge, `v1` first.
    Paths(Vec<Vertex>, Vec<Vertex>),
    /// No even-even edge exists; the final forest.
    Exhausted(SearchState),
}

/// Two tree ascents whose tips are joined by a non-matching edge, or
/// `None` when the search exhausts.
pub fn compute_alt_path(g: &Graph, m: &Matching) -> Result<Option<(Vec<Vertex>, Vec<Vertex>)>> {
    match run(g, m, SolveOptions::default(), 0, &mut Quiet)? {
        AltSearch::Paths(p1, p2) => Ok(Some((p1, p2))),
        AltSearch::Exhausted(_) => Ok(None),
    }
}

/// The terminal forest of a failed search.
pub fn final_state(g: &Graph, m: &Matching) -> Result<SearchState> {
    match run(g, m, SolveOptions::default(), 0, &mut Quiet)? {
        AltSearch::Exhausted(state) => Ok(state),
        AltSearch::Paths(..) => Err(contract("final_state: the search finds a pair of paths")),
    }
}

pub(crate) fn validate_input(g: &Graph, m: &Matching) -> Result<()> {
    for e in m.edges() {
        g.check_vertex(e.hi())?;
    }
    m.check_within(g)
}

pub fn run(
    g: &Graph,
    m: &Matching,
    opts: SolveOptions,
    level: usize,
    obs: &mut dyn Observer,
) -> Result<AltSearch> {
    validate_input(g, m)?;
    let n = g.n();
    let mut st = SearchState::new(n);
    let mut candidates = BTreeSet::new();
    for u in (0..n).filter(|&u| !m.is_matched(u)) {
        st.label[u] = Some(VertexLabel { root: u, parity: Parity::Even });
        for &w in g.neighbors(u) {
            candidates.insert(Edge::new(u, w)?);
        }
    }

    let mut iteration = 0;
    loop {
        if opts.check_invariants {
            invariants::check_all(g, m, &st)?;
        }
        let Some(e) = candidates.pop_first() else {
            break;
        };
        let (v1, v2) = if st.is_even(e.lo()) {
            (e.lo(), e.hi())
        } else {
            (e.hi(), e.lo())
        };
        let root = st
            .label(v1)
            .filter(|l| l.parity == Parity::Even)
            .ok_or_else(|| contract("candidate edge without an even endpoint"))?
            .root;
        st.examined.insert(e);
        iteration += 1;

        let action = match st.parity(v2) {
            None => {
                let v3 = m
                    .mate(v2)
                    .ok_or_else(|| contract("unlabeled vertex without a mate"))?;
                let mate_edge = Edge::new(v2, v3)?;
                st.examined.insert(mate_edge);
                candidates.remove(&mate_edge);
                st.label[v2] = Some(VertexLabel { root, parity: Parity::Odd });
                st.label[v3] = Some(VertexLabel { root, parity: Parity::Even });
                st.parent[v2] = Some(v1);
                st.parent[v3] = Some(v2);
                for &w in g.neighbors(v3) {
                    let f = Edge::new(v3, w)?;
                    if !st.examined.contains(&f) {
                        candidates.insert(f);
                    }
                }
                StepAction::Grow { odd: v2, even: v3 }
            }
            Some(Parity::Odd) => StepAction::SkipOdd,
            Some(Parity::Even) => StepAction::Found,
        };
        obs.on_step(&StepEvent { level, iteration, v1, v2, action });
        if action == StepAction::Found {
            return Ok(AltSearch::Paths(st.ascent(v1)?, st.ascent(v2)?));
        }
    }
    debug_assert!(iteration <= g.edge_count());
    Ok(AltSearch::Exhausted(st))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use alloc::vec;

    fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn matching(pairs: &[(Vertex, Vertex)]) -> Matching {
        Matching::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn follow_examples() {
        let parent = [None, Some(0), Some(1)];
        assert_eq!(follow(&parent, 2).unwrap(), vec![2, 1, 0]);
        assert_eq!(follow(&[], 7).unwrap(), vec![7]);
        let looped = [None, None, None, Some(3)];
        assert!(matches!(follow(&looped, 3), Err(Error::Contract(_))));
    }

    #[test]
    fn p4_pair() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let got = compute_alt_path(&g, &matching(&[(1, 2)])).unwrap();
        assert_eq!(got, Some((vec![2, 1, 0], vec![3])));
    }

    #[test]
    fn c5_pair_shares_root() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let got = compute_alt_path(&g, &matching(&[(1, 2), (3, 4)])).unwrap();
        assert_eq!(got, Some((vec![2, 1, 0], vec![3, 4, 0])));
    }

    #[test]
    fn star_exhausts() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let m = matching(&[(0, 1)]);
        assert_eq!(compute_alt_path(&g, &m).unwrap(), None);
        let st = final_state(&g, &m).unwrap();
        assert_eq!(st.vertices_with(Some(Parity::Even)).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(st.vertices_with(Some(Parity::Odd)).collect::<Vec<_>>(), vec![0]);
        for e in g.edges() {
            assert!(st.is_examined(*e));
        }
    }

    #[test]
    fn final_state_edge_cases() {
        let g = graph(2, &[(0, 1)]);
        let st = final_state(&g, &matching(&[(0, 1)])).unwrap();
        assert_eq!(st.vertices_with(None).count(), 2);

        let g = Graph::empty(3);
        let st = final_state(&g, &Matching::new()).unwrap();
        for v in 0..3 {
            assert_eq!(st.label(v), Some(VertexLabel { root: v, parity: Parity::Even }));
            assert_eq!(st.parent(v), None);
        }

        let g = graph(2, &[(0, 1)]);
        assert!(matches!(final_state(&g, &Matching::new()), Err(Error::Contract(_))));
    }

    #[test]
    fn rejects_matching_outside_graph() {
        let g = graph(3, &[(0, 1)]);
        assert!(matches!(
            compute_alt_path(&g, &matching(&[(1, 2)])),
            Err(Error::EdgeNotInGraph(_))
        ));
    }

    #[test]
    fn trace_reports_each_iteration() {
        struct Log(Vec<StepEvent>);
        impl Observer for Log {
            fn on_step(&mut self, e: &StepEvent) {
                self.0.push(*e);
            }
        }
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let mut log = Log(Vec::new());
        run(&g, &matching(&[(1, 2)]), SolveOptions::checked(), 0, &mut log).unwrap();
        let actions: Vec<_> = log.0.iter().map(|e| (e.v1, e.v2, e.action)).collect();
        assert_eq!(
            actions,
            vec![
                (0, 1, StepAction::Grow { odd: 1, even: 2 }),
                (2, 3, StepAction::Found),
            ]
        );
    }
}
