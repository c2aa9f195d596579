//! Graphs, matchings and the path predicates everything else is phrased in.
//!
//! Vertices are dense `usize` ids below [`Graph::n`]. Paths are plain vertex
//! sequences (`&[Vertex]`); being a walk, simple, alternating or augmenting
//! are predicates over them rather than separate types.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{contract, Error, Result};

pub type Vertex = usize;

/// An undirected edge stored as `(lo, hi)` with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Result<Edge> {
        match u.cmp(&v) {
            core::cmp::Ordering::Less => Ok(Edge { lo: u, hi: v }),
            core::cmp::Ordering::Greater => Ok(Edge { lo: v, hi: u }),
            core::cmp::Ordering::Equal => Err(Error::SelfLoop(u)),
        }
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint that is not `v`. `v` must be an endpoint.
    pub fn other(self, v: Vertex) -> Vertex {
        debug_assert!(self.contains(v));
        if self.lo == v {
            self.hi
        } else {
            self.lo
        }
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.contains(other.lo) || self.contains(other.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are kept sorted in canonical order; `adjacency[v]` is the sorted
/// neighbour list of `v`. Vertices with no incident edge are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and ids `>= n`.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            list.push(Edge::new(u, v)?);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        Ok(Graph::from_sorted(n, list))
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted(n, Vec::new())
    }

    /// `edges` must be sorted, duplicate free and in range.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adjacency = alloc::vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.lo].push(e.hi);
            adjacency[e.hi].push(e.lo);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { n, edges, adjacency }
    }

    /// Number of vertex ids (including isolated vertices).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges in ascending canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.lo, e.hi)
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Cross-checks the adjacency index against the edge list.
    pub fn is_consistent(&self) -> bool {
        let incidences: usize = self.adjacency.iter().map(Vec::len).sum();
        incidences == 2 * self.edges.len()
            && self.edges.windows(2).all(|w| w[0] < w[1])
            && self.edges.iter().all(|e| {
                e.hi < self.n
                    && self.adjacency[e.lo].binary_search(&e.hi).is_ok()
                    && self.adjacency[e.hi].binary_search(&e.lo).is_ok()
            })
    }
}

/// A set of pairwise vertex-disjoint edges with a mate index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    edges: BTreeSet<Edge>,
    mate: BTreeMap<Vertex, Vertex>,
}

impl Matching {
    pub fn new() -> Matching {
        Matching::default()
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(edges: I) -> Result<Matching> {
        let mut m = Matching::new();
        for e in edges {
            m.insert(e)?;
        }
        Ok(m)
    }

    pub fn from_pairs<I: IntoIterator<Item = (Vertex, Vertex)>>(pairs: I) -> Result<Matching> {
        let mut m = Matching::new();
        for (u, v) in pairs {
            m.insert(Edge::new(u, v)?)?;
        }
        Ok(m)
    }

    fn insert(&mut self, e: Edge) -> Result<()> {
        for v in [e.lo, e.hi] {
            if let Some(&w) = self.mate.get(&v) {
                let other = Edge::new(v, w).expect("matched pair has distinct ends");
                return Err(Error::Overlap(other, e));
            }
        }
        self.mate.insert(e.lo, e.hi);
        self.mate.insert(e.hi, e.lo);
        self.edges.insert(e);
        Ok(())
    }

    fn remove(&mut self, e: Edge) -> bool {
        if self.edges.remove(&e) {
            self.mate.remove(&e.lo);
            self.mate.remove(&e.hi);
            true
        } else {
            false
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    /// Membership of the pair `{u, v}`; false for `u == v`.
    pub fn has_pair(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.mate.get(&u) == Some(&v)
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate.get(&v).copied()
    }

    pub fn is_matched(&self, v: Vertex) -> bool {
        self.mate.contains_key(&v)
    }

    /// Checks `self ⊆ g`.
    pub fn check_within(&self, g: &Graph) -> Result<()> {
        match self.edges().find(|&e| !g.contains_edge(e)) {
            Some(e) => Err(Error::EdgeNotInGraph(e)),
            None => Ok(()),
        }
    }

    /// Symmetric difference with the edges of an augmenting path.
    ///
    /// The path must be augmenting w.r.t. `self` and have distinct
    /// vertices; the result has exactly one more edge.
    pub fn augment(&self, path: &[Vertex]) -> Result<Matching> {
        if !is_augmenting_path(self, path) {
            return Err(contract("augment: path is not augmenting"));
        }
        if !is_distinct(path) {
            return Err(contract("augment: path repeats a vertex"));
        }
        let path_edges = edges_of_path(path)?;
        let mut next = self.clone();
        // Drop the matched path edges first so re-insertion never overlaps.
        for &e in &path_edges {
            next.remove(e);
        }
        for &e in &path_edges {
            if !self.contains(e) {
                next.insert(e)?;
            }
        }
        debug_assert_eq!(next.len(), self.len() + 1);
        Ok(next)
    }
}

/// Consecutive-pair edges of `p`, in order. Fails on a repeated
/// consecutive vertex, which would be a self-loop.
pub fn edges_of_path(p: &[Vertex]) -> Result<Vec<Edge>> {
    p.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
}

/// Every consecutive pair of `p` is an edge of `g`.
pub fn is_path(g: &Graph, p: &[Vertex]) -> Result<bool> {
    if let Some(&v) = p.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(p.windows(2).all(|w| g.has_edge(w[0], w[1])))
}

/// Consecutive edges of `p` alternate between in-`m` and not-in-`m`,
/// starting with either phase.
pub fn is_alternating(m: &Matching, p: &[Vertex]) -> bool {
    let mut membership = p.windows(2).map(|w| m.has_pair(w[0], w[1]));
    let Some(mut prev) = membership.next() else {
        return true;
    };
    for cur in membership {
        if cur == prev {
            return false;
        }
        prev = cur;
    }
    true
}

/// At least one edge, alternating, and both ends unmatched.
pub fn is_augmenting_path(m: &Matching, p: &[Vertex]) -> bool {
    match (p.first(), p.last()) {
        (Some(&first), Some(&last)) if p.len() >= 2 => {
            is_alternating(m, p) && !m.is_matched(first) && !m.is_matched(last)
        }
        _ => false,
    }
}

pub fn is_distinct(p: &[Vertex]) -> bool {
    let mut seen = BTreeSet::new();
    p.iter().all(|v| seen.insert(*v))
}

/// Simple path: a path of `g` without repeated vertices.
pub fn is_simple_path(g: &Graph, p: &[Vertex]) -> bool {
    !p.is_empty() && is_path(g, p).unwrap_or(false) && is_distinct(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn m(pairs: &[(Vertex, Vertex)]) -> Matching {
        Matching::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn edge_is_canonical() {
        assert_eq!(Edge::new(3, 1).unwrap(), Edge::new(1, 3).unwrap());
        assert_eq!(Edge::new(3, 1).unwrap().endpoints(), (1, 3));
        assert_eq!(Edge::new(2, 2), Err(Error::SelfLoop(2)));
    }

    #[test]
    fn graph_rejects_bad_input() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(_))
        ));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn adjacency_matches_edges() {
        let g = Graph::new(5, [(3, 1), (0, 1), (4, 0)]).unwrap();
        assert!(g.is_consistent());
        assert_eq!(g.neighbors(1), &[0, 3]);
        assert_eq!(g.neighbors(2), &[] as &[Vertex]);
        assert!(g.has_edge(4, 0) && !g.has_edge(4, 1) && !g.has_edge(2, 2));
    }

    #[test]
    fn is_path_examples() {
        let g = p4();
        assert_eq!(is_path(&g, &[0, 1, 2]), Ok(true));
        assert_eq!(is_path(&g, &[0, 2]), Ok(false));
        let g6 = Graph::empty(6);
        assert_eq!(is_path(&g6, &[5]), Ok(true));
        assert!(matches!(is_path(&g, &[0, 9]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn is_alternating_examples() {
        let mm = m(&[(1, 2)]);
        assert!(is_alternating(&mm, &[0, 1, 2, 3]));
        // {0,1} and {1,3} are both unmatched: neither phase works.
        assert!(!is_alternating(&mm, &[0, 1, 3]));
        assert!(is_alternating(&mm, &[7]));
        assert!(is_alternating(&Matching::new(), &[4, 5]));
    }

    #[test]
    fn is_augmenting_examples() {
        assert!(is_augmenting_path(&m(&[(1, 2)]), &[0, 1, 2, 3]));
        assert!(!is_augmenting_path(&Matching::new(), &[0]));
        assert!(!is_augmenting_path(&m(&[(0, 1)]), &[0, 1]));
    }

    #[test]
    fn augment_examples() {
        let got = m(&[(1, 2)]).augment(&[0, 1, 2, 3]).unwrap();
        assert_eq!(got, m(&[(0, 1), (2, 3)]));
        let got = Matching::new().augment(&[0, 1]).unwrap();
        assert_eq!(got, m(&[(0, 1)]));
        let got = m(&[(2, 3)]).augment(&[1, 2, 3, 4]).unwrap();
        assert_eq!(got, m(&[(1, 2), (3, 4)]));
        assert!(matches!(
            m(&[(0, 1)]).augment(&[0, 1]),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn edges_of_path_examples() {
        let e = |u, v| Edge::new(u, v).unwrap();
        assert_eq!(edges_of_path(&[0, 1, 2]).unwrap(), vec![e(0, 1), e(1, 2)]);
        assert_eq!(edges_of_path(&[5]).unwrap(), vec![]);
        assert_eq!(edges_of_path(&[0, 1, 0]).unwrap(), vec![e(0, 1), e(0, 1)]);
        assert_eq!(edges_of_path(&[3, 3]), Err(Error::SelfLoop(3)));
    }

    #[test]
    fn matching_rejects_overlap() {
        assert!(matches!(
            Matching::from_pairs([(0, 1), (1, 2)]),
            Err(Error::Overlap(_, _))
        ));
        let mm = m(&[(4, 2)]);
        assert_eq!(mm.mate(2), Some(4));
        assert_eq!(mm.mate(4), Some(2));
        assert!(mm.has_pair(2, 4) && !mm.has_pair(4, 4));
    }
}
