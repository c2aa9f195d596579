//! The ten loop invariants of the alternating search, one predicate each.
//!
//! They are stated over `(graph, matching, state)` exactly as they must hold
//! at every loop head. [`check_all`] runs them in dependency order: the
//! parent relation must be well founded before any ascent is computed.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::{follow, Parity, SearchState};
use crate::graph::{is_alternating, is_simple_path, Edge, Graph, Matching, Vertex};

/// Invariant 10 enumerates alternating paths; above this many vertex ids
/// it is skipped.
pub const WITNESS_PAIR_MAX_VERTICES: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantViolation {
    pub invariant: u8,
    pub vertex: Option<Vertex>,
    pub detail: &'static str,
}

impl fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invariant {}: {}", self.invariant, self.detail)?;
        if let Some(v) = self.vertex {
            write!(f, " (vertex {v})")?;
        }
        Ok(())
    }
}

type Check = Result<(), InvariantViolation>;

fn fail(invariant: u8, vertex: Option<Vertex>, detail: &'static str) -> Check {
    Err(InvariantViolation { invariant, vertex, detail })
}

fn ascent(st: &SearchState, v: Vertex) -> Result<Vec<Vertex>, InvariantViolation> {
    follow(st.parents(), v).map_err(|_| InvariantViolation {
        invariant: 3,
        vertex: Some(v),
        detail: "parent relation is not well founded",
    })
}

fn labeled(st: &SearchState) -> impl Iterator<Item = Vertex> + '_ {
    (0..st.n()).filter(|&v| st.label(v).is_some())
}

pub fn check_all(g: &Graph, m: &Matching, st: &SearchState) -> Check {
    parent_well_founded(st)?;
    unlabeled_never_parent(st)?;
    matched_pairs_labeled_together(m, st)?;
    ascent_labels_alternate(st)?;
    ascent_edges_alternate(m, st)?;
    ascents_end_unmatched(m, st)?;
    ascents_end_even(st)?;
    labeled_matched_edges_examined(m, st)?;
    ascents_are_simple_paths(g, st)?;
    witness_pairs_touch_unexamined(g, m, st)
}

/// 1. Along the ascent from an even vertex, labels alternate between
///    `(r, even)` and `(r, odd)`.
pub fn ascent_labels_alternate(st: &SearchState) -> Check {
    for u in (0..st.n()).filter(|&u| st.is_even(u)) {
        let root = st.label(u).unwrap().root;
        for (i, w) in ascent(st, u)?.into_iter().enumerate() {
            let want = if i % 2 == 0 { Parity::Even } else { Parity::Odd };
            match st.label(w) {
                Some(l) if l.root == root && l.parity == want => {}
                _ => return fail(1, Some(u), "ascent labels do not alternate within one tree"),
            }
        }
    }
    Ok(())
}

/// 2. On an ascent, a step from `(r, even)` to `(r, odd)` is a matching
///    edge and every other step is not.
pub fn ascent_edges_alternate(m: &Matching, st: &SearchState) -> Check {
    for v in labeled(st) {
        let root = st.label(v).unwrap().root;
        let path = ascent(st, v)?;
        for w in path.windows(2) {
            let even_to_odd = st.label(w[0]).is_some_and(|l| l.root == root && l.parity == Parity::Even)
                && st.label(w[1]).is_some_and(|l| l.root == root && l.parity == Parity::Odd);
            if even_to_odd != m.has_pair(w[0], w[1]) {
                return fail(2, Some(v), "ascent edge matched-ness disagrees with labels");
            }
        }
    }
    Ok(())
}

/// 3. The parent relation is well founded (no cycles).
pub fn parent_well_founded(st: &SearchState) -> Check {
    for v in 0..st.n() {
        ascent(st, v)?;
    }
    Ok(())
}

/// 4. For `{v1, v2} ∈ M`, `v1` is unlabeled iff `v2` is.
pub fn matched_pairs_labeled_together(m: &Matching, st: &SearchState) -> Check {
    for e in m.edges() {
        if st.label(e.lo()).is_none() != st.label(e.hi()).is_none() {
            return fail(4, Some(e.lo()), "matched pair is half labeled");
        }
    }
    Ok(())
}

/// 5. An unlabeled vertex is nobody's parent.
pub fn unlabeled_never_parent(st: &SearchState) -> Check {
    for v in 0..st.n() {
        if let Some(p) = st.parent(v) {
            if st.label(p).is_none() {
                return fail(5, Some(p), "unlabeled vertex is a parent");
            }
        }
    }
    Ok(())
}

/// 6. Every ascent from a labeled vertex ends at an unmatched vertex.
pub fn ascents_end_unmatched(m: &Matching, st: &SearchState) -> Check {
    for v in labeled(st) {
        let last = *ascent(st, v)?.last().unwrap();
        if m.is_matched(last) {
            return fail(6, Some(v), "ascent ends at a matched vertex");
        }
    }
    Ok(())
}

/// 7. Every ascent from a labeled vertex ends at an even vertex.
pub fn ascents_end_even(st: &SearchState) -> Check {
    for v in labeled(st) {
        let last = *ascent(st, v)?.last().unwrap();
        if !st.is_even(last) {
            return fail(7, Some(v), "ascent ends at a vertex that is not even");
        }
    }
    Ok(())
}

/// 8. A matching edge with a labeled endpoint is examined.
pub fn labeled_matched_edges_examined(m: &Matching, st: &SearchState) -> Check {
    for e in m.edges() {
        if st.label(e.lo()).is_some() && !st.is_examined(e) {
            return fail(8, Some(e.lo()), "labeled matching edge is unexamined");
        }
    }
    Ok(())
}

/// 9. Every ascent is a simple path of `g`.
pub fn ascents_are_simple_paths(g: &Graph, st: &SearchState) -> Check {
    for v in 0..st.n() {
        if !is_simple_path(g, &ascent(st, v)?) {
            return fail(9, Some(v), "ascent is not a simple path");
        }
    }
    Ok(())
}

/// 10. For any two paths `p1`, `p2` that are simple, alternating, of odd
///     vertex count, end at unmatched vertices and whose heads are joined
///     by a non-matching edge of `g`, some edge of `rev p1 ⌢ p2` is in
///     neither `M` nor the examined set.
///
/// A violating pair uses only edges of `M ∪ ex`, so it suffices to collect
/// every head reachable from a free vertex by an even-edge alternating
/// simple path inside `M ∪ ex` and look for an examined non-matching edge
/// joining two such heads. Skipped above [`WITNESS_PAIR_MAX_VERTICES`].
pub fn witness_pairs_touch_unexamined(g: &Graph, m: &Matching, st: &SearchState) -> Check {
    if g.n() > WITNESS_PAIR_MAX_VERTICES {
        return Ok(());
    }
    let usable = |u: Vertex, v: Vertex| {
        m.has_pair(u, v) || Edge::new(u, v).is_ok_and(|e| st.is_examined(e))
    };
    let mut heads = BTreeSet::new();
    fn go<F: Fn(Vertex, Vertex) -> bool>(
        g: &Graph,
        m: &Matching,
        usable: &F,
        path: &mut Vec<Vertex>,
        heads: &mut BTreeSet<Vertex>,
    ) {
        let tip = *path.last().unwrap();
        if path.len() % 2 == 1 {
            heads.insert(tip);
        }
        for &next in g.neighbors(tip) {
            if path.contains(&next) || !usable(tip, next) {
                continue;
            }
            path.push(next);
            if is_alternating(m, path) {
                go(g, m, usable, path, heads);
            }
            path.pop();
        }
    }
    for f in (0..g.n()).filter(|&f| !m.is_matched(f)) {
        go(g, m, &usable, &mut alloc::vec![f], &mut heads);
    }
    for e in st.examined() {
        if !m.contains(e) && heads.contains(&e.lo()) && heads.contains(&e.hi()) {
            return fail(10, Some(e.lo()), "a witness pair lies entirely in M and the examined edges");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::VertexLabel;
    use alloc::vec;

    fn even(root: Vertex) -> Option<VertexLabel> {
        Some(VertexLabel { root, parity: Parity::Even })
    }

    fn odd(root: Vertex) -> Option<VertexLabel> {
        Some(VertexLabel { root, parity: Parity::Odd })
    }

    fn e(u: Vertex, v: Vertex) -> Edge {
        Edge::new(u, v).unwrap()
    }

    // P4 0-1-2-3, M = {{1,2}}, after growing 0 -> 1 -> 2.
    fn grown() -> (Graph, Matching, SearchState) {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = Matching::from_pairs([(1, 2)]).unwrap();
        let st = SearchState::from_parts(
            [e(0, 1), e(1, 2)].into_iter().collect(),
            vec![None, Some(0), Some(1), None],
            vec![even(0), odd(0), even(0), even(3)],
        )
        .unwrap();
        (g, m, st)
    }

    #[test]
    fn consistent_state_passes() {
        let (g, m, st) = grown();
        assert_eq!(check_all(&g, &m, &st), Ok(()));
    }

    #[test]
    fn each_corruption_is_caught() {
        let (g, m, st) = grown();

        let mut bad = st.clone();
        bad.parent[0] = Some(2);
        assert_eq!(check_all(&g, &m, &bad).unwrap_err().invariant, 3);

        let mut bad = st.clone();
        bad.label[2] = None;
        assert_eq!(matched_pairs_labeled_together(&m, &bad).unwrap_err().invariant, 4);
        assert_eq!(unlabeled_never_parent(&bad).map_err(|v| v.invariant), Ok(()));

        let mut bad = st.clone();
        bad.label[1] = None;
        assert_eq!(unlabeled_never_parent(&bad).unwrap_err().invariant, 5);

        let mut bad = st.clone();
        bad.label[1] = even(0);
        assert_eq!(ascent_labels_alternate(&bad).unwrap_err().invariant, 1);

        let mut bad = st.clone();
        bad.label[1] = odd(3);
        assert_eq!(ascent_edges_alternate(&m, &bad).unwrap_err().invariant, 2);

        let mut bad = st.clone();
        bad.parent[3] = Some(2);
        bad.label[3] = odd(0);
        assert_eq!(ascents_end_even(&bad), Ok(()));
        bad.parent[0] = Some(3);
        bad.parent[3] = None;
        assert_eq!(ascents_end_even(&bad).unwrap_err().invariant, 7);

        let mut bad = st.clone();
        bad.examined.remove(&e(1, 2));
        assert_eq!(labeled_matched_edges_examined(&m, &bad).unwrap_err().invariant, 8);

        let mut bad = st.clone();
        bad.parent[3] = Some(0);
        assert_eq!(ascents_are_simple_paths(&g, &bad).unwrap_err().invariant, 9);
    }

    #[test]
    fn ascent_ending_matched_is_caught() {
        let m = Matching::from_pairs([(0, 1), (2, 3)]).unwrap();
        let st = SearchState::from_parts(
            BTreeSet::new(),
            vec![None, Some(0), None, None],
            vec![even(0), odd(0), None, None],
        )
        .unwrap();
        assert_eq!(ascents_end_unmatched(&m, &st).unwrap_err().invariant, 6);
    }

    #[test]
    fn examined_even_even_edge_breaks_witness_invariant() {
        let (g, m, mut st) = grown();
        assert_eq!(witness_pairs_touch_unexamined(&g, &m, &st), Ok(()));
        // {2,3} joins two even heads; examining it without stopping is a bug.
        st.examined.insert(e(2, 3));
        assert_eq!(witness_pairs_touch_unexamined(&g, &m, &st).unwrap_err().invariant, 10);
    }
}
