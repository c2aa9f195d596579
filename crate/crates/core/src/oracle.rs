//! Exhaustive ground truth for small instances.
//!
//! Nothing here touches the blossom engine: the oracle is written only
//! against the predicates of [`crate::graph`], so agreement between the two
//! is real evidence. Iteration orders are fixed so failures reproduce.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{
    is_alternating, is_augmenting_path, is_distinct, is_path, Edge, Graph, Matching, Vertex,
};

/// Largest edge count the exhaustive searches accept.
pub const MAX_ORACLE_EDGES: usize = 25;
/// Largest vertex count [`enumerate_graphs`] accepts.
pub const MAX_ENUMERATION_VERTICES: usize = 7;

fn guard(g: &Graph) -> Result<()> {
    if g.edge_count() > MAX_ORACLE_EDGES {
        Err(Error::Capacity {
            what: "oracle edge count",
            limit: MAX_ORACLE_EDGES,
            actual: g.edge_count(),
        })
    } else {
        Ok(())
    }
}

/// A maximum matching by branch and bound over edge subsets.
pub fn brute_max_matching(g: &Graph) -> Result<Matching> {
    guard(g)?;
    struct Search<'a> {
        edges: &'a [Edge],
        used: Vec<bool>,
        current: Vec<Edge>,
        best: Vec<Edge>,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize) {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            if i == self.edges.len() {
                return;
            }
            let remaining = self.edges.len() - i;
            let free = self.used.iter().filter(|u| !**u).count();
            if self.current.len() + remaining.min(free / 2) <= self.best.len() {
                return;
            }
            let e = self.edges[i];
            if !self.used[e.lo()] && !self.used[e.hi()] {
                self.used[e.lo()] = true;
                self.used[e.hi()] = true;
                self.current.push(e);
                self.go(i + 1);
                self.current.pop();
                self.used[e.lo()] = false;
                self.used[e.hi()] = false;
            }
            self.go(i + 1);
        }
    }
    let mut s = Search {
        edges: g.edges(),
        used: alloc::vec![false; g.n()],
        current: Vec::new(),
        best: Vec::new(),
    };
    s.go(0);
    Matching::from_edges(s.best)
}

/// Every matching contained in `g`, smallest edge index first.
pub fn all_matchings(g: &Graph) -> Result<Vec<Matching>> {
    guard(g)?;
    fn go(g: &Graph, i: usize, used: &mut Vec<bool>, cur: &mut Vec<Edge>, out: &mut Vec<Matching>) {
        if i == g.edge_count() {
            out.push(Matching::from_edges(cur.iter().copied()).expect("disjoint by construction"));
            return;
        }
        go(g, i + 1, used, cur, out);
        let e = g.edges()[i];
        if !used[e.lo()] && !used[e.hi()] {
            used[e.lo()] = true;
            used[e.hi()] = true;
            cur.push(e);
            go(g, i + 1, used, cur, out);
            cur.pop();
            used[e.lo()] = false;
            used[e.hi()] = false;
        }
    }
    let mut out = Vec::new();
    go(g, 0, &mut alloc::vec![false; g.n()], &mut Vec::new(), &mut out);
    Ok(out)
}

fn check_matching_in(g: &Graph, m: &Matching) -> Result<()> {
    for e in m.edges() {
        g.check_vertex(e.hi())?;
    }
    m.check_within(g)
}

/// Simple alternating paths starting at `start`, visited depth first in
/// ascending neighbour order. `visit` sees every prefix and returns `true`
/// to stop the whole enumeration.
fn walk_alternating<F>(g: &Graph, m: &Matching, start: Vertex, visit: &mut F) -> bool
where
    F: FnMut(&[Vertex]) -> bool,
{
    fn go<F: FnMut(&[Vertex]) -> bool>(
        g: &Graph,
        m: &Matching,
        path: &mut Vec<Vertex>,
        on_path: &mut Vec<bool>,
        visit: &mut F,
    ) -> bool {
        if visit(path) {
            return true;
        }
        let tip = *path.last().unwrap();
        for &next in g.neighbors(tip) {
            if on_path[next] {
                continue;
            }
            path.push(next);
            if is_alternating(m, path) {
                on_path[next] = true;
                let stop = go(g, m, path, on_path, visit);
                on_path[next] = false;
                if stop {
                    path.pop();
                    return true;
                }
            }
            path.pop();
        }
        false
    }
    let mut on_path = alloc::vec![false; g.n()];
    on_path[start] = true;
    go(g, m, &mut alloc::vec![start], &mut on_path, visit)
}

/// Some simple augmenting path, by depth-first enumeration of simple
/// alternating paths from each unmatched vertex in ascending order.
pub fn brute_augmenting_path(g: &Graph, m: &Matching) -> Result<Option<Vec<Vertex>>> {
    guard(g)?;
    check_matching_in(g, m)?;
    let mut found = None;
    for start in 0..g.n() {
        if m.is_matched(start) || g.degree(start) == 0 {
            continue;
        }
        let hit = walk_alternating(g, m, start, &mut |p: &[Vertex]| {
            if is_augmenting_path(m, p) {
                found = Some(p.to_vec());
                true
            } else {
                false
            }
        });
        if hit {
            break;
        }
    }
    debug_assert!(found
        .as_deref()
        .is_none_or(|p| is_path(g, p) == Ok(true) && is_distinct(p)));
    Ok(found)
}

/// A blossom as the oracle sees one: `(stem, cycle)` with the cycle closed
/// (`first == last`).
pub type BruteBlossom = (Vec<Vertex>, Vec<Vertex>);

/// Some blossom w.r.t. `⟨g, m⟩`, by exhaustive enumeration.
///
/// A blossom is an odd cycle `C` (first = last, odd edge count) and a stem
/// such that `stem ⌢ C` is an alternating path of `g` starting at an
/// unmatched vertex, `stem ⌢ butlast(C)` has distinct vertices and the stem
/// contributes an even number of edges before the cycle head.
pub fn brute_blossom(g: &Graph, m: &Matching) -> Result<Option<BruteBlossom>> {
    guard(g)?;
    check_matching_in(g, m)?;
    let mut found = None;
    for start in 0..g.n() {
        if m.is_matched(start) || g.degree(start) == 0 {
            continue;
        }
        let hit = walk_alternating(g, m, start, &mut |p: &[Vertex]| {
            let k = p.len() - 1;
            // Close the cycle from the tip back to an earlier vertex p[j]
            // with an even-length stem p[..j] and an odd cycle.
            for j in (0..k).step_by(2) {
                if !(k - j).is_multiple_of(2) || k - j < 2 {
                    continue;
                }
                let mut walk = p.to_vec();
                walk.push(p[j]);
                if is_path(g, &walk) == Ok(true) && is_alternating(m, &walk) {
                    found = Some((p[..j].to_vec(), walk[j..].to_vec()));
                    return true;
                }
            }
            false
        });
        if hit {
            break;
        }
    }
    Ok(found)
}

/// Every labeled simple graph on `n` vertices, in order of the bitmask over
/// the lexicographically ordered vertex pairs.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::Capacity {
            what: "enumeration vertex count",
            limit: MAX_ENUMERATION_VERTICES,
            actual: n,
        });
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).map(move |mask| {
        let chosen = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::new(n, chosen).expect("pairs are distinct and in range")
    }))
}
