//! Maximum matching with an optimality witness, and the witness checker.
//!
//! An odd-set cover labels every vertex with a non-negative integer so that
//! each edge touches a vertex labeled 1 or joins two vertices with the same
//! label `i >= 2`. With `n_i` vertices labeled `i`, every matching has at
//! most `n_1 + Σ_{i≥2} ⌊n_i / 2⌋` edges, so a matching of exactly that size
//! is maximum.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::contraction::{self, FailedSearch, PhaseOutcome};
use crate::error::{contract, Error, Result};
use crate::graph::{Edge, Graph, Matching, Vertex};
use crate::observe::{Observer, Quiet, SolveOptions};
use crate::search::Parity;

/// Per-vertex labels. Stored signed so that the checker can be handed, and
/// reject, arbitrary input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddSetCover {
    pub labels: Vec<i64>,
}

impl OddSetCover {
    pub fn new(labels: Vec<i64>) -> OddSetCover {
        OddSetCover { labels }
    }

    /// `n_1 + Σ_{i≥2} ⌊n_i / 2⌋` over the labels present. Negative labels
    /// are ignored.
    pub fn bound(&self) -> usize {
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for &l in self.labels.iter().filter(|&&l| l >= 1) {
            *counts.entry(l).or_default() += 1;
        }
        counts
            .iter()
            .map(|(&l, &c)| if l == 1 { c } else { c / 2 })
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedMatching {
    pub matching: Matching,
    pub witness: OddSetCover,
}

/// Why the checker refused a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RejectReason {
    EdgeNotInGraph,
    NotAMatching,
    WrongLabelCount,
    LabelOutOfRange,
    NotOptimal,
    NotACover,
}

impl RejectReason {
    pub fn message(self) -> &'static str {
        match self {
            RejectReason::EdgeNotInGraph => "M contains an edge that is not in G",
            RejectReason::NotAMatching => "M is not a matching",
            RejectReason::WrongLabelCount => "OSC does not label every node exactly once",
            RejectReason::LabelOutOfRange => "negative label or label larger than n - 1",
            RejectReason::NotOptimal => "OSC does not prove optimality",
            RejectReason::NotACover => "OSC is not a cover",
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.message())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(RejectReason),
}

impl Verdict {
    pub fn is_accept(self) -> bool {
        self == Verdict::Accept
    }

    pub fn reason(self) -> Option<RejectReason> {
        match self {
            Verdict::Accept => None,
            Verdict::Reject(r) => Some(r),
        }
    }
}

/// Accepts iff `m` is a matching of `g` and `osc` is an odd-set cover of
/// `g` whose bound equals `|m|`.
///
/// Looks only at its three arguments. Clauses are tried in order and the
/// first failing one is reported: `m ⊆ g`; `m` pairwise disjoint; one
/// label per vertex, each in `[0, max(2, n))`; the bound equals `|m|`;
/// every edge is covered.
pub fn check_max_card_matching(g: &Graph, m: &[(Vertex, Vertex)], osc: &OddSetCover) -> Verdict {
    use RejectReason::*;

    if m.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return Verdict::Reject(EdgeNotInGraph);
    }
    let mut covered = BTreeSet::new();
    for &(u, v) in m {
        if !covered.insert(u) || !covered.insert(v) {
            return Verdict::Reject(NotAMatching);
        }
    }

    let n = g.n().max(2);
    if osc.labels.len() != g.n() {
        return Verdict::Reject(WrongLabelCount);
    }
    let mut count = alloc::vec![0usize; n];
    let mut max_label = 1usize;
    for &l in &osc.labels {
        if l < 0 || l >= n as i64 {
            return Verdict::Reject(LabelOutOfRange);
        }
        let l = l as usize;
        count[l] += 1;
        max_label = max_label.max(l);
    }
    let bound = count[1] + (2..=max_label).map(|i| count[i] / 2).sum::<usize>();
    if bound != m.len() {
        return Verdict::Reject(NotOptimal);
    }

    for e in g.edges() {
        let (a, b) = (osc.labels[e.lo()], osc.labels[e.hi()]);
        if a == 1 || b == 1 || (a == b && a >= 2) {
            continue;
        }
        return Verdict::Reject(NotACover);
    }
    Verdict::Accept
}

/// [`check_max_card_matching`] on a certified result.
pub fn check_certificate(g: &Graph, cert: &CertifiedMatching) -> Verdict {
    let pairs: Vec<(Vertex, Vertex)> = cert.matching.edges().map(Edge::endpoints).collect();
    check_max_card_matching(g, &pairs, &cert.witness)
}

/// Odd-set cover from the failed final search of a phase.
///
/// Working on the innermost quotient's forest:
/// * odd vertices get 1 on their whole preimage,
/// * even pseudo-vertices (shrunken blossoms) each get a fresh label ≥ 2,
/// * even original vertices get 0,
/// * the preimage of all unlabeled vertices shares one fresh label ≥ 2.
///
/// Fresh labels are handed out in ascending order of the smallest original
/// vertex of each class. The result must be tight; a loose cover is an
/// internal error.
pub fn build_odd_set_cover(g: &Graph, m: &Matching, failed: &FailedSearch) -> Result<OddSetCover> {
    let n = g.n();
    let mut labels = alloc::vec![0i64; n];
    let mut fresh_classes: Vec<BTreeSet<Vertex>> = Vec::new();
    let mut out_of_forest = BTreeSet::new();

    for v in failed.live_vertices() {
        let preimage = failed.lineage.originals(v);
        match failed.state.parity(v) {
            Some(Parity::Odd) => {
                for &x in &preimage {
                    labels[x] = 1;
                }
            }
            Some(Parity::Even) if preimage.len() > 1 => fresh_classes.push(preimage),
            Some(Parity::Even) => {}
            None => out_of_forest.extend(preimage),
        }
    }
    if !out_of_forest.is_empty() {
        fresh_classes.push(out_of_forest);
    }
    fresh_classes.sort_by_key(|class| class.first().copied());
    let label_limit = n.max(2) as i64;
    for (i, class) in fresh_classes.iter().enumerate() {
        let label = 2 + i as i64;
        if label >= label_limit {
            // Only a lone matched edge on two vertices gets here: there is
            // no label >= 2 below n. One endpoint labeled 1 covers it.
            let mut vs = class.iter();
            let (Some(&a), Some(&b), None) = (vs.next(), vs.next(), vs.next()) else {
                return Err(contract("fresh label exceeds the label range"));
            };
            labels[a] = 1;
            labels[b] = 0;
            continue;
        }
        for &x in class {
            labels[x] = label;
        }
    }

    let cover = OddSetCover::new(labels);
    let bound = cover.bound();
    if bound != m.len() {
        return Err(Error::LooseCover { matching: m.len(), bound });
    }
    Ok(cover)
}

/// Maximum matching from the empty matching by repeated augmentation, with
/// a checked odd-set cover.
pub fn find_max_matching(g: &Graph) -> Result<CertifiedMatching> {
    find_max_matching_with(g, SolveOptions::default(), &mut Quiet)
}

pub fn find_max_matching_with(
    g: &Graph,
    opts: SolveOptions,
    obs: &mut dyn Observer,
) -> Result<CertifiedMatching> {
    let mut m = Matching::new();
    loop {
        match contraction::run(g, &m, opts, obs)? {
            PhaseOutcome::Augmenting(path) => m = m.augment(&path)?,
            PhaseOutcome::Exhausted(failed) => {
                let witness = build_odd_set_cover(g, &m, &failed)?;
                let cert = CertifiedMatching { matching: m, witness };
                return match check_certificate(g, &cert) {
                    Verdict::Accept => Ok(cert),
                    Verdict::Reject(r) => Err(contract(alloc::format!(
                        "self-check rejected the certificate: {r}"
                    ))),
                };
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::Parity;

    fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn matching(pairs: &[(Vertex, Vertex)]) -> Matching {
        Matching::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn triangle() -> Graph {
        graph(3, &[(0, 1), (1, 2), (0, 2)])
    }

    fn osc(labels: &[i64]) -> OddSetCover {
        OddSetCover::new(labels.to_vec())
    }

    fn failed(g: &Graph, m: &Matching) -> FailedSearch {
        match contraction::run(g, m, SolveOptions::checked(), &mut Quiet).unwrap() {
            PhaseOutcome::Exhausted(f) => f,
            PhaseOutcome::Augmenting(p) => panic!("unexpected augmenting path {p:?}"),
        }
    }

    #[test]
    fn checker_accepts_valid_certificates() {
        assert_eq!(check_max_card_matching(&triangle(), &[(0, 1)], &osc(&[2, 2, 2])), Verdict::Accept);
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            check_max_card_matching(&p4, &[(0, 1), (2, 3)], &osc(&[0, 1, 1, 0])),
            Verdict::Accept
        );
    }

    #[test]
    fn checker_rejections() {
        use RejectReason::*;
        let t = triangle();
        let all2 = osc(&[2, 2, 2]);
        assert_eq!(check_max_card_matching(&t, &[(0, 3)], &all2), Verdict::Reject(EdgeNotInGraph));
        assert_eq!(check_max_card_matching(&t, &[(1, 1)], &all2), Verdict::Reject(EdgeNotInGraph));
        assert_eq!(
            check_max_card_matching(&t, &[(0, 1)], &osc(&[0, 0, 0])),
            Verdict::Reject(NotOptimal)
        );
        assert_eq!(
            check_max_card_matching(&t, &[], &osc(&[0, 0, 0])),
            Verdict::Reject(NotACover)
        );
        assert_eq!(
            check_max_card_matching(&t, &[(0, 1), (1, 2)], &all2),
            Verdict::Reject(NotAMatching)
        );
        assert_eq!(
            check_max_card_matching(&t, &[(0, 1), (0, 1)], &all2),
            Verdict::Reject(NotAMatching)
        );
        assert_eq!(
            check_max_card_matching(&t, &[(0, 1)], &osc(&[2, 2, 3])),
            Verdict::Reject(LabelOutOfRange)
        );
        assert_eq!(
            check_max_card_matching(&t, &[(0, 1)], &osc(&[2, -1, 2])),
            Verdict::Reject(LabelOutOfRange)
        );
        assert_eq!(
            check_max_card_matching(&t, &[(0, 1)], &osc(&[2, 2])),
            Verdict::Reject(WrongLabelCount)
        );
        assert_eq!(NotACover.message(), "OSC is not a cover");
        assert_eq!(NotOptimal.message(), "OSC does not prove optimality");
    }

    #[test]
    fn two_vertex_graphs_use_labels_below_two() {
        let k2 = graph(2, &[(0, 1)]);
        assert_eq!(check_max_card_matching(&k2, &[(0, 1)], &osc(&[1, 0])), Verdict::Accept);
        let cert = find_max_matching(&k2).unwrap();
        assert_eq!(cert.witness, osc(&[1, 0]));
    }

    #[test]
    fn cover_for_c5_is_one_blossom() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let m = matching(&[(1, 2), (3, 4)]);
        let cover = build_odd_set_cover(&g, &m, &failed(&g, &m)).unwrap();
        assert_eq!(cover, osc(&[2, 2, 2, 2, 2]));
    }

    #[test]
    fn cover_for_star() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let m = matching(&[(0, 1)]);
        let f = failed(&g, &m);
        assert_eq!(f.state.parity(0), Some(Parity::Odd));
        let cover = build_odd_set_cover(&g, &m, &f).unwrap();
        assert_eq!(cover, osc(&[1, 0, 0, 0]));
    }

    #[test]
    fn cover_for_perfectly_matched_p4() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let m = matching(&[(0, 1), (2, 3)]);
        let cover = build_odd_set_cover(&g, &m, &failed(&g, &m)).unwrap();
        assert_eq!(cover, osc(&[2, 2, 2, 2]));
        assert_eq!(check_max_card_matching(&g, &[(0, 1), (2, 3)], &cover), Verdict::Accept);
    }

    #[test]
    fn loose_cover_is_an_error() {
        // Not maximum: the failed search is for a different matching.
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let f = failed(&g, &matching(&[(0, 1), (2, 3)]));
        assert!(matches!(
            build_odd_set_cover(&g, &matching(&[(1, 2)]), &f),
            Err(Error::LooseCover { .. })
        ));
    }

    #[test]
    fn find_max_matching_examples() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(find_max_matching(&p4).unwrap().matching.len(), 2);

        let cert = find_max_matching(&Graph::empty(4)).unwrap();
        assert!(cert.matching.is_empty());
        assert_eq!(cert.witness, osc(&[0, 0, 0, 0]));
    }

    #[test]
    fn petersen_has_a_perfect_matching() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        let cert = find_max_matching(&g).unwrap();
        assert_eq!(cert.matching.len(), 5);
        assert!(check_certificate(&g, &cert).is_accept());
    }
}
