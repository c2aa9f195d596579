//! Blossom contraction and lifting of quotient augmenting paths.
//!
//! Contracting the odd cycle `C` maps every vertex of `C` to a fresh
//! pseudo-vertex `u` and keeps everything else. An augmenting path exists
//! in `⟨G, M⟩` iff one exists in the quotient, so the search recurses on
//! the quotient and [`refine`] routes any path found there back through
//! the cycle in the direction that keeps it alternating.
//!
//! Quotients are materialized per level. The pseudo-vertex of a level is
//! the vertex count of that level's graph, so ids never collide; the cycle
//! vertices stay behind as isolated ids.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::blossom::{self, SearchOutcome};
use crate::error::{contract, Result};
use crate::graph::{is_augmenting_path, is_distinct, is_path, Edge, Graph, Matching, Vertex};
use crate::observe::{ContractionEvent, Observer, Quiet, SolveOptions};
use crate::search::SearchState;

/// Original vertices behind every pseudo-vertex created so far.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lineage {
    originals: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Lineage {
    /// The original vertices `v` stands for (`{v}` for an original vertex).
    pub fn originals(&self, v: Vertex) -> BTreeSet<Vertex> {
        match self.originals.get(&v) {
            Some(set) => set.clone(),
            None => BTreeSet::from([v]),
        }
    }

    pub fn is_pseudo(&self, v: Vertex) -> bool {
        self.originals.contains_key(&v)
    }

    pub fn record(&mut self, cm: &ContractionMap) {
        self.originals.insert(cm.pseudo, cm.preimage.clone());
    }
}

/// One contraction: the kept vertices map to themselves, the cycle to
/// `pseudo`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMap {
    pseudo: Vertex,
    project: Vec<Vertex>,
    cycle: Vec<Vertex>,
    cycle_set: BTreeSet<Vertex>,
    preimage: BTreeSet<Vertex>,
}

impl ContractionMap {
    /// Contraction of `cycle` (closed, `first == last`) in `g`.
    pub fn new(g: &Graph, cycle: &[Vertex]) -> Result<ContractionMap> {
        ContractionMap::within(g, cycle, &Lineage::default())
    }

    /// As [`ContractionMap::new`], resolving the preimage through the
    /// pseudo-vertices recorded in `lineage`.
    pub fn within(g: &Graph, cycle: &[Vertex], lineage: &Lineage) -> Result<ContractionMap> {
        if cycle.len() < 4 || cycle.first() != cycle.last() {
            return Err(contract("contraction needs a closed cycle of at least three edges"));
        }
        for &v in cycle {
            g.check_vertex(v)?;
        }
        let pseudo = g.n();
        let cycle_set: BTreeSet<Vertex> = cycle.iter().copied().collect();
        let project = (0..=g.n())
            .map(|v| if cycle_set.contains(&v) { pseudo } else { v })
            .collect();
        let preimage = cycle_set.iter().flat_map(|&v| lineage.originals(v)).collect();
        Ok(ContractionMap {
            pseudo,
            project,
            cycle: cycle.to_vec(),
            cycle_set,
            preimage,
        })
    }

    pub fn pseudo(&self) -> Vertex {
        self.pseudo
    }

    pub fn project(&self, v: Vertex) -> Vertex {
        self.project[v]
    }

    pub fn is_kept(&self, v: Vertex) -> bool {
        v != self.pseudo && !self.cycle_set.contains(&v)
    }

    pub fn on_cycle(&self, v: Vertex) -> bool {
        self.cycle_set.contains(&v)
    }

    pub fn cycle(&self) -> &[Vertex] {
        &self.cycle
    }

    pub fn cycle_vertices(&self) -> &BTreeSet<Vertex> {
        &self.cycle_set
    }

    /// Original vertices collapsed into the pseudo-vertex.
    pub fn preimage(&self) -> &BTreeSet<Vertex> {
        &self.preimage
    }

    fn project_edge(&self, e: Edge) -> Option<Edge> {
        Edge::new(self.project(e.lo()), self.project(e.hi())).ok()
    }
}

/// The projected edge set minus the collapsed self-loops, on `n + 1` ids.
pub fn quotient_graph(g: &Graph, cm: &ContractionMap) -> Graph {
    let mut edges: Vec<Edge> = g.edges().iter().filter_map(|&e| cm.project_edge(e)).collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::from_sorted(g.n() + 1, edges)
}

/// The projected matching. At most one matching edge may leave the cycle.
pub fn quotient_matching(m: &Matching, cm: &ContractionMap) -> Result<Matching> {
    Matching::from_edges(m.edges().filter_map(|e| cm.project_edge(e)))
        .map_err(|_| contract("more than one matching edge leaves the contracted cycle"))
}

/// The least neighbour of `v` in `vs`.
pub fn choose_con_vert(vs: &BTreeSet<Vertex>, g: &Graph, v: Vertex) -> Result<Vertex> {
    g.check_vertex(v)?;
    g.neighbors(v)
        .iter()
        .copied()
        .find(|w| vs.contains(w))
        .ok_or_else(|| contract("choose_con_vert: no neighbour in the vertex set"))
}

/// Prefix of `cycle` up to the first occurrence of `t`.
fn prefix_to(cycle: &[Vertex], t: Vertex) -> Vec<Vertex> {
    let end = cycle.iter().position(|&x| x == t).expect("t is on the cycle");
    cycle[..=end].to_vec()
}

/// Walk around the cycle from its base to the cycle neighbour of `v`,
/// arriving on a matching edge: the forward prefix if its last edge is
/// matched, the prefix of the reversed cycle otherwise.
pub fn stem2vert_path(cycle: &[Vertex], g: &Graph, m: &Matching, v: Vertex) -> Result<Vec<Vertex>> {
    let vs: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let t = choose_con_vert(&vs, g, v)?;
    let forward = prefix_to(cycle, t);
    let arrives_matched = match forward.as_slice() {
        [.., a, b] => m.has_pair(*a, *b),
        _ => false,
    };
    if arrives_matched {
        Ok(forward)
    } else {
        let reversed: Vec<Vertex> = cycle.iter().rev().copied().collect();
        Ok(prefix_to(&reversed, t))
    }
}

/// Lifts an augmenting path of the quotient to one of `g`.
///
/// Paths avoiding the pseudo-vertex are returned as is. Otherwise the path
/// is split around the pseudo-vertex into `p1` and `p2` and the cycle is
/// spliced in on the side that keeps the alternation.
pub fn refine(cm: &ContractionMap, g: &Graph, m: &Matching, p: &[Vertex]) -> Result<Vec<Vertex>> {
    let Some(at) = p.iter().position(|&v| v == cm.pseudo) else {
        return Ok(p.to_vec());
    };
    let (p1, p2) = (&p[..at], &p[at + 1..]);
    let cycle = cm.cycle();
    let rev = |s: &[Vertex]| s.iter().rev().copied().collect::<Vec<_>>();
    let mut out;
    match (p1.last(), p2.first()) {
        (None, None) => return Err(contract("refine: path is the lone pseudo-vertex")),
        (None, Some(&h2)) => {
            out = stem2vert_path(cycle, g, m, h2)?;
            out.extend_from_slice(p2);
        }
        (Some(&l1), None) => {
            out = stem2vert_path(cycle, g, m, l1)?;
            out.extend(rev(p1));
        }
        (Some(&l1), Some(&h2)) => {
            let h2_matched_into_cycle = m.mate(h2).is_some_and(|w| cm.on_cycle(w));
            if !h2_matched_into_cycle {
                out = p1.to_vec();
                out.extend(stem2vert_path(cycle, g, m, h2)?);
                out.extend_from_slice(p2);
            } else {
                out = rev(p2);
                out.extend(stem2vert_path(cycle, g, m, l1)?);
                out.extend(rev(p1));
            }
        }
    }
    Ok(out)
}

/// State of the last, failed search of a phase, at the innermost level.
#[derive(Clone, Debug)]
pub struct FailedSearch {
    /// The innermost quotient graph and matching.
    pub graph: Graph,
    pub matching: Matching,
    pub state: SearchState,
    pub lineage: Lineage,
    /// `live[v]` is false for ids that were contracted away.
    pub live: Vec<bool>,
    pub levels: usize,
}

impl FailedSearch {
    pub fn live_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.live.len()).filter(|&v| self.live[v])
    }
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)] // returned once per phase
pub enum PhaseOutcome {
    Augmenting(Vec<Vertex>),
    Exhausted(FailedSearch),
}

/// An augmenting path w.r.t. `⟨g, m⟩`, or `None` when there is none.
pub fn find_aug_path(g: &Graph, m: &Matching) -> Result<Option<Vec<Vertex>>> {
    match run(g, m, SolveOptions::default(), &mut Quiet)? {
        PhaseOutcome::Augmenting(p) => Ok(Some(p)),
        PhaseOutcome::Exhausted(_) => Ok(None),
    }
}

/// One augmentation phase: search, contract blossoms until an augmenting
/// path or nothing is found, then lift the path level by level.
pub fn run(g: &Graph, m: &Matching, opts: SolveOptions, obs: &mut dyn Observer) -> Result<PhaseOutcome> {
    let mut levels: Vec<(Graph, Matching, ContractionMap)> = Vec::new();
    let mut graph = g.clone();
    let mut matching = m.clone();
    let mut lineage = Lineage::default();
    let mut live = alloc::vec![true; g.n()];

    loop {
        let level = levels.len();
        let (outcome, state) = blossom::run(&graph, &matching, opts, level, obs)?;
        match outcome {
            SearchOutcome::AugmentingPath(mut path) => {
                for (g_i, m_i, cm) in levels.iter().rev() {
                    path = refine(cm, g_i, m_i, &path)?;
                    if opts.check_invariants
                        && !(is_augmenting_path(m_i, &path) && is_path(g_i, &path)? && is_distinct(&path))
                    {
                        return Err(contract("refined path is not a simple augmenting path"));
                    }
                }
                return Ok(PhaseOutcome::Augmenting(path));
            }
            SearchOutcome::BlossomFound(b) => {
                let cm = ContractionMap::within(&graph, &b.cycle, &lineage)?;
                let qg = quotient_graph(&graph, &cm);
                let qm = quotient_matching(&matching, &cm)?;
                obs.on_contraction(&ContractionEvent {
                    level,
                    graph: &graph,
                    matching: &matching,
                    map: &cm,
                    quotient_graph: &qg,
                    quotient_matching: &qm,
                });
                lineage.record(&cm);
                for &v in cm.cycle_vertices() {
                    live[v] = false;
                }
                live.push(true);
                let prev_g = core::mem::replace(&mut graph, qg);
                let prev_m = core::mem::replace(&mut matching, qm);
                levels.push((prev_g, prev_m, cm));
                debug_assert!(2 * levels.len() <= g.n());
            }
            SearchOutcome::NothingFound => {
                let state = state.ok_or_else(|| contract("search reported nothing without a forest"))?;
                return Ok(PhaseOutcome::Exhausted(FailedSearch {
                    graph,
                    matching,
                    state,
                    lineage,
                    live,
                    levels: levels.len(),
                }));
            }
        }
    }
}
