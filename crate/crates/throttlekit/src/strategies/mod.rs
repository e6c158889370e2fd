//! Constructive cop strategies: cover-based tree pursuit, spider interval
//! covers, cactus flattening, and the stationary-adversary escape radius.

mod cactus;
mod spider;

pub use cactus::{cactus_flatten, cactus_plan, CactusPlan, FlattenResult};
pub use spider::spider_cover;

use crate::decomposition::CoverPlan;
use crate::graph::{center_and_radius, Graph, GraphError, VertexId, VertexSet, NO_VERTEX};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, thiserror::Error)]
pub enum StrategyError {
    #[error("input graph is not a tree")]
    NotATree,
    #[error("input graph is not a spider")]
    NotASpider,
    #[error("input graph is not a cactus: block {0} is neither an edge nor a cycle")]
    NotACactus(usize),
    #[error("plan does not cover vertex {0}")]
    PlanDoesNotCover(VertexId),
    #[error("plan region {0} does not induce a connected subgraph")]
    RegionDisconnected(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Decomposition(#[from] crate::decomposition::DecompositionError),
}

/// Adversary policy for pursuit simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "policy", rename_all = "snake_case")]
pub enum RobberPolicy {
    /// Move to the closed neighbor maximizing the minimum distance to the
    /// cops; ties go to the lowest vertex id.
    GreedyFar,
    /// Sit still. With no start given, starts at the vertex farthest from
    /// the initial cops.
    Stationary { start: Option<VertexId> },
    /// Exact best response to this cop strategy, by memoized minimax over
    /// (cop positions, robber position). Small instances only.
    ExactBest,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundState {
    pub cops: Vec<VertexId>,
    pub robber: VertexId,
}

/// Full record of one pursuit: per-round positions after both half-rounds.
/// `history[0]` is the initial placement (round 0).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PursuitTrace {
    pub rounds: u32,
    pub captured: bool,
    pub region_of_capture: Option<usize>,
    pub history: Vec<RoundState>,
}

/// Rooted ancestor structure for O(log n) distance and next-step queries.
struct TreeOracle {
    depth: Vec<u32>,
    up: Vec<Vec<VertexId>>,
}

impl TreeOracle {
    fn new(tree: &Graph, root: VertexId) -> Self {
        let n = tree.n();
        let mut parent = vec![NO_VERTEX; n];
        let mut depth = vec![0u32; n];
        let mut order = Vec::with_capacity(n);
        parent[root as usize] = root;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in tree.neighbors(u) {
                if parent[w as usize] == NO_VERTEX {
                    parent[w as usize] = u;
                    depth[w as usize] = depth[u as usize] + 1;
                    order.push(w);
                }
            }
        }
        let levels = (usize::BITS - n.leading_zeros()).max(1) as usize;
        let mut up = Vec::with_capacity(levels);
        up.push(parent);
        for l in 1..levels {
            let prev = &up[l - 1];
            let next: Vec<VertexId> = (0..n).map(|v| prev[prev[v] as usize]).collect();
            up.push(next);
        }
        TreeOracle { depth, up }
    }

    fn ancestor(&self, mut v: VertexId, mut steps: u32) -> VertexId {
        let mut l = 0;
        while steps > 0 {
            if steps & 1 == 1 {
                v = self.up[l][v as usize];
            }
            steps >>= 1;
            l += 1;
        }
        v
    }

    fn lca(&self, mut a: VertexId, mut b: VertexId) -> VertexId {
        if self.depth[a as usize] < self.depth[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        a = self.ancestor(a, self.depth[a as usize] - self.depth[b as usize]);
        if a == b {
            return a;
        }
        for l in (0..self.up.len()).rev() {
            if self.up[l][a as usize] != self.up[l][b as usize] {
                a = self.up[l][a as usize];
                b = self.up[l][b as usize];
            }
        }
        self.up[0][a as usize]
    }

    fn dist(&self, a: VertexId, b: VertexId) -> u32 {
        let l = self.lca(a, b);
        self.depth[a as usize] + self.depth[b as usize] - 2 * self.depth[l as usize]
    }

    /// First vertex on the path from `a` to `b`; `a` itself when they match.
    fn step_toward(&self, a: VertexId, b: VertexId) -> VertexId {
        if a == b {
            return a;
        }
        let l = self.lca(a, b);
        if l == a {
            // descend: the child of a on the path is b lifted to depth(a)+1
            self.ancestor(b, self.depth[b as usize] - self.depth[a as usize] - 1)
        } else {
            self.up[0][a as usize]
        }
    }
}

fn min_dist_to_cops(oracle: &TreeOracle, cops: &[VertexId], v: VertexId) -> u32 {
    cops.iter().map(|&c| oracle.dist(c, v)).min().unwrap_or(u32::MAX)
}

/// Simulates the cover strategy on a tree: one cop per plan region starting
/// at the region's center (lowest id among centers), every cop stepping along
/// the unique tree path toward the robber each round, the robber playing
/// `policy`. Runs until capture or a 4n-round safety cap.
pub fn tree_pursuit(
    t: &Graph,
    plan: &CoverPlan,
    policy: RobberPolicy,
) -> Result<PursuitTrace, StrategyError> {
    if !t.is_tree() {
        return Err(StrategyError::NotATree);
    }
    let n = t.n();
    let mut covered = vec![false; n];
    for (i, region) in plan.regions.iter().enumerate() {
        region.check_in_range(n)?;
        let (sub, _) = t.induced(region);
        if !sub.is_connected() {
            return Err(StrategyError::RegionDisconnected(i));
        }
        for v in region.iter() {
            covered[v as usize] = true;
        }
    }
    if let Some(v) = covered.iter().position(|&c| !c) {
        return Err(StrategyError::PlanDoesNotCover(v as VertexId));
    }

    let mut cops: Vec<VertexId> = Vec::with_capacity(plan.regions.len());
    for region in &plan.regions {
        let (centers, _) = center_and_radius(t, region)?;
        cops.push(centers.iter().next().expect("non-empty region has a center"));
    }
    let oracle = TreeOracle::new(t, 0);

    // robber placement (sees cop starts)
    let start_robber = match policy {
        RobberPolicy::Stationary { start: Some(v) } => {
            if v as usize >= n {
                return Err(StrategyError::Graph(GraphError::VertexOutOfRange(v, n)));
            }
            v
        }
        RobberPolicy::Stationary { start: None } | RobberPolicy::GreedyFar => {
            farthest_vertex(t, &cops)
        }
        RobberPolicy::ExactBest => {
            let mut solver = BestResponse::new(t, &oracle);
            (0..n as VertexId)
                .filter(|v| !cops.contains(v))
                .max_by_key(|&v| (solver.value(&cops, v), std::cmp::Reverse(v)))
                .unwrap_or(0)
        }
    };

    let mut history = vec![RoundState { cops: cops.clone(), robber: start_robber }];
    let mut robber = start_robber;
    if cops.contains(&robber) {
        return Ok(finish(plan, history, 0, true, robber));
    }

    let mut best_response = match policy {
        RobberPolicy::ExactBest => Some(BestResponse::new(t, &oracle)),
        _ => None,
    };
    let cap = 4 * n as u32 + 8;
    for round in 1..=cap {
        for c in cops.iter_mut() {
            *c = oracle.step_toward(*c, robber);
        }
        if cops.contains(&robber) {
            history.push(RoundState { cops: cops.clone(), robber });
            return Ok(finish(plan, history, round, true, robber));
        }
        robber = match policy {
            RobberPolicy::Stationary { .. } => robber,
            RobberPolicy::GreedyFar => {
                let mut best = robber;
                let mut best_d = min_dist_to_cops(&oracle, &cops, robber);
                for &w in t.neighbors(robber) {
                    let d = min_dist_to_cops(&oracle, &cops, w);
                    if d > best_d || (d == best_d && w < best) {
                        best = w;
                        best_d = d;
                    }
                }
                best
            }
            RobberPolicy::ExactBest => {
                let solver = best_response.as_mut().unwrap();
                let mut best = robber;
                let mut best_v = if cops.contains(&robber) { 0 } else { solver.value(&cops, robber) };
                for &w in t.neighbors(robber) {
                    let v = if cops.contains(&w) { 0 } else { solver.value(&cops, w) };
                    if v > best_v || (v == best_v && w < best) {
                        best = w;
                        best_v = v;
                    }
                }
                best
            }
        };
        history.push(RoundState { cops: cops.clone(), robber });
        if cops.contains(&robber) {
            return Ok(finish(plan, history, round, true, robber));
        }
    }
    let last = history.len() as u32 - 1;
    Ok(finish(plan, history, last, false, robber))
}

fn finish(
    plan: &CoverPlan,
    history: Vec<RoundState>,
    rounds: u32,
    captured: bool,
    at: VertexId,
) -> PursuitTrace {
    let region_of_capture = if captured {
        plan.regions.iter().position(|r| r.contains(at))
    } else {
        None
    };
    PursuitTrace { rounds, captured, region_of_capture, history }
}

fn farthest_vertex(g: &Graph, cops: &[VertexId]) -> VertexId {
    let dist = g.multi_source_distances(cops.iter().copied());
    let mut best = 0 as VertexId;
    let mut best_d = 0u32;
    for v in 0..g.n() as VertexId {
        let d = dist[v as usize];
        if d != u32::MAX && d > best_d {
            best = v;
            best_d = d;
        }
    }
    best
}

/// Robber's exact best response against the deterministic all-cops-advance
/// strategy. Values count rounds to capture from the start of a round.
struct BestResponse<'a> {
    tree: &'a Graph,
    oracle: &'a TreeOracle,
    memo: HashMap<(Box<[VertexId]>, VertexId), u32>,
}

impl<'a> BestResponse<'a> {
    fn new(tree: &'a Graph, oracle: &'a TreeOracle) -> Self {
        BestResponse { tree, oracle, memo: HashMap::new() }
    }

    fn value(&mut self, cops: &[VertexId], robber: VertexId) -> u32 {
        let key = (cops.to_vec().into_boxed_slice(), robber);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let moved: Vec<VertexId> =
            cops.iter().map(|&c| self.oracle.step_toward(c, robber)).collect();
        let val = if moved.contains(&robber) {
            1
        } else {
            let mut best = 0u32;
            for w in std::iter::once(robber).chain(self.tree.neighbors(robber).iter().copied()) {
                let v = if moved.contains(&w) { 0 } else { self.value(&moved, w) };
                best = best.max(v);
            }
            1 + best
        };
        self.memo.insert(key, val);
        val
    }
}

/// Survival radius of a stationary adversary placed after the cops: the
/// maximum over vertices of the distance to the nearest cop.
pub fn stationary_escape(g: &Graph, cops: &VertexSet) -> Result<u32, StrategyError> {
    if cops.is_empty() {
        return Err(StrategyError::Graph(GraphError::EmptySet));
    }
    cops.check_in_range(g.n())?;
    g.check_connected()?;
    let dist = g.multi_source_distances(cops.iter());
    Ok(dist.into_iter().max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::plan_cover;
    use crate::graph::{generate_family, FamilySpec};
    use crate::solvers::{capture_time, GameOutcome, SolverBudget};

    fn single_region_plan(g: &Graph) -> CoverPlan {
        CoverPlan {
            regions: vec![VertexSet::full(g.n())],
            anchors: vec![0],
            cop_count: 1,
            max_region: g.n() as u32,
            case_tag: crate::decomposition::CaseTag::SmallB,
            diagnostics: crate::decomposition::Diagnostics { r: 0.0, b: 0, s: 0, c: 0.5 },
        }
    }

    #[test]
    fn pursuit_on_path5_single_region() {
        let g = generate_family(&FamilySpec::Path { n: 5 }).unwrap();
        let plan = single_region_plan(&g);
        let trace = tree_pursuit(&g, &plan, RobberPolicy::GreedyFar).unwrap();
        assert!(trace.captured);
        assert!(trace.rounds <= 2, "rounds = {}", trace.rounds);
        // matches the exact solver value for one cop
        assert_eq!(
            capture_time(&g, 1, &SolverBudget::default()).unwrap(),
            GameOutcome::Captured { rounds: 2 }
        );
    }

    #[test]
    fn stationary_on_cop_start_is_instant() {
        let g = generate_family(&FamilySpec::RandomTree { n: 9, seed: 6 }).unwrap();
        let plan = single_region_plan(&g);
        let (centers, _) = center_and_radius(&g, &VertexSet::full(9)).unwrap();
        let start = centers.iter().next().unwrap();
        let trace =
            tree_pursuit(&g, &plan, RobberPolicy::Stationary { start: Some(start) }).unwrap();
        assert!(trace.captured);
        assert_eq!(trace.rounds, 0);
    }

    #[test]
    fn pursuit_respects_half_round_bound_on_random_trees() {
        let g = generate_family(&FamilySpec::RandomTree { n: 200, seed: 3 }).unwrap();
        let plan = plan_cover(&g, 0.5).unwrap();
        let trace = tree_pursuit(&g, &plan, RobberPolicy::GreedyFar).unwrap();
        assert!(trace.captured);
        assert!(
            trace.rounds <= plan.max_region.div_ceil(2),
            "rounds {} > ceil({}/2)",
            trace.rounds,
            plan.max_region
        );
    }

    #[test]
    fn trace_is_consistent_with_adjacency() {
        let g = generate_family(&FamilySpec::RandomTree { n: 60, seed: 12 }).unwrap();
        let plan = plan_cover(&g, 0.5).unwrap();
        let trace = tree_pursuit(&g, &plan, RobberPolicy::GreedyFar).unwrap();
        for w in trace.history.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            for (ca, cb) in a.cops.iter().zip(&b.cops) {
                assert!(ca == cb || g.has_edge(*ca, *cb));
            }
            assert!(a.robber == b.robber || g.has_edge(a.robber, b.robber));
        }
        // capture means co-location at the end
        let last = trace.history.last().unwrap();
        assert!(trace.captured);
        assert!(last.cops.contains(&last.robber));
        assert!(trace.region_of_capture.is_some());
    }

    #[test]
    fn cop_distance_non_increasing() {
        let g = generate_family(&FamilySpec::RandomTree { n: 80, seed: 9 }).unwrap();
        let plan = plan_cover(&g, 0.5).unwrap();
        let trace = tree_pursuit(&g, &plan, RobberPolicy::GreedyFar).unwrap();
        let oracle = TreeOracle::new(&g, 0);
        // distance from each cop to the robber, sampled after each full round
        for w in trace.history.windows(2) {
            for (i, &c_new) in w[1].cops.iter().enumerate() {
                let before = oracle.dist(w[0].cops[i], w[0].robber);
                let after = oracle.dist(c_new, w[1].robber);
                assert!(after <= before, "cop {} distance grew {} -> {}", i, before, after);
            }
        }
    }

    #[test]
    fn exact_best_never_beats_bound_on_small_trees() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            let n = rng.gen_range(9..=25);
            let g = generate_family(&FamilySpec::RandomTree { n, seed: rng.gen() }).unwrap();
            let plan = plan_cover(&g, 0.5).unwrap();
            let trace = tree_pursuit(&g, &plan, RobberPolicy::ExactBest).unwrap();
            assert!(trace.captured);
            assert!(trace.rounds <= plan.max_region.div_ceil(2));
        }
    }

    #[test]
    fn pursuit_rejects_non_covering_plan() {
        let g = generate_family(&FamilySpec::Path { n: 6 }).unwrap();
        let mut plan = single_region_plan(&g);
        plan.regions = vec![VertexSet::new([0, 1, 2])];
        plan.anchors = vec![0];
        assert!(matches!(
            tree_pursuit(&g, &plan, RobberPolicy::GreedyFar),
            Err(StrategyError::PlanDoesNotCover(_))
        ));
    }

    #[test]
    fn escape_radius_examples() {
        let g = generate_family(&FamilySpec::Path { n: 9 }).unwrap();
        assert_eq!(stationary_escape(&g, &VertexSet::new([0])).unwrap(), 8);
        assert_eq!(stationary_escape(&g, &VertexSet::full(9)).unwrap(), 0);
        let (_, radius) = center_and_radius(&g, &VertexSet::full(9)).unwrap();
        let (centers, _) = center_and_radius(&g, &VertexSet::full(9)).unwrap();
        let c = centers.iter().next().unwrap();
        assert_eq!(stationary_escape(&g, &VertexSet::new([c])).unwrap(), radius);
    }

    #[test]
    fn oracle_distances_match_bfs() {
        let g = generate_family(&FamilySpec::RandomTree { n: 64, seed: 17 }).unwrap();
        let oracle = TreeOracle::new(&g, 0);
        for src in [0u32, 5, 63] {
            let d = g.bfs_distances(src);
            for v in 0..64u32 {
                assert_eq!(oracle.dist(src, v), d[v as usize]);
            }
        }
        // step_toward moves along the unique path
        for (a, b) in [(0u32, 63u32), (5, 40), (63, 0)] {
            let s = oracle.step_toward(a, b);
            assert!(g.has_edge(a, s) || (a == b && s == a));
            assert_eq!(oracle.dist(s, b) + 1, oracle.dist(a, b));
        }
    }
}
