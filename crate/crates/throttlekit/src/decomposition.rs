//! Tree decomposition machinery: limb extraction, balanced bipartitions,
//! threshold partitions, and the two-case cover planner built on them.
//!
//! A *limb* of a rooted tree is a vertex `v` together with some of the
//! complete branches hanging below `v`. Splitting off limbs whose size falls
//! in a controlled window `(x, 2x-1]` is the primitive every cover
//! construction here reduces to.

use crate::graph::{spanning_tree, Graph, GraphError, RootedTree, VertexId, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum DecompositionError {
    #[error("threshold x = {x} out of range for tree of order {n} (need 1.5 <= x < n)")]
    BadThreshold { x: f64, n: usize },
    #[error("tree too small: need at least {need} vertices, have {have}")]
    TooSmall { need: usize, have: usize },
    #[error("cover constant c must be positive, got {0}")]
    BadConstant(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Limb `s` with its top vertex `v`: removing `s - {v}` leaves a connected
/// tree that still contains the root.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LimbSplit {
    pub s: VertexSet,
    pub v: VertexId,
}

/// Two connected pieces covering the tree and overlapping in at most one
/// vertex. `s0` is the split-off limb, `s1` the remainder plus the shared
/// vertex.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Bipartition {
    pub s0: VertexSet,
    pub s1: VertexSet,
}

/// Disjoint parts `Y_0..Y_s` covering the tree. Every non-tail part has size
/// in `(x-1, 2x-1]`, the tail has size at most `x`, and each part becomes a
/// connected subtree once its anchor is added back.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TreePartition {
    pub parts: Vec<VertexSet>,
    pub anchors: Vec<VertexId>,
    pub x: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    BigB,
    SmallB,
    Spider,
    Cactus,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Diagnostics {
    pub r: f64,
    pub b: u32,
    pub s: u32,
    pub c: f64,
}

/// A family of connected regions covering the graph, with one designated
/// anchor vertex per region and the cop budget the construction prescribes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverPlan {
    pub regions: Vec<VertexSet>,
    pub anchors: Vec<VertexId>,
    pub cop_count: u32,
    pub max_region: u32,
    pub case_tag: CaseTag,
    pub diagnostics: Diagnostics,
}

impl CoverPlan {
    pub fn max_region_of(regions: &[VertexSet]) -> u32 {
        regions.iter().map(|r| r.len() as u32).max().unwrap_or(0)
    }

    /// Checks the cover invariants against a source graph: every region
    /// induces a connected subgraph and the union is the whole vertex set.
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let mut covered = vec![false; g.n()];
        for region in &self.regions {
            region.check_in_range(g.n())?;
            let (sub, _) = g.induced(region);
            sub.check_connected().map_err(|_| GraphError::InducedDisconnected)?;
            for v in region.iter() {
                covered[v as usize] = true;
            }
        }
        if let Some(miss) = covered.iter().position(|&c| !c) {
            return Err(GraphError::Disconnected { from: 0, unreachable: miss as VertexId });
        }
        Ok(())
    }
}

/// Mutable view of a rooted tree under vertex deletion: alive flags plus
/// live subtree sizes, enough to run the limb recursion repeatedly.
struct TreeSlice<'a> {
    tree: &'a RootedTree,
    alive: Vec<bool>,
    size: Vec<u32>,
    n_alive: u32,
}

impl<'a> TreeSlice<'a> {
    fn new(tree: &'a RootedTree) -> Self {
        TreeSlice {
            alive: vec![true; tree.n()],
            size: tree.subtree_sizes(),
            n_alive: tree.n() as u32,
            tree,
        }
    }

    fn live_children(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.tree.children(v).iter().copied().filter(|&c| self.alive[c as usize])
    }

    /// Collects the live subtree below (and including) `u`.
    fn collect_subtree(&self, u: VertexId) -> Vec<VertexId> {
        let mut out = vec![u];
        let mut head = 0;
        while head < out.len() {
            let w = out[head];
            head += 1;
            out.extend(self.live_children(w));
        }
        out
    }

    /// Removes a set of vertices that all lie strictly below `top`, updating
    /// live sizes along the path from `top` to the root.
    fn remove_below(&mut self, top: VertexId, removed: &[VertexId]) {
        for &v in removed {
            debug_assert!(v != top);
            self.alive[v as usize] = false;
        }
        let k = removed.len() as u32;
        self.n_alive -= k;
        let mut cur = top;
        loop {
            self.size[cur as usize] -= k;
            match self.tree.parent(cur) {
                Some(p) => cur = p,
                None => break,
            }
        }
    }

    /// One limb extraction following the proof recursion: descend into a
    /// maximum branch while it exceeds `2x-1`, take it whole when its size
    /// lands in `(x, 2x-1]`, and otherwise accumulate branches at the current
    /// vertex largest-first until the running total passes `x`.
    ///
    /// Requires `1.5 <= x < n_alive`. Returns the limb vertices and its top.
    fn limb(&self, x: f64) -> (Vec<VertexId>, VertexId) {
        let two_x_minus_1 = 2.0 * x - 1.0;
        let mut u = self.tree.root();
        loop {
            let m = self.size[u as usize] as f64;
            if x < m && m <= two_x_minus_1 {
                return (self.collect_subtree(u), u);
            }
            debug_assert!(m > two_x_minus_1);
            // maximum live branch at u; ties broken by lowest child id
            let best = self
                .live_children(u)
                .max_by(|&a, &b| {
                    self.size[a as usize]
                        .cmp(&self.size[b as usize])
                        .then(b.cmp(&a))
                })
                .expect("internal vertex of an oversized subtree has children");
            let branch = self.size[best as usize] as f64 + 1.0;
            if branch > two_x_minus_1 {
                u = best;
                continue;
            }
            if branch > x {
                let mut s = self.collect_subtree(best);
                s.push(u);
                return (s, u);
            }
            // accumulate branches largest-first (ties by lowest id)
            let mut kids: Vec<VertexId> = self.live_children(u).collect();
            kids.sort_by(|&a, &b| {
                self.size[b as usize]
                    .cmp(&self.size[a as usize])
                    .then(a.cmp(&b))
            });
            let mut total = 1.0;
            let mut s = vec![u];
            for c in kids {
                total += self.size[c as usize] as f64;
                s.extend(self.collect_subtree(c));
                if total > x {
                    return (s, u);
                }
            }
            unreachable!("subtree larger than x must exceed x while accumulating");
        }
    }
}

/// Splits off one limb `S` with top `v` such that `x < |S| <= 2x-1`, the
/// induced subgraph on `S` is a limb, and the rest plus `v` stays connected.
pub fn limb_split(t: &RootedTree, x: f64) -> Result<LimbSplit, DecompositionError> {
    let n = t.n();
    if !(1.5..).contains(&x) || x >= n as f64 {
        return Err(DecompositionError::BadThreshold { x, n });
    }
    let slice = TreeSlice::new(t);
    let (s, v) = slice.limb(x);
    Ok(LimbSplit { s: VertexSet::new(s), v })
}

/// Splits a tree into two connected pieces of balanced order sharing at most
/// one vertex: `ceil(n/3) <= |s0| <= floor(2n/3) + 1`.
pub fn balanced_bipartition(t: &RootedTree) -> Result<Bipartition, DecompositionError> {
    let n = t.n();
    if n < 2 {
        return Err(DecompositionError::TooSmall { need: 2, have: n });
    }
    if n == 2 {
        let child = t.children(t.root())[0];
        return Ok(Bipartition {
            s0: VertexSet::new([child]),
            s1: VertexSet::new([t.root(), child]),
        });
    }
    let x = (n as f64 / 3.0).max(1.5);
    let LimbSplit { s, v } = limb_split(t, x)?;
    let s1 = VertexSet::new(
        (0..n as VertexId)
            .filter(|&w| w == v || !s.contains(w)),
    );
    Ok(Bipartition { s0: s, s1 })
}

/// Partitions the tree into disjoint parts by repeated limb extraction:
/// each round removes `S_i - {v_i}` and recurses on the residual until it
/// has at most `x` vertices; the residual becomes the tail part.
///
/// `x >= n` is allowed and yields the single-part partition.
pub fn tree_partition(t: &RootedTree, x: f64) -> Result<TreePartition, DecompositionError> {
    let n = t.n();
    if x < 1.5 && (n as f64) > x {
        return Err(DecompositionError::BadThreshold { x, n });
    }
    let mut slice = TreeSlice::new(t);
    let mut parts = Vec::new();
    let mut anchors = Vec::new();
    while slice.n_alive as f64 > x {
        let (s, v) = slice.limb(x);
        let y: Vec<VertexId> = s.iter().copied().filter(|&w| w != v).collect();
        slice.remove_below(v, &y);
        parts.push(VertexSet::new(y));
        anchors.push(v);
    }
    let tail: Vec<VertexId> = (0..n as VertexId).filter(|&v| slice.alive[v as usize]).collect();
    parts.push(VertexSet::new(tail));
    anchors.push(t.root());
    Ok(TreePartition { parts, anchors, x })
}

/// Plans a connected-region cover of a connected graph following the
/// two-case square-root construction with time constant `c`.
///
/// With `r = sqrt(4/(7c))` and `x = r*sqrt(n)`, the spanning tree is
/// partitioned at threshold `x`; `b` counts oversized parts. When `b` is
/// large the parts are used as-is with `1+s` cops; otherwise every oversized
/// part is bipartitioned and the plan uses `1+s+b` cops. Together with a
/// per-region capture bound of `c * size + O(1)` this certifies a
/// `sqrt(7c) * sqrt(n) + O(1)` throttling envelope.
pub fn plan_cover(g: &Graph, c: f64) -> Result<CoverPlan, DecompositionError> {
    if !(c > 0.0) {
        return Err(DecompositionError::BadConstant(c));
    }
    let n = g.n();
    if n == 0 {
        return Err(DecompositionError::TooSmall { need: 1, have: 0 });
    }
    let tree = spanning_tree(g, 0)?;
    let nf = n as f64;
    let r = (4.0 / (7.0 * c)).sqrt();
    let x = r * nf.sqrt();
    if n < 9 || x < 1.5 {
        // Below the asymptotic regime: one region, one cop.
        return Ok(CoverPlan {
            regions: vec![VertexSet::full(n)],
            anchors: vec![tree.root()],
            cop_count: 1,
            max_region: n as u32,
            case_tag: CaseTag::SmallB,
            diagnostics: Diagnostics { r, b: 0, s: 0, c },
        });
    }
    let partition = tree_partition(&tree, x)?;
    let s = partition.parts.len() - 1;
    let threshold = 1.5 * (x - 1.0);
    let oversized: Vec<usize> = (0..s)
        .filter(|&i| partition.parts[i].len() as f64 > threshold)
        .collect();
    let b = oversized.len();

    let mut regions = Vec::new();
    let mut anchors = Vec::new();
    let case_tag;
    let cop_count;
    if b as f64 > (r * c / 2.0) * nf.sqrt() {
        case_tag = CaseTag::BigB;
        cop_count = 1 + s;
        for (i, part) in partition.parts.iter().enumerate() {
            let mut region = part.clone();
            region.insert(partition.anchors[i]);
            regions.push(region);
            anchors.push(partition.anchors[i]);
        }
    } else {
        case_tag = CaseTag::SmallB;
        cop_count = 1 + s + b;
        for (i, part) in partition.parts.iter().enumerate() {
            let anchor = partition.anchors[i];
            let mut region = part.clone();
            region.insert(anchor);
            if i < s && part.len() as f64 > threshold {
                let (sub, back) = tree.graph().induced(&region);
                let local_root = back
                    .iter()
                    .position(|&w| w == anchor)
                    .expect("anchor belongs to its region") as VertexId;
                let rooted = RootedTree::from_tree(sub, local_root)
                    .expect("regions induce subtrees");
                let split = balanced_bipartition(&rooted)?;
                let lift = |set: &VertexSet| -> VertexSet {
                    set.iter().map(|w| back[w as usize]).collect()
                };
                let half0 = lift(&split.s0);
                let half1 = lift(&split.s1);
                // the shared cut vertex anchors the limb half
                let cut = half0
                    .iter()
                    .find(|&w| half1.contains(w))
                    .unwrap_or_else(|| half0.iter().next().unwrap());
                regions.push(half0.clone());
                anchors.push(cut);
                regions.push(half1);
                anchors.push(anchor);
            } else {
                regions.push(region);
                anchors.push(anchor);
            }
        }
    }
    let max_region = CoverPlan::max_region_of(&regions);
    debug_assert_eq!(regions.len(), cop_count);
    Ok(CoverPlan {
        regions,
        anchors,
        cop_count: cop_count as u32,
        max_region,
        case_tag,
        diagnostics: Diagnostics { r, b: b as u32, s: s as u32, c },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, FamilySpec};

    fn rooted(spec: &FamilySpec, root: VertexId) -> RootedTree {
        RootedTree::from_tree(generate_family(spec).unwrap(), root).unwrap()
    }

    /// Limb oracle: checks all three output conditions directly.
    fn assert_limb(t: &RootedTree, x: f64, split: &LimbSplit) {
        let n = t.n();
        let size = split.s.len() as f64;
        assert!(x < size && size <= 2.0 * x - 1.0, "|S| = {} not in ({}, {}]", size, x, 2.0 * x - 1.0);
        assert!(split.s.contains(split.v));
        // limb shape: every child subtree of v is all-in or all-out, and S
        // contains nothing outside v's subtree
        let mut stack = vec![split.v];
        let mut below = vec![false; n];
        while let Some(u) = stack.pop() {
            below[u as usize] = true;
            stack.extend(t.children(u).iter().copied());
        }
        for w in split.s.iter() {
            assert!(below[w as usize], "limb vertex {} not below top {}", w, split.v);
        }
        for &c in t.children(split.v) {
            let sub: Vec<VertexId> = {
                let mut out = vec![c];
                let mut head = 0;
                while head < out.len() {
                    let u = out[head];
                    head += 1;
                    out.extend(t.children(u).iter().copied());
                }
                out
            };
            let inside = sub.iter().filter(|&&w| split.s.contains(w)).count();
            assert!(
                inside == 0 || inside == sub.len(),
                "branch at {} split by limb",
                c
            );
        }
        // S induces a connected subgraph
        let (sub, _) = t.graph().induced(&split.s);
        assert!(sub.is_connected());
        // remainder plus v is connected and contains the root
        let rest: VertexSet = (0..n as VertexId)
            .filter(|&w| w == split.v || !split.s.contains(w))
            .collect();
        assert!(rest.contains(t.root()));
        let (rest_sub, _) = t.graph().induced(&rest);
        assert!(rest_sub.is_connected());
    }

    #[test]
    fn limb_on_path4() {
        let t = rooted(&FamilySpec::Path { n: 4 }, 0);
        let split = limb_split(&t, 1.5).unwrap();
        assert_eq!(split.s.as_slice(), &[2, 3]);
        assert_eq!(split.v, 2);
        assert_limb(&t, 1.5, &split);
        // oracle: exhaustive over every (vertex, branch subset) limb candidate
        // on P4 rooted at 0, the only size-2 limbs are {2,3} and {3}+...;
        // sizes in (1.5, 2] force exactly {2,3} or {1,2}? {1,2} is not a limb
        // remainder-connected pair: remainder (0,3)+{1} disconnected. So the
        // answer is unique.
        let candidates: Vec<(Vec<VertexId>, VertexId)> =
            vec![(vec![2, 3], 2), (vec![1, 2], 1), (vec![0, 1], 0)];
        let valid: Vec<_> = candidates
            .into_iter()
            .filter(|(s, v)| {
                let set = VertexSet::new(s.clone());
                let (sub, _) = t.graph().induced(&set);
                if !sub.is_connected() {
                    return false;
                }
                let rest: VertexSet = (0..4u32).filter(|&w| w == *v || !set.contains(w)).collect();
                let (rs, _) = t.graph().induced(&rest);
                // limb must be below v
                rs.is_connected() && s.iter().all(|&w| w >= *v)
            })
            .collect();
        assert!(valid.iter().any(|(s, v)| s == &vec![2, 3] && *v == 2));
    }

    #[test]
    fn limb_on_star_accumulates() {
        let t = rooted(&FamilySpec::Star { n: 5 }, 0);
        let split = limb_split(&t, 2.0).unwrap();
        assert_eq!(split.s.len(), 3);
        assert_eq!(split.v, 0);
        assert_limb(&t, 2.0, &split);
    }

    #[test]
    fn limb_base_case_whole_tree() {
        let t = rooted(&FamilySpec::RandomTree { n: 7, seed: 3 }, 0);
        // x with x < 7 <= 2x-1, e.g. x = 5
        let split = limb_split(&t, 5.0).unwrap();
        assert_eq!(split.s.len(), 7);
        assert_eq!(split.v, t.root());
    }

    #[test]
    fn limb_rejects_bad_threshold() {
        let t = rooted(&FamilySpec::Path { n: 5 }, 0);
        assert!(limb_split(&t, 1.0).is_err());
        assert!(limb_split(&t, 5.0).is_err());
    }

    #[test]
    fn limb_property_sweep() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..300 {
            let n = rng.gen_range(2..=120);
            let tree = generate_family(&FamilySpec::RandomTree { n, seed: rng.gen() }).unwrap();
            let root = rng.gen_range(0..n) as VertexId;
            let t = RootedTree::from_tree(tree, root).unwrap();
            let x = rng.gen_range(1.5..(n as f64 - 0.5).max(1.5001));
            if x >= n as f64 {
                continue;
            }
            let split = limb_split(&t, x).unwrap();
            assert_limb(&t, x, &split);
        }
    }

    fn assert_bipartition(t: &RootedTree, b: &Bipartition) {
        let n = t.n();
        assert_eq!(b.s0.union(&b.s1).len(), n);
        assert!(b.s0.intersection_size(&b.s1) <= 1);
        for set in [&b.s0, &b.s1] {
            let (sub, _) = t.graph().induced(set);
            assert!(sub.is_connected());
        }
        let lo = (n as f64 / 3.0).ceil() as usize;
        let hi = (2.0 * n as f64 / 3.0).floor() as usize + 1;
        assert!(
            (lo..=hi).contains(&b.s0.len()),
            "|s0| = {} outside [{}, {}] for n = {}",
            b.s0.len(),
            lo,
            hi,
            n
        );
    }

    #[test]
    fn bipartition_small_paths() {
        let t2 = rooted(&FamilySpec::Path { n: 2 }, 0);
        let b2 = balanced_bipartition(&t2).unwrap();
        assert_eq!(b2.s0.len(), 1);
        assert_eq!(b2.s1.len(), 2);
        assert_bipartition(&t2, &b2);

        let t3 = rooted(&FamilySpec::Path { n: 3 }, 0);
        let b3 = balanced_bipartition(&t3).unwrap();
        assert_eq!(b3.s0.len(), 2);
        assert_eq!(b3.s0.intersection_size(&b3.s1), 1);
        assert_bipartition(&t3, &b3);

        let t6 = rooted(&FamilySpec::Path { n: 6 }, 0);
        let b6 = balanced_bipartition(&t6).unwrap();
        assert_bipartition(&t6, &b6);
        assert!(b6.s0.len() == 3 || b6.s0.len() == 4);
        assert_eq!(b6.s0.intersection_size(&b6.s1), 1);
    }

    #[test]
    fn bipartition_random_trees() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(2..=150);
            let tree = generate_family(&FamilySpec::RandomTree { n, seed: rng.gen() }).unwrap();
            let t = RootedTree::from_tree(tree, rng.gen_range(0..n) as VertexId).unwrap();
            let b = balanced_bipartition(&t).unwrap();
            assert_bipartition(&t, &b);
        }
    }

    pub(crate) fn assert_partition(t: &RootedTree, p: &TreePartition) {
        let n = t.n();
        let x = p.x;
        let s = p.parts.len() - 1;
        let mut seen = vec![false; n];
        for part in &p.parts {
            for v in part.iter() {
                assert!(!seen[v as usize], "parts overlap at {}", v);
                seen[v as usize] = true;
            }
        }
        assert!(seen.iter().all(|&b| b), "parts do not cover the tree");
        for (i, part) in p.parts.iter().enumerate() {
            if i < s {
                let m = part.len() as f64;
                assert!(x - 1.0 < m && m <= 2.0 * x - 1.0, "part {} size {} vs x {}", i, m, x);
            } else {
                assert!(part.len() as f64 <= x);
            }
            let mut with_anchor = part.clone();
            with_anchor.insert(p.anchors[i]);
            let (sub, _) = t.graph().induced(&with_anchor);
            assert!(sub.is_connected(), "part {} plus anchor not connected", i);
        }
        // counting bound
        assert!(s + 1 <= (n as f64 / (x - 1.0)).ceil() as usize + 1);
    }

    #[test]
    fn partition_path10() {
        let t = rooted(&FamilySpec::Path { n: 10 }, 0);
        let p = tree_partition(&t, 3.0).unwrap();
        assert_partition(&t, &p);
    }

    #[test]
    fn partition_single_part_when_x_large() {
        let t = rooted(&FamilySpec::RandomTree { n: 8, seed: 1 }, 0);
        let p = tree_partition(&t, 8.5).unwrap();
        assert_eq!(p.parts.len(), 1);
        assert_eq!(p.parts[0].len(), 8);
        assert_eq!(p.anchors[0], t.root());
    }

    #[test]
    fn partition_spider() {
        let t = rooted(&FamilySpec::Spider { legs: vec![3, 3, 3] }, 0);
        let p = tree_partition(&t, 3.5).unwrap();
        assert_partition(&t, &p);
    }

    #[test]
    fn plan_cover_r_arithmetic() {
        let g = generate_family(&FamilySpec::Path { n: 16 }).unwrap();
        let plan = plan_cover(&g, 0.5).unwrap();
        assert!((plan.diagnostics.r - 1.069045).abs() < 1e-6);
    }

    #[test]
    fn plan_cover_random_tree_400() {
        let g = generate_family(&FamilySpec::RandomTree { n: 400, seed: 1 }).unwrap();
        let plan = plan_cover(&g, 0.5).unwrap();
        plan.validate(&g).unwrap();
        let d = plan.diagnostics;
        let x = d.r * 20.0;
        assert!(plan.max_region as f64 <= 2.0 * x, "max region {}", plan.max_region);
        match plan.case_tag {
            CaseTag::BigB => assert_eq!(plan.cop_count, 1 + d.s),
            CaseTag::SmallB => assert_eq!(plan.cop_count, 1 + d.s + d.b),
            _ => panic!("tree plan with non-tree tag"),
        }
        // the proof's counting inequality, from recorded diagnostics
        let bound = (400.0 - 1.5 * d.b as f64 * (x - 1.0)) / (x - 1.0) + d.b as f64;
        assert!(d.s as f64 <= bound + 1e-9);
    }

    #[test]
    fn plan_cover_path900_c_three_halves() {
        let g = generate_family(&FamilySpec::Path { n: 900 }).unwrap();
        let plan = plan_cover(&g, 1.5).unwrap();
        plan.validate(&g).unwrap();
        assert!((plan.diagnostics.r - (8.0f64 / 21.0).sqrt()).abs() < 1e-12);
        // every region is a subpath: in a path, connected = subpath
        let upper = plan.cop_count as f64 + 1.5 * plan.max_region as f64;
        let c_const = 2.0 + 1.0 / (plan.diagnostics.r * plan.diagnostics.r) + 1.5;
        assert!(upper <= (7.0f64 * 1.5).sqrt() * 30.0 + c_const, "upper = {}", upper);
    }

    #[test]
    fn plan_cover_degenerate_small() {
        let g = generate_family(&FamilySpec::Path { n: 5 }).unwrap();
        let plan = plan_cover(&g, 0.5).unwrap();
        assert_eq!(plan.cop_count, 1);
        assert_eq!(plan.regions.len(), 1);
        plan.validate(&g).unwrap();
    }

    #[test]
    fn plan_cover_rejects_bad_inputs() {
        let g = generate_family(&FamilySpec::Path { n: 20 }).unwrap();
        assert!(plan_cover(&g, 0.0).is_err());
        assert!(plan_cover(&g, -1.0).is_err());
        let disc = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(plan_cover(&disc, 0.5).is_err());
    }

    #[test]
    fn small_b_regions_stay_bounded() {
        // force the small-b case with a star of short legs
        let legs: Vec<usize> = vec![2; 120];
        let g = generate_family(&FamilySpec::Spider { legs }).unwrap();
        let plan = plan_cover(&g, 0.5).unwrap();
        plan.validate(&g).unwrap();
        assert_eq!(plan.case_tag, CaseTag::SmallB);
        let x = plan.diagnostics.r * (g.n() as f64).sqrt();
        let cap = (1.5 * (x - 1.0) + 1.0).max(4.0 * x / 3.0 + 1.0).max(x);
        for region in &plan.regions {
            assert!(region.len() as f64 <= cap + 1e-9);
        }
    }
}
