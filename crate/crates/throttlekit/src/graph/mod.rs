//! Graph representationic and metric utilities shared by every other module.
//!
//! Graphs are simple and undirected: dense 0-based vertex ids, sorted
//! adjacency lists, no self-loops, no parallel edges. Connectivity is not an
//! invariant; operations that need it check and report the offending vertex.

mod family;
mod io;

pub use family::{FamilySpec, SpiderShape};
pub use io::{parse_edge_list, parse_graph, parse_graph6, GraphFormat};

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

pub type VertexId = u32;

/// Sentinel for "no vertex" in packed parent/distance arrays.
pub const NO_VERTEX: u32 = u32::MAX;

#[derive(Debug, thiserror::Error)]
pub enum GraphError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(VertexId),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(VertexId, usize),
    #[error("graph is disconnected: vertex {unreachable} is unreachable from {from}")]
    Disconnected { from: VertexId, unreachable: VertexId },
    #[error("invalid family spec: {0}")]
    BadFamily(String),
    #[error("induced subgraph is disconnected")]
    InducedDisconnected,
    #[error("empty vertex set")]
    EmptySet,
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    /// Original input labels when the source used non-numeric names.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating edges and rejecting
    /// self-loops. Endpoints must be `< n`.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::VertexOutOfRange(w, n));
                }
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adjacency, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = u as VertexId;
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(l) => l[v as usize].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n() as VertexId
    }

    /// BFS distances from `src`; unreachable vertices get `u32::MAX`.
    pub fn bfs_distances(&self, src: VertexId) -> Vec<u32> {
        self.multi_source_distances(std::iter::once(src))
    }

    /// BFS distances from a set of sources.
    pub fn multi_source_distances(&self, srcs: impl IntoIterator<Item = VertexId>) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        let mut queue = VecDeque::new();
        for s in srcs {
            if dist[s as usize] != 0 {
                dist[s as usize] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u as usize];
            for &w in self.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = d + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Checks connectivity; on failure reports one unreachable vertex.
    pub fn check_connected(&self) -> Result<(), GraphError> {
        if self.n() == 0 {
            return Ok(());
        }
        let dist = self.bfs_distances(0);
        match dist.iter().position(|&d| d == u32::MAX) {
            None => Ok(()),
            Some(v) => Err(GraphError::Disconnected { from: 0, unreachable: v as VertexId }),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.check_connected().is_ok()
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count() == self.n() - 1 && self.is_connected()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s as VertexId];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in self.neighbors(u) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `keep`; returns the subgraph plus the map from new
    /// ids back to original ids (sorted order of `keep`).
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<VertexId>) {
        let back: Vec<VertexId> = keep.iter().collect();
        let mut fwd = vec![NO_VERTEX; self.n()];
        for (i, &v) in back.iter().enumerate() {
            fwd[v as usize] = i as VertexId;
        }
        let mut adjacency = vec![Vec::new(); back.len()];
        for (i, &v) in back.iter().enumerate() {
            for &w in self.neighbors(v) {
                if fwd[w as usize] != NO_VERTEX {
                    adjacency[i].push(fwd[w as usize]);
                }
            }
            adjacency[i].sort_unstable();
        }
        (Graph { adjacency, labels: None }, back)
    }

    /// Biconnected components as edge lists (iterative Tarjan). Every edge
    /// appears in exactly one block; isolated vertices yield no block.
    pub fn blocks(&self) -> Vec<Vec<(VertexId, VertexId)>> {
        let n = self.n();
        let mut disc = vec![u32::MAX; n];
        let mut low = vec![0u32; n];
        let mut timer = 0u32;
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
        // explicit DFS stack: (vertex, parent, next neighbor index)
        let mut stack: Vec<(VertexId, VertexId, usize)> = Vec::new();
        for root in 0..n as VertexId {
            if disc[root as usize] != u32::MAX {
                continue;
            }
            disc[root as usize] = timer;
            low[root as usize] = timer;
            timer += 1;
            stack.push((root, NO_VERTEX, 0));
            while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.degree(u) {
                    let w = self.adjacency[u as usize][*idx];
                    *idx += 1;
                    if disc[w as usize] == u32::MAX {
                        edge_stack.push((u, w));
                        disc[w as usize] = timer;
                        low[w as usize] = timer;
                        timer += 1;
                        stack.push((w, u, 0));
                    } else if w != parent && disc[w as usize] < disc[u as usize] {
                        edge_stack.push((u, w));
                        low[u as usize] = low[u as usize].min(disc[w as usize]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p as usize] = low[p as usize].min(low[u as usize]);
                        if low[u as usize] >= disc[p as usize] {
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == (p, u) {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks
    }

    /// Chordality check: lexicographic BFS order, then verify it is a perfect
    /// elimination ordering.
    pub fn is_chordal(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        // Lex-BFS via partition refinement over a list of buckets.
        let mut order = Vec::with_capacity(n);
        let mut buckets: Vec<Vec<VertexId>> = vec![(0..n as VertexId).collect()];
        let mut placed = vec![false; n];
        while let Some(bucket) = buckets.first_mut() {
            let v = bucket.pop().unwrap();
            if bucket.is_empty() {
                buckets.remove(0);
            }
            placed[v as usize] = true;
            order.push(v);
            let nb: Vec<bool> = {
                let mut m = vec![false; n];
                for &w in self.neighbors(v) {
                    m[w as usize] = true;
                }
                m
            };
            let mut next = Vec::with_capacity(buckets.len() * 2);
            for b in buckets.drain(..) {
                let (hit, miss): (Vec<_>, Vec<_>) =
                    b.into_iter().partition(|&w| nb[w as usize]);
                if !hit.is_empty() {
                    next.push(hit);
                }
                if !miss.is_empty() {
                    next.push(miss);
                }
            }
            buckets = next;
            let _ = &placed;
        }
        // Reverse of a Lex-BFS order is a PEO iff the graph is chordal.
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i;
        }
        // For each v, among neighbors placed before v take the latest one `p`
        // and require earlier neighbors of v to also neighbor `p`.
        for &v in &order {
            let earlier: Vec<VertexId> = self
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w as usize] < pos[v as usize])
                .collect();
            if let Some(&p) = earlier.iter().max_by_key(|&&w| pos[w as usize]) {
                for &w in &earlier {
                    if w != p && !self.has_edge(p, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// DOT emitter for visual inspection; vertex names are original labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in self.vertices() {
            if self.degree(v) == 0 {
                out.push_str(&format!("  \"{}\";\n", self.label(v)));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.label(u), self.label(v)));
        }
        out.push_str("}\n");
        out
    }

    /// Edge-list emitter: `# n <count>` header plus one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# n {}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }

    /// graph6 emitter, bit-exact per the published format specification.
    pub fn to_graph6(&self) -> String {
        io::emit_graph6(self)
    }
}

/// Set of vertex ids belonging to one specific graph, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<VertexId>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = VertexId>) -> Self {
        let mut members: Vec<VertexId> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn full(n: usize) -> Self {
        VertexSet { members: (0..n as VertexId).collect() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.members
    }

    pub fn insert(&mut self, v: VertexId) {
        if let Err(i) = self.members.binary_search(&v) {
            self.members.insert(i, v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn intersection_size(&self, other: &VertexSet) -> usize {
        self.iter().filter(|&v| other.contains(v)).count()
    }

    /// Validates all members are `< n`.
    pub fn check_in_range(&self, n: usize) -> Result<(), GraphError> {
        match self.members.last() {
            Some(&v) if v as usize >= n => Err(GraphError::VertexOutOfRange(v, n)),
            _ => Ok(()),
        }
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}

/// Rooted tree: an acyclic connected graph plus parent links from a root.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootedTree {
    graph: Graph,
    root: VertexId,
    parent: Vec<VertexId>,
    children: Vec<Vec<VertexId>>,
    /// Vertices in BFS order from the root; parents precede children.
    bfs_order: Vec<VertexId>,
}

impl RootedTree {
    /// Roots an existing tree. Errors if `graph` is not a tree.
    pub fn from_tree(graph: Graph, root: VertexId) -> Result<Self, GraphError> {
        if root as usize >= graph.n() {
            return Err(GraphError::VertexOutOfRange(root, graph.n()));
        }
        if graph.edge_count() != graph.n() - 1 {
            return Err(GraphError::BadFamily(format!(
                "not a tree: {} vertices, {} edges",
                graph.n(),
                graph.edge_count()
            )));
        }
        graph.check_connected()?;
        let (parent, bfs_order) = bfs_tree_links(&graph, root);
        let children = children_from_parents(&parent, root);
        Ok(RootedTree { graph, root, parent, children, bfs_order })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        if v == self.root {
            None
        } else {
            Some(self.parent[v as usize])
        }
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v as usize]
    }

    pub fn bfs_order(&self) -> &[VertexId] {
        &self.bfs_order
    }

    /// Subtree sizes for every vertex, by one reverse-BFS pass.
    pub fn subtree_sizes(&self) -> Vec<u32> {
        let mut size = vec![1u32; self.n()];
        for &v in self.bfs_order.iter().rev() {
            if v != self.root {
                size[self.parent[v as usize] as usize] += size[v as usize];
            }
        }
        size
    }
}

fn bfs_tree_links(graph: &Graph, root: VertexId) -> (Vec<VertexId>, Vec<VertexId>) {
    let mut parent = vec![NO_VERTEX; graph.n()];
    parent[root as usize] = root;
    let mut order = Vec::with_capacity(graph.n());
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in graph.neighbors(u) {
            if parent[w as usize] == NO_VERTEX {
                parent[w as usize] = u;
                order.push(w);
            }
        }
    }
    (parent, order)
}

fn children_from_parents(parent: &[VertexId], root: VertexId) -> Vec<Vec<VertexId>> {
    let mut children = vec![Vec::new(); parent.len()];
    for v in 0..parent.len() as VertexId {
        if v != root {
            children[parent[v as usize] as usize].push(v);
        }
    }
    children
}

/// Breadth-first spanning tree of a connected graph, rooted at `root`.
/// Deterministic: neighbors are explored in sorted order.
pub fn spanning_tree(g: &Graph, root: VertexId) -> Result<RootedTree, GraphError> {
    if root as usize >= g.n() {
        return Err(GraphError::VertexOutOfRange(root, g.n()));
    }
    let (parent, order) = bfs_tree_links(g, root);
    if order.len() != g.n() {
        let unreachable = (0..g.n())
            .find(|&v| parent[v] == NO_VERTEX)
            .map(|v| v as VertexId)
            .unwrap();
        return Err(GraphError::Disconnected { from: root, unreachable });
    }
    let edges = (0..g.n() as VertexId)
        .filter(|&v| v != root)
        .map(|v| (parent[v as usize], v));
    let tree = Graph::from_edges(g.n(), edges).expect("BFS tree edges are valid");
    let children = children_from_parents(&parent, root);
    Ok(RootedTree { graph: tree, root, parent, children, bfs_order: order })
}

/// Centers and radius of the subgraph induced on `within`.
///
/// Returns every vertex of minimum eccentricity together with that
/// eccentricity. Errors if the induced subgraph is disconnected or empty.
/// Tree-shaped subgraphs use the double-BFS diameter argument; general
/// subgraphs fall back to per-vertex BFS.
pub fn center_and_radius(g: &Graph, within: &VertexSet) -> Result<(VertexSet, u32), GraphError> {
    if within.is_empty() {
        return Err(GraphError::EmptySet);
    }
    within.check_in_range(g.n())?;
    let (sub, back) = g.induced(within);
    sub.check_connected().map_err(|_| GraphError::InducedDisconnected)?;
    let m = sub.n();
    if m == 1 {
        return Ok((VertexSet::new([back[0]]), 0));
    }
    if sub.edge_count() == m - 1 {
        // Tree: center lies at the middle of a diameter path.
        let d0 = sub.bfs_distances(0);
        let a = (0..m).max_by_key(|&v| d0[v]).unwrap() as VertexId;
        let da = sub.bfs_distances(a);
        let b = (0..m).max_by_key(|&v| da[v]).unwrap() as VertexId;
        let db = sub.bfs_distances(b);
        let diam = da[b as usize];
        let radius = diam.div_ceil(2);
        let centers: Vec<VertexId> = (0..m as VertexId)
            .filter(|&v| da[v as usize].max(db[v as usize]) == radius)
            // middle of the a-b path only
            .filter(|&v| da[v as usize] + db[v as usize] == diam)
            .map(|v| back[v as usize])
            .collect();
        return Ok((VertexSet::new(centers), radius));
    }
    let mut best = u32::MAX;
    let mut ecc = vec![0u32; m];
    for v in 0..m as VertexId {
        let d = sub.bfs_distances(v);
        let e = d.iter().copied().max().unwrap();
        ecc[v as usize] = e;
        best = best.min(e);
    }
    let centers: Vec<VertexId> = (0..m)
        .filter(|&v| ecc[v] == best)
        .map(|v| back[v])
        .collect();
    Ok((VertexSet::new(centers), best))
}
