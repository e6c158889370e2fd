//! Named graph families and seeded random generators.
//!
//! Random families are deterministic functions of their seed (ChaCha8 with
//! per-family streams), so generated instances are reproducible everywhere.

use super::{Graph, GraphError, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Star { n: usize },
    Cycle { n: usize },
    Spider { legs: Vec<usize> },
    RandomTree { n: usize, seed: u64 },
    RandomCactus { n: usize, seed: u64 },
    RandomChordal { n: usize, seed: u64 },
    RandomSpider { n: usize, seed: u64 },
}

impl FamilySpec {
    pub fn cycle(n: usize) -> Self {
        FamilySpec::Cycle { n }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "path:{}", n),
            FamilySpec::Star { n } => write!(f, "star:{}", n),
            FamilySpec::Cycle { n } => write!(f, "cycle:{}", n),
            FamilySpec::Spider { legs } => {
                let parts: Vec<String> = legs.iter().map(|l| l.to_string()).collect();
                write!(f, "spider:{}", parts.join(","))
            }
            FamilySpec::RandomTree { n, seed } => write!(f, "random_tree:{}:seed={}", n, seed),
            FamilySpec::RandomCactus { n, seed } => write!(f, "random_cactus:{}:seed={}", n, seed),
            FamilySpec::RandomChordal { n, seed } => {
                write!(f, "random_chordal:{}:seed={}", n, seed)
            }
            FamilySpec::RandomSpider { n, seed } => write!(f, "random_spider:{}:seed={}", n, seed),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Accepts `name:size[:seed=K]`, e.g. `path:8`, `spider:2,2,2`,
    /// `random_tree:400:seed=1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: String| GraphError::BadFamily(msg);
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or("");
        let arg = parts.next().ok_or_else(|| bad(format!("missing size in `{}`", s)))?;
        let seed = match parts.next() {
            None => None,
            Some(t) => Some(
                t.strip_prefix("seed=")
                    .and_then(|v| v.parse::<u64>().ok())
                    .ok_or_else(|| bad(format!("bad seed component `{}`", t)))?,
            ),
        };
        let size = || {
            arg.parse::<usize>()
                .map_err(|_| bad(format!("bad size `{}` in `{}`", arg, s)))
        };
        let need_seed = || seed.ok_or_else(|| bad(format!("`{}` requires :seed=K", s)));
        match name {
            "path" => Ok(FamilySpec::Path { n: size()? }),
            "star" => Ok(FamilySpec::Star { n: size()? }),
            "cycle" => Ok(FamilySpec::Cycle { n: size()? }),
            "spider" => {
                let legs: Result<Vec<usize>, _> =
                    arg.split(',').map(|t| t.parse::<usize>()).collect();
                Ok(FamilySpec::Spider {
                    legs: legs.map_err(|_| bad(format!("bad leg list `{}`", arg)))?,
                })
            }
            "random_tree" => Ok(FamilySpec::RandomTree { n: size()?, seed: need_seed()? }),
            "random_cactus" => Ok(FamilySpec::RandomCactus { n: size()?, seed: need_seed()? }),
            "random_chordal" => Ok(FamilySpec::RandomChordal { n: size()?, seed: need_seed()? }),
            "random_spider" => Ok(FamilySpec::RandomSpider { n: size()?, seed: need_seed()? }),
            other => Err(bad(format!("unknown family `{}`", other))),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match *spec {
        FamilySpec::Path { n } => path(n),
        FamilySpec::Star { n } => star(n),
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::Spider { ref legs } => spider(legs),
        FamilySpec::RandomTree { n, seed } => random_tree(n, seed),
        FamilySpec::RandomCactus { n, seed } => random_cactus(n, seed),
        FamilySpec::RandomChordal { n, seed } => random_chordal(n, seed),
        FamilySpec::RandomSpider { n, seed } => random_spider(n, seed),
    }
}

fn nonzero(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::BadFamily("family size must be positive".into()))
    } else {
        Ok(())
    }
}

fn path(n: usize) -> Result<Graph, GraphError> {
    nonzero(n)?;
    Graph::from_edges(n, (1..n).map(|v| (v as VertexId - 1, v as VertexId)))
}

fn star(n: usize) -> Result<Graph, GraphError> {
    nonzero(n)?;
    Graph::from_edges(n, (1..n).map(|v| (0, v as VertexId)))
}

fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadFamily("cycle needs at least 3 vertices".into()));
    }
    Graph::from_edges(n, (0..n).map(|v| (v as VertexId, ((v + 1) % n) as VertexId)))
}

/// Spider: vertex 0 is the center, adjacent to one endpoint of each leg path.
/// Leg vertices are numbered consecutively outward.
fn spider(legs: &[usize]) -> Result<Graph, GraphError> {
    if legs.is_empty() {
        return Err(GraphError::BadFamily("spider needs at least one leg".into()));
    }
    if legs.contains(&0) {
        return Err(GraphError::BadFamily("spider legs must have positive length".into()));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next: VertexId = 1;
    for &len in legs {
        let mut prev: VertexId = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform random labeled tree via a random Prufer sequence.
fn random_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    nonzero(n)?;
    if n == 1 {
        return Graph::from_edges(1, []);
    }
    let mut rng = rng_for(seed, 1);
    let seq: Vec<VertexId> = (0..n - 2).map(|_| rng.gen_range(0..n as VertexId)).collect();
    Graph::from_edges(n, prufer_decode(&seq, n))
}

fn prufer_decode(seq: &[VertexId], n: usize) -> Vec<(VertexId, VertexId)> {
    let mut deg = vec![1u32; n];
    for &s in seq {
        deg[s as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = deg.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr as VertexId;
    for &s in seq {
        edges.push((leaf, s));
        deg[s as usize] -= 1;
        if deg[s as usize] == 1 && (s as usize) < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while deg[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr as VertexId;
        }
    }
    edges.push((leaf, (n - 1) as VertexId));
    edges
}

/// Random cactus: grow by attaching pendant edges or whole cycles (length
/// 3..=8) at random existing vertices. Blocks meet only at cut vertices, so
/// any two simple cycles share at most one vertex by construction.
fn random_cactus(n: usize, seed: u64) -> Result<Graph, GraphError> {
    nonzero(n)?;
    let mut rng = rng_for(seed, 2);
    let mut edges = Vec::new();
    let mut size: usize = 1;
    while size < n {
        let v = rng.gen_range(0..size) as VertexId;
        let remaining = n - size;
        if remaining >= 2 && rng.gen_bool(0.5) {
            let len = rng.gen_range(3..=8usize).min(remaining + 1);
            let new = len - 1;
            let mut prev = v;
            for i in 0..new {
                let w = (size + i) as VertexId;
                edges.push((prev, w));
                prev = w;
            }
            edges.push((prev, v));
            size += new;
        } else {
            edges.push((v, size as VertexId));
            size += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Random connected chordal graph: random tree plus the fill-in produced by
/// playing the elimination game along a uniformly random vertex order.
fn random_chordal(n: usize, seed: u64) -> Result<Graph, GraphError> {
    nonzero(n)?;
    let tree = random_tree(n, seed)?;
    let mut rng = rng_for(seed, 3);
    let mut order: Vec<VertexId> = (0..n as VertexId).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut adj: Vec<std::collections::BTreeSet<VertexId>> = vec![Default::default(); n];
    for (u, v) in tree.edges() {
        adj[u as usize].insert(v);
        adj[v as usize].insert(u);
    }
    for &v in &order {
        let later: Vec<VertexId> = adj[v as usize]
            .iter()
            .copied()
            .filter(|&w| pos[w as usize] > pos[v as usize])
            .collect();
        for i in 0..later.len() {
            for j in i + 1..later.len() {
                adj[later[i] as usize].insert(later[j]);
                adj[later[j] as usize].insert(later[i]);
            }
        }
    }
    let edges = (0..n as VertexId)
        .flat_map(|u| {
            adj[u as usize]
                .iter()
                .copied()
                .filter(move |&w| u < w)
                .map(move |w| (u, w))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>();
    Graph::from_edges(n, edges)
}

/// Random spider of order exactly `n`: leg count drawn up to ~2 sqrt(n), leg
/// lengths a uniform composition of n-1.
fn random_spider(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::BadFamily("random spider needs n >= 2".into()));
    }
    let mut rng = rng_for(seed, 4);
    let max_legs = ((n as f64).sqrt() as usize * 2).clamp(1, n - 1);
    let count = rng.gen_range(1..=max_legs);
    let mut cuts: Vec<usize> = Vec::with_capacity(count + 1);
    cuts.push(0);
    while cuts.len() < count {
        let c = rng.gen_range(1..n - 1);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.push(n - 1);
    cuts.sort_unstable();
    let legs: Vec<usize> = cuts.windows(2).map(|w| w[1] - w[0]).collect();
    spider(&legs)
}

/// Leg decomposition of a spider (or path) graph.
#[derive(Debug, Clone)]
pub struct SpiderShape {
    pub center: VertexId,
    /// Each leg lists its vertices from the center outward (center excluded).
    pub legs: Vec<Vec<VertexId>>,
}

impl SpiderShape {
    /// Recognizes a spider: a tree with at most one vertex of degree > 2.
    /// Paths count; the lowest-id endpoint is taken as the center.
    pub fn detect(g: &Graph) -> Option<SpiderShape> {
        if !g.is_tree() {
            return None;
        }
        if g.n() == 1 {
            return Some(SpiderShape { center: 0, legs: Vec::new() });
        }
        let high: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) > 2).collect();
        let center = match high.len() {
            0 => g.vertices().find(|&v| g.degree(v) == 1)?,
            1 => high[0],
            _ => return None,
        };
        let mut legs = Vec::with_capacity(g.degree(center));
        for &first in g.neighbors(center) {
            let mut leg = vec![first];
            let mut prev = center;
            let mut cur = first;
            while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                leg.push(next);
                prev = cur;
                cur = next;
            }
            legs.push(leg);
        }
        Some(SpiderShape { center, legs })
    }
}

pub use generate as generate_family;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_degrees() {
        for n in 3..12 {
            let g = path(n).unwrap();
            let ones = g.vertices().filter(|&v| g.degree(v) == 1).count();
            let twos = g.vertices().filter(|&v| g.degree(v) == 2).count();
            assert_eq!((ones, twos), (2, n - 2));
        }
    }

    #[test]
    fn path4_shape() {
        let g = path(4).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn balanced_spider_shape() {
        let g = spider(&[2, 2, 2]).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.degree(0), 3);
        let deg3 = g.vertices().filter(|&v| g.degree(v) >= 3).count();
        assert_eq!(deg3, 1);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
    }

    #[test]
    fn spider_rejects_empty() {
        assert!(spider(&[]).is_err());
        assert!(spider(&[2, 0]).is_err());
        assert!(generate(&FamilySpec::Path { n: 0 }).is_err());
    }

    #[test]
    fn random_tree_is_tree_and_deterministic() {
        let a = random_tree(50, 7).unwrap();
        let b = random_tree(50, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.is_tree());
        assert_ne!(a, random_tree(50, 8).unwrap());
    }

    #[test]
    fn random_cactus_blocks_are_edges_or_cycles() {
        let g = random_cactus(50, 7).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.n(), 50);
        for block in g.blocks() {
            let verts: std::collections::BTreeSet<u32> =
                block.iter().flat_map(|&(u, v)| [u, v]).collect();
            assert!(block.len() == 1 || block.len() == verts.len());
        }
    }

    #[test]
    fn random_chordal_is_chordal_connected() {
        for seed in 0..20 {
            let g = random_chordal(10, seed).unwrap();
            assert!(g.is_connected());
            assert!(g.is_chordal(), "seed {}", seed);
        }
    }

    #[test]
    fn random_spider_is_spider() {
        for seed in 0..20 {
            let g = random_spider(40, seed).unwrap();
            assert_eq!(g.n(), 40);
            let shape = SpiderShape::detect(&g).expect("must be a spider");
            let total: usize = shape.legs.iter().map(|l| l.len()).sum();
            assert_eq!(total, 39);
        }
    }

    #[test]
    fn spider_shape_of_path() {
        let g = path(5).unwrap();
        let shape = SpiderShape::detect(&g).unwrap();
        assert_eq!(shape.center, 0);
        assert_eq!(shape.legs.len(), 1);
        assert_eq!(shape.legs[0], vec![1, 2, 3, 4]);
    }

    #[test]
    fn family_spec_round_trip() {
        for s in ["path:8", "spider:2,2,2", "random_tree:400:seed=1", "star:5"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("random_tree:400".parse::<FamilySpec>().is_err());
        assert!("blob:4".parse::<FamilySpec>().is_err());
    }
}
