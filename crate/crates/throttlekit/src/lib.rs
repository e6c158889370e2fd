//! throttlekit: cover-based cop strategies, exact throttling solvers, and
//! certified square-root bounds for pursuit games on graphs.
//!
//! The crate is organized around one pipeline: build or load a graph
//! ([`graph`]), partition it into connected regions ([`decomposition`]),
//! simulate or exactly solve the pursuit game on it ([`strategies`],
//! [`solvers`], [`gambler`]), and certify the resulting cop-count/capture-time
//! trade-off against closed-form envelopes ([`bounds`]).

pub mod bounds;
pub mod decomposition;
pub mod gambler;
pub mod graph;
pub mod solvers;
pub mod strategies;

pub use graph::{
    generate_family, parse_graph, spanning_tree, FamilySpec, Graph, GraphFormat, RootedTree,
    VertexId, VertexSet,
};

pub use decomposition::{
    balanced_bipartition, limb_split, plan_cover, tree_partition, Bipartition, CaseTag, CoverPlan,
    Diagnostics, LimbSplit, TreePartition,
};

pub use solvers::{
    capture_time, k_radius, psd_prop_time, throttle_psd, throttle_radius, throttle_robber,
    GameOutcome, Objective, PerK, SolverBudget, ThrottleResult,
};

pub use strategies::{
    cactus_flatten, cactus_plan, spider_cover, stationary_escape, tree_pursuit, CactusPlan,
    FlattenResult, PursuitTrace, RobberPolicy,
};

pub use gambler::{gambler_bound, simulate_gambler, CopPolicy, EctEstimate, GamblerModel, Variant};

pub use bounds::{
    certify, lower_bound_eval, path_throttle_formula, spider_lower_family, upper_bound,
    BoundFamily, BoundReport, SpiderSpec,
};
