//! Ground-truth engines: exact capture times by retrograde analysis of the
//! full game graph, positive semidefinite forcing propagation, k-radius
//! search, and the throttling minimizations built on all three.

mod capture;
mod psd;
mod radius;

pub use capture::capture_time;
pub use psd::{psd_prop_time, pt_plus};
pub use radius::k_radius;

use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum SolverError {
    #[error("state budget exceeded: need {needed} states, budget {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("invalid cop count k = {k} for graph of order {n}")]
    BadK { k: u32, n: usize },
    #[error("initial set must be non-empty")]
    EmptyInitialSet,
    #[error("game value exceeds representable range")]
    ValueOverflow,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Hard cap on enumerated states; exceeding it is an explicit error, never a
/// silently truncated answer.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SolverBudget {
    pub max_states: u64,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget { max_states: 50_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum GameOutcome {
    Captured { rounds: u32 },
    Evasion,
}

impl GameOutcome {
    pub fn rounds(&self) -> Option<u32> {
        match *self {
            GameOutcome::Captured { rounds } => Some(rounds),
            GameOutcome::Evasion => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Robber,
    Psd,
    Radius,
}

/// One row of the per-k table. `Exact` rows carry the solved cost; skipped
/// rows carry the certificate that solving them could not have improved the
/// minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PerKEntry {
    Exact { cost: u32 },
    Evasion,
    RadiusLowerBound { bound: u32 },
    Cutoff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerK {
    pub k: u32,
    #[serde(flatten)]
    pub entry: PerKEntry,
}

/// Result of a throttling minimization: the value `min_k (k + cost(k))`, the
/// k attaining it, and the per-k table with the cutoff argument spelled out.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThrottleResult {
    pub value: u32,
    pub best_k: u32,
    pub objective: Objective,
    pub per_k: Vec<PerK>,
    /// Why the table may stop where it does: costs are nonnegative, so any
    /// k > value satisfies k + cost(k) > value, and rows marked with a radius
    /// lower bound satisfy k + rad_k >= value, which bounds k + cost(k) too.
    pub cutoff: String,
}

fn throttle_driver(
    g: &Graph,
    objective: Objective,
    mut exact: impl FnMut(u32) -> Result<Option<u32>, SolverError>,
    mut lower: impl FnMut(u32) -> Option<u32>,
) -> Result<ThrottleResult, SolverError> {
    g.check_connected()?;
    let n = g.n() as u32;
    let mut best: u64 = u64::MAX;
    let mut best_k = 0u32;
    let mut per_k = Vec::new();
    let mut k = 1u32;
    while k <= n {
        if u64::from(k) >= best {
            break;
        }
        if let Some(bound) = lower(k) {
            if u64::from(k) + u64::from(bound) >= best {
                per_k.push(PerK { k, entry: PerKEntry::RadiusLowerBound { bound } });
                k += 1;
                continue;
            }
        }
        match exact(k)? {
            Some(cost) => {
                per_k.push(PerK { k, entry: PerKEntry::Exact { cost } });
                let total = u64::from(k) + u64::from(cost);
                if total < best {
                    best = total;
                    best_k = k;
                }
            }
            None => per_k.push(PerK { k, entry: PerKEntry::Evasion }),
        }
        k += 1;
    }
    debug_assert!(best <= u64::from(n), "k = n always captures at cost 0");
    let value = best as u32;
    while k <= n.min(value) {
        per_k.push(PerK { k, entry: PerKEntry::Cutoff });
        k += 1;
    }
    let k_max = per_k.last().map(|p| p.k).unwrap_or(0);
    Ok(ThrottleResult {
        value,
        best_k,
        objective,
        cutoff: format!(
            "per_k covers k = 1..={}; cost(k) >= 0 forces k + cost(k) > {} for k > {}, \
             and rows tagged radius_lower_bound satisfy k + rad_k >= {}",
            k_max, value, value, value
        ),
        per_k,
    })
}

/// Exact robber throttling `min_k (k + capt_k)`.
///
/// Rows are pruned with the k-radius lower bound (a stationary robber at the
/// deepest vertex survives at least `rad_k` rounds) before the game solver is
/// invoked, so only candidate k that can still improve are solved exactly.
pub fn throttle_robber(g: &Graph, budget: &SolverBudget) -> Result<ThrottleResult, SolverError> {
    let dist = distance_table(g, budget)?;
    throttle_driver(
        g,
        Objective::Robber,
        |k| capture_time(g, k, budget).map(|o| o.rounds()),
        |k| radius::k_radius_with(g, k, budget, &dist).ok(),
    )
}

fn distance_table(g: &Graph, budget: &SolverBudget) -> Result<Vec<Vec<u32>>, SolverError> {
    let cost = (g.n() as u64).saturating_mul(g.n() as u64);
    if cost > budget.max_states {
        return Err(SolverError::BudgetExceeded { needed: cost, budget: budget.max_states });
    }
    Ok(radius::all_pairs(g))
}

/// Exact PSD throttling `min_k (k + pt_+(G, k))` by initial-set enumeration.
///
/// Forcing spreads along at most one edge per round, so `pt_+(G, k) >=
/// rad_k(G)`; the same radius prune as the robber applies.
pub fn throttle_psd(g: &Graph, budget: &SolverBudget) -> Result<ThrottleResult, SolverError> {
    let dist = distance_table(g, budget)?;
    throttle_driver(
        g,
        Objective::Psd,
        |k| pt_plus(g, k, budget),
        |k| radius::k_radius_with(g, k, budget, &dist).ok(),
    )
}

/// Radius throttling `min_k (k + rad_k)`; equals the robber throttling number
/// on chordal graphs.
pub fn throttle_radius(g: &Graph, budget: &SolverBudget) -> Result<ThrottleResult, SolverError> {
    let dist = distance_table(g, budget)?;
    throttle_driver(
        g,
        Objective::Radius,
        |k| radius::k_radius_with(g, k, budget, &dist).map(Some),
        |_| None,
    )
}
