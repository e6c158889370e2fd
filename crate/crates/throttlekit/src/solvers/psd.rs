//! Positive semidefinite zero forcing: synchronous propagation and the
//! exact pt_+ minimization over initial sets.
//!
//! Rule: with blue set S and white components W_1..W_r of G - S, a blue
//! vertex v forces its white neighbor w in round t when w is v's only white
//! neighbor inside W_i. All forces valid at the start of a round fire
//! simultaneously; a vertex may force once per white component.

use super::{GameOutcome, SolverBudget, SolverError};
use crate::graph::{Graph, VertexId, VertexSet};

/// Number of synchronous rounds until every vertex is blue, or `Evasion`
/// when propagation stalls first.
pub fn psd_prop_time(g: &Graph, initial: &VertexSet) -> Result<GameOutcome, SolverError> {
    if initial.is_empty() {
        return Err(SolverError::EmptyInitialSet);
    }
    initial.check_in_range(g.n())?;
    let mut blue = vec![false; g.n()];
    for v in initial.iter() {
        blue[v as usize] = true;
    }
    Ok(match propagation_rounds(g, &mut blue) {
        Some(rounds) => GameOutcome::Captured { rounds },
        None => GameOutcome::Evasion,
    })
}

/// Runs the forcing process to fixation; `blue` is updated in place.
fn propagation_rounds(g: &Graph, blue: &mut [bool]) -> Option<u32> {
    let n = g.n();
    let mut white_left = blue.iter().filter(|&&b| !b).count();
    let mut comp = vec![u32::MAX; n];
    let mut queue: Vec<VertexId> = Vec::new();
    let mut forced: Vec<VertexId> = Vec::new();
    // per-vertex stamps so per-component counters reset in O(1)
    let mut stamp = vec![0u32; n];
    let mut count = vec![0u32; n];
    let mut witness = vec![0 as VertexId; n];
    let mut round = 0u32;
    let mut token = 0u32;
    while white_left > 0 {
        // white components
        let mut ncomp = 0u32;
        for slot in comp.iter_mut() {
            *slot = u32::MAX;
        }
        for s in 0..n {
            if blue[s] || comp[s] != u32::MAX {
                continue;
            }
            comp[s] = ncomp;
            queue.clear();
            queue.push(s as VertexId);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &w in g.neighbors(u) {
                    if !blue[w as usize] && comp[w as usize] == u32::MAX {
                        comp[w as usize] = ncomp;
                        queue.push(w);
                    }
                }
            }
            ncomp += 1;
        }
        // collect forces: one per (blue vertex, adjacent component) with a
        // unique white neighbor there
        forced.clear();
        for v in 0..n {
            if !blue[v] {
                continue;
            }
            token += 1;
            for &w in g.neighbors(v as VertexId) {
                if blue[w as usize] {
                    continue;
                }
                let c = comp[w as usize] as usize;
                if stamp[c] != token {
                    stamp[c] = token;
                    count[c] = 1;
                    witness[c] = w;
                } else {
                    count[c] += 1;
                }
            }
            for &w in g.neighbors(v as VertexId) {
                if blue[w as usize] {
                    continue;
                }
                let c = comp[w as usize] as usize;
                if stamp[c] == token && count[c] == 1 {
                    forced.push(witness[c]);
                    // avoid pushing the same witness again for this v
                    count[c] = u32::MAX;
                }
            }
        }
        if forced.is_empty() {
            return None;
        }
        for &w in &forced {
            if !blue[w as usize] {
                blue[w as usize] = true;
                white_left -= 1;
            }
        }
        round += 1;
    }
    Some(round)
}

/// Exact pt_+(G, k): minimum propagation time over every size-k initial set,
/// or `None` when every such set stalls.
pub fn pt_plus(g: &Graph, k: u32, budget: &SolverBudget) -> Result<Option<u32>, SolverError> {
    let n = g.n();
    if k < 1 || k as usize > n {
        return Err(SolverError::BadK { k, n });
    }
    let combos = binomial(n as u64, u64::from(k));
    if combos > budget.max_states {
        return Err(SolverError::BudgetExceeded { needed: combos, budget: budget.max_states });
    }
    let k = k as usize;
    let mut subset: Vec<usize> = (0..k).collect();
    let mut blue = vec![false; n];
    let mut best: Option<u32> = None;
    loop {
        for b in blue.iter_mut() {
            *b = false;
        }
        for &v in &subset {
            blue[v] = true;
        }
        if let Some(rounds) = propagation_rounds(g, &mut blue) {
            best = Some(best.map_or(rounds, |b| b.min(rounds)));
            if best == Some(0) {
                break;
            }
        }
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(best);
            }
            i -= 1;
            if subset[i] < n - (k - i) {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
    Ok(best)
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}
