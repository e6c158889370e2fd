//! Exact optimal capture time by retrograde analysis of the two-sided game
//! graph.
//!
//! Game rules (round structure is the recorded convention for every solver
//! in this crate):
//!   - cops pick an initial multiset of vertices, then the robber picks a
//!     cop-free vertex (if none exists the capture time is 0);
//!   - each round every cop moves to a closed neighbor, then the robber does;
//!   - capture happens the moment a cop shares the robber's vertex, on either
//!     half of the round, and that round index is the capture time;
//!   - both sides play perfectly with full information.
//!
//! States are (cop multiset, robber vertex, side to move). Cop multisets are
//! ranked through the combination encoding `q_i = p_i + i`, giving dense
//! indices in `0..C(n+k-1, k)`. Values are filled in increasing order with a
//! bucket queue: cop nodes (minimizer) are labeled by their first settled
//! successor, robber nodes (maximizer) by a countdown of unsettled
//! successors. States never reached by the fixed point are evasion states.

use super::{GameOutcome, SolverBudget, SolverError};
use crate::graph::{Graph, VertexId};

const UNLABELED: u16 = u16::MAX;

/// Exact optimal capture time for `k` cops, or `Evasion` when the robber can
/// avoid capture forever.
pub fn capture_time(g: &Graph, k: u32, budget: &SolverBudget) -> Result<GameOutcome, SolverError> {
    let n = g.n();
    if k < 1 || k as usize > n {
        return Err(SolverError::BadK { k, n });
    }
    g.check_connected()?;
    let space = StateSpace::build(g, k as usize, budget)?;
    let f = space.solve();

    // Placement minimax: cops choose the multiset, the robber best-responds.
    let mut best: Option<u32> = None;
    'outer: for p in 0..space.m {
        let tuple = space.tuple(p);
        let mut worst: u32 = 0;
        for r in 0..n {
            if tuple.contains(&(r as VertexId)) {
                continue;
            }
            let v = f[p * n + r];
            if v == UNLABELED {
                continue 'outer; // this placement lets the robber evade
            }
            worst = worst.max(u32::from(v));
        }
        best = Some(match best {
            Some(b) => b.min(worst),
            None => worst,
        });
        if best == Some(0) {
            break;
        }
    }
    Ok(match best {
        Some(rounds) => GameOutcome::Captured { rounds },
        None => GameOutcome::Evasion,
    })
}

struct StateSpace<'a> {
    g: &'a Graph,
    n: usize,
    k: usize,
    /// Number of cop multisets.
    m: usize,
    /// All multisets as flat sorted tuples, in rank order.
    tuples: Vec<VertexId>,
    binom: Binom,
    /// Closed neighborhoods, sorted.
    closed: Vec<Vec<VertexId>>,
    /// Bits per vertex in the dedup key for successor enumeration.
    key_bits: u32,
}

impl<'a> StateSpace<'a> {
    fn build(g: &'a Graph, k: usize, budget: &SolverBudget) -> Result<Self, SolverError> {
        let n = g.n();
        let binom = Binom::new(n + k + 1, k + 1);
        let m_u64 = binom.get(n + k - 1, k);
        let states = m_u64
            .checked_mul(n as u64)
            .and_then(|v| v.checked_mul(2))
            .ok_or(SolverError::BudgetExceeded { needed: u64::MAX, budget: budget.max_states })?;
        if states > budget.max_states {
            return Err(SolverError::BudgetExceeded { needed: states, budget: budget.max_states });
        }
        let m = m_u64 as usize;
        let key_bits: u32 = if n <= 16 {
            4
        } else if n <= 256 {
            8
        } else {
            16
        };
        // within the state budget k * key_bits always fits a u128 key
        assert!(k as u32 * key_bits <= 128, "budget admits no such instance");
        let mut tuples = Vec::with_capacity(m * k);
        let mut cur = vec![0 as VertexId; k];
        loop {
            tuples.extend_from_slice(&cur);
            // odometer over non-decreasing tuples
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if (cur[i] as usize) < n - 1 {
                    cur[i] += 1;
                    for j in i + 1..k {
                        cur[j] = cur[i];
                    }
                    break;
                }
                if i == 0 {
                    return Ok(StateSpace {
                        g,
                        n,
                        k,
                        m,
                        tuples,
                        binom,
                        closed: closed_neighborhoods(g),
                        key_bits,
                    });
                }
            }
        }
    }

    fn tuple(&self, rank: usize) -> &[VertexId] {
        &self.tuples[rank * self.k..(rank + 1) * self.k]
    }

    fn rank(&self, tuple: &[VertexId]) -> usize {
        let mut r = 0u64;
        for (i, &p) in tuple.iter().enumerate() {
            r += self.binom.get(p as usize + i, i + 1);
        }
        r as usize
    }

    /// All multisets reachable by one simultaneous cop move. The move
    /// relation is symmetric, so this also enumerates predecessors.
    fn multiset_moves(&self, tuple: &[VertexId], out: &mut Vec<usize>) {
        let mut level: Vec<u128> = vec![0];
        let mut next: Vec<u128> = Vec::new();
        let bits = self.key_bits;
        for (i, &p) in tuple.iter().enumerate() {
            next.clear();
            for &key in &level {
                for &w in &self.closed[p as usize] {
                    next.push(insert_key(key, i, w, bits));
                }
            }
            next.sort_unstable();
            next.dedup();
            std::mem::swap(&mut level, &mut next);
        }
        out.clear();
        let mut buf = vec![0 as VertexId; self.k];
        for &key in &level {
            decode_key(key, self.k, bits, &mut buf);
            out.push(self.rank(&buf));
        }
    }

    /// Retrograde sweep; returns the value of every (multiset, robber) pair
    /// at the cop-to-move point, `UNLABELED` meaning evasion.
    fn solve(&self) -> Vec<u16> {
        let n = self.n;
        let m = self.m;
        let mut f = vec![UNLABELED; m * n];
        // countdown of unsettled robber moves; 0 marks dead or settled
        let mut rcount = vec![0u16; m * n];
        let mut buckets: Vec<Vec<u64>> = vec![Vec::new(), Vec::new()];
        const C_NODE: u64 = 0;
        const R_NODE: u64 = 1 << 63;

        for p in 0..m {
            let tuple = self.tuple(p);
            for r in 0..n {
                let rv = r as VertexId;
                if tuple.binary_search(&rv).is_ok() {
                    continue; // robber on a cop: not a live state
                }
                let idx = p * n + r;
                let free = self.closed[r]
                    .iter()
                    .filter(|w| tuple.binary_search(w).is_err())
                    .count();
                rcount[idx] = free as u16;
                let can_capture = tuple
                    .iter()
                    .any(|&c| c == rv || self.g.has_edge(c, rv));
                if can_capture {
                    f[idx] = 1;
                    buckets[1].push(C_NODE | idx as u64);
                }
            }
        }

        let mut moves_buf: Vec<usize> = Vec::new();
        let mut level = 1usize;
        while level < buckets.len() {
            let mut head = 0;
            while head < buckets[level].len() {
                let item = buckets[level][head];
                head += 1;
                let idx = (item & !(R_NODE)) as usize;
                let p = idx / n;
                let r = idx % n;
                if item & R_NODE == 0 {
                    // cop node settled at `level`: robber predecessors lose
                    // one unsettled option; the last one settles the max.
                    for &r0 in &self.closed[r] {
                        let jdx = p * n + r0 as usize;
                        if rcount[jdx] > 0 {
                            rcount[jdx] -= 1;
                            if rcount[jdx] == 0 {
                                buckets[level].push(R_NODE | jdx as u64);
                            }
                        }
                    }
                } else {
                    // robber node settled at `level`: cop predecessors that
                    // are still open get min-labeled at level + 1.
                    let val = level as u16 + 1;
                    self.multiset_moves(self.tuple(p), &mut moves_buf);
                    if buckets.len() <= level + 1 {
                        buckets.push(Vec::new());
                    }
                    let rv = r as VertexId;
                    let moves = std::mem::take(&mut moves_buf);
                    for &p0 in &moves {
                        let kdx = p0 * n + r;
                        if f[kdx] == UNLABELED
                            && self.tuple(p0).binary_search(&rv).is_err()
                        {
                            f[kdx] = val;
                            buckets[level + 1].push(C_NODE | kdx as u64);
                        }
                    }
                    moves_buf = moves;
                }
            }
            buckets[level] = Vec::new();
            level += 1;
        }
        f
    }
}

fn closed_neighborhoods(g: &Graph) -> Vec<Vec<VertexId>> {
    g.vertices()
        .map(|v| {
            let mut nb: Vec<VertexId> = g.neighbors(v).to_vec();
            nb.push(v);
            nb.sort_unstable();
            nb
        })
        .collect()
}

/// Inserts `v` into a packed non-decreasing tuple of `len` vertices.
fn insert_key(key: u128, len: usize, v: VertexId, bits: u32) -> u128 {
    let mask = (1u128 << bits) - 1;
    let mut out = 0u128;
    let mut shift = 0u32;
    let mut placed = false;
    let mut k = key;
    for _ in 0..len {
        let x = (k & mask) as u32;
        k >>= bits;
        if !placed && v < x {
            out |= (v as u128) << shift;
            shift += bits;
            placed = true;
        }
        out |= (x as u128) << shift;
        shift += bits;
    }
    if !placed {
        out |= (v as u128) << shift;
    }
    out
}

fn decode_key(key: u128, k: usize, bits: u32, out: &mut [VertexId]) {
    let mask = (1u128 << bits) - 1;
    let mut kk = key;
    for slot in out.iter_mut().take(k) {
        *slot = (kk & mask) as u32;
        kk >>= bits;
    }
}
