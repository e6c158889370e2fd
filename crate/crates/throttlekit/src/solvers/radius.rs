//! k-radius by exhaustive search over k-subsets with early cutoffs.

use super::psd::binomial;
use super::{SolverBudget, SolverError};
use crate::graph::Graph;

/// All-pairs BFS distance table (rows indexed by source).
pub(crate) fn all_pairs(g: &Graph) -> Vec<Vec<u32>> {
    g.vertices().map(|v| g.bfs_distances(v)).collect()
}

/// min over k-subsets D of max over v of dist(v, D).
pub fn k_radius(g: &Graph, k: u32, budget: &SolverBudget) -> Result<u32, SolverError> {
    g.check_connected()?;
    let table_cost = (g.n() as u64).saturating_mul(g.n() as u64);
    if table_cost > budget.max_states {
        return Err(SolverError::BudgetExceeded { needed: table_cost, budget: budget.max_states });
    }
    let dist = all_pairs(g);
    k_radius_with(g, k, budget, &dist)
}

pub(crate) fn k_radius_with(
    g: &Graph,
    k: u32,
    budget: &SolverBudget,
    dist: &[Vec<u32>],
) -> Result<u32, SolverError> {
    let n = g.n();
    if k < 1 || k as usize > n {
        return Err(SolverError::BadK { k, n });
    }
    let combos = binomial(n as u64, u64::from(k));
    if combos > budget.max_states {
        return Err(SolverError::BudgetExceeded { needed: combos, budget: budget.max_states });
    }
    let k = k as usize;
    if k == n {
        return Ok(0);
    }
    let mut subset: Vec<usize> = (0..k).collect();
    let mut best = u32::MAX;
    loop {
        let mut ecc = 0u32;
        for v in 0..n {
            let mut d = u32::MAX;
            for &c in &subset {
                d = d.min(dist[c][v]);
            }
            ecc = ecc.max(d);
            if ecc >= best {
                break;
            }
        }
        best = best.min(ecc);
        if best == 0 {
            break;
        }
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, FamilySpec};

    fn rad(g: &Graph, k: u32) -> u32 {
        k_radius(g, k, &SolverBudget::default()).unwrap()
    }

    #[test]
    fn every_vertex_a_center() {
        let g = generate_family(&FamilySpec::RandomTree { n: 7, seed: 1 }).unwrap();
        assert_eq!(rad(&g, 7), 0);
    }

    #[test]
    fn path_radii() {
        let p5 = generate_family(&FamilySpec::Path { n: 5 }).unwrap();
        assert_eq!(rad(&p5, 1), 2);
        let p9 = generate_family(&FamilySpec::Path { n: 9 }).unwrap();
        assert_eq!(rad(&p9, 2), 2);
    }

    #[test]
    fn brute_force_cross_check_on_p9() {
        // direct enumeration of all C(9,2) = 36 pairs as the oracle
        let g = generate_family(&FamilySpec::Path { n: 9 }).unwrap();
        let dist = all_pairs(&g);
        let mut best = u32::MAX;
        for a in 0..9 {
            for b in a + 1..9 {
                let ecc = (0..9).map(|v| dist[a][v].min(dist[b][v])).max().unwrap();
                best = best.min(ecc);
            }
        }
        assert_eq!(best, 2);
        assert_eq!(rad(&g, 2), best);
    }

    #[test]
    fn budget_on_subsets() {
        let g = generate_family(&FamilySpec::Path { n: 30 }).unwrap();
        let tight = SolverBudget { max_states: 10 };
        assert!(matches!(
            k_radius(&g, 15, &tight),
            Err(SolverError::BudgetExceeded { .. })
        ));
    }
}
