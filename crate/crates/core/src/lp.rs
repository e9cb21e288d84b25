//! Exact rational LP feasibility: phase-1 simplex with Bland's rule, which
//! guarantees termination without any degeneracy handling.

use crate::zlinalg::RatVector;
use crate::Rat;
use num_traits::{Signed, Zero};

/// Decides whether `{x ≥ 0 : A x = b}` is nonempty, exactly.
///
/// `a` holds the rows of `A`; all arithmetic is rational.
pub(crate) fn nonneg_solution_exists(a: &[RatVector], b: &[Rat]) -> bool {
    let m = a.len();
    assert_eq!(b.len(), m);
    let n = a.first().map_or(0, |r| r.len());
    if m == 0 {
        return true;
    }

    // Tableau rows: [original columns | artificial columns | rhs],
    // normalized so that rhs ≥ 0. Basis starts as the artificials.
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut r: Vec<Rat> = Vec::with_capacity(n + m + 1);
        for v in row.entries() {
            r.push(if flip { -v } else { v.clone() });
        }
        for j in 0..m {
            r.push(if i == j { Rat::from_integer(1.into()) } else { Rat::zero() });
        }
        r.push(if flip { -&b[i] } else { b[i].clone() });
        tab.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase-1 objective: minimize the sum of artificials. Reduced costs
    // start as −Σ rows on the original columns, 0 on artificials.
    let mut cost = vec![Rat::zero(); n + m + 1];
    for row in &tab {
        for (c, v) in cost.iter_mut().zip(row.iter()) {
            *c -= v;
        }
    }
    for j in n..n + m {
        cost[j] = Rat::zero();
    }

    loop {
        // Bland: entering = lowest-index column with negative reduced cost.
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        // Ratio test; ties broken by lowest basis variable (Bland).
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = row[n + m].clone() / row[enter].clone();
                let better = match &best {
                    None => true,
                    Some(r) => ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else {
            // Unbounded direction in phase 1 cannot happen (objective is
            // bounded below by 0), but guard anyway.
            return false;
        };
        // Pivot on (l, enter).
        let pivot = tab[l][enter].clone();
        for v in tab[l].iter_mut() {
            *v = &*v / &pivot;
        }
        for i in 0..m {
            if i != l && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for j in 0..n + m + 1 {
                    let v = &tab[i][j] - &f * &tab[l][j];
                    tab[i][j] = v;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for j in 0..n + m + 1 {
                let v = &cost[j] - &f * &tab[l][j];
                cost[j] = v;
            }
        }
        basis[l] = enter;
    }

    // Feasible iff the phase-1 optimum is 0, i.e. every basic artificial
    // sits at level 0.
    tab.iter()
        .enumerate()
        .all(|(i, row)| basis[i] < n || row[n + m].is_zero())
}
