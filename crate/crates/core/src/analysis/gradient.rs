//! Gradients of Boolean landscapes and the degree bounds they imply.
//!
//! Entry `i` of the gradient at `x` is `f(x[i -> 1]) - f(x[i -> 0])`. When two
//! states differ on a variable set `S`, every gradient entry that changes
//! between them needs a constraint linking it to `S`, so the number of
//! changed entries lower-bounds the total degree of `S`.

use crate::error::{Error, Result};
use crate::fitness::Fitness;
use crate::landscapes::{StepSchedule, WindingLandscape};
use crate::search::Landscape;

fn require_boolean<L: Landscape + ?Sized>(landscape: &L) -> Result<()> {
    if (0..landscape.num_variables()).any(|v| landscape.domain_size(v) != 2) {
        return Err(Error::Unsupported("gradient needs a Boolean landscape".into()));
    }
    Ok(())
}

/// Gradient via delta evaluation.
pub fn gradient<L: Landscape + ?Sized>(landscape: &L, x: &[u8]) -> Result<Vec<Fitness>> {
    require_boolean(landscape)?;
    landscape.validate(x)?;
    Ok((0..x.len())
        .map(|i| {
            let d = landscape.delta(x, i, 1 - x[i]);
            if x[i] == 0 {
                d
            } else {
                -d
            }
        })
        .collect())
}

/// Gradient via two full evaluations per entry.
pub fn gradient_by_evaluation<L: Landscape + ?Sized>(landscape: &L, x: &[u8]) -> Result<Vec<Fitness>> {
    require_boolean(landscape)?;
    landscape.validate(x)?;
    let mut y = x.to_vec();
    Ok((0..x.len())
        .map(|i| {
            y[i] = 1;
            let hi = landscape.fitness(&y);
            y[i] = 0;
            let lo = landscape.fitness(&y);
            y[i] = x[i];
            &hi - &lo
        })
        .collect())
}

/// Number of entries where the gradients at `x` and `y` differ.
pub fn flow_change_norm<L: Landscape + ?Sized>(landscape: &L, x: &[u8], y: &[u8]) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    let gx = gradient(landscape, x)?;
    let gy = gradient(landscape, y)?;
    Ok(gx.iter().zip(&gy).filter(|(a, b)| a != b).count())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairBound {
    /// Variables on which the two states differ.
    pub differing: Vec<usize>,
    /// Flow change between the two endpoints.
    pub direct: usize,
    /// Sum of flow changes along the shortest path flipping the differing
    /// variables in ascending order; never below `direct`.
    pub chained: usize,
}

impl PairBound {
    /// Lower bound implied on the total degree of `differing`.
    pub fn implied(&self) -> usize {
        self.direct.max(self.chained)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBoundReport {
    pub pairs: Vec<PairBound>,
}

impl DegreeBoundReport {
    /// Sum of the implied bounds; a bound on the total degree of the union
    /// when the differing sets are pairwise disjoint, `None` otherwise.
    pub fn aggregate(&self) -> Option<usize> {
        let mut seen = std::collections::BTreeSet::new();
        for p in &self.pairs {
            for &v in &p.differing {
                if !seen.insert(v) {
                    return None;
                }
            }
        }
        Some(self.pairs.iter().map(PairBound::implied).sum())
    }
}

pub fn degree_bound_report<L: Landscape + ?Sized>(
    landscape: &L,
    pairs: &[(Vec<u8>, Vec<u8>)],
) -> Result<DegreeBoundReport> {
    let mut out = Vec::with_capacity(pairs.len());
    for (x, y) in pairs {
        let direct = flow_change_norm(landscape, x, y)?;
        let differing: Vec<usize> = (0..x.len()).filter(|&i| x[i] != y[i]).collect();
        let mut chained = 0;
        let mut cur = x.clone();
        let mut g_cur = gradient(landscape, &cur)?;
        for &i in &differing {
            cur[i] = y[i];
            let g_next = gradient(landscape, &cur)?;
            chained += g_cur.iter().zip(&g_next).filter(|(a, b)| a != b).count();
            g_cur = g_next;
        }
        out.push(PairBound {
            differing,
            direct,
            chained,
        });
    }
    Ok(DegreeBoundReport { pairs: out })
}

/// `(0^{2n}, 0^{2(k-1)} 11 0^{2(n-k)})` for `k = 1..=n`.
pub fn winding_peak_pairs(n: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
    (1..=n)
        .map(|k| (vec![0; 2 * n], WindingLandscape::peak_state(k, n)))
        .collect()
}

/// Predicted gradient at the origin: `[s⁺_1, s⁻_1, s⁻_2, s⁻_2, …, s⁻_n, s⁻_n]`.
pub fn origin_gradient_formula(schedule: &StepSchedule) -> Vec<Fitness> {
    let n = schedule.levels();
    let mut out = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let first = if i == 1 { schedule.plus(1) } else { schedule.minus(i) };
        out.push(first.clone());
        out.push(schedule.minus(i).clone());
    }
    out
}

/// Printed case table for the gradient at the level-`k` sub-cube peak,
/// indexed like the state (entry `2i - b` of the table lands at index
/// `2i - b - 1`). `None` where no case applies (`i = k + 1`, `b = 0`).
pub fn peak_gradient_formula(w: &WindingLandscape, k: usize) -> Vec<Option<Fitness>> {
    let s = w.schedule();
    let n = w.n();
    let mut out = vec![None; 2 * n];
    for i in 1..=n {
        for b in 0..=1usize {
            let v = if i < k {
                let plus = s.plus(i);
                let base = -plus.clone();
                Some(if b == 1 { &base + &(s.minus(i) - plus) } else { base })
            } else if i == k {
                Some(w.peak_value(k) - s.minus(k))
            } else if i == k + 1 && b == 1 {
                Some(s.plus(k + 1).clone())
            } else if i > k + b {
                Some(s.minus(i).clone())
            } else {
                None
            };
            out[2 * i - b - 1] = v;
        }
    }
    out
}

/// Count of odd table entries `2i - 1` with `i < k` whose gradient differs
/// between the origin and the level-`k` peak.
pub fn odd_entries_changed_below(w: &WindingLandscape, k: usize) -> Result<usize> {
    let n = w.n();
    let g0 = gradient(w, &vec![0; 2 * n])?;
    let gk = gradient(w, &WindingLandscape::peak_state(k, n))?;
    Ok((1..k).filter(|&i| g0[2 * i - 2] != gk[2 * i - 2]).count())
}
