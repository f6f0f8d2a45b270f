use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::fitness::Fitness;
use crate::search::Landscape;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub states: u64,
    /// States with no strictly improving single-variable move.
    pub local_maxima: u64,
    pub global_max: Fitness,
    pub worst_local_max: Fitness,
}

#[derive(Default)]
struct Partial {
    states: u64,
    local_maxima: u64,
    global_max: Option<Fitness>,
    worst_local_max: Option<Fitness>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.states += other.states;
        self.local_maxima += other.local_maxima;
        self.global_max = max_opt(self.global_max, other.global_max);
        self.worst_local_max = match (self.worst_local_max, other.worst_local_max) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

fn max_opt(a: Option<Fitness>, b: Option<Fitness>) -> Option<Fitness> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.max(b)),
        (a, b) => a.or(b),
    }
}

/// Number of states of `landscape`, `None` past `u64`.
pub fn state_count<L: Landscape + ?Sized>(landscape: &L) -> Option<u64> {
    (0..landscape.num_variables()).try_fold(1u64, |acc, v| acc.checked_mul(landscape.domain_size(v) as u64))
}

/// The `index`-th state in mixed radix, variable 0 least significant.
pub fn state_at<L: Landscape + ?Sized>(landscape: &L, mut index: u64, out: &mut [u8]) {
    for (v, slot) in out.iter_mut().enumerate() {
        let d = landscape.domain_size(v) as u64;
        *slot = (index % d) as u8;
        index /= d;
    }
}

/// Exhaustive census of local maxima under the landscape's moves.
pub fn local_optima_census<L: Landscape + Sync + ?Sized>(
    landscape: &L,
    max_states: u64,
    exec: Execution,
) -> Result<Census> {
    let total = state_count(landscape).filter(|&t| t <= max_states).ok_or_else(|| Error::Capacity {
        states: (0..landscape.num_variables())
            .map(|v| landscape.domain_size(v) as u128)
            .fold(1u128, u128::saturating_mul),
        limit: max_states as u128,
    })?;
    let n = landscape.num_variables();
    let chunks = exec.fold_chunks(total, 4096, Partial::default, |acc, idx| {
        let mut state = vec![0u8; n];
        state_at(landscape, idx, &mut state);
        let f = landscape.fitness(&state);
        acc.states += 1;
        let is_max = (0..n).all(|v| {
            landscape
                .move_targets(v, state[v])
                .iter()
                .all(|&to| !landscape.delta(&state, v, to).is_positive())
        });
        if is_max {
            acc.local_maxima += 1;
            acc.worst_local_max = Some(match acc.worst_local_max.take() {
                Some(w) => w.min(f.clone()),
                None => f.clone(),
            });
        }
        acc.global_max = max_opt(acc.global_max.take(), Some(f));
    });
    let merged = chunks.into_iter().fold(Partial::default(), Partial::merge);
    Ok(Census {
        states: merged.states,
        local_maxima: merged.local_maxima,
        global_max: merged.global_max.unwrap_or_default(),
        worst_local_max: merged
            .worst_local_max
            .expect("a finite landscape has at least one local maximum"),
    })
}
