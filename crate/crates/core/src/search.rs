//! Single-variable-move ascent engines.
//!
//! A move sets one variable to one of the values the landscape lists as
//! reachable from its current value ([`Landscape::move_targets`]). Steepest
//! ascent takes the move with the largest strictly positive gain; ties among
//! maximal moves are resolved by a [`TieBreakPolicy`].

use std::io::Write;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fitness::Fitness;

/// A fitness landscape over fixed-length states of small domain values.
pub trait Landscape {
    fn num_variables(&self) -> usize;

    fn domain_size(&self, var: usize) -> u8;

    /// Values variable `var` may move to from `current` in one step.
    fn move_targets(&self, var: usize, current: u8) -> &[u8];

    fn fitness(&self, state: &[u8]) -> Fitness;

    /// `fitness(state[var -> value]) - fitness(state)`.
    fn delta(&self, state: &[u8], var: usize, value: u8) -> Fitness {
        let mut next = state.to_vec();
        next[var] = value;
        &self.fitness(&next) - &self.fitness(state)
    }

    fn validate(&self, state: &[u8]) -> Result<()> {
        if state.len() != self.num_variables() {
            return Err(Error::DimensionMismatch {
                expected: self.num_variables(),
                got: state.len(),
            });
        }
        for (var, &v) in state.iter().enumerate() {
            if v >= self.domain_size(var) {
                return Err(Error::invalid(format!("value {v} of variable {var} outside its domain")));
            }
        }
        Ok(())
    }
}

/// Digits of a state, variable 0 first.
pub fn format_digits(state: &[u8]) -> String {
    state.iter().map(|v| char::from_digit(*v as u32, 36).unwrap_or('?')).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreakPolicy {
    /// Smallest variable index, then smallest target value.
    LowestIndex,
    /// Report a [`Error::Tie`] instead of choosing.
    #[default]
    FailOnTie,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flip {
    pub var: usize,
    pub from: u8,
    pub to: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub state: Vec<u8>,
    pub fitness: Fitness,
    /// `None` for the start record.
    pub flipped: Option<Flip>,
    pub delta: Fitness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Terminal {
    LocalOptimum,
    BudgetExhausted,
}

impl Terminal {
    pub fn as_str(self) -> &'static str {
        match self {
            Terminal::LocalOptimum => "local-optimum",
            Terminal::BudgetExhausted => "budget-exhausted",
        }
    }
}

/// Visited states of one run; the first record is the start state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscentTrace {
    pub steps: Vec<TraceStep>,
    pub terminal: Terminal,
}

impl AscentTrace {
    /// Number of moves made.
    pub fn num_steps(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn states(&self) -> impl Iterator<Item = &[u8]> {
        self.steps.iter().map(|s| s.state.as_slice())
    }

    pub fn final_state(&self) -> &[u8] {
        &self.steps.last().expect("trace always holds the start").state
    }

    pub fn final_fitness(&self) -> &Fitness {
        &self.steps.last().expect("trace always holds the start").fitness
    }

    /// Re-checks the trace against `landscape`: strictly increasing fitness,
    /// one variable changed per step, recorded values exact, and (when
    /// `steepest`) every move attaining the maximal gain at its state.
    pub fn check<L: Landscape + ?Sized>(&self, landscape: &L, steepest: bool) -> std::result::Result<(), String> {
        for (i, w) in self.steps.windows(2).enumerate() {
            let (prev, next) = (&w[0], &w[1]);
            let flip = next.flipped.ok_or_else(|| format!("step {} has no move", i + 1))?;
            let changed: Vec<usize> = (0..prev.state.len()).filter(|&v| prev.state[v] != next.state[v]).collect();
            if changed != [flip.var] {
                return Err(format!("step {} changes variables {changed:?}", i + 1));
            }
            if !next.delta.is_positive() {
                return Err(format!("step {} has non-positive gain {}", i + 1, next.delta));
            }
            if landscape.fitness(&next.state) != next.fitness || &next.fitness - &prev.fitness != next.delta {
                return Err(format!("step {} records inexact fitness", i + 1));
            }
            if steepest {
                if let Some((best, _)) = best_moves(landscape, &prev.state) {
                    if best != next.delta {
                        return Err(format!("step {} gains {} but {} was available", i + 1, next.delta, best));
                    }
                }
            }
        }
        Ok(())
    }

    /// Writes `step,flipped_variable,delta,fitness,state`, one row per record.
    pub fn write_csv<W: Write>(&self, out: W, format_state: impl Fn(&[u8]) -> String) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["step", "flipped_variable", "delta", "fitness", "state"])
            .map_err(csv_err)?;
        for (i, s) in self.steps.iter().enumerate() {
            let var = s.flipped.map(|f| f.var.to_string()).unwrap_or_default();
            w.write_record([
                i.to_string(),
                var,
                s.delta.to_string(),
                s.fitness.to_string(),
                format_state(&s.state),
            ])
            .map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

/// Maximal strictly positive gain at `state` and every move attaining it,
/// in (variable, value) order. `None` when nothing improves.
pub fn best_moves<L: Landscape + ?Sized>(landscape: &L, state: &[u8]) -> Option<(Fitness, Vec<(usize, u8)>)> {
    let mut best: Option<(Fitness, Vec<(usize, u8)>)> = None;
    for var in 0..state.len() {
        for &to in landscape.move_targets(var, state[var]) {
            let d = landscape.delta(state, var, to);
            if !d.is_positive() {
                continue;
            }
            match &mut best {
                Some((b, moves)) if *b == d => moves.push((var, to)),
                Some((b, _)) if *b > d => {}
                _ => best = Some((d, vec![(var, to)])),
            }
        }
    }
    best
}

/// Every strictly improving move at `state` with its gain.
pub fn improving_moves<L: Landscape + ?Sized>(landscape: &L, state: &[u8]) -> Vec<(usize, u8, Fitness)> {
    let mut out = Vec::new();
    for var in 0..state.len() {
        for &to in landscape.move_targets(var, state[var]) {
            let d = landscape.delta(state, var, to);
            if d.is_positive() {
                out.push((var, to, d));
            }
        }
    }
    out
}

pub fn is_local_maximum<L: Landscape + ?Sized>(landscape: &L, state: &[u8]) -> Result<bool> {
    landscape.validate(state)?;
    Ok(best_moves(landscape, state).is_none())
}

fn start_trace<L: Landscape + ?Sized>(landscape: &L, start: &[u8]) -> Result<Vec<TraceStep>> {
    landscape.validate(start)?;
    Ok(vec![TraceStep {
        state: start.to_vec(),
        fitness: landscape.fitness(start),
        flipped: None,
        delta: Fitness::zero(),
    }])
}

fn push_move(steps: &mut Vec<TraceStep>, var: usize, to: u8, delta: Fitness) {
    let prev = steps.last().expect("non-empty trace");
    let mut state = prev.state.clone();
    let from = state[var];
    state[var] = to;
    let fitness = &prev.fitness + &delta;
    steps.push(TraceStep {
        state,
        fitness,
        flipped: Some(Flip { var, from, to }),
        delta,
    });
}

/// Steepest ascent from `start` for at most `max_steps` moves.
pub fn steepest_ascent<L: Landscape + ?Sized>(
    landscape: &L,
    start: &[u8],
    policy: TieBreakPolicy,
    max_steps: usize,
) -> Result<AscentTrace> {
    let mut steps = start_trace(landscape, start)?;
    loop {
        let current = &steps.last().expect("non-empty trace").state;
        let Some((gain, moves)) = best_moves(landscape, current) else {
            return Ok(AscentTrace {
                steps,
                terminal: Terminal::LocalOptimum,
            });
        };
        if steps.len() > max_steps {
            return Ok(AscentTrace {
                steps,
                terminal: Terminal::BudgetExhausted,
            });
        }
        if moves.len() > 1 && policy == TieBreakPolicy::FailOnTie {
            return Err(Error::Tie {
                state: format_digits(current),
                moves,
            });
        }
        let (var, to) = moves[0];
        push_move(&mut steps, var, to, gain);
    }
}

/// Ascent taking the first improving move found when scanning variables in
/// a freshly shuffled order each step (target values in ascending order).
pub fn first_improvement_ascent<L: Landscape + ?Sized>(
    landscape: &L,
    start: &[u8],
    seed: u64,
    max_steps: usize,
) -> Result<AscentTrace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = start_trace(landscape, start)?;
    let mut order: Vec<usize> = (0..landscape.num_variables()).collect();
    loop {
        order.shuffle(&mut rng);
        let current = &steps.last().expect("non-empty trace").state;
        let found = order.iter().find_map(|&var| {
            landscape.move_targets(var, current[var]).iter().find_map(|&to| {
                let d = landscape.delta(current, var, to);
                d.is_positive().then_some((var, to, d))
            })
        });
        let Some((var, to, gain)) = found else {
            return Ok(AscentTrace {
                steps,
                terminal: Terminal::LocalOptimum,
            });
        };
        if steps.len() > max_steps {
            return Ok(AscentTrace {
                steps,
                terminal: Terminal::BudgetExhausted,
            });
        }
        push_move(&mut steps, var, to, gain);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vcsp::{SoftConstraint, VcspInstance};

    fn unary(values: Vec<i64>) -> VcspInstance {
        let d = values.len() as u8;
        VcspInstance::new(vec![d], vec![SoftConstraint::new(vec![0], Fitness::from(1), values)]).unwrap()
    }

    #[test]
    fn climbs_to_the_top_of_a_unary_table() {
        let inst = unary(vec![0, 5, 3, 9]);
        let t = steepest_ascent(&inst, &[0], TieBreakPolicy::FailOnTie, 10).unwrap();
        assert_eq!(t.num_steps(), 1);
        assert_eq!(t.final_state(), &[3]);
        assert_eq!(t.terminal, Terminal::LocalOptimum);
        t.check(&inst, true).unwrap();
    }

    #[test]
    fn local_maximum_start_gives_empty_trace() {
        let inst = unary(vec![0, 5, 3, 9]);
        let t = steepest_ascent(&inst, &[3], TieBreakPolicy::FailOnTie, 10).unwrap();
        assert_eq!(t.num_steps(), 0);
        assert_eq!(t.terminal, Terminal::LocalOptimum);
        let f = first_improvement_ascent(&inst, &[3], 1, 10).unwrap();
        assert_eq!(f.num_steps(), 0);
    }

    #[test]
    fn ties_fail_or_pick_lowest() {
        let inst = unary(vec![0, 4, 4]);
        match steepest_ascent(&inst, &[0], TieBreakPolicy::FailOnTie, 5) {
            Err(Error::Tie { moves, .. }) => assert_eq!(moves, vec![(0, 1), (0, 2)]),
            other => panic!("expected tie, got {other:?}"),
        }
        let t = steepest_ascent(&inst, &[0], TieBreakPolicy::LowestIndex, 5).unwrap();
        assert_eq!(t.final_state(), &[1]);
    }

    #[test]
    fn zero_budget_stops_immediately() {
        let inst = unary(vec![0, 5]);
        let t = steepest_ascent(&inst, &[0], TieBreakPolicy::FailOnTie, 0).unwrap();
        assert_eq!(t.num_steps(), 0);
        assert_eq!(t.terminal, Terminal::BudgetExhausted);
        let t = steepest_ascent(&inst, &[0], TieBreakPolicy::FailOnTie, 1).unwrap();
        assert_eq!(t.terminal, Terminal::LocalOptimum);
    }

    #[test]
    fn invalid_start_is_rejected() {
        let inst = unary(vec![0, 5]);
        assert!(steepest_ascent(&inst, &[0, 0], TieBreakPolicy::FailOnTie, 1).is_err());
        assert!(steepest_ascent(&inst, &[2], TieBreakPolicy::FailOnTie, 1).is_err());
        assert!(is_local_maximum(&inst, &[7]).is_err());
    }

    #[test]
    fn all_zero_tables_are_everywhere_locally_maximal() {
        let inst = VcspInstance::new(
            vec![2, 2, 3],
            vec![SoftConstraint::new(vec![0, 2], Fitness::from(5), vec![0; 6])],
        )
        .unwrap();
        for s in [[0, 0, 0], [1, 1, 2], [0, 1, 1]] {
            assert!(is_local_maximum(&inst, &s).unwrap());
        }
    }

    #[test]
    fn csv_export_layout() {
        let inst = unary(vec![0, 5, 3, 9]);
        let t = steepest_ascent(&inst, &[0], TieBreakPolicy::FailOnTie, 10).unwrap();
        let mut buf = Vec::new();
        t.write_csv(&mut buf, format_digits).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "step,flipped_variable,delta,fitness,state\n0,,0,0,0\n1,0,9,9,3\n"
        );
    }
}
