//! The inequality chains that make every rule improving and resolve rule
//! conflicts, evaluated from the shipped tables.

use std::fmt;

use crate::fitness::Fitness;
use crate::landscapes::{make_counting_symbol_instance_with, CountingTables, Symbol, SymbolState};
use crate::reference_rules::admissible::is_admissible;
use crate::reference_rules::rules::{matching_rules, RuleId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Less,
    LessOrEqual,
}

impl Relation {
    fn holds(self, a: i64, b: i64) -> bool {
        match self {
            Relation::Less => a < b,
            Relation::LessOrEqual => a <= b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::LessOrEqual => "<=",
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Lookup {
    F(Symbol, Symbol),
    H(Symbol),
}

/// Weighted sum of table lookups.
type Term = Vec<(i64, Lookup)>;

/// One chain `t_0 R t_1 R ... t_k`, evaluated for one choice of the free
/// symbol `a` (when the chain has one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCheck {
    pub label: String,
    pub a: Option<Symbol>,
    pub computed: Vec<i64>,
    pub expected: Vec<i64>,
    pub relations: Vec<Relation>,
}

impl ChainCheck {
    pub fn ordered(&self) -> bool {
        self.computed
            .windows(2)
            .zip(&self.relations)
            .all(|(w, r)| r.holds(w[0], w[1]))
    }

    pub fn matches_expected(&self) -> bool {
        self.computed == self.expected
    }

    pub fn holds(&self) -> bool {
        self.ordered() && self.matches_expected()
    }
}

impl ChainCheck {
    /// The computed chain, e.g. `22 < 23 < 24`.
    pub fn values(&self) -> String {
        let mut out = self.computed[0].to_string();
        for (v, r) in self.computed[1..].iter().zip(&self.relations) {
            out.push_str(&format!(" {} {v}", r.symbol()));
        }
        out
    }
}

impl fmt::Display for ChainCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if let Some(a) = self.a {
            write!(f, " [a={a}]")?;
        }
        write!(f, ": {}", self.values())
    }
}

/// A concrete state where rule 1a competes with another rule: 1a must gain
/// exactly 1 and every other applicable rule at least `4^(r-1)`, `r` being
/// the length of the trailing zero run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictCheck {
    pub state: SymbolState,
    pub trailing_zeros: usize,
    pub gains: Vec<(RuleId, Fitness)>,
}

impl ConflictCheck {
    pub fn holds(&self) -> bool {
        let floor = Fitness::pow(4, self.trailing_zeros as u32 - 1);
        let mut saw_increment = false;
        let mut saw_other = false;
        for (rule, gain) in &self.gains {
            if *rule == RuleId::R1a {
                saw_increment = true;
                if *gain != Fitness::from(1) {
                    return false;
                }
            } else {
                saw_other = true;
                if *gain < floor {
                    return false;
                }
            }
        }
        saw_increment && saw_other
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArithmeticReport {
    pub chains: Vec<ChainCheck>,
    pub conflicts: Vec<ConflictCheck>,
}

impl ArithmeticReport {
    pub fn all_hold(&self) -> bool {
        self.chains.iter().all(ChainCheck::holds) && self.conflicts.iter().all(ConflictCheck::holds)
    }
}

fn eval(tables: &CountingTables, term: &Term) -> i64 {
    term.iter()
        .map(|(w, l)| {
            w * match *l {
                Lookup::F(x, y) => tables.f(x, y),
                Lookup::H(s) => tables.h(s),
            }
        })
        .sum()
}

struct ChainSpec {
    label: &'static str,
    uses_a: bool,
    terms: fn(Symbol) -> Vec<Term>,
    expected: &'static [i64],
    relations: &'static [Relation],
}

fn chain_specs() -> Vec<ChainSpec> {
    use Lookup::{F, H};
    use Relation::{Less as Lt, LessOrEqual as Le};
    use Symbol::*;
    vec![
        ChainSpec {
            label: "rules 1a/1b/2a/2b on the last symbol",
            uses_a: true,
            terms: |a| {
                [Zero, I01, One, I1C, Carry]
                    .into_iter()
                    .map(|s| vec![(1, F(a, s)), (1, H(s))])
                    .collect()
            },
            expected: &[0, 1, 4, 5, 6],
            relations: &[Lt, Lt, Lt, Lt],
        },
        ChainSpec {
            label: "rules 3a/3b",
            uses_a: true,
            terms: |a| {
                vec![
                    vec![(4, F(a, One)), (1, F(One, Carry))],
                    vec![(4, F(a, I1C)), (1, F(I1C, Carry))],
                    vec![(4, F(a, Carry)), (1, F(Carry, Carry))],
                ]
            },
            expected: &[22, 23, 24],
            relations: &[Lt, Lt],
        },
        ChainSpec {
            label: "rules 4a/4b",
            uses_a: true,
            terms: |a| {
                vec![
                    vec![(4, F(a, Zero)), (1, F(Zero, Carry))],
                    vec![(4, F(a, I0X)), (1, F(I0X, Carry))],
                    vec![(4, F(a, X)), (1, F(X, Carry))],
                ]
            },
            expected: &[6, 7, 8],
            relations: &[Lt, Lt],
        },
        ChainSpec {
            label: "rules 6a/6b, zero suffix",
            uses_a: false,
            terms: |_| {
                vec![
                    vec![(4, F(X, Carry)), (1, F(Carry, Zero))],
                    vec![(4, F(X, IC0)), (1, F(IC0, Zero))],
                    vec![(4, F(X, Zero)), (1, F(Zero, Zero))],
                ]
            },
            expected: &[45, 48, 52],
            relations: &[Lt, Lt],
        },
        ChainSpec {
            label: "rules 6a/6b, empty suffix",
            uses_a: false,
            terms: |_| vec![vec![(1, F(X, Carry))], vec![(1, F(X, IC0))], vec![(1, F(X, Zero))]],
            expected: &[8, 12, 13],
            relations: &[Lt, Lt],
        },
        ChainSpec {
            label: "rules 5a/5b, zero suffix",
            uses_a: false,
            terms: |_| {
                vec![
                    vec![(4, F(Carry, Carry)), (1, F(Carry, Zero))],
                    vec![(4, F(Carry, IC0)), (1, F(IC0, Zero))],
                    vec![(4, F(Carry, Zero)), (1, F(Zero, Zero))],
                ]
            },
            expected: &[13, 32, 52],
            relations: &[Lt, Lt],
        },
        ChainSpec {
            label: "rules 5a/5b, empty suffix",
            uses_a: false,
            terms: |_| {
                vec![
                    vec![(1, F(Carry, Carry))],
                    vec![(1, F(Carry, IC0))],
                    vec![(1, F(Carry, Zero))],
                ]
            },
            expected: &[0, 8, 13],
            relations: &[Lt, Lt],
        },
        ChainSpec {
            label: "rules 7a/7b",
            uses_a: true,
            terms: |a| {
                vec![
                    vec![(4, F(a, X)), (1, F(X, Zero))],
                    vec![(4, F(a, IX1)), (1, F(IX1, Zero))],
                    vec![(4, F(a, One)), (1, F(One, Zero))],
                ]
            },
            expected: &[13, 14, 16],
            relations: &[Lt, Le],
        },
        ChainSpec {
            label: "3a against 5a, zero suffix",
            uses_a: true,
            terms: |a| {
                vec![
                    vec![(64, F(a, I1C)), (16, F(I1C, Carry)), (4, F(Carry, Carry)), (1, F(Carry, Zero))],
                    vec![(64, F(a, One)), (16, F(One, Carry)), (4, F(Carry, IC0)), (1, F(IC0, Zero))],
                ]
            },
            expected: &[381, 384],
            relations: &[Lt],
        },
        ChainSpec {
            label: "3a against 5a, empty suffix",
            uses_a: true,
            terms: |a| {
                vec![
                    vec![(16, F(a, I1C)), (4, F(I1C, Carry)), (1, F(Carry, Carry))],
                    vec![(16, F(a, One)), (4, F(One, Carry)), (1, F(Carry, IC0))],
                ]
            },
            expected: &[92, 96],
            relations: &[Lt],
        },
        ChainSpec {
            label: "3a against 5b, zero suffix",
            uses_a: true,
            terms: |a| {
                vec![
                    vec![(64, F(a, I1C)), (16, F(I1C, Carry)), (4, F(Carry, IC0)), (1, F(IC0, Zero))],
                    vec![(64, F(a, One)), (16, F(One, Carry)), (4, F(Carry, Zero)), (1, F(Zero, Zero))],
                ]
            },
            expected: &[400, 404],
            relations: &[Lt],
        },
        ChainSpec {
            label: "3a against 5b, empty suffix",
            uses_a: true,
            terms: |a| {
                vec![
                    vec![(16, F(a, I1C)), (4, F(I1C, Carry)), (1, F(Carry, IC0))],
                    vec![(16, F(a, One)), (4, F(One, Carry)), (1, F(Carry, Zero))],
                ]
            },
            expected: &[100, 101],
            relations: &[Lt],
        },
        ChainSpec {
            label: "4a against 5a, zero suffix",
            uses_a: true,
            terms: |a| {
                vec![
                    vec![(64, F(a, I0X)), (16, F(I0X, Carry)), (4, F(Carry, Carry)), (1, F(Carry, Zero))],
                    vec![(64, F(a, Zero)), (16, F(Zero, Carry)), (4, F(Carry, IC0)), (1, F(IC0, Zero))],
                ]
            },
            expected: &[125, 128],
            relations: &[Lt],
        },
        ChainSpec {
            label: "4a against 5a, empty suffix",
            uses_a: true,
            terms: |a| {
                vec![
                    vec![(16, F(a, I0X)), (4, F(I0X, Carry)), (1, F(Carry, Carry))],
                    vec![(16, F(a, Zero)), (4, F(Zero, Carry)), (1, F(Carry, IC0))],
                ]
            },
            expected: &[28, 32],
            relations: &[Lt],
        },
        ChainSpec {
            label: "4a against 5b, zero suffix",
            uses_a: true,
            terms: |a| {
                vec![
                    vec![(64, F(a, I0X)), (16, F(I0X, Carry)), (4, F(Carry, IC0)), (1, F(IC0, Zero))],
                    vec![(64, F(a, Zero)), (16, F(Zero, Carry)), (4, F(Carry, Zero)), (1, F(Zero, Zero))],
                ]
            },
            expected: &[144, 148],
            relations: &[Lt],
        },
        ChainSpec {
            label: "4a against 5b, empty suffix",
            uses_a: true,
            terms: |a| {
                vec![
                    vec![(16, F(a, I0X)), (4, F(I0X, Carry)), (1, F(Carry, IC0))],
                    vec![(16, F(a, Zero)), (4, F(Zero, Carry)), (1, F(Carry, Zero))],
                ]
            },
            expected: &[36, 37],
            relations: &[Lt],
        },
    ]
}

/// Cores (written order) that can compete with rule 1a once followed by at
/// least two zeros.
const CONFLICT_CORES: [&str; 12] = [
    "0 C", "1 C", "X", "iX1", "0 C C", "1 C C", "X C", "0 C iC0", "1 C iC0", "i1C C", "i0X C", "X iC0",
];

/// Evaluates every chain for `a` in {0, 1} and every rule-1a conflict on
/// the admissible states built from a core, a prefix of length one or two
/// and two or three trailing zeros.
pub fn verify_rule_arithmetic_with(tables: &CountingTables) -> ArithmeticReport {
    let mut chains = Vec::new();
    for spec in chain_specs() {
        let choices: &[Option<Symbol>] = if spec.uses_a {
            &[Some(Symbol::Zero), Some(Symbol::One)]
        } else {
            &[None]
        };
        for &a in choices {
            let terms = (spec.terms)(a.unwrap_or(Symbol::Zero));
            chains.push(ChainCheck {
                label: spec.label.to_string(),
                a,
                computed: terms.iter().map(|t| eval(tables, t)).collect(),
                expected: spec.expected.to_vec(),
                relations: spec.relations.to_vec(),
            });
        }
    }

    let mut conflicts = Vec::new();
    // the chains all assume a left neighbour `a`; the top position is
    // covered by the lockstep and closure oracles
    let prefixes = ["0", "1", "0 0", "0 1", "1 0", "1 1"];
    for core in CONFLICT_CORES {
        for prefix in prefixes {
            for r in 2..=3 {
                let text = format!("{prefix} {core} {}", vec!["0"; r].join(" "));
                let state: SymbolState = text.parse().expect("well-formed conflict state");
                if !is_admissible(&state) {
                    continue;
                }
                let inst = make_counting_symbol_instance_with(state.len(), tables).expect("length >= 2");
                let values = state.to_values();
                let base = inst.evaluate(&values).expect("valid symbol state");
                let gains = matching_rules(&state)
                    .into_iter()
                    .map(|app| {
                        let next = app.apply(&state).to_values();
                        (app.rule, &inst.evaluate(&next).expect("valid symbol state") - &base)
                    })
                    .collect();
                conflicts.push(ConflictCheck {
                    state,
                    trailing_zeros: r,
                    gains,
                });
            }
        }
    }
    ArithmeticReport { chains, conflicts }
}

pub fn verify_rule_arithmetic() -> ArithmeticReport {
    verify_rule_arithmetic_with(&CountingTables::standard())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_tables_satisfy_every_chain() {
        let r = verify_rule_arithmetic();
        for c in &r.chains {
            assert!(c.holds(), "{c}");
        }
        assert_eq!(r.chains.len(), 28);
    }

    #[test]
    fn named_values() {
        let r = verify_rule_arithmetic();
        let find = |label: &str| r.chains.iter().find(|c| c.label == label).unwrap().computed.clone();
        assert_eq!(find("rules 3a/3b"), vec![22, 23, 24]);
        assert_eq!(find("rules 5a/5b, empty suffix"), vec![0, 8, 13]);
        assert_eq!(find("3a against 5a, zero suffix"), vec![381, 384]);
    }

    #[test]
    fn corrupted_table_breaks_a_chain() {
        let mut t = CountingTables::standard();
        t.set_pair(Symbol::I1C, Symbol::Carry, 0);
        assert!(!verify_rule_arithmetic_with(&t).all_hold());
    }
}
