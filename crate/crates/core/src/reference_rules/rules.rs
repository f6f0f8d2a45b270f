//! The fourteen transition rules and their priorities.
//!
//! Rules `1a`-`2b` rewrite the last symbol `X_1` when `X_2` is 0 or 1 (for a
//! one-symbol state the condition holds vacuously). Rules `3a`-`7b` look at an
//! adjacent pair `(X_{i+1}, X_i)` and rewrite one side of it.

use std::fmt;

use crate::error::{Error, Result};
use crate::landscapes::{Symbol, SymbolState};
use crate::reference_rules::admissible::classify;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    R1a,
    R1b,
    R2a,
    R2b,
    R3a,
    R3b,
    R4a,
    R4b,
    R5a,
    R5b,
    R6a,
    R6b,
    R7a,
    R7b,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug)]
struct RuleSpec {
    id: RuleId,
    /// `None` for last-symbol rules.
    left: Option<Symbol>,
    right: Symbol,
    rewrites: Side,
    to: Symbol,
}

const RULES: [RuleSpec; 14] = {
    use RuleId::*;
    use Side::*;
    use Symbol::*;
    const fn last(id: RuleId, from: Symbol, to: Symbol) -> RuleSpec {
        RuleSpec {
            id,
            left: None,
            right: from,
            rewrites: Right,
            to,
        }
    }
    const fn pair(id: RuleId, left: Symbol, right: Symbol, rewrites: Side, to: Symbol) -> RuleSpec {
        RuleSpec {
            id,
            left: Some(left),
            right,
            rewrites,
            to,
        }
    }
    [
        last(R1a, Zero, I01),
        last(R1b, I01, One),
        last(R2a, One, I1C),
        last(R2b, I1C, Carry),
        pair(R3a, One, Carry, Left, I1C),
        pair(R3b, I1C, Carry, Left, Carry),
        pair(R4a, Zero, Carry, Left, I0X),
        pair(R4b, I0X, Carry, Left, X),
        pair(R5a, Carry, Carry, Right, IC0),
        pair(R5b, Carry, IC0, Right, Zero),
        pair(R6a, X, Carry, Right, IC0),
        pair(R6b, X, IC0, Right, Zero),
        pair(R7a, X, Zero, Left, IX1),
        pair(R7b, IX1, Zero, Left, One),
    ]
};

impl RuleId {
    pub const ALL: [RuleId; 14] = {
        let mut out = [RuleId::R1a; 14];
        let mut k = 0;
        while k < 14 {
            out[k] = RULES[k].id;
            k += 1;
        }
        out
    };

    /// Rule number 1..=7.
    pub fn group(self) -> u8 {
        self as u8 / 2 + 1
    }

    pub fn name(self) -> &'static str {
        const NAMES: [&str; 14] = [
            "1a", "1b", "2a", "2b", "3a", "3b", "4a", "4b", "5a", "5b", "6a", "6b", "7a", "7b",
        ];
        NAMES[self as usize]
    }

    /// `self` is preferred to `other`: group 5 over groups 3 and 4, and any
    /// of groups 3-7 over group 1. All other pairs are unordered.
    pub fn outranks(self, other: RuleId) -> bool {
        let (a, b) = (self.group(), other.group());
        (a == 5 && (b == 3 || b == 4)) || ((3..=7).contains(&a) && b == 1)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rule whose guard matches, with the symbol it rewrites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleApplication {
    pub rule: RuleId,
    /// `i` of the rewritten symbol `X_i`, 1-based.
    pub position: usize,
    pub from: Symbol,
    pub to: Symbol,
}

impl RuleApplication {
    pub fn apply(&self, state: &SymbolState) -> SymbolState {
        let mut next = state.clone();
        next.set_x(self.position, self.to);
        next
    }
}

impl fmt::Display for RuleApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@X{}:{}->{}", self.rule, self.position, self.from, self.to)
    }
}

/// Every rule instance whose guard matches `state`, without any
/// admissibility requirement, ordered by rule then position.
pub fn matching_rules(state: &SymbolState) -> Vec<RuleApplication> {
    let n = state.len();
    let mut out = Vec::new();
    for spec in RULES {
        match spec.left {
            None => {
                let guard = n == 1 || matches!(state.x(2), Symbol::Zero | Symbol::One);
                if n >= 1 && guard && state.x(1) == spec.right {
                    out.push(RuleApplication {
                        rule: spec.id,
                        position: 1,
                        from: spec.right,
                        to: spec.to,
                    });
                }
            }
            Some(left) => {
                for i in 1..n {
                    if state.x(i + 1) == left && state.x(i) == spec.right {
                        let (position, from) = match spec.rewrites {
                            Side::Left => (i + 1, left),
                            Side::Right => (i, spec.right),
                        };
                        out.push(RuleApplication {
                            rule: spec.id,
                            position,
                            from,
                            to: spec.to,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Rules applicable to an admissible state.
pub fn applicable_rules(state: &SymbolState) -> Result<Vec<RuleApplication>> {
    if !classify(state).is_admissible() {
        return Err(Error::Domain(format!("state {state} is not admissible")));
    }
    Ok(matching_rules(state))
}

/// Applications not outranked by any other applicable one.
pub fn top_priority(apps: &[RuleApplication]) -> Vec<RuleApplication> {
    apps.iter()
        .copied()
        .filter(|a| !apps.iter().any(|b| b.rule.outranks(a.rule)))
        .collect()
}

/// Applies the unique highest-priority rule. `Ok(None)` when no rule
/// applies; an error when the state is inadmissible or the priorities
/// leave more than one candidate.
pub fn rule_successor(state: &SymbolState) -> Result<Option<(SymbolState, RuleApplication)>> {
    let apps = applicable_rules(state)?;
    if apps.is_empty() {
        return Ok(None);
    }
    let top = top_priority(&apps);
    if top.len() > 1 {
        return Err(Error::AmbiguousPriority {
            state: state.to_string(),
            rules: top.iter().map(ToString::to_string).collect(),
        });
    }
    let app = top[0];
    Ok(Some((app.apply(state), app)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules_of(text: &str) -> Vec<(String, usize)> {
        applicable_rules(&text.parse().unwrap())
            .unwrap()
            .into_iter()
            .map(|a| (a.rule.to_string(), a.position))
            .collect()
    }

    fn successor(text: &str) -> (String, RuleId) {
        let (s, app) = rule_successor(&text.parse().unwrap()).unwrap().unwrap();
        (s.to_string(), app.rule)
    }

    #[test]
    fn every_effect_is_one_bit() {
        for spec in RULES {
            let from = match spec.rewrites {
                Side::Left => spec.left.unwrap(),
                Side::Right => spec.right,
            };
            assert_eq!((from.code() ^ spec.to.code()).count_ones(), 1, "{:?}", spec.id);
            assert!(from.is_main() != spec.to.is_main());
        }
    }

    #[test]
    fn applicability() {
        assert_eq!(rules_of("0 0 0 0"), vec![("1a".into(), 1)]);
        assert_eq!(rules_of("0 C C 0"), vec![("4a".into(), 4), ("5a".into(), 2)]);
        assert_eq!(rules_of("0 X iC0 0"), vec![("6b".into(), 2)]);
        assert_eq!(rules_of("0 1 1 1"), vec![("2a".into(), 1)]);
        assert!(matches!(
            applicable_rules(&"0 X iC0 1".parse().unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn priorities() {
        assert_eq!(successor("0 C C 0"), ("0 C iC0 0".into(), RuleId::R5a));
        assert_eq!(successor("0 0 0 C 0 0 0"), ("0 0 i0X C 0 0 0".into(), RuleId::R4a));
        assert_eq!(successor("0 0 1 0 0 0 0"), ("0 0 1 0 0 0 i01".into(), RuleId::R1a));
        assert!(RuleId::R5b.outranks(RuleId::R3a));
        assert!(RuleId::R7a.outranks(RuleId::R1a));
        assert!(RuleId::R7a.outranks(RuleId::R1b));
        assert!(!RuleId::R7a.outranks(RuleId::R2a));
        assert!(!RuleId::R3a.outranks(RuleId::R4a));
        assert_eq!(RuleId::R6b.group(), 6);
        assert_eq!(RuleId::ALL.len(), 14);
    }

    #[test]
    fn halts_and_ambiguity() {
        assert!(rule_successor(&"0 X".parse().unwrap()).unwrap().is_none());
        assert!(matches!(
            rule_successor(&"0 1 C 1".parse().unwrap()),
            Err(Error::Domain(_))
        ));
        let at = |rule| RuleApplication {
            rule,
            position: 1,
            from: Symbol::Zero,
            to: Symbol::I01,
        };
        assert_eq!(top_priority(&[at(RuleId::R3a), at(RuleId::R4a), at(RuleId::R1a)]).len(), 2);
        assert_eq!(top_priority(&[at(RuleId::R3a), at(RuleId::R5a)]), vec![at(RuleId::R5a)]);
    }

    #[test]
    fn single_symbol_guard_is_vacuous() {
        let s = SymbolState::uniform(1, Symbol::Zero);
        assert_eq!(matching_rules(&s)[0].rule, RuleId::R1a);
    }
}
