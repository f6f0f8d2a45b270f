//! Admissible configurations of the counting path.
//!
//! Every family is a written-order string `prefix core suffix` where the
//! prefix is a (possibly constrained) 0/1 string and the suffix a run of
//! zeros. A state is classified by scanning for its first symbol outside
//! `{0, 1}` and matching the core that starts there.

use std::fmt;

use crate::landscapes::{Symbol, SymbolState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `{01}+`
    Counting,
    /// `{01}* 1C 0*`
    OneCarry,
    /// `{01}* 0C 0*`
    ZeroCarry,
    /// `{01}* CC 0*`
    DoubleCarry,
    /// `{01}* XC 0*`
    CarryAfterX,
    /// `{01}* X 0*`
    LoneX,
    /// `{01}+ i01`
    IncrementLast,
    /// `{01}+ i1C`
    FirstCarryLast,
    /// `{01}+ i1C C 0*`
    DuplicateCarry,
    /// `{01}* i0X C 0*`
    ZeroToX,
    /// `{01}+ C iC0 0*`
    DropAfterCarry,
    /// `{01}* X iC0 0*`
    DropAfterX,
    /// `{01}* iX1 0+`
    UseX,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Counting,
        Family::OneCarry,
        Family::ZeroCarry,
        Family::DoubleCarry,
        Family::CarryAfterX,
        Family::LoneX,
        Family::IncrementLast,
        Family::FirstCarryLast,
        Family::DuplicateCarry,
        Family::ZeroToX,
        Family::DropAfterCarry,
        Family::DropAfterX,
        Family::UseX,
    ];

    pub fn pattern(self) -> &'static str {
        match self {
            Family::Counting => "{01}+",
            Family::OneCarry => "{01}* 1 C 0*",
            Family::ZeroCarry => "{01}* 0 C 0*",
            Family::DoubleCarry => "{01}* C C 0*",
            Family::CarryAfterX => "{01}* X C 0*",
            Family::LoneX => "{01}* X 0*",
            Family::IncrementLast => "{01}+ i01",
            Family::FirstCarryLast => "{01}+ i1C",
            Family::DuplicateCarry => "{01}+ i1C C 0*",
            Family::ZeroToX => "{01}* i0X C 0*",
            Family::DropAfterCarry => "{01}+ C iC0 0*",
            Family::DropAfterX => "{01}* X iC0 0*",
            Family::UseX => "{01}* iX1 0+",
        }
    }

    /// Families without intermediate symbols.
    pub fn is_main(self) -> bool {
        matches!(
            self,
            Family::Counting
                | Family::OneCarry
                | Family::ZeroCarry
                | Family::DoubleCarry
                | Family::CarryAfterX
                | Family::LoneX
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.pattern())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdmissibleClass {
    Admissible(Family),
    Inadmissible,
}

impl AdmissibleClass {
    pub fn is_admissible(self) -> bool {
        matches!(self, AdmissibleClass::Admissible(_))
    }

    pub fn family(self) -> Option<Family> {
        match self {
            AdmissibleClass::Admissible(f) => Some(f),
            AdmissibleClass::Inadmissible => None,
        }
    }
}

pub fn classify(state: &SymbolState) -> AdmissibleClass {
    classify_written(&state.written())
}

pub fn is_admissible(state: &SymbolState) -> bool {
    classify(state).is_admissible()
}

fn is_bit(s: Symbol) -> bool {
    matches!(s, Symbol::Zero | Symbol::One)
}

/// Classifies a state given in written order (`X_N` first).
pub fn classify_written(w: &[Symbol]) -> AdmissibleClass {
    use Symbol::*;
    let Some(p) = w.iter().position(|&s| !is_bit(s)) else {
        return if w.is_empty() {
            AdmissibleClass::Inadmissible
        } else {
            AdmissibleClass::Admissible(Family::Counting)
        };
    };
    let zeros_from = |k: usize| w.get(k..).is_some_and(|rest| rest.iter().all(|&s| s == Zero));
    let next = w.get(p + 1).copied();
    let has_prefix = p > 0;
    let family = match w[p] {
        Carry => match next {
            Some(Carry) if zeros_from(p + 2) => Some(Family::DoubleCarry),
            Some(IC0) if has_prefix && zeros_from(p + 2) => Some(Family::DropAfterCarry),
            _ if has_prefix && zeros_from(p + 1) => Some(if w[p - 1] == One {
                Family::OneCarry
            } else {
                Family::ZeroCarry
            }),
            _ => None,
        },
        X => match next {
            Some(Carry) if zeros_from(p + 2) => Some(Family::CarryAfterX),
            Some(IC0) if zeros_from(p + 2) => Some(Family::DropAfterX),
            _ if zeros_from(p + 1) => Some(Family::LoneX),
            _ => None,
        },
        I01 if has_prefix && next.is_none() => Some(Family::IncrementLast),
        I1C if has_prefix && next.is_none() => Some(Family::FirstCarryLast),
        I1C if has_prefix && next == Some(Carry) && zeros_from(p + 2) => Some(Family::DuplicateCarry),
        I0X if next == Some(Carry) && zeros_from(p + 2) => Some(Family::ZeroToX),
        IX1 if next.is_some() && zeros_from(p + 1) => Some(Family::UseX),
        _ => None,
    };
    family.map_or(AdmissibleClass::Inadmissible, AdmissibleClass::Admissible)
}
