//! The ten-letter alphabet of the counting landscape and its 4-bit encoding.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Symbol {
    Zero = 0,
    One = 1,
    Carry = 2,
    X = 3,
    I01 = 4,
    IC0 = 5,
    I0X = 6,
    I1C = 7,
    IX1 = 8,
    ICX = 9,
}

pub const ALPHABET_SIZE: usize = 10;

impl Symbol {
    pub const ALL: [Symbol; ALPHABET_SIZE] = [
        Symbol::Zero,
        Symbol::One,
        Symbol::Carry,
        Symbol::X,
        Symbol::I01,
        Symbol::IC0,
        Symbol::I0X,
        Symbol::I1C,
        Symbol::IX1,
        Symbol::ICX,
    ];

    pub const MAIN: [Symbol; 4] = [Symbol::Zero, Symbol::One, Symbol::Carry, Symbol::X];

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(i: u8) -> Option<Symbol> {
        Symbol::ALL.get(i as usize).copied()
    }

    /// 4-bit code, column `x_1` in the most significant bit.
    pub fn code(self) -> u8 {
        match self {
            Symbol::Zero => 0b1000,
            Symbol::One => 0b0100,
            Symbol::Carry => 0b0010,
            Symbol::X => 0b0001,
            Symbol::I01 => 0b1100,
            Symbol::IC0 => 0b1010,
            Symbol::I0X => 0b1001,
            Symbol::I1C => 0b0110,
            Symbol::IX1 => 0b0101,
            Symbol::ICX => 0b0011,
        }
    }

    /// Inverse of [`Symbol::code`]; `None` for the six non-symbol patterns.
    pub fn from_code(code: u8) -> Option<Symbol> {
        Symbol::ALL.into_iter().find(|s| s.code() == code)
    }

    pub fn is_main(self) -> bool {
        self.code().count_ones() == 1
    }

    pub fn is_intermediate(self) -> bool {
        !self.is_main()
    }

    /// The two main symbols an intermediate lies between.
    pub fn endpoints(self) -> Option<(Symbol, Symbol)> {
        if self.is_main() {
            return None;
        }
        let mut mains = Symbol::MAIN.into_iter().filter(|m| m.code() & self.code() != 0);
        Some((mains.next()?, mains.next()?))
    }

    /// Intermediate symbol between two distinct main symbols.
    pub fn between(a: Symbol, b: Symbol) -> Option<Symbol> {
        if !a.is_main() || !b.is_main() || a == b {
            return None;
        }
        Symbol::from_code(a.code() | b.code())
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Zero => "0",
            Symbol::One => "1",
            Symbol::Carry => "C",
            Symbol::X => "X",
            Symbol::I01 => "i01",
            Symbol::IC0 => "iC0",
            Symbol::I0X => "i0X",
            Symbol::I1C => "i1C",
            Symbol::IX1 => "iX1",
            Symbol::ICX => "iCX",
        }
    }

    /// Codes of all symbols in index order, as used by single-bit-code moves.
    pub fn codes() -> Vec<u32> {
        Symbol::ALL.iter().map(|s| s.code() as u32).collect()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symbol> {
        Symbol::ALL
            .into_iter()
            .find(|sym| sym.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown symbol {s:?}")))
    }
}

/// Symbol assignment `X_N .. X_1`. Stored with `X_1` at index 0 so that the
/// stored index is also the VCSP variable index; displayed left to right
/// with `X_1` rightmost.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolState(Vec<Symbol>);

impl SymbolState {
    /// From symbols listed `X_1` first.
    pub fn from_low_first(symbols: Vec<Symbol>) -> Self {
        SymbolState(symbols)
    }

    /// From symbols as written, `X_N` first.
    pub fn from_written(symbols: &[Symbol]) -> Self {
        SymbolState(symbols.iter().rev().copied().collect())
    }

    pub fn uniform(n: usize, s: Symbol) -> Self {
        SymbolState(vec![s; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `X_i`, 1-based.
    pub fn x(&self, i: usize) -> Symbol {
        self.0[i - 1]
    }

    pub fn set_x(&mut self, i: usize, s: Symbol) {
        self.0[i - 1] = s;
    }

    pub fn low_first(&self) -> &[Symbol] {
        &self.0
    }

    /// Symbols as written, `X_N` first.
    pub fn written(&self) -> Vec<Symbol> {
        self.0.iter().rev().copied().collect()
    }

    /// Domain indices, variable `i - 1` holding `X_i`.
    pub fn to_values(&self) -> Vec<u8> {
        self.0.iter().map(|s| s.index()).collect()
    }

    pub fn from_values(values: &[u8]) -> Result<Self> {
        values
            .iter()
            .map(|&v| Symbol::from_index(v).ok_or_else(|| Error::invalid(format!("symbol index {v} out of range"))))
            .collect::<Result<Vec<_>>>()
            .map(SymbolState)
    }

    pub fn intermediate_count(&self) -> usize {
        self.0.iter().filter(|s| s.is_intermediate()).count()
    }
}

impl fmt::Display for SymbolState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.0.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(s.name())?;
        }
        Ok(())
    }
}

impl FromStr for SymbolState {
    type Err = Error;

    /// Accepts written order with optional separators (spaces or commas) and
    /// optional angle brackets: `0 X iC0 1`, `<0,X,iC0,1>`, `0XiC01`.
    fn from_str(text: &str) -> Result<Self> {
        let mut written = Vec::new();
        let cleaned: String = text
            .chars()
            .map(|c| if matches!(c, ',' | '<' | '>' | '⟨' | '⟩') { ' ' } else { c })
            .collect();
        for token in cleaned.split_whitespace() {
            let chars: Vec<char> = token.chars().collect();
            let mut k = 0;
            while k < chars.len() {
                let len = if chars[k] == 'i' { 3 } else { 1 };
                if k + len > chars.len() {
                    return Err(Error::invalid(format!("truncated symbol in {token:?}")));
                }
                let name: String = chars[k..k + len].iter().collect();
                written.push(name.parse::<Symbol>()?);
                k += len;
            }
        }
        if written.is_empty() {
            return Err(Error::invalid("empty symbol state"));
        }
        Ok(SymbolState::from_written(&written))
    }
}

/// Bit index of column `a` (1..=4) of block `i` (1-based) in the Boolean
/// encoding; blocks are laid out `X_1` first.
pub fn bit_index(i: usize, a: usize) -> usize {
    4 * (i - 1) + (a - 1)
}

/// Boolean encoding of a symbol state, `4N` bits.
pub fn encode(state: &SymbolState) -> Vec<u8> {
    state.low_first().iter().flat_map(|s| encode_block(*s)).collect()
}

pub fn encode_block(s: Symbol) -> [u8; 4] {
    let c = s.code();
    [(c >> 3) & 1, (c >> 2) & 1, (c >> 1) & 1, c & 1]
}

/// Decodes one 4-bit block (column `x_1` first); `None` for non-symbols.
pub fn decode_block(block: &[u8]) -> Option<Symbol> {
    if block.len() != 4 || block.iter().any(|&b| b > 1) {
        return None;
    }
    Symbol::from_code(block.iter().fold(0u8, |acc, &b| (acc << 1) | b))
}

/// Decodes every block; a non-symbol block yields `None` at its position.
pub fn decode(bits: &[u8]) -> Vec<Option<Symbol>> {
    bits.chunks(4).map(decode_block).collect()
}

/// Decodes a whole bit state, `None` when any block is a non-symbol or the
/// length is not a multiple of four.
pub fn decode_state(bits: &[u8]) -> Option<SymbolState> {
    if !bits.len().is_multiple_of(4) {
        return None;
    }
    decode(bits).into_iter().collect::<Option<Vec<_>>>().map(SymbolState::from_low_first)
}

/// Trace formatter for symbol-level value vectors.
pub fn format_symbol_values(values: &[u8]) -> String {
    match SymbolState::from_values(values) {
        Ok(s) => s.to_string(),
        Err(_) => crate::search::format_digits(values),
    }
}
