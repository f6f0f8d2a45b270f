//! The bounded-treewidth counting VCSP, at symbol level and Boolean-encoded.

use crate::error::{Error, Result};
use crate::fitness::Fitness;
use crate::landscapes::symbols::{Symbol, ALPHABET_SIZE};
use crate::vcsp::{MoveRule, SoftConstraint, VcspInstance};

/// Binary table `f(left, right)` on adjacent pairs `(X_{i+1}, X_i)` and
/// unary table `h` on `X_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingTables {
    pub pair: [[i64; ALPHABET_SIZE]; ALPHABET_SIZE],
    pub last: [i64; ALPHABET_SIZE],
}

impl CountingTables {
    pub fn standard() -> Self {
        use Symbol::*;
        let mut t = CountingTables {
            pair: [[0; ALPHABET_SIZE]; ALPHABET_SIZE],
            last: [0; ALPHABET_SIZE],
        };
        for (l, r, v) in [
            (Zero, One, 4),
            (One, One, 4),
            (Zero, Carry, 6),
            (One, Carry, 6),
            (Carry, Zero, 13),
            (X, Zero, 13),
            (Carry, IC0, 8),
            (X, Carry, 8),
            (X, IC0, 12),
            (I0X, Carry, 7),
            (I1C, Carry, 23),
            (IX1, Zero, 14),
        ] {
            t.set_pair(l, r, v);
        }
        t.last[I01 as usize] = 1;
        t.last[I1C as usize] = 5;
        t
    }

    pub fn f(&self, left: Symbol, right: Symbol) -> i64 {
        self.pair[left as usize][right as usize]
    }

    pub fn h(&self, s: Symbol) -> i64 {
        self.last[s as usize]
    }

    pub fn set_pair(&mut self, left: Symbol, right: Symbol, value: i64) {
        self.pair[left as usize][right as usize] = value;
    }

    /// Objective of a symbol state, `X_1` first:
    /// `h(X_1) + Σ_{i=1}^{N-1} 4^{i-1} f(X_{i+1}, X_i)`.
    pub fn objective(&self, low_first: &[Symbol]) -> Fitness {
        let mut total = Fitness::from(low_first.first().map_or(0, |&s| self.h(s)));
        for (i, w) in low_first.windows(2).enumerate() {
            let v = self.f(w[1], w[0]);
            if v != 0 {
                total += Fitness::pow(4, i as u32) * v;
            }
        }
        total
    }
}

impl Default for CountingTables {
    fn default() -> Self {
        CountingTables::standard()
    }
}

fn check_length(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid(format!("counting landscape needs N >= 2, got {n}")));
    }
    Ok(())
}

/// `N` variables over the 10 symbols (variable `i - 1` is `X_i`), moves
/// restricted to single-bit changes of the symbol code.
pub fn make_counting_symbol_instance(n: usize) -> Result<VcspInstance> {
    make_counting_symbol_instance_with(n, &CountingTables::standard())
}

pub fn make_counting_symbol_instance_with(n: usize, tables: &CountingTables) -> Result<VcspInstance> {
    check_length(n)?;
    let pair_table: Vec<i64> = tables.pair.iter().flatten().copied().collect();
    let mut constraints = vec![SoftConstraint::new(vec![0], Fitness::from(1), tables.last.to_vec())];
    for i in 1..n {
        constraints.push(SoftConstraint::new(
            vec![i, i - 1],
            Fitness::pow(4, (i - 1) as u32),
            pair_table.clone(),
        ));
    }
    let inst = VcspInstance::with_moves(
        vec![ALPHABET_SIZE as u8; n],
        constraints,
        MoveRule::SingleBitCode { codes: Symbol::codes() },
    )?;
    Ok(inst.with_metadata("kind", "counting-symbol").with_metadata("n", n))
}

/// `4N` Boolean variables; bit `a` of `X_i` is variable `4(i-1) + (a-1)`.
/// Non-symbol blocks contribute 0 to every table.
pub fn make_counting_boolean_instance(n: usize) -> Result<VcspInstance> {
    make_counting_boolean_instance_with(n, &CountingTables::standard())
}

pub fn make_counting_boolean_instance_with(n: usize, tables: &CountingTables) -> Result<VcspInstance> {
    check_length(n)?;
    let lifted_last: Vec<i64> = (0u8..16)
        .map(|c| Symbol::from_code(c).map_or(0, |s| tables.h(s)))
        .collect();
    // scope lists the left block then the right block, each column x_1 first,
    // so the table index is (left code << 4) | right code
    let lifted_pair: Vec<i64> = (0u16..256)
        .map(|idx| {
            let left = Symbol::from_code((idx >> 4) as u8);
            let right = Symbol::from_code((idx & 0xF) as u8);
            match (left, right) {
                (Some(l), Some(r)) => tables.f(l, r),
                _ => 0,
            }
        })
        .collect();
    let mut constraints = vec![SoftConstraint::new((0..4).collect(), Fitness::from(1), lifted_last)];
    for i in 1..n {
        let scope: Vec<usize> = (4 * i..4 * i + 4).chain(4 * (i - 1)..4 * i).collect();
        constraints.push(SoftConstraint::new(
            scope,
            Fitness::pow(4, (i - 1) as u32),
            lifted_pair.clone(),
        ));
    }
    let inst = VcspInstance::new(vec![2; 4 * n], constraints)?;
    Ok(inst.with_metadata("kind", "counting-boolean").with_metadata("n", n))
}
