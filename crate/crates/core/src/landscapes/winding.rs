//! Recursive winding landscapes on `2n` bits.
//!
//! Bits are indexed left to right: index 0 is the first bit of the smallest
//! sub-cube, and level `k` appends bits `2k - 2` (`a`) and `2k - 1` (`b`).
//! The sub-cube optimum of level `k` is `0^{2(k-1)} 11`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fitness::Fitness;
use crate::search::Landscape;

/// Fittest steps `s⁺_1..s⁺_n` and barrier steps `s⁻_1..s⁻_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepSchedule {
    s_plus: Vec<Fitness>,
    s_minus: Vec<Fitness>,
}

impl StepSchedule {
    /// Checks `s⁺_k > 0`, `s⁻_k < s⁺_k < s⁺_{k+1}` and `s⁺_k > s⁻_{k+1}`.
    pub fn new(s_plus: Vec<Fitness>, s_minus: Vec<Fitness>) -> Result<Self> {
        if s_plus.len() != s_minus.len() {
            return Err(Error::DimensionMismatch {
                expected: s_plus.len(),
                got: s_minus.len(),
            });
        }
        let n = s_plus.len();
        for k in 0..n {
            if !s_plus[k].is_positive() {
                return Err(Error::invalid(format!("s_plus[{}] = {} is not positive", k + 1, s_plus[k])));
            }
            if s_minus[k] >= s_plus[k] {
                return Err(Error::invalid(format!("s_minus[{0}] >= s_plus[{0}]", k + 1)));
            }
            if k + 1 < n {
                if s_plus[k] >= s_plus[k + 1] {
                    return Err(Error::invalid(format!("s_plus[{}] >= s_plus[{}]", k + 1, k + 2)));
                }
                if s_plus[k] <= s_minus[k + 1] {
                    return Err(Error::invalid(format!("s_plus[{}] <= s_minus[{}]", k + 1, k + 2)));
                }
            }
        }
        Ok(StepSchedule { s_plus, s_minus })
    }

    /// `s⁺_k = k + 1`, `s⁻_k = 1`.
    pub fn semismooth(n: usize) -> Self {
        let s_plus = (1..=n as i64).map(|k| Fitness::from(k + 1)).collect();
        let s_minus = vec![Fitness::from(1); n];
        StepSchedule::new(s_plus, s_minus).expect("preset satisfies the schedule inequalities")
    }

    /// `s⁺_k = k + 1`, `s⁻_k = 0`.
    pub fn root2path(n: usize) -> Self {
        let s_plus = (1..=n as i64).map(|k| Fitness::from(k + 1)).collect();
        let s_minus = vec![Fitness::zero(); n];
        StepSchedule::new(s_plus, s_minus).expect("preset satisfies the schedule inequalities")
    }

    pub fn by_name(name: &str, n: usize) -> Result<Self> {
        match name {
            "semismooth" | "winding-semismooth" => Ok(StepSchedule::semismooth(n)),
            "root2path" => Ok(StepSchedule::root2path(n)),
            other => Err(Error::invalid(format!("unknown schedule {other:?}"))),
        }
    }

    pub fn levels(&self) -> usize {
        self.s_plus.len()
    }

    /// `s⁺_k`, 1-based.
    pub fn plus(&self, k: usize) -> &Fitness {
        &self.s_plus[k - 1]
    }

    /// `s⁻_k`, 1-based.
    pub fn minus(&self, k: usize) -> &Fitness {
        &self.s_minus[k - 1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindingLandscape {
    schedule: StepSchedule,
    // peaks[k] = f^k(x*_k), peaks[0] = f^0(ε) = 0
    peaks: Vec<Fitness>,
}

#[derive(Serialize, Deserialize)]
struct WindingDocument {
    n: usize,
    s_plus: Vec<Fitness>,
    s_minus: Vec<Fitness>,
}

const FLIP_TARGETS: [[u8; 1]; 2] = [[1], [0]];

impl WindingLandscape {
    pub fn new(schedule: StepSchedule) -> Self {
        let mut peaks = vec![Fitness::zero()];
        for k in 1..=schedule.levels() {
            // f^k(x*_k) = f^{k-1}(x*_{k-1}) twice (0 ⊕ x* = x*) plus 2 s⁺_k
            let prev = &peaks[k - 1];
            peaks.push(&(prev + prev) + &(schedule.plus(k) * 2));
        }
        WindingLandscape { schedule, peaks }
    }

    pub fn semismooth(n: usize) -> Self {
        WindingLandscape::new(StepSchedule::semismooth(n))
    }

    pub fn root2path(n: usize) -> Self {
        WindingLandscape::new(StepSchedule::root2path(n))
    }

    /// Number of levels; the state has `2n` bits.
    pub fn n(&self) -> usize {
        self.schedule.levels()
    }

    pub fn schedule(&self) -> &StepSchedule {
        &self.schedule
    }

    /// `f^k(x*_k)`.
    pub fn peak_value(&self, k: usize) -> &Fitness {
        &self.peaks[k]
    }

    /// `x*_k` padded with zeros to `2 * len` bits.
    pub fn peak_state(k: usize, levels: usize) -> Vec<u8> {
        let mut x = vec![0u8; 2 * levels];
        if k > 0 {
            x[2 * k - 2] = 1;
            x[2 * k - 1] = 1;
        }
        x
    }

    /// `f^n(x)` for `x` of `2n` bits.
    pub fn evaluate(&self, x: &[u8]) -> Result<Fitness> {
        if !x.len().is_multiple_of(2) {
            return Err(Error::invalid(format!("winding state has odd length {}", x.len())));
        }
        if x.len() != 2 * self.n() {
            return Err(Error::DimensionMismatch {
                expected: 2 * self.n(),
                got: x.len(),
            });
        }
        if x.iter().any(|&b| b > 1) {
            return Err(Error::invalid("winding state must be binary"));
        }
        Ok(self.level_value(x))
    }

    /// `f^k(x)` where `k = x.len() / 2 <= n`.
    pub fn level_value(&self, x: &[u8]) -> Fitness {
        let mut bits = x.to_vec();
        let mut total = Fitness::zero();
        let mut k = bits.len() / 2;
        while k > 0 {
            let (a, b) = (bits[2 * k - 2], bits[2 * k - 1]);
            let prefix = &mut bits[..2 * k - 2];
            let at_peak = is_peak(prefix);
            match (a, b) {
                (0, 0) => {}
                (1, 1) => {
                    total += &self.peaks[k - 1] + &(self.schedule.plus(k) * 2);
                    if k > 1 {
                        prefix[2 * k - 4] ^= 1;
                        prefix[2 * k - 3] ^= 1;
                    }
                }
                _ if !at_peak => total += self.schedule.minus(k),
                (0, _) => return total + &self.peaks[k - 1] + self.schedule.minus(k),
                _ => return total + &self.peaks[k - 1] + self.schedule.plus(k),
            }
            k -= 1;
        }
        total
    }

    pub fn to_document(&self) -> Result<String> {
        let doc = WindingDocument {
            n: self.n(),
            s_plus: self.schedule.s_plus.clone(),
            s_minus: self.schedule.s_minus.clone(),
        };
        let mut text = serde_json::to_string_pretty(&doc)?;
        text.push('\n');
        Ok(text)
    }

    pub fn from_document(text: &str) -> Result<Self> {
        let doc: WindingDocument = serde_json::from_str(text)?;
        if doc.s_plus.len() != doc.n {
            return Err(Error::DimensionMismatch {
                expected: doc.n,
                got: doc.s_plus.len(),
            });
        }
        Ok(WindingLandscape::new(StepSchedule::new(doc.s_plus, doc.s_minus)?))
    }
}

fn is_peak(prefix: &[u8]) -> bool {
    let m = prefix.len();
    m == 0 || (prefix[m - 1] == 1 && prefix[m - 2] == 1 && prefix[..m - 2].iter().all(|&b| b == 0))
}

impl Landscape for WindingLandscape {
    fn num_variables(&self) -> usize {
        2 * self.n()
    }

    fn domain_size(&self, _var: usize) -> u8 {
        2
    }

    fn move_targets(&self, _var: usize, current: u8) -> &[u8] {
        &FLIP_TARGETS[current as usize]
    }

    fn fitness(&self, state: &[u8]) -> Fitness {
        self.level_value(state)
    }

    fn validate(&self, state: &[u8]) -> Result<()> {
        self.evaluate(state).map(|_| ())
    }
}
