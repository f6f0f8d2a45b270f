//! Table-based VCSP instances.
//!
//! The objective is the weighted sum of dense soft-constraint tables and is
//! maximised. Tables are stored row-major over the scope, the first scope
//! variable being the most significant digit.
//!
//! # Instance document
//!
//! Instances serialise to a JSON document (see [`VcspInstance::to_document`]):
//!
//! ```json
//! {
//!   "format": "vcsp-instance",
//!   "version": 1,
//!   "metadata": { "kind": "pairs", "n": "2", "alpha": "5" },
//!   "domains": [2, 2],
//!   "moves": { "kind": "any-value" },
//!   "constraints": [
//!     { "scope": [0, 1], "weight": "1", "table": [1, 0, 0, 5] }
//!   ]
//! }
//! ```
//!
//! `weight` is a decimal string (exact, any magnitude). `moves` is either
//! `{"kind": "any-value"}` or `{"kind": "single-bit-code", "codes": [...]}`;
//! the latter restricts single-variable moves to values whose codes differ
//! from the current value's code in exactly one bit.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fitness::Fitness;
use crate::graph::ConstraintGraph;
use crate::search::Landscape;

pub const DOCUMENT_FORMAT: &str = "vcsp-instance";
pub const DOCUMENT_VERSION: u32 = 1;

/// A value per variable, each an index into that variable's domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(pub Vec<u8>);

impl Assignment {
    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn with(&self, var: usize, value: u8) -> Assignment {
        let mut v = self.0.clone();
        v[var] = value;
        Assignment(v)
    }
}

impl From<Vec<u8>> for Assignment {
    fn from(v: Vec<u8>) -> Self {
        Assignment(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SoftConstraint {
    pub scope: Vec<usize>,
    pub weight: Fitness,
    pub table: Vec<i64>,
}

impl SoftConstraint {
    pub fn new(scope: Vec<usize>, weight: Fitness, table: Vec<i64>) -> Self {
        SoftConstraint { scope, weight, table }
    }

    pub fn arity(&self) -> usize {
        self.scope.len()
    }
}

/// Which values a single-variable move may reach.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MoveRule {
    /// Any other value of the domain.
    #[default]
    AnyValue,
    /// Values whose code is at Hamming distance one from the current code.
    SingleBitCode { codes: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcspInstance {
    domains: Vec<u8>,
    constraints: Vec<SoftConstraint>,
    moves: MoveRule,
    metadata: BTreeMap<String, String>,
    // derived: constraint indices touching each variable
    incidence: Vec<Vec<usize>>,
    // derived: per constraint, table stride of each scope position
    strides: Vec<Vec<usize>>,
    // derived: [domain size][value] -> values reachable by one move
    move_targets: Vec<Vec<Vec<u8>>>,
}

#[derive(Serialize, Deserialize)]
struct InstanceDocument {
    format: String,
    version: u32,
    #[serde(default)]
    metadata: BTreeMap<String, String>,
    domains: Vec<u8>,
    #[serde(default)]
    moves: MoveRule,
    constraints: Vec<SoftConstraint>,
}

impl VcspInstance {
    pub fn new(domains: Vec<u8>, constraints: Vec<SoftConstraint>) -> Result<Self> {
        Self::with_moves(domains, constraints, MoveRule::AnyValue)
    }

    pub fn with_moves(domains: Vec<u8>, constraints: Vec<SoftConstraint>, moves: MoveRule) -> Result<Self> {
        if let Some((i, d)) = domains.iter().enumerate().find(|(_, &d)| d < 2) {
            return Err(Error::invalid(format!("variable {i} has domain size {d} < 2")));
        }
        let n = domains.len();
        let mut incidence = vec![Vec::new(); n];
        let mut strides = Vec::with_capacity(constraints.len());
        for (ci, c) in constraints.iter().enumerate() {
            if c.scope.is_empty() {
                return Err(Error::invalid(format!("constraint {ci} has an empty scope")));
            }
            if c.weight.is_negative() {
                return Err(Error::invalid(format!("constraint {ci} has negative weight {}", c.weight)));
            }
            let mut seen = vec![false; n];
            for &v in &c.scope {
                if v >= n {
                    return Err(Error::invalid(format!("constraint {ci} references variable {v} of {n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::invalid(format!("constraint {ci} repeats variable {v}")));
                }
            }
            let mut st = vec![0usize; c.scope.len()];
            let mut size = 1usize;
            for (k, &v) in c.scope.iter().enumerate().rev() {
                st[k] = size;
                size = size
                    .checked_mul(domains[v] as usize)
                    .ok_or_else(|| Error::invalid(format!("constraint {ci} table too large")))?;
            }
            if c.table.len() != size {
                return Err(Error::invalid(format!(
                    "constraint {ci} table has {} entries, expected {size}",
                    c.table.len()
                )));
            }
            for &v in &c.scope {
                incidence[v].push(ci);
            }
            strides.push(st);
        }
        let max_domain = domains.iter().copied().max().unwrap_or(2);
        let mut move_targets: Vec<Vec<Vec<u8>>> = vec![Vec::new(); max_domain as usize + 1];
        match &moves {
            MoveRule::AnyValue => {
                for d in 2..=max_domain {
                    move_targets[d as usize] = (0..d).map(|a| (0..d).filter(|&b| b != a).collect()).collect();
                }
            }
            MoveRule::SingleBitCode { codes } => {
                if domains.iter().any(|&d| d as usize != codes.len()) {
                    return Err(Error::invalid("single-bit-code moves need every domain to match the code list"));
                }
                move_targets[codes.len()] = (0..codes.len())
                    .map(|a| {
                        (0..codes.len())
                            .filter(|&b| (codes[a] ^ codes[b]).count_ones() == 1)
                            .map(|b| b as u8)
                            .collect()
                    })
                    .collect();
            }
        }
        Ok(VcspInstance {
            domains,
            constraints,
            moves,
            metadata: BTreeMap::new(),
            incidence,
            strides,
            move_targets,
        })
    }

    pub fn with_metadata(mut self, key: &str, value: impl ToString) -> Self {
        self.metadata.insert(key.to_string(), value.to_string());
        self
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn domains(&self) -> &[u8] {
        &self.domains
    }

    pub fn num_variables(&self) -> usize {
        self.domains.len()
    }

    pub fn constraints(&self) -> &[SoftConstraint] {
        &self.constraints
    }

    pub fn moves(&self) -> &MoveRule {
        &self.moves
    }

    pub fn is_boolean(&self) -> bool {
        self.domains.iter().all(|&d| d == 2)
    }

    pub fn max_arity(&self) -> usize {
        self.constraints.iter().map(SoftConstraint::arity).max().unwrap_or(0)
    }

    /// Constraints whose scope contains `var`.
    pub fn constraints_of(&self, var: usize) -> &[usize] {
        &self.incidence[var]
    }

    pub fn check_assignment(&self, values: &[u8]) -> Result<()> {
        if values.len() != self.domains.len() {
            return Err(Error::DimensionMismatch {
                expected: self.domains.len(),
                got: values.len(),
            });
        }
        if let Some((i, &v)) = values.iter().enumerate().find(|(i, &v)| v >= self.domains[*i]) {
            return Err(Error::invalid(format!(
                "value {v} of variable {i} outside domain of size {}",
                self.domains[i]
            )));
        }
        Ok(())
    }

    fn table_value(&self, ci: usize, values: &[u8]) -> i64 {
        let c = &self.constraints[ci];
        let idx: usize = c
            .scope
            .iter()
            .zip(&self.strides[ci])
            .map(|(&v, &s)| values[v] as usize * s)
            .sum();
        c.table[idx]
    }

    fn table_value_with(&self, ci: usize, values: &[u8], var: usize, value: u8) -> i64 {
        let c = &self.constraints[ci];
        let idx: usize = c
            .scope
            .iter()
            .zip(&self.strides[ci])
            .map(|(&v, &s)| if v == var { value as usize * s } else { values[v] as usize * s })
            .sum();
        c.table[idx]
    }

    /// Weighted sum of all constraint tables at `a`.
    pub fn evaluate(&self, a: &[u8]) -> Result<Fitness> {
        self.check_assignment(a)?;
        Ok(self.evaluate_unchecked(a))
    }

    pub(crate) fn evaluate_unchecked(&self, a: &[u8]) -> Fitness {
        let mut total = Fitness::zero();
        for ci in 0..self.constraints.len() {
            let t = self.table_value(ci, a);
            if t != 0 {
                total += &self.constraints[ci].weight * t;
            }
        }
        total
    }

    /// `evaluate(a[var -> value]) - evaluate(a)`, touching only the
    /// constraints whose scope contains `var`.
    pub fn delta_evaluate(&self, a: &[u8], var: usize, value: u8) -> Result<Fitness> {
        self.check_assignment(a)?;
        if var >= self.domains.len() {
            return Err(Error::invalid(format!("variable {var} of {}", self.domains.len())));
        }
        if value >= self.domains[var] {
            return Err(Error::invalid(format!(
                "value {value} outside domain of size {}",
                self.domains[var]
            )));
        }
        Ok(self.delta_unchecked(a, var, value))
    }

    pub(crate) fn delta_unchecked(&self, a: &[u8], var: usize, value: u8) -> Fitness {
        if a[var] == value {
            return Fitness::zero();
        }
        let mut delta = Fitness::zero();
        for &ci in &self.incidence[var] {
            let diff = self.table_value_with(ci, a, var, value) - self.table_value(ci, a);
            if diff != 0 {
                delta += &self.constraints[ci].weight * diff;
            }
        }
        delta
    }

    /// Edge `{i, j}` for every pair of distinct variables sharing a scope.
    pub fn constraint_graph(&self) -> ConstraintGraph {
        let mut g = ConstraintGraph::new(self.domains.len());
        for c in &self.constraints {
            for (k, &u) in c.scope.iter().enumerate() {
                for &v in &c.scope[k + 1..] {
                    g.add_edge(u, v).expect("scope validated at construction");
                }
            }
        }
        g
    }

    pub fn to_document(&self) -> Result<String> {
        let doc = InstanceDocument {
            format: DOCUMENT_FORMAT.to_string(),
            version: DOCUMENT_VERSION,
            metadata: self.metadata.clone(),
            domains: self.domains.clone(),
            moves: self.moves.clone(),
            constraints: self.constraints.clone(),
        };
        let mut text = serde_json::to_string_pretty(&doc)?;
        text.push('\n');
        Ok(text)
    }

    pub fn from_document(text: &str) -> Result<Self> {
        let doc: InstanceDocument = serde_json::from_str(text)?;
        if doc.format != DOCUMENT_FORMAT {
            return Err(Error::invalid(format!("unknown document format {:?}", doc.format)));
        }
        if doc.version != DOCUMENT_VERSION {
            return Err(Error::invalid(format!("unsupported document version {}", doc.version)));
        }
        let mut inst = VcspInstance::with_moves(doc.domains, doc.constraints, doc.moves)?;
        inst.metadata = doc.metadata;
        Ok(inst)
    }
}

impl Landscape for VcspInstance {
    fn num_variables(&self) -> usize {
        self.domains.len()
    }

    fn domain_size(&self, var: usize) -> u8 {
        self.domains[var]
    }

    fn move_targets(&self, var: usize, current: u8) -> &[u8] {
        &self.move_targets[self.domains[var] as usize][current as usize]
    }

    fn fitness(&self, state: &[u8]) -> Fitness {
        self.evaluate_unchecked(state)
    }

    fn delta(&self, state: &[u8], var: usize, value: u8) -> Fitness {
        self.delta_unchecked(state, var, value)
    }

    fn validate(&self, state: &[u8]) -> Result<()> {
        self.check_assignment(state)
    }
}
