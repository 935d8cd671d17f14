use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

/// Progress counters reported when a Gröbner computation runs out of budget.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BudgetStats {
    pub pairs_processed: usize,
    pub max_degree: u32,
    pub basis_size: usize,
    #[serde(with = "duration_ms")]
    pub elapsed: Duration,
}

pub(crate) mod duration_ms {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        u64::deserialize(d).map(Duration::from_millis)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation word {0:?}: must be a bijection of 1..=N")]
    InvalidPermutation(Vec<usize>),
    #[error("{0} is not a fixed-point-free involution")]
    NotFpfInvolution(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("bound exceeded: requested {requested}, limit {limit}")]
    BoundExceeded { requested: usize, limit: usize },
    #[error("no unique meet; maximal common lower bounds: {}", .0.join(", "))]
    NoUniqueMeet(Vec<String>),
    #[error("infeasible target: {0}")]
    Infeasible(String),
    #[error("{0} is not in the orbit-ideal catalog")]
    NotInCatalog(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid term order: {0}")]
    InvalidOrder(String),
    #[error("negative weight {weight} on variable {var}")]
    NegativeWeight { var: usize, weight: i64 },
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("matrix error: {0}")]
    Matrix(String),
    #[error("budget exhausted ({reason}) after {} pairs, max degree {}", .stats.pairs_processed, .stats.max_degree)]
    BudgetExhausted { reason: String, stats: BudgetStats },
}

pub type Result<T> = std::result::Result<T, Error>;
