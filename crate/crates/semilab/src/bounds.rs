//! Search budgets shared by every semi-decidable query.

use serde::{Deserialize, Serialize};

/// Budgets governing corpus enumeration and bounded searches. Every
/// `Unknown` verdict carries the bounds it was computed under.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Maximum polynomial degree (or exponent numerator scale) enumerated.
    pub max_degree: u32,
    /// Maximum coefficient height enumerated.
    pub max_height: u32,
    /// Maximum factorization length explored.
    pub max_length: u32,
    /// Cap on enumerated corpus elements / search candidates.
    pub max_candidates: u32,
    /// Divisibility-chain budget for ACCP probes.
    pub chain_budget: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_degree: 4,
            max_height: 8,
            max_length: 8,
            max_candidates: 200,
            chain_budget: 20,
        }
    }
}

impl Bounds {
    pub fn with_degree(mut self, d: u32) -> Self {
        self.max_degree = d;
        self
    }

    pub fn with_height(mut self, h: u32) -> Self {
        self.max_height = h;
        self
    }

    pub fn with_length(mut self, l: u32) -> Self {
        self.max_length = l;
        self
    }

    pub fn with_candidates(mut self, c: u32) -> Self {
        self.max_candidates = c;
        self
    }

    pub fn with_chain_budget(mut self, c: u32) -> Self {
        self.chain_budget = c;
        self
    }
}
