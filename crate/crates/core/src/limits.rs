use serde::{Deserialize, Serialize};

/// Environment variable that overrides [`Limits::max_ring_order`].
pub const MAX_ORDER_ENV: &str = "GRADERING_MAX_ORDER";

/// Size caps shared by every construction and search.
///
/// Exceeding any cap is reported as an error; nothing is ever truncated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_ring_order: usize,
    pub max_group_order: usize,
    pub ideal_lattice_cap: usize,
    pub similarity_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_ring_order: 4096,
            max_group_order: 64,
            ideal_lattice_cap: 20_000,
            similarity_budget: 100_000,
        }
    }
}

impl Limits {
    /// Defaults, with the ring cap taken from `GRADERING_MAX_ORDER` when set.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(cap) = std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.max_ring_order = cap;
        }
        limits
    }

    pub fn with_max_ring_order(mut self, cap: usize) -> Self {
        self.max_ring_order = cap;
        self
    }
}
