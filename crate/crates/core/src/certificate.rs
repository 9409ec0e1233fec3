use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ratio::Ratio;

/// Which route of the solver produced a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    MaxDegreePath,
    TwoDegreePath,
    EngineDirect,
    EngineRestrict,
    EngineBounded,
    RestartExactFallback,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::MaxDegreePath => "max-degree-path",
            Method::TwoDegreePath => "two-degree-path",
            Method::EngineDirect => "engine-direct",
            Method::EngineRestrict => "engine-restrict",
            Method::EngineBounded => "engine-bounded",
            Method::RestartExactFallback => "restart-exact-fallback",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityFlags {
    pub semi_optimal: bool,
    pub locally_optimal: bool,
    /// The minimum part degree is proven to be the best possible.
    pub exact: bool,
}

/// Recomputable record of the per-part degrees of a partition and whether
/// each one reaches `threshold · m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub degrees: Vec<u64>,
    pub m: u64,
    pub threshold: Ratio,
    pub meets_bound: bool,
    pub method: Option<Method>,
    pub flags: OptimalityFlags,
}

impl Certificate {
    pub fn new(degrees: Vec<u64>, m: u64, threshold: Ratio) -> Self {
        let meets_bound = degrees.iter().all(|&d| threshold.is_met_by(d, m));
        Self { degrees, m, threshold, meets_bound, method: None, flags: OptimalityFlags::default() }
    }

    pub fn min_degree(&self) -> u64 {
        self.degrees.iter().copied().min().unwrap_or(0)
    }
}
