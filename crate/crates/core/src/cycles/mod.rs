//! Cycle search: shortest cycles, budgeted long-cycle detection, the dense
//! multigraph packer and exhaustive oracles for small instances.

mod dense;
mod detect;
mod girth;
mod oracle;

use std::time::{Duration, Instant};

pub use dense::pack_cycles_dense;
pub use detect::{edge_on_long_cycle, find_long_cycle, has_long_cycle, LongCycleQuery, QueryMode};
pub use girth::shortest_cycle;
pub use oracle::{enumerate_cycles, oracle_max_packing, oracle_min_hitting};

use crate::error::{Error, Result};

/// Work limits for exhaustive searches. `max_nodes_expanded` applies to each
/// search call; the time limit runs from [`DetectorBudget::start_clock`] (or
/// from the start of each call if the clock was never started). Zero means
/// unlimited for either field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetectorBudget {
    pub max_nodes_expanded: u64,
    pub time_limit_ms: u64,
    deadline: Option<Instant>,
}

impl Default for DetectorBudget {
    fn default() -> Self {
        DetectorBudget { max_nodes_expanded: 200_000_000, time_limit_ms: 0, deadline: None }
    }
}

impl DetectorBudget {
    pub fn new(max_nodes_expanded: u64, time_limit_ms: u64) -> Self {
        DetectorBudget { max_nodes_expanded, time_limit_ms, deadline: None }
    }

    pub fn unlimited() -> Self {
        DetectorBudget::new(0, 0)
    }

    /// Fixes the deadline now so that every later search shares it.
    pub fn start_clock(mut self) -> Self {
        if self.time_limit_ms > 0 && self.deadline.is_none() {
            self.deadline = Some(Instant::now() + Duration::from_millis(self.time_limit_ms));
        }
        self
    }

    pub(crate) fn meter(&self, what: &'static str) -> Meter {
        let deadline =
            self.deadline.or_else(|| (self.time_limit_ms > 0).then(|| Instant::now() + Duration::from_millis(self.time_limit_ms)));
        Meter { nodes: 0, max: self.max_nodes_expanded, deadline, what }
    }
}

/// Counts expanded search nodes against a budget.
pub(crate) struct Meter {
    nodes: u64,
    max: u64,
    deadline: Option<Instant>,
    what: &'static str,
}

impl Meter {
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.max > 0 && self.nodes > self.max {
            return Err(Error::BudgetExceeded(format!("{}: more than {} search nodes", self.what, self.max)));
        }
        if self.nodes & 1023 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::BudgetExceeded(format!("{}: time limit reached", self.what)));
                }
            }
        }
        Ok(())
    }

    #[cfg(test)]
    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}

/// `log2(k)` in double precision; used by every `c * k * log k` threshold.
pub fn log2k(k: usize) -> f64 {
    (k as f64).log2()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_budget_trips() {
        let mut m = DetectorBudget::new(3, 0).meter("t");
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert!(matches!(m.tick(), Err(Error::BudgetExceeded(_))));
        assert_eq!(m.nodes(), 4);
    }

    #[test]
    fn zero_means_unlimited() {
        let mut m = DetectorBudget::unlimited().meter("t");
        for _ in 0..5000 {
            m.tick().unwrap();
        }
    }
}
