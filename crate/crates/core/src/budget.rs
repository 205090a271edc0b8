//! Per-call search budgets.
//!
//! Every exhaustive search ticks a [`Budget`]. When the node limit or the
//! deadline is hit the search stops with [`Error::BudgetExhausted`] instead of
//! returning an approximate answer.

use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

const CLOCK_CHECK_INTERVAL: u64 = 1 << 12;

#[derive(Debug, Clone)]
pub struct Budget {
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    nodes: Cell<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            node_limit: None,
            deadline: None,
            nodes: Cell::new(0),
        }
    }

    pub fn with_nodes(limit: u64) -> Self {
        Budget {
            node_limit: Some(limit),
            ..Budget::unlimited()
        }
    }

    pub fn with_time(limit: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + limit),
            ..Budget::unlimited()
        }
    }

    pub fn new(node_limit: Option<u64>, time_limit: Option<Duration>) -> Self {
        Budget {
            node_limit,
            deadline: time_limit.map(|d| Instant::now() + d),
            nodes: Cell::new(0),
        }
    }

    pub fn is_unlimited(&self) -> bool {
        self.node_limit.is_none() && self.deadline.is_none()
    }

    /// Nodes spent so far.
    pub fn spent(&self) -> u64 {
        self.nodes.get()
    }

    #[inline]
    pub fn tick(&self) -> Result<()> {
        let n = self.nodes.get() + 1;
        self.nodes.set(n);
        if let Some(limit) = self.node_limit {
            if n > limit {
                return Err(Error::BudgetExhausted);
            }
        }
        if let Some(deadline) = self.deadline {
            if n % CLOCK_CHECK_INTERVAL == 0 && Instant::now() >= deadline {
                return Err(Error::BudgetExhausted);
            }
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_limit_trips() {
        let b = Budget::with_nodes(3);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert_eq!(b.tick(), Err(Error::BudgetExhausted));
    }

    #[test]
    fn unlimited_never_trips() {
        let b = Budget::unlimited();
        for _ in 0..100_000 {
            b.tick().unwrap();
        }
        assert_eq!(b.spent(), 100_000);
    }
}
