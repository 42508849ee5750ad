use thiserror::Error;

/// Explicit size limits; exceeding one is a hard error, never a truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest set, frame, or name universe that may be materialized.
    pub max_elements: usize,
    /// Largest number of candidates an exhaustive search may visit.
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_elements: 4096, max_steps: 5_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("budget exceeded: {what} needs more than {limit}")]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub limit: u64,
}

impl Budget {
    pub fn with_elements(self, max_elements: usize) -> Self {
        Budget { max_elements, ..self }
    }

    pub fn with_steps(self, max_steps: u64) -> Self {
        Budget { max_steps, ..self }
    }

    pub fn check_elements(&self, what: &'static str, n: usize) -> Result<(), BudgetExceeded> {
        if n > self.max_elements {
            return Err(BudgetExceeded { what, limit: self.max_elements as u64 });
        }
        Ok(())
    }

    pub fn check_steps(&self, what: &'static str, n: u64) -> Result<(), BudgetExceeded> {
        if n > self.max_steps {
            return Err(BudgetExceeded { what, limit: self.max_steps });
        }
        Ok(())
    }
}
