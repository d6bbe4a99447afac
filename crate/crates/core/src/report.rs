use serde::{Deserialize, Serialize};

/// Outcome of a verification sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport<F> {
    pub pass: bool,
    pub cells_checked: usize,
    pub failures: Vec<F>,
}

impl<F: Ord> CheckReport<F> {
    pub fn from_failures(cells_checked: usize, mut failures: Vec<F>) -> Self {
        failures.sort();
        CheckReport {
            pass: failures.is_empty(),
            cells_checked,
            failures,
        }
    }
}
