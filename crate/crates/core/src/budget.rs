use serde::{Deserialize, Serialize};

use crate::weyl::DEFAULT_BALL_CAP;

/// Resource limits shared by every search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Budget {
    /// Maximum number of group elements held in a ball.
    pub ball_cap: usize,
    /// Radii tried in turn by witness searches.
    pub radius_schedule: Vec<usize>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { ball_cap: DEFAULT_BALL_CAP, radius_schedule: vec![4, 6, 8] }
    }
}

impl Budget {
    pub fn max_radius(&self) -> usize {
        self.radius_schedule.iter().copied().max().unwrap_or(0)
    }
}
