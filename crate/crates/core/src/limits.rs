use std::env;

/// Size guards for the enumeration routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of vertex subsets scanned when enumerating filters.
    pub max_filter_subsets: u64,
    /// Maximum number of primitive cycle classes returned.
    pub max_cycle_classes: usize,
    /// Maximum number of lattice points visited by the brute-force cone scan.
    pub max_box_points: u64,
}

pub const ENV_MAX_FILTER_SUBSETS: &str = "THINQUIV_MAX_FILTER_SUBSETS";
pub const ENV_MAX_CYCLE_CLASSES: &str = "THINQUIV_MAX_CYCLE_CLASSES";
pub const ENV_MAX_BOX_POINTS: &str = "THINQUIV_MAX_BOX_POINTS";

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_filter_subsets: 1 << 24,
            max_cycle_classes: 1 << 20,
            max_box_points: 1 << 28,
        }
    }
}

impl Limits {
    /// Defaults, overridden by any of the `THINQUIV_MAX_*` environment variables
    /// that parse as unsigned integers.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(v) = read_env(ENV_MAX_FILTER_SUBSETS) {
            limits.max_filter_subsets = v;
        }
        if let Some(v) = read_env(ENV_MAX_CYCLE_CLASSES) {
            limits.max_cycle_classes = v as usize;
        }
        if let Some(v) = read_env(ENV_MAX_BOX_POINTS) {
            limits.max_box_points = v;
        }
        limits
    }
}

fn read_env(key: &str) -> Option<u64> {
    env::var(key).ok()?.trim().parse().ok()
}
