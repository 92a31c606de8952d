//! Shared inputs for the benchmarks.

use swlink::FamilyParams;

/// Parameter pairs benchmarked by every group, small to large.
pub const SIZES: [(u32, u32); 3] = [(3, 2), (5, 4), (8, 6)];

pub fn params(m: u32, p: u32) -> FamilyParams {
    FamilyParams::new(m, p).expect("benchmark parameters are valid")
}
