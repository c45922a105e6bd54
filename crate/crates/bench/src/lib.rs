//! Fixed workloads shared by the criterion benches.

use cubic3_core::parametrization::{enumerate_y11, st_max_for};
use cubic3_core::CurvePoint;
use std::collections::BTreeSet;

/// Levels exercised by the benches: a prime, a square, a two-prime product, a `9 D1` class.
pub const LEVELS: [i128; 4] = [7, 49, 91, 63];

pub fn base_for(z_max: i128) -> BTreeSet<CurvePoint> {
    enumerate_y11(st_max_for(z_max)).expect("base enumeration")
}
