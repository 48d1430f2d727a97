//! Fixtures for the criterion benchmarks.

use solvcover::{build, GroupSpec, GroupTable, DEFAULT_CAP};

/// Builds the group named by a spec expression, panicking on bad input.
pub fn group(spec: &str) -> GroupTable {
    let spec: GroupSpec = spec.parse().expect("group spec");
    build(&spec, DEFAULT_CAP).expect("group within the cap")
}
