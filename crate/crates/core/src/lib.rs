//! Solvabilizer covering numbers of finite nonsolvable permutation groups.
//!
//! `Sol(x)` is the set of `y` with `⟨x, y⟩` solvable. α(G) is the least
//! number of elements outside the solvable radical whose solvabilizers cover
//! G; α_inv(G) restricts the choice to involutions and is infinite when no
//! such cover exists.

pub mod bitset;
pub mod clique;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod field;
pub mod group;
pub mod io;
pub mod perm;
pub mod solvabilizer;
pub mod theorems;

pub use constructions::{build, GroupSpec, WreathTop};
pub use cover::{
    solve_alpha, solve_exact, solve_product, CoverOutcome, SolveBudget, SolveOptions, Status,
};
pub use error::{Error, Result};
pub use group::{enumerate_group, ElementSet, GroupTable, DEFAULT_CAP};
pub use io::{parse_certificate, parse_group_spec, render_certificate, render_table, ResultRecord};
pub use perm::Permutation;
pub use solvabilizer::{reduce_instance, sol_incidence, sol_of, CoverInstance, Mode};
pub use theorems::{
    cross_check, family_bounds, verify_certificate, verify_gl2_cover, BoundReport, Certificate,
    Computed, Verification,
};

/// Version string recorded in result files.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
