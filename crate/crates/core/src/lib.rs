//! Parking sequences for cars of different lengths parking behind a trailer.
//!
//! A street has `z - 1 + sum(y)` spots, the first `z - 1` of them taken by a
//! trailer. Cars of lengths `y_1, ..., y_n` arrive in order with preferred
//! spots `c_1, ..., c_n`; a preference sequence under which every car parks
//! is a *parking sequence*.
//!
//! * [`street`] runs the parking process.
//! * [`classify`] decides membership in the derived families (increasing,
//!   permutation-invariant, strong, `k`-strong, vector parking functions).
//! * [`enumerate`] lists each family by brute force.
//! * [`count`] gives the closed-form sizes with exact big integers.
//! * [`biject`] holds the explicit bijections to lattice paths and vector
//!   parking functions.

pub mod biject;
pub mod classify;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod seq;
pub mod street;

pub use biject::{gamma, gamma_inverse, ips_to_lattice_path, lattice_path_to_ips, LatticePath};
pub use classify::{BoundaryVector, FamilyKind, InvariantFamily};
pub use count::BigCount;
pub use enumerate::{Enumerator, FamilyListing, DEFAULT_BUDGET};
pub use error::{ParkingError, Result};
pub use street::{
    order_statistics, simulate, street_length, FailureReason, ParkOutcome, ParkingInstance,
    Placement,
};
