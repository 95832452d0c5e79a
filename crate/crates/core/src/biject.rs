//! Explicit bijections: increasing parking sequences to lattice paths, and
//! the relabelling `gamma` that sends invariant sequences of constant and
//! two-block length vectors to vector parking functions.

use serde::Serialize;

use crate::classify::{is_increasing_ps, BoundaryVector};
use crate::count::ips_boundary;
use crate::error::{ParkingError, Result};
use crate::seq::is_nondecreasing;
use crate::street::ParkingInstance;

/// Lattice path from `(0, 0)` to `(width, q)` given by the x-coordinates of
/// its north steps, constrained by a strict right boundary: `0 <= x_i < b_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePath {
    xs: Vec<u32>,
    boundary: BoundaryVector,
    width: u32,
}

impl LatticePath {
    pub fn new(xs: Vec<u32>, boundary: BoundaryVector, width: u32) -> Result<Self> {
        if xs.len() != boundary.len() {
            return Err(ParkingError::LengthMismatch {
                expected: boundary.len(),
                found: xs.len(),
            });
        }
        if !is_nondecreasing(&xs) {
            return Err(ParkingError::OutOfDomain(format!(
                "north steps {xs:?} are not non-decreasing"
            )));
        }
        if let Some(i) = xs.iter().zip(boundary.as_slice()).position(|(x, b)| x >= b) {
            return Err(ParkingError::OutOfDomain(format!(
                "north step {} at x={} crosses the boundary {}",
                i + 1,
                xs[i],
                boundary.as_slice()[i]
            )));
        }
        if xs.last().is_some_and(|&x| x > width) {
            return Err(ParkingError::OutOfDomain(format!(
                "path does not fit in width {width}"
            )));
        }
        Ok(LatticePath {
            xs,
            boundary,
            width,
        })
    }

    pub(crate) fn new_unchecked(xs: Vec<u32>, boundary: BoundaryVector, width: u32) -> Self {
        LatticePath {
            xs,
            boundary,
            width,
        }
    }

    pub fn north_steps(&self) -> &[u32] {
        &self.xs
    }

    pub fn boundary(&self) -> &BoundaryVector {
        &self.boundary
    }

    pub fn width(&self) -> u32 {
        self.width
    }
}

fn instance_boundary(instance: &ParkingInstance) -> BoundaryVector {
    BoundaryVector::new(ips_boundary(instance)).expect("prefix sums from z >= 1 are a boundary")
}

/// `x_i = c_i - 1`, on the boundary `(z, z + y_1, ...)` with width `M`.
pub fn ips_to_lattice_path(instance: &ParkingInstance, prefs: &[u32]) -> Result<LatticePath> {
    if !is_increasing_ps(instance, prefs)? {
        return Err(ParkingError::OutOfDomain(format!(
            "{prefs:?} is not an increasing parking sequence"
        )));
    }
    Ok(LatticePath::new_unchecked(
        prefs.iter().map(|&c| c - 1).collect(),
        instance_boundary(instance),
        instance.street_length(),
    ))
}

/// Inverse of [`ips_to_lattice_path`]: `c_i = x_i + 1`.
pub fn lattice_path_to_ips(instance: &ParkingInstance, path: &LatticePath) -> Result<Vec<u32>> {
    let expected = instance_boundary(instance);
    if path.boundary != expected || path.width != instance.street_length() {
        return Err(ParkingError::OutOfDomain(format!(
            "path boundary {:?} (width {}) does not match instance boundary {:?} (width {})",
            path.boundary.as_slice(),
            path.width,
            expected.as_slice(),
            instance.street_length()
        )));
    }
    Ok(path.xs.iter().map(|&x| x + 1).collect())
}

/// Relabels `z + s*a` as `z + s`, leaving entries `<= z` alone.
pub fn gamma(z: u32, a: u32, prefs: &[u32]) -> Result<Vec<u32>> {
    if a == 0 {
        return Err(ParkingError::OutOfRange("step a must be at least 1".into()));
    }
    prefs
        .iter()
        .map(|&c| {
            if c == 0 {
                Err(ParkingError::OutOfDomain(
                    "preferences must be positive".into(),
                ))
            } else if c <= z {
                Ok(c)
            } else if (c - z).is_multiple_of(a) {
                Ok(z + (c - z) / a)
            } else {
                Err(ParkingError::OutOfDomain(format!(
                    "{c} is neither <= {z} nor of the form {z} + s*{a}"
                )))
            }
        })
        .collect()
}

/// Inverse of [`gamma`]: `z + s` becomes `z + s*a`.
pub fn gamma_inverse(z: u32, a: u32, prefs: &[u32]) -> Result<Vec<u32>> {
    if a == 0 {
        return Err(ParkingError::OutOfRange("step a must be at least 1".into()));
    }
    prefs
        .iter()
        .map(|&c| {
            if c == 0 {
                Err(ParkingError::OutOfDomain(
                    "preferences must be positive".into(),
                ))
            } else if c <= z {
                Ok(c)
            } else {
                (c - z)
                    .checked_mul(a)
                    .and_then(|d| d.checked_add(z))
                    .ok_or_else(|| {
                        ParkingError::OutOfRange(format!("{c} overflows under step {a}"))
                    })
            }
        })
        .collect()
}
