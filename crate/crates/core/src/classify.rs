//! Membership tests for the parking-sequence families.
//!
//! Most families come in two forms: a definition form that runs the parking
//! process over rearrangements, and a closed characterization that only
//! inspects the preferences. The exhaustive tests check that the two agree.

use serde::Serialize;

use crate::error::{ParkingError, Result};
use crate::seq::{compositions, distinct_permutations, is_nondecreasing};
use crate::street::{order_statistics, simulate, ParkOutcome, ParkingInstance, Street};

/// Non-decreasing vector of positive integers `u_1 <= ... <= u_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct BoundaryVector(Vec<u32>);

impl BoundaryVector {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.is_empty() || values[0] == 0 || !is_nondecreasing(&values) {
            return Err(ParkingError::InvalidBoundary);
        }
        Ok(BoundaryVector(values))
    }

    /// `(z, z + 1, ..., z + n - 1)`.
    pub fn arithmetic(z: u32, n: usize) -> Result<Self> {
        BoundaryVector::new((0..n as u32).map(|i| z + i).collect())
    }

    /// `(z^(n-r+1), z + 1, ..., z + r - 1)`, the boundary matched by the
    /// invariant sequences of a two-block length vector.
    pub fn two_block(z: u32, n: usize, r: usize) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(ParkingError::OutOfRange(format!(
                "two-block boundary needs 1 <= r < n, got r={r}, n={n}"
            )));
        }
        let mut u = vec![z; n - r + 1];
        u.extend((1..r as u32).map(|s| z + s));
        BoundaryVector::new(u)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> u32 {
        *self.0.last().expect("boundary vectors are non-empty")
    }
}

/// Names of the families this crate can decide and list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyKind {
    /// All parking sequences.
    Ps,
    /// Non-decreasing parking sequences.
    Ips,
    /// Sequences all of whose rearrangements park.
    PsInv,
    /// Sequences that park every ordering of the lengths.
    Sps,
    /// Sequences of length `k` that park every composition of `n` into `k`
    /// cars on a street of `z + n - 1` spots.
    SpsK { n: u32, k: usize },
    /// `u`-parking functions.
    Upf { u: BoundaryVector },
}

pub fn is_parking_sequence(instance: &ParkingInstance, prefs: &[u32]) -> Result<bool> {
    Ok(simulate(instance, prefs)?.is_success())
}

/// The counting condition every parking sequence satisfies: at least one
/// preference is `<= z`, and for each `t` in `1..n` at least `t + 1`
/// preferences are at most `z` plus the `t` largest lengths.
pub fn necessary_condition(instance: &ParkingInstance, prefs: &[u32]) -> Result<bool> {
    instance.check_prefs(prefs)?;
    let z = instance.trailer() as u64;
    let mut longest_first = instance.lengths().to_vec();
    longest_first.sort_unstable_by(|a, b| b.cmp(a));
    let at_most = |bound: u64| prefs.iter().filter(|&&c| c as u64 <= bound).count();
    if at_most(z) < 1 {
        return Ok(false);
    }
    let mut bound = z;
    for t in 1..prefs.len() {
        bound += longest_first[t - 1] as u64;
        if at_most(bound) < t + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `c_k <= z + y_1 + ... + y_{k-1}` for every `k`.
fn within_prefix_bounds(lengths: &[u32], z: u32, prefs: &[u32]) -> bool {
    let mut bound = z as u64;
    for (&y, &c) in lengths.iter().zip(prefs) {
        if c as u64 > bound {
            return false;
        }
        bound += y as u64;
    }
    true
}

/// Non-decreasing members of `PS(y; z)`, decided by the prefix bounds
/// `c_i <= z + y_1 + ... + y_{i-1}` without running the process.
pub fn is_increasing_ps(instance: &ParkingInstance, prefs: &[u32]) -> Result<bool> {
    instance.check_prefs(prefs)?;
    Ok(is_nondecreasing(prefs)
        && within_prefix_bounds(instance.lengths(), instance.trailer(), prefs))
}

/// Whether `prefs` parks the cars as `T, C1, C2, ..., Cn` with no gaps.
pub fn parks_in_standard_order(instance: &ParkingInstance, prefs: &[u32]) -> Result<bool> {
    instance.check_prefs(prefs)?;
    Ok(within_prefix_bounds(
        instance.lengths(),
        instance.trailer(),
        prefs,
    ))
}

/// Same question as [`parks_in_standard_order`], answered by simulation.
pub fn parks_in_standard_order_by_simulation(
    instance: &ParkingInstance,
    prefs: &[u32],
) -> Result<bool> {
    Ok(match simulate(instance, prefs)? {
        ParkOutcome::Success { configuration, .. } => configuration
            .iter()
            .enumerate()
            .all(|(i, &car)| car == i + 1),
        ParkOutcome::Failure { .. } => false,
    })
}

/// Every distinct rearrangement of `prefs` (including itself) parks.
pub fn is_permutation_invariant(instance: &ParkingInstance, prefs: &[u32]) -> Result<bool> {
    instance.check_prefs(prefs)?;
    let mut street = Street::new(instance);
    Ok(distinct_permutations(prefs).all(|p| street.parks(instance.lengths(), &p)))
}

/// Length vectors whose invariant sequences have a closed description.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum InvariantFamily {
    /// `y_1 < y_2 < ... < y_n`.
    StrictlyIncreasing,
    /// `y = (k^n)`.
    Constant { k: u32 },
    /// `y = (a^r, b^(n-r))` with `a < b` and `1 <= r < n`.
    TwoBlock { a: u32, b: u32, r: usize },
    /// `y = (a, 1^(n-1))` with `a > 1`.
    LongFirst { a: u32 },
}

impl InvariantFamily {
    /// Matches the literal (unsorted) length vector against the
    /// characterized shapes, in the order listed on the enum.
    pub fn of(lengths: &[u32]) -> Option<Self> {
        let n = lengths.len();
        if n == 0 {
            return None;
        }
        if lengths.windows(2).all(|w| w[0] < w[1]) {
            return Some(InvariantFamily::StrictlyIncreasing);
        }
        let a = lengths[0];
        if lengths.iter().all(|&y| y == a) {
            return Some(InvariantFamily::Constant { k: a });
        }
        let r = lengths.iter().take_while(|&&y| y == a).count();
        let b = lengths[r];
        if a < b && lengths[r..].iter().all(|&y| y == b) {
            return Some(InvariantFamily::TwoBlock { a, b, r });
        }
        if a > 1 && lengths[1..].iter().all(|&y| y == 1) {
            return Some(InvariantFamily::LongFirst { a });
        }
        None
    }

    /// Closed-form invariance verdict for `prefs` under this shape.
    fn decide(self, z: u32, prefs: &[u32]) -> bool {
        let n = prefs.len();
        let sorted = order_statistics(prefs);
        let on_lattice = |c: u32, step: u32, steps: u32| {
            c <= z || ((c - z).is_multiple_of(step) && (c - z) / step <= steps)
        };
        match self {
            InvariantFamily::StrictlyIncreasing => prefs.iter().all(|&c| c <= z),
            InvariantFamily::Constant { k } => {
                sorted
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c as u64 <= z as u64 + i as u64 * k as u64)
                    && prefs.iter().all(|&c| on_lattice(c, k, n as u32 - 1))
            }
            InvariantFamily::TwoBlock { a, r, .. } => {
                sorted[..n - r + 1].iter().all(|&c| c <= z)
                    && (2..=r).all(|j| on_lattice(sorted[n - r + j - 1], a, j as u32 - 1))
            }
            InvariantFamily::LongFirst { .. } => sorted
                .iter()
                .enumerate()
                .all(|(i, &c)| c as u64 <= z as u64 + i as u64),
        }
    }
}

/// Closed-form answer to [`is_permutation_invariant`] when the length vector
/// has one of the [`InvariantFamily`] shapes, `None` otherwise.
pub fn perm_invariant_characterized(
    instance: &ParkingInstance,
    prefs: &[u32],
) -> Result<Option<bool>> {
    instance.check_prefs(prefs)?;
    Ok(InvariantFamily::of(instance.lengths()).map(|f| f.decide(instance.trailer(), prefs)))
}

/// Strong parking sequence test via the standard-order characterization:
/// for constant lengths every ordering is the same instance, otherwise the
/// sequence must park the sorted lengths in standard order.
pub fn is_strong_ps(instance: &ParkingInstance, prefs: &[u32]) -> Result<bool> {
    instance.check_prefs(prefs)?;
    let lengths = instance.lengths();
    if lengths.iter().all(|&y| y == lengths[0]) {
        return is_parking_sequence(instance, prefs);
    }
    Ok(within_prefix_bounds(
        &order_statistics(lengths),
        instance.trailer(),
        prefs,
    ))
}

/// Strong parking sequence test straight from the definition: simulate every
/// distinct ordering of the lengths.
pub fn is_strong_ps_by_definition(instance: &ParkingInstance, prefs: &[u32]) -> Result<bool> {
    instance.check_prefs(prefs)?;
    let mut street = Street::new(instance);
    Ok(distinct_permutations(instance.lengths()).all(|y| street.parks(&y, prefs)))
}

/// The composition `(1^(k-1), n-k+1)` that is hardest to park among all
/// compositions of `n` into `k` parts.
pub fn extreme_composition(n: u32, k: usize) -> Result<Vec<u32>> {
    check_k(n, k)?;
    let mut y = vec![1; k - 1];
    y.push(n - k as u32 + 1);
    Ok(y)
}

fn check_k(n: u32, k: usize) -> Result<()> {
    if k == 0 || k as u64 > n as u64 {
        return Err(ParkingError::OutOfRange(format!(
            "need 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    Ok(())
}

fn check_k_prefs(k: usize, prefs: &[u32]) -> Result<()> {
    if prefs.len() != k {
        return Err(ParkingError::LengthMismatch {
            expected: k,
            found: prefs.len(),
        });
    }
    Ok(())
}

/// `k`-strong test: strong for the extreme composition `(1^(k-1), n-k+1)`.
pub fn is_k_strong(n: u32, k: usize, z: u32, prefs: &[u32]) -> Result<bool> {
    let y0 = extreme_composition(n, k)?;
    check_k_prefs(k, prefs)?;
    is_strong_ps(&ParkingInstance::new(y0, z)?, prefs)
}

/// `k`-strong test from the definition: strong (by simulation) for every
/// composition of `n` into `k` parts. Exponential; for verification only.
pub fn is_k_strong_by_definition(n: u32, k: usize, z: u32, prefs: &[u32]) -> Result<bool> {
    check_k(n, k)?;
    check_k_prefs(k, prefs)?;
    for y in compositions(n, k) {
        if !is_strong_ps_by_definition(&ParkingInstance::new(y, z)?, prefs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x_(i) <= u_i` for every `i`.
pub fn is_u_parking_function(u: &BoundaryVector, x: &[u32]) -> Result<bool> {
    if x.len() != u.len() {
        return Err(ParkingError::LengthMismatch {
            expected: u.len(),
            found: x.len(),
        });
    }
    Ok(order_statistics(x)
        .iter()
        .zip(u.as_slice())
        .all(|(&xi, &ui)| xi >= 1 && xi <= ui))
}
