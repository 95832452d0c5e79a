//! The parking process on a one-way street with a trailer.
//!
//! Spots are numbered from 1. The trailer fills spots `1..=z-1` (nothing when
//! `z == 1`) and the street ends at spot `M = z - 1 + sum(lengths)`, so a
//! successful run leaves no empty spot behind.
//!
//! Cars enter in index order. Car `i` drives to the first empty spot `j` at or
//! after its preference `c_i`. If the `y_i` spots starting at `j` are all free
//! it parks there; otherwise it collides and leaves the street. A blocked car
//! never keeps searching past the obstruction.

use serde::Serialize;

use crate::error::{ParkingError, Result};

/// Car lengths together with the trailer parameter `z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ParkingInstance {
    lengths: Vec<u32>,
    trailer: u32,
    #[serde(skip)]
    street: u32,
}

impl ParkingInstance {
    pub fn new(lengths: Vec<u32>, trailer: u32) -> Result<Self> {
        if lengths.is_empty() {
            return Err(ParkingError::NoCars);
        }
        if let Some(car) = lengths.iter().position(|&y| y == 0) {
            return Err(ParkingError::ZeroLength { car: car + 1 });
        }
        if trailer == 0 {
            return Err(ParkingError::ZeroTrailer);
        }
        let street = lengths
            .iter()
            .try_fold(trailer - 1, |acc, &y| acc.checked_add(y))
            .ok_or(ParkingError::StreetTooLong)?;
        Ok(ParkingInstance {
            lengths,
            trailer,
            street,
        })
    }

    /// Number of cars.
    pub fn cars(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    /// The trailer parameter `z`; the trailer itself is `z - 1` spots long.
    pub fn trailer(&self) -> u32 {
        self.trailer
    }

    /// Total number of spots, `z - 1 + sum(lengths)`.
    pub fn street_length(&self) -> u32 {
        self.street
    }

    /// Same cars in a different order, same trailer.
    pub fn with_lengths(&self, lengths: Vec<u32>) -> Result<Self> {
        ParkingInstance::new(lengths, self.trailer)
    }

    pub(crate) fn check_prefs(&self, prefs: &[u32]) -> Result<()> {
        if prefs.len() != self.lengths.len() {
            return Err(ParkingError::LengthMismatch {
                expected: self.lengths.len(),
                found: prefs.len(),
            });
        }
        if let Some(p) = prefs.iter().position(|&c| c == 0) {
            return Err(ParkingError::ZeroPreference { position: p + 1 });
        }
        Ok(())
    }
}

pub fn street_length(instance: &ParkingInstance) -> u32 {
    instance.street_length()
}

/// Closed interval of spots `[start, end]` taken by one car.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Placement {
    pub start: u32,
    pub end: u32,
}

impl Placement {
    /// Number of spots covered.
    pub fn spots(&self) -> u32 {
        self.end - self.start + 1
    }

    pub fn contains(&self, spot: u32) -> bool {
        (self.start..=self.end).contains(&spot)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FailureReason {
    /// Every spot at or after the preference is already taken (or the
    /// preference lies beyond the end of the street).
    OffStreet { preference: u32 },
    /// The car found an empty spot at `start` but could not fit: `blocked_at`
    /// is the first occupied spot in its way, or `M + 1` when the street ends.
    Collision { start: u32, blocked_at: u32 },
}

/// Result of running the parking process once.
///
/// Cars are numbered from 1, matching the labels `C1, C2, ...` on a street
/// diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ParkOutcome {
    Success {
        /// `placements[i]` is the interval taken by car `i + 1`.
        placements: Vec<Placement>,
        /// Car numbers listed from the trailer towards the end of the street.
        configuration: Vec<usize>,
    },
    Failure {
        failed_car: usize,
        reason: FailureReason,
        /// Intervals of the cars that parked before the failure.
        parked: Vec<Placement>,
    },
}

impl ParkOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, ParkOutcome::Success { .. })
    }

    pub fn configuration(&self) -> Option<&[usize]> {
        match self {
            ParkOutcome::Success { configuration, .. } => Some(configuration),
            ParkOutcome::Failure { .. } => None,
        }
    }

    pub fn placements(&self) -> &[Placement] {
        match self {
            ParkOutcome::Success { placements, .. } => placements,
            ParkOutcome::Failure { parked, .. } => parked,
        }
    }
}

/// Reusable occupancy buffer for running the process many times on one
/// instance without reallocating.
#[derive(Debug, Clone)]
pub(crate) struct Street<'a> {
    instance: &'a ParkingInstance,
    // index 0 unused so spot numbers index directly
    occupied: Vec<bool>,
}

impl<'a> Street<'a> {
    pub(crate) fn new(instance: &'a ParkingInstance) -> Self {
        Street {
            instance,
            occupied: vec![false; instance.street_length() as usize + 1],
        }
    }

    fn reset(&mut self) {
        let trailer_end = self.instance.trailer as usize - 1;
        for (spot, cell) in self.occupied.iter_mut().enumerate() {
            *cell = spot >= 1 && spot <= trailer_end;
        }
    }

    /// Parks one car; returns its start spot or the failure reason.
    fn park_one(
        &mut self,
        length: u32,
        preference: u32,
    ) -> std::result::Result<u32, FailureReason> {
        let street = self.instance.street_length();
        let start = (preference..=street).find(|&s| !self.occupied[s as usize]);
        let Some(start) = start else {
            return Err(FailureReason::OffStreet { preference });
        };
        let last = start as u64 + length as u64 - 1;
        let blocked =
            (start + 1..=last.min(street as u64) as u32).find(|&s| self.occupied[s as usize]);
        if let Some(blocked_at) = blocked {
            return Err(FailureReason::Collision { start, blocked_at });
        }
        if last > street as u64 {
            return Err(FailureReason::Collision {
                start,
                blocked_at: street + 1,
            });
        }
        for s in start..=last as u32 {
            self.occupied[s as usize] = true;
        }
        Ok(start)
    }

    /// Fast success test used by the enumerators.
    pub(crate) fn parks(&mut self, lengths: &[u32], prefs: &[u32]) -> bool {
        self.reset();
        lengths
            .iter()
            .zip(prefs)
            .all(|(&y, &c)| self.park_one(y, c).is_ok())
    }

    fn run(&mut self, prefs: &[u32]) -> ParkOutcome {
        self.reset();
        let lengths = self.instance.lengths();
        let mut placements = Vec::with_capacity(lengths.len());
        for (i, (&y, &c)) in lengths.iter().zip(prefs).enumerate() {
            match self.park_one(y, c) {
                Ok(start) => placements.push(Placement {
                    start,
                    end: start + y - 1,
                }),
                Err(reason) => {
                    return ParkOutcome::Failure {
                        failed_car: i + 1,
                        reason,
                        parked: placements,
                    }
                }
            }
        }
        let mut configuration: Vec<usize> = (1..=lengths.len()).collect();
        configuration.sort_by_key(|&car| placements[car - 1].start);
        ParkOutcome::Success {
            placements,
            configuration,
        }
    }
}

/// Runs the parking process for `prefs` on `instance`.
///
/// Stops at the first car that cannot park; later cars are not simulated.
pub fn simulate(instance: &ParkingInstance, prefs: &[u32]) -> Result<ParkOutcome> {
    instance.check_prefs(prefs)?;
    Ok(Street::new(instance).run(prefs))
}

/// Non-decreasing rearrangement `c_(1) <= ... <= c_(n)`.
pub fn order_statistics(prefs: &[u32]) -> Vec<u32> {
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    sorted
}
