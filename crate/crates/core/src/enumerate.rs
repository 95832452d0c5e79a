//! Brute-force listings of every family.
//!
//! These are the ground truth for the closed forms in [`crate::count`] and
//! the characterizations in [`crate::classify`], so they only ever run the
//! parking process (or test the raw definition) over an explicit search
//! space. Any preference above the street length `M` fails immediately, so
//! `[1..M]^n` is a complete search space.
//!
//! Work is split over the first coordinate and run on the rayon pool; the
//! merged output is always in lexicographic order.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::biject::LatticePath;
use crate::classify::{
    extreme_composition, is_k_strong, is_k_strong_by_definition, BoundaryVector, FamilyKind,
};
use crate::count::{ips_boundary, BigCount};
use crate::error::{ParkingError, Result};
use crate::seq::{compositions, distinct_permutations, for_each_in_box, for_each_nondecreasing};
use crate::street::{order_statistics, ParkingInstance, Street};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A family listed exhaustively, members in strictly ascending
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyListing {
    pub kind: FamilyKind,
    /// The parking instance the family was listed for, when there is one.
    pub instance: Option<ParkingInstance>,
    pub members: Vec<Vec<u32>>,
    #[serde(serialize_with = "as_decimal")]
    pub cardinality: BigCount,
}

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl FamilyListing {
    fn new(
        kind: FamilyKind,
        instance: Option<ParkingInstance>,
        mut members: Vec<Vec<u32>>,
    ) -> Self {
        members.sort_unstable();
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]), "duplicate members");
        let cardinality = BigCount::from(members.len());
        FamilyListing {
            kind,
            instance,
            members,
            cardinality,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, seq: &[u32]) -> bool {
        self.members
            .binary_search_by(|m| m.as_slice().cmp(seq))
            .is_ok()
    }
}

/// Runs the brute-force listings under a cap on the size of the search space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    budget: u64,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            budget: DEFAULT_BUDGET,
        }
    }
}

fn box_size(upper: &[u32]) -> u128 {
    upper
        .iter()
        .try_fold(1u128, |acc, &u| acc.checked_mul(u as u128))
        .unwrap_or(u128::MAX)
}

fn multichoose(values: u32, len: usize) -> u128 {
    // C(values + len - 1, len), saturating
    let mut acc = 1u128;
    for i in 0..len as u128 {
        acc = match acc.checked_mul(values as u128 + i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Filters the box `[1..upper_0] x ... x [1..upper_{n-1}]`, one `state` per
/// worker.
fn filter_box<S, I, P>(upper: &[u32], init: I, keep: P) -> Vec<Vec<u32>>
where
    I: Fn() -> S + Sync,
    P: Fn(&mut S, &[u32]) -> bool + Sync,
{
    let Some((&first_max, rest)) = upper.split_first() else {
        return Vec::new();
    };
    (1..=first_max)
        .into_par_iter()
        .map(|first| {
            let mut state = init();
            let mut out = Vec::new();
            let mut seq = Vec::with_capacity(upper.len());
            for_each_in_box(rest, |tail| {
                seq.clear();
                seq.push(first);
                seq.extend_from_slice(tail);
                if keep(&mut state, &seq) {
                    out.push(seq.clone());
                }
            });
            out
        })
        .collect::<Vec<_>>()
        .concat()
}

/// Filters the non-decreasing sequences of length `len` over `1..=max`.
fn filter_nondecreasing<S, I, P>(len: usize, max: u32, init: I, keep: P) -> Vec<Vec<u32>>
where
    I: Fn() -> S + Sync,
    P: Fn(&mut S, &[u32]) -> bool + Sync,
{
    if len == 0 {
        return Vec::new();
    }
    (1..=max)
        .into_par_iter()
        .map(|first| {
            let mut state = init();
            let mut out = Vec::new();
            let mut seq = Vec::with_capacity(len);
            for_each_nondecreasing(len - 1, first, max, |tail| {
                seq.clear();
                seq.push(first);
                seq.extend_from_slice(tail);
                if keep(&mut state, &seq) {
                    out.push(seq.clone());
                }
            });
            out
        })
        .collect::<Vec<_>>()
        .concat()
}

impl Enumerator {
    pub fn with_budget(budget: u64) -> Self {
        Enumerator { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    fn charge(&self, needed: u128) -> Result<()> {
        if needed > self.budget as u128 {
            return Err(ParkingError::BudgetExceeded {
                needed,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// `PS(y; z)`: every `c` in `[1..M]^n` that parks.
    pub fn ps(&self, instance: &ParkingInstance) -> Result<FamilyListing> {
        let upper = vec![instance.street_length(); instance.cars()];
        self.charge(box_size(&upper))?;
        let members = filter_box(
            &upper,
            || Street::new(instance),
            |street, c| street.parks(instance.lengths(), c),
        );
        Ok(FamilyListing::new(
            FamilyKind::Ps,
            Some(instance.clone()),
            members,
        ))
    }

    /// `IPS(y; z)` by simulating every non-decreasing `c` in `[1..M]^n`.
    pub fn ips(&self, instance: &ParkingInstance) -> Result<FamilyListing> {
        let m = instance.street_length();
        self.charge(multichoose(m, instance.cars()))?;
        let members = filter_nondecreasing(
            instance.cars(),
            m,
            || Street::new(instance),
            |street, c| street.parks(instance.lengths(), c),
        );
        Ok(FamilyListing::new(
            FamilyKind::Ips,
            Some(instance.clone()),
            members,
        ))
    }

    /// `IPS(y; z)` generated straight from the prefix bounds
    /// `c_i <= z + y_1 + ... + y_{i-1}`, without simulation.
    pub fn ips_from_bounds(&self, instance: &ParkingInstance) -> Result<FamilyListing> {
        let bounds = ips_boundary(instance);
        self.charge(box_size(&bounds))?;
        fn go(bounds: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            let i = prefix.len();
            if i == bounds.len() {
                out.push(prefix.clone());
                return;
            }
            let low = prefix.last().copied().unwrap_or(1);
            for c in low..=bounds[i] {
                prefix.push(c);
                go(bounds, prefix, out);
                prefix.pop();
            }
        }
        let mut members = Vec::new();
        go(&bounds, &mut Vec::with_capacity(bounds.len()), &mut members);
        Ok(FamilyListing::new(
            FamilyKind::Ips,
            Some(instance.clone()),
            members,
        ))
    }

    /// `PS_inv(y; z)`: sequences all of whose rearrangements park. Each
    /// multiset is tested once (all its distinct orderings simulated) and,
    /// if it passes, contributes its whole orbit.
    pub fn ps_inv(&self, instance: &ParkingInstance) -> Result<FamilyListing> {
        let m = instance.street_length();
        let n = instance.cars();
        self.charge(box_size(&vec![m; n]))?;
        let orbits = filter_nondecreasing(
            n,
            m,
            || Street::new(instance),
            |street, c| distinct_permutations(c).all(|p| street.parks(instance.lengths(), &p)),
        );
        let members = orbits
            .iter()
            .flat_map(|c| distinct_permutations(c))
            .collect();
        Ok(FamilyListing::new(
            FamilyKind::PsInv,
            Some(instance.clone()),
            members,
        ))
    }

    /// `SPS{y; z}` from the definition: `c` parks every distinct ordering of
    /// the lengths.
    pub fn sps(&self, instance: &ParkingInstance) -> Result<FamilyListing> {
        let upper = vec![instance.street_length(); instance.cars()];
        let orderings: Vec<Vec<u32>> = distinct_permutations(instance.lengths()).collect();
        self.charge(box_size(&upper).saturating_mul(orderings.len() as u128))?;
        let members = filter_box(
            &upper,
            || Street::new(instance),
            |street, c| orderings.iter().all(|y| street.parks(y, c)),
        );
        Ok(FamilyListing::new(
            FamilyKind::Sps,
            Some(instance.clone()),
            members,
        ))
    }

    /// `SPS{y; z}` through the standard-order characterization: the box
    /// `c_k <= z + y_(1) + ... + y_(k-1)` over the sorted lengths, or
    /// `PS(y; z)` when the lengths are constant.
    pub fn sps_standard_order(&self, instance: &ParkingInstance) -> Result<FamilyListing> {
        let lengths = instance.lengths();
        if lengths.iter().all(|&y| y == lengths[0]) {
            let mut listing = self.ps(instance)?;
            listing.kind = FamilyKind::Sps;
            return Ok(listing);
        }
        let sorted = instance.with_lengths(order_statistics(lengths))?;
        let upper = ips_boundary(&sorted);
        self.charge(box_size(&upper))?;
        let mut members = Vec::new();
        for_each_in_box(&upper, |c| members.push(c.to_vec()));
        Ok(FamilyListing::new(
            FamilyKind::Sps,
            Some(instance.clone()),
            members,
        ))
    }

    /// `SPS_k(n; z)`: all `c` in `[1..z+n-1]^k` that are `k`-strong.
    pub fn sps_k(&self, n: u32, k: usize, z: u32) -> Result<FamilyListing> {
        self.sps_k_with(n, k, z, is_k_strong, 1)
    }

    /// `SPS_k(n; z)` from the definition: intersect the strong sets of every
    /// composition of `n` into `k` parts, each tested by simulation.
    pub fn sps_k_by_definition(&self, n: u32, k: usize, z: u32) -> Result<FamilyListing> {
        extreme_composition(n, k)?;
        // each candidate may run every ordering of every composition
        let orderings = (1..=k as u128).product::<u128>();
        let work = (compositions(n, k).len() as u128).saturating_mul(orderings);
        self.sps_k_with(n, k, z, is_k_strong_by_definition, work)
    }

    fn sps_k_with(
        &self,
        n: u32,
        k: usize,
        z: u32,
        test: fn(u32, usize, u32, &[u32]) -> Result<bool>,
        work_per_candidate: u128,
    ) -> Result<FamilyListing> {
        // validates k and z before any work
        test(n, k, z, &vec![1; k])?;
        let top = z
            .checked_add(n - 1)
            .ok_or_else(|| ParkingError::OutOfRange("z + n - 1 overflows".into()))?;
        let upper = vec![top; k];
        self.charge(box_size(&upper).saturating_mul(work_per_candidate))?;
        let members = filter_box(
            &upper,
            || (),
            |_, c| test(n, k, z, c).expect("parameters validated above"),
        );
        Ok(FamilyListing::new(FamilyKind::SpsK { n, k }, None, members))
    }

    /// `PF_n(u)`: all `x` in `[1..u_n]^n` whose sorted entries sit under `u`.
    pub fn u_pf(&self, u: &BoundaryVector) -> Result<FamilyListing> {
        let upper = vec![u.last(); u.len()];
        self.charge(box_size(&upper))?;
        let bound = u.as_slice();
        let members = filter_box(&upper, Vec::new, |scratch: &mut Vec<u32>, x| {
            scratch.clear();
            scratch.extend_from_slice(x);
            scratch.sort_unstable();
            scratch.iter().zip(bound).all(|(a, b)| a <= b)
        });
        Ok(FamilyListing::new(
            FamilyKind::Upf { u: u.clone() },
            None,
            members,
        ))
    }

    /// Lattice paths to `(width, q)` with strict right boundary `b`
    /// (`q = b.len()`): all non-decreasing `0 <= x_i < b_i`, `x_q <= width`.
    pub fn lattice_paths(&self, boundary: &BoundaryVector, width: u32) -> Result<Vec<LatticePath>> {
        let q = boundary.len();
        let top = boundary.last().min(width.saturating_add(1));
        self.charge(multichoose(top, q))?;
        let b = boundary.as_slice();
        // shift by one so the odometer works on positive values
        let shifted = filter_nondecreasing(
            q,
            top,
            || (),
            |_, v| v.iter().zip(b).all(|(&x1, &bi)| x1 - 1 < bi) && v[q - 1] - 1 <= width,
        );
        Ok(shifted
            .into_iter()
            .map(|v| {
                LatticePath::new_unchecked(
                    v.into_iter().map(|x| x - 1).collect(),
                    boundary.clone(),
                    width,
                )
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(lengths: &[u32], z: u32) -> ParkingInstance {
        ParkingInstance::new(lengths.to_vec(), z).unwrap()
    }

    fn e() -> Enumerator {
        Enumerator::default()
    }

    #[test]
    fn ps_listings() {
        let got = e().ps(&inst(&[1, 2], 1)).unwrap();
        assert_eq!(got.members, vec![vec![1, 1], vec![1, 2], vec![3, 1]]);
        assert_eq!(got.cardinality, BigCount::from(3u32));
        assert_eq!(e().ps(&inst(&[1], 1)).unwrap().members, vec![vec![1]]);
        assert_eq!(e().ps(&inst(&[1, 2, 2, 3], 4)).unwrap().len(), 2880);
    }

    #[test]
    fn ips_listings() {
        let y = inst(&[2, 2], 1);
        let got = e().ips(&y).unwrap();
        assert_eq!(got.members, vec![vec![1, 1], vec![1, 2], vec![1, 3]]);
        assert_eq!(e().ips_from_bounds(&y).unwrap(), got);
        assert_eq!(e().ips(&inst(&[1, 1, 1], 1)).unwrap().len(), 5);
        assert_eq!(
            e().ips(&inst(&[1], 3)).unwrap().members,
            vec![vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn ps_inv_listings() {
        let got = e().ps_inv(&inst(&[4, 3, 2], 1)).unwrap();
        assert_eq!(
            got.members,
            vec![vec![1, 1, 1], vec![1, 1, 4], vec![1, 4, 1], vec![4, 1, 1]]
        );
        let got = e().ps_inv(&inst(&[4, 3, 1], 1)).unwrap();
        assert_eq!(
            got.members,
            vec![
                vec![1, 1, 1],
                vec![1, 1, 4],
                vec![1, 1, 5],
                vec![1, 4, 1],
                vec![1, 5, 1],
                vec![4, 1, 1],
                vec![5, 1, 1]
            ]
        );
        assert_eq!(e().ps_inv(&inst(&[2, 2, 1], 1)).unwrap().len(), 7);
        assert_eq!(
            e().ps_inv(&inst(&[1, 2], 1)).unwrap().members,
            vec![vec![1, 1]]
        );
    }

    #[test]
    fn two_car_invariant_sets() {
        // y1 < y2 gives only (1,1); y1 >= y2 adds (1, y2+1) and (y2+1, 1)
        for y1 in 1..=4u32 {
            for y2 in 1..=4u32 {
                let got = e().ps_inv(&inst(&[y1, y2], 1)).unwrap().members;
                let want = if y1 < y2 {
                    vec![vec![1, 1]]
                } else {
                    vec![vec![1, 1], vec![1, y2 + 1], vec![y2 + 1, 1]]
                };
                assert_eq!(got, want, "y = ({y1}, {y2})");
            }
        }
    }

    #[test]
    fn sps_listings() {
        let y = inst(&[1, 2], 1);
        assert_eq!(e().sps(&y).unwrap().members, vec![vec![1, 1], vec![1, 2]]);
        assert_eq!(e().sps_standard_order(&y).unwrap(), e().sps(&y).unwrap());
        let kk = inst(&[2, 2], 2);
        assert_eq!(e().sps(&kk).unwrap().members, e().ps(&kk).unwrap().members);
        assert_eq!(e().sps(&inst(&[1, 1, 2], 1)).unwrap().len(), 6);
    }

    #[test]
    fn sps_k_listings() {
        let c = |v: &[u32]| v.to_vec();
        assert_eq!(e().sps_k(3, 1, 1).unwrap().members, vec![c(&[1])]);
        assert_eq!(
            e().sps_k(3, 2, 1).unwrap().members,
            vec![c(&[1, 1]), c(&[1, 2])]
        );
        let three = e().sps_k(3, 3, 1).unwrap();
        assert_eq!(three.len(), 16);
        assert!(three.contains(&[3, 2, 1]));
        assert_eq!(e().sps_k(4, 2, 2).unwrap().len(), 6);
        assert_eq!(
            e().sps_k_by_definition(4, 2, 2).unwrap(),
            e().sps_k(4, 2, 2).unwrap()
        );
        assert!(e().sps_k(3, 4, 1).is_err());
    }

    #[test]
    fn u_pf_listings() {
        let u = |v: &[u32]| BoundaryVector::new(v.to_vec()).unwrap();
        assert_eq!(e().u_pf(&u(&[1, 2, 3])).unwrap().len(), 16);
        assert_eq!(
            e().u_pf(&u(&[3])).unwrap().members,
            vec![vec![1], vec![2], vec![3]]
        );
        assert_eq!(e().u_pf(&u(&[2, 3])).unwrap().len(), 8);
    }

    #[test]
    fn lattice_path_listings() {
        let catalan = [1usize, 2, 5, 14, 42];
        for q in 1..=5u32 {
            let b = BoundaryVector::new((1..=q).collect()).unwrap();
            assert_eq!(
                e().lattice_paths(&b, q).unwrap().len(),
                catalan[q as usize - 1]
            );
        }
        let b = BoundaryVector::new(vec![3, 4, 5, 8]).unwrap();
        let paths = e().lattice_paths(&b, 8).unwrap();
        assert!(paths.iter().any(|p| p.north_steps() == [2, 3, 3, 7]));
        let one = e()
            .lattice_paths(&BoundaryVector::new(vec![1]).unwrap(), 1)
            .unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].north_steps(), &[0]);
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Enumerator::with_budget(10);
        assert!(matches!(
            tight.ps(&inst(&[1, 1, 2], 1)),
            Err(ParkingError::BudgetExceeded {
                needed: 64,
                budget: 10
            })
        ));
        assert!(tight.ps(&inst(&[1, 2], 1)).is_ok());
    }
}
