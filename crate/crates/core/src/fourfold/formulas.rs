use std::collections::BTreeMap;

use super::FourfoldError;

/// Ranks of rational homotopy groups by degree.
///
/// A degree that is not listed is unknown, unless `finite_tail` is set, in
/// which case every unlisted degree has rank zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RankTable {
    entries: BTreeMap<u32, u64>,
    finite_tail: bool,
}

impl RankTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (u32, u64)>, finite_tail: bool) -> Self {
        RankTable { entries: entries.into_iter().collect(), finite_tail }
    }

    pub fn insert(&mut self, degree: u32, rank: u64) {
        self.entries.insert(degree, rank);
    }

    /// The listed value only.
    pub fn get(&self, degree: u32) -> Option<u64> {
        self.entries.get(&degree).copied()
    }

    /// Rank of π_degree as far as this table determines it.
    pub fn rank(&self, degree: u32) -> Option<u64> {
        match self.get(degree) {
            Some(r) => Some(r),
            None if self.finite_tail => Some(0),
            None => None,
        }
    }

    pub fn entries(&self) -> &BTreeMap<u32, u64> {
        &self.entries
    }

    pub fn finite_tail(&self) -> bool {
        self.finite_tail
    }

    pub fn max_listed_degree(&self) -> Option<u32> {
        self.entries.keys().next_back().copied()
    }

    /// Entries with nonzero rank.
    pub fn nonzero(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.entries.iter().filter(|(_, &r)| r > 0).map(|(&d, &r)| (d, r))
    }
}

/// Closed-form ranks as a function of b₂ alone.
///
/// For b₂ ≤ 2 the space is rationally elliptic and the full table is
/// returned regardless of `max_degree`. For b₂ > 2 only the proved degrees
/// (2 through 4, plus degree 5 when b₂ = 3) up to `max_degree` are listed.
pub fn closed_form_ranks(b2: u64, max_degree: u32) -> RankTable {
    match b2 {
        0 => RankTable::from_entries([(4, 1), (7, 1)], true),
        1 => RankTable::from_entries([(2, 1), (5, 1)], true),
        2 => RankTable::from_entries([(2, 2), (3, 2)], true),
        _ => {
            let n = b2 as u128;
            let mut known = vec![
                (2, b2),
                (3, (n * (n + 1) / 2 - 1) as u64),
                // (n-2) n (n+2) always has a factor of 3
                (4, (n * (n * n - 4) / 3) as u64),
            ];
            if b2 == 3 {
                known.push((5, 10));
            }
            RankTable::from_entries(known.into_iter().filter(|&(d, _)| d <= max_degree), false)
        }
    }
}

/// b₂ of a smooth degree-`d` hypersurface in ℂP³: `d(6 − 4d + d²) − 2`.
pub fn hypersurface_b2(d: u64) -> u64 {
    assert!(d >= 1, "hypersurface degree must be positive");
    d * (d * d + 6 - 4 * d) - 2
}

/// b₂ = e − 2 of a complete intersection surface of type `(d_1, …, d_n)` in
/// ℂPⁿ⁺², with Euler characteristic
/// `e = [C(n+3, 2) − (n+3) Σd_i + Σd_i² + Σ_{i<j} d_i d_j] · Π d_i`.
pub fn complete_intersection_b2(degrees: &[u64]) -> Result<u64, FourfoldError> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(FourfoldError::InvalidDegrees);
    }
    let n = degrees.len() as i128;
    let ds: Vec<i128> = degrees.iter().map(|&d| d as i128).collect();
    let sum: i128 = ds.iter().sum();
    let sum_sq: i128 = ds.iter().map(|d| d * d).sum();
    let pairs: i128 =
        (0..ds.len()).flat_map(|i| (i + 1..ds.len()).map(move |j| (i, j))).map(|(i, j)| ds[i] * ds[j]).sum();
    let product = ds.iter().try_fold(1i128, |acc, &d| acc.checked_mul(d)).ok_or(FourfoldError::Overflow)?;
    let bracket = (n + 3) * (n + 2) / 2 - (n + 3) * sum + sum_sq + pairs;
    let e = bracket.checked_mul(product).ok_or(FourfoldError::Overflow)?;
    u64::try_from(e - 2).map_err(|_| FourfoldError::Overflow)
}
