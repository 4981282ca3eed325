//! Per-partition statistics and the aggregate excess quantities.
//!
//! `d_t` counts the difference between the smallest part and 0 like any
//! other consecutive difference.

use serde::Serialize;

use crate::error::{check_modulus, check_residue, Result};
use crate::families::for_each_partition;
use crate::membership::PlainFamily;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatReport {
    /// number of parts
    pub length: usize,
    /// parts congruent to t (mod r)
    pub residue_parts: usize,
    /// distinct values appearing at least t times
    pub repeated_values: usize,
    /// consecutive differences at least t
    pub large_gaps: usize,
    /// distinct values
    pub distinct: usize,
}

pub fn stat_report(lambda: &Partition, r: u32, t: u32) -> Result<StatReport> {
    check_residue(r, t)?;
    let mults = lambda.multiplicities();
    Ok(StatReport {
        length: lambda.len(),
        residue_parts: residue_parts(lambda, r, t),
        repeated_values: mults.iter().filter(|&&(_, m)| m >= t as usize).count(),
        large_gaps: large_gaps(lambda, t),
        distinct: mults.len(),
    })
}

/// `ℓ_t(λ)`.
pub fn residue_parts(lambda: &Partition, r: u32, t: u32) -> usize {
    lambda.parts().iter().filter(|&&p| p % r == t).count()
}

/// `d_t(λ)`.
pub fn large_gaps(lambda: &Partition, t: u32) -> usize {
    lambda.gaps().filter(|&g| g >= t).count()
}

/// Column sums over a family: per-residue part counts, per-threshold
/// repeated-value counts, and plain totals. Index `t` of the vectors holds
/// the statistic for that `t` (index 0 unused).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyTotals {
    pub members: u64,
    pub parts: u64,
    pub distinct: u64,
    pub residue_parts: Vec<u64>,
    pub repeated_values: Vec<u64>,
    pub large_gaps: Vec<u64>,
}

impl FamilyTotals {
    fn new(r: u32) -> Self {
        let len = r as usize;
        FamilyTotals {
            residue_parts: vec![0; len],
            repeated_values: vec![0; len],
            large_gaps: vec![0; len],
            ..Default::default()
        }
    }
}

/// One pass over `family(n)`, accumulating every statistic for all
/// `t ∈ [1, r−1]` at once.
pub fn family_totals(n: u32, family: PlainFamily, r: u32) -> FamilyTotals {
    let mut acc = FamilyTotals::new(r);
    let top = r as usize;
    for_each_partition(n, family, |parts| {
        acc.members += 1;
        acc.parts += parts.len() as u64;
        let mut i = 0;
        while i < parts.len() {
            let v = parts[i];
            let mut j = i + 1;
            while j < parts.len() && parts[j] == v {
                j += 1;
            }
            let m = j - i;
            acc.distinct += 1;
            let res = (v % r) as usize;
            if res > 0 {
                acc.residue_parts[res] += m as u64;
            }
            for t in 1..top.min(m + 1) {
                acc.repeated_values[t] += 1;
            }
            let next = parts.get(j).copied().unwrap_or(0);
            let gap = (v - next) as usize;
            for t in 1..top.min(gap + 1) {
                acc.large_gaps[t] += 1;
            }
            i = j;
        }
    });
    acc
}

/// `E_{r,t}(n) = Σ_{O_r(n)} ℓ_t − Σ_{D_r(n)} ℓ̄_t`.
pub fn excess_ert(n: u32, r: u32, t: u32) -> Result<i64> {
    check_residue(r, t)?;
    let o = family_totals(n, PlainFamily::Regular(r), r);
    let d = family_totals(n, PlainFamily::BoundedRepeats(r), r);
    Ok(o.residue_parts[t as usize] as i64 - d.repeated_values[t as usize] as i64)
}

/// All `E_{r,t}(n)` for `t = 1..r−1` from a single pass over each family.
pub fn excess_all_t(n: u32, r: u32) -> Result<Vec<i64>> {
    check_modulus(r)?;
    let o = family_totals(n, PlainFamily::Regular(r), r);
    let d = family_totals(n, PlainFamily::BoundedRepeats(r), r);
    Ok((1..r as usize)
        .map(|t| o.residue_parts[t] as i64 - d.repeated_values[t] as i64)
        .collect())
}

/// `E_{r,t}(n)` over the flat family: `Σ_{F_r(n)} (ℓ_t − d_t)`.
pub fn excess_ert_flat(n: u32, r: u32, t: u32) -> Result<i64> {
    check_residue(r, t)?;
    let f = family_totals(n, PlainFamily::Flat(r), r);
    Ok(f.residue_parts[t as usize] as i64 - f.large_gaps[t as usize] as i64)
}

/// `b_r(n) = Σ_{O_r(n)} ℓ − Σ_{D_r(n)} ℓ`.
pub fn beck_b(n: u32, r: u32) -> Result<i64> {
    check_modulus(r)?;
    let o = family_totals(n, PlainFamily::Regular(r), r);
    let d = family_totals(n, PlainFamily::BoundedRepeats(r), r);
    Ok(o.parts as i64 - d.parts as i64)
}

/// `b′_r(n) = Σ_{D_r(n)} ℓ̄ − Σ_{O_r(n)} ℓ̄`.
pub fn beck_b_prime(n: u32, r: u32) -> Result<i64> {
    check_modulus(r)?;
    let o = family_totals(n, PlainFamily::Regular(r), r);
    let d = family_totals(n, PlainFamily::BoundedRepeats(r), r);
    Ok(d.distinct as i64 - o.distinct as i64)
}
