//! Exhaustive verification of the identities and bijections over a grid of
//! `(r, t, n)` values.
//!
//! Work is split into independent `(r, n)` cells that run through
//! [`parallel::map_ordered`](crate::parallel::map_ordered); the report lists
//! points in grid order regardless of the strategy.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bijections::*;
use crate::error::{check_modulus, Error, Result};
use crate::families::{
    count_by_enumeration, decorated_partitions, enumerate_pairs, partitions, DecoratedFamily,
    Family, Member, PairSetTag,
};
use crate::membership::PlainFamily;
use crate::parallel::{map_ordered, Strategy};
use crate::partition::Partition;
use crate::qseries::{gf, lambert_sum, GfName, Lambert, TruncatedSeries};
use crate::stats::{family_totals, residue_parts};
use crate::xi::{xi_forward, XiTrace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Identity {
    /// `E_{r,t}(n) = |O_{1,r}(n)| = |D_{1,r}(n)|`
    Beck3,
    /// `b_r(n) = (r−1)|O_{1,r}(n)| = Σ_t E_{r,t}(n)`
    Beck1,
    /// `b′_r(n) = |T_r(n)|`
    Beck2,
    /// `|O_r(n)| = |D_r(n)| = |F_r(n)|`
    Glaisher,
    /// generating-function coefficients against enumeration
    Series,
    /// bijectivity and invariants of `ξ`
    Xi,
    /// every bijection composed with its inverse
    Roundtrip,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::Beck3,
        Identity::Beck1,
        Identity::Beck2,
        Identity::Glaisher,
        Identity::Series,
        Identity::Xi,
        Identity::Roundtrip,
    ];
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Identity::Beck3 => "beck3",
            Identity::Beck1 => "beck1",
            Identity::Beck2 => "beck2",
            Identity::Glaisher => "glaisher",
            Identity::Series => "series",
            Identity::Xi => "xi",
            Identity::Roundtrip => "roundtrip",
        };
        f.write_str(name)
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::param(format!("unknown identity `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub r: Vec<u32>,
    /// `None` means every `t ∈ [1, r−1]`.
    pub t: Option<u32>,
    pub n_min: u32,
    pub n_max: u32,
}

impl Grid {
    pub fn new(r: Vec<u32>, t: Option<u32>, n_min: u32, n_max: u32) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::param("grid needs at least one r"));
        }
        for &ri in &r {
            check_modulus(ri)?;
            if let Some(t) = t {
                if t == 0 || t >= ri {
                    return Err(Error::param(format!(
                        "t = {t} outside [1, {}] for r = {ri}",
                        ri - 1
                    )));
                }
            }
        }
        if n_min > n_max {
            return Err(Error::param(format!("empty n range {n_min}..={n_max}")));
        }
        Ok(Grid { r, t, n_min, n_max })
    }

    pub fn ts(&self, r: u32) -> Vec<u32> {
        match self.t {
            Some(t) => vec![t],
            None => (1..r).collect(),
        }
    }

    fn cells(&self) -> Vec<(u32, u32)> {
        self.r
            .iter()
            .flat_map(|&r| (self.n_min..=self.n_max).map(move |n| (r, n)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointResult {
    pub n: u32,
    pub r: u32,
    pub t: Option<u32>,
    pub relation: String,
    pub lhs: i128,
    pub rhs: i128,
    pub pass: bool,
}

impl PointResult {
    fn equal(n: u32, r: u32, t: Option<u32>, relation: &str, lhs: i128, rhs: i128) -> Self {
        PointResult {
            n,
            r,
            t,
            relation: relation.to_string(),
            lhs,
            rhs,
            pass: lhs == rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub points: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: Identity,
    pub grid: Grid,
    pub points: Vec<PointResult>,
    pub summary: Summary,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &PointResult> {
        self.points.iter().filter(|p| !p.pass)
    }
}

pub fn run(identity: Identity, grid: &Grid, strategy: Strategy) -> Result<VerificationReport> {
    let start = Instant::now();
    let cells = grid.cells();
    let points: Vec<PointResult> = match identity {
        Identity::Series => {
            let bundles: Vec<SeriesBundle> = map_ordered(&grid.r, strategy, |&r| {
                SeriesBundle::build(r, &grid.ts(r), grid.n_max as usize)
            })
            .into_iter()
            .collect::<Result<_>>()?;
            map_ordered(&cells, strategy, |&(r, n)| {
                let bundle = bundles.iter().find(|b| b.r == r).expect("bundle per r");
                series_cell(bundle, n)
            })
            .into_iter()
            .flatten()
            .collect()
        }
        _ => map_ordered(&cells, strategy, |&(r, n)| {
            let ts = grid.ts(r);
            match identity {
                Identity::Beck3 => beck3_cell(r, n, &ts),
                Identity::Beck1 => beck1_cell(r, n),
                Identity::Beck2 => beck2_cell(r, n),
                Identity::Glaisher => glaisher_cell(r, n),
                Identity::Xi => xi_cell(r, n),
                Identity::Roundtrip => roundtrip_cell(r, n, &ts),
                Identity::Series => unreachable!(),
            }
        })
        .into_iter()
        .flatten()
        .collect(),
    };
    let passed = points.iter().filter(|p| p.pass).count();
    Ok(VerificationReport {
        identity,
        grid: grid.clone(),
        summary: Summary {
            points: points.len(),
            passed,
            failed: points.len() - passed,
        },
        points,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn plain_count(n: u32, family: PlainFamily) -> i128 {
    count_by_enumeration(n, Family::Plain(family)) as i128
}

fn beck3_cell(r: u32, n: u32, ts: &[u32]) -> Vec<PointResult> {
    let o = family_totals(n, PlainFamily::Regular(r), r);
    let d = family_totals(n, PlainFamily::BoundedRepeats(r), r);
    let o1 = plain_count(n, PlainFamily::OneDivisible(r));
    let d1 = plain_count(n, PlainFamily::OneRepeated(r));
    let mut out = Vec::new();
    for &t in ts {
        let e = o.residue_parts[t as usize] as i128 - d.repeated_values[t as usize] as i128;
        out.push(PointResult::equal(
            n,
            r,
            Some(t),
            "E_{r,t} = |O_{1,r}|",
            e,
            o1,
        ));
        out.push(PointResult::equal(
            n,
            r,
            Some(t),
            "E_{r,t} = |D_{1,r}|",
            e,
            d1,
        ));
    }
    out
}

fn beck1_cell(r: u32, n: u32) -> Vec<PointResult> {
    let o = family_totals(n, PlainFamily::Regular(r), r);
    let d = family_totals(n, PlainFamily::BoundedRepeats(r), r);
    let b = o.parts as i128 - d.parts as i128;
    let o1 = plain_count(n, PlainFamily::OneDivisible(r));
    let sum_e: i128 = (1..r as usize)
        .map(|t| o.residue_parts[t] as i128 - d.repeated_values[t] as i128)
        .sum();
    vec![
        PointResult::equal(n, r, None, "b_r = (r-1)|O_{1,r}|", b, (r as i128 - 1) * o1),
        PointResult::equal(n, r, None, "b_r = sum_t E_{r,t}", b, sum_e),
    ]
}

fn beck2_cell(r: u32, n: u32) -> Vec<PointResult> {
    let o = family_totals(n, PlainFamily::Regular(r), r);
    let d = family_totals(n, PlainFamily::BoundedRepeats(r), r);
    let b_prime = d.distinct as i128 - o.distinct as i128;
    let tr = plain_count(n, PlainFamily::ModerateRepeat(r));
    vec![PointResult::equal(n, r, None, "b'_r = |T_r|", b_prime, tr)]
}

fn glaisher_cell(r: u32, n: u32) -> Vec<PointResult> {
    let o = plain_count(n, PlainFamily::Regular(r));
    let d = plain_count(n, PlainFamily::BoundedRepeats(r));
    let f = plain_count(n, PlainFamily::Flat(r));
    vec![
        PointResult::equal(n, r, None, "|O_r| = |D_r|", o, d),
        PointResult::equal(n, r, None, "|O_r| = |F_r|", o, f),
    ]
}

struct SeriesForT {
    t: u32,
    parts: TruncatedSeries,
    repeats: TruncatedSeries,
    ert: TruncatedSeries,
    lambert_residue: TruncatedSeries,
    lambert_swapped: TruncatedSeries,
}

struct SeriesBundle {
    r: u32,
    or: TruncatedSeries,
    o1r: TruncatedSeries,
    ert_t1: TruncatedSeries,
    per_t: Vec<SeriesForT>,
}

impl SeriesBundle {
    fn build(r: u32, ts: &[u32], degree: usize) -> Result<Self> {
        let per_t = ts
            .iter()
            .map(|&t| {
                Ok(SeriesForT {
                    t,
                    parts: gf(GfName::PartsTInOr, r, Some(t), degree)?,
                    repeats: gf(GfName::RepeatsTInDr, r, Some(t), degree)?,
                    ert: gf(GfName::Ert, r, Some(t), degree)?,
                    lambert_residue: lambert_sum(Lambert::Residue { r, t }, degree)?,
                    lambert_swapped: lambert_sum(Lambert::ResidueSwapped { r, t }, degree)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(SeriesBundle {
            r,
            or: gf(GfName::Or, r, None, degree)?,
            o1r: gf(GfName::O1r, r, None, degree)?,
            ert_t1: gf(GfName::Ert, r, Some(1), degree)?,
            per_t,
        })
    }
}

fn coeff(s: &TruncatedSeries, n: u32) -> i128 {
    let c: &BigInt = s.coeff(n as usize);
    i128::try_from(c).expect("coefficient fits in i128 at verification scale")
}

fn series_cell(b: &SeriesBundle, n: u32) -> Vec<PointResult> {
    let r = b.r;
    let o = family_totals(n, PlainFamily::Regular(r), r);
    let d = family_totals(n, PlainFamily::BoundedRepeats(r), r);
    let o1 = plain_count(n, PlainFamily::OneDivisible(r));
    let d1 = plain_count(n, PlainFamily::OneRepeated(r));
    let mut out = vec![
        PointResult::equal(
            n,
            r,
            None,
            "gf(O_r)[n] = |O_r|",
            coeff(&b.or, n),
            o.members as i128,
        ),
        PointResult::equal(
            n,
            r,
            None,
            "gf(O_r)[n] = |D_r|",
            coeff(&b.or, n),
            d.members as i128,
        ),
        PointResult::equal(n, r, None, "gf(O_1r)[n] = |O_{1,r}|", coeff(&b.o1r, n), o1),
        PointResult::equal(n, r, None, "gf(O_1r)[n] = |D_{1,r}|", coeff(&b.o1r, n), d1),
    ];
    for s in &b.per_t {
        let t = Some(s.t);
        let ti = s.t as usize;
        let e = o.residue_parts[ti] as i128 - d.repeated_values[ti] as i128;
        let diff = coeff(&s.parts, n) - coeff(&s.repeats, n);
        out.extend([
            PointResult::equal(n, r, t, "gf(E_rt)[n] = E_{r,t}", coeff(&s.ert, n), e),
            PointResult::equal(
                n,
                r,
                t,
                "parts_t[n] = sum l_t over O_r",
                coeff(&s.parts, n),
                o.residue_parts[ti] as i128,
            ),
            PointResult::equal(
                n,
                r,
                t,
                "repeats_t[n] = sum lbar_t over D_r",
                coeff(&s.repeats, n),
                d.repeated_values[ti] as i128,
            ),
            PointResult::equal(
                n,
                r,
                t,
                "parts_t - repeats_t = gf(E_rt)",
                diff,
                coeff(&s.ert, n),
            ),
            PointResult::equal(
                n,
                r,
                t,
                "lambert residue = swapped",
                coeff(&s.lambert_residue, n),
                coeff(&s.lambert_swapped, n),
            ),
            PointResult::equal(
                n,
                r,
                t,
                "gf(E_rt) = gf(E_r1)",
                coeff(&s.ert, n),
                coeff(&b.ert_t1, n),
            ),
        ]);
    }
    out
}

/// Invariants of one `ξ` trace that fail, recomputed from its fields.
pub fn trace_violations(tr: &XiTrace) -> Vec<&'static str> {
    let r = tr.r;
    let mut bad = Vec::new();
    let mut check = |ok: bool, what: &'static str| {
        if !ok {
            bad.push(what);
        }
    };
    check(tr.input == tr.mu.union(&tr.nu), "input = μ ∪ ν");
    check(tr.nu.parts().iter().all(|p| p % r == 0), "ν divisible by r");
    check(PlainFamily::Flat(r).contains(&tr.mu), "μ r-flat");
    check(tr.mu == tr.alpha.union(&tr.beta), "μ = α ∪ β");
    check(PlainFamily::Regular(r).contains(&tr.alpha), "α r-regular");
    check(
        tr.beta.parts().iter().all(|p| p % r == 0),
        "β divisible by r",
    );
    let mu = tr.mu.parts();
    let step1 = (0..mu.len()).filter(|&i| mu[i].is_multiple_of(r)).all(|i| {
        let mut rest = mu.to_vec();
        rest.remove(i);
        !PlainFamily::Flat(r).contains(&Partition::new(rest))
    });
    check(step1, "step-1 removal property");
    if tr.step2_skipped {
        check(
            tr.alpha_star == tr.mu && tr.beta_star.is_empty(),
            "skipped step 2 leaves α* = μ, β* = ∅",
        );
    } else {
        check(
            tr.alpha.subtract(&tr.u.scale(r)).ok().as_ref() == Some(&tr.alpha_star),
            "α* = α − r·u",
        );
        check(tr.v.entries().len() == tr.beta.len(), "ℓ(v) = ℓ(β)");
        let shifted = Partition::new(
            tr.beta
                .parts()
                .iter()
                .zip(tr.v.entries())
                .map(|(b, v)| b + r * v)
                .collect(),
        );
        check(shifted == tr.beta_star, "β* = β + r·v");
    }
    check(
        tr.nu.union(&tr.beta_star) == tr.sigma.scale(r),
        "ν ∪ β* = r·σ",
    );
    check(
        tr.sigma.largest() as usize <= tr.alpha_star.len(),
        "σ₁ ≤ ℓ(α*)",
    );
    check(
        tr.output == tr.alpha_star.sum(&tr.sigma.conjugate().scale(r)),
        "output = α* + r·σ′",
    );
    check(
        PlainFamily::Regular(r).contains(&tr.output),
        "output r-regular",
    );
    check(tr.output.size() == tr.input.size(), "size preserved");
    check(
        (1..r).all(|t| residue_parts(&tr.input, r, t) == residue_parts(&tr.output, r, t)),
        "ℓ_t preserved",
    );
    bad
}

fn xi_cell(r: u32, n: u32) -> Vec<PointResult> {
    let flats = partitions(n, PlainFamily::Flat(r));
    let regular = plain_count(n, PlainFamily::Regular(r));
    let mut images = HashSet::new();
    let mut violations = 0i128;
    let mut in_codomain = 0i128;
    for lambda in &flats {
        match xi_forward(lambda, r) {
            Ok(trace) => {
                violations += trace_violations(&trace).len() as i128;
                if PlainFamily::Regular(r).contains(&trace.output) {
                    in_codomain += 1;
                }
                images.insert(trace.output);
            }
            Err(_) => violations += 1,
        }
    }
    let total = flats.len() as i128;
    vec![
        PointResult::equal(
            n,
            r,
            None,
            "distinct images = |F_r|",
            images.len() as i128,
            total,
        ),
        PointResult::equal(n, r, None, "images in O_r = |F_r|", in_codomain, total),
        PointResult::equal(
            n,
            r,
            None,
            "image count = |O_r|",
            images.len() as i128,
            regular,
        ),
        PointResult::equal(n, r, None, "trace invariant violations", violations, 0),
    ]
}

/// Counts members of `domain` with `back(forth(x)) == x`.
fn round_trips<A, B>(
    domain: &[A],
    forth: impl Fn(&A) -> Result<B>,
    back: impl Fn(&B) -> Result<A>,
) -> i128
where
    A: PartialEq,
{
    domain
        .iter()
        .filter(|x| forth(x).and_then(|y| back(&y)).is_ok_and(|z| &z == *x))
        .count() as i128
}

fn images<A, B: Hash + Eq>(domain: &[A], forth: impl Fn(&A) -> Result<B>) -> HashSet<B> {
    domain.iter().filter_map(|x| forth(x).ok()).collect()
}

fn roundtrip_cell(r: u32, n: u32, ts: &[u32]) -> Vec<PointResult> {
    let mut out = Vec::new();
    let pt = |t: Option<u32>, relation: &str, lhs: i128, rhs: i128| {
        PointResult::equal(n, r, t, relation, lhs, rhs)
    };
    let one_gap = partitions(n, PlainFamily::OneLargeGap(r));
    let one_div = partitions(n, PlainFamily::OneDivisible(r));
    out.push(pt(
        None,
        "φ⁻¹∘φ = id on F_{1,r}",
        round_trips(&one_gap, |x| phi_forward(x, r), |y| phi_inverse(y, r)),
        one_gap.len() as i128,
    ));
    out.push(pt(
        None,
        "φ∘φ⁻¹ = id on O_{1,r}",
        round_trips(&one_div, |y| phi_inverse(y, r), |x| phi_forward(x, r)),
        one_div.len() as i128,
    ));

    for &t in ts {
        let ts = Some(t);
        let fbar: Vec<Member> = decorated_partitions(n, DecoratedFamily::OverlinedFlat { r, t })
            .into_iter()
            .map(Member::Decorated)
            .collect();
        let f1r: Vec<Member> = one_gap.iter().cloned().map(Member::Plain).collect();
        let pset = enumerate_pairs(n, PairSetTag::P, r, ts).unwrap_or_default();
        let marked = decorated_partitions(n, DecoratedFamily::Marked { r, t });

        let psi1_domain: Vec<Member> = fbar.iter().chain(&f1r).cloned().collect();
        out.push(pt(
            ts,
            "ψ₁⁻¹∘ψ₁ = id",
            round_trips(
                &psi1_domain,
                |x| psi1_forward(x, r, t),
                |y| psi1_inverse(y, r, t),
            ),
            psi1_domain.len() as i128,
        ));
        out.push(pt(
            ts,
            "ψ₁∘ψ₁⁻¹ = id",
            round_trips(&pset, |y| psi1_inverse(y, r, t), |x| psi1_forward(x, r, t)),
            pset.len() as i128,
        ));
        let case1 = images(&fbar, |x| psi1_forward(x, r, t));
        let case2 = images(&f1r, |x| psi1_forward(x, r, t));
        out.push(pt(
            ts,
            "ψ₁ case images overlap",
            case1.intersection(&case2).count() as i128,
            0,
        ));
        let union: HashSet<_> = case1.union(&case2).cloned().collect();
        let target: HashSet<_> = pset.iter().cloned().collect();
        out.push(PointResult {
            n,
            r,
            t: ts,
            relation: "ψ₁ case images cover P_{r,t}".to_string(),
            lhs: union.len() as i128,
            rhs: target.len() as i128,
            pass: union == target,
        });
        out.push(pt(
            ts,
            "ψ₂⁻¹∘ψ₂ = id",
            round_trips(
                &marked,
                |x| psi2_forward(x, r, t),
                |y| psi2_inverse(y, r, t),
            ),
            marked.len() as i128,
        ));
        out.push(pt(
            ts,
            "ψ₂∘ψ₂⁻¹ = id",
            round_trips(&pset, |y| psi2_inverse(y, r, t), |x| psi2_forward(x, r, t)),
            pset.len() as i128,
        ));
    }

    let pairs = |tag| enumerate_pairs(n, tag, r, None).expect("valid r");
    let obar = decorated_partitions(n, DecoratedFamily::OverlinedRegular(r));
    let a_o = pairs(PairSetTag::Ao);
    out.push(pt(
        None,
        "ψ_o⁻¹∘ψ_o = id",
        round_trips(&obar, |x| psi_o(x, r), |y| psi_o_inverse(y, r)),
        obar.len() as i128,
    ));
    out.push(pt(
        None,
        "ψ_o∘ψ_o⁻¹ = id",
        round_trips(&a_o, |y| psi_o_inverse(y, r), |x| psi_o(x, r)),
        a_o.len() as i128,
    ));
    let dbar = decorated_partitions(n, DecoratedFamily::OverlinedBounded(r));
    let a_d = pairs(PairSetTag::Ad);
    out.push(pt(
        None,
        "ψ_d⁻¹∘ψ_d = id",
        round_trips(&dbar, |x| psi_d(x, r), |y| psi_d_inverse(y, r)),
        dbar.len() as i128,
    ));
    out.push(pt(
        None,
        "ψ_d∘ψ_d⁻¹ = id",
        round_trips(&a_d, |y| psi_d_inverse(y, r), |x| psi_d(x, r)),
        a_d.len() as i128,
    ));
    let tr = partitions(n, PlainFamily::ModerateRepeat(r));
    let a_t = pairs(PairSetTag::At);
    out.push(pt(
        None,
        "ψ_t⁻¹∘ψ_t = id",
        round_trips(&tr, |x| psi_t(x, r), |y| psi_t_inverse(y, r)),
        tr.len() as i128,
    ));
    out.push(pt(
        None,
        "ψ_t∘ψ_t⁻¹ = id",
        round_trips(&a_t, |y| psi_t_inverse(y, r), |x| psi_t(x, r)),
        a_t.len() as i128,
    ));
    let a = pairs(PairSetTag::A);
    let b = pairs(PairSetTag::B);
    out.push(pt(
        None,
        "ζ⁻¹∘ζ = id",
        round_trips(&a, |x| zeta(x, r), |y| zeta_inverse(y, r)),
        a.len() as i128,
    ));
    out.push(pt(
        None,
        "ζ∘ζ⁻¹ = id",
        round_trips(&b, |y| zeta_inverse(y, r), |x| zeta(x, r)),
        b.len() as i128,
    ));
    out.push(pt(None, "|A| = |B|", a.len() as i128, b.len() as i128));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_grid_passes() {
        let grid = Grid::new(vec![3], Some(2), 0, 0).unwrap();
        for id in Identity::ALL {
            let report = run(id, &grid, Strategy::Sequential).unwrap();
            assert!(
                report.all_passed(),
                "{id}: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn grid_validation() {
        assert!(Grid::new(vec![3], Some(3), 0, 5).is_err());
        assert!(Grid::new(vec![1], None, 0, 5).is_err());
        assert!(Grid::new(vec![], None, 0, 5).is_err());
        assert!(Grid::new(vec![2], None, 6, 5).is_err());
    }

    #[test]
    fn strategies_agree() {
        let grid = Grid::new(vec![2, 3], None, 0, 12).unwrap();
        let a = run(Identity::Beck3, &grid, Strategy::Sequential).unwrap();
        let b = run(Identity::Beck3, &grid, Strategy::Parallel).unwrap();
        assert_eq!(a.points, b.points);
    }

    #[test]
    fn identity_names() {
        for id in Identity::ALL {
            assert_eq!(id.to_string().parse::<Identity>().unwrap(), id);
        }
        assert!("beck4".parse::<Identity>().is_err());
    }
}
