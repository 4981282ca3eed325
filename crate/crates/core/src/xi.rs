//! The Xiong-Keith bijection `ξ : F_r(n) → O_r(n)`.
//!
//! Forward direction, for r-flat `λ`:
//!
//! 1. Split `λ = μ ∪ ν` with every part of `ν` divisible by r, `μ` r-flat,
//!    and no r-divisible part of `μ` removable without breaking flatness.
//! 2. Split `μ = α ∪ β` into r-regular and r-divisible parts. With
//!    `u_i = #{β_j < α_i}` and `v_j = #{α_i > β_j}`, set `α* = α − r·u` and
//!    `β* = β + r·v` (a composition, kept here as its sorted multiset).
//! 3. Write `ν ∪ β* = r·σ` and return `α* + r·σ′`.
//!
//! The inverse recovers `α*` as the unique r-flat r-regular partition with
//! the residues of `κ`; then `σ′ = (κ − α*)/r`. Each part of `β` sits alone
//! between two consecutive parts of `α` whose starred difference is at most
//! r − 2, and its value is forced by that gap, so only the set of gap
//! positions hosting a `β` part is unknown. Those are searched bottom-up,
//! pruned by requiring each `β*/r` to be an unused part of `σ`, and every
//! candidate is confirmed by running the forward map.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{check_modulus, Error, Result};
use crate::families::partitions;
use crate::membership::PlainFamily;
use crate::partition::{Composition, Partition};

/// Every intermediate object of one application of `ξ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiTrace {
    pub r: u32,
    pub input: Partition,
    pub nu: Partition,
    pub mu: Partition,
    pub alpha: Partition,
    pub beta: Partition,
    pub u: Partition,
    pub v: Composition,
    pub alpha_star: Partition,
    pub beta_star: Partition,
    pub sigma: Partition,
    pub output: Partition,
    /// Step 2 was skipped because `μ` is already r-regular.
    pub step2_skipped: bool,
}

fn is_flat(parts: &[u32], r: u32) -> bool {
    let mut prev = None;
    for &p in parts.iter().rev() {
        let below = prev.unwrap_or(0);
        if p - below >= r {
            return false;
        }
        prev = Some(p);
    }
    true
}

fn without_index(parts: &[u32], idx: usize) -> Vec<u32> {
    let mut out = parts.to_vec();
    out.remove(idx);
    out
}

/// Indices (0-based) of r-divisible parts whose single removal keeps
/// `parts` r-flat, one per value, largest value first.
fn removable_divisible(parts: &[u32], r: u32) -> Vec<usize> {
    let mut out = Vec::new();
    for (idx, &p) in parts.iter().enumerate() {
        if p % r != 0 || (idx > 0 && parts[idx - 1] == p) {
            continue;
        }
        if is_flat(&without_index(parts, idx), r) {
            out.push(idx);
        }
    }
    out
}

/// Step 1: peels r-divisible parts off `λ` until none can be removed.
pub(crate) fn split_removable(lambda: &Partition, r: u32) -> (Partition, Partition) {
    let mut mu = lambda.parts().to_vec();
    let mut nu = Vec::new();
    while let Some(&idx) = removable_divisible(&mu, r).first() {
        nu.push(mu.remove(idx));
    }
    (Partition::from_sorted_unchecked(mu), Partition::new(nu))
}

fn construction(reason: impl Into<String>, trace: &XiTrace) -> Error {
    Error::Construction {
        reason: reason.into(),
        trace: Some(Box::new(trace.clone())),
    }
}

/// Applies `ξ` to an r-flat partition, keeping every intermediate.
pub fn xi_forward(lambda: &Partition, r: u32) -> Result<XiTrace> {
    check_modulus(r)?;
    if !PlainFamily::Flat(r).contains(lambda) {
        return Err(Error::domain(format!("{lambda} is not {r}-flat")));
    }
    let mut trace = XiTrace {
        r,
        input: lambda.clone(),
        ..Default::default()
    };

    let (mu, nu) = split_removable(lambda, r);
    trace.mu = mu;
    trace.nu = nu;
    if !removable_divisible(trace.mu.parts(), r).is_empty() {
        return Err(construction(
            "step 1 left a removable r-divisible part",
            &trace,
        ));
    }

    let (alpha, beta): (Vec<u32>, Vec<u32>) = trace.mu.parts().iter().partition(|&&p| p % r != 0);
    trace.alpha = Partition::from_sorted_unchecked(alpha);
    trace.beta = Partition::from_sorted_unchecked(beta);

    if trace.beta.is_empty() {
        trace.step2_skipped = true;
        trace.alpha_star = trace.alpha.clone();
    } else {
        let (alpha, beta) = (trace.alpha.parts(), trace.beta.parts());
        let u: Vec<u32> = alpha
            .iter()
            .map(|&a| beta.iter().filter(|&&b| b < a).count() as u32)
            .collect();
        let v: Vec<u32> = beta
            .iter()
            .map(|&b| alpha.iter().filter(|&&a| a > b).count() as u32)
            .collect();
        if u.windows(2).any(|w| w[0] < w[1]) {
            return Err(construction("u is not a partition", &trace));
        }
        trace.u = Partition::new(u);
        trace.v = Composition(v);
        trace.alpha_star = match trace.alpha.subtract(&trace.u.scale(r)) {
            Ok(p) => p,
            Err(e) => return Err(construction(format!("α − r·u: {e}"), &trace)),
        };
        // β + r·v is a composition; only its multiset matters for step 3
        let beta_star: Vec<u32> = beta
            .iter()
            .zip(trace.v.entries())
            .map(|(&b, &vj)| b + r * vj)
            .collect();
        trace.beta_star = Partition::new(beta_star);
    }

    let joined = trace.nu.union(&trace.beta_star);
    trace.sigma = joined
        .divide(r)
        .ok_or_else(|| construction("ν ∪ β* has a part not divisible by r", &trace))?;
    if trace.sigma.largest() as usize > trace.alpha_star.len() {
        return Err(construction("σ₁ exceeds ℓ(α*)", &trace));
    }
    trace.output = trace.alpha_star.sum(&trace.sigma.conjugate().scale(r));
    if !PlainFamily::Regular(r).contains(&trace.output) {
        return Err(construction("output is not r-regular", &trace));
    }
    if trace.output.size() != lambda.size() {
        return Err(construction("size not preserved", &trace));
    }
    Ok(trace)
}

/// `ξ(λ)`.
pub fn xi(lambda: &Partition, r: u32) -> Result<Partition> {
    Ok(xi_forward(lambda, r)?.output)
}

/// Unique r-flat r-regular partition whose parts have the residues of
/// `kappa`, read bottom-up.
fn residue_floor(kappa: &[u32], r: u32) -> Vec<u32> {
    let mut out = vec![0u32; kappa.len()];
    let mut below = 0u32;
    for i in (0..kappa.len()).rev() {
        let want = kappa[i] % r;
        let step = (want + r - below % r) % r;
        out[i] = below + step;
        below = out[i];
    }
    out
}

struct InverseSearch<'a> {
    r: u32,
    kappa: &'a Partition,
    floor: Vec<u32>,
    /// remaining multiplicity of each part value of σ
    pool: Vec<usize>,
    /// (gap position v, β value), bottom-up
    chosen: Vec<(usize, u32)>,
}

impl InverseSearch<'_> {
    fn alpha_at(&self, pos: usize, above_count: usize) -> u32 {
        self.floor[pos - 1] + self.r * above_count as u32
    }

    fn search(&mut self, v: usize) -> Option<Partition> {
        if v == 0 {
            return self.assemble();
        }
        let c = self.chosen.len();
        let r = self.r;
        let starred_gap = self.floor[v - 1] - self.floor[v];
        if starred_gap + 2 <= r {
            let upper = self.alpha_at(v, c + 1);
            let lower = self.alpha_at(v + 1, c);
            let lo = upper + 1 - r;
            let beta = lo.div_ceil(r) * r;
            if beta > lower && beta < lower + r {
                let key = (beta / r) as usize + v;
                if key < self.pool.len() && self.pool[key] > 0 {
                    self.pool[key] -= 1;
                    self.chosen.push((v, beta));
                    if let Some(found) = self.search(v - 1) {
                        return Some(found);
                    }
                    self.chosen.pop();
                    self.pool[key] += 1;
                }
            }
        }
        self.search(v - 1)
    }

    fn assemble(&self) -> Option<Partition> {
        let r = self.r;
        let len = self.floor.len();
        let mut parts = Vec::with_capacity(len * 2);
        for i in 1..=len {
            let below = self.chosen.iter().filter(|&&(v, _)| v >= i).count();
            parts.push(self.alpha_at(i, below));
        }
        parts.extend(self.chosen.iter().map(|&(_, b)| b));
        for (value, &m) in self.pool.iter().enumerate() {
            parts.extend(std::iter::repeat_n(value as u32 * r, m));
        }
        let candidate = Partition::new(parts);
        if !PlainFamily::Flat(r).contains(&candidate) {
            return None;
        }
        match xi_forward(&candidate, r) {
            Ok(trace) if &trace.output == self.kappa => Some(candidate),
            _ => None,
        }
    }
}

/// `ξ⁻¹(κ)` for r-regular `κ`.
pub fn xi_inverse(kappa: &Partition, r: u32) -> Result<Partition> {
    check_modulus(r)?;
    if !PlainFamily::Regular(r).contains(kappa) {
        return Err(Error::domain(format!("{kappa} is not {r}-regular")));
    }
    if kappa.is_empty() {
        return Ok(Partition::empty());
    }
    let floor = residue_floor(kappa.parts(), r);
    let shifted: Vec<u32> = kappa
        .parts()
        .iter()
        .zip(&floor)
        .map(|(&k, &a)| (k - a) / r)
        .collect();
    let sigma = Partition::new(shifted).conjugate();
    let mut pool = vec![0usize; sigma.largest() as usize + 1];
    for &s in sigma.parts() {
        pool[s as usize] += 1;
    }
    let len = floor.len();
    let mut search = InverseSearch {
        r,
        kappa,
        floor,
        pool,
        chosen: Vec::new(),
    };
    search.search(len - 1).ok_or_else(|| Error::Construction {
        reason: format!("no ξ-preimage found for {kappa} (r = {r})"),
        trace: None,
    })
}

type InverseMap = HashMap<Partition, Partition>;
type TableSlot = Arc<OnceLock<Result<InverseMap>>>;

/// Inverse of `ξ` by tabulating the forward map over `F_r(m)`. Tables are
/// built once per `(r, m)` and shared between threads.
#[derive(Default)]
pub struct XiInverseTable {
    tables: RwLock<HashMap<(u32, u32), TableSlot>>,
}

impl XiInverseTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide instance.
    pub fn shared() -> &'static XiInverseTable {
        static SHARED: LazyLock<XiInverseTable> = LazyLock::new(XiInverseTable::new);
        &SHARED
    }

    fn slot(&self, r: u32, m: u32) -> Arc<OnceLock<Result<InverseMap>>> {
        if let Some(slot) = self
            .tables
            .read()
            .expect("table lock poisoned")
            .get(&(r, m))
        {
            return Arc::clone(slot);
        }
        let mut guard = self.tables.write().expect("table lock poisoned");
        Arc::clone(guard.entry((r, m)).or_default())
    }

    fn build(r: u32, m: u32) -> Result<InverseMap> {
        let mut map = HashMap::new();
        for lambda in partitions(m, PlainFamily::Flat(r)) {
            let image = xi(&lambda, r)?;
            if let Some(prev) = map.insert(image.clone(), lambda.clone()) {
                return Err(Error::Construction {
                    reason: format!("ξ not injective: {prev} and {lambda} both map to {image}"),
                    trace: None,
                });
            }
        }
        Ok(map)
    }

    pub fn inverse(&self, kappa: &Partition, r: u32) -> Result<Partition> {
        check_modulus(r)?;
        if !PlainFamily::Regular(r).contains(kappa) {
            return Err(Error::domain(format!("{kappa} is not {r}-regular")));
        }
        let m = kappa.size() as u32;
        let slot = self.slot(r, m);
        let table = slot.get_or_init(|| Self::build(r, m));
        match table {
            Ok(map) => map.get(kappa).cloned().ok_or_else(|| Error::Construction {
                reason: format!("{kappa} has no preimage in F_{r}({m})"),
                trace: None,
            }),
            Err(e) => Err(Error::Construction {
                reason: e.to_string(),
                trace: None,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn large_worked_example() {
        let trace = xi_forward(&p("22,19,15,15,13,10,6,5,2"), 5).unwrap();
        assert_eq!(trace.output, p("32,24,23,16,12"));
        assert_eq!(
            xi_inverse(&p("32,24,23,16,12"), 5).unwrap(),
            p("22,19,15,15,13,10,6,5,2")
        );
    }

    #[test]
    fn regular_flat_input_is_fixed() {
        let trace = xi_forward(&p("2,1"), 3).unwrap();
        assert!(trace.step2_skipped);
        assert_eq!(trace.output, p("2,1"));
        assert_eq!(trace.alpha_star, p("2,1"));
        assert!(trace.beta_star.is_empty());
    }

    #[test]
    fn hand_executed_trace() {
        let t = xi_forward(&p("5,3,1"), 3).unwrap();
        assert!(t.nu.is_empty());
        assert_eq!(t.alpha, p("5,1"));
        assert_eq!(t.beta, p("3"));
        assert_eq!(t.u, p("1"));
        assert_eq!(t.v, Composition(vec![1]));
        assert_eq!(t.alpha_star, p("2,1"));
        assert_eq!(t.beta_star, p("6"));
        assert_eq!(t.sigma, p("2"));
        assert_eq!(t.output, p("5,4"));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            xi_inverse(&Partition::empty(), 4).unwrap(),
            Partition::empty()
        );
        assert_eq!(xi_inverse(&p("3,1"), 2).unwrap(), p("2,1,1"));
        assert!(xi_inverse(&p("4,1"), 2).is_err());
    }

    #[test]
    fn rejects_non_flat() {
        assert!(matches!(xi_forward(&p("4"), 3), Err(Error::Domain(_))));
    }

    /// Every order of peeling removable parts reaches the same `μ`.
    fn all_fixpoints(parts: Vec<u32>, r: u32, out: &mut BTreeSet<Vec<u32>>) {
        let mut any = false;
        for idx in 0..parts.len() {
            if parts[idx].is_multiple_of(r) && is_flat(&without_index(&parts, idx), r) {
                any = true;
                all_fixpoints(without_index(&parts, idx), r, out);
            }
        }
        if !any {
            out.insert(parts);
        }
    }

    #[test]
    fn step_one_is_order_independent() {
        for r in 2..=5 {
            for n in 0..=20 {
                for lambda in partitions(n, PlainFamily::Flat(r)) {
                    let mut seen = BTreeSet::new();
                    all_fixpoints(lambda.parts().to_vec(), r, &mut seen);
                    assert_eq!(seen.len(), 1, "{lambda} r={r}");
                    let (mu, _) = split_removable(&lambda, r);
                    assert_eq!(seen.into_iter().next().unwrap(), mu.parts());
                }
            }
        }
    }

    #[test]
    fn search_inverse_matches_table() {
        let table = XiInverseTable::new();
        for r in 2..=5 {
            for n in 0..=22 {
                for kappa in partitions(n, PlainFamily::Regular(r)) {
                    assert_eq!(
                        xi_inverse(&kappa, r).unwrap(),
                        table.inverse(&kappa, r).unwrap()
                    );
                }
            }
        }
    }
}
