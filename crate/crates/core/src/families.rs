//! Exhaustive enumeration and counting of the partition families, their
//! decorated variants and the rectangle pair sets.
//!
//! Every stream is produced in descending lexicographic order of the base
//! partition. Decorated families list decorations by increasing position
//! within a base. Pair sets iterate the rectangle `(s^i)` by increasing `s`,
//! then increasing `i`, then the flat partition in descending lex order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::decorated::{DecoratedPartition, RectanglePair};
use crate::error::{check_modulus, check_residue, Error, Result};
use crate::membership::PlainFamily;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyTag {
    All,
    Or,
    Dr,
    Fr,
    O1r,
    D1r,
    F1r,
    Tr,
    /// `O*_{r,t}`: r-regular with one part ≡ t (mod r) marked.
    OStar,
    /// `F̄_{r,t}`: r-flat with one part overlined where `λ_i − λ_{i+1} >= t`.
    FBar,
    /// `Ō_r`: r-regular with one value overlined.
    OBar,
    /// `D̄_r`: bounded repeats with one value overlined.
    DBar,
}

impl FamilyTag {
    pub const ALL_TAGS: [FamilyTag; 12] = [
        FamilyTag::All,
        FamilyTag::Or,
        FamilyTag::Dr,
        FamilyTag::Fr,
        FamilyTag::O1r,
        FamilyTag::D1r,
        FamilyTag::F1r,
        FamilyTag::Tr,
        FamilyTag::OStar,
        FamilyTag::FBar,
        FamilyTag::OBar,
        FamilyTag::DBar,
    ];

    pub fn needs_t(self) -> bool {
        matches!(self, FamilyTag::OStar | FamilyTag::FBar)
    }

    pub fn is_decorated(self) -> bool {
        matches!(
            self,
            FamilyTag::OStar | FamilyTag::FBar | FamilyTag::OBar | FamilyTag::DBar
        )
    }

    /// The undecorated family for modulus `r`, if this tag names one.
    pub fn plain(self, r: u32) -> Option<PlainFamily> {
        Some(match self {
            FamilyTag::All => PlainFamily::All,
            FamilyTag::Or => PlainFamily::Regular(r),
            FamilyTag::Dr => PlainFamily::BoundedRepeats(r),
            FamilyTag::Fr => PlainFamily::Flat(r),
            FamilyTag::O1r => PlainFamily::OneDivisible(r),
            FamilyTag::D1r => PlainFamily::OneRepeated(r),
            FamilyTag::F1r => PlainFamily::OneLargeGap(r),
            FamilyTag::Tr => PlainFamily::ModerateRepeat(r),
            _ => return None,
        })
    }

    /// Resolves the tag against concrete parameters, validating `t` for the
    /// t-dependent families.
    pub fn resolve(self, r: u32, t: Option<u32>) -> Result<Family> {
        check_modulus(r)?;
        if let Some(plain) = self.plain(r) {
            return Ok(Family::Plain(plain));
        }
        let need_t = || -> Result<u32> {
            let t = t.ok_or_else(|| Error::param(format!("family {self} requires t")))?;
            check_residue(r, t)?;
            Ok(t)
        };
        Ok(Family::Decorated(match self {
            FamilyTag::OStar => DecoratedFamily::Marked { r, t: need_t()? },
            FamilyTag::FBar => DecoratedFamily::OverlinedFlat { r, t: need_t()? },
            FamilyTag::OBar => DecoratedFamily::OverlinedRegular(r),
            FamilyTag::DBar => DecoratedFamily::OverlinedBounded(r),
            _ => unreachable!("plain tags handled above"),
        }))
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyTag::All => "ALL",
            FamilyTag::Or => "Or",
            FamilyTag::Dr => "Dr",
            FamilyTag::Fr => "Fr",
            FamilyTag::O1r => "O1r",
            FamilyTag::D1r => "D1r",
            FamilyTag::F1r => "F1r",
            FamilyTag::Tr => "Tr",
            FamilyTag::OStar => "Ostar",
            FamilyTag::FBar => "Fbar",
            FamilyTag::OBar => "Obar",
            FamilyTag::DBar => "Dbar",
        };
        f.write_str(name)
    }
}

fn normalize_tag(s: &str) -> String {
    s.chars()
        .filter(|c| !matches!(c, '_' | '{' | '}' | ',' | ' ' | '-'))
        .flat_map(char::to_lowercase)
        .collect()
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match normalize_tag(s).as_str() {
            "all" | "p" => FamilyTag::All,
            "or" => FamilyTag::Or,
            "dr" => FamilyTag::Dr,
            "fr" => FamilyTag::Fr,
            "o1r" => FamilyTag::O1r,
            "d1r" => FamilyTag::D1r,
            "f1r" => FamilyTag::F1r,
            "tr" => FamilyTag::Tr,
            "ostar" | "ostarrt" | "or*" | "ort*" => FamilyTag::OStar,
            "fbar" | "fbarrt" => FamilyTag::FBar,
            "obar" | "obarr" => FamilyTag::OBar,
            "dbar" | "dbarr" => FamilyTag::DBar,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecoratedFamily {
    Marked { r: u32, t: u32 },
    OverlinedFlat { r: u32, t: u32 },
    OverlinedRegular(u32),
    OverlinedBounded(u32),
}

impl DecoratedFamily {
    pub fn base(self) -> PlainFamily {
        match self {
            DecoratedFamily::Marked { r, .. } | DecoratedFamily::OverlinedRegular(r) => {
                PlainFamily::Regular(r)
            }
            DecoratedFamily::OverlinedFlat { r, .. } => PlainFamily::Flat(r),
            DecoratedFamily::OverlinedBounded(r) => PlainFamily::BoundedRepeats(r),
        }
    }

    /// 1-based positions of `base` that may carry this family's decoration.
    pub fn positions(self, base: &Partition) -> Vec<usize> {
        let parts = base.parts();
        match self {
            DecoratedFamily::Marked { r, t } => (1..=parts.len())
                .filter(|&i| parts[i - 1] % r == t)
                .collect(),
            DecoratedFamily::OverlinedFlat { t, .. } => {
                (1..=parts.len()).filter(|&i| base.gap(i) >= t).collect()
            }
            DecoratedFamily::OverlinedRegular(_) | DecoratedFamily::OverlinedBounded(_) => {
                (1..=parts.len()).filter(|&i| base.gap(i) > 0).collect()
            }
        }
    }

    pub fn decorate(self, base: &Partition, position: usize) -> DecoratedPartition {
        let built = match self {
            DecoratedFamily::Marked { .. } => DecoratedPartition::marked(base.clone(), position),
            _ => DecoratedPartition::overlined(base.clone(), position),
        };
        built.expect("positions() only yields valid decorations")
    }

    pub fn contains(self, d: &DecoratedPartition) -> bool {
        use crate::decorated::Decoration;
        let want = match self {
            DecoratedFamily::Marked { .. } => Decoration::Mark,
            _ => Decoration::Overline,
        };
        d.decoration() == want
            && self.base().contains(d.base())
            && self.positions(d.base()).contains(&d.position())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Plain(PlainFamily),
    Decorated(DecoratedFamily),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Member {
    Plain(Partition),
    Decorated(DecoratedPartition),
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Plain(p) => write!(f, "{p}"),
            Member::Decorated(d) => write!(f, "{d}"),
        }
    }
}

// ---------------------------------------------------------------------------
// constrained descending search

/// Cost of a choice: `None` forbids it, `Some(k)` spends k violations.
type Cost = Option<u8>;

struct Search {
    family: PlainFamily,
    r: u32,
    budget: u8,
}

impl Search {
    fn new(family: PlainFamily) -> Self {
        use PlainFamily::*;
        let budget = match family {
            OneDivisible(_) | OneRepeated(_) | OneLargeGap(_) | ModerateRepeat(_) => 1,
            _ => 0,
        };
        Search {
            family,
            r: family.modulus().unwrap_or(u32::MAX),
            budget,
        }
    }

    fn value_cost(&self, v: u32) -> Cost {
        match self.family {
            PlainFamily::Regular(_) if v.is_multiple_of(self.r) => None,
            PlainFamily::OneDivisible(_) if v.is_multiple_of(self.r) => Some(1),
            _ => Some(0),
        }
    }

    fn mult_cost(&self, m: usize) -> Cost {
        let r = self.r as usize;
        match self.family {
            PlainFamily::BoundedRepeats(_) if m >= r => None,
            PlainFamily::OneRepeated(_) if m >= r => Some(1),
            PlainFamily::ModerateRepeat(_) if m >= r => {
                if m > r && m < 2 * r {
                    Some(1)
                } else {
                    None
                }
            }
            _ => Some(0),
        }
    }

    fn gap_cost(&self, gap: u32) -> Cost {
        match self.family {
            PlainFamily::Flat(_) if gap >= self.r => None,
            PlainFamily::OneLargeGap(_) if gap >= self.r => Some(1),
            _ => Some(0),
        }
    }

    fn is_gap_family(&self) -> bool {
        matches!(
            self.family,
            PlainFamily::Flat(_) | PlainFamily::OneLargeGap(_)
        )
    }

    fn is_repeat_family(&self) -> bool {
        matches!(
            self.family,
            PlainFamily::BoundedRepeats(_)
                | PlainFamily::OneRepeated(_)
                | PlainFamily::ModerateRepeat(_)
        )
    }

    /// Smallest sum a gap-bounded tail below `v` can have.
    fn min_flat_tail(&self, v: u32) -> u64 {
        let step = (self.r - 1) as u64;
        let v = v as u64;
        if step == 0 || v < self.r as u64 {
            return 0;
        }
        // v − step, v − 2·step, … while positive
        let terms = (v - 1) / step;
        terms * v - step * terms * (terms + 1) / 2
    }

    /// Largest sum achievable by parts below `v` each repeated at most r − 1 times.
    fn max_bounded_tail(&self, v: u32) -> u64 {
        let v = v as u64;
        (self.r as u64 - 1) * v * (v - 1) / 2
    }

    fn run(&self, n: u32, f: &mut dyn FnMut(&[u32])) {
        let mut buf = Vec::with_capacity(n as usize);
        if n == 0 {
            if self.budget == 0 {
                f(&buf);
            }
            return;
        }
        self.descend(n, n, None, 0, &mut buf, f);
    }

    fn descend(
        &self,
        rem: u32,
        hi: u32,
        prev: Option<u32>,
        used: u8,
        buf: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32]),
    ) {
        for v in (1..=hi.min(rem)).rev() {
            let mut cost = used;
            if let Some(p) = prev {
                match self.gap_cost(p - v) {
                    // gaps only grow as v shrinks
                    None => break,
                    Some(c) => cost += c,
                }
                if cost > self.budget {
                    if self.is_gap_family() {
                        break;
                    }
                    continue;
                }
            }
            match self.value_cost(v) {
                None => continue,
                Some(c) => cost += c,
            }
            if cost > self.budget {
                continue;
            }
            for m in (1..=(rem / v) as usize).rev() {
                let Some(c) = self.mult_cost(m) else { continue };
                let spent = cost + c;
                if spent > self.budget {
                    continue;
                }
                let left = rem - m as u32 * v;
                let exhausted = spent == self.budget;
                let len = buf.len();
                buf.extend(std::iter::repeat_n(v, m));
                if left == 0 {
                    if let Some(c) = self.gap_cost(v) {
                        if spent + c == self.budget {
                            f(buf);
                        }
                    }
                } else if v > 1 {
                    let feasible = !(exhausted
                        && ((self.is_gap_family() && (left as u64) < self.min_flat_tail(v))
                            || (self.is_repeat_family()
                                && (left as u64) > self.max_bounded_tail(v))));
                    if feasible {
                        self.descend(left, v - 1, Some(v), spent, buf, f);
                    }
                }
                buf.truncate(len);
            }
        }
    }
}

/// Calls `f` on every member of `family` of size `n`, in descending
/// lexicographic order.
pub fn for_each_partition(n: u32, family: PlainFamily, mut f: impl FnMut(&[u32])) {
    Search::new(family).run(n, &mut f);
}

pub fn partitions(n: u32, family: PlainFamily) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, family, |parts| {
        out.push(Partition::from_sorted_unchecked(parts.to_vec()))
    });
    out
}

pub fn decorated_partitions(n: u32, family: DecoratedFamily) -> Vec<DecoratedPartition> {
    let mut out = Vec::new();
    for_each_partition(n, family.base(), |parts| {
        let base = Partition::from_sorted_unchecked(parts.to_vec());
        for pos in family.positions(&base) {
            out.push(family.decorate(&base, pos));
        }
    });
    out
}

/// Enumerates the family named by `tag`.
pub fn enumerate(n: u32, tag: FamilyTag, r: u32, t: Option<u32>) -> Result<Vec<Member>> {
    Ok(match tag.resolve(r, t)? {
        Family::Plain(f) => partitions(n, f).into_iter().map(Member::Plain).collect(),
        Family::Decorated(f) => decorated_partitions(n, f)
            .into_iter()
            .map(Member::Decorated)
            .collect(),
    })
}

/// Stream length of `enumerate`, computed without materialising members.
pub fn count_by_enumeration(n: u32, family: Family) -> u64 {
    let mut total = 0u64;
    match family {
        Family::Plain(f) => for_each_partition(n, f, |_| total += 1),
        Family::Decorated(f) => for_each_partition(n, f.base(), |parts| {
            let base = Partition::from_sorted_unchecked(parts.to_vec());
            total += f.positions(&base).len() as u64;
        }),
    }
    total
}

/// Exact family size. Uses product-formula recurrences for `ALL`, `O_r`,
/// `D_r` and `F_r` (the latter through conjugation onto `D_r`), enumeration
/// otherwise.
pub fn count(n: u32, tag: FamilyTag, r: u32, t: Option<u32>) -> Result<BigUint> {
    let family = tag.resolve(r, t)?;
    Ok(match family {
        Family::Plain(PlainFamily::All) => restricted_count(n, |_| true, usize::MAX),
        Family::Plain(PlainFamily::Regular(r)) => restricted_count(n, |k| k % r != 0, usize::MAX),
        Family::Plain(PlainFamily::BoundedRepeats(r)) | Family::Plain(PlainFamily::Flat(r)) => {
            restricted_count(n, |_| true, r as usize - 1)
        }
        other => BigUint::from(count_by_enumeration(n, other)),
    })
}

/// Number of partitions of `n` using allowed part sizes, each at most
/// `max_mult` times.
fn restricted_count(n: u32, allowed: impl Fn(u32) -> bool, max_mult: usize) -> BigUint {
    let n = n as usize;
    let mut c = vec![BigUint::zero(); n + 1];
    c[0] = BigUint::one();
    for k in 1..=n {
        if !allowed(k as u32) {
            continue;
        }
        if max_mult >= n / k {
            for j in k..=n {
                let add = c[j - k].clone();
                c[j] += add;
            }
        } else {
            let prev = c.clone();
            for j in (k..=n).rev() {
                for m in 1..=max_mult.min(j / k) {
                    c[j] += &prev[j - m * k];
                }
            }
        }
    }
    c.swap_remove(n)
}

// ---------------------------------------------------------------------------
// pair sets

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PairSetTag {
    /// `P_{r,t}`: rectangles `((ar+t)^i)`.
    P,
    /// rectangle `(1^i)` with `i ≢ 0 (mod r)`.
    Ao,
    /// `μ_i − μ_{i+1} < r − 1`.
    Ad,
    /// `i ≡ 0 (mod r)` and `μ_{i/r} − μ_{i/r+1} > 0`.
    At,
    /// `μ_i − μ_{i+1} = r − 1`.
    A,
    /// `i ≡ 0 (mod r)` and `μ_{i/r} − μ_{i/r+1} = 0`.
    B,
}

impl fmt::Display for PairSetTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PairSetTag::P => "P",
            PairSetTag::Ao => "Ao",
            PairSetTag::Ad => "Ad",
            PairSetTag::At => "At",
            PairSetTag::A => "A",
            PairSetTag::B => "B",
        };
        f.write_str(name)
    }
}

impl FromStr for PairSetTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match normalize_tag(s).as_str() {
            "p" | "prt" => PairSetTag::P,
            "ao" => PairSetTag::Ao,
            "ad" => PairSetTag::Ad,
            "at" => PairSetTag::At,
            "a" => PairSetTag::A,
            "b" => PairSetTag::B,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        })
    }
}

/// Side condition of a `(1^i)` pair set on `(μ, i)`.
pub(crate) fn unit_pair_condition(tag: PairSetTag, r: u32, flat: &Partition, i: usize) -> bool {
    let r_us = r as usize;
    match tag {
        PairSetTag::P => unreachable!("P uses general rectangles"),
        PairSetTag::Ao => !i.is_multiple_of(r_us),
        PairSetTag::Ad => flat.gap(i) < r - 1,
        PairSetTag::At => i.is_multiple_of(r_us) && flat.gap(i / r_us) > 0,
        PairSetTag::A => flat.gap(i) == r - 1,
        PairSetTag::B => i.is_multiple_of(r_us) && flat.gap(i / r_us) == 0,
    }
}

/// Whether `pair` lies in the named pair set for total size `pair.size()`.
pub fn pair_in_set(pair: &RectanglePair, tag: PairSetTag, r: u32, t: Option<u32>) -> bool {
    if !PlainFamily::Flat(r).contains(&pair.flat) || pair.rect_count == 0 {
        return false;
    }
    match tag {
        PairSetTag::P => match t {
            Some(t) => pair.rect_part >= t && pair.rect_part % r == t,
            None => false,
        },
        _ => pair.rect_part == 1 && unit_pair_condition(tag, r, &pair.flat, pair.rect_count),
    }
}

pub fn enumerate_pairs(
    n: u32,
    tag: PairSetTag,
    r: u32,
    t: Option<u32>,
) -> Result<Vec<RectanglePair>> {
    check_modulus(r)?;
    let mut out = Vec::new();
    let mut push_rect = |s: u32, flat_filter: &dyn Fn(&Partition, usize) -> bool| {
        for i in 1..=(n / s) as usize {
            let rest = n - s * i as u32;
            for_each_partition(rest, PlainFamily::Flat(r), |parts| {
                let flat = Partition::from_sorted_unchecked(parts.to_vec());
                if flat_filter(&flat, i) {
                    out.push(RectanglePair {
                        flat,
                        rect_part: s,
                        rect_count: i,
                    });
                }
            });
        }
    };
    match tag {
        PairSetTag::P => {
            let t = t.ok_or_else(|| Error::param("pair set P requires t"))?;
            check_residue(r, t)?;
            let mut s = t;
            while s <= n {
                push_rect(s, &|_, _| true);
                s += r;
            }
        }
        other => push_rect(1, &|flat, i| unit_pair_condition(other, r, flat, i)),
    }
    Ok(out)
}
