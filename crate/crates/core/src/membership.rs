//! Membership predicates for the undecorated partition families.

use crate::error::{check_modulus, Error, Result};
use crate::families::FamilyTag;
use crate::partition::Partition;

/// An undecorated partition family with its modulus fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlainFamily {
    All,
    /// `O_r`: no part divisible by r.
    Regular(u32),
    /// `D_r`: no part appears r or more times.
    BoundedRepeats(u32),
    /// `F_r`: every difference of consecutive parts, including the smallest
    /// part against 0, is at most r − 1.
    Flat(u32),
    /// `O_{1,r}`: exactly one distinct value divisible by r.
    OneDivisible(u32),
    /// `D_{1,r}`: exactly one value appears at least r times.
    OneRepeated(u32),
    /// `F_{1,r}`: exactly one difference is at least r.
    OneLargeGap(u32),
    /// `T_r`: inside `D_{1,r}`, with the repeated value appearing strictly
    /// between r and 2r times.
    ModerateRepeat(u32),
}

impl PlainFamily {
    pub fn modulus(self) -> Option<u32> {
        use PlainFamily::*;
        match self {
            All => None,
            Regular(r) | BoundedRepeats(r) | Flat(r) | OneDivisible(r) | OneRepeated(r)
            | OneLargeGap(r) | ModerateRepeat(r) => Some(r),
        }
    }

    pub fn tag(self) -> FamilyTag {
        use PlainFamily::*;
        match self {
            All => FamilyTag::All,
            Regular(_) => FamilyTag::Or,
            BoundedRepeats(_) => FamilyTag::Dr,
            Flat(_) => FamilyTag::Fr,
            OneDivisible(_) => FamilyTag::O1r,
            OneRepeated(_) => FamilyTag::D1r,
            OneLargeGap(_) => FamilyTag::F1r,
            ModerateRepeat(_) => FamilyTag::Tr,
        }
    }

    pub fn contains(self, lambda: &Partition) -> bool {
        use PlainFamily::*;
        match self {
            All => true,
            Regular(r) => lambda.parts().iter().all(|p| p % r != 0),
            BoundedRepeats(r) => lambda.multiplicities().iter().all(|&(_, m)| m < r as usize),
            Flat(r) => lambda.gaps().all(|g| g < r),
            OneDivisible(r) => {
                lambda
                    .multiplicities()
                    .iter()
                    .filter(|(v, _)| v % r == 0)
                    .count()
                    == 1
            }
            OneRepeated(r) => {
                lambda
                    .multiplicities()
                    .iter()
                    .filter(|&&(_, m)| m >= r as usize)
                    .count()
                    == 1
            }
            OneLargeGap(r) => lambda.gaps().filter(|&g| g >= r).count() == 1,
            ModerateRepeat(r) => {
                let r = r as usize;
                let heavy: Vec<usize> = lambda
                    .multiplicities()
                    .iter()
                    .map(|&(_, m)| m)
                    .filter(|&m| m >= r)
                    .collect();
                heavy.len() == 1 && heavy[0] > r && heavy[0] < 2 * r
            }
        }
    }
}

/// Family membership by tag. Only undecorated tags are accepted; `t` is
/// ignored.
pub fn is_member(lambda: &Partition, tag: FamilyTag, r: u32, _t: Option<u32>) -> Result<bool> {
    check_modulus(r)?;
    let family = tag.plain(r).ok_or_else(|| {
        Error::UnknownFamily(format!(
            "{tag} (decorated families have no membership predicate)"
        ))
    })?;
    Ok(family.contains(lambda))
}
