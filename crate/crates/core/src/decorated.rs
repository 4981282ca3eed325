use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decoration {
    Mark,
    Overline,
}

/// A partition with exactly one part occurrence marked or overlined.
///
/// `position` is 1-based into the non-increasing part sequence. Overlines
/// always sit on the last occurrence of their value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DecoratedPartition {
    base: Partition,
    decoration: Decoration,
    position: usize,
}

impl DecoratedPartition {
    pub fn new(base: Partition, decoration: Decoration, position: usize) -> Result<Self> {
        if position == 0 || position > base.len() {
            return Err(Error::domain(format!(
                "decoration position {position} outside 1..={}",
                base.len()
            )));
        }
        if decoration == Decoration::Overline && base.part(position) == base.part(position + 1) {
            return Err(Error::domain(format!(
                "only the last occurrence of a part may be overlined (position {position} in {base})"
            )));
        }
        Ok(DecoratedPartition {
            base,
            decoration,
            position,
        })
    }

    pub fn marked(base: Partition, position: usize) -> Result<Self> {
        Self::new(base, Decoration::Mark, position)
    }

    pub fn overlined(base: Partition, position: usize) -> Result<Self> {
        Self::new(base, Decoration::Overline, position)
    }

    /// Overlines the last occurrence of `value`.
    pub fn overline_value(base: Partition, value: u32) -> Result<Self> {
        let position = base
            .last_position(value)
            .ok_or_else(|| Error::domain(format!("{base} has no part {value}")))?;
        Self::overlined(base, position)
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn decoration(&self) -> Decoration {
        self.decoration
    }

    pub fn position(&self) -> usize {
        self.position
    }

    /// Value of the decorated part.
    pub fn value(&self) -> u32 {
        self.base.part(self.position)
    }

    /// Rank of the decorated occurrence among the parts equal to it
    /// (1 for the first occurrence).
    pub fn occurrence(&self) -> usize {
        let first = self
            .base
            .first_position(self.value())
            .unwrap_or(self.position);
        self.position - first + 1
    }
}

impl fmt::Display for DecoratedPartition {
    /// Marks render as `7*`, overlines as `16~`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = match self.decoration {
            Decoration::Mark => "*",
            Decoration::Overline => "~",
        };
        for (idx, p) in self.base.parts().iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            if idx + 1 == self.position {
                f.write_str(suffix)?;
            }
        }
        Ok(())
    }
}

/// A pair `(μ, (s^i))` of a flat partition and a rectangle of `i` parts
/// equal to `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RectanglePair {
    pub flat: Partition,
    pub rect_part: u32,
    pub rect_count: usize,
}

impl RectanglePair {
    pub fn new(flat: Partition, rect_part: u32, rect_count: usize) -> Result<Self> {
        if rect_part == 0 || rect_count == 0 {
            return Err(Error::domain(format!(
                "rectangle ({rect_part}^{rect_count}) must be non-empty"
            )));
        }
        Ok(RectanglePair {
            flat,
            rect_part,
            rect_count,
        })
    }

    pub fn rectangle(&self) -> Partition {
        Partition::rectangle(self.rect_part, self.rect_count)
    }

    pub fn size(&self) -> u64 {
        self.flat.size() + self.rect_part as u64 * self.rect_count as u64
    }
}

impl fmt::Display for RectanglePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({}),({}^{}))",
            self.flat, self.rect_part, self.rect_count
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overline_must_be_last_occurrence() {
        let base: Partition = "7,7,3".parse().unwrap();
        assert!(DecoratedPartition::overlined(base.clone(), 1).is_err());
        assert!(DecoratedPartition::overlined(base.clone(), 2).is_ok());
        assert!(DecoratedPartition::marked(base.clone(), 1).is_ok());
        assert!(DecoratedPartition::marked(base, 4).is_err());
    }

    #[test]
    fn occurrence_rank() {
        let d = DecoratedPartition::marked("32,24,23,16,12,7,7".parse().unwrap(), 7).unwrap();
        assert_eq!(d.value(), 7);
        assert_eq!(d.occurrence(), 2);
        assert_eq!(d.to_string(), "32,24,23,16,12,7,7*");
    }

    #[test]
    fn rectangle_pair_size() {
        let p = RectanglePair::new("2,1,1".parse().unwrap(), 2, 2).unwrap();
        assert_eq!(p.size(), 8);
        assert_eq!(p.to_string(), "((2,1,1),(2^2))");
        assert!(RectanglePair::new(Partition::empty(), 0, 1).is_err());
    }
}
