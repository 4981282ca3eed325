//! Canonical partitions and the three partition operations (union, sum,
//! difference) plus conjugation.
//!
//! Indices into a partition are 1-based wherever they mirror the usual
//! `λ_i` notation; [`Partition::part`] returns 0 past the last part, so
//! `λ_{ℓ+1} = 0` comes for free.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-increasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

/// Text notation accepted by [`parse_partition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    /// `10,7,7,5,4,3`
    Plain,
    /// `5^2,4,3^3,1^2`
    Exponential,
}

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts in any order. Zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Wraps an already non-increasing, zero-free sequence.
    pub fn from_sorted(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("{parts:?} is not non-increasing")));
        }
        Ok(Partition(parts))
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    /// `(value^count)`.
    pub fn rectangle(value: u32, count: usize) -> Self {
        if value == 0 {
            return Partition::empty();
        }
        Partition(vec![value; count])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// `λ_i` for 1-based `i`, zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        debug_assert!(i >= 1, "parts are 1-indexed");
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `λ_i − λ_{i+1}` for 1-based `i`.
    pub fn gap(&self, i: usize) -> u32 {
        self.part(i) - self.part(i + 1)
    }

    /// All consecutive differences `λ_i − λ_{i+1}` for `1 <= i <= ℓ`,
    /// the last one taken against 0.
    pub fn gaps(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.len()).map(move |i| self.gap(i))
    }

    pub fn largest(&self) -> u32 {
        self.part(1)
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    /// `(value, multiplicity)` pairs, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// 1-based position of the first occurrence of `value`.
    pub fn first_position(&self, value: u32) -> Option<usize> {
        self.0.iter().position(|&p| p == value).map(|i| i + 1)
    }

    /// 1-based position of the last occurrence of `value`.
    pub fn last_position(&self, value: u32) -> Option<usize> {
        self.0.iter().rposition(|&p| p == value).map(|i| i + 1)
    }

    /// `λ ∪ μ`: the multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Partition(out)
    }

    /// `λ + μ`: componentwise sum with the shorter operand zero-padded.
    pub fn sum(&self, other: &Partition) -> Partition {
        let k = self.len().max(other.len());
        Partition((1..=k).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// `λ − μ`, defined when `ℓ(μ) <= ℓ(λ)` and `μ_i <= λ_i`. Zero parts of
    /// the difference are dropped; a non-monotone difference is an error.
    pub fn subtract(&self, other: &Partition) -> Result<Partition> {
        if other.len() > self.len() {
            return Err(Error::domain(format!(
                "cannot subtract {other} from shorter partition {self}"
            )));
        }
        let mut out = Vec::with_capacity(self.len());
        for i in 1..=self.len() {
            let (a, b) = (self.part(i), other.part(i));
            if b > a {
                return Err(Error::domain(format!(
                    "cannot subtract {other} from {self}: part {i} would be negative"
                )));
            }
            out.push(a - b);
        }
        if out.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "{self} − {other} is not a partition"
            )));
        }
        out.retain(|&p| p > 0);
        Ok(Partition(out))
    }

    /// The conjugate `λ′` with `λ′_j = #{i : λ_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let largest = self.largest() as usize;
        let mut out = vec![0u32; largest];
        for &p in &self.0 {
            for slot in out.iter_mut().take(p as usize) {
                *slot += 1;
            }
        }
        Partition(out)
    }

    /// Every part multiplied by `factor`.
    pub fn scale(&self, factor: u32) -> Partition {
        if factor == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|&p| p * factor).collect())
    }

    /// Every part divided by `divisor`, if all parts are divisible by it.
    pub fn divide(&self, divisor: u32) -> Option<Partition> {
        if self.0.iter().all(|&p| p % divisor == 0) {
            Some(Partition(self.0.iter().map(|&p| p / divisor).collect()))
        } else {
            None
        }
    }

    /// Removes `count` copies of `value`; fails if fewer are present.
    pub fn remove_copies(&self, value: u32, count: usize) -> Result<Partition> {
        if self.multiplicity(value) < count {
            return Err(Error::domain(format!(
                "{self} has fewer than {count} parts equal to {value}"
            )));
        }
        let mut removed = 0;
        let parts = self
            .0
            .iter()
            .copied()
            .filter(|&p| {
                if p == value && removed < count {
                    removed += 1;
                    false
                } else {
                    true
                }
            })
            .collect();
        Ok(Partition(parts))
    }

    /// Exponential notation, e.g. `5^2,4,3^3,1^2`.
    pub fn to_exponential(&self) -> String {
        self.multiplicities()
            .iter()
            .map(|&(v, m)| {
                if m == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn render(&self, notation: Notation) -> String {
        match notation {
            Notation::Plain => self.to_string(),
            Notation::Exponential => self.to_exponential(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s, Notation::Exponential)
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

/// Parses comma-separated parts. Exponential notation additionally accepts
/// `value^count` tokens; plain notation rejects them. Surrounding
/// parentheses and whitespace are ignored.
pub fn parse_partition(text: &str, notation: Notation) -> Result<Partition> {
    let body = text.trim();
    let body = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .unwrap_or(body)
        .trim();
    if body.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for raw in body.split(',') {
        let token = raw.trim();
        let (value, count) = match token.split_once('^') {
            Some(_) if notation == Notation::Plain => {
                return Err(parse_error(token, "exponents need exponential notation"))
            }
            Some((v, e)) => (
                parse_positive(token, v.trim())?,
                parse_exponent(token, e.trim())?,
            ),
            None => (parse_positive(token, token)?, 1),
        };
        parts.extend(std::iter::repeat_n(value, count));
    }
    Ok(Partition::new(parts))
}

fn parse_error(token: &str, reason: &'static str) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason,
    }
}

fn parse_positive(token: &str, digits: &str) -> Result<u32> {
    if digits.starts_with('-') {
        return Err(parse_error(token, "parts must be positive"));
    }
    let value: u32 = digits
        .parse()
        .map_err(|_| parse_error(token, "not a non-negative integer"))?;
    if value == 0 {
        return Err(parse_error(token, "parts must be positive"));
    }
    Ok(value)
}

fn parse_exponent(token: &str, digits: &str) -> Result<usize> {
    let count: usize = digits
        .parse()
        .map_err(|_| parse_error(token, "exponent is not a non-negative integer"))?;
    if count == 0 {
        return Err(parse_error(token, "exponent must be positive"));
    }
    Ok(count)
}

/// A finite sequence of non-negative integers; order matters. Zero entries
/// are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `i`-th entry, 1-based, zero past the end.
    pub fn entry(&self, i: usize) -> u32 {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&text.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_sorted(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_exponential_and_plain() {
        assert_eq!(
            parse_partition("5^2,4,3^3,1^2", Notation::Exponential).unwrap(),
            p(&[5, 5, 4, 3, 3, 3, 1, 1])
        );
        assert_eq!(
            parse_partition("", Notation::Plain).unwrap(),
            Partition::empty()
        );
        assert_eq!(
            parse_partition("3,1,3,2", Notation::Plain).unwrap(),
            p(&[3, 3, 2, 1])
        );
        assert_eq!(
            parse_partition("(4, 3, 1)", Notation::Plain).unwrap(),
            p(&[4, 3, 1])
        );
    }

    #[test]
    fn parse_errors_name_token() {
        for (text, bad) in [("3,x,1", "x"), ("3,0", "0"), ("2^0", "2^0"), ("-1", "-1")] {
            match parse_partition(text, Notation::Exponential) {
                Err(Error::Parse { token, .. }) => assert_eq!(token, bad),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(parse_partition("2^2", Notation::Plain).is_err());
    }

    #[test]
    fn union_examples() {
        assert_eq!(
            p(&[32, 24, 23, 16, 12]).union(&p(&[5, 5, 5])),
            p(&[32, 24, 23, 16, 12, 5, 5, 5])
        );
        let l = p(&[4, 2, 1]);
        assert_eq!(l.union(&Partition::empty()), l);
        assert_eq!(p(&[3, 1]).union(&p(&[2, 2])), p(&[3, 2, 2, 1]));
    }

    #[test]
    fn sum_examples() {
        assert_eq!(p(&[2, 1]).sum(&p(&[3, 3])), p(&[5, 4]));
        let l = p(&[4, 2]);
        assert_eq!(l.sum(&Partition::empty()), l);
        assert_eq!(
            p(&[22, 19, 15, 15, 13, 10, 6, 5, 2]).sum(&p(&[5, 5, 5])),
            p(&[27, 24, 20, 15, 13, 10, 6, 5, 2])
        );
    }

    #[test]
    fn subtract_examples() {
        assert_eq!(
            p(&[27, 24, 20, 15, 13, 10, 6, 5, 2])
                .subtract(&p(&[5, 5, 5]))
                .unwrap(),
            p(&[22, 19, 15, 15, 13, 10, 6, 5, 2])
        );
        let l = p(&[3, 3]);
        assert_eq!(l.subtract(&Partition::empty()).unwrap(), l);
        assert_eq!(p(&[4, 3, 1]).subtract(&p(&[2, 2])).unwrap(), p(&[2, 1, 1]));
    }

    #[test]
    fn subtract_rejects_bad_operands() {
        assert!(p(&[3]).subtract(&p(&[1, 1])).is_err());
        assert!(p(&[3, 1]).subtract(&p(&[2, 2])).is_err());
        // (3,3) − (2) = (1,3) is not monotone
        assert!(p(&[3, 3]).subtract(&p(&[2])).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(
            p(&[20, 20, 17, 13, 10, 10, 10, 3]).conjugate(),
            "8^3,7^7,4^3,3^4,2^3".parse().unwrap()
        );
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(
            p(&[20, 17, 13, 10, 10, 3]).conjugate(),
            "6^3,5^7,3^3,2^4,1^3".parse().unwrap()
        );
    }

    #[test]
    fn zero_padding() {
        let l = p(&[4, 2]);
        assert_eq!(l.part(3), 0);
        assert_eq!(l.gap(2), 2);
        assert_eq!(l.gaps().collect::<Vec<_>>(), vec![2, 2]);
    }

    #[test]
    fn exponential_rendering() {
        let l = p(&[5, 5, 4, 3, 3, 3, 1, 1]);
        assert_eq!(l.to_exponential(), "5^2,4,3^3,1^2");
        assert_eq!(l.to_string(), "5,5,4,3,3,3,1,1");
    }
}
