//! Truncated formal power series in `q` with exact integer coefficients,
//! and the generating functions built from them.
//!
//! Infinite products and sums are cut at the first index whose smallest
//! exponent exceeds the truncation degree, so "equal as truncated series"
//! is a finite check.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_modulus, check_residue, Error, Result};

/// `c_0 + c_1 q + … + c_N q^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(degree: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        Self::monomial(0, degree)
    }

    /// `q^k`, or zero if `k` exceeds the degree.
    pub fn monomial(k: usize, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        if k <= degree {
            s.coeffs[k] = BigInt::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_bound(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::BoundMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_bound(other)?;
        let n = self.degree();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// In place `self ·= 1/(1 − q^k)`.
    fn divide_by_one_minus(&mut self, k: usize) {
        for j in k..self.coeffs.len() {
            let prev = self.coeffs[j - k].clone();
            self.coeffs[j] += prev;
        }
    }

    /// In place `self ·= (1 − q^k)`.
    fn multiply_by_one_minus(&mut self, k: usize) {
        for j in (k..self.coeffs.len()).rev() {
            let prev = self.coeffs[j - k].clone();
            self.coeffs[j] -= prev;
        }
    }

    /// Coefficient dump: one `n<TAB>c_n` line per degree.
    pub fn dump(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{n}\t{c}")?;
        }
        Ok(())
    }
}

// The operator impls panic on bound mismatch; the `try_` forms report it.
impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.try_add(rhs).expect("series truncation bounds differ")
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.try_sub(rhs).expect("series truncation bounds differ")
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.try_mul(rhs).expect("series truncation bounds differ")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `1/(1 − q^k) = Σ_{m≥0} q^{mk}`.
pub fn geometric(k: usize, degree: usize) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(Error::param("geometric series needs k >= 1"));
    }
    let mut s = TruncatedSeries::one(degree);
    s.divide_by_one_minus(k);
    Ok(s)
}

/// `∏_{n≥1} (1 − q^{rn})/(1 − q^n)`.
pub fn eta_quotient(r: u32, degree: usize) -> Result<TruncatedSeries> {
    check_modulus(r)?;
    let mut s = TruncatedSeries::one(degree);
    for n in 1..=degree {
        s.divide_by_one_minus(n);
    }
    let r = r as usize;
    for n in 1..=degree / r {
        s.multiply_by_one_minus(r * n);
    }
    Ok(s)
}

/// The Lambert-type sums appearing in the generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lambert {
    /// `Σ_{m≥1} q^{mr}/(1 − q^{mr})`
    Multiples { r: u32 },
    /// `Σ_{n≥0} q^{rn+t}/(1 − q^{rn+t})`
    Residue { r: u32, t: u32 },
    /// `Σ_{m≥1} q^{mt}/(1 − q^{mr})`
    ResidueSwapped { r: u32, t: u32 },
    /// `Σ_{n≥1} (q^{tn} − q^{rn})/(1 − q^{rn})`
    Repeats { r: u32, t: u32 },
}

/// Adds `sign · q^a/(1 − q^b)` into `acc`.
fn add_term(acc: &mut TruncatedSeries, a: usize, b: usize, negative: bool) {
    let mut e = a;
    while e <= acc.degree() {
        if negative {
            acc.coeffs[e] -= 1;
        } else {
            acc.coeffs[e] += 1;
        }
        e += b;
    }
}

pub fn lambert_sum(family: Lambert, degree: usize) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::zero(degree);
    match family {
        Lambert::Multiples { r } => {
            check_modulus(r)?;
            let r = r as usize;
            for m in 1..=degree / r {
                add_term(&mut acc, m * r, m * r, false);
            }
        }
        Lambert::Residue { r, t } => {
            check_residue(r, t)?;
            let (r, t) = (r as usize, t as usize);
            let mut k = t;
            while k <= degree {
                add_term(&mut acc, k, k, false);
                k += r;
            }
        }
        Lambert::ResidueSwapped { r, t } => {
            check_residue(r, t)?;
            let (r, t) = (r as usize, t as usize);
            for m in 1..=degree / t {
                add_term(&mut acc, m * t, m * r, false);
            }
        }
        Lambert::Repeats { r, t } => {
            check_residue(r, t)?;
            let (r, t) = (r as usize, t as usize);
            for n in 1..=degree / t {
                add_term(&mut acc, t * n, r * n, false);
                add_term(&mut acc, r * n, r * n, true);
            }
        }
    }
    Ok(acc)
}

/// Named generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfName {
    /// `Σ |O_r(n)| q^n`
    Or,
    /// `Σ |O_{1,r}(n)| q^n`
    O1r,
    /// parts ≡ t (mod r) over all of `O_r(n)`
    PartsTInOr,
    /// values repeated at least t times over all of `D_r(n)`
    RepeatsTInDr,
    /// `Σ E_{r,t}(n) q^n` in closed form
    Ert,
}

impl GfName {
    pub fn needs_t(self) -> bool {
        matches!(
            self,
            GfName::PartsTInOr | GfName::RepeatsTInDr | GfName::Ert
        )
    }
}

impl std::str::FromStr for GfName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | '-' | '{' | '}' | ','))
            .flat_map(char::to_lowercase)
            .collect();
        Ok(match key.as_str() {
            "or" => GfName::Or,
            "o1r" => GfName::O1r,
            "partstinor" | "parts" => GfName::PartsTInOr,
            "repeatstindr" | "repeats" => GfName::RepeatsTInDr,
            "ert" | "e" => GfName::Ert,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        })
    }
}

pub fn gf(name: GfName, r: u32, t: Option<u32>, degree: usize) -> Result<TruncatedSeries> {
    check_modulus(r)?;
    let t = if name.needs_t() {
        let t = t.ok_or_else(|| Error::param("this generating function needs t"))?;
        check_residue(r, t)?;
        t
    } else {
        0
    };
    let eta = eta_quotient(r, degree)?;
    let sum = match name {
        GfName::Or => return Ok(eta),
        GfName::O1r | GfName::Ert => lambert_sum(Lambert::Multiples { r }, degree)?,
        GfName::PartsTInOr => lambert_sum(Lambert::Residue { r, t }, degree)?,
        GfName::RepeatsTInDr => lambert_sum(Lambert::Repeats { r, t }, degree)?,
    };
    eta.try_mul(&sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn ring_basics() {
        let a = series(&[1, 1, 0]);
        let b = series(&[1, -1, 0]);
        assert_eq!(&a * &b, series(&[1, 0, -1]));
        assert_eq!(&a + &TruncatedSeries::zero(2), a);
        assert!(matches!(
            a.try_add(&TruncatedSeries::zero(3)),
            Err(Error::BoundMismatch(2, 3))
        ));
    }

    #[test]
    fn geometric_series() {
        assert_eq!(geometric(3, 7).unwrap(), series(&[1, 0, 0, 1, 0, 0, 1, 0]));
        assert_eq!(geometric(1, 3).unwrap(), series(&[1, 1, 1, 1]));
        assert_eq!(geometric(6, 5).unwrap(), TruncatedSeries::one(5));
        assert!(geometric(0, 5).is_err());
        let one_minus_q = series(&[1, -1, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(
            &geometric(1, 9).unwrap() * &one_minus_q,
            TruncatedSeries::one(9)
        );
    }

    #[test]
    fn eta_quotient_small() {
        let s = eta_quotient(2, 5).unwrap();
        assert_eq!(s.coeff(0), &BigInt::one());
        assert_eq!(s.coeff(5), &BigInt::from(3));
    }

    #[test]
    fn even_divisor_lambert() {
        let s = lambert_sum(Lambert::Multiples { r: 2 }, 12).unwrap();
        for k in 0..=12usize {
            let even_divisors = (1..=k).filter(|d| d % 2 == 0 && k % d == 0).count();
            assert_eq!(s.coeff(k), &BigInt::from(even_divisors), "k={k}");
        }
        assert_eq!(&s.coeffs()[..7], series(&[0, 0, 1, 0, 2, 0, 2]).coeffs());
    }

    #[test]
    fn lambert_below_min_exponent_is_zero() {
        assert!(lambert_sum(Lambert::Multiples { r: 5 }, 4)
            .unwrap()
            .is_zero());
        assert!(lambert_sum(Lambert::Residue { r: 5, t: 3 }, 2)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn needs_t() {
        assert!(gf(GfName::Ert, 3, None, 10).is_err());
        assert!(gf(GfName::Or, 3, None, 10).is_ok());
    }
}
