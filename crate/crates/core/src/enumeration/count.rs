//! Exact closed-form counts.
//!
//! All results are arbitrary precision. Möbius sums are accumulated as
//! signed big integers and checked nonnegative on the way out.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::arith::{divisors, moebius};
use crate::error::{Error, Result};

/// An exact nonnegative count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn pow2(e: usize) -> Self {
        BigCount(BigUint::one() << e)
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    /// `None` if the value does not fit.
    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }

    fn from_signed(v: BigInt) -> Self {
        BigCount(v.to_biguint().expect("count sums are nonnegative"))
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl std::str::FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse::<BigUint>()
            .map(BigCount)
            .map_err(|e| Error::parse(s, e.to_string()))
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a BigCount> for &'a BigCount {
    type Output = BigCount;
    fn add(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 + &rhs.0)
    }
}

/// Panics on underflow, like unsigned integer subtraction.
impl Sub for BigCount {
    type Output = BigCount;
    fn sub(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 - rhs.0)
    }
}

impl Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> BigCount {
        iter.fold(BigCount::zero(), |a, b| a + b)
    }
}

fn require(what: &'static str, min: usize, n: usize) -> Result<()> {
    if n < min {
        Err(Error::OutOfDomain { what, min, n })
    } else {
        Ok(())
    }
}

/// `Σ_{d | n} μ(n/d) f(d)` over big integers.
fn moebius_sum(n: usize, f: impl Fn(usize) -> BigInt) -> BigInt {
    divisors(n)
        .into_iter()
        .map(|d| match moebius(n / d) {
            0 => BigInt::zero(),
            1 => f(d),
            _ => -f(d),
        })
        .sum()
}

fn pow2_signed(e: usize) -> BigInt {
    BigInt::one() << e
}

/// `2^(n-1)` compositions of `n`.
pub fn count_compositions(n: usize) -> Result<BigCount> {
    require("count_compositions", 1, n)?;
    Ok(BigCount::pow2(n - 1))
}

/// `binom(n-1, k-1)` compositions of `n` into `k` parts.
pub fn count_compositions_k_parts(n: usize, k: usize) -> Result<BigCount> {
    if k < 1 || k > n {
        return Err(Error::PartCountOutOfRange { n, k });
    }
    // binom(n-1, j) built up multiplicatively; each step stays integral.
    let (top, j) = (n - 1, k - 1);
    let j = j.min(top - j);
    let mut acc = BigUint::one();
    for i in 0..j {
        acc = acc * BigUint::from(top - i) / BigUint::from(i + 1);
    }
    Ok(BigCount(acc))
}

/// Compositions of `n` with coprime parts, `Σ_{d|n} μ(n/d) 2^(d-1)`.
///
/// Equals the number of connected circulant digraphs of order `n`.
pub fn count_prime_compositions(n: usize) -> Result<BigCount> {
    require("count_prime_compositions", 1, n)?;
    Ok(BigCount::from_signed(moebius_sum(n, |d| {
        pow2_signed(d - 1)
    })))
}

/// Compositions of `n` whose parts share a factor above 1.
pub fn count_disconnected_compositions(n: usize) -> Result<BigCount> {
    Ok(count_compositions(n)? - count_prime_compositions(n)?)
}

/// `2^⌊n/2⌋` palindromes of `n`; `n = 1` gives 1.
pub fn count_palindromes(n: usize) -> Result<BigCount> {
    require("count_palindromes", 1, n)?;
    Ok(BigCount::pow2(n / 2))
}

/// Aperiodic palindromes of `n`, `Σ_{d|n} μ(n/d) (2^⌊d/2⌋ - 1)`.
///
/// Equals the number of connected circulant graphs of order `n`.
pub fn count_aperiodic_palindromes(n: usize) -> Result<BigCount> {
    require("count_aperiodic_palindromes", 2, n)?;
    Ok(BigCount::from_signed(moebius_sum(n, |d| {
        pow2_signed(d / 2) - BigInt::one()
    })))
}

/// One row of [`CountTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub n: usize,
    pub total_compositions: BigCount,
    pub prime_compositions: BigCount,
    pub disconnected: BigCount,
    pub palindromes: BigCount,
    /// `None` for `n = 1`, where the count is not defined.
    pub aperiodic_palindromes: Option<BigCount>,
}

impl CountRow {
    pub fn new(n: usize) -> Result<Self> {
        Ok(CountRow {
            n,
            total_compositions: count_compositions(n)?,
            prime_compositions: count_prime_compositions(n)?,
            disconnected: count_disconnected_compositions(n)?,
            palindromes: count_palindromes(n)?,
            aperiodic_palindromes: if n >= 2 {
                Some(count_aperiodic_palindromes(n)?)
            } else {
                None
            },
        })
    }
}

/// The five count families for `n = 1..=max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    rows: Vec<CountRow>,
}

impl CountTable {
    pub fn build(max_n: usize) -> Result<Self> {
        require("a count table", 1, max_n)?;
        let rows = (1..=max_n).map(CountRow::new).collect::<Result<_>>()?;
        Ok(CountTable { rows })
    }

    pub fn rows(&self) -> &[CountRow] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Option<&CountRow> {
        n.checked_sub(1).and_then(|i| self.rows.get(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> BigCount {
        s.parse().unwrap()
    }

    #[test]
    fn compositions() {
        assert_eq!(count_compositions(5).unwrap(), 16u64.into());
        assert_eq!(count_compositions(1).unwrap(), 1u64.into());
        assert_eq!(
            count_compositions(72).unwrap(),
            big("2361183241434822606848")
        );
        assert!(count_compositions(0).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(count_compositions_k_parts(5, 2).unwrap(), 4u64.into());
        assert_eq!(count_compositions_k_parts(9, 1).unwrap(), 1u64.into());
        assert_eq!(count_compositions_k_parts(8, 3).unwrap(), 21u64.into());
        assert_eq!(count_compositions_k_parts(8, 8).unwrap(), 1u64.into());
        assert_eq!(
            count_compositions_k_parts(5, 0),
            Err(Error::PartCountOutOfRange { n: 5, k: 0 })
        );
        assert!(count_compositions_k_parts(5, 6).is_err());
    }

    #[test]
    fn binomial_rows_sum_to_powers_of_two() {
        for n in 1..=80 {
            let s: BigCount = (1..=n)
                .map(|k| count_compositions_k_parts(n, k).unwrap())
                .sum();
            assert_eq!(s, count_compositions(n).unwrap());
        }
    }

    #[test]
    fn prime_compositions() {
        assert_eq!(count_prime_compositions(5).unwrap(), 15u64.into());
        assert_eq!(count_prime_compositions(12).unwrap(), 2010u64.into());
        assert_eq!(
            count_prime_compositions(72).unwrap(),
            big("2361183241400454481920")
        );
    }

    #[test]
    fn disconnected() {
        assert_eq!(count_disconnected_compositions(10).unwrap(), 17u64.into());
        assert_eq!(count_disconnected_compositions(8).unwrap(), 8u64.into());
        assert_eq!(
            count_disconnected_compositions(72).unwrap(),
            34368124928u64.into()
        );
        // the same number as a sum over proper divisors
        for n in 1..=64 {
            let s: BigCount = divisors(n)
                .into_iter()
                .filter(|&d| d != n)
                .map(|d| count_prime_compositions(d).unwrap())
                .sum();
            assert_eq!(count_disconnected_compositions(n).unwrap(), s);
        }
    }

    #[test]
    fn palindromes() {
        assert_eq!(count_palindromes(8).unwrap(), 16u64.into());
        assert_eq!(count_palindromes(2).unwrap(), 2u64.into());
        assert_eq!(count_palindromes(9).unwrap(), 16u64.into());
        assert_eq!(count_palindromes(1).unwrap(), 1u64.into());
    }

    #[test]
    fn aperiodic_palindromes() {
        assert_eq!(count_aperiodic_palindromes(8).unwrap(), 12u64.into());
        assert_eq!(count_aperiodic_palindromes(4).unwrap(), 2u64.into());
        assert_eq!(count_aperiodic_palindromes(2).unwrap(), 1u64.into());
        assert!(matches!(
            count_aperiodic_palindromes(1),
            Err(Error::OutOfDomain { min: 2, n: 1, .. })
        ));
    }

    #[test]
    fn table_rows() {
        let t = CountTable::build(40).unwrap();
        assert_eq!(t.rows().len(), 40);
        let r1 = t.row(1).unwrap();
        assert_eq!(r1.prime_compositions, 1u64.into());
        assert_eq!(r1.disconnected, BigCount::zero());
        assert_eq!(r1.aperiodic_palindromes, None);
        let r15 = t.row(15).unwrap();
        assert_eq!(r15.prime_compositions, 16365u64.into());
        assert_eq!(r15.disconnected, 19u64.into());
        assert_eq!(t.row(24).unwrap().prime_compositions, 8386440u64.into());
        for r in t.rows() {
            assert_eq!(
                &r.prime_compositions + &r.disconnected,
                r.total_compositions
            );
        }
        assert!(t.row(0).is_none());
        assert!(CountTable::build(0).is_err());
    }
}
