//! Compositions of a positive integer: ordered words of positive parts.
//!
//! Besides construction and parsing this module carries the word-level
//! predicates used throughout the crate: reversal, palindromes, the gcd of
//! the parts, the smallest period, and the gcd rescaling [`Composition::nu`].

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// An ordered, non-empty sequence of positive integers.
///
/// The total is always recomputed from the parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroPart(i));
        }
        Ok(Composition { parts })
    }

    /// The one-part composition `n`.
    pub fn single(n: usize) -> Result<Self> {
        Composition::new(vec![n])
    }

    /// `n` ones.
    pub fn ones(n: usize) -> Result<Self> {
        Composition::new(vec![1; n])
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.is_empty() && parts.iter().all(|&p| p > 0));
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing clippy expects.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The integer being composed, i.e. the sum of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn reverse(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    pub fn is_palindrome(&self) -> bool {
        let m = self.parts.len();
        (0..m / 2).all(|i| self.parts[i] == self.parts[m - 1 - i])
    }

    /// Greatest common divisor of the parts. Always divides the total.
    pub fn gcd(&self) -> usize {
        self.parts.iter().fold(0, |g, &p| g.gcd(&p))
    }

    /// True when the parts are coprime as a whole (a "prime" composition).
    pub fn is_prime(&self) -> bool {
        self.gcd() == 1
    }

    /// Smallest `p` dividing the part count such that the word is the
    /// `len / p`-fold repetition of its length-`p` prefix.
    ///
    /// A one-part composition has period 1.
    pub fn period(&self) -> usize {
        let m = self.parts.len();
        (1..=m)
            .filter(|p| m.is_multiple_of(*p))
            .find(|&p| {
                self.parts
                    .iter()
                    .enumerate()
                    .all(|(i, &x)| x == self.parts[i % p])
            })
            .unwrap_or(m)
    }

    pub fn is_aperiodic(&self) -> bool {
        self.period() == self.parts.len()
    }

    /// The length-`period` prefix together with the repetition count.
    pub fn primitive_block(&self) -> (Composition, usize) {
        let p = self.period();
        (
            Composition {
                parts: self.parts[..p].to_vec(),
            },
            self.parts.len() / p,
        )
    }

    /// `r`-fold concatenation of `self`.
    pub fn repeat(&self, r: usize) -> Result<Composition> {
        if r == 0 {
            return Err(Error::ZeroRepetition);
        }
        Ok(Composition {
            parts: self.parts.repeat(r),
        })
    }

    /// Every part multiplied by `factor` (which must be positive).
    pub fn scale(&self, factor: usize) -> Result<Composition> {
        if factor == 0 {
            return Err(Error::ZeroPart(0));
        }
        Ok(Composition {
            parts: self.parts.iter().map(|&p| p * factor).collect(),
        })
    }

    /// Divide every part by `d = gcd` and repeat the result `d` times.
    ///
    /// The total is preserved and the result has gcd 1. Fails when the
    /// parts are already coprime.
    pub fn nu(&self) -> Result<Composition> {
        let d = self.gcd();
        if d == 1 {
            return Err(Error::CoprimeParts(self.to_string()));
        }
        let block: Vec<usize> = self.parts.iter().map(|&p| p / d).collect();
        Ok(Composition {
            parts: block.repeat(d),
        })
    }

    /// Parse the juxtaposed digit notation (`"212"`), falling back to the
    /// comma form when the input contains a comma.
    pub fn parse_compact(s: &str) -> Result<Composition> {
        let t = s.trim();
        if t.contains(',') {
            return t.parse();
        }
        if t.is_empty() {
            return Err(Error::parse(s, "empty composition"));
        }
        let parts = t
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if d > 0 => Ok(d as usize),
                Some(_) => Err(Error::parse(s, "digit notation cannot contain a zero part")),
                None => Err(Error::parse(s, format!("unexpected character `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }

    /// Juxtaposed digits when every part is a single digit, otherwise the
    /// comma form.
    pub fn to_compact_string(&self) -> String {
        if self.parts.iter().all(|&p| p < 10) {
            self.parts.iter().map(|p| p.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

/// Comma-separated parts, e.g. `2,1,2`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses the comma form. A string without commas is a single part, so
/// `"12"` is the one-part composition 12; see [`Composition::parse_compact`]
/// for digit juxtaposition.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::parse(s, "empty composition"));
        }
        let parts = t
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|e| Error::parse(s, format!("bad part `{tok}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts).map_err(|e| Error::parse(s, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(s: &str) -> Composition {
        Composition::parse_compact(s).unwrap()
    }

    #[test]
    fn totals() {
        assert_eq!(c("212").total(), 5);
        assert_eq!(Composition::single(8).unwrap().total(), 8);
        assert_eq!(Composition::ones(13).unwrap().total(), 13);
    }

    #[test]
    fn reversal_and_palindromes() {
        assert_eq!(c("14").reverse(), c("41"));
        assert_eq!(c("161").reverse(), c("161"));
        assert_eq!(c("123").reverse(), c("321"));
        assert!(c("1331").is_palindrome());
        assert!(!c("14").is_palindrome());
        assert!(Composition::single(8).unwrap().is_palindrome());
    }

    #[test]
    fn gcds() {
        assert_eq!(c("242").gcd(), 2);
        assert_eq!(c("8").gcd(), 8);
        assert_eq!(c("35").gcd(), 1);
    }

    #[test]
    fn periods() {
        assert_eq!(c("121121").period(), 3);
        assert_eq!(c("2121").period(), 2);
        assert_eq!(c("8").period(), 1);
        assert_eq!(c("11111111").period(), 1);
        assert!(c("242").is_aperiodic());
        assert!(!c("11111111").is_aperiodic());
        assert!(c("121").is_aperiodic());
        assert!(c("8").is_aperiodic());
    }

    #[test]
    fn repetition() {
        assert_eq!(c("121").repeat(2).unwrap(), c("121121"));
        assert_eq!(c("1").repeat(8).unwrap(), c("11111111"));
        assert_eq!(c("35").repeat(1).unwrap(), c("35"));
        assert_eq!(c("35").repeat(0), Err(Error::ZeroRepetition));
    }

    #[test]
    fn rescaling() {
        assert_eq!(c("242").nu().unwrap(), c("121121"));
        assert_eq!(c("8").nu().unwrap(), c("11111111"));
        assert_eq!(c("22").nu().unwrap(), c("1111"));
        assert!(matches!(c("161").nu(), Err(Error::CoprimeParts(_))));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Composition::new(vec![]), Err(Error::EmptyComposition));
        assert_eq!(Composition::new(vec![1, 0, 2]), Err(Error::ZeroPart(1)));
    }

    #[test]
    fn text_forms() {
        let x: Composition = "3,5,12".parse().unwrap();
        assert_eq!(x.parts(), &[3, 5, 12]);
        assert_eq!(x.to_compact_string(), "3,5,12");
        assert_eq!(x.to_string(), "3,5,12");
        assert_eq!(c("212").to_string(), "2,1,2");
        assert_eq!(c("212").to_compact_string(), "212");
        let single: Composition = "12".parse().unwrap();
        assert_eq!(single.parts(), &[12]);
        assert_eq!(c("12").parts(), &[1, 2]);
        assert!("".parse::<Composition>().is_err());
        assert!("1,,2".parse::<Composition>().is_err());
        assert!("1,0".parse::<Composition>().is_err());
        assert!(Composition::parse_compact("102").is_err());
        assert!(Composition::parse_compact("1a").is_err());
    }

    #[test]
    fn nu_preserves_palindromes_exhaustively() {
        // every composition of n <= 16 via its set of partial sums
        for n in 1..=16usize {
            for mask in 0u64..(1 << (n - 1)) {
                let mut parts = Vec::new();
                let mut last = 0;
                for i in 1..n {
                    if mask >> (i - 1) & 1 == 1 {
                        parts.push(i - last);
                        last = i;
                    }
                }
                parts.push(n - last);
                let x = Composition::new(parts).unwrap();
                if x.is_palindrome() && x.gcd() != 1 {
                    let y = x.nu().unwrap();
                    assert!(y.is_palindrome(), "nu({x}) = {y}");
                    assert_eq!(y.total(), n);
                    assert_eq!(y.gcd(), 1);
                }
            }
        }
    }

    fn arb_composition() -> impl Strategy<Value = Composition> {
        prop::collection::vec(1usize..6, 1..12).prop_map(|p| Composition::new(p).unwrap())
    }

    proptest! {
        #[test]
        fn reverse_is_an_involution(x in arb_composition()) {
            prop_assert_eq!(x.reverse().reverse(), x.clone());
            prop_assert_eq!(x.reverse().total(), x.total());
            prop_assert_eq!(x.is_palindrome(), x == x.reverse());
        }

        #[test]
        fn period_reconstructs_the_word(x in arb_composition()) {
            let p = x.period();
            prop_assert_eq!(x.len() % p, 0);
            let (block, r) = x.primitive_block();
            prop_assert!(block.is_aperiodic());
            prop_assert_eq!(block.repeat(r).unwrap(), x);
        }

        #[test]
        fn repeat_of_block(x in arb_composition(), r in 1usize..5) {
            let y = x.repeat(r).unwrap();
            prop_assert_eq!(y.total(), r * x.total());
            prop_assert!(y.period() <= x.len());
        }

        #[test]
        fn nu_keeps_total_and_is_coprime(x in arb_composition(), d in 2usize..5) {
            let y = x.scale(d).unwrap();
            let z = y.nu().unwrap();
            prop_assert_eq!(z.total(), y.total());
            prop_assert_eq!(z.gcd(), 1);
            prop_assert!(!z.is_aperiodic());
        }

        #[test]
        fn comma_text_round_trip(x in prop::collection::vec(1usize..40, 1..10)) {
            let c = Composition::new(x).unwrap();
            prop_assert_eq!(c.to_string().parse::<Composition>().unwrap(), c);
        }

        #[test]
        fn digit_text_round_trip(x in prop::collection::vec(1usize..10, 1..10)) {
            let c = Composition::new(x).unwrap();
            prop_assert_eq!(Composition::parse_compact(&c.to_compact_string()).unwrap(), c);
        }
    }
}
