//! Exhaustive streams over the composition and connection-set families.
//!
//! Every stream walks the `2^(n-1)` subsets of `{1, ..., n-1}` in ascending
//! bitmask order (bit `i - 1` marks element `i`), adjoins 0, and yields the
//! members of the requested family. Composition families are the images of
//! those sets under [`composition_of`], so the order is fixed and
//! reproducible.

use std::fmt;
use std::str::FromStr;

use crate::bijection::composition_of;
use crate::circulant::{ConnectionSet, MAX_MASK_MODULUS};
use crate::composition::Composition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Compositions,
    PrimeCompositions,
    Palindromes,
    AperiodicPalindromes,
    ConnectionSets,
    SymmetricConnectionSets,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Compositions,
        Family::PrimeCompositions,
        Family::Palindromes,
        Family::AperiodicPalindromes,
        Family::ConnectionSets,
        Family::SymmetricConnectionSets,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Compositions => "compositions",
            Family::PrimeCompositions => "prime-compositions",
            Family::Palindromes => "palindromes",
            Family::AperiodicPalindromes => "aperiodic-palindromes",
            Family::ConnectionSets => "connection-sets",
            Family::SymmetricConnectionSets => "symmetric-connection-sets",
        }
    }

    /// Smallest `n` for which the family is defined.
    pub fn min_n(self) -> usize {
        match self {
            Family::Compositions | Family::PrimeCompositions | Family::ConnectionSets => 1,
            Family::Palindromes
            | Family::AperiodicPalindromes
            | Family::SymmetricConnectionSets => 2,
        }
    }

    fn needs_symmetry(self) -> bool {
        matches!(
            self,
            Family::Palindromes | Family::AperiodicPalindromes | Family::SymmetricConnectionSets
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts the hyphenated names and their underscore spellings.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// One item of a family stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Member {
    Composition(Composition),
    Set(ConnectionSet),
}

impl Member {
    /// Parts of a composition or elements of a set.
    pub fn values(&self) -> &[usize] {
        match self {
            Member::Composition(c) => c.parts(),
            Member::Set(s) => s.elements(),
        }
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Composition(c) => c.fmt(f),
            Member::Set(s) => s.fmt(f),
        }
    }
}

/// Streaming iterator over one family. Single consumer.
#[derive(Clone, Debug)]
pub struct Members {
    n: usize,
    family: Family,
    next_mask: u64,
    // inclusive upper bound, so that n = 64 does not overflow
    last_mask: u64,
    done: bool,
}

/// True when the set encoded by `mask` equals its own inverse.
fn mask_is_symmetric(n: usize, mask: u64) -> bool {
    let width = n - 1;
    width == 0 || mask.reverse_bits() >> (64 - width) == mask
}

impl Members {
    fn yield_mask(&self, mask: u64) -> Option<Member> {
        let n = self.n;
        if self.family.needs_symmetry() && !mask_is_symmetric(n, mask) {
            return None;
        }
        let set = ConnectionSet::from_mask_unchecked(n, mask);
        match self.family {
            Family::ConnectionSets | Family::SymmetricConnectionSets => Some(Member::Set(set)),
            Family::Compositions | Family::Palindromes => {
                Some(Member::Composition(composition_of(&set)))
            }
            Family::PrimeCompositions => {
                let c = composition_of(&set);
                c.is_prime().then_some(Member::Composition(c))
            }
            Family::AperiodicPalindromes => {
                let c = composition_of(&set);
                debug_assert!(c.is_palindrome());
                c.is_aperiodic().then_some(Member::Composition(c))
            }
        }
    }
}

impl Iterator for Members {
    type Item = Member;

    fn next(&mut self) -> Option<Member> {
        while !self.done {
            let mask = self.next_mask;
            if mask == self.last_mask {
                self.done = true;
            } else {
                self.next_mask += 1;
            }
            if let Some(m) = self.yield_mask(mask) {
                return Some(m);
            }
        }
        None
    }
}

/// Stream the members of `family` for `n` in ascending bitmask order.
pub fn members(n: usize, family: Family) -> Result<Members> {
    if n < family.min_n() {
        return Err(Error::OutOfDomain {
            what: family.name(),
            min: family.min_n(),
            n,
        });
    }
    if n > MAX_MASK_MODULUS {
        return Err(Error::TooLarge {
            n,
            max: MAX_MASK_MODULUS,
        });
    }
    let last_mask = if n == 1 { 0 } else { u64::MAX >> (65 - n) };
    Ok(Members {
        n,
        family,
        next_mask: 0,
        last_mask,
        done: false,
    })
}

/// Every composition of `n`.
pub fn compositions(n: usize) -> Result<impl Iterator<Item = Composition>> {
    Ok(members(n, Family::Compositions)?.map(|m| match m {
        Member::Composition(c) => c,
        Member::Set(_) => unreachable!(),
    }))
}

/// Every connection set over `Z_n`.
pub fn connection_sets(n: usize) -> Result<impl Iterator<Item = ConnectionSet>> {
    Ok(members(n, Family::ConnectionSets)?.map(|m| match m {
        Member::Set(s) => s,
        Member::Composition(_) => unreachable!(),
    }))
}
