//! Maps between connection sets and compositions.
//!
//! * [`composition_of`] sends `{0 = a_1 < ... < a_t}` in `Z_n` to its cyclic
//!   gaps `(a_2 - a_1, ..., a_t - a_{t-1}, n - a_t)`;
//!   [`connection_set_of`] is its inverse (partial sums).
//! * [`palindrome_of`] restricts the first map to symmetric sets, whose gap
//!   words are exactly the palindromes.
//! * [`connected_set_of`] and [`aperiodic_palindrome_of`] pair aperiodic
//!   palindromes of `n` with symmetric generating sets of `Z_n`, using
//!   [`Composition::nu`] when the palindrome has gcd above 1.

use crate::circulant::ConnectionSet;
use crate::composition::Composition;
use crate::error::{Error, Result};

/// Cyclic gaps of the set. `{0}` maps to the one-part composition `n`.
pub fn composition_of(set: &ConnectionSet) -> Composition {
    let n = set.modulus();
    let elems = set.elements();
    let mut parts = Vec::with_capacity(elems.len());
    parts.extend(elems.windows(2).map(|w| w[1] - w[0]));
    parts.push(n - elems[elems.len() - 1]);
    Composition::from_parts_unchecked(parts)
}

/// Partial sums `0, σ_1, σ_1 + σ_2, ...` over the modulus `total(σ)`.
pub fn connection_set_of(composition: &Composition) -> ConnectionSet {
    let parts = composition.parts();
    let mut elements = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in &parts[..parts.len() - 1] {
        elements.push(acc);
        acc += p;
    }
    elements.push(acc);
    ConnectionSet::from_sorted_unchecked(composition.total(), elements)
}

/// The gap word of a symmetric set; always a palindrome.
pub fn palindrome_of(set: &ConnectionSet) -> Result<Composition> {
    if !set.is_symmetric() {
        return Err(Error::NotSymmetric(set.to_string()));
    }
    Ok(composition_of(set))
}

/// The symmetric generating set paired with an aperiodic palindrome.
///
/// Palindromes with coprime parts map to their partial-sum set. Otherwise
/// the parts are divided by their gcd `d` and repeated `d` times first.
pub fn connected_set_of(palindrome: &Composition) -> Result<ConnectionSet> {
    let n = palindrome.total();
    if n < 2 {
        return Err(Error::OutOfDomain {
            what: "the aperiodic palindrome correspondence",
            min: 2,
            n,
        });
    }
    if !palindrome.is_palindrome() {
        return Err(Error::NotPalindrome(palindrome.to_string()));
    }
    if !palindrome.is_aperiodic() {
        return Err(Error::Periodic(palindrome.to_string()));
    }
    if palindrome.gcd() == 1 {
        Ok(connection_set_of(palindrome))
    } else {
        Ok(connection_set_of(&palindrome.nu()?))
    }
}

/// Inverse of [`connected_set_of`].
///
/// The gap word `σ` of the set is a palindrome with gcd 1. If it is
/// aperiodic it is returned as is; otherwise `σ = β^r` and the result is
/// `β` with every part multiplied by `r`.
pub fn aperiodic_palindrome_of(set: &ConnectionSet) -> Result<Composition> {
    let n = set.modulus();
    if n < 2 {
        return Err(Error::OutOfDomain {
            what: "the aperiodic palindrome correspondence",
            min: 2,
            n,
        });
    }
    if !set.is_symmetric() {
        return Err(Error::NotSymmetric(set.to_string()));
    }
    if !set.is_connected() {
        return Err(Error::NotGenerating(set.to_string(), set.gcd()));
    }
    let word = composition_of(set);
    let (block, r) = word.primitive_block();
    if r == 1 {
        Ok(word)
    } else {
        block.scale(r)
    }
}
