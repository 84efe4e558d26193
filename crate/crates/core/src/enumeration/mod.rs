//! Divisor and Möbius machinery, closed-form counts, and exhaustive
//! family streams used as oracles for those counts.

mod arith;
mod count;
mod family;

pub use arith::{divisors, moebius, prime_factors};
pub use count::{
    count_aperiodic_palindromes, count_compositions, count_compositions_k_parts,
    count_disconnected_compositions, count_palindromes, count_prime_compositions, BigCount,
    CountRow, CountTable,
};
pub use family::{compositions, connection_sets, members, Family, Member, Members};
