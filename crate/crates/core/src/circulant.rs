//! Connection sets over `Z_n` and the circulant (di)graphs they generate.
//!
//! A [`ConnectionSet`] is a subset of `Z_n` containing 0, stored sorted.
//! `G(n, S)` has an arc `i -> j` whenever `i != j` and `j - i mod n` lies in
//! `S`, so the element 0 never contributes an arc. Adjacency is answered
//! arithmetically; nothing is materialized until arcs are listed.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest modulus for which a connection set fits in a `u64` bitmask.
pub const MAX_MASK_MODULUS: usize = 64;

/// A subset of `Z_n` that contains 0, kept in strictly increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectionSet {
    modulus: usize,
    elements: Vec<usize>,
}

impl ConnectionSet {
    /// Reduce `members` modulo `n`, sort and deduplicate.
    ///
    /// Fails when `n` is 0 or when 0 is not among the reduced members.
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let mut elements: Vec<usize> = members.into_iter().map(|a| a % n).collect();
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::MissingZero(n));
        }
        Ok(ConnectionSet {
            modulus: n,
            elements,
        })
    }

    /// Like [`ConnectionSet::new`] but accepts negative representatives.
    pub fn from_signed<I: IntoIterator<Item = i64>>(n: usize, members: I) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let m = n as i64;
        ConnectionSet::new(n, members.into_iter().map(|a| a.rem_euclid(m) as usize))
    }

    /// `{0}` in `Z_n`.
    pub fn trivial(n: usize) -> Result<Self> {
        ConnectionSet::new(n, [0])
    }

    /// All of `Z_n`.
    pub fn full(n: usize) -> Result<Self> {
        ConnectionSet::new(n, 0..n)
    }

    /// Decode a bitmask in which bit `i - 1` marks the element `i` (`1 <= i < n`).
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if n > MAX_MASK_MODULUS {
            return Err(Error::TooLarge {
                n,
                max: MAX_MASK_MODULUS,
            });
        }
        if n - 1 < 64 && mask >> (n - 1) != 0 {
            return Err(Error::parse(
                &format!("{mask:#x}"),
                format!("mask has bits beyond position {}", n - 2),
            ));
        }
        Ok(Self::from_mask_unchecked(n, mask))
    }

    pub(crate) fn from_mask_unchecked(n: usize, mask: u64) -> Self {
        let mut elements = Vec::with_capacity(mask.count_ones() as usize + 1);
        elements.push(0);
        let mut m = mask;
        while m != 0 {
            elements.push(m.trailing_zeros() as usize + 1);
            m &= m - 1;
        }
        ConnectionSet {
            modulus: n,
            elements,
        }
    }

    /// Inverse of [`ConnectionSet::from_mask`]; `None` when `n > 64`.
    pub fn mask(&self) -> Option<u64> {
        if self.modulus > MAX_MASK_MODULUS {
            return None;
        }
        Some(
            self.elements[1..]
                .iter()
                .fold(0u64, |m, &a| m | 1 << (a - 1)),
        )
    }

    pub(crate) fn from_sorted_unchecked(n: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.first() == Some(&0));
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.last().is_some_and(|&a| a < n));
        ConnectionSet {
            modulus: n,
            elements,
        }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// The nonzero elements, i.e. the steps that produce arcs.
    pub fn steps(&self) -> &[usize] {
        &self.elements[1..]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false: 0 is a member of every connection set.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&(a % self.modulus)).is_ok()
    }

    /// `{ n - a mod n : a in S }`.
    pub fn inverse(&self) -> ConnectionSet {
        let n = self.modulus;
        // 0 maps to 0; the remaining elements reverse their order.
        let mut elements = Vec::with_capacity(self.elements.len());
        elements.push(0);
        elements.extend(self.elements[1..].iter().rev().map(|&a| n - a));
        ConnectionSet::from_sorted_unchecked(n, elements)
    }

    /// `S = -S mod n`, equivalently `a_i + a_{t+2-i} = n` for `i >= 2`.
    pub fn is_symmetric(&self) -> bool {
        let steps = self.steps();
        let t = steps.len();
        (0..t).all(|i| steps[i] + steps[t - 1 - i] == self.modulus)
    }

    /// gcd of the nonzero elements together with the modulus.
    ///
    /// This is the generator of the subgroup `<S>` of `Z_n`; for `{0}` it is `n`.
    pub fn gcd(&self) -> usize {
        self.steps().iter().fold(self.modulus, |g, &a| g.gcd(&a))
    }

    /// gcd over the elements alone, ignoring the modulus.
    ///
    /// Does not characterize connectivity (`{0, 3}` in `Z_8` gives 3 but is
    /// connected). Only used to demonstrate that failure in verification.
    pub fn elementwise_gcd(&self) -> usize {
        self.elements.iter().fold(0, |g, &a| g.gcd(&a))
    }

    /// `S` generates `Z_n`, i.e. `G(n, S)` is connected. True for `n = 1`.
    pub fn is_connected(&self) -> bool {
        self.gcd() == 1
    }

    pub fn digraph(&self) -> CirculantDigraph {
        CirculantDigraph { set: self.clone() }
    }

    /// The undirected circulant graph; requires a symmetric set.
    pub fn graph(&self) -> Result<CirculantGraph> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric(self.to_string()));
        }
        Ok(CirculantGraph { set: self.clone() })
    }
}

/// `n: a_1,a_2,...`
impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.modulus)?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for ConnectionSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(s, "expected `n: a_1,a_2,...`"))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|e| Error::parse(s, format!("bad modulus: {e}")))?;
        let members = parse_members(rest).map_err(|reason| Error::parse(s, reason))?;
        ConnectionSet::from_signed(n, members)
    }
}

/// Parse a comma-separated list of (possibly negative) integers.
pub fn parse_members(s: &str) -> std::result::Result<Vec<i64>, String> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|e| format!("bad element `{tok}`: {e}"))
        })
        .collect()
}

/// The circulant digraph `G(n, S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantDigraph {
    set: ConnectionSet,
}

impl CirculantDigraph {
    pub fn connection_set(&self) -> &ConnectionSet {
        &self.set
    }

    pub fn order(&self) -> usize {
        self.set.modulus
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        let n = self.set.modulus;
        i < n && j < n && i != j && self.set.contains((j + n - i) % n)
    }

    pub fn out_neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.set.modulus;
        self.set.steps().iter().map(move |&s| (i + s) % n)
    }

    pub fn in_neighbors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.set.modulus;
        self.set.steps().iter().map(move |&s| (j + n - s) % n)
    }

    pub fn out_degree(&self) -> usize {
        self.set.len() - 1
    }

    pub fn arc_count(&self) -> usize {
        self.set.modulus * self.out_degree()
    }

    /// Every arc, sorted by `(source, target)`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.set.modulus;
        let mut arcs = Vec::with_capacity(self.arc_count());
        let mut row = Vec::with_capacity(self.out_degree());
        for i in 0..n {
            row.clear();
            row.extend(self.out_neighbors(i));
            row.sort_unstable();
            arcs.extend(row.iter().map(|&j| (i, j)));
        }
        arcs
    }
}

/// The undirected circulant graph of a symmetric connection set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantGraph {
    set: ConnectionSet,
}

impl CirculantGraph {
    pub fn connection_set(&self) -> &ConnectionSet {
        &self.set
    }

    pub fn order(&self) -> usize {
        self.set.modulus
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.set.digraph().has_arc(i, j)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.set.modulus;
        self.set.steps().iter().map(move |&s| (i + s) % n)
    }

    pub fn degree(&self) -> usize {
        self.set.len() - 1
    }

    /// Every edge `{i, j}` once as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.set.modulus;
        let mut edges = Vec::with_capacity(n * self.degree() / 2);
        let mut row = Vec::with_capacity(self.degree());
        for i in 0..n {
            row.clear();
            row.extend(self.neighbors(i).filter(|&j| j > i));
            row.sort_unstable();
            edges.extend(row.iter().map(|&j| (i, j)));
        }
        edges
    }

    pub fn as_digraph(&self) -> CirculantDigraph {
        self.set.digraph()
    }
}

/// Traversal-based connectivity, independent of any gcd argument.
pub mod traversal {
    use std::collections::VecDeque;

    use super::{CirculantDigraph, CirculantGraph};

    fn reach_all<F, I>(n: usize, mut next: F) -> bool
    where
        F: FnMut(usize) -> I,
        I: IntoIterator<Item = usize>,
    {
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in next(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Every vertex reachable from 0 when arcs may be followed either way.
    pub fn is_weakly_connected(g: &CirculantDigraph) -> bool {
        reach_all(g.order(), |v| {
            g.out_neighbors(v)
                .chain(g.in_neighbors(v))
                .collect::<Vec<_>>()
        })
    }

    /// Every vertex reaches 0 and is reached from 0 along arc directions.
    pub fn is_strongly_connected(g: &CirculantDigraph) -> bool {
        reach_all(g.order(), |v| g.out_neighbors(v).collect::<Vec<_>>())
            && reach_all(g.order(), |v| g.in_neighbors(v).collect::<Vec<_>>())
    }

    pub fn is_connected(g: &CirculantGraph) -> bool {
        reach_all(g.order(), |v| g.neighbors(v).collect::<Vec<_>>())
    }
}
