//! Exhaustive self-checks.
//!
//! Each suite sweeps every instance up to its own bound and reports the
//! number of instances checked together with the first counterexample, if
//! any (smallest `n`, then ascending bitmask order). Sweeps over different
//! `n` run in parallel on a rayon pool.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::bijection::{
    aperiodic_palindrome_of, composition_of, connected_set_of, connection_set_of,
};
use crate::circulant::{traversal, ConnectionSet};
use crate::composition::Composition;
use crate::enumeration::{
    compositions, connection_sets, count_aperiodic_palindromes, count_compositions,
    count_compositions_k_parts, count_palindromes, count_prime_compositions, divisors, BigCount,
};

/// How a connection set's gcd is computed in the connectivity suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GcdRule {
    /// gcd of the nonzero elements and the modulus.
    #[default]
    WithModulus,
    /// gcd of the elements alone. Deliberately wrong; used to check that the
    /// connectivity suite detects a broken criterion.
    Elementwise,
}

impl GcdRule {
    fn says_connected(self, set: &ConnectionSet) -> bool {
        match self {
            GcdRule::WithModulus => set.is_connected(),
            GcdRule::Elementwise => set.elementwise_gcd() == 1,
        }
    }
}

/// Per-suite upper bounds on `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub words_max_n: usize,
    pub bijection_max_n: usize,
    pub connectivity_max_n: usize,
    pub strong_connectivity_max_n: usize,
    pub correspondence_max_n: usize,
    pub counting_max_n: usize,
    pub moebius_max_n: usize,
    pub gcd_rule: GcdRule,
    /// Worker threads; `None` lets rayon decide.
    pub workers: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            words_max_n: 16,
            bijection_max_n: 14,
            connectivity_max_n: 12,
            strong_connectivity_max_n: 10,
            correspondence_max_n: 16,
            counting_max_n: 20,
            moebius_max_n: 64,
            gcd_rule: GcdRule::WithModulus,
            workers: None,
        }
    }
}

impl VerifyConfig {
    /// Every suite runs up to the same `max_n`.
    pub fn uniform(max_n: usize) -> Self {
        VerifyConfig {
            words_max_n: max_n,
            bijection_max_n: max_n,
            connectivity_max_n: max_n,
            strong_connectivity_max_n: max_n,
            correspondence_max_n: max_n,
            counting_max_n: max_n,
            moebius_max_n: max_n,
            ..VerifyConfig::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub max_n: usize,
    pub instances: u64,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "PASS {:<26} n <= {:<3} {} instances",
                self.name, self.max_n, self.instances
            ),
            Some(c) => write!(
                f,
                "FAIL {:<26} n <= {:<3} {} instances; first counterexample: {}",
                self.name, self.max_n, self.instances, c
            ),
        }
    }
}

/// Outcome of one `n`: instances checked and the first failure.
type Sweep = (u64, Option<String>);

fn sweep(
    name: &'static str,
    ns: std::ops::RangeInclusive<usize>,
    check: impl Fn(usize) -> Sweep + Sync,
) -> SuiteReport {
    let max_n = *ns.end();
    let per_n: Vec<(usize, Sweep)> = ns.into_par_iter().map(|n| (n, check(n))).collect();
    let instances = per_n.iter().map(|(_, (k, _))| k).sum();
    let counterexample = per_n
        .into_iter()
        .find_map(|(n, (_, fail))| fail.map(|f| format!("n = {n}: {f}")));
    SuiteReport {
        name,
        max_n,
        instances,
        counterexample,
    }
}

/// Run `check` on every item, stopping at the first failure.
fn each<T>(items: impl Iterator<Item = T>, mut check: impl FnMut(&T) -> Option<String>) -> Sweep {
    let mut k = 0;
    for item in items {
        k += 1;
        if let Some(f) = check(&item) {
            return (k, Some(f));
        }
    }
    (k, None)
}

fn all_compositions(n: usize) -> impl Iterator<Item = Composition> {
    compositions(n).expect("n within enumeration range")
}

fn all_sets(n: usize) -> impl Iterator<Item = ConnectionSet> {
    connection_sets(n).expect("n within enumeration range")
}

fn fail(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(msg)
}

/// Word-level laws for every composition, plus the palindrome count.
pub fn words_suite(max_n: usize) -> SuiteReport {
    sweep("composition-words", 1..=max_n, |n| {
        let mut palindromes = 0u64;
        let (k, f) = each(all_compositions(n), |c| {
            let r = c.reverse();
            if r.reverse() != *c {
                return Some(format!("{c}: reverse is not an involution"));
            }
            if c.is_palindrome() != (r == *c) {
                return Some(format!("{c}: palindrome test disagrees with reversal"));
            }
            if c.is_palindrome() {
                palindromes += 1;
            }
            let p = c.period();
            if c.len() % p != 0 {
                return Some(format!("{c}: period {p} does not divide the length"));
            }
            let (block, reps) = c.primitive_block();
            if block.repeat(reps).ok().as_ref() != Some(c) {
                return Some(format!("{c}: not the repetition of its primitive block"));
            }
            let d = c.gcd();
            if n % d != 0 {
                return Some(format!("{c}: gcd {d} does not divide {n}"));
            }
            if d != 1 {
                let v = match c.nu() {
                    Ok(v) => v,
                    Err(e) => return Some(format!("{c}: {e}")),
                };
                if v.total() != n || v.gcd() != 1 {
                    return Some(format!("{c}: rescaling gave {v}"));
                }
                if c.is_palindrome() && !v.is_palindrome() {
                    return Some(format!("{c}: rescaling broke the palindrome ({v})"));
                }
            }
            None
        });
        if f.is_some() {
            return (k, f);
        }
        let expected = 1u64 << (n / 2);
        (
            k,
            fail(palindromes == expected, || {
                format!("{palindromes} palindromes, expected {expected}")
            }),
        )
    })
}

/// Set-to-composition map and its inverse are mutually inverse and
/// preserve part count, gcd, and symmetry.
pub fn bijection_suite(max_n: usize) -> SuiteReport {
    sweep("gap-bijection", 1..=max_n, |n| {
        let (k1, f) = each(all_sets(n), |s| {
            let c = composition_of(s);
            if connection_set_of(&c) != *s {
                return Some(format!("{s}: partial sums of {c} differ"));
            }
            if c.total() != n || c.len() != s.len() {
                return Some(format!("{s}: image {c} has the wrong shape"));
            }
            if c.gcd() != s.gcd() {
                return Some(format!("{s}: gcd {} vs image gcd {}", s.gcd(), c.gcd()));
            }
            fail(c.is_palindrome() == s.is_symmetric(), || {
                format!("{s}: symmetry does not match palindromicity of {c}")
            })
        });
        if f.is_some() {
            return (k1, f);
        }
        // independent generator for the other direction: the compositions
        // of n by recursion on the first part
        let comps = compositions_by_first_part(n);
        let (k2, f) = each(comps.into_iter(), |c| {
            let s = connection_set_of(c);
            fail(composition_of(&s) == *c && s.modulus() == n, || {
                format!("{c}: round trip through {s} failed")
            })
        });
        (k1 + k2, f)
    })
}

/// Compositions generated without bitmasks, for cross-checking.
pub fn compositions_by_first_part(n: usize) -> Vec<Composition> {
    fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition::new(prefix.clone()).expect("positive parts"));
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Connectivity criterion agrees with a breadth-first traversal.
pub fn connectivity_suite(max_n: usize, rule: GcdRule) -> SuiteReport {
    sweep("connectivity-oracle", 1..=max_n, |n| {
        connectivity_sweep(n, rule)
    })
}

/// First set over `Z_n` on which `rule` and traversal disagree.
pub fn connectivity_sweep(n: usize, rule: GcdRule) -> Sweep {
    each(all_sets(n), |s| {
        let g = s.digraph();
        let by_rule = rule.says_connected(s);
        let by_bfs = traversal::is_weakly_connected(&g);
        fail(by_rule == by_bfs, || {
            format!(
                "{{{}}}: criterion says {by_rule}, traversal says {by_bfs}",
                elements(s)
            )
        })
    })
}

fn elements(s: &ConnectionSet) -> String {
    s.elements()
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Weak and strong connectivity coincide; digraphs are regular and
/// rotation invariant.
pub fn digraph_suite(max_n: usize) -> SuiteReport {
    sweep("digraph-structure", 1..=max_n, |n| {
        each(all_sets(n), |s| {
            let g = s.digraph();
            if traversal::is_weakly_connected(&g) != traversal::is_strongly_connected(&g) {
                return Some(format!("{s}: weak and strong connectivity differ"));
            }
            let arcs = g.arcs();
            if arcs.len() != n * (s.len() - 1) {
                return Some(format!("{s}: {} arcs", arcs.len()));
            }
            let mut outdeg = vec![0usize; n];
            for &(i, j) in &arcs {
                outdeg[i] += 1;
                if !g.has_arc((i + 1) % n, (j + 1) % n) {
                    return Some(format!("{s}: arc ({i},{j}) not rotation invariant"));
                }
            }
            fail(outdeg.iter().all(|&d| d == s.len() - 1), || {
                format!("{s}: irregular outdegrees")
            })
        })
    })
}

/// Symmetric sets over `Z_n` number `2^⌊n/2⌋`.
pub fn symmetric_sets_suite(max_n: usize) -> SuiteReport {
    sweep("symmetric-sets", 1..=max_n, |n| {
        let mut k = 0;
        let mut sym = 0u64;
        for s in all_sets(n) {
            k += 1;
            if s.is_symmetric() {
                sym += 1;
            }
        }
        let expected = 1u64 << (n / 2);
        (
            k,
            fail(sym == expected, || {
                format!("{sym} symmetric sets, expected {expected}")
            }),
        )
    })
}

/// Aperiodic palindromes correspond one-to-one with symmetric generating
/// sets, and the inverse map undoes the forward map.
pub fn correspondence_suite(max_n: usize) -> SuiteReport {
    sweep(
        "aperiodic-correspondence",
        2..=max_n.max(2),
        correspondence_sweep,
    )
}

fn correspondence_sweep(n: usize) -> Sweep {
    let mut k = 0;
    let mut image = HashSet::new();
    for c in all_compositions(n) {
        if !(c.is_palindrome() && c.is_aperiodic()) {
            continue;
        }
        k += 1;
        let s = match connected_set_of(&c) {
            Ok(s) => s,
            Err(e) => return (k, Some(format!("{c}: {e}"))),
        };
        let graph = match s.graph() {
            Ok(g) => g,
            Err(e) => return (k, Some(format!("{c} -> {s}: {e}"))),
        };
        if !traversal::is_connected(&graph) {
            return (k, Some(format!("{c} -> {s}: graph is disconnected")));
        }
        match aperiodic_palindrome_of(&s) {
            Ok(back) if back == c => {}
            Ok(back) => return (k, Some(format!("{c} -> {s} -> {back}"))),
            Err(e) => return (k, Some(format!("{c} -> {s}: {e}"))),
        }
        if !image.insert(s.clone()) {
            return (k, Some(format!("{c}: image {s} is hit twice")));
        }
    }
    let targets: HashSet<ConnectionSet> = all_sets(n)
        .filter(|s| s.is_symmetric() && traversal::is_weakly_connected(&s.digraph()))
        .collect();
    if image != targets {
        let missing = targets.difference(&image).next();
        return (
            k,
            Some(format!(
                "image has {} sets, expected {}; e.g. {:?} not reached",
                image.len(),
                targets.len(),
                missing.map(|s| s.to_string())
            )),
        );
    }
    let formula = count_aperiodic_palindromes(n).expect("n >= 2");
    (
        k,
        fail(formula == BigCount::from(k), || {
            format!("{k} aperiodic palindromes enumerated, formula says {formula}")
        }),
    )
}

/// Closed-form counts against filtered enumeration.
pub fn counting_suite(max_n: usize) -> SuiteReport {
    sweep("counting-oracles", 1..=max_n, |n| {
        let (mut total, mut prime, mut pal, mut apal) = (0u64, 0u64, 0u64, 0u64);
        let mut by_parts = vec![0u64; n + 1];
        for c in all_compositions(n) {
            total += 1;
            by_parts[c.len()] += 1;
            if c.gcd() == 1 {
                prime += 1;
            }
            if c.is_palindrome() {
                pal += 1;
                if c.is_aperiodic() {
                    apal += 1;
                }
            }
        }
        let check = |what: &str, got: u64, want: BigCount| {
            fail(BigCount::from(got) == want, || {
                format!("{what}: enumerated {got}, formula {want}")
            })
        };
        let mut f = check("compositions", total, count_compositions(n).unwrap())
            .or_else(|| {
                check(
                    "prime compositions",
                    prime,
                    count_prime_compositions(n).unwrap(),
                )
            })
            .or_else(|| check("palindromes", pal, count_palindromes(n).unwrap()));
        if n >= 2 {
            f = f.or_else(|| {
                check(
                    "aperiodic palindromes",
                    apal,
                    count_aperiodic_palindromes(n).unwrap(),
                )
            });
        }
        for (parts, &got) in by_parts.iter().enumerate().skip(1) {
            f = f.or_else(|| {
                check(
                    &format!("{parts}-part compositions"),
                    got,
                    count_compositions_k_parts(n, parts).unwrap(),
                )
            });
        }
        (total, f)
    })
}

/// `Σ_{d|n} |prime compositions of d| = 2^(n-1)`.
pub fn moebius_suite(max_n: usize) -> SuiteReport {
    sweep("moebius-inversion", 1..=max_n, |n| {
        let s: BigCount = divisors(n)
            .into_iter()
            .map(|d| count_prime_compositions(d).unwrap())
            .sum();
        let want = count_compositions(n).unwrap();
        (
            1,
            fail(s == want, || format!("divisor sum {s}, expected {want}")),
        )
    })
}

/// Dividing by the gcd `d` maps compositions of `n` with gcd `d`
/// bijectively onto the prime compositions of `n / d`.
pub fn scaling_suite(max_n: usize) -> SuiteReport {
    sweep("gcd-scaling", 1..=max_n, |n| {
        let mut k = 0;
        for d in divisors(n) {
            let mut image = HashSet::new();
            for c in all_compositions(n).filter(|c| c.gcd() == d) {
                k += 1;
                let scaled: Vec<usize> = c.parts().iter().map(|p| p / d).collect();
                let scaled = Composition::new(scaled).expect("parts stay positive");
                if scaled.total() != n / d || scaled.gcd() != 1 {
                    return (k, Some(format!("{c}: scaled to {scaled}")));
                }
                if !image.insert(scaled) {
                    return (k, Some(format!("{c}: scaled image repeats")));
                }
            }
            let want = count_prime_compositions(n / d).unwrap();
            if BigCount::from(image.len() as u64) != want {
                return (
                    k,
                    Some(format!("gcd {d}: {} images, expected {want}", image.len())),
                );
            }
        }
        (k, None)
    })
}

/// Run every suite under `config`.
pub fn run(config: &VerifyConfig) -> Vec<SuiteReport> {
    let suites = || {
        vec![
            words_suite(config.words_max_n),
            symmetric_sets_suite(config.words_max_n),
            bijection_suite(config.bijection_max_n),
            connectivity_suite(config.connectivity_max_n, config.gcd_rule),
            digraph_suite(config.strong_connectivity_max_n),
            correspondence_suite(config.correspondence_max_n),
            counting_suite(config.counting_max_n),
            scaling_suite(config.words_max_n),
            moebius_suite(config.moebius_max_n),
        ]
    };
    match config.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("thread pool")
            .install(suites),
        None => suites(),
    }
}
