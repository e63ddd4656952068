//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's heap, series or animal algorithms; only graph adjacency is
//! borrowed.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use heaps_core::CommutationGraph;

/// Every word of length `len` over `letters` letters.
pub fn all_words(letters: usize, len: usize) -> Vec<Vec<usize>> {
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                (0..letters).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    words
}

/// Two words are equivalent under commutations exactly when their
/// restrictions to every pair of non-commuting letters agree, so this
/// tuple of restrictions is a complete invariant of the trace.
pub fn trace_key(g: &CommutationGraph, word: &[usize]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut key = Vec::new();
    for u in 0..n {
        for v in u..n {
            if u == v || g.adjacent(u, v) {
                key.push(word.iter().copied().filter(|&x| x == u || x == v).collect());
            }
        }
    }
    key
}

/// Letters that some word of the trace can start with.
pub fn minimal_letters(g: &CommutationGraph, word: &[usize]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (i, &x) in word.iter().enumerate() {
        if word[..i].iter().all(|&y| y != x && !g.adjacent(x, y)) {
            out.insert(x);
        }
    }
    out
}

pub fn is_strict_oracle(g: &CommutationGraph, word: &[usize]) -> bool {
    // A letter repeats in consecutive layers iff two occurrences of it have
    // no non-commuting letter between them.
    for (i, &x) in word.iter().enumerate() {
        if let Some(j) = word[i + 1..].iter().position(|&y| y == x || g.adjacent(x, y)) {
            if word[i + 1 + j] == x {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    All,
    Strict,
    Pyramids,
}

/// Number of traces of each size `0..=degree` in a class, by listing every
/// word and collapsing by [`trace_key`].
pub fn trace_counts(g: &CommutationGraph, degree: usize, class: Class) -> Vec<u64> {
    (0..=degree)
        .map(|len| {
            let mut seen = BTreeMap::new();
            for w in all_words(g.vertex_count(), len) {
                seen.entry(trace_key(g, &w)).or_insert(w);
            }
            seen.values()
                .filter(|w| match class {
                    Class::All => true,
                    Class::Strict => is_strict_oracle(g, w),
                    Class::Pyramids => len > 0 && minimal_letters(g, w).len() == 1,
                })
                .count() as u64
        })
        .collect()
}

/// Stable-set counts by size, from all vertex subsets.
pub fn stable_set_counts(g: &CommutationGraph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let stable = members.iter().all(|&u| members.iter().all(|&v| u == v || !g.adjacent(u, v)));
        if stable {
            counts[members.len()] += 1;
        }
    }
    counts
}

/// Integer power series product truncated at `degree`.
pub fn int_mul(a: &[i128], b: &[i128], degree: usize) -> Vec<i128> {
    let mut out = vec![0i128; degree + 1];
    for (i, x) in a.iter().enumerate().take(degree + 1) {
        for (j, y) in b.iter().enumerate().take(degree + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inverse of an integer series with constant term 1.
pub fn int_inverse(a: &[i128], degree: usize) -> Vec<i128> {
    assert_eq!(a[0], 1);
    let mut out = vec![0i128; degree + 1];
    out[0] = 1;
    for n in 1..=degree {
        out[n] = -(1..=n.min(a.len() - 1)).map(|k| a[k] * out[n - k]).sum::<i128>();
    }
    out
}

pub type Cells = BTreeSet<(i64, i64)>;

/// Directed animals as `(fiber, height)` sets, grown one cell at a time by
/// adding any site with a predecessor already present.
pub fn grow_animals(n: usize, triangular: bool, compact: bool) -> BTreeSet<Cells> {
    let predecessors = |(f, h): (i64, i64)| {
        let mut p = vec![(f - 1, h - 1), (f + 1, h - 1)];
        if triangular {
            p.push((f, h - 2));
        }
        p
    };
    let mut result = BTreeSet::new();
    let seeds: Vec<Cells> = if compact {
        (1..=n as i64).map(|k| (0..k).map(|i| (2 * i, 0)).collect()).collect()
    } else {
        vec![[(0, 0)].into_iter().collect()]
    };
    for seed in seeds {
        let mut level: BTreeSet<Cells> = [seed].into_iter().collect();
        while let Some(size) = level.first().map(|s| s.len()) {
            if size == n {
                result.extend(level);
                break;
            }
            let mut next = BTreeSet::new();
            for cells in &level {
                let lo = cells.iter().map(|c| c.0).min().unwrap() - 1;
                let hi = cells.iter().map(|c| c.0).max().unwrap() + 1;
                let top = cells.iter().map(|c| c.1).max().unwrap() + 2;
                for h in 1..=top {
                    for f in lo..=hi {
                        let site = (f, h);
                        if (f + h) % 2 == 0
                            && !cells.contains(&site)
                            && predecessors(site).iter().any(|p| cells.contains(p))
                        {
                            let mut grown = cells.clone();
                            grown.insert(site);
                            next.insert(grown);
                        }
                    }
                }
            }
            level = next;
        }
    }
    result
}

pub fn cells_of(an: &heaps_core::animal::Animal) -> Cells {
    an.cells().iter().map(|s| (s.fiber, s.height)).collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
