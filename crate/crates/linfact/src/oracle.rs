//! Slow reference implementations.
//!
//! These are deliberately naive: direct transcriptions of the defining
//! properties, sharing no code with the linear-time paths they check.
//! The `verify` CLI subcommand and the test suites compare engine output
//! against them.

/// Suffix array by comparison sort of suffix slices. `O(n^2 log n)`.
pub fn naive_suffix_array(symbols: &[u32]) -> Vec<u32> {
    let mut sa: Vec<u32> = (0..symbols.len() as u32).collect();
    sa.sort_by(|&a, &b| symbols[a as usize..].cmp(&symbols[b as usize..]));
    sa
}

/// Pairwise longest-common-prefix lengths of adjacent suffix-array
/// entries, by direct comparison.
pub fn brute_force_lcp(symbols: &[u32], sa: &[u32]) -> Vec<u32> {
    sa.windows(2)
        .map(|w| common_prefix_len(&symbols[w[0] as usize..], &symbols[w[1] as usize..]))
        .collect()
}

pub fn common_prefix_len(a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).take_while(|(x, y)| x == y).count() as u32
}

/// Level ancestor by walking parent pointers.
pub fn walk_up(parent: &[u32], mut v: u32, steps: u32) -> u32 {
    for _ in 0..steps {
        v = parent[v as usize];
    }
    v
}

/// Sort strings by the length-then-reversed-lexicographic order used for
/// position heaps.
pub fn sort_by_heap_order(strings: &mut Vec<Vec<u32>>) {
    strings.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().rev().cmp(b.iter().rev()))
    });
}
