//! Suffix array construction by induced sorting (SA-IS).
//!
//! Worst-case `O(n)` time and space on integer alphabets. The input must
//! end with a unique smallest symbol; [`crate::text::Text`] guarantees
//! that, and the generalized-suffix-tree path feeds a transformed
//! concatenation with the same property.

use crate::text::Text;

/// Sorted suffix start positions (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixArray {
    sa: Vec<u32>,
}

impl SuffixArray {
    pub fn positions(&self) -> &[u32] {
        &self.sa
    }

    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }
}

/// Build the suffix array of a sentinel-terminated text.
pub fn build_suffix_array(text: &Text) -> SuffixArray {
    SuffixArray {
        sa: sais_u32(text.symbols()),
    }
}

/// SA-IS over an arbitrary symbol slice whose last element is the unique
/// minimum. Exposed for the generalized suffix tree, which sorts a
/// transformed concatenation rather than a plain `Text`.
pub(crate) fn sais_u32(symbols: &[u32]) -> Vec<u32> {
    debug_assert!(!symbols.is_empty());
    debug_assert!(
        symbols[..symbols.len() - 1]
            .iter()
            .all(|&s| s > symbols[symbols.len() - 1]),
        "last symbol must be the unique minimum"
    );
    let alphabet = symbols.iter().max().map_or(0, |&m| m as usize) + 1;
    let mut sa = vec![0u32; symbols.len()];
    sais(symbols, alphabet, &mut sa);
    sa
}

const EMPTY: u32 = u32::MAX;

/// Core recursion. `text` ends with its unique smallest symbol; `sa` has
/// the same length and receives the answer.
fn sais(text: &[u32], alphabet: usize, sa: &mut [u32]) {
    let n = text.len();
    if n == 1 {
        sa[0] = 0;
        return;
    }

    // Suffix types: s_type[i] == true when suffix i is smaller than
    // suffix i+1 (S-type). The final sentinel is S by convention.
    let mut s_type = vec![false; n];
    s_type[n - 1] = true;
    for i in (0..n - 1).rev() {
        s_type[i] = text[i] < text[i + 1] || (text[i] == text[i + 1] && s_type[i + 1]);
    }
    let is_lms = |i: usize| i > 0 && s_type[i] && !s_type[i - 1];

    let mut bucket_sizes = vec![0u32; alphabet];
    for &c in text {
        bucket_sizes[c as usize] += 1;
    }

    // Pass 1: induce from the LMS positions in text order to sort the
    // LMS substrings. The unique smallest final symbol makes position
    // n-1 an LMS position, so there is always at least one.
    let lms_positions: Vec<u32> = (1..n).filter(|&i| is_lms(i)).map(|i| i as u32).collect();
    let num_lms = lms_positions.len();
    induce(text, &s_type, &bucket_sizes, &lms_positions, sa);

    // Name LMS substrings in sorted order.
    let mut sorted_lms = Vec::with_capacity(num_lms);
    for &p in sa.iter() {
        if p != EMPTY && is_lms(p as usize) {
            sorted_lms.push(p);
        }
    }
    debug_assert_eq!(sorted_lms.len(), num_lms);

    // name_of[i] = rank of the LMS substring starting at i.
    let mut name_of = vec![EMPTY; n];
    let mut names = 0u32;
    let mut prev = EMPTY;
    for &p in &sorted_lms {
        if prev != EMPTY && !lms_substrings_equal(text, &s_type, prev as usize, p as usize) {
            names += 1;
        }
        name_of[p as usize] = names;
        prev = p;
    }

    let order: Vec<u32> = if names as usize + 1 == num_lms {
        // All names distinct: the first induction already sorted them.
        sorted_lms
    } else {
        // Recurse on the reduced string of LMS names (in text order). Its
        // last element is the sentinel's name 0, again a unique minimum.
        let reduced: Vec<u32> = lms_positions
            .iter()
            .map(|&p| name_of[p as usize])
            .collect();
        let mut reduced_sa = vec![0u32; reduced.len()];
        sais(&reduced, names as usize + 1, &mut reduced_sa);
        reduced_sa
            .iter()
            .map(|&r| lms_positions[r as usize])
            .collect()
    };

    // Pass 2: induce from the fully sorted LMS suffixes.
    induce(text, &s_type, &bucket_sizes, &order, sa);
}

/// One round of induced sorting: seed LMS suffixes at bucket tails, then
/// induce L-types left-to-right and S-types right-to-left.
fn induce(text: &[u32], s_type: &[bool], bucket_sizes: &[u32], lms_in_order: &[u32], sa: &mut [u32]) {
    let n = text.len();
    sa.fill(EMPTY);

    let mut tails = bucket_tails(bucket_sizes);
    for &p in lms_in_order.iter().rev() {
        let c = text[p as usize] as usize;
        tails[c] -= 1;
        sa[tails[c] as usize] = p;
    }

    // The sentinel suffix n-1 is itself LMS and lands in sa[0], so the
    // left-to-right scan sees it first and induces its predecessor.
    let mut heads = bucket_heads(bucket_sizes);
    for i in 0..n {
        let p = sa[i];
        if p == EMPTY || p == 0 {
            continue;
        }
        let j = (p - 1) as usize;
        if !s_type[j] {
            let c = text[j] as usize;
            sa[heads[c] as usize] = j as u32;
            heads[c] += 1;
        }
    }

    let mut tails = bucket_tails(bucket_sizes);
    for i in (0..n).rev() {
        let p = sa[i];
        if p == EMPTY || p == 0 {
            continue;
        }
        let j = (p - 1) as usize;
        if s_type[j] {
            let c = text[j] as usize;
            tails[c] -= 1;
            sa[tails[c] as usize] = j as u32;
        }
    }
}

fn bucket_heads(sizes: &[u32]) -> Vec<u32> {
    let mut heads = Vec::with_capacity(sizes.len());
    let mut sum = 0;
    for &s in sizes {
        heads.push(sum);
        sum += s;
    }
    heads
}

fn bucket_tails(sizes: &[u32]) -> Vec<u32> {
    let mut tails = Vec::with_capacity(sizes.len());
    let mut sum = 0;
    for &s in sizes {
        sum += s;
        tails.push(sum);
    }
    tails
}

/// Two LMS substrings are equal iff they match symbol-for-symbol and
/// type-for-type up to and including their closing LMS position.
fn lms_substrings_equal(text: &[u32], s_type: &[bool], a: usize, b: usize) -> bool {
    let n = text.len();
    if a == b {
        return true;
    }
    // The sentinel's LMS substring is just the sentinel.
    if a == n - 1 || b == n - 1 {
        return false;
    }
    let is_lms = |i: usize| i > 0 && s_type[i] && !s_type[i - 1];
    let mut i = 0;
    loop {
        let ai = a + i;
        let bi = b + i;
        if ai >= n || bi >= n {
            return false;
        }
        if text[ai] != text[bi] || s_type[ai] != s_type[bi] {
            return false;
        }
        if i > 0 && (is_lms(ai) || is_lms(bi)) {
            return is_lms(ai) && is_lms(bi);
        }
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_suffix_array;
    use crate::text::Text;
    use proptest::prelude::*;

    fn sa_of(bytes: &[u8]) -> Vec<u32> {
        build_suffix_array(&Text::encode(bytes)).positions().to_vec()
    }

    #[test]
    fn tiny_fixed_cases() {
        // "aa$": $ < a$ < aa$
        assert_eq!(sa_of(b"aa"), vec![2, 1, 0]);
        // "ab$": $ < ab$ < b$
        assert_eq!(sa_of(b"ab"), vec![2, 0, 1]);
        // sentinel only
        assert_eq!(sa_of(b""), vec![0]);
    }

    #[test]
    fn banana_matches_naive_oracle() {
        let t = Text::encode(b"banana");
        let expect = naive_suffix_array(t.symbols());
        assert_eq!(build_suffix_array(&t).positions(), &expect[..]);
        // Known answer, 0-based: $ a$ ana$ anana$ banana$ na$ nana$
        assert_eq!(expect, vec![6, 5, 3, 1, 0, 4, 2]);
    }

    #[test]
    fn adversarial_shapes_match_naive() {
        let cases: Vec<Vec<u8>> = vec![
            vec![b'a'; 257],
            b"abababababababab".to_vec(),
            b"mississippi".to_vec(),
            b"aacaacaab".to_vec(),
            (0..=255u8).collect(),
            (0..=255u8).rev().collect(),
        ];
        for bytes in cases {
            let t = Text::encode(&bytes);
            assert_eq!(
                build_suffix_array(&t).positions(),
                &naive_suffix_array(t.symbols())[..],
                "input {:?}",
                &bytes[..bytes.len().min(16)]
            );
        }
    }

    proptest! {
        #[test]
        fn matches_naive_on_random_input(bytes in proptest::collection::vec(any::<u8>(), 0..300)) {
            let t = Text::encode(&bytes);
            prop_assert_eq!(build_suffix_array(&t).positions(), &naive_suffix_array(t.symbols())[..]);
        }

        #[test]
        fn matches_naive_on_small_alphabet(bytes in proptest::collection::vec(0u8..3, 0..400)) {
            let t = Text::encode(&bytes);
            prop_assert_eq!(build_suffix_array(&t).positions(), &naive_suffix_array(t.symbols())[..]);
        }
    }
}
