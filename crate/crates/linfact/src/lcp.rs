//! LCP array in linear time (Kasai's algorithm).

use crate::suffix_array::SuffixArray;
use crate::text::Text;

/// `lcp[i]` = length of the longest common prefix of the suffixes at
/// `sa[i]` and `sa[i+1]`; `n-1` entries for a text of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcpArray {
    lcp: Vec<u32>,
}

impl LcpArray {
    pub fn values(&self) -> &[u32] {
        &self.lcp
    }
}

/// Kasai's linear pass over the rank array.
pub fn build_lcp(text: &Text, sa: &SuffixArray) -> LcpArray {
    LcpArray {
        lcp: kasai(text.symbols(), sa.positions()),
    }
}

pub(crate) fn kasai(symbols: &[u32], sa: &[u32]) -> Vec<u32> {
    let n = symbols.len();
    debug_assert_eq!(sa.len(), n);
    let mut rank = vec![0u32; n];
    for (r, &p) in sa.iter().enumerate() {
        rank[p as usize] = r as u32;
    }
    let mut lcp = vec![0u32; n.saturating_sub(1)];
    let mut h = 0usize;
    for p in 0..n {
        let r = rank[p] as usize;
        if r + 1 < n {
            let q = sa[r + 1] as usize;
            while p + h < n && q + h < n && symbols[p + h] == symbols[q + h] {
                h += 1;
            }
            lcp[r] = h as u32;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}
