//! Suffix trees built from a suffix array and LCP array with one
//! left-to-right stack pass, in linear time.
//!
//! Two modes share the construction core:
//!
//! * single text: leaves correspond one-to-one to suffixes;
//! * generalized: the input is a concatenation `w1$ w2$ .. wk$` and
//!   leaves correspond to the *distinct* capped suffixes (each suffix
//!   read only up to its first sentinel). Duplicates are merged while
//!   scanning because equal capped suffixes are adjacent in the raw
//!   suffix order.
//!
//! Edge labels are never copied: each node keeps one representative text
//! position, and the label of the edge into `v` is the position pair
//! `(repr + depth(parent), repr + depth(v))`.

use crate::lcp::LcpArray;
use crate::suffix_array::{sais_u32, SuffixArray};
use crate::text::{Text, SENTINEL};
use crate::tree::{NodeId, RootedTree, NO_NODE};

#[derive(Debug, Clone)]
pub struct SuffixTree {
    parent: Vec<u32>,
    first_child: Vec<u32>,
    next_sibling: Vec<u32>,
    str_depth: Vec<u32>,
    edge_depth: Vec<u32>,
    repr: Vec<u32>,
    leaf_rank: Vec<u32>,
    /// leaf rank -> node
    leaf_node: Vec<u32>,
    /// text position -> leaf of its (capped) suffix class
    leaf_of_pos: Vec<u32>,
}

impl SuffixTree {
    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_node.len()
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        let p = self.parent[v as usize];
        if p == NO_NODE {
            None
        } else {
            Some(p)
        }
    }

    /// Character depth of `str(v)`.
    pub fn str_depth(&self, v: NodeId) -> u32 {
        self.str_depth[v as usize]
    }

    /// Number of edges between the root and `v`.
    pub fn edge_depth(&self, v: NodeId) -> u32 {
        self.edge_depth[v as usize]
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.leaf_rank[v as usize] != NO_NODE
    }

    /// Rank of the leaf in suffix order, for leaves.
    pub fn leaf_rank(&self, v: NodeId) -> Option<u32> {
        let r = self.leaf_rank[v as usize];
        if r == NO_NODE {
            None
        } else {
            Some(r)
        }
    }

    pub fn leaf_node(&self, rank: u32) -> NodeId {
        self.leaf_node[rank as usize]
    }

    /// Leaf whose (capped) suffix starts at text position `pos`. In
    /// single-text mode this is the bijection between positions and
    /// leaves; in generalized mode duplicate suffixes share a leaf.
    pub fn leaf_of_pos(&self, pos: usize) -> NodeId {
        self.leaf_of_pos[pos]
    }

    /// A text position whose suffix path passes through `v`, i.e.
    /// `text[repr .. repr + str_depth(v)]` spells `str(v)`.
    pub fn repr_pos(&self, v: NodeId) -> usize {
        self.repr[v as usize] as usize
    }

    /// Label of the edge into `v` as a half-open position pair.
    pub fn edge_label(&self, v: NodeId) -> (usize, usize) {
        let p = self.parent[v as usize];
        debug_assert_ne!(p, NO_NODE, "root has no incoming edge");
        let r = self.repr[v as usize] as usize;
        (
            r + self.str_depth[p as usize] as usize,
            r + self.str_depth[v as usize] as usize,
        )
    }

    pub fn children(&self, v: NodeId) -> Children<'_> {
        Children {
            tree: self,
            cur: self.first_child[v as usize],
        }
    }

    pub fn child_count(&self, v: NodeId) -> usize {
        self.children(v).count()
    }
}

pub struct Children<'a> {
    tree: &'a SuffixTree,
    cur: u32,
}

impl Iterator for Children<'_> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        if self.cur == NO_NODE {
            None
        } else {
            let v = self.cur;
            self.cur = self.tree.next_sibling[v as usize];
            Some(v)
        }
    }
}

impl RootedTree for SuffixTree {
    fn node_count(&self) -> usize {
        self.parent.len()
    }

    fn parent(&self, v: NodeId) -> Option<NodeId> {
        SuffixTree::parent(self, v)
    }

    fn edge_depth(&self, v: NodeId) -> u32 {
        self.edge_depth[v as usize]
    }
}

/// Build the suffix tree of a single sentinel-terminated text.
pub fn build_suffix_tree(text: &Text, sa: &SuffixArray, lcp: &LcpArray) -> SuffixTree {
    debug_assert_eq!(sa.len(), text.len());
    Builder::new(text.len()).run(sa.positions(), lcp.values(), None)
}

/// A generalized suffix tree over the concatenation of several texts
/// sharing one sentinel symbol.
#[derive(Debug, Clone)]
pub struct GeneralizedSuffixTree {
    pub tree: SuffixTree,
    /// Concatenated symbols `w1$ w2$ .. wk$` with the shared sentinel.
    pub symbols: Vec<u32>,
    /// Start offset of each member string in `symbols`.
    pub starts: Vec<u32>,
}

impl GeneralizedSuffixTree {
    /// Map a concatenation position to (member index, offset within it).
    pub fn source_of(&self, pos: usize) -> (usize, usize) {
        let idx = self.starts.partition_point(|&s| s as usize <= pos) - 1;
        (idx, pos - self.starts[idx] as usize)
    }
}

/// Build the generalized suffix tree of a set of texts over one shared
/// alphabet. Shared suffixes are merged, so leaves are in bijection with
/// the distinct non-empty suffixes of the set.
pub fn build_generalized_suffix_tree(texts: &[Text]) -> GeneralizedSuffixTree {
    assert!(!texts.is_empty(), "need at least one text");
    debug_assert!(
        texts.windows(2).all(|w| w[0].alphabet() == w[1].alphabet()),
        "texts must share one alphabet"
    );
    let mut symbols = Vec::with_capacity(texts.iter().map(Text::len).sum());
    let mut starts = Vec::with_capacity(texts.len());
    for t in texts {
        starts.push(symbols.len() as u32);
        symbols.extend_from_slice(t.symbols());
    }
    let tree = generalized_tree_of_concat(&symbols, texts.len());
    GeneralizedSuffixTree {
        tree,
        symbols,
        starts,
    }
}

/// Core of the generalized build, shared with the common-suffix-trie
/// bridge: `symbols` is a concatenation of `k` sentinel-terminated
/// strings over the standard encoding.
pub(crate) fn generalized_tree_of_concat(symbols: &[u32], k: usize) -> SuffixTree {
    let n = symbols.len();
    debug_assert_eq!(symbols.iter().filter(|&&s| s == SENTINEL).count(), k);
    debug_assert_eq!(symbols[n - 1], SENTINEL);

    // Re-encode so every sentinel occurrence is distinct and the final
    // one is the unique minimum; real symbols keep their relative order.
    // Suffix comparisons then agree with capped-suffix comparisons up to
    // ties between equal capped suffixes, which the builder merges.
    let shift = k as u32 - 1;
    let mut transformed = Vec::with_capacity(n);
    let mut seen_sentinels = 0u32;
    for &s in symbols {
        if s == SENTINEL {
            seen_sentinels += 1;
            transformed.push(k as u32 - seen_sentinels + 1);
        } else {
            transformed.push(s + shift);
        }
    }

    // eff[p]: capped length of the suffix at p (through its sentinel).
    let mut eff = vec![0u32; n];
    for p in (0..n).rev() {
        eff[p] = if transformed[p] <= k as u32 {
            1
        } else {
            eff[p + 1] + 1
        };
    }

    let sa = sais_u32(&transformed);
    let lcp = crate::lcp::kasai(&transformed, &sa);
    Builder::new(n).run(&sa, &lcp, Some(&eff))
}

/// Stack-based SA/LCP to tree conversion.
struct Builder {
    n: usize,
    parent: Vec<u32>,
    first_child: Vec<u32>,
    next_sibling: Vec<u32>,
    last_child: Vec<u32>,
    str_depth: Vec<u32>,
    repr: Vec<u32>,
    leaf_rank: Vec<u32>,
    leaf_node: Vec<u32>,
    leaf_of_pos: Vec<u32>,
}

impl Builder {
    fn new(n: usize) -> Builder {
        let cap = 2 * n + 1;
        Builder {
            n,
            parent: Vec::with_capacity(cap),
            first_child: Vec::with_capacity(cap),
            next_sibling: Vec::with_capacity(cap),
            last_child: Vec::with_capacity(cap),
            str_depth: Vec::with_capacity(cap),
            repr: Vec::with_capacity(cap),
            leaf_rank: Vec::with_capacity(cap),
            leaf_node: Vec::new(),
            leaf_of_pos: vec![NO_NODE; n],
        }
    }

    fn new_node(&mut self, depth: u32, repr: u32) -> u32 {
        let id = self.parent.len() as u32;
        self.parent.push(NO_NODE);
        self.first_child.push(NO_NODE);
        self.next_sibling.push(NO_NODE);
        self.last_child.push(NO_NODE);
        self.str_depth.push(depth);
        self.repr.push(repr);
        self.leaf_rank.push(NO_NODE);
        id
    }

    fn attach(&mut self, child: u32, parent: u32) {
        self.parent[child as usize] = parent;
        let last = self.last_child[parent as usize];
        if last == NO_NODE {
            self.first_child[parent as usize] = child;
        } else {
            self.next_sibling[last as usize] = child;
        }
        self.last_child[parent as usize] = child;
    }

    /// `eff == None` builds the plain single-text tree; `Some` caps every
    /// suffix at its first sentinel and merges equal capped suffixes.
    fn run(mut self, sa: &[u32], lcp: &[u32], eff: Option<&[u32]>) -> SuffixTree {
        let n = self.n;
        let root = self.new_node(0, sa[0]);
        let mut stack: Vec<u32> = Vec::with_capacity(64);
        stack.push(root);

        let len_of = |pos: u32| -> u32 {
            match eff {
                Some(e) => e[pos as usize],
                None => (n as u32) - pos,
            }
        };

        // Raw-lcp running minimum back to the previous *kept* suffix.
        let mut prev_pos = sa[0];
        let mut prev_len = len_of(sa[0]);
        let mut chained = u32::MAX;

        // First leaf.
        let mut leaf = self.new_node(prev_len, sa[0]);
        self.leaf_rank[leaf as usize] = 0;
        self.leaf_node.push(leaf);
        self.leaf_of_pos[sa[0] as usize] = leaf;
        stack.push(leaf);

        for i in 1..n {
            let pos = sa[i];
            let cur_len = len_of(pos);
            let raw = chained.min(lcp[i - 1]);

            // Raw agreement never spans a sentinel, so raw is at most
            // min(prev_len, cur_len) - 1; equality on both means the two
            // capped suffixes are the same string.
            debug_assert!(raw < prev_len && raw < cur_len);
            if eff.is_some() && raw + 1 == prev_len && raw + 1 == cur_len {
                let shared = *self.leaf_node.last().unwrap();
                self.leaf_of_pos[pos as usize] = shared;
                chained = raw;
                continue;
            }
            let h = raw;
            chained = u32::MAX;
            prev_pos = pos;
            let _ = prev_pos;
            prev_len = cur_len;

            // Pop while the top is deeper than the split depth; attach
            // each popped node to the node that follows it, creating the
            // split node when the boundary falls mid-edge.
            while self.str_depth[*stack.last().unwrap() as usize] > h {
                let v = stack.pop().unwrap();
                let top = *stack.last().unwrap();
                if self.str_depth[top as usize] >= h {
                    self.attach(v, top);
                } else {
                    let w = self.new_node(h, self.repr[v as usize]);
                    self.attach(v, w);
                    stack.push(w);
                }
            }
            debug_assert_eq!(self.str_depth[*stack.last().unwrap() as usize], h);

            leaf = self.new_node(cur_len, pos);
            let rank = self.leaf_node.len() as u32;
            self.leaf_rank[leaf as usize] = rank;
            self.leaf_node.push(leaf);
            self.leaf_of_pos[pos as usize] = leaf;
            stack.push(leaf);
        }

        while stack.len() > 1 {
            let v = stack.pop().unwrap();
            self.attach(v, *stack.last().unwrap());
        }

        // Edge depths by preorder walk.
        let node_count = self.parent.len();
        let mut edge_depth = vec![0u32; node_count];
        let mut to_visit = vec![root];
        while let Some(v) = to_visit.pop() {
            let mut c = self.first_child[v as usize];
            while c != NO_NODE {
                edge_depth[c as usize] = edge_depth[v as usize] + 1;
                to_visit.push(c);
                c = self.next_sibling[c as usize];
            }
        }

        SuffixTree {
            parent: self.parent,
            first_child: self.first_child,
            next_sibling: self.next_sibling,
            str_depth: self.str_depth,
            edge_depth,
            repr: self.repr,
            leaf_rank: self.leaf_rank,
            leaf_node: self.leaf_node,
            leaf_of_pos: self.leaf_of_pos,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcp::build_lcp;
    use crate::suffix_array::build_suffix_array;
    use proptest::prelude::*;

    fn tree_of(bytes: &[u8]) -> (Text, SuffixTree) {
        let t = Text::encode(bytes);
        let sa = build_suffix_array(&t);
        let lcp = build_lcp(&t, &sa);
        let st = build_suffix_tree(&t, &sa, &lcp);
        (t, st)
    }

    /// Spell out the path label of a leaf by concatenating edge labels.
    fn spell(tree: &SuffixTree, symbols: &[u32], leaf: NodeId) -> Vec<u32> {
        let mut edges = Vec::new();
        let mut v = leaf;
        while let Some(p) = tree.parent(v) {
            edges.push(tree.edge_label(v));
            v = p;
        }
        edges.reverse();
        let mut out = Vec::new();
        for (a, b) in edges {
            out.extend_from_slice(&symbols[a..b]);
        }
        out
    }

    fn check_structure(tree: &SuffixTree, symbols: &[u32]) {
        for v in 0..tree.node_count() as u32 {
            let kids: Vec<u32> = tree.children(v).collect();
            if tree.is_leaf(v) {
                assert!(kids.is_empty());
            } else if v != tree.root() {
                assert!(kids.len() >= 2, "internal node {} has {} child", v, kids.len());
            }
            // Children start with pairwise distinct symbols, ascending.
            let firsts: Vec<u32> = kids
                .iter()
                .map(|&c| symbols[tree.edge_label(c).0])
                .collect();
            for w in firsts.windows(2) {
                assert!(w[0] < w[1], "children out of order: {:?}", firsts);
            }
            if let Some(p) = tree.parent(v) {
                assert!(tree.str_depth(p) < tree.str_depth(v));
                assert_eq!(tree.edge_depth(v), tree.edge_depth(p) + 1);
            }
        }
    }

    #[test]
    fn ab_has_three_leaf_children() {
        let (_, st) = tree_of(b"ab");
        assert_eq!(st.node_count(), 4);
        assert_eq!(st.leaf_count(), 3);
        assert_eq!(st.child_count(st.root()), 3);
    }

    #[test]
    fn banana_shape() {
        let (t, st) = tree_of(b"banana");
        assert_eq!(st.leaf_count(), 7);
        assert_eq!(st.node_count(), 11);
        check_structure(&st, t.symbols());
        // Internal string depths are 0 (root), 1 ("a"), 3 ("ana"), 2 ("na").
        let mut internal_depths: Vec<u32> = (0..st.node_count() as u32)
            .filter(|&v| !st.is_leaf(v))
            .map(|v| st.str_depth(v))
            .collect();
        internal_depths.sort();
        assert_eq!(internal_depths, vec![0, 1, 2, 3]);
    }

    #[test]
    fn leaves_spell_suffixes() {
        for bytes in [&b"banana"[..], b"abaabaaaabbaab", b"aaaa", b""] {
            let (t, st) = tree_of(bytes);
            let n = t.len();
            assert_eq!(st.leaf_count(), n);
            for pos in 0..n {
                let leaf = st.leaf_of_pos(pos);
                assert_eq!(
                    spell(&st, t.symbols(), leaf),
                    t.symbols()[pos..].to_vec(),
                    "suffix at {}",
                    pos
                );
            }
        }
    }

    #[test]
    fn generalized_single_string() {
        let texts = Text::encode_set(&[b"a"]);
        let g = build_generalized_suffix_tree(&texts);
        assert_eq!(g.tree.leaf_count(), 2); // "$", "a$"
    }

    #[test]
    fn generalized_shares_common_suffix() {
        let texts = Text::encode_set(&[b"ab", b"b"]);
        let g = build_generalized_suffix_tree(&texts);
        // distinct suffixes: $, b$, ab$
        assert_eq!(g.tree.leaf_count(), 3);
        // every concatenation position maps to a leaf spelling its capped suffix
        let mut eff = vec![0u32; g.symbols.len()];
        for p in (0..g.symbols.len()).rev() {
            eff[p] = if g.symbols[p] == SENTINEL { 1 } else { eff[p + 1] + 1 };
        }
        for p in 0..g.symbols.len() {
            let leaf = g.tree.leaf_of_pos(p);
            let want = g.symbols[p..p + eff[p] as usize].to_vec();
            assert_eq!(spell(&g.tree, &g.symbols, leaf), want);
        }
    }

    #[test]
    fn generalized_figure_set_has_twelve_leaves() {
        let texts = Text::encode_set(&[b"aaba", b"bbba", b"ababa", b"aabba", b"babba"]);
        let g = build_generalized_suffix_tree(&texts);
        assert_eq!(g.tree.leaf_count(), 12);
    }

    #[test]
    fn generalized_heavy_suffix_sharing() {
        // {a b^i | i <= 50}: suffixes shared massively across members.
        let strings: Vec<Vec<u8>> = (0..=50u8)
            .map(|i| {
                let mut s = vec![b'a'];
                s.extend(std::iter::repeat(b'b').take(i as usize));
                s
            })
            .collect();
        let refs: Vec<&[u8]> = strings.iter().map(|v| v.as_slice()).collect();
        let texts = Text::encode_set(&refs);
        let g = build_generalized_suffix_tree(&texts);
        // distinct suffixes: $, b^j$ (j=1..50), a b^j $ (j=0..50): 1 + 50 + 51
        assert_eq!(g.tree.leaf_count(), 102);
    }

    proptest! {
        #[test]
        fn structure_invariants_random(bytes in proptest::collection::vec(0u8..4, 0..200)) {
            let (t, st) = tree_of(&bytes);
            check_structure(&st, t.symbols());
            prop_assert_eq!(st.leaf_count(), t.len());
        }

        #[test]
        fn generalized_leaves_are_distinct_suffixes(
            strs in proptest::collection::vec(proptest::collection::vec(b'a'..b'c', 0..8), 1..6)
        ) {
            let refs: Vec<&[u8]> = strs.iter().map(|v| v.as_slice()).collect();
            let texts = Text::encode_set(&refs);
            let g = build_generalized_suffix_tree(&texts);
            let mut distinct = std::collections::HashSet::new();
            for s in &strs {
                let mut with_sent = s.clone();
                with_sent.push(0); // stand-in for the sentinel
                for i in 0..with_sent.len() {
                    distinct.insert(with_sent[i..].to_vec());
                }
            }
            prop_assert_eq!(g.tree.leaf_count(), distinct.len());
        }
    }
}
