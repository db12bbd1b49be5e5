//! Constant-time level ancestor queries after linear preprocessing.
//!
//! The index combines three classic ingredients so the space stays
//! linear:
//!
//! * long-path (ladder) decomposition, each ladder doubled upward;
//! * micro trees: maximal hanging subtrees of fewer than 64 nodes,
//!   answered word-parallel with per-node ancestor bitmasks;
//! * power-of-two jump pointers stored only at the leaves of the macro
//!   (subtree size >= 64) part, reached via a per-node leaf pointer.
//!
//! A query at depth `d` from `v` resolves the micro part with one mask
//! intersection, or jumps from a macro leaf by the highest power of two
//! not exceeding the distance and finishes inside a single ladder.
//!
//! A plain binary-lifting table ([`BinaryLiftLevelAncestor`]) backs the
//! same query contract in `O(n log n)` space as a cross-check.

use std::fmt;

use crate::tree::{ChildLists, NodeId, RootedTree, NO_NODE};

/// Micro trees must fit an ancestor set in one machine word.
const MICRO_LIMIT: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelAncestorError {
    /// Requested depth exceeds the node's own edge depth.
    DepthOutOfRange { node: NodeId, depth: u32, max: u32 },
    /// `child_toward` was called with a node that is not a proper
    /// ancestor of the target.
    NotAncestor { node: NodeId, descendant: NodeId },
}

impl fmt::Display for LevelAncestorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelAncestorError::DepthOutOfRange { node, depth, max } => write!(
                f,
                "depth {} out of range for node {} (edge depth {})",
                depth, node, max
            ),
            LevelAncestorError::NotAncestor { node, descendant } => {
                write!(f, "node {} is not a proper ancestor of {}", node, descendant)
            }
        }
    }
}

impl std::error::Error for LevelAncestorError {}

#[derive(Debug, Clone, Copy)]
struct MicroTreeRec {
    root_depth: u32,
    /// Parent of the micro root; `NO_NODE` when the micro root is the
    /// global root.
    attach: u32,
    members_off: u32,
    depth_off: u32,
}

#[derive(Debug, Clone)]
pub struct LevelAncestorIndex {
    depth: Vec<u32>,

    // ladders
    ladder_of: Vec<u32>,
    ladder_nodes: Vec<u32>,
    ladder_off: Vec<u32>,
    ladder_bottom_depth: Vec<u32>,

    // micro trees
    micro_tree: Vec<u32>,
    anc_mask: Vec<u64>,
    micro_recs: Vec<MicroTreeRec>,
    micro_members: Vec<u32>,
    micro_depth_masks: Vec<u64>,

    // macro jump pointers
    macro_leaf: Vec<u32>,
    macro_leaf_node: Vec<u32>,
    jump_off: Vec<u32>,
    jump: Vec<u32>,
}

impl LevelAncestorIndex {
    pub fn new<T: RootedTree + ?Sized>(tree: &T) -> LevelAncestorIndex {
        let n = tree.node_count();
        assert!(n > 0);
        let parent: Vec<u32> = (0..n as u32)
            .map(|v| tree.parent(v).unwrap_or(NO_NODE))
            .collect();
        let depth: Vec<u32> = (0..n as u32).map(|v| tree.edge_depth(v)).collect();
        let children = ChildLists::build(tree);

        // Breadth-first order: parents precede children.
        let mut bfs = Vec::with_capacity(n);
        bfs.push(0u32);
        let mut head = 0;
        while head < bfs.len() {
            let v = bfs[head];
            head += 1;
            bfs.extend_from_slice(children.children(v));
        }

        // Heights and the long-path child choice.
        let mut height = vec![0u32; n];
        let mut path_child = vec![NO_NODE; n];
        for &v in bfs.iter().rev() {
            for &c in children.children(v) {
                if path_child[v as usize] == NO_NODE || height[c as usize] + 1 > height[v as usize]
                {
                    height[v as usize] = height[c as usize] + 1;
                    path_child[v as usize] = c;
                }
            }
        }

        // Ladders: every long path, extended upward by its own length.
        let mut ladder_of = vec![NO_NODE; n];
        let mut ladder_nodes = Vec::with_capacity(2 * n);
        let mut ladder_off = Vec::new();
        let mut ladder_bottom_depth = Vec::new();
        for &head_node in &bfs {
            let is_head = parent[head_node as usize] == NO_NODE
                || path_child[parent[head_node as usize] as usize] != head_node;
            if !is_head {
                continue;
            }
            // Collect the path, then store bottom-first.
            let mut path = Vec::new();
            let mut v = head_node;
            loop {
                path.push(v);
                if path_child[v as usize] == NO_NODE {
                    break;
                }
                v = path_child[v as usize];
            }
            let lid = ladder_off.len() as u32;
            let off = ladder_nodes.len() as u32;
            let bottom = *path.last().unwrap();
            ladder_off.push(off);
            ladder_bottom_depth.push(depth[bottom as usize]);
            for &p in path.iter().rev() {
                ladder_of[p as usize] = lid;
                ladder_nodes.push(p);
            }
            // Double upward, clipped at the root.
            let mut up = parent[head_node as usize];
            let mut remaining = path.len();
            while up != NO_NODE && remaining > 0 {
                ladder_nodes.push(up);
                up = parent[up as usize];
                remaining -= 1;
            }
        }
        ladder_off.push(ladder_nodes.len() as u32);

        // Macro/micro split on subtree size.
        let mut subtree = vec![1u32; n];
        for &v in bfs.iter().rev() {
            if parent[v as usize] != NO_NODE {
                subtree[parent[v as usize] as usize] += subtree[v as usize];
            }
        }
        let is_macro = |v: u32| subtree[v as usize] >= MICRO_LIMIT;

        let mut micro_tree = vec![NO_NODE; n];
        let mut anc_mask = vec![0u64; n];
        let mut micro_recs = Vec::new();
        let mut micro_members = Vec::new();
        let mut micro_depth_masks = Vec::new();
        let mut dfs = Vec::new();
        for &r in &bfs {
            let p = parent[r as usize];
            if is_macro(r) || (p != NO_NODE && !is_macro(p)) {
                continue;
            }
            // r is a micro root: whole subtree is one micro tree.
            let tid = micro_recs.len() as u32;
            let members_off = micro_members.len() as u32;
            let depth_off = micro_depth_masks.len() as u32;
            let root_depth = depth[r as usize];
            micro_recs.push(MicroTreeRec {
                root_depth,
                attach: p,
                members_off,
                depth_off,
            });
            debug_assert!(subtree[r as usize] < MICRO_LIMIT);
            dfs.clear();
            dfs.push(r);
            let mut local = 0u64;
            while let Some(v) = dfs.pop() {
                let idx = local;
                local += 1;
                micro_tree[v as usize] = tid;
                let pmask = if v == r {
                    0
                } else {
                    anc_mask[parent[v as usize] as usize]
                };
                anc_mask[v as usize] = pmask | (1u64 << idx);
                micro_members.push(v);
                let delta = (depth[v as usize] - root_depth) as usize;
                if depth_off as usize + delta >= micro_depth_masks.len() {
                    micro_depth_masks.resize(depth_off as usize + delta + 1, 0);
                }
                micro_depth_masks[depth_off as usize + delta] |= 1u64 << idx;
                // parents must be visited before children and get lower
                // local indices; a plain stack preserves that for any
                // push order of children
                for &c in children.children(v) {
                    dfs.push(c);
                }
            }
        }

        // Macro leaves and per-node leaf pointers.
        let mut macro_leaf = vec![NO_NODE; n];
        let mut macro_leaf_node = Vec::new();
        for &v in bfs.iter().rev() {
            if !is_macro(v) {
                continue;
            }
            let mut best = NO_NODE;
            for &c in children.children(v) {
                if is_macro(c) {
                    best = macro_leaf[c as usize];
                    break;
                }
            }
            if best == NO_NODE {
                best = macro_leaf_node.len() as u32;
                macro_leaf_node.push(v);
            }
            macro_leaf[v as usize] = best;
        }

        // Jump tables at macro leaves, read off the DFS ancestor stack.
        let mut jump_off = vec![0u32; macro_leaf_node.len() + 1];
        for (i, &l) in macro_leaf_node.iter().enumerate() {
            let d = depth[l as usize];
            let entries = if d == 0 { 0 } else { 32 - d.leading_zeros() };
            jump_off[i + 1] = jump_off[i] + entries;
        }
        let mut jump = vec![NO_NODE; *jump_off.last().unwrap() as usize];
        if !macro_leaf_node.is_empty() {
            let mut anc_path: Vec<u32> = Vec::new();
            let mut stack = vec![0u32];
            while let Some(v) = stack.pop() {
                anc_path.truncate(depth[v as usize] as usize);
                anc_path.push(v);
                let mut leafish = true;
                for &c in children.children(v) {
                    if is_macro(c) {
                        stack.push(c);
                        leafish = false;
                    }
                }
                if leafish {
                    let li = macro_leaf[v as usize];
                    debug_assert_eq!(macro_leaf_node[li as usize], v);
                    let d = depth[v as usize];
                    let base = jump_off[li as usize];
                    let mut k = 0;
                    while (1u32 << k) <= d {
                        jump[(base + k) as usize] = anc_path[(d - (1 << k)) as usize];
                        k += 1;
                    }
                }
            }
        }

        LevelAncestorIndex {
            depth,
            ladder_of,
            ladder_nodes,
            ladder_off,
            ladder_bottom_depth,
            micro_tree,
            anc_mask,
            micro_recs,
            micro_members,
            micro_depth_masks,
            macro_leaf,
            macro_leaf_node,
            jump_off,
            jump,
        }
    }

    pub fn node_count(&self) -> usize {
        self.depth.len()
    }

    pub fn edge_depth(&self, v: NodeId) -> u32 {
        self.depth[v as usize]
    }

    /// The ancestor-or-self of `v` with edge depth `d`.
    pub fn level_ancestor(&self, v: NodeId, d: u32) -> Result<NodeId, LevelAncestorError> {
        let dv = self.depth[v as usize];
        if d > dv {
            return Err(LevelAncestorError::DepthOutOfRange {
                node: v,
                depth: d,
                max: dv,
            });
        }
        if d == dv {
            return Ok(v);
        }
        Ok(self.resolve(v, d))
    }

    fn resolve(&self, v: NodeId, d: u32) -> NodeId {
        let mut v = v;
        let tid = self.micro_tree[v as usize];
        if tid != NO_NODE {
            let rec = self.micro_recs[tid as usize];
            if d >= rec.root_depth {
                let delta = (d - rec.root_depth) as usize;
                let hit = self.anc_mask[v as usize]
                    & self.micro_depth_masks[rec.depth_off as usize + delta];
                debug_assert_eq!(hit.count_ones(), 1);
                return self.micro_members[rec.members_off as usize + hit.trailing_zeros() as usize];
            }
            // Continue from the macro node the micro tree hangs off.
            v = rec.attach;
            debug_assert_ne!(v, NO_NODE);
            if d == self.depth[v as usize] {
                return v;
            }
        }

        // Macro: jump from a known macro leaf below, finish in a ladder.
        let li = self.macro_leaf[v as usize];
        let leaf = self.macro_leaf_node[li as usize];
        let delta = self.depth[leaf as usize] - d;
        debug_assert!(delta >= 1);
        let k = 31 - delta.leading_zeros();
        let u = self.jump[(self.jump_off[li as usize] + k) as usize];
        let r = self.depth[u as usize] - d;
        if r == 0 {
            return u;
        }
        // The landing node has height >= 2^k > r, so its ladder covers
        // the rest (or reaches the root).
        let lid = self.ladder_of[u as usize];
        let pos = self.ladder_bottom_depth[lid as usize] - self.depth[u as usize];
        let idx = self.ladder_off[lid as usize] + pos + r;
        debug_assert!(idx < self.ladder_off[lid as usize + 1]);
        self.ladder_nodes[idx as usize]
    }

    /// The child of `u` on the path from `u` down to its proper
    /// descendant `z`.
    pub fn child_toward(&self, u: NodeId, z: NodeId) -> Result<NodeId, LevelAncestorError> {
        let du = self.depth[u as usize];
        if du >= self.depth[z as usize] {
            return Err(LevelAncestorError::NotAncestor {
                node: u,
                descendant: z,
            });
        }
        debug_assert_eq!(
            self.resolve(z, du),
            u,
            "child_toward: {} is not an ancestor of {}",
            u,
            z
        );
        self.level_ancestor(z, du + 1)
    }

    /// Retained index size in machine words, for the linear-space
    /// accounting test.
    pub fn memory_words(&self) -> usize {
        self.depth.len()
            + self.ladder_of.len()
            + self.ladder_nodes.len()
            + self.ladder_off.len()
            + self.ladder_bottom_depth.len()
            + self.micro_tree.len()
            + 2 * self.anc_mask.len()
            + 4 * self.micro_recs.len()
            + self.micro_members.len()
            + 2 * self.micro_depth_masks.len()
            + self.macro_leaf.len()
            + self.macro_leaf_node.len()
            + self.jump_off.len()
            + self.jump.len()
    }
}

/// Binary lifting: `O(n log n)` space, `O(log n)` query. Same contract,
/// used to cross-check the constant-time index.
#[derive(Debug, Clone)]
pub struct BinaryLiftLevelAncestor {
    depth: Vec<u32>,
    up: Vec<Vec<u32>>,
}

impl BinaryLiftLevelAncestor {
    pub fn new<T: RootedTree + ?Sized>(tree: &T) -> BinaryLiftLevelAncestor {
        let n = tree.node_count();
        let depth: Vec<u32> = (0..n as u32).map(|v| tree.edge_depth(v)).collect();
        let max_depth = depth.iter().copied().max().unwrap_or(0);
        let levels = if max_depth == 0 {
            1
        } else {
            (32 - max_depth.leading_zeros()) as usize
        };
        let parents: Vec<u32> = (0..n as u32)
            .map(|v| tree.parent(v).unwrap_or(v))
            .collect();
        let mut up = vec![parents];
        for k in 1..levels {
            let prev = &up[k - 1];
            let next: Vec<u32> = (0..n).map(|v| prev[prev[v] as usize]).collect();
            up.push(next);
        }
        BinaryLiftLevelAncestor { depth, up }
    }

    pub fn level_ancestor(&self, v: NodeId, d: u32) -> Result<NodeId, LevelAncestorError> {
        let dv = self.depth[v as usize];
        if d > dv {
            return Err(LevelAncestorError::DepthOutOfRange {
                node: v,
                depth: d,
                max: dv,
            });
        }
        let mut v = v;
        let mut delta = dv - d;
        let mut k = 0;
        while delta > 0 {
            if delta & 1 == 1 {
                v = self.up[k][v as usize];
            }
            delta >>= 1;
            k += 1;
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::walk_up;
    use crate::tree::SimpleTree;
    use proptest::prelude::*;

    fn exhaustive_check(t: &SimpleTree) {
        let idx = LevelAncestorIndex::new(t);
        let bl = BinaryLiftLevelAncestor::new(t);
        for v in 0..t.node_count() as u32 {
            let dv = t.edge_depth(v);
            for d in 0..=dv {
                let want = walk_up(t.parent_slice(), v, dv - d);
                assert_eq!(idx.level_ancestor(v, d), Ok(want), "v={} d={}", v, d);
                assert_eq!(bl.level_ancestor(v, d), Ok(want));
            }
            assert!(idx.level_ancestor(v, dv + 1).is_err());
        }
    }

    #[test]
    fn single_node() {
        let t = SimpleTree::from_parents(vec![0]);
        let idx = LevelAncestorIndex::new(&t);
        assert_eq!(idx.level_ancestor(0, 0), Ok(0));
        assert!(idx.level_ancestor(0, 1).is_err());
    }

    #[test]
    fn path_of_five() {
        let t = SimpleTree::from_parents(vec![0, 0, 1, 2, 3]);
        let idx = LevelAncestorIndex::new(&t);
        // third node from the root on the path to the deepest
        assert_eq!(idx.level_ancestor(4, 2), Ok(2));
        assert_eq!(idx.level_ancestor(4, 0), Ok(0));
        assert_eq!(idx.level_ancestor(4, 4), Ok(4));
        exhaustive_check(&t);
    }

    #[test]
    fn named_shapes() {
        // long path (exceeds the micro limit)
        let path: Vec<u32> = (0..300).map(|i| i.saturating_sub(1) as u32).collect();
        exhaustive_check(&SimpleTree::from_parents(path));
        // star
        let star: Vec<u32> = vec![0; 300];
        exhaustive_check(&SimpleTree::from_parents(star));
        // caterpillar: spine 0..k, one leg per spine node
        let k = 150;
        let mut cat: Vec<u32> = (0..k).map(|i| i.saturating_sub(1) as u32).collect();
        for s in 0..k as u32 {
            cat.push(s);
        }
        exhaustive_check(&SimpleTree::from_parents(cat));
        // binary-ish tree
        let bin: Vec<u32> = (0..400).map(|i: u32| i.saturating_sub(1) / 2).collect();
        exhaustive_check(&SimpleTree::from_parents(bin));
    }

    #[test]
    fn child_toward_cases() {
        // 0 - 1 - 2 - 3 plus 0 - 4
        let t = SimpleTree::from_parents(vec![0, 0, 1, 2, 0]);
        let idx = LevelAncestorIndex::new(&t);
        assert_eq!(idx.child_toward(0, 3), Ok(1));
        assert_eq!(idx.child_toward(2, 3), Ok(3));
        assert!(idx.child_toward(3, 3).is_err());
        assert!(idx.child_toward(3, 0).is_err());
    }

    #[test]
    fn memory_stays_linear() {
        for &n in &[1usize, 10, 100, 1000, 10000] {
            // worst-ish shapes: path, star, caterpillar
            let path: Vec<u32> = (0..n).map(|i| i.saturating_sub(1) as u32).collect();
            let star: Vec<u32> = vec![0; n];
            for parents in [path, star] {
                let t = SimpleTree::from_parents(parents);
                let idx = LevelAncestorIndex::new(&t);
                assert!(
                    idx.memory_words() <= 32 * n + 64,
                    "n={} words={}",
                    n,
                    idx.memory_words()
                );
            }
        }
    }

    fn random_tree(n: usize, spread: u32, seed: u64) -> SimpleTree {
        // deterministic LCG; parents biased toward recent nodes for depth
        let mut state = seed | 1;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as u32
        };
        let parents: Vec<u32> = (0..n)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    let back = (next() % spread.min(i as u32)).min(i as u32 - 1);
                    i as u32 - 1 - back
                }
            })
            .collect();
        SimpleTree::from_parents(parents)
    }

    #[test]
    fn random_trees_exhaustive() {
        for seed in 0..8u64 {
            let t = random_tree(500, 1 + (seed as u32 % 7) * 30, seed + 1);
            exhaustive_check(&t);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn matches_walk_up(parents_raw in proptest::collection::vec(0u32..1000, 1..400)) {
            let parents: Vec<u32> = parents_raw
                .iter()
                .enumerate()
                .map(|(i, &r)| if i == 0 { 0 } else { r % i as u32 })
                .collect();
            let t = SimpleTree::from_parents(parents);
            let idx = LevelAncestorIndex::new(&t);
            for v in 0..t.node_count() as u32 {
                let dv = t.edge_depth(v);
                for d in (0..=dv).step_by(3) {
                    prop_assert_eq!(idx.level_ancestor(v, d), Ok(walk_up(t.parent_slice(), v, dv - d)));
                }
            }
        }
    }
}
