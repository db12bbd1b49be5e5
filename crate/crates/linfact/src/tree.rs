//! Minimal rooted-tree abstraction shared by the level-ancestor and
//! marked-ancestor indexes and their tests.

/// Node handle; nodes are dense `0..node_count` with node 0 the root.
pub type NodeId = u32;

pub(crate) const NO_NODE: u32 = u32::MAX;

/// Read-only view of a static rooted tree.
pub trait RootedTree {
    fn node_count(&self) -> usize;
    /// Parent of `v`, `None` for the root.
    fn parent(&self, v: NodeId) -> Option<NodeId>;
    /// Number of edges on the root path of `v`.
    fn edge_depth(&self, v: NodeId) -> u32;
}

/// Child adjacency in a flat layout, derived from parent pointers with a
/// counting sort. Children appear in ascending node-id order.
pub(crate) struct ChildLists {
    start: Vec<u32>,
    child: Vec<u32>,
}

impl ChildLists {
    pub fn build<T: RootedTree + ?Sized>(tree: &T) -> ChildLists {
        let n = tree.node_count();
        let mut start = vec![0u32; n + 1];
        for v in 0..n as u32 {
            if let Some(p) = tree.parent(v) {
                start[p as usize + 1] += 1;
            }
        }
        for i in 0..n {
            start[i + 1] += start[i];
        }
        let mut cursor = start.clone();
        let mut child = vec![0u32; n.saturating_sub(1)];
        for v in 0..n as u32 {
            if let Some(p) = tree.parent(v) {
                child[cursor[p as usize] as usize] = v;
                cursor[p as usize] += 1;
            }
        }
        ChildLists { start, child }
    }

    pub fn children(&self, v: NodeId) -> &[u32] {
        &self.child[self.start[v as usize] as usize..self.start[v as usize + 1] as usize]
    }
}

/// Preorder entry/exit intervals from an iterative DFS; `tin[v]..=tout[v]`
/// spans exactly the subtree of `v`.
pub(crate) fn euler_intervals<T: RootedTree + ?Sized>(
    tree: &T,
    children: &ChildLists,
) -> (Vec<u32>, Vec<u32>) {
    let n = tree.node_count();
    let mut tin = vec![0u32; n];
    let mut tout = vec![0u32; n];
    let mut clock = 0u32;
    // (node, next-child cursor)
    let mut stack: Vec<(u32, u32)> = vec![(0, 0)];
    while let Some(&mut (v, ref mut cursor)) = stack.last_mut() {
        let kids = children.children(v);
        if *cursor == 0 {
            tin[v as usize] = clock;
            clock += 1;
        }
        if (*cursor as usize) < kids.len() {
            let c = kids[*cursor as usize];
            *cursor += 1;
            stack.push((c, 0));
        } else {
            tout[v as usize] = clock - 1;
            stack.pop();
        }
    }
    (tin, tout)
}

/// Plain parent-array tree for tests, oracles, and the cluster tree of
/// the accelerated marked-ancestor backend.
#[derive(Debug, Clone)]
pub struct SimpleTree {
    parent: Vec<u32>,
    depth: Vec<u32>,
}

impl SimpleTree {
    /// Build from parent pointers. `parent[0]` is ignored; every other
    /// entry must point to a lower-numbered node.
    pub fn from_parents(parent: Vec<u32>) -> SimpleTree {
        let n = parent.len();
        assert!(n > 0, "tree must have a root");
        let mut depth = vec![0u32; n];
        for v in 1..n {
            assert!(
                (parent[v] as usize) < v,
                "parent of {} must precede it",
                v
            );
            depth[v] = depth[parent[v] as usize] + 1;
        }
        SimpleTree { parent, depth }
    }

    pub fn parent_slice(&self) -> &[u32] {
        &self.parent
    }
}

impl RootedTree for SimpleTree {
    fn node_count(&self) -> usize {
        self.parent.len()
    }

    fn parent(&self, v: NodeId) -> Option<NodeId> {
        if v == 0 {
            None
        } else {
            Some(self.parent[v as usize])
        }
    }

    fn edge_depth(&self, v: NodeId) -> u32 {
        self.depth[v as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn child_lists_and_euler() {
        // 0 -> 1 -> 3, 0 -> 2, 1 -> 4
        let t = SimpleTree::from_parents(vec![0, 0, 0, 1, 1]);
        let kids = ChildLists::build(&t);
        assert_eq!(kids.children(0), &[1, 2]);
        assert_eq!(kids.children(1), &[3, 4]);
        assert_eq!(kids.children(3), &[] as &[u32]);
        let (tin, tout) = euler_intervals(&t, &kids);
        // subtree containment
        for v in 0..5u32 {
            let mut p = v;
            loop {
                assert!(tin[p as usize] <= tin[v as usize] && tin[v as usize] <= tout[p as usize]);
                match t.parent(p) {
                    Some(q) => p = q,
                    None => break,
                }
            }
        }
        assert_eq!(tin[0], 0);
        assert_eq!(tout[0], 4);
    }

    #[test]
    #[should_panic(expected = "parent of")]
    fn rejects_forward_parents() {
        SimpleTree::from_parents(vec![0, 2, 0]);
    }
}
