use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

/// One step of a gluing sequence: `cell` is attached to the already placed
/// `parent` across their shared edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingStep {
    pub cell: usize,
    pub parent: Option<usize>,
}

/// Order in which cells are added so that each shares an edge with an
/// earlier one.
///
/// A BFS spanning tree is grown from the lowest-degree cell (ties to the
/// lowest index). The first cell is the lowest-index leaf of that tree and
/// the second is its neighbour; the remaining cells follow a depth-first
/// walk from the second with children in index order. Cell indices are
/// expected to be in lexicographic cell order.
pub fn gluing_sequence(adj: &[Vec<usize>]) -> Vec<GluingStep> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![GluingStep { cell: 0, parent: None }];
    }
    let root = (0..n).min_by_key(|&i| (adj[i].len(), i)).expect("nonempty");
    let mut tree: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let mut nbrs = adj[u].clone();
        nbrs.sort();
        for v in nbrs {
            if !seen[v] {
                seen[v] = true;
                tree[u].push(v);
                tree[v].push(u);
                queue.push_back(v);
            }
        }
    }
    assert!(seen.iter().all(|&s| s), "gluing sequence needs a connected form");
    let first = (0..n).find(|&i| tree[i].len() == 1).expect("a tree has leaves");
    let second = tree[first][0];
    let mut out = vec![
        GluingStep { cell: first, parent: None },
        GluingStep { cell: second, parent: Some(first) },
    ];
    let mut placed = vec![false; n];
    placed[first] = true;
    placed[second] = true;
    let mut stack = vec![second];
    // Iterative preorder DFS with children visited in index order.
    let mut cursor = vec![0usize; n];
    for t in tree.iter_mut() {
        t.sort();
    }
    while let Some(&u) = stack.last() {
        if cursor[u] < tree[u].len() {
            let v = tree[u][cursor[u]];
            cursor[u] += 1;
            if !placed[v] {
                placed[v] = true;
                out.push(GluingStep { cell: v, parent: Some(u) });
                stack.push(v);
            }
        } else {
            stack.pop();
        }
    }
    out
}
