//! Exhaustive enumeration of rooted and free (unrooted) trees, one
//! representative per isomorphism class.
//!
//! Rooted trees come from the canonical level-sequence successor rule
//! (Beyer–Hedetniemi): each rooted tree is generated once, in reverse
//! lexicographic order of its canonical level sequence, starting from the
//! path. Free trees are filtered from that stream by a canonical code taken
//! over the tree's centroid rootings.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::tree::{root_at, RootedTree, Tree};

/// Largest `n` accepted by the enumerators.
pub const MAX_ENUMERATION_N: usize = 14;

fn check_cap(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationCap {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    Ok(())
}

/// Iterator over all rooted unordered trees with `n` vertices.
#[derive(Debug, Clone)]
pub struct RootedTrees {
    levels: Option<Vec<usize>>,
}

impl Iterator for RootedTrees {
    type Item = RootedTree;

    fn next(&mut self) -> Option<RootedTree> {
        let current = self.levels.take()?;
        self.levels = successor(&current);
        Some(tree_from_levels(&current))
    }
}

/// Streams every rooted tree on `n` vertices exactly once (up to
/// isomorphism). Each tree is rooted at vertex 0, vertices numbered in
/// preorder.
pub fn enumerate_rooted_trees(n: usize) -> Result<RootedTrees> {
    check_cap(n)?;
    Ok(RootedTrees {
        levels: Some((0..n).collect()),
    })
}

/// Next canonical level sequence, or `None` after the star.
fn successor(levels: &[usize]) -> Option<Vec<usize>> {
    // Root sits at level 0, so "level > 1" marks a vertex below depth one.
    let p = levels.iter().rposition(|&l| l > 1)?;
    let q = levels[..p].iter().rposition(|&l| l == levels[p] - 1)?;
    let shift = p - q;
    let mut next = levels.to_vec();
    for i in p..levels.len() {
        next[i] = next[i - shift];
    }
    Some(next)
}

/// Builds the rooted tree encoded by a preorder level sequence.
pub fn tree_from_levels(levels: &[usize]) -> RootedTree {
    let n = levels.len();
    let mut last_at_level: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (i, &l) in levels.iter().enumerate() {
        if l > 0 {
            edges.push((last_at_level[l - 1], i));
        }
        last_at_level.truncate(l);
        last_at_level.push(i);
    }
    let tree = Tree::from_edges(n, &edges).expect("level sequence encodes a tree");
    root_at(&tree, 0)
}

/// Iterator over free trees, filtered from the rooted stream.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    inner: RootedTrees,
    seen: HashSet<String>,
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        for rt in self.inner.by_ref() {
            let tree = rt.tree().clone();
            if self.seen.insert(free_canonical_code(&tree)) {
                return Some(tree);
            }
        }
        None
    }
}

/// Streams every free tree on `n` vertices exactly once (up to isomorphism).
pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees> {
    Ok(FreeTrees {
        inner: enumerate_rooted_trees(n)?,
        seen: HashSet::new(),
    })
}

/// Parenthesis code of the subtree at `v`, children sorted; equal codes mean
/// isomorphic rooted trees.
pub fn rooted_canonical_code(rt: &RootedTree) -> String {
    fn code(rt: &RootedTree, v: usize) -> String {
        let mut parts: Vec<String> = rt.children(v).iter().map(|&c| code(rt, c)).collect();
        parts.sort_unstable();
        let mut s = String::with_capacity(2 + parts.iter().map(String::len).sum::<usize>());
        s.push('(');
        for p in parts {
            s.push_str(&p);
        }
        s.push(')');
        s
    }
    code(rt, rt.root())
}

/// Vertices whose removal leaves components of size at most `n/2`.
pub fn centroids(tree: &Tree) -> Vec<usize> {
    let n = tree.len();
    let rt = root_at(tree, 0);
    (0..n)
        .filter(|&v| {
            let up = n - rt.subtree_size(v);
            let down = rt
                .children(v)
                .iter()
                .map(|&c| rt.subtree_size(c))
                .max()
                .unwrap_or(0);
            2 * up.max(down) <= n
        })
        .collect()
}

/// Isomorphism-invariant code of a free tree: the smallest rooted code over
/// its (one or two) centroids.
pub fn free_canonical_code(tree: &Tree) -> String {
    centroids(tree)
        .into_iter()
        .map(|c| rooted_canonical_code(&root_at(tree, c)))
        .min()
        .expect("every tree has a centroid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_counts() {
        let counts: Vec<usize> = (1..=10)
            .map(|n| enumerate_rooted_trees(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286, 719]);
        assert_eq!(counts.iter().sum::<usize>(), 1205);
    }

    #[test]
    fn free_counts() {
        let counts: Vec<usize> = (1..=10)
            .map(|n| enumerate_free_trees(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert_eq!(counts.iter().sum::<usize>(), 201);
    }

    #[test]
    fn first_is_path_last_is_star() {
        let all: Vec<RootedTree> = enumerate_rooted_trees(5).unwrap().collect();
        assert_eq!(all[0].subtree_size(0), 5);
        assert_eq!(all[0].children(0).len(), 1);
        assert_eq!(all.last().unwrap().children(0).len(), 4);
    }

    #[test]
    fn cap_enforced() {
        assert!(enumerate_rooted_trees(0).is_err());
        assert!(enumerate_rooted_trees(MAX_ENUMERATION_N + 1).is_err());
        assert_eq!(enumerate_rooted_trees(1).unwrap().count(), 1);
        assert_eq!(enumerate_free_trees(1).unwrap().count(), 1);
    }

    #[test]
    fn rooted_stream_has_distinct_classes() {
        let codes: HashSet<String> = enumerate_rooted_trees(8)
            .unwrap()
            .map(|rt| rooted_canonical_code(&rt))
            .collect();
        assert_eq!(codes.len(), 115);
    }
}
