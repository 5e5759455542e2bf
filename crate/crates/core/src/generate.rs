//! Tree generators for figures, examples and test corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::tree::Tree;

fn from_parent_edges(n: usize, edges: Vec<(usize, usize)>) -> Tree {
    Tree::from_edges(n, &edges).expect("generator produced an invalid tree")
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn gen_path(n: usize) -> Tree {
    assert!(n >= 1, "a path needs at least one vertex");
    from_parent_edges(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Binary tree on `n` vertices in heap order: vertex `i` has children
/// `2i+1` (first) and `2i+2`.
pub fn gen_binary(n: usize) -> Tree {
    assert!(n >= 1, "a binary tree needs at least one vertex");
    from_parent_edges(n, (1..n).map(|i| ((i - 1) / 2, i)).collect())
}

/// Complete binary tree with `levels` levels (`2^levels - 1` vertices), see
/// [`gen_binary`].
pub fn gen_complete_binary(levels: u32) -> Tree {
    assert!(
        levels >= 1,
        "a complete binary tree needs at least one level"
    );
    gen_binary((1usize << levels) - 1)
}

/// Star with centre 0 and leaves `1..n`.
pub fn gen_star(n: usize) -> Tree {
    assert!(n >= 1, "a star needs at least one vertex");
    from_parent_edges(n, (1..n).map(|i| (0, i)).collect())
}

/// Uniformly random labelled tree, decoded from a random Prüfer sequence.
/// Deterministic for a given `(n, seed)`.
pub fn gen_random(n: usize, seed: u64) -> Tree {
    assert!(n >= 1, "a tree needs at least one vertex");
    if n <= 2 {
        return gen_path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    from_parent_edges(n, prufer_decode(n, &code))
}

/// Decodes a Prüfer sequence of length `n - 2` into its edge list.
pub fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    // Linear-time decoding: `ptr` scans for the smallest leaf, `leaf` may
    // jump back when a parent becomes a smaller leaf.
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in code {
        edges.push((v, leaf));
        degree[v] -= 1;
        degree[leaf] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(gen_complete_binary(5).len(), 31);
        let p = gen_path(15);
        assert_eq!(p.len(), 15);
        assert_eq!(p.edges().len(), 14);
        assert_eq!(gen_star(1).len(), 1);
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(gen_random(10, 42).edges(), gen_random(10, 42).edges());
        assert_ne!(gen_random(50, 1).edges(), gen_random(50, 2).edges());
    }

    #[test]
    fn prufer_small() {
        // Sequence [3, 3, 3] is the star centred at 3.
        let mut e = prufer_decode(5, &[3, 3, 3]);
        e.sort_unstable();
        assert_eq!(e, vec![(3, 0), (3, 1), (3, 2), (3, 4)]);
    }

    #[test]
    fn prufer_hits_every_labelled_tree_on_four_vertices() {
        // Cayley: 4^2 = 16 labelled trees.
        let mut seen = std::collections::HashSet::new();
        for a in 0..4 {
            for b in 0..4 {
                let mut e: Vec<(usize, usize)> = prufer_decode(4, &[a, b])
                    .into_iter()
                    .map(|(u, v)| (u.min(v), u.max(v)))
                    .collect();
                e.sort_unstable();
                seen.insert(e);
            }
        }
        assert_eq!(seen.len(), 16);
    }
}
