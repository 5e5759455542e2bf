//! Reference implementations used only by tests. Each one is written
//! independently of the library code it checks.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use mtd::{GridVector, Tree};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn gv(x: i64, y: i64) -> GridVector {
    GridVector::new(x, y)
}

fn dot(a: GridVector, b: GridVector) -> i128 {
    a.x as i128 * b.x as i128 + a.y as i128 * b.y as i128
}

/// Path between two vertices by BFS parents.
pub fn bfs_path(tree: &Tree, from: usize, to: usize) -> Vec<usize> {
    let n = tree.len();
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

/// Some direction has strictly positive dot product with every vector.
///
/// Tries 720 evenly spaced directions first. If none works, falls back to an
/// exact search: a non-empty open feasible cone narrower than π is bounded by
/// two rays normal to input vectors, so the sum of two signed normals lies
/// inside it; a half-plane cone contains the input vectors themselves.
pub fn sampled_half_plane(vectors: &[GridVector]) -> bool {
    if vectors.iter().any(|v| v.x == 0 && v.y == 0) {
        return false;
    }
    for k in 0..720 {
        let t = k as f64 * std::f64::consts::PI / 360.0;
        let (c, s) = (t.cos(), t.sin());
        if vectors
            .iter()
            .all(|v| v.x as f64 * c + v.y as f64 * s > 1e-9)
        {
            return true;
        }
    }
    let normals: Vec<GridVector> = vectors
        .iter()
        .flat_map(|v| [gv(-v.y, v.x), gv(v.y, -v.x)])
        .collect();
    let mut candidates: Vec<GridVector> = vectors.to_vec();
    for a in &normals {
        for b in &normals {
            candidates.push(gv(a.x + b.x, a.y + b.y));
        }
    }
    candidates
        .iter()
        .any(|&c| vectors.iter().all(|&v| dot(c, v) > 0))
}

/// All-pairs monotonicity by path extraction and the sampled test.
pub fn monotone_oracle(tree: &Tree, coords: &[GridVector]) -> bool {
    let n = tree.len();
    (0..n).all(|u| {
        (u + 1..n).all(|v| {
            let path = bfs_path(tree, u, v);
            let steps: Vec<GridVector> = path
                .windows(2)
                .map(|w| {
                    gv(
                        coords[w[1]].x - coords[w[0]].x,
                        coords[w[1]].y - coords[w[0]].y,
                    )
                })
                .collect();
            sampled_half_plane(&steps)
        })
    })
}

/// Parenthesised code of the tree rooted at `root`, children sorted.
pub fn ahu_code(tree: &Tree, root: usize) -> String {
    fn go(tree: &Tree, v: usize, from: usize) -> String {
        let mut kids: Vec<String> = tree
            .neighbors(v)
            .iter()
            .filter(|&&w| w != from)
            .map(|&w| go(tree, w, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    go(tree, root, usize::MAX)
}

/// Minimum rooted code over every root.
pub fn free_code(tree: &Tree) -> String {
    (0..tree.len()).map(|r| ahu_code(tree, r)).min().unwrap()
}

/// Every Prüfer sequence of length `n - 2`, as a labelled tree.
pub fn all_labelled_trees(n: usize) -> Vec<Tree> {
    if n == 1 {
        return vec![Tree::from_edges(1, &[]).unwrap()];
    }
    if n == 2 {
        return vec![Tree::from_edges(2, &[(0, 1)]).unwrap()];
    }
    let total = n.pow((n - 2) as u32);
    (0..total)
        .map(|mut idx| {
            let mut code = Vec::with_capacity(n - 2);
            for _ in 0..n - 2 {
                code.push(idx % n);
                idx /= n;
            }
            Tree::from_edges(n, &naive_prufer(n, &code)).unwrap()
        })
        .collect()
}

/// Quadratic Prüfer decoding.
fn naive_prufer(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

pub fn rooted_classes(n: usize) -> BTreeSet<String> {
    all_labelled_trees(n)
        .iter()
        .flat_map(|t| (0..n).map(move |r| ahu_code(t, r)))
        .collect()
}

pub fn free_classes(n: usize) -> BTreeSet<String> {
    all_labelled_trees(n).iter().map(free_code).collect()
}

/// Grid vectors with max-norm at most `bound` whose slope lies strictly
/// inside `(lo, hi)` with `margin` clearance, scanning the box
/// `[-bound, bound] x [0, bound]`.
pub fn feasible_points(lo: f64, hi: f64, bound: i64, margin: f64) -> Vec<GridVector> {
    let mut out = Vec::new();
    for x in -bound..=bound {
        for y in 0..=bound {
            if x == 0 && y == 0 {
                continue;
            }
            let s = (y as f64).atan2(x as f64);
            if s > lo + margin && s < hi - margin {
                out.push(gv(x, y));
            }
        }
    }
    out
}

pub fn pi_ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
