//! Ordered trees, rooted views, gravity roots and the two-way partition used
//! by the four-quadrant layout.
//!
//! The adjacency order of every vertex is the embedding. Rooting a tree keeps
//! that order: a vertex's children are its neighbours in adjacency order with
//! the parent removed.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An unrooted ordered tree on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from an edge list. Each vertex's adjacency order is the
    /// order in which its edges appear.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if edges.len() != n - 1 {
            return Err(Error::EdgeCount {
                expected: n - 1,
                found: edges.len(),
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let tree = Tree { adj };
        // n - 1 distinct edges plus connectivity rules out cycles.
        if tree.bfs_order(0).len() != n {
            return Err(Error::Disconnected);
        }
        Ok(tree)
    }

    /// Builds a tree directly from per-vertex adjacency lists.
    pub fn from_adjacency(adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, list) in adj.iter().enumerate() {
            for &v in list {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if !adj[v].contains(&u) {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("edge {u}-{v} missing its reverse entry"),
                    });
                }
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        // Validate through the edge path, then keep the caller's ordering.
        Tree::from_edges(n, &edges)?;
        if adj.iter().map(Vec::len).sum::<usize>() != 2 * edges.len() {
            return Err(Error::EdgeCount {
                expected: n - 1,
                found: adj.iter().map(Vec::len).sum::<usize>() / 2,
            });
        }
        Ok(Tree { adj })
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// Each edge once, in an order that reproduces every adjacency list when
    /// fed back to [`Tree::from_edges`].
    pub fn edges(&self) -> Vec<(usize, usize)> {
        edge_order_preserving(&self.adj)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn bfs_order(&self, start: usize) -> Vec<usize> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        order
    }

    /// The subtree induced by `vertices`, relabelled `0..k` in increasing
    /// order of the original ids. Returns the tree and the local-to-global
    /// map. Adjacency order is inherited from `self`.
    pub fn induced(&self, vertices: &[usize]) -> Result<(Tree, Vec<usize>)> {
        let mut globals = vertices.to_vec();
        globals.sort_unstable();
        globals.dedup();
        let mut local = vec![usize::MAX; self.len()];
        for (i, &g) in globals.iter().enumerate() {
            local[g] = i;
        }
        let adj: Vec<Vec<usize>> = globals
            .iter()
            .map(|&g| {
                self.adj[g]
                    .iter()
                    .filter(|&&w| local[w] != usize::MAX)
                    .map(|&w| local[w])
                    .collect()
            })
            .collect();
        let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
        if edges + 1 != adj.len() {
            return Err(Error::Disconnected);
        }
        let tree = Tree { adj };
        if tree.bfs_order(0).len() != tree.len() {
            return Err(Error::Disconnected);
        }
        Ok((tree, globals))
    }
}

/// Orders edges so that re-inserting them reproduces each adjacency list.
///
/// Greedy: repeatedly emit an edge that is the next pending entry in both of
/// its endpoints' lists. In a tree any ordering cycle would have to stay
/// inside the edges of one vertex, so such an edge always exists.
fn edge_order_preserving(adj: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let n = adj.len();
    let mut cursor = vec![0usize; n];
    let total = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let mut out = Vec::with_capacity(total);
    let mut emitted = std::collections::HashSet::new();
    while out.len() < total {
        let mut progressed = false;
        for u in 0..n {
            while cursor[u] < adj[u].len() {
                let v = adj[u][cursor[u]];
                let key = (u.min(v), u.max(v));
                if emitted.contains(&key) {
                    cursor[u] += 1;
                    continue;
                }
                if cursor[v] < adj[v].len() && adj[v][cursor[v]] == u {
                    emitted.insert(key);
                    out.push((u, v));
                    cursor[u] += 1;
                    cursor[v] += 1;
                    progressed = true;
                } else {
                    break;
                }
            }
        }
        if !progressed {
            debug_assert!(false, "adjacency orders admit no edge sequence");
            break;
        }
    }
    out
}

/// A tree together with a chosen root, ordered child lists and cached
/// subtree sizes `|T_v|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    subtree_size: Vec<usize>,
}

impl RootedTree {
    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn subtree_size(&self, v: usize) -> usize {
        self.subtree_size[v]
    }

    pub fn subtree_sizes(&self) -> &[usize] {
        &self.subtree_size
    }

    /// Vertices in preorder (parent before children, children in order).
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children[u].iter().rev());
        }
        out
    }

    /// Vertices on the path from the root down to `v`, both included.
    pub fn path_from_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Replaces the child order. Each new list must be a permutation of the
    /// old one.
    pub(crate) fn with_children(&self, children: Vec<Vec<usize>>) -> RootedTree {
        debug_assert!(children.iter().zip(&self.children).all(|(a, b)| {
            let mut a = a.clone();
            let mut b = b.clone();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        }));
        RootedTree {
            tree: self.tree.clone(),
            root: self.root,
            parent: self.parent.clone(),
            children,
            subtree_size: self.subtree_size.clone(),
        }
    }
}

/// Roots `tree` at `root`, keeping adjacency order in every child list.
///
/// # Panics
///
/// Panics if `root` is not a vertex of `tree`.
pub fn root_at(tree: &Tree, root: usize) -> RootedTree {
    let n = tree.len();
    assert!(root < n, "root {root} out of range for {n} vertices");
    let order = tree.bfs_order(root);
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    seen[root] = true;
    for &u in &order {
        for &v in tree.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some(u);
            }
        }
    }
    for &u in &order {
        children[u] = tree
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| parent[v] == Some(u))
            .collect();
    }
    let mut subtree_size = vec![1usize; n];
    for &u in order.iter().rev() {
        if let Some(p) = parent[u] {
            subtree_size[p] += subtree_size[u];
        }
    }
    RootedTree {
        tree: tree.clone(),
        root,
        parent,
        children,
        subtree_size,
    }
}

/// Size of the largest component of `T \ v`, together with the neighbour of
/// `v` lying in it (smallest id among jointly largest components).
fn largest_component(rt0: &RootedTree, v: usize) -> Option<(usize, usize)> {
    let n = rt0.len();
    rt0.tree()
        .neighbors(v)
        .iter()
        .map(|&w| {
            let size = if rt0.parent(v) == Some(w) {
                n - rt0.subtree_size(v)
            } else {
                rt0.subtree_size(w)
            };
            (size, w)
        })
        .fold(None, |best: Option<(usize, usize)>, (size, w)| match best {
            Some((bs, bw)) if bs > size || (bs == size && bw < w) => Some((bs, bw)),
            _ => Some((size, w)),
        })
}

/// Whether every component of `T \ v` has at most `n/2` vertices.
pub fn is_gravity_root(tree: &Tree, v: usize) -> bool {
    let rt = root_at(tree, v);
    rt.children(v)
        .iter()
        .all(|&c| 2 * rt.subtree_size(c) <= tree.len())
}

/// The walk taken by the gravity-root search: each visited vertex paired
/// with the size of the largest component left when it is removed.
pub fn gravity_root_trace(tree: &Tree) -> Vec<(usize, usize)> {
    let n = tree.len();
    let rt0 = root_at(tree, 0);
    let mut r = 0;
    let mut trace = Vec::new();
    loop {
        match largest_component(&rt0, r) {
            None => {
                trace.push((r, 0));
                return trace;
            }
            Some((size, w)) => {
                trace.push((r, size));
                if 2 * size <= n {
                    return trace;
                }
                r = w;
            }
        }
    }
}

/// Finds a gravity root: starting from vertex 0, repeatedly step into the
/// largest component of `T \ r` until no component exceeds `n/2`.
pub fn gravity_root(tree: &Tree) -> usize {
    gravity_root_trace(tree)
        .last()
        .map(|&(r, _)| r)
        .unwrap_or(0)
}

/// Two subtrees sharing only the gravity root, covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub t1_vertices: Vec<usize>,
    pub t2_vertices: Vec<usize>,
    pub shared_root: usize,
}

impl Partition {
    pub fn t1_len(&self) -> usize {
        self.t1_vertices.len()
    }

    pub fn t2_len(&self) -> usize {
        self.t2_vertices.len()
    }
}

/// Splits the tree at its gravity root `r` into `T1` and `T2` with
/// `T1 ∪ T2 = T`, `T1 ∩ T2 = {r}` and `|T1| >= |T2|`.
///
/// If the largest child subtree has size `m >= (n-1)/3`, `T1` is `r` plus
/// that subtree. Otherwise child subtrees are taken in increasing size and
/// each is attached to the currently smaller side.
pub fn partition_at_gravity_root(tree: &Tree) -> Result<Partition> {
    let n = tree.len();
    if n < 3 {
        return Err(Error::PartitionTooSmall(n));
    }
    let r = gravity_root(tree);
    let rt = root_at(tree, r);
    let kids = rt.children(r);
    let sizes: Vec<usize> = kids.iter().map(|&c| rt.subtree_size(c)).collect();
    let m = sizes.iter().copied().max().unwrap_or(0);

    let mut side_one: Vec<usize> = Vec::new();
    let mut side_two: Vec<usize> = Vec::new();
    if 3 * m >= n - 1 {
        let big = sizes.iter().position(|&s| s == m).unwrap_or(0);
        for (i, &c) in kids.iter().enumerate() {
            if i == big {
                side_one.push(c);
            } else {
                side_two.push(c);
            }
        }
    } else {
        let mut order: Vec<usize> = (0..kids.len()).collect();
        order.sort_by_key(|&i| (sizes[i], i));
        let (mut len_one, mut len_two) = (0usize, 0usize);
        for i in order {
            if len_one <= len_two {
                side_one.push(kids[i]);
                len_one += sizes[i];
            } else {
                side_two.push(kids[i]);
                len_two += sizes[i];
            }
        }
    }

    let collect = |tops: &[usize]| -> Vec<usize> {
        let mut out = vec![r];
        let mut stack: Vec<usize> = tops.to_vec();
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend_from_slice(rt.children(u));
        }
        out.sort_unstable();
        out
    };
    let mut t1 = collect(&side_one);
    let mut t2 = collect(&side_two);
    if t1.len() < t2.len() {
        std::mem::swap(&mut t1, &mut t2);
    }
    Ok(Partition {
        t1_vertices: t1,
        t2_vertices: t2,
        shared_root: r,
    })
}
