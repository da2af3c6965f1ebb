//! Trees with labelled vertices `0..n`, and the structural operations the
//! walk statistics are built on: distances, diameter geodesics, edge splits
//! and canonical codes.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// An unrooted tree on vertices `0..n`. Edges are stored normalised
/// (`u < v`, sorted), adjacency lists sorted, so two equal trees compare
/// equal and all iteration orders are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// The two components of a tree with one edge removed, with their degree
/// sums taken in the original tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    /// Vertices on the `u` side, sorted.
    pub side_u: Vec<usize>,
    /// Vertices on the `v` side, sorted.
    pub side_v: Vec<usize>,
    /// Total original degree over `side_u`.
    pub deg_u: u64,
    /// Total original degree over `side_v`.
    pub deg_v: u64,
}

impl Tree {
    /// Builds a tree from an explicit edge list, rejecting anything that is
    /// not a tree on `0..n`: wrong edge count, labels out of range,
    /// self-loops, duplicate edges, cycles or disconnection.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::OrderTooSmall { min: 1, actual: 0 });
        }
        if edges.len() != n - 1 {
            return Err(Error::EdgeCount { expected: n - 1, actual: edges.len() });
        }
        let mut seen = BTreeSet::new();
        let mut normalised = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::LabelOutOfRange { label: a, n });
            }
            if b >= n {
                return Err(Error::LabelOutOfRange { label: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop { v: a });
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge { u: a, v: b });
            }
            normalised.push(e);
        }
        normalised.sort_unstable();
        let t = Self::from_edges_unchecked(n, normalised);
        // Right edge count and no duplicates, so connectivity alone decides
        // whether this is a tree.
        let mut reached = 0usize;
        let mut visited = vec![false; n];
        let mut queue = VecDeque::new();
        visited[0] = true;
        queue.push_back(0);
        while let Some(v) = queue.pop_front() {
            reached += 1;
            for &w in &t.adj[v] {
                if !visited[w] {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if reached != n {
            return Err(Error::NotConnected);
        }
        Ok(t)
    }

    /// Builds adjacency from an edge list already known to describe a tree.
    pub(crate) fn from_edges_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Tree { n, edges, adj }
    }

    /// Decodes a Prüfer sequence into the tree on `n` vertices it encodes.
    /// The sequence must have length `n - 2` with entries in `0..n`.
    pub fn from_pruefer(seq: &[usize], n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::OrderTooSmall { min: 2, actual: n });
        }
        if seq.len() != n - 2 {
            return Err(Error::PrueferLength { expected: n - 2, actual: seq.len() });
        }
        for &c in seq {
            if c >= n {
                return Err(Error::LabelOutOfRange { label: c, n });
            }
        }
        let mut edges = Vec::with_capacity(n - 1);
        decode_pruefer(seq, n, &mut edges);
        Tree::build(n, &edges)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges, normalised `u < v` and sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::LabelOutOfRange { label: v, n: self.n })
        }
    }

    /// Distances from `v` to every vertex, by breadth-first search.
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[v] = 0;
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Full distance matrix.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.distances_from(v)).collect()
    }

    /// The unique path from `u` to `v`, as a vertex sequence starting at `u`.
    pub fn path_between(&self, u: usize, v: usize) -> Result<Vec<usize>, Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        parent[u] = u;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &w in &self.adj[x] {
                if parent[w] == usize::MAX {
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        Ok(path)
    }

    /// Diameter together with a deterministic diameter geodesic: among all
    /// farthest pairs the one with smallest endpoint labels is chosen, and
    /// the path between two vertices of a tree is unique.
    pub fn diameter_and_geodesic(&self) -> Result<(usize, Vec<usize>), Error> {
        if self.n == 1 {
            return Err(Error::SingleVertex);
        }
        let mut best = (0usize, 0usize, 0usize);
        for a in 0..self.n {
            let dist = self.distances_from(a);
            for b in (a + 1)..self.n {
                if dist[b] > best.0 {
                    best = (dist[b], a, b);
                }
            }
        }
        let path = self.path_between(best.1, best.2)?;
        Ok((best.0, path))
    }

    /// Removes the edge `(u, v)` and reports both components with their
    /// degree sums (degrees taken in the intact tree).
    pub fn split_at_edge(&self, u: usize, v: usize) -> Result<EdgeCut, Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let mut on_u_side = vec![false; self.n];
        let mut queue = VecDeque::new();
        on_u_side[u] = true;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            for &w in &self.adj[x] {
                if (x, w) == (u, v) || (x, w) == (v, u) {
                    continue;
                }
                if !on_u_side[w] {
                    on_u_side[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let mut cut = EdgeCut { side_u: Vec::new(), side_v: Vec::new(), deg_u: 0, deg_v: 0 };
        for x in 0..self.n {
            if on_u_side[x] {
                cut.side_u.push(x);
                cut.deg_u += self.degree(x) as u64;
            } else {
                cut.side_v.push(x);
                cut.deg_v += self.degree(x) as u64;
            }
        }
        Ok(cut)
    }

    /// Sum of degrees over a vertex subset. Repeated labels count once.
    pub fn degree_sum(&self, subset: &[usize]) -> Result<u64, Error> {
        let mut included = vec![false; self.n];
        let mut total = 0u64;
        for &v in subset {
            self.check_vertex(v)?;
            if !included[v] {
                included[v] = true;
                total += self.degree(v) as u64;
            }
        }
        Ok(total)
    }

    /// Number of edges shared by the paths `u → w` and `v → w`; equals
    /// `(d(u,w) + d(v,w) - d(u,v)) / 2`.
    pub fn path_overlap(&self, u: usize, v: usize, w: usize) -> Result<usize, Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        let from_w = self.distances_from(w);
        let from_u = self.distances_from(u);
        Ok((from_w[u] + from_w[v] - from_u[v]) / 2)
    }

    /// The one or two middle vertices of the tree, sorted.
    pub fn centers(&self) -> Vec<usize> {
        if self.n <= 2 {
            return (0..self.n).collect();
        }
        let mut degree: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut remaining = self.n;
        let mut layer: Vec<usize> = (0..self.n).filter(|&v| degree[v] == 1).collect();
        while remaining > 2 {
            let mut next = Vec::new();
            for &v in &layer {
                removed[v] = true;
                remaining -= 1;
                for &w in &self.adj[v] {
                    if !removed[w] {
                        degree[w] -= 1;
                        if degree[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        (0..self.n).filter(|&v| !removed[v]).collect()
    }

    /// AHU code of the tree rooted at `root`: `()` for a leaf, and for an
    /// internal vertex the sorted concatenation of its children's codes in
    /// parentheses. Equal codes characterise rooted isomorphism.
    pub fn rooted_code(&self, root: usize) -> Result<String, Error> {
        self.check_vertex(root)?;
        Ok(rooted_code_from_adj(&self.adj, root))
    }

    /// Canonical code: the AHU code rooted at the centre, and for bicentral
    /// trees the lexicographically smaller of the two rooted codes. Equal
    /// codes characterise isomorphism of unrooted trees.
    pub fn canonical_code(&self) -> String {
        canonical_code_from_adj(&self.adj)
    }

    /// A caterpillar is a tree that turns into a path (or into nothing)
    /// when all leaves are removed.
    pub fn is_caterpillar(&self) -> bool {
        (0..self.n).all(|v| {
            self.degree(v) < 2
                || self.adj[v].iter().filter(|&&w| self.degree(w) >= 2).count() <= 2
        })
    }
}

/// Linear-time Prüfer decode into `edges` (cleared first). The sequence is
/// assumed valid for order `n >= 2`.
pub(crate) fn decode_pruefer(seq: &[usize], n: usize, edges: &mut Vec<(usize, usize)>) {
    edges.clear();
    if n == 2 {
        edges.push((0, 1));
        return;
    }
    let mut degree = vec![1usize; n];
    for &c in seq {
        degree[c] += 1;
    }
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &c in seq {
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 && c < ptr {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
}

pub(crate) fn rooted_code_from_adj(adj: &[Vec<usize>], root: usize) -> String {
    let n = adj.len();
    if n == 1 {
        return String::from("()");
    }
    // Breadth-first order puts parents before children, so a reverse sweep
    // has every child's code ready when its parent is processed.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut code: Vec<Option<String>> = vec![None; n];
    for &v in order.iter().rev() {
        let mut parts: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| parent[w] == v)
            .map(|&w| code[w].take().expect("child code computed"))
            .collect();
        parts.sort_unstable();
        let mut s = String::with_capacity(2 + parts.iter().map(String::len).sum::<usize>());
        s.push('(');
        for p in &parts {
            s.push_str(p);
        }
        s.push(')');
        code[v] = Some(s);
    }
    code[root].take().expect("root code computed")
}

pub(crate) fn canonical_code_from_adj(adj: &[Vec<usize>]) -> String {
    let centers = centers_from_adj(adj);
    let first = rooted_code_from_adj(adj, centers[0]);
    if centers.len() == 1 {
        return first;
    }
    let second = rooted_code_from_adj(adj, centers[1]);
    first.min(second)
}

fn centers_from_adj(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}
