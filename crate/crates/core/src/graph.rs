//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns a `u64` row of adjacency bits, so edge tests and degree
//! counts are single machine-word operations. Values are immutable: every
//! operation that changes the edge set returns a new [`Graph`].

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::matrix::SquareMatrix;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} is outside 1..={MAX_ORDER}")]
    Order(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    Vertex { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("{0} requires a parameter of at least {1}")]
    TooSmall(&'static str, usize),
    #[error("disjoint union of an empty list")]
    EmptyUnion,
    #[error("diameter is undefined for a disconnected graph")]
    Disconnected,
}

/// Immutable simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    rows: Vec<u64>,
    m: usize,
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph { rows: vec![0; n], m: 0 })
    }

    /// Builds a graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        check_order(n)?;
        let mut rows = vec![0u64; n];
        let mut m = 0;
        for &(u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if rows[u] >> v & 1 == 1 {
                return Err(GraphError::EdgeExists(u.min(v), u.max(v)));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
            m += 1;
        }
        Ok(Graph { rows, m })
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_ORDER);
        debug_assert!(rows
            .iter()
            .enumerate()
            .all(|(i, r)| r >> i & 1 == 0 && r & !low_mask(rows.len()) == 0));
        let m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { rows, m }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// Sum of all degrees, which is `2m` and also the trace of the Laplacian.
    pub fn degree_sum(&self) -> u64 {
        2 * self.m as u64
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `v` then `u` (graph6 bit order).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::with_capacity(self.m);
        for v in 1..n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Non-edges `(u, v)`, `u < v`, in lexicographic order.
    pub fn complement_edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Returns a new graph with the edge `uv` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.order();
        check_vertex(u, n)?;
        check_vertex(v, n)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists(u.min(v), u.max(v)));
        }
        let mut rows = self.rows.clone();
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        Ok(Graph { rows, m: self.m + 1 })
    }

    /// Adds several edges at once; same error conditions as [`Graph::add_edge`].
    pub fn add_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g = g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Relabels so that old vertex `order[i]` becomes vertex `i`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(order.len(), n, "permutation length must equal the order");
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut rows = vec![0u64; n];
        for (i, &v) in order.iter().enumerate() {
            let mut nb = self.rows[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                rows[i] |= 1 << pos[w];
            }
        }
        Graph { rows, m: self.m }
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    /// Combinatorial Laplacian `D - A`.
    pub fn laplacian(&self) -> SquareMatrix<i64> {
        let n = self.order();
        let mut l = SquareMatrix::zeros(n);
        for i in 0..n {
            l[(i, i)] = self.degree(i) as i64;
            let mut nb = self.rows[i];
            while nb != 0 {
                let j = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                l[(i, j)] = -1;
            }
        }
        l
    }

    /// Vertex sets of the connected components, as bitsets, ordered by least vertex.
    pub fn components(&self) -> Vec<u64> {
        let n = self.order();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let mut comp = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp == low_mask(n)
    }

    fn eccentricity(&self, s: usize) -> usize {
        let n = self.order();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        let mut ecc = 0;
        while let Some(v) = queue.pop_front() {
            ecc = ecc.max(dist[v]);
            let mut nb = self.rows[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        ecc
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok((0..self.order()).map(|v| self.eccentricity(v)).max().unwrap_or(0))
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    /// Size of a maximum matching.
    pub fn matching_number(&self) -> usize {
        crate::matching::maximum_matching(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", crate::graph6::write_graph6(self), self.edges())
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 || n > MAX_ORDER {
        return Err(GraphError::Order(n));
    }
    Ok(())
}

fn check_vertex(v: usize, n: usize) -> Result<(), GraphError> {
    if v >= n {
        return Err(GraphError::Vertex { vertex: v, n });
    }
    Ok(())
}

pub fn empty(n: usize) -> Result<Graph, GraphError> {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    check_order(n)?;
    let all = low_mask(n);
    Ok(Graph::from_rows((0..n).map(|i| all & !(1 << i)).collect()))
}

/// `K_{1,n-1}` with vertex 0 as the center.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooSmall("star", 2));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooSmall("path", 2));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// `K_{a,b}`: vertices `0..a` form one side, `a..a+b` the other.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a < 1 || b < 1 {
        return Err(GraphError::TooSmall("complete_bipartite", 1));
    }
    let n = a + b;
    check_order(n)?;
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Block-diagonal union; the parts keep their order and relative labels.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
    if parts.is_empty() {
        return Err(GraphError::EmptyUnion);
    }
    let total: usize = parts.iter().map(Graph::order).sum();
    check_order(total)?;
    let mut rows = Vec::with_capacity(total);
    let mut offset = 0;
    for g in parts {
        rows.extend(g.rows.iter().map(|r| r << offset));
        offset += g.order();
    }
    Ok(Graph::from_rows(rows))
}

/// Vertex degrees with cached sum and sum of squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
    sum: u64,
    sum_sq: u64,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Self {
        let sum = degrees.iter().map(|&d| d as u64).sum();
        let sum_sq = degrees.iter().map(|&d| (d * d) as u64).sum();
        DegreeSequence { degrees, sum, sum_sq }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `d_G`, the degree sum.
    pub fn sum(&self) -> u64 {
        self.sum
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.sum_sq
    }

    /// Degrees sorted in non-increasing order.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}
