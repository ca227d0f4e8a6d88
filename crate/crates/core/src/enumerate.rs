//! Isomorph-free generation of graphs and trees.
//!
//! Graphs are grown one vertex at a time by canonical augmentation. A child
//! `C` of a parent `P` on `k` vertices is `P` plus vertex `k` joined to some
//! subset of `P`. The child is kept only when the new vertex lies in the
//! automorphism orbit of `C`'s canonical deletion vertex: among the vertices
//! with the lexicographically largest (degree, neighbour-degree sum), the one
//! placed first by the canonical labeling. Isomorphic siblings from the same
//! parent are collapsed by canonical code. Every emitted graph is canonically
//! labeled, so its upper-triangle code is its canonical form.

use std::collections::{BTreeMap, HashSet};
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_labeling, same_orbit, upper_triangle_code, MAX_CANON_ORDER};
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6::{parse_graph6, Graph6Error};

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("order {0} is outside the supported range 1..={1}")]
    Order(usize, usize),
    #[error("failed to build worker pool: {0}")]
    Pool(String),
}

fn vertex_invariant(rows: &[u64], degrees: &[u32], v: usize) -> (u32, u32) {
    let mut nb = rows[v];
    let mut sum = 0;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        sum += degrees[w];
    }
    (degrees[v], sum)
}

/// Canonically labeled, pairwise non-isomorphic children of `parent`.
fn children(parent: &Graph) -> Vec<Graph> {
    let k = parent.order();
    let n = k + 1;
    let prow = parent.rows();
    let pdeg: Vec<u32> = prow.iter().map(|r| r.count_ones()).collect();
    let mut accepted: HashSet<u128> = HashSet::new();
    let mut out = Vec::new();
    let mut rows = vec![0u64; n];
    let mut deg = vec![0u32; n];

    for s in 0u64..1 << k {
        let dv = s.count_ones();
        // the new vertex must have maximum degree in the child
        if (0..k).any(|u| pdeg[u] + (s >> u & 1) as u32 > dv) {
            continue;
        }
        for u in 0..k {
            rows[u] = prow[u] | ((s >> u & 1) << k);
            deg[u] = pdeg[u] + (s >> u & 1) as u32;
        }
        rows[k] = s;
        deg[k] = dv;

        let inv_v = vertex_invariant(&rows, &deg, k);
        let mut candidates = 0u64;
        let mut beaten = false;
        for u in 0..n {
            if deg[u] != dv {
                continue;
            }
            let inv = vertex_invariant(&rows, &deg, u);
            if inv > inv_v {
                beaten = true;
                break;
            }
            if inv == inv_v {
                candidates |= 1 << u;
            }
        }
        if beaten {
            continue;
        }

        let child = Graph::from_rows(rows.clone());
        let (form, lab) = canonical_labeling(&child);
        if accepted.contains(&form.code()) {
            continue;
        }
        if candidates != 1 << k {
            let w = *lab
                .iter()
                .find(|&&x| candidates >> x & 1 == 1)
                .expect("candidate set contains the new vertex");
            if w != k && !same_orbit(&child, k, w) {
                continue;
            }
        }
        accepted.insert(form.code());
        out.push(child.permuted(&lab));
    }
    out
}

fn check_graph_order(n: usize) -> Result<(), EnumerateError> {
    if n == 0 || n > MAX_CANON_ORDER {
        return Err(EnumerateError::Order(n, MAX_CANON_ORDER));
    }
    Ok(())
}

fn visit(g: &Graph, n: usize, f: &mut dyn FnMut(&Graph)) {
    if g.order() == n {
        f(g);
        return;
    }
    for c in children(g) {
        visit(&c, n, f);
    }
}

/// Streams one representative per isomorphism class of graphs on `n`
/// vertices, depth-first in a fixed order. Memory is proportional to the
/// depth of the generation tree, not the number of classes.
pub fn for_each_graph(n: usize, connected_only: bool, mut f: impl FnMut(&Graph)) -> Result<(), EnumerateError> {
    check_graph_order(n)?;
    let root = Graph::empty(1).expect("order 1 is valid");
    visit(&root, n, &mut |g| {
        if !connected_only || g.is_connected() {
            f(g)
        }
    });
    Ok(())
}

/// All classes on `n` vertices, sorted by (edge count, canonical code).
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, EnumerateError> {
    let mut out = Vec::new();
    for_each_graph(n, connected_only, |g| out.push(g.clone()))?;
    out.sort_by_cached_key(|g| (g.size(), upper_triangle_code(g)));
    Ok(out)
}

/// Parallel fold over the classes on `n` vertices.
///
/// Work is sharded by the parents on `n - 1` vertices. Per-shard partial
/// results are combined by `reduce` in parent order, so any associative
/// `reduce` gives the same answer for every thread count.
pub fn par_fold_graphs<T, I, F, R>(
    n: usize,
    connected_only: bool,
    threads: usize,
    identity: I,
    fold: F,
    reduce: R,
) -> Result<T, EnumerateError>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, &Graph) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    check_graph_order(n)?;
    if n == 1 {
        let g = Graph::empty(1).expect("order 1 is valid");
        return Ok(fold(identity(), &g));
    }
    let mut parents = Vec::new();
    for_each_graph(n - 1, false, |g| parents.push(g.clone()))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| EnumerateError::Pool(e.to_string()))?;
    Ok(pool.install(|| {
        parents
            .par_iter()
            .fold(&identity, |mut acc, p| {
                for c in children(p) {
                    if !connected_only || c.is_connected() {
                        acc = fold(acc, &c);
                    }
                }
                acc
            })
            .reduce(&identity, &reduce)
    }))
}

/// Number of classes, computed with [`par_fold_graphs`].
pub fn count_graphs(n: usize, connected_only: bool, threads: usize) -> Result<u64, EnumerateError> {
    par_fold_graphs(n, connected_only, threads, || 0u64, |c, _| c + 1, |a, b| a + b)
}

/// Centre-rooted AHU code of a tree; equal codes iff isomorphic trees.
pub fn tree_code(t: &Graph) -> Vec<u8> {
    let n = t.order();
    if n == 1 {
        return b"C()".to_vec();
    }
    let mut degree: Vec<u32> = t.degrees().iter().map(|&d| d as u32).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    let mut removed = 0u64;
    while remaining > 2 {
        remaining -= layer.len();
        removed |= layer.iter().fold(0u64, |m, &v| m | 1 << v);
        let mut next = Vec::new();
        for &leaf in &layer {
            let mut nb = t.neighbors(leaf) & !removed;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn rooted(t: &Graph, v: usize, parent: usize) -> Vec<u8> {
        let mut kids = Vec::new();
        let mut nb = t.neighbors(v);
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if w != parent {
                kids.push(rooted(t, w, v));
            }
        }
        kids.sort();
        let mut out = vec![b'('];
        kids.into_iter().for_each(|k| out.extend(k));
        out.push(b')');
        out
    }
    match layer[..] {
        [c] => {
            let mut out = vec![b'C'];
            out.extend(rooted(t, c, usize::MAX));
            out
        }
        [a, b] => {
            let mut halves = [rooted(t, a, b), rooted(t, b, a)];
            halves.sort();
            let mut out = vec![b'E'];
            halves.into_iter().for_each(|h| out.extend(h));
            out
        }
        _ => unreachable!("a tree has one or two centres"),
    }
}

/// One representative per isomorphism class of trees on `n` vertices,
/// sorted by [`tree_code`]. Built level by level by attaching a leaf to
/// every vertex of every smaller tree.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 || n > MAX_ORDER {
        return Err(EnumerateError::Order(n, MAX_ORDER));
    }
    let mut level: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let one = Graph::empty(1).expect("order 1 is valid");
    level.insert(tree_code(&one), one);
    for k in 1..n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..k {
                let mut rows = t.rows().to_vec();
                rows[v] |= 1 << k;
                rows.push(1 << v);
                let child = Graph::from_rows(rows);
                next.entry(tree_code(&child)).or_insert(child);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// How [`Graph6Reader`] treats malformed lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseMode {
    /// Yield the first error and stop.
    Strict,
    /// Record the error and continue with the next line.
    Lenient,
}

#[derive(Debug, Error)]
pub enum StreamError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("line {line}: {source}")]
    Io { line: usize, source: io::Error },
}

/// Newline-delimited graph6 reader yielding `(line number, graph)`.
/// Blank lines are ignored; line numbers start at 1.
pub struct Graph6Reader<R> {
    lines: io::Lines<R>,
    line: usize,
    mode: ParseMode,
    done: bool,
    skipped: Vec<StreamError>,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R, mode: ParseMode) -> Self {
        Graph6Reader { lines: reader.lines(), line: 0, mode, done: false, skipped: Vec::new() }
    }

    /// Errors skipped so far in lenient mode.
    pub fn skipped(&self) -> &[StreamError] {
        &self.skipped
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<(usize, Graph), StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let text = match self.lines.next()? {
                Ok(t) => t,
                Err(source) => {
                    self.done = true;
                    return Some(Err(StreamError::Io { line: self.line + 1, source }));
                }
            };
            self.line += 1;
            let word = text.trim_end();
            if word.is_empty() {
                continue;
            }
            match parse_graph6(word) {
                Ok(g) => return Some(Ok((self.line, g))),
                Err(source) => {
                    let err = StreamError::Parse { line: self.line, source };
                    match self.mode {
                        ParseMode::Strict => {
                            self.done = true;
                            return Some(Err(err));
                        }
                        ParseMode::Lenient => self.skipped.push(err),
                    }
                }
            }
        }
        None
    }
}

/// Opens a graph6 stream from a file, or from stdin when `path` is `None`.
pub fn stream_graph6(path: Option<&Path>, mode: ParseMode) -> io::Result<Graph6Reader<Box<dyn BufRead>>> {
    let reader: Box<dyn BufRead> = match path {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(BufReader::new(io::stdin())),
    };
    Ok(Graph6Reader::new(reader, mode))
}
