//! Canonical labeling by equitable refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell,
//! recurse. Every leaf is a discrete partition, hence a relabeling, and the
//! canonical form is the largest upper-triangle code over all leaves.
//! Leaves that give the same code as the first or best leaf yield
//! automorphisms; these prune sibling subtrees (orbit pruning on the path
//! stabilizer) and allow jumping back to the level where the two paths split.

use crate::graph::Graph;

/// Largest order supported by the canonical labeling routines.
pub const MAX_CANON_ORDER: usize = 16;

/// Canonical encoding: the order plus the upper-triangle bits of the
/// canonically relabeled adjacency matrix in graph6 bit order
/// (most significant bit first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u128 {
        self.code
    }

    /// Fixed-length 17-byte encoding: order, then the code big-endian.
    pub fn to_bytes(&self) -> [u8; 17] {
        let mut out = [0u8; 17];
        out[0] = self.n;
        out[1..].copy_from_slice(&self.code.to_be_bytes());
        out
    }

    /// The canonically labeled representative.
    pub fn graph(&self) -> Graph {
        decode(self.n as usize, self.code)
    }
}

/// Upper-triangle code of `g` in its own labeling.
pub fn upper_triangle_code(g: &Graph) -> u128 {
    let n = g.order();
    assert!(n <= MAX_CANON_ORDER, "order {n} exceeds {MAX_CANON_ORDER}");
    let rows = g.rows();
    let mut code = 0u128;
    for j in 1..n {
        for row in &rows[..j] {
            code = (code << 1) | (row >> j & 1) as u128;
        }
    }
    code
}

fn decode(n: usize, code: u128) -> Graph {
    let nbits = n * (n - 1) / 2;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (nbits - 1 - k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows(rows)
}

/// Refines an ordered partition (cells as vertex bitsets) to the coarsest
/// equitable refinement, splitting cells by neighbour counts in ascending order.
pub(crate) fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let n = rows.len();
    let mut buf: Vec<u64> = Vec::with_capacity(n);
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() && cells.len() < n {
            let splitter = cells[s];
            buf.clear();
            for &cell in cells.iter() {
                if cell & (cell - 1) == 0 {
                    buf.push(cell);
                    continue;
                }
                let mut buckets = [0u64; 65];
                let mut lo = usize::MAX;
                let mut hi = 0;
                let mut c = cell;
                while c != 0 {
                    let v = c.trailing_zeros() as usize;
                    c &= c - 1;
                    let k = (rows[v] & splitter).count_ones() as usize;
                    buckets[k] |= 1 << v;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    buf.push(cell);
                } else {
                    changed = true;
                    buf.extend(buckets[lo..=hi].iter().copied().filter(|&b| b != 0));
                }
            }
            std::mem::swap(cells, &mut buf);
            s += 1;
        }
        if !changed || cells.len() == n {
            return;
        }
    }
}

fn leaf_code(rows: &[u64], lab: &[usize]) -> u128 {
    let n = lab.len();
    let mut code = 0u128;
    for j in 1..n {
        let rj = rows[lab[j]];
        for &li in &lab[..j] {
            code = (code << 1) | (rj >> li & 1) as u128;
        }
    }
    code
}

struct Leaf {
    code: u128,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u8>>,
}

fn divergence(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).position(|(x, y)| x != y).unwrap_or(a.len().min(b.len()))
}

impl<'a> Search<'a> {
    /// Orbit representative lookup under generators fixing `path` pointwise.
    fn same_orbit_as_explored(&self, v: usize, explored: u64, path: &[usize]) -> bool {
        let n = self.rows.len();
        let mut orbit: Vec<u8> = (0..n as u8).collect();
        let mut any = false;
        for g in &self.generators {
            if path.iter().all(|&p| g[p] as usize == p) {
                any = true;
                for (x, &y) in g.iter().enumerate() {
                    let (rx, ry) = (find(&mut orbit, x), find(&mut orbit, y as usize));
                    if rx != ry {
                        orbit[rx.max(ry)] = rx.min(ry) as u8;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut orbit, v);
        let mut e = explored;
        while e != 0 {
            let u = e.trailing_zeros() as usize;
            e &= e - 1;
            if find(&mut orbit, u) == rv {
                return true;
            }
        }
        false
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = leaf_code(self.rows, &lab);
        let Some(first) = &self.first else {
            self.first = Some(Leaf { code, lab: lab.clone(), path: path.to_vec() });
            self.best = Some(Leaf { code, lab, path: path.to_vec() });
            return None;
        };
        let best = self.best.as_ref().expect("best set with first");
        let matched = if code == first.code {
            Some(first)
        } else if code == best.code {
            Some(best)
        } else {
            None
        };
        if let Some(other) = matched {
            let mut g = vec![0u8; lab.len()];
            for (&from, &to) in other.lab.iter().zip(&lab) {
                g[from] = to as u8;
            }
            let level = divergence(path, &other.path);
            if g.iter().enumerate().any(|(i, &x)| i != x as usize) {
                self.generators.push(g);
            }
            return Some(level);
        }
        if code > best.code {
            self.best = Some(Leaf { code, lab, path: path.to_vec() });
        }
        None
    }

    fn node(&mut self, mut cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        refine(self.rows, &mut cells);
        if cells.len() == self.rows.len() {
            return self.leaf(&cells, path);
        }
        let target = cells.iter().position(|c| c & (c - 1) != 0).expect("non-discrete partition");
        let cell = cells[target];
        let level = path.len();
        let mut explored = 0u64;
        let mut rest = cell;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if explored != 0 && self.same_orbit_as_explored(v, explored, path) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            let jump = self.node(child, path);
            path.pop();
            explored |= 1 << v;
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }
}

fn find(parent: &mut [u8], x: usize) -> usize {
    let mut r = x;
    while parent[r] as usize != r {
        r = parent[r] as usize;
    }
    let mut y = x;
    while parent[y] as usize != r {
        let next = parent[y] as usize;
        parent[y] = r as u8;
        y = next;
    }
    r
}

/// Canonical labeling relative to an ordered initial partition (a vertex
/// colouring). Returns the canonical form and `lab`, where `lab[i]` is the
/// vertex placed at position `i`.
///
/// # Panics
/// If the order exceeds [`MAX_CANON_ORDER`] or `cells` is not a partition
/// of the vertex set.
pub fn canonical_labeling_colored(g: &Graph, cells: &[u64]) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    assert!(n <= MAX_CANON_ORDER, "order {n} exceeds {MAX_CANON_ORDER}");
    debug_assert_eq!(cells.iter().fold(0, |a, c| a | c), crate::graph::low_mask(n));
    let mut search = Search { rows: g.rows(), first: None, best: None, generators: Vec::new() };
    let mut path = Vec::with_capacity(n);
    search.node(cells.to_vec(), &mut path);
    let best = search.best.expect("search reaches at least one leaf");
    (CanonicalForm { n: n as u8, code: best.code }, best.lab)
}

pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    canonical_labeling_colored(g, &[crate::graph::low_mask(g.order())])
}

/// Isomorphism-invariant encoding of `g` (order at most 16).
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Whether some automorphism of `g` maps `v` to `w`.
pub fn same_orbit(g: &Graph, v: usize, w: usize) -> bool {
    if v == w {
        return true;
    }
    let all = crate::graph::low_mask(g.order());
    let cv = canonical_labeling_colored(g, &[1 << v, all & !(1 << v)]).0;
    let cw = canonical_labeling_colored(g, &[1 << w, all & !(1 << w)]).0;
    cv == cw
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, empty, path, star};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left.is_empty() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..left.len() {
                let v = left.remove(i);
                prefix.push(v);
                go(prefix, left, out);
                prefix.pop();
                left.insert(i, v);
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
        out
    }

    /// Oracle: minimum labeled code over all relabelings.
    fn brute_force_key(g: &Graph, perms: &[Vec<usize>]) -> u128 {
        perms.iter().map(|p| upper_triangle_code(&g.permuted(p))).min().unwrap()
    }

    fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    #[test]
    fn path_relabelings_agree() {
        let p3 = path(3).unwrap();
        let forms: Vec<_> = permutations(3).iter().map(|p| canonical_form(&p3.permuted(p))).collect();
        assert!(forms.windows(2).all(|w| w[0] == w[1]));
        assert_ne!(canonical_form(&p3), canonical_form(&complete(3).unwrap()));
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        use std::collections::HashSet;
        let forms: HashSet<_> = all_labeled(4).map(|g| canonical_form(&g)).collect();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn matches_permutation_oracle_up_to_order_6() {
        use std::collections::HashMap;
        for n in 1..=6 {
            let perms = permutations(n);
            // canonical form and oracle key must induce the same partition
            let mut by_form: HashMap<CanonicalForm, u128> = HashMap::new();
            let mut by_key: HashMap<u128, CanonicalForm> = HashMap::new();
            for g in all_labeled(n) {
                let f = canonical_form(&g);
                let k = brute_force_key(&g, &perms);
                assert_eq!(*by_form.entry(f).or_insert(k), k, "{g:?}");
                assert_eq!(*by_key.entry(k).or_insert(f), f, "{g:?}");
                assert_eq!(f.graph(), g.permuted(&canonical_labeling(&g).1));
            }
            let expected = [1, 2, 4, 11, 34, 156][n - 1];
            assert_eq!(by_form.len(), expected);
        }
    }

    #[test]
    fn symmetric_graphs_finish() {
        for n in [1, 2, 8, 16] {
            let e = canonical_form(&empty(n).unwrap());
            assert_eq!(e.code(), 0);
            let k = canonical_form(&complete(n).unwrap());
            assert_eq!(k.graph(), complete(n).unwrap());
        }
        let s = star(16).unwrap();
        let f = canonical_form(&s);
        assert_eq!(f, canonical_form(&s.permuted(&(0..16).rev().collect::<Vec<_>>())));
        let k88 = complete_bipartite(8, 8).unwrap();
        assert_eq!(canonical_form(&k88).graph().degrees(), vec![8; 16]);
    }

    #[test]
    fn orbits() {
        let p4 = path(4).unwrap();
        assert!(same_orbit(&p4, 0, 3));
        assert!(same_orbit(&p4, 1, 2));
        assert!(!same_orbit(&p4, 0, 1));
        let s = star(6).unwrap();
        assert!(same_orbit(&s, 1, 5));
        assert!(!same_orbit(&s, 0, 5));
    }

    #[test]
    fn bytes_are_fixed_length() {
        let f = canonical_form(&complete(2).unwrap());
        assert_eq!(f.to_bytes()[0], 2);
        assert_eq!(f.to_bytes()[16], 1);
    }
}
