//! Exact maximum clique by branch and bound with a greedy-coloring bound.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::exec::Exec;

/// Undirected graph on `0..n` with bitset adjacency rows.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.adj[a * self.words + b / 64] |= 1 << (b % 64);
        self.adj[b * self.words + a / 64] |= 1 << (a % 64);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.words + b / 64] & (1 << (b % 64)) != 0
    }

    fn neighbors(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }
}

fn first_bit(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn clear(set: &mut [u64], v: usize) {
    set[v / 64] &= !(1 << (v % 64));
}

/// Number of colors a greedy coloring uses on `cand`, an upper bound on any clique inside it.
fn color_bound(g: &Graph, cand: &[u64]) -> usize {
    let mut uncolored = cand.to_vec();
    let mut colors = 0;
    while first_bit(&uncolored).is_some() {
        colors += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = first_bit(&avail) {
            clear(&mut uncolored, v);
            clear(&mut avail, v);
            for (a, n) in avail.iter_mut().zip(g.neighbors(v)) {
                *a &= !n;
            }
        }
    }
    colors
}

struct Search<'a> {
    graph: &'a Graph,
    best: Vec<usize>,
    global: &'a AtomicUsize,
}

impl Search<'_> {
    /// Enumerates cliques extending `current` in lexicographic order, replacing `best`
    /// only on a strictly larger clique.
    fn expand(&mut self, current: &mut Vec<usize>, cand: Vec<u64>) {
        if first_bit(&cand).is_none() {
            if current.len() > self.best.len() {
                self.best = current.clone();
                self.global.fetch_max(current.len(), Ordering::Relaxed);
            }
            return;
        }
        let bound = current.len() + color_bound(self.graph, &cand);
        if bound <= self.best.len() || bound < self.global.load(Ordering::Relaxed) {
            return;
        }
        let mut rest = cand;
        while let Some(v) = first_bit(&rest) {
            if current.len() + count(&rest) <= self.best.len() {
                return;
            }
            clear(&mut rest, v);
            let next: Vec<u64> = rest
                .iter()
                .zip(self.graph.neighbors(v))
                .map(|(a, b)| a & b)
                .collect();
            current.push(v);
            self.expand(current, next);
            current.pop();
        }
        if current.len() > self.best.len() {
            self.best = current.clone();
            self.global.fetch_max(current.len(), Ordering::Relaxed);
        }
    }
}

/// A maximum clique, sorted ascending. Among maximum cliques the lexicographically
/// smallest one is returned, regardless of `exec`.
pub fn max_clique(graph: &Graph, exec: Exec) -> Vec<usize> {
    let n = graph.len();
    if n == 0 {
        return Vec::new();
    }
    let global = AtomicUsize::new(0);
    // one branch per smallest clique vertex; branches are independent
    let per_root: Vec<Vec<usize>> = exec.map_range(n, |root| {
        let mut cand = vec![0u64; graph.words];
        for (w, (c, nb)) in cand.iter_mut().zip(graph.neighbors(root)).enumerate() {
            let above = if root / 64 > w {
                0
            } else if root / 64 < w {
                u64::MAX
            } else {
                (!0u64).checked_shl(root as u32 % 64 + 1).unwrap_or(0)
            };
            *c = nb & above;
        }
        let mut search = Search {
            graph,
            best: Vec::new(),
            global: &global,
        };
        let mut current = vec![root];
        search.expand(&mut current, cand);
        search.best
    });
    let mut best: Vec<usize> = Vec::new();
    for clique in per_root {
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &Graph) -> usize {
        let n = g.len();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let ok = vs
                .iter()
                .enumerate()
                .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)));
            if ok {
                best = best.max(vs.len());
            }
        }
        best
    }

    #[test]
    fn small_graphs_match_brute_force() {
        let mut seed = 0x9e37_79b9_7f4a_7c15u64;
        for n in 1..13 {
            for _ in 0..20 {
                let mut g = Graph::new(n);
                for a in 0..n {
                    for b in a + 1..n {
                        seed ^= seed << 13;
                        seed ^= seed >> 7;
                        seed ^= seed << 17;
                        if !seed.is_multiple_of(3) {
                            g.add_edge(a, b);
                        }
                    }
                }
                let seq = max_clique(&g, Exec::Sequential);
                let par = max_clique(&g, Exec::Parallel);
                assert_eq!(seq, par);
                assert_eq!(seq.len(), brute_force(&g));
                for (i, &a) in seq.iter().enumerate() {
                    for &b in &seq[i + 1..] {
                        assert!(g.has_edge(a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn lexicographic_tie_break() {
        // two disjoint triangles: {0,1,2} wins over {3,4,5}
        let mut g = Graph::new(6);
        for (a, b) in [(3, 4), (4, 5), (3, 5), (0, 1), (1, 2), (0, 2)] {
            g.add_edge(a, b);
        }
        assert_eq!(max_clique(&g, Exec::Sequential), vec![0, 1, 2]);
    }

    #[test]
    fn wide_graph_crosses_word_boundary() {
        let mut g = Graph::new(130);
        for &a in &[5usize, 64, 100, 129] {
            for &b in &[5usize, 64, 100, 129] {
                g.add_edge(a, b);
            }
        }
        assert_eq!(max_clique(&g, Exec::Parallel), vec![5, 64, 100, 129]);
    }
}
