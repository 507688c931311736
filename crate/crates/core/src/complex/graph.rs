//! Simple undirected graphs over `0..n` and the searches the checkers need.

use std::collections::{BTreeSet, VecDeque};

use super::cycle::VertexCycle;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Self { adj: vec![Vec::new(); vertex_count] }
    }

    /// Builds a graph from an edge list. Self-loops and repeated edges are ignored.
    ///
    /// Panics if an endpoint is `>= vertex_count`.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::new(vertex_count);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        if let Err(pos) = self.adj[a].binary_search(&b) {
            self.adj[a].insert(pos, b);
        }
        if let Err(pos) = self.adj[b].binary_search(&a) {
            self.adj[b].insert(pos, a);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.adj.len() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(a, b)` with `a < b`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// Breadth-first distances from `source`, skipping vertices in `blocked`.
    pub fn bfs_distances(&self, source: usize, blocked: &BTreeSet<usize>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        if blocked.contains(&source) {
            return dist;
        }
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() && !blocked.contains(&w) {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for s in 0..self.adj.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True when `vertices` in the given cyclic order form a chordless cycle.
    pub fn is_induced_cycle(&self, vertices: &[usize]) -> bool {
        let k = vertices.len();
        if k < 3 {
            return false;
        }
        for i in 0..k {
            for j in (i + 1)..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if self.has_edge(vertices[i], vertices[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

/// All chordless cycles of length `3..=max_len`, canonical and sorted by (length, vertices).
///
/// Each cycle is grown from its smallest vertex `s` through vertices larger than `s`;
/// a vertex is only appended if it has no edge back into the path apart from its
/// predecessor and, possibly, `s` (which closes the cycle).
pub fn enumerate_induced_cycles(graph: &Graph, max_len: usize) -> Vec<VertexCycle> {
    let mut out = Vec::new();
    if max_len < 3 {
        return out;
    }
    let mut path = Vec::with_capacity(max_len);
    for s in 0..graph.vertex_count() {
        path.clear();
        path.push(s);
        extend_chordless(graph, max_len, &mut path, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn extend_chordless(graph: &Graph, max_len: usize, path: &mut Vec<usize>, out: &mut Vec<VertexCycle>) {
    let s = path[0];
    let last = *path.last().expect("path starts non-empty");
    for &x in graph.neighbors(last) {
        if x <= s || path.contains(&x) {
            continue;
        }
        // x may touch only `last` among path[1..]
        let inner = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
        if inner.iter().any(|&p| graph.has_edge(p, x)) {
            continue;
        }
        let closes = path.len() >= 2 && graph.has_edge(x, s);
        if closes {
            if path[1] < x {
                let mut cyc = path.clone();
                cyc.push(x);
                out.push(VertexCycle::from_canonical(cyc));
            }
            continue;
        }
        if path.len() + 1 < max_len {
            path.push(x);
            extend_chordless(graph, max_len, path, out);
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn five_cycle_has_one_induced_cycle() {
        let cycles = enumerate_induced_cycles(&cycle_graph(5), 8);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn k4_has_four_triangles_only() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let cycles = enumerate_induced_cycles(&k4, 8);
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn max_len_cuts_off_long_cycles() {
        assert!(enumerate_induced_cycles(&cycle_graph(6), 5).is_empty());
        assert_eq!(enumerate_induced_cycles(&cycle_graph(6), 6).len(), 1);
    }

    #[test]
    fn empty_graph_has_no_cycles() {
        assert!(enumerate_induced_cycles(&Graph::new(0), 8).is_empty());
    }

    #[test]
    fn bfs_respects_blocked_set() {
        let g = cycle_graph(6);
        let d = g.bfs_distances(0, &BTreeSet::new());
        assert_eq!(d[3], Some(3));
        let d = g.bfs_distances(0, &BTreeSet::from([1]));
        assert_eq!(d[2], Some(4));
    }
}
