//! Immutable simple undirected graphs over dense vertex ids `0..n`.

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// Graphs up to this order also carry per-vertex neighbourhood bitsets.
pub const BITSET_LIMIT: usize = 512;

pub type Vertex = usize;

/// A finite simple undirected graph.
///
/// Neighbour lists are sorted and symmetric; there are no loops or parallel
/// edges. For `n <= BITSET_LIMIT` each vertex also has a neighbourhood bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    bits: Option<Vec<Bitset>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_adjacency(vec![Vec::new(); n])
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range ids.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "self-loop" });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge { u: u.min(w[0]), v: u.max(w[0]), reason: "duplicate edge" });
            }
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    /// Like [`Graph::from_edges`] but silently ignores repeated edges.
    pub fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "self-loop" });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<Vertex>>) -> Self {
        let n = adj.len();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let bits = (n <= BITSET_LIMIT).then(|| {
            adj.iter().map(|l| Bitset::from_iter_with_len(n, l.iter().copied())).collect()
        });
        Graph { adj, bits, m }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Neighbourhood bitset, present when `n <= BITSET_LIMIT`.
    pub fn neighbor_bits(&self, v: Vertex) -> Option<&Bitset> {
        self.bits.as_ref().map(|b| &b[v])
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match &self.bits {
            Some(b) => b[u].contains(v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Two-colours the graph if it is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            stack.push(s);
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True when every pair of distinct vertices in `vs` is adjacent.
    pub fn is_clique(&self, vs: &[Vertex]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut it = self.adj[u].iter().peekable();
                (0..n)
                    .filter(|&v| {
                        while it.peek().is_some_and(|&&w| w < v) {
                            it.next();
                        }
                        v != u && it.peek() != Some(&&v)
                    })
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + off).collect()));
        Graph::from_sorted_adjacency(adj)
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n(), other.n());
        let mut adj: Vec<Vec<Vertex>> = Vec::with_capacity(n1 + n2);
        for l in &self.adj {
            let mut row = l.clone();
            row.extend(n1..n1 + n2);
            adj.push(row);
        }
        for l in &other.adj {
            let mut row: Vec<Vertex> = (0..n1).collect();
            row.extend(l.iter().map(|&v| v + n1));
            adj.push(row);
        }
        Graph::from_sorted_adjacency(adj)
    }

    /// Subgraph induced by `vs`; vertex `vs[i]` becomes `i`.
    pub fn induced_subgraph(&self, vs: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            index[v] = i;
        }
        let adj = vs
            .iter()
            .map(|&v| {
                let mut row: Vec<Vertex> =
                    self.adj[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect();
                row.sort_unstable();
                row
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// The graph with edges filtered by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(Vertex, Vertex) -> bool) -> Graph {
        let adj = (0..self.n())
            .map(|u| self.adj[u].iter().copied().filter(|&v| keep(u.min(v), u.max(v))).collect())
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            adj[perm[u]] = self.adj[u].iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        Graph::from_sorted_adjacency(adj)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}
