//! The geodesic order of a rooted graph: `u < v` when `u` lies on some
//! geodesic from the root to `v`.
//!
//! Its comparability graph is `G*_x - x`. The order is built as reachability
//! in the BFS DAG of the root (edges `u -> w` with `d(x,w) = d(x,u) + 1`):
//! `v` is reachable from `u` exactly when `d(x,u) + d(u,v) = d(x,v)`.

use std::collections::BTreeSet;

use crate::bitset::{BitMatrix, Ones};
use crate::distance::{bfs_into, DistanceMatrix, UNREACHABLE};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Strict partial order on the root's component minus the root, stored as
/// transitively closed successor bitsets over all `n` vertex ids.
#[derive(Clone, Debug)]
pub struct GeodesicOrder {
    root: Vertex,
    dist: Vec<u32>,
    members: Vec<Vertex>,
    succ: BitMatrix,
    bfs: Vec<Vertex>,
}

impl GeodesicOrder {
    /// An empty order sized for graphs on `n` vertices; fill it with
    /// [`GeodesicOrder::rebuild`].
    pub fn with_capacity(n: usize) -> Self {
        GeodesicOrder {
            root: 0,
            dist: vec![UNREACHABLE; n],
            members: Vec::new(),
            succ: BitMatrix::new(n),
            bfs: Vec::with_capacity(n),
        }
    }

    /// Recomputes the order for root `x`, reusing the allocations.
    pub fn rebuild(&mut self, g: &Graph, x: Vertex) -> Result<()> {
        g.check_vertex(x)?;
        let n = g.n();
        self.root = x;
        self.dist.clear();
        self.dist.resize(n, UNREACHABLE);
        self.bfs = bfs_into(g, x, &mut self.dist);
        if self.succ.dim() == n {
            self.succ.clear();
        } else {
            self.succ.reset(n);
        }
        // children before parents: reverse BFS order
        for &u in self.bfs.iter().rev() {
            if u == x {
                continue;
            }
            let next = self.dist[u] + 1;
            for &w in g.neighbors(u) {
                if self.dist[w] == next {
                    self.succ.set(u, w);
                    self.succ.or_row_into(u, w);
                }
            }
        }
        self.members.clear();
        self.members.extend(self.bfs.iter().copied().filter(|&v| v != x));
        self.members.sort_unstable();
        Ok(())
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    /// Number of vertex ids the order is indexed over.
    pub fn n(&self) -> usize {
        self.dist.len()
    }

    /// The ground set: the root's component minus the root, ascending.
    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    /// Size of the root's component.
    pub fn component_size(&self) -> usize {
        self.members.len() + 1
    }

    /// Distance from the root, `None` outside its component.
    pub fn dist(&self, v: Vertex) -> Option<u32> {
        let d = self.dist[v];
        (d != UNREACHABLE).then_some(d)
    }

    pub(crate) fn raw_dist(&self) -> &[u32] {
        &self.dist
    }

    /// `u < v`.
    #[inline]
    pub fn less(&self, u: Vertex, v: Vertex) -> bool {
        self.succ.get(u, v)
    }

    pub fn comparable(&self, u: Vertex, v: Vertex) -> bool {
        self.less(u, v) || self.less(v, u)
    }

    pub fn successors(&self, u: Vertex) -> Ones<'_> {
        self.succ.row_ones(u)
    }

    pub(crate) fn successor_words(&self, u: Vertex) -> &[u64] {
        self.succ.row(u)
    }

    /// Number of comparable pairs, i.e. `|E(G*_x - x)|`.
    pub fn comparable_pairs(&self) -> usize {
        self.members.iter().map(|&u| self.succ.row_count(u)).sum()
    }

    /// Comparable pairs `(u, v)` with `u < v` in the order.
    pub fn relations(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.members.iter().flat_map(move |&u| self.successors(u).map(move |v| (u, v)))
    }

    /// Edge set of `G*_x - x` as unordered pairs `(min, max)`.
    pub fn comparability_edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.relations().map(|(u, v)| (u.min(v), u.max(v))).collect()
    }

    /// Irreflexivity, distance monotonicity (hence antisymmetry),
    /// transitivity, and confinement to the ground set.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Invariant(format!("geodesic order rooted at {}: {msg}", self.root)));
        let stride = self.succ.stride();
        let mut in_ground = vec![0u64; stride];
        for &m in &self.members {
            in_ground[m >> 6] |= 1 << (m & 63);
        }
        for u in 0..self.n() {
            let row = self.succ.row(u);
            let is_member = in_ground.get(u >> 6).is_some_and(|w| w >> (u & 63) & 1 == 1);
            if !is_member {
                if row.iter().any(|&w| w != 0) {
                    return fail(format!("vertex {u} outside the ground set has successors"));
                }
                continue;
            }
            if self.less(u, u) {
                return fail(format!("{u} < {u}"));
            }
            for v in self.successors(u) {
                if self.dist[v] <= self.dist[u] || self.dist[v] == UNREACHABLE {
                    return fail(format!("{u} < {v} but d(x,{u}) >= d(x,{v})"));
                }
                let closed = self.succ.row(v).iter().zip(row).all(|(a, b)| a & !b == 0);
                if !closed {
                    return fail(format!("not transitive through {u} < {v}"));
                }
            }
        }
        Ok(())
    }
}

/// The geodesic order of `g` rooted at `x`.
pub fn geodesic_order(g: &Graph, x: Vertex) -> Result<GeodesicOrder> {
    let mut o = GeodesicOrder::with_capacity(g.n());
    o.rebuild(g, x)?;
    Ok(o)
}

/// The same relation read straight off the distance identity
/// `d(x,u) + d(u,v) = d(x,v)`, from an all-pairs table.
pub fn geodesic_order_by_distances(g: &Graph, x: Vertex, dm: &DistanceMatrix) -> Result<BTreeSet<(Vertex, Vertex)>> {
    g.check_vertex(x)?;
    let n = g.n();
    let mut rel = BTreeSet::new();
    for u in (0..n).filter(|&u| u != x && dm.get(x, u).is_some()) {
        for v in (0..n).filter(|&v| v != x && v != u) {
            if dm.on_geodesic(x, u, v) {
                rel.insert((u, v));
            }
        }
    }
    Ok(rel)
}

/// A literal transcription of the queue-based construction of `G*_x`:
/// drop same-distance edges, then from every `u != x` walk forward through
/// strictly increasing distances and join `u` to each `w` reached with
/// `D[w] > D[u] + 1`. Returns the edges of `G*_x - x` as `(min, max)`.
///
/// The join inside the loop over `w` is read as `uw`.
pub fn queue_construction_edges(g: &Graph, x: Vertex) -> Result<BTreeSet<(Vertex, Vertex)>> {
    g.check_vertex(x)?;
    let n = g.n();
    let mut d = vec![UNREACHABLE; n];
    bfs_into(g, x, &mut d);
    let reduced = g.filter_edges(|u, v| d[u] != d[v]);
    let mut edges: BTreeSet<(Vertex, Vertex)> =
        reduced.edges().filter(|&(u, v)| u != x && v != x).collect();
    for u in (0..n).filter(|&u| u != x) {
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(v) = queue.pop_front() {
            for &w in reduced.neighbors(v) {
                if seen[w] || d[w] == UNREACHABLE || d[v] == UNREACHABLE || d[w] <= d[v] {
                    continue;
                }
                queue.push_back(w);
                seen[w] = true;
                if d[w] > d[u] + 1 {
                    edges.insert((u.min(w), u.max(w)));
                }
            }
        }
    }
    Ok(edges)
}
