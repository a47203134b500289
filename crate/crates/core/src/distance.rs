//! Breadth-first distance layers and all-pairs hop distances.

use crate::error::Result;
use crate::graph::{Graph, Vertex};

/// Marker for a vertex outside the root's component.
pub const UNREACHABLE: u32 = u32::MAX;

/// BFS distances from a root, with the vertices grouped by distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceLayers {
    root: Vertex,
    dist: Vec<u32>,
    layers: Vec<Vec<Vertex>>,
}

impl DistanceLayers {
    pub fn root(&self) -> Vertex {
        self.root
    }

    /// `None` when `v` is not reachable from the root.
    pub fn dist(&self, v: Vertex) -> Option<u32> {
        let d = self.dist[v];
        (d != UNREACHABLE).then_some(d)
    }

    /// Raw distances with [`UNREACHABLE`] for other components.
    pub fn raw(&self) -> &[u32] {
        &self.dist
    }

    /// Eccentricity of the root within its component.
    pub fn ecc(&self) -> u32 {
        self.layers.len() as u32 - 1
    }

    /// `layers()[t]` holds the vertices at distance exactly `t`, ascending.
    pub fn layers(&self) -> &[Vec<Vertex>] {
        &self.layers
    }

    /// Number of vertices in the root's component.
    pub fn component_size(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn reaches(&self, v: Vertex) -> bool {
        self.dist[v] != UNREACHABLE
    }
}

/// BFS from `x`.
pub fn bfs_layers(g: &Graph, x: Vertex) -> Result<DistanceLayers> {
    g.check_vertex(x)?;
    let mut dist = vec![UNREACHABLE; g.n()];
    let order = bfs_into(g, x, &mut dist);
    let mut layers: Vec<Vec<Vertex>> = Vec::new();
    for v in order {
        let d = dist[v] as usize;
        if layers.len() <= d {
            layers.push(Vec::new());
        }
        layers[d].push(v);
    }
    for l in layers.iter_mut() {
        l.sort_unstable();
    }
    Ok(DistanceLayers { root: x, dist, layers })
}

/// Fills `dist` (which must be pre-set to `UNREACHABLE`) and returns the
/// vertices in BFS order.
pub(crate) fn bfs_into(g: &Graph, x: Vertex, dist: &mut [u32]) -> Vec<Vertex> {
    let mut order = Vec::with_capacity(g.n());
    dist[x] = 0;
    order.push(x);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        let du = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = du;
                order.push(w);
            }
        }
    }
    order
}

/// Dense all-pairs distance table from one BFS per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut d = vec![UNREACHABLE; n * n];
        for (x, row) in d.chunks_mut(n.max(1)).enumerate().take(n) {
            bfs_into(g, x, row);
        }
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn raw(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let d = self.raw(u, v);
        (d != UNREACHABLE).then_some(d)
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// True when `z` lies on some `u,v`-geodesic (endpoints included).
    #[inline]
    pub fn on_geodesic(&self, u: Vertex, z: Vertex, v: Vertex) -> bool {
        let (a, b, c) = (self.raw(u, z), self.raw(z, v), self.raw(u, v));
        c != UNREACHABLE && a != UNREACHABLE && b != UNREACHABLE && a + b == c
    }
}
