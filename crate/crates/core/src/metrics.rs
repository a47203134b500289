//! Whole-graph structural parameters: extent, girth, degrees, simplicial and
//! cut vertices, blocks and boundaries.

use serde::Serialize;

use crate::distance::{bfs_into, DistanceMatrix, UNREACHABLE};
use crate::graph::{Graph, Vertex};

/// Length of a shortest cycle, or `Infinite` for a forest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Diameter and radius of one connected component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentExtent {
    pub vertices: Vec<Vertex>,
    pub diameter: u32,
    pub radius: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    /// Whole-graph diameter; `None` when disconnected.
    pub diameter: Option<u32>,
    /// Whole-graph radius; `None` when disconnected.
    pub radius: Option<u32>,
    pub components: Vec<ComponentExtent>,
    /// Eccentricity of each vertex within its own component.
    pub eccentricity: Vec<u32>,
    pub girth: Girth,
    pub min_degree: usize,
    pub max_degree: usize,
    pub simplicial: Vec<Vertex>,
    pub cut_vertices: Vec<Vertex>,
    /// `boundary[x]` is the boundary set of `x`.
    pub boundary: Vec<Vec<Vertex>>,
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    let n = g.n();
    let dm = DistanceMatrix::new(g);
    let eccentricity: Vec<u32> = (0..n)
        .map(|x| dm.row(x).iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0))
        .collect();
    let components: Vec<ComponentExtent> = g
        .components()
        .into_iter()
        .map(|c| {
            let diameter = c.iter().map(|&v| eccentricity[v]).max().unwrap_or(0);
            let radius = c.iter().map(|&v| eccentricity[v]).min().unwrap_or(0);
            ComponentExtent { vertices: c, diameter, radius }
        })
        .collect();
    let connected = components.len() <= 1;
    let (diameter, radius) = if connected {
        (components.first().map(|c| c.diameter).or(Some(0)), components.first().map(|c| c.radius).or(Some(0)))
    } else {
        (None, None)
    };
    let boundary = (0..n).map(|x| boundary_from_row(g, dm.row(x))).collect();
    GraphMetrics {
        n,
        m: g.m(),
        connected,
        diameter,
        radius,
        components,
        eccentricity,
        girth: girth(g),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        simplicial: simplicial_vertices(g),
        cut_vertices: cut_vertices(g),
        boundary,
    }
}

/// Vertices `w` with `d(x, y) <= d(x, w)` for every neighbour `y` of `w`,
/// using the convention that unreachable distances compare equal.
pub fn boundary(g: &Graph, x: Vertex) -> Vec<Vertex> {
    let mut dist = vec![UNREACHABLE; g.n()];
    bfs_into(g, x, &mut dist);
    boundary_from_row(g, &dist)
}

fn boundary_from_row(g: &Graph, dist: &[u32]) -> Vec<Vertex> {
    (0..g.n()).filter(|&w| g.neighbors(w).iter().all(|&y| dist[y] <= dist[w])).collect()
}

pub fn is_simplicial(g: &Graph, v: Vertex) -> bool {
    let nb = g.neighbors(v);
    match g.neighbor_bits(v) {
        // N(v) must fit inside N(u) + u for every neighbour u
        Some(nv) => nb.iter().all(|&u| {
            let nu = g.neighbor_bits(u).unwrap().words();
            nv.words().iter().zip(nu).enumerate().all(|(i, (a, b))| {
                let own = if u >> 6 == i { 1u64 << (u & 63) } else { 0 };
                a & !(b | own) == 0
            })
        }),
        None => g.is_clique(nb),
    }
}

pub fn simplicial_vertices(g: &Graph) -> Vec<Vertex> {
    (0..g.n()).filter(|&v| is_simplicial(g, v)).collect()
}

/// Shortest cycle length via one BFS per vertex.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for r in 0..n {
        dist.iter_mut().for_each(|d| *d = UNREACHABLE);
        queue.clear();
        dist[r] = 0;
        parent[r] = usize::MAX;
        queue.push(r);
        let mut head = 0;
        'bfs: while head < queue.len() {
            let u = queue[head];
            head += 1;
            if 2 * dist[u] as usize + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if parent[u] != w {
                    best = best.min((dist[u] + dist[w] + 1) as usize);
                    if dist[w] == dist[u] {
                        break 'bfs;
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Biconnected components as vertex sets, together with the articulation
/// points. Isolated vertices form no block.
pub fn blocks_and_cut_vertices(g: &Graph) -> (Vec<Vec<Vertex>>, Vec<Vertex>) {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut timer = 0;
    // frame: (vertex, parent, next neighbour index, child count)
    let mut stack: Vec<(Vertex, Vertex, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0, 0));
        while let Some(top) = stack.last_mut() {
            let (u, p, i) = (top.0, top.1, top.2);
            if i < g.degree(u) {
                top.2 += 1;
                let w = g.neighbors(u)[i];
                if disc[w] == usize::MAX {
                    top.3 += 1;
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, 0, 0));
                } else if w != p && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
                continue;
            }
            let (u, p, _, children) = stack.pop().unwrap();
            if p == usize::MAX {
                if children >= 2 {
                    is_cut[u] = true;
                }
                continue;
            }
            low[p] = low[p].min(low[u]);
            if low[u] >= disc[p] {
                // the root is handled by its child count when it is popped
                if stack.last().is_some_and(|f| f.1 != usize::MAX) {
                    is_cut[p] = true;
                }
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push(e.0);
                    block.push(e.1);
                    if e == (p, u) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                blocks.push(block);
            }
        }
    }
    blocks.sort();
    let cuts = (0..n).filter(|&v| is_cut[v]).collect();
    (blocks, cuts)
}

pub fn cut_vertices(g: &Graph) -> Vec<Vertex> {
    blocks_and_cut_vertices(g).1
}

/// Every block is a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    blocks_and_cut_vertices(g).0.iter().all(|b| g.is_clique(b))
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.m() + 1 == g.n() && g.is_connected()
}

pub fn leaves(g: &Graph) -> Vec<Vertex> {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        g(10, &e)
    }

    #[test]
    fn petersen_metrics() {
        let m = metrics(&petersen());
        assert_eq!(m.girth, Girth::Finite(5));
        assert_eq!((m.diameter, m.radius), (Some(2), Some(2)));
        assert_eq!((m.min_degree, m.max_degree), (3, 3));
        assert!(m.cut_vertices.is_empty());
        assert!(m.simplicial.is_empty());
    }

    #[test]
    fn tree_metrics() {
        // spider with legs of length 1, 2, 3 from centre 0
        let t = g(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]);
        let m = metrics(&t);
        assert_eq!(m.girth, Girth::Infinite);
        assert_eq!(m.cut_vertices, vec![0, 2, 4, 5]);
        assert_eq!(m.simplicial, vec![1, 3, 6]);
        let (blocks, _) = blocks_and_cut_vertices(&t);
        assert_eq!(blocks.len(), 6);
        assert!(is_block_graph(&t));
    }

    #[test]
    fn k33_metrics() {
        let k33 = Graph::empty(3).join(&Graph::empty(3));
        let m = metrics(&k33);
        assert_eq!(m.girth, Girth::Finite(4));
        assert_eq!(m.diameter, Some(2));
    }

    #[test]
    fn disconnected_extents() {
        let h = g(5, &[(0, 1), (1, 2), (3, 4)]);
        let m = metrics(&h);
        assert!(!m.connected);
        assert_eq!(m.diameter, None);
        assert_eq!(m.components[0].diameter, 2);
        assert_eq!(m.components[0].radius, 1);
        assert_eq!(m.components[1].diameter, 1);
        assert_eq!(m.cut_vertices, vec![1]);
    }

    #[test]
    fn blocks_of_two_triangles_sharing_a_vertex() {
        let h = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let (blocks, cuts) = blocks_and_cut_vertices(&h);
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(cuts, vec![2]);
        assert!(is_block_graph(&h));
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!is_block_graph(&c4));
    }

    #[test]
    fn cut_vertex_at_root_with_two_children() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(cut_vertices(&star), vec![0]);
        let p2 = g(2, &[(0, 1)]);
        assert!(cut_vertices(&p2).is_empty());
    }

    #[test]
    fn boundary_of_pendant_path() {
        // x=7 - y=6, y ~ u2,u3,u4 (1,2,3), path u1..u6 = 0..5
        let h = g(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 1), (6, 2), (6, 3), (7, 6)]);
        assert_eq!(boundary(&h, 7), vec![0, 2, 5]);
    }

    #[test]
    fn girth_of_odd_and_even_cycles() {
        for n in 3..12 {
            let c = g(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>());
            assert_eq!(girth(&c), Girth::Finite(n));
        }
    }
}
