//! Polynomial-time computation of `p_x(G)` and `vp(G)`.
//!
//! For a root `x` in a component `C`, the largest `x`-position set inside `C`
//! is a maximum antichain of the geodesic order on `C - x` (equivalently a
//! maximum independent set of the comparability graph `G*_x - x`); every
//! vertex outside `C` can be added freely.

mod antichain;
mod order;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use antichain::{antichain_from_matching, max_antichain, split_matching, Antichain, SplitMatching};
pub use order::{geodesic_order, geodesic_order_by_distances, queue_construction_edges, GeodesicOrder};

use crate::distance::{bfs_into, UNREACHABLE};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Polynomial,
    Oracle,
}

/// Agreement between the solver and the exact search on one root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub oracle_value: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionResult {
    pub n: usize,
    pub root: Vertex,
    #[serde(rename = "p_x")]
    pub value: usize,
    pub witness: Vec<Vertex>,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<CrossCheck>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Re-derive every certificate: order invariants, the Dilworth count,
    /// pairwise incomparability, agreement on the reduced graph, and the
    /// independent witness check.
    pub audit: bool,
    /// Spread the roots of [`solve_all`] over the rayon pool.
    pub parallel: bool,
}

impl SolveOptions {
    pub fn audited() -> Self {
        SolveOptions { audit: true, parallel: false }
    }

    pub fn parallel() -> Self {
        SolveOptions { audit: false, parallel: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VpSummary {
    pub n: usize,
    pub vp: usize,
    pub vp_minus: usize,
    pub argmax: Option<Vertex>,
    pub argmin: Option<Vertex>,
    pub per_vertex: Vec<PositionResult>,
}

impl VpSummary {
    pub fn values(&self) -> Vec<usize> {
        self.per_vertex.iter().map(|r| r.value).collect()
    }
}

/// Reusable per-thread state for solving many roots of one graph.
pub struct Solver<'g> {
    g: &'g Graph,
    order: GeodesicOrder,
    opts: SolveOptions,
}

impl<'g> Solver<'g> {
    pub fn new(g: &'g Graph, opts: SolveOptions) -> Self {
        Solver { g, order: GeodesicOrder::with_capacity(g.n()), opts }
    }

    pub fn solve(&mut self, x: Vertex) -> Result<PositionResult> {
        let g = self.g;
        self.order.rebuild(g, x)?;
        let order = &self.order;
        let m = split_matching(order);
        let ac = antichain_from_matching(order, &m);

        let mut witness = ac.vertices.clone();
        if order.members().is_empty() {
            witness.push(x);
        }
        let dist = order.raw_dist();
        witness.extend((0..g.n()).filter(|&v| dist[v] == UNREACHABLE));
        witness.sort_unstable();

        if self.opts.audit {
            audit(g, order, &m, &ac)?;
        }
        if !verify_position_set(g, x, &witness) {
            return Err(Error::Invariant(format!("witness for root {x} is not an {x}-position set")));
        }
        Ok(PositionResult {
            n: g.n(),
            root: x,
            value: witness.len(),
            witness,
            method: Method::Polynomial,
            cross_check: None,
        })
    }
}

fn audit(g: &Graph, order: &GeodesicOrder, m: &SplitMatching, ac: &Antichain) -> Result<()> {
    let x = order.root();
    order.check_invariants()?;
    if !m.pairs().all(|(u, v)| order.less(u, v)) {
        return Err(Error::Invariant(format!("root {x}: matching uses a non-relation")));
    }
    if ac.vertices.len() + ac.matching_size != ac.ground_size {
        return Err(Error::Invariant(format!(
            "root {x}: antichain {} + matching {} != ground {}",
            ac.vertices.len(),
            ac.matching_size,
            ac.ground_size
        )));
    }
    for (i, &u) in ac.vertices.iter().enumerate() {
        for &v in &ac.vertices[i + 1..] {
            if order.comparable(u, v) {
                return Err(Error::Invariant(format!("root {x}: antichain holds comparable {u}, {v}")));
            }
        }
    }
    let reduced = reduced_graph(g, x)?;
    let mut inner = Solver::new(&reduced, SolveOptions::default());
    let again = inner.solve(x)?;
    let here = ac.vertices.len().max(usize::from(order.members().is_empty())) + g.n() - order.component_size();
    if again.value != here {
        return Err(Error::Invariant(format!(
            "root {x}: reduced graph gives {} but the graph gives {here}",
            again.value
        )));
    }
    Ok(())
}

/// `G` with every edge joining two vertices equidistant from `x` removed.
/// Distances from `x`, and with them the geodesic order, are unchanged.
pub fn reduced_graph(g: &Graph, x: Vertex) -> Result<Graph> {
    g.check_vertex(x)?;
    let mut d = vec![UNREACHABLE; g.n()];
    bfs_into(g, x, &mut d);
    Ok(g.filter_edges(|u, v| d[u] != d[v]))
}

/// `p_x(G)` with a maximum witness.
pub fn solve_px(g: &Graph, x: Vertex) -> Result<PositionResult> {
    solve_px_with(g, x, SolveOptions::default())
}

pub fn solve_px_with(g: &Graph, x: Vertex, opts: SolveOptions) -> Result<PositionResult> {
    Solver::new(g, opts).solve(x)
}

/// `p_x` for every root, with `vp` and `vp⁻`. Ties in the arg-extrema go to
/// the smallest id.
pub fn solve_all(g: &Graph) -> Result<VpSummary> {
    solve_all_with(g, SolveOptions::parallel())
}

pub fn solve_all_with(g: &Graph, opts: SolveOptions) -> Result<VpSummary> {
    let n = g.n();
    let per_vertex: Vec<PositionResult> = if opts.parallel {
        (0..n)
            .into_par_iter()
            .map_init(|| Solver::new(g, opts), |s, x| s.solve(x))
            .collect::<Result<_>>()?
    } else {
        let mut s = Solver::new(g, opts);
        (0..n).map(|x| s.solve(x)).collect::<Result<_>>()?
    };
    let argmax = per_vertex.iter().rev().max_by_key(|r| r.value).map(|r| r.root);
    let argmin = per_vertex.iter().min_by_key(|r| r.value).map(|r| r.root);
    Ok(VpSummary {
        n,
        vp: argmax.map_or(0, |v| per_vertex[v].value),
        vp_minus: argmin.map_or(0, |v| per_vertex[v].value),
        argmax,
        argmin,
        per_vertex,
    })
}

pub fn vertex_position_number(g: &Graph) -> Result<usize> {
    Ok(solve_all(g)?.vp)
}

pub fn lower_vertex_position_number(g: &Graph) -> Result<usize> {
    Ok(solve_all(g)?.vp_minus)
}

/// Whether `s` is an `x`-position set: no vertex of `s` other than `y` lies
/// on an `x,y`-geodesic for any `y` in `s`. Runs one BFS and one pass over
/// the geodesic DAG. Repeated entries are treated as one; out-of-range
/// entries make the answer `false`.
pub fn verify_position_set(g: &Graph, x: Vertex, s: &[Vertex]) -> bool {
    let n = g.n();
    if x >= n || s.iter().any(|&v| v >= n) {
        return false;
    }
    let mut dist = vec![UNREACHABLE; n];
    let bfs = bfs_into(g, x, &mut dist);
    let mut in_s = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    // covered[v]: some vertex of s other than v is on an x,v-geodesic
    let mut covered = vec![false; n];
    for &v in &bfs {
        if v != x {
            let dv = dist[v];
            covered[v] = g.neighbors(v).iter().any(|&p| dist[p] + 1 == dv && (in_s[p] || covered[p]));
        }
        if in_s[v] && covered[v] {
            return false;
        }
    }
    true
}

/// The boundary set `∂(x)`, always an `x`-position set.
pub fn boundary_position_set(g: &Graph, x: Vertex) -> Result<Vec<Vertex>> {
    g.check_vertex(x)?;
    Ok(crate::metrics::boundary(g, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_multipartite, cycle, path};

    #[test]
    fn paths_and_cycles() {
        assert_eq!(solve_px(&path(6), 0).unwrap().value, 1);
        assert_eq!(solve_px(&path(6), 2).unwrap().value, 2);
        assert_eq!(solve_px(&cycle(7), 0).unwrap().value, 2);
        assert_eq!(solve_px(&cycle(6), 0).unwrap().value, 2);
        assert_eq!(solve_px(&complete(5), 1).unwrap().value, 4);
    }

    #[test]
    fn isolated_root_counts_itself() {
        let g = Graph::empty(1);
        let r = solve_px(&g, 0).unwrap();
        assert_eq!((r.value, r.witness), (1, vec![0]));
        let g = path(3).disjoint_union(&Graph::empty(1));
        let r = solve_px(&g, 3).unwrap();
        assert_eq!(r.value, 4);
        let r = solve_px(&g, 0).unwrap();
        assert_eq!(r.witness, vec![2, 3]);
    }

    #[test]
    fn complete_bipartite() {
        let g = complete_multipartite(&[3, 5]);
        let s = solve_all(&g).unwrap();
        assert_eq!(s.values(), vec![5, 5, 5, 4, 4, 4, 4, 4]);
        assert_eq!((s.vp, s.vp_minus, s.argmax, s.argmin), (5, 4, Some(0), Some(3)));
    }

    #[test]
    fn verify_catches_violations() {
        let g = path(5);
        assert!(verify_position_set(&g, 0, &[3]));
        assert!(!verify_position_set(&g, 0, &[1, 3]));
        assert!(!verify_position_set(&g, 2, &[2, 4]));
        assert!(verify_position_set(&g, 2, &[1, 3]));
        assert!(verify_position_set(&g, 2, &[]));
        assert!(verify_position_set(&g, 2, &[2]));
        assert!(!verify_position_set(&g, 2, &[7]));
        let c = cycle(4);
        assert!(verify_position_set(&c, 0, &[1, 3]));
        assert!(!verify_position_set(&c, 0, &[1, 2]));
    }

    #[test]
    fn audit_and_sequential_agree() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 6), (6, 4), (1, 3)]).unwrap();
        let a = solve_all_with(&g, SolveOptions::audited()).unwrap();
        let b = solve_all(&g).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn json_shape() {
        let r = solve_px(&path(3), 1).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["p_x"], 2);
        assert_eq!(v["method"], "polynomial");
        assert_eq!(v["n"], 3);
        assert!(v.get("cross_check").is_none());
    }
}
