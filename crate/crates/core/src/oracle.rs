//! Exact exponential searches used as ground truth.
//!
//! Nothing here touches the solver: distances come from Floyd–Warshall and
//! every definition is checked literally on vertex bitmasks, so graphs are
//! limited to 64 vertices and, by default, much less.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::solver::{Method, PositionResult};

/// Hard limit of the bitmask representation.
pub const MASK_LIMIT: usize = 64;

#[derive(Clone, Debug)]
pub struct OracleBudget {
    pub max_vertices_px: usize,
    pub max_vertices_gp: usize,
    pub max_vertices_alpha: usize,
    /// Search-tree nodes per call.
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices_px: 12,
            max_vertices_gp: 10,
            max_vertices_alpha: 20,
            max_nodes: 200_000_000,
            time_limit: None,
        }
    }
}

impl OracleBudget {
    /// Raise (or lower) every vertex limit to `n`, capped at [`MASK_LIMIT`].
    pub fn with_max_vertices(mut self, n: usize) -> Self {
        let n = n.min(MASK_LIMIT);
        self.max_vertices_px = n;
        self.max_vertices_gp = n;
        self.max_vertices_alpha = n;
        self
    }

    pub fn with_time_limit(mut self, t: Duration) -> Self {
        self.time_limit = Some(t);
        self
    }
}

const INF: u32 = u32::MAX / 4;

/// All-pairs distances by Floyd–Warshall; unreachable pairs hold a large
/// sentinel.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
        for &w in g.neighbors(v) {
            row[w] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i][k];
            if dik == INF {
                continue;
            }
            for j in 0..n {
                let via = dik + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// `z` lies on some `u,v`-geodesic.
fn between(d: &[Vec<u32>], u: usize, z: usize, v: usize) -> bool {
    d[u][v] < INF && d[u][z] < INF && d[u][z] + d[z][v] == d[u][v]
}

struct Search {
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    what: &'static str,
}

impl Search {
    fn new(budget: &OracleBudget, what: &'static str) -> Self {
        Search {
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            what,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded(format!("{} search passed {} nodes", self.what, self.max_nodes)));
        }
        if self.nodes & 1023 == 0 {
            if let Some(t) = self.deadline {
                if Instant::now() > t {
                    return Err(Error::BudgetExceeded(format!("{} search hit its time limit", self.what)));
                }
            }
        }
        Ok(())
    }
}

fn check_size(g: &Graph, limit: usize, what: &str) -> Result<()> {
    let limit = limit.min(MASK_LIMIT);
    if g.n() > limit {
        return Err(Error::BudgetExceeded(format!(
            "{what} oracle is limited to {limit} vertices, graph has {}",
            g.n()
        )));
    }
    Ok(())
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn to_vertices(mask: u64) -> Vec<Vertex> {
    bits(mask).collect()
}

/// Maximum independent set of the conflict graph `conf` inside `cand`, by
/// branch and bound with a greedy clique-cover bound. Stops as soon as
/// `ceiling` is reached.
struct Mis<'a> {
    conf: &'a [u64],
    ceiling: usize,
    best: (usize, u64),
    search: Search,
}

impl Mis<'_> {
    fn cover_bound(&self, cand: u64) -> usize {
        let mut rest = cand;
        let mut k = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut pool = rest & self.conf[v];
            while pool != 0 {
                let w = pool.trailing_zeros() as usize;
                rest &= !(1 << w);
                pool &= self.conf[w] & rest;
            }
            k += 1;
        }
        k
    }

    fn run(&mut self, mut cand: u64, mut chosen: u64, mut size: usize) -> Result<()> {
        self.search.tick()?;
        // vertices without conflicts inside the candidates are always taken
        loop {
            let free = bits(cand).find(|&v| self.conf[v] & cand == 0);
            match free {
                Some(v) => {
                    cand &= !(1 << v);
                    chosen |= 1 << v;
                    size += 1;
                }
                None => break,
            }
        }
        if size > self.best.0 {
            self.best = (size, chosen);
        }
        if cand == 0 || self.best.0 >= self.ceiling {
            return Ok(());
        }
        if size + cand.count_ones() as usize <= self.best.0 || size + self.cover_bound(cand) <= self.best.0 {
            return Ok(());
        }
        let v = bits(cand).max_by_key(|&v| (self.conf[v] & cand).count_ones()).unwrap();
        self.run(cand & !self.conf[v] & !(1 << v), chosen | 1 << v, size + 1)?;
        if self.best.0 >= self.ceiling {
            return Ok(());
        }
        self.run(cand & !(1 << v), chosen, size)
    }
}

fn max_independent(conf: &[u64], cand: u64, ceiling: usize, search: Search) -> Result<u64> {
    let mut mis = Mis { conf, ceiling, best: (0, 0), search };
    mis.run(cand, 0, 0)?;
    Ok(mis.best.1)
}

/// `conf[a]` holds `b` when one of `a`, `b` lies on an `x`-geodesic to the
/// other, so `{a, b}` cannot both be in an `x`-position set.
fn px_conflicts(d: &[Vec<u32>], x: usize) -> Vec<u64> {
    let n = d.len();
    let mut conf = vec![0u64; n];
    for a in 0..n {
        for b in 0..n {
            if a != b && (between(d, x, a, b) || between(d, x, b, a)) {
                conf[a] |= 1 << b;
            }
        }
    }
    conf
}

fn eccentricity_in_component(d: &[Vec<u32>], x: usize) -> usize {
    d[x].iter().filter(|&&v| v < INF).max().copied().unwrap_or(0) as usize
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `p_x(G)` by branch and bound over vertex subsets, using the ceiling
/// `n - e(x)` and at most one vertex per chain of the geodesic relation.
pub fn oracle_px(g: &Graph, x: Vertex, budget: &OracleBudget) -> Result<PositionResult> {
    let witness = oracle_px_restricted(g, x, &vec![true; g.n()], budget)?;
    Ok(PositionResult {
        n: g.n(),
        root: x,
        value: witness.len(),
        witness,
        method: Method::Oracle,
        cross_check: None,
    })
}

/// A largest `x`-position set using only vertices with `allowed[v]`.
pub fn oracle_px_restricted(g: &Graph, x: Vertex, allowed: &[bool], budget: &OracleBudget) -> Result<Vec<Vertex>> {
    g.check_vertex(x)?;
    check_size(g, budget.max_vertices_px, "p_x")?;
    let n = g.n();
    let d = floyd_warshall(g);
    let conf = px_conflicts(&d, x);
    let cand = (0..n).filter(|&v| allowed.get(v).copied().unwrap_or(false)).fold(0u64, |m, v| m | 1 << v);
    let ceiling = n - eccentricity_in_component(&d, x);
    let best = max_independent(&conf, cand, ceiling, Search::new(budget, "p_x"))?;
    Ok(to_vertices(best))
}

/// Whether `s` is an `x`-position set, straight from the definition.
pub fn is_position_set_by_definition(d: &[Vec<u32>], x: usize, s: &[usize]) -> bool {
    s.iter().all(|&y| s.iter().all(|&z| z == y || !between(d, x, z, y)))
}

/// `p_x(G)` by trying every subset with no pruning; for checking the
/// pruned search on tiny graphs.
pub fn oracle_px_exhaustive(g: &Graph, x: Vertex) -> Result<usize> {
    g.check_vertex(x)?;
    check_size(g, 16, "exhaustive p_x")?;
    let n = g.n();
    let d = floyd_warshall(g);
    let mut best = 0;
    for mask in 0u64..1 << n {
        let s = to_vertices(mask);
        if s.len() > best && is_position_set_by_definition(&d, x, &s) {
            best = s.len();
        }
    }
    Ok(best)
}

/// Every maximum `x`-position set, each sorted, in ascending mask order.
pub fn oracle_all_max_px_sets(g: &Graph, x: Vertex, budget: &OracleBudget) -> Result<Vec<Vec<Vertex>>> {
    g.check_vertex(x)?;
    check_size(g, budget.max_vertices_px.min(22), "all maximum p_x sets")?;
    let n = g.n();
    let d = floyd_warshall(g);
    let conf = px_conflicts(&d, x);
    let mut best = 0;
    let mut sets = Vec::new();
    for mask in 0u64..1 << n {
        let size = mask.count_ones() as usize;
        if size < best || bits(mask).any(|v| conf[v] & mask != 0) {
            continue;
        }
        if size > best {
            best = size;
            sets.clear();
        }
        sets.push(to_vertices(mask));
    }
    Ok(sets)
}

/// `(vp, vp⁻)` by running [`oracle_px`] at every root.
pub fn oracle_vp(g: &Graph, budget: &OracleBudget) -> Result<(usize, usize)> {
    let mut values = Vec::with_capacity(g.n());
    for x in 0..g.n() {
        values.push(oracle_px(g, x, budget)?.value);
    }
    Ok((values.iter().copied().max().unwrap_or(0), values.iter().copied().min().unwrap_or(0)))
}

/// A largest general position set: no three of its vertices on a common
/// geodesic.
pub fn oracle_gp(g: &Graph, budget: &OracleBudget) -> Result<Vec<Vertex>> {
    check_size(g, budget.max_vertices_gp, "gp")?;
    let n = g.n();
    let d = floyd_warshall(g);
    // bad[a * n + b]: the vertices c making {a, b, c} collinear
    let mut bad = vec![0u64; n * n];
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            for c in 0..n {
                if c != a && c != b && (between(&d, a, c, b) || between(&d, c, a, b) || between(&d, a, b, c)) {
                    bad[a * n + b] |= 1 << c;
                }
            }
        }
    }
    struct Gp<'a> {
        n: usize,
        bad: &'a [u64],
        best: u64,
        search: Search,
    }
    impl Gp<'_> {
        fn run(&mut self, cand: u64, chosen: u64) -> Result<()> {
            self.search.tick()?;
            let size = chosen.count_ones();
            if size > self.best.count_ones() {
                self.best = chosen;
            }
            if cand == 0 || size + cand.count_ones() <= self.best.count_ones() {
                return Ok(());
            }
            let v = cand.trailing_zeros() as usize;
            let rest = cand & !(1 << v);
            let keep = bits(chosen).fold(rest, |m, s| m & !self.bad[v * self.n + s]);
            self.run(keep, chosen | 1 << v)?;
            self.run(rest, chosen)
        }
    }
    let mut s = Gp { n, bad: &bad, best: 0, search: Search::new(budget, "gp") };
    s.run(full_mask(n), 0)?;
    Ok(to_vertices(s.best))
}

/// Independence number. Bipartite graphs go through König with a plain
/// augmenting-path matching and are not subject to the vertex limit.
pub fn oracle_alpha(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    let n = g.n();
    if let Some(side) = g.bipartition() {
        let mut mate: Vec<Option<usize>> = vec![None; n];
        let mut size = 0;
        for u in (0..n).filter(|&u| !side[u]) {
            let mut seen = vec![false; n];
            if kuhn(g, u, &mut mate, &mut seen) {
                size += 1;
            }
        }
        return Ok(n - size);
    }
    check_size(g, budget.max_vertices_alpha, "alpha")?;
    let conf: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
    let best = max_independent(&conf, full_mask(n), n, Search::new(budget, "alpha"))?;
    Ok(best.count_ones() as usize)
}

fn kuhn(g: &Graph, u: usize, mate: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &v in g.neighbors(u) {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if mate[v].is_none_or(|w| kuhn(g, w, mate, seen)) {
            mate[v] = Some(u);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_multipartite, cycle, kneser, path};

    fn petersen() -> Graph {
        kneser(5, 2).graph
    }

    #[test]
    fn distances() {
        let d = floyd_warshall(&cycle(6));
        assert_eq!(d[0], vec![0, 1, 2, 3, 2, 1]);
        let d = floyd_warshall(&path(2).disjoint_union(&path(1)));
        assert!(d[0][2] >= INF);
    }

    #[test]
    fn px_small_cases() {
        let b = OracleBudget::default();
        assert_eq!(oracle_px(&path(5), 0, &b).unwrap().value, 1);
        assert_eq!(oracle_px(&path(5), 2, &b).unwrap().value, 2);
        assert_eq!(oracle_px(&Graph::empty(1), 0, &b).unwrap().witness, vec![0]);
        assert_eq!(oracle_px(&complete(4), 0, &b).unwrap().value, 3);
        assert_eq!(oracle_px(&complete_multipartite(&[3, 5]), 0, &b).unwrap().value, 5);
    }

    #[test]
    fn pruned_matches_exhaustive() {
        let b = OracleBudget::default();
        for g in [cycle(7), path(6), complete_multipartite(&[2, 2, 3])] {
            for x in 0..g.n() {
                assert_eq!(oracle_px(&g, x, &b).unwrap().value, oracle_px_exhaustive(&g, x).unwrap());
            }
        }
    }

    #[test]
    fn all_maximum_sets() {
        let sets = oracle_all_max_px_sets(&cycle(4), 0, &OracleBudget::default()).unwrap();
        assert_eq!(sets, vec![vec![1, 3]]);
        let sets = oracle_all_max_px_sets(&cycle(5), 0, &OracleBudget::default()).unwrap();
        assert_eq!(sets, vec![vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4]]);
    }

    #[test]
    fn restricted_search() {
        let g = cycle(4);
        let w = oracle_px_restricted(&g, 0, &[true, false, true, true], &OracleBudget::default()).unwrap();
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn general_position_and_alpha() {
        let b = OracleBudget::default();
        assert_eq!(oracle_gp(&petersen(), &b).unwrap().len(), 6);
        assert_eq!(oracle_gp(&cycle(5), &b).unwrap().len(), 3);
        assert_eq!(oracle_gp(&path(4), &b).unwrap().len(), 2);
        assert_eq!(oracle_alpha(&petersen(), &b).unwrap(), 4);
        assert_eq!(oracle_alpha(&cycle(8), &b).unwrap(), 4);
        assert_eq!(oracle_alpha(&complete(5), &b).unwrap(), 1);
    }

    #[test]
    fn budgets_are_enforced() {
        let b = OracleBudget::default();
        assert!(matches!(oracle_px(&path(13), 0, &b), Err(Error::BudgetExceeded(_))));
        assert!(oracle_px(&path(13), 0, &b.clone().with_max_vertices(13)).is_ok());
        let tight = OracleBudget { max_nodes: 1, ..OracleBudget::default() };
        assert!(matches!(oracle_gp(&cycle(8), &tight), Err(Error::BudgetExceeded(_))));
    }
}
