//! Exhaustive census of small unlabelled graphs.
//!
//! Graphs on `n` vertices are produced by attaching a new vertex to every
//! representative on `n - 1` vertices with every possible neighbourhood, then
//! discarding isomorphic copies through a canonical labelling computed by
//! individualisation and colour refinement.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_CENSUS_N: usize = 8;

/// Canonical labelling supports graphs up to this order.
pub const MAX_CANON_N: usize = 16;

type Cells = Vec<Vec<usize>>;

/// Upper-triangle adjacency code of `g` under the vertex order `order`.
fn code(rows: &[u32], order: &[usize]) -> u128 {
    let mut c = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            c = (c << 1) | (rows[order[i]] >> order[j] & 1) as u128;
        }
    }
    c
}

fn refine(rows: &[u32], mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<u32> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (rows[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|k| k.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(rows: &[u32], cells: Cells, best: &mut Option<(u128, Vec<usize>)>) {
    let cells = refine(rows, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let c = code(rows, &order);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            *best = Some((c, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut split = cells.clone();
        let rest: Vec<usize> = split[target].iter().copied().filter(|&w| w != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        search(rows, split, best);
    }
}

/// Canonical code and canonical vertex order (`order[i]` is the vertex placed
/// at position `i`). Isomorphic graphs share the same code.
pub fn canonical_form(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.n();
    assert!(n <= MAX_CANON_N, "canonical form supports n <= {MAX_CANON_N}");
    if n == 0 {
        return (0, Vec::new());
    }
    let rows: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    let mut best = None;
    search(&rows, vec![(0..n).collect()], &mut best);
    best.unwrap()
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permute(&perm)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && {
        let (mut da, mut db) = (a.degrees(), b.degrees());
        da.sort_unstable();
        db.sort_unstable();
        da == db
    } && canonical_form(a).0 == canonical_form(b).0
}

fn extend(reps: &[Graph], n: usize) -> Vec<Graph> {
    let mut seen: HashSet<u128> = HashSet::new();
    let mut out: Vec<(u128, Graph)> = Vec::new();
    for h in reps {
        let base: Vec<(usize, usize)> = h.edges().collect();
        for mask in 0u32..(1 << (n - 1)) {
            let mut edges = base.clone();
            edges.extend((0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
            let g = Graph::from_edges(n, edges).unwrap();
            let (c, _) = canonical_form(&g);
            if seen.insert(c) {
                out.push((c, canonical_graph(&g)));
            }
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out.into_iter().map(|(_, g)| g).collect()
}

static ALL: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();

fn all_tables() -> &'static Vec<Vec<Graph>> {
    ALL.get_or_init(|| {
        let mut t = vec![vec![Graph::empty(0)], vec![Graph::empty(1)]];
        for n in 2..=MAX_CENSUS_N {
            let next = extend(&t[n - 1], n);
            t.push(next);
        }
        t
    })
}

fn check_range(n: usize) -> Result<()> {
    if (1..=MAX_CENSUS_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::CensusRange(n))
    }
}

/// Every graph on `n` unlabelled vertices (connected or not), once each.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_range(n)?;
    Ok(all_tables()[n].iter().cloned())
}

/// Every connected graph on `n` unlabelled vertices, once each.
pub fn enumerate_small_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(all_graphs(n)?.filter(Graph::is_connected))
}

/// Connected graphs on `1..=max_n` vertices.
pub fn connected_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_small_connected(n)?);
    }
    Ok(out)
}

/// All graphs on `1..=max_n` vertices.
pub fn all_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(all_graphs(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    #[test]
    fn tiny_census() {
        let g3: Vec<Graph> = enumerate_small_connected(3).unwrap().collect();
        assert_eq!(g3.len(), 2);
        assert!(g3.iter().any(|g| are_isomorphic(g, &path(3))));
        assert!(g3.iter().any(|g| are_isomorphic(g, &cycle(3))));
        assert_eq!(enumerate_small_connected(1).unwrap().count(), 1);
        assert!(enumerate_small_connected(0).is_err());
        assert!(enumerate_small_connected(9).is_err());
    }

    #[test]
    fn isomorphism_is_label_free() {
        let p = path(6);
        let shuffled = p.permute(&[3, 5, 0, 2, 4, 1]);
        assert_ne!(p, shuffled);
        assert!(are_isomorphic(&p, &shuffled));
        assert_eq!(canonical_graph(&p), canonical_graph(&shuffled));
        assert!(!are_isomorphic(&cycle(6), &crate::generators::complete_multipartite(&[3, 3])));
    }
}
