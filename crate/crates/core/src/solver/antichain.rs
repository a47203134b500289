//! Maximum antichains through Dilworth/König.
//!
//! The strict order is split into a bipartite graph with a left and a right
//! copy of each ground element and an edge `u_L v_R` whenever `u < v`. A
//! maximum matching (Hopcroft–Karp) gives a minimum vertex cover by König's
//! construction; the elements with neither copy in the cover form a maximum
//! antichain of size `|ground| - |matching|`.

use crate::bitset::Bitset;
use crate::graph::Vertex;

use super::order::GeodesicOrder;

const NONE: usize = usize::MAX;
const INF: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antichain {
    /// Pairwise incomparable elements, ascending.
    pub vertices: Vec<Vertex>,
    pub matching_size: usize,
    pub ground_size: usize,
}

/// Maximum matching of the split bipartite graph; `mate_left[u]` is the
/// right copy matched to `u_L`.
#[derive(Clone, Debug)]
pub struct SplitMatching {
    pub mate_left: Vec<usize>,
    pub mate_right: Vec<usize>,
    pub size: usize,
}

impl SplitMatching {
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.mate_left.iter().enumerate().filter(|(_, &v)| v != NONE).map(|(u, &v)| (u, v))
    }
}

struct Phase<'a> {
    order: &'a GeodesicOrder,
    layer: &'a [u32],
    good: Vec<Bitset>,
    found: u32,
}

impl Phase<'_> {
    fn augment(&mut self, u: usize, m: &mut SplitMatching) -> bool {
        let next = self.layer[u] + 1;
        let row = self.order.successor_words(u);
        for i in 0..row.len() {
            loop {
                let bits = row[i] & self.good[next as usize].words()[i];
                if bits == 0 {
                    break;
                }
                let v = i * 64 + bits.trailing_zeros() as usize;
                self.good[next as usize].remove(v);
                let w = m.mate_right[v];
                if next == self.found {
                    debug_assert_eq!(w, NONE);
                } else if !self.augment(w, m) {
                    continue;
                }
                m.mate_left[u] = v;
                m.mate_right[v] = u;
                return true;
            }
        }
        false
    }
}

/// Hopcroft–Karp over the successor bitsets. Greedy initialisation scans the
/// ground set in ascending id order, so the result is deterministic.
pub fn split_matching(order: &GeodesicOrder) -> SplitMatching {
    let n = order.n();
    let members = order.members();
    let mut m = SplitMatching { mate_left: vec![NONE; n], mate_right: vec![NONE; n], size: 0 };
    let ground = Bitset::from_iter_with_len(n, members.iter().copied());

    let mut free_right = ground.clone();
    for &u in members {
        let hit = order
            .successor_words(u)
            .iter()
            .zip(free_right.words())
            .enumerate()
            .find_map(|(i, (a, b))| (a & b != 0).then(|| i * 64 + (a & b).trailing_zeros() as usize));
        if let Some(v) = hit {
            free_right.remove(v);
            m.mate_left[u] = v;
            m.mate_right[v] = u;
            m.size += 1;
        }
    }

    let mut layer = vec![INF; n];
    let mut queue = Vec::with_capacity(members.len());
    loop {
        queue.clear();
        for &u in members {
            if m.mate_left[u] == NONE {
                layer[u] = 0;
                queue.push(u);
            } else {
                layer[u] = INF;
            }
        }
        let mut unseen = ground.clone();
        let mut found = INF;
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if layer[u] + 1 >= found {
                continue;
            }
            let row = order.successor_words(u);
            for i in 0..row.len() {
                let mut bits = row[i] & unseen.words()[i];
                while bits != 0 {
                    let v = i * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    unseen.remove(v);
                    let w = m.mate_right[v];
                    if w == NONE {
                        found = found.min(layer[u] + 1);
                    } else if layer[w] == INF {
                        layer[w] = layer[u] + 1;
                        queue.push(w);
                    }
                }
            }
        }
        if found == INF {
            break;
        }
        let mut good = vec![Bitset::new(n); found as usize + 1];
        for &v in members {
            let w = m.mate_right[v];
            if w == NONE {
                good[found as usize].insert(v);
            } else if layer[w] != INF && layer[w] < found {
                good[layer[w] as usize].insert(v);
            }
        }
        let mut phase = Phase { order, layer: &layer, good, found };
        let mut gained = 0;
        for &u in members {
            if m.mate_left[u] == NONE && layer[u] == 0 && phase.augment(u, &mut m) {
                gained += 1;
            }
        }
        debug_assert!(gained > 0);
        m.size += gained;
    }
    m
}

/// A maximum antichain of `order` together with the matching certificate.
pub fn max_antichain(order: &GeodesicOrder) -> Antichain {
    let m = split_matching(order);
    antichain_from_matching(order, &m)
}

/// König: alternate from the free left copies; the elements whose left copy
/// is reached and whose right copy is not form the antichain.
pub fn antichain_from_matching(order: &GeodesicOrder, m: &SplitMatching) -> Antichain {
    let n = order.n();
    let members = order.members();
    let mut reached_left = vec![false; n];
    let mut unseen = Bitset::from_iter_with_len(n, members.iter().copied());
    let mut queue: Vec<usize> = members.iter().copied().filter(|&u| m.mate_left[u] == NONE).collect();
    for &u in &queue {
        reached_left[u] = true;
    }
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let row = order.successor_words(u);
        for i in 0..row.len() {
            let mut bits = row[i] & unseen.words()[i];
            while bits != 0 {
                let v = i * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                unseen.remove(v);
                let w = m.mate_right[v];
                if w != NONE && !reached_left[w] {
                    reached_left[w] = true;
                    queue.push(w);
                }
            }
        }
    }
    let vertices = members.iter().copied().filter(|&v| reached_left[v] && unseen.contains(v)).collect();
    Antichain { vertices, matching_size: m.size, ground_size: members.len() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};
    use crate::solver::order::geodesic_order;

    #[test]
    fn chain_gives_singleton() {
        let o = geodesic_order(&path(7), 0).unwrap();
        let a = max_antichain(&o);
        assert_eq!(a.vertices.len(), 1);
        assert_eq!(a.matching_size, 5);
    }

    #[test]
    fn empty_relation_gives_everything() {
        let o = geodesic_order(&complete(6), 2).unwrap();
        let a = max_antichain(&o);
        assert_eq!(a.vertices, vec![0, 1, 3, 4, 5]);
        assert_eq!(a.matching_size, 0);
    }

    #[test]
    fn six_cycle_width_two() {
        // brute force over the 2^5 subsets of {1..5}
        let o = geodesic_order(&cycle(6), 0).unwrap();
        let mut width = 0;
        for mask in 0u32..32 {
            let s: Vec<usize> = (1..6).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            if s.iter().all(|&a| s.iter().all(|&b| !o.less(a, b))) {
                width = width.max(s.len());
            }
        }
        assert_eq!(width, 2);
        let a = max_antichain(&o);
        assert_eq!(a.vertices.len(), 2);
        assert_eq!(a.vertices.len() + a.matching_size, a.ground_size);
    }

    #[test]
    fn matching_uses_only_relations() {
        let o = geodesic_order(&cycle(9), 4).unwrap();
        let m = split_matching(&o);
        assert!(m.pairs().all(|(u, v)| o.less(u, v)));
        assert_eq!(m.pairs().count(), m.size);
    }
}
