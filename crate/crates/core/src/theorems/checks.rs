use crate::distance::bfs_layers;
use crate::generators::FamilySpec;
use crate::graph::{Graph, Vertex};
use crate::metrics::{boundary, is_block_graph, is_tree, leaves, Girth};
use crate::oracle::{oracle_all_max_px_sets, oracle_alpha, oracle_gp, oracle_px, oracle_px_restricted};
use crate::solver::verify_position_set;

use super::{Ctx, Origin, Outcome, TheoremCheck};

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn connected(c: &Ctx) -> bool {
    c.n() >= 1 && c.g().is_connected()
}

fn ecc(c: &Ctx, x: Vertex) -> usize {
    c.metrics().eccentricity[x] as usize
}

fn is_path(g: &Graph) -> bool {
    g.n() >= 1 && g.is_connected() && g.m() == g.n() - 1 && g.max_degree() <= 2
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && g.degrees().iter().all(|&d| d == 2)
}

fn has_universal(g: &Graph) -> bool {
    (0..g.n()).any(|v| g.degree(v) + 1 == g.n())
}

fn has_isolated(g: &Graph) -> bool {
    (0..g.n()).any(|v| g.degree(v) == 0)
}

fn is_complete(g: &Graph) -> bool {
    g.degrees().iter().all(|&d| d + 1 == g.n())
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `n >= 3k` and the common-neighbour count bound beats the degree:
/// `C(n,k) - C(n-2k+1,k) < C(n-k,k)`.
pub fn kneser_guard(n: usize, k: usize) -> bool {
    n >= 3 * k && binom(n, k) - binom(n + 1 - 2 * k, k) < binom(n - k, k)
}

fn kneser_params(c: &Ctx) -> Option<(usize, usize)> {
    match c.inst.family()? {
        FamilySpec::Kneser { n, k } => Some((*n, *k)),
        FamilySpec::Petersen => Some((5, 2)),
        _ => None,
    }
}

/// `K_{2,2,...,2}`: every degree is `n - 2`.
pub fn is_cocktail_party(g: &Graph) -> bool {
    g.n() >= 2 && g.degrees().iter().all(|&d| d + 2 == g.n())
}

/// A clique minus a non-empty, non-perfect matching, or `K_1` joined with a
/// disjoint union of at least two cliques.
pub fn is_near_complete(g: &Graph) -> bool {
    let n = g.n();
    let degs = g.degrees();
    let clique_minus_matching = degs.iter().all(|&d| d + 2 >= n)
        && degs.iter().any(|&d| d + 1 == n)
        && degs.iter().any(|&d| d + 2 == n);
    clique_minus_matching
        || (0..n).filter(|&v| degs[v] + 1 == n).any(|v| {
            let rest: Vec<Vertex> = (0..n).filter(|&w| w != v).collect();
            let h = g.induced_subgraph(&rest);
            let comps = h.components();
            comps.len() >= 2 && comps.iter().all(|c| h.is_clique(c))
        })
}

fn closed_nbhd_union_is_all(g: &Graph, u: Vertex, v: Vertex) -> bool {
    (0..g.n()).all(|w| w == u || w == v || g.has_edge(u, w) || g.has_edge(v, w))
}

/// Neighbours `v` of `u` that are cut vertices with `{u, v}` dominating.
pub fn dominating_cut_neighbours(g: &Graph, u: Vertex, cut: &[Vertex]) -> Vec<Vertex> {
    g.neighbors(u).iter().copied().filter(|v| cut.contains(v) && closed_nbhd_union_is_all(g, u, *v)).collect()
}

/// Every vertex at distance 2 from `u` has `v` as its only neighbour in `N(u)`.
pub fn sole_attachment(g: &Graph, u: Vertex, v: Vertex) -> bool {
    (0..g.n()).filter(|&w| w != u && !g.has_edge(u, w)).all(|w| {
        let mut common = g.neighbors(w).iter().filter(|&&z| g.has_edge(u, z));
        common.next() == Some(&v) && common.next().is_none()
    })
}

fn check(
    id: &'static str,
    statement: &'static str,
    default_corpus: &'static str,
    applies: fn(&Ctx) -> bool,
    holds: fn(&Ctx) -> Outcome,
) -> TheoremCheck {
    TheoremCheck { id, statement, default_corpus, note: None, applies, holds }
}

pub fn builtin_checks() -> Vec<TheoremCheck> {
    let mut v = vec![
        check(
            "lem-vp-vs-gp",
            "vp(G) >= gp(G) - 1",
            "n<=7+family:petersen;complete:6;cycle:9",
            |c| c.n() >= 1 && c.n() <= c.budget.max_vertices_gp,
            |c| {
                let vp = c.summary()?.vp;
                let gp = oracle_gp(c.g(), c.budget).map_err(|e| e.to_string())?.len();
                ensure(vp + 1 >= gp, || format!("vp = {vp}, gp = {gp}"))
            },
        ),
        check(
            "lem-degree-bound",
            "vp-(G) >= delta and vp(G) >= Delta",
            "n<=7",
            |c| c.n() >= 1,
            |c| {
                let s = c.summary()?;
                let (lo, hi) = (c.g().min_degree(), c.g().max_degree());
                ensure(s.vp_minus >= lo && s.vp >= hi, || {
                    format!("vp- = {}, delta = {lo}, vp = {}, Delta = {hi}", s.vp_minus, s.vp)
                })
            },
        ),
        check(
            "lem-eccentricity-lower",
            "p_x(G) * e(x) >= n - 1 for every vertex x of a connected graph",
            "n<=7+family:path:12;cycle:11;paperG_r:3",
            connected,
            |c| {
                let p = c.values()?;
                (0..c.n()).try_for_each(|x| {
                    ensure(p[x] * ecc(c, x) + 1 >= c.n(), || format!("p_{x} = {}, e({x}) = {}", p[x], ecc(c, x)))
                })
            },
        ),
        check(
            "cor-path-char",
            "vp-(G) = 1 iff G is a path; vp(G) = 1 iff G is K1 or K2",
            "n<=8+family:path:15",
            connected,
            |c| {
                let s = c.summary()?;
                let path = is_path(c.g());
                ensure((s.vp_minus == 1) == path, || format!("vp- = {}, path = {path}", s.vp_minus))?;
                ensure((s.vp == 1) == (c.n() <= 2), || format!("vp = {} on {} vertices", s.vp, c.n()))
            },
        ),
        check(
            "cor-join",
            "vp(G1 v G2) = max(n1 + Delta2, n2 + Delta1)",
            "joins:200,6,seed=7",
            |c| matches!(c.inst.origin, Origin::Join(..)),
            |c| {
                let Origin::Join(a, b) = &c.inst.origin else { unreachable!() };
                let want = (a.n() + b.max_degree()).max(b.n() + a.max_degree());
                let vp = c.summary()?.vp;
                ensure(vp == want, || format!("vp = {vp}, formula = {want}"))
            },
        ),
        check(
            "thm-delta-third",
            "vp-(G) >= ceil((Delta+1)/3); bipartite: vp-(G) >= ceil(Delta/2); both tight",
            "n<=7+family:deltaThird;deltaHalf;star:7;paperG_r:3",
            connected,
            |c| {
                let vpm = c.summary()?.vp_minus;
                let delta = c.g().max_degree();
                ensure(3 * vpm >= delta + 1, || format!("vp- = {vpm}, Delta = {delta}"))?;
                if c.g().is_bipartite() {
                    ensure(2 * vpm >= delta, || format!("bipartite: vp- = {vpm}, Delta = {delta}"))?;
                }
                match c.inst.family() {
                    Some(FamilySpec::DeltaThird) => {
                        ensure(vpm == (delta + 3) / 3, || format!("not tight: vp- = {vpm}, Delta = {delta}"))
                    }
                    Some(FamilySpec::DeltaHalfBipartite) => {
                        ensure(vpm == delta.div_ceil(2), || format!("not tight: vp- = {vpm}, Delta = {delta}"))
                    }
                    _ => Ok(()),
                }
            },
        ),
        check(
            "lem-eccentricity-upper",
            "p_x(G) <= n - e(x) for every vertex x of a connected graph",
            "n<=7+family:path:12;paperG_r:4",
            connected,
            |c| {
                let p = c.values()?;
                (0..c.n()).try_for_each(|x| {
                    ensure(p[x] + ecc(c, x) <= c.n(), || format!("p_{x} = {}, e({x}) = {}", p[x], ecc(c, x)))
                })
            },
        ),
        check(
            "thm-radius3",
            "vp(G) <= n - rad(G) - 1 when rad(G) >= 3",
            "n<=8+family:path:9;cycle:8;cycle:11;tree:25,seed=3;paperG_r:3",
            |c| connected(c) && c.metrics().radius.is_some_and(|r| r >= 3),
            |c| {
                let vp = c.summary()?.vp;
                let rad = c.metrics().radius.unwrap() as usize;
                ensure(vp + rad < c.n(), || format!("vp = {vp}, rad = {rad}"))
            },
        ),
        check(
            "prop-boundary",
            "the boundary of x is an x-position set (and is maximum at x in the tight example)",
            "n<=7+family:boundaryTight;petersen",
            connected,
            |c| {
                for x in 0..c.n() {
                    let b = boundary(c.g(), x);
                    ensure(verify_position_set(c.g(), x, &b), || format!("boundary of {x} = {b:?} is not an {x}-position set"))?;
                }
                if let (Some(FamilySpec::BoundaryTight), Some(x)) = (c.inst.family(), c.inst.vertex("x")) {
                    let (b, p) = (boundary(c.g(), x).len(), c.values()?[x]);
                    ensure(b == p, || format!("tight example: |boundary| = {b}, p_x = {p}"))?;
                }
                Ok(())
            },
        ),
        TheoremCheck {
            id: "thm-nordhaus-gaddum",
            statement: "n - 1 <= vp(G) + vp(complement) <= 2n - 1, with equality on the right iff G has an isolated or a universal vertex",
            default_corpus: "all:n<=6",
            note: Some("applies from n = 2: for n = 1 both G and its complement are K1 and the sum is 2"),
            applies: |c| c.n() >= 2,
            holds: |c| {
                let n = c.n();
                let a = c.summary()?.vp;
                let h = c.g().complement();
                let b = crate::solver::solve_all_with(&h, c.opts).map_err(|e| e.to_string())?.vp;
                ensure(n - 1 <= a + b && a + b < 2 * n, || format!("vp(G) = {a}, vp(co-G) = {b}, n = {n}"))?;
                let special = has_isolated(c.g()) || has_universal(c.g());
                ensure((a + b == 2 * n - 1) == special, || {
                    format!("vp(G) + vp(co-G) = {}, isolated or universal vertex = {special}", a + b)
                })
            },
        },
        check(
            "lem-constant-distance",
            "each component of G[S] lies at a single distance from x, for the x-position sets S found by the solver",
            "n<=7+family:paperFig1;paperG_r:3;petersen",
            connected,
            |c| {
                let s = c.summary()?;
                for r in &s.per_vertex {
                    let dist = bfs_layers(c.g(), r.root).map_err(|e| e.to_string())?;
                    let sub = c.g().induced_subgraph(&r.witness);
                    for comp in sub.components() {
                        let ds: Vec<Option<u32>> = comp.iter().map(|&i| dist.dist(r.witness[i])).collect();
                        ensure(ds.windows(2).all(|w| w[0] == w[1]), || {
                            format!("root {}: component {:?} at distances {ds:?}", r.root, comp.iter().map(|&i| r.witness[i]).collect::<Vec<_>>())
                        })?;
                    }
                }
                Ok(())
            },
        ),
        check(
            "thm-bipartite-alpha",
            "vp(G) <= alpha(G) for bipartite G",
            "n<=8+family:multipartite:3,4;multipartite:2,7;cycle:12;tree:30,seed=2;deltaHalf",
            |c| c.n() >= 1 && c.g().is_bipartite(),
            |c| {
                let vp = c.summary()?.vp;
                let alpha = oracle_alpha(c.g(), c.budget).map_err(|e| e.to_string())?;
                ensure(vp <= alpha, || format!("vp = {vp}, alpha = {alpha}"))
            },
        ),
        check(
            "thm-multipartite",
            "p_x = max(n - n_i, n_i - 1) for x in part i of a complete multipartite graph; vp = n - (smallest part)",
            "multipartite:n<=9",
            |c| matches!(c.inst.family(), Some(FamilySpec::CompleteMultipartite(_))),
            |c| {
                let Some(FamilySpec::CompleteMultipartite(parts)) = c.inst.family() else { unreachable!() };
                let n = c.n();
                let s = c.summary()?;
                let mut x = 0;
                for &ni in parts {
                    let want = (n - ni).max(ni - 1);
                    for v in x..x + ni {
                        ensure(s.per_vertex[v].value == want, || {
                            format!("parts {parts:?}: p_{v} = {}, formula = {want}", s.per_vertex[v].value)
                        })?;
                    }
                    x += ni;
                }
                let smallest = parts.iter().min().copied().unwrap_or(0);
                ensure(s.vp == n - smallest, || format!("parts {parts:?}: vp = {}", s.vp))
            },
        ),
        check(
            "thm-block-graph",
            "in a block graph p_x = s(G) - 1 at simplicial x and s(G) elsewhere",
            "blocks:100,8,seed=11+n<=7",
            |c| c.n() >= 2 && c.g().is_connected() && is_block_graph(c.g()),
            |c| {
                let simplicial = &c.metrics().simplicial;
                let s = simplicial.len();
                let p = c.values()?;
                (0..c.n()).try_for_each(|x| {
                    let want = if simplicial.contains(&x) { s - 1 } else { s };
                    ensure(p[x] == want, || format!("p_{x} = {}, s(G) = {s}", p[x]))
                })
            },
        ),
        check(
            "cor-trees",
            "in a tree with l leaves p_x = l - 1 at a leaf and l elsewhere",
            "trees:100,40,seed=5+n<=7",
            |c| c.n() >= 2 && is_tree(c.g()),
            |c| {
                let l = leaves(c.g());
                let p = c.values()?;
                (0..c.n()).try_for_each(|x| {
                    let want = if l.contains(&x) { l.len() - 1 } else { l.len() };
                    ensure(p[x] == want, || format!("p_{x} = {}, leaves = {}", p[x], l.len()))
                })
            },
        ),
        check(
            "thm-girth",
            "with girth g and min degree >= 2, p_u <= n - N where N counts vertices within floor((g-1)/2) - 1 of u; tight on the Petersen graph",
            "n<=7+family:petersen;cycle:9;cycle:14;kneser:7,2",
            |c| connected(c) && c.g().min_degree() >= 2,
            |c| {
                let Girth::Finite(g) = c.metrics().girth else { return Err("min degree 2 but acyclic".into()) };
                let t = (g - 1) / 2 - 1;
                let p = c.values()?;
                let petersen = kneser_params(c) == Some((5, 2));
                for u in 0..c.n() {
                    let layers = bfs_layers(c.g(), u).map_err(|e| e.to_string())?;
                    let big_n: usize = layers.layers().iter().take(t + 1).map(Vec::len).sum();
                    ensure(p[u] + big_n <= c.n(), || format!("p_{u} = {}, g = {g}, N = {big_n}", p[u]))?;
                    if petersen {
                        ensure(p[u] + big_n == c.n(), || format!("Petersen not tight at {u}: p = {}, N = {big_n}", p[u]))?;
                    }
                }
                Ok(())
            },
        ),
        TheoremCheck {
            id: "thm-kneser",
            statement: "vp(K(n,k)) = C(n-k, k) for n large relative to k",
            default_corpus: "family:kneser:5,2;kneser:9,2;kneser:10,2;kneser:11,2;kneser:12,2;kneser:13,2",
            note: Some(
                "'large' is taken as n >= 3k with C(n,k) - C(n-2k+1,k) < C(n-k,k); instances failing this guard are skipped",
            ),
            applies: |c| kneser_params(c).is_some_and(|(n, k)| kneser_guard(n, k)),
            holds: |c| {
                let (n, k) = kneser_params(c).unwrap();
                let want = binom(n - k, k) as usize;
                let vp = c.summary()?.vp;
                ensure(vp == want, || format!("K({n},{k}): vp = {vp}, C(n-k,k) = {want}"))
            },
        },
        check(
            "cor-universal",
            "vp(G) = n - 1 iff G has a universal vertex; vp-(G) = n - 1 iff G is complete",
            "n<=8+family:star:9;complete:10",
            |c| connected(c) && c.n() >= 2,
            |c| {
                let s = c.summary()?;
                let n = c.n();
                let u = has_universal(c.g());
                ensure((s.vp == n - 1) == u, || format!("vp = {}, universal vertex = {u}", s.vp))?;
                let k = is_complete(c.g());
                ensure((s.vp_minus == n - 1) == k, || format!("vp- = {}, complete = {k}", s.vp_minus))
            },
        ),
        check(
            "cor-cycles",
            "vp-(G) = vp(G) = 2 iff G is a cycle; vp(G) = 2 iff G is a cycle or a path on at least 3 vertices",
            "n<=8+family:cycle:20;cycle:21;path:20",
            connected,
            |c| {
                let s = c.summary()?;
                let cyc = is_cycle(c.g());
                ensure((s.vp_minus == 2 && s.vp == 2) == cyc, || format!("vp- = {}, vp = {}, cycle = {cyc}", s.vp_minus, s.vp))?;
                let path3 = is_path(c.g()) && c.n() >= 3;
                ensure((s.vp == 2) == (cyc || path3), || format!("vp = {}, cycle = {cyc}, long path = {path3}", s.vp))
            },
        ),
        TheoremCheck {
            id: "lem-n-minus-2",
            statement: "p_u = n - 2 iff deg(u) = n - 2 or u has a cut-vertex neighbour v with {u, v} dominating and v the only neighbour in N(u) of each vertex at distance 2; then, if deg(u) <= n - 3, V - {u, v} is the unique maximum u-position set",
            default_corpus: "n<=8",
            note: Some(
                "without the attachment clause the condition is necessary but not sufficient (graph6 DBw, u = 1); both directions of the version with the clause are checked, and necessity of the weaker one",
            ),
            applies: |c| connected(c) && c.n() >= 2,
            holds: |c| {
                let g = c.g();
                let n = c.n();
                let p = c.values()?;
                let cut = &c.metrics().cut_vertices;
                for u in 0..n {
                    let weak = dominating_cut_neighbours(g, u, cut);
                    let strong: Vec<Vertex> = weak.iter().copied().filter(|&v| sole_attachment(g, u, v)).collect();
                    let tight = p[u] + 2 == n;
                    ensure(!tight || g.degree(u) + 2 == n || !weak.is_empty(), || {
                        format!("p_{u} = n - 2 but deg = {} and no dominating cut neighbour", g.degree(u))
                    })?;
                    let structural = g.degree(u) + 2 == n || !strong.is_empty();
                    ensure(tight == structural, || {
                        format!("p_{u} = {}, deg = {}, qualifying cut neighbours = {strong:?}", p[u], g.degree(u))
                    })?;
                    if structural && g.degree(u) + 3 <= n && n <= c.budget.max_vertices_px {
                        let v = strong[0];
                        let sets = oracle_all_max_px_sets(g, u, c.budget).map_err(|e| e.to_string())?;
                        let want: Vec<Vertex> = (0..n).filter(|&w| w != u && w != v).collect();
                        ensure(sets == vec![want], || format!("root {u}: maximum sets {sets:?}"))?;
                    }
                }
                Ok(())
            },
        },
        check(
            "thm-k222",
            "for n >= 4, vp-(G) = vp(G) = n - 2 iff G is K_{2,2,...,2}",
            "n<=8+family:cliqueMinusMatching:10,5;cliqueMinusMatching:12,6",
            |c| connected(c) && c.n() >= 4,
            |c| {
                let s = c.summary()?;
                let n = c.n();
                let k = is_cocktail_party(c.g());
                ensure((s.vp_minus + 2 == n && s.vp + 2 == n) == k, || {
                    format!("vp- = {}, vp = {}, cocktail party = {k}", s.vp_minus, s.vp)
                })
            },
        ),
        TheoremCheck {
            id: "thm-n2-n1",
            statement: "for n >= 4, vp-(G) = n - 2 and vp(G) = n - 1 iff G is a clique minus a non-empty non-perfect matching or K1 joined with a disjoint union of cliques",
            default_corpus: "n<=8+family:cliqueMinusMatching:9,2;cliqueMinusMatching:10,4;star:6",
            note: Some("the disjoint union must have at least two cliques; K1 joined with one clique is complete"),
            applies: |c| connected(c) && c.n() >= 4,
            holds: |c| {
                let s = c.summary()?;
                let n = c.n();
                let r = is_near_complete(c.g());
                ensure((s.vp_minus + 2 == n && s.vp + 1 == n) == r, || {
                    format!("vp- = {}, vp = {}, structure = {r}", s.vp_minus, s.vp)
                })
            },
        },
        TheoremCheck {
            id: "lem-G-r",
            statement: "vp-(G(r)) = r, gp(G(r)) = 2r and vp(G(r)) = 6r - 4 for r >= 3",
            default_corpus: "family:paperG_r:3;paperG_r:4;paperG_r:5;paperG_r:6",
            note: Some("the gp clause is evaluated at r = 3 only, with the gp search allowed 22 vertices"),
            applies: |c| matches!(c.inst.family(), Some(FamilySpec::GapGraph(r)) if *r >= 3),
            holds: |c| {
                let Some(FamilySpec::GapGraph(r)) = c.inst.family() else { unreachable!() };
                let r = *r;
                let s = c.summary()?;
                ensure(s.vp_minus == r && s.vp == 6 * r - 4, || format!("r = {r}: vp- = {}, vp = {}", s.vp_minus, s.vp))?;
                if r == 3 {
                    let budget = c.budget.clone().with_max_vertices(22.max(c.budget.max_vertices_gp));
                    let gp = oracle_gp(c.g(), &budget).map_err(|e| e.to_string())?.len();
                    ensure(gp == 2 * r, || format!("r = {r}: gp = {gp}"))?;
                }
                Ok(())
            },
        },
        check(
            "lem-cutvertex-free",
            "every vertex x of a connected graph has a maximum x-position set containing no cut vertex",
            "n<=8",
            |c| connected(c) && c.n() <= c.budget.max_vertices_px,
            |c| {
                let cut = &c.metrics().cut_vertices;
                let allowed: Vec<bool> = (0..c.n()).map(|v| !cut.contains(&v)).collect();
                let p = c.values()?;
                for x in 0..c.n() {
                    let w = oracle_px_restricted(c.g(), x, &allowed, c.budget).map_err(|e| e.to_string())?;
                    ensure(w.len() == p[x], || format!("root {x}: best cut-free set {w:?}, p_x = {}", p[x]))?;
                }
                Ok(())
            },
        ),
        check(
            "vp-isolated",
            "vp(G) = n iff G has an isolated vertex",
            "all:n<=6",
            |c| c.n() >= 1,
            |c| {
                let vp = c.summary()?.vp;
                let iso = has_isolated(c.g());
                ensure((vp == c.n()) == iso, || format!("vp = {vp}, isolated vertex = {iso}"))
            },
        ),
        check(
            "solver-oracle",
            "the antichain solver and exhaustive search agree on p_x at every root",
            "n<=7+all:n<=5+random:200,12,seed=1",
            |c| c.n() >= 1 && c.n() <= c.budget.max_vertices_px,
            |c| {
                let p = c.values()?;
                for x in 0..c.n() {
                    let o = oracle_px(c.g(), x, c.budget).map_err(|e| e.to_string())?.value;
                    ensure(o == p[x], || format!("root {x}: solver {}, oracle {o}", p[x]))?;
                }
                Ok(())
            },
        ),
    ];
    v.sort_by_key(|c| c.id);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{clique_minus_matching, complete, cycle};

    #[test]
    fn kneser_guard_thresholds() {
        assert!(!kneser_guard(9, 2));
        assert!(kneser_guard(10, 2));
        assert!(!kneser_guard(20, 3));
        assert!(kneser_guard(21, 3));
        assert!(!kneser_guard(5, 2));
    }

    #[test]
    fn recognisers() {
        assert!(is_cocktail_party(&clique_minus_matching(8, 4)));
        assert!(!is_cocktail_party(&clique_minus_matching(8, 3)));
        assert!(is_near_complete(&clique_minus_matching(8, 3)));
        assert!(!is_near_complete(&complete(6)));
        assert!(is_near_complete(&Graph::empty(1).join(&complete(2).disjoint_union(&complete(3)))));
        assert!(!is_near_complete(&cycle(5)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(8, 2), 28);
        assert_eq!(binom(21, 3), 1330);
        assert_eq!(binom(2, 3), 0);
    }
}
