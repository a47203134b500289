//! Graph corpora for the theorem checks.
//!
//! Grammar (terms joined with `+`):
//!
//! | term | graphs |
//! |------|--------|
//! | `n<=K` | every connected graph on 1..=K vertices (K <= 8) |
//! | `all:n<=K` | every graph on 1..=K vertices (K <= 8) |
//! | `family:SPEC;SPEC;...` | generator family members |
//! | `random:C,N,seed=S` | `C` random graphs, `n` uniform in 1..=N |
//! | `trees:C,N,seed=S` | `C` random trees, `n` uniform in 2..=N |
//! | `blocks:C,B,seed=S` | `C` random block graphs with up to `B` blocks |
//! | `joins:C,N,seed=S` | `C` joins of two random graphs on 1..=N vertices each |
//! | `multipartite:n<=K` | every complete multipartite graph on <= K vertices |

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::census;
use crate::error::{Error, Result};
use crate::generators::{complete_multipartite, gnp, random_block_graph, random_tree, rng, FamilySpec, DEFAULT_MAX_BLOCK};
use crate::graph::Graph;

/// Where an instance came from; family parameters feed formula checks.
#[derive(Clone, Debug, PartialEq)]
pub enum Origin {
    Census,
    Random { seed: u64 },
    Family(FamilySpec),
    /// `left ∨ right`, with `left` on the low ids.
    Join(Graph, Graph),
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub labels: Option<Vec<String>>,
    pub origin: Origin,
}

impl Instance {
    pub fn census(graph: Graph) -> Self {
        Instance { graph, labels: None, origin: Origin::Census }
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        match &self.origin {
            Origin::Family(f) => Some(f),
            _ => None,
        }
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Corpus {
    Connected(usize),
    All(usize),
    Families(Vec<FamilySpec>),
    Random { count: usize, max_n: usize, seed: u64 },
    Trees { count: usize, max_n: usize, seed: u64 },
    Blocks { count: usize, max_blocks: usize, seed: u64 },
    Joins { count: usize, max_n: usize, seed: u64 },
    Multipartite(usize),
    Union(Vec<Corpus>),
}

fn seeded(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)
}

fn partitions(n: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        return;
    }
    for p in (1..=n.min(max_part)).rev() {
        prefix.push(p);
        partitions(n - p, p, prefix, out);
        prefix.pop();
    }
}

impl Corpus {
    pub fn instances(&self) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        self.collect_into(&mut out)?;
        Ok(out)
    }

    fn collect_into(&self, out: &mut Vec<Instance>) -> Result<()> {
        match self {
            Corpus::Connected(k) => out.extend(census::connected_up_to(*k)?.into_iter().map(Instance::census)),
            Corpus::All(k) => out.extend(census::all_up_to(*k)?.into_iter().map(Instance::census)),
            Corpus::Families(specs) => {
                for spec in specs {
                    let lg = spec.generate()?;
                    out.push(Instance { graph: lg.graph, labels: lg.labels, origin: Origin::Family(spec.clone()) });
                }
            }
            Corpus::Random { count, max_n, seed } => {
                let mut r = rng(*seed);
                for i in 0..*count {
                    let n = r.gen_range(1..=*max_n);
                    let p = r.gen_range(0.1..0.9);
                    let s = seeded(*seed, i);
                    out.push(Instance { graph: gnp(n, p, s), labels: None, origin: Origin::Random { seed: s } });
                }
            }
            Corpus::Trees { count, max_n, seed } => {
                let mut r = rng(*seed);
                for i in 0..*count {
                    let n = r.gen_range(2..=*max_n);
                    let s = seeded(*seed, i);
                    let spec = FamilySpec::RandomTree { n, seed: s };
                    out.push(Instance { graph: random_tree(n, s), labels: None, origin: Origin::Family(spec) });
                }
            }
            Corpus::Blocks { count, max_blocks, seed } => {
                let mut r = rng(*seed);
                for i in 0..*count {
                    let blocks = r.gen_range(1..=*max_blocks);
                    let s = seeded(*seed, i);
                    let spec = FamilySpec::RandomBlockGraph { blocks, max_block: DEFAULT_MAX_BLOCK, seed: s };
                    let graph = random_block_graph(blocks, DEFAULT_MAX_BLOCK, s);
                    out.push(Instance { graph, labels: None, origin: Origin::Family(spec) });
                }
            }
            Corpus::Joins { count, max_n, seed } => {
                let mut r = rng(*seed);
                for i in 0..*count {
                    let (n1, n2) = (r.gen_range(1..=*max_n), r.gen_range(1..=*max_n));
                    let (p1, p2) = (r.gen_range(0.0..1.0), r.gen_range(0.0..1.0));
                    let s = seeded(*seed, i);
                    let a = gnp(n1, p1, s);
                    let b = gnp(n2, p2, s ^ 1);
                    out.push(Instance { graph: a.join(&b), labels: None, origin: Origin::Join(a, b) });
                }
            }
            Corpus::Multipartite(k) => {
                let mut parts = Vec::new();
                for n in 2..=*k {
                    partitions(n, n, &mut Vec::new(), &mut parts);
                }
                for p in parts {
                    let graph = complete_multipartite(&p);
                    out.push(Instance { graph, labels: None, origin: Origin::Family(FamilySpec::CompleteMultipartite(p)) });
                }
            }
            Corpus::Union(parts) => {
                for c in parts {
                    c.collect_into(out)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corpus::Connected(k) => write!(f, "n<={k}"),
            Corpus::All(k) => write!(f, "all:n<={k}"),
            Corpus::Families(specs) => {
                let s: Vec<String> = specs.iter().map(ToString::to_string).collect();
                write!(f, "family:{}", s.join(";"))
            }
            Corpus::Random { count, max_n, seed } => write!(f, "random:{count},{max_n},seed={seed}"),
            Corpus::Trees { count, max_n, seed } => write!(f, "trees:{count},{max_n},seed={seed}"),
            Corpus::Blocks { count, max_blocks, seed } => write!(f, "blocks:{count},{max_blocks},seed={seed}"),
            Corpus::Joins { count, max_n, seed } => write!(f, "joins:{count},{max_n},seed={seed}"),
            Corpus::Multipartite(k) => write!(f, "multipartite:n<={k}"),
            Corpus::Union(parts) => {
                let s: Vec<String> = parts.iter().map(ToString::to_string).collect();
                f.write_str(&s.join("+"))
            }
        }
    }
}

fn bound(spec: &str, s: &str) -> Result<usize> {
    let err = |msg: &str| Error::Corpus { spec: spec.to_string(), msg: msg.to_string() };
    let k: usize = s.strip_prefix("n<=").ok_or_else(|| err("expected n<=K"))?.trim().parse().map_err(|_| err("K must be an integer"))?;
    if !(1..=census::MAX_CENSUS_N).contains(&k) {
        return Err(err(&format!("census corpora need 1 <= K <= {}", census::MAX_CENSUS_N)));
    }
    Ok(k)
}

/// `count,max,seed=S` with the seed optional (default 0).
fn counted(spec: &str, rest: &str) -> Result<(usize, usize, u64)> {
    let err = |msg: &str| Error::Corpus { spec: spec.to_string(), msg: msg.to_string() };
    let mut nums = Vec::new();
    let mut seed = 0;
    for a in rest.split(',').map(str::trim) {
        if let Some(v) = a.strip_prefix("seed=") {
            seed = v.parse().map_err(|_| err("seed must be an unsigned integer"))?;
        } else {
            nums.push(a.parse::<usize>().map_err(|_| err("expected an integer"))?);
        }
    }
    match nums[..] {
        [c, m] if m >= 1 => Ok((c, m, seed)),
        _ => Err(err("expected COUNT,MAX[,seed=S]")),
    }
}

impl FromStr for Corpus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms: Vec<&str> = s.split('+').map(str::trim).collect();
        if terms.len() > 1 {
            return Ok(Corpus::Union(terms.into_iter().map(str::parse).collect::<Result<_>>()?));
        }
        let err = |msg: &str| Error::Corpus { spec: s.to_string(), msg: msg.to_string() };
        if s.starts_with("n<=") {
            return Ok(Corpus::Connected(bound(s, s)?));
        }
        let (kind, rest) = s.split_once(':').ok_or_else(|| err("unknown corpus"))?;
        Ok(match kind {
            "all" => Corpus::All(bound(s, rest)?),
            "family" => Corpus::Families(
                rest.split(';').map(str::trim).filter(|t| !t.is_empty()).map(str::parse).collect::<Result<_>>()?,
            ),
            "random" => {
                let (count, max_n, seed) = counted(s, rest)?;
                if max_n > 64 {
                    return Err(err("random graphs are limited to 64 vertices"));
                }
                Corpus::Random { count, max_n, seed }
            }
            "trees" => {
                let (count, max_n, seed) = counted(s, rest)?;
                if max_n < 2 {
                    return Err(err("trees need at least 2 vertices"));
                }
                Corpus::Trees { count, max_n, seed }
            }
            "blocks" => {
                let (count, max_blocks, seed) = counted(s, rest)?;
                Corpus::Blocks { count, max_blocks, seed }
            }
            "joins" => {
                let (count, max_n, seed) = counted(s, rest)?;
                Corpus::Joins { count, max_n, seed }
            }
            "multipartite" => {
                let k: usize = rest
                    .strip_prefix("n<=")
                    .and_then(|k| k.trim().parse().ok())
                    .ok_or_else(|| err("expected multipartite:n<=K"))?;
                Corpus::Multipartite(k)
            }
            _ => return Err(err("unknown corpus")),
        })
    }
}
