//! Named, machine-checkable statements about `p_x`, `vp` and `vp⁻`,
//! evaluated over graph corpora.

mod checks;
mod corpus;

use std::cell::OnceCell;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use checks::{builtin_checks, dominating_cut_neighbours, is_cocktail_party, is_near_complete, kneser_guard, sole_attachment};
pub use corpus::{Corpus, Instance, Origin};

use crate::error::{Error, Result};
use crate::format::encode_graph6;
use crate::graph::Graph;
use crate::metrics::{metrics, GraphMetrics};
use crate::oracle::OracleBudget;
use crate::solver::{solve_all_with, SolveOptions, VpSummary};

/// Everything a check may look at for one instance, computed on demand.
pub struct Ctx<'a> {
    pub inst: &'a Instance,
    pub opts: SolveOptions,
    pub budget: &'a OracleBudget,
    summary: OnceCell<std::result::Result<VpSummary, String>>,
    metrics: OnceCell<GraphMetrics>,
}

impl<'a> Ctx<'a> {
    pub fn new(inst: &'a Instance, opts: SolveOptions, budget: &'a OracleBudget) -> Self {
        Ctx { inst, opts, budget, summary: OnceCell::new(), metrics: OnceCell::new() }
    }

    pub fn g(&self) -> &Graph {
        &self.inst.graph
    }

    pub fn n(&self) -> usize {
        self.inst.graph.n()
    }

    pub fn summary(&self) -> std::result::Result<&VpSummary, String> {
        self.summary
            .get_or_init(|| {
                solve_all_with(&self.inst.graph, SolveOptions { parallel: false, ..self.opts }).map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn values(&self) -> std::result::Result<Vec<usize>, String> {
        Ok(self.summary()?.values())
    }

    pub fn metrics(&self) -> &GraphMetrics {
        self.metrics.get_or_init(|| metrics(&self.inst.graph))
    }
}

pub type Outcome = std::result::Result<(), String>;

/// A named statement: instances failing `applies` are skipped, the rest must
/// satisfy `holds`.
#[derive(Clone, Copy)]
pub struct TheoremCheck {
    pub id: &'static str,
    /// The statement being checked, in words.
    pub statement: &'static str,
    pub default_corpus: &'static str,
    /// Extra context copied into every report.
    pub note: Option<&'static str>,
    pub applies: fn(&Ctx) -> bool,
    pub holds: fn(&Ctx) -> Outcome,
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCheck").field("id", &self.id).field("default_corpus", &self.default_corpus).finish()
    }
}

impl TheoremCheck {
    pub fn corpus(&self) -> Corpus {
        self.default_corpus.parse().expect("built-in corpus specs parse")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub check: String,
    pub statement: String,
    pub corpus: String,
    pub tested: usize,
    pub skipped: usize,
    pub passed: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TheoremReport {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub solve: SolveOptions,
    pub budget: OracleBudget,
    /// Evaluate instances on the rayon pool.
    pub parallel: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { solve: SolveOptions::default(), budget: OracleBudget::default(), parallel: true }
    }
}

enum Verdict {
    Skip,
    Pass,
    Fail(Counterexample),
}

fn evaluate(check: &TheoremCheck, inst: &Instance, opts: &RunOptions) -> Verdict {
    let ctx = Ctx::new(inst, opts.solve, &opts.budget);
    if !(check.applies)(&ctx) {
        return Verdict::Skip;
    }
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (check.holds)(&ctx)))
        .unwrap_or_else(|_| Err("assertion panicked".to_string()));
    match outcome {
        Ok(()) => Verdict::Pass,
        Err(detail) => Verdict::Fail(Counterexample { graph6: encode_graph6(&inst.graph), detail }),
    }
}

/// Evaluates `check` on every instance of `corpus`.
pub fn run_check(check: &TheoremCheck, corpus: &Corpus, opts: &RunOptions) -> Result<TheoremReport> {
    let instances = corpus.instances()?;
    Ok(run_check_on(check, &corpus.to_string(), &instances, opts))
}

pub fn run_check_on(check: &TheoremCheck, corpus: &str, instances: &[Instance], opts: &RunOptions) -> TheoremReport {
    let verdicts: Vec<Verdict> = if opts.parallel {
        instances.par_iter().map(|i| evaluate(check, i, opts)).collect()
    } else {
        instances.iter().map(|i| evaluate(check, i, opts)).collect()
    };
    let mut report = TheoremReport {
        check: check.id.to_string(),
        statement: check.statement.to_string(),
        corpus: corpus.to_string(),
        tested: 0,
        skipped: 0,
        passed: 0,
        counterexamples: Vec::new(),
        note: check.note.map(str::to_string),
    };
    for v in verdicts {
        match v {
            Verdict::Skip => report.skipped += 1,
            Verdict::Pass => {
                report.tested += 1;
                report.passed += 1;
            }
            Verdict::Fail(c) => {
                report.tested += 1;
                report.counterexamples.push(c);
            }
        }
    }
    report.counterexamples.sort();
    report
}

pub fn find_check(id: &str) -> Result<TheoremCheck> {
    builtin_checks().into_iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Largest observed `vp / vp⁻` over the connected members of a corpus, as
/// `(vp, vp⁻, graph6)`. Informational only.
pub fn max_ratio(instances: &[Instance]) -> Result<Option<(usize, usize, String)>> {
    let mut best: Option<(usize, usize, String)> = None;
    for inst in instances.iter().filter(|i| i.graph.n() > 0 && i.graph.is_connected()) {
        let s = solve_all_with(&inst.graph, SolveOptions::default())?;
        let better = best.as_ref().is_none_or(|(a, b, _)| s.vp * b > a * s.vp_minus);
        if better {
            best = Some((s.vp, s.vp_minus, encode_graph6(&inst.graph)));
        }
    }
    Ok(best)
}
