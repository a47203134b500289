use std::io::Read;

use vertex_position::format::{looks_like_edge_list, parse_edge_list, parse_graph6_stream, parse_labels};
use vertex_position::generators::FamilySpec;
use vertex_position::{Error, Graph, Vertex};

use crate::CliError;

/// One input graph with its vertex names, if any.
pub struct Loaded {
    pub graph: Graph,
    pub labels: Option<Vec<String>>,
}

impl Loaded {
    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// A vertex id or a vertex label.
    pub fn resolve(&self, root: &str) -> Result<Vertex, CliError> {
        if let Some(v) = self.labels.as_ref().and_then(|l| l.iter().position(|x| x == root)) {
            return Ok(v);
        }
        let v: Vertex = root.parse().map_err(|_| CliError::usage(format!("unknown root `{root}`")))?;
        self.graph.check_vertex(v)?;
        Ok(v)
    }
}

pub fn read_source(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::usage(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

/// Parses an edge list (single graph) or a graph6 stream (one graph per line).
pub fn parse_text(text: &str) -> Result<Vec<Loaded>, Error> {
    if looks_like_edge_list(text) {
        let graph = parse_edge_list(text)?;
        let labels = parse_labels(text, graph.n());
        Ok(vec![Loaded { graph, labels }])
    } else {
        Ok(parse_graph6_stream(text)?.into_iter().map(|graph| Loaded { graph, labels: None }).collect())
    }
}

/// Replaces the seed of random families when one is given on the command line.
pub fn reseed(spec: FamilySpec, seed: Option<u64>) -> FamilySpec {
    let Some(s) = seed else { return spec };
    match spec {
        FamilySpec::RandomTree { n, .. } => FamilySpec::RandomTree { n, seed: s },
        FamilySpec::RandomBlockGraph { blocks, max_block, .. } => FamilySpec::RandomBlockGraph { blocks, max_block, seed: s },
        FamilySpec::Gnp { n, p, .. } => FamilySpec::Gnp { n, p, seed: s },
        other => other,
    }
}

pub fn generate(spec: &str, seed: Option<u64>) -> Result<Loaded, Error> {
    let spec = reseed(spec.parse()?, seed);
    let lg = spec.generate()?;
    Ok(Loaded { graph: lg.graph, labels: lg.labels })
}

pub fn load(file: Option<&str>, gen: Option<&str>, seed: Option<u64>) -> Result<Vec<Loaded>, CliError> {
    match (file, gen) {
        (Some(path), None) => Ok(parse_text(&read_source(path)?)?),
        (None, Some(spec)) => Ok(vec![generate(spec, seed)?]),
        _ => Err(CliError::usage("give exactly one input: a file, `-` for stdin, or --gen SPEC")),
    }
}
