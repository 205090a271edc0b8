//! Graph inputs: graph6 files (or stdin) and generator specs.

use std::io::Read;
use std::path::Path;

use chi_certify::graph::{from_graph6, generate, GeneratorSpec};
use chi_certify::Graph;

use crate::{CliError, CliResult};

#[derive(Debug, Clone)]
pub struct Instance {
    pub id: String,
    pub graph: Graph,
}

/// Parses graph6 text, one graph per line. Blank lines are skipped; ids are
/// `<source>:<line>`.
pub fn parse_graph6_text(source: &str, text: &str) -> CliResult<Vec<Instance>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let graph = from_graph6(line)
            .map_err(|e| CliError::usage(format!("{source}:{}: {e}", i + 1)))?;
        out.push(Instance {
            id: format!("{source}:{}", i + 1),
            graph,
        });
    }
    Ok(out)
}

/// Reads a graph6 file; `-` is standard input.
pub fn read_graph6(path: &Path) -> CliResult<Vec<Instance>> {
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::usage(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{name}: {e}")))?
    };
    parse_graph6_text(&name, &text)
}

/// Expands a generator spec. A `gnp:n:prob` spec without its own seed
/// becomes `count` instances with seeds `seed, seed + 1, ...`; this needs
/// `seed`.
pub fn expand_generator(spec: &str, seed: Option<u64>, count: usize) -> CliResult<Vec<Instance>> {
    let tokens: Vec<&str> = spec.trim().split(':').collect();
    let specs: Vec<GeneratorSpec> = if tokens.first() == Some(&"gnp") && tokens.len() == 3 {
        let base = seed.ok_or_else(|| {
            CliError::usage(format!("{spec}: random generators need --seed or an explicit seed"))
        })?;
        (0..count as u64)
            .map(|i| format!("{spec}:{}", base.wrapping_add(i)).parse())
            .collect::<chi_certify::Result<_>>()
            .map_err(|e| CliError::usage(format!("{spec}: {e}")))?
    } else {
        vec![spec
            .parse()
            .map_err(|e| CliError::usage(format!("{spec}: {e}")))?]
    };
    specs
        .into_iter()
        .map(|s| {
            let graph = generate(&s).map_err(|e| CliError::usage(format!("{s}: {e}")))?;
            Ok(Instance {
                id: s.to_string(),
                graph,
            })
        })
        .collect()
}

/// All instances from files then generators, in the order given. An empty
/// result is an error.
pub fn collect(
    inputs: &[impl AsRef<Path>],
    generators: &[String],
    seed: Option<u64>,
    count: usize,
) -> CliResult<Vec<Instance>> {
    let mut out = Vec::new();
    for p in inputs {
        out.extend(read_graph6(p.as_ref())?);
    }
    for g in generators {
        out.extend(expand_generator(g, seed, count)?);
    }
    if out.is_empty() {
        return Err(CliError::usage("no input graphs"));
    }
    Ok(out)
}
