//! Graph sources: edge-list or graph6 files, and built-in family specs.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use vertex_energy::{attach_pendant_path, make_family, parse_edge_list, parse_graph6, Error, Family, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Edgelist,
    Graph6,
}

/// A file path, or one of `path:N`, `cycle:N`, `star:N` (N leaves),
/// `complete:N`, `tree:M(i)j`.
pub fn load_graph(source: &str, format: Format) -> Result<Graph, String> {
    let path = Path::new(source);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| format!("{source}: {e}"))?;
        let parsed = match format {
            Format::Edgelist => parse_edge_list(&text),
            Format::Graph6 => parse_graph6(text.trim()),
        };
        return parsed.map_err(|e| format!("{source}: {e}"));
    }
    match source.split_once(':') {
        Some((kind, arg)) => parse_family_spec(kind, arg).map_err(|e| format!("{source}: {e}")),
        None => Err(format!("{source}: no such file and not a family spec")),
    }
}

fn count(arg: &str) -> Result<usize, Error> {
    arg.trim()
        .parse()
        .map_err(|_| Error::InvalidFamily(format!("expected a count, got {arg:?}")))
}

fn parse_family_spec(kind: &str, arg: &str) -> Result<Graph, Error> {
    match kind {
        "star" => make_family(Family::Star, count(arg)? + 1),
        "tree" => {
            let (m, rest) = arg
                .split_once('(')
                .ok_or_else(|| Error::InvalidFamily("tree spec is M(i)j".into()))?;
            let (i, j) = rest
                .split_once(')')
                .ok_or_else(|| Error::InvalidFamily("tree spec is M(i)j".into()))?;
            attach_pendant_path(count(m)?, count(i)?, count(j)?).map(|(g, _)| g)
        }
        other => make_family(other.parse()?, count(arg)?),
    }
}
