//! Loading graphs, lists and colorings from files or built-in names.

use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;

use nonrep_core::coloring::ListsJson;
use nonrep_core::graph::{families, GraphJson};
use nonrep_core::{Coloring, GeneralizedGraph, ListAssignment};

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn parse_json<T: DeserializeOwned>(path: &str) -> Result<T> {
    let text = read_source(path)?;
    serde_json::from_str(&text).map_err(|e| anyhow!("{path}: invalid JSON: {e}"))
}

fn size_arg(source: &str, arg: Option<&str>) -> Result<usize> {
    let a = arg.ok_or_else(|| anyhow!("built-in graph `{source}` needs a size, e.g. @path:4"))?;
    a.parse().map_err(|_| anyhow!("bad size `{a}` in `{source}`"))
}

/// `@path:n`, `@cycle:n`, `@complete:n`, `@star:n`, `@petersen`, or a JSON file.
pub fn load_graph(source: &str) -> Result<GeneralizedGraph> {
    if let Some(name) = source.strip_prefix('@') {
        let (family, arg) = match name.split_once(':') {
            Some((f, a)) => (f, Some(a)),
            None => (name, None),
        };
        let g = match family {
            "path" => families::path(size_arg(source, arg)?),
            "cycle" => {
                let n = size_arg(source, arg)?;
                if n < 3 {
                    bail!("cycles need at least 3 vertices");
                }
                families::cycle(n)
            }
            "complete" => families::complete(size_arg(source, arg)?),
            "star" => families::star(size_arg(source, arg)?),
            "petersen" => families::petersen(),
            _ => bail!("unknown built-in graph `{source}`"),
        };
        return Ok(g);
    }
    let json: GraphJson = parse_json(source)?;
    GeneralizedGraph::try_from(&json).map_err(|e| anyhow!("{source}: {e}"))
}

pub fn load_lists(g: &GeneralizedGraph, uniform: Option<u32>, file: Option<&str>) -> Result<ListAssignment> {
    match (uniform, file) {
        (Some(k), None) => Ok(ListAssignment::uniform(g, k)),
        (None, Some(path)) => {
            let json: ListsJson = parse_json(path)?;
            json.to_lists(g).map_err(|e| anyhow!("{path}: {e}"))
        }
        _ => bail!("give exactly one of --uniform and --lists"),
    }
}

pub fn load_coloring(path: &str) -> Result<Coloring> {
    parse_json(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        assert_eq!(load_graph("@path:4").unwrap(), families::path(4));
        assert_eq!(load_graph("@petersen").unwrap().edge_count(), 15);
        assert_eq!(load_graph("@star:3").unwrap().max_degree(), 3);
        assert!(load_graph("@cycle:2").is_err());
        assert!(load_graph("@path").is_err());
        assert!(load_graph("@path:x").is_err());
    }

    #[test]
    fn list_source_must_be_unique() {
        let g = families::path(2);
        assert!(load_lists(&g, None, None).is_err());
        assert!(load_lists(&g, Some(2), Some("x.json")).is_err());
        assert_eq!(load_lists(&g, Some(2), None).unwrap(), ListAssignment::uniform(&g, 2));
    }
}
