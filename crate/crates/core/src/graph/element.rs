use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Whether an element is a vertex or an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ElementKind {
    #[serde(rename = "v")]
    Vertex,
    #[serde(rename = "e")]
    Edge,
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ElementKind::Vertex => "vertex",
            ElementKind::Edge => "edge",
        })
    }
}

/// A vertex or an edge of a graph. Vertices order before edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementId {
    pub kind: ElementKind,
    pub index: usize,
}

impl ElementId {
    pub const fn vertex(index: usize) -> Self {
        Self { kind: ElementKind::Vertex, index }
    }

    pub const fn edge(index: usize) -> Self {
        Self { kind: ElementKind::Edge, index }
    }

    pub fn is_vertex(self) -> bool {
        self.kind == ElementKind::Vertex
    }

    pub fn is_edge(self) -> bool {
        self.kind == ElementKind::Edge
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            ElementKind::Vertex => 'v',
            ElementKind::Edge => 'e',
        };
        write!(f, "{tag}{}", self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid element `{0}`: expected v:<index> or e:<index>")]
pub struct ParseElementError(pub String);

impl FromStr for ElementId {
    type Err = ParseElementError;

    /// Accepts `v:3`, `v3`, `e:0`, `e0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseElementError(s.to_owned());
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('v') => ElementKind::Vertex,
            Some('e') => ElementKind::Edge,
            _ => return Err(err()),
        };
        let rest = chars.as_str();
        let rest = rest.strip_prefix(':').unwrap_or(rest);
        let index = rest.parse().map_err(|_| err())?;
        Ok(Self { kind, index })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("v:3".parse::<ElementId>().unwrap(), ElementId::vertex(3));
        assert_eq!("e12".parse::<ElementId>().unwrap(), ElementId::edge(12));
        assert!("x1".parse::<ElementId>().is_err());
        assert!("v:".parse::<ElementId>().is_err());
        assert_eq!(ElementId::edge(4).to_string(), "e4");
    }

    #[test]
    fn vertices_sort_first() {
        assert!(ElementId::vertex(9) < ElementId::edge(0));
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&ElementId::vertex(2)).unwrap();
        assert_eq!(s, r#"{"kind":"v","index":2}"#);
    }
}
