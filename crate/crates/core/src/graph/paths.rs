use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{ElementId, ElementKind, GeneralizedGraph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    /// Consecutive vertices are vv-adjacent.
    Vertex,
    /// Consecutive edges are ee-adjacent; a vertex may be passed more than once.
    Edge,
    /// Vertices and edges alternate, consecutive elements incident.
    Mixed,
}

impl PathKind {
    pub const ALL: [PathKind; 3] = [PathKind::Vertex, PathKind::Edge, PathKind::Mixed];

    /// Whether an element of this kind may appear in paths of `self`.
    pub fn admits(self, kind: ElementKind) -> bool {
        match self {
            PathKind::Vertex => kind == ElementKind::Vertex,
            PathKind::Edge => kind == ElementKind::Edge,
            PathKind::Mixed => true,
        }
    }
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathKind::Vertex => "vertex",
            PathKind::Edge => "edge",
            PathKind::Mixed => "mixed",
        })
    }
}

impl FromStr for PathKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertex" | "v" => Ok(PathKind::Vertex),
            "edge" | "e" => Ok(PathKind::Edge),
            "mixed" | "m" => Ok(PathKind::Mixed),
            _ => Err(format!("unknown path kind `{s}` (expected vertex, edge or mixed)")),
        }
    }
}

/// A simple path, stored in canonical orientation: the element sequence is
/// lexicographically no larger than its reversal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Path {
    pub kind: PathKind,
    pub elements: Vec<ElementId>,
}

impl Path {
    /// Wraps a sequence, reversing it if needed so the orientation is canonical.
    pub fn canonical(kind: PathKind, mut elements: Vec<ElementId>) -> Self {
        if elements.iter().rev().lt(elements.iter()) {
            elements.reverse();
        }
        Self { kind, elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.elements.contains(&x)
    }

    /// The later half of an even-length path.
    pub fn second_half(&self) -> &[ElementId] {
        &self.elements[self.elements.len() / 2..]
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.kind)?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Checks the invariants of a path of its kind in `g`; returns a reason on failure.
pub fn validate_path(g: &GeneralizedGraph, path: &Path) -> Result<(), String> {
    let mut seen = BTreeSet::new();
    for &x in &path.elements {
        if !g.contains(x) {
            return Err(format!("{x} is not in the graph"));
        }
        if !path.kind.admits(x.kind) {
            return Err(format!("{x} cannot appear in a {} path", path.kind));
        }
        if !seen.insert(x) {
            return Err(format!("{x} repeats"));
        }
    }
    for w in path.elements.windows(2) {
        let ok = match (path.kind, w[0].kind, w[1].kind) {
            (PathKind::Vertex, _, _) => g.vv_adjacent(w[0].index, w[1].index),
            (PathKind::Edge, _, _) => g.ee_adjacent(w[0].index, w[1].index),
            (PathKind::Mixed, ElementKind::Vertex, ElementKind::Edge) => {
                g.incident(w[0].index, w[1].index)
            }
            (PathKind::Mixed, ElementKind::Edge, ElementKind::Vertex) => {
                g.incident(w[1].index, w[0].index)
            }
            (PathKind::Mixed, _, _) => false,
        };
        if !ok {
            return Err(format!("{} and {} are not consecutive-adjacent", w[0], w[1]));
        }
    }
    Ok(())
}

/// Callback receiving the graph, the used set and a finished walk.
type Visit<'a> = dyn FnMut(&GeneralizedGraph, &mut Vec<ElementId>, &[ElementId]) + 'a;

impl GeneralizedGraph {
    /// Every simple path of `kind` with exactly `length` elements that
    /// contains `x`. Each undirected path appears once.
    pub fn enumerate_paths_through(&self, x: ElementId, kind: PathKind, length: usize) -> BTreeSet<Path> {
        let mut out = BTreeSet::new();
        if length == 0 || !self.contains(x) || !kind.admits(x.kind) {
            return out;
        }
        let mut used = vec![x];
        for before in 0..length {
            let after = length - 1 - before;
            let mut right = Vec::with_capacity(after);
            self.extend(kind, x, after, &mut used, &mut right, &mut |g, used, right| {
                let mut left = Vec::with_capacity(before);
                g.extend(kind, x, before, used, &mut left, &mut |_, _, left| {
                    let seq: Vec<ElementId> = left
                        .iter()
                        .rev()
                        .copied()
                        .chain(std::iter::once(x))
                        .chain(right.iter().copied())
                        .collect();
                    out.insert(Path::canonical(kind, seq));
                });
            });
        }
        out
    }

    /// DFS growing `walk` by `steps` elements from `from`, avoiding `used`.
    fn extend(
        &self,
        kind: PathKind,
        from: ElementId,
        steps: usize,
        used: &mut Vec<ElementId>,
        walk: &mut Vec<ElementId>,
        done: &mut Visit<'_>,
    ) {
        if steps == 0 {
            done(self, used, walk);
            return;
        }
        let tip = walk.last().copied().unwrap_or(from);
        for next in self.path_neighbors(tip, kind) {
            if used.contains(&next) {
                continue;
            }
            used.push(next);
            walk.push(next);
            self.extend(kind, from, steps - 1, used, walk, done);
            walk.pop();
            used.pop();
        }
    }

    /// Every simple path of `kind` with exactly `length` elements.
    pub fn enumerate_paths(&self, kind: PathKind, length: usize) -> BTreeSet<Path> {
        self.elements()
            .filter(|x| kind.admits(x.kind))
            .flat_map(|x| self.enumerate_paths_through(x, kind, length))
            .collect()
    }
}

/// The closed-form upper bounds on the number of paths with `2i` elements
/// through a given element in a graph of maximum degree Δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathBoundFormula {
    /// Vertex-paths through a vertex: i·Δ·(Δ−1)^(2i−2).
    VertexThroughVertex,
    /// Vertex-paths through a vertex, total-coloring form: i·Δ^(2i−1).
    VertexThroughVertexCoarse,
    /// Mixed-paths through a vertex: i·Δ^i.
    MixedThroughVertex,
    /// Mixed-paths through an edge: 2i·Δ^(i−1).
    MixedThroughEdge,
    /// Edge-paths through an edge: 2i·Δ^(2i−1).
    EdgeThroughEdge,
}

impl PathBoundFormula {
    pub const ALL: [PathBoundFormula; 5] = [
        PathBoundFormula::VertexThroughVertex,
        PathBoundFormula::VertexThroughVertexCoarse,
        PathBoundFormula::MixedThroughVertex,
        PathBoundFormula::MixedThroughEdge,
        PathBoundFormula::EdgeThroughEdge,
    ];

    pub fn kind(self) -> PathKind {
        match self {
            Self::VertexThroughVertex | Self::VertexThroughVertexCoarse => PathKind::Vertex,
            Self::MixedThroughVertex | Self::MixedThroughEdge => PathKind::Mixed,
            Self::EdgeThroughEdge => PathKind::Edge,
        }
    }

    pub fn through(self) -> ElementKind {
        match self {
            Self::VertexThroughVertex | Self::VertexThroughVertexCoarse | Self::MixedThroughVertex => {
                ElementKind::Vertex
            }
            Self::MixedThroughEdge | Self::EdgeThroughEdge => ElementKind::Edge,
        }
    }

    /// Formulas applying to paths of `kind` through an element of `through`.
    pub fn applicable(through: ElementKind, kind: PathKind) -> impl Iterator<Item = Self> {
        Self::ALL
            .into_iter()
            .filter(move |f| f.through() == through && f.kind() == kind)
    }

    pub fn eval(self, delta: u32, i: u32) -> BigUint {
        let d = BigUint::from(delta);
        let i_big = BigUint::from(i);
        match self {
            Self::VertexThroughVertex => {
                let dm1 = BigUint::from(delta.saturating_sub(1));
                i_big * &d * dm1.pow(2 * i - 2)
            }
            Self::VertexThroughVertexCoarse => i_big * d.pow(2 * i - 1),
            Self::MixedThroughVertex => i_big * d.pow(i),
            Self::MixedThroughEdge => 2u32 * i_big * d.pow(i - 1),
            Self::EdgeThroughEdge => 2u32 * i_big * d.pow(2 * i - 1),
        }
    }
}

/// Upper bound on the number of `kind` paths with `2i` elements through an
/// element of kind `through`. For vertex-paths the sharper i·Δ·(Δ−1)^(2i−2)
/// form is returned; see [`PathBoundFormula`] for the others.
pub fn count_paths_bound(delta: u32, through: ElementKind, kind: PathKind, i: u32) -> Result<BigUint, GraphError> {
    assert!(i >= 1, "half-length must be positive");
    PathBoundFormula::applicable(through, kind)
        .next()
        .map(|f| f.eval(delta, i))
        .ok_or(GraphError::UnsupportedBound { kind, through })
}
