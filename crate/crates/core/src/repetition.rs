//! Square detection in color sequences and in colored graphs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::graph::{ElementId, ElementKind, GeneralizedGraph, Path, PathKind};

/// Which elements get colored and which path kinds must be square-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    VertexThue,
    EdgeThue,
    WeakTotalThue,
    StrongTotalThue,
}

impl Regime {
    pub const ALL: [Regime; 4] = [
        Regime::VertexThue,
        Regime::EdgeThue,
        Regime::WeakTotalThue,
        Regime::StrongTotalThue,
    ];

    pub fn path_kinds(self) -> &'static [PathKind] {
        match self {
            Regime::VertexThue => &[PathKind::Vertex],
            Regime::EdgeThue => &[PathKind::Edge],
            Regime::WeakTotalThue => &[PathKind::Mixed],
            Regime::StrongTotalThue => &[PathKind::Vertex, PathKind::Edge, PathKind::Mixed],
        }
    }

    /// Whether elements of `kind` carry a color under this regime.
    pub fn colors(self, kind: ElementKind) -> bool {
        match self {
            Regime::VertexThue => kind == ElementKind::Vertex,
            Regime::EdgeThue => kind == ElementKind::Edge,
            Regime::WeakTotalThue | Regime::StrongTotalThue => true,
        }
    }

    /// The elements of `g` colored under this regime, vertices first.
    pub fn relevant_elements(self, g: &GeneralizedGraph) -> Vec<ElementId> {
        g.elements().filter(|x| self.colors(x.kind)).collect()
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::VertexThue => "vertex",
            Regime::EdgeThue => "edge",
            Regime::WeakTotalThue => "weak-total",
            Regime::StrongTotalThue => "total",
        })
    }
}

impl FromStr for Regime {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertex" | "vertex-thue" => Ok(Regime::VertexThue),
            "edge" | "edge-thue" => Ok(Regime::EdgeThue),
            "weak-total" | "weak-total-thue" => Ok(Regime::WeakTotalThue),
            "total" | "strong-total" | "strong-total-thue" => Ok(Regime::StrongTotalThue),
            _ => Err(format!(
                "unknown regime `{s}` (expected vertex, edge, weak-total or total)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepetitionError {
    #[error("element {0} must be colored under the {1} regime")]
    Uncolored(ElementId, Regime),
}

/// Position and half-length of the shortest square factor of `s`, leftmost
/// among the shortest; `None` if `s` is square-free.
pub fn find_square<T: PartialEq>(s: &[T]) -> Option<(usize, usize)> {
    for half in 1..=s.len() / 2 {
        let mut run = 0;
        for j in 0..s.len() - half {
            if s[j] == s[j + half] {
                run += 1;
                if run == half {
                    return Some((j + 1 - half, half));
                }
            } else {
                run = 0;
            }
        }
    }
    None
}

pub fn is_square_free<T: PartialEq>(s: &[T]) -> bool {
    find_square(s).is_none()
}

/// Whether `s` itself is a nonempty square (even length, halves equal).
pub fn is_square<T: PartialEq>(s: &[T]) -> bool {
    !s.is_empty() && s.len() % 2 == 0 && s[..s.len() / 2] == s[s.len() / 2..]
}

/// A path of the regime's kinds, all of whose elements are colored, whose
/// color sequence is a square. The shortest such path is returned, ties
/// broken by the smallest canonical element sequence. With `must_contain`,
/// only paths through that element qualify.
pub fn find_violating_path(
    g: &GeneralizedGraph,
    c: &Coloring,
    regime: Regime,
    must_contain: Option<ElementId>,
) -> Option<Path> {
    find_violating_path_by(g, |x| c.get(x), regime, must_contain)
}

/// Both halves of a candidate square, grown in lockstep so that
/// `color(a[j]) == color(b[j])` holds at every index.
struct Halves {
    a: Vec<ElementId>,
    b: Vec<ElementId>,
}

impl Halves {
    fn uses(&self, x: ElementId) -> bool {
        self.a.contains(&x) || self.b.contains(&x)
    }
}

pub(crate) fn find_violating_path_by<F>(
    g: &GeneralizedGraph,
    color: F,
    regime: Regime,
    must_contain: Option<ElementId>,
) -> Option<Path>
where
    F: Fn(ElementId) -> Option<Color>,
{
    let mut frontiers: Vec<(PathKind, Vec<Halves>)> = regime
        .path_kinds()
        .iter()
        .map(|&kind| (kind, seed_pairs(g, &color, kind)))
        .collect();

    while frontiers.iter().any(|(_, f)| !f.is_empty()) {
        let mut best: Option<Path> = None;
        for (kind, frontier) in &frontiers {
            for h in frontier {
                if !g.path_adjacent(*h.a.last().unwrap(), h.b[0], *kind) {
                    continue;
                }
                let seq = h.a.iter().chain(&h.b).copied().collect();
                let p = Path::canonical(*kind, seq);
                if must_contain.is_some_and(|x| !p.contains(x)) {
                    continue;
                }
                if best.as_ref().map_or(true, |b| (&p.elements, p.kind) < (&b.elements, b.kind)) {
                    best = Some(p);
                }
            }
        }
        if best.is_some() {
            return best;
        }
        for (kind, frontier) in &mut frontiers {
            *frontier = grow(g, &color, *kind, std::mem::take(frontier));
        }
    }
    None
}

fn seed_pairs<F>(g: &GeneralizedGraph, color: &F, kind: PathKind) -> Vec<Halves>
where
    F: Fn(ElementId) -> Option<Color>,
{
    let mut by_color: BTreeMap<Color, Vec<ElementId>> = BTreeMap::new();
    for x in g.elements().filter(|x| kind.admits(x.kind)) {
        if let Some(c) = color(x) {
            by_color.entry(c).or_default().push(x);
        }
    }
    let mut out = Vec::new();
    for group in by_color.values() {
        for &u in group {
            for &w in group {
                if u != w {
                    out.push(Halves { a: vec![u], b: vec![w] });
                }
            }
        }
    }
    out
}

fn grow<F>(g: &GeneralizedGraph, color: &F, kind: PathKind, frontier: Vec<Halves>) -> Vec<Halves>
where
    F: Fn(ElementId) -> Option<Color>,
{
    let mut out = Vec::new();
    for h in frontier {
        let next_a: Vec<(ElementId, Color)> = g
            .path_neighbors(*h.a.last().unwrap(), kind)
            .into_iter()
            .filter(|&x| !h.uses(x))
            .filter_map(|x| color(x).map(|c| (x, c)))
            .collect();
        if next_a.is_empty() {
            continue;
        }
        for y in g.path_neighbors(*h.b.last().unwrap(), kind) {
            if h.uses(y) {
                continue;
            }
            let Some(cy) = color(y) else { continue };
            for &(x, cx) in &next_a {
                if x != y && cx == cy {
                    let mut a = h.a.clone();
                    let mut b = h.b.clone();
                    a.push(x);
                    b.push(y);
                    out.push(Halves { a, b });
                }
            }
        }
    }
    out
}

/// Checks that every element the regime colors is colored, then that no
/// regime path is a square.
pub fn is_valid(g: &GeneralizedGraph, c: &Coloring, regime: Regime) -> Result<bool, RepetitionError> {
    if let Some(x) = regime.relevant_elements(g).into_iter().find(|&x| c.get(x).is_none()) {
        return Err(RepetitionError::Uncolored(x, regime));
    }
    Ok(find_violating_path(g, c, regime, None).is_none())
}

/// Colors along `path`, `None` if some element is uncolored.
pub fn path_colors(path: &Path, c: &Coloring) -> Option<Vec<Color>> {
    path.elements.iter().map(|&x| c.get(x)).collect()
}
