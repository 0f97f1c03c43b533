//! Instance checks of the growth claims: with lists of a given size, adding
//! one element multiplies the number of valid colorings by at least a given
//! factor.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{
    ceil_tolerant, eval_bound, BoundError, BoundName, IMPROVED_EDGE_GROWTH, IMPROVED_LIST_FACTOR,
    IMPROVED_VERTEX_GROWTH,
};
use crate::coloring::{count_colorings, count_violations, BigCount, CountError, ListAssignment};
use crate::graph::{ElementId, ElementKind, GeneralizedGraph};
use crate::repetition::Regime;

/// Ratios within this fraction of the claimed growth are reported as tight.
pub const TIGHT_FRACTION: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementScope {
    Vertex,
    Edge,
    Any,
}

impl ElementScope {
    pub fn admits(self, kind: ElementKind) -> bool {
        match self {
            ElementScope::Vertex => kind == ElementKind::Vertex,
            ElementScope::Edge => kind == ElementKind::Edge,
            ElementScope::Any => true,
        }
    }
}

/// The built-in claim families, each a function of Δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimFamily {
    /// Paths, lists of 4, growth 2 when the path is extended at an end.
    Path,
    /// Vertex coloring, lists Δ(Δ−1)(1 + γΔ^(−1/3)) + 1, growth Δ(Δ−1)(1 + 2^(1/3)Δ^(−1/3)).
    ThueChoice,
    /// Weak total coloring, lists 6Δ, growth 3Δ.
    WeakTotal,
    /// Weak total coloring for Δ ≥ 300, lists 4.25Δ, growth 1.62Δ at vertices.
    ImprovedWeakTotalVertex,
    /// Same lists, growth 4.2Δ at edges.
    ImprovedWeakTotalEdge,
    /// Total coloring, lists Δ²(1 + γΔ^(−1/3)), growth Δ²(1 + 2^(2/3)Δ^(−1/3)).
    Total,
}

impl ClaimFamily {
    pub const ALL: [ClaimFamily; 6] = [
        ClaimFamily::Path,
        ClaimFamily::ThueChoice,
        ClaimFamily::WeakTotal,
        ClaimFamily::ImprovedWeakTotalVertex,
        ClaimFamily::ImprovedWeakTotalEdge,
        ClaimFamily::Total,
    ];

    pub fn min_delta(self) -> u32 {
        match self {
            ClaimFamily::Path => 1,
            ClaimFamily::ImprovedWeakTotalVertex | ClaimFamily::ImprovedWeakTotalEdge => 300,
            _ => 2,
        }
    }

    /// Exhaustive counting at this family's list sizes fits on a desk.
    pub fn desk_scale(self) -> bool {
        !matches!(self, ClaimFamily::ImprovedWeakTotalVertex | ClaimFamily::ImprovedWeakTotalEdge)
    }

    /// The claim's parameters at maximum degree `delta`.
    pub fn at(self, delta: u32) -> Result<GrowthClaim, ClaimError> {
        if delta < self.min_delta() {
            return Err(ClaimError::DeltaOutOfRange { family: self, delta });
        }
        let d = delta as f64;
        let c = 2f64.cbrt();
        let t = d.cbrt().recip();
        let (regime, delta, list_real, growth, scope) = match self {
            ClaimFamily::Path => {
                if delta > 2 {
                    return Err(ClaimError::DeltaOutOfRange { family: self, delta });
                }
                (Regime::VertexThue, 2, 4.0, 2.0, ElementScope::Vertex)
            }
            ClaimFamily::ThueChoice => (
                Regime::VertexThue,
                delta,
                eval_bound(BoundName::ThueChoiceRefined, delta as u64)?,
                d * (d - 1.0) * (1.0 + c * t),
                ElementScope::Vertex,
            ),
            ClaimFamily::WeakTotal => (
                Regime::WeakTotalThue,
                delta,
                eval_bound(BoundName::WeakTotal, delta as u64)?,
                3.0 * d,
                ElementScope::Any,
            ),
            ClaimFamily::ImprovedWeakTotalVertex => (
                Regime::WeakTotalThue,
                delta,
                IMPROVED_LIST_FACTOR * d,
                IMPROVED_VERTEX_GROWTH * d,
                ElementScope::Vertex,
            ),
            ClaimFamily::ImprovedWeakTotalEdge => (
                Regime::WeakTotalThue,
                delta,
                IMPROVED_LIST_FACTOR * d,
                IMPROVED_EDGE_GROWTH * d,
                ElementScope::Edge,
            ),
            ClaimFamily::Total => {
                let gamma = 3.0 / c + 8.0 * t;
                (
                    Regime::StrongTotalThue,
                    delta,
                    d * d * (1.0 + gamma * t),
                    d * d * (1.0 + c * c * t),
                    ElementScope::Any,
                )
            }
        };
        Ok(GrowthClaim {
            family: self,
            regime,
            delta,
            list_size: ceil_tolerant(list_real) as usize,
            growth,
            element_kind: scope,
        })
    }
}

impl fmt::Display for ClaimFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimFamily::Path => "path",
            ClaimFamily::ThueChoice => "thue-choice",
            ClaimFamily::WeakTotal => "weak-total",
            ClaimFamily::ImprovedWeakTotalVertex => "improved-weak-total-vertex",
            ClaimFamily::ImprovedWeakTotalEdge => "improved-weak-total-edge",
            ClaimFamily::Total => "total",
        })
    }
}

impl FromStr for ClaimFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimFamily::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| format!("unknown claim `{s}`"))
    }
}

/// All built-in claim families.
pub fn builtin_claims() -> Vec<ClaimFamily> {
    ClaimFamily::ALL.to_vec()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthClaim {
    pub family: ClaimFamily,
    pub regime: Regime,
    pub delta: u32,
    pub list_size: usize,
    pub growth: f64,
    pub element_kind: ElementScope,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClaimError {
    #[error("claim {family} is not defined at delta = {delta}")]
    DeltaOutOfRange { family: ClaimFamily, delta: u32 },
    #[error("list of {element} has {size} colors, claim needs at least {needed}")]
    ListTooSmall { element: ElementId, size: usize, needed: usize },
    #[error("graph has maximum degree {actual}, claim allows at most {allowed}")]
    DegreeTooLarge { actual: usize, allowed: u32 },
    #[error("claim applies to {scope:?} elements, got {element}")]
    WrongElementKind { element: ElementId, scope: ElementScope },
    #[error("path claim needs a path endpoint in a graph whose vertex relation is a linear forest")]
    NotPathEnd,
    #[error("claim {0} is not desk-scale; only its inequality certificate is checked")]
    NotDeskScale(ClaimFamily),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthReport {
    pub element: ElementId,
    /// |C_L(G)|
    pub count: BigCount,
    /// |C_L(G \ {x})|
    pub count_without: BigCount,
    /// growth · |C_L(G \ {x})|
    pub rhs_bound: f64,
    pub ratio: Option<f64>,
    pub holds: bool,
    pub tight: bool,
}

/// Whether the vertex relation is a disjoint union of paths and `x` has at
/// most one neighbour.
fn is_path_end(g: &GeneralizedGraph, x: ElementId) -> bool {
    if !x.is_vertex() || g.vertex_neighbors(x.index).count() > 1 {
        return false;
    }
    if g.vertices().any(|v| g.vertex_neighbors(v).count() > 2) {
        return false;
    }
    // a forest with max degree 2 has fewer vv pairs than vertices in each component
    let mut seen = std::collections::BTreeSet::new();
    for start in g.vertices() {
        if !seen.insert(start) {
            continue;
        }
        let (mut nodes, mut degree_sum) = (0usize, 0usize);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            nodes += 1;
            for w in g.vertex_neighbors(v) {
                degree_sum += 1;
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if degree_sum / 2 >= nodes {
            return false;
        }
    }
    true
}

fn check_preconditions(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    claim: &GrowthClaim,
    x: ElementId,
) -> Result<(), ClaimError> {
    if !claim.family.desk_scale() {
        return Err(ClaimError::NotDeskScale(claim.family));
    }
    if !g.contains(x) {
        return Err(CountError::UnknownElement(x).into());
    }
    if !claim.element_kind.admits(x.kind) || !claim.regime.colors(x.kind) {
        return Err(ClaimError::WrongElementKind { element: x, scope: claim.element_kind });
    }
    if g.max_degree() > claim.delta as usize {
        return Err(ClaimError::DegreeTooLarge { actual: g.max_degree(), allowed: claim.delta });
    }
    lists.check_covers(g, claim.regime)?;
    for y in claim.regime.relevant_elements(g) {
        let size = lists.get(y).map_or(0, |l| l.len());
        if size < claim.list_size {
            return Err(ClaimError::ListTooSmall { element: y, size, needed: claim.list_size });
        }
    }
    if claim.family == ClaimFamily::Path && !is_path_end(g, x) {
        return Err(ClaimError::NotPathEnd);
    }
    Ok(())
}

fn to_rational(c: &BigCount) -> BigRational {
    BigRational::from_integer(BigInt::from(c.0.clone()))
}

/// Counts `C_L(g)` and `C_L(g \ {x})` exactly and compares their ratio with
/// the claimed growth. The comparison is exact: the growth factor is
/// converted to the rational number its `f64` value denotes.
pub fn check_growth(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    claim: &GrowthClaim,
    x: ElementId,
) -> Result<GrowthReport, ClaimError> {
    check_preconditions(g, lists, claim, x)?;
    let minus = g.delete(&[x]).expect("x is in g");
    let count = count_colorings(g, lists, claim.regime, None)?;
    let count_without = count_colorings(&minus, lists, claim.regime, None)?;
    let growth = BigRational::from_float(claim.growth).expect("growth is finite");
    let holds = to_rational(&count) >= growth * to_rational(&count_without);
    let ratio = (!count_without.is_zero()).then(|| {
        let r = to_rational(&count) / to_rational(&count_without);
        num_traits::ToPrimitive::to_f64(&r).unwrap_or(f64::INFINITY)
    });
    let tight = ratio.is_some_and(|r| r < claim.growth * (1.0 + TIGHT_FRACTION));
    Ok(GrowthReport {
        element: x,
        rhs_bound: claim.growth * count_without.to_f64(),
        count,
        count_without,
        ratio,
        holds,
        tight,
    })
}

/// `C_L(g) = |L(x)|·C_L(g \ {x}) − |F|`, each side computed independently.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub element: ElementId,
    pub list_size: usize,
    pub count: BigCount,
    pub count_without: BigCount,
    pub violations: BigCount,
    pub holds: bool,
}

pub fn check_identity(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    regime: Regime,
    x: ElementId,
) -> Result<IdentityReport, ClaimError> {
    let count = count_colorings(g, lists, regime, None)?;
    let minus = g.delete(&[x]).map_err(|_| CountError::UnknownElement(x))?;
    let count_without = count_colorings(&minus, lists, regime, None)?;
    let violations = count_violations(g, lists, regime, x)?;
    let k = lists.get(x).map_or(0, |l| l.len());
    let holds = count.clone() + violations.clone() == &count_without * k as u64;
    Ok(IdentityReport { element: x, list_size: k, count, count_without, violations, holds })
}

/// One corpus entry for [`sweep`].
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub graph: GeneralizedGraph,
    pub lists: ListAssignment,
    pub element: ElementId,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub name: String,
    #[serde(flatten)]
    pub report: GrowthReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub claim: GrowthClaim,
    pub instances: usize,
    pub min_ratio: Option<f64>,
    pub failures: Vec<SweepRecord>,
    pub tight: usize,
    pub records: Vec<SweepRecord>,
}

impl SweepSummary {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs [`check_growth`] on every instance (in parallel, results in corpus
/// order) and summarises the outcome.
pub fn sweep(corpus: &[Instance], claim: &GrowthClaim) -> Result<SweepSummary, ClaimError> {
    let reports: Vec<GrowthReport> = corpus
        .par_iter()
        .map(|inst| check_growth(&inst.graph, &inst.lists, claim, inst.element))
        .collect::<Result<_, _>>()?;
    let records: Vec<SweepRecord> = corpus
        .iter()
        .zip(reports)
        .map(|(inst, report)| SweepRecord { name: inst.name.clone(), report })
        .collect();
    let min_ratio = records.iter().filter_map(|r| r.report.ratio).reduce(f64::min);
    let failures = records.iter().filter(|r| !r.report.holds).cloned().collect();
    let tight = records.iter().filter(|r| r.report.tight).count();
    Ok(SweepSummary {
        claim: claim.clone(),
        instances: records.len(),
        min_ratio,
        failures,
        tight,
        records,
    })
}
