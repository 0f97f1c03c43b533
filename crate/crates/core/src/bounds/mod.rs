//! Closed-form color bounds as functions of the maximum degree Δ, the
//! geometric-series identities they rest on, and numerical certificates.

mod optimize;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use optimize::{optimize, Optimizer, Optimum, SeriesBound, SeriesTerm};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("bound `{name}` requires delta >= {min_delta}, got {delta}")]
    DeltaTooSmall { name: &'static str, delta: u64, min_delta: u64 },
    #[error("series diverges: |x| = {0} >= 1")]
    Divergent(String),
    #[error("no bracketing triple found below alpha = {0}")]
    NoBracket(f64),
    #[error("objective is not unimodal on [{0}, {1}]")]
    NotUnimodal(f64, f64),
    #[error("unknown bound `{0}`")]
    UnknownBound(String),
}

fn cbrt2() -> f64 {
    2f64.cbrt()
}

/// Ceiling that ignores floating-point noise a few ulps above an integer.
pub fn ceil_tolerant(x: f64) -> f64 {
    (x - 16.0 * f64::EPSILON * x.abs().max(1.0)).ceil()
}

/// The named bound formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    /// Thue choice number: Δ² + 3/2^(2/3)·Δ^(5/3) + 2^(2/3)·Δ^(4/3).
    ThueChoice,
    /// ⌈Δ(Δ−1)(1 + 3/2^(2/3)·Δ^(−1/3) + 2^(2/3)·Δ^(−2/3) + Δ^(−1)) + 1⌉.
    ThueChoiceRefined,
    /// Weak total Thue choice number: 6Δ.
    WeakTotal,
    /// ⌈4.25Δ⌉, for Δ ≥ 300.
    ImprovedWeakTotal,
    /// Total Thue choice number: Δ² + 3/2^(1/3)·Δ^(5/3) + 8Δ^(4/3) + 1.
    TotalThue,
    /// Thue choice index, same expression as the total bound.
    ThueIndexChoice,
    /// Earlier Thue choice bound, ⌈Δ² + 3/2^(2/3)·Δ^(5/3) + 2^(2/3)·Δ^(5/3)/(Δ^(1/3) − 2^(1/3))⌉.
    PriorThueChoice,
    /// Leading terms Δ² + 2^(4/3)·Δ^(5/3) of the earlier Thue choice index bound.
    PriorThueIndexLeading,
}

/// A named formula together with its range of validity.
#[derive(Debug, Clone, Copy)]
pub struct BoundFormula {
    pub name: BoundName,
    pub min_delta: u64,
    formula: fn(f64) -> f64,
}

impl BoundFormula {
    pub fn is_valid(&self, delta: u64) -> bool {
        delta >= self.min_delta
    }

    pub fn eval(&self, delta: u64) -> Result<f64, BoundError> {
        if !self.is_valid(delta) {
            return Err(BoundError::DeltaTooSmall {
                name: self.name.as_str(),
                delta,
                min_delta: self.min_delta,
            });
        }
        Ok((self.formula)(delta as f64))
    }
}

fn thue_choice(d: f64) -> f64 {
    let c = cbrt2();
    d * d + 3.0 / (c * c) * d.powf(5.0 / 3.0) + c * c * d.powf(4.0 / 3.0)
}

fn thue_choice_refined(d: f64) -> f64 {
    let c = cbrt2();
    let t = d.cbrt().recip();
    ceil_tolerant(d * (d - 1.0) * (1.0 + 3.0 / (c * c) * t + c * c * t * t + t * t * t) + 1.0)
}

fn total_thue(d: f64) -> f64 {
    d * d + 3.0 / cbrt2() * d.powf(5.0 / 3.0) + 8.0 * d.powf(4.0 / 3.0) + 1.0
}

fn prior_thue_choice(d: f64) -> f64 {
    let c = cbrt2();
    ceil_tolerant(d * d + 3.0 / (c * c) * d.powf(5.0 / 3.0) + c * c * d.powf(5.0 / 3.0) / (d.cbrt() - c))
}

impl BoundName {
    pub const ALL: [BoundName; 8] = [
        BoundName::ThueChoice,
        BoundName::ThueChoiceRefined,
        BoundName::WeakTotal,
        BoundName::ImprovedWeakTotal,
        BoundName::TotalThue,
        BoundName::ThueIndexChoice,
        BoundName::PriorThueChoice,
        BoundName::PriorThueIndexLeading,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::ThueChoice => "thue_choice",
            BoundName::ThueChoiceRefined => "thue_choice_refined",
            BoundName::WeakTotal => "weak_total",
            BoundName::ImprovedWeakTotal => "improved_weak_total",
            BoundName::TotalThue => "total_thue",
            BoundName::ThueIndexChoice => "thue_index_choice",
            BoundName::PriorThueChoice => "prior_thue_choice",
            BoundName::PriorThueIndexLeading => "prior_thue_index_leading",
        }
    }

    pub fn formula(self) -> BoundFormula {
        let (min_delta, formula): (u64, fn(f64) -> f64) = match self {
            BoundName::ThueChoice => (1, thue_choice),
            BoundName::ThueChoiceRefined => (1, thue_choice_refined),
            BoundName::WeakTotal => (1, |d| 6.0 * d),
            BoundName::ImprovedWeakTotal => (300, |d| ceil_tolerant(4.25 * d)),
            BoundName::TotalThue | BoundName::ThueIndexChoice => (1, total_thue),
            // Δ^(1/3) must exceed 2^(1/3)
            BoundName::PriorThueChoice => (3, prior_thue_choice),
            BoundName::PriorThueIndexLeading => (1, |d| d * d + cbrt2().powi(4) * d.powf(5.0 / 3.0)),
        };
        BoundFormula { name: self, min_delta, formula }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundName {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('-', "_");
        BoundName::ALL
            .into_iter()
            .find(|b| b.as_str() == norm)
            .ok_or_else(|| BoundError::UnknownBound(s.to_owned()))
    }
}

pub fn eval_bound(name: BoundName, delta: u64) -> Result<f64, BoundError> {
    name.formula().eval(delta)
}

/// Closed forms of Σ_{i≥1} x^(i−1) and Σ_{i≥1} i·x^(i−1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeometricSums {
    pub sum_x: f64,
    pub sum_i_x: f64,
}

pub fn geometric_sums(x: f64) -> Result<GeometricSums, BoundError> {
    if x.is_nan() || x.abs() >= 1.0 {
        return Err(BoundError::Divergent(x.to_string()));
    }
    let q = 1.0 - x;
    Ok(GeometricSums { sum_x: 1.0 / q, sum_i_x: 1.0 / (q * q) })
}

/// Exact rational version of [`geometric_sums`]: `(Σ x^(i−1), Σ i·x^(i−1))`.
pub fn geometric_sums_exact(x: &BigRational) -> Result<(BigRational, BigRational), BoundError> {
    if x.abs() >= BigRational::one() {
        return Err(BoundError::Divergent(x.to_string()));
    }
    let q = BigRational::one() - x;
    let plain = q.recip();
    let weighted = &plain * &plain;
    Ok((plain, weighted))
}

/// One side-by-side inequality `lhs >= rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InequalityCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
}

impl InequalityCheck {
    fn new(lhs: f64, rhs: f64) -> Self {
        Self { lhs, rhs, margin: lhs - rhs, holds: lhs >= rhs }
    }
}

/// The two numeric inequalities behind the ⌈4.25Δ⌉ weak total bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeltaCertificate {
    pub delta: u64,
    /// 4.25 − (2/Δ)·Σ i/1.62^(i−1) ≥ 4.2, where the sum is (1.62/0.62)².
    pub edge: InequalityCheck,
    /// 4.25 − Σ i·(1.62·4.2)^(−(i−1)/2) ≥ 1.62.
    pub vertex: InequalityCheck,
    pub holds: bool,
}

pub const IMPROVED_LIST_FACTOR: f64 = 4.25;
pub const IMPROVED_VERTEX_GROWTH: f64 = 1.62;
pub const IMPROVED_EDGE_GROWTH: f64 = 4.2;

pub fn certify_delta_inequalities(delta: u64) -> DeltaCertificate {
    assert!(delta >= 1, "delta must be positive");
    let edge_sum = geometric_sums(1.0 / IMPROVED_VERTEX_GROWTH).expect("1/1.62 < 1").sum_i_x;
    let edge = InequalityCheck::new(
        IMPROVED_LIST_FACTOR - 2.0 / delta as f64 * edge_sum,
        IMPROVED_EDGE_GROWTH,
    );
    let ratio = (IMPROVED_VERTEX_GROWTH * IMPROVED_EDGE_GROWTH).sqrt().recip();
    let vertex_sum = geometric_sums(ratio).expect("ratio < 1").sum_i_x;
    let vertex = InequalityCheck::new(IMPROVED_LIST_FACTOR - vertex_sum, IMPROVED_VERTEX_GROWTH);
    DeltaCertificate { delta, edge, vertex, holds: edge.holds && vertex.holds }
}

fn cubic(x: f64) -> f64 {
    ((4.0 * x - 20.0) * x - 4.0) * x - 3.0
}

/// The real root above 1 of 4x³ − 20x² − 4x − 3.
pub fn root_cubic() -> f64 {
    // p(1) < 0 < p(20), and p is increasing beyond its larger critical point
    let (mut lo, mut hi) = (1.0f64, 20.0f64);
    while hi - lo > 4.0 * f64::EPSILON * hi {
        let mid = 0.5 * (lo + hi);
        if cubic(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Residual of the cubic at `x`, for callers checking a root.
pub fn cubic_residual(x: f64) -> f64 {
    cubic(x)
}
