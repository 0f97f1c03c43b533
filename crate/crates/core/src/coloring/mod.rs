//! List assignments, colorings, and exact counting of valid colorings.

mod count;
mod json;
mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{ElementId, GeneralizedGraph};
use crate::repetition::Regime;

pub use count::{
    count_colorings, count_violations, enumerate_colorings, find_coloring, prefix_counts, thue_number,
    ColoringStream,
};
pub use json::{ColoringEntry, ListEntry, ListsJson};

/// An opaque color identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(pub u32);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A partial map from elements to colors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Coloring(BTreeMap<ElementId, Color>);

impl Coloring {
    pub fn get(&self, x: ElementId) -> Option<Color> {
        self.0.get(&x).copied()
    }

    pub fn insert(&mut self, x: ElementId, c: Color) -> Option<Color> {
        self.0.insert(x, c)
    }

    pub fn remove(&mut self, x: ElementId) -> Option<Color> {
        self.0.remove(&x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElementId, Color)> + '_ {
        self.0.iter().map(|(&x, &c)| (x, c))
    }

    /// The coloring restricted to the elements present in `g`.
    pub fn restrict(&self, g: &GeneralizedGraph) -> Self {
        self.iter().filter(|(x, _)| g.contains(*x)).collect()
    }

    /// Whether every assigned color belongs to the element's list.
    pub fn respects(&self, lists: &ListAssignment) -> bool {
        self.iter()
            .all(|(x, c)| lists.get(x).is_some_and(|l| l.contains(&c)))
    }
}

impl FromIterator<(ElementId, Color)> for Coloring {
    fn from_iter<I: IntoIterator<Item = (ElementId, Color)>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// Element → set of allowed colors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ListAssignment(BTreeMap<ElementId, BTreeSet<Color>>);

impl ListAssignment {
    /// Every element of `g` gets the colors `0..k`.
    pub fn uniform(g: &GeneralizedGraph, k: u32) -> Self {
        let list: BTreeSet<Color> = (0..k).map(Color).collect();
        Self(g.elements().map(|x| (x, list.clone())).collect())
    }

    pub fn get(&self, x: ElementId) -> Option<&BTreeSet<Color>> {
        self.0.get(&x)
    }

    pub fn set(&mut self, x: ElementId, colors: impl IntoIterator<Item = Color>) {
        self.0.insert(x, colors.into_iter().collect());
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElementId, &BTreeSet<Color>)> + '_ {
        self.0.iter().map(|(&x, l)| (x, l))
    }

    /// Smallest list size over the elements the regime colors in `g`.
    pub fn min_size(&self, g: &GeneralizedGraph, regime: Regime) -> Option<usize> {
        regime
            .relevant_elements(g)
            .into_iter()
            .filter_map(|x| self.get(x).map(BTreeSet::len))
            .min()
    }

    /// Errors on the first regime-colored element of `g` without a list.
    pub fn check_covers(&self, g: &GeneralizedGraph, regime: Regime) -> Result<(), CountError> {
        match regime.relevant_elements(g).into_iter().find(|x| !self.0.contains_key(x)) {
            Some(x) => Err(CountError::MissingList(x)),
            None => Ok(()),
        }
    }
}

impl FromIterator<(ElementId, BTreeSet<Color>)> for ListAssignment {
    fn from_iter<I: IntoIterator<Item = (ElementId, BTreeSet<Color>)>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("element {0} has no color list")]
    MissingList(ElementId),
    #[error("element {0} is not colored under the {1} regime")]
    NotColored(ElementId, Regime),
    #[error("element {0} is not in the graph")]
    UnknownElement(ElementId),
    #[error("element order is not a permutation of the colored elements: {0}")]
    BadOrder(String),
}

/// Exact nonnegative count, serialized as a decimal string.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn zero() -> Self {
        Self(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }

    /// Saturating subtraction.
    pub fn saturating_sub(&self, other: &Self) -> Self {
        if other.0 > self.0 {
            Self::zero()
        } else {
            Self(&self.0 - &other.0)
        }
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for BigCount {
    type Output = BigCount;
    /// Panics on underflow, like unsigned integer subtraction.
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Mul<u64> for &BigCount {
    type Output = BigCount;
    fn mul(self, rhs: u64) -> BigCount {
        BigCount(&self.0 * rhs)
    }
}

impl std::iter::Sum for BigCount {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BigCount {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(Self)
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_str_radix(10))
    }
}

impl<'de> Deserialize<'de> for BigCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
