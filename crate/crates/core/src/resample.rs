//! Randomized coloring by repeated resampling of squares.

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, Coloring, CountError, ListAssignment};
use crate::graph::{families, ElementId, GeneralizedGraph};
use crate::lemma::GrowthClaim;
use crate::repetition::{find_violating_path, Regime};

/// Identifier of the generator behind every seed in this module.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Success { coloring: Coloring },
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResampleRun {
    pub seed: u64,
    pub max_steps: u64,
    pub steps_used: u64,
    #[serde(flatten)]
    pub outcome: Outcome,
    pub rng: &'static str,
}

impl ResampleRun {
    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.outcome {
            Outcome::Success { coloring } => Some(coloring),
            Outcome::Exhausted => None,
        }
    }

    pub fn succeeded(&self) -> bool {
        self.coloring().is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ResampleError {
    #[error("list of {0} is empty")]
    EmptyList(ElementId),
    #[error(transparent)]
    Count(#[from] CountError),
}

/// One resampling step: the path found and its colors before and after.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub path: Vec<ElementId>,
    pub before: Vec<Color>,
    pub after: Vec<Color>,
}

fn draw(rng: &mut ChaCha8Rng, list: &[Color]) -> Color {
    *list.choose(rng).expect("lists checked nonempty")
}

fn sorted_lists(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    regime: Regime,
) -> Result<Vec<(ElementId, Vec<Color>)>, ResampleError> {
    lists.check_covers(g, regime)?;
    regime
        .relevant_elements(g)
        .into_iter()
        .map(|x| {
            let l: Vec<Color> = lists.get(x).expect("covered").iter().copied().collect();
            if l.is_empty() {
                Err(ResampleError::EmptyList(x))
            } else {
                Ok((x, l))
            }
        })
        .collect()
}

fn run(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    regime: Regime,
    rng: &mut ChaCha8Rng,
    max_steps: u64,
    mut observe: impl FnMut(StepRecord),
) -> Result<(u64, Outcome), ResampleError> {
    let lists = sorted_lists(g, lists, regime)?;
    let index: std::collections::BTreeMap<ElementId, usize> =
        lists.iter().enumerate().map(|(i, (x, _))| (*x, i)).collect();
    let mut coloring: Coloring = lists.iter().map(|(x, l)| (*x, draw(rng, l))).collect();
    let mut steps = 0;
    loop {
        let Some(path) = find_violating_path(g, &coloring, regime, None) else {
            return Ok((steps, Outcome::Success { coloring }));
        };
        if steps == max_steps {
            return Ok((steps, Outcome::Exhausted));
        }
        steps += 1;
        let colors_of = |c: &Coloring| path.elements.iter().map(|&x| c.get(x).expect("colored")).collect();
        let before = colors_of(&coloring);
        for &x in path.second_half() {
            coloring.insert(x, draw(rng, &lists[index[&x]].1));
        }
        let after = colors_of(&coloring);
        observe(StepRecord { path: path.elements, before, after });
    }
}

/// Starts from independent uniform draws from each list (in element order),
/// then, while some regime path is a square, redraws the second half of the
/// shortest one. Runs at most `max_steps` redraws.
pub fn resample_color(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    regime: Regime,
    seed: u64,
    max_steps: u64,
) -> Result<ResampleRun, ResampleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (steps_used, outcome) = run(g, lists, regime, &mut rng, max_steps, |_| {})?;
    Ok(ResampleRun { seed, max_steps, steps_used, outcome, rng: RNG_ALGORITHM })
}

/// [`resample_color`] that also returns every step taken.
pub fn resample_color_traced(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    regime: Regime,
    seed: u64,
    max_steps: u64,
) -> Result<(ResampleRun, Vec<StepRecord>), ResampleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trace = Vec::new();
    let (steps_used, outcome) = run(g, lists, regime, &mut rng, max_steps, |s| trace.push(s))?;
    Ok((ResampleRun { seed, max_steps, steps_used, outcome, rng: RNG_ALGORITHM }, trace))
}

/// Random graph families for [`success_profile`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum RandomGraphSpec {
    Regular { n: usize, degree: usize },
    BoundedDegree { n: usize, max_degree: usize, p: f64 },
    Path { n: usize },
    Cycle { n: usize },
}

impl RandomGraphSpec {
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> GeneralizedGraph {
        match *self {
            RandomGraphSpec::Regular { n, degree } => families::random_regular(n, degree, rng),
            RandomGraphSpec::BoundedDegree { n, max_degree, p } => {
                families::random_bounded_degree(n, max_degree, p, rng)
            }
            RandomGraphSpec::Path { n } => families::path(n),
            RandomGraphSpec::Cycle { n } => families::cycle(n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StepQuantiles {
    pub min: u64,
    pub median: u64,
    pub p90: u64,
    pub max: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileStats {
    pub trials: usize,
    pub successes: usize,
    pub success_rate: Option<f64>,
    /// Over successful trials only.
    pub steps: Option<StepQuantiles>,
    pub seed: u64,
    pub list_size: usize,
    pub rng: &'static str,
}

/// Nearest-rank quantile of a sorted slice.
fn quantile(sorted: &[u64], q: f64) -> u64 {
    let rank = ((q * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len());
    sorted[rank - 1]
}

/// Trial `t` samples its graph from stream `t` of a generator seeded with
/// `seed`, then runs the resampler with lists `0..list_size` and the seed
/// drawn from the same stream. Trials run in parallel; the result does not
/// depend on scheduling.
pub fn success_profile(
    generator: &RandomGraphSpec,
    claim: &GrowthClaim,
    trials: usize,
    seed: u64,
    max_steps: u64,
) -> Result<ProfileStats, ResampleError> {
    let runs: Vec<ResampleRun> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let g = generator.sample(&mut rng);
            let run_seed = rand::Rng::random(&mut rng);
            let lists = ListAssignment::uniform(&g, claim.list_size as u32);
            resample_color(&g, &lists, claim.regime, run_seed, max_steps)
        })
        .collect::<Result<_, _>>()?;
    let mut steps: Vec<u64> = runs.iter().filter(|r| r.succeeded()).map(|r| r.steps_used).collect();
    steps.sort_unstable();
    let successes = steps.len();
    Ok(ProfileStats {
        trials,
        successes,
        success_rate: (trials > 0).then(|| successes as f64 / trials as f64),
        steps: (!steps.is_empty()).then(|| StepQuantiles {
            min: steps[0],
            median: quantile(&steps, 0.5),
            p90: quantile(&steps, 0.9),
            max: *steps.last().unwrap(),
        }),
        seed,
        list_size: claim.list_size,
        rng: RNG_ALGORITHM,
    })
}
