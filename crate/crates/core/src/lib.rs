//! Non-repetitive colorings of generalized graphs: square detection, exact
//! counting of square-free list colorings, growth-claim checks, closed-form
//! bounds and a randomized resampling colorer.

pub mod bounds;
pub mod coloring;
pub mod graph;
pub mod lemma;
pub mod repetition;
pub mod resample;

pub use coloring::{BigCount, Color, Coloring, CountError, ListAssignment};
pub use graph::{ElementId, ElementKind, GeneralizedGraph, GraphError, Path, PathKind};
pub use lemma::{check_growth, ClaimFamily, GrowthClaim, GrowthReport};
pub use repetition::{find_violating_path, is_valid, Regime};
pub use resample::{resample_color, ResampleRun};
