//! Backtracking over a fixed element order.
//!
//! For each position the plan stores every regime path of even length that
//! contains the element at that position and otherwise only earlier
//! elements. A partial assignment of positions `0..=d` is valid iff no path
//! stored at any position `<= d` is a square, so pruning after each
//! assignment needs only the paths stored at the new position.

use std::collections::BTreeSet;

use super::{Color, Coloring, CountError, ListAssignment};
use crate::graph::{ElementId, GeneralizedGraph};
use crate::repetition::Regime;

pub(crate) struct Plan {
    pub order: Vec<ElementId>,
    pub lists: Vec<Vec<Color>>,
    checks: Vec<Vec<Box<[u32]>>>,
}

impl Plan {
    pub fn new(
        g: &GeneralizedGraph,
        lists: &ListAssignment,
        regime: Regime,
        order: Option<&[ElementId]>,
    ) -> Result<Self, CountError> {
        lists.check_covers(g, regime)?;
        let relevant = regime.relevant_elements(g);
        let order: Vec<ElementId> = match order {
            None => relevant,
            Some(o) => {
                let want: BTreeSet<_> = relevant.iter().copied().collect();
                let got: BTreeSet<_> = o.iter().copied().collect();
                if got.len() != o.len() {
                    return Err(CountError::BadOrder("repeated element".into()));
                }
                if got != want {
                    return Err(CountError::BadOrder(format!(
                        "expected {} colored elements, got a different set",
                        want.len()
                    )));
                }
                o.to_vec()
            }
        };
        let plan_lists = order
            .iter()
            .map(|&x| lists.get(x).expect("covered").iter().copied().collect())
            .collect();

        let mut checks = Vec::with_capacity(order.len());
        let mut prefix = BTreeSet::new();
        for (d, &x) in order.iter().enumerate() {
            prefix.insert(x);
            let sub = g.restrict_to(&prefix);
            let position = |y: &ElementId| order[..=d].iter().position(|z| z == y).unwrap() as u32;
            let mut here: Vec<Box<[u32]>> = Vec::new();
            for len in (2..=d + 1).step_by(2) {
                for &kind in regime.path_kinds() {
                    for p in sub.enumerate_paths_through(x, kind, len) {
                        here.push(p.elements.iter().map(position).collect());
                    }
                }
            }
            checks.push(here);
        }
        Ok(Self { order, lists: plan_lists, checks })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    /// Whether the assignment of positions `0..=d` stays square-free given
    /// that `0..d` already was.
    #[inline]
    pub fn accepts(&self, d: usize, colors: &[Color]) -> bool {
        self.checks[d].iter().all(|p| {
            let h = p.len() / 2;
            (0..h).any(|j| colors[p[j] as usize] != colors[p[j + h] as usize])
        })
    }

    pub fn coloring(&self, colors: &[Color]) -> Coloring {
        self.order.iter().copied().zip(colors.iter().copied()).collect()
    }
}

/// Depth-first search yielding each valid full assignment of the first
/// `depth` positions once, in lexicographic order of list indices.
pub(crate) struct Search {
    depth: usize,
    choice: Vec<usize>,
    pub colors: Vec<Color>,
    root: (usize, usize),
    started: bool,
    done: bool,
    /// Successful placements per position; entry `d` ends up as the number
    /// of valid colorings of the first `d + 1` positions.
    pub placed: Option<Vec<u64>>,
}

impl Search {
    pub fn new(plan: &Plan, depth: usize) -> Self {
        let root_len = plan.lists.first().map_or(0, Vec::len);
        Self {
            depth,
            choice: vec![0; depth],
            colors: vec![Color(0); plan.len()],
            root: (0, root_len),
            started: false,
            done: false,
            placed: None,
        }
    }

    /// Restricts the first position to list index `i`.
    pub fn pin_root(mut self, i: usize) -> Self {
        self.root = (i, i + 1);
        self
    }

    pub fn with_placement_counts(mut self) -> Self {
        self.placed = Some(vec![0; self.depth]);
        self
    }

    pub fn next_leaf(&mut self, plan: &Plan) -> bool {
        if self.done {
            return false;
        }
        let n = self.depth;
        if n == 0 {
            self.done = true;
            return true;
        }
        let mut d = if self.started {
            n - 1
        } else {
            self.started = true;
            self.choice[0] = self.root.0;
            0
        };
        loop {
            let list = &plan.lists[d];
            let end = if d == 0 { self.root.1.min(list.len()) } else { list.len() };
            let mut ok = false;
            while self.choice[d] < end {
                self.colors[d] = list[self.choice[d]];
                self.choice[d] += 1;
                if plan.accepts(d, &self.colors) {
                    ok = true;
                    break;
                }
            }
            if ok {
                if let Some(p) = self.placed.as_mut() {
                    p[d] += 1;
                }
                if d + 1 == n {
                    return true;
                }
                d += 1;
                self.choice[d] = 0;
            } else if d == 0 {
                self.done = true;
                return false;
            } else {
                d -= 1;
            }
        }
    }
}
