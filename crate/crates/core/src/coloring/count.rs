use rayon::prelude::*;

use super::search::{Plan, Search};
use super::{BigCount, Coloring, CountError, ListAssignment};
use crate::graph::{ElementId, GeneralizedGraph};
use crate::repetition::Regime;

fn count_leaves(plan: &Plan, depth: usize) -> u64 {
    let root_len = plan.lists.first().map_or(0, Vec::len);
    if depth == 0 {
        return 1;
    }
    (0..root_len)
        .into_par_iter()
        .map(|i| {
            let mut s = Search::new(plan, depth).pin_root(i);
            let mut n = 0u64;
            while s.next_leaf(plan) {
                n += 1;
            }
            n
        })
        .sum()
}

/// Number of colorings of the regime's elements that respect `lists` and
/// are valid under `regime`. `order` fixes the backtracking order (defaults
/// to vertices then edges by index); the result does not depend on it.
pub fn count_colorings(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    regime: Regime,
    order: Option<&[ElementId]>,
) -> Result<BigCount, CountError> {
    let plan = Plan::new(g, lists, regime, order)?;
    Ok(count_leaves(&plan, plan.len()).into())
}

/// Number of colorings valid on `g \ {x}` whose extension by some color of
/// `x` is invalid on `g`, counted over (coloring, color) pairs.
pub fn count_violations(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    regime: Regime,
    x: ElementId,
) -> Result<BigCount, CountError> {
    if !g.contains(x) {
        return Err(CountError::UnknownElement(x));
    }
    if !regime.colors(x.kind) {
        return Err(CountError::NotColored(x, regime));
    }
    let mut order: Vec<ElementId> = regime.relevant_elements(g).into_iter().filter(|&y| y != x).collect();
    order.push(x);
    let plan = Plan::new(g, lists, regime, Some(&order))?;
    let last = plan.len() - 1;
    let tally = |mut s: Search| {
        let mut bad = 0u64;
        while s.next_leaf(&plan) {
            for &c in &plan.lists[last] {
                s.colors[last] = c;
                if !plan.accepts(last, &s.colors) {
                    bad += 1;
                }
            }
        }
        bad
    };
    let total = if last == 0 {
        tally(Search::new(&plan, 0))
    } else {
        (0..plan.lists[0].len())
            .into_par_iter()
            .map(|i| tally(Search::new(&plan, last).pin_root(i)))
            .sum()
    };
    Ok(total.into())
}

/// `result[k]` is the number of valid colorings of the first `k` elements
/// of the order (so `result[0] == 1`).
pub fn prefix_counts(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    regime: Regime,
    order: Option<&[ElementId]>,
) -> Result<Vec<BigCount>, CountError> {
    let plan = Plan::new(g, lists, regime, order)?;
    let mut s = Search::new(&plan, plan.len()).with_placement_counts();
    while s.next_leaf(&plan) {}
    let mut out = vec![BigCount::from(1)];
    out.extend(s.placed.unwrap().into_iter().map(BigCount::from));
    Ok(out)
}

/// Lazily yields the colorings counted by [`count_colorings`], in
/// lexicographic order of (position in order, list order).
pub struct ColoringStream {
    plan: Plan,
    search: Search,
    remaining: Option<usize>,
}

impl Iterator for ColoringStream {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.remaining == Some(0) {
            return None;
        }
        if !self.search.next_leaf(&self.plan) {
            return None;
        }
        if let Some(r) = self.remaining.as_mut() {
            *r -= 1;
        }
        Some(self.plan.coloring(&self.search.colors))
    }
}

pub fn enumerate_colorings(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    regime: Regime,
    limit: Option<usize>,
) -> Result<ColoringStream, CountError> {
    let plan = Plan::new(g, lists, regime, None)?;
    let search = Search::new(&plan, plan.len());
    Ok(ColoringStream { plan, search, remaining: limit })
}

/// The first valid coloring in enumeration order, if any.
pub fn find_coloring(
    g: &GeneralizedGraph,
    lists: &ListAssignment,
    regime: Regime,
) -> Result<Option<Coloring>, CountError> {
    Ok(enumerate_colorings(g, lists, regime, Some(1))?.next())
}

/// Smallest `k <= max_colors` such that `g` has a valid coloring from the
/// palette `0..k` under `regime`.
pub fn thue_number(g: &GeneralizedGraph, regime: Regime, max_colors: u32) -> Option<u32> {
    (0..=max_colors).find(|&k| {
        find_coloring(g, &ListAssignment::uniform(g, k), regime)
            .expect("uniform lists cover every element")
            .is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Color;
    use crate::graph::families;

    fn uniform_count(g: &GeneralizedGraph, k: u32, regime: Regime) -> BigCount {
        count_colorings(g, &ListAssignment::uniform(g, k), regime, None).unwrap()
    }

    #[test]
    fn small_paths() {
        assert_eq!(uniform_count(&families::path(1), 4, Regime::VertexThue), 4);
        assert_eq!(uniform_count(&families::path(2), 4, Regime::VertexThue), 12);
        assert_eq!(uniform_count(&families::path(4), 4, Regime::VertexThue), 96);
    }

    #[test]
    fn empty_graph_has_one_coloring() {
        let g = GeneralizedGraph::default();
        assert_eq!(uniform_count(&g, 3, Regime::StrongTotalThue), 1);
    }

    #[test]
    fn empty_list_gives_zero() {
        assert_eq!(uniform_count(&families::path(3), 0, Regime::VertexThue), 0);
    }

    #[test]
    fn violations_on_p2() {
        let g = families::path(2);
        let l = ListAssignment::uniform(&g, 4);
        assert_eq!(count_violations(&g, &l, Regime::VertexThue, ElementId::vertex(1)).unwrap(), 4);
    }

    #[test]
    fn isolated_vertex_has_no_violations() {
        let g = families::disjoint_union(&families::path(2), &families::path(1));
        let l = ListAssignment::uniform(&g, 4);
        for regime in [Regime::VertexThue, Regime::WeakTotalThue, Regime::StrongTotalThue] {
            assert_eq!(count_violations(&g, &l, regime, ElementId::vertex(2)).unwrap(), 0);
        }
    }

    #[test]
    fn violations_rejections() {
        let g = families::path(2);
        let l = ListAssignment::uniform(&g, 4);
        assert_eq!(
            count_violations(&g, &l, Regime::VertexThue, ElementId::edge(0)),
            Err(CountError::NotColored(ElementId::edge(0), Regime::VertexThue))
        );
        assert_eq!(
            count_violations(&g, &l, Regime::VertexThue, ElementId::vertex(7)),
            Err(CountError::UnknownElement(ElementId::vertex(7)))
        );
    }

    #[test]
    fn enumerate_p2_binary() {
        let g = families::path(2);
        let l = ListAssignment::uniform(&g, 2);
        let all: Vec<Vec<u32>> = enumerate_colorings(&g, &l, Regime::VertexThue, None)
            .unwrap()
            .map(|c| c.iter().map(|(_, Color(k))| k).collect())
            .collect();
        assert_eq!(all, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(enumerate_colorings(&g, &l, Regime::VertexThue, Some(0)).unwrap().count(), 0);
    }

    #[test]
    fn bad_order_rejected() {
        let g = families::path(3);
        let l = ListAssignment::uniform(&g, 3);
        let order = [ElementId::vertex(0), ElementId::vertex(0), ElementId::vertex(1)];
        assert!(matches!(
            count_colorings(&g, &l, Regime::VertexThue, Some(&order)),
            Err(CountError::BadOrder(_))
        ));
        let short = [ElementId::vertex(0), ElementId::vertex(1)];
        assert!(matches!(
            count_colorings(&g, &l, Regime::VertexThue, Some(&short)),
            Err(CountError::BadOrder(_))
        ));
    }

    #[test]
    fn prefix_counts_of_path() {
        let g = families::path(4);
        let counts = prefix_counts(&g, &ListAssignment::uniform(&g, 4), Regime::VertexThue, None).unwrap();
        let counts: Vec<String> = counts.iter().map(ToString::to_string).collect();
        assert_eq!(counts, ["1", "4", "12", "36", "96"]);
    }

    #[test]
    fn thue_numbers_of_short_paths() {
        let pi = |n| thue_number(&families::path(n), Regime::VertexThue, 5);
        assert_eq!(pi(1), Some(1));
        assert_eq!(pi(2), Some(2));
        assert_eq!(pi(3), Some(2));
        assert_eq!(pi(4), Some(3));
    }
}
