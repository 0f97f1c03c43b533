//! Independent reference implementations used as test oracles. They work
//! from the raw vertex/edge incidence only and enumerate everything.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use nonrep_core::{Color, ElementId, GeneralizedGraph, ListAssignment, PathKind, Regime};

pub fn brute_first_square<T: PartialEq>(s: &[T]) -> Option<(usize, usize)> {
    for h in 1..=s.len() / 2 {
        for i in 0..=s.len() - 2 * h {
            if (0..h).all(|j| s[i + j] == s[i + h + j]) {
                return Some((i, h));
            }
        }
    }
    None
}

pub fn brute_square_free<T: PartialEq>(s: &[T]) -> bool {
    brute_first_square(s).is_none()
}

/// Adjacency of a standard graph rebuilt from its edge ends.
pub struct Incidence {
    ends: BTreeMap<usize, (usize, usize)>,
    vertices: Vec<usize>,
}

impl Incidence {
    pub fn of(g: &GeneralizedGraph) -> Self {
        let ends = g
            .edges()
            .map(|e| {
                let v: Vec<usize> = g.ends(e).collect();
                assert_eq!(v.len(), 2, "oracle handles standard graphs only");
                (e, (v[0], v[1]))
            })
            .collect();
        Self { ends, vertices: g.vertices().collect() }
    }

    fn touches(&self, e: usize, v: usize) -> bool {
        let (a, b) = self.ends[&e];
        a == v || b == v
    }

    pub fn adjacent(&self, x: ElementId, y: ElementId, kind: PathKind) -> bool {
        match (kind, x.is_vertex(), y.is_vertex()) {
            (PathKind::Vertex, true, true) => {
                self.ends.values().any(|&(a, b)| (a, b) == (x.index, y.index) || (b, a) == (x.index, y.index))
            }
            (PathKind::Edge, false, false) => {
                let (a, b) = self.ends[&y.index];
                x != y && (self.touches(x.index, a) || self.touches(x.index, b))
            }
            (PathKind::Mixed, true, false) => self.touches(y.index, x.index),
            (PathKind::Mixed, false, true) => self.touches(x.index, y.index),
            _ => false,
        }
    }

    fn candidates(&self, kind: PathKind) -> Vec<ElementId> {
        let vs = self.vertices.iter().map(|&v| ElementId::vertex(v));
        let es = self.ends.keys().map(|&e| ElementId::edge(e));
        match kind {
            PathKind::Vertex => vs.collect(),
            PathKind::Edge => es.collect(),
            PathKind::Mixed => vs.chain(es).collect(),
        }
    }

    /// Every undirected simple path of `kind` with `len` elements, as the
    /// smaller of its two orientations.
    pub fn paths(&self, kind: PathKind, len: usize) -> BTreeSet<Vec<ElementId>> {
        let cands = self.candidates(kind);
        let mut out = BTreeSet::new();
        let mut seq = Vec::new();
        self.dfs(kind, len, &cands, &mut seq, &mut out);
        out
    }

    fn dfs(
        &self,
        kind: PathKind,
        len: usize,
        cands: &[ElementId],
        seq: &mut Vec<ElementId>,
        out: &mut BTreeSet<Vec<ElementId>>,
    ) {
        if seq.len() == len {
            let rev: Vec<ElementId> = seq.iter().rev().copied().collect();
            out.insert(seq.clone().min(rev));
            return;
        }
        for &c in cands {
            if seq.contains(&c) || seq.last().is_some_and(|&l| !self.adjacent(l, c, kind)) {
                continue;
            }
            seq.push(c);
            self.dfs(kind, len, cands, seq, out);
            seq.pop();
        }
    }
}

/// Valid colorings counted by trying every list coloring.
pub fn brute_count(g: &GeneralizedGraph, lists: &ListAssignment, regime: Regime) -> u64 {
    let inc = Incidence::of(g);
    let elems = regime.relevant_elements(g);
    let mut all_paths = Vec::new();
    for &kind in regime.path_kinds() {
        for len in (2..=elems.len()).step_by(2) {
            all_paths.extend(inc.paths(kind, len));
        }
    }
    let choices: Vec<Vec<Color>> = elems.iter().map(|&x| lists.get(x).unwrap().iter().copied().collect()).collect();
    if choices.iter().any(Vec::is_empty) {
        return 0;
    }
    let pos: BTreeMap<ElementId, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut idx = vec![0usize; elems.len()];
    let mut count = 0;
    loop {
        let colors: Vec<Color> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        let ok = all_paths.iter().all(|p| {
            let h = p.len() / 2;
            (0..h).any(|j| colors[pos[&p[j]]] != colors[pos[&p[j + h]]])
        });
        count += ok as u64;
        let mut k = 0;
        loop {
            if k == idx.len() {
                return count;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Smallest alphabet admitting a square-free word of length `n`, by trying
/// all words.
pub fn brute_thue_number_of_path(n: usize) -> u32 {
    (1u32..)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|mut w| {
                let word: Vec<u64> = (0..n)
                    .map(|_| {
                        let d = w % k as u64;
                        w /= k as u64;
                        d
                    })
                    .collect();
                brute_square_free(&word)
            })
        })
        .unwrap()
}
