//! Generalized graphs whose vertices and edges are independently deletable
//! elements.
//!
//! Adjacency is stored as three explicit relations (vertex-vertex,
//! edge-edge, vertex-edge). Deleting an element removes it and every
//! relation pair it takes part in, and nothing else: two edges that shared a
//! deleted vertex stay edge-adjacent, and two vertices whose edge was deleted
//! stay vertex-adjacent.

mod element;
pub mod families;
mod json;
mod paths;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

pub use element::{ElementId, ElementKind, ParseElementError};
pub use json::GraphJson;
pub use paths::{count_paths_bound, validate_path, Path, PathBoundFormula, PathKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint out of range")]
    EndpointOutOfRange(usize, usize),
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("edge ({0}, {1}) is a duplicate")]
    DuplicateEdge(usize, usize),
    #[error("unknown element {0}")]
    UnknownElement(ElementId),
    #[error("duplicate element {0}")]
    DuplicateElement(ElementId),
    #[error("edge {0} lists more than two ends")]
    TooManyEnds(ElementId),
    #[error("edge {0} lists the same end twice")]
    RepeatedEnd(ElementId),
    #[error("relation pair ({0}, {1}) is reflexive")]
    ReflexivePair(ElementId, ElementId),
    #[error("unsupported path bound: {kind} path through a {through}")]
    UnsupportedBound { kind: PathKind, through: ElementKind },
}

type Adjacency = BTreeMap<usize, BTreeSet<usize>>;

/// A graph in the element sense: vertex and edge sets plus the three
/// adjacency relations that survive deletion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneralizedGraph {
    vv: Adjacency,
    ee: Adjacency,
    // vertex -> incident edges
    ve: Adjacency,
    // edge -> surviving ends
    ev: Adjacency,
}

impl GeneralizedGraph {
    /// Builds the generalized graph of a simple undirected graph on
    /// `vertices` vertices; edge `k` of `edges` becomes edge element `k`.
    pub fn from_standard(vertices: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::default();
        for v in 0..vertices {
            g.vv.insert(v, BTreeSet::new());
            g.ve.insert(v, BTreeSet::new());
        }
        let mut seen = BTreeSet::new();
        for (id, &(a, b)) in edges.iter().enumerate() {
            if a >= vertices || b >= vertices {
                return Err(GraphError::EndpointOutOfRange(a, b));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a, b));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            g.ev.insert(id, [a, b].into_iter().collect());
            g.ee.insert(id, BTreeSet::new());
            g.ve.get_mut(&a).unwrap().insert(id);
            g.ve.get_mut(&b).unwrap().insert(id);
            g.vv.get_mut(&a).unwrap().insert(b);
            g.vv.get_mut(&b).unwrap().insert(a);
        }
        g.close_edge_adjacency();
        Ok(g)
    }

    /// Adds ee pairs for every two edges sharing a surviving vertex.
    fn close_edge_adjacency(&mut self) {
        for incident in self.ve.values() {
            for &e in incident {
                for &f in incident {
                    if e != f {
                        self.ee.get_mut(&e).unwrap().insert(f);
                    }
                }
            }
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vv.keys().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.ee.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vv.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ee.len()
    }

    pub fn element_count(&self) -> usize {
        self.vertex_count() + self.edge_count()
    }

    /// All elements, vertices first, each group in index order.
    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.vertices()
            .map(ElementId::vertex)
            .chain(self.edges().map(ElementId::edge))
    }

    pub fn contains(&self, x: ElementId) -> bool {
        match x.kind {
            ElementKind::Vertex => self.vv.contains_key(&x.index),
            ElementKind::Edge => self.ee.contains_key(&x.index),
        }
    }

    pub fn vertex_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.vv.get(&v).into_iter().flatten().copied()
    }

    pub fn edge_neighbors(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        self.ee.get(&e).into_iter().flatten().copied()
    }

    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.ve.get(&v).into_iter().flatten().copied()
    }

    /// Surviving ends of an edge (zero, one or two vertices).
    pub fn ends(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        self.ev.get(&e).into_iter().flatten().copied()
    }

    pub fn vv_adjacent(&self, u: usize, v: usize) -> bool {
        self.vv.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn ee_adjacent(&self, e: usize, f: usize) -> bool {
        self.ee.get(&e).is_some_and(|s| s.contains(&f))
    }

    pub fn incident(&self, v: usize, e: usize) -> bool {
        self.ve.get(&v).is_some_and(|s| s.contains(&e))
    }

    /// Maximum number of edges incident to a vertex (0 for edgeless graphs).
    pub fn max_degree(&self) -> usize {
        self.ve.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Number of unordered vertex-vertex adjacency pairs.
    pub fn vv_pair_count(&self) -> usize {
        self.vv.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Number of unordered edge-edge adjacency pairs.
    pub fn ee_pair_count(&self) -> usize {
        self.ee.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Removes exactly the elements of `s`, keeping every relation pair whose
    /// two members survive.
    pub fn delete<'a, I>(&self, s: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = &'a ElementId>,
    {
        let mut dead_v = BTreeSet::new();
        let mut dead_e = BTreeSet::new();
        for &x in s {
            if !self.contains(x) {
                return Err(GraphError::UnknownElement(x));
            }
            match x.kind {
                ElementKind::Vertex => dead_v.insert(x.index),
                ElementKind::Edge => dead_e.insert(x.index),
            };
        }
        let restrict = |rel: &Adjacency, keys: &BTreeSet<usize>, vals: &BTreeSet<usize>| {
            rel.iter()
                .filter(|(k, _)| !keys.contains(k))
                .map(|(&k, set)| (k, set.iter().copied().filter(|x| !vals.contains(x)).collect()))
                .collect::<Adjacency>()
        };
        Ok(Self {
            vv: restrict(&self.vv, &dead_v, &dead_v),
            ee: restrict(&self.ee, &dead_e, &dead_e),
            ve: restrict(&self.ve, &dead_v, &dead_e),
            ev: restrict(&self.ev, &dead_e, &dead_v),
        })
    }

    /// Keeps only the elements of `keep`; every other element is deleted.
    pub fn restrict_to(&self, keep: &BTreeSet<ElementId>) -> Self {
        let dead: Vec<ElementId> = self.elements().filter(|x| !keep.contains(x)).collect();
        self.delete(&dead).expect("elements come from the graph")
    }

    /// Neighbours of `x` along the adjacency relation used by paths of `kind`.
    pub fn path_neighbors(&self, x: ElementId, kind: PathKind) -> Vec<ElementId> {
        match (kind, x.kind) {
            (PathKind::Vertex, ElementKind::Vertex) => {
                self.vertex_neighbors(x.index).map(ElementId::vertex).collect()
            }
            (PathKind::Edge, ElementKind::Edge) => {
                self.edge_neighbors(x.index).map(ElementId::edge).collect()
            }
            (PathKind::Mixed, ElementKind::Vertex) => {
                self.incident_edges(x.index).map(ElementId::edge).collect()
            }
            (PathKind::Mixed, ElementKind::Edge) => self.ends(x.index).map(ElementId::vertex).collect(),
            _ => Vec::new(),
        }
    }

    /// Whether `x` and `y` may be consecutive in a path of `kind`.
    pub fn path_adjacent(&self, x: ElementId, y: ElementId, kind: PathKind) -> bool {
        use ElementKind::{Edge, Vertex};
        match (kind, x.kind, y.kind) {
            (PathKind::Vertex, Vertex, Vertex) => self.vv_adjacent(x.index, y.index),
            (PathKind::Edge, Edge, Edge) => self.ee_adjacent(x.index, y.index),
            (PathKind::Mixed, Vertex, Edge) => self.incident(x.index, y.index),
            (PathKind::Mixed, Edge, Vertex) => self.incident(y.index, x.index),
            _ => false,
        }
    }

    /// Builds a graph from raw relations, closing vv/ee under the edges that
    /// still have two (resp. shared) ends. Used by the JSON reader.
    fn from_relations(
        vertices: &[usize],
        edges: &[(usize, Vec<usize>)],
        extra_vv: &[(usize, usize)],
        extra_ee: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let mut g = Self::default();
        for &v in vertices {
            if g.vv.insert(v, BTreeSet::new()).is_some() {
                return Err(GraphError::DuplicateElement(ElementId::vertex(v)));
            }
            g.ve.insert(v, BTreeSet::new());
        }
        let mut proper = BTreeSet::new();
        for (id, ends) in edges {
            let eid = ElementId::edge(*id);
            if g.ee.insert(*id, BTreeSet::new()).is_some() {
                return Err(GraphError::DuplicateElement(eid));
            }
            let set: BTreeSet<usize> = ends.iter().copied().collect();
            if set.len() != ends.len() {
                return Err(GraphError::RepeatedEnd(eid));
            }
            if set.len() > 2 {
                return Err(GraphError::TooManyEnds(eid));
            }
            for &v in &set {
                g.ve
                    .get_mut(&v)
                    .ok_or(GraphError::UnknownElement(ElementId::vertex(v)))?
                    .insert(*id);
            }
            if let [a, b] = set.iter().copied().collect::<Vec<_>>()[..] {
                if !proper.insert((a, b)) {
                    return Err(GraphError::DuplicateEdge(a, b));
                }
                g.vv.get_mut(&a).unwrap().insert(b);
                g.vv.get_mut(&b).unwrap().insert(a);
            }
            g.ev.insert(*id, set);
        }
        for &(a, b) in extra_vv {
            let (x, y) = (ElementId::vertex(a), ElementId::vertex(b));
            if a == b {
                return Err(GraphError::ReflexivePair(x, y));
            }
            for z in [x, y] {
                if !g.contains(z) {
                    return Err(GraphError::UnknownElement(z));
                }
            }
            g.vv.get_mut(&a).unwrap().insert(b);
            g.vv.get_mut(&b).unwrap().insert(a);
        }
        g.close_edge_adjacency();
        for &(a, b) in extra_ee {
            let (x, y) = (ElementId::edge(a), ElementId::edge(b));
            if a == b {
                return Err(GraphError::ReflexivePair(x, y));
            }
            for z in [x, y] {
                if !g.contains(z) {
                    return Err(GraphError::UnknownElement(z));
                }
            }
            g.ee.get_mut(&a).unwrap().insert(b);
            g.ee.get_mut(&b).unwrap().insert(a);
        }
        Ok(g)
    }

    /// vv pairs not explained by a surviving two-ended edge.
    fn extra_vv_pairs(&self) -> Vec<(usize, usize)> {
        let implied: BTreeSet<(usize, usize)> = self
            .ev
            .values()
            .filter_map(|ends| {
                let v: Vec<usize> = ends.iter().copied().collect();
                (v.len() == 2).then(|| (v[0], v[1]))
            })
            .collect();
        unordered_pairs(&self.vv)
            .filter(|p| !implied.contains(p))
            .collect()
    }

    /// ee pairs not explained by a shared surviving vertex.
    fn extra_ee_pairs(&self) -> Vec<(usize, usize)> {
        unordered_pairs(&self.ee)
            .filter(|&(e, f)| {
                let ends_f = &self.ev[&f];
                !self.ev[&e].iter().any(|v| ends_f.contains(v))
            })
            .collect()
    }
}

fn unordered_pairs(rel: &Adjacency) -> impl Iterator<Item = (usize, usize)> + '_ {
    rel.iter()
        .flat_map(|(&a, set)| set.iter().copied().filter(move |&b| a < b).map(move |b| (a, b)))
}
