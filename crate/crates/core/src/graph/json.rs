use serde::{Deserialize, Serialize};

use super::{GeneralizedGraph, GraphError};

/// On-disk graph format. `ends` with fewer than two entries encodes an edge
/// whose endpoints were deleted; `extra_vv` / `extra_ee` carry adjacency that
/// outlived the element connecting it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_vv: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_ee: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub id: usize,
    pub ends: Vec<usize>,
}

impl From<&GeneralizedGraph> for GraphJson {
    fn from(g: &GeneralizedGraph) -> Self {
        Self {
            vertices: g.vertices().collect(),
            edges: g
                .edges()
                .map(|id| EdgeJson { id, ends: g.ends(id).collect() })
                .collect(),
            extra_vv: g.extra_vv_pairs().into_iter().map(|(a, b)| [a, b]).collect(),
            extra_ee: g.extra_ee_pairs().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<&GraphJson> for GeneralizedGraph {
    type Error = GraphError;

    fn try_from(j: &GraphJson) -> Result<Self, Self::Error> {
        let edges: Vec<(usize, Vec<usize>)> = j.edges.iter().map(|e| (e.id, e.ends.clone())).collect();
        let pairs = |v: &[[usize; 2]]| v.iter().map(|&[a, b]| (a, b)).collect::<Vec<_>>();
        GeneralizedGraph::from_relations(&j.vertices, &edges, &pairs(&j.extra_vv), &pairs(&j.extra_ee))
    }
}

impl GeneralizedGraph {
    pub fn to_json(&self) -> GraphJson {
        GraphJson::from(self)
    }

    /// Canonical compact JSON text.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph JSON is always serializable")
    }
}
