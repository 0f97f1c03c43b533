use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Color, Coloring, ListAssignment};
use crate::graph::{ElementId, GeneralizedGraph};

/// `{"element":{"kind":"v","index":0},"colors":[1,2]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ListEntry {
    pub element: ElementId,
    pub colors: Vec<Color>,
}

/// Either an explicit array of [`ListEntry`] or `{"uniform": k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ListsJson {
    Uniform { uniform: u32 },
    Entries(Vec<ListEntry>),
}

impl ListsJson {
    pub fn to_lists(&self, g: &GeneralizedGraph) -> Result<ListAssignment, String> {
        match self {
            ListsJson::Uniform { uniform } => Ok(ListAssignment::uniform(g, *uniform)),
            ListsJson::Entries(entries) => {
                let mut out = ListAssignment::default();
                for e in entries {
                    let set: BTreeSet<Color> = e.colors.iter().copied().collect();
                    if set.len() != e.colors.len() {
                        return Err(format!("list of {} repeats a color", e.element));
                    }
                    if out.get(e.element).is_some() {
                        return Err(format!("element {} has two lists", e.element));
                    }
                    out.set(e.element, set);
                }
                Ok(out)
            }
        }
    }
}

impl From<&ListAssignment> for ListsJson {
    fn from(l: &ListAssignment) -> Self {
        ListsJson::Entries(
            l.iter()
                .map(|(element, colors)| ListEntry { element, colors: colors.iter().copied().collect() })
                .collect(),
        )
    }
}

/// `{"element":{"kind":"e","index":3},"color":7}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringEntry {
    pub element: ElementId,
    pub color: Color,
}

impl Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|(element, color)| ColoringEntry { element, color }))
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let entries = Vec::<ColoringEntry>::deserialize(d)?;
        let mut c = Coloring::default();
        for e in entries {
            if c.insert(e.element, e.color).is_some() {
                return Err(serde::de::Error::custom(format!("element {} colored twice", e.element)));
            }
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn uniform_form() {
        let j: ListsJson = serde_json::from_str(r#"{"uniform": 3}"#).unwrap();
        let g = families::path(2);
        let l = j.to_lists(&g).unwrap();
        assert_eq!(l.get(ElementId::edge(0)).unwrap().len(), 3);
    }

    #[test]
    fn explicit_form() {
        let j: ListsJson = serde_json::from_str(
            r#"[{"element":{"kind":"v","index":0},"colors":[4,2]},{"element":{"kind":"e","index":0},"colors":[1]}]"#,
        )
        .unwrap();
        let l = j.to_lists(&families::path(2)).unwrap();
        assert_eq!(l.get(ElementId::vertex(0)).unwrap().iter().map(|c| c.0).collect::<Vec<_>>(), [2, 4]);
        let dup: ListsJson =
            serde_json::from_str(r#"[{"element":{"kind":"v","index":0},"colors":[1,1]}]"#).unwrap();
        assert!(dup.to_lists(&families::path(1)).is_err());
    }

    #[test]
    fn coloring_json() {
        let c: Coloring = [(ElementId::vertex(1), Color(2))].into_iter().collect();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"[{"element":{"kind":"v","index":1},"color":2}]"#);
        assert_eq!(serde_json::from_str::<Coloring>(&s).unwrap(), c);
        assert!(serde_json::from_str::<Coloring>(
            r#"[{"element":{"kind":"v","index":1},"color":2},{"element":{"kind":"v","index":1},"color":3}]"#
        )
        .is_err());
    }
}
