//! JSON forms of set families, neighborhood multisets and graphs.
//!
//! A family is `{"universe": n, "sets": [[...], ...]}` with sets given as
//! sorted vertex ids and listed in canonical order. A multiset uses the same
//! shape with repeated sets. An optional `"labels"` array names the ids.
//!
//! A graph is `{"labels": [...], "adjacency": {"label": ["label", ...]}}`.
//! Each edge may be listed from one or both endpoints.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{NeighborhoodMultiset, SetFamily};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub universe: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub sets: Vec<Vec<usize>>,
}

impl FamilyJson {
    pub fn from_family(f: &SetFamily) -> Self {
        FamilyJson {
            universe: f.universe(),
            labels: None,
            sets: f.to_lists(),
        }
    }

    pub fn from_multiset(m: &NeighborhoodMultiset) -> Self {
        FamilyJson {
            universe: m.universe(),
            labels: None,
            sets: m.to_sorted_vec().into_iter().map(VertexSet::to_vec).collect(),
        }
    }

    pub fn with_labels(mut self, labels: Option<&[String]>) -> Self {
        self.labels = labels.map(<[String]>::to_vec);
        self
    }

    fn sets(&self) -> Result<Vec<VertexSet>> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.universe {
                return Err(Error::Input(format!(
                    "{} labels for a universe of {}",
                    labels.len(),
                    self.universe
                )));
            }
        }
        self.sets
            .iter()
            .map(|s| VertexSet::from_vertices(self.universe, s.iter().copied()))
            .collect()
    }

    /// Duplicate sets collapse.
    pub fn to_family(&self) -> Result<SetFamily> {
        SetFamily::new(self.universe, self.sets()?)
    }

    pub fn to_multiset(&self) -> Result<NeighborhoodMultiset> {
        NeighborhoodMultiset::new(self.universe, self.sets()?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| json_error(text, &e))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("family serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub labels: Vec<String>,
    pub adjacency: BTreeMap<String, Vec<String>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        let labels: Vec<String> = (0..g.n()).map(|v| g.label(v)).collect();
        let adjacency = (0..g.n())
            .map(|v| (g.label(v), g.open(v).iter().map(|u| g.label(u)).collect()))
            .collect();
        GraphJson { labels, adjacency }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let index: HashMap<&str, usize> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::Input(format!("unknown vertex label {l:?}")))
        };
        let mut g = Graph::new(self.labels.len())?;
        for (from, tos) in &self.adjacency {
            let u = lookup(from)?;
            for to in tos {
                g.add_edge(u, lookup(to)?)?;
            }
        }
        g.with_labels(self.labels.iter().cloned())
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| json_error(text, &e))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }
}

/// Converts a serde_json line/column into a byte offset.
pub(crate) fn json_error(text: &str, e: &serde_json::Error) -> Error {
    let offset: usize = text
        .split_inclusive('\n')
        .take(e.line().saturating_sub(1))
        .map(str::len)
        .sum::<usize>()
        + e.column().saturating_sub(1);
    Error::parse(offset, e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn family_canonical_serialization() {
        let f = SetFamily::from_lists(3, [vec![1, 2], vec![0], vec![0, 1, 2], vec![0]]).unwrap();
        assert_eq!(
            FamilyJson::from_family(&f).to_json(),
            r#"{"universe":3,"sets":[[0],[1,2],[0,1,2]]}"#
        );
        let m = NeighborhoodMultiset::from_lists(2, [vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(FamilyJson::from_multiset(&m).to_json(), r#"{"universe":2,"sets":[[0,1],[0,1]]}"#);
    }

    #[test]
    fn family_parse_errors() {
        let err = FamilyJson::parse("{\"universe\": 3,\n \"sets\": [[0, 5]]}").unwrap().to_family();
        assert!(matches!(err, Err(Error::VertexOutOfRange { vertex: 5, n: 3 })));
        let err = FamilyJson::parse("{\"universe\": 3,\n \"sets\": [[0,]]}").unwrap_err();
        match err {
            Error::Parse { position, .. } => assert!(position > 15, "{position}"),
            e => panic!("{e:?}"),
        }
        assert!(FamilyJson::parse(r#"{"universe":2,"sets":[],"extra":1}"#).is_err());
        let labeled = FamilyJson::parse(r#"{"universe":2,"labels":["a"],"sets":[[0]]}"#).unwrap();
        assert!(labeled.to_family().is_err());
    }

    #[test]
    fn graph_json_import() {
        let text = r#"{"labels": ["a", "b", "c"], "adjacency": {"a": ["b"], "b": ["c", "a"]}}"#;
        let g = GraphJson::parse(text).unwrap().to_graph().unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert_eq!(g.label(2), "c");

        let bad = r#"{"labels": ["a", "b"], "adjacency": {"a": ["z"]}}"#;
        assert!(GraphJson::parse(bad).unwrap().to_graph().is_err());
        let looped = r#"{"labels": ["a"], "adjacency": {"a": ["a"]}}"#;
        assert!(GraphJson::parse(looped).unwrap().to_graph().is_err());
        let dup = r#"{"labels": ["a", "a"], "adjacency": {}}"#;
        assert!(matches!(
            GraphJson::parse(dup).unwrap().to_graph(),
            Err(Error::DuplicateLabel(_))
        ));
    }

    proptest! {
        #[test]
        fn family_round_trip(n in 1usize..=12, raw in proptest::collection::vec(any::<u64>(), 0..20)) {
            let mask = (1u64 << n) - 1;
            let f = SetFamily::new(n, raw.iter().map(|b| VertexSet::from_bits(n, b & mask).unwrap())).unwrap();
            let text = FamilyJson::from_family(&f).to_json();
            let back = FamilyJson::parse(&text).unwrap().to_family().unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(FamilyJson::from_family(&back).to_json(), text);
        }

        #[test]
        fn graph_json_round_trip(n in 1usize..=9, mask in any::<u64>()) {
            let pairs = n * (n - 1) / 2;
            let m = if pairs == 64 { mask } else { mask & ((1u64 << pairs) - 1) };
            let g = Graph::from_edge_mask(n, m).unwrap();
            let back = GraphJson::parse(&GraphJson::from_graph(&g).to_json()).unwrap().to_graph().unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
