use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Heap;
use crate::error::{Error, Result};
use crate::graph::CommutationGraph;

/// Serialized heap: the graph in its literal text format and the layers as
/// label lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeapJson {
    pub graph: String,
    pub layers: Vec<Vec<String>>,
}

impl HeapJson {
    pub fn from_heap(heap: &Heap) -> Self {
        let g = heap.graph();
        Self {
            graph: g.to_literal(),
            layers: heap.layers().iter().map(|l| l.iter().map(|&v| g.label(v).to_string()).collect()).collect(),
        }
    }

    pub fn to_heap(&self) -> Result<Heap> {
        let graph = Arc::new(CommutationGraph::parse_literal(&self.graph)?);
        let layers = self
            .layers
            .iter()
            .map(|l| l.iter().map(|s| graph.vertex(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Heap::from_layers(graph, layers)
    }
}

impl Heap {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&HeapJson::from_heap(self)).expect("heap serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: HeapJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.to_heap()
    }
}
