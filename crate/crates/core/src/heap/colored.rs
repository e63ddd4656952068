use crate::error::{Error, Result};
use crate::graph::{Coloring, CommutationGraph};

/// Layers of a colored heap: layer `i` (from 1) only holds vertices whose
/// color is congruent to `i` modulo the number of colors. Layers may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredHeap {
    pub layers: Vec<Vec<usize>>,
    pub color_count: usize,
}

impl ColoredHeap {
    /// Concatenation of the layers, each ascending.
    pub fn reading(&self) -> Vec<usize> {
        self.layers.iter().flatten().copied().collect()
    }

    pub fn size(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Checks that every cell sits in the lowest layer of its color above
    /// the cells below it on its own and neighboring fibres.
    pub fn check_invariants(&self, graph: &CommutationGraph, coloring: &Coloring) -> Result<()> {
        let r = self.color_count;
        for (i, layer) in self.layers.iter().enumerate() {
            let index = i + 1;
            for &v in layer {
                if index % r != coloring.color(v) % r {
                    return Err(Error::ImproperColoring(format!("vertex {} on layer {index}", graph.label(v))));
                }
                let floor = (0..i)
                    .rev()
                    .find(|&j| self.layers[j].iter().any(|&u| graph.is_neighbor(u, v)))
                    .map_or(0, |j| j + 1);
                if floor + r < index {
                    return Err(Error::Parse(format!("cell ({}, {index}) could drop", graph.label(v))));
                }
            }
        }
        Ok(())
    }
}

/// Places each letter in the lowest layer of its color strictly above every
/// cell on the neighboring fibres.
pub fn colored_layers(graph: &CommutationGraph, coloring: &Coloring, word: &[usize]) -> Result<ColoredHeap> {
    Coloring::new(graph, coloring.colors().to_vec(), coloring.color_count())?;
    let r = coloring.color_count();
    let mut tops = vec![0usize; graph.vertex_count()];
    let mut layers: Vec<Vec<usize>> = Vec::new();
    for &v in word {
        graph.check_vertex(v)?;
        let floor = graph.adjacent_vertices(v).iter().map(|&u| tops[u]).fold(tops[v], usize::max);
        let color = coloring.color(v) % r;
        let mut layer = floor + 1;
        while layer % r != color {
            layer += 1;
        }
        if layers.len() < layer {
            layers.resize(layer, Vec::new());
        }
        let slot = &mut layers[layer - 1];
        let pos = slot.binary_search(&v).unwrap_or_else(|p| p);
        slot.insert(pos, v);
        tops[v] = layer;
    }
    Ok(ColoredHeap { layers, color_count: r })
}
