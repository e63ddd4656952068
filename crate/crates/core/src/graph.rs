//! Commutation graphs.
//!
//! An edge between two letters means they do NOT commute. Vertices are dense
//! indices `0..vertex_count` with a separate label table; the index of a
//! vertex is the position of its label at construction time.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<bool>>,
    neighbors: Vec<Vec<usize>>,
}

impl CommutationGraph {
    /// Builds a graph from distinct labels and unordered label pairs.
    pub fn new<L, E, A, B>(labels: L, edges: E) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let lookup = |l: &str| index.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.to_string()));
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let (u, v) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if u == v {
                return Err(Error::LoopEdge(a.as_ref().to_string()));
            }
            pairs.push((u, v));
        }
        Self::from_index_edges(labels, pairs)
    }

    /// Builds a graph from labels and index pairs. Duplicate edges are merged.
    pub fn from_index_edges(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut adjacency = vec![vec![false; n]; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, count: n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(labels[u].clone()));
            }
            adjacency[u][v] = true;
            adjacency[v][u] = true;
        }
        let neighbors = adjacency
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j).collect())
            .collect();
        Ok(Self { labels, index, adjacency, neighbors })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count() })
        }
    }

    /// `true` when `u` and `v` are joined by an edge (never for `u == v`).
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u][v]
    }

    /// `true` when the letters do not commute: equal, or joined by an edge.
    pub fn is_neighbor(&self, u: usize, v: usize) -> bool {
        u == v || self.adjacency[u][v]
    }

    /// Adjacent vertices, ascending, excluding `v` itself.
    pub fn adjacent_vertices(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Edges as index pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `V(v)`: the vertex together with everything adjacent to it.
    pub fn neighborhood(&self, v: usize) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        let mut out: BTreeSet<usize> = self.neighbors[v].iter().copied().collect();
        out.insert(v);
        Ok(out)
    }

    /// `V(B)`: union of the neighborhoods of the members of `set`.
    pub fn neighborhood_of_set(&self, set: &[usize]) -> Result<BTreeSet<usize>> {
        let mut out = BTreeSet::new();
        for &v in set {
            out.extend(self.neighborhood(v)?);
        }
        Ok(out)
    }

    /// `true` iff no two distinct members of `set` are adjacent.
    pub fn is_configuration(&self, set: &[usize]) -> Result<bool> {
        for &v in set {
            self.check_vertex(v)?;
        }
        Ok(set
            .iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.adjacency[u][v])))
    }

    /// All stable sets with at most `max_size` members, ordered by size and
    /// then lexicographically. The empty set comes first.
    pub fn enumerate_configurations(&self, max_size: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        let mut stack = Vec::new();
        self.extend_configurations(0, max_size, &mut stack, &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn extend_configurations(&self, from: usize, max_size: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if stack.len() == max_size {
            return;
        }
        for v in from..self.vertex_count() {
            if stack.iter().all(|&u| !self.adjacency[u][v]) {
                stack.push(v);
                out.push(stack.clone());
                self.extend_configurations(v + 1, max_size, stack, out);
                stack.pop();
            }
        }
    }

    /// Parses a word over this graph's labels: whitespace-separated labels,
    /// or one label per character when the text has no whitespace.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let text = text.trim();
        if text.contains(char::is_whitespace) {
            text.split_whitespace().map(|l| self.vertex(l)).collect()
        } else {
            text.chars().map(|c| self.vertex(c.encode_utf8(&mut [0; 4]))).collect()
        }
    }

    /// Joins labels, with no separator when every label is one character.
    pub fn format_word(&self, word: &[usize]) -> String {
        let sep = if word.iter().all(|&v| self.labels[v].chars().count() == 1) { "" } else { " " };
        word.iter().map(|&v| self.labels[v].as_str()).collect::<Vec<_>>().join(sep)
    }

    /// Parses the text literal: a `vertices:` line followed by `edge:` lines.
    /// Blank lines and `#` comments are ignored.
    pub fn parse_literal(text: &str) -> Result<Self> {
        let mut labels: Option<Vec<String>> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::Parse(format!("line {}: `{}`", lineno + 1, raw.trim()));
            let (key, rest) = line.split_once(':').ok_or_else(bad)?;
            let items: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            match key.trim() {
                "vertices" if labels.is_none() => labels = Some(items),
                "edge" if labels.is_some() && items.len() == 2 => edges.push((items[0].clone(), items[1].clone())),
                _ => return Err(bad()),
            }
        }
        let labels = labels.ok_or_else(|| Error::Parse("missing `vertices:` line".into()))?;
        Self::new(labels, edges)
    }

    /// The text literal accepted by [`CommutationGraph::parse_literal`].
    pub fn to_literal(&self) -> String {
        let mut s = format!("vertices: {}\n", self.labels.join(" "));
        for (u, v) in self.edges() {
            s.push_str(&format!("edge: {} {}\n", self.labels[u], self.labels[v]));
        }
        s
    }
}

impl fmt::Display for CommutationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// A proper coloring with colors `1..=r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    r: usize,
}

impl Coloring {
    pub fn new(graph: &CommutationGraph, colors: Vec<usize>, r: usize) -> Result<Self> {
        if colors.len() != graph.vertex_count() {
            return Err(Error::ImproperColoring(format!(
                "{} colors for {} vertices",
                colors.len(),
                graph.vertex_count()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > r) {
            return Err(Error::ImproperColoring(format!("color {c} outside 1..={r}")));
        }
        for (u, v) in graph.edges() {
            if colors[u] == colors[v] {
                return Err(Error::ImproperColoring(format!(
                    "adjacent `{}` and `{}` share color {}",
                    graph.label(u),
                    graph.label(v),
                    colors[u]
                )));
            }
        }
        Ok(Self { colors, r })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_count(&self) -> usize {
        self.r
    }
}

/// The window `-radius..=radius` of the linear lattice, consecutive integers
/// adjacent, colored by parity (even sites get color 1, odd sites color 2).
///
/// Vertex index of site `x` is `x + radius`.
pub fn linear_window(radius: usize) -> (CommutationGraph, Coloring) {
    let r = radius as i64;
    let labels: Vec<String> = (-r..=r).map(|x| x.to_string()).collect();
    let n = labels.len();
    let graph = CommutationGraph::from_index_edges(labels, (1..n).map(|i| (i - 1, i)))
        .expect("window edges are valid");
    let colors = (-r..=r).map(|x| if x.rem_euclid(2) == 0 { 1 } else { 2 }).collect();
    let coloring = Coloring::new(&graph, colors, 2).expect("parity coloring is proper");
    (graph, coloring)
}

fn letter_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("v{i}")
            }
        })
        .collect()
}

/// Path `a - b - c - ...` on `n` vertices.
pub fn path(n: usize) -> CommutationGraph {
    CommutationGraph::from_index_edges(letter_labels(n), (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> CommutationGraph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    CommutationGraph::from_index_edges(letter_labels(n), (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

/// Complete graph: the free monoid.
pub fn complete(n: usize) -> CommutationGraph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    CommutationGraph::from_index_edges(letter_labels(n), edges).expect("valid complete graph")
}

/// Edgeless graph: the free commutative monoid.
pub fn edgeless(n: usize) -> CommutationGraph {
    CommutationGraph::from_index_edges(letter_labels(n), std::iter::empty()).expect("valid edgeless graph")
}

/// The five small graphs every algebraic identity is checked on.
pub fn identity_suite() -> Vec<(&'static str, CommutationGraph)> {
    vec![
        ("path3", path(3)),
        ("path5", path(5)),
        ("cycle4", cycle(4)),
        ("complete3", complete(3)),
        ("edgeless3", edgeless(3)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> CommutationGraph {
        CommutationGraph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn build_and_errors() {
        let g = abc();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let single = CommutationGraph::new(["x"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(
            CommutationGraph::new(["a", "b"], [("a", "a")]),
            Err(Error::LoopEdge("a".into()))
        );
        assert_eq!(
            CommutationGraph::new(["a", "a"], Vec::<(&str, &str)>::new()),
            Err(Error::DuplicateLabel("a".into()))
        );
        assert_eq!(CommutationGraph::new(["a"], [("a", "z")]), Err(Error::UnknownLabel("z".into())));
    }

    #[test]
    fn neighborhoods() {
        let g = abc();
        assert_eq!(g.neighborhood(1).unwrap(), BTreeSet::from([0, 1, 2]));
        assert_eq!(g.neighborhood(0).unwrap(), BTreeSet::from([0, 1]));
        assert!(g.neighborhood(3).is_err());
        let x = edgeless(1);
        assert_eq!(x.neighborhood(0).unwrap(), BTreeSet::from([0]));
    }

    #[test]
    fn configurations() {
        let g = abc();
        assert!(g.is_configuration(&[0, 2]).unwrap());
        assert!(!g.is_configuration(&[0, 1]).unwrap());
        assert!(g.is_configuration(&[]).unwrap());
        assert!(g.is_configuration(&[7]).is_err());
        assert_eq!(
            g.enumerate_configurations(3),
            vec![vec![], vec![0], vec![1], vec![2], vec![0, 2]]
        );
        assert_eq!(edgeless(1).enumerate_configurations(0), vec![Vec::<usize>::new()]);
        let c5 = cycle(5).enumerate_configurations(2);
        assert_eq!(c5.len(), 1 + 5 + 5);
    }

    #[test]
    fn windows() {
        let (g, c) = linear_window(1);
        assert_eq!(g.labels(), &["-1", "0", "1"]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let (g0, _) = linear_window(0);
        assert_eq!(g0.vertex_count(), 1);
        let (g2, c2) = linear_window(2);
        assert_eq!((g2.vertex_count(), g2.edges().len()), (5, 4));
        assert_eq!(c2.colors(), &[1, 2, 1, 2, 1]);
        assert_eq!(c.color(g.vertex("0").unwrap()), 1);
    }

    #[test]
    fn literal_round_trip() {
        let g = abc();
        let text = g.to_literal();
        assert_eq!(text, "vertices: a b c\nedge: a b\nedge: b c\n");
        assert_eq!(CommutationGraph::parse_literal(&text).unwrap(), g);
        assert!(CommutationGraph::parse_literal("edge: a b\n").is_err());
        assert!(CommutationGraph::parse_literal("vertices: a b\nedge: a\n").is_err());
    }

    #[test]
    fn improper_coloring_rejected() {
        let g = abc();
        assert!(Coloring::new(&g, vec![1, 1, 2], 2).is_err());
        assert!(Coloring::new(&g, vec![1, 2, 3], 2).is_err());
        assert!(Coloring::new(&g, vec![1, 2, 1], 2).is_ok());
    }
}
