//! Heaps of pieces: the canonical layered form of traces.
//!
//! A heap is a sequence of non-empty stable sets `C_1 .. C_n` such that every
//! vertex of `C_i` (for `i > 1`) has a neighbor in `C_{i-1}`. Pushing a letter
//! places it one layer above the highest cell on its neighborhood, so folding
//! pushes over a word computes the heap of its trace, and listing the layers
//! gives back a representative word.

mod colored;
mod enumerate;
mod json;
mod strict;

pub use colored::{colored_layers, ColoredHeap};
pub use enumerate::{enumerate_heaps, BaseFilter, HeapClass};
pub use json::HeapJson;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::CommutationGraph;

/// A cell `(vertex, height)`, height counted from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub vertex: usize,
    pub height: usize,
}

impl Cell {
    pub fn new(vertex: usize, height: usize) -> Self {
        Self { vertex, height }
    }
}

/// A heap over a shared commutation graph.
///
/// Equality and hashing look at the layers only (plus graph equality for
/// `==`). Ordering is by size, then canonical word; it ignores the graph,
/// which is fine for collections whose keys all live on one graph.
#[derive(Debug, Clone)]
pub struct Heap {
    graph: Arc<CommutationGraph>,
    layers: Vec<Vec<usize>>,
    size: usize,
}

impl Heap {
    pub fn empty(graph: Arc<CommutationGraph>) -> Self {
        Self { graph, layers: Vec::new(), size: 0 }
    }

    /// Heap of the trace of `word`.
    pub fn from_word(graph: Arc<CommutationGraph>, word: &[usize]) -> Result<Self> {
        let mut b = Builder::new(Self::empty(graph));
        for &v in word {
            b.push(v)?;
        }
        Ok(b.finish())
    }

    /// Heap of a word written with labels (see [`CommutationGraph::parse_word`]).
    pub fn from_labels(graph: Arc<CommutationGraph>, text: &str) -> Result<Self> {
        let word = graph.parse_word(text)?;
        Self::from_word(graph, &word)
    }

    /// Builds a heap from explicit layers, checking that they are canonical.
    pub fn from_layers(graph: Arc<CommutationGraph>, layers: Vec<Vec<usize>>) -> Result<Self> {
        let mut layers = layers;
        for layer in &mut layers {
            layer.sort_unstable();
            for &v in layer.iter() {
                graph.check_vertex(v)?;
            }
        }
        let word: Vec<usize> = layers.iter().flatten().copied().collect();
        let heap = Self::from_word(graph, &word)?;
        if heap.layers != layers {
            return Err(Error::Parse("layers do not form a heap".into()));
        }
        Ok(heap)
    }

    pub fn graph(&self) -> &Arc<CommutationGraph> {
        &self.graph
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of layers.
    pub fn height(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Cells listed layer by layer, each layer in ascending vertex order.
    pub fn cells(&self) -> Vec<Cell> {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(i, layer)| layer.iter().map(move |&v| Cell::new(v, i + 1)))
            .collect()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.height >= 1
            && cell.height <= self.layers.len()
            && self.layers[cell.height - 1].binary_search(&cell.vertex).is_ok()
    }

    /// Adds one cell on top of the fibres of `V(v)`.
    pub fn push(&self, v: usize) -> Result<Self> {
        let mut b = Builder::new(self.clone());
        b.push(v)?;
        Ok(b.finish())
    }

    /// The layers read in order, each layer ascending.
    pub fn canonical_word(&self) -> Vec<usize> {
        self.layers.iter().flatten().copied().collect()
    }

    /// Canonical word written with the graph's labels.
    pub fn to_label_word(&self) -> String {
        self.graph.format_word(&self.canonical_word())
    }

    /// Places `other` on top of `self` and lets its pieces fall.
    pub fn product(&self, other: &Heap) -> Result<Self> {
        self.same_graph(other)?;
        let mut b = Builder::new(self.clone());
        for v in other.canonical_word() {
            b.push(v)?;
        }
        Ok(b.finish())
    }

    /// Heap of the reversed word: the same pieces under reversed gravity.
    pub fn dual(&self) -> Self {
        let mut word = self.canonical_word();
        word.reverse();
        Self::from_word(self.graph.clone(), &word).expect("letters of a heap are valid")
    }

    /// `true` when the base is a single cell.
    pub fn is_pyramid(&self) -> bool {
        self.layers.first().is_some_and(|base| base.len() == 1)
    }

    /// Splits `self = X · P` where `P` is the pyramid generated by `cell`:
    /// every cell reachable from it through the relation "neighbors and
    /// strictly higher".
    pub fn pyramid_split(&self, cell: Cell) -> Result<(Heap, Heap)> {
        if !self.contains(cell) {
            return Err(Error::CellNotInHeap { vertex: cell.vertex, height: cell.height });
        }
        let above = self.generated_cells(cell);
        let (mut lower, mut upper) = (Vec::new(), Vec::new());
        for c in self.cells() {
            if above.contains(&c) {
                upper.push(c.vertex);
            } else {
                lower.push(c.vertex);
            }
        }
        Ok((
            Self::from_word(self.graph.clone(), &lower)?,
            Self::from_word(self.graph.clone(), &upper)?,
        ))
    }

    /// Cells greater than or equal to `cell` in the order generated by
    /// `(a, i) < (b, j)` whenever `a`, `b` are neighbors and `i < j`.
    pub fn generated_cells(&self, cell: Cell) -> BTreeSet<Cell> {
        let mut reached = BTreeSet::from([cell]);
        // Heights only increase along the relation, so one upward sweep
        // over the layers computes the closure.
        let mut frontier: Vec<Cell> = vec![cell];
        for (i, layer) in self.layers.iter().enumerate().skip(cell.height) {
            let h = i + 1;
            for &v in layer {
                if frontier.iter().any(|c| c.height < h && self.graph.is_neighbor(c.vertex, v)) {
                    frontier.push(Cell::new(v, h));
                    reached.insert(Cell::new(v, h));
                }
            }
        }
        reached
    }

    /// Word criterion: between two consecutive occurrences of a letter some
    /// letter that does not commute with it (and differs from it) occurs.
    pub fn is_strict(&self) -> bool {
        is_strict_word(&self.graph, &self.canonical_word())
    }

    /// Layer criterion: no letter occupies two consecutive layers.
    pub fn is_strict_by_layers(&self) -> bool {
        self.layers
            .windows(2)
            .all(|w| w[1].iter().all(|v| w[0].binary_search(v).is_err()))
    }

    /// Checks both heap conditions on the stored layers.
    pub fn check_invariants(&self) -> Result<()> {
        for (i, layer) in self.layers.iter().enumerate() {
            if layer.is_empty() {
                return Err(Error::Parse(format!("layer {} is empty", i + 1)));
            }
            if !self.graph.is_configuration(layer)? {
                return Err(Error::Parse(format!("layer {} is not a stable set", i + 1)));
            }
            if i > 0 {
                let below = self.graph.neighborhood_of_set(&self.layers[i - 1])?;
                if !layer.iter().all(|v| below.contains(v)) {
                    return Err(Error::Parse(format!("layer {} is not supported", i + 1)));
                }
            }
        }
        Ok(())
    }

    fn same_graph(&self, other: &Heap) -> Result<()> {
        if Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }
}

/// Word form of the strictness test.
pub fn is_strict_word(graph: &CommutationGraph, word: &[usize]) -> bool {
    let mut last = vec![None; graph.vertex_count()];
    for (i, &a) in word.iter().enumerate() {
        if let Some(j) = last[a] {
            if !word[j + 1..i].iter().any(|&b| graph.adjacent(a, b)) {
                return false;
            }
        }
        last[a] = Some(i);
    }
    true
}

/// `true` iff the two words have the same trace.
pub fn equivalent(graph: &Arc<CommutationGraph>, u: &[usize], v: &[usize]) -> Result<bool> {
    Ok(Heap::from_word(graph.clone(), u)? == Heap::from_word(graph.clone(), v)?)
}

/// Rewriting oracle for trace equality: breadth-first search over swaps of
/// adjacent commuting letters. Exponential; only for short words.
pub fn equivalent_by_rewriting(graph: &CommutationGraph, u: &[usize], v: &[usize]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::from([u.to_vec()]);
    let mut queue = VecDeque::from([u.to_vec()]);
    while let Some(w) = queue.pop_front() {
        if w == v {
            return true;
        }
        for i in 1..w.len() {
            if !graph.is_neighbor(w[i - 1], w[i]) {
                let mut next = w.clone();
                next.swap(i - 1, i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    false
}

impl PartialEq for Heap {
    fn eq(&self, other: &Self) -> bool {
        self.layers == other.layers && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl Eq for Heap {}

impl Hash for Heap {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.layers.hash(state);
    }
}

impl PartialOrd for Heap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Heap {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.layers.iter().flatten().cmp(other.layers.iter().flatten()))
    }
}

/// Incremental heap construction tracking the top of every fibre.
pub(crate) struct Builder {
    heap: Heap,
    tops: Vec<usize>,
}

impl Builder {
    pub(crate) fn new(heap: Heap) -> Self {
        let mut tops = vec![0; heap.graph.vertex_count()];
        for (i, layer) in heap.layers.iter().enumerate() {
            for &v in layer {
                tops[v] = i + 1;
            }
        }
        Self { heap, tops }
    }

    /// Pushes `v` and returns the height it landed at.
    pub(crate) fn push(&mut self, v: usize) -> Result<usize> {
        let g = &self.heap.graph;
        g.check_vertex(v)?;
        let below = g.adjacent_vertices(v).iter().map(|&u| self.tops[u]).fold(self.tops[v], usize::max);
        let h = below + 1;
        if h > self.heap.layers.len() {
            self.heap.layers.push(vec![v]);
        } else {
            let layer = &mut self.heap.layers[h - 1];
            let pos = layer.binary_search(&v).unwrap_err();
            layer.insert(pos, v);
        }
        self.tops[v] = h;
        self.heap.size += 1;
        Ok(h)
    }

    pub(crate) fn finish(self) -> Heap {
        self.heap
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{linear_window, path, CommutationGraph};

    /// The cube graph of the eight-cell example: outer square a b c d, inner
    /// square e f g h, spokes a-e, b-f, c-g, d-h.
    pub(crate) fn cube() -> Arc<CommutationGraph> {
        let edges = [
            ("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"),
            ("e", "f"), ("f", "g"), ("g", "h"), ("h", "e"),
            ("a", "e"), ("b", "f"), ("c", "g"), ("d", "h"),
        ];
        Arc::new(CommutationGraph::new(["a", "b", "c", "d", "e", "f", "g", "h"], edges).unwrap())
    }

    fn labels(g: &CommutationGraph, layers: &[Vec<usize>]) -> Vec<String> {
        layers.iter().map(|l| g.format_word(l)).collect()
    }

    fn window(radius: usize) -> Arc<CommutationGraph> {
        Arc::new(linear_window(radius).0)
    }

    #[test]
    fn cube_example_layers() {
        let g = cube();
        let e = Heap::from_labels(g.clone(), "acbegeaf").unwrap();
        assert_eq!(labels(&g, e.layers()), ["ac", "beg", "e", "af"]);
        assert_eq!((e.size(), e.height()), (8, 4));
        assert_eq!(e.to_label_word(), "acbegeaf");
        assert_eq!(Heap::from_labels(g.clone(), "cgabeeaf").unwrap(), e);
        assert_eq!(Heap::from_labels(g.clone(), "").unwrap(), Heap::empty(g.clone()));
        e.check_invariants().unwrap();
        assert!(!e.is_pyramid());
    }

    #[test]
    fn push_heights() {
        let g = window(3);
        let zero = g.vertex("0").unwrap();
        let one = g.vertex("1").unwrap();
        let two = g.vertex("2").unwrap();
        let h = Heap::empty(g.clone()).push(zero).unwrap();
        assert_eq!(h.cells(), vec![Cell::new(zero, 1)]);
        let h = Heap::from_word(g.clone(), &[zero, one, zero]).unwrap();
        assert_eq!(h.cells(), vec![Cell::new(zero, 1), Cell::new(one, 2), Cell::new(zero, 3)]);
        let h = Heap::from_word(g.clone(), &[zero, two]).unwrap();
        assert_eq!(h.cells(), vec![Cell::new(zero, 1), Cell::new(two, 1)]);
        assert!(Heap::empty(g).push(99).is_err());
    }

    #[test]
    fn products() {
        let g = cube();
        let e = Heap::from_labels(g.clone(), "acbegeaf").unwrap();
        let c = Heap::from_labels(g.clone(), "c").unwrap();
        assert_eq!(labels(&g, e.product(&c).unwrap().layers()), ["ac", "beg", "ce", "af"]);
        assert_eq!(e.product(&Heap::empty(g.clone())).unwrap(), e);
        assert_eq!(Heap::empty(g.clone()).product(&e).unwrap(), e);

        let w = window(2);
        let zero = Heap::from_labels(w.clone(), "0").unwrap();
        let one = Heap::from_labels(w.clone(), "1").unwrap();
        assert_ne!(zero.product(&one).unwrap(), one.product(&zero).unwrap());

        let other = Heap::from_labels(Arc::new(path(3)), "a").unwrap();
        assert_eq!(e.product(&other), Err(Error::GraphMismatch));
    }

    #[test]
    fn trace_equivalence() {
        let w = window(5);
        let u = w.parse_word("0102302302401").unwrap();
        let v = w.parse_word("0102030203241").unwrap();
        assert!(equivalent(&w, &u, &v).unwrap());
        let p = Arc::new(path(3));
        assert!(equivalent(&p, &[0, 2], &[2, 0]).unwrap());
        assert!(!equivalent(&p, &[0, 1], &[1, 0]).unwrap());
        assert!(equivalent(&p, &[0, 9], &[0]).is_err());
    }

    #[test]
    fn duals() {
        let w = window(2);
        let (zero, one) = (w.vertex("0").unwrap(), w.vertex("1").unwrap());
        assert_eq!(Heap::empty(w.clone()).dual(), Heap::empty(w.clone()));
        let h = Heap::from_word(w.clone(), &[zero, one]).unwrap();
        assert_eq!(h.dual().cells(), vec![Cell::new(one, 1), Cell::new(zero, 2)]);
        let single = Heap::from_word(w.clone(), &[one]).unwrap();
        assert_eq!(single.dual(), single);
        let e = Heap::from_labels(cube(), "acbegeaf").unwrap();
        assert_eq!(e.dual().dual(), e);
    }

    #[test]
    fn strictness() {
        let w = window(3);
        let s = |t: &str| Heap::from_labels(w.clone(), t).unwrap();
        assert!(s("010").is_strict());
        assert!(!s("00").is_strict());
        assert!(!s("020").is_strict());
        for t in ["010", "00", "020", "0110", "012101", "21012"] {
            assert_eq!(s(t).is_strict(), s(t).is_strict_by_layers(), "{t}");
        }
    }

    #[test]
    fn pyramid_splits_of_the_cube_example() {
        let g = cube();
        let e = Heap::from_labels(g.clone(), "acbegeaf").unwrap();
        let h = |t: &str| Heap::from_labels(g.clone(), t).unwrap();
        let cell = |l: &str, height| Cell::new(g.vertex(l).unwrap(), height);
        let expected = [
            (cell("a", 1), "cg", "abeeaf"),
            (cell("c", 1), "aee", "cbgaf"),
            (cell("b", 2), "acege", "baf"),
            (cell("e", 2), "acbg", "eeaf"),
            (cell("g", 2), "acbeea", "gf"),
            (cell("e", 3), "acbeg", "eaf"),
            (cell("a", 4), "acbegef", "a"),
            (cell("f", 4), "acbegea", "f"),
        ];
        for (c, x, p) in expected {
            let (lower, upper) = e.pyramid_split(c).unwrap();
            assert_eq!(lower, h(x), "{c:?}");
            assert_eq!(upper, h(p), "{c:?}");
            assert!(upper.is_pyramid());
            assert_eq!(lower.product(&upper).unwrap(), e);
        }
        assert!(e.pyramid_split(cell("d", 1)).is_err());
        let single = h("b");
        assert_eq!(single.pyramid_split(cell("b", 1)).unwrap(), (Heap::empty(g.clone()), single.clone()));
    }

    #[test]
    fn pyramids() {
        let w = window(2);
        assert!(Heap::from_labels(w.clone(), "010").unwrap().is_pyramid());
        assert!(!Heap::empty(w).is_pyramid());
    }

    #[test]
    fn from_layers_checks_canonical_form() {
        let g = Arc::new(path(3));
        assert!(Heap::from_layers(g.clone(), vec![vec![0, 2], vec![1]]).is_ok());
        assert!(Heap::from_layers(g.clone(), vec![vec![0], vec![2]]).is_err());
        assert!(Heap::from_layers(g, vec![vec![0, 1]]).is_err());
    }
}
