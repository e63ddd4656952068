use std::collections::HashSet;
use std::sync::Arc;

use super::Heap;
use crate::graph::CommutationGraph;

/// Which pyramids to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BaseFilter {
    /// Every heap.
    #[default]
    Any,
    /// Pyramids with any base vertex.
    AnyPyramid,
    /// Pyramids whose base is the given vertex.
    Pyramid(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HeapClass {
    pub strict_only: bool,
    pub base: BaseFilter,
}

impl HeapClass {
    pub const ALL: Self = Self { strict_only: false, base: BaseFilter::Any };
    pub const STRICT: Self = Self { strict_only: true, base: BaseFilter::Any };
    pub const PYRAMIDS: Self = Self { strict_only: false, base: BaseFilter::AnyPyramid };

    pub fn pyramids_on(base: usize) -> Self {
        Self { strict_only: false, base: BaseFilter::Pyramid(base) }
    }

    pub fn admits(&self, heap: &Heap) -> bool {
        if self.strict_only && !heap.is_strict() {
            return false;
        }
        match self.base {
            BaseFilter::Any => true,
            BaseFilter::AnyPyramid => heap.is_pyramid(),
            BaseFilter::Pyramid(v) => heap.layers().first().is_some_and(|b| b.as_slice() == [v]),
        }
    }
}

/// Every heap of size at most `max_size` in `class`, ordered by size then
/// canonical word.
///
/// Heaps of size `k + 1` are obtained by pushing every letter onto every heap
/// of size `k`, deduplicated through the canonical form.
pub fn enumerate_heaps(graph: &Arc<CommutationGraph>, max_size: usize, class: HeapClass) -> Vec<Heap> {
    let mut level = vec![Heap::empty(graph.clone())];
    let mut out: Vec<Heap> = level.iter().filter(|h| class.admits(h)).cloned().collect();
    for _ in 0..max_size {
        let mut seen = HashSet::new();
        for h in &level {
            for v in 0..graph.vertex_count() {
                seen.insert(h.push(v).expect("vertex in range"));
            }
        }
        let mut next: Vec<Heap> = seen.into_iter().collect();
        next.sort();
        out.extend(next.iter().filter(|h| class.admits(h)).cloned());
        level = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edgeless, path};

    fn count_of_size(heaps: &[Heap], n: usize) -> usize {
        heaps.iter().filter(|h| h.size() == n).count()
    }

    #[test]
    fn small_counts_on_the_path() {
        let g = Arc::new(path(3));
        let all = enumerate_heaps(&g, 3, HeapClass::ALL);
        assert_eq!((0..=3).map(|n| count_of_size(&all, n)).collect::<Vec<_>>(), [1, 3, 8, 21]);
        let pyr = enumerate_heaps(&g, 3, HeapClass::PYRAMIDS);
        assert_eq!((0..=3).map(|n| count_of_size(&pyr, n)).collect::<Vec<_>>(), [0, 3, 7, 18]);
        let words: Vec<String> = all.iter().filter(|h| h.size() == 2).map(Heap::to_label_word).collect();
        assert_eq!(words, ["aa", "ab", "ac", "ba", "bb", "bc", "cb", "cc"]);
    }

    #[test]
    fn size_zero_is_the_empty_heap() {
        let g = Arc::new(edgeless(2));
        assert_eq!(enumerate_heaps(&g, 0, HeapClass::ALL), vec![Heap::empty(g.clone())]);
        assert!(enumerate_heaps(&g, 0, HeapClass::PYRAMIDS).is_empty());
    }

    #[test]
    fn based_pyramids_on_one_vertex_are_towers() {
        let g = Arc::new(edgeless(1));
        let towers = enumerate_heaps(&g, 3, HeapClass::pyramids_on(0));
        assert_eq!(towers.iter().map(Heap::size).collect::<Vec<_>>(), [1, 2, 3]);
    }
}
