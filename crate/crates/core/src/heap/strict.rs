use std::collections::BTreeMap;

use super::{Builder, Cell, Heap};
use crate::error::{Error, Result};

impl Heap {
    /// Groups runs of a letter stacked on consecutive layers into one cell.
    ///
    /// Returns the strict heap `S` and the run length of every cell of `S`;
    /// blowing each cell of `S` back up into its run gives `self`.
    pub fn strict_skeleton(&self) -> (Heap, BTreeMap<Cell, usize>) {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        // Index into `runs` of the run currently open on each fibre, with the
        // height of its top cell.
        let mut open: Vec<Option<(usize, usize)>> = vec![None; self.graph.vertex_count()];
        for cell in self.cells() {
            match open[cell.vertex] {
                Some((idx, top)) if top + 1 == cell.height => {
                    runs[idx].1 += 1;
                    open[cell.vertex] = Some((idx, cell.height));
                }
                _ => {
                    runs.push((cell.vertex, 1));
                    open[cell.vertex] = Some((runs.len() - 1, cell.height));
                }
            }
        }
        let mut b = Builder::new(Heap::empty(self.graph.clone()));
        let mut multiplicity = BTreeMap::new();
        for (v, m) in runs {
            let h = b.push(v).expect("letters of a heap are valid");
            multiplicity.insert(Cell::new(v, h), m);
        }
        (b.finish(), multiplicity)
    }

    /// Inverse of [`Heap::strict_skeleton`]: replaces every cell of a strict
    /// heap by a run of its multiplicity.
    pub fn expand_skeleton(skeleton: &Heap, multiplicity: &BTreeMap<Cell, usize>) -> Result<Heap> {
        if !skeleton.is_strict() {
            return Err(Error::Unsupported("skeleton must be a strict heap".into()));
        }
        let mut word = Vec::with_capacity(skeleton.size());
        for cell in skeleton.cells() {
            let m = multiplicity.get(&cell).copied().unwrap_or(0);
            if m == 0 {
                return Err(Error::CellNotInHeap { vertex: cell.vertex, height: cell.height });
            }
            word.extend(std::iter::repeat_n(cell.vertex, m));
        }
        Heap::from_word(skeleton.graph.clone(), &word)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graph::linear_window;

    #[test]
    fn skeleton_examples() {
        let w = Arc::new(linear_window(3).0);
        let h = |t: &str| Heap::from_labels(w.clone(), t).unwrap();
        let zero = w.vertex("0").unwrap();
        let one = w.vertex("1").unwrap();

        let (s, m) = h("000").strict_skeleton();
        assert_eq!(s, h("0"));
        assert_eq!(m, BTreeMap::from([(Cell::new(zero, 1), 3)]));

        let strict = h("0121");
        assert!(strict.is_strict());
        let (s, m) = strict.strict_skeleton();
        assert_eq!(s, strict);
        assert!(m.values().all(|&k| k == 1));

        let (s, m) = h("0110").strict_skeleton();
        assert_eq!(s, h("010"));
        assert_eq!(m[&Cell::new(one, 2)], 2);
        assert_eq!(m.values().sum::<usize>(), 4);
        assert_eq!(Heap::expand_skeleton(&s, &m).unwrap(), h("0110"));
    }
}
