use std::fmt::Write as _;

use super::{Animal, Lattice, Site, Source};
use crate::error::{Error, Result};
use crate::paths::{Step, StepWord};

/// One placed cell of the equerre recursion: the base of a sub-equerre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionNode {
    pub site: Site,
    /// Letter read right after placing the cell; `None` for the end of word.
    pub letter: Option<Step>,
    pub depth: usize,
    /// Cell whose letter spawned this sub-equerre; `None` at top level.
    pub parent: Option<usize>,
    /// Cells in the sub-equerre based at this cell.
    pub size: usize,
}

/// Cells in the order the equerre recursion places them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub lattice: Lattice,
    pub source: Source,
    pub nodes: Vec<DecompositionNode>,
}

impl Decomposition {
    pub fn animal(&self) -> Animal {
        let mut cells: Vec<Site> = self.nodes.iter().map(|n| n.site).collect();
        cells.sort_unstable();
        Animal::from_sorted_unchecked(self.lattice, self.source, cells)
    }

    /// Node letters in placement order, without the final end marker: the
    /// marked word the animal was built from.
    pub fn flatten(&self) -> String {
        self.nodes.iter().filter_map(|n| n.letter.map(Step::letter)).collect()
    }

    /// Indented text, one sub-equerre per line: letter read after its base,
    /// then base fiber, base height and size. `.` stands for the end of
    /// the word.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for n in &self.nodes {
            let letter = n.letter.map_or('.', Step::letter);
            let _ = writeln!(
                out,
                "{:indent$}{letter} fiber={} height={} size={}",
                "",
                n.site.fiber,
                n.site.height,
                n.size,
                indent = 2 * n.depth
            );
        }
        out
    }
}

/// Column heights during stacking, `-1` for an empty fiber.
struct Fibres {
    heights: Vec<i64>,
    offset: i64,
}

impl Fibres {
    fn new(cells: usize) -> Self {
        // Equerres reach at most `cells` fibers to the left, the top-level
        // loop at most `2 * cells` to the right.
        let offset = cells as i64 + 2;
        Self { heights: vec![-1; 3 * cells + 6], offset }
    }

    /// Drops a cell on `fiber`: one above the highest of the three nearest
    /// fibers, or two above when that highest is the fiber itself (leftmost
    /// fiber wins ties).
    fn stack(&mut self, fiber: i64) -> Site {
        let j = (fiber + self.offset) as usize;
        let mut h = -2;
        let mut top = j;
        for k in j - 1..=j + 1 {
            if h < self.heights[k] {
                h = self.heights[k];
                top = k;
            }
        }
        h += 1;
        if top == j {
            h += 1;
        }
        self.heights[j] = h;
        Site::new(fiber, h)
    }
}

/// Runs the equerre recursion over a marked word, with an explicit stack.
fn decode(marked: &[Step], lattice: Lattice, source: Source) -> Decomposition {
    let n = marked.len() + 1;
    let mut fibres = Fibres::new(n);
    let mut nodes: Vec<DecompositionNode> = Vec::with_capacity(n);
    let mut read = 0usize;
    let mut fiber = 0i64;
    let mut pending: Vec<(i64, usize, Option<usize>)> = Vec::new();
    while read < n {
        pending.push((fiber, 0, None));
        while let Some((x, depth, parent)) = pending.pop() {
            let site = fibres.stack(x);
            let letter = marked.get(read).copied();
            read += 1;
            let me = nodes.len();
            nodes.push(DecompositionNode { site, letter, depth, parent, size: 1 });
            // Pushed in reverse so the left sub-equerre is built first.
            match letter {
                Some(Step::Up) => {
                    pending.push((x, depth + 1, Some(me)));
                    pending.push((x - 1, depth + 1, Some(me)));
                }
                Some(Step::Level1) => pending.push((x - 1, depth + 1, Some(me))),
                Some(Step::Level2) => pending.push((x, depth + 1, Some(me))),
                _ => {}
            }
        }
        if nodes.last().and_then(|n| n.letter) == Some(Step::CelibateDown) {
            fiber += 1;
        }
        fiber += 1;
    }
    for i in (0..nodes.len()).rev() {
        if let Some(p) = nodes[i].parent {
            nodes[p].size += nodes[i].size;
        }
    }
    Decomposition { lattice, source, nodes }
}

fn check_alphabet(word: &StepWord, lattice: Lattice) -> Result<()> {
    if word.colors() != lattice.colors() {
        return Err(Error::MalformedWord(format!(
            "{} lattice needs {} level colors, word has {}",
            lattice.name(),
            lattice.colors(),
            word.colors()
        )));
    }
    Ok(())
}

/// Point-source animal of size `|w| + 1` built from a Motzkin prefix, along
/// with its equerre decomposition.
pub fn beta_decomposition(word: &StepWord, lattice: Lattice) -> Result<Decomposition> {
    check_alphabet(word, lattice)?;
    if !word.is_motzkin_prefix() {
        return Err(Error::MalformedWord(format!("`{word}` is not a Motzkin prefix")));
    }
    let mut marked = word.unmark();
    marked.mark_ascents();
    Ok(decode(marked.steps(), lattice, Source::Point))
}

/// Point-source animal of size `|w| + 1` built from a Motzkin prefix; its
/// right half-width is the height of the prefix.
pub fn beta(word: &StepWord, lattice: Lattice) -> Result<Animal> {
    Ok(beta_decomposition(word, lattice)?.animal())
}

/// Compact-source animal of size `|w| + 1` built from any word.
pub fn compact_decomposition(word: &StepWord, lattice: Lattice) -> Result<Decomposition> {
    check_alphabet(word, lattice)?;
    let marked = word.mark_celibates();
    Ok(decode(marked.steps(), lattice, Source::Compact))
}

pub fn compact_animal(word: &StepWord, lattice: Lattice) -> Result<Animal> {
    Ok(compact_decomposition(word, lattice)?.animal())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn sq(text: &str) -> StepWord {
        StepWord::parse(text, 1).unwrap()
    }

    fn cells(an: &Animal) -> Vec<(i64, i64)> {
        an.cells().iter().map(|c| (c.fiber, c.height)).collect()
    }

    #[test]
    fn small_square_animals() {
        assert_eq!(cells(&beta(&sq(""), Lattice::Square).unwrap()), [(0, 0)]);
        assert_eq!(cells(&beta(&sq("c"), Lattice::Square).unwrap()), [(0, 0), (-1, 1)]);
        assert_eq!(cells(&beta(&sq("a"), Lattice::Square).unwrap()), [(0, 0), (1, 1)]);
        assert_eq!(cells(&beta(&sq("ab"), Lattice::Square).unwrap()), [(0, 0), (-1, 1), (0, 2)]);
        assert!(beta(&sq("b"), Lattice::Square).is_err());
        assert!(beta(&sq("c"), Lattice::Triangular).is_err());
    }

    #[test]
    fn triangular_same_fiber_stacking() {
        let w = StepWord::parse("d", 2).unwrap();
        assert_eq!(cells(&beta(&w, Lattice::Triangular).unwrap()), [(0, 0), (0, 2)]);
    }

    #[test]
    fn decomposition_text() {
        let d = beta_decomposition(&sq("ab"), Lattice::Square).unwrap();
        assert_eq!(d.to_text(), "a fiber=0 height=0 size=3\n  b fiber=-1 height=1 size=1\n  . fiber=0 height=2 size=1\n");
        assert_eq!(d.flatten(), "ab");
        let d = beta_decomposition(&sq("a"), Lattice::Square).unwrap();
        assert_eq!(d.flatten(), "A");
        assert_eq!(d.nodes.iter().map(|n| n.depth).collect::<Vec<_>>(), [0, 0]);
    }

    #[test]
    fn compact_words_give_distinct_animals() {
        for (lattice, n) in [(Lattice::Square, 3), (Lattice::Triangular, 2)] {
            let words = StepWord::all_words(n, lattice.colors());
            let animals: BTreeSet<Animal> = words.iter().map(|w| compact_animal(w, lattice).unwrap()).collect();
            assert_eq!(animals.len(), words.len());
            for an in &animals {
                Animal::new(an.lattice(), an.source(), an.cells().to_vec()).unwrap();
            }
        }
        let an = compact_animal(&sq("b"), Lattice::Square).unwrap();
        assert_eq!(cells(&an), [(0, 0), (2, 0)]);
    }
}
