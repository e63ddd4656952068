//! Directed site animals on the square and triangular lattices, seen as
//! heaps over the integers: a cell `(fiber, height)` steps to
//! `(fiber ± 1, height + 1)`, and on the triangular lattice also to
//! `(fiber, height + 2)`. Heights start at 0 and `fiber + height` is even.

mod build;
mod count;
mod inverse;

pub use build::{beta, beta_decomposition, compact_animal, compact_decomposition, Decomposition, DecompositionNode};
pub use count::{animal_count, average_width, enumerate_animals, mean_prefix_height, CountKind};
pub use inverse::{beta_inverse, equerre_factors};

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{linear_window, CommutationGraph};
use crate::heap::{colored_layers, ColoredHeap, Heap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lattice {
    Square,
    Triangular,
}

impl Lattice {
    /// Number of level-step colors in the matching Motzkin words.
    pub fn colors(self) -> usize {
        match self {
            Lattice::Square => 1,
            Lattice::Triangular => 2,
        }
    }

    /// Size of the word alphabet, `colors + 2`.
    pub fn letters(self) -> usize {
        self.colors() + 2
    }

    pub fn name(self) -> &'static str {
        match self {
            Lattice::Square => "square",
            Lattice::Triangular => "triangular",
        }
    }
}

impl FromStr for Lattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "square" => Ok(Lattice::Square),
            "triangular" => Ok(Lattice::Triangular),
            _ => Err(Error::Parse(format!("unknown lattice `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// A single cell at `(0, 0)`.
    Point,
    /// Ground cells at fibers `0, 2, ..., 2k`.
    Compact,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Point => "point",
            Source::Compact => "compact",
        }
    }
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "point" => Ok(Source::Point),
            "compact" => Ok(Source::Compact),
            _ => Err(Error::Parse(format!("unknown source `{s}`"))),
        }
    }
}

/// A cell of an animal. Ordered by height, then fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Site {
    pub fiber: i64,
    pub height: i64,
}

impl Site {
    pub fn new(fiber: i64, height: i64) -> Self {
        Self { fiber, height }
    }
}

impl Ord for Site {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.height, self.fiber).cmp(&(other.height, other.fiber))
    }
}

impl PartialOrd for Site {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Animal {
    cells: Vec<Site>,
    lattice: Lattice,
    source: Source,
}

#[derive(Serialize, Deserialize)]
struct AnimalJson {
    lattice: Lattice,
    source: Source,
    cells: Vec<(i64, i64)>,
}

impl Animal {
    /// Validates and sorts the cells.
    pub fn new(lattice: Lattice, source: Source, mut cells: Vec<Site>) -> Result<Self> {
        cells.sort_unstable();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedAnimal(format!("({}, {}) appears twice", w[0].fiber, w[0].height)));
        }
        let an = Self { cells, lattice, source };
        an.check()?;
        Ok(an)
    }

    /// Skips validation; callers guarantee a sorted, valid cell list.
    pub(crate) fn from_sorted_unchecked(lattice: Lattice, source: Source, cells: Vec<Site>) -> Self {
        Self { cells, lattice, source }
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn cells(&self) -> &[Site] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Cells one directed step below `site`.
    pub fn predecessors(lattice: Lattice, site: Site) -> Vec<Site> {
        let mut out = vec![Site::new(site.fiber - 1, site.height - 1), Site::new(site.fiber + 1, site.height - 1)];
        if lattice == Lattice::Triangular {
            out.push(Site::new(site.fiber, site.height - 2));
        }
        out
    }

    /// Cells one directed step above `site`.
    pub fn successors(lattice: Lattice, site: Site) -> Vec<Site> {
        let mut out = vec![Site::new(site.fiber - 1, site.height + 1), Site::new(site.fiber + 1, site.height + 1)];
        if lattice == Lattice::Triangular {
            out.push(Site::new(site.fiber, site.height + 2));
        }
        out
    }

    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedAnimal(msg));
        if self.cells.is_empty() {
            return bad("no cells".into());
        }
        let ground: Vec<i64> = self.cells.iter().take_while(|c| c.height == 0).map(|c| c.fiber).collect();
        match self.source {
            Source::Point if ground != [0] => return bad("point source must be the single ground cell (0, 0)".into()),
            Source::Compact if ground.iter().enumerate().any(|(i, &x)| x != 2 * i as i64) => {
                return bad("compact source must occupy fibers 0, 2, 4, ... on the ground".into());
            }
            _ => {}
        }
        let present: HashSet<Site> = self.cells.iter().copied().collect();
        for &c in &self.cells {
            if c.height < 0 || (c.fiber + c.height).rem_euclid(2) != 0 {
                return bad(format!("({}, {}) is not a lattice site", c.fiber, c.height));
            }
            if c.height > 0 && !Self::predecessors(self.lattice, c).iter().any(|p| present.contains(p)) {
                return bad(format!("({}, {}) is not reachable from the source", c.fiber, c.height));
            }
        }
        Ok(())
    }

    /// Largest occupied fiber.
    pub fn half_width(&self) -> Result<i64> {
        if self.source != Source::Point {
            return Err(Error::Unsupported("half-width is defined for point sources".into()));
        }
        Ok(self.max_fiber())
    }

    /// `max fiber - min fiber`.
    pub fn width(&self) -> i64 {
        self.max_fiber() - self.min_fiber()
    }

    pub fn min_fiber(&self) -> i64 {
        self.cells.iter().map(|c| c.fiber).min().unwrap_or(0)
    }

    pub fn max_fiber(&self) -> i64 {
        self.cells.iter().map(|c| c.fiber).max().unwrap_or(0)
    }

    fn window(&self) -> (usize, Vec<usize>) {
        let radius = self.cells.iter().map(|c| c.fiber.unsigned_abs() as usize).max().unwrap_or(0);
        let word = self.cells.iter().map(|c| (c.fiber + radius as i64) as usize).collect();
        (radius, word)
    }

    /// The animal as a heap on a window of the linear lattice; fiber `x` is
    /// the vertex labeled `x`.
    pub fn heap_view(&self) -> Heap {
        let (radius, word) = self.window();
        let graph = Arc::new(linear_window(radius).0);
        Heap::from_word(graph, &word).expect("window covers every fiber")
    }

    /// The animal as a two-colored heap: layer `height + 1` holds the cells
    /// at that height. On the square lattice colors are not needed and
    /// [`Animal::heap_view`] already has this shape.
    pub fn colored_view(&self) -> (CommutationGraph, ColoredHeap) {
        let (radius, word) = self.window();
        let (graph, coloring) = linear_window(radius);
        let heap = colored_layers(&graph, &coloring, &word).expect("parity coloring is proper");
        (graph, heap)
    }

    pub fn to_json(&self) -> String {
        let raw = AnimalJson {
            lattice: self.lattice,
            source: self.source,
            cells: self.cells.iter().map(|c| (c.fiber, c.height)).collect(),
        };
        serde_json::to_string(&raw).expect("animal serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: AnimalJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(raw.lattice, raw.source, raw.cells.into_iter().map(|(x, y)| Site::new(x, y)).collect())
    }
}

impl fmt::Display for Animal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The 30-cell square animal drawn with east and north steps, given as
    /// `(column, row)`; fiber is `column - row`, height `column + row`.
    pub(crate) fn drawn_square_animal() -> Animal {
        let rows: [&[i64]; 7] = [&[0], &[0, 1, 2, 3, 4], &[0, 4, 5, 6], &[0, 1, 2, 3, 4, 5, 6], &[0, 2, 6, 7], &[0, 1, 2], &[2, 3, 4, 5, 6, 7]];
        let cells = rows
            .iter()
            .enumerate()
            .flat_map(|(row, cols)| cols.iter().map(move |&col| Site::new(col - row as i64, col + row as i64)))
            .collect();
        Animal::new(Lattice::Square, Source::Point, cells).unwrap()
    }

    #[test]
    fn drawn_animal_shape() {
        let an = drawn_square_animal();
        assert_eq!(an.size(), 30);
        assert_eq!(an.half_width().unwrap(), 4);
        assert_eq!((an.min_fiber(), an.max_fiber()), (-5, 4));
    }

    #[test]
    fn validation() {
        let s = |x, y| Site::new(x, y);
        assert!(Animal::new(Lattice::Square, Source::Point, vec![s(0, 0), s(1, 1)]).is_ok());
        assert!(Animal::new(Lattice::Square, Source::Point, vec![s(0, 0), s(0, 2)]).is_err());
        assert!(Animal::new(Lattice::Triangular, Source::Point, vec![s(0, 0), s(0, 2)]).is_ok());
        assert!(Animal::new(Lattice::Square, Source::Point, vec![s(0, 0), s(1, 0)]).is_err());
        assert!(Animal::new(Lattice::Square, Source::Compact, vec![s(0, 0), s(2, 0)]).is_ok());
        assert!(Animal::new(Lattice::Square, Source::Compact, vec![s(0, 0), s(4, 0)]).is_err());
        assert!(Animal::new(Lattice::Square, Source::Point, vec![]).is_err());
        assert!(Animal::new(Lattice::Square, Source::Compact, vec![s(2, 0)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let an = Animal::new(Lattice::Square, Source::Point, vec![Site::new(-1, 1), Site::new(0, 0)]).unwrap();
        let text = an.to_json();
        assert_eq!(text, r#"{"lattice":"square","source":"point","cells":[[0,0],[-1,1]]}"#);
        assert_eq!(Animal::from_json(&text).unwrap(), an);
        assert!(Animal::from_json(r#"{"lattice":"hex","source":"point","cells":[[0,0]]}"#).is_err());
    }

    #[test]
    fn heap_views_match_heights() {
        let an = drawn_square_animal();
        let heap = an.heap_view();
        let radius = 5;
        for c in an.cells() {
            let v = (c.fiber + radius) as usize;
            assert!(heap.contains(crate::heap::Cell::new(v, c.height as usize + 1)));
        }
        assert!(heap.is_strict());
        assert!(heap.is_pyramid());

        let tri = Animal::new(Lattice::Triangular, Source::Point, vec![Site::new(0, 0), Site::new(0, 2), Site::new(1, 1)]).unwrap();
        let (g, colored) = tri.colored_view();
        for c in tri.cells() {
            let v = g.vertex(&c.fiber.to_string()).unwrap();
            assert!(colored.layers[c.height as usize].contains(&v));
        }
    }
}
