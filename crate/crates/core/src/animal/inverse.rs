use std::collections::HashMap;

use super::{beta, Animal, Site, Source};
use crate::error::{Error, Result};
use crate::paths::{Step, StepWord};

/// Splits `region` into the cells generated by `base` (reachable through
/// steps to a neighboring or equal fiber and strictly up) and the rest.
///
/// On each fiber the generated cells form an upper segment, and the lowest
/// one on fiber `x ± 1` is the first cell above the lowest one on `x`, so
/// one sweep in each direction finds them.
fn split_generated(region: &[Site], base: Site) -> (Vec<Site>, Vec<Site>) {
    let mut by_fiber: HashMap<i64, Vec<i64>> = HashMap::new();
    for c in region {
        by_fiber.entry(c.fiber).or_default().push(c.height);
    }
    let mut floor: HashMap<i64, i64> = HashMap::from([(base.fiber, base.height)]);
    for dir in [-1, 1] {
        let (mut x, mut prev) = (base.fiber + dir, base.height);
        while let Some(h) = by_fiber.get(&x).and_then(|hs| hs.iter().copied().filter(|&h| h > prev).min()) {
            floor.insert(x, h);
            prev = h;
            x += dir;
        }
    }
    region.iter().partition(|c| floor.get(&c.fiber).is_some_and(|&f| c.height >= f))
}

fn lowest_on(region: &[Site], fiber: i64, skip: Option<Site>) -> Option<Site> {
    region.iter().copied().filter(|c| c.fiber == fiber && Some(*c) != skip).min()
}

enum Task {
    Emit(Step),
    Pyramid(Vec<Site>),
    Equerre(Vec<Site>),
}

/// The Motzkin prefix whose animal is `an`, found by peeling off equerres:
/// a pyramid is its leftmost equerre times the pyramid generated by the
/// lowest cell one fiber to the right, and an equerre `L` with base `x` is
/// `x`, `x M` or `x M N` (`M` based one fiber left, `N` on the base fiber).
pub fn beta_inverse(an: &Animal) -> Result<StepWord> {
    if an.source() != Source::Point {
        return Err(Error::Unsupported("only point-source animals come from prefixes".into()));
    }
    let malformed = |what: &str| Error::MalformedAnimal(what.to_string());
    let mut steps = Vec::with_capacity(an.size().saturating_sub(1));
    let mut tasks = vec![Task::Pyramid(an.cells().to_vec())];
    while let Some(task) = tasks.pop() {
        match task {
            Task::Emit(s) => steps.push(s),
            Task::Pyramid(region) => {
                let base = *region.iter().min().ok_or_else(|| malformed("empty pyramid"))?;
                match lowest_on(&region, base.fiber + 1, None) {
                    Some(next) => {
                        let (upper, lower) = split_generated(&region, next);
                        tasks.push(Task::Pyramid(upper));
                        tasks.push(Task::Emit(Step::Up));
                        tasks.push(Task::Equerre(lower));
                    }
                    None => tasks.push(Task::Equerre(region)),
                }
            }
            Task::Equerre(region) => {
                let base = *region.iter().min().ok_or_else(|| malformed("empty equerre"))?;
                if region.iter().any(|c| c.fiber > base.fiber) {
                    return Err(malformed("equerre reaches right of its base"));
                }
                let (right, rest) = match lowest_on(&region, base.fiber, Some(base)) {
                    Some(second) => split_generated(&region, second),
                    None => (Vec::new(), region.clone()),
                };
                let left: Vec<Site> = rest.into_iter().filter(|&c| c != base).collect();
                if let Some(&m) = left.iter().min() {
                    if m.fiber != base.fiber - 1 {
                        return Err(malformed("left part of an equerre is not based one fiber left"));
                    }
                }
                match (left.is_empty(), right.is_empty()) {
                    (true, true) => {}
                    (false, true) => {
                        tasks.push(Task::Equerre(left));
                        tasks.push(Task::Emit(Step::Level1));
                    }
                    (true, false) => {
                        tasks.push(Task::Equerre(right));
                        tasks.push(Task::Emit(Step::Level2));
                    }
                    (false, false) => {
                        tasks.push(Task::Equerre(right));
                        tasks.push(Task::Emit(Step::Down));
                        tasks.push(Task::Equerre(left));
                        tasks.push(Task::Emit(Step::Up));
                    }
                }
            }
        }
    }
    let word = StepWord::new(an.lattice().colors(), steps).map_err(|e| Error::MalformedAnimal(e.to_string()))?;
    if beta(&word, an.lattice())? != *an {
        return Err(malformed("decomposition does not rebuild the animal"));
    }
    Ok(word)
}

/// The equerres of the leftmost-first decomposition of a point-source
/// animal, as cell sets in the original coordinates.
pub fn equerre_factors(an: &Animal) -> Result<Vec<Vec<Site>>> {
    if an.source() != Source::Point {
        return Err(Error::Unsupported("only point-source animals split into equerres".into()));
    }
    let mut out = Vec::new();
    let mut region = an.cells().to_vec();
    loop {
        let base = *region.iter().min().expect("pyramids are non-empty");
        match lowest_on(&region, base.fiber + 1, None) {
            Some(next) => {
                let (upper, lower) = split_generated(&region, next);
                out.push(lower);
                region = upper;
            }
            None => {
                out.push(region);
                return Ok(out);
            }
        }
    }
}
