//! Seeded uniform generation of words, Motzkin prefixes and animals.
//!
//! The generator is ChaCha8 seeded through `seed_from_u64`, so a seed gives
//! the same stream on every platform. Batches give task `i` its own child
//! seed derived from `(seed, i)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::animal::{compact_animal, Animal, Lattice, Source};
use crate::error::Result;
use crate::paths::{Step, StepWord};

#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

/// splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self { seed, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent source for task `index` of a batch seeded with `seed`.
    pub fn child(seed: u64, index: u64) -> Self {
        Self::new(mix(mix(seed) ^ index))
    }

    /// One letter among the first `letters` of `a b c d`.
    pub fn letter(&mut self, letters: usize) -> Step {
        Step::from_index(self.rng.random_range(0..letters))
    }
}

/// What a sampler produced and how many letters it drew to get there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationReport {
    pub word: StepWord,
    /// Letters drawn, including those thrown away by restarts.
    pub draws: u64,
}

/// Uniform word of length `n` over `colors + 2` letters.
pub fn random_word(n: usize, colors: usize, rng: &mut RandomSource) -> StepWord {
    let steps = (0..n).map(|_| rng.letter(colors + 2)).collect();
    StepWord::new(colors, steps).expect("letters fit the alphabet")
}

/// Uniform Motzkin prefix of length `n`: draw letters and start over from
/// scratch whenever the path dips below the axis.
pub fn random_motzkin_prefix(n: usize, colors: usize, rng: &mut RandomSource) -> GenerationReport {
    let mut steps = Vec::with_capacity(n);
    let mut height = 0i64;
    let mut draws = 0u64;
    while steps.len() < n {
        draws += 1;
        let s = rng.letter(colors + 2);
        steps.push(s);
        height += s.delta();
        if height < 0 {
            steps.clear();
            height = 0;
        }
    }
    GenerationReport { word: StepWord::new(colors, steps).expect("letters fit the alphabet"), draws }
}

/// Uniform animal of size `n >= 1` of the given class.
pub fn random_animal(n: usize, lattice: Lattice, source: Source, rng: &mut RandomSource) -> Result<(Animal, GenerationReport)> {
    let len = n.saturating_sub(1);
    let report = match source {
        Source::Point => random_motzkin_prefix(len, lattice.colors(), rng),
        Source::Compact => {
            let word = random_word(len, lattice.colors(), rng);
            GenerationReport { word, draws: len as u64 }
        }
    };
    let animal = match source {
        Source::Point => crate::animal::beta(&report.word, lattice)?,
        Source::Compact => compact_animal(&report.word, lattice)?,
    };
    Ok((animal, report))
}

/// `samples` animals, sample `i` drawn from [`RandomSource::child`]`(seed, i)`.
pub fn random_animals(
    n: usize,
    lattice: Lattice,
    source: Source,
    seed: u64,
    samples: usize,
) -> Result<Vec<(Animal, GenerationReport)>> {
    (0..samples as u64)
        .map(|i| random_animal(n, lattice, source, &mut RandomSource::child(seed, i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_word() {
        let mut rng = RandomSource::new(2024);
        let w = random_word(5, 1, &mut rng);
        assert_eq!(w.to_string(), GOLDEN);
        let mut again = RandomSource::new(2024);
        assert_eq!(random_word(5, 1, &mut again), w);
    }

    const GOLDEN: &str = "caccc";

    #[test]
    fn prefixes_are_prefixes() {
        let mut rng = RandomSource::new(7);
        assert_eq!(random_motzkin_prefix(0, 1, &mut rng).draws, 0);
        for n in 1..30 {
            let r = random_motzkin_prefix(n, 2, &mut rng);
            assert_eq!(r.word.len(), n);
            assert!(r.word.is_motzkin_prefix());
            assert!(r.draws >= n as u64);
        }
    }

    #[test]
    fn single_cell() {
        let mut rng = RandomSource::new(1);
        for source in [Source::Point, Source::Compact] {
            let (an, rep) = random_animal(1, Lattice::Triangular, source, &mut rng).unwrap();
            assert_eq!(an.size(), 1);
            assert_eq!(rep.draws, 0);
        }
    }

    #[test]
    fn children_differ() {
        let a = random_word(20, 2, &mut RandomSource::child(5, 0));
        let b = random_word(20, 2, &mut RandomSource::child(5, 1));
        assert_ne!(a, b);
    }
}
