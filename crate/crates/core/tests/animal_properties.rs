mod common;

use std::collections::BTreeSet;

use heaps_core::animal::{
    average_width, beta, beta_decomposition, beta_inverse, compact_animal, compact_decomposition, enumerate_animals,
    equerre_factors, mean_prefix_height, Animal, Lattice, Site, Source,
};
use heaps_core::paths::StepWord;
use heaps_core::random::{random_animal, RandomSource};
use heaps_core::{Error, Heap, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

use common::{cells_of, grow_animals, trace_key};

const LATTICES: [(Lattice, bool); 2] = [(Lattice::Square, false), (Lattice::Triangular, true)];

#[test]
fn beta_image_is_every_point_source_animal() {
    for (lattice, triangular) in LATTICES {
        for len in 0..=8 {
            let image: BTreeSet<_> = StepWord::all_prefixes(len, lattice.colors())
                .iter()
                .map(|w| cells_of(&beta(w, lattice).unwrap()))
                .collect();
            assert_eq!(image.len(), StepWord::all_prefixes(len, lattice.colors()).len());
            assert_eq!(image, grow_animals(len + 1, triangular, false), "{} size {}", lattice.name(), len + 1);
        }
    }
}

#[test]
fn compact_image_is_every_compact_animal() {
    for (lattice, triangular, max) in [(Lattice::Square, false, 7), (Lattice::Triangular, true, 6)] {
        for n in 1..=max {
            let words = StepWord::all_words(n - 1, lattice.colors());
            let image: BTreeSet<_> = words.iter().map(|w| cells_of(&compact_animal(w, lattice).unwrap())).collect();
            assert_eq!(image.len(), words.len());
            assert_eq!(image, grow_animals(n, triangular, true));
        }
    }
}

#[test]
fn enumeration_matches_growth_oracle() {
    for (lattice, triangular) in LATTICES {
        for source in [Source::Point, Source::Compact] {
            for n in 1..=6 {
                let listed: BTreeSet<_> = enumerate_animals(n, lattice, source).unwrap().iter().map(cells_of).collect();
                assert_eq!(listed, grow_animals(n, triangular, source == Source::Compact));
            }
        }
    }
    assert_eq!(
        enumerate_animals(13, Lattice::Square, Source::Point).unwrap_err(),
        Error::BoundExceeded { size: 13, bound: 12 }
    );
}

#[test]
fn decomposition_reads_the_marked_word() {
    for (lattice, _) in LATTICES {
        for len in 0..=8 {
            for w in StepWord::all_prefixes(len, lattice.colors()) {
                let d = beta_decomposition(&w, lattice).unwrap();
                assert_eq!(d.flatten(), w.mark_celibates().to_string());
                assert_eq!(d.animal(), beta(&w, lattice).unwrap());
            }
        }
        for w in StepWord::all_words(4, lattice.colors()) {
            assert_eq!(compact_decomposition(&w, lattice).unwrap().flatten(), w.mark_celibates().to_string());
        }
    }
}

#[test]
fn equerre_factors_multiply_back() {
    for (lattice, _) in LATTICES {
        for n in 1..=8 {
            for an in enumerate_animals(n, lattice, Source::Point).unwrap() {
                let heap = an.heap_view();
                let graph = heap.graph().clone();
                let radius = (graph.vertex_count() as i64 - 1) / 2;
                let mut product = Heap::empty(graph.clone());
                for factor in equerre_factors(&an).unwrap() {
                    let word: Vec<usize> = factor.iter().map(|c| (c.fiber + radius) as usize).collect();
                    product = product.product(&Heap::from_word(graph.clone(), &word).unwrap()).unwrap();
                }
                assert_eq!(product, heap);
            }
        }
    }
}

#[test]
fn mean_width_matches_closed_form() {
    for (lattice, _) in LATTICES {
        for n in 1..=7 {
            let all = enumerate_animals(n, lattice, Source::Point).unwrap();
            let total: i64 = all.iter().map(Animal::width).sum();
            let mean = Rational::new(BigInt::from(total), BigInt::from(all.len()));
            assert_eq!(average_width(n, lattice), mean, "{} n={n}", lattice.name());
            assert_eq!(mean, mean_prefix_height(n - 1, lattice.colors()) * Rational::from_integer(2.into()));
        }
    }
    assert_eq!(average_width(2, Lattice::Triangular), Rational::new(2.into(), 3.into()));
}

#[test]
fn colored_view_keeps_the_trace() {
    for n in 1..=6 {
        for an in enumerate_animals(n, Lattice::Triangular, Source::Point).unwrap() {
            let (graph, colored) = an.colored_view();
            let heap = an.heap_view();
            assert_eq!(trace_key(&graph, &colored.reading()), trace_key(&graph, &heap.canonical_word()));
            assert_eq!(colored.size(), n);
        }
    }
}

#[test]
fn malformed_animals_are_rejected() {
    let bad = [
        vec![Site::new(0, 0), Site::new(2, 2)],
        vec![Site::new(0, 0), Site::new(1, 0)],
        vec![Site::new(1, 1)],
        vec![Site::new(0, 0), Site::new(0, 0)],
    ];
    for cells in bad {
        assert!(Animal::new(Lattice::Square, Source::Point, cells).is_err());
    }
    assert!(Animal::new(Lattice::Triangular, Source::Point, vec![Site::new(0, 0), Site::new(0, 2)]).is_ok());
    assert!(Animal::new(Lattice::Square, Source::Point, vec![Site::new(0, 0), Site::new(0, 2)]).is_err());
    assert!(Animal::from_json("{\"lattice\":\"hex\",\"source\":\"point\",\"cells\":[[0,0]]}").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_animals_are_valid_and_invert(seed in any::<u64>(), n in 1usize..300, triangular in any::<bool>()) {
        let lattice = if triangular { Lattice::Triangular } else { Lattice::Square };
        let (an, report) = random_animal(n, lattice, Source::Point, &mut RandomSource::new(seed)).unwrap();
        prop_assert_eq!(an.size(), n);
        let rebuilt = Animal::new(lattice, Source::Point, an.cells().to_vec()).unwrap();
        prop_assert_eq!(&rebuilt, &an);
        prop_assert_eq!(beta_inverse(&an).unwrap(), report.word);
        prop_assert_eq!(Animal::from_json(&an.to_json()).unwrap(), an.clone());
        prop_assert_eq!(an.half_width().unwrap(), an.max_fiber());
    }

    #[test]
    fn random_compact_animals_are_valid(seed in any::<u64>(), n in 1usize..200, triangular in any::<bool>()) {
        let lattice = if triangular { Lattice::Triangular } else { Lattice::Square };
        let (an, report) = random_animal(n, lattice, Source::Compact, &mut RandomSource::new(seed)).unwrap();
        prop_assert_eq!(an.size(), n);
        prop_assert_eq!(&compact_animal(&report.word, lattice).unwrap(), &an);
        prop_assert!(Animal::new(lattice, Source::Compact, an.cells().to_vec()).is_ok());
        prop_assert!(beta_inverse(&an).is_err());
    }
}
