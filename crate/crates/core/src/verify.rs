//! Self-checks of the library's exact identities and sampler statistics,
//! grouped into named suites.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::animal::{animal_count, beta, beta_inverse, compact_animal, enumerate_animals, Animal, CountKind, Lattice, Source};
use crate::error::{Error, Result};
use crate::gas::{evaluate_density, linear_density, mean_particles_direct, mean_particles_pyramids};
use crate::graph::{identity_suite, linear_window, path, CommutationGraph};
use crate::heap::{colored_layers, equivalent};
use crate::paths::{count_paths, PathCount, StepWord};
use crate::random::{random_animal, random_motzkin_prefix, RandomSource};
use crate::series::{Substitution, TraceSeries, UnivariateSeries};

type Exact = TraceSeries<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed, detail: detail.into() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.name)
        } else {
            write!(f, "{tag} {}: {}", self.name, self.detail)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Inversion,
    LogDerivative,
    MicroCounts,
    Counting,
    Bijection,
    Substitution,
    Gas,
    Density,
    Uniformity,
    SamplerCost,
    Scale,
    ColoredHeap,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Inversion,
        Suite::LogDerivative,
        Suite::MicroCounts,
        Suite::Counting,
        Suite::Bijection,
        Suite::Substitution,
        Suite::Gas,
        Suite::Density,
        Suite::Uniformity,
        Suite::SamplerCost,
        Suite::Scale,
        Suite::ColoredHeap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Inversion => "inversion",
            Suite::LogDerivative => "log-derivative",
            Suite::MicroCounts => "micro-counts",
            Suite::Counting => "counting",
            Suite::Bijection => "bijection",
            Suite::Substitution => "substitution",
            Suite::Gas => "gas",
            Suite::Density => "density",
            Suite::Uniformity => "uniformity",
            Suite::SamplerCost => "sampler-cost",
            Suite::Scale => "scale",
            Suite::ColoredHeap => "colored-heap",
        }
    }

    /// Truncation degree used when the caller does not pick one.
    pub fn default_degree(self) -> usize {
        match self {
            Suite::Gas => 6,
            Suite::Substitution => 8,
            Suite::Density => 12,
            Suite::Bijection => 7,
            _ => 5,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Knobs for the suites; `degree` overrides each suite's default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub degree: Option<usize>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { degree: None, seed: 1 }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<Check> {
    let degree = opts.degree.unwrap_or(suite.default_degree());
    match suite {
        Suite::Inversion => inversion(degree),
        Suite::LogDerivative => log_derivative(degree),
        Suite::MicroCounts => micro_counts(),
        Suite::Counting => counting(),
        Suite::Bijection => bijection(degree),
        Suite::Substitution => substitution(degree),
        Suite::Gas => gas(degree),
        Suite::Density => density(degree),
        Suite::Uniformity => uniformity(opts.seed, 100_000),
        Suite::SamplerCost => sampler_cost(opts.seed, 200, 10_000),
        Suite::Scale => scale(opts.seed),
        Suite::ColoredHeap => colored_heap(),
    }
}

fn suite_graphs() -> Vec<(&'static str, Arc<CommutationGraph>)> {
    identity_suite().into_iter().map(|(name, g)| (name, Arc::new(g))).collect()
}

fn equal_or_diff<T: PartialEq + fmt::Debug>(a: &T, b: &T) -> (bool, String) {
    if a == b {
        (true, String::new())
    } else {
        (false, format!("{a:?} != {b:?}"))
    }
}

pub fn inversion(degree: usize) -> Vec<Check> {
    suite_graphs()
        .into_iter()
        .map(|(name, g)| {
            let one = Exact::one(g.clone(), degree);
            let gamma = Exact::configurations(&g, degree, false);
            let gamma_bar = Exact::configurations(&g, degree, true);
            let theta = Exact::heaps(&g, degree, false);
            let theta_bar = Exact::heaps(&g, degree, true);
            let ok = gamma_bar.mul(&theta).ok() == Some(one.clone())
                && theta.mul(&gamma_bar).ok() == Some(one.clone())
                && gamma.mul(&theta_bar).ok() == Some(one.clone())
                && theta_bar.mul(&gamma).ok() == Some(one);
            Check::new(format!("inversion {name} degree {degree}"), ok, "")
        })
        .collect()
}

pub fn log_derivative(degree: usize) -> Vec<Check> {
    suite_graphs()
        .into_iter()
        .map(|(name, g)| {
            let theta = Exact::heaps(&g, degree, false);
            let gamma = Exact::configurations(&g, degree, false);
            let pyramids = Exact::pyramids(&g, degree, false, None);
            let pyramids_bar = Exact::pyramids(&g, degree, true, None);
            let first = theta.mul(&pyramids).ok() == Some(theta.derive());
            let second = pyramids_bar.mul(&gamma).map(|s| s.neg()).ok() == Some(gamma.derive());
            Check::new(format!("log-derivative {name} degree {degree}"), first && second, "")
        })
        .collect()
}

pub fn micro_counts() -> Vec<Check> {
    let g = Arc::new(path(3));
    let gamma_bar = Exact::configurations(&g, 3, true);
    let expected = "1\t\n-1\ta\n-1\tb\n-1\tc\n1\tac\n";
    let theta = Exact::heaps(&g, 3, false).project();
    let pyramids = Exact::pyramids(&g, 3, false, None).project();
    vec![
        Check::new("alternating configurations on a-b-c", gamma_bar.dump() == expected, gamma_bar.dump().replace('\n', "; ")),
        Check::new("21 heaps of size 3 on a-b-c", theta.coeff(3) == BigRational::from_integer(21.into()), theta.to_line()),
        Check::new("18 pyramids of size 3 on a-b-c", pyramids.coeff(3) == BigRational::from_integer(18.into()), pyramids.to_line()),
    ]
}

fn as_u64(x: &BigUint) -> u64 {
    x.to_u64().unwrap_or(u64::MAX)
}

pub fn counting() -> Vec<Check> {
    let mut out = Vec::new();
    let printed = [
        ("square point", Lattice::Square, Source::Point, vec![1u64, 2, 5, 13, 35, 96, 267, 750]),
        ("triangular point", Lattice::Triangular, Source::Point, vec![1, 3, 10, 35, 126, 462]),
        ("square compact", Lattice::Square, Source::Compact, (0..8).map(|k| 3u64.pow(k)).collect()),
        ("triangular compact", Lattice::Triangular, Source::Compact, (0..6).map(|k| 4u64.pow(k)).collect()),
    ];
    for (name, lattice, source, expected) in printed {
        let kind = if source == Source::Point { CountKind::PointSource } else { CountKind::CompactSource };
        let closed: Vec<u64> = (1..=expected.len()).map(|n| as_u64(&animal_count(n, lattice, kind))).collect();
        let grown: Vec<u64> =
            (1..=expected.len()).map(|n| enumerate_animals(n, lattice, source).map_or(0, |v| v.len() as u64)).collect();
        let paths: Vec<u64> = (1..=expected.len())
            .map(|n| match source {
                Source::Point => as_u64(&count_paths(n - 1, lattice.colors(), PathCount::Prefixes)),
                Source::Compact => (lattice.letters() as u64).pow(n as u32 - 1),
            })
            .collect();
        let ok = closed == expected && grown == expected && paths == expected;
        out.push(Check::new(format!("counts {name}"), ok, format!("{closed:?}")));
    }
    let equerres = [
        ("motzkin", Lattice::Square, vec![1u64, 1, 2, 4, 9, 21, 51, 127, 323]),
        ("catalan", Lattice::Triangular, vec![1, 2, 5, 14, 42, 132, 429, 1430]),
    ];
    for (name, lattice, expected) in equerres {
        let closed: Vec<u64> = (1..=expected.len()).map(|n| as_u64(&animal_count(n, lattice, CountKind::Equerre))).collect();
        let paths: Vec<u64> =
            (0..expected.len()).map(|n| as_u64(&count_paths(n, lattice.colors(), PathCount::Words))).collect();
        let ok = closed == expected && paths == expected;
        out.push(Check::new(format!("counts {name}"), ok, format!("{closed:?}")));
    }
    out
}

pub fn bijection(max_len: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for lattice in [Lattice::Square, Lattice::Triangular] {
        let mut ok = true;
        let mut detail = String::new();
        for len in 0..=max_len {
            let mut image = BTreeSet::new();
            for w in StepWord::all_prefixes(len, lattice.colors()) {
                let an = match beta(&w, lattice) {
                    Ok(an) => an,
                    Err(e) => {
                        ok = false;
                        detail = e.to_string();
                        continue;
                    }
                };
                if beta_inverse(&an).ok().as_ref() != Some(&w) {
                    ok = false;
                    detail = format!("round trip fails on `{w}`");
                }
                image.insert(an);
            }
            match enumerate_animals(len + 1, lattice, Source::Point) {
                Ok(all) => {
                    let oracle: BTreeSet<Animal> = all.into_iter().collect();
                    if oracle != image {
                        ok = false;
                        detail = format!("image differs from grown animals at size {}", len + 1);
                    }
                }
                Err(e) => {
                    ok = false;
                    detail = e.to_string();
                }
            }
        }
        out.push(Check::new(format!("bijection {} prefixes up to length {max_len}", lattice.name()), ok, detail));
    }
    out
}

fn counts_series(degree: usize, lattice: Lattice) -> UnivariateSeries<BigRational> {
    UnivariateSeries::from_fn(degree, |n| {
        let c = if n == 0 { 0 } else { enumerate_animals(n, lattice, Source::Point).map_or(0, |v| v.len()) };
        BigRational::from_integer(BigInt::from(c))
    })
}

pub fn substitution(degree: usize) -> Vec<Check> {
    let square = counts_series(degree, Lattice::Square);
    let triangular = counts_series(degree, Lattice::Triangular);
    let (ok, detail) = equal_or_diff(&square.substitute(Substitution::Geometric), &triangular);
    let mut out = vec![Check::new(format!("square animals under t/(1-t) give triangular, degree {degree}"), ok, detail)];
    for (name, g) in suite_graphs() {
        let d = degree.min(6);
        let all = Exact::heaps(&g, d, false).project();
        let strict = Exact::strict_heaps(&g, d, false).project();
        let (ok, detail) = equal_or_diff(&strict.substitute(Substitution::Geometric), &all);
        out.push(Check::new(format!("strict heaps under t/(1-t) give all heaps on {name}, degree {d}"), ok, detail));
    }
    out
}

pub fn gas(degree: usize) -> Vec<Check> {
    suite_graphs()
        .into_iter()
        .map(|(name, g)| {
            let direct = mean_particles_direct::<BigRational>(&g, degree);
            let pyramids = mean_particles_pyramids::<BigRational>(&g, degree);
            let (ok, detail) = equal_or_diff(&direct, &pyramids);
            Check::new(format!("mean particles two ways on {name}, degree {degree}"), ok, detail)
        })
        .collect()
}

/// `(1 - (1 + 4t)^(-1/2)) / 2` expanded with the generalized binomial series.
pub fn density_taylor(degree: usize) -> UnivariateSeries<BigRational> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut binom = BigRational::one();
    let mut coeffs = vec![BigRational::zero()];
    for n in 1..=degree {
        // binom(-1/2, n) = binom(-1/2, n - 1) * (-1/2 - (n - 1)) / n
        binom = binom * (-half.clone() - BigRational::from_integer(BigInt::from(n - 1)))
            / BigRational::from_integer(BigInt::from(n));
        let four_n = BigRational::from_integer(BigInt::from(4).pow(n as u32));
        coeffs.push(-half.clone() * binom.clone() * four_n);
    }
    UnivariateSeries::new(coeffs).expect("non-empty")
}

pub fn density(degree: usize) -> Vec<Check> {
    let (ok, detail) = equal_or_diff(&linear_density(degree), &density_taylor(degree));
    let at_one = evaluate_density(1.0f64).unwrap_or(f64::NAN);
    let expected = (1.0 - 1.0 / 5f64.sqrt()) / 2.0;
    vec![
        Check::new(format!("density series matches its closed form, degree {degree}"), ok, detail),
        Check::new("density at t = 1", (at_one - expected).abs() < 1e-12, format!("{at_one:.15}")),
    ]
}

/// Chi-square statistic of `samples` draws against the uniform law on
/// `classes`, with the 0.99 quantile of the matching distribution.
pub fn chi_square_uniform(
    classes: &[Animal],
    samples: usize,
    mut draw: impl FnMut() -> Result<Animal>,
) -> Result<(f64, f64)> {
    let index: BTreeMap<&Animal, usize> = classes.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mut counts = vec![0u64; classes.len()];
    for _ in 0..samples {
        let an = draw()?;
        let i = *index.get(&an).ok_or_else(|| Error::MalformedAnimal(format!("sampled {an} is not in the class")))?;
        counts[i] += 1;
    }
    let expected = samples as f64 / classes.len() as f64;
    let stat = counts.iter().map(|&o| (o as f64 - expected).powi(2) / expected).sum();
    let dist = ChiSquared::new((classes.len() - 1) as f64).map_err(|e| Error::Domain(e.to_string()))?;
    Ok((stat, dist.inverse_cdf(0.99)))
}

pub fn uniformity(seed: u64, samples: usize) -> Vec<Check> {
    let cases = [(Lattice::Square, Source::Point, 6), (Lattice::Triangular, Source::Point, 5), (Lattice::Square, Source::Compact, 5)];
    cases
        .into_iter()
        .enumerate()
        .map(|(i, (lattice, source, n))| {
            let name = format!("uniform {} {} size {n}", lattice.name(), source.name());
            let classes = match enumerate_animals(n, lattice, source) {
                Ok(c) => c,
                Err(e) => return Check::new(name, false, e.to_string()),
            };
            let mut rng = RandomSource::child(seed, i as u64);
            match chi_square_uniform(&classes, samples, || random_animal(n, lattice, source, &mut rng).map(|(a, _)| a)) {
                Ok((stat, critical)) => Check::new(
                    name,
                    stat < critical,
                    format!("chi2 = {stat:.2} < {critical:.2} over {} classes", classes.len()),
                ),
                Err(e) => Check::new(name, false, e.to_string()),
            }
        })
        .collect()
}

pub fn sampler_cost(seed: u64, n: usize, runs: usize) -> Vec<Check> {
    let mut rng = RandomSource::new(seed);
    let total: u64 = (0..runs).map(|_| random_motzkin_prefix(n, 1, &mut rng).draws).sum();
    let ratio = total as f64 / (runs as f64 * n as f64);
    vec![Check::new(
        format!("mean draws per letter at n = {n} over {runs} runs"),
        (1.8..=2.2).contains(&ratio),
        format!("{ratio:.4}"),
    )]
}

fn time_animal(seed: u64, n: usize) -> Result<(Duration, usize)> {
    let start = Instant::now();
    let mut rng = RandomSource::new(seed);
    let (an, _) = random_animal(n, Lattice::Square, Source::Point, &mut rng)?;
    let json = an.to_json();
    Ok((start.elapsed(), json.len()))
}

pub fn scale(seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for (n, limit) in [(5_000usize, Duration::from_millis(100)), (1_000_000, Duration::from_secs(5))] {
        let name = format!("point-source animal of size {n} generated and serialized");
        out.push(match time_animal(seed, n) {
            Ok((elapsed, _)) => Check::new(name, elapsed < limit, format!("{:.3} s (limit {:.3} s)", elapsed.as_secs_f64(), limit.as_secs_f64())),
            Err(e) => Check::new(name, false, e.to_string()),
        });
    }
    out
}

pub fn colored_heap() -> Vec<Check> {
    let (g, coloring) = linear_window(6);
    let run = || -> Result<(bool, String)> {
        let read = g.parse_word("0102302302401")?;
        let word = g.parse_word("0102030203241")?;
        let same = equivalent(&Arc::new(g.clone()), &read, &word)?;
        let layered = colored_layers(&g, &coloring, &word)?;
        let back = g.format_word(&layered.reading());
        Ok((same && back == "0102302302401", back))
    };
    vec![match run() {
        Ok((ok, back)) => Check::new("colored layering of 0102030203241 reads 0102302302401", ok, back),
        Err(e) => Check::new("colored layering of 0102030203241 reads 0102302302401", false, e.to_string()),
    }]
}

/// All compact animals of size `n` from all words, for the compact bijection.
pub fn compact_image(n: usize, lattice: Lattice) -> Result<BTreeSet<Animal>> {
    StepWord::all_words(n - 1, lattice.colors()).iter().map(|w| compact_animal(w, lattice)).collect()
}
