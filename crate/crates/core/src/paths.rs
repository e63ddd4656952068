//! Words over `a` (up), `b` (down) and the colored level steps `c`, `d`,
//! read as lattice paths. Uppercase `A` and `B` mark celibate steps: an up
//! step never matched by a later return to its level, or a down step that
//! reaches a level lower than any before it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
    /// Level step of color 1, written `c`.
    Level1,
    /// Level step of color 2, written `d`.
    Level2,
    /// Celibate up step, written `A`.
    CelibateUp,
    /// Celibate down step, written `B`.
    CelibateDown,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Up => 'a',
            Step::Down => 'b',
            Step::Level1 => 'c',
            Step::Level2 => 'd',
            Step::CelibateUp => 'A',
            Step::CelibateDown => 'B',
        }
    }

    pub fn from_letter(ch: char) -> Option<Self> {
        Some(match ch {
            'a' => Step::Up,
            'b' => Step::Down,
            'c' => Step::Level1,
            'd' => Step::Level2,
            'A' => Step::CelibateUp,
            'B' => Step::CelibateDown,
            _ => return None,
        })
    }

    /// Letter drawn uniformly among `r + 2`: index 0 is `a`, 1 is `b`, then
    /// the level colors.
    pub fn from_index(i: usize) -> Self {
        [Step::Up, Step::Down, Step::Level1, Step::Level2][i]
    }

    pub fn delta(self) -> i64 {
        match self {
            Step::Up | Step::CelibateUp => 1,
            Step::Down | Step::CelibateDown => -1,
            Step::Level1 | Step::Level2 => 0,
        }
    }

    /// Same step without its celibate mark.
    pub fn unmarked(self) -> Self {
        match self {
            Step::CelibateUp => Step::Up,
            Step::CelibateDown => Step::Down,
            s => s,
        }
    }

    pub fn is_marked(self) -> bool {
        matches!(self, Step::CelibateUp | Step::CelibateDown)
    }

    /// Color of a level step, 0 otherwise.
    pub fn color(self) -> usize {
        match self {
            Step::Level1 => 1,
            Step::Level2 => 2,
            _ => 0,
        }
    }
}

/// A word over `r + 2` letters (`r` level colors, at most 2).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepWord {
    colors: usize,
    steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    /// Never below the axis and ends on it.
    MotzkinWord,
    /// Never below the axis.
    MotzkinPrefix,
    General,
}

/// `W = U_0 B U_1 ... B U_k A U_(k+1) ... A U_(k+l)` with every `U_i` a
/// Motzkin word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalanFactorization {
    pub factors: Vec<StepWord>,
    /// Number of celibate down steps.
    pub descents: usize,
    /// Number of celibate up steps.
    pub ascents: usize,
}

impl CatalanFactorization {
    pub fn concat(&self) -> StepWord {
        let colors = self.factors[0].colors;
        let mut steps = Vec::new();
        for (i, f) in self.factors.iter().enumerate() {
            if i > 0 {
                steps.push(if i <= self.descents { Step::CelibateDown } else { Step::CelibateUp });
            }
            steps.extend_from_slice(&f.steps);
        }
        StepWord { colors, steps }
    }
}

impl StepWord {
    pub fn new(colors: usize, steps: Vec<Step>) -> Result<Self> {
        if colors > 2 {
            return Err(Error::MalformedWord(format!("{colors} level colors, at most 2 supported")));
        }
        if let Some(s) = steps.iter().find(|s| s.color() > colors) {
            return Err(Error::MalformedWord(format!("letter `{}` needs {} colors", s.letter(), s.color())));
        }
        Ok(Self { colors, steps })
    }

    pub fn empty(colors: usize) -> Self {
        Self { colors, steps: Vec::new() }
    }

    /// Parses letters from `a b c d A B`, ignoring whitespace.
    pub fn parse(text: &str, colors: usize) -> Result<Self> {
        let steps = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Step::from_letter(c).ok_or_else(|| Error::MalformedWord(format!("unknown letter `{c}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(colors, steps)
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn height(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    pub fn classify(&self) -> (PathKind, i64) {
        let mut h = 0i64;
        let mut low = 0i64;
        for s in &self.steps {
            h += s.delta();
            low = low.min(h);
        }
        let kind = if low < 0 {
            PathKind::General
        } else if h == 0 {
            PathKind::MotzkinWord
        } else {
            PathKind::MotzkinPrefix
        };
        (kind, h)
    }

    pub fn is_motzkin_word(&self) -> bool {
        self.classify().0 == PathKind::MotzkinWord
    }

    pub fn is_motzkin_prefix(&self) -> bool {
        self.classify().0 != PathKind::General
    }

    pub fn unmark(&self) -> Self {
        Self { colors: self.colors, steps: self.steps.iter().map(|s| s.unmarked()).collect() }
    }

    /// Marks the celibate down steps by a left-to-right scan, then the
    /// celibate up steps by a right-to-left scan.
    pub fn mark_celibates(&self) -> Self {
        let mut w = self.unmark();
        w.mark_descents();
        w.mark_ascents();
        w
    }

    /// Right-to-left scan: an `a` is celibate when it brings the running
    /// count of `b` minus `a` to a new minimum.
    pub fn mark_ascents(&mut self) {
        let (mut h, mut low) = (0i64, 0i64);
        for s in self.steps.iter_mut().rev() {
            match *s {
                Step::Down => h += 1,
                Step::Up => {
                    h -= 1;
                    if h < low {
                        low = h;
                        *s = Step::CelibateUp;
                    }
                }
                _ => {}
            }
        }
    }

    /// Left-to-right scan: a `b` is celibate when it reaches a new minimum.
    pub fn mark_descents(&mut self) {
        let (mut h, mut low) = (0i64, 0i64);
        for s in self.steps.iter_mut() {
            match *s {
                Step::Up => h += 1,
                Step::Down => {
                    h -= 1;
                    if h < low {
                        low = h;
                        *s = Step::CelibateDown;
                    }
                }
                _ => {}
            }
        }
    }

    /// Splits at the celibate steps.
    pub fn catalan_factorize(&self) -> CatalanFactorization {
        let marked = self.mark_celibates();
        let mut factors = vec![StepWord::empty(self.colors)];
        let (mut descents, mut ascents) = (0, 0);
        for &s in &marked.steps {
            match s {
                Step::CelibateDown => {
                    descents += 1;
                    factors.push(StepWord::empty(self.colors));
                }
                Step::CelibateUp => {
                    ascents += 1;
                    factors.push(StepWord::empty(self.colors));
                }
                s => factors.last_mut().expect("at least one factor").steps.push(s),
            }
        }
        CatalanFactorization { factors, descents, ascents }
    }

    /// Every word of length `n` over `colors + 2` letters, in lexicographic
    /// order of letter indices.
    pub fn all_words(n: usize, colors: usize) -> Vec<StepWord> {
        let k = colors + 2;
        let mut out = vec![StepWord::empty(colors)];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..k).map(move |i| {
                        let mut steps = w.steps.clone();
                        steps.push(Step::from_index(i));
                        StepWord { colors, steps }
                    })
                })
                .collect();
        }
        out
    }

    /// Every Motzkin prefix of length `n`.
    pub fn all_prefixes(n: usize, colors: usize) -> Vec<StepWord> {
        let mut out = vec![(StepWord::empty(colors), 0i64)];
        for _ in 0..n {
            let mut next = Vec::new();
            for (w, h) in out {
                for i in 0..colors + 2 {
                    let s = Step::from_index(i);
                    if h + s.delta() >= 0 {
                        let mut steps = w.steps.clone();
                        steps.push(s);
                        next.push((StepWord { colors, steps }, h + s.delta()));
                    }
                }
            }
            out = next;
        }
        out.into_iter().map(|(w, _)| w).collect()
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for StepWord {
    type Err = Error;

    /// Parses with the fewest colors the letters need.
    fn from_str(s: &str) -> Result<Self> {
        let colors = if s.contains('d') {
            2
        } else if s.contains('c') {
            1
        } else {
            0
        };
        Self::parse(s, colors)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathCount {
    Words,
    Prefixes,
}

/// Number of Motzkin words or prefixes of length `n` with `colors` level
/// colors, by dynamic programming over heights.
pub fn count_paths(n: usize, colors: usize, kind: PathCount) -> BigUint {
    let mut row = vec![BigUint::zero(); n + 2];
    row[0] = BigUint::one();
    let flat = BigUint::from(colors);
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); n + 2];
        for h in 0..=n {
            if row[h].is_zero() {
                continue;
            }
            next[h + 1] += &row[h];
            if h > 0 {
                next[h - 1] += &row[h];
            }
            next[h] += &row[h] * &flat;
        }
        row = next;
    }
    match kind {
        PathCount::Words => row[0].clone(),
        PathCount::Prefixes => row.iter().sum(),
    }
}

/// Distribution of final heights over Motzkin prefixes of length `n`:
/// entry `h` counts prefixes ending at height `h`.
pub fn prefix_height_distribution(n: usize, colors: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::zero(); n + 2];
    row[0] = BigUint::one();
    let flat = BigUint::from(colors);
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); n + 2];
        for h in 0..=n {
            next[h + 1] += &row[h];
            if h > 0 {
                next[h - 1] += &row[h];
            }
            next[h] += &row[h] * &flat;
        }
        row = next;
    }
    row.truncate(n + 1);
    row
}

/// Bicolored Motzkin word of length `n` to a Dyck word of length `2n + 2`:
/// `ε -> ab`, `cU -> ab U'`, `dU -> a U' b`, `aUbV -> a U' b V'`.
pub fn bicolored_to_dyck(word: &StepWord) -> Result<StepWord> {
    let steps: Vec<Step> = word.steps.iter().map(|s| s.unmarked()).collect();
    if word.colors != 2 || !word.is_motzkin_word() {
        return Err(Error::MalformedWord(format!("`{word}` is not a bicolored Motzkin word")));
    }
    let mut out = Vec::with_capacity(2 * steps.len() + 2);
    dyck_image(&steps, &mut out);
    Ok(StepWord { colors: 0, steps: out })
}

fn dyck_image(steps: &[Step], out: &mut Vec<Step>) {
    // Recursion depth is bounded by the word length; these words stay short.
    match steps.first() {
        None => out.extend([Step::Up, Step::Down]),
        Some(Step::Level1) => {
            out.extend([Step::Up, Step::Down]);
            dyck_image(&steps[1..], out);
        }
        Some(Step::Level2) => {
            out.push(Step::Up);
            dyck_image(&steps[1..], out);
            out.push(Step::Down);
        }
        Some(_) => {
            let close = matching_down(steps);
            out.push(Step::Up);
            dyck_image(&steps[1..close], out);
            out.push(Step::Down);
            dyck_image(&steps[close + 1..], out);
        }
    }
}

/// Index of the down step matching the up step at index 0.
fn matching_down(steps: &[Step]) -> usize {
    let mut h = 0i64;
    for (i, s) in steps.iter().enumerate() {
        h += s.delta();
        if h == 0 {
            return i;
        }
    }
    unreachable!("Motzkin words close every up step")
}

/// Bicolored Motzkin prefix `U_0 A U_1 ... A U_l` of length `n` to the Dyck
/// prefix `U_0'' a U_1'' ... a U_l''` of length `2n + 1`, where `U''` is the
/// Dyck image of `U` without its final `b`.
pub fn bicolored_prefix_to_dyck_prefix(word: &StepWord) -> Result<StepWord> {
    if word.colors != 2 || !word.is_motzkin_prefix() {
        return Err(Error::MalformedWord(format!("`{word}` is not a bicolored Motzkin prefix")));
    }
    let fact = word.catalan_factorize();
    let mut out = Vec::with_capacity(2 * word.len() + 1);
    for (i, f) in fact.factors.iter().enumerate() {
        if i > 0 {
            out.push(Step::Up);
        }
        let image = bicolored_to_dyck(f)?;
        out.extend_from_slice(&image.steps[..image.len() - 1]);
    }
    Ok(StepWord { colors: 0, steps: out })
}
