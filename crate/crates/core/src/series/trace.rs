use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::Arc;

use super::UnivariateSeries;
use crate::error::{Error, Result};
use crate::graph::CommutationGraph;
use crate::heap::{enumerate_heaps, BaseFilter, Heap, HeapClass};
use crate::scalar::Scalar;

/// Formal series over the trace monoid of a graph, truncated after heaps of
/// size `degree`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceSeries<S> {
    graph: Arc<CommutationGraph>,
    degree: usize,
    terms: BTreeMap<Heap, S>,
}

impl<S: Scalar> TraceSeries<S> {
    pub fn zero(graph: Arc<CommutationGraph>, degree: usize) -> Self {
        Self { graph, degree, terms: BTreeMap::new() }
    }

    /// The unit series: coefficient 1 on the empty heap.
    pub fn one(graph: Arc<CommutationGraph>, degree: usize) -> Self {
        let mut s = Self::zero(graph.clone(), degree);
        s.terms.insert(Heap::empty(graph), S::one());
        s
    }

    /// Builds a series from heap/coefficient pairs, summing repeats and
    /// dropping anything above `degree`.
    pub fn from_terms(
        graph: Arc<CommutationGraph>,
        degree: usize,
        terms: impl IntoIterator<Item = (Heap, S)>,
    ) -> Result<Self> {
        let mut s = Self::zero(graph, degree);
        for (h, c) in terms {
            if h.graph().as_ref() != s.graph.as_ref() {
                return Err(Error::GraphMismatch);
            }
            s.add_term(h, c);
        }
        Ok(s)
    }

    fn add_term(&mut self, heap: Heap, c: S) {
        if heap.size() > self.degree || c.is_zero() {
            return;
        }
        match self.terms.entry(heap) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `Σ C` over stable sets `C` of size at most `degree`, each seen as a
    /// one-layer heap; with `signed`, coefficient `(-1)^|C|`.
    pub fn configurations(graph: &Arc<CommutationGraph>, degree: usize, signed: bool) -> Self {
        let terms = graph.enumerate_configurations(degree).into_iter().map(|set| {
            let h = Heap::from_word(graph.clone(), &set).expect("configuration letters are valid");
            let c = sign_for::<S>(signed, h.size());
            (h, c)
        });
        Self::from_terms(graph.clone(), degree, terms).expect("single graph")
    }

    /// `Σ E` over all heaps of size at most `degree`; with `signed`,
    /// coefficient `(-1)^|E|`.
    pub fn heaps(graph: &Arc<CommutationGraph>, degree: usize, signed: bool) -> Self {
        Self::of_class(graph, degree, signed, HeapClass::ALL)
    }

    /// Same as [`TraceSeries::heaps`] restricted to strict heaps.
    pub fn strict_heaps(graph: &Arc<CommutationGraph>, degree: usize, signed: bool) -> Self {
        Self::of_class(graph, degree, signed, HeapClass::STRICT)
    }

    /// Pyramids of size at most `degree`, all of them or those whose base is
    /// `base`.
    pub fn pyramids(graph: &Arc<CommutationGraph>, degree: usize, signed: bool, base: Option<usize>) -> Self {
        let class = HeapClass {
            strict_only: false,
            base: base.map_or(BaseFilter::AnyPyramid, BaseFilter::Pyramid),
        };
        Self::of_class(graph, degree, signed, class)
    }

    /// Characteristic series of an arbitrary heap class.
    pub fn of_class(graph: &Arc<CommutationGraph>, degree: usize, signed: bool, class: HeapClass) -> Self {
        let terms = enumerate_heaps(graph, degree, class).into_iter().map(|h| {
            let c = sign_for::<S>(signed, h.size());
            (h, c)
        });
        Self::from_terms(graph.clone(), degree, terms).expect("single graph")
    }

    pub fn graph(&self) -> &Arc<CommutationGraph> {
        &self.graph
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Heap, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, heap: &Heap) -> S {
        self.terms.get(heap).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient of the heap of a word given with labels.
    pub fn coefficient_of(&self, word: &str) -> Result<S> {
        Ok(self.coefficient(&Heap::from_labels(self.graph.clone(), word)?))
    }

    pub fn constant_term(&self) -> S {
        self.coefficient(&Heap::empty(self.graph.clone()))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.graph.as_ref() != other.graph.as_ref() {
            return Err(Error::GraphMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::TruncationMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (h, c) in &other.terms {
            out.add_term(h.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|_, c| -c.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map_coefficients(|_, c| c.clone() * k.clone())
    }

    fn map_coefficients(&self, f: impl Fn(&Heap, &S) -> S) -> Self {
        let terms = self.terms.iter().map(|(h, c)| (h.clone(), f(h, c)));
        Self::from_terms(self.graph.clone(), self.degree, terms).expect("single graph")
    }

    /// Truncated product: `Σ s1(E1) s2(E2) E1·E2` over pairs with
    /// `|E1| + |E2| <= degree`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut acc: BTreeMap<Heap, S> = BTreeMap::new();
        for (h1, c1) in &self.terms {
            let room = self.degree - h1.size();
            // Keys are ordered by size first, so stop at the first too-big one.
            for (h2, c2) in other.terms.iter().take_while(|(h, _)| h.size() <= room) {
                let prod = h1.product(h2)?;
                let slot = acc.entry(prod).or_insert_with(S::zero);
                *slot = slot.clone() + c1.clone() * c2.clone();
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { graph: self.graph.clone(), degree: self.degree, terms: acc })
    }

    /// Two-sided inverse up to the truncation degree. Writing
    /// `s = c (1 - T)` with `c = ±1`, the inverse is `c Σ T^k`.
    pub fn invert(&self) -> Result<Self> {
        let c = self.constant_term();
        if !c.is_unit_sign() {
            return Err(Error::NotInvertible);
        }
        let one = Self::one(self.graph.clone(), self.degree);
        // With c = ±1, dividing by c is multiplying by c.
        let tail = one.sub(&self.scale(&c))?;
        let mut acc = one.clone();
        for _ in 0..self.degree {
            acc = one.add(&tail.mul(&acc)?)?;
        }
        Ok(acc.scale(&c))
    }

    /// Multiplies each coefficient by the size of its heap.
    pub fn derive(&self) -> Self {
        self.map_coefficients(|h, c| c.clone() * S::from_count(h.size()))
    }

    /// Replaces every letter by one variable `t`.
    pub fn project(&self) -> UnivariateSeries<S> {
        let mut coeffs = vec![S::zero(); self.degree + 1];
        for (h, c) in &self.terms {
            coeffs[h.size()] = coeffs[h.size()].clone() + c.clone();
        }
        UnivariateSeries::new(coeffs).expect("degree + 1 coefficients")
    }

    /// One `coefficient<TAB>word` line per term, in key order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (h, c) in &self.terms {
            out.push_str(&format!("{c}\t{}\n", h.to_label_word()));
        }
        out
    }
}

fn sign_for<S: Scalar>(signed: bool, size: usize) -> S {
    if signed && size % 2 == 1 {
        -S::one()
    } else {
        S::one()
    }
}
