//! Hall bases of free Lie algebras and free nilpotent quotients.
//!
//! A free Lie algebra on `n` generators has a linear basis of iterated
//! brackets (Hall trees). We fix one concrete Hall family and order:
//!
//! * trees are ordered by degree, then by construction sequence within a
//!   degree (which is the order of [`HallBasis::trees`]);
//! * a bracket `(u, v)` is admissible exactly when `u < v` and, if
//!   `v = (a, b)` is itself a bracket, `a <= u`.
//!
//! Generators are admissible by definition. Degree-`d` counts under this
//! (or any) Hall convention match Witt's formula `l_n(d)`, which the tests
//! use as the counting oracle.
//!
//! [`Collector::bracket`] rewrites an arbitrary bracket of two basis trees
//! into the basis: antisymmetry orients the pair, and a non-admissible
//! `[u, [a, b]]` is expanded through the derivation rule
//! `[u, [a, b]] = [[u, a], b] + [a, [u, b]]`, whose right-hand sides are
//! strictly closer to admissible form. Truncation above `maxdeg` makes the
//! result the structure of the quotient by the corresponding term of the
//! lower central series, so [`free_nilpotent`] falls out directly.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::lie::LieAlgebra;
use crate::linalg::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HallShape {
    /// Generator, by index `0..n`.
    Leaf(usize),
    /// Bracket of two earlier basis trees, by their basis indices.
    Node { left: usize, right: usize },
}

/// One basis tree. `index` is its position in the global basis order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HallTree {
    pub index: usize,
    pub degree: usize,
    pub shape: HallShape,
}

/// The Hall basis of the free Lie algebra on `n` generators, truncated to
/// trees of degree at most `maxdeg`.
#[derive(Debug, Clone)]
pub struct HallBasis {
    n: usize,
    maxdeg: usize,
    trees: Vec<HallTree>,
    node_index: HashMap<(usize, usize), usize>,
}

impl HallBasis {
    /// Panics when `n == 0` or `maxdeg == 0`.
    pub fn new(n: usize, maxdeg: usize) -> Self {
        assert!(n >= 1, "need at least one generator");
        assert!(maxdeg >= 1, "need degree at least one");
        let mut basis = HallBasis {
            n,
            maxdeg,
            trees: Vec::new(),
            node_index: HashMap::new(),
        };
        for g in 0..n {
            basis.trees.push(HallTree {
                index: g,
                degree: 1,
                shape: HallShape::Leaf(g),
            });
        }
        for deg in 2..=maxdeg {
            // Scan pairs in lexicographic index order so the construction
            // sequence, and with it every downstream golden value, is fixed.
            let len = basis.trees.len();
            for u in 0..len {
                if basis.trees[u].degree >= deg {
                    continue;
                }
                for v in (u + 1)..len {
                    if basis.trees[u].degree + basis.trees[v].degree != deg {
                        continue;
                    }
                    if basis.is_admissible(u, v) {
                        let index = basis.trees.len();
                        basis.trees.push(HallTree {
                            index,
                            degree: deg,
                            shape: HallShape::Node { left: u, right: v },
                        });
                        basis.node_index.insert((u, v), index);
                    }
                }
            }
        }
        basis
    }

    fn is_admissible(&self, u: usize, v: usize) -> bool {
        u < v
            && match self.trees[v].shape {
                HallShape::Leaf(_) => true,
                HallShape::Node { left, .. } => left <= u,
            }
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn trees(&self) -> &[HallTree] {
        &self.trees
    }

    pub fn degree(&self, idx: usize) -> usize {
        self.trees[idx].degree
    }

    /// Number of basis trees in each degree `1..=maxdeg`.
    pub fn degree_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.maxdeg];
        for t in &self.trees {
            counts[t.degree - 1] += 1;
        }
        counts
    }

    /// Printable form, e.g. `[x1,[x1,x2]]`. Contains no whitespace, so the
    /// labels survive the catalog file format.
    pub fn label(&self, idx: usize) -> String {
        match self.trees[idx].shape {
            HallShape::Leaf(g) => format!("x{}", g + 1),
            HallShape::Node { left, right } => {
                format!("[{},{}]", self.label(left), self.label(right))
            }
        }
    }

    /// Fresh collection context over this basis.
    pub fn collector(&self) -> Collector<'_> {
        Collector {
            basis: self,
            memo: HashMap::new(),
        }
    }

    /// One-off bracket; for bulk work create a [`Collector`] and reuse it.
    pub fn bracket(&self, u: usize, v: usize) -> LieElement {
        self.collector().bracket(u, v)
    }
}

/// Element of the free nilpotent algebra: basis index -> coefficient,
/// with no zero coefficients stored. Collection only ever produces integer
/// coefficients; they are kept as `Rational` for a uniform scalar type.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElement {
    terms: BTreeMap<usize, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement::default()
    }

    pub fn single(idx: usize, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(idx, coeff);
        }
        LieElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(i, c)| (*i, c))
    }

    pub fn coeff(&self, idx: usize) -> Rational {
        self.terms.get(&idx).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_scaled(&mut self, other: &LieElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (idx, v) in &other.terms {
            let entry = self.terms.entry(*idx).or_insert_with(Rational::zero);
            *entry += v * c;
            if entry.is_zero() {
                self.terms.remove(idx);
            }
        }
    }

    pub fn negated(&self) -> Self {
        LieElement {
            terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }
}

/// Rewrites brackets of basis trees into the Hall basis, memoizing on the
/// ordered index pair. Confined to one computation; results are identical
/// regardless of call order.
pub struct Collector<'a> {
    basis: &'a HallBasis,
    memo: HashMap<(usize, usize), LieElement>,
}

impl Collector<'_> {
    /// Expansion of `[u, v]` in the Hall basis, truncated to zero when the
    /// combined degree exceeds the basis degree cap.
    ///
    /// Panics when either index is outside the basis.
    pub fn bracket(&mut self, u: usize, v: usize) -> LieElement {
        let len = self.basis.len();
        assert!(u < len && v < len, "tree index outside basis");
        if u == v {
            return LieElement::zero();
        }
        if u > v {
            return self.bracket(v, u).negated();
        }
        if self.basis.degree(u) + self.basis.degree(v) > self.basis.maxdeg {
            return LieElement::zero();
        }
        if let Some(hit) = self.memo.get(&(u, v)) {
            return hit.clone();
        }
        let result = if self.basis.is_admissible(u, v) {
            LieElement::single(self.basis.node_index[&(u, v)], Rational::one())
        } else {
            // u < v and v = (a, b) with a > u; apply the derivation rule
            // [u,[a,b]] = [[u,a],b] + [a,[u,b]].
            let HallShape::Node { left: a, right: b } = self.basis.trees[v].shape else {
                unreachable!("non-admissible pair with u < v has a bracket on the right");
            };
            let ua = self.bracket(u, a);
            let ub = self.bracket(u, b);
            let mut result = self.bracket_elem_tree(&ua, b);
            let t2 = self.bracket_tree_elem(a, &ub);
            result.add_scaled(&t2, &Rational::one());
            result
        };
        self.memo.insert((u, v), result.clone());
        result
    }

    fn bracket_elem_tree(&mut self, elem: &LieElement, t: usize) -> LieElement {
        let mut out = LieElement::zero();
        for (idx, c) in elem.terms() {
            let part = self.bracket(idx, t);
            out.add_scaled(&part, c);
        }
        out
    }

    fn bracket_tree_elem(&mut self, t: usize, elem: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (idx, c) in elem.terms() {
            let part = self.bracket(t, idx);
            out.add_scaled(&part, c);
        }
        out
    }
}

/// The free nilpotent Lie algebra of class `c` on `n` generators, i.e. the
/// quotient of the free Lie algebra by the `(c+1)`-st term of its lower
/// central series, presented by structure constants on the Hall basis.
///
/// Basis labels are the printed Hall trees; structure constants are the
/// collected brackets and are always integers (asserted). Panics when
/// `n == 0` or `c == 0`.
pub fn free_nilpotent(n: u64, c: u64) -> LieAlgebra {
    let basis = HallBasis::new(n as usize, c as usize);
    let dim = basis.len();
    let mut collector = basis.collector();
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            if basis.degree(i) + basis.degree(j) > basis.maxdeg() {
                continue;
            }
            for (k, coeff) in collector.bracket(i, j).terms() {
                assert!(
                    coeff.is_integer(),
                    "collection produced a non-integer structure constant"
                );
                entries.push((i, j, k, coeff.clone()));
            }
        }
    }
    let labels = (0..dim).map(|i| basis.label(i)).collect();
    LieAlgebra::new(dim, Some(labels), entries)
        .expect("collected structure constants are well-formed")
}
