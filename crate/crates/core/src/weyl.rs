//! Weyl-group elements as integer matrices on simple-root coordinates.
//!
//! Column `i` of an element's matrix is the image of `α_i`. Products read
//! right to left: in `s_a s_b` the reflection `s_b` acts first.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::rootsys::{Root, RootSystem};

/// Default cap on distinct elements memoized by [`RootSystem::count_reduced_words`].
pub const DEFAULT_STATE_BOUND: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement(IntMatrix);

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self(IntMatrix::identity(rank))
    }

    pub fn from_matrix(m: IntMatrix) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.dim()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// `self · other`; `other` acts first.
    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(Self(&self.0 * &other.0))
    }

    pub fn apply(&self, r: &Root) -> Root {
        Root::new(self.0.mul_vec(r.coeffs()))
    }

    /// Image of `α_i` (1-based).
    pub fn image_of_simple(&self, i: usize) -> Root {
        Root::new(self.0.column(i - 1))
    }

    pub fn negated(&self) -> Self {
        Self(-&self.0)
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({:?})", self.0)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Sequence of simple-reflection indices, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        Self(letters.into())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LongestKind {
    MinusIdentity,
    MinusAutomorphism,
}

/// `w₀ = −P_ε` for a diagram automorphism `ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestClassification {
    pub kind: LongestKind,
    /// `automorphism[i - 1] = ε(i)`; the identity for `MinusIdentity`.
    pub automorphism: Vec<usize>,
}

impl LongestClassification {
    /// Non-trivial orbits of `ε`, each listed from its smallest index.
    pub fn cycles(&self) -> Vec<(usize, usize)> {
        self.automorphism
            .iter()
            .enumerate()
            .map(|(i, &e)| (i + 1, e))
            .filter(|&(i, e)| i < e)
            .collect()
    }
}

impl RootSystem {
    /// `x ↦ x − ⟨x, a∨⟩ a`.
    pub fn reflect(&self, x: &Root, a: &Root) -> Result<Root> {
        let c = self.cartan_integer(x, a)?;
        Ok(x - &(c * a))
    }

    pub fn reflection_of(&self, a: &Root) -> Result<WeylElement> {
        self.require_root(a)?;
        let cols = (1..=self.rank())
            .map(|i| self.reflect(&self.simple_root(i), a).map(Root::into_coeffs))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeylElement(IntMatrix::from_columns(&cols)))
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        if !(1..=self.rank()).contains(&i) {
            return Err(Error::BadLetter {
                letter: i,
                rank: self.rank(),
            });
        }
        self.reflection_of(&self.simple_root(i))
    }

    /// Product of reflections in the listed roots, in list order.
    pub fn reflection_product(&self, roots: &[Root]) -> Result<WeylElement> {
        let mut w = self.identity();
        for r in roots {
            w = w.compose(&self.reflection_of(r)?)?;
        }
        Ok(w)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    pub fn evaluate_word(&self, w: &Word) -> Result<WeylElement> {
        let mut m = self.identity();
        for &i in w.letters() {
            m = m.compose(&self.simple_reflection(i)?)?;
        }
        Ok(m)
    }

    /// Number of positive roots sent negative.
    pub fn length_of(&self, w: &WeylElement) -> usize {
        self.positive_roots()
            .iter()
            .filter(|r| w.apply(r).is_negative())
            .count()
    }

    /// Indices `i` with `l(w s_i) < l(w)`, ascending.
    pub fn right_descents(&self, w: &WeylElement) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&i| w.image_of_simple(i).is_negative())
            .collect()
    }

    /// Whether `w` preserves the form and maps roots to roots.
    pub fn is_weyl_element(&self, w: &WeylElement) -> bool {
        let m = w.matrix();
        if m.dim() != self.rank() {
            return false;
        }
        let form = &(&m.transpose() * self.gram2()) * m;
        if &form != self.gram2() {
            return false;
        }
        self.positive_roots()
            .iter()
            .all(|r| self.is_root(&w.apply(r)))
    }

    /// Greedy ascent: while some `w(α_i)` is positive take the smallest such
    /// `i` and replace `w` by `w s_i`.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        let simples: Vec<WeylElement> = (1..=self.rank())
            .map(|i| self.simple_reflection(i).expect("index in range"))
            .collect();
        while let Some(i) = (1..=self.rank()).find(|&i| w.image_of_simple(i).is_positive()) {
            w = w.compose(&simples[i - 1]).expect("same rank");
        }
        w
    }

    pub fn classify_longest(&self) -> LongestClassification {
        let w0 = self.longest_element();
        let n = self.rank();
        let p = w0.negated();
        let mut automorphism = Vec::with_capacity(n);
        for i in 1..=n {
            let col = p.image_of_simple(i);
            let j = col.simple_index().expect("−w₀ permutes the simple roots");
            automorphism.push(j);
        }
        let cartan = self.cartan_matrix();
        debug_assert!((0..n).all(|i| (0..n)
            .all(|j| { cartan[(i, j)] == cartan[(automorphism[i] - 1, automorphism[j] - 1)] })));
        let kind = if automorphism.iter().enumerate().all(|(i, &e)| e == i + 1) {
            LongestKind::MinusIdentity
        } else {
            LongestKind::MinusAutomorphism
        };
        LongestClassification { kind, automorphism }
    }

    /// Reduced word by peeling off the smallest right descent.
    pub fn reduced_word_of(&self, w: &WeylElement) -> Word {
        let mut w = w.clone();
        let mut letters = Vec::new();
        while let Some(&i) = self.right_descents(&w).first() {
            w = w
                .compose(&self.simple_reflection(i).expect("index in range"))
                .expect("same rank");
            letters.push(i);
        }
        letters.reverse();
        Word(letters)
    }

    pub fn count_reduced_words(&self, w: &WeylElement) -> Result<BigUint> {
        self.count_reduced_words_bounded(w, DEFAULT_STATE_BOUND)
    }

    /// Counts reduced words of `w`, memoizing at most `bound` elements.
    pub fn count_reduced_words_bounded(&self, w: &WeylElement, bound: usize) -> Result<BigUint> {
        let simples: Vec<WeylElement> = (1..=self.rank())
            .map(|i| self.simple_reflection(i).expect("index in range"))
            .collect();
        let mut memo: HashMap<WeylElement, BigUint> = HashMap::new();
        count_rec(self, w, &simples, &mut memo, bound)
    }
}

fn count_rec(
    rs: &RootSystem,
    w: &WeylElement,
    simples: &[WeylElement],
    memo: &mut HashMap<WeylElement, BigUint>,
    bound: usize,
) -> Result<BigUint> {
    if w.is_identity() {
        return Ok(BigUint::one());
    }
    if let Some(c) = memo.get(w) {
        return Ok(c.clone());
    }
    let mut total = BigUint::zero();
    for i in rs.right_descents(w) {
        let shorter = w.compose(&simples[i - 1])?;
        total += count_rec(rs, &shorter, simples, memo, bound)?;
    }
    if memo.len() >= bound {
        return Err(Error::TooLarge(format!(
            "more than {bound} elements below the target in weak order"
        )));
    }
    memo.insert(w.clone(), total.clone());
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystemType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse::<RootSystemType>().unwrap())
    }

    fn root(v: &[i64]) -> Root {
        Root::new(v.to_vec())
    }

    #[test]
    fn reflections() {
        let g2 = rs("G2");
        let s = g2.reflection_of(&root(&[1, 1])).unwrap();
        assert_eq!(s.apply(&root(&[0, 1])), root(&[-3, -2]));
        assert_eq!(s.apply(&root(&[1, 1])), root(&[-1, -1]));
        assert!(s.compose(&s).unwrap().is_identity());
        assert_eq!(s.matrix().determinant(), -1);

        let f4 = rs("F4");
        let s = f4.reflection_of(&root(&[0, 1, 2, 0])).unwrap();
        assert_eq!(s.apply(&f4.simple_root(3)), root(&[0, -1, -1, 0]));

        assert_eq!(
            f4.reflection_of(&root(&[1, 0, 0, 1])),
            Err(Error::NotARoot(vec![1, 0, 0, 1]))
        );
    }

    #[test]
    fn compose_and_words() {
        let a2 = rs("A2");
        let s1 = a2.simple_reflection(1).unwrap();
        assert!(s1.compose(&s1).unwrap().is_identity());
        let w = a2.evaluate_word(&Word::new([1, 2, 1])).unwrap();
        assert_eq!(w, a2.reflection_of(&root(&[1, 1])).unwrap());
        assert!(a2.evaluate_word(&Word::default()).unwrap().is_identity());
        assert_eq!(
            a2.evaluate_word(&Word::new([1, 3])),
            Err(Error::BadLetter { letter: 3, rank: 2 })
        );
        assert_eq!(
            s1.compose(&rs("A3").identity()),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );

        let g2 = rs("G2");
        assert_eq!(
            g2.evaluate_word(&Word::new([2, 1, 2])).unwrap(),
            g2.reflection_of(&root(&[1, 1])).unwrap()
        );
    }

    #[test]
    fn longest_small_cases() {
        let a1 = rs("A1");
        assert_eq!(a1.longest_element().matrix().as_slice(), &[-1]);
        let f4 = rs("F4");
        assert_eq!(f4.longest_element(), f4.identity().negated());
        assert_eq!(f4.length_of(&f4.longest_element()), 24);
        let g2 = rs("G2");
        assert_eq!(
            g2.longest_element(),
            g2.evaluate_word(&Word::new([2, 1, 2, 1, 2, 1])).unwrap()
        );
    }

    #[test]
    fn classification_examples() {
        let a3 = rs("A3").classify_longest();
        assert_eq!(a3.kind, LongestKind::MinusAutomorphism);
        assert_eq!(a3.automorphism, vec![3, 2, 1]);
        let e6 = rs("E6").classify_longest();
        assert_eq!(e6.cycles(), vec![(1, 6), (3, 5)]);
        assert_eq!(rs("E7").classify_longest().kind, LongestKind::MinusIdentity);
        assert_eq!(rs("D5").classify_longest().cycles(), vec![(4, 5)]);
        assert_eq!(rs("D4").classify_longest().kind, LongestKind::MinusIdentity);
        assert_eq!(rs("A1").classify_longest().kind, LongestKind::MinusIdentity);
    }

    #[test]
    fn lengths_and_reduced_words() {
        let b3 = rs("B3");
        assert_eq!(b3.length_of(&b3.identity()), 0);
        for i in 1..=3 {
            let s = b3.simple_reflection(i).unwrap();
            assert_eq!(b3.length_of(&s), 1);
            assert_eq!(b3.reduced_word_of(&s), Word::new([i]));
            assert_eq!(b3.count_reduced_words(&s).unwrap(), BigUint::one());
        }
        assert!(b3.reduced_word_of(&b3.identity()).is_empty());
        let g2 = rs("G2");
        let w0 = g2.longest_element();
        let word = g2.reduced_word_of(&w0);
        assert_eq!(word.len(), 6);
        assert_eq!(g2.evaluate_word(&word).unwrap(), w0);
    }

    #[test]
    fn reduced_word_counts() {
        let a2 = rs("A2");
        assert_eq!(
            a2.count_reduced_words(&a2.longest_element()).unwrap(),
            BigUint::from(2u32)
        );
        let a5 = rs("A5");
        assert_eq!(
            a5.count_reduced_words(&a5.longest_element()).unwrap(),
            BigUint::from(292_864u32)
        );
        assert!(matches!(
            a5.count_reduced_words_bounded(&a5.longest_element(), 100),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn full_descent_set_is_unique_in_a3_b3() {
        for name in ["A3", "B3"] {
            let r = rs(name);
            let w0 = r.longest_element();
            let mut seen = std::collections::HashSet::new();
            let mut stack = vec![r.identity()];
            seen.insert(r.identity());
            while let Some(w) = stack.pop() {
                if w != w0 {
                    assert!(r.right_descents(&w).len() < r.rank());
                }
                for i in 1..=r.rank() {
                    let v = w.compose(&r.simple_reflection(i).unwrap()).unwrap();
                    if seen.insert(v.clone()) {
                        stack.push(v);
                    }
                }
            }
            let order = if name == "A3" { 24 } else { 48 };
            assert_eq!(seen.len(), order);
        }
    }

    #[test]
    fn word_display() {
        assert_eq!(Word::new([2, 1]).to_string(), "s2 s1");
        assert_eq!(Word::default().to_string(), "e");
    }
}
