//! Factorizations of the longest element into reflections in mutually
//! orthogonal highest roots.
//!
//! A set `T` of positive roots is *max-orthogonal* when its roots are
//! pairwise orthogonal, every non-simple member is the highest root of the
//! standard parabolic subsystem on its own support, and the non-simple
//! members form a chain in the dominance order. Every finite Weyl group has
//! exactly one such set whose reflections multiply to `w₀`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{dominance_leq, Family, IndexSet, Root, RootSystem, RootSystemType};
use crate::weyl::{WeylElement, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    Simple,
    HighestOf(IndexSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecompositionFactor {
    pub root: Root,
    pub kind: FactorKind,
}

impl DecompositionFactor {
    /// Tags height-one roots as simple and anything else by its support.
    pub fn from_root(root: Root) -> Self {
        let kind = if root.is_simple() {
            FactorKind::Simple
        } else {
            FactorKind::HighestOf(root.support())
        };
        Self { root, kind }
    }

    pub fn is_simple(&self) -> bool {
        self.kind == FactorKind::Simple
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Decomposition {
    pub factors: Vec<DecompositionFactor>,
}

impl Decomposition {
    pub fn from_roots(roots: impl IntoIterator<Item = Root>) -> Self {
        Self {
            factors: roots
                .into_iter()
                .map(DecompositionFactor::from_root)
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn roots(&self) -> Vec<Root> {
        self.factors.iter().map(|f| f.root.clone()).collect()
    }

    /// Roots sorted, for order-insensitive comparison.
    pub fn root_set(&self) -> Vec<Root> {
        let mut r = self.roots();
        r.sort();
        r
    }

    pub fn highest_factors(&self) -> impl Iterator<Item = &DecompositionFactor> {
        self.factors.iter().filter(|f| !f.is_simple())
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| format!("s[{}]", x.root))
            .collect();
        write!(f, "{}", parts.join(" · "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VerificationReport {
    pub orthogonal: bool,
    pub highest_root_ok: bool,
    pub chain_ok: bool,
    pub product_is_w0: bool,
    pub count_ok: bool,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.orthogonal
            && self.highest_root_ok
            && self.chain_ok
            && self.product_is_w0
            && self.count_ok
    }
}

/// Strictly increasing chain of index sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParabolicTower {
    pub chain: Vec<IndexSet>,
}

impl ParabolicTower {
    pub fn is_strictly_increasing(&self) -> bool {
        self.chain
            .windows(2)
            .all(|w| w[0].is_subset(&w[1]) && w[0] != w[1])
    }
}

impl fmt::Display for ParabolicTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.chain.iter().map(|j| j.to_string()).collect();
        write!(f, "{}", parts.join(" ⊂ "))
    }
}

/// Size guard for [`RootSystem::enumerate_max_orthogonal`]: a system is
/// searched when its rank or its number of positive roots is within bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBound {
    pub max_rank: usize,
    pub max_positive_roots: usize,
}

impl Default for SearchBound {
    fn default() -> Self {
        Self {
            max_rank: 4,
            max_positive_roots: 40,
        }
    }
}

impl SearchBound {
    pub fn with_max_rank(max_rank: usize) -> Self {
        Self {
            max_rank,
            ..Self::default()
        }
    }

    fn admits(&self, rs: &RootSystem) -> bool {
        rs.rank() <= self.max_rank || rs.positive_roots().len() <= self.max_positive_roots
    }
}

/// Coefficient vector builder: `vec_of(n, &[(i, c), ...])`, 1-based.
fn vec_of(n: usize, entries: &[(usize, i64)]) -> Root {
    let mut v = vec![0; n];
    for &(i, c) in entries {
        v[i - 1] += c;
    }
    Root::new(v)
}

fn interval(n: usize, lo: usize, hi: usize) -> Root {
    let e: Vec<(usize, i64)> = (lo..=hi).map(|i| (i, 1)).collect();
    vec_of(n, &e)
}

/// Highest root of `B_j` on the last `j` nodes of `B_n`.
fn b_highest(n: usize, j: usize) -> Root {
    let mut e = vec![(n - j + 1, 1)];
    e.extend((n - j + 2..=n).map(|i| (i, 2)));
    vec_of(n, &e)
}

/// Highest root of `C_j` on the last `j` nodes of `C_n`.
fn c_highest(n: usize, j: usize) -> Root {
    let mut e: Vec<(usize, i64)> = (n - j + 1..n).map(|i| (i, 2)).collect();
    e.push((n, 1));
    vec_of(n, &e)
}

/// Highest root of `D_j` on the last `j` nodes of `D_n` (`j ≥ 3`).
fn d_highest(n: usize, j: usize) -> Root {
    let mut e = vec![(n - j + 1, 1)];
    e.extend((n - j + 2..=n - 2).map(|i| (i, 2)));
    e.push((n - 1, 1));
    e.push((n, 1));
    vec_of(n, &e)
}

fn simple(n: usize, i: usize) -> Root {
    Root::simple(n, i)
}

fn closed_form_roots(ty: RootSystemType) -> Vec<Root> {
    let n = ty.rank();
    let r = |v: &[i64]| Root::new(v.to_vec());
    match ty.family() {
        Family::A => {
            let k = n / 2;
            if n.is_multiple_of(2) {
                (1..=k).map(|i| interval(n, k - i + 1, k + i)).collect()
            } else {
                let mut out = vec![simple(n, k + 1)];
                out.extend((1..=k).map(|i| interval(n, k - i + 1, k + i + 1)));
                out
            }
        }
        Family::B => {
            let mut out = Vec::new();
            if n.is_multiple_of(2) {
                out.extend((1..n).step_by(2).map(|i| simple(n, i)));
                out.extend((2..=n).step_by(2).map(|j| b_highest(n, j)));
            } else {
                out.push(simple(n, n));
                out.extend((1..n - 1).step_by(2).map(|i| simple(n, i)));
                out.extend((3..=n).step_by(2).map(|j| b_highest(n, j)));
            }
            out
        }
        Family::C => (1..=n).map(|j| c_highest(n, j)).collect(),
        Family::D => {
            let mut out = Vec::new();
            if n.is_multiple_of(2) {
                out.extend((1..n - 2).step_by(2).map(|i| simple(n, i)));
                out.push(simple(n, n - 1));
                out.push(simple(n, n));
                out.extend((4..=n).step_by(2).map(|j| d_highest(n, j)));
            } else {
                out.extend((1..=n - 2).step_by(2).map(|i| simple(n, i)));
                out.extend((3..=n).step_by(2).map(|j| d_highest(n, j)));
            }
            out
        }
        Family::E => match n {
            6 => vec![
                simple(6, 4),
                r(&[0, 0, 1, 1, 1, 0]),
                r(&[1, 0, 1, 1, 1, 1]),
                r(&[1, 2, 2, 3, 2, 1]),
            ],
            7 => vec![
                simple(7, 2),
                simple(7, 3),
                simple(7, 5),
                simple(7, 7),
                r(&[0, 1, 1, 2, 1, 0, 0]),
                r(&[0, 1, 1, 2, 2, 2, 1]),
                r(&[2, 2, 3, 4, 3, 2, 1]),
            ],
            _ => vec![
                simple(8, 2),
                simple(8, 3),
                simple(8, 5),
                simple(8, 7),
                r(&[0, 1, 1, 2, 1, 0, 0, 0]),
                r(&[0, 1, 1, 2, 2, 2, 1, 0]),
                r(&[2, 2, 3, 4, 3, 2, 1, 0]),
                r(&[2, 3, 4, 6, 5, 4, 3, 2]),
            ],
        },
        Family::F => vec![
            simple(4, 2),
            r(&[0, 1, 2, 0]),
            r(&[0, 1, 2, 2]),
            r(&[2, 3, 4, 2]),
        ],
        Family::G => vec![simple(2, 1), r(&[3, 2])],
    }
}

/// Expected number of factors for each type.
pub fn expected_factor_count(ty: RootSystemType) -> usize {
    let n = ty.rank();
    match ty.family() {
        Family::A => n.div_ceil(2),
        Family::B | Family::C => n,
        Family::D => {
            if n.is_multiple_of(2) {
                n
            } else {
                n - 1
            }
        }
        Family::E | Family::F | Family::G => match (ty.family(), n) {
            (Family::E, 6) => 4,
            (Family::E, 7) => 7,
            (Family::E, _) => 8,
            (Family::F, _) => 4,
            _ => 2,
        },
    }
}

impl RootSystem {
    /// The closed-form factor list: simple factors first, then highest
    /// roots in ascending dominance.
    pub fn paper_decomposition(&self) -> Decomposition {
        Decomposition::from_roots(closed_form_roots(self.root_type()))
    }

    pub fn verify_decomposition(&self, d: &Decomposition) -> Result<VerificationReport> {
        for f in &d.factors {
            self.require_root(&f.root)?;
        }
        let roots = d.roots();

        let mut orthogonal = true;
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[i + 1..] {
                if self.pairing2(a, b)? != 0 {
                    orthogonal = false;
                }
            }
        }

        let mut highest_root_ok = true;
        for f in &d.factors {
            let ok = f.root.is_positive()
                && match &f.kind {
                    FactorKind::Simple => f.root.is_simple(),
                    FactorKind::HighestOf(j) => {
                        *j == f.root.support() && self.highest_root_of(j).is_ok_and(|h| h == f.root)
                    }
                };
            highest_root_ok &= ok;
        }

        let mut chain: Vec<&Root> = d.highest_factors().map(|f| &f.root).collect();
        chain.sort_by_key(|r| r.height());
        let mut chain_ok = true;
        for w in chain.windows(2) {
            chain_ok &= dominance_leq(w[0], w[1])?;
        }

        let product_is_w0 = self.reflection_product(&roots)? == self.longest_element();
        let count_ok = d.len() <= self.rank();

        Ok(VerificationReport {
            orthogonal,
            highest_root_ok,
            chain_ok,
            product_is_w0,
            count_ok,
        })
    }

    /// Simple roots together with the highest root of every connected
    /// subdiagram, without repetition.
    pub fn candidate_pool(&self) -> Vec<Root> {
        let n = self.rank();
        let mut pool: Vec<Root> = Vec::new();
        for mask in 1u32..(1 << n) {
            let j = IndexSet::new((1..=n).filter(|i| mask & (1 << (i - 1)) != 0));
            if let Ok(h) = self.highest_root_of(&j) {
                if !pool.contains(&h) {
                    pool.push(h);
                }
            }
        }
        pool.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        pool
    }

    /// Every max-orthogonal subset of the candidate pool whose reflections
    /// multiply to `w₀`, sorted canonically.
    pub fn enumerate_max_orthogonal(&self, bound: SearchBound) -> Result<Vec<Decomposition>> {
        if !bound.admits(self) {
            return Err(Error::TooLarge(format!(
                "{} has rank {} and {} positive roots; bound is rank {} or {} roots",
                self.root_type(),
                self.rank(),
                self.positive_roots().len(),
                bound.max_rank,
                bound.max_positive_roots
            )));
        }
        let pool = self.candidate_pool();
        let reflections: Vec<WeylElement> = pool
            .iter()
            .map(|r| self.reflection_of(r))
            .collect::<Result<_>>()?;
        let w0 = self.longest_element();
        let mut found = Vec::new();
        let mut chosen = Vec::new();
        search(
            self,
            &pool,
            &reflections,
            &w0,
            0,
            &mut chosen,
            self.identity(),
            &mut found,
        )?;
        let mut out: Vec<Decomposition> = found
            .into_iter()
            .map(|idx: Vec<usize>| {
                let mut roots: Vec<Root> = idx.iter().map(|&i| pool[i].clone()).collect();
                roots.sort_by(|a, b| {
                    b.is_simple()
                        .cmp(&a.is_simple())
                        .then_with(|| a.height().cmp(&b.height()))
                        .then_with(|| b.cmp(a))
                });
                Decomposition::from_roots(roots)
            })
            .collect();
        out.sort_by_key(|d| d.root_set());
        Ok(out)
    }

    /// `w₀` equals the embedded longest element of the inner subsystem times
    /// `s_{α_max}`, and also `s_{α_1}` for `B_n` and `D_n`.
    pub fn recursion_relation_check(&self) -> Result<bool> {
        let (inner_ty, j, with_alpha1) = self.recursion_data()?;
        let map = self.embed_as(&j, inner_ty)?;
        let inner = RootSystem::new(inner_ty);
        let word = inner.reduced_word_of(&inner.longest_element());
        let mapped = Word::new(
            word.letters()
                .iter()
                .map(|&b| map[b - 1])
                .collect::<Vec<_>>(),
        );
        let u = self.evaluate_word(&mapped)?;
        let s_max = self.reflection_of(&self.highest_root())?;
        let w0 = self.longest_element();
        if with_alpha1 {
            let s1 = self.simple_reflection(1)?;
            let a = u.compose(&s_max)?.compose(&s1)?;
            let b = u.compose(&s1)?.compose(&s_max)?;
            Ok(a == w0 && b == w0)
        } else {
            Ok(u.compose(&s_max)? == w0)
        }
    }

    /// Inner type, its node set, and whether `s_{α_1}` joins `s_{α_max}`.
    pub fn recursion_data(&self) -> Result<(RootSystemType, IndexSet, bool)> {
        let n = self.rank();
        let t = |f, r| RootSystemType::new(f, r).expect("admissible inner type");
        let none = || Error::NoRelation(self.root_type().to_string());
        Ok(match self.family() {
            Family::A if n >= 3 => (t(Family::A, n - 2), IndexSet::range(2, n - 1), false),
            Family::B if n >= 4 => (t(Family::B, n - 2), IndexSet::range(3, n), true),
            Family::C if n >= 3 => (t(Family::C, n - 1), IndexSet::range(2, n), false),
            Family::D if n >= 6 => (t(Family::D, n - 2), IndexSet::range(3, n), true),
            Family::E => match n {
                6 => (t(Family::A, 5), IndexSet::new([1, 3, 4, 5, 6]), false),
                7 => (t(Family::D, 6), IndexSet::range(2, 7), false),
                _ => (t(Family::E, 7), IndexSet::range(1, 7), false),
            },
            Family::F => (t(Family::C, 3), IndexSet::new([2, 3, 4]), false),
            _ => return Err(none()),
        })
    }

    /// Chain of supports of the non-simple factors, led by the first simple
    /// factor when it sits inside the smallest support.
    pub fn parabolic_tower(&self) -> ParabolicTower {
        let d = self.paper_decomposition();
        let mut chain: Vec<IndexSet> = d.highest_factors().map(|f| f.root.support()).collect();
        if let Some(first) = d.factors.first().filter(|f| f.is_simple()) {
            let s = first.root.support();
            match chain.first() {
                Some(c) if s.is_subset(c) && &s != c => chain.insert(0, s),
                None => chain.push(s),
                _ => {}
            }
        }
        ParabolicTower { chain }
    }

    /// `B_n`: `ε_i = α_i + … + α_n`. `C_n`: `ε'_i = 2α_i + … + 2α_{n−1} + α_n`.
    pub fn epsilon_factorization(&self) -> Result<Vec<Root>> {
        let n = self.rank();
        match self.family() {
            Family::B => Ok((1..=n).map(|i| interval(n, i, n)).collect()),
            Family::C => Ok((1..=n).map(|i| c_highest(n, n - i + 1)).collect()),
            _ => Err(Error::WrongFamily {
                expected: "B or C",
                found: self.root_type().to_string(),
            }),
        }
    }

    /// For even `i < n−2` exactly two highest-root factors are not orthogonal
    /// to `α_i`; for odd `i` none are.
    pub fn dn_orthogonality_pattern(&self) -> Result<bool> {
        let n = self.rank();
        if self.family() != Family::D || n < 4 {
            return Err(Error::WrongFamily {
                expected: "D (rank ≥ 4)",
                found: self.root_type().to_string(),
            });
        }
        let d = self.paper_decomposition();
        for i in 1..n - 2 {
            let ai = self.simple_root(i);
            let mut hits = 0;
            for f in d.highest_factors() {
                if self.pairing2(&ai, &f.root)? != 0 {
                    hits += 1;
                }
            }
            let want = if i % 2 == 0 { 2 } else { 0 };
            if hits != want {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    rs: &RootSystem,
    pool: &[Root],
    reflections: &[WeylElement],
    w0: &WeylElement,
    start: usize,
    chosen: &mut Vec<usize>,
    product: WeylElement,
    found: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if !chosen.is_empty() && &product == w0 {
        found.push(chosen.clone());
    }
    for i in start..pool.len() {
        let cand = &pool[i];
        let mut ok = true;
        for &c in chosen.iter() {
            let other = &pool[c];
            if rs.pairing2(cand, other)? != 0 {
                ok = false;
                break;
            }
            if !cand.is_simple()
                && !other.is_simple()
                && !dominance_leq(other, cand)?
                && !dominance_leq(cand, other)?
            {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        chosen.push(i);
        let next = product.compose(&reflections[i])?;
        search(rs, pool, reflections, w0, i + 1, chosen, next, found)?;
        chosen.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse::<RootSystemType>().unwrap())
    }

    fn root(v: &[i64]) -> Root {
        Root::new(v.to_vec())
    }

    #[test]
    fn small_closed_forms() {
        assert_eq!(
            rs("F4").paper_decomposition().roots(),
            vec![
                root(&[0, 1, 0, 0]),
                root(&[0, 1, 2, 0]),
                root(&[0, 1, 2, 2]),
                root(&[2, 3, 4, 2])
            ]
        );
        assert_eq!(
            rs("G2").paper_decomposition().roots(),
            vec![root(&[1, 0]), root(&[3, 2])]
        );
        assert_eq!(
            rs("A5").paper_decomposition().roots(),
            vec![
                root(&[0, 0, 1, 0, 0]),
                root(&[0, 1, 1, 1, 0]),
                root(&[1, 1, 1, 1, 1])
            ]
        );
        assert_eq!(rs("A1").paper_decomposition().roots(), vec![root(&[1])]);
    }

    #[test]
    fn factor_kinds() {
        let d = rs("F4").paper_decomposition();
        assert_eq!(d.factors[0].kind, FactorKind::Simple);
        assert_eq!(
            d.factors[1].kind,
            FactorKind::HighestOf(IndexSet::new([2, 3]))
        );
    }

    #[test]
    fn verification_flags() {
        let f4 = rs("F4");
        assert!(f4
            .verify_decomposition(&f4.paper_decomposition())
            .unwrap()
            .all_ok());

        let mut d = f4.paper_decomposition();
        d.factors[0] = DecompositionFactor::from_root(f4.simple_root(1));
        let rep = f4.verify_decomposition(&d).unwrap();
        assert!(!rep.orthogonal);
        assert!(!rep.product_is_w0);

        let b4 = rs("B4");
        let eps = Decomposition::from_roots(b4.epsilon_factorization().unwrap());
        let rep = b4.verify_decomposition(&eps).unwrap();
        assert!(!rep.highest_root_ok);
        assert!(rep.product_is_w0);
        assert!(rep.orthogonal);

        let bad = Decomposition::from_roots([root(&[1, 0, 1, 0])]);
        assert_eq!(
            f4.verify_decomposition(&bad),
            Err(Error::NotARoot(vec![1, 0, 1, 0]))
        );
    }

    #[test]
    fn uniqueness_small() {
        for name in ["A1", "A3", "G2", "B3"] {
            let r = rs(name);
            let all = r.enumerate_max_orthogonal(SearchBound::default()).unwrap();
            assert_eq!(all.len(), 1, "{name}");
            assert_eq!(all[0].root_set(), r.paper_decomposition().root_set());
        }
        assert!(matches!(
            rs("E8").enumerate_max_orthogonal(SearchBound::default()),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn towers() {
        let chain = |s: &str| {
            rs(s)
                .parabolic_tower()
                .chain
                .into_iter()
                .map(|j| j.indices().to_vec())
                .collect::<Vec<_>>()
        };
        assert_eq!(
            chain("F4"),
            vec![vec![2], vec![2, 3], vec![2, 3, 4], vec![1, 2, 3, 4]]
        );
        assert_eq!(chain("G2"), vec![vec![1], vec![1, 2]]);
        assert_eq!(chain("A1"), vec![vec![1]]);
        assert_eq!(
            chain("E6"),
            vec![
                vec![4],
                vec![3, 4, 5],
                vec![1, 3, 4, 5, 6],
                vec![1, 2, 3, 4, 5, 6]
            ]
        );
        assert_eq!(chain("C3"), vec![vec![3], vec![2, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn recursion_rows() {
        for name in ["A3", "B4", "B5", "C3", "D6", "E6", "E7", "F4"] {
            assert!(rs(name).recursion_relation_check().unwrap(), "{name}");
        }
        for name in ["A2", "B3", "C2", "D4", "D5", "G2"] {
            assert!(matches!(
                rs(name).recursion_relation_check(),
                Err(Error::NoRelation(_))
            ));
        }
    }

    #[test]
    fn epsilon_roots() {
        assert_eq!(
            rs("B2").epsilon_factorization().unwrap(),
            vec![root(&[1, 1]), root(&[0, 1])]
        );
        let c3 = rs("C3");
        let eps = c3.epsilon_factorization().unwrap();
        assert_eq!(
            eps,
            vec![root(&[2, 2, 1]), root(&[0, 2, 1]), root(&[0, 0, 1])]
        );
        assert_eq!(
            Decomposition::from_roots(eps).root_set(),
            c3.paper_decomposition().root_set()
        );
        assert!(matches!(
            rs("A1").epsilon_factorization(),
            Err(Error::WrongFamily { .. })
        ));
    }

    #[test]
    fn d_pattern() {
        for name in ["D4", "D6", "D7"] {
            assert!(rs(name).dn_orthogonality_pattern().unwrap());
        }
        assert!(matches!(
            rs("D3").dn_orthogonality_pattern(),
            Err(Error::WrongFamily { .. })
        ));
        assert!(matches!(
            rs("B4").dn_orthogonality_pattern(),
            Err(Error::WrongFamily { .. })
        ));
    }
}
