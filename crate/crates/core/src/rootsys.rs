//! Finite crystallographic root systems in Bourbaki numbering.
//!
//! Roots are integer coefficient vectors over the simple roots. The bilinear
//! form is only ever exposed doubled (`pairing2`), which keeps the
//! half-integral products of `B_n`, `F_4` and `G_2` exact. Norm conventions:
//!
//! | family | `2(α_i, α_i)` |
//! |--------|---------------|
//! | A, D, E | all 4 |
//! | B_n | 4, …, 4, 2 |
//! | C_n | 4, …, 4, 8 |
//! | F_4 | 4, 4, 2, 2 |
//! | G_2 | 2, 6 |

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A Cartan–Killing type such as `E8` or `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    family: Family,
    rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidType { family, rank })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of positive roots, from the closed formulas.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::BadTypeSyntax(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadTypeSyntax(s.to_string()))?;
        Self::new(family, rank)
    }
}

/// Coefficient vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self(coeffs)
    }

    /// `α_i` in a rank `rank` lattice; `i` is 1-based.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Self(v)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    /// Index of the simple root if this is one.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i + 1),
                _ => return None,
            }
        }
        found
    }

    pub fn is_simple(&self) -> bool {
        self.simple_index().is_some()
    }

    /// Indices with non-zero coefficient.
    pub fn support(&self) -> IndexSet {
        IndexSet(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, _)| i + 1)
                .collect(),
        )
    }

    /// `r` or `-r`, whichever is positive.
    pub fn positive_representative(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

impl From<Vec<i64>> for Root {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        assert_eq!(self.0.len(), rhs.0.len());
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        assert_eq!(self.0.len(), rhs.0.len());
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul<&Root> for i64 {
    type Output = Root;
    fn mul(self, rhs: &Root) -> Root {
        Root(rhs.0.iter().map(|c| self * c).collect())
    }
}

impl fmt::Display for Root {
    /// Renders as `α1 + 2α2 + …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "α{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Sorted set of 1-based simple-root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn range(lo: usize, hi: usize) -> Self {
        Self((lo..=hi).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Root system with its positive roots enumerated.
///
/// Positive roots are ordered by height; ties are broken by descending
/// lexicographic order on coefficients, so the first `rank` entries are
/// `α_1, …, α_n` in order.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: RootSystemType,
    gram2: IntMatrix,
    positive_roots: Vec<Root>,
    root_index: HashMap<Vec<i64>, usize>,
}

fn gram2_for(ty: RootSystemType) -> IntMatrix {
    let n = ty.rank;
    let mut g = IntMatrix::zeros(n);
    let edge = |g: &mut IntMatrix, i: usize, j: usize, v: i64| {
        g[(i - 1, j - 1)] = v;
        g[(j - 1, i - 1)] = v;
    };
    for i in 0..n {
        g[(i, i)] = 4;
    }
    match ty.family {
        Family::A => {
            for i in 1..n {
                edge(&mut g, i, i + 1, -2);
            }
        }
        Family::B => {
            for i in 1..n {
                edge(&mut g, i, i + 1, -2);
            }
            g[(n - 1, n - 1)] = 2;
        }
        Family::C => {
            for i in 1..n - 1 {
                edge(&mut g, i, i + 1, -2);
            }
            edge(&mut g, n - 1, n, -4);
            g[(n - 1, n - 1)] = 8;
        }
        Family::D => {
            for i in 1..n - 1 {
                edge(&mut g, i, i + 1, -2);
            }
            edge(&mut g, n - 2, n, -2);
        }
        Family::E => {
            edge(&mut g, 1, 3, -2);
            edge(&mut g, 2, 4, -2);
            for i in 3..n {
                edge(&mut g, i, i + 1, -2);
            }
        }
        Family::F => {
            edge(&mut g, 1, 2, -2);
            edge(&mut g, 2, 3, -2);
            edge(&mut g, 3, 4, -1);
            g[(2, 2)] = 2;
            g[(3, 3)] = 2;
        }
        Family::G => {
            g = IntMatrix::from_rows(2, vec![2, -3, -3, 6]);
        }
    }
    g
}

fn pair(g: &IntMatrix, x: &[i64], y: &[i64]) -> i64 {
    let gy = g.mul_vec(y);
    x.iter().zip(&gy).map(|(a, b)| a * b).sum()
}

/// Positive roots by closure from the simple roots using root strings.
fn enumerate_positive_roots(g: &IntMatrix) -> Vec<Root> {
    let n = g.dim();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (1..=n).map(|i| Root::simple(n, i).0).collect();
    seen.extend(layer.iter().cloned());
    let mut all = layer.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for x in &layer {
            for i in 0..n {
                let mut probe = x.clone();
                let mut down = 0i64;
                loop {
                    probe[i] -= 1;
                    if seen.contains(&probe) {
                        down += 1;
                    } else {
                        break;
                    }
                }
                // ⟨x, α_i^∨⟩ = 2(α_i, x)/(α_i, α_i)
                let ax: i64 = (0..n).map(|k| g[(i, k)] * x[k]).sum();
                let cartan = 2 * ax / g[(i, i)];
                let up = down - cartan;
                if up > 0 {
                    let mut y = x.clone();
                    y[i] += 1;
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    let mut roots: Vec<Root> = all.into_iter().map(Root).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
    roots
}

impl RootSystem {
    pub fn new(ty: RootSystemType) -> Self {
        let gram2 = gram2_for(ty);
        let positive_roots = enumerate_positive_roots(&gram2);
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.0.clone(), i))
            .collect();
        Self {
            ty,
            gram2,
            positive_roots,
            root_index,
        }
    }

    pub fn build(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::new(RootSystemType::new(family, rank)?))
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn family(&self) -> Family {
        self.ty.family
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// `2·(α_i, α_j)`.
    pub fn gram2(&self) -> &IntMatrix {
        &self.gram2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    /// Position of a positive root in [`Self::positive_roots`].
    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.root_index.get(r.coeffs()).copied()
    }

    /// True for positive and negative roots alike.
    pub fn is_root(&self, r: &Root) -> bool {
        r.rank() == self.rank()
            && (self.root_index.contains_key(r.coeffs())
                || self.root_index.contains_key((-r).coeffs()))
    }

    pub fn require_root(&self, r: &Root) -> Result<()> {
        self.check_dim(r)?;
        if self.is_root(r) {
            Ok(())
        } else {
            Err(Error::NotARoot(r.coeffs().to_vec()))
        }
    }

    fn check_dim(&self, r: &Root) -> Result<()> {
        if r.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: r.rank(),
            })
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(Error::BadIndex {
                index: i,
                rank: self.rank(),
            })
        }
    }

    /// `2·(x, y)`.
    pub fn pairing2(&self, x: &Root, y: &Root) -> Result<i64> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(pair(&self.gram2, x.coeffs(), y.coeffs()))
    }

    /// `2·(x, x)`; 4 for the long roots of simply-laced systems.
    pub fn norm2(&self, x: &Root) -> Result<i64> {
        self.pairing2(x, x)
    }

    /// `2(a, x)/(a, a)`, exact for any lattice vector `x` and root `a`.
    pub fn cartan_integer(&self, x: &Root, a: &Root) -> Result<i64> {
        self.require_root(a)?;
        let ax = self.pairing2(a, x)?;
        let aa = self.pairing2(a, a)?;
        debug_assert_eq!((2 * ax) % aa, 0);
        Ok(2 * ax / aa)
    }

    /// `A_ij = 2(α_i, α_j)/(α_i, α_i)`.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let n = self.rank();
        let mut c = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                c[(i, j)] = 2 * self.gram2[(i, j)] / self.gram2[(i, i)];
            }
        }
        c
    }

    pub fn highest_root(&self) -> Root {
        self.positive_roots
            .last()
            .cloned()
            .expect("root systems are non-empty")
    }

    /// Whether `J` induces a connected subdiagram of the Dynkin diagram.
    pub fn is_connected(&self, j: &IndexSet) -> bool {
        let idx = j.indices();
        if idx.is_empty() {
            return false;
        }
        let mut reached = vec![idx[0]];
        let mut stack = vec![idx[0]];
        while let Some(v) = stack.pop() {
            for &w in idx {
                if !reached.contains(&w) && self.gram2[(v - 1, w - 1)] != 0 {
                    reached.push(w);
                    stack.push(w);
                }
            }
        }
        reached.len() == idx.len()
    }

    fn check_subset(&self, j: &IndexSet) -> Result<()> {
        if j.is_empty() {
            return Err(Error::EmptySubset);
        }
        for &i in j.indices() {
            self.check_index(i)?;
        }
        if !self.is_connected(j) {
            return Err(Error::DisconnectedSubset(j.indices().to_vec()));
        }
        Ok(())
    }

    /// The root supported on `J` that dominates every other such root.
    pub fn highest_root_of(&self, j: &IndexSet) -> Result<Root> {
        self.check_subset(j)?;
        let inside: Vec<&Root> = self
            .positive_roots
            .iter()
            .filter(|r| r.support().is_subset(j))
            .collect();
        let top = inside
            .iter()
            .max_by_key(|r| r.height())
            .copied()
            .expect("connected J contains at least one simple root");
        debug_assert!(inside.iter().all(|r| dominance_leq(r, top).unwrap()));
        Ok(top.clone())
    }

    /// Identifies the subdiagram on `J` with a standard type.
    ///
    /// Returns the abstract system and `map`, where `map[b - 1]` is the outer
    /// index of the inner simple root `β_b`. Types are tried in the order
    /// A, B, C, D, E, F, G; among valid relabelings the lexicographically
    /// smallest `map` wins.
    pub fn parabolic_embedding(&self, j: &IndexSet) -> Result<(RootSystem, Vec<usize>)> {
        self.check_subset(j)?;
        let r = j.len();
        let candidates = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ];
        for family in candidates {
            if family == Family::D && r == 3 {
                // D3 has the A3 diagram; A3 was already tried.
                continue;
            }
            let Ok(ty) = RootSystemType::new(family, r) else {
                continue;
            };
            if let Ok(map) = self.embed_as(j, ty) {
                return Ok((RootSystem::new(ty), map));
            }
        }
        Err(Error::UnrecognizedDiagram(j.indices().to_vec()))
    }

    /// Relabeling that identifies the subdiagram on `J` with type `ty`.
    pub fn embed_as(&self, j: &IndexSet, ty: RootSystemType) -> Result<Vec<usize>> {
        self.check_subset(j)?;
        let unrecognized = || Error::UnrecognizedDiagram(j.indices().to_vec());
        if ty.rank() != j.len() {
            return Err(unrecognized());
        }
        let inner = RootSystem::new(ty).cartan_matrix();
        let mut map = Vec::with_capacity(j.len());
        if match_diagram(&inner, &self.cartan_matrix(), j.indices(), &mut map) {
            Ok(map)
        } else {
            Err(unrecognized())
        }
    }

    /// Image of an inner-system root under a `parabolic_embedding` map.
    pub fn embed_root(&self, inner: &Root, map: &[usize]) -> Root {
        let mut v = vec![0; self.rank()];
        for (b, &c) in inner.coeffs().iter().enumerate() {
            v[map[b] - 1] += c;
        }
        Root(v)
    }
}

fn match_diagram(
    inner: &IntMatrix,
    outer: &IntMatrix,
    pool: &[usize],
    map: &mut Vec<usize>,
) -> bool {
    let b = map.len();
    if b == inner.dim() {
        return true;
    }
    for &cand in pool {
        if map.contains(&cand) {
            continue;
        }
        let ok = map.iter().enumerate().all(|(a, &o)| {
            inner[(a, b)] == outer[(o - 1, cand - 1)] && inner[(b, a)] == outer[(cand - 1, o - 1)]
        }) && inner[(b, b)] == outer[(cand - 1, cand - 1)];
        if ok {
            map.push(cand);
            if match_diagram(inner, outer, pool, map) {
                return true;
            }
            map.pop();
        }
    }
    false
}

/// Componentwise order on simple-root coordinates: `y - x ≥ 0`.
pub fn dominance_leq(x: &Root, y: &Root) -> Result<bool> {
    if x.rank() != y.rank() {
        return Err(Error::DimensionMismatch {
            expected: x.rank(),
            found: y.rank(),
        });
    }
    Ok(x.coeffs().iter().zip(y.coeffs()).all(|(a, b)| a <= b))
}
