//! Conjugation rules for reflections and two braid-type identities in `A_n`.

use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSystem};
use crate::weyl::Word;

/// Named conjugation patterns, keyed by the lengths of `δ` and `τ`.
///
/// The first word refers to the conjugating root `δ`, the second to `τ`.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjugationRule {
    LongLong,
    LongShort_B_F4,
    LongShort_G2,
    ShortLong_B_F4,
    ShortLong_C,
    ShortLong_G2,
}

impl ConjugationRule {
    /// Multiple of `δ` added to or subtracted from `τ`.
    pub fn multiplier(self) -> i64 {
        match self {
            Self::LongLong | Self::LongShort_B_F4 | Self::LongShort_G2 => 1,
            Self::ShortLong_B_F4 | Self::ShortLong_C => 2,
            Self::ShortLong_G2 => 3,
        }
    }

    /// `2(r, r)` of the resulting root.
    pub fn result_norm2(self) -> i64 {
        match self {
            Self::LongLong | Self::ShortLong_B_F4 => 4,
            Self::LongShort_B_F4 | Self::LongShort_G2 => 2,
            Self::ShortLong_C => 8,
            Self::ShortLong_G2 => 6,
        }
    }

    /// `(2(δ,δ), 2(τ,τ), |2(δ,τ)|)` for this rule.
    fn signature(self) -> (i64, i64, i64) {
        match self {
            Self::LongLong => (4, 4, 2),
            Self::LongShort_B_F4 => (4, 2, 2),
            Self::LongShort_G2 => (6, 2, 3),
            Self::ShortLong_B_F4 => (2, 4, 2),
            Self::ShortLong_C => (4, 8, 4),
            Self::ShortLong_G2 => (2, 6, 3),
        }
    }

    const ALL: [ConjugationRule; 6] = [
        Self::LongLong,
        Self::LongShort_B_F4,
        Self::LongShort_G2,
        Self::ShortLong_B_F4,
        Self::ShortLong_C,
        Self::ShortLong_G2,
    ];
}

/// `Plus` when `(δ, τ) < 0`, so that `s_δ(τ) = τ + kδ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConjugationCase {
    pub rule: ConjugationRule,
    pub sign: Sign,
}

impl ConjugationCase {
    /// `τ ± kδ` as predicted by the rule.
    pub fn closed_form(&self, delta: &Root, tau: &Root) -> Root {
        let k = self.rule.multiplier();
        let k = match self.sign {
            Sign::Plus => k,
            Sign::Minus => -k,
        };
        tau + &(k * delta)
    }
}

impl RootSystem {
    /// `s_δ(τ)` normalized to be positive, so `s_{result} = s_δ s_τ s_δ`.
    pub fn conjugated_root(&self, delta: &Root, tau: &Root) -> Result<Root> {
        self.require_root(tau)?;
        Ok(self.reflect(tau, delta)?.positive_representative())
    }

    pub fn classify_conjugation(&self, delta: &Root, tau: &Root) -> Result<ConjugationCase> {
        self.require_root(delta)?;
        self.require_root(tau)?;
        if delta == tau || delta == &-tau {
            return Err(Error::Proportional);
        }
        let p = self.pairing2(delta, tau)?;
        if p == 0 {
            return Err(Error::Orthogonal);
        }
        let dn = self.norm2(delta)?;
        let tn = self.norm2(tau)?;
        let rule = ConjugationRule::ALL
            .into_iter()
            .find(|r| r.signature() == (dn, tn, p.abs()))
            .ok_or(Error::Unclassified {
                delta_norm2: dn,
                tau_norm2: tn,
                pairing2: p,
            })?;
        let sign = if p < 0 { Sign::Plus } else { Sign::Minus };
        Ok(ConjugationCase { rule, sign })
    }

    fn require_family_a(&self) -> Result<()> {
        if self.family() == Family::A {
            Ok(())
        } else {
            Err(Error::WrongFamily {
                expected: "A",
                found: self.root_type().to_string(),
            })
        }
    }

    fn interval_root(&self, k: usize, n: usize) -> Root {
        let mut v = vec![0; self.rank()];
        for c in &mut v[k - 1..n] {
            *c = 1;
        }
        Root::new(v)
    }

    /// `s_k…s_{n−1} s_n s_{n−1}…s_k = s_n…s_{k+1} s_k s_{k+1}…s_n = s_{α_k+…+α_n}`.
    pub fn check_lambda_v(&self, k: usize, n: usize) -> Result<bool> {
        self.require_family_a()?;
        if !(1 <= k && k <= n && n <= self.rank()) {
            return Err(Error::BadRange {
                k,
                n,
                rank: self.rank(),
            });
        }
        let up: Vec<usize> = (k..n).collect();
        let down: Vec<usize> = (k + 1..=n).rev().collect();
        let lambda = Word::new([up.clone(), vec![n], up.iter().rev().copied().collect()].concat());
        let vee = Word::new([down.clone(), vec![k], down.iter().rev().copied().collect()].concat());
        let target = self.reflection_of(&self.interval_root(k, n))?;
        Ok(self.evaluate_word(&lambda)? == target && self.evaluate_word(&vee)? == target)
    }

    /// `s_{α_k+…+α_{n−1}} (s_n s_{n−1}…s_k) = (s_{n−1}…s_{k+1}) s_{α_k+…+α_n}`.
    pub fn check_permutation_lemma(&self, k: usize, n: usize) -> Result<bool> {
        self.require_family_a()?;
        if !(1 <= k && k < n && n <= self.rank()) {
            return Err(Error::BadRange {
                k,
                n,
                rank: self.rank(),
            });
        }
        let lhs = self
            .reflection_of(&self.interval_root(k, n - 1))?
            .compose(&self.evaluate_word(&Word::new((k..=n).rev().collect::<Vec<_>>()))?)?;
        let rhs = self
            .evaluate_word(&Word::new((k + 1..n).rev().collect::<Vec<_>>()))?
            .compose(&self.reflection_of(&self.interval_root(k, n))?)?;
        Ok(lhs == rhs)
    }
}
