//! The two-chain poset, its down-sets, and character sums over down-set families.
//!
//! The ground set is `[n] = {1, ..., n}`. Elements `1..=m` form the first
//! chain, `m+1..=n` the second, and elements of different chains are
//! incomparable. A down-set (order ideal) is a subset closed downward under
//! the order. Every down-set is a union of a prefix of each chain, so the
//! family of down-sets contained in a fixed ideal is tiny and can be
//! materialized eagerly.
//!
//! Subsets of `[n]` are identified with vectors in F2^n via supports.
//! Throughout the crate, poset element `k` maps to bit position `k - 1`
//! (element 1 is the least significant bit).

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set. Keeps every subset of `[n]` and every
/// message counter within a 64-bit word.
pub const MAX_GROUND_SET: u32 = 62;

/// A vector in F2^n, also viewed as the subset of `[n]` it supports.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: u32,
    mask: u64,
}

impl BitVector {
    pub fn new(len: u32, mask: u64) -> Result<Self> {
        if len > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge {
                n: len,
                max: MAX_GROUND_SET,
            });
        }
        if len < 64 && mask >> len != 0 {
            return Err(Error::MaskTooWide { mask, len });
        }
        Ok(Self { len, mask })
    }

    pub fn zero(len: u32) -> Self {
        Self { len, mask: 0 }
    }

    /// Builds the vector supported on the given 1-based elements.
    pub fn from_support(len: u32, elements: &[u32]) -> Result<Self> {
        let mut mask = 0u64;
        for &e in elements {
            if e == 0 || e > len {
                return Err(Error::ElementOutOfRange { element: e, n: len });
            }
            mask |= 1 << (e - 1);
        }
        Self::new(len, mask)
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Hamming weight, equal to the size of the support.
    pub fn weight(&self) -> u32 {
        self.mask.count_ones()
    }

    /// True iff the 1-based element lies in the support.
    pub fn contains(&self, element: u32) -> bool {
        element >= 1 && element <= self.len && (self.mask >> (element - 1)) & 1 == 1
    }

    /// The support as ascending 1-based elements.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.len).filter(|&e| self.contains(e))
    }

    /// F2 inner product with another vector of the same length.
    pub fn dot(&self, other: &BitVector) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: other.len,
            });
        }
        Ok((self.mask & other.mask).count_ones() % 2 == 1)
    }
}

impl fmt::Display for BitVector {
    /// Renders coordinates in element order, element 1 first: `(1,1,0,0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for k in 0..self.len {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", (self.mask >> k) & 1)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector[{}]{}", self.len, self)
    }
}

/// One of the possible down-set shapes of the two-chain poset.
///
/// Nonempty down-sets are prefixes of chain one (`ChainOne(i)` is
/// `{1,...,i}`), prefixes of chain two (`ChainTwo(j)` is `{m+1,...,j}`), or
/// a union of both (`Both(i, j)`). `Empty` is admitted as a degenerate
/// ideal: it removes only the zero vector, so the code columns are all
/// nonzero vectors (the one-weight simplex code). Reports flag it as an
/// extension of the three standard shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealSpec {
    Empty,
    ChainOne(u32),
    ChainTwo(u32),
    Both(u32, u32),
}

impl IdealSpec {
    pub fn chain_one_prefix(&self) -> Option<u32> {
        match *self {
            IdealSpec::ChainOne(i) | IdealSpec::Both(i, _) => Some(i),
            _ => None,
        }
    }

    pub fn chain_two_end(&self) -> Option<u32> {
        match *self {
            IdealSpec::ChainTwo(j) | IdealSpec::Both(_, j) => Some(j),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, IdealSpec::Empty)
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IdealSpec::Empty => write!(f, "empty"),
            IdealSpec::ChainOne(i) => write!(f, "i={i}"),
            IdealSpec::ChainTwo(j) => write!(f, "j={j}"),
            IdealSpec::Both(i, j) => write!(f, "i={i}, j={j}"),
        }
    }
}

/// The disjoint union of two chains on `{1, ..., n}`: elements `1..=m` form
/// one chain, `m+1..=n` the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoChainPoset {
    m: u32,
    n: u32,
}

impl TwoChainPoset {
    /// Requires `1 <= m < n <= 62`.
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_GROUND_SET,
            });
        }
        if m == 0 || m >= n {
            return Err(Error::InvalidChainSplit { m, n });
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Length of the second chain, `n - m`.
    pub fn second_chain_len(&self) -> u32 {
        self.n - self.m
    }

    /// Number of messages `2^n`.
    pub fn message_count(&self) -> u64 {
        1u64 << self.n
    }

    fn check_element(&self, e: u32) -> Result<()> {
        if e == 0 || e > self.n {
            return Err(Error::ElementOutOfRange {
                element: e,
                n: self.n,
            });
        }
        Ok(())
    }

    /// The order relation: `a` precedes `b` iff they lie in the same chain
    /// and `a <= b` as integers.
    pub fn leq(&self, a: u32, b: u32) -> Result<bool> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok((a <= b && b <= self.m) || (self.m < a && a <= b))
    }

    /// True iff the support of `s` is downward closed: every element below
    /// a member is itself a member.
    pub fn is_down_set(&self, s: &BitVector) -> Result<bool> {
        if s.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: s.len(),
            });
        }
        for x in s.support() {
            for y in 1..=self.n {
                if self.leq(y, x)? && !s.contains(y) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Validates an ideal description against this poset's chain split.
    pub fn check_ideal(&self, spec: IdealSpec) -> Result<()> {
        let bad = |reason: String| Error::InvalidIdeal {
            m: self.m,
            n: self.n,
            reason,
        };
        match spec {
            IdealSpec::Empty => Ok(()),
            IdealSpec::ChainOne(i) => {
                if i < 1 || i > self.m {
                    Err(bad(format!("require 1 <= i <= m, got i={i}")))
                } else {
                    Ok(())
                }
            }
            IdealSpec::ChainTwo(j) => {
                if j <= self.m || j > self.n {
                    Err(bad(format!("require m+1 <= j <= n, got j={j}")))
                } else {
                    Ok(())
                }
            }
            IdealSpec::Both(i, j) => {
                self.check_ideal(IdealSpec::ChainOne(i))?;
                self.check_ideal(IdealSpec::ChainTwo(j))
            }
        }
    }

    /// The ideal itself as a subset of the ground set.
    pub fn ideal_support(&self, spec: IdealSpec) -> Result<BitVector> {
        self.check_ideal(spec)?;
        let i = spec.chain_one_prefix().unwrap_or(0);
        let l = spec.chain_two_end().map_or(0, |j| j - self.m);
        BitVector::new(self.n, prefix_mask(i) | (prefix_mask(l) << self.m))
    }

    /// Number of down-sets contained in the ideal: `(i + 1) * (j - m + 1)`
    /// counting absent prefixes as length 0.
    pub fn ideal_member_count(&self, spec: IdealSpec) -> Result<u64> {
        self.check_ideal(spec)?;
        let i = spec.chain_one_prefix().unwrap_or(0) as u64;
        let l = spec.chain_two_end().map_or(0, |j| j - self.m) as u64;
        Ok((i + 1) * (l + 1))
    }

    /// All down-sets of the poset contained in the given ideal, as
    /// characteristic vectors in ascending canonical (integer mask) order.
    ///
    /// Each member is a union of a chain-one prefix of length `0..=i` and a
    /// chain-two prefix of length `0..=j-m`.
    pub fn ideal_members(&self, spec: IdealSpec) -> Result<Vec<BitVector>> {
        self.check_ideal(spec)?;
        let i = spec.chain_one_prefix().unwrap_or(0);
        let l = spec.chain_two_end().map_or(0, |j| j - self.m);
        let mut members = Vec::with_capacity(((i + 1) * (l + 1)) as usize);
        for a in 0..=i {
            for b in 0..=l {
                let mask = prefix_mask(a) | (prefix_mask(b) << self.m);
                members.push(BitVector {
                    len: self.n,
                    mask,
                });
            }
        }
        members.sort();
        Ok(members)
    }

    /// Evaluates the generating polynomial of the down-set family inside the
    /// ideal at a `{+1, -1}` point: the sum over members `u` of the product
    /// of `signs[k]` over the support of `u`.
    ///
    /// Uses the closed forms: with `A` the sum of prefix products of chain
    /// one up to `i` and `B` the analogue for chain two, the value is `1`
    /// for the empty ideal, `1 + A`, `1 + B`, or `1 + A + B + A*B`.
    pub fn character_sum(&self, spec: IdealSpec, signs: &[i8]) -> Result<i64> {
        if signs.len() != self.n as usize {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: signs.len() as u32,
            });
        }
        let mut mask = 0u64;
        for (index, &value) in signs.iter().enumerate() {
            match value {
                1 => {}
                -1 => mask |= 1 << index,
                _ => return Err(Error::InvalidSign { index, value }),
            }
        }
        self.check_ideal(spec)?;
        Ok(self.character_sum_mask(spec, mask))
    }

    /// Every legal ideal of this poset, the empty ideal included, in a fixed
    /// order: `Empty` first, then chain-two ideals by ascending `j`, then for
    /// each `i` the chain-one ideal followed by the two-chain ideals by
    /// ascending `j`. This is lexicographic in the `(i, j)` indices with an
    /// absent index ordered first.
    pub fn legal_ideals(&self) -> Vec<IdealSpec> {
        let mut specs = vec![IdealSpec::Empty];
        for j in self.m + 1..=self.n {
            specs.push(IdealSpec::ChainTwo(j));
        }
        for i in 1..=self.m {
            specs.push(IdealSpec::ChainOne(i));
            for j in self.m + 1..=self.n {
                specs.push(IdealSpec::Both(i, j));
            }
        }
        specs
    }

    /// Same evaluation with the sign point encoded as a mask: bit `k-1` set
    /// means coordinate `k` is `-1`. Used by the message-enumeration oracle,
    /// where the mask is the message itself.
    ///
    /// The caller must have validated `spec`.
    pub(crate) fn character_sum_mask(&self, spec: IdealSpec, mask: u64) -> i64 {
        let a = |i: u32| prefix_sign_sum(mask, 0, i);
        let b = |j: u32| prefix_sign_sum(mask, self.m, j - self.m);
        match spec {
            IdealSpec::Empty => 1,
            IdealSpec::ChainOne(i) => 1 + a(i),
            IdealSpec::ChainTwo(j) => 1 + b(j),
            IdealSpec::Both(i, j) => {
                let (a, b) = (a(i), b(j));
                1 + a + b + a * b
            }
        }
    }
}

fn prefix_mask(len: u32) -> u64 {
    if len == 0 {
        0
    } else {
        u64::MAX >> (64 - len)
    }
}

/// Sum over `k = 1..=count` of the sign product of bits `offset..offset+k`,
/// where a set bit contributes `-1`.
fn prefix_sign_sum(mask: u64, offset: u32, count: u32) -> i64 {
    let mut sum = 0i64;
    let mut odd = false;
    for k in 0..count {
        odd ^= (mask >> (offset + k)) & 1 == 1;
        sum += if odd { -1 } else { 1 };
    }
    sum
}
