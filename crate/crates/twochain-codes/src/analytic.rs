//! Closed-form code parameters and weight distributions.
//!
//! For each ideal shape the code's length and full weight distribution have
//! closed forms, so parameters for any `n` up to the 62-bit limit come out
//! of pure integer arithmetic with no enumeration:
//!
//! * chain-one ideal of size `i`: length `2^n - i - 1`, weights
//!   `2^(n-1) - i + s` for `0 <= s < i` with frequency `2^(n-i) * C(i, s)`,
//!   plus `2^(n-1)` with frequency `2^(n-i) - 1`;
//! * chain-two ideal ending at `j`: the same with `j - m` in place of `i`;
//! * two-chain ideal `(i, j)` with `q = j - m`: length
//!   `2^n + m - i - j - 1 - i*q`, cell weights
//!   `2^(n-1) + s + t + 2st - (s+1)q - (t+1)i` over `0 <= s <= i`,
//!   `0 <= t <= q`, `(s, t) != (i, q)`, each with frequency
//!   `2^(n-i-q) * C(i, s) * C(q, t)`, plus `2^(n-1)` with frequency
//!   `2^(n-i-q) - 1`. Cells with equal weights are aggregated.
//! * empty ideal: the one-weight code of length `2^n - 1`, every nonzero
//!   message at weight `2^(n-1)`.
//!
//! The zero message always contributes weight 0 with frequency 1, and the
//! total mass is exactly `2^n`.

use crate::distribution::WeightDistribution;
use crate::error::Result;
use crate::poset::{IdealSpec, TwoChainPoset};

/// Which closed-form family produced a set of parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalyticCase {
    /// Ideal is a prefix of chain one.
    ChainOne,
    /// Ideal is a prefix of chain two.
    ChainTwo,
    /// Ideal spans both chains.
    Both,
    /// Empty ideal; the one-weight simplex-style code (an extension of the
    /// three standard shapes).
    Simplex,
}

/// Closed-form code parameters `[length, dimension]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalyticCodeParams {
    pub length: u64,
    pub dimension: u32,
    pub case: AnalyticCase,
}

/// Length and dimension from the closed forms.
pub fn analytic_params(p: &TwoChainPoset, spec: IdealSpec) -> Result<AnalyticCodeParams> {
    p.check_ideal(spec)?;
    let n = p.n();
    let two_n = 1u64 << n;
    let (length, case) = match spec {
        IdealSpec::Empty => (two_n - 1, AnalyticCase::Simplex),
        IdealSpec::ChainOne(i) => (two_n - i as u64 - 1, AnalyticCase::ChainOne),
        IdealSpec::ChainTwo(j) => (two_n + p.m() as u64 - j as u64 - 1, AnalyticCase::ChainTwo),
        IdealSpec::Both(i, j) => {
            let (i, j, m) = (i as u64, j as u64, p.m() as u64);
            (two_n + m - i - j - 1 - i * (j - m), AnalyticCase::Both)
        }
    };
    Ok(AnalyticCodeParams {
        length,
        dimension: n,
        case,
    })
}

/// Full weight distribution from the closed forms. Exact for every legal
/// ideal, the degenerate small instances included.
pub fn analytic_distribution(p: &TwoChainPoset, spec: IdealSpec) -> Result<WeightDistribution> {
    p.check_ideal(spec)?;
    let n = p.n();
    let half = 1u64 << (n - 1);
    let mut dist = WeightDistribution::new(n);
    dist.add(0, 1);
    match spec {
        IdealSpec::Empty => {
            dist.add(half, (1u64 << n) - 1);
        }
        IdealSpec::ChainOne(i) => {
            single_prefix_rows(&mut dist, n, i);
        }
        IdealSpec::ChainTwo(j) => {
            single_prefix_rows(&mut dist, n, j - p.m());
        }
        IdealSpec::Both(i, j) => {
            let q = j - p.m();
            let base = 1u64 << (n - i - q);
            for s in 0..=i {
                for t in 0..=q {
                    if (s, t) == (i, q) {
                        continue;
                    }
                    let w = half as i64
                        + s as i64
                        + t as i64
                        + 2 * (s as i64) * (t as i64)
                        - (s as i64 + 1) * q as i64
                        - (t as i64 + 1) * i as i64;
                    debug_assert!(w >= 0, "cell weight underflow at ({s}, {t})");
                    dist.add(w as u64, base * binomial(i, s) * binomial(q, t));
                }
            }
            dist.add(half, base - 1);
        }
    }
    Ok(dist)
}

/// Rows for an ideal that is a single chain prefix of size `r`: weights
/// `2^(n-1) - r + s` for `s < r`, plus the `2^(n-1)` row.
fn single_prefix_rows(dist: &mut WeightDistribution, n: u32, r: u32) {
    let half = 1u64 << (n - 1);
    let base = 1u64 << (n - r);
    for s in 0..r {
        dist.add(half - r as u64 + s as u64, base * binomial(r, s));
    }
    dist.add(half, base - 1);
}

/// Binomial coefficient; exact for all arguments that arise (`r <= 62`).
fn binomial(r: u32, k: u32) -> u64 {
    if k > r {
        return 0;
    }
    let k = k.min(r - k);
    let mut acc: u128 = 1;
    for step in 0..k {
        acc = acc * (r - step) as u128 / (step + 1) as u128;
    }
    acc as u64
}
