//! Sparse weight distributions over a fixed message space.

use std::collections::BTreeMap;
use std::fmt;

/// Frequencies of codeword weights for a code with `2^n` messages.
///
/// Stored sparsely; the constructed codes have few distinct weights. The
/// total frequency mass of a complete distribution is exactly `2^n`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    n: u32,
    freq: BTreeMap<u64, u64>,
}

impl WeightDistribution {
    pub fn new(n: u32) -> Self {
        Self {
            n,
            freq: BTreeMap::new(),
        }
    }

    /// Message-space exponent `n`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of messages, `2^n`.
    pub fn message_count(&self) -> u64 {
        1u64 << self.n
    }

    /// Adds `count` codewords of the given weight. Zero counts are dropped
    /// so that the map holds only weights that actually occur.
    pub fn add(&mut self, weight: u64, count: u64) {
        if count > 0 {
            *self.freq.entry(weight).or_insert(0) += count;
        }
    }

    pub fn frequency(&self, weight: u64) -> u64 {
        self.freq.get(&weight).copied().unwrap_or(0)
    }

    /// Weight-to-frequency map, ascending by weight.
    pub fn frequencies(&self) -> &BTreeMap<u64, u64> {
        &self.freq
    }

    /// Total frequency mass across all weights.
    pub fn total(&self) -> u64 {
        self.freq.values().sum()
    }

    /// Number of distinct nonzero weights that occur.
    pub fn weight_count(&self) -> usize {
        self.freq.keys().filter(|&&w| w > 0).count()
    }

    /// Smallest weight above zero that occurs, if any.
    pub fn min_positive_weight(&self) -> Option<u64> {
        self.freq.keys().copied().find(|&w| w > 0)
    }

    /// Largest weight that occurs.
    pub fn max_weight(&self) -> Option<u64> {
        self.freq.keys().next_back().copied()
    }

    /// The weight enumerator polynomial as text, ascending powers with the
    /// constant term first, e.g. `1 + 4z^28 + 16z^29`. A unit coefficient on
    /// a positive power is omitted (`z^32`, not `1z^32`).
    pub fn enumerator(&self) -> String {
        let mut terms = Vec::with_capacity(self.freq.len());
        for (&w, &count) in &self.freq {
            if w == 0 {
                terms.push(count.to_string());
            } else if count == 1 {
                terms.push(format!("z^{w}"));
            } else {
                terms.push(format!("{count}z^{w}"));
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightDistribution(n={}, {:?})", self.n, self.freq)
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, (w, count)) in self.freq.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}: {count}")?;
        }
        write!(f, "}}")
    }
}
