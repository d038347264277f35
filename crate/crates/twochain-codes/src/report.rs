//! Full code reports: construction, verification, and rendering.
//!
//! A report carries the parameters, the weight distribution with its
//! enumerator text, the Griesmer classification, and how far the analytic
//! results were verified. JSON field order is fixed by the struct, map keys
//! are ascending weights, and a parallel sorted weight array pins the
//! ordering for consumers that reorder object keys.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analytic::analytic_distribution;
use crate::analytic::analytic_params;
use crate::code::{
    build_defining_set, generator_matrix, min_distance, oracle_distribution_charsum,
    oracle_distribution_direct, CHARSUM_ORACLE_CAP, DIRECT_ORACLE_CAP,
};
use crate::error::{Error, Result};
use crate::griesmer::{classify, Classification};
use crate::poset::{IdealSpec, TwoChainPoset};

/// How much verification to run on top of the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Strongest verification the caps allow: both oracles for `n <= 14`,
    /// the character-sum oracle for `n <= 28`, none beyond.
    Auto,
    /// Closed forms only.
    None,
    /// Character-sum oracle plus a generator-matrix rank check.
    Charsum,
    /// Direct inner-product oracle plus a generator-matrix rank check.
    Direct,
}

impl FromStr for VerifyMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(Self::Auto),
            "none" => Ok(Self::None),
            "charsum" => Ok(Self::Charsum),
            "direct" => Ok(Self::Direct),
            other => Err(format!(
                "unknown verify mode '{other}' (expected auto, none, charsum, or direct)"
            )),
        }
    }
}

/// How far a report's figures were independently verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerificationLevel {
    #[serde(rename = "analytic-only")]
    AnalyticOnly,
    #[serde(rename = "charsum-checked")]
    CharsumChecked,
    #[serde(rename = "direct-checked")]
    DirectChecked,
}

impl fmt::Display for VerificationLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerificationLevel::AnalyticOnly => "analytic-only",
            VerificationLevel::CharsumChecked => "charsum-checked",
            VerificationLevel::DirectChecked => "direct-checked",
        };
        f.write_str(s)
    }
}

/// The ideal in report form: the prefix indices that are present, or the
/// keyword `"empty"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealDescriptor {
    Keyword(String),
    Indices {
        #[serde(skip_serializing_if = "Option::is_none")]
        i: Option<u32>,
        #[serde(skip_serializing_if = "Option::is_none")]
        j: Option<u32>,
    },
}

impl From<IdealSpec> for IdealDescriptor {
    fn from(spec: IdealSpec) -> Self {
        match spec {
            IdealSpec::Empty => IdealDescriptor::Keyword("empty".to_string()),
            IdealSpec::ChainOne(i) => IdealDescriptor::Indices {
                i: Some(i),
                j: None,
            },
            IdealSpec::ChainTwo(j) => IdealDescriptor::Indices {
                i: None,
                j: Some(j),
            },
            IdealSpec::Both(i, j) => IdealDescriptor::Indices {
                i: Some(i),
                j: Some(j),
            },
        }
    }
}

/// Everything known about one constructed code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub n: u32,
    pub m: u32,
    pub ideal: IdealDescriptor,
    pub length: u64,
    pub dimension: u32,
    pub min_distance: u64,
    pub weight_distribution: BTreeMap<u64, u64>,
    pub weights_sorted: Vec<u64>,
    pub weight_enumerator: String,
    pub optimality: Classification,
    pub verified: VerificationLevel,
    pub extension_flag: bool,
}

impl CodeReport {
    /// Pretty JSON with a trailing newline. Deterministic: struct field
    /// order, ascending numeric map keys.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Human-readable rendering. The first line carries the parameter
    /// triple `[length, dimension, min distance]`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "code: [{}, {}, {}]\n",
            self.length, self.dimension, self.min_distance
        ));
        out.push_str(&format!(
            "poset: n={}, m={} (chains 1..{} and {}..{})\n",
            self.n,
            self.m,
            self.m,
            self.m + 1,
            self.n
        ));
        let ideal = match &self.ideal {
            IdealDescriptor::Keyword(word) => word.clone(),
            IdealDescriptor::Indices { i, j } => {
                let mut parts = Vec::new();
                if let Some(i) = i {
                    parts.push(format!("i={i}"));
                }
                if let Some(j) = j {
                    parts.push(format!("j={j}"));
                }
                parts.join(", ")
            }
        };
        if self.extension_flag {
            out.push_str(&format!("ideal: {ideal} (extension)\n"));
        } else {
            out.push_str(&format!("ideal: {ideal}\n"));
        }
        let dist = self
            .weight_distribution
            .iter()
            .map(|(w, c)| format!("{w}: {c}"))
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!("weight distribution: {{{dist}}}\n"));
        out.push_str(&format!("weight enumerator: {}\n", self.weight_enumerator));
        out.push_str(&format!("optimality: {}\n", self.optimality.class));
        out.push_str(&format!("  {}\n", self.optimality.rationale));
        out.push_str(&format!("verified: {}\n", self.verified));
        out
    }
}

/// Builds the code for `(n, m, ideal)`, verifies it per `verify`, and
/// assembles the report.
///
/// Verification compares the closed-form distribution against the selected
/// oracle(s) exactly and checks the generator-matrix rank against the
/// dimension read off the distribution; any disagreement is an error. The
/// zero code (full ideal at n = 2) has no minimum distance and is rejected.
pub fn construct_report(
    n: u32,
    m: u32,
    spec: IdealSpec,
    verify: VerifyMode,
) -> Result<CodeReport> {
    let p = TwoChainPoset::new(m, n)?;
    p.check_ideal(spec)?;

    let params = analytic_params(&p, spec)?;
    let dist = analytic_distribution(&p, spec)?;
    if dist.total() != p.message_count() {
        return Err(Error::VerificationMismatch(format!(
            "frequency mass {} != {} for n={n}, m={m}, ideal {spec}",
            dist.total(),
            p.message_count()
        )));
    }
    let d_min = min_distance(&dist)?;
    let dimension = effective_dimension(n, dist.frequency(0))?;

    let (run_charsum, run_direct) = match verify {
        VerifyMode::None => (false, false),
        VerifyMode::Charsum => {
            if n > CHARSUM_ORACLE_CAP {
                return Err(Error::OverCap {
                    operation: "character-sum verification",
                    n,
                    cap: CHARSUM_ORACLE_CAP,
                });
            }
            (true, false)
        }
        VerifyMode::Direct => {
            if n > DIRECT_ORACLE_CAP {
                return Err(Error::OverCap {
                    operation: "direct verification",
                    n,
                    cap: DIRECT_ORACLE_CAP,
                });
            }
            (false, true)
        }
        VerifyMode::Auto => (n <= CHARSUM_ORACLE_CAP, n <= DIRECT_ORACLE_CAP),
    };

    let mut level = VerificationLevel::AnalyticOnly;
    if run_charsum {
        let oracle = oracle_distribution_charsum(&p, spec)?;
        if oracle != dist {
            return Err(Error::VerificationMismatch(format!(
                "character-sum oracle disagrees for n={n}, m={m}, ideal {spec}: \
                 oracle {oracle} vs closed form {dist}"
            )));
        }
        level = VerificationLevel::CharsumChecked;
    }
    if run_charsum || run_direct {
        let d = build_defining_set(&p, spec)?;
        if d.len() != params.length {
            return Err(Error::VerificationMismatch(format!(
                "defining set size {} != closed-form length {} for n={n}, m={m}, ideal {spec}",
                d.len(),
                params.length
            )));
        }
        if run_direct {
            let oracle = oracle_distribution_direct(&d)?;
            if oracle != dist {
                return Err(Error::VerificationMismatch(format!(
                    "direct oracle disagrees for n={n}, m={m}, ideal {spec}: \
                     oracle {oracle} vs closed form {dist}"
                )));
            }
            level = VerificationLevel::DirectChecked;
        }
        // Rank certifies the dimension whenever any oracle ran.
        let rank = generator_matrix(&d).rank();
        if rank != dimension {
            return Err(Error::VerificationMismatch(format!(
                "generator matrix rank {rank} != dimension {dimension} for n={n}, m={m}, \
                 ideal {spec}"
            )));
        }
    }

    let optimality = classify(params.length, dimension, d_min)?;
    Ok(CodeReport {
        n,
        m,
        ideal: spec.into(),
        length: params.length,
        dimension,
        min_distance: d_min,
        weight_distribution: dist.frequencies().clone(),
        weights_sorted: dist.frequencies().keys().copied().collect(),
        weight_enumerator: dist.enumerator(),
        optimality,
        verified: level,
        extension_flag: spec.is_empty(),
    })
}

/// Dimension read off the distribution: `freq(0)` counts the messages in
/// the kernel of the encoding map, so it is `2^(n - dimension)`.
pub(crate) fn effective_dimension(n: u32, zero_freq: u64) -> Result<u32> {
    if zero_freq == 0 || !zero_freq.is_power_of_two() {
        return Err(Error::VerificationMismatch(format!(
            "zero-weight frequency {zero_freq} is not a power of two"
        )));
    }
    Ok(n - zero_freq.trailing_zeros())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::griesmer::OptimalityClass;

    #[test]
    fn flagship_report_text() {
        let report =
            construct_report(6, 4, IdealSpec::ChainOne(4), VerifyMode::Auto).unwrap();
        let text = report.to_text();
        assert!(text.contains("code: [59, 6, 28]"));
        assert!(text
            .contains("weight enumerator: 1 + 4z^28 + 16z^29 + 24z^30 + 16z^31 + 3z^32"));
        assert_eq!(report.verified, VerificationLevel::DirectChecked);
        assert_eq!(report.optimality.class, OptimalityClass::AlmostOptimalByGriesmer);
        assert!(!report.extension_flag);
        assert_eq!(report.weights_sorted, vec![0, 28, 29, 30, 31, 32]);
    }

    #[test]
    fn second_flagship_report() {
        let report =
            construct_report(6, 4, IdealSpec::Both(3, 6), VerifyMode::Auto).unwrap();
        assert_eq!(
            (report.length, report.dimension, report.min_distance),
            (52, 6, 23)
        );
        assert_eq!(
            report.weight_enumerator,
            "1 + 2z^23 + 2z^24 + 10z^25 + 24z^26 + 14z^27 + 4z^28 + 6z^29 + z^32"
        );
    }

    #[test]
    fn empty_ideal_report_is_flagged() {
        let report = construct_report(2, 1, IdealSpec::Empty, VerifyMode::Auto).unwrap();
        assert_eq!(
            (report.length, report.dimension, report.min_distance),
            (3, 2, 2)
        );
        assert!(report.extension_flag);
        assert_eq!(report.optimality.class, OptimalityClass::Griesmer);
        assert!(report.to_text().contains("ideal: empty (extension)"));
    }

    #[test]
    fn json_round_trips_byte_identical() {
        for (n, m, spec) in [
            (6, 4, IdealSpec::ChainOne(4)),
            (6, 4, IdealSpec::Both(3, 6)),
            (5, 2, IdealSpec::ChainTwo(4)),
            (3, 1, IdealSpec::Empty),
        ] {
            let report = construct_report(n, m, spec, VerifyMode::Auto).unwrap();
            let json = report.to_json();
            let parsed: CodeReport = serde_json::from_str(&json).unwrap();
            assert_eq!(parsed, report);
            assert_eq!(parsed.to_json(), json);
        }
    }

    #[test]
    fn degenerate_instance_reports_true_dimension() {
        let report =
            construct_report(3, 2, IdealSpec::Both(2, 3), VerifyMode::Auto).unwrap();
        assert_eq!(report.dimension, 2);
        assert_eq!(report.length, 2);
        assert_eq!(report.min_distance, 1);
        assert_eq!(report.optimality.class, OptimalityClass::Griesmer);
    }

    #[test]
    fn zero_code_is_rejected() {
        assert!(matches!(
            construct_report(2, 1, IdealSpec::Both(1, 2), VerifyMode::Auto),
            Err(Error::ZeroCode)
        ));
    }

    #[test]
    fn explicit_modes_respect_caps() {
        assert!(matches!(
            construct_report(15, 7, IdealSpec::ChainOne(1), VerifyMode::Direct),
            Err(Error::OverCap { cap: 14, .. })
        ));
        assert!(matches!(
            construct_report(29, 7, IdealSpec::ChainOne(1), VerifyMode::Charsum),
            Err(Error::OverCap { cap: 28, .. })
        ));
        // Auto degrades instead of failing.
        let report =
            construct_report(15, 7, IdealSpec::ChainOne(1), VerifyMode::Auto).unwrap();
        assert_eq!(report.verified, VerificationLevel::CharsumChecked);
        let report =
            construct_report(33, 7, IdealSpec::ChainOne(1), VerifyMode::None).unwrap();
        assert_eq!(report.verified, VerificationLevel::AnalyticOnly);
        assert_eq!(report.dimension, 33);
    }

    #[test]
    fn effective_dimension_math() {
        assert_eq!(effective_dimension(6, 1).unwrap(), 6);
        assert_eq!(effective_dimension(3, 2).unwrap(), 2);
        assert_eq!(effective_dimension(2, 4).unwrap(), 0);
        assert!(effective_dimension(4, 3).is_err());
        assert!(effective_dimension(4, 0).is_err());
    }

    #[test]
    fn verify_mode_parses() {
        assert_eq!("auto".parse::<VerifyMode>().unwrap(), VerifyMode::Auto);
        assert_eq!("CHARSUM".parse::<VerifyMode>().unwrap(), VerifyMode::Charsum);
        assert!("magma".parse::<VerifyMode>().is_err());
    }
}
