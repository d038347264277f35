//! Internal consistency suites: closed forms against brute force.
//!
//! Each suite sweeps every legal `(n, m, ideal)` triple in its range and
//! stops at the first failing instance. The exhaustive suites carry
//! internal caps so that large `--n-max` values stay affordable; the cap in
//! effect is part of the suite name.

use crate::analytic::{analytic_distribution, analytic_params};
use crate::code::{
    build_defining_set, generator_matrix, oracle_distribution_charsum,
    oracle_distribution_direct,
};
use crate::error::{Error, Result};
use crate::griesmer::{verify_both_ideal_families, verify_chain_one_families};
use crate::poset::{BitVector, IdealSpec, TwoChainPoset, MAX_GROUND_SET};
use crate::report::effective_dimension;

/// Outcome of one suite: instances checked, and the first failure if any.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: String,
    pub checked: u64,
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Runs all suites up to `n_max` (at least 2, at most 62).
pub fn run_selftest(n_max: u32) -> Result<Vec<SuiteResult>> {
    if n_max > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            n: n_max,
            max: MAX_GROUND_SET,
        });
    }
    if n_max < 2 {
        return Err(Error::InvalidChainSplit { m: 1, n: n_max });
    }
    Ok(vec![
        census_suite(n_max.min(10)),
        character_sum_suite(n_max.min(12)),
        member_structure_suite(n_max.min(12)),
        defining_set_length_suite(n_max.min(14)),
        mass_identity_suite(n_max.min(20)),
        distribution_agreement_suite(n_max.min(16), n_max.min(12)),
        chain_one_family_suite(n_max),
        both_ideal_family_suite(n_max),
    ])
}

fn suite<F>(name: String, body: F) -> SuiteResult
where
    F: FnOnce(&mut u64) -> std::result::Result<(), String>,
{
    let mut checked = 0;
    let failure = body(&mut checked).err();
    SuiteResult {
        name,
        checked,
        failure,
    }
}

fn splits(n_max: u32) -> impl Iterator<Item = (u32, u32)> {
    (2..=n_max).flat_map(|n| (1..n).map(move |m| (m, n)))
}

/// Filtering all subsets through the down-set predicate must recover
/// exactly the prefix-union family.
fn census_suite(n_max: u32) -> SuiteResult {
    suite(format!("down-set census (n <= {n_max})"), |checked| {
        for (m, n) in splits(n_max) {
            let p = TwoChainPoset::new(m, n).map_err(|e| e.to_string())?;
            let census: Vec<u64> = (0..1u64 << n)
                .filter(|&mask| {
                    p.is_down_set(&BitVector::new(n, mask).unwrap())
                        .unwrap()
                })
                .collect();
            let forms: Vec<u64> = p
                .ideal_members(IdealSpec::Both(m, n))
                .map_err(|e| e.to_string())?
                .iter()
                .map(|v| v.mask())
                .collect();
            if census != forms {
                return Err(format!("census mismatch at n={n}, m={m}"));
            }
            *checked += 1;
        }
        Ok(())
    })
}

/// Closed-form character sums must equal the brute member sums at every
/// sign point.
fn character_sum_suite(n_max: u32) -> SuiteResult {
    suite(
        format!("character-sum closed form (n <= {n_max})"),
        |checked| {
            for (m, n) in splits(n_max) {
                let p = TwoChainPoset::new(m, n).map_err(|e| e.to_string())?;
                for spec in p.legal_ideals() {
                    let members = p.ideal_members(spec).map_err(|e| e.to_string())?;
                    for sign_mask in 0..1u64 << n {
                        let brute: i64 = members
                            .iter()
                            .map(|v| {
                                if (v.mask() & sign_mask).count_ones() % 2 == 1 {
                                    -1
                                } else {
                                    1
                                }
                            })
                            .sum();
                        let signs: Vec<i8> = (0..n)
                            .map(|k| if (sign_mask >> k) & 1 == 1 { -1 } else { 1 })
                            .collect();
                        let closed =
                            p.character_sum(spec, &signs).map_err(|e| e.to_string())?;
                        if closed != brute {
                            return Err(format!(
                                "character sum mismatch at n={n}, m={m}, ideal {spec}, \
                                 signs {sign_mask:#b}: closed {closed} vs brute {brute}"
                            ));
                        }
                        *checked += 1;
                    }
                }
            }
            Ok(())
        },
    )
}

/// Member families have the right size, consist of down-sets inside the
/// ideal, and are downward closed.
fn member_structure_suite(n_max: u32) -> SuiteResult {
    suite(format!("ideal member structure (n <= {n_max})"), |checked| {
        for (m, n) in splits(n_max) {
            let p = TwoChainPoset::new(m, n).map_err(|e| e.to_string())?;
            let all_forms = p
                .ideal_members(IdealSpec::Both(m, n))
                .map_err(|e| e.to_string())?;
            for spec in p.legal_ideals() {
                let fail = |what: &str| format!("{what} at n={n}, m={m}, ideal {spec}");
                let members = p.ideal_members(spec).map_err(|e| e.to_string())?;
                if members.len() as u64
                    != p.ideal_member_count(spec).map_err(|e| e.to_string())?
                {
                    return Err(fail("member count"));
                }
                let ideal = p.ideal_support(spec).map_err(|e| e.to_string())?;
                let member_set: std::collections::BTreeSet<u64> =
                    members.iter().map(|v| v.mask()).collect();
                for v in &members {
                    if !p.is_down_set(v).unwrap() {
                        return Err(fail("member is not a down-set"));
                    }
                    if v.mask() & !ideal.mask() != 0 {
                        return Err(fail("member escapes the ideal"));
                    }
                    for form in &all_forms {
                        if form.mask() & !v.mask() == 0
                            && !member_set.contains(&form.mask())
                        {
                            return Err(fail("family is not downward closed"));
                        }
                    }
                }
                *checked += 1;
            }
        }
        Ok(())
    })
}

/// Materialized defining sets have exactly the closed-form length.
fn defining_set_length_suite(n_max: u32) -> SuiteResult {
    suite(format!("defining-set lengths (n <= {n_max})"), |checked| {
        for (m, n) in splits(n_max) {
            let p = TwoChainPoset::new(m, n).map_err(|e| e.to_string())?;
            for spec in p.legal_ideals() {
                let d = build_defining_set(&p, spec).map_err(|e| e.to_string())?;
                let params = analytic_params(&p, spec).map_err(|e| e.to_string())?;
                if d.len() != params.length {
                    return Err(format!(
                        "length mismatch at n={n}, m={m}, ideal {spec}: \
                         materialized {} vs closed form {}",
                        d.len(),
                        params.length
                    ));
                }
                *checked += 1;
            }
        }
        Ok(())
    })
}

/// Closed-form frequencies sum to exactly `2^n`.
fn mass_identity_suite(n_max: u32) -> SuiteResult {
    suite(format!("frequency mass identity (n <= {n_max})"), |checked| {
        for (m, n) in splits(n_max) {
            let p = TwoChainPoset::new(m, n).map_err(|e| e.to_string())?;
            for spec in p.legal_ideals() {
                let dist = analytic_distribution(&p, spec).map_err(|e| e.to_string())?;
                if dist.total() != 1u64 << n {
                    return Err(format!(
                        "mass {} != 2^{n} at n={n}, m={m}, ideal {spec}",
                        dist.total()
                    ));
                }
                *checked += 1;
            }
        }
        Ok(())
    })
}

/// The closed-form distribution, the character-sum oracle, and (within its
/// cap) the direct oracle agree; the generator-matrix rank matches the
/// dimension read off the distribution.
fn distribution_agreement_suite(charsum_max: u32, direct_max: u32) -> SuiteResult {
    suite(
        format!(
            "distribution agreement (charsum n <= {charsum_max}, direct n <= {direct_max})"
        ),
        |checked| {
            for (m, n) in splits(charsum_max) {
                let p = TwoChainPoset::new(m, n).map_err(|e| e.to_string())?;
                for spec in p.legal_ideals() {
                    let fail = |what: &str| format!("{what} at n={n}, m={m}, ideal {spec}");
                    let analytic =
                        analytic_distribution(&p, spec).map_err(|e| e.to_string())?;
                    let charsum =
                        oracle_distribution_charsum(&p, spec).map_err(|e| e.to_string())?;
                    if charsum != analytic {
                        return Err(fail("character-sum oracle disagrees"));
                    }
                    if n <= direct_max {
                        let d = build_defining_set(&p, spec).map_err(|e| e.to_string())?;
                        let direct =
                            oracle_distribution_direct(&d).map_err(|e| e.to_string())?;
                        if direct != analytic {
                            return Err(fail("direct oracle disagrees"));
                        }
                        let dim = effective_dimension(n, analytic.frequency(0))
                            .map_err(|e| e.to_string())?;
                        if generator_matrix(&d).rank() != dim {
                            return Err(fail("rank does not match dimension"));
                        }
                        // The distance column feeding the classifier must be
                        // the oracle minimum.
                        if analytic.min_positive_weight()
                            != direct.min_positive_weight()
                        {
                            return Err(fail("minimum distance disagrees"));
                        }
                    }
                    *checked += 1;
                }
            }
            Ok(())
        },
    )
}

fn chain_one_family_suite(n_max: u32) -> SuiteResult {
    suite(
        format!("optimal families, chain-one ideals (n <= {n_max})"),
        |checked| {
            for n in 2..=n_max {
                for check in verify_chain_one_families(n).map_err(|e| e.to_string())? {
                    if !check.passed() {
                        return Err(format!("n={n}: {}", check.summary()));
                    }
                    *checked += 1;
                }
            }
            Ok(())
        },
    )
}

fn both_ideal_family_suite(n_max: u32) -> SuiteResult {
    suite(
        format!("optimal families, two-chain ideals (n <= {n_max})"),
        |checked| {
            for n in 2..=n_max {
                for check in verify_both_ideal_families(n).map_err(|e| e.to_string())? {
                    if !check.passed() {
                        return Err(format!("n={n}: {}", check.summary()));
                    }
                    *checked += 1;
                }
            }
            Ok(())
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_run_passes() {
        let results = run_selftest(2).unwrap();
        assert_eq!(results.len(), 8);
        for r in &results {
            assert!(r.passed(), "{}: {:?}", r.name, r.failure);
            assert!(r.checked > 0, "{} checked nothing", r.name);
        }
    }

    #[test]
    fn mid_run_covers_flagship_instances() {
        let results = run_selftest(6).unwrap();
        assert!(results.iter().all(|r| r.passed()));
    }

    #[test]
    fn range_validation() {
        assert!(run_selftest(1).is_err());
        assert!(run_selftest(63).is_err());
    }
}
