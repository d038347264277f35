//! Parameter-space sweeps over every legal `(n, m, ideal)` triple.

use std::io::Write;

use crate::analytic::{analytic_distribution, analytic_params};
use crate::error::{Error, Result};
use crate::griesmer::{classify, OptimalityClass};
use crate::poset::{IdealSpec, TwoChainPoset, MAX_GROUND_SET};
use crate::report::effective_dimension;

/// One sweep line: the analytic parameters and classification of a single
/// instance. `min_distance` is `None` for the zero code (full ideal at
/// n = 2), which also classifies as `Unresolved`.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub n: u32,
    pub m: u32,
    pub spec: IdealSpec,
    pub length: u64,
    pub dimension: u32,
    pub min_distance: Option<u64>,
    pub class: OptimalityClass,
    pub num_weights: usize,
}

/// Evaluates every legal instance with `2 <= n <= n_max` through the
/// closed forms, in lexicographic `(n, m, i, j)` order with absent indices
/// first. `classes`, when given, keeps only rows of those classes.
pub fn sweep_rows(n_max: u32, classes: Option<&[OptimalityClass]>) -> Result<Vec<SweepRow>> {
    if n_max > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            n: n_max,
            max: MAX_GROUND_SET,
        });
    }
    let mut rows = Vec::new();
    for n in 2..=n_max {
        for m in 1..n {
            let p = TwoChainPoset::new(m, n)?;
            for spec in p.legal_ideals() {
                let params = analytic_params(&p, spec)?;
                let dist = analytic_distribution(&p, spec)?;
                let dimension = effective_dimension(n, dist.frequency(0))?;
                let min_distance = dist.min_positive_weight();
                let class = match min_distance {
                    Some(d) => classify(params.length, dimension, d)?.class,
                    None => OptimalityClass::Unresolved,
                };
                if let Some(wanted) = classes {
                    if !wanted.contains(&class) {
                        continue;
                    }
                }
                rows.push(SweepRow {
                    n,
                    m,
                    spec,
                    length: params.length,
                    dimension,
                    min_distance,
                    class,
                    num_weights: dist.weight_count(),
                });
            }
        }
    }
    Ok(rows)
}

/// Writes rows as CSV. The header is always emitted; absent `i`, `j`, or
/// `d` fields render as empty strings.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: &mut W) -> std::io::Result<()> {
    writeln!(out, "n,m,i,j,length,dim,d,class,num_weights")?;
    for row in rows {
        let i = row
            .spec
            .chain_one_prefix()
            .map_or(String::new(), |v| v.to_string());
        let j = row
            .spec
            .chain_two_end()
            .map_or(String::new(), |v| v.to_string());
        let d = row
            .min_distance
            .map_or(String::new(), |v| v.to_string());
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            row.n, row.m, i, j, row.length, row.dimension, d, row.class, row.num_weights
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn csv(n_max: u32, classes: Option<&[OptimalityClass]>) -> String {
        let rows = sweep_rows(n_max, classes).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn row_count_matches_ideal_census() {
        // One row per legal (m, ideal) pair for n in {2, 3}:
        // n=2 gives 4, n=3 gives 6 + 6.
        let rows = sweep_rows(3, None).unwrap();
        assert_eq!(rows.len(), 16);
        let text = csv(3, None);
        assert_eq!(text.lines().count(), 17, "header plus 16 rows");
        assert!(text.starts_with("n,m,i,j,length,dim,d,class,num_weights\n"));
    }

    #[test]
    fn smallest_griesmer_row_is_present() {
        let text = csv(2, None);
        assert!(
            text.contains("2,1,1,,2,2,1,Griesmer,2"),
            "missing [2,2,1] row in:\n{text}"
        );
    }

    #[test]
    fn class_filter_keeps_known_instance() {
        let text = csv(4, Some(&[OptimalityClass::Griesmer]));
        assert!(
            text.contains("4,1,1,,14,4,7,Griesmer,2"),
            "missing [14,4,7] row in:\n{text}"
        );
        for line in text.lines().skip(1) {
            assert!(line.contains("Griesmer"), "unfiltered row: {line}");
            assert!(!line.contains("ByGriesmer"), "unfiltered row: {line}");
        }
    }

    #[test]
    fn zero_code_row_has_empty_distance() {
        let text = csv(2, None);
        assert!(
            text.contains("2,1,1,2,0,0,,Unresolved,0"),
            "missing zero-code row in:\n{text}"
        );
    }

    #[test]
    fn rows_are_lexicographically_ordered() {
        let rows = sweep_rows(5, None).unwrap();
        let keys: Vec<_> = rows
            .iter()
            .map(|r| {
                (
                    r.n,
                    r.m,
                    r.spec.chain_one_prefix(),
                    r.spec.chain_two_end(),
                )
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(
            keys.iter().collect::<std::collections::BTreeSet<_>>().len(),
            keys.len()
        );
    }

    #[test]
    fn sweep_rejects_oversized_range() {
        assert!(matches!(
            sweep_rows(63, None),
            Err(Error::GroundSetTooLarge { .. })
        ));
        assert!(sweep_rows(1, None).unwrap().is_empty());
    }
}
