//! The defining-set construction and its exhaustive verification oracles.
//!
//! Given an ideal of the two-chain poset, the defining set `D` is the
//! complement in F2^n of the family of down-sets contained in the ideal.
//! The code maps each message `u` in F2^n to the vector of inner products
//! `u . g` over all `g` in `D`, taken in canonical (ascending integer mask)
//! order.
//!
//! Two independent oracles compute the weight distribution: a direct one
//! that enumerates every codeword by literal inner products, and a
//! character-sum one that derives each weight from the closed-form
//! evaluation over the ideal family. They share no weight routine.

use crate::distribution::WeightDistribution;
use crate::error::{Error, Result};
use crate::poset::{BitVector, IdealSpec, TwoChainPoset};

/// Message-space cap for materializing a defining set (`2^n` vectors).
pub const MATERIALIZE_CAP: u32 = 28;
/// Cap for the direct oracle, which costs on the order of `4^n` bit ops.
pub const DIRECT_ORACLE_CAP: u32 = 14;
/// Cap for the character-sum oracle, which costs `2^n` closed-form
/// evaluations.
pub const CHARSUM_ORACLE_CAP: u32 = 28;

/// The defining set `D`: all vectors of F2^n outside the ideal family, in
/// ascending mask order, together with the excluded members.
#[derive(Clone, Debug)]
pub struct DefiningSet {
    n: u32,
    vectors: Vec<u64>,
    excluded: Vec<u64>,
}

impl DefiningSet {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Code length `|D|`.
    pub fn len(&self) -> u64 {
        self.vectors.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The columns `g_1, ..., g_|D|` as raw masks, ascending.
    pub fn vector_masks(&self) -> &[u64] {
        &self.vectors
    }

    /// The columns as bit vectors, ascending.
    pub fn vectors(&self) -> impl Iterator<Item = BitVector> + '_ {
        let n = self.n;
        self.vectors
            .iter()
            .map(move |&mask| BitVector::new(n, mask).expect("mask within range"))
    }

    /// The ideal members removed from F2^n, ascending.
    pub fn excluded(&self) -> impl Iterator<Item = BitVector> + '_ {
        let n = self.n;
        self.excluded
            .iter()
            .map(move |&mask| BitVector::new(n, mask).expect("mask within range"))
    }

    pub fn excluded_len(&self) -> u64 {
        self.excluded.len() as u64
    }
}

/// Materializes `D` for the given poset and ideal. Capped at `n <= 28`.
pub fn build_defining_set(p: &TwoChainPoset, spec: IdealSpec) -> Result<DefiningSet> {
    p.check_ideal(spec)?;
    if p.n() > MATERIALIZE_CAP {
        return Err(Error::OverCap {
            operation: "defining-set materialization",
            n: p.n(),
            cap: MATERIALIZE_CAP,
        });
    }
    let excluded: Vec<u64> = p
        .ideal_members(spec)?
        .iter()
        .map(|v| v.mask())
        .collect();
    let mut vectors = Vec::with_capacity((p.message_count() - excluded.len() as u64) as usize);
    let mut next = excluded.iter().copied().peekable();
    for mask in 0..p.message_count() {
        if next.peek() == Some(&mask) {
            next.next();
        } else {
            vectors.push(mask);
        }
    }
    Ok(DefiningSet {
        n: p.n(),
        vectors,
        excluded,
    })
}

/// A codeword: a bit vector of length `|D|`, packed into 64-bit words.
#[derive(Clone, PartialEq, Eq)]
pub struct Codeword {
    len: u64,
    words: Vec<u64>,
}

impl Codeword {
    fn zeroed(len: u64) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64) as usize],
        }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bit(&self, k: u64) -> bool {
        (self.words[(k / 64) as usize] >> (k % 64)) & 1 == 1
    }

    fn set_bit(&mut self, k: u64) {
        self.words[(k / 64) as usize] |= 1 << (k % 64);
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Coordinate-wise sum (XOR) with a codeword of the same length.
    pub fn xor(&self, other: &Codeword) -> Result<Codeword> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len as u32,
                got: other.len as u32,
            });
        }
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(Codeword {
            len: self.len,
            words,
        })
    }

    /// Coordinates as a `{0,1}` character string, first coordinate first.
    pub fn bit_string(&self) -> String {
        (0..self.len)
            .map(|k| if self.bit(k) { '1' } else { '0' })
            .collect()
    }
}

impl std::fmt::Debug for Codeword {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Codeword[{}]", self.len)?;
        if self.len <= 64 {
            write!(f, " {}", self.bit_string())?;
        }
        Ok(())
    }
}

/// Encodes a message: coordinate `k` is the inner product of `u` with the
/// `k`-th defining vector in canonical order.
pub fn codeword(u: &BitVector, d: &DefiningSet) -> Result<Codeword> {
    if u.len() != d.n() {
        return Err(Error::LengthMismatch {
            expected: d.n(),
            got: u.len(),
        });
    }
    let mut c = Codeword::zeroed(d.len());
    for (k, &g) in d.vector_masks().iter().enumerate() {
        if (u.mask() & g).count_ones() % 2 == 1 {
            c.set_bit(k as u64);
        }
    }
    Ok(c)
}

/// Weight distribution by full enumeration: every message is encoded by
/// literal inner products and its weight tallied. Capped at `n <= 14`.
pub fn oracle_distribution_direct(d: &DefiningSet) -> Result<WeightDistribution> {
    if d.n() > DIRECT_ORACLE_CAP {
        return Err(Error::OverCap {
            operation: "direct oracle",
            n: d.n(),
            cap: DIRECT_ORACLE_CAP,
        });
    }
    let mut dist = WeightDistribution::new(d.n());
    for mask in 0..1u64 << d.n() {
        let u = BitVector::new(d.n(), mask)?;
        dist.add(codeword(&u, d)?.weight(), 1);
    }
    Ok(dist)
}

/// Weight distribution by full enumeration where each nonzero message's
/// weight comes from the character-sum identity
/// `wt(c_u) = (|D| + S(u)) / 2`, with `S(u)` the closed-form evaluation of
/// the ideal family at the signs of `u`. Capped at `n <= 28`.
///
/// `|D|` itself is obtained from the same closed form at the all-plus point,
/// which counts the family members; the defining set is never materialized.
pub fn oracle_distribution_charsum(
    p: &TwoChainPoset,
    spec: IdealSpec,
) -> Result<WeightDistribution> {
    p.check_ideal(spec)?;
    if p.n() > CHARSUM_ORACLE_CAP {
        return Err(Error::OverCap {
            operation: "character-sum oracle",
            n: p.n(),
            cap: CHARSUM_ORACLE_CAP,
        });
    }
    let members = p.character_sum_mask(spec, 0);
    let code_len = p.message_count() as i64 - members;
    let mut dist = WeightDistribution::new(p.n());
    dist.add(0, 1); // the zero message
    for mask in 1..p.message_count() {
        let s = p.character_sum_mask(spec, mask);
        let doubled = code_len + s;
        debug_assert!(doubled >= 0 && doubled % 2 == 0);
        dist.add((doubled / 2) as u64, 1);
    }
    Ok(dist)
}

/// Generator matrix of the code: `n` rows, one column per defining vector.
/// Row `r`, column `k` is bit `r` of `g_k`. Stored column-major; each column
/// is the defining vector itself.
#[derive(Clone, Debug)]
pub struct GeneratorMatrix {
    rows: u32,
    cols: Vec<u64>,
}

impl GeneratorMatrix {
    /// Builds a matrix from explicit `{0,1}` rows (all the same length).
    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let height = rows.len() as u32;
        if height > 64 {
            return Err(Error::GroundSetTooLarge {
                n: height,
                max: 64,
            });
        }
        let width = rows.first().map_or(0, |r| r.len());
        let mut cols = vec![0u64; width];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::LengthMismatch {
                    expected: width as u32,
                    got: row.len() as u32,
                });
            }
            for (k, &entry) in row.iter().enumerate() {
                match entry {
                    0 => {}
                    1 => cols[k] |= 1 << r,
                    _ => {
                        return Err(Error::MatrixEntry {
                            row: r,
                            col: k,
                            value: entry,
                        })
                    }
                }
            }
        }
        Ok(Self { rows: height, cols })
    }

    pub fn num_rows(&self) -> u32 {
        self.rows
    }

    pub fn num_cols(&self) -> u64 {
        self.cols.len() as u64
    }

    pub fn bit(&self, row: u32, col: usize) -> bool {
        (self.cols[col] >> row) & 1 == 1
    }

    /// Row `r` as a `{0,1}` character string, column order preserved.
    pub fn row_string(&self, row: u32) -> String {
        self.cols
            .iter()
            .map(|&c| if (c >> row) & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Writes the matrix as text: one line per row, `{0,1}` characters, a
    /// trailing newline on every line.
    pub fn write_rows<W: std::io::Write>(&self, out: &mut W) -> std::io::Result<()> {
        for r in 0..self.rows {
            out.write_all(self.row_string(r).as_bytes())?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    /// Writes the row text to a file at `path`.
    pub fn write_to_path(&self, path: &std::path::Path) -> Result<()> {
        let wrap = |source: std::io::Error| Error::Io {
            path: path.to_path_buf(),
            source,
        };
        let file = std::fs::File::create(path).map_err(wrap)?;
        let mut out = std::io::BufWriter::new(file);
        self.write_rows(&mut out).map_err(wrap)?;
        use std::io::Write;
        out.flush().map_err(wrap)
    }

    /// Rank over F2 by Gaussian elimination on the columns (column rank
    /// equals row rank).
    pub fn rank(&self) -> u32 {
        let mut basis: Vec<u64> = Vec::with_capacity(self.rows as usize);
        let mut rank = 0;
        for &col in &self.cols {
            let mut x = col;
            for &b in &basis {
                x = x.min(x ^ b);
            }
            if x != 0 {
                basis.push(x);
                basis.sort_unstable_by(|a, b| b.cmp(a));
                rank += 1;
            }
        }
        rank
    }
}

/// Rank of a matrix over F2.
pub fn f2_rank(m: &GeneratorMatrix) -> u32 {
    m.rank()
}

/// Builds the generator matrix of the code defined by `d`.
pub fn generator_matrix(d: &DefiningSet) -> GeneratorMatrix {
    GeneratorMatrix {
        rows: d.n(),
        cols: d.vector_masks().to_vec(),
    }
}

/// Minimum distance of a linear code from its weight distribution: the
/// smallest positive weight that occurs. Errors on the zero code.
pub fn min_distance(dist: &WeightDistribution) -> Result<u64> {
    dist.min_positive_weight().ok_or(Error::ZeroCode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(m: u32, n: u32, spec: IdealSpec) -> (TwoChainPoset, DefiningSet) {
        let p = TwoChainPoset::new(m, n).unwrap();
        let d = build_defining_set(&p, spec).unwrap();
        (p, d)
    }

    #[test]
    fn defining_set_sizes() {
        let (_, d) = setup(4, 6, IdealSpec::ChainOne(4));
        assert_eq!(d.len(), 59);
        let (_, d) = setup(4, 6, IdealSpec::Both(3, 6));
        assert_eq!(d.len(), 52);
        let (_, d) = setup(1, 2, IdealSpec::Empty);
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn defining_set_partitions_the_space() {
        for n in 2..=6u32 {
            for m in 1..n {
                let p = TwoChainPoset::new(m, n).unwrap();
                for spec in p.legal_ideals() {
                    let d = build_defining_set(&p, spec).unwrap();
                    let mut all: Vec<u64> = d.vector_masks().to_vec();
                    all.extend(d.excluded().map(|v| v.mask()));
                    all.sort_unstable();
                    let expected: Vec<u64> = (0..1u64 << n).collect();
                    assert_eq!(all, expected, "m={m} n={n} {spec}");
                    assert_eq!(d.len() + d.excluded_len(), 1 << n);
                }
            }
        }
    }

    #[test]
    fn canonical_order_is_strictly_ascending() {
        let (_, d) = setup(4, 6, IdealSpec::Both(3, 6));
        assert!(d.vector_masks().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn materialization_cap() {
        let p = TwoChainPoset::new(10, 30).unwrap();
        assert!(matches!(
            build_defining_set(&p, IdealSpec::ChainOne(1)),
            Err(Error::OverCap { cap: 28, .. })
        ));
    }

    #[test]
    fn smallest_code_by_hand() {
        // m=1, n=2, ideal {1}: excluded {(0,0), (1,0)}, defining set
        // {(0,1), (1,1)}.
        let (_, d) = setup(1, 2, IdealSpec::ChainOne(1));
        assert_eq!(d.vector_masks(), &[2, 3]);
        let u = BitVector::new(2, 0b01).unwrap(); // (1,0)
        let c = codeword(&u, &d).unwrap();
        assert_eq!(c.bit_string(), "01");
        assert_eq!(c.weight(), 1);
    }

    #[test]
    fn zero_message_maps_to_zero() {
        let (_, d) = setup(4, 6, IdealSpec::ChainOne(4));
        let c = codeword(&BitVector::zero(6), &d).unwrap();
        assert_eq!(c.weight(), 0);
        assert_eq!(c.len(), 59);
    }

    #[test]
    fn codeword_rejects_wrong_message_length() {
        let (_, d) = setup(4, 6, IdealSpec::ChainOne(4));
        assert!(matches!(
            codeword(&BitVector::zero(5), &d),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn direct_oracle_small_instances() {
        let (_, d) = setup(1, 2, IdealSpec::ChainOne(1));
        let dist = oracle_distribution_direct(&d).unwrap();
        assert_eq!(dist.to_string(), "{0: 1, 1: 2, 2: 1}");

        let (_, d) = setup(4, 6, IdealSpec::ChainOne(4));
        let dist = oracle_distribution_direct(&d).unwrap();
        assert_eq!(
            dist.to_string(),
            "{0: 1, 28: 4, 29: 16, 30: 24, 31: 16, 32: 3}"
        );
    }

    #[test]
    fn empty_ideal_gives_one_weight_code() {
        for n in 3..=4u32 {
            let (_, d) = setup(1, n, IdealSpec::Empty);
            let dist = oracle_distribution_direct(&d).unwrap();
            assert_eq!(dist.frequency(0), 1);
            assert_eq!(dist.frequency(1 << (n - 1)), (1 << n) - 1);
            assert_eq!(dist.weight_count(), 1);
        }
    }

    #[test]
    fn charsum_oracle_small_instances() {
        let p = TwoChainPoset::new(4, 6).unwrap();
        let dist = oracle_distribution_charsum(&p, IdealSpec::Both(3, 6)).unwrap();
        assert_eq!(
            dist.to_string(),
            "{0: 1, 23: 2, 24: 2, 25: 10, 26: 24, 27: 14, 28: 4, 29: 6, 32: 1}"
        );
        assert_eq!(dist.frequency(0), 1);

        let p = TwoChainPoset::new(1, 2).unwrap();
        let dist = oracle_distribution_charsum(&p, IdealSpec::ChainOne(1)).unwrap();
        assert_eq!(dist.to_string(), "{0: 1, 1: 2, 2: 1}");
    }

    #[test]
    fn oracles_agree_on_a_small_sweep() {
        for n in 2..=7u32 {
            for m in 1..n {
                let p = TwoChainPoset::new(m, n).unwrap();
                for spec in p.legal_ideals() {
                    let d = build_defining_set(&p, spec).unwrap();
                    let direct = oracle_distribution_direct(&d).unwrap();
                    let charsum = oracle_distribution_charsum(&p, spec).unwrap();
                    assert_eq!(direct, charsum, "m={m} n={n} {spec}");
                    assert_eq!(direct.total(), 1u64 << n);
                }
            }
        }
    }

    #[test]
    fn direct_oracle_tallies_merge_across_partitions() {
        // Tallying disjoint message ranges and merging must equal the full
        // enumeration.
        let (_, d) = setup(4, 6, IdealSpec::Both(3, 6));
        let full = oracle_distribution_direct(&d).unwrap();
        let mut merged = WeightDistribution::new(6);
        for range in [0..32u64, 32..64u64] {
            for mask in range {
                let u = BitVector::new(6, mask).unwrap();
                merged.add(codeword(&u, &d).unwrap().weight(), 1);
            }
        }
        assert_eq!(full, merged);
    }

    #[test]
    fn generator_matrix_transcription() {
        let (_, d) = setup(1, 2, IdealSpec::ChainOne(1));
        let g = generator_matrix(&d);
        assert_eq!(g.num_rows(), 2);
        assert_eq!(g.num_cols(), 2);
        assert_eq!(g.row_string(0), "01");
        assert_eq!(g.row_string(1), "11");
        let mut buf = Vec::new();
        g.write_rows(&mut buf).unwrap();
        assert_eq!(buf, b"01\n11\n");
    }

    #[test]
    fn simplex_generator_has_all_nonzero_columns() {
        let (_, d) = setup(1, 3, IdealSpec::Empty);
        let g = generator_matrix(&d);
        assert_eq!(g.num_cols(), 7);
        let mut cols: Vec<u64> = (0..7).map(|k| {
            (0..3).fold(0u64, |acc, r| acc | ((g.bit(r, k) as u64) << r))
        }).collect();
        cols.sort_unstable();
        assert_eq!(cols, vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(g.rank(), 3);
    }

    #[test]
    fn rank_examples() {
        let identity = GeneratorMatrix::from_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(f2_rank(&identity), 3);

        let (_, d) = setup(4, 6, IdealSpec::ChainOne(4));
        assert_eq!(generator_matrix(&d).rank(), 6);

        let dup = GeneratorMatrix::from_rows(&[&[1, 0, 1], &[1, 0, 1], &[0, 1, 1]]).unwrap();
        let without = GeneratorMatrix::from_rows(&[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        assert_eq!(dup.rank(), without.rank());
        assert_eq!(dup.rank(), 2);
    }

    #[test]
    fn row_space_has_full_size() {
        // The 6x59 matrix spans 2^6 distinct row combinations.
        let (_, d) = setup(4, 6, IdealSpec::ChainOne(4));
        let g = generator_matrix(&d);
        let rows: Vec<Vec<u64>> = (0..6)
            .map(|r| {
                (0..59usize)
                    .map(|k| g.bit(r, k) as u64)
                    .collect()
            })
            .collect();
        let mut span = std::collections::BTreeSet::new();
        for combo in 0..64u32 {
            let mut v = vec![0u64; 59];
            for (r, row) in rows.iter().enumerate() {
                if (combo >> r) & 1 == 1 {
                    for (a, b) in v.iter_mut().zip(row) {
                        *a ^= b;
                    }
                }
            }
            span.insert(v);
        }
        assert_eq!(span.len(), 64);
    }

    #[test]
    fn codeword_equals_message_times_matrix() {
        let (_, d) = setup(2, 5, IdealSpec::Both(2, 4));
        let g = generator_matrix(&d);
        for mask in 0..32u64 {
            let u = BitVector::new(5, mask).unwrap();
            let c = codeword(&u, &d).unwrap();
            for k in 0..g.num_cols() as usize {
                let mut acc = false;
                for r in 0..5 {
                    acc ^= ((mask >> r) & 1 == 1) && g.bit(r, k);
                }
                assert_eq!(c.bit(k as u64), acc);
            }
        }
    }

    #[test]
    fn min_distance_values() {
        let (_, d) = setup(4, 6, IdealSpec::ChainOne(4));
        let dist = oracle_distribution_direct(&d).unwrap();
        assert_eq!(min_distance(&dist).unwrap(), 28);

        let (_, d) = setup(4, 6, IdealSpec::Both(3, 6));
        let dist = oracle_distribution_direct(&d).unwrap();
        assert_eq!(min_distance(&dist).unwrap(), 23);

        let (_, d) = setup(1, 3, IdealSpec::Empty);
        let dist = oracle_distribution_direct(&d).unwrap();
        assert_eq!(min_distance(&dist).unwrap(), 4);
    }

    #[test]
    fn zero_code_has_no_min_distance() {
        // The full ideal at n=2 removes every vector: a length-0 code.
        let (_, d) = setup(1, 2, IdealSpec::Both(1, 2));
        assert_eq!(d.len(), 0);
        let dist = oracle_distribution_direct(&d).unwrap();
        assert_eq!(dist.to_string(), "{0: 4}");
        assert!(matches!(min_distance(&dist), Err(Error::ZeroCode)));
    }

    #[test]
    fn direct_oracle_cap() {
        let p = TwoChainPoset::new(7, 15).unwrap();
        let err = oracle_distribution_direct(&build_defining_set(&p, IdealSpec::Empty).unwrap());
        assert!(matches!(err, Err(Error::OverCap { cap: 14, .. })));
    }
}
