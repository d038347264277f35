//! Build a generator matrix, show its structure, and verify that encoding
//! a message equals multiplying it into the matrix.
//!
//! ```bash
//! cargo run --example generator_matrix
//! ```

use twochain_codes::{
    build_defining_set, codeword, generator_matrix, BitVector, IdealSpec, TwoChainPoset,
};

fn main() -> twochain_codes::Result<()> {
    let p = TwoChainPoset::new(2, 4)?;
    let spec = IdealSpec::Both(1, 3);
    let d = build_defining_set(&p, spec)?;
    println!(
        "n=4, m=2, ideal {{1,3}}: defining set has {} vectors, {} excluded",
        d.len(),
        d.excluded_len()
    );
    println!("excluded (the ideal family): ");
    for v in d.excluded() {
        println!("  {v}");
    }

    let g = generator_matrix(&d);
    println!(
        "\ngenerator matrix ({} rows x {} columns, rank {}):",
        g.num_rows(),
        g.num_cols(),
        g.rank()
    );
    for r in 0..g.num_rows() {
        println!("  {}", g.row_string(r));
    }

    // Column k of the matrix is the k-th defining vector, so encoding is
    // vector-matrix multiplication over F2.
    let u = BitVector::from_support(4, &[1, 4])?;
    let c = codeword(&u, &d)?;
    println!("\nmessage {u} encodes to {} (weight {})", c.bit_string(), c.weight());

    let path = std::env::temp_dir().join("twochain_generator.txt");
    g.write_to_path(&path)?;
    println!("matrix written to {}", path.display());
    Ok(())
}
