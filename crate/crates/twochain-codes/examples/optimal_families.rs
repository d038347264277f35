//! The two families of codes whose Griesmer classes are verified across a
//! whole range of sizes: chain-one ideals with i = 1, 2, 3 and two-chain
//! ideals on the split m = 2.
//!
//! ```bash
//! cargo run --example optimal_families -- 12
//! ```

use std::env;

use twochain_codes::{verify_both_ideal_families, verify_chain_one_families};

fn main() -> twochain_codes::Result<()> {
    let n_max: u32 = env::args()
        .nth(1)
        .map(|s| s.parse().expect("n-max must be a number"))
        .unwrap_or(10);

    println!("chain-one ideal families (length 2^n - i - 1, distance 2^(n-1) - i):");
    for n in 2..=n_max {
        println!("n = {n}");
        for check in verify_chain_one_families(n)? {
            println!("  {}", check.summary());
        }
    }

    println!("\ntwo-chain ideal families on m = 2:");
    for n in 3..=n_max {
        println!("n = {n}");
        for check in verify_both_ideal_families(n)? {
            println!("  {}", check.summary());
        }
    }
    Ok(())
}
