//! Tour of the two-chain poset: the order relation, the down-set census,
//! and the members of an ideal.
//!
//! ```bash
//! cargo run --example poset_down_sets
//! ```

use twochain_codes::{BitVector, IdealSpec, TwoChainPoset};

fn main() -> twochain_codes::Result<()> {
    let p = TwoChainPoset::new(2, 5)?;
    println!(
        "poset: n=5 with chains 1 < 2 and 3 < 4 < 5 (m = {})",
        p.m()
    );

    println!("\nsome order facts:");
    for (a, b) in [(1u32, 2u32), (2, 3), (3, 5), (4, 4)] {
        println!("  {a} <= {b} ? {}", p.leq(a, b)?);
    }

    // Every down-set is a prefix of each chain glued together; filtering
    // all 32 subsets finds exactly those.
    let census: Vec<BitVector> = (0..1u64 << p.n())
        .map(|mask| BitVector::new(p.n(), mask).unwrap())
        .filter(|s| p.is_down_set(s).unwrap())
        .collect();
    println!("\nall {} down-sets of the poset:", census.len());
    for s in &census {
        let support: Vec<String> = s.support().map(|e| e.to_string()).collect();
        println!("  {} = {{{}}}", s, support.join(","));
    }

    // The family of down-sets inside a fixed ideal is what the code
    // construction removes from F2^n.
    let spec = IdealSpec::Both(2, 4);
    println!("\nmembers of the ideal {{1,2,3,4}} (i=2, j=4):");
    for v in p.ideal_members(spec)? {
        println!("  {v}  weight {}", v.weight());
    }
    println!(
        "member count from the closed form: {}",
        p.ideal_member_count(spec)?
    );

    // The generating polynomial of that family, evaluated at sign points.
    let all_plus = vec![1i8; p.n() as usize];
    let mut alternating = vec![1i8; p.n() as usize];
    for k in (0..p.n() as usize).step_by(2) {
        alternating[k] = -1;
    }
    println!(
        "\ncharacter sums: all-plus point -> {}, alternating point -> {}",
        p.character_sum(spec, &all_plus)?,
        p.character_sum(spec, &alternating)?
    );
    Ok(())
}
