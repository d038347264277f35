//! Construct a single code and print the full report, text then JSON.
//!
//! ```bash
//! cargo run --example construct_code
//! cargo run --example construct_code -- 6 4 3 6   # n m i j (i or j may be '-')
//! ```

use std::env;

use twochain_codes::{construct_report, IdealSpec, VerifyMode};

fn main() -> twochain_codes::Result<()> {
    let args: Vec<String> = env::args().skip(1).collect();
    let (n, m, spec) = if args.is_empty() {
        (6, 4, IdealSpec::ChainOne(4))
    } else {
        let n = args[0].parse().expect("n must be a number");
        let m = args[1].parse().expect("m must be a number");
        let i = args.get(2).filter(|s| *s != "-").map(|s| s.parse().unwrap());
        let j = args.get(3).filter(|s| *s != "-").map(|s| s.parse().unwrap());
        let spec = match (i, j) {
            (None, None) => IdealSpec::Empty,
            (Some(i), None) => IdealSpec::ChainOne(i),
            (None, Some(j)) => IdealSpec::ChainTwo(j),
            (Some(i), Some(j)) => IdealSpec::Both(i, j),
        };
        (n, m, spec)
    };

    let report = construct_report(n, m, spec, VerifyMode::Auto)?;
    print!("{}", report.to_text());
    println!("--- JSON ---");
    print!("{}", report.to_json());
    Ok(())
}
