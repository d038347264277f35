//! Enumerate every legal instance as CSV, optionally filtered by class.
//!
//! ```bash
//! cargo run --example sweep_csv -- 6
//! cargo run --example sweep_csv -- 8 griesmer
//! ```

use std::env;
use std::io::Write;

use twochain_codes::{sweep_rows, write_csv, OptimalityClass};

fn main() -> twochain_codes::Result<()> {
    let mut args = env::args().skip(1);
    let n_max: u32 = args
        .next()
        .map(|s| s.parse().expect("n-max must be a number"))
        .unwrap_or(5);
    let filter: Option<Vec<OptimalityClass>> = args
        .next()
        .map(|name| vec![OptimalityClass::parse(&name).expect("unknown class name")]);

    let rows = sweep_rows(n_max, filter.as_deref())?;
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    write_csv(&rows, &mut out).expect("stdout");
    out.flush().expect("stdout");
    eprintln!("{} rows", rows.len());
    Ok(())
}
