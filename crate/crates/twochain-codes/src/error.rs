use std::path::PathBuf;

/// Errors produced by the construction, oracle, and classification APIs.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid chain split: require 1 <= m < n, got m={m}, n={n}")]
    InvalidChainSplit { m: u32, n: u32 },

    #[error("ground set too large: n={n} exceeds the supported maximum of {max}")]
    GroundSetTooLarge { n: u32, max: u32 },

    #[error("element {element} is outside the ground set 1..={n}")]
    ElementOutOfRange { element: u32, n: u32 },

    #[error("invalid ideal for m={m}, n={n}: {reason}")]
    InvalidIdeal { m: u32, n: u32, reason: String },

    #[error("bit vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: u32, got: u32 },

    #[error("mask {mask:#x} does not fit in {len} bits")]
    MaskTooWide { mask: u64, len: u32 },

    #[error("sign vector entry at position {index} is {value}, expected +1 or -1")]
    InvalidSign { index: usize, value: i8 },

    #[error("matrix entry at row {row}, column {col} is {value}, expected 0 or 1")]
    MatrixEntry { row: usize, col: usize, value: u8 },

    #[error("{operation} supports n <= {cap}, got n={n}")]
    OverCap {
        operation: &'static str,
        n: u32,
        cap: u32,
    },

    #[error("zero code: every codeword has weight 0, minimum distance is undefined")]
    ZeroCode,

    #[error("griesmer sum requires k >= 1 and d >= 1, got k={k}, d={d}")]
    GriesmerDomain { k: u32, d: u64 },

    #[error(
        "parameters violate the Griesmer bound: length {length} < {bound} = griesmer_sum({k}, {d})"
    )]
    GriesmerViolated {
        length: u64,
        k: u32,
        d: u64,
        bound: u64,
    },

    #[error("verification mismatch: {0}")]
    VerificationMismatch(String),

    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
