use thiserror::Error;

/// Errors raised by the engine.
///
/// The variants map onto the CLI exit-code contract: `NotNef` is a
/// precondition failure (1), `CapExceeded` is the enumeration cap (3) and
/// everything else is a usage/configuration error (2).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error("invalid bundle: {0}")]
    InvalidBundle(String),
    #[error("bundle expression parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("|W/W_P| = {order} exceeds the enumeration cap of {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error(
        "Seshadri constants are only defined here for nef bundles: curve {curve} carries splitting entry {entry} < 0"
    )]
    NotNef { curve: usize, entry: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
