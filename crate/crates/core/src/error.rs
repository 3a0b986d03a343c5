use thiserror::Error;

/// Errors raised by the combinatorial routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incomparable sizes: {0} vs {1}")]
    IncomparableSizes(u32, u32),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no cuspidal class in {0}")]
    NoCuspidalClass(String),

    #[error("minimality violated in {0}: {1} dominance-minimal cuspidal labels")]
    MinimalityViolated(String, usize),

    #[error("non-integral half: {0} is not a valid Jordan type for this family")]
    NonIntegralHalf(String),

    #[error("use symbol route: duality in family {0} is not given by conjugation")]
    UseSymbolRoute(String),

    #[error("not a cuspidal D-label: {0}")]
    NotCuspidalDLabel(String),

    #[error("invalid parity in {0}")]
    InvalidParity(String),

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("target rank {target} is below source rank {source_rank}")]
    TargetRankTooSmall { source_rank: u32, target: u32 },

    #[error("unknown exceptional type: {0}")]
    UnknownExceptional(String),

    #[error("unknown induction cell: ({0}, {1})")]
    UnknownInductionCell(String, String),

    #[error("enumeration bound exceeded: rank {0} > 20")]
    EnumerationBound(u32),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("rank below threshold: {0}")]
    RankBelowThreshold(String),

    #[error("data table error: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;
