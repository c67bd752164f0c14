use std::fmt;

use thiserror::Error;

/// Pipeline stage a failure is attributed to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Parse,
    Reduction,
    Bring,
    Unwind,
    Deflation,
    Verification,
    Oracle,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Parse => "parse",
            Stage::Reduction => "reduction",
            Stage::Bring => "bring",
            Stage::Unwind => "unwind",
            Stage::Deflation => "deflation",
            Stage::Verification => "verification",
            Stage::Oracle => "oracle",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid precision: {0}")]
    InvalidPrecision(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("zero raised to a negative power")]
    ZeroToNegativePower,

    #[error("division by zero")]
    DivisionByZero,

    #[error("non-finite value produced in {0}")]
    Overflow(&'static str),

    #[error("degree guard failed for {what}: expected degree {degree}, guard mismatch 10^{log10_mismatch:.1}")]
    DegreeGuardFailure {
        what: &'static str,
        degree: usize,
        log10_mismatch: f64,
    },

    #[error("value is not a root (relative residual 10^{log10_residual:.1})")]
    NotARoot { log10_residual: f64 },

    #[error("{which} did not vanish (relative residual 10^{log10_residual:.1})")]
    VanishFailure { which: &'static str, log10_residual: f64 },

    #[error("transformed polynomial lost its leading coefficient")]
    DegenerateTransform,

    #[error("degenerate leading coefficient in {0}")]
    DegenerateLeading(&'static str),

    #[error("cubic has a vanishing leading coefficient")]
    DegenerateCubic,

    #[error("cube-root term cancelled on both square-root branches")]
    CancellationFailure,

    #[error("no resolvent root gives a valid quartic factorization")]
    ResolventFailure,

    #[error("root selection is ambiguous (log10 residuals {log10_residuals:?})")]
    AmbiguousSelection { log10_residuals: Vec<f64> },

    #[error("series argument |x| = {abs_x:.3} is outside the series regime")]
    SeriesOutOfRange { abs_x: f64 },

    #[error("series did not converge within {0} terms")]
    SeriesDivergence(usize),

    #[error("s lies on a branch point of the Bring family")]
    NearBranchPoint,

    #[error("continuation exceeded {0} steps")]
    StepLimitExceeded(usize),

    #[error("root finder did not converge in {0} iterations")]
    NoConvergence(usize),

    #[error("verification still failing at {digits} digits: {reason}")]
    PrecisionExhausted { digits: u32, reason: String },

    #[error("pre-shift ladder exhausted after {0} attempts")]
    ShiftLadderExhausted(usize),

    #[error("{stage}: {source}")]
    AtStage {
        stage: Stage,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn at(self, stage: Stage) -> Error {
        match self {
            e @ Error::AtStage { .. } => e,
            e => Error::AtStage {
                stage,
                source: Box::new(e),
            },
        }
    }

    /// Innermost error, with any stage wrapper removed.
    pub fn root_cause(&self) -> &Error {
        match self {
            Error::AtStage { source, .. } => source.root_cause(),
            e => e,
        }
    }

    pub fn stage(&self) -> Option<Stage> {
        match self {
            Error::AtStage { stage, .. } => Some(*stage),
            _ => None,
        }
    }

    /// True for failures that more working precision may cure.
    pub(crate) fn is_precision_sensitive(&self) -> bool {
        matches!(
            self.root_cause(),
            Error::DegreeGuardFailure { .. }
                | Error::VanishFailure { .. }
                | Error::NotARoot { .. }
                | Error::AmbiguousSelection { .. }
                | Error::ResolventFailure
                | Error::CancellationFailure
                | Error::PrecisionExhausted { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
