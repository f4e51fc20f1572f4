//! Crate-wide error type.

/// Errors produced by the design, layout and simulation modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter is outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A constraint set admits no feasible design; `bound` names the
    /// violated limit.
    #[error("infeasible design: {detail} (violated bound: {bound})")]
    Infeasible { bound: String, detail: String },

    /// Access points cannot be placed as requested.
    #[error("layout error: {0}")]
    Layout(String),

    /// Adjacent cells request more Zone-1 subcarriers than the cell budget
    /// allows, so their bands cannot be made disjoint.
    #[error(
        "band assignment infeasible for adjacent APs {ap_a} and {ap_b}: \
         {requested} Zone-1 subcarriers requested, {available} available"
    )]
    BandAssignment {
        ap_a: u32,
        ap_b: u32,
        requested: u32,
        available: u32,
    },

    /// A scenario file is structurally valid but semantically wrong.
    #[error("scenario error: {0}")]
    Scenario(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("scenario parse error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Exit code the CLI maps this error to: 3 for infeasible designs,
    /// 2 for every other validation failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Infeasible { .. } | Error::BandAssignment { .. } => 3,
            _ => 2,
        }
    }

    /// Short machine-readable kind tag for diagnostic records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Infeasible { .. } => "infeasible",
            Error::Layout(_) => "layout",
            Error::BandAssignment { .. } => "band_assignment",
            Error::Scenario(_) => "scenario",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

/// Convenience constructor used throughout the crate.
pub(crate) fn domain_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::domain(msg))
}

pub type Result<T> = std::result::Result<T, Error>;
