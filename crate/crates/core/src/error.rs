use thiserror::Error;

use crate::bounds::BoundsError;
use crate::corpus::CorpusError;
use crate::front::FrontError;
use crate::pd::PdError;
use crate::poly::PolyError;
use crate::skein::SkeinError;
use crate::tau::TauError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error(transparent)]
    Pd(#[from] PdError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Skein(#[from] SkeinError),
    #[error(transparent)]
    Tau(#[from] TauError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl Error {
    /// Stable machine-readable code, used in CLI error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Front(e) => e.code(),
            Error::Pd(e) => e.code(),
            Error::Poly(_) => "poly_overflow",
            Error::Skein(e) => e.code(),
            Error::Tau(e) => e.code(),
            Error::Bounds(_) => "bound_violated",
            Error::Corpus(e) => e.code(),
            Error::Io { .. } => "io",
        }
    }
}
