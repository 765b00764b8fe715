use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("height must be positive, got z = {z}")]
    NonPositiveHeight { z: f64 },

    #[error("coordinate is not finite: {what} = {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("exp({w}) overflows the height coordinate")]
    HeightOverflow { w: f64 },

    #[error("surface jet is not immersed: |Xs x Xt| = {cross_norm:e}")]
    Degenerate { cross_norm: f64 },

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("({s}, {t}) is outside the parameter domain: {reason}")]
    Domain { s: f64, t: f64, reason: String },

    #[error("t = {t} is outside the trajectory range [{lo}, {hi}]")]
    OutOfRange { t: f64, lo: f64, hi: f64 },

    #[error("integration failed: {0}")]
    Integration(String),

    #[error("every one of the {count} grid nodes failed; first failure: {first}")]
    AllNodesFailed { count: usize, first: Box<Error> },
}

impl Error {
    pub(crate) fn param(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            reason,
        }
    }
}
