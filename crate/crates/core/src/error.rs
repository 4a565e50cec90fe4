use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what}: argument {x} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        x: f64,
        domain: &'static str,
    },

    #[error("polygamma order {0} is not supported (expected 1, 2 or 3)")]
    UnsupportedOrder(u32),

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid interval [{a}, {b}]: lower end must be below upper end")]
    InvalidInterval { a: String, b: String },

    #[error("unknown function `{0}`")]
    UnknownFunction(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, x: f64, domain: &'static str) -> Error {
    Error::Domain { what, x, domain }
}

pub(crate) fn check_interval(a: f64, b: f64) -> Result<()> {
    if a.is_finite() && b.is_finite() && a < b {
        Ok(())
    } else {
        Err(Error::InvalidInterval {
            a: a.to_string(),
            b: b.to_string(),
        })
    }
}
