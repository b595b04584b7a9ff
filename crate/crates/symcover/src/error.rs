use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The requested degree or parameter lies outside the range an
    /// operation is defined for.
    #[error("{op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// The operation is not modeled for this family (only order bounds are
    /// available for general imprimitive and primitive families).
    #[error("{op} is not supported for family `{family}`")]
    UnsupportedFamily { op: &'static str, family: String },

    /// A configured resource ceiling would be exceeded.
    #[error("{what} limit exceeded: requested {requested}, ceiling {ceiling}")]
    ResourceLimit {
        what: &'static str,
        requested: u64,
        ceiling: u64,
    },

    /// Group closure grew past the configured element ceiling.
    #[error("closure exceeded the element ceiling of {ceiling}")]
    ClosureCeiling { ceiling: usize },

    /// No catalog entry for a primitive class required at this degree.
    #[error("catalog has no entry `{name}` required at degree {degree}")]
    CatalogMissing { degree: u32, name: String },

    /// Malformed textual input (cycle types, family specs, catalog files).
    #[error("cannot parse {what} from `{input}`: {detail}")]
    Parse {
        what: &'static str,
        input: String,
        detail: String,
    },

    /// A set-cover instance whose subsets do not cover the universe.
    #[error("infeasible cover instance: {detail}")]
    Infeasible { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }
}
