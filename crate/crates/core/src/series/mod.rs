//! Truncated bivariate power series in `x, y` over [`Poly2`](crate::algebra::Poly2),
//! the closed-form generating series of the nestohedron families, and the
//! differential identity suite.

mod family;
mod identities;
mod series2;

use thiserror::Error;

pub use family::{coeff_normalized, family_f, family_h, pe_f_linear, phi_f, phi_h, Family};
pub use identities::{check_identities, identity_suite, IdentityOutcome, IdentityReport, SeriesBundle};
pub use series2::{eta_linear, exp_linear, exp_series, inv_series, Index, Mismatch, Series2};

/// Truncation order used when none is configured.
pub const DEFAULT_ORDER: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("exp needs a series without constant term")]
    NonzeroConstant,
    #[error("inverse needs constant term exactly 1")]
    ConstantNotOne,
    #[error("η direction ({u}, {v}) must be a nonzero 0/1 pair")]
    BadDirection { u: u32, v: u32 },
    #[error("order {order} is below the minimum {min}")]
    OrderTooSmall { order: u32, min: u32 },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("({k}, {l}) is not an index of family {family}")]
    NotInFamily { family: Family, k: u32, l: u32 },
    #[error("index ({k}, {l}) lies beyond truncation order {order}")]
    BeyondOrder { k: u32, l: u32, order: u32 },
}
