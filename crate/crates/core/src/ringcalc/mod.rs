//! The polytope ring: formal sums of products of connected nestohedra, the
//! boundary derivation `d`, and the f-polynomial recursion
//! `∂F/∂t = f(dP)` with `F|_{t=0} = α^dim`.

mod boundary;
mod engine;
mod expr;

use thiserror::Error;

pub use boundary::{boundary, boundary_expr, boundary_graph};
pub use engine::{integrate_t, FaceEngine};
pub use expr::{PolyExpr, Product};

use crate::algebra::AlgebraError;
use crate::buildingset::BuildingSetError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("input is not connected; split it into components first")]
    Disconnected,
    #[error(transparent)]
    BuildingSet(#[from] BuildingSetError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
