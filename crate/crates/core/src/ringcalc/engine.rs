use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;

use super::boundary::boundary;
use super::expr::PolyExpr;
use super::RingError;
use crate::algebra::{AlgebraError, Poly2, Rational};
use crate::buildingset::{BuildingSet, CanonicalKey, Graph, KeyMode};

/// Inverts `∂/∂t` on a homogeneous polynomial of degree `n − 1`, pinning the
/// constant of integration by `F|_{t=0} = α^n`.
pub fn integrate_t(g: &Poly2, n: u32) -> Result<Poly2, AlgebraError> {
    if !g.is_zero() {
        let d = g.homogeneous_degree()?;
        if n == 0 || d != n - 1 {
            return Err(AlgebraError::DegreeMismatch { expected: n.saturating_sub(1), found: d });
        }
    }
    let mut out = Poly2::monomial(n, 0, Rational::from_integer(BigInt::from(1)));
    for ((i, j), c) in g.terms() {
        out.add_term(i, j + 1, c / Rational::from_integer(BigInt::from(j + 1)));
    }
    Ok(out)
}

/// Computes f-polynomials by the facet recursion, memoizing connected
/// building sets by canonical key. Safe to share between threads: a race
/// at most computes the same value twice.
#[derive(Debug, Default)]
pub struct FaceEngine {
    mode: KeyMode,
    memo: RwLock<HashMap<CanonicalKey, Poly2>>,
}

impl FaceEngine {
    pub fn new(mode: KeyMode) -> Self {
        Self { mode, memo: RwLock::new(HashMap::new()) }
    }

    pub fn mode(&self) -> KeyMode {
        self.mode
    }

    pub fn cached(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    /// The f-polynomial `Σ f_i α^i t^{n−i}` of the nestohedron of `b`.
    pub fn fpoly(&self, b: &BuildingSet) -> Poly2 {
        if b.ground_size() <= 1 {
            return Poly2::one();
        }
        if !b.is_connected() {
            return b.components().iter().fold(Poly2::one(), |acc, c| &acc * &self.fpoly(c));
        }
        let key = b.canonical_key(self.mode);
        if let Some(p) = self.memo.read().expect("memo lock").get(&key) {
            return p.clone();
        }
        let d = boundary(b).expect("connected");
        let p = integrate_t(&self.fpoly_expr(&d), b.dimension() as u32)
            .expect("boundary f-polynomial is homogeneous of degree dim − 1");
        self.memo.write().expect("memo lock").entry(key).or_insert_with(|| p.clone());
        p
    }

    /// `f` is linear on sums and multiplicative on products.
    pub fn fpoly_expr(&self, e: &PolyExpr) -> Poly2 {
        let mut out = Poly2::zero();
        for (factors, c) in e.terms() {
            let prod = factors.iter().fold(Poly2::one(), |acc, k| &acc * &self.fpoly(&k.to_building_set()));
            out += &prod.scale(c);
        }
        out
    }

    pub fn fpoly_graph(&self, g: &Graph) -> Result<Poly2, RingError> {
        Ok(self.fpoly(&BuildingSet::from_graph(g)?))
    }
}
