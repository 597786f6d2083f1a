//! The γ-basis: `h(α, t) = Σ γ_i (αt)^i (α + t)^{n − 2i}`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::poly2::Poly2;
use super::rational::{format_rational, Rational};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaVector {
    n: u32,
    gammas: Vec<Rational>,
}

impl GammaVector {
    /// `gammas` must hold exactly `⌊n/2⌋ + 1` entries.
    pub fn new(n: u32, gammas: Vec<Rational>) -> Result<Self, AlgebraError> {
        let expected = (n / 2 + 1) as usize;
        if gammas.len() != expected {
            return Err(AlgebraError::GammaLength { n, expected, found: gammas.len() });
        }
        Ok(Self { n, gammas })
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn gammas(&self) -> &[Rational] {
        &self.gammas
    }

    /// Index and value of the first negative entry.
    pub fn first_negative(&self) -> Option<(usize, &Rational)> {
        self.gammas.iter().enumerate().find(|(_, g)| g.is_negative())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    pub fn expand(&self) -> Poly2 {
        gamma_expand(self)
    }
}

#[derive(Serialize)]
struct GammaRecord {
    n: u32,
    gammas: Vec<String>,
}

impl Serialize for GammaVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GammaRecord { n: self.n, gammas: self.gammas.iter().map(format_rational).collect() }.serialize(serializer)
    }
}

/// `(αt)^i (α + t)^{n − 2i}`.
fn basis(n: u32, i: u32) -> Poly2 {
    let a = Poly2::alpha() + Poly2::t();
    a.pow(n - 2 * i).shift(i, i)
}

/// Inverts the γ-expansion by peeling: the lowest surviving `t`-power at step
/// `i` is `α^{n−i} t^i`, whose coefficient is `γ_i`.
pub fn gamma_extract(p: &Poly2) -> Result<GammaVector, AlgebraError> {
    let n = p.homogeneous_degree()?;
    gamma_extract_degree(p, n)
}

/// As [`gamma_extract`] but with the degree supplied, so the zero polynomial
/// is accepted and a degree mismatch is reported.
pub fn gamma_extract_degree(p: &Poly2, n: u32) -> Result<GammaVector, AlgebraError> {
    if !p.is_zero() {
        let d = p.homogeneous_degree()?;
        if d != n {
            return Err(AlgebraError::DegreeMismatch { expected: n, found: d });
        }
    }
    if !p.is_symmetric() {
        return Err(AlgebraError::Asymmetric);
    }
    let mut residual = p.clone();
    let mut gammas = Vec::with_capacity((n / 2 + 1) as usize);
    for i in 0..=n / 2 {
        let g = residual.coeff(n - i, i);
        if !g.is_zero() {
            residual -= &basis(n, i).scale(&g);
        }
        gammas.push(g);
    }
    if !residual.is_zero() {
        return Err(AlgebraError::NonzeroResidual(residual.to_string()));
    }
    GammaVector::new(n, gammas)
}

pub fn gamma_expand(g: &GammaVector) -> Poly2 {
    let mut out = Poly2::zero();
    for (i, c) in g.gammas.iter().enumerate() {
        if !c.is_zero() {
            out += &basis(g.n, i as u32).scale(c);
        }
    }
    out
}
