//! Face numbers, h- and γ-vectors of nestohedra, and the Gal checks on
//! single polynomials and on whole generating series.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{format_rational, gamma_extract_degree, AlgebraError, GammaVector, Poly2, Rational};
use crate::buildingset::BuildingSet;
use crate::ringcalc::FaceEngine;
use crate::series::{Family, Index, Series2};

/// Reads `[f_0, …, f_n]` off `Σ f_i α^i t^{n−i}`.
pub fn fvector_of(f: &Poly2, n: u32) -> Vec<BigInt> {
    (0..=n)
        .map(|i| {
            let c = f.coeff(i, n - i);
            assert!(c.is_integer(), "face numbers are integers");
            c.to_integer()
        })
        .collect()
}

pub fn fvector(engine: &FaceEngine, b: &BuildingSet) -> Vec<BigInt> {
    fvector_of(&engine.fpoly(b), b.dimension() as u32)
}

pub fn hpoly(engine: &FaceEngine, b: &BuildingSet) -> Poly2 {
    engine.fpoly(b).subst_h()
}

pub fn gamma(engine: &FaceEngine, b: &BuildingSet) -> Result<GammaVector, AlgebraError> {
    gamma_extract_degree(&hpoly(engine, b), b.dimension() as u32)
}

pub fn dehn_sommerville(engine: &FaceEngine, b: &BuildingSet) -> bool {
    hpoly(engine, b).is_symmetric()
}

/// `Σ (−1)^i f_i = 1`, counting the polytope itself as `f_n`.
pub fn euler_holds(fvec: &[BigInt]) -> bool {
    let sum = fvec.iter().enumerate().fold(BigInt::zero(), |acc, (i, f)| if i % 2 == 0 { acc + f } else { acc - f });
    sum.is_one()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GalVerdict {
    Pass(GammaVector),
    Fail { index: usize, value: Rational, gamma: GammaVector },
}

impl GalVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, GalVerdict::Pass(_))
    }

    pub fn gamma(&self) -> &GammaVector {
        match self {
            GalVerdict::Pass(g) | GalVerdict::Fail { gamma: g, .. } => g,
        }
    }
}

/// Passes iff every `γ_i` of `p` is nonnegative; `p` must be symmetric and
/// homogeneous of degree `n`.
pub fn gal_check_poly(p: &Poly2, n: u32) -> Result<GalVerdict, AlgebraError> {
    let gamma = gamma_extract_degree(p, n)?;
    Ok(match gamma.first_negative() {
        None => GalVerdict::Pass(gamma),
        Some((index, value)) => {
            let value = value.clone();
            GalVerdict::Fail { index, value, gamma }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GalCondition {
    /// A nonzero coefficient outside the family's index set.
    Support,
    /// An in-family coefficient that vanishes.
    Nonzero,
    Homogeneity,
    Symmetry,
    Grading,
    Gamma,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GalViolation {
    pub index: Index,
    pub condition: GalCondition,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GalReport {
    pub checked: usize,
    pub violations: Vec<GalViolation>,
}

impl GalReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every coefficient of an h-series against the Gal-series
/// conditions for `fam`: support, homogeneity of degree `dim(k, l)`, the
/// common grading `2q`, symmetry, and γ-nonnegativity. Violations are
/// ordered by `(k + l, k)`.
pub fn gal_check_series(s: &Series2, fam: Family) -> GalReport {
    let order = s.order();
    let indices = fam.indices(order);
    let mut violations: Vec<GalViolation> = indices
        .par_iter()
        .map(|&(k, l)| check_coefficient(s, fam, k, l))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    for ((k, l), c) in s.coeffs() {
        if !fam.contains(k, l) && !c.is_zero() {
            violations.push(GalViolation { index: (k, l), condition: GalCondition::Support, witness: c.to_string() });
        }
    }
    violations.sort_by_key(|v| (v.index.0 + v.index.1, v.index.0));
    GalReport { checked: indices.len(), violations }
}

fn check_coefficient(s: &Series2, fam: Family, k: u32, l: u32) -> Vec<GalViolation> {
    let index = (k, l);
    let n = fam.dim(k, l).expect("in-family index");
    let c = s.coeff(k, l);
    let violation = |condition, witness: String| GalViolation { index, condition, witness };
    if c.is_zero() {
        return vec![violation(GalCondition::Nonzero, "0".into())];
    }
    let mut out = Vec::new();
    if let Some(((i, j), _)) = c.terms().find(|((i, j), _)| i + j != n) {
        out.push(violation(GalCondition::Homogeneity, format!("α^{i}t^{j} in degree {n}")));
    }
    let grade = fam.grade();
    if let Some(((i, j), _)) = c.terms().find(|((i, j), _)| 2 * i64::from(k + l) - 2 * i64::from(i + j) != grade) {
        out.push(violation(GalCondition::Grading, format!("α^{i}t^{j}x^{k}y^{l} has grade ≠ {grade}")));
    }
    if !c.is_symmetric() {
        out.push(violation(GalCondition::Symmetry, c.to_string()));
    }
    if out.is_empty() {
        match gal_check_poly(&s.normalized_coeff(k, l), n) {
            Ok(GalVerdict::Pass(_)) => {}
            Ok(GalVerdict::Fail { index: i, value, .. }) => {
                out.push(violation(GalCondition::Gamma, format!("γ_{i} = {}", format_rational(&value))));
            }
            Err(e) => out.push(violation(GalCondition::Gamma, e.to_string())),
        }
    }
    out
}

fn face_numbers<S: Serializer>(f: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(f.len()))?;
    for x in f {
        match u64::try_from(x) {
            Ok(v) => seq.serialize_element(&v)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

/// Everything reported for one nestohedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolytopeInvariants {
    pub dimension: u32,
    pub building_set_size: usize,
    #[serde(serialize_with = "face_numbers")]
    pub fvector: Vec<BigInt>,
    pub facets: u64,
    pub fpoly: Poly2,
    pub hpoly: Poly2,
    pub gamma: GammaVector,
    pub dehn_sommerville: bool,
    pub euler: bool,
    pub gal: bool,
}

impl PolytopeInvariants {
    pub fn compute(engine: &FaceEngine, b: &BuildingSet) -> Result<Self, AlgebraError> {
        let n = b.dimension() as u32;
        let fpoly = engine.fpoly(b);
        let fvector = fvector_of(&fpoly, n);
        let hpoly = fpoly.subst_h();
        let gamma = gamma_extract_degree(&hpoly, n)?;
        let facets = if n == 0 { 0 } else { u64::try_from(&fvector[n as usize - 1]).unwrap_or(u64::MAX) };
        Ok(Self {
            dimension: n,
            building_set_size: b.len(),
            euler: euler_holds(&fvector),
            fvector,
            facets,
            dehn_sommerville: hpoly.is_symmetric(),
            gal: gamma.is_nonnegative(),
            fpoly,
            hpoly,
            gamma,
        })
    }
}
