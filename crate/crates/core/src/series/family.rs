//! The generating series of the five families and their closed forms.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::series2::{eta_linear, exp_linear, inv_series, Index, Series2};
use super::SeriesError;
use crate::algebra::{factorial, Poly2, Rational};
use crate::buildingset::Graph;

/// A family of graphical nestohedra indexed by monomials `x^k y^l`, with
/// coefficient `P_{k,l} / (k! l!)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Permutohedra: `x^k` ↦ complete graph on `k ≥ 1` nodes.
    Pe,
    /// Stellohedra: `x^k` ↦ star with `k ≥ 0` leaves.
    St,
    /// Stellohedra carried by `y`: `x^k y` ↦ `K_{k,1}`.
    StarMarked,
    /// `x^k y^l` ↦ join of `K_k` (`k ≥ 1`) with `l` isolated nodes.
    NablaBecause,
    /// `x^k y^l` ↦ `K_{k,l}` for `k, l ≥ 1`, plus the two points `x` and `y`.
    BecauseBecause,
}

impl Family {
    pub const ALL: [Family; 5] =
        [Family::Pe, Family::St, Family::StarMarked, Family::NablaBecause, Family::BecauseBecause];

    pub fn name(self) -> &'static str {
        match self {
            Family::Pe => "pe",
            Family::St => "st",
            Family::StarMarked => "starmarked",
            Family::NablaBecause => "nabla-because",
            Family::BecauseBecause => "because-because",
        }
    }

    pub fn contains(self, k: u32, l: u32) -> bool {
        match self {
            Family::Pe => k >= 1 && l == 0,
            Family::St => l == 0,
            Family::StarMarked => l == 1,
            Family::NablaBecause => k >= 1,
            Family::BecauseBecause => (k >= 1 && l >= 1) || (k, l) == (1, 0) || (k, l) == (0, 1),
        }
    }

    /// In-family indices with `k + l ≤ max_total`, ordered by `(k + l, k)`.
    pub fn indices(self, max_total: u32) -> Vec<Index> {
        let mut out = Vec::new();
        for total in 0..=max_total {
            for k in 0..=total {
                if self.contains(k, total - k) {
                    out.push((k, total - k));
                }
            }
        }
        out
    }

    pub fn graph(self, k: u32, l: u32) -> Option<Graph> {
        if !self.contains(k, l) {
            return None;
        }
        let (k, l) = (k as usize, l as usize);
        Some(match self {
            Family::Pe => Graph::complete(k),
            Family::St => Graph::star(k),
            Family::StarMarked => Graph::join(&Graph::empty(k), &Graph::complete(1)),
            Family::NablaBecause => Graph::join(&Graph::complete(k), &Graph::empty(l)),
            Family::BecauseBecause if k == 0 || l == 0 => Graph::complete(1),
            Family::BecauseBecause => Graph::bipartite(k, l),
        })
    }

    pub fn dim(self, k: u32, l: u32) -> Option<u32> {
        self.graph(k, l).map(|g| g.n() as u32 - 1)
    }

    /// `2q`: the common value of `2(k + l) − 2(i + j)` over every monomial
    /// `α^i t^j x^k y^l` of the family's series.
    pub fn grade(self) -> i64 {
        match self {
            Family::St => 0,
            _ => 2,
        }
    }

    /// `1 / (k! l!)`.
    pub fn scale(self, k: u32, l: u32) -> Rational {
        Rational::new(BigInt::from(1), factorial(k) * factorial(l))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| SeriesError::UnknownFamily(s.to_string()))
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

fn a_plus_t() -> Poly2 {
    Poly2::alpha() + Poly2::t()
}

/// `1 / (1 − t·η(ux + vy))`.
fn denominator_inverse(u: u32, v: u32, order: u32) -> Series2 {
    let eta = eta_linear(u, v, order).expect("valid direction");
    let d = Series2::one(order).try_sub(&eta.scale_poly(&Poly2::t())).expect("same order");
    inv_series(&d).expect("constant term is one")
}

fn mul(a: &Series2, b: &Series2) -> Series2 {
    a.try_mul(b).expect("same order")
}

fn add(a: &Series2, b: &Series2) -> Series2 {
    a.try_add(b).expect("same order")
}

fn sub(a: &Series2, b: &Series2) -> Series2 {
    a.try_sub(b).expect("same order")
}

/// `Pe_f` evaluated at `ux + vy`: `η(ux + vy) / (1 − tη(ux + vy))`.
pub fn pe_f_linear(u: u32, v: u32, order: u32) -> Series2 {
    mul(&eta_linear(u, v, order).expect("valid direction"), &denominator_inverse(u, v, order))
}

/// The f-polynomial series of `fam`, through total degree `order`. All
/// divisions by `α` in the closed forms are absorbed into `η`.
pub fn family_f(fam: Family, order: u32) -> Result<Series2, SeriesError> {
    if order < 1 {
        return Err(SeriesError::OrderTooSmall { order, min: 1 });
    }
    let n = order;
    let eta = |u, v| eta_linear(u, v, n).expect("valid direction");
    Ok(match fam {
        Family::Pe => pe_f_linear(1, 0, n),
        Family::St => mul(&exp_linear(&a_plus_t(), 1, 0, n), &denominator_inverse(1, 0, n)),
        Family::StarMarked => family_f(Family::St, n)?.shift(0, 1),
        Family::NablaBecause => mul(&mul(&exp_linear(&a_plus_t(), 0, 1, n), &eta(1, 0)), &denominator_inverse(1, 1, n)),
        Family::BecauseBecause => {
            let (ex, ey) = (eta(1, 0), eta(0, 1));
            let mut bracket = mul(&exp_linear(&a_plus_t(), 1, 0, n), &ey);
            bracket = add(&bracket, &mul(&exp_linear(&a_plus_t(), 0, 1, n), &ex));
            bracket = add(&bracket, &mul(&ex, &ey).scale_poly(&Poly2::alpha()));
            bracket = sub(&bracket, &mul(&exp_linear(&Poly2::alpha(), 1, 0, n), &ey));
            bracket = sub(&bracket, &mul(&exp_linear(&Poly2::alpha(), 0, 1, n), &ex));
            let body = mul(&bracket, &denominator_inverse(1, 1, n));
            add(&add(&body, &Series2::x(n)), &Series2::y(n))
        }
    })
}

/// The h-polynomial series: `family_f` with `α ↦ α − t` in each coefficient.
pub fn family_h(fam: Family, order: u32) -> Result<Series2, SeriesError> {
    Ok(family_f(fam, order)?.subst_h())
}

/// `φ` at the f-level: `e^{−ty} (e^{αx} + tη(x)) / (1 − tη(x + y))`.
pub fn phi_f(order: u32) -> Series2 {
    let n = order;
    let num = add(
        &exp_linear(&Poly2::alpha(), 1, 0, n),
        &eta_linear(1, 0, n).expect("valid direction").scale_poly(&Poly2::t()),
    );
    mul(&mul(&exp_linear(&-Poly2::t(), 0, 1, n), &num), &denominator_inverse(1, 1, n))
}

/// `φ_h = (αe^{αx} − te^{tx}) / (αe^{t(x+y)} − te^{α(x+y)})`.
pub fn phi_h(order: u32) -> Series2 {
    phi_f(order).subst_h()
}

/// `k! l! · [x^k y^l] series`, for an index of `fam`.
pub fn coeff_normalized(series: &Series2, fam: Family, k: u32, l: u32) -> Result<Poly2, SeriesError> {
    if !fam.contains(k, l) {
        return Err(SeriesError::NotInFamily { family: fam, k, l });
    }
    if k + l > series.order() {
        return Err(SeriesError::BeyondOrder { k, l, order: series.order() });
    }
    Ok(series.normalized_coeff(k, l))
}
