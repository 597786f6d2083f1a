//! The differential identities tying the closed forms to the facet recursion
//! (`∂/∂t` identities at the f-level) and to the Gal argument (`∂/∂x`,
//! `∂/∂y` identities at the h-level), checked as exact truncated equalities.

use rayon::prelude::*;
use serde::Serialize;

use super::family::{family_f, pe_f_linear, phi_f, Family};
use super::series2::{exp_linear, Mismatch, Series2};
use super::SeriesError;
use crate::algebra::Poly2;

/// The f-level series the identities are stated in, computed one order past
/// the checking order so that `x`/`y` derivatives stay exact through it.
#[derive(Clone, Debug)]
pub struct SeriesBundle {
    pub order: u32,
    pub pe_f: Series2,
    /// `Pe_f(x + y)`.
    pub pe_sum_f: Series2,
    pub st_f: Series2,
    pub nabla_because_f: Series2,
    pub because_because_f: Series2,
    pub phi_f: Series2,
}

impl SeriesBundle {
    pub fn compute(order: u32) -> Result<Self, SeriesError> {
        if order < 2 {
            return Err(SeriesError::OrderTooSmall { order, min: 2 });
        }
        let m = order + 1;
        Ok(Self {
            order,
            pe_f: family_f(Family::Pe, m)?,
            pe_sum_f: pe_f_linear(1, 1, m),
            st_f: family_f(Family::St, m)?,
            nabla_because_f: family_f(Family::NablaBecause, m)?,
            because_because_f: family_f(Family::BecauseBecause, m)?,
            phi_f: phi_f(m),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityOutcome {
    pub id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub order: u32,
    pub outcomes: Vec<IdentityOutcome>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn first_failure(&self) -> Option<&IdentityOutcome> {
        self.outcomes.iter().find(|o| !o.passed)
    }
}

type Sides = fn(&SeriesBundle) -> (Series2, Series2);

const IDENTITIES: [(&str, &str, Sides); 8] = [
    ("I1", "∂t Pe_f = Pe_f²", i1),
    ("I2", "∂t St_f = (x + Pe_f)·St_f", i2),
    ("I3", "∂t P∇∵_f = P∇∵_f·(y + Pe_f(x+y))", i3),
    ("I4", "∂t P∵∵_f = x·P∇∵_f(y,x) + y·P∇∵_f + P∵∵_f·Pe_f(x+y) − (x+y)·Pe_f(x+y)", i4),
    ("I5", "∂x St_h = (α+t)·St_h + αt·Pe_h·St_h", i5),
    ("I6", "∂x P∇∵_h = e^{(α+t)y}·φ_h + αt·P∇∵_h·Pe_h(x+y)", i6),
    ("I7", "∂y φ_h = αt·Pe_h(x+y)·φ_h", i7),
    ("I8", "∂x P∵∵_h = αt·Pe_h(x+y)·P∵∵_h + (α+t)·P∇∵_h(y,x) − (α+t+αt(x+y))·Pe_h(x+y) + e^{(α+t)y}·φ_h", i8),
];

/// Checks every identity through total degree `bundle.order`.
pub fn check_identities(bundle: &SeriesBundle) -> IdentityReport {
    let outcomes = IDENTITIES
        .par_iter()
        .map(|&(id, statement, sides)| {
            let (lhs, rhs) = sides(bundle);
            let mismatch = lhs.first_difference(&rhs, Some(bundle.order));
            IdentityOutcome { id, statement, passed: mismatch.is_none(), mismatch }
        })
        .collect();
    IdentityReport { order: bundle.order, outcomes }
}

pub fn identity_suite(order: u32) -> Result<IdentityReport, SeriesError> {
    Ok(check_identities(&SeriesBundle::compute(order)?))
}

fn mul(a: &Series2, b: &Series2) -> Series2 {
    a.try_mul(b).expect("bundle series share one order")
}

fn add(a: &Series2, b: &Series2) -> Series2 {
    a.try_add(b).expect("bundle series share one order")
}

fn a_plus_t() -> Poly2 {
    Poly2::alpha() + Poly2::t()
}

fn alpha_t() -> Poly2 {
    Poly2::monomial(1, 1, crate::algebra::rat(1))
}

fn i1(b: &SeriesBundle) -> (Series2, Series2) {
    (b.pe_f.deriv_t(), mul(&b.pe_f, &b.pe_f))
}

fn i2(b: &SeriesBundle) -> (Series2, Series2) {
    let m = b.st_f.order();
    (b.st_f.deriv_t(), mul(&add(&Series2::x(m), &b.pe_f), &b.st_f))
}

fn i3(b: &SeriesBundle) -> (Series2, Series2) {
    let m = b.pe_sum_f.order();
    (b.nabla_because_f.deriv_t(), mul(&b.nabla_because_f, &add(&Series2::y(m), &b.pe_sum_f)))
}

fn i4(b: &SeriesBundle) -> (Series2, Series2) {
    let nb = &b.nabla_because_f;
    let mut rhs = nb.swap_xy().shift(1, 0);
    rhs = add(&rhs, &nb.shift(0, 1));
    rhs = add(&rhs, &mul(&b.because_because_f, &b.pe_sum_f));
    rhs = rhs.try_sub(&add(&b.pe_sum_f.shift(1, 0), &b.pe_sum_f.shift(0, 1))).expect("same order");
    (b.because_because_f.deriv_t(), rhs)
}

fn i5(b: &SeriesBundle) -> (Series2, Series2) {
    let st_h = b.st_f.subst_h();
    let pe_h = b.pe_f.subst_h();
    let rhs = add(&st_h.scale_poly(&a_plus_t()), &mul(&pe_h, &st_h).scale_poly(&alpha_t()));
    (st_h.deriv_x(), rhs)
}

/// `e^{(α+t)y}·φ_h`, with `α, t` read as h-variables.
fn exp_phi_h(b: &SeriesBundle) -> Series2 {
    let m = b.phi_f.order();
    mul(&exp_linear(&a_plus_t(), 0, 1, m), &b.phi_f.subst_h())
}

fn i6(b: &SeriesBundle) -> (Series2, Series2) {
    let nb_h = b.nabla_because_f.subst_h();
    let pe_sum_h = b.pe_sum_f.subst_h();
    let rhs = add(&exp_phi_h(b), &mul(&nb_h, &pe_sum_h).scale_poly(&alpha_t()));
    (nb_h.deriv_x(), rhs)
}

fn i7(b: &SeriesBundle) -> (Series2, Series2) {
    let phi_h = b.phi_f.subst_h();
    let pe_sum_h = b.pe_sum_f.subst_h();
    (phi_h.deriv_y(), mul(&pe_sum_h, &phi_h).scale_poly(&alpha_t()))
}

fn i8(b: &SeriesBundle) -> (Series2, Series2) {
    i8_with_sign(b, -1)
}

fn i8_with_sign(b: &SeriesBundle, sign: i64) -> (Series2, Series2) {
    let m = b.because_because_f.order();
    let bb_h = b.because_because_f.subst_h();
    let nb_h = b.nabla_because_f.subst_h();
    let pe_sum_h = b.pe_sum_f.subst_h();
    let mut rhs = mul(&pe_sum_h, &bb_h).scale_poly(&alpha_t());
    rhs = add(&rhs, &nb_h.swap_xy().scale_poly(&a_plus_t()));
    // α + t + αt(x + y)
    let mut factor = Series2::constant(m, a_plus_t());
    factor.add_coeff(1, 0, &alpha_t());
    factor.add_coeff(0, 1, &alpha_t());
    rhs = add(&rhs, &mul(&factor, &pe_sum_h).scale(&crate::algebra::rat(sign)));
    rhs = add(&rhs, &exp_phi_h(b));
    (bb_h.deriv_x(), rhs)
}
