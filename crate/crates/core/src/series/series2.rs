use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::Serialize;

use super::SeriesError;
use crate::algebra::{factorial, Poly2, Rational};

/// Index `(k, l)` of the monomial `x^k y^l`.
pub type Index = (u32, u32);

/// A power series in `x, y` with [`Poly2`] coefficients, truncated above
/// total degree `order`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series2 {
    order: u32,
    coeffs: BTreeMap<Index, Poly2>,
}

/// First coefficient at which two series differ, scanning by `(k + l, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub k: u32,
    pub l: u32,
    /// `left − right` at `x^k y^l`.
    pub difference: Poly2,
}

impl Series2 {
    pub fn zero(order: u32) -> Self {
        Self { order, coeffs: BTreeMap::new() }
    }

    pub fn constant(order: u32, c: Poly2) -> Self {
        Self::monomial(order, 0, 0, c)
    }

    pub fn one(order: u32) -> Self {
        Self::constant(order, Poly2::one())
    }

    pub fn x(order: u32) -> Self {
        Self::monomial(order, 1, 0, Poly2::one())
    }

    pub fn y(order: u32) -> Self {
        Self::monomial(order, 0, 1, Poly2::one())
    }

    /// `c · x^k y^l`, or zero when `k + l` exceeds the order.
    pub fn monomial(order: u32, k: u32, l: u32, c: Poly2) -> Self {
        let mut s = Self::zero(order);
        s.add_coeff(k, l, &c);
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u32, l: u32) -> Poly2 {
        self.coeffs.get(&(k, l)).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (Index, &Poly2)> {
        self.coeffs.iter().map(|(&i, p)| (i, p))
    }

    /// Adds `c · x^k y^l`, dropping it when beyond the order.
    pub fn add_coeff(&mut self, k: u32, l: u32, c: &Poly2) {
        if k + l > self.order || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((k, l)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(k, l));
        }
    }

    pub fn remove_coeff(&mut self, k: u32, l: u32) -> Option<Poly2> {
        self.coeffs.remove(&(k, l))
    }

    /// `k! l! · [x^k y^l]`: undoes the exponential normalization.
    pub fn normalized_coeff(&self, k: u32, l: u32) -> Poly2 {
        self.coeff(k, l).scale(&Rational::from_integer(factorial(k) * factorial(l)))
    }

    fn check(&self, other: &Series2) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Series2) -> Result<Series2, SeriesError> {
        self.check(other)?;
        let mut out = self.clone();
        for (&(k, l), c) in &other.coeffs {
            out.add_coeff(k, l, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Series2) -> Result<Series2, SeriesError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Series2) -> Result<Series2, SeriesError> {
        self.check(other)?;
        let mut out = Self::zero(self.order);
        for (&(k1, l1), c1) in &self.coeffs {
            for (&(k2, l2), c2) in &other.coeffs {
                if k1 + l1 + k2 + l2 <= self.order {
                    out.add_coeff(k1 + k2, l1 + l2, &(c1 * c2));
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Series2 {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|(&i, c)| (i, -c)).collect() }
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn scale_poly(&self, p: &Poly2) -> Series2 {
        self.map_coeffs(|c| c * p)
    }

    pub fn scale(&self, r: &Rational) -> Series2 {
        self.map_coeffs(|c| c.scale(r))
    }

    /// Multiplies by `x^dk y^dl`, truncating.
    pub fn shift(&self, dk: u32, dl: u32) -> Series2 {
        let mut out = Self::zero(self.order);
        for (&(k, l), c) in &self.coeffs {
            out.add_coeff(k + dk, l + dl, c);
        }
        out
    }

    pub fn truncate(&self, order: u32) -> Series2 {
        Self {
            order: order.min(self.order),
            coeffs: self.coeffs.iter().filter(|(&(k, l), _)| k + l <= order).map(|(&i, c)| (i, c.clone())).collect(),
        }
    }

    pub fn map_coeffs<F: Fn(&Poly2) -> Poly2>(&self, f: F) -> Series2 {
        let mut out = Self::zero(self.order);
        for (&(k, l), c) in &self.coeffs {
            out.add_coeff(k, l, &f(c));
        }
        out
    }

    /// Applies `α ↦ α − t` to every coefficient.
    pub fn subst_h(&self) -> Series2 {
        self.map_coeffs(Poly2::subst_h)
    }

    pub fn swap_xy(&self) -> Series2 {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|(&(k, l), c)| ((l, k), c.clone())).collect() }
    }

    /// `∂/∂x`. The result is only known through total degree `order − 1`,
    /// so its order drops by one.
    pub fn deriv_x(&self) -> Series2 {
        let mut out = Self::zero(self.order.saturating_sub(1));
        for (&(k, l), c) in &self.coeffs {
            if k > 0 {
                out.add_coeff(k - 1, l, &c.scale(&Rational::from_integer(BigInt::from(k))));
            }
        }
        out
    }

    /// `∂/∂y`; order drops by one as for [`Series2::deriv_x`].
    pub fn deriv_y(&self) -> Series2 {
        self.swap_xy().deriv_x().swap_xy()
    }

    /// `∂/∂t`, acting on the coefficients only.
    pub fn deriv_t(&self) -> Series2 {
        self.map_coeffs(Poly2::deriv_t)
    }

    /// The `y = 0` section.
    pub fn at_y_zero(&self) -> Series2 {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().filter(|(&(_, l), _)| l == 0).map(|(&i, c)| (i, c.clone())).collect(),
        }
    }

    /// Compares through total degree `order` (the smaller of the two orders
    /// if not given) and reports the first differing coefficient by `(k + l, k)`.
    pub fn first_difference(&self, other: &Series2, order: Option<u32>) -> Option<Mismatch> {
        let n = order.unwrap_or(self.order.min(other.order));
        for total in 0..=n {
            for k in 0..=total {
                let l = total - k;
                let d = &self.coeff(k, l) - &other.coeff(k, l);
                if !d.is_zero() {
                    return Some(Mismatch { k, l, difference: d });
                }
            }
        }
        None
    }
}

/// `exp(s) = Σ s^k / k!` for `s` without constant term.
pub fn exp_series(s: &Series2) -> Result<Series2, SeriesError> {
    if !s.coeff(0, 0).is_zero() {
        return Err(SeriesError::NonzeroConstant);
    }
    let mut out = Series2::one(s.order);
    let mut power = Series2::one(s.order);
    for k in 1..=s.order {
        power = power.try_mul(s)?;
        if power.is_zero() {
            break;
        }
        out = out.try_add(&power.scale(&Rational::new(BigInt::one(), factorial(k))))?;
    }
    Ok(out)
}

/// Multiplicative inverse of a series whose constant term is exactly `1`.
pub fn inv_series(s: &Series2) -> Result<Series2, SeriesError> {
    if s.coeff(0, 0) != Poly2::one() {
        return Err(SeriesError::ConstantNotOne);
    }
    // s = 1 − u, so 1/s = Σ u^k
    let u = Series2::one(s.order).try_sub(s)?;
    let mut out = Series2::one(s.order);
    let mut power = Series2::one(s.order);
    for _ in 1..=s.order {
        power = power.try_mul(&u)?;
        if power.is_zero() {
            break;
        }
        out = out.try_add(&power)?;
    }
    Ok(out)
}

/// `η(ux + vy) = Σ_{k≥1} α^{k−1} (ux + vy)^k / k!`, coefficient by coefficient.
pub fn eta_linear(u: u32, v: u32, order: u32) -> Result<Series2, SeriesError> {
    if u > 1 || v > 1 || (u, v) == (0, 0) {
        return Err(SeriesError::BadDirection { u, v });
    }
    let mut out = Series2::zero(order);
    for total in 1..=order {
        for a in 0..=total {
            let b = total - a;
            if (a > 0 && u == 0) || (b > 0 && v == 0) {
                continue;
            }
            // α^{k−1} (x+y)^k / k! contributes α^{k−1} / (a! b!) at x^a y^b
            let c = Rational::new(BigInt::one(), factorial(a) * factorial(b));
            out.add_coeff(a, b, &Poly2::monomial(total - 1, 0, c));
        }
    }
    Ok(out)
}

/// `exp(c · (ux + vy))` for a polynomial `c`.
pub fn exp_linear(c: &Poly2, u: u32, v: u32, order: u32) -> Series2 {
    let arg = Series2::monomial(order, u, v, c.clone());
    exp_series(&arg).expect("no constant term")
}

#[derive(Serialize)]
struct CoeffView<'a> {
    k: u32,
    l: u32,
    poly: &'a Poly2,
}

impl Serialize for Series2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<CoeffView<'_>> = self.coeffs.iter().map(|(&(k, l), poly)| CoeffView { k, l, poly }).collect();
        let mut st = serializer.serialize_struct("Series2", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}
