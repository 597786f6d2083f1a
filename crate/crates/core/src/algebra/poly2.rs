//! Sparse bivariate polynomials in `α` and `t` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{binomial, format_rational, parse_rational, Rational};
use super::AlgebraError;

/// Exponent pair `(i, j)` for the monomial `α^i t^j`.
pub type Exponent = (u32, u32);

/// A polynomial `Σ c_{ij} α^i t^j`. Zero coefficients are never stored and
/// terms iterate in lexicographic `(i, j)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<TermRecord>", try_from = "Vec<TermRecord>")]
pub struct Poly2 {
    terms: BTreeMap<Exponent, Rational>,
}

/// Wire form of one term: `{i, j, c}` with `c` rendered as `"p/q"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermRecord {
    pub i: u32,
    pub j: u32,
    pub c: String,
}

impl From<Poly2> for Vec<TermRecord> {
    fn from(p: Poly2) -> Self {
        p.terms.iter().map(|(&(i, j), c)| TermRecord { i, j, c: format_rational(c) }).collect()
    }
}

impl TryFrom<Vec<TermRecord>> for Poly2 {
    type Error = String;

    fn try_from(records: Vec<TermRecord>) -> Result<Self, Self::Error> {
        let mut p = Poly2::zero();
        for r in records {
            let c = parse_rational(&r.c).ok_or_else(|| format!("bad rational {:?}", r.c))?;
            p.add_term(r.i, r.j, c);
        }
        Ok(p)
    }
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn alpha() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// Builds a polynomial from integer coefficients; repeated exponents accumulate.
    pub fn from_int_terms<I: IntoIterator<Item = (u32, u32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, Rational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Adds `c·α^i t^j` in place, pruning the term if it cancels.
    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest total degree `i + j`, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    /// Multiplies by the monomial `α^di t^dj`.
    pub fn shift(&self, di: u32, dj: u32) -> Self {
        Self { terms: self.terms.iter().map(|(&(i, j), v)| ((i + di, j + dj), v.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `p(α − t, t)`: the change of variables taking an f-polynomial to its h-polynomial.
    pub fn subst_h(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            // (α − t)^i = Σ_m C(i, m) α^{i−m} (−t)^m
            for m in 0..=i {
                let mut b = Rational::from_integer(binomial(i, m));
                if m % 2 == 1 {
                    b = -b;
                }
                out.add_term(i - m, j + m, b * c);
            }
        }
        out
    }

    /// `∂/∂t`.
    pub fn deriv_t(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c * Rational::from_integer(BigInt::from(j)));
            }
        }
        out
    }

    /// Exchanges the roles of `α` and `t`.
    pub fn swap_vars(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(i, j), c)| self.terms.get(&(j, i)) == Some(c))
    }

    /// Returns `n` when every term has `i + j = n`.
    pub fn homogeneous_degree(&self) -> Result<u32, AlgebraError> {
        let Some((&(i0, j0), _)) = self.terms.iter().next() else {
            return Err(AlgebraError::ZeroPolynomial);
        };
        let expected = i0 + j0;
        let offending: Vec<Exponent> = self.terms.keys().copied().filter(|&(i, j)| i + j != expected).collect();
        if offending.is_empty() {
            Ok(expected)
        } else {
            Err(AlgebraError::Inhomogeneous { expected, offending })
        }
    }

    pub fn eval(&self, alpha: &Rational, t: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&(i, j), c)| {
            acc + c * num_traits::pow(alpha.clone(), i as usize) * num_traits::pow(t.clone(), j as usize)
        })
    }

    /// The `(i, j)` coefficients as pairs, for compact assertions.
    pub fn to_pairs(&self) -> Vec<(Exponent, Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c.clone())).collect()
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest α power first reads most naturally for f-polynomials.
        for (k, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = mag.is_one();
            if !unit || (i == 0 && j == 0) {
                write!(f, "{mag}")?;
            }
            for (sym, e) in [("α", i), ("t", j)] {
                match e {
                    0 => {}
                    1 => f.write_str(sym)?,
                    _ => write!(f, "{sym}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl AddAssign<&Poly2> for Poly2 {
    fn add_assign(&mut self, rhs: &Poly2) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl SubAssign<&Poly2> for Poly2 {
    fn sub_assign(&mut self, rhs: &Poly2) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, -c.clone());
        }
    }
}

impl Add<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly2> for Poly2 {
            type Output = Poly2;
            fn $m(self, rhs: Poly2) -> Poly2 {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly2> for Poly2 {
            type Output = Poly2;
            fn $m(self, rhs: &Poly2) -> Poly2 {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        -&self
    }
}
