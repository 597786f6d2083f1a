use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{format_rational, Rational};
use crate::buildingset::{BuildingSet, CanonicalKey, KeyMode};

/// A product of connected nestohedra, as a sorted multiset of keys. Points
/// are the multiplicative unit and never appear as factors, so the empty
/// product is the point.
pub type Product = Vec<CanonicalKey>;

/// A rational combination of products of connected nestohedra: an element
/// of the polytope ring, with `+` as disjoint union and `×` as product.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyExpr {
    terms: BTreeMap<Product, Rational>,
}

impl PolyExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn point() -> Self {
        Self::product(Vec::new(), Rational::one())
    }

    pub fn product(mut factors: Product, coeff: Rational) -> Self {
        factors.sort();
        let mut e = Self::zero();
        e.add_term(factors, coeff);
        e
    }

    /// The nestohedron of `b` as a product of its connected components.
    pub fn of_building_set(b: &BuildingSet) -> Self {
        Self::product(factors_of(b), Rational::one())
    }

    /// Adds `coeff · Π factors` in place.
    pub fn add_product(&mut self, mut factors: Product, coeff: Rational) {
        factors.sort();
        self.add_term(factors, coeff);
    }

    fn add_term(&mut self, factors: Product, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(factors) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
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

    pub fn terms(&self) -> impl Iterator<Item = (&Product, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, factors: &[CanonicalKey]) -> Rational {
        let mut f = factors.to_vec();
        f.sort();
        self.terms.get(&f).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sum of all coefficients; for a boundary this counts facets.
    pub fn total_coefficient(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn add(&self, other: &PolyExpr) -> PolyExpr {
        let mut out = self.clone();
        for (f, c) in &other.terms {
            out.add_term(f.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> PolyExpr {
        let mut out = PolyExpr::zero();
        for (f, v) in &self.terms {
            out.add_term(f.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &PolyExpr) -> PolyExpr {
        let mut out = PolyExpr::zero();
        for (f1, c1) in &self.terms {
            for (f2, c2) in &other.terms {
                let mut f: Product = f1.iter().chain(f2).cloned().collect();
                f.sort();
                out.add_term(f, c1 * c2);
            }
        }
        out
    }

    /// Re-keys every factor by its isomorphism class, merging terms that
    /// differ only by relabelling.
    pub fn to_isomorphism_classes(&self) -> PolyExpr {
        let mut out = PolyExpr::zero();
        for (f, c) in &self.terms {
            let mut g: Product = f.iter().map(|k| k.to_building_set().canonical_key(KeyMode::Isomorphism)).collect();
            g.sort();
            out.add_term(g, c.clone());
        }
        out
    }

    /// Dimensions of the products present, which must all agree for a
    /// homogeneous element.
    pub fn dimensions(&self) -> Vec<usize> {
        let mut dims: Vec<usize> = self.terms.keys().map(|f| f.iter().map(CanonicalKey::dimension).sum()).collect();
        dims.sort_unstable();
        dims.dedup();
        dims
    }
}

/// Label-order keys of the non-point components of `b`.
pub(crate) fn factors_of(b: &BuildingSet) -> Product {
    let mut f: Product = b
        .components()
        .into_iter()
        .filter(|c| c.ground_size() > 1)
        .map(|c| c.canonical_key(KeyMode::LabelOrder))
        .collect();
    f.sort();
    f
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (factors, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·")?;
            if factors.is_empty() {
                f.write_str("pt")?;
            }
            for (i, key) in factors.iter().enumerate() {
                if i > 0 {
                    f.write_str("×")?;
                }
                write!(f, "P{:?}", key.to_building_set().to_label_lists())?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermView {
    coefficient: String,
    factors: Vec<BuildingSet>,
}

impl Serialize for PolyExpr {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let view: Vec<TermView> = self
            .terms
            .iter()
            .map(|(f, c)| TermView {
                coefficient: format_rational(c),
                factors: f.iter().map(CanonicalKey::to_building_set).collect(),
            })
            .collect();
        view.serialize(serializer)
    }
}
