use num_traits::One;

use super::expr::{factors_of, PolyExpr, Product};
use super::RingError;
use crate::algebra::Rational;
use crate::buildingset::{BuildingSet, Graph};

/// Facets of a connected nestohedron: one term `P_{B|S} × P_{B−S}` per
/// member `S` other than the whole ground.
pub fn boundary(b: &BuildingSet) -> Result<PolyExpr, RingError> {
    if !b.is_connected() {
        return Err(RingError::Disconnected);
    }
    let full = b.full_mask();
    let mut out = PolyExpr::zero();
    for &s in b.sets().iter().filter(|&&s| s != full) {
        let inner = b.restriction(s)?;
        let outer = b.removal(s)?;
        let factors: Product = factors_of(&inner).into_iter().chain(factors_of(&outer)).collect();
        out.add_product(factors, Rational::one());
    }
    Ok(out)
}

/// `d` extended linearly and by the Leibniz rule over products.
pub fn boundary_expr(e: &PolyExpr) -> PolyExpr {
    let mut out = PolyExpr::zero();
    for (factors, c) in e.terms() {
        for i in 0..factors.len() {
            let rest: Product = factors.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, k)| k.clone()).collect();
            let d = boundary(&factors[i].to_building_set()).expect("factors are connected");
            out = out.add(&PolyExpr::product(rest, c.clone()).mul(&d));
        }
    }
    out
}

/// The same facet decomposition read off the graph: for each proper node
/// subset `G` inducing a connected subgraph, the product of the induced graph's
/// nestohedron and that of the graph contracted onto the complement.
pub fn boundary_graph(g: &Graph) -> Result<PolyExpr, RingError> {
    if !g.is_connected() {
        return Err(RingError::Disconnected);
    }
    let full = g.full_mask();
    let mut out = PolyExpr::zero();
    for mask in 1..full {
        if !g.is_connected_subset(mask) {
            continue;
        }
        let inner = BuildingSet::from_graph(&g.induced(mask))?;
        let outer = BuildingSet::from_graph(&g.contracted(mask))?;
        let factors: Product = factors_of(&inner).into_iter().chain(factors_of(&outer)).collect();
        out.add_product(factors, Rational::one());
    }
    Ok(out)
}
