//! Independent oracles, sharing nothing with the recursion beyond the
//! building-set constructor.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

use nestohedra::algebra::Rational;
use nestohedra::buildingset::{BuildingSet, Graph, KeyMode};
use nestohedra::ringcalc::{PolyExpr, Product};

/// f-vector from nested sets: collections of non-maximal members that are
/// pairwise nested or disjoint, where no union of two or more pairwise
/// disjoint ones is a member. A nested set of size `k` is a face of
/// codimension `k`.
pub fn nested_set_fvector(b: &BuildingSet) -> Vec<BigInt> {
    let maximal = b.maximal_sets();
    let members: Vec<u32> = b.sets().iter().copied().filter(|s| !maximal.contains(s)).collect();
    let dim = b.ground_size() - maximal.len();
    let mut counts = vec![BigInt::zero(); dim + 1];
    let mut chosen = Vec::new();
    extend(b, &members, 0, &mut chosen, &mut counts);
    counts.reverse();
    counts
}

fn extend(b: &BuildingSet, members: &[u32], from: usize, chosen: &mut Vec<u32>, counts: &mut [BigInt]) {
    counts[chosen.len()] += 1;
    for idx in from..members.len() {
        let s = members[idx];
        if chosen.iter().all(|&c| compatible(c, s)) && !closes_union(b, chosen, s) {
            chosen.push(s);
            extend(b, members, idx + 1, chosen, counts);
            chosen.pop();
        }
    }
}

fn compatible(a: u32, b: u32) -> bool {
    a & b == 0 || a & b == a || a & b == b
}

/// Whether `s` together with some pairwise disjoint subfamily of `chosen`
/// (all disjoint from `s`) has a union that is a member.
fn closes_union(b: &BuildingSet, chosen: &[u32], s: u32) -> bool {
    let disjoint: Vec<u32> = chosen.iter().copied().filter(|&c| c & s == 0).collect();
    for pick in 1u32..(1 << disjoint.len()) {
        let mut union = s;
        let mut ok = true;
        for (i, &c) in disjoint.iter().enumerate() {
            if pick >> i & 1 == 1 {
                if union & c != 0 {
                    ok = false;
                    break;
                }
                union |= c;
            }
        }
        if ok && b.contains(union) {
            return true;
        }
    }
    false
}

/// Node subsets inducing a connected subgraph, found by breadth-first search
/// on edge lists.
pub fn connected_subset_count(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    (1u32..(1 << n))
        .filter(|&mask| {
            let nodes: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let mut seen = vec![nodes[0]];
            let mut queue = vec![nodes[0]];
            while let Some(v) = queue.pop() {
                for &(a, b) in &edges {
                    let w = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if mask >> w & 1 == 1 && !seen.contains(&w) {
                        seen.push(w);
                        queue.push(w);
                    }
                }
            }
            seen.len() == nodes.len()
        })
        .count()
}

pub fn stirling2(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for j in 1..=m {
            let carry = if j < m { &row[j] * BigInt::from(j) } else { BigInt::zero() };
            next[j] = carry + &row[j - 1];
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Faces of the permutohedron on `n + 1` letters are ordered set partitions:
/// an `i`-face has `n + 1 − i` blocks.
pub fn permutohedron_fvector(n: usize) -> Vec<BigInt> {
    (0..=n).map(|i| factorial(n + 1 - i) * stirling2(n + 1, n + 1 - i)).collect()
}

pub fn binomial(n: usize, k: usize) -> Rational {
    Rational::from_integer(factorial(n) / (factorial(k) * factorial(n - k)))
}

/// A product of graphical nestohedra keyed by isomorphism class; points drop out.
pub fn product(graphs: &[Graph]) -> Product {
    graphs
        .iter()
        .filter(|g| g.n() > 1)
        .map(|g| BuildingSet::from_graph(g).unwrap().canonical_key(KeyMode::Isomorphism))
        .collect()
}

pub fn pe(n: usize) -> Graph {
    Graph::complete(n + 1)
}

pub fn st(n: usize) -> Graph {
    Graph::star(n)
}

/// `d Pe^n = Σ_{i+j=n−1} C(n+1, i+1) Pe^i × Pe^j`.
pub fn d_permutohedron(n: usize) -> PolyExpr {
    let mut e = PolyExpr::zero();
    for i in 0..n {
        let j = n - 1 - i;
        e.add_product(product(&[pe(i), pe(j)]), binomial(n + 1, i + 1));
    }
    e
}

/// `d St^n = n St^{n−1} + Σ_{i<n} C(n, i) St^i × Pe^{n−i−1}`.
pub fn d_stellohedron(n: usize) -> PolyExpr {
    let mut e = PolyExpr::zero();
    if n >= 1 {
        e.add_product(product(&[st(n - 1)]), Rational::from_integer(BigInt::from(n)));
    }
    for i in 0..n {
        e.add_product(product(&[st(i), pe(n - i - 1)]), binomial(n, i));
    }
    e
}

/// `join(K_k, E_l)`: a side of `k` nodes made complete, fully joined to `l`
/// further nodes.
pub fn complete_side(k: usize, l: usize) -> Graph {
    Graph::join(&Graph::complete(k), &Graph::empty(l))
}

/// Boundary of the `K_{s,t}` nestohedron for `s, t ≥ 2` as five sums.
/// Removing one node makes the opposite side complete; every other member
/// leaves a complete remainder.
pub fn d_bipartite(s: usize, t: usize) -> PolyExpr {
    let mut e = PolyExpr::zero();
    let n = |x: usize| Rational::from_integer(BigInt::from(x));
    e.add_product(product(&[complete_side(t, s - 1)]), n(s));
    e.add_product(product(&[complete_side(s, t - 1)]), n(t));
    for i in 1..s {
        for j in 1..t {
            e.add_product(product(&[Graph::bipartite(i, j), pe(s + t - i - j - 1)]), binomial(s, i) * binomial(t, j));
        }
    }
    for i in 1..s {
        e.add_product(product(&[Graph::bipartite(i, t), pe(s - i - 1)]), binomial(s, i));
    }
    for j in 1..t {
        e.add_product(product(&[Graph::bipartite(s, j), pe(t - j - 1)]), binomial(t, j));
    }
    e
}
