//! Simple undirected graphs on at most 32 nodes, stored as adjacency bitmasks.

use std::fmt;
use std::str::FromStr;

use super::bits::{component_of, positions};
use super::perm::for_each_permutation;
use super::GraphError;

/// Largest node count a [`Graph`] can hold.
pub const MAX_GRAPH_NODES: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u32>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GRAPH_NODES, "graph too large");
        Self { adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        let full = full_mask(n);
        for (i, a) in g.adj.iter_mut().enumerate() {
            *a = full & !(1 << i);
        }
        g
    }

    /// Path on `n` nodes `0 − 1 − … − (n−1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..n {
            g.link(i - 1, i);
        }
        g
    }

    /// A center (node 0) joined to `leaves` further nodes.
    pub fn star(leaves: usize) -> Self {
        Self::join(&Self::complete(1), &Self::empty(leaves))
    }

    /// `K_{m,n}`: the first `m` nodes form one side.
    pub fn bipartite(m: usize, n: usize) -> Self {
        Self::join(&Self::empty(m), &Self::empty(n))
    }

    /// Disjoint union of `a` and `b` (nodes of `b` shifted past those of `a`)
    /// plus every edge between the two parts.
    pub fn join(a: &Graph, b: &Graph) -> Self {
        let (na, nb) = (a.n(), b.n());
        assert!(na + nb <= MAX_GRAPH_NODES, "graph too large");
        let a_mask = full_mask(na);
        let b_mask = full_mask(nb) << na;
        let mut adj = Vec::with_capacity(na + nb);
        adj.extend(a.adj.iter().map(|&m| m | b_mask));
        adj.extend(b.adj.iter().map(|&m| (m << na) | a_mask));
        Self { adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_GRAPH_NODES {
            return Err(GraphError::TooManyNodes(n));
        }
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u32] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in positions(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn full_mask(&self) -> u32 {
        full_mask(self.n())
    }

    /// Whether the subgraph induced on `mask` is connected (and nonempty).
    pub fn is_connected_subset(&self, mask: u32) -> bool {
        mask != 0 && component_of(&self.adj, mask, mask.trailing_zeros() as usize) == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(self.full_mask())
    }

    /// Subgraph induced on `mask`, nodes relabelled `0..` in increasing order.
    pub fn induced(&self, mask: u32) -> Graph {
        let nodes = positions(mask).collect::<Vec<_>>();
        let mut g = Self::empty(nodes.len());
        for (a, &u) in nodes.iter().enumerate() {
            for (b, &v) in nodes.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.link(a, b);
                }
            }
        }
        g
    }

    /// The graph on the complement of `inner` in which `i` and `j` are adjacent
    /// exactly when they are path-connected inside the subgraph induced on
    /// `inner ∪ {i, j}`. Nodes are relabelled in increasing order.
    pub fn contracted(&self, inner: u32) -> Graph {
        let outer = self.full_mask() & !inner;
        let nodes = positions(outer).collect::<Vec<_>>();
        let mut g = Self::empty(nodes.len());
        for (a, &u) in nodes.iter().enumerate() {
            for (b, &v) in nodes.iter().enumerate().skip(a + 1) {
                let within = inner | 1 << u | 1 << v;
                if component_of(&self.adj, within, u) >> v & 1 == 1 {
                    g.link(a, b);
                }
            }
        }
        g
    }

    /// Relabels node `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Self::empty(self.n());
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        g
    }

    /// Upper-triangle edge code: bit `index(u, v)` set for each edge.
    fn edge_code(&self, perm: Option<&[usize]>) -> u64 {
        let n = self.n();
        let mut code = 0u64;
        for (u, v) in self.edges() {
            let (mut a, mut b) = match perm {
                Some(p) => (p[u], p[v]),
                None => (u, v),
            };
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            code |= 1 << pair_index(n, a, b);
        }
        code
    }

    /// Isomorphism invariant: the maximal edge code over all relabellings.
    /// Only defined for graphs on at most 8 nodes.
    pub fn canonical_code(&self) -> Option<u64> {
        if self.n() > 8 {
            return None;
        }
        let mut best = 0u64;
        for_each_permutation(self.n(), |perm| {
            best = best.max(self.edge_code(Some(perm)));
        });
        Some(best)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Option<bool> {
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return Some(false);
        }
        Some(self.canonical_code()? == other.canonical_code()?)
    }

    /// Graph on `n` nodes whose edges are read off a code from [`Graph::edge_code`].
    pub(crate) fn from_code(n: usize, code: u64) -> Graph {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if code >> pair_index(n, u, v) & 1 == 1 {
                    g.link(u, v);
                }
            }
        }
        g
    }

    /// Adds a new node adjacent to the nodes in `mask`.
    pub(crate) fn with_extra_node(&self, mask: u32) -> Graph {
        let n = self.n();
        let mut adj = self.adj.clone();
        for v in positions(mask) {
            adj[v] |= 1 << n;
        }
        adj.push(mask);
        Graph { adj }
    }

    /// Edge-list spec that parses back to this graph.
    pub fn to_spec(&self) -> String {
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("edges:{}:{}", self.n(), edges.join(","))
    }

    #[cfg(test)]
    pub(crate) fn code(&self) -> u64 {
        self.edge_code(None)
    }
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    // rows 0..a contribute (n−1) + (n−2) + … ; then offset within row a
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_spec())
    }
}

/// Parses the graph mini-language:
/// `complete:N`, `empty:N`, `star:N`, `path:N`, `bipartite:M,N`,
/// `join(SPEC,SPEC)` and `edges:N:0-1,1-2,…` (0-based endpoints).
impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || GraphError::Parse(s.to_string());
        let size = |v: &str| -> Result<usize, GraphError> {
            let n: usize = v.trim().parse().map_err(|_| bad())?;
            if n > MAX_GRAPH_NODES {
                return Err(GraphError::TooManyNodes(n));
            }
            Ok(n)
        };

        if let Some(inner) = s.strip_prefix("join(").and_then(|r| r.strip_suffix(')')) {
            let split = top_level_comma(inner).ok_or_else(bad)?;
            let a: Graph = inner[..split].parse()?;
            let b: Graph = inner[split + 1..].parse()?;
            if a.n() + b.n() > MAX_GRAPH_NODES {
                return Err(GraphError::TooManyNodes(a.n() + b.n()));
            }
            return Ok(Graph::join(&a, &b));
        }

        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind.trim() {
            "complete" => Ok(Graph::complete(size(rest)?)),
            "empty" => Ok(Graph::empty(size(rest)?)),
            "path" => Ok(Graph::path(size(rest)?)),
            "star" => {
                let leaves = size(rest)?;
                if leaves + 1 > MAX_GRAPH_NODES {
                    return Err(GraphError::TooManyNodes(leaves + 1));
                }
                Ok(Graph::star(leaves))
            }
            "bipartite" => {
                let (m, n) = rest.split_once(',').ok_or_else(bad)?;
                let (m, n) = (size(m)?, size(n)?);
                if m + n > MAX_GRAPH_NODES {
                    return Err(GraphError::TooManyNodes(m + n));
                }
                Ok(Graph::bipartite(m, n))
            }
            "edges" => {
                let (n, list) = match rest.split_once(':') {
                    Some((n, list)) => (size(n)?, list),
                    None => (size(rest)?, ""),
                };
                let mut edges = Vec::new();
                for item in list.split(',').map(str::trim).filter(|e| !e.is_empty()) {
                    let (u, v) = item.split_once('-').ok_or_else(bad)?;
                    let u = u.trim().parse().map_err(|_| bad())?;
                    let v = v.trim().parse().map_err(|_| bad())?;
                    edges.push((u, v));
                }
                Graph::from_edges(n, &edges)
            }
            _ => Err(bad()),
        }
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            // `bipartite:M,N` carries its own comma; a top-level separator
            // must be followed by the start of a new spec.
            ',' if depth == 0 && starts_spec(&s[i + 1..]) => return Some(i),
            _ => {}
        }
    }
    None
}

fn starts_spec(s: &str) -> bool {
    let s = s.trim_start();
    ["complete:", "empty:", "star:", "path:", "bipartite:", "join(", "edges:"].iter().any(|p| s.starts_with(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions() {
        let k11 = Graph::bipartite(1, 1);
        assert_eq!(k11.n(), 2);
        assert_eq!(k11.edges(), vec![(0, 1)]);

        let c4 = Graph::join(&Graph::empty(2), &Graph::empty(2));
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4, Graph::bipartite(2, 2));

        let s3 = Graph::star(3);
        assert_eq!(s3.n(), 4);
        assert_eq!(s3.edges(), vec![(0, 1), (0, 2), (0, 3)]);

        assert_eq!(Graph::join(&Graph::complete(2), &Graph::complete(3)), Graph::complete(5));
        assert_eq!(Graph::path(3).edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn from_edges_rejects_bad_endpoints() {
        assert_eq!(Graph::from_edges(2, &[(0, 2)]), Err(GraphError::EdgeOutOfRange { u: 0, v: 2, n: 2 }));
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        // duplicates collapse
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap().edge_count(), 1);
    }

    #[test]
    fn parse_specs() {
        assert_eq!("complete:3".parse::<Graph>().unwrap(), Graph::complete(3));
        assert_eq!("bipartite:2,3".parse::<Graph>().unwrap(), Graph::bipartite(2, 3));
        assert_eq!("star:2".parse::<Graph>().unwrap(), Graph::star(2));
        assert_eq!("edges:2:0-1".parse::<Graph>().unwrap(), Graph::path(2));
        assert_eq!("edges:3".parse::<Graph>().unwrap(), Graph::empty(3));
        assert_eq!(
            "join(bipartite:1,2,join(empty:1,complete:2))".parse::<Graph>().unwrap(),
            Graph::join(&Graph::bipartite(1, 2), &Graph::join(&Graph::empty(1), &Graph::complete(2)))
        );
        assert!("edges:2:0-2".parse::<Graph>().is_err());
        assert!("cube:3".parse::<Graph>().is_err());
        assert!("complete:x".parse::<Graph>().is_err());
        assert!("join(complete:2)".parse::<Graph>().is_err());
        let g = Graph::bipartite(2, 2);
        assert_eq!(g.to_spec().parse::<Graph>().unwrap(), g);
    }

    #[test]
    fn connectivity_and_contraction() {
        let p = Graph::path(3);
        assert!(p.is_connected());
        assert!(!p.is_connected_subset(0b101));
        assert!(!Graph::empty(2).is_connected());
        // removing the middle of a path joins its ends
        assert_eq!(p.contracted(0b010), Graph::path(2));
        // removing an endpoint leaves the rest alone
        assert_eq!(p.contracted(0b001), Graph::path(2));
        assert_eq!(Graph::bipartite(2, 2).contracted(0b0001), Graph::complete(3));
        assert_eq!(Graph::bipartite(2, 2).induced(0b0111), Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap());
    }

    #[test]
    fn canonical_codes_detect_isomorphism() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.is_isomorphic(&b), Some(true));
        assert_eq!(a.is_isomorphic(&Graph::complete(3)), Some(false));
        assert_eq!(Graph::complete(9).canonical_code(), None);
        let g = Graph::bipartite(2, 3);
        assert_eq!(Graph::from_code(g.n(), g.code()), g);
    }
}
