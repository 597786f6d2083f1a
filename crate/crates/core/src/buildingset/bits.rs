//! Bitmask helpers over grounds of at most 32 elements.

/// Set bit positions of `mask`, ascending.
pub fn positions(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

pub fn expand(indices: &[usize]) -> u32 {
    indices.iter().fold(0, |m, &i| m | 1 << i)
}

/// Nodes reachable from `start` using only nodes in `within`.
pub fn component_of(adj: &[u32], within: u32, start: usize) -> u32 {
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in positions(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Packs the bits of `mask` lying in `within` into consecutive low positions,
/// in order.
pub fn compress(mask: u32, within: u32) -> u32 {
    let mut out = 0;
    for (k, i) in positions(within).enumerate() {
        out |= (mask >> i & 1) << k;
    }
    out
}
