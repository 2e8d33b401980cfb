//! Definitional brute-force oracles shared by the integration tests. These
//! touch only `Graph::order` and `Graph::has_edge`, so they are independent
//! of the search kernels they validate.

use domsuite::Graph;

pub fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.has_edge(u, v)
}

pub fn dominates(g: &Graph, mask: u32) -> bool {
    (0..g.order()).all(|v| {
        mask & (1 << v) != 0
            || (0..g.order()).any(|u| mask & (1 << u) != 0 && adjacent(g, u, v))
    })
}

pub fn independent(g: &Graph, mask: u32) -> bool {
    (0..g.order()).all(|u| {
        mask & (1 << u) == 0
            || (u + 1..g.order()).all(|v| mask & (1 << v) == 0 || !adjacent(g, u, v))
    })
}

pub fn maximal_independent(g: &Graph, mask: u32) -> bool {
    independent(g, mask)
        && (0..g.order()).all(|v| mask & (1 << v) != 0 || !independent(g, mask | (1 << v)))
}

pub fn minimal_dominating(g: &Graph, mask: u32) -> bool {
    dominates(g, mask)
        && (0..g.order()).all(|v| mask & (1 << v) == 0 || !dominates(g, mask & !(1 << v)))
}

/// (γ, i, α, Γ) by subset enumeration.
pub fn brute_chain(g: &Graph) -> (usize, usize, usize, usize) {
    let n = g.order();
    assert!(n <= 16, "oracle is exponential");
    let mut gamma = usize::MAX;
    let mut idom = usize::MAX;
    let mut alpha = 0;
    let mut upper = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if dominates(g, mask) {
            gamma = gamma.min(size);
            if minimal_dominating(g, mask) {
                upper = upper.max(size);
            }
        }
        if maximal_independent(g, mask) {
            idom = idom.min(size);
        }
        if independent(g, mask) {
            alpha = alpha.max(size);
        }
    }
    (gamma, idom, alpha, upper)
}

/// Vertices x admitting an independent I ⊆ V ∖ N[x] with N(x) ⊆ N[I].
pub fn brute_isolatable(g: &Graph) -> Vec<usize> {
    let n = g.order();
    assert!(n <= 16, "oracle is exponential");
    let mut out = Vec::new();
    for x in 0..n {
        let closed: u32 = (1 << x)
            | (0..n)
                .filter(|&u| adjacent(g, x, u))
                .fold(0u32, |acc, u| acc | (1 << u));
        let open = closed & !(1u32 << x);
        let outside = !closed & ((1u32 << n) - 1);
        let mut found = false;
        'masks: for sub in 0u32..(1 << n) {
            if sub & !outside != 0 || !independent(g, sub) {
                continue;
            }
            for y in 0..n {
                if open & (1 << y) == 0 {
                    continue;
                }
                let covered = (0..n).any(|z| sub & (1 << z) != 0 && adjacent(g, y, z));
                if !covered {
                    continue 'masks;
                }
            }
            found = true;
            break;
        }
        if found {
            out.push(x);
        }
    }
    out
}
