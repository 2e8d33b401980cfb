//! Isomorphism testing for small graphs: joint color refinement narrows the
//! search, a backtracking mapping search settles it exactly.

use std::collections::BTreeMap;

use crate::graph::{Graph, GraphError};

pub const DEFAULT_ISO_CAP: usize = 16;

/// True iff there is an edge-preserving bijection between the vertex sets.
/// Both orders must stay within `cap`.
pub fn are_isomorphic(g: &Graph, h: &Graph, cap: usize) -> Result<bool, GraphError> {
    for side in [g, h] {
        if side.order() > cap {
            return Err(GraphError::IsomorphismCap {
                order: side.order(),
                cap,
            });
        }
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let n = g.order();
    let (cg, ch) = match refine_jointly(g, h) {
        Some(colors) => colors,
        None => return Ok(false), // color histograms diverged
    };

    // group target vertices by color
    let mut by_color: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (v, &c) in ch.iter().enumerate() {
        by_color.entry(c).or_default().push(v);
    }
    // map rare colors first to fail fast
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (by_color[&cg[v]].len(), cg[v], v));

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g, h, &cg, &by_color, &order, 0, &mut image, &mut used))
}

fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[u32],
    by_color: &BTreeMap<u32, Vec<usize>>,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for &w in &by_color[&cg[v]] {
        if used[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&a| g.has_edge(v, a) == h.has_edge(w, image[a]));
        if consistent {
            image[v] = w;
            used[w] = true;
            if extend(g, h, cg, by_color, order, depth + 1, image, used) {
                return true;
            }
            used[w] = false;
            image[v] = usize::MAX;
        }
    }
    false
}

/// Iterated neighborhood refinement run over both graphs at once so the color
/// ids are comparable. Returns None as soon as the color histograms differ.
fn refine_jointly(g: &Graph, h: &Graph) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g.order();
    let mut cg = vec![0u32; n];
    let mut ch = vec![0u32; n];
    let mut classes = 1usize;
    loop {
        let key = |graph: &Graph, colors: &[u32], v: usize| {
            let mut nb: Vec<u32> = graph.neighbors(v).iter().map(|u| colors[u]).collect();
            nb.sort_unstable();
            (colors[v], nb)
        };
        let mut ids: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
        for v in 0..n {
            ids.entry(key(g, &cg, v)).or_insert(0);
            ids.entry(key(h, &ch, v)).or_insert(0);
        }
        for (i, (_, id)) in ids.iter_mut().enumerate() {
            *id = i as u32;
        }
        let next_g: Vec<u32> = (0..n).map(|v| ids[&key(g, &cg, v)]).collect();
        let next_h: Vec<u32> = (0..n).map(|v| ids[&key(h, &ch, v)]).collect();

        let mut hist_g = next_g.clone();
        let mut hist_h = next_h.clone();
        hist_g.sort_unstable();
        hist_h.sort_unstable();
        if hist_g != hist_h {
            return None;
        }
        let new_classes = ids.len();
        cg = next_g;
        ch = next_h;
        if new_classes == classes {
            return Some((cg, ch));
        }
        classes = new_classes;
    }
}
