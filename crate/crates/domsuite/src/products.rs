//! Graph products on the pairing (g, h) -> g * n(H) + h, plus the pendant
//! (corona with K1) construction.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const PRODUCT_ORDER_CAP: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("product order {order} exceeds the construction cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
}

impl ProductKind {
    pub fn symbol(&self) -> &'static str {
        match self {
            ProductKind::Cartesian => "□",
            ProductKind::Direct => "×",
            ProductKind::Strong => "⊠",
        }
    }
}

/// Index of the pair (g, h) in a product where the right factor has order `h_order`.
pub fn pair_index(h_order: usize, g: usize, h: usize) -> usize {
    g * h_order + h
}

pub fn product_with_cap(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    cap: usize,
) -> Result<Graph, ProductError> {
    let order = g.order() * h.order();
    if order > cap {
        return Err(ProductError::TooLarge { order, cap });
    }
    let nh = h.order();
    let mut p = Graph::new(order)?;
    let one_coordinate = matches!(kind, ProductKind::Cartesian | ProductKind::Strong);
    let both_coordinates = matches!(kind, ProductKind::Direct | ProductKind::Strong);
    if one_coordinate {
        for (h1, h2) in h.edges().collect::<Vec<_>>() {
            for g1 in g.vertices() {
                p.add_edge(pair_index(nh, g1, h1), pair_index(nh, g1, h2))?;
            }
        }
        for (g1, g2) in g.edges().collect::<Vec<_>>() {
            for h1 in h.vertices() {
                p.add_edge(pair_index(nh, g1, h1), pair_index(nh, g2, h1))?;
            }
        }
    }
    if both_coordinates {
        for (g1, g2) in g.edges().collect::<Vec<_>>() {
            for (h1, h2) in h.edges().collect::<Vec<_>>() {
                p.add_edge(pair_index(nh, g1, h1), pair_index(nh, g2, h2))?;
                p.add_edge(pair_index(nh, g1, h2), pair_index(nh, g2, h1))?;
            }
        }
    }
    if let (Some(a), Some(b)) = (&g.name, &h.name) {
        p = p.with_name(format!("{a}{}{b}", kind.symbol()));
    }
    Ok(p)
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Graph, ProductError> {
    product_with_cap(kind, g, h, PRODUCT_ORDER_CAP)
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, ProductError> {
    product(ProductKind::Cartesian, g, h)
}

pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph, ProductError> {
    product(ProductKind::Direct, g, h)
}

pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph, ProductError> {
    product(ProductKind::Strong, g, h)
}

/// G with one pendant vertex per original vertex: vertex u keeps its label,
/// its pendant is n + u. Order doubles.
pub fn corona_k1_with_cap(g: &Graph, cap: usize) -> Result<Graph, ProductError> {
    let n = g.order();
    let order = 2 * n;
    if order > cap {
        return Err(ProductError::TooLarge { order, cap });
    }
    let mut c = Graph::new(order)?;
    for (u, v) in g.edges().collect::<Vec<_>>() {
        c.add_edge(u, v)?;
    }
    for u in g.vertices() {
        c.add_edge(u, n + u)?;
    }
    if let Some(name) = &g.name {
        c = c.with_name(format!("{name}⊙K1"));
    }
    Ok(c)
}

pub fn corona_k1(g: &Graph) -> Result<Graph, ProductError> {
    corona_k1_with_cap(g, PRODUCT_ORDER_CAP)
}
