use wt_tangle::{Connector, Orientation, TangleType, Vertex};

use crate::DualityError;

/// The classical flip of a permutation diagram: vertices to the right of the
/// wall (positions `> r`) swap top and bottom. The result is a walled Brauer
/// diagram of type `(↓^r ↑^s, ↓^r ↑^s)`.
pub fn classical_flip(d: &Connector, r: usize, s: usize) -> Result<Connector, DualityError> {
    let m = r + s;
    if d.ty() != &TangleType::square(vec![Orientation::Down; m]) {
        return Err(DualityError::Precondition(format!("expected type (↓^{m}, ↓^{m}), got {}", d.ty())));
    }
    if !d.is_totally_propagating() {
        return Err(DualityError::Precondition("diagram is not totally propagating".into()));
    }
    let flip = |v: Vertex| match v {
        Vertex::Top(k) if k > r => Vertex::Bottom(k),
        Vertex::Bottom(k) if k > r => Vertex::Top(k),
        v => v,
    };
    let edges: Vec<(Vertex, Vertex)> = d.edges().into_iter().map(|(a, b)| (flip(a), flip(b))).collect();
    Ok(Connector::from_edges(TangleType::walled(r, s), &edges)?)
}
