//! Expansion of oriented tangles in the descending basis.
//!
//! Any word is rewritten with the skein relation
//! `X+ - X- = (q^-1 - q) · smoothing`, where `X+` is the crossing with
//! positive writhe. Crossings met from below while walking the strands in
//! order are switched; what remains is a descending diagram whose value is
//! its connector times `q^{-n·w}` per component of self-writhe `w` and
//! `[n]_q` per closed loop.

mod element;
mod normalize;
mod presentation;

pub use element::{ElementError, TangleElement};
pub use normalize::{Leaf, Normalizer, SkeinParams};
pub use presentation::{presentation_check, PresentationReport, RelationResult, Side};

use wt_tangle::{enumerate_connectors, Slice, TangleType, TangleWord};

/// Normal form of a word in `U_{I,J}` at parameter `n`.
pub fn normalize(w: &TangleWord, n: u32) -> TangleElement {
    Normalizer::new(n).normalize(w)
}

/// Product `A·B` (A above B).
pub fn multiply(a: &TangleElement, b: &TangleElement) -> Result<TangleElement, ElementError> {
    Normalizer::new(a.n()).multiply(a, b)
}

/// Full multiplication table of `U_{I,I}` on its connector basis.
pub fn structure_constants(ty: &TangleType, n: u32) -> Result<Vec<Vec<TangleElement>>, ElementError> {
    if ty.top != ty.bottom {
        return Err(ElementError::TypeMismatch(format!("structure constants need a square type, got {ty}")));
    }
    let norm = Normalizer::new(n);
    let basis: Vec<TangleElement> = enumerate_connectors(ty)
        .into_iter()
        .map(|c| TangleElement::basis(c, n))
        .collect();
    basis
        .iter()
        .map(|a| basis.iter().map(|b| norm.multiply(a, b)).collect())
        .collect()
}

/// `T_{i_1} ⋯ T_{i_l}` in `U_{(↓^m),(↓^m)}`, each `T_i` the positive
/// crossing of strands `i, i+1`.
pub fn hecke_element(word: &[usize], m: usize, n: u32) -> Result<TangleElement, ElementError> {
    let slices = word
        .iter()
        .map(|&i| {
            if i == 0 || i >= m {
                Err(ElementError::InvalidArgument(format!("generator index {i} out of range 1..{}", m.saturating_sub(1))))
            } else {
                Ok(Slice::over(i))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let w = TangleWord::validate(TangleType::square(vec![wt_tangle::Orientation::Down; m]), slices)
        .expect("crossings of down strands are valid");
    Ok(normalize(&w, n))
}
