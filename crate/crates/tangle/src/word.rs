use std::fmt;

use crate::graph::strand_graph;
use crate::types::{seq_string, BoundarySeq, Hand, MaxTag, Orientation, Slice, TangleType};
use crate::{Connector, TangleError};

/// A validated oriented tangle word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TangleWord {
    ty: TangleType,
    slices: Vec<Slice>,
    levels: Vec<BoundarySeq>,
    loops: Vec<Orientation>,
}

impl TangleWord {
    /// Validates `slices` against a declared type. Closed loop tags are
    /// derived from the caps that create each loop.
    pub fn validate(ty: TangleType, slices: Vec<Slice>) -> Result<Self, TangleError> {
        let ty = TangleType::new(ty.top, ty.bottom)?;
        let levels = propagate(&ty.top, &slices)?;
        let derived = levels.last().unwrap();
        if *derived != ty.bottom {
            return Err(TangleError::TypeMismatch {
                declared: seq_string(&ty.bottom),
                derived: seq_string(derived),
            });
        }
        let mut w = Self { ty, slices, levels, loops: Vec::new() };
        w.loops = strand_graph(&w).loop_tags();
        Ok(w)
    }

    /// Validates and derives the bottom boundary from `top`.
    pub fn from_top(top: BoundarySeq, slices: Vec<Slice>) -> Result<Self, TangleError> {
        let levels = propagate(&top, &slices)?;
        let bottom = levels.last().unwrap().clone();
        Self::validate(TangleType::new(top, bottom)?, slices)
    }

    /// Validates and additionally checks caller-supplied loop orientation tags.
    pub fn with_loop_tags(
        ty: TangleType,
        slices: Vec<Slice>,
        tags: &[Orientation],
    ) -> Result<Self, TangleError> {
        let w = Self::validate(ty, slices)?;
        if w.loops != tags {
            return Err(TangleError::LoopTags { given: tags.to_vec(), derived: w.loops });
        }
        Ok(w)
    }

    pub fn identity(seq: BoundarySeq) -> Self {
        Self::validate(TangleType::square(seq), Vec::new()).expect("identity is valid")
    }

    pub fn ty(&self) -> &TangleType {
        &self.ty
    }

    pub fn top(&self) -> &[Orientation] {
        &self.ty.top
    }

    pub fn bottom(&self) -> &[Orientation] {
        &self.ty.bottom
    }

    pub fn m(&self) -> usize {
        self.ty.m()
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn into_slices(self) -> Vec<Slice> {
        self.slices
    }

    /// `levels()[k]` is the level above slice `k`; the last entry is the bottom.
    pub fn levels(&self) -> &[BoundarySeq] {
        &self.levels
    }

    /// Orientation tags of the closed components, in base-point order.
    pub fn loop_tags(&self) -> &[Orientation] {
        &self.loops
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| s.is_cross()).count()
    }

    /// `S/T`: `self` on top of `lower`.
    pub fn concat(&self, lower: &TangleWord) -> Result<TangleWord, TangleError> {
        if self.ty.bottom != lower.ty.top {
            return Err(TangleError::ConcatMismatch {
                upper: seq_string(&self.ty.bottom),
                lower: seq_string(&lower.ty.top),
            });
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&lower.slices);
        let ty = TangleType { top: self.ty.top.clone(), bottom: lower.ty.bottom.clone() };
        Self::validate(ty, slices)
    }

    /// Appends slices at the bottom.
    pub fn then(&self, more: &[Slice]) -> Result<TangleWord, TangleError> {
        let mut slices = self.slices.clone();
        slices.extend_from_slice(more);
        Self::from_top(self.ty.top.clone(), slices)
    }

    /// The word with the hand of crossing slice `idx` reversed.
    pub fn switch_crossing(&self, idx: usize) -> TangleWord {
        let mut w = self.clone();
        match &mut w.slices[idx] {
            Slice::Cross { hand, .. } => *hand = hand.flip(),
            other => panic!("slice {idx} is {other}, not a crossing"),
        }
        w
    }

    /// The word with crossing slice `idx` replaced by its oriented smoothing.
    pub fn smooth_crossing(&self, idx: usize) -> TangleWord {
        let Slice::Cross { pos, .. } = self.slices[idx] else {
            panic!("slice {idx} is not a crossing");
        };
        let level = &self.levels[idx];
        let (a, b) = (level[pos - 1], level[pos]);
        let mut slices = self.slices.clone();
        if a == b {
            slices.remove(idx);
        } else {
            let tag = MaxTag::with_left(b);
            slices.splice(idx..=idx, [Slice::Min { pos }, Slice::Max { pos, tag }]);
        }
        Self::validate(self.ty.clone(), slices).expect("smoothing preserves validity")
    }

    /// Connector and number of closed components.
    pub fn connector(&self) -> (Connector, usize) {
        let g = strand_graph(self);
        (g.connector(self), g.loop_count())
    }

    /// Slices with every position shifted right by `k` and `left` new
    /// straight strands on the left.
    pub fn shifted(&self, left: &[Orientation]) -> TangleWord {
        let k = left.len();
        let slices = self.slices.iter().map(|s| s.with_pos(s.pos() + k)).collect();
        let mut top = left.to_vec();
        top.extend_from_slice(&self.ty.top);
        Self::from_top(top, slices).expect("shifting preserves validity")
    }

    /// Writes the word in the tangle DSL (header plus slice line).
    pub fn to_dsl(&self) -> String {
        format!("type: {}\n{}", self.ty, self.body())
    }

    /// Space-separated slice tokens.
    pub fn body(&self) -> String {
        self.slices.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dsl())
    }
}

pub(crate) fn propagate(top: &[Orientation], slices: &[Slice]) -> Result<Vec<BoundarySeq>, TangleError> {
    let mut levels = vec![top.to_vec()];
    for (i, s) in slices.iter().enumerate() {
        let next = s.apply(i, levels.last().unwrap())?;
        levels.push(next);
    }
    Ok(levels)
}

/// Slices of the basic tangle `E_ρ` joining the two points at `pos` on the
/// level above and creating `bottom_left` followed by its opposite below.
pub fn e_slices(pos: usize, bottom_left: Orientation) -> [Slice; 2] {
    [Slice::Min { pos }, Slice::Max { pos, tag: MaxTag::with_left(bottom_left) }]
}

/// `S_ρ`: a single crossing.
pub fn s_slice(pos: usize, hand: Hand) -> Slice {
    Slice::Cross { pos, hand }
}
