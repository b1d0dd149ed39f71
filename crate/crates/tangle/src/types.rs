use std::fmt;

use serde::{Deserialize, Serialize};

use crate::TangleError;

/// Direction of a strand at a boundary or level point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    /// Oriented from top to bottom (`↓`, written `v`).
    Down,
    /// Oriented from bottom to top (`↑`, written `^`).
    Up,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Down => Orientation::Up,
            Orientation::Up => Orientation::Down,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Orientation::Down => 'v',
            Orientation::Up => '^',
        }
    }
}

pub type BoundarySeq = Vec<Orientation>;

pub(crate) fn seq_string(s: &[Orientation]) -> String {
    s.iter().map(|o| o.symbol()).collect()
}

/// Boundary data `(I, J)` of a tangle: `top = I`, `bottom = J`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TangleType {
    pub top: BoundarySeq,
    pub bottom: BoundarySeq,
}

impl TangleType {
    /// Requires equal widths and the same number of `Down` entries on both sides.
    pub fn new(top: BoundarySeq, bottom: BoundarySeq) -> Result<Self, TangleError> {
        let downs = |s: &[Orientation]| s.iter().filter(|o| **o == Orientation::Down).count();
        if top.len() != bottom.len() {
            return Err(TangleError::InvalidType(format!(
                "top has {} points, bottom has {}",
                top.len(),
                bottom.len()
            )));
        }
        if downs(&top) != downs(&bottom) {
            return Err(TangleError::InvalidType(format!(
                "top {} and bottom {} differ in the number of down entries",
                seq_string(&top),
                seq_string(&bottom)
            )));
        }
        Ok(Self { top, bottom })
    }

    /// `(I, I)`.
    pub fn square(seq: BoundarySeq) -> Self {
        Self { top: seq.clone(), bottom: seq }
    }

    /// `(↓^r ↑^s, ↓^r ↑^s)`, the type of the walled Brauer algebra.
    pub fn walled(r: usize, s: usize) -> Self {
        Self::square(walled_seq(r, s))
    }

    pub fn m(&self) -> usize {
        self.top.len()
    }
}

pub fn walled_seq(r: usize, s: usize) -> BoundarySeq {
    let mut v = vec![Orientation::Down; r];
    v.extend(std::iter::repeat(Orientation::Up).take(s));
    v
}

impl fmt::Display for TangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", seq_string(&self.top), seq_string(&self.bottom))
    }
}

/// Which strand of a crossing passes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Hand {
    /// The strand occupying position `ρ` above the crossing is the over-strand.
    FirstOver,
    FirstUnder,
}

impl Hand {
    pub fn flip(self) -> Self {
        match self {
            Hand::FirstOver => Hand::FirstUnder,
            Hand::FirstUnder => Hand::FirstOver,
        }
    }
}

/// Orientation of the two points created by a local maximum, read as the
/// direction in which the cap is traversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MaxTag {
    /// Created points are `(↑, ↓)`.
    LeftToRight,
    /// Created points are `(↓, ↑)`.
    RightToLeft,
}

impl MaxTag {
    pub fn created(self) -> [Orientation; 2] {
        match self {
            MaxTag::LeftToRight => [Orientation::Up, Orientation::Down],
            MaxTag::RightToLeft => [Orientation::Down, Orientation::Up],
        }
    }

    /// Tag whose created pair starts with `left`.
    pub fn with_left(left: Orientation) -> Self {
        match left {
            Orientation::Up => MaxTag::LeftToRight,
            Orientation::Down => MaxTag::RightToLeft,
        }
    }
}

/// Elementary slice; positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slice {
    Cross { pos: usize, hand: Hand },
    Min { pos: usize },
    Max { pos: usize, tag: MaxTag },
}

impl Slice {
    pub fn pos(&self) -> usize {
        match *self {
            Slice::Cross { pos, .. } | Slice::Min { pos } | Slice::Max { pos, .. } => pos,
        }
    }

    pub fn with_pos(self, pos: usize) -> Self {
        match self {
            Slice::Cross { hand, .. } => Slice::Cross { pos, hand },
            Slice::Min { .. } => Slice::Min { pos },
            Slice::Max { tag, .. } => Slice::Max { pos, tag },
        }
    }

    pub fn over(pos: usize) -> Self {
        Slice::Cross { pos, hand: Hand::FirstOver }
    }

    pub fn under(pos: usize) -> Self {
        Slice::Cross { pos, hand: Hand::FirstUnder }
    }

    pub fn is_cross(&self) -> bool {
        matches!(self, Slice::Cross { .. })
    }

    /// Applies the slice to a level, checking positions and orientations;
    /// `idx` is the slice index reported in errors.
    pub fn apply(&self, idx: usize, level: &[Orientation]) -> Result<BoundarySeq, TangleError> {
        let w = level.len();
        let p = self.pos();
        let need = match self {
            Slice::Max { .. } => p >= 1 && p <= w + 1,
            _ => p >= 1 && p < w,
        };
        if !need {
            return Err(TangleError::PositionOutOfRange { slice: idx, pos: p, width: w });
        }
        let r = p - 1;
        let mut out = level.to_vec();
        match *self {
            Slice::Cross { .. } => out.swap(r, r + 1),
            Slice::Min { .. } => {
                if level[r] == level[r + 1] {
                    return Err(TangleError::Orientation {
                        slice: idx,
                        msg: format!(
                            "Min({p}) requires opposite orientations, found {}{}",
                            level[r].symbol(),
                            level[r + 1].symbol()
                        ),
                    });
                }
                out.drain(r..r + 2);
            }
            Slice::Max { tag, .. } => {
                let [a, b] = tag.created();
                out.splice(r..r, [a, b]);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Slice::Cross { pos, hand: Hand::FirstOver } => write!(f, "X+({pos})"),
            Slice::Cross { pos, hand: Hand::FirstUnder } => write!(f, "X-({pos})"),
            Slice::Min { pos } => write!(f, "U({pos})"),
            Slice::Max { pos, tag: MaxTag::LeftToRight } => write!(f, "N>({pos})"),
            Slice::Max { pos, tag: MaxTag::RightToLeft } => write!(f, "N<({pos})"),
        }
    }
}
