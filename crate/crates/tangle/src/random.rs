//! Seeded random words for property tests.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::types::{BoundarySeq, Hand, MaxTag, Orientation, Slice};
use crate::TangleWord;

pub type WordRng = ChaCha8Rng;

pub fn rng(seed: u64) -> WordRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_hand(rng: &mut impl Rng) -> Hand {
    if rng.gen_bool(0.5) {
        Hand::FirstOver
    } else {
        Hand::FirstUnder
    }
}

fn random_tag(rng: &mut impl Rng) -> MaxTag {
    if rng.gen_bool(0.5) {
        MaxTag::LeftToRight
    } else {
        MaxTag::RightToLeft
    }
}

fn opposite_positions(level: &[Orientation]) -> Vec<usize> {
    (1..level.len()).filter(|&p| level[p - 1] != level[p]).collect()
}

/// A random valid word with the given top, at most `max_cross` crossings and
/// roughly `steps` slices. Intermediate levels may grow by one cap pair, so
/// words can contain kinks, closed loops and cups/caps; the bottom has the
/// same width as the top.
pub fn random_word(rng: &mut impl Rng, top: &[Orientation], max_cross: usize, steps: usize) -> TangleWord {
    let m = top.len();
    let mut level: BoundarySeq = top.to_vec();
    let mut slices = Vec::new();
    let mut crosses = 0;
    let push = |s: Slice, level: &mut BoundarySeq, slices: &mut Vec<Slice>| {
        *level = s.apply(slices.len(), level).expect("generator emits valid slices");
        slices.push(s);
    };
    for _ in 0..steps {
        let w = level.len();
        let roll = rng.gen_range(0..10);
        if roll < 5 && w >= 2 && crosses < max_cross {
            let pos = rng.gen_range(1..w);
            push(Slice::Cross { pos, hand: random_hand(rng) }, &mut level, &mut slices);
            crosses += 1;
        } else if roll < 7 && w <= m {
            let pos = rng.gen_range(1..=w + 1);
            push(Slice::Max { pos, tag: random_tag(rng) }, &mut level, &mut slices);
        } else if let Some(&pos) = opposite_positions(&level).choose(rng) {
            if w >= m.max(2) || rng.gen_bool(0.3) {
                push(Slice::Min { pos }, &mut level, &mut slices);
                if level.len() + 2 <= m + 2 && rng.gen_bool(0.5) {
                    push(Slice::Max { pos, tag: random_tag(rng) }, &mut level, &mut slices);
                }
            }
        }
    }
    while level.len() > m {
        let pos = *opposite_positions(&level).choose(rng).expect("excess width has opposite pairs");
        push(Slice::Min { pos }, &mut level, &mut slices);
    }
    while level.len() < m {
        let pos = rng.gen_range(1..=level.len() + 1);
        push(Slice::Max { pos, tag: random_tag(rng) }, &mut level, &mut slices);
    }
    TangleWord::from_top(top.to_vec(), slices).expect("generated word is valid")
}

/// A random boundary sequence of length `m`.
pub fn random_boundary(rng: &mut impl Rng, m: usize) -> BoundarySeq {
    (0..m).map(|_| if rng.gen_bool(0.5) { Orientation::Down } else { Orientation::Up }).collect()
}
