use std::collections::HashMap;

use crate::types::{Hand, MaxTag, Slice};
use crate::{strand_graph, Connector, TangleWord, Vertex};

fn hand(first: usize, second: usize) -> Hand {
    if first < second {
        Hand::FirstOver
    } else {
        Hand::FirstUnder
    }
}

/// Index (in `v`) of the arc with the smallest span, ties broken leftmost.
fn tightest_arc(v: &[usize], is_arc: impl Fn(usize) -> bool) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for a in 0..v.len() {
        if !is_arc(v[a]) {
            continue;
        }
        if let Some(b) = (a + 1..v.len()).find(|&b| v[b] == v[a]) {
            if best.map_or(true, |(x, y)| b - a < y - x) {
                best = Some((a, b));
            }
        }
    }
    best
}

/// The descending representative of `c`: caps and cups are pulled tight one
/// at a time (smallest span first), the propagating strands are then sorted
/// by adjacent crossings, and every crossing puts the strand that is earlier
/// in the canonical start order on top.
pub fn canonical_basis_word(c: &Connector) -> TangleWord {
    let ty = c.ty();
    let m = ty.m();
    let mut strand_of: HashMap<Vertex, usize> = HashMap::new();
    for (i, (s, e)) in c.edges().into_iter().enumerate() {
        strand_of.insert(s, i);
        strand_of.insert(e, i);
    }
    let top_ids: Vec<usize> = (1..=m).map(|k| strand_of[&Vertex::Top(k)]).collect();
    let bot_ids: Vec<usize> = (1..=m).map(|k| strand_of[&Vertex::Bottom(k)]).collect();
    let top_only = |id: usize| top_ids.iter().filter(|&&x| x == id).count() == 2;
    let bot_only = |id: usize| bot_ids.iter().filter(|&&x| x == id).count() == 2;

    let mut slices = Vec::new();
    let mut level = top_ids.clone();
    while let Some((a, b)) = tightest_arc(&level, top_only) {
        for r in (a + 1..b).rev() {
            slices.push(Slice::Cross { pos: r + 1, hand: hand(level[r], level[r + 1]) });
            level.swap(r, r + 1);
        }
        slices.push(Slice::Min { pos: a + 1 });
        level.drain(a..a + 2);
    }
    let upper_mid = level;

    let mut level = bot_ids.clone();
    let mut orient = ty.bottom.clone();
    let mut blocks = Vec::new();
    while let Some((a, b)) = tightest_arc(&level, bot_only) {
        let id = level[a];
        let mut block = vec![Slice::Max { pos: a + 1, tag: MaxTag::with_left(orient[a]) }];
        for r in a + 1..b {
            block.push(Slice::Cross { pos: r + 1, hand: hand(id, level[r]) });
        }
        blocks.push(block);
        level.remove(b);
        level.remove(a);
        orient.remove(b);
        orient.remove(a);
    }
    let lower_mid = level;

    let target: HashMap<usize, usize> = lower_mid.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let mut cur = upper_mid;
    loop {
        let mut swapped = false;
        for r in 0..cur.len().saturating_sub(1) {
            if target[&cur[r]] > target[&cur[r + 1]] {
                slices.push(Slice::Cross { pos: r + 1, hand: hand(cur[r], cur[r + 1]) });
                cur.swap(r, r + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    for block in blocks.into_iter().rev() {
        slices.extend(block);
    }
    TangleWord::validate(ty.clone(), slices).expect("canonical word is valid")
}

/// Descending with respect to the canonical start order: no loops, no
/// self-crossings, each pair of strands crosses at most once and always with
/// the earlier strand on top.
pub fn is_descending(w: &TangleWord) -> bool {
    let g = strand_graph(w);
    if g.loop_count() > 0 {
        return false;
    }
    let order: Vec<usize> = (0..g.open_count).collect();
    if g.first_violation(&order).is_some() {
        return false;
    }
    let mut pairs = std::collections::HashSet::new();
    let ok = g.crossing_list().all(|x| x.over != x.under && pairs.insert((x.over.min(x.under), x.over.max(x.under))));
    ok
}
