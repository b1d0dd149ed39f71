use std::collections::HashSet;

use crate::types::{Hand, Orientation, Slice};
use crate::{Connector, TangleWord, Vertex};

/// One passage of a component through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Visit {
    /// Index of the crossing slice in the word.
    pub slice: usize,
    pub over: bool,
    /// Component passing through the crossing on the other branch.
    pub partner: usize,
}

/// An open strand (with boundary endpoints) or a closed loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub start: Option<Vertex>,
    pub end: Option<Vertex>,
    /// Crossing passages in traversal order.
    pub visits: Vec<Visit>,
    /// For loops: the cap slice holding the base point.
    pub base_slice: Option<usize>,
}

impl Component {
    pub fn is_loop(&self) -> bool {
        self.start.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingInfo {
    pub slice: usize,
    /// +1 or -1 under the standard writhe convention.
    pub sign: i8,
    pub over: usize,
    pub under: usize,
}

/// Traversal data of a word. Open strands come first, in canonical start
/// order; loops follow, ordered by the first cap they pass through. Each loop
/// is traversed from the downward point of that cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandGraph {
    pub components: Vec<Component>,
    pub open_count: usize,
    /// Indexed like the word's slices; `None` for non-crossing slices.
    pub crossings: Vec<Option<CrossingInfo>>,
    loop_tags: Vec<Orientation>,
}

impl StrandGraph {
    pub fn loop_count(&self) -> usize {
        self.components.len() - self.open_count
    }

    pub fn loop_tags(&self) -> Vec<Orientation> {
        self.loop_tags.clone()
    }

    pub fn crossing_list(&self) -> impl Iterator<Item = &CrossingInfo> {
        self.crossings.iter().flatten()
    }

    /// Sum of signs of the crossings of component `c` with itself.
    pub fn self_writhe(&self, c: usize) -> i64 {
        self.crossing_list().filter(|x| x.over == c && x.under == c).map(|x| x.sign as i64).sum()
    }

    /// Sum of signs of the crossings between distinct components `a` and `b`.
    pub fn pair_writhe(&self, a: usize, b: usize) -> i64 {
        self.crossing_list()
            .filter(|x| (x.over == a && x.under == b) || (x.over == b && x.under == a))
            .map(|x| x.sign as i64)
            .sum()
    }

    pub fn connector(&self, w: &TangleWord) -> Connector {
        let edges: Vec<_> = self.components[..self.open_count]
            .iter()
            .map(|c| (c.start.unwrap(), c.end.unwrap()))
            .collect();
        Connector::from_edges(w.ty().clone(), &edges).expect("traversal yields a matching")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Point {
    level: usize,
    pos: usize,
}

struct Step {
    to: Point,
    /// Crossing slice passed and the position (0-based) at its top.
    cross: Option<(usize, usize)>,
}

fn step(w: &TangleWord, p: Point) -> Option<Step> {
    let levels = w.levels();
    let last = levels.len() - 1;
    let o = levels[p.level][p.pos];
    let same = |level, pos| Point { level, pos };
    match o {
        Orientation::Down => {
            if p.level == last {
                return None;
            }
            let s = p.level;
            let r = w.slices()[s].pos() - 1;
            let x = p.pos;
            let (to, cross) = match w.slices()[s] {
                Slice::Cross { .. } if x == r => (same(s + 1, r + 1), Some((s, r))),
                Slice::Cross { .. } if x == r + 1 => (same(s + 1, r), Some((s, r + 1))),
                Slice::Cross { .. } => (same(s + 1, x), None),
                Slice::Min { .. } if x == r => (same(s, r + 1), None),
                Slice::Min { .. } if x == r + 1 => (same(s, r), None),
                Slice::Min { .. } => (same(s + 1, if x > r { x - 2 } else { x }), None),
                Slice::Max { .. } => (same(s + 1, if x >= r { x + 2 } else { x }), None),
            };
            Some(Step { to, cross })
        }
        Orientation::Up => {
            if p.level == 0 {
                return None;
            }
            let s = p.level - 1;
            let r = w.slices()[s].pos() - 1;
            let x = p.pos;
            let (to, cross) = match w.slices()[s] {
                Slice::Cross { .. } if x == r => (same(s, r + 1), Some((s, r + 1))),
                Slice::Cross { .. } if x == r + 1 => (same(s, r), Some((s, r))),
                Slice::Cross { .. } => (same(s, x), None),
                Slice::Min { .. } => (same(s, if x >= r { x + 2 } else { x }), None),
                Slice::Max { .. } if x == r => (same(s + 1, r + 1), None),
                Slice::Max { .. } if x == r + 1 => (same(s + 1, r), None),
                Slice::Max { .. } => (same(s, if x > r { x - 2 } else { x }), None),
            };
            Some(Step { to, cross })
        }
    }
}

fn crossing_sign(w: &TangleWord, s: usize) -> i8 {
    let Slice::Cross { pos, hand } = w.slices()[s] else { unreachable!() };
    let lv = &w.levels()[s];
    let same = lv[pos - 1] == lv[pos];
    if same == (hand == Hand::FirstOver) {
        1
    } else {
        -1
    }
}

fn is_over(w: &TangleWord, s: usize, top_pos: usize) -> bool {
    let Slice::Cross { pos, hand } = w.slices()[s] else { unreachable!() };
    (top_pos == pos - 1) == (hand == Hand::FirstOver)
}

/// Traverses every component of `w`.
pub fn strand_graph(w: &TangleWord) -> StrandGraph {
    let levels = w.levels();
    let last = levels.len() - 1;
    let mut seen: HashSet<Point> = HashSet::new();
    // (component, slice, over)
    let mut raw: Vec<Vec<(usize, bool)>> = Vec::new();
    let mut components = Vec::new();

    let walk = |start: Point, closed: bool, seen: &mut HashSet<Point>| {
        let mut visits = Vec::new();
        let mut cur = start;
        seen.insert(cur);
        while let Some(st) = step(w, cur) {
            if let Some((s, tp)) = st.cross {
                visits.push((s, is_over(w, s, tp)));
            }
            cur = st.to;
            if closed && cur == start {
                break;
            }
            seen.insert(cur);
        }
        (cur, visits)
    };

    for v in w.ty().start_vertices() {
        let p = match v {
            Vertex::Top(k) => Point { level: 0, pos: k - 1 },
            Vertex::Bottom(k) => Point { level: last, pos: k - 1 },
        };
        let (end, visits) = walk(p, false, &mut seen);
        let end = if end.level == 0 && levels[0][end.pos] == Orientation::Up {
            Vertex::Top(end.pos + 1)
        } else {
            Vertex::Bottom(end.pos + 1)
        };
        raw.push(visits);
        components.push(Component { start: Some(v), end: Some(end), visits: Vec::new(), base_slice: None });
    }
    let open_count = components.len();
    let mut loop_tags = Vec::new();
    for (s, sl) in w.slices().iter().enumerate() {
        if let Slice::Max { pos, .. } = *sl {
            let r = pos - 1;
            let left = Point { level: s + 1, pos: r };
            if seen.contains(&left) {
                continue;
            }
            let lv = &levels[s + 1];
            let start = if lv[r] == Orientation::Down { left } else { Point { level: s + 1, pos: r + 1 } };
            let (_, visits) = walk(start, true, &mut seen);
            raw.push(visits);
            loop_tags.push(lv[r]);
            components.push(Component { start: None, end: None, visits: Vec::new(), base_slice: Some(s) });
        }
    }

    let mut crossings: Vec<Option<CrossingInfo>> = vec![None; w.slices().len()];
    for (c, vs) in raw.iter().enumerate() {
        for &(s, over) in vs {
            let sign = crossing_sign(w, s);
            let e = crossings[s].get_or_insert(CrossingInfo { slice: s, sign, over: usize::MAX, under: usize::MAX });
            if over {
                e.over = c;
            } else {
                e.under = c;
            }
        }
    }
    for (c, vs) in raw.into_iter().enumerate() {
        components[c].visits = vs
            .into_iter()
            .map(|(s, over)| {
                let x = crossings[s].unwrap();
                Visit { slice: s, over, partner: if over { x.under } else { x.over } }
            })
            .collect();
    }
    StrandGraph { components, open_count, crossings, loop_tags }
}

impl StrandGraph {
    /// First crossing met from below when traversing the open strands in
    /// `order` (indices into the canonical start order) and then the loops.
    /// A crossing counts as met at its first passage.
    pub fn first_violation(&self, order: &[usize]) -> Option<usize> {
        let mut met = vec![false; self.crossings.len()];
        let comps = order.iter().copied().chain(self.open_count..self.components.len());
        for c in comps {
            for v in &self.components[c].visits {
                if !met[v.slice] {
                    if !v.over {
                        return Some(v.slice);
                    }
                    met[v.slice] = true;
                }
            }
        }
        None
    }
}
