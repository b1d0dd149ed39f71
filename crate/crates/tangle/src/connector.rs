use std::fmt;

use serde::{Deserialize, Serialize};

use crate::types::{Orientation, TangleType};
use crate::TangleError;

/// Boundary vertex; indices are 1-based as in `t_1..t_m`, `b_1..b_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Vertex {
    Top(usize),
    Bottom(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Top(k) => write!(f, "T{k}"),
            Vertex::Bottom(k) => write!(f, "B{k}"),
        }
    }
}

impl std::str::FromStr for Vertex {
    type Err = TangleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TangleError::InvalidConnector(format!("bad vertex {s:?}"));
        let (side, idx) = s.split_at(s.len().min(1));
        let k: usize = idx.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match side {
            "T" => Ok(Vertex::Top(k)),
            "B" => Ok(Vertex::Bottom(k)),
            _ => Err(bad()),
        }
    }
}

impl TangleType {
    /// Starting vertices in the canonical order: top `↓` points left to
    /// right, then bottom `↑` points left to right.
    pub fn start_vertices(&self) -> Vec<Vertex> {
        let top = (1..=self.m()).filter(|&k| self.top[k - 1] == Orientation::Down).map(Vertex::Top);
        let bot = (1..=self.m()).filter(|&k| self.bottom[k - 1] == Orientation::Up).map(Vertex::Bottom);
        top.chain(bot).collect()
    }

    /// End vertices: top `↑` points, then bottom `↓` points.
    pub fn end_vertices(&self) -> Vec<Vertex> {
        let top = (1..=self.m()).filter(|&k| self.top[k - 1] == Orientation::Up).map(Vertex::Top);
        let bot = (1..=self.m()).filter(|&k| self.bottom[k - 1] == Orientation::Down).map(Vertex::Bottom);
        top.chain(bot).collect()
    }
}

/// Perfect matching between start and end vertices of a type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Connector {
    ty: TangleType,
    /// `ends[k]` is the end of the strand starting at the `k`-th canonical start.
    ends: Vec<Vertex>,
}

impl Connector {
    pub fn new(ty: TangleType, ends: Vec<Vertex>) -> Result<Self, TangleError> {
        let mut want = ty.end_vertices();
        let mut got = ends.clone();
        want.sort();
        got.sort();
        if want != got {
            return Err(TangleError::InvalidConnector(format!(
                "ends {} are not the end vertices of type {ty}",
                ends.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            )));
        }
        Ok(Self { ty, ends })
    }

    /// Builds from unordered edges; each edge may be given in either direction.
    pub fn from_edges(ty: TangleType, edges: &[(Vertex, Vertex)]) -> Result<Self, TangleError> {
        let starts = ty.start_vertices();
        let mut ends = vec![None; starts.len()];
        for &(a, b) in edges {
            let (s, e) = match (starts.iter().position(|v| *v == a), starts.iter().position(|v| *v == b)) {
                (Some(i), None) => (i, b),
                (None, Some(i)) => (i, a),
                _ => {
                    return Err(TangleError::InvalidConnector(format!(
                        "edge {a}-{b} must join one start and one end vertex"
                    )))
                }
            };
            if ends[s].replace(e).is_some() {
                return Err(TangleError::InvalidConnector(format!("vertex {} used twice", starts[s])));
            }
        }
        let ends = ends
            .into_iter()
            .enumerate()
            .map(|(i, e)| e.ok_or_else(|| TangleError::InvalidConnector(format!("{} unmatched", starts[i]))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ty, ends)
    }

    pub fn identity(ty: TangleType) -> Result<Self, TangleError> {
        if ty.top != ty.bottom {
            return Err(TangleError::InvalidType("identity needs equal top and bottom".into()));
        }
        let ends = ty
            .start_vertices()
            .into_iter()
            .map(|v| match v {
                Vertex::Top(k) => Vertex::Bottom(k),
                Vertex::Bottom(k) => Vertex::Top(k),
            })
            .collect();
        Self::new(ty, ends)
    }

    pub fn ty(&self) -> &TangleType {
        &self.ty
    }

    pub fn ends(&self) -> &[Vertex] {
        &self.ends
    }

    /// `(start, end)` pairs in canonical start order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.ty.start_vertices().into_iter().zip(self.ends.iter().copied()).collect()
    }

    /// Partner of `v` under the matching.
    pub fn partner(&self, v: Vertex) -> Vertex {
        for (s, e) in self.edges() {
            if s == v {
                return e;
            }
            if e == v {
                return s;
            }
        }
        panic!("vertex {v} not in connector")
    }

    /// True if every strand joins the top to the bottom.
    pub fn is_totally_propagating(&self) -> bool {
        self.edges().iter().all(|(s, e)| matches!((s, e), (Vertex::Top(_), Vertex::Bottom(_)) | (Vertex::Bottom(_), Vertex::Top(_))))
    }
}

impl fmt::Display for Connector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges().iter().map(|(s, e)| format!("{s}-{e}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// All `m!` connectors of `ty`, ordered lexicographically by the end assigned
/// to each start (ends ordered top-left-to-right, then bottom).
pub fn enumerate_connectors(ty: &TangleType) -> Vec<Connector> {
    let ends = ty.end_vertices();
    let mut out = Vec::new();
    let mut used = vec![false; ends.len()];
    let mut cur = Vec::with_capacity(ends.len());
    fn rec(ends: &[Vertex], used: &mut [bool], cur: &mut Vec<Vertex>, ty: &TangleType, out: &mut Vec<Connector>) {
        if cur.len() == ends.len() {
            out.push(Connector { ty: ty.clone(), ends: cur.clone() });
            return;
        }
        for i in 0..ends.len() {
            if !used[i] {
                used[i] = true;
                cur.push(ends[i]);
                rec(ends, used, cur, ty, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(&ends, &mut used, &mut cur, ty, &mut out);
    out
}

impl Connector {
    /// Stacks `self` over `lower` as plain matchings (the classical Brauer
    /// product): returns the composite and the number of closed loops formed
    /// in the middle row.
    pub fn compose(&self, lower: &Connector) -> Result<(Connector, usize), TangleError> {
        if self.ty.bottom != lower.ty.top {
            return Err(TangleError::ConcatMismatch {
                upper: crate::types::seq_string(&self.ty.bottom),
                lower: crate::types::seq_string(&lower.ty.top),
            });
        }
        let m = self.ty.m();
        let mut mid_seen = vec![false; m + 1];
        // `in_upper` tells which matching `v` is a vertex of
        let mut follow = |mut v: Vertex, mut in_upper: bool| loop {
            match (v, in_upper) {
                (Vertex::Bottom(k), true) => {
                    mid_seen[k] = true;
                    v = lower.partner(Vertex::Top(k));
                    in_upper = false;
                }
                (Vertex::Top(k), false) => {
                    mid_seen[k] = true;
                    v = self.partner(Vertex::Bottom(k));
                    in_upper = true;
                }
                _ => return v,
            }
        };
        let mut edges = Vec::new();
        for k in 1..=m {
            let a = Vertex::Top(k);
            edges.push((a, follow(self.partner(a), true)));
            let b = Vertex::Bottom(k);
            edges.push((b, follow(lower.partner(b), false)));
        }
        let mut loops = 0;
        for k in 1..=m {
            if mid_seen[k] {
                continue;
            }
            loops += 1;
            let mut j = k;
            loop {
                mid_seen[j] = true;
                let Vertex::Top(x) = lower.partner(Vertex::Top(j)) else { unreachable!() };
                mid_seen[x] = true;
                let Vertex::Bottom(y) = self.partner(Vertex::Bottom(x)) else { unreachable!() };
                if y == k {
                    break;
                }
                j = y;
            }
        }
        let starts = TangleType { top: self.ty.top.clone(), bottom: lower.ty.bottom.clone() };
        let start_set = starts.start_vertices();
        edges.retain(|(a, _)| start_set.contains(a));
        let ty = TangleType::new(starts.top, starts.bottom)?;
        Ok((Connector::from_edges(ty, &edges)?, loops))
    }
}
