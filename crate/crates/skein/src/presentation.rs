use serde::Serialize;
use wt_laurent::{quantum_int, LaurentPoly};
use wt_tangle::{MaxTag, Slice, TangleType, TangleWord};

use crate::{Normalizer, TangleElement};

/// One side of a relation: a combination of generator monomials, each a
/// slice sequence read left to right = top to bottom.
pub type Side = Vec<(LaurentPoly, Vec<Slice>)>;

#[derive(Debug, Clone, Serialize)]
pub struct RelationResult {
    pub name: String,
    pub statement: String,
    pub lhs: TangleElement,
    pub rhs: TangleElement,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationReport {
    pub r: usize,
    pub s: usize,
    pub n: u32,
    pub relations: Vec<RelationResult>,
}

impl PresentationReport {
    pub fn all_passed(&self) -> bool {
        self.relations.iter().all(|r| r.passed)
    }
}

struct Gens {
    r: usize,
}

impl Gens {
    fn g(&self, i: usize) -> Slice {
        Slice::over(self.r - i)
    }
    fn g_inv(&self, i: usize) -> Slice {
        Slice::under(self.r - i)
    }
    fn gs(&self, j: usize) -> Slice {
        Slice::over(self.r + j)
    }
    fn d(&self) -> [Slice; 2] {
        [Slice::Min { pos: self.r }, Slice::Max { pos: self.r, tag: MaxTag::RightToLeft }]
    }
}

fn mono(parts: &[&[Slice]]) -> Vec<Slice> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn one(w: Vec<Slice>) -> Side {
    vec![(LaurentPoly::one(), w)]
}

/// Checks the defining relations of the walled Brauer presentation on
/// `(↓^r ↑^s, ↓^r ↑^s)` with `a = q^-1 - q`, `λ = q^n`, `δ = [n]_q`.
///
/// `g_i` is the positive crossing at position `r-i`, `g_j*` the positive
/// crossing at position `r+j`, `D` the cup-cap pair at position `r`.
/// Relation (iii) is checked as `g_i^2 = 1 + a·g_i`, the form equivalent to
/// `(g_i+q)(g_i-q^-1) = 0`.
pub fn presentation_check(r: usize, s: usize, n: u32) -> PresentationReport {
    let norm = Normalizer::new(n);
    let ty = TangleType::walled(r, s);
    let gens = Gens { r };
    let a = LaurentPoly::q_pow(-1) - LaurentPoly::q_pow(1);
    let lambda_inv = LaurentPoly::q_pow(-(n as i64));
    let delta = quantum_int(n);
    let mut rels: Vec<(String, String, Side, Side)> = Vec::new();
    let mut add = |name: String, stmt: String, l: Side, rr: Side| rels.push((name, stmt, l, rr));

    for i in 1..r {
        for j in i + 2..r {
            add("(i)".into(), format!("g{i} g{j} = g{j} g{i}"), one(vec![gens.g(i), gens.g(j)]), one(vec![gens.g(j), gens.g(i)]));
        }
    }
    for i in 1..s {
        for j in i + 2..s {
            add("(i*)".into(), format!("g{i}* g{j}* = g{j}* g{i}*"), one(vec![gens.gs(i), gens.gs(j)]), one(vec![gens.gs(j), gens.gs(i)]));
        }
    }
    for i in 1..r.saturating_sub(1) {
        let (x, y) = (gens.g(i), gens.g(i + 1));
        add("(ii)".into(), format!("g{i} g{} g{i} = g{} g{i} g{}", i + 1, i + 1, i + 1), one(vec![x, y, x]), one(vec![y, x, y]));
    }
    for j in 1..s.saturating_sub(1) {
        let (x, y) = (gens.gs(j), gens.gs(j + 1));
        add("(ii*)".into(), format!("g{j}* g{}* g{j}* = g{}* g{j}* g{}*", j + 1, j + 1, j + 1), one(vec![x, y, x]), one(vec![y, x, y]));
    }
    for i in 1..r {
        let g = gens.g(i);
        add(
            "(iii)".into(),
            format!("g{i}^2 = 1 + (q^-1 - q) g{i}"),
            one(vec![g, g]),
            vec![(LaurentPoly::one(), vec![]), (a.clone(), vec![g])],
        );
    }
    for j in 1..s {
        let g = gens.gs(j);
        add(
            "(iii*)".into(),
            format!("g{j}*^2 = 1 + (q^-1 - q) g{j}*"),
            one(vec![g, g]),
            vec![(LaurentPoly::one(), vec![]), (a.clone(), vec![g])],
        );
    }
    for i in 1..r {
        for j in 1..s {
            add("(iv)".into(), format!("g{i} g{j}* = g{j}* g{i}"), one(vec![gens.g(i), gens.gs(j)]), one(vec![gens.gs(j), gens.g(i)]));
        }
    }
    if r >= 1 && s >= 1 {
        let d = gens.d();
        for i in 2..r {
            add("(v)".into(), format!("D g{i} = g{i} D"), one(mono(&[&d, &[gens.g(i)]])), one(mono(&[&[gens.g(i)], &d])));
        }
        for j in 2..s {
            add("(v*)".into(), format!("D g{j}* = g{j}* D"), one(mono(&[&d, &[gens.gs(j)]])), one(mono(&[&[gens.gs(j)], &d])));
        }
        if r >= 2 {
            add("(vi)".into(), "D g1 D = q^-n D".into(), one(mono(&[&d, &[gens.g(1)], &d])), vec![(lambda_inv.clone(), d.to_vec())]);
        }
        if s >= 2 {
            add("(vi*)".into(), "D g1* D = q^-n D".into(), one(mono(&[&d, &[gens.gs(1)], &d])), vec![(lambda_inv.clone(), d.to_vec())]);
        }
        add("(vii)".into(), "D^2 = [n] D".into(), one(mono(&[&d, &d])), vec![(delta.clone(), d.to_vec())]);
        if r >= 2 && s >= 2 {
            let (g, gi, gs) = (gens.g(1), gens.g_inv(1), gens.gs(1));
            add(
                "(viii)".into(),
                "D g1^-1 g1* D g1 = D g1^-1 g1* D g1*".into(),
                one(mono(&[&d, &[gi, gs], &d, &[g]])),
                one(mono(&[&d, &[gi, gs], &d, &[gs]])),
            );
            add(
                "(viii*)".into(),
                "g1 D g1^-1 g1* D = g1* D g1^-1 g1* D".into(),
                one(mono(&[&[g], &d, &[gi, gs], &d])),
                one(mono(&[&[gs], &d, &[gi, gs], &d])),
            );
        }
    }

    let eval = |side: &Side| -> TangleElement {
        let words: Vec<(LaurentPoly, TangleWord)> = side
            .iter()
            .map(|(p, sl)| (p.clone(), TangleWord::validate(ty.clone(), sl.clone()).expect("generator words are valid")))
            .collect();
        norm.normalize_sum(&ty, words.iter().map(|(p, w)| (p.clone(), w)))
    };
    let relations = rels
        .into_iter()
        .map(|(name, statement, l, rr)| {
            let (lhs, rhs) = (eval(&l), eval(&rr));
            let passed = lhs == rhs;
            RelationResult { name, statement, lhs, rhs, passed }
        })
        .collect();
    PresentationReport { r, s, n, relations }
}
