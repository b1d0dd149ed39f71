use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use wt_laurent::{quantum_int, LaurentPoly};
use wt_tangle::{canonical_basis_word, strand_graph, Connector, TangleType, TangleWord};

use crate::{ElementError, TangleElement};

/// Constants of the skein relations at parameter `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeinParams {
    pub n: u32,
    /// Value of a closed unknotted loop, `[n]_q`.
    pub loop_value: LaurentPoly,
    /// Removing a curl whose crossing has writhe +1 costs `q^{-n}`.
    pub pos_kink: LaurentPoly,
    /// Removing a curl whose crossing has writhe -1 costs `q^{n}`.
    pub neg_kink: LaurentPoly,
    /// `q^-1 - q`.
    pub skein_coeff: LaurentPoly,
}

impl SkeinParams {
    pub fn new(n: u32) -> Self {
        Self {
            n,
            loop_value: quantum_int(n),
            pos_kink: LaurentPoly::q_pow(-(n as i64)),
            neg_kink: LaurentPoly::q_pow(n as i64),
            skein_coeff: LaurentPoly::q_pow(-1) - LaurentPoly::q_pow(1),
        }
    }

    /// Value of straightening a component of self-writhe `w`.
    pub fn kink(&self, w: i64) -> LaurentPoly {
        LaurentPoly::q_pow(-(self.n as i64) * w)
    }
}

/// A descending diagram reached by the rewriting, up to regular isotopy:
/// its connector plus the crossing sums between pairs of open strands
/// (indices in canonical start order), which the matrix evaluation needs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Leaf {
    pub connector: Connector,
    /// `(a, b, sum of crossing signs)` for `a < b`, nonzero sums only.
    pub linking: Vec<(usize, usize, i64)>,
}

type Leaves = Arc<Vec<(Leaf, LaurentPoly)>>;

/// Rewriting engine with a write-once memo table; safe to share across threads.
pub struct Normalizer {
    params: SkeinParams,
    memo: RwLock<HashMap<(TangleWord, Vec<usize>), Leaves>>,
    canon: RwLock<HashMap<Connector, TangleWord>>,
}

impl Normalizer {
    pub fn new(n: u32) -> Self {
        Self { params: SkeinParams::new(n), memo: RwLock::default(), canon: RwLock::default() }
    }

    pub fn params(&self) -> &SkeinParams {
        &self.params
    }

    pub fn n(&self) -> u32 {
        self.params.n
    }

    /// Memoized canonical descending word of a connector.
    pub fn canonical(&self, c: &Connector) -> TangleWord {
        if let Some(w) = self.canon.read().unwrap().get(c) {
            return w.clone();
        }
        let w = canonical_basis_word(c);
        self.canon.write().unwrap().entry(c.clone()).or_insert(w).clone()
    }

    /// Expands `w` into descending diagrams with respect to the start order
    /// `order` (a permutation of the canonical start indices; loops always
    /// come last). Coefficients include kink and loop factors.
    pub fn descend(&self, w: &TangleWord, order: &[usize]) -> Leaves {
        let key = (w.clone(), order.to_vec());
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return v.clone();
        }
        let g = strand_graph(w);
        let result: Vec<(Leaf, LaurentPoly)> = match g.first_violation(order) {
            Some(s) => {
                let sign = g.crossings[s].expect("violation is a crossing").sign;
                let coeff = if sign > 0 { self.params.skein_coeff.clone() } else { -&self.params.skein_coeff };
                let mut acc: BTreeMap<Leaf, LaurentPoly> = BTreeMap::new();
                for (leaf, p) in self.descend(&w.switch_crossing(s), order).iter() {
                    *acc.entry(leaf.clone()).or_default() += p;
                }
                for (leaf, p) in self.descend(&w.smooth_crossing(s), order).iter() {
                    *acc.entry(leaf.clone()).or_default() += p * &coeff;
                }
                acc.into_iter().filter(|(_, p)| !p.is_zero()).collect()
            }
            None => {
                let mut scalar = LaurentPoly::one();
                for c in 0..g.components.len() {
                    scalar *= self.params.kink(g.self_writhe(c));
                    if c >= g.open_count {
                        scalar *= &self.params.loop_value;
                    }
                }
                let mut linking = Vec::new();
                for a in 0..g.open_count {
                    for b in a + 1..g.open_count {
                        let lk = g.pair_writhe(a, b);
                        if lk != 0 {
                            linking.push((a, b, lk));
                        }
                    }
                }
                vec![(Leaf { connector: g.connector(w), linking }, scalar)]
            }
        };
        let result = Arc::new(result);
        self.memo.write().unwrap().entry(key).or_insert(result).clone()
    }

    /// Normal form of `w` in the connector basis.
    pub fn normalize(&self, w: &TangleWord) -> TangleElement {
        let order: Vec<usize> = (0..w.ty().start_vertices().len()).collect();
        let leaves = self.descend(w, &order);
        TangleElement::from_terms(
            w.ty().clone(),
            self.n(),
            leaves.iter().map(|(l, p)| (l.connector.clone(), p.clone())),
        )
    }

    /// Normal form of a linear combination of words of one type.
    pub fn normalize_sum<'a>(
        &self,
        ty: &TangleType,
        terms: impl IntoIterator<Item = (LaurentPoly, &'a TangleWord)>,
    ) -> TangleElement {
        let mut out = TangleElement::zero(ty.clone(), self.n());
        for (p, w) in terms {
            assert_eq!(w.ty(), ty, "summands must share a type");
            out = out.add(&self.normalize(w).scale(&p)).expect("same type and n");
        }
        out
    }

    pub fn multiply(&self, a: &TangleElement, b: &TangleElement) -> Result<TangleElement, ElementError> {
        if a.n() != self.n() || b.n() != self.n() {
            return Err(ElementError::NMismatch(a.n(), b.n()));
        }
        if a.ty().bottom != b.ty().top {
            return Err(ElementError::TypeMismatch(format!(
                "cannot multiply {} by {}",
                a.ty(),
                b.ty()
            )));
        }
        let ty = TangleType { top: a.ty().top.clone(), bottom: b.ty().bottom.clone() };
        let mut out = TangleElement::zero(ty, self.n());
        for (c, p) in a.terms() {
            let wc = self.canonical(c);
            for (d, r) in b.terms() {
                let w = wc.concat(&self.canonical(d)).expect("types agree");
                out = out.add(&self.normalize(&w).scale(&(p * r)))?;
            }
        }
        Ok(out)
    }
}
