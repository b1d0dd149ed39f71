use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use wt_laurent::{ExactRational, LaurentError, LaurentPoly};
use wt_tangle::{BoundarySeq, Orientation};

use crate::RepError;

/// Entries in `1..=n`, one per tensor factor.
pub type MultiIndex = Vec<u32>;

/// All of `I(n, m)` in lexicographic order.
pub fn all_indices(n: u32, m: usize) -> Vec<MultiIndex> {
    let mut out = vec![Vec::with_capacity(m)];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=n).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// Position of `i` in the lexicographic order of `I(n, m)`.
pub(crate) fn flat_index(i: &[u32], n: u32) -> usize {
    i.iter().fold(0, |acc, &k| acc * n as usize + (k as usize - 1))
}

/// Sparse matrix `V_domain → V_codomain` acting from the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    n: u32,
    domain: BoundarySeq,
    codomain: BoundarySeq,
    entries: BTreeMap<(MultiIndex, MultiIndex), LaurentPoly>,
}

impl OperatorMatrix {
    pub fn zero(domain: BoundarySeq, codomain: BoundarySeq, n: u32) -> Self {
        Self { n, domain, codomain, entries: BTreeMap::new() }
    }

    pub fn identity(seq: BoundarySeq, n: u32) -> Self {
        let mut m = Self::zero(seq.clone(), seq.clone(), n);
        for i in all_indices(n, seq.len()) {
            m.entries.insert((i.clone(), i), LaurentPoly::one());
        }
        m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn domain(&self) -> &[Orientation] {
        &self.domain
    }

    pub fn codomain(&self) -> &[Orientation] {
        &self.codomain
    }

    /// `(rows, cols)` = `(n^|domain|, n^|codomain|)`.
    pub fn dims(&self) -> (usize, usize) {
        let n = self.n as usize;
        (n.pow(self.domain.len() as u32), n.pow(self.codomain.len() as u32))
    }

    pub fn get(&self, row: &[u32], col: &[u32]) -> LaurentPoly {
        self.entries.get(&(row.to_vec(), col.to_vec())).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&MultiIndex, &MultiIndex, &LaurentPoly)> {
        self.entries.iter().map(|((r, c), v)| (r, c, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn check(&self, idx: &[u32], len: usize) -> Result<(), RepError> {
        if idx.len() != len || idx.iter().any(|&k| k == 0 || k > self.n) {
            return Err(RepError::BadIndex { index: idx.to_vec(), n: self.n, m: len });
        }
        Ok(())
    }

    /// Adds `v` to the entry `(row, col)`, dropping it if it becomes zero.
    pub fn add_entry(&mut self, row: MultiIndex, col: MultiIndex, v: &LaurentPoly) -> Result<(), RepError> {
        self.check(&row, self.domain.len())?;
        self.check(&col, self.codomain.len())?;
        if v.is_zero() {
            return Ok(());
        }
        let key = (row, col);
        let slot = self.entries.entry(key.clone()).or_default();
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&key);
        }
        Ok(())
    }

    /// `self · other`: apply `self`, then `other`.
    pub fn then(&self, other: &OperatorMatrix) -> Result<OperatorMatrix, RepError> {
        if self.codomain != other.domain || self.n != other.n {
            return Err(RepError::Shape("codomain of the first factor must be the domain of the second".into()));
        }
        let mut by_row: HashMap<&MultiIndex, Vec<(&MultiIndex, &LaurentPoly)>> = HashMap::new();
        for ((k, j), v) in &other.entries {
            by_row.entry(k).or_default().push((j, v));
        }
        let mut acc: BTreeMap<(MultiIndex, MultiIndex), LaurentPoly> = BTreeMap::new();
        for ((i, k), v) in &self.entries {
            if let Some(row) = by_row.get(k) {
                for (j, w) in row {
                    *acc.entry((i.clone(), (*j).clone())).or_default() += v * *w;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(OperatorMatrix { n: self.n, domain: self.domain.clone(), codomain: other.codomain.clone(), entries: acc })
    }

    pub fn add(&self, other: &OperatorMatrix) -> Result<OperatorMatrix, RepError> {
        if self.domain != other.domain || self.codomain != other.codomain || self.n != other.n {
            return Err(RepError::Shape("summands must have the same shape".into()));
        }
        let mut out = self.clone();
        for ((r, c), v) in &other.entries {
            out.add_entry(r.clone(), c.clone(), v)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &OperatorMatrix) -> Result<OperatorMatrix, RepError> {
        self.add(&other.scale(&-LaurentPoly::one()))
    }

    /// Ordinary matrix product `self · other`; the same as [`Self::then`]
    /// when the matrices are read as left actions on columns.
    pub fn mul(&self, other: &OperatorMatrix) -> Result<OperatorMatrix, RepError> {
        self.then(other)
    }

    pub fn scale(&self, p: &LaurentPoly) -> OperatorMatrix {
        let mut out = OperatorMatrix::zero(self.domain.clone(), self.codomain.clone(), self.n);
        if !p.is_zero() {
            out.entries = self.entries.iter().map(|(k, v)| (k.clone(), v * p)).collect();
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn tensor(&self, other: &OperatorMatrix) -> Result<OperatorMatrix, RepError> {
        if self.n != other.n {
            return Err(RepError::Shape("tensor factors need the same n".into()));
        }
        let cat = |a: &[Orientation], b: &[Orientation]| [a, b].concat();
        let mut out = OperatorMatrix::zero(cat(&self.domain, &other.domain), cat(&self.codomain, &other.codomain), self.n);
        for ((r1, c1), v1) in &self.entries {
            for ((r2, c2), v2) in &other.entries {
                out.entries.insert(([&r1[..], &r2[..]].concat(), [&c1[..], &c2[..]].concat()), v1 * v2);
            }
        }
        Ok(out)
    }

    /// `id_left ⊗ self ⊗ id_right`.
    pub fn embedded(&self, left: &[Orientation], right: &[Orientation]) -> OperatorMatrix {
        let l = OperatorMatrix::identity(left.to_vec(), self.n);
        let r = OperatorMatrix::identity(right.to_vec(), self.n);
        l.tensor(self).and_then(|m| m.tensor(&r)).expect("same n")
    }

    pub fn transpose(&self) -> OperatorMatrix {
        OperatorMatrix {
            n: self.n,
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            entries: self.entries.iter().map(|((r, c), v)| ((c.clone(), r.clone()), v.clone())).collect(),
        }
    }

    /// Entries at `q = 1`.
    pub fn at_one(&self) -> BTreeMap<(MultiIndex, MultiIndex), num_bigint::BigInt> {
        self.entries
            .iter()
            .map(|(k, v)| (k.clone(), v.at_one()))
            .filter(|(_, v)| *v != num_bigint::BigInt::from(0))
            .collect()
    }

    /// Dense matrix of values at `q = q0`, rows and columns in lexicographic order.
    pub fn eval_dense(&self, q0: &ExactRational) -> Result<Vec<Vec<ExactRational>>, LaurentError> {
        let (rows, cols) = self.dims();
        let mut out = vec![vec![ExactRational::from_integer(0.into()); cols]; rows];
        for ((r, c), v) in &self.entries {
            out[flat_index(r, self.n)][flat_index(c, self.n)] = v.eval(q0)?;
        }
        Ok(out)
    }

    /// Nonzero values at `q = q0`, keyed by flat (lexicographic) row and
    /// column positions.
    pub fn eval_sparse(&self, q0: &ExactRational) -> Result<Vec<((usize, usize), ExactRational)>, LaurentError> {
        let mut out = Vec::with_capacity(self.entries.len());
        for ((r, c), v) in &self.entries {
            let x = v.eval(q0)?;
            if x != ExactRational::from_integer(0.into()) {
                out.push(((flat_index(r, self.n), flat_index(c, self.n)), x));
            }
        }
        Ok(out)
    }

    /// Dense grid of entries for display; rows and columns in lexicographic order.
    pub fn to_grid(&self) -> Vec<Vec<LaurentPoly>> {
        let (rows, cols) = self.dims();
        let mut out = vec![vec![LaurentPoly::zero(); cols]; rows];
        for ((r, c), v) in &self.entries {
            out[flat_index(r, self.n)][flat_index(c, self.n)] = v.clone();
        }
        out
    }
}

fn seq_string(s: &[Orientation]) -> String {
    s.iter().map(|o| o.symbol()).collect()
}

impl fmt::Display for OperatorMatrix {
    /// One line per nonzero entry: `(row) -> (col): coeff`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} {} -> {}", self.n, seq_string(&self.domain), seq_string(&self.codomain))?;
        for ((r, c), v) in &self.entries {
            writeln!(f, "{r:?} -> {c:?}: {v}")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct EntryJson<'a> {
    row: &'a [u32],
    col: &'a [u32],
    coeff: &'a LaurentPoly,
}

impl Serialize for OperatorMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("OperatorMatrix", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("rows", &format!("I({}, {}) over {}", self.n, self.domain.len(), seq_string(&self.domain)))?;
        st.serialize_field("cols", &format!("I({}, {}) over {}", self.n, self.codomain.len(), seq_string(&self.codomain)))?;
        let entries: Vec<_> = self.entries.iter().map(|((row, col), coeff)| EntryJson { row, col, coeff }).collect();
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}
