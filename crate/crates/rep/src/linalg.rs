use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use wt_laurent::ExactRational;

/// Sparse row: `(column, value)` pairs with strictly increasing columns and
/// nonzero values.
pub type SparseRow = Vec<(usize, ExactRational)>;

/// Incremental row echelon form over the integers. Rows are scaled to
/// primitive integer vectors, and elimination only ever combines two rows
/// with integer multipliers, so no fractions arise.
#[derive(Debug, Default, Clone)]
pub struct Echelon {
    pivots: BTreeMap<usize, Vec<(usize, BigInt)>>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns true if it was independent of the rows so far.
    pub fn insert(&mut self, row: &[(usize, ExactRational)]) -> bool {
        let mut r = primitive(integral(row));
        while let Some(&(lead, ref a)) = r.first() {
            let Some(p) = self.pivots.get(&lead) else {
                let owned = std::mem::take(&mut r);
                self.pivots.insert(lead, owned);
                return true;
            };
            let b = &p[0].1;
            let g = a.gcd(b);
            let (fa, fb) = (b / &g, a / &g);
            r = primitive(combine(&r, &fa, p, &fb));
        }
        false
    }
}

fn integral(row: &[(usize, ExactRational)]) -> Vec<(usize, BigInt)> {
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    row.iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (*c, x.numer() * (&lcm / x.denom())))
        .collect()
}

fn primitive(mut row: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
    if row.first().is_some_and(|(_, x)| x.is_negative()) {
        for (_, x) in row.iter_mut() {
            *x = -&*x;
        }
    }
    row
}

/// `fa·a − fb·b` for sorted sparse rows.
fn combine(a: &[(usize, BigInt)], fa: &BigInt, b: &[(usize, BigInt)], fb: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |x| x.0);
        let cb = b.get(j).map_or(usize::MAX, |x| x.0);
        let (c, v) = if ca < cb {
            i += 1;
            (ca, fa * &a[i - 1].1)
        } else if cb < ca {
            j += 1;
            (cb, -(fb * &b[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ca, fa * &a[i - 1].1 - fb * &b[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// Rank of a list of sparse rational rows.
pub fn sparse_rank<'a>(rows: impl IntoIterator<Item = &'a SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Rank of a dense rational matrix.
pub fn exact_rank(rows: &[Vec<ExactRational>]) -> usize {
    let sparse: Vec<SparseRow> = rows
        .iter()
        .map(|r| r.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect();
    sparse_rank(&sparse)
}

/// Dimension of the null space `{x : A x = 0}` of a matrix with `cols` columns.
pub fn nullity(rows: &[Vec<ExactRational>], cols: usize) -> usize {
    cols - exact_rank(rows)
}
