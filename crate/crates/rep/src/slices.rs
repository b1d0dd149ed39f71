use wt_laurent::LaurentPoly;
use wt_tangle::{Hand, Orientation, Slice, TangleWord};

use crate::matrix::{all_indices, OperatorMatrix};
use crate::RepError;

use Orientation::{Down as D, Up as U};

/// Factor of a cap closing `(a, b)` with label `i`: a strand running
/// left to right along the top edge picks up `q^{2i-n-1}`.
pub(crate) fn cap_factor(a: Orientation, b: Orientation, i: u32, n: u32) -> LaurentPoly {
    if (a, b) == (D, U) {
        LaurentPoly::q_pow(2 * i as i64 - n as i64 - 1)
    } else {
        LaurentPoly::one()
    }
}

/// Factor of a cup opening `(a, b)` with label `k`: a strand running
/// left to right along the bottom edge picks up `q^{-2k+n+1}`.
pub(crate) fn cup_factor(a: Orientation, b: Orientation, k: u32, n: u32) -> LaurentPoly {
    if (a, b) == (U, D) {
        LaurentPoly::q_pow(-2 * k as i64 + n as i64 + 1)
    } else {
        LaurentPoly::one()
    }
}

fn splice(i: &[u32], r: usize, drop: usize, insert: &[u32]) -> Vec<u32> {
    let mut v = i[..r].to_vec();
    v.extend_from_slice(insert);
    v.extend_from_slice(&i[r + drop..]);
    v
}

/// Matrix of the elementary tangle made of `s` and vertical strands, acting
/// on the level `level` above it.
pub fn slice_matrix(s: &Slice, level: &[Orientation], n: u32) -> Result<OperatorMatrix, RepError> {
    let below = s.apply(0, level).map_err(|e| RepError::InvalidSlice(e.to_string()))?;
    let mut out = OperatorMatrix::zero(level.to_vec(), below, n);
    let m = level.len();
    let r = s.pos() - 1;
    match *s {
        Slice::Min { .. } => {
            let (a, b) = (level[r], level[r + 1]);
            for i in all_indices(n, m).into_iter().filter(|i| i[r] == i[r + 1]) {
                let v = cap_factor(a, b, i[r], n);
                out.add_entry(i.clone(), splice(&i, r, 2, &[]), &v)?;
            }
        }
        Slice::Max { tag, .. } => {
            let [a, b] = tag.created();
            for i in all_indices(n, m) {
                for k in 1..=n {
                    out.add_entry(i.clone(), splice(&i, r, 0, &[k, k]), &cup_factor(a, b, k, n))?;
                }
            }
        }
        Slice::Cross { hand, .. } => {
            let (a, b) = (level[r], level[r + 1]);
            let over_first = hand == Hand::FirstOver;
            let same = a == b;
            let positive = same == over_first;
            let z = LaurentPoly::q_pow(-1) - LaurentPoly::q_pow(1);
            let c = if positive { z } else { -z };
            for i in all_indices(n, m) {
                let (il, ir) = (i[r], i[r + 1]);
                // the descending picture: labels pass straight through
                let v = if il == ir {
                    LaurentPoly::q_pow(if positive { -1 } else { 1 })
                } else {
                    LaurentPoly::one()
                };
                out.add_entry(i.clone(), splice(&i, r, 2, &[ir, il]), &v)?;
                for x in 1..=n {
                    for y in 1..=n {
                        // labels carried by the left and right strands
                        let ls = if a == D { il } else { y };
                        let rs = if b == D { ir } else { x };
                        let (overs, unders) = if over_first { (ls, rs) } else { (rs, ls) };
                        if overs <= unders {
                            continue;
                        }
                        // wrong strand on top: add the smoothing term
                        let j = splice(&i, r, 2, &[x, y]);
                        if same {
                            if il == x && ir == y {
                                out.add_entry(i.clone(), j, &c)?;
                            }
                        } else if il == ir && x == y {
                            let v = &c * &cap_factor(a, b, il, n) * cup_factor(b, a, x, n);
                            out.add_entry(i.clone(), j, &v)?;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Product of the slice matrices, top slice first.
pub fn matrix_of_word(w: &TangleWord, n: u32) -> OperatorMatrix {
    let mut acc = OperatorMatrix::identity(w.top().to_vec(), n);
    for (s, level) in w.slices().iter().zip(w.levels()) {
        let m = slice_matrix(s, level, n).expect("slices of a valid word are valid");
        acc = acc.then(&m).expect("consecutive levels agree");
    }
    acc
}

/// The action of the Hecke generator `T_k` on `V^{⊗m}`:
/// `v_i T_k = v_{i.s_k}` if `i_k < i_{k+1}`, `q^-1 v_i` if equal, and
/// `v_{i.s_k} + (q^-1 - q) v_i` if `i_k > i_{k+1}`.
pub fn hecke_action_matrix(k: usize, m: usize, n: u32) -> Result<OperatorMatrix, RepError> {
    if k == 0 || k >= m {
        return Err(RepError::InvalidArgument(format!("generator T_{k} needs 1 <= k < m = {m}")));
    }
    let mut out = OperatorMatrix::identity(vec![D; m], n).scale(&LaurentPoly::zero());
    for i in all_indices(n, m) {
        let (a, b) = (i[k - 1], i[k]);
        let mut swapped = i.clone();
        swapped.swap(k - 1, k);
        if a == b {
            out.add_entry(i.clone(), i, &LaurentPoly::q_pow(-1))?;
        } else {
            out.add_entry(i.clone(), swapped, &LaurentPoly::one())?;
            if a > b {
                out.add_entry(i.clone(), i, &(LaurentPoly::q_pow(-1) - LaurentPoly::q_pow(1)))?;
            }
        }
    }
    Ok(out)
}

fn psi_like(n: u32, scale: impl Fn(u32) -> LaurentPoly) -> OperatorMatrix {
    let z = LaurentPoly::q_pow(-1) - LaurentPoly::q_pow(1);
    let mut out = OperatorMatrix::zero(vec![U, D], vec![D, U], n);
    for i in 1..=n {
        let f = scale(i);
        for k in 1..=n {
            if k != i {
                out.add_entry(vec![i, k], vec![k, i], &f).expect("in range");
            }
        }
        out.add_entry(vec![i, i], vec![i, i], &(&f * &LaurentPoly::q_pow(-1))).expect("in range");
        for l in 1..i {
            out.add_entry(vec![i, i], vec![l, l], &(&f * &z)).expect("in range");
        }
    }
    out
}

/// `ψ: V*⊗V → V⊗V*`, `v_i*⊗v_k ↦ v_k⊗v_i*` for `k ≠ i` and
/// `v_i*⊗v_i ↦ q^-1 v_i⊗v_i* + (q^-1 - q) Σ_{l<i} v_l⊗v_l*`.
pub fn psi_matrix(n: u32) -> OperatorMatrix {
    psi_like(n, |_| LaurentPoly::one())
}

/// `ψ': V'⊗V → V⊗V*`, which is `ψ` with row `(i, ·)` scaled by `q^{n+1-2i}`.
pub fn psi_prime_matrix(n: u32) -> OperatorMatrix {
    psi_like(n, |i| LaurentPoly::q_pow(n as i64 + 1 - 2 * i as i64))
}

