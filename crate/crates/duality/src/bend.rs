use wt_laurent::LaurentPoly;
use wt_rep::{all_indices, matrix_of_word};
use wt_skein::{Normalizer, TangleElement};
use wt_tangle::{Hand, MaxTag, Orientation, Slice, TangleType, TangleWord};

use crate::DualityError;

use Orientation::{Down as D, Up as U};

fn shifted(slices: &[Slice], by: usize) -> impl Iterator<Item = Slice> + '_ {
    slices.iter().map(move |s| s.with_pos(s.pos() + by))
}

/// Bends the first strand of `t` around the tangle: a cap opens to the left
/// of it, the tangle runs on the strands to its right, and the old first
/// strand is crossed under and closed off below. The result has type
/// `((↑, I_2..I_m), (↑, J_2..J_m))`.
pub fn bend_first(t: &TangleWord) -> Result<TangleWord, DualityError> {
    if t.top().first() != Some(&D) || t.bottom().first() != Some(&D) {
        return Err(DualityError::Precondition(format!(
            "bend needs top and bottom starting with ↓, got {}",
            t.ty()
        )));
    }
    let mut top = t.top().to_vec();
    top[0] = U;
    let mut slices = vec![Slice::Max { pos: 2, tag: MaxTag::LeftToRight }];
    slices.extend(shifted(t.slices(), 2));
    slices.push(Slice::Cross { pos: 2, hand: Hand::FirstUnder });
    slices.push(Slice::Min { pos: 1 });
    Ok(TangleWord::from_top(top, slices)?)
}

/// Checks the entrywise identity relating `M(bend_first(t))` to `M(t)`:
/// for `i_1 ≠ j_1` the entry at `(i, j)` is `q^{n+1-2j_1} M(t)[(j_1,ī),(i_1,j̄)]`,
/// and for `i_1 = j_1` it is
/// `q^{n-2i_1} M(t)[i,j] + (q^{-1}-q) Σ_{k>i_1} q^{n+1-2k} M(t)[(k,ī),(k,j̄)]`.
pub fn check_flip_identity(t: &TangleWord, n: u32) -> Result<bool, DualityError> {
    let bent = matrix_of_word(&bend_first(t)?, n);
    let mt = matrix_of_word(t, n);
    let m = t.m() as i64;
    let n_ = n as i64;
    let z = LaurentPoly::q_pow(-1) - LaurentPoly::q_pow(1);
    let with_first = |k: u32, rest: &[u32]| {
        let mut v = Vec::with_capacity(rest.len() + 1);
        v.push(k);
        v.extend_from_slice(rest);
        v
    };
    let idx = all_indices(n, m as usize);
    for i in &idx {
        for j in &idx {
            let (i1, j1) = (i[0], j[0]);
            let expected = if i1 != j1 {
                mt.get(&with_first(j1, &i[1..]), &with_first(i1, &j[1..]))
                    .shift(n_ + 1 - 2 * j1 as i64)
            } else {
                let tail: LaurentPoly = (i1 + 1..=n)
                    .map(|k| mt.get(&with_first(k, &i[1..]), &with_first(k, &j[1..])).shift(n_ + 1 - 2 * k as i64))
                    .sum();
                mt.get(i, j).shift(n_ - 2 * i1 as i64) + &z * &tail
            };
            if expected != bent.get(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Crossings (all `FirstOver`) carrying the strand at top position `p` to
/// bottom position `perm[p]` (0-based).
fn permutation_slices(perm: &[usize]) -> Vec<Slice> {
    let mut arr = perm.to_vec();
    let mut out = Vec::new();
    let mut swapped = true;
    while swapped {
        swapped = false;
        for p in 0..arr.len().saturating_sub(1) {
            if arr[p] > arr[p + 1] {
                arr.swap(p, p + 1);
                out.push(Slice::over(p + 1));
                swapped = true;
            }
        }
    }
    out
}

fn inverse_slices(slices: &[Slice]) -> Vec<Slice> {
    slices
        .iter()
        .rev()
        .map(|s| match *s {
            Slice::Cross { pos, hand } => Slice::Cross { pos, hand: hand.flip() },
            other => other,
        })
        .collect()
}

/// One bending step on a word of type `(↓^r ↑^t, ↓^r ↑^t)`: bend the first
/// strand and carry it to position `r` with crossings above and below.
fn step(t: &TangleWord) -> Result<TangleWord, DualityError> {
    let r = t.top().iter().take_while(|&&o| o == D).count();
    let bent = bend_first(t)?;
    let mut slices: Vec<Slice> = (1..r).rev().map(Slice::over).collect();
    slices.extend_from_slice(bent.slices());
    slices.extend((1..r).map(Slice::under));
    let ty = TangleType::walled(r - 1, t.m() - r + 1);
    Ok(TangleWord::validate(ty, slices)?)
}

/// Carries a word of type `(↓^{r+s}, ↓^{r+s})` to type `(↓^r ↑^s, ↓^r ↑^s)`
/// by bending the first `s` strands around one at a time. The word is first
/// conjugated by a braid so that, at `q = 1`, vertex `k` ends up at position
/// `k` on both sides; each bend of a straight strand contributes a kink, so
/// the identity goes to `q^{-ns}` times the identity.
pub fn hecke_to_walled(t: &TangleWord, r: usize, s: usize) -> Result<TangleWord, DualityError> {
    let m = r + s;
    if t.ty() != &TangleType::square(vec![D; m]) {
        return Err(DualityError::Precondition(format!(
            "expected type (↓^{m}, ↓^{m}), got {}",
            t.ty()
        )));
    }
    // bending sends input vertex k ≤ s to position m+1-k and s+j to j
    let target: Vec<usize> = (0..m).map(|a| if a < s { m - 1 - a } else { a - s }).collect();
    let braid = permutation_slices(&target);
    let mut slices = braid.clone();
    slices.extend_from_slice(t.slices());
    slices.extend(inverse_slices(&braid));
    let mut w = TangleWord::validate(t.ty().clone(), slices)?;
    for _ in 0..s {
        w = step(&w)?;
    }
    Ok(w)
}

/// Linear extension of [`hecke_to_walled`] to elements of the Hecke algebra,
/// applied to canonical basis words and renormalized.
pub fn hecke_to_walled_element(
    norm: &Normalizer,
    a: &TangleElement,
    r: usize,
    s: usize,
) -> Result<TangleElement, DualityError> {
    let words = a
        .terms()
        .map(|(c, p)| Ok((p.clone(), hecke_to_walled(&norm.canonical(c), r, s)?)))
        .collect::<Result<Vec<_>, DualityError>>()?;
    let ty = TangleType::walled(r, s);
    Ok(norm.normalize_sum(&ty, words.iter().map(|(p, w)| (p.clone(), w))))
}
