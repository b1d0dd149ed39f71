use wt_laurent::LaurentPoly;
use wt_rep::OperatorMatrix;
use wt_tangle::Orientation::{self, Down, Up};

use crate::{QGroupError, UGenerator};

fn diag(seq: Vec<Orientation>, n: u32, f: impl Fn(u32) -> LaurentPoly) -> OperatorMatrix {
    let mut m = OperatorMatrix::zero(seq.clone(), seq, n);
    for j in 1..=n {
        m.add_entry(vec![j], vec![j], &f(j)).expect("in range");
    }
    m
}

fn qh_exponent(h: &[i64], j: u32) -> i64 {
    h[j as usize - 1]
}

/// Action on the vector representation: `e_i v_{i+1} = v_i`,
/// `f_i v_i = v_{i+1}`, `q^h v_j = q^{h_j} v_j`; divided powers with
/// `l ≥ 2` act as zero.
pub fn gen_on_v(g: &UGenerator, n: u32) -> Result<OperatorMatrix, QGroupError> {
    g.validate(n)?;
    let mut m = OperatorMatrix::zero(vec![Down], vec![Down], n);
    match g {
        UGenerator::E { i, l } => {
            if *l == 1 {
                m.add_entry(vec![*i as u32], vec![*i as u32 + 1], &LaurentPoly::one()).expect("in range");
            }
        }
        UGenerator::F { i, l } => {
            if *l == 1 {
                m.add_entry(vec![*i as u32 + 1], vec![*i as u32], &LaurentPoly::one()).expect("in range");
            }
        }
        UGenerator::K { i, inverse } => {
            let p = if *inverse { -1 } else { 1 };
            let h = UGenerator::k_weight(*i, p, n);
            m = diag(vec![Down], n, |j| LaurentPoly::q_pow(qh_exponent(&h, j)));
        }
        UGenerator::QH(h) => m = diag(vec![Down], n, |j| LaurentPoly::q_pow(qh_exponent(h, j))),
    }
    Ok(m)
}

/// `K_i^p` on `V` (column convention).
fn k_on_v(i: usize, p: i64, n: u32) -> OperatorMatrix {
    gen_on_v(&UGenerator::QH(UGenerator::k_weight(i, p, n)), n).expect("valid weight")
}

/// Matrix of the antipode image `S(g)` on `V`:
/// `S(e^{(l)}) = (-1)^l q^{l(l-1)} e^{(l)} K^l`,
/// `S(f^{(l)}) = (-1)^l q^{-l(l-1)} K^{-l} f^{(l)}`, `S(q^h) = q^{-h}`.
pub fn antipode_on_v(g: &UGenerator, n: u32) -> Result<OperatorMatrix, QGroupError> {
    let x = gen_on_v(g, n)?;
    let sign = |l: u32, e: i64| {
        let c = LaurentPoly::q_pow(e);
        if l % 2 == 1 { -c } else { c }
    };
    Ok(match g {
        UGenerator::E { i, l } => {
            let c = sign(*l, (*l as i64) * (*l as i64 - 1));
            x.mul(&k_on_v(*i, *l as i64, n)).expect("square").scale(&c)
        }
        UGenerator::F { i, l } => {
            let c = sign(*l, -(*l as i64) * (*l as i64 - 1));
            k_on_v(*i, -(*l as i64), n).mul(&x).expect("square").scale(&c)
        }
        UGenerator::K { i, inverse } => k_on_v(*i, if *inverse { 1 } else { -1 }, n),
        UGenerator::QH(h) => {
            let neg: Vec<i64> = h.iter().map(|a| -a).collect();
            gen_on_v(&UGenerator::QH(neg), n)?
        }
    })
}

/// Action on `V*` in the dual basis: `(x·v_j*)(v_k) = v_j*(S(x) v_k)`, so the
/// matrix is the transpose of `S(x)` on `V`.
pub fn gen_on_vdual(g: &UGenerator, n: u32) -> Result<OperatorMatrix, QGroupError> {
    let t = antipode_on_v(g, n)?.transpose();
    // relabel the factor as V*
    let mut out = OperatorMatrix::zero(vec![Up], vec![Up], n);
    for (r, c, v) in t.entries() {
        out.add_entry(r.clone(), c.clone(), v).expect("in range");
    }
    Ok(out)
}

/// `K_i^p` on `V_I`.
pub fn k_power(i: usize, p: i64, seq: &[Orientation], n: u32) -> OperatorMatrix {
    gen_on_mixed(&UGenerator::QH(UGenerator::k_weight(i, p, n)), seq, n).expect("valid weight")
}

fn scalar_on_empty(g: &UGenerator) -> LaurentPoly {
    match g {
        UGenerator::E { .. } | UGenerator::F { .. } => LaurentPoly::zero(),
        UGenerator::K { .. } | UGenerator::QH(_) => LaurentPoly::one(),
    }
}

/// Left action on `V_I`, splitting off the first factor.
pub fn gen_on_mixed(g: &UGenerator, seq: &[Orientation], n: u32) -> Result<OperatorMatrix, QGroupError> {
    gen_on_mixed_split(g, seq, n, 1)
}

/// Left action on `V_I` with the top-level coproduct applied to
/// `V_{I[..split]} ⊗ V_{I[split..]}`; deeper levels split off the first factor.
///
/// `Δ(e^{(l)}) = Σ_k q^{k(l-k)} e^{(l-k)} ⊗ K^{k-l} e^{(k)}`,
/// `Δ(f^{(l)}) = Σ_k q^{-k(l-k)} f^{(l-k)} K^k ⊗ f^{(k)}`, and `q^h` is
/// group-like.
pub fn gen_on_mixed_split(g: &UGenerator, seq: &[Orientation], n: u32, split: usize) -> Result<OperatorMatrix, QGroupError> {
    g.validate(n)?;
    match seq.len() {
        0 => return Ok(OperatorMatrix::identity(vec![], n).scale(&scalar_on_empty(g))),
        1 => {
            return match seq[0] {
                Down => gen_on_v(g, n),
                Up => gen_on_vdual(g, n),
            }
        }
        _ => {}
    }
    let split = split.clamp(1, seq.len() - 1);
    let (a, b) = seq.split_at(split);
    let on = |x: &UGenerator, s: &[Orientation]| gen_on_mixed(x, s, n);
    let tensor = |x: &OperatorMatrix, y: &OperatorMatrix| x.tensor(y).expect("same n");
    let id = |s: &[Orientation]| OperatorMatrix::identity(s.to_vec(), n);
    let dp = |make: fn(usize, u32) -> UGenerator, i: usize, k: u32, s: &[Orientation]| {
        if k == 0 {
            Ok(id(s))
        } else {
            on(&make(i, k), s)
        }
    };
    let e_of = |i, l| UGenerator::E { i, l };
    let f_of = |i, l| UGenerator::F { i, l };
    Ok(match g {
        UGenerator::E { i, l } => {
            let mut acc = OperatorMatrix::zero(seq.to_vec(), seq.to_vec(), n);
            for k in 0..=*l {
                let c = LaurentPoly::q_pow(k as i64 * (*l - k) as i64);
                let left = dp(e_of, *i, l - k, a)?;
                let right = k_power(*i, k as i64 - *l as i64, b, n).mul(&dp(e_of, *i, k, b)?).expect("square");
                acc = acc.add(&tensor(&left, &right).scale(&c)).expect("same shape");
            }
            acc
        }
        UGenerator::F { i, l } => {
            let mut acc = OperatorMatrix::zero(seq.to_vec(), seq.to_vec(), n);
            for k in 0..=*l {
                let c = LaurentPoly::q_pow(-(k as i64) * (*l - k) as i64);
                let left = dp(f_of, *i, l - k, a)?.mul(&k_power(*i, k as i64, a, n)).expect("square");
                let right = dp(f_of, *i, k, b)?;
                acc = acc.add(&tensor(&left, &right).scale(&c)).expect("same shape");
            }
            acc
        }
        UGenerator::K { .. } | UGenerator::QH(_) => tensor(&on(g, a)?, &on(g, b)?),
    })
}
