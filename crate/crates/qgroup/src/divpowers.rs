use serde::Serialize;
use wt_laurent::LaurentPoly;
use wt_rep::OperatorMatrix;
use wt_tangle::Orientation;

use crate::{gen_on_mixed, k_power, QGroupError, UGenerator};

/// Outcome of the two divided-power summation identities on `V_I ⊗ V_J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivPowerReport {
    pub i: usize,
    pub l: u32,
    pub n: u32,
    /// `Σ_{k<l} (-q^{l-1})^{-k} (f^{(k)}⊗1) Δ(f^{(l-k)}) = (K^l⊗1)(1⊗f^{(l)} - S(f^{(l)})⊗1)`.
    pub f_identity: bool,
    /// `Σ_{k<l} (-q^{l-1})^k (e^{(k)}⊗K^{-k}) Δ(e^{(l-k)}) = 1⊗e^{(l)} - (S(e^{(l)})⊗1)(K^{-l}⊗K^{-l})`.
    pub e_identity: bool,
    /// The e-identity with `e^{(k)}⊗K^{k}` in the sum instead of `K^{-k}`.
    pub e_identity_with_positive_k: bool,
}

impl DivPowerReport {
    pub fn passed(&self) -> bool {
        self.f_identity && self.e_identity
    }
}

fn signed_q(k: i64, e: i64) -> LaurentPoly {
    let c = LaurentPoly::q_pow(e);
    if k % 2 == 0 {
        c
    } else {
        -c
    }
}

/// Verifies the divided-power identities for generator index `i` and
/// power `l` as matrix identities on `V_I ⊗ V_J`.
pub fn check_divpowers(i: usize, l: u32, left: &[Orientation], right: &[Orientation], n: u32) -> Result<DivPowerReport, QGroupError> {
    UGenerator::E { i, l }.validate(n)?;
    let both: Vec<Orientation> = [left, right].concat();
    let l_i = l as i64;
    let id = |s: &[Orientation]| OperatorMatrix::identity(s.to_vec(), n);
    let dp = |f: bool, k: u32, s: &[Orientation]| -> Result<OperatorMatrix, QGroupError> {
        if k == 0 {
            return Ok(id(s));
        }
        let g = if f { UGenerator::F { i, l: k } } else { UGenerator::E { i, l: k } };
        gen_on_mixed(&g, s, n)
    };
    let kp = |p: i64, s: &[Orientation]| k_power(i, p, s, n);
    let t = |a: &OperatorMatrix, b: &OperatorMatrix| a.tensor(b).expect("same n");
    let mul = |a: &OperatorMatrix, b: &OperatorMatrix| a.mul(b).expect("square");
    let zero = OperatorMatrix::zero(both.clone(), both.clone(), n);

    // f-identity
    let mut lhs = zero.clone();
    for k in 0..l {
        let c = signed_q(k as i64, -(k as i64) * (l_i - 1));
        let term = mul(&t(&dp(true, k, left)?, &id(right)), &dp(true, l - k, &both)?);
        lhs = lhs.add(&term.scale(&c)).expect("same shape");
    }
    let s_f = mul(&kp(-l_i, left), &dp(true, l, left)?).scale(&signed_q(l_i, -l_i * (l_i - 1)));
    let inner = t(&id(left), &dp(true, l, right)?).sub(&t(&s_f, &id(right))).expect("same shape");
    let f_identity = lhs == mul(&t(&kp(l_i, left), &id(right)), &inner);

    // e-identity, with either sign of the K exponent in the sum
    let s_e = mul(&dp(false, l, left)?, &kp(l_i, left)).scale(&signed_q(l_i, l_i * (l_i - 1)));
    let rhs = t(&id(left), &dp(false, l, right)?)
        .sub(&mul(&t(&s_e, &id(right)), &t(&kp(-l_i, left), &kp(-l_i, right))))
        .expect("same shape");
    let e_lhs = |sign: i64| -> Result<OperatorMatrix, QGroupError> {
        let mut acc = zero.clone();
        for k in 0..l {
            let c = signed_q(k as i64, k as i64 * (l_i - 1));
            let term = mul(&t(&dp(false, k, left)?, &kp(sign * k as i64, right)), &dp(false, l - k, &both)?);
            acc = acc.add(&term.scale(&c)).expect("same shape");
        }
        Ok(acc)
    };
    let e_identity = e_lhs(-1)? == rhs;
    let e_identity_with_positive_k = e_lhs(1)? == rhs;
    Ok(DivPowerReport { i, l, n, f_identity, e_identity, e_identity_with_positive_k })
}
