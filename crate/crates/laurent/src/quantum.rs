use crate::{LaurentError, LaurentPoly};

/// `[l]_q = sum_{i=0}^{l-1} q^{2i-l+1}`; `[0]_q = 0`.
pub fn quantum_int(l: u32) -> LaurentPoly {
    let l = l as i64;
    (0..l).map(|i| LaurentPoly::q_pow(2 * i - l + 1)).sum()
}

/// `[l]_q! = [l]_q [l-1]_q ... [1]_q`.
pub fn quantum_factorial(l: u32) -> LaurentPoly {
    (1..=l).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_int(k))
}

/// Gaussian binomial `[l choose k]_q`, built from the q-Pascal rule
/// `[l,k] = q^k [l-1,k] + q^{k-l} [l-1,k-1]` so no division is ever needed.
pub fn quantum_binom(l: u32, k: u32) -> Result<LaurentPoly, LaurentError> {
    if k > l {
        return Err(LaurentError::InvalidArgument(format!(
            "binomial index k={k} exceeds l={l}"
        )));
    }
    // row[j] holds [row_len-1 choose j]
    let mut row = vec![LaurentPoly::one()];
    for len in 1..=l as i64 {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=len {
            let mut v = LaurentPoly::zero();
            if j < len {
                v += &row[j as usize] * &LaurentPoly::q_pow(j);
            }
            if j > 0 {
                v += &row[(j - 1) as usize] * &LaurentPoly::q_pow(j - len);
            }
            next.push(v);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_quantum_integers() {
        assert!(quantum_int(0).is_zero());
        assert_eq!(quantum_int(1), LaurentPoly::one());
        assert_eq!(quantum_int(2), p("1*q^-1 + 1*q^1"));
        assert_eq!(quantum_int(3), p("1*q^-2 + 1*q^0 + 1*q^2"));
    }

    #[test]
    fn binomials() {
        assert_eq!(quantum_binom(3, 0).unwrap(), LaurentPoly::one());
        assert_eq!(quantum_binom(2, 1).unwrap(), quantum_int(2));
        assert_eq!(
            quantum_binom(4, 2).unwrap(),
            p("1*q^-4 + 1*q^-2 + 2*q^0 + 1*q^2 + 1*q^4")
        );
        assert!(quantum_binom(2, 3).is_err());
    }
}
