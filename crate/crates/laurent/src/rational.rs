use num_bigint::BigInt;
use num_traits::Zero;

use crate::LaurentError;

/// Reduced fraction with positive denominator.
pub type ExactRational = num_rational::BigRational;

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<ExactRational, LaurentError> {
    let s = s.trim();
    let bad = || LaurentError::InvalidArgument(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(LaurentError::InvalidArgument(format!("zero denominator in {s:?}")));
    }
    Ok(ExactRational::new(num, den))
}
