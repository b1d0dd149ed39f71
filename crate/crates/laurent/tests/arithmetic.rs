use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use wt_laurent::{
    parse_rational, quantum_binom, quantum_factorial, quantum_int, ExactRational, LaurentPoly,
};

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn rat(s: &str) -> ExactRational {
    parse_rational(s).unwrap()
}

/// Exact polynomial long division by a divisor with a unit leading coefficient.
/// Returns `None` if the division leaves a remainder.
fn exact_div(num: &LaurentPoly, den: &LaurentPoly) -> Option<LaurentPoly> {
    let (dmin, dmax) = (den.min_exp()?, den.max_exp()?);
    let lead = den.coeff(dmax);
    let mut rem = num.clone();
    let mut quot = LaurentPoly::zero();
    while let Some(rmax) = rem.max_exp() {
        if rmax - rem.min_exp().unwrap() < dmax - dmin {
            return None;
        }
        let c = rem.coeff(rmax);
        if &c % &lead != BigInt::zero() {
            return None;
        }
        let t = LaurentPoly::monomial(c / &lead, rmax - dmax);
        rem -= &t * den;
        quot += t;
    }
    Some(quot)
}

fn binom_by_factorials(l: u32, k: u32) -> LaurentPoly {
    let den = quantum_factorial(k) * quantum_factorial(l - k);
    let quot = exact_div(&quantum_factorial(l), &den).expect("division must be exact");
    assert_eq!(&quot * &den, quantum_factorial(l));
    quot
}

#[test]
fn ring_examples() {
    assert_eq!(p("q") + p("q^-1"), p("q^-1 + q"));
    assert_eq!((p("q") - p("q^-1")) * (p("q") + p("q^-1")), p("q^2 - q^-2"));
    assert!((p("3q^5 - 7") * LaurentPoly::zero()).is_zero());
}

#[test]
fn quantum_int_examples() {
    assert!(quantum_int(1).is_one());
    assert_eq!(quantum_int(2), p("q^-1 + q"));
    assert_eq!(quantum_int(3), p("q^-2 + 1 + q^2"));
}

#[test]
fn quantum_binom_examples() {
    assert!(quantum_binom(3, 0).unwrap().is_one());
    assert_eq!(quantum_binom(2, 1).unwrap(), p("q^-1 + q"));
    let expected = p("q^-4 + q^-2 + 2 + q^2 + q^4");
    assert_eq!(quantum_binom(4, 2).unwrap(), expected);
    assert_eq!(binom_by_factorials(4, 2), expected);
    assert!(quantum_binom(1, 2).is_err());
}

#[test]
fn binom_matches_factorial_definition() {
    for l in 0..=8 {
        for k in 0..=l {
            assert_eq!(quantum_binom(l, k).unwrap(), binom_by_factorials(l, k), "l={l} k={k}");
        }
    }
}

#[test]
fn pascal_and_symmetry() {
    for l in 1..=8u32 {
        for k in 0..=l {
            let b = quantum_binom(l, k).unwrap();
            assert_eq!(b, quantum_binom(l, l - k).unwrap());
            let mut rhs = LaurentPoly::zero();
            if k < l {
                rhs += quantum_binom(l - 1, k).unwrap().shift(k as i64);
            }
            if k > 0 {
                rhs += quantum_binom(l - 1, k - 1).unwrap().shift(k as i64 - l as i64);
            }
            assert_eq!(b, rhs, "l={l} k={k}");
        }
    }
}

#[test]
fn eval_examples() {
    assert_eq!(p("q + q^-1").eval(&rat("2")).unwrap(), rat("5/2"));
    assert_eq!(quantum_int(3).eval(&rat("1")).unwrap(), rat("3"));
    assert!(LaurentPoly::zero().eval(&rat("5/3")).unwrap().is_zero());
    assert!(p("q").eval(&rat("0")).is_err());
}

#[test]
fn quantum_int_at_one() {
    for l in 1..20u32 {
        assert_eq!(quantum_int(l).at_one(), BigInt::from(l));
        assert_eq!(quantum_int(l).eval(&ExactRational::one()).unwrap(), rat(&l.to_string()));
    }
}

#[test]
fn big_coefficients_do_not_overflow() {
    let mut a = p("2 + 3q");
    for _ in 0..6 {
        a = &a * &a;
    }
    // (2+3q)^64 has leading coefficient 3^64
    assert_eq!(a.coeff(64), BigInt::from(3).pow(64));
}

#[test]
fn json_shape() {
    let v = serde_json::to_value(p("-q^-1 + q^3")).unwrap();
    assert_eq!(v, serde_json::json!({"-1": "-1", "3": "1"}));
    let back: LaurentPoly = serde_json::from_value(v).unwrap();
    assert_eq!(back, p("-q^-1 + q^3"));
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
}

fn arb_q0() -> impl Strategy<Value = ExactRational> {
    (1i64..=9, 1i64..=9, any::<bool>())
        .prop_map(|(a, b, s)| ExactRational::new(if s { a } else { -a }.into(), b.into()))
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn canonical_form_has_no_zero_coefficients(a in arb_poly(), b in arb_poly()) {
        let c = &a * &b - &b;
        prop_assert!(c.terms().all(|(_, v)| !v.is_zero()));
    }

    #[test]
    fn eval_is_ring_homomorphism(a in arb_poly(), b in arb_poly(), q0 in arb_q0()) {
        let (ea, eb) = (a.eval(&q0).unwrap(), b.eval(&q0).unwrap());
        prop_assert_eq!((&a + &b).eval(&q0).unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).eval(&q0).unwrap(), &ea * &eb);
    }

    #[test]
    fn display_round_trips(a in arb_poly()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }
}
