//! Base-`a` encoding: a polynomial whose coefficients are all `< a` is the same
//! thing as the base-`a` digit string of its value at `a`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::NNPoly;
use crate::error::{Error, Result};

/// A point `(a, b)` of `N0^2`, read as "the polynomial whose value at `a` is `b`".
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BaseAPair {
    #[serde(with = "decimal")]
    pub a: BigUint,
    #[serde(with = "decimal")]
    pub b: BigUint,
}

impl BaseAPair {
    pub fn new(a: impl Into<BigUint>, b: impl Into<BigUint>) -> Self {
        BaseAPair {
            a: a.into(),
            b: b.into(),
        }
    }
}

/// Which embedding of the monoid into `N0^2` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmbedMode {
    /// `(alpha(f)+1, f(alpha(f)+1))`
    Alpha,
    /// `(f(1)+1, f(f(1)+1))`
    Eval,
    /// `(f(1), f(f(1)))`, only for `f` not divisible by `x` and of degree >= 1.
    EvalN,
}

/// `f(a)`, provided every coefficient of `f` is a base-`a` digit.
pub fn encode_base(f: &NNPoly, a: &BigUint) -> Result<BigUint> {
    if a <= f.alpha() {
        return Err(Error::domain(format!(
            "base {a} must exceed the largest coefficient {} of {f}",
            f.alpha()
        )));
    }
    Ok(f.eval(a))
}

/// The unique polynomial with coefficients `< a` whose value at `a` is `b`.
pub fn decode_base(a: &BigUint, b: &BigUint) -> Result<NNPoly> {
    if a < &BigUint::from(2u8) {
        return Err(Error::domain(format!("base must be at least 2, got {a}")));
    }
    if b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut digits = Vec::new();
    let mut q = b.clone();
    while !q.is_zero() {
        let (next, r) = q.div_rem(a);
        digits.push(r);
        q = next;
    }
    NNPoly::new(digits)
}

/// `max { n >= 1 : a^n < b }`, or 0 when no such `n` exists.
pub fn eta(a: &BigUint, b: &BigUint) -> Result<usize> {
    if a < &BigUint::from(2u8) {
        return Err(Error::domain(format!("eta needs a >= 2, got {a}")));
    }
    if b <= &BigUint::one() {
        return Err(Error::domain(format!("eta needs b >= 2, got {b}")));
    }
    let mut n = 0;
    let mut power = a.clone();
    while &power < b {
        n += 1;
        power *= a;
    }
    Ok(n)
}

/// Maps `f` to a point of `N0^2` from which [`decode_base`] recovers it.
pub fn embed_pair(f: &NNPoly, mode: EmbedMode) -> Result<BaseAPair> {
    let a = match mode {
        EmbedMode::Alpha => f.alpha() + 1u8,
        EmbedMode::Eval => f.eval(&BigUint::one()) + 1u8,
        EmbedMode::EvalN => {
            if f.is_constant() || f.x_exponent() > 0 {
                return Err(Error::domain(format!(
                    "eval_N embedding needs x not dividing f and deg f >= 1, got {f}"
                )));
            }
            let s = f.eval(&BigUint::one());
            if &s <= f.alpha() {
                return Err(Error::domain(format!(
                    "f(1) does not exceed alpha(f) for {f}"
                )));
            }
            s
        }
    };
    let b = f.eval(&a);
    Ok(BaseAPair { a, b })
}

/// `(a1,b1) ~ (a2,b2)`: some polynomial with coefficients below both bases takes
/// value `b1` at `a1` and `b2` at `a2`. Pairs with `a <= 1` relate to nothing.
pub fn sim_equiv(p1: &BaseAPair, p2: &BaseAPair) -> bool {
    let one = BigUint::one();
    if p1.a <= one || p2.a <= one || p1.b.is_zero() || p2.b.is_zero() {
        return false;
    }
    let (hi, lo) = if p1.a >= p2.a { (p1, p2) } else { (p2, p1) };
    let Ok(f) = decode_base(&hi.a, &hi.b) else {
        return false;
    };
    f.alpha() < &lo.a && f.eval(&lo.a) == lo.b
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn nn(s: &str) -> NNPoly {
        s.parse().unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_base(&nn("x+7"), &n(11)).unwrap(), n(18));
        assert_eq!(encode_base(&NNPoly::x(), &n(5)).unwrap(), n(5));
        assert_eq!(encode_base(&nn("x^4+x^2+1"), &n(2)).unwrap(), n(21));
        assert!(encode_base(&nn("x+7"), &n(7)).is_err());
    }

    #[test]
    fn decode_examples() {
        assert_eq!(
            decode_base(&n(2), &n(63)).unwrap(),
            nn("x^5+x^4+x^3+x^2+x+1")
        );
        assert_eq!(decode_base(&n(11), &n(13)).unwrap(), nn("x+2"));
        assert_eq!(decode_base(&n(9), &n(4)).unwrap(), nn("4"));
        assert!(decode_base(&n(1), &n(4)).is_err());
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&n(2), &n(63)).unwrap(), 5);
        assert_eq!(eta(&n(11), &n(234)).unwrap(), 2);
        assert_eq!(eta(&n(11), &n(13)).unwrap(), 1);
        assert_eq!(eta(&n(11), &n(5)).unwrap(), 0);
        // strict inequality: b = a^n reports n - 1
        assert_eq!(eta(&n(3), &n(27)).unwrap(), 2);
        assert!(eta(&n(3), &n(1)).is_err());
    }

    #[test]
    fn embed_examples() {
        let f = nn("x+1");
        assert_eq!(
            embed_pair(&f, EmbedMode::Alpha).unwrap(),
            BaseAPair::new(2u8, 3u8)
        );
        assert_eq!(
            embed_pair(&f, EmbedMode::EvalN).unwrap(),
            BaseAPair::new(2u8, 3u8)
        );
        assert_eq!(
            embed_pair(&f, EmbedMode::Eval).unwrap(),
            BaseAPair::new(3u8, 4u8)
        );
        assert_eq!(
            embed_pair(&nn("6"), EmbedMode::Alpha).unwrap(),
            BaseAPair::new(7u8, 6u8)
        );
        assert!(embed_pair(&nn("6"), EmbedMode::EvalN).is_err());
        assert!(embed_pair(&nn("x^2+x"), EmbedMode::EvalN).is_err());
    }

    #[test]
    fn sim_examples() {
        assert!(sim_equiv(
            &BaseAPair::new(2u8, 3u8),
            &BaseAPair::new(3u8, 4u8)
        ));
        assert!(!sim_equiv(
            &BaseAPair::new(1u8, 3u8),
            &BaseAPair::new(1u8, 3u8)
        ));
        assert!(!sim_equiv(
            &BaseAPair::new(1u8, 5u8),
            &BaseAPair::new(7u8, 5u8)
        ));
        assert!(sim_equiv(
            &BaseAPair::new(5u8, 5u8),
            &BaseAPair::new(7u8, 7u8)
        ));
        assert!(!sim_equiv(
            &BaseAPair::new(2u8, 3u8),
            &BaseAPair::new(3u8, 5u8)
        ));
    }

    proptest! {
        #[test]
        fn decode_inverts_encode(coeffs in prop::collection::vec(0u64..40, 1..7), extra in 1u64..30) {
            prop_assume!(coeffs.iter().any(|&c| c > 0));
            let f = NNPoly::from_u64s(&coeffs).unwrap();
            let a = f.alpha() + extra;
            prop_assert_eq!(decode_base(&a, &encode_base(&f, &a).unwrap()).unwrap(), f);
        }

        #[test]
        fn decode_is_injective_with_digits_below_base(a in 2u64..20, b1 in 1u64..5000, b2 in 1u64..5000) {
            let f1 = decode_base(&n(a), &n(b1)).unwrap();
            let f2 = decode_base(&n(a), &n(b2)).unwrap();
            prop_assert!(f1.alpha() < &n(a));
            prop_assert_eq!(f1 == f2, b1 == b2);
        }

        #[test]
        fn embeddings_decode_back(coeffs in prop::collection::vec(0u64..30, 2..6)) {
            prop_assume!(coeffs[0] > 0 && *coeffs.last().unwrap() > 0);
            let f = NNPoly::from_u64s(&coeffs).unwrap();
            for mode in [EmbedMode::Alpha, EmbedMode::Eval, EmbedMode::EvalN] {
                let p = embed_pair(&f, mode).unwrap();
                prop_assert_eq!(decode_base(&p.a, &p.b).unwrap(), f.clone());
            }
        }

        #[test]
        fn eta_is_degree_off_pure_powers(coeffs in prop::collection::vec(0u64..9, 2..7)) {
            prop_assume!(coeffs[0] > 0 && *coeffs.last().unwrap() > 0);
            let f = NNPoly::from_u64s(&coeffs).unwrap();
            let a = f.alpha() + 1u8;
            prop_assert_eq!(eta(&a, &f.eval(&a)).unwrap(), f.degree());
        }
    }
}
