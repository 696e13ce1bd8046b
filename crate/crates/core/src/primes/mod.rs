//! Prime elements, non-primality witnesses for atoms, prime ideals of the monoid,
//! and the subsets `E`, `A_lambda`, `P_lambda` and the root closure of `Z[x]`.

mod fm;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intfactor::{factor_nat, is_prime, next_prime};
use crate::nnfactor::{divides_n, is_atom};
use crate::poly::{NNPoly, ZPoly};
use crate::zx::{eisenstein_prime, is_irreducible_z};

use fm::Ineq;

/// Default degree bound for the search in [`in_e`].
pub const DEFAULT_E_DEGREE_BOUND: usize = 6;

/// Largest intermediate system Fourier-Motzkin may build.
const FM_MAX_CONSTRAINTS: usize = 200_000;

/// Only `x` and the prime integers are prime elements.
pub fn is_prime_element(f: &NNPoly) -> Result<bool> {
    if f.is_one() {
        return Err(Error::Unit);
    }
    if f.is_x() {
        return Ok(true);
    }
    if f.is_constant() {
        return is_prime(f.constant_term());
    }
    Ok(false)
}

/// The polynomial `z` built from primes `p`, `q` for a list of atoms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma3 {
    pub z: ZPoly,
    #[serde(serialize_with = "crate::json::ser_decimal")]
    pub p: BigUint,
    #[serde(serialize_with = "crate::json::ser_decimal")]
    pub q: BigUint,
}

/// `z = q(p+1) x^{2n} - p x^n + pq * (all other powers up to 2n)`, where `n` is the
/// largest degree, `q` the smallest prime `>= max f_i(1)` and `p` the smallest
/// prime other than `q`. Every `f_i z` has non-negative coefficients while `z`
/// itself does not, and `z` is Eisenstein at `p`.
pub fn lemma3(atoms: &[NNPoly]) -> Result<Lemma3> {
    if atoms.is_empty() {
        return Err(Error::domain("need at least one atom"));
    }
    for f in atoms {
        if f.is_x() || f.is_constant() {
            return Err(Error::domain(format!(
                "{f} must be a non-constant atom other than x"
            )));
        }
        if !is_atom(f)? {
            return Err(Error::domain(format!("{f} is not an atom")));
        }
    }
    let n = atoms.iter().map(NNPoly::degree).max().unwrap();
    let s = atoms.iter().map(|f| f.eval(&BigUint::one())).max().unwrap();
    let q = next_prime(&s)?;
    let two = BigUint::from(2u8);
    let p = if q == two { BigUint::from(3u8) } else { two };

    let (pi, qi) = (BigInt::from(p.clone()), BigInt::from(q.clone()));
    let mut coeffs = vec![&pi * &qi; 2 * n + 1];
    coeffs[2 * n] = &qi * (&pi + 1);
    coeffs[n] = -pi.clone();
    let z = ZPoly::new(coeffs);

    let lead = z.leading().unwrap();
    let eisenstein = !(lead % &pi).is_zero()
        && z.coeffs()[..2 * n].iter().all(|a| (a % &pi).is_zero())
        && !(z.constant_term() % (&pi * &pi)).is_zero();
    let checks = !z.is_nonneg()?
        && eisenstein
        && z.degree() == Some(2 * n)
        && atoms
            .iter()
            .all(|f| (&f.to_z() * &z).is_nonneg().unwrap_or(false));
    if !checks {
        return Err(Error::domain(format!(
            "construction failed its checks for z = {z}"
        )));
    }
    Ok(Lemma3 { z, p, q })
}

pub fn lemma3_z(atoms: &[NNPoly]) -> Result<ZPoly> {
    Ok(lemma3(atoms)?.z)
}

/// Data showing that an atom `f` is not prime: `f` divides `g h` but neither `g`
/// nor `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonPrimalityWitness {
    pub f: NNPoly,
    pub h: NNPoly,
    pub z: ZPoly,
    pub g: NNPoly,
    #[serde(serialize_with = "crate::json::ser_decimal")]
    pub eisenstein_prime: BigUint,
}

impl NonPrimalityWitness {
    /// Re-checks every defining property.
    pub fn verify(&self) -> bool {
        let Some(hz) = (&self.h.to_z() * &self.z).to_nn() else {
            return false;
        };
        let gh = &self.g * &self.h;
        !self.z.is_nonneg().unwrap_or(true)
            && &self.f.to_z() * &self.z == self.g.to_z()
            && hz.degree() >= 1
            && divides_n(&self.f, &gh)
            && !divides_n(&self.f, &self.g)
            && !divides_n(&self.f, &self.h)
            && eisenstein_prime(&self.z).as_ref() == Some(&self.eisenstein_prime)
    }

    /// No prime element of the monoid divides `g = f z`.
    pub fn g_has_no_prime_divisor(&self) -> bool {
        !self.g.constant_term().is_zero() && self.g.content().is_one()
    }
}

pub fn non_primality_witness(f: &NNPoly) -> Result<NonPrimalityWitness> {
    if f.is_one() {
        return Err(Error::Unit);
    }
    if f.is_x() || f.is_constant() || !is_atom(f)? {
        return Err(Error::domain(format!(
            "{f} must be a non-constant atom other than x"
        )));
    }
    let h = (1u64..)
        .map(NNPoly::x_plus)
        .find(|h| !divides_n(f, h))
        .unwrap();
    let Lemma3 { z, p, .. } = lemma3(&[f.clone(), h.clone()])?;
    let g = (&f.to_z() * &z)
        .to_nn()
        .expect("checked by the construction");
    let w = NonPrimalityWitness {
        f: f.clone(),
        h,
        z,
        g,
        eisenstein_prime: p,
    };
    if !w.verify() {
        return Err(Error::domain(format!(
            "witness for {f} failed verification"
        )));
    }
    Ok(w)
}

/// Generators of an ideal `g_1 M u ... u g_m M`, kept minimal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IdealGens {
    generators: Vec<NNPoly>,
}

impl IdealGens {
    /// Drops duplicates and every generator that is a multiple of another.
    pub fn new(gens: impl IntoIterator<Item = NNPoly>) -> Self {
        let mut all: Vec<NNPoly> = gens.into_iter().collect();
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
        all.dedup();
        let mut kept: Vec<NNPoly> = Vec::new();
        for g in all {
            if !kept.iter().any(|k| divides_n(k, &g)) {
                kept.push(g);
            }
        }
        kept.sort();
        IdealGens { generators: kept }
    }

    pub fn generators(&self) -> &[NNPoly] {
        &self.generators
    }

    pub fn contains(&self, f: &NNPoly) -> bool {
        self.generators.iter().any(|g| divides_n(g, f))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealClass {
    Prime,
    NotPrime,
}

/// A finitely generated ideal is prime exactly when it is generated by prime
/// integers, possibly together with `x`.
pub fn fg_prime_ideal_classify(gens: &IdealGens) -> Result<IdealClass> {
    let mut xs = 0;
    for g in gens.generators() {
        if g.is_x() {
            xs += 1;
        } else if !(g.is_constant() && is_prime(g.constant_term())?) {
            return Ok(IdealClass::NotPrime);
        }
    }
    Ok(if xs <= 1 {
        IdealClass::Prime
    } else {
        IdealClass::NotPrime
    })
}

pub fn ideal_member(f: &NNPoly, gens: &IdealGens) -> bool {
    gens.contains(f)
}

/// The five families of prime ideals of the core monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeIdealFamily {
    ConstNe1,
    LeadNe1,
    ConstDivP(BigUint),
    LeadDivP(BigUint),
    Nonunit,
}

impl fmt::Display for PrimeIdealFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeIdealFamily::ConstNe1 => f.write_str("const_ne_1"),
            PrimeIdealFamily::LeadNe1 => f.write_str("lead_ne_1"),
            PrimeIdealFamily::ConstDivP(p) => write!(f, "const_div_p:{p}"),
            PrimeIdealFamily::LeadDivP(p) => write!(f, "lead_div_p:{p}"),
            PrimeIdealFamily::Nonunit => f.write_str("nonunit"),
        }
    }
}

impl FromStr for PrimeIdealFamily {
    type Err = Error;

    /// `const_ne_1`, `lead_ne_1`, `const_div_p:P`, `lead_div_p:P` or `nonunit`.
    fn from_str(s: &str) -> Result<Self> {
        let prime = |p: &str| -> Result<BigUint> {
            let p: BigUint = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime {p:?}")))?;
            if !is_prime(&p)? {
                return Err(Error::domain(format!("{p} is not prime")));
            }
            Ok(p)
        };
        match s.trim().split_once(':') {
            None => match s.trim() {
                "const_ne_1" => Ok(PrimeIdealFamily::ConstNe1),
                "lead_ne_1" => Ok(PrimeIdealFamily::LeadNe1),
                "nonunit" => Ok(PrimeIdealFamily::Nonunit),
                other => Err(Error::Parse(format!("unknown ideal family {other:?}"))),
            },
            Some(("const_div_p", p)) => Ok(PrimeIdealFamily::ConstDivP(prime(p)?)),
            Some(("lead_div_p", p)) => Ok(PrimeIdealFamily::LeadDivP(prime(p)?)),
            Some((other, _)) => Err(Error::Parse(format!("unknown ideal family {other:?}"))),
        }
    }
}

impl Serialize for PrimeIdealFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn require_p0(f: &NNPoly) -> Result<()> {
    if f.in_p0() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{f} must be primitive with non-zero constant term"
        )))
    }
}

pub fn prime_ideal_family_member(f: &NNPoly, family: &PrimeIdealFamily) -> Result<bool> {
    require_p0(f)?;
    Ok(match family {
        PrimeIdealFamily::ConstNe1 => !f.constant_term().is_one(),
        PrimeIdealFamily::LeadNe1 => !f.leading().is_one(),
        PrimeIdealFamily::ConstDivP(p) => {
            require_prime(p)?;
            f.constant_term().is_multiple_of(p)
        }
        PrimeIdealFamily::LeadDivP(p) => {
            require_prime(p)?;
            f.leading().is_multiple_of(p)
        }
        PrimeIdealFamily::Nonunit => !f.is_one(),
    })
}

fn require_prime(p: &BigUint) -> Result<()> {
    if is_prime(p)? {
        Ok(())
    } else {
        Err(Error::domain(format!("{p} is not prime")))
    }
}

/// Exponents of primes in `f(0)` and in the leading coefficient, and the degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Valuations {
    #[serde(serialize_with = "crate::json::ser_string_keyed")]
    pub v0p: BTreeMap<BigUint, u32>,
    #[serde(serialize_with = "crate::json::ser_string_keyed")]
    pub lp: BTreeMap<BigUint, u32>,
    pub delta: usize,
}

impl std::ops::Add for &Valuations {
    type Output = Valuations;

    fn add(self, rhs: &Valuations) -> Valuations {
        let merge = |a: &BTreeMap<BigUint, u32>, b: &BTreeMap<BigUint, u32>| {
            let mut out = a.clone();
            for (p, e) in b {
                *out.entry(p.clone()).or_default() += e;
            }
            out
        };
        Valuations {
            v0p: merge(&self.v0p, &rhs.v0p),
            lp: merge(&self.lp, &rhs.lp),
            delta: self.delta + rhs.delta,
        }
    }
}

pub fn valuations(f: &NNPoly) -> Result<Valuations> {
    require_p0(f)?;
    Ok(Valuations {
        v0p: factor_nat(f.constant_term())?,
        lp: factor_nat(f.leading())?,
        delta: f.degree(),
    })
}

/// A cofactor `c` with `deg c <= deg_bound` and `f c` a non-zero polynomial with
/// non-negative coefficients, found by exact elimination one degree at a time.
/// `None` means no cofactor exists within the bound.
pub fn in_e(f: &ZPoly, deg_bound: usize) -> Result<Option<ZPoly>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    for d in 0..=deg_bound {
        let nvars = d + 1;
        let constraints = (0..=n + d)
            .map(|k| {
                let a = (0..nvars)
                    .map(|i| {
                        if k >= i {
                            f.coeff(k - i)
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect();
                let b = if k == n + d {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                Ineq { a, b }
            })
            .collect();
        let Some(point) = fm::feasible_point(constraints, nvars, FM_MAX_CONSTRAINTS)? else {
            continue;
        };
        let c = integral_direction(&point);
        debug_assert!((f * &c).is_nonneg().unwrap_or(false));
        return Ok(Some(c));
    }
    Ok(None)
}

/// Scales a rational vector to a primitive integer polynomial with the same signs.
fn integral_direction(v: &[BigRational]) -> ZPoly {
    let l = v.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
    let ints: Vec<BigInt> = v.iter().map(|r| r.numer() * (&l / r.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    ZPoly::new(ints.into_iter().map(|c| c / &g).collect())
}

/// Result of a bounded membership search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "exponent", rename_all = "snake_case")]
pub enum Membership {
    /// Member, with the least exponent that works.
    Member(u32),
    /// Provably not a member.
    Never,
    /// No exponent up to the bound works and no obstruction was found.
    Unknown,
}

fn sample_points() -> Vec<BigRational> {
    [(0, 1), (1, 1), (2, 1), (1, 2), (3, 2)]
        .into_iter()
        .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect()
}

/// Irreducible in `Z[x]`: `+-p` for a prime `p`, or a primitive irreducible
/// polynomial of positive degree.
fn is_atom_z(f: &ZPoly) -> Result<bool> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => is_prime(f.constant_term().magnitude()),
        Some(_) => Ok(f.content().is_one() && is_irreducible_z(f)?),
    }
}

/// `lambda` has non-negative coefficients and is irreducible in `Z[x]`.
pub fn b_set_member(lambda: &NNPoly) -> Result<bool> {
    if lambda.is_one() {
        return Ok(false);
    }
    is_atom_z(&lambda.to_z())
}

/// Least `k <= k_max` with `lambda^k f` in the monoid.
pub fn a_lambda_member(f: &ZPoly, lambda: &NNPoly, k_max: u32) -> Result<Membership> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !b_set_member(lambda)? {
        return Err(Error::domain(format!(
            "{lambda} is not an irreducible element with non-negative coefficients"
        )));
    }
    let lz = lambda.to_z();
    for t in sample_points() {
        let ft = f.eval_rational(&t);
        let positive_t = t.is_positive();
        if (ft.is_negative() && lz.eval_rational(&t).is_positive()) || (ft.is_zero() && positive_t)
        {
            return Ok(Membership::Never);
        }
    }
    let mut acc = f.clone();
    for k in 0..=k_max {
        if acc.is_nonneg()? {
            return Ok(Membership::Member(k));
        }
        acc = &acc * &lz;
    }
    Ok(Membership::Unknown)
}

/// Least `n <= n_max` with `(num/den)^n` in the monoid.
pub fn root_closure_member(num: &ZPoly, den: &ZPoly, n_max: u32) -> Result<Membership> {
    if den.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if num.is_zero() {
        return Err(Error::domain("0 is not in the quotient group"));
    }
    let Some(q) = num.div_exact(den) else {
        return Ok(Membership::Never);
    };
    let signs: Vec<_> = sample_points()
        .into_iter()
        .filter(|t| t.is_positive())
        .map(|t| q.eval_rational(&t))
        .collect();
    if signs.iter().any(Zero::is_zero)
        || (signs.iter().any(Signed::is_positive) && signs.iter().any(Signed::is_negative))
    {
        return Ok(Membership::Never);
    }
    let mut acc = q.clone();
    for n in 1..=n_max {
        if acc.is_nonneg()? {
            return Ok(Membership::Member(n));
        }
        acc = &acc * &q;
    }
    Ok(Membership::Unknown)
}

/// `lambda` divides `f` in `Z[x]`, for an atom `lambda` of `E`.
pub fn p_lambda_member(f: &NNPoly, lambda: &ZPoly) -> Result<bool> {
    if !is_atom_z(lambda)? || in_e(lambda, DEFAULT_E_DEGREE_BOUND)?.is_none() {
        return Err(Error::domain(format!(
            "{lambda} is not shown to be an atom of E"
        )));
    }
    Ok(f.to_z().div_exact(lambda).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nn(s: &str) -> NNPoly {
        s.parse().unwrap()
    }

    fn zp(s: &str) -> ZPoly {
        s.parse().unwrap()
    }

    #[test]
    fn prime_elements() {
        assert!(is_prime_element(&nn("x")).unwrap());
        assert!(is_prime_element(&nn("7")).unwrap());
        assert!(!is_prime_element(&nn("6")).unwrap());
        assert!(!is_prime_element(&nn("x+1")).unwrap());
        assert!(!is_prime_element(&nn("x^2")).unwrap());
        assert_eq!(is_prime_element(&NNPoly::one()), Err(Error::Unit));
    }

    #[test]
    fn lemma3_examples() {
        let l = lemma3(&[nn("x+1")]).unwrap();
        assert_eq!(l.z, zp("8x^2-3x+6"));
        assert_eq!((l.p, l.q), (BigUint::from(3u8), BigUint::from(2u8)));
        assert_eq!(&nn("x+1").to_z() * &l.z, zp("8x^3+5x^2+3x+6"));
        let l = lemma3(&[nn("x+1"), nn("x+2")]).unwrap();
        assert_eq!(l.z, zp("9x^2-2x+6"));
        assert_eq!(&nn("x+2").to_z() * &l.z, zp("9x^3+16x^2+2x+12"));
        assert!(lemma3(&[nn("x")]).is_err());
        assert!(lemma3(&[nn("x^2+2x+1")]).is_err());
        assert!(lemma3(&[]).is_err());
    }

    #[test]
    fn witnesses() {
        let w = non_primality_witness(&nn("x+1")).unwrap();
        assert_eq!(w.h, nn("x+2"));
        assert_eq!(w.z, zp("9x^2-2x+6"));
        assert!(w.verify() && w.g_has_no_prime_divisor());
        for f in ["x^2+10x+3", "x^3+1", "x^4+x^2+1"] {
            let w = non_primality_witness(&nn(f)).unwrap();
            assert!(w.verify() && w.g_has_no_prime_divisor(), "{f}");
        }
        assert!(non_primality_witness(&nn("x")).is_err());
        assert!(non_primality_witness(&nn("x^2+2x+1")).is_err());
    }

    #[test]
    fn ideal_classification() {
        let gens = |v: &[&str]| IdealGens::new(v.iter().map(|s| nn(s)));
        assert_eq!(
            fg_prime_ideal_classify(&gens(&["2", "3", "x"])).unwrap(),
            IdealClass::Prime
        );
        assert_eq!(
            fg_prime_ideal_classify(&gens(&["x+1"])).unwrap(),
            IdealClass::NotPrime
        );
        assert_eq!(
            fg_prime_ideal_classify(&gens(&[])).unwrap(),
            IdealClass::Prime
        );
        assert_eq!(
            fg_prime_ideal_classify(&gens(&["6"])).unwrap(),
            IdealClass::NotPrime
        );
        assert_eq!(
            fg_prime_ideal_classify(&gens(&["1"])).unwrap(),
            IdealClass::NotPrime
        );
        // (2, 4) = (2)
        assert_eq!(gens(&["4", "2"]).generators(), &[nn("2")]);
    }

    #[test]
    fn ideal_membership() {
        let i = IdealGens::new([nn("x+1")]);
        assert!(ideal_member(&nn("x^5+x^4+x^3+x^2+x+1"), &i));
        assert!(!ideal_member(&nn("x^3+1"), &i));
        assert!(ideal_member(&nn("x+1"), &i));
    }

    #[test]
    fn families() {
        let f = nn("2x^2+1");
        let two = BigUint::from(2u8);
        assert!(!prime_ideal_family_member(&f, &PrimeIdealFamily::ConstDivP(two.clone())).unwrap());
        assert!(prime_ideal_family_member(&f, &PrimeIdealFamily::LeadDivP(two)).unwrap());
        assert!(!prime_ideal_family_member(&NNPoly::one(), &PrimeIdealFamily::Nonunit).unwrap());
        assert!(prime_ideal_family_member(&nn("x+3"), &PrimeIdealFamily::ConstNe1).unwrap());
        assert!(!prime_ideal_family_member(&nn("x+3"), &PrimeIdealFamily::LeadNe1).unwrap());
        assert!(prime_ideal_family_member(&nn("x^2+x"), &PrimeIdealFamily::Nonunit).is_err());
        assert!(prime_ideal_family_member(&nn("2x+2"), &PrimeIdealFamily::Nonunit).is_err());
        assert!(
            prime_ideal_family_member(&f, &PrimeIdealFamily::ConstDivP(BigUint::from(4u8)))
                .is_err()
        );
        for s in [
            "const_ne_1",
            "lead_ne_1",
            "const_div_p:3",
            "lead_div_p:5",
            "nonunit",
        ] {
            assert_eq!(s.parse::<PrimeIdealFamily>().unwrap().to_string(), s);
        }
        assert!("const_div_p:4".parse::<PrimeIdealFamily>().is_err());
        assert!("nope".parse::<PrimeIdealFamily>().is_err());
    }

    #[test]
    fn valuation_maps() {
        let v = valuations(&nn("4x^3+9")).unwrap();
        assert_eq!(v.v0p, BTreeMap::from([(BigUint::from(3u8), 2)]));
        assert_eq!(v.lp, BTreeMap::from([(BigUint::from(2u8), 2)]));
        assert_eq!(v.delta, 3);
        assert_eq!(valuations(&NNPoly::one()).unwrap(), Valuations::default());
        let (f, g) = (nn("x+2"), nn("2x+1"));
        assert_eq!(
            valuations(&(&f * &g)).unwrap(),
            &valuations(&f).unwrap() + &valuations(&g).unwrap()
        );
        assert!(valuations(&nn("x")).is_err());
    }

    #[test]
    fn e_membership() {
        assert_eq!(in_e(&zp("x^2-x+1"), 1).unwrap(), Some(zp("x+1")));
        assert_eq!(in_e(&zp("x^2-x+1"), 0).unwrap(), None);
        assert_eq!(in_e(&zp("3x^2+2"), 0).unwrap(), Some(zp("1")));
        assert_eq!(in_e(&zp("-x-1"), 0).unwrap(), Some(zp("-1")));
        assert_eq!(in_e(&zp("x-1"), 6).unwrap(), None);
        assert_eq!(in_e(&ZPoly::zero(), 3), Err(Error::ZeroPolynomial));
        let c = in_e(&zp("x^2-2x+2"), 6).unwrap().unwrap();
        assert!((&zp("x^2-2x+2") * &c).is_nonneg().unwrap());
    }

    #[test]
    fn a_lambda() {
        let l = nn("x+2");
        assert_eq!(
            a_lambda_member(&zp("x^2-x+1"), &l, 12).unwrap(),
            Membership::Member(2)
        );
        assert_eq!(
            a_lambda_member(&zp("x^2+3"), &l, 12).unwrap(),
            Membership::Member(0)
        );
        assert_eq!(
            a_lambda_member(&zp("x-1"), &l, 12).unwrap(),
            Membership::Never
        );
        assert_eq!(
            a_lambda_member(&zp("x^2-x+1"), &l, 1).unwrap(),
            Membership::Unknown
        );
        assert!(a_lambda_member(&zp("x"), &nn("x^4+x^2+1"), 3).is_err());
        assert!(a_lambda_member(&ZPoly::zero(), &l, 3).is_err());
    }

    #[test]
    fn b_set() {
        assert!(b_set_member(&nn("x^3+2")).unwrap());
        assert!(!b_set_member(&nn("x^4+x^2+1")).unwrap());
        assert!(!b_set_member(&NNPoly::one()).unwrap());
        assert!(!b_set_member(&nn("2x+2")).unwrap());
        assert!(b_set_member(&nn("5")).unwrap());
    }

    #[test]
    fn root_closure() {
        let w = zp("x^4+2x^3-x^2+4x+2");
        assert_eq!(
            root_closure_member(&w, &ZPoly::one(), 8).unwrap(),
            Membership::Member(2)
        );
        assert_eq!(
            root_closure_member(&zp("x^2-1"), &zp("x+1"), 8).unwrap(),
            Membership::Never
        );
        assert_eq!(
            root_closure_member(&zp("x^2+1"), &zp("x+1"), 8).unwrap(),
            Membership::Never
        );
        assert_eq!(
            root_closure_member(&w, &w, 8).unwrap(),
            Membership::Member(1)
        );
        assert_eq!(
            root_closure_member(&w, &ZPoly::one(), 1).unwrap(),
            Membership::Unknown
        );
        assert!(root_closure_member(&w, &ZPoly::zero(), 8).is_err());
    }

    #[test]
    fn p_lambda() {
        let l = zp("x^2-x+1");
        assert!(p_lambda_member(&nn("x^3+1"), &l).unwrap());
        assert!(!p_lambda_member(&nn("x+1"), &l).unwrap());
        assert!(p_lambda_member(&nn("x^2+2x+1"), &zp("x+1")).unwrap());
        assert!(p_lambda_member(&nn("x+1"), &zp("x-1")).is_err());
        assert!(p_lambda_member(&nn("x+1"), &zp("x^2-1")).is_err());
    }
}
