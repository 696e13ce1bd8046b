//! Exact Fourier-Motzkin elimination for systems `a . x >= b` with integer data.
//!
//! Combining two integer inequalities with positive integer multipliers keeps the
//! data integral, so elimination runs over `BigInt`; only back-substitution needs
//! rationals.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Ineq {
    pub a: Vec<BigInt>,
    pub b: BigInt,
}

enum Normalized {
    Keep(Ineq),
    Trivial,
    Infeasible,
}

fn normalize(mut c: Ineq) -> Normalized {
    let g = c.a.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if g.is_zero() {
        return if c.b.is_positive() {
            Normalized::Infeasible
        } else {
            Normalized::Trivial
        };
    }
    let g = g.gcd(&c.b);
    if g > BigInt::from(1) {
        for v in &mut c.a {
            *v /= &g;
        }
        c.b /= &g;
    }
    Normalized::Keep(c)
}

/// A rational point satisfying every constraint, or `None` if the system is
/// infeasible. Fails with a resource error once an elimination step produces more
/// than `max_constraints` inequalities.
pub(crate) fn feasible_point(
    constraints: Vec<Ineq>,
    nvars: usize,
    max_constraints: usize,
) -> Result<Option<Vec<BigRational>>> {
    assert!(nvars >= 1);
    let mut top = BTreeSet::new();
    for c in constraints {
        debug_assert_eq!(c.a.len(), nvars);
        match normalize(c) {
            Normalized::Keep(c) => {
                top.insert(c);
            }
            Normalized::Trivial => {}
            Normalized::Infeasible => return Ok(None),
        }
    }
    // systems[j] involves only the variables 0..=j
    let mut systems = vec![BTreeSet::new(); nvars];
    systems[nvars - 1] = top;
    for j in (1..nvars).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), BTreeSet::new());
        for c in &systems[j] {
            if c.a[j].is_positive() {
                pos.push(c);
            } else if c.a[j].is_negative() {
                neg.push(c);
            } else {
                rest.insert(c.clone());
            }
        }
        for p in &pos {
            for n in &neg {
                let (mp, mn) = (-&n.a[j], p.a[j].clone());
                let a =
                    p.a.iter()
                        .zip(&n.a)
                        .map(|(x, y)| x * &mp + y * &mn)
                        .collect();
                let b = &p.b * &mp + &n.b * &mn;
                match normalize(Ineq { a, b }) {
                    Normalized::Keep(c) => {
                        rest.insert(c);
                    }
                    Normalized::Trivial => {}
                    Normalized::Infeasible => return Ok(None),
                }
                if rest.len() > max_constraints {
                    return Err(Error::resource(format!(
                        "elimination exceeded {max_constraints} constraints"
                    )));
                }
            }
        }
        systems[j - 1] = rest;
    }

    let mut values: Vec<BigRational> = Vec::with_capacity(nvars);
    for (j, system) in systems.iter().enumerate() {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for c in system {
            if c.a[j].is_zero() {
                continue;
            }
            let mut rhs = BigRational::from_integer(c.b.clone());
            for (i, v) in values.iter().enumerate() {
                rhs -= v * BigRational::from_integer(c.a[i].clone());
            }
            let bound = rhs / BigRational::from_integer(c.a[j].clone());
            if c.a[j].is_positive() {
                if lower.as_ref().is_none_or(|l| &bound > l) {
                    lower = Some(bound);
                }
            } else if upper.as_ref().is_none_or(|u| &bound < u) {
                upper = Some(bound);
            }
        }
        if let (Some(l), Some(u)) = (&lower, &upper) {
            if l > u {
                debug_assert_eq!(j, 0, "projection guarantees extension");
                return Ok(None);
            }
        }
        values.push(lower.or(upper).unwrap_or_else(BigRational::zero));
    }
    Ok(Some(values))
}
