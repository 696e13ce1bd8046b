//! The golden vectors shipped with the crate and a runner that re-derives each
//! one from scratch.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{g_polynomial, lengths_of, verify_chain_bijection};
use crate::nnfactor::{
    base_a_trace, divides_n, divides_z, Factorization, Factorizer, SplitVerdict,
};
use crate::poly::{NNPoly, ZPoly};
use crate::poset::ks_counterexample_report;
use crate::primes::{prime_ideal_family_member, root_closure_member, Membership, PrimeIdealFamily};

const GOLDEN: &str = include_str!("../data/golden.json");

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct ExceedsBase {
    pub parts: Vec<String>,
    pub product: String,
    pub alpha: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Vector {
    Factorizations {
        poly: String,
        expected: Vec<Vec<String>>,
    },
    BaseTrace {
        poly: String,
        a: String,
        b: String,
        /// Splits whose digit lengths add up to the degree.
        eta_valid: Vec<Vec<String>>,
        accepted: Vec<Vec<String>>,
        /// Splits that must be among those dropped for their digit lengths.
        eta_rejected_include: Vec<Vec<String>>,
        exceeds_base: Vec<ExceedsBase>,
        atom: bool,
    },
    RootWitness {
        poly: String,
        times_x_plus_1: String,
        square: String,
        root_closure_exponent: u32,
    },
    GFamily {
        n: u32,
        k: u32,
        #[serde(default)]
        poly: Option<String>,
        factorizations: usize,
        lengths: Vec<usize>,
    },
    Divisibility {
        g: String,
        f: String,
        divides_n: bool,
        divides_z: bool,
    },
    IdealFamily {
        poly: String,
        family: String,
        member: bool,
    },
    PosetDemo {
        factor_sizes: Vec<usize>,
        product_size: usize,
    },
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct GoldenEntry {
    pub id: String,
    #[serde(flatten)]
    pub vector: Vector,
}

pub fn golden() -> Result<Vec<GoldenEntry>> {
    serde_json::from_str(GOLDEN).map_err(|e| Error::Parse(format!("golden corpus: {e}")))
}

/// Every monoid element the corpus mentions, without repeats.
pub fn corpus_polynomials() -> Result<Vec<NNPoly>> {
    let mut out = BTreeSet::new();
    for e in golden()? {
        let polys: Vec<NNPoly> = match &e.vector {
            Vector::Factorizations { poly, .. } | Vector::BaseTrace { poly, .. } => {
                vec![poly.parse()?]
            }
            Vector::GFamily { n, k, .. } => vec![g_polynomial(*n, *k)?],
            Vector::Divisibility { g, f, .. } => vec![g.parse()?, f.parse()?],
            Vector::IdealFamily { poly, .. } => vec![poly.parse()?],
            Vector::RootWitness {
                times_x_plus_1,
                square,
                ..
            } => {
                vec![times_x_plus_1.parse()?, square.parse()?]
            }
            Vector::PosetDemo { .. } => ["x^3+1", "x^2+x+1", "x+1", "x^4+x^2+1"]
                .iter()
                .map(|s| s.parse())
                .collect::<Result<_>>()?,
        };
        out.extend(polys.into_iter().filter(|p| !p.is_one()));
    }
    Ok(out.into_iter().collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub entries: Vec<EntryResult>,
    /// Chain/ordered-factorization bijection on every corpus polynomial.
    pub chain_bijections: Vec<EntryResult>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.entries
            .iter()
            .chain(&self.chain_bijections)
            .all(|e| e.passed)
    }
}

fn parse_nn(s: &str) -> Result<NNPoly> {
    s.parse()
}

fn sorted_parts(parts: &[BigUint]) -> Vec<String> {
    let mut v = parts.to_vec();
    v.sort();
    v.iter().map(ToString::to_string).collect()
}

fn check(vector: &Vector, factorizer: &Factorizer) -> Result<(bool, String)> {
    Ok(match vector {
        Vector::Factorizations { poly, expected } => {
            let f = parse_nn(poly)?;
            let got = factorizer.atom_factorizations(&f)?;
            let want = expected
                .iter()
                .map(|z| {
                    Ok(Factorization::new(
                        z.iter().map(|s| parse_nn(s)).collect::<Result<_>>()?,
                    ))
                })
                .collect::<Result<BTreeSet<_>>>()?;
            let shown: Vec<String> = got
                .iter()
                .map(|z| {
                    z.factors()
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" * ")
                })
                .collect();
            (got == want, shown.join(" | "))
        }
        Vector::BaseTrace {
            poly,
            a,
            b,
            eta_valid,
            accepted,
            eta_rejected_include,
            exceeds_base,
            atom,
        } => {
            let t = base_a_trace(&parse_nn(poly)?)?;
            let by = |pred: &dyn Fn(&SplitVerdict) -> bool| -> BTreeSet<Vec<String>> {
                t.splits
                    .iter()
                    .filter(|s| pred(&s.verdict))
                    .map(|s| sorted_parts(&s.parts))
                    .collect()
            };
            let acc = by(&|v| *v == SplitVerdict::Accepted);
            let eta = by(&|v| *v == SplitVerdict::EtaMismatch);
            let valid = by(&|v| *v != SplitVerdict::EtaMismatch);
            let over: BTreeSet<(Vec<String>, String, String)> = t
                .splits
                .iter()
                .filter_map(|s| match &s.verdict {
                    SplitVerdict::ExceedsBase { alpha } => Some((
                        sorted_parts(&s.parts),
                        s.product
                            .as_ref()
                            .map(ToString::to_string)
                            .unwrap_or_default(),
                        alpha.to_string(),
                    )),
                    _ => None,
                })
                .collect();
            let want_over: BTreeSet<_> = exceeds_base
                .iter()
                .map(|e| (e.parts.clone(), e.product.clone(), e.alpha.clone()))
                .collect();
            let ok = t.a.to_string() == *a
                && t.b.to_string() == *b
                && acc == accepted.iter().cloned().collect()
                && valid == eta_valid.iter().cloned().collect()
                && eta_rejected_include.iter().all(|s| eta.contains(s))
                && over == want_over
                && t.is_atom() == *atom;
            (
                ok,
                format!(
                    "a={} b={} eta_valid={valid:?} accepted={acc:?} eta_rejected={eta:?} exceeds_base={over:?} atom={}",
                    t.a,
                    t.b,
                    t.is_atom()
                ),
            )
        }
        Vector::RootWitness {
            poly,
            times_x_plus_1,
            square,
            root_closure_exponent,
        } => {
            let f: ZPoly = poly.parse()?;
            let times = &f * &ZPoly::from_i64s(&[1, 1]);
            let sq = &f * &f;
            let r = root_closure_member(&f, &ZPoly::one(), 8)?;
            let ok = !f.is_nonneg()?
                && times.to_string() == *times_x_plus_1
                && sq.to_string() == *square
                && r == Membership::Member(*root_closure_exponent);
            (ok, format!("f(x+1)={times} f^2={sq} root closure {r:?}"))
        }
        Vector::GFamily {
            n,
            k,
            poly,
            factorizations,
            lengths,
        } => {
            let g = g_polynomial(*n, *k)?;
            let z = factorizer.atom_factorizations(&g)?;
            let l = lengths_of(z.iter());
            let ok = poly.as_ref().is_none_or(|p| g.to_string() == *p)
                && z.len() == *factorizations
                && l == lengths.iter().copied().collect();
            (ok, format!("g={g} |Z|={} L={l:?}", z.len()))
        }
        Vector::Divisibility {
            g,
            f,
            divides_n: dn,
            divides_z: dz,
        } => {
            let (g, f) = (parse_nn(g)?, parse_nn(f)?);
            let (n, z) = (divides_n(&g, &f), divides_z(&g, &f));
            (n == *dn && z == *dz, format!("divides_N={n} divides_Z={z}"))
        }
        Vector::IdealFamily {
            poly,
            family,
            member,
        } => {
            let fam: PrimeIdealFamily = family.parse()?;
            let m = prime_ideal_family_member(&parse_nn(poly)?, &fam)?;
            (m == *member, format!("member={m}"))
        }
        Vector::PosetDemo {
            factor_sizes,
            product_size,
        } => {
            let r = ks_counterexample_report()?;
            let sizes: Vec<usize> = r.left.iter().chain(&r.right).map(|f| f.size).collect();
            let ok = r.holds() && sizes == *factor_sizes && r.left_product_size == *product_size;
            (
                ok,
                format!(
                    "sizes={sizes:?} products_isomorphic={} factor_pairs_isomorphic={:?}",
                    r.products_isomorphic,
                    r.factor_pairs_isomorphic()
                ),
            )
        }
    })
}

pub fn run(factorizer: &Factorizer) -> Result<CorpusReport> {
    let mut entries = Vec::new();
    for e in golden()? {
        let (passed, detail) = match check(&e.vector, factorizer) {
            Ok(r) => r,
            Err(err) => (false, format!("error: {err}")),
        };
        entries.push(EntryResult {
            id: e.id,
            passed,
            detail,
        });
    }
    let mut chain_bijections = Vec::new();
    for f in corpus_polynomials()? {
        let (passed, detail) = match verify_chain_bijection(&f) {
            Ok(b) => (
                b.holds(),
                format!(
                    "{} ordered factorizations, {} chains",
                    b.ordered_factorizations, b.chains
                ),
            ),
            Err(err) => (false, format!("error: {err}")),
        };
        chain_bijections.push(EntryResult {
            id: f.to_string(),
            passed,
            detail,
        });
    }
    Ok(CorpusReport {
        entries,
        chain_bijections,
    })
}
