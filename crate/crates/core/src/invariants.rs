//! Arithmetic invariants of factorizations: lengths, elasticity, the set of
//! distances, the distance between factorizations and the catenary degree; plus
//! ordered factorizations and their chains of principal ideals.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nnfactor::{divides_n, nn_divisors, quotient_n, Factorization, Factorizer};
use crate::poly::{NNPoly, ZPoly};

/// Default cap on `|Z(f)|` for the catenary degree.
pub const DEFAULT_MAX_FACTORIZATIONS: usize = 10_000;

/// Cap on enumerated ordered factorizations and chains.
pub const MAX_ORDERED: usize = 200_000;

/// The lengths of a set of factorizations.
pub fn lengths_of<'a>(z: impl IntoIterator<Item = &'a Factorization>) -> BTreeSet<usize> {
    z.into_iter().map(Factorization::len).collect()
}

/// `L(f)`.
pub fn lengths(f: &NNPoly) -> Result<BTreeSet<usize>> {
    Ok(lengths_of(&Factorizer::default().atom_factorizations(f)?))
}

fn elasticity_of(l: &BTreeSet<usize>) -> Ratio<usize> {
    let lo = *l.first().expect("non-empty length set");
    let hi = *l.last().expect("non-empty length set");
    Ratio::new(hi, lo)
}

/// `max L(f) / min L(f)` as a reduced fraction.
pub fn elasticity(f: &NNPoly) -> Result<Ratio<usize>> {
    Ok(elasticity_of(&lengths(f)?))
}

fn delta_of(l: &BTreeSet<usize>) -> BTreeSet<usize> {
    l.iter().zip(l.iter().skip(1)).map(|(a, b)| b - a).collect()
}

/// Gaps between consecutive lengths.
pub fn delta_set(f: &NNPoly) -> Result<BTreeSet<usize>> {
    Ok(delta_of(&lengths(f)?))
}

/// Size of the multiset intersection of two sorted factor lists.
fn common_len(a: &[NNPoly], b: &[NNPoly]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Distance without checking that both factor the same element.
fn distance_unchecked(z1: &Factorization, z2: &Factorization) -> usize {
    let u = common_len(z1.factors(), z2.factors());
    (z1.len() - u).max(z2.len() - u)
}

/// `d(z1, z2)`: cancel the common part, take the longer remainder.
pub fn distance(z1: &Factorization, z2: &Factorization) -> Result<usize> {
    if z1.product() != z2.product() {
        return Err(Error::domain("factorizations of different elements"));
    }
    Ok(distance_unchecked(z1, z2))
}

/// Catenary degree of a factorization set: the largest edge of a minimum
/// bottleneck spanning tree of the complete distance graph (Prim).
pub fn catenary_of(z: &[Factorization], max_factorizations: usize) -> Result<usize> {
    if z.len() > max_factorizations {
        return Err(Error::resource(format!(
            "{} factorizations exceed the catenary cap {max_factorizations}",
            z.len()
        )));
    }
    if z.len() <= 1 {
        return Ok(0);
    }
    let n = z.len();
    let mut in_tree = vec![false; n];
    let mut best = vec![usize::MAX; n];
    best[0] = 0;
    let mut bottleneck = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&i| !in_tree[i])
            .min_by_key(|&i| (best[i], i))
            .unwrap();
        in_tree[v] = true;
        bottleneck = bottleneck.max(best[v]);
        for w in 0..n {
            if !in_tree[w] {
                best[w] = best[w].min(distance_unchecked(&z[v], &z[w]));
            }
        }
    }
    Ok(bottleneck)
}

/// `c(f)`.
pub fn catenary_degree(f: &NNPoly) -> Result<usize> {
    let z: Vec<_> = Factorizer::default()
        .atom_factorizations(f)?
        .into_iter()
        .collect();
    catenary_of(&z, DEFAULT_MAX_FACTORIZATIONS)
}

/// Everything `factor` reports about one element.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub factorizations: Vec<Factorization>,
    pub lengths: BTreeSet<usize>,
    #[serde(serialize_with = "ser_ratio")]
    pub elasticity: Ratio<usize>,
    pub delta_set: BTreeSet<usize>,
    pub catenary_degree: usize,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::json::RationalJson::new(r.numer(), r.denom()).serialize(s)
}

impl InvariantReport {
    pub fn compute(f: &NNPoly, factorizer: &Factorizer, max_factorizations: usize) -> Result<Self> {
        let factorizations: Vec<_> = factorizer.atom_factorizations(f)?.into_iter().collect();
        let lengths = lengths_of(&factorizations);
        Ok(InvariantReport {
            elasticity: elasticity_of(&lengths),
            delta_set: delta_of(&lengths),
            catenary_degree: catenary_of(&factorizations, max_factorizations)?,
            lengths,
            factorizations,
        })
    }
}

/// `(x+n)^n (x^2-x+1)`, an atom of the monoid for every `n >= 1`.
pub fn g_atom_block(n: u32) -> Result<NNPoly> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    let xn = ZPoly::from_i64s(&[i64::from(n), 1]).pow(n);
    (&xn * &ZPoly::from_i64s(&[1, -1, 1]))
        .to_nn()
        .ok_or_else(|| Error::domain(format!("(x+{n})^{n}(x^2-x+1) has a negative coefficient")))
}

/// `g_{n,k} = (x+n)^n (x^2-x+1) (x+1)^k`.
pub fn g_polynomial(n: u32, k: u32) -> Result<NNPoly> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    Ok(&g_atom_block(n)? * &NNPoly::x_plus(1).pow(k))
}

/// All ordered tuples of non-units with product `f`.
pub fn ordered_factorizations(f: &NNPoly) -> Result<BTreeSet<Vec<NNPoly>>> {
    if f.is_one() {
        return Err(Error::Unit);
    }
    let divs = nn_divisors(f)?;
    let mut memo = BTreeMap::new();
    let mut count = 0;
    let set = ordered_rec(f, &divs, &mut memo, &mut count)?;
    Ok(set.iter().cloned().collect())
}

fn ordered_rec(
    f: &NNPoly,
    divs: &[NNPoly],
    memo: &mut BTreeMap<NNPoly, Vec<Vec<NNPoly>>>,
    count: &mut usize,
) -> Result<Vec<Vec<NNPoly>>> {
    if let Some(v) = memo.get(f) {
        return Ok(v.clone());
    }
    let mut out = vec![vec![f.clone()]];
    for d in divs {
        if d.is_one() || d == f {
            continue;
        }
        let Some(q) = quotient_n(f, d) else {
            continue;
        };
        for tail in ordered_rec(&q, divs, memo, count)? {
            let mut t = Vec::with_capacity(tail.len() + 1);
            t.push(d.clone());
            t.extend(tail);
            out.push(t);
            *count += 1;
            if *count > MAX_ORDERED {
                return Err(Error::resource("too many ordered factorizations"));
            }
        }
    }
    memo.insert(f.clone(), out.clone());
    Ok(out)
}

/// A strictly ascending chain of principal ideals from `(f)` to the whole monoid,
/// recorded by generators `f = c_0, c_1, ..., c_n = 1` with `c_{i+1} | c_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ChainOfIdeals {
    pub generators: Vec<NNPoly>,
}

impl ChainOfIdeals {
    /// `(a_1, ..., a_n)` maps to generators `a_1...a_n, a_1...a_{n-1}, ..., a_1, 1`.
    pub fn from_tuple(tuple: &[NNPoly]) -> Self {
        let mut prefix = Vec::with_capacity(tuple.len() + 1);
        let mut acc = NNPoly::one();
        prefix.push(acc.clone());
        for a in tuple {
            acc = &acc * a;
            prefix.push(acc.clone());
        }
        prefix.reverse();
        ChainOfIdeals { generators: prefix }
    }

    pub fn len(&self) -> usize {
        self.generators.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// All chains from `(f)` up to the monoid, found by walking the divisor poset.
pub fn chains(f: &NNPoly) -> Result<BTreeSet<ChainOfIdeals>> {
    if f.is_one() {
        return Err(Error::Unit);
    }
    let divs = nn_divisors(f)?;
    // strict divisibility DAG restricted to the divisors of f
    let below: Vec<Vec<usize>> = divs
        .iter()
        .map(|c| {
            (0..divs.len())
                .filter(|&j| divs[j] != *c && divides_n(&divs[j], c))
                .collect()
        })
        .collect();
    let top = divs.iter().position(|d| d == f).expect("f divides itself");
    let one = divs.iter().position(NNPoly::is_one).expect("1 divides f");
    let mut out = BTreeSet::new();
    let mut path = vec![top];
    walk(&below, one, &mut path, &divs, &mut out)?;
    Ok(out)
}

fn walk(
    below: &[Vec<usize>],
    one: usize,
    path: &mut Vec<usize>,
    divs: &[NNPoly],
    out: &mut BTreeSet<ChainOfIdeals>,
) -> Result<()> {
    let cur = *path.last().unwrap();
    if cur == one {
        if out.len() >= MAX_ORDERED {
            return Err(Error::resource("too many chains"));
        }
        out.insert(ChainOfIdeals {
            generators: path.iter().map(|&i| divs[i].clone()).collect(),
        });
        return Ok(());
    }
    for &next in &below[cur] {
        path.push(next);
        walk(below, one, path, divs, out)?;
        path.pop();
    }
    Ok(())
}

/// Outcome of checking the tuple-to-chain correspondence on one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainBijection {
    pub ordered_factorizations: usize,
    pub chains: usize,
    pub injective: bool,
    pub images_are_chains: bool,
}

impl ChainBijection {
    pub fn holds(&self) -> bool {
        self.injective && self.images_are_chains && self.ordered_factorizations == self.chains
    }
}

pub fn verify_chain_bijection(f: &NNPoly) -> Result<ChainBijection> {
    let tuples = ordered_factorizations(f)?;
    let all_chains = chains(f)?;
    let images: BTreeSet<ChainOfIdeals> = tuples
        .iter()
        .map(|t| ChainOfIdeals::from_tuple(t))
        .collect();
    Ok(ChainBijection {
        ordered_factorizations: tuples.len(),
        chains: all_chains.len(),
        injective: images.len() == tuples.len(),
        images_are_chains: images.is_subset(&all_chains),
    })
}

/// One ideal `I_k = (x+1, ..., x+k)` of the non-stationary chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealChainStep {
    pub generators: Vec<NNPoly>,
    /// For `k >= 2`: `x+k` lies outside `I_{k-1}`, so the inclusion is strict.
    pub strict_over_previous: Option<bool>,
}

/// The first `n` ideals of `I_1 ⊊ I_2 ⊊ ...`.
pub fn nonstationary_ideal_chain(n: usize) -> Result<Vec<IdealChainStep>> {
    if n == 0 {
        return Err(Error::domain("need at least one ideal"));
    }
    let mut steps: Vec<IdealChainStep> = Vec::with_capacity(n);
    for k in 1..=n {
        let new = NNPoly::x_plus(k as u64);
        let strict = (k >= 2).then(|| !steps[k - 2].generators.iter().any(|g| divides_n(g, &new)));
        let mut generators = steps
            .last()
            .map(|s| s.generators.clone())
            .unwrap_or_default();
        generators.push(new);
        steps.push(IdealChainStep {
            generators,
            strict_over_previous: strict,
        });
    }
    Ok(steps)
}
