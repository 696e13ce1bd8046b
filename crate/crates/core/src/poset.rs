//! Finite posets with disjoint unions and products, isomorphism testing and
//! automorphism counting; and the failure of unique product decomposition that
//! mirrors `(x^3+1)(x^2+x+1) = (x+1)(x^4+x^2+1)`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::NNPoly;

/// Largest poset the isomorphism search accepts by default.
pub const DEFAULT_ISO_CAP: usize = 256;

/// Largest poset built from a polynomial.
pub const MAX_POLY_POSET: usize = 4096;

/// Elements are `0..size`; `leq[i][j]` holds when `i <= j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PosetJson", into = "PosetJson")]
pub struct FinPoset {
    leq: Vec<Vec<bool>>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    size: usize,
    covers: Vec<[usize; 2]>,
}

impl TryFrom<PosetJson> for FinPoset {
    type Error = Error;

    fn try_from(j: PosetJson) -> Result<Self> {
        let covers: Vec<_> = j.covers.iter().map(|&[a, b]| (a, b)).collect();
        FinPoset::from_covers(j.size, &covers)
    }
}

impl From<FinPoset> for PosetJson {
    fn from(p: FinPoset) -> Self {
        PosetJson {
            size: p.size(),
            covers: p.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl FinPoset {
    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn from_relation(leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = leq.len();
        if leq.iter().any(|row| row.len() != n) {
            return Err(Error::domain("relation matrix is not square"));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::domain(format!("relation is not reflexive at {i}")));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::domain(format!("{i} and {j} violate antisymmetry")));
                }
                if leq[i][j] && (0..n).any(|k| leq[j][k] && !leq[i][k]) {
                    return Err(Error::domain(format!(
                        "relation is not transitive at {i} <= {j}"
                    )));
                }
            }
        }
        Ok(FinPoset { leq })
    }

    /// The reflexive-transitive closure of the given pairs `a < b`.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![vec![false; size]; size];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in covers {
            if a >= size || b >= size {
                return Err(Error::domain(format!(
                    "pair ({a}, {b}) out of range for size {size}"
                )));
            }
            leq[a][b] = true;
        }
        #[allow(clippy::needless_range_loop)]
        for k in 0..size {
            for i in 0..size {
                if leq[i][k] {
                    for j in 0..size {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        FinPoset::from_relation(leq)
    }

    pub fn singleton() -> Self {
        FinPoset {
            leq: vec![vec![true]],
        }
    }

    pub fn size(&self) -> usize {
        self.leq.len()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Pairs `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && self.leq[a][b]
                    && !(0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b])
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.size();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (w, s) in seen.iter_mut().enumerate() {
                if !*s && (self.leq[v][w] || self.leq[w][v]) {
                    *s = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Applies a relabelling `i -> perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.size();
        let mut check = perm.to_vec();
        check.sort_unstable();
        if check != (0..n).collect::<Vec<_>>() {
            return Err(Error::domain("not a permutation of the elements"));
        }
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                leq[perm[i]][perm[j]] = self.leq[i][j];
            }
        }
        Ok(FinPoset { leq })
    }
}

/// The two-element chain `0 < 1`.
pub fn chain_l() -> FinPoset {
    FinPoset {
        leq: vec![vec![true, true], vec![false, true]],
    }
}

/// `P^n`; `P^0` is the singleton.
pub fn power(p: &FinPoset, n: u32) -> FinPoset {
    (0..n).fold(FinPoset::singleton(), |acc, _| product(&acc, p))
}

/// Disjoint union.
pub fn coproduct(parts: &[FinPoset]) -> FinPoset {
    let n: usize = parts.iter().map(FinPoset::size).sum();
    let mut leq = vec![vec![false; n]; n];
    let mut off = 0;
    for p in parts {
        for i in 0..p.size() {
            for j in 0..p.size() {
                leq[off + i][off + j] = p.leq[i][j];
            }
        }
        off += p.size();
    }
    FinPoset { leq }
}

/// Componentwise order on pairs; `(a, b)` is element `a * |Q| + b`.
pub fn product(p: &FinPoset, q: &FinPoset) -> FinPoset {
    let (n, m) = (p.size(), q.size());
    let mut leq = vec![vec![false; n * m]; n * m];
    for a in 0..n {
        for b in 0..m {
            for c in 0..n {
                for d in 0..m {
                    leq[a * m + b][c * m + d] = p.leq[a][c] && q.leq[b][d];
                }
            }
        }
    }
    FinPoset { leq }
}

/// `sum c_n L^n`, read as a disjoint union with `c_n` copies of `L^n`.
pub fn poset_from_polynomial(f: &NNPoly) -> Result<FinPoset> {
    let size = f.eval(&BigUint::from(2u8));
    if size > BigUint::from(MAX_POLY_POSET) {
        return Err(Error::resource(format!(
            "poset for {f} would have {size} elements (cap {MAX_POLY_POSET})"
        )));
    }
    let l = chain_l();
    let mut parts = Vec::new();
    for (n, c) in f.coeffs().iter().enumerate() {
        let c = usize::try_from(c).expect("bounded by the size cap");
        let block = power(&l, n as u32);
        parts.extend(std::iter::repeat_n(block, c));
    }
    Ok(coproduct(&parts))
}

/// Colour refinement run jointly on several posets so that colours compare
/// across them.
fn refine(posets: &[&FinPoset]) -> Vec<Vec<usize>> {
    let heights = |p: &FinPoset, down: bool| -> Vec<usize> {
        let n = p.size();
        let mut order: Vec<usize> = (0..n).collect();
        let count = |i: usize| {
            (0..n)
                .filter(|&j| if down { p.leq[j][i] } else { p.leq[i][j] })
                .count()
        };
        order.sort_by_key(|&i| count(i));
        let mut h = vec![0; n];
        for &i in &order {
            for j in 0..n {
                let below = if down { p.leq[j][i] } else { p.leq[i][j] };
                if j != i && below {
                    h[i] = h[i].max(h[j] + 1);
                }
            }
        }
        h
    };
    let mut sigs: Vec<Vec<Vec<usize>>> = Vec::new();
    for p in posets {
        let n = p.size();
        let (hd, hu) = (heights(p, true), heights(p, false));
        sigs.push(
            (0..n)
                .map(|i| {
                    let down = (0..n).filter(|&j| p.leq[j][i]).count();
                    let up = (0..n).filter(|&j| p.leq[i][j]).count();
                    vec![down, up, hd[i], hu[i]]
                })
                .collect(),
        );
    }
    let mut classes = 0;
    loop {
        let ids: BTreeMap<&Vec<usize>, usize> = sigs
            .iter()
            .flatten()
            .map(|s| (s, 0))
            .collect::<BTreeMap<_, _>>()
            .into_keys()
            .enumerate()
            .map(|(k, s)| (s, k))
            .collect();
        let colours: Vec<Vec<usize>> = sigs
            .iter()
            .map(|ss| ss.iter().map(|s| ids[s]).collect())
            .collect();
        if ids.len() == classes {
            return colours;
        }
        classes = ids.len();
        sigs = posets
            .iter()
            .zip(&colours)
            .map(|(p, col)| {
                let n = p.size();
                (0..n)
                    .map(|i| {
                        let mut below: Vec<usize> = (0..n)
                            .filter(|&j| j != i && p.leq[j][i])
                            .map(|j| col[j])
                            .collect();
                        let mut above: Vec<usize> = (0..n)
                            .filter(|&j| j != i && p.leq[i][j])
                            .map(|j| col[j])
                            .collect();
                        below.sort_unstable();
                        above.sort_unstable();
                        let mut s = vec![col[i], usize::MAX];
                        s.extend(below);
                        s.push(usize::MAX);
                        s.extend(above);
                        s
                    })
                    .collect()
            })
            .collect();
    }
}

struct Matcher<'a> {
    p: &'a FinPoset,
    q: &'a FinPoset,
    cp: Vec<usize>,
    cq: Vec<usize>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    limit: u128,
    found: u128,
}

impl Matcher<'_> {
    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            let mu = self.map[u];
            self.p.leq[u][v] == self.q.leq[mu][w] && self.p.leq[v][u] == self.q.leq[w][mu]
        })
    }

    fn search(&mut self, depth: usize) {
        if self.found >= self.limit {
            return;
        }
        if depth == self.order.len() {
            self.found += 1;
            return;
        }
        let v = self.order[depth];
        for w in 0..self.q.size() {
            if self.used[w] || self.cq[w] != self.cp[v] || !self.consistent(depth, v, w) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            self.search(depth + 1);
            self.used[w] = false;
            if self.found >= self.limit {
                return;
            }
        }
    }
}

/// Number of isomorphisms `p -> q`, stopping once `limit` are found.
fn count_isomorphisms(p: &FinPoset, q: &FinPoset, limit: u128, cap: usize) -> Result<u128> {
    for s in [p.size(), q.size()] {
        if s > cap {
            return Err(Error::resource(format!(
                "poset of size {s} exceeds the cap {cap}"
            )));
        }
    }
    if p.size() != q.size() {
        return Ok(0);
    }
    let colours = refine(&[p, q]);
    let (cp, cq) = (colours[0].clone(), colours[1].clone());
    let histogram = |c: &[usize]| {
        let mut h = c.to_vec();
        h.sort_unstable();
        h
    };
    if histogram(&cp) != histogram(&cq) {
        return Ok(0);
    }
    let mut class_size = BTreeMap::new();
    for &c in &cp {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    // small classes first, then grow along comparabilities to prune early
    let n = p.size();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let linked = order
                    .iter()
                    .filter(|&&u| p.leq[u][v] || p.leq[v][u])
                    .count();
                (class_size[&cp[v]], std::cmp::Reverse(linked), v)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut m = Matcher {
        p,
        q,
        cp,
        cq,
        order,
        map: vec![0; n],
        used: vec![false; n],
        limit,
        found: 0,
    };
    m.search(0);
    Ok(m.found)
}

pub fn is_isomorphic(p: &FinPoset, q: &FinPoset) -> Result<bool> {
    is_isomorphic_with_cap(p, q, DEFAULT_ISO_CAP)
}

pub fn is_isomorphic_with_cap(p: &FinPoset, q: &FinPoset, cap: usize) -> Result<bool> {
    Ok(count_isomorphisms(p, q, 1, cap)? == 1)
}

pub fn aut_count(p: &FinPoset) -> Result<u128> {
    aut_count_with_cap(p, DEFAULT_ISO_CAP)
}

pub fn aut_count_with_cap(p: &FinPoset, cap: usize) -> Result<u128> {
    count_isomorphisms(p, p, u128::MAX, cap)
}

/// One factor of either side of the demo.
#[derive(Clone, Debug, Serialize)]
pub struct KsFactor {
    pub name: String,
    pub polynomial: NNPoly,
    pub size: usize,
    pub connected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KsPairCheck {
    pub left: String,
    pub right: String,
    pub isomorphic: bool,
}

/// Both decompositions of the 63-element poset and the checks run on them.
#[derive(Clone, Debug, Serialize)]
pub struct KsReport {
    pub left: [KsFactor; 2],
    pub right: [KsFactor; 2],
    pub left_product_size: usize,
    pub right_product_size: usize,
    pub products_isomorphic: bool,
    pub factor_pairs: Vec<KsPairCheck>,
    /// `(x^3+1)(x^2+x+1) = (x+1)(x^4+x^2+1)` holds coefficientwise.
    pub polynomial_identity_holds: bool,
    /// Each factor has as many elements as its polynomial has value at 2.
    pub sizes_match_evaluation: bool,
    /// Not decided here; the factors are indecomposable by the monoid argument.
    pub indecomposability: &'static str,
}

impl KsReport {
    pub fn factor_pairs_isomorphic(&self) -> Vec<bool> {
        self.factor_pairs.iter().map(|c| c.isomorphic).collect()
    }

    pub fn holds(&self) -> bool {
        self.products_isomorphic
            && self.factor_pairs.iter().all(|c| !c.isomorphic)
            && self.polynomial_identity_holds
            && self.sizes_match_evaluation
            && self.left_product_size == self.right_product_size
    }
}

pub fn ks_counterexample_report() -> Result<KsReport> {
    let specs = [
        ("L^3+1", "x^3+1"),
        ("L^2+L+1", "x^2+x+1"),
        ("L+1", "x+1"),
        ("L^4+L^2+1", "x^4+x^2+1"),
    ];
    let mut polys = Vec::new();
    let mut posets = Vec::new();
    let mut factors = Vec::new();
    for (name, poly) in specs {
        let f: NNPoly = poly.parse()?;
        let p = poset_from_polynomial(&f)?;
        factors.push(KsFactor {
            name: name.to_string(),
            polynomial: f.clone(),
            size: p.size(),
            connected: p.is_connected(),
        });
        polys.push(f);
        posets.push(p);
    }
    let left = product(&posets[0], &posets[1]);
    let right = product(&posets[2], &posets[3]);
    let products_isomorphic = is_isomorphic(&left, &right)?;
    let mut factor_pairs = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            factor_pairs.push(KsPairCheck {
                left: factors[i].name.clone(),
                right: factors[j].name.clone(),
                isomorphic: is_isomorphic(&posets[i], &posets[j])?,
            });
        }
    }
    let two = BigUint::from(2u8);
    let sizes_match_evaluation = factors
        .iter()
        .all(|f| f.polynomial.eval(&two) == BigUint::from(f.size))
        && BigUint::from(left.size()) == (&polys[0] * &polys[1]).eval(&two);
    let mut it = factors.into_iter();
    let mut next = || it.next().unwrap();
    Ok(KsReport {
        left: [next(), next()],
        right: [next(), next()],
        left_product_size: left.size(),
        right_product_size: right.size(),
        products_isomorphic,
        factor_pairs,
        polynomial_identity_holds: &polys[0] * &polys[1] == &polys[2] * &polys[3],
        sizes_match_evaluation,
        indecomposability: "asserted via the monoid correspondence, not decided",
    })
}
