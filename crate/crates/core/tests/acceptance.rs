//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line; the
//! process exits non-zero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nnpoly::corpus::corpus_polynomials;
use nnpoly::invariants::{
    catenary_degree, chains, delta_set, elasticity, g_polynomial, lengths, ordered_factorizations,
    ChainOfIdeals,
};
use nnpoly::nnfactor::{
    base_a_trace, divides_n, divisor_pairs, is_atom, Factorization, Factorizer, SplitVerdict,
};
use nnpoly::poset::{aut_count, chain_l, ks_counterexample_report, power};
use nnpoly::primes::{lemma3, root_closure_member, Membership};
use nnpoly::weyl::{delta_map, prop_m_membership, weyl_apply, weyl_mul, WeylOp};
use nnpoly::zx::{kronecker_factor, psi_coords};
use nnpoly::{NNPoly, ZPoly};

type Outcome = Result<String, String>;
type Criterion<'a> = (
    &'static str,
    Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome + 'a>,
);

fn nn(s: &str) -> NNPoly {
    s.parse().unwrap()
}

fn zp(s: &str) -> ZPoly {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fz(parts: &[&str]) -> Factorization {
    Factorization::new(parts.iter().map(|s| nn(s)).collect())
}

// ---- independent oracles on small machine integers ----

fn conv(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Long division by a polynomial with non-negative integer coefficients; the
/// quotient if it exists and has non-negative integer coefficients.
fn nn_quotient(f: &[i64], g: &[i64]) -> Option<Vec<i64>> {
    let (n, m) = (f.len() - 1, g.len() - 1);
    if m > n {
        return None;
    }
    let lead = g[m];
    let mut r = f.to_vec();
    let mut q = vec![0i64; n - m + 1];
    for k in (0..=n - m).rev() {
        if r[k + m] % lead != 0 {
            return None;
        }
        let c = r[k + m] / lead;
        if c < 0 {
            return None;
        }
        q[k] = c;
        for j in 0..=m {
            r[k + j] -= c * g[j];
        }
    }
    r.iter().all(|&v| v == 0).then_some(q)
}

fn coeffs_i64(f: &NNPoly) -> Vec<i64> {
    f.coeffs()
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect()
}

fn coeffs_i128(f: &ZPoly) -> Vec<i128> {
    f.coeffs()
        .iter()
        .map(|c| i128::try_from(c).unwrap())
        .collect()
}

fn from_i64(v: &[i64]) -> NNPoly {
    NNPoly::from_u64s(&v.iter().map(|&c| c as u64).collect::<Vec<_>>()).unwrap()
}

/// Every `g` with `1 <= deg g < deg f` and coefficients at most `alpha(f)`, kept
/// when the exact quotient has non-negative coefficients.
fn brute_force_divisors(f: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let n = f.len() - 1;
    let alpha = *f.iter().max().unwrap();
    let mut out = Vec::new();
    for d in 1..n {
        let mut g = vec![0i64; d + 1];
        loop {
            if g[d] != 0 {
                if let Some(q) = nn_quotient(f, &g) {
                    out.push((g.clone(), q));
                }
            }
            let mut i = 0;
            while i <= d {
                g[i] += 1;
                if g[i] <= alpha {
                    break;
                }
                g[i] = 0;
                i += 1;
            }
            if i > d {
                break;
            }
        }
    }
    out
}

fn multiset_distance(a: &[NNPoly], b: &[NNPoly]) -> usize {
    let mut rest: Vec<&NNPoly> = b.iter().collect();
    let mut common = 0;
    for x in a {
        if let Some(pos) = rest.iter().position(|y| *y == x) {
            rest.remove(pos);
            common += 1;
        }
    }
    (a.len() - common).max(b.len() - common)
}

fn random_nn(rng: &mut ChaCha8Rng, max_deg: usize, max_coeff: u64) -> NNPoly {
    loop {
        let deg = rng.gen_range(0..=max_deg);
        let c: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..=max_coeff)).collect();
        if c.iter().any(|&v| v > 0) {
            return NNPoly::from_u64s(&c).unwrap();
        }
    }
}

fn random_z(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64) -> ZPoly {
    loop {
        let deg = rng.gen_range(0..=max_deg);
        let c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
        let p = ZPoly::from_i64s(&c);
        if !p.is_zero() {
            return p;
        }
    }
}

fn random_op(rng: &mut ChaCha8Rng) -> WeylOp {
    let terms = rng.gen_range(0..5);
    WeylOp::from_terms((0..terms).map(|_| {
        let i = rng.gen_range(0..=4);
        let j = rng.gen_range(0..=4 - i);
        ((i, j), BigInt::from(rng.gen_range(-5..=5)))
    }))
}

fn derivative_i128(f: &[i128]) -> Vec<i128> {
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as i128)
        .collect()
}

// ---- criteria ----

fn c1_two_factorizations(fz_cache: &Factorizer) -> Outcome {
    let f = nn("x^5+x^4+x^3+x^2+x+1");
    let got = fz_cache
        .atom_factorizations(&f)
        .map_err(|e| e.to_string())?;
    let want = BTreeSet::from([fz(&["x+1", "x^4+x^2+1"]), fz(&["x^3+1", "x^2+x+1"])]);
    ensure(got == want, format!("got {got:?}"))?;
    for z in &got {
        ensure(z.product() == f, "product mismatch")?;
    }
    Ok("{x+1, x^4+x^2+1} and {x^3+1, x^2+x+1}".into())
}

fn parts(s: &nnpoly::nnfactor::SplitRecord) -> Vec<u64> {
    let mut v: Vec<u64> = s.parts.iter().map(|p| u64::try_from(p).unwrap()).collect();
    v.sort();
    v
}

fn c2_example_one_trace() -> Outcome {
    let t = base_a_trace(&nn("x^5+x^4+x^3+x^2+x+1")).map_err(|e| e.to_string())?;
    ensure(
        t.a == BigUint::from(2u8) && t.b == BigUint::from(63u8),
        format!("a={} b={}", t.a, t.b),
    )?;
    let accepted: BTreeSet<Vec<u64>> = t.accepted().map(parts).collect();
    ensure(
        accepted == BTreeSet::from([vec![3, 21], vec![7, 9]]),
        format!("accepted {accepted:?}"),
    )?;
    let three = t
        .splits
        .iter()
        .find(|s| parts(s) == vec![3, 3, 7])
        .ok_or("3*3*7 missing from the trace")?;
    ensure(
        three.verdict == SplitVerdict::EtaMismatch,
        format!("3*3*7 verdict {:?}", three.verdict),
    )?;
    ensure(
        three.etas.iter().sum::<usize>() == 4,
        "eta sum of 3*3*7 should be 4",
    )?;
    Ok("a=2, b=63, accepted 3*21 and 7*9, 3*3*7 dropped (eta sum 4 != 5)".into())
}

fn c3_example_two() -> Outcome {
    let f = nn("x^2+10x+3");
    let t = base_a_trace(&f).map_err(|e| e.to_string())?;
    ensure(
        t.a == BigUint::from(11u8) && t.b == BigUint::from(234u8),
        format!("a={} b={}", t.a, t.b),
    )?;
    let valid: Vec<_> = t
        .splits
        .iter()
        .filter(|s| s.verdict != SplitVerdict::EtaMismatch)
        .collect();
    ensure(
        valid.len() == 1 && parts(valid[0]) == vec![13, 18],
        "13*18 should be the only eta-valid split",
    )?;
    let s = valid[0];
    ensure(
        s.decoded.iter().collect::<BTreeSet<_>>() == BTreeSet::from([&nn("x+2"), &nn("x+7")]),
        "decoded parts should be x+2 and x+7",
    )?;
    ensure(
        s.product.as_ref() == Some(&nn("x^2+9x+14")),
        "product should be x^2+9x+14",
    )?;
    ensure(
        s.verdict
            == SplitVerdict::ExceedsBase {
                alpha: BigUint::from(14u8),
            },
        format!("verdict {:?}", s.verdict),
    )?;
    ensure(
        t.is_atom() && is_atom(&f).unwrap(),
        "x^2+10x+3 should be an atom",
    )?;
    Ok("a=11, b=234, (x+2)(x+7)=x^2+9x+14 rejected with alpha 14 >= 11, atom".into())
}

fn c4_root_closure_witness() -> Outcome {
    let f = zp("x^4+2x^3-x^2+4x+2");
    ensure(
        !f.is_nonneg().unwrap(),
        "f must have a negative coefficient",
    )?;
    let c = coeffs_i128(&f);
    let times = conv(&c, &[1, 1]);
    ensure(
        times == vec![2, 6, 3, 1, 3, 1],
        format!("f(x+1) = {times:?}"),
    )?;
    ensure(
        (&f * &zp("x+1")).to_string() == "x^5+3x^4+x^3+3x^2+6x+2",
        "library f(x+1) differs",
    )?;
    let sq = conv(&c, &c);
    ensure(
        sq == vec![4, 16, 12, 0, 21, 4, 2, 4, 1],
        format!("f^2 = {sq:?}"),
    )?;
    ensure(
        (&f * &f).to_string() == "x^8+4x^7+2x^6+4x^5+21x^4+12x^2+16x+4",
        "library f^2 differs",
    )?;
    let r = root_closure_member(&f, &ZPoly::one(), 8).map_err(|e| e.to_string())?;
    ensure(r == Membership::Member(2), format!("root closure {r:?}"))?;
    Ok("f(x+1) and f^2 bit-exact, least n with f^n in N0[x] is 2".into())
}

fn c5_g_family(cache: &Factorizer) -> Outcome {
    let mut notes = Vec::new();
    for (n, k) in [(2u32, 1u32), (2, 2), (3, 1)] {
        let g = g_polynomial(n, k).map_err(|e| e.to_string())?;
        // oracle: the expansion of (x+n)^n (x^2-x+1) (x+1)^k
        let mut e = vec![1i128];
        for _ in 0..n {
            e = conv(&e, &[n as i128, 1]);
        }
        e = conv(&e, &[1, -1, 1]);
        for _ in 0..k {
            e = conv(&e, &[1, 1]);
        }
        ensure(
            coeffs_i128(&g.to_z()) == e,
            format!("g_{{{n},{k}}} expansion"),
        )?;
        let z = cache.atom_factorizations(&g).map_err(|e| e.to_string())?;
        let l: BTreeSet<usize> = z.iter().map(Factorization::len).collect();
        let want = BTreeSet::from([1 + k as usize, (n + k) as usize]);
        ensure(z.len() == 2, format!("|Z(g_{{{n},{k}}})| = {}", z.len()))?;
        ensure(l == want, format!("L(g_{{{n},{k}}}) = {l:?}"))?;
        ensure(lengths(&g).unwrap() == want, "lengths() disagrees")?;
        notes.push(format!("L(g_{n},{k})={l:?}"));
    }
    let g31 = g_polynomial(3, 1).unwrap();
    let rho = elasticity(&g31).map_err(|e| e.to_string())?;
    ensure(rho == Ratio::from_integer(2), format!("elasticity {rho}"))?;
    let delta = delta_set(&g31).map_err(|e| e.to_string())?;
    ensure(delta == BTreeSet::from([2]), format!("delta {delta:?}"))?;
    Ok(format!(
        "{}; rho(g_3,1)=2, delta(g_3,1)={{2}}",
        notes.join(", ")
    ))
}

fn c6_catenary(cache: &Factorizer) -> Outcome {
    let g = g_polynomial(2, 2).unwrap();
    let z: Vec<_> = cache
        .atom_factorizations(&g)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    ensure(z.len() == 2, "g_2,2 should have two factorizations")?;
    let d = multiset_distance(z[0].factors(), z[1].factors());
    let c = catenary_degree(&g).map_err(|e| e.to_string())?;
    ensure(
        d == 3 && c == d,
        format!("catenary {c}, oracle distance {d}"),
    )?;
    Ok(format!(
        "c(g_2,2) = {c} = definitional distance; the closed form c(g_n,k) = n would give 2 (discrepancy reported, not resolved)"
    ))
}

fn c7_lemma3(rng: &mut ChaCha8Rng) -> Outcome {
    let mut atoms = Vec::new();
    while atoms.len() < 50 {
        let deg = rng.gen_range(1..=3);
        let mut c: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..=5)).collect();
        c[deg] = rng.gen_range(1..=5);
        let f = NNPoly::from_u64s(&c).unwrap();
        if f.is_x() || !f.in_p0() {
            continue;
        }
        let oracle_atom = brute_force_divisors(&coeffs_i64(&f)).is_empty();
        ensure(
            oracle_atom == is_atom(&f).unwrap(),
            format!("atom test disagrees on {f}"),
        )?;
        if oracle_atom {
            atoms.push(f);
        }
    }
    for f in &atoms {
        let l = lemma3(std::slice::from_ref(f)).map_err(|e| format!("{f}: {e}"))?;
        let z = coeffs_i128(&l.z);
        let p = i128::try_from(&l.p).unwrap();
        let n = f.degree();
        ensure(
            z.iter().any(|&c| c < 0),
            format!("{f}: z has no negative coefficient"),
        )?;
        ensure(
            z.len() == 2 * n + 1 && 2 * n >= 2 * f.degree(),
            format!("{f}: degree of z"),
        )?;
        ensure(
            z[2 * n] % p != 0,
            format!("{f}: p divides the leading coefficient"),
        )?;
        ensure(
            z[..2 * n].iter().all(|c| c % p == 0),
            format!("{f}: p misses a lower coefficient"),
        )?;
        ensure(
            z[0] % (p * p) != 0,
            format!("{f}: p^2 divides the constant term"),
        )?;
        let prod = conv(&coeffs_i128(&f.to_z()), &z);
        ensure(
            prod.iter().all(|&c| c >= 0),
            format!("{f}: f z has a negative coefficient"),
        )?;
    }
    Ok("50 random atoms, all six postconditions hold".into())
}

fn c8_prop_m(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..500 {
        let f = random_z(rng, 8, 100);
        let c = coeffs_i128(&f);
        let nonneg = c.iter().all(|&v| v >= 0);
        ensure(
            prop_m_membership(&f) == nonneg,
            format!("membership disagrees on {f}"),
        )?;
        ensure(
            f.is_nonneg().unwrap() == nonneg,
            format!("is_nonneg disagrees on {f}"),
        )?;
        let d = delta_map(&f);
        let mut fact = 1i128;
        for (n, v) in c.iter().enumerate() {
            if n > 0 {
                fact *= n as i128;
            }
            ensure(
                d.get(n) == BigInt::from(fact * v),
                format!("delta entry {n} of {f}"),
            )?;
        }
    }
    Ok("500 random polynomials".into())
}

fn c9_weyl(rng: &mut ChaCha8Rng) -> Outcome {
    let comm = &weyl_mul(&WeylOp::z(), &WeylOp::x()) - &weyl_mul(&WeylOp::x(), &WeylOp::z());
    ensure(comm == WeylOp::one(), format!("zx - xz = {comm}"))?;
    for _ in 0..100 {
        let (u, v) = (random_op(rng), random_op(rng));
        let f = random_z(rng, 6, 9);
        let lhs = weyl_apply(&weyl_mul(&u, &v), &f);
        let rhs = weyl_apply(&u, &weyl_apply(&v, &f));
        ensure(
            lhs == rhs,
            format!("faithfulness fails for u={u}, v={v}, f={f}"),
        )?;
    }
    for _ in 0..40 {
        let (f, g) = (random_z(rng, 6, 9), random_z(rng, 6, 9));
        let (cf, cg) = (coeffs_i128(&f), coeffs_i128(&g));
        for n in 0..=5u32 {
            let dn = WeylOp::z().pow(n);
            let lhs = coeffs_i128(&weyl_apply(&dn, &(&f * &g)));
            let mut rhs = vec![0i128];
            let (mut df, mut binom) = (cf.clone(), 1i128);
            let mut dgs = vec![cg.clone()];
            for _ in 0..n {
                let next = derivative_i128(dgs.last().unwrap());
                dgs.push(next);
            }
            // sum_i C(n,i) d^(n-i) f * d^i g, with i running down from n
            let mut terms = Vec::new();
            for i in (0..=n as usize).rev() {
                terms.push((binom, df.clone(), dgs[i].clone()));
                binom = binom * i as i128 / (n as i128 - i as i128 + 1);
                df = derivative_i128(&df);
            }
            for (b, a, c) in terms {
                if a.is_empty() || c.is_empty() {
                    continue;
                }
                let p = conv(&a, &c);
                if rhs.len() < p.len() {
                    rhs.resize(p.len(), 0);
                }
                for (k, v) in p.into_iter().enumerate() {
                    rhs[k] += b * v;
                }
            }
            ensure(
                lhs == trim(rhs),
                format!("Leibniz fails at n={n} for f={f}, g={g}"),
            )?;
        }
    }
    Ok("commutator is 1, 100 faithfulness triples, Leibniz for n <= 5".into())
}

fn c10_psi(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..200 {
        let (f, g) = (random_nn(rng, 5, 20), random_nn(rng, 5, 20));
        let pf = psi_coords(&f).map_err(|e| format!("{f}: {e}"))?;
        let pg = psi_coords(&g).map_err(|e| format!("{g}: {e}"))?;
        let pfg = psi_coords(&(&f * &g)).map_err(|e| e.to_string())?;
        ensure(pfg == &pf + &pg, format!("psi not additive on {f}, {g}"))?;
        ensure(
            pfg.to_zpoly() == Some((&f * &g).to_z()),
            "coordinates do not rebuild f g",
        )?;
    }
    let f = nn("x^4+x^3+x+1");
    let coords = psi_coords(&f).map_err(|e| e.to_string())?;
    let want = BTreeMap::from([(zp("x+1"), 2i64), (zp("x^2-x+1"), 1)]);
    ensure(
        coords.irreducible_exponents == want && coords.prime_exponents.is_empty(),
        format!("{coords:?}"),
    )?;
    let k = kronecker_factor(&f.to_z()).map_err(|e| e.to_string())?;
    ensure(
        k.factors
            .iter()
            .map(|(g, &e)| (g.clone(), i64::from(e)))
            .collect::<BTreeMap<_, _>>()
            == want,
        "Kronecker factorization disagrees",
    )?;
    Ok("200 random pairs additive; psi((x+1)(x^3+1)) = 2[x+1] + [x^2-x+1]".into())
}

fn c11_chains() -> Outcome {
    let polys = corpus_polynomials().map_err(|e| e.to_string())?;
    let mut total = 0;
    for f in &polys {
        let tuples = ordered_factorizations(f).map_err(|e| format!("{f}: {e}"))?;
        let all = chains(f).map_err(|e| format!("{f}: {e}"))?;
        ensure(
            tuples.len() == all.len(),
            format!("{f}: {} tuples, {} chains", tuples.len(), all.len()),
        )?;
        for c in &all {
            let g = &c.generators;
            ensure(
                g.first() == Some(f) && g.last().is_some_and(NNPoly::is_one),
                format!("{f}: chain ends"),
            )?;
            for w in g.windows(2) {
                ensure(
                    w[0] != w[1] && divides_n(&w[1], &w[0]),
                    format!("{f}: chain not strict"),
                )?;
            }
        }
        let mut images = BTreeSet::new();
        for t in &tuples {
            ensure(t.iter().all(|a| !a.is_one()), "unit in a tuple")?;
            let c = ChainOfIdeals::from_tuple(t);
            ensure(
                all.contains(&c),
                format!("{f}: image of {t:?} is not a chain"),
            )?;
            ensure(images.insert(c), format!("{f}: two tuples share a chain"))?;
        }
        total += tuples.len();
    }
    Ok(format!(
        "{} corpus elements, {total} tuple/chain pairs matched one to one",
        polys.len()
    ))
}

fn c12_posets() -> Outcome {
    let start = Instant::now();
    let r = ks_counterexample_report().map_err(|e| e.to_string())?;
    ensure(
        r.products_isomorphic,
        "the two 63-element products are not isomorphic",
    )?;
    ensure(
        r.left_product_size == 63 && r.right_product_size == 63,
        "product sizes",
    )?;
    ensure(
        r.factor_pairs.iter().all(|p| !p.isomorphic),
        "two factors are isomorphic",
    )?;
    let sizes: Vec<usize> = r.left.iter().chain(&r.right).map(|f| f.size).collect();
    ensure(
        sizes == vec![9, 7, 3, 21],
        format!("factor sizes {sizes:?}"),
    )?;
    ensure(
        r.sizes_match_evaluation && r.polynomial_identity_holds,
        "sizes vs evaluation at 2",
    )?;
    let two = BigUint::from(2u8);
    for f in r.left.iter().chain(&r.right) {
        ensure(
            f.polynomial.eval(&two) == BigUint::from(f.size),
            format!("{} size", f.name),
        )?;
    }
    let mut fact = 1u128;
    for n in 1..=4u32 {
        fact *= u128::from(n);
        let a = aut_count(&power(&chain_l(), n)).map_err(|e| e.to_string())?;
        ensure(a == fact, format!("aut(L^{n}) = {a}"))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 5.0, format!("took {secs:.2}s"))?;
    Ok(format!("products isomorphic, factors 9/7/3/21 pairwise non-isomorphic, aut(L^n)=n! for n<=4, {secs:.3}s"))
}

fn c13_divisor_oracle() -> Outcome {
    let mut checked = 0usize;
    for deg in 1..=4usize {
        let mut c = vec![0i64; deg + 1];
        c[0] = 1;
        c[deg] = 1;
        loop {
            let g = c.iter().fold(0i64, |g, &v| num_integer::gcd(g, v));
            if c[0] != 0 && c[deg] != 0 && g == 1 {
                let f = from_i64(&c);
                let got: BTreeSet<(NNPoly, NNPoly)> = divisor_pairs(&f)
                    .map_err(|e| format!("{f}: {e}"))?
                    .into_iter()
                    .map(|p| (p.g, p.h))
                    .collect();
                let want: BTreeSet<(NNPoly, NNPoly)> = brute_force_divisors(&c)
                    .into_iter()
                    .map(|(a, b)| {
                        let (a, b) = (from_i64(&a), from_i64(&b));
                        if a <= b {
                            (a, b)
                        } else {
                            (b, a)
                        }
                    })
                    .collect();
                ensure(
                    got == want,
                    format!("{f}: pairs {got:?} vs oracle {want:?}"),
                )?;
                checked += 1;
            }
            let mut i = 0;
            while i <= deg {
                c[i] += 1;
                if c[i] <= 6 {
                    break;
                }
                c[i] = if i == 0 || i == deg { 1 } else { 0 };
                i += 1;
            }
            if i > deg {
                break;
            }
        }
    }
    Ok(format!(
        "{checked} polynomials agree with the brute-force scan"
    ))
}

fn main() -> ExitCode {
    let cache = Factorizer::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let criteria: Vec<Criterion> = vec![
        (
            "two factorizations of x^5+x^4+x^3+x^2+x+1",
            Box::new(|_| c1_two_factorizations(&cache)),
        ),
        (
            "base-a trace for a=2, b=63",
            Box::new(|_| c2_example_one_trace()),
        ),
        (
            "x^2+10x+3 is an atom via a=11, b=234",
            Box::new(|_| c3_example_two()),
        ),
        (
            "square root-closure witness",
            Box::new(|_| c4_root_closure_witness()),
        ),
        (
            "g_{n,k} lengths, elasticity and delta set",
            Box::new(|_| c5_g_family(&cache)),
        ),
        (
            "catenary degree of g_{2,2}",
            Box::new(|_| c6_catenary(&cache)),
        ),
        ("z(x) construction on 50 random atoms", Box::new(c7_lemma3)),
        ("derivative description of N0[x]", Box::new(c8_prop_m)),
        ("Weyl algebra identities", Box::new(c9_weyl)),
        (
            "additivity of the quotient-group embedding",
            Box::new(c10_psi),
        ),
        (
            "chains of principal ideals vs ordered factorizations",
            Box::new(|_| c11_chains()),
        ),
        (
            "finite posets without unique product decomposition",
            Box::new(|_| c12_posets()),
        ),
        (
            "divisor pairs vs brute-force divisibility scan",
            Box::new(|_| c13_divisor_oracle()),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run(&mut rng);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {name} ({detail}) [{secs:.2}s]",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!(
        "criterion 14: EXCLUDED  every rational elasticity, delta set equal to N and catenary set equal to N>=2 are claims about the whole monoid; only the finite checks in 5 and 6 stand in for them"
    );
    if failed == 0 {
        println!("acceptance: all 13 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
