use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use nnpoly::config::{Config, OutputFormat};
use nnpoly::invariants::{
    chains, ordered_factorizations, verify_chain_bijection, InvariantReport,
    DEFAULT_MAX_FACTORIZATIONS,
};
use nnpoly::nnfactor::{base_a_trace, divides_n, divisor_pairs, is_atom, nn_divisors, Factorizer};
use nnpoly::poly::{decode_base, embed_pair, encode_base, eta, BaseAPair, EmbedMode};
use nnpoly::poset::{
    aut_count, is_isomorphic, ks_counterexample_report, poset_from_polynomial, FinPoset,
};
use nnpoly::primes::{
    a_lambda_member, fg_prime_ideal_classify, ideal_member, in_e, is_prime_element, lemma3,
    non_primality_witness, prime_ideal_family_member, root_closure_member, valuations, IdealGens,
    Membership, PrimeIdealFamily,
};
use nnpoly::weyl::{delta_map, prop_m_membership, weyl_apply, weyl_mul, WeylOp};
use nnpoly::zx::{eisenstein_prime, psi_coords_with, v_lambda};
use nnpoly::{corpus, Error, NNPoly, ZPoly};

#[derive(Parser)]
#[command(
    name = "nnpoly",
    version,
    about = "Factorization in the monoid of polynomials with non-negative integer coefficients"
)]
struct Cli {
    /// Output format (overrides the config file and NNPOLY_OUTPUT).
    #[arg(long, global = true, value_enum)]
    output: Option<Format>,
    /// JSON file with search bounds.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Alpha,
    Eval,
    EvalN,
}

#[derive(Subcommand)]
enum Command {
    /// All factorizations into atoms, with length invariants.
    Factor { poly: String },
    /// Whether the element is an atom.
    Atom { poly: String },
    /// Whether the element is prime, with a witness when it is not.
    Prime { poly: String },
    /// The pair (a, f(a)) for a base a.
    Encode {
        poly: String,
        #[arg(long, conflicts_with = "mode")]
        base: Option<String>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// The polynomial with base-a digits of b.
    Decode { a: String, b: String },
    /// Largest n >= 1 with a^n < b.
    Eta { a: String, b: String },
    /// Divisors, cover relations and divisor pairs.
    Divisors { poly: String },
    /// Chains of principal ideals against ordered factorizations.
    Chains {
        poly: String,
        /// List every chain instead of only counting.
        #[arg(long)]
        list: bool,
    },
    /// The polynomial z for a list of atoms.
    Lemma3 {
        #[arg(required = true)]
        atoms: Vec<String>,
    },
    /// Coordinates in the quotient group.
    Psi { poly: String },
    /// Multiplicity of an irreducible polynomial.
    Vlambda { poly: String, lambda: String },
    /// Prime exponents of the constant and leading coefficients.
    Valuations { poly: String },
    /// A cofactor with non-negative product, within the degree bound.
    InE {
        #[arg(allow_hyphen_values = true)]
        zpoly: String,
    },
    /// Least k with lambda^k f in the monoid.
    ALambda {
        #[arg(allow_hyphen_values = true)]
        zpoly: String,
        lambda: String,
    },
    /// Least n with (num/den)^n in the monoid.
    RootClosure {
        #[arg(allow_hyphen_values = true)]
        num: String,
        #[arg(allow_hyphen_values = true)]
        den: String,
    },
    #[command(subcommand)]
    Weyl(WeylCommand),
    /// Membership through values of derivatives at 0.
    PropM {
        #[arg(allow_hyphen_values = true)]
        zpoly: String,
    },
    /// Values of all derivatives at 0.
    DeltaMap {
        #[arg(allow_hyphen_values = true)]
        zpoly: String,
    },
    #[command(subcommand)]
    Ideal(IdealCommand),
    #[command(subcommand)]
    Poset(PosetCommand),
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum WeylCommand {
    /// Apply an operator in x and z = d/dx to a polynomial.
    Apply {
        #[arg(allow_hyphen_values = true)]
        op: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Normal form of a product of two operators.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Whether a finitely generated ideal is prime.
    Classify {
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Whether an element lies in the ideal.
    Member {
        poly: String,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Membership in one of the prime ideal families.
    Family { poly: String, family: String },
}

#[derive(Subcommand)]
enum PosetCommand {
    /// Two decompositions of one 63-element poset.
    KsDemo,
    /// Isomorphism test for two posets given as JSON files.
    Iso { left: PathBuf, right: PathBuf },
    /// Number of automorphisms.
    Aut { file: PathBuf },
    /// The poset sum of c_n copies of L^n for f = sum c_n x^n.
    FromPoly { poly: String },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Re-derive every golden vector.
    Run,
}

enum CliError {
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::Parse(_)) => 2,
            CliError::Lib(Error::Resource(_)) => 3,
            _ => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Lib(e) => e.to_string(),
            CliError::Io(m) => m.clone(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// A command's answer in both renderings, plus whether it counts as success.
struct Report {
    json: Value,
    text: String,
    ok: bool,
}

fn report(value: &impl Serialize, text: String) -> Report {
    Report {
        json: serde_json::to_value(value).expect("report types serialize"),
        text,
        ok: true,
    }
}

fn nn(s: &str) -> CliResult<NNPoly> {
    Ok(s.parse()?)
}

fn zp(s: &str) -> CliResult<ZPoly> {
    Ok(s.parse()?)
}

fn nat(s: &str) -> CliResult<BigUint> {
    s.trim().parse().map_err(|_| {
        CliError::Lib(Error::Parse(format!(
            "expected a natural number, got {s:?}"
        )))
    })
}

fn read_poset(path: &Path) -> CliResult<FinPoset> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Lib(Error::Parse(format!("{}: {e}", path.display()))))
}

fn joined<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn set_text(s: &BTreeSet<usize>) -> String {
    format!("{{{}}}", joined(&s.iter().collect::<Vec<_>>(), ", "))
}

fn membership_text(m: Membership, what: &str) -> String {
    match m {
        Membership::Member(k) => format!("member, least {what} = {k}"),
        Membership::Never => "never a member".into(),
        Membership::Unknown => "unknown within the search bound".into(),
    }
}

fn load_config(cli: &Cli) -> CliResult<Config> {
    let mut config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    config.apply_env()?;
    if let Some(f) = cli.output {
        config.output = match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        };
    }
    Ok(config)
}

fn run(command: &Command, config: &Config) -> CliResult<Report> {
    let factorizer = Factorizer::new(config.factorization_cache_size);
    Ok(match command {
        Command::Factor { poly } => {
            let f = nn(poly)?;
            let r = InvariantReport::compute(&f, &factorizer, DEFAULT_MAX_FACTORIZATIONS)?;
            let mut text = String::new();
            for z in &r.factorizations {
                let parts: Vec<String> = z.factors().iter().map(|g| format!("({g})")).collect();
                writeln!(text, "{}", parts.join(" * ")).unwrap();
            }
            write!(
                text,
                "lengths {}\nelasticity {}\ndelta set {}\ncatenary degree {}",
                set_text(&r.lengths),
                r.elasticity,
                set_text(&r.delta_set),
                r.catenary_degree
            )
            .unwrap();
            let mut json = serde_json::to_value(&r).expect("report types serialize");
            json["poly"] = json!(f.to_string());
            Report {
                json,
                text,
                ok: true,
            }
        }
        Command::Atom { poly } => {
            let f = nn(poly)?;
            let atom = is_atom(&f)?;
            let witness = if atom || f.is_one() {
                None
            } else {
                factorizer.atom_factorizations(&f)?.into_iter().next()
            };
            let trace = if f.in_p0() && f.degree() >= 1 {
                let t = base_a_trace(&f)?;
                Some(
                    json!({ "a": t.a.to_string(), "b": t.b.to_string(), "splits": t.splits.len() }),
                )
            } else {
                None
            };
            let text = match &witness {
                Some(z) => format!("{f} is not an atom: {}", joined(z.factors(), " * ")),
                None if atom => format!("{f} is an atom"),
                None => format!("{f} is a unit"),
            };
            report(
                &json!({ "poly": f, "atom": atom, "factorization": witness, "base_a": trace }),
                text,
            )
        }
        Command::Prime { poly } => {
            let f = nn(poly)?;
            let prime = is_prime_element(&f)?;
            let (witness, text) = if prime {
                (Value::Null, format!("{f} is prime"))
            } else if is_atom(&f)? {
                let w = non_primality_witness(&f)?;
                let text = format!(
                    "{f} is an atom but not prime: it divides ({}) * ({}) and neither factor\nz = {} (Eisenstein at {})",
                    w.g, w.h, w.z, w.eisenstein_prime
                );
                let mut v = serde_json::to_value(&w).expect("report types serialize");
                v["kind"] = json!("non_primality");
                v["verified"] = json!(w.verify());
                (v, text)
            } else {
                let z = factorizer
                    .atom_factorizations(&f)?
                    .into_iter()
                    .next()
                    .expect("non-unit");
                let text = format!("{f} is not an atom: {}", joined(z.factors(), " * "));
                (json!({ "kind": "factorization", "factors": z }), text)
            };
            report(
                &json!({ "poly": f, "prime": prime, "witness": witness }),
                text,
            )
        }
        Command::Encode { poly, base, mode } => {
            let f = nn(poly)?;
            let pair = match (base, mode) {
                (Some(a), _) => {
                    let a = nat(a)?;
                    let b = encode_base(&f, &a)?;
                    BaseAPair::new(a, b)
                }
                (None, m) => embed_pair(
                    &f,
                    match m.unwrap_or(Mode::Alpha) {
                        Mode::Alpha => EmbedMode::Alpha,
                        Mode::Eval => EmbedMode::Eval,
                        Mode::EvalN => EmbedMode::EvalN,
                    },
                )?,
            };
            let text = format!("a = {}, b = {}", pair.a, pair.b);
            report(
                &json!({ "poly": f, "a": pair.a.to_string(), "b": pair.b.to_string() }),
                text,
            )
        }
        Command::Decode { a, b } => {
            let (a, b) = (nat(a)?, nat(b)?);
            let f = decode_base(&a, &b)?;
            report(
                &json!({ "a": a.to_string(), "b": b.to_string(), "poly": f }),
                f.to_string(),
            )
        }
        Command::Eta { a, b } => {
            let (a, b) = (nat(a)?, nat(b)?);
            let e = eta(&a, &b)?;
            report(
                &json!({ "a": a.to_string(), "b": b.to_string(), "eta": e }),
                e.to_string(),
            )
        }
        Command::Divisors { poly } => {
            let f = nn(poly)?;
            let divisors = nn_divisors(&f)?;
            let mut covers = Vec::new();
            for (i, g) in divisors.iter().enumerate() {
                for (j, h) in divisors.iter().enumerate() {
                    if i != j && divides_n(h, g) {
                        let between = divisors
                            .iter()
                            .any(|k| k != g && k != h && divides_n(k, g) && divides_n(h, k));
                        if !between {
                            covers.push([h.clone(), g.clone()]);
                        }
                    }
                }
            }
            let pairs = if f.in_p0() && f.degree() >= 1 {
                divisor_pairs(&f)?
            } else {
                Vec::new()
            };
            let mut text = format!("{} divisors: {}", divisors.len(), joined(&divisors, ", "));
            for p in &pairs {
                write!(text, "\n({}) * ({})", p.g, p.h).unwrap();
            }
            report(
                &json!({ "poly": f, "divisors": divisors, "covers": covers, "pairs": pairs }),
                text,
            )
        }
        Command::Chains { poly, list } => {
            let f = nn(poly)?;
            let b = verify_chain_bijection(&f)?;
            let mut text = format!(
                "{} ordered factorizations, {} chains, bijection {}",
                b.ordered_factorizations,
                b.chains,
                if b.holds() { "verified" } else { "FAILED" }
            );
            let mut json = json!({ "poly": f, "check": b, "holds": b.holds() });
            if *list {
                let all = chains(&f)?;
                for c in &all {
                    let gens: Vec<String> = c.generators.iter().map(|g| format!("({g})")).collect();
                    write!(text, "\n{}", gens.join(" < ")).unwrap();
                }
                json["chains"] = json!(all);
                json["ordered_factorizations"] = json!(ordered_factorizations(&f)?);
            }
            Report {
                ok: b.holds(),
                json,
                text,
            }
        }
        Command::Lemma3 { atoms } => {
            let atoms = atoms.iter().map(|s| nn(s)).collect::<CliResult<Vec<_>>>()?;
            let l = lemma3(&atoms)?;
            let products: Vec<ZPoly> = atoms.iter().map(|f| &f.to_z() * &l.z).collect();
            let nonneg = products.iter().all(|p| p.is_nonneg().unwrap_or(false));
            let cert = eisenstein_prime(&l.z);
            let mut text = format!("z = {}\np = {}, q = {}", l.z, l.p, l.q);
            for (f, p) in atoms.iter().zip(&products) {
                write!(text, "\n({f}) * z = {p}").unwrap();
            }
            report(
                &json!({
                    "atoms": atoms,
                    "z": l.z,
                    "p": l.p.to_string(),
                    "q": l.q.to_string(),
                    "eisenstein_prime": cert.map(|p| p.to_string()),
                    "products": products,
                    "products_nonneg": nonneg,
                    "z_nonneg": l.z.is_nonneg()?,
                }),
                text,
            )
        }
        Command::Psi { poly } => {
            let f = nn(poly)?;
            let c = psi_coords_with(&f, &config.kronecker_limits())?;
            let mut terms: Vec<String> = c
                .prime_exponents
                .iter()
                .map(|(p, e)| format!("{e}[{p}]"))
                .collect();
            terms.extend(
                c.irreducible_exponents
                    .iter()
                    .map(|(g, e)| format!("{e}[{g}]")),
            );
            let text = if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            };
            report(&json!({ "poly": f, "coords": c }), text)
        }
        Command::Vlambda { poly, lambda } => {
            let (f, l) = (nn(poly)?, zp(lambda)?);
            let v = v_lambda(&f, &l)?;
            report(&json!({ "poly": f, "lambda": l, "v": v }), v.to_string())
        }
        Command::Valuations { poly } => {
            let f = nn(poly)?;
            let v = valuations(&f)?;
            let show = |m: &std::collections::BTreeMap<BigUint, u32>| {
                m.iter()
                    .map(|(p, e)| format!("{p}^{e}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let text = format!(
                "f(0): {}\nleading: {}\ndegree: {}",
                show(&v.v0p),
                show(&v.lp),
                v.delta
            );
            report(&json!({ "poly": f, "valuations": v }), text)
        }
        Command::InE { zpoly } => {
            let f = zp(zpoly)?;
            let c = in_e(&f, config.e_degree_bound)?;
            let product = c.as_ref().map(|c| &f * c);
            let text = match (&c, &product) {
                (Some(c), Some(p)) => format!("member: ({f}) * ({c}) = {p}"),
                _ => format!("no cofactor of degree <= {}", config.e_degree_bound),
            };
            report(
                &json!({
                    "poly": f,
                    "member": c.is_some(),
                    "cofactor": c,
                    "product": product,
                    "degree_bound": config.e_degree_bound,
                }),
                text,
            )
        }
        Command::ALambda { zpoly, lambda } => {
            let (f, l) = (zp(zpoly)?, nn(lambda)?);
            let m = a_lambda_member(&f, &l, config.a_lambda_k_max)?;
            report(
                &json!({ "poly": f, "lambda": l, "membership": m }),
                membership_text(m, "k"),
            )
        }
        Command::RootClosure { num, den } => {
            let (n, d) = (zp(num)?, zp(den)?);
            let m = root_closure_member(&n, &d, config.root_closure_n_max)?;
            report(
                &json!({ "num": n, "den": d, "membership": m }),
                membership_text(m, "n"),
            )
        }
        Command::Weyl(WeylCommand::Apply { op, poly }) => {
            let (u, f) = (op.parse::<WeylOp>()?, zp(poly)?);
            let r = weyl_apply(&u, &f);
            report(&json!({ "op": u, "poly": f, "result": r }), r.to_string())
        }
        Command::Weyl(WeylCommand::Mul { left, right }) => {
            let (u, v) = (left.parse::<WeylOp>()?, right.parse::<WeylOp>()?);
            let r = weyl_mul(&u, &v);
            report(
                &json!({ "left": u, "right": v, "normal_form": r }),
                r.to_string(),
            )
        }
        Command::PropM { zpoly } => {
            let f = zp(zpoly)?;
            let m = prop_m_membership(&f);
            report(&json!({ "poly": f, "member": m }), m.to_string())
        }
        Command::DeltaMap { zpoly } => {
            let f = zp(zpoly)?;
            let d = delta_map(&f);
            report(
                &json!({ "poly": f, "delta": d, "nonneg": d.is_nonneg() }),
                joined(d.entries(), " "),
            )
        }
        Command::Ideal(IdealCommand::Classify { gens }) => {
            let g = IdealGens::new(gens.iter().map(|s| nn(s)).collect::<CliResult<Vec<_>>>()?);
            let c = fg_prime_ideal_classify(&g)?;
            let text = format!("{c:?}")
                .to_lowercase()
                .replace("notprime", "not prime");
            report(&json!({ "generators": g, "class": c }), text)
        }
        Command::Ideal(IdealCommand::Member { poly, gens }) => {
            let f = nn(poly)?;
            let g = IdealGens::new(gens.iter().map(|s| nn(s)).collect::<CliResult<Vec<_>>>()?);
            let m = ideal_member(&f, &g);
            report(
                &json!({ "poly": f, "generators": g, "member": m }),
                m.to_string(),
            )
        }
        Command::Ideal(IdealCommand::Family { poly, family }) => {
            let f = nn(poly)?;
            let fam: PrimeIdealFamily = family.parse()?;
            let m = prime_ideal_family_member(&f, &fam)?;
            report(
                &json!({ "poly": f, "family": fam.to_string(), "member": m }),
                m.to_string(),
            )
        }
        Command::Poset(PosetCommand::KsDemo) => {
            let r = ks_counterexample_report()?;
            let mut text = String::new();
            for (side, fs) in [("left", &r.left), ("right", &r.right)] {
                let names: Vec<String> = fs
                    .iter()
                    .map(|f| format!("{} ({} elements)", f.name, f.size))
                    .collect();
                writeln!(text, "{side}: {}", names.join(" x ")).unwrap();
            }
            writeln!(text, "products isomorphic: {}", r.products_isomorphic).unwrap();
            for p in &r.factor_pairs {
                writeln!(
                    text,
                    "{} vs {}: isomorphic {}",
                    p.left, p.right, p.isomorphic
                )
                .unwrap();
            }
            write!(
                text,
                "{}",
                if r.holds() {
                    "demo holds"
                } else {
                    "demo FAILED"
                }
            )
            .unwrap();
            Report {
                ok: r.holds(),
                json: serde_json::to_value(&r).expect("report types serialize"),
                text,
            }
        }
        Command::Poset(PosetCommand::Iso { left, right }) => {
            let iso = is_isomorphic(&read_poset(left)?, &read_poset(right)?)?;
            report(&json!({ "isomorphic": iso }), iso.to_string())
        }
        Command::Poset(PosetCommand::Aut { file }) => {
            let n = aut_count(&read_poset(file)?)?;
            report(&json!({ "automorphisms": n.to_string() }), n.to_string())
        }
        Command::Poset(PosetCommand::FromPoly { poly }) => {
            let p = poset_from_polynomial(&nn(poly)?)?;
            let text = serde_json::to_string(&p).expect("posets serialize");
            report(&p, text)
        }
        Command::Corpus(CorpusCommand::Run) => {
            let r = corpus::run(&factorizer)?;
            let mut text = String::new();
            for (label, list) in [("vector", &r.entries), ("chains", &r.chain_bijections)] {
                for e in list {
                    let mark = if e.passed { "PASS" } else { "FAIL" };
                    writeln!(text, "{mark} {label} {}: {}", e.id, e.detail).unwrap();
                }
            }
            let total = r.entries.len() + r.chain_bijections.len();
            let passed = r
                .entries
                .iter()
                .chain(&r.chain_bijections)
                .filter(|e| e.passed)
                .count();
            write!(text, "{passed}/{total} passed").unwrap();
            let mut json = serde_json::to_value(&r).expect("report types serialize");
            json["passed"] = json!(r.passed());
            Report {
                ok: r.passed(),
                json,
                text,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result =
        load_config(&cli).and_then(|config| Ok((run(&cli.command, &config)?, config.output)));
    match result {
        Ok((r, format)) => {
            match format {
                OutputFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&r.json).expect("values serialize")
                    )
                }
                OutputFormat::Text => println!("{}", r.text),
            }
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
