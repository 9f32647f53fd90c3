//! `permgrid` command-line front end.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or input
//! error.

mod config;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use permgrid::class_enum::{self, ClassCensus, EnumerateOptions};
use permgrid::lang::{gf_multivariate, gf_multivariate_from, gf_univariate, Dfa, RuleSet};
use permgrid::pipelines::suites::{verify_suite, Context, Known, VERIFY_SUITES};
use permgrid::pipelines::{Report, ReportBuilder};
use permgrid::series::algebraic::{solve_algebraic, verify_annihilator};
use permgrid::series::roots::smallest_positive_root;
use permgrid::{data, ClassSpec, GridSpec, IntPoly, Permutation, PolyInF, Series};

use config::Config;

#[derive(Parser, Debug)]
#[command(name = "permgrid", version, about = "Enumerate permutation classes and check their generating functions")]
struct Cli {
    /// key=value file setting cache_dir, geom_bound, word_bound, memory_threshold, jobs
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Census cache directory (overrides PERMGRID_CACHE and the config file)
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    cmd: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Per-length counts of Av(basis)
    Count {
        #[arg(long)]
        basis: String,
        #[arg(long)]
        to: usize,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// Simple permutations of Av(basis) of one length
    Simples {
        #[arg(long)]
        basis: String,
        #[arg(long)]
        n: usize,
    },
    /// Run verification suites
    Verify {
        /// thm-4213-3142, thm-4312-3142, thm-4231-3124, prop1, prop2, grid-footnotes, inflation-rules or all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 12)]
        to: usize,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Grid class operations
    Grid {
        #[command(subcommand)]
        op: GridOp,
    },
    /// Regular-language operations on a rules file
    Lang {
        #[command(subcommand)]
        op: LangOp,
    },
    /// Algebraic series: solve, verify, roots
    Series {
        #[command(subcommand)]
        op: SeriesOp,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Series,
}

#[derive(Args, Debug)]
struct SpecArg {
    /// Grid spec file, or the name of a shipped one
    #[arg(long)]
    spec: String,
}

#[derive(Subcommand, Debug)]
enum GridOp {
    Decode {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        word: String,
    },
    Member {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        perm: String,
        /// Test Geom membership by decoding words instead of Grid membership
        #[arg(long)]
        geometric: bool,
        #[arg(long)]
        bound: Option<usize>,
    },
    Canonical {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        perm: String,
    },
}

#[derive(Args, Debug)]
struct RulesArg {
    /// Rules file, or the name of a shipped one
    #[arg(long)]
    rules: String,
}

#[derive(Subcommand, Debug)]
enum LangOp {
    Count {
        #[command(flatten)]
        rules: RulesArg,
        #[arg(long)]
        n: usize,
    },
    Gf {
        #[command(flatten)]
        rules: RulesArg,
    },
    GfMulti {
        #[command(flatten)]
        rules: RulesArg,
        /// Only words starting with this prefix
        #[arg(long)]
        start: Option<String>,
    },
    Words {
        #[command(flatten)]
        rules: RulesArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: Option<u128>,
    },
}

#[derive(Args, Debug)]
struct PolyArg {
    /// Rows of integer coefficients in x, lowest power first, one row per
    /// power of f separated by `;`, e.g. `0,1;-1,2;0,1`
    #[arg(long, allow_hyphen_values = true, conflicts_with = "class")]
    poly: Option<String>,
    /// Use the annihilating polynomial of a shipped class
    #[arg(long)]
    class: Option<String>,
}

#[derive(Subcommand, Debug)]
enum SeriesOp {
    /// Extend a seed to a root of the polynomial
    Solve {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        seed: String,
        #[arg(long)]
        order: usize,
    },
    /// Check that a series is a root modulo x^(to+1)
    Verify {
        #[command(flatten)]
        poly: PolyArg,
        /// Coefficients from x^0; defaults to the brute-force series of --class
        #[arg(long, allow_hyphen_values = true)]
        terms: Option<String>,
        #[arg(long)]
        to: usize,
    },
    /// Smallest positive root of a polynomial in x, or of a discriminant
    Roots {
        /// Integer coefficients in x, lowest power first
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        /// Discriminant of this class's annihilating polynomial
        #[arg(long, conflicts_with = "poly")]
        discriminant_of: Option<String>,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

type Outcome = Result<u8, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let mut cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(dir) = cli.cache.clone().or_else(|| std::env::var_os("PERMGRID_CACHE").map(PathBuf::from)) {
        cfg.cache_dir = Some(dir);
    }
    if cli.format == Format::Csv && !matches!(cli.cmd, Command::Count { .. }) {
        return Err("csv output is only offered for count tables".into());
    }
    match cli.cmd {
        Command::Count { basis, to, method } => count(&cfg, cli.format, &basis, to, method),
        Command::Simples { basis, n } => simples(&cfg, cli.format, &basis, n),
        Command::Verify { suite, to, out, jobs } => {
            if let Some(j) = jobs {
                cfg.jobs = j;
            }
            verify(&cfg, cli.format, &suite, to, out.as_deref())
        }
        Command::Grid { op } => grid(&cfg, cli.format, op),
        Command::Lang { op } => lang_cmd(&cfg, cli.format, op),
        Command::Series { op } => series_cmd(cli.format, op),
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) {
    match format {
        Format::Text => println!("{}", text()),
        _ => println!("{}", serde_json::to_string_pretty(value).expect("json")),
    }
}

/// A path on disk, else a shipped data file of that name.
fn read_input(arg: &str) -> Result<String, String> {
    let path = Path::new(arg);
    if path.exists() {
        return fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"));
    }
    data::file(arg)
        .map(str::to_string)
        .ok_or_else(|| format!("{arg}: no such file or shipped data file"))
}

fn census(cfg: &Config, spec: &ClassSpec, n: usize) -> Result<ClassCensus, String> {
    let opts = EnumerateOptions { memory_threshold: cfg.memory_threshold };
    match &cfg.cache_dir {
        Some(dir) => class_enum::enumerate_cached(spec, n, opts, dir).map_err(err),
        None => Ok(class_enum::enumerate_with(spec, n, opts)),
    }
}

fn count(cfg: &Config, format: Format, basis: &str, to: usize, method: Method) -> Outcome {
    let spec = ClassSpec::parse(basis).map_err(err)?;
    let names: Vec<String> = spec.basis().iter().map(|p| p.to_string()).collect();
    let counts: Vec<String> = match method {
        Method::Brute => {
            let c = census(cfg, &spec, to)?;
            if format == Format::Csv {
                print!("{}", c.to_csv());
                return Ok(0);
            }
            c.counts()[1..].iter().map(|v| v.to_string()).collect()
        }
        Method::Series => {
            let k = Known::from_basis(basis)
                .ok_or_else(|| format!("no assembled series for Av({basis}); use --method brute"))?;
            let f = k.assemble(to).map_err(err)?;
            let terms = f.to_strings();
            if format == Format::Csv {
                println!("n,count");
                for (n, t) in terms.iter().enumerate().skip(1) {
                    println!("{n},{t}");
                }
                return Ok(0);
            }
            terms[1..=to].to_vec()
        }
    };
    let method = match method {
        Method::Brute => "brute",
        Method::Series => "series",
    };
    let value = json!({ "basis": names, "method": method, "from": 1, "counts": counts });
    emit(format, &value, || counts.join(","));
    Ok(0)
}

fn simples(cfg: &Config, format: Format, basis: &str, n: usize) -> Outcome {
    let spec = ClassSpec::parse(basis).map_err(err)?;
    let c = census(cfg, &spec, n)?;
    let list: Vec<String> = c.simples(n).map_err(err)?.iter().map(|p| p.to_string()).collect();
    let value = json!({ "basis": basis, "n": n, "count": list.len(), "simples": list });
    emit(format, &value, || list.join("\n"));
    Ok(0)
}

fn verify(cfg: &Config, format: Format, suite: &str, to: usize, out: Option<&Path>) -> Outcome {
    let names: Vec<&str> = match suite {
        "all" => VERIFY_SUITES.to_vec(),
        s if VERIFY_SUITES.contains(&s) => vec![s],
        s => return Err(format!("unknown suite {s:?}; known: {}, all", VERIFY_SUITES.join(", "))),
    };
    let mut ctx = Context::new(to).with_options(EnumerateOptions { memory_threshold: cfg.memory_threshold });
    if let Some(dir) = &cfg.cache_dir {
        ctx = ctx.with_cache(dir);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(err)?;
    let mut all = ReportBuilder::new("all", &[]);
    let results: Vec<Result<Report, String>> =
        pool.install(|| names.par_iter().map(|s| verify_suite(s, &ctx).map_err(err)).collect());
    let report = if names.len() == 1 {
        results.into_iter().next().expect("one suite")?
    } else {
        for r in results {
            all.extend(r?);
        }
        all.finish()
    };
    let body = match format {
        Format::Text => report.to_string(),
        _ => report.to_json(),
    };
    match out {
        Some(path) => fs::write(path, body + "\n").map_err(|e| format!("{}: {e}", path.display()))?,
        None => println!("{body}"),
    }
    let code = match report.failures().next() {
        None => 0,
        Some(first) => {
            let n = first.n.map(|n| format!(" at n={n}")).unwrap_or_default();
            eprintln!("FAIL {}{n}: expected {}, got {}", first.name, first.expected, first.got);
            1
        }
    };
    Ok(code)
}

fn load_spec(arg: &SpecArg) -> Result<GridSpec, String> {
    GridSpec::parse(&read_input(&arg.spec)?).map_err(|e| format!("{}: {e}", arg.spec))
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(err)
}

fn grid(cfg: &Config, format: Format, op: GridOp) -> Outcome {
    match op {
        GridOp::Decode { spec, word } => {
            let g = load_spec(&spec)?;
            let p = g.decode_str(&word).map_err(err)?;
            emit(format, &json!({ "word": word, "perm": p.to_string() }), || p.to_string());
        }
        GridOp::Member { spec, perm, geometric, bound } => {
            let g = load_spec(&spec)?;
            let p = parse_perm(&perm)?;
            let member = if geometric {
                g.geom_member(&p, bound.unwrap_or(cfg.geom_bound)).map_err(err)?
            } else {
                g.grid_member(&p)
            };
            let class = if geometric { "geom" } else { "grid" };
            emit(format, &json!({ "perm": perm, "class": class, "member": member }), || member.to_string());
        }
        GridOp::Canonical { spec, perm } => {
            let g = load_spec(&spec)?;
            let p = parse_perm(&perm)?;
            let gr = g.canonical_gridding(&p).map_err(err)?;
            emit(format, &json!({ "perm": perm, "cols": gr.cols, "rows": gr.rows }), || gr.to_string());
        }
    }
    Ok(0)
}

fn load_rules(arg: &RulesArg) -> Result<(RuleSet, Dfa), String> {
    let rs = RuleSet::parse(&read_input(&arg.rules)?).map_err(|e| format!("{}: {e}", arg.rules))?;
    let dfa = Dfa::compile(&rs);
    Ok((rs, dfa))
}

fn lang_cmd(cfg: &Config, format: Format, op: LangOp) -> Outcome {
    match op {
        LangOp::Count { rules, n } => {
            let (_, dfa) = load_rules(&rules)?;
            let c = dfa.count_words(n).to_string();
            emit(format, &json!({ "n": n, "count": c }), || c.clone());
        }
        LangOp::Gf { rules } => {
            let (_, dfa) = load_rules(&rules)?;
            let r = gf_univariate(&dfa).map_err(err)?.to_string();
            emit(format, &json!({ "gf": r }), || r.clone());
        }
        LangOp::GfMulti { rules, start } => {
            let (_, dfa) = load_rules(&rules)?;
            let r = match &start {
                Some(w) => gf_multivariate_from(&dfa, &dfa.parse_word(w).map_err(err)?),
                None => gf_multivariate(&dfa),
            }
            .map_err(err)?;
            let vars = r.vars().to_vec();
            let r = r.to_string();
            emit(format, &json!({ "vars": vars, "start": start, "gf": r }), || r.clone());
        }
        LangOp::Words { rules, n, bound } => {
            let (_, dfa) = load_rules(&rules)?;
            let words: Vec<String> = dfa
                .enumerate_words(n, bound.unwrap_or(cfg.word_bound))
                .map_err(err)?
                .iter()
                .map(|w| dfa.word_to_string(w))
                .collect();
            emit(format, &json!({ "n": n, "count": words.len(), "words": words }), || words.join("\n"));
        }
    }
    Ok(0)
}

fn parse_ints(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect()
}

fn class_poly(basis: &str) -> Result<(Known, PolyInF), String> {
    match Known::from_basis(basis) {
        Some(k @ Known::Av4213_3142) => Ok((k, permgrid::pipelines::annihilator_4213_3142())),
        Some(k @ Known::Av4312_3142) => Ok((k, permgrid::pipelines::annihilator_4312_3142())),
        _ => Err(format!("no annihilating polynomial shipped for Av({basis})")),
    }
}

fn poly_in_f(arg: &PolyArg) -> Result<PolyInF, String> {
    match (&arg.poly, &arg.class) {
        (Some(p), _) => {
            let rows: Vec<Vec<i64>> = p.split(';').map(parse_ints).collect::<Result<_, _>>()?;
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            Ok(PolyInF::from_int_rows(&refs))
        }
        (None, Some(c)) => class_poly(c).map(|(_, p)| p),
        (None, None) => Err("give --poly or --class".into()),
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn series_cmd(format: Format, op: SeriesOp) -> Outcome {
    match op {
        SeriesOp::Solve { poly, seed, order } => {
            let p = poly_in_f(&poly)?;
            let seed: Vec<BigRational> = parse_ints(&seed)?.into_iter().map(rat).collect();
            let f = solve_algebraic(&p, &seed, order).map_err(err)?;
            let terms = f.to_strings();
            emit(format, &json!({ "poly": p.to_string(), "coefficients": terms }), || terms.join(","));
        }
        SeriesOp::Verify { poly, terms, to } => {
            let p = poly_in_f(&poly)?;
            let f = match (&terms, &poly.class) {
                (Some(t), _) => Series::from_ints(&parse_ints(t)?),
                (None, Some(c)) => {
                    let (k, _) = class_poly(c)?;
                    class_enum::enumerate(&k.spec(), to).series()
                }
                (None, None) => return Err("give --terms or --class".into()),
            };
            let ok = verify_annihilator(&p, &f, to).map_err(err)?;
            emit(format, &json!({ "poly": p.to_string(), "to": to, "root": ok }), || ok.to_string());
            return Ok(if ok { 0 } else { 1 });
        }
        SeriesOp::Roots { poly, discriminant_of, tol } => {
            let q: IntPoly = match (&poly, &discriminant_of) {
                (Some(p), _) => IntPoly::from_ints(&parse_ints(p)?),
                (None, Some(c)) => class_poly(c)?.1.discriminant().map_err(err)?,
                (None, None) => return Err("give --poly or --discriminant-of".into()),
            };
            let tol = BigRational::from_float(tol).filter(|t| *t > rat(0)).ok_or("--tol must be positive")?;
            let r = smallest_positive_root(&q, &tol).map_err(err)?;
            let exact = r.exact.as_ref().map(|e| e.to_string());
            let value = json!({
                "poly": q.display_with("x"),
                "lo": r.lo.to_string(),
                "hi": r.hi.to_string(),
                "approx": r.midpoint(),
                "exact": exact,
            });
            emit(format, &value, || exact.clone().unwrap_or_else(|| format!("{:.12}", r.midpoint())));
        }
    }
    Ok(0)
}
