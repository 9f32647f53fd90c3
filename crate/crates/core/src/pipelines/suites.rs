//! Named verification suites, one per acceptance area. Shared censuses
//! are computed on first use.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::class_enum::{self, ClassCensus, ClassSpec, EnumerateOptions};
use crate::data;
use crate::error::{Error, Result};
use crate::lang::{self, gf_multivariate, gf_multivariate_from, gf_univariate};
use crate::perm::{parse_basis, Permutation};
use crate::pipelines::assemble::{av_231_3124, skew_indecomposable_231_3124};
use crate::pipelines::checks::*;
use crate::pipelines::inflation::{verify_inflation_rules, RuleTable};
use crate::pipelines::{
    annihilator_4213_3142, annihilator_4312_3142, assemble_4213_3142, assemble_4231_3124,
    assemble_4312_3142, big, Check, Report, ReportBuilder, SEQ_4213_3142, SEQ_4231_3124,
    SEQ_4312_3142,
};
use crate::series::algebraic::verify_annihilator;
use crate::series::roots::smallest_positive_root;
use crate::series::{catalan_series, monotone_series};
use crate::{GridSpec, IntMultiPoly, IntPoly, RationalFunction, Series};

pub const SUITES: [&str; 8] = [
    "sequences",
    "theorems",
    "propositions",
    "grid-classes",
    "multivariate",
    "encoding",
    "radius",
    "properties",
];

/// The three classes, with their shipped data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Known {
    Av4213_3142,
    Av4312_3142,
    Av4231_3124,
}

impl Known {
    pub const ALL: [Known; 3] = [Known::Av4213_3142, Known::Av4312_3142, Known::Av4231_3124];

    pub fn basis(self) -> &'static str {
        match self {
            Known::Av4213_3142 => "4213,3142",
            Known::Av4312_3142 => "4312,3142",
            Known::Av4231_3124 => "4231,3124",
        }
    }

    /// Suffix shared by the shipped file names.
    pub fn tag(self) -> &'static str {
        match self {
            Known::Av4213_3142 => "4213_3142",
            Known::Av4312_3142 => "4312_3142",
            Known::Av4231_3124 => "4231_3124",
        }
    }

    pub fn published(self) -> &'static [u64; 14] {
        match self {
            Known::Av4213_3142 => &SEQ_4213_3142,
            Known::Av4312_3142 => &SEQ_4312_3142,
            Known::Av4231_3124 => &SEQ_4231_3124,
        }
    }

    pub fn spec(self) -> ClassSpec {
        ClassSpec::parse(self.basis()).expect("valid basis")
    }

    pub fn grid(self) -> GridSpec {
        data::grid_spec(&format!("grid_{}", self.tag())).expect("shipped grid")
    }

    pub fn simple_lang(self) -> lang::Dfa {
        lang::shipped(&format!("lang_simple_{}", self.tag())).expect("shipped rules").1
    }

    pub fn table(self) -> RuleTable {
        RuleTable::parse(data::table(&format!("inflate_{}", self.tag())).unwrap()).expect("shipped table")
    }

    /// Assembled series through `x^n`.
    pub fn assemble(self, n: usize) -> Result<Series> {
        match self {
            Known::Av4213_3142 => assemble_4213_3142(n),
            Known::Av4312_3142 => assemble_4312_3142(n),
            Known::Av4231_3124 => assemble_4231_3124(n).map(|a| a.linear),
        }
    }

    pub fn from_basis(s: &str) -> Option<Known> {
        let want = ClassSpec::parse(s).ok()?;
        Known::ALL.into_iter().find(|k| k.spec() == want)
    }
}

/// Brute-force censuses shared between suites.
pub struct Context {
    n_max: usize,
    cache: Option<PathBuf>,
    opts: EnumerateOptions,
    censuses: [OnceLock<ClassCensus>; 3],
}

impl Context {
    /// `n_max` is the census horizon; at least 12 for the full suites.
    pub fn new(n_max: usize) -> Self {
        Context { n_max, cache: None, opts: EnumerateOptions::default(), censuses: Default::default() }
    }

    /// Read and write censuses under `dir`.
    pub fn with_cache(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache = Some(dir.into());
        self
    }

    pub fn with_options(mut self, opts: EnumerateOptions) -> Self {
        self.opts = opts;
        self
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn census(&self, k: Known) -> &ClassCensus {
        let i = Known::ALL.iter().position(|&x| x == k).unwrap();
        self.censuses[i].get_or_init(|| {
            let spec = k.spec();
            // an unwritable cache only costs time
            self.cache
                .as_deref()
                .and_then(|dir| class_enum::enumerate_cached(&spec, self.n_max, self.opts, dir).ok())
                .unwrap_or_else(|| class_enum::enumerate_with(&spec, self.n_max, self.opts))
        })
    }
}

/// Suites exposed by `permgrid verify`, each bounded by the context horizon.
pub const VERIFY_SUITES: [&str; 7] = [
    "thm-4213-3142",
    "thm-4312-3142",
    "thm-4231-3124",
    "prop1",
    "prop2",
    "grid-footnotes",
    "inflation-rules",
];

pub fn verify_suite(name: &str, ctx: &Context) -> Result<Report> {
    let n = ctx.n_max();
    let mut rep = ReportBuilder::new(name, &[]);
    match name {
        "thm-4213-3142" => rep.extend(theorem(Known::Av4213_3142, ctx)?),
        "thm-4312-3142" => rep.extend(theorem(Known::Av4312_3142, ctx)?),
        "thm-4231-3124" => rep.extend(theorem(Known::Av4231_3124, ctx)?),
        "prop1" => rep.extend(verify_proposition(&Known::Av4312_3142.spec(), &Known::Av4312_3142.grid(), n)?),
        "prop2" => rep.extend(verify_proposition(&Known::Av4231_3124.spec(), &Known::Av4231_3124.grid(), n)?),
        "grid-footnotes" => rep.extend(grid_classes(ctx)?),
        "inflation-rules" => {
            for k in Known::ALL {
                rep.extend(verify_inflation_rules(&k.spec(), &k.grid(), &k.simple_lang(), &k.table(), n.min(9))?);
            }
            &mut rep
        }
        other => return Err(Error::UnknownSuite(other.into())),
    };
    Ok(rep.finish())
}

pub fn run_suite(name: &str, ctx: &Context) -> Result<Report> {
    match name {
        "sequences" => Ok(sequences(ctx)),
        "theorems" => theorems(ctx),
        "propositions" => propositions(),
        "grid-classes" => grid_classes(ctx),
        "multivariate" => multivariate(),
        "encoding" => encoding(ctx),
        "radius" => radius(),
        "properties" => properties(ctx),
        other => Err(Error::UnknownSuite(other.into())),
    }
}

fn horizon(ctx: &Context) -> usize {
    ctx.n_max().min(14)
}

/// Brute-force counts against the published terms.
pub fn sequences(ctx: &Context) -> Report {
    let mut rep = ReportBuilder::new("sequences", &["published sequence terms"]);
    let n = horizon(ctx);
    for k in Known::ALL {
        rep.push(Check::sequence(
            format!("Av({}) brute force", k.basis()),
            &big(&k.published()[..n]),
            &counts_from_one(ctx.census(k), n),
        ));
    }
    rep.finish()
}

/// Annihilating polynomials, assembled series, and the closed form.
pub fn theorems(ctx: &Context) -> Result<Report> {
    let mut rep = ReportBuilder::new("theorems", &[]);
    for k in Known::ALL {
        rep.extend(theorem(k, ctx)?);
    }
    Ok(rep.finish())
}

/// One class: brute force against the published terms and the annihilating
/// polynomial, and the assembled series against both.
pub fn theorem(k: Known, ctx: &Context) -> Result<Report> {
    let n = horizon(ctx);
    let census = ctx.census(k);
    let brute_counts = counts_from_one(census, n);
    let mut rep = ReportBuilder::new(format!("theorem Av({})", k.basis()), &["assembled generating functions"]);
    rep.push(Check::sequence(format!("Av({}) brute force vs published", k.basis()), &big(&k.published()[..n]), &brute_counts));
    let poly = match k {
        Known::Av4213_3142 => Some(annihilator_4213_3142()),
        Known::Av4312_3142 => Some(annihilator_4312_3142()),
        Known::Av4231_3124 => None,
    };
    if let Some(poly) = &poly {
        rep.anchor("annihilating polynomials");
        let ok = verify_annihilator(poly, &census.series(), n)?;
        rep.push(Check::truth(format!("Av({}) brute force is a root", k.basis()), Some(n), ok, "nonzero remainder"));
    }
    match k.assemble(20) {
        Ok(f) => {
            rep.push(Check::series(format!("Av({}) assembled vs published", k.basis()), &big(k.published()), &f, 1));
            rep.push(Check::series(format!("Av({}) assembled vs brute force", k.basis()), &brute_counts, &f, 1));
            if let Some(poly) = &poly {
                let ok = verify_annihilator(poly, &f, 20)?;
                rep.push(Check::truth(format!("Av({}) assembled series is a root", k.basis()), Some(20), ok, "nonzero remainder"));
            }
        }
        Err(e) => {
            rep.error(format!("Av({}) assembly", k.basis()), e);
        }
    }
    if k == Known::Av4231_3124 {
        rep.anchor("closed form");
        match assemble_4231_3124(20) {
            Ok(a) => {
                let lin = a.linear.to_integers().unwrap_or_default();
                let closed = a.closed.to_integers().unwrap_or_default();
                rep.push(Check::sequence("Av(4231,3124) closed form vs linear solution", &closed, &lin));
                rep.push(Check::series("Av(4231,3124) closed form vs brute force", &brute_counts, &a.closed, 1));
            }
            Err(e) => {
                rep.error("Av(4231,3124) closed form", e);
            }
        }
    }
    Ok(rep.finish())
}

fn alternation(m: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=m).map(|i| 2 * i).collect();
    v.extend((1..=m).map(|i| 2 * i - 1));
    Permutation::from_slice(&v).expect("valid")
}

/// Simple permutations of each class against the geometric grid class.
pub fn propositions() -> Result<Report> {
    let mut rep = ReportBuilder::new("propositions", &["simple permutations coincide", "simple parallel alternations"]);
    rep.extend(verify_proposition(&Known::Av4312_3142.spec(), &Known::Av4312_3142.grid(), 8)?);
    rep.extend(verify_proposition(&Known::Av4231_3124.spec(), &Known::Av4231_3124.grid(), 8)?);
    rep.extend(verify_proposition(&Known::Av4213_3142.spec(), &Known::Av4213_3142.grid(), 10)?);
    let census = class_enum::enumerate(&Known::Av4213_3142.spec(), 10);
    for n in 4..=10 {
        let expect: BTreeSet<Permutation> = if n % 2 == 0 { BTreeSet::from([alternation(n / 2)]) } else { BTreeSet::new() };
        let got: BTreeSet<Permutation> = census.simples(n)?.into_iter().collect();
        rep.push(Check::new("simples are 246…135…", Some(n), format!("{expect:?}"), format!("{got:?}")));
    }
    Ok(rep.finish())
}

fn univariate(num: &[i64], den: &[i64]) -> Result<RationalFunction> {
    RationalFunction::univariate(&IntPoly::from_ints(num), &IntPoly::from_ints(den))
}

fn product(ps: &[&[i64]]) -> IntPoly {
    ps.iter().fold(IntPoly::one(), |acc, p| &acc * &IntPoly::from_ints(p))
}

/// Grid-class generating functions and bases, plus the simple-count
/// generating function.
pub fn grid_classes(ctx: &Context) -> Result<Report> {
    let mut rep = ReportBuilder::new("grid-classes", &["grid class generating functions", "grid class bases", "simple permutation counts"]);
    let cases = [
        ("lang_grid_4312_3142", vec![1, -6, 11, -5], product(&[&[1, -1], &[1, -3], &[1, -3, 1]])),
        ("lang_grid_4231_3124", vec![1, -5, 7, -1], product(&[&[1, -1], &[1, -2], &[1, -3]])),
    ];
    for (name, num, den) in cases {
        let (_, dfa) = lang::shipped(name)?;
        let want = RationalFunction::univariate(&IntPoly::from_ints(&num), &den)?;
        rep.push(Check::new(format!("{name} generating function"), None, &want, gf_univariate(&dfa)?));
    }
    let bases = [
        (Known::Av4312_3142, "2143,3142,4132,4312"),
        (Known::Av4231_3124, "4312,4231,4123,3124,32541,21534,21435"),
    ];
    for (k, basis) in bases {
        rep.extend(verify_basis_conjecture(&k.grid(), &parse_basis(basis)?, ctx.n_max().min(7)));
    }
    // Simple words of length ≥ 4, and all simples with lengths 1 and 2 added.
    let (_, dfa) = lang::shipped("lang_simple_4312_3142")?;
    let words = gf_univariate(&dfa)?;
    rep.push(Check::new("simple words, length ≥ 4", None, univariate(&[0, 0, 0, 0, 1], &[1, -1, -2])?, &words));
    let all = univariate(&[0, 1, 1, -4, -3], &[1, -1, -2])?;
    let census = ctx.census(Known::Av4312_3142);
    let n = ctx.n_max().min(11);
    let simple_counts: Vec<BigInt> = (1..=n).map(|k| census.simples(k).map(|s| BigInt::from(s.len()))).collect::<Result<_>>()?;
    rep.push(Check::series("simple counts vs (x+x²−4x³−3x⁴)/((1+x)(1−2x))", &simple_counts, &all.expand(n + 1)?, 1));
    let jacobsthal = big(&[1, 1, 3, 5, 11, 21, 43, 85]);
    if n >= 4 {
        rep.push(Check::sequence("simple counts from n = 4 are Jacobsthal", &jacobsthal[..n - 3], &simple_counts[3..]));
    }
    Ok(rep.finish())
}

fn mono(nvars: usize, idx: &[usize]) -> IntMultiPoly {
    idx.iter().fold(IntMultiPoly::one(nvars), |acc, &i| &acc * &IntMultiPoly::var(nvars, i))
}

fn sum_monos(nvars: usize, terms: &[&[usize]]) -> IntMultiPoly {
    terms.iter().fold(IntMultiPoly::zero(nvars), |acc, t| &acc + &mono(nvars, t))
}

fn letter_vars() -> Vec<String> {
    ["x_a", "x_b", "x_c", "x_d"].iter().map(|s| s.to_string()).collect()
}

/// `s` for the Av(4312,3142) simple words beginning with `a`.
pub fn expected_s_4312_3142() -> Result<RationalFunction> {
    let (a, b, c, d) = (0, 1, 2, 3);
    let den = &IntMultiPoly::one(4) - &sum_monos(4, &[&[a, c], &[b, d], &[c, d], &[a, c, d], &[b, c, d]]);
    RationalFunction::new(letter_vars(), mono(4, &[a, b, c, d]), den)
}

/// `s` for all Av(4231,3124) simple words.
pub fn expected_s_4231_3124() -> Result<RationalFunction> {
    let (a, b, c, d) = (0, 1, 2, 3);
    let inner = sum_monos(4, &[&[a], &[c], &[a, b], &[a, c], &[b, c], &[c, d], &[a, b, c], &[b, c, d]]);
    let den = &IntMultiPoly::one(4) - &sum_monos(4, &[&[a, b], &[b, c], &[c, d], &[a, b, c], &[b, c, d]]);
    RationalFunction::new(letter_vars(), &mono(4, &[b, c, d]) * &inner, den)
}

/// Multivariate generating functions of the simple-word languages.
pub fn multivariate() -> Result<Report> {
    let mut rep = ReportBuilder::new("multivariate", &["multivariate generating functions of simple words"]);
    let s4 = expected_s_4312_3142()?;
    let dfa = Known::Av4312_3142.simple_lang();
    rep.push(Check::new("Av(4312,3142) words from a", None, &s4, gf_multivariate_from(&dfa, &[0])?));
    let xc = RationalFunction::new(letter_vars(), mono(4, &[2]), IntMultiPoly::one(4))?;
    rep.push(Check::new("Av(4312,3142) words from c", None, s4.mul(&xc)?, gf_multivariate_from(&dfa, &[2])?));
    for start in [1, 3] {
        let r = gf_multivariate_from(&dfa, &[start])?;
        let got = if r.numerator().is_zero() { "0" } else { "nonzero" };
        rep.push(Check::new(format!("Av(4312,3142) words from {}", ['a', 'b', 'c', 'd'][start]), None, "0", got));
    }
    let s5 = expected_s_4231_3124()?;
    rep.push(Check::new("Av(4231,3124) words", None, &s5, gf_multivariate(&Known::Av4231_3124.simple_lang())?));
    Ok(rep.finish())
}

/// Decoding examples and bijectivity of the canonical languages.
pub fn encoding(ctx: &Context) -> Result<Report> {
    let mut rep = ReportBuilder::new("encoding", &["encoding examples", "canonical languages are bijective"]);
    let g4 = Known::Av4312_3142.grid();
    let g5 = Known::Av4231_3124.grid();
    rep.push(Check::new("decode acadcdb", None, "2473516", g4.decode_str("acadcdb")?));
    rep.push(Check::new("decode dcb", None, "312", g5.decode_str("dcb")?));
    let fig = data::grid_spec("grid_fig3")?;
    let p2413: Permutation = "2413".parse()?;
    rep.push(Check::new("2413 in Grid", None, true, fig.grid_member(&p2413)));
    rep.push(Check::new("2413 in Geom", None, false, fig.geom_member(&p2413, 9)?));
    let host: Permutation = "286435179".parse()?;
    let g = crate::Gridding { cols: vec![1, 4, 10], rows: vec![1, 5, 10] };
    rep.push(Check::new("286435179 gridding", None, true, fig.is_gridding(&host, &g)));
    rep.push(Check::new("4-cycle is not a forest", None, false, fig.row_column_graph_is_forest()));

    for (grid, name) in [(&g4, "lang_grid_4312_3142"), (&g5, "lang_grid_4231_3124")] {
        let (_, dfa) = lang::shipped(name)?;
        rep.push_all(verify_bijection(name, grid, &dfa, 0..=7, |n| Ok(grid.grid_members(n)))?);
    }
    for k in Known::ALL {
        let census = ctx.census(k);
        let name = format!("lang_simple_{}", k.tag());
        let top = ctx.n_max().min(9);
        rep.push_all(verify_bijection(&name, &k.grid(), &k.simple_lang(), 4..=top, |n| {
            Ok(census.simples(n)?.into_iter().collect())
        })?);
    }
    Ok(rep.finish())
}

fn root_check(name: &str, p: &IntPoly, target: f64, tol: f64, exact: Option<BigRational>) -> Result<Vec<Check>> {
    let tiny = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)));
    let r = smallest_positive_root(p, &tiny)?;
    let mid = r.midpoint();
    let mut out = vec![Check::truth(
        format!("{name}: smallest positive root"),
        None,
        (mid - target).abs() <= tol,
        format!("{mid:.10}"),
    )];
    out[0].expected = format!("{target} ± {tol:e}");
    if out[0].pass {
        out[0].got = format!("{mid:.10}");
    }
    if let Some(q) = exact {
        out.push(Check::new(format!("{name}: exact rational root"), None, format!("{q}"), r.exact.map(|e| e.to_string()).unwrap_or("none".into())));
    }
    Ok(out)
}

/// Radii of convergence from discriminants and the cubic factor.
pub fn radius() -> Result<Report> {
    let mut rep = ReportBuilder::new("radius", &["radius of convergence"]);
    let d2 = annihilator_4213_3142().discriminant()?;
    rep.push_all(root_check("Av(4213,3142) discriminant", &d2, 0.1895, 5e-4, None)?);
    let d4 = annihilator_4312_3142().discriminant()?;
    rep.push_all(root_check("Av(4312,3142) discriminant", &d4, 0.2, 1e-9, Some(BigRational::new(1.into(), 5.into())))?);
    rep.push_all(root_check("cubic -1+5x-4x^2+x^3", &IntPoly::from_ints(&[-1, 5, -4, 1]), 0.2451, 5e-4, None)?);
    Ok(rep.finish())
}

/// Structural properties: decompositions, commutation, automata,
/// decomposable counts, closure, representations and inflation rules.
pub fn properties(ctx: &Context) -> Result<Report> {
    let mut rep = ReportBuilder::new("properties", &["substitution decomposition", "sum and skew decompositions", "inflation rules"]);
    let n10 = ctx.n_max().min(10);
    let n9 = ctx.n_max().min(9);
    rep.push_all(decomposition_round_trip(9));
    for (i, name) in ["grid_4312_3142", "grid_4231_3124", "grid_4213_3142", "grid_fig3"].iter().enumerate() {
        rep.push(commutation_invariance(name, &data::grid_spec(name)?, 500, 12, 1000 + i as u64));
    }
    for name in data::names().filter(|n| n.ends_with(".rules")) {
        let (rs, dfa) = lang::shipped(name)?;
        rep.push_all(count_matches_enumeration(name, &dfa, 10));
        rep.push_all(dfa_matches_rules(name, &rs, &dfa, 7));
        let counts = dfa.counts(20);
        let expanded = gf_univariate(&dfa)?.expand(21)?;
        let want: Vec<BigInt> = counts.iter().map(|c| BigInt::from(c.clone())).collect();
        rep.push(Check::series(format!("{name}: generating function expansion"), &want, &expanded, 0));
        let multi = gf_multivariate(&dfa)?.specialize_all()?;
        rep.push(Check::new(format!("{name}: multivariate at x"), None, gf_univariate(&dfa)?, multi));
    }

    // decomposable counts as series identities in the brute-force series
    let w = n10 + 1;
    let one = Series::one(w);
    let x = Series::x(w);
    let c = catalan_series::<BigRational>(w);
    let m = monotone_series::<BigRational>(w);
    let brute = |k: Known| ctx.census(k).series().truncate(w);
    {
        let f = brute(Known::Av4213_3142);
        let sum = (&f * &f).div(&(&one + &f))?;
        let skew = (&c * &f).div(&(&one + &c))?;
        rep.push_all(decomposable_identity("Av(4213,3142)", ctx.census(Known::Av4213_3142), n10, &sum, &skew)?);
    }
    {
        let f = brute(Known::Av4312_3142);
        let sum = (&f * &f).div(&(&one + &f))?;
        let skew = (&m * &(&(&f + &c) - &m)).div(&(&one + &m))?;
        rep.push_all(decomposable_identity("Av(4312,3142)", ctx.census(Known::Av4312_3142), n10, &sum, &skew)?);
    }
    let f5 = brute(Known::Av4231_3124);
    let sum5 = &(&(&x * &c) + &x) * &f5;
    let skew5 = &skew_indecomposable_231_3124(w) * &c;
    rep.push_all(decomposable_identity("Av(4231,3124)", ctx.census(Known::Av4231_3124), n10, &sum5, &skew5)?);

    // closure and the skew rule
    for k in [Known::Av4213_3142, Known::Av4312_3142] {
        rep.push_all(sum_closure(&format!("Av({})", k.basis()), ctx.census(k), n9)?);
    }
    rep.push_all(skew_rule("Av(4213,3142)", &Known::Av4213_3142.spec(), &ClassSpec::parse("213")?, 8));

    // auxiliary class counts
    let av231 = class_enum::enumerate(&ClassSpec::parse("231,3124")?, n10);
    rep.push(Check::series("Av(231,3124) counts", &counts_from_one(&av231, n10), &av_231_3124(w), 1));
    rep.push(Check::series(
        "Av(231,3124) skew indecomposables",
        &indecomposable_counts(&av231, n10, true)?,
        &skew_indecomposable_231_3124(w),
        1,
    ));
    let av312 = class_enum::enumerate(&ClassSpec::parse("312")?, n10);
    let shifted = &(&x * &c) + &x;
    rep.push(Check::series("Av(312) sum indecomposables", &indecomposable_counts(&av312, n10, false)?, &shifted, 1));

    // unique representations
    let s4213 = Known::Av4213_3142.spec();
    let av213 = ClassSpec::parse("213")?;
    let skew2 = (&c * &brute(Known::Av4213_3142)).div(&(&one + &c))?;
    rep.push_all(unique_representation(
        "Av(4213,3142) skew",
        ctx.census(Known::Av4213_3142),
        n9,
        true,
        &|a| !a.is_skew_decomposable() && s4213.contains(a),
        &|b| av213.contains(b),
        &skew2,
    )?);
    let s4231 = Known::Av4231_3124.spec();
    let p312 = ClassSpec::parse("312")?;
    rep.push_all(unique_representation(
        "Av(4231,3124) sum",
        ctx.census(Known::Av4231_3124),
        n9,
        false,
        &|a| !a.is_sum_decomposable() && p312.contains(a),
        &|b| s4231.contains(b),
        &sum5,
    )?);
    rep.push(skew_convention(ctx.census(Known::Av4231_3124), n9, &skew5)?);

    for k in Known::ALL {
        let r = verify_inflation_rules(&k.spec(), &k.grid(), &k.simple_lang(), &k.table(), n9)?;
        rep.extend(r);
    }
    Ok(rep.finish())
}

/// Which splitting convention gives Av(4231,3124) skew decomposables a
/// unique representation `Av(312) ⊖ Av(231,3124)`: skew-indecomposable
/// last block, or skew-indecomposable first block.
pub fn skew_convention(census: &ClassCensus, n_max: usize, series: &Series) -> Result<Check> {
    let p312 = ClassSpec::parse("312")?;
    let p231 = ClassSpec::parse("231,3124")?;
    let last = |a: &Permutation| p312.contains(a);
    let last_b = |b: &Permutation| !b.is_skew_decomposable() && p231.contains(b);
    let first = |a: &Permutation| !a.is_skew_decomposable() && p312.contains(a);
    let first_b = |b: &Permutation| p231.contains(b);
    let summarize = |checks: Vec<Check>| match checks.iter().find(|c| !c.pass) {
        None => "exact".to_string(),
        Some(c) => format!("fails at n={} ({})", c.n.unwrap_or(0), c.got),
    };
    let a = summarize(unique_representation("last", census, n_max, true, &last, &last_b, series)?);
    let b = summarize(unique_representation("first", census, n_max, true, &first, &first_b, series)?);
    let ok = a == "exact" || b == "exact";
    Ok(Check {
        name: "Av(4231,3124) skew representation convention".into(),
        n: Some(n_max),
        expected: "one convention exact".into(),
        got: format!("last block indecomposable: {a}; first block indecomposable: {b}"),
        pass: ok,
        first_divergence: None,
    })
}

/// Coefficient list as `u64`s, for display.
pub fn series_terms(s: &Series, from: usize) -> Vec<String> {
    s.coeffs()[from..]
        .iter()
        .map(|c| c.to_integer().to_u64().map(|v| v.to_string()).unwrap_or_else(|| c.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_classes_by_basis() {
        assert_eq!(Known::from_basis("3142,4213"), Some(Known::Av4213_3142));
        assert_eq!(Known::from_basis("3124 4231"), Some(Known::Av4231_3124));
        assert_eq!(Known::from_basis("123"), None);
        for k in Known::ALL {
            assert_eq!(k.published()[..3], [1, 2, 6]);
            assert!(!k.table().cases.is_empty());
        }
    }

    #[test]
    fn expected_simple_gfs_at_x() {
        // words from a and from c together give Jacobsthal numbers
        let s4 = expected_s_4312_3142().unwrap().specialize_all().unwrap().expand(8).unwrap();
        assert_eq!(s4, Series::from_ints(&[0, 0, 0, 0, 1, 0, 3, 2]));
        let both = &s4 + &s4.shift_up(1).truncate(8);
        assert_eq!(both, Series::from_ints(&[0, 0, 0, 0, 1, 1, 3, 5]));
        let s5 = expected_s_4231_3124().unwrap().specialize_all().unwrap();
        assert_eq!(s5.expand(8).unwrap(), Series::from_ints(&[0, 0, 0, 0, 2, 4, 8, 16]));
    }

    #[test]
    fn cheap_suites_pass() {
        assert!(radius().unwrap().passed());
        assert!(multivariate().unwrap().passed());
    }

    #[test]
    fn verify_suites_at_small_horizon() {
        let ctx = Context::new(6);
        for s in ["thm-4312-3142", "prop2", "grid-footnotes"] {
            let r = verify_suite(s, &ctx).unwrap();
            assert!(r.passed(), "{s}: {r}");
        }
    }
}
