//! Command-line front end: JSON documents in, JSON or text reports out.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gcm::{
    classify, coxeter_of, is_simply_laced, is_two_spherical, CoxeterMatrix, GeneralizedCartanMatrix, Order,
};
use crate::growth::{growth_series, Evaluation, Radius};
use crate::hyperbolic::{find_disjoint_triple, simplicity_witness, SimplicityWitness, TripleWitness};
use crate::poly::Poly;
use crate::roots::{Root, RootLiteral};
use crate::verdict::{analyze, Assumptions, ComponentSummary, Flag, LatticeInput, Verdict};
use crate::weyl::WeylGroup;

pub const BUDGET_ENV: &str = "TWINLAT_BUDGET";

pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const INVALID_INPUT: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const INAPPLICABLE: i32 = 4;
    pub const INTERNAL: i32 = 5;
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotGcm(_) | Error::InvalidCoxeter(_) | Error::NotCrystallographic(_) | Error::InvalidInput(_) => {
            exit::INVALID_INPUT
        }
        Error::BudgetExceeded(_) | Error::Overflow => exit::BUDGET,
        Error::Inapplicable(_) => exit::INAPPLICABLE,
        _ => exit::INTERNAL,
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum BigNumber {
    Num(u64),
    Str(String),
}

/// The input file.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default)]
    gcm: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    coxeter: Option<Vec<Vec<Order>>>,
    #[serde(default)]
    q: Option<u64>,
    #[serde(default)]
    root_group_orders: Option<Vec<u64>>,
    #[serde(default)]
    torus_order: Option<BigNumber>,
    #[serde(default)]
    budget: Option<Budget>,
    #[serde(default)]
    assumptions: Option<Assumptions>,
}

/// A validated input document.
#[derive(Debug, Clone)]
pub struct Problem {
    pub gcm: Option<GeneralizedCartanMatrix>,
    pub coxeter: CoxeterMatrix,
    pub q: Option<u64>,
    pub root_group_orders: Option<Vec<u64>>,
    pub torus_order: Option<BigUint>,
    pub budget: Budget,
    pub assumptions: Assumptions,
}

impl Problem {
    pub fn parse(text: &str) -> Result<Problem> {
        let doc: InputDocument =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed input document: {e}")))?;
        let (gcm, coxeter) = match (doc.gcm, doc.coxeter) {
            (Some(rows), None) => {
                let g = GeneralizedCartanMatrix::new(rows)?;
                let c = coxeter_of(&g);
                (Some(g), c)
            }
            (None, Some(rows)) => (None, CoxeterMatrix::new(rows)?),
            _ => return Err(Error::InvalidInput("exactly one of \"gcm\" and \"coxeter\" is required".into())),
        };
        let torus_order = match doc.torus_order {
            None => None,
            Some(BigNumber::Num(n)) => Some(BigUint::from(n)),
            Some(BigNumber::Str(s)) => Some(
                s.parse()
                    .map_err(|_| Error::InvalidInput(format!("torus_order {s:?} is not a non-negative integer")))?,
            ),
        };
        Ok(Problem {
            gcm,
            coxeter,
            q: doc.q,
            root_group_orders: doc.root_group_orders,
            torus_order,
            budget: doc.budget.unwrap_or_default(),
            assumptions: doc.assumptions.unwrap_or_default(),
        })
    }

    /// The Cartan matrix, realizing a crystallographic Coxeter matrix if needed.
    pub fn cartan(&self) -> Result<GeneralizedCartanMatrix> {
        match &self.gcm {
            Some(g) => Ok(g.clone()),
            None => GeneralizedCartanMatrix::realize(&self.coxeter),
        }
    }

    pub fn group(&self) -> Result<WeylGroup> {
        Ok(WeylGroup::with_ball_cap(self.cartan()?, self.budget.ball_cap))
    }

    pub fn lattice_input(&self) -> Result<LatticeInput> {
        let q = self.q.ok_or_else(|| Error::InvalidInput("\"q\" is required for this command".into()))?;
        LatticeInput::with_options(
            self.cartan()?,
            q,
            self.root_group_orders.clone(),
            self.torus_order.clone(),
            self.assumptions.clone(),
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub rank: usize,
    #[serde(rename = "type")]
    pub kind: String,
    pub irreducible: bool,
    pub infinite: bool,
    pub components: Vec<ComponentSummary>,
    pub coxeter: Vec<Vec<Order>>,
    pub crystallographic: bool,
    pub two_spherical: bool,
    pub critical_pairs: Vec<(usize, usize)>,
    pub simply_laced: bool,
}

pub fn classify_report(p: &Problem) -> ClassifyReport {
    let cl = classify(&p.coxeter);
    let q_min = p.root_group_orders.as_ref().and_then(|o| o.iter().min().copied()).or(p.q);
    let ts = is_two_spherical(&p.coxeter, q_min);
    let summary: crate::verdict::ClassificationSummary = (&cl).into();
    ClassifyReport {
        rank: p.coxeter.size(),
        kind: summary.label,
        irreducible: cl.irreducible,
        infinite: cl.infinite,
        components: summary.components,
        coxeter: p.coxeter.rows(),
        crystallographic: p.gcm.is_some() || p.coxeter.is_crystallographic(),
        two_spherical: ts.two_spherical,
        critical_pairs: ts.critical_pairs,
        simply_laced: is_simply_laced(&p.coxeter),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowthReport {
    pub series: String,
    pub numerator: Poly,
    pub denominator: Poly,
    pub radius: Radius,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluation: Option<EvalReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub q: u64,
    /// `W(1/q)`, exact, or "divergent".
    pub value: Evaluation,
}

pub fn growth_report(p: &Problem, coeffs: Option<usize>, eval: Option<u64>) -> Result<GrowthReport> {
    let s = growth_series(&p.coxeter)?;
    let evaluation = match eval {
        Some(0) => return Err(Error::InvalidInput("--eval needs q ≥ 1".into())),
        Some(q) => Some(EvalReport { q, value: s.evaluate_at(&BigRational::new(One::one(), q.into())) }),
        None => None,
    };
    Ok(GrowthReport {
        series: s.to_string(),
        coefficients: coeffs.map(|n| s.coefficients(n).iter().map(|c| c.to_string()).collect()),
        numerator: s.numerator,
        denominator: s.denominator,
        radius: s.radius,
        evaluation,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessReport {
    Simplicity { witness: Box<SimplicityWitness>, reverified_at_radius: usize },
    Triple { witness: Box<TripleWitness>, reverified_at_radius: usize },
}

fn parse_root(g: &WeylGroup, text: &str) -> Result<Root> {
    let lit: RootLiteral =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed root literal {text:?}: {e}")))?;
    Root::from_literal(g, &lit)
}

pub fn witness_report(p: &Problem, alpha: &str, h: Option<u32>, beta: Option<&str>) -> Result<WitnessReport> {
    let g = p.group()?;
    let alpha = parse_root(&g, alpha)?;
    match beta {
        Some(b) => {
            let beta = parse_root(&g, b)?;
            let w = find_disjoint_triple(&g, &alpha, &beta, &p.budget)?;
            let r = w.radius + 2;
            if !w.verify(&g, r)? {
                return Err(Error::Inconsistent("triple failed re-verification".into()));
            }
            Ok(WitnessReport::Triple { witness: Box::new(w), reverified_at_radius: r })
        }
        None => {
            let w = simplicity_witness(&g, &alpha, h.unwrap_or(1), &p.budget)?;
            let r = w.triple.radius + 2;
            if !w.verify(&g, r)? {
                return Err(Error::Inconsistent("witness failed re-verification".into()));
            }
            Ok(WitnessReport::Simplicity { witness: Box::new(w), reverified_at_radius: r })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "twinlat", version, about = "Coxeter and Kac-Moody hypothesis checker for twin building lattices")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the Coxeter system.
    Classify {
        /// Input JSON file, or "-" for stdin.
        file: String,
    },
    /// Growth series, its coefficients and its value at 1/q.
    Growth {
        file: String,
        /// Print c_0 .. c_N.
        #[arg(long, value_name = "N")]
        coeffs: Option<usize>,
        /// Evaluate W(1/Q).
        #[arg(long, value_name = "Q")]
        eval: Option<u64>,
    },
    /// Full hypothesis report; needs "q".
    Verdict { file: String },
    /// Disjoint-root witnesses.
    Witness {
        file: String,
        /// Root literal, e.g. '{"simple":0,"sign":"-"}'.
        #[arg(long, value_name = "ROOT")]
        alpha: String,
        /// Exponent h of the construction (default 1).
        #[arg(long, value_name = "H")]
        h: Option<u32>,
        /// Second disjoint root: search for a third one instead.
        #[arg(long, value_name = "ROOT", conflicts_with = "h")]
        beta: Option<String>,
    },
}

fn read_input(file: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    if file == "-" {
        stdin.read_to_string(&mut s).map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(file).map_err(|e| Error::InvalidInput(format!("cannot read {file}: {e}")))?;
    }
    Ok(s)
}

fn load(file: &str, stdin: &mut dyn Read) -> Result<Problem> {
    let mut p = Problem::parse(&read_input(file, stdin)?)?;
    if let Ok(v) = std::env::var(BUDGET_ENV) {
        p.budget.ball_cap =
            v.trim().parse().map_err(|_| Error::InvalidInput(format!("{BUDGET_ENV}={v:?} is not a ball size")))?;
    }
    Ok(p)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn mark(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn flag_line(out: &mut String, name: &str, f: &Flag, basis: &str) {
    let _ = writeln!(out, "{name:<24} {:<5} [{basis}]", mark(f.value));
}

pub fn render_classify_text(r: &ClassifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "type             {}", r.kind);
    let _ = writeln!(s, "rank             {}", r.rank);
    let _ = writeln!(s, "irreducible      {}", mark(r.irreducible));
    let _ = writeln!(s, "infinite         {}", mark(r.infinite));
    let _ = writeln!(s, "two-spherical    {}", mark(r.two_spherical));
    let _ = writeln!(s, "simply laced     {}", mark(r.simply_laced));
    if !r.critical_pairs.is_empty() {
        let _ = writeln!(s, "critical pairs   {:?}", r.critical_pairs);
    }
    s
}

pub fn render_growth_text(r: &GrowthReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "W(t) = {}", r.series);
    match r.radius.approx() {
        Some(x) => {
            let _ = writeln!(s, "radius ~ {x:.12}");
        }
        None => {
            let _ = writeln!(s, "radius = inf");
        }
    }
    if let Some(c) = &r.coefficients {
        let _ = writeln!(s, "coefficients [{}]", c.join(", "));
    }
    if let Some(e) = &r.evaluation {
        let _ = writeln!(s, "W(1/{}) = {}", e.q, e.value);
    }
    s
}

pub fn render_verdict_text(v: &Verdict) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "type                     {}", v.classification.label);
    let _ = writeln!(s, "q = {}, q_min = {}, |T| = {}", v.q, v.lattice.q_min, v.torus_order);
    flag_line(&mut s, "irreducible", &v.irreducible, "classification");
    flag_line(&mut s, "infinite", &v.infinite, "classification");
    flag_line(&mut s, "non-affine", &v.non_affine, "classification");
    flag_line(&mut s, "standing hypotheses", &v.s0, "irreducible, infinite, non-affine");
    flag_line(&mut s, "two-spherical", &Flag { value: v.two_spherical.value, trail: vec![] }, "Coxeter matrix");
    flag_line(&mut s, "simply laced", &v.simply_laced, "Coxeter matrix");
    let _ = writeln!(
        s,
        "{:<24} {:<5} [lattice criterion W(1/q_min) = {}]",
        "lattice",
        mark(v.lattice.value),
        v.lattice.growth_value
    );
    flag_line(&mut s, "rank one perfect", &v.rank_one_perfect, "q_min > 3");
    let verdict = serde_json::to_value(v.simplicity.verdict).unwrap();
    let _ = writeln!(
        s,
        "{:<24} {:<5} [simplicity theorem for twin building lattices]",
        "simplicity",
        verdict.as_str().unwrap()
    );
    let _ = writeln!(
        s,
        "{:<24} {:<5} [finite quotient bound, product of root group orders]",
        "finite quotient bound", v.finite_quotient_bound
    );
    let fired = v.quotients_trivial.fired.map(|c| serde_json::to_value(c).unwrap().as_str().unwrap().to_string());
    let _ = writeln!(
        s,
        "{:<24} {:<5} [no finite quotients{}]",
        "quotients trivial",
        mark(v.quotients_trivial.value),
        fired.map(|f| format!(": {f}")).unwrap_or_default()
    );
    let _ = writeln!(
        s,
        "{:<24} {:<5} [simple Kazhdan corollary, q_min > {}]",
        "kazhdan",
        mark(v.kazhdan.value),
        v.kazhdan.threshold
    );
    flag_line(&mut s, "finitely presented", &v.finitely_presented, "two-spherical and q_min > 2");
    flag_line(&mut s, "fprs guaranteed", &v.fprs_guaranteed, "fixed points of root subgroups");
    flag_line(&mut s, "commensurator discrete", &v.commensurator_discrete, "non-arithmeticity corollary");
    flag_line(&mut s, "flat rank >= 2", &v.flat_rank_geq_2, "Moussong criterion");
    s
}

pub fn render_witness_text(r: &WitnessReport) -> String {
    let mut s = String::new();
    match r {
        WitnessReport::Simplicity { witness: w, reverified_at_radius } => {
            let _ = writeln!(s, "alpha  {}", w.alpha);
            let _ = writeln!(s, "h      {}", w.h);
            let _ = writeln!(s, "eta    {}", w.eta);
            let _ = writeln!(s, "beta   {}", w.beta);
            let _ = writeln!(s, "xi     {}", w.xi);
            let _ = writeln!(s, "gamma  {}", w.gamma);
            let _ = writeln!(s, "tau    {}", w.tau);
            let _ = writeln!(s, "tau'   {}", w.tau_prime);
            let _ = writeln!(s, "beta in eta: {}", mark(w.beta_in_eta));
            let _ = writeln!(s, "pairwise disjoint, re-verified at radius {reverified_at_radius}");
        }
        WitnessReport::Triple { witness: w, reverified_at_radius } => {
            let _ = writeln!(s, "alpha  {}", w.alpha);
            let _ = writeln!(s, "beta   {}", w.beta);
            let _ = writeln!(s, "gamma  {}", w.gamma);
            let _ = writeln!(s, "found at depth {}, re-verified at radius {reverified_at_radius}", w.radius);
        }
    }
    s
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<String> {
    let text = cli.format == Format::Text;
    Ok(match &cli.command {
        Command::Classify { file } => {
            let r = classify_report(&load(file, stdin)?);
            if text {
                render_classify_text(&r)
            } else {
                json(&r)
            }
        }
        Command::Growth { file, coeffs, eval } => {
            let r = growth_report(&load(file, stdin)?, *coeffs, *eval)?;
            if text {
                render_growth_text(&r)
            } else {
                json(&r)
            }
        }
        Command::Verdict { file } => {
            let v = analyze(&load(file, stdin)?.lattice_input()?)?;
            if text {
                render_verdict_text(&v)
            } else {
                json(&v)
            }
        }
        Command::Witness { file, alpha, h, beta } => {
            let r = witness_report(&load(file, stdin)?, alpha, *h, beta.as_deref())?;
            if text {
                render_witness_text(&r)
            } else {
                json(&r)
            }
        }
    })
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let rendered = e.render().to_string();
            let _ = if code == exit::OK {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, stdin) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            exit::OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "twinlat: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["twinlat"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parse_requires_exactly_one_matrix() {
        assert!(Problem::parse(r#"{"gcm":[[2]]}"#).is_ok());
        assert!(Problem::parse(r#"{"coxeter":[[1,"inf"],["inf",1]]}"#).is_ok());
        assert!(matches!(Problem::parse(r#"{"q":2}"#), Err(Error::InvalidInput(_))));
        assert!(matches!(Problem::parse(r#"{"gcm":[[2,1],[1,2]]}"#), Err(Error::NotGcm(_))));
    }

    #[test]
    fn torus_order_accepts_big_strings() {
        let p = Problem::parse(r#"{"gcm":[[2]],"q":2,"torus_order":"123456789012345678901234567890"}"#).unwrap();
        assert_eq!(p.torus_order.unwrap().to_string(), "123456789012345678901234567890");
        assert!(Problem::parse(r#"{"gcm":[[2]],"torus_order":"-3"}"#).is_err());
    }

    #[test]
    fn coxeter_input_needs_crystallographic_for_verdict() {
        let p = Problem::parse(r#"{"coxeter":[[1,5],[5,1]],"q":2}"#).unwrap();
        assert!(p.lattice_input().is_err());
        let p = Problem::parse(r#"{"coxeter":[[1,4],[4,1]],"q":2}"#).unwrap();
        assert_eq!(p.cartan().unwrap().size(), 2);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::InvalidInput("x".into())), exit::INVALID_INPUT);
        assert_eq!(exit_code(&Error::BudgetExceeded("x".into())), exit::BUDGET);
        assert_eq!(exit_code(&Error::Inapplicable("x".into())), exit::INAPPLICABLE);
        let (code, _, err) = run_str(&["classify", "-"], "[");
        assert_eq!(code, exit::INVALID_INPUT);
        assert!(err.starts_with("twinlat: "));
        let (code, out, _) = run_str(&["--version"], "");
        assert_eq!(code, exit::OK);
        assert!(out.contains("twinlat"));
    }

    #[test]
    fn growth_in_process() {
        let (code, out, _) =
            run_str(&["growth", "-", "--coeffs", "4", "--format", "text"], r#"{"gcm":[[2,-2],[-2,2]]}"#);
        assert_eq!(code, 0);
        assert_eq!(out, "W(t) = (1+t)/(1-t)\nradius ~ 1.000000000000\ncoefficients [1, 2, 2, 2, 2]\n");
    }
}
