//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the text for standard output, so it can be tested in-process.
//!
//! Exit codes: 0 success, 1 invalid input, 2 unsupported, 3 no certificate.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::aomoto::{self, CertifyOptions, Convention, RankThree, RootCertificate, Route};
use crate::arrangement::{self, Arrangement, ArrangementFile};
use crate::conjecture::{self, ConjectureReport};
use crate::error::Error;
use crate::ratfunc::parse_expression;
use crate::rational::parse_rational;
use crate::zeta::{self, ZetaReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_NO_CERTIFICATE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Standard,
    InfinityExcluded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    AomotoDirect,
    IncidenceConditions,
    DominantPoint,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::AomotoDirect => Route::AomotoDirect,
            RouteArg::IncidenceConditions => Route::IncidenceConditions,
            RouteArg::DominantPoint => Route::DominantPoint,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "arrzeta", version, about = "Zeta functions and root certificates for hyperplane arrangements")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Edges of the intersection lattice with dense and good flags.
    Lattice {
        /// Arrangement file, or `-` for standard input.
        input: String,
    },
    /// Topological zeta function at the origin and its pole report.
    Zeta { input: String },
    /// Candidate and actual poles.
    Poles { input: String },
    /// Search for a certificate that a root -k/d belongs to the b-function.
    Certify {
        input: String,
        /// Root to certify as `p/q`; defaults to `-3/d`.
        #[arg(long, allow_hyphen_values = true)]
        root: Option<String>,
        #[arg(long, value_enum, default_value = "standard")]
        convention: ConventionArg,
        /// Restrict to these routes (repeatable).
        #[arg(long, value_enum)]
        route: Vec<RouteArg>,
        /// Force the hyperplane sent to infinity (0-based).
        #[arg(long)]
        infinity: Option<usize>,
        /// Force the point p0 by projective coordinates, e.g. `0:0:1`.
        #[arg(long)]
        p0: Option<String>,
    },
    /// Certify every dense edge through its quotient.
    Conjecture { input: String },
    /// Parse a rational function in `s` and optionally evaluate it.
    Eval {
        /// Expression, or `@path` to read it from a file.
        #[arg(allow_hyphen_values = true)]
        expression: String,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Replay a certificate produced by `certify`.
    Verify { input: String },
}

/// What `certify` prints and `verify` reads.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateEnvelope {
    pub arrangement: ArrangementFile,
    pub certificate: RootCertificate,
}

struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::Unsupported(_) => (EXIT_UNSUPPORTED, "unsupported"),
            Error::WrongRank { .. } => (EXIT_UNSUPPORTED, "wrong-rank"),
            Error::Parse { .. } => (EXIT_INVALID, "parse"),
            Error::NotCentral => (EXIT_INVALID, "not-central"),
            Error::NotEssential => (EXIT_INVALID, "not-essential"),
            Error::NotReduced => (EXIT_INVALID, "not-reduced"),
            Error::Decomposable => (EXIT_INVALID, "decomposable"),
            Error::Pole(_) => (EXIT_INVALID, "pole"),
            Error::NonLinearDenominator => (EXIT_INVALID, "non-linear-denominator"),
            _ => (EXIT_INVALID, "invalid-input"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        kind: "invalid-input",
        message: message.into(),
    }
}

type Outcome = std::result::Result<String, Failure>;

fn read_input(path: &str, stdin: &mut dyn Read) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text).map_err(|e| invalid(format!("standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn load(path: &str, stdin: &mut dyn Read) -> std::result::Result<Arrangement, Failure> {
    Ok(Arrangement::from_json(&read_input(path, stdin)?)?)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

#[derive(Serialize)]
struct LatticeEdge<'a> {
    #[serde(flatten)]
    edge: &'a arrangement::Edge,
    mobius: i64,
    good: Option<bool>,
}

fn lattice(a: &Arrangement, format: Format) -> Outcome {
    let l = a.lattice();
    let class = a.classify();
    let edges: Vec<LatticeEdge> = l
        .edges()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, e)| LatticeEdge {
            edge: e,
            mobius: l.mobius()[i],
            good: l.is_good_dense_edge(i),
        })
        .collect();
    let (euler, indecomposable) = if a.is_central() {
        (Some(arrangement::euler_characteristic(a)?), Some(arrangement::is_indecomposable(a)?))
    } else {
        (None, None)
    };
    if format == Format::Json {
        return Ok(to_json(&json!({
            "dim": a.dim(),
            "degree": a.degree(),
            "central": class.central,
            "essential": class.essential,
            "reduced": class.reduced,
            "edges": edges,
            "poincare_polynomial": l.poincare_polynomial(),
            "euler_characteristic": euler,
            "indecomposable": indecomposable,
            "moderate_type": l.is_moderate_type(),
        })));
    }
    let mut out = String::new();
    writeln!(out, "dim {}  degree {}  central {}  essential {}  reduced {}", a.dim(), a.degree(), class.central, class.essential, class.reduced).unwrap();
    if let (Some(x), Some(ind)) = (euler, indecomposable) {
        writeln!(out, "euler characteristic {x}  indecomposable {ind}").unwrap();
    }
    writeln!(out, "moderate type {}", l.is_moderate_type()).unwrap();
    writeln!(out, "codim  mult  mobius  dense  good  hyperplanes").unwrap();
    for e in &edges {
        let good = match e.good {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        writeln!(
            out,
            "{:>5}  {:>4}  {:>6}  {:>5}  {:>4}  {:?}",
            e.edge.codim,
            e.edge.mult,
            e.mobius,
            if e.edge.dense { "yes" } else { "no" },
            good,
            e.edge.indices
        )
        .unwrap();
    }
    Ok(out)
}

fn opt(q: &Option<crate::linalg::Q>) -> String {
    q.as_ref().map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn zeta_text(r: &ZetaReport) -> String {
    let mut out = String::new();
    writeln!(out, "Z(s) = {}", r.zeta).unwrap();
    writeln!(out, "rank {}  degree {}  reduced {}  indecomposable {}", r.rank, r.degree, r.reduced, r.indecomposable).unwrap();
    let t = &r.top_pole;
    writeln!(
        out,
        "pole {} at ({}s + {}): order {}  coefficient {}  closed form {}",
        t.value,
        t.factor.0,
        t.factor.1,
        t.order,
        opt(&t.coefficient),
        opt(&t.closed_form_coefficient)
    )
    .unwrap();
    for c in &r.candidate_coefficients {
        writeln!(out, "candidate {} at ({}s + {}): order {}  coefficient {}", c.value, c.factor.0, c.factor.1, c.order, opt(&c.coefficient)).unwrap();
    }
    out
}

fn zeta_cmd(a: &Arrangement, format: Format) -> Outcome {
    let r = zeta::pole_report(a)?;
    Ok(match format {
        Format::Json => to_json(&r),
        Format::Text => zeta_text(&r),
    })
}

fn poles_cmd(a: &Arrangement, format: Format) -> Outcome {
    let candidates = zeta::candidate_poles(a);
    let padic = zeta::padic_candidates(a);
    // Actual poles need the zeta function, which is only available in low rank.
    let actual = if a.is_central() {
        match zeta::pole_report(a) {
            Ok(r) => Some(r.actual_poles),
            Err(Error::Unsupported(_)) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    if format == Format::Json {
        return Ok(to_json(&json!({
            "candidate_poles": candidates,
            "padic_candidates": padic,
            "actual_poles": actual,
        })));
    }
    let mut out = String::new();
    for c in &candidates {
        writeln!(out, "candidate {}  from {:?} (codim {}, mult {})", c.value, c.witness, c.codim, c.mult).unwrap();
    }
    match &actual {
        Some(ps) => {
            for p in ps {
                writeln!(out, "pole {}  order {}  coefficient {}", p.value, p.order, opt(&p.coefficient)).unwrap();
            }
        }
        None => writeln!(out, "actual poles not available").unwrap(),
    }
    Ok(out)
}

fn parse_point(text: &str) -> std::result::Result<Vec<crate::linalg::Q>, Failure> {
    text.split(':').map(|c| parse_rational(c).map_err(Failure::from)).collect()
}

fn certificate_text(c: &RootCertificate) -> String {
    let mut out = String::new();
    writeln!(out, "root {}  k {}  route {}", c.root, c.k, c.route.name()).unwrap();
    writeln!(out, "infinity {}  subset {:?}", c.infinity, c.subset).unwrap();
    if let Some(p) = &c.p0 {
        writeln!(out, "p0 ({})  lines {:?}", p.coords.join(":"), p.lines).unwrap();
    }
    if let Some(x) = c.auxiliary {
        writeln!(out, "auxiliary line {x}").unwrap();
    }
    if let Some([h0, h1, h2]) = c.cohomology {
        writeln!(out, "cohomology dims {h0} {h1} {h2}").unwrap();
    }
    writeln!(out, "checks {}", c.checks.join(", ")).unwrap();
    out
}

#[allow(clippy::too_many_arguments)]
fn certify_cmd(
    a: &Arrangement,
    format: Format,
    root: Option<&str>,
    convention: ConventionArg,
    routes: &[RouteArg],
    infinity: Option<usize>,
    p0: Option<&str>,
) -> Outcome {
    let rt = RankThree::new(a)?;
    let mut opts = CertifyOptions {
        convention: match convention {
            ConventionArg::Standard => Convention::Standard,
            ConventionArg::InfinityExcluded => Convention::InfinityExcluded,
        },
        infinity,
        ..CertifyOptions::default()
    };
    if !routes.is_empty() {
        opts.routes = routes.iter().map(|&r| r.into()).collect();
    }
    if let Some(r) = root {
        opts = opts.with_root(&parse_rational(r)?, a.degree())?;
    }
    if let Some(p) = p0 {
        let coords = parse_point(p)?;
        let idx = rt
            .point_by_coords(&coords)
            .ok_or_else(|| invalid(format!("({p}) is not an intersection point of the lines")))?;
        opts.p0 = Some(rt.lines().point(idx).lines.clone());
    }
    let cert = aomoto::certify_root_with(a, &opts)?.ok_or_else(|| Failure {
        code: EXIT_NO_CERTIFICATE,
        kind: "no-certificate",
        message: format!("no certificate found for root {}", -crate::linalg::Q::new(opts.k.into(), a.degree().into())),
    })?;
    Ok(match format {
        Format::Json => to_json(&CertificateEnvelope {
            arrangement: a.to_file(),
            certificate: cert,
        }),
        Format::Text => certificate_text(&cert),
    })
}

fn conjecture_text(r: &ConjectureReport) -> String {
    let mut out = String::new();
    writeln!(out, "verdict {:?}  moderate type {}", r.verdict, r.moderate_type).unwrap();
    writeln!(out, "codim  mult  good  outcome         case                hyperplanes").unwrap();
    for e in &r.edges {
        let case = e.quotient.certified_by.map_or("-", |c| c.name());
        writeln!(
            out,
            "{:>5}  {:>4}  {:>4}  {:<14}  {:<18}  {:?}",
            e.codim,
            e.mult,
            if e.good { "yes" } else { "no" },
            e.outcome.name(),
            case,
            e.indices
        )
        .unwrap();
    }
    out
}

fn conjecture_cmd(a: &Arrangement, format: Format) -> Outcome {
    let r = conjecture::certify_dense_edges(a)?;
    Ok(match format {
        Format::Json => to_json(&r),
        Format::Text => conjecture_text(&r),
    })
}

fn eval_cmd(expression: &str, at: Option<&str>, format: Format) -> Outcome {
    let text = match expression.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| invalid(format!("{path}: {e}")))?,
        None => expression.to_string(),
    };
    let f = parse_expression(text.trim())?;
    let value = match at {
        Some(s) => Some(f.eval(&parse_rational(s)?)?),
        None => None,
    };
    Ok(match format {
        Format::Json => to_json(&json!({
            "function": f,
            "at": at.map(|s| parse_rational(s).expect("parsed above").to_string()),
            "value": value.as_ref().map(|v| v.to_string()),
        })),
        Format::Text => match value {
            Some(v) => format!("{v}\n"),
            None => format!("{f}\n"),
        },
    })
}

fn verify_cmd(input: &str, stdin: &mut dyn Read, format: Format) -> Outcome {
    let text = read_input(input, stdin)?;
    let env: CertificateEnvelope =
        serde_json::from_str(&text).map_err(|e| invalid(format!("certificate file: {e}")))?;
    let a = env.arrangement.into_arrangement()?;
    let v = aomoto::verify(&a, &env.certificate)?;
    if !v.ok {
        return Err(Failure {
            code: EXIT_INVALID,
            kind: "verification-failed",
            message: format!("failed checks: {}", v.failed.join(", ")),
        });
    }
    Ok(match format {
        Format::Json => to_json(&v),
        Format::Text => "ok\n".to_string(),
    })
}

fn failure_output(f: &Failure, format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({ "error": { "kind": f.kind, "message": f.message } })),
        Format::Text => format!("error: {}\n", f.message),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INVALID,
            };
            if code == EXIT_OK {
                return (code, e.to_string());
            }
            let f = Failure {
                code,
                kind: "usage",
                message: e.to_string().trim_end().to_string(),
            };
            return (code, failure_output(&f, Format::Json));
        }
    };
    let format = cli.format;
    let result = match &cli.command {
        Command::Lattice { input } => load(input, stdin).and_then(|a| lattice(&a, format)),
        Command::Zeta { input } => load(input, stdin).and_then(|a| zeta_cmd(&a, format)),
        Command::Poles { input } => load(input, stdin).and_then(|a| poles_cmd(&a, format)),
        Command::Certify {
            input,
            root,
            convention,
            route,
            infinity,
            p0,
        } => load(input, stdin)
            .and_then(|a| certify_cmd(&a, format, root.as_deref(), *convention, route, *infinity, p0.as_deref())),
        Command::Conjecture { input } => load(input, stdin).and_then(|a| conjecture_cmd(&a, format)),
        Command::Eval { expression, at } => eval_cmd(expression, at.as_deref(), format),
        Command::Verify { input } => verify_cmd(input, stdin, format),
    };
    match result {
        Ok(out) => (EXIT_OK, out),
        Err(f) => (f.code, failure_output(&f, format)),
    }
}
