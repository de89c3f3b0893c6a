//! Command-line front end.
//!
//! ```text
//! flagpos --type A3 --omit 2 describe
//! flagpos --type A3 --omit 3 seshadri --bundle Q --point all --json
//! flagpos --type A2 --omit 1,2 export-gkm --dot
//! ```

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::bundles::{restriction_table, BundleExpr};
use crate::error::Error;
use crate::flag::{invariant_curves, EdgeRecord, GkmGraph, Parabolic, DEFAULT_MAX_COSETS};
use crate::positivity::{
    positivity, seshadri, seshadri_all, PositivityVerdict, SeshadriResult, Witness,
};
use crate::rootsys::{CartanType, RootSystem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

const AFTER_HELP: &str = "\
Simple roots use Bourbaki numbering (1-based). --omit lists the nodes NOT in
the Levi of P; omitting node d of A(n-1) gives Gr(d,n), and leaving --omit
out gives the Borel (full flag). P1 is --type A1 --omit 1.

Bundle syntax:
  Q | S | T | triv(r) | L[c1,...,cr] | dual(e) | det(e) | sym(k,e) | wedge(k,e)
  e*e (tensor, binds tighter) | e+e (direct sum) | (e)
S, Q, T (tautological sub, quotient, tangent) need a Grassmannian.
L[...] takes fundamental-weight coefficients and must vanish on Levi nodes.

Exit codes:
  0  success
  1  precondition failed (e.g. seshadri on a bundle that is not nef)
  2  usage error
  3  |W/W_P| above --max-cosets";

#[derive(Debug, Parser)]
#[command(
    name = "flagpos",
    about = "Nef/ample certificates and Seshadri constants for equivariant bundles on G/P",
    after_help = AFTER_HELP
)]
struct Args {
    /// Cartan type, e.g. A3, B2, D4, E6, F4, G2
    #[arg(long = "type", global = true, value_name = "TYPE")]
    cartan: Option<String>,
    /// Omitted nodes, comma separated (default: all nodes, P = B)
    #[arg(long, global = true, value_name = "CSV")]
    omit: Option<String>,
    /// Bundle expression
    #[arg(long, global = true, value_name = "DSL", allow_hyphen_values = true)]
    bundle: Option<String>,
    /// Fixed point id, or 'all'
    #[arg(long, global = true, value_name = "ID|all")]
    point: Option<String>,
    /// Emit JSON instead of a table
    #[arg(long, global = true, conflicts_with = "dot")]
    json: bool,
    /// Emit Graphviz DOT (export-gkm, curves)
    #[arg(long, global = true)]
    dot: bool,
    /// Refuse instances with more fixed points than this
    #[arg(long = "max-cosets", global = true, value_name = "N", default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: u128,
    #[command(subcommand)]
    command: CommandArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
enum CommandArg {
    /// Count fixed points and invariant curves
    Describe,
    /// List invariant curves
    Curves,
    /// Splitting type of the bundle on every curve
    Restrict,
    /// Decide nefness
    Nef,
    /// Decide ampleness
    Ample,
    /// Seshadri constant at fixed points (bundle must be nef)
    Seshadri,
    /// Export the GKM graph as JSON or DOT
    ExportGkm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Describe,
    Curves,
    Restrict,
    Nef,
    Ample,
    Seshadri,
    ExportGkm,
}

impl From<CommandArg> for Command {
    fn from(c: CommandArg) -> Self {
        match c {
            CommandArg::Describe => Command::Describe,
            CommandArg::Curves => Command::Curves,
            CommandArg::Restrict => Command::Restrict,
            CommandArg::Nef => Command::Nef,
            CommandArg::Ample => Command::Ample,
            CommandArg::Seshadri => Command::Seshadri,
            CommandArg::ExportGkm => Command::ExportGkm,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointSelector {
    Id(usize),
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Table,
    Json,
    Dot,
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Query {
    pub cartan: CartanType,
    /// 1-based omitted nodes.
    pub omitted: Vec<usize>,
    pub command: Command,
    pub bundle: Option<(String, BundleExpr)>,
    pub point: Option<PointSelector>,
    pub output: OutputMode,
    pub max_cosets: u128,
}

impl Query {
    pub fn parabolic(&self) -> Parabolic {
        Parabolic::omitting(self.cartan.rank(), &self.omitted).expect("validated in parse_args")
    }
}

/// A rejected command line. `code` is 0 for `--help`/`--version`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl Into<String>) -> UsageError {
    UsageError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

pub fn parse_args<I, T>(argv: I) -> Result<Query, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(|e| UsageError {
        code: if e.use_stderr() { EXIT_USAGE } else { EXIT_OK },
        message: e.render().to_string(),
    })?;
    let cartan: CartanType = args
        .cartan
        .as_deref()
        .ok_or_else(|| usage("--type is required (e.g. --type A3)"))?
        .parse()
        .map_err(|e: Error| usage(format!("--type: {e}")))?;
    let rank = cartan.rank();
    let omitted = match &args.omit {
        None => (1..=rank).collect(),
        Some(csv) => csv
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| usage(format!("--omit: {s:?} is not a node number")))
            })
            .collect::<Result<Vec<_>, _>>()?,
    };
    Parabolic::omitting(rank, &omitted).map_err(|e| usage(format!("--omit: {e}")))?;

    let command = Command::from(args.command);
    let needs_bundle = matches!(
        command,
        Command::Restrict | Command::Nef | Command::Ample | Command::Seshadri
    );
    let bundle = match (&args.bundle, needs_bundle) {
        (Some(text), true) => {
            let e = text
                .parse::<BundleExpr>()
                .map_err(|e| usage(format!("--bundle: {e}")))?;
            Some((text.clone(), e))
        }
        (None, true) => return Err(usage("this command requires --bundle")),
        (Some(_), false) => return Err(usage("--bundle is not used by this command")),
        (None, false) => None,
    };
    let point = match (&args.point, command == Command::Seshadri) {
        (Some(p), true) if p == "all" => Some(PointSelector::All),
        (Some(p), true) => Some(PointSelector::Id(p.parse().map_err(|_| {
            usage(format!(
                "--point: {p:?} is neither a fixed point id nor 'all'"
            ))
        })?)),
        (None, true) => return Err(usage("seshadri requires --point <id|all>")),
        (Some(_), false) => return Err(usage("--point is only used by seshadri")),
        (None, false) => None,
    };
    let output = match (args.json, args.dot) {
        (_, true) if !matches!(command, Command::ExportGkm | Command::Curves) => {
            return Err(usage("--dot is only available for export-gkm and curves"))
        }
        (_, true) => OutputMode::Dot,
        (true, _) => OutputMode::Json,
        _ if command == Command::ExportGkm => OutputMode::Json,
        _ => OutputMode::Table,
    };
    Ok(Query {
        cartan,
        omitted,
        command,
        bundle,
        point,
        output,
        max_cosets: args.max_cosets,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescribeOutput {
    pub cartan_type: String,
    pub omitted: Vec<usize>,
    pub fixed_points: usize,
    pub invariant_curves: usize,
    pub dimension: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalOutput {
    pub numer: i64,
    pub denom: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeshadriRecord {
    pub point: usize,
    pub value: RationalOutput,
    pub attaining: Vec<Witness>,
}

impl From<&SeshadriResult> for SeshadriRecord {
    fn from(r: &SeshadriResult) -> Self {
        SeshadriRecord {
            point: r.point,
            value: RationalOutput {
                numer: *r.value.numer(),
                denom: *r.value.denom(),
            },
            attaining: r.attaining.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeshadriOutput {
    pub bundle: String,
    pub results: Vec<SeshadriRecord>,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotNef { .. } => EXIT_PRECONDITION,
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn verdict_table(name: &str, v: &PositivityVerdict, headline: Option<(&str, bool)>) -> String {
    let mut s = format!("bundle: {name}\n");
    if let Some((q, yes)) = headline {
        s += &format!("{q}: {}\n", if yes { "yes" } else { "no" });
    }
    s += &format!(
        "status: {}\nglobal_min: {}\n",
        v.status.as_str(),
        v.global_min
    );
    if let Some(w) = v.witness {
        s += &format!("witness: curve {} entry {}\n", w.curve, w.entry);
    }
    s += &format!("table_digest: {}\n", v.table_digest);
    s
}

fn render(q: &Query, g: &GkmGraph) -> Result<String, Error> {
    let name = q.bundle.as_ref().map(|(t, _)| t.as_str()).unwrap_or("");
    let bundle = q.bundle.as_ref().map(|(_, e)| e);
    Ok(match q.command {
        Command::Describe => {
            let d = DescribeOutput {
                cartan_type: q.cartan.to_string(),
                omitted: q.omitted.clone(),
                fixed_points: g.num_fixed_points(),
                invariant_curves: g.num_curves(),
                dimension: g.dimension(),
            };
            match q.output {
                OutputMode::Json => json(&d),
                _ => format!(
                    "{} with omitted nodes {:?}\n{} fixed points, {} invariant curves\ndimension {}\n",
                    d.cartan_type, d.omitted, d.fixed_points, d.invariant_curves, d.dimension
                ),
            }
        }
        Command::Curves => match q.output {
            OutputMode::Json => json(&g.export().edges),
            OutputMode::Dot => g.to_dot(),
            OutputMode::Table => {
                let edges: Vec<EdgeRecord> = g.export().edges;
                let mut s = String::from("curve\tendpoints\troot\n");
                for e in edges {
                    s += &format!("{}\t{} -- {}\t{:?}\n", e.id, e.source, e.target, e.root);
                }
                s
            }
        },
        Command::ExportGkm => match q.output {
            OutputMode::Dot => g.to_dot(),
            _ => json(&g.export()),
        },
        Command::Restrict => {
            let t = restriction_table(bundle.expect("validated"), g)?;
            match q.output {
                OutputMode::Json => json(&t),
                _ => {
                    let mut s = format!("bundle: {name}\n");
                    for (c, st) in g.curves().iter().zip(t.entries()) {
                        let [a, b] = c.endpoints();
                        s += &format!("curve {} ({a} -- {b}): {:?}\n", c.id(), st.entries());
                    }
                    s
                }
            }
        }
        Command::Nef | Command::Ample => {
            let v = positivity(bundle.expect("validated"), g)?;
            match q.output {
                OutputMode::Json => json(&v),
                _ if q.command == Command::Nef => {
                    verdict_table(name, &v, Some(("nef", v.status.is_nef())))
                }
                _ => verdict_table(name, &v, Some(("ample", v.status.is_ample()))),
            }
        }
        Command::Seshadri => {
            let e = bundle.expect("validated");
            let results = match q.point.expect("validated") {
                PointSelector::All => seshadri_all(e, g)?,
                PointSelector::Id(x) => vec![seshadri(e, g, x)?],
            };
            let out = SeshadriOutput {
                bundle: name.to_string(),
                results: results.iter().map(SeshadriRecord::from).collect(),
            };
            match q.output {
                OutputMode::Json => json(&out),
                _ => {
                    let mut s = format!("bundle: {name}\n");
                    for r in &out.results {
                        let curves: Vec<String> =
                            r.attaining.iter().map(|w| w.curve.to_string()).collect();
                        s += &format!(
                            "point {}: epsilon = {}/{} (attained on curves {})\n",
                            r.point,
                            r.value.numer,
                            r.value.denom,
                            curves.join(", ")
                        );
                    }
                    s
                }
            }
        }
    })
}

/// Executes a query, returning the exit code.
pub fn run(q: &Query, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let rs = RootSystem::new(q.cartan);
    let result = invariant_curves(&rs, &q.parabolic(), q.max_cosets)
        .and_then(|g| render(q, &g).map(|s| (s, g)));
    match result {
        Ok((s, _)) => {
            let _ = out.write_all(s.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::NotNef { curve, entry } = e {
                let _ = writeln!(err, "witness: curve {curve} entry {entry}");
            }
            exit_code(&e)
        }
    }
}

/// Parse and run; the binary's entry point.
pub fn main_with_args<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_args(argv) {
        Ok(q) => run(&q, out, err),
        Err(u) if u.code == EXIT_OK => {
            let _ = out.write_all(u.message.as_bytes());
            EXIT_OK
        }
        Err(u) => {
            let _ = err.write_all(u.message.as_bytes());
            if !u.message.ends_with('\n') {
                let _ = writeln!(err);
            }
            u.code
        }
    }
}
