//! Command-line front end for `towercalc-core`.
//!
//! [`run`] parses arguments, dispatches to exactly one core operation and
//! writes the result in the requested format. Exit status is 0 on success,
//! 1 on input or domain errors and 2 on usage errors.

pub mod format;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use towercalc_core::chains::{
    check_normal_invariant, homology, mapping_cone, reduced_homology, relative_homology,
    suspension, verify_desuspension,
};
use towercalc_core::disklinks::{pi0_cardinality, pi1_description, ses_rank_report};
use towercalc_core::hilton::{looped_product_ranks, wedge_pi_ranks, SphereWedge};
use towercalc_core::lie::{lyndon_words, witt_rank};
use towercalc_core::tower::*;
use towercalc_core::ChainMap;

use format::{complex_from_value, complex_to_value, int_value, map_from_value, InputError};
use report::{group_value, render_text, summary_value, table_value, uint_value, Obj};

pub const MAX_DEGREE_VAR: &str = "TOWER_CALC_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: i64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Parser, Debug)]
#[command(name = "tower-calc", version, about = "Exact calculations for unlinked embedding towers")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integral homology of a chain complex file.
    Homology {
        file: PathBuf,
        /// FILE is a chain map A -> C; compute H_*(C, A).
        #[arg(long, conflicts_with_all = ["suspend", "reduced"])]
        relative: bool,
        /// Suspend the complex first.
        #[arg(long)]
        suspend: bool,
        /// Reduced homology (needs an augmentable complex).
        #[arg(long)]
        reduced: bool,
    },
    /// Mapping cone of a chain map file, with its homology.
    Cone { file: PathBuf },
    /// Compare H_{k-1} of the Thom space model with H_k(P, dP).
    DesuspCheck { file: PathBuf },
    /// Decide whether a map S^{n-1} -> Thom space is a normal invariant.
    NormalInvariant {
        file: PathBuf,
        #[arg(long)]
        n: i64,
    },
    /// Lyndon words over g letters, up to the given length.
    Lyndon {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=26))]
        g: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
        len: u64,
    },
    /// Rank of the degree-len part of the free Lie algebra on g generators.
    Witt {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        g: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        len: u64,
    },
    /// Rational homotopy ranks of a wedge of spheres.
    PiWedge {
        /// Sphere dimensions, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<u32>,
        #[arg(long)]
        q_max: i64,
        /// Report pi_* of the loop space of a product of t copies instead.
        #[arg(long)]
        loop_t: Option<u64>,
    },
    /// Connectivity estimates along the tower.
    Tower {
        #[command(flatten)]
        params: TowerArgs,
        #[command(subcommand)]
        query: TowerQuery,
    },
    /// Rank profile (upper bounds) of a tower layer.
    Layer {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        j: i64,
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        q_min: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        q_max: Option<i64>,
    },
    /// Degree and rank of the obstruction group at a stage.
    Obstruction {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        j: i64,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Connectivities of the comparison maps.
    Compare {
        #[command(flatten)]
        params: TowerArgs,
    },
    /// Embeddings of t disjoint disks in D^n.
    DiskLinks {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
        #[command(subcommand)]
        query: DiskQuery,
    },
}

#[derive(Args, Debug)]
pub struct TowerArgs {
    #[arg(long)]
    pub n: i64,
    #[arg(long)]
    pub k: i64,
    #[arg(long)]
    pub j: i64,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "space")]
pub struct SpaceArgs {
    /// Rational Betti numbers as degree:rank pairs, e.g. 0:1,2:1.
    #[arg(long)]
    pub betti: Option<String>,
    /// A finite set of this many points.
    #[arg(long)]
    pub points: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum TowerQuery {
    /// Connectivity of the map to stage j.
    Phi,
    /// Connectivity of the stage map j -> j-1.
    Stage,
    /// Whether the tower converges at stage j.
    Converge,
    /// Homotopy-codimension criterion.
    Codim {
        #[arg(long, allow_hyphen_values = true)]
        boundary_conn: i64,
        #[arg(long)]
        cw_dim: i64,
    },
    /// Phi, stage and convergence together.
    All,
}

#[derive(Subcommand, Debug)]
pub enum DiskQuery {
    /// Number of path components.
    Pi0,
    /// Fundamental group.
    Pi1,
    /// Rational ranks from the split exact sequence in degrees 2m, 2m+1.
    Ses {
        #[arg(long)]
        m: u32,
    },
}

/// A failure after argument parsing.
#[derive(Debug)]
pub enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1, with a typed code.
    Domain { code: String, message: String },
}

impl Failure {
    fn domain(code: &str, message: impl Into<String>) -> Self {
        let message = message.into();
        let prefix = format!("{code}: ");
        let message = message.strip_prefix(&prefix).map(str::to_string).unwrap_or(message);
        Failure::Domain {
            code: code.to_string(),
            message,
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::domain(e.code(), e.to_string())
    }
}

impl From<towercalc_core::ChainError> for Failure {
    fn from(e: towercalc_core::ChainError) -> Self {
        Failure::domain(e.code(), e.to_string())
    }
}

impl From<TowerError> for Failure {
    fn from(e: TowerError) -> Self {
        Failure::domain(e.code(), e.to_string())
    }
}

impl From<towercalc_core::disklinks::DiskLinksError> for Failure {
    fn from(e: towercalc_core::disklinks::DiskLinksError) -> Self {
        Failure::domain(e.code(), e.to_string())
    }
}

/// Degree cap from the environment.
pub fn max_degree() -> Result<i64, Failure> {
    match std::env::var(MAX_DEGREE_VAR) {
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
        Ok(s) => s
            .trim()
            .parse::<i64>()
            .map_err(|_| Failure::Usage(format!("{MAX_DEGREE_VAR}={s:?} is not an integer"))),
    }
}

fn check_cap(what: &str, q: i64) -> Result<(), Failure> {
    let cap = max_degree()?;
    if q > cap {
        return Err(Failure::domain(
            "DEGREE_CAP_EXCEEDED",
            format!("{what} = {q} exceeds {MAX_DEGREE_VAR} = {cap}"),
        ));
    }
    Ok(())
}

/// `(j-1)(n-2)`, the top degree at stage `j`, kept below the degree cap
/// since the Künneth power grows with it.
fn stage_top(n: i64, j: i64) -> Result<i64, Failure> {
    let top = (j - 1).checked_mul(n - 2).unwrap_or(i64::MAX);
    check_cap("(j - 1)(n - 2)", top)?;
    Ok(top)
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::domain("IO_ERROR", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::domain("MALFORMED_INPUT", format!("{}: {e}", path.display())))
}

fn member<'a>(v: &'a Value, key: &str) -> Result<&'a Value, Failure> {
    v.get(key)
        .ok_or_else(|| Failure::domain("MALFORMED_INPUT", format!("missing key {key:?}")))
}

struct SectioningFile {
    boundary_inclusion: ChainMap,
    section: ChainMap,
    total: towercalc_core::ChainComplex,
}

fn read_sectioning(v: &Value, extra: &[&str]) -> Result<SectioningFile, Failure> {
    let obj = v
        .as_object()
        .ok_or_else(|| Failure::domain("MALFORMED_INPUT", "expected an object"))?;
    let allowed = ["total", "boundary_inclusion", "section"];
    if let Some(k) = obj
        .keys()
        .find(|k| !allowed.contains(&k.as_str()) && !extra.contains(&k.as_str()))
    {
        return Err(Failure::domain("MALFORMED_INPUT", format!("unknown key {k:?}")));
    }
    let boundary_inclusion = map_from_value(member(v, "boundary_inclusion")?, "boundary_inclusion")?;
    let section = map_from_value(member(v, "section")?, "section")?;
    let total = match v.get("total") {
        Some(t) => complex_from_value(t, "total")?,
        None => boundary_inclusion.target().clone(),
    };
    Ok(SectioningFile {
        boundary_inclusion,
        section,
        total,
    })
}

fn parse_betti(space: &SpaceArgs) -> Result<BettiVector, Failure> {
    if let Some(t) = space.points {
        return Ok(BettiVector::points(t)?);
    }
    let spec = space.betti.as_deref().unwrap_or_default();
    let mut entries = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (d, b) = part
            .split_once(':')
            .ok_or_else(|| Failure::Usage(format!("--betti entry {part:?} is not degree:rank")))?;
        let d = d
            .trim()
            .parse::<u32>()
            .map_err(|_| Failure::Usage(format!("--betti degree {d:?} is not a nonnegative integer")))?;
        let b = b
            .trim()
            .parse::<u64>()
            .map_err(|_| Failure::Usage(format!("--betti rank {b:?} is not a nonnegative integer")))?;
        entries.push((d, b));
    }
    let k = entries.iter().map(|e| e.0).max().unwrap_or(0);
    Ok(BettiVector::new(entries, k)?)
}

/// A bare integer, or `{value, note}` when the connectivity is vacuous.
fn connectivity_value(c: Connectivity) -> Value {
    match c.note() {
        None => Value::from(c.value()),
        Some(note) => Obj::new().with("value", c.value()).with("note", note).build(),
    }
}

/// Runs one command and returns its result value.
pub fn execute(command: &Command) -> Result<Value, Failure> {
    match command {
        Command::Homology {
            file,
            relative,
            suspend,
            reduced,
        } => {
            let v = read_json(file)?;
            let summary = if *relative {
                let sub = map_from_value(&v, "map")?;
                relative_homology(sub.target(), &sub)?
            } else {
                let mut c = complex_from_value(&v, "complex")?;
                if *suspend {
                    c = suspension(&c);
                }
                if *reduced {
                    reduced_homology(&c)?
                } else {
                    homology(&c)
                }
            };
            Ok(summary_value(&summary))
        }
        Command::Cone { file } => {
            let f = map_from_value(&read_json(file)?, "map")?;
            let cone = mapping_cone(&f);
            Ok(Obj::new()
                .with("complex", complex_to_value(&cone))
                .with("homology", summary_value(&homology(&cone)))
                .build())
        }
        Command::DesuspCheck { file } => {
            let s = read_sectioning(&read_json(file)?, &[])?;
            let report = verify_desuspension(&s.total, &s.boundary_inclusion, &s.section)?;
            let rows = report
                .rows
                .iter()
                .map(|r| {
                    Obj::new()
                        .with("degree", r.degree)
                        .with("thom", group_value(&r.thom))
                        .with("relative", group_value(&r.relative))
                        .with("matches", r.matches)
                        .build()
                })
                .collect();
            Ok(Obj::new()
                .with("verdict", report.verdict.code())
                .with("composite_quasi_isomorphism", report.composite_quasi_isomorphism)
                .with("rows", Value::Array(rows))
                .build())
        }
        Command::NormalInvariant { file, n } => {
            let v = read_json(file)?;
            let s = read_sectioning(&v, &["alpha"])?;
            let alpha = map_from_value(member(&v, "alpha")?, "alpha")?;
            let check =
                check_normal_invariant(&alpha, &s.total, &s.boundary_inclusion, &s.section, *n)?;
            Ok(Obj::new()
                .with("verdict", check.verdict.code())
                .with("degree", int_value(&check.degree))
                .build())
        }
        Command::Lyndon { g, len } => {
            let words = lyndon_words(*g, *len as usize);
            let mut by_len = Map::new();
            let mut counts = Map::new();
            for (i, ws) in words.iter().enumerate() {
                let list = ws
                    .iter()
                    .map(|w| {
                        Obj::new()
                            .with("word", w.to_string())
                            .with("bracket", w.bracketing())
                            .build()
                    })
                    .collect();
                by_len.insert((i + 1).to_string(), Value::Array(list));
                counts.insert((i + 1).to_string(), Value::from(ws.len() as u64));
            }
            Ok(Obj::new()
                .with("g", *g)
                .with("max_len", *len)
                .with("counts", Value::Object(counts))
                .with("words", Value::Object(by_len))
                .build())
        }
        Command::Witt { g, len } => Ok(uint_value(&witt_rank(*g, *len))),
        Command::PiWedge { dims, q_max, loop_t } => {
            check_cap("q_max", *q_max)?;
            let w = SphereWedge::new(dims.clone())
                .map_err(|e| Failure::domain("OUT_OF_RANGE", e.to_string()))?;
            let table = match loop_t {
                None => wedge_pi_ranks(&w, *q_max),
                Some(0) => return Err(Failure::domain("OUT_OF_RANGE", "loop_t must be at least 1")),
                Some(t) => {
                    check_cap("q_max + 1", q_max + 1)?;
                    looped_product_ranks(&w, *t, *q_max)
                }
            };
            Ok(table_value(&table))
        }
        Command::Tower { params, query } => {
            let p = TowerParams::new(params.n, params.k, params.j)?;
            match query {
                TowerQuery::Phi => Ok(connectivity_value(phi_connectivity(&p))),
                TowerQuery::Stage => Ok(connectivity_value(stage_map_connectivity(&p)?)),
                TowerQuery::Converge => Ok(Value::from(convergence_check(&p))),
                TowerQuery::Codim {
                    boundary_conn,
                    cw_dim,
                } => Ok(Value::from(codim_check(*boundary_conn, *cw_dim, p.n()).code())),
                TowerQuery::All => {
                    let phi = phi_connectivity(&p);
                    let stage = stage_map_connectivity(&p).ok();
                    Ok(Obj::new()
                        .with("n", p.n())
                        .with("k", p.k())
                        .with("j", p.j())
                        .with("phi", connectivity_value(phi))
                        .with("stage", stage.map_or(Value::Null, connectivity_value))
                        .with("converges", convergence_check(&p))
                        .build())
                }
            }
        }
        Command::Layer {
            n,
            j,
            space,
            q_min,
            q_max,
        } => {
            let b = parse_betti(space)?;
            let top = stage_top(*n, *j)?;
            let q_max = q_max.unwrap_or(top);
            let q_min = q_min.unwrap_or(top - j * b.dimension_bound() as i64);
            check_cap("q_max", q_max)?;
            if q_min > q_max {
                return Err(Failure::Usage(format!("--q-min {q_min} exceeds --q-max {q_max}")));
            }
            let profile = layer_profile(&b, *n, *j, q_min, q_max)?;
            Ok(Obj::new()
                .with("label", LayerProfile::LABEL)
                .with("top_degree", profile.top_degree)
                .with("sphere_count", uint_value(&profile.sphere_count))
                .with("table", table_value(&profile.table))
                .build())
        }
        Command::Obstruction { n, j, space } => {
            let b = parse_betti(space)?;
            stage_top(*n, *j)?;
            let degree = obstruction_degree(*n, *j)?;
            let rank = obstruction_group_rank(&b, *n, *j)?;
            Ok(Obj::new()
                .with("degree", degree)
                .with("rank", uint_value(&rank))
                .build())
        }
        Command::Compare { params } => {
            let p = TowerParams::new(params.n, params.k, params.j)?;
            let c = comparison_connectivities(&p);
            let opt = |x: Option<i64>| x.map_or(Value::Null, Value::from);
            Ok(Obj::new()
                .with("pt", c.pt)
                .with("decompression", c.decompression)
                .with("a", opt(c.a))
                .with("b_raw", opt(c.b_raw))
                .with("b", opt(c.b))
                .with("e", opt(c.e))
                .build())
        }
        Command::DiskLinks { n, t, query } => match query {
            DiskQuery::Pi0 => Ok(uint_value(&pi0_cardinality(*t))),
            DiskQuery::Pi1 => {
                let g = pi1_description(*t);
                Ok(Obj::new()
                    .with("group", g.to_string())
                    .with("rank", g.rank)
                    .with("order", uint_value(&g.order()))
                    .build())
            }
            DiskQuery::Ses { m } => {
                check_cap("2m + n - 1", 2 * i64::from(*m) + i64::from(*n) - 1)?;
                let r = ses_rank_report(*n, *t, *m)?;
                let opt = |x: &Option<num_bigint::BigUint>| x.as_ref().map_or(Value::Null, uint_value);
                Ok(Obj::new()
                    .with("n", r.n)
                    .with("t", r.t)
                    .with("m", r.m)
                    .with("status", if r.is_exact() { "EXACT" } else { "BOUNDS" })
                    .with("rank_b", uint_value(&r.rank_b))
                    .with("rank_c", uint_value(&r.rank_c))
                    .with("upper_odd", uint_value(&r.upper_odd))
                    .with("upper_even", uint_value(&r.upper_even))
                    .with("euler_relation", int_value(&r.euler_relation))
                    .with("exact_odd", opt(&r.exact_odd))
                    .with("exact_even", opt(&r.exact_even))
                    .build())
            }
        },
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Text => render_text(v),
        Format::Structured => format::to_text(v),
    }
}

/// Full entry point: parse, execute, print. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(v) => {
            let _ = out.write_all(render(&v, cli.format).as_bytes());
            0
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
        Err(Failure::Domain { code, message }) => {
            let v = Obj::new()
                .with(
                    "error",
                    Obj::new().with("code", code.as_str()).with("message", message.as_str()).build(),
                )
                .build();
            let _ = out.write_all(render(&v, cli.format).as_bytes());
            let _ = writeln!(err, "error: {code}: {message}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("tower-calc").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(call(&["tower", "--n", "9", "--k", "4", "--j", "2", "phi"]), (0, "2\n".into()));
        assert_eq!(call(&["witt", "--g", "2", "--len", "6"]), (0, "9\n".into()));
        assert_eq!(call(&["disk-links", "--n", "4", "--t", "3", "pi0"]), (0, "8\n".into()));
    }

    #[test]
    fn vacuous_connectivity_is_flagged() {
        let (code, out) = call(&["tower", "--n", "9", "--k", "6", "--j", "1", "phi"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("value: -5\nnote: NOTE: "), "{out}");
        let (_, out) = call(&["tower", "--n", "9", "--k", "4", "--j", "1", "phi"]);
        assert_eq!(out, "-1\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["witt", "--g", "0", "--len", "3"]).0, 2);
        let (code, out) = call(&["disk-links", "--n", "5", "--t", "2", "ses", "--m", "1"]);
        assert_eq!(code, 1);
        assert!(out.contains("PARITY_UNSUPPORTED"));
        let (code, out) = call(&["tower", "--n", "9", "--k", "4", "--j", "1", "stage"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("error.code: STAGE_TOO_LOW\n"));
    }

    #[test]
    fn betti_parsing() {
        let (code, out) = call(&["obstruction", "--n", "9", "--j", "3", "--betti", "0:1,2:1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("degree: 15\n"), "{out}");
        assert_eq!(call(&["obstruction", "--n", "9", "--j", "3", "--betti", "x"]).0, 2);
        assert_eq!(call(&["obstruction", "--n", "9", "--j", "3"]).0, 2);
        assert_eq!(
            call(&["obstruction", "--n", "9", "--j", "3", "--points", "2", "--betti", "0:1"]).0,
            2
        );
    }
}
