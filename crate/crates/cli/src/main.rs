//! `hessex`: command-line front end for the Hessenberg chart toolkit.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hessex_core::charts::{family_generators, ideal_generators, specialize_fiber, ChartIdeal, FamilyParameters};
use hessex_core::degree::{abbv_volume, default_t, degree, seeded_t_vectors, volume, volume_polynomial, WeightVector};
use hessex_core::exactalg::{format_rational, parse_rational};
use hessex_core::exactalg::rational::parse_rational_list;
use hessex_core::nokounkov::{nob_polygon, pascal_invertibility_predicted, svg, truncated_pascal_det};
use hessex_core::schubert::flag_chain;
use hessex_core::w0chart::{
    check_tech_lemma, classify_variables, eliminate, eliminate_family_fiber, generators_closed_form,
};
use hessex_core::{HessenbergFunction, HessexError, MonomialOrder, Permutation, Rational, Result, Var};

const SCHEMA: &str = "hessex/1";
const DEFAULT_SEED: u64 = 20240917;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "hessex", version, about = "Exact computations on regular nilpotent Hessenberg varieties")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Seed for every randomized check.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,

    /// Worker threads for localization sums.
    #[arg(long, env = "HESSEX_THREADS", default_value_t = 1, global = true)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generators of the Hessenberg ideal in the chart of a permutation.
    Ideal {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        h: String,
        #[arg(long)]
        w: String,
        /// Use the one-parameter family instead of the nilpotent ideal.
        #[arg(long)]
        family: bool,
        /// Eigenvalues `γ_1,...,γ_n` (symbolic when omitted).
        #[arg(long)]
        gamma: Option<String>,
        /// Specialize the family at `t = z`.
        #[arg(long)]
        t_value: Option<String>,
    },
    /// Family generators; same as `ideal --family`.
    Family {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        h: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        t_value: Option<String>,
    },
    /// Longest-chart generators, variable classification and elimination.
    W0 {
        #[arg(long)]
        h: String,
        #[arg(long)]
        check_tech_lemma: bool,
        /// Eliminate the fiber `t = z` of the family instead.
        #[arg(long, requires = "gamma")]
        fiber: Option<String>,
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Chain of opposite Schubert cells cut out in the longest chart.
    Flags {
        #[arg(long)]
        h: String,
    },
    /// Volume and degree under the embedding of weight `λ`.
    Degree {
        #[arg(long)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Cross-check with the localization sum.
        #[arg(long)]
        abbv: bool,
        /// Localization parameters (default `1,...,n`).
        #[arg(long, requires = "abbv", allow_hyphen_values = true)]
        t: Option<String>,
        /// Additional seeded random parameter vectors for the localization check.
        #[arg(long, requires = "abbv", default_value_t = 0)]
        random_t: usize,
        /// Print the volume polynomial.
        #[arg(long)]
        poly: bool,
    },
    /// Level-one valuation polygon for `Pet_3`.
    Nob {
        #[arg(long)]
        a1: u32,
        #[arg(long)]
        a2: u32,
        /// List the valuation points.
        #[arg(long)]
        points: bool,
        #[arg(long, value_name = "FILE")]
        emit_svg: Option<PathBuf>,
    },
    /// Determinant of the truncated Pascal matrix `C(s_b, r_a)`.
    Pascal {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
}

struct Output {
    json: Value,
    text: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => {
                    let mut obj = json!({ "schema": SCHEMA });
                    if let Value::Object(fields) = out.json {
                        obj.as_object_mut().expect("object").extend(fields);
                    }
                    let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&obj).expect("serializable"));
                }
                Format::Text => {
                    let _ = write!(std::io::stdout(), "{}", out.text);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("hessex: error: {}: {}", e.kind(), e);
            ExitCode::from(1)
        }
    }
}

fn parse_counts(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u64>().map_err(|_| HessexError::Parse(format!("expected a nonnegative integer, got {s:?}"))))
        .collect()
}

fn check_n(n: Option<usize>, h: &HessenbergFunction) -> Result<()> {
    match n {
        Some(n) if n != h.n() => Err(HessexError::DimensionMismatch(format!("--n {n} but h has {} entries", h.n()))),
        _ => Ok(()),
    }
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Ideal { n, h, w, family, gamma, t_value } => {
            run_ideal(*n, h, w, *family, gamma.as_deref(), t_value.as_deref())
        }
        Command::Family { n, h, w, gamma, t_value } => run_ideal(*n, h, w, true, gamma.as_deref(), t_value.as_deref()),
        Command::W0 { h, check_tech_lemma, fiber, gamma } => {
            run_w0(h, *check_tech_lemma, fiber.as_deref(), gamma.as_deref())
        }
        Command::Flags { h } => {
            let h: HessenbergFunction = h.parse()?;
            let chain = flag_chain(&h)?;
            Ok(Output { json: chain.to_json(), text: chain.to_text() })
        }
        Command::Degree { h, lambda, abbv, t, random_t, poly } => {
            run_degree(cli, h, lambda, *abbv, t.as_deref(), *random_t, *poly)
        }
        Command::Nob { a1, a2, points, emit_svg } => {
            let result = nob_polygon(*a1, *a2)?;
            if let Some(path) = emit_svg {
                std::fs::write(path, svg(&result))
                    .map_err(|e| HessexError::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(Output { json: result.to_json(*points), text: result.to_text(*points) })
        }
        Command::Pascal { r, s } => {
            let (r, s) = (parse_counts(r)?, parse_counts(s)?);
            let det = truncated_pascal_det(&r, &s)?;
            let predicted = pascal_invertibility_predicted(&r, &s);
            let invertible = det != 0.into();
            Ok(Output {
                json: json!({
                    "r": r,
                    "s": s,
                    "det": det.to_string(),
                    "invertible": invertible,
                    "predicted": predicted,
                }),
                text: format!("det = {det}\ninvertible: {invertible}\npredicted: {predicted}\n"),
            })
        }
    }
}

fn run_ideal(
    n: Option<usize>,
    h: &str,
    w: &str,
    family: bool,
    gamma: Option<&str>,
    t_value: Option<&str>,
) -> Result<Output> {
    let h: HessenbergFunction = h.parse()?;
    let w: Permutation = w.parse()?;
    check_n(n, &h)?;
    if !family && (gamma.is_some() || t_value.is_some()) {
        return Err(HessexError::InvalidArgument("--gamma and --t-value require --family".into()));
    }
    let ideal: ChartIdeal = if family {
        let params = match gamma {
            Some(g) => FamilyParameters::numeric(parse_rational_list(g)?)?,
            None => FamilyParameters::Symbolic(h.n()),
        };
        let fam = family_generators(&w, &h, &params)?;
        match t_value {
            Some(z) => specialize_fiber(&fam, &parse_rational(z)?)?,
            None => fam,
        }
    } else {
        ideal_generators(&w, &h)?
    };
    let order = MonomialOrder::natural();
    Ok(Output { json: ideal.to_json(&order), text: ideal.to_text(&order) })
}

fn cells_json(vars: &[Var]) -> Value {
    let mut cells: Vec<(usize, usize)> = vars.iter().filter_map(Var::position).collect();
    cells.sort();
    cells.iter().map(|&(i, j)| json!([i, j])).collect()
}

fn run_w0(h: &str, tech: bool, fiber: Option<&str>, gamma: Option<&str>) -> Result<Output> {
    let h: HessenbergFunction = h.parse()?;
    let order = MonomialOrder::natural();
    classify_variables(&h)?;
    let (ideal, elim) = match fiber {
        Some(z) => {
            let z = parse_rational(z)?;
            let gamma = parse_rational_list(gamma.unwrap_or_default())?;
            let params = FamilyParameters::numeric(gamma.clone())?;
            let fam = family_generators(&Permutation::longest(h.n()), &h, &params)?;
            let ideal = specialize_fiber(&fam, &z)?;
            (ideal, eliminate_family_fiber(&h, &z, &gamma)?)
        }
        None => (generators_closed_form(&h), eliminate(&h)?),
    };
    let mut eliminated: Vec<Var> = elim.substitution.iter().map(|(v, _)| *v).collect();
    eliminated.sort_by_key(|v| v.position());
    let mut json = json!({
        "h": h.values(),
        "generators": ideal.to_json(&order)["generators"].clone(),
        "classification": {
            "non_free": cells_json(&eliminated),
            "free": cells_json(&elim.free),
        },
        "elimination": elim.to_json(&order),
    });
    if let Some(z) = &elim.fiber {
        json["t"] = Value::String(format_rational(z));
    }
    let mut text = format!("h = {h}\n");
    if let Some(z) = &elim.fiber {
        text.push_str(&format!("t = {}\n", format_rational(z)));
    }
    text.push_str(&ideal.to_text(&order));
    let names = |vs: Vec<Var>| vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    text.push_str(&format!("non-free: {}\n", names(eliminated.clone())));
    text.push_str(&elim.to_text(&order));
    if tech {
        let report = check_tech_lemma(&h);
        let entries: Vec<Value> = report
            .entries
            .iter()
            .map(|e| {
                json!({
                    "row": e.row,
                    "j": e.j,
                    "g": e.g.to_json(&order),
                    "allowed": e.allowed.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "violations": e.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        json["tech_lemma"] = json!({ "holds": report.holds(), "entries": entries });
        for e in &report.entries {
            text.push_str(&format!(
                "row {} col {}: g = {}  in ({})  {}\n",
                e.row,
                e.j,
                e.g.to_text(&order),
                names(e.allowed.clone()),
                if e.violations.is_empty() { "ok" } else { "VIOLATED" }
            ));
        }
        text.push_str(&format!("technical lemma holds: {}\n", report.holds()));
    }
    Ok(Output { json, text })
}

fn run_degree(
    cli: &Cli,
    h: &str,
    lambda: &str,
    abbv: bool,
    t: Option<&str>,
    random_t: usize,
    poly: bool,
) -> Result<Output> {
    let h: HessenbergFunction = h.parse()?;
    let lambda: WeightVector = lambda.parse()?;
    let vol = volume(&h, &lambda)?;
    let deg = degree(&h, &lambda)?;
    let d = h.dimension();
    let mut json = json!({
        "h": h.values(),
        "lambda": lambda.values(),
        "volume": format_rational(&vol),
        "degree": deg.to_string(),
        "d": d,
    });
    let mut text = format!("volume = {}\ndegree = {}\nd = {}\n", format_rational(&vol), deg, d);
    if let Some(j) = h.first_split() {
        let note = format!("h is decomposable at j = {j} (h({j}) = {j}); the variety is a product of smaller ones");
        text.push_str(&format!("note: {note}\n"));
        json["note"] = Value::String(note);
    }
    if poly {
        let vp = volume_polynomial(&h);
        let order = MonomialOrder::natural();
        json["poly"] = vp.poly.to_json(&order);
        text.push_str(&format!("P_h = {}\n", vp.poly.to_text(&order)));
    }
    if abbv {
        let mut ts: Vec<Vec<Rational>> = vec![match t {
            Some(t) => parse_rational_list(t)?,
            None => default_t(h.n()),
        }];
        ts.extend(seeded_t_vectors(h.n(), random_t, cli.seed));
        let mut checks = Vec::new();
        for t in &ts {
            let v = abbv_volume(&h, &lambda, t, cli.threads.max(1))?;
            let agrees = v == vol;
            text.push_str(&format!(
                "abbv(t = {}) = {}  {}\n",
                t.iter().map(format_rational).collect::<Vec<_>>().join(","),
                format_rational(&v),
                if agrees { "agrees" } else { "DISAGREES" }
            ));
            checks.push(json!({
                "t": t.iter().map(format_rational).collect::<Vec<_>>(),
                "volume": format_rational(&v),
                "agrees": agrees,
            }));
        }
        json["abbv"] = Value::Array(checks);
    }
    Ok(Output { json, text })
}
