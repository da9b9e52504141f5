//! The six commands. Each renders to a string so that output can be cached
//! and compared byte for byte.

use std::path::Path;

use alia::config::{load_action, parse_point, LoadedAction};
use alia::equivariant::{quotient_by_jet_ideal, FilteredALiA};
use alia::exactmath::eigenspace_bases;
use alia::funring::{hermite_interpolate, taylor_jet, SpherePoint};
use alia::kacroots::analyze_at;
use alia::liealg::format_vector;
use alia::truncur::{build_at, leading_coefficient_iso};
use alia::wildness::solvable_growth;
use alia::{presets, Matrix, Scalar};
use serde_json::{json, Value};

use crate::{Cli, Command, Failure, Format};

pub const MAX_M: usize = 64;
pub const MAX_DEGREE: usize = 400;
pub const MAX_NMAX: usize = 120;
pub const DEFAULT_NMAX: usize = 30;
pub const DEFAULT_CHAIN_M: usize = 10;
pub const DEFAULT_CHAIN_DEGREE: usize = 13;

/// A loaded configuration together with its source text.
pub struct Input {
    pub text: String,
    pub loaded: LoadedAction,
    pub point: SpherePoint,
}

impl Input {
    /// Reads the configuration and validates every parameter before any
    /// computation starts.
    pub fn load(cli: &Cli) -> Result<Self, Failure> {
        let text = if Path::new(&cli.config).is_file() {
            std::fs::read_to_string(&cli.config)
                .map_err(|e| Failure::Config(format!("cannot read {}: {e}", cli.config)))?
        } else if let Ok(t) = presets::text(&cli.config) {
            t.to_string()
        } else {
            let known: Vec<&str> = presets::names().collect();
            return Err(Failure::Config(format!(
                "{:?} is neither a readable file nor a preset ({})",
                cli.config,
                known.join(", ")
            )));
        };
        let loaded = load_action(&text).map_err(|e| Failure::Config(format!("{}: {e}", cli.config)))?;
        let point = match (&cli.point, &loaded.point) {
            (Some(p), _) => parse_point(p, "--point").map_err(|e| Failure::Config(e.to_string()))?,
            (None, Some(p)) => p.clone(),
            (None, None) => {
                return Err(Failure::Config(
                    "no --point given and the configuration has none".into(),
                ))
            }
        };
        validate(cli)?;
        Ok(Input { text, loaded, point })
    }
}

fn validate(cli: &Cli) -> Result<(), Failure> {
    let bad = |m: String| Err(Failure::Config(m));
    if cli.format == Format::Dot && cli.command != Command::Kac {
        return bad("--format dot is only available for kac".into());
    }
    match cli.command {
        Command::Quotient | Command::Interpolate if cli.m.is_none() => {
            return bad(format!("{:?} needs --m", cli.command).to_lowercase());
        }
        _ => {}
    }
    if let Some(m) = cli.m {
        if m == 0 || m > MAX_M {
            return bad(format!("--m must be between 1 and {MAX_M}"));
        }
    }
    if cli.degree.is_some_and(|d| d > MAX_DEGREE) {
        return bad(format!("--degree must be at most {MAX_DEGREE}"));
    }
    if let Some(n) = cli.nmax {
        if n == 0 || n > MAX_NMAX {
            return bad(format!("--nmax must be between 1 and {MAX_NMAX}"));
        }
    }
    Ok(())
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| strings(r)).collect()
}

fn header(cmd: &str, input: &Input) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(cmd));
    m.insert("config".into(), json!(input.loaded.name));
    m.insert("point".into(), json!(input.point.to_string()));
    m
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn execute(cli: &Cli, input: &Input) -> Result<String, Failure> {
    match cli.command {
        Command::Decompose => decompose(cli, input),
        Command::Quotient => quotient(cli, input),
        Command::Kac => kac(cli, input),
        Command::Wildness => wildness(cli, input),
        Command::Interpolate => interpolate(cli, input),
        Command::Idealchain => idealchain(cli, input),
    }
}

fn decompose(cli: &Cli, input: &Input) -> Result<String, Failure> {
    let action = &input.loaded.action;
    let (st, chart) = action.local_chart(&input.point)?;
    let g0 = &action.elements()[st.generator].lie;
    let eig = eigenspace_bases(g0, chart.order, &chart.zeta)?;
    let labels = action.lie().labels();
    let blocks: Vec<Value> = eig
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_empty())
        .map(|(k, b)| {
            json!({
                "exponent": k,
                "dim": b.len(),
                "basis": b.iter().map(|v| strings(v)).collect::<Vec<_>>(),
                "elements": b.iter().map(|v| format_vector(v, labels)).collect::<Vec<_>>(),
            })
        })
        .collect();
    if cli.format == Format::Table {
        let mut out = format!("stabiliser order {}, zeta = {}\n", chart.order, chart.zeta);
        out.push_str("exponent  dim  basis\n");
        for b in &blocks {
            let elems: Vec<&str> = b["elements"]
                .as_array()
                .unwrap()
                .iter()
                .map(|e| e.as_str().unwrap())
                .collect();
            out.push_str(&format!(
                "{:>8} {:>4}  {}\n",
                b["exponent"].as_u64().unwrap(),
                b["dim"].as_u64().unwrap(),
                elems.join(", ")
            ));
        }
        return Ok(out);
    }
    let mut m = header("decompose", input);
    m.insert("stabilizer_order".into(), json!(chart.order));
    m.insert("zeta".into(), json!(chart.zeta.to_string()));
    m.insert("blocks".into(), Value::Array(blocks));
    Ok(pretty(&Value::Object(m)))
}

fn quotient(cli: &Cli, input: &Input) -> Result<String, Failure> {
    let m = cli.m.expect("validated");
    let action = &input.loaded.action;
    let q = quotient_by_jet_ideal(action, &input.point, m, cli.degree.unwrap_or(0))?;
    let t = build_at(action, &input.point, m)?;
    let iso = leading_coefficient_iso(&q, &t)?;
    if cli.format == Format::Table {
        let mut out = format!(
            "A / I(x0 = {}, m = {}): dim {}, image stabilised at pole order {}\n",
            input.point,
            m,
            q.dim(),
            q.degree
        );
        out.push_str(&format!("basis: {}\n", q.algebra.labels().join(", ")));
        out.push_str(&q.algebra.bracket_table());
        out.push_str(&format!(
            "local model: dim {}, leading-coefficient isomorphism verified\n",
            t.dim()
        ));
        return Ok(out);
    }
    let mut o = header("quotient", input);
    o.insert("m".into(), json!(m));
    o.insert("pole_order".into(), json!(q.degree));
    o.insert("image_dims".into(), json!(q.dims));
    o.insert("t_degrees".into(), json!(q.t_degrees));
    o.insert("quotient".into(), q.algebra.to_json());
    o.insert("local_model".into(), t.realized.to_json());
    o.insert(
        "isomorphism".into(),
        json!({ "verified": true, "matrix": matrix_strings(&iso) }),
    );
    Ok(pretty(&Value::Object(o)))
}

fn kac(cli: &Cli, input: &Input) -> Result<String, Failure> {
    let analysis = analyze_at(&input.loaded, &input.point)?;
    let report = analysis.report();
    match cli.format {
        Format::Dot => Ok(analysis.dot()),
        Format::Table => {
            let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
            let mut out = format!(
                "type {}{}\n",
                report.type_label,
                if report.validated_type { "" } else { " (unvalidated)" }
            );
            out.push_str(&format!("raw s = ({})\n", join(&report.raw_s)));
            out.push_str(&format!(
                "weyl word = {}\n",
                if report.weyl_word_text.is_empty() {
                    "1"
                } else {
                    &report.weyl_word_text
                }
            ));
            out.push_str(&format!("s = ({})\n", join(&report.s)));
            if report.symmetric_relabelling {
                out.push_str(&format!(
                    "canonical s = ({}) up to diagram symmetry\n",
                    join(&report.canonical_s)
                ));
            }
            out.push_str("element          class  mult  omega1  omega1(raw)\n");
            for e in &report.omega1_table {
                out.push_str(&format!(
                    "{:<16} {:>5} {:>5} {:>7} {:>12}\n",
                    e.element, e.class, e.multiplicity, e.omega1, e.omega1_raw
                ));
            }
            out.push_str("omega2 = 1 on:");
            for [a, b] in &report.omega2_pairs {
                out.push_str(&format!(" {{{a}, {b}}}"));
            }
            out.push('\n');
            Ok(out)
        }
        Format::Json => {
            let mut o = header("kac", input);
            let Value::Object(r) = serde_json::to_value(&report).expect("serializable") else {
                unreachable!()
            };
            o.extend(r);
            Ok(pretty(&Value::Object(o)))
        }
    }
}

fn wildness(cli: &Cli, input: &Input) -> Result<String, Failure> {
    let nmax = cli.nmax.unwrap_or(DEFAULT_NMAX);
    let report = solvable_growth(&input.loaded.action, &input.point, nmax)?;
    if cli.format == Format::Table {
        return Ok(report.table());
    }
    let mut o = header("wildness", input);
    let Value::Object(r) = serde_json::to_value(&report).expect("serializable") else {
        unreachable!()
    };
    o.extend(r);
    Ok(pretty(&Value::Object(o)))
}

/// Vanishes to order `m` along the orbit of the point, with `m`-th
/// derivative 1 at the point itself and 0 elsewhere on the orbit.
fn interpolate(cli: &Cli, input: &Input) -> Result<String, Failure> {
    let m = cli.m.expect("validated");
    let action = &input.loaded.action;
    let orbit = action.orbit(&input.point);
    let points: Vec<(SpherePoint, Scalar)> = orbit
        .iter()
        .map(|p| {
            (
                p.clone(),
                if *p == input.point {
                    Scalar::int(1)
                } else {
                    Scalar::int(0)
                },
            )
        })
        .collect();
    let f = hermite_interpolate(&points, m, action.poles())?;
    let jets = points
        .iter()
        .map(|(p, _)| taylor_jet(&f, p, m + 1).map(|j| json!({ "point": p.to_string(), "jet": strings(&j.coeffs) })))
        .collect::<alia::Result<Vec<_>>>()?;
    if cli.format == Format::Table {
        let mut out = format!("f = {f}\n");
        for j in &jets {
            let c: Vec<&str> = j["jet"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_str().unwrap())
                .collect();
            out.push_str(&format!(
                "jet at {}: ({})\n",
                j["point"].as_str().unwrap(),
                c.join(", ")
            ));
        }
        return Ok(out);
    }
    let mut o = header("interpolate", input);
    o.insert("m".into(), json!(m));
    o.insert(
        "orbit".into(),
        json!(orbit.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
    );
    o.insert("function".into(), json!(f.to_string()));
    o.insert("jets".into(), Value::Array(jets));
    o.insert("verified".into(), json!(true));
    Ok(pretty(&Value::Object(o)))
}

fn idealchain(cli: &Cli, input: &Input) -> Result<String, Failure> {
    let mmax = cli.m.unwrap_or(DEFAULT_CHAIN_M);
    let d = cli.degree.unwrap_or(DEFAULT_CHAIN_DEGREE);
    let a = FilteredALiA::new(&input.loaded.action, d)?;
    let chain = a.ideal_chain(&input.point, mmax)?;
    if cli.format == Format::Table {
        let mut out = format!("truncation degree {d}, dim {}\n", a.len());
        out.push_str("   m  codim    dim  strict\n");
        for s in &chain {
            out.push_str(&format!("{:>4} {:>6} {:>6}  {}\n", s.m, s.codim, s.dim, s.strict));
        }
        return Ok(out);
    }
    let mut o = header("idealchain", input);
    o.insert("degree".into(), json!(d));
    o.insert("dim".into(), json!(a.len()));
    o.insert(
        "steps".into(),
        Value::Array(
            chain
                .iter()
                .map(|s| json!({ "m": s.m, "codim": s.codim, "dim": s.dim, "strict": s.strict }))
                .collect(),
        ),
    );
    Ok(pretty(&Value::Object(o)))
}
