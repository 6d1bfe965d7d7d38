//! Command-line front-end over `borel-core`.

pub mod dot;

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use borel_core::enumerate::borel_generator_with_jobs;
use borel_core::polynomials::{gotzmann_decomposition, parse_polynomial};
use borel_core::segments::{classify, default_witness_range, no_order_witness, SegmentReport};
use borel_core::strata::{build_stratum, singularity_check, truncation_degree, StratumConfig};
use borel_core::{AdmissiblePolynomial, BorelIdeal, Error, MonomialIdeal, TermOrder};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(name = "borel", version, about = "Borel ideals, Hilbert polynomials, segments and Groebner strata")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// `auto` or an explicit degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truncate {
    Auto,
    Degree(u32),
}

impl FromStr for Truncate {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Truncate::Auto);
        }
        s.parse().map(Truncate::Degree).map_err(|_| format!("expected `auto` or a degree, got `{s}`"))
    }
}

impl fmt::Display for Truncate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truncate::Auto => f.write_str("auto"),
            Truncate::Degree(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Gotzmann number of an admissible polynomial.
    Gotzmann {
        #[arg(short = 'p', long = "poly", allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        json: bool,
    },
    /// Hilbert function, polynomial and regularity of a Borel ideal.
    Hilbert {
        ideal: String,
        #[arg(short = 'n')]
        n: Option<usize>,
        /// Last degree of the Hilbert function to print.
        #[arg(long)]
        upto: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Segment, hilb-, reg- and gen-segment flags of a saturated Borel ideal.
    Classify {
        ideal: String,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long, default_value = "revlex")]
        order: TermOrder,
        #[arg(long)]
        json: bool,
    },
    /// All saturated Borel ideals with the given Hilbert polynomial.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'p', long = "poly", allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Classify every ideal with respect to this order.
        #[arg(long)]
        classify: Option<TermOrder>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Homogeneous Groebner stratum and its embedding dimension.
    Stratum {
        ideal: String,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long)]
        order: TermOrder,
        #[arg(long)]
        truncate: Option<Truncate>,
        /// Keep only the linear part of the relations.
        #[arg(long)]
        ed_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// DOT graph of the degree `t` slice with its elementary moves.
    Graph {
        ideal: String,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(short = 't')]
        t: u32,
    },
    /// Search for terms `a, b` outside and `c, d` inside with `ab = cd`.
    Witness {
        ideal: String,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long)]
        from: Option<u32>,
        #[arg(long)]
        to: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

fn push_opt<T: fmt::Display>(args: &mut Vec<String>, flag: &str, v: &Option<T>) {
    if let Some(v) = v {
        args.push(flag.into());
        args.push(v.to_string());
    }
}

fn push_flag(args: &mut Vec<String>, flag: &str, on: bool) {
    if on {
        args.push(flag.into());
    }
}

impl Command {
    /// Arguments (without the program name) that parse back to `self`.
    pub fn render(&self) -> Vec<String> {
        let mut a: Vec<String> = Vec::new();
        match self {
            Command::Gotzmann { poly, json } => {
                a.extend(["gotzmann".into(), "-p".into(), poly.clone()]);
                push_flag(&mut a, "--json", *json);
            }
            Command::Hilbert { ideal, n, upto, json } => {
                a.extend(["hilbert".into(), ideal.clone()]);
                push_opt(&mut a, "-n", n);
                push_opt(&mut a, "--upto", upto);
                push_flag(&mut a, "--json", *json);
            }
            Command::Classify { ideal, n, order, json } => {
                a.extend(["classify".into(), ideal.clone()]);
                push_opt(&mut a, "-n", n);
                a.extend(["--order".into(), order.to_string()]);
                push_flag(&mut a, "--json", *json);
            }
            Command::Enumerate { n, poly, format, classify, jobs } => {
                a.extend(["enumerate".into(), "-n".into(), n.to_string(), "-p".into(), poly.clone()]);
                let f = match format {
                    Format::Text => "text",
                    Format::Json => "json",
                };
                a.extend(["--format".into(), f.into()]);
                push_opt(&mut a, "--classify", classify);
                a.extend(["--jobs".into(), jobs.to_string()]);
            }
            Command::Stratum { ideal, n, order, truncate, ed_only, json } => {
                a.extend(["stratum".into(), ideal.clone()]);
                push_opt(&mut a, "-n", n);
                a.extend(["--order".into(), order.to_string()]);
                push_opt(&mut a, "--truncate", truncate);
                push_flag(&mut a, "--ed-only", *ed_only);
                push_flag(&mut a, "--json", *json);
            }
            Command::Graph { ideal, n, t } => {
                a.extend(["graph".into(), ideal.clone()]);
                push_opt(&mut a, "-n", n);
                a.extend(["-t".into(), t.to_string()]);
            }
            Command::Witness { ideal, n, from, to, json } => {
                a.extend(["witness".into(), ideal.clone()]);
                push_opt(&mut a, "-n", n);
                push_opt(&mut a, "--from", from);
                push_opt(&mut a, "--to", to);
                push_flag(&mut a, "--json", *json);
            }
        }
        a
    }

    pub fn parse_args<I, S>(args: I) -> Result<Command, clap::Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<std::ffi::OsString> + Clone,
    {
        let argv = std::iter::once(std::ffi::OsString::from("borel")).chain(args.into_iter().map(Into::into));
        Cli::try_parse_from(argv).map(|c| c.command)
    }
}

/// Exit code for a library error: syntax problems in the input are usage
/// errors (2), everything else is a domain error (1).
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InvalidOrder(_) => 2,
        _ => 1,
    }
}

fn polynomial(text: &str) -> borel_core::Result<AdmissiblePolynomial> {
    let p = parse_polynomial(text)?;
    Ok(AdmissiblePolynomial::new(p)?)
}

fn flags(r: &SegmentReport) -> String {
    let names = [
        (r.is_segment, "segment"),
        (r.is_hilb_segment, "hilb"),
        (r.is_reg_segment, "reg"),
        (r.is_gen_segment, "gen"),
    ];
    let on: Vec<&str> = names.iter().filter(|f| f.0).map(|f| f.1).collect();
    if on.is_empty() {
        "-".into()
    } else {
        on.join(" ")
    }
}

fn json_line(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

fn execute(cmd: &Command) -> borel_core::Result<String> {
    let mut out = String::new();
    match cmd {
        Command::Gotzmann { poly, json } => {
            let p = polynomial(poly)?;
            if *json {
                out = json_line(&json!({
                    "polynomial": p.to_string(),
                    "gotzmann": p.gotzmann_number(),
                    "decomposition": gotzmann_decomposition(p.poly())?,
                    "macaulay": p.macaulay(),
                }));
            } else {
                out = format!("r = {}\n", p.gotzmann_number());
            }
        }
        Command::Hilbert { ideal, n, upto, json } => {
            let j = BorelIdeal::parse(ideal, *n)?;
            let reg = j.regularity()?;
            let p = j.hilbert_polynomial()?;
            let last = upto.unwrap_or(reg + 2);
            let h: Vec<u128> = (0..=last).map(|t| j.hilbert_function(t)).collect();
            if *json {
                out = json_line(&json!({
                    "ideal": j.to_string(),
                    "hilbert_function": h.iter().map(u128::to_string).collect::<Vec<_>>(),
                    "polynomial": p.to_string(),
                    "gotzmann": p.gotzmann_number(),
                    "regularity": reg,
                    "saturated": j.is_saturated(),
                }));
            } else {
                let hs: Vec<String> = h.iter().map(u128::to_string).collect();
                out += &format!("H = {}\n", hs.join(", "));
                out += &format!("p = {p}\n");
                out += &format!("r = {}\n", p.gotzmann_number());
                out += &format!("reg = {reg}\n");
            }
        }
        Command::Classify { ideal, n, order, json } => {
            let j = BorelIdeal::parse(ideal, *n)?;
            let r = classify(&j, order)?;
            if *json {
                out = json_line(&r);
            } else {
                out += &format!("order = {}\n", r.order);
                out += &format!("segment = {}\n", r.is_segment);
                out += &format!("hilb = {}\n", r.is_hilb_segment);
                out += &format!("reg = {}\n", r.is_reg_segment);
                out += &format!("gen = {}\n", r.is_gen_segment);
                out += &format!("gotzmann = {}\n", r.gotzmann);
                out += &format!("regularity = {}\n", r.regularity);
                if let Some(w) = &r.witness {
                    out += &format!("witness = degree {}: {} inside, {} outside\n", w.degree, w.inside, w.outside);
                }
            }
        }
        Command::Enumerate { n, poly, format, classify: ord, jobs } => {
            let p = polynomial(poly)?;
            let res = borel_generator_with_jobs(*n, &p, *jobs)?;
            let reports = match ord {
                Some(o) => Some(res.ideals.iter().map(|j| classify(j, o)).collect::<borel_core::Result<Vec<_>>>()?),
                None => None,
            };
            match format {
                Format::Json => {
                    let mut v = serde_json::to_value(&res).expect("serializable");
                    if let (Some(rs), Value::Object(m)) = (&reports, &mut v) {
                        m.insert("classification".into(), serde_json::to_value(rs).expect("serializable"));
                    }
                    out = json_line(&v);
                }
                Format::Text => {
                    out += &format!("p = {}, n = {}, r = {}, count = {}\n", res.polynomial, res.n, res.gotzmann, res.ideals.len());
                    for (i, j) in res.ideals.iter().enumerate() {
                        match &reports {
                            Some(rs) => out += &format!("{j}  [{}]\n", flags(&rs[i])),
                            None => out += &format!("{j}\n"),
                        }
                    }
                }
            }
        }
        Command::Stratum { ideal, n, order, truncate, ed_only, json } => {
            let base = MonomialIdeal::parse(ideal, *n)?;
            let borel = BorelIdeal::new(base.clone()).ok();
            let m = match truncate {
                None => None,
                Some(Truncate::Degree(m)) => Some(*m),
                Some(Truncate::Auto) => {
                    let b = borel
                        .as_ref()
                        .filter(|b| b.is_saturated())
                        .ok_or_else(|| Error::Domain("--truncate auto needs a saturated Borel ideal".into()))?;
                    Some(truncation_degree(b))
                }
            };
            let target = m.map_or(base.clone(), |m| base.truncate(m));
            let config = StratumConfig {
                linear_only: *ed_only,
                ..Default::default()
            };
            let st = build_stratum(&target, order, config)?;
            // the certificate applies to saturated Borel ideals of points
            let cert = borel
                .filter(|b| b.is_saturated() && !b.is_unit())
                .filter(|b| b.hilbert_polynomial().is_ok_and(|p| p.degree() == Some(0)))
                .map(|b| singularity_check(&b, order))
                .transpose()?;
            if *json {
                let matrix: Vec<Vec<String>> = st
                    .linear_matrix()
                    .iter()
                    .map(|row| row.iter().map(|c| c.to_string()).collect())
                    .collect();
                out = json_line(&json!({
                    "ideal": target.to_string(),
                    "order": order.to_string(),
                    "truncation": m,
                    "vars": st.vars,
                    "relations": st.relations.len(),
                    "linear_matrix": matrix,
                    "rank": st.linear_rank,
                    "ed": st.embedding_dimension,
                    "certificate": cert,
                }));
            } else {
                out += &format!("ideal = {target}\n");
                out += &format!("order = {order}\n");
                out += &format!("vars = {}\n", st.vars.len());
                out += &format!("relations = {}\n", st.relations.len());
                out += &format!("rank = {}\n", st.linear_rank);
                out += &format!("ed = {}\n", st.embedding_dimension);
                if let Some(c) = cert {
                    let verdict = serde_json::to_value(c.certificate).expect("serializable");
                    out += &format!(
                        "certificate = {} * {} = {} vs nd = {}: {}\n",
                        c.generators,
                        c.script_b,
                        c.product,
                        c.nd,
                        verdict.as_str().unwrap_or_default()
                    );
                    out += &format!("singular = {}\n", c.singular);
                }
            }
        }
        Command::Graph { ideal, n, t } => {
            let j = MonomialIdeal::parse(ideal, *n)?;
            out = dot::export_dot(&j, *t)?;
        }
        Command::Witness { ideal, n, from, to, json } => {
            let j = BorelIdeal::parse(ideal, *n)?;
            let (lo, hi) = match (from, to) {
                (Some(a), Some(b)) => (*a, *b),
                _ => {
                    let (a, b) = default_witness_range(&j)?;
                    (from.unwrap_or(a), to.unwrap_or(b))
                }
            };
            let w = no_order_witness(&j, (lo, hi));
            if *json {
                out = json_line(&w);
            } else {
                out = match w {
                    Some(w) => format!("t = {}: {} * {} = {} * {}\n", w.t, w.alpha, w.beta, w.gamma, w.delta),
                    None => format!("none in degrees {lo}..={hi}\n"),
                };
            }
        }
    }
    Ok(out)
}

/// Parse `args` (without the program name), run, and return the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cmd = match Command::parse_args(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cmd) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
