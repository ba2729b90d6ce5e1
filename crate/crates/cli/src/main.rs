//! `artin`: invariants of Artin groups from labelled presentation graphs.
//!
//! Exit codes: 0 on success, 1 when `equal` or `iso` answers no, 2 on usage,
//! input or parse errors.

mod input;
mod report;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use artin_core::deligne::{build_ball, export_complex, fixed_slice, ExportFormat};
use artin_core::dihedral::{
    explain_dihedral_centraliser, garside_nf, has_central_power, is_central,
    is_conjugate_to_generator_power, words_equal, DihedralWord, Gen,
};
use artin_core::isomorphism::{
    large_type_gate, large_type_isomorphic, rigidity_report, twist_class,
};
use artin_core::graph::GraphJson;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use input::load_graph;

#[derive(Parser)]
#[command(name = "artin", version, about = "Invariants of Artin groups given by labelled presentation graphs")]
struct Cli {
    /// Output format; `deligne` defaults to dot, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Print nothing on success; the exit code carries the answer.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for a graph file (DSL or JSON, `-` for stdin).
    Analyze { graph: PathBuf },
    /// Word computations in the dihedral Artin group A(m).
    Dihedral {
        #[arg(long)]
        m: u32,
        #[command(subcommand)]
        op: DihedralOp,
    },
    /// Isomorphism of two large-type Artin groups, with a certificate.
    Iso { first: PathBuf, second: PathBuf },
    /// Every graph reachable by twists, up to isomorphism.
    TwistOrbit { graph: PathBuf },
    /// Rigidity criterion and twist-class size.
    Rigid { graph: PathBuf },
    /// Whether the group can be isomorphic to a large-type Artin group.
    Gate { graph: PathBuf },
    /// Truncated Deligne complex of A(m).
    Deligne {
        #[arg(long)]
        m: u32,
        /// Maximal representative length.
        #[arg(long)]
        len: u32,
        /// Highlight the standard tree of a generator power.
        #[arg(long, value_enum)]
        fix: Option<GenArg>,
        /// Exponent of the fixed generator.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
    },
}

#[derive(Subcommand)]
enum DihedralOp {
    /// Garside normal form.
    Nf { word: String },
    /// Equality of two words; exits 1 when they differ.
    Equal { first: String, second: String },
    /// Centrality and the least central power.
    Central { word: String },
    /// Centraliser shape of an element fixing only the dihedral vertex.
    Classify { word: String },
    /// Conjugacy to a power of a standard generator.
    Conjgen { word: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenArg {
    A,
    B,
}

/// A rendered answer. `negative` selects exit code 1.
struct Answer {
    json: String,
    text: String,
    dot: Option<String>,
    negative: bool,
}

impl Answer {
    fn new<T: Serialize>(value: &T, text: String) -> Self {
        Answer {
            json: serde_json::to_string_pretty(value).expect("serializable output"),
            text,
            dot: None,
            negative: false,
        }
    }
}

fn word(m: u32, text: &str) -> Result<DihedralWord, String> {
    DihedralWord::parse(m, text).map_err(|e| format!("word `{text}`: {e}"))
}

fn dihedral(m: u32, op: &DihedralOp) -> Result<Answer, String> {
    let err = |e: artin_core::dihedral::DihedralError| e.to_string();
    Ok(match op {
        DihedralOp::Nf { word: w } => {
            let nf = garside_nf(&word(m, w)?);
            let factors: Vec<String> = nf.factors().iter().map(|s| s.to_string()).collect();
            let value = json!({
                "m": m,
                "normalForm": nf.to_string(),
                "deltaPower": nf.delta_power(),
                "factors": factors,
                "word": nf.to_word().to_string(),
            });
            Answer::new(&value, format!("{nf}\n"))
        }
        DihedralOp::Equal { first, second } => {
            let equal = words_equal(&word(m, first)?, &word(m, second)?).map_err(err)?;
            let mut answer = Answer::new(&json!({ "m": m, "equal": equal }), format!("{equal}\n"));
            answer.negative = !equal;
            answer
        }
        DihedralOp::Central { word: w } => {
            let w = word(m, w)?;
            let central = is_central(&w).map_err(err)?;
            let power = if garside_nf(&w).is_identity() {
                Some(1)
            } else {
                has_central_power(&w).map_err(err)?
            };
            let text = match power {
                Some(n) => format!("central: {central}\nleast central power: {n}\n"),
                None => format!("central: {central}\nno power is central\n"),
            };
            Answer::new(
                &json!({ "m": m, "central": central, "centralPower": power }),
                text,
            )
        }
        DihedralOp::Classify { word: w } => {
            let c = explain_dihedral_centraliser(&word(m, w)?).map_err(err)?;
            let text = format!("{} [{}]\n", c.shape, c.justification);
            Answer::new(&c, text)
        }
        DihedralOp::Conjgen { word: w } => {
            let w = word(m, w)?;
            match is_conjugate_to_generator_power(&w).map_err(err)? {
                Some(wit) => {
                    let conjugator = wit.conjugator.to_string();
                    let text = format!(
                        "conjugate to {}^{} by `{}`\n",
                        wit.generator, wit.exponent, conjugator
                    );
                    Answer::new(
                        &json!({
                            "m": m,
                            "conjugate": true,
                            "generator": wit.generator.to_string(),
                            "exponent": wit.exponent,
                            "conjugator": conjugator,
                        }),
                        text,
                    )
                }
                None => Answer::new(
                    &json!({ "m": m, "conjugate": false }),
                    "not conjugate to a generator power\n".to_string(),
                ),
            }
        }
    })
}

fn run(cli: &Cli) -> Result<Answer, String> {
    Ok(match &cli.command {
        Command::Analyze { graph } => {
            let g = load_graph(graph)?;
            let r = report::analyze(&g);
            let mut answer = Answer::new(&r, r.text());
            answer.dot = Some(g.to_dot());
            answer
        }
        Command::Dihedral { m, op } => dihedral(*m, op)?,
        Command::Iso { first, second } => {
            let (g, h) = (load_graph(first)?, load_graph(second)?);
            let decision = large_type_isomorphic(&g, &h).map_err(|e| e.to_string())?;
            let mut text = format!("isomorphic: {}\n", decision.isomorphic);
            if let Some(c) = &decision.certificate {
                for t in &c.moves {
                    let _ = writeln!(text, "{t}");
                }
                for (x, y) in &c.bijection {
                    let _ = writeln!(text, "{x} -> {y}");
                }
            }
            let mut answer = Answer::new(&decision, text);
            answer.negative = !decision.isomorphic;
            answer
        }
        Command::TwistOrbit { graph } => {
            let g = load_graph(graph)?;
            let members: Vec<GraphJson> = twist_class(&g)
                .iter()
                .map(|c| GraphJson::from(&c.to_graph()))
                .collect();
            let mut text = format!("size: {}\n", members.len());
            for member in &members {
                let edges: Vec<String> =
                    member.edges.iter().map(|e| format!("{}-{}({})", e.u, e.v, e.m)).collect();
                let _ = writeln!(text, "{}", edges.join(" "));
            }
            Answer::new(&json!({ "size": members.len(), "members": members }), text)
        }
        Command::Rigid { graph } => {
            let r = rigidity_report(&load_graph(graph)?);
            let text = report::rigidity_text(&r);
            Answer::new(&r, text)
        }
        Command::Gate { graph } => {
            let v = large_type_gate(&load_graph(graph)?);
            let text = format!("{}\n", report::gate_text(&v));
            Answer::new(&v, text)
        }
        Command::Deligne { m, len, fix, power } => {
            let ball = build_ball(*m, *len).map_err(|e| e.to_string())?;
            let slice = match fix {
                Some(s) => {
                    let s = match s {
                        GenArg::A => Gen::A,
                        GenArg::B => Gen::B,
                    };
                    Some(fixed_slice(&ball, s, *power).map_err(|e| e.to_string())?)
                }
                None => None,
            };
            let mut text = format!(
                "m={m} len={len}: {} rank-0, {} rank-1, {} rank-2 vertices, {} edges, {} triangles\n",
                ball.count_rank(0),
                ball.count_rank(1),
                ball.count_rank(2),
                ball.edges().len(),
                ball.triangles().len()
            );
            if let Some(slice) = &slice {
                let names: Vec<String> = slice
                    .vertices
                    .iter()
                    .map(|&i| ball.vertices()[i].to_string())
                    .collect();
                let _ = writeln!(text, "Fix({}^{power}): {}", slice.generator, names.join(", "));
            }
            let json = export_complex(&ball, ExportFormat::Json, slice.as_ref());
            Answer {
                json,
                text,
                dot: Some(export_complex(&ball, ExportFormat::Dot, slice.as_ref())),
                negative: false,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let answer = match run(&cli) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let default = match cli.command {
        Command::Deligne { .. } => Format::Dot,
        _ => Format::Json,
    };
    let out = match cli.format.unwrap_or(default) {
        Format::Json => answer.json + "\n",
        Format::Text => answer.text,
        Format::Dot => match answer.dot {
            Some(dot) => dot,
            None => {
                eprintln!("error: dot output is available for analyze and deligne only");
                return ExitCode::from(2);
            }
        },
    };
    if !cli.quiet {
        print!("{out}");
    }
    if answer.negative {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
