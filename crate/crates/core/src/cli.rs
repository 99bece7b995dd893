//! Command-line front end.
//!
//! Exit codes: 0 success, 1 oracle disagreement, 2 input error, 3 resource
//! guard.

use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::bgg::{build_bgg, Preset, PresetInput};
use crate::descent::{cpn_profile, descended_cohomology, les_oracle, CohomologyProfile};
use crate::kostant::homology_weights;
use crate::lattice::{parse_rational, LieType, RootSystem, Weight};
use crate::output;
use crate::parabolic::{
    brute_force_hasse, brute_force_relative_hasse, hasse_diagram, relative_hasse, HasseDiagram, Parabolic,
};
use crate::repinfo::{freudenthal, kernel_dim, CartanElement, GroupTag};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "contact-bgg", version, about = "BGG sequences of parabolic contact structures at the level of weights")]
pub struct Cli {
    /// Output format; dot applies to hasse, rel-hasse and bgg.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, positive roots and ρ.
    Roots { algebra: String },
    /// Hasse diagram of the parabolic with the given crossed nodes.
    Hasse {
        algebra: String,
        #[arg(long)]
        cross: String,
        /// Compare against a brute-force enumeration of the Weyl group.
        #[arg(long)]
        oracle: bool,
    },
    /// Relative Hasse diagram for nested crossed sets.
    RelHasse {
        algebra: String,
        #[arg(long = "cross-p")]
        cross_p: String,
        #[arg(long = "cross-q")]
        cross_q: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Weights of the nilradical homology.
    Kostant {
        algebra: String,
        #[arg(long)]
        cross: String,
        #[arg(long)]
        weight: String,
    },
    /// BGG diagram, either explicit or from a preset.
    Bgg {
        algebra: Option<String>,
        #[arg(long)]
        cross: Option<String>,
        #[arg(long)]
        weight: Option<String>,
        /// adjoint-C, adjoint-A-even or su-center:m
        #[arg(long)]
        group: Option<String>,
        /// ricci-type:n,k,… | bilagrangean:n,k,l,… | relative-parakahler:n,k,a1,…
        #[arg(long)]
        preset: Option<String>,
    },
    /// Weight multiplicities, and the kernel dimension of a Cartan element.
    Mult {
        algebra: String,
        #[arg(long)]
        weight: String,
        /// Values of the Cartan element on the fundamental weights.
        #[arg(long = "x", allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Cohomology of a descended complex.
    Descend {
        /// JSON profile {"dim_M", "betti", "lefschetz_ranks", "w1"}.
        #[arg(long, conflicts_with = "cpn")]
        profile: Option<std::path::PathBuf>,
        #[arg(long, requires = "w1")]
        cpn: Option<usize>,
        #[arg(long)]
        w1: Option<u64>,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Rendered {
    stdout: String,
    stderr: String,
    verified: Option<bool>,
}

fn parse_algebra(s: &str) -> Result<Arc<RootSystem>> {
    Ok(Arc::new(RootSystem::new(s.parse::<LieType>()?)))
}

fn parse_nodes(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().map_err(|_| Error::input(format!("'{x}' is not a node index"))))
        .collect()
}

fn parse_weight(s: &str) -> Result<Weight> {
    let coeffs = s
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    Ok(Weight::new(coeffs))
}

fn no_dot(format: Format, what: &str) -> Result<()> {
    if format == Format::Dot {
        return Err(Error::input(format!("--format dot does not apply to {what}")));
    }
    Ok(())
}

fn with_verified(mut doc: Value, verified: Option<bool>) -> Value {
    if let Some(v) = verified {
        doc["verified"] = Value::Bool(v);
    }
    doc
}

fn same_diagram(a: &HasseDiagram, b: &HasseDiagram) -> bool {
    a.action_set() == b.action_set() && a.length_counts() == b.length_counts() && a.edges() == b.edges()
}

fn hasse_output(
    format: Format,
    algebra: &str,
    crossed: &[usize],
    doc_extra: Option<(&str, &[usize])>,
    h: &HasseDiagram,
    verified: Option<bool>,
) -> Rendered {
    let stdout = match format {
        Format::Json => {
            let mut doc = output::hasse_json(algebra, crossed, h);
            if let Some((key, nodes)) = doc_extra {
                doc[key] = serde_json::json!(nodes);
            }
            output::emit_json(&with_verified(doc, verified))
        }
        Format::Dot => output::hasse_dot(algebra, h),
        Format::Text => {
            let mut s = output::hasse_text(algebra, crossed, h);
            if let Some(v) = verified {
                s.push_str(&format!("verified: {v}\n"));
            }
            s
        }
    };
    Rendered {
        stdout,
        stderr: String::new(),
        verified,
    }
}

fn execute(cli: &Cli) -> Result<Rendered> {
    let format = cli.format;
    let plain = |stdout: String| Rendered {
        stdout,
        stderr: String::new(),
        verified: None,
    };
    match &cli.command {
        Command::Roots { algebra } => {
            no_dot(format, "roots")?;
            let rs = parse_algebra(algebra)?;
            Ok(plain(match format {
                Format::Json => output::emit_json(&output::roots_json(&rs)),
                _ => output::roots_text(&rs),
            }))
        }
        Command::Hasse { algebra, cross, oracle } => {
            let rs = parse_algebra(algebra)?;
            let p = Parabolic::new(rs.clone(), &parse_nodes(cross)?)?;
            let h = hasse_diagram(&p);
            let verified = if *oracle {
                Some(same_diagram(&h, &brute_force_hasse(&p)?))
            } else {
                None
            };
            let crossed: Vec<usize> = p.crossed().iter().copied().collect();
            Ok(hasse_output(format, &rs.lie_type().to_string(), &crossed, None, &h, verified))
        }
        Command::RelHasse {
            algebra,
            cross_p,
            cross_q,
            oracle,
        } => {
            let rs = parse_algebra(algebra)?;
            let p = Parabolic::new(rs.clone(), &parse_nodes(cross_p)?)?;
            let q = Parabolic::new(rs.clone(), &parse_nodes(cross_q)?)?;
            let h = relative_hasse(&p, &q)?;
            let verified = if *oracle {
                Some(same_diagram(&h, &brute_force_relative_hasse(&p, &q)?))
            } else {
                None
            };
            let pc: Vec<usize> = p.crossed().iter().copied().collect();
            let qc: Vec<usize> = q.crossed().iter().copied().collect();
            Ok(hasse_output(
                format,
                &rs.lie_type().to_string(),
                &qc,
                Some(("crossed_inner", &pc)),
                &h,
                verified,
            ))
        }
        Command::Kostant { algebra, cross, weight } => {
            no_dot(format, "kostant")?;
            let rs = parse_algebra(algebra)?;
            let p = Parabolic::new(rs.clone(), &parse_nodes(cross)?)?;
            let lam = parse_weight(weight)?;
            let t = homology_weights(&p, &lam)?;
            let alg = rs.lie_type().to_string();
            let crossed: Vec<usize> = p.crossed().iter().copied().collect();
            Ok(plain(match format {
                Format::Json => output::emit_json(&output::homology_json(&alg, &crossed, &lam, &t)),
                _ => output::homology_text(&alg, &crossed, &lam, &t),
            }))
        }
        Command::Bgg {
            algebra,
            cross,
            weight,
            group,
            preset,
        } => {
            let input = match (preset, algebra, cross, weight) {
                (Some(preset), None, None, None) => {
                    if group.is_some() {
                        return Err(Error::input("--group is chosen by the preset"));
                    }
                    preset.parse::<Preset>()?.inputs()?
                }
                (None, Some(algebra), Some(cross), Some(weight)) => {
                    let rs = parse_algebra(algebra)?;
                    PresetInput::Absolute {
                        parabolic: Parabolic::new(rs, &parse_nodes(cross)?)?,
                        weight: parse_weight(weight)?,
                        group: group.as_deref().map(str::parse::<GroupTag>).transpose()?,
                    }
                }
                _ => {
                    return Err(Error::input(
                        "bgg needs either --preset or an algebra with --cross and --weight",
                    ))
                }
            };
            let mut stderr = String::new();
            if let PresetInput::Absolute { parabolic, .. } = &input {
                if !parabolic.is_contact_grading() {
                    stderr.push_str("warning: the crossed nodes do not define a contact grading\n");
                }
            }
            let d = match &input {
                PresetInput::Absolute { parabolic, weight, group } => build_bgg(parabolic, weight, *group)?,
                PresetInput::Relative { .. } => input.build()?,
            };
            let stdout = match format {
                Format::Json => output::emit_json(&output::bgg_json(&d)),
                Format::Dot => output::bgg_dot(&d),
                Format::Text => output::bgg_text(&d),
            };
            Ok(Rendered {
                stdout,
                stderr,
                verified: None,
            })
        }
        Command::Mult { algebra, weight, x } => {
            no_dot(format, "mult")?;
            let rs = parse_algebra(algebra)?;
            let lam = parse_weight(weight)?;
            rs.check_rank(&lam)?;
            let table = freudenthal(&rs, &lam)?;
            let kernel = x
                .as_deref()
                .map(|x| {
                    let cartan = CartanElement::new(parse_weight(x)?.coeffs().to_vec());
                    kernel_dim(&rs, &lam, &cartan)
                })
                .transpose()?;
            let alg = rs.lie_type().to_string();
            Ok(plain(match format {
                Format::Json => {
                    let mut doc = output::multiplicity_json(&alg, &lam, &table);
                    if let Some(k) = kernel {
                        doc["kernel_dim"] = serde_json::json!(k);
                    }
                    output::emit_json(&doc)
                }
                _ => {
                    let mut s = output::multiplicity_text(&alg, &lam, &table);
                    if let Some(k) = kernel {
                        s.push_str(&format!("kernel dim: {k}\n"));
                    }
                    s
                }
            }))
        }
        Command::Descend {
            profile,
            cpn,
            w1,
            oracle,
            seed,
        } => {
            no_dot(format, "descend")?;
            let profile = match (profile, cpn) {
                (Some(path), None) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
                    CohomologyProfile::from_json(&text)?
                }
                (None, Some(n)) => cpn_profile(*n, w1.expect("clap enforces --w1"))?,
                _ => return Err(Error::input("descend needs --profile or --cpn with --w1")),
            };
            let result = descended_cohomology(&profile);
            let verified = if *oracle {
                Some(les_oracle(&profile, *seed)? == result)
            } else {
                None
            };
            let stdout = match format {
                Format::Json => output::emit_json(&with_verified(output::descend_json(&profile, &result), verified)),
                _ => {
                    let mut s = output::descend_text(&result);
                    if let Some(v) = verified {
                        s.push_str(&format!("verified: {v}\n"));
                    }
                    s
                }
            };
            Ok(Rendered {
                stdout,
                stderr: String::new(),
                verified,
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(r) => Outcome {
            code: if r.verified == Some(false) { 1 } else { 0 },
            stdout: r.stdout,
            stderr: r.stderr,
        },
        Err(e) => Outcome {
            code: match e {
                Error::Input(_) => 2,
                Error::Resource(_) => 3,
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main() -> i32 {
    let outcome = run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}
