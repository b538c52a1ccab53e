//! Command-line front end. Every verb is a thin wrapper over library calls;
//! the binary only forwards `std::env::args` to [`main_with_args`].

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::analysis::{
    chain_meet_analysis, parse_chain, refute_least_sharp_dominator, AnalysisError,
};
use crate::element::{Element, ElementError};
use crate::fragment::{Fragment, FragmentError};
use crate::kernel::{
    verify_ea, verify_sea, AlgebraInstance, CheckError, VerifyOptions, VerifyReport,
};
use crate::mutation::{apply_mutation, MutationError, MutationSpec};
use crate::ops;
use crate::order;
use crate::reference::{boolean_instance, interval_instance, ReferenceError};

#[derive(Debug, Parser)]
#[command(
    name = "seacheck",
    version,
    about = "Axiom checking and order analysis for sequential effect algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InstanceKind {
    E0,
    Boolean,
    Interval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxiomSet {
    Ea,
    Sea,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Oplus,
    Circ,
    Ortho,
    Leq,
    Orthogonal,
    Commutes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderQuery {
    Leq,
    UpperBounds,
    LowerBounds,
    Meet,
    Join,
    Sharp,
}

#[derive(Debug, Clone, clap::Args)]
pub struct FragmentArgs {
    /// Index bound N of the E0 fragment.
    #[arg(long, default_value_t = 4)]
    pub n_max: u32,
    /// Ground-set bound K of the E0 fragment (also the boolean instance size).
    #[arg(long, default_value_t = 3)]
    pub k_max: u32,
}

impl FragmentArgs {
    fn fragment(&self) -> Result<Fragment, CliError> {
        Ok(Fragment::new(self.n_max, self.k_max)?)
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct InstanceArgs {
    #[arg(long, value_enum, default_value_t = InstanceKind::E0)]
    pub instance: InstanceKind,
    #[command(flatten)]
    pub bounds: FragmentArgs,
    /// Grid denominator of the interval instance.
    #[arg(long, default_value_t = 6)]
    pub denominator: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the fragment carrier.
    Elements {
        #[command(flatten)]
        bounds: FragmentArgs,
        #[arg(long)]
        sharp_only: bool,
    },
    /// Evaluate a single operation on E0 elements.
    Op {
        #[arg(value_enum)]
        op: OpKind,
        x: String,
        y: Option<String>,
    },
    /// Check the effect-algebra (ea) or sequential (sea) axioms.
    Verify {
        #[arg(value_enum)]
        axioms: AxiomSet,
        #[command(flatten)]
        instance: InstanceArgs,
        /// Replace one table rule: `<rule-id>[:<override>]` (E0 only).
        #[arg(long)]
        mutate: Option<String>,
        /// Exit with status 1 if any violation is found.
        #[arg(long)]
        expect_clean: bool,
        /// Scan on a single thread.
        #[arg(long)]
        serial: bool,
        /// Stop at the first violation found.
        #[arg(long)]
        early_stop: bool,
    },
    /// Order queries within an E0 fragment.
    Order {
        #[arg(value_enum)]
        query: OrderQuery,
        #[arg(required = true)]
        elements: Vec<String>,
        #[command(flatten)]
        bounds: FragmentArgs,
        #[arg(long)]
        sharp_only: bool,
    },
    /// Refute the existence of a least sharp element above a target.
    Dominate {
        target: String,
        #[command(flatten)]
        bounds: FragmentArgs,
    },
    /// Prefix meets of a descending chain of sharp d elements.
    ChainMeet {
        /// Semicolon-separated ground sets, e.g. "{1};{1,2};{1,2,3}".
        #[arg(long)]
        chain: String,
        #[command(flatten)]
        bounds: FragmentArgs,
    },
    /// Check that meets and joins of sharp elements are sharp.
    SharpClosure {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, default_value_t = 3)]
        max_subset_size: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Element(#[from] ElementError),
    #[error(transparent)]
    Fragment(#[from] FragmentError),
    #[error(transparent)]
    Mutation(#[from] MutationError),
    #[error(transparent)]
    Reference(#[from] ReferenceError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Check(CheckError),
    #[error("{0}")]
    Usage(String),
}

/// Exit status and standard output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout }
    }
}

pub fn parse_element(text: &str) -> Result<Element, ElementError> {
    text.parse()
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text(),
    }
}

fn names<E: std::fmt::Display>(items: &[E]) -> Vec<String> {
    items.iter().map(|e| e.to_string()).collect()
}

fn verify_any<I: AlgebraInstance>(
    inst: &I,
    axioms: AxiomSet,
    options: VerifyOptions,
) -> Result<(VerifyReport, Option<String>), CliError> {
    let result = match axioms {
        AxiomSet::Ea => verify_ea(inst, options),
        AxiomSet::Sea => verify_sea(inst, options),
    };
    match result {
        Ok(report) => Ok((report, None)),
        Err(CheckError::NotEffectAlgebra(report)) => Ok((
            *report,
            Some("not an effect algebra; sequential axioms not checked".to_string()),
        )),
        Err(other) => Err(CliError::Check(other)),
    }
}

fn closure_any<I: AlgebraInstance>(inst: &I, max: usize, format: Format) -> String {
    let report = order::check_sharp_closure(inst, max);
    render(format, &report, || report.to_text())
}

/// Executes one parsed command.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Elements { bounds, sharp_only } => {
            let f = bounds.fragment()?;
            let elements = if *sharp_only {
                order::sharp_elements(&f)
            } else {
                f.elements().to_vec()
            };
            let value = json!({
                "fragment": f.label(),
                "count": elements.len(),
                "elements": names(&elements),
            });
            Ok(Outcome::ok(render(format, &value, || {
                let mut out = format!("{}: {} elements\n", f.label(), elements.len());
                for e in &elements {
                    out.push_str(&format!("{e}\n"));
                }
                out
            })))
        }
        Command::Op { op, x, y } => {
            let x = parse_element(x)?;
            let y = match (op, y) {
                (OpKind::Ortho, None) => None,
                (OpKind::Ortho, Some(_)) => {
                    return Err(CliError::Usage("ortho takes one element".into()))
                }
                (_, Some(y)) => Some(parse_element(y)?),
                (_, None) => {
                    return Err(CliError::Usage("this operation takes two elements".into()))
                }
            };
            let yv = || y.clone().expect("checked above");
            let (result, witness): (String, Option<Element>) = match op {
                OpKind::Oplus => (
                    ops::oplus(&x, &yv())
                        .map(|z| z.to_string())
                        .unwrap_or_else(|| "undefined".into()),
                    None,
                ),
                OpKind::Circ => (ops::circ(&x, &yv()).to_string(), None),
                OpKind::Ortho => (ops::orthosupplement(&x).to_string(), None),
                OpKind::Leq => {
                    let w = ops::leq_witness(&x, &yv());
                    (w.is_some().to_string(), w)
                }
                OpKind::Orthogonal => (ops::orthogonal(&x, &yv()).to_string(), None),
                OpKind::Commutes => (ops::commutes(&x, &yv()).to_string(), None),
            };
            let op_name = format!("{op:?}").to_lowercase();
            let mut args = vec![x.to_string()];
            args.extend(y.iter().map(|e| e.to_string()));
            let mut value = json!({ "op": op_name, "args": args, "result": result });
            if let Some(w) = &witness {
                value["witness"] = json!(w.to_string());
            }
            Ok(Outcome::ok(render(format, &value, || match &witness {
                Some(w) => format!("{result} (witness {w})\n"),
                None => format!("{result}\n"),
            })))
        }
        Command::Verify {
            axioms,
            instance,
            mutate,
            expect_clean,
            serial,
            early_stop,
        } => {
            let options = VerifyOptions {
                parallel: !serial,
                early_stop: *early_stop,
            };
            if mutate.is_some() && instance.instance != InstanceKind::E0 {
                return Err(CliError::Usage(
                    "--mutate applies to the e0 instance only".into(),
                ));
            }
            let (report, note) = match instance.instance {
                InstanceKind::E0 => {
                    let f = instance.bounds.fragment()?;
                    match mutate {
                        Some(m) => {
                            let spec: MutationSpec = m.parse()?;
                            verify_any(&apply_mutation(f, spec), *axioms, options)?
                        }
                        None => verify_any(&f, *axioms, options)?,
                    }
                }
                InstanceKind::Boolean => {
                    verify_any(&boolean_instance(instance.bounds.k_max)?, *axioms, options)?
                }
                InstanceKind::Interval => {
                    verify_any(&interval_instance(instance.denominator)?, *axioms, options)?
                }
            };
            let code = if *expect_clean && !report.is_clean() {
                1
            } else {
                0
            };
            let stdout = render(format, &report, || {
                let mut text = report.to_text();
                if let Some(n) = &note {
                    text.push_str(&format!("{n}\n"));
                }
                text
            });
            Ok(Outcome { code, stdout })
        }
        Command::Order {
            query,
            elements,
            bounds,
            sharp_only,
        } => {
            let f = bounds.fragment()?;
            let xs: Vec<Element> = elements
                .iter()
                .map(|s| parse_element(s))
                .collect::<Result<_, _>>()?;
            let single = || -> Result<&Element, CliError> {
                match xs.as_slice() {
                    [x] => Ok(x),
                    _ => Err(CliError::Usage(
                        "this query takes exactly one element".into(),
                    )),
                }
            };
            let stdout = match query {
                OrderQuery::Leq => {
                    let [x, y] = xs.as_slice() else {
                        return Err(CliError::Usage("leq takes exactly two elements".into()));
                    };
                    let w = ops::leq_witness(x, y);
                    let value = json!({
                        "x": x.to_string(),
                        "y": y.to_string(),
                        "leq": w.is_some(),
                        "witness": w.as_ref().map(|w| w.to_string()),
                    });
                    render(format, &value, || match &w {
                        Some(w) => format!("true (witness {w})\n"),
                        None => "false\n".to_string(),
                    })
                }
                OrderQuery::UpperBounds | OrderQuery::LowerBounds => {
                    let x = single()?;
                    let (key, found) = if *query == OrderQuery::UpperBounds {
                        ("upper_bounds", order::upper_bounds(&f, x, *sharp_only))
                    } else {
                        let mut below = order::lower_bounds(&f, x);
                        if *sharp_only {
                            below.retain(|y| order::is_sharp_mult(&f, y));
                        }
                        ("lower_bounds", below)
                    };
                    let value = json!({
                        "element": x.to_string(),
                        "fragment": f.label(),
                        "sharp_only": sharp_only,
                        key: names(&found),
                    });
                    render(format, &value, || {
                        format!(
                            "{} of {}: [{}]\n",
                            key.replace('_', " "),
                            x,
                            names(&found).join(", ")
                        )
                    })
                }
                OrderQuery::Meet => {
                    let report = order::meet(&f, &xs);
                    render(format, &report, || report.to_text())
                }
                OrderQuery::Join => {
                    let report = order::join(&f, &xs);
                    render(format, &report, || report.to_text())
                }
                OrderQuery::Sharp => {
                    let x = single()?;
                    let mult = order::is_sharp_mult(&f, x);
                    let by_order = order::is_sharp_order(&f, x);
                    let value = json!({
                        "element": x.to_string(),
                        "sharp_by_product": mult,
                        "sharp_by_order": by_order,
                    });
                    render(format, &value, || {
                        format!("{x}: sharp by product {mult}, sharp by order {by_order}\n")
                    })
                }
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Dominate { target, bounds } => {
            let f = bounds.fragment()?;
            let cert = refute_least_sharp_dominator(&parse_element(target)?, &f)?;
            Ok(Outcome::ok(render(format, &cert, || cert.to_text())))
        }
        Command::ChainMeet { chain, bounds } => {
            let f = bounds.fragment()?;
            let report = chain_meet_analysis(&parse_chain(chain)?, &f)?;
            Ok(Outcome::ok(render(format, &report, || report.to_text())))
        }
        Command::SharpClosure {
            instance,
            max_subset_size,
        } => {
            let stdout = match instance.instance {
                InstanceKind::E0 => {
                    closure_any(&instance.bounds.fragment()?, *max_subset_size, format)
                }
                InstanceKind::Boolean => closure_any(
                    &boolean_instance(instance.bounds.k_max)?,
                    *max_subset_size,
                    format,
                ),
                InstanceKind::Interval => closure_any(
                    &interval_instance(instance.denominator)?,
                    *max_subset_size,
                    format,
                ),
            };
            Ok(Outcome::ok(stdout))
        }
    }
}

/// Parses arguments, runs, and prints. Returns the process exit code:
/// 0 success, 1 violations under `--expect-clean`, 2 usage error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            outcome.code
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome, CliError> {
        let cli =
            Cli::try_parse_from(std::iter::once("seacheck").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn op_oplus() {
        assert_eq!(
            run_args(&["op", "oplus", "a2", "b5"]).unwrap().stdout,
            "b3\n"
        );
        assert_eq!(
            run_args(&["op", "oplus", "b1", "b1"]).unwrap().stdout,
            "undefined\n"
        );
    }

    #[test]
    fn usage_errors() {
        assert!(matches!(
            run_args(&["op", "oplus", "a0", "b5"]),
            Err(CliError::Element(_))
        ));
        assert!(matches!(
            run_args(&["op", "oplus", "a1"]),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            run_args(&["elements", "--n-max", "0"]),
            Err(CliError::Fragment(_))
        ));
        assert!(matches!(
            run_args(&[
                "verify",
                "ea",
                "--instance",
                "boolean",
                "--mutate",
                "circ.b_b"
            ]),
            Err(CliError::Usage(_))
        ));
        assert_eq!(main_with_args(["seacheck", "bogus"]), 2);
    }

    #[test]
    fn expect_clean_sets_exit_code() {
        let out = run_args(&[
            "verify",
            "ea",
            "--n-max",
            "2",
            "--k-max",
            "1",
            "--mutate",
            "oplus.a_b.eq",
            "--expect-clean",
        ])
        .unwrap();
        assert_eq!(out.code, 1);
        let out = run_args(&[
            "verify",
            "ea",
            "--n-max",
            "2",
            "--k-max",
            "1",
            "--mutate",
            "oplus.a_b.eq",
        ])
        .unwrap();
        assert_eq!(out.code, 0);
    }
}
