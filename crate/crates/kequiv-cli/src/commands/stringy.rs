//! `kequiv stringy-e` — stringy classes of resolved singular examples.
//!
//! Each input is a simple-normal-crossings resolution: discrepancy
//! coefficients for the exceptional divisors and the classes of the open
//! strata they cut out. The stringy class is assembled twice, through two
//! algebraically different weightings of the strata, and the two results
//! must agree coefficient by coefficient. Data whose discrepancies reach
//! -1 have no stringy invariant; asking for such an example yields a
//! refusal, not a refutation.
//!
//! By default the command runs over the gallery examples that admit a
//! stringy invariant. The known non-log-terminal example participates
//! only when named explicitly.

use super::echo;
use crate::report::{Report, ReportBuilder, Status};
use crate::CliError;
use clap::Args;
use kequiv::docs::{snc_from_json, SncDoc};
use kequiv::motive::{snc_gallery, MotiveClass, MotiveError, SncResolution};
use std::path::PathBuf;

#[derive(Args)]
pub struct StringyArgs {
    /// Gallery resolution to evaluate; repeatable.
    #[arg(long = "name", value_name = "NAME")]
    pub names: Vec<String>,
    /// Resolution document to load; repeatable.
    #[arg(long = "input", value_name = "PATH")]
    pub inputs: Vec<PathBuf>,
}

fn render_uv(class: &MotiveClass) -> String {
    let num = class.numerator().display("uv").to_string();
    if class.denominator().is_one() {
        num
    } else {
        format!("({num}) / ({})", class.denominator().display("uv"))
    }
}

pub fn run(args: &StringyArgs) -> Result<Report, CliError> {
    let mut resolutions: Vec<(SncResolution, Vec<u8>)> = Vec::new();
    let mut name_tokens: Vec<String> = Vec::new();
    if args.names.is_empty() && args.inputs.is_empty() {
        for r in snc_gallery() {
            if r.stringy_class().is_ok() {
                let doc = SncDoc::from_resolution(&r)
                    .map_err(|e| CliError(format!("{}: {e}", r.name)))?;
                name_tokens.push(r.name.clone());
                resolutions.push((r, doc.to_json().into_bytes()));
            }
        }
    }
    for name in &args.names {
        let r = snc_gallery()
            .into_iter()
            .find(|r| &r.name == name)
            .ok_or_else(|| {
                CliError(format!(
                    "unknown resolution `{name}`; gallery: {}",
                    snc_gallery()
                        .iter()
                        .map(|r| r.name.clone())
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            })?;
        let doc =
            SncDoc::from_resolution(&r).map_err(|e| CliError(format!("{}: {e}", r.name)))?;
        name_tokens.push(r.name.clone());
        resolutions.push((r, doc.to_json().into_bytes()));
    }
    for path in &args.inputs {
        let bytes = std::fs::read(path)
            .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| CliError(format!("{} is not UTF-8 text", path.display())))?;
        let r = snc_from_json(&text)?;
        resolutions.push((r, bytes));
    }

    let mut parts = vec!["stringy-e".to_string()];
    for name in &name_tokens {
        parts.push(format!("--name {name}"));
    }
    for path in &args.inputs {
        parts.push(format!("--input {}", path.display()));
    }
    let mut report = ReportBuilder::new(echo(&parts));

    for (r, doc_bytes) in &resolutions {
        report.input(format!("snc:{}", r.name), doc_bytes);
        match (r.stringy_class(), r.stringy_class_via_lminus1()) {
            (Ok(direct), Ok(telescoped)) => {
                let ok = direct == telescoped;
                report.claim(
                    format!("stringy/{}/forms-agree", r.name),
                    "stringy-e",
                    if ok { Status::Verified } else { Status::Refuted },
                    render_uv(&direct),
                    render_uv(&telescoped),
                    format!(
                        "per-stratum division by [P^a] vs weighting by \
                         (L - 1)/(L^(a+1) - 1); total class of the resolution: {}",
                        render_uv(&r.total_class())
                    ),
                );
            }
            (Err(MotiveError::NotLogTerminal(msg)), Err(MotiveError::NotLogTerminal(_))) => {
                report.claim(
                    format!("stringy/{}/forms-agree", r.name),
                    "stringy-e",
                    Status::Refused,
                    "",
                    "",
                    format!("stringy invariant undefined: {msg}"),
                );
            }
            (Err(e), _) | (_, Err(e)) => {
                return Err(CliError(format!("{}: {e}", r.name)));
            }
        }
    }

    Ok(report.finish())
}
