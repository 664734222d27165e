//! One module per subcommand, plus shared argument types and lookups.

pub mod arcs_verify;
pub mod blowup_motive;
pub mod cov;
pub mod elliptic_fe;
pub mod gallery;
pub mod genus;
pub mod stringy;
pub mod zeta_compare;

use crate::CliError;
use clap::ValueEnum;
use kequiv::docs::FanDoc;
use kequiv::genera::GenusSpec;
use kequiv::toric::{named_fan, Fan};
use std::path::Path;

/// Characteristic series selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpecArg {
    /// x / (1 - e^{-x}): the Todd series (holomorphic Euler characteristic).
    Todd,
    /// The k-twisted chi_y series.
    ChiY,
    /// The full three-parameter elliptic family.
    Elliptic,
}

impl SpecArg {
    pub fn to_spec(self, q_order: u32) -> GenusSpec {
        match self {
            SpecArg::Todd => GenusSpec::Todd,
            SpecArg::ChiY => GenusSpec::TwistedChiY,
            SpecArg::Elliptic => GenusSpec::Elliptic { q_order },
        }
    }

    /// Stable kebab-case token used in claim ids and command echoes.
    pub fn token(self) -> &'static str {
        match self {
            SpecArg::Todd => "todd",
            SpecArg::ChiY => "chi-y",
            SpecArg::Elliptic => "elliptic",
        }
    }
}

/// Resolves a fan given either a gallery name or a path to a fan document.
/// Gallery names win; anything else must be a readable, valid document.
pub fn resolve_fan(token: &str) -> Result<(Fan, Vec<u8>), CliError> {
    if let Some(fan) = named_fan(token) {
        let doc = FanDoc::from_fan(&fan).to_json();
        return Ok((fan, doc.into_bytes()));
    }
    let path = Path::new(token);
    if path.exists() {
        let bytes = std::fs::read(path)
            .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| CliError(format!("{} is not UTF-8 text", path.display())))?;
        let fan = FanDoc::parse(&text)?.to_fan()?;
        return Ok((fan, bytes));
    }
    Err(CliError(format!(
        "`{token}` is neither a gallery fan nor a readable file; gallery fans: {}",
        gallery_fan_names().join(", ")
    )))
}

pub fn gallery_fan_names() -> Vec<String> {
    kequiv::toric::fan_gallery()
        .into_iter()
        .map(|f| f.name)
        .collect()
}

/// Canonical echo of the invocation, with defaults made explicit so the
/// echoed command reruns identically.
pub fn echo(parts: &[String]) -> String {
    let mut out = String::from("kequiv");
    for part in parts {
        out.push(' ');
        out.push_str(part);
    }
    out
}
