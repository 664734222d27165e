//! `kequiv zeta compare` — arithmetic comparison of two proper models.
//!
//! For each requested field size q the command compares, side by side:
//! the point counts over the first R field extensions, the truncated zeta
//! series assembled from those counts, the closed rational form of the
//! zeta function, and (when the counting polynomial factors cyclotomically)
//! the Betti multiplicities it encodes. The default pair is the curated
//! flop pair, whose two sides are non-isomorphic but must agree in every
//! one of these columns; pointing the command at two unrelated fans is the
//! supported way to watch the comparison refute.

use super::{echo, resolve_fan};
use crate::report::{Report, ReportBuilder, Status};
use crate::CliError;
use clap::Args;
use kequiv::docs::FlopPairDoc;
use kequiv::toric::{find_flop, flop_gallery, Fan};
use kequiv::zeta::{fan_counts, zeta_of_fan, zeta_series_from_counts};

#[derive(Args)]
pub struct ZetaCompareArgs {
    /// Flop pair from the gallery.
    #[arg(long, default_value = "conifold-3fold", conflicts_with_all = ["fan_a", "fan_b"])]
    pub pair: String,
    /// Compare two arbitrary fans instead (gallery name or document path).
    #[arg(long, value_name = "NAME|PATH", requires = "fan_b")]
    pub fan_a: Option<String>,
    #[arg(long, value_name = "NAME|PATH", requires = "fan_a")]
    pub fan_b: Option<String>,
    /// Field sizes, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    pub q: Vec<u64>,
    /// Number of field extensions counted for the truncated series.
    #[arg(long = "R", default_value_t = 3, value_name = "ROUNDS")]
    pub rounds: usize,
}

pub fn run(args: &ZetaCompareArgs) -> Result<Report, CliError> {
    if args.q.is_empty() {
        return Err(CliError("--q needs at least one field size".into()));
    }
    for &q in &args.q {
        if q < 2 || q > 1_000_000 {
            return Err(CliError(format!(
                "field size {q} out of range; use prime powers between 2 and 10^6"
            )));
        }
    }
    if !(1..=12).contains(&args.rounds) {
        return Err(CliError("--R must be between 1 and 12".into()));
    }

    let (label, fan_a, fan_b, input_label_a, input_label_b, bytes_a, bytes_b, pair_bytes): (
        String,
        Fan,
        Fan,
        String,
        String,
        Vec<u8>,
        Vec<u8>,
        Option<Vec<u8>>,
    );
    match (&args.fan_a, &args.fan_b) {
        (Some(a), Some(b)) => {
            let (fa, ba) = resolve_fan(a)?;
            let (fb, bb) = resolve_fan(b)?;
            label = format!("{}-vs-{}", fa.name, fb.name);
            input_label_a = format!("fan-a:{}", fa.name);
            input_label_b = format!("fan-b:{}", fb.name);
            fan_a = fa;
            fan_b = fb;
            bytes_a = ba;
            bytes_b = bb;
            pair_bytes = None;
        }
        _ => {
            let pair = find_flop(&args.pair).ok_or_else(|| {
                CliError(format!(
                    "unknown pair `{}`; gallery pairs: {}",
                    args.pair,
                    flop_gallery()
                        .iter()
                        .map(|p| p.name.clone())
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            })?;
            label = pair.name.clone();
            pair_bytes = Some(FlopPairDoc::from_pair(&pair).to_json().into_bytes());
            input_label_a = String::new();
            input_label_b = String::new();
            bytes_a = Vec::new();
            bytes_b = Vec::new();
            fan_a = pair.twin_a;
            fan_b = pair.twin_b;
        }
    }

    let mut parts = vec!["zeta compare".to_string()];
    match (&args.fan_a, &args.fan_b) {
        (Some(a), Some(b)) => {
            parts.push(format!("--fan-a {a}"));
            parts.push(format!("--fan-b {b}"));
        }
        _ => parts.push(format!("--pair {}", args.pair)),
    }
    parts.push(format!(
        "--q {}",
        args.q
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(",")
    ));
    parts.push(format!("--R {}", args.rounds));
    let mut report = ReportBuilder::new(echo(&parts));

    if let Some(bytes) = &pair_bytes {
        report.input(format!("pair:{label}"), bytes);
    } else {
        report.input(input_label_a, &bytes_a);
        report.input(input_label_b, &bytes_b);
    }

    let tag = "zeta-compare";
    for &q in &args.q {
        let counts_a = fan_counts(&fan_a, q, args.rounds);
        let counts_b = fan_counts(&fan_b, q, args.rounds);
        report.equality(
            format!("zeta/{label}/q{q}/counts"),
            tag,
            format!(
                "[{}]",
                counts_a
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            format!(
                "[{}]",
                counts_b
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            format!("points over the first {} extensions of F_{q}", args.rounds),
        );

        let series_a = zeta_series_from_counts(&counts_a)
            .map_err(|e| CliError(format!("zeta series: {e}")))?;
        let series_b = zeta_series_from_counts(&counts_b)
            .map_err(|e| CliError(format!("zeta series: {e}")))?;
        report.claim(
            format!("zeta/{label}/q{q}/series"),
            tag,
            if series_a == series_b {
                Status::Verified
            } else {
                Status::Refuted
            },
            series_a.to_string(),
            series_b.to_string(),
            format!("zeta series truncated after {} extensions", args.rounds),
        );

        let zeta_a = zeta_of_fan(&fan_a, q);
        let zeta_b = zeta_of_fan(&fan_b, q);
        report.equality(
            format!("zeta/{label}/q{q}/rational"),
            tag,
            zeta_a.to_string(),
            zeta_b.to_string(),
            "closed rational form from the counting polynomial".to_string(),
        );

        let betti_a = zeta_a.betti_multiplicities(q);
        let betti_b = zeta_b.betti_multiplicities(q);
        let render = |b: &Option<Vec<u32>>| match b {
            None => "no cyclotomic factorization".to_string(),
            Some(v) => format!("{v:?}"),
        };
        let ok = betti_a.is_some() && betti_a == betti_b;
        report.claim(
            format!("zeta/{label}/q{q}/betti"),
            tag,
            if ok { Status::Verified } else { Status::Refuted },
            render(&betti_a),
            render(&betti_b),
            "multiplicity of (1 - q^i t) in the zeta denominator, by weight i".to_string(),
        );
    }

    Ok(report.finish())
}
