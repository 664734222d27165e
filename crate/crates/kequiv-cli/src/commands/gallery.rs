//! `kequiv gallery list` — the curated objects, with canonical digests.
//!
//! Every object that has a document form is emitted, re-parsed, and
//! re-emitted; the claim compares the two digests, so a verified row
//! guarantees the printed digest identifies a stable, round-trippable
//! document. Spaces given directly by intersection-theory presentations
//! carry an internal cross-check instead: the Euler characteristic from
//! the presentation must match the point-count polynomial of the matching
//! fan where one exists.

use super::echo;
use crate::report::{digest_hex, Report, ReportBuilder, Status};
use crate::CliError;
use clap::Args;
use kequiv::docs::{FanDoc, FlopPairDoc, JetModelDoc, SncDoc};
use kequiv::{arcs, chow, motive, toric};

#[derive(Args)]
pub struct GalleryListArgs {
    /// Restrict to one kind of object.
    #[arg(long, value_parser = ["spaces", "fans", "flops", "snc", "jets"])]
    pub kind: Option<String>,
}

pub fn run(args: &GalleryListArgs) -> Result<Report, CliError> {
    let mut parts = vec!["gallery list".to_string()];
    if let Some(kind) = &args.kind {
        parts.push(format!("--kind {kind}"));
    }
    let mut report = ReportBuilder::new(echo(&parts));
    let want = |k: &str| args.kind.as_deref().map_or(true, |v| v == k);
    let tag = "gallery";

    if want("spaces") {
        for space in chow::gallery() {
            let chi = space.euler_characteristic();
            let (rhs, note) = match toric::named_fan(&space.name) {
                Some(fan) => (
                    fan.max_cones.len().to_string(),
                    "Euler characteristic from the intersection presentation vs \
                     the number of top-dimensional cones of the matching fan",
                ),
                None => (
                    chi.to_string(),
                    "no fan model; Euler characteristic from the presentation",
                ),
            };
            report.claim(
                format!("gallery/space/{}", space.name),
                tag,
                if chi.to_string() == rhs {
                    Status::Verified
                } else {
                    Status::Refuted
                },
                chi.to_string(),
                rhs,
                format!("dim {}; {note}", space.dim),
            );
        }
    }

    if want("fans") {
        for fan in toric::fan_gallery() {
            let doc = FanDoc::from_fan(&fan).to_json();
            let reparsed = FanDoc::parse(&doc)?.to_fan()?;
            let doc2 = FanDoc::from_fan(&reparsed).to_json();
            let (d1, d2) = (digest_hex(doc.as_bytes()), digest_hex(doc2.as_bytes()));
            report.input(format!("fan:{}", fan.name), doc.as_bytes());
            report.claim(
                format!("gallery/fan/{}", fan.name),
                tag,
                if d1 == d2 {
                    Status::Verified
                } else {
                    Status::Refuted
                },
                d1,
                d2,
                format!(
                    "dim {}, {} rays, {} top cones; document round-trip digest",
                    fan.dim,
                    fan.rays.len(),
                    fan.max_cones.len()
                ),
            );
        }
    }

    if want("flops") {
        for pair in toric::flop_gallery() {
            let doc = FlopPairDoc::from_pair(&pair).to_json();
            let reparsed = kequiv::docs::flop_pair_from_json(&doc)?;
            let doc2 = FlopPairDoc::from_pair(&reparsed).to_json();
            let (d1, d2) = (digest_hex(doc.as_bytes()), digest_hex(doc2.as_bytes()));
            report.input(format!("pair:{}", pair.name), doc.as_bytes());
            report.claim(
                format!("gallery/flop/{}", pair.name),
                tag,
                if d1 == d2 {
                    Status::Verified
                } else {
                    Status::Refuted
                },
                d1,
                d2,
                format!(
                    "two complete fans on {} shared rays, dim {}; document \
                     round-trip digest",
                    pair.twin_a.rays.len(),
                    pair.twin_a.dim
                ),
            );
        }
    }

    if want("snc") {
        for r in motive::snc_gallery() {
            let doc = SncDoc::from_resolution(&r)
                .map_err(|e| CliError(format!("{}: {e}", r.name)))?
                .to_json();
            let reparsed = kequiv::docs::snc_from_json(&doc)?;
            let doc2 = SncDoc::from_resolution(&reparsed)
                .map_err(|e| CliError(format!("{}: {e}", r.name)))?
                .to_json();
            let (d1, d2) = (digest_hex(doc.as_bytes()), digest_hex(doc2.as_bytes()));
            report.input(format!("snc:{}", r.name), doc.as_bytes());
            report.claim(
                format!("gallery/snc/{}", r.name),
                tag,
                if d1 == d2 {
                    Status::Verified
                } else {
                    Status::Refuted
                },
                d1,
                d2,
                format!(
                    "{} exceptional divisors, {} strata, stringy invariant \
                     defined: {}; document round-trip digest",
                    r.discrepancies.len(),
                    r.strata.len(),
                    r.stringy_class().is_ok()
                ),
            );
        }
    }

    if want("jets") {
        for model in arcs::model_gallery() {
            let doc = JetModelDoc::from_model(&model).to_json();
            let reparsed = kequiv::docs::jet_models_from_json(&doc)?;
            let first = reparsed
                .first()
                .ok_or_else(|| CliError(format!("{}: empty document", model.name)))?;
            let doc2 = JetModelDoc::from_model(first).to_json();
            let (d1, d2) = (digest_hex(doc.as_bytes()), digest_hex(doc2.as_bytes()));
            report.input(format!("jet-model:{}", model.name), doc.as_bytes());
            report.claim(
                format!("gallery/jet-model/{}", model.name),
                tag,
                if d1 == d2 {
                    Status::Verified
                } else {
                    Status::Refuted
                },
                d1,
                d2,
                format!(
                    "self-map of affine {}-space; document round-trip digest",
                    model.dim
                ),
            );
        }
    }

    Ok(report.finish())
}
