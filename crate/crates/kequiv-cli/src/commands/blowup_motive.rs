//! `kequiv verify blowup-motive` — blow-up identities in the localized
//! Grothendieck ring.
//!
//! For each blow-up the class of the base is recomputed from the blow-up
//! side in two algebraically distinct ways: the scissor form
//! `[Y] - [E] + [Z]` and the localized form `([Y] - [E]) + [E] / [P^{r-1}]`,
//! where division happens in the localization. The class data enter from
//! two independent routes (orbit counts of the toric models on one side,
//! closed-form exceptional/center classes on the other), so agreement is
//! not built in.

use super::echo;
use crate::report::{Report, ReportBuilder};
use crate::CliError;
use clap::Args;
use kequiv::motive::{blowup_class_gallery, find_blowup_classes, BlowupClassDatum, MotiveClass};

#[derive(Args)]
pub struct BlowupMotiveArgs {
    /// Blow-up to check; repeatable. Defaults to the full gallery.
    #[arg(long = "blowup", value_name = "NAME")]
    pub blowups: Vec<String>,
}

pub fn run(args: &BlowupMotiveArgs) -> Result<Report, CliError> {
    let data: Vec<BlowupClassDatum> = if args.blowups.is_empty() {
        blowup_class_gallery()
    } else {
        args.blowups
            .iter()
            .map(|name| {
                find_blowup_classes(name).ok_or_else(|| {
                    CliError(format!(
                        "unknown blow-up `{name}`; gallery: {}",
                        blowup_class_gallery()
                            .iter()
                            .map(|d| d.name.clone())
                            .collect::<Vec<_>>()
                            .join(", ")
                    ))
                })
            })
            .collect::<Result<_, _>>()?
    };

    let mut parts = vec!["verify blowup-motive".to_string()];
    for d in &data {
        parts.push(format!("--blowup {}", d.name));
    }
    let mut report = ReportBuilder::new(echo(&parts));

    for datum in &data {
        let off_e = datum.blowup.sub(&datum.exceptional);
        let scissor = off_e.add(&datum.center);
        let fiber = MotiveClass::projective_space(datum.codim - 1);
        let localized = off_e.add(
            &datum
                .exceptional
                .div(&fiber)
                .map_err(|e| CliError(format!("{}: {e}", datum.name)))?,
        );

        report.equality(
            format!("blowup-motive/{}/scissor", datum.name),
            "blowup-motive",
            datum.base.to_string(),
            scissor.to_string(),
            format!(
                "[X] vs [Y] - [E] + [Z] for {}; codimension {}",
                datum.name, datum.codim
            ),
        );
        report.equality(
            format!("blowup-motive/{}/localized", datum.name),
            "blowup-motive",
            datum.base.to_string(),
            localized.to_string(),
            format!(
                "[X] vs ([Y] - [E]) + [E] / [P^{}] for {}; division in the \
                 localized ring",
                datum.codim - 1,
                datum.name
            ),
        );
    }

    Ok(report.finish())
}
