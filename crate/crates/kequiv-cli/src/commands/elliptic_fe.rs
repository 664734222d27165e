//! `kequiv verify elliptic-fe` — the two-variable functional equation of
//! the elliptic genus, with a falsifiable control.
//!
//! The main claim expands the functional-equation defect symbolically in
//! the deformation parameters and requires every coefficient slot to be
//! exactly zero. The control replaces the elliptic kernel with a nearby
//! even series that provably fails the equation; the run only counts as
//! healthy if the machinery *detects* that failure, so a checker that
//! trivially reports zero cannot pass. The control is checked at the
//! truncation order where its defect is first provable, independent of
//! `--xorder`.

use super::echo;
use crate::report::{Report, ReportBuilder, Status};
use crate::CliError;
use clap::Args;
use kequiv::genera::{
    characteristic_series, jacobian_factor, negative_control_series, verify_functional_equation,
    verify_r2_functional_equation, Discrepancy, GenusSpec,
};

/// Total degree at which the control series provably violates the
/// functional equation (its defect vanishes identically through one degree
/// less).
const CONTROL_ORDER: i64 = 8;

#[derive(Args)]
pub struct EllipticFeArgs {
    /// Inclusive truncation order in the formal variable x.
    #[arg(long, default_value_t = 6)]
    pub xorder: i64,
    /// Inclusive truncation order in the deformation variable q.
    #[arg(long, default_value_t = 3)]
    pub qorder: u32,
}

fn render_discrepancy(d: &Option<Discrepancy>) -> String {
    match d {
        None => "none".to_string(),
        Some(d) => {
            let vars = ["u", "v"];
            let mut monomial = String::new();
            for (i, e) in d.exponents.iter().enumerate() {
                if *e != 0 {
                    if !monomial.is_empty() {
                        monomial.push(' ');
                    }
                    monomial.push_str(&format!("{}^{}", vars.get(i).unwrap_or(&"?"), e));
                }
            }
            format!("[{monomial}] = {}", d.value)
        }
    }
}

pub fn run(args: &EllipticFeArgs) -> Result<Report, CliError> {
    if !(1..=8).contains(&args.xorder) {
        return Err(CliError("--xorder must be between 1 and 8".into()));
    }
    if args.qorder > 6 {
        return Err(CliError("--qorder must be at most 6".into()));
    }

    let mut report = ReportBuilder::new(echo(&[
        "verify elliptic-fe".to_string(),
        format!("--xorder {}", args.xorder),
        format!("--qorder {}", args.qorder),
    ]));
    let tag = "functional-equation";

    let series = characteristic_series(
        GenusSpec::Elliptic {
            q_order: args.qorder,
        },
        args.xorder,
    )
    .map_err(|e| CliError(format!("series: {e}")))?;

    let fe = verify_functional_equation(&series, args.xorder)
        .map_err(|e| CliError(format!("functional equation: {e}")))?;
    report.claim(
        "fe/elliptic-zero",
        tag,
        if fe.verified {
            Status::Verified
        } else {
            Status::Refuted
        },
        "0",
        if fe.verified {
            "0".to_string()
        } else {
            render_discrepancy(&fe.first_discrepancy)
        },
        format!(
            "defect of the elliptic kernel: {} coefficient slots through \
             total degree {}, q-order {}; nonzero slots: {}",
            fe.slots, fe.total_order, args.qorder, fe.discrepancy_count
        ),
    );

    let control = negative_control_series(CONTROL_ORDER);
    let cfe = verify_functional_equation(&control, CONTROL_ORDER)
        .map_err(|e| CliError(format!("control: {e}")))?;
    report.claim(
        "fe/control-refutes",
        tag,
        if cfe.verified {
            Status::Refuted
        } else {
            Status::Verified
        },
        "nonzero defect expected from the control kernel".to_string(),
        render_discrepancy(&cfe.first_discrepancy),
        format!(
            "control kernel 1/(1 + x^2) at total degree {CONTROL_ORDER}: \
             {} nonzero slots of {}; largest {}",
            cfe.discrepancy_count,
            cfe.slots,
            render_discrepancy(&cfe.max_discrepancy)
        ),
    );

    let r2 = verify_r2_functional_equation(&series, args.xorder)
        .map_err(|e| CliError(format!("rank-two equation: {e}")))?;
    report.claim(
        "fe/r2-zero",
        tag,
        if r2.verified {
            Status::Verified
        } else {
            Status::Refuted
        },
        "0",
        if r2.verified {
            "0".to_string()
        } else {
            render_discrepancy(&r2.first_discrepancy)
        },
        format!(
            "rank-two defect: {} slots through total degree {}; nonzero: {}",
            r2.slots, r2.total_order, r2.discrepancy_count
        ),
    );

    let a_at_r1 = jacobian_factor(&series, 1, args.xorder)
        .map_err(|e| CliError(format!("jacobian factor: {e}")))?;
    let one = kequiv::exactalg::Series::one(a_at_r1.series.ring());
    report.claim(
        "fe/r2-a-at-r1",
        tag,
        if a_at_r1.series == one {
            Status::Verified
        } else {
            Status::Refuted
        },
        a_at_r1.series.to_string(),
        one.to_string(),
        "Jacobian factor A(t, r) at r = 1 collapses to the constant 1",
    );

    for r in [2u32, 3] {
        let a = jacobian_factor(&series, r, args.xorder)
            .map_err(|e| CliError(format!("jacobian factor: {e}")))?;
        let c = a.series.constant_term();
        report.claim(
            format!("fe/r2-a-at-t0-r{r}"),
            tag,
            if c.is_one() {
                Status::Verified
            } else {
                Status::Refuted
            },
            c.to_string(),
            "1",
            format!("constant term of A(t, {r}) in t"),
        );
    }

    Ok(report.finish())
}
