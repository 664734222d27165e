//! The uniform claim/report structure shared by every subcommand.
//!
//! A run produces exactly one report: the canonicalized command line, a
//! content digest for every input document the run consumed, and a list of
//! claims sorted by id. Each claim is an equality (or a policy refusal)
//! with both sides rendered exactly; nothing is rounded. Machine output is
//! canonical JSON and byte-identical across reruns of the same command on
//! the same inputs.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Every claim verified, none refused.
pub const EXIT_VERIFIED: i32 = 0;
/// At least one claim refuted.
pub const EXIT_REFUTED: i32 = 1;
/// Malformed input or invalid configuration; no report is produced.
pub const EXIT_MALFORMED: i32 = 2;
/// No refuted claims, but at least one check was declined by policy
/// (for example an enumeration budget).
pub const EXIT_REFUSED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Refused,
}

/// One checked identity: `lhs` and `rhs` are exact renderings of the two
/// sides, `witness` carries whatever makes the outcome auditable (counts,
/// first discrepancies, scope notes).
#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: String,
    pub tag: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub verified: usize,
    pub refuted: usize,
    pub refused: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    /// Input label -> SHA-256 digest of the canonical document bytes.
    pub inputs: BTreeMap<String, String>,
    pub claims: Vec<Claim>,
    pub summary: Summary,
    pub exit: i32,
}

pub struct ReportBuilder {
    command: String,
    inputs: BTreeMap<String, String>,
    claims: Vec<Claim>,
}

impl ReportBuilder {
    pub fn new(command: impl Into<String>) -> Self {
        ReportBuilder {
            command: command.into(),
            inputs: BTreeMap::new(),
            claims: Vec::new(),
        }
    }

    /// Records the digest of an input document under a stable label.
    pub fn input(&mut self, label: impl Into<String>, bytes: &[u8]) {
        self.inputs.insert(label.into(), digest_hex(bytes));
    }

    pub fn claim(
        &mut self,
        id: impl Into<String>,
        tag: &str,
        status: Status,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        witness: impl Into<String>,
    ) {
        self.claims.push(Claim {
            id: id.into(),
            tag: tag.to_string(),
            status,
            lhs: lhs.into(),
            rhs: rhs.into(),
            witness: witness.into(),
        });
    }

    /// An equality claim: verified exactly when the two exact renderings
    /// coincide. Returns whether it verified.
    pub fn equality(
        &mut self,
        id: impl Into<String>,
        tag: &str,
        lhs: String,
        rhs: String,
        witness: impl Into<String>,
    ) -> bool {
        let ok = lhs == rhs;
        let status = if ok { Status::Verified } else { Status::Refuted };
        self.claim(id, tag, status, lhs, rhs, witness);
        ok
    }

    pub fn finish(mut self) -> Report {
        self.claims.sort_by(|a, b| a.id.cmp(&b.id));
        let verified = count(&self.claims, Status::Verified);
        let refuted = count(&self.claims, Status::Refuted);
        let refused = count(&self.claims, Status::Refused);
        let exit = if refuted > 0 {
            EXIT_REFUTED
        } else if refused > 0 {
            EXIT_REFUSED
        } else {
            EXIT_VERIFIED
        };
        Report {
            command: self.command,
            inputs: self.inputs,
            claims: self.claims,
            summary: Summary {
                verified,
                refuted,
                refused,
            },
            exit,
        }
    }
}

fn count(claims: &[Claim], status: Status) -> usize {
    claims.iter().filter(|c| c.status == status).count()
}

pub fn digest_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for byte in digest {
        write!(out, "{byte:02x}").expect("write to String cannot fail");
    }
    out
}

impl Report {
    /// Canonical JSON: map keys sorted, claims sorted by id, trailing
    /// newline. Reruns of the same command on the same inputs are
    /// byte-identical.
    pub fn render_machine(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        if !self.inputs.is_empty() {
            let _ = writeln!(out, "inputs:");
            for (label, digest) in &self.inputs {
                let _ = writeln!(out, "  {label}  sha256:{digest}");
            }
        }
        for claim in &self.claims {
            let mark = match claim.status {
                Status::Verified => " ok ",
                Status::Refuted => "FAIL",
                Status::Refused => "skip",
            };
            let _ = writeln!(out, "[{mark}] {}  ({})", claim.id, claim.tag);
            if claim.status != Status::Verified {
                let _ = writeln!(out, "       lhs: {}", claim.lhs);
                let _ = writeln!(out, "       rhs: {}", claim.rhs);
            }
            if !claim.witness.is_empty() {
                let _ = writeln!(out, "       {}", claim.witness);
            }
        }
        let _ = writeln!(
            out,
            "verified {}  refuted {}  refused {}  exit {}",
            self.summary.verified, self.summary.refuted, self.summary.refused, self.exit
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_claim_statuses() {
        let mut b = ReportBuilder::new("kequiv test");
        b.claim("b", "t", Status::Verified, "1", "1", "");
        b.claim("a", "t", Status::Verified, "2", "2", "");
        let r = b.finish();
        assert_eq!(r.exit, EXIT_VERIFIED);
        assert_eq!(r.claims[0].id, "a", "claims are sorted by id");

        let mut b = ReportBuilder::new("kequiv test");
        b.claim("a", "t", Status::Refused, "", "", "budget");
        let r = b.finish();
        assert_eq!(r.exit, EXIT_REFUSED);

        let mut b = ReportBuilder::new("kequiv test");
        b.claim("a", "t", Status::Refused, "", "", "budget");
        b.claim("b", "t", Status::Refuted, "1", "2", "");
        let r = b.finish();
        assert_eq!(r.exit, EXIT_REFUTED, "refutation outranks refusal");
    }

    #[test]
    fn machine_rendering_is_stable() {
        let build = || {
            let mut b = ReportBuilder::new("kequiv test");
            b.input("fan:p2", b"abc");
            b.claim("a", "t", Status::Verified, "1", "1", "w");
            b.finish().render_machine()
        };
        assert_eq!(build(), build());
        assert!(build().contains("\"exit\": 0"));
    }

    #[test]
    fn digests_are_lowercase_hex() {
        let d = digest_hex(b"");
        assert_eq!(d.len(), 64);
        assert_eq!(
            d,
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
