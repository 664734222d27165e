//! Structured-document input and output: JSON forms of fans, flop pairs,
//! simple-normal-crossing resolution data, and jet models.
//!
//! This module is the untrusted boundary of the workbench. Parsing never
//! panics: every defect in malformed bytes becomes a typed [`DocError`], and
//! numeric fields are bounded *here* so that downstream exact arithmetic
//! (which assumes in-range machine integers for fan duals and jet
//! polynomials) cannot overflow or allocate absurdly. The bounds are format
//! limits, not mathematical ones; they comfortably contain every curated
//! object.

use crate::arcs::{ArcsError, JetModel};
use crate::fq::MultiPoly;
use crate::motive::{MotiveClass, MotiveError, SncResolution, SncStratum};
use crate::toric::{Fan, FlopPair, ToricError};
use crate::exactalg::UniPoly;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

/// Largest absolute value allowed for a ray coordinate. Keeps the integral
/// dual-basis solve (dimension at most 4) inside `i64`.
pub const MAX_RAY_COORD: i64 = 10_000;
/// Largest number of rays in a fan document.
pub const MAX_RAYS: usize = 256;
/// Largest number of maximal cones in a fan document.
pub const MAX_CONES: usize = 4096;
/// Largest absolute value of a jet-polynomial coefficient.
pub const MAX_JET_COEFF: i64 = 1_000;
/// Largest exponent in a jet-polynomial term.
pub const MAX_JET_EXP: u32 = 16;
/// Largest number of terms in one jet polynomial.
pub const MAX_JET_TERMS: usize = 16;
/// Largest number of variables in a jet chart.
pub const MAX_JET_VARS: usize = 4;
/// Largest number of charts in a jet-model document.
pub const MAX_CHARTS: usize = 8;
/// Largest number of strata in a resolution document.
pub const MAX_STRATA: usize = 64;
/// Largest discrepancy in a resolution document.
pub const MAX_DISCREPANCY: i64 = 64;
/// Largest coefficient list (degree + 1) for a class in `L`.
pub const MAX_CLASS_LEN: usize = 64;
/// Largest absolute value of a class coefficient.
pub const MAX_CLASS_COEFF: i64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocError {
    /// The bytes are not a well-formed document of the expected shape.
    #[error("malformed document: {0}")]
    Malformed(String),
    /// The document is well-formed but violates a format limit or an
    /// internal consistency requirement.
    #[error("invalid document `{0}`: {1}")]
    Invalid(String, String),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Motive(#[from] MotiveError),
    #[error(transparent)]
    Arcs(#[from] ArcsError),
}

fn parse_json<'a, T: Deserialize<'a>>(json: &'a str) -> Result<T, DocError> {
    serde_json::from_str(json).map_err(|e| DocError::Malformed(e.to_string()))
}

// ---------------------------------------------------------------------------
// Fans and flop pairs
// ---------------------------------------------------------------------------

/// Document form of a complete simplicial fan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    pub name: String,
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
}

fn check_rays(name: &str, rays: &[Vec<i64>], cones_len: usize) -> Result<(), DocError> {
    let bad = |msg: String| Err(DocError::Invalid(name.to_string(), msg));
    if rays.len() > MAX_RAYS {
        return bad(format!("more than {MAX_RAYS} rays"));
    }
    if cones_len > MAX_CONES {
        return bad(format!("more than {MAX_CONES} cones"));
    }
    for (i, ray) in rays.iter().enumerate() {
        if ray.len() > 4 {
            return bad(format!("ray {i} has more than 4 coordinates"));
        }
        if let Some(c) = ray.iter().find(|c| c.abs() > MAX_RAY_COORD) {
            return bad(format!("ray {i} coordinate {c} exceeds {MAX_RAY_COORD}"));
        }
    }
    Ok(())
}

impl FanDoc {
    pub fn parse(json: &str) -> Result<FanDoc, DocError> {
        parse_json(json)
    }

    /// Validates the document and builds the fan.
    pub fn to_fan(&self) -> Result<Fan, DocError> {
        check_rays(&self.name, &self.rays, self.cones.len())?;
        Ok(Fan::new(&self.name, self.dim, self.rays.clone(), self.cones.clone())?)
    }

    pub fn from_fan(fan: &Fan) -> FanDoc {
        FanDoc {
            name: fan.name.clone(),
            dim: fan.dim,
            rays: fan.rays.clone(),
            cones: fan.max_cones.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// One JSON parse-and-validate step: bytes to a checked [`Fan`].
pub fn fan_from_json(json: &str) -> Result<Fan, DocError> {
    FanDoc::parse(json)?.to_fan()
}

/// Document form of a flop pair: two fans on a shared ray set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlopPairDoc {
    pub name: String,
    pub rays: Vec<Vec<i64>>,
    pub cones_a: Vec<Vec<usize>>,
    pub cones_b: Vec<Vec<usize>>,
}

impl FlopPairDoc {
    pub fn parse(json: &str) -> Result<FlopPairDoc, DocError> {
        parse_json(json)
    }

    /// Validates the document and builds the pair. The dimension is the
    /// common ray arity.
    pub fn to_pair(&self) -> Result<FlopPair, DocError> {
        check_rays(
            &self.name,
            &self.rays,
            self.cones_a.len().max(self.cones_b.len()),
        )?;
        let dim = self.rays.first().map_or(0, |r| r.len());
        Ok(FlopPair::new(
            &self.name,
            dim,
            self.rays.clone(),
            self.cones_a.clone(),
            self.cones_b.clone(),
        )?)
    }

    pub fn from_pair(pair: &FlopPair) -> FlopPairDoc {
        FlopPairDoc {
            name: pair.name.clone(),
            rays: pair.twin_a.rays.clone(),
            cones_a: pair.twin_a.max_cones.clone(),
            cones_b: pair.twin_b.max_cones.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// One JSON parse-and-validate step: bytes to a checked [`FlopPair`].
pub fn flop_pair_from_json(json: &str) -> Result<FlopPair, DocError> {
    FlopPairDoc::parse(json)?.to_pair()
}

// ---------------------------------------------------------------------------
// SNC resolution data
// ---------------------------------------------------------------------------

/// One stratum: the divisor subset it lies on and the coefficient list of
/// its class as a polynomial in `L` (constant term first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SncStratumDoc {
    pub subset: Vec<usize>,
    pub class_coeffs: Vec<i64>,
}

/// Document form of SNC resolution data. `resolved_class` is the class of
/// the resolved space and must equal the sum of the strata classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SncDoc {
    pub name: String,
    pub discrepancies: Vec<i64>,
    pub strata: Vec<SncStratumDoc>,
    pub resolved_class: Vec<i64>,
}

fn check_class_coeffs(name: &str, what: &str, coeffs: &[i64]) -> Result<(), DocError> {
    if coeffs.len() > MAX_CLASS_LEN {
        return Err(DocError::Invalid(
            name.to_string(),
            format!("{what} has more than {MAX_CLASS_LEN} coefficients"),
        ));
    }
    if let Some(c) = coeffs.iter().find(|c| c.abs() > MAX_CLASS_COEFF) {
        return Err(DocError::Invalid(
            name.to_string(),
            format!("{what} coefficient {c} exceeds {MAX_CLASS_COEFF}"),
        ));
    }
    Ok(())
}

fn class_from_coeffs(coeffs: &[i64]) -> MotiveClass {
    MotiveClass::from_poly(UniPoly::from_int_coeffs(coeffs))
}

impl SncDoc {
    pub fn parse(json: &str) -> Result<SncDoc, DocError> {
        parse_json(json)
    }

    /// Validates the document and builds the resolution, checking that the
    /// strata partition the resolved space.
    pub fn to_resolution(&self) -> Result<SncResolution, DocError> {
        let bad = |msg: String| DocError::Invalid(self.name.clone(), msg);
        if self.strata.len() > MAX_STRATA {
            return Err(bad(format!("more than {MAX_STRATA} strata")));
        }
        if self.discrepancies.len() > MAX_STRATA {
            return Err(bad(format!("more than {MAX_STRATA} divisors")));
        }
        if let Some(a) = self
            .discrepancies
            .iter()
            .find(|a| a.abs() > MAX_DISCREPANCY)
        {
            return Err(bad(format!("discrepancy {a} exceeds {MAX_DISCREPANCY}")));
        }
        check_class_coeffs(&self.name, "resolved_class", &self.resolved_class)?;
        let mut strata = Vec::with_capacity(self.strata.len());
        for (i, s) in self.strata.iter().enumerate() {
            check_class_coeffs(&self.name, &format!("stratum {i}"), &s.class_coeffs)?;
            strata.push(SncStratum {
                divisors: s.subset.clone(),
                class: class_from_coeffs(&s.class_coeffs),
            });
        }
        let resolution = SncResolution::new(&self.name, self.discrepancies.clone(), strata)?;
        let resolved = class_from_coeffs(&self.resolved_class);
        let total = resolution.total_class();
        if total != resolved {
            return Err(bad(format!(
                "strata sum to {total}, but resolved_class is {resolved}"
            )));
        }
        Ok(resolution)
    }

    /// Writes a resolution whose strata classes are integer polynomials.
    pub fn from_resolution(r: &SncResolution) -> Result<SncDoc, DocError> {
        let name = &r.name;
        let coeffs_of = |class: &MotiveClass, what: &str| -> Result<Vec<i64>, DocError> {
            let ints = class.e_polynomial_coeffs().ok_or_else(|| {
                DocError::Invalid(
                    name.clone(),
                    format!("{what} is not an integer polynomial in L"),
                )
            })?;
            ints.iter()
                .map(|n| {
                    i64::try_from(n).map_err(|_| {
                        DocError::Invalid(name.clone(), format!("{what} coefficient overflows"))
                    })
                })
                .collect()
        };
        let mut strata = Vec::with_capacity(r.strata.len());
        for (i, s) in r.strata.iter().enumerate() {
            strata.push(SncStratumDoc {
                subset: s.divisors.clone(),
                class_coeffs: coeffs_of(&s.class, &format!("stratum {i}"))?,
            });
        }
        Ok(SncDoc {
            name: r.name.clone(),
            discrepancies: r.discrepancies.clone(),
            strata,
            resolved_class: coeffs_of(&r.total_class(), "resolved_class")?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// One JSON parse-and-validate step: bytes to a checked [`SncResolution`].
pub fn snc_from_json(json: &str) -> Result<SncResolution, DocError> {
    SncDoc::parse(json)?.to_resolution()
}

// ---------------------------------------------------------------------------
// Jet models
// ---------------------------------------------------------------------------

/// A polynomial as a term list `[coefficient, [exponents]]`, one exponent
/// per chart variable.
pub type TermListDoc = Vec<(i64, Vec<u32>)>;

/// One chart of a jet model: named variables, the component polynomials of
/// the map (one per variable), and optionally the expected Jacobian
/// determinant, cross-checked against the symbolically derived one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JetChartDoc {
    pub vars: Vec<String>,
    pub map_polynomials: Vec<TermListDoc>,
    #[serde(default)]
    pub center_zero: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jacobian: Option<TermListDoc>,
}

/// Document form of a jet model: one or more square polynomial charts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JetModelDoc {
    pub name: String,
    pub charts: Vec<JetChartDoc>,
}

fn check_term_list(
    name: &str,
    what: &str,
    nvars: usize,
    terms: &TermListDoc,
) -> Result<(), DocError> {
    let bad = |msg: String| Err(DocError::Invalid(name.to_string(), msg));
    if terms.len() > MAX_JET_TERMS {
        return bad(format!("{what} has more than {MAX_JET_TERMS} terms"));
    }
    for (coeff, exps) in terms {
        if coeff.abs() > MAX_JET_COEFF {
            return bad(format!("{what} coefficient {coeff} exceeds {MAX_JET_COEFF}"));
        }
        if exps.len() != nvars {
            return bad(format!(
                "{what} has a term with {} exponents for {nvars} variables",
                exps.len()
            ));
        }
        if let Some(e) = exps.iter().find(|e| **e > MAX_JET_EXP) {
            return bad(format!("{what} exponent {e} exceeds {MAX_JET_EXP}"));
        }
    }
    Ok(())
}

fn poly_from_terms(nvars: usize, terms: &TermListDoc) -> MultiPoly {
    MultiPoly::new(
        nvars,
        terms.iter().map(|(c, e)| (e.clone(), *c)).collect(),
    )
    .normalized()
}

impl JetModelDoc {
    pub fn parse(json: &str) -> Result<JetModelDoc, DocError> {
        parse_json(json)
    }

    /// Validates the document and builds one model per chart. Multi-chart
    /// documents get `#index` suffixes on the chart names.
    pub fn to_models(&self) -> Result<Vec<JetModel>, DocError> {
        let bad = |msg: String| DocError::Invalid(self.name.clone(), msg);
        if self.charts.is_empty() {
            return Err(bad("a model needs at least one chart".into()));
        }
        if self.charts.len() > MAX_CHARTS {
            return Err(bad(format!("more than {MAX_CHARTS} charts")));
        }
        let mut models = Vec::with_capacity(self.charts.len());
        for (ci, chart) in self.charts.iter().enumerate() {
            let chart_name = if self.charts.len() == 1 {
                self.name.clone()
            } else {
                format!("{}#{ci}", self.name)
            };
            let nvars = chart.vars.len();
            if nvars == 0 || nvars > MAX_JET_VARS {
                return Err(bad(format!(
                    "chart {ci} must have between 1 and {MAX_JET_VARS} variables"
                )));
            }
            if chart.map_polynomials.len() != nvars {
                return Err(bad(format!(
                    "chart {ci} maps {} polynomials onto {nvars} variables",
                    chart.map_polynomials.len()
                )));
            }
            let mut map = Vec::with_capacity(nvars);
            for (pi, terms) in chart.map_polynomials.iter().enumerate() {
                check_term_list(
                    &self.name,
                    &format!("chart {ci} component {pi}"),
                    nvars,
                    terms,
                )?;
                map.push(poly_from_terms(nvars, terms));
            }
            let model = JetModel::new(&chart_name, nvars, map, chart.center_zero)?;
            if let Some(expected) = &chart.jacobian {
                check_term_list(
                    &self.name,
                    &format!("chart {ci} jacobian"),
                    nvars,
                    expected,
                )?;
                let expected = poly_from_terms(nvars, expected);
                let derived = model.jacobian.normalized();
                if expected.terms != derived.terms {
                    return Err(bad(format!(
                        "chart {ci} jacobian check failed: document says {:?}, derived {:?}",
                        expected.terms, derived.terms
                    )));
                }
            }
            models.push(model);
        }
        Ok(models)
    }

    /// Writes a single-chart document for a model, including the derived
    /// Jacobian as check data.
    pub fn from_model(model: &JetModel) -> JetModelDoc {
        let vars = (0..model.dim).map(|i| format!("x{i}")).collect();
        let term_list = |p: &MultiPoly| -> TermListDoc {
            p.normalized()
                .terms
                .iter()
                .map(|(e, c)| (*c, e.clone()))
                .collect()
        };
        JetModelDoc {
            name: model.name.clone(),
            charts: vec![JetChartDoc {
                vars,
                map_polynomials: model.map.iter().map(&term_list).collect(),
                center_zero: model.center_zero,
                jacobian: Some(term_list(&model.jacobian)),
            }],
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// One JSON parse-and-validate step: bytes to checked [`JetModel`]s.
pub fn jet_models_from_json(json: &str) -> Result<Vec<JetModel>, DocError> {
    JetModelDoc::parse(json)?.to_models()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{arcs, motive, toric};
    use num_bigint::BigInt;

    #[test]
    fn fan_documents_round_trip_the_gallery() {
        for fan in toric::fan_gallery() {
            let doc = FanDoc::from_fan(&fan);
            let json = doc.to_json();
            let back = fan_from_json(&json).unwrap();
            assert_eq!(back.name, fan.name);
            assert_eq!(back.rays, fan.rays);
            assert_eq!(back.max_cones, fan.max_cones);
            // Same intersection theory, not just the same combinatorics.
            assert_eq!(
                back.point_count_at(&BigInt::from(5)),
                fan.point_count_at(&BigInt::from(5))
            );
        }
    }

    #[test]
    fn flop_documents_round_trip() {
        for pair in toric::flop_gallery() {
            let doc = FlopPairDoc::from_pair(&pair);
            let back = flop_pair_from_json(&doc.to_json()).unwrap();
            assert_eq!(back.name, pair.name);
            assert_eq!(back.twin_a.max_cones, pair.twin_a.max_cones);
            assert_eq!(back.twin_b.max_cones, pair.twin_b.max_cones);
        }
    }

    #[test]
    fn snc_documents_round_trip_and_check_the_partition() {
        for r in motive::snc_gallery() {
            let doc = SncDoc::from_resolution(&r).unwrap();
            let back = snc_from_json(&doc.to_json()).unwrap();
            assert_eq!(back.name, r.name);
            assert_eq!(back.discrepancies, r.discrepancies);
            assert_eq!(back.total_class(), r.total_class());
        }
        // A resolved_class that disagrees with the strata sum is rejected.
        let mut doc = SncDoc::from_resolution(&motive::p2_from_blowup()).unwrap();
        doc.resolved_class[0] += 1;
        assert!(matches!(
            doc.to_resolution(),
            Err(DocError::Invalid(_, _))
        ));
    }

    #[test]
    fn jet_model_documents_round_trip_with_jacobian_check() {
        for model in arcs::model_gallery() {
            let doc = JetModelDoc::from_model(&model);
            let back = jet_models_from_json(&doc.to_json()).unwrap();
            assert_eq!(back.len(), 1);
            assert_eq!(back[0].name, model.name);
            assert_eq!(back[0].jacobian.normalized().terms, model.jacobian.normalized().terms);
            assert_eq!(back[0].center_zero, model.center_zero);
        }
        // A wrong Jacobian claim is a rejected document.
        let mut doc = JetModelDoc::from_model(&arcs::find_model("bl0-a2").unwrap());
        if let Some(j) = &mut doc.charts[0].jacobian {
            j[0].0 += 1;
        }
        assert!(matches!(
            JetModelDoc::parse(&doc.to_json()).unwrap().to_models(),
            Err(DocError::Invalid(_, _))
        ));
    }

    #[test]
    fn malformed_bytes_are_typed_errors() {
        for junk in ["", "{", "[1,2,3]", "{\"name\":3}", "\"fan\"", "{}"] {
            assert!(matches!(
                FanDoc::parse(junk).map(|d| d.to_fan()),
                Err(DocError::Malformed(_))
            ));
            assert!(FlopPairDoc::parse(junk).is_err());
            assert!(SncDoc::parse(junk).is_err());
            assert!(JetModelDoc::parse(junk).is_err());
        }
    }

    #[test]
    fn structural_defects_are_rejected_not_panicked() {
        // Non-primitive ray.
        let json = r#"{"name":"x","dim":2,"rays":[[2,0],[0,1],[-1,-1]],"cones":[[0,1],[1,2],[0,2]]}"#;
        assert!(matches!(fan_from_json(json), Err(DocError::Toric(_))));
        // Oversized ray coordinate hits the format limit.
        let json = r#"{"name":"x","dim":2,"rays":[[999999999,1]],"cones":[[0]]}"#;
        assert!(matches!(fan_from_json(json), Err(DocError::Invalid(_, _))));
        // Degenerate flop with identical cone structures.
        let json = r#"{"name":"x","rays":[[1,0],[0,1],[-1,-1]],"cones_a":[[0,1],[1,2],[0,2]],"cones_b":[[0,1],[1,2],[0,2]]}"#;
        assert!(matches!(flop_pair_from_json(json), Err(DocError::Toric(_))));
        // Jet chart whose map is not square.
        let json = r#"{"name":"x","charts":[{"vars":["u","v"],"map_polynomials":[[[1,[1,0]]]]}]}"#;
        assert!(matches!(
            jet_models_from_json(json),
            Err(DocError::Invalid(_, _))
        ));
        // Jet map with identically vanishing Jacobian.
        let json = r#"{"name":"x","charts":[{"vars":["u","v"],"map_polynomials":[[[1,[1,0]]],[[1,[1,0]]]]}]}"#;
        assert!(matches!(jet_models_from_json(json), Err(DocError::Arcs(_))));
        // Stratum referencing a missing divisor.
        let json = r#"{"name":"x","discrepancies":[0],"strata":[{"subset":[],"class_coeffs":[1]},{"subset":[3],"class_coeffs":[1]}],"resolved_class":[2]}"#;
        assert!(matches!(snc_from_json(json), Err(DocError::Motive(_))));
    }
}
