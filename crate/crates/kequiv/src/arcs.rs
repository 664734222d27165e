//! Jet spaces of birational modifications of affine space, verified by
//! exhaustive enumeration: on the stratum of jets where the Jacobian
//! determinant has order `k`, truncation to jet level `m >= 2k` makes the
//! induced map exactly `q^k`-to-one onto its image.
//!
//! Models carry the defining polynomial map only; the Jacobian determinant
//! is derived symbolically, so the verified order function cannot drift
//! from the map. Strata with `2k > m` are never silently certified: they
//! are reported as uncertified mass, and a request that needs them is
//! refused.

use crate::fq::{poly_determinant, FqError, MultiPoly, SmallField};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArcsError {
    #[error("invalid jet model `{0}`: {1}")]
    InvalidModel(String, String),
    #[error("enumeration budget exceeded: {0} jets requested, budget {1}")]
    BudgetExceeded(BigInt, u64),
    #[error("jet order {m} cannot certify Jacobian order {k}: need m >= 2k")]
    OrderTooSmall { m: u32, k: u32 },
    #[error(transparent)]
    Field(#[from] FqError),
}

/// A polynomial self-map of affine n-space used as a jet-space model.
#[derive(Debug, Clone)]
pub struct JetModel {
    pub name: String,
    pub dim: usize,
    pub map: Vec<MultiPoly>,
    /// Derived symbolically from `map`; never supplied by hand.
    pub jacobian: MultiPoly,
    /// When set, only jets whose image is centered at the origin are
    /// considered (the interesting locus for blow-up charts).
    pub center_zero: bool,
}

impl JetModel {
    pub fn new(
        name: &str,
        dim: usize,
        map: Vec<MultiPoly>,
        center_zero: bool,
    ) -> Result<JetModel, ArcsError> {
        let bad = |msg: String| ArcsError::InvalidModel(name.to_string(), msg);
        if dim == 0 || map.len() != dim {
            return Err(bad(format!(
                "need exactly {dim} component polynomials, got {}",
                map.len()
            )));
        }
        for (i, p) in map.iter().enumerate() {
            if p.nvars != dim {
                return Err(bad(format!("component {i} uses {} variables", p.nvars)));
            }
        }
        let jac_matrix: Vec<Vec<MultiPoly>> = map
            .iter()
            .map(|p| (0..dim).map(|v| p.derivative(v)).collect())
            .collect();
        let jacobian = poly_determinant(&jac_matrix);
        if jacobian.is_zero() {
            return Err(bad(
                "Jacobian determinant vanishes identically (map is not generically etale)"
                    .into(),
            ));
        }
        Ok(JetModel {
            name: name.to_string(),
            dim,
            map: map.into_iter().map(|p| p.normalized()).collect(),
            jacobian,
            center_zero,
        })
    }
}

/// Truncated polynomial arithmetic in `F_q[t]/t^{m+1}`; values are
/// coefficient vectors of length `m + 1`.
fn tmul(f: &SmallField, a: &[u16], b: &[u16]) -> Vec<u16> {
    let m = a.len();
    let mut out = vec![0u16; m];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if i + j >= m {
                break;
            }
            if y != 0 {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
    }
    out
}

fn tpow(f: &SmallField, a: &[u16], e: u32) -> Vec<u16> {
    let m = a.len();
    let mut acc = vec![0u16; m];
    acc[0] = 1;
    for _ in 0..e {
        acc = tmul(f, &acc, a);
    }
    acc
}

/// Evaluates a polynomial at a jet (one truncated series per variable).
fn eval_at_jet(poly: &MultiPoly, f: &SmallField, jet: &[Vec<u16>]) -> Vec<u16> {
    let m = jet[0].len();
    let mut acc = vec![0u16; m];
    for (exps, c) in &poly.terms {
        let mut term = vec![0u16; m];
        term[0] = f.from_int(*c);
        for (coord, &e) in jet.iter().zip(exps) {
            if e > 0 {
                term = tmul(f, &term, &tpow(f, coord, e));
            }
        }
        for (o, t) in acc.iter_mut().zip(&term) {
            *o = f.add(*o, *t);
        }
    }
    acc
}

fn t_order(v: &[u16]) -> Option<u32> {
    v.iter().position(|&c| c != 0).map(|p| p as u32)
}

/// Evaluates a polynomial at the constant parts of a jet only (the t⁰
/// layer), used as a cheap centering pre-filter before full evaluation.
fn eval_constant(poly: &MultiPoly, f: &SmallField, consts: &[u16]) -> u16 {
    let mut acc = 0u16;
    for (exps, c) in &poly.terms {
        let mut term = f.from_int(*c);
        for (&x, &e) in consts.iter().zip(exps) {
            for _ in 0..e {
                term = f.mul(term, x);
            }
        }
        acc = f.add(acc, term);
    }
    acc
}

/// Packs a flattened image jet into one word, digitwise base `q`. Safe
/// because the enumeration budget already bounds `q^(n(m+1))` by a `u64`.
fn pack_image(image: &[Vec<u16>], q: u64) -> u64 {
    let mut key = 0u64;
    for coord in image.iter().rev() {
        for &d in coord.iter().rev() {
            key = key * q + d as u64;
        }
    }
    key
}

/// Exact bookkeeping for one Jacobian-order stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumReport {
    pub jacobian_order: u32,
    /// Number of source jets in the stratum.
    pub jets: u64,
    /// Number of distinct image jets.
    pub images: u64,
    /// Whether every nonempty fiber has exactly `q^k` jets.
    pub fibration_holds: bool,
}

/// Result of the jet-level change-of-variables verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationReport {
    pub model: String,
    pub q: u64,
    pub jet_order: u32,
    /// Total number of source jets considered (after centering filter).
    pub total_jets: u64,
    /// Strata with `2k <= m`, exactly verified.
    pub strata: Vec<StratumReport>,
    /// Source jets with `2k > m`, by Jacobian order: present but refused.
    pub uncertified: BTreeMap<u32, u64>,
    /// Source jets whose Jacobian vanishes to every computed order.
    pub jacobian_degenerate: u64,
    /// Whether image sets of distinct certified strata are disjoint.
    pub strata_images_disjoint: bool,
}

impl FibrationReport {
    pub fn verified(&self) -> bool {
        self.strata.iter().all(|s| s.fibration_holds)
    }

    /// The largest certifiable Jacobian order at this jet level.
    pub fn max_certifiable(&self) -> u32 {
        self.jet_order / 2
    }

    /// The change-of-variables mass `Σ_k q^{-k}·|stratum k|` over the
    /// certified strata, as an exact rational.
    pub fn weighted_jet_mass(&self) -> BigRational {
        let q = BigInt::from(self.q);
        let mut acc = BigRational::from_integer(BigInt::from(0));
        for s in &self.strata {
            acc += BigRational::new(
                BigInt::from(s.jets),
                q.pow(s.jacobian_order),
            );
        }
        acc
    }

    /// Total number of distinct image jets across certified strata.
    pub fn certified_images(&self) -> u64 {
        self.strata.iter().map(|s| s.images).sum()
    }
}

/// Default cap on the number of enumerated jets.
pub const DEFAULT_JET_BUDGET: u64 = 1 << 21;

/// Verifies the `q^k`-fibration structure of the truncated map on every
/// certifiable Jacobian-order stratum by exhaustive enumeration of source
/// jets of order `m` over the field of `q` elements.
pub fn verify_fibration(
    model: &JetModel,
    q: u64,
    m: u32,
    budget: u64,
) -> Result<FibrationReport, ArcsError> {
    let field = SmallField::new(q)?;
    let n = model.dim;
    let coords = n * (m as usize + 1);
    let total = BigInt::from(q).pow(coords as u32);
    if total > BigInt::from(budget) {
        return Err(ArcsError::BudgetExceeded(total, budget));
    }

    // fibers[k]: the packed image of every source jet in the stratum; fiber
    // sizes are recovered afterwards by sorting and run-length counting,
    // which keeps memory at one word per jet even for millions of images.
    let mut fibers: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
    let mut uncertified: BTreeMap<u32, u64> = BTreeMap::new();
    let mut degenerate: u64 = 0;
    let mut considered: u64 = 0;

    let step = m as usize + 1;
    let mut digits = vec![0u16; coords];
    let mut jet: Vec<Vec<u16>> = vec![vec![0u16; step]; n];
    let mut consts = vec![0u16; n];
    loop {
        let centered = if model.center_zero {
            for (c, chunk) in consts.iter_mut().zip(digits.chunks(step)) {
                *c = chunk[0];
            }
            model
                .map
                .iter()
                .all(|p| eval_constant(p, &field, &consts) == 0)
        } else {
            true
        };
        if centered {
            for (i, chunk) in digits.chunks(step).enumerate() {
                jet[i].copy_from_slice(chunk);
            }
            considered += 1;
            match t_order(&eval_at_jet(&model.jacobian, &field, &jet)) {
                None => degenerate += 1,
                Some(k) if 2 * k > m => *uncertified.entry(k).or_insert(0) += 1,
                Some(k) => {
                    let image: Vec<Vec<u16>> = model
                        .map
                        .iter()
                        .map(|p| eval_at_jet(p, &field, &jet))
                        .collect();
                    fibers.entry(k).or_default().push(pack_image(&image, q));
                }
            }
        }
        // Odometer increment over all coordinates.
        let mut i = 0;
        loop {
            if i == coords {
                break;
            }
            digits[i] += 1;
            if (digits[i] as u64) < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == coords {
            break;
        }
    }

    let mut strata = Vec::new();
    let mut image_sets: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
    for (k, mut keys) in fibers {
        keys.sort_unstable();
        let expected = q.pow(k);
        let jets = keys.len() as u64;
        let mut images = 0u64;
        let mut holds = true;
        let mut distinct = Vec::new();
        let mut i = 0usize;
        while i < keys.len() {
            let mut j = i + 1;
            while j < keys.len() && keys[j] == keys[i] {
                j += 1;
            }
            images += 1;
            distinct.push(keys[i]);
            if (j - i) as u64 != expected {
                holds = false;
            }
            i = j;
        }
        strata.push(StratumReport {
            jacobian_order: k,
            jets,
            images,
            fibration_holds: holds,
        });
        image_sets.insert(k, distinct);
    }
    // Image sets of different certified strata must not overlap: merge the
    // sorted distinct-image lists pairwise.
    let mut disjoint = true;
    let ks: Vec<u32> = image_sets.keys().copied().collect();
    for (a, &ka) in ks.iter().enumerate() {
        for &kb in &ks[a + 1..] {
            let (xs, ys) = (&image_sets[&ka], &image_sets[&kb]);
            let (mut i, mut j) = (0usize, 0usize);
            while i < xs.len() && j < ys.len() {
                match xs[i].cmp(&ys[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        disjoint = false;
                        break;
                    }
                }
            }
        }
    }
    Ok(FibrationReport {
        model: model.name.clone(),
        q,
        jet_order: m,
        total_jets: considered,
        strata,
        uncertified,
        jacobian_degenerate: degenerate,
        strata_images_disjoint: disjoint,
    })
}

/// Like [`verify_fibration`], but demands that the stratum of Jacobian
/// order `k` be certifiable; refuses (rather than silently dropping the
/// stratum) when `m < 2k`.
pub fn verify_fibration_at_order(
    model: &JetModel,
    q: u64,
    m: u32,
    k: u32,
    budget: u64,
) -> Result<FibrationReport, ArcsError> {
    if 2 * k > m {
        return Err(ArcsError::OrderTooSmall { m, k });
    }
    verify_fibration(model, q, m, budget)
}

// ---------------------------------------------------------------------------
// Curated models
// ---------------------------------------------------------------------------

fn var(n: usize, i: usize) -> MultiPoly {
    MultiPoly::variable(n, i)
}

/// The identity map of the affine plane (Jacobian 1; every fiber trivial).
pub fn model_identity_a2() -> JetModel {
    JetModel::new("identity-a2", 2, vec![var(2, 0), var(2, 1)], false)
        .expect("model data is valid")
}

/// Chart of the blow-up of the plane at the origin: (u, v) -> (u, uv).
pub fn model_blowup_a2() -> JetModel {
    let u = var(2, 0);
    let v = var(2, 1);
    JetModel::new("bl0-a2", 2, vec![u.clone(), u.mul(&v)], true)
        .expect("model data is valid")
}

/// Chart of the blow-up of 3-space at the origin: (u, v, w) -> (u, uv, uw).
pub fn model_blowup_a3() -> JetModel {
    let u = var(3, 0);
    let v = var(3, 1);
    let w = var(3, 2);
    JetModel::new("bl0-a3", 3, vec![u.clone(), u.mul(&v), u.mul(&w)], true)
        .expect("model data is valid")
}

/// Chart of the blow-up of 3-space along a line: (u, v, w) -> (u, uv, w).
pub fn model_blowup_line_a3() -> JetModel {
    let u = var(3, 0);
    let v = var(3, 1);
    let w = var(3, 2);
    JetModel::new("bl-line-a3", 3, vec![u.clone(), u.mul(&v), w], true)
        .expect("model data is valid")
}

pub fn model_gallery() -> Vec<JetModel> {
    vec![
        model_identity_a2(),
        model_blowup_a2(),
        model_blowup_a3(),
        model_blowup_line_a3(),
    ]
}

pub fn find_model(name: &str) -> Option<JetModel> {
    model_gallery().into_iter().find(|m| m.name == name)
}
