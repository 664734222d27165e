//! Weil zeta functions from exact point counts: building the exponential
//! generating series, reconstructing it as a rational function by an exact
//! degree sweep, and cross-checking against the product form predicted by a
//! polynomial point count.

use crate::exactalg::{RatRing, Series, SeriesRing, UniPoly};
use crate::linalg;
use crate::toric::Fan;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZetaError {
    #[error("need at least one point count")]
    NoCounts,
    #[error("rational reconstruction failed: {0}")]
    ReconstructionFailed(String),
    #[error("count polynomial has non-integer coefficients")]
    NotIntegral,
}

/// A rational function `num(t)/den(t)` with `num(0) = den(0) = 1`, stored
/// reduced to lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalZeta {
    num: UniPoly,
    den: UniPoly,
}

impl RationalZeta {
    pub fn new(num: UniPoly, den: UniPoly) -> RationalZeta {
        assert!(!den.is_zero(), "zero denominator");
        assert!(!num.is_zero(), "zeta functions are nonzero");
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let n0 = num.coeff(0);
        let d0 = den.coeff(0);
        assert!(
            !n0.is_zero() && !d0.is_zero(),
            "zeta functions are units at t = 0"
        );
        RationalZeta {
            num: num.scale(&n0.recip()),
            den: den.scale(&d0.recip()),
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// Reads off the cohomological multiplicities when the function has the
    /// Weil form of a smooth variety with polynomial point counts,
    /// `1 / Π_i (1 - p^i t)^{b_i}`: returns `[b_0, b_1, ...]` up to the
    /// largest weight present, or `None` if the function is not of that
    /// shape (nontrivial numerator, or denominator factors off the list).
    pub fn betti_multiplicities(&self, p: u64) -> Option<Vec<u32>> {
        if !self.num.is_one() {
            return None;
        }
        let mut den = self.den.clone();
        let mut out = Vec::new();
        // Any factor (1 - p^i t) contributes p^i to the magnitude of the
        // leading coefficient, so i never exceeds its bit length.
        let lead = self.den.leading().expect("denominator is nonzero");
        let bound = lead.numer().bits().max(1);
        let mut power = BigInt::one();
        for _ in 0..=bound {
            let factor = UniPoly::new(vec![
                BigRational::one(),
                -BigRational::from_integer(power.clone()),
            ]);
            let mut mult = 0u32;
            while let Some(quot) = den.div_exact(&factor) {
                den = quot;
                mult += 1;
            }
            out.push(mult);
            if den.is_one() {
                while out.last() == Some(&0) && out.len() > 1 {
                    out.pop();
                }
                return Some(out);
            }
            power *= p;
        }
        None
    }

    /// Expands the rational function as a power series to the given order.
    pub fn series(&self, order: usize) -> Series<RatRing> {
        let ring = SeriesRing::new(&["t"], order as i64, RatRing);
        let lift = |p: &UniPoly| {
            let mut s = Series::zero(&ring);
            for (i, c) in p.coeffs().iter().enumerate() {
                if i > order {
                    break;
                }
                s = s.add(&Series::monomial(&ring, &[i as i32], c.clone()));
            }
            s
        };
        let num = lift(&self.num);
        let den = lift(&self.den);
        num.mul(&den.invert_unit().expect("den(0) = 1"))
    }
}

impl fmt::Display for RationalZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) / ({})",
            self.num.display("t"),
            self.den.display("t")
        )
    }
}

/// The zeta function predicted by a polynomial point count
/// `#X(F_{q}) = sum_i a_i q^i`: the product of `(1 - p^i t)^{-a_i}`.
pub fn zeta_of_count_polynomial(coeffs: &[BigInt], p: u64) -> RationalZeta {
    let mut num = UniPoly::one();
    let mut den = UniPoly::one();
    let mut power = BigInt::one();
    for a in coeffs {
        // (1 - p^i t)
        let factor = UniPoly::new(vec![
            BigRational::one(),
            -BigRational::from_integer(power.clone()),
        ]);
        let mut e = a.clone();
        while e > BigInt::zero() {
            den = den.mul(&factor);
            e -= 1;
        }
        while e < BigInt::zero() {
            num = num.mul(&factor);
            e += 1;
        }
        power *= p;
    }
    RationalZeta::new(num, den)
}

/// The exponential generating series `exp(sum_r N_r t^r / r)` from the
/// point counts `N_1, N_2, ...` (exact to order `counts.len()`).
pub fn zeta_series_from_counts(counts: &[BigInt]) -> Result<Series<RatRing>, ZetaError> {
    if counts.is_empty() {
        return Err(ZetaError::NoCounts);
    }
    let order = counts.len();
    let ring = SeriesRing::new(&["t"], order as i64, RatRing);
    let mut expo = Series::zero(&ring);
    for (r, n) in counts.iter().enumerate() {
        let r = r + 1;
        let c = BigRational::new(n.clone(), BigInt::from(r));
        expo = expo.add(&Series::monomial(&ring, &[r as i32], c));
    }
    Ok(expo.exp().expect("positive valuation"))
}

/// Reconstructs the zeta function as a rational function from finitely many
/// point counts, sweeping candidate degree pairs in order of total degree
/// and keeping the first exactly-consistent candidate. At least `margin`
/// surplus coefficients beyond the unknowns must confirm the candidate.
pub fn reconstruct_rational(
    counts: &[BigInt],
    margin: usize,
) -> Result<RationalZeta, ZetaError> {
    let series = zeta_series_from_counts(counts)?;
    let order = counts.len();
    let z: Vec<BigRational> = (0..=order).map(|i| series.coefficient1(i as i32)).collect();
    for total in 0..=order.saturating_sub(margin) {
        for dd in 0..=total {
            let dn = total - dd;
            if dn + dd + margin > order {
                continue;
            }
            if let Some(result) = try_degrees(&z, dn, dd) {
                return Ok(result);
            }
        }
    }
    Err(ZetaError::ReconstructionFailed(format!(
        "no rational function of total degree <= {} matches {} counts",
        order.saturating_sub(margin),
        order
    )))
}

/// Attempts `num` of degree `<= dn`, `den` of degree `<= dd` against the
/// series coefficients `z_0..z_R`; all coefficients beyond `dn` must cancel.
fn try_degrees(z: &[BigRational], dn: usize, dd: usize) -> Option<RationalZeta> {
    let order = z.len() - 1;
    // Unknowns: den coefficients q_1..q_dd with q_0 = 1.
    // Equations: sum_{i=0..dd} z_{j-i} q_i = 0 for j = dn+1 ..= order.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in dn + 1..=order {
        let row: Vec<BigRational> = (1..=dd)
            .map(|i| {
                if i <= j {
                    z[j - i].clone()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        rows.push(row);
        rhs.push(-z[j].clone());
    }
    let q = linalg::solve(&rows, &rhs)?;
    let mut den_coeffs = vec![BigRational::one()];
    den_coeffs.extend(q);
    let den = UniPoly::new(den_coeffs);
    // Verify every equation (solve() may have fixed free variables).
    let conv = |j: usize| -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..=dd.min(j) {
            acc += &z[j - i] * den.coeff(i);
        }
        acc
    };
    for j in dn + 1..=order {
        if !conv(j).is_zero() {
            return None;
        }
    }
    let num = UniPoly::new((0..=dn).map(conv).collect());
    if num.is_zero() {
        return None;
    }
    Some(RationalZeta::new(num, den))
}

/// Point counts of a smooth complete toric variety over `F_{p^r}` for
/// `r = 1..=rounds`.
pub fn fan_counts(fan: &Fan, p: u64, rounds: usize) -> Vec<BigInt> {
    let mut counts = Vec::with_capacity(rounds);
    let mut q = BigInt::one();
    for _ in 0..rounds {
        q *= p;
        counts.push(fan.point_count_at(&q));
    }
    counts
}

/// The zeta function of a smooth complete toric variety over `F_p`.
pub fn zeta_of_fan(fan: &Fan, p: u64) -> RationalZeta {
    zeta_of_count_polynomial(&fan.point_count_coeffs(), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fq::{count_projective_zeros, MultiPoly, SmallField};
    use crate::toric;

    #[test]
    fn projective_line_zeta_reconstructs() {
        // N_r = 2^r + 1.
        let counts: Vec<BigInt> = (1..=6u32).map(|r| BigInt::from(2u64.pow(r) + 1)).collect();
        let zeta = reconstruct_rational(&counts, 2).unwrap();
        let expected = RationalZeta::new(
            UniPoly::one(),
            UniPoly::from_int_coeffs(&[1, -1]).mul(&UniPoly::from_int_coeffs(&[1, -2])),
        );
        assert_eq!(zeta, expected);
        // And it matches the product form from the count polynomial.
        let poly_form =
            zeta_of_count_polynomial(&[BigInt::one(), BigInt::one()], 2);
        assert_eq!(zeta, poly_form);
    }

    #[test]
    fn quadric_surface_zeta_from_brute_force_counts() {
        // Brute-force counts of {x0 x1 = x2 x3} in P^3 over F_{2^r} feed the
        // reconstruction; the result must equal the product form derived
        // from the fan of the product of two lines.
        let quadric = MultiPoly::new(
            4,
            vec![(vec![1, 1, 0, 0], 1), (vec![0, 0, 1, 1], -1)],
        );
        let mut counts = Vec::new();
        for r in 1..=6u32 {
            let f = SmallField::new(2u64.pow(r)).unwrap();
            counts.push(BigInt::from(
                count_projective_zeros(&f, &quadric).unwrap(),
            ));
        }
        let zeta = reconstruct_rational(&counts, 2).unwrap();
        let fan_form = zeta_of_fan(&toric::fan_p1_power(2), 2);
        assert_eq!(zeta, fan_form);
        // 1 / ((1-t)(1-2t)^2(1-4t)).
        let expected = RationalZeta::new(
            UniPoly::one(),
            UniPoly::from_int_coeffs(&[1, -1])
                .mul(&UniPoly::from_int_coeffs(&[1, -2]))
                .mul(&UniPoly::from_int_coeffs(&[1, -2]))
                .mul(&UniPoly::from_int_coeffs(&[1, -4])),
        );
        assert_eq!(zeta, expected);
    }

    #[test]
    fn twin_zeta_functions_agree_at_every_prime() {
        let pair = toric::conifold_pair();
        for p in [2u64, 3, 5, 7] {
            let za = zeta_of_fan(&pair.twin_a, p);
            let zb = zeta_of_fan(&pair.twin_b, p);
            assert_eq!(za, zb, "p={p}");
        }
        // Reconstruction from twin counts also lands on the product form.
        let counts = fan_counts(&pair.twin_a, 2, 10);
        let zeta = reconstruct_rational(&counts, 2).unwrap();
        assert_eq!(zeta, zeta_of_fan(&pair.twin_a, 2));
    }

    #[test]
    fn series_roundtrip_matches_counts() {
        let fan = toric::fan_projective_space(2);
        let counts = fan_counts(&fan, 3, 5);
        let zeta = reconstruct_rational(&counts, 2).unwrap();
        // Expanding the reconstruction reproduces the generating series.
        let series = zeta.series(5);
        let direct = zeta_series_from_counts(&counts).unwrap();
        for i in 0..=5 {
            assert_eq!(
                series.coefficient1(i),
                direct.coefficient1(i),
                "coefficient {i}"
            );
        }
    }

    #[test]
    fn betti_multiplicities_from_weil_forms() {
        // P^1 at p = 2: 1/((1-t)(1-2t)) -> b = [1, 1].
        let zeta = zeta_of_count_polynomial(&[BigInt::one(), BigInt::one()], 2);
        assert_eq!(zeta.betti_multiplicities(2), Some(vec![1, 1]));
        // P^1 x P^1 at p = 3: b = [1, 2, 1].
        let fan_form = zeta_of_fan(&toric::fan_p1_power(2), 3);
        assert_eq!(fan_form.betti_multiplicities(3), Some(vec![1, 2, 1]));
        // Twins share multiplicities [1, 2, 2, 1]... read off both.
        let pair = toric::conifold_pair();
        let ba = zeta_of_fan(&pair.twin_a, 5).betti_multiplicities(5);
        let bb = zeta_of_fan(&pair.twin_b, 5).betti_multiplicities(5);
        assert_eq!(ba, bb);
        assert!(ba.is_some());
        // Wrong prime: the q = 3 form is not a product of (1 - 2^i t).
        assert_eq!(fan_form.betti_multiplicities(2), None);
        // Nontrivial numerators are not of Weil product form.
        let with_num = RationalZeta::new(
            UniPoly::from_int_coeffs(&[1, 7]),
            UniPoly::from_int_coeffs(&[1, -1]),
        );
        assert_eq!(with_num.betti_multiplicities(2), None);
    }

    #[test]
    fn too_few_counts_fail_loudly() {
        // A single count cannot pin down the projective line's zeta.
        let counts = vec![BigInt::from(3)];
        assert!(matches!(
            reconstruct_rational(&counts, 2),
            Err(ZetaError::ReconstructionFailed(_))
        ));
        assert!(matches!(
            reconstruct_rational(&[], 2),
            Err(ZetaError::NoCounts)
        ));
    }
}
