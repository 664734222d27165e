//! The parametric coefficient ring for the genus engine.
//!
//! Elements are exact rational functions in three formal parameters:
//!
//! * `k` — the twist exponent, an ordinary polynomial variable;
//! * `y` — a formal unit (Laurent exponents allowed), extended to its
//!   fraction field because Jacobian factors genuinely produce
//!   `(y^r - 1)`-type denominators;
//! * `q` — a deformation parameter truncated at a fixed order carried by
//!   [`CoeffRing`]; powers beyond the order are identically zero.
//!
//! Every element is kept in a canonical reduced form: a sparse numerator over
//! [`Mono`] exponent triples and a single denominator polynomial in `y` that
//! is primitive with integer coefficients, has a positive leading
//! coefficient, a nonzero constant term (unit monomials are folded into the
//! numerator), and is coprime to the numerator. Equality is therefore
//! structural. Elements with denominator one never pay for polynomial
//! arithmetic; fractions only appear around Jacobian factors and residues.

use super::poly::UniPoly;
use super::ExactAlgError;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent triple `k^k * y^y * q^q` of a numerator monomial.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Mono {
    pub k: u32,
    pub y: i32,
    pub q: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { k: 0, y: 0, q: 0 };

    pub fn new(k: u32, y: i32, q: u32) -> Self {
        Mono { k, y, q }
    }

    fn mul(self, other: Mono) -> Mono {
        Mono {
            k: self.k + other.k,
            y: self.y + other.y,
            q: self.q + other.q,
        }
    }
}

/// Ring context: the inclusive truncation order for `q`.
///
/// Operations are methods on the ring so that every multiplication applies
/// the `q`-truncation consistently; [`Coeff`] values do not carry the order
/// themselves.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CoeffRing {
    pub q_order: u32,
}

/// An element of the coefficient ring, in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coeff {
    num: BTreeMap<Mono, BigRational>,
    den: UniPoly,
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff {
            num: BTreeMap::new(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Coeff::from_rat(BigRational::one())
    }

    pub fn from_rat(r: BigRational) -> Self {
        let mut num = BTreeMap::new();
        if !r.is_zero() {
            num.insert(Mono::ONE, r);
        }
        Coeff {
            num,
            den: UniPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::from_rat(BigRational::from_integer(n.into()))
    }

    /// The monomial `value * k^k * y^y * q^q`.
    pub fn monomial(k: u32, y: i32, q: u32, value: BigRational) -> Self {
        let mut num = BTreeMap::new();
        if !value.is_zero() {
            num.insert(Mono::new(k, y, q), value);
        }
        Coeff {
            num,
            den: UniPoly::one(),
        }
    }

    /// A polynomial in `y` alone (denominator one).
    pub fn from_y_poly(p: &UniPoly) -> Self {
        let mut num = BTreeMap::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                num.insert(Mono::new(0, i as i32, 0), c.clone());
            }
        }
        Coeff {
            num,
            den: UniPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num.len() == 1
            && self.num.get(&Mono::ONE).map_or(false, |v| v.is_one())
    }

    /// Numerator terms in deterministic (k, y, q)-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.num.iter()
    }

    /// The denominator polynomial in `y` (one for polynomial elements).
    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// Extracts a plain rational if the element is constant; `None` otherwise.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_empty() {
            return Some(BigRational::zero());
        }
        if !self.den.is_one() || self.num.len() != 1 {
            return None;
        }
        let (m, v) = self.num.iter().next().unwrap();
        (*m == Mono::ONE).then(|| v.clone())
    }

    /// Largest `q`-exponent present in the numerator.
    pub fn max_q(&self) -> u32 {
        self.num.keys().map(|m| m.q).max().unwrap_or(0)
    }
}

impl CoeffRing {
    pub fn new(q_order: u32) -> Self {
        CoeffRing { q_order }
    }

    /// Restores the canonical form from raw numerator/denominator data.
    fn canonicalize(&self, mut num: BTreeMap<Mono, BigRational>, mut den: UniPoly) -> Coeff {
        assert!(!den.is_zero(), "zero denominator");
        num.retain(|m, v| m.q <= self.q_order && !v.is_zero());
        if num.is_empty() {
            return Coeff::zero();
        }
        // Fold unit monomials y^a out of the denominator.
        let val = den.valuation().unwrap();
        if val > 0 {
            den = den.shift_down(val);
            num = num
                .into_iter()
                .map(|(m, v)| (Mono::new(m.k, m.y - val as i32, m.q), v))
                .collect();
        }
        if den.degree() != Some(0) {
            // Cancel the gcd of the denominator with every (k, q)-grouped
            // y-polynomial of the numerator.
            let groups = group_by_kq(&num);
            let mut g = den.monic();
            for (_, (_, poly)) in &groups {
                if g.is_one() {
                    break;
                }
                g = g.gcd(poly);
            }
            if !g.is_one() {
                den = den.div_exact(&g).expect("gcd divides denominator");
                num = BTreeMap::new();
                for ((k, q), (ymin, poly)) in groups {
                    let quot = poly.div_exact(&g).expect("gcd divides numerator group");
                    for (i, c) in quot.coeffs().iter().enumerate() {
                        if !c.is_zero() {
                            num.insert(Mono::new(k, ymin + i as i32, q), c.clone());
                        }
                    }
                }
            }
        }
        // Normalize the denominator to primitive integer form.
        let (unit, prim) = den.primitive_decompose();
        if !unit.is_one() {
            for v in num.values_mut() {
                *v /= &unit;
            }
        }
        Coeff { num, den: prim }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            let mut num = a.num.clone();
            for (m, v) in &b.num {
                let e = num.entry(*m).or_insert_with(BigRational::zero);
                *e += v;
            }
            if a.den.is_one() {
                num.retain(|_, v| !v.is_zero());
                return Coeff {
                    num,
                    den: UniPoly::one(),
                };
            }
            return self.canonicalize(num, a.den.clone());
        }
        let mut num = mul_num_ypoly(&a.num, &b.den);
        for (m, v) in mul_num_ypoly(&b.num, &a.den) {
            let e = num.entry(m).or_insert_with(BigRational::zero);
            *e += v;
        }
        self.canonicalize(num, a.den.mul(&b.den))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        Coeff {
            num: a.num.iter().map(|(m, v)| (*m, -v)).collect(),
            den: a.den.clone(),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        if a.is_zero() || b.is_zero() {
            return Coeff::zero();
        }
        let mut num: BTreeMap<Mono, BigRational> = BTreeMap::new();
        for (ma, va) in &a.num {
            for (mb, vb) in &b.num {
                if ma.q + mb.q > self.q_order {
                    continue;
                }
                let m = ma.mul(*mb);
                let e = num.entry(m).or_insert_with(BigRational::zero);
                *e += va * vb;
            }
        }
        if a.den.is_one() && b.den.is_one() {
            num.retain(|_, v| !v.is_zero());
            return Coeff {
                num,
                den: UniPoly::one(),
            };
        }
        self.canonicalize(num, a.den.mul(&b.den))
    }

    pub fn mul_rat(&self, a: &Coeff, r: &BigRational) -> Coeff {
        if r.is_zero() || a.is_zero() {
            return Coeff::zero();
        }
        Coeff {
            num: a.num.iter().map(|(m, v)| (*m, v * r)).collect(),
            den: a.den.clone(),
        }
    }

    /// Multiplies by `r * k^k y^y q^q` without general convolution.
    pub fn mul_monomial(&self, a: &Coeff, mono: Mono, r: &BigRational) -> Coeff {
        if r.is_zero() || a.is_zero() {
            return Coeff::zero();
        }
        let num = a
            .num
            .iter()
            .filter(|(m, _)| m.q + mono.q <= self.q_order)
            .map(|(m, v)| (m.mul(mono), v * r))
            .collect();
        Coeff {
            num,
            den: a.den.clone(),
        }
    }

    /// Inverts a unit. An element `N/d` is a unit exactly when the
    /// `q`-constant layer of `N` is nonzero and free of `k`; the `q`-positive
    /// part is then nilpotent and handled by a finite geometric series.
    pub fn invert(&self, a: &Coeff) -> Result<Coeff, ExactAlgError> {
        if a.is_zero() {
            return Err(ExactAlgError::NotAUnit("zero coefficient".into()));
        }
        let mut const_layer: Vec<(i32, BigRational)> = Vec::new();
        let mut rest: BTreeMap<Mono, BigRational> = BTreeMap::new();
        for (m, v) in &a.num {
            if m.q == 0 {
                if m.k != 0 {
                    return Err(ExactAlgError::NotAUnit(
                        "q-constant layer involves the parameter k".into(),
                    ));
                }
                const_layer.push((m.y, v.clone()));
            } else {
                rest.insert(*m, v.clone());
            }
        }
        if const_layer.is_empty() {
            return Err(ExactAlgError::NotAUnit(
                "no q-constant layer to invert".into(),
            ));
        }
        let ymin = const_layer.iter().map(|(e, _)| *e).min().unwrap();
        let width = const_layer.iter().map(|(e, _)| (*e - ymin) as usize).max().unwrap() + 1;
        let mut coeffs = vec![BigRational::zero(); width];
        for (e, v) in const_layer {
            coeffs[(e - ymin) as usize] = v;
        }
        let p0 = UniPoly::new(coeffs);
        // The q-constant layer is P = y^ymin * p0, so P^{-1} = y^{-ymin} / p0.
        let mut pinv_num = BTreeMap::new();
        pinv_num.insert(Mono::new(0, -ymin, 0), BigRational::one());
        let pinv = self.canonicalize(pinv_num, p0);
        // N^{-1} = P^{-1} * sum_m (-P^{-1} R)^m over the nilpotent tail R.
        let tail = Coeff {
            num: rest,
            den: UniPoly::one(),
        };
        let x = self.mul(&pinv, &tail);
        let mut inv = Coeff::one();
        if !x.is_zero() {
            let mut power = Coeff::one();
            for m in 1..=self.q_order {
                power = self.mul(&power, &x);
                if power.is_zero() {
                    break;
                }
                if m % 2 == 1 {
                    inv = self.sub(&inv, &power);
                } else {
                    inv = self.add(&inv, &power);
                }
            }
        }
        let mut out = self.mul(&pinv, &inv);
        if !a.den.is_one() {
            out = self.mul(&out, &Coeff::from_y_poly(&a.den));
        }
        Ok(out)
    }

    /// Drops every `q`-positive term (the `q = 0` specialization).
    pub fn set_q_zero(&self, a: &Coeff) -> Coeff {
        let num = a
            .num
            .iter()
            .filter(|(m, _)| m.q == 0)
            .map(|(m, v)| (*m, v.clone()))
            .collect();
        self.canonicalize(num, a.den.clone())
    }

    /// Drops every `k`-positive term (the `k = 0` specialization).
    pub fn set_k_zero(&self, a: &Coeff) -> Coeff {
        let num = a
            .num
            .iter()
            .filter(|(m, _)| m.k == 0)
            .map(|(m, v)| (*m, v.clone()))
            .collect();
        self.canonicalize(num, a.den.clone())
    }

    /// The `y = 0` specialization. Fails if a negative `y`-power survives or
    /// the denominator vanishes at the origin.
    pub fn set_y_zero(&self, a: &Coeff) -> Result<Coeff, ExactAlgError> {
        let d0 = a.den.coeff(0);
        if d0.is_zero() {
            return Err(ExactAlgError::Eval("denominator vanishes at y = 0".into()));
        }
        let mut num = BTreeMap::new();
        for (m, v) in &a.num {
            if m.y < 0 {
                return Err(ExactAlgError::Eval("negative y-power at y = 0".into()));
            }
            if m.y == 0 {
                num.insert(Mono::new(m.k, 0, m.q), v / &d0);
            }
        }
        Ok(Coeff {
            num,
            den: UniPoly::one(),
        })
    }

    /// Evaluates `y` at an exact rational, leaving `k` and `q` formal.
    pub fn eval_y(&self, a: &Coeff, y: &BigRational) -> Result<Coeff, ExactAlgError> {
        let d = a.den.eval(y);
        if d.is_zero() {
            return Err(ExactAlgError::Eval(format!(
                "denominator vanishes at y = {y}"
            )));
        }
        if y.is_zero() && a.num.keys().any(|m| m.y < 0) {
            return Err(ExactAlgError::Eval("negative y-power at y = 0".into()));
        }
        let mut num: BTreeMap<Mono, BigRational> = BTreeMap::new();
        for (m, v) in &a.num {
            let ypow = rat_pow(y, m.y);
            let e = num
                .entry(Mono::new(m.k, 0, m.q))
                .or_insert_with(BigRational::zero);
            *e += v * ypow / &d;
        }
        num.retain(|_, v| !v.is_zero());
        Ok(Coeff {
            num,
            den: UniPoly::one(),
        })
    }
}

fn rat_pow(base: &BigRational, exp: i32) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let mut b = base.clone();
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Groups numerator terms by `(k, q)`, returning for each group the minimal
/// `y`-exponent and the shifted polynomial in `y`.
fn group_by_kq(num: &BTreeMap<Mono, BigRational>) -> BTreeMap<(u32, u32), (i32, UniPoly)> {
    let mut spans: BTreeMap<(u32, u32), (i32, i32)> = BTreeMap::new();
    for m in num.keys() {
        let e = spans.entry((m.k, m.q)).or_insert((m.y, m.y));
        e.0 = e.0.min(m.y);
        e.1 = e.1.max(m.y);
    }
    let mut polys: BTreeMap<(u32, u32), (i32, Vec<BigRational>)> = spans
        .into_iter()
        .map(|(kq, (lo, hi))| (kq, (lo, vec![BigRational::zero(); (hi - lo) as usize + 1])))
        .collect();
    for (m, v) in num {
        let (lo, coeffs) = polys.get_mut(&(m.k, m.q)).unwrap();
        coeffs[(m.y - *lo) as usize] = v.clone();
    }
    polys
        .into_iter()
        .map(|(kq, (lo, coeffs))| (kq, (lo, UniPoly::new(coeffs))))
        .collect()
}

/// Multiplies a numerator map by a polynomial in `y`.
fn mul_num_ypoly(num: &BTreeMap<Mono, BigRational>, p: &UniPoly) -> BTreeMap<Mono, BigRational> {
    let mut out: BTreeMap<Mono, BigRational> = BTreeMap::new();
    for (m, v) in num {
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let key = Mono::new(m.k, m.y + i as i32, m.q);
            let e = out.entry(key).or_insert_with(BigRational::zero);
            *e += v * c;
        }
    }
    out
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_empty() {
            return write!(f, "0");
        }
        let fraction = !self.den.is_one();
        if fraction {
            write!(f, "(")?;
        }
        let mut first = true;
        for (m, v) in &self.num {
            if first {
                if v.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if v.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = v.abs();
            let trivial_mono = *m == Mono::ONE;
            let mut printed = false;
            if trivial_mono || !mag.is_one() {
                write!(f, "{mag}")?;
                printed = true;
            }
            for (name, exp) in [("k", m.k as i64), ("y", m.y as i64), ("q", m.q as i64)] {
                if exp == 0 {
                    continue;
                }
                if printed {
                    write!(f, "*")?;
                }
                write!(f, "{name}")?;
                if exp != 1 {
                    write!(f, "^{exp}")?;
                }
                printed = true;
            }
        }
        if fraction {
            write!(f, ") / ({})", self.den.display("y"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> CoeffRing {
        CoeffRing::new(2)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn one_plus_y() -> Coeff {
        let r = ring();
        r.add(&Coeff::one(), &Coeff::monomial(0, 1, 0, rat(1, 1)))
    }

    #[test]
    fn fraction_reduction_cancels_common_factor() {
        let r = ring();
        // (1 + y)^2 / (1 + y) must reduce to 1 + y.
        let inv = r.invert(&one_plus_y()).unwrap();
        let sq = r.mul(&one_plus_y(), &one_plus_y());
        let reduced = r.mul(&sq, &inv);
        assert_eq!(reduced, one_plus_y());
        assert!(reduced.den().is_one());
    }

    #[test]
    fn inverse_of_y_polynomial_has_canonical_denominator() {
        let r = ring();
        let inv = r.invert(&one_plus_y()).unwrap();
        assert_eq!(inv.den(), &UniPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(r.mul(&inv, &one_plus_y()), Coeff::one());
        // 1/(1 - y) normalizes to a positive-leading denominator y - 1.
        let one_minus_y = r.sub(&Coeff::one(), &Coeff::monomial(0, 1, 0, rat(1, 1)));
        let inv = r.invert(&one_minus_y).unwrap();
        assert_eq!(inv.den(), &UniPoly::from_int_coeffs(&[-1, 1]));
        assert_eq!(r.mul(&inv, &one_minus_y), Coeff::one());
    }

    #[test]
    fn add_fractions_with_cancellation() {
        let r = ring();
        // y/(1 - y) + 1 = 1/(1 - y).
        let one_minus_y = r.sub(&Coeff::one(), &Coeff::monomial(0, 1, 0, rat(1, 1)));
        let inv = r.invert(&one_minus_y).unwrap();
        let y_frac = r.mul(&inv, &Coeff::monomial(0, 1, 0, rat(1, 1)));
        assert_eq!(r.add(&y_frac, &Coeff::one()), inv);
    }

    #[test]
    fn q_powers_truncate() {
        let r = ring();
        let one_plus_q = r.add(&Coeff::one(), &Coeff::monomial(0, 0, 1, rat(1, 1)));
        let cube = r.mul(&r.mul(&one_plus_q, &one_plus_q), &one_plus_q);
        // (1 + q)^3 = 1 + 3q + 3q^2 at q-order 2.
        let mut expected = Coeff::one();
        expected = r.add(&expected, &Coeff::monomial(0, 0, 1, rat(3, 1)));
        expected = r.add(&expected, &Coeff::monomial(0, 0, 2, rat(3, 1)));
        assert_eq!(cube, expected);
    }

    #[test]
    fn geometric_inversion_in_q() {
        let r = ring();
        let one_minus_q = r.sub(&Coeff::one(), &Coeff::monomial(0, 0, 1, rat(1, 1)));
        let inv = r.invert(&one_minus_q).unwrap();
        let mut expected = Coeff::one();
        expected = r.add(&expected, &Coeff::monomial(0, 0, 1, rat(1, 1)));
        expected = r.add(&expected, &Coeff::monomial(0, 0, 2, rat(1, 1)));
        assert_eq!(inv, expected);
        assert_eq!(r.mul(&inv, &one_minus_q), Coeff::one());

        // Mixed parameters: 1/(1 + y q) = 1 - y q + y^2 q^2.
        let a = r.add(&Coeff::one(), &Coeff::monomial(0, 1, 1, rat(1, 1)));
        let inv = r.invert(&a).unwrap();
        let mut expected = Coeff::one();
        expected = r.add(&expected, &Coeff::monomial(0, 1, 1, rat(-1, 1)));
        expected = r.add(&expected, &Coeff::monomial(0, 2, 2, rat(1, 1)));
        assert_eq!(inv, expected);
    }

    #[test]
    fn invert_unit_laurent_monomial() {
        let r = ring();
        // (y^{-1} + q)^{-1} = y(1 - yq + y^2 q^2).
        let a = r.add(
            &Coeff::monomial(0, -1, 0, rat(1, 1)),
            &Coeff::monomial(0, 0, 1, rat(1, 1)),
        );
        let inv = r.invert(&a).unwrap();
        assert_eq!(r.mul(&a, &inv), Coeff::one());
        let mut expected = Coeff::monomial(0, 1, 0, rat(1, 1));
        expected = r.add(&expected, &Coeff::monomial(0, 2, 1, rat(-1, 1)));
        expected = r.add(&expected, &Coeff::monomial(0, 3, 2, rat(1, 1)));
        assert_eq!(inv, expected);
    }

    #[test]
    fn non_units_are_rejected() {
        let r = ring();
        assert!(r.invert(&Coeff::zero()).is_err());
        assert!(r.invert(&Coeff::monomial(0, 0, 1, rat(1, 1))).is_err());
        let one_plus_k = r.add(&Coeff::one(), &Coeff::monomial(1, 0, 0, rat(1, 1)));
        assert!(r.invert(&one_plus_k).is_err());
    }

    #[test]
    fn mixed_k_and_fraction_arithmetic() {
        let r = ring();
        // a = k + y/(1 - y); then a * (1 - y) = k(1 - y) + y.
        let one_minus_y = r.sub(&Coeff::one(), &Coeff::monomial(0, 1, 0, rat(1, 1)));
        let y_frac = r.mul(
            &r.invert(&one_minus_y).unwrap(),
            &Coeff::monomial(0, 1, 0, rat(1, 1)),
        );
        let a = r.add(&Coeff::monomial(1, 0, 0, rat(1, 1)), &y_frac);
        let cleared = r.mul(&a, &one_minus_y);
        let expected = r.add(
            &r.mul(&Coeff::monomial(1, 0, 0, rat(1, 1)), &one_minus_y),
            &Coeff::monomial(0, 1, 0, rat(1, 1)),
        );
        assert_eq!(cleared, expected);
    }

    #[test]
    fn specializations() {
        let r = ring();
        // chi_y-style value 1 - y + y^2.
        let chi = Coeff::from_y_poly(&UniPoly::from_int_coeffs(&[1, -1, 1]));
        assert_eq!(
            r.eval_y(&chi, &rat(-1, 1)).unwrap(),
            Coeff::from_int(3),
            "Euler characteristic specialization"
        );
        assert_eq!(r.set_y_zero(&chi).unwrap(), Coeff::one());
        let laurent = Coeff::monomial(0, -1, 0, rat(1, 1));
        assert!(r.set_y_zero(&laurent).is_err());
        // q and k projections.
        let mixed = r.add(
            &r.add(&Coeff::one(), &Coeff::monomial(1, 0, 0, rat(2, 1))),
            &Coeff::monomial(0, 0, 1, rat(5, 1)),
        );
        let no_q = r.set_q_zero(&mixed);
        assert_eq!(no_q.max_q(), 0);
        let no_k = r.set_k_zero(&mixed);
        assert_eq!(
            no_k,
            r.add(&Coeff::one(), &Coeff::monomial(0, 0, 1, rat(5, 1)))
        );
    }

    #[test]
    fn display_canonical_strings() {
        let r = ring();
        assert_eq!(Coeff::zero().to_string(), "0");
        assert_eq!(Coeff::from_int(-3).to_string(), "-3");
        let expr = r.add(
            &Coeff::monomial(2, -1, 0, rat(3, 2)),
            &Coeff::monomial(0, 0, 1, rat(-1, 1)),
        );
        // Terms are ordered lexicographically by (k, y, q).
        assert_eq!(expr.to_string(), "-q + 3/2*k^2*y^-1");
        let frac = r.invert(&one_plus_y()).unwrap();
        assert_eq!(frac.to_string(), "(1) / (1 + y)");
    }

    #[test]
    fn eval_y_on_fraction() {
        let r = ring();
        // 1/(1 + y) at y = 1 is 1/2.
        let inv = r.invert(&one_plus_y()).unwrap();
        assert_eq!(
            r.eval_y(&inv, &rat(1, 1)).unwrap(),
            Coeff::from_rat(rat(1, 2))
        );
        // At y = -1 the denominator vanishes.
        assert!(r.eval_y(&inv, &rat(-1, 1)).is_err());
    }
}
