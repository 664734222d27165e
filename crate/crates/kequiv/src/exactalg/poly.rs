//! Dense univariate polynomials over exact rationals.
//!
//! This is the shared workhorse behind the `y`-polynomial denominators of
//! [`super::coeff::Coeff`] and the rational functions in the Lefschetz class
//! used by the motive module. Coefficients are arbitrary-precision rationals;
//! all operations are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of the `i`-th power of the variable. The
/// representation is normalized: the leading coefficient is nonzero, and the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    /// Builds a polynomial from low-to-high coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn from_int_coeffs(ints: &[i64]) -> Self {
        UniPoly::new(ints.iter().map(|&n| BigRational::from_integer(n.into())).collect())
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(deg: usize, c: BigRational) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of the `i`-th power (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Order of vanishing at the origin, or `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Divides by `x^k`; panics if the valuation is smaller than `k`.
    pub fn shift_down(&self, k: usize) -> UniPoly {
        if k == 0 {
            return self.clone();
        }
        assert!(
            self.valuation().map_or(true, |v| v >= k),
            "shift_down below valuation"
        );
        if self.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = q * div + r` and `deg r < deg div`. Panics on zero divisor.
    pub fn divrem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lead;
            for (j, b) in div.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    let delta = &q * b;
                    rem[i - dd + j] -= delta;
                }
            }
            quot[i - dd] = q;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact division; returns `None` if the remainder is nonzero.
    pub fn div_exact(&self, div: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(div);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (Euclidean algorithm). The result of
    /// `gcd` with the zero polynomial is the other argument made monic.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => {
                let inv = BigRational::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Writes `self = unit * primitive` with `primitive` having coprime
    /// integer coefficients and a positive leading coefficient. Returns
    /// `(unit, primitive)`. The zero polynomial returns `(1, 0)`.
    pub fn primitive_decompose(&self) -> (BigRational, UniPoly) {
        if self.is_zero() {
            return (BigRational::one(), UniPoly::zero());
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for n in &ints {
            content = content.gcd(n);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim = UniPoly {
            coeffs: ints
                .iter()
                .map(|n| BigRational::from_integer(n / &content))
                .collect(),
        };
        let unit = BigRational::new(content, denom_lcm);
        (unit, prim)
    }

    /// Evaluates at an exact rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formats with the given variable name, low powers first.
    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            if i == 0 || !unit_mag {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if !unit_mag {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.var)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn construction_trims_leading_zeros() {
        let p = UniPoly::new(vec![rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(UniPoly::new(vec![rat(0, 1)]).is_zero());
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn ring_ops() {
        // (1 + x)(1 - x) = 1 - x^2
        let a = UniPoly::from_int_coeffs(&[1, 1]);
        let b = UniPoly::from_int_coeffs(&[1, -1]);
        assert_eq!(a.mul(&b), UniPoly::from_int_coeffs(&[1, 0, -1]));
        assert_eq!(a.add(&b), UniPoly::from_int_coeffs(&[2]));
        assert_eq!(a.sub(&b), UniPoly::from_int_coeffs(&[0, 2]));
        assert_eq!(a.neg().add(&a), UniPoly::zero());
    }

    #[test]
    fn divrem_exact_and_with_remainder() {
        // x^3 - 1 = (x - 1)(x^2 + x + 1)
        let num = UniPoly::from_int_coeffs(&[-1, 0, 0, 1]);
        let div = UniPoly::from_int_coeffs(&[-1, 1]);
        let (q, r) = num.divrem(&div);
        assert_eq!(q, UniPoly::from_int_coeffs(&[1, 1, 1]));
        assert!(r.is_zero());

        // x^2 + 1 = x * x + 1
        let num = UniPoly::from_int_coeffs(&[1, 0, 1]);
        let div = UniPoly::from_int_coeffs(&[0, 1]);
        let (q, r) = num.divrem(&div);
        assert_eq!(q, UniPoly::from_int_coeffs(&[0, 1]));
        assert_eq!(r, UniPoly::from_int_coeffs(&[1]));
        assert_eq!(num.div_exact(&div), None);
    }

    #[test]
    fn gcd_of_products() {
        // gcd((x-1)(x+2), (x-1)(x-3)) = x - 1
        let a = UniPoly::from_int_coeffs(&[-1, 1]).mul(&UniPoly::from_int_coeffs(&[2, 1]));
        let b = UniPoly::from_int_coeffs(&[-1, 1]).mul(&UniPoly::from_int_coeffs(&[-3, 1]));
        assert_eq!(a.gcd(&b), UniPoly::from_int_coeffs(&[-1, 1]));
        // Coprime inputs give 1.
        let c = UniPoly::from_int_coeffs(&[1, 1]);
        let d = UniPoly::from_int_coeffs(&[1, 0, 1]);
        assert!(c.gcd(&d).is_one());
        // gcd with zero.
        assert_eq!(UniPoly::zero().gcd(&c), c.monic());
    }

    #[test]
    fn primitive_decomposition() {
        // (2/3)x - 4/3 = (2/3) * (x - 2)
        let p = UniPoly::new(vec![rat(-4, 3), rat(2, 3)]);
        let (unit, prim) = p.primitive_decompose();
        assert_eq!(unit, rat(2, 3));
        assert_eq!(prim, UniPoly::from_int_coeffs(&[-2, 1]));
        assert_eq!(prim.scale(&unit), p);

        // Negative leading coefficient flips into the unit.
        let p = UniPoly::from_int_coeffs(&[2, -4]);
        let (unit, prim) = p.primitive_decompose();
        assert_eq!(unit, rat(-2, 1));
        assert_eq!(prim, UniPoly::from_int_coeffs(&[-1, 2]));
    }

    #[test]
    fn eval_horner() {
        let p = UniPoly::from_int_coeffs(&[1, -1, 1]); // 1 - y + y^2
        assert_eq!(p.eval(&rat(-1, 1)), rat(3, 1));
        assert_eq!(p.eval(&rat(1, 1)), rat(1, 1));
        assert_eq!(p.eval(&rat(1, 2)), rat(3, 4));
    }

    #[test]
    fn display_formatting() {
        let p = UniPoly::new(vec![rat(1, 1), rat(-1, 2), rat(1, 1)]);
        assert_eq!(p.display("y").to_string(), "1 - 1/2*y + y^2");
        assert_eq!(UniPoly::zero().display("y").to_string(), "0");
        let m = UniPoly::monomial(3, rat(-1, 1));
        assert_eq!(m.display("q").to_string(), "-q^3");
    }

    #[test]
    fn shifts_and_valuation() {
        let p = UniPoly::from_int_coeffs(&[0, 0, 3, 1]);
        assert_eq!(p.valuation(), Some(2));
        assert_eq!(p.shift_down(2), UniPoly::from_int_coeffs(&[3, 1]));
        assert_eq!(p.shift_down(2).shift_up(2), p);
    }
}
