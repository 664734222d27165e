//! Small finite fields with exact table arithmetic, and brute-force point
//! counting for affine and projective hypersurfaces.
//!
//! Fields of order `q = p^d <= 125` are supported. Extension fields use a
//! fixed irreducible modulus per order so that element encodings are stable
//! across runs; the constructor re-verifies irreducibility by trial
//! division, so a corrupted table cannot produce a non-field.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FqError {
    #[error("unsupported field order {0} (need a prime power <= 125)")]
    UnsupportedOrder(u64),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial has {expected} variables, point has {got}")]
    ArityMismatch { expected: usize, got: usize },
}

/// Fixed monic irreducible moduli (ascending coefficients) for the
/// supported extension fields.
const MODULI: &[(u64, u64, &[u64])] = &[
    (4, 2, &[1, 1, 1]),
    (8, 2, &[1, 1, 0, 1]),
    (9, 3, &[1, 0, 1]),
    (16, 2, &[1, 1, 0, 0, 1]),
    (25, 5, &[1, 1, 1]),
    (27, 3, &[1, 2, 0, 1]),
    (32, 2, &[1, 0, 1, 0, 0, 1]),
    (49, 7, &[3, 1, 1]),
    (64, 2, &[1, 1, 0, 0, 0, 0, 1]),
    (81, 3, &[2, 1, 0, 0, 1]),
    (121, 11, &[7, 1, 1]),
    (125, 5, &[1, 1, 0, 1]),
];

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// All supported field orders in increasing order.
pub fn supported_orders() -> Vec<u64> {
    let mut orders: Vec<u64> = (2..=125).filter(|&n| is_prime(n)).collect();
    orders.extend(MODULI.iter().map(|(q, _, _)| *q));
    orders.sort_unstable();
    orders
}

/// A finite field of order at most 125 with precomputed operation tables.
///
/// Elements are indices `0..q`; `0` and `1` are the additive and
/// multiplicative identities. Extension-field element `x` encodes the
/// polynomial `sum_i digit_i(x) * t^i` in base-`p` digits.
pub struct SmallField {
    pub q: u64,
    pub p: u64,
    pub d: u32,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl fmt::Debug for SmallField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallField(q={})", self.q)
    }
}

/// Polynomial arithmetic over F_p on ascending coefficient vectors,
/// used only to build extension-field tables.
mod ppoly {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out = vec![0; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = (x + y) % p;
        }
        trim(&mut out);
        out
    }

    /// Remainder of `a` by monic `m`.
    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = r[r.len() - 1];
            let shift = r.len() - 1 - dm;
            for i in 0..m.len() {
                let sub = (lead * m[i]) % p;
                let idx = shift + i;
                r[idx] = (r[idx] + p - sub) % p;
            }
            trim(&mut r);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    /// Irreducibility by trial division over all monic divisors of degree
    /// at most deg(m)/2.
    pub fn is_irreducible(m: &[u64], p: u64) -> bool {
        let d = m.len() - 1;
        for k in 1..=d / 2 {
            let count = p.pow(k as u32);
            for code in 0..count {
                let mut div = Vec::with_capacity(k + 1);
                let mut c = code;
                for _ in 0..k {
                    div.push(c % p);
                    c /= p;
                }
                div.push(1);
                if rem(m, &div, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl SmallField {
    pub fn new(q: u64) -> Result<SmallField, FqError> {
        if q >= 2 && q <= 125 && is_prime(q) {
            return Ok(Self::prime_field(q));
        }
        if let Some((_, p, modulus)) = MODULI.iter().find(|(mq, _, _)| *mq == q) {
            return Ok(Self::extension_field(q, *p, modulus));
        }
        Err(FqError::UnsupportedOrder(q))
    }

    fn prime_field(p: u64) -> SmallField {
        let q = p as usize;
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q as u64 {
            for b in 0..q as u64 {
                add[(a * p + b) as usize] = ((a + b) % p) as u16;
                mul[(a * p + b) as usize] = ((a * b) % p) as u16;
            }
        }
        Self::finish(p, p, 1, add, mul)
    }

    fn extension_field(q: u64, p: u64, modulus: &[u64]) -> SmallField {
        assert!(
            ppoly::is_irreducible(modulus, p),
            "pinned modulus for q={q} is reducible"
        );
        let d = (modulus.len() - 1) as u32;
        let digits = |mut x: u64| -> Vec<u64> {
            let mut v = Vec::new();
            for _ in 0..d {
                v.push(x % p);
                x /= p;
            }
            ppoly::trim(&mut v);
            v
        };
        let encode = |v: &[u64]| -> u64 {
            let mut x = 0;
            for &c in v.iter().rev() {
                x = x * p + c;
            }
            x
        };
        let n = q as usize;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..q {
            let pa = digits(a);
            for b in 0..q {
                let pb = digits(b);
                add[(a * q + b) as usize] = encode(&ppoly::add(&pa, &pb, p)) as u16;
                let prod = ppoly::rem(&ppoly::mul(&pa, &pb, p), modulus, p);
                mul[(a * q + b) as usize] = encode(&prod) as u16;
            }
        }
        Self::finish(q, p, d, add, mul)
    }

    fn finish(q: u64, p: u64, d: u32, add: Vec<u16>, mul: Vec<u16>) -> SmallField {
        let n = q as usize;
        let mut neg = vec![0u16; n];
        let mut inv = vec![0u16; n];
        for a in 0..n {
            for b in 0..n {
                if add[a * n + b] == 0 {
                    neg[a] = b as u16;
                }
                if mul[a * n + b] == 1 {
                    inv[a] = b as u16;
                }
            }
        }
        SmallField {
            q,
            p,
            d,
            add,
            mul,
            neg,
            inv,
        }
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[(a as usize) * (self.q as usize) + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[(a as usize) * (self.q as usize) + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u16) -> u16 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u16, mut e: u64) -> u16 {
        let mut base = a;
        let mut acc = 1u16;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Embeds an integer via the prime subfield.
    pub fn from_int(&self, n: i64) -> u16 {
        let r = n.rem_euclid(self.p as i64) as u16;
        r
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.q as u16
    }
}

/// A sparse integer-coefficient polynomial in several variables, for
/// brute-force evaluation over small fields.
#[derive(Debug, Clone)]
pub struct MultiPoly {
    pub nvars: usize,
    pub terms: Vec<(Vec<u32>, i64)>,
}

impl MultiPoly {
    pub fn new(nvars: usize, terms: Vec<(Vec<u32>, i64)>) -> MultiPoly {
        for (exps, _) in &terms {
            assert_eq!(exps.len(), nvars, "term arity mismatch");
        }
        MultiPoly { nvars, terms }
    }

    /// Total degree of every term, if they all agree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for (exps, c) in &self.terms {
            if *c == 0 {
                continue;
            }
            let d: u32 = exps.iter().sum();
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                _ => return None,
            }
        }
        deg.or(Some(0))
    }

    pub fn eval(&self, f: &SmallField, point: &[u16]) -> Result<u16, FqError> {
        if point.len() != self.nvars {
            return Err(FqError::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = 0u16;
        for (exps, c) in &self.terms {
            let mut term = f.from_int(*c);
            for (x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term = f.mul(term, f.pow(*x, e as u64));
                }
            }
            acc = f.add(acc, term);
        }
        Ok(acc)
    }

    /// Combines like terms, drops zeros, and sorts for canonical equality.
    pub fn normalized(&self) -> MultiPoly {
        let mut map: std::collections::BTreeMap<Vec<u32>, i64> = std::collections::BTreeMap::new();
        for (exps, c) in &self.terms {
            *map.entry(exps.clone()).or_insert(0) += c;
        }
        MultiPoly {
            nvars: self.nvars,
            terms: map.into_iter().filter(|(_, c)| *c != 0).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.normalized().terms.is_empty()
    }

    pub fn constant(nvars: usize, c: i64) -> MultiPoly {
        MultiPoly::new(nvars, vec![(vec![0; nvars], c)])
    }

    pub fn variable(nvars: usize, i: usize) -> MultiPoly {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        MultiPoly::new(nvars, vec![(exps, 1)])
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
        .normalized()
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut terms = Vec::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                terms.push((exps, ca * cb));
            }
        }
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
        .normalized()
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        assert!(i < self.nvars);
        let mut terms = Vec::new();
        for (exps, c) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[i] -= 1;
            terms.push((e, c * exps[i] as i64));
        }
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
        .normalized()
    }
}

/// Determinant of a square matrix of polynomials, by Laplace expansion.
pub fn poly_determinant(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|row| row.len() == n), "square matrix");
    let nvars = m[0][0].nvars;
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = MultiPoly::constant(nvars, 0);
    for j in 0..n {
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = m[0][j].mul(&poly_determinant(&minor));
        det = if j % 2 == 0 {
            det.add(&cofactor)
        } else {
            det.sub(&cofactor)
        };
    }
    det
}

/// Number of zeros of `poly` in affine space over the field.
pub fn count_affine_zeros(f: &SmallField, poly: &MultiPoly) -> Result<u64, FqError> {
    let mut count = 0;
    let mut point = vec![0u16; poly.nvars];
    loop {
        if poly.eval(f, &point)? == 0 {
            count += 1;
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == poly.nvars {
                return Ok(count);
            }
            point[i] += 1;
            if (point[i] as u64) < f.q {
                break;
            }
            point[i] = 0;
            i += 1;
        }
    }
}

/// Number of zeros of a homogeneous `poly` in projective space: points are
/// enumerated chart by chart with the leading coordinate normalized to one.
pub fn count_projective_zeros(f: &SmallField, poly: &MultiPoly) -> Result<u64, FqError> {
    if poly.homogeneous_degree().is_none() {
        return Err(FqError::NotHomogeneous);
    }
    let n = poly.nvars;
    let mut count = 0;
    for lead in 0..n {
        // Coordinates before `lead` are zero, coordinate `lead` is one.
        let free = n - lead - 1;
        let mut tail = vec![0u16; free];
        loop {
            let mut point = vec![0u16; n];
            point[lead] = 1;
            point[lead + 1..].copy_from_slice(&tail);
            if poly.eval(f, &point)? == 0 {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == free {
                    break;
                }
                tail[i] += 1;
                if (tail[i] as u64) < f.q {
                    break;
                }
                tail[i] = 0;
                i += 1;
            }
            if i == free {
                break;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold_for_every_supported_order() {
        for q in supported_orders() {
            let f = SmallField::new(q).unwrap();
            assert_eq!(f.q, q);
            // Inverses and Frobenius.
            for a in f.elements() {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "q={q} a={a}");
                }
                assert_eq!(f.pow(a, q), a, "Frobenius fails: q={q} a={a}");
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
            // Associativity spot checks on a fixed triple.
            let (x, y, z) = (1u16, (q as u16).saturating_sub(1), (q / 2) as u16);
            assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
            assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
        }
    }

    #[test]
    fn distributivity_exhaustive_on_f8_and_f9() {
        for q in [8u64, 9] {
            let f = SmallField::new(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    for c in f.elements() {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn unsupported_orders_are_rejected() {
        assert!(SmallField::new(1).is_err());
        assert!(SmallField::new(6).is_err());
        assert!(SmallField::new(128).is_err());
        assert!(SmallField::new(126).is_err());
    }

    #[test]
    fn projective_line_and_conic_counts() {
        // x0*x1 - x2^2 = 0 in P^2 is a smooth conic: q + 1 points.
        let conic = MultiPoly::new(
            3,
            vec![(vec![1, 1, 0], 1), (vec![0, 0, 2], -1)],
        );
        for q in [2u64, 3, 4, 5, 7, 9] {
            let f = SmallField::new(q).unwrap();
            assert_eq!(count_projective_zeros(&f, &conic).unwrap(), q + 1);
        }
    }

    #[test]
    fn quadric_surface_counts_match_product_of_lines() {
        // x0*x1 - x2*x3 = 0 in P^3 is P^1 x P^1: (q + 1)^2 points.
        let quadric = MultiPoly::new(
            4,
            vec![(vec![1, 1, 0, 0], 1), (vec![0, 0, 1, 1], -1)],
        );
        for q in [2u64, 3, 4, 5, 8, 9] {
            let f = SmallField::new(q).unwrap();
            assert_eq!(
                count_projective_zeros(&f, &quadric).unwrap(),
                (q + 1) * (q + 1),
                "q={q}"
            );
        }
    }

    #[test]
    fn affine_cone_count_has_the_expected_polynomial() {
        // xy - zw = 0 in A^4 has q^3 + q^2 - q points.
        let cone = MultiPoly::new(
            4,
            vec![(vec![1, 1, 0, 0], 1), (vec![0, 0, 1, 1], -1)],
        );
        for q in [2u64, 3, 4, 5, 7] {
            let f = SmallField::new(q).unwrap();
            assert_eq!(
                count_affine_zeros(&f, &cone).unwrap(),
                q * q * q + q * q - q,
                "q={q}"
            );
        }
    }

    #[test]
    fn inhomogeneous_projective_count_is_rejected() {
        let p = MultiPoly::new(2, vec![(vec![1, 0], 1), (vec![0, 2], 1)]);
        let f = SmallField::new(5).unwrap();
        assert!(matches!(
            count_projective_zeros(&f, &p),
            Err(FqError::NotHomogeneous)
        ));
    }
}
