//! Truncated multivariate power/Laurent series over an exact coefficient ring.
//!
//! A [`SeriesRing`] fixes the variable names, an inclusive *total-degree*
//! truncation bound, and a per-variable minimal exponent (`0` for ordinary
//! power series; negative in the designated Laurent slots). Total-degree
//! truncation (counting negative exponents with sign) is exact under ring
//! operations and under substitutions like `x -> u + v`, which is what the
//! bivariate functional-equation checks rely on.
//!
//! Truncation drops terms *above* the bound silently — that is the meaning of
//! working to finite order. Terms falling *below* a declared pole bound are
//! different: the bounds are chosen from mathematical vanishing arguments, so
//! a nonzero coefficient there indicates a broken invariant and the
//! operations treat it as an error (or panic in `mul`, where it cannot be an
//! input mistake).

use super::coeff::{Coeff, CoeffRing};
use super::ExactAlgError;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ring operations for series coefficients, implemented by ring handles so
/// that contextual data (truncation orders, intersection tables) lives in one
/// place rather than in every element.
pub trait CoeffOps: std::fmt::Debug {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul_rat(&self, a: &Self::Elem, r: &BigRational) -> Self::Elem;
    fn invert(&self, a: &Self::Elem) -> Result<Self::Elem, ExactAlgError>;
}

impl CoeffOps for CoeffRing {
    type Elem = Coeff;

    fn zero(&self) -> Coeff {
        Coeff::zero()
    }
    fn one(&self) -> Coeff {
        Coeff::one()
    }
    fn is_zero(&self, a: &Coeff) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        CoeffRing::add(self, a, b)
    }
    fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        CoeffRing::sub(self, a, b)
    }
    fn neg(&self, a: &Coeff) -> Coeff {
        CoeffRing::neg(self, a)
    }
    fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        CoeffRing::mul(self, a, b)
    }
    fn mul_rat(&self, a: &Coeff, r: &BigRational) -> Coeff {
        CoeffRing::mul_rat(self, a, r)
    }
    fn invert(&self, a: &Coeff) -> Result<Coeff, ExactAlgError> {
        CoeffRing::invert(self, a)
    }
}

/// Plain exact rationals as a coefficient ring (used by zeta series and by
/// fast self-tests of the series engine).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RatRing;

impl CoeffOps for RatRing {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn mul_rat(&self, a: &BigRational, r: &BigRational) -> BigRational {
        a * r
    }
    fn invert(&self, a: &BigRational) -> Result<BigRational, ExactAlgError> {
        if a.is_zero() {
            return Err(ExactAlgError::NotAUnit("zero rational".into()));
        }
        Ok(a.recip())
    }
}

/// Shared context for a family of series: variables, truncation, pole bounds,
/// and the coefficient ring handle.
#[derive(Debug)]
pub struct SeriesRing<R: CoeffOps> {
    pub vars: Vec<String>,
    /// Inclusive bound on the total degree (sum of exponents, with sign).
    pub max_total: i64,
    /// Per-variable minimal exponent; `0` for power series, `-b` to allow a
    /// pole of order up to `b` in that variable.
    pub min_exp: Vec<i32>,
    pub coeff: R,
}

impl<R: CoeffOps> SeriesRing<R> {
    pub fn new(vars: &[&str], max_total: i64, coeff: R) -> Arc<Self> {
        let min_exp = vec![0; vars.len()];
        Arc::new(SeriesRing {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            max_total,
            min_exp,
            coeff,
        })
    }

    /// A ring with explicit per-variable pole bounds (`min_exp[i] <= 0`).
    pub fn with_poles(vars: &[&str], max_total: i64, min_exp: &[i32], coeff: R) -> Arc<Self> {
        assert_eq!(vars.len(), min_exp.len(), "one pole bound per variable");
        assert!(min_exp.iter().all(|&m| m <= 0), "pole bounds are non-positive");
        Arc::new(SeriesRing {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            max_total,
            min_exp: min_exp.to_vec(),
            coeff,
        })
    }

    fn same_shape(&self, other: &Self) -> bool {
        self.vars == other.vars && self.max_total == other.max_total && self.min_exp == other.min_exp
    }

    fn total(exps: &[i32]) -> i64 {
        exps.iter().map(|&e| e as i64).sum()
    }

    fn above_max(&self, exps: &[i32]) -> bool {
        Self::total(exps) > self.max_total
    }

    fn below_min(&self, exps: &[i32]) -> bool {
        exps.iter().zip(&self.min_exp).any(|(&e, &m)| e < m)
    }
}

/// A truncated series: a sparse exponent-vector-to-coefficient map.
#[derive(Debug)]
pub struct Series<R: CoeffOps> {
    ring: Arc<SeriesRing<R>>,
    terms: BTreeMap<Vec<i32>, R::Elem>,
}

impl<R: CoeffOps> Clone for Series<R> {
    fn clone(&self) -> Self {
        Series {
            ring: self.ring.clone(),
            terms: self.terms.clone(),
        }
    }
}

impl<R: CoeffOps> PartialEq for Series<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_shape(&other.ring) && self.terms == other.terms
    }
}

impl<R: CoeffOps> Series<R> {
    pub fn zero(ring: &Arc<SeriesRing<R>>) -> Self {
        Series {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<SeriesRing<R>>) -> Self {
        Series::constant(ring, ring.coeff.one())
    }

    pub fn constant(ring: &Arc<SeriesRing<R>>, c: R::Elem) -> Self {
        Series::monomial(ring, &vec![0; ring.vars.len()], c)
    }

    /// The variable with the given index.
    pub fn var(ring: &Arc<SeriesRing<R>>, idx: usize) -> Self {
        let mut exps = vec![0; ring.vars.len()];
        exps[idx] = 1;
        Series::monomial(ring, &exps, ring.coeff.one())
    }

    pub fn monomial(ring: &Arc<SeriesRing<R>>, exps: &[i32], c: R::Elem) -> Self {
        assert_eq!(exps.len(), ring.vars.len(), "exponent arity");
        let mut terms = BTreeMap::new();
        if !ring.coeff.is_zero(&c) && !ring.above_max(exps) {
            assert!(
                !ring.below_min(exps),
                "monomial below the pole bound of ring in vars {:?}",
                ring.vars
            );
            terms.insert(exps.to_vec(), c);
        }
        Series {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<SeriesRing<R>> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in deterministic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &R::Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient at an exponent vector (zero when absent).
    pub fn coefficient(&self, exps: &[i32]) -> R::Elem {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| self.ring.coeff.zero())
    }

    /// Coefficient at a single-variable exponent (first variable when
    /// univariate; panics on multivariate rings).
    pub fn coefficient1(&self, exp: i32) -> R::Elem {
        assert_eq!(self.ring.vars.len(), 1, "coefficient1 needs a univariate ring");
        self.coefficient(&[exp])
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> R::Elem {
        self.coefficient(&vec![0; self.ring.vars.len()])
    }

    /// Residue in the given variable: the coefficient map of exponent `-1`,
    /// which for a univariate ring is a single coefficient.
    pub fn residue(&self, var: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[var] == -1 {
                let mut rest = e.clone();
                rest[var] = 0;
                terms.insert(rest, c.clone());
            }
        }
        Series {
            ring: self.ring.clone(),
            terms,
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            self.ring.same_shape(&other.ring),
            "series from different rings: {:?} vs {:?}",
            self.ring.vars,
            other.ring.vars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let ring = &self.ring;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.get_mut(e) {
                Some(acc) => {
                    let s = ring.coeff.add(acc, c);
                    if ring.coeff.is_zero(&s) {
                        terms.remove(e);
                    } else {
                        *acc = s;
                    }
                }
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        Series {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), self.ring.coeff.neg(c)))
            .collect();
        Series {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let ring = &self.ring;
        let mut acc: BTreeMap<Vec<i32>, R::Elem> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let ta = SeriesRing::<R>::total(ea);
            for (eb, cb) in &other.terms {
                if ta + SeriesRing::<R>::total(eb) > ring.max_total {
                    continue;
                }
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let p = ring.coeff.mul(ca, cb);
                if ring.coeff.is_zero(&p) {
                    continue;
                }
                match acc.get_mut(&e) {
                    Some(v) => {
                        let s = ring.coeff.add(v, &p);
                        if ring.coeff.is_zero(&s) {
                            acc.remove(&e);
                        } else {
                            *v = s;
                        }
                    }
                    None => {
                        acc.insert(e, p);
                    }
                }
            }
        }
        // Terms below a pole bound must have cancelled: the bounds encode
        // vanishing theorems, so a survivor is a broken invariant.
        let mut terms = BTreeMap::new();
        for (e, c) in acc {
            if ring.below_min(&e) {
                panic!(
                    "pole bound exceeded at exponent {:?} in vars {:?}",
                    e, ring.vars
                );
            }
            terms.insert(e, c);
        }
        Series {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Series::one(&self.ring);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Scales every coefficient by an exact rational.
    pub fn scale_rat(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Series::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), self.ring.coeff.mul_rat(c, r)))
            .collect();
        Series {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Scales every coefficient by a ring element.
    pub fn scale(&self, c: &R::Elem) -> Self {
        let ring = &self.ring;
        if ring.coeff.is_zero(c) {
            return Series::zero(ring);
        }
        let mut terms = BTreeMap::new();
        for (e, v) in &self.terms {
            let p = ring.coeff.mul(v, c);
            if !ring.coeff.is_zero(&p) {
                terms.insert(e.clone(), p);
            }
        }
        Series {
            ring: ring.clone(),
            terms,
        }
    }

    /// Multiplies by `var^delta`, shifting exponents. Shifting above the
    /// truncation bound drops terms; shifting a nonzero term below a pole
    /// bound is an error.
    pub fn mul_var_power(&self, var: usize, delta: i32) -> Result<Self, ExactAlgError> {
        let ring = &self.ring;
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut shifted = e.clone();
            shifted[var] += delta;
            if ring.above_max(&shifted) {
                continue;
            }
            if ring.below_min(&shifted) {
                return Err(ExactAlgError::PoleOverflow(format!(
                    "shift of {:?} by {delta} in {} leaves the window",
                    e, ring.vars[var]
                )));
            }
            terms.insert(shifted, c.clone());
        }
        Ok(Series {
            ring: ring.clone(),
            terms,
        })
    }

    /// True when every term has componentwise nonnegative exponents and total
    /// degree at least one (the nilpotent part of the series).
    fn is_topologically_nilpotent(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.iter().all(|&x| x >= 0) && SeriesRing::<R>::total(e) >= 1)
    }

    /// Inverts a series whose constant term is a unit and whose remaining
    /// terms are ordinary (no poles): `(c + n)^{-1} = c^{-1} sum (-c^{-1}n)^m`.
    pub fn invert_unit(&self) -> Result<Self, ExactAlgError> {
        let ring = &self.ring;
        let c = self.constant_term();
        let cinv = ring.coeff.invert(&c)?;
        let mut tail = self.clone();
        tail.terms.remove(&vec![0; ring.vars.len()]);
        if !tail.is_topologically_nilpotent() {
            return Err(ExactAlgError::InvalidOperand(
                "inversion requires a unit constant term plus higher-order terms".into(),
            ));
        }
        let x = tail.scale(&cinv);
        let mut geom = Series::one(ring);
        let mut power = Series::one(ring);
        for m in 1..=ring.max_total.max(0) as u32 {
            power = power.mul(&x);
            if power.is_zero() {
                break;
            }
            geom = if m % 2 == 1 {
                geom.sub(&power)
            } else {
                geom.add(&power)
            };
        }
        Ok(geom.scale(&cinv))
    }

    /// Exponential of a series with no constant term and no poles.
    pub fn exp(&self) -> Result<Self, ExactAlgError> {
        if !self.is_topologically_nilpotent() {
            return Err(ExactAlgError::InvalidOperand(
                "exp needs positive total degree in the series variables".into(),
            ));
        }
        let ring = &self.ring;
        let mut out = Series::one(ring);
        let mut term = Series::one(ring);
        for m in 1..=ring.max_total.max(0) as u32 {
            term = term.mul(self).scale_rat(&BigRational::new(1.into(), m.into()));
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Logarithm of a series with constant term one and no poles.
    pub fn log(&self) -> Result<Self, ExactAlgError> {
        let ring = &self.ring;
        let one = ring.coeff.one();
        if self.constant_term() != one {
            return Err(ExactAlgError::InvalidOperand(
                "log needs constant term one".into(),
            ));
        }
        let mut u = self.clone();
        u.terms.remove(&vec![0; ring.vars.len()]);
        if !u.is_topologically_nilpotent() {
            return Err(ExactAlgError::InvalidOperand(
                "log needs positive total degree beyond the constant".into(),
            ));
        }
        let mut out = Series::zero(ring);
        let mut power = Series::one(ring);
        for m in 1..=ring.max_total.max(0) as u32 {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            let sign = if m % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale_rat(&BigRational::new(sign.into(), m.into())));
        }
        Ok(out)
    }

    /// Formal derivative in the given variable.
    pub fn derivative(&self, var: usize) -> Result<Self, ExactAlgError> {
        let ring = &self.ring;
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let scaled = ring
                .coeff
                .mul_rat(c, &BigRational::from_integer(e[var].into()));
            if ring.coeff.is_zero(&scaled) {
                continue;
            }
            let mut shifted = e.clone();
            shifted[var] -= 1;
            if ring.below_min(&shifted) {
                return Err(ExactAlgError::PoleOverflow(format!(
                    "derivative pushes {:?} below the pole bound",
                    e
                )));
            }
            terms.insert(shifted, scaled);
        }
        Ok(Series {
            ring: ring.clone(),
            terms,
        })
    }

    /// Applies a coefficient map (specializations such as the `q = 0` layer),
    /// dropping resulting zeros.
    pub fn map_coeffs<S: CoeffOps>(
        &self,
        target: &Arc<SeriesRing<S>>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Series<S> {
        assert_eq!(target.vars.len(), self.ring.vars.len(), "variable arity");
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if target.above_max(e) || target.below_min(e) {
                continue;
            }
            let v = f(c);
            if !target.coeff.is_zero(&v) {
                terms.insert(e.clone(), v);
            }
        }
        Series {
            ring: target.clone(),
            terms,
        }
    }

    /// Substitutes `images[i]` for variable `i`, mapping coefficients through
    /// `lift` into the target ring. Negative source exponents require the
    /// corresponding image to be a single term with unit coefficient.
    pub fn substitute<S: CoeffOps>(
        &self,
        target: &Arc<SeriesRing<S>>,
        images: &[Series<S>],
        lift: impl Fn(&R::Elem) -> S::Elem,
    ) -> Result<Series<S>, ExactAlgError> {
        assert_eq!(images.len(), self.ring.vars.len(), "one image per variable");
        for im in images {
            assert!(
                im.ring.same_shape(target),
                "images must live in the target ring"
            );
        }
        let inverses: Vec<Option<Series<S>>> = images
            .iter()
            .map(|im| invert_single_term(target, im))
            .collect();
        let mut power_cache: BTreeMap<(usize, i32), Series<S>> = BTreeMap::new();
        let mut out = Series::zero(target);
        for (e, c) in &self.terms {
            let mut term = Series::constant(target, lift(c));
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if exp < 0 && inverses[i].is_none() {
                    return Err(ExactAlgError::InvalidOperand(format!(
                        "negative power of {} needs an invertible single-term image",
                        self.ring.vars[i]
                    )));
                }
                let power = match power_cache.get(&(i, exp)) {
                    Some(p) => p.clone(),
                    None => {
                        let base = if exp > 0 {
                            images[i].clone()
                        } else {
                            inverses[i].clone().unwrap()
                        };
                        let p = base.pow(exp.unsigned_abs());
                        power_cache.insert((i, exp), p.clone());
                        p
                    }
                };
                term = term.mul(&power);
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}

/// Inverse of a single-term series, when that term's coefficient is a unit
/// and the negated exponents stay inside the window.
fn invert_single_term<S: CoeffOps>(
    ring: &Arc<SeriesRing<S>>,
    s: &Series<S>,
) -> Option<Series<S>> {
    if s.terms.len() != 1 {
        return None;
    }
    let (e, c) = s.terms.iter().next().unwrap();
    let cinv = ring.coeff.invert(c).ok()?;
    let neg: Vec<i32> = e.iter().map(|&x| -x).collect();
    if ring.below_min(&neg) || ring.above_max(&neg) {
        return None;
    }
    Some(Series::monomial(ring, &neg, cinv))
}

impl<R: CoeffOps> fmt::Display for Series<R>
where
    R::Elem: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &exp) in e.iter().enumerate() {
                if exp != 0 {
                    write!(f, "*{}", self.ring.vars[i])?;
                    if exp != 1 {
                        write!(f, "^{exp}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
