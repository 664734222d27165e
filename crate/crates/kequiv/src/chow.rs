//! Finite presentations of Chow rings, with exact rational intersection
//! tables, and the blow-up configurations used by the change-of-variable
//! verifiers.
//!
//! A [`ChowPresentation`] stores a graded basis, the full multiplication
//! table, the total Chern class of the tangent bundle, and the canonical
//! class. Constructors validate the data aggressively: homogeneity,
//! commutativity, associativity, Poincaré-pairing nondegeneracy, and
//! `c_1 = -K`. The curated gallery below is cross-checked elsewhere against
//! the toric machinery, which derives the same rings from fans.

use crate::exactalg::{Coeff, CoeffOps, CoeffRing, ExactAlgError};
use crate::linalg;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChowError {
    #[error("invalid presentation `{0}`: {1}")]
    InvalidPresentation(String, String),
    #[error("invalid blow-up datum `{0}`: {1}")]
    InvalidBlowup(String, String),
    #[error("class is not a unit: {0}")]
    NotAUnit(String),
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
}

/// One graded basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisClass {
    pub name: String,
    pub degree: usize,
}

/// Sparse expansion of a product in the basis.
pub type Sparse = Vec<(usize, BigRational)>;

/// A finite presentation of the Chow ring of a smooth projective variety,
/// with enough tangent data to evaluate characteristic-class genera.
#[derive(Debug)]
pub struct ChowPresentation {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<BasisClass>,
    /// Index of the point class (the unique basis element of top degree).
    pub point: usize,
    mul: Vec<Vec<Sparse>>,
    /// Total Chern class of the tangent bundle, in basis coordinates.
    pub chern_total: Vec<BigRational>,
    /// Canonical class, in basis coordinates (homogeneous of degree 1).
    pub canonical: Vec<BigRational>,
    /// Distinguished classes addressable by name (generators, point, ...).
    pub named: BTreeMap<String, Vec<BigRational>>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl ChowPresentation {
    /// Builds and validates a presentation. `mul_upper` lists the products
    /// `b_i * b_j` for `i <= j` of positive degrees; omitted pairs default to
    /// zero. The multiplication by the fundamental class is implied.
    pub fn new(
        name: &str,
        dim: usize,
        basis: Vec<BasisClass>,
        mul_upper: Vec<((usize, usize), Sparse)>,
        chern_total: Vec<BigRational>,
        canonical: Vec<BigRational>,
        named: BTreeMap<String, Vec<BigRational>>,
    ) -> Result<Arc<Self>, ChowError> {
        let n = basis.len();
        let bad = |msg: String| ChowError::InvalidPresentation(name.to_string(), msg);
        if n == 0 || basis[0].degree != 0 {
            return Err(bad("basis must start with the degree-0 fundamental class".into()));
        }
        if basis.iter().filter(|b| b.degree == 0).count() != 1 {
            return Err(bad("exactly one degree-0 class (connectedness)".into()));
        }
        if basis.windows(2).any(|w| w[0].degree > w[1].degree) {
            return Err(bad("basis must be sorted by degree".into()));
        }
        let tops: Vec<usize> = (0..n).filter(|&i| basis[i].degree == dim).collect();
        if tops.len() != 1 {
            return Err(bad("exactly one top-degree (point) class".into()));
        }
        let point = tops[0];

        let mut mul = vec![vec![Sparse::new(); n]; n];
        for j in 0..n {
            mul[0][j] = vec![(j, BigRational::one())];
            mul[j][0] = vec![(j, BigRational::one())];
        }
        for ((i, j), entry) in mul_upper {
            if i == 0 || j == 0 || i > j || i >= n || j >= n {
                return Err(bad(format!("bad table key ({i}, {j})")));
            }
            let d = basis[i].degree + basis[j].degree;
            for (t, c) in &entry {
                if *t >= n || basis[*t].degree != d {
                    return Err(bad(format!(
                        "product ({i}, {j}) is not homogeneous of degree {d}"
                    )));
                }
                if c.is_zero() {
                    return Err(bad(format!("explicit zero in table entry ({i}, {j})")));
                }
            }
            mul[i][j] = entry.clone();
            mul[j][i] = entry;
        }
        for i in 1..n {
            for j in i..n {
                if basis[i].degree + basis[j].degree > dim && !mul[i][j].is_empty() {
                    return Err(bad(format!("degree overflow in entry ({i}, {j})")));
                }
            }
        }

        let pres = ChowPresentation {
            name: name.to_string(),
            dim,
            basis,
            point,
            mul,
            chern_total,
            canonical,
            named,
        };
        pres.validate().map_err(|m| bad(m))?;
        Ok(Arc::new(pres))
    }

    fn validate(&self) -> Result<(), String> {
        let n = self.basis.len();
        if self.chern_total.len() != n || self.canonical.len() != n {
            return Err("class coordinate arity mismatch".into());
        }
        // Associativity on all basis triples.
        for i in 1..n {
            for j in i..n {
                for k in j..n {
                    let ij = self.basis_product(i, j);
                    let jk = self.basis_product(j, k);
                    let left = self.mul_class_basis(&ij, k);
                    let right = self.mul_basis_class(i, &jk);
                    if left != right {
                        return Err(format!(
                            "associativity fails on ({}, {}, {})",
                            self.basis[i].name, self.basis[j].name, self.basis[k].name
                        ));
                    }
                }
            }
        }
        // Poincaré pairing nondegeneracy in every degree.
        for d in 0..=self.dim {
            let rows_d: Vec<usize> = (0..n).filter(|&i| self.basis[i].degree == d).collect();
            let cols: Vec<usize> = (0..n)
                .filter(|&i| self.basis[i].degree == self.dim - d)
                .collect();
            if rows_d.len() != cols.len() {
                return Err(format!("Betti asymmetry in degree {d}"));
            }
            let mat: Vec<Vec<BigRational>> = rows_d
                .iter()
                .map(|&i| {
                    cols.iter()
                        .map(|&j| self.deg(&self.basis_class_product(i, j)))
                        .collect()
                })
                .collect();
            if linalg::rank(&mat) != rows_d.len() {
                return Err(format!("degenerate Poincaré pairing in degree {d}"));
            }
        }
        // Fundamental normalization of the tangent data.
        if self.chern_total[0] != BigRational::one() {
            return Err("total Chern class must start with 1".into());
        }
        for (i, c) in self.canonical.iter().enumerate() {
            if !c.is_zero() && self.basis[i].degree != 1 {
                return Err("canonical class must be homogeneous of degree 1".into());
            }
        }
        // c_1(T) = -K.
        let c1 = self.component(&self.chern_total, 1);
        let neg_k: Vec<BigRational> = self.canonical.iter().map(|c| -c).collect();
        if c1 != neg_k {
            return Err("first Chern class must equal minus the canonical class".into());
        }
        for (name, cls) in &self.named {
            if cls.len() != n {
                return Err(format!("named class `{name}` has wrong arity"));
            }
        }
        Ok(())
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<BigRational> {
        let mut out = self.zero_class();
        for (t, c) in &self.mul[i][j] {
            out[*t] += c;
        }
        out
    }

    fn basis_class_product(&self, i: usize, j: usize) -> Vec<BigRational> {
        self.basis_product(i, j)
    }

    fn mul_class_basis(&self, a: &[BigRational], k: usize) -> Vec<BigRational> {
        let mut out = self.zero_class();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (t, c) in &self.mul[i][k] {
                out[*t] += ai * c;
            }
        }
        out
    }

    fn mul_basis_class(&self, i: usize, a: &[BigRational]) -> Vec<BigRational> {
        self.mul_class_basis(a, i)
    }

    pub fn zero_class(&self) -> Vec<BigRational> {
        vec![BigRational::zero(); self.basis.len()]
    }

    pub fn unit_class(&self) -> Vec<BigRational> {
        let mut v = self.zero_class();
        v[0] = BigRational::one();
        v
    }

    pub fn add_classes(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn scale_class(&self, a: &[BigRational], c: &BigRational) -> Vec<BigRational> {
        a.iter().map(|x| x * c).collect()
    }

    pub fn mul_classes(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = self.zero_class();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                for (t, c) in &self.mul[i][j] {
                    out[*t] += ai * bj * c;
                }
            }
        }
        out
    }

    /// The degree functional: the coefficient of the point class.
    pub fn deg(&self, a: &[BigRational]) -> BigRational {
        a[self.point].clone()
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, a: &[BigRational], d: usize) -> Vec<BigRational> {
        let mut out = self.zero_class();
        for (i, ai) in a.iter().enumerate() {
            if self.basis[i].degree == d {
                out[i] = ai.clone();
            }
        }
        out
    }

    pub fn named_class(&self, name: &str) -> Option<Vec<BigRational>> {
        self.named.get(name).cloned()
    }

    /// Euler characteristic: the degree of the top Chern class.
    pub fn euler_characteristic(&self) -> BigRational {
        self.deg(&self.component(&self.chern_total, self.dim))
    }

    /// Degree-1 named classes, used to enumerate divisor tests.
    pub fn named_divisors(&self) -> Vec<(String, Vec<BigRational>)> {
        self.named
            .iter()
            .filter(|(_, cls)| {
                cls.iter().enumerate().any(|(i, c)| !c.is_zero() && self.basis[i].degree == 1)
                    && cls
                        .iter()
                        .enumerate()
                        .all(|(i, c)| c.is_zero() || self.basis[i].degree == 1)
            })
            .map(|(n, c)| (n.clone(), c.clone()))
            .collect()
    }
}

/// Chow classes with [`Coeff`] coordinates, as a coefficient ring for series
/// (residue kernels) and for the genus engine's characteristic classes.
#[derive(Debug, Clone)]
pub struct ChowRing {
    pub chow: Arc<ChowPresentation>,
    pub coeff: CoeffRing,
}

impl ChowRing {
    pub fn new(chow: Arc<ChowPresentation>, coeff: CoeffRing) -> Self {
        ChowRing { chow, coeff }
    }

    /// Lifts a rational class to `Coeff` coordinates.
    pub fn lift(&self, class: &[BigRational]) -> Vec<Coeff> {
        class.iter().map(|c| Coeff::from_rat(c.clone())).collect()
    }

    /// The class `c * [X]` for a scalar coefficient.
    pub fn scalar(&self, c: Coeff) -> Vec<Coeff> {
        let mut v = self.zero();
        v[0] = c;
        v
    }

    /// The degree functional with `Coeff` values.
    pub fn degree(&self, a: &[Coeff]) -> Coeff {
        a[self.chow.point].clone()
    }

    /// Scales a class by a coefficient.
    pub fn scale(&self, a: &[Coeff], c: &Coeff) -> Vec<Coeff> {
        a.iter().map(|x| self.coeff.mul(x, c)).collect()
    }

    /// Homogeneous component.
    pub fn component(&self, a: &[Coeff], d: usize) -> Vec<Coeff> {
        a.iter()
            .enumerate()
            .map(|(i, x)| {
                if self.chow.basis[i].degree == d {
                    x.clone()
                } else {
                    Coeff::zero()
                }
            })
            .collect()
    }

    /// Exponential of a class with no degree-0 part (finite by nilpotency).
    pub fn exp_nilpotent(&self, a: &Vec<Coeff>) -> Result<Vec<Coeff>, ChowError> {
        if !a[0].is_zero() {
            return Err(ChowError::NotAUnit(
                "exp requires a vanishing degree-0 part".into(),
            ));
        }
        let mut out = self.one();
        let mut term = self.one();
        for m in 1..=self.chow.dim as u32 {
            term = self.mul(&term, a);
            term = term
                .iter()
                .map(|c| self.coeff.mul_rat(c, &BigRational::new(1.into(), m.into())))
                .collect();
            if self.is_zero(&term) {
                break;
            }
            out = self.add(&out, &term);
        }
        Ok(out)
    }
}

impl CoeffOps for ChowRing {
    type Elem = Vec<Coeff>;

    fn zero(&self) -> Vec<Coeff> {
        vec![Coeff::zero(); self.chow.basis.len()]
    }

    fn one(&self) -> Vec<Coeff> {
        let mut v = self.zero();
        v[0] = Coeff::one();
        v
    }

    fn is_zero(&self, a: &Vec<Coeff>) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    fn add(&self, a: &Vec<Coeff>, b: &Vec<Coeff>) -> Vec<Coeff> {
        a.iter().zip(b).map(|(x, y)| self.coeff.add(x, y)).collect()
    }

    fn sub(&self, a: &Vec<Coeff>, b: &Vec<Coeff>) -> Vec<Coeff> {
        a.iter().zip(b).map(|(x, y)| self.coeff.sub(x, y)).collect()
    }

    fn neg(&self, a: &Vec<Coeff>) -> Vec<Coeff> {
        a.iter().map(|x| self.coeff.neg(x)).collect()
    }

    fn mul(&self, a: &Vec<Coeff>, b: &Vec<Coeff>) -> Vec<Coeff> {
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let prod = self.coeff.mul(ai, bj);
                if prod.is_zero() {
                    continue;
                }
                for (t, c) in &self.chow.mul[i][j] {
                    let contrib = self.coeff.mul_rat(&prod, c);
                    out[*t] = self.coeff.add(&out[*t], &contrib);
                }
            }
        }
        out
    }

    fn mul_rat(&self, a: &Vec<Coeff>, r: &BigRational) -> Vec<Coeff> {
        a.iter().map(|x| self.coeff.mul_rat(x, r)).collect()
    }

    /// A class is a unit when its degree-0 part is; the positive-degree part
    /// is nilpotent and inverted by a finite geometric series.
    fn invert(&self, a: &Vec<Coeff>) -> Result<Vec<Coeff>, ExactAlgError> {
        let c0inv = self.coeff.invert(&a[0])?;
        let mut tail = a.clone();
        tail[0] = Coeff::zero();
        let x: Vec<Coeff> = tail.iter().map(|c| self.coeff.mul(c, &c0inv)).collect();
        let mut geom = self.one();
        let mut power = self.one();
        for m in 1..=self.chow.dim as u32 {
            power = self.mul(&power, &x);
            if self.is_zero(&power) {
                break;
            }
            geom = if m % 2 == 1 {
                self.sub(&geom, &power)
            } else {
                self.add(&geom, &power)
            };
        }
        Ok(geom.iter().map(|c| self.coeff.mul(c, &c0inv)).collect())
    }
}

/// A smooth-center blow-up `Y -> X` with center `Z` of codimension `r`,
/// carrying everything the change-of-variable identities consume.
#[derive(Debug)]
pub struct BlowupDatum {
    pub name: String,
    pub base: Arc<ChowPresentation>,
    pub total: Arc<ChowPresentation>,
    pub center: Arc<ChowPresentation>,
    pub codim: usize,
    /// Discrepancy of the exceptional divisor: `K_Y = f^* K_X + e E`.
    pub discrepancy: i64,
    /// Pullback matrix: row per basis class of the base, coordinates on `Y`.
    pub pullback: Vec<Vec<BigRational>>,
    /// Class of the exceptional divisor on `Y`.
    pub exceptional: Vec<BigRational>,
    /// Chern classes `c_1 .. c_r` of the normal bundle of `Z` in `X`.
    pub normal_chern: Vec<Vec<BigRational>>,
}

impl BlowupDatum {
    pub fn new(
        name: &str,
        base: Arc<ChowPresentation>,
        total: Arc<ChowPresentation>,
        center: Arc<ChowPresentation>,
        codim: usize,
        pullback: Vec<Vec<BigRational>>,
        exceptional: Vec<BigRational>,
        normal_chern: Vec<Vec<BigRational>>,
    ) -> Result<Self, ChowError> {
        let bad = |msg: String| ChowError::InvalidBlowup(name.to_string(), msg);
        if total.dim != base.dim {
            return Err(bad("blow-up must preserve dimension".into()));
        }
        if base.dim != center.dim + codim {
            return Err(bad("codimension must match dimensions".into()));
        }
        if pullback.len() != base.basis.len() {
            return Err(bad("pullback needs one row per base class".into()));
        }
        for (i, row) in pullback.iter().enumerate() {
            if row.len() != total.basis.len() {
                return Err(bad(format!("pullback row {i} has wrong arity")));
            }
        }
        if normal_chern.len() != codim {
            return Err(bad("normal bundle needs r Chern classes".into()));
        }
        for cls in &normal_chern {
            if cls.len() != center.basis.len() {
                return Err(bad("normal Chern class arity mismatch".into()));
            }
        }
        let datum = BlowupDatum {
            name: name.to_string(),
            base,
            total,
            center,
            codim,
            discrepancy: codim as i64 - 1,
            pullback,
            exceptional,
            normal_chern,
        };
        datum.validate().map_err(bad)?;
        Ok(datum)
    }

    fn validate(&self) -> Result<(), String> {
        let x = &self.base;
        let y = &self.total;
        // Pullback is a unital ring homomorphism.
        let unit = self.pull(&x.unit_class());
        if unit != y.unit_class() {
            return Err("pullback must send [X] to [Y]".into());
        }
        for i in 0..x.basis.len() {
            for j in i..x.basis.len() {
                let prod_x = x.basis_class_product(i, j);
                let lhs = self.pull(&prod_x);
                let rhs = y.mul_classes(&self.pullback[i], &self.pullback[j]);
                if lhs != rhs {
                    return Err(format!(
                        "pullback is not multiplicative on ({}, {})",
                        x.basis[i].name, x.basis[j].name
                    ));
                }
            }
        }
        // Birational invariance of the degree.
        let mut pt_x = x.zero_class();
        pt_x[x.point] = BigRational::one();
        if y.deg(&self.pull(&pt_x)) != BigRational::one() {
            return Err("pullback of the point class must have degree 1".into());
        }
        // Discrepancy: K_Y = f^* K_X + (r - 1) E.
        let expected = y.add_classes(
            &self.pull(&x.canonical),
            &y.scale_class(&self.exceptional, &rat(self.discrepancy)),
        );
        if expected != y.canonical {
            return Err("canonical classes violate the discrepancy relation".into());
        }
        // Euler characteristics: e(Y) = e(X) + (r - 1) e(Z).
        let want = x.euler_characteristic()
            + rat(self.codim as i64 - 1) * self.center.euler_characteristic();
        if y.euler_characteristic() != want {
            return Err("Euler characteristics are inconsistent".into());
        }
        // Normal Chern classes are homogeneous of the right degrees.
        for (idx, cls) in self.normal_chern.iter().enumerate() {
            for (i, c) in cls.iter().enumerate() {
                if !c.is_zero() && self.center.basis[i].degree != idx + 1 {
                    return Err(format!("normal Chern class c_{} inhomogeneous", idx + 1));
                }
            }
        }
        Ok(())
    }

    /// Applies the pullback matrix to a class on the base.
    pub fn pull(&self, class_on_x: &[BigRational]) -> Vec<BigRational> {
        let mut out = self.total.zero_class();
        for (i, c) in class_on_x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, p) in self.pullback[i].iter().enumerate() {
                out[t] += c * p;
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Curated gallery
// ---------------------------------------------------------------------------

fn binom(n: usize, k: usize) -> BigRational {
    let mut r = BigRational::one();
    for i in 0..k {
        r = r * rat((n - i) as i64) / rat((i + 1) as i64);
    }
    r
}

/// Projective space of the given dimension.
pub fn projective_space(n: usize) -> Arc<ChowPresentation> {
    let basis: Vec<BasisClass> = (0..=n)
        .map(|i| BasisClass {
            name: match i {
                0 => "1".to_string(),
                1 => "h".to_string(),
                _ => format!("h^{i}"),
            },
            degree: i,
        })
        .collect();
    let mut mul = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            if i + j <= n {
                mul.push(((i, j), vec![(i + j, BigRational::one())]));
            }
        }
    }
    let chern: Vec<BigRational> = (0..=n).map(|i| binom(n + 1, i)).collect();
    let mut canonical = vec![BigRational::zero(); n + 1];
    canonical[1] = rat(-(n as i64) - 1);
    let mut named = BTreeMap::new();
    let mut h = vec![BigRational::zero(); n + 1];
    h[1] = BigRational::one();
    named.insert("h".to_string(), h);
    let mut pt = vec![BigRational::zero(); n + 1];
    pt[n] = BigRational::one();
    named.insert("pt".to_string(), pt);
    ChowPresentation::new(
        &format!("p{n}"),
        n,
        basis,
        mul,
        chern,
        canonical,
        named,
    )
    .expect("projective space data is valid")
}

/// A point, as the trivial presentation (used as a blow-up center).
pub fn point_presentation() -> Arc<ChowPresentation> {
    ChowPresentation::new(
        "pt",
        0,
        vec![BasisClass {
            name: "1".to_string(),
            degree: 0,
        }],
        vec![],
        vec![BigRational::one()],
        vec![BigRational::zero()],
        BTreeMap::new(),
    )
    .expect("point data is valid")
}

/// A product of `n` copies of the projective line. Basis elements are
/// indexed by subsets of the factors.
pub fn p1_power(n: usize) -> Arc<ChowPresentation> {
    assert!((1..=3).contains(&n), "implemented for up to three factors");
    let factor_names = ["a", "b", "c"];
    let masks: Vec<u32> = {
        let mut m: Vec<u32> = (0..(1u32 << n)).collect();
        m.sort_by_key(|x| x.count_ones());
        m
    };
    let index_of = |mask: u32| masks.iter().position(|&m| m == mask).unwrap();
    let mask_name = |mask: u32| -> String {
        if mask == 0 {
            return "1".to_string();
        }
        (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| factor_names[i])
            .collect()
    };
    let basis: Vec<BasisClass> = masks
        .iter()
        .map(|&m| BasisClass {
            name: mask_name(m),
            degree: m.count_ones() as usize,
        })
        .collect();
    let mut mul = Vec::new();
    for (i, &mi) in masks.iter().enumerate() {
        for (j, &mj) in masks.iter().enumerate() {
            if i == 0 || j == 0 || i > j {
                continue;
            }
            if mi & mj == 0 {
                mul.push(((i, j), vec![(index_of(mi | mj), BigRational::one())]));
            }
        }
    }
    // c(T) = prod (1 + 2 x_i): subset S contributes 2^{|S|}.
    let chern: Vec<BigRational> = masks
        .iter()
        .map(|&m| rat(1 << m.count_ones()))
        .collect();
    let mut canonical = vec![BigRational::zero(); masks.len()];
    let mut named = BTreeMap::new();
    for f in 0..n {
        let idx = index_of(1 << f);
        canonical[idx] = rat(-2);
        let mut cls = vec![BigRational::zero(); masks.len()];
        cls[idx] = BigRational::one();
        named.insert(factor_names[f].to_string(), cls);
    }
    let mut pt = vec![BigRational::zero(); masks.len()];
    pt[masks.len() - 1] = BigRational::one();
    named.insert("pt".to_string(), pt);
    let name = match n {
        1 => "p1".to_string(),
        2 => "p1xp1".to_string(),
        _ => "p1xp1xp1".to_string(),
    };
    ChowPresentation::new(&name, n, basis, mul, chern, canonical, named)
        .expect("product data is valid")
}

/// The blow-up of the projective plane in a point (the Hirzebruch surface F1).
pub fn bl_pt_p2() -> Arc<ChowPresentation> {
    let basis = vec![
        BasisClass { name: "1".into(), degree: 0 },
        BasisClass { name: "H".into(), degree: 1 },
        BasisClass { name: "E".into(), degree: 1 },
        BasisClass { name: "pt".into(), degree: 2 },
    ];
    let mul = vec![
        ((1, 1), vec![(3, rat(1))]),
        ((2, 2), vec![(3, rat(-1))]),
    ];
    let chern = vec![rat(1), rat(3), rat(-1), rat(4)];
    let canonical = vec![rat(0), rat(-3), rat(1), rat(0)];
    let mut named = BTreeMap::new();
    named.insert("H".into(), vec![rat(0), rat(1), rat(0), rat(0)]);
    named.insert("E".into(), vec![rat(0), rat(0), rat(1), rat(0)]);
    named.insert("pt".into(), vec![rat(0), rat(0), rat(0), rat(1)]);
    ChowPresentation::new("bl-pt-p2", 2, basis, mul, chern, canonical, named)
        .expect("bl-pt-p2 data is valid")
}

/// The blow-up of projective 3-space in a point.
pub fn bl_pt_p3() -> Arc<ChowPresentation> {
    let basis = vec![
        BasisClass { name: "1".into(), degree: 0 },
        BasisClass { name: "H".into(), degree: 1 },
        BasisClass { name: "E".into(), degree: 1 },
        BasisClass { name: "H^2".into(), degree: 2 },
        BasisClass { name: "E^2".into(), degree: 2 },
        BasisClass { name: "pt".into(), degree: 3 },
    ];
    let mul = vec![
        ((1, 1), vec![(3, rat(1))]),
        ((2, 2), vec![(4, rat(1))]),
        ((1, 3), vec![(5, rat(1))]),
        ((2, 4), vec![(5, rat(1))]), // E^3 = +pt
    ];
    let chern = vec![rat(1), rat(4), rat(-2), rat(6), rat(0), rat(6)];
    let canonical = vec![rat(0), rat(-4), rat(2), rat(0), rat(0), rat(0)];
    let mut named = BTreeMap::new();
    named.insert("H".into(), vec![rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)]);
    named.insert("E".into(), vec![rat(0), rat(0), rat(1), rat(0), rat(0), rat(0)]);
    named.insert("pt".into(), vec![rat(0), rat(0), rat(0), rat(0), rat(0), rat(1)]);
    ChowPresentation::new("bl-pt-p3", 3, basis, mul, chern, canonical, named)
        .expect("bl-pt-p3 data is valid")
}

/// The blow-up of projective 3-space along a line.
pub fn bl_line_p3() -> Arc<ChowPresentation> {
    let basis = vec![
        BasisClass { name: "1".into(), degree: 0 },
        BasisClass { name: "H".into(), degree: 1 },
        BasisClass { name: "E".into(), degree: 1 },
        BasisClass { name: "H^2".into(), degree: 2 },
        BasisClass { name: "HE".into(), degree: 2 },
        BasisClass { name: "pt".into(), degree: 3 },
    ];
    let mul = vec![
        ((1, 1), vec![(3, rat(1))]),
        ((1, 2), vec![(4, rat(1))]),
        ((2, 2), vec![(3, rat(-1)), (4, rat(2))]), // E^2 = -H^2 + 2 HE
        ((1, 3), vec![(5, rat(1))]),               // H^3 = pt
        ((2, 4), vec![(5, rat(-1))]),              // H E^2 = -pt
    ];
    let chern = vec![rat(1), rat(4), rat(-1), rat(7), rat(-4), rat(6)];
    let canonical = vec![rat(0), rat(-4), rat(1), rat(0), rat(0), rat(0)];
    let mut named = BTreeMap::new();
    named.insert("H".into(), vec![rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)]);
    named.insert("E".into(), vec![rat(0), rat(0), rat(1), rat(0), rat(0), rat(0)]);
    named.insert("pt".into(), vec![rat(0), rat(0), rat(0), rat(0), rat(0), rat(1)]);
    ChowPresentation::new("bl-line-p3", 3, basis, mul, chern, canonical, named)
        .expect("bl-line-p3 data is valid")
}

/// All curated presentations.
pub fn gallery() -> Vec<Arc<ChowPresentation>> {
    vec![
        p1_power(1),
        projective_space(2),
        projective_space(3),
        projective_space(4),
        p1_power(2),
        p1_power(3),
        bl_pt_p2(),
        bl_pt_p3(),
        bl_line_p3(),
    ]
}

pub fn find_presentation(name: &str) -> Option<Arc<ChowPresentation>> {
    // `p1` is served by the product family for a uniform naming scheme.
    gallery().into_iter().find(|p| p.name == name)
}

/// The blow-up of the plane in a point, with full change-of-variable data.
pub fn blowup_pt_p2() -> BlowupDatum {
    let x = projective_space(2);
    let y = bl_pt_p2();
    let z = point_presentation();
    BlowupDatum::new(
        "bl-pt-p2",
        x,
        y,
        z,
        2,
        vec![
            vec![rat(1), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(1)],
        ],
        vec![rat(0), rat(0), rat(1), rat(0)],
        vec![vec![rat(0)], vec![rat(0)]],
    )
    .expect("bl-pt-p2 blow-up data is valid")
}

/// The blow-up of 3-space in a point.
pub fn blowup_pt_p3() -> BlowupDatum {
    let x = projective_space(3);
    let y = bl_pt_p3();
    let z = point_presentation();
    BlowupDatum::new(
        "bl-pt-p3",
        x,
        y,
        z,
        3,
        vec![
            vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(0), rat(0), rat(1)],
        ],
        vec![rat(0), rat(0), rat(1), rat(0), rat(0), rat(0)],
        vec![vec![rat(0)], vec![rat(0)], vec![rat(0)]],
    )
    .expect("bl-pt-p3 blow-up data is valid")
}

/// The blow-up of 3-space along a line; the center is a projective line with
/// normal bundle O(1) + O(1).
pub fn blowup_line_p3() -> BlowupDatum {
    let x = projective_space(3);
    let y = bl_line_p3();
    let z = p1_power(1);
    BlowupDatum::new(
        "bl-line-p3",
        x,
        y,
        z,
        2,
        vec![
            vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(0), rat(0), rat(1)],
        ],
        vec![rat(0), rat(0), rat(1), rat(0), rat(0), rat(0)],
        vec![vec![rat(0), rat(2)], vec![rat(0), rat(0)]],
    )
    .expect("bl-line-p3 blow-up data is valid")
}

/// All curated blow-up configurations.
pub fn blowup_gallery() -> Vec<BlowupDatum> {
    vec![blowup_pt_p2(), blowup_pt_p3(), blowup_line_p3()]
}

pub fn find_blowup(name: &str) -> Option<BlowupDatum> {
    blowup_gallery().into_iter().find(|b| b.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gallery_constructs_and_validates() {
        // Constructors run associativity, pairing, and c1 = -K checks.
        let names: Vec<String> = gallery().iter().map(|p| p.name.clone()).collect();
        assert_eq!(
            names,
            vec![
                "p1", "p2", "p3", "p4", "p1xp1", "p1xp1xp1", "bl-pt-p2", "bl-pt-p3",
                "bl-line-p3"
            ]
        );
    }

    #[test]
    fn euler_characteristics() {
        let expected: Vec<(&str, i64)> = vec![
            ("p1", 2),
            ("p2", 3),
            ("p3", 4),
            ("p4", 5),
            ("p1xp1", 4),
            ("p1xp1xp1", 8),
            ("bl-pt-p2", 4),
            ("bl-pt-p3", 6),
            ("bl-line-p3", 6),
        ];
        for (name, e) in expected {
            let p = find_presentation(name).unwrap();
            assert_eq!(p.euler_characteristic(), rat(e), "Euler number of {name}");
        }
    }

    #[test]
    fn intersection_numbers() {
        let f1 = bl_pt_p2();
        let e = f1.named_class("E").unwrap();
        let h = f1.named_class("H").unwrap();
        assert_eq!(f1.deg(&f1.mul_classes(&e, &e)), rat(-1));
        assert_eq!(f1.deg(&f1.mul_classes(&h, &h)), rat(1));
        assert_eq!(f1.deg(&f1.mul_classes(&h, &e)), rat(0));

        let y = bl_pt_p3();
        let e = y.named_class("E").unwrap();
        let e3 = y.mul_classes(&y.mul_classes(&e, &e), &e);
        assert_eq!(y.deg(&e3), rat(1));

        let y = bl_line_p3();
        let e = y.named_class("E").unwrap();
        let h = y.named_class("H").unwrap();
        let e2 = y.mul_classes(&e, &e);
        assert_eq!(y.deg(&y.mul_classes(&e2, &e)), rat(-2));
        assert_eq!(y.deg(&y.mul_classes(&e2, &h)), rat(-1));
        assert_eq!(y.deg(&y.mul_classes(&y.mul_classes(&h, &h), &e)), rat(0));
    }

    #[test]
    fn blowup_data_validates() {
        // Constructor checks: ring homomorphism, discrepancy K_Y = f*K_X + (r-1)E,
        // Euler-characteristic bookkeeping, homogeneity of normal data.
        for b in blowup_gallery() {
            assert_eq!(b.discrepancy, b.codim as i64 - 1, "{}", b.name);
        }
    }

    #[test]
    fn projection_formula_samples() {
        let b = blowup_line_p3();
        let x = &b.base;
        let y = &b.total;
        let h = x.named_class("h").unwrap();
        let h2 = x.mul_classes(&h, &h);
        // deg_Y(f*h . f*h^2) = deg_X(h . h^2) = 1.
        let lhs = y.mul_classes(&b.pull(&h), &b.pull(&h2));
        assert_eq!(y.deg(&lhs), rat(1));
        // f*(h) . E^2 = H E^2 = -pt.
        let e = y.named_class("E").unwrap();
        let e2 = y.mul_classes(&e, &e);
        assert_eq!(y.deg(&y.mul_classes(&b.pull(&h), &e2)), rat(-1));
    }

    #[test]
    fn chow_ring_inversion_and_exp() {
        let p3 = projective_space(3);
        let ring = ChowRing::new(p3.clone(), CoeffRing::new(0));
        let one_plus_h = {
            let mut v = ring.one();
            v[1] = Coeff::one();
            v
        };
        let inv = ring.invert(&one_plus_h).unwrap();
        // (1 + h)^{-1} = 1 - h + h^2 - h^3.
        let expected: Vec<Coeff> = vec![
            Coeff::one(),
            Coeff::from_int(-1),
            Coeff::one(),
            Coeff::from_int(-1),
        ];
        assert_eq!(inv, expected);
        assert_eq!(ring.mul(&inv, &one_plus_h), ring.one());

        let p2 = projective_space(2);
        let ring2 = ChowRing::new(p2.clone(), CoeffRing::new(0));
        let h = {
            let mut v = ring2.zero();
            v[1] = Coeff::one();
            v
        };
        let eh = ring2.exp_nilpotent(&h).unwrap();
        assert_eq!(
            eh,
            vec![
                Coeff::one(),
                Coeff::one(),
                Coeff::from_rat(BigRational::new(1.into(), 2.into()))
            ]
        );
    }

    #[test]
    fn named_divisors_enumeration() {
        let y = bl_line_p3();
        let mut names: Vec<String> = y.named_divisors().into_iter().map(|(n, _)| n).collect();
        names.sort();
        assert_eq!(names, vec!["E", "H"]);
    }

    #[test]
    fn invalid_presentations_are_rejected() {
        // A broken associativity/pairing table must fail validation: drop the
        // E^2 = -pt relation of bl-pt-p2 (pairing degenerates).
        let basis = vec![
            BasisClass { name: "1".into(), degree: 0 },
            BasisClass { name: "H".into(), degree: 1 },
            BasisClass { name: "E".into(), degree: 1 },
            BasisClass { name: "pt".into(), degree: 2 },
        ];
        let mul = vec![((1, 1), vec![(3, rat(1))])];
        let chern = vec![rat(1), rat(3), rat(-1), rat(4)];
        let canonical = vec![rat(0), rat(-3), rat(1), rat(0)];
        let err = ChowPresentation::new(
            "broken",
            2,
            basis,
            mul,
            chern,
            canonical,
            BTreeMap::new(),
        );
        assert!(err.is_err());
    }
}
