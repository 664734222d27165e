//! Smooth complete toric varieties from fan data: validation, exact
//! intersection numbers, derived Chow presentations, point counts over
//! finite fields, E-polynomials, and the flop twin pairs that feed the
//! K-equivalence comparisons.
//!
//! Fans are given by primitive integer rays and unimodular simplicial
//! maximal cones. Validation checks, in order: ray primitivity and
//! distinctness, cone well-formedness, unimodularity (smoothness), the wall
//! condition (every facet is shared by exactly two maximal cones lying on
//! opposite sides), and a generic-point covering-degree test that rules out
//! wrap-around configurations; together these certify a smooth complete fan.

use crate::chow::{BasisClass, ChowError, ChowPresentation};
use crate::linalg::{RowFate, RowReducer};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ToricError {
    #[error("invalid fan `{0}`: {1}")]
    InvalidFan(String, String),
    #[error("invalid flop pair `{0}`: {1}")]
    InvalidPair(String, String),
    #[error(transparent)]
    Chow(#[from] ChowError),
}

/// A smooth complete fan.
#[derive(Debug, Clone)]
pub struct Fan {
    pub name: String,
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    /// Maximal cones as sorted ray-index lists, each of full dimension.
    pub max_cones: Vec<Vec<usize>>,
    /// Per maximal cone, the integral dual basis: `duals[c][i]` pairs to 1
    /// with ray `max_cones[c][i]` and to 0 with the cone's other rays.
    duals: Vec<Vec<Vec<i64>>>,
}

fn gcd64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        _ => {
            let mut det = 0;
            for (j, head) in m[0].iter().enumerate() {
                if *head == 0 {
                    continue;
                }
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| *v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                det += sign * head * int_det(&minor);
            }
            det
        }
    }
}

/// Inverse of an integer matrix with determinant +-1.
fn unimodular_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    let det = int_det(m);
    if det != 1 && det != -1 {
        return None;
    }
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            // inv[i][j] = cofactor(j, i) / det
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[i][j] = sign * int_det(&minor) * det;
        }
    }
    Some(inv)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Fan {
    /// Builds and fully validates a fan.
    pub fn new(
        name: &str,
        dim: usize,
        rays: Vec<Vec<i64>>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Fan, ToricError> {
        let bad = |msg: String| ToricError::InvalidFan(name.to_string(), msg);
        if dim == 0 || dim > 4 {
            return Err(bad("dimension must be between 1 and 4".into()));
        }
        if rays.is_empty() {
            return Err(bad("a complete fan needs rays".into()));
        }
        for (i, ray) in rays.iter().enumerate() {
            if ray.len() != dim {
                return Err(bad(format!("ray {i} has wrong arity")));
            }
            let g = ray.iter().fold(0i64, |acc, &x| gcd64(acc, x));
            if g == 0 {
                return Err(bad(format!("ray {i} is zero")));
            }
            if g != 1 {
                return Err(bad(format!("ray {i} is not primitive")));
            }
        }
        let distinct: BTreeSet<&Vec<i64>> = rays.iter().collect();
        if distinct.len() != rays.len() {
            return Err(bad("duplicate rays".into()));
        }
        if max_cones.is_empty() {
            return Err(bad("a complete fan needs maximal cones".into()));
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for (c, cone) in max_cones.iter().enumerate() {
            let mut sorted = cone.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != dim || cone.len() != dim {
                return Err(bad(format!("cone {c} must have {dim} distinct rays")));
            }
            if sorted.iter().any(|&r| r >= rays.len()) {
                return Err(bad(format!("cone {c} references a missing ray")));
            }
            cones.push(sorted);
        }
        let cone_set: BTreeSet<&Vec<usize>> = cones.iter().collect();
        if cone_set.len() != cones.len() {
            return Err(bad("duplicate maximal cones".into()));
        }
        // Smoothness: every maximal cone is unimodular.
        let mut duals = Vec::with_capacity(cones.len());
        for (c, cone) in cones.iter().enumerate() {
            let mat: Vec<Vec<i64>> = cone.iter().map(|&r| rays[r].clone()).collect();
            let inv = unimodular_inverse(&mat).ok_or_else(|| {
                bad(format!("cone {c} is not unimodular (fan is not smooth)"))
            })?;
            // Dual vector i is column i of the inverse of the ray-row matrix.
            let cone_duals: Vec<Vec<i64>> = (0..dim)
                .map(|i| (0..dim).map(|k| inv[k][i]).collect())
                .collect();
            duals.push(cone_duals);
        }
        let fan = Fan {
            name: name.to_string(),
            dim,
            rays,
            max_cones: cones,
            duals,
        };
        fan.validate_complete().map_err(bad)?;
        Ok(fan)
    }

    /// Wall conditions plus a generic-point covering-degree test.
    fn validate_complete(&self) -> Result<(), String> {
        // Facet -> (cone index, opposite ray index) incidences.
        let mut facets: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, cone) in self.max_cones.iter().enumerate() {
            for drop in 0..cone.len() {
                let facet: Vec<usize> = cone
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != drop)
                    .map(|(_, &r)| r)
                    .collect();
                facets.entry(facet).or_default().push((c, drop));
            }
        }
        for (facet, inc) in &facets {
            if inc.len() != 2 {
                return Err(format!(
                    "facet {facet:?} lies in {} maximal cones (needs exactly 2)",
                    inc.len()
                ));
            }
            // Wall condition: the two cones lie on opposite sides.
            let (c1, d1) = inc[0];
            let (c2, d2) = inc[1];
            let m = &self.duals[c1][d1];
            let v2 = &self.rays[self.max_cones[c2][d2]];
            if dot(m, v2) >= 0 {
                return Err(format!(
                    "cones {c1} and {c2} are on the same side of facet {facet:?}"
                ));
            }
        }
        // Generic point: exactly one maximal cone must contain it.
        let mut n_base: i64 = 2;
        'outer: loop {
            let u: Vec<i64> = (0..self.dim as u32).map(|i| n_base.pow(i)).collect();
            let mut containing = 0usize;
            for (c, _) in self.max_cones.iter().enumerate() {
                let mut positive = 0usize;
                for m in &self.duals[c] {
                    let lambda = dot(m, &u);
                    if lambda == 0 {
                        // Not generic for this fan; try another base point.
                        n_base += 1;
                        if n_base > 1000 {
                            return Err("could not find a generic direction".into());
                        }
                        continue 'outer;
                    }
                    if lambda > 0 {
                        positive += 1;
                    }
                }
                if positive == self.dim {
                    containing += 1;
                }
            }
            if containing != 1 {
                return Err(format!(
                    "generic point lies in {containing} cones (fan overlaps or has gaps)"
                ));
            }
            return Ok(());
        }
    }

    /// Number of faces of each dimension (faces of simplicial cones are the
    /// ray subsets; the origin is the unique 0-dimensional face).
    pub fn face_counts(&self) -> Vec<u64> {
        let mut faces: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); self.dim + 1];
        for cone in &self.max_cones {
            for mask in 0u32..(1 << cone.len()) {
                let face: Vec<usize> = cone
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &r)| r)
                    .collect();
                faces[face.len()].insert(face);
            }
        }
        faces.iter().map(|s| s.len() as u64).collect()
    }

    /// Coefficients (in the field size `q`) of the exact point count
    /// `#X(F_q) = sum_d f_d (q - 1)^{n - d}`.
    pub fn point_count_coeffs(&self) -> Vec<BigInt> {
        let n = self.dim;
        let f = self.face_counts();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (d, &count) in f.iter().enumerate() {
            // (q - 1)^{n - d}
            let e = n - d;
            for j in 0..=e {
                let sign = if (e - j) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                coeffs[j] += sign * BigInt::from(count) * BigInt::from(binom_u64(e, j));
            }
        }
        coeffs
    }

    /// Evaluates the point count at a concrete prime power.
    pub fn point_count_at(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.point_count_coeffs().iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// The E-polynomial; for a smooth complete toric variety all Hodge
    /// numbers are concentrated on the diagonal, so this returns the
    /// coefficients of `(uv)^p`, which match the point-count coefficients.
    pub fn e_polynomial(&self) -> Vec<BigInt> {
        self.point_count_coeffs()
    }

    /// An exact intersection number of `dim` ray divisors (a multiset).
    pub fn intersection_number(&self, ray_indices: &[usize]) -> BigRational {
        let mut calc = IntersectionCalculator::new(self);
        calc.number(ray_indices)
    }

    fn cone_containing(&self, support: &BTreeSet<usize>) -> Option<usize> {
        self.max_cones
            .iter()
            .position(|cone| support.iter().all(|r| cone.contains(r)))
    }

    /// Derives the Chow presentation: divisor-class generators, a basis per
    /// degree selected by Poincaré-pairing profiles, and the full
    /// multiplication table. The result passes the presentation validator
    /// (associativity, nondegeneracy, `c_1 = -K`).
    pub fn chow_presentation(&self) -> Result<Arc<ChowPresentation>, ToricError> {
        let n = self.dim;
        let nrays = self.rays.len();
        let mut calc = IntersectionCalculator::new(self);

        // Enumerate monomials per degree; express each in a chosen basis.
        let mut basis: Vec<BasisClass> = Vec::new();
        let mut basis_monomials: Vec<Vec<usize>> = Vec::new();
        let mut coords: BTreeMap<Vec<usize>, Vec<BigRational>> = BTreeMap::new();
        let mut degree_offsets: Vec<usize> = Vec::new();

        for d in 0..=n {
            degree_offsets.push(basis.len());
            let mut monos = multisets(nrays, d);
            if d == n {
                // Lead with a maximal-cone product so the point class is a
                // genuine cone monomial with intersection number one.
                let lead = self.max_cones[0].clone();
                monos.retain(|m| *m != lead);
                monos.insert(0, lead);
            }
            let complementary = multisets(nrays, n - d);
            let mut reducer = RowReducer::new(complementary.len());
            let mut local_coords: Vec<(Vec<usize>, Vec<BigRational>)> = Vec::new();
            for mono in &monos {
                let profile: Vec<BigRational> = complementary
                    .iter()
                    .map(|c| {
                        let mut joined = mono.clone();
                        joined.extend_from_slice(c);
                        joined.sort_unstable();
                        calc.number(&joined)
                    })
                    .collect();
                match reducer.feed(&profile) {
                    RowFate::Independent { index } => {
                        let mut unit = vec![BigRational::zero(); index + 1];
                        unit[index] = BigRational::one();
                        local_coords.push((mono.clone(), unit));
                        basis_monomials.push(mono.clone());
                        basis.push(BasisClass {
                            name: monomial_name(mono),
                            degree: d,
                        });
                    }
                    RowFate::Dependent { coords: c } => {
                        local_coords.push((mono.clone(), c));
                    }
                }
            }
            let local_rank = basis.len() - degree_offsets[d];
            for (mono, c) in local_coords {
                let mut padded = vec![BigRational::zero(); local_rank];
                padded[..c.len()].clone_from_slice(&c);
                coords.insert(mono, padded);
            }
        }
        let total = basis.len();
        let global_coords = |mono: &Vec<usize>, coords: &BTreeMap<Vec<usize>, Vec<BigRational>>| {
            let d = mono.len();
            let mut out = vec![BigRational::zero(); total];
            if d > n {
                return out;
            }
            let local = &coords[mono];
            for (i, c) in local.iter().enumerate() {
                out[degree_offsets[d] + i] = c.clone();
            }
            out
        };

        // Multiplication table on the basis monomials.
        let mut mul_upper = Vec::new();
        for i in 1..total {
            for j in i..total {
                let d = basis[i].degree + basis[j].degree;
                if d > n {
                    continue;
                }
                let mut joined = basis_monomials[i].clone();
                joined.extend_from_slice(&basis_monomials[j]);
                joined.sort_unstable();
                let g = global_coords(&joined, &coords);
                let sparse: Vec<(usize, BigRational)> = g
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(t, c)| (t, c.clone()))
                    .collect();
                if !sparse.is_empty() {
                    mul_upper.push(((i, j), sparse));
                }
            }
        }

        // Total Chern class: product over rays of (1 + D_rho).
        let mut chern = vec![BigRational::zero(); total];
        chern[0] = BigRational::one();
        for size in 1..=n {
            for subset in squarefree_subsets(nrays, size) {
                let g = global_coords(&subset, &coords);
                for (t, c) in g.iter().enumerate() {
                    chern[t] += c;
                }
            }
        }
        // Canonical class: minus the sum of the ray divisors.
        let mut canonical = vec![BigRational::zero(); total];
        for r in 0..nrays {
            let g = global_coords(&vec![r], &coords);
            for (t, c) in g.iter().enumerate() {
                canonical[t] -= c;
            }
        }
        let mut named = BTreeMap::new();
        for r in 0..nrays {
            named.insert(format!("D{r}"), global_coords(&vec![r], &coords));
        }
        let mut pt = vec![BigRational::zero(); total];
        pt[total - 1] = BigRational::one();
        named.insert("pt".to_string(), pt);

        Ok(ChowPresentation::new(
            &self.name,
            n,
            basis,
            mul_upper,
            chern,
            canonical,
            named,
        )?)
    }
}

fn binom_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

fn monomial_name(mono: &[usize]) -> String {
    if mono.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < mono.len() {
        let r = mono[i];
        let mut mult = 0;
        while i < mono.len() && mono[i] == r {
            mult += 1;
            i += 1;
        }
        if mult == 1 {
            parts.push(format!("D{r}"));
        } else {
            parts.push(format!("D{r}^{mult}"));
        }
    }
    parts.join("*")
}

/// Nondecreasing index sequences of the given length.
fn multisets(nrays: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(nrays: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for r in start..nrays {
            cur.push(r);
            rec(nrays, size, r, cur, out);
            cur.pop();
        }
    }
    rec(nrays, size, 0, &mut cur, &mut out);
    out
}

/// Strictly increasing index sequences of the given length.
fn squarefree_subsets(nrays: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(nrays: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for r in start..nrays {
            cur.push(r);
            rec(nrays, size, r + 1, cur, out);
            cur.pop();
        }
    }
    rec(nrays, size, 0, &mut cur, &mut out);
    out
}

/// Memoizing evaluator for products of `dim` ray divisors.
///
/// Repeated rays are eliminated with linear-equivalence relations chosen
/// from the integral dual basis of a maximal cone containing the support;
/// that choice kills the other rays of the cone, so every rewrite strictly
/// reduces the multiset's excess and the recursion terminates.
struct IntersectionCalculator<'a> {
    fan: &'a Fan,
    memo: BTreeMap<Vec<usize>, BigRational>,
}

impl<'a> IntersectionCalculator<'a> {
    fn new(fan: &'a Fan) -> Self {
        IntersectionCalculator {
            fan,
            memo: BTreeMap::new(),
        }
    }

    fn number(&mut self, ray_indices: &[usize]) -> BigRational {
        assert_eq!(
            ray_indices.len(),
            self.fan.dim,
            "intersection numbers take dim-many divisors"
        );
        let mut key = ray_indices.to_vec();
        key.sort_unstable();
        self.eval(key)
    }

    fn eval(&mut self, key: Vec<usize>) -> BigRational {
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let support: BTreeSet<usize> = key.iter().copied().collect();
        let value = match self.fan.cone_containing(&support) {
            None => BigRational::zero(),
            Some(cone_idx) => {
                if support.len() == key.len() {
                    // Squarefree inside a maximal cone of the same size: the
                    // orbit is a single reduced point.
                    BigRational::one()
                } else {
                    let rho = first_repeat(&key);
                    let cone = &self.fan.max_cones[cone_idx];
                    let pos = cone.iter().position(|&r| r == rho).unwrap();
                    let m = self.fan.duals[cone_idx][pos].clone();
                    // D_rho ~ -sum_{tau not in cone} <m, v_tau> D_tau.
                    let mut rest = key.clone();
                    let at = rest.iter().position(|&r| r == rho).unwrap();
                    rest.remove(at);
                    let mut acc = BigRational::zero();
                    for tau in 0..self.fan.rays.len() {
                        if cone.contains(&tau) {
                            continue;
                        }
                        let pairing = dot(&m, &self.fan.rays[tau]);
                        if pairing == 0 {
                            continue;
                        }
                        let mut next = rest.clone();
                        let insert_at = next.partition_point(|&r| r < tau);
                        next.insert(insert_at, tau);
                        let sub = self.eval(next);
                        acc -= BigRational::from_integer(pairing.into()) * sub;
                    }
                    acc
                }
            }
        };
        self.memo.insert(key, value.clone());
        value
    }
}

fn first_repeat(key: &[usize]) -> usize {
    for w in key.windows(2) {
        if w[0] == w[1] {
            return w[0];
        }
    }
    unreachable!("called on a squarefree multiset")
}

/// Two smooth complete fans on the same rays differing by a flop.
#[derive(Debug, Clone)]
pub struct FlopPair {
    pub name: String,
    pub twin_a: Fan,
    pub twin_b: Fan,
}

impl FlopPair {
    /// Validates both twins and rejects degenerate (identical) pairs.
    pub fn new(
        name: &str,
        dim: usize,
        rays: Vec<Vec<i64>>,
        cones_a: Vec<Vec<usize>>,
        cones_b: Vec<Vec<usize>>,
    ) -> Result<FlopPair, ToricError> {
        let twin_a = Fan::new(&format!("{name}-a"), dim, rays.clone(), cones_a)?;
        let twin_b = Fan::new(&format!("{name}-b"), dim, rays, cones_b)?;
        let set_a: BTreeSet<&Vec<usize>> = twin_a.max_cones.iter().collect();
        let set_b: BTreeSet<&Vec<usize>> = twin_b.max_cones.iter().collect();
        if set_a == set_b {
            return Err(ToricError::InvalidPair(
                name.to_string(),
                "twins have identical cone structure (no flop)".into(),
            ));
        }
        Ok(FlopPair {
            name: name.to_string(),
            twin_a,
            twin_b,
        })
    }
}

// ---------------------------------------------------------------------------
// Curated fans
// ---------------------------------------------------------------------------

fn e(dim: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

/// The standard fan of projective n-space.
pub fn fan_projective_space(n: usize) -> Fan {
    let mut rays: Vec<Vec<i64>> = (0..n).map(|i| e(n, i)).collect();
    rays.push(vec![-1; n]);
    let cones: Vec<Vec<usize>> = squarefree_subsets(n + 1, n);
    Fan::new(&format!("p{n}"), n, rays, cones).expect("projective fan is valid")
}

/// The fan of a product of projective lines.
pub fn fan_p1_power(n: usize) -> Fan {
    let mut rays = Vec::new();
    for i in 0..n {
        rays.push(e(n, i));
        let mut neg = e(n, i);
        neg[i] = -1;
        rays.push(neg);
    }
    // Ray 2i is +e_i, ray 2i+1 is -e_i; cones = sign choices.
    let mut cones = Vec::new();
    for mask in 0u32..(1 << n) {
        let cone: Vec<usize> = (0..n)
            .map(|i| 2 * i + ((mask >> i) & 1) as usize)
            .collect();
        cones.push(cone);
    }
    let name = match n {
        1 => "p1".to_string(),
        2 => "p1xp1".to_string(),
        _ => "p1xp1xp1".to_string(),
    };
    Fan::new(&name, n, rays, cones).expect("product fan is valid")
}

/// Blow-up of the plane at the torus-fixed point of the cone <e1, e2>.
pub fn fan_bl_pt_p2() -> Fan {
    let rays = vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![1, 1]];
    let cones = vec![vec![0, 3], vec![1, 3], vec![1, 2], vec![0, 2]];
    Fan::new("bl-pt-p2", 2, rays, cones).expect("bl-pt-p2 fan is valid")
}

/// Blow-up of 3-space at the torus-fixed point of <e1, e2, e3>.
pub fn fan_bl_pt_p3() -> Fan {
    let rays = vec![
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![-1, -1, -1],
        vec![1, 1, 1],
    ];
    let cones = vec![
        vec![0, 1, 4],
        vec![0, 2, 4],
        vec![1, 2, 4],
        vec![0, 1, 3],
        vec![0, 2, 3],
        vec![1, 2, 3],
    ];
    Fan::new("bl-pt-p3", 3, rays, cones).expect("bl-pt-p3 fan is valid")
}

/// Blow-up of 3-space along the invariant line of the cone <e2, e3>.
pub fn fan_bl_line_p3() -> Fan {
    let rays = vec![
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![-1, -1, -1],
        vec![0, 1, 1],
    ];
    let cones = vec![
        vec![0, 1, 4],
        vec![0, 2, 4],
        vec![1, 3, 4],
        vec![2, 3, 4],
        vec![0, 1, 3],
        vec![0, 2, 3],
    ];
    Fan::new("bl-line-p3", 3, rays, cones).expect("bl-line-p3 fan is valid")
}

/// All curated fans, matching the Chow gallery names.
pub fn fan_gallery() -> Vec<Fan> {
    vec![
        fan_p1_power(1),
        fan_projective_space(2),
        fan_projective_space(3),
        fan_projective_space(4),
        fan_p1_power(2),
        fan_p1_power(3),
        fan_bl_pt_p2(),
        fan_bl_pt_p3(),
        fan_bl_line_p3(),
    ]
}

pub fn named_fan(name: &str) -> Option<Fan> {
    fan_gallery().into_iter().find(|f| f.name == name)
}

/// The two small resolutions of the cone over a quadric surface: a
/// three-dimensional flop pair agreeing in every ray but differing in the
/// diagonal chosen for the square cone <e1, e2, e1+e3, e2+e3>.
pub fn conifold_pair() -> FlopPair {
    let rays = vec![
        vec![1, 0, 0],  // 0: e1
        vec![0, 1, 0],  // 1: e2
        vec![0, 0, 1],  // 2: e3
        vec![-1, -1, -1], // 3: v-
        vec![1, 0, 1],  // 4: w1 = e1 + e3
        vec![0, 1, 1],  // 5: w2 = e2 + e3
    ];
    let cones_a = vec![
        vec![0, 1, 4],
        vec![1, 4, 5],
        vec![2, 4, 5],
        vec![0, 3, 4],
        vec![2, 3, 4],
        vec![1, 3, 5],
        vec![2, 3, 5],
        vec![0, 1, 3],
    ];
    let cones_b = vec![
        vec![0, 1, 5],
        vec![0, 4, 5],
        vec![2, 4, 5],
        vec![0, 3, 4],
        vec![2, 3, 4],
        vec![1, 3, 5],
        vec![2, 3, 5],
        vec![0, 1, 3],
    ];
    FlopPair::new("conifold-3fold", 3, rays, cones_a, cones_b)
        .expect("conifold pair is valid")
}

pub fn flop_gallery() -> Vec<FlopPair> {
    vec![conifold_pair()]
}

pub fn find_flop(name: &str) -> Option<FlopPair> {
    flop_gallery().into_iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn gallery_fans_validate() {
        let names: Vec<String> = fan_gallery().into_iter().map(|f| f.name).collect();
        assert_eq!(
            names,
            vec![
                "p1", "p2", "p3", "p4", "p1xp1", "p1xp1xp1", "bl-pt-p2", "bl-pt-p3",
                "bl-line-p3"
            ]
        );
    }

    #[test]
    fn smoothness_and_completeness_failures_are_detected() {
        // Non-unimodular cone: the A1 cone <(1,0),(1,2)> is singular.
        let err = Fan::new(
            "a1",
            2,
            vec![vec![1, 0], vec![1, 2], vec![-1, -1]],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        );
        assert!(matches!(err, Err(ToricError::InvalidFan(_, _))));

        // Missing cone: not complete.
        let err = Fan::new(
            "gap",
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            vec![vec![0, 1], vec![1, 2]],
        );
        assert!(err.is_err());

        // Overlapping cones on the same side of a wall.
        let err = Fan::new(
            "overlap",
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![1, 1]],
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![0, 2]],
        );
        assert!(err.is_err());
    }

    #[test]
    fn projective_plane_numbers_and_counts() {
        let fan = fan_projective_space(2);
        assert_eq!(fan.intersection_number(&[0, 1]), rat(1));
        assert_eq!(fan.intersection_number(&[0, 0]), rat(1)); // h^2 = 1
        assert_eq!(fan.intersection_number(&[2, 2]), rat(1));
        let coeffs = fan.point_count_coeffs();
        assert_eq!(coeffs, vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]);
        assert_eq!(fan.point_count_at(&BigInt::from(2)), BigInt::from(7));
        assert_eq!(fan.point_count_at(&BigInt::from(4)), BigInt::from(21));
    }

    #[test]
    fn product_of_lines_numbers_and_counts() {
        let fan = fan_p1_power(2);
        // Fibers of the same ruling do not meet; different rulings meet once.
        assert_eq!(fan.intersection_number(&[0, 1]), rat(0));
        assert_eq!(fan.intersection_number(&[0, 2]), rat(1));
        assert_eq!(fan.point_count_at(&BigInt::from(3)), BigInt::from(16));
    }

    #[test]
    fn blow_up_intersection_numbers() {
        let f1 = fan_bl_pt_p2();
        // Ray 3 is the exceptional ray: E^2 = -1.
        assert_eq!(f1.intersection_number(&[3, 3]), rat(-1));
        assert_eq!(f1.intersection_number(&[0, 3]), rat(1));
        assert_eq!(f1.point_count_at(&BigInt::from(2)), BigInt::from(9));

        let y = fan_bl_pt_p3();
        // Ray 4 is exceptional: E^3 = +1.
        assert_eq!(y.intersection_number(&[4, 4, 4]), rat(1));

        let y = fan_bl_line_p3();
        // Ray 4 is exceptional over a line: E^3 = -2; the cycling-prone
        // rewrite D4^2 * D1 must terminate and give E^2(H - E) = 1.
        assert_eq!(y.intersection_number(&[4, 4, 4]), rat(-2));
        assert_eq!(y.intersection_number(&[1, 4, 4]), rat(1));
        // D3 is a hyperplane missing the blown-up line, so H^2 E = 0.
        assert_eq!(y.intersection_number(&[3, 3, 4]), rat(0));
    }

    #[test]
    fn derived_presentations_match_hand_data() {
        // bl-line-p3: map H = D3 (the strict transform of a generic plane),
        // E = D4, and compare all degree-3 monomials and the tangent data.
        let fan = fan_bl_line_p3();
        let toric = fan.chow_presentation().unwrap();
        let hand = chow::bl_line_p3();
        let h_t = toric.named_class("D3").unwrap();
        let e_t = toric.named_class("D4").unwrap();
        let h_h = hand.named_class("H").unwrap();
        let e_h = hand.named_class("E").unwrap();
        for a in 0..=3usize {
            let b = 3 - a;
            let mut t = toric.unit_class();
            let mut hh = hand.unit_class();
            for _ in 0..a {
                t = toric.mul_classes(&t, &h_t);
                hh = hand.mul_classes(&hh, &h_h);
            }
            for _ in 0..b {
                t = toric.mul_classes(&t, &e_t);
                hh = hand.mul_classes(&hh, &e_h);
            }
            assert_eq!(toric.deg(&t), hand.deg(&hh), "H^{a} E^{b}");
        }
        // Tangent data through the correspondence: compare the canonical
        // class and total Chern class written in (H, E).
        // K = -4H + E on the hand side.
        let k_t = toric.add_classes(
            &toric.scale_class(&h_t, &rat(-4)),
            &toric.scale_class(&e_t, &rat(1)),
        );
        assert_eq!(k_t, toric.canonical);
        // c(T) = 1 + (4H - E) + (7H^2 - 4HE) + 6 pt.
        let h2 = toric.mul_classes(&h_t, &h_t);
        let he = toric.mul_classes(&h_t, &e_t);
        let mut c = toric.unit_class();
        c = toric.add_classes(&c, &toric.scale_class(&h_t, &rat(4)));
        c = toric.add_classes(&c, &toric.scale_class(&e_t, &rat(-1)));
        c = toric.add_classes(&c, &toric.scale_class(&h2, &rat(7)));
        c = toric.add_classes(&c, &toric.scale_class(&he, &rat(-4)));
        let mut pt = toric.zero_class();
        pt[toric.point] = rat(6);
        c = toric.add_classes(&c, &pt);
        assert_eq!(c, toric.chern_total);
    }

    #[test]
    fn derived_presentation_bl_pt_p3_matches_hand_data() {
        let fan = fan_bl_pt_p3();
        let toric = fan.chow_presentation().unwrap();
        let hand = chow::bl_pt_p3();
        // H = D3 (plane missing the blown-up point), E = D4.
        let h_t = toric.named_class("D3").unwrap();
        let e_t = toric.named_class("D4").unwrap();
        let h_h = hand.named_class("H").unwrap();
        let e_h = hand.named_class("E").unwrap();
        for a in 0..=3usize {
            let b = 3 - a;
            let mut t = toric.unit_class();
            let mut hh = hand.unit_class();
            for _ in 0..a {
                t = toric.mul_classes(&t, &h_t);
                hh = hand.mul_classes(&hh, &h_h);
            }
            for _ in 0..b {
                t = toric.mul_classes(&t, &e_t);
                hh = hand.mul_classes(&hh, &e_h);
            }
            assert_eq!(toric.deg(&t), hand.deg(&hh), "H^{a} E^{b}");
        }
        let k_t = toric.add_classes(
            &toric.scale_class(&h_t, &rat(-4)),
            &toric.scale_class(&e_t, &rat(2)),
        );
        assert_eq!(k_t, toric.canonical);
    }

    #[test]
    fn derived_presentation_ranks() {
        let toric = fan_bl_line_p3().chow_presentation().unwrap();
        let ranks: Vec<usize> = (0..=3)
            .map(|d| toric.basis.iter().filter(|b| b.degree == d).count())
            .collect();
        assert_eq!(ranks, vec![1, 2, 2, 1]);
        let toric = fan_projective_space(4).chow_presentation().unwrap();
        let ranks: Vec<usize> = (0..=4)
            .map(|d| toric.basis.iter().filter(|b| b.degree == d).count())
            .collect();
        assert_eq!(ranks, vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn conifold_twins_agree_in_counting_invariants() {
        let pair = conifold_pair();
        let a = &pair.twin_a;
        let b = &pair.twin_b;
        assert_eq!(a.face_counts(), b.face_counts());
        assert_eq!(a.point_count_coeffs(), b.point_count_coeffs());
        // (q-1)^3 + 6(q-1)^2 + 12(q-1) + 8 = q^3 + 3q^2 + 3q + 1.
        assert_eq!(
            a.point_count_coeffs(),
            vec![
                BigInt::from(1),
                BigInt::from(3),
                BigInt::from(3),
                BigInt::from(1)
            ]
        );
        assert_eq!(a.point_count_at(&BigInt::from(2)), BigInt::from(27));
        // c1 c2 = 24 for smooth projective 3-folds with c1 = -K ... sanity
        // via the derived presentations.
        for fan in [a, b] {
            let p = fan.chow_presentation().unwrap();
            let c1 = p.component(&p.chern_total, 1);
            let c2 = p.component(&p.chern_total, 2);
            assert_eq!(p.deg(&p.mul_classes(&c1, &c2)), rat(24), "{}", fan.name);
        }
    }

    #[test]
    fn degenerate_flop_pairs_are_rejected() {
        let rays = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![-1, -1, -1],
        ];
        let cones: Vec<Vec<usize>> = squarefree_subsets(4, 3);
        let err = FlopPair::new("same", 3, rays.clone(), cones.clone(), cones.clone());
        assert!(matches!(err, Err(ToricError::InvalidPair(_, _))));
        // Broken twin (missing cone) is rejected by fan validation.
        let mut broken = cones.clone();
        broken.pop();
        assert!(FlopPair::new("broken", 3, rays, cones, broken).is_err());
    }

    #[test]
    fn point_counts_match_euler_characteristics() {
        for fan in fan_gallery() {
            let pres = fan.chow_presentation().unwrap();
            // #X(F_q) at q -> 1 degenerates to the Euler characteristic.
            assert_eq!(
                fan.point_count_at(&BigInt::one()),
                BigInt::from(
                    pres.euler_characteristic()
                        .to_integer()
                ),
                "{}",
                fan.name
            );
        }
    }
}
