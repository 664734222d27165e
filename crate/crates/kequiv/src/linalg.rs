//! Small exact linear algebra over the rationals: incremental row reduction
//! with bookkeeping, used to select independent generators and to express
//! further vectors in the chosen basis.

use num_rational::BigRational;
use num_traits::Zero;

/// Incremental Gaussian elimination. Rows are fed one at a time; each row is
/// either recognized as dependent — returning its coordinates in the
/// previously *accepted* rows — or accepted as a new basis row.
pub struct RowReducer {
    width: usize,
    /// Reduced rows, each with its pivot column.
    reduced: Vec<(usize, Vec<BigRational>)>,
    /// `composition[i]` expresses `reduced[i]` in the accepted original rows.
    composition: Vec<Vec<BigRational>>,
    accepted: usize,
}

/// Outcome of feeding one row to the reducer.
pub enum RowFate {
    /// The row was independent; it is now accepted basis row number `index`.
    Independent { index: usize },
    /// The row is a combination of the accepted rows with these coordinates.
    Dependent { coords: Vec<BigRational> },
}

impl RowReducer {
    pub fn new(width: usize) -> Self {
        RowReducer {
            width,
            reduced: Vec::new(),
            composition: Vec::new(),
            accepted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.accepted
    }

    pub fn feed(&mut self, row: &[BigRational]) -> RowFate {
        assert_eq!(row.len(), self.width, "row width mismatch");
        let mut r = row.to_vec();
        // Coordinates of the running remainder in the accepted rows.
        let mut coords = vec![BigRational::zero(); self.accepted];
        for (i, (pivot, base)) in self.reduced.iter().enumerate() {
            if r[*pivot].is_zero() {
                continue;
            }
            let factor = r[*pivot].clone();
            for (x, b) in r.iter_mut().zip(base) {
                *x -= &factor * b;
            }
            for (c, comp) in coords.iter_mut().zip(&self.composition[i]) {
                *c += &factor * comp;
            }
        }
        let pivot = match r.iter().position(|x| !x.is_zero()) {
            None => return RowFate::Dependent { coords },
            Some(p) => p,
        };
        // Normalize the new reduced row to a unit pivot.
        let lead = r[pivot].clone();
        for x in r.iter_mut() {
            *x /= &lead;
        }
        // new_reduced = (original - sum coords_j * accepted_j) / lead
        let mut comp = vec![BigRational::zero(); self.accepted + 1];
        for (j, c) in coords.iter().enumerate() {
            comp[j] = -c / &lead;
        }
        comp[self.accepted] = lead.recip();
        // Pad earlier compositions to the new accepted count.
        for earlier in &mut self.composition {
            earlier.push(BigRational::zero());
        }
        self.reduced.push((pivot, r));
        self.composition.push(comp);
        self.accepted += 1;
        RowFate::Independent {
            index: self.accepted - 1,
        }
    }
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut red = RowReducer::new(rows[0].len());
    for row in rows {
        red.feed(row);
    }
    red.rank()
}

/// Solves `A x = b` exactly. Returns one solution (free variables set to
/// zero) or `None` when the system is inconsistent.
pub fn solve(rows: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(rows.len(), rhs.len(), "system shape mismatch");
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let width = rows[0].len();
    // Gauss-Jordan on the augmented matrix.
    let mut aug: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            assert_eq!(r.len(), width, "row width mismatch");
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut row_at = 0;
    for col in 0..width {
        let Some(p) = (row_at..aug.len()).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row_at, p);
        let lead = aug[row_at][col].clone();
        for x in aug[row_at].iter_mut() {
            *x /= &lead;
        }
        for r in 0..aug.len() {
            if r != row_at && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                let base = aug[row_at].clone();
                for (x, b) in aug[r].iter_mut().zip(&base) {
                    *x -= &f * b;
                }
            }
        }
        pivots.push((row_at, col));
        row_at += 1;
        if row_at == aug.len() {
            break;
        }
    }
    // Inconsistency: a zero row with nonzero right-hand side.
    for r in row_at..aug.len() {
        if aug[r][..width].iter().all(|x| x.is_zero()) && !aug[r][width].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); width];
    for (r, c) in pivots {
        x[c] = aug[r][width].clone();
    }
    Some(x)
}
