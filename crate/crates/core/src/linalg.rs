//! Exact linear algebra over the rationals.
//!
//! Everything here works on dense `Vec<Q>` rows. The matrices that show up in
//! arrangement computations are small (tens of rows), so clarity wins over
//! cache behaviour.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Scale a rational vector to a primitive integer vector whose first
/// nonzero entry is positive. The zero vector maps to zeros.
pub fn primitive_integer_vector(v: &[Q]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in ints.iter_mut() {
        *x /= &g;
        if negative {
            *x = -&*x;
        }
    }
    ints
}

/// A fully reduced row echelon basis of a row space, grown one vector at a
/// time.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    width: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(width: usize) -> Self {
        RowEchelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<'a>(width: usize, rows: impl IntoIterator<Item = &'a [Q]>) -> Self {
        let mut e = RowEchelon::new(width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &f * r;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Adds `v` to the row space. Returns `false` if it was already there.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// Basis of `{x : row · x = 0 for every row}`.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let free: Vec<usize> = (0..self.width).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Q::zero(); self.width];
                x[f] = Q::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = -row[f].clone();
                }
                x
            })
            .collect()
    }
}

/// Rank of a matrix given by rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    RowEchelon::from_rows(first.len(), rows.iter().map(Vec::as_slice)).rank()
}

/// Solves `matrix · x = rhs` for some `x`, where `matrix` is given by rows.
/// Returns `None` if the system is inconsistent.
pub fn solve(matrix: &[Vec<Q>], cols: usize, rhs: &[Q]) -> Option<Vec<Q>> {
    assert_eq!(matrix.len(), rhs.len(), "row count mismatch");
    let mut aug = RowEchelon::new(cols + 1);
    for (row, b) in matrix.iter().zip(rhs) {
        let mut r = row.clone();
        r.push(b.clone());
        aug.insert(&r);
    }
    if aug.pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (row, &p) in aug.rows.iter().zip(&aug.pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

/// Coordinates of `v` in the span of `basis` (columns), if it lies there.
pub fn coordinates(basis: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let n = v.len();
    let matrix: Vec<Vec<Q>> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    solve(&matrix, basis.len(), v)
}

/// Whether `v` is a linear combination of the columns of `matrix`.
pub fn in_column_space(matrix: &[Vec<Q>], cols: usize, v: &[Q]) -> bool {
    solve(matrix, cols, v).is_some()
}
