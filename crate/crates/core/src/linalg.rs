//! Small dense linear algebra over the rationals.
//!
//! Everything here is exact. Matrices are row-major `Vec<Vec<Q>>` and are
//! only ever a handful of rows wide, so no attempt is made at pivoting for
//! size; the first nonzero entry in a column is taken as pivot.

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = Rational64;

/// A vector with exact rational coordinates.
pub type Vector = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn half(n: i64) -> Q {
    Q::new(n, 2)
}

pub fn int_vector(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| q(x)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: Q, a: &[Q]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Q]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// `sum_i coeffs[i] * vectors[i]`; `dim` is used when `vectors` is empty.
pub fn combination(coeffs: &[Q], vectors: &[Vector], dim: usize) -> Vector {
    let mut out = vec![Q::zero(); dim];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// column of each nonzero row.
pub fn rref(m: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of `{ x : A x = 0 }` for an `equations.len() x ncols` matrix.
///
/// The basis is the standard one read off the reduced row echelon form: one
/// vector per free column, with a 1 in that column.
pub fn kernel(equations: &[Vec<Q>], ncols: usize) -> Vec<Vector> {
    let mut m: Vec<Vec<Q>> = equations.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = -row[f];
            }
            v
        })
        .collect()
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vector {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Gram matrix of a list of vectors under the standard dot product.
pub fn gram(vectors: &[Vector]) -> Vec<Vec<Q>> {
    vectors
        .iter()
        .map(|a| vectors.iter().map(|b| dot(a, b)).collect())
        .collect()
}

/// Orthogonal projection onto the span of a fixed linearly independent set.
#[derive(Debug, Clone)]
pub struct Projector {
    basis: Vec<Vector>,
    gram_inv: Vec<Vec<Q>>,
    dim: usize,
}

impl Projector {
    /// `basis` must be linearly independent; vectors live in `Q^dim`.
    pub fn new(basis: Vec<Vector>, dim: usize) -> Self {
        let gram_inv = if basis.is_empty() {
            Vec::new()
        } else {
            inverse(&gram(&basis)).expect("projector basis must be independent")
        };
        Projector { basis, gram_inv, dim }
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn project(&self, v: &[Q]) -> Vector {
        if self.basis.is_empty() {
            return vec![Q::zero(); self.dim];
        }
        let rhs: Vec<Q> = self.basis.iter().map(|b| dot(b, v)).collect();
        let coeffs = mat_vec(&self.gram_inv, &rhs);
        combination(&coeffs, &self.basis, self.dim)
    }
}

/// True when every entry is an integer.
pub fn is_integral(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Sign of the first nonzero coordinate: `1`, `-1`, or `0` for the zero vector.
pub fn lex_sign(v: &[Q]) -> i32 {
    v.iter()
        .find(|x| !x.is_zero())
        .map_or(0, |x| if x.is_positive() { 1 } else { -1 })
}
