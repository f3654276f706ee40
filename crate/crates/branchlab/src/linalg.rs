//! Exact rational linear algebra: affine maps, rank, and an incremental
//! row-echelon span that remembers how each basis vector was built.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub type Matrix = Vec<Vec<Rational>>;

/// `x ↦ matrix·x + offset`, with `matrix` of shape `target × source`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap {
    pub source_dim: usize,
    #[serde(with = "rational::serde_mat")]
    pub matrix: Matrix,
    #[serde(with = "rational::serde_vec")]
    pub offset: Vec<Rational>,
}

impl AffineMap {
    pub fn new(matrix: Matrix, offset: Vec<Rational>, source_dim: usize) -> Result<Self> {
        if matrix.len() != offset.len() {
            return Err(Error::LengthMismatch { expected: offset.len(), got: matrix.len() });
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != source_dim) {
            return Err(Error::LengthMismatch { expected: source_dim, got: row.len() });
        }
        Ok(AffineMap { source_dim, matrix, offset })
    }

    /// Builds the map from a function known to be affine by sampling it at
    /// the origin and the unit vectors.
    pub fn from_fn(source_dim: usize, f: impl Fn(&[Rational]) -> Vec<Rational>) -> Self {
        let origin = vec![Rational::zero(); source_dim];
        let offset = f(&origin);
        let mut matrix = vec![vec![Rational::zero(); source_dim]; offset.len()];
        for j in 0..source_dim {
            let mut e = origin.clone();
            e[j] = rational::one();
            let image = f(&e);
            assert_eq!(image.len(), offset.len(), "affine sample changed dimension");
            for (i, row) in matrix.iter_mut().enumerate() {
                row[j] = &image[i] - &offset[i];
            }
        }
        AffineMap { source_dim, matrix, offset }
    }

    pub fn identity(n: usize) -> Self {
        AffineMap::from_fn(n, |x| x.to_vec())
    }

    pub fn target_dim(&self) -> usize {
        self.offset.len()
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.source_dim {
            return Err(Error::LengthMismatch { expected: self.source_dim, got: x.len() });
        }
        Ok(self
            .matrix
            .iter()
            .zip(&self.offset)
            .map(|(row, b)| {
                row.iter().zip(x).filter(|(a, _)| !a.is_zero()).fold(b.clone(), |acc, (a, xi)| acc + a * xi)
            })
            .collect())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap) -> Result<AffineMap> {
        if inner.target_dim() != self.source_dim {
            return Err(Error::LengthMismatch { expected: self.source_dim, got: inner.target_dim() });
        }
        Ok(AffineMap::from_fn(inner.source_dim, |x| {
            self.apply(&inner.apply(x).expect("dimension checked")).expect("dimension checked")
        }))
    }

    /// Precomposes with a linear map given by its matrix.
    pub fn then_linear(&self, m: &Matrix) -> Result<AffineMap> {
        let lin = AffineMap::new(m.clone(), vec![Rational::zero(); m.len()], self.target_dim())?;
        lin.compose(self)
    }
}

impl AffineMap {
    /// A solution `x` of `apply(x) = y`, if one exists; free variables are set to zero.
    pub fn preimage(&self, y: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if y.len() != self.target_dim() {
            return Err(Error::LengthMismatch { expected: self.target_dim(), got: y.len() });
        }
        let n = self.source_dim;
        let mut rows: Vec<Vec<Rational>> = self
            .matrix
            .iter()
            .zip(y.iter().zip(&self.offset))
            .map(|(row, (yi, bi))| {
                let mut r = row.clone();
                r.push(yi - bi);
                r
            })
            .collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..n {
            let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(top, p);
            let inv = rows[top][col].recip();
            for x in rows[top].iter_mut() {
                *x *= &inv;
            }
            for i in 0..rows.len() {
                if i != top && !rows[i][col].is_zero() {
                    let c = rows[i][col].clone();
                    let pivot_row = rows[top].clone();
                    for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= &c * p;
                    }
                }
            }
            pivots.push(col);
            top += 1;
        }
        if rows[top..].iter().any(|r| !r[n].is_zero()) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); n];
        for (i, &col) in pivots.iter().enumerate() {
            x[col] = rows[i][n].clone();
        }
        Ok(Some(x))
    }
}

/// Rank of a matrix given by rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut span = Echelon::default();
    rows.iter().filter(|r| span.insert(r)).count()
}

/// Incremental row echelon form over the rationals.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
        v
    }

    /// Inserts `v`; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let v = self.reduce(v);
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = v[p].recip();
                let v: Vec<Rational> = v.into_iter().map(|x| x * &inv).collect();
                for (_, row) in self.rows.iter_mut() {
                    if !row[p].is_zero() {
                        let c = row[p].clone();
                        for (x, r) in row.iter_mut().zip(&v) {
                            if !r.is_zero() {
                                *x -= &c * r;
                            }
                        }
                    }
                }
                self.rows.push((p, v));
                true
            }
        }
    }
}

/// Span of a list of column vectors that can express members as explicit
/// combinations of the original vectors.
#[derive(Clone, Debug)]
pub struct TrackedSpan {
    dim: usize,
    count: usize,
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
}

impl TrackedSpan {
    pub fn new(dim: usize) -> Self {
        TrackedSpan { dim, count: 0, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut v = v.to_vec();
        let mut combo = vec![Rational::zero(); self.count];
        for (p, row, how) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
                for (x, h) in combo.iter_mut().zip(how) {
                    if !h.is_zero() {
                        *x += &c * h;
                    }
                }
            }
        }
        (v, combo)
    }

    /// Adds the next original vector; returns `true` if it enlarged the span.
    pub fn push(&mut self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::LengthMismatch { expected: self.dim, got: v.len() });
        }
        let (rest, combo) = self.reduce(v);
        let idx = self.count;
        self.count += 1;
        for (_, _, how) in self.rows.iter_mut() {
            how.push(Rational::zero());
        }
        let Some(p) = rest.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        // rest = v − Σ combo_i·orig_i
        let mut how: Vec<Rational> = combo.into_iter().map(|c| -c).collect();
        how.push(rational::one());
        let inv = rest[p].recip();
        let row: Vec<Rational> = rest.into_iter().map(|x| x * &inv).collect();
        let how: Vec<Rational> = how.into_iter().map(|x| x * &inv).collect();
        debug_assert_eq!(how.len(), idx + 1);
        self.rows.push((p, row, how));
        Ok(true)
    }

    /// Whether `v` lies in the span; cheaper than [`Self::express`].
    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::LengthMismatch { expected: self.dim, got: v.len() });
        }
        let mut v = v.to_vec();
        for (p, row, _) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
        Ok(v.iter().all(Zero::is_zero))
    }

    /// Coefficients `c` with `Σ c_i·orig_i = v`, if `v` lies in the span.
    pub fn express(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if v.len() != self.dim {
            return Err(Error::LengthMismatch { expected: self.dim, got: v.len() });
        }
        let (rest, combo) = self.reduce(v);
        Ok(rest.iter().all(Zero::is_zero).then_some(combo))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[1, 2, 3], &[0, 1, 1], &[1, 3, 4]])), 2);
        assert_eq!(rank(&m(&[&[0, 0]])), 0);
    }

    #[test]
    fn tracked_span_expresses_members() {
        let cols = m(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2], &[0, 0, 1]]);
        let mut span = TrackedSpan::new(3);
        let grew: Vec<bool> = cols.iter().map(|c| span.push(c).unwrap()).collect();
        assert_eq!(grew, vec![true, true, false, true]);
        let target = vec![int(3), frac(1, 2), int(7)];
        let c = span.express(&target).unwrap().unwrap();
        let mut sum = vec![int(0); 3];
        for (ci, col) in c.iter().zip(&cols) {
            for (s, x) in sum.iter_mut().zip(col) {
                *s += ci * x;
            }
        }
        assert_eq!(sum, target);
    }

    #[test]
    fn affine_from_fn_round_trips() {
        let f = |x: &[Rational]| vec![&x[0] * int(2) + frac(1, 2), &x[1] - &x[0]];
        let a = AffineMap::from_fn(2, f);
        let x = vec![int(3), int(-1)];
        assert_eq!(a.apply(&x).unwrap(), f(&x));
        let id = AffineMap::identity(2);
        assert_eq!(a.compose(&id).unwrap(), a);
        let y = a.apply(&x).unwrap();
        assert_eq!(a.preimage(&y).unwrap().unwrap(), x);
        let proj = AffineMap::from_fn(1, |x| vec![x[0].clone(), x[0].clone()]);
        assert_eq!(proj.preimage(&[int(1), int(2)]).unwrap(), None);
    }
}
