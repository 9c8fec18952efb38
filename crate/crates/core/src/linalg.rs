//! Exact linear algebra over the rationals and the integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// Sparse rational vector keyed by coordinate index.
pub type SparseVec = BTreeMap<usize, Q>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
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
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of the right nullspace `{x : m x = 0}` of a dense matrix with `cols` columns.
pub fn nullspace(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

/// Result of solving `sum_j x_j a_j = b` for columns `a_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    /// Rank of the coefficient matrix.
    pub rank: usize,
    /// One particular solution, `None` if the system is inconsistent.
    pub x: Option<Vec<Q>>,
}

/// Solves a sparse column system exactly.
pub fn solve_columns(cols: &[SparseVec], b: &SparseVec) -> Solution {
    let mut index: BTreeMap<usize, usize> = BTreeMap::new();
    for v in cols.iter().chain(std::iter::once(b)) {
        for k in v.keys() {
            let n = index.len();
            index.entry(*k).or_insert(n);
        }
    }
    let n = cols.len();
    let mut m = vec![vec![Q::zero(); n + 1]; index.len()];
    for (j, v) in cols.iter().enumerate() {
        for (k, x) in v {
            m[index[k]][j] = x.clone();
        }
    }
    for (k, x) in b {
        m[index[k]][n] = x.clone();
    }
    let pivots = rref(&mut m);
    if pivots.last() == Some(&n) {
        let rank = pivots.len() - 1;
        return Solution { rank, x: None };
    }
    let mut x = vec![Q::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = m[i][n].clone();
    }
    Solution {
        rank: pivots.len(),
        x: Some(x),
    }
}

/// Incrementally maintained row space of sparse vectors in reduced echelon form.
#[derive(Debug, Clone, Default)]
pub struct RowSpace {
    rows: Vec<(usize, SparseVec)>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            let Some(f) = v.get(p).cloned() else { continue };
            axpy(&mut v, &-f, row);
        }
        v
    }

    /// The reduced basis sorted by pivot; canonical for the subspace.
    pub fn basis(&self) -> Vec<SparseVec> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        rows.into_iter().map(|(_, r)| r).collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some((&p, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for x in v.values_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if let Some(f) = row.get(&p).cloned() {
                axpy(row, &-f, &v);
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// `y += a * x`, dropping entries that cancel.
pub fn axpy(y: &mut SparseVec, a: &Q, x: &SparseVec) {
    for (k, v) in x {
        let e = y.entry(*k).or_insert_with(Q::zero);
        *e += a * v;
        if e.is_zero() {
            y.remove(k);
        }
    }
}

pub fn sparse_rank(vs: &[SparseVec]) -> usize {
    let mut rs = RowSpace::new();
    for v in vs {
        rs.insert(v);
    }
    rs.rank()
}

/// Z-basis of `{x in Z^n : m x = 0}` for an integer matrix `m` with `n` columns.
///
/// Column-style Hermite reduction: unimodular column operations bring `m` to
/// echelon form; the transformation columns beyond the rank span the kernel.
pub fn integer_kernel(m: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    // u is stored column-major: u[j] is column j.
    let mut col = 0;
    for row in 0..a.len() {
        if col == n {
            break;
        }
        loop {
            let nz: Vec<usize> = (col..n).filter(|&j| !a[row][j].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let jmin = *nz.iter().min_by_key(|&&j| a[row][j].abs()).unwrap();
            swap_cols(&mut a, &mut u, col, jmin);
            if nz.len() == 1 {
                col += 1;
                break;
            }
            for j in col + 1..n {
                if a[row][j].is_zero() {
                    continue;
                }
                let f = a[row][j].div_floor(&a[row][col]);
                col_sub(&mut a, &mut u, j, col, &f);
            }
        }
    }
    u[col..].to_vec()
}

fn swap_cols(a: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i == j {
        return;
    }
    for r in a.iter_mut() {
        r.swap(i, j);
    }
    u.swap(i, j);
}

fn col_sub(a: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], j: usize, k: usize, f: &BigInt) {
    for r in a.iter_mut() {
        let t = &r[k] * f;
        r[j] -= t;
    }
    let uk = u[k].clone();
    for (x, y) in u[j].iter_mut().zip(uk) {
        *x -= y * f;
    }
}

/// Scales a rational vector to a primitive integer vector with the same direction.
pub fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.len() < n || pivots.iter().take(n).any(|&p| p >= n) {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Dense vector to sparse.
pub fn to_sparse(v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Determinant of a square matrix by elimination.
pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        let piv = a[c][c].clone();
        d *= &piv;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &piv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn inverse_of_small_matrix() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert!(inverse(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
        assert_eq!(inverse(&[]), Some(vec![]));
    }

    #[test]
    fn kernel_of_sum_form() {
        let k = integer_kernel(&[bi(&[1, 1, 1])], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = v.iter().sum();
            assert!(s.is_zero());
        }
        // unimodular: determinant of the kernel basis restricted to two coordinates is +-1
        let m = vec![
            vec![
                Q::from_integer(k[0][0].clone()),
                Q::from_integer(k[0][1].clone()),
            ],
            vec![
                Q::from_integer(k[1][0].clone()),
                Q::from_integer(k[1][1].clone()),
            ],
        ];
        assert_eq!(det(&m).abs(), q(1));
    }

    #[test]
    fn kernel_with_gaps() {
        // x1 + 2 x2 = 0 has kernel generated by (2,-1) (index 1 in its saturation).
        let k = integer_kernel(&[bi(&[1, 2])], 2);
        assert_eq!(k.len(), 1);
        assert!(k[0] == bi(&[2, -1]) || k[0] == bi(&[-2, 1]));
    }

    #[test]
    fn solve_simple() {
        let c0: SparseVec = [(0, q(1)), (1, q(1))].into_iter().collect();
        let c1: SparseVec = [(1, q(1))].into_iter().collect();
        let b: SparseVec = [(0, q(2)), (1, q(5))].into_iter().collect();
        let s = solve_columns(&[c0, c1], &b);
        assert_eq!(s.rank, 2);
        assert_eq!(s.x.unwrap(), vec![q(2), q(3)]);
    }

    #[test]
    fn row_space_detects_dependence() {
        let mut rs = RowSpace::new();
        let a: SparseVec = [(0, q(1)), (2, q(3))].into_iter().collect();
        let b: SparseVec = [(1, q(2))].into_iter().collect();
        let mut c = a.clone();
        axpy(&mut c, &q(4), &b);
        assert!(rs.insert(&a));
        assert!(rs.insert(&b));
        assert!(!rs.insert(&c));
        assert_eq!(rs.rank(), 2);
    }

    #[test]
    fn nullspace_dims() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s = &v[0] + q(2) * &v[1] + q(3) * &v[2];
            assert!(s.is_zero());
        }
    }
}
