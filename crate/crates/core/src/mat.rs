//! Dense integer matrices over arbitrary-precision integers, with the exact
//! normal forms the lattice layer is built on: Smith normal form with
//! unimodular transforms, row Hermite normal form, fraction-free determinants
//! and symmetric congruence diagonalization over the rationals.
//!
//! Everything here is exact; there is no floating point anywhere in this crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Dense `rows x cols` matrix with `BigInt` entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IMat {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl IMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IMat { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut m = IMat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IMat::from_fn(r, c, |i, j| int(rows[i][j]))
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = IMat::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IMat {
        IMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Int) -> IMat {
        IMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * k)
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Content: gcd of all entries (zero for the zero matrix).
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for e in &self.data {
            g = g.gcd(e);
        }
        g
    }

    /// Fraction-free Bareiss determinant. Exact for any square matrix.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.data.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = &t / &prev;
                }
                m[(i, k)] = Int::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    /// Classical adjugate via cofactors; fine at the ranks used here.
    pub fn adjugate(&self) -> IMat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return IMat::zeros(0, 0);
        }
        let minor = |r: usize, c: usize| -> Int {
            let sub = IMat::from_fn(n - 1, n - 1, |i, j| {
                let ii = if i < r { i } else { i + 1 };
                let jj = if j < c { j } else { j + 1 };
                self[(ii, jj)].clone()
            });
            sub.det()
        };
        IMat::from_fn(n, n, |i, j| {
            let m = minor(j, i);
            if (i + j) % 2 == 0 {
                m
            } else {
                -m
            }
        })
    }

    /// Exact inverse of a unimodular matrix (determinant `+-1`).
    pub fn unimodular_inverse(&self) -> IMat {
        let d = self.det();
        assert!(d.abs().is_one(), "matrix is not unimodular");
        let adj = self.adjugate();
        if d.is_one() {
            adj
        } else {
            adj.scale(&int(-1))
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        smith_diagonal(self).len()
    }
}

impl Mul<&IMat> for &IMat {
    type Output = IMat;
    fn mul(self, rhs: &IMat) -> IMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = IMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }
}

impl Add<&IMat> for &IMat {
    type Output = IMat;
    fn add(self, rhs: &IMat) -> IMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub<&IMat> for &IMat {
    type Output = IMat;
    fn sub(self, rhs: &IMat) -> IMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl Neg for &IMat {
    type Output = IMat;
    fn neg(self) -> IMat {
        IMat::from_fn(self.rows, self.cols, |i, j| -self[(i, j)].clone())
    }
}

/// Smith normal form `left * a * right = diag(s_1, ..., s_r, 0, ...)` with
/// `left`, `right` unimodular and `s_1 | s_2 | ... | s_r`, all positive.
pub struct Smith {
    pub s: IMat,
    pub left: IMat,
    pub left_inv: IMat,
    pub right: IMat,
    pub right_inv: IMat,
}

impl Smith {
    /// Nonzero invariant factors, in chain order.
    pub fn invariant_factors(&self) -> Vec<Int> {
        let n = self.s.nrows().min(self.s.ncols());
        (0..n)
            .map(|i| self.s[(i, i)].clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith(a: &IMat) -> Smith {
    let (r, c) = (a.nrows(), a.ncols());
    let mut s = a.clone();
    let mut left = IMat::identity(r);
    let mut left_inv = IMat::identity(r);
    let mut right = IMat::identity(c);
    let mut right_inv = IMat::identity(c);

    // row op on s and left: row i += q * row j; to keep left_inv correct,
    // apply the inverse column op there: col j -= q * col i.
    let row_op = |s: &mut IMat, l: &mut IMat, li: &mut IMat, i: usize, j: usize, q: &Int| {
        for k in 0..s.ncols() {
            let t = q * &s[(j, k)];
            s[(i, k)] += t;
        }
        for k in 0..l.ncols() {
            let t = q * &l[(j, k)];
            l[(i, k)] += t;
        }
        for k in 0..li.nrows() {
            let t = q * &li[(k, i)];
            li[(k, j)] -= t;
        }
    };
    let col_op = |s: &mut IMat, rt: &mut IMat, ri: &mut IMat, i: usize, j: usize, q: &Int| {
        for k in 0..s.nrows() {
            let t = q * &s[(k, j)];
            s[(k, i)] += t;
        }
        for k in 0..rt.nrows() {
            let t = q * &rt[(k, j)];
            rt[(k, i)] += t;
        }
        for k in 0..ri.ncols() {
            let t = q * &ri[(i, k)];
            ri[(j, k)] -= t;
        }
    };
    let row_swap = |s: &mut IMat, l: &mut IMat, li: &mut IMat, i: usize, j: usize| {
        let c = s.ncols();
        for k in 0..c {
            s.data.swap(i * c + k, j * c + k);
        }
        let c = l.ncols();
        for k in 0..c {
            l.data.swap(i * c + k, j * c + k);
        }
        let c = li.ncols();
        for k in 0..li.nrows() {
            li.data.swap(k * c + i, k * c + j);
        }
    };
    let col_swap = |s: &mut IMat, rt: &mut IMat, ri: &mut IMat, i: usize, j: usize| {
        let c = s.ncols();
        for k in 0..s.nrows() {
            s.data.swap(k * c + i, k * c + j);
        }
        let c = rt.ncols();
        for k in 0..rt.nrows() {
            rt.data.swap(k * c + i, k * c + j);
        }
        let c = ri.ncols();
        for k in 0..c {
            ri.data.swap(i * c + k, j * c + k);
        }
    };
    let row_negate = |s: &mut IMat, l: &mut IMat, li: &mut IMat, i: usize| {
        for k in 0..s.ncols() {
            s[(i, k)] = -s[(i, k)].clone();
        }
        for k in 0..l.ncols() {
            l[(i, k)] = -l[(i, k)].clone();
        }
        for k in 0..li.nrows() {
            li[(k, i)] = -li[(k, i)].clone();
        }
    };

    let mut t = 0usize;
    while t < r.min(c) {
        // pivot: smallest nonzero |entry| in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                if !s[(i, j)].is_zero()
                    && pivot.is_none_or(|(pi, pj)| s[(i, j)].abs() < s[(pi, pj)].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != t {
            row_swap(&mut s, &mut left, &mut left_inv, t, pi);
        }
        if pj != t {
            col_swap(&mut s, &mut right, &mut right_inv, t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&s[(i, t)], &s[(t, t)]);
                row_op(&mut s, &mut left, &mut left_inv, i, t, &-q);
                if !s[(i, t)].is_zero() {
                    // remainder strictly smaller: promote it to pivot
                    row_swap(&mut s, &mut left, &mut left_inv, t, i);
                    dirty = true;
                }
            }
            for j in t + 1..c {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&s[(t, j)], &s[(t, t)]);
                col_op(&mut s, &mut right, &mut right_inv, j, t, &-q);
                if !s[(t, j)].is_zero() {
                    col_swap(&mut s, &mut right, &mut right_inv, t, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        if s[(t, t)].is_negative() {
            row_negate(&mut s, &mut left, &mut left_inv, t);
        }
        t += 1;
    }

    // enforce the divisibility chain s_i | s_{i+1}
    let rank = (0..r.min(c)).take_while(|&i| !s[(i, i)].is_zero()).count();
    loop {
        let mut fixed = true;
        for i in 0..rank.saturating_sub(1) {
            let (a, b) = (s[(i, i)].clone(), s[(i + 1, i + 1)].clone());
            if (&b % &a).is_zero() {
                continue;
            }
            fixed = false;
            // col i += col i+1 puts b at (i+1, i); gcd-reduce the 2x2 block
            col_op(&mut s, &mut right, &mut right_inv, i, i + 1, &Int::one());
            let g = a.gcd(&b);
            // row reduce: (i+1, i) = b, pivot a at (i, i)
            let (x, y) = bezout(&a, &b);
            // new row i := x*row_i + y*row_(i+1); new row i+1 := -(b/g)*row_i + (a/g)*row_(i+1)
            let (bg, ag) = (&b / &g, &a / &g);
            let combine_rows = |s: &mut IMat, l: &mut IMat, li: &mut IMat| {
                for m in [s, l].iter_mut() {
                    for k in 0..m.ncols() {
                        let ri = m[(i, k)].clone();
                        let rj = m[(i + 1, k)].clone();
                        m[(i, k)] = &x * &ri + &y * &rj;
                        m[(i + 1, k)] = -&bg * &ri + &ag * &rj;
                    }
                }
                // inverse of [[x, y], [-b/g, a/g]] is [[a/g, -y], [b/g, x]] (det = 1)
                for k in 0..li.nrows() {
                    let ci = li[(k, i)].clone();
                    let cj = li[(k, i + 1)].clone();
                    li[(k, i)] = &ag * &ci + &bg * &cj;
                    li[(k, i + 1)] = -&y * &ci + &x * &cj;
                }
            };
            combine_rows(&mut s, &mut left, &mut left_inv);
            // clear the fill-in at (i, i+1) and (i+1, i) columnwise
            let piv = s[(i, i)].clone();
            debug_assert_eq!(piv, g);
            let q = nearest_quotient(&s[(i, i + 1)], &piv);
            col_op(&mut s, &mut right, &mut right_inv, i + 1, i, &-q);
            debug_assert!(s[(i, i + 1)].is_zero());
            if s[(i + 1, i + 1)].is_negative() {
                row_negate(&mut s, &mut left, &mut left_inv, i + 1);
            }
        }
        if fixed {
            break;
        }
    }

    debug_assert_eq!(&(&left * a) * &right, s);
    debug_assert_eq!(&left * &left_inv, IMat::identity(r));
    debug_assert_eq!(&right * &right_inv, IMat::identity(c));
    Smith { s, left, left_inv, right, right_inv }
}

/// Quotient rounding to nearest, so remainders satisfy `|r| <= |b|/2`.
fn nearest_quotient(a: &Int, b: &Int) -> Int {
    let (mut q, r) = a.div_rem(b);
    let two_r = r.abs() * int(2);
    if two_r > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Extended gcd: returns `(x, y)` with `x*a + y*b = gcd(a, b)`.
pub fn bezout(a: &Int, b: &Int) -> (Int, Int) {
    let e = a.extended_gcd(b);
    (e.x, e.y)
}

fn smith_diagonal(a: &IMat) -> Vec<Int> {
    smith(a).invariant_factors()
}

/// Row Hermite normal form, canonical: pivots positive, entries above a pivot
/// reduced into `[0, pivot)`, zero rows dropped. Two row sets span the same
/// `Z`-module iff their HNFs are equal.
pub fn hnf_rows(a: &IMat) -> IMat {
    let (r, c) = (a.nrows(), a.ncols());
    let mut m = a.clone();
    let mut row = 0usize;
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..c {
        // gcd all rows >= row at this column into `row`
        loop {
            let mut best: Option<usize> = None;
            for i in row..r {
                if !m[(i, col)].is_zero()
                    && best.is_none_or(|b| m[(i, col)].abs() < m[(b, col)].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            if b != row {
                for k in 0..c {
                    m.data.swap(row * c + k, b * c + k);
                }
            }
            let mut again = false;
            for i in row + 1..r {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&m[(i, col)], &m[(row, col)]);
                for k in 0..c {
                    let t = &q * &m[(row, k)];
                    m[(i, k)] -= t;
                }
                if !m[(i, col)].is_zero() {
                    again = true;
                }
            }
            if !again {
                break;
            }
        }
        if row < r && !m[(row, col)].is_zero() {
            if m[(row, col)].is_negative() {
                for k in 0..c {
                    m[(row, k)] = -m[(row, k)].clone();
                }
            }
            // reduce entries above the pivot into [0, pivot)
            for i in 0..row {
                let q = m[(i, col)].div_floor(&m[(row, col)]);
                if !q.is_zero() {
                    for k in 0..c {
                        let t = &q * &m[(row, k)];
                        m[(i, k)] -= t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == r {
                break;
            }
        }
    }
    IMat::from_fn(row, c, |i, j| m[(i, j)].clone())
}

/// Basis (as rows) of the saturation of the row span of `a` inside `Z^cols`:
/// the first `rank` rows of `right_inv` from the Smith decomposition.
pub fn row_saturation_basis(a: &IMat) -> IMat {
    let sm = smith(a);
    let rk = sm.rank();
    IMat::from_fn(rk, a.ncols(), |i, j| sm.right_inv[(i, j)].clone())
}

/// Basis (as rows) of the integer kernel `{ x : a * x = 0 }`; always saturated.
pub fn kernel_basis(a: &IMat) -> IMat {
    let sm = smith(a);
    let rk = sm.rank();
    let n = a.ncols();
    IMat::from_fn(n - rk, n, |i, j| sm.right[(j, rk + i)].clone())
}

/// Solve `y * rows = target` over the integers, if possible.
pub fn solve_in_row_span(rows: &IMat, target: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(rows.ncols(), target.len());
    let sm = smith(rows);
    let rk = sm.rank();
    let k = rows.nrows();
    // y * rows = target  <=>  z * s = target * right, with z = y * left_inv
    let tv = {
        let t = IMat::from_rows(vec![target.to_vec()]);
        &t * &sm.right
    };
    let mut z = vec![Int::zero(); k];
    for j in 0..rows.ncols() {
        if j < rk {
            let (q, r) = tv[(0, j)].div_rem(&sm.s[(j, j)]);
            if !r.is_zero() {
                return None;
            }
            z[j] = q;
        } else if !tv[(0, j)].is_zero() {
            return None;
        }
    }
    let zm = IMat::from_rows(vec![z]);
    let y = &zm * &sm.left;
    Some(y.row(0))
}

/// Signature of a symmetric integer matrix by exact congruence
/// diagonalization over `Q`: `(positive, negative, zero)` diagonal counts.
#[allow(clippy::needless_range_loop)] // row t is updated from row j in place
pub fn signature_of_symmetric(g: &IMat) -> (usize, usize, usize) {
    assert!(g.is_symmetric(), "signature of non-symmetric matrix");
    let n = g.nrows();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| Rat::from(g[(i, j)].clone())).collect())
        .collect();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    for t in 0..n {
        if m[t][t].is_zero() {
            if let Some(j) = (t + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(t, j);
                for row in m.iter_mut() {
                    row.swap(t, j);
                }
            } else if let Some(j) = (t + 1..n).find(|&j| !m[t][j].is_zero()) {
                // diagonal is zero on the block; fold row/col j in to expose 2m[t][j]
                for k in 0..n {
                    let v = m[j][k].clone();
                    m[t][k] += v;
                }
                for k in 0..n {
                    let v = m[k][j].clone();
                    m[k][t] += v;
                }
            }
        }
        let p = m[t][t].clone();
        if p.is_zero() {
            zero += 1;
            continue;
        }
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in t + 1..n {
            if m[i][t].is_zero() {
                continue;
            }
            let f = &m[i][t] / &p;
            for k in 0..n {
                let v = &f * &m[t][k];
                m[i][k] -= v;
            }
            for k in 0..n {
                let v = &f * &m[k][t];
                m[k][i] -= v;
            }
        }
    }
    (pos, neg, zero)
}

pub fn gcd_of(values: impl IntoIterator<Item = Int>) -> Int {
    let mut g = Int::zero();
    for v in values {
        g = g.gcd(&v);
    }
    g
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IMat {
        IMat::from_rows_i64(rows)
    }

    #[test]
    fn det_small() {
        assert_eq!(m(&[vec![0, 1], vec![1, 0]]).det(), int(-1));
        assert_eq!(m(&[vec![2, 0], vec![0, 3]]).det(), int(6));
        assert_eq!(
            m(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]).det(),
            int(-3)
        );
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).det(), int(0));
    }

    #[test]
    fn smith_transforms_consistent() {
        let a = m(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let sm = smith(&a);
        assert_eq!(&(&sm.left * &a) * &sm.right, sm.s);
        assert_eq!(&sm.left * &sm.left_inv, IMat::identity(3));
        assert_eq!(&sm.right * &sm.right_inv, IMat::identity(3));
        // known invariant factors of this classic example: 2, 6, 12
        assert_eq!(sm.invariant_factors(), vec![int(2), int(6), int(12)]);
    }

    #[test]
    fn smith_divisibility_chain() {
        let a = m(&[vec![2, 0], vec![0, 3]]);
        let sm = smith(&a);
        assert_eq!(sm.invariant_factors(), vec![int(1), int(6)]);
        let a = m(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]);
        let f = smith(&a).invariant_factors();
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        assert_eq!(
            f.iter().product::<Int>(),
            int(240),
            "product of invariant factors is |det|"
        );
    }

    #[test]
    fn hnf_canonical_for_equal_spans() {
        let a = m(&[vec![2, 0, 1], vec![0, 1, 3]]);
        let b = m(&[vec![2, 1, 4], vec![0, 1, 3], vec![2, 2, 7]]);
        assert_eq!(hnf_rows(&a), hnf_rows(&b));
        let c = m(&[vec![2, 0, 1], vec![0, 1, 4]]);
        assert_ne!(hnf_rows(&a), hnf_rows(&c));
    }

    #[test]
    fn saturation_of_multiples() {
        let a = m(&[vec![2, 0], vec![0, 4]]);
        let sat = row_saturation_basis(&a);
        assert_eq!(hnf_rows(&sat), IMat::identity(2));
        let a = m(&[vec![2, 4]]);
        let sat = row_saturation_basis(&a);
        assert_eq!(hnf_rows(&sat), hnf_rows(&m(&[vec![1, 2]])));
    }

    #[test]
    fn kernel_of_pairing_matrix() {
        let a = m(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let k = kernel_basis(&a);
        assert_eq!(hnf_rows(&k), hnf_rows(&m(&[vec![0, 0, 1]])));
        // kernel of a rank-deficient map
        let a = m(&[vec![1, 1, 0], vec![2, 2, 0]]);
        let k = kernel_basis(&a);
        assert_eq!(k.nrows(), 2);
        for i in 0..2 {
            assert!(a.mul_vec(&k.row(i)).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_in_span_examples() {
        let rows = m(&[vec![2, 0, 0], vec![0, 3, 0]]);
        let y = solve_in_row_span(&rows, &[int(4), int(-3), int(0)]).unwrap();
        assert_eq!(y, vec![int(2), int(-1)]);
        assert!(solve_in_row_span(&rows, &[int(1), int(0), int(0)]).is_none());
        assert!(solve_in_row_span(&rows, &[int(0), int(0), int(1)]).is_none());
    }

    #[test]
    fn signature_examples() {
        // hyperbolic plane: (1, 1)
        assert_eq!(
            signature_of_symmetric(&m(&[vec![0, 1], vec![1, 0]])),
            (1, 1, 0)
        );
        assert_eq!(signature_of_symmetric(&m(&[vec![-4]])), (0, 1, 0));
        // degenerate rank-2 form
        assert_eq!(
            signature_of_symmetric(&m(&[vec![2, 0], vec![0, 0]])),
            (1, 0, 1)
        );
    }

    #[test]
    fn bezout_identity() {
        let (x, y) = bezout(&int(12), &int(5));
        assert_eq!(x * 12 + y * 5, int(1));
    }
}
