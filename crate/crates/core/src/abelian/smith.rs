//! Exact integer matrices and the Smith normal form.
//!
//! The decomposition `P * M * Q = D` with unimodular `P`, `Q` and diagonal
//! `D` (each entry dividing the next) is the workhorse behind every finite
//! abelian group computation here: cyclic types, basis decompositions and
//! kernel lattices all reduce to it.

use std::fmt;
use std::ops::{Index, IndexMut};

/// Dense row-major integer matrix. Entries are `i128`; all inputs in this
/// crate are tiny, so fraction-free arithmetic never comes close to overflow.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> IntMat {
        IntMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMat {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i128>>) -> IntMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn col(&self, j: usize) -> Vec<i128> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        let mut out = IntMat::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)];
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)];
        }
    }

    /// `row_i += c * row_j`
    fn add_row(&mut self, i: usize, j: usize, c: i128) {
        for k in 0..self.cols {
            let v = self[(j, k)];
            self[(i, k)] += c * v;
        }
    }

    /// `col_i += c * col_j`
    fn add_col(&mut self, i: usize, j: usize, c: i128) {
        for k in 0..self.rows {
            let v = self[(k, j)];
            self[(k, i)] += c * v;
        }
    }

    /// Determinant of a square matrix via fraction-free Bareiss elimination.
    pub fn det(&self) -> i128 {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut m = self.clone();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[(k, k)] == 0 {
                match (k + 1..n).find(|&r| m[(r, k)] != 0) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[(i, j)] = (m[(i, j)] * m[(k, k)] - m[(i, k)] * m[(k, j)]) / prev;
                }
                m[(i, k)] = 0;
            }
            prev = m[(k, k)];
        }
        sign * m[(n - 1, n - 1)]
    }

    /// Adjugate (transposed cofactor) matrix: `self * adj = det(self) * I`.
    pub fn adjugate(&self) -> IntMat {
        assert_eq!(self.rows, self.cols, "adjugate of non-square matrix");
        let n = self.rows;
        let mut adj = IntMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                // cofactor of the (j, i) entry
                let mut sub = IntMat::zero(n - 1, n - 1);
                for r in 0..n {
                    if r == j {
                        continue;
                    }
                    for c in 0..n {
                        if c == i {
                            continue;
                        }
                        sub[(if r < j { r } else { r - 1 }, if c < i { c } else { c - 1 })] =
                            self[(r, c)];
                    }
                }
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj[(i, j)] = sign * sub.det();
            }
        }
        adj
    }

    /// Basis of the integer kernel `{x : Mx = 0}`, one column per basis
    /// vector. The basis is primitive (spans the full kernel lattice).
    pub fn kernel_basis(&self) -> IntMat {
        let s = smith_decomposition(self);
        let r = (0..self.rows.min(self.cols))
            .filter(|&i| s.d[(i, i)] != 0)
            .count();
        let mut out = IntMat::zero(self.cols, self.cols - r);
        for (k, j) in (r..self.cols).enumerate() {
            for i in 0..self.cols {
                out[(i, k)] = s.q[(i, j)];
            }
        }
        out
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", (0..self.cols).map(|j| self[(i, j)]).collect::<Vec<_>>())?;
        }
        Ok(())
    }
}

/// Result of `smith_decomposition`: `p * m * q = d` with `p`, `q`
/// unimodular, `d` diagonal with non-negative entries `d_1 | d_2 | ...`.
/// The inverses are tracked exactly alongside.
pub struct Smith {
    pub d: IntMat,
    pub p: IntMat,
    pub q: IntMat,
    pub p_inv: IntMat,
    pub q_inv: IntMat,
}

impl Smith {
    /// Diagonal entries of `d`.
    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)])
            .collect()
    }
}

pub fn smith_decomposition(m: &IntMat) -> Smith {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut p = IntMat::identity(rows);
    let mut p_inv = IntMat::identity(rows);
    let mut q = IntMat::identity(cols);
    let mut q_inv = IntMat::identity(cols);

    // Row operation on d is mirrored on p; the inverse operation is applied
    // to p_inv on the opposite side (columns). Same pattern for q.
    macro_rules! row_swap {
        ($a:expr, $b:expr) => {{
            d.swap_rows($a, $b);
            p.swap_rows($a, $b);
            p_inv.swap_cols($a, $b);
        }};
    }
    macro_rules! row_neg {
        ($i:expr) => {{
            d.negate_row($i);
            p.negate_row($i);
            p_inv.negate_col($i);
        }};
    }
    macro_rules! row_add {
        // row_i += c * row_j
        ($i:expr, $j:expr, $c:expr) => {{
            d.add_row($i, $j, $c);
            p.add_row($i, $j, $c);
            p_inv.add_col($j, $i, -$c);
        }};
    }
    macro_rules! col_swap {
        ($a:expr, $b:expr) => {{
            d.swap_cols($a, $b);
            q.swap_cols($a, $b);
            q_inv.swap_rows($a, $b);
        }};
    }
    macro_rules! col_add {
        // col_i += c * col_j
        ($i:expr, $j:expr, $c:expr) => {{
            d.add_col($i, $j, $c);
            q.add_col($i, $j, $c);
            q_inv.add_row($j, $i, -$c);
        }};
    }

    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: minimal nonzero absolute value in the trailing submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d[(i, j)] != 0
                    && pivot.is_none_or(|(pi, pj)| d[(i, j)].abs() < d[(pi, pj)].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        row_swap!(t, pi);
        col_swap!(t, pj);
        if d[(t, t)] < 0 {
            row_neg!(t);
        }

        let mut clean = true;
        for i in t + 1..rows {
            let c = d[(i, t)].div_euclid(d[(t, t)]);
            if c != 0 {
                row_add!(i, t, -c);
            }
            if d[(i, t)] != 0 {
                clean = false;
            }
        }
        for j in t + 1..cols {
            let c = d[(t, j)].div_euclid(d[(t, t)]);
            if c != 0 {
                col_add!(j, t, -c);
            }
            if d[(t, j)] != 0 {
                clean = false;
            }
        }
        if !clean {
            // A remainder strictly smaller than the pivot appeared; re-pick.
            continue;
        }

        // Enforce divisibility of every remaining entry by the pivot.
        let mut divisible = true;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if d[(i, j)] % d[(t, t)] != 0 {
                    row_add!(t, i, 1);
                    divisible = false;
                    break 'scan;
                }
            }
        }
        if !divisible {
            continue;
        }
        t += 1;
    }

    Smith { d, p, q, p_inv, q_inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMat) -> Smith {
        let s = smith_decomposition(m);
        assert_eq!(s.p.mul(m).mul(&s.q), s.d, "P*M*Q != D");
        assert_eq!(s.p.mul(&s.p_inv), IntMat::identity(m.rows()));
        assert_eq!(s.p_inv.mul(&s.p), IntMat::identity(m.rows()));
        assert_eq!(s.q.mul(&s.q_inv), IntMat::identity(m.cols()));
        assert_eq!(s.q_inv.mul(&s.q), IntMat::identity(m.cols()));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(w[0] >= 0 && w[1] >= 0);
            if w[0] != 0 {
                assert_eq!(w[1] % w[0], 0, "divisibility chain broken: {diag:?}");
            } else {
                assert_eq!(w[1], 0);
            }
        }
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if i != j {
                    assert_eq!(s.d[(i, j)], 0, "D not diagonal");
                }
            }
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMat::identity(3));
        assert_eq!(s.diagonal(), vec![1, 1, 1]);
    }

    #[test]
    fn upper_triangular_example() {
        let m = IntMat::from_rows(vec![vec![2, 1], vec![0, 3]]);
        let s = check(&m);
        assert_eq!(s.diagonal(), vec![1, 6]);
    }

    #[test]
    fn diagonal_examples() {
        let m = IntMat::from_rows(vec![vec![3, 0], vec![0, 3]]);
        assert_eq!(check(&m).diagonal(), vec![3, 3]);
        let m = IntMat::from_rows(vec![vec![4, 0], vec![0, 2]]);
        assert_eq!(check(&m).diagonal(), vec![2, 4]);
    }

    #[test]
    fn rectangular_and_singular() {
        let m = IntMat::from_rows(vec![vec![2, 4, 4]]);
        assert_eq!(check(&m).diagonal(), vec![2]);
        let m = IntMat::from_rows(vec![vec![2, 4], vec![1, 2], vec![3, 6]]);
        assert_eq!(check(&m).diagonal(), vec![1, 0]);
        let m = IntMat::zero(2, 3);
        assert_eq!(check(&m).diagonal(), vec![0, 0]);
    }

    #[test]
    fn a_messier_matrix() {
        let m = IntMat::from_rows(vec![
            vec![2, 4, 4],
            vec![-6, 6, 12],
            vec![10, 4, 16],
        ]);
        let s = check(&m);
        assert_eq!(s.diagonal(), vec![2, 2, 156]);
    }

    #[test]
    fn determinants() {
        assert_eq!(IntMat::identity(4).det(), 1);
        assert_eq!(IntMat::from_rows(vec![vec![2, 1], vec![0, 3]]).det(), 6);
        assert_eq!(IntMat::from_rows(vec![vec![0, 1], vec![1, 0]]).det(), -1);
        assert_eq!(
            IntMat::from_rows(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]).det(),
            0
        );
        assert_eq!(
            IntMat::from_rows(vec![vec![3, 0, 0], vec![1, 2, 0], vec![4, 1, 7]]).det(),
            42
        );
    }

    #[test]
    fn adjugates() {
        for m in [
            IntMat::from_rows(vec![vec![5]]),
            IntMat::from_rows(vec![vec![2, 1], vec![0, 3]]),
            IntMat::from_rows(vec![vec![3, 0, 0], vec![1, 2, 0], vec![4, 1, 7]]),
        ] {
            let d = m.det();
            let mut scaled = IntMat::identity(m.rows());
            for i in 0..m.rows() {
                scaled[(i, i)] = d;
            }
            assert_eq!(m.mul(&m.adjugate()), scaled);
            assert_eq!(m.adjugate().mul(&m), scaled);
        }
    }

    #[test]
    fn kernels() {
        let m = IntMat::from_rows(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(m.kernel_basis().cols(), 0);

        let m = IntMat::from_rows(vec![vec![2, 3]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        let v = k.col(0);
        assert_eq!(2 * v[0] + 3 * v[1], 0);
        assert_eq!(v[0].abs(), 3);

        // kernel of [1 1 1] is rank 2 and saturated
        let m = IntMat::from_rows(vec![vec![1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 2);
        for j in 0..2 {
            let v = k.col(j);
            assert_eq!(v[0] + v[1] + v[2], 0);
        }
    }
}
