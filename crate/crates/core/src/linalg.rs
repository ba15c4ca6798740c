//! Dense square matrices over GF(q), sized for projective dimensions up to
//! seven. Operations take the field explicitly so matrices stay plain data.

use crate::field::{Fe, FieldSpec};

/// Row-major n x n matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    n: usize,
    a: Vec<Fe>,
}

impl Matrix {
    pub fn from_rows(rows: &[Vec<Fe>]) -> Matrix {
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            a.extend_from_slice(row);
        }
        Matrix { n, a }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut a = vec![Fe::ZERO; n * n];
        for i in 0..n {
            a[i * n + i] = Fe::ONE;
        }
        Matrix { n, a }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> Fe {
        self.a[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.a[i * self.n..(i + 1) * self.n]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.a[i * self.n + j] = v;
    }

    /// out = self * v (column-vector convention).
    pub fn mul_vec_into(&self, v: &[Fe], f: &FieldSpec, out: &mut [Fe]) {
        let n = self.n;
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = Fe::ZERO;
            let row = &self.a[i * n..(i + 1) * n];
            for (j, &m) in row.iter().enumerate() {
                if m != Fe::ZERO && v[j] != Fe::ZERO {
                    acc = f.add(acc, f.mul(m, v[j]));
                }
            }
            *slot = acc;
        }
    }

    pub fn mul_vec(&self, v: &[Fe], f: &FieldSpec) -> Vec<Fe> {
        let mut out = vec![Fe::ZERO; self.n];
        self.mul_vec_into(v, f, &mut out);
        out
    }

    pub fn mul(&self, other: &Matrix, f: &FieldSpec) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut a = vec![Fe::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let lhs = self.a[i * n + k];
                if lhs == Fe::ZERO {
                    continue;
                }
                for j in 0..n {
                    let rhs = other.a[k * n + j];
                    if rhs != Fe::ZERO {
                        a[i * n + j] = f.add(a[i * n + j], f.mul(lhs, rhs));
                    }
                }
            }
        }
        Matrix { n, a }
    }

    /// Kronecker product; entry ((i1, i2), (j1, j2)) = self[i1, j1] * other[i2, j2].
    pub fn kron(&self, other: &Matrix, f: &FieldSpec) -> Matrix {
        let n = self.n * other.n;
        let mut out = Matrix {
            n,
            a: vec![Fe::ZERO; n * n],
        };
        for i1 in 0..self.n {
            for j1 in 0..self.n {
                let s = self.at(i1, j1);
                if s == Fe::ZERO {
                    continue;
                }
                for i2 in 0..other.n {
                    for j2 in 0..other.n {
                        let v = f.mul(s, other.at(i2, j2));
                        out.set(i1 * other.n + i2, j1 * other.n + j2, v);
                    }
                }
            }
        }
        out
    }
}

/// Rank of an arbitrary list of length-w vectors by Gaussian elimination.
pub fn rank(rows: &[Vec<Fe>], f: &FieldSpec) -> usize {
    let mut ech = Echelon::new(rows.first().map_or(0, Vec::len));
    let mut r = 0;
    for row in rows {
        if ech.try_insert(row, f) {
            r += 1;
        }
    }
    r
}

/// Incremental row-echelon basis, used to prune matrix enumeration: a partial
/// matrix extends to an invertible one exactly when its rows stay independent.
pub struct Echelon {
    width: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Echelon {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Reduces `row` against the basis; if independent, stores the reduced row
    /// (pivot normalized to one) and returns true.
    pub fn try_insert(&mut self, row: &[Fe], f: &FieldSpec) -> bool {
        debug_assert_eq!(row.len(), self.width);
        let mut v = row.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != Fe::ZERO {
                for (vi, &ri) in v.iter_mut().zip(r) {
                    *vi = f.sub(*vi, f.mul(c, ri));
                }
            }
        }
        let Some(pivot) = v.iter().position(|&c| c != Fe::ZERO) else {
            return false;
        };
        let inv = f.inv(v[pivot]).expect("pivot is nonzero");
        for c in &mut v {
            *c = f.mul(*c, inv);
        }
        self.rows.push(v);
        self.pivots.push(pivot);
        true
    }

    /// Removes the most recently inserted row (backtracking support).
    pub fn pop(&mut self) {
        self.rows.pop();
        self.pivots.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn matrix_vector_and_product_over_gf3() {
        let f = FieldSpec::new(3, 1).unwrap();
        let m = Matrix::from_rows(&[vec![Fe(1), Fe(2)], vec![Fe(0), Fe(1)]]);
        assert_eq!(m.mul_vec(&[Fe(1), Fe(1)], &f), vec![Fe(0), Fe(1)]);
        let m2 = m.mul(&m, &f);
        // [[1,2],[0,1]]^2 = [[1,4],[0,1]] = [[1,1],[0,1]] mod 3.
        assert_eq!(m2, Matrix::from_rows(&[vec![Fe(1), Fe(1)], vec![Fe(0), Fe(1)]]));
    }

    #[test]
    fn kronecker_shape_and_entries() {
        let f = FieldSpec::new(3, 1).unwrap();
        let s = Matrix::from_rows(&[vec![Fe(0), Fe(1)], vec![Fe(1), Fe(0)]]);
        let d = Matrix::from_rows(&[vec![Fe(1), Fe(0)], vec![Fe(0), Fe(2)]]);
        let k = s.kron(&d, &f);
        assert_eq!(k.n(), 4);
        assert_eq!(k.at(0, 2), Fe(1));
        assert_eq!(k.at(1, 3), Fe(2));
        assert_eq!(k.at(0, 0), Fe(0));
        // (s kron d)(e1 kron e2) = (s e1) kron (d e2).
        let v = k.mul_vec(&[Fe(0), Fe(1), Fe(0), Fe(0)], &f);
        assert_eq!(v, vec![Fe(0), Fe(0), Fe(0), Fe(2)]);
    }

    #[test]
    fn rank_counts_independent_rows() {
        let f = FieldSpec::new(2, 2).unwrap();
        let rows = vec![
            vec![Fe(1), Fe(2), Fe(0)],
            vec![Fe(0), Fe(1), Fe(1)],
            vec![Fe(1), Fe(0), Fe(2)], // row0 + 2 * row1
        ];
        assert_eq!(rank(&rows, &f), 2);
        assert_eq!(rank(&rows[..2], &f), 2);
        assert_eq!(rank(&[vec![Fe(0), Fe(0), Fe(0)]], &f), 0);
    }

    #[test]
    fn echelon_insert_and_pop() {
        let f = FieldSpec::new(5, 1).unwrap();
        let mut e = Echelon::new(3);
        assert!(e.try_insert(&[Fe(2), Fe(1), Fe(0)], &f));
        assert!(e.try_insert(&[Fe(0), Fe(0), Fe(4)], &f));
        assert!(!e.try_insert(&[Fe(4), Fe(2), Fe(3)], &f)); // 2*row0 + 2*row1
        assert_eq!(e.rows.len(), 2);
        e.pop();
        assert!(e.try_insert(&[Fe(4), Fe(2), Fe(3)], &f));
        assert_eq!(e.rows.len(), 2);
    }
}
