//! Matrices over an exact field.
//!
//! Entries are stored row-major. Besides the ring operations this module
//! provides exact Gaussian elimination (determinant, inverse, kernel) and
//! the characteristic polynomial by the Faddeev–LeVerrier recursion, whose
//! only divisions are by integers and hence stay exact in characteristic
//! zero.

use super::field::{DiffField, Field};
use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<K: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn new(rows: usize, cols: usize, entries: Vec<K>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| K::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { K::one() } else { K::zero() })
    }

    /// c·I.
    pub fn scalar(n: usize, c: &K) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { c.clone() } else { K::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &K {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.entries[i * self.cols + j] = v;
    }

    /// Row-major entry list; also the flattening used by the adjoint
    /// operator's matrix representation.
    pub fn entries(&self) -> &[K] {
        &self.entries
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn neg(&self) -> Self {
        self.map(|e| e.neg())
    }

    pub fn scalar_mul(&self, c: &K) -> Self {
        self.map(|e| e.mul(c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Matrix<K> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j).add(&a.mul(other.at(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn trace(&self) -> Result<K, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let mut t = K::zero();
        for i in 0..self.rows {
            t = t.add(self.at(i, i));
        }
        Ok(t)
    }

    pub fn pow(&self, mut e: usize) -> Result<Self, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Kronecker product with the identification
    /// (X⊗W)[(i−1)m+k, (j−1)m+l] = X[i,j]·W[k,l] for W of size m.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * p, self.cols * q, |r, c| {
            let (i, k) = (r / p, r % p);
            let (j, l) = (c / q, c % q);
            self.at(i, j).mul(other.at(k, l))
        })
    }

    /// Determinant by fraction-field Gaussian elimination.
    pub fn det(&self) -> Result<K, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = K::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !m.at(r, col).is_zero()) {
                Some(r) => r,
                None => return Ok(K::zero()),
            };
            if pivot_row != col {
                m.swap_rows(pivot_row, col);
                det = det.neg();
            }
            let pivot = m.at(col, col).clone();
            det = det.mul(&pivot);
            let pivot_inv = pivot.inv()?;
            for r in col + 1..n {
                let factor = m.at(r, col).mul(&pivot_inv);
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.at(r, c).sub(&factor.mul(m.at(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Inverse by Gauss–Jordan elimination; `Err(SingularMatrix)` when the
    /// determinant vanishes.
    pub fn inverse(&self) -> Result<Self, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv: Matrix<K> = Matrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !m.at(r, col).is_zero())
                .ok_or(Error::SingularMatrix)?;
            m.swap_rows(pivot_row, col);
            inv.swap_rows(pivot_row, col);
            let pivot_inv = m.at(col, col).inv()?;
            for j in 0..n {
                m.set(col, j, m.at(col, j).mul(&pivot_inv));
                inv.set(col, j, inv.at(col, j).mul(&pivot_inv));
            }
            for r in 0..n {
                if r == col || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in 0..n {
                    let v = m.at(r, j).sub(&factor.mul(m.at(col, j)));
                    m.set(r, j, v);
                    let w = inv.at(r, j).sub(&factor.mul(inv.at(col, j)));
                    inv.set(r, j, w);
                }
            }
        }
        Ok(inv)
    }

    /// Basis of the right kernel, from the reduced row echelon form. The
    /// basis vectors are in free-column order, giving a deterministic result.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivot_col_of_row = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let pivot_row = match (row..rows).find(|&r| !m.at(r, col).is_zero()) {
                Some(r) => r,
                None => continue,
            };
            m.swap_rows(pivot_row, row);
            let pivot_inv = m.at(row, col).inv().expect("nonzero pivot");
            for j in 0..cols {
                m.set(row, j, m.at(row, j).mul(&pivot_inv));
            }
            for r in 0..rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in 0..cols {
                    let v = m.at(r, j).sub(&factor.mul(m.at(row, j)));
                    m.set(r, j, v);
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
            if row == rows {
                break;
            }
        }
        let pivot_cols: std::collections::BTreeSet<usize> =
            pivot_col_of_row.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![K::zero(); cols];
            v[free] = K::one();
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = m.at(r, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Coefficients of det(tI − M), monic and constant-first, by the
    /// Faddeev–LeVerrier recursion.
    pub fn char_poly_coeffs(&self) -> Result<Vec<K>, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(vec![K::one()]);
        }
        let mut coeffs = vec![K::zero(); n + 1];
        coeffs[n] = K::one();
        let mut mk = self.clone();
        for k in 1..=n {
            let tr = mk.trace()?;
            let ck = tr.mul(&K::from_i64(k as i64).inv()?).neg();
            coeffs[n - k] = ck.clone();
            if k < n {
                let shifted = mk.add(&Matrix::scalar(n, &ck))?;
                mk = self.mul(&shifted)?;
            }
        }
        Ok(coeffs)
    }
}

impl<K: DiffField> Matrix<K> {
    /// Entrywise derivation.
    pub fn derive_entrywise(&self) -> Self {
        self.map(|e| e.derive())
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(|e| e.is_constant())
    }

    /// Demotes to a rational matrix when every entry is constant.
    pub fn to_rational_matrix(&self) -> Option<Matrix<Rational>> {
        let entries: Option<Vec<Rational>> = self.entries.iter().map(|e| e.to_rational()).collect();
        entries.map(|entries| Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn from_rational_matrix(m: &Matrix<Rational>) -> Self {
        m.map(|e| K::from_rational(e))
    }
}

impl Matrix<Rational> {
    /// det(tI − M) as a polynomial over ℚ.
    pub fn char_poly(&self) -> Result<Polynomial, Error> {
        Ok(Polynomial::new(self.char_poly_coeffs()?))
    }
}

impl<K: Field> std::fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{rat, rat_int};
    use crate::exactnum::RationalFunction;

    fn qm(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(rat_int).collect()).collect())
            .unwrap()
    }

    #[test]
    fn construction_checks_dimensions() {
        assert!(Matrix::new(2, 2, vec![rat_int(1); 3]).is_err());
        assert!(Matrix::from_rows(vec![vec![rat_int(1)], vec![]]).is_err());
    }

    #[test]
    fn multiplication_and_identity() {
        let a = qm(vec![vec![1, 2], vec![3, 4]]);
        let i = Matrix::identity(2);
        assert_eq!(a.mul(&i).unwrap(), a);
        let b = qm(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), qm(vec![vec![2, 1], vec![4, 3]]));
        assert!(a.mul(&qm(vec![vec![1, 2, 3]])).is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let a = qm(vec![vec![2, 1], vec![1, 1]]);
        assert_eq!(a.det().unwrap(), rat_int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(inv, qm(vec![vec![1, -1], vec![-1, 2]]));

        let singular = qm(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(singular.det().unwrap(), rat_int(0));
        assert!(matches!(singular.inverse(), Err(Error::SingularMatrix)));
        assert!(qm(vec![vec![1, 2]]).det().is_err());
    }

    #[test]
    fn inverse_over_rational_functions() {
        // Y = I − x·e12 has determinant 1 and polynomial inverse I + x·e12.
        let x = RationalFunction::x();
        let y = Matrix::from_rows(vec![
            vec![RationalFunction::one(), x.neg()],
            vec![RationalFunction::zero(), RationalFunction::one()],
        ])
        .unwrap();
        assert_eq!(y.det().unwrap(), RationalFunction::one());
        let inv = y.inverse().unwrap();
        assert_eq!(y.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(*inv.at(0, 1), RationalFunction::x());
    }

    #[test]
    fn char_poly_identity_and_diagonal() {
        // 2x2 identity → (t−1)^2 = t^2 − 2t + 1.
        let p = Matrix::<Rational>::identity(2).char_poly().unwrap();
        assert_eq!(p, Polynomial::from_i64(&[1, -2, 1]));

        // diag(0, 2, −2, 0) → t^4 − 4t^2 by direct expansion.
        let d = qm(vec![
            vec![0, 0, 0, 0],
            vec![0, 2, 0, 0],
            vec![0, 0, -2, 0],
            vec![0, 0, 0, 0],
        ]);
        assert_eq!(d.char_poly().unwrap(), Polynomial::from_i64(&[0, 0, -4, 0, 1]));
    }

    #[test]
    fn char_poly_of_companion_matrix() {
        // The companion matrix of a monic p has characteristic polynomial p.
        let p = Polynomial::from_i64(&[-1, -1, 1]); // t^2 − t − 1
        let companion = Matrix::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ])
        .unwrap();
        assert_eq!(companion.char_poly().unwrap(), p);

        // Degree 4 example, columns built from p = t^4 + 3t^3 − 2t + 5.
        let p = Polynomial::from_i64(&[5, -2, 0, 3, 1]);
        let n = 4;
        let companion = Matrix::from_fn(n, n, |i, j| {
            if j + 1 == n {
                -p.coeff(i)
            } else if i == j + 1 {
                rat_int(1)
            } else {
                rat_int(0)
            }
        });
        assert_eq!(companion.char_poly().unwrap(), p);
    }

    #[test]
    fn char_poly_invariant_under_conjugation() {
        let m = qm(vec![vec![1, 2, 0], vec![0, 3, 1], vec![5, 0, -1]]);
        let p = qm(vec![vec![1, 1, 0], vec![0, 1, 2], vec![1, 0, 1]]);
        let conj = p.mul(&m).unwrap().mul(&p.inverse().unwrap()).unwrap();
        assert_eq!(conj.char_poly().unwrap(), m.char_poly().unwrap());
    }

    #[test]
    fn char_poly_over_rational_functions() {
        // M = [[x, 1], [0, x]] → (t − x)^2 = t^2 − 2x·t + x^2.
        let x = RationalFunction::x();
        let m = Matrix::from_rows(vec![
            vec![x.clone(), RationalFunction::one()],
            vec![RationalFunction::zero(), x.clone()],
        ])
        .unwrap();
        let coeffs = m.char_poly_coeffs().unwrap();
        assert_eq!(coeffs.len(), 3);
        assert_eq!(coeffs[2], RationalFunction::one());
        assert_eq!(coeffs[1], x.add(&x).neg());
        assert_eq!(coeffs[0], x.mul(&x));
    }

    #[test]
    fn kron_matches_block_structure() {
        let a = qm(vec![vec![1, 2], vec![3, 4]]);
        let b = qm(vec![vec![0, 5], vec![6, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        for i in 0..2 {
            for j in 0..2 {
                for r in 0..2 {
                    for c in 0..2 {
                        assert_eq!(
                            *k.at(i * 2 + r, j * 2 + c),
                            Field::mul(a.at(i, j), b.at(r, c))
                        );
                    }
                }
            }
        }
        // Kronecker product is strictly associative in this flat indexing.
        let c = qm(vec![vec![1, 1], vec![0, 2]]);
        assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        // rank 1: kernel dimension 2.
        let m = qm(vec![vec![1, 2, 3], vec![2, 4, 6], vec![3, 6, 9]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let vm = Matrix::new(3, 1, v.clone()).unwrap();
            assert!(m.mul(&vm).unwrap().is_zero());
        }
        // Full-rank: trivial kernel.
        assert!(qm(vec![vec![1, 0], vec![0, 1]]).kernel_basis().is_empty());
    }

    #[test]
    fn trace_and_power() {
        let m = qm(vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(m.trace().unwrap(), rat_int(0));
        assert!(m.pow(2).unwrap().is_zero());
        assert_eq!(m.pow(0).unwrap(), Matrix::identity(2));
        assert_eq!(qm(vec![vec![2]]).pow(5).unwrap(), qm(vec![vec![32]]));
    }

    #[test]
    fn rational_matrix_demotion() {
        let m: Matrix<RationalFunction> = Matrix::from_rows(vec![
            vec![RationalFunction::constant(rat(1, 2)), RationalFunction::zero()],
            vec![RationalFunction::one(), RationalFunction::constant(rat_int(3))],
        ])
        .unwrap();
        let q = m.to_rational_matrix().unwrap();
        assert_eq!(*q.at(0, 0), rat(1, 2));
        let with_x = Matrix::from_rows(vec![vec![RationalFunction::x()]]).unwrap();
        assert!(with_x.to_rational_matrix().is_none());
    }
}
