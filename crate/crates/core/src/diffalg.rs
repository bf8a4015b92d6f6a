//! Differential matrix algebras (Mₙ(R), Z) and differential modules (Rⁿ, A).
//!
//! The derivation matrix Z turns Mₙ(R) into a differential algebra via
//! ∂_Z(Y) = Y′ + ZY − YZ, which extends the derivation of the base ring.
//! Over ℚ the entrywise derivative vanishes and ∂_Z is the inner derivation
//! X ↦ ZX − XZ. A gauge transformation by an invertible Y replaces Z with
//! Y⁻¹ZY + Y⁻¹Y′; conjugation X ↦ Y⁻¹XY is then a differential isomorphism
//! between the two presentations, and Y′ = −ZY trivializes Z.

use crate::error::Error;
use crate::exactnum::{BaseRing, DiffField, Field, Matrix, Polynomial, Rational, RationalFunction};

/// Mₙ(R) with the derivation ∂_Z; the scalar type decides the base ring.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffAlgebra<K: DiffField> {
    n: usize,
    z: Matrix<K>,
}

impl<K: DiffField> DiffAlgebra<K> {
    pub fn new(z: Matrix<K>) -> Result<Self, Error> {
        if !z.is_square() {
            return Err(Error::NotSquare);
        }
        if z.rows() == 0 {
            return Err(Error::DimensionMismatch("empty derivation matrix".into()));
        }
        Ok(DiffAlgebra { n: z.rows(), z })
    }

    /// (Mₙ, 0), the trivial derivation.
    pub fn trivial(n: usize) -> Self {
        DiffAlgebra {
            n,
            z: Matrix::zero(n, n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn z(&self) -> &Matrix<K> {
        &self.z
    }

    pub fn base(&self) -> BaseRing {
        K::base_ring()
    }

    /// ∂_Z(Y) = Y′ + ZY − YZ.
    pub fn derive_element(&self, y: &Matrix<K>) -> Result<Matrix<K>, Error> {
        if y.rows() != self.n || y.cols() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "element is {}x{}, algebra is {}x{}",
                y.rows(),
                y.cols(),
                self.n,
                self.n
            )));
        }
        let commutator = self.z.mul(y)?.sub(&y.mul(&self.z)?)?;
        y.derive_entrywise().add(&commutator)
    }

    /// Tensor product (M_{nm}, Z ⊗ I_m + I_n ⊗ W) under the Kronecker
    /// identification of Mₙ ⊗ M_m with M_{nm}.
    pub fn tensor(&self, other: &Self) -> Self {
        let left = self.z.kron(&Matrix::identity(other.n));
        let right = Matrix::identity(self.n).kron(&other.z);
        let z = left.add(&right).expect("shapes agree by construction");
        DiffAlgebra {
            n: self.n * other.n,
            z,
        }
    }

    /// Gauge transformation: (Mₙ, Z) ↦ (Mₙ, Y⁻¹ZY + Y⁻¹Y′).
    ///
    /// Conjugation X ↦ Y⁻¹XY is a differential isomorphism from this algebra
    /// to the result. Singular Y is an error.
    pub fn gauge_transform(&self, y: &Matrix<K>) -> Result<Self, Error> {
        if y.rows() != self.n || y.cols() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "gauge matrix is {}x{}, algebra is {}x{}",
                y.rows(),
                y.cols(),
                self.n,
                self.n
            )));
        }
        let y_inv = y.inverse()?;
        let conj = y_inv.mul(&self.z)?.mul(y)?;
        let z = conj.add(&y_inv.mul(&y.derive_entrywise())?)?;
        Ok(DiffAlgebra { n: self.n, z })
    }
}

/// The free differential module (Rⁿ, A) with D(x) = x′ + Ax on columns.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffModule<K: DiffField> {
    n: usize,
    a: Matrix<K>,
}

impl<K: DiffField> DiffModule<K> {
    pub fn new(a: Matrix<K>) -> Result<Self, Error> {
        if !a.is_square() {
            return Err(Error::NotSquare);
        }
        Ok(DiffModule { n: a.rows(), a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &Matrix<K> {
        &self.a
    }

    /// D(v) = v′ + Av for a column vector v.
    pub fn module_derive(&self, v: &Matrix<K>) -> Result<Matrix<K>, Error> {
        if v.rows() != self.n || v.cols() != 1 {
            return Err(Error::DimensionMismatch(format!(
                "vector is {}x{}, module rank is {}",
                v.rows(),
                v.cols(),
                self.n
            )));
        }
        v.derive_entrywise().add(&self.a.mul(v)?)
    }
}

/// An invertible matrix Y, with an optional scalar shift c, witnessing a
/// differential isomorphism between two presentations.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeCertificate<K: DiffField> {
    pub y: Matrix<K>,
    pub scalar_shift: Option<K>,
}

impl<K: DiffField> GaugeCertificate<K> {
    pub fn new(y: Matrix<K>, scalar_shift: Option<K>) -> Self {
        let scalar_shift = scalar_shift.filter(|c| !c.is_zero());
        GaugeCertificate { y, scalar_shift }
    }

    pub fn identity(n: usize) -> Self {
        GaugeCertificate {
            y: Matrix::identity(n),
            scalar_shift: None,
        }
    }

    /// Kronecker product of certificates: witnesses the tensor product of
    /// the two witnessed isomorphisms, with shifts adding.
    pub fn kron(&self, other: &Self) -> Self {
        let shift = match (&self.scalar_shift, &other.scalar_shift) {
            (None, None) => None,
            (Some(c), None) | (None, Some(c)) => Some(c.clone()),
            (Some(a), Some(b)) => Some(a.add(b)),
        };
        GaugeCertificate::new(self.y.kron(&other.y), shift)
    }
}

/// True iff gauge_transform(src, cert.Y) equals dst up to addition of the
/// certificate's scalar shift c·I (exactly, when no shift is supplied).
///
/// A `true` result certifies that conjugation by Y is a differential
/// isomorphism src → dst; `false` only says this particular Y fails.
pub fn verify_certificate<K: DiffField>(
    src: &DiffAlgebra<K>,
    dst: &DiffAlgebra<K>,
    cert: &GaugeCertificate<K>,
) -> Result<bool, Error> {
    if src.n() != dst.n() {
        return Err(Error::DimensionMismatch(format!(
            "source is {}x{}, destination is {}x{}",
            src.n(),
            src.n(),
            dst.n(),
            dst.n()
        )));
    }
    let transformed = src.gauge_transform(&cert.y)?;
    let expected = match &cert.scalar_shift {
        None => dst.z().clone(),
        Some(c) => dst.z().add(&Matrix::scalar(dst.n(), c))?,
    };
    Ok(transformed.z() == &expected)
}

impl DiffAlgebra<Rational> {
    /// A ℚ-basis of the constants: the centralizer of Z in Mₙ(ℚ). Over the
    /// constant field every entry is already a constant, so the degree
    /// bound of the ℚ(x) case plays no role here.
    pub fn constants_basis(&self) -> Vec<Matrix<Rational>> {
        let ad = crate::invariants::ad_matrix(self);
        ad.matrix()
            .kernel_basis()
            .into_iter()
            .map(|v| Matrix::new(self.n, self.n, v).expect("n^2 entries"))
            .collect()
    }
}

impl DiffAlgebra<RationalFunction> {
    /// A ℚ-basis of { Y : entries of Y are polynomials of degree ≤
    /// `deg_bound`, ∂_Z(Y) = 0 }, solved as an exact linear system over ℚ in
    /// the polynomial coefficients.
    pub fn constants_basis(&self, deg_bound: usize) -> Vec<Matrix<RationalFunction>> {
        let n = self.n;
        // Clear denominators of Z: q·∂_Z(Y) = q·Y′ + BY − YB with B = q·Z
        // polynomial, so the conditions on Y become polynomial identities.
        let mut q = Polynomial::one();
        for e in self.z.entries() {
            let g = Polynomial::gcd(&q, e.den());
            let (cofactor, r) = e.den().div_rem(&g).expect("gcd nonzero");
            debug_assert!(r.is_zero());
            q = q.mul(&cofactor);
        }
        let b_entries: Vec<Polynomial> = self
            .z
            .entries()
            .iter()
            .map(|e| {
                let scaled = RationalFunction::from_poly(q.clone()).mul(e);
                debug_assert!(scaled.is_polynomial());
                scaled.num().clone()
            })
            .collect();
        let b = |r: usize, c: usize| -> &Polynomial { &b_entries[r * n + c] };

        let deg_q = q.degree().unwrap_or(0);
        let deg_b = b_entries.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
        // Entry degrees of q·Y′ + BY − YB for deg Y ≤ d.
        let max_deg = usize::max(deg_q + deg_bound.saturating_sub(1), deg_b + deg_bound);
        let unknowns = n * n * (deg_bound + 1);
        let equations = n * n * (max_deg + 1);

        // Column for unknown (i, j, k): the coefficient vector of the
        // constraint polynomial matrix when Y = x^k·e_ij.
        let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(unknowns);
        for i in 0..n {
            for j in 0..n {
                for k in 0..=deg_bound {
                    let mut col = vec![Rational::zero(); equations];
                    // q·(x^k e_ij)′ contributes k·x^{k−1}·q at entry (i,j).
                    if k > 0 {
                        let term = q.scale(&crate::exactnum::rat_int(k as i64));
                        for (deg, c) in term.coeffs().iter().enumerate() {
                            col[(i * n + j) * (max_deg + 1) + deg + k - 1] = c.clone();
                        }
                    }
                    // (B·x^k e_ij)_{r,j} = x^k·B_{r,i}
                    for r in 0..n {
                        for (deg, c) in b(r, i).coeffs().iter().enumerate() {
                            col[(r * n + j) * (max_deg + 1) + deg + k] += c;
                        }
                    }
                    // (x^k e_ij·B)_{i,c} = x^k·B_{j,c}
                    for c_idx in 0..n {
                        for (deg, c) in b(j, c_idx).coeffs().iter().enumerate() {
                            col[(i * n + c_idx) * (max_deg + 1) + deg + k] -= c;
                        }
                    }
                    columns.push(col);
                }
            }
        }
        let system = Matrix::from_fn(equations, unknowns, |r, c| columns[c][r].clone());
        system
            .kernel_basis()
            .into_iter()
            .map(|v| {
                Matrix::from_fn(n, n, |i, j| {
                    let coeffs: Vec<Rational> = (0..=deg_bound)
                        .map(|k| v[(i * n + j) * (deg_bound + 1) + k].clone())
                        .collect();
                    RationalFunction::from_poly(Polynomial::new(coeffs))
                })
            })
            .collect()
    }
}

/// Runtime pairing of an algebra with its base ring, for the JSON and
/// registry boundaries where the scalar type is not known statically.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyAlgebra {
    Q(DiffAlgebra<Rational>),
    Qx(DiffAlgebra<RationalFunction>),
}

impl AnyAlgebra {
    pub fn base(&self) -> BaseRing {
        match self {
            AnyAlgebra::Q(_) => BaseRing::ConstantField,
            AnyAlgebra::Qx(_) => BaseRing::RationalFunctionField,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyAlgebra::Q(a) => a.n(),
            AnyAlgebra::Qx(a) => a.n(),
        }
    }

    pub fn tensor(&self, other: &AnyAlgebra) -> Result<AnyAlgebra, Error> {
        match (self, other) {
            (AnyAlgebra::Q(a), AnyAlgebra::Q(b)) => Ok(AnyAlgebra::Q(a.tensor(b))),
            (AnyAlgebra::Qx(a), AnyAlgebra::Qx(b)) => Ok(AnyAlgebra::Qx(a.tensor(b))),
            _ => Err(Error::BaseMismatch),
        }
    }
}

/// Runtime pairing of a certificate with its base ring.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyCertificate {
    Q(GaugeCertificate<Rational>),
    Qx(GaugeCertificate<RationalFunction>),
}
