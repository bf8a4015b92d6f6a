//! Class invariants of differential matrix algebras.
//!
//! For (Mₙ(R), Z) the adjoint operator I_Z = L_Z − R_Z acts on Mₙ(R) by
//! X ↦ ZX − XZ. Its matrix is Z ⊗ Iₙ − Iₙ ⊗ Zᵀ under the crate's Kronecker
//! identification, acting on the row-major flattening of X (which is how
//! [`Matrix::entries`] already lays elements out). Every eigenvalue of I_Z
//! is a difference of eigenvalues of Z, and for constant Z the set of
//! rational eigenvalues of I_Z (the e-values), the set of rational roots of
//! its characteristic polynomial, and — over the constant base — the
//! nilpotency index are invariants of the class of the algebra in the
//! differential Brauer monoid. These are the data used to separate classes.

use std::collections::BTreeSet;

use crate::diffalg::DiffAlgebra;
use crate::error::Error;
use crate::exactnum::{BaseRing, DiffField, Matrix, Polynomial, Rational};

/// The adjoint operator I_Z as an n²×n² matrix over the base ring.
#[derive(Debug, Clone, PartialEq)]
pub struct AdOperator<K: DiffField> {
    n: usize,
    matrix: Matrix<K>,
}

impl<K: DiffField> AdOperator<K> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<K> {
        &self.matrix
    }
}

/// Z ⊗ Iₙ − Iₙ ⊗ Zᵀ, the matrix of X ↦ ZX − XZ on flattened X.
pub fn ad_matrix<K: DiffField>(alg: &DiffAlgebra<K>) -> AdOperator<K> {
    let n = alg.n();
    let id = Matrix::identity(n);
    let left = alg.z().kron(&id);
    let right = id.kron(&alg.z().transpose());
    AdOperator {
        n,
        matrix: left.sub(&right).expect("same shape"),
    }
}

/// Invariant data of one algebra presentation.
///
/// `stable` is true only when Z is a constant matrix (entries in ℚ), the
/// regime in which root sets, e-value sets and (over the constant base)
/// nilpotency indices are class invariants. Reports for non-constant Z are
/// still computed but are excluded from separation.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport<K: DiffField> {
    pub base: BaseRing,
    pub n: usize,
    /// Characteristic polynomial of the ad operator, monic, constant-first.
    pub ad_char_poly: Vec<K>,
    /// Squarefree part of the characteristic polynomial, when its
    /// coefficients are constants.
    pub ad_squarefree: Option<Polynomial>,
    /// Rational roots with multiplicity, ascending (possibly partial when
    /// the polynomial does not split).
    pub root_multiset: Vec<Rational>,
    /// True when the rational-root multiplicities sum to the degree n².
    pub splits: bool,
    /// Least k with ad^k = 0 (so ad^{k−1} ≠ 0), absent when ad is not
    /// nilpotent. The search is capped at 2n−1, which bounds the index of
    /// any nilpotent adjoint operator.
    pub nilpotency_index: Option<usize>,
    /// The rational μ admitting a nonzero e-element D(b) = μ·b; populated
    /// only for constant Z. Always contains 0.
    pub e_value_set: Option<BTreeSet<Rational>>,
    pub stable: bool,
}

impl<K: DiffField> InvariantReport<K> {
    /// The set of rational roots (the support of `root_multiset`).
    pub fn root_set(&self) -> BTreeSet<Rational> {
        self.root_multiset.iter().cloned().collect()
    }
}

/// Computes the full invariant report of an algebra.
pub fn eig_diff_report<K: DiffField>(alg: &DiffAlgebra<K>) -> InvariantReport<K> {
    let ad = ad_matrix(alg);
    let n = alg.n();
    let ad_char_poly = ad
        .matrix()
        .char_poly_coeffs()
        .expect("ad matrix is square");

    // Root data is available whenever the coefficients are constants, which
    // always holds for constant Z and may hold beyond it.
    let constant_coeffs: Option<Vec<Rational>> =
        ad_char_poly.iter().map(|c| c.to_rational()).collect();
    let (ad_squarefree, root_multiset, splits) = match constant_coeffs {
        Some(coeffs) => {
            let p = Polynomial::new(coeffs);
            let sqfree = p.squarefree_part().expect("monic char poly is nonzero");
            let (roots, splits) = p.rational_roots().expect("nonzero");
            (Some(sqfree), roots, splits)
        }
        None => (None, Vec::new(), false),
    };

    let nilpotency_index = nilpotency_index(&ad);
    let stable = alg.z().is_constant();
    let e_value_set = if stable {
        let set: BTreeSet<Rational> = ad_squarefree
            .as_ref()
            .expect("constant Z has constant char poly")
            .rational_roots()
            .expect("nonzero")
            .0
            .into_iter()
            .collect();
        debug_assert!(set.contains(&Rational::from_integer(0.into())));
        Some(set)
    } else {
        None
    };

    InvariantReport {
        base: alg.base(),
        n,
        ad_char_poly,
        ad_squarefree,
        root_multiset,
        splits,
        nilpotency_index,
        e_value_set,
        stable,
    }
}

/// Least k ≤ 2n−1 with ad^k = 0, by repeated exact multiplication.
fn nilpotency_index<K: DiffField>(ad: &AdOperator<K>) -> Option<usize> {
    let cap = 2 * ad.n - 1;
    let mut power = Matrix::<K>::identity(ad.n * ad.n);
    for k in 1..=cap {
        power = power.mul(ad.matrix()).expect("square");
        if power.is_zero() {
            return Some(k);
        }
    }
    None
}

/// The set of rational μ for which a nonzero e-element with D(b) = μ·b
/// exists in the algebra. Requires constant Z; for constant Z this is the
/// set of rational eigenvalue differences of Z, i.e. the rational roots of
/// the squarefree part of the ad characteristic polynomial.
pub fn e_values<K: DiffField>(alg: &DiffAlgebra<K>) -> Result<BTreeSet<Rational>, Error> {
    if !alg.z().is_constant() {
        return Err(Error::NonConstantDerivation(
            "e-values are only defined here for constant derivation matrices".into(),
        ));
    }
    Ok(eig_diff_report(alg)
        .e_value_set
        .expect("constant Z yields e-values"))
}

/// Which invariant a separation is based on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    EValueSet,
    RootSet,
    NilpotencyIndex,
    ScalarTest,
}

impl WitnessKind {
    pub fn label(self) -> &'static str {
        match self {
            WitnessKind::EValueSet => "EValueSet",
            WitnessKind::RootSet => "RootSet",
            WitnessKind::NilpotencyIndex => "NilpotencyIndex",
            WitnessKind::ScalarTest => "ScalarTest",
        }
    }
}

/// One of the two differing invariant values inside a witness.
#[derive(Debug, Clone, PartialEq)]
pub enum WitnessValue {
    Set(BTreeSet<Rational>),
    Index(Option<usize>),
}

/// Certifies that two algebras lie in distinct classes of the differential
/// Brauer monoid: the named invariant takes different values on them.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparationWitness {
    pub kind: WitnessKind,
    pub left: WitnessValue,
    pub right: WitnessValue,
}

/// Attempts to separate two algebras by their stable invariants.
///
/// Both algebras must have constant Z and live over the same base. A
/// witness certifies distinct classes; `None` is inconclusive (identical
/// stable invariants do not imply class equality).
///
/// The e-value and root-set tests apply over both bases. The nilpotency
/// index is compared only over the constant field: over ℚ(x) every
/// scalar-plus-nilpotent Z is trivializable, so algebras of different
/// index can share a class there.
pub fn separate<K: DiffField>(
    a: &DiffAlgebra<K>,
    b: &DiffAlgebra<K>,
) -> Result<Option<SeparationWitness>, Error> {
    for (name, alg) in [("left", a), ("right", b)] {
        if !alg.z().is_constant() {
            return Err(Error::UnstableInput(format!(
                "{name} algebra has a non-constant derivation matrix"
            )));
        }
    }
    let ra = eig_diff_report(a);
    let rb = eig_diff_report(b);

    let ea = ra.e_value_set.clone().expect("stable");
    let eb = rb.e_value_set.clone().expect("stable");
    if ea != eb {
        return Ok(Some(SeparationWitness {
            kind: WitnessKind::EValueSet,
            left: WitnessValue::Set(ea),
            right: WitnessValue::Set(eb),
        }));
    }

    let sa = ra.root_set();
    let sb = rb.root_set();
    if sa != sb {
        return Ok(Some(SeparationWitness {
            kind: WitnessKind::RootSet,
            left: WitnessValue::Set(sa),
            right: WitnessValue::Set(sb),
        }));
    }

    if K::base_ring() == BaseRing::ConstantField && ra.nilpotency_index != rb.nilpotency_index {
        return Ok(Some(SeparationWitness {
            kind: WitnessKind::NilpotencyIndex,
            left: WitnessValue::Index(ra.nilpotency_index),
            right: WitnessValue::Index(rb.nilpotency_index),
        }));
    }

    Ok(None)
}
