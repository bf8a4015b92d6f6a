//! Membership in the trivial class of the matrix differential Brauer
//! monoid.
//!
//! An algebra is trivial when some matrix amplification of it is
//! differentially isomorphic to a matrix algebra with the trivial
//! derivation. Over the constant field ℚ this holds exactly when Z is a
//! scalar matrix. Over ℚ(x) with constant Z, a scalar-plus-nilpotent Z is
//! trivialized by the polynomial gauge Y = exp(−Nx), while a nonzero
//! rational eigenvalue of the adjoint operator is an e-value obstruction;
//! anything else is honestly Unknown.

use crate::diffalg::{verify_certificate, AnyAlgebra, DiffAlgebra, GaugeCertificate};
use crate::error::Error;
use crate::exactnum::{rat_int, DiffField, Field, Matrix, Rational, RationalFunction};
use crate::invariants::{eig_diff_report, SeparationWitness, WitnessKind, WitnessValue};

/// Outcome of the triviality decision.
///
/// A `TrivialWithCertificate` verdict carries a certificate that
/// [`verify_certificate`] accepts against (Mₙ, 0); a `NontrivialWithWitness`
/// verdict carries a reproducible invariant obstruction. `Unknown` is a
/// normal outcome for the cases the underlying arguments do not cover.
#[derive(Debug, Clone, PartialEq)]
pub enum TrivialityVerdict<K: DiffField> {
    TrivialWithCertificate(GaugeCertificate<K>),
    NontrivialWithWitness(SeparationWitness),
    Unknown,
}

impl<K: DiffField> TrivialityVerdict<K> {
    pub fn status_label(&self) -> &'static str {
        match self {
            TrivialityVerdict::TrivialWithCertificate(_) => "TrivialWithCertificate",
            TrivialityVerdict::NontrivialWithWitness(_) => "NontrivialWithWitness",
            TrivialityVerdict::Unknown => "Unknown",
        }
    }
}

/// θ = trace(Z)/n and N = Z − θI when N is nilpotent; the unique such
/// decomposition into a scalar plus a nilpotent, if one exists.
fn scalar_plus_nilpotent<K: DiffField>(z: &Matrix<K>) -> Option<(K, Matrix<K>)> {
    let n = z.rows();
    let theta = z
        .trace()
        .expect("square")
        .mul(&K::from_i64(n as i64).inv().expect("n > 0"));
    let nilp = z.sub(&Matrix::scalar(n, &theta)).expect("same shape");
    if nilp.pow(n).expect("square").is_zero() {
        Some((theta, nilp))
    } else {
        None
    }
}

impl DiffAlgebra<Rational> {
    /// Over ℚ the decision is complete: trivial iff Z is scalar.
    ///
    /// A nonzero adjoint operator survives tensoring with any (M_p, 0) and
    /// can never become the trivial derivation, so non-scalar Z is
    /// definitively nontrivial.
    pub fn decide_trivial(&self) -> TrivialityVerdict<Rational> {
        match self.scalar_obstruction() {
            None => {
                let theta = self.z().at(0, 0).clone();
                let shift = if theta.is_zero() { None } else { Some(theta) };
                let cert = GaugeCertificate::new(Matrix::identity(self.n()), shift);
                debug_assert!(
                    verify_certificate(self, &DiffAlgebra::trivial(self.n()), &cert).unwrap()
                );
                TrivialityVerdict::TrivialWithCertificate(cert)
            }
            Some(witness) => TrivialityVerdict::NontrivialWithWitness(witness),
        }
    }

    /// A ScalarTest witness iff Z is not a scalar matrix; `None` iff Z = cI.
    ///
    /// The two differing invariant values compare the algebra against the
    /// trivial class: its e-value set against {0} when they differ,
    /// otherwise its nilpotency index against 1.
    pub fn scalar_obstruction(&self) -> Option<SeparationWitness> {
        let z = self.z();
        let theta = z.at(0, 0).clone();
        if z == &Matrix::scalar(self.n(), &theta) {
            return None;
        }
        let report = eig_diff_report(self);
        let evalues = report.e_value_set.clone().expect("constant base is stable");
        let zero_only: std::collections::BTreeSet<Rational> =
            std::iter::once(rat_int(0)).collect();
        if evalues != zero_only {
            return Some(SeparationWitness {
                kind: WitnessKind::ScalarTest,
                left: WitnessValue::Set(evalues),
                right: WitnessValue::Set(zero_only),
            });
        }
        // All eigenvalue differences vanish yet Z is not scalar: the adjoint
        // operator is nilpotent of index > 1.
        Some(SeparationWitness {
            kind: WitnessKind::ScalarTest,
            left: WitnessValue::Index(report.nilpotency_index),
            right: WitnessValue::Index(Some(1)),
        })
    }
}

impl DiffAlgebra<RationalFunction> {
    /// Decision over ℚ(x); see the module docs for the three regimes.
    pub fn decide_trivial(&self) -> TrivialityVerdict<RationalFunction> {
        self.decide_trivial_with_hint(None)
    }

    /// Like [`Self::decide_trivial`], but first tries a user-supplied
    /// certificate against (Mₙ, 0); when it verifies, the verdict is
    /// trivial regardless of what the built-in arguments cover.
    pub fn decide_trivial_with_hint(
        &self,
        hint: Option<&GaugeCertificate<RationalFunction>>,
    ) -> TrivialityVerdict<RationalFunction> {
        if let Some(cert) = hint {
            if let Ok(true) = verify_certificate(self, &DiffAlgebra::trivial(self.n()), cert) {
                return TrivialityVerdict::TrivialWithCertificate(cert.clone());
            }
        }
        if !self.z().is_constant() {
            return TrivialityVerdict::Unknown;
        }
        if let Ok(cert) = self.nilpotent_exp_certificate() {
            return TrivialityVerdict::TrivialWithCertificate(cert);
        }
        let report = eig_diff_report(self);
        let evalues = report.e_value_set.clone().expect("constant Z");
        if evalues.iter().any(|v| !v.is_zero()) {
            let zero_only: std::collections::BTreeSet<Rational> =
                std::iter::once(rat_int(0)).collect();
            return TrivialityVerdict::NontrivialWithWitness(SeparationWitness {
                kind: WitnessKind::EValueSet,
                left: WitnessValue::Set(evalues),
                right: WitnessValue::Set(zero_only),
            });
        }
        // No rational obstruction and no nilpotent trivialization: the
        // characteristic polynomial has irrational or complex roots.
        debug_assert!(!report.splits);
        TrivialityVerdict::Unknown
    }

    /// For constant Z = θI + N with N nilpotent, the certificate
    /// Y = Σ_k (−Nx)^k / k! (a finite sum with polynomial entries), which
    /// satisfies Y′ = −NY; the scalar part θ is carried as the shift.
    pub fn nilpotent_exp_certificate(
        &self,
    ) -> Result<GaugeCertificate<RationalFunction>, Error> {
        let z_const = self
            .z()
            .to_rational_matrix()
            .ok_or_else(|| Error::NonConstantDerivation("certificate needs constant Z".into()))?;
        let (theta, nilp) = scalar_plus_nilpotent(&z_const).ok_or(Error::NotScalarPlusNilpotent)?;

        let n = self.n();
        let minus_nx = Matrix::<RationalFunction>::from_rational_matrix(&nilp)
            .scalar_mul(&RationalFunction::x())
            .neg();
        let mut y: Matrix<RationalFunction> = Matrix::identity(n);
        let mut term: Matrix<RationalFunction> = Matrix::identity(n);
        let mut factorial = Rational::from_integer(1.into());
        for k in 1..n {
            term = term.mul(&minus_nx).expect("square");
            factorial = factorial * rat_int(k as i64);
            let inv = RationalFunction::constant(Rational::from_integer(1.into()) / factorial.clone());
            y = y.add(&term.scalar_mul(&inv)).expect("square");
        }
        let shift = if theta.is_zero() {
            None
        } else {
            Some(RationalFunction::constant(theta))
        };
        let cert = GaugeCertificate::new(y, shift);
        debug_assert!(verify_certificate(self, &DiffAlgebra::trivial(n), &cert).unwrap());
        Ok(cert)
    }
}

/// Verdict variants without the scalar type, for JSON and the CLI.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyVerdict {
    TrivialQ(GaugeCertificate<Rational>),
    TrivialQx(GaugeCertificate<RationalFunction>),
    Nontrivial(SeparationWitness),
    Unknown,
}

impl AnyVerdict {
    pub fn status_label(&self) -> &'static str {
        match self {
            AnyVerdict::TrivialQ(_) | AnyVerdict::TrivialQx(_) => "TrivialWithCertificate",
            AnyVerdict::Nontrivial(_) => "NontrivialWithWitness",
            AnyVerdict::Unknown => "Unknown",
        }
    }
}

/// Dispatches the triviality decision over the runtime base ring.
pub fn decide_trivial_any(
    alg: &AnyAlgebra,
    hint_qx: Option<&GaugeCertificate<RationalFunction>>,
    hint_q: Option<&GaugeCertificate<Rational>>,
) -> AnyVerdict {
    match alg {
        AnyAlgebra::Q(a) => {
            if let Some(cert) = hint_q {
                if let Ok(true) = verify_certificate(a, &DiffAlgebra::trivial(a.n()), cert) {
                    return AnyVerdict::TrivialQ(cert.clone());
                }
            }
            match a.decide_trivial() {
                TrivialityVerdict::TrivialWithCertificate(c) => AnyVerdict::TrivialQ(c),
                TrivialityVerdict::NontrivialWithWitness(w) => AnyVerdict::Nontrivial(w),
                TrivialityVerdict::Unknown => AnyVerdict::Unknown,
            }
        }
        AnyAlgebra::Qx(a) => match a.decide_trivial_with_hint(hint_qx) {
            TrivialityVerdict::TrivialWithCertificate(c) => AnyVerdict::TrivialQx(c),
            TrivialityVerdict::NontrivialWithWitness(w) => AnyVerdict::Nontrivial(w),
            TrivialityVerdict::Unknown => AnyVerdict::Unknown,
        },
    }
}
