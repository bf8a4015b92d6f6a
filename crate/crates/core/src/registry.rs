//! A store of differential-algebra presentations with verified equivalence
//! certificates and separation witnesses, realizing the class structure of
//! the matrix differential Brauer monoid at desk scale.
//!
//! Equivalence records may involve matrix amplification: a record with
//! amplifications (p, q) certifies that tensoring the left entry with
//! (M_p, 0) and the right with (M_q, 0) gives gauge-equivalent algebras.
//! Certificates compose along paths, extend under amplification, and
//! combine under tensor products (Kronecker product of certificates,
//! conjugated by the permutation that reorders tensor factors); every
//! derived certificate is re-verified before it is stored.
//!
//! Queries are safe to run concurrently through shared references;
//! mutations (registering data, which includes the certificates derived by
//! [`ClassRegistry::distinguish`]) require exclusive access, giving the
//! single-writer, multi-reader discipline.

use crate::diffalg::{verify_certificate, AnyAlgebra, AnyCertificate, DiffAlgebra, GaugeCertificate};
use crate::error::Error;
use crate::exactnum::{DiffField, Field, Matrix, Rational, RationalFunction};
use crate::invariants::{eig_diff_report, separate, SeparationWitness, WitnessKind, WitnessValue};

/// Answer of [`ClassRegistry::distinguish`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distinction {
    Equivalent,
    NotEquivalent,
    Unknown,
}

impl Distinction {
    pub fn label(self) -> &'static str {
        match self {
            Distinction::Equivalent => "Equivalent",
            Distinction::NotEquivalent => "NotEquivalent",
            Distinction::Unknown => "Unknown",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RegistryEntry {
    pub algebra: AnyAlgebra,
    /// Present when this entry was registered as the tensor product of two
    /// earlier entries.
    pub tensor_of: Option<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct EquivalenceRecord {
    pub left: usize,
    pub right: usize,
    /// Tensor the left entry with (M_p, 0) before applying the certificate.
    pub left_amp: usize,
    /// Tensor the right entry with (M_q, 0).
    pub right_amp: usize,
    pub certificate: AnyCertificate,
}

#[derive(Debug, Clone)]
pub struct SeparationRecord {
    pub left: usize,
    pub right: usize,
    pub witness: SeparationWitness,
}

#[derive(Debug, Clone, Default)]
pub struct ClassRegistry {
    entries: Vec<RegistryEntry>,
    equivalences: Vec<EquivalenceRecord>,
    separations: Vec<SeparationRecord>,
}

/// Typed view of the runtime-tagged algebra and certificate values.
pub(crate) trait BaseView: DiffField {
    fn algebra(a: &AnyAlgebra) -> Option<&DiffAlgebra<Self>>;
    fn certificate(c: &AnyCertificate) -> Option<&GaugeCertificate<Self>>;
    fn wrap(c: GaugeCertificate<Self>) -> AnyCertificate;
}

impl BaseView for Rational {
    fn algebra(a: &AnyAlgebra) -> Option<&DiffAlgebra<Self>> {
        match a {
            AnyAlgebra::Q(x) => Some(x),
            _ => None,
        }
    }
    fn certificate(c: &AnyCertificate) -> Option<&GaugeCertificate<Self>> {
        match c {
            AnyCertificate::Q(x) => Some(x),
            _ => None,
        }
    }
    fn wrap(c: GaugeCertificate<Self>) -> AnyCertificate {
        AnyCertificate::Q(c)
    }
}

impl BaseView for RationalFunction {
    fn algebra(a: &AnyAlgebra) -> Option<&DiffAlgebra<Self>> {
        match a {
            AnyAlgebra::Qx(x) => Some(x),
            _ => None,
        }
    }
    fn certificate(c: &AnyCertificate) -> Option<&GaugeCertificate<Self>> {
        match c {
            AnyCertificate::Qx(x) => Some(x),
            _ => None,
        }
    }
    fn wrap(c: GaugeCertificate<Self>) -> AnyCertificate {
        AnyCertificate::Qx(c)
    }
}

/// A certificate edge in transit: tensor(left, M_p) ≅ tensor(right, M_q)
/// via gauge Y with scalar shift c.
struct Edge<K: DiffField> {
    p: usize,
    q: usize,
    y: Matrix<K>,
    shift: Option<K>,
}

impl<K: DiffField> Edge<K> {
    fn identity(n: usize) -> Self {
        Edge {
            p: 1,
            q: 1,
            y: Matrix::identity(n),
            shift: None,
        }
    }

    fn reversed(&self) -> Result<Self, Error> {
        Ok(Edge {
            p: self.q,
            q: self.p,
            y: self.y.inverse()?,
            shift: self.shift.as_ref().map(|c| c.neg()),
        })
    }

    /// Edge a→b followed by edge b→c: amplify the first by the second's
    /// left amplification and the second by the first's right one, so the
    /// middle algebras coincide, then multiply the gauges.
    fn compose(&self, next: &Edge<K>) -> Result<Edge<K>, Error> {
        let y1 = self.y.kron(&Matrix::identity(next.p));
        let y2 = next.y.kron(&Matrix::identity(self.q));
        let shift = match (&self.shift, &next.shift) {
            (None, None) => None,
            (Some(c), None) | (None, Some(c)) => Some(c.clone()),
            (Some(a), Some(b)) => Some(a.add(b)),
        };
        Ok(Edge {
            p: self.p * next.p,
            q: next.q * self.q,
            y: y1.mul(&y2)?,
            shift: shift.filter(|c| !c.is_zero()),
        })
    }
}

/// Permutation matrix K_{a,b} with K·(X ⊗ W)·K⁻¹ = W ⊗ X for X of size a
/// and W of size b; K maps basis vector e_{i·b+j} to e_{j·a+i}.
fn commutation_matrix<K: Field>(a: usize, b: usize) -> Matrix<K> {
    Matrix::from_fn(a * b, a * b, |row, col| {
        let (i, j) = (col / b, col % b);
        if row == j * a + i {
            K::one()
        } else {
            K::zero()
        }
    })
}

impl ClassRegistry {
    pub fn new() -> Self {
        ClassRegistry::default()
    }

    /// Assembles a registry from raw parts without verification; callers
    /// (the JSON loader) must run [`ClassRegistry::reverify`] afterwards.
    pub fn from_parts(
        entries: Vec<RegistryEntry>,
        equivalences: Vec<EquivalenceRecord>,
        separations: Vec<SeparationRecord>,
    ) -> Self {
        ClassRegistry {
            entries,
            equivalences,
            separations,
        }
    }

    pub fn entries(&self) -> &[RegistryEntry] {
        &self.entries
    }

    pub fn equivalences(&self) -> &[EquivalenceRecord] {
        &self.equivalences
    }

    pub fn separations(&self) -> &[SeparationRecord] {
        &self.separations
    }

    pub fn add_algebra(&mut self, algebra: AnyAlgebra) -> usize {
        self.entries.push(RegistryEntry {
            algebra,
            tensor_of: None,
        });
        self.entries.len() - 1
    }

    /// Registers the tensor product of two existing entries, recording the
    /// provenance used for derived certificates.
    pub fn add_tensor(&mut self, left: usize, right: usize) -> Result<usize, Error> {
        let a = self.entry(left)?.algebra.clone();
        let b = self.entry(right)?.algebra.clone();
        let t = a.tensor(&b)?;
        self.entries.push(RegistryEntry {
            algebra: t,
            tensor_of: Some((left, right)),
        });
        Ok(self.entries.len() - 1)
    }

    fn entry(&self, i: usize) -> Result<&RegistryEntry, Error> {
        self.entries.get(i).ok_or(Error::BadIndex(i))
    }

    /// Stores an equivalence after verifying its certificate and checking
    /// that it introduces no contradiction with stored separations.
    pub fn add_equivalence(
        &mut self,
        left: usize,
        right: usize,
        left_amp: usize,
        right_amp: usize,
        certificate: AnyCertificate,
    ) -> Result<(), Error> {
        if left_amp == 0 || right_amp == 0 {
            return Err(Error::DimensionMismatch("amplification must be positive".into()));
        }
        let la = self.entry(left)?.algebra.clone();
        let ra = self.entry(right)?.algebra.clone();
        let ok = match (&la, &ra, &certificate) {
            (AnyAlgebra::Q(a), AnyAlgebra::Q(b), AnyCertificate::Q(c)) => {
                verify_amplified(a, b, left_amp, right_amp, c)?
            }
            (AnyAlgebra::Qx(a), AnyAlgebra::Qx(b), AnyCertificate::Qx(c)) => {
                verify_amplified(a, b, left_amp, right_amp, c)?
            }
            _ => return Err(Error::BaseMismatch),
        };
        if !ok {
            return Err(Error::CertificateInvalid { left, right });
        }
        self.equivalences.push(EquivalenceRecord {
            left,
            right,
            left_amp,
            right_amp,
            certificate,
        });
        if let Err(e) = self.audit_consistency() {
            self.equivalences.pop();
            return Err(e);
        }
        Ok(())
    }

    /// Computes a separation witness for the pair via the stable invariants
    /// and stores it. Errors when no witness exists or the inputs are
    /// unstable.
    pub fn add_separation(&mut self, left: usize, right: usize) -> Result<SeparationWitness, Error> {
        let la = self.entry(left)?.algebra.clone();
        let ra = self.entry(right)?.algebra.clone();
        let witness = match (&la, &ra) {
            (AnyAlgebra::Q(a), AnyAlgebra::Q(b)) => separate(a, b)?,
            (AnyAlgebra::Qx(a), AnyAlgebra::Qx(b)) => separate(a, b)?,
            _ => return Err(Error::BaseMismatch),
        };
        let witness = witness.ok_or(Error::WitnessInvalid { left, right })?;
        self.separations.push(SeparationRecord {
            left,
            right,
            witness: witness.clone(),
        });
        if let Err(e) = self.audit_consistency() {
            self.separations.pop();
            return Err(e);
        }
        Ok(witness)
    }

    /// Union-find components of the stored equivalences.
    fn components(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.entries.len()).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.equivalences {
            let (a, b) = (find(&mut parent, e.left), find(&mut parent, e.right));
            if a != b {
                parent[a] = b;
            }
        }
        (0..self.entries.len())
            .map(|i| find(&mut parent, i))
            .collect()
    }

    /// No pair may lie both in the equivalence closure and in a stored
    /// separation.
    pub fn audit_consistency(&self) -> Result<(), Error> {
        let comp = self.components();
        for s in &self.separations {
            if comp[s.left] == comp[s.right] {
                return Err(Error::RegistryContradiction {
                    left: s.left,
                    right: s.right,
                });
            }
        }
        Ok(())
    }

    /// Re-verifies every stored certificate and witness; used after loading
    /// a persisted registry.
    pub fn reverify(&self) -> Result<(), Error> {
        for e in &self.equivalences {
            let la = &self.entry(e.left)?.algebra;
            let ra = &self.entry(e.right)?.algebra;
            let ok = match (la, ra, &e.certificate) {
                (AnyAlgebra::Q(a), AnyAlgebra::Q(b), AnyCertificate::Q(c)) => {
                    verify_amplified(a, b, e.left_amp, e.right_amp, c)?
                }
                (AnyAlgebra::Qx(a), AnyAlgebra::Qx(b), AnyCertificate::Qx(c)) => {
                    verify_amplified(a, b, e.left_amp, e.right_amp, c)?
                }
                _ => false,
            };
            if !ok {
                return Err(Error::CertificateInvalid {
                    left: e.left,
                    right: e.right,
                });
            }
        }
        for s in &self.separations {
            let la = &self.entry(s.left)?.algebra;
            let ra = &self.entry(s.right)?.algebra;
            let fresh = match (la, ra) {
                (AnyAlgebra::Q(a), AnyAlgebra::Q(b)) => reproduce_witness(a, b, &s.witness),
                (AnyAlgebra::Qx(a), AnyAlgebra::Qx(b)) => reproduce_witness(a, b, &s.witness),
                _ => false,
            };
            if !fresh {
                return Err(Error::WitnessInvalid {
                    left: s.left,
                    right: s.right,
                });
            }
        }
        self.audit_consistency()
    }

    /// Decides the relationship of two registered presentations.
    ///
    /// Equivalent when the pair lies in the reflexive-symmetric-transitive
    /// closure of stored equivalences; NotEquivalent on a stored or freshly
    /// computed separation witness (fresh ones are stored); tensor products
    /// of certified-equivalent components become Equivalent with a derived,
    /// verified, stored Kronecker certificate; otherwise Unknown.
    pub fn distinguish(&mut self, left: usize, right: usize) -> Result<Distinction, Error> {
        self.entry(left)?;
        self.entry(right)?;
        self.audit_consistency()?;

        let comp = self.components();
        if comp[left] == comp[right] {
            return Ok(Distinction::Equivalent);
        }
        if self
            .separations
            .iter()
            .any(|s| (s.left, s.right) == (left, right) || (s.right, s.left) == (left, right))
        {
            return Ok(Distinction::NotEquivalent);
        }

        // Tensor compatibility: certified components give a derived
        // certificate for the products.
        if let (Some((s, t)), Some((u, v))) = (
            self.entry(left)?.tensor_of,
            self.entry(right)?.tensor_of,
        ) {
            if comp[s] == comp[u] && comp[t] == comp[v] {
                let derived = match &self.entry(left)?.algebra {
                    AnyAlgebra::Q(_) => self.derive_tensor_certificate::<Rational>(left, right, s, t, u, v),
                    AnyAlgebra::Qx(_) => {
                        self.derive_tensor_certificate::<RationalFunction>(left, right, s, t, u, v)
                    }
                };
                if let Ok(Some((p, q, cert))) = derived {
                    self.add_equivalence(left, right, p, q, cert)?;
                    return Ok(Distinction::Equivalent);
                }
            }
        }

        // Fresh separation on stable presentations.
        let la = self.entry(left)?.algebra.clone();
        let ra = self.entry(right)?.algebra.clone();
        let fresh = match (&la, &ra) {
            (AnyAlgebra::Q(a), AnyAlgebra::Q(b)) => {
                matches!((a.z().is_constant(), b.z().is_constant()), (true, true))
                    .then(|| separate(a, b))
                    .transpose()?
                    .flatten()
            }
            (AnyAlgebra::Qx(a), AnyAlgebra::Qx(b)) => {
                matches!((a.z().is_constant(), b.z().is_constant()), (true, true))
                    .then(|| separate(a, b))
                    .transpose()?
                    .flatten()
            }
            _ => None,
        };
        if let Some(witness) = fresh {
            self.separations.push(SeparationRecord {
                left,
                right,
                witness,
            });
            self.audit_consistency()?;
            return Ok(Distinction::NotEquivalent);
        }
        Ok(Distinction::Unknown)
    }

    /// Kronecker-derived certificate for tensor entries left = s⊗t and
    /// right = u⊗v with certified s~u and t~v.
    fn derive_tensor_certificate<K: BaseView>(
        &self,
        left: usize,
        right: usize,
        s: usize,
        t: usize,
        u: usize,
        v: usize,
    ) -> Result<Option<(usize, usize, AnyCertificate)>, Error> {
        let e1 = match self.path_edge::<K>(s, u)? {
            Some(e) => e,
            None => return Ok(None),
        };
        let e2 = match self.path_edge::<K>(t, v)? {
            Some(e) => e,
            None => return Ok(None),
        };
        let (ns, nt) = (self.entry(s)?.algebra.n(), self.entry(t)?.algebra.n());
        let (nu, nv) = (self.entry(u)?.algebra.n(), self.entry(v)?.algebra.n());

        // Reorder s ⊗ M_{p1} ⊗ t ⊗ M_{p2} into (s⊗t) ⊗ M_{p1·p2}.
        let p_l = Matrix::<K>::identity(ns)
            .kron(&commutation_matrix::<K>(e1.p, nt))
            .kron(&Matrix::identity(e2.p));
        let p_r = Matrix::<K>::identity(nu)
            .kron(&commutation_matrix::<K>(e1.q, nv))
            .kron(&Matrix::identity(e2.q));
        let shift = match (&e1.shift, &e2.shift) {
            (None, None) => None,
            (Some(c), None) | (None, Some(c)) => Some(c.clone()),
            (Some(a), Some(b)) => Some(a.add(b)),
        };
        let y = p_l.mul(&e1.y.kron(&e2.y))?.mul(&p_r.inverse()?)?;
        let cert = GaugeCertificate::new(y, shift);

        // Gate on verification before claiming anything.
        let la = K::algebra(&self.entry(left)?.algebra).ok_or(Error::BaseMismatch)?;
        let ra = K::algebra(&self.entry(right)?.algebra).ok_or(Error::BaseMismatch)?;
        let (p, q) = (e1.p * e2.p, e1.q * e2.q);
        if verify_amplified(la, ra, p, q, &cert)? {
            Ok(Some((p, q, K::wrap(cert))))
        } else {
            debug_assert!(false, "derived tensor certificate failed verification");
            Ok(None)
        }
    }

    /// Composes stored certificates along a path from `from` to `to` in the
    /// equivalence graph. Returns None when the nodes are not connected by
    /// same-base edges.
    fn path_edge<K: BaseView>(&self, from: usize, to: usize) -> Result<Option<Edge<K>>, Error> {
        if from == to {
            let n = self.entry(from)?.algebra.n();
            return Ok(Some(Edge::identity(n)));
        }
        let mut frontier: Vec<(usize, Edge<K>)> = vec![(
            from,
            Edge::identity(self.entry(from)?.algebra.n()),
        )];
        let mut visited = vec![false; self.entries.len()];
        visited[from] = true;
        while let Some((node, path)) = frontier.pop() {
            for rec in &self.equivalences {
                let step = if rec.left == node && !visited[rec.right] {
                    let cert = match K::certificate(&rec.certificate) {
                        Some(c) => c,
                        None => continue,
                    };
                    Some((
                        rec.right,
                        Edge {
                            p: rec.left_amp,
                            q: rec.right_amp,
                            y: cert.y.clone(),
                            shift: cert.scalar_shift.clone(),
                        },
                    ))
                } else if rec.right == node && !visited[rec.left] {
                    let cert = match K::certificate(&rec.certificate) {
                        Some(c) => c,
                        None => continue,
                    };
                    let edge = Edge {
                        p: rec.left_amp,
                        q: rec.right_amp,
                        y: cert.y.clone(),
                        shift: cert.scalar_shift.clone(),
                    };
                    Some((rec.left, edge.reversed()?))
                } else {
                    None
                };
                if let Some((next, edge)) = step {
                    let composed = path.compose(&edge)?;
                    if next == to {
                        return Ok(Some(composed));
                    }
                    visited[next] = true;
                    frontier.push((next, composed));
                }
            }
        }
        Ok(None)
    }
}

/// Verifies a certificate between amplified entries:
/// tensor(a, (M_p, 0)) ≅ tensor(b, (M_q, 0)) via `cert`.
fn verify_amplified<K: DiffField>(
    a: &DiffAlgebra<K>,
    b: &DiffAlgebra<K>,
    p: usize,
    q: usize,
    cert: &GaugeCertificate<K>,
) -> Result<bool, Error> {
    let left = a.tensor(&DiffAlgebra::trivial(p));
    let right = b.tensor(&DiffAlgebra::trivial(q));
    if left.n() != right.n() {
        return Err(Error::DimensionMismatch(format!(
            "amplified dimensions differ: {} vs {}",
            left.n(),
            right.n()
        )));
    }
    verify_certificate(&left, &right, cert)
}

/// Checks that a stored witness matches freshly computed invariant data.
fn reproduce_witness<K: DiffField>(
    a: &DiffAlgebra<K>,
    b: &DiffAlgebra<K>,
    witness: &SeparationWitness,
) -> bool {
    if !a.z().is_constant() || !b.z().is_constant() {
        return false;
    }
    let ra = eig_diff_report(a);
    let rb = eig_diff_report(b);
    let (left, right) = match witness.kind {
        WitnessKind::EValueSet | WitnessKind::ScalarTest => (
            WitnessValue::Set(ra.e_value_set.clone().unwrap_or_default()),
            WitnessValue::Set(rb.e_value_set.clone().unwrap_or_default()),
        ),
        WitnessKind::RootSet => (
            WitnessValue::Set(ra.root_set()),
            WitnessValue::Set(rb.root_set()),
        ),
        WitnessKind::NilpotencyIndex => (
            WitnessValue::Index(ra.nilpotency_index),
            WitnessValue::Index(rb.nilpotency_index),
        ),
    };
    witness.left == left && witness.right == right && left != right
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;

    fn xalg(rows: Vec<Vec<i64>>) -> AnyAlgebra {
        let m = Matrix::from_rows(
            rows.into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(RationalFunction::from_i64)
                        .collect::<Vec<_>>()
                })
                .collect(),
        )
        .unwrap();
        AnyAlgebra::Qx(DiffAlgebra::new(m).unwrap())
    }

    fn qalg(rows: Vec<Vec<i64>>) -> AnyAlgebra {
        let m = Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect::<Vec<_>>())
                .collect(),
        )
        .unwrap();
        AnyAlgebra::Q(DiffAlgebra::new(m).unwrap())
    }

    fn e12_certificate() -> AnyCertificate {
        match xalg(vec![vec![0, 1], vec![0, 0]]) {
            AnyAlgebra::Qx(a) => AnyCertificate::Qx(a.nilpotent_exp_certificate().unwrap()),
            _ => unreachable!(),
        }
    }

    #[test]
    fn commutation_matrix_swaps_kron_factors() {
        let a = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(4)],
        ])
        .unwrap();
        let b = Matrix::from_rows(vec![
            vec![rat_int(0), rat_int(1), rat_int(2)],
            vec![rat_int(5), rat_int(0), rat_int(1)],
            vec![rat_int(7), rat_int(1), rat_int(0)],
        ])
        .unwrap();
        let k = commutation_matrix::<Rational>(2, 3);
        let swapped = k
            .mul(&a.kron(&b))
            .unwrap()
            .mul(&k.inverse().unwrap())
            .unwrap();
        assert_eq!(swapped, b.kron(&a));
    }

    #[test]
    fn identity_pairs_are_equivalent() {
        let mut reg = ClassRegistry::new();
        let i = reg.add_algebra(xalg(vec![vec![0, 1], vec![0, 0]]));
        assert_eq!(reg.distinguish(i, i).unwrap(), Distinction::Equivalent);
    }

    #[test]
    fn registered_certificate_makes_pair_equivalent() {
        let mut reg = ClassRegistry::new();
        let a = reg.add_algebra(xalg(vec![vec![0, 1], vec![0, 0]]));
        let b = reg.add_algebra(xalg(vec![vec![0, 0], vec![0, 0]]));
        assert_eq!(reg.distinguish(a, b).unwrap(), Distinction::Unknown);
        reg.add_equivalence(a, b, 1, 1, e12_certificate()).unwrap();
        assert_eq!(reg.distinguish(a, b).unwrap(), Distinction::Equivalent);
        assert_eq!(reg.distinguish(b, a).unwrap(), Distinction::Equivalent);
    }

    #[test]
    fn fresh_separation_is_found_and_stored() {
        let mut reg = ClassRegistry::new();
        let a = reg.add_algebra(xalg(vec![vec![2, 0], vec![0, 1]]));
        let b = reg.add_algebra(xalg(vec![vec![3, 0], vec![0, 1]]));
        assert_eq!(reg.distinguish(a, b).unwrap(), Distinction::NotEquivalent);
        assert_eq!(reg.separations().len(), 1);
        // Second query hits the stored record.
        assert_eq!(reg.distinguish(b, a).unwrap(), Distinction::NotEquivalent);
        assert_eq!(reg.separations().len(), 1);
    }

    #[test]
    fn invalid_certificates_are_rejected() {
        let mut reg = ClassRegistry::new();
        let a = reg.add_algebra(xalg(vec![vec![2, 0], vec![0, 1]]));
        let b = reg.add_algebra(xalg(vec![vec![0, 0], vec![0, 0]]));
        let bogus = AnyCertificate::Qx(GaugeCertificate::identity(2));
        assert!(matches!(
            reg.add_equivalence(a, b, 1, 1, bogus),
            Err(Error::CertificateInvalid { .. })
        ));
    }

    #[test]
    fn contradictions_are_detected() {
        let mut reg = ClassRegistry::new();
        let a = reg.add_algebra(xalg(vec![vec![2, 0], vec![0, 1]]));
        let b = reg.add_algebra(xalg(vec![vec![3, 0], vec![0, 1]]));
        reg.add_separation(a, b).unwrap();
        // Force a (bogus but verifying) equivalence via an inconsistent
        // manual record: a=b would need a real certificate, so instead
        // check that audit catches a hand-inserted record.
        reg.equivalences.push(EquivalenceRecord {
            left: a,
            right: b,
            left_amp: 1,
            right_amp: 1,
            certificate: AnyCertificate::Qx(GaugeCertificate::identity(2)),
        });
        assert!(matches!(
            reg.audit_consistency(),
            Err(Error::RegistryContradiction { .. })
        ));
        assert!(reg.distinguish(a, b).is_err());
    }

    #[test]
    fn base_mismatch_is_an_error() {
        let mut reg = ClassRegistry::new();
        let a = reg.add_algebra(qalg(vec![vec![0, 1], vec![0, 0]]));
        let b = reg.add_algebra(xalg(vec![vec![0, 1], vec![0, 0]]));
        assert!(matches!(reg.add_separation(a, b), Err(Error::BaseMismatch)));
        assert_eq!(reg.distinguish(a, b).unwrap(), Distinction::Unknown);
    }

    #[test]
    fn tensor_products_inherit_equivalence_with_derived_certificate() {
        let mut reg = ClassRegistry::new();
        let e12 = reg.add_algebra(xalg(vec![vec![0, 1], vec![0, 0]]));
        let zero = reg.add_algebra(xalg(vec![vec![0, 0], vec![0, 0]]));
        let d21 = reg.add_algebra(xalg(vec![vec![2, 0], vec![0, 1]]));
        reg.add_equivalence(e12, zero, 1, 1, e12_certificate()).unwrap();

        let t1 = reg.add_tensor(e12, d21).unwrap();
        let t2 = reg.add_tensor(zero, d21).unwrap();
        assert_eq!(reg.distinguish(t1, t2).unwrap(), Distinction::Equivalent);
        // The derived certificate is stored and reverifies.
        assert_eq!(reg.equivalences().len(), 2);
        reg.reverify().unwrap();
    }

    #[test]
    fn amplified_equivalence_roundtrip() {
        // e12 ⊗ M_2 trivializes with the Kronecker certificate; register it
        // with amplifications (2, 2) between e12 and 0.
        let (alg, cert) = match xalg(vec![vec![0, 1], vec![0, 0]]) {
            AnyAlgebra::Qx(a) => {
                let c = a.nilpotent_exp_certificate().unwrap();
                (a, c)
            }
            _ => unreachable!(),
        };
        let amp_cert = cert.kron(&GaugeCertificate::identity(2));
        let mut reg = ClassRegistry::new();
        let a = reg.add_algebra(AnyAlgebra::Qx(alg));
        let b = reg.add_algebra(xalg(vec![vec![0, 0], vec![0, 0]]));
        reg.add_equivalence(a, b, 2, 2, AnyCertificate::Qx(amp_cert))
            .unwrap();
        assert_eq!(reg.distinguish(a, b).unwrap(), Distinction::Equivalent);
        reg.reverify().unwrap();
    }
}
