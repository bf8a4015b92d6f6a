//! Canonical JSON encodings for every public value.
//!
//! Encodings follow fixed schemas: rationals are strings "p/q" or "p",
//! polynomials are arrays of rational strings constant-first, rational
//! functions are {"num": [...], "den": [...]}, matrices are nested
//! row-major arrays, algebras are {"base", "n", "Z"}. `serde_json`'s
//! default map keeps keys sorted, so identical values always serialize to
//! identical bytes. Decoders accept plain integers wherever a rational
//! string is expected, and accept rational shorthand for constant ℚ(x)
//! entries; encoders always emit the canonical long form.

use serde_json::{json, Map, Value};

use crate::diffalg::{AnyAlgebra, AnyCertificate, DiffAlgebra, GaugeCertificate};
use crate::error::Error;
use crate::exactnum::{
    parse_rational, rational_to_string, BaseRing, DiffField, Matrix, Polynomial, Rational,
    RationalFunction,
};
use crate::invariants::{InvariantReport, SeparationWitness, WitnessKind, WitnessValue};
use crate::monoid::{FiniteCommutativeMonoid, QuotientMonoid};
use crate::registry::{ClassRegistry, EquivalenceRecord, RegistryEntry, SeparationRecord};
use crate::triviality::AnyVerdict;

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

// ---------------------------------------------------------------- scalars

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(rational_to_string(r))
}

pub fn rational_from_json(v: &Value) -> Result<Rational, Error> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| bad(format!("expected an integer or rational string, got {n}")))?;
            Ok(crate::exactnum::rat_int(i))
        }
        other => Err(bad(format!("expected a rational, got {other}"))),
    }
}

pub fn polynomial_to_json(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn polynomial_from_json(v: &Value) -> Result<Polynomial, Error> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad(format!("expected a coefficient array, got {v}")))?;
    let coeffs = arr
        .iter()
        .map(rational_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(coeffs))
}

pub fn ratfunc_to_json(f: &RationalFunction) -> Value {
    json!({
        "num": polynomial_to_json(f.num()),
        "den": polynomial_to_json(f.den()),
    })
}

pub fn ratfunc_from_json(v: &Value) -> Result<RationalFunction, Error> {
    match v {
        Value::Object(map) => {
            let num = map.get("num").ok_or_else(|| bad("rational function needs \"num\""))?;
            let den = map.get("den").ok_or_else(|| bad("rational function needs \"den\""))?;
            RationalFunction::new(polynomial_from_json(num)?, polynomial_from_json(den)?)
        }
        // Rational shorthand for constants.
        Value::String(_) | Value::Number(_) => {
            Ok(RationalFunction::constant(rational_from_json(v)?))
        }
        other => Err(bad(format!("expected a rational function, got {other}"))),
    }
}

/// Scalar encoding of one base-ring element: rational string over ℚ, the
/// long {"num","den"} form over ℚ(x).
pub fn scalar_to_json<K: DiffField>(s: &K) -> Value {
    match K::base_ring() {
        BaseRing::ConstantField => rational_to_json(&s.to_rational().expect("constant field")),
        BaseRing::RationalFunctionField => ratfunc_to_json(&s.to_ratfunc()),
    }
}

pub fn q_matrix_to_json(m: &Matrix<Rational>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array((0..m.cols()).map(|j| rational_to_json(m.at(i, j))).collect())
            })
            .collect(),
    )
}

pub fn qx_matrix_to_json(m: &Matrix<RationalFunction>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array((0..m.cols()).map(|j| ratfunc_to_json(m.at(i, j))).collect())
            })
            .collect(),
    )
}

fn matrix_rows_from_json(v: &Value) -> Result<Vec<&Vec<Value>>, Error> {
    let rows = v
        .as_array()
        .ok_or_else(|| bad(format!("expected a matrix (array of rows), got {v}")))?;
    if rows.is_empty() {
        return Err(bad("matrix must have at least one row"));
    }
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| bad(format!("expected a matrix row (array), got {r}")))
        })
        .collect()
}

pub fn q_matrix_from_json(v: &Value) -> Result<Matrix<Rational>, Error> {
    let rows = matrix_rows_from_json(v)?;
    let parsed = rows
        .into_iter()
        .map(|r| r.iter().map(rational_from_json).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(parsed)
}

pub fn qx_matrix_from_json(v: &Value) -> Result<Matrix<RationalFunction>, Error> {
    let rows = matrix_rows_from_json(v)?;
    let parsed = rows
        .into_iter()
        .map(|r| r.iter().map(ratfunc_from_json).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(parsed)
}

// --------------------------------------------------------------- algebras

pub fn base_ring_to_json(b: BaseRing) -> Value {
    Value::String(b.label().to_string())
}

pub fn base_ring_from_json(v: &Value) -> Result<BaseRing, Error> {
    match v.as_str() {
        Some("Q") => Ok(BaseRing::ConstantField),
        Some("Q(x)") => Ok(BaseRing::RationalFunctionField),
        _ => Err(bad(format!("unsupported base ring {v}; use \"Q\" or \"Q(x)\""))),
    }
}

pub fn algebra_to_json(alg: &AnyAlgebra) -> Value {
    let (base, n, z) = match alg {
        AnyAlgebra::Q(a) => (BaseRing::ConstantField, a.n(), q_matrix_to_json(a.z())),
        AnyAlgebra::Qx(a) => (
            BaseRing::RationalFunctionField,
            a.n(),
            qx_matrix_to_json(a.z()),
        ),
    };
    json!({ "base": base_ring_to_json(base), "n": n, "Z": z })
}

pub fn algebra_from_json(v: &Value) -> Result<AnyAlgebra, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad(format!("expected an algebra object, got {v}")))?;
    let base = base_ring_from_json(obj.get("base").ok_or_else(|| bad("algebra needs \"base\""))?)?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("algebra needs a positive integer \"n\""))? as usize;
    let z = obj.get("Z").ok_or_else(|| bad("algebra needs \"Z\""))?;
    let alg = match base {
        BaseRing::ConstantField => AnyAlgebra::Q(DiffAlgebra::new(q_matrix_from_json(z)?)?),
        BaseRing::RationalFunctionField => {
            AnyAlgebra::Qx(DiffAlgebra::new(qx_matrix_from_json(z)?)?)
        }
    };
    if alg.n() != n {
        return Err(bad(format!(
            "declared n = {n} does not match the {}x{} matrix Z",
            alg.n(),
            alg.n()
        )));
    }
    Ok(alg)
}

pub fn certificate_to_json(cert: &AnyCertificate) -> Value {
    match cert {
        AnyCertificate::Q(c) => {
            let mut map = Map::new();
            map.insert("Y".into(), q_matrix_to_json(&c.y));
            if let Some(shift) = &c.scalar_shift {
                map.insert("c".into(), rational_to_json(shift));
            }
            Value::Object(map)
        }
        AnyCertificate::Qx(c) => {
            let mut map = Map::new();
            map.insert("Y".into(), qx_matrix_to_json(&c.y));
            if let Some(shift) = &c.scalar_shift {
                map.insert("c".into(), ratfunc_to_json(shift));
            }
            Value::Object(map)
        }
    }
}

/// Certificates do not carry a base tag; the expected base comes from the
/// algebras they certify.
pub fn certificate_from_json(v: &Value, base: BaseRing) -> Result<AnyCertificate, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad(format!("expected a certificate object, got {v}")))?;
    let y = obj.get("Y").ok_or_else(|| bad("certificate needs \"Y\""))?;
    match base {
        BaseRing::ConstantField => {
            let shift = obj.get("c").map(rational_from_json).transpose()?;
            Ok(AnyCertificate::Q(GaugeCertificate::new(
                q_matrix_from_json(y)?,
                shift,
            )))
        }
        BaseRing::RationalFunctionField => {
            let shift = obj.get("c").map(ratfunc_from_json).transpose()?;
            Ok(AnyCertificate::Qx(GaugeCertificate::new(
                qx_matrix_from_json(y)?,
                shift,
            )))
        }
    }
}

// ------------------------------------------------------------- invariants

fn rational_set_to_json(set: &std::collections::BTreeSet<Rational>) -> Value {
    Value::Array(set.iter().map(rational_to_json).collect())
}

pub fn report_to_json<K: DiffField>(r: &InvariantReport<K>) -> Value {
    let char_poly = Value::Array(r.ad_char_poly.iter().map(scalar_to_json).collect());
    json!({
        "base": base_ring_to_json(r.base),
        "n": r.n,
        "ad_char_poly": char_poly,
        "ad_squarefree": r.ad_squarefree.as_ref().map(polynomial_to_json).unwrap_or(Value::Null),
        "root_multiset": Value::Array(r.root_multiset.iter().map(rational_to_json).collect()),
        "splits": r.splits,
        "nilpotency_index": r.nilpotency_index.map(|k| json!(k)).unwrap_or(Value::Null),
        "e_value_set": r.e_value_set.as_ref().map(rational_set_to_json).unwrap_or(Value::Null),
        "stable": r.stable,
    })
}

pub fn witness_value_to_json(v: &WitnessValue) -> Value {
    match v {
        WitnessValue::Set(s) => rational_set_to_json(s),
        WitnessValue::Index(i) => i.map(|k| json!(k)).unwrap_or(Value::Null),
    }
}

fn witness_value_from_json(v: &Value, kind: WitnessKind) -> Result<WitnessValue, Error> {
    match kind {
        WitnessKind::NilpotencyIndex => match v {
            Value::Null => Ok(WitnessValue::Index(None)),
            Value::Number(n) => Ok(WitnessValue::Index(Some(
                n.as_u64().ok_or_else(|| bad("index must be a nonnegative integer"))? as usize,
            ))),
            other => Err(bad(format!("expected an index, got {other}"))),
        },
        WitnessKind::EValueSet | WitnessKind::RootSet => {
            let arr = v
                .as_array()
                .ok_or_else(|| bad(format!("expected a value set, got {v}")))?;
            let set = arr
                .iter()
                .map(rational_from_json)
                .collect::<Result<std::collections::BTreeSet<_>, _>>()?;
            Ok(WitnessValue::Set(set))
        }
        WitnessKind::ScalarTest => match v {
            Value::Array(_) => {
                let arr = v.as_array().unwrap();
                let set = arr
                    .iter()
                    .map(rational_from_json)
                    .collect::<Result<std::collections::BTreeSet<_>, _>>()?;
                Ok(WitnessValue::Set(set))
            }
            Value::Null => Ok(WitnessValue::Index(None)),
            Value::Number(n) => Ok(WitnessValue::Index(Some(
                n.as_u64().ok_or_else(|| bad("index must be a nonnegative integer"))? as usize,
            ))),
            other => Err(bad(format!("unsupported witness value {other}"))),
        },
    }
}

pub fn witness_to_json(w: &SeparationWitness) -> Value {
    json!({
        "kind": w.kind.label(),
        "left": witness_value_to_json(&w.left),
        "right": witness_value_to_json(&w.right),
    })
}

pub fn witness_from_json(v: &Value) -> Result<SeparationWitness, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad(format!("expected a witness object, got {v}")))?;
    let kind = match obj.get("kind").and_then(Value::as_str) {
        Some("EValueSet") => WitnessKind::EValueSet,
        Some("RootSet") => WitnessKind::RootSet,
        Some("NilpotencyIndex") => WitnessKind::NilpotencyIndex,
        Some("ScalarTest") => WitnessKind::ScalarTest,
        other => return Err(bad(format!("unsupported witness kind {other:?}"))),
    };
    let left = witness_value_from_json(
        obj.get("left").ok_or_else(|| bad("witness needs \"left\""))?,
        kind,
    )?;
    let right = witness_value_from_json(
        obj.get("right").ok_or_else(|| bad("witness needs \"right\""))?,
        kind,
    )?;
    Ok(SeparationWitness { kind, left, right })
}

pub fn verdict_to_json(v: &AnyVerdict) -> Value {
    let certificate = match v {
        AnyVerdict::TrivialQ(c) => certificate_to_json(&AnyCertificate::Q(c.clone())),
        AnyVerdict::TrivialQx(c) => certificate_to_json(&AnyCertificate::Qx(c.clone())),
        _ => Value::Null,
    };
    let witness = match v {
        AnyVerdict::Nontrivial(w) => witness_to_json(w),
        _ => Value::Null,
    };
    json!({
        "status": v.status_label(),
        "certificate": certificate,
        "witness": witness,
    })
}

// ---------------------------------------------------------------- monoids

pub fn monoid_to_json(m: &FiniteCommutativeMonoid) -> Value {
    json!({
        "size": m.size(),
        "identity": m.identity(),
        "table": m.table_rows(),
    })
}

pub fn monoid_from_json(v: &Value) -> Result<FiniteCommutativeMonoid, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad(format!("expected a monoid object, got {v}")))?;
    let size = obj
        .get("size")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("monoid needs \"size\""))? as usize;
    let identity = obj
        .get("identity")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("monoid needs \"identity\""))? as usize;
    let table_v = obj
        .get("table")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("monoid needs \"table\""))?;
    let table = table_v
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("table rows must be arrays"))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| bad("table entries must be indices"))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    FiniteCommutativeMonoid::new(size, identity, table)
}

pub fn subset_from_json(v: &Value) -> Result<Vec<usize>, Error> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad(format!("expected an index array, got {v}")))?;
    let mut out = arr
        .iter()
        .map(|e| {
            e.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| bad("subset entries must be indices"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn quotient_to_json(q: &QuotientMonoid) -> Value {
    json!({
        "classes": q.classes(),
        "class_of": (0..q.classes().iter().map(|c| c.len()).sum::<usize>())
            .map(|e| q.class_of(e))
            .collect::<Vec<_>>(),
        "identity": q.monoid().identity(),
        "table": q.monoid().table_rows(),
    })
}

// --------------------------------------------------------------- registry

pub fn registry_to_json(reg: &ClassRegistry) -> Value {
    let algebras: Vec<Value> = reg
        .entries()
        .iter()
        .map(|e| {
            json!({
                "algebra": algebra_to_json(&e.algebra),
                "tensor_of": e.tensor_of.map(|(a, b)| json!([a, b])).unwrap_or(Value::Null),
            })
        })
        .collect();
    let equivalences: Vec<Value> = reg
        .equivalences()
        .iter()
        .map(|e| {
            json!({
                "left": e.left,
                "right": e.right,
                "left_amp": e.left_amp,
                "right_amp": e.right_amp,
                "certificate": certificate_to_json(&e.certificate),
            })
        })
        .collect();
    let separations: Vec<Value> = reg
        .separations()
        .iter()
        .map(|s| {
            json!({
                "left": s.left,
                "right": s.right,
                "witness": witness_to_json(&s.witness),
            })
        })
        .collect();
    json!({
        "algebras": algebras,
        "equivalences": equivalences,
        "separations": separations,
    })
}

/// Rebuilds a registry from its JSON document with full re-verification of
/// every certificate, witness, and the contradiction audit.
pub fn registry_from_json(v: &Value) -> Result<ClassRegistry, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad(format!("expected a registry object, got {v}")))?;
    let mut entries = Vec::new();
    for item in obj
        .get("algebras")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("registry needs \"algebras\""))?
    {
        let rec = item
            .as_object()
            .ok_or_else(|| bad("algebra entries must be objects"))?;
        let algebra = algebra_from_json(
            rec.get("algebra").ok_or_else(|| bad("entry needs \"algebra\""))?,
        )?;
        let tensor_of = match rec.get("tensor_of") {
            None | Some(Value::Null) => None,
            Some(Value::Array(pair)) if pair.len() == 2 => {
                let a = pair[0].as_u64().ok_or_else(|| bad("tensor_of indices"))? as usize;
                let b = pair[1].as_u64().ok_or_else(|| bad("tensor_of indices"))? as usize;
                Some((a, b))
            }
            Some(other) => return Err(bad(format!("bad tensor_of {other}"))),
        };
        entries.push(RegistryEntry { algebra, tensor_of });
    }

    let mut equivalences = Vec::new();
    for item in obj
        .get("equivalences")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("registry needs \"equivalences\""))?
    {
        let rec = item
            .as_object()
            .ok_or_else(|| bad("equivalence records must be objects"))?;
        let left = rec.get("left").and_then(Value::as_u64).ok_or_else(|| bad("left"))? as usize;
        let right = rec.get("right").and_then(Value::as_u64).ok_or_else(|| bad("right"))? as usize;
        let left_amp = rec
            .get("left_amp")
            .and_then(Value::as_u64)
            .unwrap_or(1) as usize;
        let right_amp = rec
            .get("right_amp")
            .and_then(Value::as_u64)
            .unwrap_or(1) as usize;
        let base = entries
            .get(left)
            .ok_or(Error::BadIndex(left))?
            .algebra
            .base();
        let certificate = certificate_from_json(
            rec.get("certificate")
                .ok_or_else(|| bad("equivalence needs \"certificate\""))?,
            base,
        )?;
        equivalences.push(EquivalenceRecord {
            left,
            right,
            left_amp,
            right_amp,
            certificate,
        });
    }

    let mut separations = Vec::new();
    for item in obj
        .get("separations")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("registry needs \"separations\""))?
    {
        let rec = item
            .as_object()
            .ok_or_else(|| bad("separation records must be objects"))?;
        let left = rec.get("left").and_then(Value::as_u64).ok_or_else(|| bad("left"))? as usize;
        let right = rec.get("right").and_then(Value::as_u64).ok_or_else(|| bad("right"))? as usize;
        let witness =
            witness_from_json(rec.get("witness").ok_or_else(|| bad("separation needs witness"))?)?;
        separations.push(SeparationRecord {
            left,
            right,
            witness,
        });
    }

    let reg = ClassRegistry::from_parts(entries, equivalences, separations);
    reg.reverify()?;
    Ok(reg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    #[test]
    fn rational_round_trip() {
        for r in [rat(3, 2), rat_int(-7), rat_int(0), rat(-22, 7)] {
            let v = rational_to_json(&r);
            assert_eq!(rational_from_json(&v).unwrap(), r);
        }
        assert_eq!(rational_from_json(&json!(5)).unwrap(), rat_int(5));
        assert!(rational_from_json(&json!(1.5)).is_err());
        assert!(rational_from_json(&json!("1/0")).is_err());
    }

    #[test]
    fn algebra_round_trip_q() {
        let v = json!({"base": "Q", "n": 2, "Z": [["0", "1"], ["0", "0"]]});
        let alg = algebra_from_json(&v).unwrap();
        assert_eq!(alg.base(), BaseRing::ConstantField);
        let back = algebra_to_json(&alg);
        assert_eq!(algebra_from_json(&back).unwrap(), alg);
    }

    #[test]
    fn algebra_round_trip_qx_with_shorthand() {
        let v = json!({
            "base": "Q(x)",
            "n": 2,
            "Z": [[0, {"num": ["0", "1"], "den": ["1"]}], [0, 0]],
        });
        let alg = algebra_from_json(&v).unwrap();
        let back = algebra_to_json(&alg);
        // Canonical form uses the long encoding throughout.
        let reparsed = algebra_from_json(&back).unwrap();
        assert_eq!(reparsed, alg);
        assert_eq!(serde_json::to_string(&back).unwrap(), serde_json::to_string(&algebra_to_json(&reparsed)).unwrap());
    }

    #[test]
    fn algebra_errors() {
        assert!(algebra_from_json(&json!({"base": "R", "n": 1, "Z": [["0"]]})).is_err());
        assert!(algebra_from_json(&json!({"base": "Q", "n": 3, "Z": [["0"]]})).is_err());
        assert!(algebra_from_json(&json!({"base": "Q", "n": 2, "Z": [["0", "1"]]})).is_err());
    }

    #[test]
    fn witness_round_trip() {
        let w = SeparationWitness {
            kind: WitnessKind::EValueSet,
            left: WitnessValue::Set([rat_int(0), rat_int(1)].into_iter().collect()),
            right: WitnessValue::Set([rat_int(0)].into_iter().collect()),
        };
        let v = witness_to_json(&w);
        assert_eq!(witness_from_json(&v).unwrap(), w);

        let w = SeparationWitness {
            kind: WitnessKind::NilpotencyIndex,
            left: WitnessValue::Index(Some(3)),
            right: WitnessValue::Index(None),
        };
        let v = witness_to_json(&w);
        assert_eq!(witness_from_json(&v).unwrap(), w);
    }

    #[test]
    fn monoid_round_trip() {
        let m = FiniteCommutativeMonoid::z_mod_mul(6);
        let v = monoid_to_json(&m);
        assert_eq!(monoid_from_json(&v).unwrap(), m);
        assert!(monoid_from_json(&json!({"size": 2, "identity": 0, "table": [[0, 1], [1, 7]]})).is_err());
    }
}
