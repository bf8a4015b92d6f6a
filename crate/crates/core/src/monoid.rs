//! Finite commutative monoids given by Cayley tables, with the quotient
//! and unit-group constructions used for the Brauer-monoid machinery.
//!
//! The quotient M/N by a submonoid N identifies m₁ ~ m₂ whenever
//! m₁n₁ = m₂n₂ for some n₁, n₂ ∈ N. Commutativity makes this an
//! equivalence relation; the construction nevertheless computes the
//! transitive closure and asserts that it adds nothing. Elements whose
//! classes are invertible in M/N are `{ a | ∃ b ∈ M, n ∈ N with abn ∈ N }`,
//! cross-checked against the units of the computed quotient.

use crate::error::Error;

/// A commutative monoid on {0, …, size−1}; associativity, commutativity and
/// the identity law are checked exhaustively on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCommutativeMonoid {
    size: usize,
    identity: usize,
    table: Vec<usize>,
}

impl FiniteCommutativeMonoid {
    pub fn new(size: usize, identity: usize, table: Vec<Vec<usize>>) -> Result<Self, Error> {
        if size == 0 {
            return Err(Error::InvalidMonoid("empty carrier".into()));
        }
        if identity >= size || table.len() != size || table.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidMonoid("table shape mismatch".into()));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        if flat.iter().any(|&v| v >= size) {
            return Err(Error::InvalidMonoid("table entry out of range".into()));
        }
        let m = FiniteCommutativeMonoid {
            size,
            identity,
            table: flat,
        };
        for a in 0..size {
            if m.op(a, identity) != a {
                return Err(Error::InvalidMonoid(format!("{identity} is not an identity")));
            }
            for b in 0..size {
                if m.op(a, b) != m.op(b, a) {
                    return Err(Error::InvalidMonoid(format!(
                        "not commutative at ({a}, {b})"
                    )));
                }
                for c in 0..size {
                    if m.op(m.op(a, b), c) != m.op(a, m.op(b, c)) {
                        return Err(Error::InvalidMonoid(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    /// The multiplicative monoid (ℤ/k, ×) with identity 1.
    pub fn z_mod_mul(k: usize) -> Self {
        assert!(k >= 2);
        let table = (0..k)
            .map(|a| (0..k).map(|b| (a * b) % k).collect())
            .collect();
        FiniteCommutativeMonoid::new(k, 1, table).expect("modular multiplication is a monoid")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| self.op(a, b)).collect())
            .collect()
    }

    /// Validates that `subset` contains the identity and is closed.
    pub fn check_submonoid(&self, subset: &[usize]) -> Result<(), Error> {
        if subset.iter().any(|&a| a >= self.size) {
            return Err(Error::NotSubmonoid("element out of range".into()));
        }
        if !subset.contains(&self.identity) {
            return Err(Error::NotSubmonoid("missing the identity".into()));
        }
        for &a in subset {
            for &b in subset {
                if !subset.contains(&self.op(a, b)) {
                    return Err(Error::NotSubmonoid(format!(
                        "not closed: {a}*{b} = {} escapes",
                        self.op(a, b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// { a | ∃b: ab = identity }, the maximal subgroup.
    pub fn units(&self) -> Vec<usize> {
        let units: Vec<usize> = (0..self.size)
            .filter(|&a| (0..self.size).any(|b| self.op(a, b) == self.identity))
            .collect();
        // The unit set of a commutative monoid is closed and forms a group.
        for &a in &units {
            debug_assert!(units.contains(&self.identity));
            for &b in &units {
                assert!(
                    units.contains(&self.op(a, b)),
                    "unit set not closed at ({a}, {b})"
                );
            }
        }
        units
    }

    /// All submonoids (subsets containing the identity, closed under the
    /// operation), each sorted ascending; the list is sorted by size then
    /// lexicographically. Exponential in `size`, fine at desk scale.
    pub fn submonoids(&self) -> Vec<Vec<usize>> {
        assert!(self.size <= 16, "submonoid enumeration is desk-scale only");
        let mut out = Vec::new();
        for mask in 0u32..(1 << self.size) {
            if mask & (1 << self.identity) == 0 {
                continue;
            }
            let subset: Vec<usize> = (0..self.size).filter(|&i| mask & (1 << i) != 0).collect();
            if self.check_submonoid(&subset).is_ok() {
                out.push(subset);
            }
        }
        out.sort_by_key(|s| (s.len(), s.clone()));
        out
    }
}

/// The quotient M/N: classes, induced operation, and the projection map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMonoid {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    monoid: FiniteCommutativeMonoid,
}

impl QuotientMonoid {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// The induced monoid on the classes.
    pub fn monoid(&self) -> &FiniteCommutativeMonoid {
        &self.monoid
    }
}

/// Computes M/N for a validated submonoid N.
pub fn quotient(
    m: &FiniteCommutativeMonoid,
    submonoid: &[usize],
) -> Result<QuotientMonoid, Error> {
    m.check_submonoid(submonoid)?;
    let size = m.size();

    // Base relation: m1 ~ m2 ⟺ ∃ n1, n2 ∈ N with m1·n1 = m2·n2.
    let mut related = vec![false; size * size];
    for a in 0..size {
        for b in 0..size {
            let hit = submonoid
                .iter()
                .any(|&n1| submonoid.iter().any(|&n2| m.op(a, n1) == m.op(b, n2)));
            related[a * size + b] = hit;
        }
    }
    // Commutativity makes the relation transitive already; compute the
    // closure anyway and insist that it adds nothing.
    let mut closure = related.clone();
    for k in 0..size {
        for a in 0..size {
            if !closure[a * size + k] {
                continue;
            }
            for b in 0..size {
                if closure[k * size + b] && !closure[a * size + b] {
                    closure[a * size + b] = true;
                }
            }
        }
    }
    assert_eq!(
        related, closure,
        "quotient relation failed to be transitive"
    );
    for a in 0..size {
        assert!(related[a * size + a], "quotient relation not reflexive");
        for b in 0..size {
            assert_eq!(
                related[a * size + b],
                related[b * size + a],
                "quotient relation not symmetric"
            );
        }
    }

    // Classes ordered by least representative.
    let mut class_of = vec![usize::MAX; size];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..size {
        if class_of[a] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let members: Vec<usize> = (0..size).filter(|&b| related[a * size + b]).collect();
        for &b in &members {
            class_of[b] = idx;
        }
        classes.push(members);
    }

    // Induced operation, well-definedness checked exhaustively.
    let k = classes.len();
    let mut table = vec![vec![0usize; k]; k];
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate() {
            let expected = class_of[m.op(ci[0], cj[0])];
            for &a in ci {
                for &b in cj {
                    assert_eq!(
                        class_of[m.op(a, b)],
                        expected,
                        "induced operation ill-defined on classes {i}, {j}"
                    );
                }
            }
            table[i][j] = expected;
        }
    }
    let monoid = FiniteCommutativeMonoid::new(k, class_of[m.identity()], table)
        .expect("induced structure is a commutative monoid");
    Ok(QuotientMonoid {
        classes,
        class_of,
        monoid,
    })
}

/// { a ∈ M | ∃ b ∈ M, n ∈ N such that abn ∈ N }: the elements whose classes
/// are invertible in M/N, computed by that formula and cross-checked
/// against the units of the quotient.
pub fn quotient_units(
    m: &FiniteCommutativeMonoid,
    submonoid: &[usize],
) -> Result<Vec<usize>, Error> {
    m.check_submonoid(submonoid)?;
    let by_formula: Vec<usize> = (0..m.size())
        .filter(|&a| {
            (0..m.size()).any(|b| {
                submonoid
                    .iter()
                    .any(|&n| submonoid.contains(&m.op(m.op(a, b), n)))
            })
        })
        .collect();

    let q = quotient(m, submonoid)?;
    let unit_classes = q.monoid().units();
    let pullback: Vec<usize> = (0..m.size())
        .filter(|&a| unit_classes.contains(&q.class_of(a)))
        .collect();
    if by_formula != pullback {
        let element = by_formula
            .iter()
            .find(|a| !pullback.contains(a))
            .or_else(|| pullback.iter().find(|a| !by_formula.contains(a)))
            .copied()
            .unwrap_or(0);
        return Err(Error::QuotientUnitsMismatch { element });
    }
    Ok(by_formula)
}

/// All commutative monoids of the given size up to isomorphism, with the
/// identity normalized to element 0. Enumeration is by brute force over
/// symmetric Cayley tables with canonical-form deduplication.
pub fn enumerate_commutative_monoids(size: usize) -> Vec<FiniteCommutativeMonoid> {
    assert!((1..=4).contains(&size), "enumeration supports sizes 1..=4");
    if size == 1 {
        return vec![FiniteCommutativeMonoid::new(1, 0, vec![vec![0]]).unwrap()];
    }
    let others: Vec<usize> = (1..size).collect();
    let free_pairs: Vec<(usize, usize)> = others
        .iter()
        .flat_map(|&i| others.iter().filter(move |&&j| j >= i).map(move |&j| (i, j)))
        .collect();

    let mut canon_seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let total = size.pow(free_pairs.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut table = vec![vec![0usize; size]; size];
        for a in 0..size {
            table[a][0] = a;
            table[0][a] = a;
        }
        for &(i, j) in &free_pairs {
            let v = c % size;
            c /= size;
            table[i][j] = v;
            table[j][i] = v;
        }
        let m = match FiniteCommutativeMonoid::new(size, 0, table) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let canon = canonical_form(&m);
        if canon_seen.insert(canon) {
            out.push(m);
        }
    }
    out
}

/// Lexicographically least table over all relabelings fixing the identity.
fn canonical_form(m: &FiniteCommutativeMonoid) -> Vec<usize> {
    let size = m.size();
    let others: Vec<usize> = (0..size).filter(|&i| i != m.identity()).collect();
    let mut best: Option<Vec<usize>> = None;
    let mut perm_indices: Vec<usize> = (0..others.len()).collect();
    permutations(&mut perm_indices, 0, &mut |perm| {
        // relabel: identity ↦ 0, others[i] ↦ 1 + perm position.
        let mut relabel = vec![0usize; size];
        for (new_minus_1, &orig_idx) in perm.iter().enumerate() {
            relabel[others[orig_idx]] = new_minus_1 + 1;
        }
        let mut inverse = vec![0usize; size];
        for (orig, &new) in relabel.iter().enumerate() {
            inverse[new] = orig;
        }
        let flat: Vec<usize> = (0..size)
            .flat_map(|a| {
                let inverse = &inverse;
                let relabel = &relabel;
                (0..size).map(move |b| relabel[m.op(inverse[a], inverse[b])])
            })
            .collect();
        match &best {
            Some(b) if *b <= flat => {}
            _ => best = Some(flat),
        }
    });
    best.expect("at least the identity permutation")
}

fn permutations(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}
