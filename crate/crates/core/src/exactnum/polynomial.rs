//! Dense univariate polynomials over ℚ.
//!
//! Coefficients are stored constant-first with no trailing zeros, so the
//! zero polynomial is the empty coefficient list and equal values have
//! identical representations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intfactor;
use super::rational::{rat_int, Rational};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn x() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// Convenience constructor from integer coefficients, constant first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    /// True for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_int(k as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Polynomial::new(coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), Error> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let d_lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let q_len = rem.len() - d_deg;
        let mut quo = vec![Rational::zero(); q_len];
        for k in (0..q_len).rev() {
            let c = rem[k + d_deg].clone() / d_lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let v = dc * &c;
                rem[k + j] -= v;
            }
            quo[k] = c;
        }
        Ok((Polynomial::new(quo), Polynomial::new(rem)))
    }

    /// Monic associate; the zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => {
                let inv = Rational::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut p = a.clone();
        let mut q = b.clone();
        while !q.is_zero() {
            let (_, r) = p.div_rem(&q).expect("nonzero divisor");
            p = q;
            q = r;
        }
        p.monic()
    }

    /// p / gcd(p, p′), made monic.
    pub fn squarefree_part(&self) -> Result<Polynomial, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = Polynomial::gcd(self, &self.derivative());
        let (q, r) = self.div_rem(&g)?;
        debug_assert!(r.is_zero(), "gcd must divide exactly");
        Ok(q.monic())
    }

    /// Clears denominators and content: returns integer coefficients of the
    /// primitive associate (constant first), preserving the sign of the
    /// leading coefficient.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for c in &ints {
            gcd = gcd.gcd(c);
        }
        ints.into_iter().map(|c| c / &gcd).collect()
    }

    /// Rational roots with multiplicity, ascending, plus a flag telling
    /// whether the polynomial splits over ℚ (multiplicity sum equals the
    /// degree). Roots are found by the rational-root test on the primitive
    /// integer form with repeated deflation.
    pub fn rational_roots(&self) -> Result<(Vec<Rational>, bool), Error> {
        let deg = self.degree().ok_or(Error::ZeroPolynomial)?;
        let mut roots: Vec<Rational> = Vec::new();

        // Roots at zero: leading zero coefficients in constant-first order.
        let mut ints = self.primitive_integer_coeffs();
        let zeros = ints.iter().take_while(|c| c.is_zero()).count();
        for _ in 0..zeros {
            roots.push(Rational::zero());
        }
        ints.drain(..zeros);

        while ints.len() > 1 {
            match find_root(&ints) {
                Some((a, b)) => {
                    let root = Rational::new(a.clone(), b.clone());
                    // Deflate by (b·t − a) as often as the root divides.
                    loop {
                        match deflate(&ints, &a, &b) {
                            Some(next) => {
                                roots.push(root.clone());
                                ints = next;
                            }
                            None => break,
                        }
                        if ints.len() <= 1 {
                            break;
                        }
                        if !is_root(&ints, &a, &b) {
                            break;
                        }
                    }
                }
                None => break,
            }
        }
        roots.sort();
        let splits = roots.len() == deg;
        Ok((roots, splits))
    }
}

/// Horner evaluation of p(a/b) scaled by b^deg; zero iff a/b is a root.
fn is_root(ints: &[BigInt], a: &BigInt, b: &BigInt) -> bool {
    let deg = ints.len() - 1;
    let mut b_pows = Vec::with_capacity(deg + 1);
    let mut p = BigInt::one();
    for _ in 0..=deg {
        b_pows.push(p.clone());
        p *= b;
    }
    let mut acc = BigInt::zero();
    for (i, c) in ints.iter().enumerate().rev() {
        acc = acc * a + c * &b_pows[deg - i];
    }
    acc.is_zero()
}

/// One candidate root a/b (lowest terms, b > 0) of a primitive integer
/// polynomial with nonzero constant term, or None.
fn find_root(ints: &[BigInt], ) -> Option<(BigInt, BigInt)> {
    let deg = ints.len() - 1;
    let c0 = &ints[0];
    let cd = &ints[deg];
    debug_assert!(!c0.is_zero() && !cd.is_zero());

    let p_one: BigInt = ints.iter().sum();
    let p_neg_one: BigInt = ints
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
        .sum();

    let nums = intfactor::divisors_of_bigint(c0);
    let dens = intfactor::divisors_of_bigint(cd);
    for b in &dens {
        for a_abs in &nums {
            if a_abs.gcd(b) != BigInt::one() {
                continue;
            }
            for sign in [1, -1] {
                let a = a_abs * sign;
                // p = (bt − a)·q with integer q forces (b − a) | p(1)
                // and (−b − a) | p(−1).
                let d1: BigInt = b - &a;
                if d1.is_zero() {
                    if !p_one.is_zero() {
                        continue;
                    }
                } else if !(&p_one % &d1).is_zero() {
                    continue;
                }
                let d2: BigInt = -b - &a;
                if d2.is_zero() {
                    if !p_neg_one.is_zero() {
                        continue;
                    }
                } else if !(&p_neg_one % &d2).is_zero() {
                    continue;
                }
                if is_root(ints, &a, b) {
                    return Some((a, b.clone()));
                }
            }
        }
    }
    None
}

/// Exact division of a primitive integer polynomial by (b·t − a);
/// None when a/b is not a root.
fn deflate(ints: &[BigInt], a: &BigInt, b: &BigInt) -> Option<Vec<BigInt>> {
    let deg = ints.len() - 1;
    if deg == 0 {
        return None;
    }
    // c_i = b·q_{i−1} − a·q_i with q_deg = 0.
    let mut q = vec![BigInt::zero(); deg];
    let (lead, rem) = ints[deg].div_rem(b);
    if !rem.is_zero() {
        return None;
    }
    q[deg - 1] = lead;
    for i in (1..deg).rev() {
        let num = &ints[i] + a * &q[i];
        let (val, rem) = num.div_rem(b);
        if !rem.is_zero() {
            return None;
        }
        q[i - 1] = val;
    }
    if ints[0] != -(a * &q[0]) {
        return None;
    }
    Some(q)
}

/// The unique polynomial of degree < points.len() through the given points.
/// The points must be pairwise distinct.
pub fn lagrange_interpolate(points: &[Rational], values: &[Rational]) -> Polynomial {
    assert_eq!(points.len(), values.len());
    let mut result = Polynomial::zero();
    for (i, xi) in points.iter().enumerate() {
        let mut basis = Polynomial::one();
        let mut denom = Rational::one();
        for (j, xj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&Polynomial::new(vec![-xj.clone(), Rational::one()]));
            denom *= xi - xj;
        }
        let w = values[i].clone() / denom;
        result = result.add(&basis.scale(&w));
    }
    result
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = if c.is_negative() { -c.clone() } else { c.clone() };
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    #[test]
    fn construction_trims_trailing_zeros() {
        let p = Polynomial::new(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(Polynomial::new(vec![rat_int(0)]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn division_with_remainder() {
        // (x^2 − 1) = (x + 1)(x − 1) + 0
        let p = Polynomial::from_i64(&[-1, 0, 1]);
        let d = Polynomial::from_i64(&[1, 1]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(q, Polynomial::from_i64(&[-1, 1]));
        assert!(r.is_zero());

        // x^3 + 2 by x^2: quotient x, remainder 2
        let p = Polynomial::from_i64(&[2, 0, 0, 1]);
        let d = Polynomial::from_i64(&[0, 0, 1]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(q, Polynomial::from_i64(&[0, 1]));
        assert_eq!(r, Polynomial::from_i64(&[2]));
    }

    #[test]
    fn gcd_is_monic() {
        // gcd((x−1)^2(x+2), (x−1)(x+3)) = x − 1
        let a = Polynomial::from_i64(&[-1, 1]).pow(2).mul(&Polynomial::from_i64(&[2, 1]));
        let b = Polynomial::from_i64(&[-1, 1]).mul(&Polynomial::from_i64(&[3, 1]));
        assert_eq!(Polynomial::gcd(&a, &b), Polynomial::from_i64(&[-1, 1]));
        // Scaled inputs give the same monic gcd.
        assert_eq!(
            Polynomial::gcd(&a.scale(&rat(7, 3)), &b.scale(&rat(-2, 5))),
            Polynomial::from_i64(&[-1, 1])
        );
    }

    #[test]
    fn squarefree_part_examples() {
        // t^2(t−2) → t(t−2)
        let p = Polynomial::from_i64(&[0, 0, 1]).mul(&Polynomial::from_i64(&[-2, 1]));
        assert_eq!(
            p.squarefree_part().unwrap(),
            Polynomial::from_i64(&[0, 1]).mul(&Polynomial::from_i64(&[-2, 1]))
        );
        // t^2 + 1 is already squarefree
        let p = Polynomial::from_i64(&[1, 0, 1]);
        assert_eq!(p.squarefree_part().unwrap(), p);
        // (t−1)^3(t+1) → (t−1)(t+1); expected value from the gcd oracle:
        // gcd(p, p') = (t−1)^2, so p/gcd = (t−1)(t+1) = t^2 − 1.
        let p = Polynomial::from_i64(&[-1, 1]).pow(3).mul(&Polynomial::from_i64(&[1, 1]));
        let g = Polynomial::gcd(&p, &p.derivative());
        assert_eq!(g, Polynomial::from_i64(&[-1, 1]).pow(2));
        assert_eq!(p.squarefree_part().unwrap(), Polynomial::from_i64(&[-1, 0, 1]));
        assert!(Polynomial::zero().squarefree_part().is_err());
    }

    #[test]
    fn primitive_integer_form() {
        // (2/3)x^2 − (4/6) → primitive form x^2 − 1
        let p = Polynomial::new(vec![rat(-4, 6), rat_int(0), rat(2, 3)]);
        let ints: Vec<i64> = p
            .primitive_integer_coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(ints, vec![-1, 0, 1]);
    }

    #[test]
    fn rational_roots_examples() {
        // t^4 − 4t^2 = t^2 (t−2)(t+2): roots {0, 0, −2, 2}, splits.
        let p = Polynomial::from_i64(&[0, 0, -4, 0, 1]);
        let (roots, splits) = p.rational_roots().unwrap();
        assert_eq!(roots, vec![rat_int(-2), rat_int(0), rat_int(0), rat_int(2)]);
        assert!(splits);

        // t^2 + 1: no rational roots.
        let (roots, splits) = Polynomial::from_i64(&[1, 0, 1]).rational_roots().unwrap();
        assert!(roots.is_empty());
        assert!(!splits);

        // t − 3/2.
        let p = Polynomial::new(vec![rat(-3, 2), rat_int(1)]);
        let (roots, splits) = p.rational_roots().unwrap();
        assert_eq!(roots, vec![rat(3, 2)]);
        assert!(splits);

        assert!(Polynomial::zero().rational_roots().is_err());
    }

    #[test]
    fn rational_roots_with_multiplicity_and_fractions() {
        // (2t − 3)^2 (t + 5) (t^2 + t + 1)
        let p = Polynomial::from_i64(&[-3, 2])
            .pow(2)
            .mul(&Polynomial::from_i64(&[5, 1]))
            .mul(&Polynomial::from_i64(&[1, 1, 1]));
        let (roots, splits) = p.rational_roots().unwrap();
        assert_eq!(roots, vec![rat_int(-5), rat(3, 2), rat(3, 2)]);
        assert!(!splits);
    }

    /// Independent oracle: evaluate every rational-root-theorem candidate by
    /// naive trial-divisor enumeration, deflating with polynomial division
    /// over ℚ. Slow but straightforward.
    fn brute_force_roots(p: &Polynomial) -> Vec<Rational> {
        fn naive_divisors(n: &BigInt) -> Vec<BigInt> {
            let mag = BigInt::from(n.magnitude().clone());
            let mut out = vec![];
            let mut d = BigInt::one();
            while &d * &d <= mag {
                if (&mag % &d).is_zero() {
                    out.push(d.clone());
                    out.push(&mag / &d);
                }
                d += 1;
            }
            out.sort();
            out.dedup();
            out
        }

        let mut current = p.clone();
        let mut roots = vec![];
        'outer: loop {
            if current.degree().unwrap_or(0) == 0 {
                break;
            }
            let ints = current.primitive_integer_coeffs();
            if ints[0].is_zero() {
                roots.push(Rational::zero());
                let (q, r) = current.div_rem(&Polynomial::x()).unwrap();
                assert!(r.is_zero());
                current = q;
                continue;
            }
            let deg = ints.len() - 1;
            for b in naive_divisors(&ints[deg]) {
                for a in naive_divisors(&ints[0]) {
                    for sign in [1, -1] {
                        let cand = Rational::new(&a * sign, b.clone());
                        if current.eval(&cand).is_zero() {
                            roots.push(cand.clone());
                            let lin = Polynomial::new(vec![-cand, Rational::one()]);
                            let (q, r) = current.div_rem(&lin).unwrap();
                            assert!(r.is_zero());
                            current = q;
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        roots.sort();
        roots
    }

    #[test]
    fn rational_roots_match_brute_force_oracle() {
        let cases = vec![
            Polynomial::from_i64(&[6, -5, 1]),            // (t−2)(t−3)
            Polynomial::from_i64(&[0, 0, -4, 0, 1]),      // t^2(t−2)(t+2)
            Polynomial::from_i64(&[1, 0, 1]),             // irreducible
            Polynomial::from_i64(&[-6, 11, -6, 1]),       // (t−1)(t−2)(t−3)
            Polynomial::new(vec![rat(1, 3), rat(1, 2), rat_int(1)]),
            Polynomial::from_i64(&[12, -4, -3, 1]),       // (t−3)(t−2)(t+2)
            Polynomial::from_i64(&[-1, 3, -3, 1]),        // (t−1)^3
            Polynomial::from_i64(&[2, 1]).pow(3).mul(&Polynomial::from_i64(&[5, -7, 2])),
        ];
        for p in cases {
            let (roots, _) = p.rational_roots().unwrap();
            assert_eq!(roots, brute_force_roots(&p), "roots of {p}");
        }
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let p = Polynomial::from_i64(&[1, 1, 1]);
        let points: Vec<Rational> = (0..3).map(rat_int).collect();
        let values: Vec<Rational> = points.iter().map(|x| p.eval(x)).collect();
        assert_eq!(lagrange_interpolate(&points, &values), p);
    }
}
