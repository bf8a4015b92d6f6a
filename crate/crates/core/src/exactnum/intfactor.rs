//! Integer factorization for the rational-root test.
//!
//! Divisor enumeration of leading and constant coefficients needs complete
//! factorizations. Small factors are removed by trial division; composite
//! cofactors are split with Brent's variant of Pollard's rho, with
//! Miller–Rabin as the primality check.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_BOUND: u64 = 30_000;

/// Factors `n > 0` into prime powers.
pub fn factor(n: &BigUint) -> BTreeMap<BigUint, u32> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut out = BTreeMap::new();
    let mut rest = n.clone();
    let one = BigUint::one();

    let mut d = 2u64;
    while d <= TRIAL_BOUND {
        let big_d = BigUint::from(d);
        if &big_d * &big_d > rest {
            break;
        }
        while (&rest % &big_d).is_zero() {
            *out.entry(big_d.clone()).or_insert(0) += 1;
            rest /= &big_d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > one {
        split(&rest, &mut out);
    }
    out
}

fn split(n: &BigUint, out: &mut BTreeMap<BigUint, u32>) {
    if n.is_one() {
        return;
    }
    if is_prime(n) {
        *out.entry(n.clone()).or_insert(0) += 1;
        return;
    }
    let d = pollard_rho(n);
    split(&d, out);
    split(&(n / &d), out);
}

/// Miller–Rabin with the first twelve primes as bases; deterministic for
/// every n < 3.3·10^24, far beyond anything this crate produces.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho; `n` must be odd, composite, and not a prime power
/// of a trial-bound prime. Returns a nontrivial divisor.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    // Perfect squares defeat rho's random walk surprisingly often; peel them.
    let root = n.sqrt();
    if &root * &root == *n {
        return root;
    }
    let mut c = BigUint::from(1u32);
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        let mut count = 0u64;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
            count += 1;
            if count > 1_000_000 {
                break;
            }
        }
        if !d.is_one() && &d != n {
            return d;
        }
        c += 1u32;
    }
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in factor(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Positive divisors of a nonzero signed integer, ascending.
pub fn divisors_of_bigint(n: &BigInt) -> Vec<BigInt> {
    let mag = n.magnitude().clone();
    divisors(&mag).into_iter().map(BigInt::from).collect()
}

#[allow(dead_code)]
pub fn factor_i64(n: i64) -> BTreeMap<u64, u32> {
    factor(&BigUint::from(n.unsigned_abs()))
        .into_iter()
        .map(|(p, e)| (p.to_u64().expect("fits"), e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn factors_small_numbers() {
        assert_eq!(factor_i64(1).len(), 0);
        assert_eq!(factor_i64(12), [(2, 2), (3, 1)].into_iter().collect());
        assert_eq!(factor_i64(97), [(97, 1)].into_iter().collect());
        assert_eq!(
            factor_i64(2 * 3 * 5 * 7 * 11 * 13),
            [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1)]
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn factors_past_the_trial_bound() {
        // 1000003 and 1000033 are primes above TRIAL_BOUND.
        let n = b(1_000_003) * b(1_000_033);
        let f = factor(&n);
        assert_eq!(f, [(b(1_000_003), 1), (b(1_000_033), 1)].into_iter().collect());
        // A prime square.
        let sq = b(1_000_003) * b(1_000_003);
        assert_eq!(factor(&sq), [(b(1_000_003), 2)].into_iter().collect());
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(&b(2)));
        assert!(is_prime(&b(1_000_003)));
        assert!(!is_prime(&b(1)));
        assert!(!is_prime(&(b(1_000_003) * b(17))));
    }

    #[test]
    fn divisor_lists_are_complete_and_sorted() {
        let divs = divisors(&b(36));
        let expected: Vec<BigUint> = [1u64, 2, 3, 4, 6, 9, 12, 18, 36].iter().map(|&x| b(x)).collect();
        assert_eq!(divs, expected);
        // Brute-force cross-check for a range of n.
        for n in 1u64..200 {
            let got = divisors(&b(n));
            let brute: Vec<BigUint> = (1..=n).filter(|d| n % d == 0).map(b).collect();
            assert_eq!(got, brute, "divisors of {n}");
        }
    }
}
