//! Exact arithmetic and combinatorial substrate.

mod factor;
mod natural;
mod partition;

pub use factor::{factorize, factorize_u64, is_prime, Factorization};
pub use natural::Natural;
pub use partition::{partition_count, partitions_of, Partition};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("zero has no factorization")]
    Zero,
    #[error("{0} does not fit in 64 bits")]
    TooLarge(Natural),
    #[error("division of {dividend} by {divisor} is not exact")]
    InexactDivision { dividend: Natural, divisor: Natural },
    #[error("division by zero")]
    DivisionByZero,
    #[error("subtraction {minuend} - {subtrahend} underflows")]
    Underflow {
        minuend: Natural,
        subtrahend: Natural,
    },
    #[error("invalid decimal natural number")]
    Parse,
}

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple; zero if either argument is zero.
pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u64(a, b) * b
}

pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    a.gcd(b)
}

pub fn lcm(a: &Natural, b: &Natural) -> Natural {
    a.lcm(b)
}

/// Largest power of `p` dividing `n` (the `p`-part `n_p`). `n` must be non-zero.
pub fn p_part(n: u64, p: u64) -> u64 {
    debug_assert!(n > 0 && p > 1);
    let mut n = n;
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// `Some(k)` when `n == p^k`.
pub fn log_exact(n: u64, p: u64) -> Option<u32> {
    if n == 0 || p < 2 {
        return None;
    }
    let mut n = n;
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    (n == 1).then_some(k)
}

/// Bézout coefficients: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Plain subtraction-based Euclid, kept apart from the library's gcd paths.
    fn euclid_oracle(mut a: u64, mut b: u64) -> u64 {
        while a != b && a != 0 && b != 0 {
            if a > b {
                a -= b;
            } else {
                b -= a;
            }
        }
        a.max(b)
    }

    #[test]
    fn gcd_lcm_examples() {
        assert_eq!(lcm_u64(4, 6), 12);
        assert_eq!(euclid_oracle(180, 150), 30);
        assert_eq!(gcd_u64(180, 150), 30);
        assert_eq!(gcd(&180u64.into(), &150u64.into()), Natural::from(30u64));
        assert_eq!(lcm(&4u64.into(), &6u64.into()), Natural::from(12u64));
        for n in 1..50u64 {
            assert_eq!(lcm_u64(1, n), n);
            assert_eq!(lcm(&Natural::one(), &n.into()), Natural::from(n));
        }
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(180, 2), 4);
        assert_eq!(p_part(180, 3), 9);
        assert_eq!(p_part(180, 7), 1);
        assert_eq!(log_exact(243, 3), Some(5));
        assert_eq!(log_exact(1, 3), Some(0));
        assert_eq!(log_exact(12, 2), None);
    }

    #[test]
    fn bezout() {
        for a in 1..40i64 {
            for b in 1..40i64 {
                let (g, x, y) = extended_gcd(a, b);
                assert_eq!(g as u64, gcd_u64(a as u64, b as u64));
                assert_eq!(a * x + b * y, g);
            }
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(10_000))]
        #[test]
        fn gcd_lcm_laws(a in 1u64..1_000_000, b in 1u64..1_000_000, c in 1u64..1000) {
            let g = gcd_u64(a, b);
            proptest::prop_assert_eq!(g, euclid_oracle(a, b));
            proptest::prop_assert_eq!(g, gcd_u64(b, a));
            proptest::prop_assert_eq!(lcm_u64(a, b), lcm_u64(b, a));
            proptest::prop_assert_eq!(gcd_u64(gcd_u64(a, b), c), gcd_u64(a, gcd_u64(b, c)));
            proptest::prop_assert_eq!(lcm_u64(lcm_u64(a, b), c), lcm_u64(a, lcm_u64(b, c)));
            proptest::prop_assert_eq!(g as u128 * lcm_u64(a, b) as u128, a as u128 * b as u128);
            let (na, nb) = (Natural::from(a), Natural::from(b));
            proptest::prop_assert_eq!(gcd(&na, &nb) * lcm(&na, &nb), na * nb);
        }
    }
}
