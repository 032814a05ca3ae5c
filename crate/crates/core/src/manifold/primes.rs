use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1_000_000;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Odd primes dividing `n`, in increasing order. Factors are found by trial
/// division up to one million; a cofactor left over is reported only when
/// it is then certainly prime and fits in a `u64`.
pub fn odd_prime_divisors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    while n.is_even() {
        n /= 2;
    }
    let mut d = 3u64;
    while d <= TRIAL_LIMIT && BigInt::from(d) * BigInt::from(d) <= n {
        let bd = BigInt::from(d);
        if (&n % &bd).is_zero() {
            out.push(d);
            while (&n % &bd).is_zero() {
                n /= &bd;
            }
        }
        d += 2;
    }
    if !n.is_one() && n <= BigInt::from(TRIAL_LIMIT) * BigInt::from(TRIAL_LIMIT) {
        if let Some(p) = n.to_u64() {
            out.push(p);
        }
    }
    out
}
