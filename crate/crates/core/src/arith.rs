//! Integer helpers for group orders.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u128) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d as u64, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

/// Ascending list of the prime divisors of `n`.
pub fn prime_divisors(n: u128) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u128, p: u64) -> u128 {
    let p = p as u128;
    let mut n = n;
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_p_power(n: u128, p: u64) -> bool {
    n >= 1 && p_part(n, p) == n
}

/// `(p - 1)(p^2 - 1)...(p^n - 1)`.
pub fn prime_power_product(p: u64, n: u32) -> u128 {
    let mut acc: u128 = 1;
    let mut pk: u128 = 1;
    for _ in 0..n {
        pk *= p as u128;
        acc *= pk - 1;
    }
    acc
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        assert_eq!(factorize(24), vec![(2, 3), (3, 1)]);
        assert_eq!(factorize(60), vec![(2, 2), (3, 1), (5, 1)]);
        assert!(factorize(1).is_empty());
        assert_eq!(prime_divisors(3600), vec![2, 3, 5]);
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 5), 1);
        assert!(is_p_power(16, 2) && is_p_power(1, 3) && !is_p_power(12, 2));
    }

    #[test]
    fn gcd_lcm_primes() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(4, 6), 12);
        assert!(is_prime(2) && is_prime(59) && !is_prime(1) && !is_prime(57));
        assert_eq!(prime_power_product(2, 2), 3);
        assert_eq!(prime_power_product(3, 2), 16);
    }
}
