//! Arithmetic around class bounds: maximal products of partitions into
//! distinct parts, Landau's function, and small number theory helpers.

use num_integer::Integer;

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut a = 0;
            while m.is_multiple_of(p) {
                m /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn prime_divisors(m: u64) -> Vec<u64> {
    factorize(m).into_iter().map(|(p, _)| p).collect()
}

/// `1` counts as a prime power (the empty product).
pub fn is_prime_power(m: u64) -> bool {
    factorize(m).len() <= 1
}

pub fn factorial(n: u32) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// Exponent of the prime `p` in `n!`.
fn legendre(n: u64, p: u64) -> u64 {
    let mut e = 0;
    let mut q = p;
    while q <= n {
        e += n / q;
        match q.checked_mul(p) {
            Some(next) => q = next,
            None => break,
        }
    }
    e
}

/// Whether `d` divides `n!`, without forming `n!`.
pub fn divides_factorial(d: u64, n: u64) -> bool {
    factorize(d)
        .into_iter()
        .all(|(p, a)| legendre(n, p) >= a as u64)
}

/// Whether `a` divides `b^k`, without forming the power.
pub fn divides_power(a: u64, b: u64, k: u32) -> bool {
    if a == 0 {
        return false;
    }
    factorize(a).into_iter().all(|(p, e)| {
        let mut f = 0u64;
        let mut b = b;
        while b > 0 && b.is_multiple_of(p) {
            b /= p;
            f += 1;
        }
        f * k as u64 >= e as u64
    })
}

/// `a_n` from the closed form. With `𝒯_m` the largest triangular number
/// not above `n` and `n = 𝒯_m + l`:
/// `(m+1)!/(m-l)` for `l ≤ m-2`, `(m+2)·m!/2` for `l = m-1`, `(m+1)!` for
/// `l = m`.
pub fn a_n(n: u32) -> u128 {
    if n <= 1 {
        return 1;
    }
    let mut m = 1u32;
    while (m + 1) * (m + 2) / 2 <= n {
        m += 1;
    }
    let l = n - m * (m + 1) / 2;
    let fact = |k: u32| factorial(k).expect("a_n overflow");
    if l + 2 <= m {
        fact(m + 1) / (m - l) as u128
    } else if l + 1 == m {
        (m as u128 + 2) * fact(m) / 2
    } else {
        fact(m + 1)
    }
}

/// `a_n` by exhaustive search over partitions of `n` into distinct parts.
pub fn max_distinct_partition_product(n: u32) -> u128 {
    fn go(rest: u32, min_part: u32) -> u128 {
        let mut best = if rest == 0 { 1 } else { 0 };
        for part in min_part..=rest {
            let sub = go(rest - part, part + 1);
            if sub > 0 {
                best = best.max(part as u128 * sub);
            }
        }
        best
    }
    if n == 0 {
        1
    } else {
        go(n, 1)
    }
}

/// Landau's function: the largest order of a permutation of `n` points,
/// i.e. the largest lcm over all partitions of `n`.
pub fn landau(n: u32) -> u128 {
    fn go(rest: u32, min_part: u32, acc: u128, best: &mut u128) {
        *best = (*best).max(acc);
        for part in min_part..=rest {
            go(rest - part, part, acc.lcm(&(part as u128)), best);
        }
    }
    let mut best = 1;
    go(n, 1, 1, &mut best);
    best
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassBounds {
    pub n: u32,
    pub a_n: u128,
    /// Same quantity by exhaustive search; must equal `a_n`.
    pub a_n_search: u128,
    pub landau_g: u128,
    /// `n!`, if it fits.
    pub factorial_bound: Option<u128>,
}

pub fn class_bounds(n: u32) -> ClassBounds {
    ClassBounds {
        n,
        a_n: a_n(n),
        a_n_search: max_distinct_partition_product(n),
        landau_g: landau(n),
        factorial_bound: factorial(n),
    }
}
