//! Dyadic arithmetic: bit counts, the mu function, binomial parity and the
//! degree bookkeeping used everywhere else.
//!
//! All values in scope fit comfortably in 64 bits; none of these functions
//! allocate except [`DyadicExpansion`].

/// Dyadic expansion of a non-negative integer: the bit list `bits[j]` is the
/// coefficient of `2^j`, with no trailing zeros stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicExpansion {
    pub n: u64,
    pub bits: Vec<u8>,
}

impl DyadicExpansion {
    pub fn new(n: u64) -> Self {
        let mut bits = Vec::new();
        let mut m = n;
        while m > 0 {
            bits.push((m & 1) as u8);
            m >>= 1;
        }
        DyadicExpansion { n, bits }
    }

    /// Coefficient of `2^j`, zero beyond the stored bits.
    pub fn bit(&self, j: usize) -> u8 {
        self.bits.get(j).copied().unwrap_or(0)
    }

    /// Number of set bits.
    pub fn alpha(&self) -> u32 {
        self.bits.iter().map(|&b| b as u32).sum()
    }
}

/// Number of ones in the dyadic expansion of `n`.
#[inline]
pub fn alpha(n: u64) -> u32 {
    n.count_ones()
}

/// Coefficient of `2^j` in the dyadic expansion of `n`.
#[inline]
pub fn alpha_bit(n: u64, j: u32) -> u8 {
    if j >= 64 {
        0
    } else {
        ((n >> j) & 1) as u8
    }
}

/// mu(0) = 0, otherwise the least b >= 1 with alpha(n + b) <= b.
///
/// Linear search from b = 1. Termination is guaranteed well before b = 64
/// because alpha(n + b) <= 64 for all 64-bit n; the assert documents it.
pub fn mu(n: u64) -> u32 {
    if n == 0 {
        return 0;
    }
    let mut b = 1u32;
    loop {
        if alpha(n + b as u64) <= b {
            return b;
        }
        b += 1;
        assert!(b <= 64, "mu search failed to terminate for n = {n}");
    }
}

/// Parity of the binomial coefficient C(a, i), via Lucas' theorem:
/// C(a, i) is odd exactly when every bit of i is contained in a.
#[inline]
pub fn binom_parity(a: u64, i: u64) -> bool {
    i & a == i
}

/// The set U(t, n) = { rho : 2^rho - 1 <= n and alpha(n - (2^rho - 1) + t - 1) <= t - 1 },
/// returned sorted ascending. rho = 0 is included exactly as the defining
/// formula reads; callers that need strictly positive exponents filter it.
pub fn u_set(t: u32, n: u64) -> Vec<u32> {
    assert!(t >= 1, "u_set requires t >= 1");
    let mut out = Vec::new();
    let mut rho = 0u32;
    while let Some(pow) = 1u64.checked_shl(rho) {
        if pow - 1 > n {
            break;
        }
        if alpha(n - (pow - 1) + (t as u64 - 1)) < t {
            out.push(rho);
        }
        rho += 1;
    }
    out
}

/// (2^t - 1) * dim_lower, the inductive dimension prediction one arity up.
pub fn predict_dim_inductive(t: u32, dim_lower: u64) -> u64 {
    assert!(t >= 2, "predict_dim_inductive requires t >= 2");
    ((1u64 << t) - 1) * dim_lower
}

/// The generic degree r(2^s - 1) + m * 2^s.
pub fn generic_degree(r: u64, s: u32, m: u64) -> u64 {
    r * ((1u64 << s) - 1) + m * (1u64 << s)
}

/// Binomial coefficient C(n, k); panics if the value overflows u64.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Pascal-triangle binomial parity, kept independent of Lucas' theorem.
    fn pascal_parity(max: usize) -> Vec<Vec<bool>> {
        let mut rows: Vec<Vec<bool>> = Vec::with_capacity(max + 1);
        for a in 0..=max {
            let mut row = vec![false; a + 1];
            row[0] = true;
            row[a] = true;
            for i in 1..a {
                row[i] = rows[a - 1][i - 1] ^ rows[a - 1][i];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(0), 0);
        assert_eq!(alpha(42), 3);
        assert_eq!(alpha(46), 4);
    }

    #[test]
    fn alpha_matches_naive_loop() {
        for n in 0..=1_000_000u64 {
            let mut m = n;
            let mut count = 0;
            while m > 0 {
                count += m & 1;
                m >>= 1;
            }
            assert_eq!(alpha(n), count as u32, "n = {n}");
        }
    }

    #[test]
    fn dyadic_expansion_reconstructs() {
        for n in [0u64, 1, 2, 42, 46, 255, 1023, 123456] {
            let e = DyadicExpansion::new(n);
            let back: u64 = e.bits.iter().enumerate().map(|(j, &b)| (b as u64) << j).sum();
            assert_eq!(back, n);
            assert_eq!(e.alpha(), alpha(n));
            if n > 0 {
                assert_eq!(*e.bits.last().unwrap(), 1, "no trailing zeros");
            }
        }
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(0), 0);
        assert_eq!(mu(42), 4);
        assert_eq!(mu(7), 1);
        // n_s = 5(2^s - 1) + 42 * 2^s has mu = 5 for s = 1, 2, 3.
        for s in 1..=3 {
            assert_eq!(mu(generic_degree(5, s, 42)), 5, "s = {s}");
        }
    }

    #[test]
    fn mu_is_minimal() {
        for n in 1..=100_000u64 {
            let b = mu(n);
            assert!(alpha(n + b as u64) <= b, "n = {n}");
            for smaller in 1..b {
                assert!(alpha(n + smaller as u64) > smaller, "n = {n}, b' = {smaller}");
            }
        }
    }

    #[test]
    fn mu_of_spike_degrees() {
        for k in 1..=20u32 {
            assert_eq!(mu((1u64 << k) - 1), 1);
        }
    }

    #[test]
    fn binom_parity_matches_pascal() {
        let pascal = pascal_parity(256);
        for a in 0..=256u64 {
            for i in 0..=a {
                assert_eq!(
                    binom_parity(a, i),
                    pascal[a as usize][i as usize],
                    "C({a},{i})"
                );
            }
            assert!(!binom_parity(a, a + 1), "i > a must be even");
        }
    }

    #[test]
    fn binom_parity_edges() {
        for a in 0..200u64 {
            assert!(binom_parity(a, 0));
        }
        assert!(binom_parity(7, 2)); // C(7,2) = 21
        assert!(!binom_parity(8, 1)); // C(8,1) = 8
    }

    #[test]
    fn u_set_examples() {
        assert_eq!(u_set(5, 42), vec![0, 1, 2, 3, 5]);
        assert_eq!(u_set(1, 0), vec![0]);
        // The rho >= 1 part gives exponents 2^rho - 1 in {1, 3, 7, 31}.
        let exps: Vec<u64> = u_set(5, 42)
            .into_iter()
            .filter(|&r| r >= 1)
            .map(|r| (1u64 << r) - 1)
            .collect();
        assert_eq!(exps, vec![1, 3, 7, 31]);
    }

    #[test]
    fn predict_dim_examples() {
        assert_eq!(predict_dim_inductive(6, 2520), 158760);
        assert_eq!(predict_dim_inductive(2, 0), 0);
        assert_eq!(predict_dim_inductive(5, 140), 4340);
    }

    #[test]
    fn generic_degree_examples() {
        assert_eq!(generic_degree(5, 0, 42), 42);
        assert_eq!(generic_degree(5, 1, 42), 89);
        for m in 0..20 {
            assert_eq!(generic_degree(3, 0, m), m);
        }
    }

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(22, 3), 1540);
        assert_eq!(binomial(46, 4), 163_185);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        for n in 0..=20u64 {
            for k in 0..=n {
                let by_pascal = if k == 0 || k == n {
                    1
                } else {
                    binomial(n - 1, k - 1) + binomial(n - 1, k)
                };
                assert_eq!(binomial(n, k), by_pascal);
            }
        }
    }

    #[test]
    fn generic_degree_recursion() {
        // The recursion driving Kameko iteration.
        for t in 2..=6u64 {
            for s in 0..8 {
                for m in 0..50 {
                    assert_eq!(
                        generic_degree(t - 1, s + 1, m),
                        2 * generic_degree(t - 1, s, m) + (t - 1)
                    );
                }
            }
        }
    }
}
