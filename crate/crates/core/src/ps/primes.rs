//! Segmented sieve of Eratosthenes over odd integers.

use crate::error::{Error, Result};
use crate::exec::Exec;

/// Odd integers per segment; a multiple of 64 so segment bitsets concatenate.
const SEGMENT_ODDS: u64 = 1 << 18;

/// Exact primality over `[lo, hi]`, one bit per odd integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    lo: u64,
    hi: u64,
    /// smallest odd integer ≥ lo; bit i stands for `first_odd + 2i`
    first_odd: u64,
    has_two: bool,
    bits: Vec<u64>,
}

impl PrimeTable {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    /// Primality of `n`; `None` when `n` lies outside the table.
    pub fn is_prime(&self, n: u64) -> Option<bool> {
        if n < self.lo || n > self.hi {
            return None;
        }
        if n == 2 {
            return Some(true);
        }
        if n % 2 == 0 {
            return Some(false);
        }
        let i = (n - self.first_odd) / 2;
        Some(self.bits[(i / 64) as usize] >> (i % 64) & 1 == 1)
    }

    pub fn count(&self) -> u64 {
        u64::from(self.has_two) + self.bits.iter().map(|w| w.count_ones() as u64).sum::<u64>()
    }

    /// Primes in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        let two = self.has_two.then_some(2u64);
        let first = self.first_odd;
        two.into_iter().chain(self.bits.iter().enumerate().flat_map(move |(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                Some(first + 2 * (w as u64 * 64 + b))
            })
        }))
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }
}

/// Plain Eratosthenes for the base primes up to `n`.
pub fn simple_primes(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.saturating_mul(r) > n {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= n {
        r += 1;
    }
    r
}

pub fn sieve_primes(lo: u64, hi: u64) -> Result<PrimeTable> {
    sieve_primes_with(lo, hi, Exec::default())
}

pub fn sieve_primes_with(lo: u64, hi: u64, exec: Exec) -> Result<PrimeTable> {
    if lo < 2 || lo > hi {
        return Err(Error::pre(format!("sieve range [{lo}, {hi}] needs 2 <= lo <= hi")));
    }
    if hi > i64::MAX as u64 {
        return Err(Error::pre("sieve upper bound exceeds 2^63 - 1"));
    }
    let first_odd = lo | 1;
    let odd_count = if first_odd > hi { 0 } else { (hi - first_odd) / 2 + 1 };
    let base: Vec<u64> = simple_primes(isqrt(hi)).into_iter().filter(|&p| p > 2).collect();

    let parts = exec.map_chunks(odd_count, SEGMENT_ODDS, |start, end| {
        sieve_segment(first_odd + 2 * start, end - start, &base)
    });
    let mut bits = Vec::with_capacity(odd_count.div_ceil(64) as usize);
    for p in parts {
        bits.extend(p);
    }
    Ok(PrimeTable { lo, hi, first_odd, has_two: lo <= 2 && hi >= 2, bits })
}

/// Bitset for the `count` odd integers starting at odd `start`.
fn sieve_segment(start: u64, count: u64, base: &[u64]) -> Vec<u64> {
    let words = count.div_ceil(64) as usize;
    let mut bits = vec![u64::MAX; words];
    if count % 64 != 0 {
        bits[words - 1] = (1u64 << (count % 64)) - 1;
    }
    let last = start + 2 * (count - 1);
    for &p in base {
        if p * p > last {
            break;
        }
        let mut m = (start.div_ceil(p) * p).max(p * p);
        if m % 2 == 0 {
            m += p;
        }
        while m <= last {
            let i = (m - start) / 2;
            bits[(i / 64) as usize] &= !(1u64 << (i % 64));
            m += 2 * p;
        }
    }
    bits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range() {
        let t = sieve_primes(2, 30).unwrap();
        assert_eq!(t.to_vec(), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(t.count(), 10);
        assert_eq!(t.is_prime(29), Some(true));
        assert_eq!(t.is_prime(27), Some(false));
        assert_eq!(t.is_prime(31), None);
    }

    #[test]
    fn pi_of_a_million() {
        assert_eq!(sieve_primes(2, 1_000_000).unwrap().count(), 78_498);
    }

    #[test]
    fn partition_consistency() {
        let whole = sieve_primes(2, 1_000_000).unwrap().to_vec();
        let mut parts = sieve_primes(2, 500_000).unwrap().to_vec();
        parts.extend(sieve_primes(500_001, 1_000_000).unwrap().iter());
        assert_eq!(whole, parts);
    }

    #[test]
    fn matches_simple_sieve_on_offsets() {
        let reference = simple_primes(20_000);
        for (lo, hi) in [(2, 2), (3, 3), (4, 4), (2, 3), (9_973, 9_973), (100, 20_000), (17, 1_000)] {
            let got = sieve_primes(lo, hi).unwrap().to_vec();
            let want: Vec<u64> = reference.iter().copied().filter(|&p| p >= lo && p <= hi).collect();
            assert_eq!(got, want, "[{lo},{hi}]");
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = sieve_primes_with(1_000, 3_000_000, Exec::Sequential).unwrap();
        let b = sieve_primes_with(1_000, 3_000_000, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bad_ranges() {
        assert!(sieve_primes(1, 10).is_err());
        assert!(sieve_primes(10, 9).is_err());
    }
}
