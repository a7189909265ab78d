//! Smallest-prime-factor table built by a linear sieve, plus its on-disk cache.
//!
//! Cache layout (all little-endian):
//!
//! | offset | size | field                                   |
//! |--------|------|-----------------------------------------|
//! | 0      | 8    | magic `PSCHEN01`                        |
//! | 8      | 4    | format version (`u32`, currently 1)     |
//! | 12     | 8    | limit (`u64`)                           |
//! | 20     | 4·(limit+1) | `spf[n]` as `u32` for n = 0..=limit |
//!
//! `spf[0] = 0` and `spf[1] = 1`.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

pub const CACHE_MAGIC: &[u8; 8] = b"PSCHEN01";
pub const CACHE_VERSION: u32 = 1;
pub const DEFAULT_LIMIT: u64 = 100_000_000;

#[derive(Clone, PartialEq, Eq)]
pub struct SpfTable {
    limit: u64,
    spf: Vec<u32>,
}

impl std::fmt::Debug for SpfTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpfTable").field("limit", &self.limit).finish()
    }
}

impl SpfTable {
    /// Build the table for `1..=limit`.
    pub fn new(limit: u64) -> Result<Self> {
        if limit > u32::MAX as u64 {
            return Err(Error::pre(format!("spf table limit {limit} exceeds u32 range")));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        if n >= 1 {
            spf[1] = 1;
        }
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                let m = i * p as usize;
                if p > si || m > n {
                    break;
                }
                spf[m] = p;
            }
        }
        Ok(SpfTable { limit, spf })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn check(&self, n: u64) -> Result<()> {
        if n > self.limit {
            return Err(Error::Range { n, limit: self.limit });
        }
        Ok(())
    }

    /// Smallest prime factor of `n` (1 for `n = 1`).
    pub fn spf(&self, n: u64) -> Result<u64> {
        self.check(n)?;
        if n == 0 {
            return Err(Error::pre("spf of 0"));
        }
        Ok(self.spf[n as usize] as u64)
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        self.check(n)?;
        Ok(n >= 2 && self.spf[n as usize] as u64 == n)
    }

    /// Prime factorization with strictly increasing primes; empty for `n = 1`.
    pub fn factor(&self, n: u64) -> Result<Vec<(u64, u32)>> {
        self.check(n)?;
        if n == 0 {
            return Err(Error::pre("factor of 0"));
        }
        let mut out: Vec<(u64, u32)> = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        Ok(out)
    }

    /// All divisors of `n` in increasing order.
    pub fn divisors(&self, n: u64) -> Result<Vec<u64>> {
        let mut divs = vec![1u64];
        for (p, e) in self.factor(n)? {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        Ok(divs)
    }

    pub fn write_cache(&self, path: &Path) -> Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        w.write_all(CACHE_MAGIC)?;
        w.write_all(&CACHE_VERSION.to_le_bytes())?;
        w.write_all(&self.limit.to_le_bytes())?;
        for &v in &self.spf {
            w.write_all(&v.to_le_bytes())?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_cache(path: &Path) -> Result<Self> {
        let mut r = BufReader::new(File::open(path)?);
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != CACHE_MAGIC {
            return Err(Error::Cache(format!("{}: bad magic", path.display())));
        }
        let mut b4 = [0u8; 4];
        r.read_exact(&mut b4)?;
        let version = u32::from_le_bytes(b4);
        if version != CACHE_VERSION {
            return Err(Error::Cache(format!("{}: unsupported version {version}", path.display())));
        }
        let mut b8 = [0u8; 8];
        r.read_exact(&mut b8)?;
        let limit = u64::from_le_bytes(b8);
        if limit > u32::MAX as u64 {
            return Err(Error::Cache(format!("{}: limit {limit} out of range", path.display())));
        }
        let mut bytes = Vec::new();
        r.read_to_end(&mut bytes)?;
        if bytes.len() as u64 != 4 * (limit + 1) {
            return Err(Error::Cache(format!(
                "{}: expected {} entries, found {} bytes",
                path.display(),
                limit + 1,
                bytes.len()
            )));
        }
        let spf = bytes
            .chunks_exact(4)
            .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
            .collect();
        Ok(SpfTable { limit, spf })
    }

    pub fn cache_path(dir: &Path, limit: u64) -> PathBuf {
        dir.join(format!("spf-{limit}.bin"))
    }

    /// Reuse a cached table covering `limit` if present, otherwise build and store one.
    pub fn load_or_build(dir: &Path, limit: u64) -> Result<Self> {
        let path = Self::cache_path(dir, limit);
        if path.exists() {
            let t = Self::read_cache(&path)?;
            if t.limit >= limit {
                return Ok(t);
            }
        }
        let t = Self::new(limit)?;
        std::fs::create_dir_all(dir)?;
        t.write_cache(&path)?;
        Ok(t)
    }
}
