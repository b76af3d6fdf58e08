use rayon::prelude::*;
use serde::Serialize;

use super::search::split_mask;
use crate::error::{Error, Result};
use crate::monoid::NumericalMonoid;
use crate::set::NormalizedSet;

/// Largest `n` accepted by the exhaustive routines unless configured otherwise.
pub const DEFAULT_ENUMERATION_BOUND: usize = 22;

/// Hard ceiling imposed by the single-word search kernel.
const KERNEL_LIMIT: usize = 62;

/// Number of consecutive candidate sets handed to one parallel task.
const CHUNK: u64 = 1 << 12;

/// Exact atom counts `α_{n,k}` for sets with maximum at most `n`.
///
/// `counts[k]` is the number of atoms of size `k`; index 0 is always 0.
/// Following the usual convention the size-1 block holds the identity
/// `{0}`, so `α_{n,1} = 1` and `total() = Σ_k α_{n,k}` compares directly with
/// `|P_n| = 2^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaTable {
    pub n: usize,
    pub counts: Vec<u64>,
}

impl AlphaTable {
    pub(crate) fn from_counts(n: usize, counts: Vec<u64>) -> Self {
        debug_assert_eq!(counts.len(), n + 2);
        AlphaTable { n, counts }
    }

    /// `α_{n,k}`, zero outside `1..=n+1`.
    pub fn get(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    /// `α_n`.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Counts of atoms whose maximum is exactly `n`, given the row for
    /// `n - 1`. This is a derived view: the first difference of the
    /// cumulative rows.
    pub fn exact_max_counts(&self, previous: &AlphaTable) -> Vec<u64> {
        assert_eq!(previous.n + 1, self.n, "rows must be consecutive");
        (0..self.counts.len())
            .map(|k| self.get(k) - previous.get(k))
            .collect()
    }
}

/// Exhaustive enumeration with a configurable size limit.
#[derive(Clone, Copy, Debug)]
pub struct Enumerator {
    bound: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            bound: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

impl Enumerator {
    /// Bounds above 62 are clamped; the search kernel packs sets in one word.
    pub fn with_bound(bound: usize) -> Self {
        Enumerator {
            bound: bound.min(KERNEL_LIMIT),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Domain("n must be positive".into()));
        }
        if n > self.bound {
            return Err(Error::EnumerationBound {
                n,
                bound: self.bound,
            });
        }
        Ok(())
    }

    /// Atoms with maximum at most `n` (and exactly `k` elements when given),
    /// in ascending packed order.
    pub fn enumerate_atoms(
        &self,
        n: usize,
        k: Option<usize>,
    ) -> Result<Box<dyn Iterator<Item = NormalizedSet> + Send>> {
        self.check(n)?;
        let candidates: Box<dyn Iterator<Item = u64> + Send> = match k {
            None => Box::new(1u64..1 << n),
            Some(k) if (2..=n + 1).contains(&k) => Box::new(FixedWeight::new(n, k - 1)),
            Some(_) => Box::new(std::iter::empty()),
        };
        Ok(Box::new(
            candidates
                .map(|x| x << 1 | 1)
                .filter(|&mask| split_mask(mask).is_none())
                .map(|mask| NormalizedSet::from_mask(mask).expect("contains 0")),
        ))
    }

    /// Rows `α_{n'}` for every `1 <= n' <= n`, from one parallel pass.
    pub fn alpha_tables(&self, n: usize) -> Result<Vec<AlphaTable>> {
        self.check(n)?;
        let width = n + 2;
        let total = 1u64 << n;
        let chunks = total.div_ceil(CHUNK);
        // by_max[m * width + k]: atoms with maximum exactly m and k elements
        let by_max = (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let mut local = vec![0u64; (n + 1) * width];
                let end = ((chunk + 1) * CHUNK).min(total);
                for x in (chunk * CHUNK).max(1)..end {
                    let mask = x << 1 | 1;
                    if split_mask(mask).is_none() {
                        let max = 63 - mask.leading_zeros() as usize;
                        local[max * width + mask.count_ones() as usize] += 1;
                    }
                }
                local
            })
            .reduce(
                || vec![0u64; (n + 1) * width],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );

        let mut rows = Vec::with_capacity(n);
        let mut running = vec![0u64; width];
        running[1] = 1;
        for m in 1..=n {
            for k in 0..width {
                running[k] += by_max[m * width + k];
            }
            rows.push(AlphaTable::from_counts(m, running[..m + 2].to_vec()));
        }
        Ok(rows)
    }

    pub fn alpha_table(&self, n: usize) -> Result<AlphaTable> {
        Ok(self.alpha_tables(n)?.pop().expect("n >= 1"))
    }

    /// Atoms of `P_fin,0(N)` with maximum at most `n`, found by testing every
    /// subset of `N ∩ [0, n]` that contains 0.
    pub fn atoms_of_restriction(&self, monoid: &NumericalMonoid, n: usize) -> Result<Vec<NormalizedSet>> {
        self.check(n)?;
        let allowed = (1..=n as u64)
            .filter(|&x| monoid.contains(x))
            .fold(0u64, |acc, x| acc | 1 << x);
        let mut out = Vec::new();
        let mut sub = 0u64;
        loop {
            sub = sub.wrapping_sub(allowed) & allowed;
            if sub == 0 {
                break;
            }
            let mask = sub | 1;
            if split_mask(mask).is_none() {
                out.push(NormalizedSet::from_mask(mask).expect("contains 0"));
            }
        }
        Ok(out)
    }

    /// The same atoms obtained by filtering the atoms of `P_fin,0(ℕ₀)`.
    pub fn atoms_of_restriction_by_filter(
        &self,
        monoid: &NumericalMonoid,
        n: usize,
    ) -> Result<Vec<NormalizedSet>> {
        Ok(self
            .enumerate_atoms(n, None)?
            .filter(|s| s.iter().all(|x| monoid.contains(x as u64)))
            .collect())
    }
}

/// `n`-bit words with exactly `weight` bits set, ascending (Gosper's hack).
struct FixedWeight {
    next: Option<u64>,
    limit: u64,
}

impl FixedWeight {
    fn new(bits: usize, weight: usize) -> Self {
        let limit = 1u64 << bits;
        let first = if weight == 0 { 0 } else { (1u64 << weight) - 1 };
        FixedWeight {
            next: (weight <= bits).then_some(first),
            limit,
        }
    }
}

impl Iterator for FixedWeight {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let succ = (((ripple ^ cur) >> 2) / low) | ripple;
            (succ < self.limit).then_some(succ)
        };
        Some(cur)
    }
}

/// Atoms with maximum at most `n`, using the default enumeration bound.
pub fn enumerate_atoms(
    n: usize,
    k: Option<usize>,
) -> Result<Box<dyn Iterator<Item = NormalizedSet> + Send>> {
    Enumerator::default().enumerate_atoms(n, k)
}

pub fn alpha_table(n: usize) -> Result<AlphaTable> {
    Enumerator::default().alpha_table(n)
}

pub fn alpha_tables(n: usize) -> Result<Vec<AlphaTable>> {
    Enumerator::default().alpha_tables(n)
}

pub fn atoms_of_restriction(monoid: &NumericalMonoid, n: usize) -> Result<Vec<NormalizedSet>> {
    Enumerator::default().atoms_of_restriction(monoid, n)
}

pub fn atoms_of_restriction_by_filter(
    monoid: &NumericalMonoid,
    n: usize,
) -> Result<Vec<NormalizedSet>> {
    Enumerator::default().atoms_of_restriction_by_filter(monoid, n)
}
