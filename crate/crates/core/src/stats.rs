//! Statistics over the atom counts: density, exact moments, entropy-based
//! binomial asymptotics, Monte Carlo estimates and unimodality.
//!
//! Logarithms are natural throughout.

use std::io::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::atoms::{alpha_table, alpha_tables, binomial, is_atom_mask, AlphaTable};
use crate::error::{Error, Result};

/// Writes rows as CSV with a header taken from the field names.
pub fn write_csv<T: Serialize, W: Write>(rows: &[T], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityRow {
    pub n: usize,
    pub alpha_n: u64,
    pub ratio: f64,
}

/// `(n, α_n, α_n / 2^n)` for every `1 <= n <= n_max`.
pub fn density_report(n_max: usize) -> Result<Vec<DensityRow>> {
    Ok(density_rows(&alpha_tables(n_max)?))
}

pub fn density_rows(tables: &[AlphaTable]) -> Vec<DensityRow> {
    tables
        .iter()
        .map(|t| DensityRow {
            n: t.n,
            alpha_n: t.total(),
            ratio: t.total() as f64 / (t.n as f64).exp2(),
        })
        .collect()
}

/// Exact `r`-th moments of the atom size `X_n` (with `P(X_n = k) = α_{n,k}/α_n`)
/// and of a binomial `Y_n ~ Bin(n, 1/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentReport {
    pub n: usize,
    pub r: u32,
    pub e_x: BigRational,
    pub e_y: BigRational,
    pub ratio: f64,
}

impl Serialize for MomentReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("MomentReport", 7)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("r", &self.r)?;
        s.serialize_field("e_x_num", &self.e_x.numer().to_string())?;
        s.serialize_field("e_x_den", &self.e_x.denom().to_string())?;
        s.serialize_field("e_y_num", &self.e_y.numer().to_string())?;
        s.serialize_field("e_y_den", &self.e_y.denom().to_string())?;
        s.serialize_field("ratio", &self.ratio)?;
        s.end()
    }
}

impl MomentReport {
    /// `|E(X_n^r) / E(Y_n^r) − 1|`, exactly.
    pub fn distance_from_one(&self) -> BigRational {
        (&self.e_x / &self.e_y - BigRational::one()).abs()
    }
}

pub fn moments(n: usize, r: u32) -> Result<MomentReport> {
    Ok(moments_from_table(&alpha_table(n)?, r))
}

pub fn moments_from_table(table: &AlphaTable, r: u32) -> MomentReport {
    let n = table.n;
    let weighted = |k: usize, w: BigInt| BigInt::from(k).pow(r) * w;
    let x_num: BigInt = (1..=n + 1).map(|k| weighted(k, table.get(k).into())).sum();
    let e_x = BigRational::new(x_num, table.total().into());
    let e_y = binomial_moment(n, r);
    let ratio = (&e_x / &e_y).to_f64().expect("finite ratio");
    MomentReport { n, r, e_x, e_y, ratio }
}

/// `E(Y_n^r) = 2^{−n} Σ_k k^r C(n, k)`.
pub fn binomial_moment(n: usize, r: u32) -> BigRational {
    let mut c = BigInt::one();
    let mut sum = BigInt::zero();
    for k in 0..=n {
        sum += BigInt::from(k).pow(r) * &c;
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    BigRational::new(sum, BigInt::one() << n)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EntropyValue {
    pub x: f64,
    pub value: f64,
    /// `x` was 0 or 1 and the value is the continuous extension 0.
    pub boundary: bool,
}

/// `H(x) = −x ln x − (1−x) ln(1−x)`.
pub fn entropy(x: f64) -> Result<EntropyValue> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("entropy needs 0 <= x <= 1, got {x}")));
    }
    if x == 0.0 || x == 1.0 {
        return Ok(EntropyValue {
            x,
            value: 0.0,
            boundary: true,
        });
    }
    let y = 1.0 - x;
    Ok(EntropyValue {
        x,
        value: -x * x.ln() - y * y.ln(),
        boundary: false,
    })
}

/// `ln C(n, k)` as a sum of logarithms.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    assert!(k <= n);
    let k = k.min(n - k);
    (1..=k).map(|i| ((n - k + i) as f64).ln() - (i as f64).ln()).sum()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StirlingReport {
    pub n: u64,
    pub k: u64,
    pub ln_binomial: f64,
    pub entropy_estimate: f64,
    pub relative_error: f64,
}

/// Compares `ln C(n, k)` with `n·H(k/n)`.
pub fn stirling_report(n: u64, k: u64) -> Result<StirlingReport> {
    if !(1..n).contains(&k) {
        return Err(Error::Domain(format!("need 1 <= k <= n - 1, got n = {n}, k = {k}")));
    }
    let exact = ln_binomial(n, k);
    let estimate = n as f64 * entropy(k as f64 / n as f64)?.value;
    Ok(StirlingReport {
        n,
        k,
        ln_binomial: exact,
        entropy_estimate: estimate,
        relative_error: (exact - estimate).abs() / exact,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BinomRatioReport {
    pub n: u64,
    pub c: f64,
    pub epsilon: f64,
    pub cn: u64,
    pub t: u64,
    pub ln_ratio: f64,
    pub ratio: f64,
    /// `−ln(ratio) · ln n / n`.
    pub normalized_exponent: f64,
}

/// `C(n, cn − t) / C(n, cn)` with `t = round(ε n / ln n)`.
pub fn binom_ratio_report(n: u64, c: f64, epsilon: f64) -> Result<BinomRatioReport> {
    if n < 2 {
        return Err(Error::Domain("need n >= 2".into()));
    }
    if !(c > 0.0 && c < 0.5) {
        return Err(Error::Domain(format!("need 0 < c < 1/2, got {c}")));
    }
    if !(epsilon > 0.0) {
        return Err(Error::Domain(format!("need epsilon > 0, got {epsilon}")));
    }
    let ln_n = (n as f64).ln();
    let cn = (c * n as f64).round() as u64;
    let t = (epsilon * n as f64 / ln_n).round() as u64;
    if t > cn {
        return Err(Error::Domain(format!("cn − t < 0 (cn = {cn}, t = {t})")));
    }
    // C(n, j−1) / C(n, j) = j / (n − j + 1)
    let ln_ratio: f64 = (0..t)
        .map(|i| {
            let j = cn - i;
            (j as f64).ln() - ((n - j + 1) as f64).ln()
        })
        .sum();
    Ok(BinomRatioReport {
        n,
        c,
        epsilon,
        cn,
        t,
        ln_ratio,
        ratio: ln_ratio.exp(),
        normalized_exponent: -ln_ratio * ln_n / n as f64,
    })
}

/// Samples handed to one random stream.
pub const MONTE_CARLO_BLOCK: usize = 256;

/// Largest `n` the sampler accepts.
pub const MONTE_CARLO_MAX_N: usize = 62;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub n: usize,
    pub k: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    pub atom_fraction: f64,
    pub std_error: f64,
}

/// Fraction of atoms among random sets `A ⊆ [0, n]` with `0 ∈ A`.
///
/// With `k`, `A \ {0}` is a uniform `(k−1)`-subset of `[1, n]` drawn by a
/// partial Fisher–Yates shuffle; without it, `A` is uniform over all `2^n`
/// sets containing 0, and `{0}` counts as a non-atom.
///
/// Streams: sample `i` belongs to block `i / 256`, and block `j` draws from
/// ChaCha8 seeded with `seed_from_u64(seed)` on stream `j`. The estimate
/// therefore does not depend on the number of threads.
pub fn monte_carlo_atom_fraction(
    n: usize,
    k: Option<usize>,
    samples: usize,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if !(1..=MONTE_CARLO_MAX_N).contains(&n) {
        return Err(Error::Domain(format!("need 1 <= n <= {MONTE_CARLO_MAX_N}, got {n}")));
    }
    if let Some(k) = k {
        if !(2..=n + 1).contains(&k) {
            return Err(Error::Domain(format!("k = {k} outside [2, {}]", n + 1)));
        }
    }
    if samples == 0 {
        return Err(Error::Domain("samples must be positive".into()));
    }
    let blocks = samples.div_ceil(MONTE_CARLO_BLOCK);
    let atoms: usize = (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(block as u64);
            let start = block * MONTE_CARLO_BLOCK;
            let end = (start + MONTE_CARLO_BLOCK).min(samples);
            let mut pool: Vec<u32> = (1..=n as u32).collect();
            (start..end)
                .filter(|_| {
                    let mask = match k {
                        Some(k) => sample_k_subset(&mut rng, &mut pool, k - 1),
                        None => random_subset(&mut rng, n),
                    };
                    is_atom_mask(mask)
                })
                .count()
        })
        .sum();
    let f = atoms as f64 / samples as f64;
    Ok(MonteCarloEstimate {
        n,
        k,
        samples,
        seed,
        atom_fraction: f,
        std_error: (f * (1.0 - f) / samples as f64).sqrt(),
    })
}

fn sample_k_subset<R: Rng>(rng: &mut R, pool: &mut [u32], picks: usize) -> u64 {
    let mut mask = 1u64;
    for i in 0..picks {
        let j = rng.gen_range(i..pool.len());
        pool.swap(i, j);
        mask |= 1 << pool[i];
    }
    mask
}

fn random_subset<R: RngCore>(rng: &mut R, n: usize) -> u64 {
    (rng.next_u64() & ((1u64 << n) - 1)) << 1 | 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// `k < n/2` but `α_{n,k} >= α_{n,k+1}`.
    Increasing,
    /// `k >= n/2` but `α_{n,k} <= α_{n,k+1}`.
    Decreasing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnimodalityViolation {
    pub k: usize,
    pub expected: Direction,
    pub alpha_k: u64,
    pub alpha_next: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnimodalityReport {
    pub n: usize,
    /// `α_{n,k}` for `k = 1..=n+1`.
    pub row: Vec<u64>,
    pub violations: Vec<UnimodalityViolation>,
}

impl UnimodalityReport {
    /// Violations with `lo < k < hi`.
    pub fn violations_between(&self, lo: f64, hi: f64) -> usize {
        self.violations
            .iter()
            .filter(|v| lo < v.k as f64 && (v.k as f64) < hi)
            .count()
    }
}

/// Checks `α_{n,k} < α_{n,k+1}` for `k < n/2` and `α_{n,k} > α_{n,k+1}`
/// otherwise, for `1 <= k <= n`.
pub fn unimodality_report(n: usize) -> Result<UnimodalityReport> {
    Ok(unimodality_from_table(&alpha_table(n)?))
}

pub fn unimodality_from_table(table: &AlphaTable) -> UnimodalityReport {
    let n = table.n;
    let violations = (1..=n)
        .filter_map(|k| {
            let (a, b) = (table.get(k), table.get(k + 1));
            let (expected, ok) = if 2 * k < n {
                (Direction::Increasing, a < b)
            } else {
                (Direction::Decreasing, a > b)
            };
            (!ok).then_some(UnimodalityViolation {
                k,
                expected,
                alpha_k: a,
                alpha_next: b,
            })
        })
        .collect();
    UnimodalityReport {
        n,
        row: (1..=n + 1).map(|k| table.get(k)).collect(),
        violations,
    }
}

/// `C(n, k−1) − α_{n,k}`, the number of non-atoms of size `k`.
pub fn non_atom_count(table: &AlphaTable, k: usize) -> u128 {
    binomial(table.n as i64, k as i64 - 1) - table.get(k) as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_small_rows() {
        let rows = density_report(3).unwrap();
        // {0} is counted with the atoms
        assert_eq!((rows[0].alpha_n, rows[0].ratio), (2, 1.0));
        assert_eq!((rows[1].alpha_n, rows[1].ratio), (3, 0.75));
        let mut buf = Vec::new();
        write_csv(&rows[..1], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,alpha_n,ratio\n1,2,1.0\n");
    }

    #[test]
    fn moment_examples() {
        let m = moments(1, 1).unwrap();
        assert_eq!(m.e_x, BigRational::new(3.into(), 2.into()));
        assert_eq!(m.e_y, BigRational::new(1.into(), 2.into()));
        assert_eq!(m.ratio, 3.0);
        let m = moments(5, 0).unwrap();
        assert_eq!(m.ratio, 1.0);
        assert!(moments(16, 1).unwrap().distance_from_one() < moments(8, 1).unwrap().distance_from_one());
    }

    #[test]
    fn binomial_moment_closed_forms() {
        for n in 0..=64usize {
            let nr = BigRational::from_integer(BigInt::from(n));
            assert_eq!(binomial_moment(n, 1), &nr / BigInt::from(2));
            let second = &nr / BigInt::from(4) + &nr * &nr / BigInt::from(4);
            assert_eq!(binomial_moment(n, 2), second);
            assert_eq!(binomial_moment(n, 0), BigRational::one());
        }
    }

    #[test]
    fn moment_csv_schema() {
        let mut buf = Vec::new();
        write_csv(&[moments(1, 1).unwrap()], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,r,e_x_num,e_x_den,e_y_num,e_y_den,ratio\n1,1,3,2,1,2,3.0\n"
        );
    }

    #[test]
    fn entropy_values() {
        assert!((entropy(0.5).unwrap().value - 2f64.ln()).abs() < 1e-15);
        assert!(entropy(0.111).unwrap().value > 0.5 * 2f64.ln());
        assert!((entropy(0.3).unwrap().value - entropy(0.7).unwrap().value).abs() < 1e-15);
        let b = entropy(1.0).unwrap();
        assert!(b.boundary && b.value == 0.0);
        assert!(entropy(1.5).is_err());
    }

    #[test]
    fn stirling_trend() {
        let small = stirling_report(1000, 500).unwrap();
        assert!(small.relative_error < 0.02);
        assert!(stirling_report(10_000, 5000).unwrap().relative_error < small.relative_error);
        assert!(stirling_report(2, 1).unwrap().relative_error.is_finite());
        assert!(stirling_report(5, 5).is_err());
        assert!((ln_binomial(10, 3) - 120f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn binom_ratio_examples() {
        let r = binom_ratio_report(1024, 0.25, 0.5).unwrap();
        assert!(r.ratio < 1.0);
        let big = binom_ratio_report(4096, 0.25, 0.5).unwrap();
        assert!(big.normalized_exponent >= 0.9 * r.normalized_exponent);
        let tiny = binom_ratio_report(100, 0.25, 0.001).unwrap();
        assert_eq!((tiny.t, tiny.ratio), (0, 1.0));
        assert!(binom_ratio_report(100, 0.01, 3.0).is_err());
        // exact check against the binomials themselves
        let r = binom_ratio_report(40, 0.3, 1.0).unwrap();
        let exact = binomial(40, (r.cn - r.t) as i64) as f64 / binomial(40, r.cn as i64) as f64;
        assert!((r.ratio - exact).abs() < 1e-12);
    }

    #[test]
    fn monte_carlo_contracts() {
        let full = monte_carlo_atom_fraction(10, Some(11), 50, 3).unwrap();
        assert_eq!(full.atom_fraction, 0.0);
        let a = monte_carlo_atom_fraction(12, Some(5), 1, 9).unwrap();
        assert_eq!(a, monte_carlo_atom_fraction(12, Some(5), 1, 9).unwrap());
        assert!(monte_carlo_atom_fraction(10, Some(1), 5, 0).is_err());
        assert!(monte_carlo_atom_fraction(10, Some(12), 5, 0).is_err());
        assert!(monte_carlo_atom_fraction(63, None, 5, 0).is_err());
        assert!(monte_carlo_atom_fraction(10, None, 0, 0).is_err());
        // all sets containing 0 with max <= 1 are {0} and {0,1}
        let e = monte_carlo_atom_fraction(1, None, 4000, 5).unwrap();
        assert!((e.atom_fraction - 0.5).abs() < 4.0 * e.std_error);
    }

    #[test]
    fn k_subsets_have_the_right_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut pool: Vec<u32> = (1..=20).collect();
        for picks in 0..=20 {
            let m = sample_k_subset(&mut rng, &mut pool, picks);
            assert_eq!(m.count_ones() as usize, picks + 1);
            assert!(m >> 21 == 0);
        }
    }

    #[test]
    fn unimodality_small_row() {
        let u = unimodality_report(4).unwrap();
        // [0,4] = {0,1} + [0,3]
        assert_eq!(u.row, vec![1, 4, 4, 2, 0]);
        // k = 2 is not below n/2, so a strict decrease is expected, but α_{4,2} = α_{4,3}
        assert_eq!(u.violations.len(), 1);
        assert_eq!((u.violations[0].k, u.violations[0].expected), (2, Direction::Decreasing));
    }
}
