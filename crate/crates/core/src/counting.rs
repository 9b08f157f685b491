//! Exact cardinalities of balanced word sets and the resulting minimum
//! redundancies.
//!
//! Charges are tracked through symbol *levels*: the symbol `2l - (q - 1)` has
//! level `l`, so a word of length `n` with level sum `L` has charge
//! `2L - n(q - 1)`. Level sums are nonnegative and dense, which keeps every
//! distribution a plain vector.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::alphabet::{self, Alphabet, BalanceKind};
use crate::error::{Error, Result};

/// Exact count of words.
pub type BigCount = BigUint;

/// Largest length accepted by [`joint_census`].
pub const MAX_CENSUS_LENGTH: usize = 512;
/// Largest table (in cells) accepted by [`joint_census`].
pub const MAX_CENSUS_CELLS: usize = 1 << 22;
/// Largest `q^n` that [`brute_force_count`] will enumerate.
pub const BRUTE_FORCE_BUDGET: u64 = 10_000_000;

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(sum parts)! / prod(parts!)`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0u64;
    for &p in parts {
        total += p as u64;
        acc *= binomial(total, p as u64);
    }
    acc
}

/// Symbol-balanced words: `n! / ((n/q)!)^q`, zero unless `q | n`.
pub fn count_sb(n: usize, q: u32) -> BigCount {
    assert!(q >= 2, "q must be at least 2");
    if n % q as usize != 0 {
        return BigUint::zero();
    }
    multinomial(&vec![n / q as usize; q as usize])
}

/// Number of words of length `n` per level sum, indexed `0..=n(q-1)`.
pub fn charge_distribution(n: usize, q: u32) -> Vec<BigUint> {
    assert!(q >= 2, "q must be at least 2");
    let mut dist = vec![BigUint::one()];
    for _ in 0..n {
        dist = convolve_uniform(&dist, q as usize);
    }
    dist
}

/// One more position with `width` equally likely levels.
pub(crate) fn convolve_uniform(dist: &[BigUint], width: usize) -> Vec<BigUint> {
    let mut next = vec![BigUint::zero(); dist.len() + width - 1];
    for (i, c) in dist.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for slot in &mut next[i..i + width] {
            *slot += c;
        }
    }
    next
}

/// Number of words of length `n` per polarity sum `d`, indexed by `d + n`.
pub fn polarity_distribution(n: usize, q: u32) -> Vec<BigUint> {
    assert!(q >= 2, "q must be at least 2");
    let mut dist = vec![BigUint::one()];
    for _ in 0..n {
        dist = extend_polarity(&dist, q);
    }
    dist
}

/// One more position: `q/2` ways down, one way level (odd `q`), `q/2` up.
pub(crate) fn extend_polarity(dist: &[BigUint], q: u32) -> Vec<BigUint> {
    let half = q / 2;
    let mut next = vec![BigUint::zero(); dist.len() + 2];
    for (i, c) in dist.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        next[i] += c * half;
        if q % 2 == 1 {
            next[i + 1] += c;
        }
        next[i + 2] += c * half;
    }
    next
}

/// Charge-balanced words, by convolving the level distribution `n` times.
pub fn count_cb(n: usize, q: u32) -> BigCount {
    let spread = n * (q as usize - 1);
    if spread % 2 != 0 {
        return BigUint::zero();
    }
    charge_distribution(n, q).swap_remove(spread / 2)
}

/// Polarity-balanced words.
///
/// Even `q`: `C(n, n/2) (q/2)^n`. Odd `q`: sum over the number `j` of
/// positive (and negative) symbols of `n!/(j! j! (n-2j)!) ((q-1)/2)^(2j)`.
pub fn count_pb(n: usize, q: u32) -> BigCount {
    assert!(q >= 2, "q must be at least 2");
    let half = BigUint::from(q / 2);
    if q % 2 == 0 {
        if n % 2 != 0 {
            return BigUint::zero();
        }
        return binomial(n as u64, n as u64 / 2) * half.pow(n as u32);
    }
    (0..=n / 2)
        .map(|j| multinomial(&[j, j, n - 2 * j]) * half.pow(2 * j as u32))
        .sum()
}

/// Charge-and-polarity-balanced words.
///
/// For `q = 4` this is `C(n, n/2)^2`. Otherwise the count is split by the
/// number `j` of positive symbols: the positive and negative parts must have
/// equal magnitude sums, so it is the sum over `j` of
/// `n!/(j! j! (n-2j)!)` times the sum of squares of the `j`-fold positive
/// level-sum distribution.
pub fn count_cpb(n: usize, q: u32) -> BigCount {
    assert!(q >= 2, "q must be at least 2");
    if q == 4 {
        if n % 2 != 0 {
            return BigUint::zero();
        }
        return binomial(n as u64, n as u64 / 2).pow(2);
    }
    count_cpb_by_polarity_split(n, q)
}

pub(crate) fn count_cpb_by_polarity_split(n: usize, q: u32) -> BigCount {
    let half = q as usize / 2;
    let odd = q % 2 == 1;
    let mut total = BigUint::zero();
    let mut positives = vec![BigUint::one()];
    for j in 0..=n / 2 {
        if j > 0 {
            positives = convolve_uniform(&positives, half);
        }
        let zeros = n - 2 * j;
        if zeros > 0 && !odd {
            continue;
        }
        let matched: BigUint = positives.iter().map(|c| c * c).sum();
        total += multinomial(&[j, j, zeros]) * matched;
    }
    total
}

pub fn count(kind: BalanceKind, n: usize, q: u32) -> BigCount {
    match kind {
        BalanceKind::Sb => count_sb(n, q),
        BalanceKind::Cb => count_cb(n, q),
        BalanceKind::Pb => count_pb(n, q),
        BalanceKind::Cpb => count_cpb(n, q),
    }
}

/// Joint distribution of (charge sum, polarity sum) over all `q^n` words.
///
/// Polarity is the unit sign sum (`#positive - #negative`) for every `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointCensus {
    n: usize,
    q: u32,
    cells: Vec<BigUint>,
}

impl JointCensus {
    /// The census of the empty word.
    pub fn empty(q: u32) -> Self {
        assert!(q >= 2, "q must be at least 2");
        JointCensus {
            n: 0,
            q,
            cells: vec![BigUint::one()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    fn level_width(&self) -> usize {
        self.n * (self.q as usize - 1) + 1
    }

    fn polarity_width(&self) -> usize {
        2 * self.n + 1
    }

    /// The census for words one symbol longer.
    pub fn extended(&self) -> Self {
        let q = self.q as usize;
        let old_pw = self.polarity_width();
        let next = JointCensus {
            n: self.n + 1,
            q: self.q,
            cells: Vec::new(),
        };
        let (lw, pw) = (next.level_width(), next.polarity_width());
        let mut cells = vec![BigUint::zero(); lw * pw];
        let signs: Vec<usize> = (0..q)
            .map(|l| (2 * l as i64 - (q as i64 - 1)).signum() + 1)
            .map(|s| s as usize)
            .collect();
        for (idx, c) in self.cells.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (level, pol) = (idx / old_pw, idx % old_pw);
            for (l, &sign) in signs.iter().enumerate() {
                cells[(level + l) * pw + pol + sign] += c;
            }
        }
        JointCensus { cells, ..next }
    }

    fn index(&self, charge: i64, polarity: i64) -> Option<usize> {
        let shifted = charge + (self.n * (self.q as usize - 1)) as i64;
        if shifted < 0 || shifted % 2 != 0 {
            return None;
        }
        let level = (shifted / 2) as usize;
        let pol = polarity + self.n as i64;
        if level >= self.level_width() || pol < 0 || pol as usize >= self.polarity_width() {
            return None;
        }
        Some(level * self.polarity_width() + pol as usize)
    }

    /// Number of words with the given charge sum and polarity sum.
    pub fn get(&self, charge: i64, polarity: i64) -> BigCount {
        self.index(charge, polarity)
            .map(|i| self.cells[i].clone())
            .unwrap_or_default()
    }

    pub(crate) fn get_ref(&self, charge: i64, polarity: i64) -> Option<&BigUint> {
        self.index(charge, polarity).map(|i| &self.cells[i])
    }

    /// Nonzero cells as `(charge, polarity, count)`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, &BigUint)> + '_ {
        let pw = self.polarity_width();
        let spread = (self.n * (self.q as usize - 1)) as i64;
        let n = self.n as i64;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (2 * (i / pw) as i64 - spread, (i % pw) as i64 - n, c))
    }

    pub fn total(&self) -> BigUint {
        self.cells.iter().sum()
    }

    /// Words with the given charge, any polarity.
    pub fn charge_marginal(&self, charge: i64) -> BigUint {
        self.iter()
            .filter(|&(c, _, _)| c == charge)
            .map(|(_, _, v)| v)
            .sum()
    }

    /// Words with the given polarity, any charge.
    pub fn polarity_marginal(&self, polarity: i64) -> BigUint {
        self.iter()
            .filter(|&(_, p, _)| p == polarity)
            .map(|(_, _, v)| v)
            .sum()
    }
}

/// Exact joint census for length `n`.
pub fn joint_census(n: usize, q: u32) -> Result<JointCensus> {
    Alphabet::new(q)?;
    let cells = (n * (q as usize - 1) + 1).saturating_mul(2 * n + 1);
    if n > MAX_CENSUS_LENGTH || cells > MAX_CENSUS_CELLS {
        return Err(Error::CapacityExceeded {
            n,
            q,
            max_n: MAX_CENSUS_LENGTH,
        });
    }
    let mut census = JointCensus::empty(q);
    for _ in 0..n {
        census = census.extended();
    }
    Ok(census)
}

/// Natural logarithm of a big integer; `-inf` for zero.
pub fn ln_count(value: &BigUint) -> f64 {
    let bits = value.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    let shift = bits.saturating_sub(64);
    let top = (value >> shift).to_u64().expect("top 64 bits fit in u64");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `n - log_q M` for the exact count `M`.
pub fn exact_redundancy(kind: BalanceKind, n: usize, q: u32) -> Result<f64> {
    Alphabet::new(q)?;
    let m = count(kind, n, q);
    if m.is_zero() {
        return Err(Error::InfeasibleLength { kind, n, q });
    }
    Ok(n as f64 - ln_count(&m) / (q as f64).ln())
}

/// Counts balanced words by enumerating all `q^n` words and testing each.
pub fn brute_force_count(kind: BalanceKind, n: usize, q: u32) -> Result<BigCount> {
    let alphabet = Alphabet::new(q)?;
    let over_budget = (q as u64)
        .checked_pow(n as u32)
        .is_none_or(|total| total > BRUTE_FORCE_BUDGET);
    if over_budget {
        return Err(Error::BudgetExceeded {
            n,
            q,
            budget: BRUTE_FORCE_BUDGET,
        });
    }
    let symbols = alphabet.symbols();
    let mut levels = vec![0usize; n];
    let mut word = vec![symbols[0]; n];
    let mut hits = 0u64;
    loop {
        if alphabet::is_balanced(kind, &word, q) {
            hits += 1;
        }
        // odometer step, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(BigUint::from(hits));
            }
            pos -= 1;
            levels[pos] += 1;
            if levels[pos] < symbols.len() {
                word[pos] = symbols[levels[pos]];
                break;
            }
            levels[pos] = 0;
            word[pos] = symbols[0];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 5), big(252));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(multinomial(&[2, 2]), big(6));
        assert_eq!(factorial(5), big(120));
    }

    #[test]
    fn sb_examples() {
        assert_eq!(count_sb(4, 2), big(6));
        assert_eq!(count_sb(3, 3), big(6));
        assert_eq!(count_sb(5, 2), big(0));
        assert_eq!(count_sb(0, 3), big(1));
    }

    #[test]
    fn cb_examples() {
        assert_eq!(count_cb(4, 3), big(19));
        assert_eq!(count_cb(2, 2), big(2));
        assert_eq!(count_cb(3, 2), big(0));
    }

    #[test]
    fn pb_examples() {
        assert_eq!(count_pb(2, 2), big(2));
        assert_eq!(count_pb(2, 5), big(9));
        assert_eq!(count_pb(1, 4), big(0));
    }

    #[test]
    fn cpb_examples() {
        assert_eq!(count_cpb(2, 4), big(4));
        assert_eq!(count_cpb(10, 4), big(63504));
        assert_eq!(count_cpb(2, 3), count_cb(2, 3));
        assert_eq!(count_cpb(2, 3), count_pb(2, 3));
    }

    #[test]
    fn cpb_split_matches_binomial_square_for_q4() {
        for n in 0..=40 {
            assert_eq!(count_cpb_by_polarity_split(n, 4), count_cpb(n, 4), "n={n}");
        }
    }

    #[test]
    fn census_examples() {
        let c0 = joint_census(0, 3).unwrap();
        assert_eq!(c0.iter().count(), 1);
        assert_eq!(c0.get(0, 0), big(1));
        let c = joint_census(4, 3).unwrap();
        assert_eq!(c.charge_marginal(0), big(19));
        assert_eq!(joint_census(2, 4).unwrap().get(0, 0), big(4));
    }

    #[test]
    fn census_marginals_and_symmetry() {
        for q in 2..=6u32 {
            for n in 0..=7usize {
                let c = joint_census(n, q).unwrap();
                assert_eq!(c.total(), BigUint::from(q).pow(n as u32));
                assert_eq!(c.charge_marginal(0), count_cb(n, q));
                assert_eq!(c.polarity_marginal(0), count_pb(n, q));
                assert_eq!(c.get(0, 0), count_cpb(n, q), "q={q} n={n}");
                for (s1, s2, v) in c.iter() {
                    assert_eq!(&c.get(-s1, -s2), v);
                }
            }
        }
    }

    #[test]
    fn census_capacity() {
        assert!(matches!(
            joint_census(MAX_CENSUS_LENGTH + 1, 2),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn distributions_have_full_mass() {
        for q in 2..=6u32 {
            for n in 0..6 {
                let total = BigUint::from(q).pow(n as u32);
                assert_eq!(charge_distribution(n, q).iter().sum::<BigUint>(), total);
                assert_eq!(polarity_distribution(n, q).iter().sum::<BigUint>(), total);
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_count(BalanceKind::Cb, 4, 3).unwrap(), big(19));
        assert_eq!(brute_force_count(BalanceKind::Sb, 4, 2).unwrap(), big(6));
        assert_eq!(brute_force_count(BalanceKind::Pb, 3, 2).unwrap(), big(0));
        assert_eq!(brute_force_count(BalanceKind::Cpb, 0, 5).unwrap(), big(1));
        assert!(matches!(
            brute_force_count(BalanceKind::Cb, 24, 2),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn containment_ordering() {
        for q in 2..=7u32 {
            for n in 0..=14usize {
                let sb = count_sb(n, q);
                let cpb = count_cpb(n, q);
                assert!(sb <= cpb, "q={q} n={n}");
                assert!(cpb <= count_cb(n, q) && cpb <= count_pb(n, q));
                if q <= 3 {
                    assert_eq!(count_cb(n, q), count_pb(n, q));
                    assert_eq!(count_cb(n, q), cpb);
                }
            }
        }
    }

    #[test]
    fn redundancy_examples() {
        let r = exact_redundancy(BalanceKind::Cpb, 10, 4).unwrap();
        assert!((r - 2.0227).abs() < 5e-5, "{r}");
        let r = exact_redundancy(BalanceKind::Cpb, 1000, 4).unwrap();
        assert!((r - 5.3090).abs() < 5e-5, "{r}");
        for q in 2..=8u32 {
            let n = q as usize;
            let r = exact_redundancy(BalanceKind::Sb, n, q).unwrap();
            let lnfact: f64 = (1..=n).map(|i| (i as f64).ln()).sum();
            assert!((r - (n as f64 - lnfact / (q as f64).ln())).abs() < 1e-12);
        }
        assert!(matches!(
            exact_redundancy(BalanceKind::Cb, 3, 2),
            Err(Error::InfeasibleLength { .. })
        ));
    }

    #[test]
    fn ln_count_precision() {
        let x = BigUint::from(3u32).pow(2000);
        let expected = 2000.0 * 3f64.ln();
        assert!(((ln_count(&x) - expected) / expected).abs() < 1e-13);
        assert_eq!(ln_count(&big(1)), 0.0);
        assert_eq!(ln_count(&big(0)), f64::NEG_INFINITY);
    }
}
