//! The symmetric q-ary alphabet `{-q+1, -q+3, ..., q-3, q-1}` and the four
//! balance properties defined on words over it.
//!
//! Symbols are kept as their signed alphabet values throughout the crate. The
//! `Z_q` view (`{0, ..., q-1}`) is only a conversion: `i -> (q - 1 - i) / 2`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    q: u32,
}

impl Alphabet {
    pub fn new(q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q));
        }
        Ok(Alphabet { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_odd(&self) -> bool {
        self.q % 2 == 1
    }

    /// Largest symbol, `q - 1`.
    pub fn max_symbol(&self) -> i32 {
        self.q as i32 - 1
    }

    /// All `q` symbols in increasing order.
    pub fn symbols(&self) -> Vec<i32> {
        (0..self.q as usize).map(|l| self.symbol(l)).collect()
    }

    /// Symbol at position `level` of the increasing order (level 0 is `-q+1`).
    pub fn symbol(&self, level: usize) -> i32 {
        debug_assert!(level < self.q as usize);
        2 * level as i32 - self.max_symbol()
    }

    /// Inverse of [`Alphabet::symbol`].
    pub fn level(&self, symbol: i32) -> Option<usize> {
        let shifted = symbol + self.max_symbol();
        if shifted < 0 || shifted % 2 != 0 || shifted > 2 * self.max_symbol() {
            return None;
        }
        Some((shifted / 2) as usize)
    }

    pub fn contains(&self, symbol: i32) -> bool {
        self.level(symbol).is_some()
    }

    pub fn positive_symbols(&self) -> Vec<i32> {
        self.symbols().into_iter().filter(|&s| s > 0).collect()
    }

    pub fn negative_symbols(&self) -> Vec<i32> {
        self.symbols().into_iter().filter(|&s| s < 0).collect()
    }

    /// Number of positive (equivalently, negative) symbols: `floor(q/2)`.
    pub fn half(&self) -> u32 {
        self.q / 2
    }

    /// Addition modulo `2q` landing back in the alphabet (the `(+)_{2q}`
    /// operation). `value` must have the parity of `q - 1`.
    pub fn reduce(&self, value: i64) -> i32 {
        let offset = self.max_symbol() as i64;
        debug_assert!((value + offset) % 2 == 0, "parity mismatch for {value}");
        ((value + offset).rem_euclid(2 * self.q as i64) - offset) as i32
    }

    pub fn check_symbol(&self, symbol: i32) -> Result<()> {
        if self.contains(symbol) {
            Ok(())
        } else {
            Err(Error::SymbolOutOfAlphabet {
                symbol: symbol as i64,
                q: self.q,
            })
        }
    }

    pub fn check_word(&self, word: &[i32]) -> Result<()> {
        word.iter().try_for_each(|&s| self.check_symbol(s))
    }

    pub fn to_zq(&self, symbol: i32) -> Result<u32> {
        self.check_symbol(symbol)?;
        Ok(((self.max_symbol() - symbol) / 2) as u32)
    }

    pub fn from_zq(&self, value: u32) -> Result<i32> {
        if value >= self.q {
            return Err(Error::SymbolOutOfAlphabet {
                symbol: value as i64,
                q: self.q,
            });
        }
        Ok(self.max_symbol() - 2 * value as i32)
    }

    pub fn word_to_zq(&self, word: &[i32]) -> Result<Vec<u32>> {
        word.iter().map(|&s| self.to_zq(s)).collect()
    }

    pub fn word_from_zq(&self, values: &[u32]) -> Result<Vec<i32>> {
        values.iter().map(|&v| self.from_zq(v)).collect()
    }
}

/// The four balance properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BalanceKind {
    /// Every symbol appears `n/q` times.
    Sb,
    /// Symbol sum is zero.
    Cb,
    /// As many positive as negative symbols.
    Pb,
    /// Both CB and PB.
    Cpb,
}

impl BalanceKind {
    pub const ALL: [BalanceKind; 4] = [
        BalanceKind::Sb,
        BalanceKind::Cb,
        BalanceKind::Pb,
        BalanceKind::Cpb,
    ];

    /// Whether words of length `n` over `A_q` can have this property at all.
    pub fn admits_length(self, n: usize, q: u32) -> bool {
        match self {
            BalanceKind::Sb => n % q as usize == 0,
            _ => q % 2 == 1 || n % 2 == 0,
        }
    }

    /// Step between consecutive feasible lengths.
    pub fn length_step(self, q: u32) -> usize {
        match self {
            BalanceKind::Sb => q as usize,
            _ if q % 2 == 0 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for BalanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BalanceKind::Sb => "SB",
            BalanceKind::Cb => "CB",
            BalanceKind::Pb => "PB",
            BalanceKind::Cpb => "CPB",
        };
        f.write_str(s)
    }
}

impl FromStr for BalanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sb" => Ok(BalanceKind::Sb),
            "cb" => Ok(BalanceKind::Cb),
            "pb" => Ok(BalanceKind::Pb),
            "cpb" => Ok(BalanceKind::Cpb),
            other => Err(Error::Parse(format!("unknown balance kind '{other}'"))),
        }
    }
}

/// `Sum(y)`, the real sum of the symbols.
pub fn charge_sum(word: &[i32]) -> i64 {
    word.iter().map(|&s| s as i64).sum()
}

/// Number of positive symbols minus number of negative symbols.
pub fn polarity_sum(word: &[i32]) -> i64 {
    word.iter().map(|&s| s.signum() as i64).sum()
}

/// `S_j(y)`, the number of occurrences of symbol `j`.
pub fn symbol_count(word: &[i32], symbol: i32, alphabet: &Alphabet) -> Result<usize> {
    alphabet.check_symbol(symbol)?;
    Ok(word.iter().filter(|&&s| s == symbol).count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiMode {
    /// `-1/2` for negative symbols, `+1/2` for positive ones (even q).
    Half,
    /// The sign of the symbol, `-1`, `0` or `+1`.
    Unit,
}

/// Polarity weight of a symbol.
pub fn phi(symbol: i32, mode: PhiMode) -> Ratio<i32> {
    match mode {
        PhiMode::Half => Ratio::new(symbol.signum(), 2),
        PhiMode::Unit => Ratio::from_integer(symbol.signum()),
    }
}

pub fn is_sb(word: &[i32], q: u32) -> bool {
    let Ok(alphabet) = Alphabet::new(q) else {
        return false;
    };
    if word.len() % q as usize != 0 {
        return false;
    }
    let mut counts = vec![0usize; q as usize];
    for &s in word {
        match alphabet.level(s) {
            Some(l) => counts[l] += 1,
            None => return false,
        }
    }
    let m = word.len() / q as usize;
    counts.iter().all(|&c| c == m)
}

pub fn is_cb(word: &[i32]) -> bool {
    charge_sum(word) == 0
}

pub fn is_pb(word: &[i32]) -> bool {
    polarity_sum(word) == 0
}

pub fn is_cpb(word: &[i32]) -> bool {
    is_cb(word) && is_pb(word)
}

pub fn is_balanced(kind: BalanceKind, word: &[i32], q: u32) -> bool {
    match kind {
        BalanceKind::Sb => is_sb(word, q),
        BalanceKind::Cb => is_cb(word),
        BalanceKind::Pb => is_pb(word),
        BalanceKind::Cpb => is_cpb(word),
    }
}

/// A word in the comma-separated text format, e.g. `+4,+4,-2,0,0,0,0`.
///
/// Positive symbols are written with a leading `+`; parsing accepts it as
/// optional. The empty string is the empty word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn new(symbols: Vec<i32>) -> Self {
        Word(symbols)
    }

    pub fn into_inner(self) -> Vec<i32> {
        self.0
    }
}

impl Deref for Word {
    type Target = [i32];

    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl From<Vec<i32>> for Word {
    fn from(v: Vec<i32>) -> Self {
        Word(v)
    }
}

impl From<&[i32]> for Word {
    fn from(v: &[i32]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if *s > 0 {
                write!(f, "+{s}")?;
            } else {
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        s.split(',')
            .map(|tok| {
                let tok = tok.trim();
                let digits = tok.strip_prefix('+').unwrap_or(tok);
                if digits.starts_with('+') || digits.starts_with("-+") {
                    return Err(Error::Parse(format!("bad symbol '{tok}'")));
                }
                digits
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad symbol '{tok}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every word of length `n` over `A_q`, in lexicographic order.
    pub(crate) fn all_words(n: usize, q: u32) -> Vec<Vec<i32>> {
        let a = Alphabet::new(q).unwrap();
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    a.symbols().into_iter().map(move |s| {
                        let mut w = w.clone();
                        w.push(s);
                        w
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn symbol_sets() {
        assert_eq!(Alphabet::new(4).unwrap().symbols(), vec![-3, -1, 1, 3]);
        assert_eq!(Alphabet::new(5).unwrap().symbols(), vec![-4, -2, 0, 2, 4]);
        assert_eq!(Alphabet::new(2).unwrap().symbols(), vec![-1, 1]);
        assert!(Alphabet::new(1).is_err());
    }

    #[test]
    fn zero_is_a_symbol_iff_q_odd() {
        for q in 2..12 {
            let a = Alphabet::new(q).unwrap();
            assert_eq!(a.contains(0), q % 2 == 1);
            let s = a.symbols();
            assert_eq!(s.len(), q as usize);
            assert!(s.windows(2).all(|w| w[1] - w[0] == 2));
        }
    }

    #[test]
    fn zq_mapping() {
        let a = Alphabet::new(4).unwrap();
        assert_eq!(a.word_to_zq(&[-3, -1, 1, 3]).unwrap(), vec![3, 2, 1, 0]);
        let b = Alphabet::new(2).unwrap();
        assert_eq!(b.word_to_zq(&[1]).unwrap(), vec![0]);
        for q in 2..9 {
            let a = Alphabet::new(q).unwrap();
            for v in 0..q {
                assert_eq!(a.to_zq(a.from_zq(v).unwrap()).unwrap(), v);
            }
        }
        assert!(a.to_zq(2).is_err());
        assert!(a.from_zq(4).is_err());
    }

    #[test]
    fn sums_and_counts() {
        assert_eq!(charge_sum(&[3, -1, -1, -1]), 0);
        assert_eq!(charge_sum(&[]), 0);
        assert_eq!(charge_sum(&[-3, -1, 1, 1]), -2);
        let a5 = Alphabet::new(5).unwrap();
        let a3 = Alphabet::new(3).unwrap();
        assert_eq!(symbol_count(&[0, -2, -2, -2, 0, -2], -2, &a3).unwrap(), 4);
        assert_eq!(symbol_count(&[0, 0], 2, &a3).unwrap(), 0);
        assert_eq!(symbol_count(&[4, 4, -2, 0, 0, 0, 0], 0, &a5).unwrap(), 4);
        assert!(symbol_count(&[0], 1, &a5).is_err());
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(0, PhiMode::Unit), Ratio::from_integer(0));
        assert_eq!(phi(3, PhiMode::Half), Ratio::new(1, 2));
        assert_eq!(phi(-4, PhiMode::Unit), Ratio::from_integer(-1));
    }

    #[test]
    fn predicate_examples() {
        let w = [-2, -2, 2, 0, -2, 2, 2, 2, -2];
        assert!(is_cb(&w) && is_pb(&w) && !is_sb(&w, 3));
        let w = [-3, -3, 3, 3];
        assert!(is_cpb(&w) && !is_sb(&w, 4));
        assert!(is_cb(&[3, -1, -1, -1]) && !is_pb(&[3, -1, -1, -1]));
        assert!(is_pb(&[-3, -1, 1, 1]) && !is_cb(&[-3, -1, 1, 1]));
        assert!(!is_cb(&[1, 1, -1]));
    }

    #[test]
    fn sb_implies_cb_and_pb_exhaustive() {
        for q in 2..=5u32 {
            for n in 0..=8usize {
                if (q as u64).pow(n as u32) > 400_000 {
                    continue;
                }
                for w in all_words(n, q) {
                    if is_sb(&w, q) {
                        assert!(is_cb(&w) && is_pb(&w), "{w:?}");
                    }
                    let a = Alphabet::new(q).unwrap();
                    let total: usize = a
                        .symbols()
                        .iter()
                        .map(|&s| symbol_count(&w, s, &a).unwrap())
                        .sum();
                    assert_eq!(total, n);
                    if q % 2 == 0 {
                        assert_eq!(charge_sum(&w).rem_euclid(2), (n % 2) as i64);
                    }
                }
            }
        }
    }

    #[test]
    fn cb_equals_pb_for_small_q() {
        for q in 2..=3u32 {
            for n in 0..=10usize {
                for w in all_words(n, q) {
                    assert_eq!(is_cb(&w), is_pb(&w), "{w:?}");
                }
            }
        }
    }

    #[test]
    fn reduce_lands_in_alphabet() {
        for q in 2..9 {
            let a = Alphabet::new(q).unwrap();
            for s in a.symbols() {
                for add in (-4 * q as i64..=4 * q as i64).step_by(2) {
                    let r = a.reduce(s as i64 + add);
                    assert!(a.contains(r));
                    assert_eq!((r as i64 - s as i64 - add).rem_euclid(2 * q as i64), 0);
                }
            }
        }
    }

    #[test]
    fn word_text_format() {
        let w: Word = "+4,+4,-2,0,0,0,0".parse().unwrap();
        assert_eq!(&*w, &[4, 4, -2, 0, 0, 0, 0]);
        assert_eq!(w.to_string(), "+4,+4,-2,0,0,0,0");
        let w: Word = "4, -2".parse().unwrap();
        assert_eq!(w.to_string(), "+4,-2");
        assert_eq!("".parse::<Word>().unwrap().len(), 0);
        assert!("1,,2".parse::<Word>().is_err());
        assert!("x".parse::<Word>().is_err());
        assert!("++1".parse::<Word>().is_err());
    }

    proptest::proptest! {
        #[test]
        fn zq_roundtrip(q in 2u32..12, levels in proptest::collection::vec(0usize..64, 0..20)) {
            let a = Alphabet::new(q).unwrap();
            let w: Vec<i32> = levels.iter().map(|&l| a.symbol(l % q as usize)).collect();
            let z = a.word_to_zq(&w).unwrap();
            proptest::prop_assert_eq!(a.word_from_zq(&z).unwrap(), w);
        }
    }
}
