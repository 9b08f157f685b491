//! Symbol balancing in `q - 1` rounds.
//!
//! Round `v` settles the symbol `t = -q - 1 + 2v` at exactly `k/q`
//! occurrences by adding, modulo the size of the sub-alphabet
//! `{t, ..., q-1}`, one of two constants to the unsettled symbols: `t - m`
//! up to the split position and `t - M` after it, where `m` and `M` are the
//! least and most frequent unsettled symbols.

use std::collections::BTreeMap;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::prefix::{sb_round_target, SbRound, SideInfo};

struct RoundShape {
    target: i32,
    size: i64,
}

impl RoundShape {
    fn new(v: u32, q: u32) -> Self {
        RoundShape {
            target: sb_round_target(v, q),
            size: (q + 1 - v) as i64,
        }
    }

    fn contains(&self, s: i32) -> bool {
        s >= self.target
    }

    fn add(&self, s: i32, amount: i64) -> i32 {
        if !self.contains(s) {
            return s;
        }
        let t = self.target as i64;
        ((s as i64 + amount - t).rem_euclid(2 * self.size) + t) as i32
    }
}

/// Least and most frequent symbols of round `v`'s sub-alphabet, with ties
/// going to the smallest and largest symbol respectively.
pub fn extreme_symbols(word: &[i32], v: u32, q: u32) -> (i32, i32) {
    let shape = RoundShape::new(v, q);
    let symbols: Vec<i32> = (shape.target..q as i32).step_by(2).collect();
    let count = |s: i32| word.iter().filter(|&&x| x == s).count();
    let least = *symbols.iter().min_by_key(|&&s| count(s)).unwrap();
    let most = *symbols.iter().max_by_key(|&&s| count(s)).unwrap();
    (least, most)
}

fn apply_round(word: &[i32], v: u32, q: u32, round: &SbRound, sign: i64) -> Vec<i32> {
    let shape = RoundShape::new(v, q);
    let t = shape.target as i64;
    let early = sign * (t - round.least as i64);
    let late = sign * (t - round.most as i64);
    word.iter()
        .enumerate()
        .map(|(i, &s)| shape.add(s, if i < round.split { early } else { late }))
        .collect()
}

/// Split positions in `[0, k]` that settle round `v`'s symbol.
fn valid_splits(word: &[i32], v: u32, q: u32, least: i32, most: i32) -> Vec<usize> {
    let shape = RoundShape::new(v, q);
    let t = shape.target as i64;
    let m = word.len() / q as usize;
    let hits = |amount: i64| -> Vec<bool> {
        word.iter()
            .map(|&s| shape.add(s, amount) == shape.target)
            .collect()
    };
    let early = hits(t - least as i64);
    let late = hits(t - most as i64);
    let mut count = late.iter().filter(|&&h| h).count();
    let mut splits = Vec::new();
    for i in 0..=word.len() {
        if count == m {
            splits.push(i);
        }
        if i < word.len() {
            count = count + early[i] as usize - late[i] as usize;
        }
    }
    splits
}

pub fn balance(
    data: &[i32],
    alphabet: &Alphabet,
    injected: &BTreeMap<usize, usize>,
) -> Result<(Vec<i32>, SideInfo)> {
    let q = alphabet.q();
    if let Some((&round, _)) = injected.range(q as usize..).next() {
        return Err(Error::out_of_range("round", round, q));
    }
    let mut word = data.to_vec();
    let mut rounds = Vec::with_capacity(q as usize - 1);
    for v in 1..q {
        let (least, most) = extreme_symbols(&word, v, q);
        let splits = valid_splits(&word, v, q, least, most);
        let split = match injected.get(&(v as usize)) {
            Some(i) if splits.contains(i) => *i,
            Some(_) => return Err(Error::InvalidInjection { what: "split" }),
            None => *splits.first().ok_or(Error::BalancingIndexMissing("sb"))?,
        };
        let round = SbRound { split, least, most };
        word = apply_round(&word, v, q, &round, 1);
        rounds.push(round);
    }
    Ok((word, SideInfo::Sb { rounds }))
}

pub fn restore(payload: &[i32], alphabet: &Alphabet, rounds: &[SbRound]) -> Result<Vec<i32>> {
    let q = alphabet.q();
    if rounds.len() != q as usize - 1 {
        return Err(Error::LengthMismatch {
            expected: q as usize - 1,
            actual: rounds.len(),
        });
    }
    let mut word = payload.to_vec();
    for (v, round) in (1..q).zip(rounds).rev() {
        if round.split > payload.len() {
            return Err(Error::out_of_range("split", round.split, payload.len() + 1));
        }
        word = apply_round(&word, v, q, round, -1);
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::is_sb;

    #[test]
    fn known_vector() {
        let u = [0, -2, -2, -2, 0, -2];
        assert_eq!(extreme_symbols(&u, 1, 3), (2, -2));
        let r1 = SbRound { split: 3, least: 2, most: -2 };
        let u1 = apply_round(&u, 1, 3, &r1, 1);
        assert_eq!(u1, vec![2, 0, 0, -2, 0, -2]);
        assert_eq!(extreme_symbols(&u1, 2, 3), (2, 0));
        let r2 = SbRound { split: 3, least: 2, most: 0 };
        let u2 = apply_round(&u1, 2, 3, &r2, 1);
        assert_eq!(u2, vec![0, 2, 2, -2, 0, -2]);
        assert!(is_sb(&u2, 3));

        let a3 = Alphabet::new(3).unwrap();
        let inj = BTreeMap::from([(1, 3), (2, 3)]);
        let (x, side) = balance(&u, &a3, &inj).unwrap();
        assert_eq!(x, u2);
        let SideInfo::Sb { rounds } = side else { panic!() };
        assert_eq!(restore(&x, &a3, &rounds).unwrap(), u);
    }

    #[test]
    fn splits_are_checked_directly() {
        let u = [0, -2, -2, -2, 0, -2];
        let splits = valid_splits(&u, 1, 3, 2, -2);
        for i in 0..=u.len() {
            let r = SbRound { split: i, least: 2, most: -2 };
            let hit = apply_round(&u, 1, 3, &r, 1).iter().filter(|&&s| s == -2).count() == 2;
            assert_eq!(splits.contains(&i), hit);
        }
    }

    #[test]
    fn rejects_bad_split() {
        let a3 = Alphabet::new(3).unwrap();
        let inj = BTreeMap::from([(1, 0)]);
        assert!(balance(&[0, -2, -2, -2, 0, -2], &a3, &inj).is_err());
    }
}
