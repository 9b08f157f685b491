//! Balanced prefixes that carry each construction's side information.
//!
//! Side information is packed into a single integer by mixed-radix
//! positional notation (first field most significant), and that integer is
//! mapped to a balanced word by lexicographic enumerative unranking. Symbol
//! order is the numeric one, `-q+1 < ... < q-1`, and the first position is
//! the most significant.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::alphabet::{self, Alphabet, BalanceKind};
use crate::codecs::Construction;
use crate::counting::{self, convolve_uniform, extend_polarity, multinomial, BigCount, JointCensus};
use crate::error::{Error, Result};

/// Which polarity class receives the charge-adjusting addition in the CPB
/// construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }

    fn digit(self) -> u64 {
        match self {
            Side::Plus => 0,
            Side::Minus => 1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "+",
            Side::Minus => "-",
        })
    }
}

/// Data recorded by one SB round: the split position and the least and most
/// frequent symbols of the round's sub-alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SbRound {
    pub split: usize,
    pub least: i32,
    pub most: i32,
}

/// What a decoder needs to undo an encoder's modification.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "construction", rename_all = "lowercase")]
pub enum SideInfo {
    /// Number of leading symbols negated.
    Knuth { flip: usize },
    /// Offset symbol (odd `q` only) and number of leading symbols negated.
    Pb { offset: Option<i32>, flip: usize },
    /// Index of the balancing sequence added.
    Cb { shift: usize },
    Cpb {
        offset: Option<i32>,
        flip: usize,
        mirrored: bool,
        side: Side,
        shift: usize,
    },
    Sb { rounds: Vec<SbRound> },
}

impl SideInfo {
    pub fn construction(&self) -> Construction {
        match self {
            SideInfo::Knuth { .. } => Construction::Knuth,
            SideInfo::Pb { .. } => Construction::Pb,
            SideInfo::Cb { .. } => Construction::Cb,
            SideInfo::Cpb { .. } => Construction::Cpb,
            SideInfo::Sb { .. } => Construction::Sb,
        }
    }
}

/// Size of the side-information space for a construction.
pub fn side_info_space(construction: Construction, q: u32, k: usize) -> BigCount {
    radices(construction, q, k)
        .into_iter()
        .fold(BigUint::from(1u32), |acc, r| acc * r)
}

/// Mixed-radix digit sizes, most significant first.
fn radices(construction: Construction, q: u32, k: usize) -> Vec<u64> {
    let (q64, k64) = (q as u64, k as u64);
    let offset = if q % 2 == 1 { vec![q64] } else { vec![] };
    match construction {
        Construction::Knuth => vec![k64],
        Construction::Pb => [offset, vec![k64]].concat(),
        Construction::Cb => vec![q64 * k64],
        Construction::Cpb => [
            offset,
            vec![k64, 2, 2, (q64 / 2) * (k64 / 2)],
        ]
        .concat(),
        Construction::Sb => (1..q64)
            .flat_map(|v| [k64 + 1, q64 + 1 - v, q64 + 1 - v])
            .collect(),
    }
}

fn digit(what: &'static str, value: u64, radix: u64) -> Result<u64> {
    if value < radix {
        Ok(value)
    } else {
        Err(Error::out_of_range(what, value, radix))
    }
}

fn offset_digit(offset: Option<i32>, alphabet: &Alphabet) -> Result<Vec<u64>> {
    match (offset, alphabet.is_odd()) {
        (Some(a), true) => {
            alphabet.check_symbol(a)?;
            Ok(vec![alphabet.level(a).unwrap() as u64])
        }
        (None, false) => Ok(vec![]),
        (Some(_), false) => Err(Error::Parse("offset is only used for odd q".into())),
        (None, true) => Err(Error::Parse("offset is required for odd q".into())),
    }
}

/// Position of `symbol` within the SB round-`v` sub-alphabet.
fn round_digit(symbol: i32, v: u32, q: u32) -> Result<u64> {
    let floor = sb_round_target(v, q);
    if symbol < floor || symbol > q as i32 - 1 || (symbol - floor) % 2 != 0 {
        return Err(Error::out_of_range(
            "round symbol",
            symbol,
            format!("sub-alphabet [{floor}, {}]", q - 1),
        ));
    }
    Ok(((symbol - floor) / 2) as u64)
}

/// The symbol settled in SB round `v`: `-q - 1 + 2v`.
pub(crate) fn sb_round_target(v: u32, q: u32) -> i32 {
    2 * v as i32 - q as i32 - 1
}

/// Mixed-radix packing of side information into `[0, P)`.
pub fn pack(side: &SideInfo, q: u32, k: usize) -> Result<BigCount> {
    let alphabet = Alphabet::new(q)?;
    let construction = side.construction();
    let radix = radices(construction, q, k);
    let digits: Vec<u64> = match side {
        SideInfo::Knuth { flip } => vec![*flip as u64],
        SideInfo::Pb { offset, flip } => {
            let mut d = offset_digit(*offset, &alphabet)?;
            d.push(*flip as u64);
            d
        }
        SideInfo::Cb { shift } => vec![*shift as u64],
        SideInfo::Cpb {
            offset,
            flip,
            mirrored,
            side,
            shift,
        } => {
            let mut d = offset_digit(*offset, &alphabet)?;
            d.extend([*flip as u64, *mirrored as u64, side.digit(), *shift as u64]);
            d
        }
        SideInfo::Sb { rounds } => {
            if rounds.len() != q as usize - 1 {
                return Err(Error::LengthMismatch {
                    expected: q as usize - 1,
                    actual: rounds.len(),
                });
            }
            let mut d = Vec::with_capacity(3 * rounds.len());
            for (v, r) in (1..).zip(rounds) {
                d.push(r.split as u64);
                d.push(round_digit(r.least, v, q)?);
                d.push(round_digit(r.most, v, q)?);
            }
            d
        }
    };
    let mut acc = BigUint::zero();
    for (value, radix) in digits.into_iter().zip(radix) {
        acc = acc * radix + digit("side-info field", value, radix)?;
    }
    Ok(acc)
}

/// Inverse of [`pack`].
pub fn unpack(index: &BigCount, construction: Construction, q: u32, k: usize) -> Result<SideInfo> {
    let alphabet = Alphabet::new(q)?;
    let space = side_info_space(construction, q, k);
    if *index >= space {
        return Err(Error::out_of_range("side-info index", index, space));
    }
    let radix = radices(construction, q, k);
    let mut digits = vec![0u64; radix.len()];
    let mut rest = index.clone();
    for (slot, &r) in digits.iter_mut().zip(&radix).rev() {
        *slot = (&rest % r).to_u64().unwrap();
        rest /= r;
    }
    let mut it = digits.into_iter();
    let mut next = || it.next().unwrap();
    let side = match construction {
        Construction::Knuth => SideInfo::Knuth {
            flip: next() as usize,
        },
        Construction::Pb => {
            let offset = alphabet.is_odd().then(|| alphabet.symbol(next() as usize));
            SideInfo::Pb {
                offset,
                flip: next() as usize,
            }
        }
        Construction::Cb => SideInfo::Cb {
            shift: next() as usize,
        },
        Construction::Cpb => {
            let offset = alphabet.is_odd().then(|| alphabet.symbol(next() as usize));
            SideInfo::Cpb {
                offset,
                flip: next() as usize,
                mirrored: next() == 1,
                side: if next() == 0 { Side::Plus } else { Side::Minus },
                shift: next() as usize,
            }
        }
        Construction::Sb => SideInfo::Sb {
            rounds: (1..q)
                .map(|v| {
                    let floor = sb_round_target(v, q);
                    let split = next() as usize;
                    let least = floor + 2 * next() as i32;
                    let most = floor + 2 * next() as i32;
                    SbRound { split, least, most }
                })
                .collect(),
        },
    };
    Ok(side)
}

/// Prefix sizing for one construction and data length.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrefixPlan {
    pub construction: Construction,
    pub q: u32,
    pub k: usize,
    /// Number of distinct side-information values, `P`.
    #[serde(serialize_with = "crate::serialize_big")]
    pub space: BigCount,
    /// `log_q P`, the prefix length ignoring the balance constraint.
    pub unbalanced_length: f64,
    /// Smallest feasible `p` with at least `P` balanced words of length `p`.
    pub length: usize,
}

impl PrefixPlan {
    pub fn kind(&self) -> BalanceKind {
        self.construction.balance_kind()
    }
}

pub fn plan(construction: Construction, q: u32, k: usize) -> Result<PrefixPlan> {
    construction.check(q, k)?;
    let space = side_info_space(construction, q, k);
    let kind = construction.balance_kind();
    let step = kind.length_step(q);
    let mut length = 0;
    while counting::count(kind, length, q) < space {
        length += step;
    }
    Ok(PrefixPlan {
        construction,
        q,
        k,
        unbalanced_length: counting::ln_count(&space) / (q as f64).ln(),
        space,
        length,
    })
}

/// Completion-count tables for ranking words of one length.
#[derive(Debug)]
enum Completions {
    /// Level-sum distributions for each remaining length.
    Charge(Vec<Vec<BigUint>>),
    /// Polarity distributions for each remaining length, offset by it.
    Polarity(Vec<Vec<BigUint>>),
    Joint(Vec<JointCensus>),
    /// Multinomials are computed on demand.
    Symbol,
}

/// Lexicographic ranking of the balanced words of one length.
#[derive(Debug)]
pub struct Ranker {
    kind: BalanceKind,
    alphabet: Alphabet,
    n: usize,
    total: BigCount,
    tables: Completions,
}

/// Partial-word state while walking positions left to right.
#[derive(Debug, Clone)]
struct Walk {
    level_sum: i64,
    charge: i64,
    polarity: i64,
    counts: Vec<usize>,
}

impl Ranker {
    pub fn new(kind: BalanceKind, q: u32, n: usize) -> Result<Self> {
        let alphabet = Alphabet::new(q)?;
        let tables = match kind {
            BalanceKind::Cb => {
                let mut ladder = vec![vec![BigUint::from(1u32)]];
                for r in 1..n {
                    let next = convolve_uniform(&ladder[r - 1], q as usize);
                    ladder.push(next);
                }
                Completions::Charge(ladder)
            }
            BalanceKind::Pb => {
                let mut ladder = vec![vec![BigUint::from(1u32)]];
                for r in 1..n {
                    let next = extend_polarity(&ladder[r - 1], q);
                    ladder.push(next);
                }
                Completions::Polarity(ladder)
            }
            BalanceKind::Cpb => {
                if n > counting::MAX_CENSUS_LENGTH {
                    return Err(Error::CapacityExceeded {
                        n,
                        q,
                        max_n: counting::MAX_CENSUS_LENGTH,
                    });
                }
                let mut ladder = vec![JointCensus::empty(q)];
                for r in 1..n {
                    let next = ladder[r - 1].extended();
                    ladder.push(next);
                }
                Completions::Joint(ladder)
            }
            BalanceKind::Sb => Completions::Symbol,
        };
        Ok(Ranker {
            kind,
            alphabet,
            n,
            total: counting::count(kind, n, q),
            tables,
        })
    }

    pub fn kind(&self) -> BalanceKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of balanced words of this length.
    pub fn count(&self) -> &BigCount {
        &self.total
    }

    fn start(&self) -> Walk {
        Walk {
            level_sum: 0,
            charge: 0,
            polarity: 0,
            counts: vec![0; self.alphabet.q() as usize],
        }
    }

    fn step(&self, walk: &mut Walk, level: usize) {
        let s = self.alphabet.symbol(level);
        walk.level_sum += level as i64;
        walk.charge += s as i64;
        walk.polarity += s.signum() as i64;
        walk.counts[level] += 1;
    }

    fn unstep(&self, walk: &mut Walk, level: usize) {
        let s = self.alphabet.symbol(level);
        walk.level_sum -= level as i64;
        walk.charge -= s as i64;
        walk.polarity -= s.signum() as i64;
        walk.counts[level] -= 1;
    }

    /// Balanced completions of a partial word with `remaining` free positions.
    fn completions(&self, walk: &Walk, remaining: usize) -> BigUint {
        let q = self.alphabet.q() as usize;
        match &self.tables {
            Completions::Charge(ladder) => {
                let spread = (self.n * (q - 1)) as i64;
                if spread % 2 != 0 {
                    return BigUint::zero();
                }
                let need = spread / 2 - walk.level_sum;
                let dist = &ladder[remaining];
                if need < 0 || need as usize >= dist.len() {
                    return BigUint::zero();
                }
                dist[need as usize].clone()
            }
            Completions::Polarity(ladder) => {
                let idx = remaining as i64 - walk.polarity;
                let dist = &ladder[remaining];
                if idx < 0 || idx as usize >= dist.len() {
                    return BigUint::zero();
                }
                dist[idx as usize].clone()
            }
            Completions::Joint(ladder) => ladder[remaining]
                .get_ref(-walk.charge, -walk.polarity)
                .cloned()
                .unwrap_or_default(),
            Completions::Symbol => {
                if self.n % q != 0 {
                    return BigUint::zero();
                }
                let m = self.n / q;
                if walk.counts.iter().any(|&c| c > m) {
                    return BigUint::zero();
                }
                let rest: Vec<usize> = walk.counts.iter().map(|&c| m - c).collect();
                multinomial(&rest)
            }
        }
    }

    /// 0-based position of `word` among the balanced words in lexicographic
    /// order.
    pub fn rank(&self, word: &[i32]) -> Result<BigCount> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: word.len(),
            });
        }
        self.alphabet.check_word(word)?;
        if !alphabet::is_balanced(self.kind, word, self.alphabet.q()) {
            return Err(Error::NotBalanced { kind: self.kind });
        }
        let mut walk = self.start();
        let mut rank = BigUint::zero();
        for (pos, &s) in word.iter().enumerate() {
            let remaining = self.n - pos - 1;
            let chosen = self.alphabet.level(s).unwrap();
            for level in 0..chosen {
                self.step(&mut walk, level);
                rank += self.completions(&walk, remaining);
                self.unstep(&mut walk, level);
            }
            self.step(&mut walk, chosen);
        }
        Ok(rank)
    }

    /// The balanced word at position `index`.
    pub fn unrank(&self, index: &BigCount) -> Result<Vec<i32>> {
        if self.total.is_zero() {
            return Err(Error::InfeasibleLength {
                kind: self.kind,
                n: self.n,
                q: self.alphabet.q(),
            });
        }
        if *index >= self.total {
            return Err(Error::out_of_range("rank", index, &self.total));
        }
        let mut rest = index.clone();
        let mut walk = self.start();
        let mut word = Vec::with_capacity(self.n);
        for pos in 0..self.n {
            let remaining = self.n - pos - 1;
            let mut placed = false;
            for level in 0..self.alphabet.q() as usize {
                self.step(&mut walk, level);
                let c = self.completions(&walk, remaining);
                if rest < c {
                    word.push(self.alphabet.symbol(level));
                    placed = true;
                    break;
                }
                rest -= c;
                self.unstep(&mut walk, level);
            }
            debug_assert!(placed, "completion counts disagree with the total");
        }
        Ok(word)
    }
}

type RankerKey = (BalanceKind, u32, usize);

/// Shared rankers, built once per (kind, q, n).
pub fn ranker(kind: BalanceKind, q: u32, n: usize) -> Result<Arc<Ranker>> {
    static CACHE: OnceLock<Mutex<HashMap<RankerKey, Arc<Ranker>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.lock().unwrap().get(&(kind, q, n)) {
        return Ok(Arc::clone(r));
    }
    // Built outside the lock; a concurrent builder produces an identical value.
    let built = Arc::new(Ranker::new(kind, q, n)?);
    let mut guard = cache.lock().unwrap();
    Ok(Arc::clone(guard.entry((kind, q, n)).or_insert(built)))
}

pub fn rank(word: &[i32], kind: BalanceKind, q: u32) -> Result<BigCount> {
    ranker(kind, q, word.len())?.rank(word)
}

pub fn unrank(index: &BigCount, n: usize, kind: BalanceKind, q: u32) -> Result<Vec<i32>> {
    ranker(kind, q, n)?.unrank(index)
}

/// The balanced prefix word carrying `side`.
pub fn encode_prefix(side: &SideInfo, plan: &PrefixPlan) -> Result<Vec<i32>> {
    if side.construction() != plan.construction {
        return Err(Error::Parse(format!(
            "side information for {} does not fit a {} plan",
            side.construction(),
            plan.construction
        )));
    }
    let index = pack(side, plan.q, plan.k)?;
    unrank(&index, plan.length, plan.kind(), plan.q)
}

/// Side information carried by a prefix word.
pub fn decode_prefix(word: &[i32], plan: &PrefixPlan) -> Result<SideInfo> {
    if word.len() != plan.length {
        return Err(Error::LengthMismatch {
            expected: plan.length,
            actual: word.len(),
        });
    }
    let index = rank(word, plan.kind(), plan.q)?;
    unpack(&index, plan.construction, plan.q, plan.k)
}
