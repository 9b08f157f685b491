//! Knuth-like encoders and decoders.
//!
//! Every construction makes a reversible, cheap modification to a data word
//! `u` of length `k` so that the result `x` is balanced, then stores the
//! modification parameters in a balanced prefix `p`. The codeword is
//! `(p, x)`; both parts are balanced on their own.
//!
//! Where several balancing indices work, encoders take the smallest. An
//! [`Injection`] overrides that choice with any other valid index. Injected
//! values are checked before use.

pub mod cb;
pub mod cpb;
pub mod knuth;
pub mod pb;
pub mod sb;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alphabet::{self, Alphabet, BalanceKind, Word};
use crate::error::{Error, Result};
use crate::prefix::{self, PrefixPlan, Ranker, SideInfo};

pub use cb::balancing_sequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    /// Binary sign inversion of a leading segment.
    Knuth,
    Pb,
    Cb,
    Cpb,
    Sb,
}

impl Construction {
    pub const ALL: [Construction; 5] = [
        Construction::Knuth,
        Construction::Pb,
        Construction::Cb,
        Construction::Cpb,
        Construction::Sb,
    ];

    /// The balance property of both the payload and the prefix.
    pub fn balance_kind(self) -> BalanceKind {
        match self {
            Construction::Knuth | Construction::Cb => BalanceKind::Cb,
            Construction::Pb => BalanceKind::Pb,
            Construction::Cpb => BalanceKind::Cpb,
            Construction::Sb => BalanceKind::Sb,
        }
    }

    /// Validates `(q, k)` for this construction.
    pub fn check(self, q: u32, k: usize) -> Result<()> {
        Alphabet::new(q)?;
        let fail = |reason| {
            Err(Error::InfeasibleParams {
                construction: self,
                q,
                k,
                reason,
            })
        };
        match self {
            Construction::Knuth if q != 2 => fail("needs q = 2"),
            Construction::Knuth if k < 2 || k % 2 != 0 => fail("needs even k >= 2"),
            Construction::Cpb if q <= 3 => Err(Error::UsePbCodec { q }),
            Construction::Cpb if k < 2 => fail("needs k >= 2"),
            Construction::Pb | Construction::Cb if k == 0 => fail("needs k >= 1"),
            Construction::Pb | Construction::Cb | Construction::Cpb
                if q % 2 == 0 && k % 2 != 0 =>
            {
                fail("needs even k for even q")
            }
            Construction::Sb if k == 0 || k % q as usize != 0 => fail("needs k to be a positive multiple of q"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Construction::Knuth => "Knuth",
            Construction::Pb => "PB",
            Construction::Cb => "CB",
            Construction::Cpb => "CPB",
            Construction::Sb => "SB",
        })
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "knuth" => Ok(Construction::Knuth),
            "pb" => Ok(Construction::Pb),
            "cb" => Ok(Construction::Cb),
            "cpb" => Ok(Construction::Cpb),
            "sb" => Ok(Construction::Sb),
            other => Err(Error::Parse(format!("unknown construction '{other}'"))),
        }
    }
}

/// A prefix followed by a payload. Text form is `prefix|payload`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Codeword {
    pub prefix: Vec<i32>,
    pub payload: Vec<i32>,
}

impl Codeword {
    pub fn concatenated(&self) -> Vec<i32> {
        [self.prefix.as_slice(), self.payload.as_slice()].concat()
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}|{}",
            Word::from(self.prefix.as_slice()),
            Word::from(self.payload.as_slice())
        )
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, x) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse("codeword must look like 'prefix|payload'".into()))?;
        Ok(Codeword {
            prefix: p.parse::<Word>()?.into_inner(),
            payload: x.parse::<Word>()?.into_inner(),
        })
    }
}

/// Caller-chosen balancing parameters that replace the canonical ones.
///
/// Text form: `key=value` pairs separated by commas. Keys are `a` (offset
/// symbol), `z` (the construction's main balancing index: the flip length for
/// Knuth/PB/CPB, the balancing-sequence index for CB), `w` (the CPB
/// balancing-sequence index) and `i1`, `i2`, ... (SB round splits).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Injection {
    pub offset: Option<i32>,
    pub index: Option<usize>,
    pub shift: Option<usize>,
    /// Round number (from 1) to split position.
    pub splits: BTreeMap<usize, usize>,
}

impl Injection {
    pub fn is_empty(&self) -> bool {
        *self == Injection::default()
    }

    fn reject_unused(&self, construction: Construction) -> Result<()> {
        let unused = |what| Err(Error::Parse(format!("'{what}' cannot be injected into the {construction} construction")));
        let uses_offset = matches!(construction, Construction::Pb | Construction::Cpb);
        if self.offset.is_some() && !uses_offset {
            return unused("a");
        }
        if self.index.is_some() && construction == Construction::Sb {
            return unused("z");
        }
        if self.shift.is_some() && construction != Construction::Cpb {
            return unused("w");
        }
        if !self.splits.is_empty() && construction != Construction::Sb {
            return unused("i<round>");
        }
        Ok(())
    }
}

impl FromStr for Injection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut inj = Injection::default();
        for pair in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got '{pair}'")))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = || Error::Parse(format!("bad value '{value}' for '{key}'"));
            let digits = value.strip_prefix('+').unwrap_or(value);
            match key {
                "a" => inj.offset = Some(digits.parse().map_err(|_| bad())?),
                "z" => inj.index = Some(value.parse().map_err(|_| bad())?),
                "w" => inj.shift = Some(value.parse().map_err(|_| bad())?),
                _ => {
                    let round: usize = key
                        .strip_prefix('i')
                        .and_then(|r| r.parse().ok())
                        .filter(|&r| r >= 1)
                        .ok_or_else(|| Error::Parse(format!("unknown injection key '{key}'")))?;
                    inj.splits.insert(round, value.parse().map_err(|_| bad())?);
                }
            }
        }
        Ok(inj)
    }
}

/// Result of encoding one data word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Encoded {
    pub codeword: Codeword,
    pub side_info: SideInfo,
}

/// An encoder/decoder for one construction and data length.
#[derive(Debug, Clone)]
pub struct Codec {
    construction: Construction,
    alphabet: Alphabet,
    k: usize,
    plan: PrefixPlan,
    ranker: Arc<Ranker>,
}

impl Codec {
    pub fn new(construction: Construction, q: u32, k: usize) -> Result<Self> {
        let plan = prefix::plan(construction, q, k)?;
        let ranker = prefix::ranker(plan.kind(), q, plan.length)?;
        Ok(Codec {
            construction,
            alphabet: Alphabet::new(q)?,
            k,
            plan,
            ranker,
        })
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn q(&self) -> u32 {
        self.alphabet.q()
    }

    /// Data length.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn plan(&self) -> &PrefixPlan {
        &self.plan
    }

    /// Codeword length `p + k`.
    pub fn n(&self) -> usize {
        self.plan.length + self.k
    }

    pub fn encode(&self, data: &[i32]) -> Result<Encoded> {
        self.encode_with(data, &Injection::default())
    }

    pub fn encode_with(&self, data: &[i32], injection: &Injection) -> Result<Encoded> {
        let (payload, side_info) = self.balance_payload(data, injection)?;
        let prefix = self.encode_prefix(&side_info)?;
        Ok(Encoded {
            codeword: Codeword { prefix, payload },
            side_info,
        })
    }

    /// The balanced payload and the side information that undoes it.
    pub fn balance_payload(&self, data: &[i32], injection: &Injection) -> Result<(Vec<i32>, SideInfo)> {
        if data.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                actual: data.len(),
            });
        }
        self.alphabet.check_word(data)?;
        injection.reject_unused(self.construction)?;
        let a = &self.alphabet;
        Ok(match self.construction {
            Construction::Knuth => {
                let (x, flip) = knuth::balance(data, injection.index)?;
                (x, SideInfo::Knuth { flip })
            }
            Construction::Pb => {
                let b = pb::balance(data, a, injection.offset, injection.index)?;
                (
                    b.payload,
                    SideInfo::Pb {
                        offset: b.offset,
                        flip: b.flip,
                    },
                )
            }
            Construction::Cb => {
                let (x, shift) = cb::balance(data, a, injection.index)?;
                (x, SideInfo::Cb { shift })
            }
            Construction::Cpb => cpb::balance(data, a, injection)?,
            Construction::Sb => sb::balance(data, a, &injection.splits)?,
        })
    }

    /// Inverts [`Codec::balance_payload`].
    pub fn restore_payload(&self, payload: &[i32], side: &SideInfo) -> Result<Vec<i32>> {
        if payload.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                actual: payload.len(),
            });
        }
        self.alphabet.check_word(payload)?;
        let kind = self.plan.kind();
        if !alphabet::is_balanced(kind, payload, self.q()) {
            return Err(Error::NotBalanced { kind });
        }
        let a = &self.alphabet;
        match (self.construction, side) {
            (Construction::Knuth, SideInfo::Knuth { flip }) => knuth::restore(payload, *flip),
            (Construction::Pb, SideInfo::Pb { offset, flip }) => pb::restore(payload, a, *offset, *flip),
            (Construction::Cb, SideInfo::Cb { shift }) => cb::restore(payload, a, *shift),
            (Construction::Cpb, side @ SideInfo::Cpb { .. }) => cpb::restore(payload, a, side),
            (Construction::Sb, SideInfo::Sb { rounds }) => sb::restore(payload, a, rounds),
            _ => Err(Error::Parse(format!(
                "side information for {} given to a {} codec",
                side.construction(),
                self.construction
            ))),
        }
    }

    pub fn encode_prefix(&self, side: &SideInfo) -> Result<Vec<i32>> {
        let index = prefix::pack(side, self.q(), self.k)?;
        self.ranker.unrank(&index)
    }

    pub fn decode_prefix(&self, prefix_word: &[i32]) -> Result<SideInfo> {
        let index = self.ranker.rank(prefix_word)?;
        prefix::unpack(&index, self.construction, self.q(), self.k)
    }

    pub fn decode(&self, codeword: &Codeword) -> Result<Vec<i32>> {
        if codeword.prefix.len() != self.plan.length {
            return Err(Error::LengthMismatch {
                expected: self.plan.length,
                actual: codeword.prefix.len(),
            });
        }
        let side = self.decode_prefix(&codeword.prefix)?;
        self.restore_payload(&codeword.payload, &side)
    }
}

/// Negates the first `count` symbols.
pub(crate) fn negate_leading(word: &[i32], count: usize) -> Vec<i32> {
    word.iter()
        .enumerate()
        .map(|(i, &s)| if i < count { -s } else { s })
        .collect()
}
