//! Charge and polarity balancing for `q >= 4`.
//!
//! The data word is first made polarity balanced. Its positive symbols may
//! then be mirrored about `ceil(q/2)`, after which one polarity class gets a
//! balancing sequence added so that the positive and negative sums cancel.
//! No symbol changes polarity along the way.

use super::cb::{balancing_sequence, smallest_shift};
use super::{pb, Injection};
use crate::alphabet::{charge_sum, Alphabet};
use crate::error::{Error, Result};
use crate::prefix::{Side, SideInfo};

fn half_up(q: u32) -> i64 {
    q.div_ceil(2) as i64
}

fn half_down(q: u32) -> usize {
    (q / 2) as usize
}

fn members(word: &[i32], side: Side) -> Vec<usize> {
    (0..word.len())
        .filter(|&i| match side {
            Side::Plus => word[i] > 0,
            Side::Minus => word[i] < 0,
        })
        .collect()
}

fn side_sum(word: &[i32], side: Side) -> i64 {
    charge_sum(&members(word, side).iter().map(|&i| word[i]).collect::<Vec<_>>())
}

/// Reduction modulo `2 floor(q/2)` into the positive or negative symbols.
fn reducer(q: u32, side: Side) -> impl Fn(i64) -> i32 {
    let modulus = 2 * half_down(q) as i64;
    let base = match side {
        Side::Plus if q % 2 == 1 => 2,
        Side::Plus => 1,
        Side::Minus => -(q as i64 - 1),
    };
    move |v| ((v - base).rem_euclid(modulus) + base) as i32
}

/// Reflects every positive symbol `y` to `2 ceil(q/2) - y`.
fn mirror_positive(word: &[i32], q: u32) -> Vec<i32> {
    let c = 2 * half_up(q) as i32;
    word.iter().map(|&y| if y > 0 { c - y } else { y }).collect()
}

/// Whether the positive symbols need mirroring.
pub fn needs_mirror(y: &[i32], q: u32) -> bool {
    let c = members(y, Side::Plus).len() as i64 * half_up(q);
    let (sp, sn) = (side_sum(y, Side::Plus), -side_sum(y, Side::Minus));
    (sp < c && c < sn) || (sn < c && c < sp)
}

/// The polarity class that receives the balancing sequence.
pub fn choose_side(z: &[i32], q: u32) -> Side {
    let c = members(z, Side::Plus).len() as i64 * half_up(q);
    let (sp, sn) = (side_sum(z, Side::Plus), -side_sum(z, Side::Minus));
    if (sp >= sn && sn >= c) || (sp <= sn && sn <= c) {
        Side::Plus
    } else {
        Side::Minus
    }
}

/// Adds (or with `sign = -1` subtracts) `b_shift` to the `side` symbols.
fn apply_shift(word: &[i32], q: u32, side: Side, shift: usize, sign: i64) -> Result<Vec<i32>> {
    let idx = members(word, side);
    let mut out = word.to_vec();
    if idx.is_empty() {
        return if shift == 0 {
            Ok(out)
        } else {
            Err(Error::out_of_range("balancing sequence index", shift, 1))
        };
    }
    let b = balancing_sequence(shift, idx.len(), half_down(q))?;
    let reduce = reducer(q, side);
    for (&i, add) in idx.iter().zip(b) {
        out[i] = reduce(word[i] as i64 + sign * add);
    }
    Ok(out)
}

/// Whether adding `b_shift` to the `side` symbols of `z` yields a CPB word.
pub fn is_valid_shift(z: &[i32], q: u32, side: Side, shift: usize) -> bool {
    apply_shift(z, q, side, shift, 1).is_ok_and(|x| charge_sum(&x) == 0)
}

/// Smallest shift that cancels the two polarity sums.
pub fn find_shift(z: &[i32], q: u32, side: Side) -> Result<usize> {
    let idx = members(z, side);
    if idx.is_empty() {
        return Ok(0);
    }
    let values: Vec<i32> = idx.iter().map(|&i| z[i]).collect();
    let target = -side_sum(z, side.opposite());
    smallest_shift(&values, half_down(q), reducer(q, side), target)
        .ok_or(Error::BalancingIndexMissing("cpb"))
}

pub fn balance(data: &[i32], alphabet: &Alphabet, injection: &Injection) -> Result<(Vec<i32>, SideInfo)> {
    let q = alphabet.q();
    let pb = pb::balance(data, alphabet, injection.offset, injection.index)?;
    let y = pb.payload;
    let mirrored = needs_mirror(&y, q);
    let z = if mirrored { mirror_positive(&y, q) } else { y };
    let side = if members(&z, Side::Plus).is_empty() {
        Side::Plus
    } else {
        choose_side(&z, q)
    };
    let shift = match injection.shift {
        Some(w) if is_valid_shift(&z, q, side, w) => w,
        Some(_) => return Err(Error::InvalidInjection { what: "w" }),
        None => find_shift(&z, q, side)?,
    };
    let x = apply_shift(&z, q, side, shift, 1)?;
    let side_info = SideInfo::Cpb {
        offset: pb.offset,
        flip: pb.flip,
        mirrored,
        side,
        shift,
    };
    Ok((x, side_info))
}

pub fn restore(payload: &[i32], alphabet: &Alphabet, side_info: &SideInfo) -> Result<Vec<i32>> {
    let SideInfo::Cpb {
        offset,
        flip,
        mirrored,
        side,
        shift,
    } = side_info
    else {
        return Err(Error::Parse("expected CPB side information".into()));
    };
    let q = alphabet.q();
    let k_prime = members(payload, Side::Plus).len();
    let bound = (half_down(q) * k_prime).max(1);
    if *shift >= bound {
        return Err(Error::out_of_range("balancing sequence index", shift, bound));
    }
    let z = apply_shift(payload, q, *side, *shift, -1)?;
    let y = if *mirrored { mirror_positive(&z, q) } else { z };
    pb::restore(&y, alphabet, *offset, *flip)
}
