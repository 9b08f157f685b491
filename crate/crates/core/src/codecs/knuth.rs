//! Knuth's bipolar construction: negate the first `z` symbols.

use super::negate_leading;
use crate::alphabet::charge_sum;
use crate::error::{Error, Result};

/// Whether negating the first `flip` symbols balances `data`.
pub fn is_valid_index(data: &[i32], flip: usize) -> bool {
    flip < data.len() && charge_sum(&negate_leading(data, flip)) == 0
}

/// Smallest balancing index.
pub fn find_index(data: &[i32]) -> Result<usize> {
    let mut sum = charge_sum(data);
    for (z, &s) in data.iter().enumerate() {
        if sum == 0 {
            return Ok(z);
        }
        sum -= 2 * s as i64;
    }
    Err(Error::BalancingIndexMissing("knuth"))
}

pub fn balance(data: &[i32], injected: Option<usize>) -> Result<(Vec<i32>, usize)> {
    let flip = match injected {
        Some(z) if is_valid_index(data, z) => z,
        Some(_) => return Err(Error::InvalidInjection { what: "z" }),
        None => find_index(data)?,
    };
    Ok((negate_leading(data, flip), flip))
}

pub fn restore(payload: &[i32], flip: usize) -> Result<Vec<i32>> {
    if flip >= payload.len() {
        return Err(Error::out_of_range("flip index", flip, payload.len()));
    }
    Ok(negate_leading(payload, flip))
}
