//! Charge balancing by modular addition of a step-shaped balancing sequence.

use crate::alphabet::{charge_sum, Alphabet};
use crate::error::{Error, Result};

/// Balancing sequence `i` of length `len`: `g` copies of `j + 2` followed by
/// `len - g` copies of `j`, where `j = 2 floor(i / len)` and
/// `g = i mod len`. Valid indices are `0..range * len`.
pub fn balancing_sequence(i: usize, len: usize, range: usize) -> Result<Vec<i64>> {
    if i >= range * len {
        return Err(Error::out_of_range("balancing sequence index", i, range * len));
    }
    let j = 2 * (i / len) as i64;
    let g = i % len;
    Ok((0..len).map(|pos| if pos < g { j + 2 } else { j }).collect())
}

/// `data (+)_{2q} b_index`, or its inverse when `sign` is `-1`.
fn add_sequence(data: &[i32], alphabet: &Alphabet, index: usize, sign: i64) -> Result<Vec<i32>> {
    let b = balancing_sequence(index, data.len(), alphabet.q() as usize)?;
    Ok(data
        .iter()
        .zip(b)
        .map(|(&s, add)| alphabet.reduce(s as i64 + sign * add))
        .collect())
}

pub fn is_valid_index(data: &[i32], alphabet: &Alphabet, index: usize) -> bool {
    add_sequence(data, alphabet, index, 1).is_ok_and(|x| charge_sum(&x) == 0)
}

/// Smallest charge balancing index.
pub fn find_index(data: &[i32], alphabet: &Alphabet) -> Result<usize> {
    smallest_shift(data, alphabet.q() as usize, |v| alphabet.reduce(v), 0)
        .ok_or(Error::BalancingIndexMissing("cb"))
}

/// Smallest `i < range * len` for which `Sum(values (+) b_i) == target`, where
/// `reduce` performs the modular reduction. Moving from `b_i` to `b_{i+1}`
/// raises a single position by 2, so the sum is updated in place.
pub(crate) fn smallest_shift(
    values: &[i32],
    range: usize,
    reduce: impl Fn(i64) -> i32,
    target: i64,
) -> Option<usize> {
    let mut current = values.to_vec();
    let mut sum = charge_sum(&current);
    for i in 0..range * values.len() {
        if sum == target {
            return Some(i);
        }
        let g = i % values.len();
        let next = reduce(current[g] as i64 + 2);
        sum += (next - current[g]) as i64;
        current[g] = next;
    }
    None
}

pub fn balance(data: &[i32], alphabet: &Alphabet, injected: Option<usize>) -> Result<(Vec<i32>, usize)> {
    let index = match injected {
        Some(z) if is_valid_index(data, alphabet, z) => z,
        Some(_) => return Err(Error::InvalidInjection { what: "z" }),
        None => find_index(data, alphabet)?,
    };
    Ok((add_sequence(data, alphabet, index, 1)?, index))
}

pub fn restore(payload: &[i32], alphabet: &Alphabet, index: usize) -> Result<Vec<i32>> {
    add_sequence(payload, alphabet, index, -1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences() {
        assert_eq!(balancing_sequence(32, 7, 5).unwrap(), vec![10, 10, 10, 10, 8, 8, 8]);
        assert_eq!(balancing_sequence(0, 4, 3).unwrap(), vec![0; 4]);
        assert_eq!(balancing_sequence(1, 3, 2).unwrap(), vec![2, 0, 0]);
        assert!(balancing_sequence(35, 7, 5).is_err());
    }

    #[test]
    fn known_vector() {
        let a5 = Alphabet::new(5).unwrap();
        let u = [4, 4, -2, 0, 0, 0, 0];
        let (x, _) = balance(&u, &a5, Some(32)).unwrap();
        assert_eq!(x, vec![4, 4, -2, 0, -2, -2, -2]);
        let (x7, _) = balance(&u, &a5, Some(7)).unwrap();
        assert_eq!(x7, vec![-4, -4, 0, 2, 2, 2, 2]);
        assert_eq!(find_index(&u, &a5).unwrap(), 7);
        assert_eq!(restore(&x, &a5, 32).unwrap(), u);
    }

    #[test]
    fn incremental_search_matches_direct_check() {
        let a4 = Alphabet::new(4).unwrap();
        let u = [3, 3, 1, -1, 3, 3];
        let z = find_index(&u, &a4).unwrap();
        assert!(is_valid_index(&u, &a4, z));
        assert!((0..z).all(|i| !is_valid_index(&u, &a4, i)));
    }
}
