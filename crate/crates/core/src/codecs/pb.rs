//! Polarity balancing by sign inversion of a leading segment, after an
//! alphabet offset when `q` is odd.
//!
//! For odd `q` the zero symbol has no polarity, so inversion alone cannot fix
//! an odd number of nonzero symbols. Subtracting an offset symbol `a` whose
//! count has the parity of `k` sends `a` to zero and leaves an even number of
//! nonzero symbols.

use super::negate_leading;
use crate::alphabet::{polarity_sum, Alphabet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbBalanced {
    pub payload: Vec<i32>,
    pub offset: Option<i32>,
    pub flip: usize,
}

/// Whether `a` may serve as the offset for `data`.
pub fn offset_is_valid(data: &[i32], alphabet: &Alphabet, a: i32) -> bool {
    alphabet.contains(a) && data.iter().filter(|&&s| s == a).count() % 2 == data.len() % 2
}

/// Smallest offset symbol whose count has the parity of the length.
pub fn find_offset(data: &[i32], alphabet: &Alphabet) -> Result<i32> {
    alphabet
        .symbols()
        .into_iter()
        .find(|&a| offset_is_valid(data, alphabet, a))
        .ok_or(Error::BalancingIndexMissing("pb offset"))
}

/// Adds `amount` to every symbol modulo `2q`.
pub fn shift_all(data: &[i32], alphabet: &Alphabet, amount: i64) -> Vec<i32> {
    data.iter()
        .map(|&s| alphabet.reduce(s as i64 + amount))
        .collect()
}

pub fn is_valid_index(word: &[i32], flip: usize) -> bool {
    flip < word.len() && polarity_sum(&negate_leading(word, flip)) == 0
}

/// Smallest polarity balancing index.
pub fn find_index(word: &[i32]) -> Result<usize> {
    let mut sum = polarity_sum(word);
    for (z, &s) in word.iter().enumerate() {
        if sum == 0 {
            return Ok(z);
        }
        sum -= 2 * s.signum() as i64;
    }
    Err(Error::BalancingIndexMissing("pb"))
}

pub fn balance(
    data: &[i32],
    alphabet: &Alphabet,
    offset: Option<i32>,
    flip: Option<usize>,
) -> Result<PbBalanced> {
    let offset = match (alphabet.is_odd(), offset) {
        (false, None) => None,
        (false, Some(_)) => return Err(Error::Parse("offset is only used for odd q".into())),
        (true, Some(a)) if offset_is_valid(data, alphabet, a) => Some(a),
        (true, Some(_)) => return Err(Error::InvalidInjection { what: "a" }),
        (true, None) => Some(find_offset(data, alphabet)?),
    };
    let shifted = match offset {
        Some(a) => shift_all(data, alphabet, -(a as i64)),
        None => data.to_vec(),
    };
    let flip = match flip {
        Some(z) if is_valid_index(&shifted, z) => z,
        Some(_) => return Err(Error::InvalidInjection { what: "z" }),
        None => find_index(&shifted)?,
    };
    Ok(PbBalanced {
        payload: negate_leading(&shifted, flip),
        offset,
        flip,
    })
}

pub fn restore(payload: &[i32], alphabet: &Alphabet, offset: Option<i32>, flip: usize) -> Result<Vec<i32>> {
    if flip >= payload.len() {
        return Err(Error::out_of_range("flip index", flip, payload.len()));
    }
    let unflipped = negate_leading(payload, flip);
    match (alphabet.is_odd(), offset) {
        (true, Some(a)) => {
            alphabet.check_symbol(a)?;
            Ok(shift_all(&unflipped, alphabet, a as i64))
        }
        (false, None) => Ok(unflipped),
        _ => Err(Error::Parse("offset must be present exactly when q is odd".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::is_pb;

    #[test]
    fn known_vector() {
        let a5 = Alphabet::new(5).unwrap();
        let u = [4, 4, -2, 0, 0, 0, 0];
        assert_eq!(find_offset(&u, &a5).unwrap(), -2);
        let shifted = shift_all(&u, &a5, 2);
        assert_eq!(shifted, vec![-4, -4, 0, 2, 2, 2, 2]);
        assert_eq!(find_index(&shifted).unwrap(), 6);
        let b = balance(&u, &a5, Some(-2), Some(6)).unwrap();
        assert_eq!(b.payload, vec![4, 4, 0, -2, -2, -2, 2]);
        assert_eq!(restore(&b.payload, &a5, Some(-2), 6).unwrap(), u);
    }

    #[test]
    fn even_q_all_positive() {
        let a4 = Alphabet::new(4).unwrap();
        let u = [3, 1, 1, 3, 3, 1];
        let b = balance(&u, &a4, None, None).unwrap();
        assert!(is_pb(&b.payload));
        assert_eq!(b.flip, 3);
    }

    #[test]
    fn offset_parity_invariant() {
        let a7 = Alphabet::new(7).unwrap();
        let u = [6, 6, 0, -2, 4, 4, 4, 2];
        let a = find_offset(&u, &a7).unwrap();
        assert_eq!(u.iter().filter(|&&s| s == a).count() % 2, u.len() % 2);
    }

    #[test]
    fn injected_offset_must_have_right_parity() {
        let a5 = Alphabet::new(5).unwrap();
        assert_eq!(
            balance(&[4, 4, -2, 0, 0, 0, 0], &a5, Some(4), None),
            Err(Error::InvalidInjection { what: "a" })
        );
    }
}
