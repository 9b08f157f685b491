//! Balanced block codes over the symmetric alphabet `{-q+1, -q+3, ..., q-1}`.
//!
//! Four balance properties are supported:
//!
//! * symbol balanced (SB): every symbol occurs equally often;
//! * charge balanced (CB): the symbols sum to zero;
//! * polarity balanced (PB): as many positive as negative symbols;
//! * charge and polarity balanced (CPB): both of the previous two.
//!
//! [`counting`] gives exact numbers of balanced words, [`asymptotics`] the
//! closed-form Gaussian approximations and redundancies, and [`codecs`] the
//! Knuth-like encoders whose side information is carried in a balanced
//! prefix built by [`prefix`].
//!
//! ```
//! use balanced_codes::{Codec, Construction};
//!
//! let codec = Codec::new(Construction::Cb, 5, 7).unwrap();
//! let data = [4, 4, -2, 0, 0, 0, 0];
//! let encoded = codec.encode(&data).unwrap();
//! assert_eq!(codec.decode(&encoded.codeword).unwrap(), data);
//! ```

pub mod alphabet;
pub mod asymptotics;
pub mod cli;
pub mod codecs;
pub mod counting;
pub mod error;
pub mod prefix;

pub use alphabet::{is_balanced, Alphabet, BalanceKind, Word};
pub use codecs::{Codec, Codeword, Construction, Encoded, Injection};
pub use counting::{count, exact_redundancy, BigCount};
pub use asymptotics::{anr, approx_count, approx_redundancy};
pub use error::{Error, Result};
pub use prefix::{PrefixPlan, SideInfo};

/// Serializes a big integer as a decimal string.
pub(crate) fn serialize_big<S: serde::Serializer>(v: &num_bigint::BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
