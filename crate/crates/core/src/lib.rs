//! Skew cyclic codes over R = F_p + uF_p (u² = 0, p odd): ring and
//! polynomial arithmetic, the three generator forms, encoding and
//! decoding, Gray images and minimum-distance search.

pub mod codes;
pub mod error;
pub mod fp_poly;
pub mod gray;
pub mod linalg;
pub mod record;
pub mod reproduce;
pub mod ring;
pub mod search;
pub mod skew_poly;
pub mod text;

pub use codes::{DecodingTrace, GeneratorForm, Message, Metric, SkewCyclicCode, Syndromes, Word};
pub use error::{Error, Result};
pub use fp_poly::{factor_xn_minus_1, monic_divisors, Factorization, FpPoly};
pub use gray::{gray_map_elem, gray_weight, BoundedWeight, GrayImageCode};
pub use record::{CodeRecord, FormKind};
pub use ring::{Automorphism, PrimeField, RingElement};
pub use search::{evaluate_candidate, search_best, SearchParams, SearchRecord};
pub use skew_poly::{lift_divisors, LiftSet, SkewPoly};
pub use text::{format_polynomial, parse_polynomial};
