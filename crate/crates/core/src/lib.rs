//! Cyclic codes over the eight-element ring R = F2 + vF2 + v^2F2 (v^3 = v),
//! their Gray images over F2, and the CSS quantum codes they give rise to.
//!
//! The crate is `no_std` and needs only `alloc`. IO, the command line and
//! report formats live in the `ringq` crate.
#![no_std]

extern crate alloc;

pub mod bits;
pub mod codes;
pub mod error;
pub mod factor;
pub mod gf2poly;
pub mod limits;
pub mod quantum;
pub mod ring;

pub use bits::{BitVec, Echelon};
pub use codes::{BinaryCode, CodewordSet, RingCode};
pub use error::{Error, ErrorCategory, Result};
pub use factor::{enumerate_divisors, factor_xn1, Factorization};
pub use gf2poly::{parse_poly, BinPoly};
pub use limits::Limits;
pub use quantum::{css_from_triple, search_triples, QuantumCodeRecord};
pub use ring::{Class, RingElem, RingVector};
