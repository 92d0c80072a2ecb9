//! Exact symbolic algebra over `F_2` for truncated flow categories and the
//! Oh-Pozniak spectral sequence of `RP^n ⊂ CP^n`.
//!
//! The crate is `no_std` (it only needs `alloc`). File formats, JSON and the
//! command-line frontend live in the companion `floerq` crate.
//!
//! Layout:
//!
//! * [`ring`]: truncated graded-commutative rings over `F_2`.
//! * [`linalg`]: `F_p` ranks and integer Smith normal form.
//! * [`steenrod`]: admissible basis, Adem relations, Milnor primitives and
//!   their action on rings.
//! * [`charclass`]: the `q_i` characteristic classes and the Thom-twisted
//!   action.
//! * [`flow`]: truncated flow categories, Floer complexes and obstruction
//!   groups.
//! * [`ohpoz`]: dimension bookkeeping for the Oh-Pozniak spectral sequence.
//! * [`projective`]: the `RP^n ⊂ CP^n` computations.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod charclass;
pub mod flow;
pub mod linalg;
pub mod ohpoz;
pub mod projective;
pub mod ring;
pub mod steenrod;

pub use error::{Error, Result};
