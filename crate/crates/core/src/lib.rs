//! Multiplicities of irreducible modules in hook components of tensor powers
//! of matrix spaces.
//!
//! `M_{k,m}^{⊗n}` carries commuting actions of `GL_k × GL_m` and `S_n`; its
//! isotypic component for the hook `(n−t, 1^t)` is the hook component
//! `M_{k,m}^{⊗n}(t)`. This crate computes the multiplicity of each
//! `V^λ_k ⊗ V^μ_m` in it, and the analogous multiplicities of `V^λ_k` for
//! square matrices under the two-sided diagonal action, as alternating sums
//! of Littlewood–Richardson coefficients. Every formula is checked against an
//! independent character-theoretic recomputation in [`oracle`].
//!
//! ```
//! use hookdec::{hook, Partition};
//!
//! let lambda: Partition = "2,1".parse()?;
//! assert_eq!(hook::mult_rect(&lambda, &lambda, 1)?, 2);
//! assert_eq!(hook::mult_sym_square(&"2,2".parse()?)?, 2);
//! # Ok::<(), hookdec::Error>(())
//! ```

pub mod arith;
pub mod bn;
pub mod characters;
pub mod error;
pub mod hook;
pub mod limits;
pub mod lr;
pub mod oracle;
pub mod partition;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
pub use partition::{Bipartition, FrobeniusCoordinates, Partition, SkewShape};
pub use table::{MultiplicityTable, TableContext, TableEntry};

// The README and the guide's chapters double as doctests, so its snippets cannot drift from
// the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/littlewood-richardson.md")]
    mod littlewood_richardson {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/rectangular.md")]
    mod rectangular {}
    #[doc = include_str!("../../../book/src/square.md")]
    mod square {}
    #[doc = include_str!("../../../book/src/hyperoctahedral.md")]
    mod hyperoctahedral {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
