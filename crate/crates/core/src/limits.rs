use crate::characters::DEFAULT_TABLE_CAP;
use crate::error::{Error, Result};

/// Size caps for the exhaustive checks and oracles.
///
/// Every acceptance-level computation fits under the defaults; raise them
/// explicitly to go further.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for exhaustive checks over pairs `λ, μ ⊢ n`.
    pub rect_n: usize,
    /// Largest `n` for square-matrix checks over `λ ⊢ 2n`.
    pub square_n: usize,
    /// Largest degree of a character table.
    pub table_n: usize,
    /// Largest `n` for the bipartition checks.
    pub bn_n: usize,
    /// Largest `n` for the perfect-matching character.
    pub matching_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            rect_n: 7,
            square_n: 4,
            table_n: DEFAULT_TABLE_CAP,
            bn_n: 6,
            matching_n: 4,
        }
    }
}

impl Limits {
    /// Limits large enough for checks up to `n` everywhere.
    pub fn raised_to(self, n: usize) -> Self {
        Limits {
            rect_n: self.rect_n.max(n),
            square_n: self.square_n.max(n),
            table_n: self.table_n.max(2 * n),
            bn_n: self.bn_n.max(n),
            matching_n: self.matching_n.max(n),
        }
    }

    pub(crate) fn check(&self, what: &'static str, requested: usize, cap: usize) -> Result<()> {
        if requested > cap {
            return Err(Error::ResourceLimit { what, requested, cap });
        }
        Ok(())
    }
}
