//! The hyperoctahedral-group quantities needed for the square-matrix results.
//!
//! `B_n` sits inside `S_{2n}` as the signed permutations and contains `S_n`.
//! Only a handful of its characters are ever needed: their degrees, their
//! value on the class of a single sign change `σ_1 = (1, −1)`, the scalar by
//! which the central element `η = Σ σ_i` acts, and their restriction to
//! `S_n`. The restriction is taken to be the skew character of `λ ⊕ μ`;
//! no general `B_n` character table is built.

use crate::arith;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::lr::{lr_coefficient, skew_schur_expansion, SchurExpansion};
use crate::partition::{enumerate_bipartitions, enumerate_partitions, oplus, Bipartition, Partition};

/// `f^{μ,ν} = C(n, |ν|) f^μ f^ν`, the degree of `χ^{μ,ν}`.
pub fn bipartition_dimension(b: &Bipartition) -> Result<u64> {
    let n = b.size();
    let product = arith::binomial(n, b.second().size())?
        .checked_mul(b.first().num_standard_tableaux()?)
        .and_then(|x| x.checked_mul(b.second().num_standard_tableaux().ok()?))
        .ok_or(Error::Overflow("bipartition dimension"))?;
    Ok(product)
}

/// `χ^{μ,ν}(σ_1)`: standard bitableaux with the entry 1 in `μ` minus those
/// with 1 in `ν`, i.e. `(C(n−1,|ν|) − C(n−1,|ν|−1)) f^μ f^ν`.
pub fn sigma1_value(b: &Bipartition) -> Result<i64> {
    let n = b.size();
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            name: "n",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let k = b.second().size() as i64;
    let f = b
        .first()
        .num_standard_tableaux()?
        .checked_mul(b.second().num_standard_tableaux()?)
        .ok_or(Error::Overflow("sigma1 value"))?;
    let with_one_first = arith::binomial_signed(n - 1, k)? as i128 * f as i128;
    let with_one_second = arith::binomial_signed(n - 1, k - 1)? as i128 * f as i128;
    i64::try_from(with_one_first - with_one_second).map_err(|_| Error::Overflow("sigma1 value"))
}

/// `n − 2|ν|`, the scalar by which `η` acts on the irreducible `(μ, ν)`.
pub fn central_eigenvalue(b: &Bipartition) -> i64 {
    b.size() as i64 - 2 * b.second().size() as i64
}

/// `χ^{λ,μ}` restricted to `S_n`, expanded as the skew character of `λ ⊕ μ`.
pub fn restrict_to_sn(b: &Bipartition) -> SchurExpansion {
    skew_schur_expansion(&oplus(b.first(), b.second()))
}

/// Which one-dimensional `S_n` character [`check_d2`] induces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InducedFrom {
    Trivial,
    Sign,
}

/// Checks, for every bipartition `(μ, ν)` of `n`, that the restriction of
/// `χ^{μ,ν}` contains the trivial character exactly when `μ` and `ν` are
/// single rows (or the sign character exactly when both are single columns),
/// with multiplicity one. By Frobenius reciprocity this is the statement that
/// inducing the trivial (sign) character from `S_n` to `B_n` gives
/// `Σ_i χ^{(i),(n−i)}` (resp. `Σ_i χ^{(1^i),(1^{n−i})}`).
///
/// The restriction is evaluated twice: from the skew expansion of `λ ⊕ μ`
/// and from the coefficient `c^{(n)}_{μν}` (resp. `c^{(1^n)}_{μν}`).
pub fn check_d2(n: usize, variant: InducedFrom, limits: &Limits) -> Result<bool> {
    limits.check("hyperoctahedral induction check", n, limits.bn_n)?;
    let target = match variant {
        InducedFrom::Trivial => Partition::row(n),
        InducedFrom::Sign => Partition::column(n),
    };
    for b in enumerate_bipartitions(n) {
        let expected = match variant {
            InducedFrom::Trivial => b.first().len() <= 1 && b.second().len() <= 1,
            InducedFrom::Sign => b.first().width() <= 1 && b.second().width() <= 1,
        };
        let from_skew = restrict_to_sn(&b).coefficient(&target);
        let from_lr = lr_coefficient(&target, b.first(), b.second());
        if from_skew != u64::from(expected) || from_lr != from_skew {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The four degree sums
/// `Σ_{λ⊢n} f^{2·λ}`, `Σ_{λ⊢n} f^{(2·λ)'}`, `Σ f^{2*λ}`, `Σ f^{(2*λ)'}`
/// (the last two over distinct-part `λ`).
pub fn d0_dimension_sums(n: usize) -> Result<[u64; 4]> {
    let mut sums = [0u64; 4];
    for lambda in enumerate_partitions(n, None) {
        let doubled = lambda.double_rows();
        sums[0] += doubled.num_standard_tableaux()?;
        sums[1] += doubled.conjugate().num_standard_tableaux()?;
        if lambda.has_distinct_parts() {
            let diag = lambda.double_diagonal()?;
            sums[2] += diag.num_standard_tableaux()?;
            sums[3] += diag.conjugate().num_standard_tableaux()?;
        }
    }
    Ok(sums)
}

/// `[S_{2n} : B_n] = (2n)! / (2^n n!)`, the number of perfect matchings of
/// `2n` points.
pub fn matching_count(n: usize) -> Result<u64> {
    // (2n−1)!! as a running product.
    (1..=n).try_fold(1u64, |acc, i| {
        acc.checked_mul(2 * i as u64 - 1)
            .ok_or(Error::Overflow("matching count"))
    })
}

/// True iff all four degree sums equal `(2n)!/(2^n n!)`, the degree of each
/// character induced from a linear character of `B_n` to `S_{2n}`.
pub fn check_d0_dimensions(n: usize, limits: &Limits) -> Result<bool> {
    limits.check("induced degree check", n, limits.bn_n)?;
    let expected = matching_count(n)?;
    Ok(d0_dimension_sums(n)?.iter().all(|&s| s == expected))
}

/// True iff `n · χ^{μ,ν}(σ_1) = (n − 2|ν|) · f^{μ,ν}` for every bipartition
/// of `n`.
pub fn check_eigenvalue_identity(n: usize, limits: &Limits) -> Result<bool> {
    limits.check("central eigenvalue check", n, limits.bn_n)?;
    for b in enumerate_bipartitions(n) {
        let lhs = n as i128 * sigma1_value(&b)? as i128;
        let rhs = central_eigenvalue(&b) as i128 * bipartition_dimension(&b)? as i128;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
