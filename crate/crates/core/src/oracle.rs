//! Brute-force recomputations from symmetric-group characters alone.
//!
//! Nothing here touches the Littlewood–Richardson engine: every value is an
//! average of character values over conjugacy classes, or (for the matching
//! character) a direct count. The formula modules are tested against these.

use num_rational::Ratio;

use crate::arith;
use crate::characters::{
    character_table_capped, character_value, diagonal_restriction_value, inner_product, integral_multiplicity,
    kronecker_capped, ClassFunction, CycleType,
};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{check_same_size, enumerate_partitions, Partition};

/// `C(n−1,t) · ⟨χ^λ χ^μ χ^{(n−t,1^t)}, 1⟩`, from the character table.
pub fn oracle_rect_multiplicity(lambda: &Partition, mu: &Partition, t: usize, limits: &Limits) -> Result<u64> {
    let n = check_same_size(lambda, mu)?;
    limits.check("rectangular oracle", n, limits.rect_n)?;
    let hook = Partition::hook(n, t)?;
    let alpha = kronecker_capped(lambda, mu, &hook, limits.table_n)?;
    arith::binomial(n - 1, t)?
        .checked_mul(alpha)
        .ok_or(Error::Overflow("rectangular oracle"))
}

/// `⟨χ^λ ↓_{S_a × S_b}, χ^μ × χ^ν⟩` as an average over pairs of classes.
/// Equal to `c^λ_{μν}` by Frobenius reciprocity.
pub fn oracle_lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition, limits: &Limits) -> Result<u64> {
    let (a, b) = (mu.size(), nu.size());
    if lambda.size() != a + b {
        return Ok(0);
    }
    limits.check("restriction oracle", lambda.size(), limits.table_n)?;
    let mut total = Ratio::from_integer(0i128);
    for rho1 in enumerate_partitions(a, None) {
        let c1 = CycleType::new(rho1.clone());
        let weight1 = Ratio::new(1, c1.centralizer_order()? as i128);
        let x_mu = character_value(mu, &c1)? as i128;
        for rho2 in enumerate_partitions(b, None) {
            let c2 = CycleType::new(rho2.clone());
            let weight2 = Ratio::new(1, c2.centralizer_order()? as i128);
            let mut union: Vec<usize> = rho1.parts().iter().chain(rho2.parts()).copied().collect();
            union.sort_unstable_by(|x, y| y.cmp(x));
            let joined = CycleType::new(Partition::new(union)?);
            let value = character_value(lambda, &joined)? as i128 * x_mu * character_value(nu, &c2)? as i128;
            total += weight1 * weight2 * value;
        }
    }
    integral_multiplicity(total)
}

/// `(1/n!) Σ_ρ |class(ρ)| · w(ρ) · χ^λ(ρ ∪ ρ)` for a class function `w` of
/// `S_n`: the multiplicity of `w` in the restriction of `χ^λ` to the
/// diagonal `S_n ⊂ S_n × S_n ⊂ S_{2n}`.
fn diagonal_average(lambda: &Partition, n: usize, weight: impl Fn(&CycleType) -> Result<i64>) -> Result<u64> {
    let mut total = Ratio::from_integer(0i128);
    for rho in enumerate_partitions(n, None) {
        let class = CycleType::new(rho);
        let value = weight(&class)? as i128 * diagonal_restriction_value(lambda, &class)? as i128;
        total += Ratio::new(value, class.centralizer_order()? as i128);
    }
    integral_multiplicity(total)
}

fn oracle_half_size(lambda: &Partition, limits: &Limits) -> Result<usize> {
    if lambda.size() % 2 == 1 {
        return Err(Error::OddSize(lambda.size()));
    }
    let n = lambda.size() / 2;
    limits.check("square oracle", n, limits.square_n)?;
    Ok(n)
}

/// Multiplicity of `V^λ_k` in `Sym^n(M_k)`, as the multiplicity of the trivial
/// character in the diagonal restriction of `χ^λ`.
pub fn oracle_sym_square(lambda: &Partition, limits: &Limits) -> Result<u64> {
    let n = oracle_half_size(lambda, limits)?;
    diagonal_average(lambda, n, |_| Ok(1))
}

/// Multiplicity of `V^λ_k` in `M_k^{⊗n}(t)`: `C(n−1,t)` times the multiplicity
/// of `χ^{(n−t,1^t)}` in the diagonal restriction of `χ^λ`.
pub fn oracle_hook_square(lambda: &Partition, t: usize, limits: &Limits) -> Result<u64> {
    let n = oracle_half_size(lambda, limits)?;
    let hook = Partition::hook(n, t)?;
    let inner = diagonal_average(lambda, n, |rho| character_value(&hook, rho))?;
    arith::binomial(n - 1, t)?
        .checked_mul(inner)
        .ok_or(Error::Overflow("square oracle"))
}

/// A permutation of `0..len` in one-line notation with the given cycle
/// lengths, cycles laid out left to right in the order given.
fn permutation_with_cycles(lengths: &[usize]) -> Vec<usize> {
    let mut perm = Vec::with_capacity(lengths.iter().sum());
    let mut start = 0;
    for &len in lengths {
        for i in 0..len {
            perm.push(start + (i + 1) % len);
        }
        start += len;
    }
    perm
}

/// All perfect matchings of `0..2n`, each as a sorted list of pairs `(a, b)`
/// with `a < b`.
fn perfect_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn extend(free: &mut Vec<usize>, current: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(current.clone());
            return;
        }
        let first = free.remove(0);
        for idx in 0..free.len() {
            let partner = free.remove(idx);
            current.push((first, partner));
            extend(free, current, out);
            current.pop();
            free.insert(idx, partner);
        }
        free.insert(0, first);
    }
    let mut out = Vec::new();
    extend(&mut (0..2 * n).collect(), &mut Vec::new(), &mut out);
    out
}

fn fixed_matchings(matchings: &[Vec<(usize, usize)>], perm: &[usize]) -> i64 {
    let fixed = matchings.iter().filter(|m| {
        let mut image: Vec<(usize, usize)> = m
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        image.sort_unstable();
        image == **m
    });
    fixed.count() as i64
}

/// The permutation character of `S_{2n}` on perfect matchings of `2n`
/// points, by counting the matchings fixed by one permutation per class.
///
/// As a sanity check on class-function well-definedness, two classes are also
/// evaluated on a second representative (cycles in increasing length order,
/// then relabelled by a rotation); a disagreement is reported as
/// [`Error::InvalidTable`].
pub fn oracle_matching_character(n: usize, limits: &Limits) -> Result<ClassFunction> {
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            name: "n",
            value: 0,
            min: 1,
            max: limits.matching_n,
        });
    }
    limits.check("matching character", n, limits.matching_n)?;
    let matchings = perfect_matchings(n);
    let classes = enumerate_partitions(2 * n, None);
    let spot_checks = [1usize, classes.len() / 2];
    let mut values = Vec::with_capacity(classes.len());
    for (idx, rho) in classes.iter().enumerate() {
        let value = fixed_matchings(&matchings, &permutation_with_cycles(rho.parts()));
        if spot_checks.contains(&idx) {
            let mut reversed = rho.parts().to_vec();
            reversed.reverse();
            let base = permutation_with_cycles(&reversed);
            let m = base.len();
            let rotated: Vec<usize> = (0..m).map(|i| (base[(i + m - 1) % m] + 1) % m).collect();
            let other = fixed_matchings(&matchings, &rotated);
            if other != value {
                return Err(Error::InvalidTable(format!(
                    "matching count on class {rho} depends on the representative ({value} vs {other})"
                )));
            }
        }
        values.push(value);
    }
    ClassFunction::new(2 * n, values)
}

/// True iff the matching character is `Σ_{λ⊢n} χ^{2·λ}`: inner product one
/// with each `χ^{2·λ}` and zero with every other irreducible of `S_{2n}`.
pub fn verify_d0a(n: usize, limits: &Limits) -> Result<bool> {
    let matching = oracle_matching_character(n, limits)?;
    let table = character_table_capped(2 * n, limits.table_n)?;
    let doubled: Vec<Partition> = enumerate_partitions(n, None)
        .iter()
        .map(Partition::double_rows)
        .collect();
    for (mu, chi) in table.partitions().iter().zip(table.rows()) {
        let expected = Ratio::from_integer(i128::from(doubled.contains(mu)));
        if inner_product(&matching, chi)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}
