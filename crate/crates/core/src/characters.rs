//! Symmetric group characters via the Murnaghan–Nakayama rule.
//!
//! Values are exact `i64`s, inner products exact rationals. Skew characters
//! `χ^{λ/μ}` are computed by stripping border strips off the outer shape,
//! largest cycle first, keeping only intermediate shapes that still contain
//! the inner shape. Both the recursion and the assembled character tables
//! are memoized behind `RwLock`s.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num_rational::Ratio;

use crate::arith;
use crate::error::{Error, Result};
use crate::lr::SchurExpansion;
use crate::partition::{check_same_size, enumerate_partitions, Partition, SkewShape};

/// Default cap on the degree of a character table: `S_8` has 22 classes.
pub const DEFAULT_TABLE_CAP: usize = 8;

/// A partition read as a conjugacy class of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(partition: Partition) -> Self {
        CycleType(partition)
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// `z(ρ) = Π i^{m_i} m_i!`, the order of the centralizer.
    pub fn centralizer_order(&self) -> Result<u128> {
        let mut z: u128 = 1;
        let parts = self.0.parts();
        let mut i = 0;
        while i < parts.len() {
            let value = parts[i];
            let run = parts[i..].iter().take_while(|&&p| p == value).count();
            let power = (value as u128)
                .checked_pow(run as u32)
                .ok_or(Error::Overflow("centralizer order"))?;
            z = z
                .checked_mul(power)
                .and_then(|z| z.checked_mul(arith::factorial(run).ok()?))
                .ok_or(Error::Overflow("centralizer order"))?;
            i += run;
        }
        Ok(z)
    }

    /// Number of permutations with this cycle type, `n!/z(ρ)`.
    pub fn class_size(&self) -> Result<u128> {
        Ok(arith::factorial(self.size())? / self.centralizer_order()?)
    }

    /// `ρ ∪ ρ`: every cycle duplicated. This is the cycle type in `S_{2n}` of
    /// the diagonal image of a permutation of type `ρ`.
    pub fn doubled(&self) -> CycleType {
        let parts = self.0.parts().iter().flat_map(|&p| [p, p]).collect();
        CycleType(Partition::from_sorted(parts))
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType(p)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{:?}", self.0)
    }
}

type MnKey = (Partition, Partition, Vec<usize>);

static MN_CACHE: LazyLock<RwLock<HashMap<MnKey, i64>>> = LazyLock::new(Default::default);

/// `χ^{λ/μ}(ρ)` by the Murnaghan–Nakayama rule.
pub fn mn_value(shape: &SkewShape, rho: &CycleType) -> Result<i64> {
    if shape.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: rho.size(),
        });
    }
    Ok(mn_rec(shape.outer(), shape.inner(), rho.partition().parts()))
}

/// `χ^λ(ρ)` for a straight shape.
pub fn character_value(lambda: &Partition, rho: &CycleType) -> Result<i64> {
    mn_value(&SkewShape::straight(lambda.clone()), rho)
}

fn mn_rec(outer: &Partition, inner: &Partition, cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return i64::from(outer == inner);
    };
    let key = (outer.clone(), inner.clone(), cycles.to_vec());
    if let Some(&v) = MN_CACHE.read().expect("mn cache poisoned").get(&key) {
        return v;
    }
    let mut total = 0;
    for (smaller, height) in remove_border_strips(outer, r) {
        if smaller.contains(inner) {
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * mn_rec(&smaller, inner, rest);
        }
    }
    MN_CACHE.write().expect("mn cache poisoned").insert(key, total);
    total
}

/// All `(λ̃, ht)` with `λ/λ̃` a border strip of `len` cells and `ht` its
/// height (rows spanned minus one).
///
/// Works on the beta-set `{λ_i + L − 1 − i}`: removing a border strip of
/// length `len` moves one bead down by `len` onto an empty position, and the
/// height is the number of beads jumped over.
fn remove_border_strips(lambda: &Partition, len: usize) -> Vec<(Partition, usize)> {
    let rows = lambda.len();
    let beta: Vec<usize> = (0..rows).map(|i| lambda.part(i) + rows - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < len || beta.contains(&(b - len)) {
            continue;
        }
        let target = b - len;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved.iter().enumerate().map(|(i, &x)| x - (rows - 1 - i)).collect();
        out.push((Partition::from_sorted(parts), height));
    }
    out
}

/// An exact integer class function on `S_n`, indexed by the cycle types in
/// enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    degree: usize,
    values: Vec<i64>,
}

impl ClassFunction {
    /// Builds a class function from one value per class, in enumeration order.
    pub fn new(degree: usize, values: Vec<i64>) -> Result<Self> {
        let classes = enumerate_partitions(degree, None).len();
        if values.len() != classes {
            return Err(Error::SizeMismatch {
                left: values.len(),
                right: classes,
            });
        }
        Ok(ClassFunction { degree, values })
    }

    /// Evaluates `f` on every class.
    pub fn from_fn(degree: usize, mut f: impl FnMut(&CycleType) -> Result<i64>) -> Result<Self> {
        let values = enumerate_partitions(degree, None)
            .into_iter()
            .map(|rho| f(&CycleType::new(rho)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { degree, values })
    }

    /// The irreducible character `χ^λ`.
    pub fn irreducible(lambda: &Partition) -> Result<Self> {
        Self::from_fn(lambda.size(), |rho| character_value(lambda, rho))
    }

    /// The trivial character of `S_n`.
    pub fn trivial(degree: usize) -> Self {
        let classes = enumerate_partitions(degree, None).len();
        ClassFunction {
            degree,
            values: vec![1; classes],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value_at(&self, rho: &CycleType) -> Option<i64> {
        enumerate_partitions(self.degree, None)
            .iter()
            .position(|p| p == rho.partition())
            .map(|i| self.values[i])
    }

    /// Value at the identity class `(1^n)`.
    pub fn dimension(&self) -> i64 {
        *self.values.last().expect("at least one class")
    }

    /// Pointwise product (inner tensor product of representations).
    pub fn pointwise(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_degree(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.checked_mul(*b).ok_or(Error::Overflow("class function product")))
            .collect::<Result<_>>()?;
        Ok(ClassFunction {
            degree: self.degree,
            values,
        })
    }

    fn check_degree(&self, other: &ClassFunction) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }
}

/// `⟨φ, ψ⟩ = (1/n!) Σ_ρ |class(ρ)| φ(ρ) ψ(ρ)`, exactly.
pub fn inner_product(phi: &ClassFunction, psi: &ClassFunction) -> Result<Ratio<i128>> {
    phi.check_degree(psi)?;
    let order = arith::factorial(phi.degree)? as i128;
    let mut sum: i128 = 0;
    for (rho, (a, b)) in enumerate_partitions(phi.degree, None)
        .into_iter()
        .zip(phi.values.iter().zip(&psi.values))
    {
        let size = CycleType::new(rho).class_size()? as i128;
        let term = size
            .checked_mul(*a as i128)
            .and_then(|t| t.checked_mul(*b as i128))
            .ok_or(Error::Overflow("inner product"))?;
        sum = sum.checked_add(term).ok_or(Error::Overflow("inner product"))?;
    }
    Ok(Ratio::new(sum, order))
}

/// The full table of irreducible characters of `S_n`.
///
/// Rows are indexed by `λ` and columns by `ρ`, both in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    degree: usize,
    partitions: Vec<Partition>,
    rows: Vec<ClassFunction>,
}

impl CharacterTable {
    fn compute(n: usize) -> Result<Self> {
        let partitions = enumerate_partitions(n, None);
        let rows = partitions
            .iter()
            .map(ClassFunction::irreducible)
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable {
            degree: n,
            partitions,
            rows,
        })
    }

    /// Rebuilds a table from raw values, for example read back from disk.
    ///
    /// Only the shape is validated here; callers that do not trust the
    /// source should also call [`CharacterTable::is_orthonormal`].
    pub fn from_values(n: usize, values: Vec<Vec<i64>>) -> Result<Self> {
        let partitions = enumerate_partitions(n, None);
        if values.len() != partitions.len() {
            return Err(Error::InvalidTable(format!(
                "{} rows for {} partitions of {n}",
                values.len(),
                partitions.len()
            )));
        }
        let rows = values
            .into_iter()
            .map(|v| ClassFunction::new(n, v).map_err(|e| Error::InvalidTable(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable {
            degree: n,
            partitions,
            rows,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    pub fn character(&self, lambda: &Partition) -> Option<&ClassFunction> {
        self.index_of(lambda).map(|i| &self.rows[i])
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lambda)
    }

    /// Raw values, one row per irreducible.
    pub fn values(&self) -> Vec<Vec<i64>> {
        self.rows.iter().map(|r| r.values.clone()).collect()
    }

    /// Row orthonormality under the class-weighted inner product.
    pub fn is_orthonormal(&self) -> Result<bool> {
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in self.rows.iter().enumerate() {
                let expected = Ratio::from_integer(i128::from(i == j));
                if inner_product(a, b)? != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

static TABLES: LazyLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = LazyLock::new(Default::default);

/// The character table of `S_n`, with the default cap of
/// [`DEFAULT_TABLE_CAP`].
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    character_table_capped(n, DEFAULT_TABLE_CAP)
}

/// The character table of `S_n`, failing with `ResourceLimit` above `cap`.
pub fn character_table_capped(n: usize, cap: usize) -> Result<Arc<CharacterTable>> {
    if n > cap {
        return Err(Error::ResourceLimit {
            what: "character table",
            requested: n,
            cap,
        });
    }
    if let Some(t) = TABLES.read().expect("table cache poisoned").get(&n) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(CharacterTable::compute(n)?);
    let mut guard = TABLES.write().expect("table cache poisoned");
    Ok(Arc::clone(guard.entry(n).or_insert(table)))
}

/// Seeds the table cache, for example from a persisted copy. A table that
/// is already cached is left alone.
pub fn install_table(table: CharacterTable) {
    TABLES
        .write()
        .expect("table cache poisoned")
        .entry(table.degree)
        .or_insert_with(|| Arc::new(table));
}

/// Every table currently in the cache, by increasing degree.
pub fn cached_tables() -> Vec<Arc<CharacterTable>> {
    let mut tables: Vec<_> = TABLES.read().expect("table cache poisoned").values().cloned().collect();
    tables.sort_by_key(|t| t.degree);
    tables
}

/// Kronecker coefficient `α_{λμν} = ⟨χ^λ χ^μ χ^ν, 1⟩`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    kronecker_capped(lambda, mu, nu, DEFAULT_TABLE_CAP)
}

pub fn kronecker_capped(lambda: &Partition, mu: &Partition, nu: &Partition, cap: usize) -> Result<u64> {
    let n = check_same_size(lambda, mu)?;
    check_same_size(lambda, nu)?;
    let table = character_table_capped(n, cap)?;
    let row = |p: &Partition| table.character(p).expect("partition of n").clone();
    let product = row(lambda).pointwise(&row(mu))?;
    integral_multiplicity(inner_product(&product, &row(nu))?)
}

/// Decomposes `χ^λ χ^μ` into irreducibles.
pub fn kronecker_product(lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
    let n = check_same_size(lambda, mu)?;
    let mut out = SchurExpansion::new(n);
    for nu in enumerate_partitions(n, None) {
        let c = kronecker(lambda, mu, &nu)?;
        out.add(nu, c);
    }
    Ok(out)
}

/// Converts an inner product that must be a multiplicity into a `u64`.
pub(crate) fn integral_multiplicity(value: Ratio<i128>) -> Result<u64> {
    if !value.is_integer() {
        return Err(Error::InvalidTable(format!("non-integral multiplicity {value}")));
    }
    let v = value.to_integer();
    if v < 0 {
        return Err(Error::NegativeMultiplicity(v as i64));
    }
    u64::try_from(v).map_err(|_| Error::Overflow("multiplicity"))
}

/// Largest length among the constituents of `χ^λ χ^μ`.
pub fn product_height(lambda: &Partition, mu: &Partition) -> Result<usize> {
    let expansion = kronecker_product(lambda, mu)?;
    Ok(expansion.iter().map(|(nu, _)| nu.len()).max().unwrap_or(0))
}

/// Largest first part among the constituents of `χ^λ χ^μ`.
pub fn product_width(lambda: &Partition, mu: &Partition) -> Result<usize> {
    let expansion = kronecker_product(lambda, mu)?;
    Ok(expansion.iter().map(|(nu, _)| nu.width()).max().unwrap_or(0))
}

/// `χ^λ(ρ ∪ ρ)` for `λ ⊢ 2n` and `ρ ⊢ n`: the value of `χ^λ` on the
/// diagonal copy of a permutation of type `ρ`.
pub fn diagonal_restriction_value(lambda: &Partition, rho: &CycleType) -> Result<i64> {
    if lambda.size() != 2 * rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: 2 * rho.size(),
        });
    }
    character_value(lambda, &rho.doubled())
}
