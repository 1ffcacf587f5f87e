//! Littlewood–Richardson coefficients by explicit tableau enumeration.
//!
//! Convention: an LR tableau of shape `λ/μ` and content `ν` is a
//! semistandard filling (rows weakly increasing left to right, columns
//! strictly increasing downward) whose reverse reading word (rows top to
//! bottom, each row read right to left) is a lattice word. The count is
//! `c^λ_{μν}`, the multiplicity of `s_λ` in `s_μ s_ν`.
//!
//! Coefficients are memoized in a process-wide cache guarded by an
//! `RwLock`, so concurrent callers never see a partially written entry.

use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, RwLock};

use crate::error::{Error, Result};
use crate::partition::{check_same_size, distinct_part_partitions, enumerate_partitions, Partition, SkewShape};

/// A finite nonnegative combination of Schur functions of one degree.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: usize,
    entries: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn new(degree: usize) -> Self {
        SchurExpansion {
            degree,
            entries: BTreeMap::new(),
        }
    }

    /// The single term `s_λ`.
    pub fn single(lambda: Partition) -> Self {
        let mut e = SchurExpansion::new(lambda.size());
        e.add(lambda, 1);
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds `coefficient · s_λ`. Panics if `λ` has the wrong size.
    pub fn add(&mut self, lambda: Partition, coefficient: u64) {
        assert_eq!(lambda.size(), self.degree, "term {lambda} in degree {}", self.degree);
        if coefficient > 0 {
            *self.entries.entry(lambda).or_insert(0) += coefficient;
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> u64 {
        self.entries.get(lambda).copied().unwrap_or(0)
    }

    /// Terms in enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

type Triple = (Partition, Partition, Partition);

static LR_CACHE: LazyLock<RwLock<HashMap<Triple, u64>>> = LazyLock::new(Default::default);

/// `c^λ_{μν}`. Zero whenever the sizes do not add up or `μ, ν ⊄ λ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if mu.is_empty() {
        return u64::from(nu == lambda);
    }
    if nu.is_empty() {
        return u64::from(mu == lambda);
    }
    // c^λ_{μν} = c^λ_{νμ}; store one key per unordered pair.
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (lambda.clone(), a.clone(), b.clone());
    if let Some(&v) = LR_CACHE.read().expect("lr cache poisoned").get(&key) {
        return v;
    }
    // Put the larger partition inside; the skew shape is then smaller.
    let (inner, content) = if a.size() >= b.size() { (a, b) } else { (b, a) };
    let value = LrFiller::new(lambda, inner, Some(content)).count();
    LR_CACHE.write().expect("lr cache poisoned").insert(key, value);
    value
}

/// Expansion of the skew Schur function `s_{λ/μ}`: the coefficient of `s_ν`
/// is the number of LR tableaux of the shape with content `ν`.
pub fn skew_schur_expansion(shape: &SkewShape) -> SchurExpansion {
    let mut expansion = SchurExpansion::new(shape.size());
    let mut filler = LrFiller::new(shape.outer(), shape.inner(), None);
    filler.run(&mut |content| {
        let parts: Vec<usize> = content.iter().copied().take_while(|&c| c > 0).collect();
        expansion.add(Partition::from_sorted(parts), 1);
    });
    expansion
}

/// The product `s_α s_β` expanded in Schur functions.
pub fn schur_product(alpha: &Partition, beta: &Partition) -> SchurExpansion {
    let degree = alpha.size() + beta.size();
    let mut out = SchurExpansion::new(degree);
    for lambda in enumerate_partitions(degree, Some(alpha.len() + beta.len())) {
        out.add(lambda.clone(), lr_coefficient(&lambda, alpha, beta));
    }
    out
}

/// The extended coefficient `c^λ_{α,β,γ,δ}`, the multiplicity of `s_λ` in
/// `s_α s_β s_γ s_δ`.
///
/// Evaluated as the iterated product `((s_α s_β) s_γ) s_δ`, discarding
/// intermediate shapes that do not fit inside `λ`.
pub fn extended_lr(
    lambda: &Partition,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    delta: &Partition,
) -> u64 {
    if alpha.size() + beta.size() + gamma.size() + delta.size() != lambda.size() {
        return 0;
    }
    let mut partial: BTreeMap<Partition, u64> = BTreeMap::new();
    partial.insert(alpha.clone(), 1);
    for factor in [beta, gamma] {
        let mut next = BTreeMap::new();
        for (kappa, coefficient) in &partial {
            for (rho, c) in schur_product(kappa, factor).iter() {
                if lambda.contains(rho) {
                    *next.entry(rho.clone()).or_insert(0) += coefficient * c;
                }
            }
        }
        partial = next;
    }
    partial
        .iter()
        .map(|(kappa, coefficient)| coefficient * lr_coefficient(lambda, kappa, delta))
        .sum()
}

/// `σ_{λ,μ}(i) = Σ_{α ⊢ n−i, β ⊢ i} c^λ_{αβ} c^μ_{αβ'}`.
pub fn sigma_rect(lambda: &Partition, mu: &Partition, i: usize) -> Result<u64> {
    let n = check_same_size(lambda, mu)?;
    if i > n {
        return Err(Error::IndexOutOfRange {
            name: "i",
            value: i,
            min: 0,
            max: n,
        });
    }
    let common = lambda.intersection(mu);
    let mut total = 0;
    for alpha in enumerate_partitions(n - i, Some(common.len())) {
        if !common.contains(&alpha) {
            continue;
        }
        for beta in enumerate_partitions(i, None) {
            let left = lr_coefficient(lambda, &alpha, &beta);
            if left == 0 {
                continue;
            }
            total += left * lr_coefficient(mu, &alpha, &beta.conjugate());
        }
    }
    Ok(total)
}

/// Half the size of a partition of `2n`, or `OddSize`.
pub(crate) fn half_size(lambda: &Partition) -> Result<usize> {
    let size = lambda.size();
    if size % 2 == 1 {
        return Err(Error::OddSize(size));
    }
    Ok(size / 2)
}

pub(crate) fn check_index(name: &'static str, value: usize, max: usize) -> Result<()> {
    if value > max {
        return Err(Error::IndexOutOfRange {
            name,
            value,
            min: 0,
            max,
        });
    }
    Ok(())
}

/// `σ_λ(i)`: the sum of `c^λ_{2·α,(2·β)',2*γ,(2*δ)'}` over `|α|+|β| = n−i`
/// and distinct-part `γ, δ` with `|γ|+|δ| = i`, where `λ ⊢ 2n`.
pub fn sigma_square(lambda: &Partition, i: usize) -> Result<u64> {
    let n = half_size(lambda)?;
    check_index("i", i, n)?;
    Ok(square_terms(lambda, n, i, None))
}

/// `σ_λ(i, j)`: as [`sigma_square`] with the extra constraint `|β|+|δ| = j`.
pub fn sigma_square_graded(lambda: &Partition, i: usize, j: usize) -> Result<u64> {
    let n = half_size(lambda)?;
    check_index("i", i, n)?;
    check_index("j", j, n)?;
    Ok(square_terms(lambda, n, i, Some(j)))
}

fn square_terms(lambda: &Partition, n: usize, i: usize, j: Option<usize>) -> u64 {
    let mut total = 0;
    for alpha_size in 0..=n - i {
        let beta_size = n - i - alpha_size;
        for gamma_size in 0..=i {
            let delta_size = i - gamma_size;
            if j.is_some_and(|j| beta_size + delta_size != j) {
                continue;
            }
            for alpha in enumerate_partitions(alpha_size, None) {
                let a = alpha.double_rows();
                if !lambda.contains(&a) {
                    continue;
                }
                for beta in enumerate_partitions(beta_size, None) {
                    let b = beta.double_rows().conjugate();
                    if !lambda.contains(&b) {
                        continue;
                    }
                    for gamma in distinct_part_partitions(gamma_size) {
                        let g = gamma.double_diagonal().expect("distinct parts");
                        for delta in distinct_part_partitions(delta_size) {
                            let d = delta.double_diagonal().expect("distinct parts").conjugate();
                            total += extended_lr(lambda, &a, &b, &g, &d);
                        }
                    }
                }
            }
        }
    }
    total
}

/// Backtracking enumerator of LR fillings of `outer/inner`.
///
/// Cells are visited in reverse reading order, so when a cell is filled its
/// right neighbour and the cell above it are already known.
struct LrFiller<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    /// Target content, or `None` to accept every lattice content.
    content: Option<&'a Partition>,
    /// Cells in visiting order.
    order: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
    max_label: usize,
}

impl<'a> LrFiller<'a> {
    fn new(outer: &'a Partition, inner: &'a Partition, content: Option<&'a Partition>) -> Self {
        let order = outer
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &row)| (inner.part(r)..row).rev().map(move |c| (r, c)))
            .collect::<Vec<_>>();
        let rows = outer.len();
        let max_label = match content {
            Some(nu) => nu.len(),
            None => rows,
        };
        LrFiller {
            outer,
            inner,
            content,
            order,
            grid: outer.parts().iter().map(|&row| vec![0; row]).collect(),
            counts: vec![0; max_label + 2],
            max_label,
        }
    }

    fn count(mut self) -> u64 {
        let mut n = 0;
        self.run(&mut |_| n += 1);
        n
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize])) {
        self.step(0, visit);
    }

    fn step(&mut self, index: usize, visit: &mut dyn FnMut(&[usize])) {
        let Some(&(r, c)) = self.order.get(index) else {
            visit(&self.counts[1..]);
            return;
        };
        // Weakly increasing rows: at most the right neighbour.
        let mut hi = self.max_label;
        if c + 1 < self.outer.part(r) {
            hi = hi.min(self.grid[r][c + 1]);
        }
        // Strictly increasing columns: above the cell above.
        let mut lo = 1;
        if r > 0 && c >= self.inner.part(r - 1) {
            lo = lo.max(self.grid[r - 1][c] + 1);
        }
        for v in lo..=hi {
            if v > 1 && self.counts[v] >= self.counts[v - 1] {
                continue;
            }
            if let Some(nu) = self.content {
                if self.counts[v] >= nu.part(v - 1) {
                    continue;
                }
            }
            self.counts[v] += 1;
            self.grid[r][c] = v;
            self.step(index + 1, visit);
            self.counts[v] -= 1;
        }
        self.grid[r][c] = 0;
    }
}
