//! Named verification suites, as run by `hookdec verify`.

use std::fmt;
use std::str::FromStr;

use crate::bn::{check_d0_dimensions, check_d2, check_eigenvalue_identity, InducedFrom};
use crate::characters::{product_height, product_width};
use crate::error::{Error, Result};
use crate::hook::{
    check_distance_bounds, check_duality_rect, check_duality_square, corner_formula_check, hook_square_forms,
    hook_square_graded_forms, mult_hook_square, mult_hook_square_graded, mult_rect, mult_sym_square,
    mult_sym_square_graded, rect_forms,
};
use crate::limits::Limits;
use crate::lr::lr_coefficient;
use crate::oracle::{
    oracle_hook_square, oracle_lr_coefficient, oracle_rect_multiplicity, oracle_sym_square, verify_d0a,
};
use crate::partition::{enumerate_partitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Rect,
    Square,
    Bn,
    Bounds,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::All, Suite::Rect, Suite::Square, Suite::Bn, Suite::Bounds];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Rect => "rect",
            Suite::Square => "square",
            Suite::Bn => "bn",
            Suite::Bounds => "bounds",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_owned(),
                reason: "expected one of all, rect, square, bn, bounds".to_owned(),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.name)
    }
}

struct Recorder {
    outcomes: Vec<CheckOutcome>,
}

impl Recorder {
    fn record(&mut self, name: impl Into<String>, check: impl FnOnce() -> Result<bool>) -> Result<()> {
        let passed = check()?;
        self.outcomes.push(CheckOutcome {
            name: name.into(),
            passed,
        });
        Ok(())
    }
}

fn all_pairs(n: usize) -> Vec<(Partition, Partition)> {
    let all = enumerate_partitions(n, None);
    all.iter()
        .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

/// Runs every check of `suite` for `1 ≤ n ≤ max_n`. Checks whose size
/// exceeds `limits` fail with [`Error::ResourceLimit`] instead of running.
pub fn run_suite(suite: Suite, max_n: usize, limits: &Limits) -> Result<Vec<CheckOutcome>> {
    let mut r = Recorder { outcomes: Vec::new() };
    if suite.includes(Suite::Rect) {
        rect_checks(&mut r, max_n, limits)?;
    }
    if suite.includes(Suite::Bounds) {
        bounds_checks(&mut r, max_n, limits)?;
    }
    if suite.includes(Suite::Square) {
        square_checks(&mut r, max_n, limits)?;
    }
    if suite.includes(Suite::Bn) {
        bn_checks(&mut r, max_n, limits)?;
    }
    Ok(r.outcomes)
}

fn rect_checks(r: &mut Recorder, max_n: usize, limits: &Limits) -> Result<()> {
    limits.check("rectangular suite", max_n, limits.rect_n)?;
    for n in 1..=max_n {
        let pairs = all_pairs(n);
        r.record(format!("rect boundary n={n}"), || {
            for (a, b) in &pairs {
                if mult_rect(a, b, 0)? != u64::from(a == b) || mult_rect(a, b, n - 1)? != u64::from(*a == b.conjugate())
                {
                    return Ok(false);
                }
            }
            Ok(true)
        })?;
        r.record(format!("rect oracle n={n}"), || {
            for (a, b) in &pairs {
                for t in 0..n {
                    if mult_rect(a, b, t)? != oracle_rect_multiplicity(a, b, t, limits)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })?;
        r.record(format!("rect prefix/suffix n={n}"), || {
            for (a, b) in &pairs {
                for t in 0..n {
                    let f = rect_forms(a, b, t)?;
                    if f.prefix != f.suffix {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })?;
        r.record(format!("rect duality n={n}"), || check_duality_rect(n, limits))?;
        if n >= 2 {
            r.record(format!("corner formula n={n}"), || corner_formula_check(n, limits))?;
        }
        r.record(format!("lr oracle n={n}"), || {
            for lambda in enumerate_partitions(n, None) {
                for a in 0..=n {
                    for mu in enumerate_partitions(a, None) {
                        for nu in enumerate_partitions(n - a, None) {
                            if lr_coefficient(&lambda, &mu, &nu) != oracle_lr_coefficient(&lambda, &mu, &nu, limits)? {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
            Ok(true)
        })?;
    }
    Ok(())
}

fn bounds_checks(r: &mut Recorder, max_n: usize, limits: &Limits) -> Result<()> {
    limits.check("bounds suite", max_n, limits.rect_n)?;
    for n in 1..=max_n {
        r.record(format!("distance bounds n={n}"), || {
            for k in 1..=n {
                for m in 1..=n {
                    if !check_distance_bounds(n, k, m, limits)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })?;
        let pairs = all_pairs(n);
        r.record(format!("height bound n={n}"), || {
            for (a, b) in &pairs {
                if product_height(a, b)? > a.len() * b.len() {
                    return Ok(false);
                }
            }
            Ok(true)
        })?;
        r.record(format!("width and height n={n}"), || {
            for (a, b) in &pairs {
                if product_width(a, b)? != a.intersection(b).size()
                    || product_height(a, b)? != a.intersection(&b.conjugate()).size()
                {
                    return Ok(false);
                }
            }
            Ok(true)
        })?;
    }
    Ok(())
}

fn square_checks(r: &mut Recorder, max_n: usize, limits: &Limits) -> Result<()> {
    limits.check("square suite", max_n, limits.square_n)?;
    for n in 1..=max_n {
        let shapes = enumerate_partitions(2 * n, None);
        let halves = enumerate_partitions(n, None);
        r.record(format!("sym square oracle n={n}"), || {
            for lambda in &shapes {
                if mult_sym_square(lambda)? != oracle_sym_square(lambda, limits)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })?;
        r.record(format!("sym square boundary n={n}"), || {
            for lambda in &shapes {
                let rows = halves.iter().any(|mu| mu.double_rows() == *lambda);
                let cols = halves.iter().any(|nu| nu.double_rows().conjugate() == *lambda);
                if mult_sym_square_graded(lambda, 0)? != u64::from(rows)
                    || mult_sym_square_graded(lambda, n)? != u64::from(cols)
                {
                    return Ok(false);
                }
            }
            Ok(true)
        })?;
        r.record(format!("hook square oracle n={n}"), || {
            for lambda in &shapes {
                for t in 0..n {
                    if mult_hook_square(lambda, t)? != oracle_hook_square(lambda, t, limits)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })?;
        r.record(format!("hook square grading n={n}"), || {
            for lambda in &shapes {
                for t in 0..n {
                    let mut total = 0;
                    for j in 0..=n {
                        total += mult_hook_square_graded(lambda, t, j)?;
                    }
                    if total != mult_hook_square(lambda, t)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })?;
        r.record(format!("square prefix/suffix n={n}"), || {
            for lambda in &shapes {
                for t in 0..n {
                    let f = hook_square_forms(lambda, t)?;
                    if f.prefix != f.suffix {
                        return Ok(false);
                    }
                    for j in 0..=n {
                        let g = hook_square_graded_forms(lambda, t, j)?;
                        if g.prefix != g.suffix {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        })?;
        r.record(format!("square duality n={n}"), || check_duality_square(n, limits))?;
    }
    Ok(())
}

fn bn_checks(r: &mut Recorder, max_n: usize, limits: &Limits) -> Result<()> {
    limits.check("hyperoctahedral suite", max_n, limits.bn_n)?;
    for n in 1..=max_n {
        if n <= limits.matching_n {
            r.record(format!("matching character n={n}"), || verify_d0a(n, limits))?;
        }
        r.record(format!("induced degrees n={n}"), || check_d0_dimensions(n, limits))?;
        r.record(format!("induced trivial n={n}"), || {
            check_d2(n, InducedFrom::Trivial, limits)
        })?;
        r.record(format!("induced sign n={n}"), || check_d2(n, InducedFrom::Sign, limits))?;
        r.record(format!("central eigenvalue n={n}"), || {
            check_eigenvalue_identity(n, limits)
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("everything".parse::<Suite>().unwrap_err().is_parse());
    }

    #[test]
    fn small_runs_pass() {
        let limits = Limits::default();
        let outcomes = run_suite(Suite::All, 2, &limits).unwrap();
        assert!(!outcomes.is_empty());
        assert!(outcomes.iter().all(|o| o.passed), "{outcomes:?}");
        assert_eq!(outcomes[0].to_string(), "PASS rect boundary n=1");
    }

    #[test]
    fn caps_are_enforced() {
        let limits = Limits::default();
        assert!(run_suite(Suite::Square, 5, &limits).unwrap_err().is_resource_limit());
        assert!(run_suite(Suite::Rect, 0, &limits).unwrap().is_empty());
    }
}
