//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hookdec::bn::{check_d0_dimensions, check_d2, check_eigenvalue_identity, InducedFrom};
use hookdec::characters::{product_height, product_width, CycleType};
use hookdec::hook::{
    check_distance_bounds, check_duality_rect, check_duality_square, corner_formula_check, hook_binomial,
    hook_square_forms, hook_square_graded_forms, mult_hook_square, mult_hook_square_graded, mult_rect, mult_sym_square,
    mult_sym_square_graded, rect_forms,
};
use hookdec::oracle::{
    oracle_hook_square, oracle_matching_character, oracle_rect_multiplicity, oracle_sym_square, verify_d0a,
};
use hookdec::partition::enumerate_partitions;
use hookdec::{arith, characters, Limits, Partition, Result};

fn pairs(n: usize) -> Vec<(Partition, Partition)> {
    let all = enumerate_partitions(n, None);
    all.iter()
        .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn lib<T>(r: Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let elapsed = start.elapsed();
    ensure(elapsed <= limit, || format!("took {elapsed:?}, budget {limit:?}"))
}

fn boundary() -> Result<(), String> {
    let start = Instant::now();
    for n in 1..=7 {
        for (a, b) in pairs(n) {
            ensure(lib(mult_rect(&a, &b, 0))? == u64::from(a == b), || {
                format!("t=0 at {a} {b}")
            })?;
            ensure(lib(mult_rect(&a, &b, n - 1))? == u64::from(a == b.conjugate()), || {
                format!("t=n-1 at {a} {b}")
            })?;
        }
    }
    within(Duration::from_secs(30), start)
}

fn rect_oracle() -> Result<(), String> {
    let start = Instant::now();
    let limits = Limits::default();
    for n in 1..=6 {
        for (a, b) in pairs(n) {
            for t in 0..n {
                let formula = lib(mult_rect(&a, &b, t))?;
                let oracle = lib(oracle_rect_multiplicity(&a, &b, t, &limits))?;
                ensure(formula == oracle, || format!("{a} {b} t={t}: {formula} vs {oracle}"))?;
                let hook = lib(Partition::hook(n, t))?;
                let direct = lib(hook_binomial(n, t))? * lib(characters::kronecker(&a, &b, &hook))?;
                ensure(formula == direct, || format!("{a} {b} t={t}: binomial times Kronecker"))?;
            }
        }
    }
    within(Duration::from_secs(120), start)
}

fn prefix_suffix() -> Result<(), String> {
    for n in 1..=7 {
        for (a, b) in pairs(n) {
            for t in 0..n {
                let f = lib(rect_forms(&a, &b, t))?;
                ensure(f.prefix == f.suffix, || format!("rect {a} {b} t={t}: {f:?}"))?;
            }
        }
    }
    for n in 1..=4 {
        for lambda in enumerate_partitions(2 * n, None) {
            for t in 0..n {
                let f = lib(hook_square_forms(&lambda, t))?;
                ensure(f.prefix == f.suffix, || format!("square {lambda} t={t}: {f:?}"))?;
                for j in 0..=n {
                    let g = lib(hook_square_graded_forms(&lambda, t, j))?;
                    ensure(g.prefix == g.suffix, || format!("graded {lambda} t={t} j={j}: {g:?}"))?;
                }
            }
        }
    }
    Ok(())
}

fn duality() -> Result<(), String> {
    let limits = Limits::default();
    for n in 1..=7 {
        ensure(lib(check_duality_rect(n, &limits))?, || format!("rect n={n}"))?;
    }
    for n in 1..=4 {
        ensure(lib(check_duality_square(n, &limits))?, || format!("square n={n}"))?;
    }
    Ok(())
}

fn bounds() -> Result<(), String> {
    let limits = Limits::default();
    for n in 1..=6 {
        for k in 1..=n {
            for m in 1..=n {
                ensure(lib(check_distance_bounds(n, k, m, &limits))?, || {
                    format!("distance n={n} k={k} m={m}")
                })?;
            }
        }
        for (a, b) in pairs(n) {
            let height = lib(product_height(&a, &b))?;
            let width = lib(product_width(&a, &b))?;
            ensure(height <= a.len() * b.len(), || format!("height bound {a} {b}"))?;
            ensure(width == a.intersection(&b).size(), || format!("width {a} {b}"))?;
            ensure(height == a.intersection(&b.conjugate()).size(), || {
                format!("height {a} {b}")
            })?;
        }
    }
    Ok(())
}

fn sym_square() -> Result<(), String> {
    let limits = Limits::default();
    for n in 1..=4 {
        let halves = enumerate_partitions(n, None);
        for lambda in enumerate_partitions(2 * n, None) {
            let formula = lib(mult_sym_square(&lambda))?;
            let oracle = lib(oracle_sym_square(&lambda, &limits))?;
            ensure(formula == oracle, || format!("{lambda}: {formula} vs {oracle}"))?;
            let rows = halves.iter().any(|mu| mu.double_rows() == lambda);
            let cols = halves.iter().any(|nu| nu.double_rows().conjugate() == lambda);
            ensure(lib(mult_sym_square_graded(&lambda, 0))? == u64::from(rows), || {
                format!("i=0 at {lambda}")
            })?;
            ensure(lib(mult_sym_square_graded(&lambda, n))? == u64::from(cols), || {
                format!("i=n at {lambda}")
            })?;
        }
    }
    Ok(())
}

fn hook_square() -> Result<(), String> {
    let start = Instant::now();
    let limits = Limits::default();
    for n in 1..=4 {
        for lambda in enumerate_partitions(2 * n, None) {
            for t in 0..n {
                let formula = lib(mult_hook_square(&lambda, t))?;
                let oracle = lib(oracle_hook_square(&lambda, t, &limits))?;
                ensure(formula == oracle, || format!("{lambda} t={t}: {formula} vs {oracle}"))?;
                let mut graded = 0;
                for j in 0..=n {
                    graded += lib(mult_hook_square_graded(&lambda, t, j))?;
                }
                ensure(graded == formula, || format!("{lambda} t={t}: graded sum {graded}"))?;
            }
        }
    }
    within(Duration::from_secs(120), start)
}

fn bn_bridge() -> Result<(), String> {
    let limits = Limits::default();
    for n in 1..=4 {
        ensure(lib(verify_d0a(n, &limits))?, || format!("matching character n={n}"))?;
        ensure(lib(check_d0_dimensions(n, &limits))?, || {
            format!("induced degrees n={n}")
        })?;
    }
    for n in 1..=5 {
        ensure(lib(check_d2(n, InducedFrom::Trivial, &limits))?, || {
            format!("trivial n={n}")
        })?;
        ensure(lib(check_d2(n, InducedFrom::Sign, &limits))?, || format!("sign n={n}"))?;
    }
    for n in 1..=6 {
        ensure(lib(check_eigenvalue_identity(n, &limits))?, || {
            format!("eigenvalue n={n}")
        })?;
    }
    Ok(())
}

fn corners() -> Result<(), String> {
    let limits = Limits::default();
    for n in 2..=6 {
        ensure(lib(corner_formula_check(n, &limits))?, || format!("n={n}"))?;
    }
    Ok(())
}

fn sanity() -> Result<(), String> {
    for n in 0..=8 {
        let mut total: u128 = 0;
        for lambda in enumerate_partitions(n, None) {
            total += u128::from(lib(lambda.num_standard_tableaux())?).pow(2);
        }
        ensure(total == lib(arith::factorial(n))?, || format!("sum of squares n={n}"))?;
    }
    let chi = lib(oracle_matching_character(4, &Limits::default()))?;
    let identity = CycleType::new(Partition::column(8));
    ensure(chi.value_at(&identity) == Some(105), || {
        format!("matching character at identity: {:?}", chi.value_at(&identity))
    })
}

fn run_cli(args: &[&str]) -> Result<(bool, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hookdec"))
        .args(args)
        .env_remove("HOOKDEC_CACHE_DIR")
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok((out.status.success(), text))
}

fn cli_contract() -> Result<(), String> {
    let goldens: [(&[&str], &str); 3] = [
        (
            &["table", "--n", "3", "--k", "3", "--m", "3", "--t", "0"],
            "lambda\tmu\tmult\n3\t3\t1\n2,1\t2,1\t1\n1,1,1\t1,1,1\t1\n",
        ),
        (
            &["table", "--n", "1", "--k", "2", "--m", "2", "--t", "0"],
            "lambda\tmu\tmult\n1\t1\t1\n",
        ),
        (
            &[
                "table", "--n", "3", "--k", "2", "--m", "2", "--t", "1", "--format", "json",
            ],
            "{\"context\":{\"kind\":\"rect\",\"n\":3,\"k\":2,\"m\":2,\"t\":1},\"entries\":[\
             {\"lambda\":\"3\",\"mu\":\"2,1\",\"mult\":2},\
             {\"lambda\":\"2,1\",\"mu\":\"3\",\"mult\":2},\
             {\"lambda\":\"2,1\",\"mu\":\"2,1\",\"mult\":2}]}\n",
        ),
    ];
    for (args, expected) in goldens {
        let (ok, text) = run_cli(args)?;
        ensure(ok && text == expected, || format!("{args:?} printed {text:?}"))?;
    }
    let start = Instant::now();
    let (ok, text) = run_cli(&["verify", "--suite", "all", "--max-n", "4"])?;
    ensure(ok, || format!("verify failed:\n{text}"))?;
    within(Duration::from_secs(300), start)
}

type Criterion = fn() -> Result<(), String>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("boundary recovery at t = 0 and t = n-1, n <= 7", boundary),
        (
            "rectangular multiplicities match the character oracle, n <= 6",
            rect_oracle,
        ),
        ("prefix and suffix alternating sums agree", prefix_suffix),
        ("conjugation dualities", duality),
        ("distance, height and width bounds, n <= 6", bounds),
        (
            "symmetric power of square matrices and its boundaries, n <= 4",
            sym_square,
        ),
        (
            "square hook components match the oracle and the grading, n <= 4",
            hook_square,
        ),
        ("hyperoctahedral bridge identities", bn_bridge),
        ("t = 1 corner formula and its t = n-2 mirror, 2 <= n <= 6", corners),
        ("tableau counts and the matching character", sanity),
        ("command-line tables and verify run", cli_contract),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (index, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_owned()));
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({elapsed:.2}s)", index + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {reason}", index + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
