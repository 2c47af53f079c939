//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nonuniform_expansions::analysis::{
    box_count_estimate, branching_witness, count_expansions, dimension_formula, enumerate_prefixes,
    hausdorff_dimension, ifs_disjoint, lambda_interval_closed_form, lambda_interval_recursive,
    unique_eventually_periodic,
};
use nonuniform_expansions::cli;
use nonuniform_expansions::digits::{digits, AlgorithmKind};
use nonuniform_expansions::{DigitWord, Error, EventuallyPeriodic, ExactBasePair, Interval, Regime, Scalar};

type Q = BigRational;
type Outcome = Result<String, String>;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn seq(text: &str) -> EventuallyPeriodic {
    text.parse().unwrap()
}

fn standard() -> ExactBasePair {
    ExactBasePair::new(q(3, 4), q(2, 3)).unwrap()
}

fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + stream)
}

/// `m/1000 · max(I)` with `m` uniform in `lo..=hi`.
fn sample_points(bases: &ExactBasePair, rng: &mut ChaCha8Rng, count: usize, lo: i64, hi: i64) -> Vec<Q> {
    (0..count).map(|_| q(rng.gen_range(lo..=hi), 1000) * bases.interval_max()).collect()
}

fn random_pair(rng: &mut ChaCha8Rng) -> ExactBasePair {
    loop {
        let d: i64 = rng.gen_range(5..=97);
        let b1 = rng.gen_range(d / 2 + 1..d);
        let b0 = rng.gen_range(b1..d);
        if let Ok(pair) = ExactBasePair::new(q(b0, d), q(b1, d)) {
            return pair;
        }
    }
}

fn continuum_pair(rng: &mut ChaCha8Rng) -> ExactBasePair {
    loop {
        let pair = random_pair(rng);
        if pair.require(Regime::Continuum).is_ok() {
            return pair;
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn all_words(n: usize) -> impl Iterator<Item = DigitWord> {
    (0u32..1 << n).map(move |bits| {
        let digits = (0..n).map(|i| ((bits >> (n - 1 - i)) & 1) as u8).collect();
        DigitWord::new(digits).unwrap()
    })
}

fn c1_reconstruction() -> Outcome {
    let bases = standard();
    let points = sample_points(&bases, &mut rng(1), 200, 0, 1000);
    let kinds = [AlgorithmKind::Greedy, AlgorithmKind::Lazy, AlgorithmKind::Intermediate(Q::one())];
    let start = Instant::now();
    for x in &points {
        for kind in &kinds {
            let word = digits(&bases, kind, x, 60).map_err(|e| e.to_string())?;
            ensure(bases.cylinder_interval(&word).contains(x), || {
                format!("{} not in cylinder of {kind} prefix {word}", x.render())
            })?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("600 expansions of depth 60 in {elapsed:.2?}"))
}

fn c2_greedy_example() -> Outcome {
    let bases = standard();
    let word = digits(&bases, &AlgorithmKind::Greedy, &Q::one(), 5).map_err(|e| e.to_string())?;
    ensure(word == "10100".parse().unwrap(), || format!("greedy digits {word}"))?;
    let value = bases.project_prefix_with_remainder(&"101".parse().unwrap(), &Q::zero()).map_err(|e| e.to_string())?;
    ensure(value == Q::one(), || format!("projection {}", value.render()))?;
    Ok("greedy(1) = 10100, pi(101, 0) = 1".into())
}

fn c3_enumeration_oracle() -> Outcome {
    let bases = standard();
    let points = sample_points(&bases, &mut rng(3), 50, 0, 1000);
    let start = Instant::now();
    let mut nodes = 0usize;
    for x in &points {
        for n in 0..=12 {
            let listed = enumerate_prefixes(&bases, x, n).map_err(|e| e.to_string())?;
            let brute: Vec<DigitWord> = all_words(n).filter(|w| bases.cylinder_interval(w).contains(x)).collect();
            let got: Vec<DigitWord> = listed.iter().map(|node| node.prefix.clone()).collect();
            ensure(got == brute, || format!("x = {} depth {n}: {} listed, {} brute", x.render(), got.len(), brute.len()))?;
            for node in &listed {
                let map = bases.compose(&node.prefix);
                ensure(map.apply(&node.pullback) == *x, || format!("pullback of {} is wrong", node.prefix))?;
            }
            nodes += listed.len();
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("{nodes} prefixes matched brute force in {elapsed:.2?}"))
}

fn c4_extremality() -> Outcome {
    let bases = standard();
    let points = sample_points(&bases, &mut rng(3), 50, 0, 1000);
    for x in &points {
        for n in 0..=12 {
            let listed = enumerate_prefixes(&bases, x, n).map_err(|e| e.to_string())?;
            let max = listed.iter().map(|node| &node.prefix).max().unwrap();
            let min = listed.iter().map(|node| &node.prefix).min().unwrap();
            let greedy = digits(&bases, &AlgorithmKind::Greedy, x, n).map_err(|e| e.to_string())?;
            let lazy = digits(&bases, &AlgorithmKind::Lazy, x, n).map_err(|e| e.to_string())?;
            ensure(&greedy == max, || format!("x = {} depth {n}: greedy {greedy} vs max {max}", x.render()))?;
            ensure(&lazy == min, || format!("x = {} depth {n}: lazy {lazy} vs min {min}", x.render()))?;
        }
    }
    Ok("greedy is the maximum and lazy the minimum at every depth <= 12".into())
}

fn c5_lambda_identity() -> Outcome {
    let mut rng = rng(5);
    for _ in 0..50 {
        let bases = continuum_pair(&mut rng);
        let (b0, b1) = (bases.beta0().clone(), bases.beta1().clone());
        let base = Interval::open(b1.clone(), &b0 * &b1 / (Q::one() - &b1));
        let zero = lambda_interval_closed_form(&bases, 0).map_err(|e| e.to_string())?;
        ensure(zero == base, || format!("({}, {}): base interval {zero}", b0.render(), b1.render()))?;
        for n in 0..=20 {
            let closed = lambda_interval_closed_form(&bases, n).map_err(|e| e.to_string())?;
            let recursive = lambda_interval_recursive(&bases, n).map_err(|e| e.to_string())?;
            ensure(closed == recursive, || {
                format!("({}, {}) n = {n}: {closed} vs {recursive}", b0.render(), b1.render())
            })?;
        }
    }
    Ok("50 pairs, n = 0..20, recursion equals closed form".into())
}

fn c6_continuum() -> Outcome {
    let bases = standard();
    let points = sample_points(&bases, &mut rng(6), 100, 1, 999);
    let mut least = u128::MAX;
    for x in &points {
        let tree = branching_witness(&bases, x, 4).map_err(|e| format!("x = {}: {e}", x.render()))?;
        let words = tree.expansion_prefixes();
        ensure(words.len() == 16, || format!("x = {}: {} leaves", x.render(), words.len()))?;
        for w in &words {
            ensure(bases.cylinder_interval(w).contains(x), || format!("x = {}: {w} is not a prefix", x.render()))?;
        }
        let count = count_expansions(&bases, x, 40).map_err(|e| e.to_string())?;
        ensure(count >= 16, || format!("x = {}: count {count}", x.render()))?;
        least = least.min(count);
    }
    Ok(format!("100 witnesses with 16 leaves, least depth-40 count {least}"))
}

fn c7_uniqueness() -> Outcome {
    let bases = ExactBasePair::new(q(11, 20), q(51, 100)).unwrap();
    for k in 0..=10 {
        let s = EventuallyPeriodic::new(DigitWord::repeat(0, k), "01".parse().unwrap()).unwrap();
        let cert = unique_eventually_periodic(&bases, &s);
        ensure(cert.verdict, || format!("{s} judged not unique"))?;
        let x = bases.project_eventually_periodic(&s);
        let count = count_expansions(&bases, &x, 40).map_err(|e| e.to_string())?;
        ensure(count == 1, || format!("{s}: {count} expansions at depth 40"))?;
    }
    let bases = standard();
    let s = seq("(01)");
    let cert = unique_eventually_periodic(&bases, &s);
    ensure(!cert.verdict, || "(01) judged unique at (3/4, 2/3)".into())?;
    let k = cert.witness_shift.ok_or("no witness shift")?;
    let value = bases.project_eventually_periodic(&s.shift(k));
    let overlap = Interval::closed(bases.beta1().clone(), bases.overlap_hi());
    ensure(overlap.contains(&value), || format!("shift {k} projects to {}", value.render()))?;
    Ok(format!("11 unique sequences; (01) at (3/4, 2/3) branches at shift {k}, value {}", value.render()))
}

fn c8_closed_forms() -> Outcome {
    let mut rng = rng(8);
    for _ in 0..100 {
        let bases = random_pair(&mut rng);
        let (b0, b1) = (bases.beta0().clone(), bases.beta1().clone());
        let p = &b0 * &b1;
        let one = Q::one();
        let expected = [
            ("(01)", &p / (&one - &p)),
            ("(10)", &b1 / (&one - &p)),
            ("011(01)", &b1 * (&b0 + &p - &b0 * &p) / (&one - &p)),
            ("100(10)", &b1 + &p * &p / (&one - &p)),
        ];
        for (text, want) in &expected {
            let got = bases.project_eventually_periodic(&seq(text));
            ensure(&got == want, || {
                format!("({}, {}) {text}: {} vs {}", b0.render(), b1.render(), got.render(), want.render())
            })?;
        }
    }
    Ok("100 pairs, four sequences each, exact".into())
}

fn c9_dimension() -> Outcome {
    let bases = ExactBasePair::new(q(11, 20), q(51, 100)).unwrap();
    let dim = hausdorff_dimension(&bases).map_err(|e| e.to_string())?.value();
    let reference = -(2f64.ln()) / (561f64 / 2000f64).ln();
    ensure((dim - 0.5452).abs() <= 0.0005, || format!("dimension {dim}"))?;
    ensure((dim - reference).abs() < 1e-12, || format!("dimension {dim} vs {reference}"))?;
    let boxes = box_count_estimate(&bases.approximate::<f64>(), 20).map_err(|e| e.to_string())?;
    ensure((boxes.estimate - dim).abs() < 0.02, || format!("box estimate {}", boxes.estimate))?;
    for depth in 1..=14 {
        ensure(ifs_disjoint(&bases, depth), || format!("images overlap at depth {depth}"))?;
    }
    let half = ExactBasePair::new(q(5, 7), q(7, 10)).unwrap();
    ensure(dimension_formula(&half).exact() == Some(Q::one()), || "formula at (5/7, 7/10) is not 1".into())?;
    let gate = match hausdorff_dimension(&half) {
        Err(Error::Regime(msg)) => msg,
        other => return Err(format!("(5/7, 7/10) passed the regime gate: {other:?}")),
    };
    ensure(half.require(Regime::UncountableUnique).is_err(), || "gate disagrees with require".into())?;
    Ok(format!(
        "dim = {dim:.6}, box(20) = {:.6}, disjoint to depth 14; (5/7, 7/10) formula gives 1 exactly, gate refused: {gate}",
        boxes.estimate
    ))
}

fn c10_coverage() -> Outcome {
    let mut rng = rng(10);
    for _ in 0..50 {
        let bases = random_pair(&mut rng);
        for n in 0..=14 {
            ensure(bases.coverage_check(n), || {
                format!("({}, {}) depth {n}", bases.beta0().render(), bases.beta1().render())
            })?;
        }
    }
    Ok("50 pairs, depths 0..14".into())
}

fn c11_determinism() -> Outcome {
    let base = ["nonuniform", "--beta0", "3/4", "--beta1", "2/3", "--format", "json"];
    let tail = ["enumerate", "--x", "9/10", "--depth", "14"];
    let invoke = |threads: Option<&str>| -> Result<String, String> {
        let mut args: Vec<&str> = base.to_vec();
        if let Some(t) = threads {
            args.extend(["--threads", t]);
        }
        args.extend(tail);
        cli::run(args).map_err(|e| e.to_string())
    };
    let first = invoke(None)?;
    let runs = [invoke(None)?, invoke(Some("4"))?, invoke(Some("4"))?, invoke(Some("1"))?];
    for (i, run) in runs.iter().enumerate() {
        ensure(run == &first, || format!("run {} differs", i + 1))?;
    }
    Ok(format!("5 runs, {} identical bytes each", first.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("exact reconstruction", c1_reconstruction),
        ("greedy worked example", c2_greedy_example),
        ("enumeration oracle", c3_enumeration_oracle),
        ("greedy/lazy extremality", c4_extremality),
        ("branching interval identity", c5_lambda_identity),
        ("continuum evidence", c6_continuum),
        ("uniqueness regime", c7_uniqueness),
        ("closed-form projections", c8_closed_forms),
        ("dimension", c9_dimension),
        ("surjectivity", c10_coverage),
        ("determinism", c11_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|payload| Err(format!("panic: {}", panic_text(payload))));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({elapsed:.2?}): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn panic_text(payload: Box<dyn std::any::Any + Send>) -> String {
    payload
        .downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| payload.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "unknown".into())
}
