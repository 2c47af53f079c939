use std::fmt::Write as _;

use serde::Serialize;

use super::{Algorithm, CliError, Command, Format, RunConfig, COUNT_DEPTH_CAP, LIST_DEPTH_CAP};
use crate::analysis::{
    box_count_estimate, branching_witness, count_expansions, countable_unique_family, enumerate_prefixes,
    hausdorff_dimension, ifs_disjoint, lambda_interval_closed_form, lambda_interval_recursive, survey,
    unique_eventually_periodic,
};
use crate::digits::{expand, AlgorithmKind};
use crate::error::Error;
use crate::{parse_rational, ExactBasePair, ExactRational, F64BasePair, Scalar};

/// Deepest level at which IFS separation is checked in exact arithmetic.
const EXACT_SEPARATION_DEPTH: usize = 14;

type Output = Result<String, CliError>;

pub fn dispatch(config: &RunConfig) -> Output {
    let bases = config.bases()?;
    let format = config.format;
    match &config.command {
        Command::Expand { x, algorithm, alpha, depth } => {
            cmd_expand(&bases, format, x, *algorithm, alpha.as_deref(), *depth)
        }
        Command::Enumerate { x, depth, count_only, max_depth } => {
            cmd_enumerate(&bases, format, x, *depth, *count_only, *max_depth)
        }
        Command::Unique { sequence, zeros } => cmd_unique(&bases, format, sequence.as_deref(), *zeros),
        Command::Regime => cmd_regime(&bases, format),
        Command::Lambda { n, x, splits } => cmd_lambda(&bases, format, *n, x.as_deref(), *splits),
        Command::Dimension { depth } => cmd_dimension(&bases, format, *depth),
        Command::Survey { samples, depth, threshold } => {
            cmd_survey(&bases, format, *samples, *depth, config.seed, *threshold)
        }
    }
}

fn json<T: Serialize>(value: &T) -> Output {
    let mut text = serde_json::to_string_pretty(value).expect("output structs serialize");
    text.push('\n');
    Ok(text)
}

fn csv_table<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = [String; N]>) -> Output {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Usage(format!("csv output failed: {e}"));
    writer.write_record(header).map_err(io)?;
    for row in rows {
        writer.write_record(&row).map_err(io)?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

fn r(value: &ExactRational) -> String {
    value.render()
}

#[derive(Serialize)]
struct ExpandOutput {
    beta0: String,
    beta1: String,
    algorithm: String,
    alpha: Option<String>,
    x: String,
    depth: usize,
    digits: String,
    orbit: Vec<String>,
    cylinder: String,
    in_cylinder: bool,
    residual: String,
}

fn cmd_expand(
    bases: &ExactBasePair,
    format: Format,
    x: &str,
    algorithm: Algorithm,
    alpha: Option<&str>,
    depth: usize,
) -> Output {
    let x = parse_rational(x)?;
    let kind = match (algorithm, alpha) {
        (Algorithm::Greedy, None) => AlgorithmKind::Greedy,
        (Algorithm::Lazy, None) => AlgorithmKind::Lazy,
        (Algorithm::Intermediate, Some(a)) => AlgorithmKind::Intermediate(parse_rational(a)?),
        (Algorithm::Intermediate, None) => {
            return Err(CliError::Usage("--alpha is required for the intermediate algorithm".into()))
        }
        (_, Some(_)) => return Err(CliError::Usage("--alpha only applies to the intermediate algorithm".into())),
    };
    let expansion = expand(bases, &kind, &x, depth)?;
    let cylinder = bases.cylinder_interval(&expansion.digits);
    let rebuilt = bases.project_prefix_with_remainder(&expansion.digits, expansion.remainder())?;
    let out = ExpandOutput {
        beta0: r(bases.beta0()),
        beta1: r(bases.beta1()),
        algorithm: format!("{algorithm:?}").to_lowercase(),
        alpha: match &kind {
            AlgorithmKind::Intermediate(a) => Some(r(a)),
            _ => None,
        },
        x: r(&x),
        depth,
        digits: expansion.digits.to_string(),
        orbit: expansion.orbit.iter().map(r).collect(),
        cylinder: cylinder.to_string(),
        in_cylinder: cylinder.contains(&x),
        residual: r(&(x.clone() - rebuilt)),
    };
    match format {
        Format::Json => json(&out),
        Format::Csv => {
            let digits = expansion.digits.digits();
            csv_table(
                ["step", "value", "digit"],
                expansion.orbit.iter().enumerate().map(|(i, v)| {
                    [i.to_string(), r(v), digits.get(i).map_or(String::new(), ToString::to_string)]
                }),
            )
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "algorithm: {kind}").unwrap();
            writeln!(s, "x: {}", out.x).unwrap();
            writeln!(s, "digits: {}", out.digits).unwrap();
            writeln!(s, "orbit: {}", out.orbit.join(" ")).unwrap();
            writeln!(s, "cylinder: {}", out.cylinder).unwrap();
            writeln!(s, "x in cylinder: {}", out.in_cylinder).unwrap();
            writeln!(s, "reconstruction residual: {}", out.residual).unwrap();
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct PrefixEntry {
    digits: Vec<u8>,
    pullback: String,
}

#[derive(Serialize)]
struct EnumerateOutput {
    count: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    prefixes: Option<Vec<PrefixEntry>>,
}

fn cmd_enumerate(
    bases: &ExactBasePair,
    format: Format,
    x: &str,
    depth: usize,
    count_only: bool,
    max_depth: Option<usize>,
) -> Output {
    let x = parse_rational(x)?;
    let cap = max_depth.unwrap_or(if count_only { COUNT_DEPTH_CAP } else { LIST_DEPTH_CAP });
    if depth > cap {
        return Err(Error::DepthCap { depth, cap }.into());
    }
    let out = if count_only {
        EnumerateOutput { count: count_expansions(bases, &x, depth)?, prefixes: None }
    } else {
        let nodes = enumerate_prefixes(bases, &x, depth)?;
        EnumerateOutput {
            count: nodes.len() as u128,
            prefixes: Some(
                nodes
                    .iter()
                    .map(|n| PrefixEntry { digits: n.prefix.digits().to_vec(), pullback: r(&n.pullback) })
                    .collect(),
            ),
        }
    };
    let prefixes = out.prefixes.as_deref().unwrap_or(&[]);
    let word = |p: &PrefixEntry| p.digits.iter().map(|d| char::from(b'0' + d)).collect::<String>();
    match format {
        Format::Json => json(&out),
        Format::Csv => {
            if count_only {
                csv_table(["count"], [[out.count.to_string()]])
            } else {
                csv_table(["digits", "pullback"], prefixes.iter().map(|p| [word(p), p.pullback.clone()]))
            }
        }
        Format::Text => {
            let mut s = format!("count: {}\n", out.count);
            for p in prefixes {
                writeln!(s, "{} pullback {}", word(p), p.pullback).unwrap();
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct ShiftEntry {
    shift: usize,
    sequence: String,
    value: String,
    in_overlap: bool,
}

#[derive(Serialize)]
struct UniqueOutput {
    sequence: String,
    verdict: bool,
    overlap: String,
    witness_shift: Option<usize>,
    shifted_values: Vec<ShiftEntry>,
}

fn cmd_unique(bases: &ExactBasePair, format: Format, sequence: Option<&str>, zeros: Option<usize>) -> Output {
    let sequence = match (sequence, zeros) {
        (Some(text), _) => text.parse()?,
        (None, Some(k)) => countable_unique_family(bases, k)?,
        (None, None) => return Err(CliError::Usage("give --sequence or --zeros".into())),
    };
    let cert = unique_eventually_periodic(bases, &sequence);
    let overlap = bases.overlap();
    let out = UniqueOutput {
        sequence: sequence.to_string(),
        verdict: cert.verdict,
        overlap: overlap.to_string(),
        witness_shift: cert.witness_shift,
        shifted_values: cert
            .shifted_values
            .iter()
            .enumerate()
            .map(|(k, v)| ShiftEntry {
                shift: k,
                sequence: sequence.shift(k).to_string(),
                value: r(v),
                in_overlap: overlap.contains(v),
            })
            .collect(),
    };
    match format {
        Format::Json => json(&out),
        Format::Csv => csv_table(
            ["shift", "sequence", "value", "in_overlap"],
            out.shifted_values
                .iter()
                .map(|e| [e.shift.to_string(), e.sequence.clone(), e.value.clone(), e.in_overlap.to_string()]),
        ),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "sequence: {}", out.sequence).unwrap();
            writeln!(s, "verdict: {}", if out.verdict { "unique" } else { "not unique" }).unwrap();
            writeln!(s, "overlap: {}", out.overlap).unwrap();
            for e in &out.shifted_values {
                let mark = if e.in_overlap { "  <- in overlap" } else { "" };
                writeln!(s, "shift {} {} -> {}{}", e.shift, e.sequence, e.value, mark).unwrap();
            }
            match out.witness_shift {
                Some(k) => writeln!(s, "witness shift: {k}").unwrap(),
                None => writeln!(s, "witness shift: none").unwrap(),
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct RegimeOutput {
    beta0: String,
    beta1: String,
    continuum_all: bool,
    countable_unique: bool,
    uncountable_unique: bool,
    continuum_quantity: String,
    countable_quantity: String,
    uncountable_quantity: String,
    extremal_quantity: String,
}

fn cmd_regime(bases: &ExactBasePair, format: Format) -> Output {
    let report = bases.regime_report();
    let out = RegimeOutput {
        beta0: r(bases.beta0()),
        beta1: r(bases.beta1()),
        continuum_all: report.continuum_all,
        countable_unique: report.countable_unique,
        uncountable_unique: report.uncountable_unique,
        continuum_quantity: r(&bases.continuum_quantity()),
        countable_quantity: r(&bases.countable_quantity()),
        uncountable_quantity: r(&bases.uncountable_quantity()),
        extremal_quantity: r(&bases.extremal_quantity()),
    };
    let rows = [
        ("continuum_all", out.continuum_all, "beta1^2 + beta0 > 1", &out.continuum_quantity),
        ("countable_unique", out.countable_unique, "beta0*(1 + beta1) < 1", &out.countable_quantity),
        (
            "uncountable_unique",
            out.uncountable_unique,
            "beta0*(1 + 2*beta1 - beta0*beta1) < 1",
            &out.uncountable_quantity,
        ),
    ];
    match format {
        Format::Json => json(&out),
        Format::Csv => csv_table(
            ["flag", "value", "condition", "quantity"],
            rows.iter().map(|(f, v, c, q)| [f.to_string(), v.to_string(), c.to_string(), q.to_string()]),
        ),
        Format::Text => {
            let mut s = String::new();
            for (flag, value, condition, quantity) in &rows {
                writeln!(s, "{flag}={value} ({condition}; lhs = {quantity})").unwrap();
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct LambdaLevel {
    n: usize,
    closed_form: String,
    recursive: String,
    equal: bool,
}

#[derive(Serialize)]
struct BranchingOutput {
    x: String,
    depth: usize,
    splits: usize,
    prefixes: Vec<String>,
}

#[derive(Serialize)]
struct LambdaOutput {
    n: usize,
    equal: bool,
    levels: Vec<LambdaLevel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    branching: Option<BranchingOutput>,
}

fn cmd_lambda(bases: &ExactBasePair, format: Format, n: usize, x: Option<&str>, splits: usize) -> Output {
    let levels = (0..=n)
        .map(|k| {
            let closed = lambda_interval_closed_form(bases, k)?;
            let recursive = lambda_interval_recursive(bases, k)?;
            Ok(LambdaLevel {
                n: k,
                equal: closed == recursive,
                closed_form: closed.to_string(),
                recursive: recursive.to_string(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let branching = match x {
        Some(text) => {
            let x = parse_rational(text)?;
            let tree = branching_witness(bases, &x, splits)?;
            Some(BranchingOutput {
                x: r(&x),
                depth: tree.split.as_ref().map_or(0, |s| s.depth),
                splits,
                prefixes: tree.expansion_prefixes().iter().map(ToString::to_string).collect(),
            })
        }
        None => None,
    };
    let out = LambdaOutput { n, equal: levels.iter().all(|l| l.equal), levels, branching };
    match format {
        Format::Json => json(&out),
        Format::Csv => csv_table(
            ["n", "closed_form", "recursive", "equal"],
            out.levels
                .iter()
                .map(|l| [l.n.to_string(), l.closed_form.clone(), l.recursive.clone(), l.equal.to_string()]),
        ),
        Format::Text => {
            let mut s = String::new();
            for l in &out.levels {
                writeln!(s, "lambda_{} = {} (recursion {})", l.n, l.closed_form, l.recursive).unwrap();
            }
            writeln!(s, "recursion == closed form: {}", out.equal).unwrap();
            if let Some(b) = &out.branching {
                writeln!(s, "branching depth of {}: {}", b.x, b.depth).unwrap();
                writeln!(s, "{} diverging expansion prefixes:", b.prefixes.len()).unwrap();
                for p in &b.prefixes {
                    writeln!(s, "  {p}").unwrap();
                }
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct DimensionExact {
    branches: u32,
    ratio: String,
    dimension: Option<String>,
    separated_to_depth: usize,
}

#[derive(Serialize)]
struct DimensionApprox {
    dimension: f64,
    box_count_estimate: f64,
    box_width: f64,
}

#[derive(Serialize)]
struct DimensionOutput {
    depth: usize,
    components: usize,
    exact: DimensionExact,
    approx: DimensionApprox,
}

fn cmd_dimension(bases: &ExactBasePair, format: Format, depth: usize) -> Output {
    let formula = hausdorff_dimension(bases)?;
    let separated_to_depth = depth.min(EXACT_SEPARATION_DEPTH);
    if !ifs_disjoint(bases, separated_to_depth) {
        return Err(Error::Regime(format!("IFS images overlap at depth {separated_to_depth}")).into());
    }
    let fast: F64BasePair = bases.approximate();
    let boxes = box_count_estimate(&fast, depth)?;
    let out = DimensionOutput {
        depth,
        components: boxes.components,
        exact: DimensionExact {
            branches: formula.branches,
            ratio: r(&formula.ratio),
            dimension: formula.exact().as_ref().map(r),
            separated_to_depth,
        },
        approx: DimensionApprox {
            dimension: formula.value(),
            box_count_estimate: boxes.estimate,
            box_width: boxes.box_width,
        },
    };
    match format {
        Format::Json => json(&out),
        Format::Csv => csv_table(
            ["depth", "components", "ratio", "exact_dimension", "approx_dimension", "approx_box_count_estimate"],
            [[
                out.depth.to_string(),
                out.components.to_string(),
                out.exact.ratio.clone(),
                out.exact.dimension.clone().unwrap_or_default(),
                out.approx.dimension.to_string(),
                out.approx.box_count_estimate.to_string(),
            ]],
        ),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "dimension = log 2 / log({})", r(&formula.inverse_ratio())).unwrap();
            if let Some(d) = &out.exact.dimension {
                writeln!(s, "exact value: {d}").unwrap();
            }
            writeln!(s, "formula ~ {:.6}", out.approx.dimension).unwrap();
            writeln!(s, "box-count estimate at depth {} ~ {:.6} ({} components)", depth, boxes.estimate, boxes.components)
                .unwrap();
            writeln!(s, "images disjoint (exact) through depth {separated_to_depth}: true").unwrap();
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct SurveyPoint {
    x: String,
    count: u128,
}

#[derive(Serialize)]
struct SurveyApprox {
    fraction_above: f64,
}

#[derive(Serialize)]
struct SurveyOutput {
    seed: u64,
    depth: usize,
    samples: usize,
    threshold: u128,
    min: u128,
    median: u128,
    max: u128,
    above_threshold: usize,
    approx: SurveyApprox,
    points: Vec<SurveyPoint>,
}

fn cmd_survey(bases: &ExactBasePair, format: Format, samples: usize, depth: usize, seed: u64, threshold: u128) -> Output {
    if depth > COUNT_DEPTH_CAP {
        return Err(Error::DepthCap { depth, cap: COUNT_DEPTH_CAP }.into());
    }
    let report = survey(bases, samples, depth, seed, threshold)?;
    let out = SurveyOutput {
        seed,
        depth,
        samples,
        threshold,
        min: report.min,
        median: report.median,
        max: report.max,
        above_threshold: report.above_threshold,
        approx: SurveyApprox { fraction_above: report.fraction_above() },
        points: report.samples.iter().map(|s| SurveyPoint { x: r(&s.x), count: s.count }).collect(),
    };
    match format {
        Format::Json => json(&out),
        Format::Csv => csv_table(["x", "count"], out.points.iter().map(|p| [p.x.clone(), p.count.to_string()])),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "samples: {samples} (seed {seed}, depth {depth})").unwrap();
            writeln!(s, "min: {}", out.min).unwrap();
            writeln!(s, "median: {}", out.median).unwrap();
            writeln!(s, "max: {}", out.max).unwrap();
            writeln!(s, "count > {threshold}: {} of {samples}", out.above_threshold).unwrap();
            Ok(s)
        }
    }
}
