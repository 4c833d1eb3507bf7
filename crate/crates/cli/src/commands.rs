//! Subcommand implementations producing [`Report`]s.

use std::f64::consts::PI;

use anyhow::{Context, Result};
use diagrams::{
    diagrams_of_class, diagrams_of_stratum, group_standard, standard_permutations,
    total_contribution, weighted_count, SeparatrixDiagram, MAX_ENUMERATION_SYMBOLS,
};
use num_rational::BigRational;
use perm_core::{Kind, StratumSignature};
use rauzy::{rauzy_class, representative, DEFAULT_CLASS_CAP};
use sampler::{pk_exhaustive, pk_random, uncorrelatedness_report, BandStatistics};
use serde_json::{json, Value};
use square_tiled::{volume_fit, Census, Strategy};
use volumes::{
    c1_bounds, c1_minimal, c1_principal, c1_total_abelian, estimate_volume, SymbolicValue,
};

use crate::config::{Cli, Command, RunConfig, StrategyArg};
use crate::exit::{classify, CliError};
use crate::reference::{lookup, rows_of_dimension, ReferenceRow};
use crate::report::Report;

/// Largest quadratic symbol count enumerated directly; larger strata use
/// the Rauzy class of a representative.
pub const MAX_QUADRATIC_ENUMERATION_SYMBOLS: usize = 8;

pub fn execute(cli: &Cli) -> Result<Report> {
    let config = RunConfig::from_cli(cli);
    let o = &cli.options;
    match &cli.command {
        Command::Diagrams { stratum } => cmd_diagrams(config, &parse_stratum(stratum)?),
        Command::Table { dim } => cmd_table(config, *dim as usize),
        Command::C1 { stratum } => cmd_c1(config, &parse_stratum(stratum)?),
        Command::Frobenius { stratum, g } => cmd_frobenius(config, stratum, *g),
        Command::Genfun { abelian, quadratic } => {
            cmd_genfun(config, *abelian, quadratic.as_deref())
        }
        Command::Enumerate {
            stratum,
            strategy,
            fit,
        } => cmd_enumerate(config, &parse_stratum(stratum)?, *strategy, *fit),
        Command::Bands {
            stratum,
            exhaustive,
        } => {
            let s = parse_stratum(stratum)?;
            let stats = if *exhaustive {
                pk_exhaustive(&s, o.grid)?
            } else {
                pk_random(&s, o.samples, o.walk, o.grid, o.seed)?
            };
            Ok(cmd_bands(config, &stats))
        }
        Command::Correlation { stratum } => cmd_correlation(config, &parse_stratum(stratum)?),
        Command::VolumeEstimate { stratum } => cmd_estimate(config, &parse_stratum(stratum)?),
    }
}

pub fn parse_stratum(text: &str) -> Result<StratumSignature> {
    text.parse::<StratumSignature>()
        .with_context(|| format!("reading stratum `{text}`"))
}

/// Text form of a rational: `p` or `p/q`.
fn rational(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

fn symbolic(v: &SymbolicValue) -> Value {
    Value::String(v.to_string())
}

fn contribution_record(coeff: &BigRational, zeta: usize) -> Value {
    json!({ "coeff": format!("{}/{}", coeff.numer(), coeff.denom()), "zeta": zeta })
}

/// Power of `π` used to display volumes of a stratum.
fn pi_exponent(s: &StratumSignature, reference: Option<&ReferenceRow>) -> i32 {
    reference
        .and_then(|r| r.volume.parse::<SymbolicValue>().ok())
        .and_then(|v| v.terms().next().map(|(f, _)| f.pi_power()))
        .unwrap_or(2 * (s.dim() as i32 / 2))
}

/// One-cylinder diagrams of a stratum and where they came from.
pub fn stratum_diagrams(s: &StratumSignature) -> Result<(Vec<SeparatrixDiagram>, &'static str)> {
    let symbols = match s.kind() {
        Kind::Abelian => s.dim(),
        Kind::Quadratic => s.dim() + 1,
    };
    let limit = match s.kind() {
        Kind::Abelian => MAX_ENUMERATION_SYMBOLS,
        Kind::Quadratic => MAX_QUADRATIC_ENUMERATION_SYMBOLS,
    };
    if symbols <= limit {
        return Ok((diagrams_of_stratum(s)?, "enumeration"));
    }
    let seed = representative(s)?;
    let class = rauzy_class(&seed, true, true, DEFAULT_CLASS_CAP)?;
    Ok((diagrams_of_class(&class)?, "rauzy-class"))
}

/// Exact total one-cylinder contribution.
pub fn total_c1(s: &StratumSignature) -> Result<(SymbolicValue, &'static str)> {
    if s.is_abelian() {
        return Ok((c1_total_abelian(s)?, "character-sum"));
    }
    let (ds, source) = stratum_diagrams(s)?;
    if ds.is_empty() {
        return Err(
            CliError::Unsupported(format!("no one-cylinder diagrams found for {s}")).into(),
        );
    }
    Ok((total_contribution(&ds)?, source))
}

fn cmd_diagrams(config: RunConfig, s: &StratumSignature) -> Result<Report> {
    let (ds, source) = stratum_diagrams(s)?;
    if ds.is_empty() {
        return Err(
            CliError::Unsupported(format!("no one-cylinder diagrams found for {s}")).into(),
        );
    }
    let d = s.dim();
    let mut report = Report::new(
        config,
        &[
            "canonical_rep",
            "orbit_size",
            "symmetry_order",
            "l",
            "m",
            "n",
            "contribution",
        ],
    );
    for diagram in &ds {
        let coeff = diagram
            .contribution()?
            .as_zeta_multiple(d as u32)
            .expect("single zeta term");
        let lmn = diagram.lmn();
        report.push_row(vec![
            json!(diagram.canonical_rep().to_string()),
            json!(diagram.orbit_size()),
            json!(diagram.symmetry_order()),
            json!(lmn.map(|x| x.l)),
            json!(lmn.map(|x| x.m)),
            json!(lmn.map(|x| x.n)),
            contribution_record(&coeff, d),
        ]);
    }
    let total = total_contribution(&ds)?;
    let total_coeff = total.as_zeta_multiple(d as u32).expect("single zeta term");
    report.push_footer("stratum", json!(s.to_string()));
    report.push_footer("diagrams", json!(ds.len()));
    report.push_footer("weighted_count", rational(&weighted_count(&ds, None)));
    report.push_footer("total", contribution_record(&total_coeff, d));
    report.push_footer(
        "total_numeric",
        json!(total.numeric(report.config.precision).value),
    );
    report.push_footer("source", json!(source));
    Ok(report)
}

fn frequencies(stats: &BandStatistics, upto: usize) -> String {
    let top = stats.histogram.keys().copied().max().unwrap_or(1).max(upto);
    (1..=top)
        .map(|k| format!("{:.4}", stats.proportion(k)))
        .collect::<Vec<_>>()
        .join(":")
}

fn cmd_table(config: RunConfig, dim: usize) -> Result<Report> {
    let (samples, walk, grid, seed) = (config.samples, config.walk, config.grid, config.seed);
    let mut standard = standard_permutations(Kind::Quadratic, dim + 1)?;
    let mut report = Report::new(
        config,
        &[
            "key",
            "stratum",
            "r",
            "reference_r",
            "frequencies",
            "p1_stderr",
            "volume_estimate",
            "reference_volume",
            "relative_deviation",
            "note",
        ],
    );
    let mut failures = 0usize;
    for reference in rows_of_dimension(dim) {
        let row = table_row(reference, &mut standard, samples, walk, grid, seed);
        let note = reference
            .components
            .map(|c| format!("two components, one sampled; {c}"))
            .unwrap_or_default();
        match row {
            Ok(mut cells) => {
                cells.push(json!(note));
                report.push_row(cells);
            }
            Err(e) => {
                failures += 1;
                report.push_row(vec![
                    json!(reference.key),
                    json!(reference.stratum),
                    Value::Null,
                    json!(reference.r),
                    Value::Null,
                    Value::Null,
                    Value::Null,
                    json!(reference.volume),
                    Value::Null,
                    json!(format!("error (exit class {}): {e:#}", classify(&e).code())),
                ]);
            }
        }
    }
    report.push_footer("dimension", json!(dim));
    report.push_footer("rows", json!(report.rows.len()));
    report.push_footer("failed_rows", json!(failures));
    Ok(report)
}

fn table_row(
    reference: &ReferenceRow,
    standard: &mut std::collections::BTreeMap<StratumSignature, Vec<rauzy::GeneralizedPermutation>>,
    samples: u64,
    walk: u64,
    grid: u64,
    seed: u64,
) -> Result<Vec<Value>> {
    let s = parse_stratum(reference.stratum)?;
    let perms = standard.remove(&s).unwrap_or_default();
    let ds = group_standard(&perms)?;
    let c1 = total_contribution(&ds)?;
    let r = c1
        .as_zeta_multiple(s.dim() as u32)
        .ok_or_else(|| CliError::Unsupported(format!("no one-cylinder diagrams for {s}")))?;
    let stats = pk_random(&s, samples, walk, grid, seed)?;
    let (p1, se) = (stats.proportion(1), stats.standard_error(1));
    let k = pi_exponent(&s, Some(reference));
    let estimate = estimate_volume(&c1, p1, se)?;
    let reference_value = reference.volume.parse::<SymbolicValue>()?.to_f64();
    Ok(vec![
        json!(reference.key),
        json!(reference.stratum),
        rational(&r),
        json!(reference.r),
        json!(frequencies(&stats, 3)),
        json!(format!("{se:.4}")),
        json!(format!("{:.4} * pi^{k}", estimate.value / PI.powi(k))),
        json!(reference.volume),
        json!(format!("{:+.4}", estimate.value / reference_value - 1.0)),
    ])
}

/// `H(2g−2)` or `H(1^{2g−2})` with genus at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Minimal(usize),
    Principal(usize),
}

fn family(s: &StratumSignature) -> Option<Family> {
    let g = s.genus();
    if !s.is_abelian() || g < 2 {
        return None;
    }
    let orders = s.orders();
    if orders == [2 * g as i32 - 2] {
        Some(Family::Minimal(g))
    } else if orders.len() == 2 * g - 2 && orders.iter().all(|&o| o == 1) {
        Some(Family::Principal(g))
    } else {
        None
    }
}

fn closed_form_c1(f: Family) -> Result<SymbolicValue> {
    Ok(match f {
        Family::Minimal(g) => c1_minimal(g)?,
        Family::Principal(g) => c1_principal(g)?,
    })
}

fn cmd_c1(config: RunConfig, s: &StratumSignature) -> Result<Report> {
    let precision = config.precision;
    let mut report = Report::new(config, &["quantity", "exact", "numeric"]);
    let (c1, source) = total_c1(s)?;
    let c1_numeric = c1.numeric(precision).value;
    report.push_row(vec![json!("c1"), symbolic(&c1), json!(c1_numeric)]);
    report.push_footer("stratum", json!(s.to_string()));
    report.push_footer("dimension", json!(s.dim()));
    report.push_footer("genus", json!(s.genus()));
    report.push_footer("source", json!(source));
    if s.is_abelian() {
        if let Some(f) = family(s) {
            let closed = closed_form_c1(f)?;
            report.push_row(vec![
                json!("closed_form"),
                symbolic(&closed),
                json!(closed.numeric(precision).value),
            ]);
            report.push_footer("closed_form_agrees", json!(closed == c1));
        }
        let (lower, upper) = c1_bounds(s)?;
        let (lo, hi) = (
            lower.numeric(precision).value,
            upper.numeric(precision).value,
        );
        report.push_row(vec![json!("lower_bound"), symbolic(&lower), json!(lo)]);
        report.push_row(vec![json!("upper_bound"), symbolic(&upper), json!(hi)]);
        report.push_footer(
            "strictly_between_bounds",
            json!(lo < c1_numeric && c1_numeric < hi),
        );
    }
    Ok(report)
}

fn resolve_template(text: &str, g: Option<usize>) -> Result<StratumSignature> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let needs_g = || -> Result<usize> {
        g.ok_or_else(|| {
            CliError::Parse {
                input: text.to_string(),
                reason: "the template needs --g".into(),
            }
            .into()
        })
    };
    let s = match compact.as_str() {
        "H(2g-2)" => parse_stratum(&format!("H({})", 2 * needs_g()?.max(1) - 2))?,
        "H(1^(2g-2))" | "H(1^{2g-2})" | "H(1^2g-2)" => {
            let g = needs_g()?;
            if g < 2 {
                return Err(
                    CliError::Unsupported(format!("principal stratum of genus {g}")).into(),
                );
            }
            parse_stratum(&format!("H(1^{})", 2 * g - 2))?
        }
        _ => {
            let s = parse_stratum(text)?;
            if let Some(g) = g {
                if s.genus() != g {
                    return Err(CliError::Parse {
                        input: text.to_string(),
                        reason: format!("stratum has genus {}, not {g}", s.genus()),
                    }
                    .into());
                }
            }
            s
        }
    };
    Ok(s)
}

fn cmd_frobenius(config: RunConfig, text: &str, g: Option<usize>) -> Result<Report> {
    let s = resolve_template(text, g)?;
    if !s.is_abelian() {
        return Err(CliError::Unsupported(format!(
            "character counts need an Abelian stratum, got {s}"
        ))
        .into());
    }
    let precision = config.precision;
    let mut report = Report::new(config, &["method", "weighted_count", "c1", "c1_numeric"]);
    let weighted = frobenius::weighted_one_cyl_count(&s)?;
    let c1 = c1_total_abelian(&s)?;
    report.push_row(vec![
        json!("character-sum"),
        rational(&weighted),
        symbolic(&c1),
        json!(c1.numeric(precision).value),
    ]);
    let n = s.abelian_n();
    report.push_footer("stratum", json!(s.to_string()));
    report.push_footer("n", json!(n));
    report.push_footer("cycle_type", json!(s.abelian_cycle_type().to_string()));
    report.push_footer(
        "triple_count",
        json!(frobenius::triple_count(n, &s.abelian_cycle_type())?.to_string()),
    );
    if let Some(f) = family(&s) {
        let closed_count = match f {
            Family::Minimal(g) => frobenius::minimal_count(g)?,
            Family::Principal(g) => frobenius::principal_count(g)?,
        };
        let closed = closed_form_c1(f)?;
        report.push_row(vec![
            json!("closed-form"),
            rational(&closed_count),
            symbolic(&closed),
            json!(closed.numeric(precision).value),
        ]);
        report.push_footer(
            "family",
            json!(match f {
                Family::Minimal(_) => "minimal",
                Family::Principal(_) => "principal",
            }),
        );
        report.push_footer("agree", json!(closed_count == weighted && closed == c1));
    }
    Ok(report)
}

fn cmd_genfun(
    config: RunConfig,
    abelian: Option<usize>,
    quadratic: Option<&[usize]>,
) -> Result<Report> {
    let (name, poly, divisor) = match (abelian, quadratic) {
        (Some(n), _) => (format!("F_{n}"), genfun::abelian_f(n)?, Some(n)),
        (None, Some(&[l, m, n])) => (
            format!("F_{{{l},{m},{n}}}"),
            genfun::quadratic_f(l, m, n)?,
            None,
        ),
        _ => {
            return Err(CliError::Parse {
                input: "genfun".into(),
                reason: "give --abelian N or --quadratic L M N".into(),
            }
            .into())
        }
    };
    let mut report = Report::new(
        config,
        &["monomial", "coefficient", "stratum", "weighted_count"],
    );
    for (monomial, coefficient) in poly.terms().collect::<Vec<_>>().into_iter().rev() {
        let line = poly_line(&poly, monomial);
        let (stratum, weighted) = match divisor {
            Some(n) => {
                let orders: Vec<i32> = monomial
                    .iter()
                    .enumerate()
                    .flat_map(|(k, &e)| std::iter::repeat_n(k as i32, e as usize))
                    .collect();
                let s = StratumSignature::abelian(&orders)
                    .map(|s| s.to_string())
                    .unwrap_or_default();
                (
                    json!(s),
                    rational(&(coefficient / BigRational::from_integer(n.into()))),
                )
            }
            None => (Value::Null, Value::Null),
        };
        report.push_row(vec![json!(line), rational(coefficient), stratum, weighted]);
    }
    report.push_footer("polynomial", json!(name));
    report.push_footer("terms", json!(poly.len()));
    report.push_footer("value", json!(poly.to_string()));
    Ok(report)
}

/// Text of a single monomial in the variable letter of `poly`.
fn poly_line(poly: &genfun::PartitionPolynomial, monomial: &[u32]) -> String {
    let mut single = genfun::PartitionPolynomial::zero(poly.var());
    single.add_term(monomial.to_vec(), BigRational::from_integer(1.into()));
    let text = single.to_lines().pop().unwrap_or_default();
    text.split_once(" * ")
        .map(|(_, m)| m.to_string())
        .unwrap_or(text)
}

fn strategy_for(s: &StratumSignature, arg: StrategyArg) -> Strategy {
    match arg {
        StrategyArg::Auto if s.is_abelian() && s.orders() == [2] => Strategy::GenusTwoConstruction,
        StrategyArg::Auto | StrategyArg::Canonical => Strategy::Canonical,
        StrategyArg::Centralizer => Strategy::Centralizer,
        StrategyArg::GenusTwoFormula => Strategy::GenusTwoFormula,
        StrategyArg::GenusTwoConstruction => Strategy::GenusTwoConstruction,
    }
}

fn cmd_enumerate(
    config: RunConfig,
    s: &StratumSignature,
    arg: StrategyArg,
    fit: bool,
) -> Result<Report> {
    let strategy = strategy_for(s, arg);
    let census = Census::enumerate(s, config.max_squares, strategy)?;
    let mut report = Report::new(config, &["squares", "cylinders", "count"]);
    for (n, c, count) in census.entries() {
        report.push_row(vec![json!(n), json!(c), json!(count)]);
    }
    let n_max = census.n_max();
    report.push_footer("stratum", json!(s.to_string()));
    report.push_footer("strategy", json!(format!("{strategy:?}")));
    report.push_footer("surfaces", json!(census.cumulative(n_max, None)));
    report.push_footer(
        "one_cylinder_surfaces",
        json!(census.cumulative(n_max, Some(1))),
    );
    if fit {
        let d = s.dim() as u32;
        let k = pi_exponent(s, None);
        let all = volume_fit(&census, d, None)?;
        let one = volume_fit(&census, d, Some(1))?;
        report.push_footer("fit_volume", json!(all.coefficient));
        report.push_footer(
            "fit_volume_over_pi_power",
            json!(format!("{:.6} * pi^{k}", all.coefficient / PI.powi(k))),
        );
        report.push_footer("fit_relative_residual", json!(all.relative_residual));
        report.push_footer("fit_one_cylinder", json!(one.coefficient));
        report.push_footer("fit_points", json!(all.points));
    }
    Ok(report)
}

fn cmd_bands(config: RunConfig, stats: &BandStatistics) -> Report {
    let mut report = Report::new(config, &["bands", "count", "proportion", "stderr"]);
    for (&k, &c) in &stats.histogram {
        report.push_row(vec![
            json!(k),
            json!(c),
            json!(stats.proportion(k)),
            json!(stats.standard_error(k)),
        ]);
    }
    report.push_footer("stratum", json!(stats.stratum));
    report.push_footer("method", json!(stats.method));
    report.push_footer("representative", json!(stats.representative));
    report.push_footer("total", json!(stats.total));
    report.push_footer("rejected", json!(stats.rejected));
    report
}

fn cmd_correlation(config: RunConfig, s: &StratumSignature) -> Result<Report> {
    let r = uncorrelatedness_report(s, config.max_squares)?;
    let mut report = Report::new(
        config,
        &["horizontal", "vertical", "joint", "product", "deviation"],
    );
    for (i, &h) in r.cylinders.iter().enumerate() {
        for (j, &v) in r.cylinders.iter().enumerate() {
            report.push_row(vec![
                json!(h),
                json!(v),
                json!(r.joint[i][j]),
                json!(r.horizontal[i] * r.vertical[j]),
                json!(r.deviation[i][j]),
            ]);
        }
    }
    report.push_footer("stratum", json!(r.stratum));
    report.push_footer("surfaces", json!(r.surfaces));
    report.push_footer("max_deviation", json!(r.max_deviation));
    Ok(report)
}

fn cmd_estimate(config: RunConfig, s: &StratumSignature) -> Result<Report> {
    let (c1, source) = total_c1(s)?;
    let stats = pk_random(s, config.samples, config.walk, config.grid, config.seed)?;
    let (p1, se) = (stats.proportion(1), stats.standard_error(1));
    let estimate = estimate_volume(&c1, p1, se)?;
    let reference = lookup(&s.to_string());
    let k = pi_exponent(s, reference);
    let mut report = Report::new(
        config,
        &[
            "stratum",
            "c1",
            "p1_hat",
            "p1_stderr",
            "volume_estimate",
            "volume_stderr",
            "pi_power",
            "volume_over_pi_power",
            "reference_volume",
        ],
    );
    report.push_row(vec![
        json!(s.to_string()),
        symbolic(&c1),
        json!(p1),
        json!(se),
        json!(estimate.value),
        json!(estimate.error),
        json!(k),
        json!(estimate.value / PI.powi(k)),
        json!(reference.map(|r| r.volume)),
    ]);
    report.push_footer("c1_source", json!(source));
    report.push_footer("samples_accepted", json!(stats.total));
    report.push_footer("rejected", json!(stats.rejected));
    report.push_footer("representative", json!(stats.representative));
    Ok(report)
}
