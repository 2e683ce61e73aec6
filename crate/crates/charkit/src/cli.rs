//! Command-line entry point: group catalog, generator-file input, report
//! rendering (aligned text or JSON), and the exit-code contract
//! (1 = input error, 2 = computation error, 3 = verification inconsistency).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dixon::{
    character_table, character_table_with_prime, decomposition_string, CharacterTable,
};
use crate::error::{Error, Result};
use crate::permgroup::{
    conjugacy_classes, enumerate, parse_cycles, ClassSet, PermGroup, Permutation,
    DEFAULT_ENUMERATION_CAP,
};
use crate::spectra::{
    brute_force_spectrum, expand_spectrum, normal_cayley_spectrum, ConnectionSet, Energy,
    SpectrumReport, DEFAULT_ORACLE_CAP,
};
use crate::vanishing::{
    classify_classes, verify_main_theorem, weight, ClassVerdict, WeightComparison, WeightReport,
};

/// Exact character tables, Cayley-graph spectra, and vanishing-class
/// analysis for finite permutation groups.
#[derive(Parser, Debug)]
#[command(name = "charkit", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List conjugacy classes: sizes, orders, rationality, power structure
    Classes(CommonArgs),
    /// Compute the exact character table (optionally cache it on disk)
    Chartab(ChartabArgs),
    /// The weight ω(G) = (Σχ(1))²/|G| as an exact rational
    Weight(CommonArgs),
    /// Exact spectrum and energy of the normal Cayley graph Cay(G, S)
    Spectrum(SpectrumArgs),
    /// Vanishing/rationality verdict for every conjugacy class
    Classify(CommonArgs),
    /// Verify |C_G(x)| ≥ ω(G) and the energy bound on the whole group
    Verify(CommonArgs),
    /// Cross-check character spectra against the brute-force eigensolver
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Catalog name (cyclic:n, dihedral:2n, sym:n, alt:n, quaternion:8,
    /// mathieu:11) or @path to a generator file
    pub group: String,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Override the Dixon prime (must be ≡ 1 mod exponent, p² > 4|G|)
    #[arg(long)]
    pub prime: Option<u64>,

    /// Refuse groups with more elements than this
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub max_order: usize,

    /// Refuse brute-force spectra on groups larger than this
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: u64,

    /// Decimal digits when rendering exact rationals
    #[arg(long, default_value_t = 10)]
    pub precision: usize,
}

#[derive(Args, Debug)]
pub struct ChartabArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Write the computed table to this file in the cache format
    #[arg(long)]
    pub export: Option<PathBuf>,

    /// Read the table from a cache file (re-verified) instead of computing
    #[arg(long)]
    pub import: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Connection-set class label(s), comma-separated (e.g. `3a` or `3a,3b`)
    #[arg(long)]
    pub class: String,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Check only this connection set (comma-separated labels); default:
    /// every inverse-closed single class
    #[arg(long)]
    pub class: Option<String>,
}

/// Runs one subcommand, printing the report to stdout. Returns the exit
/// code (verification subcommands exit 3 on a failed verdict even though
/// the report itself rendered fine).
pub fn run(cli: Cli) -> Result<i32> {
    match &cli.command {
        Command::Classes(args) => cmd_classes(args),
        Command::Chartab(args) => cmd_chartab(args),
        Command::Weight(args) => cmd_weight(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

// ---------------------------------------------------------------------------
// Group resolution

/// Resolves a group spec — catalog name or `@file` — into a deterministic
/// `PermGroup`, returning the display name alongside.
pub fn resolve_group(spec: &str, cap: usize) -> Result<(String, PermGroup)> {
    let generators = if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path)?;
        parse_generator_file(&text)?
    } else {
        catalog_generators(spec, cap)?
    };
    let group = enumerate(generators, cap)?;
    Ok((spec.to_string(), group))
}

fn parse_catalog_number(token: &str, name: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| {
            Error::Input(format!(
                "catalog name {name} needs a positive integer parameter, got \"{token}\""
            ))
        })
}

fn catalog_generators(spec: &str, cap: usize) -> Result<Vec<Permutation>> {
    let unknown = || {
        Error::Input(format!(
            "unknown group \"{spec}\"; expected cyclic:n, dihedral:2n, sym:n, alt:n, \
             quaternion:8, mathieu:11, or @file"
        ))
    };
    let (family, param) = spec.split_once(':').ok_or_else(unknown)?;
    let fixed =
        |text: &str, degree: usize| parse_cycles(text, degree).expect("catalog generator parses");
    match family {
        "cyclic" => {
            let n = parse_catalog_number(param, "cyclic:n")?;
            if n > cap {
                return Err(Error::GroupTooLarge { cap, found: n });
            }
            Ok(vec![rotation(n)])
        }
        "dihedral" => {
            let order = parse_catalog_number(param, "dihedral:2n")?;
            if order % 2 != 0 {
                return Err(Error::Input(format!(
                    "dihedral groups are named by their (even) order; \
                     dihedral:{order} is odd"
                )));
            }
            if order > cap {
                return Err(Error::GroupTooLarge { cap, found: order });
            }
            let n = order / 2;
            Ok(match n {
                1 => vec![fixed("(1 2)", 2)],
                2 => vec![fixed("(1 2)", 4), fixed("(3 4)", 4)],
                _ => {
                    // Reflection i ↦ n+1−i alongside the n-cycle.
                    let images: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
                    vec![
                        rotation(n),
                        Permutation::from_images(images).expect("reflection is a bijection"),
                    ]
                }
            })
        }
        "sym" => {
            let n = parse_catalog_number(param, "sym:n")?;
            check_factorial_cap(n, 1, cap)?;
            if n == 1 {
                return Ok(vec![Permutation::identity(1)]);
            }
            Ok(vec![fixed("(1 2)", n), rotation(n)])
        }
        "alt" => {
            let n = parse_catalog_number(param, "alt:n")?;
            check_factorial_cap(n, 2, cap)?;
            if n <= 2 {
                return Ok(vec![Permutation::identity(n.max(1))]);
            }
            // 3-cycles (1 2 k) for k = 3..n generate Alt(n).
            Ok((2..n)
                .map(|k| {
                    let mut images: Vec<u32> = (0..n as u32).collect();
                    images[0] = 1;
                    images[1] = k as u32;
                    images[k] = 0;
                    Permutation::from_images(images).expect("3-cycle is a bijection")
                })
                .collect())
        }
        "quaternion" => {
            if param != "8" {
                return Err(Error::Input("only quaternion:8 is in the catalog".into()));
            }
            Ok(vec![
                fixed("(1 2 3 4)(5 6 7 8)", 8),
                fixed("(1 5 3 7)(2 8 4 6)", 8),
            ])
        }
        "mathieu" => {
            if param != "11" {
                return Err(Error::Input("only mathieu:11 is in the catalog".into()));
            }
            Ok(vec![
                fixed("(1 2 3 4 5 6 7 8 9 10 11)", 11),
                fixed("(3 7 11 8)(4 10 5 6)", 11),
            ])
        }
        _ => Err(unknown()),
    }
}

/// The n-cycle (1 2 … n) as a permutation of degree n.
fn rotation(n: usize) -> Permutation {
    let images: Vec<u32> = (0..n).map(|i| ((i + 1) % n) as u32).collect();
    Permutation::from_images(images).expect("rotation is a bijection")
}

/// Rejects sym:n / alt:n whose order n!/divisor would exceed the cap,
/// without computing huge factorials.
fn check_factorial_cap(n: usize, divisor: u64, cap: usize) -> Result<()> {
    let mut order = 1u64;
    for i in 1..=n as u64 {
        order = order.saturating_mul(i);
        if order / divisor > cap as u64 {
            return Err(Error::GroupTooLarge {
                cap,
                found: usize::MAX,
            });
        }
    }
    Ok(())
}

/// Parses a generator file: one generator per line in 1-based cycle
/// notation; blank lines and `#` comments ignored; an optional first line
/// `degree: n` fixes the degree (otherwise the largest point used).
pub fn parse_generator_file(text: &str) -> Result<Vec<Permutation>> {
    let mut degree: Option<usize> = None;
    let mut body: Vec<&str> = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if body.is_empty() && degree.is_none() {
            if let Some(rest) = line.strip_prefix("degree:") {
                degree = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad degree header \"{line}\"")))?,
                );
                continue;
            }
        }
        body.push(line);
    }
    if body.is_empty() {
        return Err(Error::Input("generator file contains no generators".into()));
    }
    let degree = degree.unwrap_or_else(|| {
        body.iter()
            .flat_map(|line| line.split(|c: char| !c.is_ascii_digit()))
            .filter_map(|token| token.parse::<usize>().ok())
            .max()
            .unwrap_or(1)
            .max(1)
    });
    body.iter().map(|line| parse_cycles(line, degree)).collect()
}

/// Catalog names of every group the verification sweep covers at the given
/// order bound: all cyclic, dihedral, quaternion, symmetric, and
/// alternating entries with |G| ≤ max_order.
pub fn sweep_names(max_order: u64) -> Vec<String> {
    let mut names = Vec::new();
    for n in 1..=max_order {
        names.push(format!("cyclic:{n}"));
    }
    let mut order = 2;
    while order <= max_order {
        names.push(format!("dihedral:{order}"));
        order += 2;
    }
    if max_order >= 8 {
        names.push("quaternion:8".into());
    }
    let mut factorial = 1u64;
    for n in 1..=20u64 {
        factorial = factorial.saturating_mul(n);
        if factorial <= max_order {
            names.push(format!("sym:{n}"));
        }
        if factorial / 2 <= max_order {
            names.push(format!("alt:{n}"));
        } else if factorial > 2 * max_order {
            break;
        }
    }
    if max_order >= 7920 {
        names.push("mathieu:11".into());
    }
    names
}

// ---------------------------------------------------------------------------
// Shared pieces

fn computed_table(name: &str, group: &PermGroup, prime: Option<u64>) -> Result<CharacterTable> {
    let table = match prime {
        Some(p) => character_table_with_prime(group, p)?,
        None => character_table(group)?,
    };
    Ok(table.with_name(name))
}

fn labels_to_indices(classes: &ClassSet, labels: &str) -> Result<Vec<usize>> {
    labels
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|label| {
            classes.index_of_label(label).ok_or_else(|| {
                Error::Input(format!(
                    "unknown class label \"{label}\"; available: {}",
                    classes.labels().join(", ")
                ))
            })
        })
        .collect()
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

/// Exact integers render as JSON strings to avoid float truncation.
fn s(value: impl ToString) -> Value {
    Value::String(value.to_string())
}

fn f(value: f64) -> Value {
    serde_json::Number::from_f64(value)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

/// Aligns rows into columns separated by two spaces.
fn aligned(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            let pad = widths[i].saturating_sub(cell.chars().count());
            if i + 1 < row.len() {
                line.extend(std::iter::repeat_n(' ', pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn comparison_str(c: WeightComparison) -> &'static str {
    match c {
        WeightComparison::Above => "above",
        WeightComparison::Equal => "equal",
        WeightComparison::Below => "below",
    }
}

fn chi(index: usize) -> String {
    format!("chi_{}", index + 1)
}

fn weight_json(wr: &WeightReport, precision: usize) -> Value {
    json!({
        "num": s(wr.weight.numer()),
        "den": s(wr.weight.denom()),
        "decimal": wr.decimal(precision),
        "repetend": wr.repetend().map(Value::String).unwrap_or(Value::Null),
    })
}

fn weight_line(wr: &WeightReport, precision: usize) -> String {
    format!("{} ≈ {}", wr.weight, wr.decimal(precision))
}

fn verdict_json(classes: &ClassSet, v: &ClassVerdict) -> Value {
    let class = classes.class(v.class_index);
    json!({
        "label": classes.label(v.class_index),
        "size": s(class.size),
        "order": s(class.element_order),
        "rational": v.is_rational,
        "vanishing": v.is_vanishing,
        "witnesses": v.witnesses.iter().map(|&i| s(chi(i))).collect::<Vec<_>>(),
        "centralizer": s(v.centralizer_order),
        "comparison": comparison_str(v.comparison),
    })
}

fn verdict_rows(classes: &ClassSet, verdicts: &[ClassVerdict]) -> Vec<Vec<String>> {
    let mut rows = vec![vec![
        "label".into(),
        "size".into(),
        "order".into(),
        "rational".into(),
        "vanishing".into(),
        "witnesses".into(),
        "centralizer".into(),
        "vs-weight".into(),
    ]];
    for v in verdicts {
        let class = classes.class(v.class_index);
        let witnesses = if v.witnesses.is_empty() {
            "-".to_string()
        } else {
            v.witnesses
                .iter()
                .map(|&i| chi(i))
                .collect::<Vec<_>>()
                .join(",")
        };
        rows.push(vec![
            classes.label(v.class_index).to_string(),
            class.size.to_string(),
            class.element_order.to_string(),
            yes_no(v.is_rational),
            yes_no(v.is_vanishing),
            witnesses,
            v.centralizer_order.to_string(),
            comparison_str(v.comparison).to_string(),
        ]);
    }
    rows
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

// ---------------------------------------------------------------------------
// Subcommands

fn cmd_classes(args: &CommonArgs) -> Result<i32> {
    let (name, group) = resolve_group(&args.group, args.max_order)?;
    let classes = conjugacy_classes(&group);
    match args.format {
        Format::Json => {
            let list: Vec<Value> = classes
                .classes()
                .iter()
                .enumerate()
                .map(|(j, class)| {
                    json!({
                        "label": classes.label(j),
                        "representative": class.representative.to_string(),
                        "size": s(class.size),
                        "element_order": s(class.element_order),
                        "rational": class.is_rational,
                        "inverse_class": classes.label(class.inverse_class()),
                        "centralizer": s(class.centralizer_order),
                    })
                })
                .collect();
            print_json(&json!({
                "group": name,
                "order": s(group.order()),
                "exponent": s(classes.exponent()),
                "classes": list,
            }));
        }
        Format::Table => {
            println!(
                "group {name}  order {}  exponent {}  classes {}",
                group.order(),
                classes.exponent(),
                classes.len()
            );
            let mut rows = vec![vec![
                "label".into(),
                "size".into(),
                "order".into(),
                "rational".into(),
                "inverse".into(),
                "centralizer".into(),
                "representative".into(),
            ]];
            for (j, class) in classes.classes().iter().enumerate() {
                rows.push(vec![
                    classes.label(j).to_string(),
                    class.size.to_string(),
                    class.element_order.to_string(),
                    yes_no(class.is_rational),
                    classes.label(class.inverse_class()).to_string(),
                    class.centralizer_order.to_string(),
                    class.representative.to_string(),
                ]);
            }
            print!("{}", aligned(&rows));
        }
    }
    Ok(0)
}

fn cmd_chartab(args: &ChartabArgs) -> Result<i32> {
    let common = &args.common;
    let (name, group) = resolve_group(&common.group, common.max_order)?;
    let table = match &args.import {
        Some(path) => {
            if common.prime.is_some() {
                return Err(Error::Input(
                    "--prime cannot be combined with --import; the cached table \
                     fixes its own prime"
                        .into(),
                ));
            }
            let text = std::fs::read_to_string(path)?;
            CharacterTable::import(&text, &group)?
        }
        None => computed_table(&name, &group, common.prime)?,
    };
    if let Some(path) = &args.export {
        std::fs::write(path, table.export())?;
    }

    match common.format {
        Format::Json => {
            let values: Vec<Value> = (0..table.k())
                .map(|i| Value::Array((0..table.k()).map(|j| s(table.value(i, j))).collect()))
                .collect();
            print_json(&json!({
                "group": table.group_name(),
                "order": s(table.order()),
                "exponent": s(table.exponent()),
                "prime": s(table.prime()),
                "decomposition": decomposition_string(&table),
                "classes": table.classes().labels(),
                "degrees": table.degrees().iter().map(s).collect::<Vec<_>>(),
                "values": values,
            }));
        }
        Format::Table => {
            println!(
                "group {}  order {}  exponent {}  prime {}",
                table.group_name(),
                table.order(),
                table.exponent(),
                table.prime()
            );
            println!("decomposition {}", decomposition_string(&table));
            let mut rows = vec![];
            let mut header = vec![String::new()];
            header.extend(table.classes().labels().iter().cloned());
            rows.push(header);
            for i in 0..table.k() {
                let mut row = vec![chi(i)];
                row.extend((0..table.k()).map(|j| table.value(i, j).to_string()));
                rows.push(row);
            }
            print!("{}", aligned(&rows));
        }
    }
    Ok(0)
}

fn cmd_weight(args: &CommonArgs) -> Result<i32> {
    let (name, group) = resolve_group(&args.group, args.max_order)?;
    let table = computed_table(&name, &group, args.prime)?;
    let wr = weight(&table);
    match args.format {
        Format::Json => print_json(&json!({
            "group": name,
            "order": s(table.order()),
            "degree_sum": s(wr.degree_sum),
            "weight": weight_json(&wr, args.precision),
        })),
        Format::Table => println!("{}", weight_line(&wr, args.precision)),
    }
    Ok(0)
}

fn spectrum_report(
    table: &CharacterTable,
    labels: &str,
) -> Result<(ConnectionSet, SpectrumReport)> {
    let indices = labels_to_indices(table.classes(), labels)?;
    let set = ConnectionSet::new(table.classes(), &indices)?;
    let report = normal_cayley_spectrum(table, &set)?;
    Ok((set, report))
}

fn energy_json(energy: &Energy) -> (Value, Value) {
    match energy {
        Energy::Exact(v) => (s(v), Value::Null),
        Energy::Approx { value, error_bound } => (f(*value), f(*error_bound)),
    }
}

fn cmd_spectrum(args: &SpectrumArgs) -> Result<i32> {
    let common = &args.common;
    let (name, group) = resolve_group(&common.group, common.max_order)?;
    let table = computed_table(&name, &group, common.prime)?;
    let (_, report) = spectrum_report(&table, &args.class)?;

    match common.format {
        Format::Json => {
            let eigenvalues: Vec<Value> = report
                .eigenvalues
                .iter()
                .map(|e| {
                    json!({
                        "value": s(&e.value),
                        "approx": f(e.approx),
                        "multiplicity": s(e.multiplicity),
                        "character": s(chi(e.character)),
                    })
                })
                .collect();
            let (energy, error_bound) = energy_json(&report.energy);
            print_json(&json!({
                "group": name,
                "order": s(report.order),
                "connection_set": report.class_labels,
                "degree": s(report.degree),
                "eigenvalues": eigenvalues,
                "energy": energy,
                "energy_error_bound": error_bound,
                "exact": report.exact,
                "singular": report.singular,
                "mcclelland_bound": f(report.mcclelland_bound),
            }));
        }
        Format::Table => {
            println!(
                "group {name}  order {}  connection {{{}}}  degree {}",
                report.order,
                report.class_labels.join(","),
                report.degree
            );
            let mut rows = vec![vec![
                "eigenvalue".into(),
                "approx".into(),
                "multiplicity".into(),
                "character".into(),
            ]];
            for e in &report.eigenvalues {
                rows.push(vec![
                    e.value.to_string(),
                    format!("{:.6}", e.approx),
                    e.multiplicity.to_string(),
                    chi(e.character),
                ]);
            }
            print!("{}", aligned(&rows));
            match report.energy {
                Energy::Exact(v) => println!("energy {v} (exact)"),
                Energy::Approx { value, error_bound } => {
                    println!("energy {value:.6} (±{error_bound:.2e})")
                }
            }
            println!("singular {}", yes_no(report.singular));
            println!("mcclelland_bound {:.6}", report.mcclelland_bound);
        }
    }
    Ok(0)
}

fn cmd_classify(args: &CommonArgs) -> Result<i32> {
    let (name, group) = resolve_group(&args.group, args.max_order)?;
    let table = computed_table(&name, &group, args.prime)?;
    let wr = weight(&table);
    let verdicts = classify_classes(&table);
    match args.format {
        Format::Json => {
            let classes: Vec<Value> = verdicts
                .iter()
                .map(|v| verdict_json(table.classes(), v))
                .collect();
            print_json(&json!({
                "group": name,
                "order": s(table.order()),
                "weight": weight_json(&wr, args.precision),
                "classes": classes,
            }));
        }
        Format::Table => {
            println!("group {name}  order {}", table.order());
            println!("weight {}", weight_line(&wr, args.precision));
            print!("{}", aligned(&verdict_rows(table.classes(), &verdicts)));
        }
    }
    Ok(0)
}

fn cmd_verify(args: &CommonArgs) -> Result<i32> {
    let (name, group) = resolve_group(&args.group, args.max_order)?;
    let table = computed_table(&name, &group, args.prime)?;
    let report = verify_main_theorem(&table)?;
    let classes = table.classes();

    match args.format {
        Format::Json => {
            let energy_checks: Vec<Value> = report
                .energy_checks
                .iter()
                .map(|c| {
                    json!({
                        "class": classes.label(c.class_index),
                        "energy": s(c.energy),
                        "bound": s(c.bound),
                        "holds": c.holds,
                        "singular": c.singular,
                        "mcclelland_bound": f(c.mcclelland_bound),
                    })
                })
                .collect();
            print_json(&json!({
                "group": name,
                "order": s(table.order()),
                "weight": weight_json(&report.weight, args.precision),
                "classes": report
                    .verdicts
                    .iter()
                    .map(|v| verdict_json(classes, v))
                    .collect::<Vec<_>>(),
                "theorem_holds": report.theorem_holds,
                "energy_checks": energy_checks,
                "contrapositive": report
                    .contrapositive
                    .iter()
                    .map(|&j| s(classes.label(j)))
                    .collect::<Vec<_>>(),
                "failures": report.failures,
            }));
        }
        Format::Table => {
            println!("group {name}  order {}", table.order());
            println!("weight {}", weight_line(&report.weight, args.precision));
            print!("{}", aligned(&verdict_rows(classes, &report.verdicts)));
            if !report.energy_checks.is_empty() {
                println!("energy checks (rational non-vanishing classes):");
                let mut rows = vec![vec![
                    "class".into(),
                    "energy".into(),
                    "bound".into(),
                    "holds".into(),
                    "singular".into(),
                    "mcclelland".into(),
                ]];
                for c in &report.energy_checks {
                    rows.push(vec![
                        classes.label(c.class_index).to_string(),
                        c.energy.to_string(),
                        c.bound.to_string(),
                        yes_no(c.holds),
                        yes_no(c.singular),
                        format!("{:.4}", c.mcclelland_bound),
                    ]);
                }
                print!("{}", aligned(&rows));
            }
            let forced: Vec<&str> = report
                .contrapositive
                .iter()
                .map(|&j| classes.label(j))
                .collect();
            println!(
                "contrapositive (centralizer below weight, forced vanishing): {}",
                if forced.is_empty() {
                    "none".to_string()
                } else {
                    forced.join(", ")
                }
            );
            for failure in &report.failures {
                println!("FAILURE: {failure}");
            }
            println!("theorem holds: {}", yes_no(report.theorem_holds));
        }
    }
    Ok(if report.theorem_holds { 0 } else { 3 })
}

fn cmd_oracle(args: &OracleArgs) -> Result<i32> {
    let common = &args.common;
    let (name, group) = resolve_group(&common.group, common.max_order)?;
    let table = computed_table(&name, &group, common.prime)?;
    let classes = table.classes();

    let sets: Vec<Vec<usize>> = match &args.class {
        Some(labels) => vec![labels_to_indices(classes, labels)?],
        None => (1..classes.len())
            .filter(|&j| classes.class(j).is_inverse_closed())
            .map(|j| vec![j])
            .collect(),
    };
    if sets.is_empty() {
        return Err(Error::Input(
            "no inverse-closed non-identity class to check".into(),
        ));
    }

    let mut checks = Vec::new();
    let mut all_ok = true;
    for indices in &sets {
        let set = ConnectionSet::new(classes, indices)?;
        let report = normal_cayley_spectrum(&table, &set)?;
        let exact = expand_spectrum(&report);
        let oracle = brute_force_spectrum(&group, &set, common.oracle_cap)?;
        let max_deviation = exact
            .iter()
            .zip(&oracle)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        let ok = exact.len() == oracle.len() && max_deviation < 1e-6;
        all_ok &= ok;
        checks.push((report.class_labels.clone(), max_deviation, ok));
    }

    match common.format {
        Format::Json => {
            let list: Vec<Value> = checks
                .iter()
                .map(|(labels, dev, ok)| {
                    json!({
                        "connection_set": labels,
                        "max_deviation": f(*dev),
                        "ok": ok,
                    })
                })
                .collect();
            print_json(&json!({
                "group": name,
                "order": s(group.order()),
                "oracle_cap": s(common.oracle_cap),
                "checks": list,
                "all_ok": all_ok,
            }));
        }
        Format::Table => {
            println!("group {name}  order {}", group.order());
            let mut rows = vec![vec![
                "connection".into(),
                "max deviation".into(),
                "ok".into(),
            ]];
            for (labels, dev, ok) in &checks {
                rows.push(vec![
                    format!("{{{}}}", labels.join(",")),
                    format!("{dev:.3e}"),
                    yes_no(*ok),
                ]);
            }
            print!("{}", aligned(&rows));
            println!(
                "oracle agreement: {}",
                if all_ok { "all match" } else { "MISMATCH" }
            );
        }
    }
    Ok(if all_ok { 0 } else { 3 })
}
