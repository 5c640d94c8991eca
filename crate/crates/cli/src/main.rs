//! `kronecker`: command-line access to the coefficient engines.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kronecker_core::families::{family1, family2, family3};
use kronecker_core::plane::{count_pp, lemma2_transform, macmahon_series, pp_weight_histogram};
use kronecker_core::quasipoly::{family1_quasipolynomial, family3_quasipolynomial};
use kronecker_core::reduced::{evaluation_point, padded_kron, padded_kron_with_pathway};
use kronecker_core::series::{f_series, g_series};
use kronecker_core::verify::{run_suite, Suite};
use kronecker_core::{
    bij_family1, bij_family2, bij_family3, enumerate_kron_tableaux, count_kron_tableaux, CharacterOracle,
    ColouredPartition, Error, IntegerSeries, KroneckerTableau, Partition, DEFAULT_ORACLE_CAP,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "kronecker", version, about = "Exact Kronecker and reduced Kronecker coefficients")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Pretty)]
    format: Format,
    /// Same as `--format json`.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Same as `--format csv`.
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads for parallel sums (default: all cores).
    #[arg(long, global = true, env = "KRONECKER_THREADS")]
    threads: Option<usize>,
    /// Largest n handled by the character tables.
    #[arg(long, global = true, env = "KRONECKER_ORACLE_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Kronecker coefficient g(λ, μ, ν) for three partitions of the same n.
    Kron { lambda: Partition, mu: Partition, nu: Partition },
    /// Expansion of s_μ * s_ν in Schur functions.
    Kronprod { mu: Partition, nu: Partition },
    /// Reduced Kronecker coefficient, or the padded sequence over a range of n.
    Rkron {
        alpha: Partition,
        beta: Partition,
        gamma: Partition,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        sweep: Option<Vec<usize>>,
    },
    /// Kronecker tableaux of shape OUTER/ALPHA and type TYPE/ALPHA.
    Ktab {
        #[arg(long)]
        outer: Partition,
        #[arg(long = "type")]
        ty: Partition,
        #[arg(long)]
        alpha: Partition,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// Values of one of the three coefficient families.
    Family {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
        #[arg(long)]
        a: usize,
        /// Defaults to a for families 1 and 2 and to a+1 for family 3.
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, default_value_t = 0)]
        i: usize,
        #[arg(long, required_unless_present = "krange", conflicts_with = "krange")]
        k: Option<usize>,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        krange: Option<Vec<usize>>,
    },
    /// Kronecker tableau attached to a coloured partition.
    Bij {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        family: u8,
        #[arg(long)]
        a: usize,
        /// Width for family 3 (default 2j).
        #[arg(long)]
        k: Option<usize>,
        /// Extra column sets for family 2.
        #[arg(long, default_value_t = 0)]
        i: usize,
        /// Parts such as "2~~,1" (one ~ per bar).
        #[arg(long, allow_hyphen_values = true)]
        beta: ColouredPartition,
    },
    /// Plane partition counts and series.
    Pp {
        /// Plane partitions of K in an R x S rectangle.
        #[arg(long, num_args = 3, value_names = ["K", "R", "S"], group = "mode")]
        count: Option<Vec<usize>>,
        /// Plane partitions in the R x S x T box, by weight.
        #[arg(long = "box", num_args = 3, value_names = ["R", "S", "T"], group = "mode")]
        bounds: Option<Vec<usize>>,
        /// With --box: take the product formula up to x^N instead of enumerating.
        #[arg(long, requires = "bounds")]
        series: Option<usize>,
        /// Apply q_n = Σ (⌊(n−m)/2⌋+1) r_m to a comma-separated sequence.
        #[arg(long, group = "mode")]
        lemma2: Option<String>,
    },
    /// Coefficients of the generating function of family 1 or of the third
    /// family's stable diagonal.
    Series {
        #[arg(long, value_parser = parse_series_family)]
        family: u8,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        terms: usize,
    },
    /// Quasipolynomial for family 1 or the third family's stable diagonal.
    Quasipoly {
        #[arg(long, value_parser = parse_series_family)]
        family: u8,
        #[arg(long)]
        a: usize,
    },
    /// Built-in self checks.
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
    },
}

fn parse_series_family(s: &str) -> Result<u8, String> {
    match s {
        "1" => Ok(1),
        "3" => Ok(3),
        _ => Err("family must be 1 or 3".into()),
    }
}

/// One result in all three renderings.
struct Output {
    pretty: String,
    json: Value,
    csv: String,
    /// Exit status when the command ran but something did not hold.
    status: u8,
}

impl Output {
    fn ok(pretty: String, json: Value, csv: String) -> Self {
        Output { pretty, json, csv, status: 0 }
    }
}

fn kernel_exit(e: &Error) -> u8 {
    if e.is_scale() {
        3
    } else if matches!(e, Error::Inconsistent(_)) {
        1
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        cli.format
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let oracle = match CharacterOracle::with_cap(cli.oracle_cap) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let output = match run(&cli.command, &oracle) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(kernel_exit(&e));
        }
    };
    let mut text = match format {
        Format::Pretty => output.pretty,
        Format::Json => serde_json::to_string_pretty(&output.json).expect("JSON values serialize"),
        Format::Csv => output.csv,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(output.status)
}

fn run(command: &Command, oracle: &CharacterOracle) -> Result<Output, Error> {
    match command {
        Command::Kron { lambda, mu, nu } => {
            let g = oracle.kronecker(lambda, mu, nu)?;
            Ok(Output::ok(
                g.to_string(),
                json!({"lambda": lambda.to_string(), "mu": mu.to_string(), "nu": nu.to_string(), "coefficient": g.to_string()}),
                format!("lambda,mu,nu,coefficient\n\"{lambda}\",\"{mu}\",\"{nu}\",{g}"),
            ))
        }
        Command::Kronprod { mu, nu } => {
            let product = oracle.kronecker_product(mu, nu)?;
            let mut pretty = String::new();
            let mut csv = String::from("lambda,coefficient\n");
            let mut map = serde_json::Map::new();
            for (lambda, g) in &product {
                writeln!(pretty, "{g} * s({lambda})").unwrap();
                writeln!(csv, "\"{lambda}\",{g}").unwrap();
                map.insert(lambda.to_string(), Value::String(g.to_string()));
            }
            Ok(Output::ok(pretty, Value::Object(map), csv))
        }
        Command::Rkron { alpha, beta, gamma, sweep } => rkron(oracle, alpha, beta, gamma, sweep.as_deref()),
        Command::Ktab { outer, ty, alpha, list, .. } => ktab(outer, ty, alpha, *list),
        Command::Family { id, a, b, i, k, krange } => {
            let b = b.unwrap_or(if *id == 3 { a + 1 } else { *a });
            let (lo, hi) = match (k, krange.as_deref()) {
                (Some(k), _) => (*k, *k),
                (None, Some([lo, hi])) => (*lo, *hi),
                _ => unreachable!("clap requires --k or --krange"),
            };
            family_table(oracle, *id, *a, b, *i, lo, hi, k.is_some())
        }
        Command::Bij { family, a, k, i, beta } => {
            let t = match family {
                1 => bij_family1(beta, *a)?,
                2 => bij_family2(beta, *a, *i)?,
                _ => bij_family3(beta, *a, k.unwrap_or(2 * beta.weight()))?,
            };
            Ok(Output::ok(
                format!("beta = ({beta})\n{t}"),
                json!({"beta": beta.to_string(), "tableau": tableau_json(&t)}),
                tableau_csv(&t),
            ))
        }
        Command::Pp { count, bounds, series, lemma2 } => pp(count.as_deref(), bounds.as_deref(), *series, lemma2.as_deref()),
        Command::Series { family, a, terms } => {
            let s: IntegerSeries = if *family == 1 { f_series(*a, *terms) } else { g_series(*a, *terms)? };
            Ok(sequence_output(s.coeffs(), "n"))
        }
        Command::Quasipoly { family, a } => quasipoly(*family, *a),
        Command::Verify { suite } => verify(oracle, *suite),
    }
}

fn rkron(
    oracle: &CharacterOracle,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    sweep: Option<&[usize]>,
) -> Result<Output, Error> {
    let args = json!({"alpha": alpha.to_string(), "beta": beta.to_string(), "gamma": gamma.to_string()});
    if let Some(&[lo, hi]) = sweep {
        let cells = (lo..=hi).map(|n| (n, padded_kron(oracle, alpha, beta, gamma, n))).collect();
        return marked_cells(cells, "n", args);
    }
    let n = evaluation_point(alpha, beta, gamma);
    let (g, pathway) = padded_kron_with_pathway(oracle, alpha, beta, gamma, n)?;
    Ok(Output::ok(
        format!("{g}\n(evaluated at n = {n} by {pathway})"),
        json!({"arguments": args, "n": n, "pathway": pathway.to_string(), "coefficient": g.to_string()}),
        format!("alpha,beta,gamma,n,coefficient\n\"{alpha}\",\"{beta}\",\"{gamma}\",{n},{g}"),
    ))
}

fn tableau_json(t: &KroneckerTableau) -> Value {
    json!({"outer": t.outer().to_string(), "inner": t.inner().to_string(), "rows": t.rows()})
}

fn tableau_csv(t: &KroneckerTableau) -> String {
    let mut csv = String::from("row,entries\n");
    for (r, row) in t.rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(csv, "{},\"{}\"", r + 1, cells.join(",")).unwrap();
    }
    csv
}

fn ktab(outer: &Partition, ty: &Partition, alpha: &Partition, list: bool) -> Result<Output, Error> {
    if outer.size() != ty.size() {
        return Err(Error::SizeMismatch(format!("{outer} and {ty} have different sizes")));
    }
    if !list {
        let n = count_kron_tableaux(outer, ty, alpha);
        return Ok(Output::ok(
            n.to_string(),
            json!({"outer": outer.to_string(), "type": ty.to_string(), "alpha": alpha.to_string(), "count": n.to_string()}),
            format!("outer,type,alpha,count\n\"{outer}\",\"{ty}\",\"{alpha}\",{n}"),
        ));
    }
    let all: Vec<KroneckerTableau> = enumerate_kron_tableaux(outer, ty, alpha).collect();
    let pretty = all.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n");
    let mut csv = String::from("tableau,row,entries\n");
    for (idx, t) in all.iter().enumerate() {
        for (r, row) in t.rows().iter().enumerate() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(csv, "{},{},\"{}\"", idx + 1, r + 1, cells.join(",")).unwrap();
        }
    }
    let json = Value::Array(all.iter().map(|t| json!(t.rows())).collect());
    Ok(Output::ok(if pretty.is_empty() { "(none)".into() } else { pretty }, json, csv))
}

#[allow(clippy::too_many_arguments)]
fn family_table(
    oracle: &CharacterOracle,
    id: u8,
    a: usize,
    b: usize,
    i: usize,
    lo: usize,
    hi: usize,
    single: bool,
) -> Result<Output, Error> {
    let value = |k: usize| match id {
        1 => family1(oracle, a, b, k),
        2 => family2(oracle, a, b, k, i),
        _ => family3(oracle, a, b, k, i),
    };
    if single {
        let g = value(lo)?;
        return Ok(Output::ok(
            g.to_string(),
            json!({"id": id, "a": a, "b": b, "i": i, "k": lo, "value": g.to_string()}),
            format!("k,value\n{lo},{g}"),
        ));
    }
    let cells = (lo..=hi).map(|k| (k, value(k))).collect();
    marked_cells(cells, "k", json!({"id": id, "a": a, "b": b, "i": i}))
}

/// Indexed values where cells beyond the oracle cap show `?` (null in JSON)
/// and turn the exit status to 3. Any other error aborts.
fn marked_cells(cells: Vec<(usize, Result<u64, Error>)>, index: &str, header: Value) -> Result<Output, Error> {
    if let Some((_, Err(e))) = cells.iter().find(|(_, r)| matches!(r, Err(e) if !e.is_scale())) {
        return Err(e.clone());
    }
    let mark = |r: &Result<u64, Error>| match r {
        Ok(g) => g.to_string(),
        Err(_) => "?".to_string(),
    };
    let pretty = cells.iter().map(|(_, r)| mark(r)).collect::<Vec<_>>().join(",");
    let mut csv = format!("{index},value\n");
    for (k, r) in &cells {
        writeln!(csv, "{k},{}", mark(r)).unwrap();
    }
    let values: Vec<Value> = cells
        .iter()
        .map(|(k, r)| match r {
            Ok(g) => json!({index: k, "value": g.to_string()}),
            Err(e) => json!({index: k, "value": Value::Null, "error": e.to_string()}),
        })
        .collect();
    let mut json = header;
    json["values"] = Value::Array(values);
    Ok(Output {
        pretty,
        json,
        csv,
        status: if cells.iter().any(|(_, r)| r.is_err()) { 3 } else { 0 },
    })
}

fn sequence_output<T: ToString>(values: &[T], index: &str) -> Output {
    let text: Vec<String> = values.iter().map(ToString::to_string).collect();
    let mut csv = format!("{index},value\n");
    for (n, v) in text.iter().enumerate() {
        writeln!(csv, "{n},{v}").unwrap();
    }
    Output::ok(text.join(","), json!(text), csv)
}

fn pp(
    count: Option<&[usize]>,
    bounds: Option<&[usize]>,
    series: Option<usize>,
    lemma2: Option<&str>,
) -> Result<Output, Error> {
    if let Some(&[k, r, s]) = count {
        let n = count_pp(k, r, s);
        return Ok(Output::ok(
            n.to_string(),
            json!({"k": k, "rows": r, "columns": s, "count": n.to_string()}),
            format!("k,rows,columns,count\n{k},{r},{s},{n}"),
        ));
    }
    if let Some(&[r, s, t]) = bounds {
        return Ok(match series {
            Some(order) => sequence_output(macmahon_series(r, s, t, order).coeffs(), "weight"),
            None => sequence_output(&pp_weight_histogram(r, s, t), "weight"),
        });
    }
    if let Some(text) = lemma2 {
        let r = text
            .split(',')
            .map(|x| x.trim().parse::<BigInt>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(sequence_output(&lemma2_transform(&r), "n"));
    }
    Err(Error::Unsupported("pp needs one of --count, --box or --lemma2".into()))
}

fn quasipoly(family: u8, a: usize) -> Result<Output, Error> {
    let (qp, factors) = if family == 1 { family1_quasipolynomial(a)? } else { family3_quasipolynomial(a)? };
    let mut pretty = format!(
        "numerator: {factors}\nperiod {} (minimal {}), degree {}\n",
        qp.period(),
        qp.minimal_period(),
        qp.degree().map_or("-".into(), |d| d.to_string())
    );
    pretty.push_str(&qp.to_string());
    let mut csv = String::from("residue,power,coefficient\n");
    let mut residues = Vec::new();
    for (r, p) in qp.residues().iter().enumerate() {
        let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
        for (power, c) in coeffs.iter().enumerate() {
            writeln!(csv, "{r},{power},{c}").unwrap();
        }
        residues.push(json!(coeffs));
    }
    Ok(Output::ok(
        pretty,
        json!({
            "family": family,
            "a": a,
            "numerator": factors.to_string(),
            "period": qp.period(),
            "minimal_period": qp.minimal_period(),
            "residues": residues,
        }),
        csv,
    ))
}

fn verify(oracle: &CharacterOracle, suite: Suite) -> Result<Output, Error> {
    let report = run_suite(oracle, suite)?;
    let passed = report.checks.iter().filter(|c| c.pass).count();
    let mut pretty = String::new();
    let mut csv = String::from("description,expected,actual,pass\n");
    for c in &report.checks {
        let mark = if c.pass { "ok  " } else { "FAIL" };
        writeln!(pretty, "{mark} {}", c.description).unwrap();
        if !c.pass {
            writeln!(pretty, "     expected {}\n     actual   {}", c.expected, c.actual).unwrap();
        }
        writeln!(csv, "\"{}\",\"{}\",\"{}\",{}", c.description, c.expected, c.actual, c.pass).unwrap();
    }
    writeln!(
        pretty,
        "{}: {passed}/{} checks passed in {:.2}s",
        report.suite,
        report.checks.len(),
        report.elapsed.as_secs_f64()
    )
    .unwrap();
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({"description": c.description, "expected": c.expected, "actual": c.actual, "pass": c.pass}))
        .collect();
    Ok(Output {
        pretty,
        json: json!({"suite": report.suite.name(), "passed": report.passed(), "checks": checks}),
        csv,
        status: if report.passed() { 0 } else { 1 },
    })
}
