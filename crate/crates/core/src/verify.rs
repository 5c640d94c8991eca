//! Built-in self checks: reference values plus cross-checks between
//! independent pathways, grouped into suites.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bijection::{bij_family1, bij_family3, inv_bij_family3};
use crate::character::CharacterOracle;
use crate::coloured::{alphabet_b, alphabet_c, enumerate_coloured};
use crate::error::{Error, Result};
use crate::families::{
    diag_stable, family1, family2, family3, monotonicity_check, saturation_check, FamilyId, Sweep,
};
use crate::partition::Partition;
use crate::plane::{family3_convolution, macmahon_series, pp_weight_histogram};
use crate::poly::{lcm_up_to, numerator_polynomial};
use crate::quasipoly::{family1_quasipolynomial, family3_quasipolynomial};
use crate::reduced::stability_threshold;
use crate::series::{f_series, family1_exponents, g_series, PowerSeries};

/// `ḡ^{(k)}_{(k^a),(k^a)}` for `a = 0..=5`, `k = 0..=12`.
pub const FAMILY1_REFERENCE: [[u64; 13]; 6] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7],
    [1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57],
    [1, 1, 3, 5, 9, 13, 22, 30, 45, 61, 85, 111, 150],
    [1, 1, 3, 5, 10, 15, 26, 38, 60, 85, 125, 172, 243],
    [1, 1, 3, 5, 10, 16, 28, 42, 68, 100, 151, 215, 312],
];

/// `(i, row)` with `row[k] = ḡ^{(k)}_{((k+i)^2),(k^2)}` for `k = 0..=16`.
pub const FAMILY2_REFERENCE: [(usize, [u64; 17]); 5] = [
    (0, [1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66, 81, 93, 111]),
    (1, [0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66]),
    (2, [0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38]),
    (3, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17]),
    (4, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7]),
];

/// `row i, column k` of the third family with `a = 2`, `b = 3`.
pub const FAMILY3_REFERENCE: [[u64; 14]; 6] = [
    [1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66],
    [0, 1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67, 83, 102],
    [0, 0, 1, 2, 5, 8, 14, 20, 30, 40, 55, 70, 91, 112],
    [0, 0, 0, 1, 2, 5, 9, 15, 23, 34, 47, 64, 84, 108],
    [0, 0, 0, 0, 1, 2, 5, 9, 16, 24, 37, 51, 71, 93],
    [0, 0, 0, 0, 0, 1, 2, 5, 9, 16, 25, 38, 54, 75],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Oracle,
    Bijections,
    PlanePartitions,
    Quasipoly,
    Saturation,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Tables,
        Suite::Oracle,
        Suite::Bijections,
        Suite::PlanePartitions,
        Suite::Quasipoly,
        Suite::Saturation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Oracle => "oracle",
            Suite::Bijections => "bijections",
            Suite::PlanePartitions => "planepartitions",
            Suite::Quasipoly => "quasipoly",
            Suite::Saturation => "saturation",
            Suite::All => "all",
        }
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
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Default)]
struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn eq<T: PartialEq + fmt::Debug>(&mut self, description: impl Into<String>, expected: T, actual: T) {
        self.checks.push(Check {
            description: description.into(),
            pass: expected == actual,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }

    fn holds(&mut self, description: impl Into<String>, ok: bool) {
        self.eq(description, true, ok);
    }
}

/// Runs one suite, or all of them for [`Suite::All`].
pub fn run_suite(oracle: &CharacterOracle, suite: Suite) -> Result<RunReport> {
    let start = Instant::now();
    let mut rec = Recorder::default();
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    for s in suites {
        match s {
            Suite::Tables => tables(oracle, &mut rec)?,
            Suite::Oracle => oracle_checks(oracle, &mut rec)?,
            Suite::Bijections => bijections(&mut rec)?,
            Suite::PlanePartitions => plane_partitions(&mut rec)?,
            Suite::Quasipoly => quasipolys(&mut rec)?,
            Suite::Saturation => saturation(oracle, &mut rec)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(RunReport {
        suite,
        checks: rec.checks,
        elapsed: start.elapsed(),
    })
}

fn tables(oracle: &CharacterOracle, rec: &mut Recorder) -> Result<()> {
    for (a, row) in FAMILY1_REFERENCE.iter().enumerate() {
        let got = (0..row.len()).map(|k| family1(oracle, a, a, k)).collect::<Result<Vec<_>>>()?;
        rec.eq(format!("family 1 row a={a}"), row.to_vec(), got);
    }
    for (i, row) in FAMILY2_REFERENCE {
        let got = (0..row.len()).map(|k| family2(oracle, 2, 2, k, i)).collect::<Result<Vec<_>>>()?;
        rec.eq(format!("family 2 row a=2 i={i}"), row.to_vec(), got);
    }
    for (i, row) in FAMILY3_REFERENCE.iter().enumerate() {
        let got = (0..row.len()).map(|k| family3(oracle, 2, 3, k, i)).collect::<Result<Vec<_>>>()?;
        rec.eq(format!("family 3 row a=2 b=3 i={i}"), row.to_vec(), got);
    }
    let diagonal = (0..=5).map(|j| diag_stable(2, j)).collect::<Result<Vec<_>>>()?;
    rec.eq("stable diagonal a=2", vec![1, 2, 5, 9, 16, 25], diagonal);
    Ok(())
}

fn oracle_checks(oracle: &CharacterOracle, rec: &mut Recorder) -> Result<()> {
    for a in 1..=2 {
        for k in 1..=3 {
            let rectangle = Partition::rectangle(k, a);
            let row = Partition::rectangle(k, 1);
            let n = stability_threshold(&rectangle, &rectangle, &row).max(rectangle.padding_threshold());
            if n > oracle.cap() {
                continue;
            }
            let padded = rectangle.pad(n)?;
            let g = oracle.kronecker(&padded, &padded, &row.pad(n)?)?;
            rec.eq(format!("characters at n={n}, a={a} k={k}"), FAMILY1_REFERENCE[a][k], g);
        }
    }
    Ok(())
}

fn bijections(rec: &mut Recorder) -> Result<()> {
    for a in 1..=3 {
        let alphabet = alphabet_b(a)?;
        for k in 0..=6 {
            let betas = enumerate_coloured(&alphabet, k);
            let images = betas.iter().map(|b| bij_family1(b, a)).collect::<Result<BTreeSet<_>>>()?;
            rec.eq(format!("family 1 images a={a} k={k}"), f_series::<BigInt>(a, k).coeff(k), BigInt::from(images.len()));
        }
    }
    for a in 2..=3 {
        let alphabet = alphabet_c(a)?;
        for j in 0..=3 {
            let k = 2 * j;
            let betas = enumerate_coloured(&alphabet, j);
            let mut images = BTreeSet::new();
            let mut roundtrip = true;
            for b in &betas {
                let t = bij_family3(b, a, k)?;
                roundtrip &= &inv_bij_family3(&t, a, k)? == b;
                images.insert(t);
            }
            rec.eq(format!("family 3 images a={a} j={j}"), diag_stable(a, j)?, images.len() as u64);
            rec.holds(format!("family 3 roundtrip a={a} j={j}"), roundtrip);
        }
    }
    Ok(())
}

fn plane_partitions(rec: &mut Recorder) -> Result<()> {
    for r in 1..=3 {
        for s in 1..=3 {
            for t in 1..=3 {
                let hist: Vec<BigInt> = pp_weight_histogram(r, s, t).into_iter().map(BigInt::from).collect();
                let series = macmahon_series(r, s, t, r * s * t);
                rec.eq(format!("box ({r},{s},{t}) by weight"), series.coeffs().to_vec(), hist);
            }
        }
    }
    for a in 2..=4 {
        let conv = (0..=10).map(|j| family3_convolution(a, j)).collect::<Result<Vec<_>>>()?;
        let stable = (0..=10).map(|j| diag_stable(a, j)).collect::<Result<Vec<_>>>()?;
        rec.eq(format!("convolution a={a}"), stable, conv);
    }
    Ok(())
}

fn quasipolys(rec: &mut Recorder) -> Result<()> {
    let (_, factors) = numerator_polynomial(&family1_exponents(2), lcm_up_to(3), 4)?;
    rec.eq("numerator for a=2", "Phi2^2 Phi3^3 Phi6^4".to_string(), factors.to_string());
    for a in 1..=3 {
        let (qp, _) = family1_quasipolynomial(a)?;
        let series: PowerSeries<BigInt> = f_series(a, 200);
        let ok = (0..=200).all(|n| qp.eval(n) == BigRational::from_integer(series.coeff(n)));
        rec.holds(format!("family 1 quasipolynomial a={a} matches series"), ok);
        rec.eq(format!("family 1 degree a={a}"), Some(2 * a - 1), qp.degree());
    }
    for a in 2..=3 {
        let (qp, _) = family3_quasipolynomial(a)?;
        let series: PowerSeries<BigInt> = g_series(a, 200)?;
        let ok = (0..=200).all(|n| qp.eval(n) == BigRational::from_integer(series.coeff(n)));
        rec.holds(format!("family 3 quasipolynomial a={a} matches series"), ok);
        rec.eq(format!("family 3 degree a={a}"), Some(3 * a - 2), qp.degree());
    }
    Ok(())
}

fn saturation(oracle: &CharacterOracle, rec: &mut Recorder) -> Result<()> {
    for a in 1..=4 {
        for k in 0..=5 {
            rec.holds(format!("family 1 stretched a={a} k={k}"), saturation_check(oracle, FamilyId::First, a, k, 10)?);
        }
    }
    for a in 2..=3 {
        for j in 0..=4 {
            rec.holds(
                format!("stable diagonal stretched a={a} j={j}"),
                saturation_check(oracle, FamilyId::ThirdDiagonal, a, j, 10)?,
            );
        }
    }
    // Row a = 0 is the indicator of k = 0 and is left out.
    for a in 1..=5 {
        rec.holds(
            format!("family 1 row a={a} increases"),
            monotonicity_check(oracle, FamilyId::First, Sweep::OverK { a }, 0..=12)?,
        );
    }
    for k in 0..=12 {
        rec.holds(
            format!("family 1 column k={k} increases"),
            monotonicity_check(oracle, FamilyId::First, Sweep::OverA { k }, 0..=5)?,
        );
    }
    Ok(())
}
