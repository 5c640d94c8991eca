//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p kronecker-core --test acceptance`; add
//! `--release` for realistic timings.

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kronecker_core::families::{family2_via_kron, family3_via_kron};
use kronecker_core::plane::{box_series, lemma2_inverse, lemma2_transform, macmahon_series, pp_weight_histogram};
use kronecker_core::poly::{lcm_up_to, numerator_polynomial};
use kronecker_core::quasipoly::{family1_quasipolynomial, family3_quasipolynomial};
use kronecker_core::series::{f_series, family1_exponents, family3_exponents, g_series, h_series};
use kronecker_core::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(int(num), int(den))
}

/// Characters by removing rim hooks cell by cell, memoized on the shape and
/// how much of the cycle type is used. Independent of the library's bead
/// encoding.
struct NaiveCharacters {
    memo: HashMap<(Vec<usize>, Vec<usize>), i128>,
}

impl NaiveCharacters {
    fn new() -> Self {
        NaiveCharacters { memo: HashMap::new() }
    }

    fn chi(&mut self, shape: &[usize], rho: &[usize]) -> i128 {
        let Some((&r, rest)) = rho.split_first() else {
            return i128::from(shape.is_empty());
        };
        let key = (shape.to_vec(), rho.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let conj: Vec<usize> = (0..shape.first().copied().unwrap_or(0))
            .map(|c| shape.iter().filter(|&&row| row > c).count())
            .collect();
        let mut total = 0;
        for i in 0..shape.len() {
            for j in 0..shape[i] {
                let arm = shape[i] - j - 1;
                let leg = conj[j] - i - 1;
                if arm + leg + 1 != r {
                    continue;
                }
                let mut next = shape.to_vec();
                for t in i..i + leg {
                    next[t] = shape[t + 1] - 1;
                }
                next[i + leg] = j;
                while next.last() == Some(&0) {
                    next.pop();
                }
                let sign = if leg % 2 == 0 { 1 } else { -1 };
                total += sign * self.chi(&next, rest);
            }
        }
        self.memo.insert(key, total);
        total
    }

    fn kronecker(&mut self, a: &Partition, b: &Partition, c: &Partition) -> u64 {
        let n = a.size();
        let fact: i128 = (1..=n as i128).product();
        let mut sum = 0i128;
        for rho in partitions_of(n, None) {
            let r = rho.parts();
            // z = ∏ part · (number of equal parts seen so far)
            let mut z: i128 = 1;
            for (idx, &part) in r.iter().enumerate() {
                let run = r[..=idx].iter().filter(|&&q| q == part).count();
                z *= (part * run) as i128;
            }
            sum += fact / z * self.chi(a.parts(), r) * self.chi(b.parts(), r) * self.chi(c.parts(), r);
        }
        assert_eq!(sum % fact, 0);
        u64::try_from(sum / fact).expect("non-negative")
    }
}

const TABLE1: [[u64; 13]; 6] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7],
    [1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57],
    [1, 1, 3, 5, 9, 13, 22, 30, 45, 61, 85, 111, 150],
    [1, 1, 3, 5, 10, 15, 26, 38, 60, 85, 125, 172, 243],
    [1, 1, 3, 5, 10, 16, 28, 42, 68, 100, 151, 215, 312],
];

/// Rows as printed, with their printed labels.
const TABLE2: [(usize, [u64; 17]); 5] = [
    (0, [1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66, 81, 93, 111]),
    (1, [0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66]),
    (2, [0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38]),
    (4, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17]),
    (5, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7]),
];

const TABLE3: [[u64; 14]; 6] = [
    [1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66],
    [0, 1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67, 83, 102],
    [0, 0, 1, 2, 5, 8, 14, 20, 30, 40, 55, 70, 91, 112],
    [0, 0, 0, 1, 2, 5, 9, 15, 23, 34, 47, 64, 84, 108],
    [0, 0, 0, 0, 1, 2, 5, 9, 16, 24, 37, 51, 71, 93],
    [0, 0, 0, 0, 0, 1, 2, 5, 9, 16, 25, 38, 54, 75],
];

fn table1() -> Outcome {
    let oracle = CharacterOracle::new();
    let mut cells = 0;
    for (a, row) in TABLE1.iter().enumerate() {
        for (k, &want) in row.iter().enumerate() {
            let got = family1(&oracle, a, a, k).map_err(|e| e.to_string())?;
            ensure!(got == want, "a={a} k={k}: got {got}, table has {want}");
            if a >= 1 {
                let coloured = enumerate_coloured(&alphabet_b(a).unwrap(), k).len() as u64;
                ensure!(coloured == want, "a={a} k={k}: {coloured} coloured partitions");
            }
            cells += 1;
        }
    }
    Ok(format!("{cells} cells from the series, rows a>=1 also by coloured partitions"))
}

fn table2() -> Outcome {
    let oracle = CharacterOracle::new();
    let small = CharacterOracle::with_cap(0).unwrap();
    // The last two printed rows carry labels 4 and 5, but their zero prefixes
    // (9 and 12 zeros) are those of i = 3 and i = 4 under k < 3i.
    for (label, row) in TABLE2 {
        let first_nonzero = row.iter().position(|&v| v != 0).unwrap();
        let i = first_nonzero / 3;
        ensure!(first_nonzero == 3 * i, "row {label}: {first_nonzero} leading zeros is not a multiple of 3");
        ensure!(label == i || (label, i) == (4, 3) || (label, i) == (5, 4), "unexpected label {label} for i={i}");
        for (k, &want) in row.iter().enumerate() {
            let got = family2(&oracle, 2, 2, k, i).map_err(|e| e.to_string())?;
            ensure!(got == want, "i={i} k={k}: got {got}, table has {want}");
            let kron = family2_via_kron(&small, 2, 2, k, i).map_err(|e| e.to_string())?;
            ensure!(kron == want, "i={i} k={k}: tableau pathway gives {kron}, table has {want}");
        }
    }
    for i in 0..=5 {
        for k in 0..=16 {
            let got = family2(&oracle, 2, 2, k, i).map_err(|e| e.to_string())?;
            ensure!((got == 0) == (k < 3 * i), "zero prefix fails at i={i} k={k}");
        }
    }
    Ok("85 cells by series and by tableaux; rows printed as i=4,5 are i=3,4".into())
}

fn table3() -> Outcome {
    let oracle = CharacterOracle::new();
    let mut independent = 0;
    for (i, row) in TABLE3.iter().enumerate() {
        for (k, &want) in row.iter().enumerate() {
            let got = family3(&oracle, 2, 3, k, i).map_err(|e| e.to_string())?;
            ensure!(got == want, "i={i} k={k}: got {got}, table has {want}");
            let kron = family3_via_kron(&oracle, 2, 3, k, i).map_err(|e| e.to_string())?;
            ensure!(kron == want, "i={i} k={k}: reduced pathway gives {kron}, table has {want}");
            independent += 1;
        }
    }
    let bold: Vec<u64> = (0..=5).map(|j| diag_stable(2, j).unwrap()).collect();
    ensure!(bold == [1, 2, 5, 9, 16, 25], "stable diagonal {bold:?}");
    for (i, row) in TABLE3.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            if k >= i && k >= 2 * (k - i) {
                ensure!(v == bold[k - i], "bold cell i={i} k={k} is not the stable value");
            }
        }
    }
    Ok(format!("{independent} cells by both pathways, diagonal 1,2,5,9,16,25"))
}

fn oracle_crosscheck() -> Outcome {
    let oracle = CharacterOracle::new();
    let mut naive = NaiveCharacters::new();
    let mut done = Vec::new();
    for a in 1..=2 {
        for k in 0..=3 {
            let rectangle = Partition::rectangle(k, a);
            let row = Partition::rectangle(k, 1);
            let n = stability_threshold(&rectangle, &rectangle, &row);
            let (x, y) = (rectangle.pad(n).map_err(|e| e.to_string())?, row.pad(n).map_err(|e| e.to_string())?);
            let g = oracle.kronecker(&x, &x, &y).map_err(|e| e.to_string())?;
            ensure!(g == TABLE1[a][k], "a={a} k={k} n={n}: characters give {g}");
            let h = naive.kronecker(&x, &x, &y);
            ensure!(h == g, "a={a} k={k} n={n}: rim-hook oracle gives {h}");
            done.push(n);
        }
    }
    Ok(format!("8 cells by characters at n in {done:?}"))
}

fn two_row_rule() -> Outcome {
    let oracle = CharacterOracle::new();
    let mut naive = NaiveCharacters::new();
    for n in 0..=6 {
        let shapes: Vec<Partition> = partitions_of(n, None).collect();
        for x in &shapes {
            for y in &shapes {
                for z in &shapes {
                    let want = naive.kronecker(x, y, z);
                    let got = oracle.kronecker(x, y, z).map_err(|e| e.to_string())?;
                    ensure!(got == want, "oracle disagrees with rim hooks on {x} {y} {z}");
                }
            }
        }
    }
    let mut compared = 0;
    for n in 2..=10 {
        let shapes: Vec<Partition> = partitions_of(n, None).collect();
        for p_ in 1..=3usize {
            if n < 2 * p_ {
                continue;
            }
            let two_row = p(&[n - p_, p_]);
            for lambda in &shapes {
                if lambda.first() + 1 < 2 * p_ && lambda.len() + 1 < 2 * p_ {
                    continue;
                }
                for nu in &shapes {
                    let rule = two_row_multiplicity(n, p_, lambda, nu).map_err(|e| e.to_string())?;
                    let chars = oracle.kronecker(&two_row, lambda, nu).map_err(|e| e.to_string())?;
                    ensure!(rule == chars, "n={n} p={p_} {lambda} {nu}: rule {rule}, characters {chars}");
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("{compared} pairs; oracle itself matched rim hooks for every triple with n <= 6"))
}

fn brute_histogram(r: usize, s: usize, t: usize) -> Vec<u64> {
    let cells = r * s;
    let mut hist = vec![0u64; cells * t + 1];
    for code in 0..(t + 1).pow(cells as u32) {
        let mut c = code;
        let g: Vec<usize> = (0..cells)
            .map(|_| {
                let v = c % (t + 1);
                c /= t + 1;
                v
            })
            .collect();
        let ok = (0..cells).all(|x| {
            let (i, j) = (x / s, x % s);
            (j == 0 || g[x - 1] >= g[x]) && (i == 0 || g[x - s] >= g[x])
        });
        if ok {
            hist[g.iter().sum::<usize>()] += 1;
        }
    }
    hist
}

fn macmahon() -> Outcome {
    for r in 1..=4 {
        for s in 1..=4 {
            for t in 1..=4 {
                let hist: Vec<BigInt> = pp_weight_histogram(r, s, t).into_iter().map(BigInt::from).collect();
                let series = macmahon_series(r, s, t, r * s * t);
                ensure!(series.coeffs() == hist.as_slice(), "box ({r},{s},{t}) histogram differs from the product");
                if r * s <= 6 && t <= 2 {
                    let brute: Vec<BigInt> = brute_histogram(r, s, t).into_iter().map(BigInt::from).collect();
                    ensure!(brute == hist, "box ({r},{s},{t}) enumeration differs from brute force");
                }
            }
            let n = 20;
            ensure!(box_series(r, s, n) == macmahon_series(r, s, n, n), "unbounded ({r},{s}) differs at N={n}");
        }
    }
    let start: Vec<BigInt> = box_series(2, 2, 4).coeffs().to_vec();
    ensure!(start == [1, 1, 3, 4, 7].map(int), "box (2,2) begins {start:?}");
    for a in 1..=5 {
        let s = box_series(2, a, 12);
        for k in 0..=12 {
            ensure!(s.coeff(k) == int(TABLE1[a][k] as i64), "2 x {a} rectangle at {k}");
        }
    }
    Ok("64 boxes, unbounded height at N=20, 2 x a rectangles match the first table".into())
}

fn certify_family1(a: usize, k: usize, full: bool) -> std::result::Result<usize, String> {
    let betas = enumerate_coloured(&alphabet_b(a).unwrap(), k);
    let lambda = p(&[vec![3 * k], vec![k; a]].concat());
    let mut image = BTreeSet::new();
    for beta in &betas {
        let t = bij_family1(beta, a).map_err(|e| e.to_string())?;
        ensure!(
            is_kronecker_tableau(&t, &lambda, &lambda, t.inner()).map_err(|e| e.to_string())?,
            "a={a} beta={beta} gives an invalid tableau"
        );
        ensure!(t.inner().size() == k, "a={a} beta={beta}: alpha {} has the wrong size", t.inner());
        image.insert(t);
    }
    ensure!(image.len() == betas.len(), "a={a} k={k}: map is not injective");
    let value = family1(&CharacterOracle::new(), a, a, k).map_err(|e| e.to_string())?;
    ensure!(value as usize == betas.len(), "a={a} k={k}: {} coloured partitions vs coefficient {value}", betas.len());
    if full {
        let all: BTreeSet<KroneckerTableau> = partitions_of(k, None)
            .flat_map(|alpha| enumerate_kron_tableaux(&lambda, &lambda, &alpha))
            .collect();
        ensure!(all == image, "a={a} k={k}: image is not the full tableau set");
    }
    Ok(betas.len())
}

fn certify_family3(a: usize, j: usize) -> std::result::Result<usize, String> {
    let k = 2 * j;
    let betas = enumerate_coloured(&alphabet_c(a).unwrap(), j);
    let lambda = p(&[vec![3 * k], vec![k; a]].concat());
    let nu = p(&[vec![2 * k + j, 2 * k - j], vec![k; a - 1]].concat());
    let mut image = BTreeSet::new();
    for beta in &betas {
        let t = bij_family3(beta, a, k).map_err(|e| e.to_string())?;
        ensure!(
            is_kronecker_tableau(&t, &lambda, &nu, t.inner()).map_err(|e| e.to_string())?,
            "a={a} beta={beta} gives an invalid tableau"
        );
        let back = inv_bij_family3(&t, a, k).map_err(|e| e.to_string())?;
        ensure!(&back == beta, "a={a}: {beta} comes back as {back}");
        image.insert(t);
    }
    ensure!(image.len() == betas.len(), "a={a} j={j}: map is not injective");
    let stable = diag_stable(a, j).map_err(|e| e.to_string())?;
    ensure!(stable as usize == betas.len(), "a={a} j={j}: {} coloured partitions vs {stable}", betas.len());
    let all: BTreeSet<KroneckerTableau> = partitions_of(k, None)
        .flat_map(|alpha| enumerate_kron_tableaux(&lambda, &nu, &alpha))
        .collect();
    ensure!(all == image, "a={a} j={j}: image is not the full tableau set");
    Ok(betas.len())
}

fn rows(chunks: &[&[(usize, usize)]]) -> Vec<Vec<usize>> {
    chunks
        .iter()
        .map(|row| row.iter().flat_map(|&(v, n)| std::iter::repeat(v).take(n)).collect())
        .collect()
}

fn bijections() -> Outcome {
    let mut total = 0;
    for a in 1..=3 {
        for k in 0..=8 {
            total += certify_family1(a, k, k <= 6)?;
        }
    }
    for a in 2..=3 {
        for j in 0..=4 {
            total += certify_family3(a, j)?;
        }
    }

    // Third family, a=3, j=3, k=7, beta = (2 double bar, 1): every cell as drawn.
    let beta: ColouredPartition = "2~~,1".parse().unwrap();
    let t = bij_family3(&beta, 3, 7).map_err(|e| e.to_string())?;
    let drawn = rows(&[
        &[(1, 11), (2, 4), (4, 1)],
        &[(1, 1), (2, 5)],
        &[(3, 6)],
        &[(2, 1), (4, 6)],
    ]);
    ensure!(t.inner() == &p(&[5, 1, 1]), "third-family example alpha {}", t.inner());
    ensure!(t.rows() == drawn.as_slice(), "third-family example differs:\n{t}");

    // First family, a=3, beta = (2, 1 bar), alpha=(2,1), lambda=nu=(9,3,3,3).
    // Rows 2-4 are drawn exactly as produced. The drawn first row
    // [1,1,1,1,1,2,3] has six 1s and four 3s overall, which is not the type
    // (9,3,3,3)/(2,1); the construction's first row [1^6, 2] is the only
    // completion of the drawn rows 2-4 with that type.
    let beta: ColouredPartition = "2,1~".parse().unwrap();
    let t = bij_family1(&beta, 3).map_err(|e| e.to_string())?;
    let lambda = p(&[9, 3, 3, 3]);
    let alpha = p(&[2, 1]);
    ensure!(t.inner() == &alpha && t.outer() == &lambda, "first-family example shape {}/{}", t.outer(), t.inner());
    let drawn = rows(&[&[(1, 5), (2, 1), (3, 1)], &[(1, 1), (2, 1)], &[(3, 3)], &[(4, 3)]]);
    ensure!(t.rows()[1..] == drawn[1..], "first-family example rows 2-4 differ:\n{t}");
    ensure!(t.rows()[0] == rows(&[&[(1, 6), (2, 1)]])[0], "first-family example row 1 is {:?}", t.rows()[0]);
    let as_drawn = KroneckerTableau::new(lambda.clone(), alpha.clone(), drawn).unwrap();
    ensure!(
        !is_kronecker_tableau(&as_drawn, &lambda, &lambda, &alpha).unwrap(),
        "drawn first-family tableau was expected to have the wrong type"
    );
    let completions = enumerate_kron_tableaux(&lambda, &lambda, &alpha)
        .filter(|c| c.rows()[1..] == t.rows()[1..])
        .count();
    ensure!(completions == 1, "{completions} completions of the drawn rows 2-4");

    Ok(format!(
        "{total} coloured partitions certified; third-family example exact; first-family example exact \
         except its drawn first row, which has the wrong type"
    ))
}

fn quasipolynomials() -> Outcome {
    let (p2, factors) = numerator_polynomial(&family1_exponents(2), 6, 4).map_err(|e| e.to_string())?;
    ensure!(factors.to_string() == "Phi2^2 Phi3^3 Phi6^4", "P2 factors as {factors}");
    ensure!(p2.degree() == Some(16), "P2 has degree {:?}", p2.degree());

    let poly = |c: [(i64, i64); 4]| -> Vec<BigRational> { c.iter().map(|&(n, d)| rat(n, d)).collect() };
    let (qp1, _) = family1_quasipolynomial(2).map_err(|e| e.to_string())?;
    let printed1 = [
        [(1, 1), (2, 3), (1, 6), (1, 72)],
        [(5, 18), (13, 24), (1, 6), (1, 72)],
        [(8, 9), (2, 3), (1, 6), (1, 72)],
        [(1, 2), (13, 24), (1, 6), (1, 72)],
        [(7, 9), (2, 3), (1, 6), (1, 72)],
        [(7, 18), (13, 24), (1, 6), (1, 72)],
    ];
    for (r, c) in printed1.iter().enumerate() {
        ensure!(qp1.residue(r).coeffs() == poly(*c).as_slice(), "first family residue {r}");
    }
    let (qp3, _) = family3_quasipolynomial(2).map_err(|e| e.to_string())?;
    let tail = [(7, 18), (1, 16), (1, 288)];
    let printed3 = [[(1, 1), (1, 1)], [(175, 288), (15, 16)], [(8, 9), (1, 1)], [(23, 32), (15, 16)], [(8, 9), (1, 1)], [(175, 288), (15, 16)]];
    for (r, c) in printed3.iter().enumerate() {
        let want: Vec<BigRational> = c.iter().chain(&tail).map(|&(n, d)| rat(n, d)).collect();
        ensure!(qp3.residue(r).coeffs() == want.as_slice(), "third family residue {r}");
    }
    ensure!(qp1.minimal_period() == 6 && qp3.minimal_period() == 6, "periods are not 6");

    for a in 1..=4 {
        let ell = lcm_up_to(a + 1);
        let (pa, _) = numerator_polynomial(&family1_exponents(a), ell, 2 * a).map_err(|e| e.to_string())?;
        ensure!(pa.degree() == Some(2 * a * ell - (a + 2) * a), "deg P_{a} = {:?}", pa.degree());
        let (qa, _) = numerator_polynomial(&family3_exponents(a).unwrap(), ell, 3 * a - 1).map_err(|e| e.to_string())?;
        ensure!(qa.degree() == Some(ell * (3 * a - 1) - 3 * (a * a + a) / 2), "deg Q_{a} = {:?}", qa.degree());

        let (f, _) = family1_quasipolynomial(a).map_err(|e| e.to_string())?;
        let (g, _) = family3_quasipolynomial(a).map_err(|e| e.to_string())?;
        let fs = f_series::<BigInt>(a, 200);
        let gs = g_series::<BigInt>(a, 200).unwrap();
        for n in 0..=200 {
            ensure!(f.eval(n) == BigRational::from_integer(fs.coeff(n)), "first family a={a} n={n}");
            ensure!(g.eval(n) == BigRational::from_integer(gs.coeff(n)), "third family a={a} n={n}");
        }
        ensure!(f.degree() == Some(2 * a - 1) && g.degree() == Some(3 * a - 2), "degrees for a={a}");
        ensure!(f.minimal_period() == ell && g.minimal_period() == ell, "a={a}: period is not {ell}");
    }
    Ok("all 12 printed residues exact; degrees, periods and n <= 200 checked for a <= 4".into())
}

fn lemma() -> Outcome {
    for a in 1..=5 {
        let h: Vec<BigInt> = h_series::<BigInt>(a, 100).unwrap().into_coeffs();
        let g: Vec<BigInt> = g_series::<BigInt>(a, 100).unwrap().into_coeffs();
        ensure!(lemma2_transform(&h) == g, "transform of H_{a} is not G_{a}");
        ensure!(lemma2_inverse(&g) == h, "inverse recursion fails for a={a}");
    }
    Ok("a = 1..5, n <= 100".into())
}

fn saturation_and_growth() -> Outcome {
    let oracle = CharacterOracle::new();
    for a in 0..=4 {
        for k in 0..=5 {
            let positive = family1(&oracle, a, a, k).unwrap() > 0;
            let stretched = saturation_check(&oracle, FamilyId::First, a, k, 10).unwrap();
            ensure!(positive == stretched, "first family a={a} k={k}: positive {positive}, stretched {stretched}");
        }
    }
    for a in 1..=3 {
        for j in 0..=4 {
            ensure!(
                saturation_check(&oracle, FamilyId::ThirdDiagonal, a, j, 10).unwrap(),
                "stable diagonal a={a} j={j} loses positivity"
            );
        }
    }
    // The a = 0 row is the indicator of k = 0; growth concerns a >= 1.
    for a in 1..=5 {
        ensure!(
            monotonicity_check(&oracle, FamilyId::First, Sweep::OverK { a }, 0..=12).unwrap(),
            "row a={a} decreases"
        );
        ensure!(TABLE1[a].windows(2).all(|w| w[0] <= w[1]), "printed row a={a} decreases");
    }
    for k in 0..=12 {
        ensure!(
            monotonicity_check(&oracle, FamilyId::First, Sweep::OverA { k }, 0..=5).unwrap(),
            "column k={k} decreases"
        );
    }
    Ok("stretches up to s=10; rows a=1..5 and all 13 columns weakly increase".into())
}

fn stabilization() -> Outcome {
    let oracle = CharacterOracle::new();
    let small: Vec<Partition> = (0..=3).flat_map(|n| partitions_of(n, None)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut longest = 0;
    for _ in 0..50 {
        let [a, b, c] = [(); 3].map(|_| small.choose(&mut rng).unwrap().clone());
        let start = evaluation_point(&a, &b, &c);
        ensure!(start <= 14, "threshold {start} above 14 for {a} {b} {c}");
        let seq = kronecker_core::reduced::stabilization_sequence(&oracle, &a, &b, &c, start, 14)
            .map_err(|e| e.to_string())?;
        ensure!(seq.iter().all(|&g| g == seq[0]), "({a}) ({b}) ({c}) from n={start}: {seq:?}");
        longest = longest.max(seq.len());
    }
    Ok(format!("50 seeded triples constant up to n = 14 (longest run {longest})"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("first-family table", table1),
        ("second-family table", table2),
        ("third-family table", table3),
        ("character oracle cross-check", oracle_crosscheck),
        ("two-row rule against characters", two_row_rule),
        ("plane partitions in a box", macmahon),
        ("bijections", bijections),
        ("quasipolynomials", quasipolynomials),
        ("convolution transform", lemma),
        ("stretching and growth", saturation_and_growth),
        ("stabilization of random triples", stabilization),
    ];
    let mut failed = 0;
    let started = Instant::now();
    for (number, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = secs(t0.elapsed());
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({elapsed}): {detail}", number + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({elapsed}): {why}", number + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {}",
        criteria.len() - failed,
        secs(started.elapsed())
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}
