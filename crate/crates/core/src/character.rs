//! Symmetric-group characters by the Murnaghan–Nakayama rule, and the
//! Kronecker and Littlewood–Richardson coefficients built on them.
//!
//! Shapes are encoded as bead sets (beta-numbers) in a `u128`; removing a
//! border strip of length `r` moves one bead down by `r` places.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::tableaux;

/// Largest `n` the oracle accepts unless configured otherwise.
pub const DEFAULT_ORACLE_CAP: usize = 25;

/// Character values are accumulated in `i128`, which is exact up to here.
pub const MAX_ORACLE_CAP: usize = 50;

/// Conjugacy classes of one symmetric group with their sizes.
#[derive(Debug)]
struct Classes {
    types: Vec<Partition>,
    sizes: Vec<BigInt>,
    factorial: BigInt,
}

impl Classes {
    fn new(n: usize) -> Self {
        let factorial: BigUint = (1..=n).map(BigUint::from).product();
        let types: Vec<Partition> = partitions_of(n, None).collect();
        let sizes = types
            .iter()
            .map(|rho| BigInt::from(&factorial / rho.z_weight()))
            .collect();
        Classes {
            types,
            sizes,
            factorial: BigInt::from(factorial),
        }
    }
}

/// Memoized character oracle. Cheap to share between threads; all caches
/// only ever store fully computed values.
#[derive(Debug)]
pub struct CharacterOracle {
    cap: usize,
    classes: RwLock<HashMap<usize, Arc<Classes>>>,
    rows: RwLock<HashMap<Partition, Arc<Vec<i128>>>>,
}

impl Default for CharacterOracle {
    fn default() -> Self {
        CharacterOracle::new()
    }
}

impl CharacterOracle {
    pub fn new() -> Self {
        CharacterOracle {
            cap: DEFAULT_ORACLE_CAP,
            classes: RwLock::new(HashMap::new()),
            rows: RwLock::new(HashMap::new()),
        }
    }

    /// An oracle refusing every `n` above `cap`. `cap = 0` disables it.
    pub fn with_cap(cap: usize) -> Result<Self> {
        if cap > MAX_ORACLE_CAP {
            return Err(Error::Unsupported(format!(
                "oracle cap {cap} is above the supported maximum {MAX_ORACLE_CAP}"
            )));
        }
        Ok(CharacterOracle {
            cap,
            ..CharacterOracle::new()
        })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_scale(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::OracleScaleExceeded { n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    fn classes(&self, n: usize) -> Arc<Classes> {
        if let Some(c) = self.classes.read().expect("class cache").get(&n) {
            return Arc::clone(c);
        }
        let built = Arc::new(Classes::new(n));
        let mut cache = self.classes.write().expect("class cache");
        Arc::clone(cache.entry(n).or_insert(built))
    }

    /// `χ^λ` on every class of `S_n`, in the order of [`partitions_of`].
    fn row(&self, lambda: &Partition) -> Arc<Vec<i128>> {
        if let Some(r) = self.rows.read().expect("row cache").get(lambda) {
            return Arc::clone(r);
        }
        let classes = self.classes(lambda.size());
        let mut eval = StripRemoval::new(lambda);
        let row: Vec<i128> = classes.types.iter().map(|rho| eval.value(rho)).collect();
        let row = Arc::new(row);
        let mut cache = self.rows.write().expect("row cache");
        Arc::clone(cache.entry(lambda.clone()).or_insert(row))
    }

    /// `χ^λ(ρ)`.
    pub fn character(&self, lambda: &Partition, rho: &Partition) -> Result<BigInt> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch(format!(
                "|{lambda}| = {} but |{rho}| = {}",
                lambda.size(),
                rho.size()
            )));
        }
        self.check_scale(lambda.size())?;
        Ok(BigInt::from(StripRemoval::new(lambda).value(rho)))
    }

    /// The Kronecker coefficient `g_{λμν}`, symmetric in its arguments.
    pub fn kronecker(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        let n = lambda.size();
        if mu.size() != n || nu.size() != n {
            return Err(Error::SizeMismatch(format!(
                "sizes {}, {}, {} of {lambda} / {mu} / {nu} differ",
                n,
                mu.size(),
                nu.size()
            )));
        }
        self.check_scale(n)?;
        let classes = self.classes(n);
        let (a, b, c) = (self.row(lambda), self.row(mu), self.row(nu));
        let mut total = BigInt::zero();
        for (idx, size) in classes.sizes.iter().enumerate() {
            let prod = BigInt::from(a[idx]) * BigInt::from(b[idx]) * BigInt::from(c[idx]);
            if !prod.is_zero() {
                total += prod * size;
            }
        }
        let (g, rem) = total.div_rem(&classes.factorial);
        if !rem.is_zero() || g.is_negative() {
            return Err(Error::Inconsistent(format!(
                "character sum for ({lambda}; {mu}; {nu}) is not a non-negative multiple of n!"
            )));
        }
        g.to_u64()
            .ok_or_else(|| Error::ScaleExceeded(format!("coefficient {g} does not fit in 64 bits")))
    }

    /// All non-zero `g_{λμν}` as `λ` ranges over the partitions of `|μ|`.
    pub fn kronecker_product(
        &self,
        mu: &Partition,
        nu: &Partition,
    ) -> Result<BTreeMap<Partition, u64>> {
        if mu.size() != nu.size() {
            return Err(Error::SizeMismatch(format!(
                "|{mu}| = {} but |{nu}| = {}",
                mu.size(),
                nu.size()
            )));
        }
        self.check_scale(mu.size())?;
        let shapes: Vec<Partition> = partitions_of(mu.size(), None).collect();
        let values = shapes
            .par_iter()
            .map(|lambda| self.kronecker(lambda, mu, nu).map(|g| (lambda.clone(), g)))
            .collect::<Result<Vec<_>>>()?;
        Ok(values.into_iter().filter(|(_, g)| *g > 0).collect())
    }

    /// The full character table of `S_n`.
    pub fn character_table(&self, n: usize) -> Result<CharacterTable> {
        self.check_scale(n)?;
        let classes = self.classes(n);
        let values = classes
            .types
            .par_iter()
            .map(|lambda| self.row(lambda).iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Ok(CharacterTable {
            n,
            partitions: classes.types.clone(),
            values,
        })
    }
}

/// Characters of `S_n`: `values[i][j] = χ^{partitions[i]}(partitions[j])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Option<&BigInt> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.partitions.iter().position(|p| p == rho)?;
        Some(&self.values[i][j])
    }
}

/// Littlewood–Richardson coefficient `c^γ_{αβ}`.
pub fn lr_coeff(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<u64> {
    if alpha.size() + beta.size() != gamma.size() {
        return Err(Error::SizeMismatch(format!(
            "|{alpha}| + |{beta}| != |{gamma}|"
        )));
    }
    Ok(tableaux::count_lr_fillings(alpha, beta, gamma))
}

fn bead_mask(lambda: &Partition) -> u128 {
    let len = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .fold(0u128, |m, (i, &p)| m | 1u128 << (p + len - 1 - i))
}

/// Drops beads sitting at the bottom of the abacus (zero parts).
fn normalize(mut mask: u128) -> u128 {
    while mask & 1 == 1 {
        mask >>= 1;
    }
    mask
}

/// One memo table per starting shape; cycle types share suffixes.
struct StripRemoval {
    start: u128,
    memo: HashMap<(u128, u32), i128>,
    suffixes: HashMap<Vec<usize>, u32>,
}

impl StripRemoval {
    fn new(lambda: &Partition) -> Self {
        assert!(lambda.size() < 127, "bead mask limited to n < 127");
        StripRemoval {
            start: normalize(bead_mask(lambda)),
            memo: HashMap::new(),
            suffixes: HashMap::new(),
        }
    }

    fn value(&mut self, rho: &Partition) -> i128 {
        let parts = rho.parts();
        let ids: Vec<u32> = (0..parts.len())
            .map(|k| {
                let next = self.suffixes.len() as u32;
                *self.suffixes.entry(parts[k..].to_vec()).or_insert(next)
            })
            .collect();
        self.eval(self.start, parts, &ids)
    }

    fn eval(&mut self, mask: u128, parts: &[usize], ids: &[u32]) -> i128 {
        let Some((&r, rest)) = parts.split_first() else {
            return i128::from(mask == 0);
        };
        let key = (mask, ids[0]);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0i128;
        let mut beads = mask >> r;
        let mut pos = r;
        while beads != 0 {
            if beads & 1 == 1 && mask & (1u128 << (pos - r)) == 0 {
                let between = mask & ((1u128 << pos) - 1) & !((1u128 << (pos - r + 1)) - 1);
                let next = normalize(mask ^ (1u128 << pos) ^ (1u128 << (pos - r)));
                let v = self.eval(next, rest, &ids[1..]);
                if between.count_ones().is_multiple_of(2) {
                    total += v;
                } else {
                    total -= v;
                }
            }
            beads >>= 1;
            pos += 1;
        }
        self.memo.insert(key, total);
        total
    }
}
