//! Exact computation of Kronecker and reduced Kronecker coefficients, the
//! combinatorics behind three families of them, and the generating functions
//! and quasipolynomials that count those families.

pub mod bijection;
pub mod character;
pub mod coloured;
pub mod error;
pub mod families;
pub mod partition;
pub mod plane;
pub mod poly;
pub mod quasipoly;
pub mod reduced;
pub mod series;
pub mod tableaux;
pub mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use bijection::{bij_family1, bij_family2, bij_family3, inv_bij_family3};
pub use character::{lr_coeff, CharacterOracle, CharacterTable, DEFAULT_ORACLE_CAP, MAX_ORACLE_CAP};
pub use coloured::{alphabet_b, alphabet_c, enumerate_coloured, ColouredPart, ColouredPartition, Decoration};
pub use error::{Error, Result};
pub use families::{
    diag_stable, family1, family2, family3, monotonicity_check, saturation_check, FamilyId, Sweep,
};
pub use partition::{contains, is_alpha_lattice, partitions_of, Partition, SkewShape};
pub use plane::{count_pp, enumerate_pp, PlanePartition};
pub use poly::{CyclotomicProduct, Polynomial};
pub use quasipoly::Quasipolynomial;
pub use reduced::{evaluation_point, padded_kron, reduced_kron, stability_threshold, stab, Pathway};
pub use series::PowerSeries;
pub use tableaux::{
    count_kron_tableaux, enumerate_kron_tableaux, is_kronecker_tableau, two_row_multiplicity,
    KroneckerTableau,
};

/// Power series with exact integer coefficients.
pub type IntegerSeries = PowerSeries<BigInt>;
/// Polynomial with exact integer coefficients.
pub type IntPolynomial = Polynomial<BigInt>;
/// Polynomial with exact rational coefficients.
pub type RatPolynomial = Polynomial<BigRational>;
/// Quasipolynomial with exact rational residues.
pub type RationalQuasipolynomial = Quasipolynomial<BigRational>;
