//! Vanishing ideals of bivariate point sets over `𝔽_p` and `ℚ`.
//!
//! The Buchberger–Möller algorithm computes the reduced Gröbner basis `G`,
//! the éscalier `N` and a triangular Newton basis `Q` of the vanishing ideal
//! of a finite point set. [`spbm_run`] and [`gpbm_run`] seed the loop with a
//! Newton basis read off from line covers of the points, which skips most of
//! the linear algebra.
//!
//! ```
//! use vanish_core::{spbm_run, PointSet, Rationals, TermOrder};
//!
//! let ps = PointSet::from_ints(&Rationals, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
//! let r = spbm_run(&ps, TermOrder::Lex).unwrap();
//! let g: Vec<String> = r.g.iter().map(|p| p.display(TermOrder::Lex).to_string()).collect();
//! assert_eq!(g, ["y^2-y", "x^2-x"]);
//! ```

pub mod bm;
pub mod error;
pub mod field;
pub mod gen;
pub mod geometry;
pub mod io;
pub mod newton;
pub mod order;
pub mod poly;
pub mod verify;

pub use bm::{bm_run, border, gpbm_run, spbm_run, BmResult, BmState};
pub use error::{Error, Result};
pub use field::{make_field, Field, FieldSpec, PrimeField, Rationals};
pub use geometry::{
    is_cartesian, line_cover, max_cartesian_subset, Axis, CartesianSubset, CartesianTest, LineCover, LowerSet, Point,
    PointSet,
};
pub use newton::{evaluation_matrix, interpolate, newton_basis_cols, newton_basis_rows, EchelonMatrix, NewtonBasis};
pub use order::{Exponent, TermOrder};
pub use poly::Polynomial;
pub use verify::{check_newton, check_reduced_gb, check_vanishing, oracle_dense, verify_result, VerifyReport};
