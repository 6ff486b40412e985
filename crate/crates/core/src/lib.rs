//! Multiprecision spectral toolkit for the Laplacian of a cycle graph in
//! which a single edge carries a weight `alpha` with `Re(alpha) < 0`.
//!
//! The matrix is tridiagonal Toeplitz (`-1, 2, -1`) with four perturbed
//! corner entries. Its spectrum splits into `n - 1` "inner" eigenvalues in
//! `[0, 4]`, distributed like `4 sin^2(x/2)`, plus (once `n` exceeds the
//! threshold `kappa = (alpha - 1)/alpha`) one negative outlier that
//! converges exponentially to `4 alpha^2 / (2 alpha - 1)`.
//!
//! Everything is computed at a configurable binary precision (default 3322
//! bits, about 1000 decimal digits):
//!
//! * [`numeric`] — precision contexts and the real/complex scalar kernel;
//! * [`model`] — problem definition, scalar constants and the secular
//!   correction functions `eta` and `phi`;
//! * [`charpoly`] — the characteristic polynomial in its Chebyshev,
//!   factorized, trigonometric and hyperbolic forms;
//! * [`inner`] — localization and root solvers for the eigenvalues in
//!   `[0, 4]` (exact odd-index formulas, fixed point, guarded Newton,
//!   bisection);
//! * [`outlier`] — solvers for the negative outlier eigenvalue;
//! * [`asymptotics`] — closed-form eigenvalue approximations and their
//!   error tables;
//! * [`eigenvectors`] — eigenvector construction, exact and asymptotic
//!   norms, continuous profiles;
//! * [`oracle`] — formula-independent verification by determinant
//!   recurrences and Sylvester inertia counts;
//! * [`report`] — JSON/CSV serialization of all results;
//! * [`sweep`] — the cross-method verification sweep.

pub mod asymptotics;
pub mod charpoly;
pub mod eigenvectors;
pub mod error;
pub mod inner;
pub mod model;
pub mod numeric;
pub mod oracle;
pub mod outlier;
pub mod report;
pub mod sweep;

pub use error::{Error, Result};
pub use model::SpectralProblem;
pub use numeric::{Complex, PrecisionContext, Real};
