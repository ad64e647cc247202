//! Exact generalized inverses of quaternion matrices.
//!
//! Entries are quaternions over arbitrary-precision rationals, so every result is
//! exact. Inverses are computed from row and column determinants ([`ncdet`]) and
//! cross-checked against elimination-based reference implementations ([`oracle`]).
//!
//! ```
//! use quatinv::{geninv, FormSelector, QMatrix};
//!
//! let a = QMatrix::from_int_rows(&[
//!     vec![[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]],
//!     vec![[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0]],
//!     vec![[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]],
//! ])?;
//! let pinv = geninv::mp_inverse(&a, FormSelector::Auto)?;
//! assert_eq!(pinv.at(2, 1).to_string(), "-1/2k");
//! # Ok::<(), quatinv::Error>(())
//! ```

pub mod cli;
pub mod coreinv;
pub mod error;
pub mod exactq;
pub mod geninv;
pub mod ncdet;
pub mod oracle;
pub mod qmatrix;
pub mod sampling;

pub use coreinv::{CmpVariant, CompositionRoute, CoreMethod, DetForm, Reading, Side, Specialization};
pub use error::{Error, Result};
pub use exactq::{Quaternion, Rational};
pub use geninv::FormSelector;
pub use ncdet::{cdet, det_rank, hdet, matrix_index, minor_sum, rdet};
pub use oracle::{System, VerificationReport};
pub use qmatrix::{Axis, IndexSet, QMatrix};
