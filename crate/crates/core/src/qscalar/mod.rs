//! Exact coefficient arithmetic: `Q(q)` for an indeterminate `q`, or the
//! cyclotomic field `Q(zeta_p)` when `q` is a primitive `p`-th root of unity.

mod cyclo;
mod poly;
mod qcomb;
mod ratfunc;
mod scalar;

pub use cyclo::{cyclotomic_poly, euler_phi, CycloNum};
pub use poly::IntPoly;
pub use qcomb::{inv_q_minus_one_pow, q_binomial, q_int, struct_c, struct_d};
pub use ratfunc::RatFunc;
pub use scalar::{Scalar, ScalarContext, ScalarMode};
