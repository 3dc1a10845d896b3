//! Strong Groebner bases for submodules of R[x1,...,xn]^k over the Euclidean
//! domains Z and Q, with exact linear system solving, Hermite normal forms
//! and row reduction as special cases.

pub mod error;
pub mod division;
pub mod euclid;
pub mod groebner;
pub mod linsys;
pub mod oracle;
pub mod polyvec;
pub mod text;
