//! Exact skein action of the symmetric group on noncrossing partitions.
//!
//! Permutations compose as functions, `(uv)(x) = u(v(x))`, and a word
//! `[i1, .., ik]` stands for the product `s_i1 ... s_ik`.

pub mod csp;
pub mod cyclotomic;
pub mod enumerate;
pub mod error;
pub mod intpart;
pub mod partition;
pub mod module;
pub mod perm;
pub mod projection;
pub mod qpoly;
pub mod report;
pub mod repr;
pub mod skein;
pub mod tl;
pub mod verify;
pub mod vector;

pub use enumerate::{enumerate, Filter};
pub use error::{Error, Result};
pub use intpart::IntegerPartition;
pub use partition::{CrossingClass, SetPartition};
pub use module::{BasisAction, Space};
pub use perm::{Permutation, Word};
pub use qpoly::QPoly;
pub use cyclotomic::CyclotomicInteger;
pub use report::{RunReport, Verdict};
pub use repr::{CycleType, GroupAlgebraElement, IntMatrix, SymSign};
pub use skein::SignedPartition;
pub use vector::NCVector;
