//! Permutations that ascend or descend in prescribed consecutive blocks, the
//! cycle-structure-preserving bijection sending them to colored ornaments, and
//! exact enumeration of derangements, involutions and cycle-type classes among
//! them.
//!
//! ```
//! use gr_core::{bijection, BlockSpec, Permutation};
//!
//! let b = BlockSpec::new(vec![2, 2], &[]).unwrap();
//! let p: Permutation = "3 4 1 2".parse().unwrap();
//! let o = bijection::forward(&p, &b).unwrap();
//! assert_eq!(o.to_string(), "(1 2)(1 2)");
//! assert_eq!(bijection::inverse(&o, &b).unwrap(), p);
//! ```

pub mod bijection;
pub mod enumeration;
mod error;
pub mod ornament;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
pub use ornament::{Necklace, Ornament, OrnamentFilter};
pub use perm::{BlockSpec, CycleType, Permutation};
