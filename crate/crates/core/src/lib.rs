//! Reductions of generalized Catalan lists and of Kostka pairs.
//!
//! A list of nonzero integers is *Catalan* when it sums to zero and every
//! prefix sum is nonnegative. It is *reducible* when its positions split into
//! two nonempty sets that each carry a Catalan sublist. [`reduce`] decides
//! this constructively whenever the list's cost does not exceed its width,
//! and [`common_reduce`] lifts the result to pairs of partitions through their
//! column vectors.
//!
//! ```
//! use gdp_core::{reduce, SignedList, DEFAULT_SEARCH_LIMIT};
//!
//! let xs: SignedList = "2,2,-2,-2".parse().unwrap();
//! let outcome = reduce(&xs, DEFAULT_SEARCH_LIMIT).unwrap();
//! assert_eq!(outcome.decomposition().unwrap().part, vec![1, 3]);
//! ```

pub mod catalan;
pub mod error;
pub mod kostka;
pub mod oracle;
pub mod reducer;
pub mod staircase;

pub use catalan::{
    complement_positions, is_catalan_values, is_valid_decomposition, normalize_positions,
    prefix_sums, Decomposition, Run, RunProfile, Sign, SignedList,
};
pub use error::{Error, Result};
pub use kostka::{
    column_vector, common_reduce, common_reduce_with_limit, conjugate, dominates, restrict_columns,
    verify_column_split, verify_column_split_by_vector, ColumnSplit, IrreducibleReason,
    KostkaCertificate, KostkaOutcome, KostkaPair, Partition, Rectangle,
};
pub use oracle::SearchBudget;
pub use reducer::{
    phase_profile, reduce, reduce_equality, reduce_strict, reduce_y1, Certificate, PhaseProfile,
    ReduceOutcome, Route, DEFAULT_SEARCH_LIMIT,
};
pub use staircase::{
    build_pi, build_sigma, check_order_transfer, restrict_through, GreedyPermutation,
};
