//! Products of fixed-length cycles in alternating groups.
//!
//! Let C_l be the conjugacy class of l-cycles in S_n. This crate computes
//! n(k,l), the largest n such that every even permutation of n points is a
//! product of k l-cycles, and backs the closed formulas with three kinds of
//! checkable evidence:
//!
//! - [`bounds`]: the exact case table for n(k,l), the general upper bound,
//!   and the counting inequalities (support/cycle-count slack) that drive
//!   every non-membership argument.
//! - [`oracle`]: a ground-truth engine that computes the reachable cycle
//!   types of products of k l-cycles by breadth-first search at conjugacy
//!   class granularity, recovers n(k,l) by scanning n, and extracts witness
//!   factorizations by backward peeling.
//! - [`decompose`]: a constructive solver that factors a given even
//!   permutation into k l-cycles, at sizes far beyond the oracle, by the
//!   two-long-cycle route and by splitting off small disjoint blocks.
//! - [`extremal`]: the counterexample shapes one degree above n(k,l),
//!   with slack certificates for their non-membership.
//!
//! Everything is exact integer arithmetic on explicit permutations; every
//! witness produced anywhere is validated by direct composition before it
//! is returned.

pub mod bounds;
pub mod cli;
pub mod decompose;
pub mod extremal;
pub mod factor;
pub mod oracle;
pub mod perm;
