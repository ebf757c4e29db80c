//! Alternating permutations, 0-1-2 increasing trees, and the bijection
//! linking them.
//!
//! A word `w_1 w_2 ... w_n` over `{1, ..., n}` is an *alternating* (down-up)
//! permutation when `w_1 > w_2 < w_3 > w_4 < ...`. A *0-1-2 increasing tree*
//! on `{1, ..., n}` is a rooted tree with root 1, every child larger than its
//! parent, and at most two children per vertex. Both families are counted by
//! the Euler numbers 1, 1, 2, 5, 16, 61, 272, ...; the refinement carried by
//! this crate is finer: alternating permutations with first letter `k`
//! correspond to trees whose *main chain* (the path from the root that always
//! steps to the smallest child) ends at leaf `k`. These refined counts form
//! the Entringer triangle.
//!
//! The crate provides:
//!
//! * [`perm`] — permutation words, alternation checks, lexicographic
//!   enumeration, and the statistics `inv` (inversions) and `occ_31_2`
//!   (vincular 31-2 occurrences);
//! * [`tree`] — 0-1-2 increasing trees with validation, main-chain
//!   extraction, enumeration, relabeling, and text / DOT output;
//! * [`bijection`] — the chain-leaf bijection [`bijection::phi`] and its
//!   inverse [`bijection::phi_inverse`], both iterative and traced
//!   case-by-case;
//! * [`poly`] — Entringer count tables, the bivariate `(q, p)` refinement by
//!   `(inv, occ_31_2)`, and recurrence / identity checks over desk-scale
//!   ranges;
//! * [`verify`] — a sectioned self-check harness used by the `verify` CLI
//!   subcommand.

pub mod bijection;
pub(crate) mod fixtures;
pub mod perm;
pub mod poly;
pub mod tree;
pub mod verify;
