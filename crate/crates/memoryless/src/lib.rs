//! Computing in permutation groups of A^n without memory.
//!
//! A machine with `n` registers over an alphabet `A` of size `q` can only
//! update one register at a time, and has no auxiliary storage: every update
//! is a permutation of the state space A^n that changes a single coordinate
//! (an *instruction*). This crate provides:
//!
//! - core types for states, permutations, instructions and programs, with
//!   plain-text serialization ([`text`]);
//! - exact computation in the groups these instructions generate, via a
//!   deterministic Schreier–Sims stabilizer chain ([`group`]);
//! - program synthesis: every permutation of A^n is a product of at most
//!   2n−1 instructions, found constructively by routing-network decomposition,
//!   plus exact shortest programs at small scale ([`synth`]);
//! - explicit families of n instructions generating the symmetric or
//!   alternating group of A^n ([`generators`]);
//! - Gray-code orderings and the associated Coxeter instruction sets
//!   ([`gray`]);
//! - complexity distributions, fastness comparisons, and internal
//!   computability of subgroups ([`analysis`]).

pub mod alphabet;
pub mod analysis;
pub mod error;
pub mod generators;
pub mod gray;
pub mod group;
pub mod instr;
pub mod perm;
pub mod synth;
pub mod text;

pub use alphabet::{Alphabet, State};
pub use analysis::{
    complexity_table, conjugacy_complexity_check, fastness, full_complexity_table,
    internal_computability, lary_closure_counterexample, lary_generators, lary_group,
    ComplexityTable, FastnessReport, InternalReport,
};
pub use error::{Error, Result};
pub use generators::{
    alt_generators, sym_generators, unary_obstruction, verify_family, FamilyReport, GeneratorFamily,
};
pub use gray::{coxeter_instructions, gray_rank, gray_sequence};
pub use group::{build_chain, factorial, identify_group, GroupChain, GroupIdentity, GroupTag};
pub use instr::{enumerate_instructions, instruction_count, Instruction, Program};
pub use perm::{conjugate, CycleDecomposition, Permutation};
pub use synth::{optimal_program, optimal_program_with_set, synthesize};
