//! Complete, Schur and multi-Schur functions of differences of alphabets.
//!
//! Letters are integer linear forms, so an alphabet like
//! `{2x1, 2x2, x1+x2}` is a multiset of three letters; the letter `x1+x2` is
//! a single letter, not the sum of two.

mod functions;
mod letter;
mod pi;

pub use functions::{
    complete, complete_in, multi_schur, multi_schur_blocks, resultant, schur, schur_factorized,
    schur_in, schur_numeric, schur_seq_in, split_for_factorization, transformed_multi_schur,
};
pub use letter::{Alphabet, AlphabetDiff, Letter, LetterError};
pub use pi::{evaluate_expansion, f_function, f_resultant_check, pi_operator};

use crate::algebra::VarId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchurError {
    #[error(
        "partition {partition} does not split over a {m}-letter plus and {n}-letter minus alphabet"
    )]
    Shape {
        partition: crate::Partition,
        m: usize,
        n: usize,
    },
    #[error("polynomial involves variable {0} outside x1, x2")]
    ForeignVariable(VarId),
    #[error("alphabet letter {0} is not a constant")]
    NonConstantLetter(Letter),
    #[error("{columns} column alphabets supplied for {parts} indices")]
    ColumnCount { columns: usize, parts: usize },
}
