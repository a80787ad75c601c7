// SPDX-License-Identifier: Apache-2.0

//! Gate-word text, arrow adjudication and word search.

pub mod adjudicate;
pub mod dsl;
pub mod search;

pub use adjudicate::{
    adjudicate_arrow, adjudicate_arrow_with, AdjudicateOptions, ArrowReport, Evaluation,
    MacroContext, OrderingMode, ReadingConvention, Verdict,
};
pub use dsl::{compile_word, parse_word, Term, TermKind, WordAst};
pub use search::{search_word, DictEntry, NotFoundReason, SearchConfig, SearchOutcome};
