// SPDX-License-Identifier: Apache-2.0

//! Exact stabilizer calculus for continuous-variable graph states.
//!
//! The crate models ideal (infinitely squeezed) CV graph states through their
//! nullifiers and stabilizer words, conjugates them by the local Gaussian
//! gates `F`, `P(η)`, `P_X(η)` and `C_Z`, and uses that machinery to check,
//! search for and classify Gaussian realizations of local complementation on
//! small unweighted graphs. All arithmetic is exact over the rationals.

pub mod chains;
pub mod error;
pub mod graph;
pub mod json;
pub mod linalg;
pub mod orbit;
pub mod pauli;
pub mod stabilizer;
pub mod symplectic;
pub mod words;

pub use error::{Error, Result};
pub use graph::{v, Graph, VertexId};
pub use linalg::{RatMatrix, Rational};
pub use orbit::{
    classes_under_lc_iso, classify, labeled_orbits, lc_orbit, ClassReport, OrbitGraph,
};
pub use pauli::{conjugate, conjugate_word, ulg_word, Gate, GateWord, PauliWord};
pub use stabilizer::{
    nullifiers_of, recover, spans_equal, stabilizer_words_of, transform, verify_map, MapReport,
    NullifierBasis, RecoveryResult,
};
pub use symplectic::{act_on_vector, gate_matrix, word_matrix, SymplecticMatrix};
pub use words::{
    adjudicate_arrow, compile_word, parse_word, search_word, ArrowReport, ReadingConvention,
    SearchConfig, SearchOutcome, WordAst,
};
