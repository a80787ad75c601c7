// SPDX-License-Identifier: Apache-2.0

//! Checks a labeled arrow `source --label--> target` under every reading of the label.
//!
//! A label lists terms without saying which acts first. Each distinct
//! operator obtained by permuting the terms is evaluated once. Macros are
//! expanded either against the source graph throughout or against the graph
//! carried by the state at the moment the macro acts.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::pauli::GateWord;
use crate::stabilizer::{nullifiers_of, recover, verify_map, MapReport, RecoveryResult};
use crate::symplectic::{word_matrix, SymplecticMatrix};
use crate::words::dsl::{parse_word, WordAst};
use crate::words::search::{search_word, SearchConfig, SearchOutcome};

/// Above this many terms only the two global readings are evaluated.
pub const MAX_PERMUTED_TERMS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReadingConvention {
    /// The leftmost term acts first.
    TimeOrder,
    /// The rightmost term acts first.
    OperatorOrder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderingMode {
    Time,
    Operator,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MacroContext {
    /// Every macro reads neighborhoods of the source graph.
    Source,
    /// Each macro reads neighborhoods of the graph recovered from the current state.
    Evolving,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Valid,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjudicateOptions {
    pub ordering: OrderingMode,
    pub contexts: Vec<MacroContext>,
    /// Run a search when no evaluation is valid.
    pub search: bool,
    pub max_depth: usize,
    pub budget: usize,
}

impl Default for AdjudicateOptions {
    fn default() -> Self {
        AdjudicateOptions {
            ordering: OrderingMode::All,
            contexts: vec![MacroContext::Source, MacroContext::Evolving],
            search: true,
            max_depth: SearchConfig::DEFAULT_MAX_DEPTH,
            budget: SearchConfig::DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub context: MacroContext,
    /// Term texts, first-acting first.
    pub order: Vec<String>,
    /// Every term permutation (1-based, first-acting first) giving this operator.
    pub equivalent_orders: Vec<Vec<usize>>,
    pub readings: Vec<ReadingConvention>,
    /// Expanded gates, first-acting first.
    pub word: Option<String>,
    pub verdict: Verdict,
    pub report: Option<MapReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrowReport {
    pub source: Graph,
    pub target: Graph,
    pub label: String,
    pub terms: Vec<String>,
    /// Vertices `a` with `λ_a(source) = target`.
    pub lc_vertices: Vec<VertexId>,
    pub orderings: Vec<Evaluation>,
    pub orderings_truncated: bool,
    pub any_valid: bool,
    pub search: Option<SearchOutcome>,
}

fn orders(k: usize, mode: OrderingMode) -> (Vec<Vec<usize>>, bool) {
    let id: Vec<usize> = (0..k).collect();
    let rev: Vec<usize> = (0..k).rev().collect();
    match mode {
        OrderingMode::Time => (vec![id], false),
        OrderingMode::Operator => (vec![rev], false),
        OrderingMode::All if k > MAX_PERMUTED_TERMS => (vec![id, rev], true),
        OrderingMode::All => {
            // the two readings first so they represent their groups
            let mut all = vec![id.clone()];
            if rev != id {
                all.push(rev.clone());
            }
            all.extend((0..k).permutations(k).filter(|p| *p != id && *p != rev));
            (all, false)
        }
    }
}

/// Gates for `ast` applied in `order`, macros read from the evolving state.
fn expand_evolving(ast: &WordAst, order: &[usize], source: &Graph) -> Result<GateWord> {
    let mut state = nullifiers_of(source);
    let mut gates = Vec::new();
    for &i in order {
        let term = &ast.terms[i];
        let nbrs = match term.macro_vertex() {
            Some(a) => match recover(&state)? {
                RecoveryResult::NonGraphForm(_) => {
                    return Err(Error::MacroContext(format!(
                        "state before {term} has no graph form"
                    )))
                }
                r => r.graph().expect("graph form").support_neighbors(a),
            },
            None => Vec::new(),
        };
        for g in term.expand_with(ast.n, &nbrs) {
            state.apply_gate(&g);
            gates.push(g);
        }
    }
    GateWord::new(ast.n, gates)
}

fn readings_of(order: &[usize]) -> Vec<ReadingConvention> {
    let k = order.len();
    let mut out = Vec::new();
    if order.iter().enumerate().all(|(i, &t)| i == t) {
        out.push(ReadingConvention::TimeOrder);
    }
    if order.iter().enumerate().all(|(i, &t)| t == k - 1 - i) {
        out.push(ReadingConvention::OperatorOrder);
    }
    out
}

struct Group {
    matrix: Option<SymplecticMatrix>,
    eval: Evaluation,
}

fn evaluate_context(
    ast: &WordAst,
    source: &Graph,
    target: &Graph,
    context: MacroContext,
    perms: &[Vec<usize>],
) -> Result<Vec<Evaluation>> {
    let mut groups: Vec<Group> = Vec::new();
    for order in perms {
        let one_based: Vec<usize> = order.iter().map(|i| i + 1).collect();
        let word = match context {
            MacroContext::Source => ast.expand_in_order(order, source),
            MacroContext::Evolving => expand_evolving(ast, order, source),
        };
        let (matrix, word) = match word {
            Ok(w) => (Some(word_matrix(&w)?), Ok(w)),
            Err(e @ (Error::MacroContext(_) | Error::WeightedInput)) => (None, Err(e)),
            Err(e) => return Err(e),
        };
        if let Some(m) = &matrix {
            if let Some(g) = groups.iter_mut().find(|g| g.matrix.as_ref() == Some(m)) {
                g.eval.equivalent_orders.push(one_based);
                g.eval.readings.extend(readings_of(order));
                continue;
            }
        }
        let eval = match word {
            Ok(w) => {
                let report = verify_map(source, &w, target)?;
                Evaluation {
                    context,
                    order: order.iter().map(|&i| ast.terms[i].to_string()).collect(),
                    equivalent_orders: vec![one_based],
                    readings: readings_of(order),
                    word: Some(w.to_string()),
                    verdict: if report.valid {
                        Verdict::Valid
                    } else {
                        Verdict::Invalid
                    },
                    report: Some(report),
                    error: None,
                }
            }
            Err(e) => Evaluation {
                context,
                order: order.iter().map(|&i| ast.terms[i].to_string()).collect(),
                equivalent_orders: vec![one_based],
                readings: readings_of(order),
                word: None,
                verdict: Verdict::Invalid,
                report: None,
                error: Some(e.to_string()),
            },
        };
        groups.push(Group { matrix, eval });
    }
    Ok(groups
        .into_iter()
        .map(|mut g| {
            g.eval.readings.sort();
            g.eval.readings.dedup();
            g.eval
        })
        .collect())
}

pub fn adjudicate_arrow_with(
    source: &Graph,
    label: &str,
    target: &Graph,
    opts: &AdjudicateOptions,
) -> Result<ArrowReport> {
    if !source.is_unweighted() || !target.is_unweighted() {
        return Err(Error::WeightedInput);
    }
    if source.n() != target.n() {
        return Err(Error::ModeMismatch(source.n(), target.n()));
    }
    let ast = parse_word(label, source.n())?;
    let (perms, truncated) = orders(ast.terms.len(), opts.ordering);
    let mut orderings = Vec::new();
    for &context in &opts.contexts {
        orderings.extend(evaluate_context(&ast, source, target, context, &perms)?);
    }
    let any_valid = orderings.iter().any(|e| e.verdict == Verdict::Valid);
    let search = if !any_valid && opts.search {
        let mut cfg = SearchConfig::default_for(source)?;
        cfg.max_depth = opts.max_depth;
        cfg.budget = opts.budget;
        Some(search_word(source, target, &cfg)?)
    } else {
        None
    };
    let lc_vertices = source
        .vertices()
        .filter(|&a| source.local_complement(a).is_ok_and(|h| &h == target))
        .collect();
    Ok(ArrowReport {
        source: source.clone(),
        target: target.clone(),
        label: label.to_string(),
        terms: ast.terms.iter().map(ToString::to_string).collect(),
        lc_vertices,
        orderings,
        orderings_truncated: truncated,
        any_valid,
        search,
    })
}

/// Evaluates `label` under every term ordering in both macro contexts and
/// searches the default dictionary when nothing validates.
pub fn adjudicate_arrow(source: &Graph, label: &str, target: &Graph) -> Result<ArrowReport> {
    adjudicate_arrow_with(source, label, target, &AdjudicateOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, path, star};
    use crate::graph::v;
    use crate::linalg::Rational;

    fn no2() -> Graph {
        Graph::from_edges(4, &[(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn single_macro_arrows() {
        let r = adjudicate_arrow(&path(4), "ULG(3)", &no2()).unwrap();
        assert!(r.any_valid);
        assert!(r.search.is_none());
        assert_eq!(r.lc_vertices, vec![v(3)]);
        for e in &r.orderings {
            assert_eq!(e.verdict, Verdict::Valid);
            assert_eq!(
                e.readings,
                vec![
                    ReadingConvention::TimeOrder,
                    ReadingConvention::OperatorOrder
                ]
            );
        }
        assert_eq!(r.orderings.len(), 2);
        let k = adjudicate_arrow(&complete(4), "ULG(1)'", &star(4, 1)).unwrap();
        assert!(k.orderings.iter().all(|e| e.verdict == Verdict::Valid));
    }

    #[test]
    fn composite_orderings_collapse_to_two() {
        // F(1)^2 is parity on mode 1 and commutes with both macros
        let target = no2().local_complement(v(2)).unwrap();
        let opts = AdjudicateOptions {
            contexts: vec![MacroContext::Source],
            search: false,
            ..Default::default()
        };
        let r = adjudicate_arrow_with(&no2(), "ULG(3)^2 F(1)^2 ULG(2)'", &target, &opts).unwrap();
        assert_eq!(r.orderings.len(), 2);
        let covered: usize = r.orderings.iter().map(|e| e.equivalent_orders.len()).sum();
        assert_eq!(covered, 6);
        let readings: Vec<ReadingConvention> = r
            .orderings
            .iter()
            .flat_map(|e| e.readings.clone())
            .collect();
        assert_eq!(readings.len(), 2);
    }

    #[test]
    fn weighted_intermediate_is_reported() {
        let target = no2().local_complement(v(2)).unwrap();
        let opts = AdjudicateOptions {
            search: false,
            ..Default::default()
        };
        let r = adjudicate_arrow_with(&no2(), "ULG(2)'", &target, &opts).unwrap();
        assert!(!r.any_valid);
        let rep = r.orderings[0].report.as_ref().unwrap();
        let RecoveryResult::Weighted { graph, .. } = &rep.recovered else {
            panic!("expected weighted recovery")
        };
        assert_eq!(graph.weight(v(1), v(3)), &Rational::from_integer(-1));
        assert_eq!(graph.weight(v(1), v(4)), &Rational::from_integer(-1));
    }

    #[test]
    fn search_attached_when_nothing_validates() {
        let target = no2().local_complement(v(2)).unwrap();
        let r = adjudicate_arrow(&no2(), "ULG(2)'", &target).unwrap();
        let s = r.search.expect("search outcome");
        assert!(s.found || s.inconclusive);
    }

    #[test]
    fn reading_modes_select_one_order() {
        let opts = |ordering| AdjudicateOptions {
            ordering,
            contexts: vec![MacroContext::Source],
            search: false,
            ..Default::default()
        };
        let t = adjudicate_arrow_with(&path(4), "F(1) P(1,1)", &path(4), &opts(OrderingMode::Time))
            .unwrap();
        let o = adjudicate_arrow_with(
            &path(4),
            "F(1) P(1,1)",
            &path(4),
            &opts(OrderingMode::Operator),
        )
        .unwrap();
        assert_eq!(t.orderings[0].order, vec!["F(1)", "P(1,1)"]);
        assert_eq!(o.orderings[0].order, vec!["P(1,1)", "F(1)"]);
    }

    #[test]
    fn empty_label_is_identity() {
        let r = adjudicate_arrow(&path(3), "", &path(3)).unwrap();
        assert!(r.any_valid);
        assert_eq!(r.orderings[0].word.as_deref(), Some(""));
    }

    #[test]
    fn parse_errors_propagate() {
        assert!(matches!(
            adjudicate_arrow(&path(3), "ULG(9)", &path(3)),
            Err(Error::Parse { .. })
        ));
    }
}
