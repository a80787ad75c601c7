// SPDX-License-Identifier: Apache-2.0

//! Shortest dictionary words carrying one graph state to another.
//!
//! States are nullifier row spaces keyed by their reduced row-echelon form.
//! The search grows layers from both ends, the target side applying inverse
//! dictionary words, and stops at the first layer where the two sides meet.
//! Among the meetings of that layer the word with the smallest sequence of
//! dictionary indices wins, so the result depends only on the inputs.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::GateWord;
use crate::stabilizer::{nullifiers_of, verify_map, NullifierBasis};
use crate::words::dsl::compile_word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DictEntry {
    pub label: String,
    pub word: GateWord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub dictionary: Vec<DictEntry>,
    pub max_depth: usize,
    pub budget: usize,
}

impl SearchConfig {
    pub const DEFAULT_MAX_DEPTH: usize = 6;
    pub const DEFAULT_BUDGET: usize = 1_000_000;

    /// Dictionary entries compiled against `ctx`; macros read its neighborhoods.
    pub fn from_labels<S: AsRef<str>>(
        labels: &[S],
        ctx: &Graph,
        max_depth: usize,
        budget: usize,
    ) -> Result<Self> {
        let dictionary = labels
            .iter()
            .map(|l| {
                Ok(DictEntry {
                    label: l.as_ref().to_string(),
                    word: compile_word(l.as_ref(), ctx)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let cfg = SearchConfig {
            dictionary,
            max_depth,
            budget,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// `ULG(a)`, `ULG(a)'`, `F(a)`, `F(a)'`, `F(a)^2`, `P(a,±1)`, `PX(a,±1)` for
    /// every vertex, grouped by kind, depth 6, budget 10⁶.
    pub fn default_for(ctx: &Graph) -> Result<Self> {
        let n = ctx.n();
        let kinds = [
            "ULG({})",
            "ULG({})'",
            "F({})",
            "F({})'",
            "F({})^2",
            "P({},1)",
            "P({},-1)",
            "PX({},1)",
            "PX({},-1)",
        ];
        let labels: Vec<String> = kinds
            .iter()
            .flat_map(|k| (1..=n).map(move |a| k.replace("{}", &a.to_string())))
            .collect();
        Self::from_labels(&labels, ctx, Self::DEFAULT_MAX_DEPTH, Self::DEFAULT_BUDGET)
    }

    fn validate(&self) -> Result<()> {
        if self.dictionary.is_empty() {
            return Err(Error::InvalidGraph("search dictionary is empty".into()));
        }
        if self.max_depth == 0 {
            return Err(Error::OutOfRange {
                what: "max_depth",
                value: 0,
                range: ">= 1",
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotFoundReason {
    /// Every word up to `max_depth` was covered.
    DepthExhausted,
    /// The expansion budget ran out first.
    BudgetExhausted,
    /// Both sides stopped producing new states.
    StatesExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub found: bool,
    /// Dictionary labels in the order they act.
    pub word: Option<String>,
    pub depth: Option<usize>,
    pub gates: Option<String>,
    pub reason: Option<NotFoundReason>,
    /// A miss only covers this dictionary and depth.
    pub inconclusive: bool,
    pub expanded: usize,
    pub distinct_states: usize,
}

struct Side {
    visited: HashMap<NullifierBasis, Vec<u16>>,
    frontier: Vec<(NullifierBasis, Vec<u16>)>,
    depth: usize,
}

impl Side {
    fn new(start: NullifierBasis) -> Self {
        Side {
            visited: HashMap::from([(start.clone(), Vec::new())]),
            frontier: vec![(start, Vec::new())],
            depth: 0,
        }
    }
}

fn apply(state: &NullifierBasis, word: &GateWord) -> NullifierBasis {
    let mut s = state.clone();
    for g in word.gates() {
        s.apply_gate(g);
    }
    s.canonical()
}

/// Shortest word over `cfg.dictionary` with `verify_map(source, word, target).valid`.
pub fn search_word(source: &Graph, target: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    if !source.is_unweighted() || !target.is_unweighted() {
        return Err(Error::WeightedInput);
    }
    if source.n() != target.n() {
        return Err(Error::ModeMismatch(source.n(), target.n()));
    }
    if let Some(e) = cfg.dictionary.iter().find(|e| e.word.n() != source.n()) {
        return Err(Error::ModeMismatch(e.word.n(), source.n()));
    }
    let inverses: Vec<GateWord> = cfg.dictionary.iter().map(|e| e.word.inverse()).collect();
    let mut fwd = Side::new(nullifiers_of(source).canonical());
    let mut bwd = Side::new(nullifiers_of(target).canonical());
    let mut expanded = 0usize;

    let finish = |path: Option<Vec<u16>>, reason, expanded, states| -> Result<SearchOutcome> {
        let Some(path) = path else {
            return Ok(SearchOutcome {
                found: false,
                word: None,
                depth: None,
                gates: None,
                reason: Some(reason),
                inconclusive: true,
                expanded,
                distinct_states: states,
            });
        };
        let mut word = GateWord::identity(source.n());
        for &i in &path {
            word = word.then(&cfg.dictionary[i as usize].word)?;
        }
        Ok(SearchOutcome {
            found: true,
            word: Some(
                path.iter()
                    .map(|&i| cfg.dictionary[i as usize].label.as_str())
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
            depth: Some(path.len()),
            gates: Some(word.to_string()),
            reason: None,
            inconclusive: false,
            expanded,
            distinct_states: states,
        })
    };

    let verified = |path: &[u16]| -> Result<bool> {
        let mut word = GateWord::identity(source.n());
        for &i in path {
            word = word.then(&cfg.dictionary[i as usize].word)?;
        }
        Ok(verify_map(source, &word, target)?.valid)
    };

    if fwd.visited.contains_key(&bwd.frontier[0].0) && verified(&[])? {
        return finish(Some(Vec::new()), NotFoundReason::DepthExhausted, 0, 1);
    }

    while fwd.depth + bwd.depth < cfg.max_depth {
        let forward = fwd.frontier.len() <= bwd.frontier.len();
        let (side, other, words): (&mut Side, &Side, Vec<&GateWord>) = if forward {
            (
                &mut fwd,
                &bwd,
                cfg.dictionary.iter().map(|e| &e.word).collect(),
            )
        } else {
            (&mut bwd, &fwd, inverses.iter().collect())
        };
        if side.frontier.is_empty() {
            let states = side.visited.len() + other.visited.len();
            return finish(None, NotFoundReason::StatesExhausted, expanded, states);
        }
        let mut next = Vec::new();
        let mut meetings: Vec<Vec<u16>> = Vec::new();
        for (state, path) in std::mem::take(&mut side.frontier) {
            if expanded >= cfg.budget {
                let states = side.visited.len() + other.visited.len();
                return finish(None, NotFoundReason::BudgetExhausted, expanded, states);
            }
            expanded += 1;
            for (i, w) in words.iter().enumerate() {
                let s = apply(&state, w);
                if side.visited.contains_key(&s) {
                    continue;
                }
                let mut p = path.clone();
                p.push(i as u16);
                if let Some(q) = other.visited.get(&s) {
                    let (f, b) = if forward { (&p, q) } else { (q, &p) };
                    meetings.push(f.iter().chain(b.iter().rev()).copied().collect());
                }
                side.visited.insert(s.clone(), p.clone());
                next.push((s, p));
            }
        }
        side.frontier = next;
        side.depth += 1;
        meetings.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for m in meetings {
            if verified(&m)? {
                let states = fwd.visited.len() + bwd.visited.len();
                return finish(Some(m), NotFoundReason::DepthExhausted, expanded, states);
            }
        }
    }
    let states = fwd.visited.len() + bwd.visited.len();
    finish(None, NotFoundReason::DepthExhausted, expanded, states)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, path, star};
    use crate::graph::v;

    fn no2() -> Graph {
        Graph::from_edges(4, &[(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn finds_single_macro() {
        let labels: Vec<String> = (1..=4)
            .flat_map(|a| {
                [
                    format!("ULG({a})"),
                    format!("ULG({a})'"),
                    format!("F({a})^2"),
                    format!("P({a},1)"),
                    format!("P({a},-1)"),
                    format!("PX({a},1)"),
                    format!("PX({a},-1)"),
                ]
            })
            .collect();
        let cfg = SearchConfig::from_labels(&labels, &path(4), 6, 1_000_000).unwrap();
        let out = search_word(&path(4), &no2(), &cfg).unwrap();
        assert_eq!(out.word.as_deref(), Some("ULG(3)"));
        assert_eq!(out.depth, Some(1));
        let def = search_word(
            &path(4),
            &no2(),
            &SearchConfig::default_for(&path(4)).unwrap(),
        )
        .unwrap();
        assert_eq!(def.word.as_deref(), Some("ULG(3)"));
    }

    #[test]
    fn identity_is_depth_zero() {
        let g = complete(4);
        let out = search_word(&g, &g, &SearchConfig::default_for(&g).unwrap()).unwrap();
        assert!(out.found);
        assert_eq!(out.word.as_deref(), Some(""));
        assert_eq!(out.depth, Some(0));
    }

    #[test]
    fn insufficient_dictionary_hits_budget() {
        let k2 = complete(2);
        let cfg = SearchConfig::from_labels(&["P(1,1)"], &k2, 6, 3).unwrap();
        let out = search_word(&k2, &Graph::empty(2), &cfg).unwrap();
        assert!(!out.found);
        assert!(out.inconclusive);
        assert_eq!(out.reason, Some(NotFoundReason::BudgetExhausted));
        let deep = SearchConfig::from_labels(&["P(1,1)"], &k2, 4, 1_000).unwrap();
        assert_eq!(
            search_word(&k2, &Graph::empty(2), &deep).unwrap().reason,
            Some(NotFoundReason::DepthExhausted)
        );
    }

    #[test]
    fn closed_state_space_is_reported() {
        let k2 = complete(2);
        let cfg = SearchConfig::from_labels(&["F(1)"], &k2, 20, 1_000).unwrap();
        let out = search_word(&k2, &Graph::empty(2), &cfg).unwrap();
        assert_eq!(out.reason, Some(NotFoundReason::StatesExhausted));
    }

    #[test]
    fn found_words_verify_and_are_deterministic() {
        let cfg = SearchConfig::default_for(&complete(4)).unwrap();
        for c in 1..=4 {
            let a = search_word(&complete(4), &star(4, c), &cfg).unwrap();
            let b = search_word(&complete(4), &star(4, c), &cfg).unwrap();
            assert_eq!(a, b);
            let w = compile_word(a.word.as_deref().unwrap(), &complete(4)).unwrap();
            assert!(verify_map(&complete(4), &w, &star(4, c)).unwrap().valid);
            assert_eq!(a.depth, Some(1));
        }
    }

    #[test]
    fn expansions_bounded_by_states() {
        let g = path(4);
        let cfg = SearchConfig::default_for(&g).unwrap();
        let out = search_word(&g, &g.local_complement(v(1)).unwrap(), &cfg).unwrap();
        assert!(out.found);
        assert!(out.expanded < out.distinct_states * cfg.dictionary.len());
    }

    #[test]
    fn rejects_bad_config() {
        let g = path(2);
        assert!(SearchConfig::from_labels::<&str>(&[], &g, 3, 10).is_err());
        assert!(SearchConfig::from_labels(&["F(1)"], &g, 0, 10).is_err());
        let cfg = SearchConfig::from_labels(&["F(1)"], &g, 3, 10).unwrap();
        assert_eq!(
            search_word(&g, &path(3), &cfg),
            Err(Error::ModeMismatch(2, 3))
        );
    }
}
