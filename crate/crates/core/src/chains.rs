// SPDX-License-Identifier: Apache-2.0

//! Built-in labeled LC chains and their adjudication.
//!
//! Figure 1 starts at the path 1-2-3-4 and follows the walk
//! λ3 λ2 λ3 λ1 λ3 λ1 λ3 λ4 λ1 λ2. Figure 3 joins `K4` to the four stars.
//! Figure 2 only fixes its graphs up to the labeled orbit; the fixture starts
//! at the first path-family graph outside the Figure 1 orbit whose walk visits
//! eleven distinct graphs, and the report says so.

use std::collections::BTreeSet;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::named::{complete, path, star};
use crate::graph::{connected_labeled, shape_name, v, Graph};
use crate::orbit::lc_orbit;
use crate::words::adjudicate::{adjudicate_arrow_with, AdjudicateOptions, ArrowReport};

/// Conventions every report is computed under; reports carry its SHA-256.
pub const CONVENTIONS: &str = "\
X(s)=exp(-i s p), Z(t)=exp(i t x), X(s)Z(t)=exp(-i s t)Z(t)X(s)
PauliWord = exp[i(b xi + c xi^2)] prod_a X_a(u_a xi) Z_a(v_a xi), X before Z per mode
F=exp[i(pi/4)(x^2+p^2)]: x->p, p->-x
P(eta)=exp[i(eta/2)x^2]: p->p-eta x
PX(eta)=F P(eta) F^-1: x->x+eta p
CZ(g)=exp[i g x_a x_b]: p_a->p_a-g x_b, p_b->p_b-g x_a
nullifier g_a = p_a - sum_b A_ab x_b; stabilizer exp(-i xi g_a)
ULG(a) = PX_a(1) prod_{b in N_a} P_b(-1); ' negates eta; ^k scales eta
word text order: terms permuted, each distinct operator evaluated
macro context: source graph, or graph recovered from the current state
";

pub fn conventions_sha256() -> String {
    hex::encode(Sha256::digest(CONVENTIONS.as_bytes()))
}

pub const FIGURE2_CAVEAT: &str =
    "the vertex labeling of this chain is not determined by the figure; \
the start graph is the first path-family labeled graph outside the figure 1 orbit whose walk \
visits eleven distinct graphs, so only orbit-level conclusions carry over";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainArrow {
    /// 1-based node numbers.
    pub from: usize,
    pub to: usize,
    pub label: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainFixture {
    pub figure: u8,
    pub nodes: Vec<Graph>,
    pub arrows: Vec<ChainArrow>,
    pub caveat: Option<&'static str>,
}

const FIG1_WALK: [usize; 10] = [3, 2, 3, 1, 3, 1, 3, 4, 1, 2];
const FIG1_LABELS: [&str; 10] = [
    "ULG(3)",
    "ULG(3)^2 F(1)^2 ULG(2)'",
    "ULG(3)'",
    "ULG(1)",
    "ULG(2)^2 F(1)^2 ULG(3)'",
    "ULG(1)'",
    "ULG(3)",
    "ULG(4)'",
    "ULG(1)",
    "ULG(2)'",
];

// (from, to, LC vertex, label)
const FIG2_ARROWS: [(usize, usize, usize, &str); 10] = [
    (1, 2, 1, "ULG(1)"),
    (2, 3, 2, "ULG(3)^2 F(1)^2 ULG(2)'"),
    (3, 4, 1, "ULG(1)'"),
    (4, 5, 2, "ULG(2)"),
    (5, 6, 1, "ULG(2)^2 F(3)^2 ULG(1)'"),
    (6, 7, 3, "ULG(4)^2 F(2)^2 ULG(3)'"),
    (7, 8, 4, "ULG(4)'"),
    (8, 9, 3, "ULG(3)"),
    (9, 10, 1, "ULG(1)'"),
    (7, 11, 2, "ULG(2)'"),
];

const FIG3_ARROWS: [(usize, usize, &str); 7] = [
    (1, 2, "ULG(1)'"),
    (2, 1, "ULG(1)"),
    (1, 3, "ULG(2)'"),
    (3, 1, "ULG(2)"),
    (1, 4, "ULG(3)'"),
    (4, 1, "ULG(3)"),
    (1, 5, "ULG(4)'"),
];

fn figure1() -> Result<ChainFixture> {
    let mut nodes = vec![path(4)];
    for a in FIG1_WALK {
        let next = nodes.last().expect("nonempty").local_complement(v(a))?;
        nodes.push(next);
    }
    let arrows = FIG1_LABELS
        .iter()
        .enumerate()
        .map(|(k, &label)| ChainArrow {
            from: k + 1,
            to: k + 2,
            label,
        })
        .collect();
    Ok(ChainFixture {
        figure: 1,
        nodes,
        arrows,
        caveat: None,
    })
}

fn figure2_nodes(start: &Graph) -> Result<Vec<Graph>> {
    let mut nodes = vec![start.clone()];
    for &(from, _, a, _) in &FIG2_ARROWS {
        let next = nodes[from - 1].local_complement(v(a))?;
        nodes.push(next);
    }
    Ok(nodes)
}

/// First graph, in ascending order, meeting the figure 2 requirements.
pub fn figure2_start() -> Result<Graph> {
    let fig1 = lc_orbit(&path(4))?;
    for g in connected_labeled(4)? {
        if fig1.contains(&g)
            || !["path", "paw", "C4", "diamond"].contains(&shape_name(&g)?.as_str())
        {
            continue;
        }
        let nodes = figure2_nodes(&g)?;
        if nodes.iter().collect::<BTreeSet<_>>().len() == nodes.len() {
            return Ok(g);
        }
    }
    Err(Error::InvalidGraph(
        "no labeled graph fits the figure 2 walk".into(),
    ))
}

fn figure2() -> Result<ChainFixture> {
    let nodes = figure2_nodes(&figure2_start()?)?;
    let arrows = FIG2_ARROWS
        .iter()
        .map(|&(from, to, _, label)| ChainArrow { from, to, label })
        .collect();
    Ok(ChainFixture {
        figure: 2,
        nodes,
        arrows,
        caveat: Some(FIGURE2_CAVEAT),
    })
}

fn figure3() -> ChainFixture {
    let mut nodes = vec![complete(4)];
    nodes.extend((1..=4).map(|c| star(4, c)));
    let arrows = FIG3_ARROWS
        .iter()
        .map(|&(from, to, label)| ChainArrow { from, to, label })
        .collect();
    ChainFixture {
        figure: 3,
        nodes,
        arrows,
        caveat: None,
    }
}

pub fn figure_fixture(figure: u8) -> Result<ChainFixture> {
    match figure {
        1 => figure1(),
        2 => figure2(),
        3 => Ok(figure3()),
        _ => Err(Error::OutOfRange {
            what: "figure",
            value: figure as usize,
            range: "1..=3",
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrowEntry {
    pub from: String,
    pub to: String,
    pub label: &'static str,
    pub report: ArrowReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub figure: u8,
    pub tool_version: &'static str,
    pub conventions_sha256: String,
    pub caveat: Option<&'static str>,
    pub nodes: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
    pub valid_arrows: usize,
}

pub fn adjudicate_chain_with(figure: u8, opts: &AdjudicateOptions) -> Result<ChainReport> {
    let fx = figure_fixture(figure)?;
    let mut arrows = Vec::with_capacity(fx.arrows.len());
    for a in &fx.arrows {
        let report =
            adjudicate_arrow_with(&fx.nodes[a.from - 1], a.label, &fx.nodes[a.to - 1], opts)?;
        arrows.push(ArrowEntry {
            from: format!("No.{}", a.from),
            to: format!("No.{}", a.to),
            label: a.label,
            report,
        });
    }
    Ok(ChainReport {
        figure,
        tool_version: env!("CARGO_PKG_VERSION"),
        conventions_sha256: conventions_sha256(),
        caveat: fx.caveat,
        nodes: fx.nodes.iter().map(ToString::to_string).collect(),
        valid_arrows: arrows.iter().filter(|a| a.report.any_valid).count(),
        arrows,
    })
}

pub fn adjudicate_chain(figure: u8) -> Result<ChainReport> {
    adjudicate_chain_with(figure, &AdjudicateOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure1_nodes_are_the_path_orbit() {
        let fx = figure_fixture(1).unwrap();
        assert_eq!(fx.nodes.len(), 11);
        assert_eq!(fx.arrows.len(), 10);
        let orbit = lc_orbit(&path(4)).unwrap();
        let set: BTreeSet<Graph> = fx.nodes.iter().cloned().collect();
        assert_eq!(set.into_iter().collect::<Vec<_>>(), orbit.nodes);
        assert_eq!(
            fx.nodes[1],
            Graph::from_edges(4, &[(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
        );
        for (arrow, &a) in fx.arrows.iter().zip(&FIG1_WALK) {
            assert_eq!(
                fx.nodes[arrow.from - 1].local_complement(v(a)).unwrap(),
                fx.nodes[arrow.to - 1]
            );
        }
    }

    #[test]
    fn figure2_start_is_outside_figure1_orbit() {
        let fx = figure_fixture(2).unwrap();
        assert_eq!(fx.nodes.len(), 11);
        assert!(fx.caveat.is_some());
        let fig1 = lc_orbit(&path(4)).unwrap();
        assert!(fx.nodes.iter().all(|g| !fig1.contains(g)));
        assert_eq!(lc_orbit(&fx.nodes[0]).unwrap().len(), 11);
    }

    #[test]
    fn figure3_fixture() {
        let fx = figure_fixture(3).unwrap();
        for a in &fx.arrows {
            let from = &fx.nodes[a.from - 1];
            let to = &fx.nodes[a.to - 1];
            assert!(from
                .vertices()
                .any(|x| &from.local_complement(x).unwrap() == to));
        }
        assert!(figure_fixture(4).is_err());
    }

    #[test]
    fn conventions_hash_is_stable() {
        assert_eq!(conventions_sha256().len(), 64);
        assert_eq!(conventions_sha256(), conventions_sha256());
    }
}
