// SPDX-License-Identifier: Apache-2.0

//! Brute-force isomorphism and canonical forms for graphs on at most eight
//! vertices, plus census enumeration of small connected graphs.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::Serialize;

use super::{named, Graph, VertexId};
use crate::error::{Error, Result};

pub const MAX_CANONICAL_N: usize = 8;
pub const MAX_ENUMERATE_N: usize = 6;

/// Minimum edge mask over all vertex relabelings; equal exactly for isomorphic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalKey {
    pub n: usize,
    pub mask: u64,
}

impl CanonicalKey {
    pub fn graph(&self) -> Graph {
        Graph::from_mask(self.n, self.mask)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}#{:x}", self.n, self.mask)
    }
}

struct PermTable {
    perms: Vec<Vec<usize>>,
    // bit_maps[p][k] = target bit of source pair-bit k under perms[p]
    bit_maps: Vec<Vec<u8>>,
}

fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn perm_table(n: usize) -> &'static PermTable {
    static TABLES: [OnceLock<PermTable>; MAX_CANONICAL_N + 1] =
        [const { OnceLock::new() }; MAX_CANONICAL_N + 1];
    TABLES[n].get_or_init(|| {
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let bit_maps = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .map(|&(i, j)| pair_bit(n, p[i], p[j]) as u8)
                    .collect()
            })
            .collect();
        PermTable { perms, bit_maps }
    })
}

fn apply_bits(mask: u64, map: &[u8]) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        out |= 1 << map[k];
        rest &= rest - 1;
    }
    out
}

fn check_size(g: &Graph) -> Result<()> {
    g.require_unweighted()?;
    if g.n() > MAX_CANONICAL_N {
        return Err(Error::TooLarge(g.n()));
    }
    Ok(())
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalKey> {
    check_size(g)?;
    let mask = g.edge_mask();
    let table = perm_table(g.n());
    let min = table
        .bit_maps
        .iter()
        .map(|m| apply_bits(mask, m))
        .min()
        .unwrap_or(mask);
    Ok(CanonicalKey {
        n: g.n(),
        mask: min,
    })
}

fn degree_profile(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = g.vertices().map(|a| g.degree(a)).collect();
    d.sort_unstable();
    d
}

/// Returns a relabeling `w` with `g.relabel(&w) == h` when the graphs are isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<VertexId>>> {
    check_size(g)?;
    check_size(h)?;
    if g.n() != h.n() || g.edge_count() != h.edge_count() || degree_profile(g) != degree_profile(h)
    {
        return Ok(None);
    }
    let (gm, hm) = (g.edge_mask(), h.edge_mask());
    let table = perm_table(g.n());
    Ok(table
        .bit_maps
        .iter()
        .position(|m| apply_bits(gm, m) == hm)
        .map(|p| {
            table.perms[p]
                .iter()
                .map(|&i| VertexId::from_index(i))
                .collect()
        }))
}

fn reference_shapes() -> &'static BTreeMap<CanonicalKey, &'static str> {
    static SHAPES: OnceLock<BTreeMap<CanonicalKey, &'static str>> = OnceLock::new();
    SHAPES.get_or_init(|| {
        let e = |n, edges: &[(usize, usize)]| Graph::from_edges(n, edges).expect("reference shape");
        [
            (Graph::empty(1), "K1"),
            (named::complete(2), "K2"),
            (named::path(3), "P3"),
            (named::complete(3), "K3"),
            (named::path(4), "path"),
            (e(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]), "paw"),
            (named::cycle(4), "C4"),
            (e(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]), "diamond"),
            (named::star(4, 1), "star"),
            (named::complete(4), "K4"),
        ]
        .into_iter()
        .map(|(g, name)| (canonical_form(&g).expect("small"), name))
        .collect()
    })
}

/// Human name of the isomorphism type: `path`, `paw`, `C4`, `diamond`, `star`,
/// `K4` for the connected 4-vertex shapes, `K1`/`K2`/`P3`/`K3` below that, and the
/// canonical key otherwise.
pub fn shape_name(g: &Graph) -> Result<String> {
    let key = canonical_form(g)?;
    Ok(reference_shapes()
        .get(&key)
        .map_or_else(|| key.to_string(), |s| (*s).to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoClass {
    pub shape: String,
    pub key: CanonicalKey,
    pub representative: Graph,
    pub labeled_count: usize,
}

/// Connected graphs on `n` labeled vertices grouped by isomorphism type.
#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub n: usize,
    pub labeled_total: usize,
    pub classes: Vec<IsoClass>,
}

impl Census {
    pub fn count_of(&self, shape: &str) -> Option<usize> {
        self.classes
            .iter()
            .find(|c| c.shape == shape)
            .map(|c| c.labeled_count)
    }
}

/// All connected labeled graphs on `n` vertices (`1 ≤ n ≤ 6`), in increasing
/// edge-mask order.
pub fn connected_labeled(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATE_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            range: "1..=6",
        });
    }
    let m = n * (n - 1) / 2;
    Ok((0..1u64 << m)
        .map(|mask| Graph::from_mask(n, mask))
        .filter(Graph::is_connected)
        .collect())
}

pub fn enumerate_connected(n: usize) -> Result<Census> {
    let graphs = connected_labeled(n)?;
    let mut counts: BTreeMap<CanonicalKey, usize> = BTreeMap::new();
    for g in &graphs {
        *counts.entry(canonical_form(g)?).or_default() += 1;
    }
    let mut classes = counts
        .into_iter()
        .map(|(key, labeled_count)| {
            let representative = key.graph();
            Ok(IsoClass {
                shape: shape_name(&representative)?,
                key,
                representative,
                labeled_count,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    classes.sort_by_key(|c| (c.key.mask.count_ones(), c.key));
    Ok(Census {
        n,
        labeled_total: graphs.len(),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::v;

    #[test]
    fn pair_bits_are_lexicographic() {
        let n = 5;
        let bits: Vec<usize> = (0..n)
            .tuple_combinations()
            .map(|(i, j)| pair_bit(n, i, j))
            .collect();
        assert_eq!(bits, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn isomorphism_examples() {
        let p = path(4);
        let p2 = Graph::from_edges(4, &[(1, 2), (1, 3), (3, 4)]).unwrap(); // path 2-1-3-4
        let w = are_isomorphic(&p, &p2).unwrap().expect("isomorphic");
        assert_eq!(p.relabel(&w).unwrap(), p2);
        assert_eq!(are_isomorphic(&p, &star(4, 1)).unwrap(), None);
        let c_a = Graph::from_edges(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let c_b = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let w = are_isomorphic(&c_a, &c_b).unwrap().expect("both C4");
        assert_eq!(c_a.relabel(&w).unwrap(), c_b);
    }

    /// Exhaustive check over all 24 relabelings, independent of the bit tables.
    #[test]
    fn c4_isomorphism_by_direct_relabeling() {
        let c_a = Graph::from_edges(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let c_b = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let hits = (1..=4)
            .permutations(4)
            .filter(|p| {
                let w: Vec<_> = p.iter().map(|&i| v(i)).collect();
                c_a.relabel(&w).unwrap() == c_b
            })
            .count();
        assert_eq!(hits, 8); // |Aut(C4)| = 8
    }

    #[test]
    fn canonical_examples() {
        let p = path(4);
        let rev = Graph::from_edges(4, &[(3, 4), (2, 3), (1, 2)])
            .unwrap()
            .relabel(&[v(4), v(3), v(2), v(1)])
            .unwrap();
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&rev).unwrap());
        let paw_a = Graph::from_edges(4, &[(2, 3), (3, 4), (2, 4), (1, 2)]).unwrap();
        let paw_b = Graph::from_edges(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        assert!(are_isomorphic(&paw_a, &paw_b).unwrap().is_some());
        assert_eq!(
            canonical_form(&paw_a).unwrap(),
            canonical_form(&paw_b).unwrap()
        );
        assert_eq!(canonical_form(&Graph::empty(9)), Err(Error::TooLarge(9)));
    }

    #[test]
    fn census_small() {
        assert_eq!(enumerate_connected(2).unwrap().classes.len(), 1);
        let c3 = enumerate_connected(3).unwrap();
        let shapes: Vec<_> = c3.classes.iter().map(|c| c.shape.as_str()).collect();
        assert_eq!(shapes, vec!["P3", "K3"]);
        assert_eq!(c3.labeled_total, 4);
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(7).is_err());
    }

    /// Labeled counts from a direct count of relabelings (orbit-stabilizer), not the census path.
    #[test]
    fn census_four_matches_orbit_stabilizer() {
        let census = enumerate_connected(4).unwrap();
        assert_eq!(census.classes.len(), 6);
        assert_eq!(census.labeled_total, 38);
        for class in &census.classes {
            let g = &class.representative;
            let automorphisms = (1..=4)
                .permutations(4)
                .filter(|p| {
                    let w: Vec<_> = p.iter().map(|&i| v(i)).collect();
                    &g.relabel(&w).unwrap() == g
                })
                .count();
            assert_eq!(class.labeled_count, 24 / automorphisms, "{}", class.shape);
        }
        let expected = [
            ("path", 12),
            ("paw", 12),
            ("C4", 3),
            ("diamond", 6),
            ("star", 4),
            ("K4", 1),
        ];
        for (shape, count) in expected {
            assert_eq!(census.count_of(shape), Some(count), "{shape}");
        }
    }

    #[test]
    fn census_counts_known_sequence() {
        // connected labeled graphs: 1, 1, 4, 38, 728, 26704
        let totals: Vec<usize> = (1..=6)
            .map(|n| connected_labeled(n).unwrap().len())
            .collect();
        assert_eq!(totals, vec![1, 1, 4, 38, 728, 26704]);
        // connected unlabeled graphs: 1, 1, 2, 6, 21, 112
        let classes: Vec<usize> = (1..=5)
            .map(|n| enumerate_connected(n).unwrap().classes.len())
            .collect();
        assert_eq!(classes, vec![1, 1, 2, 6, 21]);
    }
}
