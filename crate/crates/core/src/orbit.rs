// SPDX-License-Identifier: Apache-2.0

//! Local-complementation orbits of labeled graphs and the coarser classes
//! obtained by also identifying isomorphic graphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, connected_labeled, shape_name, CanonicalKey, Graph, VertexId};

/// Recorded in every [`ClassReport`].
pub const CLASS_DISCLAIMER: &str = "classes are LC reachability merged by graph isomorphism; \
a local Gaussian realization of each LC step is not established by this census";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct OrbitEdge {
    pub from: usize,
    pub to: usize,
    pub vertex: VertexId,
}

/// Labeled LC orbit: nodes in ascending graph order, one edge per
/// `(i < j, a)` with `λ_a(nodes[i]) = nodes[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitGraph {
    pub nodes: Vec<Graph>,
    pub edges: Vec<OrbitEdge>,
}

impl OrbitGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, g: &Graph) -> Option<usize> {
        self.nodes.binary_search(g).ok()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.index_of(g).is_some()
    }

    /// Member count per isomorphism type, keyed by [`shape_name`].
    pub fn census(&self) -> Result<BTreeMap<String, usize>> {
        let mut out = BTreeMap::new();
        for g in &self.nodes {
            *out.entry(shape_name(g)?).or_default() += 1;
        }
        Ok(out)
    }

    /// Undirected DOT rendering. Node labels are graph specs, edge labels the
    /// LC vertex.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph lc_orbit {\n");
        for (i, g) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{g}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -- n{} [label=\"{}\"];", e.from, e.to, e.vertex);
        }
        s.push_str("}\n");
        s
    }
}

fn check_input(g: &Graph) -> Result<()> {
    if !g.is_unweighted() {
        return Err(Error::WeightedInput);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn closure(g: &Graph) -> Result<BTreeSet<Graph>> {
    let mut seen = BTreeSet::from([g.clone()]);
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(h) = queue.pop_front() {
        for a in h.vertices() {
            let next = h.local_complement(a)?;
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Breadth-first closure of `g` under `λ_a` for every vertex `a`.
pub fn lc_orbit(g: &Graph) -> Result<OrbitGraph> {
    check_input(g)?;
    let nodes: Vec<Graph> = closure(g)?.into_iter().collect();
    let mut edges = Vec::new();
    for (i, h) in nodes.iter().enumerate() {
        for a in h.vertices() {
            let j = nodes
                .binary_search(&h.local_complement(a)?)
                .expect("orbit is closed");
            if i < j {
                edges.push(OrbitEdge {
                    from: i,
                    to: j,
                    vertex: a,
                });
            }
        }
    }
    edges.sort();
    Ok(OrbitGraph { nodes, edges })
}

/// Every connected labeled graph on `n ≤ 6` vertices, split into LC orbits.
/// Orbits are ordered by their first node.
pub fn labeled_orbits(n: usize) -> Result<Vec<OrbitGraph>> {
    let mut remaining: BTreeSet<Graph> = connected_labeled(n)?.into_iter().collect();
    let mut out = Vec::new();
    while let Some(g) = remaining.pop_first() {
        let orbit = lc_orbit(&g)?;
        for h in &orbit.nodes {
            remaining.remove(h);
        }
        out.push(orbit);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassMember {
    pub shape: String,
    pub key: CanonicalKey,
    pub labeled_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcClass {
    pub representative: Graph,
    pub members: Vec<ClassMember>,
    pub labeled_size: usize,
    pub labeled_orbits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub classes: Vec<LcClass>,
    pub disclaimer: &'static str,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Classes of connected `n`-vertex graphs under LC and isomorphism.
pub fn classify(n: usize) -> Result<ClassReport> {
    let orbits = labeled_orbits(n)?;
    // isomorphism types seen per orbit, then union orbits sharing a type
    let mut key_counts: BTreeMap<CanonicalKey, usize> = BTreeMap::new();
    let mut orbit_keys = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let mut keys = BTreeSet::new();
        for g in &orbit.nodes {
            let k = canonical_form(g)?;
            *key_counts.entry(k).or_default() += 1;
            keys.insert(k);
        }
        orbit_keys.push(keys);
    }
    let mut parent: Vec<usize> = (0..orbits.len()).collect();
    let mut owner: BTreeMap<CanonicalKey, usize> = BTreeMap::new();
    for (i, keys) in orbit_keys.iter().enumerate() {
        for k in keys {
            match owner.get(k) {
                Some(&j) => {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri.max(rj)] = ri.min(rj);
                }
                None => {
                    owner.insert(*k, i);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, (BTreeSet<CanonicalKey>, usize)> = BTreeMap::new();
    for (i, keys) in orbit_keys.into_iter().enumerate() {
        let root = find(&mut parent, i);
        let entry = groups.entry(root).or_default();
        entry.0.extend(keys);
        entry.1 += 1;
    }
    let mut classes = groups
        .into_values()
        .map(|(keys, labeled_orbits)| {
            let mut members = keys
                .into_iter()
                .map(|key| {
                    Ok(ClassMember {
                        shape: shape_name(&key.graph())?,
                        key,
                        labeled_count: key_counts[&key],
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            members.sort_by_key(|m| (m.key.mask.count_ones(), m.key));
            Ok(LcClass {
                representative: members[0].key.graph(),
                labeled_size: members.iter().map(|m| m.labeled_count).sum(),
                members,
                labeled_orbits,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    classes.sort_by_key(|c| (c.representative.edge_count(), c.members[0].key));
    Ok(ClassReport {
        n,
        classes,
        disclaimer: CLASS_DISCLAIMER,
    })
}

/// [`classify`] for every `n` in `2..=n_max`, with `2 ≤ n_max ≤ 5`.
pub fn classes_under_lc_iso(n_max: usize) -> Result<Vec<ClassReport>> {
    if !(2..=5).contains(&n_max) {
        return Err(Error::OutOfRange {
            what: "n_max",
            value: n_max,
            range: "2..=5",
        });
    }
    (2..=n_max).map(classify).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, path, star};
    use crate::graph::{are_isomorphic, v};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn no2() -> Graph {
        Graph::from_edges(4, &[(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn path_orbit() {
        let o = lc_orbit(&path(4)).unwrap();
        assert_eq!(o.len(), 11);
        let census = o.census().unwrap();
        let want: BTreeMap<String, usize> = [("path", 4), ("paw", 4), ("diamond", 2), ("C4", 1)]
            .map(|(s, k)| (s.to_string(), k))
            .into();
        assert_eq!(census, want);
        assert!(o.contains(&no2()));
        assert!(o.nodes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn walk_visits_the_whole_path_orbit() {
        let mut g = path(4);
        let mut seen = BTreeSet::from([g.clone()]);
        for a in [3, 2, 3, 1, 3, 1, 3, 4, 1, 2] {
            g = g.local_complement(v(a)).unwrap();
            seen.insert(g.clone());
        }
        assert_eq!(seen.len(), 11);
        assert_eq!(
            seen.into_iter().collect::<Vec<_>>(),
            lc_orbit(&path(4)).unwrap().nodes
        );
    }

    #[test]
    fn k4_and_k2_orbits() {
        let o = lc_orbit(&complete(4)).unwrap();
        assert_eq!(o.len(), 5);
        for c in 1..=4 {
            assert!(o.contains(&star(4, c)));
        }
        let k2 = lc_orbit(&complete(2)).unwrap();
        assert_eq!(k2.nodes, vec![complete(2)]);
        assert!(k2.edges.is_empty());
    }

    #[test]
    fn orbit_errors() {
        assert_eq!(lc_orbit(&Graph::empty(3)), Err(Error::Disconnected));
        let mut w = path(3);
        w.add_edge(v(1), v(3), crate::Rational::new(1, 2)).unwrap();
        assert_eq!(lc_orbit(&w), Err(Error::WeightedInput));
    }

    #[test]
    fn orbit_edges_are_lc_steps() {
        let o = lc_orbit(&path(4)).unwrap();
        for e in &o.edges {
            assert_eq!(
                o.nodes[e.from].local_complement(e.vertex).unwrap(),
                o.nodes[e.to]
            );
            assert_eq!(
                o.nodes[e.to].local_complement(e.vertex).unwrap(),
                o.nodes[e.from]
            );
        }
    }

    #[test]
    fn path_family_splits_into_three_orbits() {
        let family: BTreeSet<Graph> = connected_labeled(4)
            .unwrap()
            .into_iter()
            .filter(|g| ["path", "paw", "C4", "diamond"].contains(&shape_name(g).unwrap().as_str()))
            .collect();
        assert_eq!(family.len(), 33);
        let orbits: BTreeSet<Vec<Graph>> =
            family.iter().map(|g| lc_orbit(g).unwrap().nodes).collect();
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.len() == 11));
        let union: BTreeSet<Graph> = orbits.into_iter().flatten().collect();
        assert_eq!(union, family);
    }

    #[test]
    fn labeled_orbits_partition() {
        for n in 2..=5 {
            let orbits = labeled_orbits(n).unwrap();
            let total: usize = orbits.iter().map(OrbitGraph::len).sum();
            assert_eq!(total, connected_labeled(n).unwrap().len());
            for o in &orbits {
                assert!(o.nodes.iter().all(Graph::is_connected));
            }
        }
    }

    #[test]
    fn class_counts() {
        let reports = classes_under_lc_iso(4).unwrap();
        let counts: Vec<usize> = reports.iter().map(|r| r.classes.len()).collect();
        assert_eq!(counts, vec![1, 1, 2]);
        let n3: Vec<&str> = reports[1].classes[0]
            .members
            .iter()
            .map(|m| m.shape.as_str())
            .collect();
        assert_eq!(n3, vec!["P3", "K3"]);
        let n4: BTreeSet<BTreeSet<&str>> = reports[2]
            .classes
            .iter()
            .map(|c| c.members.iter().map(|m| m.shape.as_str()).collect())
            .collect();
        let want: BTreeSet<BTreeSet<&str>> =
            [vec!["path", "paw", "C4", "diamond"], vec!["star", "K4"]]
                .map(|c| c.into_iter().collect())
                .into();
        assert_eq!(n4, want);
        let sizes: Vec<usize> = reports[2].classes.iter().map(|c| c.labeled_size).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 38);
        assert!(reports.iter().all(|r| r.disclaimer == CLASS_DISCLAIMER));
        assert!(classes_under_lc_iso(1).is_err());
        assert!(classes_under_lc_iso(6).is_err());
    }

    #[test]
    fn five_vertex_classes_partition() {
        let r = classify(5).unwrap();
        assert_eq!(r.classes.iter().map(|c| c.labeled_size).sum::<usize>(), 728);
        let shapes: usize = r.classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(shapes, 21);
    }

    // independent closure: DFS with shuffled vertex order
    fn shuffled_closure(g: &Graph, rng: &mut ChaCha8Rng) -> BTreeSet<Graph> {
        let mut seen = BTreeSet::from([g.clone()]);
        let mut stack = vec![g.clone()];
        while let Some(h) = stack.pop() {
            let mut order: Vec<VertexId> = h.vertices().collect();
            order.shuffle(rng);
            for a in order {
                let next = h.local_complement(a).unwrap();
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
        seen
    }

    #[test]
    fn closure_ignores_expansion_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in connected_labeled(4).unwrap() {
            let want: BTreeSet<Graph> = lc_orbit(&g).unwrap().nodes.into_iter().collect();
            for _ in 0..3 {
                assert_eq!(shuffled_closure(&g, &mut rng), want);
            }
        }
    }

    #[test]
    fn isomorphic_starts_give_isomorphic_orbits() {
        let base = path(4);
        let base_orbit = lc_orbit(&base).unwrap();
        for g in connected_labeled(4).unwrap() {
            let Some(w) = are_isomorphic(&base, &g).unwrap() else {
                continue;
            };
            let orbit = lc_orbit(&g).unwrap();
            assert_eq!(orbit.len(), base_orbit.len());
            let image: BTreeSet<Graph> = base_orbit
                .nodes
                .iter()
                .map(|h| h.relabel(&w).unwrap())
                .collect();
            assert_eq!(image, orbit.nodes.iter().cloned().collect());
        }
    }

    #[test]
    fn dot_lists_every_node() {
        let o = lc_orbit(&complete(4)).unwrap();
        let dot = o.to_dot();
        assert!(dot.starts_with("graph lc_orbit {"));
        assert_eq!(dot.matches("[label=\"n=4;").count(), 5);
        assert_eq!(dot.matches(" -- ").count(), o.edges.len());
    }

    proptest! {
        #[test]
        fn classes_stable_under_relabeling(perm in Just((1..=4usize).collect::<Vec<_>>()).prop_shuffle()) {
            let perm: Vec<VertexId> = perm.into_iter().map(v).collect();
            let report = classify(4).unwrap();
            let class_of = |g: &Graph| {
                let k = canonical_form(g).unwrap();
                report.classes.iter().position(|c| c.members.iter().any(|m| m.key == k)).unwrap()
            };
            for orbit in labeled_orbits(4).unwrap() {
                let relabeled = lc_orbit(&orbit.nodes[0].relabel(&perm).unwrap()).unwrap();
                prop_assert_eq!(relabeled.len(), orbit.len());
                for h in &relabeled.nodes {
                    prop_assert_eq!(class_of(h), class_of(&orbit.nodes[0]));
                }
            }
        }
    }
}
