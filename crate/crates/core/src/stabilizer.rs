// SPDX-License-Identifier: Apache-2.0

//! Nullifier-space picture of ideal CV graph states.
//!
//! The graph state of `G` is the joint zero eigenstate of the nullifiers
//! `g_a = p̂_a − Σ_b A_ab x̂_b`. A [`NullifierBasis`] stores their coefficient
//! rows `(α | β)` for `Σ α_j x̂_j + β_j p̂_j`; two states are the same exactly
//! when the row spaces agree. The stabilizer `exp[-iξ g]` of a row has
//! displacements `(u, v) = (β, −α)`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::linalg::{rowspace_equal, RatMatrix, Rational};
use crate::pauli::{conjugate_word, Gate, GateWord, PauliWord};
use crate::symplectic::word_matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NullifierBasis {
    n: usize,
    rows: RatMatrix,
}

impl NullifierBasis {
    /// Wraps an `n × 2n` matrix; checks full rank and isotropy.
    pub fn new(rows: RatMatrix) -> Result<Self> {
        let n = rows.rows();
        if rows.cols() != 2 * n {
            return Err(Error::DimensionMismatch(format!(
                "nullifier basis must be n×2n, got {}×{}",
                n,
                rows.cols()
            )));
        }
        let b = NullifierBasis { n, rows };
        if !b.is_lagrangian() {
            return Err(Error::NotLagrangian);
        }
        Ok(b)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &RatMatrix {
        &self.rows
    }

    /// `ω(r, r') = α·β' − β·α'` for rows `r, r'`.
    fn pairing(&self, i: usize, j: usize) -> Rational {
        let (ri, rj) = (self.rows.row(i), self.rows.row(j));
        let n = self.n;
        (0..n)
            .filter(|&a| !(ri[a].is_zero() && ri[n + a].is_zero()))
            .map(|a| &ri[a] * &rj[n + a] - &ri[n + a] * &rj[a])
            .sum()
    }

    pub fn is_isotropic(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.pairing(i, j).is_zero()))
    }

    pub fn is_lagrangian(&self) -> bool {
        self.rows.rank() == self.n && self.is_isotropic()
    }

    /// Row-reduced form; equal for bases of the same state.
    pub fn canonical(&self) -> NullifierBasis {
        NullifierBasis {
            n: self.n,
            rows: self.rows.rowspace_key(),
        }
    }

    /// Conjugates one gate into the nullifiers by direct column substitution.
    pub fn apply_gate(&mut self, gate: &Gate) {
        let n = self.n;
        let rows = &mut self.rows;
        for i in 0..n {
            match gate {
                Gate::Fourier(a) => {
                    // x -> p, p -> -x: α_a' = -β_a, β_a' = α_a
                    let (xa, pa) = (a.index(), n + a.index());
                    let alpha = rows[(i, xa)].clone();
                    rows[(i, xa)] = -&rows[(i, pa)];
                    rows[(i, pa)] = alpha;
                }
                Gate::InverseFourier(a) => {
                    let (xa, pa) = (a.index(), n + a.index());
                    let alpha = rows[(i, xa)].clone();
                    rows[(i, xa)] = rows[(i, pa)].clone();
                    rows[(i, pa)] = -alpha;
                }
                Gate::Phase(a, eta) => {
                    // p -> p - ηx: α_a -= η β_a
                    let (xa, pa) = (a.index(), n + a.index());
                    if !rows[(i, pa)].is_zero() {
                        let d = eta * &rows[(i, pa)];
                        rows[(i, xa)] -= &d;
                    }
                }
                Gate::ConjPhase(a, eta) => {
                    // x -> x + ηp: β_a += η α_a
                    let (xa, pa) = (a.index(), n + a.index());
                    if !rows[(i, xa)].is_zero() {
                        let d = eta * &rows[(i, xa)];
                        rows[(i, pa)] += &d;
                    }
                }
                Gate::ControlledZ(a, b, g) => {
                    // p_a -> p_a - g x_b, p_b -> p_b - g x_a
                    let (xa, xb, pa, pb) = (a.index(), b.index(), n + a.index(), n + b.index());
                    let da = g * &rows[(i, pa)];
                    let db = g * &rows[(i, pb)];
                    rows[(i, xb)] -= &da;
                    rows[(i, xa)] -= &db;
                }
            }
        }
    }

    /// Stabilizer generator of row `i`, `exp[-iξ g_i]`, in canonical form.
    pub fn generator_word(&self, i: usize) -> PauliWord {
        let row = self.rows.row(i);
        let n = self.n;
        let u: Vec<Rational> = row[n..].to_vec();
        let v: Vec<Rational> = row[..n].iter().map(|x| -x).collect();
        let uv: Rational = u.iter().zip(&v).map(|(a, b)| a * b).sum();
        PauliWord::from_parts(u, v)
            .expect("equal lengths")
            .with_phase(Rational::zero(), uv / Rational::from_integer(2))
    }
}

/// Row `a` is `(−W_a | e_a)`, i.e. `p̂_a − Σ_b W_ab x̂_b`.
pub fn nullifiers_of(g: &Graph) -> NullifierBasis {
    let n = g.n();
    let mut rows = RatMatrix::zeros(n, 2 * n);
    let w = g.weight_matrix();
    for a in 0..n {
        for b in 0..n {
            if !w[(a, b)].is_zero() {
                rows[(a, b)] = -&w[(a, b)];
            }
        }
        rows[(a, n + a)] = Rational::one();
    }
    NullifierBasis { n, rows }
}

/// `G_a(ξ) = X_a(ξ) ∏_{b ∈ N_a} Z_b(ξ)` for each vertex, in vertex order.
pub fn stabilizer_words_of(g: &Graph) -> Result<Vec<PauliWord>> {
    g.require_unweighted()?;
    let n = nullifiers_of(g);
    Ok((0..g.n()).map(|i| n.generator_word(i)).collect())
}

/// Nullifiers of `U|ψ⟩` for the state `|ψ⟩` with basis `basis`.
pub fn transform(basis: &NullifierBasis, word: &GateWord) -> Result<NullifierBasis> {
    if basis.n != word.n() {
        return Err(Error::ModeMismatch(basis.n, word.n()));
    }
    let m = word_matrix(word)?;
    Ok(NullifierBasis {
        n: basis.n,
        rows: basis.rows.mul(m.matrix())?,
    })
}

pub fn spans_equal(a: &NullifierBasis, b: &NullifierBasis) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::ModeMismatch(a.n, b.n));
    }
    rowspace_equal(&a.rows, &b.rows)
}

/// What a nullifier basis looks like as a graph state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecoveryResult {
    Unweighted(Graph),
    /// Adjacency with weights outside {0, 1}, or with nonzero self-weights
    /// (a local phase gate away from a graph state); `self_weights[a]` is `A'_aa`.
    Weighted {
        graph: Graph,
        self_weights: Vec<Rational>,
    },
    /// The p-block is singular; no adjacency matrix exists.
    NonGraphForm(NullifierBasis),
}

impl RecoveryResult {
    pub fn kind(&self) -> &'static str {
        match self {
            RecoveryResult::Unweighted(_) => "unweighted",
            RecoveryResult::Weighted { .. } => "weighted",
            RecoveryResult::NonGraphForm(_) => "non-graph",
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match self {
            RecoveryResult::Unweighted(g) | RecoveryResult::Weighted { graph: g, .. } => Some(g),
            RecoveryResult::NonGraphForm(_) => None,
        }
    }
}

impl Serialize for RecoveryResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RecoveryResult", 4)?;
        s.serialize_field("kind", self.kind())?;
        match self {
            RecoveryResult::Unweighted(g) => {
                s.serialize_field("graph", &g.to_string())?;
                s.serialize_field("weights", &g.edges())?;
            }
            RecoveryResult::Weighted {
                graph,
                self_weights,
            } => {
                s.serialize_field("graph", &graph.to_string())?;
                s.serialize_field("weights", &graph.edges())?;
                s.serialize_field("self_weights", self_weights)?;
            }
            RecoveryResult::NonGraphForm(b) => {
                let rows: Vec<Vec<Rational>> = b
                    .canonical()
                    .rows
                    .iter_rows()
                    .map(<[Rational]>::to_vec)
                    .collect();
                s.serialize_field("basis_rref", &rows)?;
            }
        }
        s.end()
    }
}

/// Reads the adjacency `A' = −C⁻¹B` off a basis written as `[B | C]`.
pub fn recover(basis: &NullifierBasis) -> Result<RecoveryResult> {
    if !basis.is_lagrangian() {
        return Err(Error::NotLagrangian);
    }
    let n = basis.n;
    let x_block = basis.rows.column_block(0, n);
    let p_block = basis.rows.column_block(n, 2 * n);
    let c_inv = match p_block.inverse() {
        Ok(inv) => inv,
        Err(Error::SingularMatrix) => return Ok(RecoveryResult::NonGraphForm(basis.canonical())),
        Err(e) => return Err(e),
    };
    let mut adj = c_inv.mul(&x_block)?;
    for i in 0..n {
        for j in 0..n {
            let x = -&adj[(i, j)];
            adj[(i, j)] = x;
        }
    }
    if adj != adj.transpose() {
        // isotropy forces symmetry
        return Err(Error::NotLagrangian);
    }
    let self_weights: Vec<Rational> = (0..n).map(|i| adj[(i, i)].clone()).collect();
    let mut off = adj.clone();
    for i in 0..n {
        off[(i, i)] = Rational::zero();
    }
    let graph = Graph::from_weights(&off)?;
    if graph.is_unweighted() && self_weights.iter().all(Rational::is_zero) {
        Ok(RecoveryResult::Unweighted(graph))
    } else {
        Ok(RecoveryResult::Weighted {
            graph,
            self_weights,
        })
    }
}

/// Image of one source stabilizer generator and its reduction over the target generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorImage {
    pub source: VertexId,
    pub image: PauliWord,
    /// `k` with `image = ∏_j H_j(k_j ξ)·e^{i·residual}`; `None` when the image
    /// leaves the target stabilizer group.
    pub expansion: Option<Vec<Rational>>,
    /// ξ² phase left over after dividing by the product of target generators.
    pub residual_phase: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub valid: bool,
    pub spans_equal: bool,
    pub recovered: RecoveryResult,
    pub generator_images: Vec<GeneratorImage>,
}

/// Expresses `w` over the stabilizer generators of an unweighted target graph.
fn reduce_over_targets(w: &PauliWord, targets: &[PauliWord]) -> Option<(Vec<Rational>, Rational)> {
    // the target generators carry u = e_j, so the coefficients are read off u
    let k = w.u.clone();
    let product = targets
        .iter()
        .zip(&k)
        .filter(|(_, kj)| !kj.is_zero())
        .try_fold(PauliWord::identity(w.n), |acc, (h, kj)| {
            acc.multiply(&h.scale(kj))
        })
        .ok()?;
    if product.u != w.u || product.v != w.v || product.b != w.b {
        return None;
    }
    Some((k, &w.c - &product.c))
}

/// Decides whether `word` carries the graph state of `source` to that of `target`.
pub fn verify_map(source: &Graph, word: &GateWord, target: &Graph) -> Result<MapReport> {
    source.require_unweighted()?;
    target.require_unweighted()?;
    if source.n() != target.n() {
        return Err(Error::ModeMismatch(source.n(), target.n()));
    }
    if word.n() != source.n() {
        return Err(Error::ModeMismatch(word.n(), source.n()));
    }
    let transformed = transform(&nullifiers_of(source), word)?;
    let same = spans_equal(&transformed, &nullifiers_of(target))?;
    let recovered = recover(&transformed)?;
    let targets = stabilizer_words_of(target)?;
    let mut images = Vec::with_capacity(source.n());
    for (i, g) in stabilizer_words_of(source)?.iter().enumerate() {
        let image = conjugate_word(g, word)?;
        let reduced = if same {
            reduce_over_targets(&image, &targets)
        } else {
            None
        };
        let (expansion, residual_phase) = match reduced {
            Some((k, r)) => (Some(k), Some(r)),
            None => (None, None),
        };
        images.push(GeneratorImage {
            source: VertexId::from_index(i),
            image,
            expansion,
            residual_phase,
        });
    }
    let valid = same
        && images
            .iter()
            .all(|g| g.residual_phase.as_ref().is_some_and(Rational::is_zero));
    Ok(MapReport {
        valid,
        spans_equal: same,
        recovered,
        generator_images: images,
    })
}
