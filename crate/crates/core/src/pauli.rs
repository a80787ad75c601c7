// SPDX-License-Identifier: Apache-2.0

//! Symbolic CV Pauli words and their conjugation by Gaussian gates.
//!
//! A [`PauliWord`] stands for
//!
//! ```text
//! exp[i(b·ξ + c·ξ²)] · ∏_a X_a(u_a ξ) Z_a(v_a ξ)
//! ```
//!
//! with `X(s) = exp(-i s p̂)`, `Z(t) = exp(i t x̂)`, each mode written X-then-Z
//! and modes in ascending order. ξ is a formal parameter. Reordering uses
//! `X(s) Z(t) = e^{-ist} Z(t) X(s)`, so a word's phase is tracked exactly.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::linalg::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PauliWord {
    pub n: usize,
    /// Coefficient of ξ in the phase.
    pub b: Rational,
    /// Coefficient of ξ² in the phase.
    pub c: Rational,
    /// X displacement per ξ on each mode.
    pub u: Vec<Rational>,
    /// Z displacement per ξ on each mode.
    pub v: Vec<Rational>,
}

impl PauliWord {
    pub fn identity(n: usize) -> Self {
        PauliWord {
            n,
            b: Rational::zero(),
            c: Rational::zero(),
            u: vec![Rational::zero(); n],
            v: vec![Rational::zero(); n],
        }
    }

    /// Phase-free word `∏ X_a(u_a ξ) Z_a(v_a ξ)`.
    pub fn from_parts(u: Vec<Rational>, v: Vec<Rational>) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::ModeMismatch(u.len(), v.len()));
        }
        let n = u.len();
        Ok(PauliWord {
            n,
            b: Rational::zero(),
            c: Rational::zero(),
            u,
            v,
        })
    }

    /// `X_a(s·ξ)` on `n` modes.
    pub fn x(n: usize, a: VertexId, s: Rational) -> Self {
        let mut w = Self::identity(n);
        w.u[a.index()] = s;
        w
    }

    /// `Z_a(t·ξ)` on `n` modes.
    pub fn z(n: usize, a: VertexId, t: Rational) -> Self {
        let mut w = Self::identity(n);
        w.v[a.index()] = t;
        w
    }

    pub fn with_phase(mut self, b: Rational, c: Rational) -> Self {
        self.b = b;
        self.c = c;
        self
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero()
            && self.c.is_zero()
            && self.u.iter().all(Rational::is_zero)
            && self.v.iter().all(Rational::is_zero)
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::ModeMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    /// Operator product `self · rhs` in canonical order.
    pub fn multiply(&self, rhs: &PauliWord) -> Result<PauliWord> {
        self.check_same_n(rhs)?;
        // moving each Z of self past each X of rhs on the same mode costs e^{i v1 u2 ξ²}
        let cross: Rational = self
            .v
            .iter()
            .zip(&rhs.u)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .sum();
        Ok(PauliWord {
            n: self.n,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c + cross,
            u: self.u.iter().zip(&rhs.u).map(|(a, b)| a + b).collect(),
            v: self.v.iter().zip(&rhs.v).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn inverse(&self) -> PauliWord {
        let uv: Rational = self.u.iter().zip(&self.v).map(|(a, b)| a * b).sum();
        PauliWord {
            n: self.n,
            b: -&self.b,
            c: uv - &self.c,
            u: self.u.iter().map(|x| -x).collect(),
            v: self.v.iter().map(|x| -x).collect(),
        }
    }

    /// The same word evaluated at `k·ξ`.
    pub fn scale(&self, k: &Rational) -> PauliWord {
        PauliWord {
            n: self.n,
            b: &self.b * k,
            c: &(&self.c * k) * k,
            u: self.u.iter().map(|x| x * k).collect(),
            v: self.v.iter().map(|x| x * k).collect(),
        }
    }

    /// `Σ_a (u_a v'_a − v_a u'_a)`; the two words commute iff this vanishes.
    pub fn symplectic_pairing(&self, other: &PauliWord) -> Result<Rational> {
        self.check_same_n(other)?;
        Ok((0..self.n)
            .map(|a| &self.u[a] * &other.v[a] - &self.v[a] * &other.u[a])
            .sum())
    }

    /// The ξ² phase when every mode is written Z-then-X instead: `c − Σ u_a v_a`.
    pub fn zx_ordered_phase(&self) -> Rational {
        let uv: Rational = self.u.iter().zip(&self.v).map(|(a, b)| a * b).sum();
        &self.c - uv
    }

    /// True when the word equals `exp[-iξ·g]` for the Hermitian form
    /// `g = Σ (u_a p̂_a − v_a x̂_a)`, which holds iff `b = 0` and `c = Σ u_a v_a / 2`.
    pub fn is_exponential_form(&self) -> bool {
        let uv: Rational = self.u.iter().zip(&self.v).map(|(a, b)| a * b).sum();
        self.b.is_zero() && self.c == uv / Rational::from_integer(2)
    }

    /// Restriction to one mode, keeping the whole phase on it when `keep_phase`.
    pub fn mode_factor(&self, a: VertexId, keep_phase: bool) -> PauliWord {
        let mut w = Self::identity(self.n);
        w.u[a.index()] = self.u[a.index()].clone();
        w.v[a.index()] = self.v[a.index()].clone();
        if keep_phase {
            w.b = self.b.clone();
            w.c = self.c.clone();
        }
        w
    }
}

fn coeff(f: &mut fmt::Formatter<'_>, k: &Rational) -> fmt::Result {
    if k.is_one() {
        f.write_str("ξ")
    } else if k == &Rational::from_integer(-1) {
        f.write_str("-ξ")
    } else if k.is_integer() {
        write!(f, "{k}ξ")
    } else {
        write!(f, "({k})ξ")
    }
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = 0;
        if !self.b.is_zero() || !self.c.is_zero() {
            f.write_str("e^{i[")?;
            if !self.b.is_zero() {
                write!(f, "({})ξ", self.b)?;
                if !self.c.is_zero() {
                    f.write_str("+")?;
                }
            }
            if !self.c.is_zero() {
                write!(f, "({})ξ²", self.c)?;
            }
            f.write_str("]}")?;
            parts += 1;
        }
        for a in 0..self.n {
            for (letter, k) in [("X", &self.u[a]), ("Z", &self.v[a])] {
                if k.is_zero() {
                    continue;
                }
                if parts > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{letter}{}(", a + 1)?;
                coeff(f, k)?;
                f.write_str(")")?;
                parts += 1;
            }
        }
        if parts == 0 {
            f.write_str("I")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliWord({self})")
    }
}

/// A Gaussian generator acting on one or two modes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    /// `F = exp[i(π/4)(x̂² + p̂²)]`.
    Fourier(VertexId),
    /// `F⁻¹`.
    InverseFourier(VertexId),
    /// `P(η) = exp[i(η/2) x̂²]`.
    Phase(VertexId, Rational),
    /// `P_X(η) = F P(η) F⁻¹ = exp[i(η/2) p̂²]`.
    ConjPhase(VertexId, Rational),
    /// `exp[i g x̂_a x̂_b]`; the unit-strength gate is `C_Z`.
    ControlledZ(VertexId, VertexId, Rational),
}

impl Gate {
    pub fn cz(a: VertexId, b: VertexId) -> Gate {
        Gate::ControlledZ(a, b, Rational::one())
    }

    pub fn modes(&self) -> Vec<VertexId> {
        match self {
            Gate::Fourier(a)
            | Gate::InverseFourier(a)
            | Gate::Phase(a, _)
            | Gate::ConjPhase(a, _) => {
                vec![*a]
            }
            Gate::ControlledZ(a, b, _) => vec![*a, *b],
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        for a in self.modes() {
            a.check(n)?;
        }
        if let Gate::ControlledZ(a, b, _) = self {
            if a == b {
                return Err(Error::InvalidGraph(format!(
                    "CZ needs two distinct modes, got {a},{b}"
                )));
            }
        }
        Ok(())
    }

    pub fn inverse(&self) -> Gate {
        match self {
            Gate::Fourier(a) => Gate::InverseFourier(*a),
            Gate::InverseFourier(a) => Gate::Fourier(*a),
            Gate::Phase(a, eta) => Gate::Phase(*a, -eta),
            Gate::ConjPhase(a, eta) => Gate::ConjPhase(*a, -eta),
            Gate::ControlledZ(a, b, g) => Gate::ControlledZ(*a, *b, -g),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Fourier(a) => write!(f, "F({a})"),
            Gate::InverseFourier(a) => write!(f, "F({a})'"),
            Gate::Phase(a, eta) => write!(f, "P({a},{eta})"),
            Gate::ConjPhase(a, eta) => write!(f, "PX({a},{eta})"),
            Gate::ControlledZ(a, b, g) => {
                write!(f, "CZ({a},{b})")?;
                if g.signum() < 0 {
                    f.write_str("'")?;
                }
                let mag = g.abs();
                if !mag.is_one() {
                    write!(f, "^{mag}")?;
                }
                Ok(())
            }
        }
    }
}

/// Gates in time order: the first gate acts on the state first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GateWord {
    n: usize,
    gates: Vec<Gate>,
}

impl GateWord {
    pub fn identity(n: usize) -> Self {
        GateWord {
            n,
            gates: Vec::new(),
        }
    }

    pub fn new(n: usize, gates: Vec<Gate>) -> Result<Self> {
        for g in &gates {
            g.validate(n)?;
        }
        Ok(GateWord { n, gates })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n)?;
        self.gates.push(gate);
        Ok(())
    }

    /// `self` followed in time by `later`.
    pub fn then(&self, later: &GateWord) -> Result<GateWord> {
        if self.n != later.n {
            return Err(Error::ModeMismatch(self.n, later.n));
        }
        let mut gates = self.gates.clone();
        gates.extend(later.gates.iter().cloned());
        Ok(GateWord { n: self.n, gates })
    }

    pub fn inverse(&self) -> GateWord {
        GateWord {
            n: self.n,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }
}

impl fmt::Display for GateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gates.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GateWord[{self}]")
    }
}

/// `g · W · g⁻¹` in canonical form.
pub fn conjugate(w: &PauliWord, gate: &Gate) -> Result<PauliWord> {
    gate.validate(w.n)?;
    let mut out = w.clone();
    let half = Rational::new(1, 2);
    match gate {
        Gate::Fourier(a) => {
            let i = a.index();
            let (u, v) = (&w.u[i], &w.v[i]);
            out.c -= u * v;
            out.u[i] = -v;
            out.v[i] = u.clone();
        }
        Gate::InverseFourier(a) => {
            let i = a.index();
            let (u, v) = (&w.u[i], &w.v[i]);
            out.c -= u * v;
            out.u[i] = v.clone();
            out.v[i] = -u;
        }
        Gate::Phase(a, eta) => {
            let i = a.index();
            let u = &w.u[i];
            out.v[i] += eta * u;
            out.c += &(&(eta * u) * u) * &half;
        }
        Gate::ConjPhase(a, eta) => {
            let i = a.index();
            let v = &w.v[i];
            out.u[i] -= eta * v;
            out.c -= &(&(eta * v) * v) * &half;
        }
        Gate::ControlledZ(a, b, g) => {
            let (i, j) = (a.index(), b.index());
            let (ua, ub) = (&w.u[i], &w.u[j]);
            out.v[i] += g * ub;
            out.v[j] += g * ua;
            out.c += &(g * ua) * ub;
        }
    }
    Ok(out)
}

/// Conjugation by a whole word: `U W U⁻¹` with `U = g_k ⋯ g_1`.
pub fn conjugate_word(w: &PauliWord, word: &GateWord) -> Result<PauliWord> {
    if w.n != word.n {
        return Err(Error::ModeMismatch(w.n, word.n));
    }
    word.gates
        .iter()
        .try_fold(w.clone(), |acc, g| conjugate(&acc, g))
}

/// The macro `U_LG_a = P_X,a(1) ∏_{b ∈ N_a} P_b(−1)`, optionally daggered and
/// raised to a power. Its factors act on distinct modes and commute, so the
/// power scales every η.
pub fn ulg_word(g: &Graph, a: VertexId, dagger: bool, power: u32) -> Result<GateWord> {
    let nbrs = g.neighbors(a)?;
    Ok(ulg_from_neighbors(g.n(), a, &nbrs, dagger, power))
}

pub(crate) fn ulg_from_neighbors(
    n: usize,
    a: VertexId,
    nbrs: &[VertexId],
    dagger: bool,
    power: u32,
) -> GateWord {
    let sign = if dagger { -1 } else { 1 };
    let eta = Rational::from_integer(sign * power as i64);
    let mut gates = vec![Gate::ConjPhase(a, eta.clone())];
    gates.extend(nbrs.iter().map(|&b| Gate::Phase(b, -&eta)));
    GateWord { n, gates }
}
