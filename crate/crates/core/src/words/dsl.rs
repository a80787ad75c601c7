// SPDX-License-Identifier: Apache-2.0

//! Gate-word text format.
//!
//! ```text
//! word     := ws* (term (ws+ term)*)? ws*
//! term     := base modifier*
//! base     := "F(" i ")" | "P(" i "," rat ")" | "PX(" i "," rat ")"
//!           | "CZ(" i "," j ")" | "ULG(" i ")"
//! modifier := "'" | "^" int
//! rat      := int ("/" int)?
//! ```
//!
//! `'` is the adjoint and `^k` a power; modifiers compose, and a negative
//! power counts as an adjoint. Terms are listed in the order they are written.
//! Which one acts first is decided by the caller.

use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::linalg::Rational;
use crate::pauli::{ulg_from_neighbors, Gate, GateWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermKind {
    Fourier(VertexId),
    Phase(VertexId, Rational),
    ConjPhase(VertexId, Rational),
    ControlledZ(VertexId, VertexId),
    /// `U_LG` at a vertex, expanded from a neighborhood at evaluation time.
    Ulg(VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub kind: TermKind,
    pub dagger: bool,
    pub power: u32,
    /// Byte range of the term in the parsed text.
    pub span: Range<usize>,
}

impl Term {
    pub fn is_macro(&self) -> bool {
        matches!(self.kind, TermKind::Ulg(_))
    }

    /// The vertex a `ULG` term is centered on.
    pub fn macro_vertex(&self) -> Option<VertexId> {
        match self.kind {
            TermKind::Ulg(a) => Some(a),
            _ => None,
        }
    }

    fn signed_power(&self) -> Rational {
        let k = Rational::from_integer(self.power as i64);
        if self.dagger {
            -k
        } else {
            k
        }
    }

    /// Gates of the term; a macro uses `nbrs` as the neighborhood of its vertex.
    pub fn expand_with(&self, n: usize, nbrs: &[VertexId]) -> Vec<Gate> {
        match &self.kind {
            TermKind::Fourier(a) => {
                let g = if self.dagger {
                    Gate::InverseFourier(*a)
                } else {
                    Gate::Fourier(*a)
                };
                vec![g; self.power as usize]
            }
            TermKind::Phase(a, eta) => vec![Gate::Phase(*a, eta * &self.signed_power())],
            TermKind::ConjPhase(a, eta) => vec![Gate::ConjPhase(*a, eta * &self.signed_power())],
            TermKind::ControlledZ(a, b) => vec![Gate::ControlledZ(*a, *b, self.signed_power())],
            TermKind::Ulg(a) => ulg_from_neighbors(n, *a, nbrs, self.dagger, self.power)
                .gates()
                .to_vec(),
        }
    }

    /// Gates of the term, macros reading neighborhoods from `ctx`.
    pub fn expand(&self, ctx: &Graph) -> Result<Vec<Gate>> {
        let nbrs = match self.kind {
            TermKind::Ulg(a) => ctx.neighbors(a)?,
            _ => Vec::new(),
        };
        Ok(self.expand_with(ctx.n(), &nbrs))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            TermKind::Fourier(a) => write!(f, "F({a})")?,
            TermKind::Phase(a, eta) => write!(f, "P({a},{eta})")?,
            TermKind::ConjPhase(a, eta) => write!(f, "PX({a},{eta})")?,
            TermKind::ControlledZ(a, b) => write!(f, "CZ({a},{b})")?,
            TermKind::Ulg(a) => write!(f, "ULG({a})")?,
        }
        if self.dagger {
            f.write_str("'")?;
        }
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

/// A parsed word over `n` modes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordAst {
    pub n: usize,
    pub terms: Vec<Term>,
}

impl WordAst {
    /// Expansion with the terms applied left to right, macros read from `ctx`.
    pub fn expand(&self, ctx: &Graph) -> Result<GateWord> {
        self.expand_in_order(&(0..self.terms.len()).collect::<Vec<_>>(), ctx)
    }

    /// Expansion applying `terms[order[0]]` first.
    pub fn expand_in_order(&self, order: &[usize], ctx: &Graph) -> Result<GateWord> {
        if ctx.n() != self.n {
            return Err(Error::ModeMismatch(self.n, ctx.n()));
        }
        let mut gates = Vec::new();
        for &i in order {
            gates.extend(self.terms[i].expand(ctx)?);
        }
        GateWord::new(self.n, gates)
    }
}

impl fmt::Display for WordAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.text[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected {lit:?}")))
        }
    }

    fn integer(&mut self) -> Result<(i64, usize)> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(Error::parse(start, "expected an integer"));
        }
        let value = self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "integer too large"))?;
        Ok((value, start))
    }

    fn vertex(&mut self) -> Result<VertexId> {
        let (k, at) = self.integer()?;
        if k < 1 || k as usize > self.n {
            return Err(Error::parse(
                at,
                format!("vertex {k} out of range 1..={}", self.n),
            ));
        }
        Ok(VertexId::new(k as usize))
    }

    fn rational(&mut self) -> Result<Rational> {
        let (num, _) = self.integer()?;
        if self.peek() != Some(b'/') {
            return Ok(Rational::from_integer(num));
        }
        self.pos += 1;
        let (den, at) = self.integer()?;
        if den <= 0 {
            return Err(Error::parse(at, "denominator must be positive"));
        }
        Ok(Rational::new(num, den))
    }

    fn term(&mut self) -> Result<Term> {
        let start = self.pos;
        let rest = &self.text[start..];
        let kind = if rest.starts_with("ULG(") {
            self.pos += 4;
            TermKind::Ulg(self.vertex()?)
        } else if rest.starts_with("PX(") {
            self.pos += 3;
            let a = self.vertex()?;
            self.expect(",")?;
            TermKind::ConjPhase(a, self.rational()?)
        } else if rest.starts_with("P(") {
            self.pos += 2;
            let a = self.vertex()?;
            self.expect(",")?;
            TermKind::Phase(a, self.rational()?)
        } else if rest.starts_with("CZ(") {
            self.pos += 3;
            let a = self.vertex()?;
            self.expect(",")?;
            let at = self.pos;
            let b = self.vertex()?;
            if a == b {
                return Err(Error::parse(at, "CZ needs two distinct modes"));
            }
            TermKind::ControlledZ(a, b)
        } else if rest.starts_with("F(") {
            self.pos += 2;
            TermKind::Fourier(self.vertex()?)
        } else {
            return Err(Error::parse(start, "expected F, P, PX, CZ or ULG"));
        };
        self.expect(")")?;
        let (mut dagger, mut power) = (false, 1u32);
        loop {
            match self.peek() {
                Some(b'\'') => {
                    self.pos += 1;
                    dagger = !dagger;
                }
                Some(b'^') => {
                    self.pos += 1;
                    let (k, at) = self.integer()?;
                    if k == 0 {
                        return Err(Error::parse(at, "power must be nonzero"));
                    }
                    if k < 0 {
                        dagger = !dagger;
                    }
                    power = u32::try_from(k.unsigned_abs())
                        .ok()
                        .and_then(|k| power.checked_mul(k))
                        .ok_or_else(|| Error::parse(at, "power too large"))?;
                }
                _ => break,
            }
        }
        Ok(Term {
            kind,
            dagger,
            power,
            span: start..self.pos,
        })
    }
}

/// Parses a word over `n` modes. Positions in errors are byte offsets.
pub fn parse_word(text: &str, n: usize) -> Result<WordAst> {
    let mut p = Parser { text, pos: 0, n };
    let mut terms = Vec::new();
    p.skip_ws();
    while p.peek().is_some() {
        terms.push(p.term()?);
        if !p.skip_ws() && p.peek().is_some() {
            return Err(Error::parse(p.pos, "terms must be separated by whitespace"));
        }
    }
    Ok(WordAst { n, terms })
}

/// Parses `text` and expands it left to right against `ctx`.
pub fn compile_word(text: &str, ctx: &Graph) -> Result<GateWord> {
    parse_word(text, ctx.n())?.expand(ctx)
}

#[derive(Serialize)]
struct TermJson {
    text: String,
    span: (usize, usize),
}

impl Serialize for Term {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TermJson {
            text: self.to_string(),
            span: (self.span.start, self.span.end),
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::path;
    use crate::graph::v;
    use crate::stabilizer::verify_map;
    use crate::symplectic::word_matrix;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn no2() -> Graph {
        Graph::from_edges(4, &[(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn ulg_expands_against_context() {
        let w = compile_word("ULG(3)", &path(4)).unwrap();
        assert_eq!(
            w.gates(),
            &[
                Gate::ConjPhase(v(3), r(1)),
                Gate::Phase(v(2), r(-1)),
                Gate::Phase(v(4), r(-1))
            ]
        );
        let d = compile_word("ULG(2)'", &no2()).unwrap();
        assert_eq!(
            d.gates(),
            &[
                Gate::ConjPhase(v(2), r(-1)),
                Gate::Phase(v(1), r(1)),
                Gate::Phase(v(3), r(1)),
                Gate::Phase(v(4), r(1))
            ]
        );
    }

    #[test]
    fn powers_and_adjoints() {
        let g = path(4);
        assert_eq!(
            compile_word("F(1)^2", &g).unwrap().gates(),
            &[Gate::Fourier(v(1)), Gate::Fourier(v(1))]
        );
        assert_eq!(
            compile_word("F(2)'", &g).unwrap().gates(),
            &[Gate::InverseFourier(v(2))]
        );
        assert_eq!(
            compile_word("P(1,3/6)^2", &g).unwrap().gates(),
            &[Gate::Phase(v(1), r(1))]
        );
        assert_eq!(
            compile_word("PX(4,-1)'", &g).unwrap().gates(),
            &[Gate::ConjPhase(v(4), r(1))]
        );
        assert_eq!(
            compile_word("CZ(1,3)'", &g).unwrap().gates(),
            &[Gate::ControlledZ(v(1), v(3), r(-1))]
        );
        assert_eq!(
            compile_word("F(1)^-1", &g).unwrap(),
            compile_word("F(1)'", &g).unwrap()
        );
        assert_eq!(
            compile_word("ULG(3)^2", &g).unwrap().gates()[0],
            Gate::ConjPhase(v(3), r(2))
        );
        assert!(compile_word("   ", &g).unwrap().is_empty());
    }

    #[test]
    fn round_trip_text() {
        let text = "ULG(3)^2 F(1)^2 ULG(2)' P(1,-1/2) CZ(1,4)'^3";
        let ast = parse_word(text, 4).unwrap();
        assert_eq!(ast.to_string(), text);
        assert_eq!(ast.terms[1].span, 9..15);
        assert_eq!(parse_word(&ast.to_string(), 4).unwrap(), ast);
    }

    #[test]
    fn errors_carry_positions() {
        let cases = [
            ("ULG(5)", 4),
            ("F(1)^0", 5),
            ("F(1)F(2)", 4),
            ("Q(1)", 0),
            ("P(1,1/0)", 6),
            ("CZ(2,2)", 5),
            ("PX(1 1)", 4),
            ("F(1) ULG(0)", 9),
        ];
        for (text, pos) in cases {
            match parse_word(text, 4) {
                Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn weighted_context_rejected() {
        let mut g = path(3);
        g.add_edge(v(1), v(3), Rational::new(1, 2)).unwrap();
        assert_eq!(compile_word("ULG(1)", &g), Err(Error::WeightedInput));
        assert!(compile_word("F(1)", &g).is_ok());
    }

    proptest! {
        #[test]
        fn macro_power_is_repetition(a in 1usize..=4, k in 1u32..4, dagger: bool, mask in 0u64..64) {
            let g = Graph::from_mask(4, mask);
            let base = format!("ULG({a}){}", if dagger { "'" } else { "" });
            let powered = compile_word(&format!("{base}^{k}"), &g).unwrap();
            let repeated = compile_word(&vec![base.as_str(); k as usize].join(" "), &g).unwrap();
            prop_assert_eq!(word_matrix(&powered).unwrap(), word_matrix(&repeated).unwrap());
            for t in [g.clone(), g.local_complement(v(a)).unwrap()] {
                prop_assert_eq!(
                    verify_map(&g, &powered, &t).unwrap().valid,
                    verify_map(&g, &repeated, &t).unwrap().valid
                );
            }
        }
    }
}
