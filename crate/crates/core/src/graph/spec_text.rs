// SPDX-License-Identifier: Apache-2.0

//! `n=<int>; edges=<i>-<j>[:<rat>](,<i>-<j>[:<rat>])*`
//!
//! Endpoints are 1-based with `i < j`; an omitted weight means 1. The edge
//! list may be empty (`n=3; edges=`). Output always lists edges in
//! lexicographic order and omits unit weights.

use std::fmt;
use std::str::FromStr;

use super::{Graph, VertexId};
use crate::error::Error;
use crate::linalg::Rational;

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; edges=", self.n)?;
        for (k, e) in self.edges().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}-{}", e.a, e.b)?;
            if !e.weight.is_one() {
                write!(f, ":{}", e.weight)?;
            }
        }
        Ok(())
    }
}

fn parse_vertex(text: &str, pos: usize) -> Result<usize, Error> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(
            pos,
            format!("expected vertex number, found {text:?}"),
        ));
    }
    text.parse()
        .map_err(|_| Error::parse(pos, format!("vertex number {text:?} too large")))
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let rest = s
            .strip_prefix("n=")
            .ok_or_else(|| Error::parse(0, "graph spec must start with \"n=\""))?;
        let semi = rest
            .find(';')
            .ok_or_else(|| Error::parse(s.len(), "missing \";\" after vertex count"))?;
        let n = parse_vertex(&rest[..semi], 2)?;
        if n == 0 {
            return Err(Error::parse(2, "vertex count must be at least 1"));
        }
        let after = &rest[semi + 1..];
        let trimmed = after.trim_start_matches(' ');
        let mut pos = 2 + semi + 1 + (after.len() - trimmed.len());
        let list = trimmed
            .strip_prefix("edges=")
            .ok_or_else(|| Error::parse(pos, "expected \"edges=\""))?;
        pos += "edges=".len();

        let mut g = Graph::empty(n);
        if list.is_empty() {
            return Ok(g);
        }
        for item in list.split(',') {
            let (pair, weight) = match item.split_once(':') {
                Some((p, w)) => {
                    let w: Rational = w.parse().map_err(|e| match e {
                        Error::Parse { pos: p2, msg } => Error::parse(pos + p.len() + 1 + p2, msg),
                        other => other,
                    })?;
                    (p, w)
                }
                None => (item, Rational::one()),
            };
            let (a, b) = pair
                .split_once('-')
                .ok_or_else(|| Error::parse(pos, format!("expected \"i-j\", found {pair:?}")))?;
            let ia = parse_vertex(a, pos)?;
            let ib = parse_vertex(b, pos + a.len() + 1)?;
            if ia >= ib {
                return Err(Error::parse(pos, format!("edge {ia}-{ib} must have i < j")));
            }
            for x in [ia, ib] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            g.add_edge(VertexId::new(ia), VertexId::new(ib), weight)
                .map_err(|e| match e {
                    Error::InvalidGraph(msg) => Error::parse(pos, msg),
                    other => other,
                })?;
            pos += item.len() + 1;
        }
        Ok(g)
    }
}
