// SPDX-License-Identifier: Apache-2.0

//! Heisenberg-picture matrices for the Gaussian gate set.
//!
//! Operators are ordered as the column `r = (x̂_1..x̂_n, p̂_1..p̂_n)`. The matrix
//! `M` of a unitary `U` is defined by `U r U⁻¹ = M r`: row `k` holds the
//! image of the `k`-th quadrature. A linear form `Σ α_j x̂_j + β_j p̂_j` with
//! coefficient row `(α | β)` is carried to the row `(α | β)·M`.

use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Rational};
use crate::pauli::{Gate, GateWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticMatrix {
    n: usize,
    m: RatMatrix,
}

/// `J = [[0, I], [-I, 0]]`.
pub fn symplectic_form(n: usize) -> RatMatrix {
    let mut j = RatMatrix::zeros(2 * n, 2 * n);
    for a in 0..n {
        j[(a, n + a)] = Rational::one();
        j[(n + a, a)] = Rational::from_integer(-1);
    }
    j
}

impl SymplecticMatrix {
    pub fn identity(n: usize) -> Self {
        SymplecticMatrix {
            n,
            m: RatMatrix::identity(2 * n),
        }
    }

    /// Wraps a matrix after checking `mᵀ J m = J`.
    pub fn from_matrix(n: usize, m: RatMatrix) -> Result<Self> {
        let s = SymplecticMatrix { n, m };
        if s.m.rows() != 2 * n || !s.m.is_square() || !s.is_symplectic() {
            return Err(Error::DimensionMismatch(
                "matrix is not a 2n×2n symplectic matrix".into(),
            ));
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.m
    }

    pub fn is_symplectic(&self) -> bool {
        let j = symplectic_form(self.n);
        let lhs = self.m.transpose().mul(&j).and_then(|t| t.mul(&self.m));
        lhs.map(|l| l == j).unwrap_or(false)
    }

    /// Heisenberg map of "first `self`, then `later`": `M_self · M_later`.
    pub fn then(&self, later: &SymplecticMatrix) -> Result<SymplecticMatrix> {
        if self.n != later.n {
            return Err(Error::ModeMismatch(self.n, later.n));
        }
        Ok(SymplecticMatrix {
            n: self.n,
            m: self.m.mul(&later.m)?,
        })
    }

    pub fn pow(&self, k: u32) -> SymplecticMatrix {
        (0..k).fold(Self::identity(self.n), |acc, _| {
            acc.then(self).expect("same n")
        })
    }
}

pub fn gate_matrix(gate: &Gate, n: usize) -> Result<SymplecticMatrix> {
    gate.validate(n)?;
    let mut m = RatMatrix::identity(2 * n);
    let x = |a: crate::graph::VertexId| a.index();
    let p = |a: crate::graph::VertexId| n + a.index();
    let one = Rational::one();
    match gate {
        Gate::Fourier(a) => {
            // x -> p, p -> -x
            m[(x(*a), x(*a))] = Rational::zero();
            m[(x(*a), p(*a))] = one;
            m[(p(*a), p(*a))] = Rational::zero();
            m[(p(*a), x(*a))] = Rational::from_integer(-1);
        }
        Gate::InverseFourier(a) => {
            // x -> -p, p -> x
            m[(x(*a), x(*a))] = Rational::zero();
            m[(x(*a), p(*a))] = Rational::from_integer(-1);
            m[(p(*a), p(*a))] = Rational::zero();
            m[(p(*a), x(*a))] = one;
        }
        Gate::Phase(a, eta) => {
            // p -> p - ηx
            m[(p(*a), x(*a))] = -eta;
        }
        Gate::ConjPhase(a, eta) => {
            // x -> x + ηp
            m[(x(*a), p(*a))] = eta.clone();
        }
        Gate::ControlledZ(a, b, g) => {
            // p_a -> p_a - g x_b, p_b -> p_b - g x_a
            m[(p(*a), x(*b))] = -g;
            m[(p(*b), x(*a))] = -g;
        }
    }
    Ok(SymplecticMatrix { n, m })
}

/// Heisenberg map of a whole word, `M_1 M_2 ⋯ M_k` for gates `g_1` (first) .. `g_k`.
/// Acting on coefficients this is `M_kᵀ ⋯ M_1ᵀ`, so the first gate is innermost.
pub fn word_matrix(word: &GateWord) -> Result<SymplecticMatrix> {
    word.gates()
        .iter()
        .try_fold(SymplecticMatrix::identity(word.n()), |acc, g| {
            acc.then(&gate_matrix(g, word.n())?)
        })
}

/// Displacement coefficients `(u, v)` of `∏ X_a(u_a ξ) Z_a(v_a ξ)` after
/// conjugation by the unitary whose Heisenberg map is `s`.
pub fn act_on_vector(
    s: &SymplecticMatrix,
    u: &[Rational],
    v: &[Rational],
) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let n = s.n;
    if u.len() != n || v.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {}/{} for {n} modes",
            u.len(),
            v.len()
        )));
    }
    // the word is exp[iξ Σ (v_a x̂_a − u_a p̂_a)] up to phase: coefficient row (v | −u)
    let row: Vec<Rational> = v.iter().cloned().chain(u.iter().map(|x| -x)).collect();
    let image = s.m.transpose().mul_vec(&row)?;
    let (alpha, beta) = image.split_at(n);
    Ok((beta.iter().map(|x| -x).collect(), alpha.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::path;
    use crate::graph::v;
    use crate::pauli::ulg_word;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn gate_matrix_examples() {
        let f = gate_matrix(&Gate::Fourier(v(1)), 1).unwrap();
        assert_eq!(f.matrix(), &RatMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]));
        assert_eq!(
            gate_matrix(&Gate::Phase(v(1), r(0)), 1).unwrap(),
            SymplecticMatrix::identity(1)
        );
        assert_eq!(f.pow(4), SymplecticMatrix::identity(1));
        assert!(gate_matrix(&Gate::Fourier(v(2)), 1).is_err());
    }

    #[test]
    fn word_matrix_examples() {
        let ff = GateWord::new(1, vec![Gate::Fourier(v(1)), Gate::Fourier(v(1))]).unwrap();
        assert_eq!(
            word_matrix(&ff).unwrap().matrix(),
            &RatMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]])
        );
        let pp = GateWord::new(1, vec![Gate::Phase(v(1), r(1)), Gate::Phase(v(1), r(-1))]).unwrap();
        assert_eq!(word_matrix(&pp).unwrap(), SymplecticMatrix::identity(1));

        let u = ulg_word(&path(4), v(3), false, 1).unwrap();
        let forward = word_matrix(&u).unwrap();
        let reversed = GateWord::new(4, u.gates().iter().rev().cloned().collect()).unwrap();
        assert!(forward.is_symplectic());
        assert_eq!(forward, word_matrix(&reversed).unwrap());
    }

    #[test]
    fn act_on_vector_examples() {
        let id = SymplecticMatrix::identity(2);
        let (u, v_) = (vec![r(1), r(-2)], vec![r(3), r(0)]);
        assert_eq!(
            act_on_vector(&id, &u, &v_).unwrap(),
            (u.clone(), v_.clone())
        );

        let f = gate_matrix(&Gate::Fourier(v(1)), 1).unwrap();
        assert_eq!(
            act_on_vector(&f, &[r(1)], &[r(0)]).unwrap(),
            (vec![r(0)], vec![r(1)])
        );

        let p = gate_matrix(&Gate::Phase(v(2), r(-1)), 4).unwrap();
        let (u2, v2) = act_on_vector(&p, &[r(0), r(1), r(0), r(0)], &vec![r(0); 4]).unwrap();
        assert_eq!((u2[1].clone(), v2[1].clone()), (r(1), r(-1)));
        assert!(act_on_vector(&p, &[r(0)], &[r(0)]).is_err());
    }

    #[test]
    fn every_gate_is_symplectic_with_unit_determinant() {
        let gates = [
            Gate::Fourier(v(2)),
            Gate::InverseFourier(v(1)),
            Gate::Phase(v(3), Rational::new(-3, 2)),
            Gate::ConjPhase(v(1), Rational::new(5, 7)),
            Gate::ControlledZ(v(1), v(3), Rational::new(2, 3)),
        ];
        for g in &gates {
            let s = gate_matrix(g, 3).unwrap();
            assert!(s.is_symplectic(), "{g}");
            assert_eq!(s.matrix().determinant().unwrap(), Rational::one(), "{g}");
            let inv = gate_matrix(&g.inverse(), 3).unwrap();
            assert_eq!(s.then(&inv).unwrap(), SymplecticMatrix::identity(3));
        }
    }
}
