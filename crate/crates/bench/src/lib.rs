// SPDX-License-Identifier: Apache-2.0

//! Shared inputs for the benchmarks under `benches/`.

use cvlc_core::{Graph, RatMatrix, Rational};

pub fn path4() -> Graph {
    "n=4; edges=1-2,2-3,3-4".parse().expect("valid spec")
}

/// The graph one `U_LG` step away from the 4-path at vertex 3.
pub fn path4_lc3() -> Graph {
    path4()
        .local_complement(cvlc_core::v(3))
        .expect("vertex in range")
}

/// A dense `rows × cols` matrix of small distinct fractions, full rank for `rows ≤ cols`.
pub fn dense_matrix(rows: usize, cols: usize) -> RatMatrix {
    RatMatrix::from_rows(
        (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| {
                        let (i, j) = (i as i64, j as i64);
                        Rational::new(1, i + j + 1)
                            + Rational::from_integer(((i * 7 + j * 3) % 5) - 2)
                    })
                    .collect()
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_well_formed() {
        assert_eq!(path4_lc3().edge_count(), 4);
        assert_eq!(dense_matrix(8, 16).rank(), 8);
    }
}
