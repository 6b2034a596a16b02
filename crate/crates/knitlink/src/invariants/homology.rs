//! First homology via Smith normal form of the abelianized relation matrix.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::freegroup::Presentation;

/// Finitely generated abelian group: Z^rank ⊕ Z/d_1 ⊕ ... (d_i > 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = (0..self.rank).map(|_| "Z".to_string()).collect();
        parts.extend(self.torsion.iter().map(|d| format!("Z/{}", d)));
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Diagonalize an integer matrix by elementary row/column operations and
/// read off rank and torsion of the cokernel on `cols` generators.
pub fn smith_cokernel(mut m: Vec<Vec<BigInt>>, cols: usize) -> AbelianGroup {
    let rows = m.len();
    let mut diag: Vec<BigInt> = Vec::new();
    let mut top = 0usize;
    let mut left = 0usize;
    while top < rows && left < cols {
        // find a pivot of minimal absolute value
        let mut pivot: Option<(usize, usize)> = None;
        let mut best: Option<BigInt> = None;
        for i in top..rows {
            for j in left..cols {
                if !m[i][j].is_zero() {
                    let a = m[i][j].abs();
                    if best.as_ref().map_or(true, |b| a < *b) {
                        best = Some(a);
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(left, pj);
        }
        // eliminate
        let mut clean = true;
        for i in 0..rows {
            if i != top && !m[i][left].is_zero() {
                let q = &m[i][left] / &m[top][left];
                if !q.is_zero() {
                    for j in 0..cols {
                        let t = &m[top][j] * &q;
                        m[i][j] -= t;
                    }
                }
                if !m[i][left].is_zero() {
                    clean = false;
                }
            }
        }
        for j in 0..cols {
            if j != left && !m[top][j].is_zero() {
                let q = &m[top][j] / &m[top][left];
                if !q.is_zero() {
                    for i in 0..rows {
                        let t = &m[i][left] * &q;
                        m[i][j] -= t;
                    }
                }
                if !m[top][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue; // keep reducing with a smaller pivot
        }
        diag.push(m[top][left].abs());
        top += 1;
        left += 1;
    }
    // cokernel: generators not hit by any pivot are free
    let rank = cols - diag.len();
    let mut torsion: Vec<BigInt> = diag.into_iter().filter(|d| *d > BigInt::from(1)).collect();
    torsion.sort();
    AbelianGroup { rank, torsion }
}

/// H1 of the group given by the presentation (abelianization).
pub fn first_homology(p: &Presentation) -> AbelianGroup {
    let g = p.generators.len();
    let m: Vec<Vec<BigInt>> = p
        .relators
        .iter()
        .map(|r| r.exponent_sums(g).into_iter().map(BigInt::from).collect())
        .collect();
    smith_cokernel(m, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::FreeWord;

    #[test]
    fn smith_basics() {
        // Z^2 / (2x) = Z + Z/2
        let m = vec![vec![BigInt::from(2), BigInt::from(0)]];
        let g = smith_cokernel(m, 2);
        assert_eq!(g.rank, 1);
        assert_eq!(g.torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn trefoil_h1_is_z() {
        // <x,y | xyx = yxy> abelianized: x = y
        let r = FreeWord::from_syllables(vec![(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]);
        let p = Presentation {
            generators: vec!["x".into(), "y".into()],
            relators: vec![r],
            gen_component: vec![0, 0],
            n_components: 1,
        };
        let h = first_homology(&p);
        assert_eq!(h.rank, 1);
        assert!(h.torsion.is_empty());
    }
}
