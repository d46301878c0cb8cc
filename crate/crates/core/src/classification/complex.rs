//! Complex spinor modules in dimension `m`, realised on `S ⊕ iS` for the real
//! module of signature `(k,k)` (`m = 2k`) or `(k,k+1)` (`m = 2k+1`).
//!
//! A real form `G` on `S ⊕ iS` is the real part of a complex bilinear form
//! iff `GI = IᵀG`. Class dimensions of the complex maps are half the real
//! ones.

use serde::{Deserialize, Serialize};

use crate::clifford::{build, Signature};
use crate::error::{Error, Result};
use crate::invariants::push_invariance_rows;
use crate::linalg::{kronecker, rank_of_vectors, LinearSystem, RationalMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexCell {
    pub m: usize,
    /// Real signature whose complexification is used.
    pub sig: Signature,
    /// Complex dimension of the space of invariant complex bilinear forms.
    pub dim: usize,
    pub quad: Option<[usize; 4]>,
    pub lplus: usize,
    pub lminus: usize,
}

impl ComplexCell {
    pub fn counts(&self) -> Vec<usize> {
        match self.quad {
            Some(q) => q.to_vec(),
            None => vec![self.lplus, self.lminus],
        }
    }
}

pub fn complex_signature(m: usize) -> Result<Signature> {
    if m == 0 {
        return Err(Error::InvalidSignature(
            "complex dimension must be positive".into(),
        ));
    }
    let k = m / 2;
    Ok(if m.is_multiple_of(2) {
        Signature::new(k, k)
    } else {
        Signature::new(k, k + 1)
    })
}

fn j2() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[0, -1], &[1, 0]])
}

pub fn classify_complex(m: usize) -> Result<ComplexCell> {
    let sig = complex_signature(m)?;
    let real = build(sig.p, sig.q)?;
    let d = real.dim();
    let big = 2 * d;
    let id2 = RationalMatrix::identity(2);
    let gammas: Vec<RationalMatrix> = real.gammas.iter().map(|g| kronecker(&id2, g)).collect();
    let grading = real.grading_matrix().map(|e| kronecker(&id2, e));
    let cs = kronecker(&j2(), &RationalMatrix::identity(d));

    let mut sys = LinearSystem::new(big * big);
    for i in 0..gammas.len() {
        for j in i + 1..gammas.len() {
            push_invariance_rows(&mut sys, &(&gammas[i] * &gammas[j]), big);
        }
    }
    // (GI)[a,b] − (IᵀG)[a,b]
    let support = cs.row_support();
    for a in 0..big {
        for b in 0..big {
            let mut terms: Vec<(usize, Rational)> = Vec::new();
            for (c, row) in support.iter().enumerate() {
                for (col, v) in row {
                    if *col == b {
                        terms.push((a * big + c, (*v).clone()));
                    }
                    if *col == a {
                        terms.push((c * big + b, -(*v)));
                    }
                }
            }
            sys.add_row(terms);
        }
    }
    let space: Vec<RationalMatrix> = sys
        .kernel()
        .into_iter()
        .map(|v| RationalMatrix::new(big, big, v).expect("square kernel vector"))
        .collect();
    let real_dim = space.len();

    let components: Vec<Vec<RationalMatrix>> = space
        .iter()
        .map(|g| gammas.iter().map(|r| &r.transpose() * g).collect())
        .collect();
    let class_dim = |sigma: i64, iota: Option<i64>| -> usize {
        let vectors: Vec<Vec<Rational>> = components
            .iter()
            .map(|bs| {
                let mut v = Vec::new();
                for b in bs {
                    let t = b.transpose();
                    let defect = if sigma > 0 { b - &t } else { b + &t };
                    v.extend(defect.into_data());
                    if let (Some(e), Some(i)) = (&grading, iota) {
                        let ebe = &(e * b) * e;
                        let defect = if i > 0 { &ebe - b } else { &ebe + b };
                        v.extend(defect.into_data());
                    }
                }
                v
            })
            .collect();
        real_dim - rank_of_vectors(&vectors)
    };

    let (quad, lplus, lminus, total) = if grading.is_some() {
        let q = [
            class_dim(1, Some(1)),
            class_dim(1, Some(-1)),
            class_dim(-1, Some(1)),
            class_dim(-1, Some(-1)),
        ];
        (Some(q), q[0] + q[1], q[2] + q[3], q.iter().sum::<usize>())
    } else {
        let (p, n) = (class_dim(1, None), class_dim(-1, None));
        (None, p, n, p + n)
    };
    if total != real_dim
        || !real_dim.is_multiple_of(2)
        || quad.iter().flatten().any(|x| x % 2 != 0)
        || lplus % 2 != 0
    {
        return Err(Error::Span(format!(
            "complex classes of m = {m} do not split the {real_dim}-dimensional space"
        )));
    }
    Ok(ComplexCell {
        m,
        sig,
        dim: real_dim / 2,
        quad: quad.map(|q| q.map(|x| x / 2)),
        lplus: lplus / 2,
        lminus: lminus / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_complex_cells() {
        assert_eq!(classify_complex(1).unwrap().counts(), vec![1, 0]);
        assert_eq!(classify_complex(2).unwrap().counts(), vec![2, 0, 0, 0]);
        assert_eq!(classify_complex(3).unwrap().counts(), vec![1, 0]);
    }

    #[test]
    fn odd_dimensions_have_a_unique_form() {
        for m in [1, 3, 5, 7] {
            assert_eq!(classify_complex(m).unwrap().dim, 1);
        }
    }

    #[test]
    fn zero_rejected() {
        assert!(classify_complex(0).is_err());
    }
}
