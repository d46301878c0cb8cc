//! The module `S = ∧U` of `Cℓ_{m,m}`.

use super::blade::{count_below, graded_lex_subsets};
use super::{AdmName, CliffordModule, Grading, Recipe, Signature};
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::rational::Rational;

/// Isotropic bases `u_i = (e_i + e_{m+i})/2`, `u*_i = (e_i − e_{m+i})/2`
/// and the monomial basis `u_A` of `∧U`, ordered by degree then lexicographically.
#[derive(Debug, Clone)]
pub struct SplitBasisConvention {
    pub m: usize,
    pub monomials: Vec<u32>,
    position: Vec<usize>,
}

impl SplitBasisConvention {
    pub fn new(m: usize) -> Self {
        let monomials = graded_lex_subsets(m);
        let mut position = vec![0; monomials.len()];
        for (i, &a) in monomials.iter().enumerate() {
            position[a as usize] = i;
        }
        Self {
            m,
            monomials,
            position,
        }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn index_of(&self, mask: u32) -> usize {
        self.position[mask as usize]
    }

    fn operator(&self, f: impl Fn(u32) -> Option<(i64, u32)>) -> RationalMatrix {
        let d = self.dim();
        let mut out = RationalMatrix::zeros(d, d);
        for (col, &a) in self.monomials.iter().enumerate() {
            if let Some((sign, image)) = f(a) {
                out.set(self.index_of(image), col, Rational::from_int(sign));
            }
        }
        out
    }

    /// `s ↦ u_i ∧ s`.
    pub fn wedge(&self, i: usize) -> RationalMatrix {
        self.operator(|a| (a & (1 << i) == 0).then(|| (sign_of(count_below(a, i)), a | (1 << i))))
    }

    /// Interior product with `u*_i`, `ι_{u*_i} u_j = δ_ij`.
    pub fn interior(&self, i: usize) -> RationalMatrix {
        self.operator(|a| (a & (1 << i) != 0).then(|| (sign_of(count_below(a, i)), a & !(1 << i))))
    }

    /// Parity involution: +1 on even degree, −1 on odd.
    pub fn parity(&self) -> RationalMatrix {
        self.operator(|a| Some((sign_of(a.count_ones()), a)))
    }

    /// Gram matrix of `f`, `f(s,t)·vol = ε_i s∧t` for `s ∈ ∧^i U`, `ε_i = (−1)^{i(i+1)/2}`.
    pub fn f_gram(&self) -> RationalMatrix {
        let d = self.dim();
        let full = ((1u64 << self.m) - 1) as u32;
        let mut g = RationalMatrix::zeros(d, d);
        for &a in &self.monomials {
            let b = full & !a;
            let i = a.count_ones();
            let eps = sign_of(i * (i + 1) / 2);
            // u_A ∧ u_B = (−1)^{#{(x,y) ∈ A×B : x > y}} u_full
            let inversions: u32 = (0..self.m)
                .filter(|&y| b & (1 << y) != 0)
                .map(|y| (a >> (y + 1)).count_ones())
                .sum();
            g.set(
                self.index_of(a),
                self.index_of(b),
                Rational::from_int(eps * sign_of(inversions)),
            );
        }
        g
    }
}

fn sign_of(k: u32) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `ρ(u)s = u∧s`, `ρ(u*)s = −ι_{u*}s`; hence `ρ(e_i) = ε_i − ι_i` and `ρ(e_{m+i}) = ε_i + ι_i`.
pub fn build_split(m: usize) -> Result<CliffordModule> {
    if m == 0 {
        return Err(Error::InvalidSignature("split model needs m ≥ 1".into()));
    }
    let conv = SplitBasisConvention::new(m);
    let mut gammas = Vec::with_capacity(2 * m);
    for i in 0..m {
        gammas.push(&conv.wedge(i) - &conv.interior(i));
    }
    for i in 0..m {
        gammas.push(&conv.wedge(i) + &conv.interior(i));
    }
    let e = conv.parity();
    let f = conv.f_gram();
    let f_e = &e.transpose() * &f;
    let d = conv.dim();
    Ok(CliffordModule {
        sig: Signature::new(m, m),
        gammas,
        grading: Some(Grading {
            matrix: e.clone(),
            label: "parity of ∧U",
        }),
        complex_structure: None,
        recipe: Recipe::Split,
        canonical: f_e,
        admissible_endos: vec![(AdmName::Id, RationalMatrix::identity(d)), (AdmName::E, e)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m1_matrices() {
        let s = build_split(1).unwrap();
        assert_eq!(s.gammas[0], RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]));
        assert_eq!(s.gammas[1], RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(
            s.grading.unwrap().matrix,
            RationalMatrix::from_i64(&[&[1, 0], &[0, -1]])
        );
        let conv = SplitBasisConvention::new(1);
        assert_eq!(
            conv.f_gram(),
            RationalMatrix::from_i64(&[&[0, 1], &[-1, 0]])
        );
    }

    #[test]
    fn relations_hold() {
        for m in 1..=4 {
            let s = build_split(m).unwrap();
            assert_eq!(s.dim(), 1 << m);
            s.validate().unwrap();
        }
        assert!(build_split(0).is_err());
    }

    #[test]
    fn interior_is_dual_to_wedge() {
        let conv = SplitBasisConvention::new(3);
        for i in 0..3 {
            for j in 0..3 {
                let ac = conv.interior(i).anticommutator(&conv.wedge(j));
                let expected = if i == j {
                    RationalMatrix::identity(8)
                } else {
                    RationalMatrix::zeros(8, 8)
                };
                assert_eq!(ac, expected);
            }
        }
    }
}
