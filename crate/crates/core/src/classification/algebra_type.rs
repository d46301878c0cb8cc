//! Types of `Cℓ` and `Cℓ⁰` from the monomials `ρ(e_{i₁})⋯ρ(e_{i_r})`.
//!
//! All gamma matrices are signed permutations, so monomials are handled as
//! signed permutations too. The monomials form a basis of the image up to
//! sign, the centre is spanned by central monomials, and the trace form is
//! block diagonal with blocks `{x, xz}` for `z` a central monomial.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::clifford::CliffordModule;
use crate::error::{Error, Result};
use crate::invariants::{classify_profile, AlgebraProfile, AlgebraType};
use crate::linalg::RationalMatrix;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct SignedPerm {
    /// Column `j` maps to `sign[j]·e_{target[j]}`.
    target: Vec<u32>,
    sign: Vec<i8>,
}

impl SignedPerm {
    fn identity(d: usize) -> Self {
        Self {
            target: (0..d as u32).collect(),
            sign: vec![1; d],
        }
    }

    fn from_matrix(m: &RationalMatrix) -> Option<Self> {
        let d = m.rows();
        let mut target = vec![u32::MAX; d];
        let mut sign = vec![0i8; d];
        for i in 0..d {
            for j in 0..d {
                let v = m.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if target[j] != u32::MAX {
                    return None;
                }
                target[j] = i as u32;
                sign[j] = if *v == Rational::one() {
                    1
                } else if *v == -Rational::one() {
                    -1
                } else {
                    return None;
                };
            }
        }
        target
            .iter()
            .all(|&t| t != u32::MAX)
            .then_some(Self { target, sign })
    }

    fn to_matrix(&self) -> RationalMatrix {
        let d = self.target.len();
        let mut m = RationalMatrix::zeros(d, d);
        for j in 0..d {
            m.set(
                self.target[j] as usize,
                j,
                Rational::from_int(self.sign[j] as i64),
            );
        }
        m
    }

    /// `self · other`.
    fn mul(&self, other: &Self) -> Self {
        let d = self.target.len();
        let mut target = Vec::with_capacity(d);
        let mut sign = Vec::with_capacity(d);
        for j in 0..d {
            let k = other.target[j] as usize;
            target.push(self.target[k]);
            sign.push(self.sign[k] * other.sign[j]);
        }
        Self { target, sign }
    }

    fn negate(&self) -> Self {
        Self {
            target: self.target.clone(),
            sign: self.sign.iter().map(|s| -s).collect(),
        }
    }

    /// `Some(c)` when `self = c·Id`.
    fn scalar(&self) -> Option<i64> {
        if self
            .target
            .iter()
            .enumerate()
            .any(|(j, &t)| t as usize != j)
        {
            return None;
        }
        let s = self.sign[0];
        self.sign.iter().all(|&x| x == s).then_some(s as i64)
    }

    fn trace(&self) -> i64 {
        self.target
            .iter()
            .enumerate()
            .filter(|(j, &t)| t as usize == *j)
            .map(|(j, _)| self.sign[j] as i64)
            .sum()
    }

    /// Representative of `±self` with a positive first sign.
    fn up_to_sign(&self) -> Self {
        if self.sign[0] < 0 {
            self.negate()
        } else {
            self.clone()
        }
    }
}

fn gammas_as_perms(m: &CliffordModule) -> Result<Vec<SignedPerm>> {
    m.gammas
        .iter()
        .map(|g| {
            SignedPerm::from_matrix(g).ok_or_else(|| {
                Error::Identification("gamma matrix is not a signed permutation".into())
            })
        })
        .collect()
}

/// Products over all subsets (even subsets when `even`), distinct up to
/// sign, in increasing mask order.
fn monomials(gammas: &[SignedPerm], d: usize, even: bool) -> Vec<SignedPerm> {
    let n = gammas.len();
    let mut all: Vec<SignedPerm> = Vec::with_capacity(1 << n);
    all.push(SignedPerm::identity(d));
    for mask in 1usize..(1 << n) {
        let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
        let rest = mask & !(1 << top);
        let m = all[rest].mul(&gammas[top]);
        all.push(m);
    }
    let mut seen: HashMap<SignedPerm, ()> = HashMap::new();
    let mut out = Vec::new();
    for (mask, m) in all.into_iter().enumerate() {
        if even && mask.count_ones() % 2 == 1 {
            continue;
        }
        if seen.insert(m.up_to_sign(), ()).is_none() {
            out.push(m);
        }
    }
    out
}

/// Basis of the image of `Cℓ` (or `Cℓ⁰`) in `End(S)` made of monomials.
pub fn monomial_algebra(m: &CliffordModule, even: bool) -> Result<Vec<RationalMatrix>> {
    let gammas = gammas_as_perms(m)?;
    Ok(monomials(&gammas, m.dim(), even)
        .iter()
        .map(SignedPerm::to_matrix)
        .collect())
}

fn identify_monomials(basis: &[SignedPerm], generators: &[SignedPerm]) -> Result<AlgebraType> {
    let center: Vec<&SignedPerm> = basis
        .iter()
        .filter(|x| generators.iter().all(|g| x.mul(g) == g.mul(x)))
        .collect();
    let mut discriminant = 0;
    let z = center.iter().find(|x| x.scalar().is_none()).copied();
    if center.len() == 2 {
        let z = z.ok_or_else(|| Error::Identification("centre is scalar".into()))?;
        discriminant = z
            .mul(z)
            .scalar()
            .ok_or_else(|| Error::Identification("central square is not scalar".into()))?
            .signum() as i32;
    }

    let index: HashMap<SignedPerm, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, x)| (x.up_to_sign(), i))
        .collect();
    let (mut pos, mut neg) = (0usize, 0usize);
    let mut done = vec![false; basis.len()];
    for a in 0..basis.len() {
        if done[a] {
            continue;
        }
        done[a] = true;
        let x = &basis[a];
        let taa = x.mul(x).trace();
        let partner = match (center.len(), z) {
            (2, Some(z)) => index.get(&x.mul(z).up_to_sign()).copied(),
            _ => None,
        };
        match partner {
            Some(b) if b != a => {
                done[b] = true;
                let y = &basis[b];
                let tab = x.mul(y).trace();
                let tbb = y.mul(y).trace();
                let det = taa * tbb - tab * tab;
                match det.signum() {
                    -1 => {
                        pos += 1;
                        neg += 1;
                    }
                    1 if taa > 0 => pos += 2,
                    1 => neg += 2,
                    _ => return Err(Error::Identification("degenerate trace form".into())),
                }
            }
            _ => match taa.signum() {
                1 => pos += 1,
                -1 => neg += 1,
                _ => return Err(Error::Identification("degenerate trace form".into())),
            },
        }
    }
    classify_profile(&AlgebraProfile {
        dim: basis.len(),
        center_dim: center.len(),
        discriminant,
        trace_positive: pos,
        trace_negative: neg,
    })
}

/// Types of the even and full Clifford algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordTypes {
    pub even: AlgebraType,
    pub full: AlgebraType,
}

impl CliffordTypes {
    /// Coarse labels `(t⁰, t)`.
    pub fn coarse(&self) -> (String, String) {
        (self.even.coarse(), self.full.coarse())
    }
}

/// Identifies `Cℓ⁰` and `Cℓ`. When `S` is not faithful the image of `Cℓ` is
/// one of two isomorphic summands and the full algebra doubles it.
pub fn algebra_type(m: &CliffordModule) -> Result<CliffordTypes> {
    let n = m.n();
    if n > 12 {
        return Err(Error::InvalidSignature(format!(
            "n = {n} is too large to enumerate"
        )));
    }
    let d = m.dim();
    let gammas = gammas_as_perms(m)?;
    let mut quadratic = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            quadratic.push(gammas[i].mul(&gammas[j]));
        }
    }
    let even_basis = monomials(&gammas, d, true);
    let even = identify_monomials(&even_basis, &quadratic)?;
    let full_basis = monomials(&gammas, d, false);
    let image = identify_monomials(&full_basis, &gammas)?;
    let full = if full_basis.len() == 1 << n {
        image
    } else if 2 * full_basis.len() == 1 << n {
        AlgebraType {
            copies: 2 * image.copies,
            ..image
        }
    } else {
        return Err(Error::Identification(format!(
            "{} monomials for n = {n}",
            full_basis.len()
        )));
    };
    Ok(CliffordTypes { even, full })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build;
    use crate::invariants::identify_algebra;

    fn coarse(p: usize, q: usize) -> (String, String) {
        algebra_type(&build(p, q).unwrap()).unwrap().coarse()
    }

    #[test]
    fn examples() {
        assert_eq!(coarse(3, 4), ("R".into(), "2R".into()));
        assert_eq!(coarse(2, 0), ("C".into(), "H".into()));
        assert_eq!(coarse(4, 0), ("2H".into(), "H".into()));
        assert_eq!(coarse(0, 1), ("R".into(), "2R".into()));
    }

    #[test]
    fn agrees_with_dense_identification() {
        for (p, q) in [(1, 0), (0, 2), (2, 1), (1, 2), (3, 0), (0, 3)] {
            let m = build(p, q).unwrap();
            let t = algebra_type(&m).unwrap();
            let even = identify_algebra(&monomial_algebra(&m, true).unwrap()).unwrap();
            assert_eq!(even, t.even, "({p},{q})");
        }
    }
}
