//! Explicit matrix models of irreducible Clifford modules.
//!
//! Convention: `v·v = −⟨v,v⟩·1`, so `ρ(e_i)² = −Id` for the first `p`
//! generators and `+Id` for the last `q`.

mod blade;
mod definite;
mod split;
mod tensor;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use blade::{graded_lex_subsets, BladeAlgebra};
pub use definite::build_definite;
pub use split::{build_split, SplitBasisConvention};
pub use tensor::graded_tensor;

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Self {
        Self { p, q }
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn s(&self) -> i64 {
        self.p as i64 - self.q as i64
    }

    /// `s` reduced to `1..=8`, the indexing used by the periodicity tables.
    pub fn s_mod8(&self) -> usize {
        let r = self.s().rem_euclid(8) as usize;
        if r == 0 {
            8
        } else {
            r
        }
    }

    /// `⟨e_i, e_i⟩`.
    pub fn eta(&self, i: usize) -> i64 {
        if i < self.p {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Sign of a definite factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Definite {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Recipe {
    Split,
    DefiniteEven,
    DefiniteOdd,
    Tensor,
}

/// Names of the admissible Schur algebra elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AdmName {
    Id,
    I,
    J,
    K,
    E,
    EI,
    EJ,
    EK,
    #[serde(rename = "Ĵ")]
    JHat,
    #[serde(rename = "K̂")]
    KHat,
}

impl fmt::Display for AdmName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AdmName::Id => "Id",
            AdmName::I => "I",
            AdmName::J => "J",
            AdmName::K => "K",
            AdmName::E => "E",
            AdmName::EI => "EI",
            AdmName::EJ => "EJ",
            AdmName::EK => "EK",
            AdmName::JHat => "Ĵ",
            AdmName::KHat => "K̂",
        };
        f.write_str(s)
    }
}

/// Semi-spinor involution with a note on where it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    pub matrix: RationalMatrix,
    pub label: &'static str,
}

/// An irreducible `Cℓ(p,q)`-module in an explicit basis.
#[derive(Debug, Clone)]
pub struct CliffordModule {
    pub sig: Signature,
    /// `gammas[i] = ρ(e_i)`.
    pub gammas: Vec<RationalMatrix>,
    pub grading: Option<Grading>,
    pub complex_structure: Option<RationalMatrix>,
    pub recipe: Recipe,
    /// Gram matrix of the canonical form `h`.
    pub canonical: RationalMatrix,
    /// Named admissible endomorphisms spanning the Schur algebra.
    pub admissible_endos: Vec<(AdmName, RationalMatrix)>,
}

impl CliffordModule {
    pub fn dim(&self) -> usize {
        self.gammas
            .first()
            .map_or(self.canonical.rows(), |g| g.rows())
    }

    pub fn n(&self) -> usize {
        self.gammas.len()
    }

    pub fn grading_matrix(&self) -> Option<&RationalMatrix> {
        self.grading.as_ref().map(|g| &g.matrix)
    }

    pub fn endo(&self, name: AdmName) -> Option<&RationalMatrix> {
        self.admissible_endos
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, m)| m)
    }

    /// Checks the Clifford relations and the grading / complex structure laws.
    pub fn validate(&self) -> Result<()> {
        let n = self.sig.n();
        if self.gammas.len() != n {
            return Err(Error::Relation(format!(
                "{} gammas for n = {n}",
                self.gammas.len()
            )));
        }
        let d = self.dim();
        let id = RationalMatrix::identity(d);
        for i in 0..n {
            for j in i..n {
                let ac = self.gammas[i].anticommutator(&self.gammas[j]);
                let expected = if i == j {
                    id.scale(&Rational::from_int(-2 * self.sig.eta(i)))
                } else {
                    RationalMatrix::zeros(d, d)
                };
                if ac != expected {
                    return Err(Error::Relation(format!(
                        "{{ρ(e_{i}), ρ(e_{j})}} wrong in {}",
                        self.sig
                    )));
                }
            }
        }
        if let Some(g) = &self.grading {
            let e = &g.matrix;
            if (e * e) != id || e == &id || e == &-&id {
                return Err(Error::Relation(
                    "grading is not a nontrivial involution".into(),
                ));
            }
            for (i, gamma) in self.gammas.iter().enumerate() {
                if !e.anticommutator(gamma).is_zero() {
                    return Err(Error::Relation(format!("grading commutes with ρ(e_{i})")));
                }
            }
        }
        if let Some(cs) = &self.complex_structure {
            if (cs * cs) != -&id {
                return Err(Error::Relation(
                    "complex structure does not square to −Id".into(),
                ));
            }
        }
        Ok(())
    }
}

/// The irreducible module for `(p,q)`.
pub fn build(p: usize, q: usize) -> Result<CliffordModule> {
    if p + q == 0 {
        return Err(Error::InvalidSignature("p + q must be at least 1".into()));
    }
    let m = if p == q {
        build_split(p)?
    } else if q == 0 {
        build_definite(p, Definite::Positive)?
    } else if p == 0 {
        build_definite(q, Definite::Negative)?
    } else {
        let (k, sign) = if p > q {
            (p - q, Definite::Positive)
        } else {
            (q - p, Definite::Negative)
        };
        graded_tensor(&build_split(p.min(q))?, &build_definite(k, sign)?)?
    };
    debug_assert_eq!(m.sig, Signature::new(p, q));
    Ok(m)
}

/// Sign `c` with `ω² = c·Id` for `ω = e_1⋯e_n`.
pub fn volume_square_sign(sig: Signature) -> i64 {
    let n = sig.n();
    let reorder = if (n * (n.saturating_sub(1)) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let squares = if sig.p.is_multiple_of(2) { 1 } else { -1 };
    reorder * squares
}

/// `ω = ρ(e_1)⋯ρ(e_n)`, checked against `ω² = ±Id`.
pub fn volume_element(m: &CliffordModule) -> Result<RationalMatrix> {
    let d = m.dim();
    let mut omega = RationalMatrix::identity(d);
    for g in &m.gammas {
        omega = &omega * g;
    }
    let expected =
        RationalMatrix::identity(d).scale(&Rational::from_int(volume_square_sign(m.sig)));
    if &omega * &omega != expected {
        return Err(Error::Relation(format!(
            "ω² has the wrong sign in {}",
            m.sig
        )));
    }
    Ok(omega)
}

/// `[[0,−1],[1,0]]`.
pub(crate) fn j2() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[0, -1], &[1, 0]])
}

/// `diag(1,−1)`.
pub(crate) fn c2() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[1, 0], &[0, -1]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_zero_signature() {
        assert!(matches!(build(0, 0), Err(Error::InvalidSignature(_))));
    }

    #[test]
    fn all_small_modules_satisfy_relations() {
        for n in 1..=7 {
            for p in 0..=n {
                let m = build(p, n - p).unwrap();
                m.validate().unwrap();
                volume_element(&m).unwrap();
            }
        }
    }

    #[test]
    fn volume_square_examples() {
        assert_eq!(volume_square_sign(Signature::new(1, 1)), 1);
        assert_eq!(volume_square_sign(Signature::new(2, 0)), -1);
        assert_eq!(volume_square_sign(Signature::new(0, 2)), -1);
    }

    #[test]
    fn dimensions() {
        assert_eq!(build(3, 3).unwrap().dim(), 8);
        assert_eq!(build(1, 0).unwrap().dim(), 2);
        assert_eq!(build(2, 0).unwrap().dim(), 4);
    }
}
