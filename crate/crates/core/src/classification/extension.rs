//! `g^{(+l)}` on `W ⊗ ℝ^l` and `g^{(−2l)}` on `W ⊗ ℝ^{2l}`.

use serde::{Deserialize, Serialize};

use super::ExtendedPoincareAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{kronecker, RationalMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtensionKind {
    /// `π(w₁,w₂)⟨v₁,v₂⟩`, internal symmetry `O(l)`.
    Orthogonal,
    /// `π(w₁,w₂)ω(v₁,v₂)`, internal symmetry `Sp(2l,ℝ)`.
    Symplectic,
}

#[derive(Debug, Clone)]
pub struct NExtendedAlgebra {
    pub kind: ExtensionKind,
    pub l: usize,
    pub base_epsilon: i32,
    pub algebra: ExtendedPoincareAlgebra,
    /// `Id_l` or the standard symplectic form on `ℝ^{2l}`.
    pub internal_form: RationalMatrix,
    /// Basis of `o(l)` or `sp(2l,ℝ)`.
    pub generators: Vec<RationalMatrix>,
    /// Rotations and a reflection, or symplectic transvections.
    pub group_elements: Vec<RationalMatrix>,
}

fn unit(d: usize, a: usize, b: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(d, d);
    m.set(a, b, Rational::one());
    m
}

fn symplectic_form(l: usize) -> RationalMatrix {
    let mut w = RationalMatrix::zeros(2 * l, 2 * l);
    for a in 0..l {
        w.set(a, l + a, Rational::one());
        w.set(l + a, a, -Rational::one());
    }
    w
}

fn orthogonal_data(l: usize) -> (Vec<RationalMatrix>, Vec<RationalMatrix>) {
    let mut gens = Vec::new();
    let mut group = Vec::new();
    let (c, s) = (Rational::new(3, 5), Rational::new(4, 5));
    for a in 0..l {
        for b in a + 1..l {
            gens.push(&unit(l, a, b) - &unit(l, b, a));
            let mut r = RationalMatrix::identity(l);
            r.set(a, a, c.clone());
            r.set(b, b, c.clone());
            r.set(a, b, -&s);
            r.set(b, a, s.clone());
            group.push(r);
        }
    }
    let mut reflection = RationalMatrix::identity(l);
    reflection.set(0, 0, -Rational::one());
    group.push(reflection);
    (gens, group)
}

fn symplectic_data(l: usize) -> (Vec<RationalMatrix>, Vec<RationalMatrix>) {
    let d = 2 * l;
    let omega = symplectic_form(l);
    let mut gens = Vec::new();
    for a in 0..d {
        for b in a..d {
            let sym = if a == b {
                unit(d, a, a)
            } else {
                &unit(d, a, b) + &unit(d, b, a)
            };
            gens.push(&omega * &sym);
        }
    }
    let mut group = Vec::new();
    let mut vectors: Vec<Vec<Rational>> = (0..d)
        .map(|a| {
            (0..d)
                .map(|b| Rational::from_int((a == b) as i64))
                .collect()
        })
        .collect();
    vectors.push((0..d).map(|b| Rational::from_int(b as i64 + 1)).collect());
    for v in vectors {
        let col = RationalMatrix::column(v);
        let t = &RationalMatrix::identity(d) + &(&(&col * &col.transpose()) * &omega);
        group.push(t);
    }
    (gens, group)
}

/// `l`-fold orthogonal or symplectic extension of `alg`.
pub fn extend_n(
    alg: &ExtendedPoincareAlgebra,
    l: usize,
    kind: ExtensionKind,
) -> Result<NExtendedAlgebra> {
    if l == 0 {
        return Err(Error::InvalidSignature(
            "extension multiplicity must be positive".into(),
        ));
    }
    let (form, epsilon, (generators, group_elements)) = match kind {
        ExtensionKind::Orthogonal => (RationalMatrix::identity(l), alg.epsilon, orthogonal_data(l)),
        ExtensionKind::Symplectic => (symplectic_form(l), -alg.epsilon, symplectic_data(l)),
    };
    let inner = RationalMatrix::identity(form.rows());
    let extended = ExtendedPoincareAlgebra {
        sig: alg.sig,
        epsilon,
        pi: alg.pi.iter().map(|p| kronecker(p, &form)).collect(),
        so_action: alg.so_action.iter().map(|x| kronecker(x, &inner)).collect(),
    };
    extended.check_symmetry()?;
    Ok(NExtendedAlgebra {
        kind,
        l,
        base_epsilon: alg.epsilon,
        algebra: extended,
        internal_form: form,
        generators,
        group_elements,
    })
}

impl NExtendedAlgebra {
    fn lift(&self, t: &RationalMatrix) -> RationalMatrix {
        let w = self.algebra.spinor_dim() / self.internal_form.rows();
        kronecker(&RationalMatrix::identity(w), t)
    }

    /// Every internal generator `T` satisfies `TᵀΠ_k + Π_k T = 0`.
    pub fn generators_annihilate(&self) -> bool {
        self.generators.iter().all(|t| {
            let t = self.lift(t);
            self.algebra
                .pi
                .iter()
                .all(|p| (&(&t.transpose() * p) + &(p * &t)).is_zero())
        })
    }

    /// Every listed group element `g` satisfies `gᵀΠ_k g = Π_k`.
    pub fn group_preserves(&self) -> bool {
        self.group_elements.iter().all(|g| {
            let g = self.lift(g);
            self.algebra
                .pi
                .iter()
                .all(|p| &(&g.transpose() * p) * &g == *p)
        })
    }

    /// Internal generators commute with the `so(V)` action.
    pub fn generators_commute(&self) -> bool {
        self.generators.iter().all(|t| {
            let t = self.lift(t);
            self.algebra
                .so_action
                .iter()
                .all(|x| x.commutator(&t).is_zero())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::build_bracket;
    use crate::clifford::build;

    fn base() -> ExtendedPoincareAlgebra {
        build_bracket(&build(0, 1).unwrap(), &[Rational::one()], 1).unwrap()
    }

    #[test]
    fn orthogonal_l1_is_identity() {
        let a = base();
        let e = extend_n(&a, 1, ExtensionKind::Orthogonal).unwrap();
        assert_eq!(e.algebra, a);
    }

    #[test]
    fn symplectic_flips_epsilon() {
        let e = extend_n(&base(), 1, ExtensionKind::Symplectic).unwrap();
        assert_eq!(e.algebra.epsilon, -1);
        assert!(e.generators_annihilate());
        assert!(e.group_preserves());
        assert!(e.algebra.verify_jacobi().holds());
    }

    #[test]
    fn orthogonal_two() {
        let e = extend_n(&base(), 2, ExtensionKind::Orthogonal).unwrap();
        assert_eq!(e.algebra.epsilon, 1);
        assert_eq!(e.generators.len(), 1);
        assert!(e.generators_annihilate() && e.group_preserves() && e.generators_commute());
        assert!(e.algebra.verify_jacobi().holds());
    }

    #[test]
    fn zero_multiplicity_rejected() {
        assert!(extend_n(&base(), 0, ExtensionKind::Orthogonal).is_err());
    }
}
