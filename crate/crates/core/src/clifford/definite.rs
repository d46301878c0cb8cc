//! Models of `S_{k,0}` and `S_{0,k}` on (complexified) blade algebras.
//!
//! `ℂℓ_m = Cℓ ⊕ iCℓ` is stored as a real space of twice the dimension, so a
//! complex-linear operator `T` becomes `Id₂ ⊗ T`, multiplication by `i` is
//! `[[0,−1],[1,0]] ⊗ Id` and complex conjugation `c` is `diag(1,−1) ⊗ Id`.
//! Blades are orthonormal, so every canonical form below has Gram matrix Id.

use super::blade::BladeAlgebra;
use super::{c2, j2, AdmName, CliffordModule, Definite, Grading, Recipe, Signature};
use crate::error::{Error, Result};
use crate::linalg::{kronecker, RationalMatrix};

/// Even-dimensional model together with the operators the odd recipes reuse.
struct EvenModel {
    gammas: Vec<RationalMatrix>,
    /// `Some(I)` when the space is `ℂℓ_m`.
    complex: Option<RationalMatrix>,
    alpha: RationalMatrix,
    l_omega: RationalMatrix,
    conj: Option<RationalMatrix>,
    dim: usize,
}

fn complexify(t: &RationalMatrix) -> RationalMatrix {
    kronecker(&RationalMatrix::identity(2), t)
}

fn product(ms: &[RationalMatrix], d: usize) -> RationalMatrix {
    ms.iter()
        .fold(RationalMatrix::identity(d), |acc, g| &acc * g)
}

/// `S_{2m,0}` (`kappa = −1`) or `S_{0,2m}` (`kappa = +1`), `m ≥ 0`.
fn even_model(m: usize, sign: Definite) -> EvenModel {
    let kappa = match sign {
        Definite::Positive => -1,
        Definite::Negative => 1,
    };
    let alg = BladeAlgebra::new(m, kappa);
    let alpha = alg.alpha();
    let l_omega = alg.left(alg.volume());
    let r = m % 4;
    // Which residues use the real algebra with ρ(x̃)s = ω·s·x resp. ω·α(s)·x.
    let (real_plain, real_alpha) = match sign {
        Definite::Positive => (r == 0, r == 3),
        Definite::Negative => (r == 0, r == 1),
    };
    let left: Vec<RationalMatrix> = (0..m).map(|i| alg.left(alg.generator(i))).collect();
    let right: Vec<RationalMatrix> = (0..m).map(|i| alg.right(alg.generator(i))).collect();
    if real_plain || real_alpha {
        let mut gammas = left.clone();
        for r_x in &right {
            let g = if real_plain {
                &l_omega * r_x
            } else {
                &(&l_omega * r_x) * &alpha
            };
            gammas.push(g);
        }
        EvenModel {
            gammas,
            complex: None,
            dim: alg.dim(),
            alpha,
            l_omega,
            conj: None,
        }
    } else {
        let d = alg.dim();
        let i_op = kronecker(&j2(), &RationalMatrix::identity(d));
        let conj = kronecker(&c2(), &RationalMatrix::identity(d));
        let mut gammas: Vec<RationalMatrix> = left.iter().map(complexify).collect();
        for r_x in &right {
            // ρ(x̃)s = i·α(s)·x
            gammas.push(&i_op * &complexify(&(r_x * &alpha)));
        }
        EvenModel {
            gammas,
            complex: Some(i_op),
            dim: 2 * d,
            alpha: complexify(&alpha),
            l_omega: complexify(&l_omega),
            conj: Some(conj),
        }
    }
}

/// The module `S_{k,0}` (positive) or `S_{0,k}` (negative).
pub fn build_definite(k: usize, sign: Definite) -> Result<CliffordModule> {
    if k == 0 {
        return Err(Error::InvalidSignature("definite model needs k ≥ 1".into()));
    }
    let sig = match sign {
        Definite::Positive => Signature::new(k, 0),
        Definite::Negative => Signature::new(0, k),
    };
    let module = if k.is_multiple_of(2) {
        build_even(k / 2, sign, sig)
    } else {
        build_odd(k / 2, sign, sig)
    };
    module.validate()?;
    Ok(module)
}

fn with_e_products(
    id: RationalMatrix,
    i: RationalMatrix,
    j: RationalMatrix,
    e: RationalMatrix,
) -> Vec<(AdmName, RationalMatrix)> {
    let k = &i * &j;
    vec![
        (AdmName::Id, id),
        (AdmName::I, i.clone()),
        (AdmName::J, j.clone()),
        (AdmName::K, k.clone()),
        (AdmName::EI, &e * &i),
        (AdmName::EJ, &e * &j),
        (AdmName::EK, &e * &k),
        (AdmName::E, e),
    ]
}

fn build_even(m: usize, sign: Definite, sig: Signature) -> CliffordModule {
    let model = even_model(m, sign);
    let d = model.dim;
    let id = RationalMatrix::identity(d);
    let r = m % 4;
    let mut grading = None;
    let mut endos = vec![(AdmName::Id, id.clone())];
    match &model.complex {
        None => {
            let reducible = match sign {
                Definite::Positive => r == 0,
                Definite::Negative => r == 0,
            };
            if reducible {
                grading = Some(Grading {
                    matrix: model.alpha.clone(),
                    label: "α",
                });
                endos.push((AdmName::E, model.alpha.clone()));
            } else {
                endos.push((AdmName::J, &model.l_omega * &model.alpha));
            }
        }
        Some(i_op) => {
            grading = Some(Grading {
                matrix: model.alpha.clone(),
                label: "α",
            });
            let conj = model.conj.as_ref().expect("complex model has c");
            let j = &model.l_omega * conj;
            endos = with_e_products(id, i_op.clone(), j, model.alpha.clone());
            sort_endos(&mut endos);
        }
    }
    CliffordModule {
        sig,
        gammas: model.gammas,
        grading,
        complex_structure: model.complex,
        recipe: Recipe::DefiniteEven,
        canonical: RationalMatrix::identity(d),
        admissible_endos: endos,
    }
}

fn sort_endos(endos: &mut [(AdmName, RationalMatrix)]) {
    endos.sort_by_key(|(n, _)| *n);
}

fn build_odd(m: usize, sign: Definite, sig: Signature) -> CliffordModule {
    let base = even_model(m, sign);
    let r = m % 4;
    // Residues where ρ̃(e₀) carries the extra factor I, and where the real
    // base has to be complexified first to make I available.
    let (times_i, double) = match sign {
        Definite::Positive => (r == 0 || r == 2, r == 0),
        Definite::Negative => (r == 1 || r == 3, r == 1),
    };
    let (gammas, complex, alpha, l_omega, conj, d) = if double {
        let d = 2 * base.dim;
        (
            base.gammas.iter().map(complexify).collect::<Vec<_>>(),
            Some(kronecker(&j2(), &RationalMatrix::identity(base.dim))),
            complexify(&base.alpha),
            complexify(&base.l_omega),
            Some(kronecker(&c2(), &RationalMatrix::identity(base.dim))),
            d,
        )
    } else {
        (
            base.gammas.clone(),
            base.complex.clone(),
            base.alpha.clone(),
            base.l_omega.clone(),
            base.conj.clone(),
            base.dim,
        )
    };
    let omega = product(&gammas, d);
    let e0 = if times_i {
        complex.as_ref().expect("complex structure available") * &omega
    } else {
        omega
    };
    let mut all = gammas;
    all.push(e0);
    let id = RationalMatrix::identity(d);
    let mut grading = None;
    let endos = match (sign, &complex, &conj) {
        (Definite::Positive, Some(i_op), Some(c)) => {
            let j = if r == 0 { &alpha * c } else { &l_omega * c };
            if r == 0 {
                grading = Some(Grading {
                    matrix: c * &alpha,
                    label: "c∘α",
                });
            }
            vec![
                (AdmName::Id, id),
                (AdmName::I, i_op.clone()),
                (AdmName::K, i_op * &j),
                (AdmName::J, j),
            ]
        }
        (Definite::Negative, Some(i_op), Some(c)) => {
            let jhat = &(&l_omega * &alpha) * c;
            if r == 3 {
                grading = Some(Grading {
                    matrix: jhat.clone(),
                    label: "Ĵ = L_ω∘α∘c",
                });
            }
            vec![
                (AdmName::Id, id),
                (AdmName::I, i_op.clone()),
                (AdmName::KHat, i_op * &jhat),
                (AdmName::JHat, jhat),
            ]
        }
        _ => vec![(AdmName::Id, id)],
    };
    let mut endos = endos;
    sort_endos(&mut endos);
    CliffordModule {
        sig,
        gammas: all,
        grading,
        complex_structure: complex,
        recipe: Recipe::DefiniteOdd,
        canonical: RationalMatrix::identity(d),
        admissible_endos: endos,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn one_dimensional_cases() {
        let p = build_definite(1, Definite::Positive).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.gammas[0], RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]));
        let n = build_definite(1, Definite::Negative).unwrap();
        assert_eq!(n.dim(), 1);
        assert_eq!(n.gammas[0], RationalMatrix::from_i64(&[&[1]]));
    }

    #[test]
    fn relations_and_dimensions() {
        // real dimensions of irreducible modules of Cℓ_{k,0} and Cℓ_{0,k}
        let pos = [2, 4, 4, 8, 8, 8, 8, 16, 32, 64];
        let neg = [1, 2, 4, 8, 8, 16, 16, 16, 16, 32];
        for k in 1..=10 {
            let p = build_definite(k, Definite::Positive).unwrap();
            assert_eq!(p.dim(), pos[k - 1], "positive k={k}");
            let n = build_definite(k, Definite::Negative).unwrap();
            assert_eq!(n.dim(), neg[k - 1], "negative k={k}");
        }
    }

    #[test]
    fn two_zero_is_complexified_cl1() {
        let m = build_definite(2, Definite::Positive).unwrap();
        assert_eq!(m.dim(), 4);
        let i = m.complex_structure.clone().unwrap();
        assert_eq!(
            &i * &i,
            RationalMatrix::identity(4).scale(&Rational::from_int(-1))
        );
        assert_eq!(m.admissible_endos.len(), 8);
    }
}
