//! Graded tensor product of a split module with a definite one.

use super::{AdmName, CliffordModule, Grading, Recipe, Signature};
use crate::error::{Error, Result};
use crate::linalg::{kronecker, RationalMatrix};

/// Common sign `t` with `ρ_kᵀ G = t·G ρ_k` for all `k`.
fn form_tau(gammas: &[RationalMatrix], g: &RationalMatrix) -> Option<i32> {
    let mut tau = None;
    for r in gammas {
        let s = (&r.transpose() * g).sign_relative_to(&(g * r))?;
        match tau {
            None => tau = Some(s),
            Some(t) if t != s => return None,
            _ => {}
        }
    }
    tau
}

/// `ρ(V₁) = ρ₁ ⊗ Id`, `ρ(V₂) = E₁ ⊗ ρ₂`, with the generators reordered so the
/// positive ones come first.
///
/// The canonical form is `h₁ ⊗ h₂`, where `h₁` is picked among the forms of
/// the admissible endomorphisms of `m1` so that `ι(h₁)τ(h₁) = τ(h₂)`.
pub fn graded_tensor(m1: &CliffordModule, m2: &CliffordModule) -> Result<CliffordModule> {
    let e1 = m1.grading_matrix().ok_or(Error::MissingGrading)?;
    let d1 = m1.dim();
    let d2 = m2.dim();
    let id1 = RationalMatrix::identity(d1);
    let id2 = RationalMatrix::identity(d2);

    let tau2 = form_tau(&m2.gammas, &m2.canonical).ok_or_else(|| {
        Error::InvariantMismatch(format!("canonical form of {} has no τ", m2.sig))
    })?;
    let mut h1 = None;
    for (_, a) in &m1.admissible_endos {
        let g = &a.transpose() * &m1.canonical;
        let Some(tau) = form_tau(&m1.gammas, &g) else {
            continue;
        };
        let Some(iota) = (&(&e1.transpose() * &g) * e1).sign_relative_to(&g) else {
            continue;
        };
        if iota * tau == tau2 {
            h1 = Some(g);
            break;
        }
    }
    let h1 = h1.ok_or_else(|| {
        Error::InvariantMismatch(format!("no factor form matches τ = {tau2} of {}", m2.sig))
    })?;

    let first: Vec<RationalMatrix> = m1.gammas.iter().map(|g| kronecker(g, &id2)).collect();
    let second: Vec<RationalMatrix> = m2.gammas.iter().map(|g| kronecker(e1, g)).collect();
    let sig = Signature::new(m1.sig.p + m2.sig.p, m1.sig.q + m2.sig.q);
    let mut gammas = Vec::with_capacity(sig.n());
    gammas.extend(first[..m1.sig.p].iter().cloned());
    gammas.extend(second[..m2.sig.p].iter().cloned());
    gammas.extend(first[m1.sig.p..].iter().cloned());
    gammas.extend(second[m2.sig.p..].iter().cloned());

    let grading = m2.grading.as_ref().map(|g2| Grading {
        matrix: kronecker(e1, &g2.matrix),
        label: "E₁ ⊗ E₂",
    });
    let complex_structure = m2.complex_structure.as_ref().map(|i2| kronecker(&id1, i2));

    let mut admissible_endos = Vec::with_capacity(m2.admissible_endos.len());
    for (name, a2) in &m2.admissible_endos {
        let commutes = m2.gammas.iter().all(|r| r * a2 == a2 * r);
        let a1 = if commutes { &id1 } else { e1 };
        admissible_endos.push((*name, kronecker(a1, a2)));
    }
    if admissible_endos.is_empty() {
        admissible_endos.push((AdmName::Id, RationalMatrix::identity(d1 * d2)));
    }

    let module = CliffordModule {
        sig,
        gammas,
        grading,
        complex_structure,
        recipe: Recipe::Tensor,
        canonical: kronecker(&h1, &m2.canonical),
        admissible_endos,
    };
    module.validate()?;
    Ok(module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_definite, build_split, Definite};

    #[test]
    fn requires_grading_on_first_factor() {
        let odd = build_definite(3, Definite::Positive).unwrap();
        let other = build_definite(1, Definite::Positive).unwrap();
        assert!(matches!(
            graded_tensor(&odd, &other),
            Err(Error::MissingGrading)
        ));
    }

    #[test]
    fn canonical_form_is_invariant() {
        for m in 1..=2 {
            for k in 1..=4 {
                for sign in [Definite::Positive, Definite::Negative] {
                    let t =
                        graded_tensor(&build_split(m).unwrap(), &build_definite(k, sign).unwrap())
                            .unwrap();
                    assert!(form_tau(&t.gammas, &t.canonical).is_some(), "{}", t.sig);
                    for (name, a) in &t.admissible_endos {
                        let s = t
                            .gammas
                            .iter()
                            .map(|r| (r * a).sign_relative_to(&(a * r)))
                            .collect::<Vec<_>>();
                        assert!(
                            s.iter().all(|x| x.is_some() && *x == s[0]),
                            "{name} in {}",
                            t.sig
                        );
                    }
                }
            }
        }
    }
}
