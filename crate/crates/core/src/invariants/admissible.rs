//! Admissible bases of the Schur algebra and of the space of invariant forms,
//! and the equivariant maps `j_ρ(β)`.

use serde::Serialize;

use super::{
    canonical_form, endo_invariants, fundamental_invariants, invariant_forms, so_generators,
    BilinearForm, FundamentalInvariants, Sign,
};
use crate::clifford::{AdmName, CliffordModule, Signature};
use crate::error::{Error, Result};
use crate::linalg::{rank_of_vectors, RationalMatrix};

#[derive(Debug, Clone)]
pub struct AdmissibleEntry {
    pub name: AdmName,
    pub endo: RationalMatrix,
    pub form: BilinearForm,
    /// Invariants of `h_A`, read off its Gram matrix.
    pub inv: FundamentalInvariants,
    /// Invariants of `A` relative to `h`.
    pub endo_inv: FundamentalInvariants,
}

#[derive(Debug, Clone)]
pub struct AdmissibleBasis {
    pub sig: Signature,
    pub graded: bool,
    pub canonical: FundamentalInvariants,
    pub entries: Vec<AdmissibleEntry>,
}

/// Row of an admissible-basis report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleRow {
    pub name: String,
    pub endo: String,
    pub form: String,
}

impl AdmissibleBasis {
    pub fn entry(&self, name: AdmName) -> Option<&AdmissibleEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn report(&self) -> Vec<AdmissibleRow> {
        self.entries
            .iter()
            .map(|e| AdmissibleRow {
                name: e.name.to_string(),
                endo: e.endo_inv.to_string(),
                form: e.inv.to_string(),
            })
            .collect()
    }
}

fn mul(a: Option<Sign>, b: Option<Sign>) -> Option<Sign> {
    Some(a? * b?)
}

/// The named admissible endomorphisms of `m` with their forms `h_A`.
///
/// Invariants of every `h_A` are computed twice, directly and by
/// multiplicativity from `h` and `A`; the two must agree. The forms must be
/// invariant, linearly independent and as many as the invariant forms.
pub fn admissible_basis(m: &CliffordModule) -> Result<AdmissibleBasis> {
    let graded = m.grading.is_some();
    let h = canonical_form(m);
    let h_inv = fundamental_invariants(m, &h);
    if !h_inv.is_admissible(graded) {
        return Err(Error::InvariantMismatch(format!(
            "canonical form of {} is not admissible ({h_inv})",
            m.sig
        )));
    }
    let gens = so_generators(m);
    let mut entries = Vec::with_capacity(m.admissible_endos.len());
    for (name, a) in &m.admissible_endos {
        let endo_inv = endo_invariants(m, &h, a);
        let form = h.compose(a);
        let inv = fundamental_invariants(m, &form);
        let product = FundamentalInvariants {
            tau: mul(h_inv.tau, endo_inv.tau),
            sigma: mul(h_inv.sigma, endo_inv.sigma),
            iota: mul(h_inv.iota, endo_inv.iota),
        };
        if !endo_inv.is_admissible(graded) || !inv.is_admissible(graded) || inv != product {
            return Err(Error::InvariantMismatch(format!(
                "{name} in {}: endomorphism {endo_inv}, form {inv}, product {product}",
                m.sig
            )));
        }
        for p in &gens {
            let defect = &(&p.transpose() * &form.gram) + &(&form.gram * p);
            if !defect.is_zero() {
                return Err(Error::Span(format!(
                    "h_{name} is not invariant in {}",
                    m.sig
                )));
            }
        }
        entries.push(AdmissibleEntry {
            name: *name,
            endo: a.clone(),
            form,
            inv,
            endo_inv,
        });
    }
    let flat: Vec<_> = entries.iter().map(|e| e.form.gram.flatten()).collect();
    let rank = rank_of_vectors(&flat);
    let b = invariant_forms(m).len();
    if rank != entries.len() || rank != b {
        return Err(Error::Span(format!(
            "{} admissible forms of rank {rank} for {b} invariant forms in {}",
            entries.len(),
            m.sig
        )));
    }
    Ok(AdmissibleBasis {
        sig: m.sig,
        graded,
        canonical: h_inv,
        entries,
    })
}

/// An equivariant map `V → S*⊗S*`, `j(e_k)` having Gram matrix `components[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantMap {
    pub components: Vec<RationalMatrix>,
    pub sigma: Option<Sign>,
    pub iota: Option<Sign>,
}

impl EquivariantMap {
    pub fn new(components: Vec<RationalMatrix>, grading: Option<&RationalMatrix>) -> Self {
        let sigma = common_sign(components.iter().map(|b| (b.transpose(), b.clone())));
        let iota = grading.and_then(|e| {
            common_sign(
                components
                    .iter()
                    .map(|b| (&(&e.transpose() * b) * e, b.clone())),
            )
        });
        Self {
            components,
            sigma,
            iota,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RationalMatrix::is_zero)
    }

    pub fn flatten(&self) -> Vec<crate::Rational> {
        self.components
            .iter()
            .flat_map(|b| b.data().iter().cloned())
            .collect()
    }
}

fn common_sign<I>(pairs: I) -> Option<Sign>
where
    I: IntoIterator<Item = (RationalMatrix, RationalMatrix)>,
{
    let mut out = None;
    for (x, y) in pairs {
        if y.is_zero() {
            continue;
        }
        let s = Sign::from_i32(x.sign_relative_to(&y)?)?;
        match out {
            None => out = Some(s),
            Some(t) if t != s => return None,
            _ => {}
        }
    }
    out
}

/// `j_ρ(β)(e_k) = β(ρ(e_k)·, ·)`, components `ρ(e_k)ᵀ G`.
pub fn j_rho(m: &CliffordModule, beta: &BilinearForm) -> EquivariantMap {
    let components = m
        .gammas
        .iter()
        .map(|r| &r.transpose() * &beta.gram)
        .collect();
    EquivariantMap::new(components, m.grading_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build;

    fn rows(p: usize, q: usize) -> Vec<(String, String, String)> {
        admissible_basis(&build(p, q).unwrap())
            .unwrap()
            .report()
            .into_iter()
            .map(|r| (r.name, r.endo, r.form))
            .collect()
    }

    #[test]
    fn zero_form_gives_zero_map() {
        let m = build(1, 1).unwrap();
        let j = j_rho(&m, &BilinearForm::new(RationalMatrix::zeros(2, 2)));
        assert!(j.is_zero());
    }

    #[test]
    fn one_dimensional_negative() {
        let m = build(0, 1).unwrap();
        let j = j_rho(&m, &canonical_form(&m));
        assert_eq!(j.components, vec![RationalMatrix::from_i64(&[&[1]])]);
        assert_eq!(j.sigma, Some(Sign::Plus));
    }

    #[test]
    fn split_m1_maps_are_symmetric() {
        let m = build(1, 1).unwrap();
        let (f, _) = crate::invariants::split_forms(1).unwrap();
        let j = j_rho(&m, &f);
        assert!(j.components.iter().all(RationalMatrix::is_symmetric));
    }

    #[test]
    fn negative_odd_m2() {
        let r = rows(0, 5);
        let got: Vec<(&str, &str)> = r.iter().map(|(n, e, _)| (n.as_str(), e.as_str())).collect();
        assert_eq!(
            got,
            vec![("Id", "++"), ("I", "+-"), ("Ĵ", "+-"), ("K̂", "+-")]
        );
    }

    #[test]
    fn positive_even_m1() {
        let r = rows(2, 0);
        let endo: Vec<&str> = r.iter().map(|(_, e, _)| e.as_str()).collect();
        assert_eq!(
            endo,
            vec!["+++", "+-+", "+--", "+--", "-++", "--+", "-+-", "-+-"]
        );
        let form: Vec<&str> = r.iter().map(|(_, _, f)| f.as_str()).collect();
        assert_eq!(
            form,
            vec!["-++", "--+", "---", "---", "+++", "+-+", "++-", "++-"]
        );
    }
}
