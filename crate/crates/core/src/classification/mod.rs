//! Counting extended Poincaré algebras, the periodicity tables, bracket
//! construction and the complex case.

mod algebra_type;
mod bracket;
mod complex;
mod extension;
mod table;

use serde::{Deserialize, Serialize};

pub use algebra_type::{algebra_type, monomial_algebra, CliffordTypes};
pub use bracket::{bracket_basis, build_bracket, ExtendedPoincareAlgebra, JacobiReport};
pub use complex::{classify_complex, complex_signature, ComplexCell};
pub use extension::{extend_n, ExtensionKind, NExtendedAlgebra};
pub use table::{
    check_periodicity, check_symmetries, emit_table, residue, CheckRecord, SymmetryReport,
    TableCell, TableDocument, TableKind,
};

use crate::clifford::{AdmName, CliffordModule, Signature};
use crate::error::{Error, Result};
use crate::invariants::{admissible_basis, j_rho, AdmissibleBasis, Sign};

/// `(σ(j_A), ι(j_A))` of one admissible element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingClass {
    pub name: AdmName,
    pub sigma: Sign,
    pub iota: Option<Sign>,
}

/// Numbers of super (`+`) and Lie (`−`) extensions, refined by `ι` when the
/// spinor module is reducible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationCell {
    pub sig: Signature,
    /// `(L⁺⁺, L⁺⁻, L⁻⁺, L⁻⁻)`, present iff `S` carries a grading.
    pub quad: Option<[usize; 4]>,
    pub lplus: usize,
    pub lminus: usize,
    pub classes: Vec<EmbeddingClass>,
}

impl ClassificationCell {
    pub fn pair(&self) -> [usize; 2] {
        [self.lplus, self.lminus]
    }

    /// The quadruple if defined, else the pair.
    pub fn counts(&self) -> Vec<usize> {
        match self.quad {
            Some(q) => q.to_vec(),
            None => self.pair().to_vec(),
        }
    }

    pub fn total(&self) -> usize {
        self.lplus + self.lminus
    }
}

/// `σ(j_A) = τ(h_A)σ(h_A)`, `ι(j_A) = −ι(h_A)`, each checked against the
/// components of `j_ρ(h_A)`.
pub fn embedding_classes(
    m: &CliffordModule,
    basis: &AdmissibleBasis,
) -> Result<Vec<EmbeddingClass>> {
    let mut out = Vec::with_capacity(basis.entries.len());
    for e in &basis.entries {
        let (Some(tau), Some(sigma_h)) = (e.inv.tau, e.inv.sigma) else {
            return Err(Error::InvariantMismatch(format!(
                "h_{} is not admissible",
                e.name
            )));
        };
        let sigma = tau * sigma_h;
        let iota = if basis.graded {
            e.inv.iota.map(|i| -i)
        } else {
            None
        };
        let j = j_rho(m, &e.form);
        if j.sigma != Some(sigma) || j.iota != iota {
            return Err(Error::InvariantMismatch(format!(
                "j_{} in {}: formula ({sigma:?}, {iota:?}), components ({:?}, {:?})",
                e.name, m.sig, j.sigma, j.iota
            )));
        }
        out.push(EmbeddingClass {
            name: e.name,
            sigma,
            iota,
        });
    }
    Ok(out)
}

fn quad_index(sigma: Sign, iota: Sign) -> usize {
    match (sigma, iota) {
        (Sign::Plus, Sign::Plus) => 0,
        (Sign::Plus, Sign::Minus) => 1,
        (Sign::Minus, Sign::Plus) => 2,
        (Sign::Minus, Sign::Minus) => 3,
    }
}

pub fn count_embeddings(m: &CliffordModule) -> Result<ClassificationCell> {
    let basis = admissible_basis(m)?;
    let classes = embedding_classes(m, &basis)?;
    let graded = basis.graded;
    let mut quad = [0usize; 4];
    let (mut lplus, mut lminus) = (0, 0);
    for c in &classes {
        match c.sigma {
            Sign::Plus => lplus += 1,
            Sign::Minus => lminus += 1,
        }
        if let Some(i) = c.iota {
            quad[quad_index(c.sigma, i)] += 1;
        }
    }
    Ok(ClassificationCell {
        sig: m.sig,
        quad: graded.then_some(quad),
        lplus,
        lminus,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build;

    fn cell(p: usize, q: usize) -> ClassificationCell {
        count_embeddings(&build(p, q).unwrap()).unwrap()
    }

    #[test]
    fn small_cells() {
        assert_eq!(cell(2, 0).pair(), [6, 2]);
        assert_eq!(cell(1, 1).pair(), [2, 0]);
        assert_eq!(cell(1, 0).quad, Some([2, 1, 0, 1]));
        assert_eq!(cell(0, 1).pair(), [1, 0]);
        assert_eq!(cell(0, 2).quad, None);
        assert_eq!(cell(0, 2).pair(), [2, 0]);
    }

    #[test]
    fn totals_match_b() {
        for n in 1..=6 {
            for p in 0..=n {
                let c = cell(p, n - p);
                assert_eq!(
                    c.total(),
                    crate::reference::at_s(&crate::reference::B_OF_S, c.sig.s())
                );
            }
        }
    }
}
