//! Brute-force equivariance solver.
//!
//! Only the gamma matrices are used: the `so(V)` action on `V` is read off
//! the commutators `[½ρ_iρ_j, ρ_k]`, and the spaces of equivariant maps
//! `V → S*⊗S*` and `V⊗S → S` are raw kernels.

use serde::Serialize;

use crate::clifford::CliffordModule;
use crate::error::{Error, Result};
use crate::invariants::{invariant_forms, j_rho, EquivariantMap};
use crate::linalg::{rank_of_vectors, LinearSystem, RationalMatrix};
use crate::rational::Rational;

/// Generators `X = ½ρ_iρ_j` with the matrix `A` of the induced action on `V`,
/// `[X, ρ_k] = Σ_l A_{lk} ρ_l`.
pub fn generator_actions(m: &CliffordModule) -> Result<Vec<(RationalMatrix, RationalMatrix)>> {
    let n = m.n();
    let d = m.dim();
    let half = Rational::new(1, 2);
    let dd = Rational::from_int(d as i64);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let x = (&m.gammas[i] * &m.gammas[j]).scale(&half);
            let mut a = RationalMatrix::zeros(n, n);
            for k in 0..n {
                let y = x.commutator(&m.gammas[k]);
                let mut rebuilt = RationalMatrix::zeros(d, d);
                for l in 0..n {
                    // tr(ρ_l ρ_l) = −η_l d and tr(ρ_l ρ_m) = 0 otherwise
                    let c = &(&m.gammas[l].trace_of_product(&y)
                        * &Rational::from_int(-m.sig.eta(l)))
                        / &dd;
                    if !c.is_zero() {
                        rebuilt = &rebuilt + &m.gammas[l].scale(&c);
                        a.set(l, k, c);
                    }
                }
                if rebuilt != y {
                    return Err(Error::Span(format!(
                        "[ρ_{i}ρ_{j}, ρ_{k}] is not in the span of the gammas"
                    )));
                }
            }
            out.push((x, a));
        }
    }
    Ok(out)
}

fn unknown(k: usize, a: usize, b: usize, d: usize) -> usize {
    k * d * d + a * d + b
}

fn split_components(v: Vec<Rational>, n: usize, d: usize) -> Vec<RationalMatrix> {
    (0..n)
        .map(|k| {
            RationalMatrix::new(d, d, v[k * d * d..(k + 1) * d * d].to_vec()).expect("d×d block")
        })
        .collect()
}

/// `Σ_l A_{lk} B_l + XᵀB_k + B_k X = 0` for forms,
/// `Σ_l A_{lk} μ_l + μ_k X − X μ_k = 0` for multiplications.
fn equivariance_system(m: &CliffordModule, forms: bool) -> Result<LinearSystem> {
    let n = m.n();
    let d = m.dim();
    let mut sys = LinearSystem::new(n * d * d);
    for (x, a) in generator_actions(m)? {
        let support = x.row_support();
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); d];
        for (e, row) in support.iter().enumerate() {
            for (col, v) in row {
                cols[*col].push((e, (*v).clone()));
            }
        }
        for k in 0..n {
            for r in 0..d {
                for c in 0..d {
                    let mut terms: Vec<(usize, Rational)> = Vec::new();
                    for l in 0..n {
                        let coeff = a.get(l, k);
                        if !coeff.is_zero() {
                            terms.push((unknown(l, r, c, d), coeff.clone()));
                        }
                    }
                    // (B_k X)[r,c] = Σ_e B_k[r,e] X[e,c]
                    for (e, v) in &cols[c] {
                        terms.push((unknown(k, r, *e, d), v.clone()));
                    }
                    if forms {
                        // (XᵀB_k)[r,c] = Σ_e X[e,r] B_k[e,c]
                        for (e, v) in &cols[r] {
                            terms.push((unknown(k, *e, c, d), v.clone()));
                        }
                    } else {
                        // −(X μ_k)[r,c] = −Σ_e X[r,e] μ_k[e,c]
                        for (e, v) in &support[r] {
                            terms.push((unknown(k, *e, c, d), -(*v)));
                        }
                    }
                    sys.add_row(terms);
                }
            }
        }
    }
    Ok(sys)
}

/// Basis of the so(V)-equivariant maps `V → S*⊗S*`.
pub fn equivariant_map_space(m: &CliffordModule) -> Result<Vec<EquivariantMap>> {
    let sys = equivariance_system(m, true)?;
    let grading = m.grading_matrix();
    Ok(sys
        .kernel_by_elimination()
        .into_iter()
        .map(|v| EquivariantMap::new(split_components(v, m.n(), m.dim()), grading))
        .collect())
}

/// Dimension of the so(V)-equivariant multiplications `V⊗S → S`.
pub fn multiplication_space_dim(m: &CliffordModule) -> Result<usize> {
    Ok(equivariance_system(m, false)?.kernel_by_elimination().len())
}

/// Dimensions of the `(σ,ι)` parts of `span(basis)`: `(++, +−, −+, −−)`
/// with a grading, `(+, −)` without. Each part is the kernel of the
/// complementary projections restricted to the span.
pub fn symmetry_decompose(
    basis: &[EquivariantMap],
    grading: Option<&RationalMatrix>,
) -> Vec<usize> {
    let flat: Vec<Vec<Rational>> = basis.iter().map(EquivariantMap::flatten).collect();
    let dim = rank_of_vectors(&flat);
    let part = |sigma: i32, iota: Option<i32>| -> usize {
        let images: Vec<Vec<Rational>> = basis
            .iter()
            .map(|j| {
                let mut v = Vec::new();
                for b in &j.components {
                    let t = b.transpose();
                    v.extend(if sigma > 0 { b - &t } else { b + &t }.into_data());
                    if let (Some(e), Some(i)) = (grading, iota) {
                        let ebe = &(&e.transpose() * b) * e;
                        v.extend(if i > 0 { &ebe - b } else { &ebe + b }.into_data());
                    }
                }
                v
            })
            .collect();
        // kernel of the projection on span(basis) = dim − rank of its image
        dim - rank_of_vectors(&images)
    };
    match grading {
        Some(_) => vec![
            part(1, Some(1)),
            part(1, Some(-1)),
            part(-1, Some(1)),
            part(-1, Some(-1)),
        ],
        None => vec![part(1, None), part(-1, None)],
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleComparison {
    pub dim_b: usize,
    pub dim_j: usize,
    pub dim_m: usize,
    /// `span j_ρ(ℬ) = span` of the oracle basis.
    pub span_equal: bool,
    pub decomposition: Vec<usize>,
}

/// Solves for `𝒥` and `ℳ` and compares with the invariant forms.
pub fn compare(m: &CliffordModule) -> Result<OracleComparison> {
    let oracle = equivariant_map_space(m)?;
    let forms = invariant_forms(m);
    let from_forms: Vec<Vec<Rational>> = forms.iter().map(|b| j_rho(m, b).flatten()).collect();
    let ours: Vec<Vec<Rational>> = oracle.iter().map(EquivariantMap::flatten).collect();
    let r_forms = rank_of_vectors(&from_forms);
    let r_oracle = rank_of_vectors(&ours);
    let mut both = from_forms.clone();
    both.extend(ours);
    let r_both = rank_of_vectors(&both);
    Ok(OracleComparison {
        dim_b: forms.len(),
        dim_j: oracle.len(),
        dim_m: multiplication_space_dim(m)?,
        span_equal: r_forms == r_oracle && r_both == r_oracle,
        decomposition: symmetry_decompose(&oracle, m.grading_matrix()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build;

    #[test]
    fn dimensions() {
        assert_eq!(
            equivariant_map_space(&build(1, 1).unwrap()).unwrap().len(),
            2
        );
        assert_eq!(
            equivariant_map_space(&build(0, 1).unwrap()).unwrap().len(),
            1
        );
        assert_eq!(
            equivariant_map_space(&build(2, 0).unwrap()).unwrap().len(),
            8
        );
        assert_eq!(multiplication_space_dim(&build(1, 1).unwrap()).unwrap(), 2);
        assert_eq!(multiplication_space_dim(&build(1, 0).unwrap()).unwrap(), 4);
        assert_eq!(multiplication_space_dim(&build(0, 2).unwrap()).unwrap(), 2);
    }

    #[test]
    fn decompositions() {
        let m = build(1, 1).unwrap();
        let basis = equivariant_map_space(&m).unwrap();
        assert_eq!(
            symmetry_decompose(&basis, m.grading_matrix()),
            vec![2, 0, 0, 0]
        );
        let m = build(1, 0).unwrap();
        let basis = equivariant_map_space(&m).unwrap();
        assert_eq!(
            symmetry_decompose(&basis, m.grading_matrix()),
            vec![2, 1, 0, 1]
        );
        let m = build(0, 2).unwrap();
        let basis = equivariant_map_space(&m).unwrap();
        assert_eq!(symmetry_decompose(&basis, m.grading_matrix()), vec![2, 0]);
    }

    #[test]
    fn vector_action_is_rotation() {
        let m = build(2, 0).unwrap();
        let acts = generator_actions(&m).unwrap();
        // [½e₁e₂, e₁] = η₁ e₂
        assert_eq!(acts[0].1, RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]));
    }
}
