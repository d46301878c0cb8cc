//! Extended Poincaré (super)algebras `g = so(V) + V + S` and the graded
//! Jacobi identity.

use serde::Serialize;

use super::embedding_classes;
use crate::clifford::{AdmName, CliffordModule, Signature};
use crate::error::{Error, Result};
use crate::invariants::{admissible_basis, Sign};
use crate::linalg::RationalMatrix;
use crate::rational::Rational;

/// `π(s,t) = Σ_k (sᵀ Π_k t) e_k` on `W`, with `so(V)` acting on `W` through
/// `so_action`, one matrix per `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedPoincareAlgebra {
    pub sig: Signature,
    /// `+1` for a superalgebra, `−1` for a `ℤ₂`-graded Lie algebra.
    pub epsilon: i32,
    pub pi: Vec<RationalMatrix>,
    pub so_action: Vec<RationalMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobiReport {
    pub dim: usize,
    pub triples: usize,
    pub failures: usize,
    pub first_failure: Option<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

/// Names of the admissible elements with `σ(j_A) = ε`, in basis order.
pub fn bracket_basis(m: &CliffordModule, epsilon: i32) -> Result<Vec<AdmName>> {
    let basis = admissible_basis(m)?;
    let want = Sign::from_i32(epsilon)
        .ok_or_else(|| Error::InvalidSignature(format!("epsilon must be ±1, got {epsilon}")))?;
    Ok(embedding_classes(m, &basis)?
        .into_iter()
        .filter(|c| c.sigma == want)
        .map(|c| c.name)
        .collect())
}

/// The bracket dual to `j = Σ c_A j_ρ(h_A)` over the admissible elements
/// with `σ(j_A) = ε`.
pub fn build_bracket(
    m: &CliffordModule,
    coeffs: &[Rational],
    epsilon: i32,
) -> Result<ExtendedPoincareAlgebra> {
    let want = Sign::from_i32(epsilon)
        .ok_or_else(|| Error::InvalidSignature(format!("epsilon must be ±1, got {epsilon}")))?;
    let basis = admissible_basis(m)?;
    let classes = embedding_classes(m, &basis)?;
    let selected: Vec<_> = basis
        .entries
        .iter()
        .zip(&classes)
        .filter(|(_, c)| c.sigma == want)
        .map(|(e, _)| e)
        .collect();
    if coeffs.len() != selected.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} coefficients for {} admissible elements with σ = {}",
            coeffs.len(),
            selected.len(),
            want.char()
        )));
    }
    let d = m.dim();
    let mut gram = RationalMatrix::zeros(d, d);
    for (e, c) in selected.iter().zip(coeffs) {
        if !c.is_zero() {
            gram = &gram + &e.form.gram.scale(c);
        }
    }
    let pi = m
        .gammas
        .iter()
        .enumerate()
        .map(|(k, r)| (&r.transpose() * &gram).scale(&Rational::from_int(m.sig.eta(k))))
        .collect();
    let half = Rational::new(1, 2);
    let n = m.n();
    let mut so_action = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            so_action.push((&m.gammas[i] * &m.gammas[j]).scale(&half));
        }
    }
    let alg = ExtendedPoincareAlgebra {
        sig: m.sig,
        epsilon,
        pi,
        so_action,
    };
    alg.check_symmetry()?;
    Ok(alg)
}

type Sparse = Vec<(usize, Rational)>;

impl ExtendedPoincareAlgebra {
    pub fn spinor_dim(&self) -> usize {
        self.pi.first().map_or(0, |p| p.rows())
    }

    pub fn dim(&self) -> usize {
        let n = self.sig.n();
        n * (n - 1) / 2 + n + self.spinor_dim()
    }

    /// Each `Π_k` symmetric for `ε = +1`, skew for `ε = −1`.
    pub fn check_symmetry(&self) -> Result<()> {
        for (k, p) in self.pi.iter().enumerate() {
            let ok = if self.epsilon == 1 {
                p.is_symmetric()
            } else {
                p.is_skew()
            };
            if !ok {
                return Err(Error::SigmaMismatch(format!(
                    "Π_{k} does not have symmetry ε = {}",
                    self.epsilon
                )));
            }
        }
        Ok(())
    }

    pub fn is_abelian_odd(&self) -> bool {
        self.pi.iter().all(RationalMatrix::is_zero)
    }

    /// Action of `L_ij` on `V`: `e_i ↦ η_i e_j`, `e_j ↦ −η_j e_i`, the
    /// commutator with `½e_ie_j` in the Clifford algebra.
    fn vector_action(&self) -> Vec<RationalMatrix> {
        let n = self.sig.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut a = RationalMatrix::zeros(n, n);
                a.set(j, i, Rational::from_int(self.sig.eta(i)));
                a.set(i, j, Rational::from_int(-self.sig.eta(j)));
                out.push(a);
            }
        }
        out
    }

    /// Structure constants `[x, y]` over the basis `L_ij, e_k, s_a`.
    fn structure(&self) -> Vec<Vec<Sparse>> {
        let n = self.sig.n();
        let d = self.spinor_dim();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let nl = pairs.len();
        let total = nl + n + d;
        let va = self.vector_action();
        let mut table = vec![vec![Sparse::new(); total]; total];

        for x in 0..nl {
            for y in 0..nl {
                let c = va[x].commutator(&va[y]);
                let mut v = Sparse::new();
                for (z, &(i, j)) in pairs.iter().enumerate() {
                    let e = c.get(j, i);
                    if !e.is_zero() {
                        v.push((z, e * &Rational::from_int(self.sig.eta(i))));
                    }
                }
                table[x][y] = v;
            }
            for k in 0..n {
                let v: Sparse = (0..n)
                    .filter(|&c| !va[x].get(c, k).is_zero())
                    .map(|c| (nl + c, va[x].get(c, k).clone()))
                    .collect();
                table[nl + k][x] = v.iter().map(|(i, c)| (*i, -c)).collect();
                table[x][nl + k] = v;
            }
            let sa = &self.so_action[x];
            for a in 0..d {
                let v: Sparse = (0..d)
                    .filter(|&c| !sa.get(c, a).is_zero())
                    .map(|c| (nl + n + c, sa.get(c, a).clone()))
                    .collect();
                table[nl + n + a][x] = v.iter().map(|(i, c)| (*i, -c)).collect();
                table[x][nl + n + a] = v;
            }
        }
        for a in 0..d {
            for b in 0..d {
                table[nl + n + a][nl + n + b] = (0..n)
                    .filter(|&k| !self.pi[k].get(a, b).is_zero())
                    .map(|k| (nl + k, self.pi[k].get(a, b).clone()))
                    .collect();
            }
        }
        table
    }

    /// Checks the graded Jacobi identity
    /// `[x,[y,z]] = [[x,y],z] + (−1)^{|x||y|}[y,[x,z]]` on all ordered basis
    /// triples, the sign only entering for `ε = +1`.
    pub fn verify_jacobi(&self) -> JacobiReport {
        let table = self.structure();
        let total = table.len();
        let odd_start = total - self.spinor_dim();
        let odd = |x: usize| x >= odd_start;
        let mut failures = 0;
        let mut first_failure = None;
        let mut acc = vec![Rational::zero(); total];
        for x in 0..total {
            for y in 0..total {
                let graded_sign = if self.epsilon == 1 && odd(x) && odd(y) {
                    -1
                } else {
                    1
                };
                for z in 0..total {
                    for v in acc.iter_mut() {
                        *v = Rational::zero();
                    }
                    for (w, c) in &table[y][z] {
                        for (u, e) in &table[x][*w] {
                            acc[*u] += &(c * e);
                        }
                    }
                    for (w, c) in &table[x][y] {
                        for (u, e) in &table[*w][z] {
                            acc[*u] -= &(c * e);
                        }
                    }
                    for (w, c) in &table[x][z] {
                        for (u, e) in &table[y][*w] {
                            let t = c * e;
                            if graded_sign == 1 {
                                acc[*u] -= &t;
                            } else {
                                acc[*u] += &t;
                            }
                        }
                    }
                    if acc.iter().any(|v| !v.is_zero()) {
                        failures += 1;
                        first_failure.get_or_insert((x, y, z));
                    }
                }
            }
        }
        JacobiReport {
            dim: total,
            triples: total * total * total,
            failures,
            first_failure,
        }
    }

    /// `π(Xs,t) + π(s,Xt) = [X, π(s,t)]` for every `so(V)` generator, i.e.
    /// `XᵀΠ_k + Π_k X = Σ_l A_{kl} Π_l`.
    pub fn is_equivariant(&self) -> bool {
        let va = self.vector_action();
        let n = self.sig.n();
        for (x, a) in self.so_action.iter().zip(&va) {
            for k in 0..n {
                let lhs = &(&x.transpose() * &self.pi[k]) + &(&self.pi[k] * x);
                let mut rhs = RationalMatrix::zeros(lhs.rows(), lhs.cols());
                for l in 0..n {
                    let c = a.get(k, l);
                    if !c.is_zero() {
                        rhs = &rhs + &self.pi[l].scale(c);
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build;

    #[test]
    fn zero_bracket_is_abelian() {
        let m = build(1, 1).unwrap();
        let alg = build_bracket(&m, &[Rational::zero(), Rational::zero()], 1).unwrap();
        assert!(alg.is_abelian_odd());
        assert!(alg.verify_jacobi().holds());
    }

    #[test]
    fn one_dimensional_super_bracket() {
        let m = build(0, 1).unwrap();
        let alg = build_bracket(&m, &[Rational::one()], 1).unwrap();
        assert_eq!(alg.pi, vec![RationalMatrix::from_i64(&[&[-1]])]);
        assert!(alg.verify_jacobi().holds());
    }

    #[test]
    fn split_m1_super_family() {
        let m = build(1, 1).unwrap();
        assert_eq!(bracket_basis(&m, 1).unwrap().len(), 2);
        for c in [[1, 0], [0, 1], [3, -2]] {
            let coeffs: Vec<Rational> = c.iter().map(|&x| Rational::from_int(x)).collect();
            let alg = build_bracket(&m, &coeffs, 1).unwrap();
            assert!(alg.is_equivariant());
            assert!(alg.verify_jacobi().holds());
        }
    }

    #[test]
    fn wrong_coefficient_count() {
        let m = build(0, 1).unwrap();
        assert!(build_bracket(&m, &[], 1).is_err());
    }

    #[test]
    fn broken_bracket_is_detected() {
        let m = build(2, 0).unwrap();
        let names = bracket_basis(&m, 1).unwrap();
        let mut coeffs = vec![Rational::zero(); names.len()];
        coeffs[0] = Rational::one();
        let mut alg = build_bracket(&m, &coeffs, 1).unwrap();
        assert!(alg.verify_jacobi().holds());
        // a symmetric but non-equivariant perturbation
        let d = alg.spinor_dim();
        let mut bump = RationalMatrix::zeros(d, d);
        bump.set(0, 0, Rational::one());
        alg.pi[0] = &alg.pi[0] + &bump;
        assert!(!alg.is_equivariant());
        assert!(!alg.verify_jacobi().holds());
    }
}
