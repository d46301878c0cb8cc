//! Invariant bilinear forms on spinor modules and their fundamental invariants.

mod admissible;
mod schur;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use admissible::{admissible_basis, j_rho, AdmissibleBasis, AdmissibleEntry, EquivariantMap};
pub use schur::{
    classify_profile, identify_algebra, identify_algebra_with, schur_algebra, AlgebraProfile,
    AlgebraType, Field, SchurAlgebra,
};

use crate::clifford::{build_split, CliffordModule, SplitBasisConvention};
use crate::error::{Error, Result};
use crate::linalg::{LinearSystem, RationalMatrix};

/// A sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn from_i32(s: i32) -> Option<Sign> {
        match s {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// `(τ, σ, ι)`; `None` where the defining property fails or no grading exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FundamentalInvariants {
    pub tau: Option<Sign>,
    pub sigma: Option<Sign>,
    pub iota: Option<Sign>,
}

impl FundamentalInvariants {
    pub fn is_admissible(&self, graded: bool) -> bool {
        self.tau.is_some() && self.sigma.is_some() && (!graded || self.iota.is_some())
    }

    /// Parses strings such as `"+-+"` or `"-+"`.
    pub fn parse(s: &str) -> Option<Self> {
        let signs: Vec<Sign> = s
            .chars()
            .map(|c| match c {
                '+' => Some(Sign::Plus),
                '-' | '−' => Some(Sign::Minus),
                _ => None,
            })
            .collect::<Option<_>>()?;
        match signs.as_slice() {
            [t, s] => Some(Self {
                tau: Some(*t),
                sigma: Some(*s),
                iota: None,
            }),
            [t, s, i] => Some(Self {
                tau: Some(*t),
                sigma: Some(*s),
                iota: Some(*i),
            }),
            _ => None,
        }
    }
}

impl fmt::Display for FundamentalInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |s: Option<Sign>| s.map_or('?', Sign::char);
        write!(f, "{}{}", c(self.tau), c(self.sigma))?;
        if let Some(i) = self.iota {
            write!(f, "{}", i.char())?;
        }
        Ok(())
    }
}

/// `β(s,t) = sᵀ·gram·t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearForm {
    pub gram: RationalMatrix,
}

impl BilinearForm {
    pub fn new(gram: RationalMatrix) -> Self {
        Self { gram }
    }

    /// `h_A(s,t) = h(As,t)`, Gram matrix `AᵀG`.
    pub fn compose(&self, a: &RationalMatrix) -> Self {
        Self::new(&a.transpose() * &self.gram)
    }
}

/// `ρ(e_i)ρ(e_j)`, `i < j`, spanning the image of so(V) (up to the factor ½).
pub fn so_generators(m: &CliffordModule) -> Vec<RationalMatrix> {
    let n = m.n();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(&m.gammas[i] * &m.gammas[j]);
        }
    }
    out
}

/// Basis of the space of so(V)-invariant bilinear forms on `S`.
pub fn invariant_forms(m: &CliffordModule) -> Vec<BilinearForm> {
    let d = m.dim();
    let mut sys = LinearSystem::new(d * d);
    for p in so_generators(m) {
        push_invariance_rows(&mut sys, &p, d);
    }
    sys.kernel()
        .into_iter()
        .map(|v| BilinearForm::new(RationalMatrix::new(d, d, v).expect("d×d kernel vector")))
        .collect()
}

/// Rows of `PᵀG + GP = 0`, `G` unknown and row-major.
pub(crate) fn push_invariance_rows(sys: &mut LinearSystem, p: &RationalMatrix, d: usize) {
    let mut cols: Vec<Vec<(usize, crate::Rational)>> = vec![Vec::new(); d];
    for (c, row) in p.row_support().into_iter().enumerate() {
        for (j, v) in row {
            cols[j].push((c, v.clone()));
        }
    }
    for a in 0..d {
        for b in 0..d {
            // (PᵀG)[a,b] = Σ_c P[c,a] G[c,b],  (GP)[a,b] = Σ_c G[a,c] P[c,b]
            let terms = cols[a]
                .iter()
                .map(|(c, v)| (c * d + b, v.clone()))
                .chain(cols[b].iter().map(|(c, v)| (a * d + c, v.clone())));
            sys.add_row(terms);
        }
    }
}

/// Common sign `t` with `x_k = t·y_k` for all `k`.
fn unanimous<I>(pairs: I) -> Option<Sign>
where
    I: IntoIterator<Item = (RationalMatrix, RationalMatrix)>,
{
    let mut out: Option<Sign> = None;
    for (x, y) in pairs {
        if x.is_zero() && y.is_zero() {
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

/// `(τ, σ, ι)` of a form, read off its Gram matrix.
pub fn fundamental_invariants(m: &CliffordModule, beta: &BilinearForm) -> FundamentalInvariants {
    let g = &beta.gram;
    let tau = unanimous(m.gammas.iter().map(|r| (&r.transpose() * g, g * r)));
    let sigma = unanimous(std::iter::once((g.transpose(), g.clone())));
    let iota = m
        .grading_matrix()
        .and_then(|e| unanimous(std::iter::once((&(&e.transpose() * g) * e, g.clone()))));
    FundamentalInvariants { tau, sigma, iota }
}

/// `(τ, σ_h, ι)` of an endomorphism relative to the form `h`.
pub fn endo_invariants(
    m: &CliffordModule,
    h: &BilinearForm,
    a: &RationalMatrix,
) -> FundamentalInvariants {
    let g = &h.gram;
    let tau = unanimous(m.gammas.iter().map(|r| (r * a, a * r)));
    let sigma = unanimous(std::iter::once((&a.transpose() * g, g * a)));
    let iota = m
        .grading_matrix()
        .and_then(|e| unanimous(std::iter::once((&(e * a) * e, a.clone()))));
    FundamentalInvariants { tau, sigma, iota }
}

/// `f` and `f_E` on the exterior-algebra model of `Cℓ_{m,m}`.
pub fn split_forms(m: usize) -> Result<(BilinearForm, BilinearForm)> {
    let module = build_split(m)?;
    let conv = SplitBasisConvention::new(m);
    let f = BilinearForm::new(conv.f_gram());
    let e = module
        .grading_matrix()
        .ok_or(Error::MissingGrading)?
        .clone();
    let f_e = f.compose(&e);
    Ok((f, f_e))
}

/// The distinguished admissible form carried by the module.
pub fn canonical_form(m: &CliffordModule) -> BilinearForm {
    BilinearForm::new(m.canonical.clone())
}

/// Checks `ρ(e_i)ᵀ G ρ(e_i) = G` for each generator.
pub fn is_pin_invariant(m: &CliffordModule, h: &BilinearForm) -> bool {
    m.gammas
        .iter()
        .all(|r| &(&r.transpose() * &h.gram) * r == h.gram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build;

    fn inv(s: &str) -> FundamentalInvariants {
        FundamentalInvariants::parse(s).unwrap()
    }

    #[test]
    fn f_and_fe_for_m_up_to_4() {
        // rows for m = 1..4 in the order f, f_E
        let expected = [
            ("---", "++-"),
            ("--+", "+-+"),
            ("-+-", "+--"),
            ("-++", "+++"),
        ];
        for m in 1..=4 {
            let module = build_split(m).unwrap();
            let (f, fe) = split_forms(m).unwrap();
            assert_eq!(
                fundamental_invariants(&module, &f),
                inv(expected[m - 1].0),
                "f, m={m}"
            );
            assert_eq!(
                fundamental_invariants(&module, &fe),
                inv(expected[m - 1].1),
                "f_E, m={m}"
            );
        }
    }

    #[test]
    fn m1_form_matrix() {
        let (f, _) = split_forms(1).unwrap();
        assert_eq!(f.gram, RationalMatrix::from_i64(&[&[0, 1], &[-1, 0]]));
    }

    #[test]
    fn dimension_of_invariant_forms() {
        assert_eq!(invariant_forms(&build(1, 1).unwrap()).len(), 2);
        assert_eq!(invariant_forms(&build(1, 0).unwrap()).len(), 4);
        assert_eq!(invariant_forms(&build(0, 1).unwrap()).len(), 1);
    }

    #[test]
    fn every_invariant_form_is_annihilated() {
        let m = build(2, 1).unwrap();
        for beta in invariant_forms(&m) {
            for p in so_generators(&m) {
                let lhs = &(&p.transpose() * &beta.gram) + &(&beta.gram * &p);
                assert!(lhs.is_zero());
            }
        }
    }

    #[test]
    fn canonical_in_definite_signature() {
        for k in 1..=8 {
            let pos = build(k, 0).unwrap();
            let h = canonical_form(&pos);
            let fi = fundamental_invariants(&pos, &h);
            assert_eq!(fi.tau, Some(Sign::Minus), "({k},0)");
            assert!(is_pin_invariant(&pos, &h));
            let neg = build(0, k).unwrap();
            let h = canonical_form(&neg);
            let fi = fundamental_invariants(&neg, &h);
            assert_eq!(
                (fi.tau, fi.sigma),
                (Some(Sign::Plus), Some(Sign::Plus)),
                "(0,{k})"
            );
            assert!(is_pin_invariant(&neg, &h));
        }
    }

    #[test]
    fn split_endomorphism_e() {
        for m in 1..=4 {
            let module = build_split(m).unwrap();
            let e = module.grading_matrix().unwrap().clone();
            let h = canonical_form(&module);
            let fi = endo_invariants(&module, &h, &e);
            let sigma = if m % 2 == 0 { Sign::Plus } else { Sign::Minus };
            assert_eq!(fi.tau, Some(Sign::Minus));
            assert_eq!(fi.sigma, Some(sigma));
            assert_eq!(fi.iota, Some(Sign::Plus));
        }
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(inv("+-+").to_string(), "+-+");
        assert_eq!(inv("-+").to_string(), "-+");
        assert!(FundamentalInvariants::parse("+").is_none());
    }
}
