//! The Schur algebra of a spinor module and identification of real semisimple
//! matrix algebras.
//!
//! A semisimple algebra `A ⊂ End(S)` is pinned down by three numbers: its
//! dimension, the dimension of its centre, and the signature of the trace form
//! `(x,y) ↦ tr(xy)`. On `𝕂(r)` the trace form has signature difference `r`
//! for `ℝ`, `0` for `ℂ` and `−2r` for `ℍ`; a two-dimensional centre `ℝ[z]`
//! is `ℝ⊕ℝ` or `ℂ` according to the sign of the discriminant of `z`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::so_generators;
use crate::clifford::CliffordModule;
use crate::error::{Error, Result};
use crate::linalg::{commutant_basis, inertia, solve_in_span, LinearSystem, RationalMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    R,
    C,
    H,
}

impl Field {
    fn real_dim(self) -> usize {
        match self {
            Field::R => 1,
            Field::C => 2,
            Field::H => 4,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::R => "R",
            Field::C => "C",
            Field::H => "H",
        })
    }
}

/// `copies` copies of the matrix algebra `field(size)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraType {
    pub field: Field,
    pub size: usize,
    pub copies: usize,
}

impl AlgebraType {
    /// Labels such as `R`, `H+H`, `C(2)`.
    pub fn label(&self) -> String {
        let one = if self.size == 1 {
            self.field.to_string()
        } else {
            format!("{}({})", self.field, self.size)
        };
        vec![one; self.copies].join("+")
    }

    /// The coarse type `r𝕂` ignoring matrix size: `R`, `2R`, `C`, `H`, `2H`.
    pub fn coarse(&self) -> String {
        if self.copies == 1 {
            self.field.to_string()
        } else {
            format!("{}{}", self.copies, self.field)
        }
    }

    pub fn dim(&self) -> usize {
        self.copies * self.field.real_dim() * self.size * self.size
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The numbers that determine a real semisimple algebra of the kind that
/// occurs here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraProfile {
    pub dim: usize,
    pub center_dim: usize,
    /// Sign of `b² + 4a` for `z² = a + bz`, `z` a non-scalar central element.
    pub discriminant: i32,
    pub trace_positive: usize,
    pub trace_negative: usize,
}

fn exact_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

pub fn classify_profile(p: &AlgebraProfile) -> Result<AlgebraType> {
    let fail = || Error::Identification(format!("{p:?}"));
    let diff = p.trace_positive as i64 - p.trace_negative as i64;
    if p.trace_positive + p.trace_negative != p.dim {
        return Err(fail());
    }
    let (field, copies) = match (p.center_dim, p.discriminant) {
        (1, _) if diff > 0 => (Field::R, 1),
        (1, _) if diff < 0 => (Field::H, 1),
        (2, d) if d < 0 && diff == 0 => (Field::C, 1),
        (2, d) if d > 0 && diff > 0 => (Field::R, 2),
        (2, d) if d > 0 && diff < 0 => (Field::H, 2),
        _ => return Err(fail()),
    };
    let block = p.dim / (copies * field.real_dim());
    let size = exact_sqrt(block).ok_or_else(fail)?;
    let t = AlgebraType {
        field,
        size,
        copies,
    };
    let expected_diff = match field {
        Field::R => (copies * size) as i64,
        Field::C => 0,
        Field::H => -2 * (copies * size) as i64,
    };
    if t.dim() != p.dim || diff != expected_diff {
        return Err(fail());
    }
    Ok(t)
}

/// Identifies the algebra with the given linearly independent basis.
pub fn identify_algebra(basis: &[RationalMatrix]) -> Result<AlgebraType> {
    identify_algebra_with(basis, basis)
}

/// As [`identify_algebra`], with the centre computed as the commutant of
/// `generators` inside the span of `basis`.
pub fn identify_algebra_with(
    basis: &[RationalMatrix],
    generators: &[RationalMatrix],
) -> Result<AlgebraType> {
    classify_profile(&profile(basis, generators)?)
}

fn profile(basis: &[RationalMatrix], generators: &[RationalMatrix]) -> Result<AlgebraProfile> {
    let k = basis.len();
    if k == 0 {
        return Err(Error::Identification("empty basis".into()));
    }
    let d = basis[0].rows();
    let id = RationalMatrix::identity(d);

    let mut sys = LinearSystem::new(k);
    for g in generators {
        let mut rows: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
        for (j, b) in basis.iter().enumerate() {
            let c = b.commutator(g);
            for (idx, v) in c.data().iter().enumerate() {
                if !v.is_zero() {
                    rows.entry(idx).or_default().push((j, v.clone()));
                }
            }
        }
        let mut keys: Vec<usize> = rows.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            sys.add_row(rows.remove(&key).unwrap_or_default());
        }
    }
    let center: Vec<RationalMatrix> = sys
        .kernel_by_elimination()
        .into_iter()
        .map(|c| combine(basis, &c, d))
        .collect();

    let mut discriminant = 0;
    if center.len() == 2 {
        let z = center
            .iter()
            .find(|z| solve_in_span(std::slice::from_ref(&id), z).is_none())
            .ok_or_else(|| Error::Identification("centre is scalar".into()))?;
        let z2 = z * z;
        let ab = solve_in_span(&[id.clone(), z.clone()], &z2)
            .ok_or_else(|| Error::Identification("centre is not closed".into()))?;
        let disc = &(&ab[1] * &ab[1]) + &(&Rational::from_int(4) * &ab[0]);
        discriminant = disc.signum();
    }

    let mut trace = RationalMatrix::zeros(k, k);
    for a in 0..k {
        for b in a..k {
            let t = basis[a].trace_of_product(&basis[b]);
            trace.set(b, a, t.clone());
            trace.set(a, b, t);
        }
    }
    let (pos, neg, _) = inertia(&trace)?;
    Ok(AlgebraProfile {
        dim: k,
        center_dim: center.len(),
        discriminant,
        trace_positive: pos,
        trace_negative: neg,
    })
}

fn combine(basis: &[RationalMatrix], coeffs: &[Rational], d: usize) -> RationalMatrix {
    let mut out = RationalMatrix::zeros(d, d);
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            out = &out + &b.scale(c);
        }
    }
    out
}

/// Commutant of the even Clifford algebra together with its type.
#[derive(Debug, Clone)]
pub struct SchurAlgebra {
    pub basis: Vec<RationalMatrix>,
    pub iso: AlgebraType,
}

impl SchurAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn schur_algebra(m: &CliffordModule) -> Result<SchurAlgebra> {
    let basis = commutant_basis(&so_generators(m), m.dim())?;
    let iso = identify_algebra(&basis)?;
    Ok(SchurAlgebra { basis, iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build;

    fn label(p: usize, q: usize) -> String {
        schur_algebra(&build(p, q).unwrap()).unwrap().iso.label()
    }

    #[test]
    fn small_schur_algebras() {
        assert_eq!(label(1, 0), "R(2)");
        assert_eq!(label(1, 1), "R+R");
        assert_eq!(label(0, 3), "H");
        assert_eq!(label(2, 0), "C(2)");
        assert_eq!(label(0, 1), "R");
    }

    #[test]
    fn standard_algebras() {
        let id = RationalMatrix::identity(2);
        let j = RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert_eq!(identify_algebra(&[id.clone(), j]).unwrap().label(), "C");
        let e11 = RationalMatrix::from_i64(&[&[1, 0], &[0, 0]]);
        let e22 = RationalMatrix::from_i64(&[&[0, 0], &[0, 1]]);
        assert_eq!(identify_algebra(&[e11, e22]).unwrap().label(), "R+R");
        assert_eq!(identify_algebra(&[id]).unwrap().label(), "R");
    }

    #[test]
    fn labels() {
        let t = AlgebraType {
            field: Field::H,
            size: 1,
            copies: 2,
        };
        assert_eq!(t.label(), "H+H");
        assert_eq!(t.coarse(), "2H");
        assert_eq!(t.dim(), 8);
    }
}
