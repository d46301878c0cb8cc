//! Null spaces, ranks and inertia.
//!
//! Two solvers live here. `kernel_basis` is the dense fraction-free
//! elimination used for small matrices. `LinearSystem` takes sparse rows and
//! is what the Clifford code feeds: every gamma matrix is a signed
//! permutation, so most constraint rows carry only two terms and collapse to
//! a union-find over proportional unknowns.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::RationalMatrix;
use crate::error::{Error, Result};
use crate::rational::{common_denominator, Rational};

/// Scales `v` to integer entries with gcd 1 and a positive first nonzero entry.
pub fn normalize_vector(v: &mut [Rational]) {
    let den = common_denominator(v.iter());
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return;
    }
    let first_negative = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    let g = if first_negative { -g } else { g };
    for (slot, x) in v.iter_mut().zip(ints) {
        *slot = Rational::from(x / &g);
    }
}

/// Basis of the right null space of `m`, as column vectors.
///
/// Rows are cleared of denominators, then reduced by Bareiss elimination
/// taking the topmost nonzero entry of the leftmost usable column as pivot.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<RationalMatrix> {
    let cols = m.cols();
    let mut a: Vec<Vec<Rational>> = m
        .to_rows()
        .into_iter()
        .map(|row| {
            let den = Rational::from(common_denominator(row.iter()));
            row.into_iter().map(|x| x * &den).collect()
        })
        .collect();
    let nrows = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = Rational::one();
    let mut r = 0;
    for col in 0..cols {
        if r == nrows {
            break;
        }
        let Some(i) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, i);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let p = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let f = row[col].clone();
            for j in col + 1..cols {
                let v = &(&p * &row[j]) - &(&f * &pivot_row[j]);
                row[j] = if prev.is_one() { v } else { &v / &prev };
            }
            row[col] = Rational::zero();
        }
        prev = p;
        pivots.push(col);
        r += 1;
    }
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![Rational::zero(); cols];
        x[free] = Rational::one();
        for (row_idx, &pc) in pivots.iter().enumerate().rev() {
            let row = &a[row_idx];
            let mut acc = Rational::zero();
            for j in pc + 1..cols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    acc += &(&row[j] * &x[j]);
                }
            }
            x[pc] = -(&acc / &row[pc]);
        }
        normalize_vector(&mut x);
        basis.push(RationalMatrix::column(x));
    }
    basis
}

/// Incrementally built row echelon form over sparse rows.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    ncols: usize,
    pivot_rows: BTreeMap<usize, Vec<(usize, Rational)>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            pivot_rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// Reduces `row` against the stored pivots; stores it if independent.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, row: Vec<(usize, Rational)>) -> bool {
        let mut work: BTreeMap<usize, Rational> =
            row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let mut cursor = 0;
        loop {
            let Some((&col, _)) = work.range(cursor..).next() else {
                return false;
            };
            match self.pivot_rows.get(&col) {
                Some(pivot) => {
                    let coef = work.remove(&col).expect("present");
                    for (c, v) in pivot.iter().skip(1) {
                        let delta = &coef * v;
                        let slot = work.entry(*c).or_insert_with(Rational::zero);
                        *slot -= &delta;
                        if slot.is_zero() {
                            work.remove(c);
                        }
                    }
                    cursor = col + 1;
                }
                None => {
                    let lead = work[&col].recip();
                    let stored: Vec<(usize, Rational)> =
                        work.into_iter().map(|(c, v)| (c, &v * &lead)).collect();
                    self.pivot_rows.insert(col, stored);
                    return true;
                }
            }
        }
    }

    /// Null space of the stored rows, one normalized dense vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !self.pivot_rows.contains_key(c)) {
            let mut x = vec![Rational::zero(); self.ncols];
            x[free] = Rational::one();
            for (&pc, row) in self.pivot_rows.range(..free).rev() {
                let mut acc = Rational::zero();
                for (c, v) in row.iter().skip(1) {
                    if !x[*c].is_zero() {
                        acc += &(v * &x[*c]);
                    }
                }
                x[pc] = -acc;
            }
            normalize_vector(&mut x);
            out.push(x);
        }
        out
    }
}

/// Union-find over unknowns linked by `x_u = r·x_v`.
struct Links {
    parent: Vec<usize>,
    factor: Vec<Rational>,
    size: Vec<usize>,
    zero: Vec<bool>,
}

impl Links {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            factor: vec![Rational::one(); n],
            size: vec![1; n],
            zero: vec![false; n],
        }
    }

    /// Returns `(root, f)` with `x_u = f·x_root`.
    fn find(&mut self, u: usize) -> (usize, Rational) {
        let mut path = Vec::new();
        let mut cur = u;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        let mut acc = Rational::one();
        for &node in path.iter().rev() {
            acc = &self.factor[node] * &acc;
            self.factor[node] = acc.clone();
            self.parent[node] = root;
        }
        let f = if u == root {
            Rational::one()
        } else {
            self.factor[u].clone()
        };
        (root, f)
    }

    fn set_zero(&mut self, u: usize) {
        let (r, _) = self.find(u);
        self.zero[r] = true;
    }

    /// Imposes `a·x_u + b·x_v = 0`.
    fn link(&mut self, u: usize, a: &Rational, v: usize, b: &Rational) {
        let (ru, fu) = self.find(u);
        let (rv, fv) = self.find(v);
        let ratio = -(&(b * &fv) / &(a * &fu));
        if ru == rv {
            if !ratio.is_one() {
                self.zero[ru] = true;
            }
            return;
        }
        let z = self.zero[ru] || self.zero[rv];
        if self.size[ru] <= self.size[rv] {
            self.parent[ru] = rv;
            self.factor[ru] = ratio;
            self.size[rv] += self.size[ru];
            self.zero[rv] = z;
        } else {
            self.parent[rv] = ru;
            self.factor[rv] = ratio.recip();
            self.size[ru] += self.size[rv];
            self.zero[ru] = z;
        }
    }

    fn kernel(mut self) -> Vec<Vec<Rational>> {
        let n = self.parent.len();
        let mut comps: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        let mut first_of_root: Vec<Option<usize>> = vec![None; n];
        for u in 0..n {
            let (r, f) = self.find(u);
            if self.zero[r] {
                continue;
            }
            let key = *first_of_root[r].get_or_insert(u);
            comps.entry(key).or_default().push((u, f));
        }
        comps
            .into_values()
            .map(|members| {
                let mut x = vec![Rational::zero(); n];
                for (u, f) in members {
                    x[u] = f;
                }
                normalize_vector(&mut x);
                x
            })
            .collect()
    }
}

/// Homogeneous linear system with sparse rows.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    ncols: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl LinearSystem {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Adds the equation `Σ c·x_col = 0`; repeated columns are merged.
    pub fn add_row(&mut self, terms: impl IntoIterator<Item = (usize, Rational)>) {
        let mut merged: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in terms {
            debug_assert!(c < self.ncols);
            if v.is_zero() {
                continue;
            }
            let slot = merged.entry(c).or_insert_with(Rational::zero);
            *slot += &v;
        }
        let row: Vec<(usize, Rational)> =
            merged.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    /// Null space basis, each vector normalized as in `normalize_vector`.
    ///
    /// Systems whose rows all have at most two terms are solved by
    /// union-find; anything else goes through sparse echelon reduction.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        if self.rows.iter().all(|r| r.len() <= 2) {
            let mut links = Links::new(self.ncols);
            for row in &self.rows {
                match row.as_slice() {
                    [(u, _)] => links.set_zero(*u),
                    [(u, a), (v, b)] => links.link(*u, a, *v, b),
                    _ => unreachable!(),
                }
            }
            links.kernel()
        } else {
            self.kernel_by_elimination()
        }
    }

    /// Null space through sparse echelon reduction regardless of row shape.
    pub fn kernel_by_elimination(&self) -> Vec<Vec<Rational>> {
        let mut ech = Echelon::new(self.ncols);
        for row in &self.rows {
            ech.insert(row.clone());
        }
        ech.kernel()
    }
}

/// Rank of a family of dense vectors of equal length.
pub fn rank_of_vectors(vectors: &[Vec<Rational>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let mut ech = Echelon::new(first.len());
    for v in vectors {
        ech.insert(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        );
    }
    ech.rank()
}

pub fn rank(m: &RationalMatrix) -> usize {
    rank_of_vectors(&m.to_rows())
}

/// Basis of `{X : X·G = G·X for all G}` in `d×d` matrices.
pub fn commutant_basis(gens: &[RationalMatrix], d: usize) -> Result<Vec<RationalMatrix>> {
    for g in gens {
        if g.rows() != d || g.cols() != d {
            return Err(Error::DimensionMismatch(format!(
                "generator is {}x{}, expected {d}x{d}",
                g.rows(),
                g.cols()
            )));
        }
    }
    let mut sys = LinearSystem::new(d * d);
    for g in gens {
        push_commutation_rows(&mut sys, g, d, false);
    }
    sys.kernel()
        .into_iter()
        .map(|v| RationalMatrix::new(d, d, v))
        .collect()
}

/// Rows of `X·G − G·X = 0` (or `X·G + G·X = 0` when `anti`), X unknown and row-major.
pub(crate) fn push_commutation_rows(
    sys: &mut LinearSystem,
    g: &RationalMatrix,
    d: usize,
    anti: bool,
) {
    let rows = g.row_support();
    let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); d];
    for (i, row) in rows.iter().enumerate() {
        for &(j, v) in row {
            cols[j].push((i, v.clone()));
        }
    }
    for a in 0..d {
        for b in 0..d {
            let mut terms: Vec<(usize, Rational)> = Vec::new();
            // (XG)[a,b] = Σ_c X[a,c] G[c,b]
            for (c, v) in &cols[b] {
                terms.push((a * d + c, v.clone()));
            }
            // (GX)[a,b] = Σ_c G[a,c] X[c,b]
            for &(c, v) in &rows[a] {
                let v = if anti { v.clone() } else { -v };
                terms.push((c * d + b, v));
            }
            sys.add_row(terms);
        }
    }
}

/// Signature `(positive, negative, zero)` of a symmetric matrix.
pub fn inertia(m: &RationalMatrix) -> Result<(usize, usize, usize)> {
    if !m.is_square() || !m.is_symmetric() {
        return Err(Error::DimensionMismatch(
            "inertia needs a symmetric matrix".into(),
        ));
    }
    let n = m.rows();
    let off_diagonal_zero = (0..n).all(|i| (0..n).all(|j| i == j || m.get(i, j).is_zero()));
    if off_diagonal_zero {
        let mut counts = (0, 0, 0);
        for i in 0..n {
            match m.get(i, i).signum() {
                1 => counts.0 += 1,
                -1 => counts.1 += 1,
                _ => counts.2 += 1,
            }
        }
        return Ok(counts);
    }
    let mut a = m.to_rows();
    let mut active: Vec<usize> = (0..n).collect();
    let mut counts = (0, 0, 0);
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // No usable diagonal: a congruence i += j creates one.
                let found = active.iter().find_map(|&i| {
                    active
                        .iter()
                        .find(|&&j| j != i && !a[i][j].is_zero())
                        .map(|&j| (i, j))
                });
                match found {
                    Some((i, j)) => {
                        for k in 0..n {
                            let v = a[j][k].clone();
                            a[i][k] += &v;
                        }
                        for k in 0..n {
                            let v = a[k][j].clone();
                            a[k][i] += &v;
                        }
                        i
                    }
                    None => {
                        counts.2 += active.len();
                        break;
                    }
                }
            }
        };
        let d = a[p][p].clone();
        match d.signum() {
            1 => counts.0 += 1,
            _ => counts.1 += 1,
        }
        active.retain(|&i| i != p);
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for &j in &active {
                if a[p][j].is_zero() {
                    continue;
                }
                let delta = &f * &a[p][j];
                a[i][j] -= &delta;
            }
        }
    }
    Ok(counts)
}

/// Solves `Σ c_i · basis_i = target` when a unique solution exists.
pub fn solve_in_span(basis: &[RationalMatrix], target: &RationalMatrix) -> Option<Vec<Rational>> {
    let k = basis.len();
    let len = target.rows() * target.cols();
    // Columns: basis vectors then the target. A kernel vector with nonzero last entry solves it.
    let mut sys = LinearSystem::new(k + 1);
    for idx in 0..len {
        let mut terms: Vec<(usize, Rational)> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| (i, b.data()[idx].clone()))
            .collect();
        terms.push((k, -target.data()[idx].clone()));
        sys.add_row(terms);
    }
    let ker = sys.kernel_by_elimination();
    if ker
        .iter()
        .filter(|v| !v[..k].iter().all(Rational::is_zero) && v[k].is_zero())
        .count()
        > 0
    {
        return None;
    }
    let v = ker.into_iter().find(|v| !v[k].is_zero())?;
    let scale = v[k].recip();
    Some(v[..k].iter().map(|x| x * &scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn col(v: &[i64]) -> RationalMatrix {
        RationalMatrix::column(v.iter().map(|&x| Rational::from_int(x)).collect())
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RationalMatrix::identity(2)).is_empty());
        let k = kernel_basis(&RationalMatrix::from_i64(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, vec![col(&[1, -1])]);
        let k = kernel_basis(&RationalMatrix::from_i64(&[&[2, 4]]));
        assert_eq!(k, vec![col(&[2, -1])]);
    }

    #[test]
    fn commutant_examples() {
        assert_eq!(commutant_basis(&[], 2).unwrap().len(), 4);
        let d = RationalMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        assert_eq!(commutant_basis(&[d], 2).unwrap().len(), 2);
        let j = RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        let basis = commutant_basis(std::slice::from_ref(&j), 2).unwrap();
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert_eq!(&(b * &j), &(&j * b));
        }
        assert!(commutant_basis(&[RationalMatrix::identity(3)], 2).is_err());
    }

    #[test]
    fn inertia_of_hyperbolic_plane() {
        let h = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(inertia(&h).unwrap(), (1, 1, 0));
        let m = RationalMatrix::from_i64(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 0]]);
        assert_eq!(inertia(&m).unwrap(), (2, 0, 1));
    }

    #[test]
    fn span_solution() {
        let basis = vec![
            RationalMatrix::identity(2),
            RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]),
        ];
        let target = RationalMatrix::from_i64(&[&[3, -2], &[2, 3]]);
        let c = solve_in_span(&basis, &target).unwrap();
        assert_eq!(c, vec![Rational::from_int(3), Rational::from_int(2)]);
        assert!(solve_in_span(&basis, &RationalMatrix::from_i64(&[&[1, 0], &[0, 2]])).is_none());
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                RationalMatrix::new(r, c, v.into_iter().map(Rational::from_int).collect()).unwrap()
            })
        })
    }

    fn sparse_kernel(m: &RationalMatrix, elim: bool) -> Vec<Vec<Rational>> {
        let mut sys = LinearSystem::new(m.cols());
        for row in m.to_rows() {
            sys.add_row(row.into_iter().enumerate());
        }
        if elim {
            sys.kernel_by_elimination()
        } else {
            sys.kernel()
        }
    }

    proptest! {
        #[test]
        fn kernel_vectors_annihilate_and_rank_nullity(m in small_matrix()) {
            let ker = kernel_basis(&m);
            for v in &ker {
                prop_assert!((&m * v).is_zero());
                let first = v.data().iter().find(|x| !x.is_zero()).unwrap();
                prop_assert!(first.signum() > 0 && first.is_integer());
            }
            prop_assert_eq!(rank(&m) + ker.len(), m.cols());
            let flat: Vec<Vec<Rational>> = ker.iter().map(|v| v.flatten()).collect();
            prop_assert_eq!(rank_of_vectors(&flat), ker.len());
        }

        #[test]
        fn sparse_solvers_agree_with_dense(m in small_matrix()) {
            let dense: Vec<Vec<Rational>> = kernel_basis(&m).iter().map(|v| v.flatten()).collect();
            for elim in [false, true] {
                let sparse = sparse_kernel(&m, elim);
                prop_assert_eq!(sparse.len(), dense.len());
                let mut all = dense.clone();
                all.extend(sparse.iter().cloned());
                prop_assert_eq!(rank_of_vectors(&all), dense.len());
            }
        }

        #[test]
        fn two_term_systems_use_links_correctly(
            eqs in proptest::collection::vec((0usize..6, -2i64..=2, 0usize..6, -2i64..=2), 0..8)
        ) {
            let mut sys = LinearSystem::new(6);
            let mut dense = Vec::new();
            for (u, a, v, b) in eqs {
                let mut row = vec![Rational::zero(); 6];
                row[u] += &Rational::from_int(a);
                row[v] += &Rational::from_int(b);
                sys.add_row(row.iter().cloned().enumerate());
                dense.push(row);
            }
            let links = sys.kernel();
            for x in &links {
                for row in &dense {
                    let s: Rational = row.iter().zip(x).map(|(a, b)| a * b).sum();
                    prop_assert!(s.is_zero());
                }
            }
            let m = if dense.is_empty() {
                RationalMatrix::zeros(1, 6)
            } else {
                RationalMatrix::from_rows(dense).unwrap()
            };
            prop_assert_eq!(links.len(), kernel_basis(&m).len());
        }

        #[test]
        fn kronecker_mixed_product(a in small_matrix(), b in small_matrix()) {
            let c = a.transpose();
            let d = b.transpose();
            let lhs = &super::super::kronecker(&a, &b) * &super::super::kronecker(&c, &d);
            let rhs = super::super::kronecker(&(&a * &c), &(&b * &d));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn commutant_is_an_algebra(v in proptest::collection::vec(-1i64..=1, 9)) {
            let g = RationalMatrix::new(3, 3, v.into_iter().map(Rational::from_int).collect()).unwrap();
            let basis = commutant_basis(std::slice::from_ref(&g), 3).unwrap();
            prop_assert!(solve_in_span(&basis, &RationalMatrix::identity(3)).is_some());
            for x in &basis {
                for y in &basis {
                    let xy = x * y;
                    prop_assert!(solve_in_span(&basis, &xy).is_some());
                }
            }
        }
    }
}
