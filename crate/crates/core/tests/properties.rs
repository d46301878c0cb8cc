use cliffspin_core::classification::{emit_table, TableDocument, TableKind};
use cliffspin_core::clifford::build;
use cliffspin_core::linalg::{commutant_basis, kernel_basis, kronecker, rank};
use cliffspin_core::{Rational, RationalMatrix};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec((-4i64..=4, 1i64..=3), rows * cols).prop_map(move |v| {
        let data = v.into_iter().map(|(a, b)| Rational::new(a, b)).collect();
        RationalMatrix::new(rows, cols, data).unwrap()
    })
}

fn shaped() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| matrix(r, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
        let x = Rational::new(a, b);
        let y = Rational::new(c, d);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x * &y) - &(&y * &x), Rational::zero());
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x.clone());
        }
        prop_assert_eq!(&x - &x, Rational::zero());
    }

    #[test]
    fn kernel_is_annihilated_and_complements_rank(m in shaped()) {
        let ker = kernel_basis(&m);
        for k in &ker {
            prop_assert!((&m * k).is_zero());
        }
        prop_assert_eq!(ker.len() + rank(&m), m.cols());
    }

    #[test]
    fn kronecker_mixed_product(a in matrix(2, 3), b in matrix(2, 2), c in matrix(3, 2), d in matrix(2, 1)) {
        let lhs = &kronecker(&a, &b) * &kronecker(&c, &d);
        let rhs = kronecker(&(&a * &c), &(&b * &d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_reverses_products(a in matrix(3, 4), b in matrix(4, 2)) {
        prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn clifford_relations_hold(p in 0usize..=4, q in 0usize..=4) {
        prop_assume!(p + q >= 1);
        let m = build(p, q).unwrap();
        prop_assert!(m.validate().is_ok());
        for i in 0..m.n() {
            for j in 0..m.n() {
                let ac = m.gammas[i].anticommutator(&m.gammas[j]);
                let want = if i == j {
                    RationalMatrix::identity(m.dim()).scale(&Rational::from_int(-2 * m.sig.eta(i)))
                } else {
                    RationalMatrix::zeros(m.dim(), m.dim())
                };
                prop_assert_eq!(ac, want);
            }
        }
    }

    #[test]
    fn commutant_is_closed(p in 0usize..=3, q in 0usize..=3, pick in any::<(prop::sample::Index, prop::sample::Index)>()) {
        prop_assume!(p + q >= 1);
        let m = build(p, q).unwrap();
        let comm = commutant_basis(&m.gammas, m.dim()).unwrap();
        prop_assert!(!comm.is_empty());
        let x = pick.0.get(&comm);
        let y = pick.1.get(&comm);
        let xy = x * y;
        for g in &m.gammas {
            prop_assert!(xy.commutator(g).is_zero());
        }
    }

    #[test]
    fn table_jsonl_round_trips(max_n in 1usize..=4, kind in prop::sample::select(vec![TableKind::Pairs, TableKind::Quadruples, TableKind::Complex])) {
        let doc = emit_table(max_n, kind).unwrap();
        let back = TableDocument::from_jsonl(&doc.to_jsonl()).unwrap();
        prop_assert_eq!(back, doc);
    }
}
