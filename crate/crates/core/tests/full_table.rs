use cliffspin_core::classification::{check_symmetries, emit_table, TableKind};
use cliffspin_core::reference::{at_s, B_OF_S};

#[test]
fn every_real_class_is_realised_by_n_10() {
    let doc = emit_table(10, TableKind::Quadruples).unwrap();
    assert_eq!(doc.cells.len(), 32);
    for cell in &doc.cells {
        assert!(!cell.is_absent(), "({}, {:?}) absent", cell.n, cell.s);
        let [lp, lm] = cell.pair().unwrap();
        let b = at_s(&B_OF_S, cell.s.unwrap());
        assert_eq!(lp + lm, b, "total at {:?}", cell.pair());
        assert_eq!(cell.b, Some(b));
    }
    let report = check_symmetries(&doc).unwrap();
    assert!(report.records.iter().all(|r| !r.skipped));
    assert!(report.pass(), "{:?}", report.failures().collect::<Vec<_>>());
}

#[test]
fn bound_9_leaves_only_n_equiv_2_s_equiv_4() {
    let doc = emit_table(9, TableKind::Pairs).unwrap();
    let absent: Vec<_> = doc
        .cells
        .iter()
        .filter(|c| c.is_absent())
        .map(|c| (c.n, c.s.unwrap()))
        .collect();
    assert_eq!(absent, vec![(2, 4)]);
}
