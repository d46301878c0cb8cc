//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use cliffspin_core::verify::{
    criterion_complex, criterion_extensions, criterion_invariant_tables, criterion_jacobi,
    criterion_oracle, criterion_pair_table, criterion_periodicity, criterion_refined_table,
    criterion_structure, VerificationReport, VerifyConfig,
};
use cliffspin_core::Result;

type Criterion = (&'static str, Box<dyn Fn() -> Result<VerificationReport>>);

fn main() -> ExitCode {
    let cfg = VerifyConfig::default();
    let criteria: Vec<Criterion> = vec![
        (
            "pair table, n <= 8",
            Box::new(move || criterion_pair_table(cfg.table_max_n)),
        ),
        (
            "refined table, n <= 8",
            Box::new(move || criterion_refined_table(cfg.table_max_n)),
        ),
        (
            "b(s), Schur algebras, Clifford types, n <= 8",
            Box::new(move || criterion_structure(cfg.structure_max_n)),
        ),
        (
            "invariants of f, f_E and definite admissible bases",
            Box::new(criterion_invariant_tables),
        ),
        (
            "oracle: dim J = dim B = dim M, spans, decompositions, n <= 6",
            Box::new(move || criterion_oracle(cfg.oracle_max_n)),
        ),
        (
            "graded Jacobi for admissible and random brackets, n <= 6",
            Box::new(move || criterion_jacobi(cfg.jacobi_max_n, cfg.random_combinations, cfg.seed)),
        ),
        (
            "(8,0), (0,8), (4,4) periodicity and table symmetries",
            Box::new(move || {
                criterion_periodicity(
                    cfg.periodicity_max_n,
                    cfg.periodicity_max_base_44,
                    cfg.symmetry_max_n,
                )
            }),
        ),
        (
            "complex counts m = 1..8 and odd-m uniqueness",
            Box::new(move || criterion_complex(cfg.complex_max_m)),
        ),
        (
            "g^(+2) and g^(-2) over (0,1) and (1,1)",
            Box::new(criterion_extensions),
        ),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let secs = || start.elapsed().as_secs_f64();
        match run() {
            Ok(report) => {
                all &= report.pass;
                let status = if report.pass { "PASS" } else { "FAIL" };
                println!(
                    "criterion {}: {status} {name} [{}] ({:.1}s)",
                    i + 1,
                    report.summary(),
                    secs()
                );
                for f in report.failures() {
                    println!(
                        "    {}: {} expected {} got {}",
                        f.id, f.description, f.expected, f.actual
                    );
                }
            }
            Err(e) => {
                all = false;
                println!(
                    "criterion {}: FAIL {name} [error: {e}] ({:.1}s)",
                    i + 1,
                    secs()
                );
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
