//! Verification suites comparing computed data with the reference tables
//! and with the brute-force oracle.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classification::{
    algebra_type, bracket_basis, build_bracket, check_periodicity, check_symmetries,
    classify_complex, count_embeddings, emit_table, extend_n, CheckRecord, ExtendedPoincareAlgebra,
    ExtensionKind, TableDocument, TableKind,
};
use crate::clifford::{build, build_definite, build_split, Signature};
use crate::error::{Error, Result};
use crate::invariants::{
    admissible_basis, fundamental_invariants, invariant_forms, j_rho, schur_algebra, split_forms,
    FundamentalInvariants, Sign,
};
use crate::oracle;
use crate::rational::Rational;
use crate::reference::{self, ImageClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Paper,
    Oracle,
    Periodicity,
    Jacobi,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Suite::Paper),
            "oracle" => Ok(Suite::Oracle),
            "periodicity" => Ok(Suite::Periodicity),
            "jacobi" => Ok(Suite::Jacobi),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Paper => "paper",
            Suite::Oracle => "oracle",
            Suite::Periodicity => "periodicity",
            Suite::Jacobi => "jacobi",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, records: Vec<CheckRecord>) -> Self {
        let pass = records.iter().all(|r| r.pass);
        Self {
            suite: suite.into(),
            records,
            pass,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn skipped(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.skipped)
    }

    pub fn merge(suite: impl Into<String>, parts: Vec<VerificationReport>) -> Self {
        Self::new(suite, parts.into_iter().flat_map(|r| r.records).collect())
    }

    /// One line: suite, counts and the first failure if any.
    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        let skipped = self.skipped().count();
        let mut s = format!(
            "{}: {} checks, {} failed, {} skipped",
            self.suite,
            self.records.len(),
            failed,
            skipped
        );
        if let Some(f) = self.failures().next() {
            s.push_str(&format!(
                "; first failure {}: expected {}, got {}",
                f.id, f.expected, f.actual
            ));
        }
        s
    }
}

/// Bounds used by the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub table_max_n: usize,
    pub structure_max_n: usize,
    pub oracle_max_n: usize,
    pub jacobi_max_n: usize,
    pub random_combinations: usize,
    pub seed: u64,
    pub periodicity_max_n: usize,
    pub periodicity_max_base_44: usize,
    pub symmetry_max_n: usize,
    pub complex_max_m: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            table_max_n: 8,
            structure_max_n: 8,
            oracle_max_n: 6,
            jacobi_max_n: 6,
            random_combinations: 2,
            seed: 0x5eed,
            periodicity_max_n: 9,
            periodicity_max_base_44: 4,
            symmetry_max_n: 9,
            complex_max_m: 8,
        }
    }
}

impl VerifyConfig {
    /// Overrides the main bound of `suite`.
    pub fn with_max_n(mut self, suite: Suite, max_n: usize) -> Self {
        match suite {
            Suite::Paper => {
                self.table_max_n = max_n;
                self.structure_max_n = max_n;
            }
            Suite::Oracle => self.oracle_max_n = max_n,
            Suite::Jacobi => self.jacobi_max_n = max_n,
            Suite::Periodicity => {
                self.periodicity_max_n = max_n;
                self.symmetry_max_n = max_n;
            }
            Suite::All => {
                self.table_max_n = max_n;
                self.structure_max_n = max_n;
                self.oracle_max_n = max_n.min(self.oracle_max_n);
                self.jacobi_max_n = max_n.min(self.jacobi_max_n);
            }
        }
        self
    }
}

fn signatures(max_n: usize) -> Vec<Signature> {
    (1..=max_n)
        .flat_map(|n| (0..=n).map(move |p| Signature::new(p, n - p)))
        .collect()
}

fn fmt_counts(c: &[usize]) -> String {
    c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn class_label(sigma: Option<Sign>, iota: Option<Sign>) -> String {
    let c = |s: Option<Sign>| s.map_or('?', Sign::char);
    match iota {
        Some(i) => format!("σ{}ι{}", c(sigma), i.char()),
        None => format!("σ{}", c(sigma)),
    }
}

fn image_label(class: ImageClass) -> String {
    let (s, i) = class.invariants();
    class_label(Some(s), i)
}

/// Pair table at `max_n`; classes with no representative are skipped.
pub fn criterion_pair_table(max_n: usize) -> Result<VerificationReport> {
    let doc = emit_table(max_n, TableKind::Pairs)?;
    Ok(VerificationReport::new(
        "pair-table",
        compare_real_table(
            &doc,
            reference::PAIR_TABLE
                .iter()
                .map(|&(s, n, a, b)| (s, n, vec![a, b])),
        ),
    ))
}

/// Refined table at `max_n`: quadruples where `S` is reducible, pairs
/// elsewhere.
pub fn criterion_refined_table(max_n: usize) -> Result<VerificationReport> {
    let doc = emit_table(max_n, TableKind::Quadruples)?;
    Ok(VerificationReport::new(
        "refined-table",
        compare_real_table(
            &doc,
            reference::REFINED_TABLE
                .iter()
                .map(|&(s, n, c)| (s, n, c.to_vec())),
        ),
    ))
}

fn compare_real_table(
    doc: &TableDocument,
    expected: impl Iterator<Item = (i64, i64, Vec<usize>)>,
) -> Vec<CheckRecord> {
    expected
        .map(|(s, n, want)| {
            let id = format!("({n},{s})");
            let cell = doc.cell(n, s);
            match cell {
                Some(c) if !c.is_absent() => CheckRecord::new(
                    id,
                    format!(
                        "(n,s) = ({n},{s}) via ({},{})",
                        c.p.unwrap_or(0),
                        c.q.unwrap_or(0)
                    ),
                    fmt_counts(&want),
                    c.counts_label(),
                ),
                _ => CheckRecord::skipped(
                    id,
                    format!("(n,s) = ({n},{s})"),
                    fmt_counts(&want),
                    format!("no representative with n ≤ {}", doc.max_n),
                ),
            }
        })
        .collect()
}

/// `dim ℬ = b(s)`, Schur algebra `𝒞(s)` and `(t⁰(s), t(s))` for every
/// signature with `n ≤ max_n`.
pub fn criterion_structure(max_n: usize) -> Result<VerificationReport> {
    let records: Vec<Vec<CheckRecord>> = signatures(max_n)
        .into_par_iter()
        .map(|sig| -> Result<Vec<CheckRecord>> {
            let m = build(sig.p, sig.q)?;
            let s = sig.s();
            let b = invariant_forms(&m).len();
            let schur = schur_algebra(&m)?;
            let t = algebra_type(&m)?.coarse();
            let (t0, t1) = reference::at_s(&reference::TYPE_OF_S, s);
            Ok(vec![
                CheckRecord::new(
                    format!("b{sig}"),
                    format!("dim of invariant forms on {sig}"),
                    reference::at_s(&reference::B_OF_S, s),
                    b,
                ),
                CheckRecord::new(
                    format!("schur{sig}"),
                    format!("Schur algebra of {sig}"),
                    reference::at_s(&reference::SCHUR_OF_S, s),
                    schur.iso.label(),
                ),
                CheckRecord::new(
                    format!("type{sig}"),
                    format!("types of even and full Clifford algebra of {sig}"),
                    format!("{t0},{t1}"),
                    format!("{},{}", t.0, t.1),
                ),
            ])
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(
        "structure",
        records.into_iter().flatten().collect(),
    ))
}

fn inv_string(i: FundamentalInvariants) -> String {
    i.to_string()
}

/// Invariants of `f`, `f_E` and of every admissible element of the definite
/// models, together with the classes of their equivariant maps.
pub fn criterion_invariant_tables() -> Result<VerificationReport> {
    let mut records = Vec::new();
    for m in 1..=4 {
        let module = build_split(m)?;
        let (f, fe) = split_forms(m)?;
        let (want_f, want_fe) = reference::SPLIT_FORMS[m - 1];
        let (img_f, img_fe) = reference::SPLIT_IMAGES[m - 1];
        for (name, form, want, img) in [("f", &f, want_f, img_f), ("f_E", &fe, want_fe, img_fe)] {
            records.push(CheckRecord::new(
                format!("split{m}:{name}"),
                format!("invariants of {name} on ({m},{m})"),
                want,
                inv_string(fundamental_invariants(&module, form)),
            ));
            let j = j_rho(&module, form);
            records.push(CheckRecord::new(
                format!("split{m}:j({name})"),
                format!("class of j({name}) on ({m},{m})"),
                image_label(img),
                class_label(j.sigma, j.iota),
            ));
        }
    }
    for table in reference::MODEL_TABLES {
        for k in model_representatives(table) {
            let module = build_definite(k, table.sign)?;
            let basis = admissible_basis(&module)?;
            let sig = module.sig;
            let names: Vec<String> = basis.entries.iter().map(|e| e.name.to_string()).collect();
            let want: Vec<String> = table.rows.iter().map(|r| r.name.to_string()).collect();
            records.push(CheckRecord::new(
                format!("names{sig}"),
                format!("admissible elements of {sig}"),
                want.join(" "),
                names.join(" "),
            ));
            let (mut want_images, mut got_images) = (Vec::new(), Vec::new());
            for row in table.rows {
                let Some(e) = basis.entry(row.name) else {
                    continue;
                };
                if let Some(want) = row.endo {
                    records.push(CheckRecord::new(
                        format!("{sig}:{}", row.name),
                        format!("invariants of {} on {sig}", row.name),
                        want,
                        inv_string(e.endo_inv),
                    ));
                }
                if let Some(want) = row.form {
                    records.push(CheckRecord::new(
                        format!("{sig}:h_{}", row.name),
                        format!("invariants of h_{} on {sig}", row.name),
                        want,
                        inv_string(e.inv),
                    ));
                }
                if let Some(img) = row.image {
                    let j = j_rho(&module, &e.form);
                    let got = class_label(j.sigma, j.iota);
                    if table.images_by_row {
                        records.push(CheckRecord::new(
                            format!("{sig}:j_{}", row.name),
                            format!("class of j_{} on {sig}", row.name),
                            image_label(img),
                            got,
                        ));
                    } else {
                        want_images.push(image_label(img));
                        got_images.push(got);
                    }
                }
            }
            if !table.images_by_row {
                want_images.sort();
                got_images.sort();
                records.push(CheckRecord::new(
                    format!("{sig}:images"),
                    format!("multiset of embedding classes on {sig}"),
                    want_images.join(" "),
                    got_images.join(" "),
                ));
            }
        }
    }
    Ok(VerificationReport::new("invariant-tables", records))
}

/// Dimensions `k ≤ 10` of the definite models covered by a printed table.
pub fn model_representatives(table: &reference::ModelTable) -> Vec<usize> {
    (1..=10usize)
        .filter(|&k| {
            (k % 2 == 1) == table.odd && (k / 2) % 4 == table.m_mod4 && (table.odd || k >= 2)
        })
        .collect()
}

/// `dim 𝒥 = dim ℬ = dim ℳ`, equal spans and equal symmetry decompositions
/// for every signature with `n ≤ max_n`.
pub fn criterion_oracle(max_n: usize) -> Result<VerificationReport> {
    let records: Vec<Vec<CheckRecord>> = signatures(max_n)
        .into_par_iter()
        .map(|sig| -> Result<Vec<CheckRecord>> {
            let m = build(sig.p, sig.q)?;
            let cmp = oracle::compare(&m)?;
            let counts = count_embeddings(&m)?.counts();
            Ok(vec![
                CheckRecord::new(
                    format!("dims{sig}"),
                    format!("dim J, dim M against dim B on {sig}"),
                    format!("{0},{0}", cmp.dim_b),
                    format!("{},{}", cmp.dim_j, cmp.dim_m),
                ),
                CheckRecord::new(
                    format!("span{sig}"),
                    format!("j_ρ of invariant forms spans the oracle space on {sig}"),
                    true,
                    cmp.span_equal,
                ),
                CheckRecord::new(
                    format!("decompose{sig}"),
                    format!("symmetry decomposition against counts on {sig}"),
                    fmt_counts(&counts),
                    fmt_counts(&cmp.decomposition),
                ),
            ])
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(
        "oracle",
        records.into_iter().flatten().collect(),
    ))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=7);
    Rational::new(num, den)
}

fn jacobi_record(id: String, description: String, alg: &ExtendedPoincareAlgebra) -> CheckRecord {
    let r = alg.verify_jacobi();
    let actual = match r.first_failure {
        None => "0 failures".to_string(),
        Some(t) => format!("{} failures, first at {t:?}", r.failures),
    };
    CheckRecord::new(
        id,
        format!("{description} ({} triples)", r.triples),
        "0 failures",
        actual,
    )
}

/// Graded Jacobi for every admissible basis element with its own `ε`, and
/// for random combinations within each `ε`, on all signatures `n ≤ max_n`.
pub fn criterion_jacobi(
    max_n: usize,
    random_combinations: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let records: Vec<Vec<CheckRecord>> = signatures(max_n)
        .into_par_iter()
        .map(|sig| -> Result<Vec<CheckRecord>> {
            let m = build(sig.p, sig.q)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((sig.p as u64) << 32 | sig.q as u64));
            let mut out = Vec::new();
            for eps in [1, -1] {
                let names = bracket_basis(&m, eps)?;
                for (i, name) in names.iter().enumerate() {
                    let mut coeffs = vec![Rational::zero(); names.len()];
                    coeffs[i] = Rational::one();
                    let alg = build_bracket(&m, &coeffs, eps)?;
                    out.push(jacobi_record(
                        format!("jacobi{sig}:{name}"),
                        format!("bracket from j_{name} on {sig}, ε = {eps}"),
                        &alg,
                    ));
                }
                if names.is_empty() {
                    continue;
                }
                for r in 0..random_combinations {
                    let coeffs: Vec<Rational> =
                        names.iter().map(|_| random_rational(&mut rng)).collect();
                    let alg = build_bracket(&m, &coeffs, eps)?;
                    out.push(jacobi_record(
                        format!("jacobi{sig}:eps{eps}:random{r}"),
                        format!("random combination on {sig}, ε = {eps}"),
                        &alg,
                    ));
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(
        "jacobi",
        records.into_iter().flatten().collect(),
    ))
}

/// Periodicity shifts and the symmetries of the emitted tables.
pub fn criterion_periodicity(
    max_n: usize,
    max_base_44: usize,
    symmetry_max_n: usize,
) -> Result<VerificationReport> {
    let mut records = check_periodicity(max_n, max_base_44)?.records;
    for kind in [TableKind::Pairs, TableKind::Quadruples] {
        let doc = emit_table(symmetry_max_n, kind)?;
        let prefix = if kind == TableKind::Pairs {
            "pairs"
        } else {
            "quadruples"
        };
        records.extend(check_symmetries(&doc)?.records.into_iter().map(|mut r| {
            r.id = format!("{prefix}:{}", r.id);
            r
        }));
    }
    Ok(VerificationReport::new("periodicity", records))
}

/// Complex counts for `m = 1..=max_m` and uniqueness of the form for odd `m`.
pub fn criterion_complex(max_m: usize) -> Result<VerificationReport> {
    let cells = (1..=max_m)
        .into_par_iter()
        .map(classify_complex)
        .collect::<Result<Vec<_>>>()?;
    let mut records = Vec::new();
    for c in cells {
        let r = crate::classification::residue(c.m as i64);
        let want = reference::COMPLEX_TABLE
            .iter()
            .find(|(m, _)| *m == r)
            .map(|(_, v)| fmt_counts(v))
            .unwrap_or_default();
        records.push(CheckRecord::new(
            format!("complex{}", c.m),
            format!("complex counts for m = {} via {}", c.m, c.sig),
            want,
            fmt_counts(&c.counts()),
        ));
        if c.m % 2 == 1 {
            records.push(CheckRecord::new(
                format!("complex{}:dim", c.m),
                format!("complex invariant forms for m = {}", c.m),
                1,
                c.dim,
            ));
        }
    }
    Ok(VerificationReport::new("complex", records))
}

/// `g^{(+2)}` and `g^{(−2)}` over the super brackets of `(0,1)` and `(1,1)`.
pub fn criterion_extensions() -> Result<VerificationReport> {
    let mut records = Vec::new();
    for sig in [Signature::new(0, 1), Signature::new(1, 1)] {
        let m = build(sig.p, sig.q)?;
        let names = bracket_basis(&m, 1)?;
        let coeffs: Vec<Rational> = (0..names.len())
            .map(|i| Rational::from_int(i as i64 + 1))
            .collect();
        let base = build_bracket(&m, &coeffs, 1)?;
        for (kind, l, label) in [
            (ExtensionKind::Orthogonal, 2, "+2"),
            (ExtensionKind::Symplectic, 1, "-2"),
        ] {
            let ext = extend_n(&base, l, kind)?;
            let want_eps = if kind == ExtensionKind::Orthogonal {
                base.epsilon
            } else {
                -base.epsilon
            };
            records.push(CheckRecord::new(
                format!("ext{sig}{label}:epsilon"),
                format!("ε of g^({label}) over {sig}"),
                want_eps,
                ext.algebra.epsilon,
            ));
            records.push(CheckRecord::new(
                format!("ext{sig}{label}:generators"),
                format!("internal generators annihilate the bracket of g^({label}) over {sig}"),
                true,
                ext.generators_annihilate() && ext.generators_commute(),
            ));
            records.push(CheckRecord::new(
                format!("ext{sig}{label}:group"),
                format!("internal group elements preserve the bracket of g^({label}) over {sig}"),
                true,
                ext.group_preserves(),
            ));
            records.push(jacobi_record(
                format!("ext{sig}{label}:jacobi"),
                format!("graded Jacobi for g^({label}) over {sig}"),
                &ext.algebra,
            ));
        }
    }
    Ok(VerificationReport::new("extensions", records))
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let parts = match suite {
        Suite::Paper => vec![
            criterion_pair_table(cfg.table_max_n)?,
            criterion_refined_table(cfg.table_max_n)?,
            criterion_structure(cfg.structure_max_n)?,
            criterion_invariant_tables()?,
            criterion_complex(cfg.complex_max_m)?,
        ],
        Suite::Oracle => vec![criterion_oracle(cfg.oracle_max_n)?],
        Suite::Jacobi => vec![
            criterion_jacobi(cfg.jacobi_max_n, cfg.random_combinations, cfg.seed)?,
            criterion_extensions()?,
        ],
        Suite::Periodicity => vec![criterion_periodicity(
            cfg.periodicity_max_n,
            cfg.periodicity_max_base_44,
            cfg.symmetry_max_n,
        )?],
        Suite::All => {
            return Ok(VerificationReport::merge(
                "all",
                [
                    Suite::Paper,
                    Suite::Oracle,
                    Suite::Jacobi,
                    Suite::Periodicity,
                ]
                .iter()
                .map(|s| run_suite(*s, cfg))
                .collect::<Result<Vec<_>>>()?,
            ))
        }
    };
    Ok(VerificationReport::merge(suite.to_string(), parts))
}
