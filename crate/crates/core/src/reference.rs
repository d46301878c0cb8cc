//! Published values the computations are checked against.

use crate::clifford::{AdmName, Definite};
use crate::invariants::{FundamentalInvariants, Sign};

/// `b(s)`, `s = 1..=8`.
pub const B_OF_S: [usize; 8] = [4, 8, 4, 8, 4, 2, 1, 2];

/// Schur algebra `𝒞(s)`, `s = 1..=8`.
pub const SCHUR_OF_S: [&str; 8] = ["R(2)", "C(2)", "H", "H+H", "H", "C", "R", "R+R"];

/// `(t⁰(s), t(s))`: coarse types of `Cℓ⁰` and `Cℓ`, `s = 1..=8`.
pub const TYPE_OF_S: [(&str, &str); 8] = [
    ("R", "C"),
    ("C", "H"),
    ("H", "2H"),
    ("2H", "H"),
    ("H", "C"),
    ("C", "R"),
    ("R", "2R"),
    ("2R", "R"),
];

/// `(s, n, L⁺, L⁻)` for every filled cell of the pair table, rows `s = 5..−3`,
/// columns `n = −4..4`.
pub const PAIR_TABLE: &[(i64, i64, usize, usize)] = &[
    (5, -3, 1, 3),
    (5, -1, 1, 3),
    (5, 1, 3, 1),
    (5, 3, 3, 1),
    (4, -4, 4, 4),
    (4, -2, 2, 6),
    (4, 0, 4, 4),
    (4, 2, 6, 2),
    (4, 4, 4, 4),
    (3, -3, 1, 3),
    (3, -1, 1, 3),
    (3, 1, 3, 1),
    (3, 3, 3, 1),
    (2, -4, 4, 4),
    (2, -2, 2, 6),
    (2, 0, 4, 4),
    (2, 2, 6, 2),
    (2, 4, 4, 4),
    (1, -3, 1, 3),
    (1, -1, 1, 3),
    (1, 1, 3, 1),
    (1, 3, 3, 1),
    (0, -4, 1, 1),
    (0, -2, 0, 2),
    (0, 0, 1, 1),
    (0, 2, 2, 0),
    (0, 4, 1, 1),
    (-1, -3, 0, 1),
    (-1, -1, 0, 1),
    (-1, 1, 1, 0),
    (-1, 3, 1, 0),
    (-2, -4, 1, 1),
    (-2, -2, 0, 2),
    (-2, 0, 1, 1),
    (-2, 2, 2, 0),
    (-2, 4, 1, 1),
    (-3, -3, 1, 3),
    (-3, -1, 1, 3),
    (-3, 1, 3, 1),
    (-3, 3, 3, 1),
];

/// `(s, n, counts)` of the refined table, rows `s = 4..−3`, columns
/// `n = −3..4`; four counts `(L⁺⁺,L⁺⁻,L⁻⁺,L⁻⁻)` or two `(L⁺,L⁻)`.
pub const REFINED_TABLE: &[(i64, i64, &[usize])] = &[
    (4, -2, &[2, 0, 6, 0]),
    (4, 0, &[0, 4, 0, 4]),
    (4, 2, &[6, 0, 2, 0]),
    (4, 4, &[0, 4, 0, 4]),
    (3, -3, &[1, 3]),
    (3, -1, &[1, 3]),
    (3, 1, &[3, 1]),
    (3, 3, &[3, 1]),
    (2, -2, &[0, 2, 4, 2]),
    (2, 0, &[2, 2, 2, 2]),
    (2, 2, &[4, 2, 0, 2]),
    (2, 4, &[2, 2, 2, 2]),
    (1, -3, &[0, 1, 2, 1]),
    (1, -1, &[0, 1, 2, 1]),
    (1, 1, &[2, 1, 0, 1]),
    (1, 3, &[2, 1, 0, 1]),
    (0, -2, &[0, 0, 2, 0]),
    (0, 0, &[0, 1, 0, 1]),
    (0, 2, &[2, 0, 0, 0]),
    (0, 4, &[0, 1, 0, 1]),
    (-1, -3, &[0, 1]),
    (-1, -1, &[0, 1]),
    (-1, 1, &[1, 0]),
    (-1, 3, &[1, 0]),
    (-2, -2, &[0, 2]),
    (-2, 0, &[1, 1]),
    (-2, 2, &[2, 0]),
    (-2, 4, &[1, 1]),
    (-3, -3, &[1, 3]),
    (-3, -1, &[1, 3]),
    (-3, 1, &[3, 1]),
    (-3, 3, &[3, 1]),
];

/// Complex counts for `m = −3..4`.
pub const COMPLEX_TABLE: &[(i64, &[usize])] = &[
    (-3, &[0, 1]),
    (-2, &[0, 0, 2, 0]),
    (-1, &[0, 1]),
    (0, &[0, 1, 0, 1]),
    (1, &[1, 0]),
    (2, &[2, 0, 0, 0]),
    (3, &[1, 0]),
    (4, &[0, 1, 0, 1]),
];

/// `(τ,σ,ι)` of `f` and `f_E` on `S_{m,m}`, `m = 1..=4`.
pub const SPLIT_FORMS: [(&str, &str); 4] = [
    ("---", "++-"),
    ("--+", "+-+"),
    ("-+-", "+--"),
    ("-++", "+++"),
];

/// Subspace of `(S⊗S)*` containing the image of `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageClass {
    /// `∨²S`
    Sym,
    /// `∧²S`
    Skew,
    /// `∨²S⁺ + ∨²S⁻`
    SymDiagonal,
    /// `∧²S⁺ + ∧²S⁻`
    SkewDiagonal,
    /// `S⁺ ∨ S⁻`
    SymMixed,
    /// `S⁺ ∧ S⁻`
    SkewMixed,
}

impl ImageClass {
    /// `(σ(j), ι(j))`.
    pub fn invariants(self) -> (Sign, Option<Sign>) {
        use ImageClass::*;
        match self {
            Sym => (Sign::Plus, None),
            Skew => (Sign::Minus, None),
            SymDiagonal => (Sign::Plus, Some(Sign::Plus)),
            SkewDiagonal => (Sign::Minus, Some(Sign::Plus)),
            SymMixed => (Sign::Plus, Some(Sign::Minus)),
            SkewMixed => (Sign::Minus, Some(Sign::Minus)),
        }
    }
}

/// One admissible element as printed: invariants of the endomorphism, of
/// its form and the class of its equivariant map, whichever are given.
#[derive(Debug, Clone, Copy)]
pub struct ModelRow {
    pub name: AdmName,
    pub endo: Option<&'static str>,
    pub form: Option<&'static str>,
    pub image: Option<ImageClass>,
}

/// The printed data for a definite model `S_{k,0}` or `S_{0,k}` with
/// `k = 2m` or `2m+1`, `m` taken modulo 4.
#[derive(Debug, Clone, Copy)]
pub struct ModelTable {
    pub sign: Definite,
    pub odd: bool,
    pub m_mod4: usize,
    /// `false` when the printed image column cannot be matched row by row:
    /// for `S_{0,2m+1}`, `m ≡ 3`, the image table labels a row `j_J`, which
    /// is not in the basis, and its `I`/`Ĵ` entries contradict the printed
    /// invariants of `h_I`, `h_Ĵ`. Only the multiset of classes is compared.
    pub images_by_row: bool,
    pub rows: &'static [ModelRow],
}

impl ModelTable {
    /// Dimension `k` of the smallest representative with `m ≥ 1`.
    pub fn k(&self) -> usize {
        let m = if self.m_mod4 == 0 { 4 } else { self.m_mod4 };
        if self.odd {
            2 * m + 1
        } else {
            2 * m
        }
    }
}

const fn row(
    name: AdmName,
    endo: Option<&'static str>,
    form: Option<&'static str>,
    image: Option<ImageClass>,
) -> ModelRow {
    ModelRow {
        name,
        endo,
        form,
        image,
    }
}

use AdmName::*;
use ImageClass::*;

pub const MODEL_TABLES: &[ModelTable] = &[
    ModelTable {
        sign: Definite::Positive,
        odd: false,
        m_mod4: 0,
        images_by_row: true,
        rows: &[
            row(Id, Some("+++"), Some("-++"), Some(SkewMixed)),
            row(E, Some("-++"), Some("+++"), Some(SymMixed)),
        ],
    },
    ModelTable {
        sign: Definite::Positive,
        odd: false,
        m_mod4: 3,
        images_by_row: true,
        rows: &[
            row(Id, Some("++"), Some("-+"), Some(Skew)),
            row(J, Some("--"), Some("+-"), Some(Skew)),
        ],
    },
    ModelTable {
        sign: Definite::Positive,
        odd: false,
        m_mod4: 1,
        images_by_row: true,
        rows: &[
            row(Id, Some("+++"), Some("-++"), Some(SkewMixed)),
            row(I, Some("+-+"), Some("--+"), Some(SymMixed)),
            row(J, Some("+--"), Some("---"), Some(SymDiagonal)),
            row(K, Some("+--"), Some("---"), Some(SymDiagonal)),
            row(E, Some("-++"), Some("+++"), Some(SymMixed)),
            row(EI, Some("--+"), Some("+-+"), Some(SkewMixed)),
            row(EJ, Some("-+-"), Some("++-"), Some(SymDiagonal)),
            row(EK, Some("-+-"), Some("++-"), Some(SymDiagonal)),
        ],
    },
    ModelTable {
        sign: Definite::Positive,
        odd: false,
        m_mod4: 2,
        images_by_row: true,
        rows: &[
            row(Id, Some("+++"), Some("-++"), Some(SkewMixed)),
            row(I, Some("+-+"), Some("--+"), Some(SymMixed)),
            row(J, Some("--+"), Some("+-+"), Some(SkewMixed)),
            row(K, Some("--+"), Some("+-+"), Some(SkewMixed)),
            row(E, Some("-++"), Some("+++"), Some(SymMixed)),
            row(EI, Some("--+"), Some("+-+"), Some(SkewMixed)),
            row(EJ, Some("+-+"), Some("--+"), Some(SymMixed)),
            row(EK, Some("+-+"), Some("--+"), Some(SymMixed)),
        ],
    },
    ModelTable {
        sign: Definite::Positive,
        odd: true,
        m_mod4: 1,
        images_by_row: true,
        rows: &[
            row(Id, None, None, Some(Skew)),
            row(I, None, None, Some(Sym)),
            row(J, None, None, Some(Sym)),
            row(K, None, None, Some(Sym)),
        ],
    },
    ModelTable {
        sign: Definite::Positive,
        odd: true,
        m_mod4: 2,
        images_by_row: true,
        rows: &[
            row(Id, None, None, Some(Skew)),
            row(I, None, None, Some(Sym)),
            row(J, None, None, Some(Skew)),
            row(K, None, None, Some(Skew)),
        ],
    },
    ModelTable {
        sign: Definite::Positive,
        odd: true,
        m_mod4: 3,
        images_by_row: true,
        rows: &[row(Id, None, None, Some(Skew))],
    },
    ModelTable {
        sign: Definite::Positive,
        odd: true,
        m_mod4: 0,
        images_by_row: true,
        rows: &[
            row(Id, None, None, Some(SkewMixed)),
            row(I, None, None, Some(SymDiagonal)),
            row(J, None, None, Some(SymMixed)),
            row(K, None, None, Some(SymDiagonal)),
        ],
    },
    ModelTable {
        sign: Definite::Negative,
        odd: false,
        m_mod4: 0,
        images_by_row: true,
        rows: &[
            row(Id, Some("+++"), Some("+++"), Some(SymMixed)),
            row(E, Some("-++"), Some("-++"), Some(SkewMixed)),
        ],
    },
    ModelTable {
        sign: Definite::Negative,
        odd: false,
        m_mod4: 1,
        images_by_row: true,
        rows: &[
            row(Id, Some("++"), Some("++"), Some(Sym)),
            row(J, Some("--"), Some("--"), Some(Sym)),
        ],
    },
    ModelTable {
        sign: Definite::Negative,
        odd: false,
        m_mod4: 2,
        images_by_row: true,
        rows: &[
            row(Id, Some("+++"), Some("+++"), Some(SymMixed)),
            row(I, Some("+-+"), Some("+-+"), Some(SkewMixed)),
            row(J, Some("--+"), Some("--+"), Some(SymMixed)),
            row(K, Some("--+"), Some("--+"), Some(SymMixed)),
            row(E, Some("-++"), Some("-++"), Some(SkewMixed)),
            row(EI, Some("--+"), Some("--+"), Some(SymMixed)),
            row(EJ, Some("+-+"), Some("+-+"), Some(SkewMixed)),
            row(EK, Some("+-+"), Some("+-+"), Some(SkewMixed)),
        ],
    },
    ModelTable {
        sign: Definite::Negative,
        odd: false,
        m_mod4: 3,
        images_by_row: true,
        rows: &[
            row(Id, Some("+++"), Some("+++"), Some(SymMixed)),
            row(I, Some("+-+"), Some("+-+"), Some(SkewMixed)),
            row(J, Some("+--"), Some("+--"), Some(SkewDiagonal)),
            row(K, Some("+--"), Some("+--"), Some(SkewDiagonal)),
            row(E, Some("-++"), Some("-++"), Some(SkewMixed)),
            row(EI, Some("--+"), Some("--+"), Some(SymMixed)),
            row(EJ, Some("-+-"), Some("-+-"), Some(SkewDiagonal)),
            row(EK, Some("-+-"), Some("-+-"), Some(SkewDiagonal)),
        ],
    },
    ModelTable {
        sign: Definite::Negative,
        odd: true,
        m_mod4: 0,
        images_by_row: true,
        rows: &[row(Id, None, None, Some(Sym))],
    },
    ModelTable {
        sign: Definite::Negative,
        odd: true,
        m_mod4: 1,
        images_by_row: true,
        rows: &[
            row(Id, Some("++"), Some("++"), Some(Sym)),
            row(I, Some("+-"), Some("+-"), Some(Skew)),
            row(JHat, Some("--"), Some("--"), Some(Sym)),
            row(KHat, Some("--"), Some("--"), Some(Sym)),
        ],
    },
    ModelTable {
        sign: Definite::Negative,
        odd: true,
        m_mod4: 2,
        images_by_row: true,
        rows: &[
            row(Id, Some("++"), Some("++"), Some(Sym)),
            row(I, Some("+-"), Some("+-"), Some(Skew)),
            row(JHat, Some("+-"), Some("+-"), Some(Skew)),
            row(KHat, Some("+-"), Some("+-"), Some(Skew)),
        ],
    },
    ModelTable {
        sign: Definite::Negative,
        odd: true,
        m_mod4: 3,
        images_by_row: false,
        rows: &[
            row(Id, Some("+++"), Some("+++"), Some(SymMixed)),
            row(I, Some("+--"), Some("+--"), Some(SkewMixed)),
            row(JHat, Some("-++"), Some("-++"), Some(SkewDiagonal)),
            row(KHat, Some("-+-"), Some("-+-"), Some(SkewDiagonal)),
        ],
    },
];

/// Split-signature image classes of `j(f)` and `j(f_E)`, `m = 1..=4`.
pub const SPLIT_IMAGES: [(ImageClass, ImageClass); 4] = [
    (SymDiagonal, SymDiagonal),
    (SymMixed, SkewMixed),
    (SkewDiagonal, SkewDiagonal),
    (SkewMixed, SymMixed),
];

pub fn parse_invariants(s: &str) -> FundamentalInvariants {
    FundamentalInvariants::parse(s).expect("reference invariants are well formed")
}

/// Value at `s mod 8` of a table indexed by `s = 1..=8`.
pub fn at_s<T: Copy>(table: &[T; 8], s: i64) -> T {
    let r = s.rem_euclid(8) as usize;
    table[if r == 0 { 7 } else { r - 1 }]
}
